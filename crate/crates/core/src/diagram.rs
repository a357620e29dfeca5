//! Combinatorial encoding of a 3-colored knot diagram with one or two
//! auxiliary curves, its JSON form, and structural validation.
//!
//! Arc `i` of a list ends at the crossing recorded at position `i`; arc
//! `i + 1` (mod length) starts there. `over_nums[i]` names the overstrand of
//! that crossing: an arc of the knot for [`OverKind::Knot`], an arc of the
//! first curve (gamma) for [`OverKind::Pseudo`].

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::lifts::{self, Cell};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(u8);

impl Color {
    pub const ALL: [Color; 3] = [Color(1), Color(2), Color(3)];

    pub fn new(v: i64) -> Option<Color> {
        (1..=3).contains(&v).then_some(Color(v as u8))
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CrossingSign {
    Positive,
    Negative,
}

impl CrossingSign {
    pub fn new(v: i64) -> Option<CrossingSign> {
        match v {
            1 => Some(CrossingSign::Positive),
            -1 => Some(CrossingSign::Negative),
            _ => None,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            CrossingSign::Positive => 1,
            CrossingSign::Negative => -1,
        }
    }

    pub fn flipped(self) -> CrossingSign {
        match self {
            CrossingSign::Positive => CrossingSign::Negative,
            CrossingSign::Negative => CrossingSign::Positive,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum OverKind {
    /// The overstrand is an arc of the knot.
    Knot,
    /// The overstrand is an arc of the first auxiliary curve.
    Pseudo,
}

impl OverKind {
    pub fn tag(self) -> &'static str {
        match self {
            OverKind::Knot => "k",
            OverKind::Pseudo => "p",
        }
    }

    pub fn from_tag(tag: &str) -> Option<OverKind> {
        match tag {
            "k" => Some(OverKind::Knot),
            "p" => Some(OverKind::Pseudo),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotPresentation {
    pub colors: Vec<Color>,
    pub over_nums: Vec<usize>,
    pub over_kinds: Vec<OverKind>,
    pub signs: Vec<CrossingSign>,
}

impl KnotPresentation {
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color of the overstrand at the head of arc `i`. Only meaningful for
    /// Knot crossings.
    pub fn over_color(&self, i: usize) -> Color {
        self.colors[self.over_nums[i]]
    }

    /// Number of entries whose overstrand is a knot arc.
    pub fn knot_crossings(&self) -> usize {
        self.over_kinds
            .iter()
            .filter(|&&k| k == OverKind::Knot)
            .count()
    }

    /// Signed count of knot undercrossings below gamma: lk(gamma, knot).
    pub fn planar_linking(&self) -> i64 {
        planar_linking(&self.over_kinds, &self.signs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePresentation {
    pub over_nums: Vec<usize>,
    pub over_kinds: Vec<OverKind>,
    pub signs: Vec<CrossingSign>,
}

impl CurvePresentation {
    pub fn len(&self) -> usize {
        self.over_nums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.over_nums.is_empty()
    }

    /// Signed count of Pseudo entries. For the delta list this is
    /// lk(gamma, delta).
    pub fn planar_linking(&self) -> i64 {
        planar_linking(&self.over_kinds, &self.signs)
    }

    /// Signed count of Knot entries: lk(curve, knot) read off this list.
    pub fn knot_linking(&self) -> i64 {
        self.over_kinds
            .iter()
            .zip(&self.signs)
            .filter(|(k, _)| **k == OverKind::Knot)
            .map(|(_, s)| s.value() as i64)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scene {
    pub knot: KnotPresentation,
    pub gamma: CurvePresentation,
    pub delta: Option<CurvePresentation>,
}

/// Sum of signs over the Pseudo entries of a list.
pub fn planar_linking(kinds: &[OverKind], signs: &[CrossingSign]) -> i64 {
    kinds
        .iter()
        .zip(signs)
        .filter(|(k, _)| **k == OverKind::Pseudo)
        .map(|(_, s)| s.value() as i64)
        .sum()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: missing required field")]
    Missing { path: String },
    #[error("{path}: unknown field")]
    UnknownField { path: String },
    #[error("{path}: expected {expected}, found {found}")]
    Type {
        path: String,
        expected: &'static str,
        found: String,
    },
    #[error("{path}: unknown kind tag {tag:?} (expected \"k\" or \"p\")")]
    KindTag { path: String, tag: String },
}

fn describe(v: &Value) -> String {
    match v {
        Value::String(s) => format!("{s:?}"),
        other => other.to_string(),
    }
}

fn type_error(path: String, expected: &'static str, v: &Value) -> ParseError {
    ParseError::Type {
        path,
        expected,
        found: describe(v),
    }
}

fn object<'a>(
    v: &'a Value,
    path: &str,
    allowed: &[&str],
) -> Result<&'a Map<String, Value>, ParseError> {
    let map = v
        .as_object()
        .ok_or_else(|| type_error(path.to_string(), "an object", v))?;
    if let Some(key) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(ParseError::UnknownField {
            path: join(path, key),
        });
    }
    Ok(map)
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn array<'a, T>(
    map: &'a Map<String, Value>,
    path: &str,
    key: &str,
    item: impl Fn(&'a Value, String) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    let p = join(path, key);
    let v = map
        .get(key)
        .ok_or_else(|| ParseError::Missing { path: p.clone() })?;
    let arr = v
        .as_array()
        .ok_or_else(|| type_error(p.clone(), "an array", v))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| item(x, format!("{p}[{i}]")))
        .collect()
}

fn color(v: &Value, path: String) -> Result<Color, ParseError> {
    v.as_i64()
        .and_then(Color::new)
        .ok_or_else(|| type_error(path, "a color 1, 2 or 3", v))
}

fn index(v: &Value, path: String) -> Result<usize, ParseError> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| type_error(path, "a nonnegative integer index", v))
}

fn kind(v: &Value, path: String) -> Result<OverKind, ParseError> {
    let tag = v
        .as_str()
        .ok_or_else(|| type_error(path.clone(), "a kind tag string", v))?;
    OverKind::from_tag(tag).ok_or_else(|| ParseError::KindTag {
        path,
        tag: tag.to_string(),
    })
}

fn sign(v: &Value, path: String) -> Result<CrossingSign, ParseError> {
    v.as_i64()
        .and_then(CrossingSign::new)
        .ok_or_else(|| type_error(path, "a sign 1 or -1", v))
}

fn parse_curve(v: &Value, path: &str) -> Result<CurvePresentation, ParseError> {
    let map = object(v, path, &["overnums", "overtypes", "signs"])?;
    Ok(CurvePresentation {
        over_nums: array(map, path, "overnums", index)?,
        over_kinds: array(map, path, "overtypes", kind)?,
        signs: array(map, path, "signs", sign)?,
    })
}

/// Parses a scene document. Nothing beyond the value types is checked; see
/// [`validate_scene`].
pub fn parse_scene(text: &str) -> Result<Scene, ParseError> {
    let root: Value = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let top = object(&root, "", &["knot", "gamma", "delta"])?;
    let knot_v = top.get("knot").ok_or_else(|| ParseError::Missing {
        path: "knot".into(),
    })?;
    let km = object(
        knot_v,
        "knot",
        &["colors", "overnums", "overtypes", "signs"],
    )?;
    let knot = KnotPresentation {
        colors: array(km, "knot", "colors", color)?,
        over_nums: array(km, "knot", "overnums", index)?,
        over_kinds: array(km, "knot", "overtypes", kind)?,
        signs: array(km, "knot", "signs", sign)?,
    };
    let gamma_v = top.get("gamma").ok_or_else(|| ParseError::Missing {
        path: "gamma".into(),
    })?;
    let gamma = parse_curve(gamma_v, "gamma")?;
    let delta = match top.get("delta") {
        None | Some(Value::Null) => None,
        Some(v) => Some(parse_curve(v, "delta")?),
    };
    Ok(Scene { knot, gamma, delta })
}

fn list<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    let parts: Vec<String> = items.iter().map(f).collect();
    format!("[{}]", parts.join(", "))
}

fn curve_json(out: &mut String, name: &str, c: &CurvePresentation) {
    out.push_str(&format!("  \"{name}\": {{\n"));
    out.push_str(&format!(
        "    \"overnums\": {},\n",
        list(&c.over_nums, |n| n.to_string())
    ));
    out.push_str(&format!(
        "    \"overtypes\": {},\n",
        list(&c.over_kinds, |k| format!("\"{}\"", k.tag()))
    ));
    out.push_str(&format!(
        "    \"signs\": {}\n",
        list(&c.signs, |s| s.value().to_string())
    ));
    out.push_str("  }");
}

/// Serializes a scene in the input format, one array per line.
pub fn to_json(scene: &Scene) -> String {
    let k = &scene.knot;
    let mut out = String::from("{\n  \"knot\": {\n");
    out.push_str(&format!(
        "    \"colors\": {},\n",
        list(&k.colors, |c| c.to_string())
    ));
    out.push_str(&format!(
        "    \"overnums\": {},\n",
        list(&k.over_nums, |n| n.to_string())
    ));
    out.push_str(&format!(
        "    \"overtypes\": {},\n",
        list(&k.over_kinds, |t| format!("\"{}\"", t.tag()))
    ));
    out.push_str(&format!(
        "    \"signs\": {}\n",
        list(&k.signs, |s| s.value().to_string())
    ));
    out.push_str("  },\n");
    curve_json(&mut out, "gamma", &scene.gamma);
    if let Some(d) = &scene.delta {
        out.push_str(",\n");
        curve_json(&mut out, "delta", d);
    }
    out.push_str("\n}\n");
    out
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Block {
    Knot,
    Gamma,
    Delta,
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Block::Knot => "knot",
            Block::Gamma => "gamma",
            Block::Delta => "delta",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyList {
        block: Block,
    },
    LengthMismatch {
        block: Block,
        field: &'static str,
        expected: usize,
        found: usize,
    },
    OverNumOutOfRange {
        block: Block,
        index: usize,
        over_num: usize,
        kind: OverKind,
        limit: usize,
    },
    /// A knot crossing whose three arcs are neither one color nor three.
    NonDihedral {
        index: usize,
        under_in: Color,
        under_out: Color,
        over: Color,
    },
    /// The knot changes color passing under gamma.
    PseudoColorChange {
        index: usize,
        before: Color,
        after: Color,
    },
    NotSurjective {
        used: Vec<Color>,
    },
    OddParity {
        knot_crossings: usize,
    },
    PlacementNotClosed {
        start: Cell,
        end: Cell,
    },
}

impl Violation {
    /// Short stable name used in reports and tests.
    pub fn name(&self) -> &'static str {
        match self {
            Violation::EmptyList { .. } => "empty-list",
            Violation::LengthMismatch { .. } => "length-mismatch",
            Violation::OverNumOutOfRange { .. } => "out-of-range",
            Violation::NonDihedral { .. } => "non-dihedral",
            Violation::PseudoColorChange { .. } => "pseudo-color-change",
            Violation::NotSurjective { .. } => "surjectivity",
            Violation::OddParity { .. } => "parity",
            Violation::PlacementNotClosed { .. } => "placement-closure",
        }
    }

    /// Structural violations make the downstream computations meaningless
    /// or impossible; coloring violations do not.
    pub fn is_structural(&self) -> bool {
        !matches!(
            self,
            Violation::NonDihedral { .. }
                | Violation::PseudoColorChange { .. }
                | Violation::NotSurjective { .. }
        )
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.name())?;
        match self {
            Violation::EmptyList { block } => write!(f, "{block} has no arcs"),
            Violation::LengthMismatch {
                block,
                field,
                expected,
                found,
            } => write!(f, "{block}.{field} has length {found}, expected {expected}"),
            Violation::OverNumOutOfRange {
                block,
                index,
                over_num,
                kind,
                limit,
            } => write!(
                f,
                "{block} entry {index}: overnum {over_num} of kind {} must be below {limit}",
                kind.tag()
            ),
            Violation::NonDihedral {
                index,
                under_in,
                under_out,
                over,
            } => write!(
                f,
                "knot crossing {index}: colors {under_in}, {under_out} under {over} are neither one color nor three"
            ),
            Violation::PseudoColorChange { index, before, after } => write!(
                f,
                "knot crossing {index} under gamma changes color {before} -> {after}"
            ),
            Violation::NotSurjective { used } => {
                let used: Vec<String> = used.iter().map(Color::to_string).collect();
                write!(f, "knot uses only colors {{{}}}", used.join(", "))
            }
            Violation::OddParity { knot_crossings } => {
                write!(f, "knot has {knot_crossings} self-crossings, expected an even count")
            }
            Violation::PlacementNotClosed { start, end } => write!(
                f,
                "A2 placement starts in sheet {start} but returns in sheet {end}"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn structural(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| v.is_structural())
    }

    pub fn has(&self, name: &str) -> bool {
        self.violations.iter().any(|v| v.name() == name)
    }
}

fn check_lengths(
    block: Block,
    len: usize,
    fields: &[(&'static str, usize)],
    out: &mut Vec<Violation>,
) -> bool {
    if len == 0 {
        out.push(Violation::EmptyList { block });
        return false;
    }
    let mut ok = true;
    for &(field, found) in fields {
        if found != len {
            out.push(Violation::LengthMismatch {
                block,
                field,
                expected: len,
                found,
            });
            ok = false;
        }
    }
    ok
}

fn check_ranges(
    block: Block,
    nums: &[usize],
    kinds: &[OverKind],
    knot_len: usize,
    gamma_len: usize,
    out: &mut Vec<Violation>,
) -> bool {
    let mut ok = true;
    for (i, (&n, &k)) in nums.iter().zip(kinds).enumerate() {
        let limit = match k {
            OverKind::Knot => knot_len,
            OverKind::Pseudo => gamma_len,
        };
        if n >= limit {
            out.push(Violation::OverNumOutOfRange {
                block,
                index: i,
                over_num: n,
                kind: k,
                limit,
            });
            ok = false;
        }
    }
    ok
}

/// Reports every invariant violation; an empty report means valid.
pub fn validate_scene(scene: &Scene) -> ValidationReport {
    let mut v = Vec::new();
    let k = &scene.knot;
    let m = k.colors.len();
    let knot_shape = check_lengths(
        Block::Knot,
        m,
        &[
            ("overnums", k.over_nums.len()),
            ("overtypes", k.over_kinds.len()),
            ("signs", k.signs.len()),
        ],
        &mut v,
    );
    let g = &scene.gamma;
    let s = g.over_nums.len();
    let gamma_shape = check_lengths(
        Block::Gamma,
        s,
        &[("overtypes", g.over_kinds.len()), ("signs", g.signs.len())],
        &mut v,
    );
    let knot_ok =
        knot_shape && check_ranges(Block::Knot, &k.over_nums, &k.over_kinds, m, s, &mut v);
    if gamma_shape {
        check_ranges(Block::Gamma, &g.over_nums, &g.over_kinds, m, s, &mut v);
    }
    if let Some(d) = &scene.delta {
        if check_lengths(
            Block::Delta,
            d.over_nums.len(),
            &[("overtypes", d.over_kinds.len()), ("signs", d.signs.len())],
            &mut v,
        ) {
            check_ranges(Block::Delta, &d.over_nums, &d.over_kinds, m, s, &mut v);
        }
    }

    if !knot_ok {
        return ValidationReport { violations: v };
    }

    for i in 0..m {
        let before = k.colors[i];
        let after = k.colors[(i + 1) % m];
        match k.over_kinds[i] {
            OverKind::Knot => {
                let over = k.over_color(i);
                let distinct: BTreeSet<Color> = [before, after, over].into_iter().collect();
                if distinct.len() == 2 {
                    v.push(Violation::NonDihedral {
                        index: i,
                        under_in: before,
                        under_out: after,
                        over,
                    });
                }
            }
            OverKind::Pseudo => {
                if before != after {
                    v.push(Violation::PseudoColorChange {
                        index: i,
                        before,
                        after,
                    });
                }
            }
        }
    }
    let used: BTreeSet<Color> = k.colors.iter().copied().collect();
    if used.len() < 3 {
        v.push(Violation::NotSurjective {
            used: used.into_iter().collect(),
        });
    }
    let knot_crossings = k.knot_crossings();
    if knot_crossings % 2 == 1 {
        v.push(Violation::OddParity { knot_crossings });
    }
    if let Err(e) = lifts::a2_placement(k) {
        v.push(Violation::PlacementNotClosed {
            start: e.start,
            end: e.end,
        });
    }
    ValidationReport { violations: v }
}
