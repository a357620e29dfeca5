//! Sheets of the 3-fold cover, lift tracing, the A2 placement `w`, and the
//! crossing sign functions eps1 through eps7.

use std::fmt;

use thiserror::Error;

use crate::diagram::{Color, CurvePresentation, KnotPresentation, OverKind};

/// Label of one of the three 3-cells (sheets) of the cover.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell(u8);

impl Cell {
    pub const ALL: [Cell; 3] = [Cell(1), Cell(2), Cell(3)];

    pub fn new(v: i64) -> Option<Cell> {
        (1..=3).contains(&v).then_some(Cell(v as u8))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Zero-based position, for indexing per-sheet arrays.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    /// The sheet that is neither `a` nor `b` (which must differ).
    fn third(a: u8, b: u8) -> Cell {
        debug_assert_ne!(a, b);
        Cell(6 - a - b)
    }
}

impl From<Color> for Cell {
    fn from(c: Color) -> Cell {
        Cell(c.value())
    }
}

impl PartialEq<Color> for Cell {
    fn eq(&self, other: &Color) -> bool {
        self.0 == other.value()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Sheet reached after passing under a wall of color `wall`.
pub fn wall_color_change(old: Cell, wall: Color) -> Cell {
    if old == wall {
        old
    } else {
        Cell::third(old.0, wall.value())
    }
}

/// A permutation of the three sheets.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation([Cell; 3]);

impl Permutation {
    pub fn identity() -> Self {
        Permutation(Cell::ALL)
    }

    /// Builds a permutation from the images of 1, 2, 3. Returns `None` if
    /// they are not distinct.
    pub fn from_images(images: [Cell; 3]) -> Option<Self> {
        let distinct = images[0] != images[1] && images[1] != images[2] && images[0] != images[2];
        distinct.then_some(Permutation(images))
    }

    /// The transposition fixing the wall color.
    pub fn wall(wall: Color) -> Self {
        Permutation(Cell::ALL.map(|c| wall_color_change(c, wall)))
    }

    pub fn apply(&self, c: Cell) -> Cell {
        self.0[c.index()]
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation(self.0.map(|c| next.apply(c)))
    }

    pub fn is_identity(&self) -> bool {
        self.0 == Cell::ALL
    }

    /// All cycles including fixed points, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<Cell>> {
        let mut seen = [false; 3];
        let mut out = Vec::new();
        for start in Cell::ALL {
            if seen[start.index()] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut c = start;
            while !seen[c.index()] {
                seen[c.index()] = true;
                cycle.push(c);
                c = self.apply(c);
            }
            out.push(cycle);
        }
        out
    }
}

/// Cycle notation with fixed points omitted; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moving: Vec<Vec<Cell>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if moving.is_empty() {
            return f.write_str("()");
        }
        f.write_str(&format_cycles(&moving).replace(") (", ")("))
    }
}

/// Formats a partition of the sheets, e.g. `(1) (2 3)`.
pub fn format_cycles(cycles: &[Vec<Cell>]) -> String {
    cycles
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(Cell::to_string).collect();
            format!("({})", inner.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// The three path-lifts of a curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftTrace {
    /// `cells[j - 1][i]`: sheet holding arc `i` on the lift starting in sheet `j`.
    pub cells: [Vec<Cell>; 3],
    pub monodromy: Permutation,
    /// Cycles of the monodromy; each is one closed lift.
    pub closure: Vec<Vec<Cell>>,
}

impl LiftTrace {
    pub fn cell(&self, lift: Cell, arc: usize) -> Cell {
        self.cells[lift.index()][arc]
    }

    pub fn lift(&self, lift: Cell) -> &[Cell] {
        &self.cells[lift.index()]
    }

    pub fn len(&self) -> usize {
        self.cells[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells[0].is_empty()
    }
}

/// Traces the lifts of `curve`. Only Knot overstrands change sheets.
///
/// Panics if a Knot overnum is out of range for `knot`.
pub fn trace_lifts(curve: &CurvePresentation, knot: &KnotPresentation) -> LiftTrace {
    let walls: Vec<Permutation> = curve
        .over_kinds
        .iter()
        .zip(&curve.over_nums)
        .map(|(k, &f)| match k {
            OverKind::Knot => Permutation::wall(knot.colors[f]),
            OverKind::Pseudo => Permutation::identity(),
        })
        .collect();
    let cells = Cell::ALL.map(|start| {
        let mut c = start;
        walls
            .iter()
            .map(|p| {
                let here = c;
                c = p.apply(c);
                here
            })
            .collect()
    });
    let monodromy = walls
        .iter()
        .fold(Permutation::identity(), |acc, p| acc.then(p));
    LiftTrace {
        cells,
        monodromy,
        closure: monodromy.cycles(),
    }
}

/// Which of the two non-branch sheets seeds the placement at arc 0.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum PlacementSeed {
    /// The smaller element of `{1,2,3} \ {c(0)}`.
    #[default]
    Smallest,
    /// The larger one.
    Largest,
}

impl PlacementSeed {
    pub fn flipped(self) -> Self {
        match self {
            PlacementSeed::Smallest => PlacementSeed::Largest,
            PlacementSeed::Largest => PlacementSeed::Smallest,
        }
    }
}

/// `w[i]`: the sheet holding the 2-cell `A_{2,i}` below arc `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2Placement {
    pub w: Vec<Cell>,
    pub seed: PlacementSeed,
}

impl A2Placement {
    pub fn get(&self, i: usize) -> Cell {
        self.w[i]
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("A2 placement is inconsistent: starts in sheet {start}, returns in sheet {end}")]
pub struct PlacementError {
    pub start: Cell,
    pub end: Cell,
}

pub fn a2_placement(knot: &KnotPresentation) -> Result<A2Placement, PlacementError> {
    a2_placement_seeded(knot, PlacementSeed::Smallest)
}

/// Propagates the placement along the knot and checks that it closes up.
///
/// Panics on an empty knot or an out-of-range Knot overnum.
pub fn a2_placement_seeded(
    knot: &KnotPresentation,
    seed: PlacementSeed,
) -> Result<A2Placement, PlacementError> {
    let m = knot.len();
    let c0 = knot.colors[0].value();
    let options: Vec<Cell> = Cell::ALL.into_iter().filter(|c| c.0 != c0).collect();
    let start = match seed {
        PlacementSeed::Smallest => options[0],
        PlacementSeed::Largest => options[1],
    };
    let step = |w: Cell, i: usize| match knot.over_kinds[i] {
        OverKind::Knot => wall_color_change(w, knot.over_color(i)),
        OverKind::Pseudo => w,
    };
    let mut w = Vec::with_capacity(m);
    w.push(start);
    for i in 0..m - 1 {
        let next = step(w[i], i);
        w.push(next);
    }
    let end = step(w[m - 1], m - 1);
    if end != start {
        return Err(PlacementError { start, end });
    }
    Ok(A2Placement { w, seed })
}

/// Position of a lift cell relative to the 2-cells hanging below an arc.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SheetClass {
    /// The index-1 sheet, `l = c`.
    Branch,
    /// The sheet holding `A_2`, `l = w`.
    A2,
    /// The remaining sheet, holding `A_3`.
    A3,
}

pub fn classify(l: Cell, c: Color, w: Cell) -> SheetClass {
    if l == c {
        SheetClass::Branch
    } else if l == w {
        SheetClass::A2
    } else {
        SheetClass::A3
    }
}

/// eps1: +1 if `c(i) != w(f(i))`.
pub fn eps1_from(c_i: Color, w_f: Cell) -> i32 {
    if w_f == c_i {
        -1
    } else {
        1
    }
}

/// eps2: +1 if `c(f(i)) = w(i)`.
pub fn eps2_from(c_f: Color, w_i: Cell) -> i32 {
    if w_i == c_f {
        1
    } else {
        -1
    }
}

/// eps3: +1 if `w(i) != w(f(i))`.
pub fn eps3_from(w_i: Cell, w_f: Cell) -> i32 {
    if w_i != w_f {
        1
    } else {
        -1
    }
}

/// eps4: -1 on the A2 sheet, 0 on the branch sheet, +1 otherwise.
pub fn eps4_from(l: Cell, c: Color, w: Cell) -> i32 {
    match classify(l, c, w) {
        SheetClass::A2 => -1,
        SheetClass::Branch => 0,
        SheetClass::A3 => 1,
    }
}

/// eps5: +1 on the A2 sheet, 0 on the branch sheet, -1 otherwise.
pub fn eps5_from(l: Cell, c: Color, w: Cell) -> i32 {
    -eps4_from(l, c, w)
}

/// eps7: like eps5 but +1 on the branch sheet.
pub fn eps7_from(l: Cell, c: Color, w: Cell) -> i32 {
    match classify(l, c, w) {
        SheetClass::A3 => -1,
        _ => 1,
    }
}

/// eps6: 1 when the two cells agree.
pub fn eps6_from(l_delta: Cell, l_gamma: Cell) -> i32 {
    i32::from(l_delta == l_gamma)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CrossingClass {
    /// Knot under knot, two colors differ.
    Inhomogeneous,
    /// Knot under knot, one color.
    Homogeneous,
    /// An undercrossing below gamma.
    UnderGamma,
    /// An undercrossing below the knot.
    UnderKnot,
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("crossing {index} is {found:?}, expected {expected:?}")]
pub struct CrossingClassError {
    pub index: usize,
    pub expected: CrossingClass,
    pub found: CrossingClass,
}

/// Sign functions on a knot with a fixed placement.
#[derive(Copy, Clone, Debug)]
pub struct Signs<'a> {
    pub knot: &'a KnotPresentation,
    pub placement: &'a A2Placement,
}

impl<'a> Signs<'a> {
    pub fn new(knot: &'a KnotPresentation, placement: &'a A2Placement) -> Self {
        Signs { knot, placement }
    }

    pub fn class(&self, i: usize) -> CrossingClass {
        match self.knot.over_kinds[i] {
            OverKind::Pseudo => CrossingClass::UnderGamma,
            OverKind::Knot if self.knot.colors[i] == self.knot.over_color(i) => {
                CrossingClass::Homogeneous
            }
            OverKind::Knot => CrossingClass::Inhomogeneous,
        }
    }

    fn expect(&self, i: usize, expected: CrossingClass) -> Result<(), CrossingClassError> {
        let found = self.class(i);
        if found == expected {
            Ok(())
        } else {
            Err(CrossingClassError {
                index: i,
                expected,
                found,
            })
        }
    }

    pub fn eps1(&self, i: usize) -> Result<i32, CrossingClassError> {
        self.expect(i, CrossingClass::Inhomogeneous)?;
        Ok(eps1_from(
            self.knot.colors[i],
            self.placement.get(self.knot.over_nums[i]),
        ))
    }

    pub fn eps2(&self, i: usize) -> Result<i32, CrossingClassError> {
        self.expect(i, CrossingClass::Inhomogeneous)?;
        Ok(eps2_from(self.knot.over_color(i), self.placement.get(i)))
    }

    pub fn eps3(&self, i: usize) -> Result<i32, CrossingClassError> {
        self.expect(i, CrossingClass::Homogeneous)?;
        Ok(eps3_from(
            self.placement.get(i),
            self.placement.get(self.knot.over_nums[i]),
        ))
    }

    /// Knot crossing `i` under gamma, against gamma's lift `j`.
    pub fn eps4(&self, gamma: &LiftTrace, j: Cell, i: usize) -> Result<i32, CrossingClassError> {
        self.expect(i, CrossingClass::UnderGamma)?;
        let l = gamma.cell(j, self.knot.over_nums[i]);
        Ok(eps4_from(l, self.knot.colors[i], self.placement.get(i)))
    }

    fn under_knot(
        &self,
        curve: &CurvePresentation,
        i: usize,
    ) -> Result<(Color, Cell), CrossingClassError> {
        if curve.over_kinds[i] != OverKind::Knot {
            return Err(CrossingClassError {
                index: i,
                expected: CrossingClass::UnderKnot,
                found: CrossingClass::UnderGamma,
            });
        }
        let f = curve.over_nums[i];
        Ok((self.knot.colors[f], self.placement.get(f)))
    }

    /// Crossing `i` of `curve` under the knot, against the curve's lift `k`.
    /// Compares with the color and placement of the overstrand.
    pub fn eps5(
        &self,
        curve: &CurvePresentation,
        trace: &LiftTrace,
        k: Cell,
        i: usize,
    ) -> Result<i32, CrossingClassError> {
        let (c, w) = self.under_knot(curve, i)?;
        Ok(eps5_from(trace.cell(k, i), c, w))
    }

    pub fn eps7(
        &self,
        curve: &CurvePresentation,
        trace: &LiftTrace,
        k: Cell,
        i: usize,
    ) -> Result<i32, CrossingClassError> {
        let (c, w) = self.under_knot(curve, i)?;
        Ok(eps7_from(trace.cell(k, i), c, w))
    }
}

/// Delta crossing `i` under gamma: lift `k` of delta against lift `j` of gamma.
pub fn eps6(
    gamma: &LiftTrace,
    delta: &CurvePresentation,
    delta_trace: &LiftTrace,
    j: Cell,
    k: Cell,
    i: usize,
) -> Result<i32, CrossingClassError> {
    if delta.over_kinds[i] != OverKind::Pseudo {
        return Err(CrossingClassError {
            index: i,
            expected: CrossingClass::UnderGamma,
            found: CrossingClass::UnderKnot,
        });
    }
    Ok(eps6_from(
        delta_trace.cell(k, i),
        gamma.cell(j, delta.over_nums[i]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::CrossingSign;

    fn cell(v: i64) -> Cell {
        Cell::new(v).unwrap()
    }
    fn color(v: i64) -> Color {
        Color::new(v).unwrap()
    }
    fn cells(v: &[i64]) -> Vec<Cell> {
        v.iter().map(|&x| cell(x)).collect()
    }

    fn kinds(s: &str) -> Vec<OverKind> {
        s.chars()
            .map(|c| OverKind::from_tag(&c.to_string()).unwrap())
            .collect()
    }

    fn signs(v: &[i64]) -> Vec<CrossingSign> {
        v.iter().map(|&x| CrossingSign::new(x).unwrap()).collect()
    }

    fn part1_knot() -> KnotPresentation {
        KnotPresentation {
            colors: [1, 1, 3, 2, 1, 1, 3, 3, 2, 2, 2, 2, 3, 3]
                .iter()
                .map(|&c| color(c))
                .collect(),
            over_nums: vec![7, 0, 12, 7, 6, 10, 3, 5, 6, 3, 2, 0, 0, 3],
            over_kinds: kinds("ppkkpkpkpppkpk"),
            signs: signs(&[-1, -1, 1, 1, -1, 1, -1, 1, 1, 1, 1, 1, 1, 1]),
        }
    }

    fn curve(nums: &[usize], k: &str, s: &[i64]) -> CurvePresentation {
        CurvePresentation {
            over_nums: nums.to_vec(),
            over_kinds: kinds(k),
            signs: signs(s),
        }
    }

    fn beta() -> CurvePresentation {
        curve(
            &[12, 0, 10, 6, 5, 7, 5, 0, 12, 3],
            "kkkpkkkpkk",
            &[1, -1, 1, -1, -1, 1, -1, -1, 1, -1],
        )
    }

    fn omega1() -> CurvePresentation {
        curve(&[0, 12, 0, 5, 6, 7], "pkkkpk", &[-1, 1, -1, 1, 1, -1])
    }

    fn omega2() -> CurvePresentation {
        curve(&[10, 3, 6, 5], "kppk", &[1, -1, -1, -1])
    }

    #[test]
    fn wall_rule_examples() {
        assert_eq!(wall_color_change(cell(1), color(1)), cell(1));
        assert_eq!(wall_color_change(cell(1), color(2)), cell(3));
        assert_eq!(wall_color_change(cell(2), color(3)), cell(1));
    }

    #[test]
    fn wall_rule_is_an_involution() {
        for x in Cell::ALL {
            for c in Color::ALL {
                assert_eq!(wall_color_change(wall_color_change(x, c), c), x);
            }
        }
    }

    #[test]
    fn beta_trace_by_hand() {
        let t = trace_lifts(&beta(), &part1_knot());
        assert_eq!(
            t.lift(cell(1)),
            cells(&[1, 2, 3, 1, 1, 1, 2, 3, 3, 3]).as_slice()
        );
        assert_eq!(
            t.lift(cell(2)),
            cells(&[2, 1, 1, 3, 3, 2, 1, 1, 1, 2]).as_slice()
        );
        assert_eq!(
            t.lift(cell(3)),
            cells(&[3, 3, 2, 2, 2, 3, 3, 2, 2, 1]).as_slice()
        );
        assert!(t.monodromy.is_identity());
        assert_eq!(format_cycles(&t.closure), "(1) (2) (3)");
    }

    #[test]
    fn omega_closures() {
        let k = part1_knot();
        let t2 = trace_lifts(&omega2(), &k);
        assert_eq!(t2.closure, vec![cells(&[1, 2, 3])]);
        assert_eq!(t2.monodromy.to_string(), "(1 2 3)");
        let t1 = trace_lifts(&omega1(), &k);
        assert_eq!(t1.closure.len(), 3);
        assert_eq!(t1.monodromy.to_string(), "()");
        assert_eq!(t1.lift(cell(1)), cells(&[1, 1, 2, 3, 2, 2]).as_slice());
    }

    #[test]
    fn pseudo_only_curve_has_identity_monodromy() {
        let t = trace_lifts(&curve(&[0, 1, 0], "ppp", &[1, 1, -1]), &part1_knot());
        assert!(t.monodromy.is_identity());
        for j in Cell::ALL {
            assert!(t.lift(j).iter().all(|&c| c == j));
        }
    }

    #[test]
    fn single_pass_under_color_one() {
        // knot arc 0 has color 1
        let t = trace_lifts(&curve(&[0], "k", &[1]), &part1_knot());
        assert_eq!(t.closure, vec![cells(&[1]), cells(&[2, 3])]);
        assert_eq!(t.monodromy.to_string(), "(2 3)");
    }

    #[test]
    fn monodromy_matches_direct_composition() {
        let k = part1_knot();
        for c in [beta(), omega1(), omega2()] {
            let t = trace_lifts(&c, &k);
            for j in Cell::ALL {
                let mut x = j;
                for (kind, &f) in c.over_kinds.iter().zip(&c.over_nums) {
                    if *kind == OverKind::Knot {
                        x = wall_color_change(x, k.colors[f]);
                    }
                }
                assert_eq!(t.monodromy.apply(j), x);
            }
        }
    }

    #[test]
    fn part1_placement_by_hand() {
        let p = a2_placement(&part1_knot()).unwrap();
        assert_eq!(p.w, cells(&[2, 2, 2, 1, 2, 2, 2, 2, 3, 3, 3, 3, 2, 2]));
        let q = a2_placement_seeded(&part1_knot(), PlacementSeed::Largest).unwrap();
        assert_eq!(q.w[0], cell(3));
    }

    #[test]
    fn placement_closure_failure() {
        // a single wall of color 1 swaps sheets 2 and 3 for good
        let k = KnotPresentation {
            colors: vec![color(1), color(1)],
            over_nums: vec![1, 0],
            over_kinds: kinds("kp"),
            signs: signs(&[1, 1]),
        };
        let e = a2_placement(&k).unwrap_err();
        assert_eq!(
            e,
            PlacementError {
                start: cell(2),
                end: cell(3)
            }
        );
    }

    #[test]
    fn eps1_eps2_eps3_figures() {
        assert_eq!(eps1_from(color(2), cell(2)), -1);
        assert_eq!(eps2_from(color(3), cell(3)), 1);
        assert_eq!(eps3_from(cell(2), cell(3)), 1);
        assert_eq!(eps3_from(cell(2), cell(2)), -1);
    }

    #[test]
    fn eps4_figure_and_multiset() {
        // lifts in sheets 3, 1, 2 over a crossing with c = 1, w = 2
        let got: Vec<i32> = [3, 1, 2]
            .iter()
            .map(|&l| eps4_from(cell(l), color(1), cell(2)))
            .collect();
        assert_eq!(got, vec![1, 0, -1]);
        for c in Color::ALL {
            for w in Cell::ALL.into_iter().filter(|w| *w != c) {
                let mut v: Vec<i32> = Cell::ALL.iter().map(|&l| eps4_from(l, c, w)).collect();
                v.sort();
                assert_eq!(v, vec![-1, 0, 1]);
                for l in Cell::ALL {
                    let (e5, e7) = (eps5_from(l, c, w), eps7_from(l, c, w));
                    if e5 == 0 {
                        assert_eq!(e7, 1);
                    } else {
                        assert_eq!(e5, e7);
                    }
                }
            }
        }
    }

    #[test]
    fn eps4_part1_crossing_zero() {
        // crossing 0 is under beta arc 7, c(0)=1, w(0)=2; beta lifts at arc 7 are 3, 1, 2
        let k = part1_knot();
        let p = a2_placement(&k).unwrap();
        let t = trace_lifts(&beta(), &k);
        let s = Signs::new(&k, &p);
        let got: Vec<i32> = Cell::ALL
            .iter()
            .map(|&j| s.eps4(&t, j, 0).unwrap())
            .collect();
        assert_eq!(got, vec![1, 0, -1]);
    }

    #[test]
    fn eps5_eps7_part1_omega1_crossing_one() {
        // omega1 arc 1 lifts in sheets 1, 2, 3; overstrand k12 has c=3, w=2
        let k = part1_knot();
        let p = a2_placement(&k).unwrap();
        let d = omega1();
        let t = trace_lifts(&d, &k);
        let s = Signs::new(&k, &p);
        let e5: Vec<i32> = Cell::ALL
            .iter()
            .map(|&j| s.eps5(&d, &t, j, 1).unwrap())
            .collect();
        let e7: Vec<i32> = Cell::ALL
            .iter()
            .map(|&j| s.eps7(&d, &t, j, 1).unwrap())
            .collect();
        assert_eq!(e5, vec![-1, 1, 0]);
        assert_eq!(e7, vec![-1, 1, 1]);
    }

    #[test]
    fn eps6_part1_omega1_crossing_zero() {
        // omega1 arc 0 and beta arc 0 both sit in sheets 1, 2, 3
        let k = part1_knot();
        let g = trace_lifts(&beta(), &k);
        let d = omega1();
        let t = trace_lifts(&d, &k);
        for j in Cell::ALL {
            for kk in Cell::ALL {
                assert_eq!(eps6(&g, &d, &t, j, kk, 0).unwrap(), i32::from(j == kk));
            }
        }
        assert!(eps6(&g, &d, &t, cell(1), cell(1), 1).is_err());
    }

    #[test]
    fn eps6_figure() {
        // gamma lifts in sheets 2, 3, 1; delta lift in sheet 2
        let got: Vec<i32> = [2, 3, 1]
            .iter()
            .map(|&g| eps6_from(cell(2), cell(g)))
            .collect();
        assert_eq!(got, vec![1, 0, 0]);
    }

    #[test]
    fn wrong_class_errors() {
        let k = part1_knot();
        let p = a2_placement(&k).unwrap();
        let s = Signs::new(&k, &p);
        // crossing 0 is under gamma
        assert!(s.eps1(0).is_err());
        // crossing 2: c=3 under k12 (c=3) is homogeneous in the reference data
        assert_eq!(s.class(2), CrossingClass::Homogeneous);
        assert!(s.eps1(2).is_err());
        assert!(s.eps3(2).is_ok());
        // crossing 3: c=2 under k7 (c=3)
        assert_eq!(s.class(3), CrossingClass::Inhomogeneous);
        assert!(s.eps3(3).is_err());
        assert!(s.eps2(3).is_ok());
    }
}
