//! Intersection matrices between lifts, linking with the branch curves, and
//! aggregation over closed lifts.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::chains::{branch_chain, pseudo_chains, BranchIndex, ChainResult, Convention};
use crate::diagram::OverKind;
use crate::lifts::{classify, eps5_from, eps6_from, eps7_from, format_cycles, Cell, SheetClass};
use crate::linalg::{format_rational, int, Rational};
use crate::prepared::PreparedScene;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Value(Rational),
    Undefined,
}

impl Entry {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            Entry::Value(q) => Some(q),
            Entry::Undefined => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, Entry::Value(_))
    }
}

impl From<i64> for Entry {
    fn from(v: i64) -> Self {
        Entry::Value(int(v))
    }
}

/// Rationals as `a/b` or plain integers, undefined as `x`.
impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Value(q) => f.write_str(&format_rational(q)),
            Entry::Undefined => f.write_str("x"),
        }
    }
}

/// `entries[j - 1][k - 1]` pairs the chain of gamma's lift `j` with delta's
/// lift `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    pub entries: [[Entry; 3]; 3],
}

impl LinkingMatrix {
    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        LinkingMatrix {
            entries: rows.map(|r| r.map(Entry::from)),
        }
    }

    pub fn get(&self, j: Cell, k: Cell) -> &Entry {
        &self.entries[j.index()][k.index()]
    }

    pub fn row_defined(&self, j: Cell) -> bool {
        self.entries[j.index()].iter().all(Entry::is_defined)
    }

    /// Sum of column `k`, if every row is defined.
    pub fn column_sum(&self, k: Cell) -> Option<Rational> {
        self.entries
            .iter()
            .map(|r| r[k.index()].value().cloned())
            .sum::<Option<Rational>>()
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(Entry::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", padded.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("scene has no delta curve")]
pub struct MissingDelta;

/// The full matrix, solving gamma's chains first.
pub fn intersection_matrix(
    p: &PreparedScene,
    convention: Convention,
) -> Result<LinkingMatrix, MissingDelta> {
    let chains = pseudo_chains(p, convention);
    intersection_matrix_with(p, &chains, convention)
}

/// The matrix against caller-supplied chains for gamma's lifts.
pub fn intersection_matrix_with(
    p: &PreparedScene,
    chains: &[ChainResult; 3],
    convention: Convention,
) -> Result<LinkingMatrix, MissingDelta> {
    let delta = p.delta().ok_or(MissingDelta)?;
    let dtrace = p.delta_trace().ok_or(MissingDelta)?;
    let knot = p.knot();
    let gtrace = p.gamma_trace();
    let row = |j: Cell| -> [Entry; 3] {
        let Some(x) = chains[j.index()].coefficients() else {
            return [Entry::Undefined, Entry::Undefined, Entry::Undefined];
        };
        Cell::ALL.map(|k| {
            let mut total = Rational::zero();
            for i in 0..delta.len() {
                let f = delta.over_nums[i];
                let e = delta.signs[i].value() as i64;
                let l = dtrace.cell(k, i);
                match delta.over_kinds[i] {
                    OverKind::Knot => {
                        let e5 = eps5_from(l, knot.colors[f], p.placement().get(f)) as i64;
                        let factor = match convention {
                            Convention::Code => e5,
                            Convention::Theorem => e * e5,
                        };
                        if factor != 0 {
                            total += int(factor) * &x[f];
                        }
                    }
                    OverKind::Pseudo => {
                        total += int(e * eps6_from(l, gtrace.cell(j, f)) as i64);
                    }
                }
            }
            Entry::Value(total)
        })
    };
    Ok(LinkingMatrix {
        entries: Cell::ALL.map(row),
    })
}

/// Linking of each lift of gamma with the branch curve of the given index.
pub fn branch_linking(p: &PreparedScene, index: BranchIndex, convention: Convention) -> [Entry; 3] {
    let chain = branch_chain(p, index, convention);
    branch_linking_with(p, index, &chain, convention)
}

pub fn branch_linking_with(
    p: &PreparedScene,
    index: BranchIndex,
    chain: &ChainResult,
    convention: Convention,
) -> [Entry; 3] {
    let Some(x) = chain.coefficients() else {
        return [Entry::Undefined, Entry::Undefined, Entry::Undefined];
    };
    let knot = p.knot();
    let gamma = p.gamma();
    let trace = p.gamma_trace();
    Cell::ALL.map(|k| {
        let mut total = Rational::zero();
        for i in 0..gamma.len() {
            if gamma.over_kinds[i] != OverKind::Knot {
                continue;
            }
            let f = gamma.over_nums[i];
            let s = gamma.signs[i].value() as i64;
            let (l, c, w) = (trace.cell(k, i), knot.colors[f], p.placement().get(f));
            let xf = &x[f];
            total += match (convention, index) {
                (Convention::Theorem, BranchIndex::One) => int(s * eps7_from(l, c, w) as i64) * xf,
                (Convention::Theorem, BranchIndex::Two) => int(s * eps5_from(l, c, w) as i64) * xf,
                (Convention::Code, BranchIndex::One) => match classify(l, c, w) {
                    SheetClass::Branch => int(s),
                    SheetClass::A2 => xf.clone(),
                    SheetClass::A3 => -xf.clone(),
                },
                (Convention::Code, BranchIndex::Two) => match (classify(l, c, w), s > 0) {
                    (SheetClass::Branch, _) => int(0),
                    (SheetClass::A2, true) => xf.clone(),
                    (SheetClass::A2, false) => xf - int(1),
                    (SheetClass::A3, true) => int(1) - xf,
                    (SheetClass::A3, false) => -xf.clone(),
                },
            };
        }
        Entry::Value(total)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AggregateEntry {
    pub gamma_cycle: Vec<Cell>,
    pub delta_cycle: Vec<Cell>,
    pub value: Entry,
}

/// Linking between closed lifts, one entry per pair of cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AggregatedLinking {
    pub entries: Vec<AggregateEntry>,
}

impl AggregatedLinking {
    pub fn values(&self) -> Vec<&Entry> {
        self.entries.iter().map(|e| &e.value).collect()
    }
}

impl fmt::Display for AggregatedLinking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(
                f,
                "{} x {}: {}",
                format_cycles(std::slice::from_ref(&e.gamma_cycle)),
                format_cycles(std::slice::from_ref(&e.delta_cycle)),
                e.value
            )?;
        }
        Ok(())
    }
}

/// Sums the matrix over every (gamma cycle, delta cycle) pair.
pub fn aggregate(
    matrix: &LinkingMatrix,
    gamma_closure: &[Vec<Cell>],
    delta_closure: &[Vec<Cell>],
) -> AggregatedLinking {
    let mut entries = Vec::new();
    for s in gamma_closure {
        for t in delta_closure {
            let value = s
                .iter()
                .flat_map(|&j| t.iter().map(move |&k| matrix.get(j, k).value().cloned()))
                .sum::<Option<Rational>>()
                .map_or(Entry::Undefined, Entry::Value);
            entries.push(AggregateEntry {
                gamma_cycle: s.clone(),
                delta_cycle: t.clone(),
                value,
            });
        }
    }
    AggregatedLinking { entries }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryMismatch {
    pub j: Cell,
    pub k: Cell,
    pub a: Rational,
    pub b: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymmetryReport {
    /// Pairs `(j, k)` where both `A[j][k]` and `B[k][j]` are defined.
    pub compared: Vec<(Cell, Cell)>,
    pub mismatches: Vec<SymmetryMismatch>,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("dimension mismatch: both scenes need gamma and delta (found {a} and {b} curves)")]
pub struct DimensionMismatch {
    pub a: usize,
    pub b: usize,
}

/// Compares `A[j][k]` with `B[k][j]` wherever both are defined.
pub fn compare_transposed(a: &LinkingMatrix, b: &LinkingMatrix) -> SymmetryReport {
    let mut report = SymmetryReport::default();
    for j in Cell::ALL {
        for k in Cell::ALL {
            if let (Entry::Value(x), Entry::Value(y)) = (a.get(j, k), b.get(k, j)) {
                report.compared.push((j, k));
                if x != y {
                    report.mismatches.push(SymmetryMismatch {
                        j,
                        k,
                        a: x.clone(),
                        b: y.clone(),
                    });
                }
            }
        }
    }
    report
}

/// Checks a scene against its role-swapped encoding.
pub fn symmetry_check(
    a: &PreparedScene,
    b: &PreparedScene,
    convention: Convention,
) -> Result<SymmetryReport, DimensionMismatch> {
    let curves = |p: &PreparedScene| 1 + usize::from(p.delta().is_some());
    let (ca, cb) = (curves(a), curves(b));
    if ca != 2 || cb != 2 {
        return Err(DimensionMismatch { a: ca, b: cb });
    }
    let ma = intersection_matrix(a, convention).map_err(|_| DimensionMismatch { a: ca, b: cb })?;
    let mb = intersection_matrix(b, convention).map_err(|_| DimensionMismatch { a: ca, b: cb })?;
    Ok(compare_transposed(&ma, &mb))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EntryKind {
    /// Both lifts closed and both bound.
    Linking,
    /// Gamma's lift bounds, but delta's lift is not known to be a closed,
    /// bounding curve.
    Intersection,
    Undefined,
}

/// Labels matrix entries given which of delta's lifts bound (read off the
/// role-swapped scene's gamma chains).
pub fn classify_entries(
    matrix: &LinkingMatrix,
    gamma_closure: &[Vec<Cell>],
    delta_closure: &[Vec<Cell>],
    delta_bounds: [bool; 3],
) -> [[EntryKind; 3]; 3] {
    let closed =
        |closure: &[Vec<Cell>], c: Cell| closure.iter().any(|cy| cy.len() == 1 && cy[0] == c);
    Cell::ALL.map(|j| {
        Cell::ALL.map(|k| {
            if !matrix.get(j, k).is_defined() {
                EntryKind::Undefined
            } else if closed(gamma_closure, j)
                && closed(delta_closure, k)
                && delta_bounds[k.index()]
            {
                EntryKind::Linking
            } else {
                EntryKind::Intersection
            }
        })
    })
}
