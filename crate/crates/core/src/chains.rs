//! Linear systems for 2-chains bounding the lifts of gamma and the branch
//! curves, and their solutions.
//!
//! Row `i` of every system has `x_i - x_{i+1}` (indices mod m) plus a
//! crossing term at the overstrand `f(i)`; see [`Convention`] for the two
//! sign readings.

use std::fmt;

use crate::diagram::OverKind;
use crate::lifts::{eps4_from, Cell, CrossingClass};
use crate::linalg::{int, ratio, solve_affine, AugmentedSystem, Rational, Solution};
use crate::prepared::PreparedScene;

/// Sign convention for the systems and the linking sums.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Reproduces the reference outputs. Branch systems and branch
    /// linking use the forms that satisfy the pushforward identity.
    #[default]
    Code,
    /// The closed-form sign rules, taken literally.
    Theorem,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Code => "code",
            Convention::Theorem => "theorem",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum BranchIndex {
    One,
    Two,
}

impl BranchIndex {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(BranchIndex::One),
            2 => Some(BranchIndex::Two),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            BranchIndex::One => 1,
            BranchIndex::Two => 2,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ChainKind {
    PseudoLift(Cell),
    Branch1,
    Branch2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCoefficients {
    /// Coefficient of `A_{2,i}` for every knot arc.
    pub x: Vec<Rational>,
    pub kind: ChainKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainResult {
    Solved(ChainCoefficients),
    NotNullhomologous,
}

impl ChainResult {
    pub fn coefficients(&self) -> Option<&[Rational]> {
        match self {
            ChainResult::Solved(c) => Some(&c.x),
            ChainResult::NotNullhomologous => None,
        }
    }

    pub fn is_solved(&self) -> bool {
        matches!(self, ChainResult::Solved(_))
    }
}

fn skeleton(m: usize) -> AugmentedSystem {
    let mut s = AugmentedSystem::zeros(m, m);
    for i in 0..m {
        s.add(i, i, &int(1));
        s.add(i, (i + 1) % m, &int(-1));
    }
    s
}

/// Adds the Knot-crossing coefficient at `f(i)` and returns the crossing class.
fn knot_term(p: &PreparedScene, s: &mut AugmentedSystem, i: usize) -> CrossingClass {
    let signs = p.signs();
    let class = signs.class(i);
    let f = p.knot().over_nums[i];
    let coef = match class {
        CrossingClass::Inhomogeneous => signs.eps1(i).unwrap() * signs.eps2(i).unwrap(),
        CrossingClass::Homogeneous => 2 * signs.eps3(i).unwrap(),
        _ => 0,
    };
    s.add(i, f, &int(coef as i64));
    class
}

/// System for the 2-chain bounding lift `j` of gamma.
pub fn pseudo_chain_system(p: &PreparedScene, j: Cell, convention: Convention) -> AugmentedSystem {
    let knot = p.knot();
    let mut s = skeleton(knot.len());
    for i in 0..knot.len() {
        match knot.over_kinds[i] {
            OverKind::Knot => {
                knot_term(p, &mut s, i);
            }
            OverKind::Pseudo => {
                let l = p.gamma_trace().cell(j, knot.over_nums[i]);
                let b = knot.signs[i].value() * eps4_from(l, knot.colors[i], p.placement().get(i));
                let b = match convention {
                    Convention::Code => b,
                    Convention::Theorem => -b,
                };
                s.set_constant(i, int(b as i64));
            }
        }
    }
    s
}

/// System for the chain bounded by the branch curve of the given index.
pub fn branch_chain_system(
    p: &PreparedScene,
    index: BranchIndex,
    convention: Convention,
) -> AugmentedSystem {
    let knot = p.knot();
    let signs = p.signs();
    let mut s = skeleton(knot.len());
    for i in 0..knot.len() {
        if knot.over_kinds[i] != OverKind::Knot {
            continue;
        }
        let e = knot.signs[i].value() as i64;
        let rhs = match knot_term(p, &mut s, i) {
            CrossingClass::Inhomogeneous => {
                let e1 = signs.eps1(i).unwrap() as i64;
                let e2 = signs.eps2(i).unwrap() as i64;
                match (index, convention) {
                    (BranchIndex::One, Convention::Code) => int(e * e2),
                    (BranchIndex::One, Convention::Theorem) => int(e * e1),
                    (BranchIndex::Two, _) => ratio(e2 * (e1 - e), 2),
                }
            }
            CrossingClass::Homogeneous => match (index, convention) {
                (BranchIndex::Two, Convention::Code) => int(signs.eps3(i).unwrap() as i64),
                _ => int(0),
            },
            _ => unreachable!("Knot entries are homogeneous or inhomogeneous"),
        };
        s.set_constant(i, -rhs);
    }
    s
}

pub fn solve_chain(system: &AugmentedSystem, kind: ChainKind) -> ChainResult {
    match solve_affine(system) {
        Solution::Solved(x) => ChainResult::Solved(ChainCoefficients { x, kind }),
        Solution::Inconsistent => ChainResult::NotNullhomologous,
    }
}

/// Chains for the three lifts of gamma.
pub fn pseudo_chains(p: &PreparedScene, convention: Convention) -> [ChainResult; 3] {
    Cell::ALL.map(|j| {
        solve_chain(
            &pseudo_chain_system(p, j, convention),
            ChainKind::PseudoLift(j),
        )
    })
}

pub fn branch_chain(p: &PreparedScene, index: BranchIndex, convention: Convention) -> ChainResult {
    let kind = match index {
        BranchIndex::One => ChainKind::Branch1,
        BranchIndex::Two => ChainKind::Branch2,
    };
    solve_chain(&branch_chain_system(p, index, convention), kind)
}
