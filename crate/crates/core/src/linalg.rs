//! Exact rational arithmetic and reduced row echelon solving.
//!
//! An [`AugmentedSystem`] with `m` variables stores rows of length `m + 1`;
//! row `i` reads `sum_j a[i][j] * x_j + a[i][m] = 0`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from a small integer.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Builds `n / d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `a/b`, or as the bare integer when `b == 1`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedSystem {
    vars: usize,
    rows: Vec<Vec<Rational>>,
}

impl AugmentedSystem {
    /// An all-zero system with `rows` equations in `vars` unknowns.
    pub fn zeros(rows: usize, vars: usize) -> Self {
        AugmentedSystem {
            vars,
            rows: vec![vec![Rational::zero(); vars + 1]; rows],
        }
    }

    /// Builds a system from full augmented rows (coefficients, then constant).
    ///
    /// Returns `None` if the rows are ragged or have no constant column.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Option<Self> {
        let width = rows.first().map(Vec::len)?;
        if width == 0 || rows.iter().any(|r| r.len() != width) {
            return None;
        }
        Some(AugmentedSystem {
            vars: width - 1,
            rows,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Option<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn coefficient(&self, row: usize, col: usize) -> &Rational {
        &self.rows[row][col]
    }

    pub fn constant(&self, row: usize) -> &Rational {
        &self.rows[row][self.vars]
    }

    /// Adds `v` to the coefficient of `x_col` in `row`.
    pub fn add(&mut self, row: usize, col: usize, v: &Rational) {
        self.rows[row][col] += v;
    }

    pub fn set_constant(&mut self, row: usize, v: Rational) {
        let c = self.vars;
        self.rows[row][c] = v;
    }

    /// Evaluates every row at `x`; a solution gives all zeros.
    pub fn residuals(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.vars, "solution length mismatch");
        self.rows
            .iter()
            .map(|r| {
                r[..self.vars]
                    .iter()
                    .zip(x)
                    .fold(r[self.vars].clone(), |acc, (a, v)| acc + a * v)
            })
            .collect()
    }
}

impl fmt::Display for AugmentedSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with its pivot columns (ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: AugmentedSystem,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination over all `vars + 1` columns, constant included.
pub fn rref(system: &AugmentedSystem) -> Rref {
    let mut m = system.rows.clone();
    let cols = system.vars + 1;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        matrix: AugmentedSystem {
            vars: system.vars,
            rows: m,
        },
        pivots,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Solved(Vec<Rational>),
    Inconsistent,
}

impl Solution {
    pub fn solved(&self) -> Option<&[Rational]> {
        match self {
            Solution::Solved(x) => Some(x),
            Solution::Inconsistent => None,
        }
    }
}

/// Particular solution with every free variable pinned to zero.
pub fn solve_affine(system: &AugmentedSystem) -> Solution {
    let reduced = rref(system);
    let n = system.vars;
    if reduced.pivots.contains(&n) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &p) in reduced.pivots.iter().enumerate() {
        x[p] = -reduced.matrix.rows[row][n].clone();
    }
    Solution::Solved(x)
}

/// Basis of the solution space of the homogeneous part (constant column
/// ignored), one vector per free variable.
pub fn kernel_basis(system: &AugmentedSystem) -> Vec<Vec<Rational>> {
    let n = system.vars;
    let homogeneous = AugmentedSystem {
        vars: n,
        rows: system
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r[n] = Rational::zero();
                r
            })
            .collect(),
    };
    let reduced = rref(&homogeneous);
    let free: Vec<usize> = (0..n).filter(|c| !reduced.pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); n];
            v[fc] = Rational::one();
            for (row, &p) in reduced.pivots.iter().enumerate() {
                v[p] = -reduced.matrix.rows[row][fc].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn identity_is_already_reduced() {
        let s =
            AugmentedSystem::from_int_rows(&[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]])
                .unwrap();
        let r = rref(&s);
        assert_eq!(r.matrix, s);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn two_by_two_hand_solve() {
        // x0 - x1 + 1 = 0, x0 + x1 - 1 = 0
        let s = AugmentedSystem::from_int_rows(&[vec![1, -1, 1], vec![1, 1, -1]]).unwrap();
        let r = rref(&s);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.matrix.constant(0), &int(0));
        assert_eq!(r.matrix.constant(1), &int(-1));
        assert_eq!(solve_affine(&s), Solution::Solved(ints(&[0, 1])));
    }

    #[test]
    fn zero_matrix_has_no_pivots() {
        let s = AugmentedSystem::zeros(3, 3);
        let r = rref(&s);
        assert_eq!(r.matrix, s);
        assert!(r.pivots.is_empty());
        assert_eq!(solve_affine(&s), Solution::Solved(ints(&[0, 0, 0])));
    }

    #[test]
    fn contradictory_row() {
        // x0 - x0 + 1 = 0
        let s = AugmentedSystem::from_int_rows(&[vec![0, 1]]).unwrap();
        assert_eq!(solve_affine(&s), Solution::Inconsistent);
    }

    #[test]
    fn homogeneous_gives_zero() {
        let s = AugmentedSystem::from_int_rows(&[vec![1, -1, 0, 0], vec![0, 1, -1, 0]]).unwrap();
        assert_eq!(solve_affine(&s), Solution::Solved(ints(&[0, 0, 0])));
    }

    #[test]
    fn zero_row_system() {
        let s = AugmentedSystem::zeros(0, 4);
        assert_eq!(solve_affine(&s), Solution::Solved(ints(&[0, 0, 0, 0])));
        assert_eq!(
            solve_affine(&AugmentedSystem::zeros(0, 0)),
            Solution::Solved(vec![])
        );
    }

    #[test]
    fn fractional_solution() {
        // 2 x0 - 1 = 0
        let s = AugmentedSystem::from_int_rows(&[vec![2, -1]]).unwrap();
        let x = solve_affine(&s);
        assert_eq!(x, Solution::Solved(vec![ratio(1, 2)]));
        assert_eq!(format_rational(&ratio(1, 2)), "1/2");
        assert_eq!(format_rational(&ratio(-4, 2)), "-2");
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let s = AugmentedSystem::from_int_rows(&[vec![1, -1, 0, 3], vec![2, -2, 0, 6]]).unwrap();
        let k = kernel_basis(&s);
        assert_eq!(k.len(), 2);
        let hom = AugmentedSystem::from_int_rows(&[vec![1, -1, 0, 0], vec![2, -2, 0, 0]]).unwrap();
        for v in k {
            assert!(hom.residuals(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(AugmentedSystem::from_int_rows(&[vec![1, 2], vec![1]]).is_none());
        assert!(AugmentedSystem::from_int_rows(&[]).is_none());
    }
}
