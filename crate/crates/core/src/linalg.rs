//! Dense exact linear algebra over [`Rational`].
//!
//! Matrices are row-major `Vec<Vec<Rational>>`. Sizes here stay in the tens to
//! low hundreds, so plain Gauss–Jordan elimination is enough.

use num::{Signed, Zero};

use crate::arith::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form and the pivot column of each nonzero row.
pub fn rref(m: &[Vec<Rational>]) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : m·x = 0}`, one vector per free column.
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::from_integer(1.into());
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `a·x = b`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let cols = a.first().map_or(0, Vec::len);
    let aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &pc) in r.iter().zip(&pivots) {
        x[pc] = row[cols].clone();
    }
    Some(x)
}

pub fn mat_vec(a: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    a.iter().map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
}

/// Row echelon basis grown one row at a time; used to compute ranks of very
/// tall condition matrices without materializing them.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `v` against the basis; returns `true` if it was independent
    /// and got added.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        for (pc, row) in &self.rows {
            if !v[*pc].is_zero() {
                let f = v[*pc].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pc].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        // keep earlier rows reduced at the new pivot
        for (_, row) in self.rows.iter_mut() {
            if !row[pc].is_zero() {
                let f = row[pc].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.push((pc, v));
        true
    }
}

/// Sign of a rational as `-1`, `0`, `1`.
pub fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&a, &ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&a, &[qi(1), qi(3)]), None);
        assert_eq!(solve(&a, &[qi(1), qi(2)]), Some(vec![qi(1), qi(0)]));
    }

    #[test]
    fn echelon_matches_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1], &[0, 1, 1]]);
        let mut e = EchelonBasis::new(3);
        for row in &a {
            e.insert(row.clone());
        }
        assert_eq!(e.rank(), rank(&a));
        assert!(!e.is_full());
        assert!(!e.insert(vec![q(1, 2), qi(1), q(3, 2)]));
    }
}
