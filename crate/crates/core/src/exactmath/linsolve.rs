use alloc::vec::Vec;

use num_rational::BigRational;

use super::matrix::ExactMatrix;
use super::ring::Ring;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<BigRational>),
    NoSolution,
    /// Consistent but rank-deficient; `rank` < number of unknowns.
    Underdetermined {
        rank: usize,
    },
}

/// Gaussian elimination over ℚ. Rank deficiency is reported, never resolved
/// by picking a particular solution.
pub fn solve_linear_exact(a: &ExactMatrix<BigRational>, rhs: &[BigRational]) -> Result<LinearSolution> {
    let (rows, cols) = (a.rows(), a.cols());
    if rows == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    if rhs.len() != rows {
        return Err(Error::DimensionMismatch { expected: rows, got: rhs.len() });
    }
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| (0..cols).map(|j| a.get(i, j).clone()).chain(core::iter::once(rhs[i].clone())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = &*v / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(LinearSolution::NoSolution);
    }
    if r < cols {
        return Ok(LinearSolution::Underdetermined { rank: r });
    }
    let mut x = alloc::vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    debug_assert!((0..rows).all(|i| {
        let mut acc = BigRational::zero();
        for (j, xj) in x.iter().enumerate() {
            acc.add_assign_ref(&a.get(i, j).mul_ref(xj));
        }
        acc == rhs[i]
    }));
    Ok(LinearSolution::Unique(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_i64(v)
    }

    fn mat(rows: &[&[i64]]) -> ExactMatrix<BigRational> {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_system() {
        let s = solve_linear_exact(&mat(&[&[1, 0], &[0, 1]]), &[q(3), q(5)]).unwrap();
        assert_eq!(s, LinearSolution::Unique(alloc::vec![q(3), q(5)]));
    }

    #[test]
    fn fibonacci_hankel_recovers_recurrence() {
        // F2 = c1 F1 + c2 F0, F3 = c1 F2 + c2 F1 with F = 1,1,2,3
        let s = solve_linear_exact(&mat(&[&[1, 1], &[2, 1]]), &[q(2), q(3)]).unwrap();
        assert_eq!(s, LinearSolution::Unique(alloc::vec![q(1), q(1)]));
    }

    #[test]
    fn singular_cases() {
        let ones = mat(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve_linear_exact(&ones, &[q(1), q(2)]).unwrap(), LinearSolution::NoSolution);
        assert_eq!(solve_linear_exact(&ones, &[q(1), q(1)]).unwrap(), LinearSolution::Underdetermined { rank: 1 });
        assert!(solve_linear_exact(&ones, &[q(1)]).is_err());
    }

    #[test]
    fn overdetermined_consistent() {
        let s = solve_linear_exact(&mat(&[&[1, 0], &[0, 2], &[1, 1]]), &[q(1), q(4), q(3)]).unwrap();
        assert_eq!(s, LinearSolution::Unique(alloc::vec![q(1), q(2)]));
    }
}
