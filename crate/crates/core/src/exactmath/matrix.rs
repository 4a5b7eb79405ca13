use alloc::vec::Vec;

use super::ring::Ring;
use crate::{Error, Result};

/// Dense row-major matrix over an exact ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> ExactMatrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, got: entries.len() });
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let entries = (0..rows * cols).map(|i| f(i / cols, i % cols)).collect();
        ExactMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, got: bad.len() });
        }
        Ok(ExactMatrix { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: rhs.rows });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = R::zero();
            for l in 0..self.cols {
                acc.add_assign_ref(&self.get(i, l).mul_ref(rhs.get(l, j)));
            }
            acc
        }))
    }

    pub fn pow(&self, mut e: u32) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Determinant by fraction-free (Bareiss) elimination. Every division is
    /// exact in an integral domain.
    pub fn det(&self) -> Result<R> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        let mut m: Vec<Vec<R>> = self.entries.chunks(n).map(<[R]>::to_vec).collect();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Ok(R::zero());
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul_ref(&m[k][k]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                    m[i][j] = num.div_exact(&prev).expect("Bareiss step is exact over an integral domain");
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { d.neg_ref() } else { d })
    }

    /// Replace column `col` by `v`.
    pub fn with_column(&self, col: usize, v: &[R]) -> Self {
        let mut out = self.clone();
        for (i, x) in v.iter().enumerate() {
            out.set(i, col, x.clone());
        }
        out
    }

    /// Fraction-free Cramer solve of a square system: returns `(det A,
    /// [det A_i])` so that `x_i = det A_i / det A`.
    pub fn cramer(&self, rhs: &[R]) -> Result<(R, Vec<R>)> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: rhs.len() });
        }
        let d = self.det()?;
        let xs = (0..self.cols).map(|i| self.with_column(i, rhs).det()).collect::<Result<Vec<_>>>()?;
        Ok((d, xs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::IntPoly;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn worked_hankel_determinants() {
        let m = ExactMatrix::from_rows(alloc::vec![
            alloc::vec![ip(&[1]), ip(&[1]), ip(&[0, 0, 1])],
            alloc::vec![ip(&[1]), ip(&[2]), ip(&[0, 1])],
            alloc::vec![ip(&[2]), ip(&[3]), ip(&[1])],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), ip(&[1, -1, -1]));

        let m = ExactMatrix::from_rows(alloc::vec![
            alloc::vec![ip(&[1]), ip(&[1]), ip(&[2]), ip(&[0, 0, 0, 1])],
            alloc::vec![ip(&[1]), ip(&[2]), ip(&[3]), ip(&[0, 0, 1])],
            alloc::vec![ip(&[2]), ip(&[3]), ip(&[6]), ip(&[0, 1])],
            alloc::vec![ip(&[3]), ip(&[6]), ip(&[9]), ip(&[1])],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), ip(&[1, 0, -3]));
        assert_eq!(ExactMatrix::<BigInt>::identity(3).det().unwrap(), BigInt::from(1));
    }

    #[test]
    fn non_square_rejected() {
        let m = ExactMatrix::from_fn(2, 3, |_, _| BigInt::from(1));
        assert_eq!(m.det(), Err(Error::NonSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let m = ExactMatrix::from_rows(alloc::vec![
            alloc::vec![BigInt::from(0), BigInt::from(1)],
            alloc::vec![BigInt::from(1), BigInt::from(0)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), BigInt::from(-1));
    }

    fn cofactor(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * cofactor(&minor)
            })
            .sum()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn bareiss_matches_cofactor(n in 3usize..=4, seed in proptest::collection::vec(-9i64..=9, 16)) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..i * n + n].to_vec()).collect();
            let m = ExactMatrix::from_fn(n, n, |i, j| BigInt::from(rows[i][j]));
            prop_assert_eq!(m.det().unwrap(), BigInt::from(cofactor(&rows)));
        }
    }
}
