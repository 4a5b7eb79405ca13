use alloc::vec::Vec;

use super::poly::Poly;
use super::ring::Ring;
use super::series::TruncSeries;
use crate::{Error, Result};

/// `num / den` in the series variable, kept unreduced.
///
/// Equality is decided by cross-multiplication, never by normal forms.
#[derive(Clone, Debug)]
pub struct RatFunc<R> {
    pub num: Poly<R>,
    pub den: Poly<R>,
}

impl<R: Ring> RatFunc<R> {
    pub fn new(num: Poly<R>, den: Poly<R>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(RatFunc { num, den })
    }

    pub fn poly(p: Poly<R>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    /// Coefficients of `x^0..x^n_max`, solved from `num = den * series` term by
    /// term. Each step divides by the constant term of `den` exactly.
    pub fn series(&self, n_max: usize) -> Result<TruncSeries<R>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let den = self.den.coeffs();
        let mut out: Vec<R> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut acc = self.num.coeff(n);
            for (i, d) in den.iter().enumerate().skip(1).take(n) {
                if !d.is_zero() {
                    acc.sub_assign_ref(&d.mul_ref(&out[n - i]));
                }
            }
            let c = if d0.is_one() { acc } else { acc.div_exact(&d0).ok_or(Error::InexactDivision { index: n })? };
            out.push(c);
        }
        Ok(TruncSeries::new(out))
    }

    /// First index `n <= order` where `den * seq - num` has a nonzero
    /// coefficient, or `None` when `seq` agrees with the expansion.
    pub fn mismatch(&self, seq: &[R]) -> Option<usize> {
        let order = seq.len().checked_sub(1)?;
        let s = TruncSeries::new(seq.to_vec());
        let lhs = s.mul_poly(&self.den);
        (0..=order).find(|&n| lhs.get(n).sub_ref(&self.num.coeff(n)) != R::zero())
    }

    pub fn cross_eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RatFunc { num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den), den: &self.den * &rhs.den }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        RatFunc { num: &(&self.num * &rhs.den) - &(&rhs.num * &self.den), den: &self.den * &rhs.den }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RatFunc { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale_both(&self, by: &Poly<R>) -> Self {
        RatFunc { num: &self.num * by, den: &self.den * by }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RatFunc<S> {
        RatFunc { num: self.num.map(&f), den: self.den.map(&f) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{BiPoly, IntPoly};
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn geometric_and_fibonacci() {
        let g = RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[1, -1])).unwrap();
        assert_eq!(g.series(5).unwrap().coeffs(), &ints(&[1, 1, 1, 1, 1, 1])[..]);
        let f = RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[1, -1, -1])).unwrap();
        assert_eq!(f.series(7).unwrap().coeffs(), &ints(&[1, 1, 2, 3, 5, 8, 13, 21])[..]);
    }

    #[test]
    fn weighted_fibonacci_over_zt() {
        // 1/(1 - x - t x^2)
        let den = BiPoly::new(alloc::vec![IntPoly::one(), IntPoly::from_i64s(&[-1]), IntPoly::from_i64s(&[0, -1])]);
        let s = RatFunc::new(BiPoly::one(), den).unwrap().series(4).unwrap();
        let expect = [&[1][..], &[1], &[1, 1], &[1, 2], &[1, 3, 1]];
        for (c, e) in s.coeffs().iter().zip(expect) {
            assert_eq!(c, &IntPoly::from_i64s(e));
        }
    }

    #[test]
    fn zero_constant_term_rejected() {
        let r = RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[0, 1])).unwrap();
        assert_eq!(r.series(3), Err(Error::ZeroConstantTerm));
        let r = RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[2, 1])).unwrap();
        assert_eq!(r.series(3), Err(Error::InexactDivision { index: 0 }));
    }

    #[test]
    fn mismatch_reports_first_bad_index() {
        let f = RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[1, -1, -1])).unwrap();
        assert_eq!(f.mismatch(&ints(&[1, 1, 2, 3, 5])), None);
        assert_eq!(f.mismatch(&ints(&[1, 1, 2, 4, 5])), Some(3));
    }
}
