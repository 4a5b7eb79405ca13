use alloc::vec::Vec;

use super::poly::Poly;
use super::ring::Ring;

/// `z^minexp * poly(z)` with `poly(0) != 0` (or both zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly<R> {
    minexp: i64,
    poly: Poly<R>,
}

impl<R: Ring> LaurentPoly<R> {
    pub fn new(minexp: i64, poly: Poly<R>) -> Self {
        match poly.valuation() {
            None => Self::zero(),
            Some(0) => LaurentPoly { minexp, poly },
            Some(v) => LaurentPoly { minexp: minexp + v as i64, poly: Poly::new(poly.coeffs()[v..].to_vec()) },
        }
    }

    pub fn zero() -> Self {
        LaurentPoly { minexp: 0, poly: Poly::zero() }
    }

    /// `c * z^e`
    pub fn monomial(c: R, e: i64) -> Self {
        Self::new(e, Poly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn minexp(&self) -> i64 {
        self.minexp
    }

    pub fn maxexp(&self) -> Option<i64> {
        self.poly.degree().map(|d| self.minexp + d as i64)
    }

    pub fn coeff(&self, e: i64) -> R {
        if e < self.minexp {
            return R::zero();
        }
        self.poly.coeff((e - self.minexp) as usize)
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficients.
    pub fn terms(&self) -> Vec<(i64, R)> {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.minexp + i as i64, c.clone()))
            .collect()
    }

    /// `z^e * self` as an ordinary polynomial; `None` if a negative power
    /// would remain.
    pub fn shifted_poly(&self, e: i64) -> Option<Poly<R>> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let low = self.minexp + e;
        (low >= 0).then(|| self.poly.shift(low as usize))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.minexp.min(rhs.minexp);
        let a = self.poly.shift((self.minexp - low) as usize);
        let b = rhs.poly.shift((rhs.minexp - low) as usize);
        Self::new(low, &a + &b)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { minexp: self.minexp, poly: self.poly.neg_ref() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.minexp + rhs.minexp, &self.poly * &rhs.poly)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.minexp, self.poly.scale(c))
    }

    /// Evaluate at `z = 1` (`sign = false`) or `z = -1` (`sign = true`), the
    /// only points where negative powers stay in the ring.
    pub fn eval_unit(&self, negative: bool) -> R {
        let mut acc = R::zero();
        for (e, c) in self.terms() {
            if negative && e.rem_euclid(2) == 1 {
                acc.sub_assign_ref(&c);
            } else {
                acc.add_assign_ref(&c);
            }
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        LaurentPoly::new(self.minexp, self.poly.map(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type L = LaurentPoly<BigInt>;

    #[test]
    fn normalizes_low_zeros() {
        let p = L::new(-3, Poly::from_i64s(&[0, 0, 2, 1]));
        assert_eq!(p.minexp(), -1);
        assert_eq!(p.maxexp(), Some(0));
        assert_eq!(p.coeff(-1), BigInt::from(2));
    }

    #[test]
    fn z_plus_inverse_squared() {
        let a = L::monomial(BigInt::from(1), 1).add(&L::monomial(BigInt::from(1), -1));
        let sq = a.mul(&a);
        assert_eq!(sq, L::new(-2, Poly::from_i64s(&[1, 0, 2, 0, 1])));
        assert_eq!(sq.eval_unit(true), BigInt::from(4));
        assert_eq!(sq.shifted_poly(2), Some(Poly::from_i64s(&[1, 0, 2, 0, 1])));
        assert_eq!(sq.shifted_poly(1), None);
        assert!(a.sub(&a).is_zero());
    }
}
