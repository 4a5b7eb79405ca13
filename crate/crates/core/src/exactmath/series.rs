use alloc::vec::Vec;

use super::poly::Poly;
use super::ring::Ring;

/// Coefficients `s_0..s_N` of a power series truncated after `x^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Panics on an empty coefficient list: a window always holds `s_0`.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "truncated series needs at least one coefficient");
        TruncSeries { coeffs }
    }

    pub fn zeros(order: usize) -> Self {
        TruncSeries { coeffs: alloc::vec![R::zero(); order + 1] }
    }

    pub fn from_poly(p: &Poly<R>, order: usize) -> Self {
        TruncSeries { coeffs: (0..=order).map(|i| p.coeff(i)).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn get(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn to_poly(&self) -> Poly<R> {
        Poly::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncSeries { coeffs: (0..=n).map(|i| self.coeffs[i].add_ref(&rhs.coeffs[i])).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncSeries { coeffs: (0..=n).map(|i| self.coeffs[i].sub_ref(&rhs.coeffs[i])).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = alloc::vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j].add_assign_ref(&a.mul_ref(b));
            }
        }
        TruncSeries { coeffs: out }
    }

    pub fn mul_poly(&self, p: &Poly<R>) -> Self {
        self.mul(&Self::from_poly(p, self.order()))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}
