//! Dense univariate polynomials over an arbitrary [`Ring`].
//!
//! Coefficients are stored in ascending degree order. The zero polynomial is
//! the empty vector and every constructor strips trailing zeros, so structural
//! equality is mathematical equality.
//!
//! Multivariate polynomials are towers: `Poly<Poly<BigInt>>` is a polynomial in
//! an outer variable whose coefficients are polynomials in an inner variable.
//! Variables carry no runtime tag; their names are supplied when printing.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::ring::{Ring, Signum};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Polynomial with integer coefficients in one variable.
pub type IntPoly = Poly<BigInt>;
/// Polynomial in an outer variable with [`IntPoly`] coefficients.
pub type BiPoly = Poly<IntPoly>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(alloc::vec![c])
    }

    /// `c * var^e`
    pub fn monomial(c: R, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![R::zero(); e + 1];
        coeffs[e] = c;
        Poly { coeffs }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(at).add_ref(c);
        }
        acc
    }

    pub fn scale(&self, by: &R) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul_ref(by)).collect())
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Keep only the terms of degree `< len`.
    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.coeffs.iter().take(len).cloned().collect())
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Poly<R>) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// `p(-var)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { c.neg_ref() } else { c.clone() }).collect(),
        )
    }

    /// `var^d * p(1/var)`; `d` must be at least the degree.
    pub fn reciprocal(&self, d: usize) -> Self {
        assert!(self.degree().map_or(true, |deg| deg <= d), "reciprocal degree below polynomial degree");
        let mut coeffs = alloc::vec![R::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        Ring::pow(self, e)
    }

    /// Long division that only succeeds when `divisor` divides `self` exactly.
    pub fn div_exact_poly(&self, divisor: &Self) -> Option<Self> {
        let dlead = divisor.lead()?;
        let ddeg = divisor.coeffs.len() - 1;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - ddeg;
        let mut quot = alloc::vec![R::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + ddeg];
            if top.is_zero() {
                continue;
            }
            let q = top.div_exact(dlead)?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j].sub_assign_ref(&q.mul_ref(d));
            }
            quot[i] = q;
        }
        rem.iter().all(Ring::is_zero).then(|| Self::new(quot))
    }

    /// Pseudo-remainder of `self` by `divisor`: the remainder of
    /// `lead(divisor)^(deg self - deg divisor + 1) * self`. Zero iff `divisor`
    /// divides `self` over the fraction field (for an integral domain).
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let Some(dlead) = divisor.lead() else {
            panic!("pseudo-remainder by the zero polynomial");
        };
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.clone();
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let rlead = rem.coeffs[rdeg].clone();
            let scaled = rem.scale(dlead);
            let sub = divisor.scale(&rlead).shift(rdeg - ddeg);
            rem = &scaled - &sub;
        }
        rem
    }
}

impl<R: Ring> Poly<Poly<R>> {
    /// Evaluate every inner polynomial at `at`.
    pub fn eval_inner(&self, at: &R) -> Poly<R> {
        self.map(|c| c.eval(at))
    }

    /// Coefficient of `inner^d` in every outer coefficient.
    pub fn inner_coeff(&self, d: usize) -> Poly<R> {
        self.map(|c| c.coeff(d))
    }

    /// Drop inner terms of degree `>= len`.
    pub fn truncate_inner(&self, len: usize) -> Self {
        self.map(|c| c.truncate(len))
    }

    /// Swap the roles of the two variables.
    pub fn transpose(&self) -> Self {
        let inner_len = self.coeffs.iter().map(|c| c.coeffs.len()).max().unwrap_or(0);
        let mut out = alloc::vec![alloc::vec![R::zero(); self.coeffs.len()]; inner_len];
        for (i, c) in self.coeffs.iter().enumerate() {
            for (j, v) in c.coeffs.iter().enumerate() {
                out[j][i] = v.clone();
            }
        }
        Poly::new(out.into_iter().map(Poly::new).collect())
    }

    /// Lift an inner-variable polynomial to a constant in the outer variable.
    pub fn lift(inner: Poly<R>) -> Self {
        Self::constant(inner)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_int(v: &BigInt) -> Self {
        Poly::constant(R::from_int(v))
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            c.add_assign_ref(s);
        }
        Poly::new(coeffs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => coeffs.push(a.sub_ref(b)),
                (Some(a), None) => coeffs.push(a.clone()),
                (None, Some(b)) => coeffs.push(b.neg_ref()),
                (None, None) => unreachable!(),
            }
        }
        Poly::new(coeffs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = alloc::vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        Poly::new(coeffs)
    }
    fn neg_ref(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(Ring::neg_ref).collect() }
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div_exact_poly(rhs)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), R::zero());
        }
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            c.add_assign_ref(r);
        }
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl<R: Ring + Signum> Signum for Poly<R> {
    fn is_negative_lead(&self) -> bool {
        self.lead().is_some_and(Signum::is_negative_lead)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $ring:ident) => {
        impl<'a, R: Ring> $tr<&'a Poly<R>> for &'a Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: &'a Poly<R>) -> Poly<R> {
                Ring::$ring(self, rhs)
            }
        }
        impl<R: Ring> $tr<Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: Poly<R>) -> Poly<R> {
                Ring::$ring(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        self.neg_ref()
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        self.neg_ref()
    }
}

/// Canonical text rendering: ascending powers with explicit `*` and `^`.
///
/// `vars[0]` names the outermost variable. Nested coefficients are printed in
/// compact form inside parentheses, e.g. `(1) + (1+t)*x^2`.
pub trait Pretty {
    fn pretty(&self, vars: &[&str]) -> String {
        self.render(vars, false)
    }
    fn render(&self, vars: &[&str], compact: bool) -> String;
}

impl Pretty for BigInt {
    fn render(&self, _vars: &[&str], _compact: bool) -> String {
        alloc::format!("{self}")
    }
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => String::from(var),
        _ => alloc::format!("{var}^{e}"),
    }
}

impl Pretty for Poly<BigInt> {
    fn render(&self, vars: &[&str], compact: bool) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let var = vars.first().copied().unwrap_or("x");
        let (plus, minus) = if compact { ("+", "-") } else { (" + ", " - ") };
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { minus } else { plus });
            }
            let mag = c.abs();
            if e == 0 {
                let _ = write!(out, "{mag}");
            } else if num_traits::One::is_one(&mag) {
                out.push_str(&power(var, e));
            } else {
                let _ = write!(out, "{mag}*{}", power(var, e));
            }
        }
        out
    }
}

impl<R: Ring> Pretty for Poly<Poly<R>>
where
    Poly<R>: Pretty,
{
    fn render(&self, vars: &[&str], compact: bool) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let var = vars.first().copied().unwrap_or("x");
        let rest = if vars.len() > 1 { &vars[1..] } else { &["t"][..] };
        let sep = if compact { "+" } else { " + " };
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(sep);
            }
            let _ = write!(out, "({})", c.render(rest, true));
            if e > 0 {
                out.push('*');
                out.push_str(&power(var, e));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn canonical_zero_is_empty() {
        assert!(ip(&[0, 0, 0]).coeffs().is_empty());
        assert_eq!(ip(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&ip(&[1, 1]) * &ip(&[1, -1]), ip(&[1, 0, -1]));
    }

    #[test]
    fn sum_collapses_to_constant() {
        assert_eq!(&ip(&[1, -1, -1]) + &ip(&[0, 1, 1]), ip(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = ip(&[1, 0, -1]);
        assert_eq!(a.div_exact_poly(&ip(&[1, 1])), Some(ip(&[1, -1])));
        assert_eq!(a.div_exact_poly(&ip(&[2, 1])), None);
        assert_eq!(ip(&[2, 4]).div_exact_poly(&ip(&[2])), Some(ip(&[1, 2])));
        assert_eq!(ip(&[1, 4]).div_exact_poly(&ip(&[2])), None);
    }

    #[test]
    fn pseudo_remainder_detects_rational_divisibility() {
        // 2x + 1 divides 4x^2 - 1 over Q
        assert!(ip(&[-1, 0, 4]).pseudo_rem(&ip(&[1, 2])).is_zero());
        assert!(!ip(&[-1, 0, 3]).pseudo_rem(&ip(&[1, 2])).is_zero());
    }

    #[test]
    fn text_forms() {
        assert_eq!(ip(&[1, 4, 3]).pretty(&["t"]), "1 + 4*t + 3*t^2");
        assert_eq!(ip(&[1, -1, -1]).pretty(&["x"]), "1 - x - x^2");
        assert_eq!(ip(&[0, -2]).pretty(&["x"]), "-2*x");
        assert_eq!(IntPoly::zero().pretty(&["x"]), "0");
        let bi = BiPoly::new(alloc::vec![ip(&[1]), IntPoly::zero(), ip(&[1, 1])]);
        assert_eq!(bi.pretty(&["x", "t"]), "(1) + (1+t)*x^2");
    }

    #[test]
    fn compose_and_reflect() {
        let p = ip(&[1, 2, 3]);
        assert_eq!(p.compose(&ip(&[0, -1])), p.reflect());
        assert_eq!(ip(&[1, 1]).compose(&ip(&[0, 0, 1])), ip(&[1, 0, 1]));
        assert_eq!(ip(&[1, -1, -1]).reciprocal(2), ip(&[-1, -1, 1]));
    }

    #[test]
    fn transpose_swaps_variables() {
        // x * t  +  t^2 (outer x, inner t)
        let p = BiPoly::new(alloc::vec![ip(&[0, 0, 1]), ip(&[0, 1])]);
        let q = p.transpose();
        assert_eq!(q, BiPoly::new(alloc::vec![IntPoly::zero(), ip(&[0, 1]), ip(&[1])]));
        assert_eq!(q.transpose(), p);
    }
}
