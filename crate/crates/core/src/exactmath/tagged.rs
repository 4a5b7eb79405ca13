use alloc::string::String;

use super::poly::{BiPoly, Pretty};
use super::ring::Ring;
use crate::{Error, Result};

/// Variable names used across the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    T,
    Q,
    Z,
    S,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::T => "t",
            Var::Q => "q",
            Var::Z => "z",
            Var::S => "s",
        }
    }
}

/// A [`BiPoly`] together with the names of its outer and inner variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedBiPoly {
    pub outer: Var,
    pub inner: Var,
    pub poly: BiPoly,
}

impl TaggedBiPoly {
    pub fn new(outer: Var, inner: Var, poly: BiPoly) -> Self {
        TaggedBiPoly { outer, inner, poly }
    }

    pub fn pretty(&self) -> String {
        self.poly.pretty(&[self.outer.name(), self.inner.name()])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Tag-checked ring operation.
pub fn poly_arith(a: &TaggedBiPoly, b: &TaggedBiPoly, op: ArithOp) -> Result<TaggedBiPoly> {
    for (l, r) in [(a.outer, b.outer), (a.inner, b.inner)] {
        if l != r {
            return Err(Error::VarMismatch { left: l.name(), right: r.name() });
        }
    }
    let poly = match op {
        ArithOp::Add => a.poly.add_ref(&b.poly),
        ArithOp::Sub => a.poly.sub_ref(&b.poly),
        ArithOp::Mul => a.poly.mul_ref(&b.poly),
    };
    Ok(TaggedBiPoly { outer: a.outer, inner: a.inner, poly })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::IntPoly;

    fn xpoly(c: &[i64]) -> TaggedBiPoly {
        TaggedBiPoly::new(Var::X, Var::T, BiPoly::new(c.iter().map(|&v| IntPoly::from_i64s(&[v])).collect()))
    }

    #[test]
    fn examples() {
        let p = poly_arith(&xpoly(&[1, 1]), &xpoly(&[1, -1]), ArithOp::Mul).unwrap();
        assert_eq!(p, xpoly(&[1, 0, -1]));
        let s = poly_arith(&xpoly(&[1, -1, -1]), &xpoly(&[0, 1, 1]), ArithOp::Add).unwrap();
        assert_eq!(s, xpoly(&[1]));
        assert_eq!(s.pretty(), "(1)");
    }

    #[test]
    fn mismatch() {
        let mut q = xpoly(&[1]);
        q.inner = Var::Q;
        assert_eq!(poly_arith(&xpoly(&[1]), &q, ArithOp::Sub), Err(Error::VarMismatch { left: "t", right: "q" }));
    }
}
