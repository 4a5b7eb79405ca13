//! Fibonacci and Lucas polynomial families, the Φ/Λ substitutions, classical
//! number triangles, and a registry of closed-form binomial identities.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exactmath::{binom, int, BiPoly, ExactMatrix, IntPoly, Pretty, Ring, TruncSeries};
use crate::report::{always, IdentityDescriptor, Outcome};
use crate::{Error, Result};

pub use crate::report::IdentityDescriptor as Identity;

/// `F_0..=F_{n_max}` for `F_n = x F_{n-1} + s F_{n-2}`, `F_0 = 0`, `F_1 = 1`.
pub fn fib_seq<R: Ring>(n_max: usize, x: &R, s: &R) -> Vec<R> {
    two_term(n_max, R::zero(), R::one(), x, s)
}

/// `L_0..=L_{n_max}` for the same recurrence with `L_0 = 2`, `L_1 = x`.
pub fn lucas_seq<R: Ring>(n_max: usize, x: &R, s: &R) -> Vec<R> {
    two_term(n_max, R::from_i64(2), x.clone(), x, s)
}

fn two_term<R: Ring>(n_max: usize, a0: R, a1: R, x: &R, s: &R) -> Vec<R> {
    let mut out = alloc::vec![a0, a1];
    for n in 2..=n_max {
        let next = x.mul_ref(&out[n - 1]).add_ref(&s.mul_ref(&out[n - 2]));
        out.push(next);
    }
    out.truncate(n_max + 1);
    out
}

/// `F_n(x, s)`. `F_{-1} = 1/s` exists in the ring only for `s = ±1`.
pub fn fib_poly<R: Ring>(n: i64, x: &R, s: &R) -> Result<R> {
    match n {
        ..=-2 => Err(Error::OutOfRange { what: "Fibonacci index", value: n }),
        -1 => {
            if s.is_one() || s.neg_ref().is_one() {
                Ok(s.clone())
            } else {
                Err(Error::SymbolicFibMinusOne)
            }
        }
        _ => Ok(fib_seq(n as usize, x, s).pop().expect("nonempty")),
    }
}

pub fn lucas_poly<R: Ring>(n: i64, x: &R, s: &R) -> Result<R> {
    if n < 0 {
        return Err(Error::OutOfRange { what: "Lucas index", value: n });
    }
    Ok(lucas_seq(n as usize, x, s).pop().expect("nonempty"))
}

/// The symbolic pair `(x, s)` as bivariate polynomials (outer `x`, inner `s`).
pub fn symbolic_xs() -> (BiPoly, BiPoly) {
    (BiPoly::var(), BiPoly::constant(IntPoly::var()))
}

/// `(1, -x²)` as univariate polynomials in `x`.
pub fn one_neg_x2() -> (IntPoly, IntPoly) {
    (IntPoly::one(), IntPoly::from_i64s(&[0, 0, -1]))
}

/// `F_n(1, -x²)` for `n = 0..=n_max`.
pub fn fib_x2_seq(n_max: usize) -> Vec<IntPoly> {
    let (a, s) = one_neg_x2();
    fib_seq(n_max, &a, &s)
}

/// `L_n(1, -x²)` for `n = 0..=n_max`.
pub fn lucas_x2_seq(n_max: usize) -> Vec<IntPoly> {
    let (a, s) = one_neg_x2();
    lucas_seq(n_max, &a, &s)
}

/// `(1 + (1-t)x², -x²)` over ℤ[t][x].
pub fn phi_args() -> (BiPoly, BiPoly) {
    let a = BiPoly::new(alloc::vec![IntPoly::one(), IntPoly::zero(), IntPoly::from_i64s(&[1, -1])]);
    let s = BiPoly::new(alloc::vec![IntPoly::zero(), IntPoly::zero(), IntPoly::from_i64s(&[-1])]);
    (a, s)
}

/// `Φ_n(x,t) = F_n(1 + (1-t)x², -x²)`.
pub fn phi_poly(n: i64) -> Result<BiPoly> {
    if n < 0 {
        return Err(Error::OutOfRange { what: "Φ index", value: n });
    }
    let (a, s) = phi_args();
    fib_poly(n, &a, &s)
}

/// `Λ_n(x,t) = L_n(1 + (1-t)x², -x²)`.
pub fn lambda_poly(n: i64) -> Result<BiPoly> {
    let (a, s) = phi_args();
    lucas_poly(n, &a, &s).map_err(|_| Error::OutOfRange { what: "Λ index", value: n })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `F_n(x, s)`, outer `x`, inner `s`.
    F,
    /// `L_n(x, s)`, outer `x`, inner `s`.
    L,
    /// `Φ_n(x, t)`, outer `x`, inner `t`.
    Phi,
    /// `Λ_n(x, t)`, outer `x`, inner `t`.
    Lambda,
}

impl Family {
    fn args(self) -> (BiPoly, BiPoly) {
        match self {
            Family::F | Family::L => symbolic_xs(),
            Family::Phi | Family::Lambda => phi_args(),
        }
    }

    fn initial(self) -> (BiPoly, BiPoly) {
        let (a, _) = self.args();
        match self {
            Family::F | Family::Phi => (BiPoly::zero(), BiPoly::one()),
            Family::L | Family::Lambda => (BiPoly::from_i64(2), a),
        }
    }
}

/// Memoized members of one family, extended on demand by the recurrence.
///
/// Owned by the caller; fill it with [`PolyFamilyCache::ensure`] and then share
/// it by reference.
#[derive(Clone, Debug)]
pub struct PolyFamilyCache {
    family: Family,
    a: BiPoly,
    s: BiPoly,
    entries: Vec<BiPoly>,
}

impl PolyFamilyCache {
    pub fn new(family: Family) -> Self {
        let (a, s) = family.args();
        let (e0, e1) = family.initial();
        PolyFamilyCache { family, a, s, entries: alloc::vec![e0, e1] }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn ensure(&mut self, n: usize) {
        while self.entries.len() <= n {
            let m = self.entries.len();
            let next = &(&self.a * &self.entries[m - 1]) + &(&self.s * &self.entries[m - 2]);
            self.entries.push(next);
        }
    }

    pub fn get(&mut self, n: usize) -> &BiPoly {
        self.ensure(n);
        if cfg!(debug_assertions) && n >= 2 {
            let e = &self.entries;
            debug_assert_eq!(e[n], &(&self.a * &e[n - 1]) + &(&self.s * &e[n - 2]));
        }
        &self.entries[n]
    }

    /// Entries computed so far.
    pub fn entries(&self) -> &[BiPoly] {
        &self.entries
    }
}

/// `C_n` by the product formula `Π_{i=2..n} (n+i)/i`.
pub fn catalan(n: usize) -> BigInt {
    let mut num = int(1);
    let mut den = int(1);
    for i in 2..=n {
        num *= n + i;
        den *= i;
    }
    num / den
}

/// `N_{n,k} = C(n,k-1) C(n,k) / n` for `1 <= k <= n`.
pub fn narayana(n: usize, k: usize) -> Result<BigInt> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::OutOfRange { what: "Narayana index", value: k as i64 });
    }
    let (n, k) = (n as i64, k as i64);
    Ok(binom(n, k - 1) * binom(n, k) / n)
}

/// Row `n` of the Eulerian triangle, entries `k = 0..=n`.
pub fn eulerian_row(n: usize) -> Vec<BigInt> {
    let mut row = alloc::vec![int(1)];
    for m in 1..=n {
        let mut next = alloc::vec![int(0); m + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            let stay = row.get(k).map_or(int(0), |v| v * (k + 1));
            let up = if k > 0 { row.get(k - 1).map_or(int(0), |v| v * (m - k)) } else { int(0) };
            *slot = stay + up;
        }
        row = next;
    }
    row
}

pub fn eulerian(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::OutOfRange { what: "Eulerian index", value: k as i64 });
    }
    Ok(eulerian_row(n).swap_remove(k))
}

/// `r_j(x) = Σ C(j,ℓ)² x^{2ℓ} + Σ C(j,ℓ)C(j,ℓ-1) x^{2ℓ-1}`.
pub fn r_poly(j: usize) -> IntPoly {
    let j = j as i64;
    let mut c = alloc::vec![int(0); 2 * j as usize + 1];
    for l in 0..=j {
        c[2 * l as usize] = binom(j, l) * binom(j, l);
        if l >= 1 {
            c[2 * l as usize - 1] = binom(j, l) * binom(j, l - 1);
        }
    }
    IntPoly::new(c)
}

/// Same polynomial with the odd coefficients written as `j N_{j,ℓ}`.
pub fn r_poly_narayana_form(j: usize) -> IntPoly {
    let mut c = alloc::vec![int(0); 2 * j + 1];
    for l in 0..=j {
        c[2 * l] = binom(j as i64, l as i64).pow(2);
        if l >= 1 {
            c[2 * l - 1] = narayana(j, l).expect("1 <= l <= j") * j;
        }
    }
    IntPoly::new(c)
}

/// `(1 - x)^e`
pub fn one_minus_x_pow(e: usize) -> IntPoly {
    IntPoly::from_i64s(&[1, -1]).pow(e as u32)
}

/// `(1 - x²)^e`
pub fn one_minus_x2_pow(e: usize) -> IntPoly {
    IntPoly::from_i64s(&[1, 0, -1]).pow(e as u32)
}

fn series_of(order: usize, f: impl Fn(i64) -> BigInt) -> TruncSeries<BigInt> {
    TruncSeries::new((0..=order as i64).map(f).collect())
}

fn show(p: &IntPoly) -> String {
    p.pretty(&["x"])
}

fn compare_poly(expected: &IntPoly, actual: &IntPoly) -> Outcome {
    Outcome::compare_with(expected, actual, show)
}

/// Compare `series * factor` with a polynomial through `x^order`.
fn compare_series(series: &TruncSeries<BigInt>, factor: &IntPoly, rhs: &IntPoly) -> Outcome {
    let lhs = series.mul_poly(factor).to_poly();
    let rhs = rhs.truncate(series.order() + 1);
    compare_poly(&rhs, &lhs)
}

/// Substitute `(X, S) -> (a, s)` in a polynomial over ℤ[S][X].
fn substitute(p: &BiPoly, a: &BiPoly, s: &BiPoly) -> BiPoly {
    let mut out = BiPoly::zero();
    let mut apow = BiPoly::one();
    for c in p.coeffs() {
        let mut inner = BiPoly::zero();
        let mut spow = BiPoly::one();
        for v in c.coeffs() {
            inner = &inner + &spow.scale(&IntPoly::from_int(v));
            spow = &spow * s;
        }
        out = &out + &(&apow * &inner);
        apow = &apow * a;
    }
    out
}

/// `(1-x)^{k+j+1} · D^j/j! · x^n/(1-x)^{k+1}` as a series through `x^order`.
pub fn b_series(n: i64, j: i64, k: i64, order: usize) -> TruncSeries<BigInt> {
    // x^n/(1-x)^{k+1} has coefficient C(p-n+k, k) at x^p
    let c = |p: i64| if p < n { int(0) } else { binom(p - n + k, k) };
    let diff = series_of(order, |q| binom(q + j, j) * c(q + j));
    diff.mul_poly(&one_minus_x_pow((k + j + 1) as usize))
}

fn b_closed(n: i64, j: i64, k: i64) -> IntPoly {
    IntPoly::new((0..=n).map(|i| binom(j + k - n, k - i) * binom(n, i)).collect())
}

fn alt_one_minus_x_sum(upto: i64, coeff: impl Fn(i64) -> BigInt) -> IntPoly {
    let mut acc = IntPoly::zero();
    for l in 0..=upto {
        let c = coeff(l);
        let c = if l % 2 == 1 { -c } else { c };
        acc = &acc + &one_minus_x_pow(l as usize).scale(&c);
    }
    acc
}

fn id_lucas_fib(p: &[i64]) -> Outcome {
    let (x, s) = symbolic_xs();
    let n = p[0] as usize;
    let f = fib_seq(n + 1, &x, &s);
    let l = lucas_seq(n, &x, &s);
    Outcome::compare(&l[n], &(&f[n + 1] + &(&s * &f[n - 1])))
}

fn id_f2n_factor(p: &[i64]) -> Outcome {
    let (x, s) = symbolic_xs();
    let n = p[0] as usize;
    let f = fib_seq(2 * n, &x, &s);
    let l = lucas_seq(n, &x, &s);
    Outcome::compare(&f[2 * n], &(&f[n] * &l[n]))
}

fn id_fib_squares(p: &[i64]) -> Outcome {
    let (x, s) = symbolic_xs();
    let k = p[0] as usize;
    let f = fib_seq(2 * k + 1, &x, &s);
    let lhs = &(&f[k + 1] * &f[k + 1]) + &(&s * &(&f[k] * &f[k]));
    Outcome::compare(&f[2 * k + 1], &lhs)
}

fn id_eq1_13(p: &[i64]) -> Outcome {
    // outer x, inner y
    let n = p[0] as usize;
    let x = BiPoly::var();
    let y = BiPoly::constant(IntPoly::var());
    let a = &x + &y;
    let s = -(&x * &y);
    let xn = x.pow(n as u32);
    let yn = y.pow(n as u32);
    let l = lucas_poly(n as i64, &a, &s).expect("n >= 0");
    let f = fib_poly(n as i64, &a, &s).expect("n >= 0");
    Outcome::compare(&(&xn + &yn), &l).and_then(|| Outcome::compare(&(&xn - &yn), &(&f * &(&x - &y))))
}

fn id_eq1_16(p: &[i64]) -> Outcome {
    let k = p[0] as usize;
    let x = IntPoly::var();
    let m = ExactMatrix::from_fn(k, k, |i, j| match i.abs_diff(j) {
        0 => x.clone(),
        1 => IntPoly::from_i64(-1),
        _ => IntPoly::zero(),
    });
    let f = fib_poly(k as i64 + 1, &x, &IntPoly::from_i64(-1)).expect("k >= 0");
    compare_poly(&f, &m.det().expect("square"))
}

fn id_eq2_7(p: &[i64]) -> Outcome {
    let n = p[0];
    let (a, s) = phi_args();
    let mut sum = BiPoly::zero();
    for k in 0..=((n - 1).max(-1) / 2) {
        if n == 0 {
            break;
        }
        let c = BiPoly::from_int(&binom(n - 1 - k, k));
        sum = &sum + &(&c * &(&a.pow((n - 1 - 2 * k) as u32) * &s.pow(k as u32)));
    }
    Outcome::compare(&phi_poly(n).expect("n >= 0"), &sum)
}

fn id_eq2_9(p: &[i64]) -> Outcome {
    let n = p[0];
    let (a, s) = phi_args();
    let sum = if n == 0 {
        BiPoly::from_i64(2)
    } else {
        let mut sum = BiPoly::zero();
        for k in 0..=n / 2 {
            let c = binom(n - k, k) * n / (n - k);
            sum = &sum + &(&BiPoly::from_int(&c) * &(&a.pow((n - 2 * k) as u32) * &s.pow(k as u32)));
        }
        sum
    };
    Outcome::compare(&lambda_poly(n).expect("n >= 0"), &sum)
}

fn id_eq2_14(p: &[i64]) -> Outcome {
    // Φ_n obtained by substituting into the symbolic F_n(X, S) must satisfy
    // the three-term recurrence.
    let n = p[0] as usize;
    let (x, s) = symbolic_xs();
    let (a, s2) = phi_args();
    let f = fib_seq(n, &x, &s);
    let phi: Vec<BiPoly> = f[n - 2..=n].iter().map(|g| substitute(g, &a, &s2)).collect();
    Outcome::compare(&phi[2], &(&(&a * &phi[1]) + &(&s2 * &phi[0])))
}

fn id_eq2_31(p: &[i64]) -> Outcome {
    let j = p[0] as usize;
    compare_poly(&r_poly(j), &r_poly_narayana_form(j))
}

fn id_eq2_33(p: &[i64]) -> Outcome {
    let k = p[0];
    let order = 4 * k as usize + 20;
    let s = series_of(order, |n| binom((n + 2 * k) / 2, k) * binom((n + 1 + 2 * k) / 2, k));
    let factor = &one_minus_x_pow(2) * &one_minus_x2_pow(2 * k as usize - 1);
    compare_series(&s, &factor, &r_poly(k as usize - 1))
}

fn id_eq2_34(p: &[i64]) -> Outcome {
    let k = p[0];
    let order = 2 * k as usize + 16;
    let s = series_of(order, |m| binom(m + k, k) * binom(m + 1 + k, k));
    let rhs = IntPoly::new((1..=k).map(|j| binom(k - 1, j - 1) * binom(k + 1, j)).collect());
    compare_series(&s, &one_minus_x_pow(2 * k as usize + 1), &rhs)
}

fn squared_binomial_sum(k: i64) -> Outcome {
    let order = 2 * k as usize + 16;
    let s = series_of(order, |n| binom(n + k, k).pow(2));
    let rhs = IntPoly::new((0..=k).map(|j| binom(k, j).pow(2)).collect());
    compare_series(&s, &one_minus_x_pow(2 * k as usize + 1), &rhs)
}

fn id_eq2_35(p: &[i64]) -> Outcome {
    squared_binomial_sum(p[0])
}

fn eq2_36_rhs(k: i64, m: i64) -> IntPoly {
    IntPoly::new((m..=k).map(|j| binom(k - m, j - m) * binom(k + m, j)).collect())
}

fn id_eq2_36(p: &[i64]) -> Outcome {
    let (k, m) = (p[0], p[1]);
    let lhs = alt_one_minus_x_sum(k - m, |j| binom(k - m, j) * binom(2 * k - j, k));
    compare_poly(&eq2_36_rhs(k, m), &lhs)
}

fn id_eq2_36_series(p: &[i64]) -> Outcome {
    let (k, m) = (p[0], p[1]);
    let order = 2 * k as usize + 16;
    let s = series_of(order, |i| binom(i + m + k, k) * binom(i + k, k));
    compare_series(&s, &one_minus_x_pow(2 * k as usize + 1), &eq2_36_rhs(k, m))
}

fn id_eq2_37(p: &[i64]) -> Outcome {
    let k = p[0];
    let lhs = alt_one_minus_x_sum(k, |j| binom(k, j) * binom(2 * k - j, k));
    let rhs = IntPoly::new((0..=k).map(|j| binom(k, j).pow(2)).collect());
    compare_poly(&rhs, &lhs)
}

fn id_eq2_38(p: &[i64]) -> Outcome {
    let (n, m, x) = (p[0], p[1], p[2]);
    let lhs = IntPoly::new((0..=n).map(|j| binom(n, j) * binom(n + 2 * m + x, j + m)).collect());
    let zm1 = IntPoly::from_i64s(&[-1, 1]);
    let mut rhs = IntPoly::zero();
    for j in 0..=n {
        let c = binom(n, j) * binom(2 * n + 2 * m + x - j, n + m);
        rhs = &rhs + &zm1.pow(j as u32).scale(&c);
    }
    Outcome::compare_with(&lhs, &rhs, |p| p.pretty(&["z"]))
}

fn id_eq2_39(p: &[i64]) -> Outcome {
    let (k, j, n) = (p[0], p[1], p[2]);
    let order = (n + j + k) as usize + 6;
    compare_poly(&b_closed(n, j, k).truncate(order + 1), &b_series(n, j, k, order).to_poly())
}

fn id_eq2_40(p: &[i64]) -> Outcome {
    let (k, m, j) = (p[0], p[1], p[2]);
    let order = (2 * k + j) as usize + 6;
    let rhs = IntPoly::new((0..=k - m).map(|i| binom(j + m, k - i) * binom(k - m, i)).collect());
    compare_poly(&rhs, &b_series(k - m, j, k, order).to_poly())
}

fn id_eq2_41(p: &[i64]) -> Outcome {
    squared_binomial_sum(p[0])
}

fn id_eq2_42(p: &[i64]) -> Outcome {
    let k = p[0];
    let order = 2 * k as usize + 16;
    // coefficient of x^{n+1} is C(n+k,k) C(n+k-1,k-2)
    let s = series_of(order, |e| if e == 0 { int(0) } else { binom(e - 1 + k, k) * binom(e + k - 2, k - 2) });
    let rhs = IntPoly::new((0..k).map(|i| binom(k - 1, i - 1) * binom(k - 1, i)).collect());
    compare_series(&s, &one_minus_x_pow(2 * k as usize - 1), &rhs)
}

fn eq2_43_rhs(k: i64, m: i64, j: i64) -> IntPoly {
    alt_one_minus_x_sum(k - m, |l| binom(k - m, l) * binom(k + j - l, j))
}

fn id_eq2_43(p: &[i64]) -> Outcome {
    let (k, m, j) = (p[0], p[1], p[2]);
    let order = (2 * k + j) as usize + 6;
    compare_poly(&eq2_43_rhs(k, m, j), &b_series(k - m, j, k, order).to_poly())
}

fn id_eq2_44(p: &[i64]) -> Outcome {
    let (k, m, j) = (p[0], p[1], p[2]);
    let lhs = IntPoly::new((0..=k - m).map(|i| binom(j + m, k - i) * binom(k - m, i)).collect());
    compare_poly(&lhs, &eq2_43_rhs(k, m, j))
}

fn id_eq2_45(p: &[i64]) -> Outcome {
    // cleared of the denominators k and k+1
    let k = p[0];
    let lhs = IntPoly::new((0..=k).map(|i| binom(k, i - 1) * binom(k, i) * (k + 1)).collect());
    let rhs = alt_one_minus_x_sum(k, |l| binom(k + 1, l) * binom(2 * k - l, k)).scale(&int(k));
    compare_poly(&lhs, &rhs)
}

fn le_first(p: &[i64]) -> bool {
    p[1] <= p[0]
}

fn eq2_39_range(p: &[i64]) -> bool {
    p[2] <= p[0] + p[1]
}

static REGISTRY: &[IdentityDescriptor] = &[
    IdentityDescriptor {
        id: "lucas_fib",
        summary: "L_n = F_{n+1} + s F_{n-1} in Z[x,s]",
        params: &[("n", 1, 24)],
        admissible: always,
        check: id_lucas_fib,
        skip: None,
    },
    IdentityDescriptor {
        id: "F2n_factor",
        summary: "F_{2n} = F_n L_n in Z[x,s]",
        params: &[("n", 0, 16)],
        admissible: always,
        check: id_f2n_factor,
        skip: None,
    },
    IdentityDescriptor {
        id: "fib_squares",
        summary: "F_{k+1}^2 + s F_k^2 = F_{2k+1} in Z[x,s]",
        params: &[("k", 0, 16)],
        admissible: always,
        check: id_fib_squares,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq1.13",
        summary: "L_n(x+y,-xy) = x^n + y^n and (x-y) F_n(x+y,-xy) = x^n - y^n",
        params: &[("n", 0, 16)],
        admissible: always,
        check: id_eq1_13,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq1.16",
        summary: "F_{k+1}(x,-1) = det of the k x k tridiagonal matrix (x on the diagonal, -1 beside it)",
        params: &[("k", 0, 12)],
        admissible: always,
        check: id_eq1_16,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.7",
        summary: "Phi_n equals its binomial sum expansion",
        params: &[("n", 0, 16)],
        admissible: always,
        check: id_eq2_7,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.9",
        summary: "Lambda_n equals its binomial sum expansion",
        params: &[("n", 0, 16)],
        admissible: always,
        check: id_eq2_9,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.14",
        summary: "Phi_n from substitution into symbolic F_n satisfies its three-term recurrence",
        params: &[("n", 2, 14)],
        admissible: always,
        check: id_eq2_14,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.31",
        summary: "two sum forms of r_j agree (j N_{j,l} = C(j,l)C(j,l-1))",
        params: &[("j", 0, 12)],
        admissible: always,
        check: id_eq2_31,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.33",
        summary: "(1-x)^2 (1-x^2)^{2k-1} sum C(floor((n+2k)/2),k) C(floor((n+1+2k)/2),k) x^n = r_{k-1}",
        params: &[("k", 1, 7)],
        admissible: always,
        check: id_eq2_33,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.34",
        summary: "(1-x)^{2k+1} sum C(n+k-1,k) C(n+k,k) x^{n-1} = sum C(k-1,j-1) C(k+1,j) x^{j-1}",
        params: &[("k", 1, 8)],
        admissible: always,
        check: id_eq2_34,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.35",
        summary: "(1-x)^{2k+1} sum C(n+k,k)^2 x^n = sum C(k,j)^2 x^j",
        params: &[("k", 0, 8)],
        admissible: always,
        check: id_eq2_35,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.36",
        summary: "sum (-1)^j C(k-m,j) C(2k-j,k) (1-x)^j = sum C(k-m,j-m) C(k+m,j) x^{j-m}",
        params: &[("k", 0, 10), ("m", 0, 10)],
        admissible: le_first,
        check: id_eq2_36,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.36_series",
        summary: "(1-x)^{2k+1} sum C(n+k,k) C(n+k-m,k) x^{n-m} = sum C(k-m,j-m) C(k+m,j) x^{j-m}",
        params: &[("k", 0, 8), ("m", 0, 8)],
        admissible: le_first,
        check: id_eq2_36_series,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.37",
        summary: "sum (-1)^j C(k,j) C(2k-j,k) (1-x)^j = sum C(k,j)^2 x^j",
        params: &[("k", 0, 12)],
        admissible: always,
        check: id_eq2_37,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.38",
        summary: "sum C(n,j) C(n+2m+x,j+m) z^j = sum C(n,j) C(2n+2m+x-j,n+m) (z-1)^j",
        params: &[("n", 0, 6), ("m", 0, 4), ("x", 0, 4)],
        admissible: always,
        check: id_eq2_38,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.39",
        summary: "(1-x)^{k+j+1} D^j/j! x^n/(1-x)^{k+1} = sum C(j+k-n,k-i) C(n,i) x^i for n <= j+k",
        params: &[("k", 0, 5), ("j", 0, 5), ("n", 0, 10)],
        admissible: eq2_39_range,
        check: id_eq2_39,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.40",
        summary: "the case n = k-m of the b(n,j,x) closed form",
        params: &[("k", 0, 6), ("m", 0, 6), ("j", 0, 6)],
        admissible: le_first,
        check: id_eq2_40,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.41",
        summary: "(1-x)^{2k+1} sum C(n+k,k)^2 x^n = sum C(k,j)^2 x^j via D^k/k!",
        params: &[("k", 0, 8)],
        admissible: always,
        check: id_eq2_41,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.42",
        summary: "(1-x)^{2k-1} sum C(n+k,k) C(n+k-1,k-2) x^{n+1} = sum C(k-1,i-1) C(k-1,i) x^i",
        params: &[("k", 2, 9)],
        admissible: always,
        check: id_eq2_42,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.43",
        summary: "(1-x)^{k+j+1} D^j/j! x^{k-m}/(1-x)^{k+1} = sum (-1)^l C(k-m,l) C(k+j-l,j) (1-x)^l",
        params: &[("k", 0, 6), ("m", 0, 6), ("j", 0, 6)],
        admissible: le_first,
        check: id_eq2_43,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.44",
        summary: "sum C(j+m,k-i) C(k-m,i) x^i = sum (-1)^l C(k-m,l) C(k+j-l,j) (1-x)^l",
        params: &[("k", 0, 8), ("m", 0, 8), ("j", 0, 8)],
        admissible: le_first,
        check: id_eq2_44,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.45",
        summary: "Narayana polynomial = sum (-1)^l C(k+1,l) C(2k-l,k) (1-x)^l / (k+1)",
        params: &[("k", 1, 12)],
        admissible: always,
        check: id_eq2_45,
        skip: None,
    },
    IdentityDescriptor {
        id: "eq2.45_catalan_form",
        summary: "third displayed form of the Narayana polynomial, with Catalan-number weights",
        params: &[("k", 1, 12)],
        admissible: always,
        check: id_eq2_45,
        skip: Some("the weight index n is not bound by the surrounding identity; no reading agrees for k >= 2"),
    },
];

/// The classical identity registry, in a fixed order.
pub fn identities() -> &'static [IdentityDescriptor] {
    REGISTRY
}

pub fn find_identity(id: &str) -> Result<&'static IdentityDescriptor> {
    REGISTRY.iter().find(|d| d.id == id).ok_or_else(|| Error::UnknownIdentity(id.into()))
}

/// Check one registered identity at a single parameter tuple.
pub fn identity_check(id: &str, params: &[i64]) -> Result<crate::report::ConjectureReport> {
    find_identity(id)?.run_at(params)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootFamily {
    /// `F_{k+1}(x,-1)`, roots `2cos(jπ/(k+1))`, `j = 1..=k`.
    F,
    /// `L_k(x,-1)`, roots `2cos((2j+1)π/(2k))`, `j = 0..k`.
    L,
    /// `F_{k+1}(x,-1) - F_k(x,-1)`, roots `2cos((2j+1)π/(2k+1))`, `j = 0..k`.
    FMinusF,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FloatRootReport {
    pub family: RootFamily,
    pub k: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub monic_degree_k: bool,
    pub pass: bool,
}

/// Evaluate the polynomial at each claimed root in double precision.
pub fn factorization_check_float(family: RootFamily, k: usize) -> FloatRootReport {
    let x = IntPoly::var();
    let m1 = IntPoly::from_i64(-1);
    let f = fib_seq(k + 1, &x, &m1);
    let (poly, roots): (IntPoly, Vec<f64>) = match family {
        RootFamily::F => {
            (f[k + 1].clone(), (1..=k).map(|j| j as f64 * core::f64::consts::PI / (k + 1) as f64).collect())
        }
        RootFamily::L => (
            lucas_seq(k, &x, &m1).swap_remove(k),
            (0..k).map(|j| (2 * j + 1) as f64 * core::f64::consts::PI / (2 * k) as f64).collect(),
        ),
        RootFamily::FMinusF => (
            &f[k + 1] - &f[k],
            (0..k).map(|j| (2 * j + 1) as f64 * core::f64::consts::PI / (2 * k + 1) as f64).collect(),
        ),
    };
    let roots: Vec<f64> = roots.into_iter().map(|a| 2.0 * libm::cos(a)).collect();
    let coeffs: Vec<f64> = poly.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect();
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let tolerance = 1e-9 * (1.0 + scale);
    let max_residual =
        roots.iter().map(|&r| libm::fabs(coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c))).fold(0.0f64, f64::max);
    let monic_degree_k = poly.degree() == Some(k) && poly.lead().is_some_and(Ring::is_one);
    FloatRootReport {
        family,
        k,
        max_residual,
        tolerance,
        monic_degree_k,
        pass: monic_degree_k && max_residual < tolerance,
    }
}
