//! Polynomials in `q`: q-integers, q-binomials, q-Pochhammer products, the
//! q-derivative, and a registry of finite q-identities checked coefficientwise.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::classic::{b_series, fib_seq, r_poly};
use crate::exactmath::{binom, int, BiPoly, IntPoly, Pretty, Ring};
use crate::formulas::a_count;
use crate::report::{always, run_grid, Axis, ConjectureReport, IdentityDescriptor, Outcome};
use crate::{Error, Result};

/// Polynomial in `q`.
pub type QPoly = IntPoly;
/// Polynomial in `x` (outer) with [`QPoly`] coefficients.
pub type QXPoly = BiPoly;

/// `q^e`
pub fn q_pow(e: usize) -> QPoly {
    QPoly::monomial(int(1), e)
}

/// `[n]_q = 1 + q + … + q^{n-1}`; zero for `n <= 0`.
pub fn q_int(n: i64) -> QPoly {
    if n <= 0 {
        return QPoly::zero();
    }
    QPoly::new(alloc::vec![int(1); n as usize])
}

/// `[n]_q!`
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n as i64).fold(QPoly::one(), |acc, i| &acc * &q_int(i))
}

/// Rows `0..=n_max` of the q-binomial triangle from
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn qbinom_rows(n_max: usize) -> Vec<Vec<QPoly>> {
    let mut rows: Vec<Vec<QPoly>> = alloc::vec![alloc::vec![QPoly::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let left = if k > 0 { prev[k - 1].clone() } else { QPoly::zero() };
            let right = prev.get(k).map_or_else(QPoly::zero, |p| p.shift(k));
            row.push(&left + &right);
        }
        rows.push(row);
    }
    rows
}

/// Gaussian binomial `[n, k]_q`, zero unless `0 <= k <= n`.
pub fn qbinom(n: i64, k: i64) -> QPoly {
    if n < 0 || k < 0 || k > n {
        return QPoly::zero();
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    // one row at a time, only the first k+1 entries
    let mut row = alloc::vec![QPoly::one()];
    for m in 1..=n {
        let width = (m + 1).min(k + 1);
        let mut next = Vec::with_capacity(width);
        for i in 0..width {
            let left = if i > 0 { row[i - 1].clone() } else { QPoly::zero() };
            let right = row.get(i).map_or_else(QPoly::zero, |p| p.shift(i));
            next.push(&left + &right);
        }
        row = next;
    }
    row[k].clone()
}

/// `Π_{i=0}^{n-1} (1 - q^{shift + i·step} x^{xexp})`, e.g. `(x;q)_n` is
/// `qpochhammer(1, 0, 1, n)` and `(qx²;q)_n` is `qpochhammer(2, 1, 1, n)`.
pub fn qpochhammer(xexp: usize, shift: usize, step: usize, n: usize) -> QXPoly {
    let mut acc = QXPoly::one();
    for i in 0..n {
        let factor = &QXPoly::one() - &QXPoly::monomial(q_pow(shift + i * step), xexp);
        acc = &acc * &factor;
    }
    acc
}

/// `(x;q)_n`
pub fn qpoch_x(n: usize) -> QXPoly {
    qpochhammer(1, 0, 1, n)
}

/// `D_q f`, mapping `x^n` to `[n]_q x^{n-1}`.
pub fn q_derivative(f: &QXPoly) -> QXPoly {
    QXPoly::new(f.coeffs().iter().enumerate().skip(1).map(|(n, c)| c * &q_int(n as i64)).collect())
}

/// `D_q^j f / [j]!`, mapping `x^n` to `[n, j]_q x^{n-j}` (no division).
pub fn q_divided_derivative(f: &QXPoly, j: usize) -> QXPoly {
    QXPoly::new(f.coeffs().iter().enumerate().skip(j).map(|(n, c)| c * &qbinom(n as i64, j as i64)).collect())
}

/// `q^s · f`
pub fn q_shift(f: &QXPoly, s: usize) -> QXPoly {
    f.map(|c| c.shift(s))
}

/// `Σ_{n<=order} [n+k, k] x^n`, the expansion of `1/(x;q)_{k+1}`.
pub fn inv_qpoch_series(k: usize, order: usize) -> QXPoly {
    QXPoly::new((0..=order).map(|n| qbinom((n + k) as i64, k as i64)).collect())
}

/// Sum of `q^{e_i} · term_i` with possibly negative exponents, returned as
/// `(s, q^s · Σ …)` with `s >= 0` the smallest shift making all exponents
/// nonnegative.
fn laurent_q_sum(terms: Vec<(i64, QXPoly)>) -> (usize, QXPoly) {
    let min = terms.iter().map(|(e, _)| *e).min().unwrap_or(0).min(0);
    let mut acc = QXPoly::zero();
    for (e, t) in terms {
        acc = &acc + &q_shift(&t, (e - min) as usize);
    }
    ((-min) as usize, acc)
}

fn sign(l: i64) -> i64 {
    if l % 2 == 0 {
        1
    } else {
        -1
    }
}

fn lift_q(c: QPoly) -> QXPoly {
    QXPoly::constant(c)
}

fn show_qx(p: &QXPoly) -> String {
    p.render(&["x", "q"], true)
}

fn show_q(p: &QPoly) -> String {
    p.pretty(&["q"])
}

fn cmp_qx(expected: &QXPoly, actual: &QXPoly) -> Outcome {
    Outcome::compare_with(expected, actual, show_qx)
}

// ---------------------------------------------------------------------------
// Both sides of the registered identities

/// `Σ_k q^{k²} [n-k, k]`
pub fn schur_lhs(n: usize) -> QPoly {
    let n = n as i64;
    (0..=n / 2).fold(QPoly::zero(), |acc, k| &acc + &qbinom(n - k, k).shift((k * k) as usize))
}

/// `Σ_j (-1)^j q^{j(5j-1)/2} [n, ⌊(n+5j)/2⌋]`
pub fn schur_rhs(n: usize) -> QPoly {
    let n = n as i64;
    let mut acc = QPoly::zero();
    for j in -(n / 5 + 1)..=(n / 5 + 1) {
        let b = qbinom(n, (n + 5 * j).div_euclid(2));
        if b.is_zero() {
            continue;
        }
        let term = b.shift((j * (5 * j - 1) / 2) as usize).scale(&int(sign(j)));
        acc = &acc + &term;
    }
    acc
}

/// `r_n(x,q)` from the sum over squared and adjacent q-binomials.
pub fn r_q(n: usize) -> QXPoly {
    let n = n as i64;
    let mut c = alloc::vec![QPoly::zero(); 2 * n as usize + 1];
    for j in 0..=n {
        c[2 * j as usize] = (&qbinom(n, j) * &qbinom(n, j)).shift((j * (j + 1)) as usize);
        if j >= 1 {
            c[2 * j as usize - 1] = (&qbinom(n, j) * &qbinom(n, j - 1)).shift((j * j) as usize);
        }
    }
    QXPoly::new(c)
}

/// `r_n(x,q)` from the single sum with floor-of-half indices.
pub fn r_q_floor_form(n: usize) -> QXPoly {
    let n = n as i64;
    QXPoly::new(
        (0..=2 * n)
            .map(|j| (&qbinom(n, j / 2) * &qbinom(n, (j + 1) / 2)).shift(((j + 1) * (j + 1) / 4) as usize))
            .collect(),
    )
}

/// `(x;q^k)_2 (qx²;q)_{2k-1} Σ_n [⌊(n+2k)/2⌋, k][⌊(n+1+2k)/2⌋, k] x^n` through `x^order`.
pub fn r_q_series_side(k: usize, order: usize) -> QXPoly {
    let ki = k as i64;
    let s = QXPoly::new(
        (0..=order as i64).map(|n| &qbinom((n + 2 * ki) / 2, ki) * &qbinom((n + 1 + 2 * ki) / 2, ki)).collect(),
    );
    let f = &qpochhammer(1, 0, k, 2) * &qpochhammer(2, 1, 1, 2 * k - 1);
    (&s * &f).truncate(order + 1)
}

/// `Σ_i q^{i(j+i-n)} [j+k-n, k-i][n, i] x^i`
pub fn b_q_closed(n: usize, j: usize, k: usize) -> QXPoly {
    let (n, j, k) = (n as i64, j as i64, k as i64);
    let mut c = Vec::new();
    for i in 0..=n {
        let e = i * (j + i - n);
        let b = &qbinom(j + k - n, k - i) * &qbinom(n, i);
        if b.is_zero() {
            c.push(QPoly::zero());
            continue;
        }
        assert!(e >= 0, "nonzero term has a nonnegative q-exponent");
        c.push(b.shift(e as usize));
    }
    QXPoly::new(c)
}

/// `(x;q)_{k+j+1} · D_q^j(f/(x;q)_{k+1}) / [j]!` through `x^order`, for a
/// polynomial `f` in `x`.
pub fn dq_transform(f: &QXPoly, j: usize, k: usize, order: usize) -> QXPoly {
    let series = (f * &inv_qpoch_series(k, order + j)).truncate(order + j + 1);
    let d = q_divided_derivative(&series, j);
    (&d * &qpoch_x(k + j + 1)).truncate(order + 1)
}

/// `b(n,j,x,q)` by its defining q-derivative expression.
pub fn b_q_series(n: usize, j: usize, k: usize, order: usize) -> QXPoly {
    dq_transform(&QXPoly::monomial(QPoly::one(), n), j, k, order)
}

/// `(s, q^s · Σ_ℓ (-1)^ℓ q^{C(ℓ+1,2) + ℓ(j-n)} [n,ℓ][k+j-ℓ, j] (x;q)_ℓ)`
pub fn b_q_pochhammer_form(n: usize, j: usize, k: usize) -> (usize, QXPoly) {
    let (ni, ji, ki) = (n as i64, j as i64, k as i64);
    let terms = (0..=ni)
        .map(|l| {
            let c = (&qbinom(ni, l) * &qbinom(ki + ji - l, ji)).scale(&int(sign(l)));
            (l * (l + 1) / 2 + l * (ji - ni), &lift_q(c) * &qpoch_x(l as usize))
        })
        .collect();
    laurent_q_sum(terms)
}

/// `(s, q^s · Σ_ℓ (-1)^ℓ [n,ℓ] q^{C(ℓ+1,2) - nℓ} (x;q)_ℓ)`
pub fn monomial_pochhammer_form(n: usize) -> (usize, QXPoly) {
    let ni = n as i64;
    let terms = (0..=ni)
        .map(|l| {
            let c = qbinom(ni, l).scale(&int(sign(l)));
            (l * (l + 1) / 2 - ni * l, &lift_q(c) * &qpoch_x(l as usize))
        })
        .collect();
    laurent_q_sum(terms)
}

/// `[k+j-ℓ, j] (x;q)_ℓ`, the right side of the q-derivative rule without its
/// power of `q`.
pub fn pochhammer_rule_rhs(l: usize, j: usize, k: usize) -> QXPoly {
    &lift_q(qbinom((k + j) as i64 - l as i64, j as i64)) * &qpoch_x(l)
}

/// The exponent `c` with `(x;q)_{k+j+1} D_q^j((x;q)_ℓ/(x;q)_{k+1})/[j]! =
/// q^c [k+j-ℓ, j] (x;q)_ℓ`, if one exists.
pub fn infer_c(j: usize, k: usize, l: usize) -> Option<usize> {
    let rhs = pochhammer_rule_rhs(l, j, k);
    let order = rhs.degree().unwrap_or(0) + 4;
    let lhs = dq_transform(&qpoch_x(l), j, k, order);
    if rhs.is_zero() {
        return lhs.is_zero().then_some(0);
    }
    let low = |p: &QXPoly| p.coeffs().iter().filter_map(QPoly::valuation).min();
    let c = low(&lhs)?.checked_sub(low(&rhs)?)?;
    (lhs == q_shift(&rhs, c)).then_some(c)
}

/// The exponent in the q-derivative rule is `c_j = jℓ` on the grid
/// `j, k <= 6`, `ℓ <= k` (beyond that both sides vanish or the rule fails).
pub fn c_exponent_report(j_max: i64, k_max: i64) -> ConjectureReport {
    let axes = alloc::vec![Axis::new("j", 0, j_max), Axis::new("k", 0, k_max), Axis::new("l", 0, k_max)];
    run_grid(
        "q:c_j",
        axes,
        |p| p[2] <= p[1],
        |p| {
            let (j, k, l) = (p[0] as usize, p[1] as usize, p[2] as usize);
            Outcome::compare(&Some(j * l), &infer_c(j, k, l))
        },
    )
    .with_note("c_j = j*l")
}

/// `Σ_i q^{i²} [n,i]^{power} x^i`
pub fn q_square_side(n: usize, power: u32) -> QXPoly {
    let n = n as i64;
    QXPoly::new((0..=n).map(|i| Ring::pow(&qbinom(n, i), power).shift((i * i) as usize)).collect())
}

/// `Σ_ℓ (-1)^ℓ q^{C(ℓ+1,2)} [n,ℓ][2n-ℓ, n] (x;q)_ℓ`
pub fn q_square_pochhammer_side(n: usize) -> QXPoly {
    let ni = n as i64;
    (0..=ni).fold(QXPoly::zero(), |acc, l| {
        let c = (&qbinom(ni, l) * &qbinom(2 * ni - l, ni)).scale(&int(sign(l))).shift((l * (l + 1) / 2) as usize);
        &acc + &(&lift_q(c) * &qpoch_x(l as usize))
    })
}

/// Both sides of the q-Narayana identity multiplied through by `[k][k+1]`:
/// `([k+1] Σ_i q^{i(i-1)} [k,i][k,i-1] x^i, [k] Σ_ℓ (-1)^ℓ q^{C(ℓ,2)} [k+1,ℓ][2k-ℓ,k] (x;q)_ℓ)`.
pub fn q_narayana_sides(k: usize) -> (QXPoly, QXPoly) {
    let ki = k as i64;
    let lhs = QXPoly::new(
        (0..=ki).map(|i| (&qbinom(ki, i) * &qbinom(ki, i - 1)).shift((i * (i - 1).max(0)) as usize)).collect(),
    );
    let rhs = (0..=ki).fold(QXPoly::zero(), |acc, l| {
        let c = (&qbinom(ki + 1, l) * &qbinom(2 * ki - l, ki)).scale(&int(sign(l))).shift((l * (l - 1) / 2) as usize);
        &acc + &(&lift_q(c) * &qpoch_x(l as usize))
    });
    (&lhs * &lift_q(q_int(ki + 1)), &rhs * &lift_q(q_int(ki)))
}

/// `(Σ_{i<k} q^{i(i-1)} [k-1,k-i][k-1,i] x^i, Σ_ℓ (-1)^ℓ q^{C(ℓ+1,2)-ℓ} [k-1,ℓ][2k-2-ℓ,k-2] (x;q)_ℓ)`
pub fn q_narayana_unscaled_sides(k: usize) -> (QXPoly, QXPoly) {
    let ki = k as i64;
    let lhs = QXPoly::new(
        (0..ki).map(|i| (&qbinom(ki - 1, ki - i) * &qbinom(ki - 1, i)).shift((i * (i - 1).max(0)) as usize)).collect(),
    );
    let rhs = (0..ki).fold(QXPoly::zero(), |acc, l| {
        let c = (&qbinom(ki - 1, l) * &qbinom(2 * ki - 2 - l, ki - 2))
            .scale(&int(sign(l)))
            .shift((l * (l - 1) / 2) as usize);
        &acc + &(&lift_q(c) * &qpoch_x(l as usize))
    });
    (lhs, rhs)
}

// ---------------------------------------------------------------------------
// Registry

const ORDER_246: usize = 16;

fn check_schur(p: &[i64]) -> Outcome {
    let n = p[0] as usize;
    Outcome::compare_with(&schur_lhs(n), &schur_rhs(n), show_q)
}

fn check_schur_q1(p: &[i64]) -> Outcome {
    let n = p[0] as usize;
    let fib = fib_seq(n + 1, &int(1), &int(1));
    let v = schur_rhs(n).eval(&int(1));
    Outcome::compare_with(&fib[n + 1], &v, |c| format!("{c}"))
        .and_then(|| Outcome::compare_with(&a_count(n, 3), &v, |c| format!("{c}")))
}

fn check_246(p: &[i64]) -> Outcome {
    let k = p[0] as usize;
    cmp_qx(&r_q(k - 1).truncate(ORDER_246 + 1), &r_q_series_side(k, ORDER_246))
}

fn check_246_q1(p: &[i64]) -> Outcome {
    let k = p[0] as usize;
    let at1 = |f: &QXPoly| f.eval_inner(&int(1));
    let classical = {
        let ki = k as i64;
        let s = IntPoly::new(
            (0..=ORDER_246 as i64).map(|n| binom((n + 2 * ki) / 2, ki) * binom((n + 1 + 2 * ki) / 2, ki)).collect(),
        );
        let f = &IntPoly::from_i64s(&[1, -1]).pow(2) * &IntPoly::from_i64s(&[1, 0, -1]).pow(2 * k as u32 - 1);
        (&s * &f).truncate(ORDER_246 + 1)
    };
    let show = |p: &IntPoly| p.pretty(&["x"]);
    Outcome::compare_with(&classical, &at1(&r_q_series_side(k, ORDER_246)), show)
        .and_then(|| Outcome::compare_with(&r_poly(k - 1), &at1(&r_q(k - 1)), show))
}

fn check_247(p: &[i64]) -> Outcome {
    let n = p[0] as usize;
    cmp_qx(&r_q(n), &r_q_floor_form(n))
}

fn bj_params(p: &[i64]) -> (usize, usize, usize) {
    (p[0] as usize, p[1] as usize, p[2] as usize)
}

fn b_admissible(p: &[i64]) -> bool {
    p[0] <= p[1] + p[2]
}

fn check_248(p: &[i64]) -> Outcome {
    let (n, j, k) = bj_params(p);
    let closed = b_q_closed(n, j, k);
    let order = closed.degree().unwrap_or(0) + 4;
    cmp_qx(&closed, &b_q_series(n, j, k, order))
}

fn check_248_q1(p: &[i64]) -> Outcome {
    let (n, j, k) = bj_params(p);
    let q1 = b_q_closed(n, j, k).eval_inner(&int(1));
    let order = n + 4;
    let classical = b_series(n as i64, j as i64, k as i64, order).to_poly();
    Outcome::compare_with(&classical, &q1.truncate(order + 1), |p| p.pretty(&["x"]))
}

fn check_249(p: &[i64]) -> Outcome {
    let (n, j, k) = bj_params(p);
    let lhs = b_q_closed(n, j, k);
    let a = &QXPoly::monomial(q_pow(j), 1) * &b_q_closed(n - 1, j, k);
    let b = &(&QXPoly::one() - &QXPoly::monomial(q_pow(k + j), 1)) * &b_q_closed(n - 1, j - 1, k);
    cmp_qx(&lhs, &(&a + &b))
}

fn check_250(p: &[i64]) -> Outcome {
    let n = p[0] as usize;
    let (s, rhs) = monomial_pochhammer_form(n);
    cmp_qx(&QXPoly::monomial(q_pow(s), n), &rhs)
}

fn check_251(p: &[i64]) -> Outcome {
    let (j, k, l) = (p[0] as usize, p[1] as usize, p[2] as usize);
    let rhs = q_shift(&pochhammer_rule_rhs(l, j, k), j * l);
    let order = rhs.degree().unwrap_or(0) + 4;
    cmp_qx(&rhs, &dq_transform(&qpoch_x(l), j, k, order))
}

fn check_252(p: &[i64]) -> Outcome {
    let (n, j, k) = bj_params(p);
    let (s, rhs) = b_q_pochhammer_form(n, j, k);
    let order = rhs.degree().unwrap_or(0) + 4;
    cmp_qx(&rhs, &q_shift(&b_q_series(n, j, k, order), s))
}

fn check_253(p: &[i64]) -> Outcome {
    let (n, j, k) = bj_params(p);
    let (s, rhs) = b_q_pochhammer_form(n, j, k);
    cmp_qx(&rhs, &q_shift(&b_q_closed(n, j, k), s))
}

fn check_254(p: &[i64]) -> Outcome {
    let n = p[0] as usize;
    cmp_qx(&q_square_pochhammer_side(n), &q_square_side(n, 2))
}

fn check_254_printed(p: &[i64]) -> Outcome {
    let n = p[0] as usize;
    cmp_qx(&q_square_pochhammer_side(n), &q_square_side(n, 1))
}

fn check_255(p: &[i64]) -> Outcome {
    let (l, r) = q_narayana_sides(p[0] as usize);
    cmp_qx(&r, &l)
}

fn check_255_unscaled(p: &[i64]) -> Outcome {
    let (l, r) = q_narayana_unscaled_sides(p[0] as usize);
    cmp_qx(&r, &l)
}

const B_PARAMS: &[(&str, i64, i64)] = &[("n", 0, 6), ("j", 0, 6), ("k", 0, 6)];

static Q_REGISTRY: [IdentityDescriptor; 16] = [
    IdentityDescriptor {
        id: "q:eq1.6",
        summary: "Σ q^{k²}[n-k,k] = Σ_j (-1)^j q^{j(5j-1)/2}[n,⌊(n+5j)/2⌋]",
        params: &[("n", 0, 12)],
        admissible: always,
        check: check_schur,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq1.6_q1",
        summary: "q = 1 value of the Schur sum equals F_{n+1} = a(n,3)",
        params: &[("n", 0, 12)],
        admissible: always,
        check: check_schur_q1,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.46",
        summary: "(x;q^k)_2 (qx²;q)_{2k-1} Σ [⌊(n+2k)/2⌋,k][⌊(n+1+2k)/2⌋,k] x^n = r_{k-1}(x,q), through x^16",
        params: &[("k", 1, 4)],
        admissible: always,
        check: check_246,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.46_q1",
        summary: "q = 1 reduces both sides to the classical squared-binomial series identity",
        params: &[("k", 1, 3)],
        admissible: always,
        check: check_246_q1,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.47",
        summary: "floor-of-half form of r_n(x,q) equals the split sum",
        params: &[("n", 0, 6)],
        admissible: always,
        check: check_247,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.48",
        summary: "(x;q)_{k+j+1} D_q^j x^n / ([j]!(x;q)_{k+1}) = Σ q^{i(j+i-n)}[j+k-n,k-i][n,i] x^i, n <= j+k",
        params: B_PARAMS,
        admissible: b_admissible,
        check: check_248,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.48_q1",
        summary: "q = 1 value of b(n,j,x,q) equals the classical b(n,j,x)",
        params: B_PARAMS,
        admissible: b_admissible,
        check: check_248_q1,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.49",
        summary: "b(n,j) = q^j x b(n-1,j) + (1 - q^{k+j} x) b(n-1,j-1)",
        params: &[("n", 1, 6), ("j", 1, 6), ("k", 0, 6)],
        admissible: b_admissible,
        check: check_249,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.50",
        summary: "x^n = Σ (-1)^ℓ [n,ℓ] q^{C(ℓ+1,2)-nℓ} (x;q)_ℓ",
        params: &[("n", 0, 6)],
        admissible: always,
        check: check_250,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.51",
        summary: "D_q^j (x;q)_ℓ / ([j]!(x;q)_{k+1}) = q^{jℓ}[k+j-ℓ,j](x;q)_ℓ/(x;q)_{k+j+1}, ℓ <= k+j",
        params: &[("j", 0, 6), ("k", 0, 6), ("l", 0, 12)],
        admissible: |p| p[2] <= p[0] + p[1],
        check: check_251,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.52",
        summary: "q-derivative side equals Σ (-1)^ℓ q^{C(ℓ+1,2)+ℓ(j-n)}[n,ℓ][k+j-ℓ,j](x;q)_ℓ",
        params: B_PARAMS,
        admissible: b_admissible,
        check: check_252,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.53",
        summary: "Σ q^{i(j+i-n)}[j+k-n,k-i][n,i] x^i = Σ (-1)^ℓ q^{C(ℓ+1,2)+ℓ(j-n)}[n,ℓ][k+j-ℓ,j](x;q)_ℓ",
        params: B_PARAMS,
        admissible: b_admissible,
        check: check_253,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.54",
        summary: "Σ q^{i²}[n,i]² x^i = Σ (-1)^ℓ q^{C(ℓ+1,2)}[n,ℓ][2n-ℓ,n](x;q)_ℓ",
        params: &[("n", 0, 6)],
        admissible: always,
        check: check_254,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.54_printed",
        summary: "same with a single [n,i] on the left",
        params: &[("n", 0, 6)],
        admissible: always,
        check: check_254_printed,
        skip: Some("literal reading drops the square; the special case j = n = k of the preceding identity has [n,i]²"),
    },
    IdentityDescriptor {
        id: "q:eq2.55",
        summary: "q-Narayana form, both sides multiplied by [k][k+1]",
        params: &[("k", 1, 6)],
        admissible: always,
        check: check_255,
        skip: None,
    },
    IdentityDescriptor {
        id: "q:eq2.55_unscaled",
        summary: "the j = k-2, n = k-1 case before the substitution k -> k+1",
        params: &[("k", 2, 6)],
        admissible: always,
        check: check_255_unscaled,
        skip: None,
    },
];

pub fn q_identities() -> &'static [IdentityDescriptor] {
    &Q_REGISTRY
}

pub fn find_q_identity(id: &str) -> Result<&'static IdentityDescriptor> {
    let key = if id.starts_with("q:") { String::from(id) } else { format!("q:{id}") };
    Q_REGISTRY.iter().find(|d| d.id == key).ok_or_else(|| Error::UnknownIdentity(id.into()))
}

/// Run one registered identity over its full range (empty `params`) or at a
/// single parameter tuple.
pub fn q_identity_check(id: &str, params: &[i64]) -> Result<ConjectureReport> {
    let d = find_q_identity(id)?;
    if params.is_empty() {
        Ok(d.run())
    } else {
        d.run_at(params)
    }
}

/// Value of a q-polynomial at `q = 1`.
pub fn at_q1(p: &QPoly) -> BigInt {
    p.eval(&int(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::binom_u;
    use crate::report::Status;

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn qbinomials() {
        assert_eq!(qbinom(5, 0), QPoly::one());
        assert_eq!(qbinom(2, 1), qp(&[1, 1]));
        assert_eq!(qbinom(4, 2), qp(&[1, 1, 2, 1, 1]));
        assert_eq!(at_q1(&qbinom(4, 2)), int(6));
        assert!(qbinom(3, 4).is_zero() && qbinom(3, -1).is_zero() && qbinom(-2, 1).is_zero());
        let rows = qbinom_rows(16);
        for n in 0..=16usize {
            for k in 0..=n {
                let b = qbinom(n as i64, k as i64);
                assert_eq!(b, rows[n][k]);
                assert_eq!(at_q1(&b), binom_u(n, k));
                assert_eq!(b, qbinom(n as i64, (n - k) as i64));
                // product formula, cross-multiplied
                assert_eq!(&(&b * &q_factorial(k)) * &q_factorial(n - k), q_factorial(n));
            }
        }
    }

    #[test]
    fn pochhammer_and_derivative() {
        assert_eq!(qpoch_x(0), QXPoly::one());
        let p2 = QXPoly::new(alloc::vec![qp(&[1]), qp(&[-1, -1]), qp(&[0, 1])]);
        assert_eq!(qpoch_x(2), p2);
        assert_eq!(qpoch_x(3).eval_inner(&int(1)), IntPoly::from_i64s(&[1, -1]).pow(3));
        let x2 = QXPoly::monomial(QPoly::one(), 2);
        assert_eq!(q_derivative(&x2), QXPoly::monomial(qp(&[1, 1]), 1));
        assert!(q_derivative(&QXPoly::constant(qp(&[3, 1]))).is_zero());
        let x3 = QXPoly::monomial(QPoly::one(), 3);
        let twice = q_derivative(&q_derivative(&x3));
        assert_eq!(twice, QXPoly::monomial(&q_int(2) * &q_int(3), 1));
        assert_eq!(q_divided_derivative(&x3, 2), QXPoly::monomial(q_int(3), 1));
    }

    #[test]
    fn schur() {
        assert_eq!(schur_lhs(2), qp(&[1, 1]));
        assert_eq!(schur_rhs(2), qp(&[1, 1]));
        for n in 0..=12 {
            assert_eq!(schur_lhs(n), schur_rhs(n), "n={n}");
        }
    }

    #[test]
    fn registry_holds() {
        for d in q_identities() {
            let r = d.run();
            if d.skip.is_some() {
                assert_eq!(r.status, Status::Skipped, "{}", d.id);
            } else {
                assert!(r.passed(), "{} {:?}", d.id, r.witness);
            }
        }
        assert!(q_identity_check("eq2.54", &[3]).unwrap().passed());
        assert!(matches!(q_identity_check("q:eq9.9", &[]), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn printed_square_free_reading_fails() {
        let held: Vec<bool> = (0..=6).map(|n| check_254_printed(&[n]).holds()).collect();
        assert_eq!(&held[..2], &[true, true]);
        assert!(held[2..].iter().all(|h| !h));
    }

    #[test]
    fn c_exponent() {
        assert!(c_exponent_report(6, 6).passed());
        assert_eq!(infer_c(2, 3, 1), Some(2));
        assert_eq!(infer_c(0, 2, 2), Some(0));
    }

    #[test]
    fn b_range() {
        // the closed form stops agreeing with the q-derivative definition once n > j+k
        let (n, j, k) = (3, 1, 1);
        let closed = b_q_closed(n, j, k);
        assert!(closed.is_zero());
        assert!(!b_q_series(n, j, k, 8).is_zero());
    }
}
