//! Report-producing checks grouped into suites. Each [`Task`] is independent,
//! so callers may run them in any order or in parallel.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::classic::{catalan, fib_seq, fib_x2_seq, identities, lucas_x2_seq};
use crate::exactmath::{binom_u, int, IntPoly, Pretty, Ring};
use crate::formulas::{a_count, a_poly, audit_signed_sum, v_closed, v_trig_agrees};
use crate::genfun::{
    annihilate_check, central_binomials, central_binomials_even_strip, gf_numbers, gf_weighted, gf_z_reports,
    guess_cfinite, hankel_char_poly, p_degree_claims, reciprocal_divides, vj_property_check, vj_recurrence_check,
    vj_z_pipeline,
};
use crate::paths::{bounded_dyck, enumerate_strip, walk_counts, weight_poly_bruteforce};
use crate::qseries::{c_exponent_report, q_identities};
use crate::report::{run_grid, Axis, ConjectureReport, Outcome};

type Runner = Box<dyn Fn() -> ConjectureReport + Send + Sync>;

/// A deferred check; `id` matches the id of the report it produces (or its
/// prefix when one task yields several reports).
pub struct Task {
    pub id: String,
    run: Box<dyn Fn() -> Vec<ConjectureReport> + Send + Sync>,
}

impl Task {
    pub fn one(id: impl Into<String>, f: impl Fn() -> ConjectureReport + Send + Sync + 'static) -> Self {
        let f: Runner = Box::new(f);
        Task { id: id.into(), run: Box::new(move || vec![f()]) }
    }

    pub fn many(id: impl Into<String>, f: impl Fn() -> Vec<ConjectureReport> + Send + Sync + 'static) -> Self {
        Task { id: id.into(), run: Box::new(f) }
    }

    pub fn run(&self) -> Vec<ConjectureReport> {
        (self.run)()
    }
}

impl core::fmt::Debug for Task {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Task").field("id", &self.id).finish()
    }
}

/// Grid bounds for the suites. `nmax` caps every axis named `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub jmax: usize,
    pub kmax: usize,
    pub order: usize,
    pub nmax: Option<i64>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { jmax: 3, kmax: 4, order: 24, nmax: None }
    }
}

fn show_int(v: &BigInt) -> String {
    format!("{v}")
}

fn show_x(p: &IntPoly) -> String {
    p.pretty(&["x"])
}

fn show_t(p: &IntPoly) -> String {
    p.pretty(&["t"])
}

/// `|A_{n,k}|` by enumeration against the closed count.
pub fn count_oracle(n_max: i64, k_max: i64) -> ConjectureReport {
    let axes = vec![Axis::new("k", 0, k_max), Axis::new("n", 0, n_max)];
    run_grid(
        "oracle:counts",
        axes,
        |_| true,
        |p| {
            let (k, n) = (p[0] as usize, p[1] as usize);
            let enumerated = int(enumerate_strip(n, k).count() as i64);
            Outcome::compare_with(&enumerated, &a_count(n, k), show_int)
        },
    )
}

/// Brute-force extremal-point weight polynomial against the closed form.
pub fn weight_oracle(n_max: i64, k_max: i64) -> ConjectureReport {
    let axes = vec![Axis::new("k", 1, k_max), Axis::new("n", 0, n_max)];
    run_grid(
        "oracle:weights",
        axes,
        |_| true,
        |p| {
            let (k, n) = (p[0] as usize, p[1] as usize);
            match a_poly(n, k) {
                Ok(f) => Outcome::compare_with(&weight_poly_bruteforce(n, k), &f, show_t),
                Err(e) => Outcome::check(false, "polynomial", format!("{e}")),
            }
        },
    )
}

/// Closed forms for the strips 2, 3, 4 and the odd-strip boundary value.
pub fn closed_forms() -> Vec<ConjectureReport> {
    let fib = fib_seq(32, &int(1), &int(1));
    let two = int(2);
    let three = int(3);
    vec![
        run_grid(
            "closed:strip2",
            vec![Axis::new("n", 0, 30)],
            |_| true,
            |p| {
                let n = p[0] as usize;
                Outcome::compare_with(&Ring::pow(&two, (n / 2) as u32), &a_count(n, 2), show_int)
            },
        ),
        run_grid(
            "closed:strip3",
            vec![Axis::new("n", 0, 30)],
            |_| true,
            |p| {
                let n = p[0] as usize;
                Outcome::compare_with(&fib[n + 1], &a_count(n, 3), show_int)
            },
        ),
        run_grid(
            "closed:strip4",
            vec![Axis::new("n", 0, 15)],
            |_| true,
            |p| {
                let n = p[0] as usize;
                let pw = Ring::pow(&three, n as u32);
                Outcome::compare_with(&pw, &a_count(2 * n + 1, 4), show_int)
                    .and_then(|| Outcome::compare_with(&(&pw * &two), &a_count(2 * n + 2, 4), show_int))
            },
        ),
        run_grid(
            "closed:boundary",
            vec![Axis::new("k", 0, 8)],
            |_| true,
            |p| {
                let k = p[0] as usize;
                let want = binom_u(2 * k + 1, k) - int(1);
                Outcome::compare_with(&want, &a_count(2 * k + 1, 2 * k), show_int)
            },
        ),
    ]
}

/// Series of the weighted generating functions against the closed weights,
/// and the `t = 1` specialization against the count generating functions.
pub fn weighted_gf(k_max: i64, order: usize) -> ConjectureReport {
    let axes = vec![Axis::new("k", 1, k_max)];
    run_grid(
        "gf:weighted",
        axes,
        |_| true,
        |p| {
            let k = p[0] as usize;
            let g = match gf_weighted(k) {
                Ok(g) => g,
                Err(e) => return Outcome::check(false, "generating function", format!("{e}")),
            };
            let s = match g.series(order) {
                Ok(s) => s,
                Err(e) => return Outcome::check(false, "series", format!("{e}")),
            };
            let mut out = Outcome::Holds;
            for n in 0..=order {
                let want = a_poly(n, k).unwrap_or_else(|_| IntPoly::zero());
                out = Outcome::compare_with(&want, s.get(n), show_t);
                if !out.holds() {
                    return Outcome::check(false, format!("n={n}: {}", show_t(&want)), show_t(s.get(n)));
                }
            }
            let at1 = g.ratfunc.map(|c| c.eval(&int(1)));
            out.and_then(|| Outcome::check(at1.cross_eq(&gf_numbers(k).ratfunc), "t=1 equals count gf", "differs"))
        },
    )
}

/// Characteristic polynomials of the central-binomial Hankel matrices.
pub fn hankel(k_max: i64) -> ConjectureReport {
    let axes = vec![Axis::new("k", 0, k_max)];
    let mut report = run_grid(
        "hankel",
        axes,
        |_| true,
        |p| {
            let k = p[0] as usize;
            let f = fib_x2_seq(k + 2);
            let l = lucas_x2_seq(k + 1);
            let odd = &f[k + 2] - &(&IntPoly::var() * &f[k + 1]);
            let got = hankel_char_poly(&central_binomials(k), k + 1);
            let got_even = hankel_char_poly(&central_binomials_even_strip(k), k + 1);
            match (got, got_even) {
                (Ok(a), Ok(b)) => {
                    Outcome::compare_with(&odd, &a, show_x).and_then(|| Outcome::compare_with(&l[k + 1], &b, show_x))
                }
                _ => Outcome::check(false, "nonsingular minor", "singular"),
            }
        },
    );
    let small = hankel_char_poly(&central_binomials(1), 2).ok() == Some(IntPoly::from_i64s(&[1, -1, -1]))
        && hankel_char_poly(&central_binomials_even_strip(2), 3).ok() == Some(IntPoly::from_i64s(&[1, 0, -3]));
    if !small && report.passed() {
        report.status = crate::report::Status::Counterexample;
        report.witness = Some(crate::report::Witness {
            params: Vec::new(),
            expected: "1 - x - x^2 and 1 - 3*x^2".into(),
            actual: "worked examples differ".into(),
        });
    }
    report
}

/// Closed walk counts, their cosine form, and bounded Dyck paths.
pub fn walks(n_exact: i64, n_trig: i64, k_max: i64) -> Vec<ConjectureReport> {
    let closed = run_grid(
        "walks:closed",
        vec![Axis::new("k", 0, k_max), Axis::new("n", 0, n_exact)],
        |_| true,
        |p| {
            let (k, n) = (p[0] as usize, p[1] as usize);
            let dp = walk_counts(n, k);
            let mut out = Outcome::Holds;
            for m in 1..=k + 1 {
                let v = v_closed(n, m, k).unwrap_or_else(|_| int(-1));
                out = out.and_then(|| Outcome::compare_with(&dp[m - 1], &v, show_int));
            }
            out
        },
    );
    let trig = run_grid(
        "walks:trig",
        vec![Axis::new("k", 0, k_max), Axis::new("n", 0, n_trig)],
        |_| true,
        |p| {
            let (k, n) = (p[0] as usize, p[1] as usize);
            let bad = (1..=k + 1).find(|&m| !v_trig_agrees(n, m, k, 1e-6).unwrap_or(false));
            Outcome::check(bad.is_none(), "relative error < 1e-6", format!("m={}", bad.unwrap_or(0)))
        },
    );
    let dyck = run_grid(
        "walks:dyck",
        vec![Axis::new("k", 0, k_max), Axis::new("n", 0, n_exact / 2)],
        |_| true,
        |p| {
            let (k, n) = (p[0] as usize, p[1] as usize);
            let b = bounded_dyck(2 * n, k).unwrap_or_else(|_| int(-1));
            let dp = if k == 0 {
                if n == 0 {
                    int(1)
                } else {
                    int(0)
                }
            } else {
                walk_counts(2 * n, k)[0].clone()
            };
            let out = Outcome::compare_with(&dp, &b, show_int);
            if n <= k {
                out.and_then(|| Outcome::compare_with(&catalan(n), &b, show_int))
            } else {
                out
            }
        },
    );
    vec![closed, trig, dyck]
}

/// Recurrences guessed from `3k+10` terms divide the count denominators.
pub fn guesser(k_max: i64) -> ConjectureReport {
    run_grid(
        "guesser",
        vec![Axis::new("k", 0, k_max)],
        |_| true,
        |p| {
            let k = p[0] as usize;
            let n = 3 * k + 10;
            let s: Vec<BigInt> = (0..n).map(|i| a_count(i, k)).collect();
            match guess_cfinite(&s, (n - 4) / 2, 0) {
                Ok(Some(r)) => {
                    Outcome::check(reciprocal_divides(&r, gf_numbers(k).den()), "divides the denominator", r.pretty())
                }
                Ok(None) => Outcome::check(false, "a recurrence", "none found"),
                Err(e) => Outcome::check(false, "a recurrence", format!("{e}")),
            }
        },
    )
}

/// Every report of the p_j pipeline for `1 <= j <= j_max`.
pub fn p_pipeline(j_max: usize) -> Vec<ConjectureReport> {
    let mut out = Vec::new();
    for j in 1..=j_max {
        let z_trunc = p_degree_claims(j).0 + 2;
        match vj_z_pipeline(j, z_trunc) {
            Ok(r) => out.extend(r.reports),
            Err(e) => out.push(run_grid(
                &format!("conj2:polynomial:j{j}"),
                vec![Axis::new("j", j as i64, j as i64)],
                |_| true,
                |_| Outcome::check(false, "pipeline", format!("{e}")),
            )),
        }
    }
    out
}

fn cap_n(params: &'static [(&'static str, i64, i64)], nmax: Option<i64>) -> Vec<Axis> {
    params
        .iter()
        .map(|&(name, lo, hi)| Axis::new(name, lo, if name == "n" { nmax.map_or(hi, |m| hi.min(m)) } else { hi }))
        .collect()
}

fn registry_task(d: &'static crate::report::IdentityDescriptor, nmax: Option<i64>) -> Task {
    Task::one(d.id, move || {
        if let Some(why) = d.skip {
            return ConjectureReport::skipped(d.id, d.axes(), why);
        }
        run_grid(d.id, cap_n(d.params, nmax), d.admissible, d.check)
    })
}

/// Classical identity registry plus the generating-function theorems.
pub fn identity_tasks(limits: Limits) -> Vec<Task> {
    let mut tasks: Vec<Task> = identities().iter().map(|d| registry_task(d, limits.nmax)).collect();
    let order = limits.order;
    tasks.push(Task::one("gf:weighted", move || weighted_gf(6, order)));
    tasks.push(Task::one("hankel", || hankel(5)));
    tasks.push(Task::many("annihilate", || (1..=6).map(|k| annihilate_check(k, 25)).collect()));
    tasks.push(Task::one("guesser", || guesser(6)));
    tasks
}

/// Every registered q-identity plus the inferred q-derivative exponent.
pub fn q_tasks(limits: Limits) -> Vec<Task> {
    let mut tasks: Vec<Task> = q_identities().iter().map(|d| registry_task(d, limits.nmax)).collect();
    tasks.push(Task::one("q:c_j", || c_exponent_report(6, 6)));
    tasks
}

/// Conjecture pipelines on the `j <= jmax`, `k <= kmax` grid.
pub fn conjecture_tasks(limits: Limits) -> Vec<Task> {
    let Limits { jmax, kmax, order, .. } = limits;
    let mut tasks = vec![Task::one("conj1", move || vj_property_check(jmax, kmax))];
    for k in 0..=kmax {
        tasks.push(Task::one(format!("vj_recurrence:k{k}"), move || vj_recurrence_check(k, jmax + 2)));
    }
    tasks.push(Task::many("conj2", move || p_pipeline(jmax)));
    tasks.push(Task::many("conj4", move || gf_z_reports(kmax.min(5), order)));
    tasks.push(Task::many("signed_sum", || signed_sum_reports(12, 5)));
    tasks
}

/// The signed-sum audit. The variant is the object of the audit rather than
/// a claim, so its outcome is folded into a SKIPPED verdict report.
pub fn signed_sum_reports(n_max: i64, k_max: i64) -> Vec<ConjectureReport> {
    let a = audit_signed_sum(n_max, k_max);
    let mut note = format!("verdict: {}", a.verdict());
    if let Some(w) = &a.variant.witness {
        let at: Vec<String> = w.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        note.push_str(&format!("; variant fails at {} (expected {}, got {})", at.join(" "), w.expected, w.actual));
    }
    let verdict = ConjectureReport::skipped("signed_sum:verdict", a.variant.grid.clone(), &note);
    vec![a.z_minus_one, a.printed, verdict]
}

/// Enumeration oracles, closed forms and walks.
pub fn oracle_tasks() -> Vec<Task> {
    vec![
        Task::one("oracle:counts", || count_oracle(16, 9)),
        Task::one("oracle:weights", || weight_oracle(14, 8)),
        Task::many("closed", closed_forms),
        Task::many("walks", || walks(20, 30, 8)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grids_pass() {
        assert!(count_oracle(8, 5).passed());
        assert!(weight_oracle(8, 4).passed());
        assert!(closed_forms().iter().all(ConjectureReport::passed));
        assert!(weighted_gf(4, 12).passed());
        assert!(hankel(3).passed());
        assert!(walks(10, 12, 4).iter().all(ConjectureReport::passed));
        assert!(guesser(3).passed());
        assert_eq!(p_pipeline(2).len(), 10);
    }

    #[test]
    fn nmax_caps_axes() {
        let d = crate::qseries::find_q_identity("eq1.6").unwrap();
        let r = registry_task(d, Some(4)).run();
        assert_eq!(r[0].grid[0].hi, 4);
        assert_eq!(r[0].cells, 5);
    }
}
