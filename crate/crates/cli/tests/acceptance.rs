//! The twelve acceptance criteria, one line each. Runs without the libtest
//! harness so the lines are always printed, in order.

use std::time::{Duration, Instant};

use stripcomb::oeis::{bundled, default_generator, oeis_check};
use stripcomb::render::report_json;
use stripcomb_core::exactmath::{int, BiPoly, IntPoly};
use stripcomb_core::genfun::{gf_z_reports, p_degree_claims, vj_property_check, vj_z_pipeline};
use stripcomb_core::qseries::{c_exponent_report, q_identities};
use stripcomb_core::report::{run_grid, ConjectureReport};
use stripcomb_core::suite::{
    closed_forms, count_oracle, guesser, hankel, p_pipeline, signed_sum_reports, walks, weight_oracle, weighted_gf,
};

struct Verdict {
    ok: bool,
    detail: String,
}

fn reports(rs: Vec<ConjectureReport>) -> Verdict {
    let failed: Vec<String> = rs.iter().filter(|r| !r.passed()).map(|r| r.id.clone()).collect();
    let cells: u64 = rs.iter().map(|r| r.cells).sum();
    if failed.is_empty() {
        Verdict { ok: true, detail: format!("{} reports, {cells} cells", rs.len()) }
    } else {
        let first = rs.iter().find(|r| !r.passed()).and_then(|r| r.witness.as_ref());
        let w = first.map(|w| format!("; {w:?}")).unwrap_or_default();
        Verdict { ok: false, detail: format!("failed: {}{w}", failed.join(", ")) }
    }
}

fn registry() -> Vec<ConjectureReport> {
    q_identities()
        .iter()
        .map(|d| match d.skip {
            Some(why) => ConjectureReport::skipped(d.id, d.axes(), why),
            None => run_grid(d.id, d.axes(), d.admissible, d.check),
        })
        .collect()
}

fn eulerian_upto_five() -> Verdict {
    let mut rs = p_pipeline(3);
    let mut p = Vec::new();
    for j in 1..=5 {
        let r = vj_z_pipeline(j, p_degree_claims(j).0 + 2).expect("pipeline runs");
        if j > 3 {
            rs.extend(r.reports.iter().filter(|r| r.id.starts_with("conj2:eulerian")).cloned());
        }
        p.push(r.p);
    }
    let p1_is_one = p[0].as_ref().is_some_and(|p| *p == BiPoly::one());
    let p2_at_z1 = p[1].as_ref().map(|p| p.transpose().eval_inner(&int(1)));
    let mut v = reports(rs);
    if !p1_is_one || p2_at_z1 != Some(IntPoly::from_i64s(&[1, 0, 0, -1])) {
        v = Verdict { ok: false, detail: format!("p1 = 1: {p1_is_one}; p2(x,1) = {p2_at_z1:?}") };
    }
    v
}

fn oeis_prefixes() -> Verdict {
    let rs = gf_z_reports(5, 24);
    let mut notes = Vec::new();
    for a in ["A001045", "A011782", "A099163", "A005578"] {
        let f = bundled(a).expect("bundled fixture");
        let (g, shift) = default_generator(a).expect("known A-number");
        let m = oeis_check(&f, &g, shift, 20).expect("fixture long enough");
        if !m.matches() {
            notes.push(format!("{a} {:?}", m.first_mismatch));
        }
    }
    let mut v = reports(rs);
    if !notes.is_empty() {
        v = Verdict { ok: false, detail: notes.join("; ") };
    } else {
        v.detail.push_str("; 4 OEIS prefixes match");
    }
    v
}

fn signed_sum_artifact() -> Verdict {
    let rs = signed_sum_reports(12, 5);
    for r in &rs {
        println!("     {}", report_json(r));
    }
    let verdict = rs.iter().find(|r| r.id == "signed_sum:verdict").and_then(|r| r.note.clone());
    Verdict { ok: verdict.is_some() && rs[0].passed(), detail: verdict.unwrap_or_else(|| "no verdict".into()) }
}

fn main() {
    type Check = fn() -> Verdict;
    let criteria: [(&str, u64, Check); 12] = [
        ("count oracle", 30, || reports(vec![count_oracle(16, 9)])),
        ("weight oracle", 60, || reports(vec![weight_oracle(14, 8)])),
        ("closed forms", 10, || reports(closed_forms())),
        ("weighted generating functions", 30, || reports(vec![weighted_gf(6, 30)])),
        ("hankel characteristic polynomials", 30, || reports(vec![hankel(5)])),
        ("walks", 30, || reports(walks(20, 30, 8))),
        ("v_j properties", 120, || reports(vec![vj_property_check(4, 6)])),
        ("p_j pipeline and eulerian reduction", 120, eulerian_upto_five),
        ("two-variable generating functions and OEIS", 60, oeis_prefixes),
        ("q-identities", 60, || {
            let mut rs = registry();
            rs.push(c_exponent_report(6, 6));
            reports(rs)
        }),
        ("recurrence guesser", 30, || reports(vec![guesser(6)])),
        ("signed-sum audit", 30, signed_sum_artifact),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut v = check();
        let took = t.elapsed();
        if took > Duration::from_secs(*budget) {
            v.ok = false;
            v.detail.push_str(&format!("; over budget of {budget}s"));
        }
        failed += usize::from(!v.ok);
        let tag = if v.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {:02} {name}: {} ({} ms)", i + 1, v.detail, took.as_millis());
    }
    let total = start.elapsed();
    println!("acceptance: {}/12 passed in {} ms", 12 - failed, total.as_millis());
    if failed > 0 || total > Duration::from_secs(300) {
        std::process::exit(1);
    }
}
