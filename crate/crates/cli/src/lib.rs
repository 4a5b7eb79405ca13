//! Command-line front end for `stripcomb-core`.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad usage.

pub mod args;
pub mod oeis;
pub mod parallel;
pub mod render;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use anyhow::{Context, Result};
use clap::Parser;
use num_bigint::BigInt;
use serde_json::{json, Value};
use stripcomb_core::exactmath::{int, IntPoly, Pretty};
use stripcomb_core::formulas::{a_count, a_poly, a_poly_z, audit_signed_sum};
use stripcomb_core::genfun::{
    gf_corridor_t, gf_numbers, gf_weighted, gf_z, guess_cfinite, guess_cfinite_t, reciprocal_divides,
    u_formula_readings, ZForm,
};
use stripcomb_core::paths::{corridor_table, corridor_table_t, enumerate_strip};
use stripcomb_core::report::ConjectureReport;
use stripcomb_core::suite::{conjecture_tasks, identity_tasks, oracle_tasks, q_tasks, Limits, Task};

use args::*;
use render::{big, report_csv_row, report_json, report_text, REPORT_CSV_HEADER, TABLE_CSV_HEADER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Bad flag values that clap cannot reject on its own.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(UsageError(msg.into()).into())
}

/// Core errors raised by out-of-range flags count as usage errors.
fn core<T>(r: stripcomb_core::Result<T>) -> Result<T> {
    r.map_err(|e| UsageError(e.to_string()).into())
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
    jobs: usize,
}

impl Io<'_> {
    fn line(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref())?;
        Ok(())
    }

    fn json(&mut self, v: &Value) -> Result<()> {
        self.line(serde_json::to_string_pretty(v)?)
    }

    fn warn(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.err, "warning: {}", s.as_ref());
    }
}

/// Parse `args` (including the program name) and run. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut io = Io { out, err, format: cli.format, jobs: cli.jobs as usize };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let code = if e.downcast_ref::<UsageError>().is_some() { EXIT_USAGE } else { EXIT_FAIL };
            let _ = writeln!(io.err, "error: {e:#}");
            code
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> Result<i32> {
    match cmd {
        Command::Count(a) => cmd_count(a, io),
        Command::Poly(a) => cmd_poly(a, io),
        Command::Series(a) => cmd_series(a, io),
        Command::Enumerate(a) => cmd_enumerate(a, io),
        Command::Table(a) => cmd_table(a, io),
        Command::Verify(a) => cmd_verify(a, io),
        Command::Guess(a) => cmd_guess(a, io),
        Command::Oeis(a) => cmd_oeis(a, io),
        Command::Audit(a) => cmd_audit(a, io),
    }
}

fn unit_z(z: i64) -> Result<bool> {
    match z {
        1 => Ok(false),
        -1 => Ok(true),
        _ => usage(format!("--z must be 1 or -1, got {z}")),
    }
}

fn cmd_count(a: CountArgs, io: &mut Io) -> Result<i32> {
    let value: BigInt = match (a.t, a.z) {
        (None, None) => a_count(a.n, a.k),
        (Some(t), None) => core(a_poly(a.n, a.k))?.eval(&int(t)),
        (t, Some(z)) => {
            let v = core(a_poly_z(a.n, a.k))?;
            let at_z = if unit_z(z)? { v.at_z_minus_one() } else { v.at_z_one() };
            at_z.eval(&int(t.unwrap_or(1)))
        }
    };
    match io.format {
        Format::Text => io.line(value.to_string())?,
        Format::Json => {
            let mut m = json!({"n": a.n, "k": a.k});
            if let Some(t) = a.t {
                m["t"] = json!(t);
            }
            if let Some(z) = a.z {
                m["z"] = json!(z);
            }
            m["value"] = big(&value);
            io.json(&m)?
        }
        Format::Csv => {
            io.line("n,k,value")?;
            io.line(format!("{},{},{value}", a.n, a.k))?
        }
    }
    Ok(EXIT_OK)
}

fn coeff_rows(n: usize, p: &IntPoly) -> Vec<String> {
    if p.is_zero() {
        return vec![format!("{n},0,0")];
    }
    p.coeffs().iter().enumerate().map(|(j, c)| format!("{n},{j},{c}")).collect()
}

fn coeffs_json(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(big).collect())
}

fn cmd_poly(a: PolyArgs, io: &mut Io) -> Result<i32> {
    if a.z {
        let v = core(a_poly_z(a.n, a.k))?;
        match io.format {
            Format::Text => io.line(v.pretty())?,
            Format::Json => {
                let terms: Vec<Value> =
                    v.value.terms().iter().map(|(e, c)| json!({"z": e, "t": coeffs_json(c)})).collect();
                io.json(&json!({"n": a.n, "k": a.k, "poly": v.pretty(), "terms": terms}))?
            }
            Format::Csv => {
                io.line("n,z,j,value")?;
                for (e, c) in &v.value.terms() {
                    for (j, x) in c.coeffs().iter().enumerate() {
                        io.line(format!("{},{e},{j},{x}", a.n))?;
                    }
                }
            }
        }
        return Ok(EXIT_OK);
    }
    let p = core(a_poly(a.n, a.k))?;
    match io.format {
        Format::Text => io.line(p.pretty(&["t"]))?,
        Format::Json => io.json(&json!({"n": a.n, "k": a.k, "poly": p.pretty(&["t"]), "coeffs": coeffs_json(&p)}))?,
        Format::Csv => {
            io.line(TABLE_CSV_HEADER)?;
            for r in coeff_rows(a.n, &p) {
                io.line(r)?;
            }
        }
    }
    Ok(EXIT_OK)
}

enum Rows {
    Ints(Vec<BigInt>),
    Polys(Vec<IntPoly>),
}

fn cmd_series(a: SeriesArgs, io: &mut Io) -> Result<i32> {
    let (label, rows) = match a.gf {
        GfKind::Numbers => {
            let g = gf_numbers(a.strip);
            (g.label.clone(), Rows::Ints(core(g.series(a.order))?.into_coeffs()))
        }
        GfKind::Weighted => {
            let g = core(gf_weighted(a.strip))?;
            (g.label.clone(), Rows::Polys(core(g.series(a.order))?.into_coeffs()))
        }
        GfKind::Corridor => {
            let g = gf_corridor_t(a.strip);
            (g.label.clone(), Rows::Polys(core(g.series(a.order))?.into_coeffs()))
        }
        GfKind::Z1 => {
            let form = if a.strip % 2 == 0 { ZForm::Prop5Z1Even } else { ZForm::Prop5Z1Odd };
            let g = core(gf_z(a.strip, form))?;
            let s = core(g.series(a.order))?.into_coeffs();
            (g.label.clone(), Rows::Ints(s.iter().map(|c| c.eval(&IntPoly::one()).eval(&int(1))).collect()))
        }
    };
    let rows = match (rows, a.t) {
        (Rows::Polys(p), Some(t)) => Rows::Ints(p.iter().map(|c| c.eval(&int(t))).collect()),
        (Rows::Ints(_), Some(_)) => return usage("--t only applies to t-weighted series"),
        (r, None) => r,
    };
    match io.format {
        Format::Text => match &rows {
            Rows::Ints(v) => {
                for (n, c) in v.iter().enumerate() {
                    io.line(format!("{n}: {c}"))?;
                }
            }
            Rows::Polys(v) => {
                for (n, c) in v.iter().enumerate() {
                    io.line(format!("{n}: {}", c.pretty(&["t"])))?;
                }
            }
        },
        Format::Json => {
            let rows = match &rows {
                Rows::Ints(v) => v.iter().map(big).collect::<Vec<_>>(),
                Rows::Polys(v) => v.iter().map(coeffs_json).collect(),
            };
            io.json(&json!({"gf": label, "strip": a.strip, "order": a.order, "t": a.t, "rows": rows}))?
        }
        Format::Csv => {
            io.line(TABLE_CSV_HEADER)?;
            match &rows {
                Rows::Ints(v) => {
                    for (n, c) in v.iter().enumerate() {
                        io.line(format!("{n},0,{c}"))?;
                    }
                }
                Rows::Polys(v) => {
                    for (n, c) in v.iter().enumerate() {
                        for r in coeff_rows(n, c) {
                            io.line(r)?;
                        }
                    }
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(a: EnumerateArgs, io: &mut Io) -> Result<i32> {
    if a.n > 24 {
        return usage("--n above 24 would list more than 16 million paths");
    }
    let paths: Vec<_> = enumerate_strip(a.n, a.k).collect();
    match io.format {
        Format::Text => {
            for p in &paths {
                let w = p.weight();
                io.line(format!("{p} e={} iota={}", w.e, w.iota))?;
            }
        }
        Format::Json => {
            let v: Vec<Value> = paths
                .iter()
                .map(|p| {
                    let w = p.weight();
                    json!({"path": p.to_string(), "e": w.e, "iota": w.iota})
                })
                .collect();
            io.json(&json!({"n": a.n, "k": a.k, "count": paths.len(), "paths": v}))?
        }
        Format::Csv => {
            io.line("path,e,iota")?;
            for p in &paths {
                let w = p.weight();
                io.line(format!("{p},{},{}", w.e, w.iota))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_table(a: TableArgs, io: &mut Io) -> Result<i32> {
    let rows: Vec<Vec<IntPoly>> = if a.t || a.k.is_some() {
        let t = corridor_table_t(a.n, a.k);
        if a.t {
            t
        } else {
            t.into_iter().map(|r| r.iter().map(|c| IntPoly::constant(c.eval(&int(1)))).collect()).collect()
        }
    } else {
        corridor_table(a.n).into_iter().map(|r| r.into_iter().map(IntPoly::constant).collect()).collect()
    };
    let show = |c: &IntPoly| if a.t { c.pretty(&["t"]) } else { c.coeff(0).to_string() };
    match io.format {
        Format::Text => {
            for r in &rows {
                io.line(r.iter().map(show).collect::<Vec<_>>().join(" "))?;
            }
        }
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|r| Value::Array(r.iter().map(|c| if a.t { json!(show(c)) } else { big(&c.coeff(0)) }).collect()))
                .collect();
            io.json(&json!({"n_max": a.n, "bound": a.k, "rows": v}))?
        }
        Format::Csv => {
            io.line(TABLE_CSV_HEADER)?;
            for (n, r) in rows.iter().enumerate() {
                for (j, c) in r.iter().enumerate() {
                    io.line(format!("{n},{j},{}", render::csv_field(&show(c))))?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

/// Task list for a suite; `all` is the union in a fixed order.
pub fn suite_tasks(suite: Suite, limits: Limits) -> Vec<Task> {
    match suite {
        Suite::Identities => identity_tasks(limits),
        Suite::Q => q_tasks(limits),
        Suite::Conjectures => conjecture_tasks(limits),
        Suite::Oracles => oracle_tasks(),
        Suite::All => {
            let mut t = oracle_tasks();
            t.extend(identity_tasks(limits));
            t.extend(q_tasks(limits));
            t.extend(conjecture_tasks(limits));
            t
        }
    }
}

fn emit_reports(reports: &[ConjectureReport], io: &mut Io) -> Result<()> {
    match io.format {
        Format::Text => {
            for r in reports {
                io.line(report_text(r))?;
            }
            let bad = reports.iter().filter(|r| !r.passed()).count();
            io.line(format!("{} reports, {bad} counterexamples", reports.len()))?;
        }
        Format::Json => io.json(&Value::Array(reports.iter().map(report_json).collect()))?,
        Format::Csv => {
            io.line(REPORT_CSV_HEADER)?;
            for r in reports {
                io.line(report_csv_row(r))?;
            }
        }
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs, io: &mut Io) -> Result<i32> {
    let limits = Limits { jmax: a.jmax, kmax: a.kmax, order: a.order, nmax: a.nmax };
    let tasks = suite_tasks(a.suite, limits);
    let reports = parallel::run_tasks(&tasks, io.jobs);
    emit_reports(&reports, io)?;
    if let Some(path) = &a.report {
        let body = serde_json::to_string_pretty(&Value::Array(reports.iter().map(report_json).collect()))?;
        let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(std::path::Path::new("."));
        let name = path.file_name().context("--report needs a file name")?;
        oeis::write_atomic(dir, &name.to_string_lossy(), &body)?;
    }
    Ok(if render::any_counterexample(&reports) { EXIT_FAIL } else { EXIT_OK })
}

fn cmd_guess(a: GuessArgs, io: &mut Io) -> Result<i32> {
    let n = a.terms.unwrap_or(3 * a.k + 10);
    let max_order = n.saturating_sub(4) / 2;
    let (rec, divides, reciprocal) = if a.t {
        let seq: Vec<IntPoly> = (0..n).map(|i| core(a_poly(i, a.k))).collect::<Result<_>>()?;
        let rec = core(guess_cfinite_t(&seq, max_order, 0))?;
        let recip = rec.as_ref().and_then(|r| r.reciprocal_over_t()).map(|p| p.render(&["x", "t"], false));
        (rec, None, recip)
    } else {
        let seq: Vec<BigInt> = (0..n).map(|i| a_count(i, a.k)).collect();
        let rec = core(guess_cfinite(&seq, max_order, 0))?;
        let divides = rec.as_ref().map(|r| reciprocal_divides(r, gf_numbers(a.k).den()));
        let recip = rec.as_ref().and_then(|r| r.reciprocal_rational()).map(|p| render::rational_poly(p.coeffs(), "x"));
        (rec, divides, recip)
    };
    let Some(rec) = rec else {
        let _ = writeln!(io.err, "no recurrence of order <= {max_order} fits {n} terms");
        return Ok(EXIT_FAIL);
    };
    match io.format {
        Format::Text | Format::Csv => {
            io.line(rec.pretty())?;
            if let Some(r) = &reciprocal {
                io.line(format!("characteristic: {r}"))?;
            }
            if let Some(d) = divides {
                io.line(format!("divides count denominator: {d}"))?;
            }
        }
        Format::Json => io.json(&json!({
            "k": a.k, "terms": n, "order": rec.order, "offset": rec.offset,
            "recurrence": rec.pretty(), "characteristic": reciprocal, "divides_denominator": divides,
        }))?,
    }
    Ok(if divides == Some(false) { EXIT_FAIL } else { EXIT_OK })
}

fn cmd_oeis(a: OeisArgs, io: &mut Io) -> Result<i32> {
    let id = oeis::normalize(&a.a_number).map_err(|e| UsageError(e.to_string()))?;
    let (generator, shift) = match (&a.gen, oeis::default_generator(&id)) {
        (Some(g), d) => {
            (g.parse().map_err(|e: anyhow::Error| UsageError(e.to_string()))?, a.shift.or(d.map(|d| d.1)).unwrap_or(0))
        }
        (None, Some((g, s))) => (g, a.shift.unwrap_or(s)),
        (None, None) => return usage(format!("no built-in generator for {id}; pass --gen")),
    };
    let cache = oeis::cache_dir(a.cache_dir.as_deref());
    let mut warnings = Vec::new();
    let fixture = oeis::load(&id, a.online, cache.as_deref(), &mut |w| warnings.push(w))?;
    for w in warnings {
        io.warn(w);
    }
    let m = oeis::oeis_check(&fixture, &generator, shift, a.terms)?;
    match io.format {
        Format::Text | Format::Csv => {
            let verdict = match &m.first_mismatch {
                None => "match".to_string(),
                Some((i, o, c)) => format!("mismatch at index {i}: oeis {o}, computed {c}"),
            };
            io.line(format!(
                "{} vs {} (shift {}, {} terms, {}): {verdict}",
                m.a_number,
                m.generator,
                m.shift,
                m.compared,
                m.source.as_str()
            ))?
        }
        Format::Json => {
            let mismatch =
                m.first_mismatch.as_ref().map(|(i, o, c)| json!({"index": i, "oeis": big(o), "computed": big(c)}));
            io.json(&json!({
                "a_number": m.a_number, "generator": m.generator.to_string(), "shift": m.shift,
                "source": m.source.as_str(), "fetched_at": m.fetched_at, "compared": m.compared,
                "match": m.matches(), "first_mismatch": mismatch,
            }))?
        }
    }
    Ok(if m.matches() { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_audit(a: AuditArgs, io: &mut Io) -> Result<i32> {
    if a.nmax < 0 || a.kmax < 1 {
        return usage("--nmax must be >= 0 and --kmax >= 1");
    }
    let audit = audit_signed_sum(a.nmax, a.kmax);
    let readings: Vec<_> = u_formula_readings(4).into_iter().filter(|u| u.matches == u.cells).collect();
    match io.format {
        Format::Text | Format::Csv => {
            io.line(format!("signed sum: {}", audit.verdict()))?;
            for r in [&audit.z_minus_one, &audit.printed, &audit.variant] {
                io.line(report_text(r))?;
            }
            for u in &readings {
                io.line(format!(
                    "u reading: [x^(i{:+})] of {}v_{}(x,2k) matches all {} cells",
                    u.offset,
                    if u.reversed { "reversed " } else { "" },
                    u.j,
                    u.cells
                ))?;
            }
        }
        Format::Json => {
            let u: Vec<Value> = readings
                .iter()
                .map(|u| json!({"j": u.j, "offset": u.offset, "reversed": u.reversed, "cells": u.cells}))
                .collect();
            io.json(&json!({
                "signed_sum": {
                    "verdict": audit.verdict(),
                    "reports": [report_json(&audit.z_minus_one), report_json(&audit.printed), report_json(&audit.variant)],
                },
                "u_readings": u,
            }))?
        }
    }
    Ok(if audit.z_minus_one.passed() { EXIT_OK } else { EXIT_FAIL })
}
