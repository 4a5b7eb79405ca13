use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};
use stripcomb_core::report::{ConjectureReport, Status};

const MAX_SAFE: i64 = (1 << 53) - 1;

/// A JSON number when it survives a round trip through f64, else a string.
pub fn big(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) if (-MAX_SAFE..=MAX_SAFE).contains(&i) => Value::from(i),
        _ => Value::String(v.to_string()),
    }
}

fn pairs(p: &[(String, i64)]) -> Value {
    Value::Object(p.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect::<Map<_, _>>())
}

pub fn report_json(r: &ConjectureReport) -> Value {
    let mut m = Map::new();
    m.insert("id".into(), json!(r.id));
    m.insert("grid".into(), Value::Object(r.grid.iter().map(|a| (a.name.clone(), json!([a.lo, a.hi]))).collect()));
    m.insert("status".into(), json!(r.status.as_str()));
    m.insert("checked_upto".into(), pairs(&r.checked_upto));
    if let Some(w) = &r.witness {
        m.insert("witness".into(), json!({"params": pairs(&w.params), "expected": w.expected, "actual": w.actual}));
    }
    m.insert("cells".into(), json!(r.cells));
    if let Some(n) = &r.note {
        m.insert("note".into(), json!(n));
    }
    m.insert("wall_ms".into(), r.wall_ms.map_or(Value::Null, Value::from));
    Value::Object(m)
}

fn span(r: &ConjectureReport) -> String {
    r.grid
        .iter()
        .map(|a| if a.lo == a.hi { format!("{}={}", a.name, a.lo) } else { format!("{}={}..{}", a.name, a.lo, a.hi) })
        .collect::<Vec<_>>()
        .join(" ")
}

/// One line per report, plus the witness on failure. No timings, so the
/// text form is reproducible.
pub fn report_text(r: &ConjectureReport) -> String {
    let mut s = format!("{:<15} {:<28} {} ({} cells)", r.status.as_str(), r.id, span(r), r.cells);
    if let Some(n) = &r.note {
        s.push_str(&format!(" [{n}]"));
    }
    if let Some(w) = &r.witness {
        let at: Vec<String> = w.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s.push_str(&format!("\n    at {}: expected {} got {}", at.join(" "), w.expected, w.actual));
    }
    s
}

/// `1 - 3*x^2`, `1 - 1/2*x` and so on; zero terms are dropped.
pub fn rational_poly(coeffs: &[BigRational], var: &str) -> String {
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let neg = c.is_negative();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        match (mag.is_one(), mono.is_empty()) {
            (true, true) => s.push('1'),
            (true, false) => s.push_str(&mono),
            (false, true) => s.push_str(&mag.to_string()),
            (false, false) => s.push_str(&format!("{mag}*{mono}")),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn report_csv_row(r: &ConjectureReport) -> String {
    let w = r.witness.as_ref().map(|w| format!("expected {} got {}", w.expected, w.actual)).unwrap_or_default();
    [r.id.clone(), r.status.as_str().to_string(), r.cells.to_string(), span(r), w]
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

pub const REPORT_CSV_HEADER: &str = "id,status,cells,grid,witness";
pub const TABLE_CSV_HEADER: &str = "n,j,value";

pub fn any_counterexample(reports: &[ConjectureReport]) -> bool {
    reports.iter().any(|r| r.status == Status::Counterexample)
}

#[cfg(test)]
mod tests {
    use super::*;
    use stripcomb_core::report::{run_grid, Axis, Outcome};

    #[test]
    fn safe_integers() {
        assert_eq!(big(&BigInt::from(27)), json!(27));
        assert_eq!(big(&BigInt::from(MAX_SAFE)), json!(MAX_SAFE));
        assert_eq!(big(&BigInt::from(MAX_SAFE + 1)), json!("9007199254740992"));
        assert_eq!(big(&-BigInt::from(u64::MAX)), json!("-18446744073709551615"));
    }

    #[test]
    fn report_shape() {
        let r = run_grid("x", vec![Axis::new("n", 0, 3)], |_| true, |p| Outcome::check(p[0] < 2, "a", "b"));
        let v = report_json(&r);
        assert_eq!(v["status"], "COUNTEREXAMPLE");
        assert_eq!(v["checked_upto"], json!({"n": 1}));
        assert_eq!(v["witness"]["params"], json!({"n": 2}));
        assert_eq!(v["grid"], json!({"n": [0, 3]}));
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(&keys[..5], ["id", "grid", "status", "checked_upto", "witness"]);
        assert!(report_text(&r).contains("at n=2"));
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(rational_poly(&[q(1, 1), q(0, 1), q(-3, 1), q(0, 1)], "x"), "1 - 3*x^2");
        assert_eq!(rational_poly(&[q(-1, 2), q(1, 1)], "x"), "-1/2 + x");
    }
}
