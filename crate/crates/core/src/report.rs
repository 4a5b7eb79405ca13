//! Verdicts produced by identity checks and conjecture pipelines.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Debug;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    VerifiedUpTo,
    Counterexample,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::VerifiedUpTo => "VERIFIED_UP_TO",
            Status::Counterexample => "COUNTEREXAMPLE",
            Status::Skipped => "SKIPPED",
        }
    }
}

/// Inclusive range of one grid parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axis {
    pub name: String,
    pub lo: i64,
    pub hi: i64,
}

impl Axis {
    pub fn new(name: &str, lo: i64, hi: i64) -> Self {
        Axis { name: name.to_string(), lo, hi }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub params: Vec<(String, i64)>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub id: String,
    pub grid: Vec<Axis>,
    pub status: Status,
    /// Last parameter tuple that passed, in grid order.
    pub checked_upto: Vec<(String, i64)>,
    pub cells: u64,
    pub witness: Option<Witness>,
    pub note: Option<String>,
    /// Filled in by callers that have a clock.
    pub wall_ms: Option<u64>,
}

impl ConjectureReport {
    pub fn skipped(id: &str, grid: Vec<Axis>, note: &str) -> Self {
        ConjectureReport {
            id: id.to_string(),
            grid,
            status: Status::Skipped,
            checked_upto: Vec::new(),
            cells: 0,
            witness: None,
            note: Some(note.to_string()),
            wall_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Counterexample
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Result of checking a single grid cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails { expected: String, actual: String },
}

impl Outcome {
    pub fn compare<T: PartialEq + Debug>(expected: &T, actual: &T) -> Self {
        Self::compare_with(expected, actual, |v| alloc::format!("{v:?}"))
    }

    pub fn compare_with<T: PartialEq>(expected: &T, actual: &T, show: impl Fn(&T) -> String) -> Self {
        if expected == actual {
            Outcome::Holds
        } else {
            Outcome::Fails { expected: show(expected), actual: show(actual) }
        }
    }

    pub fn check(ok: bool, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Fails { expected: expected.into(), actual: actual.into() }
        }
    }

    pub fn and_then(self, next: impl FnOnce() -> Outcome) -> Self {
        match self {
            Outcome::Holds => next(),
            fail => fail,
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds)
    }
}

/// A registered identity: named parameters with inclusive ranges, an
/// admissibility filter and a per-cell check.
#[derive(Clone, Copy)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub summary: &'static str,
    pub params: &'static [(&'static str, i64, i64)],
    pub admissible: fn(&[i64]) -> bool,
    pub check: fn(&[i64]) -> Outcome,
    /// Set when the identity is registered but deliberately not evaluated.
    pub skip: Option<&'static str>,
}

impl IdentityDescriptor {
    pub fn axes(&self) -> Vec<Axis> {
        self.params.iter().map(|&(n, lo, hi)| Axis::new(n, lo, hi)).collect()
    }

    /// Run over the full declared range.
    pub fn run(&self) -> ConjectureReport {
        if let Some(why) = self.skip {
            return ConjectureReport::skipped(self.id, self.axes(), why);
        }
        run_grid(self.id, self.axes(), self.admissible, self.check)
    }

    /// Run a single tuple, which must lie inside the declared ranges.
    pub fn run_at(&self, values: &[i64]) -> crate::Result<ConjectureReport> {
        if values.len() != self.params.len() {
            return Err(crate::Error::DimensionMismatch { expected: self.params.len(), got: values.len() });
        }
        for (&(name, lo, hi), &v) in self.params.iter().zip(values) {
            if v < lo || v > hi {
                return Err(crate::Error::OutOfRange { what: name, value: v });
            }
        }
        if !(self.admissible)(values) {
            return Err(crate::Error::OutOfRange { what: "parameter tuple", value: values[0] });
        }
        if let Some(why) = self.skip {
            return Ok(ConjectureReport::skipped(self.id, self.axes(), why));
        }
        let axes = self.params.iter().zip(values).map(|(&(n, _, _), &v)| Axis::new(n, v, v)).collect();
        Ok(run_grid(self.id, axes, |_| true, self.check))
    }
}

pub fn always(_: &[i64]) -> bool {
    true
}

/// All tuples of the grid in lexicographic order (first axis slowest).
pub fn grid_cells(axes: &[Axis]) -> Vec<Vec<i64>> {
    let mut cells = alloc::vec![Vec::new()];
    for a in axes {
        let mut next = Vec::new();
        for c in &cells {
            for v in a.lo..=a.hi {
                let mut c2 = c.clone();
                c2.push(v);
                next.push(c2);
            }
        }
        cells = next;
    }
    cells
}

/// Evaluate `check` on every admissible cell, stopping at the first failure.
pub fn run_grid(
    id: &str,
    axes: Vec<Axis>,
    admissible: impl Fn(&[i64]) -> bool,
    check: impl Fn(&[i64]) -> Outcome,
) -> ConjectureReport {
    let mut report = ConjectureReport {
        id: id.to_string(),
        grid: axes.clone(),
        status: Status::VerifiedUpTo,
        checked_upto: Vec::new(),
        cells: 0,
        witness: None,
        note: None,
        wall_ms: None,
    };
    let named = |cell: &[i64]| axes.iter().zip(cell).map(|(a, &v)| (a.name.clone(), v)).collect::<Vec<_>>();
    for cell in grid_cells(&axes) {
        if !admissible(&cell) {
            continue;
        }
        match check(&cell) {
            Outcome::Holds => {
                report.cells += 1;
                report.checked_upto = named(&cell);
            }
            Outcome::Fails { expected, actual } => {
                report.status = Status::Counterexample;
                report.witness = Some(Witness { params: named(&cell), expected, actual });
                break;
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_order_and_witness() {
        let axes = alloc::vec![Axis::new("a", 0, 1), Axis::new("b", 0, 2)];
        assert_eq!(grid_cells(&axes).len(), 6);
        assert_eq!(grid_cells(&axes)[1], alloc::vec![0, 1]);
        let r = run_grid("t", axes.clone(), |_| true, |c| Outcome::check(c[0] + c[1] < 3, "<3", "3"));
        assert_eq!(r.status, Status::Counterexample);
        assert_eq!(r.cells, 5);
        let w = r.witness.unwrap();
        assert_eq!(w.params, alloc::vec![("a".into(), 1), ("b".into(), 2)]);
        let ok = run_grid("t", axes, |c| c[0] == 0, |_| Outcome::Holds);
        assert_eq!(ok.status, Status::VerifiedUpTo);
        assert_eq!(ok.cells, 3);
        assert_eq!(ok.checked_upto, alloc::vec![("a".into(), 0), ("b".into(), 2)]);
    }
}
