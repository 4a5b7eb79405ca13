//! Brute-force enumerators: strip paths with extremal-point weights, walks on
//! path graphs, height-bounded Dyck paths and corridor triangles. These are the
//! ground truth every closed formula is tested against.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::exactmath::{int, ExactMatrix, IntPoly};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    D,
    U,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct PathWeight {
    /// Number of extremal points.
    pub e: u32,
    /// Sum of the x-coordinates of the extremal points.
    pub iota: u64,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights `h_0 = 0, h_1, ..., h_n`.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = alloc::vec![0];
        for s in &self.steps {
            h.push(h[h.len() - 1] + s.delta());
        }
        h
    }

    /// Peaks at height >= 1 and valleys at height <= -2, interior vertices only.
    pub fn weight(&self) -> PathWeight {
        let h = self.heights();
        let mut w = PathWeight::default();
        for i in 1..self.steps.len() {
            if is_extremal(self.steps[i - 1], self.steps[i], h[i]) {
                w.e += 1;
                w.iota += i as u64;
            }
        }
        w
    }
}

fn is_extremal(before: Step, after: Step, height: i64) -> bool {
    match (before, after) {
        (Step::U, Step::D) => height >= 1,
        (Step::D, Step::U) => height <= -2,
        _ => false,
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::U => "U",
                Step::D => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                _ => Err(Error::OutOfRange { what: "path character position", value: i as i64 }),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticePath::new)
    }
}

/// The strip `-⌊(k+1)/2⌋ <= y <= ⌊k/2⌋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StripSpec {
    pub k: usize,
    pub lower: i64,
    pub upper: i64,
}

impl StripSpec {
    pub fn new(k: usize) -> Self {
        StripSpec { k, lower: -(k.div_ceil(2) as i64), upper: (k / 2) as i64 }
    }

    pub fn contains(&self, h: i64) -> bool {
        self.lower <= h && h <= self.upper
    }

    /// Whether a path at height `h` with `remaining` steps left can still end at
    /// height 0 or -1 (ignoring the strip).
    fn can_finish(h: i64, remaining: usize) -> bool {
        let r = remaining as i64;
        let target = if (h - r).rem_euclid(2) == 0 { 0 } else { -1 };
        (h - target).abs() <= r
    }

    fn admits(&self, h: i64, remaining: usize) -> bool {
        self.contains(h) && Self::can_finish(h, remaining)
    }
}

/// Paths of `A_{n,k}` with a fixed prefix, in lexicographic order (`D < U`).
pub struct StripPaths {
    n: usize,
    spec: StripSpec,
    fixed: usize,
    steps: Vec<Step>,
    heights: Vec<i64>,
    state: IterState,
}

enum IterState {
    Fresh,
    Running,
    Done,
}

impl StripPaths {
    fn push(&mut self, s: Step) -> bool {
        let h = self.heights[self.heights.len() - 1] + s.delta();
        if self.spec.admits(h, self.n - self.steps.len() - 1) {
            self.steps.push(s);
            self.heights.push(h);
            true
        } else {
            false
        }
    }

    fn descend(&mut self) -> bool {
        while self.steps.len() < self.n {
            if !self.push(Step::D) && !self.push(Step::U) {
                return false;
            }
        }
        true
    }

    /// Move to the next sibling branch; false when the subtree is exhausted.
    fn backtrack(&mut self) -> bool {
        while self.steps.len() > self.fixed {
            let last = self.steps.pop().expect("nonempty");
            self.heights.pop();
            if last == Step::D && self.push(Step::U) {
                return true;
            }
        }
        false
    }

    fn current(&self) -> LatticePath {
        LatticePath::new(self.steps.clone())
    }
}

impl Iterator for StripPaths {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        loop {
            match self.state {
                IterState::Done => return None,
                IterState::Fresh => {
                    self.state = IterState::Running;
                    if self.descend() {
                        return Some(self.current());
                    }
                }
                IterState::Running => {
                    if !self.backtrack() {
                        self.state = IterState::Done;
                        return None;
                    }
                    if self.descend() {
                        return Some(self.current());
                    }
                }
            }
        }
    }
}

/// All paths of `A_{n,k}`.
pub fn enumerate_strip(n: usize, k: usize) -> StripPaths {
    enumerate_with_prefix(n, k, &[])
}

/// Paths of `A_{n,k}` that begin with `prefix`. Enumerating every feasible
/// prefix of a given length partitions `A_{n,k}` in order.
pub fn enumerate_with_prefix(n: usize, k: usize, prefix: &[Step]) -> StripPaths {
    let spec = StripSpec::new(k);
    let mut it = StripPaths { n, spec, fixed: 0, steps: Vec::new(), heights: alloc::vec![0], state: IterState::Fresh };
    let feasible = prefix.len() <= n && prefix.iter().all(|&s| it.push(s));
    if !feasible || !spec.admits(0, n) {
        it.state = IterState::Done;
    }
    it.fixed = it.steps.len();
    it
}

/// Feasible prefixes of length `len` (at most `n`), in lexicographic order.
pub fn prefixes(n: usize, k: usize, len: usize) -> Vec<Vec<Step>> {
    let len = len.min(n);
    let spec = StripSpec::new(k);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(spec: &StripSpec, n: usize, len: usize, h: i64, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for s in [Step::D, Step::U] {
            let h2 = h + s.delta();
            if spec.admits(h2, n - cur.len() - 1) {
                cur.push(s);
                rec(spec, n, len, h2, cur, out);
                cur.pop();
            }
        }
    }
    if spec.admits(0, n) {
        rec(&spec, n, len, 0, &mut cur, &mut out);
    }
    out
}

/// Counts of paths by number of extremal points, for paths with `prefix`.
pub fn weight_counts_with_prefix(n: usize, k: usize, prefix: &[Step]) -> Vec<u64> {
    let spec = StripSpec::new(k);
    let mut counts = alloc::vec![0u64; n / 2 + 2];
    let mut h = 0i64;
    let mut e = 0usize;
    let mut prev: Option<Step> = None;
    for (i, &s) in prefix.iter().enumerate() {
        if let Some(p) = prev {
            if is_extremal(p, s, h) {
                e += 1;
            }
        }
        h += s.delta();
        if i >= n || !spec.admits(h, n - i - 1) {
            return counts;
        }
        prev = Some(s);
    }
    if !spec.admits(0, n) {
        return counts;
    }
    fn rec(spec: &StripSpec, remaining: usize, h: i64, prev: Option<Step>, e: usize, counts: &mut [u64]) {
        if remaining == 0 {
            counts[e] += 1;
            return;
        }
        for s in [Step::D, Step::U] {
            let h2 = h + s.delta();
            if spec.admits(h2, remaining - 1) {
                let e2 = e + usize::from(prev.is_some_and(|p| is_extremal(p, s, h)));
                rec(spec, remaining - 1, h2, Some(s), e2, counts);
            }
        }
    }
    rec(&spec, n - prefix.len(), h, prev, e, &mut counts);
    counts
}

fn counts_to_poly(counts: &[u64]) -> IntPoly {
    IntPoly::new(counts.iter().map(|&c| BigInt::from(c)).collect())
}

/// `a(n,k,t) = Σ_{v ∈ A_{n,k}} t^{e(v)}` by enumeration.
pub fn weight_poly_bruteforce(n: usize, k: usize) -> IntPoly {
    counts_to_poly(&weight_counts_with_prefix(n, k, &[]))
}

/// [`weight_poly_bruteforce`] restricted to paths beginning with `prefix`.
pub fn weight_poly_with_prefix(n: usize, k: usize, prefix: &[Step]) -> IntPoly {
    counts_to_poly(&weight_counts_with_prefix(n, k, prefix))
}

/// Weight of the paths of `A_{n,strip}` (odd strip `2k+1`) that begin with at
/// least `j` up-steps.
pub fn weight_up_prefix(n: usize, strip: usize, j: usize) -> Result<IntPoly> {
    if strip % 2 == 0 {
        return Err(Error::OutOfRange { what: "odd strip parameter", value: strip as i64 });
    }
    if j > n {
        return Ok(IntPoly::zero());
    }
    Ok(weight_poly_with_prefix(n, strip, &alloc::vec![Step::U; j]))
}

/// `(v(n,1,k), ..., v(n,k+1,k))`: walks of length `n` on the path graph
/// `P_{k+1}` from vertex 1 to each vertex.
pub fn walk_counts(n: usize, k: usize) -> Vec<BigInt> {
    let mut v = alloc::vec![int(0); k + 3];
    v[1] = int(1);
    for _ in 0..n {
        let mut next = alloc::vec![int(0); k + 3];
        for m in 1..=k + 1 {
            next[m] = &v[m - 1] + &v[m + 1];
        }
        v = next;
    }
    v[1..=k + 1].to_vec()
}

/// Walk counts from the `n`-th power of the adjacency matrix of `P_{k+1}`.
pub fn walk_counts_matrix(n: usize, k: usize) -> Vec<BigInt> {
    let m = ExactMatrix::from_fn(k + 1, k + 1, |i, j| if i.abs_diff(j) == 1 { int(1) } else { int(0) });
    let p = m.pow(n as u32).expect("square");
    (0..=k).map(|j| p.get(0, j).clone()).collect()
}

/// `v(2n,1,k)` through the first-return convolution with `v(·,1,k-1)`.
pub fn bounded_dyck(n2: usize, k: usize) -> Result<BigInt> {
    if n2 % 2 == 1 {
        return Err(Error::OutOfRange { what: "Dyck path length (must be even)", value: n2 as i64 });
    }
    let n = n2 / 2;
    // row[i] = v(2i,1,level)
    let mut row: Vec<BigInt> = (0..=n).map(|i| if i == 0 { int(1) } else { int(0) }).collect();
    for _ in 1..=k {
        let prev = row;
        let mut cur = alloc::vec![int(1)];
        for m in 1..=n {
            let mut acc = int(0);
            for j in 0..m {
                acc += &cur[j] * &prev[m - 1 - j];
            }
            cur.push(acc);
        }
        row = cur;
    }
    Ok(row[n].clone())
}

/// `c(n,j)` for `0 <= j <= n <= n_max` with `c(n,0) = c(n-1,0) + c(n-1,1)` and
/// `c(n,j) = c(n-1,j-1) + c(n-1,j+1)`.
pub fn corridor_table(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = alloc::vec![alloc::vec![int(1)]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let get = |j: usize| prev.get(j).cloned().unwrap_or_else(|| int(0));
        let mut row = alloc::vec![get(0) + get(1)];
        for j in 1..=n {
            row.push(get(j - 1) + get(j + 1));
        }
        rows.push(row);
    }
    rows
}

/// The `t`-weighted corridor triangle. With `bound = Some(k)` the rows stop at
/// `j = k` (`c(n, k+1, t, 2k+1) = 0`).
pub fn corridor_table_t(n_max: usize, bound: Option<usize>) -> Vec<Vec<IntPoly>> {
    let t = IntPoly::var();
    let width = |n: usize| bound.unwrap_or(n);
    let mut rows: Vec<Vec<IntPoly>> = alloc::vec![alloc::vec![IntPoly::one()]];
    if let Some(k) = bound {
        rows[0].resize(k + 1, IntPoly::zero());
    }
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let get = |j: usize| prev.get(j).cloned().unwrap_or_else(IntPoly::zero);
        let last = width(n);
        let mut row = Vec::with_capacity(last + 1);
        for j in 0..=last {
            let above = if bound.is_some_and(|k| j + 1 > k) { IntPoly::zero() } else { get(j + 1) };
            let v = if j == 0 {
                &get(0) + &(&t * &above)
            } else if j % 2 == 0 {
                &get(j - 1) + &(&t * &above)
            } else {
                &get(j - 1) + &above
            };
            row.push(v);
        }
        rows.push(row);
    }
    rows
}

/// Closed form of the unbounded weighted corridor entry `c(n,j,t)`.
pub fn corridor_entry_closed(n: usize, j: usize) -> IntPoly {
    let (lo, hi) = ((n / 2) as i64, n.div_ceil(2) as i64);
    let k = (j / 2) as i64;
    let coeffs = (0..=n as i64)
        .map(|i| {
            if j % 2 == 0 {
                crate::exactmath::binom(lo, i + k) * crate::exactmath::binom(hi, i)
            } else {
                crate::exactmath::binom(lo, i) * crate::exactmath::binom(hi, i + k + 1)
            }
        })
        .collect();
    IntPoly::new(coeffs)
}

/// Render a path list, one per line.
pub fn render_paths(paths: impl IntoIterator<Item = LatticePath>) -> String {
    let mut s = String::new();
    for p in paths {
        s.push_str(&alloc::format!("{p}\n"));
    }
    s
}

/// Number of paths in `A_{n,k}` by enumeration.
pub fn count_bruteforce(n: usize, k: usize) -> BigInt {
    weight_poly_bruteforce(n, k).eval(&int(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::binom_u;

    fn names(n: usize, k: usize) -> Vec<String> {
        enumerate_strip(n, k).map(|p| alloc::format!("{p}")).collect()
    }

    #[test]
    fn small_strips() {
        assert_eq!(names(3, 2), ["DUD", "UDD"]);
        assert_eq!(names(0, 0), [""]);
        assert_eq!(names(0, 5), [""]);
        assert_eq!(names(2, 0), Vec::<String>::new());
        assert_eq!(enumerate_strip(5, 5).count(), 10);
        assert_eq!(names(4, 2), ["DUDU", "DUUD", "UDDU", "UDUD"]);
    }

    #[test]
    fn strip_bounds() {
        let s = StripSpec::new(3);
        assert_eq!((s.lower, s.upper), (-2, 1));
        for k in 0..10 {
            let s = StripSpec::new(k);
            assert_eq!(s.upper - s.lower, k as i64);
        }
    }

    #[test]
    fn iterator_matches_counter() {
        for k in 0..=7 {
            for n in 0..=12 {
                let by_iter: u64 = enumerate_strip(n, k).count() as u64;
                assert_eq!(BigInt::from(by_iter), count_bruteforce(n, k), "n={n} k={k}");
                let mut w = alloc::vec![0u64; n / 2 + 2];
                for p in enumerate_strip(n, k) {
                    w[p.weight().e as usize] += 1;
                }
                assert_eq!(counts_to_poly(&w), weight_poly_bruteforce(n, k));
            }
        }
    }

    #[test]
    fn prefix_partition_is_ordered_and_complete() {
        let (n, k) = (11, 5);
        let all: Vec<LatticePath> = enumerate_strip(n, k).collect();
        let mut merged = Vec::new();
        let mut total = IntPoly::zero();
        for p in prefixes(n, k, 4) {
            merged.extend(enumerate_with_prefix(n, k, &p));
            total = &total + &weight_poly_with_prefix(n, k, &p);
        }
        assert_eq!(all, merged);
        assert_eq!(total, weight_poly_bruteforce(n, k));
    }

    #[test]
    fn extremal_weights() {
        let p: LatticePath = "UDUD".parse().unwrap();
        assert_eq!(p.weight(), PathWeight { e: 2, iota: 4 });
        let p: LatticePath = "DDUU".parse().unwrap();
        assert_eq!(p.weight(), PathWeight { e: 1, iota: 2 });
        let p: LatticePath = "DUDU".parse().unwrap();
        assert_eq!(p.weight().e, 0);
        assert!("UXD".parse::<LatticePath>().is_err());
    }

    #[test]
    fn weight_polys() {
        assert_eq!(weight_poly_bruteforce(4, 3), IntPoly::from_i64s(&[1, 3, 1]));
        assert_eq!(weight_poly_bruteforce(6, 4), IntPoly::from_i64s(&[1, 7, 9, 1]));
        assert_eq!(weight_poly_bruteforce(7, 1), IntPoly::one());
    }

    #[test]
    fn walks() {
        assert_eq!(walk_counts(4, 3)[0], int(2));
        assert_eq!(walk_counts(0, 4), alloc::vec![int(1), int(0), int(0), int(0), int(0)]);
        let total: BigInt = walk_counts(6, 3).iter().sum();
        assert_eq!(total, int(13));
        for n in 0..=12 {
            for k in 0..=6 {
                assert_eq!(walk_counts(n, k), walk_counts_matrix(n, k));
            }
        }
    }

    #[test]
    fn dyck() {
        assert_eq!(bounded_dyck(6, 3).unwrap(), int(5));
        assert_eq!(bounded_dyck(8, 3).unwrap(), int(13));
        assert_eq!(bounded_dyck(0, 0).unwrap(), int(1));
        assert_eq!(bounded_dyck(4, 0).unwrap(), int(0));
        assert!(bounded_dyck(3, 2).is_err());
        for k in 0..=6 {
            for n in 0..=10 {
                assert_eq!(bounded_dyck(2 * n, k).unwrap(), walk_counts(2 * n, k)[0]);
            }
        }
    }

    #[test]
    fn corridor() {
        let c = corridor_table(5);
        assert_eq!(c[5], [10, 10, 5, 5, 1, 1].map(int));
        assert_eq!(c[4][0], int(6));
        for (n, row) in c.iter().enumerate() {
            assert_eq!(row[n], int(1));
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, binom_u(n, (n - j) / 2));
            }
        }
    }

    #[test]
    fn corridor_t() {
        let c = corridor_table_t(8, None);
        let row3: Vec<IntPoly> = [&[1, 2][..], &[2, 1], &[1], &[1]].iter().map(|r| IntPoly::from_i64s(r)).collect();
        assert_eq!(c[3], row3);
        let row5: Vec<IntPoly> =
            [&[1, 6, 3][..], &[3, 6, 1], &[2, 3], &[3, 2], &[1], &[1]].iter().map(|r| IntPoly::from_i64s(r)).collect();
        assert_eq!(c[5], row5);
        for (n, row) in c.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, corridor_entry_closed(n, j), "n={n} j={j}");
            }
            assert_eq!(row[0].eval(&int(1)), binom_u(n, n / 2));
        }
        let b = corridor_table_t(10, Some(1));
        let fib = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89];
        for (n, row) in b.iter().enumerate() {
            assert_eq!(row[0].eval(&int(1)), int(fib[n]));
        }
    }

    #[test]
    fn up_prefix() {
        let w = |n| weight_poly_bruteforce(n, 3);
        assert_eq!(weight_up_prefix(4, 3, 0).unwrap(), w(4));
        assert_eq!(weight_up_prefix(4, 3, 1).unwrap(), &w(4) - &w(3));
        assert_eq!(weight_up_prefix(4, 3, 1).unwrap(), IntPoly::from_i64s(&[0, 1, 1]));
        for k in 0..=3 {
            for n in 0..=10 {
                assert!(weight_up_prefix(n, 2 * k + 1, k + 1).unwrap().is_zero());
            }
        }
        assert!(weight_up_prefix(4, 4, 1).is_err());
    }
}
