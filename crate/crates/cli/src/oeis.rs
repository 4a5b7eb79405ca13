//! OEIS b-files: bundled copies, an on-disk cache, and an opt-in fetch.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use stripcomb_core::formulas::{a_count, a_poly_z};
use stripcomb_core::paths::corridor_table;

pub const CACHE_ENV: &str = "STRIPCOMB_CACHE";

const BUNDLED: &[(&str, &str)] = &[
    ("A000045", include_str!("../fixtures/b000045.txt")),
    ("A001045", include_str!("../fixtures/b001045.txt")),
    ("A005578", include_str!("../fixtures/b005578.txt")),
    ("A011782", include_str!("../fixtures/b011782.txt")),
    ("A016116", include_str!("../fixtures/b016116.txt")),
    ("A028495", include_str!("../fixtures/b028495.txt")),
    ("A030436", include_str!("../fixtures/b030436.txt")),
    ("A061551", include_str!("../fixtures/b061551.txt")),
    ("A061554", include_str!("../fixtures/b061554.txt")),
    ("A099163", include_str!("../fixtures/b099163.txt")),
    ("A178381", include_str!("../fixtures/b178381.txt")),
    ("A182522", include_str!("../fixtures/b182522.txt")),
];

/// Default generator and shift for each bundled A-number.
pub const KNOWN: &[(&str, &str, usize)] = &[
    ("A016116", "a(n,2)", 0),
    ("A000045", "a(n,3)", 1),
    ("A182522", "a(n,4)", 0),
    ("A028495", "a(n,5)", 0),
    ("A030436", "a(n,6)", 0),
    ("A061551", "a(n,7)", 0),
    ("A178381", "a(n,8)", 0),
    ("A061554", "corridor", 0),
    ("A001045", "a(n,1,1,1)", 1),
    ("A011782", "a(n,2,1,1)", 0),
    ("A099163", "a(n,3,1,1)", 0),
    ("A005578", "a(n,4,1,1)", 0),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Bundled,
    Fetched,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Bundled => "bundled",
            Source::Fetched => "fetched",
        }
    }
}

#[derive(Clone, Debug)]
pub struct OeisFixture {
    pub a_number: String,
    /// `(index, value)` in file order.
    pub terms: Vec<(i64, BigInt)>,
    pub source: Source,
    /// Seconds since the epoch at which the b-file was written to the cache.
    pub fetched_at: Option<u64>,
}

impl OeisFixture {
    pub fn values(&self) -> Vec<BigInt> {
        self.terms.iter().map(|(_, v)| v.clone()).collect()
    }
}

/// Normalize `a45`, `A000045` or `45` to `A000045`.
pub fn normalize(a: &str) -> Result<String> {
    let digits = a.trim().trim_start_matches(['A', 'a']);
    let n: u32 = digits.parse().map_err(|_| anyhow!("not an A-number: {a}"))?;
    Ok(format!("A{n:06}"))
}

/// Lenient b-file parser: blank lines and `#` comments are skipped, any
/// further fields on a line are ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(i), Some(v)) = (it.next(), it.next()) else {
            bail!("line {}: expected `index value`", lineno + 1);
        };
        let i = i.parse().with_context(|| format!("line {}: bad index", lineno + 1))?;
        let v = BigInt::from_str(v).with_context(|| format!("line {}: bad value", lineno + 1))?;
        out.push((i, v));
    }
    if out.is_empty() {
        bail!("b-file has no terms");
    }
    Ok(out)
}

pub fn bundled(a: &str) -> Option<OeisFixture> {
    let (_, text) = BUNDLED.iter().find(|(id, _)| *id == a)?;
    let terms = parse_bfile(text).expect("bundled fixtures parse");
    Some(OeisFixture { a_number: a.to_string(), terms, source: Source::Bundled, fetched_at: None })
}

/// Cache directory: the explicit flag, then `STRIPCOMB_CACHE`, then the
/// platform cache location.
pub fn cache_dir(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = flag {
        return Some(p.to_path_buf());
    }
    if let Some(p) = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()) {
        return Some(PathBuf::from(p));
    }
    dirs::cache_dir().map(|d| d.join("stripcomb"))
}

fn bfile_name(a: &str) -> String {
    format!("b{}.txt", &a[1..])
}

fn from_cache(dir: &Path, a: &str) -> Option<OeisFixture> {
    let path = dir.join(bfile_name(a));
    let text = std::fs::read_to_string(&path).ok()?;
    let terms = parse_bfile(&text).ok()?;
    let fetched_at = std::fs::metadata(&path)
        .and_then(|m| m.modified())
        .ok()
        .and_then(|t| t.duration_since(UNIX_EPOCH).ok())
        .map(|d| d.as_secs());
    Some(OeisFixture { a_number: a.to_string(), terms, source: Source::Fetched, fetched_at })
}

/// Write through a temporary file in the same directory and rename.
pub fn write_atomic(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    let path = dir.join(name);
    tmp.persist(&path).map_err(|e| e.error)?;
    Ok(path)
}

fn fetch(a: &str) -> Result<String> {
    let url = format!("https://oeis.org/{a}/{}", bfile_name(a));
    let body = ureq::get(&url).timeout(Duration::from_secs(20)).call()?.into_string()?;
    Ok(body)
}

/// Resolve an A-number. Offline this reads the cache, then the bundled copy,
/// and never opens a connection. Online it fetches, caches, and falls back
/// to the offline path with a warning on failure.
pub fn load(a: &str, online: bool, cache: Option<&Path>, warn: &mut dyn FnMut(String)) -> Result<OeisFixture> {
    let a = normalize(a)?;
    if online {
        match fetch(&a).and_then(|text| parse_bfile(&text).map(|t| (text, t))) {
            Ok((text, terms)) => {
                let mut fetched_at = Some(SystemTime::now().duration_since(UNIX_EPOCH)?.as_secs());
                if let Some(dir) = cache {
                    if let Err(e) = write_atomic(dir, &bfile_name(&a), &text) {
                        warn(format!("could not cache {a}: {e}"));
                        fetched_at = None;
                    }
                }
                return Ok(OeisFixture { a_number: a, terms, source: Source::Fetched, fetched_at });
            }
            Err(e) => warn(format!("fetching {a} failed ({e}); using the offline copy")),
        }
    }
    if let Some(f) = cache.and_then(|d| from_cache(d, &a)) {
        return Ok(f);
    }
    bundled(&a).ok_or_else(|| anyhow!("no cached or bundled b-file for {a}"))
}

/// A sequence we know how to compute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `a(n,k)`
    Count(usize),
    /// `a(n,k,1,z)` for `z = ±1`
    Unit { k: usize, z_negative: bool },
    /// The corridor triangle read by rows.
    Corridor,
}

impl FromStr for Generator {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "corridor" {
            return Ok(Generator::Corridor);
        }
        let inner = s
            .strip_prefix("a(n,")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| anyhow!("unknown generator `{s}`"))?;
        let parts: Vec<&str> = inner.split(',').collect();
        let k: usize = parts[0].parse().map_err(|_| anyhow!("bad strip in `{s}`"))?;
        match parts[1..] {
            [] => Ok(Generator::Count(k)),
            ["1", "1"] => Ok(Generator::Unit { k, z_negative: false }),
            ["1", "-1"] => Ok(Generator::Unit { k, z_negative: true }),
            _ => bail!("unsupported generator `{s}` (t and z must be 1, z may be -1)"),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Count(k) => write!(f, "a(n,{k})"),
            Generator::Unit { k, z_negative } => write!(f, "a(n,{k},1,{})", if *z_negative { -1 } else { 1 }),
            Generator::Corridor => write!(f, "corridor"),
        }
    }
}

impl Generator {
    pub fn terms(&self, len: usize) -> Result<Vec<BigInt>> {
        match *self {
            Generator::Count(k) => Ok((0..len).map(|n| a_count(n, k)).collect()),
            Generator::Unit { k, z_negative } => (0..len).map(|n| Ok(a_poly_z(n, k)?.at_unit(z_negative))).collect(),
            Generator::Corridor => {
                let mut rows = 0;
                while (rows + 1) * (rows + 2) / 2 < len {
                    rows += 1;
                }
                let t = corridor_table(rows);
                Ok(t.into_iter().flatten().take(len).collect())
            }
        }
    }
}

pub fn default_generator(a: &str) -> Option<(Generator, usize)> {
    KNOWN.iter().find(|(id, _, _)| *id == a).map(|(_, g, s)| (g.parse().expect("table parses"), *s))
}

#[derive(Clone, Debug)]
pub struct MatchReport {
    pub a_number: String,
    pub generator: Generator,
    pub shift: usize,
    pub source: Source,
    pub fetched_at: Option<u64>,
    pub compared: usize,
    /// `(computed index, oeis value, computed value)`
    pub first_mismatch: Option<(usize, BigInt, BigInt)>,
}

impl MatchReport {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compare `prefix_len` computed terms with the fixture, offset by `shift`.
pub fn oeis_check(
    fixture: &OeisFixture,
    generator: &Generator,
    shift: usize,
    prefix_len: usize,
) -> Result<MatchReport> {
    let values = fixture.values();
    if values.len() < prefix_len + shift {
        bail!("{} has {} terms, need {}", fixture.a_number, values.len(), prefix_len + shift);
    }
    let computed = generator.terms(prefix_len)?;
    let first_mismatch = computed
        .iter()
        .zip(&values[shift..])
        .enumerate()
        .find(|(_, (c, o))| c != o)
        .map(|(i, (c, o))| (i, o.clone(), c.clone()));
    Ok(MatchReport {
        a_number: fixture.a_number.clone(),
        generator: generator.clone(),
        shift,
        source: fixture.source,
        fetched_at: fixture.fetched_at,
        compared: prefix_len,
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_lenient() {
        let t = parse_bfile("# header\n\n0 1\n1   1\n2 2 trailing\n").unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[2], (2, BigInt::from(2)));
        assert!(parse_bfile("# only comments\n").is_err());
        assert!(parse_bfile("0 x\n").is_err());
    }

    #[test]
    fn names() {
        assert_eq!(normalize("a45").unwrap(), "A000045");
        assert_eq!(normalize("A182522").unwrap(), "A182522");
        assert!(normalize("B12").is_err());
    }

    #[test]
    fn generators_round_trip() {
        for (_, g, _) in KNOWN {
            let parsed: Generator = g.parse().unwrap();
            assert_eq!(&parsed.to_string(), g);
        }
        assert!("a(n,3,2,1)".parse::<Generator>().is_err());
        assert!("b(n)".parse::<Generator>().is_err());
    }

    #[test]
    fn every_bundled_fixture_has_a_generator() {
        for (a, _) in BUNDLED {
            assert!(default_generator(a).is_some(), "{a}");
            assert!(bundled(a).unwrap().terms.len() >= 40);
        }
    }
}
