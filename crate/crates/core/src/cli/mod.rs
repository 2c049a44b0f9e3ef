//! Batch commands behind the `wbasis` binary: configuration, the generator
//! cache and deterministic reports.

pub mod cache;

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::Serialize;

use crate::brylinski::verify_main_theorem;
use crate::tanalog::verify_level1_identity;
use crate::twistedfock::TwistedModule;
use crate::walgebra::{choose_generators, expected_walg_dim, walg_graded_basis, WGeneratorSet};
use crate::Error;
pub use cache::GeneratorCacheFile;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Table,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub rank: usize,
    pub n_max: usize,
    pub d_max: Option<usize>,
    pub cache: Option<PathBuf>,
    pub jobs: usize,
    pub format: Format,
}

impl RunConfig {
    pub fn new(rank: usize, n_max: usize) -> Self {
        RunConfig { rank, n_max, d_max: None, cache: None, jobs: 1, format: Format::Table }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.rank == 0 {
            return Err("rank must be at least 1".to_string());
        }
        if self.jobs == 0 {
            return Err("jobs must be at least 1".to_string());
        }
        Ok(())
    }
}

/// One result row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub kind: String,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub expected: String,
    pub actual: String,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn of(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl Record {
    fn new(kind: &str, n: Option<usize>, d: Option<usize>, expected: impl ToString, actual: impl ToString, ok: bool) -> Self {
        Record {
            kind: kind.to_string(),
            n,
            d,
            expected: expected.to_string(),
            actual: actual.to_string(),
            verdict: Verdict::of(ok),
        }
    }
}

/// What every report carries so a failing row can be rerun alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub command: String,
    pub config: RunConfig,
    pub generator_checksum: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub provenance: Provenance,
    pub records: Vec<Record>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.verdict == Verdict::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                let mut out = serde_json::to_string(&serde_json::json!({ "kind": "provenance", "provenance": self.provenance }))
                    .expect("serializable");
                out.push('\n');
                for r in &self.records {
                    out.push_str(&serde_json::to_string(r).expect("serializable"));
                    out.push('\n');
                }
                out
            }
            Format::Table => {
                let mut out = String::new();
                let _ = writeln!(out, "# {} rank={} nmax={}", self.provenance.command, self.provenance.config.rank, self.provenance.config.n_max);
                if let Some(sum) = &self.provenance.generator_checksum {
                    let _ = writeln!(out, "# generators {sum}");
                }
                let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
                let rows: Vec<[String; 6]> = self
                    .records
                    .iter()
                    .map(|r| {
                        let v = if r.verdict == Verdict::Pass { "pass" } else { "FAIL" };
                        [r.kind.clone(), opt(r.n), opt(r.d), r.expected.clone(), r.actual.clone(), v.to_string()]
                    })
                    .collect();
                let head = ["kind", "n", "d", "expected", "actual", "verdict"].map(String::from);
                let mut widths = head.clone().map(|h| h.len());
                for row in &rows {
                    for (w, c) in widths.iter_mut().zip(row) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                for row in std::iter::once(&head).chain(&rows) {
                    let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                    let _ = writeln!(out, "{}", cells.join("  ").trim_end());
                }
                out
            }
        }
    }
}

/// Loads the generator set from the configured cache, or computes it and
/// writes the cache. Returns the set and its checksum.
pub fn load_or_compute_generators(config: &RunConfig) -> Result<(WGeneratorSet, String), Error> {
    if let Some(path) = &config.cache {
        if path.exists() {
            let file = GeneratorCacheFile::read(path)?;
            if file.rank != config.rank {
                return Err(Error::Cache(format!("cache holds rank {}, asked for {}", file.rank, config.rank)));
            }
            let sum = file.checksum();
            return Ok((file.to_set(), sum));
        }
    }
    let set = choose_generators(config.rank)?;
    let file = GeneratorCacheFile::from_set(&set);
    if let Some(path) = &config.cache {
        file.write(path)?;
    }
    Ok((set, file.checksum()))
}

fn provenance(command: &str, config: &RunConfig, sum: Option<String>) -> Provenance {
    Provenance { command: command.to_string(), config: config.clone(), generator_checksum: sum }
}

/// Lusztig polynomials of `Lambda_0 - n delta` against the product side.
pub fn cmd_lusztig(config: &RunConfig) -> Result<Outcome, Error> {
    let report = verify_level1_identity(config.rank, config.n_max)?;
    let records = report
        .rows
        .iter()
        .map(|r| Record::new("lusztig", Some(r.n), None, &r.product, &r.lusztig, r.pass))
        .collect();
    Ok(Outcome { provenance: provenance("lusztig", config, None), records })
}

/// Same comparison, adding the `t = 1` specialization against colored partitions.
pub fn cmd_verify_identity(config: &RunConfig) -> Result<Outcome, Error> {
    let report = verify_level1_identity(config.rank, config.n_max)?;
    let mut records = Vec::new();
    for r in &report.rows {
        records.push(Record::new("identity", Some(r.n), None, &r.product, &r.lusztig, r.pass));
        records.push(Record::new("at_t_1", Some(r.n), None, &r.colored_partitions, &r.at_one, r.at_one == r.colored_partitions));
    }
    Ok(Outcome { provenance: provenance("verify-identity", config, None), records })
}

/// Generators of the W-algebra, with kernel dimensions up to `check_degree`.
pub fn cmd_wgen(config: &RunConfig, check_degree: Option<usize>) -> Result<Outcome, Error> {
    let (set, sum) = load_or_compute_generators(config)?;
    let mut records = Vec::new();
    for g in &set.generators {
        let weight = g.state.homogeneous_ticks().map_or("mixed".to_string(), |w| w.to_string());
        let ok = weight == g.degree.to_string() && walg_contains(config.rank, &g.state, g.degree);
        records.push(Record::new("generator", None, Some(g.degree), g.degree, weight, ok));
    }
    let top = check_degree.unwrap_or(config.rank + 1);
    for d in 0..=top {
        let expected = expected_walg_dim(config.rank, d);
        let actual = walg_graded_basis(config.rank, d).len();
        records.push(Record::new("walg_dim", None, Some(d), &expected, actual, expected == actual.into()));
    }
    Ok(Outcome { provenance: provenance("wgen", config, Some(sum)), records })
}

fn walg_contains(rank: usize, state: &crate::heisenberg::Fock<crate::exactcore::Q>, d: usize) -> bool {
    use crate::exactcore::EchelonBasis;
    let cols = crate::heisenberg::vacuum_space(rank).basis(d as i64);
    let index = cols.into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ech = EchelonBasis::new();
    for v in walg_graded_basis(rank, d) {
        ech.insert(&v.coordinates(&index));
    }
    ech.contains(&state.coordinates(&index))
}

/// Slices of `Z` and the graded dimensions of the Brylinski filtration.
pub fn cmd_verify_main(config: &RunConfig) -> Result<Outcome, Error> {
    let (set, sum) = load_or_compute_generators(config)?;
    let module = TwistedModule::new(config.rank);
    let report = verify_main_theorem(&module, &set, config.n_max, config.d_max)?;
    let mut records = Vec::new();
    for s in &report.slices {
        records.push(Record::new("slice", Some(s.n), None, &s.expected, s.words, s.pass));
    }
    for c in &report.cells {
        records.push(Record::new("graded", Some(c.n), Some(c.d), &c.expected, c.graded, c.pass));
    }
    records.push(Record::new("increasing", None, None, true, report.increasing, report.increasing));
    records.push(Record::new("idempotent", None, None, true, report.idempotent, report.idempotent));
    records.push(Record::new("totals", None, None, true, report.totals, report.totals));
    Ok(Outcome { provenance: provenance("verify-main", config, Some(sum)), records })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lusztig_rows() {
        let out = cmd_lusztig(&RunConfig::new(1, 3)).unwrap();
        assert_eq!(out.records.len(), 4);
        assert!(out.passed());
        let single = cmd_lusztig(&RunConfig::new(1, 0)).unwrap();
        assert_eq!(single.records.len(), 1);
        assert_eq!(single.records[0].actual, "1");
        assert_eq!(single.records[0].expected, "1");
        assert!(RunConfig::new(0, 3).validate().is_err());
    }

    #[test]
    fn structured_output_is_deterministic() {
        let cfg = RunConfig { format: Format::Structured, ..RunConfig::new(1, 2) };
        let a = cmd_verify_main(&cfg).unwrap().render(Format::Structured);
        let b = cmd_verify_main(&cfg).unwrap().render(Format::Structured);
        assert_eq!(a, b);
        for line in a.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert!(v.get("kind").is_some());
        }
    }

    #[test]
    fn warm_cache_is_identical() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("gens.txt");
        let cfg = RunConfig { cache: Some(path.clone()), ..RunConfig::new(1, 0) };
        let first = cmd_wgen(&cfg, Some(4)).unwrap();
        let bytes = std::fs::read(&path).unwrap();
        let second = cmd_wgen(&cfg, Some(4)).unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), bytes);
        assert_eq!(first.provenance.generator_checksum, second.provenance.generator_checksum);
        assert!(first.passed());
        let other = RunConfig { cache: Some(path), ..RunConfig::new(2, 0) };
        assert!(matches!(cmd_wgen(&other, None), Err(Error::Cache(_))));
    }
}
