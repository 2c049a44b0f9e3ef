//! Line-oriented text format for a computed generator set.
//!
//! ```text
//! wbasis-generators 1
//! rank 2
//! degrees 2 3
//! generator 1 2 3
//! term 0:1,0:1 1/3
//! ...
//! checksum <sha256 of every preceding line>
//! ```

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::exactcore::rational::format_q;
use crate::exactcore::Q;
use crate::heisenberg::{Fock, Monomial};
use crate::walgebra::{WGenerator, WGeneratorSet};
use crate::Error;

const MAGIC: &str = "wbasis-generators";
const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorCacheFile {
    pub version: u32,
    pub rank: usize,
    pub degrees: Vec<usize>,
    /// `(degree, terms)` per generator, terms in canonical monomial order.
    pub generators: Vec<(usize, Vec<(Monomial, Q)>)>,
}

impl GeneratorCacheFile {
    pub fn from_set(set: &WGeneratorSet) -> Self {
        GeneratorCacheFile {
            version: VERSION,
            rank: set.rank,
            degrees: set.degrees(),
            generators: set
                .generators
                .iter()
                .map(|g| (g.degree, g.state.terms().map(|(m, c)| (m.clone(), c.clone())).collect()))
                .collect(),
        }
    }

    pub fn to_set(&self) -> WGeneratorSet {
        let generators = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, (degree, terms))| {
                let mut state = Fock::zero();
                for (m, c) in terms {
                    state.add_term(m.clone(), c.clone());
                }
                WGenerator { p: i + 1, degree: *degree, state }
            })
            .collect();
        WGeneratorSet { rank: self.rank, generators }
    }

    fn body(&self) -> String {
        let mut s = format!("{MAGIC} {}\nrank {}\n", self.version, self.rank);
        let degs: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        s.push_str(&format!("degrees {}\n", degs.join(" ")));
        for (i, (degree, terms)) in self.generators.iter().enumerate() {
            s.push_str(&format!("generator {} {} {}\n", i + 1, degree, terms.len()));
            for (m, c) in terms {
                s.push_str(&format!("term {} {}\n", monomial_key(m), format_q(c)));
            }
        }
        s
    }

    /// Hex SHA-256 of the canonical content.
    pub fn checksum(&self) -> String {
        hex::encode(Sha256::digest(self.body().as_bytes()))
    }

    pub fn to_text(&self) -> String {
        let body = self.body();
        let sum = hex::encode(Sha256::digest(body.as_bytes()));
        format!("{body}checksum {sum}\n")
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let bad = |msg: &str| Error::Cache(msg.to_string());
        let (body, last) = match text.trim_end_matches('\n').rsplit_once('\n') {
            Some((b, l)) => (format!("{b}\n"), l),
            None => return Err(bad("truncated file")),
        };
        let sum = last.strip_prefix("checksum ").ok_or_else(|| bad("missing checksum"))?;
        if hex::encode(Sha256::digest(body.as_bytes())) != sum {
            return Err(bad("checksum mismatch"));
        }
        let mut lines = body.lines();
        let mut next = |prefix: &str| -> Result<String, Error> {
            let line = lines.next().ok_or_else(|| bad("unexpected end of file"))?;
            line.strip_prefix(prefix)
                .map(|s| s.to_string())
                .ok_or_else(|| Error::Cache(format!("expected `{prefix}`, found `{line}`")))
        };
        let version: u32 = next(&format!("{MAGIC} "))?.parse().map_err(|_| bad("bad version"))?;
        if version != VERSION {
            return Err(Error::Cache(format!("unsupported version {version}")));
        }
        let rank: usize = next("rank ")?.parse().map_err(|_| bad("bad rank"))?;
        let degrees: Vec<usize> = next("degrees ")?
            .split_whitespace()
            .map(|d| d.parse().map_err(|_| bad("bad degree")))
            .collect::<Result<_, _>>()?;
        let mut generators = Vec::new();
        for p in 1..=degrees.len() {
            let head = next("generator ")?;
            let f: Vec<usize> = head.split_whitespace().filter_map(|x| x.parse().ok()).collect();
            if f.len() != 3 || f[0] != p {
                return Err(bad("bad generator header"));
            }
            let mut terms = Vec::with_capacity(f[2]);
            for _ in 0..f[2] {
                let t = next("term ")?;
                let (key, coef) = t.split_once(' ').ok_or_else(|| bad("bad term"))?;
                let c: Q = coef.parse().map_err(|_| Error::Cache(format!("bad coefficient `{coef}`")))?;
                terms.push((parse_monomial(key)?, c));
            }
            generators.push((f[1], terms));
        }
        Ok(GeneratorCacheFile { version, rank, degrees, generators })
    }

    pub fn read(path: &Path) -> Result<Self, Error> {
        Self::parse(&fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<(), Error> {
        fs::write(path, self.to_text())?;
        Ok(())
    }
}

fn monomial_key(m: &[(usize, i64)]) -> String {
    if m.is_empty() {
        return "-".to_string();
    }
    m.iter().map(|(l, t)| format!("{l}:{t}")).collect::<Vec<_>>().join(",")
}

fn parse_monomial(key: &str) -> Result<Monomial, Error> {
    if key == "-" {
        return Ok(Vec::new());
    }
    key.split(',')
        .map(|sym| {
            let (l, t) = sym.split_once(':').ok_or_else(|| Error::Cache(format!("bad symbol `{sym}`")))?;
            match (l.parse(), t.parse()) {
                (Ok(l), Ok(t)) => Ok((l, t)),
                _ => Err(Error::Cache(format!("bad symbol `{sym}`"))),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::q;

    fn sample() -> GeneratorCacheFile {
        GeneratorCacheFile {
            version: 1,
            rank: 1,
            degrees: vec![2],
            generators: vec![(2, vec![(vec![(0, 1), (0, 1)], q(1, 4))])],
        }
    }

    #[test]
    fn round_trip() {
        let f = sample();
        let text = f.to_text();
        let g = GeneratorCacheFile::parse(&text).unwrap();
        assert_eq!(g, f);
        assert_eq!(g.to_text(), text);
        assert!(text.contains("term 0:1,0:1 1/4"));
        assert_eq!(parse_monomial("-").unwrap(), Vec::<(usize, i64)>::new());
    }

    #[test]
    fn corruption_detected() {
        let text = sample().to_text().replace("1/4", "1/5");
        assert!(matches!(GeneratorCacheFile::parse(&text), Err(Error::Cache(_))));
        assert!(GeneratorCacheFile::parse("").is_err());
    }
}
