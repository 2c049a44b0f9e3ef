//! Brute-force counts used as oracles by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

/// `p(n)` by Euler's pentagonal recurrence.
pub fn partitions(n_max: usize) -> Vec<i64> {
    let mut p = vec![0i64; n_max + 1];
    p[0] = 1;
    for n in 1..=n_max {
        let mut acc = 0i64;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[n - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                acc += sign * p[n - g2];
            }
        }
        p[n] = acc;
    }
    p
}

/// Partitions into `colors` colors, by summing products of `p(n_i)`.
pub fn colored(colors: usize, n: usize) -> i64 {
    let p = partitions(n);
    fn rec(colors: usize, n: usize, p: &[i64]) -> i64 {
        if colors == 0 {
            return if n == 0 { 1 } else { 0 };
        }
        (0..=n).map(|k| p[k] * rec(colors - 1, n - k, p)).sum()
    }
    rec(colors, n, &p)
}

/// Number of multisets of pairs `(k, j)`, `1 <= k <= rank`, `j >= min_part(k)`,
/// with `sum j = n`, keyed by `sum weight(k)`.
pub fn count_pairs(
    rank: usize,
    n: usize,
    min_part: impl Fn(usize) -> usize,
    weight: impl Fn(usize) -> usize,
) -> BTreeMap<usize, i64> {
    let mut pairs = Vec::new();
    for k in 1..=rank {
        for j in min_part(k).max(1)..=n {
            pairs.push((k, j));
        }
    }
    let mut out = BTreeMap::new();
    fn rec(
        rest: usize,
        from: usize,
        deg: usize,
        pairs: &[(usize, usize)],
        weight: &dyn Fn(usize) -> usize,
        out: &mut BTreeMap<usize, i64>,
    ) {
        if rest == 0 {
            *out.entry(deg).or_insert(0) += 1;
            return;
        }
        for i in from..pairs.len() {
            let (k, j) = pairs[i];
            if j <= rest {
                rec(rest - j, i, deg + weight(k), pairs, weight, out);
            }
        }
    }
    rec(n, 0, 0, &pairs, &weight, &mut out);
    out
}

/// Coefficient of `t^d q^n` in `prod_k prod_j (1 - t^{k+1} q^j)^{-1}`.
pub fn two_variable(rank: usize, n: usize) -> BTreeMap<usize, i64> {
    count_pairs(rank, n, |_| 1, |k| k + 1)
}

/// Coefficient of `q^d` in `prod_k prod_{j >= k+1} (1 - q^j)^{-1}`.
pub fn walg_count(rank: usize, d: usize) -> i64 {
    count_pairs(rank, d, |k| k + 1, |_| 0).values().sum()
}

/// `t^d` coefficients of `TPoly`'s display string, e.g. "t^2 + 3t^4".
pub fn parse_tpoly(s: &str) -> BTreeMap<usize, i64> {
    let mut out = BTreeMap::new();
    if s == "0" {
        return out;
    }
    let s = s.replace(" - ", " + -");
    for term in s.split(" + ") {
        let (coef, deg) = match term.split_once('t') {
            None => (term.to_string(), 0),
            Some((c, rest)) => {
                let deg = rest.strip_prefix('^').map_or(1, |d| d.parse().unwrap());
                let c = match c {
                    "" => "1".to_string(),
                    "-" => "-1".to_string(),
                    _ => c.to_string(),
                };
                (c, deg)
            }
        };
        out.insert(deg, coef.parse().unwrap());
    }
    out
}

#[test]
fn oracle_sanity() {
    assert_eq!(partitions(10), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    assert_eq!(colored(2, 3), 10);
    assert_eq!((0..=6).map(|d| walg_count(1, d)).collect::<Vec<_>>(), vec![1, 0, 1, 1, 2, 2, 4]);
    assert_eq!(two_variable(1, 2), BTreeMap::from([(2, 1), (4, 1)]));
    assert_eq!(parse_tpoly("1 - 2t + 3t^3"), BTreeMap::from([(0, 1), (1, -2), (3, 3)]));
}
