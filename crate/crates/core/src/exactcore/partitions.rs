use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients of `prod_{j>=1} (1 - q^j)^{-colors}` up to `q^n_max`.
pub fn colored_partitions_table(colors: u32, n_max: usize) -> Vec<BigInt> {
    let mut table = vec![BigInt::zero(); n_max + 1];
    table[0] = BigInt::one();
    for _ in 0..colors {
        for part in 1..=n_max {
            for n in part..=n_max {
                let prev = table[n - part].clone();
                table[n] += prev;
            }
        }
    }
    table
}

/// Number of partitions of `n` into parts of `colors` colours.
pub fn colored_partitions(colors: u32, n: usize) -> BigInt {
    colored_partitions_table(colors, n)[n].clone()
}

/// All partitions of `n` with parts drawn from `allowed`, each as a
/// non-increasing list. Deterministic order.
pub fn partitions_into_parts(n: usize, allowed: &[usize]) -> Vec<Vec<usize>> {
    let mut parts: Vec<usize> = allowed.iter().copied().filter(|&p| p >= 1 && p <= n).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts.dedup();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, parts: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for (i, &p) in parts.iter().enumerate() {
            if p <= rest {
                cur.push(p);
                rec(rest - p, &parts[i..], cur, out);
                cur.pop();
            }
        }
    }
    rec(n, &parts, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(colored_partitions(1, 0), BigInt::from(1));
        assert_eq!(colored_partitions(1, 4), BigInt::from(5));
        assert_eq!(colored_partitions(2, 3), BigInt::from(10));
        let t: Vec<i64> = colored_partitions_table(3, 6).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(t, vec![1, 3, 9, 22, 51, 108, 221]);
    }

    /// Enumerate colour-labelled multisets of parts directly.
    fn brute(colors: usize, n: usize) -> usize {
        // parts are (size, colour) pairs taken in non-increasing order
        let kinds: Vec<(usize, usize)> =
            (1..=n).rev().flat_map(|s| (0..colors).map(move |c| (s, c))).collect();
        fn rec(rest: usize, kinds: &[(usize, usize)]) -> usize {
            if rest == 0 {
                return 1;
            }
            let mut total = 0;
            for (i, &(s, _)) in kinds.iter().enumerate() {
                if s <= rest {
                    total += rec(rest - s, &kinds[i..]);
                }
            }
            total
        }
        rec(n, &kinds)
    }

    #[test]
    fn matches_brute_force() {
        for colors in 1..=2u32 {
            for n in 0..=8 {
                assert_eq!(colored_partitions(colors, n), BigInt::from(brute(colors as usize, n)));
            }
        }
    }

    #[test]
    fn restricted_parts() {
        assert_eq!(partitions_into_parts(6, &[1, 3, 5]).len(), 4);
        assert_eq!(partitions_into_parts(0, &[2]), vec![Vec::<usize>::new()]);
        assert!(partitions_into_parts(3, &[2]).is_empty());
    }
}
