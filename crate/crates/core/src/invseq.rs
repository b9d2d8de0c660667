//! 021-avoiding inversion sequences and the `izero` recurrence.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{invalid, Error, Result};
use crate::poly::{MultiPoly, Var};
use crate::series::Series;

/// A sequence `(e_1, ..., e_n)` with `0 <= e_i < i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionSequence {
    e: Vec<usize>,
}

impl InversionSequence {
    pub fn new(e: Vec<usize>) -> Result<Self> {
        if let Some(i) = e.iter().enumerate().position(|(i, &v)| v > i) {
            return Err(invalid(format!("entry {} at position {} is not below {}", e[i], i + 1, i + 1)));
        }
        Ok(Self { e })
    }

    pub fn entries(&self) -> &[usize] {
        &self.e
    }

    pub fn len(&self) -> usize {
        self.e.len()
    }

    pub fn is_empty(&self) -> bool {
        self.e.is_empty()
    }

    /// Positive entries weakly increase.
    pub fn avoids_021(&self) -> bool {
        let mut last = 0;
        for &v in &self.e {
            if v > 0 {
                if v < last {
                    return false;
                }
                last = v;
            }
        }
        true
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.e.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for InversionSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let e = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(e)
    }
}

/// Calls `visit` on every 021-avoiding inversion sequence of length `n`,
/// in lexicographic order. The slice is only valid during the call.
pub fn visit_021(n: usize, mut visit: impl FnMut(&[usize])) {
    if n == 0 {
        return;
    }
    let mut e = Vec::with_capacity(n);
    e.push(0);
    grow(n, &mut e, 0, &mut visit);
}

fn grow(n: usize, e: &mut Vec<usize>, last_pos: usize, visit: &mut impl FnMut(&[usize])) {
    let i = e.len();
    if i == n {
        visit(e);
        return;
    }
    // position i+1 (1-based) admits 0 or any value in [max(last_pos,1), i]
    e.push(0);
    grow(n, e, last_pos, visit);
    e.pop();
    for v in last_pos.max(1)..=i {
        e.push(v);
        grow(n, e, v, visit);
        e.pop();
    }
}

pub fn enumerate_021(n: usize) -> Vec<InversionSequence> {
    let mut out = Vec::new();
    visit_021(n, |e| out.push(InversionSequence { e: e.to_vec() }));
    out
}

/// 1-based ascent positions `i` with `e_i < e_{i+1}`.
pub fn asc_set(e: &[usize]) -> Vec<usize> {
    (1..e.len()).filter(|&i| e[i - 1] < e[i]).collect()
}

pub fn asc(e: &[usize]) -> usize {
    e.windows(2).filter(|w| w[0] < w[1]).count()
}

/// Position of the first ascent, or `n`.
pub fn izero(e: &[usize]) -> usize {
    e.windows(2).position(|w| w[0] < w[1]).map_or(e.len(), |p| p + 1)
}

/// Double ascents `1 < i <= n` with the sentinel `e_{n+1} = n`.
pub fn da(e: &[usize]) -> usize {
    let n = e.len();
    let at = |i: usize| if i == n + 1 { n } else { e[i - 1] };
    (2..=n).filter(|&i| at(i - 1) < at(i) && at(i) < at(i + 1)).count()
}

/// Table `I[n][k]` for `1 <= k <= n <= n_max`; index 0 rows and columns are unused.
pub fn izero_recurrence_table(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut t = vec![vec![BigUint::from(0u32); n_max + 1]; n_max + 1];
    if n_max == 0 {
        return t;
    }
    t[1][1] = BigUint::from(1u32);
    for n in 2..=n_max {
        // tail[i] = sum_{k=i}^{n-1} 2^{k-i} I_{n-1,k}
        let mut tail = vec![BigUint::from(0u32); n + 1];
        for i in (1..n).rev() {
            tail[i] = &t[n - 1][i] + (&tail[i + 1] << 1u32);
        }
        t[n][1] = tail[1].clone();
        for i in 2..=n {
            t[n][i] = &t[n - 1][i - 1] + &tail[i];
        }
    }
    t
}

/// Brute-force `izero` counts, same shape as [`izero_recurrence_table`].
pub fn izero_counts(n_max: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; n_max + 1]; n_max + 1];
    for (n, row) in t.iter_mut().enumerate().skip(1) {
        visit_021(n, |e| row[izero(e)] += 1);
    }
    t
}

/// Drops `e_1` and lowers every positive entry by one.
pub fn delta(e: &InversionSequence) -> Result<InversionSequence> {
    if e.len() < 2 {
        return Err(invalid("delta needs length at least 2"));
    }
    let d = e.e[1..].iter().map(|&v| v.saturating_sub(1)).collect();
    Ok(InversionSequence { e: d })
}

/// For each `e` in `I_{n-1}(021)`, the number of preimages under [`delta`]
/// whose `izero` is `target`. Keyed by `e`.
pub fn delta_preimage_counts(n: usize, target: usize) -> std::collections::BTreeMap<Vec<usize>, u64> {
    let mut counts = std::collections::BTreeMap::new();
    visit_021(n - 1, |e| {
        counts.insert(e.to_vec(), 0);
    });
    visit_021(n, |e| {
        if izero(e) == target {
            let d: Vec<usize> = e[1..].iter().map(|&v| v.saturating_sub(1)).collect();
            *counts.get_mut(&d).expect("delta lands in the smaller class") += 1;
        }
    });
    counts
}

/// Joint `(asc, da, izero)` polynomial over `I_n(021)`.
pub fn joint_polynomial(n: usize, vars: [Var; 3]) -> MultiPoly {
    let mut tally: std::collections::BTreeMap<[usize; 3], u64> = Default::default();
    visit_021(n, |e| *tally.entry([asc(e), da(e), izero(e)]).or_default() += 1);
    let mut p = MultiPoly::zero();
    for (k, c) in tally {
        let m = MultiPoly::power_product(&[(vars[0], k[0] as u16), (vars[1], k[1] as u16), (vars[2], k[2] as u16)]);
        p += &m.scale(&crate::poly::rat(c as i64));
    }
    p
}

/// `G(t, x, y; z)` built from `(asc, da, izero)`, without constant term.
pub fn g_series(order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|n| if n == 0 { MultiPoly::zero() } else { joint_polynomial(n, [Var::T, Var::X, Var::Y]) })
        .collect();
    Series::from_coeffs(coeffs, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{self, joint_polynomial as perm_joint};
    use crate::perm::patterns;
    use crate::stats::Stat;

    const SCHRODER: [u64; 12] = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446];

    #[test]
    fn small_cases() {
        assert_eq!(enumerate_021(1), vec![InversionSequence::new(vec![0]).unwrap()]);
        let two: Vec<String> = enumerate_021(2).iter().map(|e| e.to_string()).collect();
        assert_eq!(two, vec!["0,0", "0,1"]);
        assert!(enumerate_021(0).is_empty());
    }

    #[test]
    fn statistics_on_examples() {
        let zeros = [0usize; 5];
        assert_eq!((asc(&zeros), izero(&zeros), da(&zeros)), (0, 5, 0));
        assert_eq!((asc(&[0, 1]), izero(&[0, 1])), (1, 1));
        assert_eq!(asc_set(&[0, 1, 1, 0, 3]), vec![1, 4]);
        assert_eq!(da(&[0, 1, 2]), 2);
    }

    #[test]
    fn parse_and_validate() {
        let e: InversionSequence = "0,0,1,3".parse().unwrap();
        assert_eq!(e.entries(), &[0, 0, 1, 3]);
        assert!(e.avoids_021());
        assert!("0,2".parse::<InversionSequence>().is_err());
        assert!(!InversionSequence::new(vec![0, 1, 2, 1]).unwrap().avoids_021());
    }

    #[test]
    fn counts_are_schroder() {
        for n in 1..=10 {
            let mut c = 0u64;
            visit_021(n, |e| {
                debug_assert!(InversionSequence::new(e.to_vec()).unwrap().avoids_021());
                c += 1;
            });
            assert_eq!(c, SCHRODER[n - 1]);
        }
    }

    #[test]
    fn enumeration_matches_filter() {
        for n in 1..=7 {
            let mut all = Vec::new();
            let mut e = vec![0; n];
            loop {
                let s = InversionSequence::new(e.clone()).unwrap();
                if s.avoids_021() {
                    all.push(s);
                }
                let mut i = n;
                while i > 0 && e[i - 1] == i - 1 {
                    e[i - 1] = 0;
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                e[i - 1] += 1;
            }
            assert_eq!(enumerate_021(n), all);
        }
    }

    #[test]
    fn recurrence_first_rows() {
        let t = izero_recurrence_table(3);
        assert_eq!(t[1][1], BigUint::from(1u32));
        assert_eq!((t[2][1].clone(), t[2][2].clone()), (BigUint::from(1u32), BigUint::from(1u32)));
    }

    #[test]
    fn recurrence_matches_brute_force() {
        let n_max = 10;
        let rec = izero_recurrence_table(n_max);
        let brute = izero_counts(n_max);
        for n in 1..=n_max {
            let row_sum: BigUint = rec[n].iter().sum();
            assert_eq!(row_sum, BigUint::from(SCHRODER[n - 1]));
            for k in 1..=n {
                assert_eq!(rec[n][k], BigUint::from(brute[n][k]), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn delta_examples_and_preimages() {
        let d = |v: Vec<usize>| delta(&InversionSequence::new(v).unwrap()).unwrap();
        assert_eq!(d(vec![0, 0]).entries(), &[0]);
        assert_eq!(d(vec![0, 1]).entries(), &[0]);
        assert!(delta(&InversionSequence::new(vec![0]).unwrap()).is_err());
        for n in 2..=8 {
            for (e, c) in delta_preimage_counts(n, 1) {
                assert_eq!(c, 1 << (izero(&e) - 1), "n={n} e={e:?}");
            }
        }
    }

    #[test]
    fn triple_matches_both_schroder_classes() {
        let stats = [(Stat::Des, Var::T), (Stat::Dd, Var::X), (Stat::Iar, Var::Y)];
        for n in 1..=7 {
            let inv = joint_polynomial(n, [Var::T, Var::X, Var::Y]);
            for p in ["2413,4213", "2413,3142"] {
                let perms = engine::enumerate(n, &patterns(p));
                assert_eq!(inv, perm_joint(&perms, &stats), "n={n} {p}");
            }
        }
    }
}
