//! Numerical and set-valued permutation statistics.
//!
//! Set-valued statistics are returned as sorted `Vec<usize>`, which doubles as
//! a canonical key for refined distributions.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::perm::Permutation;

/// Descent positions `i` with `pi(i) > pi(i+1)`.
pub fn des_set(pi: &Permutation) -> Vec<usize> {
    let v = pi.values();
    (1..v.len()).filter(|&i| v[i - 1] > v[i]).collect()
}

pub fn des(pi: &Permutation) -> usize {
    let v = pi.values();
    v.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Length of the initial ascending run: `min(DES ∪ {n})`, and 0 on the empty permutation.
pub fn iar(pi: &Permutation) -> usize {
    let v = pi.values();
    (1..v.len()).find(|&i| v[i - 1] > v[i]).unwrap_or(v.len())
}

/// Number of direct-sum components.
pub fn comp(pi: &Permutation) -> usize {
    let mut max = 0;
    let mut count = 0;
    for (i, &v) in pi.values().iter().enumerate() {
        max = max.max(v);
        if max == i + 1 {
            count += 1;
        }
    }
    count
}

/// Last descent position, or 0 without descents.
pub fn ldes(pi: &Permutation) -> usize {
    des_set(pi).last().copied().unwrap_or(0)
}

/// Descent bottoms `{pi(i+1) : i ∈ DES}`, sorted.
pub fn desb_set(pi: &Permutation) -> Vec<usize> {
    let v = pi.values();
    let mut out: Vec<usize> = v.windows(2).filter(|w| w[0] > w[1]).map(|w| w[1]).collect();
    out.sort_unstable();
    out
}

/// Values of the left-to-right maxima, sorted.
pub fn lmax_set(pi: &Permutation) -> Vec<usize> {
    let mut max = 0;
    let mut out = Vec::new();
    for &v in pi.values() {
        if v > max {
            max = v;
            out.push(v);
        }
    }
    out
}

/// Positions of the left-to-right maxima.
pub fn lmaxp_set(pi: &Permutation) -> Vec<usize> {
    let mut max = 0;
    let mut out = Vec::new();
    for (i, &v) in pi.values().iter().enumerate() {
        if v > max {
            max = v;
            out.push(i + 1);
        }
    }
    out
}

/// Values of the left-to-right minima, sorted.
pub fn lmin_set(pi: &Permutation) -> Vec<usize> {
    let mut min = usize::MAX;
    let mut out = Vec::new();
    for &v in pi.values() {
        if v < min {
            min = v;
            out.push(v);
        }
    }
    out.sort_unstable();
    out
}

pub fn lmax(pi: &Permutation) -> usize {
    lmaxp_set(pi).len()
}

pub fn lmin(pi: &Permutation) -> usize {
    lmin_set(pi).len()
}

fn double_descents(v: &[usize], left: usize, right: usize) -> usize {
    let n = v.len();
    let at = |i: usize| -> usize {
        if i == 0 {
            left
        } else if i == n + 1 {
            right
        } else {
            v[i - 1]
        }
    };
    (1..=n).filter(|&i| at(i - 1) > at(i) && at(i) > at(i + 1)).count()
}

fn nonempty(pi: &Permutation) -> Result<&[usize]> {
    if pi.is_empty() {
        Err(invalid("double descents need n >= 1"))
    } else {
        Ok(pi.values())
    }
}

/// Double descents with `pi(0) = pi(n+1) = 0`.
pub fn dd(pi: &Permutation) -> Result<usize> {
    Ok(double_descents(nonempty(pi)?, 0, 0))
}

/// Double descents with `pi(0) = 0` and `pi(n+1) = +inf`.
pub fn dd0(pi: &Permutation) -> Result<usize> {
    Ok(double_descents(nonempty(pi)?, 0, usize::MAX))
}

/// Double descents with `pi(0) = +inf` and `pi(n+1) = 0`.
pub fn ddinf(pi: &Permutation) -> Result<usize> {
    Ok(double_descents(nonempty(pi)?, usize::MAX, 0))
}

/// Every statistic of a permutation at once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatProfile {
    pub des: usize,
    pub iar: usize,
    pub comp: usize,
    pub dd: usize,
    pub dd0: usize,
    pub ddinf: usize,
    pub ldes: usize,
    pub des_set: Vec<usize>,
    pub desb: Vec<usize>,
    pub lmax: Vec<usize>,
    pub lmaxp: Vec<usize>,
    pub lmin: Vec<usize>,
}

impl StatProfile {
    /// The dd variants are reported as 0 on the empty permutation.
    pub fn of(pi: &Permutation) -> Self {
        Self {
            des: des(pi),
            iar: iar(pi),
            comp: comp(pi),
            dd: dd(pi).unwrap_or(0),
            dd0: dd0(pi).unwrap_or(0),
            ddinf: ddinf(pi).unwrap_or(0),
            ldes: ldes(pi),
            des_set: des_set(pi),
            desb: desb_set(pi),
            lmax: lmax_set(pi),
            lmaxp: lmaxp_set(pi),
            lmin: lmin_set(pi),
        }
    }
}

/// Integer-valued statistics usable as exponents in joint distributions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stat {
    Des,
    Iar,
    Comp,
    Dd,
    Dd0,
    Ddinf,
    Ldes,
    Lmax,
    Lmin,
}

impl Stat {
    pub const ALL: [Stat; 9] = [
        Stat::Des,
        Stat::Iar,
        Stat::Comp,
        Stat::Dd,
        Stat::Dd0,
        Stat::Ddinf,
        Stat::Ldes,
        Stat::Lmax,
        Stat::Lmin,
    ];

    /// Value on `pi`; the dd variants give 0 on the empty permutation.
    pub fn eval(self, pi: &Permutation) -> usize {
        match self {
            Stat::Des => des(pi),
            Stat::Iar => iar(pi),
            Stat::Comp => comp(pi),
            Stat::Dd => dd(pi).unwrap_or(0),
            Stat::Dd0 => dd0(pi).unwrap_or(0),
            Stat::Ddinf => ddinf(pi).unwrap_or(0),
            Stat::Ldes => ldes(pi),
            Stat::Lmax => lmax(pi),
            Stat::Lmin => lmin(pi),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Stat::Des => "des",
            Stat::Iar => "iar",
            Stat::Comp => "comp",
            Stat::Dd => "dd",
            Stat::Dd0 => "dd0",
            Stat::Ddinf => "ddinf",
            Stat::Ldes => "ldes",
            Stat::Lmax => "lmax",
            Stat::Lmin => "lmin",
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Stat::ALL
            .into_iter()
            .find(|st| st.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown statistic {s:?}")))
    }
}

/// Set-valued statistics used as refinement keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetStat {
    Des,
    Desb,
    Lmax,
    Lmaxp,
    Lmin,
}

impl SetStat {
    pub fn eval(self, pi: &Permutation) -> Vec<usize> {
        match self {
            SetStat::Des => des_set(pi),
            SetStat::Desb => desb_set(pi),
            SetStat::Lmax => lmax_set(pi),
            SetStat::Lmaxp => lmaxp_set(pi),
            SetStat::Lmin => lmin_set(pi),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SetStat::Des => "DES",
            SetStat::Desb => "DESB",
            SetStat::Lmax => "LMAX",
            SetStat::Lmaxp => "LMAXP",
            SetStat::Lmin => "LMIN",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_permutations, perm};

    #[test]
    fn descent_sets() {
        assert!(des_set(&Permutation::identity(5)).is_empty());
        assert_eq!(des_set(&Permutation::decreasing(4)), vec![1, 2, 3]);
        assert_eq!(des_set(&perm("259867431")), vec![3, 4, 6, 7, 8]);
    }

    #[test]
    fn iar_examples() {
        assert_eq!(iar(&Permutation::identity(6)), 6);
        assert_eq!(iar(&perm("312")), 1);
        assert_eq!(iar(&perm("12543")), 3);
        assert_eq!(iar(&Permutation::empty()), 0);
    }

    #[test]
    fn comp_examples() {
        assert_eq!(comp(&perm("312465")), 3);
        assert_eq!(comp(&Permutation::identity(7)), 7);
        assert_eq!(comp(&perm("2413")), 1);
        assert_eq!(comp(&Permutation::empty()), 0);
    }

    #[test]
    fn set_statistics() {
        assert!(desb_set(&Permutation::identity(4)).is_empty());
        assert_eq!(desb_set(&perm("21")), vec![1]);
        assert_eq!(desb_set(&perm("312")), vec![1]);
        assert_eq!(lmaxp_set(&perm("213")), vec![1, 3]);
        assert_eq!(lmax_set(&Permutation::identity(4)), vec![1, 2, 3, 4]);
        assert_eq!(lmin_set(&perm("312")), vec![1, 3]);
        assert_eq!(ldes(&perm("2143")), 3);
        assert_eq!(ldes(&perm("1234")), 0);
    }

    #[test]
    fn double_descent_variants() {
        assert_eq!(dd(&perm("321")).unwrap(), 2);
        assert_eq!(dd(&Permutation::identity(5)).unwrap(), 0);
        assert_eq!(ddinf(&perm("1")).unwrap(), 1);
        assert_eq!(dd0(&perm("1")).unwrap(), 0);
        assert_eq!(dd0(&perm("321")).unwrap(), 1);
        assert_eq!(ddinf(&perm("321")).unwrap(), 3);
        assert!(dd(&Permutation::empty()).is_err());
    }

    #[test]
    fn iar_is_first_descent_or_n() {
        for n in 0..=7 {
            for pi in all_permutations(n) {
                let expected = des_set(&pi).first().copied().unwrap_or(n);
                assert_eq!(iar(&pi), expected);
                assert_eq!(comp(&pi), pi.decompose().len());
                assert_eq!(des(&pi), des_set(&pi).len());
            }
        }
    }

    #[test]
    fn stat_names_round_trip() {
        for st in Stat::ALL {
            assert_eq!(st.name().parse::<Stat>().unwrap(), st);
        }
        assert!("maj".parse::<Stat>().is_err());
    }
}
