//! Enumeration of avoidance classes and their statistic distributions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::perm::{all_permutations, PatternSet, Permutation};
use crate::poly::{MultiPoly, Var, NVARS};
use crate::series::Series;
use crate::stats::{comp, iar, SetStat, Stat};

/// All permutations of length `n` avoiding every pattern of `patterns`.
///
/// Grows the class one length at a time by inserting the new maximum into
/// every slot of each shorter avoider. A child can only contain a pattern
/// through the new letter, so only those occurrences are searched. The
/// output order is deterministic regardless of the thread count.
pub fn enumerate(n: usize, patterns: &PatternSet) -> Vec<Permutation> {
    let mut level = vec![Permutation::empty()];
    for m in 1..=n {
        level = level
            .par_iter()
            .flat_map_iter(|parent| {
                (1..=m).filter_map(move |pos| {
                    let child = parent.insert(m, pos).expect("valid insertion");
                    patterns
                        .iter()
                        .all(|pat| !child.contains_through(pat, pos))
                        .then_some(child)
                })
            })
            .collect();
    }
    level
}

/// Oracle: filters all `n!` permutations.
pub fn enumerate_by_filter(n: usize, patterns: &PatternSet) -> Vec<Permutation> {
    all_permutations(n)
        .into_iter()
        .filter(|pi| pi.avoids_all(patterns))
        .collect()
}

pub fn count(n: usize, patterns: &PatternSet) -> usize {
    enumerate(n, patterns).len()
}

/// Matrix of `(iar, comp)` counts, 1-based: `get(k, l)` counts permutations
/// with `iar = k` and `comp = l`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DistributionMatrix {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl DistributionMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            rows: vec![vec![0; n]; n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(invalid("distribution matrices are square"));
        }
        Ok(Self { n, rows })
    }

    /// Tallies a collection of permutations of length `n`.
    pub fn tally<'a>(n: usize, perms: impl IntoIterator<Item = &'a Permutation>) -> Self {
        let mut m = Self::zeros(n);
        for pi in perms {
            m.rows[iar(pi) - 1][comp(pi) - 1] += 1;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Entry at 1-based `(iar, comp)`.
    pub fn get(&self, k: usize, l: usize) -> u64 {
        self.rows[k - 1][l - 1]
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.rows[j][i] = self.rows[i][j];
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Constant along every skew-diagonal `i + j = const`.
    pub fn is_hankel(&self) -> bool {
        (1..self.n).all(|i| (0..self.n - 1).all(|j| self.rows[i][j] == self.rows[i - 1][j + 1]))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.rows[i][j] == 0))
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
    }

    /// `sum m_ij x^i y^j` in the given variables.
    pub fn generating_polynomial(&self, x: Var, y: Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    let mono = MultiPoly::power_product(&[(x, i as u16 + 1), (y, j as u16 + 1)]);
                    out += &mono.scale(&BigRational::from_integer(BigInt::from(m)));
                }
            }
        }
        out
    }
}

impl fmt::Display for DistributionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for DistributionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DistributionMatrix({:?})", self.rows)
    }
}

pub fn distribution_matrix(n: usize, patterns: &PatternSet) -> Result<DistributionMatrix> {
    if n == 0 {
        return Err(invalid("distribution matrices need n >= 1"));
    }
    Ok(DistributionMatrix::tally(n, &enumerate(n, patterns)))
}

/// Statistic used to split a distribution matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RefineKey {
    Des,
    Lmax,
    Lmin,
    Desb,
    LmaxLmin,
    LmaxDesb,
}

impl RefineKey {
    pub const ALL: [RefineKey; 6] = [
        RefineKey::Des,
        RefineKey::Lmax,
        RefineKey::Lmin,
        RefineKey::Desb,
        RefineKey::LmaxLmin,
        RefineKey::LmaxDesb,
    ];

    /// Key value of `pi`: one sorted list per component of the key.
    /// `des` is stored as the one-element list `[des]`.
    pub fn eval(self, pi: &Permutation) -> Vec<Vec<usize>> {
        match self {
            RefineKey::Des => vec![vec![Stat::Des.eval(pi)]],
            RefineKey::Lmax => vec![SetStat::Lmax.eval(pi)],
            RefineKey::Lmin => vec![SetStat::Lmin.eval(pi)],
            RefineKey::Desb => vec![SetStat::Desb.eval(pi)],
            RefineKey::LmaxLmin => vec![SetStat::Lmax.eval(pi), SetStat::Lmin.eval(pi)],
            RefineKey::LmaxDesb => vec![SetStat::Lmax.eval(pi), SetStat::Desb.eval(pi)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RefineKey::Des => "des",
            RefineKey::Lmax => "LMAX",
            RefineKey::Lmin => "LMIN",
            RefineKey::Desb => "DESB",
            RefineKey::LmaxLmin => "LMAX,LMIN",
            RefineKey::LmaxDesb => "LMAX,DESB",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
            .collect::<String>()
            .to_ascii_uppercase();
        RefineKey::ALL
            .into_iter()
            .find(|k| k.name().to_ascii_uppercase() == norm)
            .ok_or_else(|| invalid(format!("unsupported refinement key {s:?}")))
    }
}

pub type RefinedMatrices = BTreeMap<Vec<Vec<usize>>, DistributionMatrix>;

/// Splits the distribution matrix by the value of `key`.
pub fn refined_matrices(n: usize, patterns: &PatternSet, key: RefineKey) -> Result<RefinedMatrices> {
    if n == 0 {
        return Err(invalid("distribution matrices need n >= 1"));
    }
    Ok(refine(n, &enumerate(n, patterns), key))
}

pub fn refine(n: usize, perms: &[Permutation], key: RefineKey) -> RefinedMatrices {
    let mut out: RefinedMatrices = BTreeMap::new();
    for pi in perms {
        let m = out
            .entry(key.eval(pi))
            .or_insert_with(|| DistributionMatrix::zeros(n));
        m.rows[iar(pi) - 1][comp(pi) - 1] += 1;
    }
    out
}

/// `sum over pi of prod var^stat(pi)` for the given `(stat, variable)` pairs.
pub fn joint_distribution(n: usize, patterns: &PatternSet, stats: &[(Stat, Var)]) -> MultiPoly {
    joint_polynomial(&enumerate(n, patterns), stats)
}

pub fn joint_polynomial(perms: &[Permutation], stats: &[(Stat, Var)]) -> MultiPoly {
    let mut counts: BTreeMap<[u16; NVARS], u64> = BTreeMap::new();
    for pi in perms {
        let mut e = [0u16; NVARS];
        for &(st, v) in stats {
            e[v as usize] += st.eval(pi) as u16;
        }
        *counts.entry(e).or_insert(0) += 1;
    }
    let mut out = MultiPoly::zero();
    for (e, c) in counts {
        out += &MultiPoly::monomial(e, BigRational::from_integer(BigInt::from(c)));
    }
    out
}

/// Series whose `z^n` coefficient is the joint distribution over length `n`.
pub fn joint_series(order: usize, patterns: &PatternSet, stats: &[(Stat, Var)]) -> Series {
    let coeffs = (0..=order)
        .map(|n| joint_distribution(n, patterns, stats))
        .collect();
    Series::from_coeffs(coeffs, order)
}

/// The `(des, iar, comp)` marking in `(t, r, p)` used by the closed forms.
pub const DES_IAR_COMP: [(Stat, Var); 3] = [(Stat::Des, Var::T), (Stat::Iar, Var::R), (Stat::Comp, Var::P)];

/// Coefficients in the basis `t^k (1+t)^(n-1-2k)`, found by peeling off the
/// lowest remaining degree.
pub fn gamma_vector(poly: &MultiPoly, n: usize) -> Result<Vec<BigRational>> {
    if n == 0 {
        return Err(invalid("gamma expansion needs n >= 1"));
    }
    let mut rest = poly.univariate_coeffs(Var::T)?;
    if rest.len() > n {
        if rest[n..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotGammaExpressible(format!("{poly} has degree above {}", n - 1)));
        }
    }
    rest.resize(n, BigRational::zero());
    let mut gamma = Vec::new();
    for k in 0..=(n - 1) / 2 {
        let g = rest[k].clone();
        // subtract g * t^k (1+t)^(n-1-2k)
        let m = n - 1 - 2 * k;
        let mut binom = BigRational::one();
        for i in 0..=m {
            rest[k + i] -= &g * &binom;
            binom = binom * BigRational::from_integer(BigInt::from(m - i)) / BigRational::from_integer(BigInt::from(i + 1));
        }
        gamma.push(g);
    }
    if rest.iter().any(|c| !c.is_zero()) {
        return Err(Error::NotGammaExpressible(format!("{poly} leaves a remainder")));
    }
    Ok(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::patterns;
    use crate::poly::{rat, vars::*};

    #[test]
    fn enumerate_matches_filter() {
        for set in ["123", "2413,3142", "132,213", "2431,4231", "1"] {
            let p = patterns(set);
            for n in 0..=7 {
                let mut fast = enumerate(n, &p);
                fast.sort();
                assert_eq!(fast, enumerate_by_filter(n, &p), "{set} at n = {n}");
            }
        }
    }

    #[test]
    fn counts() {
        assert!(enumerate(5, &patterns("123,321")).is_empty());
        assert_eq!(count(4, &patterns("12345")), 24);
        assert_eq!(count(0, &patterns("321")), 1);
        assert_eq!(count(9, &patterns("2413,3142")), 41586);
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(count(n, &patterns("321")), c);
        }
        for n in 1..=10 {
            assert_eq!(count(n, &patterns("132,213")), 1 << (n - 1));
        }
    }

    #[test]
    fn schroder_matrix() {
        let m = distribution_matrix(4, &patterns("2413,3142")).unwrap();
        assert_eq!(
            m.rows(),
            &[vec![7, 3, 1, 0], vec![3, 3, 1, 0], vec![1, 1, 1, 0], vec![0, 0, 0, 1]]
        );
        let m2 = distribution_matrix(2, &patterns("2413,3142")).unwrap();
        assert_eq!(m2.rows(), &[vec![1, 0], vec![0, 1]]);
        assert_eq!(distribution_matrix(5, &patterns("2413,3142")).unwrap().get(1, 1), 28);
        assert!(distribution_matrix(0, &patterns("321")).is_err());
    }

    #[test]
    fn matrix_predicates() {
        let m = DistributionMatrix::from_rows(vec![vec![2, 1], vec![1, 0]]).unwrap();
        assert!(m.is_hankel() && m.is_symmetric());
        let l = DistributionMatrix::from_rows(vec![vec![2, 0], vec![1, 0]]).unwrap();
        assert!(!l.is_hankel() && l.is_lower_triangular());
        assert_eq!(l.transpose().rows(), &[vec![2, 1], vec![0, 0]]);
    }

    #[test]
    fn refinements_sum_to_matrix() {
        let p = patterns("132");
        let full = distribution_matrix(6, &p).unwrap();
        for key in RefineKey::ALL {
            let mut sum = DistributionMatrix::zeros(6);
            for m in refined_matrices(6, &p, key).unwrap().values() {
                sum.add_assign(m);
            }
            assert_eq!(sum, full, "{}", key.name());
        }
        assert_eq!(RefineKey::parse("(LMAX, LMIN)").unwrap(), RefineKey::LmaxLmin);
        assert!(RefineKey::parse("maj").is_err());
    }

    #[test]
    fn joint_distribution_low_order() {
        let stats = [(Stat::Des, Var::T), (Stat::Dd, Var::X), (Stat::Iar, Var::Y)];
        let g3 = joint_distribution(3, &patterns("2413,3142"), &stats);
        let expected = &(&(&y().pow(3) + &(&c(2) * &(&(&t() * &x()) * &y().pow(2))))
            + &(&c(2) * &(&t() * &y())))
            + &(&(&t().pow(2) * &x().pow(2)) * &y());
        assert_eq!(g3, expected);
        assert_eq!(joint_distribution(6, &patterns("321"), &DES_IAR_COMP).eval_ones(), rat(132));
    }

    #[test]
    fn gamma_vectors() {
        let eulerian = &(&c(1) + &(&c(4) * &t())) + &t().pow(2);
        assert_eq!(gamma_vector(&eulerian, 3).unwrap(), vec![rat(1), rat(2)]);
        assert_eq!(gamma_vector(&c(1), 1).unwrap(), vec![rat(1)]);
        assert!(matches!(gamma_vector(&(&c(1) + &t()), 3), Err(Error::NotGammaExpressible(_))));
    }
}
