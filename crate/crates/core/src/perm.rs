//! Permutations in one-line notation and their elementary operations.
//!
//! Values and positions are 1-based throughout: a permutation of length `n`
//! stores each of `1..=n` exactly once. The empty permutation is a legal value.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, precondition, Error, Result};

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation, checking that `values` is a bijection on `1..=n`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(invalid(format!("value {v} out of range 1..={n}")));
            }
            if seen[v] {
                return Err(invalid(format!("value {v} appears twice")));
            }
            seen[v] = true;
        }
        Ok(Self { values })
    }

    pub fn empty() -> Self {
        Self { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n).collect(),
        }
    }

    /// The decreasing permutation `n n-1 ... 1`.
    pub fn decreasing(n: usize) -> Self {
        Self {
            values: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    /// `pi(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// 1-based position of value `v`.
    pub fn position_of(&self, v: usize) -> Option<usize> {
        self.values.iter().position(|&x| x == v).map(|p| p + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Removes the value `i` and reduces the remaining word.
    pub fn delete(&self, i: usize) -> Result<Self> {
        let n = self.len();
        if i == 0 || i > n {
            return Err(invalid(format!("cannot delete {i} from a permutation of length {n}")));
        }
        let values = self
            .values
            .iter()
            .filter(|&&v| v != i)
            .map(|&v| if v > i { v - 1 } else { v })
            .collect();
        Ok(Self { values })
    }

    /// Increments every letter `>= i` and places `i` at position `k`.
    pub fn insert(&self, i: usize, k: usize) -> Result<Self> {
        let n = self.len();
        if i == 0 || i > n + 1 {
            return Err(invalid(format!("inserted value {i} out of range 1..={}", n + 1)));
        }
        if k == 0 || k > n + 1 {
            return Err(invalid(format!("insertion position {k} out of range 1..={}", n + 1)));
        }
        let mut values = Vec::with_capacity(n + 1);
        for (pos, &v) in self.values.iter().enumerate() {
            if pos + 1 == k {
                values.push(i);
            }
            values.push(if v >= i { v + 1 } else { v });
        }
        if k == n + 1 {
            values.push(i);
        }
        Ok(Self { values })
    }

    /// Inserts `i` as the new last letter.
    pub fn insert_end(&self, i: usize) -> Result<Self> {
        self.insert(i, self.len() + 1)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let k = self.len();
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|&v| v + k));
        Self { values }
    }

    pub fn skew_sum(&self, other: &Self) -> Self {
        let l = other.len();
        let mut values: Vec<usize> = self.values.iter().map(|&v| v + l).collect();
        values.extend_from_slice(&other.values);
        Self { values }
    }

    pub fn reverse(&self) -> Self {
        Self {
            values: self.values.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        Self {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v - 1] = i + 1;
        }
        Self { values }
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Self) -> Result<bool> {
        if pattern.is_empty() {
            return Err(invalid("the empty pattern is not allowed"));
        }
        Ok(Matcher::new(&self.values, &pattern.values, None).run())
    }

    /// Like [`contains`](Self::contains) but only considers occurrences that use
    /// the letter at the 1-based position `pos`.
    pub fn contains_through(&self, pattern: &Self, pos: usize) -> bool {
        debug_assert!(!pattern.is_empty() && pos >= 1 && pos <= self.len());
        Matcher::new(&self.values, &pattern.values, Some(pos - 1)).run()
    }

    pub fn avoids(&self, pattern: &Self) -> bool {
        !Matcher::new(&self.values, &pattern.values, None).run()
    }

    pub fn avoids_all(&self, patterns: &PatternSet) -> bool {
        patterns.iter().all(|p| self.avoids(p))
    }

    /// Splits the permutation into its indecomposable direct-sum components.
    pub fn decompose(&self) -> Vec<Permutation> {
        let mut parts = Vec::new();
        let mut start = 0;
        let mut max = 0;
        for (i, &v) in self.values.iter().enumerate() {
            max = max.max(v);
            if max == i + 1 {
                let part = self.values[start..=i].iter().map(|&x| x - start).collect();
                parts.push(Permutation { values: part });
                start = i + 1;
            }
        }
        parts
    }

    pub fn is_indecomposable(&self) -> bool {
        !self.is_empty() && self.decompose().len() == 1
    }

    /// True iff the permutation avoids both 2413 and 3142.
    pub fn is_separable(&self) -> bool {
        let p2413 = Permutation { values: vec![2, 4, 1, 3] };
        let p3142 = Permutation { values: vec![3, 1, 4, 2] };
        self.avoids(&p2413) && self.avoids(&p3142)
    }

    /// Block decomposition of a separable permutation around its maximum.
    ///
    /// A block is a maximal run of consecutive values lying on the same side
    /// of `n`. For separable input the blocks before `n` increase and the
    /// blocks after `n` decrease, and their numbers differ by at most one.
    pub fn stankova_blocks(&self) -> Result<StankovaBlocks> {
        let n = self.len();
        if n == 0 {
            return Err(precondition("block decomposition needs n >= 1"));
        }
        if !self.is_separable() {
            return Err(precondition(format!("{self} is not separable")));
        }
        Ok(self.blocks_around_max())
    }

    /// Maximal same-side value runs around the maximum, without any
    /// separability requirement. Blocks need not be contiguous in general.
    pub fn blocks_around_max(&self) -> StankovaBlocks {
        let n = self.len();
        if n == 0 {
            return StankovaBlocks { before: Vec::new(), after: Vec::new() };
        }
        let pos_max = self.position_of(n).expect("max present") - 1;
        let mut pos = vec![0; n + 1];
        for (i, &v) in self.values.iter().enumerate() {
            pos[v] = i;
        }
        // group values 1..n-1 into maximal same-side runs
        let mut runs: Vec<Vec<usize>> = Vec::new();
        for v in 1..n {
            let left = pos[v] < pos_max;
            match runs.last_mut() {
                Some(run) if (pos[run[0]] < pos_max) == left => run.push(v),
                _ => runs.push(vec![v]),
            }
        }
        let mut before = Vec::new();
        let mut after = Vec::new();
        for run in runs {
            let mut positions: Vec<usize> = run.iter().map(|&v| pos[v]).collect();
            positions.sort_unstable();
            let block = Block {
                values: positions.iter().map(|&p| self.values[p]).collect(),
                first_position: positions[0] + 1,
            };
            if positions[0] < pos_max {
                before.push(block);
            } else {
                after.push(block);
            }
        }
        before.sort_by_key(|b| b.first_position);
        after.sort_by_key(|b| b.first_position);
        StankovaBlocks { before, after }
    }
}

/// One block of the decomposition around the maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Letters of the block in the order they occur.
    pub values: Vec<usize>,
    /// 1-based position of the block's first letter.
    pub first_position: usize,
}

impl Block {
    pub fn min(&self) -> usize {
        *self.values.iter().min().expect("blocks are nonempty")
    }

    pub fn max(&self) -> usize {
        *self.values.iter().max().expect("blocks are nonempty")
    }

    /// True iff the block occupies consecutive positions.
    pub fn is_contiguous(&self, pi: &Permutation) -> bool {
        let start = self.first_position - 1;
        pi.values()
            .get(start..start + self.values.len())
            .is_some_and(|w| w == self.values.as_slice())
    }

    /// The block's letters reduced to a permutation.
    pub fn content(&self) -> Permutation {
        reduce(&self.values).expect("block letters are distinct")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StankovaBlocks {
    pub before: Vec<Block>,
    pub after: Vec<Block>,
}

/// Replaces the j-th smallest letter of `word` by `j`.
pub fn reduce(word: &[usize]) -> Result<Permutation> {
    let mut sorted: Vec<usize> = word.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(invalid("reduction needs distinct letters"));
    }
    if sorted.first() == Some(&0) {
        return Err(invalid("reduction needs positive letters"));
    }
    let values = word
        .iter()
        .map(|v| sorted.binary_search(v).expect("letter present") + 1)
        .collect();
    Ok(Permutation { values })
}

struct Matcher<'a> {
    text: &'a [usize],
    pattern: &'a [usize],
    // index of the pattern letter just below / above pattern[a] among pattern[..a]
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    chosen: Vec<usize>,
    must: Option<usize>,
}

impl<'a> Matcher<'a> {
    fn new(text: &'a [usize], pattern: &'a [usize], must: Option<usize>) -> Self {
        let k = pattern.len();
        let mut below = vec![None; k];
        let mut above = vec![None; k];
        for a in 0..k {
            for b in 0..a {
                if pattern[b] < pattern[a] {
                    if below[a].is_none_or(|c: usize| pattern[c] < pattern[b]) {
                        below[a] = Some(b);
                    }
                } else if above[a].is_none_or(|c: usize| pattern[c] > pattern[b]) {
                    above[a] = Some(b);
                }
            }
        }
        Self {
            text,
            pattern,
            below,
            above,
            chosen: vec![0; k],
            must,
        }
    }

    fn run(&mut self) -> bool {
        if self.pattern.len() > self.text.len() {
            return false;
        }
        self.search(0, 0, self.must.is_none())
    }

    fn search(&mut self, a: usize, start: usize, used_must: bool) -> bool {
        let k = self.pattern.len();
        if a == k {
            return used_must;
        }
        let last = self.text.len() - (k - a);
        for j in start..=last {
            if let Some(m) = self.must {
                if !used_must && j > m {
                    break;
                }
            }
            let v = self.text[j];
            if self.below[a].is_some_and(|b| self.chosen[b] > v) {
                continue;
            }
            if self.above[a].is_some_and(|b| self.chosen[b] < v) {
                continue;
            }
            self.chosen[a] = v;
            if self.search(a + 1, j + 1, used_must || self.must == Some(j)) {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses whitespace-separated letters ("3 1 2"), or a compact word of
    /// single digits ("312") when no whitespace is present.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let values: Vec<usize> = if s.contains(char::is_whitespace) {
            s.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A nonempty set of nonempty patterns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternSet {
    patterns: Vec<Permutation>,
}

impl PatternSet {
    pub fn new(patterns: Vec<Permutation>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(invalid("a pattern set needs at least one pattern"));
        }
        if patterns.iter().any(Permutation::is_empty) {
            return Err(invalid("patterns must be nonempty"));
        }
        Ok(Self { patterns })
    }

    /// Parses a comma-separated list such as `"2413,3142"`.
    pub fn parse(s: &str) -> Result<Self> {
        let patterns = s
            .split(',')
            .map(|w| w.trim().parse::<Permutation>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(patterns).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.patterns.iter()
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Patterns in canonical (sorted, deduplicated) order.
    pub fn canonical(&self) -> Self {
        let mut patterns = self.patterns.clone();
        patterns.sort();
        patterns.dedup();
        Self { patterns }
    }

    /// Compact text form: digits when every letter is below 10.
    pub fn words(&self) -> Vec<String> {
        self.patterns.iter().map(compact_word).collect()
    }
}

pub(crate) fn compact_word(p: &Permutation) -> String {
    if p.values().iter().all(|&v| v < 10) {
        p.values().iter().map(|v| v.to_string()).collect()
    } else {
        p.to_string()
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.words().join(","))
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSet({self})")
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Shorthand used throughout tests and examples: `perm("312")`.
pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap_or_else(|e| panic!("bad permutation {s:?}: {e}"))
}

/// Shorthand for `PatternSet::parse`, panicking on bad input.
pub fn patterns(s: &str) -> PatternSet {
    PatternSet::parse(s).unwrap_or_else(|e| panic!("bad pattern set {s:?}: {e}"))
}

/// All permutations of length `n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { values: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&[5, 9, 2]).unwrap(), perm("231"));
        assert_eq!(reduce(&[1, 2, 3]).unwrap(), perm("123"));
        assert_eq!(reduce(&[]).unwrap(), Permutation::empty());
        assert!(matches!(reduce(&[4, 4]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn delete_examples() {
        assert_eq!(perm("1").delete(1).unwrap(), Permutation::empty());
        assert_eq!(perm("312").delete(1).unwrap(), perm("21"));
        assert!(perm("312").delete(4).is_err());
        assert!(perm("312").delete(0).is_err());
    }

    #[test]
    fn delete_then_insert_worked_example() {
        let pi = perm("5 6 7 3 4 8 2 9 10 1 11");
        let sigma = pi.delete(5).unwrap().insert(11, 11).unwrap();
        assert_eq!(sigma, perm("5 6 3 4 7 2 8 9 1 10 11"));
    }

    #[test]
    fn insert_examples() {
        assert_eq!(perm("14532").insert(3, 6).unwrap(), perm("156423"));
        assert_eq!(Permutation::empty().insert(1, 1).unwrap(), perm("1"));
        assert_eq!(perm("21").insert(2, 2).unwrap(), perm("321"));
        assert!(perm("21").insert(4, 1).is_err());
        assert!(perm("21").insert(1, 4).is_err());
    }

    #[test]
    fn insert_end_examples() {
        assert_eq!(perm("14532").insert_end(3).unwrap(), perm("156423"));
        assert_eq!(Permutation::empty().insert_end(1).unwrap(), perm("1"));
        assert_eq!(perm("213").insert_end(4).unwrap(), perm("2134"));
    }

    #[test]
    fn sums() {
        assert_eq!(perm("123").direct_sum(&perm("21")), perm("12354"));
        assert_eq!(perm("123").skew_sum(&perm("21")), perm("34521"));
        assert_eq!(Permutation::empty().direct_sum(&perm("312")), perm("312"));
    }

    #[test]
    fn symmetries() {
        assert_eq!(perm("312").reverse(), perm("213"));
        assert_eq!(perm("312").complement(), perm("132"));
        assert_eq!(perm("312").inverse(), perm("231"));
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
    }

    #[test]
    fn containment() {
        assert!(!perm("259867431").contains(&perm("2413")).unwrap());
        assert!(perm("2413").contains(&perm("2413")).unwrap());
        assert!(!perm("123").contains(&perm("21")).unwrap());
        assert!(perm("251986743").contains(&perm("2413")).unwrap());
        assert!(perm("12").contains(&Permutation::empty()).is_err());
    }

    #[test]
    fn contains_through_agrees_with_full_search() {
        let pat = perm("2413");
        for pi in all_permutations(6) {
            let any = (1..=6).any(|pos| pi.contains_through(&pat, pos));
            assert_eq!(any, pi.contains(&pat).unwrap(), "{pi}");
        }
    }

    #[test]
    fn avoids_all_examples() {
        assert!(perm("123").avoids_all(&patterns("132,312")));
        assert!(!perm("2413").avoids_all(&patterns("2413,3142")));
        assert!(perm("312465").avoids_all(&patterns("321")));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            perm("312465").decompose(),
            vec![perm("312"), perm("1"), perm("21")]
        );
        assert_eq!(Permutation::identity(4).decompose(), vec![perm("1"); 4]);
        assert_eq!(perm("21").decompose(), vec![perm("21")]);
        assert!(Permutation::empty().decompose().is_empty());
    }

    #[test]
    fn blocks_of_worked_example() {
        let pi = perm("259867431");
        let blocks = pi.stankova_blocks().unwrap();
        let before: Vec<_> = blocks.before.iter().map(|b| b.values.clone()).collect();
        let after: Vec<_> = blocks.after.iter().map(|b| b.values.clone()).collect();
        assert_eq!(before, vec![vec![2], vec![5]]);
        assert_eq!(after, vec![vec![8, 6, 7], vec![4, 3], vec![1]]);
    }

    #[test]
    fn blocks_of_identity_and_singleton() {
        let blocks = Permutation::identity(5).stankova_blocks().unwrap();
        assert_eq!(blocks.before.len(), 1);
        assert_eq!(blocks.before[0].values, vec![1, 2, 3, 4]);
        assert!(blocks.after.is_empty());
        let blocks = perm("1").stankova_blocks().unwrap();
        assert!(blocks.before.is_empty() && blocks.after.is_empty());
    }

    #[test]
    fn blocks_without_separability() {
        let blocks = perm("251986743").blocks_around_max();
        let mut sets: Vec<Vec<usize>> = blocks
            .before
            .iter()
            .chain(&blocks.after)
            .map(|b| {
                let mut v = b.values.clone();
                v.sort_unstable();
                v
            })
            .collect();
        sets.sort();
        assert_eq!(sets, vec![vec![1, 2], vec![3, 4], vec![5], vec![6, 7, 8]]);
    }

    #[test]
    fn blocks_reject_non_separable() {
        assert!(matches!(
            perm("251986743").stankova_blocks(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn parsing() {
        assert_eq!("3 1 2".parse::<Permutation>().unwrap(), perm("312"));
        assert_eq!("".parse::<Permutation>().unwrap(), Permutation::empty());
        assert!("3 1 1".parse::<Permutation>().is_err());
        let set = PatternSet::parse("2413,3142").unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(set.to_string(), "2413,3142");
        assert!(PatternSet::parse("").is_err());
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(all_permutations(0).len(), 1);
        assert_eq!(all_permutations(5).len(), 120);
    }
}
