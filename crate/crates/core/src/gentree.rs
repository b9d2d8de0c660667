//! Generating trees for classes grown by appending a last letter.
//!
//! A node is labelled by the number of values that can be appended to its
//! permutation while staying in the class, and starred when the permutation
//! ends with its largest letter. The abstract tree comes from the rule
//! `(k) -> (k+1)*, (k+1), (k), ..., (3)` with root `(2)*`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{precondition, Result};
use crate::perm::{PatternSet, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeLabel {
    pub k: usize,
    pub star: bool,
}

impl fmt::Display for TreeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.k)?;
        if self.star {
            f.write_str("*")?;
        }
        Ok(())
    }
}

/// Values `k` such that appending `k` (and shifting larger letters up) keeps `pi` in the class.
pub fn ava(pi: &Permutation, patterns: &PatternSet) -> Result<Vec<usize>> {
    if !pi.avoids_all(patterns) {
        return Err(precondition(format!("{pi} does not avoid {patterns}")));
    }
    Ok(ava_unchecked(pi, patterns))
}

fn ava_unchecked(pi: &Permutation, patterns: &PatternSet) -> Vec<usize> {
    let n = pi.len() + 1;
    (1..=n)
        .filter(|&k| {
            let child = pi.insert_end(k).expect("k in range");
            patterns.iter().all(|p| !child.contains_through(p, n))
        })
        .collect()
}

/// Growth rule for `(2431, 4231)`: a permutation of length `n-1` with
/// `AVA = [m, n]` has, for each appended value `j`, the child interval listed.
pub fn grow_2431(m: usize, n: usize) -> Vec<(usize, (usize, usize))> {
    (m..=n)
        .map(|j| if j == n { (j, (m, n + 1)) } else { (j, (j, n + 1)) })
        .collect()
}

/// Growth rule for `(2413, 4213)`: `ava` is `{n = k_1 > ... > k_m = 1}`, given in any order.
pub fn grow_2413(ava: &[usize], n: usize) -> Vec<(usize, Vec<usize>)> {
    let mut ks: Vec<usize> = ava.to_vec();
    ks.sort_unstable_by(|a, b| b.cmp(a));
    (0..ks.len())
        .map(|j| {
            let kj = ks[j];
            let mut set: BTreeSet<usize> = ks[j..].iter().copied().collect();
            set.insert(kj + 1);
            set.insert(n + 1);
            (kj, set.into_iter().collect())
        })
        .collect()
}

/// The rewriting rule: children of `(k)`, star child first.
pub fn omega_sch(k: usize) -> Vec<TreeLabel> {
    let mut out = vec![TreeLabel { k: k + 1, star: true }, TreeLabel { k: k + 1, star: false }];
    out.extend((3..=k).rev().map(|k| TreeLabel { k, star: false }));
    out
}

#[derive(Clone, Debug)]
struct Node {
    label: TreeLabel,
    children: Vec<usize>,
}

/// A generating tree truncated at a fixed depth; level 1 holds the root.
#[derive(Clone, Debug)]
pub struct GenTree {
    nodes: Vec<Node>,
    levels: Vec<Vec<usize>>,
}

impl GenTree {
    fn build<S>(root: (S, TreeLabel), depth: usize, expand: impl Fn(&S, usize) -> Vec<(S, TreeLabel)>) -> Self {
        let mut nodes = vec![Node { label: root.1, children: Vec::new() }];
        let mut levels = vec![vec![0]];
        let mut frontier = vec![(0usize, root.0)];
        for level in 1..depth {
            let mut next = Vec::new();
            let mut ids = Vec::new();
            for (id, state) in &frontier {
                for (child, label) in expand(state, level) {
                    let cid = nodes.len();
                    nodes.push(Node { label, children: Vec::new() });
                    nodes[*id].children.push(cid);
                    ids.push(cid);
                    next.push((cid, child));
                }
            }
            levels.push(ids);
            frontier = next;
        }
        if depth == 0 {
            levels.clear();
            nodes.clear();
        }
        Self { nodes, levels }
    }

    /// Tree generated by the rewriting rule alone.
    pub fn abstract_schroder(depth: usize) -> Self {
        let root = TreeLabel { k: 2, star: true };
        Self::build((root, root), depth, |label, _| {
            omega_sch(label.k).into_iter().map(|l| (l, l)).collect()
        })
    }

    /// Tree whose nodes are the permutations of the class, children obtained by
    /// appending every available value.
    pub fn concrete(patterns: &PatternSet, depth: usize) -> Self {
        let root = Permutation::identity(1);
        let label_of = |pi: &Permutation| TreeLabel {
            k: ava_unchecked(pi, patterns).len(),
            star: pi.at(pi.len()) == pi.len(),
        };
        let root_label = label_of(&root);
        Self::build((root, root_label), depth, |pi, _| {
            ava_unchecked(pi, patterns)
                .into_iter()
                .map(|k| {
                    let child = pi.insert_end(k).expect("k in range");
                    let label = label_of(&child);
                    (child, label)
                })
                .collect()
        })
    }

    /// Tree driven by the `(2431, 4231)` growth rule on intervals.
    pub fn from_rule_2431(depth: usize) -> Self {
        // state: (m, n) with AVA = [m, n] for a permutation of length n - 1
        let root = TreeLabel { k: 2, star: true };
        Self::build(((1usize, 2usize), root), depth, |&(m, n), _| {
            grow_2431(m, n)
                .into_iter()
                .map(|(j, (lo, hi))| ((lo, hi), TreeLabel { k: hi - lo + 1, star: j == n }))
                .collect()
        })
    }

    /// Tree driven by the `(2413, 4213)` growth rule on AVA sets.
    pub fn from_rule_2413(depth: usize) -> Self {
        let root = TreeLabel { k: 2, star: true };
        Self::build((vec![1usize, 2], root), depth, |set, _| {
            let n = *set.iter().max().expect("nonempty");
            grow_2413(set, n)
                .into_iter()
                .map(|(kj, child)| {
                    let label = TreeLabel { k: child.len(), star: kj == n };
                    (child, label)
                })
                .collect()
        })
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Every node has exactly one starred child (checked above the last level).
    pub fn one_star_child_each(&self) -> bool {
        let inner = self.levels.len().saturating_sub(1);
        self.levels[..inner].iter().flatten().all(|&id| {
            self.nodes[id].children.iter().filter(|&&c| self.nodes[c].label.star).count() == 1
        })
    }

    fn canonical_ids(&self, interner: &mut HashMap<(TreeLabel, Vec<usize>), usize>) -> Vec<usize> {
        let mut ids = vec![0; self.nodes.len()];
        for level in self.levels.iter().rev() {
            for &id in level {
                let mut kids: Vec<usize> = self.nodes[id].children.iter().map(|&c| ids[c]).collect();
                kids.sort_unstable();
                let next = interner.len();
                ids[id] = *interner.entry((self.nodes[id].label, kids)).or_insert(next);
            }
        }
        ids
    }

    // nested-bracket form of each distinct subtree, independent of node order
    fn shape_strings(&self, ids: &[usize]) -> HashMap<usize, String> {
        let mut shapes: HashMap<usize, String> = HashMap::new();
        for level in self.levels.iter().rev() {
            for &id in level {
                if shapes.contains_key(&ids[id]) {
                    continue;
                }
                let mut kids: Vec<&str> = self.nodes[id].children.iter().map(|c| shapes[&ids[*c]].as_str()).collect();
                kids.sort_unstable();
                let s = format!("{}[{}]", self.nodes[id].label, kids.join(","));
                shapes.insert(ids[id], s);
            }
        }
        shapes
    }

    /// Dump lines `"L3: (3) (4) (4)* | (3) (4) (4)*"`; groups are siblings, in
    /// a canonical order so that isomorphic trees give identical dumps.
    pub fn dump(&self) -> Vec<String> {
        let mut interner = HashMap::new();
        let ids = self.canonical_ids(&mut interner);
        // order children by subtree shape so the dump is independent of insertion order
        let shapes = self.shape_strings(&ids);
        let key = |id: usize| (std::cmp::Reverse(self.nodes[id].label.k), !self.nodes[id].label.star, &shapes[&ids[id]]);
        let mut lines = Vec::new();
        let mut parents: Vec<usize> = if self.nodes.is_empty() { Vec::new() } else { vec![0] };
        if !parents.is_empty() {
            lines.push(format!("L1: {}", self.nodes[0].label));
        }
        for level in 2..=self.depth() {
            let mut groups = Vec::new();
            let mut next = Vec::new();
            for &p in &parents {
                let mut kids = self.nodes[p].children.clone();
                kids.sort_by_key(|&c| key(c));
                let mut labels: Vec<TreeLabel> = kids.iter().map(|&c| self.nodes[c].label).collect();
                labels.sort();
                groups.push(labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "));
                next.extend(kids);
            }
            lines.push(format!("L{level}: {}", groups.join(" | ")));
            parents = next;
        }
        lines
    }

    /// Star-position sets over all root-to-leaf paths of full depth.
    pub fn lmaxp_distribution(&self) -> BTreeMap<Vec<usize>, u64> {
        let mut out = BTreeMap::new();
        if self.nodes.is_empty() {
            return out;
        }
        let depth = self.depth();
        let mut stack = vec![(0usize, vec![self.nodes[0].label])];
        while let Some((id, path)) = stack.pop() {
            if path.len() == depth {
                *out.entry(lmaxp_from_path(&path)).or_insert(0) += 1;
                continue;
            }
            for &c in &self.nodes[id].children {
                let mut p = path.clone();
                p.push(self.nodes[c].label);
                stack.push((c, p));
            }
        }
        out
    }
}

/// Recursive comparison: equal labels and, as multisets, isomorphic child subtrees.
pub fn compare_trees(a: &GenTree, b: &GenTree) -> bool {
    if a.depth() != b.depth() {
        return false;
    }
    if a.nodes.is_empty() || b.nodes.is_empty() {
        return a.nodes.is_empty() && b.nodes.is_empty();
    }
    let mut interner = HashMap::new();
    let ia = a.canonical_ids(&mut interner);
    let ib = b.canonical_ids(&mut interner);
    ia[0] == ib[0]
}

/// Positions of starred nodes along a root-to-node path.
pub fn lmaxp_from_path(path: &[TreeLabel]) -> Vec<usize> {
    path.iter().enumerate().filter(|(_, l)| l.star).map(|(i, _)| i + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::enumerate;
    use crate::perm::{patterns, perm};
    use crate::stats::lmaxp_set;

    #[test]
    fn ava_examples() {
        let p = patterns("2431,4231");
        assert_eq!(ava(&perm("14523"), &p).unwrap(), vec![3, 4, 5, 6]);
        assert!(ava(&perm("2431"), &p).is_err());
        let q = patterns("2413,4213");
        for pi in enumerate(6, &q) {
            let a = ava(&pi, &q).unwrap();
            assert_eq!(a.first(), Some(&1));
            assert_eq!(a.last(), Some(&7));
        }
    }

    #[test]
    fn rule_labels() {
        assert_eq!(omega_sch(2).iter().map(|l| l.to_string()).collect::<Vec<_>>(), vec!["(3)*", "(3)"]);
        let sizes: Vec<usize> = grow_2431(3, 6).iter().map(|(_, (lo, hi))| hi - lo + 1).collect();
        assert_eq!(sizes, vec![5, 4, 3, 5]);
        let kids = grow_2413(&[1, 3, 5], 5);
        assert_eq!(kids[0], (5, vec![1, 3, 5, 6]));
        assert_eq!(kids[2], (1, vec![1, 2, 6]));
    }

    #[test]
    fn growth_rules_match_brute_force() {
        let p = patterns("2431,4231");
        let q = patterns("2413,4213");
        for n in 2..=7 {
            for pi in enumerate(n - 1, &p) {
                let a = ava(&pi, &p).unwrap();
                let (m, top) = (a[0], *a.last().unwrap());
                assert_eq!(top, n);
                assert_eq!(a, (m..=n).collect::<Vec<_>>());
                for (j, (lo, hi)) in grow_2431(m, n) {
                    let child = pi.insert_end(j).unwrap();
                    assert_eq!(ava(&child, &p).unwrap(), (lo..=hi).collect::<Vec<_>>());
                }
            }
            for pi in enumerate(n - 1, &q) {
                let a = ava(&pi, &q).unwrap();
                for (kj, set) in grow_2413(&a, n) {
                    assert_eq!(ava(&pi.insert_end(kj).unwrap(), &q).unwrap(), set);
                }
            }
        }
    }

    #[test]
    fn first_levels_dump() {
        let t = GenTree::abstract_schroder(3);
        assert_eq!(t.dump(), vec!["L1: (2)*", "L2: (3) (3)*", "L3: (3) (4) (4)* | (3) (4) (4)*"]);
        let c = GenTree::concrete(&patterns("2431,4231"), 3);
        assert_eq!(c.dump(), t.dump());
    }

    #[test]
    fn star_path_for_213() {
        let path = [
            TreeLabel { k: 2, star: true },
            TreeLabel { k: 3, star: false },
            TreeLabel { k: 4, star: true },
        ];
        assert_eq!(lmaxp_from_path(&path), vec![1, 3]);
        assert_eq!(lmaxp_set(&perm("213")), vec![1, 3]);
    }

    #[test]
    fn trees_agree_to_depth_six() {
        let t = GenTree::abstract_schroder(6);
        assert_eq!(t.level_sizes(), vec![1, 2, 6, 22, 90, 394]);
        assert!(t.one_star_child_each());
        for other in [
            GenTree::concrete(&patterns("2431,4231"), 6),
            GenTree::concrete(&patterns("2413,4213"), 6),
            GenTree::from_rule_2431(6),
            GenTree::from_rule_2413(6),
        ] {
            assert!(compare_trees(&t, &other));
            assert_eq!(other.dump(), t.dump());
        }
        assert!(!compare_trees(&t, &GenTree::concrete(&patterns("2413,3142"), 6)));
        assert!(!compare_trees(&t, &GenTree::abstract_schroder(5)));
    }

    #[test]
    fn lmaxp_distribution_matches_classes() {
        let t = GenTree::abstract_schroder(6);
        let dist = t.lmaxp_distribution();
        for p in ["2431,4231", "2413,4213"] {
            let mut brute = BTreeMap::new();
            for pi in enumerate(6, &patterns(p)) {
                *brute.entry(lmaxp_set(&pi)).or_insert(0u64) += 1;
            }
            assert_eq!(dist, brute, "{p}");
        }
    }
}
