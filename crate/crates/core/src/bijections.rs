//! Bijections explaining the `(iar, comp)` symmetries on length-3 classes.
//!
//! Admissible words encode 321- and 312-avoiders through their
//! left-to-right maxima; `psi` trades one unit of `ics` for one unit of
//! `equ`, which is what makes the refined matrices Hankel.

use std::fmt;

use crate::error::{invalid, precondition, Error, Result};
use crate::perm::{reduce, Permutation};
use crate::stats::{comp, iar, lmax_set, lmaxp_set};

/// An admissible word `w_{S,c}`: letters `s_1 < ... < s_k`, with `c_i` empty
/// slots after `s_i`, subject to `c_1 + ... + c_i <= s_i - i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleWord {
    s: Vec<usize>,
    c: Vec<usize>,
}

impl AdmissibleWord {
    pub fn new(s: Vec<usize>, c: Vec<usize>) -> Result<Self> {
        if s.is_empty() {
            return Err(invalid("an admissible word needs a nonempty letter set"));
        }
        if s.len() != c.len() {
            return Err(invalid("letter set and composition differ in length"));
        }
        if s[0] == 0 || s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("letters must be positive and strictly increasing"));
        }
        let mut partial = 0;
        for (i, (&si, &ci)) in s.iter().zip(&c).enumerate() {
            partial += ci;
            if partial > si - (i + 1) {
                return Err(invalid(format!(
                    "condition fails at index {}: {partial} > {}",
                    i + 1,
                    si - (i + 1)
                )));
            }
        }
        let k = s.len();
        if partial != s[k - 1] - k {
            return Err(invalid("composition must sum to s_k - k"));
        }
        Ok(Self { s, c })
    }

    pub fn letters(&self) -> &[usize] {
        &self.s
    }

    pub fn composition(&self) -> &[usize] {
        &self.c
    }

    pub fn k(&self) -> usize {
        self.s.len()
    }

    /// Word length, which equals the largest letter.
    pub fn n(&self) -> usize {
        *self.s.last().expect("nonempty")
    }

    /// Number of initial consecutive letters from `S`.
    pub fn ics(&self) -> usize {
        let zeros = self.c.iter().take_while(|&&x| x == 0).count();
        (zeros + 1).min(self.k())
    }

    /// Number of indices where the defining condition holds with equality.
    pub fn equ(&self) -> usize {
        let mut partial = 0;
        let mut count = 0;
        for (i, (&si, &ci)) in self.s.iter().zip(&self.c).enumerate() {
            partial += ci;
            if partial == si - (i + 1) {
                count += 1;
            }
        }
        count
    }

    /// Positions of the letters from `S`.
    pub fn sp(&self) -> Vec<usize> {
        let mut pos = 1;
        let mut out = Vec::with_capacity(self.k());
        for &ci in &self.c {
            out.push(pos);
            pos += ci + 1;
        }
        out
    }

    fn prefix_sum(&self, i: usize) -> usize {
        self.c[..i].iter().sum()
    }

    /// 1-based indices `i < k` with `sum_{j<=i} c_j < s_i - i <= sum_{j<=i+1} c_j`.
    pub fn critical_indices(&self) -> Vec<usize> {
        (1..self.k())
            .filter(|&i| {
                let bound = self.s[i - 1] - i;
                self.prefix_sum(i) < bound && bound <= self.prefix_sum(i + 1)
            })
            .collect()
    }

    /// ASCII rendering with `.` for an empty slot: `"2 3 5 . 7 . . 10"`.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (&si, &ci) in self.s.iter().zip(&self.c) {
            parts.push(si.to_string());
            parts.extend(std::iter::repeat(".".to_string()).take(ci));
        }
        parts.join(" ")
    }

    /// Parses the ASCII rendering.
    pub fn parse(text: &str) -> Result<Self> {
        let mut s = Vec::new();
        let mut c: Vec<usize> = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "." || tok == "◊" {
                let last = c
                    .last_mut()
                    .ok_or_else(|| Error::Parse("a word cannot start with an empty slot".into()))?;
                *last += 1;
            } else {
                let v = tok
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad token {tok:?}")))?;
                s.push(v);
                c.push(0);
            }
        }
        Self::new(s, c).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for AdmissibleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Every admissible word of length `n`.
pub fn all_admissible_words(n: usize) -> Vec<AdmissibleWord> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    // S always contains n; choose the rest from [1, n-1]
    for mask in 0u64..(1 << (n - 1)) {
        let mut s: Vec<usize> = (1..n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        s.push(n);
        let mut c = vec![0; s.len()];
        fill_compositions(&s, &mut c, 0, 0, &mut out);
    }
    out
}

fn fill_compositions(s: &[usize], c: &mut Vec<usize>, i: usize, partial: usize, out: &mut Vec<AdmissibleWord>) {
    let k = s.len();
    let bound = s[i] - (i + 1);
    if i == k - 1 {
        c[i] = bound - partial;
        out.push(AdmissibleWord { s: s.to_vec(), c: c.clone() });
        return;
    }
    for ci in 0..=bound - partial {
        c[i] = ci;
        fill_compositions(s, c, i + 1, partial + ci, out);
    }
}

fn encode(pi: &Permutation) -> AdmissibleWord {
    let n = pi.len();
    let s = lmax_set(pi);
    let pos = lmaxp_set(pi);
    let c = pos
        .iter()
        .enumerate()
        .map(|(h, &ih)| pos.get(h + 1).copied().unwrap_or(n + 1) - ih - 1)
        .collect();
    AdmissibleWord { s, c }
}

/// Encodes a 321-avoider by its left-to-right maxima and the gaps between them.
pub fn alpha(pi: &Permutation) -> Result<AdmissibleWord> {
    if pi.is_empty() {
        return Err(precondition("admissible words need n >= 1"));
    }
    if !pi.avoids(&Permutation::decreasing(3)) {
        return Err(precondition(format!("{pi} contains 321")));
    }
    Ok(encode(pi))
}

/// The same encoding on 312-avoiders.
pub fn beta(pi: &Permutation) -> Result<AdmissibleWord> {
    if pi.is_empty() {
        return Err(precondition("admissible words need n >= 1"));
    }
    if !pi.avoids(&crate::perm::perm("312")) {
        return Err(precondition(format!("{pi} contains 312")));
    }
    Ok(encode(pi))
}

/// Fills the empty slots left to right with the smallest unused letter.
pub fn alpha_inv(w: &AdmissibleWord) -> Permutation {
    let n = w.n();
    let mut used = vec![false; n + 1];
    for &s in &w.s {
        used[s] = true;
    }
    let mut next = 1;
    let mut values = Vec::with_capacity(n);
    for (&si, &ci) in w.s.iter().zip(&w.c) {
        values.push(si);
        for _ in 0..ci {
            while used[next] {
                next += 1;
            }
            used[next] = true;
            values.push(next);
        }
    }
    Permutation::new(values).expect("fill produces a permutation")
}

/// Fills the empty slots left to right with the largest unused letter that
/// stays below the current maximum.
pub fn beta_inv(w: &AdmissibleWord) -> Permutation {
    let n = w.n();
    let mut used = vec![false; n + 1];
    for &s in &w.s {
        used[s] = true;
    }
    let mut values = Vec::with_capacity(n);
    for (&si, &ci) in w.s.iter().zip(&w.c) {
        values.push(si);
        for _ in 0..ci {
            let v = (1..si)
                .rev()
                .find(|&v| !used[v])
                .expect("admissibility leaves a free letter below the maximum");
            used[v] = true;
            values.push(v);
        }
    }
    Permutation::new(values).expect("fill produces a permutation")
}

/// Sends a 321-avoider to the 312-avoider with the same admissible word.
pub fn xi(pi: &Permutation) -> Result<Permutation> {
    Ok(beta_inv(&alpha(pi)?))
}

pub fn xi_inv(sigma: &Permutation) -> Result<Permutation> {
    Ok(alpha_inv(&beta(sigma)?))
}

/// Keeps `S`, lowers `ics` by one and raises `equ` by one.
/// Needs `s_1 > 1`, `ics >= 2` and `equ >= 1`.
pub fn psi(w: &AdmissibleWord) -> Result<AdmissibleWord> {
    let a = w.ics();
    if w.s[0] == 1 {
        return Err(precondition("psi needs s_1 > 1"));
    }
    if a < 2 {
        return Err(precondition("psi needs ics >= 2"));
    }
    if w.equ() < 1 {
        return Err(precondition("psi needs equ >= 1"));
    }
    let l = *w
        .critical_indices()
        .iter()
        .find(|&&i| i + 1 >= a)
        .ok_or_else(|| Error::Internal(format!("no critical index for {w}")))?;
    let k = w.k();
    // 1-based views
    let c = |i: usize| w.c[i - 1];
    let s = |i: usize| w.s[i - 1];
    let mut d = vec![0usize; k + 1];
    for i in 1..=k {
        d[i] = if a - 1 <= i && i < l {
            c(i + 1)
        } else if i == l {
            s(l) - l - w.prefix_sum(l)
        } else if i == l + 1 {
            w.prefix_sum(l + 1) - d[1..=l].iter().sum::<usize>()
        } else {
            c(i)
        };
    }
    AdmissibleWord::new(w.s.clone(), d[1..].to_vec())
        .map_err(|e| Error::Internal(format!("psi produced an invalid word: {e}")))
}

/// Inverse of [`psi`]. Needs `s_1 > 1` and `equ >= 2`.
pub fn psi_inv(v: &AdmissibleWord) -> Result<AdmissibleWord> {
    if v.s[0] == 1 {
        return Err(precondition("psi inverse needs s_1 > 1"));
    }
    if v.equ() < 2 {
        return Err(precondition("psi inverse needs equ >= 2"));
    }
    let k = v.k();
    let a = v.ics() + 1;
    let l = (1..=k)
        .find(|&l| v.prefix_sum(l) == v.s[l - 1] - l)
        .expect("equ >= 1 gives an equality index");
    if l >= k {
        return Err(Error::Internal(format!("first equality index is last for {v}")));
    }
    let d = |i: usize| v.c[i - 1];
    let c: Vec<usize> = (1..=k)
        .map(|i| {
            if a <= i && i <= l {
                d(i - 1)
            } else if i == a - 1 {
                0
            } else if i == l + 1 {
                d(l) + d(l + 1)
            } else {
                d(i)
            }
        })
        .collect();
    AdmissibleWord::new(v.s.clone(), c)
        .map_err(|e| Error::Internal(format!("psi inverse produced an invalid word: {e}")))
}

fn psi_power(mut w: AdmissibleWord, k: isize) -> Result<AdmissibleWord> {
    for _ in 0..k.unsigned_abs() {
        w = if k > 0 { psi(&w)? } else { psi_inv(&w)? };
    }
    Ok(w)
}

fn witness_via(
    pi: &Permutation,
    encode: fn(&Permutation) -> Result<AdmissibleWord>,
    decode: fn(&AdmissibleWord) -> Permutation,
) -> Result<Permutation> {
    if pi.is_empty() {
        return Ok(Permutation::empty());
    }
    if pi.at(1) == 1 {
        let rest = witness_via(&pi.delete(1)?, encode, decode)?;
        return Ok(Permutation::identity(1).direct_sum(&rest));
    }
    let k = iar(pi) as isize - comp(pi) as isize;
    if k == 0 {
        return Ok(pi.clone());
    }
    Ok(decode(&psi_power(encode(pi)?, k)?))
}

/// Involution on 321-avoiders exchanging `iar` and `comp` and keeping `LMAX`.
pub fn symmetry_witness_321(pi: &Permutation) -> Result<Permutation> {
    witness_via(pi, alpha, alpha_inv)
}

/// Involution on 312-avoiders exchanging `iar` and `comp` and keeping `LMAX` and `DESB`.
pub fn symmetry_witness_312(pi: &Permutation) -> Result<Permutation> {
    witness_via(pi, beta, beta_inv)
}

fn check_132(pi: &Permutation) -> Result<()> {
    if !pi.avoids(&crate::perm::perm("132")) {
        return Err(precondition(format!("{pi} contains 132")));
    }
    Ok(())
}

/// `ins_{n,n}(del_{pi(1)}(pi))` on 132-avoiders with `2 <= iar <= n-1` and `comp <= n-2`.
pub fn phi(pi: &Permutation) -> Result<Permutation> {
    check_132(pi)?;
    let n = pi.len();
    let (i, c) = (iar(pi), comp(pi));
    if n < 3 || i < 2 || i > n - 1 || c > n - 2 {
        return Err(precondition(format!(
            "phi needs 2 <= iar <= n-1 and comp <= n-2, got iar {i}, comp {c}"
        )));
    }
    pi.delete(pi.at(1))?.insert(n, n)
}

/// `ins_{sigma(1),1}(del_n(sigma))`, defined on the image of [`phi`].
pub fn phi_inv(sigma: &Permutation) -> Result<Permutation> {
    check_132(sigma)?;
    let n = sigma.len();
    if n < 3 {
        return Err(precondition("phi inverse needs n >= 3"));
    }
    let pi = sigma.delete(n)?.insert(sigma.at(1), 1)?;
    match phi(&pi) {
        Ok(back) if back == *sigma => Ok(pi),
        _ => Err(precondition(format!("{sigma} is not in the image of phi"))),
    }
}

/// Involution on 132-avoiders exchanging `iar` and `comp`, keeping `LMAX` and `LMIN`.
pub fn symmetry_witness_132(pi: &Permutation) -> Result<Permutation> {
    check_132(pi)?;
    let (i, c) = (iar(pi) as isize, comp(pi) as isize);
    let mut cur = pi.clone();
    for _ in 0..(i - c).unsigned_abs() {
        cur = if i > c { phi(&cur)? } else { phi_inv(&cur)? };
    }
    Ok(cur)
}

/// Recursive map from 213-avoiders to 231-avoiders exchanging `iar` and `comp`.
///
/// Writing `pi = pi(1) A B` with `A > pi(1) > B`, the image is
/// `ins_{pi(1),1}(theta(B) ⊕ theta(red A))`.
pub fn theta(pi: &Permutation) -> Result<Permutation> {
    if !pi.avoids(&crate::perm::perm("213")) {
        return Err(precondition(format!("{pi} contains 213")));
    }
    Ok(theta_rec(pi))
}

fn theta_rec(pi: &Permutation) -> Permutation {
    if pi.is_empty() {
        return Permutation::empty();
    }
    let f = pi.at(1);
    let rest = &pi.values()[1..];
    let split = rest.iter().position(|&v| v < f).unwrap_or(rest.len());
    let mu = reduce(&rest[..split]).expect("distinct letters");
    let nu = Permutation::new(rest[split..].to_vec()).expect("letters below the first form [f-1]");
    theta_rec(&nu)
        .direct_sum(&theta_rec(&mu))
        .insert(f, 1)
        .expect("valid insertion")
}

pub fn theta_inv(sigma: &Permutation) -> Result<Permutation> {
    if !sigma.avoids(&crate::perm::perm("231")) {
        return Err(precondition(format!("{sigma} contains 231")));
    }
    Ok(theta_inv_rec(sigma))
}

fn theta_inv_rec(sigma: &Permutation) -> Permutation {
    if sigma.is_empty() {
        return Permutation::empty();
    }
    let f = sigma.at(1);
    let tau = sigma.delete(f).expect("f is a letter");
    let (left, right) = tau.values().split_at(f - 1);
    let nu = theta_inv_rec(&Permutation::new(left.to_vec()).expect("prefix is [f-1]"));
    let mu = theta_inv_rec(&reduce(right).expect("distinct letters"));
    let mut values = vec![f];
    values.extend(mu.values().iter().map(|&v| v + f));
    values.extend_from_slice(nu.values());
    Permutation::new(values).expect("reassembly is a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::perm;
    use crate::stats::des;

    fn worked_word() -> AdmissibleWord {
        AdmissibleWord::new(vec![2, 3, 5, 7, 10, 12, 13], vec![0, 0, 1, 2, 0, 1, 2]).unwrap()
    }

    #[test]
    fn worked_word_statistics() {
        let w = worked_word();
        assert_eq!(w.ics(), 3);
        assert_eq!(w.equ(), 2);
        assert_eq!(w.sp(), vec![1, 2, 3, 5, 8, 9, 11]);
        assert_eq!(w.critical_indices(), vec![2, 3, 6]);
        assert_eq!(w.render(), "2 3 5 . 7 . . 10 12 . 13 . .");
        assert_eq!(AdmissibleWord::parse(&w.render()).unwrap(), w);
    }

    #[test]
    fn identity_word() {
        let w = alpha(&Permutation::identity(5)).unwrap();
        assert_eq!(w.letters(), &[1, 2, 3, 4, 5]);
        assert_eq!(w.composition(), &[0; 5]);
        assert_eq!((w.ics(), w.equ()), (5, 5));
        assert_eq!(beta(&Permutation::identity(5)).unwrap(), w);
    }

    #[test]
    fn worked_word_inverses() {
        let w = worked_word();
        let pi = alpha_inv(&w);
        assert_eq!(lmax_set(&pi), vec![2, 3, 5, 7, 10, 12, 13]);
        assert_eq!(lmaxp_set(&pi), vec![1, 2, 3, 5, 8, 9, 11]);
        assert_eq!(alpha(&pi).unwrap(), w);
        let sigma = beta_inv(&w);
        assert_eq!(beta(&sigma).unwrap(), w);
    }

    #[test]
    fn invalid_words() {
        assert!(AdmissibleWord::new(vec![1, 3], vec![1, 0]).is_err());
        assert!(AdmissibleWord::new(vec![2, 3], vec![0, 0]).is_err());
        assert!(AdmissibleWord::new(vec![], vec![]).is_err());
        assert!(AdmissibleWord::parse(". 1").is_err());
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi(&Permutation::identity(4)).unwrap(), Permutation::identity(4));
        assert_eq!(xi(&perm("213")).unwrap(), perm("213"));
        assert!(matches!(xi(&perm("321")), Err(Error::Precondition(_))));
    }

    #[test]
    fn psi_round_trip_on_worked_word() {
        let w = worked_word();
        let v = psi(&w).unwrap();
        assert_eq!(v.letters(), w.letters());
        assert_eq!((v.ics(), v.equ()), (2, 3));
        assert_eq!(psi_inv(&v).unwrap(), w);
    }

    #[test]
    fn psi_preconditions() {
        let w = AdmissibleWord::new(vec![1, 3], vec![0, 1]).unwrap();
        assert!(matches!(psi(&w), Err(Error::Precondition(_))));
        let w = AdmissibleWord::new(vec![2, 3], vec![1, 0]).unwrap();
        assert_eq!(w.ics(), 1);
        assert!(matches!(psi(&w), Err(Error::Precondition(_))));
    }

    #[test]
    fn phi_worked_example() {
        let pi = perm("5 6 7 3 4 8 2 9 10 1 11");
        let sigma = phi(&pi).unwrap();
        assert_eq!(sigma, perm("5 6 3 4 7 2 8 9 1 10 11"));
        assert_eq!(phi_inv(&sigma).unwrap(), pi);
    }

    #[test]
    fn phi_rejects_ineligible_input() {
        assert!(phi(&Permutation::identity(4)).is_err());
        assert!(phi(&perm("132")).is_err());
    }

    #[test]
    fn theta_examples() {
        for pi in [perm("1"), perm("12"), perm("21")] {
            assert_eq!(theta(&pi).unwrap(), pi);
        }
        let pi = perm("231");
        let sigma = theta(&pi).unwrap();
        assert_eq!(sigma.at(1), 2);
        assert_eq!(des(&sigma), 1);
        assert_eq!((iar(&sigma), comp(&sigma)), (comp(&pi), iar(&pi)));
        assert_eq!(theta_inv(&sigma).unwrap(), pi);
    }

    #[test]
    fn admissible_words_count_catalan() {
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429];
        for n in 1..=7 {
            assert_eq!(all_admissible_words(n).len(), catalan[n]);
        }
    }

    fn class(n: usize, p: &str) -> Vec<Permutation> {
        crate::engine::enumerate(n, &crate::perm::patterns(p))
    }

    #[test]
    fn alpha_and_beta_are_bijections() {
        for n in 1..=8 {
            let words: std::collections::BTreeSet<_> = all_admissible_words(n).into_iter().collect();
            for (p, enc, dec) in [
                ("321", alpha as fn(&Permutation) -> Result<AdmissibleWord>, alpha_inv as fn(&AdmissibleWord) -> Permutation),
                ("312", beta, beta_inv),
            ] {
                let perms = class(n, p);
                let mut image = std::collections::BTreeSet::new();
                for pi in &perms {
                    let w = enc(pi).unwrap();
                    assert_eq!(dec(&w), *pi);
                    image.insert(w);
                }
                assert_eq!(image, words, "n={n} pattern {p}");
            }
        }
    }

    #[test]
    fn xi_preserves_lmax_and_positions() {
        for n in 1..=8 {
            for pi in class(n, "321") {
                let sigma = xi(&pi).unwrap();
                assert!(sigma.avoids(&perm("312")));
                assert_eq!(lmax_set(&sigma), lmax_set(&pi));
                assert_eq!(lmaxp_set(&sigma), lmaxp_set(&pi));
                assert_eq!((iar(&sigma), comp(&sigma)), (iar(&pi), comp(&pi)));
                assert_eq!(xi_inv(&sigma).unwrap(), pi);
            }
        }
    }

    #[test]
    fn psi_is_a_bijection_on_its_domain() {
        for n in 2..=9 {
            for w in all_admissible_words(n) {
                if w.letters()[0] > 1 && w.ics() >= 2 && w.equ() >= 1 {
                    let v = psi(&w).unwrap();
                    assert_eq!(v.ics() + 1, w.ics(), "{w}");
                    assert_eq!(v.equ(), w.equ() + 1, "{w}");
                    assert_eq!(psi_inv(&v).unwrap(), w);
                }
                if w.letters()[0] > 1 && w.equ() >= 2 {
                    let u = psi_inv(&w).unwrap();
                    assert_eq!(psi(&u).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn witnesses_are_involutions_swapping_iar_and_comp() {
        for n in 0..=8 {
            for pi in class(n, "321") {
                let sigma = symmetry_witness_321(&pi).unwrap();
                assert!(sigma.avoids(&perm("321")));
                assert_eq!((iar(&sigma), comp(&sigma)), (comp(&pi), iar(&pi)), "{pi}");
                assert_eq!(lmax_set(&sigma), lmax_set(&pi));
                assert_eq!(symmetry_witness_321(&sigma).unwrap(), pi);
            }
            for pi in class(n, "312") {
                let sigma = symmetry_witness_312(&pi).unwrap();
                assert!(sigma.avoids(&perm("312")));
                assert_eq!((iar(&sigma), comp(&sigma)), (comp(&pi), iar(&pi)), "{pi}");
                assert_eq!(lmax_set(&sigma), lmax_set(&pi));
                assert_eq!(crate::stats::desb_set(&sigma), crate::stats::desb_set(&pi));
                assert_eq!(symmetry_witness_312(&sigma).unwrap(), pi);
            }
            for pi in class(n, "132") {
                let sigma = symmetry_witness_132(&pi).unwrap();
                assert!(sigma.avoids(&perm("132")));
                assert_eq!((iar(&sigma), comp(&sigma)), (comp(&pi), iar(&pi)), "{pi}");
                assert_eq!(lmax_set(&sigma), lmax_set(&pi));
                assert_eq!(crate::stats::lmin_set(&sigma), crate::stats::lmin_set(&pi));
                assert_eq!(symmetry_witness_132(&sigma).unwrap(), pi);
            }
        }
    }

    #[test]
    fn phi_properties() {
        for n in 3..=8 {
            for pi in class(n, "132") {
                let (i, c) = (iar(&pi), comp(&pi));
                if !(2..n).contains(&i) || c > n - 2 {
                    continue;
                }
                let sigma = phi(&pi).unwrap();
                assert_eq!(&sigma.values()[..i - 1], &pi.values()[..i - 1]);
                assert_eq!((iar(&sigma), comp(&sigma)), (i - 1, c + 1));
                assert_eq!(lmax_set(&sigma), lmax_set(&pi));
                assert_eq!(crate::stats::lmin_set(&sigma), crate::stats::lmin_set(&pi));
                for extra in ["312", "321"] {
                    assert_eq!(sigma.avoids(&perm(extra)), pi.avoids(&perm(extra)));
                }
                assert_eq!(phi_inv(&sigma).unwrap(), pi);
            }
        }
    }

    #[test]
    fn theta_is_a_bijection_swapping_iar_and_comp() {
        for n in 0..=8 {
            let mut image = std::collections::BTreeSet::new();
            for pi in class(n, "213") {
                let sigma = theta(&pi).unwrap();
                assert!(sigma.avoids(&perm("231")));
                assert_eq!(des(&sigma), des(&pi));
                if n > 0 {
                    assert_eq!(sigma.at(1), pi.at(1));
                }
                assert_eq!((iar(&sigma), comp(&sigma)), (comp(&pi), iar(&pi)));
                assert_eq!(theta_inv(&sigma).unwrap(), pi);
                image.insert(sigma);
            }
            assert_eq!(image.len(), class(n, "231").len());
        }
    }
}
