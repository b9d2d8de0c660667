use proptest::prelude::*;

use comtet::bijections::{self, AdmissibleWord};
use comtet::engine::{enumerate, enumerate_by_filter, gamma_vector};
use comtet::invseq::{self, InversionSequence};
use comtet::perm::{perm, reduce};
use comtet::poly::{rat, vars, Var};
use comtet::stats::{self, Stat};
use comtet::{json, MultiPoly, PatternSet, Permutation, Series};

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap()))
}

/// Admissible word of length `n` from a letter mask and raw slot choices.
fn arb_word(max: usize) -> impl Strategy<Value = AdmissibleWord> {
    (1..=max).prop_flat_map(|n| (Just(n), prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<u16>(), n))).prop_map(
        |(n, mask, raw)| {
            let mut s: Vec<usize> = (1..n).filter(|&v| mask[v - 1]).collect();
            s.push(n);
            let k = s.len();
            let mut c = vec![0; k];
            let mut partial = 0;
            for i in 0..k {
                let room = s[i] - (i + 1) - partial;
                c[i] = if i + 1 == k { room } else { raw[i] as usize % (room + 1) };
                partial += c[i];
            }
            AdmissibleWord::new(s, c).unwrap()
        },
    )
}

/// A 213-avoider: `m A B` with `A` above `m` above `B`, built from a recipe of split points.
fn avoider_213(splits: &[u16], n: usize) -> Permutation {
    fn build(splits: &[u16], idx: &mut usize, n: usize) -> Vec<usize> {
        if n == 0 {
            return Vec::new();
        }
        let m = 1 + splits[*idx % splits.len()] as usize % n;
        *idx += 1;
        let above = build(splits, idx, n - m);
        let below = build(splits, idx, m - 1);
        let mut v = vec![m];
        v.extend(above.iter().map(|x| x + m));
        v.extend(below);
        v
    }
    let mut idx = 0;
    Permutation::new(build(splits, &mut idx, n)).unwrap()
}

fn arb_213(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max, prop::collection::vec(any::<u16>(), 1..32)).prop_map(|(n, s)| avoider_213(&s, n))
}

fn arb_series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(prop::collection::vec(-3i64..4, 3), order + 1).prop_map(move |cs| {
        let coeffs = cs
            .iter()
            .map(|c| {
                let mut p = MultiPoly::zero();
                for (k, &a) in c.iter().enumerate() {
                    p += &vars::t().pow(k as u32).scale(&rat(a));
                }
                p
            })
            .collect();
        Series::from_coeffs(coeffs, order)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetries_are_involutions(pi in arb_perm(10)) {
        prop_assert_eq!(pi.reverse().reverse(), pi.clone());
        prop_assert_eq!(pi.complement().complement(), pi.clone());
        prop_assert_eq!(pi.inverse().inverse(), pi);
    }

    #[test]
    fn insert_then_delete(pi in arb_perm(9), a in 0usize..100, b in 0usize..100) {
        let n = pi.len();
        let (v, pos) = (1 + a % (n + 1), 1 + b % (n + 1));
        let grown = pi.insert(v, pos).unwrap();
        prop_assert_eq!(grown.at(pos), v);
        prop_assert_eq!(grown.delete(v).unwrap(), pi);
    }

    #[test]
    fn containment_matches_subsequences(pi in arb_perm(7), q in arb_perm(4)) {
        prop_assume!(!q.is_empty());
        let n = pi.len();
        let k = q.len();
        let mut found = false;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k {
                let sub: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| pi.values()[i]).collect();
                if reduce(&sub).unwrap() == q {
                    found = true;
                    break;
                }
            }
        }
        prop_assert_eq!(pi.contains(&q).unwrap(), found);
    }

    #[test]
    fn enumeration_agrees_with_filter(q in arb_perm(4), r in arb_perm(4), n in 0usize..7) {
        prop_assume!(!q.is_empty() && !r.is_empty());
        let p = PatternSet::new(vec![q, r]).unwrap();
        let mut fast = enumerate(n, &p);
        fast.sort();
        prop_assert_eq!(fast, enumerate_by_filter(n, &p));
    }

    #[test]
    fn statistics_are_consistent(pi in arb_perm(12)) {
        prop_assume!(!pi.is_empty());
        let n = pi.len();
        prop_assert!(stats::iar(&pi) >= 1 && stats::iar(&pi) <= n);
        prop_assert_eq!(stats::des(&pi), stats::des_set(&pi).len());
        prop_assert_eq!(stats::iar(&pi), stats::des_set(&pi).first().copied().unwrap_or(n));
        prop_assert_eq!(stats::comp(&pi), pi.decompose().len());
        prop_assert_eq!(stats::comp(&pi.direct_sum(&perm("21"))), stats::comp(&pi) + 1);
        prop_assert!(Stat::Dd.eval(&pi) <= stats::des(&pi));
    }

    #[test]
    fn admissible_encodings_round_trip(w in arb_word(20)) {
        let pi = bijections::alpha_inv(&w);
        prop_assert!(pi.avoids(&perm("321")));
        prop_assert_eq!(&bijections::alpha(&pi).unwrap(), &w);
        let sigma = bijections::beta_inv(&w);
        prop_assert!(sigma.avoids(&perm("312")));
        prop_assert_eq!(&bijections::beta(&sigma).unwrap(), &w);
        prop_assert_eq!(bijections::xi(&pi).unwrap(), sigma);
        prop_assert_eq!(AdmissibleWord::parse(&w.render()).unwrap(), w);
    }

    #[test]
    fn psi_round_trips(w in arb_word(20)) {
        if w.letters()[0] > 1 && w.ics() >= 2 && w.equ() >= 1 {
            let v = bijections::psi(&w).unwrap();
            prop_assert_eq!(v.ics() + 1, w.ics());
            prop_assert_eq!(v.equ(), w.equ() + 1);
            prop_assert_eq!(bijections::psi_inv(&v).unwrap(), w);
        }
    }

    #[test]
    fn witnesses_are_involutions(w in arb_word(20)) {
        for (pi, f) in [
            (bijections::alpha_inv(&w), bijections::symmetry_witness_321 as fn(&Permutation) -> comtet::Result<Permutation>),
            (bijections::beta_inv(&w), bijections::symmetry_witness_312),
        ] {
            let s = f(&pi).unwrap();
            prop_assert_eq!((stats::iar(&s), stats::comp(&s)), (stats::comp(&pi), stats::iar(&pi)));
            prop_assert_eq!(stats::lmax_set(&s), stats::lmax_set(&pi));
            prop_assert_eq!(f(&s).unwrap(), pi);
        }
    }

    #[test]
    fn theta_round_trips(pi in arb_213(12)) {
        prop_assert!(pi.avoids(&perm("213")));
        let s = bijections::theta(&pi).unwrap();
        prop_assert!(s.avoids(&perm("231")));
        prop_assert_eq!(stats::des(&s), stats::des(&pi));
        prop_assert_eq!((stats::iar(&s), stats::comp(&s)), (stats::comp(&pi), stats::iar(&pi)));
        prop_assert_eq!(bijections::theta_inv(&s).unwrap(), pi);
    }

    #[test]
    fn phi_witness_on_132(pi in arb_213(12)) {
        // reverse of the complement of a 213-avoider avoids 132
        let pi = pi.complement().reverse();
        prop_assert!(pi.avoids(&perm("132")));
        let s = bijections::symmetry_witness_132(&pi).unwrap();
        prop_assert_eq!((stats::iar(&s), stats::comp(&s)), (stats::comp(&pi), stats::iar(&pi)));
        prop_assert_eq!(stats::lmin_set(&s), stats::lmin_set(&pi));
        prop_assert_eq!(bijections::symmetry_witness_132(&s).unwrap(), pi);
    }

    #[test]
    fn series_algebra(a in arb_series(5), b in arb_series(5), c in arb_series(5)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let one = Series::one(5);
        let u = &one + &(&Series::z(5) * &a);
        prop_assert_eq!(&u * &u.inv().unwrap(), one);
    }

    #[test]
    fn gamma_expansion_recovers_coefficients(g in prop::collection::vec(0i64..20, 1..5), extra in 0usize..2) {
        let n = 2 * (g.len() - 1) + 1 + extra;
        let mut poly = MultiPoly::zero();
        for (k, &gk) in g.iter().enumerate() {
            let basis = &vars::t().pow(k as u32) * &(&MultiPoly::one() + &vars::t()).pow((n - 1 - 2 * k) as u32);
            poly += &basis.scale(&rat(gk));
        }
        let got = gamma_vector(&poly, n).unwrap();
        let want: Vec<_> = (0..=(n - 1) / 2).map(|k| rat(g.get(k).copied().unwrap_or(0))).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn inversion_sequence_statistics(raw in prop::collection::vec(any::<u16>(), 1..12)) {
        let e: Vec<usize> = raw.iter().enumerate().map(|(i, &r)| r as usize % (i + 1)).collect();
        let seq = InversionSequence::new(e.clone()).unwrap();
        let n = e.len();
        prop_assert!(invseq::izero(&e) >= 1 && invseq::izero(&e) <= n);
        prop_assert_eq!(invseq::asc(&e), invseq::asc_set(&e).len());
        prop_assert!(invseq::da(&e) <= invseq::asc(&e) + 1);
        let pos: Vec<usize> = e.iter().copied().filter(|&v| v > 0).collect();
        prop_assert_eq!(seq.avoids_021(), pos.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(seq.to_string().parse::<InversionSequence>().unwrap(), seq);
    }

    #[test]
    fn json_series_round_trip(a in arb_series(4)) {
        let s = a.scale(&vars::r());
        let back: Vec<json::CoeffJson> = serde_json::from_str(&json::series_string(&s)).unwrap();
        prop_assert_eq!(json::series_from_json(&back).unwrap(), s.clone());
        prop_assert_eq!(s.specialize(Var::R, &rat(1)), a);
    }
}
