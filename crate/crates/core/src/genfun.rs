//! Closed-form generating functions and functional-equation residuals.
//!
//! Every closed form here is a series in `z` whose `z^n` coefficient is the
//! `(des, iar, comp)` distribution over a class, marked by `(t, r, p)`.
//! Closed forms are usually stated through `~S = (S - 1) / (r p z)`; the
//! functions below return the full series `S = 1 + r p z ~S`.

use num_rational::BigRational;
use num_traits::One;

use crate::engine::{enumerate, joint_polynomial};
use crate::error::{Error, Result};
use crate::perm::{PatternSet, Permutation};
use crate::poly::{vars::*, MultiPoly, Var};
use crate::series::{geometric, one_minus, zpoly, Series};
use crate::stats::Stat;

fn internal(e: Error) -> Error {
    match e {
        Error::Division(msg) => Error::Internal(format!("inexact division: {msg}")),
        other => other,
    }
}

fn cst(p: MultiPoly, order: usize) -> Series {
    Series::constant(p, order)
}

/// `a / (b_1 b_2 ...)`.
fn frac(num: Series, dens: &[Series]) -> Result<Series> {
    dens.iter().try_fold(num, |acc, d| acc.div(d))
}

/// Narayana series `sum_n N_n(t) z^n`, from its radical expression.
pub fn narayana_series(order: usize) -> Result<Series> {
    let o = order + 1;
    let disc = zpoly(&[c(1), &c(-2) * &(&t() + &c(1)), (&t() - &c(1)).pow(2)], o);
    let num = &zpoly(&[c(1), &t() - &c(1)], o) - &disc.sqrt()?;
    num.div_by_z_power(1)
        .and_then(|s| s.div_by_monomial(&(&c(2) * &t())))
        .map_err(internal)
}

/// Descent-polynomial series over 321-avoiders, constant term included.
pub fn c_series(order: usize) -> Result<Series> {
    let o = order + 1;
    let disc = zpoly(&[c(1), c(-4), &c(4) - &(&c(4) * &t())], o);
    let num = &Series::one(o) - &disc.sqrt()?;
    num.div_by_z_power(1)
        .and_then(|s| s.div_by_monomial(&c(2)))
        .and_then(|s| s.div(&zpoly(&[c(1), &t() - &c(1)], order)))
        .map_err(internal)
}

/// Descent-polynomial series over 123-avoiders, without the constant term.
pub fn cstar_series(order: usize) -> Result<Series> {
    let o = order + 1;
    let tt = t().pow(2);
    let disc = zpoly(&[c(1), &c(-4) * &t(), &(&c(4) * &tt) - &(&c(4) * &t())], o);
    let head = zpoly(&[c(-1), &c(2) * &t(), &(&c(2) * &t()) - &(&c(2) * &tt)], o);
    let num = &head + &disc.sqrt()?;
    num.div_by_z_power(1)
        .and_then(|s| s.div_by_monomial(&(&c(2) * &tt)))
        .and_then(|s| s.div(&zpoly(&[c(-1), &t() - &c(1)], order)))
        .map_err(internal)
}

/// Descent series of separable permutations without constant term: the
/// solution of `S = z + (1+t) z S + t z S^2 + t S^3`, by fixed-point iteration.
pub fn schroder_s_series(order: usize) -> Series {
    let zs = Series::z(order);
    let mut s = Series::zero(order);
    for _ in 0..=order {
        s = schroder_rhs(&s, &zs);
    }
    s
}

fn schroder_rhs(s: &Series, zs: &Series) -> Series {
    let s2 = s * s;
    let s3 = &s2 * s;
    let one_t = &c(1) + &t();
    &(&(zs + &(zs * s).scale(&one_t)) + &(zs * &s2).scale(&t())) + &s3.scale(&t())
}

/// `S - (z + (1+t) z S + t z S^2 + t S^3)`.
pub fn schroder_residual(s: &Series) -> Series {
    s - &schroder_rhs(s, &Series::z(s.order()))
}

/// `1 + r p z * tilde`.
fn from_tilde(tilde: Series) -> Series {
    let order = tilde.order() + 1;
    let rp = &r() * &p();
    let mut coeffs = vec![MultiPoly::one()];
    coeffs.extend(tilde.coeffs().iter().map(|a| a * &rp));
    Series::from_coeffs(coeffs, order)
}

/// Pattern sets that have a closed form, as canonical compact words.
pub const SUPPORTED: [&str; 24] = [
    "123", "132", "213", "231", "312", "321",
    "123,132", "123,213", "123,231", "123,312", "123,321", "132,213", "132,231", "132,312",
    "132,321", "213,231", "213,312", "213,321", "231,312", "231,321", "312,321",
    "2413,3142", "2413,4213", "3412,4312",
];

/// The `(des, iar, comp)` series of `patterns` up to `z^order`.
pub fn closed_form(patterns: &PatternSet, order: usize) -> Result<Series> {
    let key = patterns.canonical().to_string();
    if !SUPPORTED.contains(&key.as_str()) {
        return Err(Error::UnsupportedPattern(key));
    }
    if order == 0 {
        return Ok(Series::one(0));
    }
    let m = order - 1;
    let tilde = match key.as_str() {
        "123" | "132" | "213" | "231" | "312" | "321" => single_tilde(&key, m)?,
        "2413,3142" | "2413,4213" | "3412,4312" => schroder_tilde(m)?,
        _ => pair_tilde(&key, m)?,
    };
    Ok(from_tilde(tilde))
}

fn single_tilde(key: &str, m: usize) -> Result<Series> {
    let one = Series::one(m);
    let zs = Series::z(m);
    let rp = &r() * &p();
    let inv_rp = one_minus(&rp, m);
    match key {
        "312" => {
            let tn = narayana_series(m)?.scale(&t());
            let ztn = &zs * &tn;
            let num = &(&(&one - &zs.scale(&(&r() + &p()))) - &ztn)
                + &(&(&zs * &zs).scale(&rp) + &(&(&zs * &ztn).scale(&(&(&r() + &p()) - &c(1)))));
            frac(num, &[inv_rp, &one_minus(&r(), m) - &ztn, &one_minus(&p(), m) - &ztn])
        }
        "321" => {
            let cc = c_series(m)?;
            let c2 = &cc * &cc;
            let lin = (&(&rp - &r()) + &t()).clone();
            let num = &(&(&zs * &c2).scale(&lin) - &(&(&zs.scale(&rp) + &cst(&p() - &c(1), m)) * &cc))
                + &cst(p(), m);
            let den2 = &one - &(&zs * &cc).scale(&r());
            let den3 = &(&cst(p(), m) + &cc) - &cc.scale(&p());
            frac(num, &[inv_rp, den2, den3])
        }
        "132" => {
            let nm1 = &narayana_series(m)? - &one;
            let first = geometric(&rp, m);
            let num = &one_minus(&c(1), m) * &nm1.scale(&t());
            let den3 = &one_minus(&c(1), m) - &(&zs * &nm1).scale(&t());
            Ok(&first + &frac(num, &[one_minus(&r(), m), one_minus(&p(), m), den3])?)
        }
        "213" | "231" => {
            let v = if key == "213" { r() } else { p() };
            let u = &(&narayana_series(m)?.scale(&t()) - &cst(t(), m)) + &one;
            let num = &one_minus(&v, m) * &u;
            let den = &one - &(&zs * &u).scale(&v);
            frac(num, &[inv_rp, den])
        }
        "123" => {
            let cs = cstar_series(m + 1)?.div_by_z_power(1).map_err(internal)?;
            let one_tz = one_minus(&t(), m);
            let lin = zpoly(&[c(0), &(&t() * &r()) - &t(), c(0)], m);
            let first_num = &zs.scale(&(&c(1) - &p())) * &(&lin - &cst(r(), m));
            let first = frac(first_num, &[one_tz.clone(), one_tz])?;
            let second_num = &zpoly(&[c(1), &r() - &t()], m) * &cs;
            let second = frac(second_num, &[zpoly(&[c(1), &c(1) - &t()], m)])?;
            Ok(&first + &second)
        }
        _ => unreachable!("dispatched on supported keys"),
    }
}

fn pair_tilde(key: &str, m: usize) -> Result<Series> {
    let one = Series::one(m);
    let zs = Series::z(m);
    let z2 = &zs * &zs;
    let z3 = &z2 * &zs;
    let rp = &r() * &p();
    let tt = t().pow(2);
    let g_rp = geometric(&rp, m);
    let om = |a: MultiPoly| one_minus(&a, m);
    let one_tz = om(t());
    let z1t = om(&c(1) + &t());
    match key {
        "132,312" => Ok(&g_rp
            + &frac(&om(c(1)) * &zs.scale(&t()), &[om(r()), om(p()), z1t])?),
        "132,321" => Ok(&g_rp + &frac(zs.scale(&t()), &[om(r()), om(p()), om(c(1))])?),
        "213,231" => frac(om(c(1)), &[om(rp), z1t]),
        "123,312" => Ok(&(&frac(&one + &zs.scale(&rp), &[one_tz.clone()])?
            + &frac(z2.scale(&(&(&r() + &p()) * &t())), &[one_tz.clone(), one_tz.clone()])?)
            + &frac(z3.scale(&tt), &[one_tz.clone(), one_tz.clone(), one_tz])?),
        "213,312" => frac(om(r()), &[om(rp), om(&r() + &t())]),
        "231,312" => frac(om(p()), &[om(rp), om(&p() + &t())]),
        "231,321" => {
            let num = zpoly(&[c(1), -&(&(&c(1) + &p()) - &t()), &(&c(1) - &t()) * &p()], m);
            let den = zpoly(&[c(1), -&(&p() + &c(1)), &(&c(1) - &t()) * &p()], m);
            frac(num, &[om(rp), den])
        }
        "132,213" => Ok(&g_rp + &frac(zs.scale(&t()), &[om(r()), z1t])?),
        "132,231" => Ok(&g_rp + &frac(zs.scale(&t()), &[om(p()), z1t])?),
        "213,321" => Ok(&g_rp + &frac(zs.scale(&t()), &[om(c(1)), om(r()), om(rp)])?),
        "312,321" => {
            let den = zpoly(&[c(1), -&(&c(1) + &p()), &(&c(1) - &t()) * &p()], m);
            let num = &om(c(1)) * &zs.scale(&t());
            Ok(&g_rp + &frac(num, &[om(rp), om(r()), den])?)
        }
        "123,132" => {
            let head = zpoly(&[c(1), rp], m);
            let mid = frac(z2.scale(&(&t() * &p())), &[one_tz.clone()])?;
            let num = &(&zs.scale(&t()) * &zpoly(&[c(1), &c(1) - &t()], m))
                * &zpoly(&[c(1), &r() - &t(), &(&c(1) - &r()) * &t()], m);
            let quad = zpoly(&[c(1), &c(-2) * &t(), &tt - &t()], m);
            Ok(&(&head + &mid) + &frac(num, &[one_tz, quad])?)
        }
        "123,213" => {
            let head = &one + &frac(zs.scale(&rp), &[one_tz.clone()])?;
            let num = &(&zs.scale(&t()) * &zpoly(&[c(1), &r() - &t()], m))
                * &zpoly(&[c(1), &c(1) - &t()], m);
            let quad = zpoly(&[c(1), &c(-2) * &t(), &tt - &t()], m);
            Ok(&head + &frac(num, &[one_tz, quad])?)
        }
        "123,231" => {
            let first = frac(&one + &zs.scale(&rp), &[one_tz.clone()])?;
            let num = &zpoly(&[&c(1) + &p(), -&(&t() * &p())], m) * &z2.scale(&t());
            Ok(&first + &frac(num, &[one_tz.clone(), one_tz.clone(), one_tz])?)
        }
        "123,321" => Ok(zpoly(
            &[
                c(1),
                &t() + &rp,
                &(&(&c(1) + &r()) * &(&c(1) + &p())) * &t(),
                &(&(&(&c(2) * &r()) + &t()) + &(&p() * &t())) * &t(),
            ],
            m,
        )),
        _ => unreachable!("dispatched on supported keys"),
    }
}

fn schroder_tilde(m: usize) -> Result<Series> {
    let s = schroder_s_series(m + 1);
    let s_over_z = s.div_by_z_power(1).map_err(internal)?;
    let s = s.truncate(m)?;
    let one_r = &c(1) - &r();
    let one_p = &c(1) - &p();
    let num = &(&s_over_z + &s.scale(&(&(&c(1) - &r()) - &p()))) + &(&s * &s).scale(&(&one_r * &one_p));
    let one = Series::one(m);
    frac(
        num,
        &[one_minus(&(&r() * &p()), m), &one + &s.scale(&one_p), &one + &s.scale(&one_r)],
    )
}

/// F(q) from the indecomposable series `I` of a class with indecomposable
/// patterns: `1/(1 - q w) + q (I - w) / ((1 - q I|_{partial=1}) (1 - q w))`.
///
/// `w_coeff * z` is the weight of the one-letter permutation and `partial`
/// lists the variables of partially compatible statistics.
pub fn comp_from_indecomposables(
    i: &Series,
    partial: &[Var],
    w_coeff: &MultiPoly,
    q: Var,
) -> Result<Series> {
    let order = i.order();
    if !i.coeff(0).is_zero() {
        return Err(Error::Precondition("indecomposable series has no constant term".into()));
    }
    let i1 = partial
        .iter()
        .fold(i.clone(), |acc, v| acc.specialize(*v, &BigRational::one()));
    let qv = MultiPoly::var(q);
    let w = Series::monomial(w_coeff.clone(), 1, order);
    let one_qw = one_minus(&(&qv * w_coeff), order);
    let first = one_qw.inv()?;
    let second = frac((i - &w).scale(&qv), &[&Series::one(order) - &i1.scale(&qv), one_qw])?;
    Ok(&first + &second)
}

/// `(1 - r s z + (r s z + r s - r - s) I1) / ((1 - r I1)(1 - s I1)(1 - r s z))`.
pub fn symmetric_comp_form(i1: &Series, r_var: Var, s_var: Var) -> Result<Series> {
    let order = i1.order();
    let rv = MultiPoly::var(r_var);
    let sv = MultiPoly::var(s_var);
    let rs = &rv * &sv;
    let one = Series::one(order);
    let lin = zpoly(&[&(&rs - &rv) - &sv, rs.clone()], order);
    let num = &one_minus(&rs, order) + &(&lin * i1);
    frac(num, &[&one - &i1.scale(&rv), &one - &i1.scale(&sv), one_minus(&rs, order)])
}

/// Series over the indecomposable members of a class (no constant term).
pub fn indecomposable_series(order: usize, patterns: &PatternSet, stats: &[(Stat, Var)]) -> Series {
    let coeffs = (0..=order)
        .map(|n| {
            if n == 0 {
                return MultiPoly::zero();
            }
            let perms: Vec<Permutation> = enumerate(n, patterns)
                .into_iter()
                .filter(Permutation::is_indecomposable)
                .collect();
            joint_polynomial(&perms, stats)
        })
        .collect();
    Series::from_coeffs(coeffs, order)
}

/// Extracts `[t^(n-2) z^n]` of the 123 closed form for each `n`.
pub fn coeff_extract_123_star(order: usize) -> Result<Series> {
    let full = closed_form(&crate::perm::patterns("123"), order)?;
    let coeffs = (0..=order)
        .map(|n| {
            if n < 2 {
                MultiPoly::zero()
            } else {
                full.coeff(n).coeff_of(Var::T, n as u16 - 2)
            }
        })
        .collect();
    Ok(Series::from_coeffs(coeffs, order))
}

/// `r^2 p^2 z^2/(1-z) + (r+p) r p z^3/(1-z)^2 + (z^3 + 2 z^4) r p / ((1-z)^2 (1-2z))`.
pub fn star_123_closed(order: usize) -> Result<Series> {
    let rp = &r() * &p();
    let om1 = one_minus(&c(1), order);
    let a = frac(Series::monomial(rp.pow(2), 2, order), &[om1.clone()])?;
    let b = frac(
        Series::monomial(&(&r() + &p()) * &rp, 3, order),
        &[om1.clone(), om1.clone()],
    )?;
    let cnum = zpoly(&[c(0), c(0), c(0), rp.clone(), &c(2) * &rp], order);
    let cc = frac(cnum, &[om1.clone(), om1, one_minus(&c(2), order)])?;
    Ok(&(&a + &b) + &cc)
}

/// Residual of the cubic relation for `G(t, x, y; z)`:
/// `y^3 z + (t x y^2 z + 3 y^3 z - 2 y^2 z - y^2) G + c2 G^2 + c3 G^3`.
pub fn cubic_g_residual(g: &Series) -> Series {
    let order = g.order();
    let (tv, xv, yv) = (t(), x(), y());
    let txy2 = &(&tv * &xv) * &yv.pow(2);
    let txy = &(&tv * &xv) * &yv;
    let y2 = yv.pow(2);
    let y3 = yv.pow(3);
    let c0 = zpoly(&[c(0), y3.clone()], order);
    let c1 = zpoly(
        &[-&y2, &(&txy2 + &(&c(3) * &y3)) - &(&c(2) * &y2)],
        order,
    );
    // c2 = 2 t x y^2 z - 2 t x y z + 3 y^3 z + t y z - 4 y^2 z - 2 y^2 + y z + 2 y
    let c2z = [
        &c(2) * &txy2,
        &c(-2) * &txy,
        &c(3) * &y3,
        &tv * &yv,
        &c(-4) * &y2,
        yv.clone(),
    ]
    .iter()
    .fold(MultiPoly::zero(), |acc, a| &acc + a);
    let c2 = zpoly(&[&(&c(-2) * &y2) + &(&c(2) * &yv), c2z], order);
    // c3 = t x y^2 z - 2 t x y z + y^3 z + t x z + t y z - 2 y^2 z - t z - y^2 + y z + t + 2 y - 1
    let c3z = [
        txy2.clone(),
        &c(-2) * &txy,
        y3.clone(),
        &tv * &xv,
        &tv * &yv,
        &c(-2) * &y2,
        -&tv,
        yv.clone(),
    ]
    .iter()
    .fold(MultiPoly::zero(), |acc, a| &acc + a);
    let c3_0 = &(&(&(-&y2) + &tv) + &(&c(2) * &yv)) - &c(1);
    let c3 = zpoly(&[c3_0, c3z], order);
    let g2 = g * g;
    let g3 = &g2 * g;
    &(&(&c0 + &(&c1 * g)) + &(&c2 * &g2)) + &(&c3 * &g3)
}

/// `(des, dd, iar)` series over `patterns`, marked by `(t, x, y)`, no constant term.
pub fn g_series_from_permutations(order: usize, patterns: &PatternSet) -> Series {
    stat_series(order, patterns, &[(Stat::Des, Var::T), (Stat::Dd, Var::X), (Stat::Iar, Var::Y)])
}

/// Joint series over lengths `1..=order` (constant term zero).
pub fn stat_series(order: usize, patterns: &PatternSet, stats: &[(Stat, Var)]) -> Series {
    let coeffs = (0..=order)
        .map(|n| {
            if n == 0 {
                MultiPoly::zero()
            } else {
                joint_polynomial(&enumerate(n, patterns), stats)
            }
        })
        .collect();
    Series::from_coeffs(coeffs, order)
}

/// Residuals of the five-equation system for separable permutations.
#[derive(Clone, Debug)]
pub struct SystemReport {
    pub residuals: Vec<(String, Series)>,
}

impl SystemReport {
    pub fn all_zero(&self) -> bool {
        self.residuals.iter().all(|(_, s)| s.is_zero())
    }
}

/// Brute-force series for the separable class used by the system check.
#[derive(Clone, Debug)]
pub struct SeparableSeries {
    /// `(des, dd0, iar)` in `(t, x, y)`.
    pub l: Series,
    /// `(des, ddinf)` in `(t, x)`.
    pub r: Series,
    /// `(des, dd, iar)` in `(t, x, y)`.
    pub s: Series,
}

pub fn separable_series(order: usize) -> SeparableSeries {
    let sep = crate::perm::patterns("2413,3142");
    SeparableSeries {
        l: stat_series(order, &sep, &[(Stat::Des, Var::T), (Stat::Dd0, Var::X), (Stat::Iar, Var::Y)]),
        r: stat_series(order, &sep, &[(Stat::Des, Var::T), (Stat::Ddinf, Var::X)]),
        s: stat_series(order, &sep, &[(Stat::Des, Var::T), (Stat::Dd, Var::X), (Stat::Iar, Var::Y)]),
    }
}

/// Solution of `S1 = t S1^3 + t z S1^2 + (z + t x z) S1 + z` by fixed-point iteration.
pub fn s1_from_cubic(order: usize) -> Series {
    let zs = Series::z(order);
    let mut s = Series::zero(order);
    for _ in 0..=order {
        s = s1_rhs(&s, &zs);
    }
    s
}

fn s1_rhs(s: &Series, zs: &Series) -> Series {
    let s2 = s * s;
    let lin = &c(1) + &(&t() * &x());
    &(&(&(&s2 * s).scale(&t()) + &(zs * &s2).scale(&t())) + &(zs * s).scale(&lin)) + zs
}

/// Checks the five equations relating `L`, `R`, `S` and their `y = 1`
/// specializations, using brute-force series for `L`, `R` and `S`.
pub fn verify_sepa_system(order: usize) -> Result<SystemReport> {
    let brute = separable_series(order);
    sepa_residuals(&brute, order)
}

pub fn sepa_residuals(brute: &SeparableSeries, order: usize) -> Result<SystemReport> {
    let one = Series::one(order);
    let one_r = BigRational::one();
    let (tv, xv) = (t(), x());
    let s1c = s1_from_cubic(order);
    let s1 = brute.s.specialize(Var::Y, &one_r);
    let l1 = brute.l.specialize(Var::Y, &one_r);
    let r_ = &brute.r;
    let zs = Series::z(order);
    let b = frac(zs.scale(&y()), &[one_minus(&y(), order)])?;
    let lt = &brute.l - &b;

    let eq1 = &l1 - &frac(&s1c * &(&one + &s1c.scale(&tv)), &[&one + &s1c.scale(&(&tv * &xv))])?;
    let eq2 = r_ - &frac(&s1c * &(&s1c + &cst(xv.clone(), order)), &[&one + &s1c])?;
    let eq3 = &s1 - &s1_rhs(&s1, &zs);
    let trb = (r_ * &b).scale(&tv);
    let trl1 = (r_ * &l1).scale(&tv);
    let d1 = &one - &trb;
    let d2 = &one - &trl1;
    let tr = r_.scale(&tv);
    let bracket = &(&(&(&cst(c(2), order) + &l1) + &b) + &tr) - &(&trl1 * &b);
    let rhs4 = &frac((&(&s1 * &b) * &(&one + &b)).scale(&tv), &[d1.clone()])?
        + &frac((&(&(&zs * &s1) * &lt) * &bracket).scale(&tv), &[d1.clone(), d2.clone()])?;
    let eq4 = &(&one_minus(&c(1), order) * &lt) - &rhs4;
    let one_tr = &one + &tr;
    let rhs5 = &frac(&b * &one_tr, &[d1.clone()])?
        + &frac(&(&zs * &lt) * &(&one_tr * &one_tr), &[d1, d2])?;
    let eq5 = &brute.s - &rhs5;
    Ok(SystemReport {
        residuals: vec![
            ("L1".into(), eq1),
            ("R".into(), eq2),
            ("S1".into(), eq3),
            ("L~".into(), eq4),
            ("S".into(), eq5),
        ],
    })
}
