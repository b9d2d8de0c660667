//! Exact multivariate polynomials over the rationals.
//!
//! The variable roster is fixed: `t, r, p, x, y, q, s`. A polynomial that
//! never mentions a variable simply has exponent 0 there.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const NVARS: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T = 0,
    R = 1,
    P = 2,
    X = 3,
    Y = 4,
    Q = 5,
    S = 6,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::T, Var::R, Var::P, Var::X, Var::Y, Var::Q, Var::S];

    pub fn name(self) -> &'static str {
        ["t", "r", "p", "x", "y", "q", "s"][self as usize]
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

/// Exponent vector indexed by [`Var`].
pub type Exps = [u16; NVARS];

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial in the fixed variable roster with rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct MultiPoly {
    terms: BTreeMap<Exps, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v as usize] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn monomial(exps: Exps, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    /// The monomial `prod v^e` with coefficient 1.
    pub fn power_product(powers: &[(Var, u16)]) -> Self {
        let mut e = [0; NVARS];
        for &(v, k) in powers {
            e[v as usize] += k;
        }
        Self::monomial(e, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms.get(&[0; NVARS]).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coefficient(&self, exps: &Exps) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Some(c) when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0; NVARS]).cloned(),
            _ => None,
        }
    }

    /// Some((exps, c)) when the polynomial is a single nonzero term.
    pub fn as_monomial(&self) -> Option<(Exps, BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c.clone()))
        } else {
            None
        }
    }

    fn add_term(&mut self, exps: Exps, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn degree_in(&self, v: Var) -> Option<u16> {
        self.terms.keys().map(|e| e[v as usize]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().map(|&k| k as u32).sum()).max()
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: u16) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[v as usize] == k {
                let mut e2 = *e;
                e2[v as usize] = 0;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    /// Substitutes the constant `value` for `v`.
    pub fn specialize(&self, v: Var, value: &BigRational) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let k = e[v as usize];
            let mut e2 = *e;
            e2[v as usize] = 0;
            let mut factor = BigRational::one();
            for _ in 0..k {
                factor *= value;
            }
            out.add_term(e2, c * factor);
        }
        out
    }

    /// Evaluates every variable at 1.
    pub fn eval_ones(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = *e;
                    e2.swap(a as usize, b as usize);
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Renames `from` to `to`, merging with existing powers of `to`.
    pub fn rename(&self, from: Var, to: Var) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = e2[from as usize];
            e2[from as usize] = 0;
            e2[to as usize] += k;
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Substitutes the polynomial `value` for `v`.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Self {
        let mut out = Self::zero();
        let mut powers: Vec<MultiPoly> = vec![Self::one()];
        for (e, c) in &self.terms {
            let k = e[v as usize] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut e2 = *e;
            e2[v as usize] = 0;
            out += &(&powers[k] * &MultiPoly::monomial(e2, c.clone()));
        }
        out
    }

    /// Exact division by a single monomial term.
    pub fn div_monomial(&self, exps: &Exps, c: &BigRational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Division("division by zero monomial".into()));
        }
        let mut terms = BTreeMap::new();
        for (e, v) in &self.terms {
            let mut e2 = [0; NVARS];
            for i in 0..NVARS {
                e2[i] = e[i].checked_sub(exps[i]).ok_or_else(|| {
                    Error::Division(format!("{self} is not divisible by the monomial"))
                })?;
            }
            terms.insert(e2, v / c);
        }
        Ok(Self { terms })
    }

    /// True iff every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True iff every coefficient is a nonnegative integer.
    pub fn is_counting(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Univariate coefficient list in `v`, requiring no other variables.
    pub fn univariate_coeffs(&self, v: Var) -> Result<Vec<BigRational>> {
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut out = vec![BigRational::zero(); deg + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != v as usize && k != 0) {
                return Err(Error::InvalidInput(format!(
                    "{self} involves variables other than {}",
                    v.name()
                )));
            }
            out[e[v as usize] as usize] = c.clone();
        }
        Ok(out)
    }

    pub fn from_univariate(v: Var, coeffs: &[BigRational]) -> Self {
        let mut out = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = [0; NVARS];
            e[v as usize] = k as u16;
            out.add_term(e, c.clone());
        }
        out
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::int(n)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for i in 0..NVARS {
                    e[i] += eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in descending exponent order, e.g. `t^2*x^2*y + 2*t*x*y^2 + y^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut mag = c.clone();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                    mag = -mag;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
                mag = -mag;
            } else {
                f.write_str(" + ")?;
            }
            let vars: Vec<String> = Var::ALL
                .iter()
                .filter(|v| e[**v as usize] > 0)
                .map(|v| match e[*v as usize] {
                    1 => v.name().to_string(),
                    k => format!("{}^{k}", v.name()),
                })
                .collect();
            if vars.is_empty() {
                write_coeff(f, &mag)?;
            } else {
                if !mag.is_one() {
                    write_coeff(f, &mag)?;
                    f.write_str("*")?;
                }
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

/// Shorthand constructors used when transcribing closed forms.
pub mod vars {
    use super::{MultiPoly, Var};

    pub fn t() -> MultiPoly {
        MultiPoly::var(Var::T)
    }
    pub fn r() -> MultiPoly {
        MultiPoly::var(Var::R)
    }
    pub fn p() -> MultiPoly {
        MultiPoly::var(Var::P)
    }
    pub fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    pub fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    pub fn q() -> MultiPoly {
        MultiPoly::var(Var::Q)
    }
    pub fn s() -> MultiPoly {
        MultiPoly::var(Var::S)
    }
    pub fn c(n: i64) -> MultiPoly {
        MultiPoly::int(n)
    }
}
