//! Power series in `z` truncated at a fixed order, with [`MultiPoly`] coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::error::{precondition, Error, Result};
use crate::poly::{ratio, Exps, MultiPoly, Var};

/// `sum_{n <= order} coeffs[n] z^n`, exact modulo `z^(order+1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    order: usize,
    coeffs: Vec<MultiPoly>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(MultiPoly::one(), order)
    }

    pub fn constant(c: MultiPoly, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::monomial(MultiPoly::one(), 1, order)
    }

    /// `c * z^k`, which is zero when `k > order`.
    pub fn monomial(c: MultiPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from its first coefficients; missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<MultiPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, MultiPoly::zero());
        coeffs.truncate(order + 1);
        Self { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order {
            return Err(precondition(format!(
                "cannot extend a series of order {} to order {order}",
                self.order
            )));
        }
        Ok(Self {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        self.map(|a| a * c)
    }

    pub fn specialize(&self, v: Var, value: &BigRational) -> Self {
        self.map(|a| a.specialize(v, value))
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        self.map(|c| c.swap_vars(a, b))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.order);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Multiplicative inverse. The constant coefficient must be a single
    /// nonzero term; every later coefficient must then divide exactly.
    pub fn inv(&self) -> Result<Self> {
        Self::one(self.order).div(self)
    }

    /// `self / rhs` to `min(order)`.
    pub fn div(&self, rhs: &Series) -> Result<Self> {
        let order = self.order.min(rhs.order);
        let (e0, c0) = leading_unit(&rhs.coeffs[0])?;
        let mut q: Vec<MultiPoly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                if !rhs.coeffs[k].is_zero() && !q[n - k].is_zero() {
                    acc -= &(&rhs.coeffs[k] * &q[n - k]);
                }
            }
            q.push(acc.div_monomial(&e0, &c0)?);
        }
        Ok(Self { order, coeffs: q })
    }

    /// Divides by `z^k`; the first `k` coefficients must vanish. Order drops by `k`.
    pub fn div_by_z_power(&self, k: usize) -> Result<Self> {
        if k > self.order {
            return Err(Error::Division(format!(
                "cannot divide an order-{} series by z^{k}",
                self.order
            )));
        }
        if let Some(n) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::Division(format!(
                "coefficient of z^{n} is nonzero, cannot divide by z^{k}"
            )));
        }
        Ok(Self {
            order: self.order - k,
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Exact division of every coefficient by a monomial in the variables.
    pub fn div_by_monomial(&self, m: &MultiPoly) -> Result<Self> {
        let (e, c) = m
            .as_monomial()
            .ok_or_else(|| Error::Division(format!("{m} is not a monomial")))?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.div_monomial(&e, &c))
            .collect::<Result<_>>()?;
        Ok(Self {
            order: self.order,
            coeffs,
        })
    }

    /// Square root with constant term 1, via `f_n = (a_n - sum_{0<k<n} f_k f_{n-k}) / 2`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(precondition("square root needs constant term 1"));
        }
        let half = ratio(1, 2);
        let mut f: Vec<MultiPoly> = vec![MultiPoly::one()];
        for n in 1..=self.order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &(&f[k] * &f[n - k]);
            }
            f.push(acc.scale(&half));
        }
        Ok(Self {
            order: self.order,
            coeffs: f,
        })
    }

    /// True iff every coefficient has integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_integral)
    }

    fn zip(&self, rhs: &Series, f: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly) -> Series {
        let order = self.order.min(rhs.order);
        Series {
            order,
            coeffs: (0..=order).map(|n| f(&self.coeffs[n], &rhs.coeffs[n])).collect(),
        }
    }
}

fn leading_unit(c0: &MultiPoly) -> Result<(Exps, BigRational)> {
    c0.as_monomial().ok_or_else(|| {
        Error::Division(format!(
            "constant coefficient {c0} is not an invertible single term"
        ))
    })
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![MultiPoly::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !rhs.coeffs[j].is_zero() {
                    coeffs[i + j] += &(&self.coeffs[i] * &rhs.coeffs[j]);
                }
            }
        }
        Series { order, coeffs }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.map(|a| -a)
    }
}

impl Add for Series {
    type Output = Series;
    fn add(self, rhs: Series) -> Series {
        &self + &rhs
    }
}

impl Sub for Series {
    type Output = Series;
    fn sub(self, rhs: Series) -> Series {
        &self - &rhs
    }
}

impl Mul for Series {
    type Output = Series;
    fn mul(self, rhs: Series) -> Series {
        &self * &rhs
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self})")
    }
}

/// `1 / (1 - a z)` for a polynomial `a`.
pub fn geometric(a: &MultiPoly, order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut cur = MultiPoly::one();
    for _ in 0..=order {
        coeffs.push(cur.clone());
        cur = &cur * a;
    }
    Series::from_coeffs(coeffs, order)
}

/// Builds the polynomial-in-z series `sum c_k z^k`.
pub fn zpoly(coeffs: &[MultiPoly], order: usize) -> Series {
    Series::from_coeffs(coeffs.to_vec(), order)
}

/// Converts a rational number that must be an integer.
pub fn expect_integer(c: &BigRational) -> Result<num_bigint::BigInt> {
    if c.is_integer() {
        Ok(c.to_integer())
    } else {
        Err(Error::Internal(format!("{c} is not an integer")))
    }
}

impl Default for Series {
    fn default() -> Self {
        Series::zero(0)
    }
}

/// `1 - a z`.
pub fn one_minus(a: &MultiPoly, order: usize) -> Series {
    zpoly(&[MultiPoly::one(), -a], order)
}
