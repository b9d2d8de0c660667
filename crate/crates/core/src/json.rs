//! JSON forms of matrices and series.
//!
//! Matrix: `{"n": 3, "patterns": ["2413", "3142"], "rows": [[2,1,0], ...]}`.
//! Series: a list of `{"z": n, "terms": [{"exps": {"t": 1}, "num": "2", "den": "1"}]}`,
//! one entry per power of `z` up to the order, zero coefficients included.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::engine::DistributionMatrix;
use crate::error::{Error, Result};
use crate::perm::PatternSet;
use crate::poly::{Exps, MultiPoly, Var};
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub patterns: Vec<String>,
    pub rows: Vec<Vec<u64>>,
}

impl MatrixJson {
    pub fn new(patterns: &PatternSet, m: &DistributionMatrix) -> Self {
        Self { n: m.n(), patterns: patterns.words(), rows: m.rows().to_vec() }
    }

    pub fn matrix(&self) -> Result<DistributionMatrix> {
        DistributionMatrix::from_rows(self.rows.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: BTreeMap<String, u16>,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub z: usize,
    pub terms: Vec<TermJson>,
}

pub fn poly_terms(p: &MultiPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(e, c)| TermJson {
            exps: Var::ALL
                .iter()
                .filter(|v| e[**v as usize] > 0)
                .map(|v| (v.name().to_string(), e[*v as usize]))
                .collect(),
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        })
        .collect()
}

pub fn poly_from_terms(terms: &[TermJson]) -> Result<MultiPoly> {
    let mut p = MultiPoly::zero();
    for t in terms {
        let mut e: Exps = Default::default();
        for (name, &k) in &t.exps {
            let v = Var::from_name(name).ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            e[v as usize] = k;
        }
        let num: BigInt = t.num.parse().map_err(|_| Error::Parse(format!("bad numerator {:?}", t.num)))?;
        let den: BigInt = t.den.parse().map_err(|_| Error::Parse(format!("bad denominator {:?}", t.den)))?;
        if den == BigInt::from(0) {
            return Err(Error::Parse("zero denominator".into()));
        }
        p += &MultiPoly::monomial(e, BigRational::new(num, den));
    }
    Ok(p)
}

pub fn series_to_json(s: &Series) -> Vec<CoeffJson> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(z, c)| CoeffJson { z, terms: poly_terms(c) })
        .collect()
}

pub fn series_from_json(coeffs: &[CoeffJson]) -> Result<Series> {
    let order = coeffs.iter().map(|c| c.z).max().unwrap_or(0);
    let mut out = vec![MultiPoly::zero(); order + 1];
    for c in coeffs {
        out[c.z] += &poly_from_terms(&c.terms)?;
    }
    Ok(Series::from_coeffs(out, order))
}

pub fn matrix_string(patterns: &PatternSet, m: &DistributionMatrix) -> String {
    serde_json::to_string(&MatrixJson::new(patterns, m)).expect("plain data serializes")
}

pub fn series_string(s: &Series) -> String {
    serde_json::to_string(&series_to_json(s)).expect("plain data serializes")
}
