use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::poly::MixedPoly;

pub const SCHEMA_VERSION: u32 = 1;

/// Exact JSON form of a [`MixedPoly`].
///
/// Rationals are strings `"p/q"` (or `"p"` for integers) in lowest terms;
/// floats never appear.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDocument {
    pub schema_version: u32,
    pub num_vars: usize,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub re: String,
    pub im: String,
}

pub fn to_json(p: &MixedPoly) -> PolyDocument {
    PolyDocument {
        schema_version: SCHEMA_VERSION,
        num_vars: p.num_vars(),
        terms: p
            .terms()
            .map(|t| TermRecord {
                alpha: t.alpha.to_vec(),
                beta: t.beta.to_vec(),
                re: t.coeff.re.to_string(),
                im: t.coeff.im.to_string(),
            })
            .collect(),
    }
}

pub fn from_json(doc: &PolyDocument) -> Result<MixedPoly> {
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Document(format!(
            "unsupported schema_version {} (expected {})",
            doc.schema_version, SCHEMA_VERSION
        )));
    }
    let mut seen = std::collections::HashSet::new();
    let mut triples = Vec::with_capacity(doc.terms.len());
    for (n, t) in doc.terms.iter().enumerate() {
        if t.alpha.len() != doc.num_vars || t.beta.len() != doc.num_vars {
            return Err(Error::Document(format!(
                "term {}: exponent vectors must have length {}",
                n, doc.num_vars
            )));
        }
        let c = Coefficient::new(parse_rational(&t.re)?, parse_rational(&t.im)?);
        if c.is_zero() {
            return Err(Error::Document(format!("term {}: zero coefficient", n)));
        }
        if !seen.insert((&t.alpha, &t.beta)) {
            return Err(Error::Document(format!("term {}: duplicate monomial", n)));
        }
        triples.push((t.alpha.clone(), t.beta.clone(), c));
    }
    MixedPoly::from_terms(doc.num_vars, triples)
}

pub fn to_json_string(p: &MixedPoly) -> String {
    serde_json::to_string_pretty(&to_json(p)).expect("document serializes")
}

pub fn from_json_str(s: &str) -> Result<MixedPoly> {
    let doc: PolyDocument =
        serde_json::from_str(s).map_err(|e| Error::Document(e.to_string()))?;
    from_json(&doc)
}

/// Parses `"p/q"` or `"p"` with an optional leading `-`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Document(format!("malformed rational `{}`", s));
    let int = |part: &str| -> Result<BigInt> {
        let digits = part.strip_prefix('-').unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        part.parse().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(int(s)?)),
        Some((n, d)) => {
            let den = int(d)?;
            if den.is_zero() {
                return Err(Error::Document(format!("zero denominator in `{}`", s)));
            }
            Ok(BigRational::new(int(n)?, den))
        }
    }
}
