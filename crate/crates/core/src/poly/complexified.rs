use std::fmt;

use super::{add_term, mul_maps, MixedPoly, TermMap};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};

/// A polynomial in `2k` independent variables `z_1..z_k, w_1..w_k`.
///
/// Only obtainable from [`MixedPoly::complexify`]; the diagonal restriction
/// `w = z̄` gives the source back.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplexifiedPoly {
    num_vars: usize,
    terms: TermMap,
}

impl ComplexifiedPoly {
    pub(crate) fn from_map(num_vars: usize, terms: TermMap) -> Self {
        ComplexifiedPoly { num_vars, terms }
    }

    /// Number of `z` variables (the ring has twice as many).
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes `w := z̄`.
    pub fn restrict_diagonal(&self) -> MixedPoly {
        MixedPoly::from_map(self.num_vars, self.terms.clone())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.num_vars != other.num_vars {
            return Err(Error::VarCountMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(ComplexifiedPoly::from_map(
            self.num_vars,
            mul_maps(&self.terms, &other.terms),
        ))
    }

    /// See [`divide_exact`].
    pub fn divide_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        divide_exact(self, divisor)
    }
}

/// Exact quotient `a / b` in the polynomial ring over the Gaussian rationals.
///
/// Runs leading-term elimination against the single divisor `b`. A principal
/// ideal is generated by a Gröbner basis of one element, so the remainder is
/// zero exactly when `b` divides `a`; the first leading term not divisible by
/// `LT(b)` proves non-divisibility and the function returns `Ok(None)`.
pub fn divide_exact(a: &ComplexifiedPoly, b: &ComplexifiedPoly) -> Result<Option<ComplexifiedPoly>> {
    if a.num_vars != b.num_vars {
        return Err(Error::VarCountMismatch {
            left: a.num_vars,
            right: b.num_vars,
        });
    }
    let (lead_mono, lead_coeff) = b.terms.last_key_value().ok_or(Error::DivisionByZero)?;
    let lead_inv = lead_coeff.inv().expect("stored coefficients are nonzero");

    let mut rem = a.terms.clone();
    let mut quot = TermMap::new();
    while let Some((m, c)) = rem.last_key_value() {
        let Some(shift) = m.div(lead_mono) else {
            return Ok(None);
        };
        let factor: Coefficient = c * &lead_inv;
        for (bm, bc) in &b.terms {
            add_term(&mut rem, bm.mul(&shift), &-&(bc * &factor));
        }
        debug_assert!(!rem.contains_key(&shift.mul(lead_mono)));
        add_term(&mut quot, shift, &factor);
    }
    Ok(Some(ComplexifiedPoly::from_map(a.num_vars, quot)))
}

impl fmt::Debug for ComplexifiedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prints with `w1..wk` for the formerly conjugate slots.
impl fmt::Display for ComplexifiedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let k = self.num_vars;
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}", c)?;
            for (slot, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if slot < k {
                    format!("z{}", slot + 1)
                } else {
                    format!("w{}", slot - k + 1)
                };
                if e == 1 {
                    write!(f, "*{}", name)?;
                } else {
                    write!(f, "*{}^{}", name, e)?;
                }
            }
        }
        Ok(())
    }
}
