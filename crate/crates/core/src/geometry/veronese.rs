use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::hermitian::MonomialBasis;
use crate::poly::{MixedPoly, Substitution};

/// The degree-`d` Veronese map `z ↦ (z^α)_{|α| = d}`, with target
/// coordinates `W_1..W_N` ordered like [`MonomialBasis::full`].
#[derive(Clone, Debug)]
pub struct VeroneseMap {
    degree: u32,
    basis: MonomialBasis,
}

impl VeroneseMap {
    pub fn new(num_vars: usize, degree: u32) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("Veronese degree must be at least 1".into()));
        }
        if num_vars == 0 {
            return Err(Error::TooFewVariables { required: 1, got: 0 });
        }
        Ok(VeroneseMap {
            degree,
            basis: MonomialBasis::full(num_vars, degree),
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn source_vars(&self) -> usize {
        self.basis.num_vars()
    }

    pub fn target_vars(&self) -> usize {
        self.basis.len()
    }

    pub fn point(&self, p: &[Coefficient]) -> Result<Vec<Coefficient>> {
        if p.len() != self.source_vars() {
            return Err(Error::LengthMismatch {
                expected: self.source_vars(),
                got: p.len(),
            });
        }
        Ok(self
            .basis
            .exponents()
            .iter()
            .map(|alpha| {
                p.iter()
                    .zip(alpha)
                    .fold(Coefficient::one(), |acc, (x, &e)| &acc * &x.pow(e))
            })
            .collect())
    }

    /// Rewrites `c · z^α z̄^β` as `c · W_α W̄_β`. Every `α` and `β` must have
    /// degree `0` or `d`, so degree-`d` holomorphic forms become linear forms
    /// and `(d, d)` forms become Hermitian quadratic forms in `W`.
    pub fn lift(&self, form: &MixedPoly) -> Result<MixedPoly> {
        if form.num_vars() != self.source_vars() {
            return Err(Error::VarCountMismatch {
                left: self.source_vars(),
                right: form.num_vars(),
            });
        }
        let n = self.target_vars();
        let slot = |exps: &[u32]| -> Result<Vec<u32>> {
            let mut out = vec![0; n];
            if exps.iter().all(|&e| e == 0) {
                return Ok(out);
            }
            let idx = self.basis.index_of(exps).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "monomial exponent {:?} is neither constant nor of degree {}",
                    exps, self.degree
                ))
            })?;
            out[idx] = 1;
            Ok(out)
        };
        let terms = form
            .terms()
            .map(|t| Ok((slot(t.alpha)?, slot(t.beta)?, t.coeff.clone())))
            .collect::<Result<Vec<_>>>()?;
        MixedPoly::from_terms(n, terms)
    }

    /// Composes a polynomial in `W` with the Veronese map.
    pub fn pull_back(&self, q: &MixedPoly) -> Result<MixedPoly> {
        if q.num_vars() != self.target_vars() {
            return Err(Error::VarCountMismatch {
                left: self.target_vars(),
                right: q.num_vars(),
            });
        }
        let k = self.source_vars();
        let mut sub = Substitution::new(k);
        for (j, alpha) in self.basis.exponents().iter().enumerate() {
            let m = MixedPoly::monomial(alpha, &vec![0; k], Coefficient::one())?;
            sub.set_conjugate_pair(j, m)?;
        }
        q.substitute(&sub)
    }
}
