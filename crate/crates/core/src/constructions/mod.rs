//! Levi-flat polynomials built from rational maps and real curves, plus a
//! small registry of worked examples.

mod registry;

pub use registry::{example, example_names, ExampleRecord, Expected, ExpectedValues, Provenance};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::poly::{HoloPoly, MixedPoly};

/// `F = f / g` with holomorphic polynomials `f`, `g` in the same variables.
///
/// Coprimality is not checked. If `f` and `g` share a factor `h`, the
/// pullback still vanishes on the preimage of the curve but also on
/// `{h = 0}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap {
    f: HoloPoly,
    g: HoloPoly,
}

impl RationalMap {
    pub fn new(f: HoloPoly, g: HoloPoly) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if f.num_vars() != g.num_vars() {
            return Err(Error::VarCountMismatch {
                left: f.num_vars(),
                right: g.num_vars(),
            });
        }
        Ok(RationalMap { f, g })
    }

    pub fn numerator(&self) -> &HoloPoly {
        &self.f
    }

    pub fn denominator(&self) -> &HoloPoly {
        &self.g
    }

    pub fn num_vars(&self) -> usize {
        self.f.num_vars()
    }

    /// `F(p)`, or `None` where `g(p) = 0`.
    pub fn evaluate(&self, p: &[Coefficient]) -> Result<Option<Coefficient>> {
        let g = self.g.evaluate(p)?;
        Ok(self.f.evaluate(p)?.checked_div(&g))
    }
}

/// A real-valued polynomial `S(ζ, ζ̄) = Σ c_{jk} ζ^j ζ̄^k` defining a real
/// curve in `ℂ`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealCurvePoly(MixedPoly);

impl RealCurvePoly {
    pub fn new(p: MixedPoly) -> Result<Self> {
        if p.num_vars() != 1 {
            return Err(Error::VarCountMismatch {
                left: 1,
                right: p.num_vars(),
            });
        }
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !p.is_real_valued() {
            return Err(Error::NotRealValued);
        }
        Ok(RealCurvePoly(p))
    }

    pub fn as_mixed(&self) -> &MixedPoly {
        &self.0
    }

    /// `max(j, k)` over all terms.
    pub fn degree(&self) -> u32 {
        self.0
            .terms()
            .map(|t| t.alpha[0].max(t.beta[0]))
            .max()
            .unwrap_or(0)
    }
}

fn powers(p: &MixedPoly, d: u32) -> Vec<MixedPoly> {
    let mut out = vec![MixedPoly::one(p.num_vars())];
    for i in 1..=d as usize {
        let next = &out[i - 1] * p;
        out.push(next);
    }
    out
}

/// `Q = Σ c_{jk} f^j g^{d−j} f̄^k ḡ^{d−k}`, which equals `|g|^{2d} S(f/g)`
/// off `{g = 0}`.
pub fn pullback(map: &RationalMap, curve: &RealCurvePoly) -> Result<MixedPoly> {
    let d = curve.degree();
    let f = map.f.as_mixed();
    let g = map.g.as_mixed();
    let (fp, gp) = (powers(f, d), powers(g, d));
    let (fc, gc) = (powers(&f.conjugate(), d), powers(&g.conjugate(), d));
    let mut q = MixedPoly::zero(map.num_vars());
    for t in curve.0.terms() {
        let (j, k) = (t.alpha[0] as usize, t.beta[0] as usize);
        let (dj, dk) = (d as usize - j, d as usize - k);
        let term = &(&(&fp[j] * &gp[dj]) * &fc[k]) * &gc[dk];
        q = &q + &term.scale(t.coeff);
    }
    Ok(q)
}

/// `(1/2i)(z_1 z̄_2 − z̄_1 z_2)` in `n + 1` variables.
pub fn quadratic_cone(n: usize) -> Result<MixedPoly> {
    if n < 1 {
        return Err(Error::InvalidArgument("the cone needs n ≥ 1".into()));
    }
    let k = n + 1;
    let mut a = vec![0; k];
    let mut b = vec![0; k];
    a[0] = 1;
    b[1] = 1;
    MixedPoly::from_terms(
        k,
        [
            (a.clone(), b.clone(), Coefficient::ratio(-1, 2).mul_i()),
            (b, a, Coefficient::ratio(1, 2).mul_i()),
        ],
    )
}
