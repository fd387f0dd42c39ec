//! Projective operations on defining polynomials.
//!
//! Affine polynomials in `k` variables are lifted to bihomogeneous
//! polynomials in `k + 1` variables (the cone over the projective closure),
//! and the algebraic Segre variety `{z : P(z, p̄) = 0}` of a point `p` is
//! computed exactly. A point is an algebraic degenerate singularity when its
//! Segre polynomial vanishes identically.

mod veronese;

use serde::Serialize;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::hermitian::{coefficient_matrix, rank_signature, MatrixOptions};
use crate::linalg;
use crate::poly::{HoloPoly, MixedPoly, TermMap};

pub use veronese::VeroneseMap;

/// Where the homogenizing variable goes when lifting from `ℂ^n` to
/// `ℂ^{n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectiveContext {
    /// Dimension of the projective space, i.e. the affine variable count.
    pub n: usize,
    /// Index of the homogenizing variable among the `n + 1` variables.
    pub hom_index: usize,
}

impl ProjectiveContext {
    pub fn new(n: usize, hom_index: usize) -> Result<Self> {
        if hom_index > n {
            return Err(Error::IndexOutOfRange {
                index: hom_index,
                num_vars: n + 1,
            });
        }
        Ok(ProjectiveContext { n, hom_index })
    }

    /// Homogenizing variable appended after the affine ones.
    pub fn appended(n: usize) -> Self {
        ProjectiveContext { n, hom_index: n }
    }
}

/// Lifts `rho` to a bihomogeneous polynomial of bidegree `(D, D)` where
/// `D` is the largest `z`- or `z̄`-degree of any term. A term of bidegree
/// `(j, k)` picks up `w^{D−j} w̄^{D−k}`.
pub fn bihomogenize(rho: &MixedPoly, ctx: &ProjectiveContext, allow_imaginary: bool) -> Result<MixedPoly> {
    if rho.num_vars() != ctx.n {
        return Err(Error::VarCountMismatch {
            left: ctx.n,
            right: rho.num_vars(),
        });
    }
    if rho.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !rho.is_real_valued() {
        if !rho.is_imaginary_valued() {
            return Err(Error::NotRealValued);
        }
        if !allow_imaginary {
            return Err(Error::ImaginaryValued);
        }
    }
    let d = rho
        .terms()
        .map(|t| t.alpha.iter().sum::<u32>().max(t.beta.iter().sum()))
        .max()
        .expect("nonzero polynomial");
    let h = ctx.hom_index;
    let lifted = rho.insert_variable(h)?;
    Ok(lifted.map_monomials(|a, b| {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        a[h] = d - a.iter().sum::<u32>();
        b[h] = d - b.iter().sum::<u32>();
        (a, b)
    }))
}

/// Sets the chart variable and its conjugate to 1 and drops it.
pub fn dehomogenize(p: &MixedPoly, chart: usize) -> Result<MixedPoly> {
    if !p.is_bihomogeneous() {
        return Err(Error::NotBihomogeneous);
    }
    let k = p.num_vars();
    if chart >= k {
        return Err(Error::IndexOutOfRange {
            index: chart,
            num_vars: k,
        });
    }
    let terms = p.terms().map(|t| {
        let mut a = t.alpha.to_vec();
        let mut b = t.beta.to_vec();
        a.remove(chart);
        b.remove(chart);
        (a, b, t.coeff.clone())
    });
    MixedPoly::from_terms(k - 1, terms)
}

/// `z ↦ P(z, p̄)`: the conjugate slots receive the exact conjugate of `p`.
pub fn segre_polynomial(p: &MixedPoly, point: &[Coefficient]) -> Result<HoloPoly> {
    let k = p.num_vars();
    if point.len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            got: point.len(),
        });
    }
    let conj: Vec<Coefficient> = point.iter().map(Coefficient::conj).collect();
    let mut map = TermMap::new();
    for t in p.terms() {
        let mut c = t.coeff.clone();
        for (v, &e) in conj.iter().zip(t.beta) {
            if e > 0 {
                c = &c * &v.pow(e);
            }
        }
        let mut exps = t.alpha.to_vec();
        exps.resize(2 * k, 0);
        crate::poly::add_term(&mut map, crate::poly::Monomial::new(exps), &c);
    }
    HoloPoly::new(MixedPoly::from_map(k, map))
}

/// True iff the Segre polynomial of `point` is identically zero.
pub fn is_algebraic_degenerate(p: &MixedPoly, point: &[Coefficient]) -> Result<bool> {
    Ok(segre_polynomial(p, point)?.is_zero())
}

/// Polynomials whose common zeros are the algebraic degenerate
/// singularities of a bihomogeneous polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegeneracyReport {
    #[serde(skip)]
    pub generators: Vec<HoloPoly>,
    /// Basis row `α` that produced each generator.
    pub rows: Vec<Vec<u32>>,
    pub rank: usize,
    /// `n − r` when the rank `r` is at most `n`: the degenerate set then
    /// contains a projective subvariety of at least this dimension
    /// (affine cone dimension one more).
    pub projective_dimension_bound: Option<usize>,
    pub imaginary_normalized: bool,
}

impl DegeneracyReport {
    /// True iff every generator vanishes at `point`.
    pub fn contains(&self, point: &[Coefficient]) -> Result<bool> {
        for g in &self.generators {
            if !g.evaluate(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// An exact row-reduced basis of the span of the generators.
    pub fn reduced_generators(&self) -> Vec<HoloPoly> {
        let Some(first) = self.generators.first() else {
            return Vec::new();
        };
        let k = first.num_vars();
        let zero = vec![0; k];
        let mut monos: Vec<Vec<u32>> = self
            .generators
            .iter()
            .flat_map(|g| g.terms().map(|t| t.alpha.to_vec()).collect::<Vec<_>>())
            .collect();
        monos.sort_by(|a, b| {
            crate::poly::Monomial::new(b.clone()).cmp(&crate::poly::Monomial::new(a.clone()))
        });
        monos.dedup();
        let rows: Vec<Vec<Coefficient>> = self
            .generators
            .iter()
            .map(|g| monos.iter().map(|m| g.coefficient(m, &zero)).collect())
            .collect();
        linalg::row_reduce(&rows)
            .into_iter()
            .map(|row| {
                HoloPoly::from_terms(k, monos.iter().cloned().zip(row)).expect("lengths agree")
            })
            .collect()
    }
}

/// One generator `h_α(w) = Σ_β conj(c_{αβ}) w^β` per nonzero row of the
/// coefficient matrix. Purely imaginary-valued input is normalized by `−i`.
pub fn degenerate_locus_generators(p: &MixedPoly) -> Result<DegeneracyReport> {
    let cm = coefficient_matrix(
        p,
        MatrixOptions {
            normalize_imaginary: true,
            full_basis: false,
        },
    )?;
    let form = &cm.form;
    let basis = form.basis();
    let mut generators = Vec::new();
    let mut rows = Vec::new();
    for (alpha, row) in basis.exponents().iter().zip(form.matrix()) {
        let conj: Vec<Coefficient> = row.iter().map(Coefficient::conj).collect();
        let h = basis.combine(&conj);
        if !h.is_zero() {
            generators.push(h);
            rows.push(alpha.clone());
        }
    }
    let rank = rank_signature(form)?.rank;
    let n = p.num_vars().saturating_sub(1);
    Ok(DegeneracyReport {
        generators,
        rows,
        rank,
        projective_dimension_bound: (rank <= n).then(|| n - rank),
        imaginary_normalized: cm.imaginary_normalized,
    })
}
