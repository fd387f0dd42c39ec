//! Hermitian coefficient forms of bihomogeneous polynomials.
//!
//! A real-valued polynomial of bidegree `(d, d)` can be written
//! `P = Σ c_{αβ} z^α z̄^β` over the degree-`d` monomials. The matrix
//! `C = [c_{αβ}]` is Hermitian, and its rank and inertia do not depend on
//! the chosen coordinates. Everything here is computed by exact congruence
//! diagonalization; no eigenvalues are ever approximated.
//!
//! The diagonalization yields `C = Σ_j w_j v_j v_j^*` with rational weights
//! `w_j ≠ 0`, which translates to `P = Σ_j w_j |p_j|²` where
//! `p_j = Σ_α v_j[α] z^α`.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{degree_basis, HoloPoly, MixedPoly, Monomial};

/// Ordered holomorphic monomials, strictly decreasing in graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialBasis {
    num_vars: usize,
    exponents: Vec<Vec<u32>>,
}

impl MonomialBasis {
    pub fn new(num_vars: usize, exponents: Vec<Vec<u32>>) -> Result<Self> {
        if exponents.iter().any(|e| e.len() != num_vars) {
            return Err(Error::InvalidArgument(
                "basis exponent length differs from variable count".into(),
            ));
        }
        let decreasing = exponents
            .windows(2)
            .all(|w| Monomial::new(w[0].clone()) > Monomial::new(w[1].clone()));
        if !decreasing {
            return Err(Error::InvalidArgument(
                "basis must be strictly decreasing in graded-lex order".into(),
            ));
        }
        Ok(MonomialBasis {
            num_vars,
            exponents,
        })
    }

    /// Every monomial of degree `d` in `num_vars` variables.
    pub fn full(num_vars: usize, d: u32) -> Self {
        MonomialBasis {
            num_vars,
            exponents: degree_basis(num_vars, d),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    pub fn index_of(&self, exps: &[u32]) -> Option<usize> {
        self.exponents.iter().position(|e| e == exps)
    }

    /// `Σ_α coeffs[α] z^α`.
    pub fn combine(&self, coeffs: &[Coefficient]) -> HoloPoly {
        HoloPoly::from_terms(
            self.num_vars,
            self.exponents.iter().cloned().zip(coeffs.iter().cloned()),
        )
        .expect("basis exponents have the right length")
    }
}

/// A basis together with the coefficient matrix `C[α][β] = c_{αβ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianForm {
    basis: MonomialBasis,
    matrix: Vec<Vec<Coefficient>>,
}

impl HermitianForm {
    /// Checks only that the matrix is square and matches the basis;
    /// Hermitian symmetry is checked by the operations that need it.
    pub fn from_parts(basis: MonomialBasis, matrix: Vec<Vec<Coefficient>>) -> Result<Self> {
        let n = basis.len();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "matrix must be {}x{} to match the basis",
                n, n
            )));
        }
        Ok(HermitianForm { basis, matrix })
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn matrix(&self) -> &[Vec<Coefficient>] {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_hermitian(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i..n).all(|j| self.matrix[i][j] == self.matrix[j][i].conj()))
    }

    /// `Σ C[α][β] z^α z̄^β`.
    pub fn reexpand(&self) -> MixedPoly {
        let ex = self.basis.exponents();
        let terms = self.matrix.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, c)| (ex[i].clone(), ex[j].clone(), c.clone()))
        });
        MixedPoly::from_terms(self.basis.num_vars, terms).expect("basis lengths agree")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MatrixOptions {
    /// Accept a purely imaginary-valued input by replacing `P` with `−i·P`.
    pub normalize_imaginary: bool,
    /// Use every degree-`d` monomial instead of only the occurring ones.
    pub full_basis: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMatrix {
    pub form: HermitianForm,
    /// True when the input was imaginary-valued and multiplied by `−i`.
    pub imaginary_normalized: bool,
}

/// Builds the Hermitian form of a bihomogeneous polynomial.
pub fn coefficient_matrix(p: &MixedPoly, opts: MatrixOptions) -> Result<CoefficientMatrix> {
    let d = match p.bidegree() {
        Some((j, k)) if j == k => j,
        _ => return Err(Error::NotBihomogeneous),
    };
    let (p, imaginary_normalized) = if p.is_real_valued() {
        (p.clone(), false)
    } else if p.is_imaginary_valued() {
        if !opts.normalize_imaginary {
            return Err(Error::ImaginaryValued);
        }
        (p.scale(&Coefficient::gaussian(0, -1)), true)
    } else {
        return Err(Error::NotRealValued);
    };

    let k = p.num_vars();
    let basis = if opts.full_basis {
        MonomialBasis::full(k, d)
    } else {
        let occurring: BTreeSet<Monomial> = p
            .terms()
            .flat_map(|t| [Monomial::new(t.alpha.to_vec()), Monomial::new(t.beta.to_vec())])
            .collect();
        MonomialBasis {
            num_vars: k,
            exponents: occurring
                .into_iter()
                .rev()
                .map(|m| m.exponents().to_vec())
                .collect(),
        }
    };
    let n = basis.len();
    let mut matrix = vec![vec![Coefficient::zero(); n]; n];
    for t in p.terms() {
        let i = basis.index_of(t.alpha).expect("alpha is in the basis");
        let j = basis.index_of(t.beta).expect("beta is in the basis");
        matrix[i][j] = t.coeff.clone();
    }
    Ok(CoefficientMatrix {
        form: HermitianForm { basis, matrix },
        imaginary_normalized,
    })
}

/// Rank and inertia `(n₊, n₋)` of a Hermitian form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub rank: usize,
    pub positives: usize,
    pub negatives: usize,
}

/// One signed square `weight · |poly|²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareTerm {
    /// Positive rational; `1` whenever the weight was a rational square
    /// and could be absorbed into `poly`.
    pub weight: BigRational,
    pub poly: HoloPoly,
}

/// `P = Σ plus_j.weight·|plus_j.poly|² − Σ minus_j.weight·|minus_j.poly|²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedDecomposition {
    pub num_vars: usize,
    pub plus: Vec<SquareTerm>,
    pub minus: Vec<SquareTerm>,
}

impl SignedDecomposition {
    pub fn rank(&self) -> usize {
        self.plus.len() + self.minus.len()
    }

    pub fn inertia(&self) -> Inertia {
        Inertia {
            rank: self.rank(),
            positives: self.plus.len(),
            negatives: self.minus.len(),
        }
    }

    /// All polynomials, positive ones first.
    pub fn polys(&self) -> impl Iterator<Item = &HoloPoly> + '_ {
        self.plus.iter().chain(&self.minus).map(|t| &t.poly)
    }

    /// Rank of the coefficient rows of the `p_j` over `basis`; equals
    /// [`rank`](Self::rank) when they are linearly independent.
    pub fn independent_count(&self, basis: &MonomialBasis) -> usize {
        let rows: Vec<Vec<Coefficient>> = self
            .polys()
            .map(|p| {
                basis
                    .exponents()
                    .iter()
                    .map(|a| p.coefficient(a, &vec![0; basis.num_vars()]))
                    .collect()
            })
            .collect();
        linalg::rank(&rows)
    }
}

/// Congruence diagonalization `C = Σ w_j v_j v_j^*`.
///
/// Pivots on the first nonzero diagonal entry. When the remaining block has
/// zero diagonal but a nonzero entry `a = A[α][β]`, it splits the hyperbolic
/// pair with `x = A[:,α]`, `y = A[:,β]/a`, using
/// `x y^* + y x^* = ½(x+y)(x+y)^* − ½(x−y)(x−y)^*`.
fn diagonalize(matrix: &[Vec<Coefficient>]) -> Vec<(BigRational, Vec<Coefficient>)> {
    let n = matrix.len();
    let mut a: Vec<Vec<Coefficient>> = matrix.to_vec();
    let mut out = Vec::new();
    let half = BigRational::new(1.into(), 2.into());
    loop {
        if let Some(i) = (0..n).find(|&i| !a[i][i].is_zero()) {
            let d = a[i][i].re.clone();
            let col: Vec<Coefficient> = (0..n).map(|r| a[r][i].clone()).collect();
            let d_inv = Coefficient::real(d.recip());
            for r in 0..n {
                if col[r].is_zero() {
                    continue;
                }
                let left = &col[r] * &d_inv;
                for s in 0..n {
                    if !col[s].is_zero() {
                        a[r][s] -= &(&left * &col[s].conj());
                    }
                }
            }
            out.push((d, col.iter().map(|c| c * &d_inv).collect()));
            continue;
        }
        let Some((alpha, beta)) = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        else {
            return out;
        };
        let pivot_inv = a[alpha][beta].inv().unwrap();
        let x: Vec<Coefficient> = (0..n).map(|r| a[r][alpha].clone()).collect();
        let y: Vec<Coefficient> = (0..n).map(|r| &a[r][beta] * &pivot_inv).collect();
        for r in 0..n {
            for s in 0..n {
                let upd = &(&x[r] * &y[s].conj()) + &(&y[r] * &x[s].conj());
                a[r][s] -= &upd;
            }
        }
        let sum = x.iter().zip(&y).map(|(p, q)| p + q).collect();
        let diff = x.iter().zip(&y).map(|(p, q)| p - q).collect();
        out.push((half.clone(), sum));
        out.push((-half.clone(), diff));
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

fn check_hermitian(form: &HermitianForm) -> Result<()> {
    if form.is_hermitian() {
        Ok(())
    } else {
        Err(Error::NotHermitian)
    }
}

pub fn rank_signature(form: &HermitianForm) -> Result<Inertia> {
    check_hermitian(form)?;
    let steps = diagonalize(&form.matrix);
    let positives = steps.iter().filter(|(w, _)| w.is_positive()).count();
    Ok(Inertia {
        rank: steps.len(),
        positives,
        negatives: steps.len() - positives,
    })
}

pub fn holomorphic_decomposition(form: &HermitianForm) -> Result<SignedDecomposition> {
    check_hermitian(form)?;
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (w, v) in diagonalize(&form.matrix) {
        let positive = w.is_positive();
        let mut weight = w.abs();
        let mut v = v;
        if let Some(root) = rational_sqrt(&weight) {
            let s = Coefficient::real(root);
            v = v.iter().map(|c| c * &s).collect();
            weight = BigRational::one();
        }
        let term = SquareTerm {
            weight,
            poly: form.basis.combine(&v),
        };
        if positive {
            plus.push(term);
        } else {
            minus.push(term);
        }
    }
    Ok(SignedDecomposition {
        num_vars: form.basis.num_vars,
        plus,
        minus,
    })
}

/// `Σ w |p|²` over the positive terms minus the same over the negative ones.
pub fn reexpand(dec: &SignedDecomposition) -> MixedPoly {
    let mut acc = MixedPoly::zero(dec.num_vars);
    for (terms, sign) in [(&dec.plus, 1), (&dec.minus, -1)] {
        for t in terms {
            let w = Coefficient::real(&t.weight * BigRational::from_integer(sign.into()));
            acc = &acc + &t.poly.norm_squared().scale(&w);
        }
    }
    acc
}
