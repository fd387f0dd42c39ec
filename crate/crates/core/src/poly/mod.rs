//! Exact polynomials in `z_1..z_k` and their conjugates.
//!
//! A [`MixedPoly`] stores each term under the concatenated exponent vector
//! `[α, β]` where `α` belongs to the holomorphic variables and `β` to the
//! conjugates. Terms live in a `BTreeMap` keyed by graded-lex [`Monomial`]s,
//! so the leading term is always the last entry and printing walks the map
//! backwards. Zero coefficients are never stored.

mod complexified;
mod monomial;
mod substitute;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};

pub use complexified::{divide_exact, ComplexifiedPoly};
pub use monomial::{degree_basis, Monomial};
pub use substitute::Substitution;

pub(crate) type TermMap = BTreeMap<Monomial, Coefficient>;

pub(crate) fn add_term(map: &mut TermMap, mono: Monomial, c: &Coefficient) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(mono) {
        Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn mul_maps(a: &TermMap, b: &TermMap) -> TermMap {
    let mut out = TermMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            add_term(&mut out, ma.mul(mb), &(ca * cb));
        }
    }
    out
}

/// Which Wirtinger derivative to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wirtinger {
    /// `∂/∂z_i`
    Holo,
    /// `∂/∂z̄_i`
    Antiholo,
}

/// A borrowed view of one term `c · z^α · z̄^β`.
#[derive(Clone, Copy, Debug)]
pub struct Term<'a> {
    pub alpha: &'a [u32],
    pub beta: &'a [u32],
    pub coeff: &'a Coefficient,
}

/// An exact polynomial in `z_1..z_k, z̄_1..z̄_k` with Gaussian-rational
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MixedPoly {
    num_vars: usize,
    terms: TermMap,
}

impl MixedPoly {
    pub fn zero(num_vars: usize) -> Self {
        MixedPoly {
            num_vars,
            terms: TermMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Coefficient) -> Self {
        let mut terms = TermMap::new();
        add_term(&mut terms, Monomial::one(2 * num_vars), &c);
        MixedPoly { num_vars, terms }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, Coefficient::one())
    }

    /// The variable `z_{index+1}` (indices are 0-based).
    pub fn var(num_vars: usize, index: usize) -> Result<Self> {
        Self::unit(num_vars, index, Wirtinger::Holo)
    }

    /// The conjugate variable `z̄_{index+1}`.
    pub fn conj_var(num_vars: usize, index: usize) -> Result<Self> {
        Self::unit(num_vars, index, Wirtinger::Antiholo)
    }

    fn unit(num_vars: usize, index: usize, side: Wirtinger) -> Result<Self> {
        if index >= num_vars {
            return Err(Error::IndexOutOfRange { index, num_vars });
        }
        let mut exps = vec![0; 2 * num_vars];
        let slot = match side {
            Wirtinger::Holo => index,
            Wirtinger::Antiholo => num_vars + index,
        };
        exps[slot] = 1;
        Ok(Self::from_map(num_vars, [(Monomial::new(exps), Coefficient::one())].into()))
    }

    /// Single term `c · z^α · z̄^β`.
    pub fn monomial(alpha: &[u32], beta: &[u32], c: Coefficient) -> Result<Self> {
        Self::from_terms(alpha.len(), [(alpha.to_vec(), beta.to_vec(), c)])
    }

    /// Builds a polynomial from `(α, β, c)` triples, summing duplicates.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Vec<u32>, Coefficient)>,
    {
        let mut map = TermMap::new();
        for (alpha, beta, c) in terms {
            for v in [&alpha, &beta] {
                if v.len() != num_vars {
                    return Err(Error::LengthMismatch {
                        expected: num_vars,
                        got: v.len(),
                    });
                }
            }
            let mut exps = alpha;
            exps.extend(beta);
            add_term(&mut map, Monomial::new(exps), &c);
        }
        Ok(MixedPoly {
            num_vars,
            terms: map,
        })
    }

    pub(crate) fn from_map(num_vars: usize, terms: TermMap) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        debug_assert!(terms.keys().all(|m| m.exponents().len() == 2 * num_vars));
        MixedPoly { num_vars, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = Term<'_>> + '_ {
        let k = self.num_vars;
        self.terms.iter().rev().map(move |(m, c)| {
            let (alpha, beta) = m.exponents().split_at(k);
            Term {
                alpha,
                beta,
                coeff: c,
            }
        })
    }

    pub fn coefficient(&self, alpha: &[u32], beta: &[u32]) -> Coefficient {
        let mut exps = alpha.to_vec();
        exps.extend_from_slice(beta);
        self.terms
            .get(&Monomial::new(exps))
            .cloned()
            .unwrap_or_default()
    }

    /// The leading term under the canonical order.
    pub fn leading_term(&self) -> Option<Term<'_>> {
        self.terms().next()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VarCountMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c);
        }
        Ok(MixedPoly::from_map(self.num_vars, terms))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), &-c);
        }
        Ok(MixedPoly::from_map(self.num_vars, terms))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(MixedPoly::from_map(
            self.num_vars,
            mul_maps(&self.terms, &other.terms),
        ))
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return MixedPoly::zero(self.num_vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v * c))
            .collect();
        MixedPoly::from_map(self.num_vars, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MixedPoly::one(self.num_vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Swaps `α ↔ β` in every term and conjugates the coefficients.
    pub fn conjugate(&self) -> Self {
        let k = self.num_vars;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let (a, b) = m.exponents().split_at(k);
                let mut exps = b.to_vec();
                exps.extend_from_slice(a);
                (Monomial::new(exps), c.conj())
            })
            .collect();
        MixedPoly::from_map(k, terms)
    }

    /// `c_{αβ} = conj(c_{βα})` for every pair, i.e. the polynomial is fixed
    /// by [`conjugate`](Self::conjugate).
    pub fn is_real_valued(&self) -> bool {
        self.conjugate() == *self
    }

    /// `conjugate(P) = −P`; the zero polynomial counts as both.
    pub fn is_imaginary_valued(&self) -> bool {
        self.conjugate() == -self
    }

    /// Splits into parts homogeneous of degree `j` in `z` and `k` in `z̄`.
    pub fn bidegree_split(&self) -> BTreeMap<(u32, u32), MixedPoly> {
        let k = self.num_vars;
        let mut parts: BTreeMap<(u32, u32), TermMap> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (a, b) = m.exponents().split_at(k);
            let key = (a.iter().sum(), b.iter().sum());
            parts.entry(key).or_default().insert(m.clone(), c.clone());
        }
        parts
            .into_iter()
            .map(|(key, t)| (key, MixedPoly::from_map(k, t)))
            .collect()
    }

    /// `Some((j, k))` when every term has `z`-degree `j` and `z̄`-degree `k`.
    /// The zero polynomial has no bidegree.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let parts = self.bidegree_split();
        if parts.len() == 1 {
            parts.keys().next().copied()
        } else {
            None
        }
    }

    pub fn is_bihomogeneous(&self) -> bool {
        matches!(self.bidegree(), Some((j, k)) if j == k)
    }

    /// Total degree in all variables; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in the holomorphic variables; `None` for the zero polynomial.
    pub fn z_degree(&self) -> Option<u32> {
        self.terms().map(|t| t.alpha.iter().sum()).max()
    }

    /// Degree in the conjugate variables; `None` for the zero polynomial.
    pub fn zbar_degree(&self) -> Option<u32> {
        self.terms().map(|t| t.beta.iter().sum()).max()
    }

    pub fn is_holomorphic(&self) -> bool {
        self.terms().all(|t| t.beta.iter().all(|&e| e == 0))
    }

    /// Formal Wirtinger derivative in `z_{index+1}` or `z̄_{index+1}`.
    pub fn partial_derivative(&self, index: usize, kind: Wirtinger) -> Result<Self> {
        if index >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index,
                num_vars: self.num_vars,
            });
        }
        let slot = match kind {
            Wirtinger::Holo => index,
            Wirtinger::Antiholo => self.num_vars + index,
        };
        let mut terms = TermMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[slot];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[slot] -= 1;
            add_term(&mut terms, Monomial::new(exps), &(c * &Coefficient::from_int(e as i64)));
        }
        Ok(MixedPoly::from_map(self.num_vars, terms))
    }

    /// Exact value at `point`; conjugate slots receive the exact conjugates.
    pub fn evaluate(&self, point: &[Coefficient]) -> Result<Coefficient> {
        let conj: Vec<Coefficient> = point.iter().map(Coefficient::conj).collect();
        self.evaluate_split(point, &conj)
    }

    /// Value with independent assignments for the `z` and `z̄` slots.
    pub fn evaluate_split(&self, z: &[Coefficient], zbar: &[Coefficient]) -> Result<Coefficient> {
        for v in [z, zbar] {
            if v.len() != self.num_vars {
                return Err(Error::LengthMismatch {
                    expected: self.num_vars,
                    got: v.len(),
                });
            }
        }
        let values: Vec<&Coefficient> = z.iter().chain(zbar).collect();
        let mut power_cache: BTreeMap<(usize, u32), Coefficient> = BTreeMap::new();
        let mut acc = Coefficient::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (slot, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = power_cache
                    .entry((slot, e))
                    .or_insert_with(|| values[slot].pow(e));
                v = &v * p;
            }
            acc += &v;
        }
        Ok(acc)
    }

    /// Double-precision value; conjugate slots get `conj(point)`.
    pub fn evaluate_f64(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.num_vars, "point length mismatch");
        let mut acc = Complex64::new(0.0, 0.0);
        for t in self.terms() {
            let mut v = t.coeff.to_complex64();
            for (i, (&a, &b)) in t.alpha.iter().zip(t.beta).enumerate() {
                if a > 0 {
                    v *= point[i].powu(a);
                }
                if b > 0 {
                    v *= point[i].conj().powu(b);
                }
            }
            acc += v;
        }
        acc
    }

    /// Replaces `z̄_i` by an independent variable `w_i`.
    pub fn complexify(&self) -> ComplexifiedPoly {
        ComplexifiedPoly::from_map(self.num_vars, self.terms.clone())
    }

    /// Inserts a new variable at position `index`, shifting later ones up.
    pub fn insert_variable(&self, index: usize) -> Result<Self> {
        let k = self.num_vars;
        if index > k {
            return Err(Error::IndexOutOfRange {
                index,
                num_vars: k + 1,
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let (a, b) = m.exponents().split_at(k);
                let mut exps = Vec::with_capacity(2 * k + 2);
                exps.extend_from_slice(&a[..index]);
                exps.push(0);
                exps.extend_from_slice(&a[index..]);
                exps.extend_from_slice(&b[..index]);
                exps.push(0);
                exps.extend_from_slice(&b[index..]);
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Ok(MixedPoly::from_map(k + 1, terms))
    }

    /// Rewrites every exponent pair through `f`, summing collisions.
    pub(crate) fn map_monomials<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&[u32], &[u32]) -> (Vec<u32>, Vec<u32>),
    {
        let k = self.num_vars;
        let mut terms = TermMap::new();
        for (m, c) in &self.terms {
            let (a, b) = m.exponents().split_at(k);
            let (mut na, nb) = f(a, b);
            na.extend(nb);
            add_term(&mut terms, Monomial::new(na), c);
        }
        MixedPoly::from_map(k, terms)
    }
}

impl fmt::Debug for MixedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::io::format(self))
    }
}

impl fmt::Display for MixedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::format(self))
    }
}

// Operator forms panic on a variable-count mismatch; use `try_*` to get an
// error instead.
impl<'a> Add<&'a MixedPoly> for &'a MixedPoly {
    type Output = MixedPoly;
    fn add(self, rhs: &MixedPoly) -> MixedPoly {
        self.try_add(rhs).expect("mismatched variable counts")
    }
}

impl<'a> Sub<&'a MixedPoly> for &'a MixedPoly {
    type Output = MixedPoly;
    fn sub(self, rhs: &MixedPoly) -> MixedPoly {
        self.try_sub(rhs).expect("mismatched variable counts")
    }
}

impl<'a> Mul<&'a MixedPoly> for &'a MixedPoly {
    type Output = MixedPoly;
    fn mul(self, rhs: &MixedPoly) -> MixedPoly {
        self.try_mul(rhs).expect("mismatched variable counts")
    }
}

impl Add for MixedPoly {
    type Output = MixedPoly;
    fn add(self, rhs: MixedPoly) -> MixedPoly {
        &self + &rhs
    }
}

impl Sub for MixedPoly {
    type Output = MixedPoly;
    fn sub(self, rhs: MixedPoly) -> MixedPoly {
        &self - &rhs
    }
}

impl Mul for MixedPoly {
    type Output = MixedPoly;
    fn mul(self, rhs: MixedPoly) -> MixedPoly {
        &self * &rhs
    }
}

impl Neg for &MixedPoly {
    type Output = MixedPoly;
    fn neg(self) -> MixedPoly {
        self.scale(&Coefficient::from_int(-1))
    }
}

impl Neg for MixedPoly {
    type Output = MixedPoly;
    fn neg(self) -> MixedPoly {
        -&self
    }
}

/// A [`MixedPoly`] without conjugate variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HoloPoly(MixedPoly);

impl HoloPoly {
    pub fn new(p: MixedPoly) -> Result<Self> {
        if p.is_holomorphic() {
            Ok(HoloPoly(p))
        } else {
            Err(Error::NotHolomorphic)
        }
    }

    /// `Σ c_α z^α` from exponent/coefficient pairs.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Coefficient)>,
    {
        let p = MixedPoly::from_terms(
            num_vars,
            terms
                .into_iter()
                .map(|(a, c)| (a, vec![0; num_vars], c)),
        )?;
        Ok(HoloPoly(p))
    }

    pub fn as_mixed(&self) -> &MixedPoly {
        &self.0
    }

    pub fn into_mixed(self) -> MixedPoly {
        self.0
    }

    /// `|p|² = p · p̄`.
    pub fn norm_squared(&self) -> MixedPoly {
        &self.0 * &self.0.conjugate()
    }
}

impl std::ops::Deref for HoloPoly {
    type Target = MixedPoly;
    fn deref(&self) -> &MixedPoly {
        &self.0
    }
}

impl fmt::Display for HoloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: usize, i: usize) -> MixedPoly {
        MixedPoly::var(k, i).unwrap()
    }
    fn zb(k: usize, i: usize) -> MixedPoly {
        MixedPoly::conj_var(k, i).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = &z(2, 0) * &zb(2, 1);
        assert!((&p + &-&p).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let a = &z(1, 0) + &zb(1, 0);
        let b = &z(1, 0) - &zb(1, 0);
        let expect = &z(1, 0).pow(2) - &zb(1, 0).pow(2);
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn scale_by_gaussian_rational() {
        let p = &z(1, 0) * &zb(1, 0);
        let c = Coefficient::new(
            num_rational::BigRational::new(1.into(), 2.into()),
            num_rational::BigRational::new(1.into(), 3.into()),
        );
        let s = p.scale(&c);
        assert_eq!(s.coefficient(&[1], &[1]), c);
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn mismatched_variable_counts() {
        let err = z(1, 0).try_add(&z(2, 0)).unwrap_err();
        assert_eq!(err, Error::VarCountMismatch { left: 1, right: 2 });
        assert!(MixedPoly::var(2, 2).is_err());
    }

    #[test]
    fn conjugate_of_imaginary_term() {
        let p = (&z(2, 0) * &zb(2, 1)).scale(&Coefficient::i());
        let expect = (&z(2, 1) * &zb(2, 0)).scale(&Coefficient::gaussian(0, -1));
        assert_eq!(p.conjugate(), expect);
    }

    #[test]
    fn quadratic_cone_is_fixed_by_conjugation() {
        let half_over_i = Coefficient::i().inv().unwrap().scale(&num_rational::BigRational::new(1.into(), 2.into()));
        let p = (&(&z(2, 0) * &zb(2, 1)) - &(&zb(2, 0) * &z(2, 1))).scale(&half_over_i);
        assert_eq!(p.conjugate(), p);
        assert!(p.is_real_valued());
    }

    #[test]
    fn imaginary_valued_commutator() {
        let p = &(&z(2, 0) * &zb(2, 1)) - &(&zb(2, 0) * &z(2, 1));
        assert!(!p.is_real_valued());
        assert!(p.is_imaginary_valued());
        let q = &(&z(2, 0) * &zb(2, 0)) - &(&z(2, 1) * &zb(2, 1));
        assert!(q.is_real_valued());
    }

    #[test]
    fn bidegree_split_simple() {
        let p = &(&z(2, 0) * &zb(2, 1)) + &z(2, 0).pow(2);
        let parts = p.bidegree_split();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&(1, 1)], &z(2, 0) * &zb(2, 1));
        assert_eq!(parts[&(2, 0)], z(2, 0).pow(2));
    }

    #[test]
    fn zero_polynomial_has_undefined_degrees() {
        let p = MixedPoly::zero(3);
        assert_eq!(p.total_degree(), None);
        assert_eq!(p.z_degree(), None);
        assert_eq!(p.zbar_degree(), None);
        assert_eq!(p.bidegree(), None);
        assert!(!p.is_bihomogeneous());
        assert_eq!(MixedPoly::one(3).total_degree(), Some(0));
    }

    #[test]
    fn wirtinger_derivatives() {
        let p = &z(1, 0).pow(2) * &zb(1, 0);
        let d = p.partial_derivative(0, Wirtinger::Holo).unwrap();
        assert_eq!(d, (&z(1, 0) * &zb(1, 0)).scale(&2.into()));
        let q = z(1, 0).pow(2);
        assert!(q.partial_derivative(0, Wirtinger::Antiholo).unwrap().is_zero());
        let r = &(&z(2, 0) * &zb(2, 1)) - &(&zb(2, 0) * &z(2, 1));
        let rr = r
            .partial_derivative(0, Wirtinger::Holo)
            .unwrap()
            .partial_derivative(1, Wirtinger::Antiholo)
            .unwrap();
        assert_eq!(rr, MixedPoly::one(2));
        assert!(r.partial_derivative(2, Wirtinger::Holo).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let p = &z(1, 0) * &zb(1, 0);
        assert_eq!(p.evaluate(&[Coefficient::gaussian(1, 1)]).unwrap(), 2.into());
        let q = &(&z(2, 0) * &zb(2, 1)) - &(&zb(2, 0) * &z(2, 1));
        let v = q
            .evaluate(&[Coefficient::one(), Coefficient::i()])
            .unwrap();
        assert_eq!(v, Coefficient::gaussian(0, -2));
        assert!(q
            .evaluate(&[Coefficient::zero(), Coefficient::zero()])
            .unwrap()
            .is_zero());
        assert!(q.evaluate(&[Coefficient::one()]).is_err());
    }

    #[test]
    fn insert_variable_shifts_exponents() {
        let p = &z(2, 0) * &zb(2, 1);
        let q = p.insert_variable(1).unwrap();
        assert_eq!(q.num_vars(), 3);
        assert_eq!(q, &z(3, 0) * &zb(3, 2));
    }

    #[test]
    fn holo_poly_rejects_conjugates() {
        assert!(HoloPoly::new(zb(1, 0)).is_err());
        let p = HoloPoly::new(z(1, 0)).unwrap();
        assert_eq!(p.norm_squared(), &z(1, 0) * &zb(1, 0));
    }
}
