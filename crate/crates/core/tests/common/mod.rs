//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use leviflat::hermitian::HermitianForm;
use leviflat::poly::degree_basis;
use leviflat::{Coefficient, MixedPoly, Substitution};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(r: &mut impl Rng) -> BigRational {
    BigRational::new(r.gen_range(-4i64..=4).into(), r.gen_range(1i64..=3).into())
}

pub fn small_coeff(r: &mut impl Rng) -> Coefficient {
    let re = small_rational(r);
    let im = if r.gen_bool(0.5) { small_rational(r) } else { BigRational::zero() };
    Coefficient::new(re, im)
}

pub fn nonzero_coeff(r: &mut impl Rng) -> Coefficient {
    loop {
        let c = small_coeff(r);
        if !c.is_zero() {
            return c;
        }
    }
}

fn random_exps(r: &mut impl Rng, k: usize, degree: u32) -> Vec<u32> {
    let basis = degree_basis(k, degree);
    basis[r.gen_range(0..basis.len())].clone()
}

/// Random nonzero holomorphic polynomial of total degree at most `max_deg`.
pub fn random_holo(r: &mut impl Rng, k: usize, max_deg: u32, max_terms: usize) -> MixedPoly {
    loop {
        let n = r.gen_range(1..=max_terms);
        let terms: Vec<_> = (0..n)
            .map(|_| {
                let d = r.gen_range(0..=max_deg);
                (random_exps(r, k, d), vec![0; k], nonzero_coeff(r))
            })
            .collect();
        let p = MixedPoly::from_terms(k, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random nonzero homogeneous holomorphic polynomial of degree `d`.
pub fn random_homogeneous(r: &mut impl Rng, k: usize, d: u32, max_terms: usize) -> MixedPoly {
    loop {
        let n = r.gen_range(1..=max_terms);
        let terms: Vec<_> = (0..n)
            .map(|_| (random_exps(r, k, d), vec![0; k], nonzero_coeff(r)))
            .collect();
        let p = MixedPoly::from_terms(k, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random nonzero real polynomial of bidegree `(d, d)`: `Q + conj(Q)`.
pub fn random_real_bihom(r: &mut impl Rng, k: usize, d: u32, max_terms: usize) -> MixedPoly {
    loop {
        let n = r.gen_range(1..=max_terms);
        let terms: Vec<_> = (0..n)
            .map(|_| (random_exps(r, k, d), random_exps(r, k, d), nonzero_coeff(r)))
            .collect();
        let q = MixedPoly::from_terms(k, terms).unwrap();
        let p = &q + &q.conjugate();
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_point(r: &mut impl Rng, k: usize) -> Vec<Coefficient> {
    (0..k).map(|_| small_coeff(r)).collect()
}

/// Determinant by plain Gaussian elimination.
pub fn det(m: &[Vec<Coefficient>]) -> Coefficient {
    let mut a = m.to_vec();
    let n = a.len();
    let mut d = Coefficient::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Coefficient::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d = &d * &a[c][c];
        let inv = a[c][c].inv().unwrap();
        for i in c + 1..n {
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= &t;
            }
        }
    }
    d
}

/// Rank by plain Gaussian elimination, independent of the library's.
pub fn rank(m: &[Vec<Coefficient>]) -> usize {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].inv().unwrap();
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] * &inv;
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= &t;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn random_invertible(r: &mut impl Rng, k: usize) -> Vec<Vec<Coefficient>> {
    loop {
        let m: Vec<Vec<Coefficient>> = (0..k).map(|_| (0..k).map(|_| small_coeff(r)).collect()).collect();
        if !det(&m).is_zero() {
            return m;
        }
    }
}

/// `P(Lz)`.
pub fn linear_substitute(p: &MixedPoly, l: &[Vec<Coefficient>]) -> MixedPoly {
    let k = p.num_vars();
    let mut sub = Substitution::new(k);
    for (i, row) in l.iter().enumerate() {
        let image = row
            .iter()
            .enumerate()
            .fold(MixedPoly::zero(k), |acc, (j, c)| &acc + &MixedPoly::var(k, j).unwrap().scale(c));
        sub.set_conjugate_pair(i, image).unwrap();
    }
    p.substitute(&sub).unwrap()
}

/// Term-by-term evaluation with `z̄` computed from `z`, written without the
/// library's evaluator.
pub fn eval_naive(p: &MixedPoly, z: &[Coefficient]) -> Coefficient {
    let mut total = Coefficient::zero();
    for t in p.terms() {
        let mut v = t.coeff.clone();
        for (i, (&a, &b)) in t.alpha.iter().zip(t.beta).enumerate() {
            for _ in 0..a {
                v = &v * &z[i];
            }
            for _ in 0..b {
                v = &v * &z[i].conj();
            }
        }
        total += &v;
    }
    total
}

/// Inertia `(n₊, n₋)` from floating eigenvalues of the Hermitian matrix.
pub fn float_inertia(form: &HermitianForm) -> (usize, usize) {
    let n = form.dim();
    if n == 0 {
        return (0, 0);
    }
    let m = DMatrix::from_fn(n, n, |i, j| {
        let c: Complex64 = form.matrix()[i][j].to_complex64();
        Complex::new(c.re, c.im)
    });
    let scale = m.iter().map(|c| c.norm()).fold(1.0, f64::max);
    let eig = m.symmetric_eigen().eigenvalues;
    let tol = 1e-9 * scale * n as f64;
    (
        eig.iter().filter(|&&e| e > tol).count(),
        eig.iter().filter(|&&e| e < -tol).count(),
    )
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_one(r: &BigRational) -> bool {
    r.is_one()
}
