//! Floating-point sampling of the smooth part of `{ρ = 0}`.
//!
//! This is the only place in the crate that uses floating point. Points are
//! located by bisection along random segments of the sampling box whose
//! endpoints have opposite signs of `ρ`; everything is driven by a seeded
//! ChaCha generator so the output is a pure function of the inputs.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::poly::{MixedPoly, Wirtinger};

/// Numerical thresholds for sampling and refutation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    /// Accept a point when `|ρ| ≤ surface_residual · (1 + scale)`.
    pub surface_residual: f64,
    /// Discard points with `|∇ρ|` at or below this.
    pub smoothness: f64,
    /// Refute when a normalized minor reaches this.
    pub refutation: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            surface_residual: 1e-12,
            smoothness: 1e-8,
            refutation: 1e-6,
        }
    }
}

/// A point on the smooth part of the sampled hypersurface.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePoint {
    pub coordinates: Vec<Complex64>,
    /// `|ρ|` at the point.
    pub residual: f64,
    /// Euclidean norm of the real gradient, `2·|∂ρ/∂z|`.
    pub gradient_norm: f64,
    /// `Σ |c_{αβ}| |z^α| |z̄^β|`, the magnitude rounding errors scale with.
    pub scale: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sampling {
    pub points: Vec<SamplePoint>,
    pub segments_tried: usize,
    pub sign_changes: usize,
    /// Set when no point was found.
    pub diagnostic: Option<String>,
}

/// A polynomial with double-precision coefficients for fast evaluation.
#[derive(Clone, Debug)]
pub(crate) struct FloatPoly {
    terms: Vec<(Complex64, Vec<u32>, Vec<u32>)>,
}

impl FloatPoly {
    pub(crate) fn new(p: &MixedPoly) -> Self {
        FloatPoly {
            terms: p
                .terms()
                .map(|t| (t.coeff.to_complex64(), t.alpha.to_vec(), t.beta.to_vec()))
                .collect(),
        }
    }

    fn term_values<'a>(&'a self, z: &'a [Complex64]) -> impl Iterator<Item = Complex64> + 'a {
        self.terms.iter().map(move |(c, a, b)| {
            let mut v = *c;
            for (i, (&ea, &eb)) in a.iter().zip(b).enumerate() {
                if ea > 0 {
                    v *= z[i].powu(ea);
                }
                if eb > 0 {
                    v *= z[i].conj().powu(eb);
                }
            }
            v
        })
    }

    pub(crate) fn eval(&self, z: &[Complex64]) -> Complex64 {
        self.term_values(z).sum()
    }

    pub(crate) fn scale(&self, z: &[Complex64]) -> f64 {
        self.term_values(z).map(|v| v.norm()).sum()
    }
}

/// `ρ` together with its holomorphic gradient, compiled for evaluation.
pub(crate) struct SurfaceEvaluator {
    rho: FloatPoly,
    gradient: Vec<FloatPoly>,
}

impl SurfaceEvaluator {
    pub(crate) fn new(rho: &MixedPoly) -> Self {
        let gradient = (0..rho.num_vars())
            .map(|i| FloatPoly::new(&rho.partial_derivative(i, Wirtinger::Holo).unwrap()))
            .collect();
        SurfaceEvaluator {
            rho: FloatPoly::new(rho),
            gradient,
        }
    }

    fn value(&self, z: &[Complex64]) -> f64 {
        self.rho.eval(z).re
    }

    pub(crate) fn gradient_norm(&self, z: &[Complex64]) -> f64 {
        2.0 * self
            .gradient
            .iter()
            .map(|g| g.eval(z).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

fn to_complex(real: &[f64]) -> Vec<Complex64> {
    real.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect()
}

/// Draws segments in `[lo, hi]^{2k}` until `count` smooth surface points are
/// found or `64·count + 256` segments have been tried.
pub fn sample_hypersurface(
    rho: &MixedPoly,
    bounds: (f64, f64),
    count: usize,
    seed: u64,
    thresholds: &Thresholds,
) -> Sampling {
    let eval = SurfaceEvaluator::new(rho);
    let dim = 2 * rho.num_vars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_segments = 64 * count + 256;
    let (lo, hi) = if bounds.0 <= bounds.1 { bounds } else { (bounds.1, bounds.0) };

    let mut points = Vec::new();
    let mut segments_tried = 0;
    let mut sign_changes = 0;
    while points.len() < count && segments_tried < max_segments {
        segments_tried += 1;
        let a: Vec<f64> = (0..dim).map(|_| rng.gen_range(lo..=hi)).collect();
        let b: Vec<f64> = (0..dim).map(|_| rng.gen_range(lo..=hi)).collect();
        let fa = eval.value(&to_complex(&a));
        let fb = eval.value(&to_complex(&b));
        if !(fa.is_finite() && fb.is_finite()) || (fa > 0.0) == (fb > 0.0) && fa != 0.0 && fb != 0.0 {
            continue;
        }
        sign_changes += 1;
        let x = bisect(&eval, a, b, fa);
        let z = to_complex(&x);
        let value = eval.rho.eval(&z);
        let residual = value.norm();
        let scale = eval.rho.scale(&z);
        if residual > thresholds.surface_residual * (1.0 + scale) {
            continue;
        }
        let gradient_norm = eval.gradient_norm(&z);
        if gradient_norm <= thresholds.smoothness {
            continue;
        }
        points.push(SamplePoint {
            coordinates: z,
            residual,
            gradient_norm,
            scale,
        });
    }
    let diagnostic = if !points.is_empty() {
        None
    } else if sign_changes == 0 {
        Some("no sign change of rho found in the sampling box; rho may be sign-definite there".into())
    } else {
        Some("sign changes found, but no bisected point passed the residual and smoothness tests".into())
    };
    Sampling {
        points,
        segments_tried,
        sign_changes,
        diagnostic,
    }
}

/// Bisects until the midpoint stops moving, returning whichever endpoint has
/// the smaller `|ρ|`.
fn bisect(eval: &SurfaceEvaluator, a: Vec<f64>, b: Vec<f64>, fa: f64) -> Vec<f64> {
    let (mut lo, mut hi) = (a, b);
    let mut f_lo = fa;
    if f_lo == 0.0 {
        return lo;
    }
    let mut f_hi = eval.value(&to_complex(&hi));
    for _ in 0..200 {
        let mid: Vec<f64> = lo.iter().zip(&hi).map(|(p, q)| 0.5 * (p + q)).collect();
        if mid == lo || mid == hi {
            break;
        }
        let fm = eval.value(&to_complex(&mid));
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
            f_hi = fm;
        }
    }
    if f_lo.abs() <= f_hi.abs() {
        lo
    } else {
        hi
    }
}
