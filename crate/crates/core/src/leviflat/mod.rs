//! Levi-flatness via the bordered complex Hessian.
//!
//! A real hypersurface `{ρ = 0}` is Levi-flat on its smooth part exactly when
//! the matrix
//!
//! ```text
//! | ρ        ρ_{z_1}        ...  ρ_{z_k}        |
//! | ρ_{z̄_1}  ρ_{z_1 z̄_1}    ...  ρ_{z_k z̄_1}    |
//! | ...                                         |
//! | ρ_{z̄_k}  ρ_{z_1 z̄_k}    ...  ρ_{z_k z̄_k}    |
//! ```
//!
//! has rank at most two along `ρ = 0`, i.e. all of its 3×3 minors vanish
//! there. [`certify_leviflat`] proves this by exact divisibility of every
//! minor by `ρ` (after complexification), and otherwise looks for a
//! floating-point counterexample with [`sample_hypersurface`].

mod leaf;
mod sampling;

pub use leaf::{check_leaf_family, LeafFamily};
pub use sampling::{sample_hypersurface, SamplePoint, Sampling, Thresholds};

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::poly::{divide_exact, MixedPoly, Wirtinger};
use sampling::{FloatPoly, SurfaceEvaluator};

/// The `(k+1)×(k+1)` bordered complex Hessian of a real polynomial.
///
/// Entry `(r, c)` for `r, c ≥ 1` is `∂²ρ/∂z̄_r∂z_c`, so the matrix is
/// Hermitian at every point.
#[derive(Clone, Debug, PartialEq)]
pub struct BorderedHessian {
    entries: Vec<Vec<MixedPoly>>,
}

impl BorderedHessian {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &MixedPoly {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<MixedPoly>] {
        &self.entries
    }

    /// The determinant of the submatrix on the given rows and columns.
    pub fn minor3(&self, rows: [usize; 3], cols: [usize; 3]) -> MixedPoly {
        let a = |i: usize, j: usize| &self.entries[rows[i]][cols[j]];
        let t0 = a(0, 0) * &(&(a(1, 1) * a(2, 2)) - &(a(1, 2) * a(2, 1)));
        let t1 = a(0, 1) * &(&(a(1, 0) * a(2, 2)) - &(a(1, 2) * a(2, 0)));
        let t2 = a(0, 2) * &(&(a(1, 0) * a(2, 1)) - &(a(1, 1) * a(2, 0)));
        &(&t0 - &t1) + &t2
    }
}

pub fn bordered_hessian(rho: &MixedPoly) -> Result<BorderedHessian> {
    if !rho.is_real_valued() {
        return Err(Error::NotRealValued);
    }
    let k = rho.num_vars();
    let dz: Vec<MixedPoly> = (0..k)
        .map(|i| rho.partial_derivative(i, Wirtinger::Holo))
        .collect::<Result<_>>()?;
    let mut entries = Vec::with_capacity(k + 1);
    let mut top = vec![rho.clone()];
    top.extend(dz.iter().cloned());
    entries.push(top);
    for r in 0..k {
        let mut row = vec![rho.partial_derivative(r, Wirtinger::Antiholo)?];
        for d in &dz {
            row.push(d.partial_derivative(r, Wirtinger::Antiholo)?);
        }
        entries.push(row);
    }
    Ok(BorderedHessian { entries })
}

/// One 3×3 minor with its 0-based row and column indices.
#[derive(Clone, Debug, PartialEq)]
pub struct LeviMinor {
    pub rows: [usize; 3],
    pub cols: [usize; 3],
    pub poly: MixedPoly,
}

fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// All `C(k+1, 3)²` minors, rows-major in lexicographic order of the index
/// triples.
pub fn levi_minors(rho: &MixedPoly) -> Result<Vec<LeviMinor>> {
    if rho.num_vars() < 2 {
        return Err(Error::TooFewVariables {
            required: 2,
            got: rho.num_vars(),
        });
    }
    let h = bordered_hessian(rho)?;
    let t = triples(h.size());
    let mut out = Vec::with_capacity(t.len() * t.len());
    for &rows in &t {
        for &cols in &t {
            out.push(LeviMinor {
                rows,
                cols,
                poly: h.minor3(rows, cols),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Certified,
    Refuted,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "certified",
            Verdict::Refuted => "refuted",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SamplingConfig {
    pub seed: u64,
    pub samples: usize,
    pub bounds: (f64, f64),
    pub thresholds: Thresholds,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            seed: 0,
            samples: 64,
            bounds: (-2.0, 2.0),
            thresholds: Thresholds::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MinorDetail {
    pub rows: [usize; 3],
    pub cols: [usize; 3],
    pub identically_zero: bool,
    pub divisible: bool,
}

fn serialize_point<S: Serializer>(p: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(|c| [c.re, c.im]))
}

/// A sampled point where some minor is numerically nonzero on `ρ ≈ 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    /// Coordinates as `[re, im]` pairs.
    #[serde(serialize_with = "serialize_point")]
    pub point: Vec<Complex64>,
    pub residual: f64,
    /// Normalized minor magnitude `|m| / (1 + max |entry|)³`.
    pub minor_value: f64,
    pub rows: [usize; 3],
    pub cols: [usize; 3],
    pub gradient_norm: f64,
    /// `|ρ|` and normalized `|m|` recomputed in exact arithmetic at the
    /// binary value of the point.
    pub exact_residual: f64,
    pub exact_minor_value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SamplingSummary {
    pub points: usize,
    pub segments_tried: usize,
    pub sign_changes: usize,
    pub max_minor_value: Option<f64>,
    pub diagnostic: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LeviCertificate {
    pub verdict: Verdict,
    pub minors_total: usize,
    pub minors_divisible: usize,
    pub witness: Option<Witness>,
    pub thresholds: Thresholds,
    pub details: Vec<MinorDetail>,
    /// Present when the exact test did not certify.
    pub sampling: Option<SamplingSummary>,
    pub seed: u64,
}

/// Exact certificate first, sampling second.
///
/// `Certified` means every complexified minor is a multiple of the
/// complexified `ρ`. This is sufficient but not necessary: a non-reduced
/// `ρ` (say a square) can be Levi-flat without it, and such inputs come out
/// `Inconclusive` unless sampling refutes them.
pub fn certify_leviflat(rho: &MixedPoly, config: &SamplingConfig) -> Result<LeviCertificate> {
    if rho.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let minors = levi_minors(rho)?;
    let crho = rho.complexify();
    let mut details = Vec::with_capacity(minors.len());
    for m in &minors {
        let identically_zero = m.poly.is_zero();
        let divisible = identically_zero || divide_exact(&m.poly.complexify(), &crho)?.is_some();
        details.push(MinorDetail {
            rows: m.rows,
            cols: m.cols,
            identically_zero,
            divisible,
        });
    }
    let minors_divisible = details.iter().filter(|d| d.divisible).count();
    let mut cert = LeviCertificate {
        verdict: Verdict::Certified,
        minors_total: minors.len(),
        minors_divisible,
        witness: None,
        thresholds: config.thresholds,
        details,
        sampling: None,
        seed: config.seed,
    };
    if minors_divisible == minors.len() {
        return Ok(cert);
    }

    let sampling = sample_hypersurface(
        rho,
        config.bounds,
        config.samples.max(1),
        config.seed,
        &config.thresholds,
    );
    let (witness, max_minor_value) = find_witness(rho, &minors, &sampling.points, &config.thresholds);
    cert.verdict = if witness.is_some() {
        Verdict::Refuted
    } else {
        Verdict::Inconclusive
    };
    cert.witness = witness;
    cert.sampling = Some(SamplingSummary {
        points: sampling.points.len(),
        segments_tried: sampling.segments_tried,
        sign_changes: sampling.sign_changes,
        max_minor_value,
        diagnostic: sampling.diagnostic,
    });
    Ok(cert)
}

fn det3(m: [[Complex64; 3]; 3]) -> Complex64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Numerical minors of the bordered Hessian at each sample point.
pub struct MinorEvaluator {
    entries: Vec<Vec<FloatPoly>>,
    triples: Vec<[usize; 3]>,
}

impl MinorEvaluator {
    pub fn new(rho: &MixedPoly) -> Result<Self> {
        let h = bordered_hessian(rho)?;
        Ok(MinorEvaluator {
            entries: h
                .rows()
                .iter()
                .map(|r| r.iter().map(FloatPoly::new).collect())
                .collect(),
            triples: triples(h.size()),
        })
    }

    /// `(rows, cols, normalized |minor|)` for every minor, plus the
    /// normalization denominator `(1 + max |entry|)³`.
    pub fn normalized_minors(&self, z: &[Complex64]) -> (Vec<([usize; 3], [usize; 3], f64)>, f64) {
        let vals: Vec<Vec<Complex64>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.eval(z)).collect())
            .collect();
        let max_entry = vals.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max);
        let denom = (1.0 + max_entry).powi(3);
        let mut out = Vec::with_capacity(self.triples.len().pow(2));
        for &r in &self.triples {
            for &c in &self.triples {
                let sub = [0, 1, 2].map(|i| [0, 1, 2].map(|j| vals[r[i]][c[j]]));
                out.push((r, c, det3(sub).norm() / denom));
            }
        }
        (out, denom)
    }
}

fn find_witness(
    rho: &MixedPoly,
    minors: &[LeviMinor],
    points: &[SamplePoint],
    t: &Thresholds,
) -> (Option<Witness>, Option<f64>) {
    let Ok(eval) = MinorEvaluator::new(rho) else {
        return (None, None);
    };
    let mut candidates = Vec::new();
    let mut max_value: Option<f64> = None;
    for (pi, p) in points.iter().enumerate() {
        let (vals, denom) = eval.normalized_minors(&p.coordinates);
        for (mi, (_, _, v)) in vals.into_iter().enumerate() {
            max_value = Some(max_value.map_or(v, |m| m.max(v)));
            if v >= t.refutation {
                candidates.push((v, pi, mi, denom));
            }
        }
    }
    // Largest first; ties keep sampling order.
    candidates.sort_by(|a, b| b.0.total_cmp(&a.0));
    let surface = SurfaceEvaluator::new(rho);
    for (v, pi, mi, denom) in candidates.into_iter().take(16) {
        let p = &points[pi];
        let Some(exact_point) = p
            .coordinates
            .iter()
            .map(|&c| Coefficient::from_complex64(c))
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        let exact_residual = match rho.evaluate(&exact_point) {
            Ok(c) => c.to_complex64().norm(),
            Err(_) => continue,
        };
        let exact_minor = match minors[mi].poly.evaluate(&exact_point) {
            Ok(c) => c.to_complex64().norm() / denom,
            Err(_) => continue,
        };
        if exact_residual > t.surface_residual * (1.0 + p.scale) || exact_minor < t.refutation {
            continue;
        }
        return (
            Some(Witness {
                point: p.coordinates.clone(),
                residual: p.residual,
                minor_value: v,
                rows: minors[mi].rows,
                cols: minors[mi].cols,
                gradient_norm: surface.gradient_norm(&p.coordinates),
                exact_residual,
                exact_minor_value: exact_minor,
            }),
            max_value,
        );
    }
    (None, max_value)
}
