use serde::Serialize;

use super::quadratic_cone;
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::geometry::{bihomogenize, ProjectiveContext};
use crate::io::{format, parse, to_json, PolyDocument};
use crate::leviflat::Verdict;
use crate::poly::MixedPoly;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Stated in the mathematical literature the example is taken from.
    Reference,
    /// Derived by hand or by an independent computation, and checked by the
    /// test suite.
    Computed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Expected<T> {
    pub value: T,
    pub provenance: Provenance,
}

fn reference<T>(value: T) -> Expected<T> {
    Expected {
        value,
        provenance: Provenance::Reference,
    }
}

fn computed<T>(value: T) -> Expected<T> {
    Expected {
        value,
        provenance: Provenance::Computed,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpectedValues {
    pub rank: Expected<usize>,
    /// `(positives, negatives)`.
    pub signature: Expected<(usize, usize)>,
    pub verdict: Expected<Verdict>,
    #[serde(serialize_with = "serialize_points")]
    pub degenerate_points: Vec<Vec<Coefficient>>,
    #[serde(serialize_with = "serialize_points")]
    pub nondegenerate_points: Vec<Vec<Coefficient>>,
    pub points_provenance: Provenance,
}

fn serialize_points<S: serde::Serializer>(
    pts: &[Vec<Coefficient>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(pts.iter().map(|p| p.iter().map(|c| c.to_string()).collect::<Vec<_>>()))
}

/// A named polynomial with metadata the rest of the crate should reproduce.
#[derive(Clone, Debug, PartialEq)]
pub struct ExampleRecord {
    pub name: &'static str,
    pub description: &'static str,
    /// The bihomogeneous polynomial analyzed by the other modules.
    pub polynomial: MixedPoly,
    /// The affine polynomial it was bihomogenized from, if any.
    pub affine: Option<MixedPoly>,
    pub expected: ExpectedValues,
    pub source: &'static str,
}

#[derive(Serialize)]
struct RecordJson<'a> {
    name: &'a str,
    description: &'a str,
    text: String,
    polynomial: PolyDocument,
    affine: Option<String>,
    expected: &'a ExpectedValues,
    source: &'a str,
}

impl ExampleRecord {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(RecordJson {
            name: self.name,
            description: self.description,
            text: format(&self.polynomial),
            polynomial: to_json(&self.polynomial),
            affine: self.affine.as_ref().map(format),
            expected: &self.expected,
            source: self.source,
        })
        .expect("record serializes")
    }
}

const NAMES: [&str; 5] = [
    "cartan-umbrella",
    "cusp-curve",
    "nodegen-quartic",
    "quadratic-cone",
    "brunella",
];

pub fn example_names() -> &'static [&'static str] {
    &NAMES
}

fn pt(coords: &[i64]) -> Vec<Coefficient> {
    coords.iter().map(|&c| Coefficient::from_int(c)).collect()
}

fn lifted(affine: &str, n: usize) -> (MixedPoly, MixedPoly) {
    let a = parse(affine, n).expect("registry polynomial parses");
    let p = bihomogenize(&a, &ProjectiveContext::appended(n), false).expect("registry polynomial lifts");
    (p, a)
}

/// Looks up a registry entry by its stable name.
pub fn example(name: &str) -> Result<ExampleRecord> {
    let rec = match name {
        "cartan-umbrella" => {
            // −8(y² + x² − x³) with z = x + iy.
            let (p, a) = lifted("~z1^3 + 3*z1*~z1^2 + 3*z1^2*~z1 - 8*z1*~z1 + z1^3", 1);
            ExampleRecord {
                name: "cartan-umbrella",
                description: "Cone over the real cubic y² + x² − x³ = 0, whose origin is an isolated point of the curve.",
                polynomial: p,
                affine: Some(a),
                expected: ExpectedValues {
                    rank: computed(4),
                    signature: computed((2, 2)),
                    verdict: reference(Verdict::Certified),
                    degenerate_points: vec![pt(&[0, 0])],
                    nondegenerate_points: vec![pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])],
                    points_provenance: Provenance::Computed,
                },
                source: "Classical Cartan umbrella, written in z and z̄ and bihomogenized in w = z2.",
            }
        }
        "cusp-curve" => {
            // 8(x³ − y²) with z = x + iy.
            let (p, a) = lifted("z1^3 + 3*z1^2*~z1 + 2*z1^2 + 3*z1*~z1^2 - 4*z1*~z1 + ~z1^3 + 2*~z1^2", 1);
            ExampleRecord {
                name: "cusp-curve",
                description: "Cone over the cusp x³ = y², a Levi-flat cone of the maximal rank for degree 3.",
                polynomial: p,
                affine: Some(a),
                expected: ExpectedValues {
                    rank: reference(4),
                    signature: reference((2, 2)),
                    verdict: reference(Verdict::Certified),
                    degenerate_points: vec![pt(&[0, 0])],
                    nondegenerate_points: vec![pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])],
                    points_provenance: Provenance::Computed,
                },
                source: "Rank 4 with two positive and two negative eigenvalues over the basis (z³, z²w, zw², w³).",
            }
        }
        "nodegen-quartic" => ExampleRecord {
            name: "nodegen-quartic",
            description: "Union of the planes z1 + z2 t + z3 t² = 0 over real t; Levi-flat with no degenerate singularity besides the origin.",
            polynomial: parse(
                "z1^2*~z3^2 - z1*z2*~z2*~z3 + z2^2*~z1*~z3 + z1*z3*~z2^2 \
                 - 2*z1*z3*~z1*~z3 - z2*z3*~z1*~z2 + z3^2*~z1^2",
                3,
            )
            .expect("registry polynomial parses"),
            affine: None,
            expected: ExpectedValues {
                rank: reference(6),
                signature: computed((3, 3)),
                verdict: reference(Verdict::Certified),
                degenerate_points: vec![pt(&[0, 0, 0])],
                nondegenerate_points: vec![pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1]), pt(&[1, 1, 1])],
                points_provenance: Provenance::Reference,
            },
            source: "Real-root condition for z1 + z2 t + z3 t² in t. Published versions carry a plus sign on \
                     z1 z2 z̄2 z̄3 and z2 z3 z̄1 z̄2; that polynomial does not vanish on the planes.",
        },
        "quadratic-cone" => ExampleRecord {
            name: "quadratic-cone",
            description: "The quadratic Levi-flat cone (1/2i)(z1 z̄2 − z̄1 z2) = 0 in ℂ³.",
            polynomial: quadratic_cone(2)?,
            affine: None,
            expected: ExpectedValues {
                rank: reference(2),
                signature: computed((1, 1)),
                verdict: reference(Verdict::Certified),
                degenerate_points: vec![pt(&[0, 0, 0]), pt(&[0, 0, 1]), pt(&[0, 0, 5])],
                nondegenerate_points: vec![pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[1, 1, 1])],
                points_provenance: Provenance::Reference,
            },
            source: "The unique quadratic Levi-flat hypervariety up to automorphism; singular along z1 = z2 = 0.",
        },
        "brunella" => {
            // t² − 4(y² + s)y² with z = x + iy, w = s + it.
            let (p, a) = lifted(
                "-1/4*z2^2 + 1/2*z2*~z2 + 1/2*z2*z1^2 - z2*z1*~z1 + 1/2*z2*~z1^2 - 1/4*~z2^2 \
                 + 1/2*~z2*z1^2 - ~z2*z1*~z1 + 1/2*~z2*~z1^2 - 1/4*z1^4 + z1^3*~z1 \
                 - 3/2*z1^2*~z1^2 + z1*~z1^3 - 1/4*~z1^4",
                2,
            );
            ExampleRecord {
                name: "brunella",
                description: "Brunella's Levi-flat t² = 4(y² + s)y², whose singular stick is totally real.",
                polynomial: p,
                affine: Some(a),
                expected: ExpectedValues {
                    rank: computed(6),
                    signature: computed((3, 3)),
                    verdict: reference(Verdict::Certified),
                    degenerate_points: vec![pt(&[0, 0, 0]), pt(&[0, 1, 0])],
                    nondegenerate_points: vec![pt(&[0, 0, 1]), pt(&[1, 0, 0]), pt(&[1, 1, 1])],
                    points_provenance: Provenance::Computed,
                },
                source: "Brunella's example with z = z1, w = z2, bihomogenized in z3.",
            }
        }
        other => return Err(Error::UnknownExample(other.to_string())),
    };
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for name in example_names() {
            let r = example(name).unwrap();
            assert_eq!(r.name, *name);
            assert!(r.polynomial.is_bihomogeneous());
            assert!(r.polynomial.is_real_valued());
        }
        assert!(matches!(example("sphere"), Err(Error::UnknownExample(_))));
    }

    #[test]
    fn record_json() {
        let v = example("cusp-curve").unwrap().to_json_value();
        assert_eq!(v["expected"]["rank"]["value"], 4);
        assert_eq!(v["expected"]["rank"]["provenance"], "reference");
        assert_eq!(v["expected"]["signature"]["value"], serde_json::json!([2, 2]));
        assert_eq!(v["expected"]["verdict"]["value"], "certified");
        assert_eq!(v["expected"]["degenerate_points"], serde_json::json!([["0", "0"]]));
        assert_eq!(v["polynomial"]["num_vars"], 2);
    }
}
