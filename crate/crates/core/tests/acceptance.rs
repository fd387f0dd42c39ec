//! Acceptance suite. Prints one `[PASS]`/`[FAIL]` line per criterion and
//! exits nonzero if any fails.
//!
//! Pinned tolerances: surface residual 1e-12, smoothness 1e-8, refutation
//! 1e-6 (the library defaults).

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use leviflat::constructions::{example, example_names, pullback, quadratic_cone, RationalMap, RealCurvePoly};
use leviflat::geometry::{bihomogenize, degenerate_locus_generators, is_algebraic_degenerate, ProjectiveContext};
use leviflat::hermitian::{coefficient_matrix, holomorphic_decomposition, rank_signature, reexpand, Inertia, MatrixOptions};
use leviflat::io::parse;
use leviflat::leviflat::{certify_leviflat, LeafFamily, SamplingConfig, Thresholds, Verdict};
use leviflat::{Coefficient, HoloPoly, MixedPoly};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn p(s: &str, k: usize) -> MixedPoly {
    parse(s, k).unwrap()
}

fn inertia(poly: &MixedPoly) -> Inertia {
    rank_signature(&coefficient_matrix(poly, MatrixOptions::default()).unwrap().form).unwrap()
}

// Displays transcribed from the literature, with z = z1 and w = z2.
const CUSP_AFFINE: &str = "z1^3 + 3*z1^2*~z1 + 2*z1^2 + 3*z1*~z1^2 - 4*z1*~z1 + ~z1^3 + 2*~z1^2";
const CUSP_BIHOM: &str = "z2^3*~z1^3 + 3*z1*z2^2*~z1^2*~z2 + 2*z2^3*~z1^2*~z2 + 3*z1^2*z2*~z1*~z2^2 \
                          - 4*z1*z2^2*~z1*~z2^2 + z1^3*~z2^3 + 2*z1^2*z2*~z2^3";
const UMBRELLA_AFFINE: &str = "~z1^3 + 3*z1*~z1^2 + 3*z1^2*~z1 - 8*z1*~z1 + z1^3";
const UMBRELLA_BIHOM: &str = "z2^3*~z1^3 + 3*z2^2*~z2*z1*~z1^2 + 3*z2*~z2^2*z1^2*~z1 \
                              - 8*z2^2*~z2^2*z1*~z1 + ~z2^3*z1^3";
const PRINTED_QUARTIC: &str = "z1^2*~z3^2 + z1*z2*~z2*~z3 + z2^2*~z1*~z3 + z1*z3*~z2^2 \
                               - 2*z1*z3*~z1*~z3 + z2*z3*~z1*~z2 + z3^2*~z1^2";

// x = (z + z̄)/2 and y = (z − z̄)/(2i).
const X: &str = "((1/2)*(z1 + ~z1))";
const Y: &str = "((-1/2*i)*(z1 - ~z1))";

fn ac1() -> Outcome {
    let cusp = p(&format!("8*({X}^3 - {Y}^2)"), 1);
    ensure!(cusp == p(CUSP_AFFINE, 1), "8(x³ − y²) in z is {cusp}");
    let umbrella = p(&format!("-8*({Y}^2 + {X}^2 - {X}^3)"), 1);
    ensure!(umbrella == p(UMBRELLA_AFFINE, 1), "−8(y² + x² − x³) in z is {umbrella}");
    let ctx = ProjectiveContext::appended(1);
    let got = bihomogenize(&cusp, &ctx, false).unwrap();
    ensure!(got == p(CUSP_BIHOM, 2), "cusp lifted to {got}");
    let got = bihomogenize(&umbrella, &ctx, false).unwrap();
    ensure!(got == p(UMBRELLA_BIHOM, 2), "umbrella lifted to {got}");
    Ok("cusp and umbrella reproduce the printed degree-6 polynomials term for term".into())
}

fn ac2() -> Outcome {
    let cm = coefficient_matrix(&p(CUSP_BIHOM, 2), MatrixOptions::default()).unwrap();
    let basis: Vec<Vec<u32>> = vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]];
    ensure!(cm.form.basis().exponents() == basis.as_slice(), "basis {:?}", cm.form.basis().exponents());
    let printed = [[0, 0, 0, 1], [0, 0, 3, 2], [0, 3, -4, 0], [1, 2, 0, 0]];
    let expected: Vec<Vec<Coefficient>> = printed
        .iter()
        .map(|r| r.iter().map(|&x| Coefficient::from_int(x)).collect())
        .collect();
    ensure!(cm.form.matrix() == expected.as_slice(), "matrix differs from the printed one");
    let i = rank_signature(&cm.form).unwrap();
    ensure!((i.rank, i.positives, i.negatives) == (4, 2, 2), "inertia {:?}", i);
    ensure!(float_inertia(&cm.form) == (2, 2), "eigenvalue oracle disagrees");
    Ok("4×4 matrix matches exactly; (rank, n+, n−) = (4, 2, 2)".into())
}

fn ac3() -> Outcome {
    let cone = quadratic_cone(2).unwrap();
    let i = inertia(&cone);
    ensure!((i.rank, i.positives, i.negatives) == (2, 1, 1), "inertia {:?}", i);
    let cert = certify_leviflat(&cone, &SamplingConfig::default()).unwrap();
    ensure!(cert.verdict == Verdict::Certified, "verdict {}", cert.verdict);
    let gens = degenerate_locus_generators(&cone).unwrap().reduced_generators();
    let expected = [p("z1", 3), p("z2", 3)];
    ensure!(
        gens.len() == 2 && gens.iter().zip(&expected).all(|(g, e)| g.as_mixed() == e),
        "generators {:?}",
        gens
    );
    let origin = vec![Coefficient::zero(); 3];
    ensure!(is_algebraic_degenerate(&cone, &origin).unwrap(), "origin not degenerate");
    Ok("rank 2, signature (1,1), certified, generators span {z1, z2}, origin degenerate".into())
}

fn ac4() -> Outcome {
    let rec = example("nodegen-quartic").unwrap();
    let q = &rec.polynomial;
    let i = inertia(q);
    ensure!(i.rank == 6, "rank {}", i.rank);
    let family = LeafFamily::parse("z1 = -(t*z2 + t^2*z3)", 3).unwrap();
    ensure!(leviflat::leviflat::check_leaf_family(q, &family).unwrap(), "planes are not contained");

    // Pure squares z1², z2², z3² in the span force z = 0.
    let gens = degenerate_locus_generators(q).unwrap().reduced_generators();
    for sq in ["z1^2", "z2^2", "z3^2"] {
        let target = p(sq, 3);
        ensure!(gens.iter().any(|g| g.as_mixed() == &target), "{sq} is not a reduced generator");
    }
    let report = degenerate_locus_generators(q).unwrap();
    let grid: Vec<Coefficient> = [(-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1)]
        .iter()
        .map(|&(n, d)| Coefficient::ratio(n, d))
        .collect();
    let mut checked = 0;
    for a in &grid {
        for b in &grid {
            for c in &grid {
                let pt = vec![a.clone(), b.clone(), c.clone()];
                let origin = pt.iter().all(Coefficient::is_zero);
                ensure!(report.contains(&pt).unwrap() == origin, "grid point {:?}", pt);
                ensure!(is_algebraic_degenerate(q, &pt).unwrap() == origin, "grid point {:?}", pt);
                checked += 1;
            }
        }
    }

    // The printed version differs in two signs and fails the leaf test.
    let printed = p(PRINTED_QUARTIC, 3);
    let printed_leaf = leviflat::leviflat::check_leaf_family(&printed, &family).unwrap();
    ensure!(!printed_leaf && inertia(&printed).rank == 6, "printed quartic behaves unexpectedly");
    Ok(format!(
        "rank 6, planes z1 + z2 t + z3 t² contained, only the origin is degenerate ({checked} grid points)"
    ))
}

fn ac5() -> Outcome {
    let mut count = 0;
    for name in example_names() {
        let poly = example(name).unwrap().polynomial;
        let cm = coefficient_matrix(&poly, MatrixOptions::default()).unwrap();
        ensure!(reexpand(&holomorphic_decomposition(&cm.form).unwrap()) == poly, "{name} does not re-expand");
        count += 1;
    }
    let mut r = rng(5);
    for i in 0..50 {
        let k = 2 + i % 2;
        let d = 1 + (i as u32 / 2) % 4;
        let poly = random_real_bihom(&mut r, k, d, 6);
        let cm = coefficient_matrix(&poly, MatrixOptions::default()).unwrap();
        ensure!(reexpand(&holomorphic_decomposition(&cm.form).unwrap()) == poly, "random #{i} fails: {poly}");
        count += 1;
    }
    printed_cusp_decomposition_is_twice_the_cusp()?;
    Ok(format!("{count} exact re-expansions; printed cusp decomposition = 2 × cusp"))
}

fn printed_cusp_decomposition_is_twice_the_cusp() -> Outcome {
    let sq = |s: &str| {
        let h = HoloPoly::new(p(s, 2)).unwrap();
        h.norm_squared()
    };
    let printed = &(&(&sq("z1^3 + 2*z1^2*z2 + z2^3") - &sq("z1^3 + 2*z1^2*z2 - z2^3"))
        + &sq("3*z1^2*z2 - 2*z1*z2^2 + z1*z2^2"))
        - &sq("3*z1^2*z2 - 2*z1*z2^2 - z1*z2^2");
    let cusp = p(CUSP_BIHOM, 2);
    ensure!(printed == cusp.scale(&Coefficient::from_int(2)), "printed expansion is {printed}");
    ensure!(printed != cusp, "unexpected factor 1");
    Ok(String::new())
}

fn ac6() -> Outcome {
    let mut r = rng(6);
    let mut checks = 0;
    for j in 0..5 {
        let (k, d) = [(2, 2), (2, 3), (3, 1), (3, 2), (2, 4)][j];
        let poly = random_real_bihom(&mut r, k, d, 6);
        let base = inertia(&poly);
        for _ in 0..20 {
            let l = random_invertible(&mut r, k);
            let moved = linear_substitute(&poly, &l);
            let got = inertia(&moved);
            ensure!(got == base, "rank changed from {:?} to {:?} under {:?}", base, got, l);
            checks += 1;
        }
    }
    Ok(format!("{checks} substitutions preserve rank (and signature)"))
}

fn ac7() -> Outcome {
    let mut r = rng(7);
    let config = SamplingConfig::default();
    for i in 0..100 {
        let k = 2 + i % 2;
        let max_deg = if k == 2 { 3 } else { 2 };
        let a = random_holo(&mut r, k, max_deg, 3);
        let b = random_holo(&mut r, k, max_deg, 3);
        let rho = &a.try_mul(&a.conjugate()).unwrap() - &b.try_mul(&b.conjugate()).unwrap();
        if rho.is_zero() {
            continue;
        }
        let cert = certify_leviflat(&rho, &config).unwrap();
        ensure!(cert.verdict == Verdict::Certified, "|p|² − |q|² #{i} gave {}: {rho}", cert.verdict);
    }
    let t = Thresholds::default();
    let mut worst = (0.0f64, f64::INFINITY);
    for (name, rho) in [
        ("sphere", p("z1*~z1 + z2*~z2 - 1", 2)),
        ("(2,1) quadric", p("z1*~z1 + z2*~z2 - z3*~z3", 3)),
    ] {
        let cert = certify_leviflat(&rho, &config).unwrap();
        ensure!(cert.verdict == Verdict::Refuted, "{name}: {}", cert.verdict);
        let w = cert.witness.unwrap();
        ensure!(w.residual <= t.surface_residual, "{name}: residual {}", w.residual);
        ensure!(w.minor_value >= t.refutation, "{name}: minor {}", w.minor_value);
        ensure!(w.exact_minor_value >= t.refutation, "{name}: exact minor {}", w.exact_minor_value);
        ensure!(w.gradient_norm > t.smoothness, "{name}: not smooth");
        worst = (worst.0.max(w.residual), worst.1.min(w.minor_value));
    }
    Ok(format!(
        "100 rank-2 forms certified; sphere and (2,1) quadric refuted (max residual {:.1e}, min normalized minor {:.2e})",
        worst.0, worst.1
    ))
}

fn ac8() -> Outcome {
    let h = |s: &str| HoloPoly::new(p(s, 2)).unwrap();
    let map = RationalMap::new(h("z1"), h("z2")).unwrap();
    let im = RealCurvePoly::new(p("(-1/2*i)*z1 + (1/2*i)*~z1", 1)).unwrap();
    let got = pullback(&map, &im).unwrap();
    ensure!(got == quadratic_cone(1).unwrap(), "Im ζ pulls back to {got}");
    let cusp = RealCurvePoly::new(p(CUSP_AFFINE, 1)).unwrap();
    let q = pullback(&map, &cusp).unwrap();
    ensure!(q == p(CUSP_BIHOM, 2), "cusp pulls back to {q}");

    // On-curve points: ζ = s² + i s³ lies on x³ = y².
    let mut r = rng(8);
    let (mut on, mut off) = (0, 0);
    for i in 0..50 {
        let zeta = if i < 25 {
            let s = small_rational(&mut r);
            Coefficient::new(&s * &s, &s * &(&s * &s))
        } else {
            small_coeff(&mut r)
        };
        let w = nonzero_coeff(&mut r);
        let pt = vec![&zeta * &w, w];
        let f = map.evaluate(&pt).unwrap().expect("g ≠ 0");
        let s_zero = cusp.as_mixed().evaluate(&[f]).unwrap().is_zero();
        let q_zero = q.evaluate(&pt).unwrap().is_zero();
        ensure!(s_zero == q_zero, "mismatch at {:?}", pt);
        ensure!(i >= 25 || s_zero, "constructed curve point is off the curve");
        if s_zero {
            on += 1
        } else {
            off += 1
        }
    }
    ensure!(on >= 25 && off > 0, "only {on} on-curve and {off} off-curve points");
    Ok(format!("golden pullbacks exact; {on} on-curve and {off} off-curve points agree"))
}

fn ac9() -> Outcome {
    let mut summary = Vec::new();
    for name in example_names() {
        let rec = example(name).unwrap();
        let (d, _) = rec.polynomial.bidegree().unwrap();
        let n = rec.polynomial.num_vars() as u64 - 1;
        let i = inertia(&rec.polynomial);
        let bound = binomial(d as u64 + n, n);
        ensure!(2 <= i.rank && i.rank as u64 <= bound, "{name}: rank {} outside [2, {bound}]", i.rank);
        ensure!(i.rank == rec.expected.rank.value, "{name}: rank {} vs expected {}", i.rank, rec.expected.rank.value);
        summary.push(format!("{name} {}≤{bound}", i.rank));
    }
    Ok(summary.join(", "))
}

fn ac10() -> Outcome {
    let chapter = include_str!("../../../book/src/scope.md");
    ensure!(chapter.contains("not reproducible as computations"), "scope chapter lacks the out-of-scope statement");
    Ok("existence theorems documented as out of scope; covered by AC-1..AC-9".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("AC-1 bihomogenization golden", ac1),
        ("AC-2 cusp coefficient matrix", ac2),
        ("AC-3 quadratic cone", ac3),
        ("AC-4 nondegenerate quartic", ac4),
        ("AC-5 decomposition identity (printed cusp decomposition = 2x cusp)", ac5),
        ("AC-6 rank invariance", ac6),
        ("AC-7 Levi-flat soundness", ac7),
        ("AC-8 pullback golden and consistency", ac8),
        ("AC-9 rank bound", ac9),
        ("AC-10 scope of existence theorems", ac10),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("[PASS] {name} ({secs:.2}s): {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name} ({secs:.2}s): {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        10 - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
