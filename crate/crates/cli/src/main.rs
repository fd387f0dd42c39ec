use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use leviflat::constructions::{example, example_names, pullback, RationalMap, RealCurvePoly};
use leviflat::geometry::{
    bihomogenize, degenerate_locus_generators, dehomogenize, is_algebraic_degenerate, segre_polynomial,
    ProjectiveContext,
};
use leviflat::hermitian::{coefficient_matrix, holomorphic_decomposition, rank_signature, MatrixOptions, SquareTerm};
use leviflat::io::{format, from_json, max_variable_index, parse, to_json, PolyDocument, SCHEMA_VERSION};
use leviflat::leviflat::{certify_leviflat, check_leaf_family, LeafFamily, SamplingConfig, Thresholds, Verdict};
use leviflat::{Coefficient, Error, HoloPoly, MixedPoly};

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (schema 1)");

#[derive(Parser)]
#[command(name = "leviflat", version = VERSION, about = "Exact analysis of real-algebraic hypersurfaces")]
struct Cli {
    /// Number of complex variables (default: highest index in the input).
    #[arg(long, global = true, value_name = "K")]
    vars: Option<usize>,
    /// Emit a JSON run report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Read the polynomial from a file instead of stdin.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of a polynomial.
    Parse,
    /// Lift an affine polynomial in K variables to a bihomogeneous one in K+1.
    Bihomogenize {
        /// 1-based position of the homogenizing variable (default: last).
        #[arg(long)]
        hom_index: Option<usize>,
        /// Accept a purely imaginary-valued input.
        #[arg(long)]
        imaginary: bool,
    },
    /// Set one variable of a bihomogeneous polynomial to 1 and drop it.
    Dehomogenize {
        /// 1-based index of the variable to set to 1.
        #[arg(long)]
        chart: usize,
    },
    /// Print the Hermitian coefficient matrix.
    Matrix(MatrixArgs),
    /// Print rank and signature of the coefficient matrix.
    Rank(MatrixArgs),
    /// Print a signed sum of squares of holomorphic polynomials.
    Decompose(MatrixArgs),
    /// Print the Segre polynomial P(z, p̄) of a point.
    Segre {
        /// Comma-separated coordinates, e.g. `1,0,2+i`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Test a point for degeneracy, or list generators of the degenerate set.
    Degen {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "locus", required_unless_present = "locus")]
        point: Option<String>,
        #[arg(long)]
        locus: bool,
    },
    /// Certify or refute Levi-flatness.
    Leviflat {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        /// Sampling box `lo,hi` for every real coordinate.
        #[arg(long = "box", default_value = "-2,2", allow_hyphen_values = true)]
        bounds: String,
        /// `residual,gradient,refutation`.
        #[arg(long, allow_hyphen_values = true)]
        thresholds: Option<String>,
    },
    /// Pull a real curve S(ζ, ζ̄) back by F = f/g.
    Pullback {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Real polynomial in z1 and ~z1 standing for ζ.
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
    },
    /// Print a registry example as JSON. Names: cartan-umbrella, cusp-curve,
    /// nodegen-quartic, quadratic-cone, brunella.
    Example { name: String },
    /// Test whether substituting a real one-parameter family kills P.
    LeafCheck {
        /// `z1 = expr; ...` with the real parameter `t`.
        #[arg(long, allow_hyphen_values = true)]
        family: String,
    },
}

#[derive(Args)]
struct MatrixArgs {
    /// Use the full degree-d monomial basis.
    #[arg(long)]
    pad: bool,
    /// Accept a purely imaginary-valued input by multiplying by −i.
    #[arg(long)]
    imaginary: bool,
}

impl MatrixArgs {
    fn options(&self) -> MatrixOptions {
        MatrixOptions {
            normalize_imaginary: self.imaginary,
            full_basis: self.pad,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Document(_) | Error::MalformedFamily(_) => 2,
            Error::UnknownExample(_) => 1,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<leviflat::ParseError> for Failure {
    fn from(e: leviflat::ParseError) -> Self {
        Error::from(e).into()
    }
}

type CliResult<T> = Result<T, Failure>;

struct Outcome {
    text: String,
    output: Value,
    /// A check that came out negative.
    negative: bool,
    input: Option<String>,
    seed: Option<u64>,
}

impl Outcome {
    fn new(text: String, output: Value) -> Self {
        Outcome {
            text,
            output,
            negative: false,
            input: None,
            seed: None,
        }
    }
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a str,
    schema_version: u32,
    input: Option<&'a str>,
    seed: Option<u64>,
    output: &'a Value,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let name = command_name(&cli.command);
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                let report = RunReport {
                    command: name,
                    schema_version: SCHEMA_VERSION,
                    input: out.input.as_deref(),
                    seed: out.seed,
                    output: &out.output,
                };
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!("{}", out.text.trim_end());
            }
            ExitCode::from(if out.negative { 4 } else { 0 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Parse => "parse",
        Command::Bihomogenize { .. } => "bihomogenize",
        Command::Dehomogenize { .. } => "dehomogenize",
        Command::Matrix(_) => "matrix",
        Command::Rank(_) => "rank",
        Command::Decompose(_) => "decompose",
        Command::Segre { .. } => "segre",
        Command::Degen { .. } => "degen",
        Command::Leviflat { .. } => "leviflat",
        Command::Pullback { .. } => "pullback",
        Command::Example { .. } => "example",
        Command::LeafCheck { .. } => "leaf-check",
    }
}

fn read_source(cli: &Cli) -> CliResult<String> {
    match &cli.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {path}: {e}"))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn text_vars(cli: &Cli, texts: &[&str]) -> usize {
    cli.vars
        .unwrap_or_else(|| texts.iter().map(|t| max_variable_index(t)).max().unwrap_or(0).max(1))
}

/// Accepts polynomial text, a polynomial document, or any JSON object whose
/// `polynomial` or `output` field holds one of those.
fn polynomial_from_json(v: &Value, cli: &Cli) -> CliResult<MixedPoly> {
    if v.get("terms").is_some() {
        let doc: PolyDocument =
            serde_json::from_value(v.clone()).map_err(|e| Failure::from(Error::Document(e.to_string())))?;
        return check_vars(from_json(&doc)?, cli);
    }
    for key in ["polynomial", "output"] {
        match v.get(key) {
            Some(Value::String(s)) => return Ok(parse(s, text_vars(cli, &[s]))?),
            Some(inner @ Value::Object(_)) => return polynomial_from_json(inner, cli),
            _ => {}
        }
    }
    Err(Error::Document("JSON input holds no polynomial".into()).into())
}

fn check_vars(p: MixedPoly, cli: &Cli) -> CliResult<MixedPoly> {
    match cli.vars {
        Some(k) if k != p.num_vars() => Err(Error::VarCountMismatch {
            left: k,
            right: p.num_vars(),
        }
        .into()),
        _ => Ok(p),
    }
}

fn read_polynomial(cli: &Cli) -> CliResult<MixedPoly> {
    let src = read_source(cli)?;
    let trimmed = src.trim();
    if trimmed.is_empty() {
        return Err(Error::Document("empty input; pass a polynomial on stdin or with --input".into()).into());
    }
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed).map_err(|e| Failure::from(Error::Document(e.to_string())))?;
        polynomial_from_json(&v, cli)
    } else {
        Ok(parse(trimmed, text_vars(cli, &[trimmed]))?)
    }
}

fn poly_output(p: &MixedPoly) -> Value {
    json!({ "text": format(p), "polynomial": to_json(p) })
}

fn parse_point(s: &str) -> CliResult<Vec<Coefficient>> {
    s.split(',')
        .map(|part| {
            let p = parse(part, 0)?;
            Ok(p.coefficient(&[], &[]))
        })
        .collect()
}

fn parse_f64_list(s: &str, n: usize, what: &str) -> CliResult<Vec<f64>> {
    let vals = s
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::usage(format!("--{what} expects {n} comma-separated numbers")))?;
    if vals.len() != n || vals.iter().any(|v| !v.is_finite()) {
        return Err(Failure::usage(format!("--{what} expects {n} comma-separated numbers")));
    }
    Ok(vals)
}

fn matrix_text(basis: &[Vec<u32>], matrix: &[Vec<Coefficient>]) -> String {
    let k = basis.first().map_or(0, Vec::len);
    let names: Vec<String> = basis
        .iter()
        .map(|a| format(&MixedPoly::monomial(a, &vec![0; k], Coefficient::one()).expect("valid monomial")))
        .collect();
    let cells: Vec<Vec<String>> = matrix.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = format!("basis: {}\n", names.join(", "));
    for row in &cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&format!("[ {} ]\n", padded.join("  ")));
    }
    out
}

fn square_json(t: &SquareTerm) -> Value {
    json!({ "weight": t.weight.to_string(), "text": format(&t.poly), "polynomial": to_json(&t.poly) })
}

fn square_text(sign: char, t: &SquareTerm) -> String {
    if t.weight.to_string() == "1" {
        format!("{sign} |{}|^2", t.poly)
    } else {
        format!("{sign} {}*|{}|^2", t.weight, t.poly)
    }
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Parse => {
            let p = read_polynomial(cli)?;
            Ok(with_input(Outcome::new(format(&p), poly_output(&p)), &p))
        }
        Command::Bihomogenize { hom_index, imaginary } => {
            let p = read_polynomial(cli)?;
            let n = p.num_vars();
            let ctx = match hom_index {
                Some(0) => return Err(Failure::usage("--hom-index is 1-based")),
                Some(i) => ProjectiveContext::new(n, i - 1)?,
                None => ProjectiveContext::appended(n),
            };
            let q = bihomogenize(&p, &ctx, *imaginary)?;
            Ok(with_input(Outcome::new(format(&q), poly_output(&q)), &p))
        }
        Command::Dehomogenize { chart } => {
            let p = read_polynomial(cli)?;
            if *chart == 0 {
                return Err(Failure::usage("--chart is 1-based"));
            }
            let q = dehomogenize(&p, chart - 1)?;
            Ok(with_input(Outcome::new(format(&q), poly_output(&q)), &p))
        }
        Command::Matrix(args) => {
            let p = read_polynomial(cli)?;
            let cm = coefficient_matrix(&p, args.options())?;
            let basis = cm.form.basis().exponents();
            let matrix = cm.form.matrix();
            let mut text = matrix_text(basis, matrix);
            if cm.imaginary_normalized {
                text.push_str("(input multiplied by -i)\n");
            }
            let out = json!({
                "basis": basis,
                "matrix": matrix.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "imaginary_normalized": cm.imaginary_normalized,
            });
            Ok(with_input(Outcome::new(text, out), &p))
        }
        Command::Rank(args) => {
            let p = read_polynomial(cli)?;
            let cm = coefficient_matrix(&p, args.options())?;
            let i = rank_signature(&cm.form)?;
            let text = format!("rank {}\nsignature ({}, {})", i.rank, i.positives, i.negatives);
            let out = json!({
                "rank": i.rank,
                "signature": [i.positives, i.negatives],
                "basis_size": cm.form.dim(),
                "imaginary_normalized": cm.imaginary_normalized,
            });
            Ok(with_input(Outcome::new(text, out), &p))
        }
        Command::Decompose(args) => {
            let p = read_polynomial(cli)?;
            let cm = coefficient_matrix(&p, args.options())?;
            let dec = holomorphic_decomposition(&cm.form)?;
            let mut lines: Vec<String> = dec.plus.iter().map(|t| square_text('+', t)).collect();
            lines.extend(dec.minus.iter().map(|t| square_text('-', t)));
            let out = json!({
                "plus": dec.plus.iter().map(square_json).collect::<Vec<_>>(),
                "minus": dec.minus.iter().map(square_json).collect::<Vec<_>>(),
                "imaginary_normalized": cm.imaginary_normalized,
            });
            Ok(with_input(Outcome::new(lines.join("\n"), out), &p))
        }
        Command::Segre { point } => {
            let p = read_polynomial(cli)?;
            let pt = parse_point(point)?;
            let s: HoloPoly = segre_polynomial(&p, &pt)?;
            Ok(with_input(Outcome::new(format(&s), poly_output(&s)), &p))
        }
        Command::Degen { point, locus } => {
            let p = read_polynomial(cli)?;
            if *locus {
                let rep = degenerate_locus_generators(&p)?;
                let gens: Vec<String> = rep.reduced_generators().iter().map(|g| format(g)).collect();
                let mut text = format!("rank {}\n", rep.rank);
                if let Some(b) = rep.projective_dimension_bound {
                    text.push_str(&format!("degenerate set has projective dimension at least {b}\n"));
                }
                text.push_str("generators:\n");
                for g in &gens {
                    text.push_str(&format!("  {g}\n"));
                }
                let mut out = serde_json::to_value(&rep).expect("report serializes");
                out["generators"] = json!(gens);
                Ok(with_input(Outcome::new(text, out), &p))
            } else {
                let raw = point.as_deref().expect("clap requires --point or --locus");
                let pt = parse_point(raw)?;
                let degenerate = is_algebraic_degenerate(&p, &pt)?;
                let text = format!("degenerate: {degenerate}");
                let out = json!({ "point": pt.iter().map(|c| c.to_string()).collect::<Vec<_>>(), "degenerate": degenerate });
                let mut o = with_input(Outcome::new(text, out), &p);
                o.negative = !degenerate;
                Ok(o)
            }
        }
        Command::Leviflat {
            seed,
            samples,
            bounds,
            thresholds,
        } => {
            let p = read_polynomial(cli)?;
            let b = parse_f64_list(bounds, 2, "box")?;
            let thresholds = match thresholds {
                Some(s) => {
                    let t = parse_f64_list(s, 3, "thresholds")?;
                    Thresholds {
                        surface_residual: t[0],
                        smoothness: t[1],
                        refutation: t[2],
                    }
                }
                None => Thresholds::default(),
            };
            if *samples == 0 {
                return Err(Failure::usage("--samples must be at least 1"));
            }
            let config = SamplingConfig {
                seed: *seed,
                samples: *samples,
                bounds: (b[0], b[1]),
                thresholds,
            };
            let cert = certify_leviflat(&p, &config)?;
            let mut text = format!(
                "verdict: {}\nminors divisible by rho: {}/{}\n",
                cert.verdict, cert.minors_divisible, cert.minors_total
            );
            if let Some(w) = &cert.witness {
                let coords: Vec<String> = w.point.iter().map(|c| format!("{}{:+}i", c.re, c.im)).collect();
                text.push_str(&format!(
                    "witness: ({})\n  residual {:e}\n  normalized minor {:e} (rows {:?}, cols {:?})\n",
                    coords.join(", "),
                    w.residual,
                    w.minor_value,
                    w.rows,
                    w.cols
                ));
            }
            if let Some(s) = cert.sampling.as_ref().and_then(|s| s.diagnostic.as_ref()) {
                text.push_str(&format!("sampling: {s}\n"));
            }
            let out = serde_json::to_value(&cert).expect("certificate serializes");
            let mut o = with_input(Outcome::new(text, out), &p);
            o.negative = cert.verdict == Verdict::Refuted;
            o.seed = Some(*seed);
            Ok(o)
        }
        Command::Pullback { f, g, curve } => {
            let k = text_vars(cli, &[f, g]);
            let map = RationalMap::new(HoloPoly::new(parse(f, k)?)?, HoloPoly::new(parse(g, k)?)?)?;
            let curve = RealCurvePoly::new(parse(curve, 1)?)?;
            let q = pullback(&map, &curve)?;
            let mut o = Outcome::new(format(&q), poly_output(&q));
            o.input = Some(format!("f = {}; g = {}; curve = {}", map.numerator(), map.denominator(), curve.as_mixed()));
            Ok(o)
        }
        Command::Example { name } => {
            let rec = example(name).map_err(|e| Failure {
                code: 1,
                message: format!("{e}; known examples: {}", example_names().join(", ")),
            })?;
            let v = rec.to_json_value();
            let text = serde_json::to_string_pretty(&v).expect("record serializes");
            let mut o = Outcome::new(text, v);
            o.input = Some(name.clone());
            Ok(o)
        }
        Command::LeafCheck { family } => {
            let p = read_polynomial(cli)?;
            let fam = LeafFamily::parse(family, p.num_vars())?;
            let residual = fam.apply(&p)?;
            let leaf = check_leaf_family(&p, &fam)?;
            let mut text = format!("leaf family: {leaf}");
            if !leaf {
                text.push_str(&format!("\nresidual (t = z{}): {}", p.num_vars() + 1, residual));
            }
            let out = json!({ "leaf": leaf, "residual": format(&residual) });
            let mut o = with_input(Outcome::new(text, out), &p);
            o.negative = !leaf;
            Ok(o)
        }
    }
}

fn with_input(mut o: Outcome, p: &MixedPoly) -> Outcome {
    o.input = Some(format(p));
    o
}
