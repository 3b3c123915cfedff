//! The `hyplab` command line.
//!
//! Exit codes: 0 when the report passes, 1 on a mathematical failure (an
//! axiom, a residual, a non-stochastic row), 2 on usage, syntax and I/O
//! errors.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::any::AnyHypergroup;
use crate::axioms::AxiomReport;
use crate::constructions::{double_coset_hypergroup, gallery, FiniteGroup, GALLERY_NAMES};
use crate::continuous::{IntervalHypergroup, MAX_DEGREE};
use crate::hypergroup::{FiniteHypergroup, HypergroupError};
use crate::io::{emit_hyp, parse_group, parse_hyp_unchecked, parse_hyp_with_tol, HypFile, ParseError, Report, Verdict};
use crate::representation::{characters, index_lower_bound, CharacterTable};
use crate::scalar::{fmt_f64, NumericMode, Scalar, DEFAULT_TOL};
use crate::with_hypergroup;

/// Name of the continuous example accepted by `example`.
pub const CONTINUOUS_EXAMPLE: &str = "so3-so2";
/// Points at which `example so3-so2` reports the identity atom.
pub const ATOM_POINTS: [f64; 7] = [-1.0, -0.9, -0.5, 0.0, 0.5, 0.9, 1.0];

#[derive(Debug, Parser)]
#[command(name = "hyplab", version, about = "Construct, verify and analyze finite hypergroups")]
pub struct Cli {
    /// Float-mode tolerance.
    #[arg(long, global = true, env = "HYPLAB_TOL", default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Omit the wall-clock field.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every hypergroup axiom and the inverse rule.
    Verify { file: PathBuf },
    /// Compute the Haar measure.
    Haar { file: PathBuf },
    /// Weights and index lower bounds `b·w_x`.
    Weights {
        file: PathBuf,
        /// Multiplier `b` (defaults to 1).
        #[arg(long, default_value = "1")]
        b: String,
    },
    /// Character table, hyperdimensions and orthogonality residuals.
    Chars {
        file: PathBuf,
        /// Number of random functions for the Plancherel check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Fourier transform of a function given by its values.
    Fourier {
        file: PathBuf,
        /// One value per element, `re` or `re:im`, separated by commas or spaces.
        #[arg(long, allow_hyphen_values = true)]
        values: String,
    },
    /// Build the double coset hypergroup `G//H`.
    Doublecoset {
        #[arg(long)]
        group: PathBuf,
        /// Comma-separated element labels of `H`.
        #[arg(long, allow_hyphen_values = true)]
        subgroup: String,
        /// Treat the labels as generators and close them into a subgroup.
        #[arg(long)]
        generated: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the direct product of two hypergroups.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a named gallery example or the continuous `so3-so2` suite.
    Example {
        name: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = crate::continuous::DEFAULT_THETA_COUNT)]
        theta: usize,
        #[arg(long, default_value_t = crate::continuous::DEFAULT_GRID_SIZE)]
        grid: usize,
        #[arg(long, default_value_t = crate::continuous::DEFAULT_QUAD_ORDER)]
        quad: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// What a run printed and how it exited.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Option<Report>,
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 1 with a failing report carrying the message.
    Math(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        if e.is_semantic() {
            Failure::Math(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<HypergroupError> for Failure {
    fn from(e: HypergroupError) -> Self {
        Failure::Math(e.to_string())
    }
}

type Step = Result<(Value, bool), Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let echo: Vec<String> = std::iter::once("hyplab".to_string())
        .chain(args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()))
        .collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { report: None, stdout, stderr, code };
        }
    };
    if !cli.tol.is_finite() || cli.tol < 0.0 {
        return usage(format!("--tol must be a finite non-negative number, got {}", cli.tol));
    }
    let start = Instant::now();
    let step = dispatch(&cli);
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let (results, ok) = match step {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => return usage(msg),
        Err(Failure::Math(msg)) => (json!({ "error": msg }), false),
    };
    let mut report = Report::new(echo, results, Verdict::from_bool(ok));
    if !cli.no_timing {
        report.wall_clock_ms = Some(elapsed);
    }
    let stdout = if cli.json { report.to_json() + "\n" } else { report.to_text() };
    let code = report.verdict.exit_code();
    Outcome { report: Some(report), stdout, stderr: String::new(), code }
}

fn usage(msg: String) -> Outcome {
    Outcome { report: None, stdout: String::new(), stderr: format!("error: {msg}\n"), code: 2 }
}

fn dispatch(cli: &Cli) -> Step {
    let tol = cli.tol;
    match &cli.command {
        Command::Verify { file } => verify(file, tol),
        Command::Haar { file } => haar(&load(file, tol)?),
        Command::Weights { file, b } => weights(&load(file, tol)?, b),
        Command::Chars { file, samples, seed } => chars(&load(file, tol)?, *samples, *seed, tol),
        Command::Fourier { file, values } => fourier(&load(file, tol)?, values, tol),
        Command::Doublecoset { group, subgroup, generated, output } => {
            doublecoset(group, subgroup, *generated, output.as_deref())
        }
        Command::Product { first, second, output } => {
            let (a, b) = (load(first, tol)?, load(second, tol)?);
            product(&a, &b, output.as_deref())
        }
        Command::Example { name, nmax, theta, grid, quad, output } => {
            if name == CONTINUOUS_EXAMPLE {
                continuous_example(*nmax, *theta, *grid, *quad)
            } else {
                example(name, output.as_deref(), tol)
            }
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn load(path: &Path, tol: f64) -> Result<HypFile, Failure> {
    Ok(parse_hyp_with_tol(&read(path)?, tol)?)
}

fn mode_json(mode: NumericMode) -> Value {
    match mode {
        NumericMode::Exact => json!("exact"),
        NumericMode::Float(tol) => json!(format!("float (tol {})", fmt_f64(tol))),
    }
}

fn header(file: &HypFile) -> Map<String, Value> {
    let mut m = Map::new();
    if let Some(name) = &file.name {
        m.insert("name".into(), json!(name));
    }
    m.insert("mode".into(), mode_json(file.hypergroup.mode()));
    m.insert("elements".into(), json!(file.hypergroup.labels()));
    m
}

fn axioms_json(report: &AxiomReport, labels: &[String]) -> Value {
    Value::Array(
        report
            .checks
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("axiom".into(), json!(c.axiom.to_string()));
                m.insert("passed".into(), json!(c.passed));
                m.insert("worst_residual".into(), json!(fmt_f64(c.worst_residual)));
                m.insert("violations".into(), json!(c.violation_count));
                if !c.violations.is_empty() {
                    let shown: Vec<String> = c
                        .violations
                        .iter()
                        .map(|v| v.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>().join(" "))
                        .collect();
                    m.insert("examples".into(), json!(shown));
                }
                if let Some(note) = &c.note {
                    m.insert("note".into(), json!(note));
                }
                Value::Object(m)
            })
            .collect(),
    )
}

fn full_verification(h: &AnyHypergroup) -> (Value, bool) {
    let axioms = h.verify_axioms();
    let inverse = h.check_inverse_rule();
    let labels = h.labels();
    let mut all = axioms_json(&axioms, labels);
    if let (Value::Array(a), Value::Array(b)) = (&mut all, axioms_json(&inverse, labels)) {
        a.extend(b);
    }
    (all, axioms.passed() && inverse.passed())
}

fn verify(path: &Path, tol: f64) -> Step {
    let file = parse_hyp_unchecked(&read(path)?, tol)?;
    let mut m = header(&file);
    let (checks, ok) = full_verification(&file.hypergroup);
    m.insert("checks".into(), checks);
    Ok((Value::Object(m), ok))
}

fn per_element<S: Scalar>(h: &FiniteHypergroup<S>, values: &[S]) -> Value {
    let mut m = Map::new();
    for (label, v) in h.labels().iter().zip(values) {
        m.insert(label.clone(), json!(v.render()));
    }
    Value::Object(m)
}

fn haar(file: &HypFile) -> Step {
    let mut m = header(file);
    let haar = with_hypergroup!(&file.hypergroup, h => per_element(h, h.haar()?.weights()));
    m.insert("haar".into(), haar);
    Ok((Value::Object(m), true))
}

fn parse_multiplier<S: Scalar>(text: &str) -> Result<S, Failure> {
    let bad = || Failure::Usage(format!("--b expects a number or p/q, got {text:?}"));
    let value = match text.split_once('/') {
        Some((p, q)) => {
            let (p, q): (i64, i64) = (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
            if q == 0 {
                return Err(bad());
            }
            S::from_ratio(p, q)
        }
        None => S::from_f64(text.trim().parse().map_err(|_| bad())?).ok_or_else(bad)?,
    };
    if value.to_f64() < 1.0 {
        return Err(Failure::Usage(format!("--b must be at least 1, got {text}")));
    }
    Ok(value)
}

fn weights_generic<S: Scalar>(h: &FiniteHypergroup<S>, b: &str) -> Step {
    let b: S = parse_multiplier(b)?;
    let mut rows = Vec::new();
    for x in 0..h.len() {
        let mut m = Map::new();
        m.insert("element".into(), json!(h.label(x)));
        match h.weight(x) {
            Ok(w) => {
                m.insert("weight".into(), json!(w.render()));
                m.insert("index_lower_bound".into(), json!(index_lower_bound(h, x, b.clone())?.render()));
            }
            Err(HypergroupError::InfiniteWeight { .. }) => {
                m.insert("weight".into(), json!("inf"));
                m.insert("index_lower_bound".into(), json!("inf"));
            }
            Err(e) => return Err(e.into()),
        }
        rows.push(Value::Object(m));
    }
    Ok((json!({ "b": b.render(), "weights": rows }), true))
}

fn weights(file: &HypFile, b: &str) -> Step {
    let (mut body, ok) = with_hypergroup!(&file.hypergroup, h => weights_generic(h, b))?;
    let mut m = header(file);
    m.append(body.as_object_mut().expect("object"));
    Ok((Value::Object(m), ok))
}

/// `re`, or `re:im` when the imaginary part is above rounding noise.
pub fn fmt_complex(c: Complex64) -> String {
    if c.im.abs() <= 1e-14 * c.norm().max(1.0) {
        fmt_f64(c.re)
    } else {
        format!("{}:{}", fmt_f64(c.re), fmt_f64(c.im))
    }
}

fn table_json(t: &CharacterTable) -> Value {
    Value::Array(
        (0..t.len())
            .map(|i| {
                let mut values = Map::new();
                for (x, label) in t.labels().iter().enumerate() {
                    values.insert(label.clone(), json!(fmt_complex(t.value(i, x))));
                }
                json!({ "index": i, "hyperdimension": fmt_f64(t.hyperdimension(i)), "values": values })
            })
            .collect(),
    )
}

fn chars(file: &HypFile, samples: usize, seed: u64, tol: f64) -> Step {
    let table = with_hypergroup!(&file.hypergroup, h => characters(h)).map_err(|e| Failure::Math(e.to_string()))?;
    let orth = table.orthogonality_residual();
    let mult = with_hypergroup!(&file.hypergroup, h => table.multiplicativity_residual(h));
    let planch = table.random_plancherel_residual(samples, seed);
    let mut m = header(file);
    m.insert("characters".into(), table_json(&table));
    let dims: Vec<String> = table.hyperdims().iter().map(|&k| fmt_f64(k)).collect();
    m.insert("hyperdimensions".into(), json!(dims));
    m.insert("hyperdimension_sum".into(), json!(fmt_f64(table.hyperdimension_sum())));
    m.insert("orthogonality_residual".into(), json!(fmt_f64(orth)));
    m.insert("multiplicativity_residual".into(), json!(fmt_f64(mult)));
    m.insert("plancherel_residual".into(), json!(fmt_f64(planch)));
    m.insert("plancherel_samples".into(), json!(samples));
    m.insert("tolerance".into(), json!(fmt_f64(tol)));
    Ok((Value::Object(m), orth <= tol && mult <= tol && planch <= tol))
}

fn parse_values(text: &str, len: usize) -> Result<Vec<Complex64>, Failure> {
    let parts: Vec<&str> = text.split([',', ' ']).filter(|s| !s.is_empty()).collect();
    if parts.len() != len {
        return Err(Failure::Usage(format!("expected {len} values, got {}", parts.len())));
    }
    parts
        .iter()
        .map(|p| {
            let bad = || Failure::Usage(format!("bad value {p:?}; expected `re` or `re:im`"));
            let (re, im) = p.split_once(':').unwrap_or((p, "0"));
            Ok(Complex64::new(re.parse().map_err(|_| bad())?, im.parse().map_err(|_| bad())?))
        })
        .collect()
}

fn fourier(file: &HypFile, values: &str, tol: f64) -> Step {
    let f = parse_values(values, file.hypergroup.len())?;
    let table = with_hypergroup!(&file.hypergroup, h => characters(h)).map_err(|e| Failure::Math(e.to_string()))?;
    let coeffs = table.fourier(&f).map_err(|e| Failure::Usage(e.to_string()))?;
    let back = table.inverse_fourier(&coeffs).map_err(|e| Failure::Usage(e.to_string()))?;
    let inversion = back.iter().zip(&f).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    let planch = table.plancherel_residual(&f).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut m = header(file);
    let rows: Vec<Value> = coeffs
        .0
        .iter()
        .enumerate()
        .map(|(i, c)| json!({ "character": i, "coefficient": fmt_complex(*c) }))
        .collect();
    m.insert("coefficients".into(), Value::Array(rows));
    m.insert("inversion_residual".into(), json!(fmt_f64(inversion)));
    m.insert("plancherel_residual".into(), json!(fmt_f64(planch)));
    Ok((Value::Object(m), inversion <= tol && planch <= tol))
}

/// Splits on commas outside parentheses.
fn split_labels(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let (mut depth, mut current) = (0usize, String::new());
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if c == ',' && depth == 0 {
            out.push(std::mem::take(&mut current));
        } else {
            current.push(c);
        }
    }
    out.push(current);
    out.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

fn resolve_subgroup(g: &FiniteGroup, text: &str, generated: bool) -> Result<Vec<usize>, Failure> {
    let labels = split_labels(text);
    let indices = labels
        .iter()
        .map(|l| g.index_of(l).ok_or_else(|| Failure::Usage(format!("unknown group element {l:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if generated {
        return Ok(g.subgroup_closure(&indices));
    }
    g.check_subgroup(&indices).map_err(|e| Failure::Math(e.to_string()))
}

fn emit_or_inline(m: &mut Map<String, Value>, file: &HypFile, output: Option<&Path>) -> Result<(), Failure> {
    let text = emit_hyp(file);
    match output {
        Some(path) => {
            write(path, &text)?;
            m.insert("output".into(), json!(path.display().to_string()));
        }
        None => {
            m.insert("hyp".into(), json!(text));
        }
    }
    Ok(())
}

fn doublecoset(group: &Path, subgroup: &str, generated: bool, output: Option<&Path>) -> Step {
    let g = parse_group(&read(group)?)?;
    let h = resolve_subgroup(&g, subgroup, generated)?;
    let (hyp, partition) = double_coset_hypergroup(&g, &h).map_err(|e| Failure::Math(e.to_string()))?;
    let sub_labels: Vec<&str> = partition.subgroup.iter().map(|&i| g.label(i)).collect();
    let stem = group.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "G".into());
    let file = HypFile::new(hyp.clone())
        .named(format!("{stem}_mod_H"))
        .with_note(format!("double cosets of {stem} (order {}) by H = {{{}}}", g.order(), sub_labels.join(",")));
    let mut m = Map::new();
    m.insert("group_order".into(), json!(g.order()));
    m.insert("subgroup".into(), json!(sub_labels));
    let cosets: Vec<Value> = partition
        .blocks
        .iter()
        .enumerate()
        .map(|(b, block)| {
            let members: Vec<&str> = block.iter().map(|&i| g.label(i)).collect();
            json!({ "coset": hyp.label(b), "size": block.len(), "elements": members })
        })
        .collect();
    m.insert("cosets".into(), Value::Array(cosets));
    let any: AnyHypergroup = hyp.into();
    let (checks, ok) = full_verification(&any);
    m.insert("verified".into(), json!(ok));
    if !ok {
        m.insert("checks".into(), checks);
    }
    emit_or_inline(&mut m, &file, output)?;
    Ok((Value::Object(m), ok))
}

fn product(a: &HypFile, b: &HypFile, output: Option<&Path>) -> Step {
    let p = a.hypergroup.product(&b.hypergroup);
    let name = |f: &HypFile| f.name.clone().unwrap_or_else(|| "K".into());
    let file = HypFile::new(p.clone())
        .named(format!("{}_x_{}", name(a), name(b)))
        .with_note(format!("direct product of {} and {}", name(a), name(b)));
    let mut m = header(&file);
    let (checks, ok) = full_verification(&p);
    m.insert("verified".into(), json!(ok));
    if !ok {
        m.insert("checks".into(), checks);
    }
    emit_or_inline(&mut m, &file, output)?;
    Ok((Value::Object(m), ok))
}

fn example(name: &str, output: Option<&Path>, tol: f64) -> Step {
    let entry = gallery(name).map_err(|_| {
        Failure::Usage(format!(
            "unknown example {name:?}; choose one of {}, {CONTINUOUS_EXAMPLE}",
            GALLERY_NAMES.join(", ")
        ))
    })?;
    let file = HypFile::new(entry.hypergroup.with_tol(tol)).named(entry.name).with_note(entry.description);
    let mut m = header(&file);
    m.insert("description".into(), json!(entry.description));
    let (checks, mut ok) = full_verification(&file.hypergroup);
    m.insert("checks".into(), checks);
    m.insert("commutative".into(), json!(file.hypergroup.is_commutative()));
    if file.hypergroup.is_commutative() {
        let table = with_hypergroup!(&file.hypergroup, h => characters(h)).map_err(|e| Failure::Math(e.to_string()))?;
        let dims: Vec<String> = table.hyperdims().iter().map(|&k| fmt_f64(k)).collect();
        m.insert("hyperdimensions".into(), json!(dims));
        m.insert("hyperdimension_sum".into(), json!(fmt_f64(table.hyperdimension_sum())));
        let orth = table.orthogonality_residual();
        m.insert("orthogonality_residual".into(), json!(fmt_f64(orth)));
        ok &= orth <= tol;
    }
    emit_or_inline(&mut m, &file, output)?;
    Ok((Value::Object(m), ok))
}

/// Pass thresholds of the continuous suite.
pub const CHARACTER_TOL: f64 = 1e-9;
pub const HYPERDIM_TOL: f64 = 1e-8;
pub const HAAR_TOL: f64 = 1e-6;

fn continuous_example(nmax: usize, theta: usize, grid: usize, quad: usize) -> Step {
    if nmax > MAX_DEGREE {
        return Err(Failure::Usage(format!("--nmax must be at most {MAX_DEGREE}")));
    }
    let k = IntervalHypergroup::new(grid, quad, theta).map_err(|e| Failure::Usage(e.to_string()))?;
    let residuals = k.character_check(nmax).map_err(|e| Failure::Usage(e.to_string()))?;
    let dims = (0..=nmax)
        .map(|n| k.hyperdim_continuous(n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let haar = k.verify_haar_lebesgue();
    let assoc = k.associativity_check(0.2, -0.7, 0.5, f64::exp).map_err(|e| Failure::Usage(e.to_string()))?;
    let atoms: Vec<Value> = ATOM_POINTS
        .iter()
        .map(|&t| {
            let atom = k.identity_atom(t).expect("points lie in [-1, 1]");
            json!({ "t": fmt_f64(t), "identity_atom": fmt_f64(atom), "infinite_index": atom == 0.0 })
        })
        .collect();
    let chars_ok = residuals.iter().all(|&r| r <= CHARACTER_TOL);
    let dims_ok = dims.iter().enumerate().all(|(n, d)| (d - (2 * n + 1) as f64).abs() <= HYPERDIM_TOL);
    let haar_ok = haar <= HAAR_TOL;
    let result = json!({
        "example": CONTINUOUS_EXAMPLE,
        "theta_nodes": theta,
        "grid": grid,
        "quadrature_order": quad,
        "character_residuals": residuals.iter().map(|&r| fmt_f64(r)).collect::<Vec<_>>(),
        "hyperdimensions": dims.iter().map(|&d| fmt_f64(d)).collect::<Vec<_>>(),
        "haar_lebesgue_residual": fmt_f64(haar),
        "associativity_residual_exp": fmt_f64(assoc),
        "identity_atoms": atoms,
    });
    Ok((result, chars_ok && dims_ok && haar_ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("hyplab").chain(args.iter().copied()))
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&[]).code, 2);
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(run_args(&["verify", "/nonexistent/file.hyp"]).code, 2);
        assert_eq!(run_args(&["--tol", "-1", "example", "z2"]).code, 2);
        assert_eq!(run_args(&["example", "nope"]).code, 2);
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn gallery_examples_pass() {
        for name in GALLERY_NAMES {
            let out = run_args(&["example", name, "--no-timing"]);
            assert_eq!(out.code, 0, "{name}: {}", out.stdout);
            assert!(out.stdout.ends_with("verdict: PASS\n"));
        }
    }

    #[test]
    fn continuous_example_small() {
        let out = run_args(&["example", "so3-so2", "--nmax", "4", "--theta", "64", "--grid", "5", "--json"]);
        assert_eq!(out.code, 0, "{}", out.stdout);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["results"]["identity_atoms"][0]["identity_atom"], "1");
        assert_eq!(v["results"]["identity_atoms"][3]["infinite_index"], true);
        assert_eq!(run_args(&["example", "so3-so2", "--nmax", "13"]).code, 2);
    }

    #[test]
    fn helpers() {
        assert_eq!(split_labels("e, (12)(34),(1,10)"), vec!["e", "(12)(34)", "(1,10)"]);
        assert_eq!(fmt_complex(Complex64::new(-0.5, 1e-17)), "-5e-1");
        assert_eq!(fmt_complex(Complex64::new(-0.5, 0.25)), "-5e-1:2.5e-1");
        assert!(parse_multiplier::<Rational>("1/2").is_err());
        assert_eq!(parse_multiplier::<Rational>("3/2").ok(), Some(Rational::from_ratio(3, 2)));
        assert!(parse_values("1, 2:3", 2).is_ok());
        assert!(parse_values("1", 2).is_err());
    }
}
