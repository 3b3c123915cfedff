//! The `.hyp` text format.
//!
//! ```text
//! # comment
//! hypergroup v1
//! name: s3_mod_z2
//! note: free text
//! mode: exact
//! elements: e k
//! identity: e
//! involution: e->e k->k
//! constants:
//! k k : e=1/2 k=1/2
//! ```
//!
//! `name`, `note` and `mode` are optional. Without a `mode` line a file is
//! exact unless some coefficient is written as a decimal. Pairs involving
//! the identity may be omitted; every other ordered pair needs a line.
//! Omitted targets have coefficient 0.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::any::AnyHypergroup;
use crate::hypergroup::FiniteHypergroup;
use crate::scalar::{Rational, Scalar, DEFAULT_TOL};

use super::ParseError;

pub const HYP_HEADER: &str = "hypergroup v1";

/// A parsed `.hyp` file.
#[derive(Debug, Clone, PartialEq)]
pub struct HypFile {
    pub name: Option<String>,
    pub note: Option<String>,
    pub hypergroup: AnyHypergroup,
}

impl HypFile {
    pub fn new(hypergroup: impl Into<AnyHypergroup>) -> Self {
        HypFile { name: None, note: None, hypergroup: hypergroup.into() }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// A coefficient as written in the file.
#[derive(Debug, Clone)]
enum Coefficient {
    Exact(Rational),
    Decimal { text: String, exact: Rational },
}

impl Coefficient {
    fn rational(&self) -> Rational {
        match self {
            Coefficient::Exact(q) | Coefficient::Decimal { exact: q, .. } => q.clone(),
        }
    }

    fn float(&self) -> f64 {
        match self {
            Coefficient::Exact(q) => q.to_f64(),
            Coefficient::Decimal { text, .. } => text.parse().expect("validated decimal"),
        }
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, column, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter().map(|(i, t)| (text[..i].chars().count() + 1, t)).collect()
}

/// Parses `p`, `p/q` or a decimal such as `-1.25e-3`.
fn parse_coefficient(text: &str) -> Option<Coefficient> {
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.parse().ok()?;
        let q: BigInt = q.parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Coefficient::Exact(Rational::new(p, q)));
    }
    if let Ok(p) = text.parse::<BigInt>() {
        return Some(Coefficient::Exact(Rational::from_integer(p)));
    }
    let value: f64 = text.parse().ok()?;
    if !value.is_finite() {
        return None;
    }
    Some(Coefficient::Decimal { text: text.to_string(), exact: decimal_to_rational(text)? })
}

fn decimal_to_rational(text: &str) -> Option<Rational> {
    let (mantissa, exp) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let shift = exp - frac.len() as i32;
    let ten = BigInt::from(10u32);
    Some(if shift >= 0 {
        Rational::from_integer(digits * Pow::pow(&ten, shift as u32))
    } else {
        Rational::new(digits, Pow::pow(&ten, (-shift) as u32))
    })
}

fn validate_label(label: &str, line: usize, column: usize) -> Result<(), ParseError> {
    if label.is_empty() || label.contains(['=', ':', '#']) || label.contains("->") {
        return Err(syntax(line, column, format!("invalid element label {label:?}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Mode {
    Exact,
    Float,
}

/// A `constants:` row: its line and the `(z, coefficient)` pairs.
type Row = (usize, Vec<(usize, Coefficient)>);

struct Raw {
    name: Option<String>,
    note: Option<String>,
    mode: Option<Mode>,
    labels: Vec<String>,
    identity: usize,
    involution: Vec<usize>,
    entries: HashMap<(usize, usize), Row>,
}

fn parse_raw(text: &str) -> Result<Raw, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim_end()))
        .filter(|(_, l)| !l.trim().is_empty());

    match lines.next() {
        Some((_, l)) if l.trim() == HYP_HEADER => {}
        Some((n, _)) => return Err(syntax(n, 1, format!("expected header {HYP_HEADER:?}"))),
        None => return Err(syntax(1, 1, "empty file")),
    }

    let mut name = None;
    let mut note = None;
    let mut mode = None;
    let mut labels: Option<Vec<String>> = None;
    let mut identity: Option<(usize, usize, String)> = None;
    let mut involution_line: Option<(usize, String)> = None;
    let mut in_constants = false;
    let mut constant_lines: Vec<(usize, String)> = Vec::new();

    for (n, line) in lines {
        if in_constants {
            constant_lines.push((n, line.to_string()));
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(syntax(n, 1, format!("expected `key: value`, found {:?}", line.trim())));
        };
        let value_col = key.chars().count() + 2;
        match key.trim() {
            "name" => name = Some(value.trim().to_string()),
            "note" => note = Some(value.trim().to_string()),
            "mode" => {
                mode = Some(match value.trim() {
                    "exact" => Mode::Exact,
                    "float" => Mode::Float,
                    other => return Err(syntax(n, value_col, format!("unknown mode {other:?}"))),
                })
            }
            "elements" => {
                let mut seen = Vec::new();
                for (col, t) in tokens(value) {
                    validate_label(t, n, value_col + col - 1)?;
                    if seen.iter().any(|s| s == t) {
                        return Err(syntax(n, value_col + col - 1, format!("duplicate element {t:?}")));
                    }
                    seen.push(t.to_string());
                }
                if seen.is_empty() {
                    return Err(syntax(n, value_col, "no elements"));
                }
                labels = Some(seen);
            }
            "identity" => identity = Some((n, value_col, value.trim().to_string())),
            "involution" => involution_line = Some((n, value.to_string())),
            "constants" => {
                if !value.trim().is_empty() {
                    return Err(syntax(n, value_col, "constants start on the next line"));
                }
                in_constants = true;
            }
            other => return Err(syntax(n, 1, format!("unknown key {other:?}"))),
        }
    }

    let labels = labels.ok_or_else(|| syntax(1, 1, "missing `elements:` line"))?;
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let lookup = |label: &str, line: usize| {
        index.get(label).copied().ok_or_else(|| ParseError::UnknownLabel { label: label.to_string(), line })
    };

    let (id_line, _, id_label) = identity.ok_or_else(|| syntax(1, 1, "missing `identity:` line"))?;
    let identity = lookup(&id_label, id_line)?;

    let k = labels.len();
    let mut involution = vec![usize::MAX; k];
    let (inv_line, inv_text) = involution_line.ok_or_else(|| syntax(1, 1, "missing `involution:` line"))?;
    for (_, t) in tokens(&inv_text) {
        let (a, b) = t
            .split_once("->")
            .ok_or_else(|| ParseError::BadInvolution { line: inv_line, message: format!("expected `x->y`, found {t:?}") })?;
        let (a, b) = (lookup(a, inv_line)?, lookup(b, inv_line)?);
        if involution[a] != usize::MAX {
            return Err(ParseError::BadInvolution {
                line: inv_line,
                message: format!("{} mapped twice", labels[a]),
            });
        }
        involution[a] = b;
    }
    if let Some(x) = involution.iter().position(|&s| s == usize::MAX) {
        return Err(ParseError::BadInvolution { line: inv_line, message: format!("no image for {}", labels[x]) });
    }

    let mut entries = HashMap::new();
    for (n, line) in constant_lines {
        let Some((pair, rest)) = line.split_once(':') else {
            return Err(syntax(n, 1, "expected `x y : z=c ...`"));
        };
        let pair_tokens = tokens(pair);
        let [(_, x), (_, y)] = pair_tokens.as_slice() else {
            return Err(syntax(n, 1, "expected exactly two labels before `:`"));
        };
        let (x, y) = (lookup(x, n)?, lookup(y, n)?);
        let rest_col = pair.chars().count() + 2;
        let mut targets: Vec<(usize, Coefficient)> = Vec::new();
        for (col, t) in tokens(rest) {
            let col = rest_col + col - 1;
            let (z, c) = t.split_once('=').ok_or_else(|| syntax(n, col, format!("expected `z=c`, found {t:?}")))?;
            let z = lookup(z, n)?;
            if targets.iter().any(|(w, _)| *w == z) {
                return Err(syntax(n, col, format!("target {} listed twice", labels[z])));
            }
            let c = parse_coefficient(c).ok_or_else(|| syntax(n, col + t.find('=').unwrap() + 1, format!("bad coefficient {c:?}")))?;
            targets.push((z, c));
        }
        if entries.insert((x, y), (n, targets)).is_some() {
            return Err(syntax(n, 1, format!("pair {} {} listed twice", labels[x], labels[y])));
        }
    }

    Ok(Raw { name, note, mode, labels, identity, involution, entries })
}

fn build<S: Scalar>(raw: &Raw, value: impl Fn(&Coefficient) -> S) -> Vec<S> {
    let k = raw.labels.len();
    let mut constants = vec![S::zero(); k * k * k];
    for x in 0..k {
        for y in 0..k {
            let slot = (x * k + y) * k;
            match raw.entries.get(&(x, y)) {
                Some((_, targets)) => {
                    for (z, c) in targets {
                        constants[slot + z] = value(c);
                    }
                }
                None if x == raw.identity => constants[slot + y] = S::one(),
                None if y == raw.identity => constants[slot + x] = S::one(),
                None => {}
            }
        }
    }
    constants
}

fn row_sums_check<S: Scalar>(raw: &Raw, constants: &[S], tol: f64) -> Result<(), ParseError> {
    let k = raw.labels.len();
    for x in 0..k {
        for y in 0..k {
            let row = &constants[(x * k + y) * k..(x * k + y + 1) * k];
            let sum = row.iter().cloned().fold(S::zero(), |a, b| a + b);
            if !(sum.clone() - S::one()).is_negligible(tol) {
                return Err(ParseError::NonStochasticRow {
                    x: raw.labels[x].clone(),
                    y: raw.labels[y].clone(),
                    sum: sum.render(),
                    line: raw.entries.get(&(x, y)).map(|(n, _)| *n),
                });
            }
        }
    }
    Ok(())
}

fn assemble(text: &str, tol: f64, strict: bool) -> Result<HypFile, ParseError> {
    let raw = parse_raw(text)?;
    let decimals = raw
        .entries
        .values()
        .any(|(_, ts)| ts.iter().any(|(_, c)| matches!(c, Coefficient::Decimal { .. })));
    let mode = raw.mode.unwrap_or(if decimals { Mode::Float } else { Mode::Exact });
    let hypergroup: AnyHypergroup = match mode {
        Mode::Exact => {
            let constants = build(&raw, Coefficient::rational);
            finish(&raw, constants, 0.0, strict)?.into()
        }
        Mode::Float => {
            let constants = build(&raw, Coefficient::float);
            finish(&raw, constants, tol, strict)?.into()
        }
    };
    Ok(HypFile { name: raw.name, note: raw.note, hypergroup })
}

fn finish<S: Scalar>(raw: &Raw, constants: Vec<S>, tol: f64, strict: bool) -> Result<FiniteHypergroup<S>, ParseError> {
    let (labels, involution) = (raw.labels.clone(), raw.involution.clone());
    if strict {
        row_sums_check(raw, &constants, tol)?;
        Ok(FiniteHypergroup::new(labels, raw.identity, involution, constants, tol)?)
    } else {
        Ok(FiniteHypergroup::from_raw(labels, raw.identity, involution, constants, tol)?)
    }
}

/// Parses and validates a `.hyp` file with the default float tolerance.
pub fn parse_hyp(text: &str) -> Result<HypFile, ParseError> {
    parse_hyp_with_tol(text, DEFAULT_TOL)
}

/// Parses and validates a `.hyp` file; `tol` applies in float mode.
pub fn parse_hyp_with_tol(text: &str, tol: f64) -> Result<HypFile, ParseError> {
    assemble(text, tol, true)
}

/// Parses a `.hyp` file checking syntax and dimensions only, so that a
/// structurally broken hypergroup can still be handed to the verifier.
pub fn parse_hyp_unchecked(text: &str, tol: f64) -> Result<HypFile, ParseError> {
    assemble(text, tol, false)
}

/// Canonical serialization: elements in hypergroup order, pairs in
/// row-major order, identity pairs omitted when they are the implied Dirac
/// masses, zero coefficients omitted.
pub fn emit_hyp(file: &HypFile) -> String {
    crate::with_hypergroup!(&file.hypergroup, h => emit_generic(file, h))
}

fn emit_generic<S: Scalar>(file: &HypFile, h: &FiniteHypergroup<S>) -> String {
    let mut out = String::new();
    out.push_str(HYP_HEADER);
    out.push('\n');
    if let Some(name) = &file.name {
        out.push_str(&format!("name: {name}\n"));
    }
    if let Some(note) = &file.note {
        out.push_str(&format!("note: {}\n", note.replace('\n', " ")));
    }
    out.push_str(if S::EXACT { "mode: exact\n" } else { "mode: float\n" });
    out.push_str(&format!("elements: {}\n", h.labels().join(" ")));
    out.push_str(&format!("identity: {}\n", h.label(h.identity())));
    let inv: Vec<String> = (0..h.len()).map(|x| format!("{}->{}", h.label(x), h.label(h.sharp(x)))).collect();
    out.push_str(&format!("involution: {}\n", inv.join(" ")));
    out.push_str("constants:\n");
    let e = h.identity();
    for x in 0..h.len() {
        for y in 0..h.len() {
            let row: Vec<(usize, &S)> = h.row(x, y).collect();
            if x == e || y == e {
                let target = if x == e { y } else { x };
                if row.len() == 1 && row[0].0 == target && row[0].1.is_one() {
                    continue;
                }
            }
            let terms: Vec<String> = row.iter().map(|(z, c)| format!("{}={}", h.label(*z), c.render())).collect();
            out.push_str(&format!("{} {} : {}\n", h.label(x), h.label(y), terms.join(" ")).replace(" : \n", " :\n"));
        }
    }
    out
}
