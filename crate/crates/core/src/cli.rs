//! Configuration and rendering behind the `rwps` binary.
//!
//! A run is described by a JSON [`RunConfig`]. [`run`] computes the requested
//! artifact and renders it as text, CSV, JSON or LaTeX. JSON artifacts parse
//! back into the structures they were rendered from.
//!
//! Exit status: 0 on success, 1 when a characterization finds a failing
//! condition, 2 on invalid input, 3 when the library detects an internal
//! inconsistency.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::characterize::{
    characterization_report, CharacterizationReport, Condition, KappaMode, Verdict,
};
use crate::cheb::{ChebPoly, FieldPoly};
use crate::error::{Error, Result};
use crate::expansion::{pq_tables, sieved_poly_expansion, ExpansionTables};
use crate::family::{random_table, FamilySpec};
use crate::operators::{apply_ak, apply_dk, fourier_table, FourierTable};
use crate::rational::{self, format_rational, Rational};
use crate::scalar::{
    field_label, minimal_polynomial, number_field, theta_label, FieldElement, Scalar,
};
use crate::sequence::polynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Horizon used by `characterize` when none is given.
pub const DEFAULT_HORIZON: usize = 24;

/// Length of a `{"kind": "random"}` table when `len` is omitted.
pub const DEFAULT_RANDOM_LEN: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Expand,
    Operator,
    Fourier,
    Characterize,
    Minpoly,
    Tables,
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(Value::String(s.to_string()))
            .map_err(|_| Error::Parse(format!("unknown command {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(Value::String(s.to_string()))
            .map_err(|_| Error::Parse(format!("unknown format {s:?}")))
    }
}

/// One run of the tool.
///
/// `expand` needs `family`, `k`, `m`; `operator` needs `family`, `k`, `n`;
/// `fourier` needs `family`, `k`, `n`; `tables` needs `family`, `n`;
/// `characterize` needs `family`, `k` and takes `horizon` and `mode`;
/// `minpoly` needs `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horizon: Option<usize>,
    #[serde(default)]
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<KappaMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn config_error(path: &str, message: impl Into<String>) -> Error {
    Error::Config {
        path: path.to_string(),
        message: message.into(),
    }
}

fn required<T: Copy>(value: Option<T>, path: &str, command: Command) -> Result<T> {
    value.ok_or_else(|| config_error(path, format!("required by {command:?}").to_lowercase()))
}

impl RunConfig {
    /// Checks that the fields required by the command are present and valid.
    pub fn validate(&self) -> Result<()> {
        let c = self.command;
        if let Some(0) = self.k {
            return Err(config_error("k", "k must be a positive integer"));
        }
        let needs_family = c != Command::Minpoly;
        if needs_family {
            let family = self.family.as_ref().ok_or_else(|| {
                config_error("family", format!("required by {c:?}").to_lowercase())
            })?;
            family
                .validate()
                .map_err(|e| config_error("family", e.to_string()))?;
            family
                .coeff_c(1)
                .map_err(|e| config_error("family", e.to_string()))?;
        }
        match c {
            Command::Expand => {
                required(self.k, "k", c)?;
                required(self.m, "m", c)?;
            }
            Command::Operator | Command::Fourier => {
                required(self.k, "k", c)?;
                required(self.n, "n", c)?;
            }
            Command::Tables => {
                required(self.n, "n", c)?;
            }
            Command::Characterize => {
                required(self.k, "k", c)?;
                if self.horizon == Some(0) {
                    return Err(config_error("horizon", "horizon must be positive"));
                }
            }
            Command::Minpoly => {
                required(self.k, "k", c)?;
            }
        }
        Ok(())
    }
}

/// Replaces every `{"kind": "random", "len": L}` by a table of `L` random
/// coefficients drawn from a generator seeded with `seed`.
fn resolve_random(value: &mut Value, rng: &mut ChaCha8Rng, path: &str) -> Result<()> {
    let Value::Object(map) = value else {
        return Ok(());
    };
    if map.get("kind").and_then(Value::as_str) == Some("random") {
        let len = match map.get("len") {
            None => DEFAULT_RANDOM_LEN,
            Some(v) => v.as_u64().ok_or_else(|| {
                config_error(&format!("{path}.len"), "expected a nonnegative integer")
            })? as usize,
        };
        if let Some(extra) = map
            .keys()
            .find(|key| !matches!(key.as_str(), "kind" | "len"))
        {
            return Err(config_error(&format!("{path}.{extra}"), "unknown field"));
        }
        *value = serde_json::to_value(random_table(rng, len)).expect("family specs serialize");
        return Ok(());
    }
    for (key, child) in map.iter_mut() {
        resolve_random(child, rng, &format!("{path}.{key}"))?;
    }
    Ok(())
}

fn config_from_value(mut value: Value) -> Result<RunConfig> {
    let seed = value.get("seed").and_then(Value::as_u64).unwrap_or(0);
    if let Some(family) = value.get_mut("family") {
        resolve_random(family, &mut ChaCha8Rng::seed_from_u64(seed), "family")?;
    }
    let config: RunConfig = serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        config_error(&path, e.inner().to_string())
    })?;
    config.validate()?;
    Ok(config)
}

/// Parses and validates a JSON config.
pub fn parse_config(text: &[u8]) -> Result<RunConfig> {
    let value: Value =
        serde_json::from_slice(text).map_err(|e| config_error(".", e.to_string()))?;
    config_from_value(value)
}

/// Merges `overrides` into an optional JSON config, then parses the result.
pub fn config_with_overrides(
    base: Option<&[u8]>,
    overrides: Map<String, Value>,
) -> Result<RunConfig> {
    let mut value = match base {
        Some(text) => serde_json::from_slice(text).map_err(|e| config_error(".", e.to_string()))?,
        None => Value::Object(Map::new()),
    };
    let Value::Object(map) = &mut value else {
        return Err(config_error(".", "config must be a JSON object"));
    };
    map.extend(overrides);
    config_from_value(value)
}

/// The exit status for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InternalConsistency { .. }
        | Error::Internal(_)
        | Error::DivisionByZero
        | Error::FieldMismatch { .. } => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

/// A term `coeff · T_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalTerm {
    pub degree: usize,
    #[serde(with = "rational::serde_str")]
    pub coeff: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldTerm {
    pub degree: usize,
    pub coeff: FieldElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandArtifact {
    pub family: FamilySpec,
    pub k: usize,
    pub m: usize,
    pub terms: Vec<RationalTerm>,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorArtifact {
    pub family: FamilySpec,
    pub k: usize,
    pub n: usize,
    pub field: String,
    pub theta: String,
    pub dk: Vec<FieldTerm>,
    pub ak: Vec<FieldTerm>,
    pub dk_display: String,
    pub ak_display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourierArtifact {
    pub family: FamilySpec,
    pub table: FourierTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesArtifact {
    pub family: FamilySpec,
    pub tables: ExpansionTables,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinpolyArtifact {
    pub k: usize,
    pub degree: usize,
    /// Ascending integer coefficients.
    pub coefficients: Vec<String>,
    pub polynomial: String,
    pub field: String,
    pub theta: String,
}

/// Everything a run can produce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "artifact", rename_all = "lowercase")]
pub enum Artifact {
    Expand(ExpandArtifact),
    Operator(OperatorArtifact),
    Fourier(FourierArtifact),
    Characterize(CharacterizationReport),
    Minpoly(MinpolyArtifact),
    Tables(TablesArtifact),
}

/// A rendered artifact and the exit status it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub artifact: Artifact,
    pub rendered: String,
    pub status: i32,
}

fn field_terms(p: &FieldPoly) -> Vec<FieldTerm> {
    p.terms()
        .rev()
        .map(|(degree, c)| FieldTerm {
            degree,
            coeff: c.clone(),
        })
        .collect()
}

/// Computes the artifact described by `config`.
pub fn compute(config: &RunConfig) -> Result<Artifact> {
    config.validate()?;
    let family = || config.family.clone().expect("validated");
    let k = || config.k.expect("validated");
    Ok(match config.command {
        Command::Expand => {
            let (k, m) = (k(), config.m.expect("validated"));
            let poly = sieved_poly_expansion(&family(), k, m)?;
            Artifact::Expand(ExpandArtifact {
                family: family(),
                k,
                m,
                terms: poly
                    .terms()
                    .rev()
                    .map(|(degree, c)| RationalTerm {
                        degree,
                        coeff: c.clone(),
                    })
                    .collect(),
                display: poly.to_string(),
            })
        }
        Command::Operator => {
            let (k, n) = (k(), config.n.expect("validated"));
            let p = polynomial(&family(), n)?;
            let (dk, ak) = (apply_dk(&p, k)?, apply_ak(&p, k)?);
            Artifact::Operator(OperatorArtifact {
                family: family(),
                k,
                n,
                field: field_label(k),
                theta: theta_label(k),
                dk: field_terms(&dk),
                ak: field_terms(&ak),
                dk_display: dk.to_string(),
                ak_display: ak.to_string(),
            })
        }
        Command::Fourier => {
            let table = fourier_table(&family(), k(), config.n.expect("validated"))?;
            Artifact::Fourier(FourierArtifact {
                family: family(),
                table: table.as_ref().clone(),
            })
        }
        Command::Characterize => {
            let horizon = config.horizon.unwrap_or(DEFAULT_HORIZON);
            let mut report = characterization_report(&family(), k(), horizon)?;
            match config.mode {
                Some(KappaMode::Full) => report
                    .conditions
                    .retain(|r| r.condition != Condition::KappaWeakened),
                Some(KappaMode::Weakened) => report
                    .conditions
                    .retain(|r| r.condition != Condition::KappaFull),
                None => {}
            }
            Artifact::Characterize(report)
        }
        Command::Minpoly => {
            let k = k();
            let mp = minimal_polynomial(k)?;
            Artifact::Minpoly(MinpolyArtifact {
                k,
                degree: mp.degree(),
                coefficients: mp.coefficients().iter().map(ToString::to_string).collect(),
                polynomial: mp.to_string(),
                field: field_label(k),
                theta: theta_label(k),
            })
        }
        Command::Tables => Artifact::Tables(TablesArtifact {
            family: family(),
            tables: pq_tables(&family(), config.n.expect("validated"))?,
        }),
    })
}

/// Computes and renders the artifact.
pub fn run(config: &RunConfig) -> Result<RunOutput> {
    let artifact = compute(config)?;
    let rendered = render(&artifact, config.format)?;
    let status = match &artifact {
        Artifact::Characterize(report) if !report.all_hold() => EXIT_FAILS,
        _ => EXIT_OK,
    };
    Ok(RunOutput {
        artifact,
        rendered,
        status,
    })
}

/// Renders an artifact in the given format.
pub fn render(artifact: &Artifact, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(artifact)
                .map_err(|e| Error::Internal(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => Ok(render_text(artifact)),
        Format::Csv => render_csv(artifact),
        Format::Latex => Ok(render_latex(artifact)),
    }
}

fn render_text(artifact: &Artifact) -> String {
    let mut out = String::new();
    match artifact {
        Artifact::Expand(a) => writeln!(out, "{}", a.display),
        Artifact::Operator(a) => writeln!(
            out,
            "D_{k} P_{n} = {}\nA_{k} P_{n} = {}\ntheta = {}",
            a.dk_display,
            a.ak_display,
            a.theta,
            k = a.k,
            n = a.n
        ),
        Artifact::Fourier(a) => {
            let t = &a.table;
            let _ = writeln!(out, "theta = {}", theta_label(t.k));
            for (name, table) in [("kappa", &t.kappa), ("alpha", &t.alpha)] {
                for (n, row) in table.iter().enumerate() {
                    for (j, v) in row.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        let _ = writeln!(out, "{name}_{n}({j}) = {v}  ~ {:.12}", v.to_f64());
                    }
                }
            }
            for (n, v) in t.sigma.iter().enumerate().skip(1) {
                let _ = writeln!(out, "sigma({n}) = {v}  ~ {:.12}", v.to_f64());
            }
            Ok(())
        }
        Artifact::Characterize(r) => write!(out, "{r}"),
        Artifact::Minpoly(a) => writeln!(out, "{}", a.polynomial),
        Artifact::Tables(a) => {
            let t = &a.tables;
            for n in 0..=t.n_max {
                let row =
                    |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(", ");
                let _ = writeln!(
                    out,
                    "n = {n}: r = [{}]  p = [{}]  q = [{}]",
                    row(&t.r[n]),
                    row(&t.p[n]),
                    row(&t.q[n])
                );
            }
            Ok(())
        }
    }
    .expect("writing to a String");
    out
}

fn coords_cell(v: &FieldElement) -> String {
    v.coords()
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_csv(artifact: &Artifact) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Internal(e.to_string());
    match artifact {
        Artifact::Expand(a) => {
            w.write_record(["m", "k", "degree", "coefficient"])
                .map_err(csv_err)?;
            for t in &a.terms {
                w.write_record([
                    a.m.to_string(),
                    a.k.to_string(),
                    t.degree.to_string(),
                    format_rational(&t.coeff),
                ])
                .map_err(csv_err)?;
            }
        }
        Artifact::Operator(a) => {
            w.write_record(["operator", "degree", "value", "coords", "decimal"])
                .map_err(csv_err)?;
            for (name, terms) in [("D", &a.dk), ("A", &a.ak)] {
                for t in terms {
                    w.write_record([
                        name.to_string(),
                        t.degree.to_string(),
                        t.coeff.to_string(),
                        coords_cell(&t.coeff),
                        format!("{:.12}", t.coeff.to_f64()),
                    ])
                    .map_err(csv_err)?;
                }
            }
        }
        Artifact::Fourier(a) => {
            let t = &a.table;
            w.write_record(["table", "n", "j", "value", "coords", "decimal"])
                .map_err(csv_err)?;
            let sigma: Vec<Vec<FieldElement>> = t.sigma.iter().map(|s| vec![s.clone()]).collect();
            for (name, table) in [("kappa", &t.kappa), ("alpha", &t.alpha), ("sigma", &sigma)] {
                for (n, row) in table.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        let j = if name == "sigma" {
                            n.saturating_sub(1)
                        } else {
                            j
                        };
                        w.write_record([
                            name.to_string(),
                            n.to_string(),
                            j.to_string(),
                            v.to_string(),
                            coords_cell(v),
                            format!("{:.12}", v.to_f64()),
                        ])
                        .map_err(csv_err)?;
                    }
                }
            }
        }
        Artifact::Characterize(r) => {
            w.write_record([
                "condition",
                "verdict",
                "n",
                "horizon",
                "value",
                "coords",
                "field",
                "detail",
            ])
            .map_err(csv_err)?;
            for c in &r.conditions {
                let row = match &c.verdict {
                    Verdict::Holds { horizon } => [
                        c.condition.wire_name().to_string(),
                        "holds".into(),
                        String::new(),
                        horizon.to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                    ],
                    Verdict::FailsAt { n, witness } => [
                        c.condition.wire_name().to_string(),
                        "fails".into(),
                        n.to_string(),
                        r.horizon.to_string(),
                        witness.value.to_string(),
                        coords_cell(&witness.value),
                        witness.value.field().label(),
                        witness.detail.clone(),
                    ],
                };
                w.write_record(row).map_err(csv_err)?;
            }
        }
        Artifact::Minpoly(a) => {
            w.write_record(["k", "power", "coefficient"])
                .map_err(csv_err)?;
            for (power, c) in a.coefficients.iter().enumerate() {
                w.write_record([a.k.to_string(), power.to_string(), c.clone()])
                    .map_err(csv_err)?;
            }
        }
        Artifact::Tables(a) => {
            let t = &a.tables;
            w.write_record(["table", "n", "j", "value"])
                .map_err(csv_err)?;
            for (name, table) in [("r", &t.r), ("p", &t.p), ("q", &t.q)] {
                for (n, row) in table.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        w.write_record([
                            name.to_string(),
                            n.to_string(),
                            j.to_string(),
                            format_rational(v),
                        ])
                        .map_err(csv_err)?;
                    }
                }
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

/// `p/q` as `\frac{p}{q}`, with the sign pulled out.
pub fn latex_rational(r: &Rational) -> String {
    let s = format_rational(&num_traits::Signed::abs(r));
    let body = match s.split_once('/') {
        Some((p, q)) => format!("\\frac{{{p}}}{{{q}}}"),
        None => s,
    };
    if num_traits::Signed::is_negative(r) {
        format!("-{body}")
    } else {
        body
    }
}

/// A field element over the power basis of `\theta`.
pub fn latex_field(v: &FieldElement) -> String {
    let mut out = String::new();
    for (i, c) in v.coords().iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let negative = num_traits::Signed::is_negative(c);
        let mag = num_traits::Signed::abs(c);
        let unit = num_traits::One::is_one(&mag) && i > 0;
        let coeff = if unit {
            String::new()
        } else {
            latex_rational(&mag)
        };
        let power = match i {
            0 => String::new(),
            1 => "\\theta".to_string(),
            _ => format!("\\theta^{{{i}}}"),
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&coeff);
        out.push_str(&power);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn latex_poly<S: Scalar>(p: &ChebPoly<S>, coeff: impl Fn(&S) -> String) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.terms()
        .rev()
        .map(|(d, c)| format!("\\left({}\\right) T_{{{d}}}", coeff(c)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn latex_triangle(out: &mut String, caption: &str, rows: &[Vec<String>]) {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0).max(1);
    let _ = writeln!(out, "% {caption}");
    let _ = writeln!(out, "\\begin{{tabular}}{{r|{}}}", "c".repeat(width));
    let header: Vec<String> = (0..width).map(|j| format!("$j={j}$")).collect();
    let _ = writeln!(out, "$n$ & {} \\\\ \\hline", header.join(" & "));
    for (n, row) in rows.iter().enumerate() {
        let mut cells: Vec<String> = row.iter().map(|c| format!("${c}$")).collect();
        cells.resize(width, String::new());
        let _ = writeln!(out, "{n} & {} \\\\", cells.join(" & "));
    }
    let _ = writeln!(out, "\\end{{tabular}}");
}

fn render_latex(artifact: &Artifact) -> String {
    let mut out = String::new();
    match artifact {
        Artifact::Expand(a) => {
            let terms: Vec<String> = a
                .terms
                .iter()
                .map(|t| format!("{} T_{{{}}}(x)", latex_rational(&t.coeff), t.degree))
                .collect();
            let _ = writeln!(
                out,
                "P_{{{}}}(x;{}) = {}",
                a.m,
                a.k,
                terms.join(" + ").replace("+ -", "- ")
            );
        }
        Artifact::Operator(a) => {
            let field = number_field(a.k).expect("k validated");
            let poly = |terms: &[FieldTerm]| {
                FieldPoly::from_terms_in(&field, terms.iter().map(|t| (t.degree, t.coeff.clone())))
            };
            let _ = writeln!(out, "% \\theta = 2\\cos(\\pi/{})", a.k);
            let _ = writeln!(
                out,
                "\\mathrm{{D}}_{{{}}} P_{{{}}}(x) = {}",
                a.k,
                a.n,
                latex_poly(&poly(&a.dk), latex_field)
            );
            let _ = writeln!(
                out,
                "\\mathrm{{A}}_{{{}}} P_{{{}}}(x) = {}",
                a.k,
                a.n,
                latex_poly(&poly(&a.ak), latex_field)
            );
        }
        Artifact::Fourier(a) => {
            let t = &a.table;
            let _ = writeln!(out, "% \\theta = 2\\cos(\\pi/{})", t.k);
            let cells = |table: &[Vec<FieldElement>]| -> Vec<Vec<String>> {
                table
                    .iter()
                    .map(|row| row.iter().map(latex_field).collect())
                    .collect()
            };
            latex_triangle(&mut out, "kappa_n(j;k)", &cells(&t.kappa));
            latex_triangle(&mut out, "alpha_n(j;k)", &cells(&t.alpha));
            let sigma: Vec<Vec<String>> = t.sigma.iter().map(|s| vec![latex_field(s)]).collect();
            latex_triangle(&mut out, "sigma(n;k)", &sigma);
        }
        Artifact::Characterize(r) => {
            let _ = writeln!(out, "% k = {}, horizon = {}", r.k, r.horizon);
            let _ = writeln!(out, "\\begin{{tabular}}{{lll}}");
            let _ = writeln!(out, "condition & verdict & witness \\\\ \\hline");
            for c in &r.conditions {
                let (verdict, witness) = match &c.verdict {
                    Verdict::Holds { horizon } => (format!("holds up to {horizon}"), String::new()),
                    Verdict::FailsAt { n, witness } => (
                        format!("fails at {n}"),
                        format!("${}$", latex_field(&witness.value)),
                    ),
                };
                let _ = writeln!(
                    out,
                    "\\texttt{{{}}} & {verdict} & {witness} \\\\",
                    c.condition.wire_name()
                );
            }
            let _ = writeln!(out, "\\end{{tabular}}");
        }
        Artifact::Minpoly(a) => {
            let _ = writeln!(out, "{}", a.polynomial);
        }
        Artifact::Tables(a) => {
            let t = &a.tables;
            let cells = |table: &[Vec<Rational>]| -> Vec<Vec<String>> {
                table
                    .iter()
                    .map(|row| row.iter().map(latex_rational).collect())
                    .collect()
            };
            latex_triangle(&mut out, "r_n(j)", &cells(&t.r));
            latex_triangle(&mut out, "p_n(j)", &cells(&t.p));
            latex_triangle(&mut out, "q_n(j)", &cells(&t.q));
        }
    }
    out
}
