//! End-to-end pipelines and their reports.
//!
//! `verify` runs parse → almost-contact → Kenmotsu → derived identities;
//! `analyze` additionally solves the soliton equation and classifies. Both
//! build their geometry tables through the same code path, so the tables
//! embedded in the two reports are identical for the same input.
//!
//! Structured output is JSON with sorted keys and rationals as `"a/b"`
//! strings. The exit code is a function of the report alone.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::checks::{CheckRecord, Status, VerificationReport};
use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::manifold::{parse_spec, FrameManifoldSpec};
use crate::scalar::Scalar;
use crate::soliton::{classify, solve_soliton_constants, ClassificationReport, RicciRecurrence, SolveOutcome, Variant};
use crate::tensor::{Bilinear02, FrameVector};
use crate::verify::{full_verification, is_kenmotsu};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "structured" | "json" => Ok(OutputFormat::Structured),
            _ => Err(format!("unknown format {s:?}; expected text or structured")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecEcho {
    pub name: String,
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<Scalar>,
}

/// `∇_{e_i} e_j`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectionEntry {
    pub i: usize,
    pub j: usize,
    pub value: FrameVector,
}

/// `R(e_i, e_j) e_k` for `i < j`, 1-based, nonzero entries only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvatureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: FrameVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeometryTables {
    pub connection: Vec<ConnectionEntry>,
    pub riemann: Vec<CurvatureEntry>,
    pub ricci: Bilinear02,
    pub scalar_curvature: Scalar,
}

impl GeometryTables {
    pub fn from_geometry(geo: &Geometry) -> Self {
        let n = geo.connection.dim();
        let mut connection = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                connection.push(ConnectionEntry { i: i + 1, j: j + 1, value: geo.connection.nabla_basis(i, j) });
            }
        }
        let mut riemann = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in 0..n {
                    let value = geo.curvature.riemann.vector(i, j, k);
                    if !value.is_zero() {
                        riemann.push(CurvatureEntry { i: i + 1, j: j + 1, k: k + 1, value });
                    }
                }
            }
        }
        GeometryTables {
            connection,
            riemann,
            ricci: geo.curvature.ricci.clone(),
            scalar_curvature: geo.curvature.scalar.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub passed: bool,
    pub exit_code: i32,
    pub summary: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub spec: SpecEcho,
    pub kenmotsu: bool,
    pub geometry: GeometryTables,
    pub identities: VerificationReport,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub spec: SpecEcho,
    pub variant: Variant,
    pub kenmotsu: bool,
    pub geometry: GeometryTables,
    pub identities: VerificationReport,
    pub soliton: SolveOutcome,
    pub classification: ClassificationReport,
    /// Relations stated for the three-dimensional example.
    pub instance_checks: Vec<CheckRecord>,
    pub verdict: Verdict,
}

struct Pipeline {
    spec: FrameManifoldSpec,
    geometry: Geometry,
    kenmotsu: bool,
    identities: VerificationReport,
}

impl Pipeline {
    fn run(spec: FrameManifoldSpec, force: bool) -> Result<Self> {
        let geometry = Geometry::compute(&spec)?;
        let kenmotsu = is_kenmotsu(&spec, &geometry.connection);
        let identities = full_verification(&spec, &geometry, force)?;
        Ok(Pipeline { spec, geometry, kenmotsu, identities })
    }

    fn echo(&self) -> SpecEcho {
        SpecEcho { name: self.spec.name().to_string(), dimension: self.spec.dim(), p: self.spec.p().cloned() }
    }
}

pub fn verify_spec(spec: FrameManifoldSpec, force: bool) -> Result<VerifyReport> {
    let run = Pipeline::run(spec, force)?;
    let passed = run.identities.all_pass();
    let failed: Vec<&str> = run.identities.failures().map(|r| r.id.as_str()).collect();
    let summary = if passed { "all identities hold".to_string() } else { format!("failing: {}", failed.join(", ")) };
    Ok(VerifyReport {
        spec: run.echo(),
        kenmotsu: run.kenmotsu,
        geometry: GeometryTables::from_geometry(&run.geometry),
        verdict: Verdict { passed, exit_code: exit_code_for(passed), summary },
        identities: run.identities,
    })
}

pub fn verify_document(document: &str, force: bool) -> Result<VerifyReport> {
    verify_spec(parse_spec(document)?, force)
}

/// `p_override` takes precedence over the document's `p`.
pub fn analyze_spec(
    spec: FrameManifoldSpec,
    p_override: Option<Scalar>,
    variant: Variant,
    force: bool,
) -> Result<AnalysisReport> {
    let spec = match p_override {
        Some(p) => spec.with_p(Some(p)),
        None => spec,
    };
    if variant.is_conformal() && spec.p().is_none() {
        return Err(Error::MissingConformalScalar { variant: variant.as_str() });
    }
    let run = Pipeline::run(spec, force)?;
    let spec = &run.spec;
    let geo = &run.geometry;
    let soliton = solve_soliton_constants(spec, &geo.curvature, &geo.derivatives.lie_xi_g, spec.p(), variant)?;
    let classification = classify(spec, geo, soliton.solution(), run.kenmotsu)?;

    let mut instance_checks = Vec::new();
    if let (Some(sol), 3, true) = (soliton.solution(), spec.dim(), variant.is_conformal()) {
        // r = 2λ + 2μ − 4 + P
        let params = &sol.parameters;
        let two = Scalar::from(2);
        let right = &two * &params.lambda + &two * &params.mu - Scalar::from(4) + sol.conformal_term.clone();
        instance_checks.push(CheckRecord::equality(
            "Eq 4.2",
            "r = 2λ + 2μ − 4 + (p + 2/3)",
            geo.curvature.scalar.clone(),
            right,
        ));
    }

    let mut problems = Vec::new();
    if let SolveOutcome::Infeasible(inf) = &soliton {
        problems.push(format!("no soliton: residual ({},{}) = {}", inf.slot.0, inf.slot.1, inf.value));
    }
    problems.extend(run.identities.failures().map(|r| r.id.clone()));
    problems.extend(classification.records.iter().filter(|r| r.failed()).map(|r| r.id.clone()));
    problems.extend(instance_checks.iter().filter(|r| r.failed()).map(|r| r.id.clone()));
    let passed = problems.is_empty();
    let summary = if passed {
        "soliton solved; all applicable checks hold".to_string()
    } else {
        format!("failing: {}", problems.join(", "))
    };

    Ok(AnalysisReport {
        spec: run.echo(),
        variant,
        kenmotsu: run.kenmotsu,
        geometry: GeometryTables::from_geometry(geo),
        identities: run.identities,
        soliton,
        classification,
        instance_checks,
        verdict: Verdict { passed, exit_code: exit_code_for(passed), summary },
    })
}

pub fn analyze_document(
    document: &str,
    p_override: Option<Scalar>,
    variant: Variant,
    force: bool,
) -> Result<AnalysisReport> {
    analyze_spec(parse_spec(document)?, p_override, variant, force)
}

fn exit_code_for(passed: bool) -> i32 {
    if passed {
        EXIT_PASS
    } else {
        EXIT_FAILURE
    }
}

/// Rebuilds every object with keys in sorted order, whatever map type
/// `serde_json` was compiled with.
fn canonicalize(value: Value) -> Value {
    match value {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, canonicalize(v))).collect())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonicalize).collect()),
        other => other,
    }
}

/// Deterministic structured rendering, newline-terminated.
pub fn to_structured<T: Serialize>(report: &T) -> String {
    let value = canonicalize(serde_json::to_value(report).expect("reports serialize"));
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out
}

fn signed(s: &Scalar) -> String {
    if s.is_negative() {
        format!("−{}", s.abs())
    } else {
        s.to_string()
    }
}

/// `−e3`, `e1 + 2/3 e2`, `0`.
pub fn format_vector(v: &FrameVector, basis: &str) -> String {
    let mut out = String::new();
    for (k, c) in v.components().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let name = format!("{basis}{}", k + 1);
        let mag = c.abs();
        let term = if mag.is_one() { name } else { format!("{mag} {name}") };
        if out.is_empty() {
            if c.is_negative() {
                out.push('−');
            }
        } else {
            out.push_str(if c.is_negative() { " − " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_scalars(xs: &[Scalar]) -> String {
    let parts: Vec<String> = xs.iter().map(signed).collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(", "))
    }
}

fn format_slot(slot: &[usize]) -> String {
    let parts: Vec<String> = slot.iter().map(|i| i.to_string()).collect();
    format!("({})", parts.join(","))
}

fn render_record(out: &mut String, r: &CheckRecord) {
    let tag = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    };
    let _ = writeln!(out, "  [{tag}] {:<8} {}", r.id, r.statement);
    if let Some(w) = &r.witness {
        let part = w.part.as_deref().map(|p| format!("{p}: ")).unwrap_or_default();
        let slot = if w.slot.is_empty() { String::new() } else { format!(" at {}", format_slot(&w.slot)) };
        let _ = writeln!(
            out,
            "           {part}witness{slot}: left {} ≠ right {}",
            format_scalars(&w.left),
            format_scalars(&w.right)
        );
    }
    if let Some(note) = &r.note {
        if r.status != Status::Pass || r.left.is_empty() {
            let _ = writeln!(out, "           {note}");
        }
    }
}

fn render_header(out: &mut String, spec: &SpecEcho, kenmotsu: bool) {
    let _ = writeln!(out, "manifold {} (dimension {})", spec.name, spec.dimension);
    if let Some(p) = &spec.p {
        let _ = writeln!(out, "conformal scalar p = {}", signed(p));
    }
    let _ = writeln!(out, "Kenmotsu: {}", if kenmotsu { "yes" } else { "no" });
}

fn render_matrix(out: &mut String, label: &str, m: &Bilinear02) {
    let n = m.dim();
    for i in 0..n {
        for j in 0..n {
            let _ = writeln!(out, "  {label}(e{},e{}) = {}", i + 1, j + 1, signed(&m[(i, j)]));
        }
    }
}

fn render_geometry(out: &mut String, g: &GeometryTables) {
    let _ = writeln!(out, "\nLevi-Civita connection");
    for e in &g.connection {
        let _ = writeln!(out, "  ∇_{{e{}}} e{} = {}", e.i, e.j, format_vector(&e.value, "e"));
    }
    let _ = writeln!(out, "\nRiemann curvature (nonzero R(ei,ej)ek, i < j)");
    if g.riemann.is_empty() {
        let _ = writeln!(out, "  all zero");
    }
    for e in &g.riemann {
        let _ = writeln!(out, "  R(e{},e{})e{} = {}", e.i, e.j, e.k, format_vector(&e.value, "e"));
    }
    let _ = writeln!(out, "\nRicci tensor");
    render_matrix(out, "S", &g.ricci);
    let _ = writeln!(out, "  r = {}", signed(&g.scalar_curvature));
}

fn render_identities(out: &mut String, v: &VerificationReport) {
    let _ = writeln!(out, "\nIdentities ({})", v.note);
    for r in &v.records {
        render_record(out, r);
    }
}

fn render_verdict(out: &mut String, v: &Verdict) {
    let _ = writeln!(out, "\nverdict: {} — {}", if v.passed { "PASS" } else { "FAIL" }, v.summary);
}

pub fn render_verify_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    render_header(&mut out, &report.spec, report.kenmotsu);
    render_geometry(&mut out, &report.geometry);
    render_identities(&mut out, &report.identities);
    render_verdict(&mut out, &report.verdict);
    out
}

pub fn render_analysis_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    render_header(&mut out, &report.spec, report.kenmotsu);
    render_geometry(&mut out, &report.geometry);
    render_identities(&mut out, &report.identities);

    let _ = writeln!(out, "\nSoliton ({})", report.variant);
    match &report.soliton {
        SolveOutcome::Solved(sol) => {
            let _ = writeln!(out, "  λ = {}", signed(&sol.parameters.lambda));
            let _ = writeln!(out, "  μ = {}", signed(&sol.parameters.mu));
            let _ = writeln!(out, "  conformal term = {}", signed(&sol.conformal_term));
            let _ = writeln!(out, "  residual: identically zero");
            let _ = writeln!(
                out,
                "  scalar relation r = P − 4n + 2λ + 2μ: {}",
                if sol.scalar_relation_check { "holds" } else { "does not hold" }
            );
        }
        SolveOutcome::Infeasible(inf) => {
            let _ = writeln!(
                out,
                "  infeasible: with λ = {}, μ = {} the residual at ({},{}) is {}",
                signed(&inf.lambda),
                signed(&inf.mu),
                inf.slot.0,
                inf.slot.1,
                signed(&inf.value)
            );
        }
    }

    let c = &report.classification;
    let _ = writeln!(out, "\nClassification");
    let yn = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(out, "  Ricci symmetric (∇S = 0): {}", yn(c.ricci_symmetric));
    let _ = write!(out, "  η-recurrent (∇S = η⊗S): {}", yn(c.eta_recurrent));
    if let Some(w) = &c.eta_recurrence_witness {
        let _ = write!(out, ", first mismatch at {}", format_slot(w));
    }
    let _ = writeln!(out);
    let _ = write!(out, "  cyclic Ricci tensor: {}", yn(c.cyclic_parallel));
    if let Some(w) = &c.cyclic_witness {
        let _ = write!(out, ", first nonzero at {}", format_slot(w));
    }
    let _ = writeln!(out);
    let rec = match &c.ricci_recurrence {
        RicciRecurrence::Recurrent { a } => {
            format!("recurrent with A = {}", format_vector(&FrameVector::new(a.components().to_vec()), "θ"))
        }
        RicciRecurrence::Parallel => "parallel Ricci, not recurrent".to_string(),
        RicciRecurrence::NotRecurrent { slot } => {
            format!("not recurrent (inconsistent at ({},{},{}))", slot.0, slot.1, slot.2)
        }
        RicciRecurrence::Undefined => "recurrence undefined (S = 0)".to_string(),
    };
    let _ = writeln!(out, "  Ricci recurrence: {rec}");
    let _ = writeln!(out, "  dη = 0: {}", yn(c.d_eta_zero));
    match c.eta_einstein.coefficients() {
        Some((a, b)) => {
            let _ = writeln!(out, "  η-Einstein: S = ({})g + ({})η⊗η", signed(a), signed(b));
        }
        None => {
            let _ = writeln!(out, "  η-Einstein: no");
        }
    }
    if let Some(ph) = &c.parallel_h {
        let _ = writeln!(
            out,
            "  h = £_ξ g + 2S + 2μη⊗η: ∇h = 0: {}, h(ξ,ξ) = {}, proportional to g: {}",
            yn(ph.nabla_h_zero),
            signed(&ph.h_xi_xi),
            yn(ph.proportional())
        );
    }
    let _ = writeln!(out, "\nCross-checks");
    for r in c.records.iter().chain(&report.instance_checks) {
        render_record(&mut out, r);
    }
    render_verdict(&mut out, &report.verdict);
    out
}
