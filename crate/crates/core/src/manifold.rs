//! Frame-homogeneous almost contact metric manifolds: the input model.
//!
//! A manifold is described by a global frame `e_1..e_n` with constant Lie
//! brackets `[e_i, e_j] = Σ_k c^k_{ij} e_k`, a constant frame metric `G`, and
//! constant components for `φ` and `ξ`. The 1-form `η` is always derived from
//! `G` and `ξ`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::checks::{Checker, VerificationReport};
use crate::error::{Error, Result};
use crate::linalg::spd_check;
use crate::scalar::Scalar;
use crate::tensor::{Bilinear02, Endomorphism11, FrameVector, OneForm};

/// Structure constants stored for `i < j` only; indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

/// A nonzero Jacobi sum. Indices are 1-based: the cyclic sum over `(i, j, l)`
/// has `e_k` component `sum`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub l: usize,
    pub k: usize,
    pub sum: Scalar,
}

impl StructureConstants {
    pub fn zero(dim: usize) -> Self {
        StructureConstants { dim, entries: BTreeMap::new() }
    }

    /// Builds from 0-based `(i, j, k, c^k_{ij})` entries. Entries with
    /// `i > j` are stored through antisymmetry; zero values are dropped.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>) -> Result<Self> {
        let mut out = Self::zero(dim);
        for (i, j, k, value) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Invariant(format!(
                    "structure constant index ({}, {}, {}) out of range for dimension {dim}",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if i == j {
                if value.is_zero() {
                    continue;
                }
                return Err(Error::Invariant(format!("[e_{0}, e_{0}] must vanish", i + 1)));
            }
            let (key, value) = if i < j { ((i, j, k), value) } else { ((j, i, k), -value) };
            if !value.is_zero() {
                out.entries.insert(key, value);
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c^k_{ij}` for any `i, j`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Scalar::zero(),
            Less => self.entries.get(&(i, j, k)).cloned().unwrap_or_default(),
            Greater => self.entries.get(&(j, i, k)).map(|v| -v).unwrap_or_default(),
        }
    }

    /// Stored entries `((i, j, k), value)` with `i < j`, 0-based, sorted.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.entries.iter()
    }

    pub fn is_abelian(&self) -> bool {
        self.entries.is_empty()
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> FrameVector {
        FrameVector::new((0..self.dim).map(|k| self.get(i, j, k)).collect())
    }

    /// `[X, Y]` for constant-coefficient vector fields.
    pub fn bracket(&self, x: &FrameVector, y: &FrameVector) -> FrameVector {
        let mut out = FrameVector::zeros(self.dim);
        for ((i, j, k), c) in &self.entries {
            // [x_i e_i + x_j e_j, y_i e_i + y_j e_j] picks up (x_i y_j - x_j y_i) c^k_{ij}
            let w = &x[*i] * &y[*j] - &x[*j] * &y[*i];
            if !w.is_zero() {
                out[*k] += &w * c;
            }
        }
        out
    }

    /// Checks the Jacobi identity for all triples.
    ///
    /// The cyclic sum is totally antisymmetric in `(i, j, l)`, so triples with
    /// `i < j < l` cover every case.
    pub fn jacobi_check(&self) -> std::result::Result<(), Vec<JacobiViolation>> {
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    for k in 0..n {
                        let sum: Scalar = (0..n)
                            .map(|m| {
                                &self.get(i, j, m) * &self.get(m, l, k)
                                    + &self.get(j, l, m) * &self.get(m, i, k)
                                    + &self.get(l, i, m) * &self.get(m, j, k)
                            })
                            .sum();
                        if !sum.is_zero() {
                            violations.push(JacobiViolation { i: i + 1, j: j + 1, l: l + 1, k: k + 1, sum });
                        }
                    }
                }
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }
}

/// Free-function form of [`StructureConstants::jacobi_check`].
pub fn jacobi_check(c: &StructureConstants) -> std::result::Result<(), Vec<JacobiViolation>> {
    c.jacobi_check()
}

/// `η_a = Σ_b G_ab ξ_b`, required to satisfy `η(ξ) = 1`.
pub fn eta_from_xi(metric: &Bilinear02, xi: &FrameVector) -> Result<OneForm> {
    let eta = metric.contract_right(xi);
    let norm = eta.apply(xi);
    if !norm.is_one() {
        return Err(Error::Invariant(format!("g(ξ,ξ) ≠ 1 (got {norm})")));
    }
    Ok(eta)
}

/// A validated frame-homogeneous almost contact metric manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameManifoldSpec {
    name: String,
    metric: Bilinear02,
    constants: StructureConstants,
    phi: Endomorphism11,
    xi: FrameVector,
    eta: OneForm,
    p: Option<Scalar>,
}

impl FrameManifoldSpec {
    pub fn new(
        name: impl Into<String>,
        metric: Bilinear02,
        constants: StructureConstants,
        phi: Endomorphism11,
        xi: FrameVector,
        p: Option<Scalar>,
    ) -> Result<Self> {
        let n = metric.dim();
        if n < 3 || n % 2 == 0 {
            return Err(Error::Invariant(format!("dimension must be odd and at least 3, got {n}")));
        }
        if constants.dim() != n || phi.dim() != n || xi.dim() != n {
            return Err(Error::Invariant(format!("component dimensions disagree with the metric dimension {n}")));
        }
        spd_check(&metric).map_err(|f| Error::Invariant(format!("metric is not positive definite: {f}")))?;
        if let Err(v) = constants.jacobi_check() {
            let first = &v[0];
            return Err(Error::Invariant(format!(
                "Jacobi fails at ({},{},{},{}): cyclic sum {}",
                first.i, first.j, first.l, first.k, first.sum
            )));
        }
        let eta = eta_from_xi(&metric, &xi)?;
        Ok(FrameManifoldSpec { name: name.into(), metric, constants, phi, xi, eta, p })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    /// The `n` of a `(2n+1)`-dimensional manifold.
    pub fn half_dim(&self) -> usize {
        (self.dim() - 1) / 2
    }

    pub fn metric(&self) -> &Bilinear02 {
        &self.metric
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn phi(&self) -> &Endomorphism11 {
        &self.phi
    }

    pub fn xi(&self) -> &FrameVector {
        &self.xi
    }

    pub fn eta(&self) -> &OneForm {
        &self.eta
    }

    pub fn p(&self) -> Option<&Scalar> {
        self.p.as_ref()
    }

    pub fn with_p(mut self, p: Option<Scalar>) -> Self {
        self.p = p;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Serializes to the canonical document form; [`parse_spec`] inverts it.
    pub fn to_document(&self) -> String {
        let n = self.dim();
        let mut out = String::new();
        let scalar = |x: &Scalar| match x.to_i64() {
            Some(v) => v.to_string(),
            None => format!("\"{x}\""),
        };
        let matrix = |out: &mut String, rows: Vec<Vec<Scalar>>| {
            out.push_str("[\n");
            for (r, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(scalar).collect();
                let sep = if r + 1 < rows.len() { "," } else { "" };
                let _ = writeln!(out, "    [{}]{sep}", cells.join(", "));
            }
            out.push_str("  ]");
        };

        out.push_str("{\n");
        let _ = writeln!(out, "  \"name\": {},", serde_json::Value::String(self.name.clone()));
        let _ = writeln!(out, "  \"dimension\": {n},");
        out.push_str("  \"metric\": ");
        matrix(&mut out, self.metric.rows());
        out.push_str(",\n  \"structure_constants\": [");
        let entries: Vec<String> = self
            .constants
            .entries()
            .map(|((i, j, k), v)| {
                format!("    {{\"i\": {}, \"j\": {}, \"k\": {}, \"value\": {}}}", i + 1, j + 1, k + 1, scalar(v))
            })
            .collect();
        if entries.is_empty() {
            out.push(']');
        } else {
            let _ = write!(out, "\n{}\n  ]", entries.join(",\n"));
        }
        out.push_str(",\n  \"phi\": ");
        matrix(&mut out, self.phi.rows());
        let xi: Vec<String> = self.xi.components().iter().map(scalar).collect();
        let _ = write!(out, ",\n  \"xi\": [{}]", xi.join(", "));
        if let Some(p) = &self.p {
            let _ = write!(out, ",\n  \"p\": \"{p}\"");
        }
        out.push_str("\n}\n");
        out
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecDocument {
    name: String,
    dimension: usize,
    metric: Vec<Vec<Scalar>>,
    structure_constants: Vec<ConstantEntry>,
    phi: Vec<Vec<Scalar>>,
    xi: Vec<Scalar>,
    #[serde(default)]
    p: Option<Scalar>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstantEntry {
    i: usize,
    j: usize,
    k: usize,
    value: Scalar,
}

fn field_from_serde_message(path: &str, message: &str) -> String {
    if path != "." && !path.is_empty() {
        return path.to_string();
    }
    // Unknown and missing fields are reported against the parent object.
    message.split('`').nth(1).map(str::to_string).unwrap_or_else(|| "<document>".to_string())
}

fn check_square(field: &str, rows: &[Vec<Scalar>], n: usize) -> Result<()> {
    if rows.len() != n {
        return Err(Error::schema(field, format!("expected {n} rows, got {}", rows.len())));
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::schema(format!("{field}[{r}]"), format!("expected {n} entries, got {}", row.len())));
        }
    }
    Ok(())
}

/// Parses and validates a manifold document.
pub fn parse_spec(document: &str) -> Result<FrameManifoldSpec> {
    let de = &mut serde_json::Deserializer::from_str(document);
    let doc: SpecDocument = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let message = e.inner().to_string();
        Error::schema(field_from_serde_message(&path, &message), message)
    })?;

    let n = doc.dimension;
    if n == 0 {
        return Err(Error::schema("dimension", "must be positive"));
    }
    check_square("metric", &doc.metric, n)?;
    check_square("phi", &doc.phi, n)?;
    if doc.xi.len() != n {
        return Err(Error::schema("xi", format!("expected {n} entries, got {}", doc.xi.len())));
    }

    let mut seen = BTreeMap::new();
    for (idx, e) in doc.structure_constants.iter().enumerate() {
        let field = format!("structure_constants[{idx}]");
        for (name, v) in [("i", e.i), ("j", e.j), ("k", e.k)] {
            if v == 0 || v > n {
                return Err(Error::schema(format!("{field}.{name}"), format!("index {v} outside 1..={n}")));
            }
        }
        if e.i >= e.j {
            return Err(Error::schema(field, format!("requires i < j, got i={} j={}", e.i, e.j)));
        }
        if seen.insert((e.i, e.j, e.k), idx).is_some() {
            return Err(Error::schema(field, format!("duplicate entry for ({}, {}, {})", e.i, e.j, e.k)));
        }
    }

    let metric = Bilinear02::from_rows(doc.metric)?;
    let phi = Endomorphism11::from_rows(doc.phi)?;
    let constants = StructureConstants::from_entries(
        n,
        doc.structure_constants.into_iter().map(|e| (e.i - 1, e.j - 1, e.k - 1, e.value)),
    )?;
    FrameManifoldSpec::new(doc.name, metric, constants, phi, FrameVector::new(doc.xi), doc.p)
}

pub const EQ_2_1: &str = "φ²X = −X + η(X)ξ, η(ξ) = 1, η∘φ = 0, φξ = 0";
pub const EQ_2_2: &str = "g(φX,φY) = g(X,Y) − η(X)η(Y)";
pub const EQ_2_3: &str = "g(X,φY) = −g(φX,Y)";
pub const EQ_2_4: &str = "g(X,ξ) = η(X)";

/// Checks the almost contact metric axioms as exact matrix identities.
///
/// Produces the records `Eq 2.1` through `Eq 2.4`.
pub fn verify_almost_contact(spec: &FrameManifoldSpec) -> VerificationReport {
    let n = spec.dim();
    let phi = spec.phi();
    let g = spec.metric();
    let xi = spec.xi();
    let eta = spec.eta();

    let mut c = Checker::new("Eq 2.1", EQ_2_1);
    let phi2 = phi.compose(phi);
    let target = &(-&Endomorphism11::identity(n)) + &Endomorphism11::vector_times_form(xi, eta);
    for a in 0..n {
        for b in 0..n {
            c.compare(
                Some("φ² = −Id + ξ⊗η"),
                &[a, b],
                std::slice::from_ref(&phi2[(a, b)]),
                std::slice::from_ref(&target[(a, b)]),
            );
        }
    }
    c.compare(Some("η(ξ) = 1"), &[], &[eta.apply(xi)], &[Scalar::one()]);
    for b in 0..n {
        c.compare(Some("η∘φ = 0"), &[b], &[eta.apply(&phi.column(b))], &[Scalar::zero()]);
    }
    let phi_xi = phi.apply(xi);
    for a in 0..n {
        c.compare(Some("φξ = 0"), &[a], std::slice::from_ref(&phi_xi[a]), &[Scalar::zero()]);
    }
    let eq21 = c.finish();

    let cols: Vec<FrameVector> = (0..n).map(|b| phi.column(b)).collect();
    let basis: Vec<FrameVector> = (0..n).map(|b| FrameVector::basis(n, b)).collect();

    let mut c = Checker::new("Eq 2.2", EQ_2_2);
    for i in 0..n {
        for j in 0..n {
            let left = g.eval(&cols[i], &cols[j]);
            let right = &g[(i, j)] - &eta[i] * &eta[j];
            c.compare(None, &[i, j], &[left], &[right]);
        }
    }
    let eq22 = c.finish();

    let mut c = Checker::new("Eq 2.3", EQ_2_3);
    for i in 0..n {
        for j in 0..n {
            let left = g.eval(&basis[i], &cols[j]);
            let right = -g.eval(&cols[i], &basis[j]);
            c.compare(None, &[i, j], &[left], &[right]);
        }
    }
    let eq23 = c.finish();

    let mut c = Checker::new("Eq 2.4", EQ_2_4);
    for i in 0..n {
        c.compare(None, &[i], &[g.eval(&basis[i], xi)], std::slice::from_ref(&eta[i]));
    }
    let eq24 = c.finish();

    VerificationReport::new(vec![eq21, eq22, eq23, eq24])
}
