//! Levi-Civita connection, curvature and derivative operators.
//!
//! Every component function in the model class is constant, so all terms of
//! the form `X(f)` vanish: the Koszul formula keeps only its bracket terms,
//! curvature needs no derivatives of `Γ`, and covariant derivatives of
//! constant tensors reduce to connection contractions.

use crate::error::{Error, Result};
use crate::linalg::invert;
use crate::manifold::FrameManifoldSpec;
use crate::scalar::Scalar;
use crate::tensor::{Bilinear02, Endomorphism11, FrameVector, OneForm, Tensor03, Tensor12, Tensor13};

/// `Γ^k_{ij}`, the `k`-th component of `∇_{e_i} e_j`, stored at `(i, j, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionCoefficients {
    gamma: Tensor12,
}

impl ConnectionCoefficients {
    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    /// `Γ^k_{ij}`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.gamma[(i, j, k)]
    }

    pub fn table(&self) -> &Tensor12 {
        &self.gamma
    }

    /// `∇_{e_i} e_j`.
    pub fn nabla_basis(&self, i: usize, j: usize) -> FrameVector {
        self.gamma.vector(i, j)
    }

    /// `∇_X Y` for constant-coefficient fields.
    pub fn nabla(&self, x: &FrameVector, y: &FrameVector) -> FrameVector {
        let n = self.dim();
        let mut out = FrameVector::zeros(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let w = &x[i] * &y[j];
                for k in 0..n {
                    out[k] += &w * &self.gamma[(i, j, k)];
                }
            }
        }
        out
    }

    /// The endomorphism `X ↦ ∇_X v`; column `i` is `∇_{e_i} v`.
    pub fn nabla_of(&self, v: &FrameVector) -> Endomorphism11 {
        let n = self.dim();
        Endomorphism11::from_fn(n, |k, i| (0..n).map(|j| &self.gamma[(i, j, k)] * &v[j]).sum())
    }
}

fn engine(msg: String) -> Error {
    Error::Engine(msg)
}

/// Solves the Koszul formula with constant metric:
/// `2 g(∇_{e_i} e_j, e_k) = −g(e_i,[e_j,e_k]) − g(e_j,[e_i,e_k]) + g(e_k,[e_i,e_j])`,
/// then raises the last index with `G⁻¹`.
pub fn koszul_connection(spec: &FrameManifoldSpec) -> Result<ConnectionCoefficients> {
    let n = spec.dim();
    let g = spec.metric();
    let c = spec.constants();
    let g_inv = invert(g)?;
    let half = Scalar::ratio(1, 2)?;

    // lowered[(a, b, l)] = g(e_l, [e_a, e_b])
    let lowered = Tensor03::from_fn(n, |a, b, l| (0..n).map(|m| &c.get(a, b, m) * &g[(m, l)]).sum());
    let first_kind = Tensor03::from_fn(n, |i, j, k| {
        let twice = &lowered[(i, j, k)] - &lowered[(j, k, i)] - &lowered[(i, k, j)];
        &twice * &half
    });
    let gamma = Tensor12::from_fn(n, |i, j, l| (0..n).map(|k| &g_inv[(l, k)] * &first_kind[(i, j, k)]).sum());
    let conn = ConnectionCoefficients { gamma };

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if conn.get(i, j, k) - conn.get(j, i, k) != c.get(i, j, k) {
                    return Err(engine(format!("connection has torsion at ({i},{j},{k})")));
                }
                let compat: Scalar =
                    (0..n).map(|l| conn.get(i, k, l) * &g[(l, j)] + conn.get(i, j, l) * &g[(l, k)]).sum();
                if !compat.is_zero() {
                    return Err(engine(format!("connection not metric at ({i},{j},{k})")));
                }
            }
        }
    }
    Ok(conn)
}

/// `R^l_{ijk} = Σ_m (Γ^m_{jk} Γ^l_{im} − Γ^m_{ik} Γ^l_{jm} − c^m_{ij} Γ^l_{mk})`,
/// i.e. `R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]} Z` on frame vectors.
pub fn riemann_tensor(spec: &FrameManifoldSpec, conn: &ConnectionCoefficients) -> Result<Tensor13> {
    let n = spec.dim();
    let c = spec.constants();
    let r = Tensor13::from_fn(n, |i, j, k, l| {
        (0..n)
            .map(|m| {
                conn.get(j, k, m) * conn.get(i, m, l)
                    - conn.get(i, k, m) * conn.get(j, m, l)
                    - &c.get(i, j, m) * conn.get(m, k, l)
            })
            .sum()
    });
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if r[(i, j, k, l)] != -&r[(j, i, k, l)] {
                        return Err(engine(format!("curvature not antisymmetric at ({i},{j},{k},{l})")));
                    }
                }
            }
        }
    }
    Ok(r)
}

/// `S(Y,Z) = Σ_{ab} G^{ab} g(R(e_a,Y)Z, e_b)` and `r = Σ_{ab} G^{ab} S_ab`.
pub fn ricci_and_scalar(spec: &FrameManifoldSpec, riemann: &Tensor13) -> Result<(Bilinear02, Scalar)> {
    let n = spec.dim();
    let g = spec.metric();
    let g_inv = invert(g)?;
    let ricci = Bilinear02::from_fn(n, |y, z| {
        let mut acc = Scalar::zero();
        for a in 0..n {
            for b in 0..n {
                if g_inv[(a, b)].is_zero() {
                    continue;
                }
                let lowered: Scalar = (0..n).map(|l| &riemann[(a, y, z, l)] * &g[(l, b)]).sum();
                acc += &g_inv[(a, b)] * &lowered;
            }
        }
        acc
    });
    if let Some((i, j)) = ricci.asymmetry() {
        return Err(engine(format!("Ricci tensor not symmetric at ({i},{j})")));
    }
    let scalar = ricci.trace_with(&g_inv);
    Ok((ricci, scalar))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvaturePackage {
    pub riemann: Tensor13,
    pub ricci: Bilinear02,
    pub scalar: Scalar,
}

impl CurvaturePackage {
    pub fn compute(spec: &FrameManifoldSpec, conn: &ConnectionCoefficients) -> Result<Self> {
        let riemann = riemann_tensor(spec, conn)?;
        let (ricci, scalar) = ricci_and_scalar(spec, &riemann)?;
        Ok(CurvaturePackage { riemann, ricci, scalar })
    }

    /// `g(R(e_i,e_j)e_k, e_l)`.
    pub fn lowered(&self, metric: &Bilinear02, i: usize, j: usize, k: usize, l: usize) -> Scalar {
        let n = metric.dim();
        (0..n).map(|m| &self.riemann[(i, j, k, m)] * &metric[(m, l)]).sum()
    }
}

/// `(∇_{e_i} T)(e_j, e_k) = −Σ_m (Γ^m_{ij} T_mk + Γ^m_{ik} T_jm)` for constant `T`.
pub fn covariant_derivative_bilinear(conn: &ConnectionCoefficients, t: &Bilinear02) -> Tensor03 {
    let n = conn.dim();
    Tensor03::from_fn(n, |i, j, k| {
        -(0..n).map(|m| conn.get(i, j, m) * &t[(m, k)] + conn.get(i, k, m) * &t[(j, m)]).sum::<Scalar>()
    })
}

/// `(∇_{e_i} ω)(e_j) = −Σ_m Γ^m_{ij} ω_m` for constant `ω`.
pub fn covariant_derivative_oneform(conn: &ConnectionCoefficients, omega: &OneForm) -> Bilinear02 {
    let n = conn.dim();
    Bilinear02::from_fn(n, |i, j| -(0..n).map(|m| conn.get(i, j, m) * &omega[m]).sum::<Scalar>())
}

/// `(∇_{e_i} φ) e_j = ∇_{e_i}(φ e_j) − φ(∇_{e_i} e_j)`, stored at `(i, j, k)`
/// as the `k`-th component.
pub fn covariant_derivative_phi(conn: &ConnectionCoefficients, phi: &Endomorphism11) -> Tensor12 {
    let n = conn.dim();
    Tensor12::from_fn(n, |i, j, k| {
        (0..n).map(|m| conn.get(i, m, k) * &phi[(m, j)] - conn.get(i, j, m) * &phi[(k, m)]).sum()
    })
}

/// `(£_V g)(e_i, e_j) = g(∇_{e_i} V, e_j) + g(e_i, ∇_{e_j} V)` for constant `V`.
pub fn lie_derivative_metric_along(
    spec: &FrameManifoldSpec,
    conn: &ConnectionCoefficients,
    v: &FrameVector,
) -> Bilinear02 {
    let n = spec.dim();
    let g = spec.metric();
    let nabla_v = conn.nabla_of(v);
    let lowered = Bilinear02::from_fn(n, |i, j| (0..n).map(|k| &nabla_v[(k, i)] * &g[(k, j)]).sum());
    &lowered + &lowered.transpose()
}

/// `£_ξ g`.
pub fn lie_derivative_metric(spec: &FrameManifoldSpec, conn: &ConnectionCoefficients) -> Bilinear02 {
    lie_derivative_metric_along(spec, conn, spec.xi())
}

/// `dη(X,Y) = ½[(∇_X η)Y − (∇_Y η)X]`.
pub fn exterior_derivative_eta(conn: &ConnectionCoefficients, eta: &OneForm) -> Bilinear02 {
    let nabla_eta = covariant_derivative_oneform(conn, eta);
    antisymmetrize_half(&nabla_eta)
}

fn antisymmetrize_half(t: &Bilinear02) -> Bilinear02 {
    let half = Scalar::ratio(1, 2).expect("nonzero denominator");
    Bilinear02::from_fn(t.dim(), |i, j| &(&t[(i, j)] - &t[(j, i)]) * &half)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativePackage {
    pub nabla_s: Tensor03,
    pub nabla_eta: Bilinear02,
    pub nabla_phi: Tensor12,
    pub lie_xi_g: Bilinear02,
    pub d_eta: Bilinear02,
}

impl DerivativePackage {
    pub fn compute(
        spec: &FrameManifoldSpec,
        conn: &ConnectionCoefficients,
        curvature: &CurvaturePackage,
    ) -> Result<Self> {
        let nabla_eta = covariant_derivative_oneform(conn, spec.eta());
        let d_eta = antisymmetrize_half(&nabla_eta);
        if d_eta != -&d_eta.transpose() {
            return Err(engine("dη is not antisymmetric".into()));
        }
        Ok(DerivativePackage {
            nabla_s: covariant_derivative_bilinear(conn, &curvature.ricci),
            nabla_eta,
            nabla_phi: covariant_derivative_phi(conn, spec.phi()),
            lie_xi_g: lie_derivative_metric(spec, conn),
            d_eta,
        })
    }
}

/// Connection, curvature and derivatives of one spec, computed once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Geometry {
    pub connection: ConnectionCoefficients,
    pub curvature: CurvaturePackage,
    pub derivatives: DerivativePackage,
}

impl Geometry {
    pub fn compute(spec: &FrameManifoldSpec) -> Result<Self> {
        let connection = koszul_connection(spec)?;
        let curvature = CurvaturePackage::compute(spec, &connection)?;
        let derivatives = DerivativePackage::compute(spec, &connection, &curvature)?;
        Ok(Geometry { connection, curvature, derivatives })
    }
}
