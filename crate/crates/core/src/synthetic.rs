//! Programmatic specs: simple Lie algebras in an orthonormal frame, and
//! rational changes of frame that move them off the standard form.
//!
//! The base frame `f` has the standard φ (`φf_{2k−1} = −f_{2k}`,
//! `φf_{2k} = f_{2k−1}`) and `ξ = f_dim`. A frame change keeps the
//! geometry intact, so Kenmotsu status, curvature invariants and soliton
//! constants are preserved while every table becomes dense.

use crate::error::{Error, Result};
use crate::linalg::invert;
use crate::manifold::{FrameManifoldSpec, StructureConstants};
use crate::scalar::Scalar;
use crate::tensor::{Bilinear02, Endomorphism11, FrameVector};

/// Bracket structures on the base frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseAlgebra {
    /// `[f_i, ξ] = Σ_k M_{ki} f_k` for `i < dim`, other brackets zero.
    /// `M` is `(dim−1)×(dim−1)`; `M = I` is hyperbolic space, which is Kenmotsu.
    Semidirect(Vec<Vec<Scalar>>),
    /// `[f_{2k−1}, f_{2k}] = ξ`.
    Heisenberg,
    /// `so(3)`, three-dimensional only.
    So3,
    Abelian,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim < 3 || dim % 2 == 0 {
        return Err(Error::Invariant(format!("dimension must be odd and at least 3, got {dim}")));
    }
    Ok(())
}

fn standard_phi(dim: usize) -> Endomorphism11 {
    Endomorphism11::from_fn(dim, |a, b| {
        // column b is φ(f_b)
        if b + 1 == dim {
            Scalar::zero()
        } else if b % 2 == 0 && a == b + 1 {
            -Scalar::one()
        } else if b % 2 == 1 && a + 1 == b {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

fn constants_for(dim: usize, algebra: &BaseAlgebra) -> Result<StructureConstants> {
    let last = dim - 1;
    let mut entries = Vec::new();
    match algebra {
        BaseAlgebra::Semidirect(m) => {
            if m.len() != last || m.iter().any(|r| r.len() != last) {
                return Err(Error::Invariant(format!("semidirect block must be {last}×{last}")));
            }
            for i in 0..last {
                for (k, row) in m.iter().enumerate() {
                    if !row[i].is_zero() {
                        entries.push((i, last, k, row[i].clone()));
                    }
                }
            }
        }
        BaseAlgebra::Heisenberg => {
            for k in (0..last).step_by(2) {
                entries.push((k, k + 1, last, Scalar::one()));
            }
        }
        BaseAlgebra::So3 => {
            if dim != 3 {
                return Err(Error::Invariant("so(3) is three-dimensional".into()));
            }
            entries.push((0, 1, 2, Scalar::one()));
            entries.push((1, 2, 0, Scalar::one()));
            entries.push((0, 2, 1, -Scalar::one()));
        }
        BaseAlgebra::Abelian => {}
    }
    StructureConstants::from_entries(dim, entries)
}

/// The algebra in the orthonormal base frame.
pub fn base_spec(name: &str, dim: usize, algebra: &BaseAlgebra) -> Result<FrameManifoldSpec> {
    check_dim(dim)?;
    let constants = constants_for(dim, algebra)?;
    FrameManifoldSpec::new(
        name,
        Bilinear02::identity(dim),
        constants,
        standard_phi(dim),
        FrameVector::basis(dim, dim - 1),
        None,
    )
}

/// `M = a·I`: hyperbolic space when `a = 1`, Einstein but not Kenmotsu otherwise.
pub fn scaled_hyperbolic(dim: usize, a: Scalar) -> Result<FrameManifoldSpec> {
    check_dim(dim)?;
    let m =
        (0..dim - 1).map(|i| (0..dim - 1).map(|j| if i == j { a.clone() } else { Scalar::zero() }).collect()).collect();
    base_spec(&format!("semidirect-{dim}"), dim, &BaseAlgebra::Semidirect(m))
}

/// Hyperbolic space of dimension `dim` in its standard Kenmotsu frame.
pub fn hyperbolic(dim: usize) -> Result<FrameManifoldSpec> {
    Ok(scaled_hyperbolic(dim, Scalar::one())?.with_name(format!("hyperbolic-{dim}")))
}

/// Re-expresses `spec` in the frame `e'_i = Σ_a P_{ai} e_a`.
///
/// `c'^l_{ij} = Σ P_{ai} P_{bj} c^k_{ab} (P⁻¹)_{lk}`, `G' = PᵀGP`,
/// `ξ' = P⁻¹ξ`, `φ' = P⁻¹φP`.
pub fn change_frame(spec: &FrameManifoldSpec, p: &[Vec<Scalar>]) -> Result<FrameManifoldSpec> {
    let n = spec.dim();
    let pm = Bilinear02::from_rows(p.to_vec())?;
    if pm.dim() != n {
        return Err(Error::Invariant(format!("frame change must be {n}×{n}")));
    }
    let pinv = invert(&pm)?;
    let g = spec.metric();
    let c = spec.constants();

    let metric = Bilinear02::from_fn(n, |i, j| {
        let mut acc = Scalar::zero();
        for a in 0..n {
            for b in 0..n {
                acc += &(&pm[(a, i)] * &g[(a, b)]) * &pm[(b, j)];
            }
        }
        acc
    });

    // brackets of the new basis, in old components
    let mut entries = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let ei = FrameVector::new((0..n).map(|a| pm[(a, i)].clone()).collect());
            let ej = FrameVector::new((0..n).map(|a| pm[(a, j)].clone()).collect());
            let old = c.bracket(&ei, &ej);
            for l in 0..n {
                let v: Scalar = (0..n).map(|k| &pinv[(l, k)] * &old[k]).sum();
                if !v.is_zero() {
                    entries.push((i, j, l, v));
                }
            }
        }
    }
    let constants = StructureConstants::from_entries(n, entries)?;

    let phi = spec.phi();
    let phi_new = Endomorphism11::from_fn(n, |a, b| {
        let mut acc = Scalar::zero();
        for x in 0..n {
            for y in 0..n {
                acc += &(&pinv[(a, x)] * &phi[(x, y)]) * &pm[(y, b)];
            }
        }
        acc
    });
    let xi = FrameVector::new((0..n).map(|l| (0..n).map(|k| &pinv[(l, k)] * &spec.xi()[k]).sum()).collect());

    FrameManifoldSpec::new(spec.name(), metric, constants, phi_new, xi, spec.p().cloned())
}

/// A fixed dense unimodular frame change: lower-unitriangular shear with
/// small rational entries. Deterministic, for benchmarks and docs.
pub fn shear(dim: usize) -> Vec<Vec<Scalar>> {
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => Scalar::one(),
                    std::cmp::Ordering::Greater => {
                        Scalar::ratio(((i + 2 * j) % 5) as i64 - 2, 1 + ((i + j) % 3) as i64).expect("nonzero")
                    }
                    std::cmp::Ordering::Less => Scalar::zero(),
                })
                .collect()
        })
        .collect()
}
