//! Seeded random specs and the structural invariant checks shared by the
//! property suite and the acceptance target.
#![allow(dead_code)]

use kenmotsu_core::geometry::covariant_derivative_bilinear;
use kenmotsu_core::synthetic::{base_spec, change_frame, hyperbolic, BaseAlgebra};
use kenmotsu_core::{FrameManifoldSpec, FrameVector, Geometry, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng) -> Scalar {
    Scalar::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3)).unwrap()
}

/// Invertible frame change: small integer entries with a rational diagonal.
/// Entries stay small so that dimension-five cases remain fast in debug builds.
pub fn random_frame_change(rng: &mut impl Rng, dim: usize) -> Vec<Vec<Scalar>> {
    loop {
        let p: Vec<Vec<Scalar>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if i == j {
                            Scalar::ratio(rng.gen_range(1..=3), rng.gen_range(1..=2)).unwrap()
                        } else if rng.gen_bool(0.6) {
                            Scalar::from(rng.gen_range(-1..=1))
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let m = kenmotsu_core::Bilinear02::from_rows(p.clone()).unwrap();
        if kenmotsu_core::linalg::invert(&m).is_ok() {
            return p;
        }
    }
}

pub fn random_algebra(rng: &mut impl Rng, dim: usize) -> BaseAlgebra {
    match rng.gen_range(0..5) {
        0 | 1 => {
            BaseAlgebra::Semidirect((0..dim - 1).map(|_| (0..dim - 1).map(|_| small_rational(rng)).collect()).collect())
        }
        2 => BaseAlgebra::Heisenberg,
        3 if dim == 3 => BaseAlgebra::So3,
        _ => BaseAlgebra::Abelian,
    }
}

/// A valid spec: random Lie algebra with standard structure, seen in a
/// random frame. Kenmotsu status varies.
pub fn random_spec(seed: u64, dim: usize) -> FrameManifoldSpec {
    let mut r = rng(seed);
    let alg = random_algebra(&mut r, dim);
    let base = base_spec(&format!("random-{seed}"), dim, &alg).expect("base algebra valid");
    change_frame(&base, &random_frame_change(&mut r, dim)).expect("frame change valid")
}

/// Hyperbolic space (Kenmotsu) in a random frame.
pub fn random_kenmotsu(seed: u64, dim: usize) -> FrameManifoldSpec {
    let mut r = rng(seed);
    change_frame(&hyperbolic(dim).unwrap(), &random_frame_change(&mut r, dim)).unwrap()
}

fn fail(what: &str, idx: &[usize]) -> String {
    format!("{what} fails at {idx:?}")
}

/// Torsion-free and metric-compatible, on all index triples.
pub fn check_connection(spec: &FrameManifoldSpec, geo: &Geometry) -> Result<(), String> {
    let n = spec.dim();
    let conn = &geo.connection;
    let g = spec.metric();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if conn.get(i, j, k) - conn.get(j, i, k) != spec.constants().get(i, j, k) {
                    return Err(fail("torsion-free", &[i, j, k]));
                }
                let s: Scalar = (0..n).map(|l| conn.get(i, k, l) * &g[(l, j)] + conn.get(i, j, l) * &g[(l, k)]).sum();
                if !s.is_zero() {
                    return Err(fail("metric compatibility", &[i, j, k]));
                }
            }
        }
    }
    Ok(())
}

/// Antisymmetries, pair symmetry and first Bianchi of the Riemann tensor.
pub fn check_riemann(spec: &FrameManifoldSpec, geo: &Geometry) -> Result<(), String> {
    let n = spec.dim();
    let r = &geo.curvature.riemann;
    let g = spec.metric();
    let low =
        |i: usize, j: usize, k: usize, l: usize| -> Scalar { (0..n).map(|m| &r[(i, j, k, m)] * &g[(m, l)]).sum() };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if r[(i, j, k, l)] != -r[(j, i, k, l)].clone() {
                        return Err(fail("antisymmetry in (X,Y)", &[i, j, k, l]));
                    }
                    let x = low(i, j, k, l);
                    if x != -low(i, j, l, k) {
                        return Err(fail("antisymmetry in (Z,W)", &[i, j, k, l]));
                    }
                    if x != low(k, l, i, j) {
                        return Err(fail("pair symmetry", &[i, j, k, l]));
                    }
                    let bianchi = &r[(i, j, k, l)] + &r[(j, k, i, l)] + &r[(k, i, j, l)];
                    if !bianchi.is_zero() {
                        return Err(fail("first Bianchi", &[i, j, k, l]));
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn check_metric_parallel(spec: &FrameManifoldSpec, geo: &Geometry) -> Result<(), String> {
    match covariant_derivative_bilinear(&geo.connection, spec.metric()).first_nonzero() {
        None => Ok(()),
        Some((idx, _)) => Err(fail("∇g = 0", &idx)),
    }
}

pub fn check_structure(spec: &FrameManifoldSpec) -> Result<(), String> {
    let geo = Geometry::compute(spec).map_err(|e| e.to_string())?;
    check_connection(spec, &geo)?;
    check_riemann(spec, &geo)?;
    check_metric_parallel(spec, &geo)
}

pub fn vector(xs: &[i64]) -> FrameVector {
    FrameVector::new(xs.iter().map(|&x| Scalar::from(x)).collect())
}
