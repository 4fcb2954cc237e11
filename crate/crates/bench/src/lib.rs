//! Fixtures shared by the benchmarks.

use kenmotsu_core::synthetic::{change_frame, hyperbolic, shear};
use kenmotsu_core::{catalog, FrameManifoldSpec, Scalar};

/// Catalog examples plus hyperbolic spaces in a dense frame, smallest first.
pub fn fixtures() -> Vec<(String, FrameManifoldSpec)> {
    let mut out = vec![(
        "kenmotsu3".to_string(),
        catalog::spec("kenmotsu3").expect("catalog parses").with_p(Some(Scalar::ratio(-2, 3).unwrap())),
    )];
    for dim in [5, 7, 9] {
        let base = hyperbolic(dim).expect("hyperbolic spec");
        let dense = change_frame(&base, &shear(dim)).expect("shear is invertible");
        out.push((format!("hyperbolic{dim}-sheared"), dense.with_p(Some(Scalar::ratio(-2, dim as i64).unwrap()))));
    }
    out
}
