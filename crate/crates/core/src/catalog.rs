//! Built-in reference documents.

use crate::error::{Error, Result};
use crate::manifold::{parse_spec, FrameManifoldSpec};

/// Three-dimensional hyperbolic Kenmotsu manifold: `[e1,e3] = e1`, `[e2,e3] = e2`.
pub const KENMOTSU3: &str = include_str!("../data/kenmotsu3.json");

/// Flat control: same metric, φ and ξ on an abelian frame. Not Kenmotsu.
pub const FLAT3: &str = include_str!("../data/flat3.json");

pub const NAMES: [&str; 2] = ["kenmotsu3", "flat3"];

/// Canonical document text for a built-in example.
pub fn example(name: &str) -> Result<&'static str> {
    match name {
        "kenmotsu3" => Ok(KENMOTSU3),
        "flat3" => Ok(FLAT3),
        _ => Err(Error::UnknownExample { name: name.to_string(), available: NAMES.join(", ") }),
    }
}

pub fn spec(name: &str) -> Result<FrameManifoldSpec> {
    parse_spec(example(name)?)
}
