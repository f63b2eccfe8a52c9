//! Built-in surface fixtures, embedded from `fixtures/` at the workspace root.

use crate::error::{Error, Result};
use crate::surface::Triangulation;

/// Names of the shipped surfaces.
pub const NAMES: &[&str] = &["dstar", "triangle", "square", "annulus", "punctured_torus", "dstar2"];

const DSTAR: &str = include_str!("../../../fixtures/dstar.json");
const TRIANGLE: &str = include_str!("../../../fixtures/triangle.json");
const SQUARE: &str = include_str!("../../../fixtures/square.json");
const ANNULUS: &str = include_str!("../../../fixtures/annulus.json");
const PUNCTURED_TORUS: &str = include_str!("../../../fixtures/punctured_torus.json");
const DSTAR2: &str = include_str!("../../../fixtures/dstar2.json");

pub const BRAID_CATALOG: &str = include_str!("../../../fixtures/braid_catalog.json");

pub fn raw(name: &str) -> Option<&'static str> {
    match name {
        "dstar" => Some(DSTAR),
        "triangle" => Some(TRIANGLE),
        "square" => Some(SQUARE),
        "annulus" => Some(ANNULUS),
        "punctured_torus" => Some(PUNCTURED_TORUS),
        "dstar2" => Some(DSTAR2),
        _ => None,
    }
}

pub fn load(name: &str) -> Result<Triangulation> {
    let raw = raw(name)
        .ok_or_else(|| Error::BadFixture(format!("unknown fixture {name:?}; known: {NAMES:?}")))?;
    Triangulation::from_json(raw)
}
