//! Combinatorial ideal triangulations of marked surfaces.
//!
//! A triangulation is explicit cell-complex data: marked points, edges with
//! endpoints, and triangles given by three directed slots glued to edges.
//! Slot `i` of a triangle runs from corner `i` to corner `i+1` in the
//! counter-clockwise order of the surface orientation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type PointId = usize;
pub type EdgeId = usize;
pub type TriId = usize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointKind {
    Puncture,
    Special,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MarkedPoint {
    pub id: PointId,
    pub kind: PointKind,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Interior,
    Boundary,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub ends: [PointId; 2],
    pub kind: EdgeKind,
}

/// One directed side of a triangle, glued to an edge. `reversed` means the
/// slot traverses the edge against its stored orientation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Slot {
    pub edge: EdgeId,
    pub reversed: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Triangle {
    pub slots: [Slot; 3],
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Triangulation {
    pub marked_points: Vec<MarkedPoint>,
    pub edges: Vec<Edge>,
    pub triangles: Vec<Triangle>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Violation {
    pub code: String,
    pub detail: String,
}

impl Violation {
    fn new(code: &str, detail: String) -> Self {
        Violation { code: code.into(), detail }
    }
}

impl Triangulation {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::BadFixture(e.to_string()))
    }

    pub fn point(&self, id: PointId) -> Option<&MarkedPoint> {
        self.marked_points.iter().find(|p| p.id == id)
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn punctures(&self) -> impl Iterator<Item = &MarkedPoint> {
        self.marked_points.iter().filter(|p| p.kind == PointKind::Puncture)
    }

    pub fn special_points(&self) -> impl Iterator<Item = &MarkedPoint> {
        self.marked_points.iter().filter(|p| p.kind == PointKind::Special)
    }

    pub fn num_punctures(&self) -> usize {
        self.punctures().count()
    }

    pub fn num_special(&self) -> usize {
        self.special_points().count()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_interior_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Interior).count()
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    /// Marked point at the start of a slot.
    pub fn slot_source(&self, slot: &Slot) -> PointId {
        let e = self.edge(slot.edge).expect("slot references a known edge");
        if slot.reversed {
            e.ends[1]
        } else {
            e.ends[0]
        }
    }

    /// Marked point at the end of a slot.
    pub fn slot_target(&self, slot: &Slot) -> PointId {
        let e = self.edge(slot.edge).expect("slot references a known edge");
        if slot.reversed {
            e.ends[0]
        } else {
            e.ends[1]
        }
    }

    /// `(triangle index, slot index)` pairs glued to the given edge.
    pub fn slots_at_edge(&self, edge: EdgeId) -> Vec<(TriId, usize)> {
        let mut out = Vec::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            for (s, slot) in tri.slots.iter().enumerate() {
                if slot.edge == edge {
                    out.push((t, s));
                }
            }
        }
        out
    }

    /// Euler characteristic of the surface with punctures removed,
    /// computed from the cell complex.
    pub fn euler_char_star(&self) -> i64 {
        let v = self.marked_points.len() as i64;
        let e = self.edges.len() as i64;
        let f = self.triangles.len() as i64;
        v - e + f - self.num_punctures() as i64
    }

    /// Expected vertex count of the associated quiver: 2|e| + |t|.
    pub fn quiver_size(&self) -> usize {
        2 * self.num_edges() + self.num_triangles()
    }

    pub fn quiver_unfrozen_size(&self) -> usize {
        2 * self.num_interior_edges() + self.num_triangles()
    }

    /// Structural and count checks; an empty list means the triangulation is
    /// a valid ideal triangulation without self-folded triangles.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();

        // reference integrity and duplicate ids
        let mut point_ids: Vec<PointId> = self.marked_points.iter().map(|p| p.id).collect();
        point_ids.sort_unstable();
        if point_ids.windows(2).any(|w| w[0] == w[1]) {
            out.push(Violation::new("duplicate-point-id", "marked point ids repeat".into()));
        }
        let mut edge_ids: Vec<EdgeId> = self.edges.iter().map(|e| e.id).collect();
        edge_ids.sort_unstable();
        if edge_ids.windows(2).any(|w| w[0] == w[1]) {
            out.push(Violation::new("duplicate-edge-id", "edge ids repeat".into()));
        }
        for e in &self.edges {
            for &p in &e.ends {
                if self.point(p).is_none() {
                    out.push(Violation::new(
                        "unknown-point",
                        format!("edge {} ends at unknown point {}", e.id, p),
                    ));
                }
            }
        }
        for (t, tri) in self.triangles.iter().enumerate() {
            for slot in &tri.slots {
                if self.edge(slot.edge).is_none() {
                    out.push(Violation::new(
                        "unknown-edge",
                        format!("triangle {t} references unknown edge {}", slot.edge),
                    ));
                }
            }
        }
        if !out.is_empty() {
            return out; // later checks assume references resolve
        }

        // self-folded: a triangle glued to the same edge twice
        for (t, tri) in self.triangles.iter().enumerate() {
            let e = [tri.slots[0].edge, tri.slots[1].edge, tri.slots[2].edge];
            if e[0] == e[1] || e[1] == e[2] || e[0] == e[2] {
                out.push(Violation::new(
                    "self-folded",
                    format!("triangle {t} is glued to an edge twice"),
                ));
            }
        }

        // slot chains: target of slot i is source of slot i+1
        for (t, tri) in self.triangles.iter().enumerate() {
            for i in 0..3 {
                let here = self.slot_target(&tri.slots[i]);
                let next = self.slot_source(&tri.slots[(i + 1) % 3]);
                if here != next {
                    out.push(Violation::new(
                        "broken-corner",
                        format!("triangle {t}: slot {i} ends at {here}, next starts at {next}"),
                    ));
                }
            }
        }

        // edge incidence counts and coherent orientation
        for e in &self.edges {
            let slots = self.slots_at_edge(e.id);
            match e.kind {
                EdgeKind::Interior => {
                    if slots.len() != 2 {
                        out.push(Violation::new(
                            "interior-incidence",
                            format!("interior edge {} borne by {} slots", e.id, slots.len()),
                        ));
                    } else {
                        let r0 = self.triangles[slots[0].0].slots[slots[0].1].reversed;
                        let r1 = self.triangles[slots[1].0].slots[slots[1].1].reversed;
                        if r0 == r1 {
                            out.push(Violation::new(
                                "incoherent-orientation",
                                format!("interior edge {} traversed twice the same way", e.id),
                            ));
                        }
                    }
                }
                EdgeKind::Boundary => {
                    if slots.len() != 1 {
                        out.push(Violation::new(
                            "boundary-incidence",
                            format!("boundary edge {} borne by {} slots", e.id, slots.len()),
                        ));
                    }
                    for &p in &e.ends {
                        if self.point(p).map(|m| m.kind) == Some(PointKind::Puncture) {
                            out.push(Violation::new(
                                "puncture-on-boundary",
                                format!("boundary edge {} ends at puncture {}", e.id, p),
                            ));
                        }
                    }
                }
            }
        }

        // count identities against the Euler characteristic
        let chi = self.euler_char_star();
        let nb = self.num_special() as i64;
        if -2 * chi + nb <= 0 {
            out.push(Violation::new(
                "too-small",
                format!("-2*chi + |special| = {} must be positive", -2 * chi + nb),
            ));
        }
        let checks = [
            ("edge-count", self.num_edges() as i64, -3 * chi + 2 * nb),
            ("interior-edge-count", self.num_interior_edges() as i64, -3 * chi + nb),
            ("triangle-count", self.num_triangles() as i64, -2 * chi + nb),
        ];
        for (code, got, want) in checks {
            if got != want {
                out.push(Violation::new(code, format!("have {got}, formula gives {want}")));
            }
        }

        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dstar_counts() {
        let t = fixtures::load("dstar").unwrap();
        assert!(t.validate().is_empty());
        assert_eq!(t.num_triangles(), 2);
        assert_eq!(t.num_interior_edges(), 2);
        assert_eq!(t.num_edges(), 4);
        assert_eq!(t.quiver_size(), 10);
        assert_eq!(t.quiver_unfrozen_size(), 6);
        assert_eq!(t.euler_char_star(), 0);
    }

    #[test]
    fn triangle_counts() {
        let t = fixtures::load("triangle").unwrap();
        assert!(t.validate().is_empty());
        assert_eq!(t.quiver_size(), 7);
        assert_eq!(t.quiver_unfrozen_size(), 1);
    }

    #[test]
    fn all_fixture_counts_match_formulas() {
        for name in fixtures::NAMES {
            let t = fixtures::load(name).unwrap();
            let violations = t.validate();
            assert!(violations.is_empty(), "{name}: {violations:?}");
            let chi = t.euler_char_star();
            let nb = t.num_special() as i64;
            assert_eq!(t.quiver_size() as i64, -8 * chi + 5 * nb, "{name}");
            assert_eq!(t.quiver_unfrozen_size() as i64, -8 * chi + 3 * nb, "{name}");
        }
    }

    #[test]
    fn self_folded_triangle_is_rejected() {
        let mut t = fixtures::load("triangle").unwrap();
        // glue two slots of the triangle to the same edge
        t.triangles[0].slots[1] = Slot { edge: 1, reversed: true };
        assert!(t.validate().iter().any(|v| v.code == "self-folded"));
    }

    #[test]
    fn incoherent_orientation_is_rejected() {
        let mut t = fixtures::load("dstar").unwrap();
        // make both slots traverse edge 1 the same way
        for tri in &mut t.triangles {
            for slot in &mut tri.slots {
                if slot.edge == 1 {
                    slot.reversed = false;
                }
            }
        }
        assert!(t
            .validate()
            .iter()
            .any(|v| v.code == "incoherent-orientation" || v.code == "broken-corner"));
    }
}
