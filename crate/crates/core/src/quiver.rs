//! Quiver amalgamation over a triangulation, role bookkeeping, and flips.
//!
//! Each triangle carries the standard seven-vertex pattern: one face vertex,
//! two vertices per side. Writing f(s) and g(s) for the side vertices nearer
//! the start and the end of slot s (slots run counter-clockwise), a triangle
//! contributes plain arrows f(s) -> face and face -> g(s) for each slot, a
//! corner arrow g(s) -> f(s') for consecutive slots s, s', and a half-weight
//! arrow g(s) -> f(s) along each side. Amalgamation sums these contributions
//! over all triangles; the opposite half-arrows on a shared interior edge
//! cancel. Vertices on boundary edges are frozen.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::seed::{ExchangeSeed, MutationPath, Permutation, TropicalPoint, VertexId};
use crate::surface::{EdgeId, EdgeKind, Slot, TriId, Triangulation};

/// What a quiver vertex stands for in the triangulation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Role {
    /// The vertex inside a triangle (by triangle index).
    Face(TriId),
    /// Vertex on an edge: position 1 is nearer the edge's first endpoint.
    EdgeVertex(EdgeId, u8),
}

/// Map between triangulation roles and seed vertex ids.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuiverLayout {
    pub face_vertex: BTreeMap<TriId, VertexId>,
    pub edge_vertex: BTreeMap<(EdgeId, u8), VertexId>,
}

impl Serialize for QuiverLayout {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let faces: Vec<serde_json::Value> = self
            .face_vertex
            .iter()
            .map(|(&t, &v)| serde_json::json!({ "triangle": t, "vertex": v }))
            .collect();
        let edges: Vec<serde_json::Value> = self
            .edge_vertex
            .iter()
            .map(|(&(e, pos), &v)| {
                serde_json::json!({ "edge": e, "position": pos, "vertex": v })
            })
            .collect();
        let mut st = s.serialize_struct("QuiverLayout", 2)?;
        st.serialize_field("face_vertex", &faces)?;
        st.serialize_field("edge_vertex", &edges)?;
        st.end()
    }
}

impl QuiverLayout {
    pub fn vertex_of(&self, role: Role) -> Result<VertexId> {
        match role {
            Role::Face(t) => self.face_vertex.get(&t).copied(),
            Role::EdgeVertex(e, s) => self.edge_vertex.get(&(e, s)).copied(),
        }
        .ok_or_else(|| Error::RoleNotFound(format!("{role:?}")))
    }

    pub fn role_of(&self, v: VertexId) -> Option<Role> {
        self.face_vertex
            .iter()
            .find(|&(_, &id)| id == v)
            .map(|(&t, _)| Role::Face(t))
            .or_else(|| {
                self.edge_vertex
                    .iter()
                    .find(|&(_, &id)| id == v)
                    .map(|(&(e, s), _)| Role::EdgeVertex(e, s))
            })
    }

    /// Face coordinate `x_T`.
    pub fn x_face(&self, point: &TropicalPoint, t: TriId) -> Result<Rat> {
        let v = self.vertex_of(Role::Face(t))?;
        self.check_len(point, v)?;
        Ok(point.get(v).clone())
    }

    /// Edge coordinate `x_{E,s}` relative to the stored edge orientation.
    pub fn x_edge(&self, point: &TropicalPoint, e: EdgeId, s: u8) -> Result<Rat> {
        let v = self.vertex_of(Role::EdgeVertex(e, s))?;
        self.check_len(point, v)?;
        Ok(point.get(v).clone())
    }

    fn check_len(&self, point: &TropicalPoint, v: VertexId) -> Result<()> {
        if v > point.len() {
            return Err(Error::ChartMismatch(format!(
                "point has {} coordinates, layout refers to vertex {v}",
                point.len()
            )));
        }
        Ok(())
    }
}

/// Side vertex roles of a slot: nearer its start, nearer its end.
fn slot_first(slot: &Slot) -> Role {
    Role::EdgeVertex(slot.edge, if slot.reversed { 2 } else { 1 })
}

fn slot_second(slot: &Slot) -> Role {
    Role::EdgeVertex(slot.edge, if slot.reversed { 1 } else { 2 })
}

/// Amalgamated exchange seed of a triangulation, with the role map.
/// Vertex ids: edge vertices first in edge-list order (positions 1 then 2),
/// then face vertices in triangle order.
pub fn build_quiver(tri: &Triangulation) -> Result<(ExchangeSeed, QuiverLayout)> {
    let violations = tri.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidTriangulation(format!("{violations:?}")));
    }

    let mut layout = QuiverLayout { face_vertex: BTreeMap::new(), edge_vertex: BTreeMap::new() };
    let mut next: VertexId = 1;
    for e in &tri.edges {
        layout.edge_vertex.insert((e.id, 1), next);
        layout.edge_vertex.insert((e.id, 2), next + 1);
        next += 2;
    }
    for t in 0..tri.triangles.len() {
        layout.face_vertex.insert(t, next);
        next += 1;
    }
    let n = next - 1;

    let mut matrix2 = vec![vec![0i64; n]; n];
    let mut add = |a: VertexId, b: VertexId, weight2: i64| {
        matrix2[a - 1][b - 1] += weight2;
        matrix2[b - 1][a - 1] -= weight2;
    };

    for (t, triangle) in tri.triangles.iter().enumerate() {
        let face = layout.face_vertex[&t];
        for i in 0..3 {
            let slot = &triangle.slots[i];
            let f = layout.vertex_of(slot_first(slot))?;
            let g = layout.vertex_of(slot_second(slot))?;
            add(f, face, 2);
            add(face, g, 2);
            // corner arrow into the next side
            let f_next = layout.vertex_of(slot_first(&triangle.slots[(i + 1) % 3]))?;
            add(g, f_next, 2);
            // half-weight arrow along the side; opposite contributions on a
            // shared interior edge cancel
            add(g, f, 1);
        }
    }

    let frozen = tri
        .edges
        .iter()
        .filter(|e| e.kind == EdgeKind::Boundary)
        .flat_map(|e| {
            [layout.edge_vertex[&(e.id, 1)], layout.edge_vertex[&(e.id, 2)]]
        })
        .collect();

    let seed = ExchangeSeed::new(n, frozen, matrix2)?;
    Ok((seed, layout))
}

/// Outcome of flipping an interior edge.
#[derive(Clone, Debug)]
pub struct FlipResult {
    pub flipped: Triangulation,
    /// Canonical four-mutation route realizing the flip.
    pub path: MutationPath,
    /// The alternative route; induces the same map on tropical points.
    pub alt_path: MutationPath,
    /// Relabeling such that `permute(apply(path, quiver(tri)))` equals
    /// `quiver(flipped)` away from the frozen-frozen block.
    pub relabel: Permutation,
}

/// Flip the interior edge `e`. The quadrilateral around `e` has the two old
/// triangles' free sides `a1, a2` (left triangle) and `b1, b2` (right
/// triangle) in counter-clockwise order; the new diagonal joins the corners
/// opposite to `e`.
pub fn flip(tri: &Triangulation, e: EdgeId) -> Result<FlipResult> {
    let edge = tri
        .edge(e)
        .ok_or_else(|| Error::InvalidTriangulation(format!("no edge {e}")))?
        .clone();
    if edge.kind == EdgeKind::Boundary {
        return Err(Error::BoundaryEdge(e));
    }
    let slots = tri.slots_at_edge(e);
    if slots.len() != 2 {
        return Err(Error::InvalidTriangulation(format!(
            "interior edge {e} borne by {} slots",
            slots.len()
        )));
    }
    let (ta, sa) = slots[0];
    let (tb, sb) = slots[1];
    if ta == tb {
        return Err(Error::SelfGluedQuadrilateral(e));
    }
    // left triangle traverses the edge forward
    let (tl, sl, tr, sr) = if tri.triangles[ta].slots[sa].reversed {
        (tb, sb, ta, sa)
    } else {
        (ta, sa, tb, sb)
    };

    // free sides in ccw order around the quadrilateral
    let l1 = tri.triangles[tl].slots[(sl + 1) % 3];
    let l2 = tri.triangles[tl].slots[(sl + 2) % 3];
    let r1 = tri.triangles[tr].slots[(sr + 1) % 3];
    let r2 = tri.triangles[tr].slots[(sr + 2) % 3];

    // corners off the diagonal
    let corner_l = tri.slot_target(&l1); // between l1 and l2
    let corner_r = tri.slot_target(&r1); // between r1 and r2

    // New diagonal keeps the edge id, oriented from the left corner to the
    // right corner. The quadrilateral must not be glued to itself along a
    // pair of adjacent sides, or the flip would create a self-folded
    // triangle (the punctured-bigon situation).
    for s in [&l2, &r1, &r2, &l1] {
        if s.edge == e {
            return Err(Error::SelfGluedQuadrilateral(e));
        }
    }
    if l2.edge == r1.edge || r2.edge == l1.edge {
        return Err(Error::SelfGluedQuadrilateral(e));
    }

    let mut flipped = tri.clone();
    for ed in &mut flipped.edges {
        if ed.id == e {
            ed.ends = [corner_l, corner_r];
        }
    }
    // the old left index now holds the triangle behind the second diagonal
    // vertex, the old right index the one behind the first
    flipped.triangles[tr].slots = [r1, Slot { edge: e, reversed: true }, l2];
    flipped.triangles[tl].slots = [l1, Slot { edge: e, reversed: false }, r2];

    let (_, layout) = build_quiver(tri)?;
    let d1 = layout.vertex_of(Role::EdgeVertex(e, 1))?;
    let d2 = layout.vertex_of(Role::EdgeVertex(e, 2))?;
    let gl = layout.vertex_of(Role::Face(tl))?;
    let gr = layout.vertex_of(Role::Face(tr))?;

    let path = MutationPath::mutations(&[d2, d1, gr, gl]);
    let alt_path = MutationPath::mutations(&[d1, d2, gl, gr]);

    // After the route, the diagonal vertices play the faces' roles and the
    // faces sit on the new diagonal.
    let (_, new_layout) = build_quiver(&flipped)?;
    let n = layout.edge_vertex.len() + layout.face_vertex.len();
    let mut relabel: Vec<VertexId> = (1..=n).collect();
    let mut assign = |from: VertexId, to_role: Role| -> Result<()> {
        relabel[from - 1] = new_layout.vertex_of(to_role)?;
        Ok(())
    };
    assign(d2, Role::Face(tl))?;
    assign(d1, Role::Face(tr))?;
    assign(gl, Role::EdgeVertex(e, 1))?;
    assign(gr, Role::EdgeVertex(e, 2))?;

    Ok(FlipResult { flipped, path, alt_path, relabel: Permutation(relabel) })
}
