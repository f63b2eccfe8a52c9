//! Local charts at punctures and special points.
//!
//! A puncture chart requires the star of the puncture to be a once-punctured
//! disk with two marked points on its boundary: two interior spokes, two
//! triangles. Local labels 1-10 follow the standard picture: 1, 2 are the
//! spoke vertices adjacent to the puncture, 3, 5 the outer spoke vertices,
//! 4, 6 the two faces, 7-10 the outer-edge vertices. A special-point chart
//! requires the point to belong to exactly one triangle; labels 1-7 follow
//! the potential picture with 1, 2 adjacent to the point and 4 the face.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Coweight;
use crate::quiver::{build_quiver, QuiverLayout, Role};
use crate::seed::{ExchangeSeed, VertexId};
use crate::surface::{EdgeId, EdgeKind, PointId, PointKind, Triangulation};

/// Chart of the standard once-punctured-disk neighborhood of a puncture.
#[derive(Clone, Debug)]
pub struct PunctureChart {
    pub seed: ExchangeSeed,
    pub layout: QuiverLayout,
    pub puncture: PointId,
    /// `local[l-1]` is the global vertex id of local label `l`, for l = 1..10.
    pub local: [VertexId; 10],
}

/// The sixteen plain arrows of the puncture-chart quiver, in local labels.
pub const PUNCTURE_ARROWS: [(usize, usize); 16] = [
    (3, 4), (4, 5), (5, 6), (6, 3),
    (2, 4), (4, 1), (1, 6), (6, 2),
    (4, 7), (7, 3), (5, 8), (8, 4),
    (3, 10), (10, 6), (6, 9), (9, 5),
];

impl PunctureChart {
    /// Build the chart for `puncture` from a triangulation. The lower-id
    /// interior spoke is taken as the edge carrying labels 1 and 3.
    pub fn new(tri: &Triangulation, puncture: PointId) -> Result<PunctureChart> {
        let (seed, layout) = build_quiver(tri)?;
        Self::with_quiver(tri, &seed, &layout, puncture)
    }

    pub fn with_quiver(
        tri: &Triangulation,
        seed: &ExchangeSeed,
        layout: &QuiverLayout,
        puncture: PointId,
    ) -> Result<PunctureChart> {
        let point = tri
            .point(puncture)
            .ok_or(Error::MissingChart(puncture))?;
        if point.kind != PointKind::Puncture {
            return Err(Error::ChartMismatch(format!("{puncture} is not a puncture")));
        }

        // the star: exactly two triangles, each with one corner at p
        let mut star_tris = Vec::new();
        for (t, triangle) in tri.triangles.iter().enumerate() {
            let corners_at_p = triangle
                .slots
                .iter()
                .filter(|s| tri.slot_source(s) == puncture)
                .count();
            if corners_at_p > 1 {
                return Err(Error::MissingChart(puncture));
            }
            if corners_at_p == 1 {
                star_tris.push(t);
            }
        }
        if star_tris.len() != 2 {
            return Err(Error::MissingChart(puncture));
        }

        // spokes: interior edges incident to p, shared by the two triangles
        let mut spokes: Vec<EdgeId> = tri
            .edges
            .iter()
            .filter(|e| e.ends.contains(&puncture))
            .map(|e| e.id)
            .collect();
        spokes.sort_unstable();
        spokes.dedup();
        if spokes.len() != 2 {
            return Err(Error::MissingChart(puncture));
        }
        for &s in &spokes {
            let e = tri.edge(s).expect("spoke exists");
            if e.kind != EdgeKind::Interior || e.ends[0] == e.ends[1] {
                return Err(Error::MissingChart(puncture));
            }
        }

        let p_side = |edge: EdgeId| -> Result<(VertexId, VertexId)> {
            let e = tri.edge(edge).expect("spoke exists");
            let (near, far) = if e.ends[0] == puncture { (1, 2) } else { (2, 1) };
            Ok((
                layout.vertex_of(Role::EdgeVertex(edge, near))?,
                layout.vertex_of(Role::EdgeVertex(edge, far))?,
            ))
        };

        let (l1, l3) = p_side(spokes[0])?;
        let (l2, l5) = p_side(spokes[1])?;
        let faces = [
            layout.vertex_of(Role::Face(star_tris[0]))?,
            layout.vertex_of(Role::Face(star_tris[1]))?,
        ];
        // label 4 is the face receiving the arrow from label 3
        let l4 = *faces
            .iter()
            .find(|&&f| seed.eps2(l3, f) == 2)
            .ok_or_else(|| Error::ChartMismatch("no face downstream of label 3".into()))?;
        let l6 = if faces[0] == l4 { faces[1] } else { faces[0] };

        // outer edge vertices, located by their arrows into and out of the
        // faces: 4 -> 7 -> 3, 5 -> 8 -> 4, 6 -> 9 -> 5, 3 -> 10 -> 6
        let locate = |from: VertexId, to: VertexId| -> Result<VertexId> {
            let hits: Vec<VertexId> = (1..=seed.size)
                .filter(|&v| {
                    ![l1, l2, l3, l5, l4, l6].contains(&v)
                        && seed.eps2(from, v) == 2
                        && seed.eps2(v, to) == 2
                })
                .collect();
            match hits.as_slice() {
                [v] => Ok(*v),
                _ => Err(Error::ChartMismatch(format!(
                    "expected one relay vertex between {from} and {to}, found {}",
                    hits.len()
                ))),
            }
        };
        let l7 = locate(l4, l3)?;
        let l8 = locate(l5, l4)?;
        let l9 = locate(l6, l5)?;
        let l10 = locate(l3, l6)?;

        let chart = PunctureChart {
            seed: seed.clone(),
            layout: layout.clone(),
            puncture,
            local: [l1, l2, l3, l4, l5, l6, l7, l8, l9, l10],
        };
        chart.check_pattern()?;
        Ok(chart)
    }

    /// Global vertex id of a local label.
    pub fn global(&self, label: usize) -> VertexId {
        self.local[label - 1]
    }

    /// Verify the full local arrow pattern and the freezing pattern.
    fn check_pattern(&self) -> Result<()> {
        let mut expected: BTreeMap<(VertexId, VertexId), i64> = BTreeMap::new();
        for &(i, j) in &PUNCTURE_ARROWS {
            expected.insert((self.global(i), self.global(j)), 2);
            expected.insert((self.global(j), self.global(i)), -2);
        }
        for a in 1..=10usize {
            for b in 1..=10usize {
                if a == b {
                    continue;
                }
                let (ga, gb) = (self.global(a), self.global(b));
                if self.seed.is_frozen(ga) && self.seed.is_frozen(gb) {
                    continue;
                }
                let want = expected.get(&(ga, gb)).copied().unwrap_or(0);
                if self.seed.eps2(ga, gb) != want {
                    return Err(Error::ChartMismatch(format!(
                        "local arrow pattern violated between labels {a} and {b}"
                    )));
                }
            }
        }
        // Labels 7-10 are frozen exactly when their edges lie on the surface
        // boundary; in a larger surface the star's outer edges may be
        // interior, which the reflection machinery never relies on.
        for l in 1..=6 {
            if self.seed.is_frozen(self.global(l)) {
                return Err(Error::ChartMismatch(format!("local label {l} is frozen")));
            }
        }
        Ok(())
    }
}

/// Chart of the triangle owning a special point.
#[derive(Clone, Debug)]
pub struct SpecialPointChart {
    pub seed: ExchangeSeed,
    pub layout: QuiverLayout,
    pub special: PointId,
    /// `local[l-1]` is the global vertex id of local label `l`, for l = 1..7.
    pub local: [VertexId; 7],
}

impl SpecialPointChart {
    pub fn new(tri: &Triangulation, special: PointId) -> Result<SpecialPointChart> {
        let (seed, layout) = build_quiver(tri)?;
        Self::with_quiver(tri, &seed, &layout, special)
    }

    pub fn with_quiver(
        tri: &Triangulation,
        seed: &ExchangeSeed,
        layout: &QuiverLayout,
        special: PointId,
    ) -> Result<SpecialPointChart> {
        let point = tri.point(special).ok_or(Error::MissingChart(special))?;
        if point.kind != PointKind::Special {
            return Err(Error::ChartMismatch(format!("{special} is not a special point")));
        }
        // the unique triangle with a corner at m
        let mut owners = Vec::new();
        for (t, triangle) in tri.triangles.iter().enumerate() {
            for (s, slot) in triangle.slots.iter().enumerate() {
                if tri.slot_source(slot) == special {
                    owners.push((t, s));
                }
            }
        }
        let [(t, s)] = owners.as_slice() else {
            return Err(Error::MissingChart(special));
        };
        let (t, s) = (*t, *s);
        let triangle = &tri.triangles[t];

        // slot s leaves m; slot s-1 enters it; slot s+1 is the far side
        let leaving = &triangle.slots[s];
        let entering = &triangle.slots[(s + 2) % 3];
        let far = &triangle.slots[(s + 1) % 3];

        let vertex = |slot: &crate::surface::Slot, near_start: bool| -> Result<VertexId> {
            let pos = match (near_start, slot.reversed) {
                (true, false) | (false, true) => 1,
                _ => 2,
            };
            layout.vertex_of(Role::EdgeVertex(slot.edge, pos))
        };

        let l1 = vertex(leaving, true)?;
        let l3 = vertex(leaving, false)?;
        let l5 = vertex(entering, true)?;
        let l2 = vertex(entering, false)?;
        let l4 = layout.vertex_of(Role::Face(t))?;
        let l6 = vertex(far, true)?;
        let l7 = vertex(far, false)?;

        let chart = SpecialPointChart {
            seed: seed.clone(),
            layout: layout.clone(),
            special,
            local: [l1, l2, l3, l4, l5, l6, l7],
        };
        chart.check_pattern()?;
        Ok(chart)
    }

    pub fn global(&self, label: usize) -> VertexId {
        self.local[label - 1]
    }

    fn check_pattern(&self) -> Result<()> {
        // corner cycle at m plus the face fan; these arrows cannot be
        // cancelled by neighbors because m belongs to a single triangle
        let required: [(usize, usize); 7] =
            [(2, 1), (1, 4), (4, 2), (5, 4), (4, 3), (6, 4), (4, 7)];
        for (a, b) in required {
            let (ga, gb) = (self.global(a), self.global(b));
            if self.seed.is_frozen(ga) && self.seed.is_frozen(gb) {
                continue;
            }
            if self.seed.eps2(ga, gb) != 2 {
                return Err(Error::ChartMismatch(format!(
                    "special-point arrow {a} -> {b} missing"
                )));
            }
        }
        if self.seed.is_frozen(self.global(4)) {
            return Err(Error::ChartMismatch("face label 4 is frozen".into()));
        }
        Ok(())
    }
}

/// Coweights attached to boundary intervals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pinning {
    pub by_interval: BTreeMap<EdgeId, Coweight>,
}

impl Pinning {
    pub fn antidominant_everywhere(&self) -> bool {
        self.by_interval.values().all(crate::lattice::is_antidominant)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dstar_chart_localizes() {
        let tri = fixtures::load("dstar").unwrap();
        let ch = PunctureChart::new(&tri, 1).unwrap();
        // spokes are edges 1 and 2; labels 1,3 sit on edge 1
        assert_eq!(ch.layout.role_of(ch.global(1)), Some(Role::EdgeVertex(1, 1)));
        assert_eq!(ch.layout.role_of(ch.global(3)), Some(Role::EdgeVertex(1, 2)));
        assert_eq!(ch.layout.role_of(ch.global(2)), Some(Role::EdgeVertex(2, 1)));
        assert_eq!(ch.layout.role_of(ch.global(5)), Some(Role::EdgeVertex(2, 2)));
        assert!(matches!(ch.layout.role_of(ch.global(4)), Some(Role::Face(_))));
        assert!(matches!(ch.layout.role_of(ch.global(6)), Some(Role::Face(_))));
    }

    #[test]
    fn both_punctures_of_dstar2_have_charts() {
        let tri = fixtures::load("dstar2").unwrap();
        let c1 = PunctureChart::new(&tri, 1).unwrap();
        let c2 = PunctureChart::new(&tri, 2).unwrap();
        // the two charts touch disjoint unfrozen vertices
        let set1: std::collections::BTreeSet<_> = c1.local[..6].iter().collect();
        let set2: std::collections::BTreeSet<_> = c2.local[..6].iter().collect();
        assert!(set1.is_disjoint(&set2));
    }

    #[test]
    fn punctured_torus_has_no_chart() {
        let tri = fixtures::load("punctured_torus").unwrap();
        assert_eq!(
            PunctureChart::new(&tri, 1).unwrap_err(),
            Error::MissingChart(1)
        );
    }

    #[test]
    fn square_corner_charts() {
        let tri = fixtures::load("square").unwrap();
        // corners 2 and 4 belong to exactly one triangle each
        let ch = SpecialPointChart::new(&tri, 2).unwrap();
        assert!(ch.seed.is_frozen(ch.global(1)));
        assert!(ch.seed.is_frozen(ch.global(2)));
        assert!(!ch.seed.is_frozen(ch.global(4)));
        // labels 6,7 sit on the diagonal, which is unfrozen
        assert!(!ch.seed.is_frozen(ch.global(6)));
        assert!(!ch.seed.is_frozen(ch.global(7)));
        SpecialPointChart::new(&tri, 4).unwrap();
        // corners 1 and 3 belong to two triangles
        assert_eq!(
            SpecialPointChart::new(&tri, 1).unwrap_err(),
            Error::MissingChart(1)
        );
    }

    #[test]
    fn triangle_corner_charts() {
        let tri = fixtures::load("triangle").unwrap();
        for m in 1..=3 {
            let ch = SpecialPointChart::new(&tri, m).unwrap();
            assert_eq!(ch.global(4), ch.layout.vertex_of(Role::Face(0)).unwrap());
        }
    }
}
