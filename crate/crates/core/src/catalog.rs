//! Golden coordinate data for the eleven elementary braids on the
//! once-punctured disk with two special points, plus lamination-cluster
//! tracking along mutation paths.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chart::PunctureChart;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::lattice::{dynkin_star, Coweight};
use crate::maps::{casimir, dynkin_pl};
use crate::rat::Rat;
use crate::seed::{apply_path, Flavor, MutationPath, TropicalPoint, VertexId};
use crate::surface::Triangulation;

/// One elementary braid: sparse shear coordinates in the local labels of the
/// punctured-disk chart, with its Casimir value.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub coords: BTreeMap<u8, Rat>,
    pub theta: Coweight,
    pub figure_ref: String,
}

impl CatalogEntry {
    /// Casimir value recomputed from the sparse coordinates.
    pub fn derived_theta(&self) -> Coweight {
        let at = |l: u8| self.coords.get(&l).cloned().unwrap_or_else(Rat::zero);
        Coweight::new(
            &(&at(3) + &at(4)) + &(&at(5) + &at(6)),
            &at(1) + &at(2),
        )
    }

    /// Dense local coordinate vector, labels 1..=10.
    pub fn dense(&self) -> Vec<Rat> {
        (1..=10u8)
            .map(|l| self.coords.get(&l).cloned().unwrap_or_else(Rat::zero))
            .collect()
    }

    fn from_dense(name: String, figure_ref: String, dense: &[Rat], theta: Coweight) -> Self {
        let coords = dense
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(i, r)| ((i + 1) as u8, r.clone()))
            .collect();
        CatalogEntry { name, coords, theta, figure_ref }
    }
}

/// The eleven catalog entries. The loader re-derives each Casimir value
/// from the coordinates and rejects the fixture on any mismatch.
pub fn catalog() -> Result<Vec<CatalogEntry>> {
    let entries: Vec<CatalogEntry> = serde_json::from_str(fixtures::BRAID_CATALOG)
        .map_err(|e| Error::BadFixture(format!("braid catalog: {e}")))?;
    for entry in &entries {
        if entry.derived_theta() != entry.theta {
            return Err(Error::BadFixture(format!(
                "catalog entry {:?}: stored theta does not match its coordinates",
                entry.name
            )));
        }
        if let Some(l) = entry.coords.keys().find(|&&l| l == 0 || l > 10) {
            return Err(Error::BadFixture(format!(
                "catalog entry {:?}: label {l} out of range",
                entry.name
            )));
        }
    }
    Ok(entries)
}

/// The canonical punctured-disk chart used to interpret catalog entries.
pub fn dstar_chart() -> Result<(Triangulation, PunctureChart)> {
    let tri = fixtures::load("dstar")?;
    let ch = PunctureChart::new(&tri, 1)?;
    Ok((tri, ch))
}

/// Globalize an entry's sparse local coordinates on the given chart.
pub fn entry_point(entry: &CatalogEntry, ch: &PunctureChart) -> TropicalPoint {
    let mut p = TropicalPoint::zero(Flavor::X, ch.seed.size);
    for (&l, v) in &entry.coords {
        p.set(ch.global(l as usize), v.clone());
    }
    p
}

/// Orientation reversal: coordinates through the Dynkin PL map on the
/// unfrozen labels, Casimir value starred.
pub fn orientation_reverse(
    entry: &CatalogEntry,
    tri: &Triangulation,
    ch: &PunctureChart,
) -> Result<CatalogEntry> {
    let p = entry_point(entry, ch);
    let image = dynkin_pl(&p, tri, &ch.layout)?;
    let dense: Vec<Rat> = (1..=10)
        .map(|l| {
            let v = ch.global(l);
            if ch.seed.is_frozen(v) {
                Rat::zero()
            } else {
                image.get(v).clone()
            }
        })
        .collect();
    Ok(CatalogEntry::from_dense(
        format!("{}-reversed", entry.name),
        entry.figure_ref.clone(),
        &dense,
        dynkin_star(&entry.theta),
    ))
}

/// The half-turn symmetry of the punctured disk: swaps the two spokes and
/// the two faces. Casimir values are unchanged.
pub fn pi_rotation(entry: &CatalogEntry) -> CatalogEntry {
    const SWAP: [u8; 10] = [2, 1, 5, 6, 3, 4, 9, 10, 7, 8];
    let coords = entry
        .coords
        .iter()
        .map(|(&l, v)| (SWAP[l as usize - 1], v.clone()))
        .collect();
    CatalogEntry {
        name: format!("{}-rotated", entry.name),
        coords,
        theta: entry.theta.clone(),
        figure_ref: entry.figure_ref.clone(),
    }
}

/// Sign coherence of a family: no label carries both signs across entries.
pub fn sign_coherence(entries: &[CatalogEntry]) -> bool {
    for l in 1..=10u8 {
        let mut has_pos = false;
        let mut has_neg = false;
        for e in entries {
            if let Some(v) = e.coords.get(&l) {
                has_pos |= v.is_positive();
                has_neg |= v.is_negative();
            }
        }
        if has_pos && has_neg {
            return false;
        }
    }
    true
}

/// One station of a cluster track: the delta points of the current chart
/// pulled back to the base chart, with their Casimir data.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TrackStation {
    /// Steps of the path applied so far.
    pub after_steps: usize,
    /// Pullback to the base chart of each unfrozen delta point.
    pub points: BTreeMap<VertexId, TropicalPoint>,
    pub theta: BTreeMap<VertexId, Coweight>,
    pub theta_star: BTreeMap<VertexId, Coweight>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClusterTrack {
    pub path: MutationPath,
    pub stations: Vec<TrackStation>,
}

/// Follow the lamination cluster along a path: at every station, each
/// unfrozen delta point of the current chart is pulled back to the base
/// chart by the inverted prefix, and its Casimir value (and its star) is
/// recorded.
pub fn track_p_cluster(ch: &PunctureChart, path: &MutationPath) -> Result<ClusterTrack> {
    let unfrozen: Vec<VertexId> = ch.seed.unfrozen().collect();
    let mut stations = Vec::new();
    for t in 0..=path.len() {
        let prefix = MutationPath(path.0[..t].to_vec());
        let inverted = prefix.invert();
        let current_seed = crate::seed::apply_path_to_seed(&ch.seed, &prefix)?;
        let mut points = BTreeMap::new();
        let mut theta_map = BTreeMap::new();
        let mut star_map = BTreeMap::new();
        for &j in &unfrozen {
            let delta = TropicalPoint::basis(Flavor::X, ch.seed.size, j);
            let (base_point, _) = apply_path(&delta, &current_seed, &inverted)?;
            let th = casimir(&base_point, ch)?;
            star_map.insert(j, dynkin_star(&th));
            theta_map.insert(j, th);
            points.insert(j, base_point);
        }
        stations.push(TrackStation {
            after_steps: t,
            points,
            theta: theta_map,
            theta_star: star_map,
        });
    }
    Ok(ClusterTrack { path: path.clone(), stations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Weight;
    use crate::maps::{weyl_loop, LoopForm};
    use crate::seed::MutationStep;

    #[test]
    fn catalog_loads_and_has_eleven_entries() {
        let entries = catalog().unwrap();
        assert_eq!(entries.len(), 11);
        for e in &entries {
            assert_eq!(e.derived_theta(), e.theta, "{}", e.name);
        }
        let empty = &entries[0];
        assert!(empty.coords.is_empty());
        assert_eq!(empty.theta, Coweight::zero());
    }

    #[test]
    fn loader_rejects_theta_mismatch() {
        let mut entries = catalog().unwrap();
        entries[2].theta = Coweight::zero();
        let tampered = serde_json::to_string(&entries).unwrap();
        let back: Vec<CatalogEntry> = serde_json::from_str(&tampered).unwrap();
        assert_ne!(back[2].derived_theta(), back[2].theta);
    }

    #[test]
    fn reversal_and_rotation() {
        let (tri, ch) = dstar_chart().unwrap();
        let entries = catalog().unwrap();

        let spiral = entries.iter().find(|e| e.name == "end-in-plus").unwrap();
        let reversed = orientation_reverse(spiral, &tri, &ch).unwrap();
        assert_eq!(reversed.theta, Coweight::fundamental(1));
        assert_eq!(reversed.derived_theta(), reversed.theta);

        // reversal is involutive on the unfrozen coordinates
        for e in &entries {
            let twice =
                orientation_reverse(&orientation_reverse(e, &tri, &ch).unwrap(), &tri, &ch)
                    .unwrap();
            assert_eq!(twice.coords, e.coords, "{}", e.name);
            let rot = pi_rotation(e);
            assert_eq!(rot.derived_theta(), e.theta, "{}", e.name);
            assert_eq!(pi_rotation(&rot).coords, e.coords);
        }

        let rotated = pi_rotation(spiral);
        assert_eq!(rotated.coords, BTreeMap::from([(2, Rat::int(1))]));
    }

    #[test]
    fn coherence_examples() {
        let entries = catalog().unwrap();
        let by_name = |n: &str| entries.iter().find(|e| e.name == n).unwrap().clone();
        assert!(sign_coherence(&[by_name("end-in-plus"), by_name("dumbbell-out-plus")]));
        assert!(sign_coherence(&[by_name("end-in-plus")]));
        assert!(!sign_coherence(&[by_name("passing-arc"), by_name("end-in-plus"),
            pi_rotation(&by_name("end-in-plus"))]));
    }

    #[test]
    fn base_station_thetas() {
        let (_, ch) = dstar_chart().unwrap();
        let track = track_p_cluster(&ch, &MutationPath::default()).unwrap();
        let station = &track.stations[0];
        let want: [(usize, Weight); 6] = [
            (1, Weight::from_z3(1, 0, 0)),
            (2, Weight::from_z3(1, 0, 0)),
            (3, Weight::from_z3(1, 1, 0)),
            (4, Weight::from_z3(1, 1, 0)),
            (5, Weight::from_z3(1, 1, 0)),
            (6, Weight::from_z3(1, 1, 0)),
        ];
        for (l, w) in want {
            let v = ch.global(l);
            assert_eq!(station.theta_star[&v].to_weight(), w, "label {l}");
        }
    }

    #[test]
    fn grassmannian_track_zeroes_labels_five_and_three() {
        let (_, ch) = dstar_chart().unwrap();
        let path = MutationPath(vec![
            MutationStep::Mutate(ch.global(5)),
            MutationStep::Mutate(ch.global(3)),
        ]);
        let track = track_p_cluster(&ch, &path).unwrap();
        let s1 = &track.stations[1];
        assert!(s1.theta_star[&ch.global(5)].is_zero());
        assert!(!s1.theta_star[&ch.global(3)].is_zero());
        let s2 = &track.stations[2];
        assert!(s2.theta_star[&ch.global(5)].is_zero());
        assert!(s2.theta_star[&ch.global(3)].is_zero());
        // the other four labels keep their base values
        for l in [1, 2, 4, 6] {
            assert_eq!(
                s2.theta_star[&ch.global(l)],
                track.stations[0].theta_star[&ch.global(l)],
                "label {l}"
            );
        }
    }

    #[test]
    fn appendix_track_for_the_second_reflection() {
        let (_, ch) = dstar_chart().unwrap();
        let path = weyl_loop(2, &ch, LoopForm::Straight).unwrap();
        let track = track_p_cluster(&ch, &path).unwrap();
        let w1 = Coweight::fundamental(1);
        let w2 = Coweight::fundamental(2);
        let hook = Coweight::new(Rat::int(1), Rat::int(-1));

        let expect = |station: usize, label: usize, want: &Coweight| {
            let got = &track.stations[station].theta[&ch.global(label)];
            assert_eq!(got, want, "station {station}, label {label}");
        };
        for (l, w) in [(1, &w2), (2, &w2), (3, &w1), (4, &w1), (5, &w1), (6, &w1)] {
            expect(0, l, w);
        }
        expect(1, 1, &hook);
        for (l, w) in [(2, &w2), (3, &w1), (4, &w1), (5, &w1), (6, &w1)] {
            expect(1, l, w);
        }
        expect(2, 1, &hook);
        expect(2, 2, &hook);
        for (l, w) in [(3, &w1), (4, &w1), (5, &w1), (6, &w1)] {
            expect(2, l, w);
        }
    }
}
