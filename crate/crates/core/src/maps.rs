//! Piecewise-linear maps on tropical points: the Casimir map, the ensemble
//! map and its exact sequence, Weyl reflections at punctures (closed form
//! and mutation loops), the Dynkin involution, and the A-side potentials.

use serde::{Deserialize, Serialize};

use crate::chart::{Pinning, PunctureChart, SpecialPointChart};
use crate::error::{Error, Result};
use crate::lattice::{self, Coweight};
use crate::linalg;
use crate::quiver::{build_quiver, QuiverLayout, Role};
use crate::rat::Rat;
use crate::seed::{
    ExchangeSeed, Flavor, MutationPath, MutationStep, Permutation, TropicalPoint, VertexId,
};
use crate::surface::{EdgeKind, Triangulation};

/// Tropicalized Casimir coweight at the chart's puncture:
/// `(x3+x4+x5+x6) w1 + (x1+x2) w2` in local labels.
pub fn casimir(x: &TropicalPoint, ch: &PunctureChart) -> Result<Coweight> {
    x.check_flavor(Flavor::X)?;
    check_len(x, ch.seed.size)?;
    let at = |l: usize| x.get(ch.global(l));
    let c1 = at(3) + at(4) + at(5) + at(6);
    let c2 = at(1) + at(2);
    Ok(Coweight::new(c1, c2))
}

/// Tropicalized ensemble map: `x_i = sum_j eps_ij a_j` on unfrozen `i`;
/// frozen output coordinates are zero.
pub fn ensemble_tropical(a: &TropicalPoint, seed: &ExchangeSeed) -> Result<TropicalPoint> {
    a.check_flavor(Flavor::A)?;
    check_len(a, seed.size)?;
    let mut out = TropicalPoint::zero(Flavor::X, seed.size);
    for i in seed.unfrozen() {
        let mut acc = Rat::zero();
        for j in 1..=seed.size {
            let e = seed.eps_int(i, j);
            if e != 0 {
                acc += &a.get(j).scale_int(e);
            }
        }
        out.set(i, acc);
    }
    Ok(out)
}

/// Closed-form reflection r_{p,2} in the chart's labels:
/// x1 -> -x2, x2 -> -x1, x4 -> x4 - [-x1]_+ + [x2]_+,
/// x6 -> x6 + [x1]_+ - [-x2]_+, everything else fixed.
pub fn weyl_pl_r2(x: &TropicalPoint, ch: &PunctureChart) -> Result<TropicalPoint> {
    x.check_flavor(Flavor::X)?;
    check_len(x, ch.seed.size)?;
    let x1 = x.get(ch.global(1)).clone();
    let x2 = x.get(ch.global(2)).clone();
    let mut out = x.clone();
    out.set(ch.global(1), -&x2);
    out.set(ch.global(2), -&x1);
    let x4 = x.get(ch.global(4));
    out.set(ch.global(4), &(x4 - &(-&x1).pos_part()) + &x2.pos_part());
    let x6 = x.get(ch.global(6));
    out.set(ch.global(6), &(x6 + &x1.pos_part()) - &(-&x2).pos_part());
    Ok(out)
}

/// Reflection r_{p,1}, defined by Dynkin conjugation of r_{p,2}.
pub fn weyl_pl_r1(
    x: &TropicalPoint,
    ch: &PunctureChart,
    tri: &Triangulation,
) -> Result<TropicalPoint> {
    let star = dynkin_pl(x, tri, &ch.layout)?;
    let refl = weyl_pl_r2(&star, ch)?;
    dynkin_pl(&refl, tri, &ch.layout)
}

/// Closed-form reflection of either generator.
pub fn weyl_pl(
    s: usize,
    x: &TropicalPoint,
    ch: &PunctureChart,
    tri: &Triangulation,
) -> Result<TropicalPoint> {
    match s {
        1 => weyl_pl_r1(x, ch, tri),
        2 => weyl_pl_r2(x, ch),
        _ => Err(Error::ChartMismatch(format!("no generator r_{s}"))),
    }
}

/// Which of the two published presentations of the reflection loops to emit.
/// Steps apply left to right; a trailing or middle transposition closes the
/// loop in the labeled exchange graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LoopForm {
    /// r_1: 3,4,5, swap(5,6), 5,4,3; r_2: 1, swap(1,2), 1.
    Palindrome,
    /// r_1: 3,4,5,6,4,3, swap(5,6); r_2: 1,2, swap(1,2).
    Straight,
}

/// Mutation loop realizing the reflection `r_s` at the chart's puncture,
/// in global vertex ids. Applying it to the seed returns the seed matrix.
pub fn weyl_loop(s: usize, ch: &PunctureChart, form: LoopForm) -> Result<MutationPath> {
    let n = ch.seed.size;
    let swap = |a: usize, b: usize| {
        MutationStep::Permute(Permutation::transposition(n, ch.global(a), ch.global(b)).0)
    };
    let m = |l: usize| MutationStep::Mutate(ch.global(l));
    let steps = match (s, form) {
        (1, LoopForm::Palindrome) => vec![m(3), m(4), m(5), swap(5, 6), m(5), m(4), m(3)],
        (1, LoopForm::Straight) => vec![m(3), m(4), m(5), m(6), m(4), m(3), swap(5, 6)],
        (2, LoopForm::Palindrome) => vec![m(1), swap(1, 2), m(1)],
        (2, LoopForm::Straight) => vec![m(1), m(2), swap(1, 2)],
        _ => return Err(Error::ChartMismatch(format!("no generator r_{s}"))),
    };
    Ok(MutationPath(steps))
}

/// Tropical cluster action of the Dynkin involution for a triangulation:
/// faces flip sign, the two coordinates of each edge swap with positive-part
/// corrections from the neighboring faces. On a boundary edge the term of
/// the missing side is dropped.
pub fn dynkin_pl(
    x: &TropicalPoint,
    tri: &Triangulation,
    layout: &QuiverLayout,
) -> Result<TropicalPoint> {
    x.check_flavor(Flavor::X)?;
    let n = layout.edge_vertex.len() + layout.face_vertex.len();
    check_len(x, n)?;
    let mut out = x.clone();
    for &v in layout.face_vertex.values() {
        out.set(v, -x.get(v));
    }
    for e in &tri.edges {
        // left neighbor traverses the edge forward, right one reversed
        let mut left: Option<Rat> = None;
        let mut right: Option<Rat> = None;
        for (t, s) in tri.slots_at_edge(e.id) {
            let face = layout.vertex_of(Role::Face(t))?;
            let val = x.get(face).clone();
            if tri.triangles[t].slots[s].reversed {
                right = Some(val);
            } else {
                left = Some(val);
            }
        }
        let pos = |o: &Option<Rat>| o.as_ref().map(|r| r.pos_part()).unwrap_or_else(Rat::zero);
        let neg = |o: &Option<Rat>| {
            o.as_ref().map(|r| (-r).pos_part()).unwrap_or_else(Rat::zero)
        };
        let v1 = layout.vertex_of(Role::EdgeVertex(e.id, 1))?;
        let v2 = layout.vertex_of(Role::EdgeVertex(e.id, 2))?;
        out.set(v1, &(x.get(v2) + &pos(&left)) - &neg(&right));
        out.set(v2, &(x.get(v1) + &pos(&right)) - &neg(&left));
    }
    Ok(out)
}

/// Tropicalized partial potentials at the chart's puncture, on A-points.
pub fn potential_u(a: &TropicalPoint, ch: &PunctureChart, s: usize) -> Result<Rat> {
    a.check_flavor(Flavor::A)?;
    check_len(a, ch.seed.size)?;
    let at = |l: usize| a.get(ch.global(l));
    match s {
        1 => {
            let candidates = [
                &(at(3) + at(4)) - &(at(1) + at(7)),
                &(at(4) + at(5)) - &(at(2) + at(8)),
                &(at(5) + at(6)) - &(at(2) + at(9)),
                &(at(6) + at(3)) - &(at(1) + at(10)),
            ];
            Ok(candidates.iter().skip(1).fold(candidates[0].clone(), |m, c| Rat::min(&m, c)))
        }
        2 => {
            let base = at(1) + at(2);
            Ok(Rat::min(&(&base - at(4)), &(&base - at(6))))
        }
        _ => Err(Error::ChartMismatch(format!("no potential u_{s}"))),
    }
}

/// A-side reflection at the chart's puncture: r_1 shifts labels 3,4,5,6 by
/// -u_1; r_2 shifts labels 1,2 by -u_2.
pub fn weyl_a_action(a: &TropicalPoint, ch: &PunctureChart, s: usize) -> Result<TropicalPoint> {
    let u = potential_u(a, ch, s)?;
    let labels: &[usize] = match s {
        1 => &[3, 4, 5, 6],
        2 => &[1, 2],
        _ => unreachable!(),
    };
    let mut out = a.clone();
    for &l in labels {
        let v = ch.global(l);
        out.set(v, a.get(v) - &u);
    }
    Ok(out)
}

/// Tropicalized potential at a special point: `max{x1, x3 + [x4]_+}`.
pub fn w_m_tropical(x: &TropicalPoint, ch: &SpecialPointChart) -> Result<Rat> {
    x.check_flavor(Flavor::X)?;
    check_len(x, ch.seed.size)?;
    let x1 = x.get(ch.global(1));
    let x3 = x.get(ch.global(3));
    let x4 = x.get(ch.global(4));
    Ok(Rat::max(x1, &(x3 + &x4.pos_part())))
}

/// Membership in the dominant part: every Casimir value dominant and every
/// pinning anti-dominant. The charts must cover all punctures of their
/// common triangulation.
pub fn is_in_lp0(
    x: &TropicalPoint,
    tri: &Triangulation,
    charts: &[PunctureChart],
    pinning: &Pinning,
) -> Result<bool> {
    for p in tri.punctures() {
        let chart = charts
            .iter()
            .find(|c| c.puncture == p.id)
            .ok_or(Error::MissingChart(p.id))?;
        if !lattice::is_dominant(&casimir(x, chart)?) {
            return Ok(false);
        }
    }
    Ok(pinning.antidominant_everywhere())
}

/// Report of the exact-sequence verification for one triangulation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExactSequenceReport {
    pub kernel_rank: usize,
    pub expected_kernel_rank: usize,
    pub annihilator_rank: usize,
    pub expected_annihilator_rank: usize,
    pub kernel_basis_checks: Vec<BasisCheck>,
    pub annihilator_basis_checks: Vec<BasisCheck>,
    pub kernel_basis_independent: bool,
    pub passed: bool,
}

/// One explicit basis vector verified against the ensemble matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisCheck {
    pub marked_point: usize,
    pub generator: usize,
    pub chart_found: bool,
    pub in_space: bool,
}

/// Check the lamination exact sequence on a triangulation: the kernel of the
/// ensemble matrix has rank 2 |punctures|, its annihilator has rank
/// 2 |marked points|, and the explicit puncture / special-point vectors lie
/// in them wherever the local charts exist.
pub fn verify_exact_sequence(tri: &Triangulation) -> Result<ExactSequenceReport> {
    let (seed, layout) = build_quiver(tri)?;
    let n = seed.size;
    let unfrozen: Vec<VertexId> = seed.unfrozen().collect();

    // ensemble matrix: one row per unfrozen vertex
    let rows: Vec<Vec<i64>> = unfrozen
        .iter()
        .map(|&i| (1..=n).map(|j| seed.eps2(i, j)).collect())
        .collect();
    let rank = linalg::rank_int(&rows);
    let kernel_rank = unfrozen.len() - rank;
    let annihilator_rank = n - rank;

    let in_kernel = |support: &[VertexId]| -> bool {
        // rows of the matrix indexed by the support must sum to zero
        (1..=n).all(|j| support.iter().map(|&i| seed.eps2(i, j)).sum::<i64>() == 0)
    };
    let in_annihilator = |support: &[VertexId]| -> bool {
        unfrozen
            .iter()
            .all(|&i| support.iter().map(|&j| seed.eps2(i, j)).sum::<i64>() == 0)
    };

    let mut kernel_basis_checks = Vec::new();
    let mut annihilator_basis_checks = Vec::new();
    let mut kernel_vectors: Vec<Vec<i64>> = Vec::new();

    for p in tri.punctures() {
        match PunctureChart::with_quiver(tri, &seed, &layout, p.id) {
            Ok(ch) => {
                let alpha1: Vec<VertexId> = [3, 4, 5, 6].map(|l| ch.global(l)).to_vec();
                let alpha2: Vec<VertexId> = [1, 2].map(|l| ch.global(l)).to_vec();
                for (generator, support) in [(1, &alpha1), (2, &alpha2)] {
                    kernel_basis_checks.push(BasisCheck {
                        marked_point: p.id,
                        generator,
                        chart_found: true,
                        in_space: in_kernel(support),
                    });
                    annihilator_basis_checks.push(BasisCheck {
                        marked_point: p.id,
                        generator,
                        chart_found: true,
                        in_space: in_annihilator(support),
                    });
                    let mut vec = vec![0i64; n];
                    for &v in support {
                        vec[v - 1] = 1;
                    }
                    kernel_vectors.push(vec);
                }
            }
            Err(Error::MissingChart(_)) => {
                for generator in [1, 2] {
                    kernel_basis_checks.push(BasisCheck {
                        marked_point: p.id,
                        generator,
                        chart_found: false,
                        in_space: false,
                    });
                }
            }
            Err(e) => return Err(e),
        }
    }

    for m in tri.special_points() {
        match SpecialPointChart::with_quiver(tri, &seed, &layout, m.id) {
            Ok(ch) => {
                let alpha1: Vec<VertexId> = [3, 4, 5].map(|l| ch.global(l)).to_vec();
                let alpha2: Vec<VertexId> = [1, 2].map(|l| ch.global(l)).to_vec();
                for (generator, support) in [(1, &alpha1), (2, &alpha2)] {
                    annihilator_basis_checks.push(BasisCheck {
                        marked_point: m.id,
                        generator,
                        chart_found: true,
                        in_space: in_annihilator(support),
                    });
                }
            }
            Err(Error::MissingChart(_)) => {
                for generator in [1, 2] {
                    annihilator_basis_checks.push(BasisCheck {
                        marked_point: m.id,
                        generator,
                        chart_found: false,
                        in_space: false,
                    });
                }
            }
            Err(e) => return Err(e),
        }
    }

    let kernel_basis_independent =
        linalg::rank_int(&kernel_vectors) == kernel_vectors.len();

    let expected_kernel_rank = 2 * tri.num_punctures();
    let expected_annihilator_rank = 2 * tri.marked_points.len();
    let passed = kernel_rank == expected_kernel_rank
        && annihilator_rank == expected_annihilator_rank
        && kernel_basis_independent
        && kernel_basis_checks.iter().all(|c| !c.chart_found || c.in_space)
        && annihilator_basis_checks.iter().all(|c| !c.chart_found || c.in_space);

    Ok(ExactSequenceReport {
        kernel_rank,
        expected_kernel_rank,
        annihilator_rank,
        expected_annihilator_rank,
        kernel_basis_checks,
        annihilator_basis_checks,
        kernel_basis_independent,
        passed,
    })
}

fn check_len(p: &TropicalPoint, n: usize) -> Result<()> {
    if p.len() != n {
        return Err(Error::ChartMismatch(format!(
            "point has {} coordinates, chart has {n}",
            p.len()
        )));
    }
    Ok(())
}

/// Equality of two points on the unfrozen coordinates of a seed.
pub fn eq_unfrozen(a: &TropicalPoint, b: &TropicalPoint, seed: &ExchangeSeed) -> bool {
    seed.unfrozen().all(|v| a.get(v) == b.get(v))
}

/// All punctures of a triangulation that admit charts, with their charts.
pub fn puncture_charts(tri: &Triangulation) -> Result<Vec<PunctureChart>> {
    let (seed, layout) = build_quiver(tri)?;
    let mut out = Vec::new();
    for p in tri.punctures() {
        match PunctureChart::with_quiver(tri, &seed, &layout, p.id) {
            Ok(ch) => out.push(ch),
            Err(Error::MissingChart(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// All-zero pinning over the boundary intervals of a triangulation.
pub fn zero_pinning(tri: &Triangulation) -> Pinning {
    Pinning {
        by_interval: tri
            .edges
            .iter()
            .filter(|e| e.kind == EdgeKind::Boundary)
            .map(|e| (e.id, Coweight::zero()))
            .collect(),
    }
}

/// X-points with the orthant grid plus seeded random rationals in the
/// chart's coordinates.
pub fn x_samples(seed: &ExchangeSeed, extra_random: usize, rng_seed: u64) -> Vec<TropicalPoint> {
    crate::seed::orthant_samples(seed.size, extra_random, rng_seed)
        .into_iter()
        .map(|coords| TropicalPoint::from_coords(Flavor::X, coords))
        .collect()
}

/// Orthant samples on the unfrozen coordinates only (frozen entries zero),
/// plus seeded random points on all coordinates.
pub fn x_samples_unfrozen_grid(
    seed: &ExchangeSeed,
    extra_random: usize,
    rng_seed: u64,
) -> Vec<TropicalPoint> {
    let unfrozen: Vec<VertexId> = seed.unfrozen().collect();
    let mut out = Vec::new();
    for grid in crate::seed::orthant_samples(unfrozen.len(), 0, 0) {
        let mut p = TropicalPoint::zero(Flavor::X, seed.size);
        for (slot, value) in unfrozen.iter().zip(grid) {
            p.set(*slot, value);
        }
        out.push(p);
    }
    for coords in crate::seed::random_rational_vectors(seed.size, extra_random, rng_seed) {
        out.push(TropicalPoint::from_coords(Flavor::X, coords));
    }
    out
}
