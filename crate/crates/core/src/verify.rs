//! Named verification suites shared by the CLI and the acceptance tests.
//!
//! Every suite runs a family of exact checks (tolerance zero) and reports
//! one pass/fail entry per check, with a witness on failure. The anchor
//! string names the statement the suite exercises.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::catalog::{self, entry_point};
use crate::chart::PunctureChart;
use crate::ends::{self, EndMultiset, PrimitiveEnd, ALL_ENDS};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::lattice::{dynkin_star, reflect, Coweight, Weight};
use crate::maps::{
    casimir, dynkin_pl, ensemble_tropical, eq_unfrozen, potential_u, verify_exact_sequence,
    weyl_a_action, weyl_loop, weyl_pl, x_samples_unfrozen_grid, LoopForm,
};
use crate::quiver::{build_quiver, flip};
use crate::rat::Rat;
use crate::seed::{
    apply_path, apply_path_to_seed, orthant_samples, random_rational_vectors, ExchangeSeed,
    Flavor, MutationPath, MutationStep, TropicalPoint, VertexId,
};
use crate::surface::Triangulation;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub anchor: String,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

pub const SUITES: &[&str] = &[
    "casimir-table",
    "weyl-relations",
    "weyl-loop-vs-pl",
    "exact-sequence",
    "flip-consistency",
    "dynkin",
    "a-side",
    "end-calculus",
    "p-cluster-tracks",
];

pub fn run_suite(name: &str, rng_seed: u64) -> Result<SuiteReport> {
    run_suite_on(name, rng_seed, None)
}

/// Run a suite; the surface-parametric ones (`weyl-relations`,
/// `exact-sequence`, `flip-consistency`, `dynkin`) accept a surface to run
/// on instead of the built-in fixture set.
pub fn run_suite_on(
    name: &str,
    rng_seed: u64,
    surface: Option<(&str, &Triangulation)>,
) -> Result<SuiteReport> {
    if surface.is_some()
        && !["weyl-relations", "exact-sequence", "flip-consistency", "dynkin"].contains(&name)
    {
        return Err(Error::BadFixture(format!(
            "suite {name:?} runs on its built-in golden data and takes no surface"
        )));
    }
    let (anchor, checks) = match name {
        "casimir-table" => ("Prop. Casimir", casimir_table()?),
        "weyl-relations" => ("Prop. Weyl_welldefined", weyl_relations(rng_seed, surface)?),
        "weyl-loop-vs-pl" => ("Eq. r_2_cluster_action", weyl_loop_vs_pl(rng_seed)?),
        "exact-sequence" => ("Thm. cluster_exact_sequence", exact_sequence(surface)?),
        "flip-consistency" => ("Fig. flip sequence", flip_consistency(rng_seed, surface)?),
        "dynkin" => ("Prop. Dynkin-cluster", dynkin_suite(rng_seed, surface)?),
        "a-side" => ("Prop. Weyl_action_A", a_side()?),
        "end-calculus" => ("Def. Weyl_action", end_calculus()?),
        "p-cluster-tracks" => ("Fig. seq_dosp_web", p_cluster_tracks()?),
        other => {
            return Err(Error::BadFixture(format!(
                "unknown suite {other:?}; known: {SUITES:?}"
            )))
        }
    };
    let passed = checks.iter().all(|c| c.pass);
    Ok(SuiteReport { suite: name.into(), anchor: anchor.into(), checks, passed })
}

pub fn run_all(rng_seed: u64) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|s| run_suite(s, rng_seed)).collect()
}

fn check(name: impl Into<String>, pass: bool, witness: Option<serde_json::Value>) -> CheckResult {
    CheckResult { name: name.into(), pass, witness: if pass { None } else { witness } }
}

fn ok(name: impl Into<String>) -> CheckResult {
    check(name, true, None)
}

// ---------------------------------------------------------------- casimir

fn casimir_table() -> Result<Vec<CheckResult>> {
    let (tri, ch) = catalog::dstar_chart()?;
    let entries = catalog::catalog()?;
    let mut checks = Vec::new();
    checks.push(check(
        "catalog has eleven entries",
        entries.len() == 11,
        Some(json!({ "count": entries.len() })),
    ));
    for entry in &entries {
        let variants = [
            (entry.clone(), "as listed"),
            (catalog::orientation_reverse(entry, &tri, &ch)?, "reversed"),
            (catalog::pi_rotation(entry), "rotated"),
            (
                catalog::pi_rotation(&catalog::orientation_reverse(entry, &tri, &ch)?),
                "reversed+rotated",
            ),
        ];
        for (variant, tag) in &variants {
            let derived = variant.derived_theta();
            let from_map = casimir(&entry_point(variant, &ch), &ch)?;
            let pass = derived == variant.theta && from_map == variant.theta;
            checks.push(check(
                format!("{} ({tag})", entry.name),
                pass,
                Some(json!({
                    "stored": variant.theta,
                    "derived": derived,
                    "casimir": from_map,
                })),
            ));
        }
    }
    Ok(checks)
}

// ---------------------------------------------------------- weyl relations

/// Sign-grid and random samples adapted to charts of a surface: the full
/// ternary grid over each chart's six local coordinates, a joint grid
/// bending both charts at once, and seeded random points on everything.
fn relation_samples(
    seed: &ExchangeSeed,
    charts: &[PunctureChart],
    random: usize,
    rng_seed: u64,
) -> Vec<TropicalPoint> {
    let mut out = Vec::new();
    for ch in charts {
        for grid in orthant_samples(6, 0, 0) {
            let mut p = TropicalPoint::zero(Flavor::X, seed.size);
            for (l, v) in grid.into_iter().enumerate() {
                p.set(ch.global(l + 1), v);
            }
            out.push(p);
        }
    }
    if charts.len() > 1 {
        for grid in orthant_samples(6, 0, 0) {
            let mut p = TropicalPoint::zero(Flavor::X, seed.size);
            for ch in charts {
                for (l, v) in grid.iter().enumerate() {
                    p.set(ch.global(l + 1), v.clone());
                }
            }
            out.push(p);
        }
    }
    for coords in random_rational_vectors(seed.size, random, rng_seed) {
        out.push(TropicalPoint::from_coords(Flavor::X, coords));
    }
    out
}

fn weyl_relations(
    rng_seed: u64,
    surface: Option<(&str, &Triangulation)>,
) -> Result<Vec<CheckResult>> {
    match surface {
        Some((name, tri)) => relations_on(name, tri, rng_seed),
        None => {
            let dstar = fixtures::load("dstar")?;
            let dstar2 = fixtures::load("dstar2")?;
            let mut checks = relations_on("dstar", &dstar, rng_seed)?;
            checks.extend(relations_on("dstar2", &dstar2, rng_seed ^ 1)?);
            Ok(checks)
        }
    }
}

/// Reflection group laws at every charted puncture of one surface, plus
/// commutation between distinct punctures.
fn relations_on(name: &str, tri: &Triangulation, rng_seed: u64) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let (seed, layout) = build_quiver(tri)?;
    let mut charts = Vec::new();
    for p in tri.punctures() {
        match PunctureChart::with_quiver(tri, &seed, &layout, p.id) {
            Ok(ch) => charts.push(ch),
            Err(Error::MissingChart(_)) => {
                checks.push(ok(format!("{name}: puncture {} has no chart; skipped", p.id)));
            }
            Err(e) => return Err(e),
        }
    }
    if charts.is_empty() {
        return Ok(checks);
    }
    let samples = relation_samples(&seed, &charts, 1000, rng_seed);

    for ch in &charts {
        let p_id = ch.puncture;
        for s in [1, 2] {
            let bad = samples.iter().find(|p| {
                let twice = weyl_pl(s, &weyl_pl(s, p, ch, tri).unwrap(), ch, tri).unwrap();
                !eq_unfrozen(&twice, p, &seed)
            });
            checks.push(check(
                format!("{name}: involution of r_{s} at puncture {p_id}"),
                bad.is_none(),
                bad.map(|p| json!(p)),
            ));
            let bad = samples.iter().find(|p| {
                let image = weyl_pl(s, p, ch, tri).unwrap();
                casimir(&image, ch).unwrap() != reflect(s, &casimir(p, ch).unwrap())
            });
            checks.push(check(
                format!("{name}: theta equivariance of r_{s} at puncture {p_id}"),
                bad.is_none(),
                bad.map(|p| json!(p)),
            ));
        }
        let bad = samples.iter().find(|p| {
            let lhs = weyl_pl(1, &weyl_pl(2, &weyl_pl(1, p, ch, tri).unwrap(), ch, tri).unwrap(), ch, tri)
                .unwrap();
            let rhs = weyl_pl(2, &weyl_pl(1, &weyl_pl(2, p, ch, tri).unwrap(), ch, tri).unwrap(), ch, tri)
                .unwrap();
            !eq_unfrozen(&lhs, &rhs, &seed)
        });
        checks.push(check(
            format!("{name}: braid relation at puncture {p_id}"),
            bad.is_none(),
            bad.map(|p| json!(p)),
        ));
    }

    for (i, ch1) in charts.iter().enumerate() {
        for ch2 in charts.iter().skip(i + 1) {
            for s in [1, 2] {
                for t in [1, 2] {
                    let bad = samples.iter().find(|p| {
                        let ab =
                            weyl_pl(t, &weyl_pl(s, p, ch1, tri).unwrap(), ch2, tri).unwrap();
                        let ba =
                            weyl_pl(s, &weyl_pl(t, p, ch2, tri).unwrap(), ch1, tri).unwrap();
                        !eq_unfrozen(&ab, &ba, &seed)
                    });
                    checks.push(check(
                        format!(
                            "{name}: r_{s} at puncture {} commutes with r_{t} at puncture {}",
                            ch1.puncture, ch2.puncture
                        ),
                        bad.is_none(),
                        bad.map(|p| json!(p)),
                    ));
                }
            }
        }
    }

    Ok(checks)
}

// -------------------------------------------------------- loop vs closed

fn weyl_loop_vs_pl(rng_seed: u64) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let tri = fixtures::load("dstar")?;
    let ch = PunctureChart::new(&tri, 1)?;
    let samples = x_samples_unfrozen_grid(&ch.seed, 1000, rng_seed);

    for s in [1, 2] {
        for form in [LoopForm::Palindrome, LoopForm::Straight] {
            let path = weyl_loop(s, &ch, form)?;
            let after = apply_path_to_seed(&ch.seed, &path)?;
            checks.push(check(
                format!("loop r_{s} ({form:?}) closes in the exchange graph"),
                after == ch.seed,
                Some(json!({ "matrix_after": after.matrix2 })),
            ));
            let bad = samples.iter().find(|p| {
                let (looped, _) = apply_path(p, &ch.seed, &path).unwrap();
                let closed = weyl_pl(s, p, &ch, &tri).unwrap();
                !eq_unfrozen(&looped, &closed, &ch.seed)
            });
            checks.push(check(
                format!("loop r_{s} ({form:?}) equals the closed form"),
                bad.is_none(),
                bad.map(|p| json!(p)),
            ));
        }

        // reorderings of the cycle walk that define the same loop
        let local_path = |mutations: &[usize], pair: (usize, usize)| {
            let mut steps: Vec<MutationStep> = mutations
                .iter()
                .map(|&l| MutationStep::Mutate(ch.global(l)))
                .collect();
            steps.push(MutationStep::Permute(
                crate::seed::Permutation::transposition(
                    ch.seed.size,
                    ch.global(pair.0),
                    ch.global(pair.1),
                )
                .0,
            ));
            MutationPath(steps)
        };
        let reordered: Vec<MutationPath> = match s {
            1 => vec![
                local_path(&[3, 4, 6, 5, 4, 3], (5, 6)),
                local_path(&[5, 6, 3, 4, 6, 5], (3, 4)),
                // palindrome with the outward leg reordered
                MutationPath(
                    local_path(&[4, 3, 5], (5, 6))
                        .0
                        .into_iter()
                        .chain([5, 3, 4].map(|l| MutationStep::Mutate(ch.global(l))))
                        .collect(),
                ),
            ],
            _ => vec![local_path(&[2, 1], (1, 2))],
        };
        for (i, path) in reordered.iter().enumerate() {
            let bad = samples.iter().find(|p| {
                let (looped, _) = apply_path(p, &ch.seed, path).unwrap();
                let closed = weyl_pl(s, p, &ch, &tri).unwrap();
                !eq_unfrozen(&looped, &closed, &ch.seed)
            });
            checks.push(check(
                format!("reordered loop r_{s} (variant {i}) equals the closed form"),
                bad.is_none(),
                bad.map(|p| json!(p)),
            ));
        }
    }

    Ok(checks)
}

// ----------------------------------------------------------- exact sequence

fn exact_sequence(surface: Option<(&str, &Triangulation)>) -> Result<Vec<CheckResult>> {
    if let Some((name, tri)) = surface {
        let mut checks = exact_sequence_on(name, tri)?;
        checks.push(count_formula_check(name, tri));
        return Ok(checks);
    }
    let mut checks = Vec::new();

    for (name, kernel, annihilator) in
        [("dstar", 2, 6), ("square", 0, 8), ("punctured_torus", 2, 2)]
    {
        let tri = fixtures::load(name)?;
        let report = verify_exact_sequence(&tri)?;
        checks.push(check(
            format!("{name}: kernel rank"),
            report.kernel_rank == kernel,
            Some(json!({ "got": report.kernel_rank, "want": kernel })),
        ));
        checks.push(check(
            format!("{name}: annihilator rank"),
            report.annihilator_rank == annihilator,
            Some(json!({ "got": report.annihilator_rank, "want": annihilator })),
        ));
        checks.push(check(
            format!("{name}: explicit vectors and independence"),
            report.passed,
            Some(json!(report)),
        ));
    }

    // theta after the ensemble map vanishes identically on the disk chart
    let (_, ch) = catalog::dstar_chart()?;
    let bad = orthant_samples(10, 0, 0).into_iter().find(|coords| {
        let a = TropicalPoint::from_coords(Flavor::A, coords.clone());
        let x = ensemble_tropical(&a, &ch.seed).unwrap();
        !casimir(&x, &ch).unwrap().is_zero()
    });
    checks.push(check(
        "dstar: casimir after ensemble vanishes on the full sign grid",
        bad.is_none(),
        bad.map(|c| json!(c)),
    ));

    // the peripheral shift vector generates the kernel direction
    let mut shift = TropicalPoint::zero(Flavor::A, 10);
    for l in [1, 2] {
        shift.set(ch.global(l), Rat::new(1, 3));
    }
    for l in [3, 4, 5, 6] {
        shift.set(ch.global(l), Rat::new(2, 3));
    }
    let image = ensemble_tropical(&shift, &ch.seed)?;
    checks.push(check(
        "dstar: peripheral shift direction maps to zero",
        image == TropicalPoint::zero(Flavor::X, 10),
        Some(json!(image)),
    ));

    // count formulas on every fixture
    for name in fixtures::NAMES {
        let tri = fixtures::load(name)?;
        checks.push(count_formula_check(name, &tri));
    }

    Ok(checks)
}

fn exact_sequence_on(name: &str, tri: &Triangulation) -> Result<Vec<CheckResult>> {
    let report = verify_exact_sequence(tri)?;
    Ok(vec![
        check(
            format!("{name}: kernel rank equals twice the puncture count"),
            report.kernel_rank == report.expected_kernel_rank,
            Some(json!({ "got": report.kernel_rank, "want": report.expected_kernel_rank })),
        ),
        check(
            format!("{name}: annihilator rank equals twice the marked point count"),
            report.annihilator_rank == report.expected_annihilator_rank,
            Some(json!({
                "got": report.annihilator_rank,
                "want": report.expected_annihilator_rank,
            })),
        ),
        check(
            format!("{name}: explicit vectors and independence"),
            report.passed,
            Some(json!(report)),
        ),
    ])
}

fn count_formula_check(name: &str, tri: &Triangulation) -> CheckResult {
    let chi = tri.euler_char_star();
    let nb = tri.num_special() as i64;
    let pass = tri.validate().is_empty()
        && tri.num_edges() as i64 == -3 * chi + 2 * nb
        && tri.num_interior_edges() as i64 == -3 * chi + nb
        && tri.num_triangles() as i64 == -2 * chi + nb
        && tri.quiver_size() as i64 == -8 * chi + 5 * nb
        && tri.quiver_unfrozen_size() as i64 == -8 * chi + 3 * nb;
    check(format!("{name}: count formulas"), pass, None)
}

// -------------------------------------------------------- flip consistency

fn flip_consistency(
    rng_seed: u64,
    surface: Option<(&str, &Triangulation)>,
) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let surfaces: Vec<(String, Triangulation)> = match surface {
        Some((name, tri)) => vec![(name.to_string(), tri.clone())],
        None => ["dstar", "triangle", "square", "annulus", "punctured_torus", "dstar2"]
            .iter()
            .map(|&n| fixtures::load(n).map(|t| (n.to_string(), t)))
            .collect::<Result<_>>()?,
    };
    for (name, tri) in &surfaces {
        let (seed, _) = build_quiver(tri)?;
        let interior: Vec<usize> = tri
            .edges
            .iter()
            .filter(|e| e.kind == crate::surface::EdgeKind::Interior)
            .map(|e| e.id)
            .collect();
        if interior.is_empty() {
            checks.push(ok(format!("{name}: no interior edges to flip")));
            continue;
        }
        for e in interior {
            // flips that would create a self-folded triangle are rejected;
            // check the rejection is genuine (the quadrilateral repeats a
            // side next to itself) and move on
            let res = match flip(tri, e) {
                Ok(res) => res,
                Err(Error::SelfGluedQuadrilateral(_)) => {
                    let genuine = quad_is_self_glued(tri, e);
                    checks.push(check(
                        format!("{name}: flip of edge {e} correctly rejected"),
                        genuine,
                        None,
                    ));
                    continue;
                }
                Err(other) => return Err(other),
            };
            checks.push(check(
                format!("{name}: flip of edge {e} yields a valid triangulation"),
                res.flipped.validate().is_empty(),
                Some(json!(res.flipped.validate())),
            ));

            // rebuilt-quiver equality after the relabeling
            let mutated = apply_path_to_seed(&seed, &res.path)?;
            let relabeled = mutated.permute(&res.relabel)?;
            let (rebuilt, _) = build_quiver(&res.flipped)?;
            checks.push(check(
                format!("{name}: flip of edge {e} matches the rebuilt quiver"),
                eq_outside_frozen_block(&relabeled, &rebuilt),
                Some(json!({ "relabeled": relabeled.matrix2, "rebuilt": rebuilt.matrix2 })),
            ));

            // both routes agree as maps on X-points
            let samples = flip_samples(&seed, rng_seed ^ e as u64);
            let bad = samples.iter().find(|p| {
                let (a, _) = apply_path(p, &seed, &res.path).unwrap();
                let (b, _) = apply_path(p, &seed, &res.alt_path).unwrap();
                !eq_unfrozen(&a, &b, &seed)
            });
            checks.push(check(
                format!("{name}: both flip routes of edge {e} agree on X-points"),
                bad.is_none(),
                bad.map(|p| json!(p)),
            ));

            // double flip: flipping the new diagonal undoes the flip
            let res2 = flip(&res.flipped, e)?;
            let twice = apply_path_to_seed(&rebuilt, &res2.path)?;
            let back = twice.permute(&res2.relabel)?;
            let (rebuilt2, _) = build_quiver(&res2.flipped)?;
            let chained = eq_outside_frozen_block(&back, &rebuilt2);
            let restored = seeds_match_up_to_roles(tri, &res2.flipped)?;
            checks.push(check(
                format!("{name}: double flip of edge {e} restores the quiver up to relabeling"),
                chained && restored,
                Some(json!({ "chained": chained, "restored": restored })),
            ));
        }
    }
    Ok(checks)
}

/// Whether the quadrilateral around an interior edge repeats one of its
/// sides in an adjacent position (or has coinciding triangles), so that the
/// flip is genuinely undefined without self-folds.
fn quad_is_self_glued(tri: &Triangulation, e: usize) -> bool {
    let slots = tri.slots_at_edge(e);
    let [(ta, sa), (tb, sb)] = slots.as_slice() else {
        return false;
    };
    if ta == tb {
        return true;
    }
    let side = |t: usize, s: usize, k: usize| tri.triangles[t].slots[(s + k) % 3].edge;
    let (a1, a2) = (side(*ta, *sa, 1), side(*ta, *sa, 2));
    let (b1, b2) = (side(*tb, *sb, 1), side(*tb, *sb, 2));
    // adjacent sides around the quadrilateral: a1 a2 b1 b2 cyclically
    a2 == b1 || b2 == a1 || [a1, a2, b1, b2].contains(&e)
}

fn eq_outside_frozen_block(a: &ExchangeSeed, b: &ExchangeSeed) -> bool {
    a.size == b.size
        && a.frozen == b.frozen
        && (1..=a.size).all(|i| {
            (1..=a.size).all(|j| {
                (a.is_frozen(i) && a.is_frozen(j)) || a.eps2(i, j) == b.eps2(i, j)
            })
        })
}

/// Ternary grid on the unfrozen coordinates when small enough, otherwise a
/// seeded random batch; plus random rational points on all coordinates.
fn flip_samples(seed: &ExchangeSeed, rng_seed: u64) -> Vec<TropicalPoint> {
    let unfrozen = seed.unfrozen().count();
    if unfrozen <= 8 {
        x_samples_unfrozen_grid(seed, 200, rng_seed)
    } else {
        random_rational_vectors(seed.size, 800, rng_seed)
            .into_iter()
            .map(|coords| TropicalPoint::from_coords(Flavor::X, coords))
            .collect()
    }
}

/// Quivers of two triangulations over the same cells agree up to matching
/// roles: edges identified by id (allowing reversed orientation), faces by
/// their slot-edge multisets (trying the possibilities when ambiguous).
fn seeds_match_up_to_roles(a: &Triangulation, b: &Triangulation) -> Result<bool> {
    let (seed_a, layout_a) = build_quiver(a)?;
    let (seed_b, layout_b) = build_quiver(b)?;
    if seed_a.size != seed_b.size {
        return Ok(false);
    }
    let n = seed_a.size;

    // edge-vertex maps: same id; orientation either kept or reversed
    let mut edge_choices: Vec<Vec<(VertexId, VertexId, VertexId, VertexId)>> = Vec::new();
    for e in &a.edges {
        let a1 = layout_a.edge_vertex[&(e.id, 1)];
        let a2 = layout_a.edge_vertex[&(e.id, 2)];
        let b1 = layout_b.edge_vertex[&(e.id, 1)];
        let b2 = layout_b.edge_vertex[&(e.id, 2)];
        let other = b.edge(e.id).ok_or_else(|| {
            Error::InvalidTriangulation(format!("edge {} missing from the flipped surface", e.id))
        })?;
        let mut choices = Vec::new();
        if other.ends == e.ends {
            choices.push((a1, b1, a2, b2));
        }
        if other.ends == [e.ends[1], e.ends[0]] {
            choices.push((a1, b2, a2, b1));
        }
        if choices.is_empty() {
            return Ok(false);
        }
        edge_choices.push(choices);
    }

    // face matching constrained by slot-edge multisets
    let face_sig = |t: &crate::surface::Triangle| {
        let mut edges: Vec<usize> = t.slots.iter().map(|s| s.edge).collect();
        edges.sort_unstable();
        edges
    };
    let sigs_a: Vec<Vec<usize>> = a.triangles.iter().map(face_sig).collect();
    let sigs_b: Vec<Vec<usize>> = b.triangles.iter().map(face_sig).collect();
    let face_candidates: Vec<Vec<usize>> = sigs_a
        .iter()
        .map(|sa| (0..sigs_b.len()).filter(|&tb| &sigs_b[tb] == sa).collect())
        .collect();

    // enumerate the small product of choices
    let mut stack = vec![(0usize, vec![0usize; 0], vec![false; sigs_b.len()])];
    let mut face_assignments = Vec::new();
    while let Some((idx, partial, used)) = stack.pop() {
        if idx == sigs_a.len() {
            face_assignments.push(partial);
            continue;
        }
        for &cand in &face_candidates[idx] {
            if !used[cand] {
                let mut next_partial = partial.clone();
                next_partial.push(cand);
                let mut next_used = used.clone();
                next_used[cand] = true;
                stack.push((idx + 1, next_partial, next_used));
            }
        }
    }

    let edge_counts: Vec<usize> = edge_choices.iter().map(|c| c.len()).collect();
    let total_edge_combos: usize = edge_counts.iter().product();
    for faces in &face_assignments {
        for combo in 0..total_edge_combos {
            let mut perm = vec![0usize; n];
            let mut c = combo;
            for (e_idx, choices) in edge_choices.iter().enumerate() {
                let pick = choices[c % choices.len()];
                c /= choices.len();
                let _ = e_idx;
                perm[pick.0 - 1] = pick.1;
                perm[pick.2 - 1] = pick.3;
            }
            for (ta, &tb) in faces.iter().enumerate() {
                perm[layout_a.face_vertex[&ta] - 1] = layout_b.face_vertex[&tb];
            }
            let sigma = crate::seed::Permutation(perm);
            if sigma.check_size(n).is_ok() {
                if let Ok(permuted) = seed_a.permute(&sigma) {
                    if eq_outside_frozen_block(&permuted, &seed_b) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

// ------------------------------------------------------------------ dynkin

fn dynkin_suite(
    rng_seed: u64,
    surface: Option<(&str, &Triangulation)>,
) -> Result<Vec<CheckResult>> {
    let (name, tri) = match surface {
        Some((name, tri)) => (name.to_string(), tri.clone()),
        None => ("dstar".to_string(), fixtures::load("dstar")?),
    };
    let mut checks = Vec::new();
    let (seed, layout) = build_quiver(&tri)?;
    let samples = x_samples_unfrozen_grid(&seed, 1000, rng_seed);

    let bad = samples.iter().find(|p| {
        let twice = dynkin_pl(&dynkin_pl(p, &tri, &layout).unwrap(), &tri, &layout).unwrap();
        !eq_unfrozen(&twice, p, &seed)
    });
    checks.push(check(
        format!("{name}: involution on unfrozen coordinates"),
        bad.is_none(),
        bad.map(|p| json!(p)),
    ));

    for p_marked in tri.punctures() {
        let ch = match PunctureChart::with_quiver(&tri, &seed, &layout, p_marked.id) {
            Ok(ch) => ch,
            Err(Error::MissingChart(_)) => {
                checks.push(ok(format!(
                    "{name}: puncture {} has no chart; skipped",
                    p_marked.id
                )));
                continue;
            }
            Err(e) => return Err(e),
        };
        let bad = samples.iter().find(|p| {
            let star = dynkin_pl(p, &tri, &layout).unwrap();
            casimir(&star, &ch).unwrap() != dynkin_star(&casimir(p, &ch).unwrap())
        });
        checks.push(check(
            format!("{name}: theta compatibility at puncture {}", ch.puncture),
            bad.is_none(),
            bad.map(|p| json!(p)),
        ));

        // conjugation swaps the two reflection loops
        for (s, t) in [(1, 2), (2, 1)] {
            let path = weyl_loop(t, &ch, LoopForm::Palindrome)?;
            let bad = samples.iter().find(|p| {
                let conj = dynkin_pl(
                    &apply_path(&dynkin_pl(p, &tri, &layout).unwrap(), &seed, &path)
                        .unwrap()
                        .0,
                    &tri,
                    &layout,
                )
                .unwrap();
                let direct = weyl_pl(s, p, &ch, &tri).unwrap();
                !eq_unfrozen(&conj, &direct, &seed)
            });
            checks.push(check(
                format!(
                    "{name}: conjugation carries the r_{t} loop to r_{s} at puncture {}",
                    ch.puncture
                ),
                bad.is_none(),
                bad.map(|p| json!(p)),
            ));
        }
    }

    Ok(checks)
}

// ------------------------------------------------------------------ a-side

fn a_side() -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let tri = fixtures::load("dstar")?;
    let ch = PunctureChart::new(&tri, 1)?;

    // restricted sign grid over all ten coordinates
    let grid: Vec<TropicalPoint> = orthant_samples(10, 0, 0)
        .into_iter()
        .map(|coords| TropicalPoint::from_coords(Flavor::A, coords))
        .collect();

    for s in [1, 2] {
        let path = weyl_loop(s, &ch, LoopForm::Palindrome)?;
        let bad = grid.iter().find(|a| {
            let (looped, _) = apply_path(a, &ch.seed, &path).unwrap();
            looped != weyl_a_action(a, &ch, s).unwrap()
        });
        checks.push(check(
            format!("A-mutation along the r_{s} loop equals the potential shift rule"),
            bad.is_none(),
            bad.map(|a| json!(a)),
        ));
    }

    // ensemble map intertwines the A-side and X-side loops
    let bad = grid.iter().step_by(7).find(|a| {
        [1, 2].into_iter().any(|s| {
            let path = weyl_loop(s, &ch, LoopForm::Palindrome).unwrap();
            let (a_looped, _) = apply_path(a, &ch.seed, &path).unwrap();
            let lhs = ensemble_tropical(&a_looped, &ch.seed).unwrap();
            let x = ensemble_tropical(a, &ch.seed).unwrap();
            let (rhs, _) = apply_path(&x, &ch.seed, &path).unwrap();
            !eq_unfrozen(&lhs, &rhs, &ch.seed)
        })
    });
    checks.push(check(
        "ensemble map intertwines the A- and X-side loops",
        bad.is_none(),
        bad.map(|a| json!(a)),
    ));

    // peripheral vector: weights (1,0) reflect to (-1,1)
    let mut peripheral = TropicalPoint::zero(Flavor::A, 10);
    for l in [1, 2] {
        peripheral.set(ch.global(l), Rat::new(1, 3));
    }
    for l in [3, 4, 5, 6] {
        peripheral.set(ch.global(l), Rat::new(2, 3));
    }
    let u = |a: &TropicalPoint| -> Result<(Rat, Rat)> {
        Ok((potential_u(a, &ch, 1)?, potential_u(a, &ch, 2)?))
    };
    let base = u(&peripheral)?;
    let reflected = weyl_a_action(&peripheral, &ch, 1)?;
    let after = u(&reflected)?;
    checks.push(check(
        "peripheral weights transform (1,0) -> (-1,1) under the first reflection",
        base == (Rat::int(1), Rat::zero()) && after == (Rat::int(-1), Rat::int(1)),
        Some(json!({
            "before": [base.0, base.1],
            "after": [after.0, after.1],
        })),
    ));

    Ok(checks)
}

// ------------------------------------------------------------ end calculus

fn end_calculus() -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let all = ends::enumerate_multisets(4);
    checks.push(check("625 multisets enumerated", all.len() == 625, None));

    let mut involution_ok = true;
    let mut braid_ok = true;
    let mut conj_ok = true;
    let mut theta_ok = true;
    let mut witness = None;
    for m in &all {
        let n = ends::normalize(m);
        for s in [1, 2] {
            if ends::weyl_act(s, &ends::weyl_act(s, &n)) != n {
                involution_ok = false;
            }
            if ends::theta(&ends::weyl_act(s, m)) != reflect(s, &ends::theta(m)) {
                theta_ok = false;
            }
        }
        let lhs = ends::weyl_act(1, &ends::weyl_act(2, &ends::weyl_act(1, &n)));
        let rhs = ends::weyl_act(2, &ends::weyl_act(1, &ends::weyl_act(2, &n)));
        if lhs != rhs {
            braid_ok = false;
        }
        if ends::dynkin(&ends::weyl_act(1, &ends::dynkin(&n))) != ends::weyl_act(2, &n) {
            conj_ok = false;
        }
        if !(involution_ok && braid_ok && conj_ok && theta_ok) && witness.is_none() {
            witness = Some(json!(n.notation()));
        }
    }
    checks.push(check("involutivity over all multisets", involution_ok, witness.clone()));
    checks.push(check("braid relation over all multisets", braid_ok, witness.clone()));
    checks.push(check("Dynkin conjugation over all multisets", conj_ok, witness.clone()));
    checks.push(check("theta equivariance over all multisets", theta_ok, witness));

    // the two published verbatim computations
    let start = EndMultiset::singleton(PrimitiveEnd::OutPlus);
    let twice = ends::weyl_act(1, &ends::weyl_act(1, &start));
    checks.push(check("double reflection on a single outgoing plus end", twice == start, None));
    let chain = ends::weyl_act(1, &ends::weyl_act(2, &ends::weyl_act(1, &start)));
    checks.push(check(
        "braid chain lands on the outgoing minus end",
        chain == EndMultiset::singleton(PrimitiveEnd::OutMinus),
        Some(json!(chain.notation())),
    ));

    // contribution table against the tag dictionary
    let tag_ok = {
        use ends::ExtendedEnd::*;
        [
            Primitive(PrimitiveEnd::OutPlus),
            LoopOut,
            Primitive(PrimitiveEnd::OutMinus),
            Primitive(PrimitiveEnd::InPlus),
            LoopIn,
            Primitive(PrimitiveEnd::InMinus),
        ]
        .into_iter()
        .all(|k| {
            crate::lattice::fp_weight_vector(&ends::to_fp_tag(k))
                .map(|w| w == ends::extended_contribution(k))
                .unwrap_or(false)
        })
    };
    checks.push(check("tag dictionary matches the contributions", tag_ok, None));

    for e in ALL_ENDS {
        let pass = ends::theta(&ends::weyl_rewrite(1, e)) == reflect(1, &ends::contribution(e))
            && ends::theta(&ends::weyl_rewrite(2, e)) == reflect(2, &ends::contribution(e));
        checks.push(check(format!("rewrite of {e} reflects its contribution"), pass, None));
    }

    Ok(checks)
}

// ------------------------------------------------------- p-cluster tracks

fn p_cluster_tracks() -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let (_, ch) = catalog::dstar_chart()?;
    let w1 = || Coweight::fundamental(1);
    let w2 = || Coweight::fundamental(2);

    // the move toward the Grassmannian chart: mutate labels 5 then 3
    let path53 = MutationPath(vec![
        MutationStep::Mutate(ch.global(5)),
        MutationStep::Mutate(ch.global(3)),
    ]);
    let track = catalog::track_p_cluster(&ch, &path53)?;
    let star = |st: usize, l: usize| track.stations[st].theta_star[&ch.global(l)].clone();
    let base_ok = star(0, 1) == w1()
        && star(0, 2) == w1()
        && [3, 4, 5, 6].into_iter().all(|l| star(0, l) == w2());
    checks.push(check("base station carries the standard star values", base_ok, None));
    let st1_ok = star(1, 5).is_zero() && [1, 2].into_iter().all(|l| star(1, l) == w1())
        && [3, 4, 6].into_iter().all(|l| star(1, l) == w2());
    checks.push(check("first mutation zeroes the star value at label 5", st1_ok, None));
    let st2_ok = star(2, 5).is_zero()
        && star(2, 3).is_zero()
        && [1, 2].into_iter().all(|l| star(2, l) == w1())
        && [4, 6].into_iter().all(|l| star(2, l) == w2());
    checks.push(check("second mutation zeroes the star value at label 3", st2_ok, None));

    // the region-mutation walk: continue with labels 2, 6, 4
    let path_dosp = MutationPath(vec![
        MutationStep::Mutate(ch.global(5)),
        MutationStep::Mutate(ch.global(3)),
        MutationStep::Mutate(ch.global(2)),
        MutationStep::Mutate(ch.global(6)),
        MutationStep::Mutate(ch.global(4)),
    ]);
    let track = catalog::track_p_cluster(&ch, &path_dosp)?;
    let cluster = |st: usize| -> Vec<Weight> {
        let mut v: Vec<Weight> = [1, 2, 4, 6]
            .into_iter()
            .map(|l| track.stations[st].theta_star[&ch.global(l)].to_weight())
            .collect();
        v.sort_by_key(|w| (w.w1.to_string(), w.w2.to_string()));
        v.dedup();
        v
    };
    let sorted = |mut v: Vec<Weight>| {
        v.sort_by_key(|w| (w.w1.to_string(), w.w2.to_string()));
        v.dedup();
        v
    };
    let e1 = Weight::from_z3(1, 0, 0);
    let e2 = Weight::from_z3(0, 1, 0);
    let e3 = Weight::from_z3(0, 0, 1);
    let e12 = Weight::from_z3(1, 1, 0);
    let zero = Weight::zero();
    let stations: [(usize, Vec<Weight>); 4] = [
        (2, sorted(vec![e1.clone(), e12.clone()])),
        (3, sorted(vec![e1.clone(), e2.clone(), e12.clone()])),
        (4, sorted(vec![e1.clone(), e2.clone(), e12, zero.clone()])),
        (5, sorted(vec![e1, e2, e3, zero])),
    ];
    for (st, want) in stations {
        let got = cluster(st);
        checks.push(check(
            format!("region walk station {} carries the expected cluster", st - 2),
            got == want,
            Some(json!({ "got": got, "want": want })),
        ));
    }

    // the track along the straight second-reflection loop
    let path = weyl_loop(2, &ch, LoopForm::Straight)?;
    let track = catalog::track_p_cluster(&ch, &path)?;
    let theta_at = |st: usize, l: usize| track.stations[st].theta[&ch.global(l)].clone();
    let hook = Coweight::new(Rat::int(1), Rat::int(-1));
    let st0 = [1, 2].into_iter().all(|l| theta_at(0, l) == w2())
        && [3, 4, 5, 6].into_iter().all(|l| theta_at(0, l) == w1());
    let st1 = theta_at(1, 1) == hook
        && theta_at(1, 2) == w2()
        && [3, 4, 5, 6].into_iter().all(|l| theta_at(1, l) == w1());
    let st2 = theta_at(2, 1) == hook
        && theta_at(2, 2) == hook
        && [3, 4, 5, 6].into_iter().all(|l| theta_at(2, l) == w1());
    checks.push(check("reflection track station 0", st0, None));
    checks.push(check("reflection track station 1", st1, None));
    checks.push(check("reflection track station 2", st2, None));

    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for name in SUITES {
            let t0 = std::time::Instant::now();
            let report = run_suite(name, 2024).unwrap();
            for c in &report.checks {
                assert!(c.pass, "{name}: {} {:?}", c.name, c.witness);
            }
            assert!(report.passed);
            println!("suite {name}: {} checks in {:?}", report.checks.len(), t0.elapsed());
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nonsense", 0).is_err());
    }

    #[test]
    fn reports_serialize() {
        let report = run_suite("casimir-table", 0).unwrap();
        let js = serde_json::to_value(&report).unwrap();
        assert_eq!(js["suite"], "casimir-table");
        assert_eq!(js["anchor"], "Prop. Casimir");
        assert!(js["checks"].as_array().unwrap().len() > 10);
    }
}
