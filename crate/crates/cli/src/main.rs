//! Command-line front end: build quivers, run mutation paths, evaluate the
//! Casimir/Weyl/Dynkin maps, and execute the verification suites.
//!
//! Output is machine-readable JSON (pretty-printed with `--pretty`).
//! Exit codes: 0 on success or all checks passing, 1 on verification
//! failure, 2 on usage or input errors.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use sl3lam::catalog;
use sl3lam::chart::PunctureChart;
use sl3lam::ends::{self, EndMultiset, ExtendedEnd, PrimitiveEnd};
use sl3lam::fixtures;
use sl3lam::maps::{self, LoopForm};
use sl3lam::quiver::build_quiver;
use sl3lam::seed::{apply_path, Flavor, MutationPath, TropicalPoint};
use sl3lam::surface::{PointKind, Triangulation};
use sl3lam::verify;

#[derive(Parser)]
#[command(name = "sl3lam", version, about = "Tropical cluster machinery for sl3-laminations")]
struct Cli {
    /// Pretty-print the JSON output
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for the deterministic random samples used by verification
    #[arg(long, global = true, default_value_t = 2024)]
    rng_seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the exchange seed and role layout of a triangulated surface
    Quiver(SurfaceArg),
    /// Apply a mutation path to a tropical point
    Mutate {
        #[command(flatten)]
        surface: SurfaceArg,
        /// Path as JSON, or @FILE
        #[arg(long)]
        path: String,
        /// Point as JSON, or @FILE
        #[arg(long)]
        point: String,
    },
    /// Flip an interior edge; prints the new surface, the mutation routes
    /// and the relabeling
    Flip {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(long)]
        edge: usize,
    },
    /// Evaluate the tropicalized Casimir map at a puncture
    Casimir {
        #[command(flatten)]
        chart: ChartArg,
        #[arg(long)]
        point: String,
    },
    /// Apply a Weyl reflection at a puncture to an X- or A-point
    Weyl {
        #[command(flatten)]
        chart: ChartArg,
        #[arg(long)]
        point: String,
        /// Generator index: 1 or 2
        #[arg(long, short = 's')]
        generator: usize,
        /// closed | loop | loop-straight
        #[arg(long, default_value = "closed")]
        method: String,
    },
    /// Apply the Dynkin involution for a triangulation
    Dynkin {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(long)]
        point: String,
    },
    /// Operate on multisets of signed ends at a puncture
    Ends {
        /// Multiset in counted notation, e.g. "2*i+ o-"
        #[arg(long)]
        multiset: Option<String>,
        /// r1 | r2 | dynkin | normalize | theta
        #[arg(long)]
        action: Option<String>,
        /// Print the tag of one end kind: i+ i- o+ o- loop-in loop-out
        #[arg(long)]
        tag_of: Option<String>,
    },
    /// Print the golden table of elementary braids
    Catalog {
        /// Also list orientation reversals and half-turn rotations
        #[arg(long)]
        expand: bool,
    },
    /// Track the lamination cluster along a mutation path
    Track {
        #[command(flatten)]
        chart: ChartArg,
        /// Path as JSON, or @FILE
        #[arg(long)]
        path: String,
    },
    /// Run verification suites
    Verify {
        /// Suite name; see --list
        #[arg(long, conflicts_with = "all")]
        suite: Option<String>,
        /// Run every suite
        #[arg(long)]
        all: bool,
        /// List the available suites
        #[arg(long)]
        list: bool,
        /// Surface for the surface-parametric suites
        #[arg(long)]
        surface: Option<String>,
    },
}

#[derive(Args)]
struct SurfaceArg {
    /// Surface JSON file, or a built-in name (dstar, triangle, square,
    /// annulus, punctured_torus, dstar2)
    #[arg(long, default_value = "dstar")]
    surface: String,
}

#[derive(Args)]
struct ChartArg {
    /// NAME[:PUNCTURE] where NAME is a surface file or built-in name and
    /// PUNCTURE is a marked-point id (defaults to the unique puncture)
    #[arg(long)]
    chart: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CliResult<T> = Result<T, String>;

fn load_surface(spec: &str) -> CliResult<(String, Triangulation)> {
    if let Some(raw) = fixtures::raw(spec) {
        return Ok((spec.to_string(), Triangulation::from_json(raw).map_err(err)?));
    }
    let text = fs::read_to_string(spec).map_err(|e| format!("cannot read {spec}: {e}"))?;
    let name = std::path::Path::new(spec)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| spec.to_string());
    Ok((name, Triangulation::from_json(&text).map_err(err)?))
}

fn load_chart(spec: &str) -> CliResult<(Triangulation, PunctureChart)> {
    let (surface_spec, puncture_spec) = match spec.rsplit_once(':') {
        Some((s, p)) => (s, Some(p)),
        None => (spec, None),
    };
    let (_, tri) = load_surface(surface_spec)?;
    let puncture = match puncture_spec.and_then(|p| p.parse::<usize>().ok()) {
        Some(id) => id,
        None => {
            let punctures: Vec<usize> =
                tri.marked_points.iter().filter(|m| m.kind == PointKind::Puncture).map(|m| m.id).collect();
            match punctures.as_slice() {
                [one] => *one,
                _ => {
                    return Err(format!(
                        "surface has {} punctures; name one as NAME:ID",
                        punctures.len()
                    ))
                }
            }
        }
    };
    let ch = PunctureChart::new(&tri, puncture).map_err(err)?;
    Ok((tri, ch))
}

fn arg_text(arg: &str) -> CliResult<String> {
    if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
    } else {
        Ok(arg.to_string())
    }
}

fn parse_point(arg: &str) -> CliResult<TropicalPoint> {
    serde_json::from_str(&arg_text(arg)?).map_err(|e| format!("bad point: {e}"))
}

fn parse_path(arg: &str) -> CliResult<MutationPath> {
    serde_json::from_str(&arg_text(arg)?).map_err(|e| format!("bad path: {e}"))
}

fn err(e: sl3lam::Error) -> String {
    e.to_string()
}

fn emit(cli: &Cli, value: &serde_json::Value) {
    let out = if cli.pretty {
        serde_json::to_string_pretty(value).expect("serializable")
    } else {
        serde_json::to_string(value).expect("serializable")
    };
    println!("{out}");
}

fn run(cli: &Cli) -> CliResult<ExitCode> {
    match &cli.command {
        Command::Quiver(s) => {
            let (_, tri) = load_surface(&s.surface)?;
            let (seed, layout) = build_quiver(&tri).map_err(err)?;
            emit(
                cli,
                &json!({
                    "seed": seed,
                    "layout": layout,
                    "counts": {
                        "edges": tri.num_edges(),
                        "interior_edges": tri.num_interior_edges(),
                        "triangles": tri.num_triangles(),
                        "vertices": tri.quiver_size(),
                        "unfrozen": tri.quiver_unfrozen_size(),
                    },
                }),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Mutate { surface, path, point } => {
            let (_, tri) = load_surface(&surface.surface)?;
            let (seed, _) = build_quiver(&tri).map_err(err)?;
            let path = parse_path(path)?;
            let point = parse_point(point)?;
            let (out, _) = apply_path(&point, &seed, &path).map_err(err)?;
            emit(cli, &json!(out));
            Ok(ExitCode::SUCCESS)
        }
        Command::Flip { surface, edge } => {
            let (_, tri) = load_surface(&surface.surface)?;
            let res = sl3lam::quiver::flip(&tri, *edge).map_err(err)?;
            emit(
                cli,
                &json!({
                    "flipped": res.flipped,
                    "path": res.path,
                    "alt_path": res.alt_path,
                    "relabel": res.relabel,
                }),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Casimir { chart, point } => {
            let (_, ch) = load_chart(&chart.chart)?;
            let point = parse_point(point)?;
            let theta = maps::casimir(&point, &ch).map_err(err)?;
            emit(cli, &json!(theta));
            Ok(ExitCode::SUCCESS)
        }
        Command::Weyl { chart, point, generator, method } => {
            let (tri, ch) = load_chart(&chart.chart)?;
            let point = parse_point(point)?;
            let out = match (point.flavor, method.as_str()) {
                (Flavor::X, "closed") => maps::weyl_pl(*generator, &point, &ch, &tri).map_err(err)?,
                (Flavor::X, "loop") | (Flavor::A, "loop") => {
                    let p = maps::weyl_loop(*generator, &ch, LoopForm::Palindrome).map_err(err)?;
                    apply_path(&point, &ch.seed, &p).map_err(err)?.0
                }
                (Flavor::X, "loop-straight") | (Flavor::A, "loop-straight") => {
                    let p = maps::weyl_loop(*generator, &ch, LoopForm::Straight).map_err(err)?;
                    apply_path(&point, &ch.seed, &p).map_err(err)?.0
                }
                (Flavor::A, "closed") => {
                    maps::weyl_a_action(&point, &ch, *generator).map_err(err)?
                }
                (_, other) => return Err(format!("unknown method {other:?}")),
            };
            emit(cli, &json!(out));
            Ok(ExitCode::SUCCESS)
        }
        Command::Dynkin { surface, point } => {
            let (_, tri) = load_surface(&surface.surface)?;
            let (_, layout) = build_quiver(&tri).map_err(err)?;
            let point = parse_point(point)?;
            let out = maps::dynkin_pl(&point, &tri, &layout).map_err(err)?;
            emit(cli, &json!(out));
            Ok(ExitCode::SUCCESS)
        }
        Command::Ends { multiset, action, tag_of } => {
            if let Some(kind) = tag_of {
                let extended = parse_extended_end(kind)?;
                let tag = ends::to_fp_tag(extended);
                emit(cli, &json!({ "kind": kind, "tag": tag }));
                return Ok(ExitCode::SUCCESS);
            }
            let Some(multiset) = multiset else {
                return Err("ends needs --multiset (or --tag-of)".into());
            };
            let m = EndMultiset::parse_notation(multiset).map_err(err)?;
            let action = action.as_deref().unwrap_or("theta");
            let (result, theta) = match action {
                "r1" => {
                    let out = ends::weyl_act(1, &m);
                    (Some(out.clone()), ends::theta(&out))
                }
                "r2" => {
                    let out = ends::weyl_act(2, &m);
                    (Some(out.clone()), ends::theta(&out))
                }
                "dynkin" => {
                    let out = ends::dynkin(&m);
                    (Some(out.clone()), ends::theta(&out))
                }
                "normalize" => {
                    let out = ends::normalize(&m);
                    (Some(out.clone()), ends::theta(&out))
                }
                "theta" => (None, ends::theta(&m)),
                other => return Err(format!("unknown ends action {other:?}")),
            };
            emit(
                cli,
                &json!({
                    "input": m.notation(),
                    "result": result.map(|r| r.notation()),
                    "theta": theta,
                }),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { expand } => {
            let entries = catalog::catalog().map_err(err)?;
            if !expand {
                emit(cli, &json!(entries));
                return Ok(ExitCode::SUCCESS);
            }
            let (tri, ch) = catalog::dstar_chart().map_err(err)?;
            let mut expanded = Vec::new();
            for e in &entries {
                expanded.push(e.clone());
                expanded.push(catalog::orientation_reverse(e, &tri, &ch).map_err(err)?);
                expanded.push(catalog::pi_rotation(e));
            }
            emit(cli, &json!(expanded));
            Ok(ExitCode::SUCCESS)
        }
        Command::Track { chart, path } => {
            let (_, ch) = load_chart(&chart.chart)?;
            let path = parse_path(path)?;
            let track = catalog::track_p_cluster(&ch, &path).map_err(err)?;
            emit(cli, &json!(track));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, all, list, surface } => {
            if *list {
                emit(cli, &json!(verify::SUITES));
                return Ok(ExitCode::SUCCESS);
            }
            let loaded = surface.as_deref().map(load_surface).transpose()?;
            let surface_ref = loaded.as_ref().map(|(n, t)| (n.as_str(), t));
            let reports = if *all {
                if surface_ref.is_some() {
                    return Err("--all runs the built-in fixture set; drop --surface".into());
                }
                verify::run_all(cli.rng_seed).map_err(err)?
            } else {
                let Some(name) = suite else {
                    return Err("verify needs --suite NAME or --all".into());
                };
                vec![verify::run_suite_on(name, cli.rng_seed, surface_ref).map_err(err)?]
            };
            let all_passed = reports.iter().all(|r| r.passed);
            emit(cli, &json!(reports));
            Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn parse_extended_end(kind: &str) -> CliResult<ExtendedEnd> {
    match kind {
        "loop-in" => Ok(ExtendedEnd::LoopIn),
        "loop-out" => Ok(ExtendedEnd::LoopOut),
        other => other
            .parse::<PrimitiveEnd>()
            .map(ExtendedEnd::Primitive)
            .map_err(|e| e.to_string()),
    }
}
