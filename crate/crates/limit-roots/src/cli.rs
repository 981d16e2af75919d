//! Command-line surface: enumeration, limit-point extraction,
//! classification, invariant audits and SVG rendering.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage error, 3 audit
//! violation. Errors go to stderr as one JSON object per line.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{audit_depth_norm, kappa_lambda, RootTable};
use crate::error::Error;
use crate::export;
use crate::limits::{
    act, act_vector, e2_circ_points, e2_points, f0_sample, quadric_polyline_samples, visible,
    LimitPoint, Word,
};
use crate::module::{GeometricModule, Vector};
use crate::normalize::TransverseHyperplane;
use crate::render::{render_svg, LimitStyle, Scene, SvgOptions};
use crate::spec::CoxeterSpec;

#[derive(Parser)]
#[command(
    name = "limit-roots",
    about = "Root systems of infinite Coxeter groups and their limit points",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Path to the group description JSON.
    #[arg(long)]
    spec: PathBuf,
    /// Enumeration depth bound.
    #[arg(long, default_value_t = 8)]
    max_depth: u32,
    /// Cut hyperplane: `default` or `custom:<comma-separated functional>`.
    #[arg(long, default_value = "default")]
    hyperplane: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum LimitMode {
    E2,
    E2circ,
    F0,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate positive roots by depth and export them as CSV.
    #[command(name = "enum")]
    Enumerate {
        #[command(flatten)]
        common: CommonArgs,
        /// Output CSV path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Export barycentric normalized roots instead of raw coordinates.
        #[arg(long, default_value_t = false)]
        normalized: bool,
    },
    /// Compute limit points (E2, E2-circle or the experimental F0 sampler).
    Limits {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value = "e2")]
        mode: LimitMode,
        /// Orbit word length for the F0 sampler.
        #[arg(long, default_value_t = 3)]
        orbit_length: usize,
        /// Output path; `.csv` selects CSV, anything else JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Signature, components and affine/indefinite classification.
    Classify {
        /// Path to the group description JSON.
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the invariant suites: residual identity, depth-norm bound,
    /// visibility equivariance.
    Audit {
        #[command(flatten)]
        common: CommonArgs,
        /// RNG seed for the equivariance trials.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random equivariance trials.
        #[arg(long, default_value_t = 300)]
        trials: usize,
        /// Violation tolerance.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Render the normalized scene (roots, quadric slice, limit points)
    /// to SVG.
    Render {
        #[command(flatten)]
        common: CommonArgs,
        /// Overlay limit points of this kind.
        #[arg(long, value_enum)]
        mode: Option<LimitMode>,
        /// Orbit word length for the F0 overlay.
        #[arg(long, default_value_t = 3)]
        orbit_length: usize,
        #[arg(long)]
        out: PathBuf,
        /// RNG seed recorded for reproducibility (sampling is
        /// deterministic; the seed namespaces output captions only).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 35.0)]
        azimuth: f64,
        #[arg(long, default_value_t = 22.0)]
        elevation: f64,
        /// Polyline sample count for the quadric slice.
        #[arg(long, default_value_t = 720)]
        conic_samples: usize,
    },
}

fn machine_error(message: &str) -> i32 {
    eprintln!("{}", serde_json::json!({ "error": message }));
    1
}

fn load(common_spec: &PathBuf) -> Result<(CoxeterSpec, GeometricModule), String> {
    let text = fs::read_to_string(common_spec)
        .map_err(|e| format!("cannot read {}: {e}", common_spec.display()))?;
    let spec = CoxeterSpec::from_json(&text).map_err(|e| format!("invalid spec JSON: {e}"))?;
    let module = GeometricModule::build(&spec).map_err(|e| e.to_string())?;
    Ok((spec, module))
}

fn cut_for(module: &GeometricModule, hyperplane: &str) -> Result<TransverseHyperplane, String> {
    if hyperplane == "default" {
        return Ok(TransverseHyperplane::default_cut(module));
    }
    if let Some(csv) = hyperplane.strip_prefix("custom:") {
        let values: Result<Vec<f64>, _> = csv.split(',').map(|t| t.trim().parse::<f64>()).collect();
        let values = values.map_err(|e| format!("bad functional: {e}"))?;
        if values.len() != module.dim() {
            return Err(format!(
                "functional has {} entries, module dimension is {}",
                values.len(),
                module.dim()
            ));
        }
        return TransverseHyperplane::from_functional(Vector::from_vec(values), module)
            .map_err(|e| e.to_string());
    }
    Err(format!("unknown hyperplane `{hyperplane}`"))
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, content).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn limit_points_for(
    mode: LimitMode,
    m: &GeometricModule,
    h: &TransverseHyperplane,
    table: &RootTable,
    max_depth: u32,
    orbit_length: usize,
) -> Vec<LimitPoint> {
    match mode {
        LimitMode::E2 => e2_points(m, h, table, max_depth),
        LimitMode::E2circ => e2_circ_points(m, h, table),
        LimitMode::F0 => f0_sample(m, h, orbit_length),
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run_cli<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprintln!("{e}");
            eprintln!("{}", serde_json::json!({ "error": e.to_string() }));
            return 2;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(message) => machine_error(&message),
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Enumerate {
            common,
            out,
            normalized,
        } => {
            let (_, module) = load(&common.spec)?;
            let cut = cut_for(&module, &common.hyperplane)?;
            let table =
                RootTable::enumerate(&module, common.max_depth).map_err(|e| e.to_string())?;
            let mut buf = Vec::new();
            if normalized {
                export::write_normalized_csv(&mut buf, &module, &cut, &table)
            } else {
                export::write_roots_csv(&mut buf, &module, &cut, &table)
            }
            .map_err(|e| e.to_string())?;
            write_or_print(&out, &String::from_utf8(buf).expect("csv is utf8"))?;
            Ok(0)
        }
        Command::Limits {
            common,
            mode,
            orbit_length,
            out,
        } => {
            let (_, module) = load(&common.spec)?;
            let cut = cut_for(&module, &common.hyperplane)?;
            let table =
                RootTable::enumerate(&module, common.max_depth).map_err(|e| e.to_string())?;
            let points =
                limit_points_for(mode, &module, &cut, &table, common.max_depth, orbit_length);
            let csv = out
                .as_ref()
                .map(|p| p.extension().is_some_and(|e| e == "csv"))
                .unwrap_or(false);
            let content = if csv {
                let mut buf = Vec::new();
                export::write_limit_csv(&mut buf, &module, &points).map_err(|e| e.to_string())?;
                String::from_utf8(buf).expect("csv is utf8")
            } else {
                let mut text =
                    serde_json::to_string_pretty(&export::limit_points_json(&module, &points))
                        .expect("json");
                text.push('\n');
                text
            };
            write_or_print(&out, &content)?;
            Ok(0)
        }
        Command::Classify { spec, out } => {
            let (cox, module) = load(&spec)?;
            let sig = module.signature();
            let class = if sig.is_positive_definite() {
                "finite"
            } else if sig.is_affine() {
                "affine"
            } else {
                "indefinite"
            };
            let gram_rows: Vec<Vec<f64>> = (0..module.rank())
                .map(|i| (0..module.rank()).map(|j| module.gram()[(i, j)]).collect())
                .collect();
            let report = serde_json::json!({
                "rank": cox.rank,
                "class": class,
                "signature": {
                    "positive": sig.n_positive,
                    "negative": sig.n_negative,
                    "zero": sig.n_zero,
                },
                "components": module.components(),
                "irreducible": module.is_irreducible(),
                "radical_cone_trivial": module.radical_cone_trivial(),
                "gram": gram_rows,
            });
            let mut text = serde_json::to_string_pretty(&report).expect("json");
            text.push('\n');
            write_or_print(&out, &text)?;
            Ok(0)
        }
        Command::Audit {
            common,
            seed,
            trials,
            tol,
        } => {
            let (_, module) = load(&common.spec)?;
            let cut = cut_for(&module, &common.hyperplane)?;
            let table =
                RootTable::enumerate(&module, common.max_depth).map_err(|e| e.to_string())?;
            Ok(run_audit(&module, &cut, &table, seed, trials, tol))
        }
        Command::Render {
            common,
            mode,
            orbit_length,
            out,
            seed,
            azimuth,
            elevation,
            conic_samples,
        } => {
            let (_, module) = load(&common.spec)?;
            let cut = cut_for(&module, &common.hyperplane)?;
            let table =
                RootTable::enumerate(&module, common.max_depth).map_err(|e| e.to_string())?;
            let mut scene = Scene::new(&module);
            scene
                .add_roots(&module, &cut, &table)
                .map_err(|e| e.to_string())?;
            match quadric_polyline_samples(&module, &cut, conic_samples) {
                Ok(samples) => scene.add_conic(&module, &cut, &samples),
                Err(Error::EmptyQuadric) => {}
                Err(e) => return Err(e.to_string()),
            }
            if let Some(mode) = mode {
                let style = match mode {
                    LimitMode::E2 => LimitStyle::E2,
                    LimitMode::E2circ => LimitStyle::E2Circ,
                    LimitMode::F0 => LimitStyle::F0,
                };
                let points =
                    limit_points_for(mode, &module, &cut, &table, common.max_depth, orbit_length);
                scene.add_limit_points(&module, &cut, &points, style);
            }
            let svg = render_svg(
                &scene,
                &SvgOptions {
                    azimuth,
                    elevation,
                    ..SvgOptions::default()
                },
            )
            .map_err(|e| e.to_string())?;
            fs::write(&out, svg).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
            let _ = seed; // recorded in the command line, sampling is deterministic
            Ok(0)
        }
    }
}

fn run_audit(
    m: &GeometricModule,
    h: &TransverseHyperplane,
    table: &RootTable,
    seed: u64,
    trials: usize,
    tol: f64,
) -> i32 {
    let mut violations = 0usize;

    // Residual identity: q(ρ̂)·|ρ|₁² = 1 for every enumerated root.
    let mut worst_residual = 0.0_f64;
    for (id, root) in table.iter() {
        let l1 = root.l1();
        if let Ok(hat) = h.normalize_root(root.coords(), id) {
            let residual = (m.quadratic(hat.coords()) * l1 * l1 - 1.0).abs();
            worst_residual = worst_residual.max(residual);
            if residual > tol {
                violations += 1;
            }
        }
    }
    println!(
        "residual-identity: {} roots, max residual {:.3e}",
        table.len(),
        worst_residual
    );

    // Depth-norm bound with the empirical kappa.
    match kappa_lambda(m, table) {
        Ok(report) => {
            let bad = audit_depth_norm(m, table, &report);
            println!(
                "depth-norm: kappa {:.6}, lambda {:.6}, {} violations",
                report.kappa,
                report.lambda,
                bad.len()
            );
            violations += bad.len();
        }
        Err(Error::AllOrthogonal) => {
            println!("depth-norm: skipped (all pairings orthogonal)");
        }
        Err(e) => {
            println!("depth-norm: error {e}");
            violations += 1;
        }
    }

    // Visibility equivariance over random (root, limit point, word)
    // triples with w(ρ) still positive.
    let pair_depth = table.max_depth().min(4);
    let points = e2_points(m, h, table, pair_depth);
    if points.is_empty() {
        println!("visibility-equivariance: skipped (no limit points)");
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ids: Vec<_> = table.ids().collect();
        let mut mismatches = 0usize;
        let mut run = 0usize;
        while run < trials {
            let x = &points[rng.gen_range(0..points.len())];
            let rho = table.root(ids[rng.gen_range(0..ids.len())]).coords();
            let len = rng.gen_range(1..=6);
            let word = Word::new((0..len).map(|_| rng.gen_range(0..m.rank())).collect());
            let moved_rho = act_vector(m, &word, rho);
            if moved_rho.iter().any(|&c| c < -tol) {
                continue;
            }
            let np = crate::normalize::NormalizedPoint::with_parts(x.coords().clone(), None);
            let moved_x = match act(m, h, &word, &np) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let before = visible(m, rho, x);
            let after = visible(
                m,
                &moved_rho,
                &LimitPoint::from_coords(moved_x.coords().clone()),
            );
            if before != after {
                mismatches += 1;
            }
            run += 1;
        }
        println!("visibility-equivariance: {run} trials, {mismatches} mismatches");
        violations += mismatches;
    }

    if violations == 0 {
        println!("0 violations");
        0
    } else {
        println!("{violations} violations");
        3
    }
}
