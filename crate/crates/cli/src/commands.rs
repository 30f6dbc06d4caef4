use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::json;

use altwalk::entanglement::{
    alternate_negativity, entanglement_sweep, phi_grid, theta_grid, NegativityConvention, CALIBRATED_CONVENTION,
};
use altwalk::equivalence::verify_pairing;
use altwalk::limit::quadrature::pairwise_sum;
use altwalk::limit::{convergence_report, density_lattice, density_moment, density_normalization, LimitDensityParams};
use altwalk::{evolve, probability_grid, CoinParams, CoinState2, WalkKind, WalkerState};

use crate::config::{Config, Settings};
use crate::output::{default_manifest_path, float, write_csv, Manifest};
use crate::presets::{self, Walk};
use crate::{CompareArgs, EntangleArgs, LimitArgs, SimulateArgs, VerifyArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    ToleranceFailure,
}

/// Distribution norm drift allowed before `simulate` reports a failure.
const NORM_TOL: f64 = 1e-12;
/// Residual bound for `verify`.
const VERIFY_TOL: f64 = 1e-12;
/// Bound on `|∫f − 1|` for `limit`.
const DENSITY_NORM_TOL: f64 = 1e-3;

fn manifest_path(explicit: Option<PathBuf>, data: &Path) -> PathBuf {
    explicit.unwrap_or_else(|| default_manifest_path(data))
}

pub fn simulate(args: SimulateArgs, config: &Config) -> Result<Status> {
    let started = Instant::now();
    let mut s = Settings::new(config);
    let walk = Walk::parse(&s.get("walk", args.walk, "alternate".to_string())?)?;
    let gamma = s.angle("gamma", args.gamma, "pi/4")?;
    let params = CoinParams::new(gamma)?;
    let init = s.get("init", args.init, walk.default_init().to_string())?;
    let t = s.get("t", args.t, 50usize)?;

    let amps = presets::amplitudes(walk, &init, &params)?;
    let kind = match walk {
        Walk::Alternate => WalkKind::Alternate(params),
        Walk::Grover => WalkKind::Grover(params),
    };
    let state = evolve(&WalkerState::new(&amps, t)?, &kind, t)?;
    let grid = probability_grid(&state);
    let norm_residual = (pairwise_sum(grid.values()) - 1.0).abs();

    let out = args.out.unwrap_or_else(|| PathBuf::from("simulate.csv"));
    let r = t as i64;
    let rows = (-r..=r).flat_map(|y| {
        let grid = &grid;
        (-r..=r).map(move |x| vec![x.to_string(), y.to_string(), float(grid.get(x, y))])
    });
    let n = write_csv(&out, &["x", "y", "p"], rows)?;

    let mut manifest = Manifest::new("simulate", s.into_params(), started).output(&out, n);
    manifest.norm_residual = norm_residual;
    manifest.results = json!({
        "mean_x": grid.moment(1, 0),
        "mean_y": grid.moment(0, 1),
        "origin_probability": grid.get(0, 0),
    });
    manifest.write(&manifest_path(args.manifest, &out))?;
    println!("wrote {n} rows to {} (norm residual {norm_residual:.3e})", out.display());
    Ok(if norm_residual <= NORM_TOL { Status::Ok } else { Status::ToleranceFailure })
}

pub fn verify(args: VerifyArgs, config: &Config) -> Result<Status> {
    let started = Instant::now();
    let mut s = Settings::new(config);
    let gamma = s.angle("gamma", args.gamma, "pi/4")?;
    let params = CoinParams::new(gamma)?;
    let xi = s.get("xi", args.xi, 0u8)?;
    let kappa = s.get("kappa", args.kappa, 0u8)?;
    let t_max = s.get("t-max", args.t_max, 25usize)?;
    let init_name = s.get("init", args.init, format!("paired:{kappa}"))?;
    let tol = s.get("tol", args.tol, VERIFY_TOL)?;
    let init = presets::qubit(&init_name)?;

    let report = verify_pairing(&params, xi, kappa, &init, t_max)?;
    println!("{:>4} {:>12} {:>12} {:>14} {:>12}", "t", "cancellation", "mapping", "mapping_flip", "distance");
    let steps = report.cancellation.per_step.iter().zip(&report.mapping.per_step);
    let steps = steps.zip(&report.mapping_flipped.per_step).zip(&report.distance.per_step);
    let mut rows = Vec::new();
    for (((&(t, cancellation), &(_, mapping)), &(_, flipped)), &(_, distance)) in steps {
        println!("{t:>4} {cancellation:>12.3e} {mapping:>12.3e} {flipped:>14.3e} {distance:>12.3e}");
        rows.push(vec![t.to_string(), float(cancellation), float(mapping), float(flipped), float(distance)]);
    }
    let worst = report.max_residual();
    let pass = worst <= tol;
    if !pass {
        for (name, r) in [("cancellation", &report.cancellation), ("mapping", &report.mapping), ("distance", &report.distance)] {
            let (x, y, t) = r.worst;
            eprintln!("worst {name} residual {:.3e} at (x, y, t) = ({x}, {y}, {t})", r.max_abs_residual);
        }
    }
    println!(
        "{}: max residual {worst:.3e} (tol {tol:.0e})",
        if pass { "verified" } else { "FAILED" }
    );

    if let Some(out) = args.out {
        let header = ["t", "cancellation", "mapping", "mapping_flipped", "distance"];
        let n = write_csv(&out, &header, rows)?;
        let mut manifest = Manifest::new("verify", s.into_params(), started).output(&out, n);
        manifest.norm_residual = report.distance.max_abs_residual;
        manifest.results = json!({
            "passed": pass,
            "cancellation_max": report.cancellation.max_abs_residual,
            "mapping_max": report.mapping.max_abs_residual,
            "mapping_flipped_max": report.mapping_flipped.max_abs_residual,
            "distance_max": report.distance.max_abs_residual,
            "worst_distance_site": report.distance.worst,
        });
        manifest.write(&manifest_path(args.manifest, &out))?;
    }
    Ok(if pass { Status::Ok } else { Status::ToleranceFailure })
}

fn convention_record() -> serde_json::Value {
    json!({
        "calibrated": CALIBRATED_CONVENTION.label(),
        "alternatives": [NegativityConvention::Support.label(), NegativityConvention::Window.label()],
    })
}

pub fn entangle(args: EntangleArgs, config: &Config) -> Result<Status> {
    let started = Instant::now();
    let mut s = Settings::new(config);
    let gamma = s.angle("gamma", args.gamma, "pi/4")?;
    let params = CoinParams::new(gamma)?;
    let t = s.get("t", args.t, 10usize)?;
    if t == 0 {
        bail!("entanglement needs t >= 1");
    }
    let theta_points = s.optional("theta-points", args.theta_points)?;
    let phi_points = s.optional("phi-points", args.phi_points)?;
    let theta = s.optional_angle("theta", args.theta)?;
    let phi = s.optional_angle("phi", args.phi)?;
    let sweep = theta_points.is_some() || phi_points.is_some() || theta.is_some() || phi.is_some();
    let out = args.out.unwrap_or_else(|| PathBuf::from("entangle.csv"));

    let (rows, results) = if sweep {
        if args.init.is_some() {
            bail!("--init selects single-coin mode and cannot be combined with sweep flags");
        }
        let thetas = match (theta_points, theta) {
            (Some(_), Some(_)) => bail!("give either --theta-points or --theta"),
            (Some(n), None) => grid_of(theta_grid(n), "--theta-points")?,
            (None, Some(v)) => vec![v],
            (None, None) => grid_of(theta_grid(20), "--theta-points")?,
        };
        let phis = match (phi_points, phi) {
            (Some(_), Some(_)) => bail!("give either --phi-points or --phi"),
            (Some(n), None) => grid_of(phi_grid(n), "--phi-points")?,
            (None, Some(v)) => vec![v],
            (None, None) => vec![0.0],
        };
        let points = entanglement_sweep(&thetas, &phis, t, &params)?;
        let m = phis.len();
        let mut rows = Vec::with_capacity(points.len());
        for j in 0..m {
            for i in 0..thetas.len() {
                let p = &points[i * m + j];
                rows.push(vec![float(p.theta), float(p.phi), float(p.negativity)]);
            }
        }
        let best = points
            .iter()
            .fold(&points[0], |b, p| if p.negativity > b.negativity { p } else { b });
        println!(
            "{} points, max N = {:.6} at (theta, phi) = ({:.6}, {:.6})",
            points.len(),
            best.negativity,
            best.theta,
            best.phi
        );
        let results = json!({
            "convention": convention_record(),
            "max": {"theta": best.theta, "phi": best.phi, "n": best.negativity},
        });
        (rows, results)
    } else {
        let init_name = s.get("init", args.init, "symmetric".to_string())?;
        let init = presets::qubit(&init_name)?;
        let n = alternate_negativity(&init, &params, t)?;
        let (th, ph) = init.bloch_angles();
        println!(
            "N = {:.6} [{}]; {} gives {:.6}; min eigenvalue of the partial transpose {:.3e}",
            n.value(),
            CALIBRATED_CONVENTION.label(),
            NegativityConvention::Window.label(),
            n.window,
            n.min_eigenvalue
        );
        let results = json!({
            "convention": convention_record(),
            "support": n.support,
            "window": n.window,
            "trace_norm_minus_one": n.trace_norm_minus_one,
            "min_eigenvalue": n.min_eigenvalue,
        });
        (vec![vec![float(th), float(ph), float(n.value())]], results)
    };

    let n = write_csv(&out, &["theta", "phi", "n"], rows)?;
    let mut manifest = Manifest::new("entangle", s.into_params(), started).output(&out, n);
    manifest.results = results;
    manifest.write(&manifest_path(args.manifest, &out))?;
    Ok(Status::Ok)
}

fn grid_of(values: Vec<f64>, flag: &str) -> Result<Vec<f64>> {
    if values.is_empty() {
        bail!("{flag} must be at least 1");
    }
    Ok(values)
}

fn parse_list<T: std::str::FromStr>(raw: &str, what: &str) -> Result<Vec<T>> {
    raw.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| anyhow!("bad {what} entry {p:?} in {raw:?}")))
        .collect()
}

fn parse_orders(raw: &str) -> Result<Vec<(u32, u32)>> {
    raw.split(',')
        .map(|p| {
            let (a, b) = p
                .trim()
                .split_once(':')
                .ok_or_else(|| anyhow!("moment order {p:?} is not r1:r2"))?;
            Ok((a.parse()?, b.parse()?))
        })
        .collect::<Result<_>>()
        .with_context(|| format!("parsing --orders {raw:?}"))
}

pub fn limit(args: LimitArgs, config: &Config) -> Result<Status> {
    let started = Instant::now();
    let mut s = Settings::new(config);
    let gamma = s.angle("gamma", args.gamma, "pi/4")?;
    let coin = CoinParams::new(gamma)?;
    let init_name = s.get("init", args.init, "symmetric".to_string())?;
    let init: CoinState2 = presets::qubit(&init_name)?;
    let grid_points = s.get("grid-points", args.grid_points, 201usize)?;
    let t_list: Vec<usize> = parse_list(&s.get("t-list", args.t_list, "100,200,400".to_string())?, "time")?;
    let orders = parse_orders(&s.get("orders", args.orders, "1:0,0:1,2:0,1:1,0:2".to_string())?)?;
    let momentum_points = s.get("momentum-points", args.momentum_points, 512usize)?;
    let quad_points = s.get("quad-points", args.quad_points, 1024usize)?;
    if grid_points == 0 {
        bail!("--grid-points must be positive");
    }
    let params = LimitDensityParams::new(coin, init);

    let out = args.out.unwrap_or_else(|| PathBuf::from("limit_density.csv"));
    let conv_out = args.convergence_out.unwrap_or_else(|| {
        let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        out.with_file_name(format!("{stem}_convergence.csv"))
    });

    let normalization = density_normalization(&params, quad_points)?;
    let (cells, area) = density_lattice(&params, grid_points);
    let lattice_sum = pairwise_sum(&cells.iter().map(|c| c.2 * area).collect::<Vec<_>>());
    let report = convergence_report(&params, &t_list, &orders, momentum_points)?;
    let density_side = orders
        .iter()
        .map(|&(r1, r2)| density_moment(r1, r2, &params, quad_points))
        .collect::<altwalk::Result<Vec<_>>>()?;

    let n_density = write_csv(
        &out,
        &["x", "y", "f"],
        cells.iter().map(|&(x, y, f)| vec![float(x), float(y), float(f)]),
    )?;
    let n_conv = write_csv(
        &conv_out,
        &["t", "r1", "r2", "simulated", "limit", "gap"],
        report.iter().map(|r| {
            vec![
                r.t.to_string(),
                r.r1.to_string(),
                r.r2.to_string(),
                float(r.simulated),
                float(r.limit),
                float(r.gap),
            ]
        }),
    )?;

    let norm_residual = (normalization - 1.0).abs();
    println!("integral of f = {normalization:.9} (lattice sum over {grid_points}^2 cells {lattice_sum:.6})");
    for r in &report {
        println!(
            "t={:<5} ({},{}) simulated {:>12.6e} limit {:>12.6e} gap {:.3e}",
            r.t, r.r1, r.r2, r.simulated, r.limit, r.gap
        );
    }
    let moments: Vec<_> = orders
        .iter()
        .zip(&density_side)
        .map(|(&(r1, r2), &d)| {
            let fourier = report.iter().find(|r| (r.r1, r.r2) == (r1, r2)).map(|r| r.limit);
            json!({"r1": r1, "r2": r2, "fourier": fourier, "density": d})
        })
        .collect();

    let mut manifest = Manifest::new("limit", s.into_params(), started)
        .output(&out, n_density)
        .output(&conv_out, n_conv);
    manifest.norm_residual = norm_residual;
    manifest.results = json!({
        "normalization": normalization,
        "lattice_sum": lattice_sum,
        "cell_area": area,
        "density_at_origin": altwalk::limit::limit_density(0.0, 0.0, &params),
        "moments": moments,
    });
    manifest.write(&manifest_path(args.manifest, &out))?;
    Ok(if norm_residual <= DENSITY_NORM_TOL { Status::Ok } else { Status::ToleranceFailure })
}

fn read_distribution(path: &Path) -> Result<BTreeMap<(i64, i64), f64>> {
    let mut r = csv::Reader::from_path(path).with_context(|| format!("opening {}", path.display()))?;
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header != ["x", "y", "p"] {
        bail!("{}: expected header x,y,p, found {}", path.display(), header.join(","));
    }
    let mut out = BTreeMap::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec?;
        let parse_err = || anyhow!("{}: malformed row {}", path.display(), i + 2);
        let x: i64 = rec[0].parse().map_err(|_| parse_err())?;
        let y: i64 = rec[1].parse().map_err(|_| parse_err())?;
        let p: f64 = rec[2].parse().map_err(|_| parse_err())?;
        if out.insert((x, y), p).is_some() {
            bail!("{}: duplicate site ({x}, {y})", path.display());
        }
    }
    Ok(out)
}

pub fn compare(args: CompareArgs) -> Result<Status> {
    let started = Instant::now();
    let a = read_distribution(&args.a)?;
    let b = read_distribution(&args.b)?;
    if a.len() != b.len() || a.keys().zip(b.keys()).any(|(p, q)| p != q) {
        bail!("{} and {} cover different sites", args.a.display(), args.b.display());
    }
    let (mut worst, mut site) = (0.0f64, (0, 0));
    for ((k, p), q) in a.iter().zip(b.values()) {
        let d = (p - q).abs();
        if d > worst {
            worst = d;
            site = *k;
        }
    }
    println!("max |dP| = {} at (x, y) = ({}, {})", float(worst), site.0, site.1);
    let pass = args.tol.is_none_or(|tol| worst <= tol);
    if let Some(path) = args.manifest {
        let params = json!({"a": args.a.display().to_string(), "b": args.b.display().to_string(), "tol": args.tol});
        let mut m = Manifest::new("compare", params, started);
        m.norm_residual = (a.values().sum::<f64>() - 1.0).abs().max((b.values().sum::<f64>() - 1.0).abs());
        m.results = json!({"distance": worst, "site": [site.0, site.1], "passed": pass});
        m.write(&path)?;
    }
    Ok(if pass { Status::Ok } else { Status::ToleranceFailure })
}
