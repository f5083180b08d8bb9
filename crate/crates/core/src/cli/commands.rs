use serde_json::{json, Map, Value};

use super::format::{num, Cell, CommandOutput, Table};
use crate::algebra::checks::{full_suite, invariance_checks, COMMUTATOR_TOL, INVARIANCE_TOL};
use crate::algebra::contraction::{contraction_residual, ContractionSource, CONTRACTION_FACTOR};
use crate::algebra::GeneratorSet;
use crate::error::{ensure_finite, Error, Result};
use crate::grid::{FieldValues, GridSpec};
use crate::momentum::{fourier_check as run_fourier_check, fourier_numeric, momentum_grid_default};
use crate::oscillator::{marginal_variance, sample, squeeze_semi_axes, OscillatorState};
use crate::parton::{
    coherence_ratio, interaction_time_contraction, period_dilation, rapidity_from_beam, BeamSpec,
};

pub const TRANSFORM_TOL: f64 = 1e-6;
pub const PARSEVAL_TOL: f64 = 1e-5;
/// Half-width of the default plotting window, in units of `e^{|η|}`.
pub const PLOT_HALF_WIDTH: f64 = 3.0;
pub const PLOT_POINTS: usize = 61;

fn grid_json(g: &GridSpec) -> Value {
    json!({
        "z_min": num(g.z_min),
        "z_max": num(g.z_max),
        "n_z": g.n_z,
        "t_min": num(g.t_min),
        "t_max": num(g.t_max),
        "n_t": g.n_t,
    })
}

fn object(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn algebra_check(corrupt: bool) -> CommandOutput {
    let set = if corrupt {
        GeneratorSet::corrupted()
    } else {
        GeneratorSet::canonical()
    };
    let suite = full_suite(&set);
    let invariance_names: Vec<String> = invariance_checks(&set)
        .into_iter()
        .map(|c| c.name)
        .collect();

    let mut table = Table::new(&["relation", "max_residual", "tolerance", "pass"]);
    let mut relations = Vec::new();
    let mut max_commutator = 0.0f64;
    let mut max_invariance = 0.0f64;
    for check in &suite {
        table.push(vec![
            check.name.as_str().into(),
            check.max_residual.into(),
            check.tolerance.into(),
            check.passed().into(),
        ]);
        relations.push(json!({
            "relation": check.name,
            "max_residual": num(check.max_residual),
            "tolerance": num(check.tolerance),
            "pass": check.passed(),
        }));
        if invariance_names.contains(&check.name) {
            max_invariance = max_invariance.max(check.max_residual);
        } else {
            max_commutator = max_commutator.max(check.max_residual);
        }
    }
    let failed = suite.iter().filter(|c| !c.passed()).count();

    CommandOutput {
        table,
        params: object(vec![
            ("corrupt", json!(corrupt)),
            ("commutator_tolerance", num(COMMUTATOR_TOL)),
            ("invariance_tolerance", num(INVARIANCE_TOL)),
        ]),
        results: json!({
            "relations": relations,
            "checked": suite.len(),
            "failed": failed,
        }),
        residuals: object(vec![
            ("max_commutator_residual", num(max_commutator)),
            ("max_invariance_residual", num(max_invariance)),
        ]),
        passed: failed == 0,
    }
}

pub fn contract(eta_max: f64, steps: usize) -> Result<CommandOutput> {
    ensure_finite("eta-max", eta_max)?;
    if eta_max < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "--eta-max must be non-negative, got {eta_max}"
        )));
    }
    if steps == 0 {
        return Err(Error::InvalidArgument("--steps must be at least 1".into()));
    }

    let mut table = Table::new(&[
        "eta",
        "residual_n1",
        "scaled_residual_n1",
        "residual_n2",
        "scaled_residual_n2",
    ]);
    let mut rows = Vec::with_capacity(steps + 1);
    for k in 0..=steps {
        let eta = eta_max * k as f64 / steps as f64;
        let r1 = contraction_residual(eta, ContractionSource::J2)?;
        let r2 = contraction_residual(eta, ContractionSource::J1)?;
        let growth = (2.0 * eta).exp();
        table.push(vec![
            eta.into(),
            r1.into(),
            (r1 * growth).into(),
            r2.into(),
            (r2 * growth).into(),
        ]);
        rows.push(json!({
            "eta": num(eta),
            "residual_n1": num(r1),
            "scaled_residual_n1": num(r1 * growth),
            "residual_n2": num(r2),
            "scaled_residual_n2": num(r2 * growth),
        }));
    }
    let final_eta = eta_max;
    let final_n1 = contraction_residual(final_eta, ContractionSource::J2)?;
    let final_n2 = contraction_residual(final_eta, ContractionSource::J1)?;

    Ok(CommandOutput {
        table,
        params: object(vec![
            ("eta_max", num(eta_max)),
            ("steps", json!(steps)),
            ("contraction_factor", num(CONTRACTION_FACTOR)),
        ]),
        results: json!({ "rows": rows }),
        residuals: object(vec![
            ("final_residual_n1", num(final_n1)),
            ("final_residual_n2", num(final_n2)),
        ]),
        passed: true,
    })
}

/// Default plotting window for rapidity `eta`.
pub fn plot_grid_default(eta: f64) -> GridSpec {
    GridSpec::symmetric(PLOT_HALF_WIDTH * eta.abs().exp(), PLOT_POINTS).expect("valid default grid")
}

pub fn squeeze_plot(n: u32, eta: f64, grid: Option<GridSpec>) -> Result<CommandOutput> {
    let state = OscillatorState::new(n, eta)?;
    let grid = grid.unwrap_or_else(|| plot_grid_default(eta));

    let space = sample(&state, &grid);
    let FieldValues::Real(psi) = &space.values else {
        unreachable!("space-time samples are real")
    };
    // transform from a fine quadrature grid, evaluated on the plotting grid
    let quadrature = GridSpec::quadrature_default(eta);
    let fine = sample(&state, &quadrature);
    let plotted = fourier_numeric(&fine, &grid)?;
    let phi: Vec<f64> = plotted.field.density().iter().map(|d| d.sqrt()).collect();

    let space_spread = fine.lightcone_spread();
    let momentum_spread = fourier_numeric(&fine, &momentum_grid_default(eta))?
        .field
        .lightcone_spread();
    let (semi_u, semi_v) = squeeze_semi_axes(eta);
    let expected_ratio = (2.0 * eta).exp();

    let mut table = Table::new(&["section", "x1", "x2", "value"]);
    for (k, &value) in psi.iter().enumerate() {
        let (i, j) = (k / grid.n_t, k % grid.n_t);
        table.push(vec![
            "space_time".into(),
            grid.z(i).into(),
            grid.t(j).into(),
            value.into(),
        ]);
    }
    for (k, &value) in phi.iter().enumerate() {
        let (i, j) = (k / grid.n_t, k % grid.n_t);
        table.push(vec![
            "momentum_energy".into(),
            grid.z(i).into(),
            grid.t(j).into(),
            value.into(),
        ]);
    }
    table.push(vec![
        "semi_axes".into(),
        semi_u.into(),
        semi_v.into(),
        (semi_u / semi_v).into(),
    ]);
    table.push(vec![
        "space_spread".into(),
        space_spread.sigma_u.into(),
        space_spread.sigma_v.into(),
        space_spread.ratio().into(),
    ]);
    table.push(vec![
        "momentum_spread".into(),
        momentum_spread.sigma_u.into(),
        momentum_spread.sigma_v.into(),
        momentum_spread.ratio().into(),
    ]);

    let rows_of = |values: &[f64]| -> Vec<Value> {
        values
            .chunks(grid.n_t)
            .map(|row| Value::Array(row.iter().map(|&x| num(x)).collect()))
            .collect()
    };
    let axis = |values: Vec<f64>| -> Vec<Value> { values.into_iter().map(num).collect() };

    Ok(CommandOutput {
        table,
        params: object(vec![
            ("n", json!(n)),
            ("eta", num(eta)),
            ("grid", grid_json(&grid)),
            ("quadrature_grid", grid_json(&quadrature)),
        ]),
        results: json!({
            "space_time": {
                "z": axis(grid.z_values()),
                "t": axis(grid.t_values()),
                "psi": rows_of(psi),
            },
            "momentum_energy": {
                "q_z": axis(grid.z_values()),
                "q_0": axis(grid.t_values()),
                "abs_phi": rows_of(&phi),
            },
            "semi_axes": {
                "u": num(semi_u),
                "v": num(semi_v),
                "ratio": num(semi_u / semi_v),
            },
            "space_spread": {
                "sigma_u": num(space_spread.sigma_u),
                "sigma_v": num(space_spread.sigma_v),
                "ratio": num(space_spread.ratio()),
            },
            "momentum_spread": {
                "sigma_u": num(momentum_spread.sigma_u),
                "sigma_v": num(momentum_spread.sigma_v),
                "ratio": num(momentum_spread.ratio()),
            },
            "warnings": plotted.warnings.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        }),
        residuals: object(vec![
            (
                "space_ratio_error",
                num((space_spread.ratio() - expected_ratio).abs()),
            ),
            (
                "momentum_ratio_error",
                num((momentum_spread.ratio() - expected_ratio).abs()),
            ),
            (
                "normalization_error",
                num((fine.norm_squared() - 1.0).abs()),
            ),
        ]),
        passed: true,
    })
}

pub fn fourier_check(eta: f64, momentum_grid: Option<GridSpec>) -> Result<CommandOutput> {
    ensure_finite("eta", eta)?;
    let space_grid = GridSpec::quadrature_default(eta);
    let momentum_grid = momentum_grid.unwrap_or_else(|| momentum_grid_default(eta));
    let check = run_fourier_check(eta, &space_grid, &momentum_grid)?;
    let negative_real = (-check.min_real).max(0.0);

    let metrics = [
        ("max_abs_error", check.max_abs_error, TRANSFORM_TOL),
        ("parseval_error", check.parseval_error, PARSEVAL_TOL),
        ("max_imaginary", check.max_imaginary, TRANSFORM_TOL),
        ("negative_real", negative_real, TRANSFORM_TOL),
    ];
    let mut table = Table::new(&["metric", "value", "tolerance", "pass"]);
    let mut residuals = Map::new();
    for (name, value, tol) in metrics {
        table.push(vec![
            name.into(),
            value.into(),
            tol.into(),
            (value <= tol).into(),
        ]);
        residuals.insert(name.to_string(), num(value));
    }
    table.push(vec![
        "grid_warnings".into(),
        Cell::Int(check.warnings.len() as i64),
        Cell::Int(0),
        check.warnings.is_empty().into(),
    ]);
    let passed = check.warnings.is_empty() && metrics.iter().all(|(_, v, tol)| v <= tol);

    Ok(CommandOutput {
        table,
        params: object(vec![
            ("eta", num(eta)),
            ("space_grid", grid_json(&space_grid)),
            ("momentum_grid", grid_json(&momentum_grid)),
            ("transform_tolerance", num(TRANSFORM_TOL)),
            ("parseval_tolerance", num(PARSEVAL_TOL)),
        ]),
        results: json!({
            "space_norm": num(check.space_norm),
            "momentum_norm": num(check.momentum_norm),
            "min_real": num(check.min_real),
            "warnings": check.warnings.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "pass": passed,
        }),
        residuals,
        passed,
    })
}

pub fn coherence(energy: f64, mass: f64) -> Result<CommandOutput> {
    let beam = BeamSpec::new(energy, mass)?;
    let eta = rapidity_from_beam(&beam);
    let dilation = period_dilation(eta);
    let contraction = interaction_time_contraction(eta);
    let ratio = coherence_ratio(eta);
    let variance = marginal_variance(eta);

    let mut table = Table::new(&[
        "eta",
        "period_dilation",
        "interaction_time_contraction",
        "coherence_ratio",
        "marginal_variance",
    ]);
    table.push(vec![
        eta.into(),
        dilation.into(),
        contraction.into(),
        ratio.into(),
        variance.into(),
    ]);

    Ok(CommandOutput {
        table,
        params: object(vec![("energy", num(energy)), ("mass", num(mass))]),
        results: json!({
            "eta": num(eta),
            "period_dilation": num(dilation),
            "interaction_time_contraction": num(contraction),
            "coherence_ratio": num(ratio),
            "marginal_variance": num(variance),
        }),
        residuals: object(vec![(
            "ratio_identity",
            num((ratio - (-2.0 * eta).exp()).abs()),
        )]),
        passed: true,
    })
}
