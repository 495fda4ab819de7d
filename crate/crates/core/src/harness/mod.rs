//! Scenario definitions, simulation driving, plateau extraction and
//! scheme comparison: everything the CLI needs to reproduce the standard
//! test cases at desk scale.

pub mod figures;
pub mod report;

use crate::error::{Result, TransportError};
use crate::godunov::{godunov_step, max_stable_dt, SchemeKind};
use crate::grid::{FieldState, Grid1D, SpeedField};
use crate::riemann::{classify, compute_lambda, RiemannData, SpeedCase};
use crate::viscous::{viscous_step, ViscousConfig, DEFAULT_EPS_VISC};

pub const DEFAULT_X_MIN: f64 = -1.0;
pub const DEFAULT_X_MAX: f64 = 1.0;
pub const DEFAULT_NX: usize = 400;
pub const DEFAULT_CFL: f64 = 0.9;
pub const DEFAULT_T_FINAL: f64 = 0.15;

/// Fraction of the field range below which consecutive-cell differences
/// count as flat during plateau extraction.
pub const PLATEAU_TOL_FRACTION: f64 = 1e-3;

/// Initial profiles; every jump sits exactly at the origin.
#[derive(Debug, Clone, PartialEq)]
pub enum InitialConditionKind {
    RiemannJump {
        phi_left: f64,
        phi_right: f64,
    },
    Sinusoid {
        amplitude: f64,
        wavenumber: f64,
        phase: f64,
    },
    /// Sinusoid shifted down by `jump` left of the origin and up by
    /// `jump` right of it.
    SinusoidJump {
        amplitude: f64,
        wavenumber: f64,
        jump: f64,
    },
    /// Polynomials (ascending coefficients) on each half line.
    PolynomialJump {
        left_coeffs: Vec<f64>,
        right_coeffs: Vec<f64>,
    },
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

impl InitialConditionKind {
    pub fn sinusoid_default() -> Self {
        InitialConditionKind::Sinusoid {
            amplitude: 1.0,
            wavenumber: 2.0,
            phase: 0.0,
        }
    }

    pub fn sinusoid_jump_default() -> Self {
        InitialConditionKind::SinusoidJump {
            amplitude: 1.0,
            wavenumber: 2.0,
            jump: 0.5,
        }
    }

    /// x² - 1/2 left of the origin, 1/2 - x² right of it.
    pub fn polynomial_jump_default() -> Self {
        InitialConditionKind::PolynomialJump {
            left_coeffs: vec![-0.5, 0.0, 1.0],
            right_coeffs: vec![0.5, 0.0, -1.0],
        }
    }

    pub fn value_at(&self, x: f64) -> f64 {
        match self {
            InitialConditionKind::RiemannJump {
                phi_left,
                phi_right,
            } => {
                if x < 0.0 {
                    *phi_left
                } else {
                    *phi_right
                }
            }
            InitialConditionKind::Sinusoid {
                amplitude,
                wavenumber,
                phase,
            } => amplitude * (wavenumber * std::f64::consts::PI * x + phase).sin(),
            InitialConditionKind::SinusoidJump {
                amplitude,
                wavenumber,
                jump,
            } => {
                let base = amplitude * (wavenumber * std::f64::consts::PI * x).sin();
                if x < 0.0 {
                    base - jump
                } else {
                    base + jump
                }
            }
            InitialConditionKind::PolynomialJump {
                left_coeffs,
                right_coeffs,
            } => {
                if x < 0.0 {
                    horner(left_coeffs, x)
                } else {
                    horner(right_coeffs, x)
                }
            }
        }
    }

    /// Compact description echoed into report metadata.
    pub fn label(&self) -> String {
        match self {
            InitialConditionKind::RiemannJump {
                phi_left,
                phi_right,
            } => format!("riemann_jump(phi_left={phi_left}, phi_right={phi_right})"),
            InitialConditionKind::Sinusoid {
                amplitude,
                wavenumber,
                phase,
            } => format!("sinusoid(amplitude={amplitude}, wavenumber={wavenumber}, phase={phase})"),
            InitialConditionKind::SinusoidJump {
                amplitude,
                wavenumber,
                jump,
            } => format!("sinusoid_jump(amplitude={amplitude}, wavenumber={wavenumber}, jump={jump})"),
            InitialConditionKind::PolynomialJump {
                left_coeffs,
                right_coeffs,
            } => format!("polynomial_jump(left={left_coeffs:?}, right={right_coeffs:?})"),
        }
    }
}

/// Sample the chosen profile at the cell centers at t = 0.
pub fn build_initial_condition(kind: &InitialConditionKind, grid: &Grid1D) -> Result<FieldState> {
    if let InitialConditionKind::PolynomialJump {
        left_coeffs,
        right_coeffs,
    } = kind
    {
        if horner(left_coeffs, 0.0) == horner(right_coeffs, 0.0) {
            return Err(TransportError::InvalidInput(
                "polynomial jump must be discontinuous at the origin".into(),
            ));
        }
    }
    let values = grid.sample(|x| kind.value_at(x));
    FieldState::new(grid.clone(), values, 0.0)
}

/// Piecewise-constant wave speed with its interface at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoStateSpeed {
    pub a_left: f64,
    pub a_right: f64,
}

impl TwoStateSpeed {
    pub fn sample(&self, grid: &Grid1D) -> Result<SpeedField> {
        let (a_left, a_right) = (self.a_left, self.a_right);
        SpeedField::from_fn(grid.clone(), |x| if x < 0.0 { a_left } else { a_right })
    }
}

/// Run either to a target time (last step shortened to land exactly) or
/// for a fixed number of nominal steps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RunLength {
    FinalTime(f64),
    Steps(usize),
}

/// A full scenario: grid, speeds, initial data, scheme and run length.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub grid: Grid1D,
    pub speeds: TwoStateSpeed,
    pub ic: InitialConditionKind,
    pub scheme: SchemeKind,
    pub run_length: RunLength,
    pub cfl: f64,
    pub eps_visc: f64,
}

impl ExperimentConfig {
    /// The default fan-case Riemann scenario: a = (-2 | 3), φ = (1 | 0)
    /// on [-1, 1] with 400 cells, run to t = 0.15.
    pub fn riemann_default() -> Self {
        Self {
            grid: Grid1D::new(DEFAULT_X_MIN, DEFAULT_X_MAX, DEFAULT_NX).unwrap(),
            speeds: TwoStateSpeed {
                a_left: -2.0,
                a_right: 3.0,
            },
            ic: InitialConditionKind::RiemannJump {
                phi_left: 1.0,
                phi_right: 0.0,
            },
            scheme: SchemeKind::ProposedGodunov,
            run_length: RunLength::FinalTime(DEFAULT_T_FINAL),
            cfl: DEFAULT_CFL,
            eps_visc: DEFAULT_EPS_VISC,
        }
    }
}

/// Resolved step size and step count of a finished run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunMeta {
    pub scheme: SchemeKind,
    pub nx: usize,
    pub h: f64,
    pub dt: f64,
    pub n_steps: usize,
    pub cfl: f64,
    pub a_left: f64,
    pub a_right: f64,
    pub t_final: f64,
    pub ic: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub state: FieldState,
    pub meta: RunMeta,
}

const MAX_TOTAL_STEPS: usize = 50_000_000;

/// Advance the configured scheme from t = 0 to the configured end.
///
/// The step size comes from the scheme's own stability rule; in
/// final-time mode the last step is shortened so the returned state sits
/// at `t_final` exactly. Waves launched at the origin must stay at least
/// five cells away from the boundaries for the whole run.
pub fn run_simulation(config: &ExperimentConfig) -> Result<RunOutcome> {
    let grid = &config.grid;
    let speeds = config.speeds.sample(grid)?;
    let initial = build_initial_condition(&config.ic, grid)?;

    let dt = match config.scheme {
        SchemeKind::ProposedGodunov | SchemeKind::AveragedGodunov => {
            max_stable_dt(&speeds, config.cfl)?
        }
        SchemeKind::ViscousCentered => {
            ViscousConfig::with_default_dt(&speeds, config.eps_visc, 0)?.dt
        }
    };

    let (n_full, remainder, t_final) = match config.run_length {
        RunLength::FinalTime(t_final) => {
            if !t_final.is_finite() || t_final < 0.0 {
                return Err(TransportError::InvalidInput(format!(
                    "t_final must be finite and non-negative, got {t_final}"
                )));
            }
            let n_full = (t_final / dt).floor() as usize;
            let remainder = t_final - n_full as f64 * dt;
            (n_full, remainder, t_final)
        }
        RunLength::Steps(n) => (n, 0.0, n as f64 * dt),
    };

    if n_full > MAX_TOTAL_STEPS {
        return Err(TransportError::InvalidInput(format!(
            "run would need {n_full} steps; refusing"
        )));
    }
    if t_final > 0.0 {
        let margin = grid.x_max().min(-grid.x_min()) - 5.0 * grid.h();
        let reach = speeds.max_abs() * t_final;
        if reach >= margin {
            return Err(TransportError::InvalidInput(format!(
                "waves reach {reach:.4} from the origin but must stay below {margin:.4}; \
                 shrink t_final or refine the grid"
            )));
        }
    }

    let step = |state: &FieldState, dt_step: f64| -> Result<FieldState> {
        match config.scheme {
            SchemeKind::ProposedGodunov | SchemeKind::AveragedGodunov => {
                godunov_step(state, &speeds, dt_step, config.scheme)
            }
            SchemeKind::ViscousCentered => {
                let cfg = ViscousConfig::new(config.eps_visc, dt_step, 1)?;
                viscous_step(state, &speeds, &cfg)
            }
        }
    };

    let mut state = initial;
    let mut n_steps = 0usize;
    for _ in 0..n_full {
        state = step(&state, dt)?;
        n_steps += 1;
    }
    if remainder > dt * 1e-12 {
        state = step(&state, remainder)?;
        n_steps += 1;
    }
    state.time = t_final;

    Ok(RunOutcome {
        meta: RunMeta {
            scheme: config.scheme,
            nx: grid.n_cells(),
            h: grid.h(),
            dt,
            n_steps,
            cfl: config.cfl,
            a_left: config.speeds.a_left,
            a_right: config.speeds.a_right,
            t_final,
            ic: config.ic.label(),
        },
        state,
    })
}

/// Plateau window strictly inside the fan, away from its smeared edges:
/// [-0.4 |a_L| t, 0.4 a_R t].
pub fn default_plateau_window(speeds: &TwoStateSpeed, t_final: f64) -> (f64, f64) {
    (
        -0.4 * speeds.a_left.abs() * t_final,
        0.4 * speeds.a_right * t_final,
    )
}

/// Mean over the window if the field is flat there, `None` otherwise.
///
/// Flat means every consecutive-cell difference within the window stays
/// below 1e-3 times the full field range. The window must contain at
/// least five cells.
pub fn extract_plateau(state: &FieldState, window: (f64, f64)) -> Result<Option<f64>> {
    let (x_lo, x_hi) = window;
    if !x_lo.is_finite() || !x_hi.is_finite() || x_lo >= x_hi {
        return Err(TransportError::InvalidInput(format!(
            "bad plateau window [{x_lo}, {x_hi}]"
        )));
    }
    if x_lo < state.grid.x_min() || x_hi > state.grid.x_max() {
        return Err(TransportError::InvalidInput(format!(
            "plateau window [{x_lo}, {x_hi}] leaves the grid"
        )));
    }
    let values: Vec<f64> = state
        .grid
        .cell_centers()
        .zip(&state.values)
        .filter(|(x, _)| (x_lo..=x_hi).contains(x))
        .map(|(_, &v)| v)
        .collect();
    if values.len() < 5 {
        return Err(TransportError::InvalidInput(format!(
            "plateau window holds {} cells; need at least 5",
            values.len()
        )));
    }
    let tol = PLATEAU_TOL_FRACTION * state.range();
    let flat = values.windows(2).all(|w| (w[1] - w[0]).abs() <= tol);
    if flat {
        Ok(Some(values.iter().sum::<f64>() / values.len() as f64))
    } else {
        Ok(None)
    }
}

/// Side-by-side result of the proposed and averaged Godunov runs.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub proposed: FieldState,
    pub averaged: FieldState,
    pub plateau_proposed: Option<f64>,
    pub plateau_averaged: Option<f64>,
    /// λ of the states adjacent to the origin, when the speeds open a fan.
    pub lambda_exact: Option<f64>,
    /// L∞ distance between the two final fields.
    pub max_abs_diff: f64,
    pub meta: RunMeta,
}

/// Run both Godunov variants on the same initial data and time step.
pub fn compare_schemes(config: &ExperimentConfig) -> Result<ComparisonReport> {
    let proposed = run_simulation(&ExperimentConfig {
        scheme: SchemeKind::ProposedGodunov,
        ..config.clone()
    })?;
    let averaged = run_simulation(&ExperimentConfig {
        scheme: SchemeKind::AveragedGodunov,
        ..config.clone()
    })?;

    let max_abs_diff = proposed
        .state
        .values
        .iter()
        .zip(&averaged.state.values)
        .map(|(p, a)| (p - a).abs())
        .fold(0.0f64, f64::max);

    let lambda_exact = origin_adjacent_lambda(config)?;
    let t_final = proposed.meta.t_final;
    let window = default_plateau_window(&config.speeds, t_final);
    let fan = classify(config.speeds.a_left, config.speeds.a_right, 0.0)?
        == SpeedCase::LeftNegRightPos;
    let (plateau_proposed, plateau_averaged) = if fan {
        (
            extract_plateau(&proposed.state, window).unwrap_or(None),
            extract_plateau(&averaged.state, window).unwrap_or(None),
        )
    } else {
        (None, None)
    };

    Ok(ComparisonReport {
        proposed: proposed.state,
        averaged: averaged.state,
        plateau_proposed,
        plateau_averaged,
        lambda_exact,
        max_abs_diff,
        meta: proposed.meta,
    })
}

/// λ computed from the initial states of the two cells straddling the
/// origin; `None` when the speeds do not open a fan.
pub fn origin_adjacent_lambda(config: &ExperimentConfig) -> Result<Option<f64>> {
    if classify(config.speeds.a_left, config.speeds.a_right, 0.0)? != SpeedCase::LeftNegRightPos {
        return Ok(None);
    }
    let mut phi_left = None;
    let mut phi_right = None;
    for x in config.grid.cell_centers() {
        if x < 0.0 {
            phi_left = Some(config.ic.value_at(x));
        } else if phi_right.is_none() {
            phi_right = Some(config.ic.value_at(x));
        }
    }
    match (phi_left, phi_right) {
        (Some(pl), Some(pr)) => Ok(Some(compute_lambda(&RiemannData {
            a_left: config.speeds.a_left,
            a_right: config.speeds.a_right,
            phi_left: pl,
            phi_right: pr,
        })?)),
        _ => Ok(None),
    }
}
