//! Centered-difference reference scheme with first-order artificial
//! viscosity:
//!
//!   φ^{n+1}_i = φ^n_i - a_i Δt (φ_{i+1} - φ_{i-1}) / (2h)
//!                     + ε_visc Δt (φ_{i+1} - 2φ_i + φ_{i-1}) / h²
//!
//! Deliberately diffusive (ε_visc defaults to 0.1); it is kept as a third
//! independent check on the interface solver, not as an accurate scheme.

use crate::error::{Result, TransportError};
use crate::grid::{FieldState, SpeedField};

pub const DEFAULT_EPS_VISC: f64 = 0.1;

/// Time step and diffusion coefficient of the viscous reference scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViscousConfig {
    pub eps_visc: f64,
    pub dt: f64,
    pub n_steps: usize,
}

impl ViscousConfig {
    pub fn new(eps_visc: f64, dt: f64, n_steps: usize) -> Result<Self> {
        if !eps_visc.is_finite() || eps_visc < 0.0 {
            return Err(TransportError::InvalidInput(format!(
                "viscosity must be finite and non-negative, got {eps_visc}"
            )));
        }
        if !dt.is_finite() || dt <= 0.0 {
            return Err(TransportError::InvalidInput(format!(
                "dt must be positive, got {dt}"
            )));
        }
        Ok(Self {
            eps_visc,
            dt,
            n_steps,
        })
    }

    /// Config with dt = 0.4 min(h / max|a|, h² / (2 ε_visc)), comfortably
    /// inside the explicit stability region.
    pub fn with_default_dt(speeds: &SpeedField, eps_visc: f64, n_steps: usize) -> Result<Self> {
        let h = speeds.grid.h();
        let a_max = speeds.max_abs();
        let advective = if a_max > 0.0 { h / a_max } else { f64::INFINITY };
        let diffusive = if eps_visc > 0.0 {
            h * h / (2.0 * eps_visc)
        } else {
            f64::INFINITY
        };
        let dt = 0.4 * advective.min(diffusive);
        if !dt.is_finite() {
            return Err(TransportError::InvalidInput(
                "zero speeds and zero viscosity leave dt unconstrained; set it explicitly".into(),
            ));
        }
        Self::new(eps_visc, dt, n_steps)
    }

    /// Combined advection-diffusion explicit stability number; must not
    /// exceed one.
    pub fn stability_number(&self, speeds: &SpeedField) -> f64 {
        let h = speeds.grid.h();
        self.dt * (speeds.max_abs() / h + 2.0 * self.eps_visc / (h * h))
    }
}

/// Advance a field by one step of the viscous reference scheme.
///
/// Outflow boundaries: the missing neighbor copies the edge cell.
pub fn viscous_step(
    state: &FieldState,
    speeds: &SpeedField,
    cfg: &ViscousConfig,
) -> Result<FieldState> {
    if state.grid != speeds.grid {
        return Err(TransportError::InvalidInput(
            "field and speed grids differ".into(),
        ));
    }
    if !state.values.iter().all(|v| v.is_finite()) {
        return Err(TransportError::NonFinite("field values"));
    }
    let number = cfg.stability_number(speeds);
    if number > 1.0 + 1e-12 {
        return Err(TransportError::Stability {
            what: "explicit advection-diffusion number",
            value: number,
            limit: 1.0,
        });
    }

    let n = state.grid.n_cells();
    let h = state.grid.h();
    let dt = cfg.dt;
    let phi = &state.values;
    let values = (0..n)
        .map(|i| {
            let left = phi[if i == 0 { 0 } else { i - 1 }];
            let right = phi[if i + 1 == n { n - 1 } else { i + 1 }];
            let center = phi[i];
            center - speeds.values[i] * dt * (right - left) / (2.0 * h)
                + cfg.eps_visc * dt * (right - 2.0 * center + left) / (h * h)
        })
        .collect();
    FieldState::new(state.grid.clone(), values, state.time + dt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid1D;

    #[test]
    fn constant_field_is_preserved() {
        let grid = Grid1D::new(-1.0, 1.0, 32).unwrap();
        let state = FieldState::new(grid.clone(), vec![1.5; 32], 0.0).unwrap();
        let speeds = SpeedField::from_fn(grid, |x| if x < 0.0 { -2.0 } else { 3.0 }).unwrap();
        let cfg = ViscousConfig::with_default_dt(&speeds, DEFAULT_EPS_VISC, 1).unwrap();
        let next = viscous_step(&state, &speeds, &cfg).unwrap();
        assert!(next.values.iter().all(|&v| v == 1.5));
    }

    #[test]
    fn zero_speed_reduces_to_an_explicit_heat_step() {
        let grid = Grid1D::new(-1.0, 1.0, 33).unwrap();
        let mut values = vec![0.0; 33];
        values[16] = 1.0;
        let state = FieldState::new(grid.clone(), values, 0.0).unwrap();
        let speeds = SpeedField::new(grid.clone(), vec![0.0; 33]).unwrap();
        let cfg = ViscousConfig::with_default_dt(&speeds, 0.1, 1).unwrap();
        let next = viscous_step(&state, &speeds, &cfg).unwrap();
        let h = grid.h();
        let expected = 1.0 - 2.0 * 0.1 * cfg.dt / (h * h);
        assert!((next.values[16] - expected).abs() < 1e-15);
    }

    #[test]
    fn fan_case_plateau_sits_near_lambda_after_100_steps() {
        let grid = Grid1D::new(-1.0, 1.0, 100).unwrap();
        let values = grid.sample(|x| if x < 0.0 { 1.0 } else { 0.0 });
        let mut state = FieldState::new(grid.clone(), values, 0.0).unwrap();
        let speeds = SpeedField::from_fn(grid, |x| if x < 0.0 { -2.0 } else { 3.0 }).unwrap();
        let cfg = ViscousConfig::with_default_dt(&speeds, DEFAULT_EPS_VISC, 100).unwrap();
        for _ in 0..cfg.n_steps {
            state = viscous_step(&state, &speeds, &cfg).unwrap();
        }
        // Central plateau value against λ = 0.6.
        let center = 0.5 * (state.values[49] + state.values[50]);
        assert!((center - 0.6).abs() < 0.05, "center = {center}");
    }

    #[test]
    fn fan_center_agrees_with_the_regularization_oracle() {
        use crate::characteristics::{
            evaluate_regularized_solution, RegularizationParams, TraceMethod,
        };
        use crate::riemann::RiemannData;

        // h = 1/400 on [-1, 1], run to t = 0.2.
        let grid = Grid1D::new(-1.0, 1.0, 800).unwrap();
        let values = grid.sample(|x| if x < 0.0 { 1.0 } else { 0.0 });
        let mut state = FieldState::new(grid.clone(), values, 0.0).unwrap();
        let speeds = SpeedField::from_fn(grid, |x| if x < 0.0 { -2.0 } else { 3.0 }).unwrap();
        let cfg = ViscousConfig::with_default_dt(&speeds, DEFAULT_EPS_VISC, 0).unwrap();
        let t_final = 0.2;
        let n_steps = (t_final / cfg.dt).round() as usize;
        for _ in 0..n_steps {
            state = viscous_step(&state, &speeds, &cfg).unwrap();
        }

        let data = RiemannData::new(-2.0, 3.0, 1.0, 0.0).unwrap();
        let params = RegularizationParams::new(0.0002, data).unwrap();
        let oracle =
            evaluate_regularized_solution(0.0, t_final, &params, TraceMethod::default()).unwrap();
        let center = 0.5 * (state.values[399] + state.values[400]);
        assert!(
            (center - oracle).abs() < 0.05,
            "viscous {center} vs oracle {oracle}"
        );
    }

    #[test]
    fn stays_within_the_initial_range() {
        let grid = Grid1D::new(-1.0, 1.0, 80).unwrap();
        let values = grid.sample(|x| (2.5 * x).sin());
        let mut state = FieldState::new(grid.clone(), values, 0.0).unwrap();
        let speeds = SpeedField::from_fn(grid, |x| if x < 0.0 { -2.0 } else { 3.0 }).unwrap();
        let cfg = ViscousConfig::with_default_dt(&speeds, DEFAULT_EPS_VISC, 200).unwrap();
        let (lo, hi) = (state.min(), state.max());
        for _ in 0..cfg.n_steps {
            state = viscous_step(&state, &speeds, &cfg).unwrap();
        }
        assert!(state.min() >= lo - 1e-10);
        assert!(state.max() <= hi + 1e-10);
    }

    #[test]
    fn unstable_dt_is_refused() {
        let grid = Grid1D::new(-1.0, 1.0, 32).unwrap();
        let state = FieldState::new(grid.clone(), vec![0.0; 32], 0.0).unwrap();
        let speeds = SpeedField::new(grid, vec![1.0; 32]).unwrap();
        let cfg = ViscousConfig::new(0.1, 1.0, 1).unwrap();
        assert!(matches!(
            viscous_step(&state, &speeds, &cfg),
            Err(TransportError::Stability { .. })
        ));
    }
}
