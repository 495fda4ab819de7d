//! Godunov time stepping on half cells.
//!
//! Each interface i-1/2 solves a local Riemann problem; the projection
//! step averages the right half-state of interface i-1/2 with the left
//! half-state of interface i+1/2:
//!
//!   φ^{n+1}_i = (φ^{n+1,R}_{i-1/2} + φ^{n+1,L}_{i+1/2}) / 2
//!
//! The proposed variant keeps the per-cell speeds and their signs; the
//! averaged variant replaces the interface pair by its arithmetic mean
//! before upwinding, which is what this suite exists to compare against.
//!
//! Waves must not cross more than half a cell per step, hence the factor
//! two in the CFL bound 2 (Δt/h) max|a| <= 1.

use crate::error::{Result, TransportError};
use crate::grid::{FieldState, SpeedField};
use crate::riemann::{compute_lambda, RiemannData};

/// Which update rule a simulation step uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeKind {
    /// Half-cell Godunov with the sign-aware interface solver.
    ProposedGodunov,
    /// Half-cell Godunov with arithmetically averaged interface speeds.
    AveragedGodunov,
    /// Centered differences with first-order artificial viscosity.
    ViscousCentered,
}

impl SchemeKind {
    pub fn name(&self) -> &'static str {
        match self {
            SchemeKind::ProposedGodunov => "proposed",
            SchemeKind::AveragedGodunov => "averaged",
            SchemeKind::ViscousCentered => "viscous",
        }
    }
}

/// Projected half-cell states on either side of one interface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfStates {
    /// φ^{n+1,R}_{i-1/2}: new state of the right half cell (cell i).
    pub phi_right_of_interface: f64,
    /// φ^{n+1,L}_{i-1/2}: new state of the left half cell (cell i-1).
    pub phi_left_of_interface: f64,
}

// Slack over the exact CFL number, so that dt = max_stable_dt(cfl = 1)
// is not rejected for a rounding ulp.
const CFL_SLACK: f64 = 1e-12;

fn check_half_state_inputs(
    a_prev: f64,
    a_curr: f64,
    phi_prev: f64,
    phi_curr: f64,
    r: f64,
) -> Result<()> {
    if ![a_prev, a_curr, phi_prev, phi_curr].iter().all(|v| v.is_finite()) {
        return Err(TransportError::NonFinite("half-state inputs"));
    }
    if !r.is_finite() || r <= 0.0 {
        return Err(TransportError::InvalidInput(format!(
            "mesh ratio r = dt/h must be positive, got {r}"
        )));
    }
    let cfl = 2.0 * r * a_prev.abs().max(a_curr.abs());
    if cfl > 1.0 + CFL_SLACK {
        return Err(TransportError::Stability {
            what: "interface CFL number",
            value: cfl,
            limit: 1.0,
        });
    }
    Ok(())
}

/// Half-cell states from the sign-aware interface solver.
///
/// `prev` is cell i-1 (left of the interface), `curr` is cell i, and
/// `r = Δt/h`. A zero speed contributes no wave on its side.
pub fn proposed_half_states(
    a_prev: f64,
    a_curr: f64,
    phi_prev: f64,
    phi_curr: f64,
    r: f64,
) -> Result<HalfStates> {
    check_half_state_inputs(a_prev, a_curr, phi_prev, phi_curr, r)?;
    let two_r = 2.0 * r;
    let (right, left) = match (a_prev < 0.0, a_curr > 0.0) {
        // Opening fan: both half cells relax toward the intermediate λ.
        (true, true) => {
            let lambda = compute_lambda(&RiemannData {
                a_left: a_prev,
                a_right: a_curr,
                phi_left: phi_prev,
                phi_right: phi_curr,
            })?;
            (
                phi_curr - two_r * a_curr * (phi_curr - lambda),
                phi_prev - two_r * a_prev * (lambda - phi_prev),
            )
        }
        // Both waves leftward: only the left half cell sees the jump.
        (true, false) => (
            phi_curr,
            phi_prev - two_r * a_prev * (phi_curr - phi_prev),
        ),
        // Blocked: converging speeds leave both half cells untouched.
        (false, false) => (phi_curr, phi_prev),
        // Both waves rightward: only the right half cell sees the jump.
        (false, true) => (
            phi_curr - two_r * a_curr * (phi_curr - phi_prev),
            phi_prev,
        ),
    };
    Ok(HalfStates {
        phi_right_of_interface: right,
        phi_left_of_interface: left,
    })
}

/// Half-cell states after averaging the interface speeds to
/// α = (a_prev + a_curr)/2 and upwinding on the sign of α.
pub fn averaged_half_states(
    a_prev: f64,
    a_curr: f64,
    phi_prev: f64,
    phi_curr: f64,
    r: f64,
) -> Result<HalfStates> {
    check_half_state_inputs(a_prev, a_curr, phi_prev, phi_curr, r)?;
    let alpha = 0.5 * (a_prev + a_curr);
    let two_r = 2.0 * r;
    let (right, left) = if alpha > 0.0 {
        (
            phi_curr - two_r * alpha * (phi_curr - phi_prev),
            phi_prev,
        )
    } else if alpha < 0.0 {
        (
            phi_curr,
            phi_prev - two_r * alpha * (phi_curr - phi_prev),
        )
    } else {
        (phi_curr, phi_prev)
    };
    Ok(HalfStates {
        phi_right_of_interface: right,
        phi_left_of_interface: left,
    })
}

/// Largest stable time step: cfl * h / (2 max|a_i|).
pub fn max_stable_dt(speeds: &SpeedField, cfl: f64) -> Result<f64> {
    if !cfl.is_finite() || cfl <= 0.0 || cfl > 1.0 {
        return Err(TransportError::InvalidInput(format!(
            "cfl must lie in (0, 1], got {cfl}"
        )));
    }
    let a_max = speeds.max_abs();
    if a_max == 0.0 {
        return Err(TransportError::InvalidInput(
            "all-zero speed field has no CFL constraint; choose dt explicitly".into(),
        ));
    }
    Ok(cfl * speeds.grid.h() / (2.0 * a_max))
}

/// Advance a field by one Godunov step of size `dt`.
///
/// Boundary interfaces reuse the boundary cell's own value and speed as
/// the exterior state (outflow extrapolation).
pub fn godunov_step(
    state: &FieldState,
    speeds: &SpeedField,
    dt: f64,
    kind: SchemeKind,
) -> Result<FieldState> {
    if state.grid != speeds.grid {
        return Err(TransportError::InvalidInput(
            "field and speed grids differ".into(),
        ));
    }
    if !state.values.iter().all(|v| v.is_finite()) {
        return Err(TransportError::NonFinite("field values"));
    }
    if !dt.is_finite() || dt <= 0.0 {
        return Err(TransportError::InvalidInput(format!(
            "dt must be positive, got {dt}"
        )));
    }
    let half_states = match kind {
        SchemeKind::ProposedGodunov => proposed_half_states,
        SchemeKind::AveragedGodunov => averaged_half_states,
        SchemeKind::ViscousCentered => {
            return Err(TransportError::InvalidInput(
                "godunov_step does not drive the viscous scheme; use viscous_step".into(),
            ))
        }
    };
    let h = state.grid.h();
    let r = dt / h;
    let cfl = 2.0 * r * speeds.max_abs();
    if cfl > 1.0 + CFL_SLACK {
        return Err(TransportError::Stability {
            what: "CFL number 2 dt max|a| / h",
            value: cfl,
            limit: 1.0,
        });
    }

    let n = state.grid.n_cells();
    let phi = &state.values;
    let a = &speeds.values;
    // Interface j sits between cells j-1 and j; j = 0 and j = n are the
    // outflow boundaries where the exterior state copies the edge cell.
    let mut interfaces = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let (a_prev, phi_prev) = if j == 0 { (a[0], phi[0]) } else { (a[j - 1], phi[j - 1]) };
        let (a_curr, phi_curr) = if j == n {
            (a[n - 1], phi[n - 1])
        } else {
            (a[j], phi[j])
        };
        interfaces.push(half_states(a_prev, a_curr, phi_prev, phi_curr, r)?);
    }

    let values = (0..n)
        .map(|i| {
            0.5 * (interfaces[i].phi_right_of_interface
                + interfaces[i + 1].phi_left_of_interface)
        })
        .collect();
    FieldState::new(state.grid.clone(), values, state.time + dt)
}
