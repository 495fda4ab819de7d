//! Interface Riemann solver for φ_t + a(x) φ_x = 0 with a jump in both
//! the state and the wave speed at x = 0.
//!
//! Unlike classical approximate solvers, the wave speed is *not* averaged
//! across the interface: the left and right speeds keep their own signs,
//! which splits the problem into four cases. When the speeds point away
//! from each other (a_L < 0 < a_R) a new constant state
//!
//!   λ = (|a_R| φ_L + |a_L| φ_R) / (|a_L| + |a_R|)
//!
//! fills the opening fan; when they point toward each other the jump is
//! blocked in place.

use crate::error::{Result, TransportError};

/// Left/right wave speeds and states at an interface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannData {
    pub a_left: f64,
    pub a_right: f64,
    pub phi_left: f64,
    pub phi_right: f64,
}

impl RiemannData {
    pub fn new(a_left: f64, a_right: f64, phi_left: f64, phi_right: f64) -> Result<Self> {
        let data = Self {
            a_left,
            a_right,
            phi_left,
            phi_right,
        };
        data.check_finite()?;
        Ok(data)
    }

    pub fn check_finite(&self) -> Result<()> {
        if ![self.a_left, self.a_right, self.phi_left, self.phi_right]
            .iter()
            .all(|v| v.is_finite())
        {
            return Err(TransportError::NonFinite("Riemann data"));
        }
        Ok(())
    }
}

/// Sign configuration of the two wave speeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpeedCase {
    /// a_L > 0 and a_R > 0: the jump propagates right.
    BothPositive,
    /// a_L < 0 and a_R > 0: an intermediate constant appears.
    LeftNegRightPos,
    /// a_L < 0 and a_R < 0: the jump propagates left.
    BothNegative,
    /// a_L > 0 and a_R < 0: the jump stays blocked at the interface.
    LeftPosRightNeg,
    /// At least one speed is zero (within tolerance); that side does not
    /// propagate.
    Degenerate,
}

/// Solution of the interface Riemann problem along the trace x = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InterfaceSolution {
    /// The left state is transported across (both speeds positive).
    LeftState(f64),
    /// The right state is transported across (both speeds negative).
    RightState(f64),
    /// The intermediate constant λ fills the fan (a_L < 0 < a_R).
    Intermediate(f64),
    /// No propagation: both original states stay in place.
    Blocked(f64, f64),
}

/// Classify the sign configuration of an interface speed pair.
///
/// A side whose speed is within `zero_tol` of zero makes the pair
/// `Degenerate`; otherwise strict signs decide between the four cases.
pub fn classify(a_left: f64, a_right: f64, zero_tol: f64) -> Result<SpeedCase> {
    if !a_left.is_finite() || !a_right.is_finite() {
        return Err(TransportError::NonFinite("wave speeds"));
    }
    if !zero_tol.is_finite() || zero_tol < 0.0 {
        return Err(TransportError::InvalidInput(format!(
            "zero tolerance must be finite and non-negative, got {zero_tol}"
        )));
    }
    if a_left.abs() <= zero_tol || a_right.abs() <= zero_tol {
        return Ok(SpeedCase::Degenerate);
    }
    Ok(match (a_left > 0.0, a_right > 0.0) {
        (true, true) => SpeedCase::BothPositive,
        (false, true) => SpeedCase::LeftNegRightPos,
        (false, false) => SpeedCase::BothNegative,
        (true, false) => SpeedCase::LeftPosRightNeg,
    })
}

/// Intermediate constant λ for the opening-fan case (a_L < 0 < a_R).
///
/// Evaluated in the cleared-denominator form
/// (|a_R| φ_L + |a_L| φ_R) / (|a_L| + |a_R|), which stays finite for
/// arbitrarily small speeds where the reciprocal-weight form would
/// overflow. λ is always a convex combination of φ_L and φ_R.
pub fn compute_lambda(data: &RiemannData) -> Result<f64> {
    data.check_finite()?;
    let wl = data.a_right.abs();
    let wr = data.a_left.abs();
    let denom = wl + wr;
    if denom == 0.0 {
        return Err(TransportError::DegenerateSpeeds);
    }
    Ok((wl * data.phi_left + wr * data.phi_right) / denom)
}

/// Solve the interface Riemann problem: the value transported along x = 0.
pub fn interface_solution(data: &RiemannData, zero_tol: f64) -> Result<InterfaceSolution> {
    data.check_finite()?;
    Ok(match classify(data.a_left, data.a_right, zero_tol)? {
        SpeedCase::BothPositive => InterfaceSolution::LeftState(data.phi_left),
        SpeedCase::BothNegative => InterfaceSolution::RightState(data.phi_right),
        SpeedCase::LeftNegRightPos => InterfaceSolution::Intermediate(compute_lambda(data)?),
        // A zero-speed side transports nothing, so both sides keep their
        // own state, exactly as in the blocked case.
        SpeedCase::LeftPosRightNeg | SpeedCase::Degenerate => {
            InterfaceSolution::Blocked(data.phi_left, data.phi_right)
        }
    })
}
