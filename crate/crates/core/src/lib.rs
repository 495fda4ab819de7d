//! Solvers for the 1D linear transport equation φ_t + a(x) φ_x = 0 with
//! a discontinuous wave speed a(x).
//!
//! When the speed jumps at the same location as the data, classical
//! speed-averaging interface solvers transport the wrong value. This
//! crate implements an interface Riemann solver that keeps both speeds
//! and their signs ([`riemann`]), the half-cell Godunov schemes built on
//! it ([`godunov`], in a proposed and a speed-averaged variant), an
//! exact-characteristics oracle for the quadratically regularized
//! problem ([`characteristics`]), a viscous centered reference scheme
//! ([`viscous`]), and an experiment harness with CSV reports and named
//! figure presets ([`harness`]).

pub mod characteristics;
pub mod error;
pub mod godunov;
pub mod grid;
pub mod harness;
pub mod riemann;
pub mod viscous;

pub use characteristics::{
    epsilon_sweep, evaluate_regularized_solution, EpsilonSweep, RegularizationParams, SweepRow,
    TraceMethod, TraceResult,
};
pub use error::{Result, TransportError};
pub use godunov::{
    averaged_half_states, godunov_step, max_stable_dt, proposed_half_states, HalfStates,
    SchemeKind,
};
pub use grid::{FieldState, Grid1D, SpeedField};
pub use riemann::{
    classify, compute_lambda, interface_solution, InterfaceSolution, RiemannData, SpeedCase,
};
pub use viscous::{viscous_step, ViscousConfig};
