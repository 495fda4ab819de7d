//! Uniform 1D grid and the cell-centered fields living on it.

use crate::error::{Result, TransportError};

/// Uniform cell-centered grid on `[x_min, x_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    x_min: f64,
    x_max: f64,
    n_cells: usize,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n_cells: usize) -> Result<Self> {
        if !x_min.is_finite() || !x_max.is_finite() {
            return Err(TransportError::NonFinite("grid bounds"));
        }
        if x_min >= x_max {
            return Err(TransportError::InvalidInput(format!(
                "grid bounds must satisfy x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if n_cells < 2 {
            return Err(TransportError::InvalidInput(format!(
                "grid needs at least 2 cells, got {n_cells}"
            )));
        }
        Ok(Self {
            x_min,
            x_max,
            n_cells,
        })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    /// Cell width h.
    pub fn h(&self) -> f64 {
        (self.x_max - self.x_min) / self.n_cells as f64
    }

    /// Center of cell `i`: x_min + (i + 1/2) h.
    pub fn cell_center(&self, i: usize) -> f64 {
        debug_assert!(i < self.n_cells);
        self.x_min + (i as f64 + 0.5) * self.h()
    }

    pub fn cell_centers(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_cells).map(|i| self.cell_center(i))
    }

    /// Sample a function at every cell center.
    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        self.cell_centers().map(f).collect()
    }
}

/// Cell-centered scalar field plus the simulation time it belongs to.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldState {
    pub grid: Grid1D,
    pub values: Vec<f64>,
    pub time: f64,
}

impl FieldState {
    pub fn new(grid: Grid1D, values: Vec<f64>, time: f64) -> Result<Self> {
        if values.len() != grid.n_cells() {
            return Err(TransportError::InvalidInput(format!(
                "field has {} values for a grid of {} cells",
                values.len(),
                grid.n_cells()
            )));
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(TransportError::NonFinite("field values"));
        }
        if !time.is_finite() || time < 0.0 {
            return Err(TransportError::InvalidInput(format!(
                "time must be finite and non-negative, got {time}"
            )));
        }
        Ok(Self { grid, values, time })
    }

    pub fn min(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// max - min of the field values.
    pub fn range(&self) -> f64 {
        self.max() - self.min()
    }
}

/// Per-cell wave speed samples a(x_i).
#[derive(Debug, Clone, PartialEq)]
pub struct SpeedField {
    pub grid: Grid1D,
    pub values: Vec<f64>,
}

impl SpeedField {
    pub fn new(grid: Grid1D, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n_cells() {
            return Err(TransportError::InvalidInput(format!(
                "speed field has {} values for a grid of {} cells",
                values.len(),
                grid.n_cells()
            )));
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(TransportError::NonFinite("speed values"));
        }
        Ok(Self { grid, values })
    }

    /// Sample a speed function at every cell center.
    pub fn from_fn(grid: Grid1D, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.sample(f);
        Self::new(grid, values)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}
