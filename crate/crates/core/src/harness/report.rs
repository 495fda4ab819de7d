//! CSV emission for fields, comparisons and ε-sweeps.
//!
//! All numbers are written with 17 significant digits so files
//! round-trip to the exact f64 bits; metadata rides along as
//! `#`-prefixed comment lines above the column header. Output is fully
//! deterministic: identical inputs produce identical bytes.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::characteristics::EpsilonSweep;
use crate::error::Result;
use crate::grid::FieldState;
use crate::harness::ComparisonReport;
use crate::riemann::{classify, compute_lambda, SpeedCase};

/// 17 significant digits: 1 leading + 16 fractional.
pub fn csv_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    match v {
        Some(v) => v.to_string(),
        None => "absent".to_string(),
    }
}

/// `x,phi` rows of a single field; no metadata.
pub fn write_field_csv(state: &FieldState, w: &mut dyn Write) -> io::Result<()> {
    writeln!(w, "x,phi")?;
    for (x, v) in state.grid.cell_centers().zip(&state.values) {
        writeln!(w, "{},{}", csv_f64(x), csv_f64(*v))?;
    }
    Ok(())
}

/// Comparison of the two Godunov variants with a config echo up front.
pub fn write_comparison_csv(report: &ComparisonReport, w: &mut dyn Write) -> io::Result<()> {
    let m = &report.meta;
    writeln!(w, "# schemes = proposed vs averaged")?;
    writeln!(w, "# nx = {}", m.nx)?;
    writeln!(w, "# h = {}", m.h)?;
    writeln!(w, "# dt = {}", m.dt)?;
    writeln!(w, "# n_steps = {}", m.n_steps)?;
    writeln!(w, "# cfl = {}", m.cfl)?;
    writeln!(w, "# a_left = {}", m.a_left)?;
    writeln!(w, "# a_right = {}", m.a_right)?;
    writeln!(w, "# t_final = {}", m.t_final)?;
    writeln!(w, "# ic = {}", m.ic)?;
    writeln!(w, "# lambda_exact = {}", fmt_opt(report.lambda_exact))?;
    writeln!(w, "# plateau_proposed = {}", fmt_opt(report.plateau_proposed))?;
    writeln!(w, "# plateau_averaged = {}", fmt_opt(report.plateau_averaged))?;
    writeln!(w, "# max_abs_diff = {}", report.max_abs_diff)?;
    writeln!(w, "x,phi_proposed,phi_averaged")?;
    for ((x, p), a) in report
        .proposed
        .grid
        .cell_centers()
        .zip(&report.proposed.values)
        .zip(&report.averaged.values)
    {
        writeln!(w, "{},{},{}", csv_f64(x), csv_f64(*p), csv_f64(*a))?;
    }
    Ok(())
}

/// ε-sweep rows with the λ reference error in the last column.
pub fn write_sweep_csv(sweep: &EpsilonSweep, w: &mut dyn Write) -> io::Result<()> {
    let d = &sweep.data;
    let lambda = match classify(d.a_left, d.a_right, 0.0) {
        Ok(SpeedCase::LeftNegRightPos) => compute_lambda(d).ok(),
        _ => None,
    };
    writeln!(w, "# probe = {}", sweep.probe)?;
    writeln!(w, "# t = {}", sweep.time)?;
    writeln!(w, "# a_left = {}", d.a_left)?;
    writeln!(w, "# a_right = {}", d.a_right)?;
    writeln!(w, "# phi_left = {}", d.phi_left)?;
    writeln!(w, "# phi_right = {}", d.phi_right)?;
    writeln!(w, "# lambda = {}", fmt_opt(lambda))?;
    if let Some(last) = sweep.rows.last() {
        writeln!(w, "# asymptotic_epsilon = {}", last.epsilon)?;
    }
    writeln!(w, "epsilon,phi_probe,abs_err_vs_lambda")?;
    for row in &sweep.rows {
        let err = lambda.map_or(f64::NAN, |l| (row.phi_probe - l).abs());
        writeln!(
            w,
            "{},{},{}",
            csv_f64(row.epsilon),
            csv_f64(row.phi_probe),
            csv_f64(err)
        )?;
    }
    Ok(())
}

pub fn save_field_csv(state: &FieldState, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_field_csv(state, &mut w)?;
    w.flush().map_err(Into::into)
}

pub fn save_comparison_csv(report: &ComparisonReport, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_comparison_csv(report, &mut w)?;
    w.flush().map_err(Into::into)
}

pub fn save_sweep_csv(sweep: &EpsilonSweep, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_sweep_csv(sweep, &mut w)?;
    w.flush().map_err(Into::into)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid1D;
    use crate::harness::{compare_schemes, ExperimentConfig};

    #[test]
    fn field_csv_is_header_plus_one_row_per_cell() {
        let grid = Grid1D::new(0.0, 3.0, 3).unwrap();
        let state = FieldState::new(grid, vec![1.0, 2.0, 0.5], 0.0).unwrap();
        let mut buf = Vec::new();
        write_field_csv(&state, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "x,phi");
    }

    #[test]
    fn csv_numbers_round_trip_to_identical_bits() {
        for v in [0.6, -0.1031, 1.0 / 3.0, 2.5e-17, -7.125e90] {
            let parsed: f64 = csv_f64(v).parse().unwrap();
            assert_eq!(parsed.to_bits(), v.to_bits(), "{v}");
        }
    }

    #[test]
    fn comparison_csv_carries_metadata_comments() {
        let mut config = ExperimentConfig::riemann_default();
        config.grid = Grid1D::new(-1.0, 1.0, 64).unwrap();
        config.run_length = crate::harness::RunLength::FinalTime(0.05);
        let report = compare_schemes(&config).unwrap();
        let mut buf = Vec::new();
        write_comparison_csv(&report, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("# schemes = proposed vs averaged\n"));
        assert!(text.contains("# lambda_exact = 0.6\n"));
        let header = text.lines().find(|l| !l.starts_with('#')).unwrap();
        assert_eq!(header, "x,phi_proposed,phi_averaged");
        let data_rows = text
            .lines()
            .skip_while(|l| l.starts_with('#'))
            .skip(1)
            .count();
        assert_eq!(data_rows, 64);
    }

    #[test]
    fn sweep_csv_has_the_documented_header() {
        use crate::characteristics::epsilon_sweep;
        use crate::riemann::RiemannData;
        let data = RiemannData::new(-2.0, 3.0, 1.0, 0.0).unwrap();
        let sweep = epsilon_sweep(0.05, 0.05, &data, &[0.1, 0.05]).unwrap();
        let mut buf = Vec::new();
        write_sweep_csv(&sweep, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("epsilon,phi_probe,abs_err_vs_lambda"));
        assert!(text.contains("# lambda = 0.6"));
        assert!(text.contains("# asymptotic_epsilon = 0.05"));
    }
}
