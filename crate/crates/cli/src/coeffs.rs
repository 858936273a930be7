//! Bogoliubov coefficient table.

use std::io::Write;

use rindler::unruh::bogoliubov_coefficients;

use crate::output::sig12;
use crate::CliError;

/// Prints the eight coefficients (real and imaginary parts) and the
/// residuals of the symmetry relations that tie them together.
pub fn run<W: Write>(
    writer: &mut W,
    e_rindler: f64,
    e_minkowski: f64,
    theta: f64,
) -> Result<(), CliError> {
    if e_minkowski <= 0.0 {
        return Err(CliError::Domain(format!(
            "--e-minkowski must be positive, got {e_minkowski}"
        )));
    }
    let co = bogoliubov_coefficients(e_rindler, e_minkowski, theta)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    let rows = [
        ("alpha_I", co.alpha_i),
        ("beta_I", co.beta_i),
        ("gamma_I", co.gamma_i),
        ("eta_I", co.eta_i),
        ("alpha_II", co.alpha_ii),
        ("beta_II", co.beta_ii),
        ("gamma_II", co.gamma_ii),
        ("eta_II", co.eta_ii),
    ];
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    for (name, value) in rows {
        writeln!(
            writer,
            "{name:<9} re {:>18}  im {:>18}",
            sig12(value.re),
            sig12(value.im)
        )
        .map_err(io)?;
    }
    let residuals = [
        (
            "gamma_I + conj(beta_I)",
            (co.gamma_i + co.beta_i.conj()).norm(),
        ),
        (
            "eta_I - conj(alpha_I)",
            (co.eta_i - co.alpha_i.conj()).norm(),
        ),
        (
            "region II - conj(region I)",
            (co.alpha_ii - co.alpha_i.conj())
                .norm()
                .max((co.beta_ii - co.beta_i.conj()).norm())
                .max((co.gamma_ii - co.gamma_i.conj()).norm())
                .max((co.eta_ii - co.eta_i.conj()).norm()),
        ),
    ];
    for (name, value) in residuals {
        writeln!(writer, "residual {name:<28} {}", sig12(value)).map_err(io)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_rindler_energy_gives_unit_amplitudes() {
        // E_ω = 1/(4π) makes the prefactor exactly 1+i, so at E_Ω = 0
        // (r_Ω = π/4) the first coefficient is (1+i)/√2, of modulus one
        let mut buf = Vec::new();
        run(&mut buf, 0.0, 1.0 / (4.0 * std::f64::consts::PI), 0.0).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let fields: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
        assert_eq!(fields[0], "alpha_I");
        let alpha_re: f64 = fields[2].parse().unwrap();
        let alpha_im: f64 = fields[4].parse().unwrap();
        assert!((alpha_re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-11);
        assert!((alpha_re.hypot(alpha_im) - 1.0).abs() < 1e-11);
        // residual lines come out exactly zero
        assert_eq!(text.matches("residual").count(), 3);
        for line in text.lines().filter(|l| l.starts_with("residual")) {
            assert!(line.ends_with("0.00000000000e0"), "{line}");
        }
    }

    #[test]
    fn rejects_nonpositive_minkowski_energy() {
        let mut buf = Vec::new();
        assert!(run(&mut buf, 1.0, 0.0, 0.0).is_err());
    }
}
