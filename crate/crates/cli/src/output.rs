//! Deterministic number formatting.

/// Formats with 12 significant digits in scientific notation.
///
/// Fixed-width mantissa keeps CSV output byte-deterministic and diffable
/// against 1e-10 tolerances.
pub fn sig12(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x }; // normalize -0.0
    format!("{x:.11e}")
}

#[cfg(test)]
mod tests {
    use super::sig12;

    #[test]
    fn formats_have_twelve_significant_digits() {
        assert_eq!(sig12(0.5), "5.00000000000e-1");
        assert_eq!(sig12(0.0), "0.00000000000e0");
        assert_eq!(sig12(-0.0), "0.00000000000e0");
        assert_eq!(sig12(0.25), "2.50000000000e-1");
        assert_eq!(sig12(0.043187048524782126), "4.31870485248e-2");
    }
}
