/// Fixed-point rendering with `digits` significant digits; falls back to
/// scientific notation for very small or very large magnitudes.
pub fn sig(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 || !x.is_finite() {
        return format!("{:.*}", digits - 1, x);
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-4..15).contains(&magnitude) {
        return format!("{:.*e}", digits - 1, x);
    }
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{:.*}", decimals, x)
}

/// Machine representation: 17 significant digits, round-trips exactly.
pub fn exact(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig(0.35, 12), "0.350000000000");
        assert_eq!(sig(0.0, 12), "0.00000000000");
        assert_eq!(sig(-1.0, 12), "-1.00000000000");
        assert_eq!(sig(12.5, 4), "12.50");
        assert_eq!(sig(3e-17, 3), "3.00e-17");
    }

    #[test]
    fn exact_round_trips() {
        for x in [0.1, 1.0 / 3.0, -7e-300, 0.875] {
            assert_eq!(exact(x).parse::<f64>().unwrap(), x);
        }
    }
}
