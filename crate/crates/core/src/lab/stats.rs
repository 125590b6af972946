use statrs::distribution::{ContinuousCDF, Normal};

/// Two-sided standard normal quantile, e.g. 1.95996 for 0.95.
pub fn z_for_confidence(confidence: f64) -> f64 {
    let normal = Normal::new(0.0, 1.0).expect("standard normal");
    normal.inverse_cdf(1.0 - (1.0 - confidence) / 2.0)
}

/// Wilson score interval for a binomial proportion.
pub fn wilson_interval(successes: u64, samples: u64, confidence: f64) -> (f64, f64) {
    assert!(samples > 0 && successes <= samples);
    let n = samples as f64;
    let p = successes as f64 / n;
    let z = z_for_confidence(confidence);
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // Rounding can push a bound past the point estimate at 0 or 1.
    ((centre - half).clamp(0.0, p), (centre + half).clamp(p, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantiles() {
        assert!((z_for_confidence(0.95) - 1.959964).abs() < 1e-5);
        assert!((z_for_confidence(0.999) - 3.290527).abs() < 1e-5);
    }

    #[test]
    fn known_interval() {
        // 8 of 10 at 95%: (0.4902, 0.9433) from the closed form.
        let (lo, hi) = wilson_interval(8, 10, 0.95);
        assert!((lo - 0.490156).abs() < 1e-5, "{lo}");
        assert!((hi - 0.943318).abs() < 1e-5, "{hi}");
    }

    #[test]
    fn extremes_stay_ordered() {
        for (s, n) in [(0, 1), (1, 1), (0, 200), (200, 200), (3, 7)] {
            let (lo, hi) = wilson_interval(s, n, 0.95);
            let p = s as f64 / n as f64;
            assert!(0.0 <= lo && lo <= p && p <= hi && hi <= 1.0);
        }
        assert_eq!(wilson_interval(0, 50, 0.95).0, 0.0);
    }
}
