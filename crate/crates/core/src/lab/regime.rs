use std::fmt;

use serde::Serialize;

use crate::graph::PFamily;

const EPS: f64 = 1e-12;

/// Sparse-graph regime of `p(N) = c·N^(−α)·(ln N)^β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// `p ≪ N^(−2)`: almost surely no edges.
    R1,
    /// `N^(−1−1/(k−1)) ≪ p ≪ N^(−1−1/k)`: forests whose trees have at most `k` vertices.
    R2 { k: u32 },
    /// `N^(−1−ε) ≪ p ≪ N^(−1)` for every ε.
    R3,
    /// `N^(−1) ≪ p ≪ N^(−1)·ln N`.
    R4,
    Outside,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::R1 => f.write_str("R1"),
            Regime::R2 { k } => write!(f, "R2(k={k})"),
            Regime::R3 => f.write_str("R3"),
            Regime::R4 => f.write_str("R4"),
            Regime::Outside => f.write_str("outside"),
        }
    }
}

/// Classifies by `(α, β)` only. Boundary exponents count as outside.
pub fn classify_regime(fam: &PFamily) -> Regime {
    let (a, b) = (fam.alpha, fam.beta);
    if a > 2.0 + EPS {
        return Regime::R1;
    }
    if (a - 1.0).abs() <= EPS {
        return if b < -EPS {
            Regime::R3
        } else if b > EPS && b < 1.0 - EPS {
            Regime::R4
        } else {
            Regime::Outside
        };
    }
    if a > 1.0 + EPS && a < 2.0 - EPS {
        let x = 1.0 / (a - 1.0);
        if (x - x.round()).abs() < 1e-9 {
            return Regime::Outside;
        }
        return Regime::R2 { k: x.ceil() as u32 };
    }
    Regime::Outside
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(alpha: f64, beta: f64) -> Regime {
        classify_regime(&PFamily::new(1.0, alpha, beta).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(at(2.5, 0.0), Regime::R1);
        assert_eq!(at(1.4, 0.0), Regime::R2 { k: 3 });
        assert_eq!(at(1.7, 0.0), Regime::R2 { k: 2 });
        assert_eq!(at(1.0, 0.5), Regime::R4);
        assert_eq!(at(1.0, -1.0), Regime::R3);
    }

    #[test]
    fn boundaries_are_outside() {
        for (a, b) in [(2.0, 0.0), (1.5, 0.0), (1.25, 0.0), (1.0 + 1.0 / 3.0, 0.0), (1.0, 0.0), (1.0, 1.0), (1.0, 2.0), (0.5, 0.0)] {
            assert_eq!(at(a, b), Regime::Outside, "alpha={a} beta={b}");
        }
    }

    #[test]
    fn r2_intervals_match_their_index() {
        for k in 2..40u32 {
            let lo = 1.0 + 1.0 / k as f64;
            let hi = 1.0 + 1.0 / (k - 1) as f64;
            assert_eq!(at((lo + hi) / 2.0, 0.3), Regime::R2 { k });
        }
    }
}
