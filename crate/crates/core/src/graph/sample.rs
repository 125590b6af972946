//! Erdős–Rényi samplers.
//!
//! Every sampler takes an explicit 64-bit seed and draws one uniform `f64`
//! per unordered pair `(u, v)`, `u < v`, in lexicographic order from a
//! ChaCha8 stream. The output therefore depends only on `(n, p, seed)`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{words_for, Graph, GraphError};

/// Samples G(n, p).
pub fn gnp_sample(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidProbability(p));
    }
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    let words = words_for(n);
    let mut rows = vec![0u64; n * words];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                rows[u * words + v / 64] |= 1 << (v % 64);
                rows[v * words + u / 64] |= 1 << (u % 64);
            }
        }
    }
    Ok(Graph::from_rows(n, rows))
}

/// Edge probability `c · N^(−alpha) · (ln N)^beta`, clamped to `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PFamily {
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl PFamily {
    pub fn new(c: f64, alpha: f64, beta: f64) -> Result<PFamily, GraphError> {
        if !(c.is_finite() && c > 0.0) {
            return Err(GraphError::InvalidFamily(format!("coefficient {c} must be positive")));
        }
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(GraphError::InvalidFamily("exponents must be finite".into()));
        }
        Ok(PFamily { c, alpha, beta })
    }

    /// `N^(−alpha)`, i.e. `c = 1` and no log factor.
    pub fn power(alpha: f64) -> PFamily {
        PFamily { c: 1.0, alpha, beta: 0.0 }
    }

    pub fn eval(&self, n: usize) -> f64 {
        let nf = n as f64;
        let p = self.c * nf.powf(-self.alpha) * nf.ln().powf(self.beta);
        if p.is_nan() {
            0.0
        } else {
            p.clamp(0.0, 1.0)
        }
    }
}

impl fmt::Display for PFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.c, self.alpha, self.beta)
    }
}

impl FromStr for PFamily {
    type Err = GraphError;

    /// Parses `"c,alpha,beta"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || GraphError::InvalidFamily(format!("expected `c,alpha,beta`, got `{s}`"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let nums: Vec<f64> = parts
            .iter()
            .map(|p| p.parse::<f64>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        PFamily::new(nums[0], nums[1], nums[2])
    }
}

/// Samples G(n, p(n)) for a size-dependent edge probability.
pub fn gnpn_sample(n: usize, fam: &PFamily, seed: u64) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidFamily("family sampling needs n >= 2".into()));
    }
    gnp_sample(n, fam.eval(n), seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use statrs::distribution::{Binomial, ChiSquared, ContinuousCDF, Discrete};

    #[test]
    fn degenerate_probabilities() {
        assert_eq!(gnp_sample(5, 0.0, 7).unwrap().edge_count(), 0);
        assert_eq!(gnp_sample(5, 1.0, 7).unwrap().edge_count(), 10);
        assert_eq!(gnp_sample(3, 1.5, 7), Err(GraphError::InvalidProbability(1.5)));
        assert!(gnp_sample(3, -0.1, 7).is_err());
    }

    #[test]
    fn edge_count_within_four_sigma() {
        let g = gnp_sample(1000, 0.5, 20240611).unwrap();
        let mean = 499_500.0 * 0.5;
        let sigma = (499_500.0f64 * 0.25).sqrt();
        assert!((g.edge_count() as f64 - mean).abs() < 4.0 * sigma);
    }

    #[test]
    fn same_seed_same_graph() {
        let a = gnp_sample(80, 0.3, 99).unwrap();
        let b = gnp_sample(80, 0.3, 99).unwrap();
        let c = gnp_sample(80, 0.3, 100).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn family_clamps_and_matches_constant_sampler() {
        let k = PFamily::new(1.0, 0.0, 0.0).unwrap();
        assert_eq!(k.eval(50), 1.0);
        assert_eq!(gnpn_sample(12, &k, 3).unwrap().edge_count(), 66);
        let fam = PFamily::new(2.0, 1.0, 0.5).unwrap();
        assert_eq!(gnpn_sample(40, &fam, 5).unwrap(), gnp_sample(40, fam.eval(40), 5).unwrap());
        for n in 2..200 {
            let p = PFamily::new(5.0, -1.0, 3.0).unwrap().eval(n);
            assert!((0.0..=1.0).contains(&p));
        }
        assert!(PFamily::new(0.0, 1.0, 0.0).is_err());
        assert_eq!("1,2.5,0".parse::<PFamily>().unwrap(), PFamily::power(2.5));
        assert!("1,2".parse::<PFamily>().is_err());
    }

    #[test]
    fn sparse_family_is_usually_empty() {
        // E[edges] = C(300,2) · 300^-2.5 ≈ 0.029, so Markov gives P(nonempty) ≤ 0.03.
        let fam = PFamily::power(2.5);
        let empty = (0..200u64)
            .filter(|&s| gnpn_sample(300, &fam, s).unwrap().edge_count() == 0)
            .count();
        assert!(empty as f64 / 200.0 >= 0.95, "empty in {empty}/200");
    }

    #[test]
    fn near_critical_family_has_isolated_vertices() {
        let fam = PFamily::power(1.25);
        let point = Graph::empty(1).unwrap();
        let hits = (0..100u64)
            .filter(|&s| {
                let g = gnpn_sample(500, &fam, s).unwrap();
                g.count_tree_components(&point).unwrap() >= 2
            })
            .count();
        assert!(hits >= 95, "{hits}/100 samples had two isolated vertices");
    }

    #[test]
    fn edge_counts_follow_binomial() {
        for n in 2..=6usize {
            let pairs = (n * (n - 1) / 2) as u64;
            let trials = 10_000u64;
            let mut observed = vec![0f64; pairs as usize + 1];
            for s in 0..trials {
                observed[gnp_sample(n, 0.5, s).unwrap().edge_count()] += 1.0;
            }
            let binom = Binomial::new(0.5, pairs).unwrap();
            // Merge sparse bins so every expected count is at least 5.
            let mut bins: Vec<(f64, f64)> = Vec::new();
            let (mut o_acc, mut e_acc) = (0.0, 0.0);
            for (k, o) in observed.iter().enumerate() {
                o_acc += o;
                e_acc += binom.pmf(k as u64) * trials as f64;
                if e_acc >= 5.0 {
                    bins.push((o_acc, e_acc));
                    o_acc = 0.0;
                    e_acc = 0.0;
                }
            }
            if let Some(last) = bins.last_mut() {
                last.0 += o_acc;
                last.1 += e_acc;
            }
            let stat: f64 = bins.iter().map(|(o, e)| (o - e) * (o - e) / e).sum();
            let dof = (bins.len() - 1) as f64;
            let p_value = 1.0 - ChiSquared::new(dof).unwrap().cdf(stat);
            assert!(p_value > 0.001, "n={n}: chi2={stat} dof={dof} p={p_value}");
        }
    }
}
