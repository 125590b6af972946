use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::logic::{extension_axiom, Formula, Sentence, Structure};

use super::LabError;

pub const MAX_EXACT_N: usize = 7;

/// Graph on at most 8 vertices with one adjacency byte per vertex.
struct MaskGraph {
    n: usize,
    adj: [u8; 8],
}

impl MaskGraph {
    fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> MaskGraph {
        let mut adj = [0u8; 8];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        MaskGraph { n, adj }
    }
}

impl Structure for MaskGraph {
    fn size(&self) -> usize {
        self.n
    }

    #[inline]
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }
}

/// Fraction of the `2^C(n,2)` labeled graphs on `n` vertices satisfying `f`.
pub fn exact_mu(f: &Formula, n: usize) -> Result<Ratio<u64>, LabError> {
    if n == 0 {
        return Err(LabError::BadParameter("n must be at least 1".into()));
    }
    if n > MAX_EXACT_N {
        return Err(LabError::ExactTooLarge(n));
    }
    let sentence = Sentence::new(f.clone())?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    let hits = (0..total)
        .into_par_iter()
        .filter(|&mask| sentence.holds(&MaskGraph::from_mask(n, &pairs, mask)))
        .count() as u64;
    Ok(Ratio::new(hits, total))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EaBound {
    /// `μ_k(¬EA_{m,n})`.
    pub exact: Ratio<u64>,
    /// `k^n · (1 − 2^(−n))^(k−n)`.
    pub bound: Ratio<u64>,
    pub holds: bool,
}

/// Compares the exact failure probability of `EA_{m,n}` on `k` vertices
/// with the union bound over `n`-tuples.
pub fn verify_ea_bound(m: usize, n: usize, k: usize) -> Result<EaBound, LabError> {
    if !(m <= n && (1..=3).contains(&n) && n < k && k <= MAX_EXACT_N) {
        return Err(LabError::BadParameter(format!(
            "need m <= n <= 3 and n < k <= {MAX_EXACT_N}, got m={m} n={n} k={k}"
        )));
    }
    let exact = Ratio::from_integer(1) - exact_mu(&extension_axiom(m, n)?, k)?;
    let (kk, nn) = (k as u64, n as u32);
    let gap = (k - n) as u32;
    let bound = Ratio::new(kk.pow(nn) * ((1u64 << n) - 1).pow(gap), 1u64 << (n as u32 * gap));
    Ok(EaBound { holds: exact <= bound, exact, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_sentence;
    use crate::testutil::all_graphs;

    #[test]
    fn small_cases() {
        let empty = parse_sentence("forall x forall y !E(x,y)").unwrap();
        assert_eq!(exact_mu(&empty, 2).unwrap(), Ratio::new(1, 2));
        assert_eq!(exact_mu(&extension_axiom(0, 1).unwrap(), 3).unwrap(), Ratio::new(4, 8));
        let mu1 = exact_mu(&extension_axiom(1, 2).unwrap(), 1).unwrap();
        assert!(mu1 == Ratio::from_integer(0) || mu1 == Ratio::from_integer(1));
        assert!(matches!(exact_mu(&empty, 8), Err(LabError::ExactTooLarge(8))));
    }

    #[test]
    fn mask_graphs_agree_with_graphs() {
        let f = parse_sentence("forall x exists y exists z (E(x,y) & E(y,z) & !E(x,z) & !(x=z))").unwrap();
        let s = Sentence::new(f.clone()).unwrap();
        let direct = all_graphs(5).filter(|g| s.holds(g)).count() as u64;
        assert_eq!(exact_mu(&f, 5).unwrap(), Ratio::new(direct, 1024));
    }

    #[test]
    fn bound_examples() {
        let b = verify_ea_bound(0, 1, 3).unwrap();
        assert_eq!(b.exact, Ratio::new(1, 2));
        assert_eq!(b.bound, Ratio::new(3, 4));
        assert!(b.holds);
        let b = verify_ea_bound(1, 2, 6).unwrap();
        assert_eq!(b.bound, Ratio::new(36 * 81, 256));
        assert!(b.holds);
        assert!(verify_ea_bound(2, 1, 4).is_err());
        assert!(verify_ea_bound(1, 3, 3).is_err());
    }
}
