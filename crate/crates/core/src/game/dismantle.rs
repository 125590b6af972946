use crate::graph::Graph;

/// Whether repeatedly deleting a vertex `u` with `N[u] ⊆ N[w]` for some
/// other vertex `w` reduces `g` to a single vertex. Such graphs are exactly
/// the ones where one cop wins.
pub fn is_dismantlable(g: &Graph) -> bool {
    let n = g.vertex_count();
    let words = g.row_words();
    let mut closed: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut row = g.row(v).to_vec();
            row[v / 64] |= 1 << (v % 64);
            row
        })
        .collect();
    let mut alive: Vec<bool> = vec![true; n];
    let mut left = n;
    // Deleting a dominated vertex never destroys another domination, so a
    // greedy sweep suffices.
    loop {
        if left <= 1 {
            return true;
        }
        let dominated = (0..n).filter(|&u| alive[u]).find(|&u| {
            (0..n).any(|w| {
                w != u && alive[w] && (0..words).all(|i| closed[u][i] & !closed[w][i] == 0)
            })
        });
        let Some(u) = dominated else {
            return false;
        };
        alive[u] = false;
        left -= 1;
        for row in closed.iter_mut() {
            row[u / 64] &= !(1 << (u % 64));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn small_examples() {
        assert!(is_dismantlable(&named("p4").unwrap()));
        assert!(!is_dismantlable(&named("c4").unwrap()));
        assert!(is_dismantlable(&named("d4").unwrap()));
        assert!(!is_dismantlable(&named("petersen").unwrap()));
        assert!(is_dismantlable(&Graph::complete(1).unwrap()));
        assert!(!is_dismantlable(&Graph::empty(2).unwrap()));
    }

    #[test]
    fn random_trees_dismantle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=8 {
            for _ in 0..50 {
                let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
                assert!(is_dismantlable(&Graph::from_edges(n, edges).unwrap()));
            }
        }
    }
}
