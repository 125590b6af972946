//! Exhaustive isomorphism test for graphs of at most 8 vertices.

use super::Graph;

pub(super) fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, 0, &mut map, &mut used)
}

fn extend(a: &Graph, b: &Graph, next: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    let n = a.vertex_count();
    if next == n {
        return true;
    }
    for cand in 0..n {
        if used[cand] || a.degree(next) != b.degree(cand) {
            continue;
        }
        let consistent = (0..next).all(|u| a.has_edge(u, next) == b.has_edge(map[u], cand));
        if !consistent {
            continue;
        }
        map[next] = cand;
        used[cand] = true;
        if extend(a, b, next + 1, map, used) {
            return true;
        }
        used[cand] = false;
    }
    false
}
