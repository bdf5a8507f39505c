use std::collections::VecDeque;

use crate::graph::Graph;

/// Length of a shortest cycle, or `None` for a forest.
///
/// BFS from every vertex; a non-tree edge `(u, w)` met during the search from
/// `r` closes a walk of length `d(u) + d(w) + 1`, and the minimum over all
/// roots is the girth.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    let mut best = usize::MAX;
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // nothing shorter can come from deeper levels
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}
