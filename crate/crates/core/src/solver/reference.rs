//! Plain vertex-sequence backtracking, no propagation. Exponential; meant
//! for small graphs and for cross-checking the main solver.

use crate::graph::{Graph, Vertex};

pub fn reference_hamiltonian_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    if n < 3 {
        return None;
    }
    let mut path = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    path.push(0);
    visited[0] = true;
    extend(g, &mut path, &mut visited).then_some(path)
}

fn extend(g: &Graph, path: &mut Vec<Vertex>, visited: &mut [bool]) -> bool {
    let last = *path.last().expect("path starts nonempty");
    if path.len() == g.vertex_count() {
        return g.has_edge(last, path[0]);
    }
    for &w in g.neighbors(last) {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        path.push(w);
        if extend(g, path, visited) {
            return true;
        }
        path.pop();
        visited[w] = false;
    }
    false
}

pub fn reference_is_hamiltonian(g: &Graph) -> bool {
    reference_hamiltonian_cycle(g).is_some()
}
