//! Automorphism group order of 3-connected plane graphs.
//!
//! A 3-connected planar graph has a unique embedding up to reflection, so
//! every automorphism either preserves or reverses its rotation system. Such
//! a map is fixed by where one dart goes and whether orientation flips; we try
//! all `2 * 2m` choices for a fixed seed dart and count the ones that extend.

use std::collections::VecDeque;

use thiserror::Error;

use crate::embedding::PlanarEmbedding;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomorphismError {
    #[error("graph is not 3-connected; embedding automorphisms may differ from graph automorphisms")]
    NotThreeConnected,
}

/// Whether removing any set of at most two vertices leaves the graph
/// connected, and `n >= 4`.
pub fn is_three_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 4 || !g.is_connected() {
        return false;
    }
    let mut removed = vec![false; n];
    let mut seen = vec![false; n];
    let mut stack = Vec::with_capacity(n);
    let mut connected_without = |removed: &[bool]| -> bool {
        seen.iter_mut().for_each(|s| *s = false);
        let Some(start) = (0..n).find(|&v| !removed[v]) else {
            return true;
        };
        let total = removed.iter().filter(|&&r| !r).count();
        seen[start] = true;
        stack.clear();
        stack.push(start);
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !removed[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == total
    };
    for a in 0..n {
        removed[a] = true;
        for b in a + 1..n {
            removed[b] = true;
            let ok = connected_without(&removed);
            removed[b] = false;
            if !ok {
                return false;
            }
        }
        removed[a] = false;
    }
    true
}

/// Tries to extend "dart `(u, rot(u)[i])` maps to dart `(x, rot(x)[j])`" with
/// the given orientation into a rotation-system automorphism.
fn extends(g: &Graph, seed: (Vertex, usize), target: (Vertex, usize), reflect: bool) -> bool {
    let n = g.vertex_count();
    let mut image = vec![usize::MAX; n];
    let mut preimage = vec![usize::MAX; n];
    // per mapped vertex: (index in own rotation, aligned index in image rotation)
    let mut align = vec![(0usize, 0usize); n];
    let mut queue = VecDeque::new();
    let (u, i) = seed;
    let (x, j) = target;
    if g.degree(u) != g.degree(x) {
        return false;
    }
    image[u] = x;
    preimage[x] = u;
    align[u] = (i, j);
    queue.push_back(u);
    while let Some(u) = queue.pop_front() {
        let x = image[u];
        let d = g.degree(u);
        let (i, j) = align[u];
        for k in 0..d {
            let w = g.neighbors(u)[(i + k) % d];
            let jk = if reflect { (j + d - k % d) % d } else { (j + k) % d };
            let y = g.neighbors(x)[jk];
            if image[w] == usize::MAX {
                if preimage[y] != usize::MAX || g.degree(w) != g.degree(y) {
                    return false;
                }
                image[w] = y;
                preimage[y] = w;
                let wi = g.position(w, u).expect("symmetric");
                let yj = g.position(y, x).expect("symmetric");
                align[w] = (wi, yj);
                queue.push_back(w);
            } else if image[w] != y {
                return false;
            }
        }
    }
    if image.contains(&usize::MAX) {
        return false;
    }
    // every rotation must be carried onto the image rotation
    (0..n).all(|u| {
        let d = g.degree(u);
        let x = image[u];
        let (i, j) = align[u];
        (0..d).all(|k| {
            let jk = if reflect { (j + d - k % d) % d } else { (j + k) % d };
            image[g.neighbors(u)[(i + k) % d]] == g.neighbors(x)[jk]
        })
    })
}

pub fn automorphism_order(e: &PlanarEmbedding) -> Result<u64, AutomorphismError> {
    let g = e.graph();
    if !is_three_connected(g) {
        return Err(AutomorphismError::NotThreeConnected);
    }
    let seed = (0, 0);
    let mut count = 0;
    for x in 0..g.vertex_count() {
        for j in 0..g.degree(x) {
            for reflect in [false, true] {
                if extends(g, seed, (x, j), reflect) {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}
