//! Cyclic edge connectivity of cubic graphs, exact up to 5.
//!
//! # Method
//!
//! In a cubic graph, a vertex set `X` inducing a forest with `t` vertices and
//! `k` components has `3t - 2(t - k) = t + 2k` boundary edges. A forest side
//! that contains a cherry (`t >= 3`) therefore has at least 5 boundary edges,
//! so any cut of size at most 4 separating two disjoint cherries leaves a
//! cycle on both sides. Conversely both sides of a cycle-separating cut hold
//! a cycle and hence a cherry. So the minimum, over vertex-disjoint cherry
//! pairs, of the unit-capacity max-flow between them equals `min(cλ, 5)`.
//!
//! A side holding a cycle holds a cherry of that cycle centered on a vertex
//! of any feedback vertex set, so those cherries suffice as seeds. The
//! default scope goes further and pairs them only with five edge-disjoint
//! "anchor" cherries: a cut of size at most 4 leaves one anchor whole, and
//! that anchor's side then holds a cycle by the count above. This replaces
//! the quadratic pair loop by a linear one.
//!
//! When the minimum is 5, a 5-cut must still be shown to be
//! cycle-separating. An induced 5-cycle whose complement contains a cycle
//! settles it directly. Otherwise the same flow argument is repeated with
//! 4-vertex paths as seeds: a forest side holding one has at least 6
//! boundary edges, and a minimum cycle-separating 5-cut has connected sides
//! of minimum degree 2 with at least 5 vertices, each containing such a path.
//! Six edge-disjoint anchor paths play the anchors' role here.

use thiserror::Error;

use crate::graph::{Cherry, Graph, Vertex};
use crate::invariants::flow::UnitFlow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CyclicConnectivity {
    /// The minimum cycle-separating edge cut has exactly this size (at most 5).
    Exact(usize),
    /// No cycle-separating cut of size at most 5 exists.
    NoCycleSeparatingCut,
}

impl CyclicConnectivity {
    pub fn exact(self) -> Option<usize> {
        match self {
            CyclicConnectivity::Exact(c) => Some(c),
            CyclicConnectivity::NoCycleSeparatingCut => None,
        }
    }
}

impl std::fmt::Display for CyclicConnectivity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CyclicConnectivity::Exact(c) => write!(f, "{c}"),
            CyclicConnectivity::NoCycleSeparatingCut => f.write_str("none"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCut {
    pub value: CyclicConnectivity,
    /// A cycle-separating cut realizing `value`, edges as `(min, max)` sorted.
    pub witness: Option<Vec<(Vertex, Vertex)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {vertex} has degree {degree}; cyclic connectivity needs a cubic graph")]
    NotCubic { vertex: Vertex, degree: usize },
}

/// Which seed pairs the flows run between.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SeedScope {
    /// Five edge-disjoint anchor cherries against the cherries centered on a
    /// feedback vertex set. Falls back to [`SeedScope::FeedbackVertexSet`]
    /// when the graph has fewer than five edge-disjoint cherries.
    #[default]
    Anchored,
    /// All pairs of cherries centered on a greedy feedback vertex set.
    FeedbackVertexSet,
    /// All pairs of cherries.
    AllCherries,
}

pub fn cyclic_connectivity(g: &Graph) -> Result<CyclicConnectivity, CyclicError> {
    cyclic_cut(g, SeedScope::default()).map(|c| c.value)
}

pub fn cyclic_cut(g: &Graph, scope: SeedScope) -> Result<CyclicCut, CyclicError> {
    if !g.is_connected() {
        return Err(CyclicError::Disconnected);
    }
    if let Some(vertex) = (0..g.vertex_count()).find(|&v| g.degree(v) != 3) {
        return Err(CyclicError::NotCubic {
            vertex,
            degree: g.degree(vertex),
        });
    }

    let cherries = g.cherries();
    let seeds: Vec<[Vertex; 3]> = match scope {
        SeedScope::AllCherries => cherries.iter().map(Cherry::vertices).collect(),
        SeedScope::Anchored | SeedScope::FeedbackVertexSet => {
            let fvs = feedback_vertex_set(g);
            cherries
                .iter()
                .filter(|c| fvs[c.center])
                .map(Cherry::vertices)
                .collect()
        }
    };
    let anchors = match scope {
        SeedScope::Anchored => edge_disjoint(g, cherries.iter().map(Cherry::vertices), 5),
        _ => None,
    };

    let mut net = UnitFlow::new(g);
    let search = min_pair_flow(&mut net, anchors.as_deref(), &seeds, 4);
    if anchors.is_none() && !search.any_pair {
        return Ok(CyclicCut {
            value: CyclicConnectivity::NoCycleSeparatingCut,
            witness: None,
        });
    }
    if let Some((value, cut)) = search.best {
        return Ok(CyclicCut {
            value: CyclicConnectivity::Exact(value),
            witness: Some(cut),
        });
    }

    if let Some(cut) = separating_five_cycle(g) {
        return Ok(CyclicCut {
            value: CyclicConnectivity::Exact(5),
            witness: Some(cut),
        });
    }
    let paths = four_vertex_paths(g);
    let anchors = match scope {
        SeedScope::Anchored => edge_disjoint(g, paths.iter().copied(), 6),
        _ => None,
    };
    Ok(match min_pair_flow(&mut net, anchors.as_deref(), &paths, 5).best {
        Some((_, cut)) => CyclicCut {
            value: CyclicConnectivity::Exact(5),
            witness: Some(cut),
        },
        None => CyclicCut {
            value: CyclicConnectivity::NoCycleSeparatingCut,
            witness: None,
        },
    })
}

struct PairSearch {
    /// Smallest flow found that is at most the limit, with its cut.
    best: Option<(usize, Vec<(Vertex, Vertex)>)>,
    any_pair: bool,
}

/// Minimum capped flow over vertex-disjoint seed pairs.
///
/// Without anchors every pair of `seeds` is tried. With anchors, pairs are
/// (anchor, seed). Anchors are edge-disjoint, so a cut of size `c` splits at
/// most `c` of them; once `c + 1` anchors are done, some anchor lay entirely
/// on one side of any such cut. The loop stops as soon as the anchors done
/// exceed the best value found so far.
fn min_pair_flow<const K: usize>(
    net: &mut UnitFlow,
    anchors: Option<&[[Vertex; K]]>,
    seeds: &[[Vertex; K]],
    limit: usize,
) -> PairSearch {
    let mut bound = limit + 1;
    let mut result = PairSearch {
        best: None,
        any_pair: false,
    };
    let disjoint = |a: &[Vertex; K], b: &[Vertex; K]| a.iter().all(|v| !b.contains(v));
    let mut try_pair = |a: &[Vertex; K], b: &[Vertex; K], result: &mut PairSearch, bound: &mut usize| {
        result.any_pair = true;
        let cap = *bound - 1;
        let value = net.max_flow(a, b, cap);
        if value <= cap {
            *bound = value;
            result.best = Some((value, sorted(net.last_cut())));
        }
    };
    match anchors {
        Some(anchors) => {
            for (i, a) in anchors.iter().enumerate() {
                if i >= bound || bound <= 1 {
                    break;
                }
                for b in seeds.iter().filter(|b| disjoint(a, b)) {
                    try_pair(a, b, &mut result, &mut bound);
                    if bound <= 1 {
                        break;
                    }
                }
            }
        }
        None => {
            'outer: for i in 0..seeds.len() {
                for j in i + 1..seeds.len() {
                    if disjoint(&seeds[i], &seeds[j]) {
                        try_pair(&seeds[i], &seeds[j], &mut result, &mut bound);
                        if bound <= 1 {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    result
}

/// Greedily picks `count` seeds whose paths (consecutive entries) share no edge.
fn edge_disjoint<const K: usize, I>(g: &Graph, candidates: I, count: usize) -> Option<Vec<[Vertex; K]>>
where
    I: IntoIterator<Item = [Vertex; K]>,
{
    let mut used: Vec<[bool; 3]> = vec![[false; 3]; g.vertex_count()];
    let slot = |u: Vertex, v: Vertex| g.position(u, v).expect("seed follows edges");
    let mut picked = Vec::with_capacity(count);
    for seed in candidates {
        let free = seed.windows(2).all(|w| !used[w[0]][slot(w[0], w[1])]);
        if !free {
            continue;
        }
        for w in seed.windows(2) {
            used[w[0]][slot(w[0], w[1])] = true;
            used[w[1]][slot(w[1], w[0])] = true;
        }
        picked.push(seed);
        if picked.len() == count {
            return Some(picked);
        }
    }
    None
}

fn sorted(mut cut: Vec<(Vertex, Vertex)>) -> Vec<(Vertex, Vertex)> {
    cut.sort_unstable();
    cut
}

/// Greedy feedback vertex set: strip vertices of degree at most one, then
/// take the remaining vertex of highest degree (lowest label on ties).
pub fn feedback_vertex_set(g: &Graph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut chosen = vec![false; n];
    let mut remaining = n;
    let mut stack = Vec::new();
    let remove = |v: Vertex, alive: &mut Vec<bool>, deg: &mut Vec<usize>, stack: &mut Vec<Vertex>| {
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 {
                    stack.push(w);
                }
            }
        }
    };
    stack.extend((0..n).filter(|&v| deg[v] <= 1));
    loop {
        while let Some(v) = stack.pop() {
            if alive[v] {
                remove(v, &mut alive, &mut deg, &mut stack);
                remaining -= 1;
            }
        }
        if remaining == 0 {
            break;
        }
        let v = (0..n)
            .filter(|&v| alive[v])
            .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
            .expect("some vertex remains");
        chosen[v] = true;
        remove(v, &mut alive, &mut deg, &mut stack);
        remaining -= 1;
    }
    chosen
}

/// Whether the subgraph induced on the vertices with `keep[v]` has a cycle.
fn has_cycle(g: &Graph, keep: &[bool]) -> bool {
    let n = g.vertex_count();
    let vertices = keep.iter().filter(|&&k| k).count();
    let edges = g.edges().into_iter().filter(|&(u, v)| keep[u] && keep[v]).count();
    let mut seen = vec![false; n];
    let mut components = 0;
    for s in 0..n {
        if !keep[s] || seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if keep[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    edges + components > vertices
}

/// An induced 5-cycle whose complement still has a cycle, as its 5-edge cut.
fn separating_five_cycle(g: &Graph) -> Option<Vec<(Vertex, Vertex)>> {
    let n = g.vertex_count();
    let mut keep = vec![true; n];
    // cycles v0 v1 v2 v3 v4 with v0 the smallest label and v1 < v4
    for v0 in 0..n {
        for &v1 in g.neighbors(v0) {
            if v1 < v0 {
                continue;
            }
            for &v2 in g.neighbors(v1) {
                if v2 <= v0 || v2 == v1 {
                    continue;
                }
                for &v3 in g.neighbors(v2) {
                    if v3 <= v0 || v3 == v1 || v3 == v2 {
                        continue;
                    }
                    for &v4 in g.neighbors(v3) {
                        if v4 <= v1 || v4 == v2 || v4 == v3 || !g.has_edge(v4, v0) {
                            continue;
                        }
                        let cyc = [v0, v1, v2, v3, v4];
                        let chords = g.has_edge(v0, v2)
                            || g.has_edge(v0, v3)
                            || g.has_edge(v1, v3)
                            || g.has_edge(v1, v4)
                            || g.has_edge(v2, v4);
                        if chords {
                            continue;
                        }
                        cyc.iter().for_each(|&v| keep[v] = false);
                        let separates = has_cycle(g, &keep);
                        cyc.iter().for_each(|&v| keep[v] = true);
                        if separates {
                            let mut cut: Vec<(Vertex, Vertex)> = cyc
                                .iter()
                                .flat_map(|&v| {
                                    g.neighbors(v)
                                        .iter()
                                        .filter(|w| !cyc.contains(w))
                                        .map(move |&w| (v.min(w), v.max(w)))
                                })
                                .collect();
                            cut.sort_unstable();
                            return Some(cut);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Every path `a b c d` on four distinct vertices, once per vertex set and
/// middle edge.
fn four_vertex_paths(g: &Graph) -> Vec<[Vertex; 4]> {
    let mut paths = Vec::new();
    for (b, c) in g.edges() {
        for &a in g.neighbors(b) {
            if a == c {
                continue;
            }
            for &d in g.neighbors(c) {
                if d != b && d != a {
                    paths.push([a, b, c, d]);
                }
            }
        }
    }
    paths
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_values() {
        assert_eq!(
            cyclic_connectivity(&fixtures::k4()),
            Ok(CyclicConnectivity::NoCycleSeparatingCut)
        );
        assert_eq!(
            cyclic_connectivity(&fixtures::prism()),
            Ok(CyclicConnectivity::Exact(3))
        );
        assert_eq!(cyclic_connectivity(&fixtures::cube()), Ok(CyclicConnectivity::Exact(4)));
        assert_eq!(
            cyclic_connectivity(&fixtures::dodecahedron()),
            Ok(CyclicConnectivity::Exact(5))
        );
        assert_eq!(
            cyclic_connectivity(&fixtures::petersen()),
            Ok(CyclicConnectivity::Exact(5))
        );
    }

    #[test]
    fn prism_witness_is_the_matching() {
        let cut = cyclic_cut(&fixtures::prism(), SeedScope::AllCherries).unwrap();
        assert_eq!(cut.witness, Some(vec![(0, 3), (1, 4), (2, 5)]));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            cyclic_connectivity(&fixtures::cycle(5)),
            Err(CyclicError::NotCubic { vertex: 0, degree: 2 })
        );
        let two_k4 = Graph::from_edges(
            8,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 5),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 7),
                (6, 7),
            ],
        )
        .unwrap();
        assert_eq!(cyclic_connectivity(&two_k4), Err(CyclicError::Disconnected));
    }

    #[test]
    fn k33_has_no_two_disjoint_cycles() {
        let g = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert_eq!(cyclic_connectivity(&g), Ok(CyclicConnectivity::NoCycleSeparatingCut));
    }

    #[test]
    fn fvs_breaks_every_cycle() {
        for g in [fixtures::dodecahedron().into_graph(), fixtures::petersen()] {
            let fvs = feedback_vertex_set(&g);
            let keep: Vec<bool> = fvs.iter().map(|&f| !f).collect();
            assert!(!has_cycle(&g, &keep));
        }
    }
}
