//! Sub-cubic simple graphs stored as per-vertex neighbor sequences.
//!
//! The neighbor order of each vertex is preserved exactly as supplied, so a
//! [`Graph`] doubles as a rotation system when it comes from an embedding.

use std::collections::VecDeque;

use arrayvec::ArrayVec;
use thiserror::Error;

/// Vertex label, 0-based.
pub type Vertex = usize;

/// Hard degree cap for every graph in the toolkit.
pub const MAX_DEGREE: usize = 3;

pub type Neighbors = ArrayVec<Vertex, MAX_DEGREE>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: Vertex },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: Vertex, v: Vertex },
    #[error("edge ({u}, {v}) raises the degree of vertex {vertex} above {MAX_DEGREE}")]
    DegreeExceeded { vertex: Vertex, u: Vertex, v: Vertex },
    #[error("adjacency is not symmetric: {v} lists {u} but not vice versa")]
    Asymmetric { u: Vertex, v: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adjacency: Vec<Neighbors>,
}

/// Three distinct vertices forming a path `arms.0 - center - arms.1`.
///
/// Every cycle through `center` uses exactly one of its cherries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cherry {
    pub center: Vertex,
    /// Stored with `arms.0 < arms.1`.
    pub arms: (Vertex, Vertex),
}

impl Cherry {
    pub fn vertices(&self) -> [Vertex; 3] {
        [self.arms.0, self.center, self.arms.1]
    }

    pub fn is_disjoint(&self, other: &Cherry) -> bool {
        let mine = self.vertices();
        other.vertices().iter().all(|v| !mine.contains(v))
    }
}

/// Result of [`Graph::delete_vertex`].
///
/// The vertex with the highest label moves into the hole left by the deleted
/// vertex; every other vertex keeps its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDeletion {
    pub graph: Graph,
    pub removed: Vertex,
    /// `original[new_label]` is the label the vertex had before deletion.
    pub original: Vec<Vertex>,
}

impl VertexDeletion {
    pub fn to_original(&self, labels: &[Vertex]) -> Vec<Vertex> {
        labels.iter().map(|&v| self.original[v]).collect()
    }
}

impl Graph {
    /// Graph with `vertex_count` isolated vertices.
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            adjacency: vec![Neighbors::new(); vertex_count],
        }
    }

    /// Builds a graph from an edge list. Each vertex's neighbor order follows
    /// edge insertion order.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from explicit neighbor sequences, keeping their order.
    pub fn from_adjacency(lists: &[Vec<Vertex>]) -> Result<Self, GraphError> {
        let n = lists.len();
        let mut adjacency = Vec::with_capacity(n);
        for (v, list) in lists.iter().enumerate() {
            let mut nbrs = Neighbors::new();
            for &u in list {
                if u >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: u,
                        vertex_count: n,
                    });
                }
                if u == v {
                    return Err(GraphError::Loop { vertex: v });
                }
                if nbrs.contains(&u) {
                    return Err(GraphError::DuplicateEdge { u: v, v: u });
                }
                if nbrs.try_push(u).is_err() {
                    return Err(GraphError::DegreeExceeded { vertex: v, u: v, v: u });
                }
            }
            adjacency.push(nbrs);
        }
        for (v, nbrs) in adjacency.iter().enumerate() {
            for &u in nbrs {
                if !adjacency[u].contains(&v) {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(Graph { adjacency })
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop { vertex: u });
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge { u, v });
        }
        for x in [u, v] {
            if self.degree(x) == MAX_DEGREE {
                return Err(GraphError::DegreeExceeded { vertex: x, u, v });
            }
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].contains(&v)
    }

    pub fn is_cubic(&self) -> bool {
        self.adjacency.iter().all(|a| a.len() == 3)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    /// All edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out: Vec<_> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(v, nbrs)| nbrs.iter().filter(move |&&u| v < u).map(move |&u| (v, u)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Position of `u` in the neighbor sequence of `v`.
    pub fn position(&self, v: Vertex, u: Vertex) -> Option<usize> {
        self.adjacency[v].iter().position(|&x| x == u)
    }

    pub fn delete_vertex(&self, v: Vertex) -> Result<VertexDeletion, GraphError> {
        let n = self.vertex_count();
        if v >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: n,
            });
        }
        let last = n - 1;
        let relabel = |x: Vertex| if x == last { v } else { x };
        let mut adjacency: Vec<Neighbors> = Vec::with_capacity(last);
        let mut original: Vec<Vertex> = Vec::with_capacity(last);
        for new in 0..last {
            let old = if new == v { last } else { new };
            original.push(old);
            adjacency.push(
                self.adjacency[old]
                    .iter()
                    .filter(|&&x| x != v)
                    .map(|&x| relabel(x))
                    .collect(),
            );
        }
        Ok(VertexDeletion {
            graph: Graph { adjacency },
            removed: v,
            original,
        })
    }

    /// One cherry per vertex per unordered pair of its neighbors, in
    /// lexicographic `(center, arms)` order.
    pub fn cherries(&self) -> Vec<Cherry> {
        let mut out = Vec::new();
        for (center, nbrs) in self.adjacency.iter().enumerate() {
            let mut sorted = nbrs.clone();
            sorted.sort_unstable();
            for i in 0..sorted.len() {
                for j in i + 1..sorted.len() {
                    out.push(Cherry {
                        center,
                        arms: (sorted[i], sorted[j]),
                    });
                }
            }
        }
        out
    }

    /// Component label per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// True iff the graph has at most one component.
    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Applies a relabeling where vertex `v` becomes `perm[v]`. Neighbor order
    /// is carried over, so rotations survive relabeling.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n, "permutation length mismatch");
        let mut adjacency = vec![Neighbors::new(); n];
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            adjacency[perm[v]] = nbrs.iter().map(|&u| perm[u]).collect();
        }
        Graph { adjacency }
    }

    /// Same graph with every vertex's neighbor order reversed (mirror embedding).
    pub fn reversed_rotation(&self) -> Graph {
        Graph {
            adjacency: self
                .adjacency
                .iter()
                .map(|a| a.iter().rev().copied().collect())
                .collect(),
        }
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<Vertex>> {
        self.adjacency.iter().map(|a| a.to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn k4_is_cubic_with_six_edges() {
        let g = fixtures::k4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_cubic());
    }

    #[test]
    fn petersen_shape() {
        let g = fixtures::petersen();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.is_cubic());
    }

    #[test]
    fn rejects_loop_duplicate_and_degree() {
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (2, 2)]),
            Err(GraphError::Loop { vertex: 2 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 1, v: 0 })
        );
        assert_eq!(
            Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]),
            Err(GraphError::DegreeExceeded { vertex: 0, u: 0, v: 4 })
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn adjacency_must_be_symmetric() {
        let err = Graph::from_adjacency(&[vec![1], vec![]]).unwrap_err();
        assert_eq!(err, GraphError::Asymmetric { u: 1, v: 0 });
    }

    #[test]
    fn insertion_order_is_kept() {
        let g = Graph::from_edges(4, [(0, 3), (0, 1), (0, 2)]).unwrap();
        assert_eq!(g.neighbors(0), &[3, 1, 2]);
    }

    #[test]
    fn k4_minus_vertex_is_triangle() {
        let g = fixtures::k4();
        for v in 0..4 {
            let d = g.delete_vertex(v).unwrap();
            assert_eq!(d.graph.vertex_count(), 3);
            assert_eq!(d.graph.edge_count(), 3);
            assert!((0..3).all(|x| d.graph.degree(x) == 2));
        }
        assert!(matches!(
            g.delete_vertex(7),
            Err(GraphError::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn petersen_minus_vertex() {
        let g = fixtures::petersen();
        for v in 0..10 {
            let d = g.delete_vertex(v).unwrap();
            assert_eq!(d.graph.vertex_count(), 9);
            assert_eq!(d.graph.edge_count(), 12);
            let deg2 = (0..9).filter(|&x| d.graph.degree(x) == 2).count();
            assert_eq!(deg2, 3);
        }
    }

    #[test]
    fn deletion_moves_last_vertex_into_hole() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let d = g.delete_vertex(1).unwrap();
        assert_eq!(d.original, vec![0, 3, 2]);
        // old 3 is new 1; old edges 2-3 and 3-0 survive
        assert_eq!(d.graph.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(d.to_original(&[2, 1, 0]), vec![2, 3, 0]);
    }

    #[test]
    fn cherry_counts() {
        assert_eq!(fixtures::k4().cherries().len(), 12);
        assert_eq!(triangle().cherries().len(), 3);
        assert_eq!(Graph::from_edges(2, [(0, 1)]).unwrap().cherries().len(), 0);
        let c = triangle().cherries();
        assert_eq!(
            c[0],
            Cherry {
                center: 0,
                arms: (1, 2)
            }
        );
    }

    #[test]
    fn connectivity() {
        assert!(fixtures::petersen().is_connected());
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two.is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    fn arb_subcubic() -> impl Strategy<Value = Graph> {
        (1usize..14, proptest::collection::vec((0usize..14, 0usize..14), 0..40)).prop_map(|(n, pairs)| {
            let mut g = Graph::empty(n);
            for (u, v) in pairs {
                let _ = g.add_edge(u % n, v % n);
            }
            g
        })
    }

    proptest! {
        #[test]
        fn edge_set_round_trips(g in arb_subcubic()) {
            let edges = g.edges();
            let h = Graph::from_edges(g.vertex_count(), edges.iter().copied()).unwrap();
            prop_assert_eq!(h.edges(), edges);
        }

        #[test]
        fn deletion_drops_incident_edges(g in arb_subcubic(), pick in 0usize..14) {
            let v = pick % g.vertex_count();
            let d = g.delete_vertex(v).unwrap();
            prop_assert_eq!(d.graph.edge_count(), g.edge_count() - g.degree(v));
            for (a, b) in d.graph.edges() {
                prop_assert!(g.has_edge(d.original[a], d.original[b]));
            }
        }

        #[test]
        fn cherry_count_is_sum_of_binomials(g in arb_subcubic()) {
            let expected: usize = (0..g.vertex_count())
                .map(|v| { let d = g.degree(v); d * d.saturating_sub(1) / 2 })
                .sum();
            prop_assert_eq!(g.cherries().len(), expected);
        }
    }
}
