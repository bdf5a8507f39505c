//! Rotation systems and face tracing.
//!
//! A [`PlanarEmbedding`] is a [`Graph`] whose neighbor order at each vertex is
//! read as the cyclic order of edges around that vertex. Faces are orbits of
//! the dart successor: dart `(u, v)` is followed by `(v, w)` where `w` is the
//! neighbor right after `u` in the rotation at `v`. Reversing this convention
//! reverses every face but leaves the multiset of face sizes unchanged.

use std::ops::Deref;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "rotation system is not a sphere embedding: V - E + F = {vertices} - {edges} + {faces}, \
     expected {expected} for {components} component(s)"
)]
pub struct NotSphereEmbedding {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub components: usize,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarEmbedding {
    graph: Graph,
}

impl PlanarEmbedding {
    /// Accepts `graph` as a rotation system if it passes the genus check
    /// `V - E + F = 2` on every component.
    pub fn new(graph: Graph) -> Result<Self, NotSphereEmbedding> {
        let faces = trace_faces(&graph).len();
        let (_, components) = graph.components();
        let (v, e) = (graph.vertex_count(), graph.edge_count());
        if v + faces != e + 2 * components {
            return Err(NotSphereEmbedding {
                vertices: v,
                edges: e,
                faces,
                components,
                expected: 2 * components,
            });
        }
        Ok(PlanarEmbedding { graph })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        self.graph.neighbors(v)
    }

    /// Faces as closed vertex walks.
    pub fn faces(&self) -> Vec<Vec<Vertex>> {
        trace_faces(&self.graph)
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// Mirror image: every rotation reversed.
    pub fn mirror(&self) -> PlanarEmbedding {
        PlanarEmbedding {
            graph: self.graph.reversed_rotation(),
        }
    }
}

impl Deref for PlanarEmbedding {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

/// Traces all dart orbits of `g` read as a rotation system. Each face is the
/// sequence of tail vertices of its darts; an isolated vertex forms one face
/// of length zero.
pub fn trace_faces(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut offset = Vec::with_capacity(n + 1);
    offset.push(0);
    for v in 0..n {
        offset.push(offset[v] + g.degree(v));
    }
    let darts = offset[n];
    let mut seen = vec![false; darts];
    let mut faces = Vec::new();
    for v in 0..n {
        if g.degree(v) == 0 {
            faces.push(Vec::new());
        }
    }
    for start_u in 0..n {
        for start_i in 0..g.degree(start_u) {
            if seen[offset[start_u] + start_i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut u, mut i) = (start_u, start_i);
            while !seen[offset[u] + i] {
                seen[offset[u] + i] = true;
                face.push(u);
                let v = g.neighbors(u)[i];
                let back = g.position(v, u).expect("symmetric adjacency");
                let j = (back + 1) % g.degree(v);
                u = v;
                i = j;
            }
            faces.push(face);
        }
    }
    faces
}
