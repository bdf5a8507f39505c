//! Small named graphs used by tests, demos and the `fixtures` subcommand.
//!
//! Planar fixtures get their rotation system from a straight-line drawing:
//! neighbors are ordered by angle around each vertex.

use std::f64::consts::TAU;

use crate::embedding::PlanarEmbedding;
use crate::graph::{Graph, Vertex};

fn embed_by_angle(points: &[(f64, f64)], edges: &[(Vertex, Vertex)]) -> PlanarEmbedding {
    let g = Graph::from_edges(points.len(), edges.iter().copied()).expect("fixture edges are valid");
    let lists: Vec<Vec<Vertex>> = (0..points.len())
        .map(|v| {
            let (x, y) = points[v];
            let mut nbrs = g.neighbors(v).to_vec();
            nbrs.sort_by(|&a, &b| {
                let ta = (points[a].1 - y).atan2(points[a].0 - x);
                let tb = (points[b].1 - y).atan2(points[b].0 - x);
                ta.total_cmp(&tb)
            });
            nbrs
        })
        .collect();
    let g = Graph::from_adjacency(&lists).expect("reordering keeps validity");
    PlanarEmbedding::new(g).expect("straight-line drawing is planar")
}

fn ring(count: usize, radius: f64, phase: f64) -> impl Iterator<Item = (f64, f64)> {
    (0..count).map(move |k| {
        let t = phase + TAU * k as f64 / count as f64;
        (radius * t.cos(), radius * t.sin())
    })
}

pub fn k4() -> PlanarEmbedding {
    let mut pts: Vec<_> = ring(3, 2.0, 0.0).collect();
    pts.push((0.0, 0.0));
    embed_by_angle(&pts, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Triangular prism: triangles `0 1 2` and `3 4 5`, spokes `i - i+3`.
pub fn prism() -> PlanarEmbedding {
    let pts: Vec<_> = ring(3, 2.0, 0.0).chain(ring(3, 1.0, 0.0)).collect();
    let mut edges = Vec::new();
    for i in 0..3 {
        edges.push((i, (i + 1) % 3));
        edges.push((3 + i, 3 + (i + 1) % 3));
        edges.push((i, i + 3));
    }
    embed_by_angle(&pts, &edges)
}

pub fn cube() -> PlanarEmbedding {
    let pts: Vec<_> = ring(4, 2.0, 0.0).chain(ring(4, 1.0, 0.0)).collect();
    let mut edges = Vec::new();
    for i in 0..4 {
        edges.push((i, (i + 1) % 4));
        edges.push((4 + i, 4 + (i + 1) % 4));
        edges.push((i, i + 4));
    }
    embed_by_angle(&pts, &edges)
}

/// Schlegel diagram: outer 5-ring `0..5`, middle 10-ring `5..15`, inner
/// 5-ring `15..20`.
pub fn dodecahedron() -> PlanarEmbedding {
    let pts: Vec<_> = ring(5, 3.0, 0.0)
        .chain(ring(10, 2.0, 0.0))
        .chain(ring(5, 1.0, TAU / 10.0))
        .collect();
    let mut edges = Vec::new();
    for k in 0..5 {
        edges.push((k, (k + 1) % 5));
        edges.push((k, 5 + 2 * k));
        edges.push((5 + 2 * k + 1, 15 + k));
        edges.push((15 + k, 15 + (k + 1) % 5));
    }
    for j in 0..10 {
        edges.push((5 + j, 5 + (j + 1) % 10));
    }
    embed_by_angle(&pts, &edges)
}

/// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("petersen edges are valid")
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}

/// Fixture set emitted by the CLI.
pub enum Fixture {
    Planar(PlanarEmbedding),
    /// No sphere embedding exists, so only the text format can carry it.
    Abstract(Graph),
}

impl Fixture {
    pub fn graph(&self) -> &Graph {
        match self {
            Fixture::Planar(e) => e.graph(),
            Fixture::Abstract(g) => g,
        }
    }
}

pub fn named() -> Vec<(&'static str, Fixture)> {
    vec![
        ("k4", Fixture::Planar(k4())),
        ("prism", Fixture::Planar(prism())),
        ("cube", Fixture::Planar(cube())),
        ("dodecahedron", Fixture::Planar(dodecahedron())),
        ("petersen", Fixture::Abstract(petersen())),
    ]
}
