//! Hamiltonian cycle decision for sub-cubic graphs.
//!
//! [`find_hamiltonian`] is the production solver: a complete propagating
//! backtrack search (see [`search`]) whose certificates are always checked
//! with [`verify_cycle`] before they are returned. [`reference`] holds a
//! deliberately naive oracle used for cross-checking.

pub mod reference;
pub mod search;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub use reference::{reference_hamiltonian_cycle, reference_is_hamiltonian};
pub use search::{EdgeState, SolverOptions, TieBreak};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamResult {
    Hamiltonian { cycle: Vec<Vertex>, nodes: u64 },
    NonHamiltonian { nodes: u64 },
}

impl HamResult {
    pub fn is_hamiltonian(&self) -> bool {
        matches!(self, HamResult::Hamiltonian { .. })
    }

    pub fn nodes(&self) -> u64 {
        match self {
            HamResult::Hamiltonian { nodes, .. } | HamResult::NonHamiltonian { nodes } => *nodes,
        }
    }

    pub fn cycle(&self) -> Option<&[Vertex]> {
        match self {
            HamResult::Hamiltonian { cycle, .. } => Some(cycle),
            HamResult::NonHamiltonian { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph on {0} vertices is too small; at least 3 are needed")]
    TooSmall(usize),
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
    #[error("internal error: solver produced an invalid cycle {0:?}")]
    CertificateRejected(Vec<Vertex>),
}

/// True iff `cycle` lists every vertex exactly once and cyclically
/// consecutive entries are adjacent.
pub fn verify_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    let n = g.vertex_count();
    if n < 3 || cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

pub fn find_hamiltonian(g: &Graph) -> Result<HamResult, SolverError> {
    find_hamiltonian_with(g, SolverOptions::default())
}

pub fn find_hamiltonian_with(g: &Graph, options: SolverOptions) -> Result<HamResult, SolverError> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(SolverError::TooSmall(n));
    }
    if !g.is_connected() {
        return Ok(HamResult::NonHamiltonian { nodes: 0 });
    }
    let mut search = search::Search::new(g, options);
    match search.run() {
        Some(cycle) => {
            if !verify_cycle(g, &cycle) {
                return Err(SolverError::CertificateRejected(cycle));
            }
            Ok(HamResult::Hamiltonian {
                cycle,
                nodes: search.nodes,
            })
        }
        None => Ok(HamResult::NonHamiltonian { nodes: search.nodes }),
    }
}

/// Decides hamiltonicity of `g - v`; a returned cycle uses `g`'s labels.
pub fn find_hamiltonian_avoiding(g: &Graph, v: Vertex) -> Result<HamResult, SolverError> {
    find_hamiltonian_avoiding_with(g, v, SolverOptions::default())
}

pub fn find_hamiltonian_avoiding_with(g: &Graph, v: Vertex, options: SolverOptions) -> Result<HamResult, SolverError> {
    let deletion = g.delete_vertex(v).map_err(|_| SolverError::VertexOutOfRange {
        vertex: v,
        vertex_count: g.vertex_count(),
    })?;
    Ok(match find_hamiltonian_with(&deletion.graph, options)? {
        HamResult::Hamiltonian { cycle, nodes } => HamResult::Hamiltonian {
            cycle: deletion.to_original(&cycle),
            nodes,
        },
        other => other,
    })
}

/// Checks a cycle claimed for `g - v`, given in `g`'s labels.
pub fn verify_cycle_avoiding(g: &Graph, v: Vertex, cycle: &[Vertex]) -> bool {
    let n = g.vertex_count();
    if v >= n || n < 4 || cycle.len() != n - 1 || cycle.contains(&v) {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in cycle {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
}
