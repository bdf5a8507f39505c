//! Hypohamiltonicity with certificates: `g` is not hamiltonian while every
//! `g - v` is.

use crate::graph::{Graph, Vertex};
use crate::solver::{
    find_hamiltonian_avoiding_with, find_hamiltonian_with, verify_cycle_avoiding, HamResult, SolverError, SolverOptions,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypoResult {
    Hamiltonian {
        cycle: Vec<Vertex>,
    },
    /// `g` is not hamiltonian and neither is `g - witness`.
    NotHypo {
        witness: Vertex,
        nodes: u64,
    },
    /// `certificates[v]` is a hamiltonian cycle of `g - v` in `g`'s labels.
    Hypohamiltonian {
        certificates: Vec<Vec<Vertex>>,
    },
}

impl HypoResult {
    pub fn tag(&self) -> &'static str {
        match self {
            HypoResult::Hamiltonian { .. } => "hamiltonian",
            HypoResult::NotHypo { .. } => "not-hypo",
            HypoResult::Hypohamiltonian { .. } => "hypohamiltonian",
        }
    }

    pub fn is_hypohamiltonian(&self) -> bool {
        matches!(self, HypoResult::Hypohamiltonian { .. })
    }
}

pub fn classify_hypohamiltonian(g: &Graph) -> Result<HypoResult, SolverError> {
    classify_hypohamiltonian_with(g, SolverOptions::default())
}

pub fn classify_hypohamiltonian_with(g: &Graph, options: SolverOptions) -> Result<HypoResult, SolverError> {
    match find_hamiltonian_with(g, options)? {
        HamResult::Hamiltonian { cycle, .. } => Ok(HypoResult::Hamiltonian { cycle }),
        HamResult::NonHamiltonian { .. } => classify_deletions(g, options),
    }
}

/// Deletion phase only. The caller must already hold a NonHamiltonian
/// verdict for `g` from the same solver.
pub fn classify_deletions(g: &Graph, options: SolverOptions) -> Result<HypoResult, SolverError> {
    let mut certificates = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        match find_hamiltonian_avoiding_with(g, v, options)? {
            HamResult::Hamiltonian { cycle, .. } => certificates.push(cycle),
            HamResult::NonHamiltonian { nodes } => return Ok(HypoResult::NotHypo { witness: v, nodes }),
        }
    }
    Ok(HypoResult::Hypohamiltonian { certificates })
}

/// Independent check of a certificate set: one verified cycle per vertex.
pub fn verify_certificates(g: &Graph, certificates: &[Vec<Vertex>]) -> bool {
    certificates.len() == g.vertex_count()
        && certificates
            .iter()
            .enumerate()
            .all(|(v, c)| verify_cycle_avoiding(g, v, c))
}
