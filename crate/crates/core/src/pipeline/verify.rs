//! Independent re-decision of primary results.
//!
//! Small graphs go to the plain backtracking oracle; larger ones to a second
//! run of the main solver with the tie-break reversed, which explores a
//! different search tree.

use crate::graph::{Graph, Vertex};
use crate::hypo::{verify_certificates, HypoResult};
use crate::solver::{find_hamiltonian_with, reference_is_hamiltonian, verify_cycle, SolverOptions, TieBreak};

/// Largest order handed to the exponential reference oracle.
pub const REFERENCE_LIMIT: usize = 24;

pub fn independent_is_hamiltonian(g: &Graph) -> bool {
    if g.vertex_count() <= REFERENCE_LIMIT {
        return reference_is_hamiltonian(g);
    }
    let options = SolverOptions {
        tie_break: TieBreak::HighestIndex,
        ..SolverOptions::default()
    };
    find_hamiltonian_with(g, options).is_ok_and(|r| r.is_hamiltonian())
}

fn independent_avoiding(g: &Graph, v: Vertex) -> bool {
    g.delete_vertex(v).is_ok_and(|d| independent_is_hamiltonian(&d.graph))
}

/// Whether the independent route agrees with `primary`.
pub fn cross_verify(g: &Graph, primary: &HypoResult) -> bool {
    match primary {
        HypoResult::Hamiltonian { cycle } => verify_cycle(g, cycle) && independent_is_hamiltonian(g),
        HypoResult::NotHypo { witness, .. } => !independent_is_hamiltonian(g) && !independent_avoiding(g, *witness),
        HypoResult::Hypohamiltonian { certificates } => {
            verify_certificates(g, certificates)
                && !independent_is_hamiltonian(g)
                && (0..g.vertex_count()).all(|v| independent_avoiding(g, v))
        }
    }
}

/// Deterministic Bernoulli(`rate`) draw keyed by input ordinal.
pub fn sampled(ordinal: u64, rate: f64) -> bool {
    if rate >= 1.0 {
        return true;
    }
    if rate <= 0.0 {
        return false;
    }
    let unit = (splitmix64(ordinal) >> 11) as f64 / (1u64 << 53) as f64;
    unit < rate
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
