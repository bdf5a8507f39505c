//! Grinberg's necessary condition for hamiltonian plane graphs.
//!
//! A hamiltonian cycle splits the faces into an inside set and an outside
//! set with equal `sum (size - 2)`. If no proper nonempty sub-multiset of the
//! faces reaches half the total, the graph cannot be hamiltonian.

use crate::embedding::PlanarEmbedding;
use crate::invariants::faces::{faces, FaceVector};

/// True iff some proper nonempty sub-multiset of faces has
/// `sum (size - 2)` equal to half the total.
pub fn grinberg_feasible(fv: &FaceVector) -> bool {
    let total: usize = fv.iter().map(|(k, c)| k.saturating_sub(2) * c).sum();
    if total % 2 == 1 {
        return false;
    }
    if total == 0 {
        // every face has weight zero; any single face works if there are two
        return fv.face_count() >= 2;
    }
    let target = total / 2;
    // bounded knapsack by binary splitting of each size's multiplicity
    let mut reachable = vec![false; target + 1];
    reachable[0] = true;
    for (k, count) in fv.iter() {
        let weight = k.saturating_sub(2);
        if weight == 0 {
            continue;
        }
        let mut left = count;
        let mut chunk = 1;
        while left > 0 {
            let take = chunk.min(left);
            let w = weight * take;
            for s in (w..=target).rev() {
                if reachable[s - w] {
                    reachable[s] = true;
                }
            }
            left -= take;
            chunk *= 2;
        }
    }
    reachable[target]
}

/// True when the face sizes alone rule out a hamiltonian cycle.
pub fn grinberg_certifies_nonhamiltonian(e: &PlanarEmbedding) -> bool {
    !grinberg_feasible(&faces(e))
}
