use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::embedding::{NotSphereEmbedding, PlanarEmbedding};
use crate::graph::Graph;

/// Multiset of face sizes, written multiplicatively: `5^30 7^5 8^4 11`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct FaceVector {
    counts: BTreeMap<usize, usize>,
}

impl FaceVector {
    pub fn from_sizes<I: IntoIterator<Item = usize>>(sizes: I) -> Self {
        let mut counts = BTreeMap::new();
        for k in sizes {
            *counts.entry(k).or_insert(0) += 1;
        }
        FaceVector { counts }
    }

    pub fn from_counts<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut counts = BTreeMap::new();
        for (k, c) in pairs {
            if c > 0 {
                *counts.entry(k).or_insert(0) += c;
            }
        }
        FaceVector { counts }
    }

    /// Number of faces of size `k`.
    pub fn count(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// `(size, count)` pairs in increasing size order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn face_count(&self) -> usize {
        self.counts.values().sum()
    }

    /// Sum of all face sizes, which is twice the edge count.
    pub fn size_sum(&self) -> usize {
        self.iter().map(|(k, c)| k * c).sum()
    }

    /// Checks the counting identities of a connected plane graph; for cubic
    /// graphs also `sum (k-2) f_k = 2 (n - 2)`.
    pub fn check_identities(&self, g: &Graph) -> Result<(), String> {
        let (n, m) = (g.vertex_count() as i64, g.edge_count() as i64);
        let size_sum = self.size_sum() as i64;
        if size_sum != 2 * m {
            return Err(format!("face sizes sum to {size_sum}, expected 2m = {}", 2 * m));
        }
        let f = self.face_count() as i64;
        if f != m - n + 2 {
            return Err(format!("{f} faces, expected m - n + 2 = {}", m - n + 2));
        }
        if g.is_cubic() {
            let excess: i64 = self.iter().map(|(k, c)| (k as i64 - 2) * c as i64).sum();
            if excess != 2 * (n - 2) {
                return Err(format!("sum (k-2) f_k = {excess}, expected 2(n-2) = {}", 2 * (n - 2)));
            }
        }
        Ok(())
    }
}

impl fmt::Display for FaceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if c == 1 {
                write!(f, "{k}")?;
            } else {
                write!(f, "{k}^{c}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FaceVector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut pairs = Vec::new();
        for tok in s.split_whitespace() {
            let (k, c) = match tok.split_once('^') {
                Some((k, c)) => (k, c),
                None => (tok, "1"),
            };
            let k = k.parse().map_err(|_| format!("bad face size in {tok:?}"))?;
            let c = c.parse().map_err(|_| format!("bad face count in {tok:?}"))?;
            pairs.push((k, c));
        }
        Ok(FaceVector::from_counts(pairs))
    }
}

pub fn faces(e: &PlanarEmbedding) -> FaceVector {
    FaceVector::from_sizes(e.faces().iter().map(Vec::len))
}

/// Face vector of a rotation system that has not been validated yet.
pub fn faces_of_rotation(g: &Graph) -> Result<FaceVector, NotSphereEmbedding> {
    PlanarEmbedding::new(g.clone()).map(|e| faces(&e))
}
