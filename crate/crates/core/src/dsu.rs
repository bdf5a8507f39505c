//! Union-find over a fixed universe `0..len`, with undo.
//!
//! Union by rank and no path compression, so every union can be reverted in
//! O(1) by the backtracking solver.

#[derive(Debug, Clone)]
pub struct DisjointSetForest {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

/// Record of one successful union, sufficient to undo it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Union {
    pub child: u32,
    pub root: u32,
    rank_bumped: bool,
}

impl DisjointSetForest {
    pub fn new(len: usize) -> Self {
        DisjointSetForest {
            parent: (0..len as u32).collect(),
            rank: vec![0; len],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    pub fn same_set(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Merges the sets of `a` and `b`. Returns `None` if they were already one set.
    pub fn union(&mut self, a: usize, b: usize) -> Option<Union> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (child, root) = if self.rank[ra] < self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        let rank_bumped = self.rank[child] == self.rank[root];
        self.parent[child] = root as u32;
        if rank_bumped {
            self.rank[root] += 1;
        }
        Some(Union {
            child: child as u32,
            root: root as u32,
            rank_bumped,
        })
    }

    /// Reverts `u`. Unions must be undone in reverse order of application.
    pub fn undo(&mut self, u: Union) {
        debug_assert_eq!(self.parent[u.child as usize], u.root);
        self.parent[u.child as usize] = u.child;
        if u.rank_bumped {
            self.rank[u.root as usize] -= 1;
        }
    }
}
