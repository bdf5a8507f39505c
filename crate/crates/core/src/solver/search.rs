//! Propagating backtrack search over edge states.
//!
//! Every edge is Unknown, Required or Excluded. Required edges always form
//! vertex-disjoint simple paths ("segments"), tracked with an undoable
//! union-find whose roots carry the two segment endpoints and the segment's
//! vertex count. Propagation rules, applied to a fixpoint:
//!
//! * two Required edges at a vertex exclude the rest;
//! * a vertex left with exactly two non-Excluded edges requires both;
//! * an Unknown edge joining the two ends of one segment is Excluded, unless
//!   the segment already holds every vertex, in which case it closes the
//!   hamiltonian cycle;
//! * fewer than two non-Excluded edges at a vertex is a contradiction.

use arrayvec::ArrayVec;

use crate::dsu::{DisjointSetForest, Union};
use crate::graph::{Graph, Vertex, MAX_DEGREE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeState {
    Unknown,
    Required,
    Excluded,
}

/// How ties between equally scored branching edges are broken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LowestIndex,
    HighestIndex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    pub tie_break: TieBreak,
    /// Run the connectivity prune every this many search nodes; 0 disables it.
    pub connectivity_interval: u64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tie_break: TieBreak::LowestIndex,
            connectivity_interval: 64,
        }
    }
}

struct Contradiction;

type Step = Result<(), Contradiction>;

enum Change {
    Edge {
        e: u32,
        prev: EdgeState,
    },
    Union {
        union: Union,
        prev_ends: (u32, u32),
        prev_size: u32,
    },
}

pub(crate) struct Search {
    n: usize,
    ends: Vec<(u32, u32)>,
    incident: Vec<ArrayVec<u32, MAX_DEGREE>>,
    state: Vec<EdgeState>,
    required: Vec<u8>,
    available: Vec<u8>,
    segments: DisjointSetForest,
    seg_ends: Vec<(u32, u32)>,
    seg_size: Vec<u32>,
    trail: Vec<Change>,
    queue: Vec<u32>,
    solved: bool,
    pub(crate) nodes: u64,
    options: SolverOptions,
    scratch: Vec<u32>,
    mark: Vec<bool>,
}

impl Search {
    pub(crate) fn new(g: &Graph, options: SolverOptions) -> Self {
        let n = g.vertex_count();
        let ends: Vec<(u32, u32)> = g.edges().into_iter().map(|(u, v)| (u as u32, v as u32)).collect();
        let mut incident = vec![ArrayVec::new(); n];
        for (e, &(u, v)) in ends.iter().enumerate() {
            incident[u as usize].push(e as u32);
            incident[v as usize].push(e as u32);
        }
        Search {
            n,
            state: vec![EdgeState::Unknown; ends.len()],
            required: vec![0; n],
            available: (0..n).map(|v| g.degree(v) as u8).collect(),
            segments: DisjointSetForest::new(n),
            seg_ends: (0..n as u32).map(|v| (v, v)).collect(),
            seg_size: vec![1; n],
            ends,
            incident,
            trail: Vec::new(),
            queue: Vec::with_capacity(4 * n),
            solved: false,
            nodes: 0,
            options,
            scratch: Vec::with_capacity(n),
            mark: vec![false; n],
        }
    }

    fn other(&self, e: u32, v: u32) -> u32 {
        let (a, b) = self.ends[e as usize];
        if a == v {
            b
        } else {
            a
        }
    }

    fn edge_between(&self, a: u32, b: u32) -> Option<u32> {
        self.incident[a as usize]
            .iter()
            .copied()
            .find(|&e| self.other(e, a) == b)
    }

    fn set_required(&mut self, e: u32) -> Step {
        match self.state[e as usize] {
            EdgeState::Required => return Ok(()),
            EdgeState::Excluded => return Err(Contradiction),
            EdgeState::Unknown => {}
        }
        let (u, v) = self.ends[e as usize];
        if self.required[u as usize] == 2 || self.required[v as usize] == 2 {
            return Err(Contradiction);
        }
        let ru = self.segments.find(u as usize);
        let rv = self.segments.find(v as usize);
        if ru == rv {
            // closes a cycle; only acceptable as the final hamiltonian cycle
            if self.seg_size[ru] as usize != self.n {
                return Err(Contradiction);
            }
            self.trail.push(Change::Edge {
                e,
                prev: EdgeState::Unknown,
            });
            self.state[e as usize] = EdgeState::Required;
            self.required[u as usize] += 1;
            self.required[v as usize] += 1;
            self.solved = true;
            return Ok(());
        }
        self.trail.push(Change::Edge {
            e,
            prev: EdgeState::Unknown,
        });
        self.state[e as usize] = EdgeState::Required;
        self.required[u as usize] += 1;
        self.required[v as usize] += 1;

        let end_u = far_end(self.seg_ends[ru], u);
        let end_v = far_end(self.seg_ends[rv], v);
        let size = self.seg_size[ru] + self.seg_size[rv];
        let union = self.segments.union(u as usize, v as usize).expect("distinct segments");
        let root = union.root as usize;
        self.trail.push(Change::Union {
            union,
            prev_ends: self.seg_ends[root],
            prev_size: self.seg_size[root],
        });
        self.seg_ends[root] = (end_u, end_v);
        self.seg_size[root] = size;
        self.queue.push(u);
        self.queue.push(v);

        if let Some(f) = self.edge_between(end_u, end_v) {
            if self.state[f as usize] == EdgeState::Unknown {
                if size as usize == self.n {
                    self.set_required(f)?;
                } else {
                    self.set_excluded(f)?;
                }
            }
        }
        Ok(())
    }

    fn set_excluded(&mut self, e: u32) -> Step {
        match self.state[e as usize] {
            EdgeState::Excluded => return Ok(()),
            EdgeState::Required => return Err(Contradiction),
            EdgeState::Unknown => {}
        }
        let (u, v) = self.ends[e as usize];
        self.trail.push(Change::Edge {
            e,
            prev: EdgeState::Unknown,
        });
        self.state[e as usize] = EdgeState::Excluded;
        self.available[u as usize] -= 1;
        self.available[v as usize] -= 1;
        self.queue.push(u);
        self.queue.push(v);
        Ok(())
    }

    fn propagate(&mut self) -> Step {
        while let Some(v) = self.queue.pop() {
            if self.solved {
                self.queue.clear();
                return Ok(());
            }
            let vi = v as usize;
            if self.available[vi] < 2 {
                return Err(Contradiction);
            }
            let req = self.required[vi];
            let avail = self.available[vi];
            if req == 2 && avail > 2 {
                for e in self.incident[vi].clone() {
                    if self.state[e as usize] == EdgeState::Unknown {
                        self.set_excluded(e)?;
                    }
                }
            } else if req < 2 && avail == 2 {
                for e in self.incident[vi].clone() {
                    if self.state[e as usize] == EdgeState::Unknown {
                        self.set_required(e)?;
                        if self.solved {
                            break;
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().expect("nonempty trail") {
                Change::Edge { e, prev } => {
                    let (u, v) = self.ends[e as usize];
                    match self.state[e as usize] {
                        EdgeState::Required => {
                            self.required[u as usize] -= 1;
                            self.required[v as usize] -= 1;
                        }
                        EdgeState::Excluded => {
                            self.available[u as usize] += 1;
                            self.available[v as usize] += 1;
                        }
                        EdgeState::Unknown => {}
                    }
                    self.state[e as usize] = prev;
                }
                Change::Union {
                    union,
                    prev_ends,
                    prev_size,
                } => {
                    let root = union.root as usize;
                    self.seg_ends[root] = prev_ends;
                    self.seg_size[root] = prev_size;
                    self.segments.undo(union);
                }
            }
        }
        self.solved = false;
        self.queue.clear();
    }

    /// Whether the non-Excluded edges still connect every vertex.
    fn available_connected(&mut self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.mark.iter_mut().for_each(|m| *m = false);
        self.scratch.clear();
        self.scratch.push(0);
        self.mark[0] = true;
        let mut count = 1;
        while let Some(u) = self.scratch.pop() {
            for &e in &self.incident[u as usize] {
                if self.state[e as usize] == EdgeState::Excluded {
                    continue;
                }
                let w = self.other(e, u);
                if !self.mark[w as usize] {
                    self.mark[w as usize] = true;
                    count += 1;
                    self.scratch.push(w);
                }
            }
        }
        count == self.n
    }

    /// Unknown edge at a segment endpoint whose far vertex has the fewest
    /// non-Excluded edges; falls back to any Unknown edge.
    fn choose_branch(&self) -> Option<u32> {
        let better = |cand: (u8, u32), best: Option<(u8, u32)>| match best {
            None => true,
            Some((s, e)) => {
                cand.0 < s
                    || (cand.0 == s
                        && match self.options.tie_break {
                            TieBreak::LowestIndex => cand.1 < e,
                            TieBreak::HighestIndex => cand.1 > e,
                        })
            }
        };
        let mut best: Option<(u8, u32)> = None;
        for v in 0..self.n {
            if self.required[v] != 1 {
                continue;
            }
            for &e in &self.incident[v] {
                if self.state[e as usize] != EdgeState::Unknown {
                    continue;
                }
                let w = self.other(e, v as u32);
                let cand = (self.available[w as usize], e);
                if better(cand, best) {
                    best = Some(cand);
                }
            }
        }
        if best.is_some() {
            return best.map(|(_, e)| e);
        }
        let mut unknown = (0..self.state.len() as u32).filter(|&e| self.state[e as usize] == EdgeState::Unknown);
        match self.options.tie_break {
            TieBreak::LowestIndex => unknown.next(),
            TieBreak::HighestIndex => unknown.next_back(),
        }
    }

    fn try_branch(&mut self, e: u32, require: bool) -> bool {
        let step = if require {
            self.set_required(e)
        } else {
            self.set_excluded(e)
        };
        match step.and_then(|_| self.propagate()) {
            Ok(()) => self.solved || self.search(),
            Err(Contradiction) => false,
        }
    }

    fn search(&mut self) -> bool {
        self.nodes += 1;
        let k = self.options.connectivity_interval;
        if k > 0 && self.nodes.is_multiple_of(k) && !self.available_connected() {
            return false;
        }
        let Some(e) = self.choose_branch() else {
            return false;
        };
        let mark = self.trail.len();
        if self.try_branch(e, true) {
            return true;
        }
        self.undo_to(mark);
        if self.try_branch(e, false) {
            return true;
        }
        self.undo_to(mark);
        false
    }

    /// Runs the complete search; on success returns the cycle starting at vertex 0.
    pub(crate) fn run(&mut self) -> Option<Vec<Vertex>> {
        self.queue.extend(0..self.n as u32);
        let found = match self.propagate() {
            Ok(()) => self.solved || self.search(),
            Err(Contradiction) => false,
        };
        found.then(|| self.extract_cycle())
    }

    fn extract_cycle(&self) -> Vec<Vertex> {
        let mut cycle = Vec::with_capacity(self.n);
        let mut prev = u32::MAX;
        let mut cur = 0u32;
        for _ in 0..self.n {
            cycle.push(cur as usize);
            let next = self.incident[cur as usize]
                .iter()
                .filter(|&&e| self.state[e as usize] == EdgeState::Required)
                .map(|&e| self.other(e, cur))
                .find(|&w| w != prev)
                .expect("required edges form a cycle");
            prev = cur;
            cur = next;
        }
        cycle
    }
}

fn far_end(ends: (u32, u32), v: u32) -> u32 {
    if ends.0 == v {
        ends.1
    } else {
        ends.0
    }
}
