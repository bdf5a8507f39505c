//! Unit-capacity edge max-flow between two vertex sets, with a cap.

use arrayvec::ArrayVec;
use thiserror::Error;

use crate::graph::{Graph, Vertex, MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("source and sink sets share vertex {0}")]
    Overlap(Vertex),
    #[error("source and sink sets must be nonempty")]
    Empty,
    #[error("vertex {0} out of range")]
    OutOfRange(Vertex),
}

const NONE: u8 = 0;
const SOURCE: u8 = 1;
const SINK: u8 = 2;

/// Reusable flow network over the edges of one graph. Each undirected edge
/// carries one unit in either direction; flow is stored relative to the
/// edge's lower endpoint.
#[derive(Debug, Clone)]
pub struct UnitFlow {
    ends: Vec<(u32, u32)>,
    incident: Vec<ArrayVec<(u32, u32), MAX_DEGREE>>,
    flow: Vec<i8>,
    side: Vec<u8>,
    seen: Vec<u32>,
    stamp: u32,
    pred: Vec<u32>,
    queue: Vec<u32>,
}

impl UnitFlow {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let ends: Vec<(u32, u32)> = g.edges().into_iter().map(|(u, v)| (u as u32, v as u32)).collect();
        let mut incident = vec![ArrayVec::new(); n];
        for (e, &(u, v)) in ends.iter().enumerate() {
            incident[u as usize].push((e as u32, v));
            incident[v as usize].push((e as u32, u));
        }
        UnitFlow {
            flow: vec![0; ends.len()],
            ends,
            incident,
            side: vec![NONE; n],
            seen: vec![0; n],
            stamp: 0,
            pred: vec![0; n],
            queue: Vec::with_capacity(n),
        }
    }

    pub fn edge(&self, e: usize) -> (Vertex, Vertex) {
        let (u, v) = self.ends[e];
        (u as usize, v as usize)
    }

    fn residual(&self, e: u32, from: u32) -> bool {
        let f = self.flow[e as usize];
        if self.ends[e as usize].0 == from {
            f < 1
        } else {
            f > -1
        }
    }

    fn push(&mut self, e: u32, from: u32) {
        if self.ends[e as usize].0 == from {
            self.flow[e as usize] += 1;
        } else {
            self.flow[e as usize] -= 1;
        }
    }

    /// One BFS from the source set; augments and returns true if a sink was reached.
    fn augment(&mut self, sources: &[Vertex]) -> bool {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.iter_mut().for_each(|s| *s = 0);
            self.stamp = 1;
        }
        self.queue.clear();
        for &v in sources {
            self.seen[v] = self.stamp;
            self.queue.push(v as u32);
        }
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            for i in 0..self.incident[u as usize].len() {
                let (e, v) = self.incident[u as usize][i];
                if self.seen[v as usize] == self.stamp || !self.residual(e, u) {
                    continue;
                }
                self.seen[v as usize] = self.stamp;
                self.pred[v as usize] = e;
                if self.side[v as usize] == SINK {
                    let mut x = v;
                    while self.side[x as usize] != SOURCE {
                        let e = self.pred[x as usize];
                        let (a, b) = self.ends[e as usize];
                        let y = if a == x { b } else { a };
                        self.push(e, y);
                        x = y;
                    }
                    return true;
                }
                self.queue.push(v);
            }
        }
        false
    }

    /// Max flow from `sources` to `sinks`, stopping after `cap + 1` units.
    /// A return value of `cap + 1` means "more than `cap`". The sets must be
    /// valid and disjoint; see [`mincut_between`] for the checked entry point.
    pub fn max_flow(&mut self, sources: &[Vertex], sinks: &[Vertex], cap: usize) -> usize {
        self.flow.iter_mut().for_each(|f| *f = 0);
        for &s in sources {
            self.side[s] = SOURCE;
        }
        for &t in sinks {
            self.side[t] = SINK;
        }
        let mut value = 0;
        while value <= cap && self.augment(sources) {
            value += 1;
        }
        for &v in sources.iter().chain(sinks) {
            self.side[v] = NONE;
        }
        value
    }

    /// After a [`UnitFlow::max_flow`] call that returned at most `cap`, the edges
    /// leaving the residual-reachable source side form a minimum cut.
    pub fn last_cut(&self) -> Vec<(Vertex, Vertex)> {
        self.ends
            .iter()
            .filter(|&&(u, v)| (self.seen[u as usize] == self.stamp) != (self.seen[v as usize] == self.stamp))
            .map(|&(u, v)| (u as usize, v as usize))
            .collect()
    }
}

fn check_sets(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Result<(), FlowError> {
    if a.is_empty() || b.is_empty() {
        return Err(FlowError::Empty);
    }
    let n = g.vertex_count();
    if let Some(&v) = a.iter().chain(b).find(|&&v| v >= n) {
        return Err(FlowError::OutOfRange(v));
    }
    if let Some(&v) = a.iter().find(|v| b.contains(v)) {
        return Err(FlowError::Overlap(v));
    }
    Ok(())
}

/// Minimum number of edges separating `a` from `b`, computed by unit-capacity
/// augmenting paths and cut off at `cap + 1` (meaning "more than `cap`").
pub fn mincut_between(g: &Graph, a: &[Vertex], b: &[Vertex], cap: usize) -> Result<usize, FlowError> {
    check_sets(g, a, b)?;
    let mut net = UnitFlow::new(g);
    Ok(net.max_flow(a, b, cap))
}

/// Flow value, with a minimum cut when the value is at most the cap.
pub type CutResult = (usize, Option<Vec<(Vertex, Vertex)>>);

/// Like [`mincut_between`], also returning a minimum cut when its size is at most `cap`.
pub fn min_edge_cut(g: &Graph, a: &[Vertex], b: &[Vertex], cap: usize) -> Result<CutResult, FlowError> {
    check_sets(g, a, b)?;
    let mut net = UnitFlow::new(g);
    let value = net.max_flow(a, b, cap);
    let cut = (value <= cap).then(|| net.last_cut());
    Ok((value, cut))
}
