use std::collections::BTreeMap;
use std::fmt;
use std::ops::AddAssign;

use thiserror::Error;

/// Tallies for one vertex order.
///
/// With connectivity classification on, `c4 + c5 + rejected == total`;
/// with it off, `unclassified + rejected == total`. Non-hamiltonian graphs
/// land in `n4`, `n5` or `nonham_unclassified` accordingly.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RowCounts {
    pub total: u64,
    pub c4: u64,
    pub n4: u64,
    pub c5: u64,
    pub n5: u64,
    pub h: u64,
    pub unclassified: u64,
    pub nonham_unclassified: u64,
    pub rejected: u64,
    pub rejected_not_cubic: u64,
    pub rejected_girth: u64,
    pub rejected_connectivity: u64,
    pub grinberg_certified: u64,
    pub cross_verified: u64,
    pub solver_nodes: u64,
}

impl RowCounts {
    pub fn nonhamiltonian(&self) -> u64 {
        self.n4 + self.n5 + self.nonham_unclassified
    }

    /// Checks the bucket identities; returns the first one violated.
    pub fn check(&self) -> Result<(), &'static str> {
        if self.c4 + self.c5 + self.unclassified + self.rejected != self.total {
            return Err("buckets do not sum to total");
        }
        if self.rejected_not_cubic + self.rejected_girth + self.rejected_connectivity != self.rejected {
            return Err("rejection reasons do not sum to rejected");
        }
        if self.n4 > self.c4 || self.n5 > self.c5 || self.nonham_unclassified > self.unclassified {
            return Err("more non-hamiltonian graphs than classified graphs");
        }
        if self.h > self.nonhamiltonian() {
            return Err("more hypohamiltonian than non-hamiltonian graphs");
        }
        Ok(())
    }
}

impl AddAssign<&RowCounts> for RowCounts {
    fn add_assign(&mut self, o: &RowCounts) {
        self.total += o.total;
        self.c4 += o.c4;
        self.n4 += o.n4;
        self.c5 += o.c5;
        self.n5 += o.n5;
        self.h += o.h;
        self.unclassified += o.unclassified;
        self.nonham_unclassified += o.nonham_unclassified;
        self.rejected += o.rejected;
        self.rejected_not_cubic += o.rejected_not_cubic;
        self.rejected_girth += o.rejected_girth;
        self.rejected_connectivity += o.rejected_connectivity;
        self.grinberg_certified += o.grinberg_certified;
        self.cross_verified += o.cross_verified;
        self.solver_nodes += o.solver_nodes;
    }
}

/// Per-order tallies plus the count of undecodable records that were skipped.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PipelineCounters {
    pub rows: BTreeMap<usize, RowCounts>,
    pub skipped: u64,
}

impl PipelineCounters {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn row(&self, n: usize) -> Option<&RowCounts> {
        self.rows.get(&n)
    }

    pub fn row_mut(&mut self, n: usize) -> &mut RowCounts {
        self.rows.entry(n).or_default()
    }

    /// Inserts an all-zero row for `n` if none exists.
    pub fn ensure_row(&mut self, n: usize) {
        self.rows.entry(n).or_default();
    }

    pub fn merge(&mut self, other: &PipelineCounters) {
        for (&n, row) in &other.rows {
            *self.row_mut(n) += row;
        }
        self.skipped += other.skipped;
    }

    pub fn totals(&self) -> RowCounts {
        let mut sum = RowCounts::default();
        for row in self.rows.values() {
            sum += row;
        }
        sum
    }

    pub fn check(&self) -> Result<(), (usize, &'static str)> {
        for (&n, row) in &self.rows {
            row.check().map_err(|e| (n, e))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no counters for {0} vertices")]
pub struct MissingRow(pub usize);

/// One table line, `n C4 N4 C5 N5 H`, single-space separated.
pub fn emit_table_row(counters: &PipelineCounters, n: usize) -> Result<String, MissingRow> {
    let r = counters.row(n).ok_or(MissingRow(n))?;
    Ok(TableRow(n, r).to_string())
}

struct TableRow<'a>(usize, &'a RowCounts);

impl fmt::Display for TableRow<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let TableRow(n, r) = self;
        write!(f, "{n} {} {} {} {} {}", r.c4, r.n4, r.c5, r.n5, r.h)
    }
}
