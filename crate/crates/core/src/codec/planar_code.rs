//! The planar_code stream format written by plantri.
//!
//! Layout: the 15-byte ASCII header `>>planar_code<<` (optional, selected by
//! the caller), then per graph one byte `n` followed by, for each vertex in
//! order, its clockwise neighbor list as 1-based bytes closed by a `0` byte.
//! Only the one-byte variant (`1 <= n <= 255`) is supported.

use std::io::{self, BufRead, BufReader, Read, Write};

use thiserror::Error;

use crate::embedding::{NotSphereEmbedding, PlanarEmbedding};
use crate::graph::{Graph, GraphError, Vertex};

pub const HEADER: &[u8; 15] = b">>planar_code<<";
pub const MAX_VERTICES: usize = 255;

#[derive(Debug, Error)]
pub enum CodecError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("missing or malformed >>planar_code<< header at byte {offset}")]
    BadHeader { offset: u64 },
    #[error("stream ends inside graph {graph} at byte {offset}")]
    Truncated { graph: u64, offset: u64 },
    #[error("graph {graph} at byte {offset}: vertex count byte 0 selects the two-byte variant, which is unsupported")]
    TwoByteVariant { graph: u64, offset: u64 },
    #[error("graph {graph} at byte {offset}: neighbor {value} exceeds vertex count {vertex_count}")]
    NeighborOutOfRange {
        graph: u64,
        offset: u64,
        value: u8,
        vertex_count: usize,
    },
    #[error("graph {graph} at byte {offset}: {source}")]
    InvalidGraph {
        graph: u64,
        offset: u64,
        #[source]
        source: GraphError,
    },
    #[error("graph {graph} at byte {offset}: vertex {vertex} has degree {degree}, cubic input required")]
    NotCubic {
        graph: u64,
        offset: u64,
        vertex: Vertex,
        degree: usize,
    },
    #[error("graph {graph} at byte {offset}: {source}")]
    NotSphere {
        graph: u64,
        offset: u64,
        #[source]
        source: NotSphereEmbedding,
    },
    #[error("cannot encode a graph on {0} vertices; the one-byte format stops at 255")]
    UnsupportedSize(usize),
}

impl CodecError {
    /// Framing errors leave the reader at an unknown position; the stream
    /// cannot continue after them.
    pub fn is_fatal(&self) -> bool {
        matches!(
            self,
            CodecError::Io(_)
                | CodecError::BadHeader { .. }
                | CodecError::Truncated { .. }
                | CodecError::TwoByteVariant { .. }
        )
    }

    pub fn is_unsupported(&self) -> bool {
        matches!(self, CodecError::TwoByteVariant { .. } | CodecError::UnsupportedSize(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReadOptions {
    pub expect_header: bool,
    /// Reject any vertex of degree other than 3.
    pub cubic_only: bool,
}

impl Default for ReadOptions {
    fn default() -> Self {
        ReadOptions {
            expect_header: true,
            cubic_only: false,
        }
    }
}

/// Streaming decoder yielding one validated embedding per record.
///
/// Validation failures (asymmetry, bad degree, genus) are yielded as errors
/// and the reader moves on to the next record; framing errors end the stream.
pub struct PlanarCodeReader<R: Read> {
    input: BufReader<R>,
    options: ReadOptions,
    offset: u64,
    graph: u64,
    started: bool,
    done: bool,
    lists: Vec<Vec<Vertex>>,
}

impl<R: Read> PlanarCodeReader<R> {
    pub fn new(input: R, options: ReadOptions) -> Self {
        PlanarCodeReader {
            input: BufReader::new(input),
            options,
            offset: 0,
            graph: 0,
            started: false,
            done: false,
            lists: Vec::new(),
        }
    }

    /// Bytes consumed so far.
    pub fn offset(&self) -> u64 {
        self.offset
    }

    fn next_byte(&mut self) -> io::Result<Option<u8>> {
        let buf = self.input.fill_buf()?;
        let Some(&b) = buf.first() else {
            return Ok(None);
        };
        self.input.consume(1);
        self.offset += 1;
        Ok(Some(b))
    }

    fn read_header(&mut self) -> Result<(), CodecError> {
        for &expected in HEADER.iter() {
            match self.next_byte()? {
                Some(b) if b == expected => {}
                _ => return Err(CodecError::BadHeader { offset: self.offset }),
            }
        }
        Ok(())
    }

    fn read_record(&mut self) -> Result<Option<PlanarEmbedding>, CodecError> {
        let record_start = self.offset;
        let graph = self.graph;
        let Some(n) = self.next_byte()? else {
            return Ok(None);
        };
        self.graph += 1;
        if n == 0 {
            return Err(CodecError::TwoByteVariant {
                graph,
                offset: record_start,
            });
        }
        let n = n as usize;
        self.lists.iter_mut().for_each(Vec::clear);
        self.lists.resize_with(n, Vec::new);
        self.lists.truncate(n);
        let mut deferred = None;
        for v in 0..n {
            loop {
                let at = self.offset;
                let b = self.next_byte()?.ok_or(CodecError::Truncated {
                    graph,
                    offset: self.offset,
                })?;
                if b == 0 {
                    break;
                }
                if deferred.is_none() && b as usize > n {
                    deferred = Some(CodecError::NeighborOutOfRange {
                        graph,
                        offset: at,
                        value: b,
                        vertex_count: n,
                    });
                }
                self.lists[v].push(b as usize - 1);
            }
        }
        if let Some(err) = deferred {
            return Err(err);
        }
        let g = Graph::from_adjacency(&self.lists).map_err(|source| CodecError::InvalidGraph {
            graph,
            offset: record_start,
            source,
        })?;
        if self.options.cubic_only {
            if let Some(v) = (0..n).find(|&v| g.degree(v) != 3) {
                return Err(CodecError::NotCubic {
                    graph,
                    offset: record_start,
                    vertex: v,
                    degree: g.degree(v),
                });
            }
        }
        PlanarEmbedding::new(g)
            .map(Some)
            .map_err(|source| CodecError::NotSphere {
                graph,
                offset: record_start,
                source,
            })
    }
}

impl<R: Read> Iterator for PlanarCodeReader<R> {
    type Item = Result<PlanarEmbedding, CodecError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.options.expect_header {
                if let Err(e) = self.read_header() {
                    self.done = true;
                    return Some(Err(e));
                }
            }
        }
        match self.read_record() {
            Ok(Some(e)) => Some(Ok(e)),
            Ok(None) => {
                self.done = true;
                None
            }
            Err(e) => {
                if e.is_fatal() {
                    self.done = true;
                }
                Some(Err(e))
            }
        }
    }
}

pub fn read_planar_code<R: Read>(input: R, options: ReadOptions) -> PlanarCodeReader<R> {
    PlanarCodeReader::new(input, options)
}

/// Appends one record. The rotation order of `g` is written as-is; no genus
/// check is made, so any sub-cubic rotation system can be encoded.
pub fn encode_record(g: &Graph, out: &mut Vec<u8>) -> Result<(), CodecError> {
    let n = g.vertex_count();
    if n == 0 || n > MAX_VERTICES {
        return Err(CodecError::UnsupportedSize(n));
    }
    out.push(n as u8);
    for v in 0..n {
        out.extend(g.neighbors(v).iter().map(|&u| (u + 1) as u8));
        out.push(0);
    }
    Ok(())
}

/// Incremental encoder; the header goes out with the first write or on
/// [`PlanarCodeWriter::finish`], whichever comes first.
pub struct PlanarCodeWriter<W: Write> {
    out: W,
    header: bool,
    header_written: bool,
    bytes: u64,
    scratch: Vec<u8>,
}

impl<W: Write> PlanarCodeWriter<W> {
    pub fn new(out: W, header: bool) -> Self {
        PlanarCodeWriter {
            out,
            header,
            header_written: false,
            bytes: 0,
            scratch: Vec::new(),
        }
    }

    fn ensure_header(&mut self) -> io::Result<()> {
        if self.header && !self.header_written {
            self.out.write_all(HEADER)?;
            self.bytes += HEADER.len() as u64;
        }
        self.header_written = true;
        Ok(())
    }

    pub fn write_graph(&mut self, g: &Graph) -> Result<(), CodecError> {
        let mut scratch = std::mem::take(&mut self.scratch);
        scratch.clear();
        encode_record(g, &mut scratch)?;
        let written = self.write_raw_record(&scratch);
        self.scratch = scratch;
        written
    }

    /// Writes bytes already produced by [`encode_record`].
    pub fn write_raw_record(&mut self, record: &[u8]) -> Result<(), CodecError> {
        self.ensure_header()?;
        self.out.write_all(record)?;
        self.bytes += record.len() as u64;
        Ok(())
    }

    /// Flushes and returns the total byte count written.
    pub fn finish(mut self) -> Result<u64, CodecError> {
        self.ensure_header()?;
        self.out.flush()?;
        Ok(self.bytes)
    }
}

/// Writes `graphs` as one stream and returns the number of bytes written.
pub fn write_planar_code<'a, W, I>(graphs: I, out: W, header: bool) -> Result<u64, CodecError>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    let mut w = PlanarCodeWriter::new(out, header);
    for g in graphs {
        w.write_graph(g)?;
    }
    w.finish()
}
