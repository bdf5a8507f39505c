//! Line-oriented adjacency text.
//!
//! ```text
//! # comment lines and blank lines are ignored
//! 4
//! 0: 1 2 3
//! 1: 0 3 2
//! 2: 0 1 3
//! 3: 0 2 1
//! ```
//!
//! A graph is a vertex count line followed by one `v: neighbors` line per
//! vertex, in vertex order. Labels are 0-based. Neighbor order is kept, so the
//! format carries rotation systems. Several graphs may follow each other.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Error)]
pub enum TextError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    InvalidGraph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("line {line}: input ends before all {expected} vertex lines were read")]
    Truncated { line: usize, expected: usize },
}

/// Streaming text reader. A parse error ends the stream.
pub struct TextReader<R: BufRead> {
    input: R,
    line_no: usize,
    done: bool,
    buf: String,
}

impl<R: BufRead> TextReader<R> {
    pub fn new(input: R) -> Self {
        TextReader {
            input,
            line_no: 0,
            done: false,
            buf: String::new(),
        }
    }

    /// Next meaningful line, trimmed, with its 1-based line number.
    fn next_line(&mut self) -> io::Result<Option<(usize, String)>> {
        loop {
            self.buf.clear();
            if self.input.read_line(&mut self.buf)? == 0 {
                return Ok(None);
            }
            self.line_no += 1;
            let t = self.buf.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return Ok(Some((self.line_no, t.to_string())));
        }
    }

    fn read_graph(&mut self) -> Result<Option<Graph>, TextError> {
        let Some((header_line, header)) = self.next_line()? else {
            return Ok(None);
        };
        let n: usize = header.parse().map_err(|_| TextError::Parse {
            line: header_line,
            message: format!("expected a vertex count, found {header:?}"),
        })?;
        let mut lists = Vec::with_capacity(n);
        for v in 0..n {
            let Some((line, text)) = self.next_line()? else {
                return Err(TextError::Truncated {
                    line: self.line_no,
                    expected: n,
                });
            };
            let parse_err = |message: String| TextError::Parse { line, message };
            let (label, rest) = text
                .split_once(':')
                .ok_or_else(|| parse_err(format!("expected `{v}: ...`")))?;
            let label: usize = label
                .trim()
                .parse()
                .map_err(|_| parse_err(format!("bad vertex label {label:?}")))?;
            if label != v {
                return Err(parse_err(format!("expected vertex {v}, found {label}")));
            }
            let mut nbrs = Vec::new();
            for tok in rest.split_whitespace() {
                let u: Vertex = tok
                    .parse()
                    .map_err(|_| parse_err(format!("bad neighbor token {tok:?}")))?;
                if u >= n {
                    return Err(parse_err(format!("neighbor {u} out of range for {n} vertices")));
                }
                nbrs.push(u);
            }
            lists.push(nbrs);
        }
        Graph::from_adjacency(&lists)
            .map(Some)
            .map_err(|source| TextError::InvalidGraph {
                line: header_line,
                source,
            })
    }
}

impl<R: BufRead> Iterator for TextReader<R> {
    type Item = Result<Graph, TextError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        match self.read_graph() {
            Ok(Some(g)) => Some(Ok(g)),
            Ok(None) => {
                self.done = true;
                None
            }
            Err(e) => {
                self.done = true;
                Some(Err(e))
            }
        }
    }
}

pub fn read_text_adjacency<R: BufRead>(input: R) -> TextReader<R> {
    TextReader::new(input)
}

pub fn write_text_graph<W: Write>(g: &Graph, out: &mut W) -> io::Result<()> {
    writeln!(out, "{}", g.vertex_count())?;
    for v in 0..g.vertex_count() {
        write!(out, "{v}:")?;
        for u in g.neighbors(v) {
            write!(out, " {u}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

pub fn write_text_adjacency<'a, W, I>(graphs: I, mut out: W) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        write_text_graph(g, &mut out)?;
    }
    out.flush()
}

pub fn to_text(g: &Graph) -> String {
    let mut out = Vec::new();
    write_text_graph(g, &mut out).expect("writing to a Vec cannot fail");
    String::from_utf8(out).expect("ascii output")
}
