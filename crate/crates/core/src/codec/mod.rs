//! Graph file formats: binary planar_code and adjacency text.

pub mod planar_code;
pub mod text;

use std::fs::File;
use std::io::{self, BufReader, Read};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::embedding::{NotSphereEmbedding, PlanarEmbedding};
use crate::graph::Graph;

pub use planar_code::{
    encode_record, read_planar_code, write_planar_code, CodecError, PlanarCodeReader, PlanarCodeWriter, ReadOptions,
    HEADER,
};
pub use text::{read_text_adjacency, to_text, write_text_adjacency, write_text_graph, TextError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    PlanarCode,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InputOptions {
    pub format: Format,
    /// planar_code only: whether the stream starts with `>>planar_code<<`.
    pub header: bool,
    pub cubic_only: bool,
}

impl Default for InputOptions {
    fn default() -> Self {
        InputOptions {
            format: Format::PlanarCode,
            header: true,
            cubic_only: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Open {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error(transparent)]
    Text(#[from] TextError),
    #[error("text graph {graph}: {source}")]
    NotSphere {
        graph: u64,
        #[source]
        source: NotSphereEmbedding,
    },
    #[error("text graph {graph}: vertex {vertex} has degree {degree}, cubic input required")]
    NotCubic { graph: u64, vertex: usize, degree: usize },
}

impl InputError {
    /// Whether reading can continue with the next record.
    pub fn is_fatal(&self) -> bool {
        match self {
            InputError::Open { .. } | InputError::Text(_) => true,
            InputError::Codec(e) => e.is_fatal(),
            InputError::NotSphere { .. } | InputError::NotCubic { .. } => false,
        }
    }

    pub fn is_unsupported(&self) -> bool {
        matches!(self, InputError::Codec(e) if e.is_unsupported())
    }
}

pub type GraphStream<'a, T> = Box<dyn Iterator<Item = Result<T, InputError>> + Send + 'a>;

fn cubic_check(g: &Graph, graph: u64) -> Result<(), InputError> {
    match (0..g.vertex_count()).find(|&v| g.degree(v) != 3) {
        Some(vertex) => Err(InputError::NotCubic {
            graph,
            vertex,
            degree: g.degree(vertex),
        }),
        None => Ok(()),
    }
}

/// Decodes embeddings from one reader. Text input must also pass the genus check.
pub fn read_embeddings<'a, R>(input: R, options: InputOptions) -> GraphStream<'a, PlanarEmbedding>
where
    R: Read + Send + 'a,
{
    match options.format {
        Format::PlanarCode => Box::new(
            read_planar_code(
                input,
                ReadOptions {
                    expect_header: options.header,
                    cubic_only: options.cubic_only,
                },
            )
            .map(|r| r.map_err(InputError::from)),
        ),
        Format::Text => Box::new(
            read_text_adjacency(BufReader::new(input))
                .enumerate()
                .map(move |(i, r)| {
                    let g = r?;
                    if options.cubic_only {
                        cubic_check(&g, i as u64)?;
                    }
                    PlanarEmbedding::new(g).map_err(|source| InputError::NotSphere {
                        graph: i as u64,
                        source,
                    })
                }),
        ),
    }
}

/// Decodes plain graphs. planar_code records are still genus-checked; text
/// records are taken as abstract graphs.
pub fn read_graphs<'a, R>(input: R, options: InputOptions) -> GraphStream<'a, Graph>
where
    R: Read + Send + 'a,
{
    match options.format {
        Format::PlanarCode => Box::new(read_embeddings(input, options).map(|r| r.map(PlanarEmbedding::into_graph))),
        Format::Text => Box::new(
            read_text_adjacency(BufReader::new(input))
                .enumerate()
                .map(move |(i, r)| {
                    let g = r?;
                    if options.cubic_only {
                        cubic_check(&g, i as u64)?;
                    }
                    Ok(g)
                }),
        ),
    }
}

/// Opens `path`, with `-` meaning standard input.
pub fn open_input(path: &Path) -> Result<Box<dyn Read + Send>, InputError> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(io::stdin()));
    }
    File::open(path)
        .map(|f| Box::new(f) as Box<dyn Read + Send>)
        .map_err(|source| InputError::Open {
            path: path.to_path_buf(),
            source,
        })
}

/// Chains several inputs into one stream, in order.
pub fn open_embeddings<'a>(paths: &'a [PathBuf], options: InputOptions) -> GraphStream<'a, PlanarEmbedding> {
    Box::new(paths.iter().flat_map(move |p| -> GraphStream<'a, PlanarEmbedding> {
        match open_input(p) {
            Ok(r) => read_embeddings(r, options),
            Err(e) => Box::new(std::iter::once(Err(e))),
        }
    }))
}

pub fn open_graphs<'a>(paths: &'a [PathBuf], options: InputOptions) -> GraphStream<'a, Graph> {
    Box::new(paths.iter().flat_map(move |p| -> GraphStream<'a, Graph> {
        match open_input(p) {
            Ok(r) => read_graphs(r, options),
            Err(e) => Box::new(std::iter::once(Err(e))),
        }
    }))
}
