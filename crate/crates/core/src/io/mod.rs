//! Graph file formats.

mod adjlist;
mod graph6;

pub use adjlist::{parse_adjacency_lists, write_adjacency_lists};
pub use graph6::{graph6_len, parse_graph6, parse_graph6_lines, write_graph6};

use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    AdjacencyList,
    Graph6,
}

impl Format {
    /// Picks a format from a file name: `.g6`/`.graph6` is graph6, anything
    /// else is an adjacency list.
    pub fn from_path(path: &std::path::Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") | Some("graph6") => Format::Graph6,
            _ => Format::AdjacencyList,
        }
    }
}

/// Adjacency list if the first meaningful line starts with `label:`,
/// otherwise graph6.
pub fn detect_format(text: &str) -> Format {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(line) => {
            let head = line.split(':').next().unwrap_or("");
            if line.contains(':') && head.trim().parse::<i64>().is_ok() {
                Format::AdjacencyList
            } else {
                Format::Graph6
            }
        }
        None => Format::AdjacencyList,
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::AdjacencyList => parse_adjacency_lists(text),
        Format::Graph6 => parse_graph6(text.trim()),
    }
}

pub fn parse_auto(text: &str) -> Result<Graph> {
    parse(text, detect_format(text))
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::AdjacencyList => write_adjacency_lists(g),
        Format::Graph6 => {
            let mut s = write_graph6(g);
            s.push('\n');
            s
        }
    }
}
