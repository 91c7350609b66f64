//! Adjacency-list text: one vertex per line, `label: n1 n2 ...`.
//!
//! Labels are integers. `#` starts a comment, blank lines are ignored.
//! Neighbor lists may be separated by whitespace or commas and may be
//! wrapped in braces, so tables copied as `3: {19, 22, 21}` also parse.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_adjacency_lists(text: &str) -> Result<Graph> {
    struct Entry {
        line: usize,
        neighbors: Vec<(i64, usize)>,
    }

    let mut labels: Vec<i64> = Vec::new();
    let mut index: HashMap<i64, usize> = HashMap::new();
    let mut entries: Vec<Entry> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(lineno, "expected `label: neighbors`"))?;
        let label: i64 = head
            .trim()
            .parse()
            .map_err(|_| Error::parse(lineno, format!("invalid label `{}`", head.trim())))?;
        if index.insert(label, labels.len()).is_some() {
            return Err(Error::parse(lineno, format!("duplicate label {label}")));
        }
        labels.push(label);

        let mut neighbors = Vec::new();
        for tok in tail
            .split(|c: char| c.is_whitespace() || c == ',' || c == '{' || c == '}')
            .filter(|t| !t.is_empty())
        {
            let nb: i64 = tok
                .parse()
                .map_err(|_| Error::parse(lineno, format!("invalid neighbor `{tok}`")))?;
            if nb == label {
                return Err(Error::parse(lineno, format!("self-loop at {label}")));
            }
            neighbors.push((nb, lineno));
        }
        entries.push(Entry {
            line: lineno,
            neighbors,
        });
    }

    let mut g = Graph::empty(labels.len())
        .map_err(|e| Error::parse(entries.last().map_or(0, |e| e.line), e.to_string()))?;
    for (u, entry) in entries.iter().enumerate() {
        let mut seen = std::collections::HashSet::new();
        for &(nb, line) in &entry.neighbors {
            let v = *index
                .get(&nb)
                .ok_or_else(|| Error::parse(line, format!("unknown neighbor label {nb}")))?;
            if !seen.insert(v) {
                return Err(Error::parse(line, format!("neighbor {nb} listed twice")));
            }
            g.add_edge(u, v);
        }
    }
    // Every listed neighbor must list us back.
    for (u, entry) in entries.iter().enumerate() {
        let listed = entry.neighbors.len();
        if g.degree_of(u) != listed {
            let missing = g
                .neighbors(u)
                .find(|&v| !entries[u].neighbors.iter().any(|&(l, _)| l == labels[v]))
                .map(|v| labels[v]);
            return Err(Error::parse(
                entry.line,
                match missing {
                    Some(l) => format!(
                        "asymmetric lists: {l} lists {} but not vice versa",
                        labels[u]
                    ),
                    None => format!("asymmetric lists at {}", labels[u]),
                },
            ));
        }
    }
    g.with_labels(labels)
}

/// Writes one line per vertex in index order, neighbors by increasing index.
pub fn write_adjacency_lists(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.order() {
        out.push_str(&g.label(v).to_string());
        out.push(':');
        for u in g.neighbors(v) {
            out.push(' ');
            out.push_str(&g.label(u).to_string());
        }
        out.push('\n');
    }
    out
}
