use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{parse_graph6, write_graph6};

use super::config::SearchConfig;
use super::search::TraceEntry;

/// Search state after a completed generation. Offspring streams depend only
/// on `(seed, generation, parent, offspring)`, so resuming from a checkpoint
/// continues exactly as the uninterrupted run would.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub config: SearchConfig,
    pub seed: u64,
    /// Last completed generation; the next uses stream generation `+ 1`.
    pub generation: u64,
    pub evaluations: u64,
    /// Ranked population, graph6.
    pub population: Vec<String>,
    pub trace: Vec<TraceEntry>,
}

impl Checkpoint {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        self.population.iter().map(|s| parse_graph6(s)).collect()
    }

    pub fn encode_population<'a, I: IntoIterator<Item = &'a Graph>>(graphs: I) -> Vec<String> {
        graphs.into_iter().map(write_graph6).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("checkpoint serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("checkpoint: {e}")))
    }

    /// Writes through a temporary file so an interrupted write never leaves
    /// a truncated checkpoint.
    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, self.to_json())?;
        std::fs::rename(tmp, path)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Checkpoint::from_json(&text)
    }
}
