//! JSON transport form of a G-configuration.

use serde::{Deserialize, Serialize};

use crate::gconfig::{GConfiguration, Violations};
use crate::tree::Vertex;

/// `{"n":..,"tree_edges":[[parent,child],..],"arcs":[[source,target],..]}`,
/// root implicitly 1. Serialized edges are sorted by child, arcs by source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigRecord {
    pub n: usize,
    pub tree_edges: Vec<[u32; 2]>,
    pub arcs: Vec<[u32; 2]>,
}

fn pairs(list: &[[u32; 2]]) -> Vec<(Vertex, Vertex)> {
    list.iter().map(|&[a, b]| (Vertex(a), Vertex(b))).collect()
}

fn raw(list: Vec<(Vertex, Vertex)>) -> Vec<[u32; 2]> {
    list.into_iter().map(|(a, b)| [a.0, b.0]).collect()
}

impl ConfigRecord {
    pub fn to_config(&self) -> Result<GConfiguration, Violations> {
        GConfiguration::new(self.n, &pairs(&self.tree_edges), &pairs(&self.arcs))
    }

    /// One line of compact JSON, no trailing newline.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Reads a record file: blank lines and lines starting with `#` are
    /// ignored, the rest is one JSON object.
    pub fn from_text(text: &str) -> Result<Self, serde_json::Error> {
        let body: String = text
            .lines()
            .filter(|l| !l.trim_start().starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n");
        serde_json::from_str(&body)
    }
}

impl From<&GConfiguration> for ConfigRecord {
    fn from(config: &GConfiguration) -> Self {
        ConfigRecord {
            n: config.n(),
            tree_edges: raw(config.tree_edges()),
            arcs: raw(config.arcs()),
        }
    }
}
