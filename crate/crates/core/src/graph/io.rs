//! Graph files: canonical JSON `{"n": 6, "edges": [[1, 2, 2], ...]}` and a
//! plain-text form (`n 6` followed by `i j w` lines).

use serde::{Deserialize, Serialize};

use super::WeightedGraph;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize, u64)>,
    /// Present only for graphs that lost vertices to pruning or induction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<usize>>,
}

impl WeightedGraph {
    pub fn from_json(s: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let g = WeightedGraph::from_edges(file.n, &file.edges)?;
        match file.vertices {
            Some(keep) => super::induced_subgraph(&g, keep),
            None => Ok(g),
        }
    }

    pub fn to_json(&self) -> String {
        let vertices = (self.vertex_count() != self.universe).then(|| self.vertices().collect());
        let file = GraphFile {
            n: self.universe,
            edges: self.edges().collect(),
            vertices,
        };
        serde_json::to_string(&file).expect("graph serialization cannot fail")
    }

    /// Parses the text form. Blank lines and `#` comments are ignored.
    pub fn from_text(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph file".into()))?;
        let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["n", count] => parse_num::<usize>(count)?,
            _ => {
                return Err(Error::Parse(format!(
                    "expected `n <count>`, found `{header}`"
                )))
            }
        };
        let mut edges = Vec::new();
        for line in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [i, j, w] = fields.as_slice() else {
                return Err(Error::Parse(format!("expected `i j w`, found `{line}`")));
            };
            edges.push((parse_num(i)?, parse_num(j)?, parse_num(w)?));
        }
        WeightedGraph::from_edges(n, &edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.universe);
        for (i, j, w) in self.edges() {
            out.push_str(&format!("{i} {j} {w}\n"));
        }
        out
    }

    /// JSON when the first non-blank character is `{`, text otherwise.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            WeightedGraph::from_json(s)
        } else {
            WeightedGraph::from_text(s)
        }
    }
}

fn parse_num<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Parse(format!("`{s}` is not a non-negative integer")))
}
