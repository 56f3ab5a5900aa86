// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Plain-text edge lists.
//!
//! ```text
//! # comments start with '#'
//! 3
//! 1 2 1.0
//! 2 3 2.5
//! ```
//!
//! The first non-comment line is the node count `n`; every following line is
//! `x y [c]` with 1-based ids and an optional conductance (default `1.0`).
//! The comment `# allow-self-loops` marks a graph whose loop records are
//! intentional (raw preferential attachment output).

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

const SELF_LOOP_DIRECTIVE: &str = "# allow-self-loops";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    EdgeList,
}

/// Parse an edge list. Self-loops are accepted when `allow_self_loops` is set
/// or the text carries the self-loop directive.
pub fn parse_edge_list(text: &str, allow_self_loops: bool) -> Result<WeightedGraph> {
    let mut n: Option<usize> = None;
    let mut records = Vec::new();
    let mut allow = allow_self_loops;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            if line == SELF_LOOP_DIRECTIVE {
                allow = true;
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |msg: String| Error::Parse { line: line_no, msg };
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(parse_err(format!("expected node count, found {line:?}")));
                }
                n = Some(
                    fields[0]
                        .parse()
                        .map_err(|_| parse_err(format!("invalid node count {:?}", fields[0])))?,
                );
            }
            Some(_) => {
                if !(2..=3).contains(&fields.len()) {
                    return Err(parse_err(format!("expected \"x y [c]\", found {line:?}")));
                }
                let x: usize = fields[0]
                    .parse()
                    .map_err(|_| parse_err(format!("invalid node id {:?}", fields[0])))?;
                let y: usize = fields[1]
                    .parse()
                    .map_err(|_| parse_err(format!("invalid node id {:?}", fields[1])))?;
                let c: f64 = match fields.get(2) {
                    Some(s) => s
                        .parse()
                        .map_err(|_| parse_err(format!("invalid conductance {s:?}")))?,
                    None => 1.0,
                };
                records.push((line_no, x, y, c));
            }
        }
    }

    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing node count".into(),
    })?;
    // Validate record by record so errors carry the offending line.
    for &(line, x, y, c) in &records {
        WeightedGraph::from_edges(n, [(x, y, c)], allow).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
    }
    WeightedGraph::from_edges(n, records.into_iter().map(|(_, x, y, c)| (x, y, c)), allow)
}

pub fn write_edge_list<W: Write>(g: &WeightedGraph, mut out: W) -> Result<()> {
    if g.allows_self_loops() {
        writeln!(out, "{SELF_LOOP_DIRECTIVE}")?;
    }
    writeln!(out, "{}", g.n())?;
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.x, e.y, e.c)?;
    }
    out.flush()?;
    Ok(())
}

pub fn to_edge_list_string(g: &WeightedGraph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("edge list is ASCII")
}

pub fn read_graph(path: impl AsRef<Path>, format: GraphFormat) -> Result<WeightedGraph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(&fs::read_to_string(path)?, false),
    }
}

pub fn write_graph(g: &WeightedGraph, path: impl AsRef<Path>, format: GraphFormat) -> Result<()> {
    match format {
        GraphFormat::EdgeList => write_edge_list(g, BufWriter::new(fs::File::create(path)?)),
    }
}
