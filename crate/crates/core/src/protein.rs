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

//! Mutation networks of protein sequences: one node per sequence, an edge
//! between two sequences of equal length that differ at exactly one position.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::degree_stats::{fit_power_law, histogram, ModelDiagnostics, PowerLawFit};
use crate::error::{Error, Result};
use crate::graph::{Edge, NodeId, WeightedGraph};

/// The twenty standard amino-acid one-letter codes.
pub const AMINO_ACIDS: &str = "ACDEFGHIKLMNPQRSTVWY";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceFormat {
    Fasta,
    /// One sequence per line; the id is the 1-based line number.
    Plain,
}

/// Accepted residue letters (case-insensitive).
#[derive(Debug, Clone)]
pub struct Alphabet {
    allowed: [bool; 128],
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::with_extras("")
    }
}

impl Alphabet {
    pub fn with_extras(extras: &str) -> Self {
        let mut allowed = [false; 128];
        for ch in AMINO_ACIDS.chars().chain(extras.chars()) {
            if ch.is_ascii() {
                allowed[ch.to_ascii_uppercase() as usize] = true;
            }
        }
        Alphabet { allowed }
    }

    pub fn contains(&self, ch: char) -> bool {
        ch.is_ascii() && self.allowed[ch as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRecord {
    pub id: String,
    /// Upper-case residues.
    pub residues: String,
}

impl SequenceRecord {
    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }
}

fn validated(id: String, raw: &str, alphabet: &Alphabet) -> Result<SequenceRecord> {
    let residues = raw.to_ascii_uppercase();
    if let Some((position, residue)) = residues
        .chars()
        .enumerate()
        .find(|&(_, c)| !alphabet.contains(c))
    {
        return Err(Error::InvalidResidue {
            record: id,
            position: position + 1,
            residue,
        });
    }
    Ok(SequenceRecord { id, residues })
}

pub fn parse_sequences(
    text: &str,
    format: SequenceFormat,
    alphabet: &Alphabet,
) -> Result<Vec<SequenceRecord>> {
    let mut records = Vec::new();
    match format {
        SequenceFormat::Plain => {
            for (idx, line) in text.lines().enumerate() {
                let line = line.trim();
                if !line.is_empty() {
                    records.push(validated((idx + 1).to_string(), line, alphabet)?);
                }
            }
        }
        SequenceFormat::Fasta => {
            let mut current: Option<(String, String)> = None;
            for (idx, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with(';') {
                    continue;
                }
                if let Some(header) = line.strip_prefix('>') {
                    if let Some((id, seq)) = current.take() {
                        records.push(validated(id, &seq, alphabet)?);
                    }
                    let id = header.split_whitespace().next().unwrap_or("");
                    let id = if id.is_empty() {
                        format!("record{}", records.len() + 1)
                    } else {
                        id.to_string()
                    };
                    current = Some((id, String::new()));
                } else {
                    match current.as_mut() {
                        Some((_, seq)) => seq.extend(line.chars().filter(|c| !c.is_whitespace())),
                        None => {
                            return Err(Error::Parse {
                                line: idx + 1,
                                msg: "sequence data before the first '>' header".into(),
                            })
                        }
                    }
                }
            }
            if let Some((id, seq)) = current {
                records.push(validated(id, &seq, alphabet)?);
            }
        }
    }
    if records.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(records)
}

pub fn load_sequences(
    path: impl AsRef<Path>,
    format: SequenceFormat,
    alphabet: &Alphabet,
) -> Result<Vec<SequenceRecord>> {
    parse_sequences(&fs::read_to_string(path)?, format, alphabet)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MutationNetwork {
    pub graph: WeightedGraph,
    /// `labels[node - 1]` is the sequence id of `node`.
    pub labels: Vec<String>,
}

/// True iff the equal-length inputs differ at exactly one position. Stops
/// scanning at the second mismatch.
pub fn differ_by_one(a: &[u8], b: &[u8]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut mismatches = 0;
    for (x, y) in a.iter().zip(b) {
        if x != y {
            mismatches += 1;
            if mismatches > 1 {
                return false;
            }
        }
    }
    mismatches == 1
}

/// Build the mutation network. Sequences are bucketed by length, buckets are
/// scanned in parallel and the edge list is sorted by `(x, y)`.
pub fn build_network(seqs: &[SequenceRecord]) -> Result<MutationNetwork> {
    if seqs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut buckets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, s) in seqs.iter().enumerate() {
        buckets.entry(s.len()).or_default().push(i);
    }
    let mut pairs: Vec<(NodeId, NodeId)> = buckets
        .par_iter()
        .flat_map_iter(|(_, members)| {
            let mut found = Vec::new();
            for (a, &i) in members.iter().enumerate() {
                for &j in &members[a + 1..] {
                    if differ_by_one(seqs[i].residues.as_bytes(), seqs[j].residues.as_bytes()) {
                        found.push((i + 1, j + 1));
                    }
                }
            }
            found
        })
        .collect();
    pairs.sort_unstable();
    let edges = pairs
        .into_iter()
        .map(|(x, y)| Edge { x, y, c: 1.0 })
        .collect();
    Ok(MutationNetwork {
        graph: WeightedGraph::from_trusted(seqs.len(), edges, false),
        labels: seqs.iter().map(|s| s.id.clone()).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompatibilityReport {
    #[serde(flatten)]
    pub diagnostics: ModelDiagnostics,
    pub edges: usize,
    /// Fit with `k_min` = smallest positive degree; absent when the tail is
    /// too small to fit.
    pub tau_fit: Option<PowerLawFit>,
}

/// Whether the network could be an output of preferential attachment:
/// the mean degree must be an even integer and the graph connected.
pub fn pa_compatibility_report(net: &MutationNetwork) -> CompatibilityReport {
    let g = &net.graph;
    let tau_fit = histogram(g).ok().and_then(|h| {
        h.min_positive_degree()
            .and_then(|k| fit_power_law(&h, k).ok())
    });
    CompatibilityReport {
        diagnostics: ModelDiagnostics::of(g),
        edges: g.edge_count(),
        tau_fit,
    }
}
