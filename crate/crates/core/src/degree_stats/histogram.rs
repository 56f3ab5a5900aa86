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

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Node counts `N_k` per degree `k` over a graph of `n` nodes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeHistogram {
    counts: BTreeMap<u64, u64>,
    n: u64,
}

/// Degree histogram of an unweighted or multiplicity-weighted graph; loops
/// count twice.
pub fn histogram(g: &WeightedGraph) -> Result<DegreeHistogram> {
    if g.is_unweighted() {
        return Ok(histogram_from_degrees(
            g.multiplicity_degrees().into_iter().skip(1),
        ));
    }
    let mut degrees = Vec::with_capacity(g.n());
    for (node, mu) in g.node_weights().iter() {
        let k = mu.round();
        if (mu - k).abs() > 1e-9 {
            return Err(Error::NonIntegerDegree { node, degree: mu });
        }
        degrees.push(k as u64);
    }
    Ok(histogram_from_degrees(degrees))
}

pub fn histogram_from_degrees<I: IntoIterator<Item = u64>>(degrees: I) -> DegreeHistogram {
    let mut h = DegreeHistogram::default();
    for k in degrees {
        h.push(k);
    }
    h
}

impl DegreeHistogram {
    pub fn push(&mut self, k: u64) {
        *self.counts.entry(k).or_insert(0) += 1;
        self.n += 1;
    }

    /// Pool another histogram into this one.
    pub fn merge(&mut self, other: &DegreeHistogram) {
        for (&k, &c) in &other.counts {
            *self.counts.entry(k).or_insert(0) += c;
        }
        self.n += other.n;
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn count(&self, k: u64) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// `(k, N_k)` pairs with `N_k > 0`, increasing in `k`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.counts.keys().next_back().copied()
    }

    pub fn min_positive_degree(&self) -> Option<u64> {
        self.counts.range(1..).next().map(|(&k, _)| k)
    }

    pub fn pmf(&self, k: u64) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.count(k) as f64 / self.n as f64
        }
    }

    /// `N_{>= s}`.
    pub fn count_at_least(&self, s: u64) -> u64 {
        self.counts.range(s..).map(|(_, &c)| c).sum()
    }

    /// `N_{>= s} / n`.
    pub fn ccdf(&self, s: u64) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.count_at_least(s) as f64 / self.n as f64
        }
    }

    /// Rows `(k, N_k, pmf, ccdf)` for every observed degree.
    pub fn rows(&self) -> Vec<(u64, u64, f64, f64)> {
        let mut tail = self.n;
        let n = self.n as f64;
        self.counts
            .iter()
            .map(|(&k, &c)| {
                let row = (k, c, c as f64 / n, tail as f64 / n);
                tail -= c;
                row
            })
            .collect()
    }

    pub fn mean(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        self.iter().map(|(k, c)| k as f64 * c as f64).sum::<f64>() / self.n as f64
    }

    /// Population variance of the degree sequence.
    pub fn variance(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        let mean = self.mean();
        self.iter()
            .map(|(k, c)| c as f64 * (k as f64 - mean).powi(2))
            .sum::<f64>()
            / self.n as f64
    }

    /// Total-variation distance to a reference law on `0, 1, 2, ...`.
    ///
    /// Mass of the reference beyond the largest observed degree is taken from
    /// `1 - sum`, so `pmf` must be normalised.
    pub fn total_variation<F: Fn(u64) -> f64>(&self, pmf: F) -> f64 {
        let top = self.max_degree().unwrap_or(0);
        let mut covered = 0.0;
        let mut dist = 0.0;
        for k in 0..=top {
            let p = pmf(k);
            covered += p;
            dist += (self.pmf(k) - p).abs();
        }
        0.5 * (dist + (1.0 - covered).max(0.0))
    }
}

/// Properties that decide whether a graph can be an output of the
/// preferential attachment model: the mean degree must be an even integer
/// `2m` and the graph must be connected.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModelDiagnostics {
    pub n: usize,
    pub mean_degree: f64,
    pub is_even_mean: bool,
    pub connected: bool,
    pub component_sizes: Vec<usize>,
}

impl ModelDiagnostics {
    pub fn of(g: &WeightedGraph) -> Self {
        let mean_degree = g.mean_degree();
        let half = mean_degree / 2.0;
        let is_even_mean = half >= 1.0 - 1e-9 && (half - half.round()).abs() <= 1e-9;
        let mut component_sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
        component_sizes.sort_unstable_by(|a, b| b.cmp(a));
        ModelDiagnostics {
            n: g.n(),
            mean_degree,
            is_even_mean,
            connected: component_sizes.len() == 1,
            component_sizes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        let empty = histogram(&WeightedGraph::empty(3)).unwrap();
        assert_eq!(empty.iter().collect::<Vec<_>>(), vec![(0, 3)]);

        let k4 =
            WeightedGraph::from_pairs(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(
            histogram(&k4).unwrap().iter().collect::<Vec<_>>(),
            vec![(3, 4)]
        );

        let path = WeightedGraph::from_pairs(3, [(1, 2), (2, 3)]).unwrap();
        let h = histogram(&path).unwrap();
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![(1, 2), (2, 1)]);
        assert_eq!(h.count_at_least(2), 1);
        assert_eq!(h.rows()[0], (1, 2, 2.0 / 3.0, 1.0));
    }

    #[test]
    fn weighted_graphs() {
        let integral = WeightedGraph::from_edges(2, [(1, 2, 2.0)], false).unwrap();
        assert_eq!(histogram(&integral).unwrap().count(2), 2);
        let fractional = WeightedGraph::from_edges(2, [(1, 2, 0.5)], false).unwrap();
        assert!(matches!(
            histogram(&fractional),
            Err(Error::NonIntegerDegree { .. })
        ));
    }

    #[test]
    fn loops_count_twice() {
        let g =
            WeightedGraph::from_edges(2, [(1, 1, 1.0), (1, 1, 1.0), (1, 2, 1.0)], true).unwrap();
        let h = histogram(&g).unwrap();
        assert_eq!(h.count(5), 1);
        assert_eq!(h.mean(), 3.0);
    }

    #[test]
    fn star_diagnostics() {
        let star = WeightedGraph::from_pairs(5, [(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        let d = ModelDiagnostics::of(&star);
        assert!((d.mean_degree - 1.6).abs() < 1e-15);
        assert!(!d.is_even_mean);
        assert!(d.connected);
        let cycle = WeightedGraph::from_pairs(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(ModelDiagnostics::of(&cycle).is_even_mean);
    }

    #[test]
    fn total_variation_against_itself() {
        let h = histogram_from_degrees([1, 1, 2, 3]);
        let tv = h.total_variation(|k| h.pmf(k));
        assert!(tv.abs() < 1e-15);
        let shifted = h.total_variation(|k| if k == 0 { 1.0 } else { 0.0 });
        assert!((shifted - 1.0).abs() < 1e-15);
    }
}
