//! Linear and circular interval graphs, plain and fuzzy.
//!
//! Positions are integers: the line is `0..=length`, the circle is
//! `Z/length`. An arc runs clockwise from `start` to `end` (on the line,
//! `start <= end`).

use serde::{Deserialize, Serialize};

use super::thickening::{thicken, BipartitePattern, FuzzyPair, Thickening, ThickeningSpec};
use super::FamilyError;
use crate::graph::{Graph, LabeledGraph, Labeling, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalSpec {
    pub circular: bool,
    pub length: usize,
    /// Position of each vertex.
    pub points: Vec<usize>,
    pub intervals: Vec<Arc>,
    /// Pairs of vertices sitting at the two ends of one interval.
    pub fuzzy: Vec<(usize, usize)>,
}

impl IntervalSpec {
    fn span(&self, a: &Arc) -> usize {
        if self.circular {
            (a.end + self.length - a.start) % self.length
        } else {
            a.end - a.start
        }
    }

    pub fn contains(&self, a: &Arc, pos: usize) -> bool {
        if self.circular {
            (pos + self.length - a.start) % self.length <= self.span(a)
        } else {
            a.start <= pos && pos <= a.end
        }
    }

    /// Unit segment `(t, t+1)` lies inside the arc.
    fn covers_segment(&self, a: &Arc, t: usize) -> bool {
        (t + self.length - a.start) % self.length < self.span(a)
    }

    /// Some set of at most three intervals whose union is the circle.
    pub fn covering_triple(&self) -> Option<Vec<usize>> {
        if !self.circular {
            return None;
        }
        let k = self.intervals.len();
        let covers = |ids: &[usize]| {
            (0..self.length).all(|t| ids.iter().any(|&i| self.covers_segment(&self.intervals[i], t)))
        };
        for i in 0..k {
            if covers(&[i]) {
                return Some(vec![i]);
            }
            for j in i + 1..k {
                if covers(&[i, j]) {
                    return Some(vec![i, j]);
                }
                for l in j + 1..k {
                    if covers(&[i, j, l]) {
                        return Some(vec![i, j, l]);
                    }
                }
            }
        }
        None
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let err = |m: String| Err(FamilyError::Interval(m));
        if self.length == 0 {
            return err("zero length".into());
        }
        let limit = if self.circular { self.length } else { self.length + 1 };
        let mut seen = std::collections::BTreeSet::new();
        for (v, &p) in self.points.iter().enumerate() {
            if p >= limit || !seen.insert(p) {
                return err(format!("vertex {v} at invalid or repeated position {p}"));
            }
        }
        let mut ends = std::collections::BTreeSet::new();
        for (i, a) in self.intervals.iter().enumerate() {
            if a.start >= limit || a.end >= limit || a.start == a.end || (!self.circular && a.start > a.end) {
                return err(format!("interval {i} is degenerate or out of range"));
            }
            if !ends.insert(a.start) || !ends.insert(a.end) {
                return err(format!("interval {i} shares an endpoint"));
            }
        }
        if let Some(t) = self.covering_triple() {
            return err(format!("intervals {t:?} cover the circle"));
        }
        let mut used = VertexSet::new();
        for &(u, v) in &self.fuzzy {
            if u >= self.points.len() || v >= self.points.len() || u == v {
                return err(format!("fuzzy pair ({u},{v}) out of range"));
            }
            let (pu, pv) = (self.points[u], self.points[v]);
            let owner = self
                .intervals
                .iter()
                .position(|a| (a.start, a.end) == (pu, pv) || (a.start, a.end) == (pv, pu));
            let Some(i) = owner else {
                return err(format!("fuzzy pair ({u},{v}) is not the two ends of an interval"));
            };
            // A second interval holding both ends would let the fuzzy
            // pattern create a claw.
            let other = self.intervals.iter().enumerate().any(|(j, a)| {
                j != i && self.contains(a, pu) && self.contains(a, pv)
            });
            if other {
                return err(format!("fuzzy pair ({u},{v}) also lies in another interval"));
            }
            if !used.insert(u) || !used.insert(v) {
                return err(format!("vertex reused in fuzzy pair ({u},{v})"));
            }
        }
        Ok(())
    }
}

/// The plain interval graph: adjacency by membership in a common interval.
/// Vertices are named `p{position}`.
pub fn interval_graph(spec: &IntervalSpec) -> Result<LabeledGraph, FamilyError> {
    spec.validate()?;
    let n = spec.points.len();
    let mut edges = Vec::new();
    for a in &spec.intervals {
        let inside: Vec<usize> = (0..n).filter(|&v| spec.contains(a, spec.points[v])).collect();
        for (i, &u) in inside.iter().enumerate() {
            for &v in &inside[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, &edges).map_err(|e| FamilyError::Interval(e.to_string()))?;
    let labels = Labeling::new(spec.points.iter().map(|p| format!("p{p}")).collect());
    Ok(LabeledGraph::new(g, labels))
}

/// Thickening of the interval graph over the fuzzy endpoint pairs;
/// `patterns[i]` goes with `spec.fuzzy[i]`.
pub fn fuzzy_interval_graph(
    spec: &IntervalSpec,
    sizes: &[usize],
    patterns: &[BipartitePattern],
) -> Result<Thickening, FamilyError> {
    let base = interval_graph(spec)?;
    if patterns.len() != spec.fuzzy.len() {
        return Err(super::invalid("one pattern per fuzzy pair"));
    }
    let fuzzy = spec
        .fuzzy
        .iter()
        .zip(patterns)
        .map(|(&(u, v), p)| FuzzyPair { u, v, pattern: p.clone() })
        .collect();
    let tspec = ThickeningSpec {
        base: base.graph,
        sizes: sizes.to_vec(),
        fuzzy,
    };
    thicken(&tspec, &base.labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clawfree::is_claw_free;

    #[test]
    fn line_example() {
        let spec = IntervalSpec {
            circular: false,
            length: 4,
            points: vec![0, 1, 3],
            intervals: vec![Arc { start: 0, end: 2 }],
            fuzzy: vec![],
        };
        let g = interval_graph(&spec).unwrap().graph;
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn circle_of_consecutive_pairs_is_c5() {
        // Points at every fourth position of a length-20 circle; interval i runs
        // from point i to point i+1, endpoints shifted to stay distinct.
        let spec = IntervalSpec {
            circular: true,
            length: 20,
            points: vec![0, 4, 8, 12, 16],
            intervals: (0..5)
                .map(|i| Arc { start: (4 * i + 19) % 20, end: (4 * i + 5) % 20 })
                .collect(),
            fuzzy: vec![],
        };
        let g = interval_graph(&spec).unwrap().graph;
        assert_eq!(g, Graph::cycle(5));
    }

    #[test]
    fn three_covering_intervals_rejected() {
        let spec = IntervalSpec {
            circular: true,
            length: 12,
            points: vec![0, 4, 8],
            intervals: vec![Arc { start: 0, end: 5 }, Arc { start: 4, end: 9 }, Arc { start: 8, end: 1 }],
            fuzzy: vec![],
        };
        match interval_graph(&spec) {
            Err(FamilyError::Interval(m)) => assert!(m.contains("cover")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn shared_endpoints_rejected() {
        let spec = IntervalSpec {
            circular: false,
            length: 5,
            points: vec![0, 2],
            intervals: vec![Arc { start: 0, end: 2 }, Arc { start: 2, end: 4 }],
            fuzzy: vec![],
        };
        assert!(interval_graph(&spec).is_err());
    }

    #[test]
    fn fuzzy_endpoints() {
        let spec = IntervalSpec {
            circular: true,
            length: 20,
            points: vec![0, 4, 8, 12, 16],
            intervals: vec![
                Arc { start: 0, end: 8 },
                Arc { start: 4, end: 12 },
                Arc { start: 9, end: 17 },
                Arc { start: 15, end: 3 },
            ],
            fuzzy: vec![(0, 2)],
        };
        let t = fuzzy_interval_graph(&spec, &[2, 1, 2, 1, 1], &[BipartitePattern::block(2, 2, 1, 1)]).unwrap();
        assert!(is_claw_free(&t.graph.graph));
        let bad = IntervalSpec { fuzzy: vec![(0, 1)], ..spec };
        assert!(interval_graph(&bad).is_err());
    }
}
