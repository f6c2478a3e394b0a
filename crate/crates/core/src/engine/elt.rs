use serde::{Deserialize, Serialize};

use super::EngineError;
use crate::graph::{Graph, VertexSet};
use crate::solvers::{chromatic_at_least, clique_number, Budget};

/// Bipartitions are enumerated outright, so the vertex count is capped.
pub const ELT_VERTEX_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EltPartition {
    pub s_side: VertexSet,
    pub t_side: VertexSet,
    pub s: usize,
    pub t: usize,
}

fn side_reaches(g: &Graph, side: &VertexSet, bound: usize, budget: Budget) -> Result<bool, EngineError> {
    if side.len() < bound {
        return Ok(false);
    }
    let (h, _) = g.induced(side);
    if clique_number(&h).0 >= bound {
        return Ok(true);
    }
    Ok(chromatic_at_least(&h, bound, budget)?)
}

/// A partition (S, T) of V with χ(G|S) ≥ s and χ(G|T) ≥ t, the first in
/// increasing bitmask order of S.
pub fn elt_partition_exists(g: &Graph, s: usize, t: usize, budget: Budget) -> Result<Option<EltPartition>, EngineError> {
    let n = g.n();
    if n > ELT_VERTEX_LIMIT {
        return Err(EngineError::TooLarge { n, limit: ELT_VERTEX_LIMIT });
    }
    if s < 2 || t < 2 {
        return Err(EngineError::InvalidArgument(format!("s and t must be at least 2, got {s} and {t}")));
    }
    let all = g.vertices();
    for mask in 1u32..(1 << n) - 1 {
        let s_side: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let t_side = all - s_side;
        if s_side.len() < s || t_side.len() < t {
            continue;
        }
        if side_reaches(g, &s_side, s, budget)? && side_reaches(g, &t_side, t, budget)? {
            return Ok(Some(EltPartition { s_side, t_side, s, t }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_splits_into_edge_and_path() {
        let p = elt_partition_exists(&Graph::cycle(5), 2, 2, Budget::default()).unwrap().unwrap();
        assert_eq!(p.s_side, VertexSet::from([0, 1]));
        assert_eq!(p.t_side, VertexSet::from([2, 3, 4]));
    }

    #[test]
    fn k2_has_none() {
        assert_eq!(elt_partition_exists(&Graph::complete(2), 2, 2, Budget::default()).unwrap(), None);
    }

    #[test]
    fn w5_two_three() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let g = Graph::new(6, &edges).unwrap();
        let p = elt_partition_exists(&g, 2, 3, Budget::default()).unwrap().unwrap();
        assert_eq!(p.s_side, VertexSet::from([0, 1]));
    }

    #[test]
    fn limits() {
        assert!(matches!(
            elt_partition_exists(&Graph::empty(17).unwrap(), 2, 2, Budget::default()),
            Err(EngineError::TooLarge { .. })
        ));
        assert!(elt_partition_exists(&Graph::cycle(5), 1, 3, Budget::default()).is_err());
    }
}
