use super::EngineError;
use crate::clawfree::CliqueCutset;
use crate::graph::{Graph, VertexSet};
use crate::solvers::{chromatic_number, Budget, Coloring};

/// An optimal coloring of `g|(side ∪ k)` in ids of `g`, reordered so that
/// class i holds the i-th member of `k`.
fn side_coloring(g: &Graph, side: &VertexSet, k: &VertexSet, budget: Budget) -> Result<Vec<VertexSet>, EngineError> {
    let (h, remap) = g.induced(&(*side | *k));
    let (_, col) = chromatic_number(&h, budget)?;
    let mut classes = col.remapped(&remap).into_classes();
    for (i, v) in k.iter().enumerate() {
        let at = classes.iter().position(|c| c.contains(v)).expect("coloring covers k");
        classes.swap(i, at);
    }
    Ok(classes)
}

/// Colors the two sides of a clique cutset separately and glues the
/// colorings along the cutset, giving a max(χ_A, χ_B)-coloring of `g`.
pub fn merge_cutset_colorings(
    g: &Graph,
    k: &VertexSet,
    a: &VertexSet,
    b: &VertexSet,
    budget: Budget,
) -> Result<Coloring, EngineError> {
    let cut = CliqueCutset { k: *k, a: *a, b: *b };
    if !cut.verify(g) {
        return Err(EngineError::InvalidCutset(format!("k={k:?} a={a:?} b={b:?}")));
    }
    let mut left = side_coloring(g, a, k, budget)?;
    let mut right = side_coloring(g, b, k, budget)?;
    if right.len() > left.len() {
        std::mem::swap(&mut left, &mut right);
    }
    for (i, class) in right.into_iter().enumerate() {
        left[i] |= class;
    }
    let merged = Coloring::new(left);
    assert!(merged.is_proper(g), "merged cutset coloring is improper");
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn merge(g: &Graph, k: &[usize], a: &[usize], b: &[usize]) -> Result<Coloring, EngineError> {
        merge_cutset_colorings(g, &k.into(), &a.into(), &b.into(), Budget::default())
    }

    #[test]
    fn path_on_middle() {
        let c = merge(&Graph::path(3), &[1], &[0], &[2]).unwrap();
        assert_eq!(c.k(), 2);
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let c = merge(&g, &[2], &[0, 1], &[3, 4]).unwrap();
        assert_eq!(c.k(), 3);
        assert!(c.is_proper(&g));
    }

    #[test]
    fn bowtie_with_pendant() {
        // Bowtie on 0..5 centred at 2, pendant 5 on tip 4; cut at 4.
        let g = Graph::new(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
        let c = merge(&g, &[4], &[0, 1, 2, 3], &[5]).unwrap();
        assert_eq!(c.k(), 3);
        // Swapping the sides gives the same count.
        assert_eq!(merge(&g, &[4], &[5], &[0, 1, 2, 3]).unwrap().k(), 3);
    }

    #[test]
    fn larger_cutset_aligns_classes() {
        // Two K4s sharing the edge {0,1}.
        let g = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)])
            .unwrap();
        let c = merge(&g, &[0, 1], &[2, 3], &[4, 5]).unwrap();
        assert_eq!(c.k(), 4);
    }

    #[test]
    fn invalid_separation() {
        let g = Graph::cycle(4);
        assert!(matches!(merge(&g, &[0], &[1], &[2, 3]), Err(EngineError::InvalidCutset(_))));
        assert!(matches!(merge(&g, &[0, 2], &[1], &[3]), Err(EngineError::InvalidCutset(_))));
    }
}
