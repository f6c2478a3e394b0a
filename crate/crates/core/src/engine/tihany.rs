use serde::{Deserialize, Serialize};

use super::EngineError;
use crate::clawfree::set_shape;
use crate::graph::{Graph, VertexSet};
use crate::solvers::{chromatic_number, clique_number, find_coloring, for_each_clique_of_size, Budget, Coloring};

/// Cliques of size at most five are enough for the claw-free theorem.
pub const DEFAULT_KMAX: usize = 5;

/// `clique` is Tihany: χ(G\K) ≥ χ(G) − |K| + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TihanyCertificate {
    pub clique: VertexSet,
    pub chi_before: usize,
    pub chi_after: usize,
}

impl TihanyCertificate {
    pub fn size(&self) -> usize {
        self.clique.len()
    }

    /// Structural check only; the χ values are taken on trust.
    pub fn is_consistent(&self, g: &Graph) -> bool {
        g.is_clique(&self.clique) && self.chi_after + self.clique.len() > self.chi_before
    }
}

/// `clique` is not Tihany: `coloring` is a (χ − |K|)-coloring of G\K, in
/// ids of G.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    pub clique: VertexSet,
    pub chi_before: usize,
    pub coloring: Coloring,
}

impl Refutation {
    pub fn verify(&self, g: &Graph) -> bool {
        let (h, remap) = g.remove(&self.clique);
        let mut back = vec![usize::MAX; g.n()];
        for (i, &v) in remap.iter().enumerate() {
            back[v] = i;
        }
        g.is_clique(&self.clique)
            && self.coloring.k() + self.clique.len() == self.chi_before
            && self.coloring.remapped(&back).is_proper(&h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TihanyOutcome {
    Tihany(TihanyCertificate),
    NotTihany(Refutation),
}

impl TihanyOutcome {
    pub fn is_tihany(&self) -> bool {
        matches!(self, TihanyOutcome::Tihany(_))
    }

    pub fn certificate(&self) -> Option<&TihanyCertificate> {
        match self {
            TihanyOutcome::Tihany(c) => Some(c),
            TihanyOutcome::NotTihany(_) => None,
        }
    }
}

pub fn is_tihany(g: &Graph, k: &VertexSet, budget: Budget) -> Result<TihanyOutcome, EngineError> {
    let (chi, _) = chromatic_number(g, budget)?;
    is_tihany_with_chi(g, k, chi, budget)
}

/// As [`is_tihany`] with χ(g) already known.
pub fn is_tihany_with_chi(
    g: &Graph,
    k: &VertexSet,
    chi: usize,
    budget: Budget,
) -> Result<TihanyOutcome, EngineError> {
    if !g.is_clique(k) {
        return Err(EngineError::NotAClique(*k));
    }
    if k.len() > chi {
        return Err(EngineError::InvalidArgument(format!(
            "clique of size {} exceeds the given chromatic number {chi}",
            k.len()
        )));
    }
    let (h, remap) = g.remove(k);
    let target = chi - k.len();
    if let Some(col) = find_coloring(&h, target, budget)? {
        return Ok(TihanyOutcome::NotTihany(Refutation {
            clique: *k,
            chi_before: chi,
            coloring: col.remapped(&remap),
        }));
    }
    let (chi_after, _) = chromatic_number(&h, budget)?;
    Ok(TihanyOutcome::Tihany(TihanyCertificate {
        clique: *k,
        chi_before: chi,
        chi_after,
    }))
}

/// Index of a class of `coloring` with no vertex complete to `k`.
fn class_missing_common_neighbor(g: &Graph, k: &VertexSet, coloring: &Coloring) -> Option<usize> {
    let common = g.common_neighbors(k);
    coloring.classes().iter().position(|c| !c.intersects(&common))
}

/// Outcome of a smallest-Tihany-clique search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TihanySearch {
    pub certificate: Option<TihanyCertificate>,
    pub chi: usize,
    pub omega: usize,
    /// Cliques found not Tihany before the answer.
    pub refuted: usize,
    /// Refutations with a color class missing C(K). Always empty unless
    /// something is badly wrong.
    pub basic_violations: Vec<Refutation>,
}

/// The first Tihany clique of size at most `kmax`, smallest size first and
/// lexicographic within a size. Every refutation met on the way is checked
/// for the common-neighbor property of non-Tihany cliques.
pub fn find_min_tihany(g: &Graph, kmax: usize, budget: Budget) -> Result<TihanySearch, EngineError> {
    let (chi, _) = chromatic_number(g, budget)?;
    let (omega, _) = clique_number(g);
    let mut search = TihanySearch {
        certificate: None,
        chi,
        omega,
        refuted: 0,
        basic_violations: Vec::new(),
    };
    for size in 1..=kmax.min(omega) {
        let mut failure = None;
        for_each_clique_of_size(g, size, |c| {
            let k: VertexSet = c.iter().collect();
            match is_tihany_with_chi(g, &k, chi, budget) {
                Ok(TihanyOutcome::Tihany(cert)) => {
                    search.certificate = Some(cert);
                    false
                }
                Ok(TihanyOutcome::NotTihany(r)) => {
                    search.refuted += 1;
                    if class_missing_common_neighbor(g, &k, &r.coloring).is_some() {
                        search.basic_violations.push(r);
                    }
                    true
                }
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if search.certificate.is_some() {
            break;
        }
    }
    Ok(search)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueClass {
    /// C(K) is a clique.
    pub dense: bool,
    /// C(K) is an antimatching.
    pub good: bool,
    pub common: VertexSet,
    pub s_f: VertexSet,
}

/// S_F(K): partners `x` of members `k` of K with x ∈ C(K \ k).
pub fn s_f(g: &Graph, k: &VertexSet, f: &[(usize, usize)]) -> VertexSet {
    let mut out = VertexSet::new();
    for m in k {
        let c = g.common_neighbors(&(*k - VertexSet::singleton(m)));
        for &(u, v) in f {
            let partner = if u == m {
                v
            } else if v == m {
                u
            } else {
                continue;
            };
            if c.contains(partner) {
                out.insert(partner);
            }
        }
    }
    out
}

pub fn classify_clique(g: &Graph, k: &VertexSet, f: &[(usize, usize)]) -> Result<CliqueClass, EngineError> {
    if !g.is_clique(k) {
        return Err(EngineError::NotAClique(*k));
    }
    let mut used = VertexSet::new();
    for &(u, v) in f {
        if u == v || !used.insert(u) || !used.insert(v) {
            return Err(EngineError::InvalidArgument(format!("F pairs are not disjoint at ({u},{v})")));
        }
    }
    let common = g.common_neighbors(k);
    let shape = set_shape(g, &common);
    Ok(CliqueClass {
        dense: shape.is_clique,
        good: shape.is_antimatching,
        common,
        s_f: s_f(g, k, f),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasicCheck {
    /// K is Tihany, nothing to check.
    Vacuous(TihanyCertificate),
    /// `witnesses[i]` is a vertex of class i complete to K.
    Holds { coloring: Coloring, witnesses: Vec<usize> },
    /// Class `class` has no vertex complete to K.
    Violated { coloring: Coloring, class: usize },
}

/// Every class of a (χ − |K|)-coloring of G\K should meet C(K) when K is
/// not Tihany.
pub fn check_lemma_basic(g: &Graph, k: &VertexSet, budget: Budget) -> Result<BasicCheck, EngineError> {
    let refutation = match is_tihany(g, k, budget)? {
        TihanyOutcome::Tihany(c) => return Ok(BasicCheck::Vacuous(c)),
        TihanyOutcome::NotTihany(r) => r,
    };
    let coloring = refutation.coloring;
    if let Some(class) = class_missing_common_neighbor(g, k, &coloring) {
        return Ok(BasicCheck::Violated { coloring, class });
    }
    let common = g.common_neighbors(k);
    let witnesses = coloring
        .classes()
        .iter()
        .map(|c| (*c & common).first().expect("class meets C(K)"))
        .collect();
    Ok(BasicCheck::Holds { coloring, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rim 0..5, hub 5.
    fn w5() -> Graph {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        Graph::new(6, &edges).unwrap()
    }

    fn icosahedron() -> Graph {
        crate::families::named::icosahedron(0).graph
    }

    #[test]
    fn c5_edge_is_tihany() {
        let out = is_tihany(&Graph::cycle(5), &VertexSet::from([0, 1]), Budget::default()).unwrap();
        assert_eq!(
            out,
            TihanyOutcome::Tihany(TihanyCertificate { clique: VertexSet::from([0, 1]), chi_before: 3, chi_after: 2 })
        );
    }

    #[test]
    fn w5_hub_and_rim_vertex_not_tihany() {
        let g = w5();
        match is_tihany(&g, &VertexSet::from([0, 5]), Budget::default()).unwrap() {
            TihanyOutcome::NotTihany(r) => {
                assert_eq!(r.chi_before, 4);
                assert_eq!(r.coloring.k(), 2);
                assert!(r.verify(&g));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn w5_rim_edge_tihany() {
        let out = is_tihany(&w5(), &VertexSet::from([0, 1]), Budget::default()).unwrap();
        assert_eq!(out.certificate().unwrap().chi_after, 3);
    }

    #[test]
    fn non_clique_rejected() {
        let err = is_tihany(&Graph::cycle(5), &VertexSet::from([0, 2]), Budget::default()).unwrap_err();
        assert!(matches!(err, EngineError::NotAClique(_)));
    }

    #[test]
    fn min_search_examples() {
        let s = find_min_tihany(&w5(), 5, Budget::default()).unwrap();
        assert_eq!(s.certificate.unwrap().clique, VertexSet::from([0, 1]));
        assert!(s.basic_violations.is_empty());
        assert!(find_min_tihany(&Graph::cycle(5), 1, Budget::default()).unwrap().certificate.is_none());
        let ico = find_min_tihany(&icosahedron(), 5, Budget::default()).unwrap();
        assert_eq!((ico.chi, ico.omega), (4, 3));
        // α = 3 on 11 vertices keeps χ(G - v) = 4, so a single vertex
        // already qualifies.
        assert_eq!(ico.certificate.unwrap().size(), 1);
    }

    #[test]
    fn min_search_deterministic() {
        let g = icosahedron();
        let a = find_min_tihany(&g, 5, Budget::default()).unwrap();
        let b = find_min_tihany(&g, 5, Budget::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_exhaustion_surfaces() {
        let err = find_min_tihany(&icosahedron(), 5, Budget::nodes(1)).unwrap_err();
        assert!(matches!(err, EngineError::Solve(_)));
    }

    #[test]
    fn classification() {
        let c5 = classify_clique(&Graph::cycle(5), &VertexSet::from([0, 1]), &[]).unwrap();
        assert!(c5.dense && c5.common.is_empty());
        let hub = classify_clique(&w5(), &VertexSet::singleton(5), &[]).unwrap();
        assert!(!hub.dense && !hub.good);
        assert_eq!(hub.common, VertexSet::from([0, 1, 2, 3, 4]));
        // u=0, v=1, x=2 on the path u-v-x.
        let p = Graph::path(3);
        let cls = classify_clique(&p, &VertexSet::from([0, 1]), &[(2, 0)]).unwrap();
        assert_eq!(cls.s_f, VertexSet::singleton(2));
        assert!(classify_clique(&p, &VertexSet::from([0, 1]), &[(2, 0), (0, 1)]).is_err());
    }

    #[test]
    fn singleton_uses_whole_vertex_set() {
        // C({}) = V, so a partner of the lone member always counts.
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(s_f(&g, &VertexSet::singleton(0), &[(0, 2)]), VertexSet::singleton(2));
    }

    #[test]
    fn basic_property_on_w5() {
        let g = w5();
        match check_lemma_basic(&g, &VertexSet::from([5, 0]), Budget::default()).unwrap() {
            BasicCheck::Holds { coloring, witnesses } => {
                assert_eq!(coloring.k(), 2);
                let mut w = witnesses.clone();
                w.sort();
                assert_eq!(w, vec![1, 4]);
                let mut classes: Vec<Vec<usize>> = coloring.classes().iter().map(|c| c.to_vec()).collect();
                classes.sort();
                assert_eq!(classes, vec![vec![1, 3], vec![2, 4]]);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            check_lemma_basic(&Graph::cycle(5), &VertexSet::from([0, 1]), Budget::default()).unwrap(),
            BasicCheck::Vacuous(_)
        ));
    }

    #[test]
    fn basic_property_on_diamond() {
        // K4 minus {2,3}: χ = 3; K = {0,1} leaves two isolated vertices,
        // 1-colorable, and both are complete to K.
        let g = Graph::complete(4).without_edges(&[(2, 3)]);
        match check_lemma_basic(&g, &VertexSet::from([0, 1]), Budget::default()).unwrap() {
            BasicCheck::Holds { witnesses, .. } => assert_eq!(witnesses.len(), 1),
            other => panic!("{other:?}"),
        }
    }
}
