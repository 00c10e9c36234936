//! Simple finite graphs on `{1, ..., n}` and the families whose edge ideals
//! are studied here: cycles, anticycles (cycle complements), the star `F`
//! with center `n` and leaves `1..n-3`, and the modified anticycles `H_n`
//! and `G_n`.
//!
//! Vertices are 1-based throughout, matching the variable indices of the
//! associated edge ideals.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// An unordered edge, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// A simple finite graph on vertices `1..=n`.
///
/// Immutable after construction; all constructors are pure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

fn normalize_edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph from an edge list, normalizing and deduplicating.
    /// Rejects loops and endpoints outside `1..=n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(Error::BadEdge { u, v, n });
            }
            set.insert(normalize_edge(u, v));
        }
        Ok(Self { n, edges: set })
    }

    /// The cycle `C_n` with edges `{i, i+1}` and `{1, n}`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OrderTooSmall {
                family: "cycle",
                min: 3,
                n,
            });
        }
        let mut edges: Vec<Edge> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Self::new(n, edges)
    }

    /// The complement on the same vertex set.
    pub fn complement(&self) -> Self {
        let mut edges = BTreeSet::new();
        for u in 1..self.n {
            for v in (u + 1)..=self.n {
                if !self.edges.contains(&(u, v)) {
                    edges.insert((u, v));
                }
            }
        }
        Self { n: self.n, edges }
    }

    /// The anticycle `A_n = complement(C_n)`; requires `n >= 3`.
    pub fn anticycle(n: usize) -> Result<Self> {
        Ok(Self::cycle(n)?.complement())
    }

    /// The star `F` on `[n]` with center `n` and leaves `1..=n-3`;
    /// requires `n >= 5`.
    pub fn star_f(n: usize) -> Result<Self> {
        if n < 5 {
            return Err(Error::OrderTooSmall {
                family: "star_f",
                min: 5,
                n,
            });
        }
        Self::new(n, (1..=n - 3).map(|i| (i, n)))
    }

    /// The modified anticycle `H_n`: remove `{n-2, n}` and `{1, n-1}` from
    /// `A_n`, then add `{1, n}`.  Equivalently, the union of the anticycle
    /// `A_{n-1}` and the star `F` on `[n]`.  Requires `n >= 6`.
    pub fn h_n(n: usize) -> Result<Self> {
        if n < 6 {
            return Err(Error::OrderTooSmall {
                family: "h_n",
                min: 6,
                n,
            });
        }
        let mut g = Self::anticycle(n)?;
        assert!(g.edges.remove(&normalize_edge(n - 2, n)));
        assert!(g.edges.remove(&normalize_edge(1, n - 1)));
        g.edges.insert((1, n));
        debug_assert_eq!(
            g.edges,
            Self::anticycle(n - 1)
                .unwrap()
                .union(&Self::star_f(n).unwrap())
                .edges
        );
        Ok(g)
    }

    /// The anticycle `A_n` with the edge `{n-2, n}` removed; requires `n >= 5`.
    pub fn g_n(n: usize) -> Result<Self> {
        if n < 5 {
            return Err(Error::OrderTooSmall {
                family: "g_n",
                min: 5,
                n,
            });
        }
        let mut g = Self::anticycle(n)?;
        assert!(g.edges.remove(&normalize_edge(n - 2, n)));
        Ok(g)
    }

    /// The modified anticycle obtained by removing the parallel chords
    /// `{a, b}` and `{a+1, b+1}` (indices mod `n`) from `A_n` and adding the
    /// short edge `{b+1, b}`, together with a dihedral relabeling that maps
    /// it exactly onto [`Graph::h_n`].
    ///
    /// Requires `n >= 7` and `|a - b| ≡ ±2 (mod n)`.  When `b - a ≡ 2` the
    /// relabeling is a pure rotation sending `a -> n-2` and `b -> n`; the
    /// mirrored case needs a reflection.
    pub fn h_family(n: usize, a: usize, b: usize) -> Result<(Self, VertexPermutation)> {
        if n < 7 {
            return Err(Error::OrderTooSmall {
                family: "h_family",
                min: 7,
                n,
            });
        }
        if a == 0 || a > n || b == 0 || b > n {
            return Err(Error::BadEdge { u: a, v: b, n });
        }
        let diff = (a + n - b) % n;
        if diff != 2 && diff != n - 2 {
            return Err(Error::ResidueCondition { a, b, n });
        }
        let wrap = |c: usize| ((c - 1) % n) + 1;
        let mut g = Self::anticycle(n)?;
        assert!(g.edges.remove(&normalize_edge(a, b)));
        assert!(g.edges.remove(&normalize_edge(wrap(a + 1), wrap(b + 1))));
        g.edges.insert(normalize_edge(wrap(b + 1), b));

        let target = Self::h_n(n)?;
        for perm in VertexPermutation::dihedral(n) {
            if perm.apply(&g).edges == target.edges {
                return Ok((g, perm));
            }
        }
        Err(Error::NoNormalizingPermutation)
    }

    /// Union of edge sets on `max(self.n, other.n)` vertices.
    pub fn union(&self, other: &Self) -> Self {
        Self {
            n: self.n.max(other.n),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&normalize_edge(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// The edge ideal `(x_u x_v | {u,v} in E)` in `self.n` variables.
    /// Errors on an edgeless graph.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        self.edge_ideal_in(self.n)
    }

    /// The edge ideal embedded in a polynomial ring with `ambient >= self.n`
    /// variables.  Needed when a graph on `[n-1]` contributes to ideals in
    /// `n` variables.
    pub fn edge_ideal_in(&self, ambient: usize) -> Result<MonomialIdeal> {
        if self.edges.is_empty() {
            return Err(Error::EdgelessGraph);
        }
        if ambient < self.n {
            return Err(Error::AmbientTooSmall {
                ambient,
                n: self.n,
            });
        }
        let gens = self
            .edges
            .iter()
            .map(|&(u, v)| Monomial::from_indices(ambient, &[u, v]))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(gens)
    }

    /// True iff `e1` and `e2` form a gap: both are edges, they are disjoint,
    /// and no edge of the graph joins an endpoint of one to an endpoint of
    /// the other.
    pub fn is_gap(&self, e1: Edge, e2: Edge) -> bool {
        let (a, b) = normalize_edge(e1.0, e1.1);
        let (c, d) = normalize_edge(e2.0, e2.1);
        if !self.edges.contains(&(a, b)) || !self.edges.contains(&(c, d)) {
            return false;
        }
        if a == c || a == d || b == c || b == d {
            return false;
        }
        ![(a, c), (a, d), (b, c), (b, d)]
            .iter()
            .any(|&(u, v)| self.has_edge(u, v))
    }

    /// First gap in deterministic (sorted edge pair) order, or `None` when
    /// the graph is gap-free.
    pub fn find_gap(&self) -> Option<(Edge, Edge)> {
        let edges: Vec<Edge> = self.edges.iter().copied().collect();
        for (i, &e1) in edges.iter().enumerate() {
            for &e2 in &edges[i + 1..] {
                if self.is_gap(e1, e2) {
                    return Some((e1, e2));
                }
            }
        }
        None
    }

    /// True iff the graph has at least one edge and every edge contains the
    /// vertex `center`.
    pub fn is_star_centered_at(&self, center: usize) -> bool {
        !self.edges.is_empty() && self.edges.iter().all(|&(u, v)| u == center || v == center)
    }

    /// Leaves of a star centered at `center` (endpoints other than the
    /// center), ascending.
    pub fn star_leaves(&self, center: usize) -> Vec<usize> {
        self.edges
            .iter()
            .map(|&(u, v)| if u == center { v } else { u })
            .collect()
    }
}

/// True iff every edge of `g0` is adjacent to some edge of the star `f0`,
/// i.e. meets the leaf set of `f0`.  (`g0` avoids the center, so meeting an
/// edge of `f0` means containing one of its leaves.)  Vacuously true for an
/// edgeless `g0`.  Errors if `f0` is not a star centered at its last vertex.
pub fn star_adjacency_condition(g0: &Graph, f0: &Graph) -> Result<bool> {
    let center = f0.n();
    if !f0.is_star_centered_at(center) {
        return Err(Error::NotAStar { center });
    }
    let leaves: BTreeSet<usize> = f0.star_leaves(center).into_iter().collect();
    Ok(g0
        .edges()
        .all(|(u, v)| leaves.contains(&u) || leaves.contains(&v)))
}

/// A relabeling of the vertices `1..=n`; `image(v)` is the new label of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexPermutation {
    images: Vec<usize>,
}

impl VertexPermutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// All `2n` dihedral relabelings of `1..=n` (rotations first, then
    /// reflections), i.e. the symmetries of the cycle and hence of the
    /// anticycle.
    pub fn dihedral(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(2 * n);
        for r in 0..n {
            out.push(Self {
                images: (1..=n).map(|k| (k - 1 + r) % n + 1).collect(),
            });
        }
        for c in 0..n {
            out.push(Self {
                images: (1..=n).map(|k| (c + n - (k - 1)) % n + 1).collect(),
            });
        }
        out
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// True iff the image list is a bijection on `1..=n`.
    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images.iter().all(|&v| {
            if v == 0 || v > seen.len() || seen[v - 1] {
                false
            } else {
                seen[v - 1] = true;
                true
            }
        })
    }

    /// The relabeled graph.
    pub fn apply(&self, g: &Graph) -> Graph {
        assert_eq!(self.n(), g.n(), "permutation and graph order differ");
        Graph {
            n: g.n(),
            edges: g
                .edges()
                .map(|(u, v)| normalize_edge(self.image(u), self.image(v)))
                .collect(),
        }
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<Edge>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Graph::new(raw.n, raw.edges).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_set(pairs: &[(usize, usize)]) -> BTreeSet<Edge> {
        pairs.iter().map(|&(u, v)| normalize_edge(u, v)).collect()
    }

    #[test]
    fn cycle_4() {
        let c = Graph::cycle(4).unwrap();
        assert_eq!(c.edges, edge_set(&[(1, 2), (2, 3), (3, 4), (1, 4)]));
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn anticycle_5() {
        let a = Graph::anticycle(5).unwrap();
        assert_eq!(a.edges, edge_set(&[(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]));
    }

    #[test]
    fn anticycle_edge_count() {
        for n in 4..=12 {
            let a = Graph::anticycle(n).unwrap();
            assert_eq!(a.num_edges(), n * (n - 3) / 2, "n = {n}");
        }
    }

    #[test]
    fn complement_is_involution() {
        for n in 3..=9 {
            let g = Graph::cycle(n).unwrap();
            assert_eq!(g.complement().complement(), g);
            let a = Graph::anticycle(n).unwrap();
            assert_eq!(a.complement(), Graph::cycle(n).unwrap());
        }
    }

    #[test]
    fn star_f_examples() {
        let f = Graph::star_f(6).unwrap();
        assert_eq!(f.edges, edge_set(&[(1, 6), (2, 6), (3, 6)]));

        let f7 = Graph::star_f(7).unwrap();
        assert_eq!(f7.num_edges(), 4);
        assert!(f7.edges().all(|(_, v)| v == 7));

        for n in 5..=9 {
            let f = Graph::star_f(n).unwrap();
            assert_eq!(f.degree(n), n - 3);
            for leaf in 1..=n - 3 {
                assert_eq!(f.degree(leaf), 1);
            }
        }
        assert!(Graph::star_f(4).is_err());
    }

    #[test]
    fn h_n_is_union_of_anticycle_and_star() {
        // n = 6: A_5 edges plus the star edges at 6.
        let h = Graph::h_n(6).unwrap();
        assert_eq!(
            h.edges,
            edge_set(&[
                (1, 3),
                (1, 4),
                (1, 6),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 5),
                (3, 6)
            ])
        );
        for n in 6..=10 {
            let h = Graph::h_n(n).unwrap();
            let union = Graph::anticycle(n - 1)
                .unwrap()
                .union(&Graph::star_f(n).unwrap());
            assert_eq!(h, union, "n = {n}");
        }
        assert!(Graph::h_n(5).is_err());
    }

    #[test]
    fn g_n_examples() {
        let g = Graph::g_n(5).unwrap();
        let mut expected = Graph::anticycle(5).unwrap();
        assert!(expected.edges.remove(&(3, 5)));
        assert_eq!(g, expected);
        assert!(Graph::g_n(4).is_err());
    }

    #[test]
    fn h_family_identity_case() {
        let (h, perm) = Graph::h_family(7, 5, 7).unwrap();
        assert!(perm.is_identity());
        assert_eq!(h, Graph::h_n(7).unwrap());
    }

    #[test]
    fn h_family_rotation_case() {
        let (h, perm) = Graph::h_family(7, 3, 5).unwrap();
        // Rotation by 2: k -> ((k+1) mod 7) + 1.
        let expected: Vec<usize> = (1..=7).map(|k| ((k + 1) % 7) + 1).collect();
        assert_eq!(perm.images(), &expected[..]);
        assert_eq!(perm.apply(&h), Graph::h_n(7).unwrap());
    }

    #[test]
    fn h_family_reflection_case() {
        let (h, perm) = Graph::h_family(7, 5, 3).unwrap();
        assert!(!perm.is_identity());
        assert_eq!(perm.apply(&h), Graph::h_n(7).unwrap());
        // b - a = -2 needs an orientation reversal: consecutive vertices map
        // to consecutive vertices in the opposite cyclic direction.
        let a = perm.image(1);
        let b = perm.image(2);
        assert_eq!((a + 7 - b) % 7, 1, "expected a reflection, got {perm:?}");
    }

    #[test]
    fn h_family_all_valid_pairs_normalize() {
        for n in 7..=10 {
            let target = Graph::h_n(n).unwrap();
            for a in 1..=n {
                for b in 1..=n {
                    let diff = (a + n - b) % n;
                    if diff != 2 && diff != n - 2 {
                        assert!(Graph::h_family(n, a, b).is_err());
                        continue;
                    }
                    let (h, perm) = Graph::h_family(n, a, b).unwrap();
                    assert!(perm.is_bijection());
                    assert_eq!(perm.apply(&h), target, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn edge_ideal_examples() {
        let h = Graph::h_n(6).unwrap();
        let ideal = h.edge_ideal().unwrap();
        assert_eq!(ideal.num_generators(), h.num_edges());
        for (u, v) in h.edges() {
            let quadric = Monomial::from_indices(6, &[u, v]).unwrap();
            assert!(ideal.generators().contains(&quadric));
        }

        let triangle = Graph::new(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
        let ti = triangle.edge_ideal().unwrap();
        assert_eq!(ti.num_generators(), 3);

        let edgeless = Graph::new(3, []).unwrap();
        assert!(matches!(edgeless.edge_ideal(), Err(Error::EdgelessGraph)));
    }

    #[test]
    fn edge_ideal_ambient_embedding() {
        let a5 = Graph::anticycle(5).unwrap();
        let embedded = a5.edge_ideal_in(6).unwrap();
        assert_eq!(embedded.n(), 6);
        assert_eq!(embedded.num_generators(), 5);
        assert!(a5.edge_ideal_in(4).is_err());
    }

    #[test]
    fn gap_examples() {
        let g5 = Graph::g_n(5).unwrap();
        let gap = g5.find_gap().unwrap();
        assert_eq!(gap, ((1, 3), (2, 5)));
        assert!(g5.is_gap((1, 3), (2, 5)));

        let triangle = Graph::new(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(triangle.find_gap(), None);

        let two = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(two.find_gap(), Some(((1, 2), (3, 4))));
    }

    #[test]
    fn gap_predicate_rejects_non_gaps() {
        let g5 = Graph::g_n(5).unwrap();
        // {1,3} and {2,4} are joined by {1,4}.
        assert!(!g5.is_gap((1, 3), (2, 4)));
        // Shared endpoint.
        assert!(!g5.is_gap((1, 3), (1, 4)));
        // Not an edge.
        assert!(!g5.is_gap((1, 2), (3, 5)));
    }

    #[test]
    fn star_adjacency_examples() {
        for n in 6..=10 {
            let g = Graph::anticycle(n - 1).unwrap();
            let f = Graph::star_f(n).unwrap();
            assert!(star_adjacency_condition(&g, &f).unwrap(), "n = {n}");
        }

        let lone = Graph::new(5, [(4, 5)]).unwrap();
        let f6 = Graph::star_f(6).unwrap();
        assert!(!star_adjacency_condition(&lone, &f6).unwrap());

        let edgeless = Graph::new(5, []).unwrap();
        assert!(star_adjacency_condition(&edgeless, &f6).unwrap());

        let not_star = Graph::new(6, [(1, 2), (3, 6)]).unwrap();
        assert!(matches!(
            star_adjacency_condition(&edgeless, &not_star),
            Err(Error::NotAStar { center: 6 })
        ));
    }

    // Raising the larger endpoint of an anticycle edge (below the top
    // vertex) yields another edge; exhaustive over small orders.
    #[test]
    fn anticycle_endpoint_raising() {
        for n in 6..=10usize {
            let g = Graph::anticycle(n - 1).unwrap();
            for (i1, i2) in g.edges() {
                for j2 in i2..n - 1 {
                    if i1 != j2 {
                        assert!(
                            g.has_edge(i1, j2),
                            "n={n} edge=({i1},{i2}) j2={j2}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn graph_json_round_trip() {
        let g = Graph::g_n(5).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":5,"edges":[[1,3],[1,4],[2,4],[2,5]]}"#);
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);

        assert!(serde_json::from_str::<Graph>(r#"{"n":3,"edges":[[1,4]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"n":3,"edges":[[2,2]]}"#).is_err());
    }

    #[test]
    fn bad_edges_rejected() {
        assert!(Graph::new(3, [(0, 1)]).is_err());
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(1, 4)]).is_err());
    }
}
