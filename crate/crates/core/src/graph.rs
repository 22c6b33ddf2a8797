//! Weighted dual graphs of resolutions.
//!
//! A vertex is an exceptional curve `E_i` of genus 0 carrying the weight
//! `b_i = -E_i^2 >= 1`; an edge records a transverse intersection point.
//! Vertex order is the input order and every algorithm in the crate breaks
//! ties by the smallest index, so results are reproducible bit for bit.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::GraphError;
use crate::form::IntersectionForm;

/// Connected simple graph of rational curves with positive weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDualGraph {
    ids: Vec<String>,
    weights: Vec<i64>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

/// The vector `k_i = K_X . E_i = b_i - 2` (adjunction on rational curves).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalNumerics(pub Vec<i64>);

impl CanonicalNumerics {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// `K_X` is numerically trivial.
    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    /// `K_X` is nef, i.e. the resolution is minimal.
    pub fn is_nef(&self) -> bool {
        self.0.iter().all(|&k| k >= 0)
    }
}

impl WeightedDualGraph {
    /// Validates and builds a graph from `(id, weight)` pairs and id pairs.
    pub fn new<V, E, S, T>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = (S, i64)>,
        E: IntoIterator<Item = (T, T)>,
        S: Into<String>,
        T: AsRef<str>,
    {
        let mut ids = Vec::new();
        let mut weights = Vec::new();
        let mut index = HashMap::new();
        for (id, weight) in vertices {
            let id: String = id.into();
            if index.contains_key(&id) {
                return Err(GraphError::DuplicateVertex(id));
            }
            if weight < 1 {
                return Err(GraphError::NonPositiveWeight(id, weight));
            }
            index.insert(id.clone(), ids.len());
            ids.push(id);
            weights.push(weight);
        }
        let mut indexed = Vec::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index
                .get(a)
                .ok_or_else(|| GraphError::UnknownEndpoint(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| GraphError::UnknownEndpoint(b.to_string()))?;
            indexed.push((ia, ib));
        }
        Self::assemble(ids, weights, &indexed)
    }

    /// Builds a graph on vertices `v0, v1, ...` from weights and index pairs.
    pub fn from_weights(weights: &[i64], edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let ids = (0..weights.len()).map(|i| format!("v{i}")).collect();
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= weights.len() {
                    return Err(GraphError::UnknownEndpoint(format!("v{x}")));
                }
            }
        }
        for (i, &w) in weights.iter().enumerate() {
            if w < 1 {
                return Err(GraphError::NonPositiveWeight(format!("v{i}"), w));
            }
        }
        Self::assemble(ids, weights.to_vec(), edges)
    }

    /// Path `v0 - v1 - ... ` with the given weights.
    pub fn chain(weights: &[i64]) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..weights.len()).map(|i| (i - 1, i)).collect();
        Self::from_weights(weights, &edges)
    }

    /// Star with center `v0`; each arm is listed from the center outward and
    /// numbered consecutively after the previous arm.
    pub fn star(center: i64, arms: &[Vec<i64>]) -> Result<Self, GraphError> {
        let mut weights = vec![center];
        let mut edges = Vec::new();
        for arm in arms {
            let mut prev = 0;
            for &w in arm {
                let v = weights.len();
                weights.push(w);
                edges.push((prev, v));
                prev = v;
            }
        }
        Self::from_weights(&weights, &edges)
    }

    fn assemble(ids: Vec<String>, weights: Vec<i64>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if ids.is_empty() {
            return Err(GraphError::Empty);
        }
        let n = ids.len();
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(ids[a].clone()));
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(ids[a].clone(), ids[b].clone()));
            }
            normalized.push(key);
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let mut reached = vec![false; n];
        let mut queue = VecDeque::from([0]);
        reached[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if !reached[w] {
                    reached[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if let Some(lost) = reached.iter().position(|r| !r) {
            return Err(GraphError::Disconnected(ids[lost].clone(), ids[0].clone()));
        }
        Ok(WeightedDualGraph {
            ids,
            weights,
            edges: normalized,
            adjacency,
        })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    /// Always false: a valid graph has at least one vertex.
    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|x| x == id)
    }

    /// `b_i = -E_i^2`.
    pub fn weight(&self, i: usize) -> i64 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in input order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours of `i` in ascending index order.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.len()
    }

    /// Degree-one vertices (end curves). A single vertex has none.
    pub fn ends(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.degree(i) == 1).collect()
    }

    pub fn intersection_form(&self) -> IntersectionForm {
        IntersectionForm::from_graph(self)
    }

    pub fn canonical_intersections(&self) -> CanonicalNumerics {
        CanonicalNumerics(self.weights.iter().map(|b| b - 2).collect())
    }

    /// `K_X` is nef iff no curve is a `(-1)`-curve.
    pub fn is_minimal_resolution(&self) -> bool {
        self.weights.iter().all(|&b| b >= 2)
    }

    /// All curves are `(-2)`-curves, i.e. `K_X` is numerically trivial.
    pub fn all_minus_two(&self) -> bool {
        self.weights.iter().all(|&b| b == 2)
    }

    /// Returns the graph whose vertex `k` is vertex `order[k]` of `self`.
    ///
    /// # Panics
    /// If `order` is not a permutation of `0..len()`.
    pub fn reordered(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.len(), "reordering must cover every vertex");
        let mut position = vec![usize::MAX; self.len()];
        for (k, &old) in order.iter().enumerate() {
            assert_eq!(position[old], usize::MAX, "reordering repeats vertex {old}");
            position[old] = k;
        }
        let ids = order.iter().map(|&o| self.ids[o].clone()).collect();
        let weights = order.iter().map(|&o| self.weights[o]).collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (position[a], position[b]))
            .collect();
        Self::assemble(ids, weights, &edges).expect("reordering preserves validity")
    }
}

impl fmt::Display for WeightedDualGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::dsl::emit(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = WeightedDualGraph::new([("v1", 2)], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.weight(0), 2);
        assert!(g.ends().is_empty());
    }

    #[test]
    fn a2_and_duplicate_edge() {
        let g = WeightedDualGraph::new([("v1", 2), ("v2", 2)], [("v1", "v2")]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        let err = WeightedDualGraph::new([("v1", 2), ("v2", 2)], [("v1", "v2"), ("v2", "v1")]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge("v2".into(), "v1".into()));
    }

    #[test]
    fn construction_errors_name_the_culprit() {
        let none: Vec<(&str, &str)> = vec![];
        assert_eq!(
            WeightedDualGraph::new(Vec::<(&str, i64)>::new(), none.clone()).unwrap_err(),
            GraphError::Empty
        );
        assert_eq!(
            WeightedDualGraph::new([("a", 2), ("a", 3)], none.clone()).unwrap_err(),
            GraphError::DuplicateVertex("a".into())
        );
        assert_eq!(
            WeightedDualGraph::new([("a", 2)], [("a", "b")]).unwrap_err(),
            GraphError::UnknownEndpoint("b".into())
        );
        assert_eq!(
            WeightedDualGraph::new([("a", 2)], [("a", "a")]).unwrap_err(),
            GraphError::SelfLoop("a".into())
        );
        assert_eq!(
            WeightedDualGraph::new([("a", 2), ("b", 2)], none.clone()).unwrap_err(),
            GraphError::Disconnected("b".into(), "a".into())
        );
        assert_eq!(
            WeightedDualGraph::new([("a", 0)], none).unwrap_err(),
            GraphError::NonPositiveWeight("a".into(), 0)
        );
    }

    #[test]
    fn canonical_numerics() {
        let e8 = crate::fixtures::e8();
        assert!(e8.canonical_intersections().is_trivial());
        let g = WeightedDualGraph::chain(&[3]).unwrap();
        assert_eq!(g.canonical_intersections().0, vec![1]);
        let star = crate::fixtures::heavy_center_star(5);
        assert_eq!(star.canonical_intersections().0, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn minimality() {
        assert!(crate::fixtures::a_n(4).is_minimal_resolution());
        assert!(!WeightedDualGraph::chain(&[1]).unwrap().is_minimal_resolution());
        assert!(crate::fixtures::rtp_d0().is_minimal_resolution());
    }

    #[test]
    fn star_layout() {
        let g = WeightedDualGraph::star(2, &[vec![3], vec![2, 2]]).unwrap();
        assert_eq!(g.weights(), &[2, 3, 2, 2]);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
    }

    #[test]
    fn reorder_keeps_structure() {
        let g = crate::fixtures::d_n(5);
        let r = g.reordered(&[4, 3, 2, 1, 0]);
        assert_eq!(r.id(0), g.id(4));
        assert_eq!(r.edges().len(), g.edges().len());
        assert_eq!(r.degree(r.index_of(g.id(2)).unwrap()), g.degree(2));
    }
}
