//! Exhaustive enumeration of weighted dual graphs up to isomorphism.
//!
//! Trees are generated shape by shape (unlabeled trees grown by adding
//! leaves) and every weight vector is reduced to a canonical code: the
//! AHU encoding rooted at a center of the tree, taking the smaller code
//! for a bicentral tree. Cyclic graphs, admitted only for small vertex
//! counts, are reduced by the automorphism group of the underlying graph.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::classify::{AdePattern, Classification, StructuralCase};
use crate::error::{Error, Result};
use crate::graph::WeightedDualGraph;
use crate::quotient::DingMatch;

/// Largest vertex count accepted for tree enumeration.
pub const DEFAULT_CAP: usize = 9;
/// Largest vertex count accepted when cyclic graphs are admitted.
pub const ALL_GRAPHS_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Trees,
    AllGraphs,
}

/// Row filters; a row is kept when every listed predicate holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    NegativeDefinite,
    Minimal,
    Rational,
    NonGorenstein,
    NearlyGorenstein,
    AlmostReduced,
    LogTerminal,
    NonCyclic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_vertices: usize,
    pub min_vertices: usize,
    pub min_weight: i64,
    pub max_weight: i64,
    pub shape: Shape,
    pub predicates: Vec<Predicate>,
    /// Evaluate the log-terminal cross-check, Pinkham–Demazure data and the
    /// quotient list lookup for every row.
    pub quotient_data: bool,
    pub cap: usize,
}

impl EnumerationConfig {
    /// Trees with `1..=max_vertices` vertices and weights `2..=max_weight`.
    pub fn new(max_vertices: usize, max_weight: i64) -> Self {
        EnumerationConfig {
            max_vertices,
            min_vertices: 1,
            min_weight: 2,
            max_weight,
            shape: Shape::Trees,
            predicates: Vec::new(),
            quotient_data: true,
            cap: DEFAULT_CAP,
        }
    }

    pub fn all_graphs(mut self) -> Self {
        self.shape = Shape::AllGraphs;
        self
    }

    pub fn with_min_vertices(mut self, n: usize) -> Self {
        self.min_vertices = n;
        self
    }

    pub fn with_min_weight(mut self, b: i64) -> Self {
        self.min_weight = b;
        self
    }

    pub fn with_predicates(mut self, predicates: &[Predicate]) -> Self {
        self.predicates = predicates.to_vec();
        self
    }

    pub fn lattice_only(mut self) -> Self {
        self.quotient_data = false;
        self
    }

    fn effective_cap(&self) -> usize {
        match self.shape {
            Shape::Trees => self.cap,
            Shape::AllGraphs => self.cap.min(ALL_GRAPHS_CAP),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub negative_definite: bool,
    pub minimal: bool,
    pub rational: bool,
    pub gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub almost_reduced: bool,
    /// `None` when not evaluated (lattice-only runs, non-minimal or
    /// indefinite graphs).
    pub log_terminal: Option<bool>,
    pub chain: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    /// Canonical code; equal for isomorphic weighted graphs.
    pub key: String,
    pub n: usize,
    /// Weights in ascending order.
    pub weights: Vec<i64>,
    pub flags: Flags,
    pub multiplicity: Option<i64>,
    pub trace_colength: Option<i64>,
    pub structural_case: Option<StructuralCase>,
    pub ade: Option<AdePattern>,
    pub ding: Option<DingMatch>,
    pub end_curve_colength: Option<i64>,
    /// Representative with vertices in canonical order.
    #[serde(serialize_with = "serialize_graph")]
    pub graph: WeightedDualGraph,
}

fn serialize_graph<S: Serializer>(g: &WeightedDualGraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::dsl::emit(g))
}

impl CensusRow {
    fn from_graph(key: String, graph: WeightedDualGraph, quotient_data: bool) -> Result<Self> {
        let c = if quotient_data {
            Classification::of(&graph)?
        } else {
            Classification::lattice_only(&graph)?
        };
        let mut weights = graph.weights().to_vec();
        weights.sort_unstable();
        let ng = c.ng.as_ref();
        let flags = Flags {
            negative_definite: c.negative_definite,
            minimal: c.minimal,
            rational: c.is_rational(),
            gorenstein: c.is_gorenstein(),
            nearly_gorenstein: c.is_nearly_gorenstein(),
            almost_reduced: c.almost_reduced.unwrap_or(false),
            log_terminal: c.log_terminal,
            chain: c.chain,
        };
        Ok(CensusRow {
            key,
            n: graph.len(),
            weights,
            flags,
            multiplicity: ng.map(|r| r.multiplicity),
            trace_colength: ng.map(|r| r.trace_colength),
            structural_case: ng.map(|r| r.structural.case),
            ade: c.ade_pattern(),
            ding: c.ding,
            end_curve_colength: c.end_curve_colength,
            graph,
        })
    }

    fn satisfies(&self, p: Predicate) -> bool {
        let f = &self.flags;
        match p {
            Predicate::NegativeDefinite => f.negative_definite,
            Predicate::Minimal => f.minimal,
            Predicate::Rational => f.rational,
            Predicate::NonGorenstein => f.rational && f.minimal && !f.gorenstein,
            Predicate::NearlyGorenstein => f.nearly_gorenstein,
            Predicate::AlmostReduced => f.almost_reduced,
            Predicate::LogTerminal => f.log_terminal == Some(true),
            Predicate::NonCyclic => !f.chain,
        }
    }

    /// Implications between flags that must hold on every row; returns a
    /// description of each one that fails.
    pub fn consistency_violations(&self) -> Vec<&'static str> {
        let f = &self.flags;
        let mut out = Vec::new();
        if f.rational && !f.negative_definite {
            out.push("rational but not negative definite");
        }
        if f.gorenstein && !f.nearly_gorenstein {
            out.push("Gorenstein but not nearly Gorenstein");
        }
        if f.nearly_gorenstein && f.almost_reduced && self.ade.is_none() {
            out.push("nearly Gorenstein and almost reduced without an ADE pattern");
        }
        if self.ade.is_some() && !(f.nearly_gorenstein && f.almost_reduced) {
            out.push("ADE pattern on a graph that is not both nearly Gorenstein and almost reduced");
        }
        if f.gorenstein && self.trace_colength != Some(0) {
            out.push("Gorenstein with nonzero trace colength");
        }
        if f.nearly_gorenstein && !f.gorenstein && self.trace_colength != Some(1) {
            out.push("nearly Gorenstein, not Gorenstein, trace colength not 1");
        }
        if self.ding.is_some() && !f.nearly_gorenstein {
            out.push("quotient list entry that is not nearly Gorenstein");
        }
        if f.log_terminal == Some(true) && !f.rational {
            out.push("log terminal but not rational");
        }
        if let (Some(ell), Some(end)) = (self.trace_colength, self.end_curve_colength) {
            if ell != end {
                out.push("end-curve colength differs from trace colength");
            }
        }
        out
    }
}

/// Adjacency lists of a labeled graph on `0..n`.
type Adjacency = Vec<Vec<usize>>;

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Adjacency {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// One or two centers of a tree, by repeated leaf removal.
fn tree_centers(adj: &Adjacency) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        for &leaf in &layer {
            removed[leaf] = true;
        }
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// AHU code of the subtree at `v` and its vertices in canonical preorder.
fn rooted_code(adj: &Adjacency, weights: &[i64], v: usize, parent: usize) -> (String, Vec<usize>) {
    let mut children: Vec<(String, Vec<usize>)> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, weights, w, v))
        .collect();
    let mut order = vec![v];
    if children.is_empty() {
        return (weights[v].to_string(), order);
    }
    children.sort_by(|a, b| a.0.cmp(&b.0));
    let mut code = format!("{}(", weights[v]);
    for (i, (c, o)) in children.into_iter().enumerate() {
        if i > 0 {
            code.push(',');
        }
        code.push_str(&c);
        order.extend(o);
    }
    code.push(')');
    (code, order)
}

/// Canonical code of a weighted tree and a vertex order realizing it.
pub fn tree_canonical_form(adj: &Adjacency, weights: &[i64]) -> (String, Vec<usize>) {
    tree_centers(adj)
        .into_iter()
        .map(|c| rooted_code(adj, weights, c, usize::MAX))
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("a tree has a center")
}

/// Unlabeled trees on `n` vertices as edge lists, in canonical-code order.
pub fn unlabeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(n >= 1);
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for m in 1..n {
        let mut seen: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
        for tree in &level {
            for v in 0..m {
                let mut edges = tree.clone();
                edges.push((v, m));
                let adj = adjacency(m + 1, &edges);
                let (code, _) = tree_canonical_form(&adj, &vec![0; m + 1]);
                seen.entry(code).or_insert(edges);
            }
        }
        level = seen.into_values().collect();
    }
    level
}

/// Calls `f` on every vector in `[lo, hi]^n`, last coordinate fastest.
fn for_each_weight_vector(n: usize, lo: i64, hi: i64, mut f: impl FnMut(&[i64])) {
    if hi < lo {
        return;
    }
    let mut w = vec![lo; n];
    loop {
        f(&w);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if w[i] < hi {
                w[i] += 1;
                break;
            }
            w[i] = lo;
        }
    }
}

fn relabel(order: &[usize], weights: &[i64], edges: &[(usize, usize)]) -> WeightedDualGraph {
    let mut position = vec![0; order.len()];
    for (k, &v) in order.iter().enumerate() {
        position[v] = k;
    }
    let w: Vec<i64> = order.iter().map(|&v| weights[v]).collect();
    let mut e: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (position[a], position[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    e.sort_unstable();
    WeightedDualGraph::from_weights(&w, &e).expect("enumerated graphs are valid")
}

/// Distinct weighted trees on one shape, as `(key, canonical graph)`.
fn weighted_trees(edges: &[(usize, usize)], n: usize, lo: i64, hi: i64) -> Vec<(String, WeightedDualGraph)> {
    let adj = adjacency(n, edges);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for_each_weight_vector(n, lo, hi, |w| {
        let (code, order) = tree_canonical_form(&adj, w);
        if seen.insert(code.clone()) {
            out.push((code, relabel(&order, w, edges)));
        }
    });
    out
}

/// Edge bitmask over the pairs `(i, j)`, `i < j`, of `0..n`.
fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn permute_mask(
    mask: u32,
    pairs: &[(usize, usize)],
    slot: &HashMap<(usize, usize), usize>,
    perm: &[usize],
) -> u32 {
    let mut out = 0;
    for (bit, &(a, b)) in pairs.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            let (x, y) = (perm[a], perm[b]);
            out |= 1 << slot[&(x.min(y), x.max(y))];
        }
    }
    out
}

fn mask_connected(mask: u32, n: usize, pairs: &[(usize, usize)]) -> bool {
    let mut reached = 1u32;
    loop {
        let mut grown = reached;
        for (bit, &(a, b)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 && (grown >> a & 1 == 1 || grown >> b & 1 == 1) {
                grown |= 1 << a | 1 << b;
            }
        }
        if grown == reached {
            return reached.count_ones() as usize == n;
        }
        reached = grown;
    }
}

struct GraphMasks {
    /// Canonical edge masks, ascending.
    masks: Vec<u32>,
    /// Vertex pair of each mask bit.
    pairs: Vec<(usize, usize)>,
    perms: Vec<Vec<usize>>,
}

/// Connected unlabeled graphs on `n <= 6` vertices as canonical edge masks
/// (the largest mask in each isomorphism class).
fn connected_graph_masks(n: usize) -> GraphMasks {
    let pairs = pair_index(n);
    let slot: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let perms = permutations(n);
    let canon = |mask: u32| {
        perms
            .iter()
            .map(|p| permute_mask(mask, &pairs, &slot, p))
            .max()
            .unwrap()
    };
    let mut all: HashSet<u32> = HashSet::from([0]);
    let mut frontier = vec![0u32];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &m in &frontier {
            for bit in 0..pairs.len() {
                if m >> bit & 1 == 0 {
                    let c = canon(m | 1 << bit);
                    if all.insert(c) {
                        next.push(c);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut masks: Vec<u32> = all
        .into_iter()
        .filter(|&m| mask_connected(m, n, &pairs) || n == 1)
        .collect();
    masks.sort_unstable();
    GraphMasks { masks, pairs, perms }
}

/// Distinct weightings of one graph: weight vectors that are
/// lexicographically smallest in their orbit under the automorphisms.
fn weighted_graphs(n: usize, lo: i64, hi: i64) -> Vec<(String, WeightedDualGraph)> {
    let GraphMasks { masks, pairs, perms } = connected_graph_masks(n);
    let slot: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut out = Vec::new();
    for mask in masks {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let autos: Vec<&Vec<usize>> = perms
            .iter()
            .filter(|p| permute_mask(mask, &pairs, &slot, p) == mask)
            .collect();
        let edge_code: Vec<String> = edges.iter().map(|(a, b)| format!("{a}{b}")).collect();
        for_each_weight_vector(n, lo, hi, |w| {
            let minimal = autos.iter().all(|p| {
                // the weighting w o p must not be smaller than w
                let image: Vec<i64> = (0..n).map(|i| w[p[i]]).collect();
                image.as_slice() >= w
            });
            if minimal {
                let weights: Vec<String> = w.iter().map(i64::to_string).collect();
                let key = format!("g{n}:{}|{}", edge_code.join(","), weights.join(","));
                let g = WeightedDualGraph::from_weights(w, &edges).expect("enumerated graphs are valid");
                out.push((key, g));
            }
        });
    }
    out
}

/// Every weighted graph within the bounds, up to isomorphism, classified
/// and filtered. Rows are sorted by vertex count, then key.
pub fn enumerate_graphs(config: &EnumerationConfig) -> Result<Vec<CensusRow>> {
    let cap = config.effective_cap();
    if config.max_vertices > cap {
        return Err(Error::CapExceeded {
            requested: config.max_vertices,
            cap,
        });
    }
    let lo = config.min_weight.max(1);
    let hi = config.max_weight;
    let min_n = config.min_vertices.max(1);
    let jobs: Vec<(usize, Vec<(usize, usize)>)> = match config.shape {
        Shape::Trees => (min_n..=config.max_vertices)
            .flat_map(|n| unlabeled_trees(n).into_iter().map(move |t| (n, t)))
            .collect(),
        Shape::AllGraphs => (min_n..=config.max_vertices).map(|n| (n, Vec::new())).collect(),
    };
    let shape = config.shape;
    let per_job: Vec<Result<Vec<CensusRow>>> = jobs
        .par_iter()
        .map(|(n, edges)| {
            let graphs = match shape {
                Shape::Trees => weighted_trees(edges, *n, lo, hi),
                Shape::AllGraphs => weighted_graphs(*n, lo, hi),
            };
            let mut rows = Vec::new();
            for (key, g) in graphs {
                let row = CensusRow::from_graph(key, g, config.quotient_data)?;
                if config.predicates.iter().all(|&p| row.satisfies(p)) {
                    rows.push(row);
                }
            }
            Ok(rows)
        })
        .collect();
    let mut rows = Vec::new();
    for r in per_job {
        rows.extend(r?);
    }
    rows.sort_by(|a, b| (a.n, &a.key).cmp(&(b.n, &b.key)));
    Ok(rows)
}

/// Counts of rows per flag, for summaries.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub rows: usize,
    pub negative_definite: usize,
    pub rational: usize,
    pub gorenstein: usize,
    pub nearly_gorenstein: usize,
    pub almost_reduced: usize,
    pub log_terminal: usize,
    pub ade: BTreeMap<String, usize>,
}

pub fn summarize(rows: &[CensusRow]) -> CensusSummary {
    let mut s = CensusSummary {
        rows: rows.len(),
        ..Default::default()
    };
    for r in rows {
        let f = &r.flags;
        s.negative_definite += f.negative_definite as usize;
        s.rational += f.rational as usize;
        s.gorenstein += f.gorenstein as usize;
        s.nearly_gorenstein += f.nearly_gorenstein as usize;
        s.almost_reduced += (f.rational && f.almost_reduced) as usize;
        s.log_terminal += (f.log_terminal == Some(true)) as usize;
        if let Some(p) = r.ade {
            *s.ade.entry(p.to_string()).or_default() += 1;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=9).map(|n| unlabeled_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_graph_masks(n).masks.len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn single_vertex_rows() {
        let rows = enumerate_graphs(&EnumerationConfig::new(1, 3)).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[0].flags.gorenstein && rows[0].weights == vec![2]);
        assert!(!rows[1].flags.gorenstein && rows[1].flags.nearly_gorenstein);
        assert_eq!(rows[1].structural_case, Some(StructuralCase::Irreducible));
    }

    #[test]
    fn all_minus_two_up_to_four() {
        let rows = enumerate_graphs(&EnumerationConfig::new(4, 2)).unwrap();
        // A_1, A_2, A_3, A_4, D_4 and the star K_{1,3} is D_4 itself
        assert_eq!(rows.len(), 5);
        assert!(rows.iter().all(|r| r.flags.gorenstein));
        assert_eq!(rows.iter().filter(|r| r.ade == Some(AdePattern::D)).count(), 1);
    }

    #[test]
    fn relabeled_copies_share_a_key() {
        let g = crate::fixtures::rtp_d0();
        let adj = adjacency(g.len(), g.edges());
        let (key, _) = tree_canonical_form(&adj, g.weights());
        let r = g.reordered(&[5, 3, 1, 0, 2, 4]);
        let adj_r = adjacency(r.len(), r.edges());
        assert_eq!(tree_canonical_form(&adj_r, r.weights()).0, key);
    }

    #[test]
    fn caps() {
        let err = enumerate_graphs(&EnumerationConfig::new(10, 2)).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                requested: 10,
                cap: 9
            }
        );
        let err = enumerate_graphs(&EnumerationConfig::new(7, 2).all_graphs()).unwrap_err();
        assert_eq!(err, Error::CapExceeded { requested: 7, cap: 6 });
    }

    #[test]
    fn cyclic_graphs_are_not_rational() {
        let rows = enumerate_graphs(&EnumerationConfig::new(4, 3).all_graphs()).unwrap();
        let trees = enumerate_graphs(&EnumerationConfig::new(4, 3)).unwrap();
        assert!(rows.len() > trees.len());
        for r in &rows {
            if !r.graph.is_tree() {
                assert!(!r.flags.rational, "{}", r.key);
            }
        }
        assert_eq!(rows.iter().filter(|r| r.graph.is_tree()).count(), trees.len());
    }
}
