//! Independent oracles shared by the integration tests. Nothing here calls
//! into the crate's algorithms; graphs are read only through their weights
//! and edge lists.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use resgraph::WeightedDualGraph;

/// Intersection matrix rebuilt from weights and edges.
pub fn matrix(g: &WeightedDualGraph) -> Vec<Vec<i64>> {
    let n = g.len();
    let mut m = vec![vec![0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = -g.weight(i);
    }
    for &(a, b) in g.edges() {
        m[a][b] += 1;
        m[b][a] += 1;
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoxMinimum {
    Unique(Vec<i64>),
    /// Solutions exist but their componentwise minimum is not one.
    NotUnique,
    Empty,
}

/// Smallest `x` in `[0, bound]^n`, `x != 0` when `nonzero`, with
/// `(M x)_i <= rhs_i` for every `i`, found by visiting every point of the
/// box. The minimum is unique exactly when the componentwise minimum of all
/// solutions is itself a solution.
pub fn box_minimum(m: &[Vec<i64>], rhs: &[i64], bound: i64, nonzero: bool) -> BoxMinimum {
    let n = m.len();
    let mut x = vec![0i64; n];
    let mut mx = vec![0i64; n];
    let mut meet: Option<Vec<i64>> = None;
    loop {
        let ok = (!nonzero || x.iter().any(|&c| c != 0)) && mx.iter().zip(rhs).all(|(a, b)| a <= b);
        if ok {
            match &mut meet {
                Some(m) => m.iter_mut().zip(&x).for_each(|(a, &b)| *a = (*a).min(b)),
                None => meet = Some(x.clone()),
            }
        }
        let mut j = 0;
        loop {
            if j == n {
                return match meet {
                    None => BoxMinimum::Empty,
                    Some(v) => {
                        let mv: Vec<i64> = (0..n).map(|i| (0..n).map(|k| m[i][k] * v[k]).sum()).collect();
                        let nz = !nonzero || v.iter().any(|&c| c != 0);
                        if nz && mv.iter().zip(rhs).all(|(a, b)| a <= b) {
                            BoxMinimum::Unique(v)
                        } else {
                            BoxMinimum::NotUnique
                        }
                    }
                };
            }
            if x[j] < bound {
                x[j] += 1;
                for (i, row) in m.iter().enumerate() {
                    mx[i] += row[j];
                }
                break;
            }
            for (i, row) in m.iter().enumerate() {
                mx[i] -= row[j] * bound;
            }
            x[j] = 0;
            j += 1;
        }
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Solves `M x = rhs` by Gauss–Jordan elimination over the rationals with
/// partial pivoting on nonzero entries; `None` when singular.
pub fn rational_solve(m: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, &r)| row.iter().map(|&v| q(v)).chain(std::iter::once(q(r))).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let pivot = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v = &*v / &pivot;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x = &*x - &f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

/// Sylvester test through the pivots of symmetric elimination without row
/// exchanges: negative definite iff every pivot is negative.
pub fn negative_definite_by_pivots(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|row| row.iter().map(|&v| q(v)).collect()).collect();
    for k in 0..n {
        if !a[k][k].is_negative() {
            return false;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            let pivot_row = a[k].clone();
            for (x, p) in a[i].iter_mut().zip(&pivot_row).skip(k) {
                *x = &*x - &f * p;
            }
        }
    }
    true
}

/// Largest `v^T M v` over nonzero `v` in `[-r, r]^n`.
pub fn max_quadratic_value(m: &[Vec<i64>], r: i64) -> i64 {
    let n = m.len();
    let mut v = vec![-r; n];
    let mut best = i64::MIN;
    loop {
        if v.iter().any(|&c| c != 0) {
            let s: i64 = (0..n)
                .map(|i| (0..n).map(|j| v[i] * m[i][j] * v[j]).sum::<i64>())
                .sum();
            best = best.max(s);
        }
        let mut j = 0;
        while j < n && v[j] == r {
            v[j] = -r;
            j += 1;
        }
        if j == n {
            return best;
        }
        v[j] += 1;
    }
}

/// Every labeled tree on `n` vertices, decoded from its Prüfer sequence.
pub fn labeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 1 {
        return vec![vec![]];
    }
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &s in &seq {
            let leaf = (0..n).find(|&i| degree[i] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(edges);
        let mut j = 0;
        while j < seq.len() && seq[j] == n - 1 {
            seq[j] = 0;
            j += 1;
        }
        if j == seq.len() {
            return out;
        }
        seq[j] += 1;
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Canonical form by brute force: the smallest (weights, adjacency)
/// encoding over all vertex relabelings.
pub struct BruteCanon {
    perms: Vec<Vec<usize>>,
}

impl BruteCanon {
    pub fn new(n: usize) -> Self {
        BruteCanon {
            perms: permutations(n),
        }
    }

    pub fn key(&self, weights: &[i64], edges: &[(usize, usize)]) -> (Vec<i64>, Vec<bool>) {
        let n = weights.len();
        let mut best: Option<(Vec<i64>, Vec<bool>)> = None;
        for p in &self.perms {
            let w: Vec<i64> = (0..n).map(|i| weights[p[i]]).collect();
            if let Some((bw, _)) = &best {
                if w > *bw {
                    continue;
                }
            }
            let mut inv = vec![0; n];
            for (i, &pi) in p.iter().enumerate() {
                inv[pi] = i;
            }
            let mut adj = vec![false; n * n];
            for &(a, b) in edges {
                adj[inv[a] * n + inv[b]] = true;
                adj[inv[b] * n + inv[a]] = true;
            }
            let cand = (w, adj);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        best.unwrap()
    }
}

/// All weight vectors in `[lo, hi]^n`.
pub fn weight_vectors(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |b| {
                    let mut w = v.clone();
                    w.push(b);
                    w
                })
            })
            .collect();
    }
    out
}

/// Seeded random tree with `n` vertices and weights drawn from `weights`.
pub fn random_tree<R: rand::Rng>(rng: &mut R, n: usize, weights: &[i64]) -> WeightedDualGraph {
    let w: Vec<i64> = (0..n).map(|_| weights[rng.gen_range(0..weights.len())]).collect();
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    WeightedDualGraph::from_weights(&w, &edges).unwrap()
}
