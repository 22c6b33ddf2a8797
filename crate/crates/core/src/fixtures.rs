//! Named resolution graphs that recur in the literature on rational
//! surface singularities: the ADE diagrams, rational triple points, and a
//! few graphs with interesting trace ideals.

use crate::graph::WeightedDualGraph;
use crate::quotient::{self, Fraction};

fn build(weights: &[i64], edges: &[(usize, usize)]) -> WeightedDualGraph {
    WeightedDualGraph::from_weights(weights, edges).expect("fixture graphs are valid")
}

fn chain_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

/// `A_n`: a chain of `n` `(-2)`-curves.
pub fn a_n(n: usize) -> WeightedDualGraph {
    WeightedDualGraph::chain(&vec![2; n]).expect("n >= 1")
}

/// `D_n` for `n >= 4`: center `v0`, two single `(-2)` arms and one arm of
/// length `n - 3`.
pub fn d_n(n: usize) -> WeightedDualGraph {
    assert!(n >= 4, "D_n needs n >= 4");
    WeightedDualGraph::star(2, &[vec![2], vec![2], vec![2; n - 3]]).unwrap()
}

/// `E_6`, numbered along the long chain `v0..v4` with `v5` on `v2`.
pub fn e6() -> WeightedDualGraph {
    let mut edges = chain_edges(5);
    edges.push((2, 5));
    build(&[2; 6], &edges)
}

/// `E_7`, numbered along the long chain `v0..v5` with `v6` on `v3`.
pub fn e7() -> WeightedDualGraph {
    let mut edges = chain_edges(6);
    edges.push((3, 6));
    build(&[2; 7], &edges)
}

/// `E_8`, numbered along the long chain `v0..v6` with `v7` on `v4`; the
/// fundamental cycle is `(2,3,4,5,6,4,2,3)` in this order.
pub fn e8() -> WeightedDualGraph {
    let mut edges = chain_edges(7);
    edges.push((4, 7));
    build(&[2; 8], &edges)
}

/// Center of weight `n - 2` with `n - 1` leaves of weight 2 (`n >= 4`).
/// Satisfies the single-heavy-curve nearly Gorenstein case; not log
/// terminal once `n >= 5`.
pub fn heavy_center_star(n: usize) -> WeightedDualGraph {
    assert!(n >= 4);
    WeightedDualGraph::star(n as i64 - 2, &vec![vec![2]; n - 1]).unwrap()
}

/// Rational triple point `D_0`: the `E_6` shape with one end a `(-3)`-curve.
pub fn rtp_d0() -> WeightedDualGraph {
    let mut edges = chain_edges(5);
    edges.push((2, 5));
    build(&[3, 2, 2, 2, 2, 2], &edges)
}

/// Rational triple point `B_{0,n}`: a `D`-shape whose short arms are a
/// `(-3)`- and a `(-2)`-curve and whose long arm has `n >= 1` `(-2)`-curves.
pub fn rtp_b0(n: usize) -> WeightedDualGraph {
    assert!(n >= 1);
    WeightedDualGraph::star(2, &[vec![3], vec![2], vec![2; n]]).unwrap()
}

/// Rational triple point `A_{l,m,n}`: a `(-3)`-center with three arms of
/// `(-2)`-curves of lengths `l, m, n`.
pub fn rtp_a(l: usize, m: usize, n: usize) -> WeightedDualGraph {
    WeightedDualGraph::star(3, &[vec![2; l], vec![2; m], vec![2; n]]).unwrap()
}

/// Center of weight 3 and three arms of `n - 1` curves, all `(-2)` except
/// the far end of the third arm, which is a `(-3)`-curve. Its divisor is
/// `D = (1/n)(P_1 + P_2) + 2/(2n-1) P_3` and its trace colength is `n`.
pub fn graded_trace_family(n: usize) -> WeightedDualGraph {
    assert!(n >= 2);
    let mut third = vec![2; n - 1];
    *third.last_mut().unwrap() = 3;
    WeightedDualGraph::star(3, &[vec![2; n - 1], vec![2; n - 1], third]).unwrap()
}

/// Quotient singularity with `e = 4` that is not nearly Gorenstein yet has
/// only the maximal ideal as Ulrich ideal: the chain `2,3,2,3` with a
/// `(-2)`-leaf on the third curve. Vertex `v1` is the first `(-3)`-curve.
pub fn non_ulrich_quotient() -> WeightedDualGraph {
    let mut edges = chain_edges(4);
    edges.push((2, 4));
    build(&[2, 3, 2, 3, 2], &edges)
}

/// Nearly Gorenstein graph with two nodes and `e = 4` whose fundamental
/// cycle is not almost reduced: chain `2,3,2,2` with a `(-2)`-leaf on each
/// of the two middle curves.
pub fn heavy_coefficient_two() -> WeightedDualGraph {
    let mut edges = chain_edges(4);
    edges.push((1, 4));
    edges.push((2, 5));
    build(&[2, 3, 2, 2, 2, 2], &edges)
}

/// Star with the fractions of an entry of the nearly Gorenstein quotient
/// list, items 2 through 11.
pub fn ding_item(item: u8) -> WeightedDualGraph {
    let branches =
        quotient::ding_sporadic_fractions(item).unwrap_or_else(|| panic!("no sporadic item {item}"));
    quotient::graph_from_pd(2, &branches).expect("listed divisors have positive degree")
}

/// Member of the `(2,2,n)` family: arms `[2]`, `[2]` and `[2]^k ++ [s]`.
pub fn ding_family(k: usize, s: i64) -> WeightedDualGraph {
    let mut third = vec![2; k];
    third.push(s);
    let f = quotient::branch_fraction(&third).expect("weights >= 2");
    quotient::graph_from_pd(2, &[Fraction::new(2, 1), Fraction::new(2, 1), f]).expect("positive degree")
}
