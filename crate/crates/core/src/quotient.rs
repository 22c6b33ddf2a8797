//! Chains, star-shaped graphs and quotient singularities.
//!
//! Each arm of a star is encoded by the Hirzebruch–Jung continued fraction
//! `q/p = b_1 - 1/(b_2 - 1/(... - 1/b_k))`, read from the center outward.
//! A star with central weight `b` then corresponds to the Pinkham–Demazure
//! divisor `D = E - sum (p_i/q_i) P_i` on the projective line, with
//! `deg E = b`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::form::{discrepancies_exceed_minus_one, graph_is_negative_definite};
use crate::graph::WeightedDualGraph;

/// Continued fraction `q/p` of a chain, with `0 < p < q` coprime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fraction {
    pub q: i64,
    pub p: i64,
}

impl Fraction {
    pub const fn new(q: i64, p: i64) -> Self {
        Fraction { q, p }
    }

    pub fn validated(q: i64, p: i64) -> Result<Self> {
        if !(0 < p && p < q) {
            return Err(Error::OutOfRange(q, p));
        }
        if q.gcd(&p) != 1 {
            return Err(Error::NotCoprime(q, p));
        }
        Ok(Fraction { q, p })
    }

    /// `p/q` as an exact rational.
    pub fn ratio(&self) -> BigRational {
        BigRational::new(BigInt::from(self.p), BigInt::from(self.q))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.q, self.p)
    }
}

impl std::str::FromStr for Fraction {
    type Err = String;

    /// Parses `q/p`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("expected q/p with integers, found `{s}`");
        let (q, p) = s.trim().split_once('/').ok_or_else(bad)?;
        let q = q.trim().parse().map_err(|_| bad())?;
        let p = p.trim().parse().map_err(|_| bad())?;
        Fraction::validated(q, p).map_err(|e| e.to_string())
    }
}

/// `q/p` of a chain of weights read from the center outward.
pub fn branch_fraction(weights: &[i64]) -> Result<Fraction> {
    let (&last, rest) = weights.split_last().ok_or(Error::EmptyBranch)?;
    if let Some(&w) = weights.iter().find(|&&w| w < 2) {
        return Err(Error::WeightBelowTwo(w));
    }
    let (mut q, mut p) = (last, 1i64);
    for &b in rest.iter().rev() {
        let next = b
            .checked_mul(q)
            .and_then(|x| x.checked_sub(p))
            .ok_or(Error::OutOfRange(q, p))?;
        p = q;
        q = next;
    }
    Ok(Fraction { q, p })
}

/// Hirzebruch–Jung expansion of `q/p`; inverse of [`branch_fraction`].
pub fn fraction_to_branch(q: i64, p: i64) -> Result<Vec<i64>> {
    let f = Fraction::validated(q, p)?;
    let (mut q, mut p) = (f.q, f.p);
    let mut weights = Vec::new();
    loop {
        let b = (q + p - 1) / p;
        weights.push(b);
        let r = b * p - q;
        if r == 0 {
            return Ok(weights);
        }
        q = p;
        p = r;
    }
}

/// A path graph (a single vertex counts).
pub fn is_chain(g: &WeightedDualGraph) -> bool {
    g.is_tree() && (0..g.len()).all(|i| g.degree(i) <= 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Branch {
    /// Vertex indices from the center outward.
    pub vertices: Vec<usize>,
    pub weights: Vec<i64>,
    pub fraction: Fraction,
}

/// Central curve and arms of a star-shaped graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertData {
    pub center: usize,
    pub central_weight: i64,
    /// Arms in the order of the center's neighbours.
    pub branches: Vec<Branch>,
}

impl SeifertData {
    /// Branch fractions sorted by `(q, p)`.
    pub fn sorted_fractions(&self) -> Vec<Fraction> {
        let mut f: Vec<_> = self.branches.iter().map(|b| b.fraction).collect();
        f.sort();
        f
    }

    /// Branch orders `q_i`, ascending.
    pub fn orders(&self) -> Vec<i64> {
        self.sorted_fractions().iter().map(|f| f.q).collect()
    }
}

/// Decomposes a tree with exactly one vertex of degree at least 3.
pub fn star_decompose(g: &WeightedDualGraph) -> Result<SeifertData> {
    if !g.is_tree() {
        return Err(Error::NotStarShaped("graph has a cycle".into()));
    }
    let nodes: Vec<usize> = (0..g.len()).filter(|&i| g.degree(i) >= 3).collect();
    let center = match nodes.as_slice() {
        [] => return Err(Error::NotStarShaped("graph is a chain".into())),
        [c] => *c,
        _ => {
            return Err(Error::NotStarShaped(format!(
                "{} vertices of degree >= 3",
                nodes.len()
            )))
        }
    };
    let mut branches = Vec::with_capacity(g.degree(center));
    for &first in g.neighbors(center) {
        let mut vertices = vec![first];
        let (mut prev, mut cur) = (center, first);
        while g.degree(cur) == 2 {
            let next = g.neighbors(cur).iter().copied().find(|&x| x != prev).unwrap();
            vertices.push(next);
            prev = cur;
            cur = next;
        }
        let weights: Vec<i64> = vertices.iter().map(|&v| g.weight(v)).collect();
        let fraction = branch_fraction(&weights)?;
        branches.push(Branch {
            vertices,
            weights,
            fraction,
        });
    }
    Ok(SeifertData {
        center,
        central_weight: g.weight(center),
        branches,
    })
}

/// Sorted branch orders of a non-cyclic quotient: `(2,2,n)`, `(2,3,3)`,
/// `(2,3,4)` or `(2,3,5)`.
pub fn is_platonic(orders: &[i64]) -> bool {
    matches!(orders, [2, 2, n] if *n >= 2) || matches!(orders, [2, 3, 3] | [2, 3, 4] | [2, 3, 5])
}

/// Chain, or star with three arms of platonic orders.
pub fn log_terminal_by_shape(g: &WeightedDualGraph) -> bool {
    if is_chain(g) {
        return true;
    }
    match star_decompose(g) {
        Ok(s) => s.branches.len() == 3 && is_platonic(&s.orders()),
        Err(_) => false,
    }
}

/// Every coefficient of the canonical discrepancy cycle exceeds `-1`.
pub fn log_terminal_by_discrepancy(g: &WeightedDualGraph) -> Result<bool> {
    discrepancies_exceed_minus_one(g)
}

/// Quotient (log-terminal) test by shape, cross-checked against the
/// discrepancies of the minimal resolution.
pub fn is_log_terminal(g: &WeightedDualGraph) -> Result<bool> {
    if !g.is_minimal_resolution() {
        return Err(Error::NotMinimalResolution);
    }
    if !graph_is_negative_definite(g) {
        return Err(Error::NotNegativeDefinite);
    }
    let by_shape = log_terminal_by_shape(g);
    let by_discrepancy = log_terminal_by_discrepancy(g)?;
    if by_shape != by_discrepancy {
        return Err(Error::CrossCheckMismatch(format!(
            "shape test says {by_shape}, discrepancy test says {by_discrepancy}"
        )));
    }
    Ok(by_shape)
}

/// Pinkham–Demazure data of a star: `D = E - sum (p_i/q_i) P_i`, `deg E = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PDDivisor {
    pub central_degree: i64,
    /// Sorted by `(q, p)`.
    pub fractions: Vec<Fraction>,
}

impl PDDivisor {
    pub fn new(central_degree: i64, mut fractions: Vec<Fraction>) -> Self {
        fractions.sort();
        PDDivisor {
            central_degree,
            fractions,
        }
    }

    /// `b - sum p_i/q_i`.
    pub fn degree(&self) -> BigRational {
        self.fractions.iter().fold(
            BigRational::from_integer(BigInt::from(self.central_degree)),
            |acc, f| acc - f.ratio(),
        )
    }

    /// The display is only the established normal form when `b = 2`; other
    /// central degrees use the same convention as an extension.
    pub fn is_extended_convention(&self) -> bool {
        self.central_degree != 2
    }

    /// Normal form with `E = P_1 + ... + P_b` merged into the first `b`
    /// points, e.g. `1/2 P_1 + 2/3 P_2 - 1/3 P_3`.
    pub fn display(&self) -> String {
        let b = self.central_degree.max(0) as usize;
        let mut out = String::new();
        for (i, f) in self.fractions.iter().enumerate() {
            let (negative, num) = if i < b { (false, f.q - f.p) } else { (true, f.p) };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&format!("{}/{} P_{}", num, f.q, i + 1));
        }
        if b > self.fractions.len() {
            let rest = b - self.fractions.len();
            if out.is_empty() {
                out.push_str(&format!("{rest} Q"));
            } else {
                out.push_str(&format!(" + {rest} Q"));
            }
        }
        out
    }
}

impl fmt::Display for PDDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

pub fn pd_divisor(g: &WeightedDualGraph) -> Result<PDDivisor> {
    let s = star_decompose(g)?;
    Ok(PDDivisor::new(s.central_weight, s.sorted_fractions()))
}

/// Star graph of `D = E - sum (p_i/q_i) P_i` with `deg E = b`; arms follow
/// the order of `branches`.
pub fn graph_from_pd(b: i64, branches: &[Fraction]) -> Result<WeightedDualGraph> {
    let mut arms = Vec::with_capacity(branches.len());
    for f in branches {
        let f = Fraction::validated(f.q, f.p)?;
        arms.push(fraction_to_branch(f.q, f.p)?);
    }
    let degree = PDDivisor::new(b, branches.to_vec()).degree();
    if !degree.is_positive() {
        return Err(Error::DegreeNotPositive(crate::cycle::format_rational(&degree)));
    }
    let g = WeightedDualGraph::star(b, &arms)?;
    if !graph_is_negative_definite(&g) {
        return Err(Error::NotNegativeDefinite);
    }
    Ok(g)
}

/// Position in the list of non-cyclic, non-Gorenstein, nearly Gorenstein
/// quotient singularities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "item", rename_all = "snake_case")]
pub enum DingMatch {
    /// Item 1: fractions `1/2, 1/2` and the chain `[2]^k ++ [s]`, `s >= 3`.
    Family { k: usize, s: i64 },
    /// Items 2 through 11.
    Sporadic { number: u8 },
}

impl DingMatch {
    pub fn number(&self) -> u8 {
        match self {
            DingMatch::Family { .. } => 1,
            DingMatch::Sporadic { number } => *number,
        }
    }

    /// Item 5 is the entry absent from the earlier published list.
    pub fn absent_from_earlier_list(&self) -> bool {
        self.number() == 5
    }
}

impl fmt::Display for DingMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DingMatch::Family { k, s } => write!(f, "(1) k={k} s={s}"),
            DingMatch::Sporadic { number } => write!(f, "({number})"),
        }
    }
}

const SPORADIC: [(u8, [(i64, i64); 3]); 10] = [
    (2, [(2, 1), (3, 1), (3, 1)]),
    (3, [(2, 1), (3, 1), (3, 2)]),
    (4, [(2, 1), (3, 2), (4, 1)]),
    (5, [(2, 1), (3, 1), (4, 1)]),
    (6, [(2, 1), (3, 1), (4, 3)]),
    (7, [(2, 1), (3, 2), (5, 1)]),
    (8, [(2, 1), (3, 2), (5, 3)]),
    (9, [(2, 1), (3, 1), (5, 1)]),
    (10, [(2, 1), (3, 1), (5, 3)]),
    (11, [(2, 1), (3, 1), (5, 4)]),
];

/// Sorted branch fractions of sporadic item `item` (2..=11); central degree 2.
pub fn ding_sporadic_fractions(item: u8) -> Option<Vec<Fraction>> {
    SPORADIC
        .iter()
        .find(|(n, _)| *n == item)
        .map(|(_, fr)| fr.iter().map(|&(q, p)| Fraction::new(q, p)).collect())
}

/// The divisor string of sporadic item `item`.
pub fn ding_sporadic_divisor(item: u8) -> Option<String> {
    ding_sporadic_fractions(item).map(|f| PDDivisor::new(2, f).display())
}

/// Looks a star up in the nearly Gorenstein quotient list. Returns `None`
/// when the star is a non-Gorenstein quotient absent from the list.
pub fn match_ding(g: &WeightedDualGraph) -> Result<Option<DingMatch>> {
    if is_chain(g) {
        return Err(Error::CyclicQuotient);
    }
    if !is_log_terminal(g)? {
        return Err(Error::NotQuotient);
    }
    if g.all_minus_two() {
        return Err(Error::Gorenstein);
    }
    let s = star_decompose(g)?;
    Ok(match_ding_data(&s))
}

pub(crate) fn match_ding_data(s: &SeifertData) -> Option<DingMatch> {
    if s.central_weight != 2 {
        return None;
    }
    let fr = s.sorted_fractions();
    if fr.len() != 3 {
        return None;
    }
    if fr[0] == Fraction::new(2, 1) && fr[1] == Fraction::new(2, 1) {
        let arm = fraction_to_branch(fr[2].q, fr[2].p).ok()?;
        let (&s_weight, head) = arm.split_last()?;
        if s_weight >= 3 && head.iter().all(|&w| w == 2) {
            return Some(DingMatch::Family {
                k: head.len(),
                s: s_weight,
            });
        }
        return None;
    }
    SPORADIC.iter().find_map(|(n, table)| {
        let hit = table.iter().zip(&fr).all(|(&(q, p), f)| f.q == q && f.p == p);
        hit.then_some(DingMatch::Sporadic { number: *n })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fractions() {
        assert_eq!(branch_fraction(&[2]).unwrap(), Fraction::new(2, 1));
        assert_eq!(branch_fraction(&[2, 2, 2, 2]).unwrap(), Fraction::new(5, 4));
        assert_eq!(branch_fraction(&[2, 2, 3]).unwrap(), Fraction::new(7, 5));
        assert_eq!(branch_fraction(&[]).unwrap_err(), Error::EmptyBranch);
        assert_eq!(branch_fraction(&[2, 1]).unwrap_err(), Error::WeightBelowTwo(1));
    }

    #[test]
    fn expansions() {
        assert_eq!(fraction_to_branch(2, 1).unwrap(), vec![2]);
        assert_eq!(fraction_to_branch(5, 4).unwrap(), vec![2, 2, 2, 2]);
        assert_eq!(fraction_to_branch(7, 5).unwrap(), vec![2, 2, 3]);
        assert_eq!(fraction_to_branch(6, 4).unwrap_err(), Error::NotCoprime(6, 4));
        assert_eq!(fraction_to_branch(3, 3).unwrap_err(), Error::OutOfRange(3, 3));
        assert_eq!(fraction_to_branch(3, 0).unwrap_err(), Error::OutOfRange(3, 0));
    }

    #[test]
    fn parse_fraction() {
        assert_eq!("5/4".parse::<Fraction>().unwrap(), Fraction::new(5, 4));
        assert!("5/5".parse::<Fraction>().is_err());
        assert!("abc".parse::<Fraction>().is_err());
    }

    #[test]
    fn chains() {
        assert!(is_chain(&fixtures::a_n(5)));
        assert!(!is_chain(&fixtures::d_n(4)));
        assert!(is_chain(&fixtures::a_n(1)));
    }

    #[test]
    fn decompositions() {
        let s = star_decompose(&fixtures::rtp_d0()).unwrap();
        assert_eq!(s.center, 2);
        assert_eq!(s.central_weight, 2);
        let weights: Vec<_> = s.branches.iter().map(|b| b.weights.clone()).collect();
        assert_eq!(weights, vec![vec![2, 3], vec![2, 2], vec![2]]);
        assert_eq!(s.orders(), vec![2, 3, 5]);

        let s = star_decompose(&fixtures::ding_item(11)).unwrap();
        assert_eq!(
            s.sorted_fractions(),
            vec![Fraction::new(2, 1), Fraction::new(3, 1), Fraction::new(5, 4)]
        );
        assert!(matches!(
            star_decompose(&fixtures::a_n(2)),
            Err(Error::NotStarShaped(_))
        ));
        assert!(matches!(
            star_decompose(&fixtures::heavy_coefficient_two()),
            Err(Error::NotStarShaped(_))
        ));
    }

    #[test]
    fn log_terminal() {
        assert!(!is_log_terminal(&fixtures::heavy_center_star(5)).unwrap());
        assert!(is_log_terminal(&fixtures::heavy_center_star(4)).unwrap());
        assert!(is_log_terminal(&fixtures::e8()).unwrap());
        let s = star_decompose(&fixtures::e8()).unwrap();
        assert_eq!(
            s.sorted_fractions(),
            vec![Fraction::new(2, 1), Fraction::new(3, 2), Fraction::new(5, 4)]
        );
        assert!(is_log_terminal(&fixtures::ding_item(5)).unwrap());
        assert_eq!(
            is_log_terminal(&WeightedDualGraph::chain(&[1, 2]).unwrap()).unwrap_err(),
            Error::NotMinimalResolution
        );
    }

    #[test]
    fn divisors() {
        let g = WeightedDualGraph::star(2, &[vec![3], vec![3], vec![2]]).unwrap();
        assert_eq!(pd_divisor(&g).unwrap().display(), "1/2 P_1 + 2/3 P_2 - 1/3 P_3");
        assert_eq!(
            pd_divisor(&fixtures::ding_item(11)).unwrap().display(),
            "1/2 P_1 + 2/3 P_2 - 4/5 P_3"
        );
        assert_eq!(
            pd_divisor(&fixtures::ding_family(0, 3)).unwrap().display(),
            "1/2 P_1 + 1/2 P_2 - 1/3 P_3"
        );
        let ex = pd_divisor(&fixtures::graded_trace_family(3)).unwrap();
        assert_eq!(ex.display(), "1/3 P_1 + 1/3 P_2 + 2/5 P_3");
        assert!(ex.is_extended_convention());
    }

    #[test]
    fn from_divisor() {
        let g = graph_from_pd(
            2,
            &[Fraction::new(2, 1), Fraction::new(3, 1), Fraction::new(3, 1)],
        )
        .unwrap();
        assert_eq!(g.weights(), &[2, 2, 3, 3]);
        // r leaves around a center of weight r - 1
        let r = 5;
        let leaves: Vec<_> = (2..2 + r).map(|q| Fraction::new(q, 1)).collect();
        let g = graph_from_pd(r - 1, &leaves).unwrap();
        assert_eq!(g.len(), r as usize + 1);
        assert_eq!(g.degree(0), r as usize);
        assert!(matches!(
            graph_from_pd(
                1,
                &[Fraction::new(2, 1), Fraction::new(2, 1), Fraction::new(2, 1)]
            ),
            Err(Error::DegreeNotPositive(_))
        ));
        assert_eq!(
            graph_from_pd(2, &[Fraction::new(4, 2)]).unwrap_err(),
            Error::NotCoprime(4, 2)
        );
    }

    #[test]
    fn ding_lookup() {
        let g = fixtures::ding_item(5);
        let m = match_ding(&g).unwrap().unwrap();
        assert_eq!(m, DingMatch::Sporadic { number: 5 });
        assert!(m.absent_from_earlier_list());
        assert_eq!(ding_sporadic_divisor(5).unwrap(), "1/2 P_1 + 2/3 P_2 - 1/4 P_3");
        assert_eq!(match_ding(&fixtures::e8()).unwrap_err(), Error::Gorenstein);
        assert_eq!(
            match_ding(&fixtures::ding_family(1, 3)).unwrap(),
            Some(DingMatch::Family { k: 1, s: 3 })
        );
        assert_eq!(match_ding(&fixtures::non_ulrich_quotient()).unwrap(), None);
        assert_eq!(match_ding(&fixtures::a_n(3)).unwrap_err(), Error::CyclicQuotient);
        assert_eq!(
            match_ding(&fixtures::heavy_center_star(5)).unwrap_err(),
            Error::NotQuotient
        );
    }

    #[test]
    fn sporadic_strings_match_table() {
        let expected = [
            "1/2 P_1 + 2/3 P_2 - 1/3 P_3",
            "1/2 P_1 + 2/3 P_2 - 2/3 P_3",
            "1/2 P_1 + 1/3 P_2 - 1/4 P_3",
            "1/2 P_1 + 2/3 P_2 - 1/4 P_3",
            "1/2 P_1 + 2/3 P_2 - 3/4 P_3",
            "1/2 P_1 + 1/3 P_2 - 1/5 P_3",
            "1/2 P_1 + 1/3 P_2 - 3/5 P_3",
            "1/2 P_1 + 2/3 P_2 - 1/5 P_3",
            "1/2 P_1 + 2/3 P_2 - 3/5 P_3",
            "1/2 P_1 + 2/3 P_2 - 4/5 P_3",
        ];
        for (item, want) in (2..=11).zip(expected) {
            assert_eq!(ding_sporadic_divisor(item).unwrap(), want, "item {item}");
            assert_eq!(pd_divisor(&fixtures::ding_item(item)).unwrap().display(), want);
        }
    }
}
