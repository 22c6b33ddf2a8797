//! Gorenstein and nearly Gorenstein decisions for rational singularities.
//!
//! For a rational, non-Gorenstein singularity the following are equivalent
//! and are all evaluated independently:
//!
//! * the trace cycle `F` equals the fundamental cycle `Z_f`;
//! * `K_X + Z_f` is anti-nef;
//! * `Z_f . E_i <= E_i^2 + 2` for every curve with `E_i^2 <= -3`;
//! * `Z_f` has one of three local shapes (see [`StructuralCase`]).
//!
//! Any disagreement is reported as [`Error::CriterionDisagreement`].

use std::fmt;

use serde::Serialize;

use crate::cycle::Cycle;
use crate::engine::{
    self, canonical_degree, colength_unchecked, intersect_curve, is_anti_nef, laufer_unchecked,
    multiplicity_from, pair, rationality_from, trace_cycle_from, ComputationSequence, RationalityReport,
};
use crate::error::{Error, Result};
use crate::form::graph_is_negative_definite;
use crate::graph::WeightedDualGraph;
use crate::quotient::{
    self, is_chain, log_terminal_by_discrepancy, log_terminal_by_shape, match_ding_data, star_decompose,
    DingMatch, PDDivisor, SeifertData,
};

/// Local shape of `Z_f` in terms of `v_i = (Z_f - E_i) . E_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StructuralCase {
    /// A single curve.
    #[serde(rename = "4a")]
    Irreducible,
    /// One curve with coefficient 2 and `v = 1`, every other `v = 2`.
    #[serde(rename = "4b")]
    SingleDoubleCurve,
    /// Two curves with coefficient 1 and `v = 1`, every other `v = 2`.
    #[serde(rename = "4c")]
    TwoReducedCurves,
    #[serde(rename = "none")]
    None,
}

impl StructuralCase {
    pub fn label(&self) -> &'static str {
        match self {
            StructuralCase::Irreducible => "4a",
            StructuralCase::SingleDoubleCurve => "4b",
            StructuralCase::TwoReducedCurves => "4c",
            StructuralCase::None => "none",
        }
    }

    pub fn is_some(&self) -> bool {
        *self != StructuralCase::None
    }
}

impl fmt::Display for StructuralCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseWitness {
    pub case: StructuralCase,
    /// The curve `E_{i0}` (cases 4a, 4b) or the pair `E_{i1}, E_{i2}` (4c).
    /// Unique when it exists: every other curve must have `v = 2`.
    pub witnesses: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NGReport {
    pub gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub criterion_f_equals_zf: bool,
    pub criterion_k_plus_zf_anti_nef: bool,
    pub criterion_numeric: bool,
    pub structural: CaseWitness,
    /// `e(A) = -Z_f^2`.
    pub multiplicity: i64,
    /// `l(A / Tr(K_A)) = chi(F)`.
    pub trace_colength: i64,
    pub fundamental_cycle: Cycle,
    pub trace_cycle: Cycle,
}

fn require_rational_minimal(g: &WeightedDualGraph) -> Result<(Cycle, ComputationSequence)> {
    if !graph_is_negative_definite(g) {
        return Err(Error::NotNegativeDefinite);
    }
    if !g.is_minimal_resolution() {
        return Err(Error::NotMinimalResolution);
    }
    require_rational_after_definite(g)
}

fn require_rational_after_definite(g: &WeightedDualGraph) -> Result<(Cycle, ComputationSequence)> {
    let seq = laufer_unchecked(g);
    let z = seq.result.clone();
    if !rationality_from(g, &z, &seq)?.is_rational {
        return Err(Error::NotRational);
    }
    Ok((z, seq))
}

fn require_rational(g: &WeightedDualGraph) -> Result<Cycle> {
    if !graph_is_negative_definite(g) {
        return Err(Error::NotNegativeDefinite);
    }
    Ok(require_rational_after_definite(g)?.0)
}

/// All curves are `(-2)`-curves.
pub fn is_gorenstein(g: &WeightedDualGraph) -> Result<bool> {
    require_rational_minimal(g)?;
    Ok(g.all_minus_two())
}

pub fn structural_case(g: &WeightedDualGraph) -> Result<CaseWitness> {
    let (z, _) = require_rational_minimal(g)?;
    Ok(structural_case_from(g, &z))
}

pub(crate) fn structural_case_from(g: &WeightedDualGraph, z: &Cycle) -> CaseWitness {
    if g.len() == 1 {
        return CaseWitness {
            case: StructuralCase::Irreducible,
            witnesses: vec![0],
        };
    }
    let mut ones = Vec::new();
    for i in 0..g.len() {
        match intersect_curve(g, z, i) + g.weight(i) {
            1 => ones.push(i),
            2 => {}
            _ => {
                return CaseWitness {
                    case: StructuralCase::None,
                    witnesses: Vec::new(),
                }
            }
        }
    }
    let case = match ones.as_slice() {
        [i] if z[*i] == 2 => StructuralCase::SingleDoubleCurve,
        [i, j] if z[*i] == 1 && z[*j] == 1 => StructuralCase::TwoReducedCurves,
        _ => StructuralCase::None,
    };
    CaseWitness {
        witnesses: if case.is_some() { ones } else { Vec::new() },
        case,
    }
}

/// Evaluates every nearly Gorenstein criterion and cross-checks them.
pub fn nearly_gorenstein(g: &WeightedDualGraph) -> Result<NGReport> {
    let (z, _) = require_rational_minimal(g)?;
    nearly_gorenstein_from(g, z)
}

pub(crate) fn nearly_gorenstein_from(g: &WeightedDualGraph, z: Cycle) -> Result<NGReport> {
    let gorenstein = g.all_minus_two();
    let f = trace_cycle_from(g, &z);
    let k = g.canonical_intersections();
    let z_dot: Vec<i64> = (0..g.len()).map(|i| intersect_curve(g, &z, i)).collect();

    let criterion_f_equals_zf = f == z;
    let criterion_k_plus_zf_anti_nef = (0..g.len()).all(|i| k.0[i] + z_dot[i] <= 0);
    let criterion_numeric = (0..g.len())
        .filter(|&i| g.weight(i) >= 3)
        .all(|i| z_dot[i] <= -g.weight(i) + 2);
    let structural = structural_case_from(g, &z);

    if !gorenstein {
        let votes = [
            criterion_f_equals_zf,
            criterion_k_plus_zf_anti_nef,
            criterion_numeric,
            structural.case.is_some(),
        ];
        if votes.iter().any(|&v| v != votes[0]) {
            return Err(Error::CriterionDisagreement(format!(
                "F=Z_f: {}, K+Z_f anti-nef: {}, numeric: {}, structural case: {}",
                votes[0], votes[1], votes[2], structural.case
            )));
        }
    }

    let multiplicity = multiplicity_from(g, &z)?;
    let trace_colength = colength_unchecked(g, &f)?;
    Ok(NGReport {
        gorenstein,
        nearly_gorenstein: gorenstein || criterion_f_equals_zf,
        criterion_f_equals_zf,
        criterion_k_plus_zf_anti_nef,
        criterion_numeric,
        structural,
        multiplicity,
        trace_colength,
        fundamental_cycle: z,
        trace_cycle: f,
    })
}

/// `cff_{E_i}(Z_f) = 1` on every curve with `E_i^2 <= -3`.
pub fn is_almost_reduced(g: &WeightedDualGraph) -> Result<bool> {
    let z = require_rational(g)?;
    Ok(almost_reduced_from(g, &z))
}

pub(crate) fn almost_reduced_from(g: &WeightedDualGraph, z: &Cycle) -> bool {
    (0..g.len()).all(|i| g.weight(i) < 3 || z[i] == 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AdePattern {
    A,
    D,
    E6,
    E7,
    E8,
}

impl fmt::Display for AdePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AdePattern::A => "A",
            AdePattern::D => "D",
            AdePattern::E6 => "E6",
            AdePattern::E7 => "E7",
            AdePattern::E8 => "E8",
        };
        f.write_str(s)
    }
}

/// Position of a vertex in one of the nearly Gorenstein almost-reduced
/// pictures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdeRole {
    pub vertex: usize,
    /// Coefficient of `Z_f` printed at this position.
    pub label: i64,
    /// The position is a `(-2)`-curve; otherwise any weight `>= 2`.
    pub minus_two: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdeMatch {
    pub pattern: Option<AdePattern>,
    pub roles: Vec<AdeRole>,
}

impl AdeMatch {
    fn none() -> Self {
        AdeMatch {
            pattern: None,
            roles: Vec::new(),
        }
    }
}

/// Matches the graph and its fundamental cycle against the `A`, `D`, `E_6`,
/// `E_7`, `E_8` pictures, where marked positions must be `(-2)`-curves and
/// the remaining ends may carry any weight.
pub fn match_ade(g: &WeightedDualGraph) -> Result<AdeMatch> {
    let (z, _) = require_rational_minimal(g)?;
    Ok(match_ade_from(g, &z))
}

pub(crate) fn match_ade_from(g: &WeightedDualGraph, z: &Cycle) -> AdeMatch {
    let (pattern, roles) = if is_chain(g) {
        let start = (0..g.len()).find(|&i| g.degree(i) <= 1).unwrap();
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = g.neighbors(cur).iter().find(|&&x| x != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        let roles = order
            .into_iter()
            .map(|vertex| AdeRole {
                vertex,
                label: 1,
                minus_two: false,
            })
            .collect();
        (AdePattern::A, roles)
    } else {
        match star_roles(g) {
            Some(found) => found,
            None => return AdeMatch::none(),
        }
    };
    let consistent = roles
        .iter()
        .all(|r| z[r.vertex] == r.label && (!r.minus_two || g.weight(r.vertex) == 2));
    if consistent {
        AdeMatch {
            pattern: Some(pattern),
            roles,
        }
    } else {
        AdeMatch::none()
    }
}

/// Arm templates from the center outward: `(label, minus_two)`.
fn star_roles(g: &WeightedDualGraph) -> Option<(AdePattern, Vec<AdeRole>)> {
    let s = star_decompose(g).ok()?;
    if s.branches.len() != 3 {
        return None;
    }
    let mut arms: Vec<&quotient::Branch> = s.branches.iter().collect();
    arms.sort_by_key(|b| b.vertices.len());
    let lengths: Vec<usize> = arms.iter().map(|b| b.vertices.len()).collect();
    const O: bool = true; // (-2)-curve
    const B: bool = false; // any weight
    let (pattern, center_label, templates): (_, i64, [Vec<(i64, bool)>; 3]) = match lengths.as_slice() {
        [1, 1, l] => {
            let mut long = vec![(2, O); l - 1];
            long.push((1, B));
            (AdePattern::D, 2, [vec![(1, B)], vec![(1, B)], long])
        }
        [1, 2, 2] => (
            AdePattern::E6,
            3,
            [vec![(2, O)], vec![(2, O), (1, B)], vec![(2, O), (1, B)]],
        ),
        [1, 2, 3] => (
            AdePattern::E7,
            4,
            [vec![(2, O)], vec![(3, O), (2, O)], vec![(3, O), (2, O), (1, B)]],
        ),
        [1, 2, 4] => (
            AdePattern::E8,
            6,
            [
                vec![(3, O)],
                vec![(4, O), (2, O)],
                vec![(5, O), (4, O), (3, O), (2, O)],
            ],
        ),
        _ => return None,
    };
    let mut roles = vec![AdeRole {
        vertex: s.center,
        label: center_label,
        minus_two: true,
    }];
    for (arm, template) in arms.iter().zip(&templates) {
        for (&vertex, &(label, minus_two)) in arm.vertices.iter().zip(template) {
            roles.push(AdeRole {
                vertex,
                label,
                minus_two,
            });
        }
    }
    Some((pattern, roles))
}

fn require_non_cyclic_quotient(g: &WeightedDualGraph) -> Result<Cycle> {
    if !g.is_minimal_resolution() {
        return Err(Error::NotMinimalResolution);
    }
    if !quotient::is_log_terminal(g)? {
        return Err(Error::NotQuotient);
    }
    if is_chain(g) {
        return Err(Error::CyclicQuotient);
    }
    if g.all_minus_two() {
        return Err(Error::Gorenstein);
    }
    require_rational(g)
}

/// `e - 1 - sum over end curves of (b_i - 2)`, checked against `chi(F)`.
pub fn end_curve_colength(g: &WeightedDualGraph) -> Result<i64> {
    let z = require_non_cyclic_quotient(g)?;
    end_curve_colength_from(g, &z)
}

pub(crate) fn end_curve_colength_from(g: &WeightedDualGraph, z: &Cycle) -> Result<i64> {
    let e = multiplicity_from(g, z)?;
    let ends: i64 = g.ends().iter().map(|&i| g.weight(i) - 2).sum();
    let formula = e - 1 - ends;
    let f = trace_cycle_from(g, z);
    let direct = colength_unchecked(g, &f)?;
    if formula != direct {
        return Err(Error::FormulaMismatch(format!(
            "end-curve formula gives {formula}, chi(F) gives {direct}"
        )));
    }
    Ok(formula)
}

/// Minimal number of generators of `H^0(O(-C))` for anti-nef `C` on a
/// rational graph: `-C . Z_f + 1`.
pub fn mu_numeric(g: &WeightedDualGraph, c: &Cycle) -> Result<i64> {
    if c.len() != g.len() {
        return Err(Error::DimensionMismatch {
            expected: g.len(),
            found: c.len(),
        });
    }
    let z = require_rational(g)?;
    if !is_anti_nef(g, c) {
        return Err(Error::NotAntiNef);
    }
    Ok(1 - pair(g, c, &z))
}

/// Numeric Ulrich condition `e = (mu(I) - 1) * l(A/I)` for `I = H^0(O(-C))`.
pub fn is_ulrich_numeric(g: &WeightedDualGraph, c: &Cycle) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::ZeroCycle);
    }
    let mu = mu_numeric(g, c)?;
    let e = engine::multiplicity(g)?;
    let length = engine::colength(g, c)?;
    Ok(e == (mu - 1) * length)
}

/// Everything the crate can say about one graph, computed once.
///
/// Fields are `None` when their preconditions fail (for instance no
/// nearly Gorenstein report for a non-rational graph). Only internal
/// cross-check failures are returned as errors.
#[derive(Debug, Clone)]
pub struct Classification {
    pub negative_definite: bool,
    pub minimal: bool,
    pub chain: bool,
    pub sequence: Option<ComputationSequence>,
    pub rationality: Option<RationalityReport>,
    pub chi_fundamental: Option<i64>,
    pub ng: Option<NGReport>,
    pub almost_reduced: Option<bool>,
    pub ade: Option<AdeMatch>,
    pub log_terminal: Option<bool>,
    pub seifert: Option<SeifertData>,
    pub pd: Option<PDDivisor>,
    pub ding: Option<DingMatch>,
    pub end_curve_colength: Option<i64>,
}

impl Classification {
    pub fn of(g: &WeightedDualGraph) -> Result<Self> {
        Self::compute(g, true)
    }

    /// Lattice invariants only: leaves `log_terminal`, `ding` and
    /// `end_curve_colength` unset and skips the discrepancy solve.
    pub fn lattice_only(g: &WeightedDualGraph) -> Result<Self> {
        Self::compute(g, false)
    }

    fn compute(g: &WeightedDualGraph, quotient_data: bool) -> Result<Self> {
        let negative_definite = graph_is_negative_definite(g);
        let minimal = g.is_minimal_resolution();
        let chain = is_chain(g);
        let seifert = star_decompose(g).ok();
        let pd = seifert
            .as_ref()
            .map(|s| PDDivisor::new(s.central_weight, s.sorted_fractions()));
        let mut out = Classification {
            negative_definite,
            minimal,
            chain,
            sequence: None,
            rationality: None,
            chi_fundamental: None,
            ng: None,
            almost_reduced: None,
            ade: None,
            log_terminal: None,
            seifert,
            pd,
            ding: None,
            end_curve_colength: None,
        };
        if !negative_definite {
            return Ok(out);
        }
        let seq = laufer_unchecked(g);
        let z = seq.result.clone();
        let rationality = rationality_from(g, &z, &seq)?;
        out.chi_fundamental = Some(1 - rationality.p_f);
        let rational = rationality.is_rational;
        out.sequence = Some(seq);
        out.rationality = Some(rationality);

        if minimal && quotient_data {
            let by_shape = log_terminal_by_shape(g);
            let by_discrepancy = log_terminal_by_discrepancy(g)?;
            if by_shape != by_discrepancy {
                return Err(Error::CrossCheckMismatch(format!(
                    "shape test says {by_shape}, discrepancy test says {by_discrepancy}"
                )));
            }
            out.log_terminal = Some(by_shape);
        }
        if !rational {
            return Ok(out);
        }
        out.almost_reduced = Some(almost_reduced_from(g, &z));
        if !minimal {
            return Ok(out);
        }
        out.ade = Some(match_ade_from(g, &z));
        let gorenstein = g.all_minus_two();
        if out.log_terminal == Some(true) && !chain && !gorenstein {
            out.end_curve_colength = Some(end_curve_colength_from(g, &z)?);
            out.ding = out.seifert.as_ref().and_then(match_ding_data);
        }
        out.ng = Some(nearly_gorenstein_from(g, z)?);
        Ok(out)
    }

    pub fn fundamental_cycle(&self) -> Option<&Cycle> {
        self.sequence.as_ref().map(|s| &s.result)
    }

    pub fn is_rational(&self) -> bool {
        self.rationality.as_ref().is_some_and(|r| r.is_rational)
    }

    pub fn is_gorenstein(&self) -> bool {
        self.ng.as_ref().is_some_and(|r| r.gorenstein)
    }

    pub fn is_nearly_gorenstein(&self) -> bool {
        self.ng.as_ref().is_some_and(|r| r.nearly_gorenstein)
    }

    pub fn ade_pattern(&self) -> Option<AdePattern> {
        self.ade.as_ref().and_then(|m| m.pattern)
    }
}

/// `K_X . Z_f`, exposed for reports.
pub fn canonical_degree_of_fundamental(g: &WeightedDualGraph, z: &Cycle) -> i64 {
    canonical_degree(g, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::fundamental_cycle;
    use crate::fixtures;

    #[test]
    fn gorenstein() {
        assert!(is_gorenstein(&fixtures::e8()).unwrap());
        assert!(!is_gorenstein(&fixtures::rtp_d0()).unwrap());
        assert!(!is_gorenstein(&WeightedDualGraph::chain(&[3]).unwrap()).unwrap());
        let five = WeightedDualGraph::star(2, &vec![vec![3]; 5]).unwrap();
        assert_eq!(is_gorenstein(&five).unwrap_err(), Error::NotRational);
    }

    #[test]
    fn ng_reports() {
        let r = nearly_gorenstein(&fixtures::rtp_d0()).unwrap();
        assert!(r.nearly_gorenstein && !r.gorenstein);
        assert_eq!(r.trace_colength, 1);
        assert_eq!(r.multiplicity, 3);

        let r = nearly_gorenstein(&fixtures::non_ulrich_quotient()).unwrap();
        assert!(!r.nearly_gorenstein);
        assert_eq!(r.trace_colength, 2);
        assert_eq!(r.structural.case, StructuralCase::None);

        let r = nearly_gorenstein(&fixtures::heavy_coefficient_two()).unwrap();
        assert!(r.nearly_gorenstein);
        assert_eq!(r.structural.case, StructuralCase::SingleDoubleCurve);
        assert_eq!(r.structural.witnesses, vec![1]);
        assert_eq!(r.multiplicity, 4);

        let r = nearly_gorenstein(&fixtures::e8()).unwrap();
        assert!(r.gorenstein && r.nearly_gorenstein);
        assert_eq!(r.trace_colength, 0);
    }

    #[test]
    fn structural_cases() {
        let c = structural_case(&WeightedDualGraph::chain(&[3]).unwrap()).unwrap();
        assert_eq!(c.case, StructuralCase::Irreducible);
        let c = structural_case(&fixtures::heavy_center_star(6)).unwrap();
        assert_eq!(c.case, StructuralCase::SingleDoubleCurve);
        assert_eq!(c.witnesses, vec![0]);
        let c = structural_case(&WeightedDualGraph::chain(&[2, 3, 2]).unwrap()).unwrap();
        assert_eq!(c.case, StructuralCase::TwoReducedCurves);
        assert_eq!(c.witnesses, vec![0, 2]);
    }

    #[test]
    fn almost_reduced() {
        assert!(is_almost_reduced(&fixtures::d_n(7)).unwrap());
        assert!(!is_almost_reduced(&fixtures::heavy_center_star(5)).unwrap());
        assert!(is_almost_reduced(&fixtures::rtp_d0()).unwrap());
    }

    #[test]
    fn ade() {
        assert_eq!(
            match_ade(&fixtures::rtp_b0(3)).unwrap().pattern,
            Some(AdePattern::D)
        );
        assert_eq!(
            match_ade(&fixtures::rtp_d0()).unwrap().pattern,
            Some(AdePattern::E6)
        );
        let m = match_ade(&fixtures::e8()).unwrap();
        assert_eq!(m.pattern, Some(AdePattern::E8));
        assert_eq!(m.roles.len(), 8);
        assert_eq!(match_ade(&fixtures::e7()).unwrap().pattern, Some(AdePattern::E7));
        assert_eq!(match_ade(&fixtures::a_n(4)).unwrap().pattern, Some(AdePattern::A));
        assert_eq!(match_ade(&fixtures::non_ulrich_quotient()).unwrap().pattern, None);
        // E7 shape with a heavy curve at a (-2) position
        let mut w = vec![2; 7];
        w[5] = 3;
        let g = WeightedDualGraph::from_weights(&w, fixtures::e7().edges()).unwrap();
        assert_eq!(match_ade(&g).unwrap().pattern, None);
    }

    #[test]
    fn end_curve_formula() {
        assert_eq!(end_curve_colength(&fixtures::non_ulrich_quotient()).unwrap(), 2);
        assert_eq!(end_curve_colength(&fixtures::ding_item(2)).unwrap(), 1);
        assert_eq!(
            end_curve_colength(&fixtures::a_n(3)).unwrap_err(),
            Error::CyclicQuotient
        );
        assert_eq!(
            end_curve_colength(&fixtures::e6()).unwrap_err(),
            Error::Gorenstein
        );
        assert_eq!(
            end_curve_colength(&fixtures::heavy_center_star(5)).unwrap_err(),
            Error::NotQuotient
        );
    }

    #[test]
    fn ulrich() {
        let g = fixtures::non_ulrich_quotient();
        let (z, _) = fundamental_cycle(&g).unwrap();
        assert_eq!(mu_numeric(&g, &Cycle::zero(5)).unwrap(), 1);
        assert_eq!(mu_numeric(&g, &z).unwrap(), 5);
        assert!(is_ulrich_numeric(&g, &z).unwrap());
        let f = engine::trace_cycle(&g).unwrap();
        assert_eq!(mu_numeric(&g, &f).unwrap(), 5);
        assert!(!is_ulrich_numeric(&g, &f).unwrap());

        let d0 = fixtures::rtp_d0();
        let f = engine::trace_cycle(&d0).unwrap();
        assert!(is_ulrich_numeric(&d0, &f).unwrap());
        assert_eq!(
            is_ulrich_numeric(&d0, &Cycle::zero(6)).unwrap_err(),
            Error::ZeroCycle
        );
        assert_eq!(
            mu_numeric(&d0, &Cycle::unit(6, 0)).unwrap_err(),
            Error::NotAntiNef
        );
    }

    #[test]
    fn classification_bundle() {
        let c = Classification::of(&fixtures::ding_item(5)).unwrap();
        assert!(c.is_rational() && c.is_nearly_gorenstein() && !c.is_gorenstein());
        assert_eq!(c.ding, Some(DingMatch::Sporadic { number: 5 }));
        assert_eq!(c.end_curve_colength, Some(1));
        let flat = WeightedDualGraph::star(2, &[vec![2], vec![2], vec![2], vec![2]]).unwrap();
        let c = Classification::of(&flat).unwrap();
        assert!(!c.negative_definite && c.ng.is_none());
    }
}
