//! Computation sequences on the exceptional lattice: the fundamental cycle,
//! the rationality test, minimal anti-nef lifts, the canonical trace cycle
//! and lengths of the corresponding ideals.
//!
//! A computation sequence grows a cycle one curve at a time, always adding
//! the smallest-index curve `E_j` that the current cycle meets positively.
//! On a negative definite lattice this never overshoots the minimal
//! solution, so the sequence stops exactly there.

use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::form::graph_is_negative_definite;
use crate::graph::WeightedDualGraph;

/// One addition `C_i = C_{i-1} + E_j` with the value that licensed it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub vertex: usize,
    /// `(L + C_{i-1}) . E_j`, always `>= 1`.
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputationSequence {
    /// First curve of a fundamental-cycle sequence; `None` for lifts that
    /// start from a given cycle.
    pub seed: Option<usize>,
    pub steps: Vec<Step>,
    pub result: Cycle,
}

impl ComputationSequence {
    /// Index into `steps` of the first step whose value is not 1.
    pub fn first_violation(&self) -> Option<usize> {
        self.steps.iter().position(|s| s.value != 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalityReport {
    pub is_rational: bool,
    /// Arithmetic genus of the fundamental cycle, `1 - chi(Z_f)`.
    pub p_f: i64,
    pub first_violation: Option<Step>,
}

/// `C . E_i`.
pub fn intersect_curve(g: &WeightedDualGraph, c: &Cycle, i: usize) -> i64 {
    -g.weight(i) * c[i] + g.neighbors(i).iter().map(|&j| c[j]).sum::<i64>()
}

/// The vector `(C . E_i)_i`.
pub fn intersection_vector(g: &WeightedDualGraph, c: &Cycle) -> Vec<i64> {
    (0..g.len()).map(|i| intersect_curve(g, c, i)).collect()
}

/// `C . D`.
pub fn pair(g: &WeightedDualGraph, c: &Cycle, d: &Cycle) -> i64 {
    (0..g.len())
        .filter(|&i| c[i] != 0)
        .map(|i| c[i] * intersect_curve(g, d, i))
        .sum()
}

/// `K_X . C` with `K_X . E_i = b_i - 2`.
pub fn canonical_degree(g: &WeightedDualGraph, c: &Cycle) -> i64 {
    (0..g.len()).map(|i| (g.weight(i) - 2) * c[i]).sum()
}

pub fn is_anti_nef(g: &WeightedDualGraph, c: &Cycle) -> bool {
    c.len() == g.len() && (0..g.len()).all(|i| intersect_curve(g, c, i) <= 0)
}

fn check_len(g: &WeightedDualGraph, len: usize) -> Result<()> {
    if len == g.len() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: g.len(),
            found: len,
        })
    }
}

/// Grows `start` by the smallest-index curve with `(L + C).E_j > 0` until
/// none is left. Terminates whenever the form is negative definite.
pub(crate) fn lift_unchecked(
    g: &WeightedDualGraph,
    l_values: &[i64],
    start: Cycle,
    seed: Option<usize>,
) -> ComputationSequence {
    let mut c = start;
    let mut value: Vec<i64> = (0..g.len())
        .map(|i| l_values[i] + intersect_curve(g, &c, i))
        .collect();
    let mut steps = Vec::new();
    while let Some(j) = value.iter().position(|&v| v > 0) {
        steps.push(Step {
            vertex: j,
            value: value[j],
        });
        c.add_curve(j);
        value[j] -= g.weight(j);
        for &k in g.neighbors(j) {
            value[k] += 1;
        }
    }
    ComputationSequence {
        seed,
        steps,
        result: c,
    }
}

/// Laufer's sequence seeded at vertex 0; assumes negative definiteness.
pub(crate) fn laufer_unchecked(g: &WeightedDualGraph) -> ComputationSequence {
    let zero = vec![0; g.len()];
    lift_unchecked(g, &zero, Cycle::unit(g.len(), 0), Some(0))
}

/// The fundamental cycle `Z_f`: the smallest nonzero anti-nef cycle.
pub fn fundamental_cycle(g: &WeightedDualGraph) -> Result<(Cycle, ComputationSequence)> {
    if !graph_is_negative_definite(g) {
        return Err(Error::NotNegativeDefinite);
    }
    let seq = laufer_unchecked(g);
    Ok((seq.result.clone(), seq))
}

/// Rationality via the computation sequence (every step meets the growing
/// cycle in exactly one point) and, independently, via `chi(Z_f) = 1`.
pub fn rationality(g: &WeightedDualGraph) -> Result<RationalityReport> {
    let (z, seq) = fundamental_cycle(g)?;
    rationality_from(g, &z, &seq)
}

pub(crate) fn rationality_from(
    g: &WeightedDualGraph,
    z: &Cycle,
    seq: &ComputationSequence,
) -> Result<RationalityReport> {
    let first_violation = seq.first_violation().map(|i| seq.steps[i]);
    let p_f = 1 - chi(g, z)?;
    let by_steps = first_violation.is_none();
    let by_genus = p_f == 0;
    if by_steps != by_genus {
        return Err(Error::InternalDisagreement(format!(
            "computation sequence says rational={by_steps} but p_f={p_f}"
        )));
    }
    Ok(RationalityReport {
        is_rational: by_steps,
        p_f,
        first_violation,
    })
}

/// `chi(C) = -(C.C + K.C) / 2`.
pub fn chi(g: &WeightedDualGraph, c: &Cycle) -> Result<i64> {
    check_len(g, c.len())?;
    let twice = -(pair(g, c, c) + canonical_degree(g, c));
    if twice % 2 != 0 {
        return Err(Error::NonIntegralResult);
    }
    Ok(twice / 2)
}

fn require_rational(g: &WeightedDualGraph) -> Result<(Cycle, ComputationSequence)> {
    let (z, seq) = fundamental_cycle(g)?;
    if !rationality_from(g, &z, &seq)?.is_rational {
        return Err(Error::NotRational);
    }
    Ok((z, seq))
}

/// `e = -Z_f^2`, checked against `2 + K.Z_f`.
pub fn multiplicity(g: &WeightedDualGraph) -> Result<i64> {
    let (z, _) = require_rational(g)?;
    multiplicity_from(g, &z)
}

pub(crate) fn multiplicity_from(g: &WeightedDualGraph, z: &Cycle) -> Result<i64> {
    let e = -pair(g, z, z);
    let adjunction = 2 + canonical_degree(g, z);
    if e != adjunction {
        return Err(Error::InternalDisagreement(format!(
            "-Z^2 = {e} but 2 + K.Z = {adjunction}"
        )));
    }
    Ok(e)
}

/// Smallest cycle `C >= start` with `(L + C) . E_i <= 0` for every curve,
/// where `L` is given by its intersection numbers `L . E_i`.
pub fn min_antinef_lift(
    g: &WeightedDualGraph,
    l_values: &[i64],
    start: &Cycle,
) -> Result<(Cycle, ComputationSequence)> {
    check_len(g, l_values.len())?;
    check_len(g, start.len())?;
    if !start.is_effective() {
        return Err(Error::NotEffective);
    }
    if !graph_is_negative_definite(g) {
        return Err(Error::NotNegativeDefinite);
    }
    let seq = lift_unchecked(g, l_values, start.clone(), None);
    Ok((seq.result.clone(), seq))
}

/// The canonical trace cycle `F`: the smallest cycle with `K_X + F`
/// anti-nef. Zero exactly when `K_X` is numerically trivial.
pub fn trace_cycle(g: &WeightedDualGraph) -> Result<Cycle> {
    if !graph_is_negative_definite(g) {
        return Err(Error::NotNegativeDefinite);
    }
    if !g.is_minimal_resolution() {
        return Err(Error::NotMinimalResolution);
    }
    let (z, _) = require_rational(g)?;
    Ok(trace_cycle_from(g, &z))
}

pub(crate) fn trace_cycle_from(g: &WeightedDualGraph, z: &Cycle) -> Cycle {
    let k = g.canonical_intersections();
    if k.is_trivial() {
        return Cycle::zero(g.len());
    }
    lift_unchecked(g, k.as_slice(), z.clone(), None).result
}

/// `l(A / H^0(O(-C)))` for an anti-nef cycle `C` on a rational graph; this
/// is `chi(C)`, and 0 for the zero cycle.
pub fn colength(g: &WeightedDualGraph, c: &Cycle) -> Result<i64> {
    check_len(g, c.len())?;
    require_rational(g)?;
    colength_unchecked(g, c)
}

pub(crate) fn colength_unchecked(g: &WeightedDualGraph, c: &Cycle) -> Result<i64> {
    if c.is_zero() {
        return Ok(0);
    }
    if !is_anti_nef(g, c) {
        return Err(Error::NotAntiNef);
    }
    chi(g, c)
}
