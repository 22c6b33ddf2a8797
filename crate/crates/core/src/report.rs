//! Serializable reports for the `classify` and `quotient` commands.
//!
//! Keys appear in declaration order, cycles are maps keyed by vertex id in
//! input order, and exact rationals are strings `"num/den"`. Invariants
//! whose preconditions fail are `null` and the reason is listed under
//! `errors` with a stable code.

use std::fmt::{self, Write as _};

use indexmap::IndexMap;
use serde::Serialize;

use crate::classify::{self, AdePattern, Classification, StructuralCase};
use crate::cycle::{format_rational, Cycle};
use crate::error::{Error, Result};
use crate::form::discrepancies;
use crate::graph::WeightedDualGraph;
use crate::quotient::{self, DingMatch, PDDivisor, SeifertData};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorEntry {
    pub stage: &'static str,
    pub code: &'static str,
    pub message: String,
}

impl ErrorEntry {
    fn new(stage: &'static str, err: &Error) -> Self {
        ErrorEntry {
            stage,
            code: err.code(),
            message: err.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepEntry {
    pub vertex: String,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Criteria {
    pub f_equals_zf: bool,
    pub k_plus_zf_anti_nef: bool,
    pub numeric: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub schema_version: u32,
    /// Weight `b = -E^2` per vertex id.
    pub weights: IndexMap<String, i64>,
    pub edges: Vec<[String; 2]>,
    pub negative_definite: bool,
    pub determinant: String,
    pub minimal_resolution: bool,
    pub chain: bool,
    pub rational: Option<bool>,
    pub p_f: Option<i64>,
    pub first_violation: Option<StepEntry>,
    pub sequence_length: Option<usize>,
    pub fundamental_cycle: Option<IndexMap<String, i64>>,
    pub chi_fundamental: Option<i64>,
    pub canonical_degree_fundamental: Option<i64>,
    /// `e = -Z_f^2`.
    pub multiplicity: Option<i64>,
    pub embedding_dimension: Option<i64>,
    pub gorenstein: Option<bool>,
    pub nearly_gorenstein: Option<bool>,
    pub criteria: Option<Criteria>,
    pub structural_case: Option<StructuralCase>,
    pub witnesses: Option<Vec<String>>,
    pub almost_reduced: Option<bool>,
    pub ade_pattern: Option<AdePattern>,
    pub trace_cycle: Option<IndexMap<String, i64>>,
    pub chi_trace: Option<i64>,
    pub trace_colength: Option<i64>,
    /// Numeric Ulrich test for the trace ideal; `null` when Gorenstein.
    pub trace_ulrich: Option<bool>,
    pub log_terminal: Option<bool>,
    pub quotient: Option<QuotientReport>,
    pub errors: Vec<ErrorEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchEntry {
    pub vertices: Vec<String>,
    pub weights: Vec<i64>,
    pub q: i64,
    pub p: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorEntry {
    pub central_degree: i64,
    /// Sorted `q/p` strings.
    pub fractions: Vec<String>,
    pub degree: String,
    pub display: String,
    /// The display convention is only established for central degree 2.
    pub extended_convention: bool,
}

impl DivisorEntry {
    fn of(pd: &PDDivisor) -> Self {
        DivisorEntry {
            central_degree: pd.central_degree,
            fractions: pd.fractions.iter().map(ToString::to_string).collect(),
            degree: format_rational(&pd.degree()),
            display: pd.display(),
            extended_convention: pd.is_extended_convention(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DingEntry {
    #[serde(flatten)]
    pub item: DingMatch,
    /// Item number in the list, 1 through 11.
    pub position: u8,
    pub absent_from_earlier_list: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub chain: bool,
    /// `q/p` of the whole chain read from its first vertex.
    pub chain_fraction: Option<String>,
    pub star: bool,
    pub center: Option<String>,
    pub central_weight: Option<i64>,
    pub branches: Vec<BranchEntry>,
    /// Sorted branch orders `q_i`.
    pub orders: Vec<i64>,
    pub platonic: bool,
    pub log_terminal: Option<bool>,
    pub discrepancies: Option<IndexMap<String, String>>,
    pub pd_divisor: Option<DivisorEntry>,
    pub ding: Option<DingEntry>,
    pub end_curve_colength: Option<i64>,
    pub errors: Vec<ErrorEntry>,
}

/// Top-level document of the `quotient` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientDocument {
    pub schema_version: u32,
    #[serde(flatten)]
    pub report: QuotientReport,
}

fn by_id(g: &WeightedDualGraph, c: &Cycle) -> IndexMap<String, i64> {
    g.ids()
        .iter()
        .cloned()
        .zip(c.coefficients().iter().copied())
        .collect()
}

fn ids(g: &WeightedDualGraph, v: &[usize]) -> Vec<String> {
    v.iter().map(|&i| g.id(i).to_string()).collect()
}

fn chain_order(g: &WeightedDualGraph) -> Vec<usize> {
    let start = (0..g.len()).find(|&i| g.degree(i) <= 1).unwrap_or(0);
    let mut order = vec![start];
    let (mut prev, mut cur) = (usize::MAX, start);
    while let Some(&next) = g.neighbors(cur).iter().find(|&&x| x != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Quotient data of a graph; never fails on non-quotient input, which is
/// described through `errors` instead.
pub fn quotient_report(g: &WeightedDualGraph) -> Result<QuotientReport> {
    let c = Classification::of(g)?;
    Ok(quotient_from(g, &c))
}

fn quotient_from(g: &WeightedDualGraph, c: &Classification) -> QuotientReport {
    let mut errors = Vec::new();
    let chain_fraction = if c.chain {
        let weights: Vec<i64> = chain_order(g).iter().map(|&i| g.weight(i)).collect();
        match quotient::branch_fraction(&weights) {
            Ok(f) => Some(f.to_string()),
            Err(e) => {
                errors.push(ErrorEntry::new("chain_fraction", &e));
                None
            }
        }
    } else {
        None
    };
    let seifert: Option<&SeifertData> = c.seifert.as_ref();
    if !c.chain && seifert.is_none() {
        if let Err(e) = quotient::star_decompose(g) {
            errors.push(ErrorEntry::new("star_decompose", &e));
        }
    }
    let branches = seifert
        .map(|s| {
            s.branches
                .iter()
                .map(|b| BranchEntry {
                    vertices: ids(g, &b.vertices),
                    weights: b.weights.clone(),
                    q: b.fraction.q,
                    p: b.fraction.p,
                })
                .collect()
        })
        .unwrap_or_default();
    let orders = seifert.map(|s| s.orders()).unwrap_or_default();
    let platonic = seifert.is_some_and(|s| s.branches.len() == 3 && quotient::is_platonic(&orders));
    let discrepancies = match discrepancies(g) {
        Ok(a) => Some(
            g.ids()
                .iter()
                .cloned()
                .zip(a.coefficients().iter().map(format_rational))
                .collect(),
        ),
        Err(e) => {
            errors.push(ErrorEntry::new("discrepancies", &e));
            None
        }
    };
    if c.log_terminal.is_none() {
        let e = if !c.minimal {
            Error::NotMinimalResolution
        } else {
            Error::NotNegativeDefinite
        };
        errors.push(ErrorEntry::new("log_terminal", &e));
    }
    let ding = c.ding.map(|m| DingEntry {
        item: m,
        position: m.number(),
        absent_from_earlier_list: m.absent_from_earlier_list(),
    });
    if c.log_terminal == Some(true) && !c.chain && c.ding.is_none() {
        let e = if c.is_gorenstein() {
            Some(Error::Gorenstein)
        } else if !c.is_rational() {
            Some(Error::NotRational)
        } else {
            None
        };
        if let Some(e) = e {
            errors.push(ErrorEntry::new("quotient_list", &e));
        }
    }
    QuotientReport {
        chain: c.chain,
        chain_fraction,
        star: seifert.is_some(),
        center: seifert.map(|s| g.id(s.center).to_string()),
        central_weight: seifert.map(|s| s.central_weight),
        branches,
        orders,
        platonic,
        log_terminal: c.log_terminal,
        discrepancies,
        pd_divisor: c.pd.as_ref().map(DivisorEntry::of),
        ding,
        end_curve_colength: c.end_curve_colength,
        errors,
    }
}

/// Everything the crate computes about a graph.
pub fn classify_report(g: &WeightedDualGraph) -> Result<ClassifyReport> {
    let c = Classification::of(g)?;
    let mut errors = Vec::new();
    if !c.negative_definite {
        errors.push(ErrorEntry::new("fundamental_cycle", &Error::NotNegativeDefinite));
    } else if !c.is_rational() {
        errors.push(ErrorEntry::new("nearly_gorenstein", &Error::NotRational));
    } else if !c.minimal {
        errors.push(ErrorEntry::new("nearly_gorenstein", &Error::NotMinimalResolution));
    }
    let z = c.fundamental_cycle();
    let ng = c.ng.as_ref();
    let multiplicity = ng.map(|r| r.multiplicity).or_else(|| {
        z.filter(|_| c.is_rational())
            .map(|z| -crate::engine::pair(g, z, z))
    });
    let trace_ulrich = match ng {
        Some(r) if !r.gorenstein => Some(classify::is_ulrich_numeric(g, &r.trace_cycle)?),
        _ => None,
    };
    let quotient = c.seifert.is_some() || c.chain;
    Ok(ClassifyReport {
        schema_version: SCHEMA_VERSION,
        weights: g.ids().iter().cloned().zip(g.weights().iter().copied()).collect(),
        edges: g
            .edges()
            .iter()
            .map(|&(a, b)| [g.id(a).to_string(), g.id(b).to_string()])
            .collect(),
        negative_definite: c.negative_definite,
        determinant: g.intersection_form().determinant().to_string(),
        minimal_resolution: c.minimal,
        chain: c.chain,
        rational: c.rationality.as_ref().map(|r| r.is_rational),
        p_f: c.rationality.as_ref().map(|r| r.p_f),
        first_violation: c
            .rationality
            .as_ref()
            .and_then(|r| r.first_violation)
            .map(|s| StepEntry {
                vertex: g.id(s.vertex).to_string(),
                value: s.value,
            }),
        sequence_length: c.sequence.as_ref().map(|s| s.steps.len() + 1),
        fundamental_cycle: z.map(|z| by_id(g, z)),
        chi_fundamental: c.chi_fundamental,
        canonical_degree_fundamental: z.map(|z| classify::canonical_degree_of_fundamental(g, z)),
        multiplicity,
        embedding_dimension: multiplicity.map(|e| e + 1),
        gorenstein: ng.map(|r| r.gorenstein),
        nearly_gorenstein: ng.map(|r| r.nearly_gorenstein),
        criteria: ng.map(|r| Criteria {
            f_equals_zf: r.criterion_f_equals_zf,
            k_plus_zf_anti_nef: r.criterion_k_plus_zf_anti_nef,
            numeric: r.criterion_numeric,
        }),
        structural_case: ng.map(|r| r.structural.case),
        witnesses: ng.map(|r| ids(g, &r.structural.witnesses)),
        almost_reduced: c.almost_reduced,
        ade_pattern: c.ade_pattern(),
        trace_cycle: ng.map(|r| by_id(g, &r.trace_cycle)),
        chi_trace: ng.map(|r| r.trace_colength),
        trace_colength: ng.map(|r| r.trace_colength),
        trace_ulrich,
        log_terminal: c.log_terminal,
        quotient: quotient.then(|| quotient_from(g, &c)),
        errors,
    })
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
}

fn cycle_text(c: &IndexMap<String, i64>) -> String {
    let parts: Vec<String> = c.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    parts.join(" ")
}

/// Human-readable summary of a classify report.
pub fn render_classify(r: &ClassifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "vertices            {}", r.weights.len());
    let _ = writeln!(
        s,
        "negative definite   {} (det {})",
        r.negative_definite, r.determinant
    );
    let _ = writeln!(s, "minimal resolution  {}", r.minimal_resolution);
    let _ = writeln!(
        s,
        "rational            {} (p_f {})",
        opt(&r.rational),
        opt(&r.p_f)
    );
    if let Some(z) = &r.fundamental_cycle {
        let _ = writeln!(s, "Z_f                 {}", cycle_text(z));
    }
    let _ = writeln!(s, "multiplicity e      {}", opt(&r.multiplicity));
    let _ = writeln!(s, "Gorenstein          {}", opt(&r.gorenstein));
    let _ = writeln!(s, "nearly Gorenstein   {}", opt(&r.nearly_gorenstein));
    if let Some(c) = &r.criteria {
        let _ = writeln!(
            s,
            "  F = Z_f {} | K + Z_f anti-nef {} | numeric {} | case {}",
            c.f_equals_zf,
            c.k_plus_zf_anti_nef,
            c.numeric,
            opt(&r.structural_case)
        );
    }
    if let Some(f) = &r.trace_cycle {
        let _ = writeln!(s, "F                   {}", cycle_text(f));
    }
    let _ = writeln!(s, "trace colength      {}", opt(&r.trace_colength));
    let _ = writeln!(s, "almost reduced      {}", opt(&r.almost_reduced));
    let _ = writeln!(s, "ADE pattern         {}", opt(&r.ade_pattern));
    let _ = writeln!(s, "log terminal        {}", opt(&r.log_terminal));
    if let Some(q) = &r.quotient {
        if let Some(d) = &q.pd_divisor {
            let _ = writeln!(s, "PD divisor          {}", d.display);
        }
        if let Some(d) = &q.ding {
            let _ = writeln!(s, "quotient list item  {}", d.item);
        }
    }
    for e in &r.errors {
        let _ = writeln!(s, "note: {}: {} ({})", e.stage, e.message, e.code);
    }
    s
}

/// Human-readable summary of a quotient report.
pub fn render_quotient(r: &QuotientReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "chain               {}", r.chain);
    if let Some(f) = &r.chain_fraction {
        let _ = writeln!(s, "chain fraction      {f}");
    }
    if r.star {
        let _ = writeln!(
            s,
            "center              {} (weight {})",
            opt(&r.center),
            opt(&r.central_weight)
        );
        for b in &r.branches {
            let _ = writeln!(s, "  branch {:?} -> {}/{}", b.weights, b.q, b.p);
        }
        let _ = writeln!(s, "orders              {:?} (platonic {})", r.orders, r.platonic);
    }
    let _ = writeln!(s, "log terminal        {}", opt(&r.log_terminal));
    if let Some(d) = &r.pd_divisor {
        let note = if d.extended_convention {
            " (central degree != 2)"
        } else {
            ""
        };
        let _ = writeln!(s, "PD divisor          {}{note}", d.display);
        let _ = writeln!(s, "degree              {}", d.degree);
    }
    if let Some(d) = &r.ding {
        let extra = if d.absent_from_earlier_list {
            " (absent from the earlier list)"
        } else {
            ""
        };
        let _ = writeln!(s, "quotient list item  {}{extra}", d.item);
    }
    if let Some(l) = r.end_curve_colength {
        let _ = writeln!(s, "trace colength      {l}");
    }
    for e in &r.errors {
        let _ = writeln!(s, "note: {}: {} ({})", e.stage, e.message, e.code);
    }
    s
}
