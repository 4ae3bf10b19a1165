//! The cross-checked counts record behind `counts`.
//!
//! Every quantity that has both a closed-form route and a direct route is
//! computed by both and compared; `all_consistent` is the conjunction of the
//! comparisons. The brute-force triple scans are optional (`cross_check`)
//! since they are the only superlinear-in-`C(|T|,3)` routes.

use serde::Serialize;
use thiserror::Error;

use crate::committees::{
    count_committees_by_lattice, count_committees_by_support, count_no_opposite_triples_brute,
    count_no_opposite_triples_formula, enumerate_committees3,
};
use crate::convexity::{build_lattice, LatticeError};
use crate::graph::{
    build_graph, connectivity, count_triangles, formula_counts, GraphError, GraphKind,
    IntervalTerm, TriangleMethod,
};
use crate::sign::ToposSet;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Every count, by every route. Field order is the serialization order.
#[derive(Clone, Debug, Serialize)]
pub struct CountsReport {
    pub tope_count: u64,
    /// Tope count via the free-set sum; must equal `tope_count`.
    pub vertex_count_formula: i64,
    pub edge_count_direct: u64,
    pub edge_count_formula: i64,
    pub triangles_direct: u64,
    pub triangles_trace: u64,
    pub triangles_neighbor_sum: u64,
    /// Committee count via disjoint positive supports.
    pub committees_support_sum: u64,
    /// Committee count via lattice-member triples.
    pub committees_lattice_sum: u64,
    /// Brute-force committee enumeration over all triples (cross-check only).
    pub committees_brute: Option<u64>,
    pub no_opposite_triples_formula: i64,
    pub no_opposite_triples_brute: Option<u64>,
    pub max_positive_edges_direct: u64,
    pub max_positive_edges_formula: u64,
    /// Max-positive committee count via the disjoint-pair interval sum.
    pub max_positive_committees_formula: u64,
    /// Triangle count of the max-positive subgraph.
    pub max_positive_committees_direct: u64,
    /// Brute-force enumeration restricted to max-positive topes
    /// (cross-check only).
    pub max_positive_committees_brute: Option<u64>,
    pub cyclomatic_formula: i64,
    pub cyclomatic_direct: i64,
    pub max_positive_cyclomatic: i64,
    /// Per-pair interval-coatom counts behind the max-positive committee
    /// formula, pairs in canonical order.
    pub interval_terms: Vec<IntervalTerm>,
    pub all_consistent: bool,
}

/// Builds the full report; `cross_check` adds the brute-force scans.
pub fn counts_report(ts: &ToposSet, cross_check: bool) -> Result<CountsReport, ReportError> {
    let lat = build_lattice(ts)?;
    let formulas = formula_counts(ts, &lat)?;

    let gamma = build_graph(ts, GraphKind::Gamma);
    let gamma_max = build_graph(ts, GraphKind::GammaMax);

    let tope_count = ts.len() as u64;
    let edge_count_direct = gamma.edge_count() as u64;
    let triangles_direct = count_triangles(&gamma, TriangleMethod::Direct);
    let triangles_trace = count_triangles(&gamma, TriangleMethod::Trace);
    let triangles_neighbor_sum = count_triangles(&gamma, TriangleMethod::Neighborhood);
    let committees_support_sum = count_committees_by_support(ts);
    let committees_lattice_sum = count_committees_by_lattice(ts, &lat)?;
    let no_opposite_triples_formula = count_no_opposite_triples_formula(ts, &lat)?;
    let max_positive_edges_direct = gamma_max.edge_count() as u64;
    let max_positive_committees_direct = count_triangles(&gamma_max, TriangleMethod::Direct);
    let cyclomatic_direct = connectivity(&gamma).cyclomatic;

    let committees_brute = cross_check.then(|| enumerate_committees3(ts, false).len() as u64);
    let no_opposite_triples_brute = cross_check.then(|| count_no_opposite_triples_brute(ts));
    let max_positive_committees_brute =
        cross_check.then(|| enumerate_committees3(ts, true).len() as u64);

    let mut consistent = vec![
        vertex_eq(formulas.vertex_count, tope_count),
        vertex_eq(formulas.edge_count, edge_count_direct),
        triangles_direct == triangles_trace,
        triangles_direct == triangles_neighbor_sum,
        committees_support_sum == triangles_direct,
        committees_lattice_sum == triangles_direct,
        formulas.max_positive_edges == max_positive_edges_direct,
        formulas.max_positive_committees == max_positive_committees_direct,
        formulas.cyclomatic == cyclomatic_direct,
        formulas.max_positive_cyclomatic
            == max_positive_edges_direct as i64 - gamma_max.vertex_count() as i64
                + connectivity(&gamma_max).components as i64,
    ];
    if let Some(brute) = committees_brute {
        consistent.push(brute == triangles_direct);
    }
    if let Some(brute) = no_opposite_triples_brute {
        consistent.push(no_opposite_triples_formula == brute as i64);
    }
    if let Some(brute) = max_positive_committees_brute {
        consistent.push(brute == max_positive_committees_direct);
    }

    Ok(CountsReport {
        tope_count,
        vertex_count_formula: formulas.vertex_count,
        edge_count_direct,
        edge_count_formula: formulas.edge_count,
        triangles_direct,
        triangles_trace,
        triangles_neighbor_sum,
        committees_support_sum,
        committees_lattice_sum,
        committees_brute,
        no_opposite_triples_formula,
        no_opposite_triples_brute,
        max_positive_edges_direct,
        max_positive_edges_formula: formulas.max_positive_edges,
        max_positive_committees_formula: formulas.max_positive_committees,
        max_positive_committees_direct,
        max_positive_committees_brute,
        cyclomatic_formula: formulas.cyclomatic,
        cyclomatic_direct,
        max_positive_cyclomatic: formulas.max_positive_cyclomatic,
        interval_terms: formulas.interval_terms,
        all_consistent: consistent.into_iter().all(|ok| ok),
    })
}

fn vertex_eq(formula: i64, direct: u64) -> bool {
    formula >= 0 && formula as u64 == direct
}
