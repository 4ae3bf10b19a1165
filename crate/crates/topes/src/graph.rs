//! Graphs on topes and the counting identities attached to them.
//!
//! Vertices are topes (by canonical index); the edge rule depends on the
//! kind. `Gamma` joins topes whose positive parts cover the ground set;
//! `G` joins topes with disjoint positive parts; the two Kneser kinds are
//! the Kneser graphs of the positive-part and negative-part families, whose
//! edge sets coincide with `G` and `Gamma` respectively. `GammaMax` is the
//! `Gamma` rule restricted to the topes with inclusion-maximal positive
//! parts. All five are pairwise isomorphic on symmetric input; negation maps
//! `G` edges onto `Gamma` edges.
//!
//! Three-tope committees are exactly the triangle vertex sets of `Gamma`,
//! and the max-positive committees those of `GammaMax`, so triangle counting
//! doubles as committee counting. Triangles are counted by direct triple
//! enumeration, by the adjacency-matrix trace over exact big integers, and
//! by the per-edge neighborhood-intersection sum; the lattice side supplies
//! free-set sums for the edge and vertex counts and coatom-interval sums for
//! the max-positive subgraph.

use fixedbitset::FixedBitSet;
use num::{BigUint, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::committees::{is_committee_set, max_positive_topes, CommitteeError};
use crate::convexity::{ConvexLattice, LatticeError};
use crate::exec;
use crate::sign::{GroundSubset, ToposSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    /// Positive parts jointly cover the ground set.
    Gamma,
    /// Positive parts are disjoint.
    G,
    /// Kneser graph of the positive-part family (same edges as `G`).
    KneserPositive,
    /// Kneser graph of the negative-part family (same edges as `Gamma`).
    KneserNegative,
    /// `Gamma` restricted to topes with inclusion-maximal positive parts.
    GammaMax,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Gamma => "gamma",
            GraphKind::G => "g",
            GraphKind::KneserPositive => "kneser-pos",
            GraphKind::KneserNegative => "kneser-neg",
            GraphKind::GammaMax => "gamma-max",
        }
    }
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex list is not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("cycle length {0} is even; the committee property holds for odd cycles")]
    EvenCycle(usize),
    #[error("{name} = {value} is not divisible by {divisor}")]
    NonIntegralSum {
        name: &'static str,
        value: u64,
        divisor: u64,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Committee(#[from] CommitteeError),
}

/// A simple undirected graph on a subset of the topes.
#[derive(Clone, Debug)]
pub struct TopeGraph {
    kind: GraphKind,
    /// Canonical tope indices, ascending; graph-local vertex `v` is the tope
    /// `vertices[v]`.
    vertices: Vec<usize>,
    /// Local index pairs `(i, j)` with `i < j`, lexicographically sorted.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<FixedBitSet>,
}

pub fn build_graph(ts: &ToposSet, kind: GraphKind) -> TopeGraph {
    let vertices: Vec<usize> = match kind {
        GraphKind::GammaMax => max_positive_topes(ts),
        _ => (0..ts.len()).collect(),
    };
    let full = GroundSubset::full(ts.n()).bits();
    let parts: Vec<(u64, u64)> = vertices
        .iter()
        .map(|&i| {
            let t = ts.tope(i);
            (t.positive_part().bits(), t.negative_part().bits())
        })
        .collect();
    let adjacent = |a: (u64, u64), b: (u64, u64)| -> bool {
        match kind {
            GraphKind::Gamma | GraphKind::GammaMax => a.0 | b.0 == full,
            GraphKind::G | GraphKind::KneserPositive => a.0 & b.0 == 0,
            GraphKind::KneserNegative => a.1 & b.1 == 0,
        }
    };
    let nv = vertices.len();
    let mut edges = Vec::new();
    let mut adjacency = vec![FixedBitSet::with_capacity(nv); nv];
    for i in 0..nv {
        for j in i + 1..nv {
            if adjacent(parts[i], parts[j]) {
                edges.push((i, j));
                adjacency[i].insert(j);
                adjacency[j].insert(i);
            }
        }
    }
    TopeGraph {
        kind,
        vertices,
        edges,
        adjacency,
    }
}

impl TopeGraph {
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical tope indices of the vertices.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edges as local vertex pairs, `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges as canonical tope-index pairs.
    pub fn edge_topes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges
            .iter()
            .map(|&(i, j)| (self.vertices[i], self.vertices[j]))
    }

    pub fn tope_index(&self, local: usize) -> usize {
        self.vertices[local]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adjacency[i].contains(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].count_ones(..)
    }

    pub fn neighbors(&self, i: usize) -> &FixedBitSet {
        &self.adjacency[i]
    }

    #[cfg(test)]
    pub(crate) fn from_edges(kind: GraphKind, vertices: Vec<usize>, edges: Vec<(usize, usize)>) -> TopeGraph {
        let nv = vertices.len();
        let mut adjacency = vec![FixedBitSet::with_capacity(nv); nv];
        for &(i, j) in &edges {
            adjacency[i].insert(j);
            adjacency[j].insert(i);
        }
        TopeGraph {
            kind,
            vertices,
            edges,
            adjacency,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleMethod {
    /// Enumerate vertex triples and test the three edges.
    Direct,
    /// One sixth of the trace of the cubed adjacency matrix, over exact big
    /// integers.
    Trace,
    /// One third of the sum of `|N(i) ∩ N(j)|` over the edges.
    Neighborhood,
}

pub fn count_triangles(g: &TopeGraph, method: TriangleMethod) -> u64 {
    match method {
        TriangleMethod::Direct => {
            let nv = g.vertex_count();
            exec::scan_sum(nv, true, |i| {
                let mut count = 0u64;
                for j in i + 1..nv {
                    if !g.has_edge(i, j) {
                        continue;
                    }
                    for k in j + 1..nv {
                        if g.has_edge(i, k) && g.has_edge(j, k) {
                            count += 1;
                        }
                    }
                }
                count
            })
        }
        TriangleMethod::Trace => {
            let trace = trace_of_cubed_adjacency(g);
            let six = BigUint::from(6u32);
            debug_assert!((&trace % &six).is_zero());
            (trace / six)
                .to_u64()
                .expect("triangle count exceeds u64")
        }
        TriangleMethod::Neighborhood => {
            let total = exec::scan_sum(g.edge_count(), true, |e| {
                let (i, j) = g.edges[e];
                let mut common = g.adjacency[i].clone();
                common &= &g.adjacency[j];
                common.count_ones(..) as u64
            });
            debug_assert_eq!(total % 3, 0);
            total / 3
        }
    }
}

fn trace_of_cubed_adjacency(g: &TopeGraph) -> BigUint {
    let nv = g.vertex_count();
    let a: Vec<Vec<BigUint>> = (0..nv)
        .map(|i| {
            (0..nv)
                .map(|j| BigUint::from(u8::from(g.has_edge(i, j))))
                .collect()
        })
        .collect();
    let mut a2 = vec![vec![BigUint::zero(); nv]; nv];
    for (i, a_row) in a.iter().enumerate() {
        for (k, aik) in a_row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (j, akj) in a[k].iter().enumerate() {
                a2[i][j] += aik * akj;
            }
        }
    }
    let mut trace = BigUint::zero();
    for (i, a2_row) in a2.iter().enumerate() {
        for (k, a2ik) in a2_row.iter().enumerate() {
            trace += a2ik * &a[k][i];
        }
    }
    trace
}

/// Triangle vertex sets as ascending canonical tope-index triples, in
/// lexicographic order. For `Gamma` these are exactly the three-tope
/// committees, for `GammaMax` the max-positive ones, and for `G` the
/// anti-committees.
pub fn triangle_vertex_sets(g: &TopeGraph) -> Vec<[usize; 3]> {
    let mut triangles = Vec::new();
    for &(i, j) in &g.edges {
        let mut common = g.adjacency[i].clone();
        common &= &g.adjacency[j];
        for k in common.ones() {
            if k > j {
                triangles.push([g.vertices[i], g.vertices[j], g.vertices[k]]);
            }
        }
    }
    triangles
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub components: usize,
    pub is_connected: bool,
    /// `|E| - |V| + components`.
    pub cyclomatic: i64,
}

pub fn connectivity(g: &TopeGraph) -> Connectivity {
    let nv = g.vertex_count();
    let mut seen = FixedBitSet::with_capacity(nv);
    let mut components = 0usize;
    let mut queue = Vec::new();
    for start in 0..nv {
        if seen.contains(start) {
            continue;
        }
        components += 1;
        seen.insert(start);
        queue.push(start);
        while let Some(v) = queue.pop() {
            for w in g.adjacency[v].ones() {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push(w);
                }
            }
        }
    }
    Connectivity {
        components,
        is_connected: components <= 1,
        cyclomatic: g.edge_count() as i64 - nv as i64 + components as i64,
    }
}

/// One disjoint coatom-complement pair with the coatom count of the interval
/// above its join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalTerm {
    pub left: GroundSubset,
    pub right: GroundSubset,
    pub coatoms_above_join: u64,
}

/// The closed-form counts driven by the lattice.
#[derive(Clone, Debug, Serialize)]
pub struct FormulaCounts {
    /// Edge count of `Gamma` via the free-set sum.
    pub edge_count: i64,
    /// Tope count via the free-set sum.
    pub vertex_count: i64,
    /// Cyclomatic number of `Gamma` via the free-set sum (assumes
    /// connectivity).
    pub cyclomatic: i64,
    /// Edge count of `GammaMax` via the interval-coatom sum.
    pub max_positive_edges: u64,
    /// `1 + max_positive_edges - #coatoms`.
    pub max_positive_cyclomatic: i64,
    /// Max-positive committee count via the disjoint-pair interval sum.
    pub max_positive_committees: u64,
    /// The per-pair interval-coatom counts, pairs in canonical order.
    pub interval_terms: Vec<IntervalTerm>,
}

pub fn formula_counts(ts: &ToposSet, lat: &ConvexLattice) -> Result<FormulaCounts, GraphError> {
    if !lat.matches(ts) {
        return Err(LatticeError::TopeSetMismatch.into());
    }
    let tope_count = ts.len() as u64;

    let mut edge_count = binom2(tope_count) as i64;
    let mut vertex_count = 0i64;
    let mut cyclomatic = 1 + binom2(tope_count) as i64;
    for &a in lat.free_sets() {
        let count = ts.positive_on(a).count_ones(..) as u64;
        let sign = if a.len() % 2 == 0 { 1i64 } else { -1i64 };
        edge_count += sign * binom2(count) as i64;
        vertex_count -= sign * count as i64;
        cyclomatic += sign * binom2(count + 1) as i64;
    }

    // Complements of coatoms, in canonical subset order.
    let mut complements: Vec<GroundSubset> =
        lat.coatoms().iter().map(|c| c.complement(ts.n())).collect();
    complements.sort_unstable();

    let mut degree_sum = 0u64;
    for &d in &complements {
        degree_sum += lat.coatoms_above(d)?.len() as u64;
    }
    if !degree_sum.is_multiple_of(2) {
        return Err(GraphError::NonIntegralSum {
            name: "interval-coatom degree sum",
            value: degree_sum,
            divisor: 2,
        });
    }
    let max_positive_edges = degree_sum / 2;
    let max_positive_cyclomatic =
        1 + max_positive_edges as i64 - lat.coatoms().len() as i64;

    let mut interval_terms = Vec::new();
    let mut pair_sum = 0u64;
    for (i, &d1) in complements.iter().enumerate() {
        for &d2 in &complements[i + 1..] {
            let (meet, join) = lat.meet_join(d1, d2)?;
            if !meet.is_empty() {
                continue;
            }
            let term = lat.coatoms_above(join)?.len() as u64;
            interval_terms.push(IntervalTerm {
                left: d1,
                right: d2,
                coatoms_above_join: term,
            });
            pair_sum += term;
        }
    }
    if !pair_sum.is_multiple_of(3) {
        return Err(GraphError::NonIntegralSum {
            name: "disjoint-pair interval sum",
            value: pair_sum,
            divisor: 3,
        });
    }

    Ok(FormulaCounts {
        edge_count,
        vertex_count,
        cyclomatic,
        max_positive_edges,
        max_positive_cyclomatic,
        max_positive_committees: pair_sum / 3,
        interval_terms,
    })
}

fn binom2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

/// Checks that every vertex degree in `GammaMax` equals the coatom count of
/// the interval above the tope's negative part.
pub fn degree_check_gamma_max(ts: &ToposSet, lat: &ConvexLattice) -> Result<bool, GraphError> {
    if !lat.matches(ts) {
        return Err(LatticeError::TopeSetMismatch.into());
    }
    let g = build_graph(ts, GraphKind::GammaMax);
    for local in 0..g.vertex_count() {
        let tope = ts.tope(g.tope_index(local));
        let above = lat.coatoms_above(tope.negative_part())?;
        if above.len() != g.degree(local) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verifies that `cycle` (local vertex positions) is an odd cycle of `g` and
/// returns whether its vertex set passes the general committee predicate.
pub fn odd_cycle_committee_check(
    ts: &ToposSet,
    g: &TopeGraph,
    cycle: &[usize],
) -> Result<bool, GraphError> {
    if cycle.len() < 3 {
        return Err(GraphError::NotACycle(format!(
            "length {} is below 3",
            cycle.len()
        )));
    }
    if cycle.len().is_multiple_of(2) {
        return Err(GraphError::EvenCycle(cycle.len()));
    }
    let mut seen = std::collections::HashSet::new();
    for &v in cycle {
        if v >= g.vertex_count() {
            return Err(GraphError::NotACycle(format!("vertex {v} out of range")));
        }
        if !seen.insert(v) {
            return Err(GraphError::NotACycle(format!("vertex {v} repeats")));
        }
    }
    for w in cycle.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(GraphError::NotACycle(format!(
                "missing edge between {} and {}",
                w[0], w[1]
            )));
        }
    }
    if !g.has_edge(cycle[cycle.len() - 1], cycle[0]) {
        return Err(GraphError::NotACycle("missing closing edge".into()));
    }
    let topes: Vec<usize> = cycle.iter().map(|&v| g.tope_index(v)).collect();
    Ok(is_committee_set(ts, &topes)?)
}

/// Enumerates up to `limit` simple cycles of odd length `len` (local vertex
/// positions), deterministically: each cycle is reported once, rooted at its
/// smallest vertex, with the orientation fixed by its second vertex.
pub fn enumerate_odd_cycles(g: &TopeGraph, len: usize, limit: usize) -> Vec<Vec<usize>> {
    assert!(len >= 3 && len % 2 == 1, "cycle length must be odd and >= 3");
    let mut found = Vec::new();
    let nv = g.vertex_count();
    let mut path = Vec::with_capacity(len);
    let mut on_path = FixedBitSet::with_capacity(nv);
    for start in 0..nv {
        if found.len() >= limit {
            break;
        }
        path.push(start);
        on_path.insert(start);
        extend_cycles(g, len, limit, start, &mut path, &mut on_path, &mut found);
        on_path.remove(start);
        path.pop();
    }
    found
}

fn extend_cycles(
    g: &TopeGraph,
    len: usize,
    limit: usize,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut FixedBitSet,
    found: &mut Vec<Vec<usize>>,
) {
    if found.len() >= limit {
        return;
    }
    if path.len() == len {
        let last = *path.last().unwrap();
        if g.has_edge(last, start) && path[1] < last {
            found.push(path.clone());
        }
        return;
    }
    let current = *path.last().unwrap();
    for next in g.neighbors(current).ones() {
        if next <= start || on_path.contains(next) {
            continue;
        }
        path.push(next);
        on_path.insert(next);
        extend_cycles(g, len, limit, start, path, on_path, found);
        on_path.remove(next);
        path.pop();
        if found.len() >= limit {
            return;
        }
    }
}

/// DOT rendering with tope-string labels and deterministic order.
pub fn to_dot(g: &TopeGraph, ts: &ToposSet) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "// kind: {}", g.kind().as_str()).unwrap();
    writeln!(out, "graph topes {{").unwrap();
    for (local, &tope) in g.vertices().iter().enumerate() {
        writeln!(out, "  v{local} [label=\"{}\"];", ts.tope(tope)).unwrap();
    }
    for &(i, j) in g.edges() {
        writeln!(out, "  v{i} -- v{j};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[derive(Serialize)]
pub struct GraphExport {
    pub kind: &'static str,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Tope strings, by local vertex index.
    pub vertices: Vec<String>,
    /// Local vertex index pairs.
    pub edges: Vec<(usize, usize)>,
}

pub fn graph_export(g: &TopeGraph, ts: &ToposSet) -> GraphExport {
    GraphExport {
        kind: g.kind().as_str(),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        vertices: g
            .vertices()
            .iter()
            .map(|&i| ts.tope(i).to_string())
            .collect(),
        edges: g.edges().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::committees::enumerate_committees3;
    use crate::convexity::build_lattice;
    use crate::sign::{parse_topes, SignVector};

    const GOLDEN28: &str = include_str!("../../../fixtures/golden28.topes");
    const HEX: &str = include_str!("../../../fixtures/hex.topes");

    fn gs(elements: &[usize]) -> GroundSubset {
        GroundSubset::from_elements(elements.iter().copied()).unwrap()
    }

    fn hex() -> ToposSet {
        parse_topes(HEX).unwrap()
    }

    fn golden28() -> ToposSet {
        parse_topes(GOLDEN28).unwrap()
    }

    fn idx(ts: &ToposSet, s: &str) -> usize {
        ts.index_of(&SignVector::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn hex_gamma_edges_are_frozen() {
        let hex = hex();
        let g = build_graph(&hex, GraphKind::Gamma);
        assert_eq!(g.vertex_count(), 6);
        let expected: Vec<(usize, usize)> = {
            let pairs = [
                ("+-+", "++-"),
                ("+-+", "-+-"),
                ("+-+", "-++"),
                ("+--", "-++"),
                ("++-", "-++"),
                ("++-", "--+"),
            ];
            let mut edges: Vec<(usize, usize)> = pairs
                .iter()
                .map(|(a, b)| {
                    let (x, y) = (idx(&hex, a), idx(&hex, b));
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort_unstable();
            edges
        };
        assert_eq!(g.edges(), expected.as_slice());
    }

    #[test]
    fn negation_maps_g_edges_onto_gamma_edges() {
        for text in [HEX, GOLDEN28] {
            let ts = parse_topes(text).unwrap();
            let gamma = build_graph(&ts, GraphKind::Gamma);
            let g = build_graph(&ts, GraphKind::G);
            let mut mapped: Vec<(usize, usize)> = g
                .edge_topes()
                .map(|(a, b)| {
                    let (x, y) = (
                        ts.opposite_index(a).unwrap(),
                        ts.opposite_index(b).unwrap(),
                    );
                    (x.min(y), x.max(y))
                })
                .collect();
            mapped.sort_unstable();
            let gamma_edges: Vec<(usize, usize)> = gamma.edge_topes().collect();
            assert_eq!(mapped, gamma_edges);
        }
    }

    #[test]
    fn kneser_kinds_coincide_with_g_and_gamma() {
        for text in [HEX, GOLDEN28] {
            let ts = parse_topes(text).unwrap();
            assert_eq!(
                build_graph(&ts, GraphKind::KneserPositive).edges(),
                build_graph(&ts, GraphKind::G).edges()
            );
            assert_eq!(
                build_graph(&ts, GraphKind::KneserNegative).edges(),
                build_graph(&ts, GraphKind::Gamma).edges()
            );
        }
    }

    #[test]
    fn fixture_gamma_max_has_seven_vertices_eleven_edges() {
        let p = golden28();
        let g = build_graph(&p, GraphKind::GammaMax);
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 11);
        assert_eq!(count_triangles(&g, TriangleMethod::Direct), 3);
        assert_eq!(count_triangles(&g, TriangleMethod::Trace), 3);
        assert_eq!(count_triangles(&g, TriangleMethod::Neighborhood), 3);
    }

    #[test]
    fn triangle_methods_agree_everywhere() {
        for text in [HEX, GOLDEN28] {
            let ts = parse_topes(text).unwrap();
            for kind in [
                GraphKind::Gamma,
                GraphKind::G,
                GraphKind::KneserPositive,
                GraphKind::KneserNegative,
                GraphKind::GammaMax,
            ] {
                let g = build_graph(&ts, kind);
                let direct = count_triangles(&g, TriangleMethod::Direct);
                assert_eq!(direct, count_triangles(&g, TriangleMethod::Trace));
                assert_eq!(direct, count_triangles(&g, TriangleMethod::Neighborhood));
                assert_eq!(direct as usize, triangle_vertex_sets(&g).len());
            }
        }
    }

    #[test]
    fn hex_gamma_has_one_triangle() {
        let g = build_graph(&hex(), GraphKind::Gamma);
        for method in [
            TriangleMethod::Direct,
            TriangleMethod::Trace,
            TriangleMethod::Neighborhood,
        ] {
            assert_eq!(count_triangles(&g, method), 1);
        }
    }

    #[test]
    fn edgeless_and_single_vertex_graphs() {
        let g = TopeGraph::from_edges(GraphKind::Gamma, vec![0, 1, 2], vec![]);
        for method in [
            TriangleMethod::Direct,
            TriangleMethod::Trace,
            TriangleMethod::Neighborhood,
        ] {
            assert_eq!(count_triangles(&g, method), 0);
        }
        let single = TopeGraph::from_edges(GraphKind::Gamma, vec![0], vec![]);
        let c = connectivity(&single);
        assert_eq!(c.components, 1);
        assert_eq!(c.cyclomatic, 0);
    }

    #[test]
    fn triangles_of_gamma_are_the_committees() {
        for text in [HEX, GOLDEN28] {
            let ts = parse_topes(text).unwrap();
            let gamma_triangles = triangle_vertex_sets(&build_graph(&ts, GraphKind::Gamma));
            let committees: Vec<[usize; 3]> = enumerate_committees3(&ts, false)
                .iter()
                .map(|c| c.members)
                .collect();
            assert_eq!(gamma_triangles, committees);

            let max_triangles = triangle_vertex_sets(&build_graph(&ts, GraphKind::GammaMax));
            let max_committees: Vec<[usize; 3]> = enumerate_committees3(&ts, true)
                .iter()
                .map(|c| c.members)
                .collect();
            assert_eq!(max_triangles, max_committees);
        }
    }

    #[test]
    fn triangles_of_g_are_the_anti_committees() {
        use crate::committees::is_anti_committee;
        for text in [HEX, GOLDEN28] {
            let ts = parse_topes(text).unwrap();
            let g_triangles = triangle_vertex_sets(&build_graph(&ts, GraphKind::G));
            let mut anti = Vec::new();
            for x in 0..ts.len() {
                for y in x + 1..ts.len() {
                    for z in y + 1..ts.len() {
                        if is_anti_committee(&ts, [x, y, z]).unwrap() {
                            anti.push([x, y, z]);
                        }
                    }
                }
            }
            assert_eq!(g_triangles, anti);
        }
    }

    #[test]
    fn hex_formula_counts() {
        let hex = hex();
        let lat = build_lattice(&hex).unwrap();
        let f = formula_counts(&hex, &lat).unwrap();
        assert_eq!(f.edge_count, 6);
        assert_eq!(f.vertex_count, 6);
        assert_eq!(f.cyclomatic, 1);
        assert_eq!(f.max_positive_edges, 3);
        assert_eq!(f.max_positive_cyclomatic, 1);
        assert_eq!(f.max_positive_committees, 1);
        let g = build_graph(&hex, GraphKind::Gamma);
        assert_eq!(f.edge_count, g.edge_count() as i64);
        assert_eq!(connectivity(&g).cyclomatic, f.cyclomatic);
    }

    #[test]
    fn fixture_interval_terms_match_the_golden_values() {
        let p = golden28();
        let lat = build_lattice(&p).unwrap();
        let f = formula_counts(&p, &lat).unwrap();
        let expected_pairs = [
            (gs(&[1, 2]), gs(&[3, 5]), 1),
            (gs(&[1, 2]), gs(&[4, 6]), 1),
            (gs(&[1, 5]), gs(&[2, 3]), 1),
            (gs(&[1, 5]), gs(&[2, 4]), 0),
            (gs(&[1, 5]), gs(&[4, 6]), 1),
            (gs(&[1, 6]), gs(&[2, 3]), 0),
            (gs(&[1, 6]), gs(&[2, 4]), 1),
            (gs(&[1, 6]), gs(&[3, 5]), 1),
            (gs(&[2, 3]), gs(&[4, 6]), 1),
            (gs(&[2, 4]), gs(&[3, 5]), 1),
            (gs(&[3, 5]), gs(&[4, 6]), 1),
        ];
        assert_eq!(f.interval_terms.len(), expected_pairs.len());
        for (term, (left, right, value)) in f.interval_terms.iter().zip(expected_pairs) {
            assert_eq!((term.left, term.right), (left, right));
            assert_eq!(term.coatoms_above_join, value);
        }
        assert_eq!(f.max_positive_committees, 3);
        assert_eq!(f.max_positive_edges, 11);
        assert_eq!(f.max_positive_cyclomatic, 5);
    }

    #[test]
    fn fixture_gamma_counts_match_formulas() {
        let p = golden28();
        let lat = build_lattice(&p).unwrap();
        let f = formula_counts(&p, &lat).unwrap();
        let gamma = build_graph(&p, GraphKind::Gamma);
        assert_eq!(f.vertex_count, 28);
        assert_eq!(f.edge_count, gamma.edge_count() as i64);
        let c = connectivity(&gamma);
        assert!(c.is_connected);
        assert_eq!(f.cyclomatic, c.cyclomatic);
    }

    #[test]
    fn connectivity_on_fixtures() {
        let hex_gamma = build_graph(&hex(), GraphKind::Gamma);
        let c = connectivity(&hex_gamma);
        assert!(c.is_connected);
        assert_eq!(c.cyclomatic, 1);

        let p = golden28();
        let gmax = build_graph(&p, GraphKind::GammaMax);
        let c = connectivity(&gmax);
        assert!(c.is_connected);
        assert_eq!(c.cyclomatic, 5);
    }

    #[test]
    fn degrees_match_interval_coatom_counts() {
        let p = golden28();
        let lat = build_lattice(&p).unwrap();
        assert!(degree_check_gamma_max(&p, &lat).unwrap());

        // Frozen degree table, keyed by negative part.
        let g = build_graph(&p, GraphKind::GammaMax);
        let expected = [
            (gs(&[1, 2]), 2),
            (gs(&[1, 5]), 3),
            (gs(&[1, 6]), 3),
            (gs(&[2, 3]), 3),
            (gs(&[2, 4]), 3),
            (gs(&[3, 5]), 4),
            (gs(&[4, 6]), 4),
        ];
        for (negative, degree) in expected {
            let local = (0..g.vertex_count())
                .find(|&v| p.tope(g.tope_index(v)).negative_part() == negative)
                .unwrap();
            assert_eq!(g.degree(local), degree, "degree at {negative}");
        }

        let hex = hex();
        let hex_lat = build_lattice(&hex).unwrap();
        assert!(degree_check_gamma_max(&hex, &hex_lat).unwrap());
        let hg = build_graph(&hex, GraphKind::GammaMax);
        for v in 0..hg.vertex_count() {
            assert_eq!(hg.degree(v), 2);
        }
    }

    #[test]
    fn odd_cycles_pass_the_committee_predicate() {
        let hex = hex();
        let g = build_graph(&hex, GraphKind::Gamma);
        let triangles = enumerate_odd_cycles(&g, 3, 10);
        assert_eq!(triangles.len(), 1);
        assert!(odd_cycle_committee_check(&hex, &g, &triangles[0]).unwrap());

        let p = golden28();
        let pg = build_graph(&p, GraphKind::Gamma);
        let five_cycles = enumerate_odd_cycles(&pg, 5, 25);
        assert!(!five_cycles.is_empty());
        for cycle in &five_cycles {
            assert!(odd_cycle_committee_check(&p, &pg, cycle).unwrap());
        }
    }

    #[test]
    fn cycle_validation_rejects_bad_input() {
        let hex = hex();
        let g = build_graph(&hex, GraphKind::Gamma);
        assert!(matches!(
            odd_cycle_committee_check(&hex, &g, &[0, 1, 2, 3]),
            Err(GraphError::EvenCycle(4))
        ));
        assert!(matches!(
            odd_cycle_committee_check(&hex, &g, &[0, 0, 1]),
            Err(GraphError::NotACycle(_))
        ));
        let (i, j) = {
            // A non-adjacent pair exists: take any vertex and a non-neighbor.
            let v = 0;
            let w = (0..g.vertex_count())
                .find(|&w| w != v && !g.has_edge(v, w))
                .unwrap();
            (v, w)
        };
        let third = (0..g.vertex_count()).find(|&x| x != i && x != j).unwrap();
        assert!(odd_cycle_committee_check(&hex, &g, &[i, j, third]).is_err());
    }

    #[test]
    fn dot_export_is_deterministic_and_labeled() {
        let hex = hex();
        let g = build_graph(&hex, GraphKind::Gamma);
        let dot = to_dot(&g, &hex);
        assert!(dot.starts_with("// kind: gamma\n"));
        assert!(dot.contains("v0 [label=\"++-\"];"));
        assert!(dot.contains(" -- "));
        assert_eq!(dot, to_dot(&g, &hex));
    }

    #[test]
    fn triangle_enumeration_matches_cycle_enumeration() {
        let p = golden28();
        let g = build_graph(&p, GraphKind::Gamma);
        let triangles = triangle_vertex_sets(&g);
        let cycles = enumerate_odd_cycles(&g, 3, usize::MAX);
        assert_eq!(triangles.len(), cycles.len());
    }
}
