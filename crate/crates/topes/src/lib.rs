//! Tope sets of simple oriented matroids.
//!
//! A tope is a zero-free sign vector over a ground set `{1..n}`; the tope set
//! of a simple oriented matroid is symmetric (`T` present iff `-T` present)
//! and has no parallel or antiparallel elements. This crate represents such
//! sets, computes the convexity structure they induce on the ground set (hull
//! and extreme-point operators, the lattice of convex subsets with its Möbius
//! function and coatoms), enumerates three-tope committees, builds the
//! associated tope graphs, and cross-validates several closed-form counting
//! identities against brute force:
//!
//! * committee counts via disjoint-support sums and via lattice sums,
//! * edge/vertex counts of the tope graph via free-set sums,
//! * triangle counts via direct enumeration, adjacency-matrix trace, and
//!   per-edge neighborhood sums,
//! * edge, cyclomatic, and committee counts of the max-positive subgraph via
//!   coatom-interval sums.
//!
//! Realizable inputs can be generated exactly from central hyperplane
//! arrangements with rational normals ([`arrangement`]).
//!
//! With the default `parallel` feature the hot scans run on rayon; disabling
//! it yields a dependency-free sequential build with bit-identical output.
//!
//! ```
//! use topes::{build_graph, build_lattice, parse_topes, GraphKind};
//! use topes::committees::enumerate_committees3;
//! use topes::graph::{count_triangles, TriangleMethod};
//!
//! let ts = parse_topes("++-\n+-+\n+--\n-++\n-+-\n--+")?;
//! let committees = enumerate_committees3(&ts, false);
//! assert_eq!(committees.len(), 1);
//!
//! let gamma = build_graph(&ts, GraphKind::Gamma);
//! assert_eq!(count_triangles(&gamma, TriangleMethod::Trace), 1);
//!
//! let lattice = build_lattice(&ts)?;
//! assert_eq!(lattice.coatoms().len(), 3);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod arrangement;
pub mod committees;
pub mod convexity;
mod exec;
pub mod graph;
pub mod report;
pub mod sign;

pub use arrangement::{arrangement_topes, parse_arrangement, Arrangement};
pub use committees::{enumerate_committees3, is_committee, Committee};
pub use convexity::{build_lattice, classify, conv, ex, ConvexLattice};
pub use graph::{build_graph, count_triangles, formula_counts, GraphKind, TopeGraph};
pub use report::{counts_report, CountsReport};
pub use sign::{parse_topes, reorient, validate, GroundSubset, SignVector, ToposSet};
