//! Positive halfspaces, committee predicates, and the committee counts.
//!
//! A 3-subset of topes is a committee when every positive halfspace contains
//! at least two of its members, and an anti-committee when its elementwise
//! negation is a committee — equivalently, when its positive parts are
//! pairwise disjoint. The number of three-tope committees equals the number
//! of three-tope anti-committees, and this module computes it by three
//! routes: brute-force enumeration over all triples, a sum over unordered
//! triples of pairwise-disjoint realized positive supports, and a sum over
//! lattice-member triples with pairwise empty meets. The graph module adds
//! the triangle-count routes.

use serde::Serialize;
use thiserror::Error;

use crate::convexity::{conv, ex, ConvexLattice, LatticeError};
use crate::exec;
use crate::sign::{GroundSubset, OutOfRange, ToposSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CommitteeError {
    #[error("tope index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("duplicate tope index {0}")]
    DuplicateIndex(usize),
    #[error("tope index {0} has no opposite in the set")]
    MissingOpposite(usize),
    #[error(transparent)]
    Subset(#[from] OutOfRange),
}

/// The topes positive on every element of a defining subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfspaceIndex {
    pub defining: GroundSubset,
    /// Canonical tope indices, ascending.
    pub members: Vec<usize>,
}

/// Intersection of the positive halfspaces of the elements of `b`
/// (all topes for `b = {}`).
pub fn halfspace(ts: &ToposSet, b: GroundSubset) -> Result<HalfspaceIndex, OutOfRange> {
    b.within(ts.n())?;
    Ok(HalfspaceIndex {
        defining: b,
        members: ts.positive_on(b).ones().collect(),
    })
}

/// `|T_b^+|` without materializing the index list.
pub fn halfspace_count(ts: &ToposSet, b: GroundSubset) -> Result<u64, OutOfRange> {
    b.within(ts.n())?;
    Ok(ts.positive_on(b).count_ones(..) as u64)
}

fn check_triple(ts: &ToposSet, k: [usize; 3]) -> Result<(), CommitteeError> {
    for &i in &k {
        if i >= ts.len() {
            return Err(CommitteeError::IndexOutOfRange(i));
        }
    }
    if k[0] == k[1] || k[0] == k[2] {
        return Err(CommitteeError::DuplicateIndex(k[0]));
    }
    if k[1] == k[2] {
        return Err(CommitteeError::DuplicateIndex(k[1]));
    }
    Ok(())
}

// A triple is a committee iff on every element at least two of the three
// positive parts agree: the majority mask must cover the ground set.
fn is_committee_bits(full: u64, a: u64, b: u64, c: u64) -> bool {
    (a & b) | (a & c) | (b & c) == full
}

/// Whether three distinct topes form a committee: every positive halfspace
/// contains at least two of them.
pub fn is_committee(ts: &ToposSet, k: [usize; 3]) -> Result<bool, CommitteeError> {
    check_triple(ts, k)?;
    let full = GroundSubset::full(ts.n()).bits();
    Ok(is_committee_bits(
        full,
        ts.tope(k[0]).positive_part().bits(),
        ts.tope(k[1]).positive_part().bits(),
        ts.tope(k[2]).positive_part().bits(),
    ))
}

/// Whether three distinct topes form an anti-committee, i.e. their negations
/// form a committee; equivalently their positive parts are pairwise disjoint.
pub fn is_anti_committee(ts: &ToposSet, k: [usize; 3]) -> Result<bool, CommitteeError> {
    check_triple(ts, k)?;
    let a = ts.tope(k[0]).positive_part().bits();
    let b = ts.tope(k[1]).positive_part().bits();
    let c = ts.tope(k[2]).positive_part().bits();
    Ok(a & b == 0 && a & c == 0 && b & c == 0)
}

/// The general committee predicate for a tope subset of any size: every
/// positive halfspace must contain a strict majority of the members.
pub fn is_committee_set(ts: &ToposSet, members: &[usize]) -> Result<bool, CommitteeError> {
    let mut seen = vec![false; ts.len()];
    for &i in members {
        if i >= ts.len() {
            return Err(CommitteeError::IndexOutOfRange(i));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(CommitteeError::DuplicateIndex(i));
        }
    }
    let k = members.len();
    for e in 1..=ts.n() {
        let positive = members
            .iter()
            .filter(|&&i| ts.tope(i).positive_part().contains(e))
            .count();
        if 2 * positive <= k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A three-tope committee, by canonical tope indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Committee {
    /// Ascending canonical tope indices.
    pub members: [usize; 3],
    /// Whether all three topes have inclusion-maximal positive parts.
    pub max_positive: bool,
}

/// Indices of the topes whose positive parts are inclusion-maximal,
/// ascending.
pub fn max_positive_topes(ts: &ToposSet) -> Vec<usize> {
    let parts: Vec<u64> = ts.topes().iter().map(|t| t.positive_part().bits()).collect();
    (0..ts.len())
        .filter(|&i| {
            !parts
                .iter()
                .any(|&p| p != parts[i] && parts[i] & !p == 0)
        })
        .collect()
}

/// Enumerates all three-tope committees in canonical (lexicographic) order,
/// optionally restricted to topes with inclusion-maximal positive parts.
pub fn enumerate_committees3(ts: &ToposSet, restrict_max_positive: bool) -> Vec<Committee> {
    enumerate_impl(ts, restrict_max_positive, true)
}

/// Sequential fallback of [`enumerate_committees3`]; same output, used by the
/// benchmark suite and equal to the default path when the `parallel` feature
/// is disabled.
pub fn enumerate_committees3_seq(ts: &ToposSet, restrict_max_positive: bool) -> Vec<Committee> {
    enumerate_impl(ts, restrict_max_positive, false)
}

fn enumerate_impl(ts: &ToposSet, restrict_max_positive: bool, parallel: bool) -> Vec<Committee> {
    let max_set = max_positive_topes(ts);
    let mut is_max = vec![false; ts.len()];
    for &i in &max_set {
        is_max[i] = true;
    }
    let verts: Vec<usize> = if restrict_max_positive {
        max_set
    } else {
        (0..ts.len()).collect()
    };
    let parts: Vec<u64> = verts
        .iter()
        .map(|&i| ts.tope(i).positive_part().bits())
        .collect();
    let full = GroundSubset::full(ts.n()).bits();
    let per_first: Vec<Vec<Committee>> = exec::scan_collect(verts.len(), parallel, |x| {
        let mut found = Vec::new();
        for y in x + 1..verts.len() {
            for z in y + 1..verts.len() {
                if is_committee_bits(full, parts[x], parts[y], parts[z]) {
                    let members = [verts[x], verts[y], verts[z]];
                    found.push(Committee {
                        members,
                        max_positive: members.iter().all(|&i| is_max[i]),
                    });
                }
            }
        }
        Some(found)
    });
    per_first.into_iter().flatten().collect()
}

/// Committee count as a sum over unordered triples of pairwise-disjoint
/// nonempty realized positive supports: each factor counts the topes whose
/// positive part is exactly the given subset, so only realized parts
/// contribute.
pub fn count_committees_by_support(ts: &ToposSet) -> u64 {
    let mut parts: Vec<u64> = ts
        .topes()
        .iter()
        .map(|t| t.positive_part().bits())
        .filter(|&p| p != 0)
        .collect();
    parts.sort_unstable();
    // Positive parts determine topes in a zero-free set, so every realized
    // part has multiplicity one and each triple contributes exactly 1.
    let mut count = 0u64;
    for x in 0..parts.len() {
        for y in x + 1..parts.len() {
            if parts[x] & parts[y] != 0 {
                continue;
            }
            for z in y + 1..parts.len() {
                if parts[x] & parts[z] == 0 && parts[y] & parts[z] == 0 {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Committee count as a sum over unordered triples of nonempty proper
/// lattice members with pairwise empty meets; each factor counts the topes
/// positive on the member's extreme points and negative on the extreme
/// points of the hull of its complement.
pub fn count_committees_by_lattice(ts: &ToposSet, lat: &ConvexLattice) -> Result<u64, LatticeError> {
    if !lat.matches(ts) {
        return Err(LatticeError::TopeSetMismatch);
    }
    let full = GroundSubset::full(ts.n());
    // Factor per member; triples with a zero factor contribute nothing, so
    // only the nonzero support enters the triple scan.
    let mut support: Vec<(GroundSubset, u64)> = Vec::new();
    for &a in lat.proper_members() {
        if a.is_empty() {
            continue;
        }
        let ex_a = ex(ts, a)?;
        let hull_rest = conv(ts, full.difference(a))?;
        let ex_rest = ex(ts, hull_rest)?;
        let mut mask = ts.positive_on(ex_a);
        mask &= &ts.negative_on(ex_rest);
        let factor = mask.count_ones(..) as u64;
        if factor > 0 {
            support.push((a, factor));
        }
    }
    let mut total = 0u64;
    for x in 0..support.len() {
        for y in x + 1..support.len() {
            if !support[x].0.is_disjoint(support[y].0) {
                continue;
            }
            for z in y + 1..support.len() {
                if support[x].0.is_disjoint(support[z].0) && support[y].0.is_disjoint(support[z].0) {
                    total += support[x].1 * support[y].1 * support[z].1;
                }
            }
        }
    }
    Ok(total)
}

fn binom(m: u64, k: u64) -> u64 {
    if m < k {
        return 0;
    }
    match k {
        2 => m * (m - 1) / 2,
        3 => m * (m - 1) * (m - 2) / 6,
        _ => unreachable!("only pairs and triples are needed"),
    }
}

fn signed(len: usize) -> i64 {
    if len.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Closed form for the number of three-tope sets containing no opposite pair
/// and meeting every positive halfspace: an inclusion–exclusion over the
/// free lattice members.
pub fn count_no_opposite_triples_formula(
    ts: &ToposSet,
    lat: &ConvexLattice,
) -> Result<i64, LatticeError> {
    if !lat.matches(ts) {
        return Err(LatticeError::TopeSetMismatch);
    }
    let half = (ts.len() / 2) as u64;
    let mut total = 8 * binom(half, 3) as i64;
    for &a in lat.free_sets() {
        let count = halfspace_count(ts, a)?;
        total += signed(a.len()) * binom(count, 3) as i64;
    }
    Ok(total)
}

/// Brute-force counterpart of [`count_no_opposite_triples_formula`]: scans
/// all 3-subsets for "no opposite pair, at least one member in every
/// positive halfspace".
pub fn count_no_opposite_triples_brute(ts: &ToposSet) -> u64 {
    let m = ts.len();
    let full = GroundSubset::full(ts.n()).bits();
    let parts: Vec<u64> = ts.topes().iter().map(|t| t.positive_part().bits()).collect();
    let opposite: Vec<Option<usize>> = (0..m).map(|i| ts.opposite_index(i)).collect();
    exec::scan_sum(m, true, |x| {
        let mut count = 0u64;
        for y in x + 1..m {
            if opposite[x] == Some(y) {
                continue;
            }
            for z in y + 1..m {
                if opposite[x] == Some(z) || opposite[y] == Some(z) {
                    continue;
                }
                if parts[x] | parts[y] | parts[z] == full {
                    count += 1;
                }
            }
        }
        count
    })
}

/// Serializable committee listing.
#[derive(Serialize)]
pub struct CommitteesExport {
    pub restricted_to_max_positive: bool,
    pub count: usize,
    pub committees: Vec<CommitteeEntry>,
}

#[derive(Serialize)]
pub struct CommitteeEntry {
    pub topes: [String; 3],
    pub max_positive: bool,
}

pub fn committees_export(ts: &ToposSet, restrict_max_positive: bool) -> CommitteesExport {
    let committees = enumerate_committees3(ts, restrict_max_positive);
    CommitteesExport {
        restricted_to_max_positive: restrict_max_positive,
        count: committees.len(),
        committees: committees
            .iter()
            .map(|c| CommitteeEntry {
                topes: [
                    ts.tope(c.members[0]).to_string(),
                    ts.tope(c.members[1]).to_string(),
                    ts.tope(c.members[2]).to_string(),
                ],
                max_positive: c.max_positive,
            })
            .collect(),
    }
}
