//! Convexity on the ground set, computed from topes.
//!
//! A subset `A` is acyclic when some tope is positive on all of `A`. For
//! acyclic `A` the hull `conv(A)` collects the elements forced positive by
//! every tope positive on `A`; a non-acyclic subset has hull `E` by
//! convention. In a simple oriented matroid the tope condition is equivalent
//! to the covector condition defining the hull (any covector positive on `A`
//! composes with a tope into a tope positive on `A` that agrees with it at
//! the element in question), so topes suffice; realizable fixtures also
//! cross-check this against exact feasibility (see the arrangement module).
//!
//! [`ConvexLattice`] materializes the family of convex subsets ordered by
//! inclusion, with `E` adjoined as the top element: coatoms, free sets, and
//! the Möbius values `(-1)^|A|` (free) / `0` (otherwise) that drive every
//! counting formula in this crate.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::exec;
use crate::sign::{GroundSubset, OutOfRange, ToposSet};

/// Whether some tope is positive on all of `a`.
pub fn is_acyclic_subset(ts: &ToposSet, a: GroundSubset) -> Result<bool, OutOfRange> {
    a.within(ts.n())?;
    Ok(ts.positive_on(a).count_ones(..) > 0)
}

/// The convex hull of `a`: elements positive in every tope positive on `a`,
/// or the whole ground set when `a` is not acyclic.
pub fn conv(ts: &ToposSet, a: GroundSubset) -> Result<GroundSubset, OutOfRange> {
    a.within(ts.n())?;
    Ok(conv_unchecked(ts, a))
}

fn conv_unchecked(ts: &ToposSet, a: GroundSubset) -> GroundSubset {
    let supporters = ts.positive_on(a);
    let mut iter = supporters.ones();
    let first = match iter.next() {
        Some(i) => i,
        None => return GroundSubset::full(ts.n()),
    };
    let mut bits = ts.tope(first).positive_part().bits();
    for i in iter {
        bits &= ts.tope(i).positive_part().bits();
        if bits == a.bits() {
            break; // hull cannot shrink below a
        }
    }
    GroundSubset::from_bits(bits)
}

/// The extreme points of `a`: members not in the hull of the rest. By
/// convention `ex(E) = E`.
pub fn ex(ts: &ToposSet, a: GroundSubset) -> Result<GroundSubset, OutOfRange> {
    a.within(ts.n())?;
    Ok(ex_unchecked(ts, a))
}

fn ex_unchecked(ts: &ToposSet, a: GroundSubset) -> GroundSubset {
    let full = GroundSubset::full(ts.n());
    if a == full {
        return full;
    }
    let mut bits = 0u64;
    for e in a.elements() {
        let rest = a.difference(GroundSubset::singleton(e));
        if !conv_unchecked(ts, rest).contains(e) {
            bits |= GroundSubset::singleton(e).bits();
        }
    }
    GroundSubset::from_bits(bits)
}

/// Acyclicity, convexity, and freeness of one subset, with its hull and
/// extreme points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetClassification {
    pub acyclic: bool,
    pub convex: bool,
    pub free: bool,
    pub hull: GroundSubset,
    pub extreme: GroundSubset,
}

/// Classifies `a`. Freeness is only defined for proper subsets; the full
/// ground set reports `free = false`.
pub fn classify(ts: &ToposSet, a: GroundSubset) -> Result<SubsetClassification, OutOfRange> {
    a.within(ts.n())?;
    let acyclic = ts.positive_on(a).count_ones(..) > 0;
    let hull = conv_unchecked(ts, a);
    let extreme = ex_unchecked(ts, a);
    let convex = hull == a;
    let free = convex && extreme == a && a != GroundSubset::full(ts.n());
    Ok(SubsetClassification {
        acyclic,
        convex,
        free,
        hull,
        extreme,
    })
}

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("ground set of size {n} exceeds the exhaustive-enumeration bound {max}")]
    GroundSetTooLarge { n: usize, max: usize },
    #[error("{0} is not a lattice member")]
    NotAMember(GroundSubset),
    #[error("the Möbius table does not cover the adjoined top")]
    MobiusUndefinedForTop,
    #[error("lattice invariant violated: {0}")]
    InvariantViolated(String),
    #[error("the lattice was built for a different tope set")]
    TopeSetMismatch,
    #[error(transparent)]
    Subset(#[from] OutOfRange),
}

#[derive(Clone, Copy, Debug)]
pub struct LatticeOptions {
    /// Hard bound on the ground-set size for the 2^n subset scan.
    pub max_ground: usize,
    /// Cross-check the closed-form Möbius values against the recursive
    /// definition for every member (quadratic in the lattice size).
    pub verify_mobius: bool,
    /// Scan subsets in parallel (no-op without the `parallel` feature).
    pub parallel: bool,
}

impl Default for LatticeOptions {
    fn default() -> Self {
        LatticeOptions {
            max_ground: 20,
            verify_mobius: false,
            parallel: true,
        }
    }
}

/// The family of convex subsets of the ground set, ordered by inclusion,
/// with the full set adjoined as top element.
///
/// Members are sorted by (cardinality, element order); the bottom `{}` comes
/// first and the top `E` last. The Möbius table covers every member except
/// the top.
#[derive(Clone, Debug)]
pub struct ConvexLattice {
    n: usize,
    members: Vec<GroundSubset>,
    member_index: HashMap<GroundSubset, usize>,
    coatoms: Vec<GroundSubset>,
    free_sets: Vec<GroundSubset>,
    mobius: Vec<i64>,
    tope_fingerprint: Vec<u64>,
}

pub fn build_lattice(ts: &ToposSet) -> Result<ConvexLattice, LatticeError> {
    build_lattice_with(ts, LatticeOptions::default())
}

pub fn build_lattice_with(ts: &ToposSet, opts: LatticeOptions) -> Result<ConvexLattice, LatticeError> {
    let n = ts.n();
    if n > opts.max_ground {
        return Err(LatticeError::GroundSetTooLarge {
            n,
            max: opts.max_ground,
        });
    }
    let full = GroundSubset::full(n);

    // Fixed points of the hull operator among proper subsets.
    let mut members: Vec<GroundSubset> = exec::scan_collect(1usize << n, opts.parallel, |bits| {
        let a = GroundSubset::from_bits(bits as u64);
        if a != full && conv_unchecked(ts, a) == a {
            Some(a)
        } else {
            None
        }
    });
    members.sort_unstable_by_key(|a| (a.len(), *a));
    members.push(full);

    let member_index: HashMap<GroundSubset, usize> =
        members.iter().enumerate().map(|(i, a)| (*a, i)).collect();

    // Proper members must be closed under intersection (meets exist).
    let proper = &members[..members.len() - 1];
    for (i, a) in proper.iter().enumerate() {
        for b in &proper[i + 1..] {
            let meet = a.intersection(*b);
            if !member_index.contains_key(&meet) {
                return Err(LatticeError::InvariantViolated(format!(
                    "intersection {meet} of members {a} and {b} is not convex"
                )));
            }
        }
    }

    let coatoms: Vec<GroundSubset> = proper
        .iter()
        .filter(|a| !proper.iter().any(|b| **a != *b && a.is_subset_of(*b)))
        .copied()
        .collect();

    // The coatoms are exactly the inclusion-maximal tope positive parts.
    // This is automatic for symmetric zero-free input without the all-plus
    // tope; acyclic input falls outside that identity and is skipped.
    if !ts.is_acyclic() {
        let mut max_parts: Vec<GroundSubset> = Vec::new();
        for t in ts.topes() {
            let p = t.positive_part();
            if !ts
                .topes()
                .iter()
                .any(|u| u.positive_part() != p && p.is_subset_of(u.positive_part()))
            {
                max_parts.push(p);
            }
        }
        max_parts.sort_unstable_by_key(|a| (a.len(), *a));
        max_parts.dedup();
        let mut sorted_coatoms = coatoms.clone();
        sorted_coatoms.sort_unstable_by_key(|a| (a.len(), *a));
        if sorted_coatoms != max_parts {
            return Err(LatticeError::InvariantViolated(
                "coatoms differ from the maximal tope positive parts".into(),
            ));
        }
    }

    let free_sets: Vec<GroundSubset> = proper
        .iter()
        .filter(|a| !a.is_empty() && ex_unchecked(ts, **a) == **a)
        .copied()
        .collect();

    let mobius: Vec<i64> = proper
        .iter()
        .map(|a| {
            let free = ex_unchecked(ts, *a) == *a; // conv(a) == a already holds
            if free {
                if a.len() % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                0
            }
        })
        .collect();

    let lattice = ConvexLattice {
        n,
        members,
        member_index,
        coatoms,
        free_sets,
        mobius,
        tope_fingerprint: ts.topes().iter().map(|t| t.positive_part().bits()).collect(),
    };

    if opts.verify_mobius {
        for a in lattice.proper_members() {
            let closed = lattice.mobius(*a)?;
            let recursive = lattice.mobius_recursive(*a)?;
            if closed != recursive {
                return Err(LatticeError::InvariantViolated(format!(
                    "Möbius closed form {closed} at {a} differs from the recursive value {recursive}"
                )));
            }
        }
    }

    Ok(lattice)
}

impl ConvexLattice {
    pub fn n(&self) -> usize {
        self.n
    }

    /// All members including the adjoined top (last).
    pub fn members(&self) -> &[GroundSubset] {
        &self.members
    }

    pub fn proper_members(&self) -> &[GroundSubset] {
        &self.members[..self.members.len() - 1]
    }

    pub fn bottom(&self) -> GroundSubset {
        GroundSubset::EMPTY
    }

    pub fn top(&self) -> GroundSubset {
        GroundSubset::full(self.n)
    }

    pub fn is_member(&self, a: GroundSubset) -> bool {
        self.member_index.contains_key(&a)
    }

    pub fn coatoms(&self) -> &[GroundSubset] {
        &self.coatoms
    }

    /// Nonempty proper free members: the index set of the counting formulas.
    pub fn free_sets(&self) -> &[GroundSubset] {
        &self.free_sets
    }

    /// Whether this lattice was built from `ts`.
    pub fn matches(&self, ts: &ToposSet) -> bool {
        self.n == ts.n()
            && self.tope_fingerprint.len() == ts.len()
            && self
                .tope_fingerprint
                .iter()
                .zip(ts.topes())
                .all(|(bits, t)| *bits == t.positive_part().bits())
    }

    fn require_member(&self, a: GroundSubset) -> Result<usize, LatticeError> {
        self.member_index
            .get(&a)
            .copied()
            .ok_or(LatticeError::NotAMember(a))
    }

    /// Closed-form Möbius value of the interval from the bottom to `a`:
    /// `(-1)^|a|` when `a` is free (the empty set counts), zero otherwise.
    pub fn mobius(&self, a: GroundSubset) -> Result<i64, LatticeError> {
        let idx = self.require_member(a)?;
        if a == self.top() {
            return Err(LatticeError::MobiusUndefinedForTop);
        }
        Ok(self.mobius[idx])
    }

    /// Möbius value computed by the recursive definition over the interval
    /// from the bottom to `a`. Independent of the closed form; also defined
    /// for the top.
    pub fn mobius_recursive(&self, a: GroundSubset) -> Result<i64, LatticeError> {
        self.require_member(a)?;
        let interval: Vec<GroundSubset> = self
            .members
            .iter()
            .filter(|b| b.is_subset_of(a))
            .copied()
            .collect(); // sorted by size, so prefixes are computed first
        let mut values: HashMap<GroundSubset, i64> = HashMap::new();
        for b in &interval {
            let below: i64 = interval
                .iter()
                .filter(|c| **c != *b && c.is_subset_of(*b))
                .map(|c| values[c])
                .sum();
            let mu = if b.is_empty() { 1 } else { -below };
            values.insert(*b, mu);
        }
        Ok(values[&a])
    }

    /// Members of the interval from the bottom to `a`.
    pub fn lower_interval(&self, a: GroundSubset) -> Result<Vec<GroundSubset>, LatticeError> {
        self.require_member(a)?;
        Ok(self
            .members
            .iter()
            .filter(|b| b.is_subset_of(a))
            .copied()
            .collect())
    }

    /// The coatoms lying above `d`; their number is the coatom count of the
    /// interval `[d, top]`. Uniform in the boundary cases: a coatom yields
    /// itself, the top yields nothing.
    pub fn coatoms_above(&self, d: GroundSubset) -> Result<Vec<GroundSubset>, LatticeError> {
        self.require_member(d)?;
        Ok(self
            .coatoms
            .iter()
            .filter(|c| d.is_subset_of(**c))
            .copied()
            .collect())
    }

    /// Meet (intersection) and join (least member containing the union) of
    /// two members. The join equals the hull of the union for acyclic unions
    /// and the top otherwise.
    pub fn meet_join(
        &self,
        a: GroundSubset,
        b: GroundSubset,
    ) -> Result<(GroundSubset, GroundSubset), LatticeError> {
        self.require_member(a)?;
        self.require_member(b)?;
        let meet = a.intersection(b);
        if !self.is_member(meet) {
            return Err(LatticeError::InvariantViolated(format!(
                "meet {meet} of {a} and {b} is not a member"
            )));
        }
        let union = a.union(b);
        let join = self
            .members
            .iter()
            .find(|m| union.is_subset_of(**m))
            .copied()
            .expect("the top contains every union");
        Ok((meet, join))
    }
}

/// Serializable view of a lattice: members, coatoms, free sets, Möbius table.
#[derive(Serialize)]
pub struct LatticeExport {
    pub n: usize,
    pub member_count: usize,
    pub members: Vec<GroundSubset>,
    pub coatoms: Vec<GroundSubset>,
    pub free_sets: Vec<GroundSubset>,
    pub mobius: Vec<MobiusEntry>,
}

#[derive(Serialize)]
pub struct MobiusEntry {
    pub set: GroundSubset,
    pub value: i64,
}

pub fn lattice_export(lat: &ConvexLattice) -> LatticeExport {
    LatticeExport {
        n: lat.n(),
        member_count: lat.members().len(),
        members: lat.members().to_vec(),
        coatoms: lat.coatoms().to_vec(),
        free_sets: lat.free_sets().to_vec(),
        mobius: lat
            .proper_members()
            .iter()
            .map(|a| MobiusEntry {
                set: *a,
                value: lat.mobius(*a).expect("proper member"),
            })
            .collect(),
    }
}
