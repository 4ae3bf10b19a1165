//! Sign-vector arithmetic, tope-set parsing and validation, reorientation.
//!
//! Ground elements are 1-based (`1..=n`, n ≤ 64). A [`SignVector`] assigns
//! `+`, `-`, or `0` to each element; a tope is a zero-free sign vector.
//! A [`ToposSet`] keeps its topes in canonical order: lexicographic on the
//! rendered strings with `+` sorting before `-`, which makes serialization
//! deterministic and gives every tope a stable index used as the vertex
//! identity throughout the crate.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest supported ground set; subsets are machine-word bitsets.
pub const MAX_GROUND: usize = 64;

fn mask(n: usize) -> u64 {
    debug_assert!(n <= MAX_GROUND);
    if n == MAX_GROUND {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// One entry of a sign vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }
}

/// A subset of the ground set `{1..n}` with bitset semantics
/// (element `e` lives at bit `e - 1`).
///
/// Ordering is lexicographic on the sorted element sequences, so e.g.
/// `{1,2} < {1,5} < {2,3} < {3,5}` and a prefix sorts first. This matches the
/// order in which subset families are reported everywhere in the crate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroundSubset(u64);

#[derive(Debug, Error, PartialEq, Eq)]
#[error("subset {subset} is not contained in the ground set 1..={n}")]
pub struct OutOfRange {
    pub subset: GroundSubset,
    pub n: usize,
}

impl GroundSubset {
    pub const EMPTY: GroundSubset = GroundSubset(0);

    /// The full ground set `{1..n}`.
    pub fn full(n: usize) -> GroundSubset {
        GroundSubset(mask(n))
    }

    pub fn singleton(e: usize) -> GroundSubset {
        assert!((1..=MAX_GROUND).contains(&e), "element {e} out of range");
        GroundSubset(1u64 << (e - 1))
    }

    /// Builds a subset from 1-based elements. Elements must lie in
    /// `1..=64`; containment in a specific ground set is checked by the
    /// operations that receive the subset.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<GroundSubset, InvalidElement> {
        let mut bits = 0u64;
        for e in elements {
            if !(1..=MAX_GROUND).contains(&e) {
                return Err(InvalidElement(e));
            }
            bits |= 1u64 << (e - 1);
        }
        Ok(GroundSubset(bits))
    }

    pub(crate) fn from_bits(bits: u64) -> GroundSubset {
        GroundSubset(bits)
    }

    pub(crate) fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_GROUND).contains(&e) && self.0 & (1u64 << (e - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: GroundSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: GroundSubset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: GroundSubset) -> GroundSubset {
        GroundSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: GroundSubset) -> GroundSubset {
        GroundSubset(self.0 & other.0)
    }

    pub fn difference(self, other: GroundSubset) -> GroundSubset {
        GroundSubset(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> GroundSubset {
        GroundSubset(!self.0 & mask(n))
    }

    /// Checks containment in `{1..n}`.
    pub fn within(self, n: usize) -> Result<(), OutOfRange> {
        if n <= MAX_GROUND && self.0 & !mask(n) == 0 {
            Ok(())
        } else {
            Err(OutOfRange { subset: self, n })
        }
    }

    /// 1-based elements in ascending order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(e)
            }
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("ground element {0} out of the representable range 1..=64")]
pub struct InvalidElement(pub usize);

impl Ord for GroundSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a, b) {
                (0, 0) => return Ordering::Equal,
                (0, _) => return Ordering::Less,
                (_, 0) => return Ordering::Greater,
                _ => {
                    let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
                    match x.cmp(&y) {
                        Ordering::Equal => {
                            a &= a - 1;
                            b &= b - 1;
                        }
                        ord => return ord,
                    }
                }
            }
        }
    }
}

impl PartialOrd for GroundSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for GroundSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for e in self.elements() {
            seq.serialize_element(&e)?;
        }
        seq.end()
    }
}

/// A sign vector over the ground set `{1..n}`, entries in `{+, -, 0}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVector {
    n: usize,
    plus: u64,
    minus: u64,
}

impl SignVector {
    /// The zero-free sign vector positive exactly on `positive`.
    pub fn tope_from_positive(n: usize, positive: GroundSubset) -> SignVector {
        debug_assert!(positive.within(n).is_ok());
        SignVector {
            n,
            plus: positive.bits(),
            minus: !positive.bits() & mask(n),
        }
    }

    pub fn parse(s: &str) -> Result<SignVector, ParseError> {
        let n = s.chars().count();
        if n > MAX_GROUND {
            return Err(ParseError::TooWide { n, max: MAX_GROUND });
        }
        let (mut plus, mut minus) = (0u64, 0u64);
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '+' => plus |= 1u64 << i,
                '-' => minus |= 1u64 << i,
                '0' => {}
                _ => return Err(ParseError::InvalidChar { line: 0, ch }),
            }
        }
        Ok(SignVector { n, plus, minus })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Entry at the 1-based element `e`. Panics if `e` is out of range.
    pub fn sign_at(&self, e: usize) -> Sign {
        assert!((1..=self.n).contains(&e), "element {e} out of range 1..={}", self.n);
        let bit = 1u64 << (e - 1);
        if self.plus & bit != 0 {
            Sign::Plus
        } else if self.minus & bit != 0 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn positive_part(&self) -> GroundSubset {
        GroundSubset::from_bits(self.plus)
    }

    pub fn negative_part(&self) -> GroundSubset {
        GroundSubset::from_bits(self.minus)
    }

    pub fn negated(&self) -> SignVector {
        SignVector {
            n: self.n,
            plus: self.minus,
            minus: self.plus,
        }
    }

    pub fn is_tope(&self) -> bool {
        self.plus | self.minus == mask(self.n)
    }

    pub fn is_all_plus(&self) -> bool {
        self.plus == mask(self.n)
    }

    /// Flips the signs at all coordinates in `a`.
    pub fn reoriented(&self, a: GroundSubset) -> SignVector {
        let a = a.bits();
        SignVector {
            n: self.n,
            plus: (self.plus & !a) | (self.minus & a),
            minus: (self.minus & !a) | (self.plus & a),
        }
    }
}

// Canonical tope order: positional with + < - < 0, which coincides with byte
// order of the rendered strings on zero-free vectors.
impl Ord for SignVector {
    fn cmp(&self, other: &Self) -> Ordering {
        fn rank(s: Sign) -> u8 {
            match s {
                Sign::Plus => 0,
                Sign::Minus => 1,
                Sign::Zero => 2,
            }
        }
        self.n.cmp(&other.n).then_with(|| {
            for e in 1..=self.n {
                let ord = rank(self.sign_at(e)).cmp(&rank(other.sign_at(e)));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in 1..=self.n {
            write!(f, "{}", self.sign_at(e).as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: length {len} differs from the expected {expected}")]
    RaggedLine { line: usize, len: usize, expected: usize },
    #[error("line {line}: invalid character {ch:?} (topes are strings over '+' and '-')")]
    InvalidChar { line: usize, ch: char },
    #[error("line {line}: duplicate tope {tope}")]
    DuplicateTope { line: usize, tope: String },
    #[error("no tope lines found")]
    Empty,
    #[error("ground set of size {n} exceeds the supported maximum of {max}")]
    TooWide { n: usize, max: usize },
    #[error("sign vector {vector} has a zero entry; topes are zero-free")]
    ZeroEntry { vector: String },
    #[error("sign vector {vector} has length {len}, expected {expected}")]
    LengthMismatch { vector: String, len: usize, expected: usize },
}

/// A canonically ordered set of topes over a common ground set.
///
/// Construction enforces well-formedness only (equal lengths, zero-free,
/// distinct, nonempty); the semantic rules of a simple symmetric oriented
/// matroid are checked by [`validate`].
#[derive(Clone)]
pub struct ToposSet {
    n: usize,
    topes: Vec<SignVector>,
    acyclic: bool,
    // Per-element bitset over tope indices: bit i set iff topes[i](e) = +.
    pos_masks: Vec<FixedBitSet>,
    index: HashMap<SignVector, usize>,
}

impl PartialEq for ToposSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.topes == other.topes
    }
}

impl Eq for ToposSet {}

impl fmt::Debug for ToposSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ToposSet")
            .field("n", &self.n)
            .field("topes", &self.topes)
            .finish()
    }
}

impl ToposSet {
    /// Canonicalizes a collection of sign vectors into a tope set.
    pub fn from_sign_vectors(n: usize, vectors: Vec<SignVector>) -> Result<ToposSet, ParseError> {
        if n > MAX_GROUND {
            return Err(ParseError::TooWide { n, max: MAX_GROUND });
        }
        if vectors.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut topes = vectors;
        for t in &topes {
            if t.len() != n {
                return Err(ParseError::LengthMismatch {
                    vector: t.to_string(),
                    len: t.len(),
                    expected: n,
                });
            }
            if !t.is_tope() {
                return Err(ParseError::ZeroEntry { vector: t.to_string() });
            }
        }
        topes.sort_unstable();
        if let Some(w) = topes.windows(2).find(|w| w[0] == w[1]) {
            return Err(ParseError::DuplicateTope {
                line: 0,
                tope: w[0].to_string(),
            });
        }
        let mut pos_masks = vec![FixedBitSet::with_capacity(topes.len()); n];
        for (i, t) in topes.iter().enumerate() {
            for e in t.positive_part().elements() {
                pos_masks[e - 1].insert(i);
            }
        }
        let index = topes.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let acyclic = topes.iter().any(|t| t.is_all_plus());
        Ok(ToposSet {
            n,
            topes,
            acyclic,
            pos_masks,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.topes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.topes.is_empty()
    }

    pub fn topes(&self) -> &[SignVector] {
        &self.topes
    }

    pub fn tope(&self, i: usize) -> &SignVector {
        &self.topes[i]
    }

    /// Whether the all-plus vector is a tope (the underlying matroid is acyclic).
    pub fn is_acyclic(&self) -> bool {
        self.acyclic
    }

    pub fn index_of(&self, t: &SignVector) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Index of `-T` for the tope at `i`, if present.
    pub fn opposite_index(&self, i: usize) -> Option<usize> {
        self.index.get(&self.topes[i].negated()).copied()
    }

    /// Bitset of topes positive on every element of `a` (all topes for `a = {}`).
    /// Panics if `a` contains elements beyond the ground set.
    pub fn positive_on(&self, a: GroundSubset) -> FixedBitSet {
        let mut acc = FixedBitSet::with_capacity(self.len());
        acc.insert_range(..);
        for e in a.elements() {
            acc &= &self.pos_masks[e - 1];
        }
        acc
    }

    /// Bitset of topes negative on every element of `a`.
    /// Panics if `a` contains elements beyond the ground set.
    pub fn negative_on(&self, a: GroundSubset) -> FixedBitSet {
        let mut acc = FixedBitSet::with_capacity(self.len());
        acc.insert_range(..);
        for e in a.elements() {
            let mut neg = self.pos_masks[e - 1].clone();
            neg.toggle_range(..);
            acc &= &neg;
        }
        acc
    }

    pub(crate) fn pos_mask(&self, e: usize) -> &FixedBitSet {
        &self.pos_masks[e - 1]
    }
}

/// Canonical serialization: one tope per line, in canonical order.
impl fmt::Display for ToposSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.topes {
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Parses the `.topes` format: one tope per line as a string over `{+,-}`,
/// all lines the same length; `#` comments and blank lines are ignored.
///
/// This checks well-formedness only; run [`validate`] for the semantic rules.
pub fn parse_topes(text: &str) -> Result<ToposSet, ParseError> {
    let mut n = None;
    let mut seen: HashMap<SignVector, usize> = HashMap::new();
    let mut vectors = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = lineno + 1;
        let len = line.chars().count();
        match n {
            None => {
                if len > MAX_GROUND {
                    return Err(ParseError::TooWide { n: len, max: MAX_GROUND });
                }
                n = Some(len);
            }
            Some(expected) if expected != len => {
                return Err(ParseError::RaggedLine { line: lineno, len, expected });
            }
            _ => {}
        }
        let (mut plus, mut minus) = (0u64, 0u64);
        for (i, ch) in line.chars().enumerate() {
            match ch {
                '+' => plus |= 1u64 << i,
                '-' => minus |= 1u64 << i,
                _ => return Err(ParseError::InvalidChar { line: lineno, ch }),
            }
        }
        let t = SignVector { n: len, plus, minus };
        if seen.insert(t, lineno).is_some() {
            return Err(ParseError::DuplicateTope {
                line: lineno,
                tope: t.to_string(),
            });
        }
        vectors.push(t);
    }
    let n = n.ok_or(ParseError::Empty)?;
    ToposSet::from_sign_vectors(n, vectors)
}

/// One failed validation rule.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub rule: &'static str,
    pub message: String,
    /// Offending tope indices (canonical) or, for simplicity violations,
    /// ground elements.
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

/// Checks the standing assumptions on a tope set: symmetry (`-T` present for
/// every tope `T`) and simplicity (no two elements with equal or opposite
/// sign columns). Distinctness and zero-freeness are enforced structurally at
/// construction. An acyclic input (all-plus tope present) is a warning, or a
/// violation under `strict`.
///
/// These are necessary conditions only; a passing report does not certify
/// that the input is the tope set of an oriented matroid.
pub fn validate(ts: &ToposSet, strict: bool) -> ValidationReport {
    let mut violations = Vec::new();
    let mut warnings = Vec::new();

    for (i, t) in ts.topes().iter().enumerate() {
        let opposite = t.negated();
        if ts.index_of(&opposite).is_none() {
            violations.push(Violation {
                rule: "symmetry",
                message: format!("tope {t} has no opposite {opposite} in the set"),
                indices: vec![i],
            });
        }
    }

    for e in 1..=ts.n() {
        let col_e = ts.pos_mask(e);
        for f in e + 1..=ts.n() {
            let col_f = ts.pos_mask(f);
            if col_e == col_f {
                violations.push(Violation {
                    rule: "simplicity-parallel",
                    message: format!("elements {e} and {f} have identical sign columns"),
                    indices: vec![e, f],
                });
            } else {
                let mut flipped = col_f.clone();
                flipped.toggle_range(..);
                if *col_e == flipped {
                    violations.push(Violation {
                        rule: "simplicity-antiparallel",
                        message: format!("elements {e} and {f} have opposite sign columns"),
                        indices: vec![e, f],
                    });
                }
            }
        }
    }

    if ts.is_acyclic() {
        let idx = ts
            .topes()
            .iter()
            .position(|t| t.is_all_plus())
            .expect("acyclic flag implies an all-plus tope");
        if strict {
            violations.push(Violation {
                rule: "acyclic",
                message: "the all-plus tope is present (acyclic input, rejected in strict mode)".into(),
                indices: vec![idx],
            });
        } else {
            warnings.push("the all-plus tope is present: the input is acyclic, outside the standing assumptions".into());
        }
    }

    ValidationReport {
        ok: violations.is_empty(),
        violations,
        warnings,
    }
}

/// Flips all signs at the coordinates in `a` and restores canonical order.
/// An involution: `reorient(reorient(ts, a), a) == ts`.
pub fn reorient(ts: &ToposSet, a: GroundSubset) -> Result<ToposSet, OutOfRange> {
    a.within(ts.n())?;
    let vectors = ts.topes().iter().map(|t| t.reoriented(a)).collect();
    Ok(ToposSet::from_sign_vectors(ts.n(), vectors)
        .expect("reorientation preserves well-formedness"))
}
