//! Tope sets from central hyperplane arrangements over exact rationals.
//!
//! An arrangement is a list of nonzero, pairwise non-parallel rational
//! normal vectors. A candidate sign vector is a tope exactly when the strict
//! homogeneous system it signs is feasible, which is decided by
//! Fourier–Motzkin elimination over integers (denominators cleared, rows
//! kept primitive, duplicates pruned). Enumerating the full sign hypercube
//! yields the tope set; reorientation negates the selected normals first.
//!
//! Feasibility also provides the independent geometric hull oracle used to
//! cross-check the tope-based hull operator on realizable instances, and a
//! seeded generator produces random simple non-acyclic tope sets for the
//! property suites.

use std::collections::HashSet;
use std::str::FromStr;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

use crate::exec;
use crate::sign::{GroundSubset, OutOfRange, SignVector, ToposSet};

/// Bound on the number of hyperplanes for the 2^n candidate enumeration.
pub const MAX_ARRANGEMENT_ELEMENTS: usize = 16;

#[derive(Debug, Error)]
pub enum ArrangementError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vector {index} is zero")]
    ZeroVector { index: usize },
    #[error("vectors {i} and {j} are parallel")]
    ParallelVectors { i: usize, j: usize },
    #[error("{n} hyperplanes exceed the sign-enumeration bound {max}")]
    TooManyHyperplanes { n: usize, max: usize },
    #[error("no vectors found")]
    Empty,
    #[error("element {element} is not in the ground set 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error(transparent)]
    Subset(#[from] OutOfRange),
}

/// A central arrangement of oriented hyperplanes: one rational normal per
/// element, indexed 1-based like the ground set it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    d: usize,
    vectors: Vec<Vec<BigRational>>,
}

impl Arrangement {
    /// Validates dimensions, nonzero vectors, and pairwise non-parallelism
    /// (parallel or antiparallel normals mean a non-simple element pair).
    pub fn new(vectors: Vec<Vec<BigRational>>) -> Result<Arrangement, ArrangementError> {
        if vectors.is_empty() {
            return Err(ArrangementError::Empty);
        }
        let d = vectors[0].len();
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != d {
                return Err(ArrangementError::Parse {
                    line: i + 1,
                    msg: format!("vector has {} entries, expected {d}", v.len()),
                });
            }
            if v.iter().all(|x| x.is_zero()) {
                return Err(ArrangementError::ZeroVector { index: i + 1 });
            }
        }
        for i in 0..vectors.len() {
            for j in i + 1..vectors.len() {
                if parallel(&vectors[i], &vectors[j]) {
                    return Err(ArrangementError::ParallelVectors { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(Arrangement { d, vectors })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<BigRational>] {
        &self.vectors
    }

    /// Integer rows with cleared denominators, in primitive form.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.vectors.iter().map(|v| clear_denominators(v)).collect()
    }
}

fn parallel(v: &[BigRational], w: &[BigRational]) -> bool {
    // All 2x2 minors vanish; covers antiparallel pairs as well.
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if &v[a] * &w[b] != &v[b] * &w[a] {
                return false;
            }
        }
    }
    true
}

// Clears denominators only; feasibility reduces rows to primitive form and
// catches zero rows itself.
fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

// Divides out the gcd; None for the zero row.
fn primitive(row: Vec<BigInt>) -> Option<Vec<BigInt>> {
    let mut g = BigInt::zero();
    for x in &row {
        g = g.gcd(x);
    }
    if g.is_zero() {
        None
    } else {
        Some(row.into_iter().map(|x| x / &g).collect())
    }
}

/// Decides feasibility of the strict homogeneous system `{ row · x > 0 }`
/// by Fourier–Motzkin elimination, exactly.
pub fn strict_feasible(rows: &[Vec<BigRational>]) -> bool {
    feasible_int(rows.iter().map(|r| clear_denominators(r)).collect())
}

fn feasible_int(rows: Vec<Vec<BigInt>>) -> bool {
    let mut current: HashSet<Vec<BigInt>> = HashSet::new();
    for row in rows {
        match primitive(row) {
            Some(r) => {
                current.insert(r);
            }
            None => return false, // 0 > 0
        }
    }
    while !current.is_empty() {
        let dim = current.iter().next().expect("nonempty").len();
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        let mut next: HashSet<Vec<BigInt>> = HashSet::new();
        for row in current {
            let last = &row[dim - 1];
            if last.is_positive() {
                positive.push(row);
            } else if last.is_negative() {
                negative.push(row);
            } else {
                next.insert(row[..dim - 1].to_vec());
            }
        }
        // With bounds on only one side the eliminated variable always has
        // room, so those constraints drop out entirely.
        if !positive.is_empty() && !negative.is_empty() {
            for p in &positive {
                for q in &negative {
                    let cp = &p[dim - 1];
                    let cq = &q[dim - 1];
                    let combo: Vec<BigInt> = (0..dim - 1)
                        .map(|i| cp * &q[i] - cq * &p[i])
                        .collect();
                    match primitive(combo) {
                        Some(r) => {
                            next.insert(r);
                        }
                        None => return false,
                    }
                }
            }
        }
        current = next;
    }
    true
}

/// Parses the `.arr` format: one vector per line, whitespace-separated
/// rationals (`p/q` or integers); `#` comments and blank lines are ignored.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, ArrangementError> {
    let mut vectors = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = lineno + 1;
        let mut v = Vec::new();
        for token in line.split_whitespace() {
            v.push(parse_rational(token).map_err(|msg| ArrangementError::Parse {
                line: lineno,
                msg: format!("{token:?}: {msg}"),
            })?);
        }
        vectors.push(v);
    }
    Arrangement::new(vectors)
}

fn parse_rational(token: &str) -> Result<BigRational, String> {
    match token.split_once('/') {
        Some((num, den)) => {
            let n = BigInt::from_str(num).map_err(|e| e.to_string())?;
            let d = BigInt::from_str(den).map_err(|e| e.to_string())?;
            if d.is_zero() {
                return Err("zero denominator".into());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n = BigInt::from_str(token).map_err(|e| e.to_string())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Enumerates the topes of the arrangement, reoriented on `reorient`: all
/// sign vectors whose strict system is feasible. The output is canonically
/// ordered and passes validation (with an acyclicity warning when the
/// all-plus tope survives).
pub fn arrangement_topes(
    arr: &Arrangement,
    reorient: GroundSubset,
) -> Result<ToposSet, ArrangementError> {
    arrangement_topes_impl(arr, reorient, true)
}

/// Sequential fallback of [`arrangement_topes`]; same output, used by the
/// benchmark suite and equal to the default path when the `parallel` feature
/// is disabled.
pub fn arrangement_topes_seq(
    arr: &Arrangement,
    reorient: GroundSubset,
) -> Result<ToposSet, ArrangementError> {
    arrangement_topes_impl(arr, reorient, false)
}

fn arrangement_topes_impl(
    arr: &Arrangement,
    reorient: GroundSubset,
    parallel: bool,
) -> Result<ToposSet, ArrangementError> {
    let n = arr.len();
    if n > MAX_ARRANGEMENT_ELEMENTS {
        return Err(ArrangementError::TooManyHyperplanes {
            n,
            max: MAX_ARRANGEMENT_ELEMENTS,
        });
    }
    reorient.within(n)?;
    let rows: Vec<Vec<BigInt>> = arr
        .integer_rows()
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            if reorient.contains(i + 1) {
                row.into_iter().map(|x| -x).collect()
            } else {
                row
            }
        })
        .collect();
    let full = GroundSubset::full(n).bits();
    let topes = exec::scan_collect(1usize << n, parallel, |signs| {
        let signs = signs as u64;
        let signed_rows: Vec<Vec<BigInt>> = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                if signs & (1u64 << i) != 0 {
                    row.iter().map(|x| -x).collect()
                } else {
                    row.clone()
                }
            })
            .collect();
        if feasible_int(signed_rows) {
            Some(SignVector::tope_from_positive(
                n,
                GroundSubset::from_bits(!signs & full),
            ))
        } else {
            None
        }
    });
    Ok(ToposSet::from_sign_vectors(n, topes)
        .expect("a central arrangement has at least one chamber"))
}

/// Geometric hull membership: `b` lies in the hull of `a` exactly when no
/// point satisfies the strict system "positive on `a`, negative at `b`".
/// Independent of the tope-based hull operator.
pub fn geometric_hull_contains(
    arr: &Arrangement,
    reorient: GroundSubset,
    a: GroundSubset,
    b: usize,
) -> Result<bool, ArrangementError> {
    let n = arr.len();
    reorient.within(n)?;
    a.within(n)?;
    if !(1..=n).contains(&b) {
        return Err(ArrangementError::ElementOutOfRange { element: b, n });
    }
    let rows = arr.integer_rows();
    let oriented = |e: usize| -> Vec<BigInt> {
        if reorient.contains(e) {
            rows[e - 1].iter().map(|x| -x).collect()
        } else {
            rows[e - 1].clone()
        }
    };
    let mut system: Vec<Vec<BigInt>> = a.elements().map(oriented).collect();
    system.push(oriented(b).into_iter().map(|x| -x).collect());
    Ok(!feasible_int(system))
}

/// Draws a simple central arrangement with integer coordinates in
/// `[-bound, bound]`.
pub fn random_arrangement<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    n: usize,
    bound: i64,
) -> Arrangement {
    assert!(d >= 1 && bound >= 1);
    for _ in 0..1_000 {
        let vectors: Vec<Vec<BigRational>> = (0..n)
            .map(|_| loop {
                let v: Vec<i64> = (0..d).map(|_| rng.random_range(-bound..=bound)).collect();
                if v.iter().any(|&x| x != 0) {
                    return v
                        .into_iter()
                        .map(|x| BigRational::from_integer(BigInt::from(x)))
                        .collect();
                }
            })
            .collect();
        if let Ok(arr) = Arrangement::new(vectors) {
            return arr;
        }
    }
    panic!("failed to draw a simple arrangement (d = {d}, n = {n}, bound = {bound})");
}

/// Draws a realizable simple tope set that is not acyclic, together with the
/// arrangement and the reorientation producing it. The reorientation is the
/// negative support of a random infeasible sign vector, which guarantees the
/// all-plus tope is absent.
pub fn random_non_acyclic_topes<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    n: usize,
) -> (Arrangement, GroundSubset, ToposSet) {
    assert!(n <= MAX_ARRANGEMENT_ELEMENTS);
    loop {
        let arr = random_arrangement(rng, d, n, 4);
        let unoriented = arrangement_topes(&arr, GroundSubset::EMPTY)
            .expect("bounds checked");
        let infeasible: Vec<u64> = (0..1u64 << n)
            .filter(|&signs| {
                let plus = GroundSubset::from_bits(!signs & GroundSubset::full(n).bits());
                unoriented
                    .index_of(&SignVector::tope_from_positive(n, plus))
                    .is_none()
            })
            .collect();
        if infeasible.is_empty() {
            continue; // every sign vector is a chamber; all reorientations stay acyclic
        }
        let pick = infeasible[rng.random_range(0..infeasible.len())];
        let reorient = GroundSubset::from_bits(pick);
        let ts = arrangement_topes(&arr, reorient).expect("bounds checked");
        debug_assert!(!ts.is_acyclic());
        return (arr, reorient, ts);
    }
}
