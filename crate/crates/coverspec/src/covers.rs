//! Ramification data of Galois covers of the projective line: the
//! epsilon invariant, Riemann-Hurwitz genus, the exceptional genus-0
//! classification, comparison of invariant triples, and the strict
//! branch-point-growth predicate.

use std::sync::Arc;

use num::{One, Zero};
use thiserror::Error;

use crate::classtable::{ClassTable, ClassTuple, Prec, TableError};
use crate::qarith::{ratq, ratq_int, RatQ, P1Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("branch point list has length {0}, expected {1}")]
    BranchPointCount(usize, usize),
    #[error("branch points are not pairwise distinct")]
    DuplicateBranchPoints,
    #[error("ramification index {0} does not divide the group order {1}")]
    IndexDoesNotDivide(usize, usize),
    #[error("Riemann-Hurwitz value 2g-2 = {0} is odd: no such cover")]
    NonIntegralGenus(String),
    #[error("Riemann-Hurwitz genus {0} is negative: no such cover")]
    NegativeGenus(String),
    #[error("comparison requires genus >= 1 or an equal-groups assertion")]
    GenusSideConditionViolated,
    #[error("no ramification data (r = 0)")]
    EmptyRamification,
}

/// The invariant triple (G, r, C) of a Galois cover together with its
/// degree and optional rational branch points. Ramification indices are
/// the element orders of the classes.
#[derive(Debug, Clone)]
pub struct RamificationData {
    pub table: Arc<ClassTable>,
    /// group order
    pub d: usize,
    pub classes: ClassTuple,
    pub branch_points: Option<Vec<P1Q>>,
    /// ramification indices e_i, derived from the classes
    pub e: Vec<usize>,
}

impl RamificationData {
    pub fn new(
        table: Arc<ClassTable>,
        d: usize,
        classes: ClassTuple,
        branch_points: Option<Vec<P1Q>>,
    ) -> Result<Self, CoverError> {
        let e: Vec<usize> = classes.ids.iter().map(|&c| table.order_of(c)).collect();
        for &ei in &e {
            if !d.is_multiple_of(ei) {
                return Err(CoverError::IndexDoesNotDivide(ei, d));
            }
        }
        if let Some(points) = &branch_points {
            if points.len() != classes.len() {
                return Err(CoverError::BranchPointCount(points.len(), classes.len()));
            }
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    if points[i] == points[j] {
                        return Err(CoverError::DuplicateBranchPoints);
                    }
                }
            }
        }
        Ok(RamificationData {
            table,
            d,
            classes,
            branch_points,
            e,
        })
    }

    pub fn r(&self) -> usize {
        self.classes.len()
    }

    pub fn epsilon(&self) -> RatQ {
        self.e
            .iter()
            .fold(RatQ::zero(), |acc, &ei| acc + ratq(1, ei as i64))
    }

    pub fn e_inf(&self) -> usize {
        self.e.iter().copied().max().unwrap_or(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhInvariants {
    pub epsilon: RatQ,
    pub e_inf: usize,
    pub genus: i64,
}

/// Galois Riemann-Hurwitz: 2g - 2 = d(r - 2 - epsilon), solved exactly
/// for the genus. Data whose genus is fractional or negative is not a
/// cover and is rejected.
pub fn rh_invariants(data: &RamificationData) -> Result<RhInvariants, CoverError> {
    let epsilon = data.epsilon();
    let r = ratq_int(data.r() as i64);
    let d = ratq_int(data.d as i64);
    let two_g_minus_2 = d * (r - ratq_int(2) - &epsilon);
    let g2 = &two_g_minus_2 + &ratq_int(2);
    if !g2.denom().is_one() || (g2.numer() % 2i64) != num::BigInt::zero() {
        return Err(CoverError::NonIntegralGenus(format!("{two_g_minus_2}")));
    }
    let genus_big = g2.numer() / 2i64;
    let genus: i64 = genus_big.try_into().expect("desk-scale genus");
    if genus < 0 {
        return Err(CoverError::NegativeGenus(genus.to_string()));
    }
    Ok(RhInvariants {
        epsilon,
        e_inf: data.e_inf(),
        genus,
    })
}

/// The finitely many shapes a genus-0 Galois cover of P^1 can have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExceptionalCase {
    /// r = 0, trivial cover
    Trivial,
    /// r = 2, cyclic of order d with indices (d, d)
    Cyclic(usize),
    /// e = (2,2,2), Klein four-group
    Klein,
    /// e = (2,3,3), alternating group A4
    A4,
    /// e = (2,3,4), symmetric group S4
    S4,
    /// e = (2,3,5), alternating group A5
    A5,
    /// e = (2,2,n), dihedral group of order 2n
    Dihedral(usize),
}

/// Matches genus-0 ramification data against the exceptional list;
/// None if the genus is not 0 (or cannot even be formed).
pub fn classify_genus_zero(data: &RamificationData) -> Option<ExceptionalCase> {
    let inv = rh_invariants(data).ok()?;
    if inv.genus != 0 {
        return None;
    }
    let mut e = data.e.clone();
    e.sort_unstable();
    match (data.r(), e.as_slice()) {
        (0, []) if data.d == 1 => Some(ExceptionalCase::Trivial),
        (2, [a, b]) if a == b && *a == data.d => Some(ExceptionalCase::Cyclic(data.d)),
        (3, [2, 2, 2]) if data.d == 4 => Some(ExceptionalCase::Klein),
        (3, [2, 3, 3]) if data.d == 12 => Some(ExceptionalCase::A4),
        (3, [2, 3, 4]) if data.d == 24 => Some(ExceptionalCase::S4),
        (3, [2, 3, 5]) if data.d == 60 => Some(ExceptionalCase::A5),
        (3, [2, 2, n]) if *n >= 3 && data.d == 2 * n => Some(ExceptionalCase::Dihedral(*n)),
        _ => None,
    }
}

#[derive(Debug, Clone)]
pub struct InvariantsComparison {
    pub r_ok: bool,
    pub tuple: Prec,
}

impl InvariantsComparison {
    pub fn holds(&self) -> bool {
        self.r_ok && self.tuple.holds()
    }
}

/// Necessary condition for the cover of A to specialize to the cover of
/// B within one group: r_A <= r_B and the class tuple of B is dominated
/// by that of A. A negative answer certifies non-specialization. The
/// comparison is only valid when A has genus >= 1, unless the caller
/// asserts that both covers have the full group.
pub fn invariants_prec(
    a: &RamificationData,
    b: &RamificationData,
    assume_equal_groups: bool,
) -> Result<InvariantsComparison, CoverError> {
    if !a.table.owns(&b.classes) {
        return Err(CoverError::Table(TableError::TableMismatch));
    }
    if !assume_equal_groups {
        let g = rh_invariants(a)?.genus;
        if g < 1 {
            return Err(CoverError::GenusSideConditionViolated);
        }
    }
    let tuple = a.table.tuple_prec(&a.classes, &b.classes)?;
    Ok(InvariantsComparison {
        r_ok: a.r() <= b.r(),
        tuple,
    })
}

/// Does the branch point number strictly grow under specialization along
/// a degree-N map? True when one of these certified cases holds:
/// (a) r >= 5; (b) a proper cover with epsilon <= (r-2)/2;
/// (c) N >= 4, r = 4, epsilon <= 3/2; (d) N >= 4, r = 3, epsilon <= 3/4.
pub fn strict_growth(r: usize, epsilon: &RatQ, n: usize, proper_cover: bool) -> bool {
    assert!(n >= 2, "strict growth is about non-trivial degrees");
    if r >= 5 {
        return true;
    }
    if proper_cover && epsilon * &ratq_int(2) <= ratq_int(r as i64 - 2) {
        return true;
    }
    if n >= 4 && r == 4 && *epsilon <= ratq(3, 2) {
        return true;
    }
    if n >= 4 && r == 3 && *epsilon <= ratq(3, 4) {
        return true;
    }
    false
}
