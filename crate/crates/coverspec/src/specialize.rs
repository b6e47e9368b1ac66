//! Specialization of a Galois cover of P^1 along a rational function
//! T0 in Q(U): per-branch-point fiber analysis, the surviving branch
//! points with their inertia power classes, the branch point count of
//! the specialized cover, and the exact bounds it must satisfy.
//!
//! Over each branch point t_i the fiber of T0 splits into simple points
//! (always survive, inertia class C_i), multiple points of multiplicity
//! alpha not divisible by e_i (survive with class C_i^alpha and inertia
//! order e_i/gcd(e_i, alpha)) and points with e_i | alpha (the inertia
//! dies; the point drops). Counts of distinct points are degree sums of
//! squarefree factors, so everything is exact over Q.

use num::One;
use thiserror::Error;

use crate::classtable::{ClassTable, ClassTuple, TableError};
use crate::covers::{rh_invariants, CoverError, RamificationData};
use crate::qarith::{
    fiber_profile, ratq_int, sqrt_as_quadext, FiberLocus, FiberProfile, PolyQ, QuadExt, QuadPoint,
    RatFunc, RatQ, P1Q,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("ramification data carries no branch points")]
    MissingBranchPoints,
    #[error("class table has no power map (declared table?)")]
    NoPowerMap,
    #[error("genus output requires the caller to assert no group drop")]
    GroupDropNotSupported,
    #[error("specialized Riemann-Hurwitz sum is odd: {0}")]
    NonIntegralGenus(String),
    #[error("specialized genus {0} violates the bound {1}")]
    GenusBoundViolated(i64, String),
}

/// A surviving branch point of the specialized cover.
#[derive(Debug, Clone)]
pub struct Survivor {
    /// index of the branch point of the source cover it lies over
    pub branch_index: usize,
    /// exact description of the point(s): a rational point, a squarefree
    /// polynomial without rational roots, or the point at infinity
    pub locus: FiberLocus,
    /// number of distinct geometric points in this descriptor
    pub degree: usize,
    /// vanishing order of T0 - t_i at the point
    pub alpha: usize,
    /// class id of C_i^alpha in the source table
    pub inertia_class: usize,
    pub inertia_order: usize,
}

/// Fiber analysis over one branch point.
#[derive(Debug, Clone)]
pub struct BranchAnalysis {
    pub branch_point: P1Q,
    pub profile: FiberProfile,
    /// distinct simple points
    pub p: usize,
    /// distinct multiple points whose multiplicity is not divisible by e_i
    pub q: usize,
    /// distinct multiple points with e_i-divisible multiplicity (dropped)
    pub s: usize,
}

/// Exact bounds on the invariants of the specialized cover.
#[derive(Debug, Clone)]
pub struct Bounds {
    /// r_T0 <= r * N
    pub upper_rn: usize,
    /// r_T0 >= ((r - eps - 2)N + 2) / (1 - 1/e_inf)
    pub lower_b1: RatQ,
    /// r_T0 > (r - eps - 2)N + 2
    pub lower_b1_strict: RatQ,
    /// r_T0 >= (r - 4)N + 4, valid when r >= 4
    pub lower_b2: i64,
    /// g_T0 <= N(g + d - 1)
    pub genus_upper: i64,
    /// g_T0 >= g + (d/4)(N-1)(r-4), valid only without group drop
    pub genus_lower: RatQ,
}

#[derive(Debug, Clone)]
pub struct SpecializationReport {
    /// degree of T0
    pub n: usize,
    pub per_branch: Vec<BranchAnalysis>,
    pub survivors: Vec<Survivor>,
    /// number of branch points of the specialized cover
    pub r_t0: usize,
    pub bounds: Bounds,
    /// identity p_i + sum of multiplicities = N verified per fiber
    pub identities_ok: bool,
    /// global ramification inequality sum (m-1) <= 2N - 2
    pub inequality2_ok: bool,
}

impl SpecializationReport {
    /// Classes of the surviving branch points, in report order.
    pub fn survivor_tuple(&self, table: &ClassTable) -> Result<ClassTuple, TableError> {
        let mut ids = Vec::new();
        for s in &self.survivors {
            for _ in 0..s.degree {
                ids.push(s.inertia_class);
            }
        }
        table.tuple(&ids)
    }

    /// Multiset of (inertia_order, class id) pairs over distinct points.
    pub fn survivor_signature(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for s in &self.survivors {
            for _ in 0..s.degree {
                v.push((s.inertia_order, s.inertia_class));
            }
        }
        v.sort_unstable();
        v
    }

    /// Expands all surviving points into coordinates of quadratic fields
    /// where possible (degrees 1 and 2; infinity is its own point).
    pub fn survivor_points(&self) -> Option<Vec<QuadPoint>> {
        let mut pts = Vec::new();
        for s in &self.survivors {
            match &s.locus {
                FiberLocus::Rational(r) => pts.push(QuadPoint::rational(r.clone())),
                FiberLocus::Infinity => pts.push(QuadPoint::Infinity),
                FiberLocus::Irrational(f) => {
                    if f.degree() != Some(2) {
                        return None;
                    }
                    let (r1, r2) = quadratic_roots(f)?;
                    pts.push(QuadPoint::Finite(r1));
                    pts.push(QuadPoint::Finite(r2));
                }
            }
        }
        Some(pts)
    }
}

/// Roots of a monic rational quadratic without rational roots.
fn quadratic_roots(f: &PolyQ) -> Option<(QuadExt, QuadExt)> {
    if f.degree() != Some(2) {
        return None;
    }
    let a = f.coeff(2);
    let b = f.coeff(1) / &a;
    let c = f.coeff(0) / &a;
    let disc = &b * &b - ratq_int(4) * c;
    let root = sqrt_as_quadext(&disc);
    let half = crate::qarith::ratq(1, 2);
    let minus_b = QuadExt::rational(-b);
    let r1 = minus_b.add(&root).ok()?;
    let r2 = minus_b.sub(&root).ok()?;
    let scale = QuadExt::rational(half);
    Some((r1.mul(&scale).ok()?, r2.mul(&scale).ok()?))
}

fn gcd_usize(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd_usize(b, a % b)
    }
}

/// Class and inertia order of the alpha-th power of an inertia
/// generator: the inertia group over a point of vanishing order alpha is
/// generated by g^alpha for g in the original class.
pub fn inertia_power_class(
    table: &ClassTable,
    class: usize,
    alpha: usize,
) -> Result<(usize, usize), SpecError> {
    let cid = table.power_class(class, alpha).ok_or(SpecError::NoPowerMap)?;
    let e = table.order_of(class);
    Ok((cid, e / gcd_usize(e, alpha)))
}

/// Exact bounds from the invariants (r, epsilon, e_inf) of the source
/// cover, the degree N of T0, the group order d and the source genus g.
pub fn compute_bounds(
    r: usize,
    epsilon: &RatQ,
    e_inf: usize,
    n: usize,
    d: usize,
    g: i64,
) -> Result<Bounds, CoverError> {
    if r == 0 {
        return Err(CoverError::EmptyRamification);
    }
    let nq = ratq_int(n as i64);
    let strict = (ratq_int(r as i64) - epsilon - ratq_int(2)) * &nq + ratq_int(2);
    let denom = RatQ::one() - crate::qarith::ratq(1, e_inf as i64);
    let lower_b1 = &strict / &denom;
    Ok(Bounds {
        upper_rn: r * n,
        lower_b1,
        lower_b1_strict: strict,
        lower_b2: (r as i64 - 4) * n as i64 + 4,
        genus_upper: n as i64 * (g + d as i64 - 1),
        genus_lower: ratq_int(g)
            + crate::qarith::ratq(d as i64, 4) * ratq_int(n as i64 - 1) * ratq_int(r as i64 - 4),
    })
}

/// Full specialization analysis of a cover with rational branch points
/// along T0. The source data must carry branch points; the table must be
/// computed (power map available).
pub fn specialize_cover(
    data: &RamificationData,
    t0: &RatFunc,
) -> Result<SpecializationReport, SpecError> {
    let points = data
        .branch_points
        .as_ref()
        .ok_or(SpecError::MissingBranchPoints)?;
    let n = t0.degree();
    let inv = rh_invariants(data)?;
    let mut per_branch = Vec::with_capacity(points.len());
    let mut survivors = Vec::new();
    let mut identities_ok = true;
    let mut weight = 0usize;
    for (i, t) in points.iter().enumerate() {
        let class = data.classes.ids[i];
        let e = data.e[i];
        let profile = fiber_profile(t0, t);
        identities_ok &= profile.total() == n;
        weight += profile.weight();
        let (mut p, mut q, mut s) = (0usize, 0usize, 0usize);
        for entry in &profile.entries {
            let alpha = entry.multiplicity;
            if alpha % e == 0 {
                s += entry.degree;
                continue;
            }
            if alpha == 1 {
                p += entry.degree;
            } else {
                q += entry.degree;
            }
            let (cid, order) = inertia_power_class(&data.table, class, alpha)?;
            survivors.push(Survivor {
                branch_index: i,
                locus: entry.locus.clone(),
                degree: entry.degree,
                alpha,
                inertia_class: cid,
                inertia_order: order,
            });
        }
        per_branch.push(BranchAnalysis {
            branch_point: t.clone(),
            profile,
            p,
            q,
            s,
        });
    }
    let r_t0 = per_branch.iter().map(|b| b.p + b.q).sum();
    let bounds = compute_bounds(data.r(), &inv.epsilon, inv.e_inf, n, data.d, inv.genus)?;
    Ok(SpecializationReport {
        n,
        per_branch,
        survivors,
        r_t0,
        bounds,
        identities_ok,
        inequality2_ok: weight <= 2 * n - 2,
    })
}

/// Genus of the specialized cover from the surviving inertia data,
/// assuming the group does not drop (d_T0 = d). Verified against the
/// upper and lower bounds of the report.
pub fn specialized_genus(
    report: &SpecializationReport,
    data: &RamificationData,
    assume_no_group_drop: bool,
) -> Result<i64, SpecError> {
    if !assume_no_group_drop {
        return Err(SpecError::GroupDropNotSupported);
    }
    let d = data.d as i64;
    // 2g' - 2 = -2d + sum over survivors of deg * (d/omega)(omega - 1)
    let mut total = -2 * d;
    for s in &report.survivors {
        let omega = s.inertia_order as i64;
        total += s.degree as i64 * (d / omega) * (omega - 1);
    }
    if total % 2 != 0 {
        return Err(SpecError::NonIntegralGenus(total.to_string()));
    }
    let genus = total / 2 + 1;
    if genus > report.bounds.genus_upper {
        return Err(SpecError::GenusBoundViolated(
            genus,
            format!("<= {}", report.bounds.genus_upper),
        ));
    }
    if ratq_int(genus) < report.bounds.genus_lower {
        return Err(SpecError::GenusBoundViolated(
            genus,
            format!(">= {}", report.bounds.genus_lower),
        ));
    }
    Ok(genus)
}

/// Moves the branch points of a cover through a degree-1 map; classes
/// are untouched. Used for differential testing of the intrinsic
/// infinity handling against normalized coordinates.
pub fn moebius_transport(
    data: &RamificationData,
    chi: &RatFunc,
) -> Result<RamificationData, SpecError> {
    assert_eq!(chi.degree(), 1);
    let points = data
        .branch_points
        .as_ref()
        .ok_or(SpecError::MissingBranchPoints)?;
    let moved: Vec<P1Q> = points.iter().map(|t| chi.eval_p1(t)).collect();
    Ok(RamificationData::new(
        data.table.clone(),
        data.d,
        data.classes.clone(),
        Some(moved),
    )?)
}

/// Builds the ramification data of the specialized cover when every
/// surviving point is rational, so that specialization can be chained.
/// None if an irrational survivor blocks the construction.
pub fn specialized_cover_data(
    report: &SpecializationReport,
    data: &RamificationData,
) -> Option<RamificationData> {
    let mut points = Vec::new();
    let mut ids = Vec::new();
    for s in &report.survivors {
        match &s.locus {
            FiberLocus::Rational(r) => points.push(P1Q::Finite(r.clone())),
            FiberLocus::Infinity => points.push(P1Q::Infinity),
            FiberLocus::Irrational(_) => return None,
        }
        ids.push(s.inertia_class);
    }
    let tuple = data.table.tuple(&ids).ok()?;
    RamificationData::new(data.table.clone(), data.d, tuple, Some(points)).ok()
}
