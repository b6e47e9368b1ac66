//! Rational functions T0(U) = a(U)/b(U) over Q and their fibers on the
//! projective line.
//!
//! Fibers are computed over the algebraic closure but represented by
//! exact Q-data: the squarefree decomposition of a - t*b groups the
//! points of the fiber by multiplicity, and the number of distinct
//! points with multiplicity m is the degree of the squarefree factor.
//! The point at infinity enters through the homogeneous degree deficit,
//! so no normalization of branch points is ever needed.

use num::{One, Zero};
use std::fmt;

use super::poly::PolyQ;
use super::ratq::{ratq_from_str, ratq_to_string, RatQ};
use super::QarithError;

/// Point of the rational projective line.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum P1Q {
    Finite(RatQ),
    Infinity,
}

impl P1Q {
    pub fn from_int(n: i64) -> Self {
        P1Q::Finite(RatQ::from_integer(n.into()))
    }

    /// Parses "inf" / "oo" / "a/b".
    pub fn parse(s: &str) -> Result<Self, QarithError> {
        match s {
            "inf" | "Inf" | "oo" | "infinity" => Ok(P1Q::Infinity),
            _ => Ok(P1Q::Finite(ratq_from_str(s)?)),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, P1Q::Infinity)
    }
}

impl fmt::Display for P1Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Q::Finite(q) => write!(f, "{}", ratq_to_string(q)),
            P1Q::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for P1Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Reduced rational function: a, b coprime, b monic nonzero, and
/// degree = max(deg a, deg b).
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    a: PolyQ,
    b: PolyQ,
    degree: usize,
}

/// Normal form of a/b. The denominator is made monic and common factors
/// are cancelled; constant functions are rejected.
pub fn reduce_ratfunc(a: PolyQ, b: PolyQ) -> Result<RatFunc, QarithError> {
    if b.is_zero() {
        return Err(QarithError::ZeroDenominator);
    }
    let g = a.gcd(&b);
    let (mut a, mut b) = if g.is_constant() {
        (a, b)
    } else {
        (a.exact_div(&g), b.exact_div(&g))
    };
    let lc = b.leading_coeff();
    a = a.scale(&lc.recip());
    b = b.scale(&lc.recip());
    let degree = a.deg_or_zero().max(b.deg_or_zero());
    if degree == 0 {
        return Err(QarithError::ConstantFunction);
    }
    Ok(RatFunc { a, b, degree })
}

impl RatFunc {
    pub fn numerator(&self) -> &PolyQ {
        &self.a
    }

    pub fn denominator(&self) -> &PolyQ {
        &self.b
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// U^k as a rational function.
    pub fn power_map(k: usize) -> RatFunc {
        reduce_ratfunc(PolyQ::monomial(RatQ::one(), k), PolyQ::one()).unwrap()
    }

    /// Value at a projective point.
    pub fn eval_p1(&self, u: &P1Q) -> P1Q {
        match u {
            P1Q::Finite(x) => {
                let bv = self.b.eval(x);
                if bv.is_zero() {
                    P1Q::Infinity
                } else {
                    P1Q::Finite(self.a.eval(x) / bv)
                }
            }
            P1Q::Infinity => {
                let (da, db) = (self.a.deg_or_zero(), self.b.deg_or_zero());
                use std::cmp::Ordering::*;
                match da.cmp(&db) {
                    Greater => P1Q::Infinity,
                    Less => P1Q::Finite(RatQ::zero()),
                    Equal => P1Q::Finite(self.a.leading_coeff() / self.b.leading_coeff()),
                }
            }
        }
    }

    /// Composition self(other(U)), of degree deg(self)*deg(other).
    pub fn compose(&self, inner: &RatFunc) -> RatFunc {
        // a(p/q)/b(p/q) cleared by q^N.
        let n = self.degree;
        let p = inner.a.clone();
        let q = inner.b.clone();
        let clear = |poly: &PolyQ| -> PolyQ {
            let mut acc = PolyQ::zero();
            let mut qpow = PolyQ::one();
            let d = poly.deg_or_zero();
            // coefficient i multiplies p^i q^(n-i); build from the top down.
            let mut ppows = vec![PolyQ::one()];
            for _ in 0..d {
                ppows.push(&ppows.last().unwrap().clone() * &p);
            }
            for i in (0..=d).rev() {
                let c = poly.coeff(i);
                if !c.is_zero() {
                    let term = &ppows[i] * &qpow;
                    acc = &acc + &term.scale(&c);
                }
                qpow = &qpow * &q;
            }
            // pad with q^(n-d)
            let mut extra = PolyQ::one();
            for _ in 0..(n - d) {
                extra = &extra * &q;
            }
            &acc * &extra
        };
        reduce_ratfunc(clear(&self.a), clear(&self.b)).expect("composition of non-constant maps")
    }

    /// Wronskian numerator a'b - ab' of the derivative.
    pub fn wronskian(&self) -> PolyQ {
        &(&self.a.derivative() * &self.b) - &(&self.a * &self.b.derivative())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.a, self.b)
    }
}

/// One multiplicity class of a fiber: `degree` distinct points of the
/// algebraic closure, each of multiplicity `multiplicity`. Affine points
/// are carried as the monic squarefree polynomial vanishing on them;
/// the point at infinity is its own entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberEntry {
    pub multiplicity: usize,
    pub degree: usize,
    pub locus: FiberLocus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberLocus {
    /// A single rational point.
    Rational(RatQ),
    /// Monic squarefree polynomial without rational roots; its roots are
    /// the points of this entry.
    Irrational(PolyQ),
    Infinity,
}

/// Full fiber of a rational function above one point of P^1: the
/// multiplicities weighted by point degrees always sum to the degree of
/// the map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberProfile {
    pub target: P1Q,
    pub entries: Vec<FiberEntry>,
}

impl FiberProfile {
    /// Sum of multiplicity * degree; equal to deg T0 by construction.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity * e.degree).sum()
    }

    /// Number of distinct geometric points of the fiber.
    pub fn distinct_points(&self) -> usize {
        self.entries.iter().map(|e| e.degree).sum()
    }

    /// Ramification weight sum (multiplicity - 1) over distinct points.
    pub fn weight(&self) -> usize {
        self.entries
            .iter()
            .map(|e| (e.multiplicity - 1) * e.degree)
            .sum()
    }

    /// Multiset of (multiplicity, degree) pairs, sorted.
    pub fn shape(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self
            .entries
            .iter()
            .map(|e| (e.multiplicity, e.degree))
            .collect();
        v.sort();
        v
    }
}

/// Exact fiber T0^{-1}(t) on P^1 over the algebraic closure.
///
/// For finite t this is the squarefree decomposition of a - t*b; the
/// point at infinity appears with multiplicity N - deg(a - t*b) when that
/// deficit is positive (N - deg b over t = infinity).
pub fn fiber_profile(t0: &RatFunc, t: &P1Q) -> FiberProfile {
    let n = t0.degree();
    let h = match t {
        P1Q::Finite(t) => &t0.a - &t0.b.scale(t),
        P1Q::Infinity => t0.b.clone(),
    };
    let mut entries = Vec::new();
    if !h.is_constant() {
        for (m, f) in h.squarefree_decomposition() {
            // split off rational points so survivors have exact coordinates
            let mut rest = f;
            let mut roots = rest.rational_roots();
            roots.sort();
            for r in roots {
                let linear = PolyQ::new(vec![-r.clone(), RatQ::one()]);
                rest = rest.exact_div(&linear);
                entries.push(FiberEntry {
                    multiplicity: m,
                    degree: 1,
                    locus: FiberLocus::Rational(r),
                });
            }
            if !rest.is_constant() {
                entries.push(FiberEntry {
                    multiplicity: m,
                    degree: rest.degree().unwrap(),
                    locus: FiberLocus::Irrational(rest),
                });
            }
        }
    }
    let deficit = n - h.deg_or_zero();
    if deficit > 0 {
        entries.push(FiberEntry {
            multiplicity: deficit,
            degree: 1,
            locus: FiberLocus::Infinity,
        });
    }
    entries.sort_by_key(|e| (e.multiplicity, e.degree));
    FiberProfile {
        target: t.clone(),
        entries,
    }
}

/// Total ramification of the degree-N cover T0: P^1 -> P^1, summed over
/// all fibers. Each finite critical point of fiber multiplicity m is a
/// root of the Wronskian a'b - ab' of order exactly m - 1, so the finite
/// part is deg(a'b - ab'); the point at infinity contributes its own
/// multiplicity deficit in the fiber over T0(inf). Riemann-Hurwitz for
/// the sphere bounds the result by 2N - 2.
pub fn global_ramification_weight(t0: &RatFunc) -> usize {
    let w = t0.wronskian();
    let finite = w.deg_or_zero();
    let t_inf = t0.eval_p1(&P1Q::Infinity);
    let fiber = fiber_profile(t0, &t_inf);
    let inf_mult = fiber
        .entries
        .iter()
        .find(|e| e.locus == FiberLocus::Infinity)
        .map_or(1, |e| e.multiplicity);
    finite + (inf_mult - 1)
}

/// Degree-1 maps (aU+b)/(cU+d) with ad - bc != 0.
pub fn moebius(a: i64, b: i64, c: i64, d: i64) -> Result<RatFunc, QarithError> {
    if a * d - b * c == 0 {
        return Err(QarithError::DegeneratePoints);
    }
    reduce_ratfunc(PolyQ::from_ints(&[b, a]), PolyQ::from_ints(&[d, c]))
}
