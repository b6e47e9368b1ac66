//! Elements x + y*sqrt(d) of a quadratic extension of Q, d squarefree,
//! and cross-ratio orbits of 4-point sets on the projective line over
//! such a field.

use num::bigint::BigInt;
use num::{One, Zero};
use std::fmt;

use super::ratq::{ratq_to_string, squarefree_part, RatQ};
use super::QarithError;

/// x + y*sqrt(d). Rational values (y = 0) compare equal across ambient
/// fields; irrational values require matching d.
#[derive(Clone)]
pub struct QuadExt {
    pub d: BigInt,
    pub x: RatQ,
    pub y: RatQ,
}

impl QuadExt {
    pub fn rational(x: RatQ) -> Self {
        QuadExt {
            d: BigInt::from(-1),
            x,
            y: RatQ::zero(),
        }
    }

    pub fn new(d: i64, x: RatQ, y: RatQ) -> Self {
        QuadExt {
            d: BigInt::from(d),
            x,
            y,
        }
    }

    pub fn zero() -> Self {
        QuadExt::rational(RatQ::zero())
    }

    pub fn one() -> Self {
        QuadExt::rational(RatQ::one())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    fn same_field(&self, rhs: &QuadExt) -> Result<BigInt, QarithError> {
        if self.is_rational() {
            return Ok(rhs.d.clone());
        }
        if rhs.is_rational() || self.d == rhs.d {
            return Ok(self.d.clone());
        }
        Err(QarithError::FieldMismatch(
            self.d.to_string(),
            rhs.d.to_string(),
        ))
    }

    pub fn add(&self, rhs: &QuadExt) -> Result<QuadExt, QarithError> {
        let d = self.same_field(rhs)?;
        Ok(QuadExt {
            d,
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
        })
    }

    pub fn sub(&self, rhs: &QuadExt) -> Result<QuadExt, QarithError> {
        let d = self.same_field(rhs)?;
        Ok(QuadExt {
            d,
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
        })
    }

    pub fn mul(&self, rhs: &QuadExt) -> Result<QuadExt, QarithError> {
        let d = self.same_field(rhs)?;
        let dq = RatQ::from_integer(d.clone());
        Ok(QuadExt {
            d,
            x: &self.x * &rhs.x + &(&self.y * &rhs.y) * &dq,
            y: &self.x * &rhs.y + &self.y * &rhs.x,
        })
    }

    /// Multiplicative inverse via the conjugate; error on zero.
    pub fn inv(&self) -> Result<QuadExt, QarithError> {
        if self.is_zero() {
            return Err(QarithError::DivisionByZero);
        }
        let dq = RatQ::from_integer(self.d.clone());
        let norm = &self.x * &self.x - &(&self.y * &self.y) * &dq;
        // norm = 0 with (x,y) != 0 would force d to be a square; d is squarefree != 1.
        Ok(QuadExt {
            d: self.d.clone(),
            x: &self.x / &norm,
            y: -(&self.y / &norm),
        })
    }

    pub fn div(&self, rhs: &QuadExt) -> Result<QuadExt, QarithError> {
        self.mul(&rhs.inv()?)
    }

    fn canonical_key(&self) -> (RatQ, RatQ, BigInt) {
        if self.y.is_zero() {
            (self.x.clone(), RatQ::zero(), BigInt::zero())
        } else {
            (self.x.clone(), self.y.clone(), self.d.clone())
        }
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_key() == other.canonical_key()
    }
}
impl Eq for QuadExt {}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            write!(f, "{}", ratq_to_string(&self.x))
        } else if self.x.is_zero() {
            write!(f, "({})*sqrt({})", ratq_to_string(&self.y), self.d)
        } else {
            write!(
                f,
                "{} + ({})*sqrt({})",
                ratq_to_string(&self.x),
                ratq_to_string(&self.y),
                self.d
            )
        }
    }
}

/// Square root of a rational as an element of a quadratic field:
/// sqrt(q) = (s/den) * sqrt(d) with d squarefree. Returns a rational
/// QuadExt when q is a perfect square.
pub fn sqrt_as_quadext(q: &RatQ) -> QuadExt {
    if q.is_zero() {
        return QuadExt::zero();
    }
    // q = n/m = n*m / m^2, so sqrt(q) = sqrt(n*m)/m.
    let nm = q.numer() * q.denom();
    let (s, d) = squarefree_part(&nm);
    let coeff = RatQ::new(s, q.denom().clone());
    if d.is_one() {
        QuadExt::rational(coeff)
    } else {
        QuadExt {
            d,
            x: RatQ::zero(),
            y: coeff,
        }
    }
}

/// Projective point over a quadratic extension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QuadPoint {
    Finite(QuadExt),
    Infinity,
}

impl QuadPoint {
    pub fn rational(x: RatQ) -> Self {
        QuadPoint::Finite(QuadExt::rational(x))
    }

    pub fn from_p1q(p: &super::ratfunc::P1Q) -> Self {
        match p {
            super::ratfunc::P1Q::Finite(x) => QuadPoint::rational(x.clone()),
            super::ratfunc::P1Q::Infinity => QuadPoint::Infinity,
        }
    }

    fn homogeneous(&self) -> (QuadExt, QuadExt) {
        match self {
            QuadPoint::Finite(x) => (x.clone(), QuadExt::one()),
            QuadPoint::Infinity => (QuadExt::one(), QuadExt::zero()),
        }
    }
}

/// Cross-ratio with the convention cr(p1,p2,p3,p4) =
/// ((p1-p3)(p2-p4)) / ((p1-p4)(p2-p3)), computed projectively so that
/// infinity is an ordinary point; cr(0, 1, -1, t) = (t-1)/(2t).
pub fn cross_ratio(points: &[QuadPoint; 4]) -> Result<QuadExt, QarithError> {
    for i in 0..4 {
        for j in i + 1..4 {
            if points[i] == points[j] {
                return Err(QarithError::DegeneratePoints);
            }
        }
    }
    let h: Vec<(QuadExt, QuadExt)> = points.iter().map(|p| p.homogeneous()).collect();
    let det = |i: usize, j: usize| -> Result<QuadExt, QarithError> {
        h[i].0.mul(&h[j].1)?.sub(&h[j].0.mul(&h[i].1)?)
    };
    let num = det(0, 2)?.mul(&det(1, 3)?)?;
    let den = det(0, 3)?.mul(&det(1, 2)?)?;
    num.div(&den)
}

/// The orbit of the cross-ratio under permutations of the 4 points:
/// {t, 1/t, 1-t, 1/(1-t), t/(t-1), (t-1)/t}, deduplicated and sorted.
/// Unordered 4-point sets are compared by orbit equality.
pub fn cross_ratio_orbit(points: &[QuadPoint; 4]) -> Result<Vec<QuadExt>, QarithError> {
    let t = cross_ratio(points)?;
    let one = QuadExt::one();
    let mut orbit = vec![
        t.clone(),
        t.inv()?,
        one.sub(&t)?,
        one.sub(&t)?.inv()?,
        t.div(&t.sub(&one)?)?,
        t.sub(&one)?.div(&t)?,
    ];
    orbit.sort();
    orbit.dedup();
    Ok(orbit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::ratq::{ratq, ratq_int};

    #[test]
    fn arithmetic_in_q_sqrt_minus_two() {
        let a = QuadExt::new(-2, ratq(1, 3), ratq(1, 3)); // (1 + sqrt(-2))/3
        let b = QuadExt::new(-2, ratq(1, 3), ratq(-1, 3));
        let prod = a.mul(&b).unwrap();
        // norm: (1/9) - (-2)(1/9)... (1+s)(1-s)/9 = (1 - (-2))/9 = 1/3
        assert_eq!(prod, QuadExt::rational(ratq(1, 3)));
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), QuadExt::one());
    }

    #[test]
    fn sqrt_extraction() {
        assert_eq!(sqrt_as_quadext(&ratq(9, 4)), QuadExt::rational(ratq(3, 2)));
        let s = sqrt_as_quadext(&ratq(-8, 9));
        assert_eq!(s.d, BigInt::from(-2));
        assert_eq!(s.y, ratq(2, 3));
    }

    #[test]
    fn base_cross_ratio_convention() {
        // cr(0, 1, -1, t) = (t-1)/(2t) at t = 1/5 gives -2
        let pts = [
            QuadPoint::rational(ratq_int(0)),
            QuadPoint::rational(ratq_int(1)),
            QuadPoint::rational(ratq_int(-1)),
            QuadPoint::rational(ratq(1, 5)),
        ];
        assert_eq!(cross_ratio(&pts).unwrap(), QuadExt::rational(ratq_int(-2)));
        let orbit = cross_ratio_orbit(&pts).unwrap();
        assert!(orbit.contains(&QuadExt::rational(ratq_int(-2))));
    }

    #[test]
    fn quadratic_field_cross_ratio() {
        // ((1+s)/3, (1-s)/3, -1, 1/3) with s = sqrt(-2): the orbit
        // contains (16 + 4s)/9
        let pts = [
            QuadPoint::Finite(QuadExt::new(-2, ratq(1, 3), ratq(1, 3))),
            QuadPoint::Finite(QuadExt::new(-2, ratq(1, 3), ratq(-1, 3))),
            QuadPoint::rational(ratq_int(-1)),
            QuadPoint::rational(ratq(1, 3)),
        ];
        let orbit = cross_ratio_orbit(&pts).unwrap();
        assert!(orbit.contains(&QuadExt::new(-2, ratq(16, 9), ratq(4, 9))));
    }

    #[test]
    fn harmonic_orbit_collapses() {
        let pts = [
            QuadPoint::rational(ratq_int(0)),
            QuadPoint::rational(ratq_int(1)),
            QuadPoint::Infinity,
            QuadPoint::rational(ratq_int(2)),
        ];
        let orbit = cross_ratio_orbit(&pts).unwrap();
        let expect: Vec<QuadExt> = [ratq_int(-1), ratq(1, 2), ratq_int(2)]
            .into_iter()
            .map(QuadExt::rational)
            .collect();
        assert_eq!(orbit, expect);
    }

    #[test]
    fn orbit_is_ordering_invariant() {
        let base = [
            QuadPoint::rational(ratq_int(0)),
            QuadPoint::rational(ratq_int(1)),
            QuadPoint::rational(ratq_int(-1)),
            QuadPoint::rational(ratq(1, 5)),
        ];
        let reference = cross_ratio_orbit(&base).unwrap();
        // all 24 orderings give the same orbit
        let idx = [0usize, 1, 2, 3];
        let mut perms = vec![];
        permute(&idx, &mut vec![], &mut perms);
        for p in perms {
            let pts = [
                base[p[0]].clone(),
                base[p[1]].clone(),
                base[p[2]].clone(),
                base[p[3]].clone(),
            ];
            assert_eq!(cross_ratio_orbit(&pts).unwrap(), reference);
        }
    }

    fn permute(rest: &[usize], acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for (i, &x) in rest.iter().enumerate() {
            let mut next: Vec<usize> = rest.to_vec();
            next.remove(i);
            acc.push(x);
            permute(&next, acc, out);
            acc.pop();
        }
    }

    #[test]
    fn degenerate_points_rejected() {
        let pts = [
            QuadPoint::rational(ratq_int(0)),
            QuadPoint::rational(ratq_int(0)),
            QuadPoint::rational(ratq_int(1)),
            QuadPoint::rational(ratq_int(2)),
        ];
        assert!(matches!(
            cross_ratio(&pts),
            Err(QarithError::DegeneratePoints)
        ));
    }
}
