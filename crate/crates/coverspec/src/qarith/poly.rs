//! Dense univariate polynomials over Q, coefficients lowest degree first.
//!
//! Invariant: no trailing zero coefficient; the zero polynomial is the
//! empty list. Division, gcd, squarefree decomposition and resultants are
//! all exact.

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ratq::{divisors, RatQ};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyQ {
    coeffs: Vec<RatQ>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<RatQ>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: vec![] }
    }

    pub fn one() -> Self {
        PolyQ::constant(RatQ::one())
    }

    pub fn constant(c: RatQ) -> Self {
        PolyQ::new(vec![c])
    }

    /// The monomial c * U^k.
    pub fn monomial(c: RatQ, k: usize) -> Self {
        let mut v = vec![RatQ::zero(); k + 1];
        v[k] = c;
        PolyQ::new(v)
    }

    /// Polynomial from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        PolyQ::new(coeffs.iter().map(|&c| RatQ::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[RatQ] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatQ {
        self.coeffs.get(k).cloned().unwrap_or_else(RatQ::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with deg 0 for constants and the zero polynomial alike.
    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> RatQ {
        self.coeffs.last().cloned().unwrap_or_else(RatQ::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &RatQ) -> RatQ {
        let mut acc = RatQ::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &RatQ) -> Self {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return PolyQ::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&lc.recip())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return PolyQ::zero();
        }
        PolyQ::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * RatQ::from_integer((i as i64 + 1).into()))
                .collect(),
        )
    }

    /// Euclidean division; panics on zero divisor.
    pub fn div_rem(&self, d: &PolyQ) -> (PolyQ, PolyQ) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let dlc = d.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (PolyQ::zero(), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![RatQ::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] / &dlc;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[k + i] -= t;
            }
            quot[k] = c;
        }
        (PolyQ::new(quot), PolyQ::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &PolyQ) -> PolyQ {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Substitutes another polynomial for the variable.
    pub fn compose(&self, inner: &PolyQ) -> PolyQ {
        let mut acc = PolyQ::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &PolyQ::constant(c.clone());
        }
        acc
    }

    /// Squarefree decomposition by Yun's algorithm: pairs (m, f_m) with
    /// f_m monic squarefree of positive degree, pairwise coprime, and
    /// self = lc * prod f_m^m.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, PolyQ)> {
        if self.is_constant() {
            return vec![];
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0);
        let mut c = df.exact_div(&a0);
        let mut out = Vec::new();
        let mut m = 1usize;
        loop {
            let d = &c - &b.derivative();
            if d.is_zero() {
                if b.degree().unwrap_or(0) > 0 {
                    out.push((m, b.monic()));
                }
                break;
            }
            let g = b.gcd(&d);
            if g.degree().unwrap_or(0) > 0 {
                out.push((m, g.clone()));
            }
            b = b.exact_div(&g);
            c = d.exact_div(&g);
            m += 1;
            if b.is_constant() {
                break;
            }
        }
        out
    }

    /// Clears denominators and content: returns (primitive integer
    /// coefficients lowest-first, positive leading sign preserved flag
    /// unused) for root finding.
    fn primitive_int_coeffs(&self) -> Vec<BigInt> {
        assert!(!self.is_zero());
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num::Integer::lcm(&lcm, c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = num::Integer::gcd(&content, c);
        }
        ints.iter().map(|c| c / &content).collect()
    }

    /// All rational roots, each listed once, ascending; multiplicities are
    /// not reported. Rational-root candidates p/q with p | a_0, q | a_n are
    /// verified by exact evaluation.
    pub fn rational_roots(&self) -> Vec<RatQ> {
        if self.is_zero() || self.is_constant() {
            return vec![];
        }
        // Work on the squarefree part to keep candidate verification cheap.
        let mut f = PolyQ::new(self.primitive_int_coeffs().iter().map(|c| RatQ::from_integer(c.clone())).collect());
        f = f.exact_div(&f.gcd(&f.derivative()));
        let mut roots = Vec::new();
        // Strip roots at zero.
        let mut k = 0;
        while f.coeff(k).is_zero() {
            k += 1;
        }
        if k > 0 {
            roots.push(RatQ::zero());
            f = PolyQ::new(f.coeffs[k..].to_vec());
        }
        if f.is_constant() {
            roots.sort();
            return roots;
        }
        let ints = f.primitive_int_coeffs();
        let a0 = ints.first().unwrap().clone();
        let an = ints.last().unwrap().clone();
        for p in divisors(&a0.abs()) {
            for q in divisors(&an.abs()) {
                for sign in [1i64, -1] {
                    let cand = RatQ::new(&p * BigInt::from(sign), q.clone());
                    if f.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*U")?,
                _ => write!(f, "({c})*U^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        PolyQ::new(v)
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - rhs.coeff(i));
        }
        PolyQ::new(v)
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut v = vec![RatQ::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        PolyQ::new(v)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Resultant of two rational polynomials via the Euclidean remainder
/// sequence. res(f, g) = 0 iff f, g share a root (or both degenerate).
pub fn resultant(f: &PolyQ, g: &PolyQ) -> RatQ {
    fn rec(f: &PolyQ, g: &PolyQ) -> RatQ {
        if g.is_zero() {
            // res(f, 0) = 0 unless f is a nonzero constant (empty product).
            return if f.is_constant() && !f.is_zero() {
                RatQ::one()
            } else {
                RatQ::zero()
            };
        }
        let n = f.deg_or_zero();
        let m = g.deg_or_zero();
        if m == 0 {
            return pow_ratq(&g.leading_coeff(), n as u32);
        }
        if n < m {
            let sign = if n * m % 2 == 1 { -RatQ::one() } else { RatQ::one() };
            return sign * rec(g, f);
        }
        let (_, r) = f.div_rem(g);
        if r.is_zero() {
            return RatQ::zero();
        }
        let sign = if n * m % 2 == 1 { -RatQ::one() } else { RatQ::one() };
        let lc = g.leading_coeff();
        let exp = (n - r.degree().unwrap()) as u32;
        sign * pow_ratq(&lc, exp) * rec(g, &r)
    }
    if f.is_zero() || g.is_zero() {
        return RatQ::zero();
    }
    rec(f, g)
}

fn pow_ratq(c: &RatQ, e: u32) -> RatQ {
    let mut acc = RatQ::one();
    for _ in 0..e {
        acc *= c;
    }
    acc
}

/// Lagrange interpolation through (x_i, y_i) with distinct x_i.
pub fn interpolate(points: &[(RatQ, RatQ)]) -> PolyQ {
    let mut acc = PolyQ::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut li = PolyQ::one();
        let mut denom = RatQ::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            li = &li * &PolyQ::new(vec![-xj.clone(), RatQ::one()]);
            denom *= xi - xj;
        }
        acc = &acc + &li.scale(&(yi / denom));
    }
    acc
}
