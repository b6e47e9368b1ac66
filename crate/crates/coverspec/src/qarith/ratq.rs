//! Exact rational scalars and small integer-factorization helpers.
//!
//! `RatQ` is a reduced fraction with positive denominator; construction
//! through `ratq`/`ratq_big` or parsing keeps it canonical. Everything
//! downstream (branch points, bounds, cross-ratios) is built on it.

use num::bigint::{BigInt, Sign};
use num::{BigRational, Integer, One, Signed, Zero};

use super::QarithError;

/// Reduced rational number with positive denominator; zero is 0/1.
pub type RatQ = BigRational;

/// Rational from machine integers.
pub fn ratq(num: i64, den: i64) -> RatQ {
    RatQ::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn ratq_int(n: i64) -> RatQ {
    RatQ::from_integer(BigInt::from(n))
}

/// Parses "a/b" or "a"; whitespace is not accepted.
pub fn ratq_from_str(s: &str) -> Result<RatQ, QarithError> {
    let bad = || QarithError::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(QarithError::ZeroDenominator);
            }
            Ok(RatQ::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(RatQ::from_integer(n))
        }
    }
}

/// Renders "a" for integers, "a/b" otherwise.
pub fn ratq_to_string(q: &RatQ) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Smallest integer >= q.
pub fn ratq_ceil(q: &RatQ) -> BigInt {
    q.ceil().to_integer()
}

fn is_probable_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // Miller-Rabin with fixed bases; deterministic far beyond desk scale.
    let one = BigInt::one();
    let two = BigInt::from(2);
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'base: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigInt::from(a);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> BigInt {
    // n odd composite, not a prime power of small primes.
    let one = BigInt::one();
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = BigInt::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if d != *n {
            return d;
        }
        c += &one;
    }
}

/// Prime factorization of |n| as (prime, exponent) pairs, n != 0.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    assert!(!n.is_zero(), "factorize(0)");
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, e: u32, out: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = out.iter_mut().find(|(q, _)| *q == p) {
            last.1 += e;
        } else {
            out.push((p, e));
        }
    };
    for p in 2u64.. {
        if p > 100_000 || BigInt::from(p) * BigInt::from(p) > n {
            break;
        }
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            push(bp, e, &mut out);
        }
    }
    // Remaining cofactor: split recursively with rho until prime.
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, 1, &mut out);
        } else {
            let d = pollard_rho(&m);
            let q = &m / &d;
            stack.push(d);
            stack.push(q);
        }
    }
    out.sort();
    out
}

/// All positive divisors of |n|, ascending.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pe = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Writes |n| = s^2 * d with d squarefree; returns (s, d) with the sign of n on d.
pub fn squarefree_part(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero());
    let mut s = BigInt::one();
    let mut d = BigInt::one();
    for (p, e) in factorize(n) {
        for _ in 0..e / 2 {
            s *= &p;
        }
        if e % 2 == 1 {
            d *= &p;
        }
    }
    if n.sign() == Sign::Minus {
        d = -d;
    }
    (s, d)
}
