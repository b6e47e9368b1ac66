//! Shared helpers for the integration suites: seeded random covers and
//! rational functions at desk scale.

use std::sync::Arc;

use rand::Rng;

use coverspec::classtable::ClassTable;
use coverspec::covers::{rh_invariants, RamificationData};
use coverspec::permgroup::cyclic_product;
use coverspec::qarith::{ratq, reduce_ratfunc, PolyQ, RatFunc, RatQ, P1Q};

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Prime-power factorization of n as a block list, e.g. 840 -> [8,3,5,7].
pub fn prime_power_blocks(n: usize) -> Vec<usize> {
    let mut n = n;
    let mut blocks = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                q *= p;
                n /= p;
            }
            blocks.push(q);
        }
        p += 1;
    }
    if n > 1 {
        blocks.push(n);
    }
    if blocks.is_empty() {
        blocks.push(1);
    }
    blocks
}

/// Random hypothetical cover over a cyclic group Z/lcm(e): r branch
/// points with indices e_i, rational branch points, valid genus. The
/// cyclic group is built in factored form (one block per prime power)
/// to keep the permutation degree small.
pub fn random_cover<R: Rng>(rng: &mut R, max_r: usize, max_e: usize) -> Option<RamificationData> {
    let r = rng.gen_range(2..=max_r);
    let e: Vec<usize> = (0..r).map(|_| rng.gen_range(2..=max_e)).collect();
    let l = e.iter().copied().fold(1, lcm);
    let blocks = prime_power_blocks(l);
    let group = cyclic_product(&blocks).ok()?;
    let table = Arc::new(ClassTable::from_group(&group));
    // the product of the block generators has order exactly l
    let gen = group
        .generators()
        .iter()
        .fold(coverspec::permgroup::Perm::identity(group.degree()), |acc, g| acc.compose(g));
    let ids: Vec<usize> = e
        .iter()
        .map(|&ei| {
            let p = gen.pow(l / ei);
            group.class_of_perm(&p).unwrap()
        })
        .collect();
    let tuple = table.tuple(&ids).ok()?;
    let mut points: Vec<P1Q> = Vec::new();
    let mut guard = 0;
    while points.len() < r {
        guard += 1;
        if guard > 200 {
            return None;
        }
        let p = random_point(rng);
        if !points.contains(&p) {
            points.push(p);
        }
    }
    let data = RamificationData::new(table, l, tuple, Some(points)).ok()?;
    rh_invariants(&data).ok()?;
    Some(data)
}

pub fn random_point<R: Rng>(rng: &mut R) -> P1Q {
    if rng.gen_range(0..8) == 0 {
        P1Q::Infinity
    } else {
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=4);
        P1Q::Finite(ratq(num, den))
    }
}

/// Random non-constant rational function of degree <= max_n.
pub fn random_ratfunc<R: Rng>(rng: &mut R, max_n: usize) -> RatFunc {
    loop {
        let n = rng.gen_range(1..=max_n);
        let da = rng.gen_range(0..=n);
        let db = if da == n { rng.gen_range(0..=n) } else { n };
        let poly = |rng: &mut R, d: usize| -> PolyQ {
            let mut coeffs: Vec<RatQ> = (0..=d)
                .map(|_| RatQ::from_integer(rng.gen_range(-5i64..=5).into()))
                .collect();
            if coeffs[d] == RatQ::from_integer(0.into()) {
                coeffs[d] = RatQ::from_integer(1.into());
            }
            PolyQ::new(coeffs)
        };
        let a = poly(rng, da);
        let b = poly(rng, db);
        if let Ok(f) = reduce_ratfunc(a, b) {
            if f.degree() <= max_n {
                return f;
            }
        }
    }
}

/// Random degree-1 map.
pub fn random_moebius<R: Rng>(rng: &mut R) -> RatFunc {
    loop {
        let a = rng.gen_range(-4i64..=4);
        let b = rng.gen_range(-4i64..=4);
        let c = rng.gen_range(-4i64..=4);
        let d = rng.gen_range(-4i64..=4);
        if let Ok(m) = coverspec::qarith::moebius(a, b, c, d) {
            return m;
        }
    }
}
