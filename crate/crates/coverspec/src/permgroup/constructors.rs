//! Constructors for the group families used throughout: symmetric and
//! alternating groups, dihedral groups, the quaternion group in its
//! regular action, direct products of cyclic groups, and PSL2(F_p)
//! acting on the projective line.

use super::group::{FiniteGroup, GroupKind};
use super::perm::Perm;
use super::GroupError;

pub fn sym(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidPermutation);
    }
    if n == 1 {
        return Ok(FiniteGroup::generate(1, vec![Perm::identity(1)])?.with_kind(GroupKind::Sym(1)));
    }
    let t = Perm::from_cycles(n, &[vec![0, 1]])?;
    let c = Perm::from_cycles(n, &[(0..n as u16).collect()])?;
    Ok(FiniteGroup::generate(n, vec![t, c])?.with_kind(GroupKind::Sym(n)))
}

pub fn alt(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 3 {
        let g = FiniteGroup::generate(n.max(1), vec![Perm::identity(n.max(1))])?;
        return Ok(g.with_kind(GroupKind::Alt(n)));
    }
    let a = Perm::from_cycles(n, &[vec![0, 1, 2]])?;
    let b = if n % 2 == 1 {
        Perm::from_cycles(n, &[(0..n as u16).collect()])?
    } else {
        Perm::from_cycles(n, &[(1..n as u16).collect()])?
    };
    Ok(FiniteGroup::generate(n, vec![a, b])?.with_kind(GroupKind::Alt(n)))
}

/// Dihedral group of order 2n, n >= 3, in its natural degree-n action.
pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 3 {
        return Err(GroupError::InvalidPermutation);
    }
    let r = Perm::from_cycles(n, &[(0..n as u16).collect()])?;
    let s = Perm::new((0..n as u16).map(|i| (n as u16 - i) % n as u16).collect())?;
    Ok(FiniteGroup::generate(n, vec![r, s])?.with_kind(GroupKind::Dihedral(n)))
}

/// The quaternion group of order 8 in its right-regular action on
/// {1, -1, i, -i, j, -j, k, -k}, generated by right multiplication by
/// i and by j.
pub fn quaternion8() -> Result<FiniteGroup, GroupError> {
    // indices: 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
    // x*i: 1,-1,i,-i,j,-j,k,-k -> i,-i,-1,1,-k,k,j,-j
    let right_i = Perm::new(vec![2, 3, 1, 0, 7, 6, 4, 5])?;
    // x*j: 1,-1,i,-i,j,-j,k,-k -> j,-j,k,-k,-1,1,-i,i
    let right_j = Perm::new(vec![4, 5, 6, 7, 1, 0, 3, 2])?;
    let g = FiniteGroup::generate(8, vec![right_i, right_j])?;
    Ok(g.with_kind(GroupKind::Quaternion8))
}

/// Direct product of cyclic groups Z/d1 x ... x Z/ds acting on disjoint
/// cycles.
pub fn cyclic_product(ds: &[usize]) -> Result<FiniteGroup, GroupError> {
    if ds.is_empty() || ds.contains(&0) {
        return Err(GroupError::InvalidPermutation);
    }
    let degree: usize = ds.iter().sum();
    let mut gens = Vec::new();
    let mut offset = 0u16;
    for &d in ds {
        let cycle: Vec<u16> = (0..d as u16).map(|i| offset + i).collect();
        gens.push(Perm::from_cycles(degree, &[cycle])?);
        offset += d as u16;
    }
    Ok(FiniteGroup::generate(degree, gens)?.with_kind(GroupKind::CyclicProduct(ds.to_vec())))
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// PSL2(F_p) acting on the projective line over F_p: degree p + 1 and
/// order p(p-1)(p+1)/2. Points 0..p-1 are the affine line, point p is
/// infinity. Generated by z -> z+1 and z -> -1/z.
pub fn psl2(p: u64) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if p == 2 {
        return Err(GroupError::NotPrime(p));
    }
    let degree = (p + 1) as usize;
    let inf = p as u16;
    // z -> z + 1
    let t = Perm::new(
        (0..=p)
            .map(|z| if z == p { inf } else { ((z + 1) % p) as u16 })
            .collect(),
    )?;
    // z -> -1/z
    let modinv = |z: u64| -> u64 {
        // p prime, z != 0
        let mut result = 1u64;
        let mut base = z % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        result
    };
    let s = Perm::new(
        (0..=p)
            .map(|z| {
                if z == p {
                    0u16
                } else if z == 0 {
                    inf
                } else {
                    ((p - modinv(z)) % p) as u16
                }
            })
            .collect(),
    )?;
    let g = FiniteGroup::generate(degree, vec![t, s])?;
    let expect = (p * (p - 1) * (p + 1) / 2) as usize;
    debug_assert_eq!(g.order(), expect);
    Ok(g.with_kind(GroupKind::Psl2(p)))
}

/// Class of a given cycle type in sym(n) or alt(n). Split classes of the
/// alternating group need an explicit A/B tag; the "A" half is the one
/// containing the lexicographically least element.
pub fn cycle_type_class(
    group: &FiniteGroup,
    parts: &[usize],
    split_tag: Option<char>,
) -> Result<usize, GroupError> {
    let n = match group.kind() {
        GroupKind::Sym(n) | GroupKind::Alt(n) => *n,
        _ => return Err(GroupError::NoSuchClass(format!("{parts:?}"))),
    };
    let mut parts: Vec<usize> = parts.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    if parts.iter().sum::<usize>() != n {
        return Err(GroupError::NoSuchClass(format!("{parts:?}")));
    }
    let matching: Vec<usize> = group
        .conjugacy_classes()
        .iter()
        .filter(|c| c.representative.cycle_type() == parts)
        .map(|c| c.id)
        .collect();
    match (matching.len(), split_tag) {
        (0, _) => Err(GroupError::NoSuchClass(format!("{parts:?}"))),
        (1, _) => Ok(matching[0]),
        (2, None) => Err(GroupError::SplitClassAmbiguous(format!("{parts:?}"))),
        (2, Some(tag)) => {
            // "A" = the class containing the least element overall
            let classes = group.conjugacy_classes();
            let least = |cid: usize| {
                classes[cid]
                    .members
                    .iter()
                    .map(|&m| group.element(m).clone())
                    .min()
                    .unwrap()
            };
            let (a, b) = if least(matching[0]) < least(matching[1]) {
                (matching[0], matching[1])
            } else {
                (matching[1], matching[0])
            };
            match tag {
                'A' | 'a' => Ok(a),
                'B' | 'b' => Ok(b),
                _ => Err(GroupError::SplitClassAmbiguous(format!("{parts:?}"))),
            }
        }
        _ => Err(GroupError::NoSuchClass(format!("{parts:?}"))),
    }
}
