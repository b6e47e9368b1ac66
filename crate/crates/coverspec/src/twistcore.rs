//! Finite core of the twisting construction: two homomorphisms from a
//! free group into G twist into a permutation action of the free group
//! on G by x -> u(g) * x * v(g)^{-1}, and the two homomorphisms are
//! conjugate in G exactly when the twisted action has a common fixed
//! point. Everything here is brute-force verifiable.

use thiserror::Error;

use crate::permgroup::{FiniteGroup, Perm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("homomorphism ranks differ: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("homomorphisms target different groups")]
    TargetMismatch,
    #[error("image {0} is not an element id of the target group")]
    BadImage(usize),
}

/// Homomorphism from a free group of rank `images.len()` into a target
/// group, recorded by the element ids of the generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpec {
    target_order: usize,
    pub images: Vec<usize>,
}

impl HomSpec {
    pub fn new(target: &FiniteGroup, images: Vec<usize>) -> Result<Self, TwistError> {
        for &i in &images {
            if i >= target.order() {
                return Err(TwistError::BadImage(i));
            }
        }
        Ok(HomSpec {
            target_order: target.order(),
            images,
        })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }
}

/// Per-generator permutations of the element set of G under
/// x -> u(g) * x * v(g)^{-1}.
#[derive(Debug, Clone)]
pub struct TwistedAction {
    pub rank: usize,
    pub tables: Vec<Perm>,
}

impl TwistedAction {
    /// Common fixed points of all generator permutations, as element ids.
    pub fn fixed_points(&self, group: &FiniteGroup) -> Vec<usize> {
        (0..group.order())
            .filter(|&x| {
                self.tables
                    .iter()
                    .all(|t| t.apply(x as u16) as usize == x)
            })
            .collect()
    }

    /// Orbits of the generated action on the element set.
    pub fn orbit_sizes(&self, group: &FiniteGroup) -> Vec<usize> {
        let n = group.order();
        let mut seen = vec![false; n];
        let mut sizes = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut size = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                for t in &self.tables {
                    for y in [t.apply(x as u16) as usize, t.inverse().apply(x as u16) as usize] {
                        if !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable();
        sizes
    }
}

fn check_pair(u: &HomSpec, v: &HomSpec) -> Result<(), TwistError> {
    if u.target_order != v.target_order {
        return Err(TwistError::TargetMismatch);
    }
    if u.rank() != v.rank() {
        return Err(TwistError::RankMismatch(u.rank(), v.rank()));
    }
    Ok(())
}

/// The twisted representation of u by v on the element set of G.
pub fn twisted_action(
    group: &FiniteGroup,
    u: &HomSpec,
    v: &HomSpec,
) -> Result<TwistedAction, TwistError> {
    check_pair(u, v)?;
    if group.order() != u.target_order {
        return Err(TwistError::TargetMismatch);
    }
    let mut tables = Vec::with_capacity(u.rank());
    for k in 0..u.rank() {
        let uk = u.images[k];
        let vk_inv = group.inv(v.images[k]);
        let images: Vec<u16> = (0..group.order())
            .map(|x| group.mul(group.mul(uk, x), vk_inv) as u16)
            .collect();
        tables.push(Perm::new(images).expect("twist maps are bijections"));
    }
    Ok(TwistedAction {
        rank: u.rank(),
        tables,
    })
}

/// Witness x0 with u(g) = x0 v(g) x0^{-1} for all generators, i.e. a
/// common fixed point of the twisted action; None when u and v are not
/// conjugate. Rank 0 returns the identity.
pub fn conjugacy_via_fixed_point(
    group: &FiniteGroup,
    u: &HomSpec,
    v: &HomSpec,
) -> Result<Option<usize>, TwistError> {
    let action = twisted_action(group, u, v)?;
    Ok(action.fixed_points(group).first().copied())
}

/// Independent oracle: direct scan for a simultaneous conjugator.
pub fn conjugator_by_scan(group: &FiniteGroup, u: &HomSpec, v: &HomSpec) -> Option<usize> {
    (0..group.order()).find(|&x| {
        let xp = group.element(x);
        u.images.iter().zip(&v.images).all(|(&uk, &vk)| {
            let conj = xp.compose(group.element(vk)).compose(&xp.inverse());
            group.id_of(&conj) == Some(uk)
        })
    })
}
