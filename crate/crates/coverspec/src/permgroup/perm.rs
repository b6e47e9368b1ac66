//! Permutations on {0, ..., degree-1} in image form.

use std::fmt;

use super::GroupError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!(degree <= u16::MAX as usize, "degree exceeds u16 points");
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    /// Validates that the images form a bijection.
    pub fn new(images: Vec<u16>) -> Result<Perm, GroupError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let i = i as usize;
            if i >= images.len() || seen[i] {
                return Err(GroupError::InvalidPermutation);
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Permutation of the given degree from disjoint-support cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u16>]) -> Result<Perm, GroupError> {
        if degree > u16::MAX as usize {
            return Err(GroupError::InvalidPermutation);
        }
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if p as usize >= degree || q as usize >= degree {
                    return Err(GroupError::InvalidPermutation);
                }
                images[p as usize] = q;
            }
        }
        Perm::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: u16) -> u16 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u16 == j)
    }

    /// self after other: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Perm { images }
    }

    /// g * self * g^{-1}.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut n = 1;
        while !p.is_identity() {
            p = p.compose(self);
            n += 1;
        }
        n
    }

    pub fn pow(&self, k: usize) -> Perm {
        let mut acc = Perm::identity(self.degree());
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// Cycle lengths sorted descending (including fixed points).
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type().iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }

    pub fn cycles(&self) -> Vec<Vec<u16>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u16);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Renders a cycle type as "[5^1,1^2]": parts descending with
/// multiplicities.
pub fn cycle_type_name(parts: &[usize]) -> String {
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for &p in parts {
        if let Some(last) = runs.last_mut() {
            if last.0 == p {
                last.1 += 1;
                continue;
            }
        }
        runs.push((p, 1));
    }
    let body: Vec<String> = runs.iter().map(|(p, m)| format!("{p}^{m}")).collect();
    format!("[{}]", body.join(","))
}

/// Parses "[5^1,1^2]" (also accepts bare "[5,1,1]") into parts sorted
/// descending.
pub fn parse_cycle_type(s: &str) -> Result<Vec<usize>, GroupError> {
    let bad = || GroupError::BadCycleType(s.to_string());
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(bad)?;
    let mut parts = Vec::new();
    for piece in inner.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(bad());
        }
        match piece.split_once('^') {
            Some((p, m)) => {
                let p: usize = p.trim().parse().map_err(|_| bad())?;
                let m: usize = m.trim().parse().map_err(|_| bad())?;
                if p == 0 || m == 0 {
                    return Err(bad());
                }
                parts.extend(std::iter::repeat_n(p, m));
            }
            None => {
                let p: usize = piece.parse().map_err(|_| bad())?;
                if p == 0 {
                    return Err(bad());
                }
                parts.push(p);
            }
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(parts)
}
