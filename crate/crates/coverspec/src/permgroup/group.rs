//! Finite permutation groups stored fully enumerated. Fine at desk
//! scale; avoids stabilizer-chain machinery entirely.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use super::perm::Perm;
use super::GroupError;

pub const DEFAULT_ORDER_CAP: usize = 1_000_000;
pub const DEFAULT_RANK_CAP: usize = 10_000;

/// How the group was built; drives class naming downstream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Sym(usize),
    Alt(usize),
    Dihedral(usize),
    Quaternion8,
    CyclicProduct(Vec<usize>),
    Psl2(u64),
    Custom,
}

/// Conjugacy class of a group, with its full member list.
#[derive(Clone, Debug)]
pub struct GroupClass {
    pub id: usize,
    pub representative: Perm,
    pub size: usize,
    pub element_order: usize,
    /// element ids, ascending
    pub members: Vec<usize>,
}

pub(crate) struct ClassData {
    pub classes: Vec<GroupClass>,
    /// element id -> class id
    pub class_of: Vec<usize>,
}

pub struct FiniteGroup {
    degree: usize,
    kind: GroupKind,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    classes: OnceLock<ClassData>,
}

impl FiniteGroup {
    /// Breadth-first closure of the generators; deterministic element
    /// ordering (identity first, then discovery order).
    pub fn generate(degree: usize, generators: Vec<Perm>) -> Result<Self, GroupError> {
        Self::generate_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn generate_with_cap(
        degree: usize,
        generators: Vec<Perm>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::InvalidPermutation);
            }
        }
        let mut elements = vec![Perm::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0usize);
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            let e = elements[i].clone();
            for g in &generators {
                let h = e.compose(g);
                if !index.contains_key(&h) {
                    if elements.len() >= cap {
                        return Err(GroupError::OrderCapExceeded(cap));
                    }
                    index.insert(h.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        Ok(FiniteGroup {
            degree,
            kind: GroupKind::Custom,
            generators,
            elements,
            index,
            classes: OnceLock::new(),
        })
    }

    pub(crate) fn with_kind(mut self, kind: GroupKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &Perm {
        &self.elements[id]
    }

    pub fn id_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    /// Product by element ids.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose(&self.elements[b]);
        self.index[&p]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut raw: Vec<Vec<usize>> = Vec::new();
            for start in 0..n {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let cid = raw.len();
                let mut members = vec![start];
                class_of[start] = cid;
                let mut queue = VecDeque::from([start]);
                while let Some(x) = queue.pop_front() {
                    for g in &self.generators {
                        let y = self.elements[x].conjugate_by(g);
                        let yi = self.index[&y];
                        if class_of[yi] == usize::MAX {
                            class_of[yi] = cid;
                            members.push(yi);
                            queue.push_back(yi);
                        }
                    }
                }
                members.sort_unstable();
                raw.push(members);
            }
            // sort by (element_order, size, minimal representative)
            let mut order_cache: HashMap<usize, usize> = HashMap::new();
            let mut keyed: Vec<(usize, usize, Perm, Vec<usize>)> = raw
                .into_iter()
                .map(|members| {
                    let rep = members
                        .iter()
                        .map(|&i| self.elements[i].clone())
                        .min()
                        .unwrap();
                    let o = *order_cache
                        .entry(members[0])
                        .or_insert_with(|| self.elements[members[0]].order());
                    (o, members.len(), rep, members)
                })
                .collect();
            keyed.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
            let mut classes = Vec::with_capacity(keyed.len());
            let mut class_of = vec![0usize; n];
            for (id, (element_order, size, representative, members)) in keyed.into_iter().enumerate()
            {
                for &m in &members {
                    class_of[m] = id;
                }
                classes.push(GroupClass {
                    id,
                    representative,
                    size,
                    element_order,
                    members,
                });
            }
            ClassData { classes, class_of }
        })
    }

    /// Conjugacy classes, identity class first, deterministically sorted.
    pub fn conjugacy_classes(&self) -> &[GroupClass] {
        &self.class_data().classes
    }

    pub fn class_of_element(&self, id: usize) -> usize {
        self.class_data().class_of[id]
    }

    pub fn class_of_perm(&self, p: &Perm) -> Option<usize> {
        self.id_of(p).map(|i| self.class_of_element(i))
    }

    /// Closure of a set of element ids inside this group.
    pub fn subgroup_closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut set = HashSet::new();
        let identity = self.index[&Perm::identity(self.degree)];
        set.insert(identity);
        let mut queue: VecDeque<usize> = VecDeque::from([identity]);
        for &s in seed {
            if set.insert(s) {
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &s in seed {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let mut v: Vec<usize> = set.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// Does the given set of element ids generate the whole group?
    pub fn generates(&self, seed: &[usize]) -> bool {
        self.subgroup_closure(seed).len() == self.order()
    }

    /// Cyclic subgroup generated by one element, as sorted element ids.
    pub fn cyclic_subgroup(&self, e: usize) -> Vec<usize> {
        let mut v = Vec::new();
        let identity = self.index[&Perm::identity(self.degree)];
        let mut x = identity;
        loop {
            v.push(x);
            x = self.mul(x, e);
            if x == identity {
                break;
            }
        }
        v.sort_unstable();
        v
    }

    /// All maximal cyclic subgroups as sorted element-id sets, each with
    /// a generator.
    pub fn maximal_cyclic_subgroups(&self) -> Vec<(Vec<usize>, usize)> {
        let n = self.order();
        // distinct cyclic subgroups, remembering one generator each
        let mut subgroups: HashMap<Vec<usize>, usize> = HashMap::new();
        for e in 0..n {
            let s = self.cyclic_subgroup(e);
            // e generates the whole subgroup by construction
            subgroups.entry(s).or_insert(e);
        }
        let subs: Vec<(Vec<usize>, usize)> = {
            let mut v: Vec<_> = subgroups.into_iter().collect();
            v.sort();
            v
        };
        let is_subset = |a: &[usize], b: &[usize]| -> bool {
            if a.len() >= b.len() {
                return false;
            }
            let mut it = b.iter();
            a.iter().all(|x| it.any(|y| y == x))
        };
        subs.iter()
            .filter(|(s, _)| {
                !subs
                    .iter()
                    .any(|(t, _)| t.len() > s.len() && is_subset(s, t))
            })
            .cloned()
            .collect()
    }

    /// Conjugacy classes of maximal cyclic subgroups: the count nu and,
    /// per class, the conjugacy class id of a generator.
    pub fn maximal_cyclic_classes(&self) -> (usize, Vec<usize>) {
        let maximal = self.maximal_cyclic_subgroups();
        // group the maximal subgroups by conjugacy
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut reps = Vec::new();
        for (s, gen) in &maximal {
            if seen.contains(s) {
                continue;
            }
            // orbit of s under conjugation by group generators
            let mut queue = VecDeque::from([s.clone()]);
            seen.insert(s.clone());
            while let Some(t) = queue.pop_front() {
                for g in &self.generators {
                    let mut u: Vec<usize> = t
                        .iter()
                        .map(|&e| self.index[&self.elements[e].conjugate_by(g)])
                        .collect();
                    u.sort_unstable();
                    if seen.insert(u.clone()) {
                        queue.push_back(u);
                    }
                }
            }
            reps.push(self.class_of_element(*gen));
        }
        (reps.len(), reps)
    }

    /// Minimal size of a generating set, searched k = 0, 1, 2, ... with
    /// the first generator ranging over class representatives only.
    pub fn rank(&self) -> Result<usize, GroupError> {
        self.rank_with_cap(DEFAULT_RANK_CAP)
    }

    pub fn rank_with_cap(&self, cap: usize) -> Result<usize, GroupError> {
        if self.order() > cap {
            return Err(GroupError::RankSearchCapExceeded(cap));
        }
        if self.order() == 1 {
            return Ok(0);
        }
        // rank 1: cyclic
        if (0..self.order()).any(|e| self.elements[e].order() == self.order()) {
            return Ok(1);
        }
        for k in 2.. {
            if self.some_k_subset_generates(k) {
                return Ok(k);
            }
        }
        unreachable!()
    }

    fn some_k_subset_generates(&self, k: usize) -> bool {
        let reps: Vec<usize> = self
            .conjugacy_classes()
            .iter()
            .filter(|c| c.element_order > 1)
            .map(|c| self.id_of(&c.representative).unwrap())
            .collect();
        for &first in &reps {
            let mut chosen = vec![first];
            if self.extend_generating(&mut chosen, k) {
                return true;
            }
        }
        false
    }

    fn extend_generating(&self, chosen: &mut Vec<usize>, k: usize) -> bool {
        let closure = self.subgroup_closure(chosen);
        if closure.len() == self.order() {
            // generated early with fewer than k elements still counts
            return true;
        }
        if chosen.len() == k {
            return false;
        }
        let in_closure: HashSet<usize> = closure.into_iter().collect();
        let start = *chosen.last().unwrap() + 1;
        for e in start..self.order() {
            if in_closure.contains(&e) {
                continue;
            }
            chosen.push(e);
            if self.extend_generating(chosen, k) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// The commutator subgroup as sorted element ids: the subgroup
    /// generated by the conjugation-closure of all generator commutators
    /// (normal since the generating set is conjugation-invariant).
    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let mut seed: HashSet<usize> = HashSet::new();
        for g in &self.generators {
            for h in &self.generators {
                let c = g.compose(h).compose(&g.inverse()).compose(&h.inverse());
                seed.insert(self.index[&c]);
            }
        }
        let mut conj_closed: HashSet<usize> = seed.clone();
        let mut queue: VecDeque<usize> = seed.into_iter().collect();
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = self.index[&self.elements[x].conjugate_by(g)];
                if conj_closed.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let seeds: Vec<usize> = conj_closed.into_iter().collect();
        self.subgroup_closure(&seeds)
    }

    /// Quotient by a normal subgroup given as sorted element ids: the
    /// regular action of G/N on left cosets.
    pub fn quotient(&self, normal: &[usize]) -> Result<FiniteGroup, GroupError> {
        if normal.is_empty() || !self.order().is_multiple_of(normal.len()) {
            return Err(GroupError::NotNormal);
        }
        let mut coset_of: Vec<Option<usize>> = vec![None; self.order()];
        let mut coset_reps: Vec<usize> = Vec::new();
        for x in 0..self.order() {
            if coset_of[x].is_some() {
                continue;
            }
            let cid = coset_reps.len();
            for &n in normal {
                let y = self.mul(x, n);
                if let Some(other) = coset_of[y] {
                    if other != cid {
                        return Err(GroupError::NotNormal);
                    }
                }
                coset_of[y] = Some(cid);
            }
            coset_reps.push(x);
        }
        let num = coset_reps.len();
        let mut gens = Vec::new();
        for g in &self.generators {
            let gi = self.index[g];
            let images: Vec<u16> = coset_reps
                .iter()
                .map(|&rep| coset_of[self.mul(gi, rep)].unwrap() as u16)
                .collect();
            gens.push(Perm::new(images)?);
        }
        FiniteGroup::generate(num, gens)
    }
}
