//! Riemann Existence Theorem combinatorics: existence and counting of
//! generating tuples (g_1, ..., g_r) with g_i in prescribed conjugacy
//! classes, product one, and <g_1, ..., g_r> = G, counted modulo
//! componentwise conjugation (Nielsen classes). A count of 1 is
//! rigidity.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::permgroup::{FiniteGroup, Perm};

pub const DEFAULT_SEARCH_CAP: u128 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RetError {
    #[error("search space of {0} tuples exceeds the cap {1}")]
    SearchCapExceeded(u128, u128),
    #[error("tuples need at least two classes")]
    TooFewClasses,
    #[error("identity classes are not allowed")]
    TrivialClass,
    #[error("no class with id {0}")]
    NoSuchClass(usize),
}

#[derive(Debug, Clone)]
pub struct TupleSearchResult {
    pub found: Option<Vec<Perm>>,
    pub nielsen_count: Option<usize>,
    /// visited search nodes, for diagnostics
    pub pruned_nodes: usize,
}

fn check_classes(group: &FiniteGroup, classes: &[usize]) -> Result<(), RetError> {
    if classes.len() < 2 {
        return Err(RetError::TooFewClasses);
    }
    let table = group.conjugacy_classes();
    for &c in classes {
        if c >= table.len() {
            return Err(RetError::NoSuchClass(c));
        }
        if table[c].element_order == 1 {
            return Err(RetError::TrivialClass);
        }
    }
    Ok(())
}

fn search_space(group: &FiniteGroup, classes: &[usize], full_first: bool) -> u128 {
    let table = group.conjugacy_classes();
    let mut size: u128 = 1;
    for (i, &c) in classes[..classes.len() - 1].iter().enumerate() {
        if i == 0 && !full_first {
            continue;
        }
        size = size.saturating_mul(table[c].size as u128);
    }
    size
}

/// Verifies the three defining conditions of a tuple independently.
pub fn verify_tuple(group: &FiniteGroup, classes: &[usize], tuple: &[Perm]) -> bool {
    if tuple.len() != classes.len() {
        return false;
    }
    let mut prod = Perm::identity(group.degree());
    for g in tuple {
        prod = prod.compose(g);
    }
    if !prod.is_identity() {
        return false;
    }
    for (g, &c) in tuple.iter().zip(classes) {
        match group.class_of_perm(g) {
            Some(cid) if cid == c => {}
            _ => return false,
        }
    }
    let ids: Vec<usize> = tuple.iter().map(|g| group.id_of(g).unwrap()).collect();
    group.generates(&ids)
}

/// Existence search: depth-first with the first coordinate pinned to the
/// class representative (generation, classes and the product condition
/// are all conjugation-invariant), the last coordinate forced by the
/// product-one relation.
pub fn find_tuple(
    group: &FiniteGroup,
    classes: &[usize],
) -> Result<TupleSearchResult, RetError> {
    find_tuple_with_cap(group, classes, DEFAULT_SEARCH_CAP)
}

pub fn find_tuple_with_cap(
    group: &FiniteGroup,
    classes: &[usize],
    cap: u128,
) -> Result<TupleSearchResult, RetError> {
    check_classes(group, classes)?;
    let space = search_space(group, classes, false);
    if space > cap {
        return Err(RetError::SearchCapExceeded(space, cap));
    }
    let table = group.conjugacy_classes();
    let rep = group.id_of(&table[classes[0]].representative).unwrap();
    let mut nodes = 0usize;
    let mut stack: Vec<usize> = vec![rep];
    let found = dfs(group, classes, &mut stack, &mut nodes);
    Ok(TupleSearchResult {
        found: found.map(|ids| ids.iter().map(|&i| group.element(i).clone()).collect()),
        nielsen_count: None,
        pruned_nodes: nodes,
    })
}

fn dfs(
    group: &FiniteGroup,
    classes: &[usize],
    prefix: &mut Vec<usize>,
    nodes: &mut usize,
) -> Option<Vec<usize>> {
    *nodes += 1;
    let r = classes.len();
    if prefix.len() == r - 1 {
        // force the last entry as the inverse of the partial product
        let mut prod = prefix[0];
        for &g in &prefix[1..] {
            prod = group.mul(prod, g);
        }
        let last = group.inv(prod);
        if group.class_of_element(last) != classes[r - 1] {
            return None;
        }
        let mut tuple = prefix.clone();
        tuple.push(last);
        if group.generates(&tuple) {
            return Some(tuple);
        }
        return None;
    }
    let members = group.conjugacy_classes()[classes[prefix.len()]].members.clone();
    for g in members {
        prefix.push(g);
        if let Some(t) = dfs(group, classes, prefix, nodes) {
            prefix.pop();
            return Some(t);
        }
        prefix.pop();
    }
    None
}

/// Number of generating product-one tuples in the given classes, modulo
/// simultaneous conjugation. Full enumeration with explicit orbit
/// closure; no centralizer shortcuts.
pub fn nielsen_count(group: &FiniteGroup, classes: &[usize]) -> Result<usize, RetError> {
    nielsen_count_with_cap(group, classes, DEFAULT_SEARCH_CAP)
}

pub fn nielsen_count_with_cap(
    group: &FiniteGroup,
    classes: &[usize],
    cap: u128,
) -> Result<usize, RetError> {
    check_classes(group, classes)?;
    let space = search_space(group, classes, true);
    if space > cap {
        return Err(RetError::SearchCapExceeded(space, cap));
    }
    let table = group.conjugacy_classes();
    let r = classes.len();
    // enumerate all product-one class tuples that generate
    let mut tuples: HashSet<Vec<usize>> = HashSet::new();
    let mut prefix: Vec<usize> = Vec::with_capacity(r);
    enumerate(group, classes, &mut prefix, &mut tuples);
    let _ = table;
    // orbit count under componentwise conjugation by the generators
    let conj_maps: Vec<Vec<usize>> = group
        .generators()
        .iter()
        .map(|g| {
            (0..group.order())
                .map(|e| group.id_of(&group.element(e).conjugate_by(g)).unwrap())
                .collect()
        })
        .collect();
    let mut orbits = 0usize;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for t in &tuples {
        if seen.contains(t) {
            continue;
        }
        orbits += 1;
        let mut queue = VecDeque::from([t.clone()]);
        seen.insert(t.clone());
        while let Some(u) = queue.pop_front() {
            for cm in &conj_maps {
                let v: Vec<usize> = u.iter().map(|&e| cm[e]).collect();
                if seen.insert(v.clone()) {
                    debug_assert!(tuples.contains(&v));
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(orbits)
}

fn enumerate(
    group: &FiniteGroup,
    classes: &[usize],
    prefix: &mut Vec<usize>,
    out: &mut HashSet<Vec<usize>>,
) {
    let r = classes.len();
    if prefix.len() == r - 1 {
        let mut prod = prefix[0];
        for &g in &prefix[1..] {
            prod = group.mul(prod, g);
        }
        let last = group.inv(prod);
        if group.class_of_element(last) != classes[r - 1] {
            return;
        }
        let mut tuple = prefix.clone();
        tuple.push(last);
        if group.generates(&tuple) {
            out.insert(tuple);
        }
        return;
    }
    let members = group.conjugacy_classes()[classes[prefix.len()]].members.clone();
    for g in members {
        prefix.push(g);
        enumerate(group, classes, prefix, out);
        prefix.pop();
    }
}
