//! Abstract conjugacy-class data: element orders, power maps, Z-closures
//! C^Z, the "very different" relation # and the tuple pre-order.
//!
//! A table is either computed from an enumerated permutation group or
//! declared from a data file (Atlas-style snippets for groups far beyond
//! enumeration, such as the Monster). Declared closures may be partial;
//! queries then answer with a three-valued verdict instead of guessing.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::permgroup::{cycle_type_name, FiniteGroup, GroupKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("inconsistent declaration: {0}")]
    InconsistentDeclaration(String),
    #[error("class tuple belongs to a different table")]
    TableMismatch,
    #[error("no class named {0}")]
    NoSuchClass(String),
    #[error("identity class entries are not allowed in tuples")]
    IdentityInTuple,
    #[error("undecidable with declared data: {0}")]
    Unknown(String),
}

/// Three-valued answer for queries on possibly partial tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tri {
    True,
    False,
    Unknown(String),
}

impl Tri {
    pub fn is_true(&self) -> bool {
        matches!(self, Tri::True)
    }
    pub fn is_false(&self) -> bool {
        matches!(self, Tri::False)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub id: usize,
    pub name: String,
    pub element_order: usize,
    /// number of elements, when known (computed tables)
    pub size: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableSource {
    Computed(String),
    Declared(String),
}

/// Conjugacy-class table. For computed tables the power map and the
/// closures are exact; declared tables carry exactly what the data file
/// asserts, with per-class completeness flags.
#[derive(Debug, Clone)]
pub struct ClassTable {
    pub classes: Vec<ClassInfo>,
    /// power_map[c][k] = class of g^k for g in class c, k modulo the
    /// element order; empty for declared tables.
    pub power_map: Vec<Vec<usize>>,
    pub z_closure: Vec<BTreeSet<usize>>,
    pub closure_complete: Vec<bool>,
    /// values m for which the class list provably contains every class
    /// of the group whose element order is a multiple of m; computed
    /// tables are complete for every m
    pub order_multiples_complete: Vec<usize>,
    pub source: TableSource,
    signature: u64,
}

/// Ordered tuple of nontrivial class ids over one table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTuple {
    pub ids: Vec<usize>,
    table_sig: u64,
}

impl ClassTuple {
    pub fn len(&self) -> usize {
        self.ids.len()
    }
    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}

/// Result of a tuple pre-order query, with the covering witness j -> i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prec {
    Holds { witness: Vec<usize> },
    Fails { entry: usize },
    Unknown(String),
}

impl Prec {
    pub fn holds(&self) -> bool {
        matches!(self, Prec::Holds { .. })
    }
}

fn signature_of(classes: &[ClassInfo]) -> u64 {
    let mut h = DefaultHasher::new();
    for c in classes {
        c.name.hash(&mut h);
        c.element_order.hash(&mut h);
    }
    h.finish()
}

impl ClassTable {
    /// Full power map and Z-closures by exponentiation of class
    /// representatives of an enumerated group.
    pub fn from_group(group: &FiniteGroup) -> ClassTable {
        let gclasses = group.conjugacy_classes();
        let names = class_names(group);
        let classes: Vec<ClassInfo> = gclasses
            .iter()
            .map(|c| ClassInfo {
                id: c.id,
                name: names[c.id].clone(),
                element_order: c.element_order,
                size: Some(c.size),
            })
            .collect();
        let mut power_map = Vec::with_capacity(classes.len());
        let mut z_closure = Vec::with_capacity(classes.len());
        for c in gclasses {
            let mut powers = Vec::with_capacity(c.element_order);
            let mut closure = BTreeSet::new();
            let mut x = crate::permgroup::Perm::identity(group.degree());
            for _ in 0..c.element_order {
                let cid = group.class_of_perm(&x).unwrap();
                powers.push(cid);
                closure.insert(cid);
                x = x.compose(&c.representative);
            }
            power_map.push(powers);
            z_closure.push(closure);
        }
        let signature = signature_of(&classes);
        ClassTable {
            closure_complete: vec![true; classes.len()],
            classes,
            power_map,
            z_closure,
            order_multiples_complete: vec![],
            source: TableSource::Computed(format!("{:?}", group.kind())),
            signature,
        }
    }

    /// Table from declared data; consistency-checked but allowed to be
    /// partial (closures flagged incomplete stay usable for membership,
    /// not for exhaustion).
    pub fn from_declaration(decl: &DeclaredTable) -> Result<ClassTable, TableError> {
        let mut by_name: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, c) in decl.classes.iter().enumerate() {
            if by_name.insert(&c.name, i).is_some() {
                return Err(TableError::InconsistentDeclaration(format!(
                    "duplicate class name {}",
                    c.name
                )));
            }
            if c.order == 0 {
                return Err(TableError::InconsistentDeclaration(format!(
                    "class {} has order 0",
                    c.name
                )));
            }
        }
        let identity = decl
            .classes
            .iter()
            .position(|c| c.order == 1)
            .ok_or_else(|| {
                TableError::InconsistentDeclaration("no identity class (order 1)".into())
            })?;
        let classes: Vec<ClassInfo> = decl
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| ClassInfo {
                id: i,
                name: c.name.clone(),
                element_order: c.order as usize,
                size: None,
            })
            .collect();
        let mut z_closure = Vec::with_capacity(classes.len());
        let mut complete = Vec::with_capacity(classes.len());
        for (i, c) in decl.classes.iter().enumerate() {
            let mut set = BTreeSet::new();
            for member in &c.z_closure {
                let &j = by_name
                    .get(member.as_str())
                    .ok_or_else(|| TableError::NoSuchClass(member.clone()))?;
                // every power has order dividing the order of the class
                if c.order % decl.classes[j].order != 0 {
                    return Err(TableError::InconsistentDeclaration(format!(
                        "{} lists {} in its closure but {} does not divide {}",
                        c.name, member, decl.classes[j].order, c.order
                    )));
                }
                set.insert(j);
            }
            if !set.contains(&i) {
                return Err(TableError::InconsistentDeclaration(format!(
                    "closure of {} does not contain itself",
                    c.name
                )));
            }
            if !set.contains(&identity) {
                return Err(TableError::InconsistentDeclaration(format!(
                    "closure of {} does not contain the identity class",
                    c.name
                )));
            }
            // a cyclic group of order n has elements of every divisor
            // order, so a closure declared complete must witness each
            // divisor; partial closures may omit them
            if c.complete {
                let n = c.order;
                for m in 1..=n {
                    if n % m != 0 {
                        continue;
                    }
                    if !set.iter().any(|&j| decl.classes[j].order == m) {
                        return Err(TableError::InconsistentDeclaration(format!(
                            "complete closure of {} has no class of order {} (a divisor of {})",
                            c.name, m, n
                        )));
                    }
                }
            }
            z_closure.push(set);
            complete.push(c.complete);
        }
        let signature = signature_of(&classes);
        Ok(ClassTable {
            classes,
            power_map: vec![],
            z_closure,
            closure_complete: complete,
            order_multiples_complete: decl
                .order_multiples_complete
                .iter()
                .map(|&m| m as usize)
                .collect(),
            source: TableSource::Declared(decl.group.clone()),
            signature,
        })
    }

    /// Classes whose element order is a multiple of m, together with a
    /// flag telling whether the list is provably exhaustive for the
    /// underlying group.
    pub fn classes_with_order_multiple_of(&self, m: usize) -> (Vec<usize>, bool) {
        let hits: Vec<usize> = (0..self.len())
            .filter(|&c| self.order_of(c).is_multiple_of(m))
            .collect();
        let complete = matches!(self.source, TableSource::Computed(_))
            || self.order_multiples_complete.contains(&m);
        (hits, complete)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn identity_class(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.element_order == 1)
            .expect("identity class present")
    }

    pub fn class_by_name(&self, name: &str) -> Result<usize, TableError> {
        self.classes
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| TableError::NoSuchClass(name.to_string()))
    }

    pub fn order_of(&self, class: usize) -> usize {
        self.classes[class].element_order
    }

    pub fn name_of(&self, class: usize) -> &str {
        &self.classes[class].name
    }

    /// Class of g^k for g in the given class; computed tables only.
    pub fn power_class(&self, class: usize, k: usize) -> Option<usize> {
        let pm = self.power_map.get(class)?;
        if pm.is_empty() {
            return None;
        }
        Some(pm[k % pm.len()])
    }

    /// Is `member` in the Z-closure of `class`? Declared tables answer
    /// Unknown when absence could be an artifact of a partial closure.
    pub fn closure_contains(&self, class: usize, member: usize) -> Tri {
        if self.z_closure[class].contains(&member) {
            return Tri::True;
        }
        // membership requires order divisibility regardless of data
        if !self.order_of(class).is_multiple_of(self.order_of(member)) {
            return Tri::False;
        }
        if self.closure_complete[class] {
            Tri::False
        } else {
            Tri::Unknown(format!(
                "closure of {} is declared incomplete",
                self.name_of(class)
            ))
        }
    }

    /// Builds a tuple over this table; identity entries are rejected.
    pub fn tuple(&self, ids: &[usize]) -> Result<ClassTuple, TableError> {
        for &id in ids {
            if id >= self.classes.len() {
                return Err(TableError::NoSuchClass(format!("#{id}")));
            }
            if self.classes[id].element_order == 1 {
                return Err(TableError::IdentityInTuple);
            }
        }
        Ok(ClassTuple {
            ids: ids.to_vec(),
            table_sig: self.signature,
        })
    }

    pub fn tuple_by_names(&self, names: &[&str]) -> Result<ClassTuple, TableError> {
        let ids: Result<Vec<usize>, _> = names.iter().map(|n| self.class_by_name(n)).collect();
        self.tuple(&ids?)
    }

    pub fn owns(&self, tuple: &ClassTuple) -> bool {
        tuple.table_sig == self.signature
    }

    /// Are two nontrivial classes very different, i.e. is there no class
    /// C0 with both inside C0^Z?
    pub fn very_different(&self, c1: usize, c2: usize) -> Tri {
        assert!(self.order_of(c1) > 1 && self.order_of(c2) > 1);
        let mut unknowns = Vec::new();
        for c0 in 0..self.len() {
            match (
                self.closure_contains(c0, c1),
                self.closure_contains(c0, c2),
            ) {
                (Tri::True, Tri::True) => return Tri::False,
                (Tri::False, _) | (_, Tri::False) => {}
                _ => unknowns.push(self.name_of(c0).to_string()),
            }
        }
        if unknowns.is_empty() {
            Tri::True
        } else {
            Tri::Unknown(format!(
                "could not rule out common covering class(es): {}",
                unknowns.join(", ")
            ))
        }
    }

    /// Tuple pre-order: Cf precedes Cl iff every entry of Cl lies in the
    /// Z-closure of some entry of Cf. The witness maps positions of Cl
    /// to positions of Cf.
    pub fn tuple_prec(&self, cf: &ClassTuple, cl: &ClassTuple) -> Result<Prec, TableError> {
        if !self.owns(cf) || !self.owns(cl) {
            return Err(TableError::TableMismatch);
        }
        let mut witness = Vec::with_capacity(cl.ids.len());
        for (j, &clj) in cl.ids.iter().enumerate() {
            let mut found = None;
            let mut maybe = false;
            for (i, &cfi) in cf.ids.iter().enumerate() {
                match self.closure_contains(cfi, clj) {
                    Tri::True => {
                        found = Some(i);
                        break;
                    }
                    Tri::Unknown(_) => maybe = true,
                    Tri::False => {}
                }
            }
            match found {
                Some(i) => witness.push(i),
                None if maybe => {
                    return Ok(Prec::Unknown(format!(
                        "entry {} ({}) cannot be decided with declared closures",
                        j,
                        self.name_of(clj)
                    )))
                }
                None => return Ok(Prec::Fails { entry: j }),
            }
        }
        Ok(Prec::Holds { witness })
    }

    /// Slot-bijective variant of the pre-order: additionally requires the
    /// covering witness to use pairwise distinct entries of Cf (a perfect
    /// matching when the tuples have equal length). This is the matching
    /// used when each target entry is paired with its own source branch
    /// point.
    pub fn tuple_prec_bijective(
        &self,
        cf: &ClassTuple,
        cl: &ClassTuple,
    ) -> Result<Prec, TableError> {
        if !self.owns(cf) || !self.owns(cl) {
            return Err(TableError::TableMismatch);
        }
        let n = cl.ids.len();
        let m = cf.ids.len();
        let mut yes = vec![vec![false; m]; n];
        let mut possible = vec![vec![false; m]; n];
        let mut any_unknown = false;
        for j in 0..n {
            for i in 0..m {
                match self.closure_contains(cf.ids[i], cl.ids[j]) {
                    Tri::True => {
                        yes[j][i] = true;
                        possible[j][i] = true;
                    }
                    Tri::Unknown(_) => {
                        possible[j][i] = true;
                        any_unknown = true;
                    }
                    Tri::False => {}
                }
            }
        }
        if let Some(witness) = bipartite_matching(&yes) {
            return Ok(Prec::Holds { witness });
        }
        if !any_unknown || bipartite_matching(&possible).is_none() {
            // even optimistic closures admit no injective covering
            return Ok(Prec::Fails { entry: 0 });
        }
        Ok(Prec::Unknown(
            "injective covering undecidable with declared closures".into(),
        ))
    }
}

/// Maximum bipartite matching by augmenting paths; returns a full
/// assignment row -> column if one exists.
fn bipartite_matching(adj: &[Vec<bool>]) -> Option<Vec<usize>> {
    let rows = adj.len();
    let cols = adj.first().map_or(0, |r| r.len());
    let mut col_match: Vec<Option<usize>> = vec![None; cols];
    fn try_assign(
        r: usize,
        adj: &[Vec<bool>],
        seen: &mut [bool],
        col_match: &mut [Option<usize>],
    ) -> bool {
        for c in 0..adj[r].len() {
            if adj[r][c] && !seen[c] {
                seen[c] = true;
                if col_match[c].is_none() || try_assign(col_match[c].unwrap(), adj, seen, col_match)
                {
                    col_match[c] = Some(r);
                    return true;
                }
            }
        }
        false
    }
    for r in 0..rows {
        let mut seen = vec![false; cols];
        if !try_assign(r, adj, &mut seen, &mut col_match) {
            return None;
        }
    }
    let mut row_match = vec![usize::MAX; rows];
    for (c, r) in col_match.iter().enumerate() {
        if let Some(r) = r {
            row_match[*r] = c;
        }
    }
    Some(row_match)
}

/// Deterministic class names: cycle-type strings for symmetric and
/// alternating groups (with A/B suffixes on split classes), Atlas-style
/// order-plus-letter names otherwise.
fn class_names(group: &FiniteGroup) -> Vec<String> {
    let classes = group.conjugacy_classes();
    match group.kind() {
        GroupKind::Sym(_) | GroupKind::Alt(_) => {
            let mut names: Vec<String> = classes
                .iter()
                .map(|c| cycle_type_name(&c.representative.cycle_type()))
                .collect();
            // split classes share a cycle type; tag by least member
            for i in 0..names.len() {
                let dup: Vec<usize> = (0..names.len()).filter(|&j| names[j] == names[i]).collect();
                if dup.len() == 2 {
                    let least = |cid: usize| {
                        classes[cid]
                            .members
                            .iter()
                            .map(|&m| group.element(m).clone())
                            .min()
                            .unwrap()
                    };
                    let (a, b) = if least(dup[0]) < least(dup[1]) {
                        (dup[0], dup[1])
                    } else {
                        (dup[1], dup[0])
                    };
                    names[a].push('A');
                    names[b].push('B');
                }
            }
            names
        }
        _ => {
            let mut names = Vec::with_capacity(classes.len());
            let mut counters: BTreeMap<usize, usize> = BTreeMap::new();
            for c in classes {
                let n = counters.entry(c.element_order).or_insert(0);
                names.push(format!("{}{}", c.element_order, letters(*n)));
                *n += 1;
            }
            names
        }
    }
}

/// Bijective base-26 letters: A..Z, AA, AB, ...
fn letters(mut n: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push((b'A' + (n % 26) as u8) as char);
        n /= 26;
        if n == 0 {
            break;
        }
        n -= 1;
    }
    s.iter().rev().collect()
}

/// Serde form of a declared table file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeclaredTable {
    pub group: String,
    #[serde(default)]
    pub source: String,
    /// values m for which the listed classes are ALL classes of the
    /// group with element order a multiple of m
    #[serde(default)]
    pub order_multiples_complete: Vec<u64>,
    pub classes: Vec<DeclaredClass>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeclaredClass {
    pub name: String,
    pub order: u64,
    pub z_closure: Vec<String>,
    #[serde(default)]
    pub complete: bool,
}
