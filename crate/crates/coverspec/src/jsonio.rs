//! External file formats: group specifications, polynomials and rational
//! functions as coefficient-string arrays, ramification data, catalogs,
//! and JSON renderings of reports and verdicts.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classtable::{ClassTable, TableError};
use crate::covers::{CoverError, RamificationData};
use crate::obstruction::{Catalog, CatalogEntry, Outcome, Verdict};
use crate::permgroup::{
    alt, cyclic_product, dihedral, psl2, quaternion8, sym, FiniteGroup, GroupError, Perm,
};
use crate::qarith::{
    ratq_from_str, ratq_to_string, FiberLocus, PolyQ, QarithError, RatFunc, P1Q,
};
use crate::specialize::SpecializationReport;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Qarith(#[from] QarithError),
    #[error("{0}")]
    Invalid(String),
}

/// Group construction specification.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Sym { n: usize },
    Alt { n: usize },
    Psl2 { p: u64 },
    Dihedral { n: usize },
    Quaternion8,
    CyclicProduct { ds: Vec<usize> },
    Perm {
        degree: usize,
        /// one generator = a list of cycles, each a list of points
        generators: Vec<Vec<Vec<u16>>>,
    },
}

pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup, IoError> {
    Ok(match spec {
        GroupSpec::Sym { n } => sym(*n)?,
        GroupSpec::Alt { n } => alt(*n)?,
        GroupSpec::Psl2 { p } => psl2(*p)?,
        GroupSpec::Dihedral { n } => dihedral(*n)?,
        GroupSpec::Quaternion8 => quaternion8()?,
        GroupSpec::CyclicProduct { ds } => cyclic_product(ds)?,
        GroupSpec::Perm { degree, generators } => {
            let gens: Result<Vec<Perm>, GroupError> = generators
                .iter()
                .map(|cycles| Perm::from_cycles(*degree, cycles))
                .collect();
            FiniteGroup::generate(*degree, gens?)?
        }
    })
}

/// Polynomial as coefficient strings, lowest degree first.
pub fn poly_from_strings(coeffs: &[String]) -> Result<PolyQ, IoError> {
    let cs: Result<Vec<_>, _> = coeffs.iter().map(|s| ratq_from_str(s)).collect();
    Ok(PolyQ::new(cs?))
}

pub fn poly_to_strings(p: &PolyQ) -> Vec<String> {
    p.coeffs().iter().map(ratq_to_string).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatFuncSpec {
    pub a: Vec<String>,
    pub b: Vec<String>,
}

pub fn build_ratfunc(spec: &RatFuncSpec) -> Result<RatFunc, IoError> {
    let a = poly_from_strings(&spec.a)?;
    let b = poly_from_strings(&spec.b)?;
    Ok(crate::qarith::reduce_ratfunc(a, b)?)
}

/// Ramification data file: group, class names, optional branch points.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverSpecFile {
    pub group: GroupSpec,
    pub classes: Vec<String>,
    #[serde(default)]
    pub branch_points: Option<Vec<String>>,
}

pub struct BuiltCover {
    pub group: FiniteGroup,
    pub table: Arc<ClassTable>,
    pub data: RamificationData,
}

pub fn build_cover(file: &CoverSpecFile) -> Result<BuiltCover, IoError> {
    let group = build_group(&file.group)?;
    let table = Arc::new(ClassTable::from_group(&group));
    let names: Vec<&str> = file.classes.iter().map(|s| s.as_str()).collect();
    let tuple = table.tuple_by_names(&names)?;
    let points = match &file.branch_points {
        None => None,
        Some(ps) => {
            let parsed: Result<Vec<P1Q>, _> = ps.iter().map(|s| P1Q::parse(s)).collect();
            Some(parsed?)
        }
    };
    let data = RamificationData::new(table.clone(), group.order(), tuple, points)?;
    Ok(BuiltCover { group, table, data })
}

/// Catalog file: entries over one group.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntryFile {
    pub group: GroupSpec,
    pub classes: Vec<String>,
    #[serde(default)]
    pub source: String,
}

pub fn build_catalog(entries: &[CatalogEntryFile]) -> Result<Catalog, IoError> {
    let first = entries
        .first()
        .ok_or_else(|| IoError::Invalid("catalog is empty".into()))?;
    for e in entries {
        if e.group != first.group {
            return Err(IoError::Invalid(
                "catalog entries must share one group".into(),
            ));
        }
    }
    let group = build_group(&first.group)?;
    let table = Arc::new(ClassTable::from_group(&group));
    let mut built = Vec::new();
    for e in entries {
        let names: Vec<&str> = e.classes.iter().map(|s| s.as_str()).collect();
        built.push(CatalogEntry {
            classes: table.tuple_by_names(&names)?,
            class_names: e.classes.clone(),
            source: e.source.clone(),
        });
    }
    Ok(Catalog::new(table, built))
}

// ---- JSON renderings of computed objects ----

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LocusJson {
    Rational { value: String },
    Factor { coeffs: Vec<String> },
    Infinity,
}

fn locus_json(locus: &FiberLocus) -> LocusJson {
    match locus {
        FiberLocus::Rational(r) => LocusJson::Rational {
            value: ratq_to_string(r),
        },
        FiberLocus::Irrational(f) => LocusJson::Factor {
            coeffs: poly_to_strings(f),
        },
        FiberLocus::Infinity => LocusJson::Infinity,
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FiberEntryJson {
    pub multiplicity: usize,
    pub degree: usize,
    pub locus: LocusJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BranchJson {
    pub branch_point: String,
    pub p: usize,
    pub q: usize,
    pub s: usize,
    pub fiber: Vec<FiberEntryJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurvivorJson {
    pub branch_index: usize,
    pub locus: LocusJson,
    pub degree: usize,
    pub alpha: usize,
    pub inertia_class: String,
    pub inertia_order: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundsJson {
    pub upper_rn: usize,
    pub lower_b1: String,
    pub lower_b1_strict: String,
    pub lower_b2: i64,
    pub genus_upper: i64,
    pub genus_lower: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportJson {
    pub degree: usize,
    pub r_t0: usize,
    pub identities_ok: bool,
    pub inequality2_ok: bool,
    pub per_branch: Vec<BranchJson>,
    pub survivors: Vec<SurvivorJson>,
    pub bounds: BoundsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub specialized_genus: Option<i64>,
}

pub fn report_json(
    report: &SpecializationReport,
    table: &ClassTable,
    genus: Option<i64>,
) -> ReportJson {
    ReportJson {
        degree: report.n,
        r_t0: report.r_t0,
        identities_ok: report.identities_ok,
        inequality2_ok: report.inequality2_ok,
        per_branch: report
            .per_branch
            .iter()
            .map(|b| BranchJson {
                branch_point: b.branch_point.to_string(),
                p: b.p,
                q: b.q,
                s: b.s,
                fiber: b
                    .profile
                    .entries
                    .iter()
                    .map(|e| FiberEntryJson {
                        multiplicity: e.multiplicity,
                        degree: e.degree,
                        locus: locus_json(&e.locus),
                    })
                    .collect(),
            })
            .collect(),
        survivors: report
            .survivors
            .iter()
            .map(|s| SurvivorJson {
                branch_index: s.branch_index,
                locus: locus_json(&s.locus),
                degree: s.degree,
                alpha: s.alpha,
                inertia_class: table.name_of(s.inertia_class).to_string(),
                inertia_order: s.inertia_order,
            })
            .collect(),
        bounds: BoundsJson {
            upper_rn: report.bounds.upper_rn,
            lower_b1: ratq_to_string(&report.bounds.lower_b1),
            lower_b1_strict: ratq_to_string(&report.bounds.lower_b1_strict),
            lower_b2: report.bounds.lower_b2,
            genus_upper: report.bounds.genus_upper,
            genus_lower: ratq_to_string(&report.bounds.genus_lower),
        },
        specialized_genus: genus,
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerdictJson {
    pub method: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    pub clique: Vec<String>,
    pub trace: Vec<String>,
    pub notes: Vec<String>,
}

pub fn verdict_json(v: &Verdict) -> VerdictJson {
    let (outcome, reason) = match &v.outcome {
        Outcome::Obstructed => ("obstructed".to_string(), None),
        Outcome::NotObstructed => ("not_obstructed".to_string(), None),
        Outcome::Unknown(r) => ("unknown".to_string(), Some(r.clone())),
    };
    VerdictJson {
        method: v.method.to_string(),
        outcome,
        reason,
        nu: v.nu,
        rho: v.rho,
        rank: v.rank,
        clique: v.clique.clone(),
        trace: v.trace.clone(),
        notes: v.notes.clone(),
    }
}
