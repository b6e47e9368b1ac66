//! Finite permutation groups from explicit generators: element
//! enumeration, conjugacy classes, maximal cyclic subgroup counting,
//! minimal generating sets, and the standard group families.

mod constructors;
mod group;
mod perm;

pub use constructors::{
    alt, cycle_type_class, cyclic_product, dihedral, psl2, quaternion8, sym,
};
pub use group::{FiniteGroup, GroupClass, GroupKind, DEFAULT_ORDER_CAP, DEFAULT_RANK_CAP};
pub use perm::{cycle_type_name, parse_cycle_type, Perm};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("images do not form a permutation")]
    InvalidPermutation,
    #[error("group order exceeds the cap of {0}")]
    OrderCapExceeded(usize),
    #[error("group order exceeds the rank-search cap of {0}")]
    RankSearchCapExceeded(usize),
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("no class with cycle type {0}")]
    NoSuchClass(String),
    #[error("cycle type {0} splits; a disambiguation tag A/B is required")]
    SplitClassAmbiguous(String),
    #[error("subset is not a normal subgroup")]
    NotNormal,
    #[error("bad cycle type expression `{0}`")]
    BadCycleType(String),
}
