//! Exact computation with branched covers of the projective line:
//! ramification invariants, specialization of covers along rational
//! functions T0 in Q(U), Riemann Existence tuple search with rigidity
//! counts, and the class-combinatorial obstructions that rule out
//! parametric Galois extensions for specific groups.
//!
//! Everything is computed over Q with arbitrary-precision rationals;
//! there is no floating point anywhere. Fibers over the algebraic
//! closure are represented by squarefree-factor data, so counts of
//! distinct geometric points are exact degree sums.

pub mod qarith;

pub mod permgroup;

pub mod classtable;

pub mod covers;

pub mod specialize;

pub mod ret;

pub mod obstruction;

pub mod twistcore;

pub mod jsonio;
