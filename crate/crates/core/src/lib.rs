//! Conjugacy-class products in finite permutation groups.
//!
//! The crate enumerates a permutation group, partitions it into conjugacy
//! classes, decomposes products of class sums, and checks structural
//! statements about subgroups generated by classes whose product is a union
//! of few classes.
//!
//! Permutations act on the right: `compose(p, q)` applies `p` first, and
//! conjugation is `x^g = g⁻¹xg`. Points are 0-based internally and 1-based
//! in cycle notation.
//!
//! ```
//! use std::sync::Arc;
//! use classprod::{corpus::{construct_named, Family}, ClassTable};
//!
//! let d10 = construct_named(&Family::Dihedral(5)).unwrap();
//! let table = ClassTable::new(Arc::new(d10));
//! assert_eq!(table.sizes(), vec![1, 5, 2, 2]);
//! ```

pub mod arith;
pub mod class_algebra;
pub mod corpus;
pub mod group;
pub mod lab;
pub mod perm;

pub use class_algebra::{ClassId, ClassTable, ConjugacyClass, Decomposition, IDENTITY_CLASS};
pub use group::{
    default_max_order, ElementaryAbelian, FiniteGroup, GroupError, GroupFingerprint,
    DEFAULT_MAX_ORDER, MAX_ORDER_ENV,
};
pub use lab::{
    Check, HypothesisKind, HypothesisMatch, Lab, LabOptions, Status, Theorem, TheoremError,
    TheoremReport,
};
pub use perm::{PermError, Permutation};
