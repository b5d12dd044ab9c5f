//! Exact arithmetic for cyclotomic numbers `(a,b)_e` and Jacobi sums `J_e(i,j)`
//! over finite fields `F_q` with `q = p^r ≡ 1 (mod e)`.
//!
//! Everything is computed symbolically: Jacobi sums live in `Z[ζ_e]` reduced
//! modulo the cyclotomic polynomial `Φ_e`, never in floating point. Each
//! quantity can be obtained by three independent routes (direct counting /
//! character sums, conversion through the other family, and symmetry-class
//! expansion from canonical representatives), which makes every path
//! cross-checkable against the others.
//!
//! The crate is `no_std` (alloc required); IO, serialization and the CLI live
//! in the companion `cyclotomy-cli` crate.

#![cfg_attr(not(test), no_std)]
// `n % d == 0` reads better than `is_multiple_of` in divisor-heavy code.
#![allow(clippy::manual_is_multiple_of)]

extern crate alloc;

pub mod cycint;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod jacobi;
pub mod orbits;

pub use cycint::{CycInt, CycPoly, CycRing};
pub use cyclotomic::{
    cyclotomic_direct, cyclotomic_from_jacobi, cyclotomic_via_reps, cyclotomic_via_reps_stats,
    CharacterSetup, CycNumMatrix, ExpansionStats,
};
pub use error::Error;
pub use field::{build_index_table, find_generator, FieldElement, FieldSpec, IndexTable};
pub use jacobi::{
    jacobi_all_direct, jacobi_direct, jacobi_from_cyclotomic, jacobi_via_reps,
    jacobi_via_reps_stats, JacobiMatrix,
};
pub use orbits::{
    class_count, cyclotomic_orbit, enumerate_classes, jacobi_orbit, published_class_count,
    select_case, Family, OrbitClass, RuleKind, SymmetryCase,
};

// Re-exported so downstream crates can name coefficient types without a
// separate num-bigint dependency.
pub use num_bigint::BigInt;

pub type Result<T> = core::result::Result<T, Error>;
