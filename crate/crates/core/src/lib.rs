//! Exact zero weight dimensions for adjoint simple groups.
//!
//! [`multiplicity`] computes weight multiplicities by Freudenthal's formula,
//! [`branching`] gives independent counts and closed forms through
//! Gelfand–Tsetlin branching, [`chambers`] finds the chambers of the dominant
//! cone, [`lattice`] builds the descent lattice `Γ`, and [`piecewise`] fits
//! and certifies one polynomial per chamber and coset.
//!
//! ```
//! use zeroweight::{multiplicity, RootSystem, Weight};
//!
//! let a3 = RootSystem::new("A3".parse()?);
//! let lam = a3.from_epsilon_ints(&[2, 1, -1, -2])?;
//! assert_eq!(multiplicity::zero_weight_dim(&a3, &lam)?, 7);
//! # Ok::<(), zeroweight::Error>(())
//! ```

pub mod branching;
pub mod chambers;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod multiplicity;
pub mod piecewise;
pub mod poly;
pub mod rational;
pub mod rootsys;
pub mod verify;

pub use error::{Error, Result};
pub use rootsys::{Family, RootSystem, SimpleType, Weight, WeylElement};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/multiplicities.md")]
    mod multiplicities {}
    #[doc = include_str!("../../../book/src/branching.md")]
    mod branching {}
    #[doc = include_str!("../../../book/src/chambers.md")]
    mod chambers {}
    #[doc = include_str!("../../../book/src/lattice.md")]
    mod lattice {}
    #[doc = include_str!("../../../book/src/piecewise.md")]
    mod piecewise {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
