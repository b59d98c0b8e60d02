//! Exact lattice-polytope and toric geometry for Batyrev–Borisov dual
//! nef-partitions, the topology of double covers branched along them, and
//! the differential systems governing their periods.
//!
//! All arithmetic is over arbitrary-precision integers and rationals.
//!
//! ```
//! use nefmirror::lattice::LatticePolytope;
//! use nefmirror::nefpart::build_nef_partition;
//! use nefmirror::invariants::verify_mirror_duality;
//!
//! let delta = LatticePolytope::from_i64(&[&[2, -1], &[-1, 2], &[-1, -1]]);
//! let np = build_nef_partition(&delta, &[vec![0], vec![1], vec![2]])?;
//! let report = verify_mirror_duality(&np)?;
//! assert!(report.ok);
//! assert_eq!(report.invariants.chi_y, 9.into());
//! # Ok::<(), nefmirror::Error>(())
//! ```

pub mod arith;
pub mod catalog;
pub mod error;
pub mod invariants;
pub mod io;
pub mod lattice;
pub mod nefpart;
pub mod periods;
pub mod toric;

pub use error::{Error, Result};

// The guide's code blocks run as doc-tests of this crate.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polytopes.md")]
    mod polytopes {}
    #[doc = include_str!("../../../book/src/fans.md")]
    mod fans {}
    #[doc = include_str!("../../../book/src/bundles.md")]
    mod bundles {}
    #[doc = include_str!("../../../book/src/nef-partitions.md")]
    mod nef_partitions {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/periods.md")]
    mod periods {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
