//! Infinite norm decompositions of operators on l2(N).
//!
//! Given a partition of the basis into equal-size blocks (a family of
//! orthogonal projections `p_i` summing to the identity), an operator `a`
//! splits into Peirce blocks `p_i a p_j`. The operator belongs to the norm
//! decomposition when its hook norms
//!
//! ```text
//! ‖ Σ_{k<i} (a_ki + a_ik) + a_ii ‖
//! ```
//!
//! tend to zero. This crate extracts blocks, computes certified bounds on
//! hook norms, decides membership when the operator carries certificates,
//! and recovers norm and positivity from finite compressions.
//!
//! ```
//! use normdecomp::constructions::minf_sample;
//! use normdecomp::constructions::MinfRule;
//! use normdecomp::decomposition::{hook, membership, MembershipVerdict};
//! use normdecomp::model::{BlockId, Partition};
//!
//! let a = minf_sample(MinfRule::Geometric { base: 0.5 }).unwrap();
//! let part = Partition::atomic();
//! let h1 = hook(&a, &part, BlockId(1), 8).unwrap();
//! assert!((h1.bound.lower - (1.0 + 5f64.sqrt()) / 4.0).abs() < 1e-12);
//!
//! let verdict = membership(&a, &part, 1e-6, 32, 64).unwrap();
//! assert!(matches!(verdict, MembershipVerdict::CertifiedIn { .. }));
//! ```

pub mod compressions;
pub mod constructions;
pub mod decomposition;
mod error;
pub mod model;
pub mod numerics;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/hooks.md")]
    mod hooks {}
    #[doc = include_str!("../../../book/src/compressions.md")]
    mod compressions {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
}
