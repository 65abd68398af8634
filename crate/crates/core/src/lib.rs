//! Finite models of binary relations and multirelations.
//!
//! A relation `X ↔ Y` is a [`Rel`]; a multirelation `X ↔ P Y` is an
//! [`MRel`], stored per source element as a sorted set of subset masks.
//! Elements of every carrier are the indices `0..n`.
//!
//! Two caps bound the exponential constructions: subset masks are `u64`
//! words over at most [`MASK_CAP`] elements, and a powerset is only
//! materialized as a carrier for bases of at most [`POW_CAP`] elements.
//! Exceeding either is an [`Error`], never a truncation.

pub mod determinise;
pub mod error;
pub mod generate;
mod json;
pub mod mrel;
pub mod peleg;
pub mod power;
pub mod rel;

pub use determinise::{closed_repr, determinise, fixpoint_class, ClosedMode, DetMode, FixFlags, FixpointReport};
pub use error::{Error, Result};
pub use generate::{count_matching, enumerate_mrel, enumerate_rel, Class, GenMode, GenSpec, Kind, Space};
pub use mrel::{ClosureMode, InnerOp, MRel, MRelConst, Preorder, PropertyFlags};
pub use peleg::{d_subrelations, kleisli_compose, kleisli_lift, odot, peleg_compose, peleg_compose_oracle, peleg_lift};
pub use power::{
    alpha, image_functor, member_rel, monad_const, power_transpose, MonadConst, PowCarrier, PowerConst, SubsetMask,
};
pub use rel::{BoolOp, Carrier, Rel, RelConst, RelFlags, ResidualSide};

/// Largest destination carrier of a multirelation (bits per subset mask).
pub const MASK_CAP: usize = 62;

/// Largest carrier whose powerset may be materialized as a carrier.
pub const POW_CAP: usize = 16;

/// Largest number of steps any single enumeration may take.
pub const ENUM_CAP: u128 = 1 << 20;
