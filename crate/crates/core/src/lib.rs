//! Crystal bases of finite-type quantum groups at `q = 0` and the
//! combinatorial objects built from them: the Cartan braiding, right ends,
//! the higher-rank graph of a colour tuple and the shift-operator model of
//! the limiting Soibelman representation.

pub mod atlas;
pub mod braiding;
pub mod crystal;
pub mod error;
pub mod hrgraph;
pub mod par;
pub mod report;
pub mod rootdata;
pub mod soibelman;
pub mod toeplitz;

pub use atlas::Atlas;
pub use error::{Error, Result};
pub use rootdata::{CartanType, RootDatum, Weight};
