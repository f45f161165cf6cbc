//! Brill–Noether loci on a general ν-gonal curve.
//!
//! Rank one: splitting types of the pushforward to the projective line and the
//! resulting component structure of `W^r_d`. Rank two: the components of
//! `B^{k_2}_d` among stable bundles, their dimensions and presentations, plus
//! the extension-space dimension counts behind them.

pub mod error;
pub mod ext;
pub mod numerics;
pub mod rank1;
pub mod rank2;
pub mod splitting;

pub use error::{Error, Result};
pub use numerics::{CurveParams, LineBundleProfile};
pub use rank1::{GenericElement, Rank1Component};

pub use rank2::{CaseLabel, Classification, Rank2Component};
pub use splitting::SplittingType;
