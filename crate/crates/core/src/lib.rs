//! Exact intersection theory on Grassmannians and projective bundles over
//! them, aimed at enumerative counts of lines and conics on hypersurfaces.
//!
//! A count is the degree of the top Chern class of a bundle whose rank equals
//! the dimension of a compact parameter space. The parameter spaces here are
//! Grassmannians (lines, complete-intersection lines) and the projective
//! bundle of plane conics over `Gr(3,5)`. Positive-dimensional families are
//! weighted through Segre classes.
//!
//! All arithmetic is over arbitrary-precision integers.

pub mod chern;
pub mod cli;

pub mod error;
pub mod littlewood;
pub mod partition;
pub mod pipelines;
pub mod report;

pub mod poly;
pub mod projbundle;

pub mod ring;
pub mod schubert;
pub mod symmetric;

pub use chern::{segre_from_chern, ChernVector};
pub use error::{Error, Result};
pub use partition::Partition;
pub use pipelines::NormalBundleType;
pub use report::CountReport;

pub use projbundle::{ProjBundleElement, ProjBundleRing};

pub use ring::{GradedRing, WeightedPolyRing};
pub use schubert::{ChowClass, GrassmannianRing};
pub use symmetric::{reduce_to_elementary, SymmetricPoly};
