//! Profile functions and the quotients `A≥ / I(h,k)`.

pub mod extnat;
pub mod free;
pub mod hopf_ideal;
pub mod ideal;
pub mod minimize;
pub mod named;
pub mod profile;

pub use extnat::ExtNat;
pub use free::{is_finite_quotient, QuotientBasis};
pub use hopf_ideal::{HopfCondition, HopfDirectReport, HopfFailure, NumericViolation};
pub use ideal::{DegreeSpace, GeneratorKind, IdealGenerator, IdealSpan};
pub use minimize::Minimized;
pub use named::{embed_classical, named_profile, named_profile_with, Convention, Family};
pub use profile::{Profile, Sequence};
