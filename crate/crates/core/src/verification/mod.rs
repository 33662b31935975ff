//! Checks of the structural statements: cofreeness, quotient freeness, the
//! reference scenarios and the acceptance suite.
//!
//! The module side (freeness of the dual algebras over each other) is not
//! checked separately; it is dual to the comodule statements checked here.

pub mod acceptance;
pub mod cofree;
pub mod family;
pub mod freeness;
pub mod scenarios;
pub mod series;

pub use acceptance::{AcceptanceOptions, Check, CriterionOutcome, CRITERIA};
pub use cofree::{CofreeReport, DegreeCheck};
pub use family::{enumerate_family, FamilyOptions, FamilyReport};
pub use freeness::random_free_pair;
pub use scenarios::{example_profiles, Scenario, ScenarioReport};
pub use series::{series_divide, DivideOutcome, PoincareSeries};
