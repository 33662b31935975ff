//! Hopf-algebroid structure: coproduct, counit, antipode and primitives.

pub mod antipode;
pub mod axioms;
pub mod coproduct;
pub mod primitives;
pub mod tensor;

pub use axioms::{AxiomCheck, AxiomOptions, AxiomReport, TripleTerm};
pub use tensor::{TensorAcc, TensorElement, TensorTerm};
