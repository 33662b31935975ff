//! The dual Steenrod algebra `A≥ = H≥[τᵢ, ξᵢ₊₁]/(τᵢ² = aτᵢ₊₁ + η_R(σ⁻¹)ξᵢ₊₁)`.

pub mod algebra;
pub mod basis;
pub mod element;
pub mod monomial;
pub mod parse;

pub use algebra::{
    default_algebra, AntipodeRecursion, Config, DualSteenrod, RawTerm, Relation, XiExponent,
};
pub use element::{Element, Term, TermAcc};
pub use monomial::GenMonomial;
