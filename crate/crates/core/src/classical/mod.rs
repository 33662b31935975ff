//! The classical mod 2 dual Steenrod algebra and the comparison maps.

pub mod element;
pub mod maps;
pub mod parse;

pub use element::{
    classical_coproduct, laurent_coproduct, ClassicalElement, ClassicalMonomial, ClassicalTensor,
    LaurentClassicalElement, LaurentMonomial,
};
pub use maps::{
    classical_quotient_check, deformation_map, deformation_map_with, deformation_tensor,
    restriction_map, restriction_tensor, ClassicalQuotientReport, TauImage,
};
