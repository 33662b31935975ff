//! Exact computation in the `Z/2`-equivariant mod 2 dual Steenrod algebra
//! `A≥` over the positive-cone coefficients `H≥ = F₂[a, σ⁻¹]`, together with
//! its quotients by profile-function ideals.
//!
//! ```
//! use z2steenrod::steenrod::default_algebra;
//!
//! let alg = default_algebra();
//! let x = alg.parse_element("t0^2").unwrap();
//! assert_eq!(x.to_string(), "a*t1 + s*x1 + a*t0*x1");
//! ```

pub mod classical;
pub mod coefficients;
pub mod error;
pub mod grading;
pub mod hopf;
pub mod linalg;
pub mod profiles;
pub mod steenrod;
pub mod verification;
pub mod window;

pub use coefficients::{CoeffMonomial, CoeffPoly, UnderlyingCoeff};
pub use error::{Error, Result};
pub use grading::RODegree;
pub use hopf::{TensorElement, TensorTerm};
pub use profiles::{ExtNat, Profile};
pub use steenrod::{default_algebra, DualSteenrod, Element, GenMonomial, Term};
pub use window::Window;
