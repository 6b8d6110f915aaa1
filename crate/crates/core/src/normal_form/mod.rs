//! The Brauer monoid: monomial action ρ_𝓑, normal forms and products.

pub mod context;
pub mod monoid;

pub use context::{enumerate_ax, AXGroup, DecoratedVector, EMove, OrbitContext, AX_BOUND};
pub use monoid::{e_beta_word, reflection_word, root_path, BrauerMonoid, NormalForm, NormalFormRecord};
