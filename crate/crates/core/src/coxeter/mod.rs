//! ADE root systems and Coxeter group elements.

pub mod graph;
pub mod roots;
pub mod weyl;
pub mod word;

pub use graph::{CartanType, CoxeterGraph, Family, NodeSet};
pub use roots::{Root, RootSystem, SignedRoot};
pub use weyl::{enumerate_parabolic, generate_group, WElement};
pub use word::{GenWord, Token};
