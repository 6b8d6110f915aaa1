pub mod admissible;
pub mod cli;
pub mod coxeter;
pub mod diagram;
pub mod dimension;
pub mod error;
pub mod normal_form;
pub mod relations;
pub mod rep;

pub use error::{Error, Result};
