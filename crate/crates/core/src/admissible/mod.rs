//! Admissible root sets, the σ action and the orbit catalog.

pub mod catalog;
pub mod sets;
pub mod table;

pub use catalog::{compare_with_reference, enumerate_catalog, highest_element, CatalogData, Orbit, OrbitCatalog, OrbitSummary};
pub use sets::{admissible_closure, sigma_gen, sigma_word, AdmissibleSet, MutOrthSet};
pub use table::{reference_rows, ReferenceRow};
