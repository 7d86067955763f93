//! Exact combinatorics of multiple zeta values: compositions, the binary
//! word encoding, shuffle and stuffle products, finite double-shuffle
//! relation matrices, and the Zagier dimension sequence.

mod composition;
mod dims;
mod formal;
mod product;
mod word;

pub use composition::{Composition, admissible_compositions};
pub use dims::{DimensionTableEntry,derived_zagier_series, dimension_table, double_shuffle_relations, zagier_d};
pub use formal::FormalSum;
pub use product::{shuffle, shuffle_compositions, stuffle};
pub use word::{BinaryWord, Letter, composition_of_word, word_of_composition};
