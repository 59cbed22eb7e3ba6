//! Symmetric multi-indices, symmetric multilinear maps and quadratic forms.

mod multiindex;
mod multimap;
mod quadratic;

pub use multiindex::{binomial, sym_dim, AllIndices, MultiIndex};
pub use multimap::SymMultiMap;
pub use quadratic::QuadraticForm;
