//! Finite categories, functors, groups and groupoids.

mod category;
mod functor;
mod group;
mod transform;

pub use category::{CategoryError, FinCat, RawCategory};
pub use functor::{projections, Functor, FunctorError};
#[cfg(test)]
pub(crate) use group::permutations;
pub use group::{FinGroup, FinGroupoid, GroupError};
pub use transform::{cat_strong_homotopic, natural_transformation, natural_transformation_exists};
