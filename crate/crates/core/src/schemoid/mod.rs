//! Partitions, quasi-schemoids, association schemes and schemoid morphisms.

mod morphism;
mod partition;
mod qschemoid;
mod scheme;

use thiserror::Error;

use crate::fincat::FunctorError;

pub use morphism::SchemoidMorphism;
pub use partition::Partition;
pub use qschemoid::QSchemoid;
pub use scheme::{AssocScheme, SchemeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemoidError {
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("morphism {0} is in more than one block")]
    Overlap(usize),
    #[error("morphism {0} is in no block")]
    NotCovering(usize),
    #[error("block member {0} is not a morphism")]
    DanglingMorphism(usize),
    #[error("partition covers {partition} items but the category has {morphisms} morphisms")]
    PartitionSize { partition: usize, morphisms: usize },
    #[error(
        "regularity fails for (σ={sigma}, τ={tau}, μ={mu}): fiber over {f} has {size_f} pairs, over {g} has {size_g}"
    )]
    RegularityViolation { sigma: usize, tau: usize, mu: usize, f: usize, g: usize, size_f: usize, size_g: usize },
    #[error("block {sigma} is split: {m1} and {m2} land in different target blocks")]
    BlockSplit { sigma: usize, m1: usize, m2: usize },
    #[error(transparent)]
    Functor(#[from] FunctorError),
}

/// Validates `(cat, partition)` as a quasi-schemoid.
pub fn validate_schemoid(cat: crate::fincat::FinCat, partition: Partition) -> Result<QSchemoid, SchemoidError> {
    QSchemoid::new(cat, partition)
}

/// Validates a functor as a schemoid morphism `a → b`.
pub fn validate_morphism(
    functor: crate::fincat::Functor,
    a: &QSchemoid,
    b: &QSchemoid,
) -> Result<SchemoidMorphism, SchemoidError> {
    SchemoidMorphism::new(functor, a, b)
}
