//! Finite quasi-schemoids: small categories with a regular partition of
//! their morphisms, the strong homotopy relation between schemoid morphisms,
//! and the group `haut` of self-homotopy equivalences.
//!
//! Every object is built from dense integer indices, and every search visits
//! candidates in increasing index order, so results are reproducible.

pub mod aschemoid;
pub mod cli;
pub mod constructors;
pub mod fincat;
pub mod haut;
pub mod homotopy;
pub mod io;
pub mod schemoid;
pub mod search;

use thiserror::Error;

/// Any error the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Category(#[from] fincat::CategoryError),
    #[error(transparent)]
    Group(#[from] fincat::GroupError),
    #[error(transparent)]
    Functor(#[from] fincat::FunctorError),
    #[error(transparent)]
    Schemoid(#[from] schemoid::SchemoidError),
    #[error(transparent)]
    Scheme(#[from] schemoid::SchemeError),
    #[error(transparent)]
    Search(#[from] search::SearchError),
    #[error(transparent)]
    Homotopy(#[from] homotopy::HomotopyError),
    #[error(transparent)]
    ASchemoid(#[from] aschemoid::ASchemoidError),
}
