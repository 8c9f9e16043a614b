//! Elementary homotopies, the relation `≃`, contractibility, the thin-case
//! criterion and the 2-categorical operations on homotopy chains.

mod chain;
mod contract;
mod elementary;
mod thin;
mod universe;

use thiserror::Error;

pub use chain::{horizontal_compose, horizontal_compose_swapped, vertical_compose, ChainStep, HomotopyChain};
pub use contract::{collapse_obstruction, is_contractible, Contraction};
pub(crate) use elementary::{check_endpoints, search_diagonal};
pub use elementary::{elementary_homotopy, Homotopy};
pub use thin::thin_homotopy_criterion;
pub use universe::{enumerate_morphisms, homotopic, homotopy_classes, HomotopyClasses, MorphismUniverse};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error("morphisms do not share the given source and target")]
    SourceTargetMismatch,
    #[error("morphism is not in the enumerated universe")]
    UniverseMismatch,
    #[error("chains do not meet: the first ends where the second does not start")]
    EndpointMismatch,
    #[error("2-cells are not composable: boundaries do not match")]
    BoundaryMismatch,
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("invalid homotopy certificate: {0}")]
    InvalidCertificate(String),
}
