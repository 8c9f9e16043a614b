use super::universe::{enumerate_morphisms, homotopic, MorphismUniverse};
use super::{elementary_homotopy, HomotopyChain};
use crate::schemoid::{QSchemoid, SchemoidMorphism};
use crate::search::SearchCaps;
use crate::Error;

/// A witness that `a` is contractible: the constant morphism at `object` is
/// joined to the identity by `chain`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub object: usize,
    pub chain: HomotopyChain,
}

/// Looks for an object `x0` with `const_{x0} ≃ 1`, trying objects in index
/// order. A direct elementary homotopy is tried first; the endomorphism
/// universe is only enumerated when that fails.
pub fn is_contractible(a: &QSchemoid, caps: &SearchCaps) -> Result<Option<Contraction>, Error> {
    let id = SchemoidMorphism::identity(a);
    let mut universe: Option<MorphismUniverse> = None;
    for x in 0..a.cat().n_objects() {
        let k = SchemoidMorphism::constant(a, a, x);
        if let Some(h) = elementary_homotopy(a, a, &id, &k)? {
            return Ok(Some(Contraction { object: x, chain: HomotopyChain::single(h) }));
        }
        if let Some(h) = elementary_homotopy(a, a, &k, &id)? {
            return Ok(Some(Contraction { object: x, chain: HomotopyChain::single(h).reversed() }));
        }
        if universe.is_none() {
            universe = Some(enumerate_morphisms(a, a, caps)?);
        }
        if let Some(chain) = homotopic(a, a, &id, &k, universe.as_ref().unwrap())? {
            return Ok(Some(Contraction { object: x, chain }));
        }
    }
    Ok(None)
}

/// The first `(σ, τ)` in index order where `τ` holds a non-identity morphism
/// and `p^σ_{στ} ≠ 0` or `p^σ_{τσ} ≠ 0`.
///
/// When the identities lie in one block and there is no such pair, no
/// endomorphism identifying two distinct morphisms is homotopic to the
/// identity.
pub fn collapse_obstruction(q: &QSchemoid) -> Option<(usize, usize)> {
    let has_non_identity = |t: usize| q.partition().block(t).iter().any(|&m| !q.cat().is_identity(m));
    (0..q.n_blocks())
        .flat_map(|s| (0..q.n_blocks()).map(move |t| (s, t)))
        .find(|&(s, t)| has_non_identity(t) && (q.p(s, t, s) != 0 || q.p(t, s, s) != 0))
}
