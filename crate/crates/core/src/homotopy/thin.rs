use super::elementary::check_endpoints;
use super::HomotopyError;
use crate::constructors::StildeSchemoid;
use crate::schemoid::SchemoidMorphism;

/// Decides whether an elementary homotopy `φ ⇒ ψ` exists between morphisms
/// `S̃(G) → S̃(H)` without searching.
///
/// In a thin target the only candidate filler at `i` is `(ψ(i), φ(i))`, which
/// exists iff `t(ψ(i)) = t(φ(i))`. The diagonal of the square at `(j, i)` is
/// then `(ψ(j), φ(i))`, in block `ψ(j)⁻¹φ(i)`. So a homotopy exists iff the
/// targets agree and `ψ(j)⁻¹φ(i) = ψ(l)⁻¹φ(k)` whenever `j⁻¹i = l⁻¹k`.
pub fn thin_homotopy_criterion(
    src: &StildeSchemoid,
    tgt: &StildeSchemoid,
    phi: &SchemoidMorphism,
    psi: &SchemoidMorphism,
) -> Result<bool, HomotopyError> {
    let (a, b) = (src.schemoid(), tgt.schemoid());
    check_endpoints(a, b, phi)?;
    check_endpoints(a, b, psi)?;
    let h = tgt.groupoid();
    let hc = h.category();
    let n = a.cat().n_objects();
    if (0..n).any(|i| hc.tgt(psi.obj(i)) != hc.tgt(phi.obj(i))) {
        return Ok(false);
    }
    let mut value = vec![None; a.n_blocks()];
    for m in 0..a.cat().n_morphisms() {
        let (j, i) = src.pair(m);
        let v = hc.compose(h.inv(psi.obj(j)), phi.obj(i)).expect("targets agree");
        match value[a.block_of(m)] {
            None => value[a.block_of(m)] = Some(v),
            Some(w) if w != v => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::stilde;
    use crate::fincat::{FinGroup, FinGroupoid, Functor};
    use crate::homotopy::{elementary_homotopy, enumerate_morphisms};
    use crate::search::SearchCaps;

    #[test]
    fn inversion_on_z3_is_not_homotopic_to_identity() {
        let g = FinGroup::cyclic(3).iota();
        let s = stilde(&g);
        let inv = Functor::new(vec![0], vec![0, 2, 1]);
        let psi = SchemoidMorphism::new(s.induced(&inv), s.schemoid(), s.schemoid()).unwrap();
        let id = SchemoidMorphism::identity(s.schemoid());
        assert!(thin_homotopy_criterion(&s, &s, &id, &id).unwrap());
        assert!(!thin_homotopy_criterion(&s, &s, &id, &psi).unwrap());
    }

    #[test]
    fn agrees_with_search_on_the_interval_groupoid() {
        let s = stilde(&FinGroupoid::interval());
        let q = s.schemoid();
        let u = enumerate_morphisms(q, q, &SearchCaps::default()).unwrap();
        for f in u.morphisms() {
            for g in u.morphisms() {
                let search = elementary_homotopy(q, q, f, g).unwrap().is_some();
                assert_eq!(thin_homotopy_criterion(&s, &s, f, g).unwrap(), search);
            }
        }
    }
}
