//! Association schemoids: with the involution taken into account, homotopy
//! only relates a morphism to itself.

use qschemoid::aschemoid::{
    asmd_elementary_homotopy, enumerate_asmd_morphisms, enumerate_involutions, tilde_interval, transpose_aschemoid,
};
use qschemoid::constructors::{interval, scheme_of_group};
use qschemoid::fincat::FinGroup;
use qschemoid::homotopy::elementary_homotopy;
use qschemoid::schemoid::AssocScheme;
use qschemoid::search::SearchCaps;

fn main() -> Result<(), qschemoid::Error> {
    let caps = SearchCaps::default();
    println!("involutions of K([1]): {:?}", enumerate_involutions(&interval(), &caps)?);
    for (name, a) in [
        ("trivial 2", transpose_aschemoid(&AssocScheme::trivial(2))),
        ("trivial 3", transpose_aschemoid(&AssocScheme::trivial(3))),
        ("S(Z/3)", transpose_aschemoid(&scheme_of_group(&FinGroup::cyclic(3)))),
        ("K([1])", tilde_interval()),
    ] {
        let all = enumerate_asmd_morphisms(&a, &a, &caps)?;
        let (mut equivariant, mut plain) = (0, 0);
        for f in &all {
            for g in &all {
                equivariant += usize::from(asmd_elementary_homotopy(&a, &a, f, g)?.is_some());
                plain += usize::from(elementary_homotopy(a.base(), a.base(), &f.morphism, &g.morphism)?.is_some());
            }
        }
        println!(
            "{name:<10} {} equivariant endomorphisms, {equivariant} related pairs (without involution: {plain})",
            all.len()
        );
    }
    Ok(())
}
