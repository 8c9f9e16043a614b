//! haut of the schemoid of a group scheme against the automorphism group of
//! the group.

use qschemoid::constructors::{jmath, scheme_of_group};
use qschemoid::fincat::FinGroup;
use qschemoid::haut::{aut_of_group, group_isomorphic, haut_group};
use qschemoid::search::SearchCaps;

fn main() -> Result<(), qschemoid::Error> {
    let caps = SearchCaps::default();
    let groups = [
        ("Z/2", FinGroup::cyclic(2)),
        ("Z/3", FinGroup::cyclic(3)),
        ("Z/4", FinGroup::cyclic(4)),
        ("Z/2 x Z/2", FinGroup::cyclic(2).product(&FinGroup::cyclic(2))),
        ("Sym(3)", FinGroup::symmetric(3)),
    ];
    for (name, g) in groups {
        let aut = aut_of_group(&g, &caps)?;
        let h = haut_group(&jmath(&scheme_of_group(&g)), &caps)?;
        println!(
            "{name:<10} |Aut| = {}, |haut| = {}, isomorphic: {}",
            aut.group.order(),
            h.order(),
            group_isomorphic(&aut.group, &h.group)
        );
    }
    Ok(())
}
