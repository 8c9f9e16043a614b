//! Searches for elementary homotopies and homotopy chains between
//! endomorphisms, and partitions a universe into homotopy classes.

use qschemoid::constructors::jmath;
use qschemoid::homotopy::{elementary_homotopy, enumerate_morphisms, homotopic, homotopy_classes};
use qschemoid::schemoid::{AssocScheme, SchemoidMorphism};
use qschemoid::search::SearchCaps;

fn main() -> Result<(), qschemoid::Error> {
    let j = jmath(&AssocScheme::trivial(3));
    let universe = enumerate_morphisms(&j, &j, &SearchCaps::default())?;
    println!("{} endomorphisms of j(trivial 3)", universe.len());

    let id = SchemoidMorphism::identity(&j);
    let k0 = SchemoidMorphism::constant(&j, &j, 0);
    let k2 = SchemoidMorphism::constant(&j, &j, 2);
    if let Some(h) = elementary_homotopy(&j, &j, &k0, &k2)? {
        println!("const_0 => const_2 with diagonal {:?}", h.diag);
    }
    match homotopic(&j, &j, &id, &k0, &universe)? {
        Some(chain) => println!("identity ~ const_0 in {} steps", chain.len()),
        None => println!("identity and const_0 are not homotopic"),
    }

    let classes = homotopy_classes(&j, &j, &universe);
    for (c, members) in classes.classes.iter().enumerate() {
        let maps: Vec<_> = members.iter().map(|&m| universe.get(m).functor.obj_map.clone()).collect();
        println!("class {c}: {maps:?}");
    }
    Ok(())
}
