//! Contractibility: the idempotent example contracts, the commuting square
//! does not even though its underlying category does.

use qschemoid::constructors::{commuting_square, idempotent_chaotic};
use qschemoid::fincat::{cat_strong_homotopic, Functor};
use qschemoid::homotopy::{collapse_obstruction, is_contractible};
use qschemoid::search::SearchCaps;

fn main() -> Result<(), qschemoid::Error> {
    let caps = SearchCaps::default();
    for n in 2..=5 {
        let q = idempotent_chaotic(n);
        let c = is_contractible(&q, &caps)?.expect("contractible");
        println!("idempotent chaotic {n}: contracts onto object {} in {} step(s)", c.object, c.chain.len());
    }

    let q = commuting_square();
    println!("commuting square contractible: {}", is_contractible(&q, &caps)?.is_some());
    println!("collapse obstruction: {:?}", collapse_obstruction(&q));
    let c = q.cat();
    let strong = cat_strong_homotopic(c, c, &Functor::identity(c), &Functor::constant(c, c, 0), &caps)?;
    println!("underlying category contractible: {strong}");
    Ok(())
}
