//! Composes 2-cells: vertical composition of chains and both bracketings of
//! the horizontal composite.

use qschemoid::constructors::{idempotent_chaotic, interval};
use qschemoid::homotopy::{
    elementary_homotopy, horizontal_compose, horizontal_compose_swapped, vertical_compose, HomotopyChain,
};
use qschemoid::schemoid::SchemoidMorphism;

fn main() -> Result<(), qschemoid::Error> {
    let c = interval();
    let d = idempotent_chaotic(2);
    let id = SchemoidMorphism::identity(&d);
    let k0 = SchemoidMorphism::constant(&d, &d, 0);
    let k1 = SchemoidMorphism::constant(&d, &d, 1);

    // nu: id ≃ const_1 on d
    let nu = HomotopyChain::single(elementary_homotopy(&d, &d, &id, &k1)?.expect("contraction"));
    // kappa: F ≃ const_0 ∘ F for an inclusion F of the interval
    let f = SchemoidMorphism::constant(&c, &d, 1);
    let g = k0.after(&f);
    let kappa = HomotopyChain::single(elementary_homotopy(&c, &d, &f, &g)?.expect("constants are related"));

    let one = horizontal_compose(&c, &d, &d, &nu, &kappa)?;
    let two = horizontal_compose_swapped(&c, &d, &d, &nu, &kappa)?;
    one.verify(&c, &d)?;
    two.verify(&c, &d)?;
    println!("horizontal composite: {} steps, swapped bracketing: {} steps", one.len(), two.len());
    println!("same endpoints: {}", one.start() == two.start() && one.end() == two.end());

    let back = nu.reversed();
    let loop_ = vertical_compose(&nu, &back)?;
    println!("nu then nu reversed: {} steps, closed: {}", loop_.len(), loop_.start() == loop_.end());
    Ok(())
}
