//! The self-homotopy equivalences of the trivial schemes form the symmetric
//! group once there are at least three points.

use qschemoid::constructors::jmath;
use qschemoid::haut::{haut_group, isomorphism_type};
use qschemoid::schemoid::AssocScheme;
use qschemoid::search::SearchCaps;

fn main() -> Result<(), qschemoid::Error> {
    for n in 2..=5 {
        let h = haut_group(&jmath(&AssocScheme::trivial(n)), &SearchCaps::default())?;
        let kind = isomorphism_type(&h.group).unwrap_or_else(|| "unrecognized".into());
        println!(
            "n = {n}: {} endomorphisms, {} classes, haut of order {} ({kind})",
            h.endo.monoid.order(),
            h.quotient.order(),
            h.order()
        );
    }
    Ok(())
}
