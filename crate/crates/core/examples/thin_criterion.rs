//! Decides homotopy between morphisms of groupoid schemoids without search,
//! and checks the answer against the search.

use qschemoid::constructors::{iota, stilde};
use qschemoid::fincat::FinGroup;
use qschemoid::homotopy::{elementary_homotopy, enumerate_morphisms, thin_homotopy_criterion};
use qschemoid::search::SearchCaps;

fn main() -> Result<(), qschemoid::Error> {
    for g in [FinGroup::cyclic(2), FinGroup::cyclic(3), FinGroup::cyclic(4)] {
        let s = stilde(&iota(&g));
        let q = s.schemoid();
        let u = enumerate_morphisms(q, q, &SearchCaps::default())?;
        let (mut related, mut agree) = (0, 0);
        for f in u.morphisms() {
            for h in u.morphisms() {
                let fast = thin_homotopy_criterion(&s, &s, f, h)?;
                let slow = elementary_homotopy(q, q, f, h)?.is_some();
                related += usize::from(fast);
                agree += usize::from(fast == slow);
            }
        }
        let pairs = u.len() * u.len();
        println!("Z/{}: {pairs} pairs, {related} related, criterion agrees on {agree}", g.order());
    }
    Ok(())
}
