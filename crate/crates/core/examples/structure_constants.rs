//! Prints the structure constants of a scheme and of its schemoid, which
//! agree block for block.

use qschemoid::constructors::{idempotent_chaotic, jmath, scheme_of_group};
use qschemoid::fincat::FinGroup;
use qschemoid::schemoid::QSchemoid;

fn print_table(q: &QSchemoid) {
    let names = q.partition().names();
    for mu in 0..q.n_blocks() {
        for s in 0..q.n_blocks() {
            for t in 0..q.n_blocks() {
                let p = q.p(s, t, mu);
                if p != 0 {
                    println!("  p^{}_{{{},{}}} = {p}", names[mu], names[s], names[t]);
                }
            }
        }
    }
}

fn main() {
    let s = scheme_of_group(&FinGroup::cyclic(3));
    println!("S(Z/3): p^2_{{1,1}} = {}", s.p(1, 1, 2));
    println!("j(S(Z/3)) nonzero constants:");
    print_table(&jmath(&s));
    println!("idempotent chaotic example on 4 objects:");
    print_table(&idempotent_chaotic(4));
}
