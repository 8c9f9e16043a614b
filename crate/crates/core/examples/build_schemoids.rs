//! Builds the standard quasi-schemoids and prints their shapes.

use qschemoid::constructors::{cylinder, discrete_k, idempotent_chaotic, iota, jmath, scheme_of_group, stilde};
use qschemoid::fincat::{FinCat, FinGroup, FinGroupoid};
use qschemoid::schemoid::{AssocScheme, QSchemoid};

fn describe(name: &str, q: &QSchemoid) {
    let sizes: Vec<usize> = q.partition().blocks().iter().map(Vec::len).collect();
    println!(
        "{name:<24} {} objects, {:>3} morphisms, blocks of sizes {sizes:?}",
        q.cat().n_objects(),
        q.cat().n_morphisms()
    );
}

fn main() {
    describe("j(trivial 3)", &jmath(&AssocScheme::trivial(3)));
    describe("j(S(Z/4))", &jmath(&scheme_of_group(&FinGroup::cyclic(4))));
    describe("S~(iota Sym(3))", stilde(&iota(&FinGroup::symmetric(3))).schemoid());
    describe("S~(interval groupoid)", stilde(&FinGroupoid::interval()).schemoid());
    describe("K([1] x [1])", &discrete_k(&FinCat::arrow().product(&FinCat::arrow())));
    describe("j(trivial 2) x I", &cylinder(&jmath(&AssocScheme::trivial(2))).schemoid);
    describe("idempotent chaotic 3", &idempotent_chaotic(3));
}
