//! Reads and writes the three text formats.

use qschemoid::constructors::{commuting_square, jmath};
use qschemoid::fincat::FinGroup;
use qschemoid::io::{emit_group, emit_scheme, emit_schemoid, parse_document, parse_scheme, Document};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = emit_schemoid(&commuting_square());
    print!("{text}");
    let Document::Schemoid(doc) = parse_document(&text)? else { unreachable!() };
    println!("round trip exact: {}", emit_schemoid(&doc.schemoid) == text);

    let scheme = parse_scheme("#ascheme v1\n3\n0 1 2\n2 0 1\n1 2 0\n")?;
    println!("\nparsed a scheme with {} relations", scheme.n_relations());
    print!("{}", emit_scheme(&scheme));
    println!("its schemoid has {} blocks", jmath(&scheme).n_blocks());

    print!("\n{}", emit_group(&FinGroup::cyclic(3)));

    match parse_scheme("#ascheme v1\n2\n0 1\n1 1\n") {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("\nrejected: {e}"),
    }
    Ok(())
}
