use super::{QSchemoid, SchemoidError};
use crate::fincat::Functor;

/// A functor sending every block of the source into a single block of the
/// target. Ordered lexicographically by the functor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchemoidMorphism {
    pub functor: Functor,
    pub block_image: Vec<usize>,
}

impl SchemoidMorphism {
    /// Checks that `functor` is a functor `a → b` and computes its block map.
    pub fn new(functor: Functor, a: &QSchemoid, b: &QSchemoid) -> Result<SchemoidMorphism, SchemoidError> {
        functor.validate(a.cat(), b.cat())?;
        let mut block_image = Vec::with_capacity(a.n_blocks());
        for (sigma, members) in a.partition().blocks().iter().enumerate() {
            let m1 = members[0];
            let target = b.block_of(functor.mor_map[m1]);
            if let Some(&m2) = members.iter().find(|&&m| b.block_of(functor.mor_map[m]) != target) {
                return Err(SchemoidError::BlockSplit { sigma, m1, m2 });
            }
            block_image.push(target);
        }
        Ok(SchemoidMorphism { functor, block_image })
    }

    pub fn identity(a: &QSchemoid) -> SchemoidMorphism {
        SchemoidMorphism { functor: Functor::identity(a.cat()), block_image: (0..a.n_blocks()).collect() }
    }

    /// The morphism collapsing everything onto the identity of `object`.
    pub fn constant(a: &QSchemoid, b: &QSchemoid, object: usize) -> SchemoidMorphism {
        let functor = Functor::constant(a.cat(), b.cat(), object);
        let block = b.block_of(b.cat().identity(object));
        SchemoidMorphism { functor, block_image: vec![block; a.n_blocks()] }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &SchemoidMorphism) -> SchemoidMorphism {
        SchemoidMorphism {
            functor: self.functor.after(&first.functor),
            block_image: first.block_image.iter().map(|&b| self.block_image[b]).collect(),
        }
    }

    pub fn obj(&self, x: usize) -> usize {
        self.functor.obj_map[x]
    }

    pub fn mor(&self, f: usize) -> usize {
        self.functor.mor_map[f]
    }

    /// Invertible as a schemoid morphism `a → b`: bijective on objects,
    /// morphisms and blocks.
    pub fn is_isomorphism(&self, a: &QSchemoid, b: &QSchemoid) -> bool {
        let mut seen = vec![false; b.n_blocks()];
        a.n_blocks() == b.n_blocks()
            && self.functor.is_bijective(b.cat())
            && self.block_image.iter().all(|&t| !std::mem::replace(&mut seen[t], true))
    }
}
