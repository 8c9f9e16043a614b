use thiserror::Error;

use super::FinCat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("functor maps have lengths ({objects}, {morphisms}) but the source category needs ({want_objects}, {want_morphisms})")]
    ShapeMismatch { objects: usize, morphisms: usize, want_objects: usize, want_morphisms: usize },
    #[error("image index out of range for {what} {index}")]
    OutOfRange { what: &'static str, index: usize },
    #[error("morphism {0} is not sent to a morphism between the images of its endpoints")]
    EndpointsNotPreserved(usize),
    #[error("identity of object {0} is not sent to an identity")]
    IdentityNotPreserved(usize),
    #[error("composite {g}∘{f} is not preserved")]
    CompositionNotPreserved { g: usize, f: usize },
}

/// A functor between two finite categories, stored extensionally. Equality
/// is equality of both maps; the derived ordering is lexicographic on
/// `(obj_map, mor_map)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Functor {
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

impl Functor {
    pub fn new(obj_map: Vec<usize>, mor_map: Vec<usize>) -> Self {
        Functor { obj_map, mor_map }
    }

    pub fn identity(c: &FinCat) -> Functor {
        Functor { obj_map: (0..c.n_objects()).collect(), mor_map: (0..c.n_morphisms()).collect() }
    }

    /// The functor collapsing `src` onto the identity of `object` in `tgt`.
    pub fn constant(src: &FinCat, tgt: &FinCat, object: usize) -> Functor {
        Functor { obj_map: vec![object; src.n_objects()], mor_map: vec![tgt.identity(object); src.n_morphisms()] }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Functor) -> Functor {
        Functor {
            obj_map: first.obj_map.iter().map(|&x| self.obj_map[x]).collect(),
            mor_map: first.mor_map.iter().map(|&f| self.mor_map[f]).collect(),
        }
    }

    pub fn validate(&self, src: &FinCat, tgt: &FinCat) -> Result<(), FunctorError> {
        if self.obj_map.len() != src.n_objects() || self.mor_map.len() != src.n_morphisms() {
            return Err(FunctorError::ShapeMismatch {
                objects: self.obj_map.len(),
                morphisms: self.mor_map.len(),
                want_objects: src.n_objects(),
                want_morphisms: src.n_morphisms(),
            });
        }
        if let Some(x) = self.obj_map.iter().position(|&y| y >= tgt.n_objects()) {
            return Err(FunctorError::OutOfRange { what: "object", index: x });
        }
        if let Some(f) = self.mor_map.iter().position(|&g| g >= tgt.n_morphisms()) {
            return Err(FunctorError::OutOfRange { what: "morphism", index: f });
        }
        for f in 0..src.n_morphisms() {
            let g = self.mor_map[f];
            if tgt.src(g) != self.obj_map[src.src(f)] || tgt.tgt(g) != self.obj_map[src.tgt(f)] {
                return Err(FunctorError::EndpointsNotPreserved(f));
            }
        }
        for x in 0..src.n_objects() {
            if self.mor_map[src.identity(x)] != tgt.identity(self.obj_map[x]) {
                return Err(FunctorError::IdentityNotPreserved(x));
            }
        }
        for (g, f) in src.composable_pairs() {
            let gf = src.compose(g, f).unwrap();
            if tgt.compose(self.mor_map[g], self.mor_map[f]) != Some(self.mor_map[gf]) {
                return Err(FunctorError::CompositionNotPreserved { g, f });
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        injective(&self.obj_map) && injective(&self.mor_map)
    }

    /// Bijective on objects and morphisms onto `tgt`.
    pub fn is_bijective(&self, tgt: &FinCat) -> bool {
        self.obj_map.len() == tgt.n_objects() && self.mor_map.len() == tgt.n_morphisms() && self.is_injective()
    }

    /// Inverse maps of a bijective functor.
    pub fn inverse(&self) -> Option<Functor> {
        let mut obj = vec![usize::MAX; self.obj_map.len()];
        for (x, &y) in self.obj_map.iter().enumerate() {
            if y >= obj.len() || obj[y] != usize::MAX {
                return None;
            }
            obj[y] = x;
        }
        let mut mor = vec![usize::MAX; self.mor_map.len()];
        for (f, &g) in self.mor_map.iter().enumerate() {
            if g >= mor.len() || mor[g] != usize::MAX {
                return None;
            }
            mor[g] = f;
        }
        Some(Functor { obj_map: obj, mor_map: mor })
    }
}

fn injective(map: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(map.len());
    map.iter().all(|v| seen.insert(*v))
}

/// The two projections out of `a.product(b)`.
pub fn projections(a: &FinCat, b: &FinCat) -> (Functor, Functor) {
    let (n2, m2) = (b.n_objects(), b.n_morphisms());
    let p1 = Functor {
        obj_map: (0..a.n_objects() * n2).map(|x| x / n2).collect(),
        mor_map: (0..a.n_morphisms() * m2).map(|f| f / m2).collect(),
    };
    let p2 = Functor {
        obj_map: (0..a.n_objects() * n2).map(|x| x % n2).collect(),
        mor_map: (0..a.n_morphisms() * m2).map(|f| f % m2).collect(),
    };
    (p1, p2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_constant_are_functors() {
        let c = FinCat::chaotic(3);
        Functor::identity(&c).validate(&c, &c).unwrap();
        Functor::constant(&c, &c, 1).validate(&c, &c).unwrap();
    }

    #[test]
    fn projections_are_functors() {
        let a = FinCat::chaotic(2);
        let b = FinCat::arrow();
        let p = a.product(&b);
        let (p1, p2) = projections(&a, &b);
        p1.validate(&p, &a).unwrap();
        p2.validate(&p, &b).unwrap();
    }

    #[test]
    fn swapping_endpoints_of_arrow_is_not_a_functor() {
        let c = FinCat::arrow();
        let f = Functor::new(vec![1, 0], vec![1, 0, 2]);
        assert_eq!(f.validate(&c, &c), Err(FunctorError::EndpointsNotPreserved(2)));
    }

    #[test]
    fn inverse_of_swap() {
        let c = FinCat::chaotic(2);
        let swap = Functor::new(vec![1, 0], vec![3, 2, 1, 0]);
        swap.validate(&c, &c).unwrap();
        assert_eq!(swap.inverse().unwrap(), swap);
        assert!(Functor::constant(&c, &c, 0).inverse().is_none());
    }
}
