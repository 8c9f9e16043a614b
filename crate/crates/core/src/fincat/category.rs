use std::fmt;

use thiserror::Error;

/// Errors raised while validating a category description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("{what} index {index} is out of range")]
    DanglingIndex { what: &'static str, index: usize },
    #[error("morphism {morphism} is declared as identity of object {object} but is not an endomorphism of it")]
    IdentityNotLoop { object: usize, morphism: usize },
    #[error("composite {g}∘{f} is declared but src({g}) != tgt({f})")]
    NotComposable { g: usize, f: usize },
    #[error("composite {g}∘{f} is declared twice with different values")]
    DuplicateComposite { g: usize, f: usize },
    #[error("composite {g}∘{f} is missing")]
    MissingComposite { g: usize, f: usize },
    #[error("composite {g}∘{f} = {composite} has the wrong source or target")]
    SrcTgtViolation { g: usize, f: usize, composite: usize },
    #[error("identity {identity} of object {object} is not a unit for morphism {morphism}")]
    IdentityViolation { object: usize, identity: usize, morphism: usize },
    #[error("associativity fails for ({h}, {g}, {f})")]
    AssociativityViolation { h: usize, g: usize, f: usize },
    #[error("object {object} has no identity morphism")]
    NoIdentity { object: usize },
    #[error("morphism {0} has no two-sided inverse")]
    InverseMissing(usize),
}

/// Unvalidated category description: objects are `0..n_objects`, morphisms
/// are listed with their endpoints, and composites are `(g, f, g∘f)`.
#[derive(Debug, Clone, Default)]
pub struct RawCategory {
    pub n_objects: usize,
    pub names: Vec<String>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub identities: Vec<usize>,
    pub composites: Vec<(usize, usize, usize)>,
}

impl RawCategory {
    pub fn new(n_objects: usize) -> Self {
        RawCategory { n_objects, ..Default::default() }
    }

    /// Appends a morphism and returns its index.
    pub fn morphism(&mut self, name: impl Into<String>, src: usize, tgt: usize) -> usize {
        self.names.push(name.into());
        self.src.push(src);
        self.tgt.push(tgt);
        self.names.len() - 1
    }

    pub fn compose(&mut self, g: usize, f: usize, gf: usize) -> &mut Self {
        self.composites.push((g, f, gf));
        self
    }

    pub fn validate(&self) -> Result<FinCat, CategoryError> {
        FinCat::from_raw(self)
    }
}

/// A finite category with dense object and morphism indices and a full
/// composition table. `compose(g, f)` is `g∘f`: apply `f`, then `g`.
#[derive(Clone, PartialEq, Eq)]
pub struct FinCat {
    n_objects: usize,
    names: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<usize>,
    comp: Vec<Option<usize>>,
    hom: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
}

impl fmt::Debug for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCat").field("n_objects", &self.n_objects).field("n_morphisms", &self.n_morphisms()).finish()
    }
}

impl FinCat {
    pub fn from_raw(raw: &RawCategory) -> Result<FinCat, CategoryError> {
        let n = raw.n_objects;
        let m = raw.src.len();
        if raw.tgt.len() != m {
            return Err(CategoryError::DanglingIndex { what: "target list entry", index: raw.tgt.len().min(m) });
        }
        for (i, (&s, &t)) in raw.src.iter().zip(&raw.tgt).enumerate() {
            if s >= n || t >= n {
                return Err(CategoryError::DanglingIndex { what: "object of morphism", index: i });
            }
        }
        if raw.identities.len() != n {
            return Err(CategoryError::NoIdentity { object: raw.identities.len().min(n) });
        }
        for (x, &e) in raw.identities.iter().enumerate() {
            if e >= m {
                return Err(CategoryError::DanglingIndex { what: "identity morphism", index: e });
            }
            if raw.src[e] != x || raw.tgt[e] != x {
                return Err(CategoryError::IdentityNotLoop { object: x, morphism: e });
            }
        }
        let mut comp = vec![None; m * m];
        for &(g, f, gf) in &raw.composites {
            for idx in [g, f, gf] {
                if idx >= m {
                    return Err(CategoryError::DanglingIndex { what: "morphism", index: idx });
                }
            }
            if raw.src[g] != raw.tgt[f] {
                return Err(CategoryError::NotComposable { g, f });
            }
            match comp[g * m + f] {
                Some(prev) if prev != gf => return Err(CategoryError::DuplicateComposite { g, f }),
                _ => comp[g * m + f] = Some(gf),
            }
        }
        let cat =
            FinCat::assemble(n, raw.names.clone(), raw.src.clone(), raw.tgt.clone(), raw.identities.clone(), comp);
        cat.check_laws()?;
        Ok(cat)
    }

    /// Builds the indexing caches without checking any law.
    pub(crate) fn assemble(
        n_objects: usize,
        names: Vec<String>,
        src: Vec<usize>,
        tgt: Vec<usize>,
        identity: Vec<usize>,
        comp: Vec<Option<usize>>,
    ) -> FinCat {
        let m = src.len();
        let mut hom = vec![Vec::new(); n_objects * n_objects];
        let mut incoming = vec![Vec::new(); n_objects];
        let mut outgoing = vec![Vec::new(); n_objects];
        for f in 0..m {
            hom[src[f] * n_objects + tgt[f]].push(f);
            incoming[tgt[f]].push(f);
            outgoing[src[f]].push(f);
        }
        FinCat { n_objects, names, src, tgt, identity, comp, hom, incoming, outgoing }
    }

    /// Checks totality on composable pairs, endpoint rules, unit laws and
    /// associativity.
    pub(crate) fn check_laws(&self) -> Result<(), CategoryError> {
        let m = self.n_morphisms();
        for g in 0..m {
            for &f in &self.incoming[self.src[g]] {
                let gf = self.comp[g * m + f].ok_or(CategoryError::MissingComposite { g, f })?;
                if self.src[gf] != self.src[f] || self.tgt[gf] != self.tgt[g] {
                    return Err(CategoryError::SrcTgtViolation { g, f, composite: gf });
                }
            }
        }
        for f in 0..m {
            let (s, t) = (self.src[f], self.tgt[f]);
            if self.compose(self.identity[t], f) != Some(f) {
                return Err(CategoryError::IdentityViolation { object: t, identity: self.identity[t], morphism: f });
            }
            if self.compose(f, self.identity[s]) != Some(f) {
                return Err(CategoryError::IdentityViolation { object: s, identity: self.identity[s], morphism: f });
            }
        }
        for f in 0..m {
            for &g in &self.outgoing[self.tgt[f]] {
                let gf = self.comp[g * m + f].unwrap();
                for &h in &self.outgoing[self.tgt[g]] {
                    let hg = self.comp[h * m + g].unwrap();
                    if self.comp[h * m + gf] != self.comp[hg * m + f] {
                        return Err(CategoryError::AssociativityViolation { h, g, f });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn n_morphisms(&self) -> usize {
        self.src.len()
    }

    pub fn src(&self, f: usize) -> usize {
        self.src[f]
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.tgt[f]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.src[f]] == f
    }

    pub fn name(&self, f: usize) -> &str {
        &self.names[f]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `g∘f`, defined exactly when `src(g) = tgt(f)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g * self.n_morphisms() + f]
    }

    /// Morphisms `a → b`, in increasing index order.
    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.hom[a * self.n_objects + b]
    }

    /// Morphisms with target `x`.
    pub fn incoming(&self, x: usize) -> &[usize] {
        &self.incoming[x]
    }

    /// Morphisms with source `x`.
    pub fn outgoing(&self, x: usize) -> &[usize] {
        &self.outgoing[x]
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Every Hom set has at most one element.
    pub fn is_thin(&self) -> bool {
        self.hom.iter().all(|h| h.len() <= 1)
    }

    /// Composable pairs `(g, f)` in increasing `(g, f)` order.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n_morphisms()).flat_map(move |g| self.incoming[self.src[g]].iter().map(move |&f| (g, f)))
    }

    /// The terminal category `•`.
    pub fn terminal() -> FinCat {
        FinCat::discrete(1)
    }

    /// `n` objects and only identity morphisms.
    pub fn discrete(n: usize) -> FinCat {
        let mut raw = RawCategory::new(n);
        for x in 0..n {
            let e = raw.morphism(format!("1_{x}"), x, x);
            raw.identities.push(e);
            raw.compose(e, e, e);
        }
        raw.validate().expect("discrete category is valid")
    }

    /// The arrow category `[1]`: objects 0, 1 and morphisms `1_0, 1_1, u: 0 → 1`.
    pub fn arrow() -> FinCat {
        let mut raw = RawCategory::new(2);
        let e0 = raw.morphism("1_0", 0, 0);
        let e1 = raw.morphism("1_1", 1, 1);
        let u = raw.morphism("u", 0, 1);
        raw.identities = vec![e0, e1];
        raw.compose(e0, e0, e0).compose(e1, e1, e1).compose(u, e0, u).compose(e1, u, u);
        raw.validate().expect("[1] is valid")
    }

    /// The thin category on `n` objects with `Hom(y, x) = {(x, y)}` for every
    /// pair. Morphism `(x, y)` has index `x * n + y`.
    pub fn chaotic(n: usize) -> FinCat {
        let mut raw = RawCategory::new(n);
        for x in 0..n {
            for y in 0..n {
                raw.morphism(format!("({x},{y})"), y, x);
            }
        }
        raw.identities = (0..n).map(|x| x * n + x).collect();
        for z in 0..n {
            for x in 0..n {
                for y in 0..n {
                    raw.compose(z * n + x, x * n + y, z * n + y);
                }
            }
        }
        raw.validate().expect("chaotic category is valid")
    }

    /// The one-object category of a monoid given by its multiplication table
    /// (`table[a][b] = ab`, element 0 the unit).
    pub fn one_object(table: &[Vec<usize>]) -> Result<FinCat, CategoryError> {
        let mut raw = RawCategory::new(1);
        for a in 0..table.len() {
            raw.morphism(format!("m{a}"), 0, 0);
        }
        raw.identities = vec![0];
        for (a, row) in table.iter().enumerate() {
            for (b, &ab) in row.iter().enumerate() {
                raw.compose(a, b, ab);
            }
        }
        raw.validate()
    }

    /// The opposite category; indices are unchanged.
    pub fn opposite(&self) -> FinCat {
        let m = self.n_morphisms();
        let mut comp = vec![None; m * m];
        for (g, f) in self.composable_pairs() {
            comp[f * m + g] = self.compose(g, f);
        }
        FinCat::assemble(
            self.n_objects,
            self.names.clone(),
            self.tgt.clone(),
            self.src.clone(),
            self.identity.clone(),
            comp,
        )
    }

    /// Object pairs and morphism pairs in lexicographic order, `self`-major.
    pub fn product(&self, other: &FinCat) -> FinCat {
        let (n2, m1, m2) = (other.n_objects, self.n_morphisms(), other.n_morphisms());
        let m = m1 * m2;
        let mut names = Vec::with_capacity(m);
        let mut src = Vec::with_capacity(m);
        let mut tgt = Vec::with_capacity(m);
        for f in 0..m1 {
            for g in 0..m2 {
                names.push(format!("({},{})", self.names[f], other.names[g]));
                src.push(self.src[f] * n2 + other.src[g]);
                tgt.push(self.tgt[f] * n2 + other.tgt[g]);
            }
        }
        let identity = (0..self.n_objects)
            .flat_map(|x| (0..n2).map(move |y| (x, y)))
            .map(|(x, y)| self.identity[x] * m2 + other.identity[y])
            .collect();
        let mut comp = vec![None; m * m];
        for (g1, f1) in self.composable_pairs() {
            let c1 = self.compose(g1, f1).unwrap();
            for (g2, f2) in other.composable_pairs() {
                let c2 = other.compose(g2, f2).unwrap();
                comp[(g1 * m2 + g2) * m + f1 * m2 + f2] = Some(c1 * m2 + c2);
            }
        }
        let cat = FinCat::assemble(self.n_objects * n2, names, src, tgt, identity, comp);
        debug_assert!(cat.check_laws().is_ok());
        cat
    }

    /// The description this category validates from.
    pub fn to_raw(&self) -> RawCategory {
        RawCategory {
            n_objects: self.n_objects,
            names: self.names.clone(),
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            identities: self.identity.clone(),
            composites: self.composable_pairs().map(|(g, f)| (g, f, self.compose(g, f).unwrap())).collect(),
        }
    }
}
