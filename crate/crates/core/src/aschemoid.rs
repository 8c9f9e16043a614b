//! Association schemoids: quasi-schemoids with a contravariant involution
//! `T` compatible with the partition, their equivariant morphisms, and
//! homotopy over the cylinder `Ĩ = ([1], t)` with `t` swapping the ends.

use thiserror::Error;

use crate::constructors::{cylinder, interval, jmath};
use crate::fincat::Functor;
use crate::homotopy::{check_endpoints, enumerate_morphisms, search_diagonal, Homotopy, HomotopyError};
use crate::schemoid::{AssocScheme, QSchemoid, SchemoidMorphism};
use crate::search::{FunctorSearch, SearchCaps, SearchError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ASchemoidError {
    #[error(
        "involution has {objects} object and {morphisms} morphism images, expected {want_objects} and {want_morphisms}"
    )]
    ShapeMismatch { objects: usize, morphisms: usize, want_objects: usize, want_morphisms: usize },
    #[error("involution image {0} is out of range")]
    OutOfRange(usize),
    #[error("T does not reverse morphism {0}")]
    NotContravariant(usize),
    #[error("T does not reverse the composite of {g} after {f}")]
    CompositionNotReversed { g: usize, f: usize },
    #[error("T(1_{0}) is not the identity of T({0})")]
    IdentityNotPreserved(usize),
    #[error("T is not an involution at morphism {0}")]
    NotInvolutive(usize),
    #[error("T splits block {sigma}: {m1} and {m2} land in different blocks")]
    BlockSplitUnderT { sigma: usize, m1: usize, m2: usize },
    #[error("morphism does not commute with the involutions at morphism {0}")]
    NotEquivariant(usize),
}

/// A quasi-schemoid with a contravariant involution `T` mapping blocks into
/// blocks.
#[derive(Debug, Clone)]
pub struct ASchemoid {
    base: QSchemoid,
    t_obj: Vec<usize>,
    t_mor: Vec<usize>,
}

impl ASchemoid {
    pub fn new(base: QSchemoid, t_obj: Vec<usize>, t_mor: Vec<usize>) -> Result<ASchemoid, ASchemoidError> {
        let c = base.cat();
        let (n, m) = (c.n_objects(), c.n_morphisms());
        if t_obj.len() != n || t_mor.len() != m {
            return Err(ASchemoidError::ShapeMismatch {
                objects: t_obj.len(),
                morphisms: t_mor.len(),
                want_objects: n,
                want_morphisms: m,
            });
        }
        if let Some(&bad) = t_obj.iter().find(|&&x| x >= n) {
            return Err(ASchemoidError::OutOfRange(bad));
        }
        if let Some(&bad) = t_mor.iter().find(|&&f| f >= m) {
            return Err(ASchemoidError::OutOfRange(bad));
        }
        for f in 0..m {
            if c.src(t_mor[f]) != t_obj[c.tgt(f)] || c.tgt(t_mor[f]) != t_obj[c.src(f)] {
                return Err(ASchemoidError::NotContravariant(f));
            }
        }
        for x in 0..n {
            if t_mor[c.identity(x)] != c.identity(t_obj[x]) {
                return Err(ASchemoidError::IdentityNotPreserved(x));
            }
        }
        for (g, f) in c.composable_pairs() {
            let gf = c.compose(g, f).unwrap();
            if c.compose(t_mor[f], t_mor[g]) != Some(t_mor[gf]) {
                return Err(ASchemoidError::CompositionNotReversed { g, f });
            }
        }
        if let Some(f) = (0..m).find(|&f| t_mor[t_mor[f]] != f) {
            return Err(ASchemoidError::NotInvolutive(f));
        }
        for (sigma, members) in base.partition().blocks().iter().enumerate() {
            let target = base.block_of(t_mor[members[0]]);
            if let Some(&m2) = members.iter().find(|&&f| base.block_of(t_mor[f]) != target) {
                return Err(ASchemoidError::BlockSplitUnderT { sigma, m1: members[0], m2 });
            }
        }
        Ok(ASchemoid { base, t_obj, t_mor })
    }

    pub fn base(&self) -> &QSchemoid {
        &self.base
    }

    pub fn t_obj(&self, x: usize) -> usize {
        self.t_obj[x]
    }

    pub fn t_mor(&self, f: usize) -> usize {
        self.t_mor[f]
    }

    pub fn t_obj_map(&self) -> &[usize] {
        &self.t_obj
    }

    pub fn t_mor_map(&self) -> &[usize] {
        &self.t_mor
    }

    /// Whether `T` moves some object. Nothing here requires `T` to fix
    /// objects, but reports flag it.
    pub fn moves_objects(&self) -> bool {
        self.t_obj.iter().enumerate().any(|(x, &y)| x != y)
    }
}

/// `ȷ(a)` with the transpose `(x, y) ↦ (y, x)` and `T` fixing points.
pub fn transpose_aschemoid(a: &AssocScheme) -> ASchemoid {
    let q = jmath(a);
    let n = a.n_points();
    let t_mor = (0..n * n).map(|i| (i % n) * n + i / n).collect();
    ASchemoid::new(q, (0..n).collect(), t_mor).expect("schemes are closed under transpose")
}

/// `Ĩ`: `K([1])` with `t(0) = 1`, `t(1) = 0`, `t(1_0) = 1_1` and `t(u) = u`.
pub fn tilde_interval() -> ASchemoid {
    ASchemoid::new(interval(), vec![1, 0], vec![1, 0, 2]).expect("Ĩ is an association schemoid")
}

/// `a × Ĩ` with involution `T × t`; the index layout is that of
/// [`cylinder`](crate::constructors::cylinder).
pub fn tilde_cylinder(a: &ASchemoid) -> ASchemoid {
    let t = tilde_interval();
    let base = cylinder(a.base()).schemoid;
    let t_obj = (0..base.cat().n_objects()).map(|p| 2 * a.t_obj(p / 2) + t.t_obj(p % 2)).collect();
    let t_mor = (0..base.cat().n_morphisms()).map(|k| 3 * a.t_mor(k / 3) + t.t_mor(k % 3)).collect();
    ASchemoid::new(base, t_obj, t_mor).expect("products of association schemoids")
}

/// An involution as its object and morphism maps.
pub type Involution = (Vec<usize>, Vec<usize>);

/// All involutions making `q` an association schemoid, in lexicographic
/// order.
pub fn enumerate_involutions(q: &QSchemoid, caps: &SearchCaps) -> Result<Vec<Involution>, SearchError> {
    caps.check_objects(q.cat().n_objects())?;
    let op = q.cat().opposite();
    let found = FunctorSearch::new(&op, q.cat()).blocks(q.partition(), q.partition()).collect(caps.max_universe)?;
    Ok(found
        .into_iter()
        .filter(|(f, _)| ASchemoid::new(q.clone(), f.obj_map.clone(), f.mor_map.clone()).is_ok())
        .map(|(f, _)| (f.obj_map, f.mor_map))
        .collect())
}

/// A schemoid morphism with `F∘T = T′∘F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ASchemoidMorphism {
    pub morphism: SchemoidMorphism,
}

impl ASchemoidMorphism {
    pub fn new(morphism: SchemoidMorphism, a: &ASchemoid, b: &ASchemoid) -> Result<Self, ASchemoidError> {
        if let Some(f) =
            (0..a.base().cat().n_morphisms()).find(|&f| morphism.mor(a.t_mor(f)) != b.t_mor(morphism.mor(f)))
        {
            return Err(ASchemoidError::NotEquivariant(f));
        }
        Ok(ASchemoidMorphism { morphism })
    }

    pub fn identity(a: &ASchemoid) -> Self {
        ASchemoidMorphism { morphism: SchemoidMorphism::identity(a.base()) }
    }
}

/// All equivariant schemoid morphisms `a → b`, sorted.
pub fn enumerate_asmd_morphisms(
    a: &ASchemoid,
    b: &ASchemoid,
    caps: &SearchCaps,
) -> Result<Vec<ASchemoidMorphism>, SearchError> {
    let u = enumerate_morphisms(a.base(), b.base(), caps)?;
    Ok(u.morphisms().iter().filter_map(|m| ASchemoidMorphism::new(m.clone(), a, b).ok()).collect())
}

/// Searches for `H: a × Ĩ → b` with `H∘ε_0 = F`, `H∘ε_1 = G` and
/// `H∘(T × t) = T′∘H`.
///
/// On the ends equivariance of `H` says `G∘T = T′∘F`; the diagonal part says
/// `G(Tm)∘diag(T(tgt m)) = T′(diag(src m))∘T′(G(m))` for every `m`. Both are
/// checked honestly even though, for equivariant `F`, the first already
/// forces `F = G`.
pub fn asmd_elementary_homotopy(
    a: &ASchemoid,
    b: &ASchemoid,
    f: &ASchemoidMorphism,
    g: &ASchemoidMorphism,
) -> Result<Option<Homotopy>, HomotopyError> {
    let (qa, qb) = (a.base(), b.base());
    let (f, g) = (&f.morphism, &g.morphism);
    check_endpoints(qa, qb, f)?;
    check_endpoints(qa, qb, g)?;
    let ca = qa.cat();
    let ends_match = (0..ca.n_objects())
        .all(|x| g.obj(a.t_obj(x)) == b.t_obj(f.obj(x)) && f.obj(a.t_obj(x)) == b.t_obj(g.obj(x)))
        && (0..ca.n_morphisms())
            .all(|m| g.mor(a.t_mor(m)) == b.t_mor(f.mor(m)) && f.mor(a.t_mor(m)) == b.t_mor(g.mor(m)));
    if !ends_match {
        return Ok(None);
    }
    let cb = qb.cat();
    let extra = |diag: &[usize], _x: usize| {
        (0..ca.n_morphisms()).all(|m| {
            let (s, tt) = (ca.src(m), a.t_obj(ca.tgt(m)));
            if diag[s] == usize::MAX || diag[tt] == usize::MAX {
                return true;
            }
            let lhs = cb.compose(g.mor(a.t_mor(m)), diag[tt]);
            let rhs = cb.compose(b.t_mor(diag[s]), b.t_mor(g.mor(m)));
            lhs.is_some() && lhs == rhs
        })
    };
    Ok(search_diagonal(qa, qb, f, g, &extra).map(|diag| Homotopy { from: f.clone(), to: g.clone(), diag }))
}

/// Rebuilds the cylinder functor of a certificate and checks equivariance
/// against `T × t`.
pub fn verify_asmd_homotopy(a: &ASchemoid, b: &ASchemoid, h: &Homotopy) -> Result<(), HomotopyError> {
    h.verify(a.base(), b.base())?;
    let cyl = tilde_cylinder(a);
    let hf: Functor = h.cylinder_functor(a.base(), b.base());
    let c = cyl.base().cat();
    let ok = (0..c.n_morphisms()).all(|k| hf.mor_map[cyl.t_mor(k)] == b.t_mor(hf.mor_map[k]));
    if ok {
        Ok(())
    } else {
        Err(HomotopyError::InvalidCertificate("not equivariant under T × t".into()))
    }
}
