//! Constructions relating groups, groupoids, association schemes, categories
//! and quasi-schemoids.

use crate::fincat::{FinCat, FinGroup, FinGroupoid, Functor, RawCategory};
use crate::schemoid::{AssocScheme, Partition, QSchemoid, SchemoidMorphism};
use crate::search::{FunctorSearch, SearchCaps, SearchError};

/// `K(c)`: the discrete schemoid on `c`.
pub fn discrete_k(c: &FinCat) -> QSchemoid {
    QSchemoid::discrete(c.clone())
}

/// `U(q)`: the underlying category.
pub fn forget_u(q: &QSchemoid) -> FinCat {
    q.cat().clone()
}

/// The thin category on the points of `a`: morphism `(x, y): y → x` at index
/// `x * n + y`, `(z, x)∘(x, y) = (z, y)`, and block `r` holding the pairs of
/// relation `r`.
pub fn jmath(a: &AssocScheme) -> QSchemoid {
    let n = a.n_points();
    let cat = FinCat::chaotic(n);
    let labels: Vec<usize> = (0..n * n).map(|i| a.relation(i / n, i % n)).collect();
    let names = (0..a.n_relations()).map(|r| format!("r{r}")).collect();
    let partition = Partition::from_labels(&labels).expect("relations are nonempty").renamed(names);
    QSchemoid::new(cat, partition).expect("schemes give quasi-schemoids")
}

/// `S(G)`: relation of `(k, l)` is the element `k⁻¹l`.
pub fn scheme_of_group(g: &FinGroup) -> AssocScheme {
    let n = g.order();
    let m: Vec<Vec<usize>> = (0..n).map(|k| (0..n).map(|l| g.mul(g.inv(k), l)).collect()).collect();
    AssocScheme::from_matrix(&m).expect("group schemes are association schemes")
}

/// The one-object groupoid of a group.
pub fn iota(g: &FinGroup) -> FinGroupoid {
    g.iota()
}

/// `S̃(H)` together with the groupoid it came from.
#[derive(Debug, Clone)]
pub struct StildeSchemoid {
    groupoid: FinGroupoid,
    schemoid: QSchemoid,
    pair_index: Vec<Option<usize>>,
    pairs: Vec<(usize, usize)>,
}

impl StildeSchemoid {
    pub fn groupoid(&self) -> &FinGroupoid {
        &self.groupoid
    }

    pub fn schemoid(&self) -> &QSchemoid {
        &self.schemoid
    }

    /// Index of the morphism `(h, g): g → h`, if `t(h) = t(g)`.
    pub fn morphism(&self, h: usize, g: usize) -> Option<usize> {
        self.pair_index[h * self.groupoid.category().n_morphisms() + g]
    }

    /// `(h, g)` for a morphism index.
    pub fn pair(&self, m: usize) -> (usize, usize) {
        self.pairs[m]
    }

    /// `S̃(u)` for a functor `u` of the groupoid into itself.
    pub fn induced(&self, u: &Functor) -> Functor {
        let obj_map = u.mor_map.clone();
        let mor_map = self
            .pairs
            .iter()
            .map(|&(h, g)| self.morphism(u.mor_map[h], u.mor_map[g]).expect("functors preserve targets"))
            .collect();
        Functor::new(obj_map, mor_map)
    }
}

/// `S̃(H)`: objects are the morphisms of `H` (same indices), `Hom(g, h)` is
/// `{(h, g)}` when `t(h) = t(g)`, and the block of `(k, l)` is `k⁻¹l`.
/// Morphisms are the admissible pairs in lexicographic order.
pub fn stilde(h: &FinGroupoid) -> StildeSchemoid {
    let c = h.category();
    let n = c.n_morphisms();
    let mut raw = RawCategory::new(n);
    let mut pair_index = vec![None; n * n];
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if c.tgt(a) == c.tgt(b) {
                pair_index[a * n + b] = Some(raw.morphism(format!("({},{})", c.name(a), c.name(b)), b, a));
                pairs.push((a, b));
            }
        }
    }
    raw.identities = (0..n).map(|a| pair_index[a * n + a].unwrap()).collect();
    for (i, &(z, x)) in pairs.iter().enumerate() {
        for (j, &(x2, y)) in pairs.iter().enumerate() {
            if x == x2 {
                raw.compose(i, j, pair_index[z * n + y].unwrap());
            }
        }
    }
    let cat = raw.validate().expect("S̃(H) is a category");
    let labels: Vec<usize> = pairs.iter().map(|&(k, l)| c.compose(h.inv(k), l).unwrap()).collect();
    let names = (0..n).map(|f| format!("G_{}", c.name(f))).collect();
    let mut blocks = vec![Vec::new(); n];
    for (m, &f) in labels.iter().enumerate() {
        blocks[f].push(m);
    }
    let partition = Partition::with_names(cat.n_morphisms(), blocks, names).expect("every G_f is nonempty");
    let schemoid = QSchemoid::new(cat, partition).expect("S̃(H) is a quasi-schemoid");
    StildeSchemoid { groupoid: h.clone(), schemoid, pair_index, pairs }
}

/// `a × b` with blocks `σ × τ`.
pub fn product_schemoid(a: &QSchemoid, b: &QSchemoid) -> QSchemoid {
    a.product(b)
}

/// `I = K([1])`.
pub fn interval() -> QSchemoid {
    discrete_k(&FinCat::arrow())
}

/// `K(•)`.
pub fn trivial_schemoid() -> QSchemoid {
    discrete_k(&FinCat::terminal())
}

/// `a × I` with its end inclusions and the projection back to `a`.
#[derive(Debug, Clone)]
pub struct Cylinder {
    pub schemoid: QSchemoid,
    pub end0: SchemoidMorphism,
    pub end1: SchemoidMorphism,
    pub projection: SchemoidMorphism,
}

/// Morphism `(f, 1_i)` of `a × I` has index `3f + i`, and `(f, u)` has index
/// `3f + 2`; object `(x, i)` has index `2x + i`.
pub fn cylinder(a: &QSchemoid) -> Cylinder {
    let schemoid = a.product(&interval());
    let end = |i: usize| {
        let f = Functor::new(
            (0..a.cat().n_objects()).map(|x| 2 * x + i).collect(),
            (0..a.cat().n_morphisms()).map(|m| 3 * m + i).collect(),
        );
        SchemoidMorphism::new(f, a, &schemoid).expect("end inclusions are schemoid morphisms")
    };
    let (end0, end1) = (end(0), end(1));
    let proj = Functor::new(
        (0..schemoid.cat().n_objects()).map(|x| x / 2).collect(),
        (0..schemoid.cat().n_morphisms()).map(|m| m / 3).collect(),
    );
    let projection = SchemoidMorphism::new(proj, &schemoid, a).expect("projection is a schemoid morphism");
    Cylinder { schemoid, end0, end1, projection }
}

/// The category on `n` objects with one non-identity morphism `φ_ij: i → j`
/// for every pair (including `i = j`, where `φ_ii` is idempotent), composed
/// by `φ_jk∘φ_ij = φ_ik`, partitioned into identities and the `φ`s.
/// Block 0 holds the `φ`s, block 1 the identities.
pub fn idempotent_chaotic(n: usize) -> QSchemoid {
    let mut raw = RawCategory::new(n);
    let ids: Vec<usize> = (0..n).map(|x| raw.morphism(format!("1_{x}"), x, x)).collect();
    let phi: Vec<usize> = (0..n * n).map(|k| raw.morphism(format!("p{}{}", k / n, k % n), k / n, k % n)).collect();
    raw.identities = ids.clone();
    for x in 0..n {
        raw.compose(ids[x], ids[x], ids[x]);
    }
    for i in 0..n {
        for j in 0..n {
            let f = phi[i * n + j];
            raw.compose(ids[j], f, f).compose(f, ids[i], f);
            for k in 0..n {
                raw.compose(phi[j * n + k], f, phi[i * n + k]);
            }
        }
    }
    let cat = raw.validate().expect("category");
    let partition =
        Partition::with_names(cat.n_morphisms(), vec![phi, ids], vec!["sigma".into(), "1".into()]).expect("partition");
    QSchemoid::new(cat, partition).expect("quasi-schemoid")
}

/// The commuting square `x → a → y`, `x → b → y` with diagonal `ε`, blocks
/// `{α, γ}`, `{β, δ}`, `{ε}` and the identities. Objects `x, a, b, y` are
/// `0..4`.
pub fn commuting_square() -> QSchemoid {
    let mut raw = RawCategory::new(4);
    let ids: Vec<usize> =
        ["1_x", "1_a", "1_b", "1_y"].iter().enumerate().map(|(o, n)| raw.morphism(*n, o, o)).collect();
    let alpha = raw.morphism("alpha", 0, 1);
    let beta = raw.morphism("beta", 1, 3);
    let gamma = raw.morphism("gamma", 0, 2);
    let delta = raw.morphism("delta", 2, 3);
    let eps = raw.morphism("epsilon", 0, 3);
    raw.identities = ids.clone();
    for f in 0..raw.names.len() {
        let (s, t) = (raw.src[f], raw.tgt[f]);
        raw.compose(ids[t], f, f);
        if f != ids[s] {
            raw.compose(f, ids[s], f);
        }
    }
    raw.compose(beta, alpha, eps).compose(delta, gamma, eps);
    let cat = raw.validate().expect("category");
    let partition = Partition::with_names(
        cat.n_morphisms(),
        vec![vec![alpha, gamma], vec![beta, delta], vec![eps], ids],
        vec!["s1".into(), "s2".into(), "s3".into(), "1".into()],
    )
    .expect("partition");
    QSchemoid::new(cat, partition).expect("quasi-schemoid")
}

fn block_signature(q: &QSchemoid, b: usize) -> (usize, usize, u32, Vec<u32>, Vec<u32>, Vec<u32>) {
    let members = q.partition().block(b);
    let ids = members.iter().filter(|&&m| q.cat().is_identity(m)).count();
    let n = q.n_blocks();
    let mut left: Vec<u32> = (0..n).map(|t| q.p(b, t, b)).collect();
    let mut right: Vec<u32> = (0..n).map(|t| q.p(t, b, b)).collect();
    let mut into: Vec<u32> = (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).map(|(s, t)| q.p(s, t, b)).collect();
    left.sort_unstable();
    right.sort_unstable();
    into.sort_unstable();
    (members.len(), ids, q.p(b, b, b), left, right, into)
}

fn object_signature(c: &FinCat, x: usize) -> (usize, usize, usize) {
    (c.incoming(x).len(), c.outgoing(x).len(), c.hom(x, x).len())
}

/// An isomorphism `a → b` and its inverse, if one exists. Blocks are only
/// matched to blocks with the same size, identity count and sorted
/// structure-constant profile, and objects to objects with the same degrees.
/// The witness is the first one in search order (objects by index, then
/// morphisms grouped by their later endpoint).
pub fn find_isomorphism(
    a: &QSchemoid,
    b: &QSchemoid,
    caps: &SearchCaps,
) -> Result<Option<(SchemoidMorphism, SchemoidMorphism)>, SearchError> {
    caps.check_objects(a.cat().n_objects())?;
    let sig_a: Vec<_> = (0..a.n_blocks()).map(|s| block_signature(a, s)).collect();
    let sig_b: Vec<_> = (0..b.n_blocks()).map(|s| block_signature(b, s)).collect();
    let obj_a: Vec<_> = (0..a.cat().n_objects()).map(|x| object_signature(a.cat(), x)).collect();
    let obj_b: Vec<_> = (0..b.cat().n_objects()).map(|x| object_signature(b.cat(), x)).collect();
    let block_ok = |s: usize, t: usize| sig_a[s] == sig_b[t];
    let obj_ok = |x: usize, y: usize| obj_a[x] == obj_b[y];
    let found = FunctorSearch::new(a.cat(), b.cat())
        .blocks(a.partition(), b.partition())
        .bijective()
        .block_filter(&block_ok)
        .object_filter(&obj_ok)
        .first();
    Ok(found.map(|(f, _)| {
        let inv = f.inverse().expect("bijective");
        let fwd = SchemoidMorphism::new(f, a, b).expect("search respects blocks");
        let back = SchemoidMorphism::new(inv, b, a).expect("block bijection with equal sizes inverts");
        (fwd, back)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_block_counts() {
        assert_eq!(interval().n_blocks(), 3);
        assert_eq!(trivial_schemoid().n_blocks(), 1);
        assert_eq!(discrete_k(&FinCat::chaotic(3)).n_blocks(), 9);
    }

    #[test]
    fn forgetful_functor() {
        let c = FinCat::chaotic(3);
        assert_eq!(forget_u(&discrete_k(&c)), c);
        assert_eq!(forget_u(&jmath(&AssocScheme::trivial(3))), FinCat::chaotic(3));
        let (a, b) = (jmath(&AssocScheme::trivial(2)), interval());
        assert_eq!(forget_u(&product_schemoid(&a, &b)), forget_u(&a).product(&forget_u(&b)));
    }

    #[test]
    fn jmath_sizes() {
        let j2 = jmath(&AssocScheme::trivial(2));
        assert_eq!((j2.cat().n_objects(), j2.cat().n_morphisms(), j2.n_blocks()), (2, 4, 2));
        let j3 = jmath(&AssocScheme::trivial(3));
        let sizes: Vec<usize> = j3.partition().blocks().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 6]);
        let jz3 = jmath(&scheme_of_group(&FinGroup::cyclic(3)));
        let sizes: Vec<usize> = jz3.partition().blocks().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 3, 3]);
    }

    #[test]
    fn jmath_constants_match_scheme() {
        let s = AssocScheme::trivial(3);
        let j = jmath(&s);
        assert_eq!(j.p(1, 1, 1), 1);
        for e in 0..2 {
            for f in 0..2 {
                for g in 0..2 {
                    assert_eq!(j.p(e, f, g), s.p(e, f, g));
                }
            }
        }
    }

    #[test]
    fn group_schemes() {
        assert_eq!(scheme_of_group(&FinGroup::cyclic(2)).matrix(), vec![vec![0, 1], vec![1, 0]]);
        let s = scheme_of_group(&FinGroup::cyclic(3));
        assert_eq!(s.n_relations(), 3);
        assert_eq!(s.transpose(1), 2);
        assert_eq!(scheme_of_group(&FinGroup::trivial()).n_points(), 1);
    }

    #[test]
    fn stilde_shapes() {
        let s = stilde(&FinGroup::cyclic(2).iota());
        assert_eq!(
            (s.schemoid().cat().n_objects(), s.schemoid().cat().n_morphisms(), s.schemoid().n_blocks()),
            (2, 4, 2)
        );
        let t = stilde(&FinGroupoid::interval());
        assert_eq!(t.schemoid().cat().n_objects(), 4);
        // t(1_0) = t(f^-1) = 0 but t(1_1) = t(f) = 1
        assert!(t.morphism(1, 0).is_none());
        assert!(t.morphism(2, 0).is_none());
        assert!(t.morphism(3, 0).is_some());
        // the identity blocks hold exactly the pairs (m, m)
        for q in [&s, &t] {
            let c = q.groupoid().category();
            let mut ids: Vec<usize> = (0..c.n_morphisms()).map(|m| q.morphism(m, m).unwrap()).collect();
            ids.sort_unstable();
            let id_blocks: Vec<usize> = (0..c.n_objects()).map(|x| c.identity(x)).collect();
            let mut union: Vec<usize> =
                id_blocks.iter().flat_map(|&b| q.schemoid().partition().block(b).to_vec()).collect();
            union.sort_unstable();
            assert_eq!(union, ids);
        }
    }

    #[test]
    fn cylinder_ends() {
        let a = jmath(&AssocScheme::trivial(2));
        let cyl = cylinder(&a);
        assert_eq!(cyl.projection.after(&cyl.end0), SchemoidMorphism::identity(&a));
        assert_eq!(cyl.projection.after(&cyl.end1), SchemoidMorphism::identity(&a));
        assert!(cyl.end0.functor.obj_map.iter().all(|x| !cyl.end1.functor.obj_map.contains(x)));
        let c = FinCat::chaotic(2);
        assert_eq!(cylinder(&discrete_k(&c)).schemoid.cat(), discrete_k(&c.product(&FinCat::arrow())).cat());
        assert_eq!(cylinder(&discrete_k(&c)).schemoid.n_blocks(), c.n_morphisms() * 3);
    }

    #[test]
    fn product_with_interval() {
        let p = product_schemoid(&jmath(&AssocScheme::trivial(2)), &interval());
        assert_eq!((p.cat().n_objects(), p.cat().n_morphisms(), p.n_blocks()), (4, 12, 6));
    }

    #[test]
    fn example_schemoids() {
        let e = idempotent_chaotic(3);
        assert_eq!(e.cat().n_morphisms(), 12);
        let (s, one) = (0, 1);
        assert_eq!(e.p(one, s, s), 1);
        assert_eq!(e.p(s, one, s), 1);
        assert_eq!(e.p(one, one, s), 0);
        assert_eq!(e.p(one, one, one), 1);
        assert_eq!(e.p(one, s, one), 0);
        assert_eq!(e.p(s, one, one), 0);
        assert_eq!(e.p(s, s, one), 0);
        assert_eq!(e.p(s, s, s), 3);
        let r = commuting_square();
        assert_eq!((r.cat().n_objects(), r.cat().n_morphisms(), r.n_blocks()), (4, 9, 4));
    }

    #[test]
    fn isomorphisms() {
        let caps = SearchCaps::default();
        let g = FinGroup::cyclic(3);
        let a = stilde(&g.iota());
        let b = jmath(&scheme_of_group(&g));
        let (f, inv) = find_isomorphism(a.schemoid(), &b, &caps).unwrap().unwrap();
        assert_eq!(inv.after(&f), SchemoidMorphism::identity(a.schemoid()));
        assert_eq!(f.functor.obj_map, vec![0, 1, 2]);
        let t2 = jmath(&AssocScheme::trivial(2));
        let t3 = jmath(&AssocScheme::trivial(3));
        assert!(find_isomorphism(&t2, &t3, &caps).unwrap().is_none());
        let (f, _) = find_isomorphism(&t3, &t3, &caps).unwrap().unwrap();
        assert_eq!(f, SchemoidMorphism::identity(&t3));
    }
}
