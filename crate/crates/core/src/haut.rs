//! The endomorphism monoid, its quotient by `≃`, and the group `haut` of
//! homotopy classes of self-homotopy equivalences. Also automorphism groups
//! and isomorphism testing for finite groups.

use std::collections::VecDeque;

use crate::constructors::StildeSchemoid;
use crate::fincat::{FinGroup, Functor};
use crate::homotopy::{enumerate_morphisms, homotopy_classes, HomotopyClasses, HomotopyError, MorphismUniverse};
use crate::schemoid::{QSchemoid, SchemoidMorphism};
use crate::search::{SearchCaps, SearchError};
use crate::Error;

/// A finite monoid given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    order: usize,
    table: Vec<usize>,
    identity: usize,
}

impl FiniteMonoid {
    /// Builds a monoid from `table[a * n + b] = ab`, checking the laws.
    pub fn new(order: usize, table: Vec<usize>, identity: usize) -> Option<FiniteMonoid> {
        let m = FiniteMonoid { order, table, identity };
        let ok = m.table.len() == order * order
            && m.table.iter().all(|&x| x < order)
            && (0..order).all(|a| m.mul(identity, a) == a && m.mul(a, identity) == a)
            && (0..order)
                .all(|a| (0..order).all(|b| (0..order).all(|c| m.mul(m.mul(a, b), c) == m.mul(a, m.mul(b, c)))));
        ok.then_some(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// A two-sided inverse of `a`, if there is one.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.order).find(|&b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity)
    }

    /// Elements with a two-sided inverse, in increasing order.
    pub fn units(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| self.inverse(a).is_some()).collect()
    }
}

/// All endomorphisms of a schemoid under composition: element `i * n + j`
/// of the table is the index of `u_i ∘ u_j`.
#[derive(Debug, Clone)]
pub struct EndoMonoid {
    pub universe: MorphismUniverse,
    pub monoid: FiniteMonoid,
}

pub fn endo_monoid(a: &QSchemoid, caps: &SearchCaps) -> Result<EndoMonoid, SearchError> {
    let universe = enumerate_morphisms(a, a, caps)?;
    let n = universe.len();
    let table = (0..n * n)
        .map(|k| {
            let f = universe.get(k / n).after(universe.get(k % n));
            universe.position(&f).expect("endomorphisms compose")
        })
        .collect();
    let identity = universe.position(&SchemoidMorphism::identity(a)).expect("identity is an endomorphism");
    let monoid = FiniteMonoid { order: n, table, identity };
    Ok(EndoMonoid { universe, monoid })
}

/// `haut(a)`: the homotopy classes of self-homotopy equivalences.
#[derive(Debug, Clone)]
pub struct HautGroup {
    /// The group; element 0 is the class of the identity, the others follow
    /// in class order.
    pub group: FinGroup,
    /// Class index (into `classes`) of each group element.
    pub unit_classes: Vec<usize>,
    /// The endomorphism monoid the quotient was taken of.
    pub endo: EndoMonoid,
    /// The `≃`-classes of all endomorphisms.
    pub classes: HomotopyClasses,
    /// The full quotient monoid `End(a)/≃`, including classes that are not
    /// units.
    pub quotient: FiniteMonoid,
}

impl HautGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Least member of the class of group element `g`.
    pub fn representative(&self, g: usize) -> &SchemoidMorphism {
        self.endo.universe.get(self.classes.representative(self.unit_classes[g]))
    }

    /// The group element containing `f`, or `None` when `f` is not a
    /// self-homotopy equivalence.
    pub fn element_of(&self, f: &SchemoidMorphism) -> Option<usize> {
        let class = self.classes.class_of[self.endo.universe.position(f)?];
        self.unit_classes.iter().position(|&c| c == class)
    }

    /// Checks that the product of classes does not depend on the chosen
    /// representatives, by trying every pair of members.
    pub fn quotient_is_well_defined(&self) -> bool {
        let m = &self.endo.monoid;
        let c = &self.classes;
        (0..m.order())
            .all(|f| (0..m.order()).all(|g| c.class_of[m.mul(f, g)] == self.quotient.mul(c.class_of[f], c.class_of[g])))
    }
}

pub fn haut_group(a: &QSchemoid, caps: &SearchCaps) -> Result<HautGroup, Error> {
    let endo = endo_monoid(a, caps)?;
    let classes = homotopy_classes(a, a, &endo.universe);
    let k = classes.len();
    let m = &endo.monoid;
    let table = (0..k * k)
        .map(|i| classes.class_of[m.mul(classes.representative(i / k), classes.representative(i % k))])
        .collect();
    let quotient = FiniteMonoid { order: k, table, identity: classes.class_of[m.identity()] };
    let e = quotient.identity();
    let unit_classes: Vec<usize> = std::iter::once(e).chain(quotient.units().into_iter().filter(|&c| c != e)).collect();
    let u = unit_classes.len();
    let local = |c: usize| unit_classes.iter().position(|&d| d == c).expect("units are closed");
    let gtable = (0..u * u).map(|i| local(quotient.mul(unit_classes[i / u], unit_classes[i % u]))).collect();
    let group = FinGroup::from_flat(u, gtable)?;
    Ok(HautGroup { group, unit_classes, endo, classes, quotient })
}

/// `Aut(G)` with its elements as permutations of the group elements.
#[derive(Debug, Clone)]
pub struct AutGroup {
    /// Automorphisms in lexicographic order; the identity is first.
    pub automorphisms: Vec<Vec<usize>>,
    /// Product `α·β = α∘β`.
    pub group: FinGroup,
}

fn is_homomorphism(g: &FinGroup, h: &FinGroup, map: &[usize]) -> bool {
    (0..g.order()).all(|a| (0..g.order()).all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b])))
}

/// All automorphisms of `g` by backtracking over bijections that fix the
/// identity and respect element orders.
pub fn aut_of_group(g: &FinGroup, caps: &SearchCaps) -> Result<AutGroup, SearchError> {
    let n = g.order();
    let orders: Vec<usize> = (0..n).map(|a| g.element_order(a)).collect();
    let mut found = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    fn rec(
        x: usize,
        g: &FinGroup,
        orders: &[usize],
        map: &mut [usize],
        used: &mut [bool],
        found: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<(), SearchError> {
        let n = g.order();
        if x == n {
            if found.len() == cap {
                return Err(SearchError::CapExceeded { cap });
            }
            found.push(map.to_vec());
            return Ok(());
        }
        for y in 1..n {
            if used[y] || orders[y] != orders[x] {
                continue;
            }
            map[x] = y;
            // every product among assigned elements landing on an assigned element
            let ok = (0..=x).all(|a| {
                (0..=x).all(|b| {
                    let ab = g.mul(a, b);
                    ab > x || map[ab] == g.mul(map[a], map[b])
                })
            });
            if ok {
                used[y] = true;
                rec(x + 1, g, orders, map, used, found, cap)?;
                used[y] = false;
            }
        }
        map[x] = usize::MAX;
        Ok(())
    }
    if n > 1 {
        rec(1, g, &orders, &mut map, &mut used, &mut found, caps.max_universe)?;
    } else {
        found.push(vec![0]);
    }
    let k = found.len();
    let table = (0..k * k)
        .map(|i| {
            let (a, b) = (&found[i / k], &found[i % k]);
            let ab: Vec<usize> = b.iter().map(|&x| a[x]).collect();
            found.binary_search(&ab).expect("automorphisms compose")
        })
        .collect();
    let group = FinGroup::from_flat(k, table).expect("automorphisms form a group");
    Ok(AutGroup { automorphisms: found, group })
}

/// Generators picked greedily in index order: each new one is the least
/// element outside the subgroup generated so far.
fn generators(g: &FinGroup) -> Vec<usize> {
    let n = g.order();
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut gens = Vec::new();
    for x in 1..n {
        if inside[x] {
            continue;
        }
        gens.push(x);
        let mut queue: VecDeque<usize> = (0..n).filter(|&y| inside[y]).collect();
        while let Some(y) = queue.pop_front() {
            for &s in &gens {
                let z = g.mul(y, s);
                if !inside[z] {
                    inside[z] = true;
                    queue.push_back(z);
                }
            }
        }
    }
    gens
}

/// Extends images of generators to a map on all of `g`; `None` when the
/// extension is inconsistent.
fn extend(g: &FinGroup, h: &FinGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let (y, img) = (g.mul(x, s), h.mul(map[x], t));
            if map[y] == usize::MAX {
                map[y] = img;
                queue.push_back(y);
            } else if map[y] != img {
                return None;
            }
        }
    }
    Some(map)
}

/// An isomorphism `g → h` as a map on elements, if one exists.
pub fn group_isomorphism(g: &FinGroup, h: &FinGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.order_profile() != h.order_profile() {
        return None;
    }
    let gens = generators(g);
    let candidates: Vec<Vec<usize>> =
        gens.iter().map(|&s| (0..h.order()).filter(|&t| h.element_order(t) == g.element_order(s)).collect()).collect();
    let mut images = vec![0; gens.len()];
    fn rec(
        i: usize,
        g: &FinGroup,
        h: &FinGroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        images: &mut [usize],
    ) -> Option<Vec<usize>> {
        if i == gens.len() {
            let map = extend(g, h, gens, images)?;
            let mut seen = vec![false; h.order()];
            let bijective = map.iter().all(|&y| !std::mem::replace(&mut seen[y], true));
            return (bijective && is_homomorphism(g, h, &map)).then_some(map);
        }
        for &t in &candidates[i] {
            images[i] = t;
            if let Some(map) = rec(i + 1, g, h, gens, candidates, images) {
                return Some(map);
            }
        }
        None
    }
    rec(0, g, h, &gens, &candidates, &mut images)
}

pub fn group_isomorphic(g: &FinGroup, h: &FinGroup) -> bool {
    group_isomorphism(g, h).is_some()
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Names the isomorphism type of `g` when it is trivial, cyclic, symmetric,
/// the Klein four-group or dihedral.
pub fn isomorphism_type(g: &FinGroup) -> Option<String> {
    let n = g.order();
    if n == 1 {
        return Some("trivial".into());
    }
    if g.order_profile().last() == Some(&n) {
        return Some(format!("Z/{n}"));
    }
    for k in 3..=5 {
        if factorial(k) == n && group_isomorphic(g, &FinGroup::symmetric(k)) {
            return Some(format!("Sym({k})"));
        }
    }
    if n == 4 {
        return Some("Z/2xZ/2".into());
    }
    if n.is_multiple_of(2) && n >= 6 && group_isomorphic(g, &FinGroup::dihedral(n / 2)) {
        return Some(format!("D_{}", n / 2));
    }
    None
}

/// The element of `haut(S̃(H))` containing `S̃(u)` for an automorphism `u` of
/// the groupoid `H`.
pub fn induced_haut_map(stilde: &StildeSchemoid, haut: &HautGroup, u: &Functor) -> Result<usize, Error> {
    let h = stilde.groupoid().category();
    u.validate(h, h).map_err(|e| HomotopyError::NotAutomorphism(e.to_string()))?;
    if !u.is_bijective(h) {
        return Err(HomotopyError::NotAutomorphism("not bijective".into()).into());
    }
    let q = stilde.schemoid();
    let su = SchemoidMorphism::new(stilde.induced(u), q, q)?;
    haut.element_of(&su).ok_or_else(|| HomotopyError::NotAutomorphism("S̃(u) is not a unit".into()).into())
}

/// Replaces an automorphism `u` of `S̃(H)` by the base-point preserving
/// `u′(i) = u(i)∘u(1_{s(i)})⁻¹`, which sends identities of `H` to
/// identities and is homotopic to `u`.
pub fn normalize_groupoid_automorphism(
    stilde: &StildeSchemoid,
    u: &SchemoidMorphism,
) -> Result<SchemoidMorphism, HomotopyError> {
    let q = stilde.schemoid();
    let not_auto = |why: &str| HomotopyError::NotAutomorphism(why.to_string());
    SchemoidMorphism::new(u.functor.clone(), q, q).map_err(|e| not_auto(&e.to_string()))?;
    if !u.is_isomorphism(q, q) {
        return Err(not_auto("not invertible"));
    }
    let g = stilde.groupoid();
    let c = g.category();
    let obj_map: Vec<usize> = (0..c.n_morphisms())
        .map(|i| c.compose(u.obj(i), g.inv(u.obj(c.identity(c.src(i))))).ok_or_else(|| not_auto("u′ is undefined")))
        .collect::<Result<_, _>>()?;
    let mor_map: Vec<usize> = (0..q.cat().n_morphisms())
        .map(|m| {
            let (j, i) = stilde.pair(m);
            stilde.morphism(obj_map[j], obj_map[i]).ok_or_else(|| not_auto("u′ does not preserve morphisms"))
        })
        .collect::<Result<_, _>>()?;
    SchemoidMorphism::new(Functor::new(obj_map, mor_map), q, q).map_err(|e| not_auto(&e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{jmath, scheme_of_group, stilde, trivial_schemoid};
    use crate::homotopy::thin_homotopy_criterion;
    use crate::schemoid::AssocScheme;

    #[test]
    fn endo_monoid_orders() {
        let caps = SearchCaps::default();
        assert_eq!(endo_monoid(&jmath(&AssocScheme::trivial(3)), &caps).unwrap().monoid.order(), 9);
        assert_eq!(endo_monoid(&jmath(&AssocScheme::trivial(2)), &caps).unwrap().monoid.order(), 4);
        assert_eq!(endo_monoid(&trivial_schemoid(), &caps).unwrap().monoid.order(), 1);
    }

    #[test]
    fn haut_of_small_trivial_schemes() {
        let caps = SearchCaps::default();
        let h2 = haut_group(&jmath(&AssocScheme::trivial(2)), &caps).unwrap();
        assert_eq!(h2.order(), 1);
        let h3 = haut_group(&jmath(&AssocScheme::trivial(3)), &caps).unwrap();
        assert_eq!(h3.order(), 6);
        assert!(group_isomorphic(&h3.group, &FinGroup::symmetric(3)));
        assert!(h3.quotient_is_well_defined());
        assert_eq!(isomorphism_type(&h3.group).as_deref(), Some("Sym(3)"));
    }

    #[test]
    fn automorphism_group_orders() {
        let caps = SearchCaps::default();
        let orders: Vec<usize> = [FinGroup::cyclic(2), FinGroup::cyclic(3), FinGroup::cyclic(4)]
            .iter()
            .map(|g| aut_of_group(g, &caps).unwrap().group.order())
            .collect();
        assert_eq!(orders, vec![1, 2, 2]);
        let klein = FinGroup::cyclic(2).product(&FinGroup::cyclic(2));
        let aut = aut_of_group(&klein, &caps).unwrap();
        assert_eq!(aut.group.order(), 6);
        assert_eq!(aut.automorphisms[0], vec![0, 1, 2, 3]);
    }

    #[test]
    fn isomorphism_tests() {
        let klein = FinGroup::cyclic(2).product(&FinGroup::cyclic(2));
        assert!(!group_isomorphic(&FinGroup::cyclic(4), &klein));
        assert!(group_isomorphic(&FinGroup::symmetric(3), &FinGroup::dihedral(3)));
        assert!(group_isomorphic(&FinGroup::cyclic(6), &FinGroup::cyclic(2).product(&FinGroup::cyclic(3))));
        assert!(!group_isomorphic(&FinGroup::cyclic(6), &FinGroup::symmetric(3)));
        assert_eq!(isomorphism_type(&FinGroup::dihedral(4)).as_deref(), Some("D_4"));
        assert_eq!(isomorphism_type(&FinGroup::cyclic(5)).as_deref(), Some("Z/5"));
        assert_eq!(isomorphism_type(&klein).as_deref(), Some("Z/2xZ/2"));
    }

    #[test]
    fn haut_of_z3_scheme_is_aut_z3() {
        let caps = SearchCaps::default();
        let h = haut_group(&jmath(&scheme_of_group(&FinGroup::cyclic(3))), &caps).unwrap();
        assert_eq!(h.order(), 2);
    }

    #[test]
    fn induced_classes_and_normalization_on_z3() {
        let caps = SearchCaps::default();
        let g = FinGroup::cyclic(3);
        let s = stilde(&g.iota());
        let h = haut_group(s.schemoid(), &caps).unwrap();
        let aut = aut_of_group(&g, &caps).unwrap();
        let images: Vec<usize> = aut
            .automorphisms
            .iter()
            .map(|a| induced_haut_map(&s, &h, &Functor::new(vec![0], a.clone())).unwrap())
            .collect();
        assert_eq!(images, vec![0, 1]);
        // object map i ↦ i + 1: right translation, not base-point preserving
        let shift = SchemoidMorphism::new(
            Functor::new(
                vec![1, 2, 0],
                (0..9).map(|m| s.morphism((s.pair(m).0 + 1) % 3, (s.pair(m).1 + 1) % 3).unwrap()).collect(),
            ),
            s.schemoid(),
            s.schemoid(),
        )
        .unwrap();
        let normal = normalize_groupoid_automorphism(&s, &shift).unwrap();
        assert_eq!(normal.obj(0), 0);
        assert!(thin_homotopy_criterion(&s, &s, &shift, &normal).unwrap());
        let id = SchemoidMorphism::identity(s.schemoid());
        assert_eq!(normalize_groupoid_automorphism(&s, &id).unwrap(), id);
        let bad = Functor::new(vec![0], vec![0, 0, 0]);
        assert!(induced_haut_map(&s, &h, &bad).is_err());
    }
}
