use thiserror::Error;

use super::{CategoryError, FinCat, RawCategory};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("the Cayley table is empty")]
    Empty,
    #[error("row {0} does not have the table's order as length")]
    NotSquare(usize),
    #[error("entry ({a}, {b}) is out of range")]
    EntryOutOfRange { a: usize, b: usize },
    #[error("element 0 is not a two-sided identity (fails at {0})")]
    IdentityViolation(usize),
    #[error("element {0} has no two-sided inverse")]
    InverseMissing(usize),
    #[error("associativity fails for ({a}, {b}, {c})")]
    AssociativityViolation { a: usize, b: usize, c: usize },
}

/// A finite group given by its Cayley table, with element 0 the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl FinGroup {
    /// `cayley[a][b] = ab`.
    pub fn from_table(cayley: &[Vec<usize>]) -> Result<FinGroup, GroupError> {
        let n = cayley.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in cayley.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare(a));
            }
            for (b, &ab) in row.iter().enumerate() {
                if ab >= n {
                    return Err(GroupError::EntryOutOfRange { a, b });
                }
                table.push(ab);
            }
        }
        FinGroup::from_flat(n, table)
    }

    pub(crate) fn from_flat(n: usize, table: Vec<usize>) -> Result<FinGroup, GroupError> {
        let mul = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            if mul(0, a) != a || mul(a, 0) != a {
                return Err(GroupError::IdentityViolation(a));
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n).find(|&b| mul(a, b) == 0 && mul(b, a) == 0).ok_or(GroupError::InverseMissing(a))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(GroupError::AssociativityViolation { a, b, c });
                    }
                }
            }
        }
        Ok(FinGroup { order: n, table, inverse })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Order of the element `a`.
    pub fn element_order(&self, a: usize) -> usize {
        let (mut x, mut k) = (a, 1);
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted element orders; an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        p.sort_unstable();
        p
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn trivial() -> FinGroup {
        FinGroup::cyclic(1)
    }

    /// `Z/n` with element `k` the residue `k`.
    pub fn cyclic(n: usize) -> FinGroup {
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        FinGroup::from_flat(n, table).expect("cyclic group")
    }

    /// Direct product, elements `(a, b)` at index `a * |other| + b`.
    pub fn product(&self, other: &FinGroup) -> FinGroup {
        let (n1, n2) = (self.order, other.order);
        let n = n1 * n2;
        let table = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                self.mul(x / n2, y / n2) * n2 + other.mul(x % n2, y % n2)
            })
            .collect();
        FinGroup::from_flat(n, table).expect("product of groups")
    }

    /// `Sym(k)`: permutations of `0..k` in lexicographic order, product
    /// `(pq)(i) = p(q(i))`.
    pub fn symmetric(k: usize) -> FinGroup {
        let perms = permutations(k);
        let n = perms.len();
        let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let mut table = Vec::with_capacity(n * n);
        for p in &perms {
            for q in &perms {
                let pq: Vec<usize> = q.iter().map(|&i| p[i]).collect();
                table.push(index(&pq));
            }
        }
        FinGroup::from_flat(n, table).expect("symmetric group")
    }

    /// Dihedral group of order `2k`: element `r^a s^b` at index `b * k + a`.
    pub fn dihedral(k: usize) -> FinGroup {
        let n = 2 * k;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (x % k, x / k);
                let (c, d) = (y % k, y / k);
                // r^a s^b r^c s^d = r^(a ± c) s^(b + d)
                let rot = if b == 0 { (a + c) % k } else { (a + k - c) % k };
                table.push(((b + d) % 2) * k + rot);
            }
        }
        FinGroup::from_flat(n, table).expect("dihedral group")
    }

    /// The one-object groupoid of this group.
    pub fn iota(&self) -> FinGroupoid {
        let mut raw = RawCategory::new(1);
        for a in 0..self.order {
            raw.morphism(format!("g{a}"), 0, 0);
        }
        raw.identities = vec![0];
        for a in 0..self.order {
            for b in 0..self.order {
                raw.compose(a, b, self.mul(a, b));
            }
        }
        let cat = raw.validate().expect("group category is valid");
        FinGroupoid { cat, inverse: self.inverse.clone() }
    }
}

pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(k, &mut cur, &mut used, &mut out);
    out
}

/// A finite category in which every morphism is invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGroupoid {
    cat: FinCat,
    inverse: Vec<usize>,
}

impl FinGroupoid {
    pub fn from_raw(raw: &RawCategory) -> Result<FinGroupoid, CategoryError> {
        FinGroupoid::from_category(raw.validate()?)
    }

    pub fn from_category(cat: FinCat) -> Result<FinGroupoid, CategoryError> {
        let inverse = (0..cat.n_morphisms())
            .map(|f| {
                cat.hom(cat.tgt(f), cat.src(f))
                    .iter()
                    .copied()
                    .find(|&g| {
                        cat.compose(g, f) == Some(cat.identity(cat.src(f)))
                            && cat.compose(f, g) == Some(cat.identity(cat.tgt(f)))
                    })
                    .ok_or(CategoryError::InverseMissing(f))
            })
            .collect::<Result<_, _>>()?;
        Ok(FinGroupoid { cat, inverse })
    }

    pub fn category(&self) -> &FinCat {
        &self.cat
    }

    pub fn inv(&self, f: usize) -> usize {
        self.inverse[f]
    }

    /// Two objects joined by a single isomorphism `f: 0 → 1` and its inverse.
    pub fn interval() -> FinGroupoid {
        let mut raw = RawCategory::new(2);
        let e0 = raw.morphism("1_0", 0, 0);
        let e1 = raw.morphism("1_1", 1, 1);
        let f = raw.morphism("f", 0, 1);
        let g = raw.morphism("f^-1", 1, 0);
        raw.identities = vec![e0, e1];
        raw.compose(e0, e0, e0).compose(e1, e1, e1);
        raw.compose(f, e0, f).compose(e1, f, f).compose(g, e1, g).compose(e0, g, g);
        raw.compose(g, f, e0).compose(f, g, e1);
        FinGroupoid::from_raw(&raw).expect("interval groupoid")
    }
}
