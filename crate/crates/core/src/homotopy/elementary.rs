use super::HomotopyError;
use crate::constructors::cylinder;
use crate::fincat::Functor;
use crate::schemoid::{QSchemoid, SchemoidMorphism};

/// A certificate for `H: F ⇒ G`. Only the diagonal fillers are stored:
/// `diag[x]: F(x) → G(x)`. The cylinder functor is rebuilt on demand with
/// `H(m, u) = G(m)∘diag[src m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Homotopy {
    pub from: SchemoidMorphism,
    pub to: SchemoidMorphism,
    pub diag: Vec<usize>,
}

impl Homotopy {
    /// `diag[x] = 1_{F(x)}`.
    pub fn reflexive(f: &SchemoidMorphism, b: &QSchemoid) -> Homotopy {
        let diag = f.functor.obj_map.iter().map(|&y| b.cat().identity(y)).collect();
        Homotopy { from: f.clone(), to: f.clone(), diag }
    }

    /// The functor `a × I → b` this certificate describes.
    pub fn cylinder_functor(&self, a: &QSchemoid, b: &QSchemoid) -> Functor {
        let c = a.cat();
        let obj_map = (0..c.n_objects() * 2)
            .map(|p| if p % 2 == 0 { self.from.obj(p / 2) } else { self.to.obj(p / 2) })
            .collect();
        let mor_map = (0..c.n_morphisms() * 3)
            .map(|k| {
                let m = k / 3;
                match k % 3 {
                    0 => self.from.mor(m),
                    1 => self.to.mor(m),
                    _ => b.cat().compose(self.to.mor(m), self.diag[c.src(m)]).unwrap_or(usize::MAX),
                }
            })
            .collect();
        Functor::new(obj_map, mor_map)
    }

    /// Rebuilds `H: a × I → b` and checks it is a schemoid morphism with
    /// `H∘ε_0 = F` and `H∘ε_1 = G`.
    pub fn verify(&self, a: &QSchemoid, b: &QSchemoid) -> Result<SchemoidMorphism, HomotopyError> {
        if self.diag.len() != a.cat().n_objects() {
            return Err(HomotopyError::InvalidCertificate("diagonal has the wrong length".into()));
        }
        let cyl = cylinder(a);
        let h = SchemoidMorphism::new(self.cylinder_functor(a, b), &cyl.schemoid, b)
            .map_err(|e| HomotopyError::InvalidCertificate(e.to_string()))?;
        if h.after(&cyl.end0) != self.from || h.after(&cyl.end1) != self.to {
            return Err(HomotopyError::InvalidCertificate("ends do not restrict to F and G".into()));
        }
        Ok(h)
    }

    /// `K∘H` for `k: b → e`.
    pub fn whisker_left(&self, k: &SchemoidMorphism) -> Homotopy {
        Homotopy {
            from: k.after(&self.from),
            to: k.after(&self.to),
            diag: self.diag.iter().map(|&d| k.mor(d)).collect(),
        }
    }

    /// `H∘(K × I)` for `k: c → a`.
    pub fn whisker_right(&self, k: &SchemoidMorphism) -> Homotopy {
        Homotopy {
            from: self.from.after(k),
            to: self.to.after(k),
            diag: k.functor.obj_map.iter().map(|&x| self.diag[x]).collect(),
        }
    }
}

pub(crate) fn check_endpoints(a: &QSchemoid, b: &QSchemoid, f: &SchemoidMorphism) -> Result<(), HomotopyError> {
    let ok = f.functor.obj_map.len() == a.cat().n_objects()
        && f.functor.mor_map.len() == a.cat().n_morphisms()
        && f.block_image.len() == a.n_blocks()
        && f.functor.obj_map.iter().all(|&y| y < b.cat().n_objects())
        && f.functor.mor_map.iter().all(|&m| m < b.cat().n_morphisms());
    if ok {
        Ok(())
    } else {
        Err(HomotopyError::SourceTargetMismatch)
    }
}

const UNSET: usize = usize::MAX;

/// Depth-first search for diagonal fillers, objects in index order and
/// candidates in index order. `extra(diag, x)` is consulted after `diag[x]`
/// is placed, with `diag[..=x]` set.
pub(crate) fn search_diagonal(
    a: &QSchemoid,
    b: &QSchemoid,
    f: &SchemoidMorphism,
    g: &SchemoidMorphism,
    extra: &dyn Fn(&[usize], usize) -> bool,
) -> Option<Vec<usize>> {
    let c = a.cat();
    let n = c.n_objects();
    let mut square_due = vec![Vec::new(); n];
    let mut block_due = vec![Vec::new(); n];
    for m in 0..c.n_morphisms() {
        square_due[c.src(m).max(c.tgt(m))].push(m);
        block_due[c.src(m)].push(m);
    }
    struct Ctx<'a> {
        a: &'a QSchemoid,
        b: &'a QSchemoid,
        f: &'a SchemoidMorphism,
        g: &'a SchemoidMorphism,
        square_due: Vec<Vec<usize>>,
        block_due: Vec<Vec<usize>>,
        extra: &'a dyn Fn(&[usize], usize) -> bool,
    }
    fn rec(x: usize, cx: &Ctx, diag: &mut Vec<usize>, block_img: &mut Vec<usize>) -> bool {
        let (ca, cb) = (cx.a.cat(), cx.b.cat());
        if x == ca.n_objects() {
            return true;
        }
        for &cand in cb.hom(cx.f.obj(x), cx.g.obj(x)) {
            diag[x] = cand;
            let mut fresh = Vec::new();
            let mut ok = true;
            for &m in &cx.block_due[x] {
                let d = cb.compose(cx.g.mor(m), cand).expect("endpoints match");
                let (sb, tb) = (cx.a.block_of(m), cx.b.block_of(d));
                if block_img[sb] == UNSET {
                    block_img[sb] = tb;
                    fresh.push(sb);
                } else if block_img[sb] != tb {
                    ok = false;
                    break;
                }
            }
            ok = ok
                && cx.square_due[x]
                    .iter()
                    .all(|&m| cb.compose(cx.g.mor(m), diag[ca.src(m)]) == cb.compose(diag[ca.tgt(m)], cx.f.mor(m)))
                && (cx.extra)(diag, x);
            if ok && rec(x + 1, cx, diag, block_img) {
                return true;
            }
            for sb in fresh {
                block_img[sb] = UNSET;
            }
        }
        diag[x] = UNSET;
        false
    }
    let cx = Ctx { a, b, f, g, square_due, block_due, extra };
    let mut diag = vec![UNSET; n];
    let mut block_img = vec![UNSET; a.n_blocks()];
    rec(0, &cx, &mut diag, &mut block_img).then_some(diag)
}

/// Searches for an elementary homotopy `F ⇒ G` between morphisms `a → b`.
///
/// A certificate is a family `diag[x]: F(x) → G(x)` such that every square
/// `G(m)∘diag[src m] = diag[tgt m]∘F(m)` commutes and, for every block `σ` of
/// `a`, all diagonals `G(m)∘diag[src m]` with `m ∈ σ` lie in one block of
/// `b`. Identity morphisms take part in the block condition like any other
/// member of their block. Returns the least certificate in index order.
pub fn elementary_homotopy(
    a: &QSchemoid,
    b: &QSchemoid,
    f: &SchemoidMorphism,
    g: &SchemoidMorphism,
) -> Result<Option<Homotopy>, HomotopyError> {
    check_endpoints(a, b, f)?;
    check_endpoints(a, b, g)?;
    Ok(search_diagonal(a, b, f, g, &|_, _| true).map(|diag| Homotopy { from: f.clone(), to: g.clone(), diag }))
}

/// An elementary homotopy in either direction.
pub(crate) fn related(a: &QSchemoid, b: &QSchemoid, f: &SchemoidMorphism, g: &SchemoidMorphism) -> bool {
    search_diagonal(a, b, f, g, &|_, _| true).is_some() || search_diagonal(a, b, g, f, &|_, _| true).is_some()
}
