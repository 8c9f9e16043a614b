//! Natural transformations and strong homotopy between functors of finite
//! categories.

use std::collections::VecDeque;

use super::{FinCat, Functor};
use crate::homotopy::HomotopyError;
use crate::search::{enumerate_functors, SearchCaps};
use crate::Error;

fn check_shape(c: &FinCat, d: &FinCat, f: &Functor) -> Result<(), HomotopyError> {
    let fits = f.obj_map.len() == c.n_objects()
        && f.mor_map.len() == c.n_morphisms()
        && f.obj_map.iter().all(|&y| y < d.n_objects())
        && f.mor_map.iter().all(|&g| g < d.n_morphisms());
    if fits {
        Ok(())
    } else {
        Err(HomotopyError::SourceTargetMismatch)
    }
}

/// Finds the least components `η_x: f(x) → g(x)` (searching objects in
/// index order, candidates in index order) with
/// `g(m)∘η_{src m} = η_{tgt m}∘f(m)` for every morphism `m`.
pub fn natural_transformation(
    c: &FinCat,
    d: &FinCat,
    f: &Functor,
    g: &Functor,
) -> Result<Option<Vec<usize>>, HomotopyError> {
    check_shape(c, d, f)?;
    check_shape(c, d, g)?;
    // Morphisms to check once object x gets its component.
    let mut due = vec![Vec::new(); c.n_objects()];
    for m in 0..c.n_morphisms() {
        due[c.src(m).max(c.tgt(m))].push(m);
    }
    let mut eta = vec![usize::MAX; c.n_objects()];
    fn rec(x: usize, c: &FinCat, d: &FinCat, f: &Functor, g: &Functor, due: &[Vec<usize>], eta: &mut [usize]) -> bool {
        if x == c.n_objects() {
            return true;
        }
        for &cand in d.hom(f.obj_map[x], g.obj_map[x]) {
            eta[x] = cand;
            let ok = due[x]
                .iter()
                .all(|&m| d.compose(g.mor_map[m], eta[c.src(m)]) == d.compose(eta[c.tgt(m)], f.mor_map[m]));
            if ok && rec(x + 1, c, d, f, g, due, eta) {
                return true;
            }
        }
        eta[x] = usize::MAX;
        false
    }
    Ok(rec(0, c, d, f, g, &due, &mut eta).then_some(eta))
}

pub fn natural_transformation_exists(c: &FinCat, d: &FinCat, f: &Functor, g: &Functor) -> Result<bool, HomotopyError> {
    Ok(natural_transformation(c, d, f, g)?.is_some())
}

/// Strong homotopy of functors `c → d`: `f` and `g` are joined by a zigzag of
/// natural transformations through the finite universe of all functors.
pub fn cat_strong_homotopic(
    c: &FinCat,
    d: &FinCat,
    f: &Functor,
    g: &Functor,
    caps: &SearchCaps,
) -> Result<bool, Error> {
    f.validate(c, d)?;
    g.validate(c, d)?;
    if f == g {
        return Ok(true);
    }
    if natural_transformation_exists(c, d, f, g)? || natural_transformation_exists(c, d, g, f)? {
        return Ok(true);
    }
    let universe = enumerate_functors(c, d, caps)?;
    let start = universe.binary_search(f).map_err(|_| HomotopyError::UniverseMismatch)?;
    let goal = universe.binary_search(g).map_err(|_| HomotopyError::UniverseMismatch)?;
    let mut seen = vec![false; universe.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        for j in 0..universe.len() {
            if seen[j] {
                continue;
            }
            let (a, b) = (&universe[i], &universe[j]);
            if natural_transformation_exists(c, d, a, b)? || natural_transformation_exists(c, d, b, a)? {
                if j == goal {
                    return Ok(true);
                }
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    Ok(false)
}
