//! Backtracking enumeration of functors between finite categories, optionally
//! constrained to respect morphism partitions and to be bijective.
//!
//! Objects are assigned in increasing index order. Right after object `x`
//! is assigned, every non-identity morphism whose endpoints are both at most
//! `x` (and one of which is `x`) is assigned, in increasing index order.
//! Composition constraints are checked as soon as all three morphisms of a
//! composite are assigned.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::fincat::{FinCat, Functor};
use crate::schemoid::Partition;

/// Limits on exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchCaps {
    /// Largest number of source objects a search accepts.
    pub max_objects: usize,
    /// Largest number of morphisms an enumerated universe may contain.
    pub max_universe: usize,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps { max_objects: 8, max_universe: 20_000 }
    }
}

impl SearchCaps {
    pub fn with_universe(max_universe: usize) -> Self {
        SearchCaps { max_universe, ..Default::default() }
    }

    pub(crate) fn check_objects(&self, n: usize) -> Result<(), SearchError> {
        if n > self.max_objects {
            Err(SearchError::TooManyObjects { objects: n, cap: self.max_objects })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search source has {objects} objects, above the cap of {cap}")]
    TooManyObjects { objects: usize, cap: usize },
    #[error("search universe exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },
}

#[derive(Clone, Copy)]
enum Var {
    Obj(usize),
    Mor(usize),
}

const UNSET: usize = usize::MAX;

pub(crate) struct FunctorSearch<'a> {
    src: &'a FinCat,
    tgt: &'a FinCat,
    blocks: Option<(&'a Partition, &'a Partition)>,
    bijective: bool,
    obj_ok: Option<&'a dyn Fn(usize, usize) -> bool>,
    block_ok: Option<&'a dyn Fn(usize, usize) -> bool>,
}

impl<'a> FunctorSearch<'a> {
    pub fn new(src: &'a FinCat, tgt: &'a FinCat) -> Self {
        FunctorSearch { src, tgt, blocks: None, bijective: false, obj_ok: None, block_ok: None }
    }

    pub fn blocks(mut self, src: &'a Partition, tgt: &'a Partition) -> Self {
        self.blocks = Some((src, tgt));
        self
    }

    pub fn bijective(mut self) -> Self {
        self.bijective = true;
        self
    }

    pub fn object_filter(mut self, f: &'a dyn Fn(usize, usize) -> bool) -> Self {
        self.obj_ok = Some(f);
        self
    }

    pub fn block_filter(mut self, f: &'a dyn Fn(usize, usize) -> bool) -> Self {
        self.block_ok = Some(f);
        self
    }

    /// Calls `visit` for each solution with the functor and, when partitions
    /// are set, the induced block map.
    pub fn run<F>(&self, mut visit: F)
    where
        F: FnMut(&Functor, &[usize]) -> ControlFlow<()>,
    {
        let (src, tgt) = (self.src, self.tgt);
        if self.bijective {
            if src.n_objects() != tgt.n_objects() || src.n_morphisms() != tgt.n_morphisms() {
                return;
            }
            if let Some((a, b)) = self.blocks {
                if a.n_blocks() != b.n_blocks() {
                    return;
                }
            }
        }
        if src.n_objects() > 0 && tgt.n_objects() == 0 {
            return;
        }

        let mut order = Vec::new();
        let mut step_of = vec![0usize; src.n_morphisms()];
        for x in 0..src.n_objects() {
            step_of[src.identity(x)] = order.len();
            order.push(Var::Obj(x));
            for m in 0..src.n_morphisms() {
                let (s, t) = (src.src(m), src.tgt(m));
                if !src.is_identity(m) && s.max(t) == x {
                    step_of[m] = order.len();
                    order.push(Var::Mor(m));
                }
            }
        }
        let mut checks = vec![Vec::new(); order.len()];
        for (g, f) in src.composable_pairs() {
            if src.is_identity(g) || src.is_identity(f) {
                continue;
            }
            let h = src.compose(g, f).unwrap();
            let at = step_of[g].max(step_of[f]).max(step_of[h]);
            checks[at].push((g, f, h));
        }

        let n_src_blocks = self.blocks.map_or(0, |(a, _)| a.n_blocks());
        let n_tgt_blocks = self.blocks.map_or(0, |(_, b)| b.n_blocks());
        let mut state = State {
            obj: vec![UNSET; src.n_objects()],
            mor: vec![UNSET; src.n_morphisms()],
            block: vec![UNSET; n_src_blocks],
            used_obj: vec![false; if self.bijective { tgt.n_objects() } else { 0 }],
            used_mor: vec![false; if self.bijective { tgt.n_morphisms() } else { 0 }],
            used_block: vec![false; if self.bijective { n_tgt_blocks } else { 0 }],
        };
        let _ = self.rec(0, &order, &checks, &mut state, &mut visit);
    }

    fn rec<F>(
        &self,
        step: usize,
        order: &[Var],
        checks: &[Vec<(usize, usize, usize)>],
        st: &mut State,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&Functor, &[usize]) -> ControlFlow<()>,
    {
        if step == order.len() {
            let functor = Functor::new(st.obj.clone(), st.mor.clone());
            return visit(&functor, &st.block);
        }
        match order[step] {
            Var::Obj(x) => {
                for y in 0..self.tgt.n_objects() {
                    if self.bijective && st.used_obj[y] {
                        continue;
                    }
                    if let Some(ok) = self.obj_ok {
                        if !ok(x, y) {
                            continue;
                        }
                    }
                    st.obj[x] = y;
                    if self.bijective {
                        st.used_obj[y] = true;
                    }
                    let e = self.src.identity(x);
                    if let Some(undo) = self.assign(e, self.tgt.identity(y), st) {
                        if self.checks_hold(&checks[step], st) {
                            self.rec(step + 1, order, checks, st, visit)?;
                        }
                        self.unassign(e, undo, st);
                    }
                    if self.bijective {
                        st.used_obj[y] = false;
                    }
                    st.obj[x] = UNSET;
                }
            }
            Var::Mor(m) => {
                let (a, b) = (st.obj[self.src.src(m)], st.obj[self.src.tgt(m)]);
                for &img in self.tgt.hom(a, b) {
                    if let Some(undo) = self.assign(m, img, st) {
                        if self.checks_hold(&checks[step], st) {
                            self.rec(step + 1, order, checks, st, visit)?;
                        }
                        self.unassign(m, undo, st);
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// Returns `Some(new_block)` on success, where `new_block` records a
    /// block image set by this assignment.
    fn assign(&self, m: usize, img: usize, st: &mut State) -> Option<Option<usize>> {
        if self.bijective && st.used_mor[img] {
            return None;
        }
        let mut fresh = None;
        if let Some((a, b)) = self.blocks {
            let (sb, tb) = (a.block_of(m), b.block_of(img));
            if st.block[sb] == UNSET {
                if self.bijective && st.used_block[tb] {
                    return None;
                }
                if let Some(ok) = self.block_ok {
                    if !ok(sb, tb) {
                        return None;
                    }
                }
                st.block[sb] = tb;
                if self.bijective {
                    st.used_block[tb] = true;
                }
                fresh = Some(sb);
            } else if st.block[sb] != tb {
                return None;
            }
        }
        st.mor[m] = img;
        if self.bijective {
            st.used_mor[img] = true;
        }
        Some(fresh)
    }

    fn unassign(&self, m: usize, fresh: Option<usize>, st: &mut State) {
        if self.bijective {
            st.used_mor[st.mor[m]] = false;
        }
        st.mor[m] = UNSET;
        if let Some(sb) = fresh {
            if self.bijective {
                st.used_block[st.block[sb]] = false;
            }
            st.block[sb] = UNSET;
        }
    }

    fn checks_hold(&self, checks: &[(usize, usize, usize)], st: &State) -> bool {
        checks.iter().all(|&(g, f, h)| self.tgt.compose(st.mor[g], st.mor[f]) == Some(st.mor[h]))
    }

    /// All solutions, sorted, failing once more than `cap` are found.
    pub fn collect(&self, cap: usize) -> Result<Vec<(Functor, Vec<usize>)>, SearchError> {
        let mut out = Vec::new();
        let mut over = false;
        self.run(|f, b| {
            if out.len() == cap {
                over = true;
                return ControlFlow::Break(());
            }
            out.push((f.clone(), b.to_vec()));
            ControlFlow::Continue(())
        });
        if over {
            return Err(SearchError::CapExceeded { cap });
        }
        out.sort();
        Ok(out)
    }

    pub fn first(&self) -> Option<(Functor, Vec<usize>)> {
        let mut found = None;
        self.run(|f, b| {
            found = Some((f.clone(), b.to_vec()));
            ControlFlow::Break(())
        });
        found
    }
}

struct State {
    obj: Vec<usize>,
    mor: Vec<usize>,
    block: Vec<usize>,
    used_obj: Vec<bool>,
    used_mor: Vec<bool>,
    used_block: Vec<bool>,
}

/// Every functor `src → tgt`, in lexicographic order.
pub fn enumerate_functors(src: &FinCat, tgt: &FinCat, caps: &SearchCaps) -> Result<Vec<Functor>, SearchError> {
    caps.check_objects(src.n_objects())?;
    Ok(FunctorSearch::new(src, tgt).collect(caps.max_universe)?.into_iter().map(|(f, _)| f).collect())
}
