use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use super::elementary::{check_endpoints, related, search_diagonal};
use super::{ChainStep, Homotopy, HomotopyChain, HomotopyError};
use crate::fincat::Functor;
use crate::schemoid::{QSchemoid, SchemoidMorphism};
use crate::search::{FunctorSearch, SearchCaps, SearchError};

/// Every schemoid morphism between two fixed schemoids, sorted.
#[derive(Debug, Clone)]
pub struct MorphismUniverse {
    morphisms: Vec<SchemoidMorphism>,
    index: HashMap<Functor, usize>,
}

impl MorphismUniverse {
    pub fn from_sorted(morphisms: Vec<SchemoidMorphism>) -> Self {
        let index = morphisms.iter().enumerate().map(|(i, m)| (m.functor.clone(), i)).collect();
        MorphismUniverse { morphisms, index }
    }

    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn get(&self, i: usize) -> &SchemoidMorphism {
        &self.morphisms[i]
    }

    pub fn morphisms(&self) -> &[SchemoidMorphism] {
        &self.morphisms
    }

    pub fn position(&self, f: &SchemoidMorphism) -> Option<usize> {
        self.index.get(&f.functor).copied()
    }

    pub fn position_of_functor(&self, f: &Functor) -> Option<usize> {
        self.index.get(f).copied()
    }
}

/// All schemoid morphisms `a → b` in lexicographic order.
pub fn enumerate_morphisms(a: &QSchemoid, b: &QSchemoid, caps: &SearchCaps) -> Result<MorphismUniverse, SearchError> {
    caps.check_objects(a.cat().n_objects())?;
    let found = FunctorSearch::new(a.cat(), b.cat()).blocks(a.partition(), b.partition()).collect(caps.max_universe)?;
    let morphisms = found.into_iter().map(|(functor, block_image)| SchemoidMorphism { functor, block_image }).collect();
    Ok(MorphismUniverse::from_sorted(morphisms))
}

/// Decides `f ≃ g` by breadth-first search over `universe`, with edges given
/// by elementary homotopies in either direction. Returns a shortest chain.
pub fn homotopic(
    a: &QSchemoid,
    b: &QSchemoid,
    f: &SchemoidMorphism,
    g: &SchemoidMorphism,
    universe: &MorphismUniverse,
) -> Result<Option<HomotopyChain>, HomotopyError> {
    check_endpoints(a, b, f)?;
    check_endpoints(a, b, g)?;
    let start = universe.position(f).ok_or(HomotopyError::UniverseMismatch)?;
    let goal = universe.position(g).ok_or(HomotopyError::UniverseMismatch)?;
    if start == goal {
        return Ok(Some(HomotopyChain::new(f.clone())));
    }
    let mut parent: Vec<Option<(usize, ChainStep)>> = vec![None; universe.len()];
    let mut seen = vec![false; universe.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    'bfs: while let Some(i) = queue.pop_front() {
        let cur = universe.get(i);
        // try the goal first, then everything else in index order
        let order = std::iter::once(goal).chain((0..universe.len()).filter(|&j| j != goal));
        for j in order {
            if seen[j] {
                continue;
            }
            let next = universe.get(j);
            let step = if let Some(diag) = search_diagonal(a, b, cur, next, &|_, _| true) {
                ChainStep { homotopy: Homotopy { from: cur.clone(), to: next.clone(), diag }, forward: true }
            } else if let Some(diag) = search_diagonal(a, b, next, cur, &|_, _| true) {
                ChainStep { homotopy: Homotopy { from: next.clone(), to: cur.clone(), diag }, forward: false }
            } else {
                continue;
            };
            seen[j] = true;
            parent[j] = Some((i, step));
            if j == goal {
                break 'bfs;
            }
            queue.push_back(j);
        }
    }
    if !seen[goal] {
        return Ok(None);
    }
    let mut steps = Vec::new();
    let mut at = goal;
    while at != start {
        let (prev, step) = parent[at].take().expect("path back to start");
        steps.push(step);
        at = prev;
    }
    steps.reverse();
    Ok(Some(HomotopyChain::from_steps(f.clone(), steps).expect("BFS path is connected")))
}

/// Connected components of the homotopy graph on a universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyClasses {
    /// Class index of each universe element.
    pub class_of: Vec<usize>,
    /// Members of each class in increasing order; classes ordered by their
    /// least member, which is also the representative.
    pub classes: Vec<Vec<usize>>,
}

impl HomotopyClasses {
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Partitions `universe` into `≃`-classes. Edges are computed in parallel;
/// the union step is sequential and in index order.
pub fn homotopy_classes(a: &QSchemoid, b: &QSchemoid, universe: &MorphismUniverse) -> HomotopyClasses {
    let n = universe.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i + 1..n).filter(move |&j| related(a, b, universe.get(i), universe.get(j))).map(move |j| (i, j))
        })
        .collect();
    let mut parent: Vec<usize> = (0..n).collect();
    for (i, j) in edges {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri.max(rj)] = ri.min(rj);
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of_root = HashMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        let c = *class_of_root.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        class_of[i] = c;
        classes[c].push(i);
    }
    HomotopyClasses { class_of, classes }
}
