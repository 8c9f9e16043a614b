use super::elementary::check_endpoints;
use super::{Homotopy, HomotopyError};
use crate::schemoid::{QSchemoid, SchemoidMorphism};

/// One link of a chain. When `forward` is set the homotopy runs from the
/// current morphism to the next one, otherwise from the next to the current.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub homotopy: Homotopy,
    pub forward: bool,
}

impl ChainStep {
    pub fn source(&self) -> &SchemoidMorphism {
        if self.forward {
            &self.homotopy.from
        } else {
            &self.homotopy.to
        }
    }

    pub fn target(&self) -> &SchemoidMorphism {
        if self.forward {
            &self.homotopy.to
        } else {
            &self.homotopy.from
        }
    }

    fn map(&self, f: impl Fn(&Homotopy) -> Homotopy) -> ChainStep {
        ChainStep { homotopy: f(&self.homotopy), forward: self.forward }
    }
}

/// A zigzag `F = F_0 ~ F_1 ~ … ~ F_n = G` of elementary homotopies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyChain {
    start: SchemoidMorphism,
    steps: Vec<ChainStep>,
}

impl HomotopyChain {
    /// The empty chain at `f`.
    pub fn new(f: SchemoidMorphism) -> Self {
        HomotopyChain { start: f, steps: Vec::new() }
    }

    pub fn from_steps(start: SchemoidMorphism, steps: Vec<ChainStep>) -> Result<Self, HomotopyError> {
        let mut at = &start;
        for s in &steps {
            if s.source() != at {
                return Err(HomotopyError::EndpointMismatch);
            }
            at = s.target();
        }
        Ok(HomotopyChain { start, steps })
    }

    pub fn single(h: Homotopy) -> Self {
        HomotopyChain { start: h.from.clone(), steps: vec![ChainStep { homotopy: h, forward: true }] }
    }

    pub fn start(&self) -> &SchemoidMorphism {
        &self.start
    }

    pub fn end(&self) -> &SchemoidMorphism {
        self.steps.last().map_or(&self.start, ChainStep::target)
    }

    pub fn steps(&self) -> &[ChainStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The morphisms visited, `F_0, …, F_n`.
    pub fn morphisms(&self) -> Vec<&SchemoidMorphism> {
        std::iter::once(&self.start).chain(self.steps.iter().map(ChainStep::target)).collect()
    }

    /// Re-checks every certificate by building its cylinder functor.
    pub fn verify(&self, a: &QSchemoid, b: &QSchemoid) -> Result<(), HomotopyError> {
        check_endpoints(a, b, &self.start)?;
        for s in &self.steps {
            s.homotopy.verify(a, b)?;
        }
        Ok(())
    }

    /// The same zigzag read backwards.
    pub fn reversed(&self) -> HomotopyChain {
        let steps = self.steps.iter().rev().map(|s| ChainStep { homotopy: s.homotopy.clone(), forward: !s.forward });
        HomotopyChain { start: self.end().clone(), steps: steps.collect() }
    }

    /// `K∘chain` for `k` out of the common target.
    pub fn whisker_left(&self, k: &SchemoidMorphism) -> HomotopyChain {
        HomotopyChain {
            start: k.after(&self.start),
            steps: self.steps.iter().map(|s| s.map(|h| h.whisker_left(k))).collect(),
        }
    }

    /// `chain∘K` for `k` into the common source.
    pub fn whisker_right(&self, k: &SchemoidMorphism) -> HomotopyChain {
        HomotopyChain {
            start: self.start.after(k),
            steps: self.steps.iter().map(|s| s.map(|h| h.whisker_right(k))).collect(),
        }
    }
}

/// `h1` followed by `h2`.
pub fn vertical_compose(h1: &HomotopyChain, h2: &HomotopyChain) -> Result<HomotopyChain, HomotopyError> {
    if h1.end() != h2.start() {
        return Err(HomotopyError::EndpointMismatch);
    }
    let steps = h1.steps.iter().chain(&h2.steps).cloned().collect();
    Ok(HomotopyChain { start: h1.start.clone(), steps })
}

fn check_boundary(
    c: &QSchemoid,
    d: &QSchemoid,
    e: &QSchemoid,
    nu: &HomotopyChain,
    kappa: &HomotopyChain,
) -> Result<(), HomotopyError> {
    let fits = check_endpoints(d, e, nu.start()).is_ok() && check_endpoints(c, d, kappa.start()).is_ok();
    if fits {
        Ok(())
    } else {
        Err(HomotopyError::BoundaryMismatch)
    }
}

/// Horizontal composite of `nu: G_1 ≃ G_2` (over `d → e`) and
/// `kappa: F_1 ≃ F_2` (over `c → d`): first `G_1 kappa`, then `nu F_2`.
pub fn horizontal_compose(
    c: &QSchemoid,
    d: &QSchemoid,
    e: &QSchemoid,
    nu: &HomotopyChain,
    kappa: &HomotopyChain,
) -> Result<HomotopyChain, HomotopyError> {
    check_boundary(c, d, e, nu, kappa)?;
    let first = kappa.whisker_left(nu.start());
    let second = nu.whisker_right(kappa.end());
    vertical_compose(&first, &second)
}

/// The other bracketing: first `nu F_1`, then `G_2 kappa`. Interchange says
/// it has the same endpoints as [`horizontal_compose`].
pub fn horizontal_compose_swapped(
    c: &QSchemoid,
    d: &QSchemoid,
    e: &QSchemoid,
    nu: &HomotopyChain,
    kappa: &HomotopyChain,
) -> Result<HomotopyChain, HomotopyError> {
    check_boundary(c, d, e, nu, kappa)?;
    let first = nu.whisker_right(kappa.start());
    let second = kappa.whisker_left(nu.end());
    vertical_compose(&first, &second)
}
