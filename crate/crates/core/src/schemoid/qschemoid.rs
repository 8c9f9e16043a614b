use super::{Partition, SchemoidError};
use crate::fincat::FinCat;

/// A finite category with a regular partition of its morphisms.
///
/// A pair `(f, g)` with `src(f) = tgt(g)` lies in the fiber of `(σ, τ)` over
/// `f∘g` when `f ∈ σ` (outer factor) and `g ∈ τ` (inner factor). Regularity
/// asks that for every block triple `(σ, τ, μ)` the fiber size is the same
/// over every member of `μ`; that common size is `p(σ, τ, μ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSchemoid {
    cat: FinCat,
    partition: Partition,
    constants: Vec<u32>,
}

impl QSchemoid {
    pub fn new(cat: FinCat, partition: Partition) -> Result<QSchemoid, SchemoidError> {
        if partition.n_items() != cat.n_morphisms() {
            return Err(SchemoidError::PartitionSize { partition: partition.n_items(), morphisms: cat.n_morphisms() });
        }
        let constants = compute_constants(&cat, &partition)?;
        Ok(QSchemoid { cat, partition, constants })
    }

    /// The discrete schemoid `K(cat)`: every morphism is its own block.
    pub fn discrete(cat: FinCat) -> QSchemoid {
        let names = cat.names().to_vec();
        let partition = Partition::discrete(cat.n_morphisms()).renamed(names);
        QSchemoid::new(cat, partition).expect("discrete partitions are regular")
    }

    pub fn cat(&self) -> &FinCat {
        &self.cat
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n_blocks(&self) -> usize {
        self.partition.n_blocks()
    }

    pub fn block_of(&self, m: usize) -> usize {
        self.partition.block_of(m)
    }

    /// Number of factorisations `h = f∘g` with `f ∈ sigma`, `g ∈ tau`, for
    /// any fixed `h ∈ mu`.
    pub fn p(&self, sigma: usize, tau: usize, mu: usize) -> u32 {
        let b = self.n_blocks();
        self.constants[(sigma * b + tau) * b + mu]
    }

    /// Flat constants table indexed by `(sigma * b + tau) * b + mu`.
    pub fn constants(&self) -> &[u32] {
        &self.constants
    }

    /// Blocks consisting of identity morphisms only.
    pub fn identity_blocks(&self) -> Vec<usize> {
        (0..self.n_blocks()).filter(|&b| self.partition.block(b).iter().all(|&m| self.cat.is_identity(m))).collect()
    }

    /// True when all identities lie in one block.
    pub fn identities_in_one_block(&self) -> bool {
        let b0 = self.block_of(self.cat.identity(0));
        (0..self.cat.n_objects()).all(|x| self.block_of(self.cat.identity(x)) == b0)
    }

    /// Product schemoid with blocks `σ × τ` at index `σ * |S'| + τ`.
    pub fn product(&self, other: &QSchemoid) -> QSchemoid {
        let cat = self.cat.product(&other.cat);
        let (b1, b2) = (self.n_blocks(), other.n_blocks());
        let m2 = other.cat.n_morphisms();
        let mut blocks = vec![Vec::new(); b1 * b2];
        for f in 0..self.cat.n_morphisms() {
            for g in 0..m2 {
                blocks[self.block_of(f) * b2 + other.block_of(g)].push(f * m2 + g);
            }
        }
        let names =
            (0..b1 * b2).map(|k| format!("{}*{}", self.partition.name(k / b2), other.partition.name(k % b2))).collect();
        let partition = Partition::with_names(cat.n_morphisms(), blocks, names).expect("product partition");
        let q = QSchemoid::new(cat, partition);
        debug_assert!(q.is_ok(), "products of quasi-schemoids are quasi-schemoids");
        q.expect("product schemoid")
    }
}

fn compute_constants(cat: &FinCat, partition: &Partition) -> Result<Vec<u32>, SchemoidError> {
    let b = partition.n_blocks();
    let m = cat.n_morphisms();
    let mut constants = vec![0u32; b * b * b];
    // counts[tau * m + h]: fiber size of (sigma, tau) over h
    let mut counts = vec![0u32; b * m];
    for sigma in 0..b {
        counts.iter_mut().for_each(|c| *c = 0);
        for &f in partition.block(sigma) {
            for &g in cat.incoming(cat.src(f)) {
                let h = cat.compose(f, g).expect("composable");
                counts[partition.block_of(g) * m + h] += 1;
            }
        }
        for tau in 0..b {
            for mu in 0..b {
                let members = partition.block(mu);
                let first = members[0];
                let size = counts[tau * m + first];
                if let Some(&other) = members.iter().find(|&&h| counts[tau * m + h] != size) {
                    return Err(SchemoidError::RegularityViolation {
                        sigma,
                        tau,
                        mu,
                        f: first,
                        g: other,
                        size_f: size as usize,
                        size_g: counts[tau * m + other] as usize,
                    });
                }
                constants[(sigma * b + tau) * b + mu] = size;
            }
        }
    }
    Ok(constants)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrow_with_coarse_partition_is_irregular() {
        // {1_0, u}, {1_1}
        let p = Partition::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        let err = QSchemoid::new(FinCat::arrow(), p).unwrap_err();
        assert_eq!(
            err,
            SchemoidError::RegularityViolation { sigma: 1, tau: 0, mu: 0, f: 0, g: 2, size_f: 0, size_g: 1 }
        );
    }

    #[test]
    fn discrete_partitions_validate() {
        for c in [FinCat::arrow(), FinCat::chaotic(3), FinCat::discrete(2)] {
            let k = QSchemoid::discrete(c.clone());
            assert_eq!(k.n_blocks(), c.n_morphisms());
            // p({g∘f... }) is 1 exactly on the composite's block
            for (g, f) in c.composable_pairs() {
                let h = c.compose(g, f).unwrap();
                assert_eq!(k.p(g, f, h), 1);
            }
        }
    }

    #[test]
    fn product_block_count() {
        let a = QSchemoid::discrete(FinCat::arrow());
        let t = QSchemoid::discrete(FinCat::terminal());
        let p = a.product(&t);
        assert_eq!(p.n_blocks(), 3);
        let q = a.product(&a);
        assert_eq!(q.n_blocks(), 9);
    }
}
