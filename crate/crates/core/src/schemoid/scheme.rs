use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("relation matrix is empty")]
    Empty,
    #[error("row {0} has the wrong length")]
    NotSquare(usize),
    #[error("relation indices are not dense: {0} is unused")]
    SparseRelations(usize),
    #[error("relation 0 must be exactly the diagonal (fails at ({x}, {y}))")]
    DiagonalNotSingleRelation { x: usize, y: usize },
    #[error("the transpose of relation {0} is not a relation")]
    TransposeMissing(usize),
    #[error("p({e}, {f}; {g}) is {count_a} at {at_a:?} but {count_b} at {at_b:?}")]
    NonConstantCount {
        e: usize,
        f: usize,
        g: usize,
        at_a: (usize, usize),
        count_a: usize,
        at_b: (usize, usize),
        count_b: usize,
    },
}

/// An association scheme on `0..n_points` given by its relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocScheme {
    n_points: usize,
    n_relations: usize,
    relation: Vec<usize>,
    transpose: Vec<usize>,
    constants: Vec<u32>,
}

impl AssocScheme {
    pub fn from_matrix(matrix: &[Vec<usize>]) -> Result<AssocScheme, SchemeError> {
        let n = matrix.len();
        if n == 0 {
            return Err(SchemeError::Empty);
        }
        let mut relation = Vec::with_capacity(n * n);
        for (x, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(SchemeError::NotSquare(x));
            }
            relation.extend_from_slice(row);
        }
        let d = relation.iter().max().unwrap() + 1;
        let mut used = vec![false; d];
        for &r in &relation {
            used[r] = true;
        }
        if let Some(r) = used.iter().position(|u| !u) {
            return Err(SchemeError::SparseRelations(r));
        }
        for x in 0..n {
            for y in 0..n {
                if (x == y) != (relation[x * n + y] == 0) {
                    return Err(SchemeError::DiagonalNotSingleRelation { x, y });
                }
            }
        }
        let mut transpose = vec![usize::MAX; d];
        let mut sizes = vec![0usize; d];
        for &r in &relation {
            sizes[r] += 1;
        }
        for x in 0..n {
            for y in 0..n {
                let (r, rt) = (relation[x * n + y], relation[y * n + x]);
                if transpose[r] == usize::MAX {
                    transpose[r] = rt;
                } else if transpose[r] != rt {
                    return Err(SchemeError::TransposeMissing(r));
                }
            }
        }
        for r in 0..d {
            if sizes[transpose[r]] != sizes[r] {
                return Err(SchemeError::TransposeMissing(r));
            }
        }

        let mut constants = vec![0u32; d * d * d];
        let mut witness = vec![(usize::MAX, usize::MAX); d * d * d];
        let mut counts = vec![0u32; d * d];
        for x in 0..n {
            for z in 0..n {
                counts.iter_mut().for_each(|c| *c = 0);
                for y in 0..n {
                    counts[relation[x * n + y] * d + relation[y * n + z]] += 1;
                }
                let g = relation[x * n + z];
                for e in 0..d {
                    for f in 0..d {
                        let idx = (e * d + f) * d + g;
                        let c = counts[e * d + f];
                        if witness[idx].0 == usize::MAX {
                            witness[idx] = (x, z);
                            constants[idx] = c;
                        } else if constants[idx] != c {
                            return Err(SchemeError::NonConstantCount {
                                e,
                                f,
                                g,
                                at_a: witness[idx],
                                count_a: constants[idx] as usize,
                                at_b: (x, z),
                                count_b: c as usize,
                            });
                        }
                    }
                }
            }
        }
        Ok(AssocScheme { n_points: n, n_relations: d, relation, transpose, constants })
    }

    /// Diagonal and one other relation (just the diagonal when `n = 1`).
    pub fn trivial(n: usize) -> AssocScheme {
        let m: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| usize::from(x != y)).collect()).collect();
        AssocScheme::from_matrix(&m).expect("trivial scheme")
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn n_relations(&self) -> usize {
        self.n_relations
    }

    pub fn relation(&self, x: usize, y: usize) -> usize {
        self.relation[x * self.n_points + y]
    }

    pub fn matrix(&self) -> Vec<Vec<usize>> {
        self.relation.chunks(self.n_points).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self, r: usize) -> usize {
        self.transpose[r]
    }

    /// `p_{ef}^g = #{y : (x,y) ∈ e, (y,z) ∈ f}` for any `(x,z) ∈ g`.
    pub fn p(&self, e: usize, f: usize, g: usize) -> u32 {
        let d = self.n_relations;
        self.constants[(e * d + f) * d + g]
    }
}
