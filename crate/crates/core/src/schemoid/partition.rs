use super::SchemoidError;

/// A partition of `0..n_items` into nonempty blocks. Members of each block
/// are kept in increasing order; block order is whatever the caller gave.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
    names: Vec<String>,
}

impl Partition {
    pub fn new(n_items: usize, blocks: Vec<Vec<usize>>) -> Result<Partition, SchemoidError> {
        let names = (0..blocks.len()).map(|i| format!("b{i}")).collect();
        Partition::with_names(n_items, blocks, names)
    }

    pub fn with_names(
        n_items: usize,
        mut blocks: Vec<Vec<usize>>,
        names: Vec<String>,
    ) -> Result<Partition, SchemoidError> {
        assert_eq!(blocks.len(), names.len(), "one name per block");
        let mut block_of = vec![usize::MAX; n_items];
        for (b, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(SchemoidError::EmptyBlock(b));
            }
            block.sort_unstable();
            for &m in block.iter() {
                if m >= n_items {
                    return Err(SchemoidError::DanglingMorphism(m));
                }
                if block_of[m] != usize::MAX {
                    return Err(SchemoidError::Overlap(m));
                }
                block_of[m] = b;
            }
        }
        if let Some(m) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(SchemoidError::NotCovering(m));
        }
        Ok(Partition { blocks, block_of, names })
    }

    /// Blocks given by a label per item; block `k` holds the items labelled
    /// `k`. Labels must be dense.
    pub fn from_labels(labels: &[usize]) -> Result<Partition, SchemoidError> {
        let n_blocks = labels.iter().max().map_or(0, |&k| k + 1);
        let mut blocks = vec![Vec::new(); n_blocks];
        for (m, &k) in labels.iter().enumerate() {
            blocks[k].push(m);
        }
        Partition::new(labels.len(), blocks)
    }

    pub fn discrete(n_items: usize) -> Partition {
        Partition::new(n_items, (0..n_items).map(|m| vec![m]).collect()).expect("singletons partition")
    }

    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn n_items(&self) -> usize {
        self.block_of.len()
    }

    pub fn block(&self, b: usize) -> &[usize] {
        &self.blocks[b]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, m: usize) -> usize {
        self.block_of[m]
    }

    pub fn name(&self, b: usize) -> &str {
        &self.names[b]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn block_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn renamed(mut self, names: Vec<String>) -> Partition {
        assert_eq!(names.len(), self.blocks.len());
        self.names = names;
        self
    }
}
