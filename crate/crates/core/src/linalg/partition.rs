use serde::Serialize;

use super::{HermitianMatrix, LinalgError};

/// Partition of the index set `[0, n)` into `r >= 2` non-empty parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockPartition {
    r: usize,
    part_of: Vec<usize>,
}

impl BlockPartition {
    pub fn new(part_of: Vec<usize>, r: usize) -> Result<Self, LinalgError> {
        if part_of.is_empty() {
            return Err(LinalgError::Empty);
        }
        if r < 2 {
            return Err(LinalgError::TooFewParts { r });
        }
        let mut used = vec![false; r];
        for (index, &part) in part_of.iter().enumerate() {
            if part >= r {
                return Err(LinalgError::PartOutOfRange { index, part, r });
            }
            used[part] = true;
        }
        if let Some(part) = used.iter().position(|u| !u) {
            return Err(LinalgError::EmptyPart { part });
        }
        Ok(Self { r, part_of })
    }

    /// Infers `r` as one past the largest part id.
    pub fn from_assignment(part_of: Vec<usize>) -> Result<Self, LinalgError> {
        let r = part_of.iter().max().map_or(0, |m| m + 1);
        Self::new(part_of, r)
    }

    pub fn n(&self) -> usize {
        self.part_of.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn part_of(&self, index: usize) -> usize {
        self.part_of[index]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.part_of
    }

    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.r];
        for (i, &p) in self.part_of.iter().enumerate() {
            parts[p].push(i);
        }
        parts
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.r];
        for &p in &self.part_of {
            sizes[p] += 1;
        }
        sizes
    }
}

/// True iff every entry inside a diagonal block of `a` is zero.
pub fn validate_block_zero(a: &HermitianMatrix, p: &BlockPartition) -> Result<bool, LinalgError> {
    if a.n() != p.n() {
        return Err(LinalgError::DimensionMismatch {
            left: a.n(),
            right: p.n(),
        });
    }
    let n = a.n();
    for j in 0..n {
        for k in j..n {
            if p.part_of(j) == p.part_of(k) && a.get(j, k) != num_complex::Complex64::new(0.0, 0.0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SymmetricMatrix;

    #[test]
    fn rejects_bad_partitions() {
        assert_eq!(
            BlockPartition::new(vec![0, 0, 0], 1),
            Err(LinalgError::TooFewParts { r: 1 })
        );
        assert_eq!(
            BlockPartition::new(vec![0, 2, 0], 3),
            Err(LinalgError::EmptyPart { part: 1 })
        );
        assert_eq!(
            BlockPartition::new(vec![0, 3], 2),
            Err(LinalgError::PartOutOfRange { index: 1, part: 3, r: 2 })
        );
        assert_eq!(BlockPartition::new(vec![], 2), Err(LinalgError::Empty));
    }

    #[test]
    fn parts_and_sizes() {
        let p = BlockPartition::from_assignment(vec![1, 0, 1, 2]).unwrap();
        assert_eq!(p.r(), 3);
        assert_eq!(p.parts(), vec![vec![1], vec![0, 2], vec![3]]);
        assert_eq!(p.block_sizes(), vec![1, 2, 1]);
    }

    #[test]
    fn block_zero_examples() {
        let zero = HermitianMatrix::zeros(4).unwrap();
        let p = BlockPartition::from_assignment(vec![0, 1, 0, 1]).unwrap();
        assert!(validate_block_zero(&zero, &p).unwrap());

        let k3 = SymmetricMatrix::from_fn(3, |i, j| if i == j { 0.0 } else { 1.0 }).unwrap();
        let k3 = HermitianMatrix::from_real(&k3);
        let bad = BlockPartition::from_assignment(vec![0, 0, 1]).unwrap();
        assert!(!validate_block_zero(&k3, &bad).unwrap());
        let singletons = BlockPartition::from_assignment(vec![0, 1, 2]).unwrap();
        assert!(validate_block_zero(&k3, &singletons).unwrap());

        assert!(matches!(
            validate_block_zero(&k3, &p),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }
}
