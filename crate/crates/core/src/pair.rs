use crate::{Error, Result};

/// An undirected node pair with `u < v`, 0-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodePair {
    pub u: u32,
    pub v: u32,
}

impl NodePair {
    /// Build a pair, validating `0 <= u < v < n`.
    pub fn new(u: u32, v: u32, n: u32) -> Result<Self> {
        if u >= v || v >= n {
            return Err(Error::InvalidPair { u, v, n });
        }
        Ok(NodePair { u, v })
    }

    /// Row-major index of the pair in the upper triangle of an `n x n`
    /// matrix, in `[0, n(n-1)/2)`.
    pub fn index(&self, n: u32) -> usize {
        let (u, v, n) = (self.u as usize, self.v as usize, n as usize);
        u * n - u * (u + 1) / 2 + (v - u - 1)
    }
}

impl std::fmt::Display for NodePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Number of undirected pairs, `L = n(n-1)/2`.
pub fn pair_count(n: u32) -> usize {
    let n = n as usize;
    n * (n - 1) / 2
}

/// All pairs in row-major upper-triangle order: (0,1), (0,2), ..., (n-2,n-1).
pub fn all_pairs(n: u32) -> impl Iterator<Item = NodePair> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| NodePair { u, v }))
}
