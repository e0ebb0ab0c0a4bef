//! Complete-tree embeddings backing the fractal structures.
//!
//! Heap-order placement: node `i`'s parent is `(i - 1) / arity`, which
//! realizes a complete tree of any size. Heights run from 0 at the deepest
//! level up to `h(T)` at the root.

/// A complete `arity`-ary tree over nodes `0..n` in heap order.
#[derive(Debug, Clone, Copy)]
pub struct HeapTree {
    n: u32,
    arity: u32,
}

impl HeapTree {
    pub fn new(n: u32, arity: u32) -> Self {
        assert!(arity >= 2);
        HeapTree { n, arity }
    }

    pub fn parent(&self, node: u32) -> Option<u32> {
        if node == 0 {
            None
        } else {
            Some((node - 1) / self.arity)
        }
    }

    pub fn depth(&self, node: u32) -> u32 {
        let mut d = 0;
        let mut cur = node;
        while let Some(p) = self.parent(cur) {
            cur = p;
            d += 1;
        }
        d
    }

    /// Depth of the deepest node, `h(T)`.
    pub fn max_depth(&self) -> u32 {
        self.depth(self.n - 1)
    }

    /// Height convention of the fractal-hierarchy score: 0 at the deepest
    /// level, `h(T)` at the root.
    pub fn height(&self, node: u32) -> u32 {
        self.max_depth() - self.depth(node)
    }

    /// Geodesic (shortest-path) distance in the tree.
    pub fn distance(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let (mut da, mut db) = (self.depth(a), self.depth(b));
        let mut dist = 0;
        while da > db {
            a = self.parent(a).unwrap();
            da -= 1;
            dist += 1;
        }
        while db > da {
            b = self.parent(b).unwrap();
            db -= 1;
            dist += 1;
        }
        while a != b {
            a = self.parent(a).unwrap();
            b = self.parent(b).unwrap();
            dist += 2;
        }
        dist
    }

    /// True when one node is an ancestor of the other (in either direction).
    pub fn related(&self, a: u32, b: u32) -> bool {
        let (mut deep, shallow) = if self.depth(a) >= self.depth(b) {
            (a, b)
        } else {
            (b, a)
        };
        let target_depth = self.depth(shallow);
        while self.depth(deep) > target_depth {
            deep = self.parent(deep).unwrap();
        }
        deep == shallow
    }
}

/// Tree distance between leaves `i` and `j` of a complete binary tree with
/// `2^depth` leaves: twice the number of levels below their lowest common
/// ancestor. Computed from the highest differing bit of the leaf indices.
pub fn leaf_distance(i: u32, j: u32) -> u32 {
    if i == j {
        return 0;
    }
    let diverge = 64 - u64::from(i ^ j).leading_zeros();
    2 * diverge
}

/// Smallest depth `d` with `2^d >= n` leaves.
pub fn leaf_tree_depth(n: u32) -> u32 {
    let mut d = 0;
    while (1u64 << d) < n as u64 {
        d += 1;
    }
    d
}
