use crate::pair::NodePair;
use crate::{Error, Result};

/// Simple undirected graph: node count plus a sorted edge set of `u < v`
/// pairs, with adjacency lists for traversal. Immutable after construction.
#[derive(Debug, Clone)]
pub struct Graph {
    n: u32,
    edges: Vec<NodePair>,
    adjacency: Vec<Vec<u32>>,
}

impl Graph {
    pub fn new(n: u32, mut edges: Vec<NodePair>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); n as usize];
        for e in &edges {
            if e.u >= e.v || e.v >= n {
                return Err(Error::InvalidPair { u: e.u, v: e.v, n });
            }
            adjacency[e.u as usize].push(e.v);
            adjacency[e.v as usize].push(e.u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adjacency,
        })
    }

    pub fn node_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(u, v)`.
    pub fn edges(&self) -> &[NodePair] {
        &self.edges
    }

    pub fn neighbors(&self, node: u32) -> &[u32] {
        &self.adjacency[node as usize]
    }

    pub fn degree(&self, node: u32) -> usize {
        self.adjacency[node as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }
}
