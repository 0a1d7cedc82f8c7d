//! Simple undirected graphs on the vertex set `{1, ..., n}`.
//!
//! Every public interface speaks 1-based labels. Neighbor lists are kept
//! sorted ascending, which makes [`Graph::edges`] canonical.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges. Fails for `n = 0`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "a graph needs at least one vertex".into(),
            ));
        }
        Ok(Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range labels.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Appends an isolated vertex and returns its label.
    pub fn add_vertex(&mut self) -> usize {
        self.adjacency.push(Vec::new());
        self.adjacency.len()
    }

    fn index(&self, v: usize) -> Result<usize> {
        if v == 0 || v > self.adjacency.len() {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} outside 1..={}",
                self.adjacency.len()
            )));
        }
        Ok(v - 1)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let (iu, iv) = (self.index(u)?, self.index(v)?);
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let pos_u = match self.adjacency[iu].binary_search(&v) {
            Ok(_) => return Err(Error::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => pos,
        };
        self.adjacency[iu].insert(pos_u, v);
        let pos_v = self.adjacency[iv]
            .binary_search(&u)
            .expect_err("adjacency lists out of sync");
        self.adjacency[iv].insert(pos_v, u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let (iu, iv) = (self.index(u)?, self.index(v)?);
        let pos_u = self.adjacency[iu]
            .binary_search(&v)
            .map_err(|_| Error::MissingEdge(u.min(v), u.max(v)))?;
        self.adjacency[iu].remove(pos_u);
        let pos_v = self.adjacency[iv]
            .binary_search(&u)
            .expect("adjacency lists out of sync");
        self.adjacency[iv].remove(pos_v);
        self.edge_count -= 1;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match (self.index(u), self.index(v)) {
            (Ok(iu), Ok(_)) => self.adjacency[iu].binary_search(&v).is_ok(),
            _ => false,
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.adjacency[self.index(v)?].len())
    }

    /// Sorted neighbors of `v`.
    ///
    /// # Panics
    ///
    /// If `v` is not a vertex label of this graph.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v - 1]
    }

    /// Degrees of vertices `1..=n`, in label order.
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(i, nbrs)| {
            let u = i + 1;
            let start = nbrs.partition_point(|&w| w <= u);
            nbrs[start..].iter().map(move |&v| (u, v))
        })
    }

    /// Breadth-first search from vertex 1.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(1usize);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }

    /// Checks the structural invariants: labels in range, no loops, no
    /// duplicates, symmetric adjacency, consistent edge count.
    pub fn check_simple(&self) -> core::result::Result<(), String> {
        let n = self.vertex_count();
        let mut half_degrees = 0;
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            let u = i + 1;
            for pair in nbrs.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(format!("neighbors of {u} not strictly ascending"));
                }
            }
            for &w in nbrs {
                if w == 0 || w > n {
                    return Err(format!("vertex {u} lists out-of-range neighbor {w}"));
                }
                if w == u {
                    return Err(format!("self-loop at {u}"));
                }
                if self.adjacency[w - 1].binary_search(&u).is_err() {
                    return Err(format!("asymmetric adjacency between {u} and {w}"));
                }
            }
            half_degrees += nbrs.len();
        }
        if half_degrees != 2 * self.edge_count {
            return Err(format!(
                "degree sum {half_degrees} != 2 x edge count {}",
                self.edge_count
            ));
        }
        Ok(())
    }

    /// Returns a path with exactly `k` edges.
    ///
    /// Starts at vertex 1 and repeatedly extends the tail by its
    /// smallest-labeled neighbor not yet on the path, stopping at `k` edges.
    /// Extension cannot get stuck when `min_degree() >= k`: a stuck tail on a
    /// path of at most `k` vertices has at most `k - 1` neighbors.
    pub fn find_path_with_k_edges(&self, k: usize) -> Result<Path> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "path edge count must be positive".into(),
            ));
        }
        let mut vertices = Vec::with_capacity(k + 1);
        vertices.push(1usize);
        while vertices.len() <= k {
            let tail = *vertices.last().unwrap();
            let next = self
                .neighbors(tail)
                .iter()
                .copied()
                .find(|w| !vertices.contains(w));
            match next {
                Some(w) => vertices.push(w),
                None => {
                    return Err(Error::InternalContradiction(format!(
                        "path stuck at vertex {tail} after {} edges (wanted {k}, min degree {})",
                        vertices.len() - 1,
                        self.min_degree()
                    )))
                }
            }
        }
        Ok(Path { vertices })
    }
}

/// A sequence of distinct vertices, consecutive ones adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    /// Validates `vertices` as a path in `g`.
    pub fn in_graph(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument("empty path".into()));
        }
        for (i, &v) in vertices.iter().enumerate() {
            g.index(v)?;
            if vertices[..i].contains(&v) {
                return Err(Error::InvalidArgument(format!(
                    "vertex {v} repeated on path"
                )));
            }
        }
        for pair in vertices.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(Error::MissingEdge(
                    pair[0].min(pair[1]),
                    pair[0].max(pair[1]),
                ));
            }
        }
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The `j`-th edge along the path, 1-based, as `(q_j, q_{j+1})`.
    pub fn edge(&self, j: usize) -> (usize, usize) {
        (self.vertices[j - 1], self.vertices[j])
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 1..=n {
            for v in u + 1..=n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let g = Graph::empty(5).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 0);
        assert!(g.degrees().all(|d| d == 0));
        assert!(matches!(Graph::empty(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn add_edge_errors() {
        let mut g = Graph::empty(2).unwrap();
        g.add_edge(1, 2).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degrees().collect::<Vec<_>>(), [1, 1]);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(g.add_edge(2, 1), Err(Error::DuplicateEdge(1, 2)));
        assert!(matches!(g.add_edge(1, 3), Err(Error::InvalidArgument(_))));
        assert!(matches!(g.add_edge(0, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn remove_edge() {
        let mut g = Graph::empty(2).unwrap();
        g.add_edge(1, 2).unwrap();
        let before = g.clone();
        g.remove_edge(2, 1).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.remove_edge(1, 2), Err(Error::MissingEdge(1, 2)));
        g.add_edge(1, 2).unwrap();
        assert_eq!(g, before);
    }

    #[test]
    fn degrees() {
        assert!((1..=4).all(|v| complete(4).degree(v).unwrap() == 3));
        assert_eq!(Graph::empty(3).unwrap().degree(2).unwrap(), 0);
        let path = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(path.degree(2).unwrap(), 2);
        assert!(path.degree(4).is_err());

        assert_eq!(complete(5).min_degree(), 4);
        let star = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(star.min_degree(), 1);
        assert_eq!(Graph::empty(2).unwrap().min_degree(), 0);
    }

    #[test]
    fn connectivity() {
        assert!(complete(4).is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        let two = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert!(!two.is_connected());
    }

    #[test]
    fn canonical_edges() {
        let g = Graph::from_edges(4, [(4, 2), (3, 1), (2, 3), (1, 4)]).unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            [(1, 3), (1, 4), (2, 3), (2, 4)]
        );
        assert!(g.check_simple().is_ok());
    }

    // Expected paths obtained by running the smallest-unvisited-neighbor rule
    // by hand from vertex 1.
    #[test]
    fn path_finder_examples() {
        let p = complete(3).find_path_with_k_edges(2).unwrap();
        assert_eq!(p.vertices(), [1, 2, 3]);
        let p = complete(4).find_path_with_k_edges(3).unwrap();
        assert_eq!(p.vertices(), [1, 2, 3, 4]);
        let cycle = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let p = cycle.find_path_with_k_edges(2).unwrap();
        assert_eq!(p.vertices(), [1, 2, 3]);
        assert_eq!(p.edge_count(), 2);
        assert!(Path::in_graph(&cycle, p.into_vertices()).is_ok());
    }

    #[test]
    fn path_finder_stuck() {
        let g = Graph::from_edges(3, [(1, 2)]).unwrap();
        assert!(matches!(
            g.find_path_with_k_edges(2),
            Err(Error::InternalContradiction(_))
        ));
        assert!(g.find_path_with_k_edges(0).is_err());
    }

    #[test]
    fn path_validation() {
        let g = complete(3);
        assert!(Path::in_graph(&g, vec![1, 2, 1]).is_err());
        let sparse = Graph::from_edges(3, [(1, 2)]).unwrap();
        assert_eq!(
            Path::in_graph(&sparse, vec![1, 3]),
            Err(Error::MissingEdge(1, 3))
        );
    }
}
