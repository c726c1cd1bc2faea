//! Immutable free trees on dense vertex ids, plus edge-list and DOT I/O.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("expected {expected} edges for order {n}, found {found}")]
    EdgeCount { n: usize, expected: usize, found: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A tree on vertices `0..n`. Adjacency lists are kept sorted so that every
/// traversal is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn single_vertex() -> Tree {
        Tree { adj: vec![Vec::new()] }
    }

    /// Builds and validates a tree of order `n` from its undirected edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if edges.len() != n - 1 {
            return Err(TreeError::EdgeCount {
                n,
                expected: n - 1,
                found: edges.len(),
            });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(TreeError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(TreeError::ParallelEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        let tree = Tree { adj };
        // n - 1 edges and connected implies acyclic
        if tree.bfs_order(0).len() != n {
            return Err(TreeError::Disconnected);
        }
        Ok(tree)
    }

    /// Parent array with `parent[root] = None`.
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Tree, TreeError> {
        let edges: Vec<(usize, usize)> = parents
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p, v)))
            .collect();
        Tree::from_edges(parents.len(), &edges)
    }

    pub fn path(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Tree::from_edges(n, &edges).expect("path is a tree")
    }

    pub fn star(leaves: usize) -> Tree {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Tree::from_edges(leaves + 1, &edges).expect("star is a tree")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub fn is_branch(&self, v: usize) -> bool {
        self.adj[v].len() >= 3
    }

    pub fn branch_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.is_branch(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.order().saturating_sub(1));
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Vertices in breadth-first order from `root`.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut order = Vec::with_capacity(self.order());
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// BFS parents and order from `root`.
    pub fn rooted(&self, root: usize) -> (Vec<Option<usize>>, Vec<usize>) {
        let order = self.bfs_order(root);
        let mut parent = vec![None; self.order()];
        for &v in &order {
            for &w in &self.adj[v] {
                if Some(w) != parent[v] {
                    parent[w] = Some(v);
                }
            }
        }
        (parent, order)
    }

    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let (parent, order) = self.rooted(source);
        let mut dist = vec![0; self.order()];
        for &v in order.iter().skip(1) {
            dist[v] = dist[parent[v].expect("non-root has parent")] + 1;
        }
        dist
    }

    /// The unique path from `a` to `b`, both included.
    pub fn path_between(&self, a: usize, b: usize) -> Vec<usize> {
        let (parent, _) = self.rooted(b);
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            cur = parent[cur].expect("tree is connected");
            path.push(cur);
        }
        path
    }

    /// Vertices of the component containing `start` after deleting the edge
    /// `start - avoid`.
    pub fn component_avoiding(&self, start: usize, avoid: usize) -> Vec<usize> {
        let mut out = vec![start];
        let mut stack = vec![(start, avoid)];
        while let Some((v, from)) = stack.pop() {
            for &w in &self.adj[v] {
                if w != from {
                    out.push(w);
                    stack.push((w, v));
                }
            }
        }
        out
    }

    /// Subtree sizes with respect to a BFS rooting at `root`.
    pub fn subtree_sizes(&self, root: usize) -> (Vec<Option<usize>>, Vec<usize>) {
        let (parent, order) = self.rooted(root);
        let mut size = vec![1usize; self.order()];
        for &v in order.iter().rev() {
            if let Some(p) = parent[v] {
                size[p] += size[v];
            }
        }
        (parent, size)
    }

    /// Vertices of minimum eccentricity (one or two of them).
    pub fn centers(&self) -> Vec<usize> {
        let n = self.order();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                for &w in &self.adj[leaf] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    /// One edge per line, `u v`, as accepted by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        if self.order() == 1 {
            out.push_str("# single vertex\n");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph tree {\n");
        for v in 0..self.order() {
            let _ = writeln!(out, "  {v} [label=\"{v}\"];");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Parses the edge-list text format: one edge per line as two whitespace
/// separated 0-based ids, `#` lines ignored, order is `1 + max id`.
/// Input with no edges is the single-vertex tree.
pub fn parse_edge_list(text: &str) -> Result<Tree, TreeError> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let mut next_id = || -> Result<usize, TreeError> {
            let f = fields.next().ok_or_else(|| TreeError::Parse {
                line: i + 1,
                msg: "expected two vertex ids".into(),
            })?;
            f.parse().map_err(|_| TreeError::Parse {
                line: i + 1,
                msg: format!("invalid vertex id {f:?}"),
            })
        };
        let u = next_id()?;
        let v = next_id()?;
        if fields.next().is_some() {
            return Err(TreeError::Parse {
                line: i + 1,
                msg: "trailing fields".into(),
            });
        }
        edges.push((u, v));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1);
    Tree::from_edges(n, &edges)
}
