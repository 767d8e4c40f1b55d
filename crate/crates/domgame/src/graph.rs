//! Immutable simple undirected graphs with bitset adjacency rows.
//!
//! Vertex ids are contiguous `0..n`. Supports edge-list text and the
//! standard graph6 encoding (short form and the `~`-prefixed long form,
//! so graphs well past n = 64 round-trip).

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Largest order accepted by the graph6 codec (the 3-byte long form).
pub const GRAPH6_MAX_N: usize = 258_047;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    closed: Vec<VertexSet>,
    deg: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Graph("n must be at least 1".into()));
        }
        let mut adj: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::Graph(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_adj(adj))
    }

    fn from_adj(adj: Vec<VertexSet>) -> Graph {
        let n = adj.len();
        let deg: Vec<u32> = adj.iter().map(|row| row.len() as u32).collect();
        let closed: Vec<VertexSet> = adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.clone();
                c.insert(v);
                c
            })
            .collect();
        Graph { n, adj, closed, deg }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.deg[v]
    }

    pub fn min_degree(&self) -> u32 {
        self.deg.iter().copied().min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<&VertexSet> {
        self.closed
            .get(v)
            .ok_or(Error::VertexOutOfRange(v, self.n))
    }

    /// Precomputed closed-neighborhood rows; indexable without a bounds error.
    pub fn closed_rows(&self) -> &[VertexSet] {
        &self.closed
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.deg.iter().map(|&d| d as usize).sum::<usize>() / 2
    }

    pub fn is_isolate_free(&self) -> bool {
        self.min_degree() >= 1
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::new(self.n);
        seen.insert(0);
        let mut frontier = vec![0usize];
        while let Some(u) = frontier.pop() {
            for v in self.adj[u].iter() {
                if seen.insert(v) {
                    frontier.push(v);
                }
            }
        }
        seen.is_full()
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> =
            self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.n, &edges)
    }

    // ---- edge-list text format ----------------------------------------

    /// Parses the edge-list format: first non-comment line `n m`, then
    /// `m` lines `u v`. Lines starting with `#` are comments.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge-list input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header line {header:?}")))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header line {header:?}")))?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("fewer edge lines than header promises".into()))?;
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
            edges.push((u, v));
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_edge_list_string(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    // ---- graph6 --------------------------------------------------------

    /// Decodes a graph6 string (McKay encoding).
    pub fn parse_graph6(text: &str) -> Result<Graph> {
        let bytes = text.trim().as_bytes();
        if bytes.is_empty() {
            return Err(Error::Parse("empty graph6 string".into()));
        }
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(Error::Parse(format!("invalid graph6 byte {b}")));
        }
        let (n, rest) = if bytes[0] == b'~' {
            if bytes.len() >= 2 && bytes[1] == b'~' {
                return Err(Error::Parse("graph6 36-bit order form not supported".into()));
            }
            if bytes.len() < 4 {
                return Err(Error::Parse("truncated graph6 long-form header".into()));
            }
            let n = ((bytes[1] as usize - 63) << 12)
                | ((bytes[2] as usize - 63) << 6)
                | (bytes[3] as usize - 63);
            (n, &bytes[4..])
        } else {
            ((bytes[0] - 63) as usize, &bytes[1..])
        };
        if n == 0 {
            return Err(Error::Parse("graph6 order 0 not supported".into()));
        }
        let nbits = n * (n - 1) / 2;
        let need = nbits.div_ceil(6);
        if rest.len() != need {
            return Err(Error::Parse(format!(
                "graph6 payload length {} does not match order {n} (expected {need})",
                rest.len()
            )));
        }
        let mut edges = Vec::new();
        let mut bit = 0usize;
        'outer: for j in 1..n {
            for i in 0..j {
                let byte = rest[bit / 6] - 63;
                if byte & (1 << (5 - bit % 6)) != 0 {
                    edges.push((i, j));
                }
                bit += 1;
                if bit == nbits {
                    break 'outer;
                }
            }
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Encodes to graph6; inverse of [`Graph::parse_graph6`].
    pub fn to_graph6(&self) -> String {
        assert!(self.n <= GRAPH6_MAX_N, "graph too large for graph6");
        let mut out = Vec::new();
        if self.n < 63 {
            out.push(self.n as u8 + 63);
        } else {
            out.push(b'~');
            out.push(((self.n >> 12) & 0x3f) as u8 + 63);
            out.push(((self.n >> 6) & 0x3f) as u8 + 63);
            out.push((self.n & 0x3f) as u8 + 63);
        }
        let mut acc = 0u8;
        let mut nb = 0u8;
        for j in 1..self.n {
            for i in 0..j {
                acc <<= 1;
                if self.has_edge(i, j) {
                    acc |= 1;
                }
                nb += 1;
                if nb == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    nb = 0;
                }
            }
        }
        if nb > 0 {
            out.push((acc << (6 - nb)) + 63);
        }
        String::from_utf8(out).unwrap()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

// ---- named graphs used by tests and the corpus ------------------------

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Star `K_{1,k}`: vertex 0 is the center.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    Graph::from_edge_list(k + 1, &edges).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b])
}

pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut class = Vec::with_capacity(n);
    for (i, &sz) in parts.iter().enumerate() {
        class.extend(std::iter::repeat_n(i, sz));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if class[u] != class[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer C5
        edges.push((i, i + 5)); // spokes
        edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
    }
    Graph::from_edge_list(10, &edges).unwrap()
}

/// The 3-cube Q3.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(8, &edges).unwrap()
}
