//! Undirected simple graphs and the families the colorings are stated for.
//!
//! Vertices are dense 0-based indices. Family builders attach a label per
//! vertex so that reports can print the conventional names (`v1..vn` on a
//! cycle square, `(x,y)` on a product, `v{s},{i}` on a web graph).

use std::collections::VecDeque;
use std::fmt;

use crate::error::{invalid_param, Error, Result};

/// 0-based vertex index into a [`Graph`].
pub type VertexId = usize;

/// Family-specific name of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// Position `i` in a linear or circular labelling, printed 1-based as `v{i+1}`.
    Seq(usize),
    /// Product coordinate `(x, y)`: `x` indexes the first operand, `y` the second.
    Coord(usize, usize),
    /// Web/wheel vertex `v_{ring,pos}`; the hub is `Ring(0, 0)`, rim positions are 1-based.
    Ring(usize, usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Label::Seq(i) => write!(f, "v{}", i + 1),
            Label::Coord(x, y) => write!(f, "({x},{y})"),
            Label::Ring(s, i) => write!(f, "v{s},{i}"),
        }
    }
}

/// Immutable undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    labels: Option<Vec<Label>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(invalid_param("graph needs at least one vertex"));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            adjacency,
            labels: None,
        })
    }

    fn with_labels(mut self, labels: Vec<Label>) -> Self {
        debug_assert_eq!(labels.len(), self.vertex_count());
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Open neighborhood `N(v)`, sorted ascending.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.adjacency
            .get(v)
            .map(Vec::as_slice)
            .ok_or_else(|| invalid_param(format!("vertex {v} out of range")))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.neighbors(v).map(<[VertexId]>::len)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Unchecked neighborhood access for hot loops; `v` must be in range.
    #[inline]
    pub fn adj(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> Option<Label> {
        self.labels.as_ref().and_then(|l| l.get(v).copied())
    }

    /// Reverse label lookup.
    pub fn vertex_of(&self, label: Label) -> Option<VertexId> {
        self.labels.as_ref()?.iter().position(|&l| l == label)
    }

    /// Display name: the family label when present, else the 1-based index.
    pub fn display_name(&self, v: VertexId) -> String {
        match self.label(v) {
            Some(label) => label.to_string(),
            None => format!("{}", v + 1),
        }
    }

    /// BFS distances from `source`, truncated at `max_depth` (unreached = `None`).
    pub fn bfs_distances(&self, source: VertexId, max_depth: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            if d == max_depth {
                continue;
            }
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0, usize::MAX)
            .iter()
            .all(Option::is_some)
    }

    /// Checks the structural invariants: symmetry, sorted, no loops or duplicates.
    pub fn check_invariants(&self) -> Result<()> {
        for (u, list) in self.adjacency.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidInput(format!(
                    "adjacency of {u} not strictly sorted"
                )));
            }
            for &v in list {
                if v == u {
                    return Err(Error::InvalidInput(format!("self-loop at {u}")));
                }
                if !self.has_edge(v, u) {
                    return Err(Error::InvalidInput(format!("edge ({u},{v}) not symmetric")));
                }
            }
        }
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid_param("path needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &edges)?.with_labels((0..n).map(Label::Seq).collect()))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid_param("cycle needs n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges)?.with_labels((0..n).map(Label::Seq).collect()))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid_param("complete graph needs n >= 1"));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges)?.with_labels((0..n).map(Label::Seq).collect()))
}

/// Wheel `W_{n+1}`: a hub joined to every vertex of an `n`-cycle. Same
/// vertex layout as `web(1, n)`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid_param("wheel needs a rim of n >= 3 vertices"));
    }
    web(1, n)
}

/// `p`-th power: same vertices, `u ~ v` iff `1 <= dist(u, v) <= p`.
pub fn power(g: &Graph, p: usize) -> Result<Graph> {
    if p < 1 {
        return Err(invalid_param("power needs p >= 1"));
    }
    if !g.is_connected() {
        return Err(invalid_param(
            "power is defined here for connected graphs only",
        ));
    }
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        for (v, d) in g.bfs_distances(u, p).into_iter().enumerate() {
            if v > u && matches!(d, Some(d) if d >= 1) {
                edges.push((u, v));
            }
        }
    }
    let mut out = Graph::from_edges(n, &edges)?;
    out.labels = g.labels.clone();
    Ok(out)
}

/// `C_n^2`, labelled `v1..vn` around the cycle.
pub fn cycle_square(n: usize) -> Result<Graph> {
    power(&cycle(n)?, 2)
}

#[inline]
fn product_index(x: VertexId, y: VertexId, h_count: usize) -> VertexId {
    x * h_count + y
}

fn product_labels(g: &Graph, h: &Graph) -> Vec<Label> {
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    (0..gn)
        .flat_map(|x| (0..hn).map(move |y| Label::Coord(x, y)))
        .collect()
}

/// Cartesian-product edges: one coordinate moves along an edge, the other is fixed.
fn cartesian_edges(g: &Graph, h: &Graph) -> Vec<(VertexId, VertexId)> {
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    let mut edges = Vec::new();
    for x in 0..gn {
        for (y1, y2) in h.edges() {
            edges.push((product_index(x, y1, hn), product_index(x, y2, hn)));
        }
    }
    for (x1, x2) in g.edges() {
        for y in 0..hn {
            edges.push((product_index(x1, y, hn), product_index(x2, y, hn)));
        }
    }
    edges
}

/// Diagonal edges of the strong product: both coordinates move along edges.
pub(crate) fn diagonal_edges(g: &Graph, h: &Graph) -> Vec<(VertexId, VertexId)> {
    let hn = h.vertex_count();
    let mut edges = Vec::new();
    for (x1, x2) in g.edges() {
        for (y1, y2) in h.edges() {
            edges.push((product_index(x1, y1, hn), product_index(x2, y2, hn)));
            edges.push((product_index(x1, y2, hn), product_index(x2, y1, hn)));
        }
    }
    edges
}

/// `g □ h`; vertex `(x, y)` has index `x * |h| + y`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.vertex_count() * h.vertex_count();
    Ok(Graph::from_edges(n, &cartesian_edges(g, h))?.with_labels(product_labels(g, h)))
}

/// `g ⊗ h` = Cartesian edges ∪ diagonal edges, same vertex layout as
/// [`cartesian_product`].
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.vertex_count() * h.vertex_count();
    let mut edges = cartesian_edges(g, h);
    edges.extend(diagonal_edges(g, h));
    Ok(Graph::from_edges(n, &edges)?.with_labels(product_labels(g, h)))
}

/// `P_2 □ P_n`.
pub fn grid2n(n: usize) -> Result<Graph> {
    cartesian_product(&path(2)?, &path(n)?)
}

/// `P_n ⊗ P_m`.
pub fn strong_grid(n: usize, m: usize) -> Result<Graph> {
    strong_product(&path(n)?, &path(m)?)
}

/// Index of web vertex `v_{ring,pos}` (`ring >= 1`, `1 <= pos <= n`); the hub is 0.
#[inline]
pub fn web_index(n: usize, ring: usize, pos: usize) -> VertexId {
    (ring - 1) * n + pos
}

/// The `(t, n)`-web graph: a hub, `t` concentric `n`-cycles, the hub joined to
/// every vertex of ring 1, and consecutive rings joined position-wise.
pub fn web(t: usize, n: usize) -> Result<Graph> {
    if t < 1 {
        return Err(invalid_param("web needs t >= 1"));
    }
    if n < 3 {
        return Err(invalid_param("web needs n >= 3"));
    }
    let mut edges = Vec::with_capacity(2 * t * n);
    for pos in 1..=n {
        edges.push((0, web_index(n, 1, pos)));
    }
    for ring in 1..=t {
        for pos in 1..=n {
            let next = pos % n + 1;
            edges.push((web_index(n, ring, pos), web_index(n, ring, next)));
            if ring < t {
                edges.push((web_index(n, ring, pos), web_index(n, ring + 1, pos)));
            }
        }
    }
    let mut labels = vec![Label::Ring(0, 0)];
    for ring in 1..=t {
        labels.extend((1..=n).map(|pos| Label::Ring(ring, pos)));
    }
    Ok(Graph::from_edges(1 + t * n, &edges)?.with_labels(labels))
}
