//! The defining graph: parsing, spanning tree, basic cycles and the dual graph.
//!
//! Vertices are the integers `1..=n`. Edges are addressed internally by
//! [`EdgeId`], their position in the order they were given; labels are the
//! user-facing names.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub a: Vertex,
    pub b: Vertex,
}

impl Edge {
    pub fn new(label: impl Into<String>, a: Vertex, b: Vertex) -> Self {
        Edge {
            label: label.into(),
            a,
            b,
        }
    }

    /// Endpoints with the smaller id first.
    pub fn ends(&self) -> (Vertex, Vertex) {
        (self.a.min(self.b), self.a.max(self.b))
    }

    pub fn touches(&self, v: Vertex) -> bool {
        self.a == v || self.b == v
    }

    pub fn other(&self, v: Vertex) -> Vertex {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    pub fn meets(&self, other: &Edge) -> bool {
        self.touches(other.a) || self.touches(other.b)
    }
}

/// A simple graph on the vertices `1..=n` with uniquely labelled edges.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    by_label: HashMap<String, EdgeId>,
    // adjacency sorted by neighbour, index 0 unused
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

pub(crate) fn valid_label(label: &str) -> bool {
    let mut chars = label.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Graph {
    /// Builds a graph whose vertex count is the largest vertex mentioned.
    pub fn from_edges(edges: Vec<Edge>) -> Result<Self> {
        let n = edges.iter().map(|e| e.a.max(e.b)).max().unwrap_or(0);
        Self::with_vertices(n, edges)
    }

    pub fn with_vertices(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut by_label = HashMap::with_capacity(edges.len());
        let mut pairs: HashMap<(Vertex, Vertex), usize> = HashMap::new();
        let mut adj = vec![Vec::new(); n + 1];
        for (idx, e) in edges.iter().enumerate() {
            if !valid_label(&e.label) {
                return Err(Error::Parse(format!("invalid edge label {:?}", e.label)));
            }
            for v in [e.a, e.b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if e.a == e.b {
                return Err(Error::Loop {
                    label: e.label.clone(),
                    vertex: e.a,
                });
            }
            if let Some(&prev) = pairs.get(&e.ends()) {
                let (a, b) = e.ends();
                return Err(Error::DuplicatePair {
                    first: edges[prev].label.clone(),
                    second: e.label.clone(),
                    a,
                    b,
                });
            }
            pairs.insert(e.ends(), idx);
            if by_label.insert(e.label.clone(), EdgeId(idx)).is_some() {
                return Err(Error::DuplicateLabel(e.label.clone()));
            }
            adj[e.a].push((e.b, EdgeId(idx)));
            adj[e.b].push((e.a, EdgeId(idx)));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            by_label,
            adj,
        })
    }

    /// Parses the line-oriented graph format: `A B LABEL` per line, `#`
    /// comments, blank lines ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::Syntax {
                    line: line_no,
                    message: format!("expected `A B LABEL`, found {} fields", fields.len()),
                });
            }
            let vertex = |s: &str| -> Result<Vertex> {
                if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Syntax {
                        line: line_no,
                        message: format!("vertex {s:?} is not a positive integer"),
                    });
                }
                match s.parse::<Vertex>() {
                    Ok(0) => Err(Error::Syntax {
                        line: line_no,
                        message: "vertex 0 is not allowed; vertices start at 1".into(),
                    }),
                    Ok(v) => Ok(v),
                    Err(_) => Err(Error::Syntax {
                        line: line_no,
                        message: format!("vertex {s:?} is too large"),
                    }),
                }
            };
            let a = vertex(fields[0])?;
            let b = vertex(fields[1])?;
            if !valid_label(fields[2]) {
                return Err(Error::Syntax {
                    line: line_no,
                    message: format!("invalid label {:?}", fields[2]),
                });
            }
            edges.push(Edge::new(fields[2], a, b));
        }
        Self::from_edges(edges)
    }

    /// Renders the graph in the same format [`Graph::parse`] reads.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            out.push_str(&format!("{} {} {}\n", e.a, e.b, e.label));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id.0]
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn label(&self, id: EdgeId) -> &str {
        &self.edges[id.0].label
    }

    pub fn lookup(&self, label: &str) -> Result<EdgeId> {
        self.by_label
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn neighbours(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        if a == 0 || a > self.n {
            return None;
        }
        self.adj[a]
            .binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|pos| self.adj[a][pos].1)
    }

    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_between(a, b).is_some()
    }

    /// Edge ids sorted by label.
    pub fn ids_by_label(&self) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = self.edge_ids().collect();
        ids.sort_by(|x, y| self.label(*x).cmp(self.label(*y)));
        ids
    }

    /// Parses a whitespace-separated list of edge labels.
    pub fn parse_word(&self, text: &str) -> Result<EdgeWord> {
        text.split_whitespace()
            .map(|l| self.lookup(l))
            .collect::<Result<Vec<_>>>()
            .map(EdgeWord)
    }

    pub fn word_to_string(&self, w: &EdgeWord) -> String {
        w.0.iter()
            .map(|&e| self.label(e))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Cycle rank `|E| - n + 1` of a connected graph.
    pub fn cycle_rank(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.n)
    }

    pub fn connected_components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut vertices = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        vertices.push(w);
                        queue.push_back(w);
                    }
                }
            }
            vertices.sort_unstable();
            let edges = self
                .edge_ids()
                .filter(|&e| vertices.binary_search(&self.edge(e).a).is_ok())
                .collect();
            out.push(Component { vertices, edges });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.connected_components().len() == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        let components = self.connected_components().len();
        if components == 1 {
            Ok(())
        } else {
            Err(Error::Disconnected { components })
        }
    }

    /// True when the graph is the complete graph on four vertices.
    pub fn is_k4(&self) -> bool {
        self.n == 4 && self.edges.len() == 6
    }

    /// The subgraph formed by the given edges, with its vertices renumbered
    /// `1..` in increasing order of their original ids. Returns the map from
    /// new to original vertex ids alongside.
    pub fn edge_subgraph(&self, ids: &[EdgeId]) -> Result<(Graph, Vec<Vertex>)> {
        let mut verts: Vec<Vertex> = ids
            .iter()
            .flat_map(|&e| [self.edge(e).a, self.edge(e).b])
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let new_of = |v: Vertex| verts.binary_search(&v).unwrap() + 1;
        let edges = ids
            .iter()
            .map(|&e| {
                let edge = self.edge(e);
                Edge::new(edge.label.clone(), new_of(edge.a), new_of(edge.b))
            })
            .collect();
        Ok((Graph::with_vertices(verts.len(), edges)?, verts))
    }
}

/// A connected component: its vertices and the edges among them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

/// A word in the edge generators. Every generator is an involution, so the
/// inverse of a word is its reversal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeWord(pub Vec<EdgeId>);

impl EdgeWord {
    pub fn new() -> Self {
        EdgeWord(Vec::new())
    }

    pub fn letters(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> EdgeWord {
        EdgeWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &EdgeWord) -> EdgeWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        EdgeWord(letters)
    }

    pub fn push(&mut self, e: EdgeId) {
        self.0.push(e);
    }

    pub fn extend(&mut self, other: &EdgeWord) {
        self.0.extend_from_slice(&other.0);
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(a: &EdgeWord, b: &EdgeWord) -> EdgeWord {
        let mut w = a.inverse();
        w.extend(&b.inverse());
        w.extend(a);
        w.extend(b);
        w
    }
}

impl From<Vec<EdgeId>> for EdgeWord {
    fn from(v: Vec<EdgeId>) -> Self {
        EdgeWord(v)
    }
}

/// One step of a tree path, traversing `edge` from `from` to `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathStep {
    pub edge: EdgeId,
    pub from: Vertex,
    pub to: Vertex,
}

/// A spanning tree rooted at vertex 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    in_tree: Vec<bool>,
    // parent[v] = (parent vertex, edge); None for the root and index 0
    parent: Vec<Option<(Vertex, EdgeId)>>,
    depth: Vec<usize>,
}

impl SpanningTree {
    /// Breadth-first tree from vertex 1, neighbours visited in ascending order.
    pub fn bfs(g: &Graph) -> Result<Self> {
        g.require_connected()?;
        let mut in_tree = vec![false; g.edge_count()];
        let mut parent = vec![None; g.n() + 1];
        let mut depth = vec![0; g.n() + 1];
        let mut seen = vec![false; g.n() + 1];
        seen[1] = true;
        let mut queue = VecDeque::from([1]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    in_tree[e.0] = true;
                    parent[w] = Some((v, e));
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(SpanningTree {
            in_tree,
            parent,
            depth,
        })
    }

    /// A caller-chosen spanning tree given by edge labels.
    pub fn from_labels<S: AsRef<str>>(g: &Graph, labels: &[S]) -> Result<Self> {
        g.require_connected()?;
        let ids = labels
            .iter()
            .map(|l| g.lookup(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let mut in_tree = vec![false; g.edge_count()];
        for &e in &ids {
            if in_tree[e.0] {
                return Err(Error::InvalidTree(format!("{} listed twice", g.label(e))));
            }
            in_tree[e.0] = true;
        }
        if ids.len() + 1 != g.n() {
            return Err(Error::InvalidTree(format!(
                "{} edges given, a spanning tree on {} vertices has {}",
                ids.len(),
                g.n(),
                g.n() - 1
            )));
        }
        let mut parent = vec![None; g.n() + 1];
        let mut depth = vec![0; g.n() + 1];
        let mut seen = vec![false; g.n() + 1];
        seen[1] = true;
        let mut reached = 1;
        let mut queue = VecDeque::from([1]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.neighbours(v) {
                if in_tree[e.0] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    parent[w] = Some((v, e));
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != g.n() {
            return Err(Error::InvalidTree("edges do not span the graph".into()));
        }
        Ok(SpanningTree {
            in_tree,
            parent,
            depth,
        })
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.in_tree[e.0]
    }

    pub fn tree_edges(&self) -> Vec<EdgeId> {
        (0..self.in_tree.len())
            .filter(|&i| self.in_tree[i])
            .map(EdgeId)
            .collect()
    }

    /// Edges outside the tree, in edge order.
    pub fn chords(&self) -> Vec<EdgeId> {
        (0..self.in_tree.len())
            .filter(|&i| !self.in_tree[i])
            .map(EdgeId)
            .collect()
    }

    pub fn parent(&self, v: Vertex) -> Option<(Vertex, EdgeId)> {
        self.parent[v]
    }

    /// The unique path in the tree from `a` to `b`.
    pub fn path(&self, a: Vertex, b: Vertex) -> Vec<PathStep> {
        let (mut x, mut y) = (a, b);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while self.depth[x] > self.depth[y] {
            let (p, e) = self.parent[x].expect("non-root has a parent");
            up.push(PathStep {
                edge: e,
                from: x,
                to: p,
            });
            x = p;
        }
        while self.depth[y] > self.depth[x] {
            let (p, e) = self.parent[y].expect("non-root has a parent");
            down.push(PathStep {
                edge: e,
                from: p,
                to: y,
            });
            y = p;
        }
        while x != y {
            let (px, ex) = self.parent[x].expect("non-root has a parent");
            let (py, ey) = self.parent[y].expect("non-root has a parent");
            up.push(PathStep {
                edge: ex,
                from: x,
                to: px,
            });
            down.push(PathStep {
                edge: ey,
                from: py,
                to: y,
            });
            x = px;
            y = py;
        }
        up.extend(down.into_iter().rev());
        up
    }
}

/// The cycle closed by one chord. Local vertex 1 is the chord's smaller
/// endpoint, local vertex `m` the other one; `u_i` joins local `i-1` and `i`
/// for `i = 2..=m`, and `u_1` is the chord.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicCycle {
    pub chord: EdgeId,
    local_to_global: Vec<Vertex>,
    // u_2..u_m
    cycle_edges: Vec<EdgeId>,
    global_to_local: Vec<Option<usize>>,
}

impl BasicCycle {
    fn new(g: &Graph, tree: &SpanningTree, chord: EdgeId) -> Self {
        let (start, end) = g.edge(chord).ends();
        let path = tree.path(start, end);
        let mut local_to_global = vec![start];
        local_to_global.extend(path.iter().map(|s| s.to));
        let cycle_edges = path.iter().map(|s| s.edge).collect();
        let mut global_to_local = vec![None; g.n() + 1];
        for (i, &v) in local_to_global.iter().enumerate() {
            global_to_local[v] = Some(i + 1);
        }
        BasicCycle {
            chord,
            local_to_global,
            cycle_edges,
            global_to_local,
        }
    }

    /// Cycle length.
    pub fn m(&self) -> usize {
        self.local_to_global.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.local_to_global
    }

    /// The tree edges `u_2..u_m`.
    pub fn tree_edges(&self) -> &[EdgeId] {
        &self.cycle_edges
    }

    /// Global vertex of a local label, taken cyclically (`0` means `m`).
    pub fn global(&self, local: usize) -> Vertex {
        let m = self.m();
        self.local_to_global[(local + m - 1) % m]
    }

    pub fn local(&self, v: Vertex) -> Option<usize> {
        self.global_to_local.get(v).copied().flatten()
    }

    /// `u_i` with cyclic indexing: `u_{m+1} = u_1`, `u_0 = u_m`.
    pub fn u(&self, i: usize) -> EdgeId {
        let m = self.m();
        let i = (i + m - 1) % m + 1;
        if i == 1 {
            self.chord
        } else {
            self.cycle_edges[i - 2]
        }
    }

    /// Local index of an edge lying on the cycle.
    pub fn position(&self, e: EdgeId) -> Option<usize> {
        if e == self.chord {
            return Some(1);
        }
        self.cycle_edges.iter().position(|&c| c == e).map(|p| p + 2)
    }
}

pub fn basic_cycles(g: &Graph, tree: &SpanningTree) -> Vec<BasicCycle> {
    tree.chords()
        .into_iter()
        .map(|c| BasicCycle::new(g, tree, c))
        .collect()
}

/// The graph on the edges of `g`, two edges adjacent when they share a
/// vertex. Dual vertex `k` is the `k`-th edge of `g` in label order.
pub fn dual_graph(g: &Graph) -> Graph {
    let order = g.ids_by_label();
    let mut edges = Vec::new();
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if g.edge(order[i]).meets(g.edge(order[j])) {
                edges.push(Edge::new(format!("e{}_{}", i + 1, j + 1), i + 1, j + 1));
            }
        }
    }
    Graph::with_vertices(order.len(), edges).expect("dual of a simple graph is simple")
}

/// A claw: a centre with three pairwise non-adjacent neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fork {
    pub centre: Vertex,
    pub leaves: [Vertex; 3],
}

/// Finds an induced fork (claw), the subgraph that no dual graph contains.
pub fn forbidden_fork(g: &Graph) -> Option<Fork> {
    for centre in 1..=g.n() {
        let nb: Vec<Vertex> = g.neighbours(centre).iter().map(|&(w, _)| w).collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.adjacent(nb[i], nb[j]) {
                    continue;
                }
                for k in j + 1..nb.len() {
                    if !g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]) {
                        return Some(Fork {
                            centre,
                            leaves: [nb[i], nb[j], nb[k]],
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn has_forbidden_fork(g: &Graph) -> bool {
    forbidden_fork(g).is_some()
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph on {} vertices:", self.n)?;
        for e in &self.edges {
            write!(f, " {}=({},{})", e.label, e.a, e.b)?;
        }
        Ok(())
    }
}

/// Standard graph families and the named graphs used throughout the tests.
pub mod named {
    use super::*;

    fn letter_label(k: usize) -> String {
        if k < 26 {
            ((b'a' + k as u8) as char).to_string()
        } else {
            format!("e{k}")
        }
    }

    /// Path on `n` vertices, edges `a, b, ...` along it.
    pub fn path(n: usize) -> Graph {
        let edges = (1..n).map(|i| Edge::new(letter_label(i - 1), i, i + 1)).collect();
        Graph::with_vertices(n, edges).unwrap()
    }

    /// Cycle on `n >= 3` vertices; the last edge closes `(n, 1)`.
    pub fn cycle(n: usize) -> Graph {
        let edges = (1..=n)
            .map(|i| Edge::new(letter_label(i - 1), i, i % n + 1))
            .collect();
        Graph::with_vertices(n, edges).unwrap()
    }

    /// Star with centre 1 and `k` leaves.
    pub fn star(k: usize) -> Graph {
        let edges = (0..k).map(|i| Edge::new(letter_label(i), 1, i + 2)).collect();
        Graph::with_vertices(k + 1, edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                edges.push(Edge::new(letter_label(edges.len()), a, b));
            }
        }
        Graph::with_vertices(n, edges).unwrap()
    }

    /// `K_4` with the edge `(3,4)` removed: two triangles sharing an edge.
    pub fn k4_minus_edge() -> Graph {
        Graph::from_edges(vec![
            Edge::new("a", 1, 2),
            Edge::new("b", 1, 3),
            Edge::new("c", 1, 4),
            Edge::new("d", 2, 3),
            Edge::new("e", 2, 4),
        ])
        .unwrap()
    }

    /// Six vertices, a square and two triangles; chords `x, y, z` against
    /// the tree `{a, b, c, d, e}`.
    pub fn sixpts() -> Graph {
        Graph::from_edges(vec![
            Edge::new("a", 1, 2),
            Edge::new("b", 2, 3),
            Edge::new("c", 1, 5),
            Edge::new("d", 2, 6),
            Edge::new("e", 4, 5),
            Edge::new("x", 1, 4),
            Edge::new("y", 3, 6),
            Edge::new("z", 5, 6),
        ])
        .unwrap()
    }

    pub const SIXPTS_TREE: [&str; 5] = ["a", "b", "c", "d", "e"];

    /// `K_4` labelled with the chord `x = (1,3)` closing the cycle
    /// `x, u2, u3`, tree `{u2, u3, v}`.
    pub fn k4_labelled() -> Graph {
        Graph::from_edges(vec![
            Edge::new("x", 1, 3),
            Edge::new("u2", 1, 2),
            Edge::new("u3", 2, 3),
            Edge::new("v", 2, 4),
            Edge::new("y", 1, 4),
            Edge::new("z", 3, 4),
        ])
        .unwrap()
    }

    pub const K4_TREE: [&str; 3] = ["u2", "u3", "v"];

    /// Random connected graph on `n` vertices with cycle rank `t`.
    pub fn random_connected(n: usize, t: usize, seed: u64) -> Graph {
        assert!(n >= 1 && t <= n * (n - 1) / 2 + 1 - n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<Vertex> = (1..=n).collect();
        order.shuffle(&mut rng);
        let mut pairs = Vec::new();
        for i in 1..n {
            let j = rng.gen_range(0..i);
            let (a, b) = (order[i], order[j]);
            pairs.push((a.min(b), a.max(b)));
        }
        let mut rest: Vec<(Vertex, Vertex)> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .filter(|p| !pairs.contains(p))
            .collect();
        rest.shuffle(&mut rng);
        pairs.extend(rest.into_iter().take(t));
        pairs.sort_unstable();
        let edges = pairs
            .into_iter()
            .enumerate()
            .map(|(k, (a, b))| Edge::new(letter_label(k), a, b))
            .collect();
        Graph::with_vertices(n, edges).unwrap()
    }
}
