//! Labelled simple graphs with dense vertex ids, plus colourings.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Dense index of a vertex, contiguous in `0..vertex_count()`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    /// Builds the edge `{u, v}` in canonical orientation.
    ///
    /// Returns `None` for a loop.
    pub fn new(u: VertexId, v: VertexId) -> Option<Edge> {
        match u.cmp(&v) {
            core::cmp::Ordering::Less => Some(Edge { u, v }),
            core::cmp::Ordering::Greater => Some(Edge { u: v, v: u }),
            core::cmp::Ordering::Equal => None,
        }
    }
}

/// A simple undirected graph with unique vertex labels.
///
/// Adjacency is kept in sorted sets so that iteration order, and therefore
/// every export, is deterministic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    label_index: BTreeMap<String, usize>,
    adjacency: Vec<BTreeSet<usize>>,
    edge_count: usize,
    n_hint: Option<u32>,
}

impl Graph {
    pub fn new() -> Graph {
        Graph::default()
    }

    /// An edgeless graph on the given labels.
    pub fn with_labels<I, S>(labels: I) -> Result<Graph>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut g = Graph::new();
        for label in labels {
            g.add_vertex(label)?;
        }
        Ok(g)
    }

    /// Graph on vertices labelled `1..=count` with the given 0-based edges.
    pub fn from_edges(count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::with_labels((1..=count).map(|i| alloc::format!("{i}")))?;
        for &(u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    pub fn set_n_hint(&mut self, n: Option<u32>) {
        self.n_hint = n;
    }

    /// Size of the ground set the vertex labels are drawn from, if any.
    pub fn n_hint(&self) -> Option<u32> {
        self.n_hint
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<VertexId> {
        let label = label.into();
        if self.label_index.contains_key(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        let id = self.labels.len();
        self.label_index.insert(label.clone(), id);
        self.labels.push(label);
        self.adjacency.push(BTreeSet::new());
        Ok(VertexId(id))
    }

    /// Inserts `{u, v}`; returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u.0));
        }
        let inserted = self.adjacency[u.0].insert(v.0);
        if inserted {
            self.adjacency[v.0].insert(u.0);
            self.edge_count += 1;
        }
        Ok(inserted)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.labels.len() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v.0))
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len()).map(VertexId)
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find(&self, label: &str) -> Option<VertexId> {
        self.label_index.get(label).copied().map(VertexId)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency
            .get(u.0)
            .is_some_and(|set| set.contains(&v.0))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    /// Neighbours of `v` in increasing id order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v.0].iter().copied().map(VertexId)
    }

    /// All edges in lexicographic order of `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, set)| {
            set.range(u + 1..).map(move |&v| Edge {
                u: VertexId(u),
                v: VertexId(v),
            })
        })
    }

    /// Returns a copy of the graph without `e`; `self` is untouched.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::MissingEdge(e));
        }
        let mut g = self.clone();
        g.adjacency[e.u.0].remove(&e.v.0);
        g.adjacency[e.v.0].remove(&e.u.0);
        g.edge_count -= 1;
        Ok(g)
    }

    /// Returns the graph with `v` removed. Later vertices shift down by one
    /// id; labels are preserved.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<VertexId> = self.vertices().filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Subgraph induced on `keep`, with vertices renumbered in the given order.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<Graph> {
        let mut position = alloc::vec![usize::MAX; self.vertex_count()];
        let mut g = Graph::new();
        g.n_hint = self.n_hint;
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            position[v.0] = i;
            g.add_vertex(self.labels[v.0].clone())?;
        }
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adjacency[v.0] {
                let j = position[w];
                if j != usize::MAX && i < j {
                    g.add_edge(VertexId(i), VertexId(j))?;
                }
            }
        }
        Ok(g)
    }

    /// Checks that adjacency is symmetric and loop-free and that the cached
    /// edge count agrees with it.
    pub fn is_consistent(&self) -> bool {
        let mut half_degrees = 0;
        for (u, set) in self.adjacency.iter().enumerate() {
            for &v in set {
                if v == u || v >= self.adjacency.len() || !self.adjacency[v].contains(&u) {
                    return false;
                }
            }
            half_degrees += set.len();
        }
        half_degrees == 2 * self.edge_count
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(BTreeSet::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// `true` when the graph is a single cycle through every vertex.
    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 3
            && self.adjacency.iter().all(|set| set.len() == 2)
            && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|e| {
            let (small, large) = if self.degree(e.u) <= self.degree(e.v) {
                (e.u, e.v)
            } else {
                (e.v, e.u)
            };
            self.adjacency[small.0]
                .iter()
                .all(|w| !self.adjacency[large.0].contains(w))
        })
    }
}

/// A colour id. Colourings built by this crate use small integers.
pub type Color = usize;

/// A possibly partial assignment of colours to vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Coloring {
    assignment: Vec<Option<Color>>,
}

impl Coloring {
    /// An empty colouring over `len` vertices.
    pub fn new(len: usize) -> Coloring {
        Coloring {
            assignment: alloc::vec![None; len],
        }
    }

    pub fn from_colors(colors: impl IntoIterator<Item = Color>) -> Coloring {
        Coloring {
            assignment: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn get(&self, v: VertexId) -> Option<Color> {
        self.assignment.get(v.0).copied().flatten()
    }

    pub fn set(&mut self, v: VertexId, color: Color) {
        if v.0 >= self.assignment.len() {
            self.assignment.resize(v.0 + 1, None);
        }
        self.assignment[v.0] = Some(color);
    }

    pub fn unset(&mut self, v: VertexId) {
        if let Some(slot) = self.assignment.get_mut(v.0) {
            *slot = None;
        }
    }

    /// Coloured vertices with their colours, in id order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Color)> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .filter_map(|(v, c)| c.map(|c| (VertexId(v), c)))
    }

    pub fn is_total_on(&self, g: &Graph) -> bool {
        g.vertices().all(|v| self.get(v).is_some())
    }

    /// Colour classes keyed by colour id.
    pub fn classes(&self) -> BTreeMap<Color, Vec<VertexId>> {
        let mut classes: BTreeMap<Color, Vec<VertexId>> = BTreeMap::new();
        for (v, c) in self.iter() {
            classes.entry(c).or_default().push(v);
        }
        classes
    }

    /// Renumbers colours to `0..k` in order of first appearance.
    pub fn normalized(&self) -> Coloring {
        let mut relabel: BTreeMap<Color, Color> = BTreeMap::new();
        let assignment = self
            .assignment
            .iter()
            .map(|slot| {
                slot.map(|c| {
                    let next = relabel.len();
                    *relabel.entry(c).or_insert(next)
                })
            })
            .collect();
        Coloring { assignment }
    }
}

/// Number of distinct colour ids used by `c`.
pub fn count_colors(c: &Coloring) -> usize {
    c.iter()
        .map(|(_, color)| color)
        .collect::<BTreeSet<_>>()
        .len()
}

/// Outcome of [`is_proper_coloring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringVerdict {
    Proper,
    Invalid {
        uncolored: Vec<VertexId>,
        monochromatic: Vec<Edge>,
    },
}

impl ColoringVerdict {
    pub fn is_proper(&self) -> bool {
        matches!(self, ColoringVerdict::Proper)
    }
}

/// Checks that `c` colours every vertex of `g` and no edge is monochromatic.
///
/// On failure every uncoloured vertex and every monochromatic edge is listed.
pub fn is_proper_coloring(g: &Graph, c: &Coloring) -> ColoringVerdict {
    let uncolored: Vec<VertexId> = g.vertices().filter(|&v| c.get(v).is_none()).collect();
    let monochromatic: Vec<Edge> = g
        .edges()
        .filter(|e| matches!((c.get(e.u), c.get(e.v)), (Some(x), Some(y)) if x == y))
        .collect();
    if uncolored.is_empty() && monochromatic.is_empty() {
        ColoringVerdict::Proper
    } else {
        ColoringVerdict::Invalid {
            uncolored,
            monochromatic,
        }
    }
}
