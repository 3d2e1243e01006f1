//! Exact graph colouring by DSATUR-ordered backtracking.
//!
//! [`is_k_colorable`] is a complete search: a `NotColorable` answer means
//! every assignment was refuted. Colours are introduced in order (a vertex may
//! take colour `c` only once `0..c` are in use), which removes the `k!`
//! relabelling symmetry, and a vertex whose neighbourhood already shows all
//! `k` colours cuts the branch immediately.
//!
//! Runs are bounded by a [`Budget`] polled every
//! [`SolverConfig::check_interval`] search nodes, so wall-clock limits can be
//! supplied by callers that have a clock.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{count_colors, Coloring, Graph, VertexId};

/// Rule for picking the next vertex to colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexOrder {
    /// Most distinct neighbour colours first, then most uncoloured
    /// neighbours.
    #[default]
    SaturationDegree,
    /// Reverse smallest-last order.
    Degeneracy,
    /// Vertex id order.
    Input,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub vertex_order: VertexOrder,
    /// Breaks remaining ties between vertices deterministically.
    pub seed: u64,
    /// Search nodes between budget polls.
    pub check_interval: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            vertex_order: VertexOrder::SaturationDegree,
            seed: 0,
            check_interval: 1024,
        }
    }
}

/// Decides when a search has run long enough.
pub trait Budget {
    /// Polled periodically; returning `true` aborts the search.
    fn exhausted(&mut self) -> bool;
}

/// Never runs out.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&mut self) -> bool {
        false
    }
}

/// Allows a fixed number of polls, i.e. roughly `polls * check_interval`
/// search nodes.
#[derive(Debug, Clone, Copy)]
pub struct PollLimit(pub u64);

impl Budget for PollLimit {
    fn exhausted(&mut self) -> bool {
        if self.0 == 0 {
            true
        } else {
            self.0 -= 1;
            false
        }
    }
}

impl<F: FnMut() -> bool> Budget for F {
    fn exhausted(&mut self) -> bool {
        self()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Colorability {
    /// A proper colouring with at most `k` colours.
    Colorable(Coloring),
    NotColorable,
    Timeout,
}

impl Colorability {
    pub fn is_colorable(&self) -> bool {
        matches!(self, Colorability::Colorable(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChromaticStatus {
    Exact,
    TimeoutWithBounds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    /// The chromatic number when exact, otherwise the best upper bound.
    pub chi: usize,
    /// Proven lower bound; equals `chi` when exact.
    pub lower_bound: usize,
    /// Proper colouring using exactly `chi` colours.
    pub witness: Coloring,
    /// A clique of `g`.
    pub lower_bound_witness: Vec<VertexId>,
    pub status: ChromaticStatus,
}

impl ChromaticResult {
    pub fn is_exact(&self) -> bool {
        self.status == ChromaticStatus::Exact
    }
}

/// Seeded priority used as the last tie-break; lower wins.
fn tie_ranks(n: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut rank = alloc::vec![0; n];
    for (r, v) in order.into_iter().enumerate() {
        rank[v] = r;
    }
    rank
}

fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    g.vertices()
        .map(|v| g.neighbors(v).map(VertexId::index).collect())
        .collect()
}

/// Smallest-last ordering, reversed so the densest core comes first.
fn degeneracy_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = alloc::vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertex remains");
        removed[v] = true;
        order.push(v);
        for &w in &adj[v] {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    order.reverse();
    order
}

fn static_order(adj: &[Vec<usize>], order: VertexOrder) -> Option<Vec<usize>> {
    match order {
        VertexOrder::SaturationDegree => None,
        VertexOrder::Degeneracy => Some(degeneracy_order(adj)),
        VertexOrder::Input => Some((0..adj.len()).collect()),
    }
}

/// First-fit colouring along the configured order.
///
/// With [`VertexOrder::SaturationDegree`] this is the classic DSATUR
/// heuristic; the order is recomputed after every assignment.
pub fn greedy_bound(g: &Graph, cfg: &SolverConfig) -> Coloring {
    let adj = adjacency_lists(g);
    let n = adj.len();
    let rank = tie_ranks(n, cfg.seed);
    let mut colors: Vec<Option<usize>> = alloc::vec![None; n];
    let fixed = static_order(&adj, cfg.vertex_order);
    let mut forbidden: Vec<Vec<bool>> = alloc::vec![Vec::new(); n];
    let mut saturation = alloc::vec![0usize; n];
    for step in 0..n {
        let v = match &fixed {
            Some(order) => order[step],
            None => (0..n)
                .filter(|&v| colors[v].is_none())
                .max_by(|&x, &y| {
                    (saturation[x], adj[x].len(), core::cmp::Reverse(rank[x])).cmp(&(
                        saturation[y],
                        adj[y].len(),
                        core::cmp::Reverse(rank[y]),
                    ))
                })
                .expect("uncoloured vertex remains"),
        };
        let c = (0..)
            .find(|&c| !forbidden[v].get(c).copied().unwrap_or(false))
            .expect("some colour is free");
        colors[v] = Some(c);
        for &w in &adj[v] {
            let slots = &mut forbidden[w];
            if slots.len() <= c {
                slots.resize(c + 1, false);
            }
            if !slots[c] {
                slots[c] = true;
                saturation[w] += 1;
            }
        }
    }
    Coloring::from_colors(colors.into_iter().map(|c| c.expect("all coloured")))
}

/// A clique found greedily from every start vertex, then grown by 1-swaps.
///
/// Its size is a lower bound on the chromatic number.
pub fn clique_bound(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let adj: Vec<Vec<bool>> = g
        .vertices()
        .map(|v| {
            let mut row = alloc::vec![false; n];
            for w in g.neighbors(v) {
                row[w.0] = true;
            }
            row
        })
        .collect();
    let mut best: Vec<usize> = Vec::new();
    for start in 0..n {
        let mut clique = alloc::vec![start];
        let mut candidates: Vec<usize> = (0..n).filter(|&w| adj[start][w]).collect();
        grow_clique(&adj, &mut clique, &mut candidates);
        improve_by_swaps(&adj, &mut clique);
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best.into_iter().map(VertexId).collect()
}

fn grow_clique(adj: &[Vec<bool>], clique: &mut Vec<usize>, candidates: &mut Vec<usize>) {
    while !candidates.is_empty() {
        let pick = *candidates
            .iter()
            .max_by_key(|&&v| {
                let inner = candidates.iter().filter(|&&w| adj[v][w]).count();
                (inner, core::cmp::Reverse(v))
            })
            .expect("nonempty");
        clique.push(pick);
        candidates.retain(|&w| adj[pick][w]);
    }
}

/// Replaces one member by an outside vertex adjacent to all others whenever
/// that lets the clique grow. Each accepted swap strictly enlarges it.
fn improve_by_swaps(adj: &[Vec<bool>], clique: &mut Vec<usize>) {
    let n = adj.len();
    'restart: loop {
        for out in 0..clique.len() {
            for u in 0..n {
                if clique.contains(&u)
                    || !clique
                        .iter()
                        .enumerate()
                        .all(|(i, &c)| i == out || adj[u][c])
                {
                    continue;
                }
                let mut trial: Vec<usize> = clique
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != out)
                    .map(|(_, &c)| c)
                    .collect();
                trial.push(u);
                let mut candidates: Vec<usize> = (0..n)
                    .filter(|&w| !trial.contains(&w) && trial.iter().all(|&c| adj[w][c]))
                    .collect();
                if candidates.is_empty() {
                    continue;
                }
                grow_clique(adj, &mut trial, &mut candidates);
                *clique = trial;
                continue 'restart;
            }
        }
        return;
    }
}

enum Outcome {
    Found,
    Exhausted,
    Timeout,
}

struct Search<'a, B: Budget> {
    adj: Vec<Vec<usize>>,
    k: usize,
    colors: Vec<Option<usize>>,
    /// `conflicts[v * k + c]`: coloured neighbours of `v` with colour `c`.
    conflicts: Vec<u32>,
    saturation: Vec<usize>,
    uncolored_degree: Vec<usize>,
    rank: Vec<usize>,
    fixed: Option<Vec<usize>>,
    nodes: u64,
    check_interval: u64,
    budget: &'a mut B,
}

impl<B: Budget> Search<'_, B> {
    fn select(&self, depth: usize) -> usize {
        if let Some(order) = &self.fixed {
            return order[depth];
        }
        let mut best = usize::MAX;
        let mut best_key = (0, 0, core::cmp::Reverse(usize::MAX));
        for v in 0..self.adj.len() {
            if self.colors[v].is_some() {
                continue;
            }
            let key = (
                self.saturation[v],
                self.uncolored_degree[v],
                core::cmp::Reverse(self.rank[v]),
            );
            if best == usize::MAX || key > best_key {
                best = v;
                best_key = key;
            }
        }
        best
    }

    /// Colours `v` with `c`; returns `false` if some uncoloured neighbour is
    /// left with no admissible colour.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.colors[v] = Some(c);
        let mut alive = true;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.uncolored_degree[w] -= 1;
            let slot = &mut self.conflicts[w * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.saturation[w] += 1;
                if self.colors[w].is_none() && self.saturation[w] == self.k {
                    alive = false;
                }
            }
        }
        alive
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = None;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.uncolored_degree[w] += 1;
            let slot = &mut self.conflicts[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn run(&mut self, depth: usize, used: usize) -> Outcome {
        if depth == self.adj.len() {
            return Outcome::Found;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(self.check_interval) && self.budget.exhausted() {
            return Outcome::Timeout;
        }
        let v = self.select(depth);
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.conflicts[v * self.k + c] > 0 {
                continue;
            }
            if self.assign(v, c) {
                match self.run(depth + 1, used.max(c + 1)) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            self.unassign(v, c);
        }
        Outcome::Exhausted
    }
}

/// Decides whether `g` has a proper colouring with at most `k` colours.
pub fn is_k_colorable<B: Budget>(
    g: &Graph,
    k: usize,
    cfg: &SolverConfig,
    budget: &mut B,
) -> Colorability {
    let n = g.vertex_count();
    if n == 0 {
        return Colorability::Colorable(Coloring::new(0));
    }
    if k == 0 {
        return Colorability::NotColorable;
    }
    if k >= n {
        return Colorability::Colorable(Coloring::from_colors(0..n));
    }
    if clique_bound(g).len() > k {
        return Colorability::NotColorable;
    }
    let greedy = greedy_bound(g, cfg);
    if count_colors(&greedy) <= k {
        return Colorability::Colorable(greedy.normalized());
    }
    let adj = adjacency_lists(g);
    let fixed = static_order(&adj, cfg.vertex_order);
    let mut search = Search {
        uncolored_degree: adj.iter().map(Vec::len).collect(),
        colors: alloc::vec![None; n],
        conflicts: alloc::vec![0; n * k],
        saturation: alloc::vec![0; n],
        rank: tie_ranks(n, cfg.seed),
        fixed,
        k,
        nodes: 0,
        check_interval: cfg.check_interval.max(1),
        budget,
        adj,
    };
    match search.run(0, 0) {
        Outcome::Found => Colorability::Colorable(Coloring::from_colors(
            search.colors.into_iter().map(|c| c.expect("complete")),
        )),
        Outcome::Exhausted => Colorability::NotColorable,
        Outcome::Timeout => Colorability::Timeout,
    }
}

/// Chromatic number by descending search from the DSATUR upper bound down to
/// the clique lower bound.
pub fn chromatic_number<B: Budget>(
    g: &Graph,
    cfg: &SolverConfig,
    budget: &mut B,
) -> ChromaticResult {
    let clique = clique_bound(g);
    let lower = clique.len();
    let mut witness = greedy_bound(g, cfg).normalized();
    let mut upper = count_colors(&witness);
    let mut status = ChromaticStatus::Exact;
    while upper > lower {
        match is_k_colorable(g, upper - 1, cfg, budget) {
            Colorability::Colorable(coloring) => {
                witness = coloring.normalized();
                upper = count_colors(&witness);
            }
            Colorability::NotColorable => break,
            Colorability::Timeout => {
                status = ChromaticStatus::TimeoutWithBounds;
                break;
            }
        }
    }
    ChromaticResult {
        chi: upper,
        lower_bound: if status == ChromaticStatus::Exact {
            upper
        } else {
            lower
        },
        witness,
        lower_bound_witness: clique,
        status,
    }
}
