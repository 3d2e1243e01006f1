//! The homomorphism `h: M(G_{n-1}) -> G_n` and the lower bound
//! `chi(G_n) >= n - 2` obtained by chaining it from `G_5`.
//!
//! On base vertices `h` is the identity on chords. The clone of `ab` goes to
//! `an` when `a != 1` and to `bn` when `a = 1`, and the apex goes to
//! `{1, n-1}`. Since a homomorphism cannot lower the chromatic number and the
//! Mycielski construction raises it by one, `chi(G_n) >= chi(G_{n-1}) + 1`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::chord::{Chord, ChordSpace};
use crate::criticality::SolverCheck;
use crate::error::{Error, Result};
use crate::generators::{gn_from_space, mycielski, mycielski_iter, mycielski_role, MycielskiRole};
use crate::graph::{Edge, Graph, VertexId};
use crate::solver::{chromatic_number, is_k_colorable, Budget, Colorability, SolverConfig};

/// A vertex of `M(G_{n-1})` named by its chord.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MycielskiVertex {
    Base(Chord),
    Clone(Chord),
    Star,
}

/// Image of `v` under `h` as a chord of `C_n`.
pub fn h_image(v: MycielskiVertex, n: u32) -> Result<Chord> {
    if n < 5 {
        return Err(Error::InvalidParameters(alloc::format!(
            "h needs n >= 5, got {n}"
        )));
    }
    let check = |c: Chord| {
        if Chord::is_stable(c.a, c.b, n - 1) {
            Ok(c)
        } else {
            Err(Error::InvalidChord {
                a: c.a,
                b: c.b,
                n: n - 1,
            })
        }
    };
    match v {
        MycielskiVertex::Base(c) => Chord::new(check(c)?.a, c.b, n),
        MycielskiVertex::Clone(c) => {
            let c = check(c)?;
            let end = if c.a != 1 { c.a } else { c.b };
            Chord::new(end, n, n)
        }
        MycielskiVertex::Star => Chord::new(1, n - 1, n),
    }
}

/// A total vertex map between two graphs, stored by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    mapping: Vec<VertexId>,
}

impl VertexMap {
    pub fn new(mapping: Vec<VertexId>) -> VertexMap {
        VertexMap { mapping }
    }

    pub fn identity(len: usize) -> VertexMap {
        VertexMap::new((0..len).map(VertexId).collect())
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn image(&self, v: VertexId) -> VertexId {
        self.mapping[v.0]
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.mapping
            .iter()
            .enumerate()
            .map(|(i, &w)| (VertexId(i), w))
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &VertexMap) -> VertexMap {
        VertexMap::new(self.mapping.iter().map(|&w| then.image(w)).collect())
    }
}

/// A domain edge whose endpoints are not mapped to an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub edge: Edge,
    pub images: (VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomomorphismVerdict {
    Valid,
    Invalid(Vec<Violation>),
}

impl HomomorphismVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, HomomorphismVerdict::Valid)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            HomomorphismVerdict::Valid => &[],
            HomomorphismVerdict::Invalid(v) => v,
        }
    }
}

fn check_map(domain: &Graph, codomain: &Graph, map: &VertexMap) -> Result<()> {
    if map.len() != domain.vertex_count() {
        return Err(Error::InvalidParameters(alloc::format!(
            "map covers {} vertices, domain has {}",
            map.len(),
            domain.vertex_count()
        )));
    }
    match map.iter().find(|&(_, w)| w.0 >= codomain.vertex_count()) {
        Some((_, w)) => Err(Error::InvalidVertex(w.0)),
        None => Ok(()),
    }
}

/// Violations among the given domain edges.
pub fn violations_among(
    codomain: &Graph,
    map: &VertexMap,
    edges: impl IntoIterator<Item = Edge>,
) -> Vec<Violation> {
    edges
        .into_iter()
        .filter_map(|edge| {
            let images = (map.image(edge.u), map.image(edge.v));
            (!codomain.has_edge(images.0, images.1)).then_some(Violation { edge, images })
        })
        .collect()
}

/// Checks that every edge of `domain` maps onto an edge of `codomain`.
pub fn verify_homomorphism(
    domain: &Graph,
    codomain: &Graph,
    map: &VertexMap,
) -> Result<HomomorphismVerdict> {
    check_map(domain, codomain, map)?;
    let violations = violations_among(codomain, map, domain.edges());
    Ok(if violations.is_empty() {
        HomomorphismVerdict::Valid
    } else {
        HomomorphismVerdict::Invalid(violations)
    })
}

/// `h` together with its domain `M(G_{n-1})` and codomain `G_n`.
#[derive(Debug, Clone)]
pub struct HomomorphismInstance {
    pub n: u32,
    pub domain: Graph,
    pub codomain: Graph,
    pub roles: Vec<MycielskiVertex>,
    pub map: VertexMap,
}

impl HomomorphismInstance {
    /// `"domain_label -> codomain_label"` for every domain vertex.
    pub fn map_lines(&self) -> impl Iterator<Item = String> + '_ {
        self.map
            .iter()
            .map(|(v, w)| alloc::format!("{} -> {}", self.domain.label(v), self.codomain.label(w)))
    }
}

/// Assembles `h: M(G_{n-1}) -> G_n` for `n >= 5`.
pub fn build_h(n: u32) -> Result<HomomorphismInstance> {
    if n < 5 {
        return Err(Error::InvalidParameters(alloc::format!(
            "h needs n >= 5, got {n}"
        )));
    }
    let small = ChordSpace::new(n - 1)?;
    let large = ChordSpace::new(n)?;
    let domain = mycielski(&gn_from_space(&small));
    let codomain = gn_from_space(&large);
    let mut roles = Vec::with_capacity(domain.vertex_count());
    let mut mapping = Vec::with_capacity(domain.vertex_count());
    for v in domain.vertices() {
        let role = match mycielski_role(v, small.len()).expect("vertex of M(G)") {
            MycielskiRole::Base(u) => MycielskiVertex::Base(small.chord(u)),
            MycielskiRole::Clone(u) => MycielskiVertex::Clone(small.chord(u)),
            MycielskiRole::Star => MycielskiVertex::Star,
        };
        let image = h_image(role, n)?;
        roles.push(role);
        mapping.push(large.index_of(image).expect("image is a chord of C_n"));
    }
    Ok(HomomorphismInstance {
        n,
        domain,
        codomain,
        roles,
        map: VertexMap::new(mapping),
    })
}

/// How the step `chi(G_m) >= chi(G_{m-1}) + 1` is justified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepEvidence {
    /// The solver showed `M(G_{m-1})` is not `(m-3)`-colourable.
    SolverChecked,
    /// Relies on the Mycielski construction raising the chromatic number.
    Cited,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLevel {
    pub m: u32,
    pub domain_edges: usize,
    pub violations: usize,
    pub evidence: StepEvidence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundReport {
    pub n: u32,
    /// `chi(G_5)` as computed by the solver.
    pub base_chi: usize,
    pub levels: Vec<ChainLevel>,
    /// `(k, chi(M_k))` sanity checks of the Mycielski increment.
    pub mycielski_checks: Vec<(u32, Option<usize>)>,
    /// The certified lower bound on `chi(G_n)`.
    pub bound: usize,
}

impl LowerBoundReport {
    pub fn fully_machine_checked(&self) -> bool {
        self.levels
            .iter()
            .skip(1)
            .all(|l| l.evidence == StepEvidence::SolverChecked)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainOptions {
    /// Levels `m` up to this value try to confirm the increment with the
    /// solver; higher levels cite it.
    pub solver_max_level: u32,
    /// Largest `k` for which `chi(M_k) = k` is recomputed.
    pub mycielski_max_k: u32,
}

impl Default for ChainOptions {
    fn default() -> Self {
        ChainOptions {
            solver_max_level: 10,
            mycielski_max_k: 5,
        }
    }
}

/// Certifies `chi(G_n) >= n - 2` by checking `h` at every level
/// `5 <= m <= n` on top of the base case `chi(G_5) = 3`.
pub fn lower_bound_chain<B: Budget>(
    n: u32,
    cfg: &SolverConfig,
    budget: &mut B,
    options: &ChainOptions,
) -> Result<LowerBoundReport> {
    if n < 5 {
        return Err(Error::InvalidParameters(alloc::format!(
            "the chain starts at G_5, got n = {n}"
        )));
    }
    let base = chromatic_number(&gn_from_space(&ChordSpace::new(5)?), cfg, budget);
    if !base.is_exact() {
        return Err(Error::Timeout(String::from("chi(G_5)")));
    }
    if base.chi != 3 {
        return Err(Error::InvalidParameters(alloc::format!(
            "base case failed: chi(G_5) = {}",
            base.chi
        )));
    }

    let mycielski_checks = (2..=options.mycielski_max_k)
        .map(|k| {
            let m = mycielski_iter(k).expect("k >= 2");
            let r = chromatic_number(&m, cfg, budget);
            (k, r.is_exact().then_some(r.chi))
        })
        .collect();

    let mut levels = Vec::new();
    for m in 5..=n {
        let inst = build_h(m)?;
        let verdict = verify_homomorphism(&inst.domain, &inst.codomain, &inst.map)?;
        if !verdict.is_valid() {
            return Err(Error::InvalidHomomorphism {
                level: m,
                violations: verdict.violations().len(),
            });
        }
        let evidence = if m <= options.solver_max_level {
            increment_evidence(&inst.domain, m, cfg, budget)?
        } else {
            StepEvidence::Cited
        };
        levels.push(ChainLevel {
            m,
            domain_edges: inst.domain.edge_count(),
            violations: 0,
            evidence,
        });
    }
    Ok(LowerBoundReport {
        n,
        base_chi: base.chi,
        levels,
        mycielski_checks,
        bound: n as usize - 2,
    })
}

/// Solver check that `M(G_{m-1})` needs at least `m - 2` colours.
pub fn increment_evidence<B: Budget>(
    domain: &Graph,
    m: u32,
    cfg: &SolverConfig,
    budget: &mut B,
) -> Result<StepEvidence> {
    match is_k_colorable(domain, m as usize - 3, cfg, budget) {
        Colorability::NotColorable => Ok(StepEvidence::SolverChecked),
        Colorability::Timeout => Ok(StepEvidence::Cited),
        Colorability::Colorable(_) => Err(Error::InvalidParameters(alloc::format!(
            "M(G_{}) is {}-colourable",
            m - 1,
            m - 3
        ))),
    }
}

/// Solver answer to "is `chi(G_n)` at least `bound`?", for cross-checks.
pub fn solver_agrees_with_bound<B: Budget>(
    n: u32,
    bound: usize,
    cfg: &SolverConfig,
    budget: &mut B,
) -> Result<SolverCheck> {
    let g = gn_from_space(&ChordSpace::new(n)?);
    Ok(
        match is_k_colorable(&g, bound.saturating_sub(1), cfg, budget) {
            Colorability::NotColorable => SolverCheck::Confirmed,
            Colorability::Colorable(_) => SolverCheck::Refuted,
            Colorability::Timeout => SolverCheck::Timeout,
        },
    )
}
