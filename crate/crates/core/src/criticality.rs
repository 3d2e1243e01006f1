//! Explicit `(n-3)`-colourings of `G_n - e`, one per edge `e`.
//!
//! Every certificate starts from the min-based colouring with respect to a
//! small set `A` of cycle points: a chord `xy` not contained in `A` gets colour
//! `min({x, y} \ A)`. Two disjoint chords never share that colour, so the
//! partial colouring is proper. The chords inside `A` are then split among one
//! to three extra colours according to how `e` sits on the cycle.
//!
//! | case                 | `A`                    | extra colours |
//! |----------------------|------------------------|---------------|
//! | crossing, `1 = a`    | `{a, b, c, d}`         | 1             |
//! | crossing, `1 < a`    | `{1, a, b, c, d}`      | 2             |
//! | transverse           | `{1, a, b, c, d, x}`   | 3             |
//!
//! with `x = c + 1` in the transverse case.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::chord::{classify_pair, normalize_pair, Chord, ChordSpace, PairClass};
use crate::error::{Error, Result};
use crate::graph::{count_colors, is_proper_coloring, Color, Coloring, Edge, Graph, VertexId};
use crate::solver::{chromatic_number, is_k_colorable, Budget, Colorability, SolverConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CriticalCase {
    CrossingWith1,
    CrossingWithout1,
    Transverse,
}

impl CriticalCase {
    pub fn name(self) -> &'static str {
        match self {
            CriticalCase::CrossingWith1 => "crossing-with-1",
            CriticalCase::CrossingWithout1 => "crossing-without-1",
            CriticalCase::Transverse => "transverse",
        }
    }
}

impl fmt::Display for CriticalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An edge of `G_n` with its chords renamed `ab`, `cd` as the case requires:
///
/// * `CrossingWith1`: `1 = a < c < b < d`
/// * `CrossingWithout1`: `1 < a < c < b < d`
/// * `Transverse`: `1 < a < c < d < b`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizedEdge {
    pub case: CriticalCase,
    pub ab: Chord,
    pub cd: Chord,
    /// The caller's first chord became `cd`.
    pub swapped: bool,
}

impl NormalizedEdge {
    pub fn a(&self) -> u32 {
        self.ab.a
    }
    pub fn b(&self) -> u32 {
        self.ab.b
    }
    pub fn c(&self) -> u32 {
        self.cd.a
    }
    pub fn d(&self) -> u32 {
        self.cd.b
    }
}

/// Determines which colouring rule applies to the edge `{p, q}`.
pub fn select_case(p: Chord, q: Chord) -> Result<NormalizedEdge> {
    let (ab, cd) = normalize_pair(p, q);
    let swapped = ab != p;
    let case = match classify_pair(p, q) {
        // With a < c the point 1 can only be a.
        PairClass::Crossing if ab.a == 1 => CriticalCase::CrossingWith1,
        PairClass::Crossing => CriticalCase::CrossingWithout1,
        PairClass::Transverse => CriticalCase::Transverse,
        _ => return Err(Error::NotAnEdge(p, q)),
    };
    Ok(NormalizedEdge {
        case,
        ab,
        cd,
        swapped,
    })
}

/// Colours every chord not inside `a_set` by its least point outside
/// `a_set`. Chords inside `a_set` stay uncoloured.
pub fn min_based_coloring(space: &ChordSpace, a_set: &[u32]) -> Coloring {
    let mut coloring = Coloring::new(space.len());
    for (i, chord) in space.chords().iter().enumerate() {
        let color = [chord.a, chord.b]
            .into_iter()
            .filter(|x| !a_set.contains(x))
            .min();
        if let Some(color) = color {
            coloring.set(VertexId(i), color as Color);
        }
    }
    coloring
}

/// A colouring of `G_n` meant to be proper on `G_n - edge`, together with
/// the data it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateColoring {
    pub n: u32,
    pub edge: Edge,
    pub normalized: NormalizedEdge,
    /// Points excluded from the min-based colouring, sorted.
    pub a_set: Vec<u32>,
    /// The extra point inside `cd` (transverse case only).
    pub x: Option<u32>,
    pub assignment: Coloring,
    /// Colour ids of the extra colours, in order.
    pub special_colors: Vec<Color>,
}

impl CertificateColoring {
    pub fn case(&self) -> CriticalCase {
        self.normalized.case
    }

    /// `"l1"`, `"l2"`, `"l3"` for the extra colours, the point otherwise.
    pub fn color_name(&self, color: Color) -> String {
        match self.special_colors.iter().position(|&c| c == color) {
            Some(i) => alloc::format!("l{}", i + 1),
            None => alloc::format!("{color}"),
        }
    }
}

/// Element pairs receiving one extra colour each, in `l1, l2, l3` order.
type ExtraClasses = Vec<Vec<(u32, u32)>>;

/// Builds the certificate colouring for the edge `e` of `G_n`, where vertex
/// ids follow `space`.
pub fn critical_coloring(space: &ChordSpace, e: Edge) -> Result<CertificateColoring> {
    let n = space.n();
    if e.v.0 >= space.len() {
        return Err(Error::InvalidVertex(e.v.0));
    }
    let normalized = select_case(space.chord(e.u), space.chord(e.v))?;
    let (a, b, c, d) = (
        normalized.a(),
        normalized.b(),
        normalized.c(),
        normalized.d(),
    );

    let (mut a_set, x, groups): (Vec<u32>, Option<u32>, ExtraClasses) = match normalized.case {
        CriticalCase::CrossingWith1 => {
            let a_set = alloc::vec![a, b, c, d];
            let mut inside = Vec::new();
            for (i, &p) in a_set.iter().enumerate() {
                for &q in &a_set[i + 1..] {
                    inside.push((p, q));
                }
            }
            (a_set, None, alloc::vec![inside])
        }
        CriticalCase::CrossingWithout1 => (
            alloc::vec![1, a, b, c, d],
            None,
            alloc::vec![
                alloc::vec![(1, a), (1, b), (1, c), (1, d), (b, c), (b, d)],
                alloc::vec![(a, b), (a, c), (a, d), (c, d)],
            ],
        ),
        CriticalCase::Transverse => {
            // cd is stable, so some point lies strictly between c and d.
            debug_assert!(d >= c + 2);
            let x = c + 1;
            (
                alloc::vec![1, a, b, c, d, x],
                Some(x),
                alloc::vec![
                    alloc::vec![(1, a), (1, x), (1, d), (a, x), (d, x)],
                    alloc::vec![(1, b), (1, c), (b, c), (b, x), (c, x)],
                    alloc::vec![(a, b), (a, c), (a, d), (c, d), (b, d)],
                ],
            )
        }
    };
    a_set.sort_unstable();

    let mut assignment = min_based_coloring(space, &a_set);
    let mut special_colors = Vec::with_capacity(groups.len());
    for (i, group) in groups.iter().enumerate() {
        let color = n as Color + 1 + i;
        special_colors.push(color);
        // Listed pairs that are not stable chords are skipped.
        for v in group.iter().filter_map(|&(p, q)| space.find(p, q)) {
            assignment.set(v, color);
        }
    }

    Ok(CertificateColoring {
        n,
        edge: e,
        normalized,
        a_set,
        x,
        assignment,
        special_colors,
    })
}

/// Independent answer of the exact solver for one question.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverCheck {
    /// The solver agrees with the expected answer.
    Confirmed,
    /// The solver contradicts it.
    Refuted,
    Timeout,
}

impl SolverCheck {
    fn expecting(outcome: &Colorability, colorable: bool) -> SolverCheck {
        match outcome {
            Colorability::Timeout => SolverCheck::Timeout,
            o if o.is_colorable() == colorable => SolverCheck::Confirmed,
            _ => SolverCheck::Refuted,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SolverCheck::Confirmed => "confirmed",
            SolverCheck::Refuted => "refuted",
            SolverCheck::Timeout => "timeout",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Timeout,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Timeout => "timeout",
        }
    }
}

/// Validation of one certificate, optionally cross-checked by the solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCheck {
    pub edge: Edge,
    pub chords: (Chord, Chord),
    pub case: Option<CriticalCase>,
    pub colors_used: usize,
    pub total: bool,
    /// No monochromatic edge of `G_n - e`.
    pub proper: bool,
    pub endpoints_monochromatic: bool,
    /// At most `n - 3` colours.
    pub within_bound: bool,
    /// Solver answer to "is `G_n - e` `(n-3)`-colourable?".
    pub solver: Option<SolverCheck>,
}

impl EdgeCheck {
    pub fn verdict(&self) -> Verdict {
        let certificate_ok = self.case.is_some()
            && self.total
            && self.proper
            && self.endpoints_monochromatic
            && self.within_bound;
        match self.solver {
            _ if !certificate_ok => Verdict::Fail,
            Some(SolverCheck::Refuted) => Verdict::Fail,
            Some(SolverCheck::Timeout) => Verdict::Timeout,
            _ => Verdict::Pass,
        }
    }
}

/// Checks `cert` against `g = G_n`.
pub fn check_certificate(g: &Graph, cert: &CertificateColoring) -> Result<EdgeCheck> {
    let g_minus_e = g.delete_edge(cert.edge)?;
    let colour = |v: VertexId| cert.assignment.get(v);
    let n = cert.n as usize;
    let colors_used = count_colors(&cert.assignment);
    Ok(EdgeCheck {
        edge: cert.edge,
        chords: (cert.normalized.ab, cert.normalized.cd),
        case: Some(cert.case()),
        colors_used,
        total: cert.assignment.is_total_on(g),
        proper: match is_proper_coloring(&g_minus_e, &cert.assignment) {
            crate::graph::ColoringVerdict::Proper => true,
            crate::graph::ColoringVerdict::Invalid { monochromatic, .. } => {
                monochromatic.is_empty()
            }
        },
        endpoints_monochromatic: colour(cert.edge.u).is_some()
            && colour(cert.edge.u) == colour(cert.edge.v),
        within_bound: colors_used + 3 <= n,
        solver: None,
    })
}

/// Builds and validates the certificate for `e`; with a solver attached,
/// also asks whether `G_n - e` is `(n-3)`-colourable.
pub fn check_edge<B: Budget>(
    g: &Graph,
    space: &ChordSpace,
    e: Edge,
    solver: Option<(&SolverConfig, &mut B)>,
) -> Result<(CertificateColoring, EdgeCheck)> {
    let cert = critical_coloring(space, e)?;
    let mut check = check_certificate(g, &cert)?;
    if let Some((cfg, budget)) = solver {
        let minus = g.delete_edge(e)?;
        let k = space.n() as usize - 3;
        check.solver = Some(SolverCheck::expecting(
            &is_k_colorable(&minus, k, cfg, budget),
            true,
        ));
    }
    Ok((cert, check))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCriticalityReport {
    pub n: u32,
    /// One row per edge of `G_n`, in edge order.
    pub rows: Vec<EdgeCheck>,
    /// Solver answer to "is `G_n` not `(n-3)`-colourable?".
    pub gn_not_colorable: Option<SolverCheck>,
}

impl EdgeCriticalityReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.rows.iter().filter(|r| r.verdict() == verdict).count()
    }

    pub fn verdict(&self) -> Verdict {
        let rows = self.rows.iter().map(EdgeCheck::verdict);
        let global = match self.gn_not_colorable {
            Some(SolverCheck::Refuted) => Verdict::Fail,
            Some(SolverCheck::Timeout) => Verdict::Timeout,
            _ => Verdict::Pass,
        };
        if rows.clone().any(|v| v == Verdict::Fail) || global == Verdict::Fail {
            Verdict::Fail
        } else if rows.clone().any(|v| v == Verdict::Timeout) || global == Verdict::Timeout {
            Verdict::Timeout
        } else {
            Verdict::Pass
        }
    }
}

/// Solver check that `G_n` itself needs more than `n - 3` colours.
pub fn check_gn_not_colorable<B: Budget>(
    g: &Graph,
    n: u32,
    cfg: &SolverConfig,
    budget: &mut B,
) -> SolverCheck {
    SolverCheck::expecting(&is_k_colorable(g, n as usize - 3, cfg, budget), false)
}

/// Sequential sweep over every edge of `G_n`.
pub fn verify_edge_criticality<B: Budget>(
    n: u32,
    use_solver: bool,
    cfg: &SolverConfig,
    budget: &mut B,
) -> Result<EdgeCriticalityReport> {
    let space = ChordSpace::new(n)?;
    let g = crate::generators::gn_from_space(&space);
    let mut rows = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let solver = if use_solver {
            Some((cfg, &mut *budget))
        } else {
            None
        };
        rows.push(check_edge(&g, &space, e, solver)?.1);
    }
    let gn_not_colorable = use_solver.then(|| check_gn_not_colorable(&g, n, cfg, budget));
    Ok(EdgeCriticalityReport {
        n,
        rows,
        gn_not_colorable,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCheck {
    pub vertex: VertexId,
    /// `None` when the solver ran out of budget.
    pub chi_after: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCriticalityReport {
    /// `None` when the chromatic number of the whole graph was not settled.
    pub chi: Option<usize>,
    pub rows: Vec<VertexCheck>,
}

impl VertexCriticalityReport {
    pub fn verdict(&self) -> Verdict {
        let Some(chi) = self.chi else {
            return Verdict::Timeout;
        };
        let mut verdict = Verdict::Pass;
        for row in &self.rows {
            match row.chi_after {
                Some(after) if after < chi => {}
                Some(_) => return Verdict::Fail,
                None => verdict = Verdict::Timeout,
            }
        }
        verdict
    }

    /// Every deletion lowered the chromatic number by exactly one.
    pub fn drops_by_exactly_one(&self) -> bool {
        self.chi.is_some_and(|chi| {
            self.rows
                .iter()
                .all(|r| r.chi_after.is_some_and(|after| after + 1 == chi))
        })
    }
}

/// Chromatic number of `g - v`, or `None` on timeout.
pub fn chi_without_vertex<B: Budget>(
    g: &Graph,
    v: VertexId,
    cfg: &SolverConfig,
    budget: &mut B,
) -> Result<Option<usize>> {
    let r = chromatic_number(&g.delete_vertex(v)?, cfg, budget);
    Ok(r.is_exact().then_some(r.chi))
}

/// Sequential check that deleting any single vertex lowers `chi(g)`.
pub fn verify_vertex_criticality<B: Budget>(
    g: &Graph,
    cfg: &SolverConfig,
    budget: &mut B,
) -> Result<VertexCriticalityReport> {
    let whole = chromatic_number(g, cfg, budget);
    let chi = whole.is_exact().then_some(whole.chi);
    let mut rows = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        rows.push(VertexCheck {
            vertex: v,
            chi_after: chi_without_vertex(g, v, cfg, budget)?,
        });
    }
    Ok(VertexCriticalityReport { chi, rows })
}
