//! Parallel versions of the verification sweeps, with wall-clock budgets.
//!
//! Work is split across a rayon pool; results are always collected back in
//! edge or vertex order so output does not depend on scheduling.

use std::time::{Duration, Instant};

use edgecrit_core::criticality::{
    check_edge, check_gn_not_colorable, chi_without_vertex, EdgeCheck, EdgeCriticalityReport,
    VertexCheck, VertexCriticalityReport,
};
use edgecrit_core::generators::{count_pairs_in_rows, gn_from_space, ratio_of, PairCounts};
use edgecrit_core::homomorphism::{violations_among, HomomorphismInstance, Violation};
use edgecrit_core::solver::{chromatic_number, Budget, SolverConfig};
use edgecrit_core::{ChordSpace, Edge, Graph};
use rayon::prelude::*;

use crate::error::Result;

/// A shared wall-clock deadline usable as a solver [`Budget`].
#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    end: Option<Instant>,
}

impl Deadline {
    pub fn after(limit: Duration) -> Deadline {
        Deadline {
            end: Instant::now().checked_add(limit),
        }
    }

    pub fn after_seconds(seconds: f64) -> Deadline {
        Deadline::after(Duration::from_secs_f64(seconds.max(0.0)))
    }

    pub fn never() -> Deadline {
        Deadline { end: None }
    }
}

impl Budget for Deadline {
    fn exhausted(&mut self) -> bool {
        self.end.is_some_and(|end| Instant::now() >= end)
    }
}

/// Runs `f` on a pool with `workers` threads, or rayon's default when
/// `None`.
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        Some(count) => rayon::ThreadPoolBuilder::new()
            .num_threads(count.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Exhaustive pair census with rows of the chord-pair triangle counted in
/// parallel.
pub fn count_pairs_parallel(n: u32) -> Result<PairCounts> {
    let space = ChordSpace::new(n)?;
    Ok((0..space.len())
        .into_par_iter()
        .map(|i| count_pairs_in_rows(&space, i..i + 1))
        .sum())
}

/// One row of the ratio table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioRow {
    pub n: u32,
    pub counts: PairCounts,
    pub ratio_num: u64,
    pub ratio_den: u64,
}

impl RatioRow {
    pub fn ratio(&self) -> f64 {
        self.ratio_num as f64 / self.ratio_den as f64
    }
}

pub fn ratio_row(n: u32) -> Result<RatioRow> {
    if n < 5 {
        return Err(edgecrit_core::Error::InvalidParameters(format!(
            "edge ratio needs n >= 5, got {n}"
        ))
        .into());
    }
    let counts = count_pairs_parallel(n)?;
    let ratio = ratio_of(&counts);
    Ok(RatioRow {
        n,
        counts,
        ratio_num: *ratio.numer(),
        ratio_den: *ratio.denom(),
    })
}

pub fn ratio_table(ns: impl IntoIterator<Item = u32>) -> Result<Vec<RatioRow>> {
    ns.into_iter().map(ratio_row).collect()
}

/// Certificate sweep over every edge of `G_n`, parallel over edges. With
/// `use_solver`, each `G_n - e` and `G_n` itself are also settled by the
/// solver under `deadline`.
pub fn edge_criticality(
    n: u32,
    use_solver: bool,
    cfg: &SolverConfig,
    deadline: Deadline,
) -> Result<EdgeCriticalityReport> {
    let space = ChordSpace::new(n)?;
    let g = gn_from_space(&space);
    let edges: Vec<Edge> = g.edges().collect();
    let rows: Vec<EdgeCheck> = edges
        .par_iter()
        .map(|&e| {
            let mut budget = deadline;
            let solver = use_solver.then_some((cfg, &mut budget));
            check_edge(&g, &space, e, solver).map(|(_, check)| check)
        })
        .collect::<edgecrit_core::Result<_>>()?;
    let gn_not_colorable = use_solver.then(|| {
        let mut budget = deadline;
        check_gn_not_colorable(&g, n, cfg, &mut budget)
    });
    Ok(EdgeCriticalityReport {
        n,
        rows,
        gn_not_colorable,
    })
}

/// Vertex-deletion sweep, parallel over vertices.
pub fn vertex_criticality(
    g: &Graph,
    cfg: &SolverConfig,
    deadline: Deadline,
) -> Result<VertexCriticalityReport> {
    let mut budget = deadline;
    let whole = chromatic_number(g, cfg, &mut budget);
    let chi = whole.is_exact().then_some(whole.chi);
    let vertices: Vec<_> = g.vertices().collect();
    let rows = vertices
        .par_iter()
        .map(|&v| {
            let mut budget = deadline;
            chi_without_vertex(g, v, cfg, &mut budget).map(|chi_after| VertexCheck {
                vertex: v,
                chi_after,
            })
        })
        .collect::<edgecrit_core::Result<_>>()?;
    Ok(VertexCriticalityReport { chi, rows })
}

/// Homomorphism check of `inst` with domain edges split across workers.
pub fn homomorphism_violations(inst: &HomomorphismInstance) -> Vec<Violation> {
    let edges: Vec<Edge> = inst.domain.edges().collect();
    edges
        .par_chunks(256)
        .flat_map_iter(|chunk| violations_among(&inst.codomain, &inst.map, chunk.iter().copied()))
        .collect()
}
