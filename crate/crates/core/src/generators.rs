//! Constructors for the graph families: Kneser, Schrijver, `G_n` and the
//! Mycielski iterates, plus the chord-pair census behind the edge ratio of
//! `G_n` to `SG(n,2)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::ops::{Add, AddAssign, Range};

use itertools::Itertools;
use num_rational::Ratio;

use crate::chord::{classify_pair, stable_subsets, subset_label, ChordSpace, PairClass};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

fn check_kneser_params(n: u32, k: u32) -> Result<()> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameters(alloc::format!(
            "need k >= 1 and n >= 2k, got n = {n}, k = {k}"
        )));
    }
    if n > 128 {
        return Err(Error::InvalidParameters(alloc::format!(
            "ground sets above 128 elements are not supported, got n = {n}"
        )));
    }
    Ok(())
}

fn mask_of(elements: &[u32]) -> u128 {
    elements.iter().fold(0, |m, &x| m | 1u128 << (x - 1))
}

/// Graph on the given subsets with an edge between every disjoint pair.
fn disjointness_graph(n: u32, subsets: &[Vec<u32>]) -> Graph {
    let masks: Vec<u128> = subsets.iter().map(|s| mask_of(s)).collect();
    let mut g = Graph::with_labels(subsets.iter().map(|s| subset_label(s)))
        .expect("subset labels are unique");
    g.set_n_hint(Some(n));
    for (i, j) in (0..subsets.len()).tuple_combinations() {
        if masks[i] & masks[j] == 0 {
            g.add_edge(VertexId(i), VertexId(j))
                .expect("distinct vertices");
        }
    }
    g
}

/// The Kneser graph `KG(n, k)`: all `k`-subsets of `[n]`, adjacent when
/// disjoint.
pub fn kneser(n: u32, k: u32) -> Result<Graph> {
    check_kneser_params(n, k)?;
    let subsets: Vec<Vec<u32>> = (1..=n).combinations(k as usize).collect();
    Ok(disjointness_graph(n, &subsets))
}

/// The Schrijver graph `SG(n, k)`: `KG(n, k)` induced on stable subsets.
pub fn schrijver(n: u32, k: u32) -> Result<Graph> {
    check_kneser_params(n, k)?;
    let subsets: Vec<Vec<u32>> = stable_subsets(n, k)?
        .into_iter()
        .map(|s| s.elements().to_vec())
        .collect();
    Ok(disjointness_graph(n, &subsets))
}

/// `G_n`: the stable 2-subsets of `[n]`, adjacent when they form a crossing
/// or a transverse pair.
///
/// Vertex `i` is `ChordSpace::new(n)?.chords()[i]`.
pub fn gn(n: u32) -> Result<Graph> {
    let space = ChordSpace::new(n)?;
    Ok(gn_from_space(&space))
}

pub fn gn_from_space(space: &ChordSpace) -> Graph {
    chord_graph(space, PairClass::is_gn_edge)
}

/// `SG(n, 2)` with the same vertex numbering as [`gn`].
pub fn schrijver2_from_space(space: &ChordSpace) -> Graph {
    chord_graph(space, PairClass::is_disjoint)
}

fn chord_graph(space: &ChordSpace, keep: impl Fn(PairClass) -> bool) -> Graph {
    let chords = space.chords();
    let mut g =
        Graph::with_labels(chords.iter().map(|c| c.label())).expect("chord labels are unique");
    g.set_n_hint(Some(space.n()));
    for (i, j) in (0..chords.len()).tuple_combinations() {
        if keep(classify_pair(chords[i], chords[j])) {
            g.add_edge(VertexId(i), VertexId(j))
                .expect("distinct vertices");
        }
    }
    g
}

/// Role of a vertex of `M(G)` relative to the base graph `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MycielskiRole {
    Base(VertexId),
    Clone(VertexId),
    Star,
}

/// Decodes a vertex id of `mycielski(g)` where `g` had `base_len` vertices.
///
/// [`mycielski`] lays out the base vertices first, then their clones in the
/// same order, then the apex.
pub fn mycielski_role(v: VertexId, base_len: usize) -> Option<MycielskiRole> {
    match v.0 {
        i if i < base_len => Some(MycielskiRole::Base(VertexId(i))),
        i if i < 2 * base_len => Some(MycielskiRole::Clone(VertexId(i - base_len))),
        i if i == 2 * base_len => Some(MycielskiRole::Star),
        _ => None,
    }
}

/// Generation number of a label produced by [`mycielski`]: the digits after
/// its final `'`, or after a leading `*`.
fn label_generation(label: &str) -> u32 {
    let digits = match label.rfind('\'') {
        Some(pos) => &label[pos + 1..],
        None => match label.strip_prefix('*') {
            Some(rest) => rest,
            None => return 0,
        },
    };
    digits.parse().unwrap_or(0)
}

/// The Mycielski graph `M(G)`.
///
/// Base vertices keep their labels. With `g` the smallest generation number
/// not yet used in the input labels, the clone of `u` is labelled `u'g` and
/// the apex `*g`, so repeated application never produces clashes.
pub fn mycielski(base: &Graph) -> Graph {
    let n = base.vertex_count();
    let generation = base
        .labels()
        .iter()
        .map(|l| label_generation(l))
        .max()
        .unwrap_or(0)
        + 1;
    let mut labels: Vec<String> = base.labels().to_vec();
    labels.extend(
        base.labels()
            .iter()
            .map(|l| alloc::format!("{l}'{generation}")),
    );
    labels.push(alloc::format!("*{generation}"));
    let mut g = Graph::with_labels(labels).expect("generation suffix keeps labels unique");
    g.set_n_hint(base.n_hint());
    for e in base.edges() {
        let (u, v) = (e.u.0, e.v.0);
        g.add_edge(VertexId(u), VertexId(v)).expect("base edge");
        g.add_edge(VertexId(u), VertexId(n + v))
            .expect("clone edge");
        g.add_edge(VertexId(v), VertexId(n + u))
            .expect("clone edge");
    }
    let star = VertexId(2 * n);
    for u in 0..n {
        g.add_edge(VertexId(n + u), star).expect("apex edge");
    }
    g
}

/// `K_2` on labels `1`, `2`.
pub fn k2() -> Graph {
    Graph::from_edges(2, &[(0, 1)]).expect("K_2")
}

/// `M_k`: `K_2` with the Mycielski construction applied `k - 2` times.
pub fn mycielski_iter(k: u32) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameters(alloc::format!(
            "M_k needs k >= 2, got {k}"
        )));
    }
    Ok((2..k).fold(k2(), |g, _| mycielski(&g)))
}

/// Census of unordered pairs of disjoint chords of `C_n` by [`PairClass`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PairCounts {
    pub crossing: u64,
    pub transverse: u64,
    pub lateral: u64,
    pub nested_through_1: u64,
}

impl PairCounts {
    /// `|E(G_n)|`.
    pub fn gn_edges(&self) -> u64 {
        self.crossing + self.transverse
    }

    /// `|E(SG(n,2))|`.
    pub fn schrijver_edges(&self) -> u64 {
        self.gn_edges() + self.lateral + self.nested_through_1
    }

    fn record(&mut self, class: PairClass) {
        match class {
            PairClass::Crossing => self.crossing += 1,
            PairClass::Transverse => self.transverse += 1,
            PairClass::Lateral => self.lateral += 1,
            PairClass::NestedThrough1 => self.nested_through_1 += 1,
            PairClass::Intersecting => {}
        }
    }
}

impl Add for PairCounts {
    type Output = PairCounts;

    fn add(self, rhs: PairCounts) -> PairCounts {
        PairCounts {
            crossing: self.crossing + rhs.crossing,
            transverse: self.transverse + rhs.transverse,
            lateral: self.lateral + rhs.lateral,
            nested_through_1: self.nested_through_1 + rhs.nested_through_1,
        }
    }
}

impl AddAssign for PairCounts {
    fn add_assign(&mut self, rhs: PairCounts) {
        *self = *self + rhs;
    }
}

impl core::iter::Sum for PairCounts {
    fn sum<I: Iterator<Item = PairCounts>>(iter: I) -> PairCounts {
        iter.fold(PairCounts::default(), Add::add)
    }
}

/// Counts the pairs `(i, j)` with `i` in `rows` and `j > i`, so that disjoint
/// row ranges can be counted independently and summed.
pub fn count_pairs_in_rows(space: &ChordSpace, rows: Range<usize>) -> PairCounts {
    let chords = space.chords();
    let mut counts = PairCounts::default();
    for i in rows {
        let p = chords[i];
        for &q in &chords[i + 1..] {
            counts.record(classify_pair(p, q));
        }
    }
    counts
}

/// Exact pair census for `n >= 4` by exhaustive enumeration.
pub fn count_pairs(n: u32) -> Result<PairCounts> {
    let space = ChordSpace::new(n)?;
    Ok(count_pairs_in_rows(&space, 0..space.len()))
}

/// `|E(G_n)| / |E(SG(n,2))|` as a reduced fraction, for `n >= 5`.
pub fn edge_ratio(n: u32) -> Result<Ratio<u64>> {
    if n < 5 {
        return Err(Error::InvalidParameters(alloc::format!(
            "edge ratio needs n >= 5, got {n}"
        )));
    }
    Ok(ratio_of(&count_pairs(n)?))
}

pub fn ratio_of(counts: &PairCounts) -> Ratio<u64> {
    Ratio::new(counts.gn_edges(), counts.schrijver_edges())
}

/// `C(n, 4)`.
pub fn choose4(n: u64) -> u64 {
    if n < 4 {
        0
    } else {
        n * (n - 1) * (n - 2) * (n - 3) / 24
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen() {
        let g = kneser(5, 2).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.degree_sequence(), [3; 10]);
    }

    #[test]
    fn kneser_2k_k_is_matching() {
        for k in 1..=4 {
            let g = kneser(2 * k, k).unwrap();
            assert_eq!(g.edge_count() * 2, g.vertex_count());
            assert!(g.degree_sequence().iter().all(|&d| d == 1));
        }
    }

    #[test]
    fn schrijver_fixtures() {
        assert!(schrijver(5, 2).unwrap().is_cycle());
        let sg73 = schrijver(7, 3).unwrap();
        assert_eq!(sg73.vertex_count(), 7);
        assert!(sg73.is_cycle());
        let sg62 = schrijver(6, 2).unwrap();
        assert_eq!((sg62.vertex_count(), sg62.edge_count()), (9, 18));
    }

    #[test]
    fn gn_small_cases() {
        let g4 = gn(4).unwrap();
        assert_eq!(g4.labels(), ["13", "24"]);
        assert_eq!(g4.edge_count(), 1);
        assert!(gn(5).unwrap().is_cycle());
        let g6 = gn(6).unwrap();
        assert_eq!((g6.vertex_count(), g6.edge_count()), (9, 16));
        assert!(g6.has_edge(g6.find("26").unwrap(), g6.find("35").unwrap()));
        assert!(gn(3).is_err());
    }

    #[test]
    fn gn_is_spanning_subgraph_of_sg() {
        for n in 4..=12 {
            let space = ChordSpace::new(n).unwrap();
            let g = gn_from_space(&space);
            let sg = schrijver2_from_space(&space);
            assert_eq!(sg, schrijver(n, 2).unwrap());
            assert!(g.edges().all(|e| sg.has_edge(e.u, e.v)));
            if n <= 5 {
                assert_eq!(g.edge_count(), sg.edge_count());
            } else {
                assert!(g.edge_count() < sg.edge_count());
            }
        }
    }

    #[test]
    fn mycielski_small() {
        let c5 = mycielski(&k2());
        assert!(c5.is_cycle());
        assert_eq!(c5.vertex_count(), 5);
        let grotzsch = mycielski(&c5);
        assert_eq!((grotzsch.vertex_count(), grotzsch.edge_count()), (11, 20));
        assert!(grotzsch.is_triangle_free());
        assert_eq!(c5.labels(), ["1", "2", "1'1", "2'1", "*1"]);
        assert_eq!(grotzsch.label(VertexId(10)), "*2");
        assert_eq!(grotzsch.label(VertexId(9)), "*1'2");
    }

    #[test]
    fn mycielski_iter_sizes() {
        assert_eq!(mycielski_iter(2).unwrap(), k2());
        let m5 = mycielski_iter(5).unwrap();
        assert_eq!((m5.vertex_count(), m5.edge_count()), (23, 71));
        assert!(mycielski_iter(1).is_err());
    }

    #[test]
    fn mycielski_roles() {
        assert_eq!(
            mycielski_role(VertexId(1), 5),
            Some(MycielskiRole::Base(VertexId(1)))
        );
        assert_eq!(
            mycielski_role(VertexId(6), 5),
            Some(MycielskiRole::Clone(VertexId(1)))
        );
        assert_eq!(mycielski_role(VertexId(10), 5), Some(MycielskiRole::Star));
        assert_eq!(mycielski_role(VertexId(11), 5), None);
    }

    #[test]
    fn pair_census_small() {
        let c5 = count_pairs(5).unwrap();
        assert_eq!(
            c5,
            PairCounts {
                crossing: 5,
                ..PairCounts::default()
            }
        );
        let c6 = count_pairs(6).unwrap();
        assert_eq!(
            c6,
            PairCounts {
                crossing: 15,
                transverse: 1,
                lateral: 1,
                nested_through_1: 1
            }
        );
    }

    #[test]
    fn ratios() {
        assert_eq!(edge_ratio(5).unwrap(), Ratio::from_integer(1));
        assert_eq!(edge_ratio(6).unwrap(), Ratio::new(8, 9));
        assert!(edge_ratio(4).is_err());
    }
}
