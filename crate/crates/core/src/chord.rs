//! Stable subsets of `[n]` and the geometry of chords of the cycle `C_n`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// A sorted subset of `[n]` with no two cyclically consecutive elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StableSet {
    elements: Vec<u32>,
}

impl StableSet {
    /// Validates `elements` (in any order) as a stable subset of `[n]`.
    pub fn new(mut elements: Vec<u32>, n: u32) -> Option<StableSet> {
        elements.sort_unstable();
        let in_range = elements.iter().all(|&x| 1 <= x && x <= n);
        let spaced = elements.windows(2).all(|w| w[1] >= w[0] + 2);
        let wraps = elements.len() >= 2 && elements[0] == 1 && elements[elements.len() - 1] == n;
        (in_range && spaced && !wraps).then_some(StableSet { elements })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn label(&self) -> String {
        subset_label(&self.elements)
    }
}

/// Vertex label of a subset: digits run together when every element is a
/// single digit (`"13"`), otherwise joined by `-` (`"1-10"`).
pub fn subset_label(elements: &[u32]) -> String {
    use core::fmt::Write;
    let mut label = String::new();
    let compact = elements.iter().all(|&x| x <= 9);
    for (i, x) in elements.iter().enumerate() {
        if i > 0 && !compact {
            label.push('-');
        }
        let _ = write!(label, "{x}");
    }
    label
}

/// Inverse of [`subset_label`].
pub fn parse_subset_label(label: &str) -> Option<Vec<u32>> {
    if label.contains('-') {
        label.split('-').map(|part| part.parse().ok()).collect()
    } else if !label.is_empty() {
        label.chars().map(|ch| ch.to_digit(10)).collect()
    } else {
        None
    }
}

/// All stable `k`-subsets of `[n]` in lexicographic order.
pub fn stable_subsets(n: u32, k: u32) -> Result<Vec<StableSet>> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameters(alloc::format!(
            "stable subsets need k >= 1 and n >= 2k, got n = {n}, k = {k}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k as usize);
    extend_stable(n, k, 1, &mut current, &mut out);
    Ok(out)
}

fn extend_stable(n: u32, k: u32, next: u32, current: &mut Vec<u32>, out: &mut Vec<StableSet>) {
    let remaining = k - current.len() as u32;
    if remaining == 0 {
        out.push(StableSet {
            elements: current.clone(),
        });
        return;
    }
    // A set starting at 1 may not also contain n.
    let last_allowed = if current.first() == Some(&1) {
        n - 1
    } else {
        n
    };
    let mut x = next;
    // The remaining picks need gaps of at least two.
    while x + 2 * (remaining - 1) <= last_allowed {
        current.push(x);
        extend_stable(n, k, x + 2, current, out);
        current.pop();
        x += 1;
    }
}

/// A stable 2-subset `{a, b}` of `[n]` with `a < b`, drawn as a chord of `C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    pub a: u32,
    pub b: u32,
}

impl Chord {
    /// Validates `{x, y}` (either order) as a chord of `C_n`.
    pub fn new(x: u32, y: u32, n: u32) -> Result<Chord> {
        Chord::try_new(x, y, n).ok_or(Error::InvalidChord {
            a: x.min(y),
            b: x.max(y),
            n,
        })
    }

    pub fn try_new(x: u32, y: u32, n: u32) -> Option<Chord> {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        Chord::is_stable(a, b, n).then_some(Chord { a, b })
    }

    /// `{a, b}` with `a < b` is stable in `[n]`.
    pub fn is_stable(a: u32, b: u32, n: u32) -> bool {
        a >= 1 && b <= n && b >= a + 2 && !(a == 1 && b == n)
    }

    pub fn contains(self, x: u32) -> bool {
        self.a == x || self.b == x
    }

    pub fn is_disjoint(self, other: Chord) -> bool {
        !other.contains(self.a) && !other.contains(self.b)
    }

    pub fn label(self) -> String {
        subset_label(&[self.a, self.b])
    }

    /// Parses a label produced by [`Chord::label`] and validates it for `n`.
    pub fn parse(label: &str, n: u32) -> Result<Chord> {
        match parse_subset_label(label).as_deref() {
            Some(&[x, y]) => Chord::new(x, y, n),
            _ => Err(Error::InvalidParameters(alloc::format!(
                "cannot parse chord {label:?}"
            ))),
        }
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// How an unordered pair of distinct chords sits on the cycle.
///
/// After normalising so that `ab` is the chord with the smaller first
/// element (`a < c`):
///
/// | tag              | pattern                 |
/// |------------------|-------------------------|
/// | `Crossing`       | `a < c < b < d`         |
/// | `Transverse`     | `1 < a < c < d < b`     |
/// | `NestedThrough1` | `1 = a < c < d < b`     |
/// | `Lateral`        | `a < b < c < d`         |
/// | `Intersecting`   | the chords share a point |
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairClass {
    Crossing,
    Transverse,
    Lateral,
    NestedThrough1,
    Intersecting,
}

impl PairClass {
    /// Crossing and transverse pairs are exactly the edges of `G_n`.
    pub fn is_gn_edge(self) -> bool {
        matches!(self, PairClass::Crossing | PairClass::Transverse)
    }

    /// Disjoint pairs are exactly the edges of `SG(n, 2)`.
    pub fn is_disjoint(self) -> bool {
        self != PairClass::Intersecting
    }
}

/// Orders a pair so the chord with the smaller first element comes first.
pub fn normalize_pair(p: Chord, q: Chord) -> (Chord, Chord) {
    if (p.a, p.b) <= (q.a, q.b) {
        (p, q)
    } else {
        (q, p)
    }
}

/// Classifies the unordered pair `{p, q}`; symmetric in its arguments.
pub fn classify_pair(p: Chord, q: Chord) -> PairClass {
    if !p.is_disjoint(q) {
        return PairClass::Intersecting;
    }
    let (ab, cd) = normalize_pair(p, q);
    let (a, b, c, d) = (ab.a, ab.b, cd.a, cd.b);
    if b < c {
        PairClass::Lateral
    } else if b < d {
        PairClass::Crossing
    } else if a == 1 {
        PairClass::NestedThrough1
    } else {
        PairClass::Transverse
    }
}

/// The stable 2-subsets of `[n]` in lexicographic order, with constant-time
/// lookup between chords and their vertex ids in `SG(n,2)` and `G_n`.
#[derive(Debug, Clone)]
pub struct ChordSpace {
    n: u32,
    chords: Vec<Chord>,
    /// `offsets[a]` is the id of the first chord with smaller end `a`.
    offsets: Vec<usize>,
}

impl ChordSpace {
    pub fn new(n: u32) -> Result<ChordSpace> {
        if n < 4 {
            return Err(Error::InvalidParameters(alloc::format!(
                "chords of C_n need n >= 4, got {n}"
            )));
        }
        let mut chords = Vec::with_capacity((n as usize * (n as usize - 3)) / 2);
        let mut offsets = alloc::vec![0; n as usize + 1];
        for a in 1..=n {
            offsets[a as usize] = chords.len();
            for b in a + 2..=n {
                if let Some(chord) = Chord::try_new(a, b, n) {
                    chords.push(chord);
                }
            }
        }
        Ok(ChordSpace { n, chords, offsets })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn chord(&self, v: VertexId) -> Chord {
        self.chords[v.0]
    }

    pub fn index_of(&self, chord: Chord) -> Option<VertexId> {
        if !Chord::is_stable(chord.a, chord.b, self.n) {
            return None;
        }
        // Chords starting at 1 begin with b = 3, all others with b = a + 2.
        let first_b = chord.a + 2;
        Some(VertexId(
            self.offsets[chord.a as usize] + (chord.b - first_b) as usize,
        ))
    }

    /// Looks up `{x, y}` if it is a chord.
    pub fn find(&self, x: u32, y: u32) -> Option<VertexId> {
        Chord::try_new(x, y, self.n).and_then(|c| self.index_of(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn chord(label: &str, n: u32) -> Chord {
        Chord::parse(label, n).unwrap()
    }

    #[test]
    fn stable_pairs_small_n() {
        let sets = stable_subsets(4, 2).unwrap();
        let labels: Vec<String> = sets.iter().map(StableSet::label).collect();
        assert_eq!(labels, ["13", "24"]);
        assert_eq!(stable_subsets(5, 2).unwrap().len(), 5);
        assert_eq!(stable_subsets(6, 2).unwrap().len(), 9);
    }

    #[test]
    fn stable_subsets_match_exhaustive_filter() {
        // Oracle: every k-subset of [n] by bitmask, filtered by the definition.
        for n in 2..=11u32 {
            for k in 1..=n / 2 {
                let mut expected = Vec::new();
                for mask in 0u32..(1 << n) {
                    if mask.count_ones() != k {
                        continue;
                    }
                    let elems: Vec<u32> = (1..=n).filter(|x| mask >> (x - 1) & 1 == 1).collect();
                    let consecutive = elems.windows(2).any(|w| w[1] == w[0] + 1);
                    let wraps = k >= 2 && elems[0] == 1 && elems[elems.len() - 1] == n;
                    if !consecutive && !wraps {
                        expected.push(elems);
                    }
                }
                expected.sort();
                let got: Vec<Vec<u32>> = stable_subsets(n, k)
                    .unwrap()
                    .into_iter()
                    .map(|s| s.elements().to_vec())
                    .collect();
                assert_eq!(got, expected, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn invalid_stable_parameters() {
        assert!(stable_subsets(3, 2).is_err());
        assert!(stable_subsets(5, 0).is_err());
    }

    #[test]
    fn chord_validation() {
        assert!(Chord::new(1, 3, 6).is_ok());
        assert!(Chord::new(3, 1, 6).is_ok());
        assert!(Chord::new(1, 6, 6).is_err());
        assert!(Chord::new(2, 3, 6).is_err());
        assert!(Chord::new(2, 7, 6).is_err());
    }

    #[test]
    fn labels_round_trip() {
        assert_eq!(chord("26", 6), Chord { a: 2, b: 6 });
        assert_eq!(Chord { a: 1, b: 10 }.label(), "1-10");
        assert_eq!(chord("1-10", 11), Chord { a: 1, b: 10 });
        assert_eq!(parse_subset_label("135"), Some(vec![1, 3, 5]));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_pair(chord("13", 4), chord("24", 4)),
            PairClass::Crossing
        );
        assert_eq!(
            classify_pair(chord("26", 6), chord("35", 6)),
            PairClass::Transverse
        );
        assert_eq!(
            classify_pair(chord("15", 6), chord("24", 6)),
            PairClass::NestedThrough1
        );
        assert_eq!(
            classify_pair(chord("13", 6), chord("46", 6)),
            PairClass::Lateral
        );
        assert_eq!(
            classify_pair(chord("13", 6), chord("36", 6)),
            PairClass::Intersecting
        );
        assert_eq!(
            classify_pair(chord("35", 6), chord("26", 6)),
            PairClass::Transverse
        );
    }

    #[test]
    fn chord_space_indexing() {
        for n in 4..=30 {
            let space = ChordSpace::new(n).unwrap();
            assert_eq!(space.len(), (n * (n - 3) / 2) as usize);
            for (i, &c) in space.chords().iter().enumerate() {
                assert_eq!(space.index_of(c), Some(VertexId(i)));
            }
            assert_eq!(space.find(1, n), None);
            assert_eq!(space.find(2, 3), None);
        }
    }
}
