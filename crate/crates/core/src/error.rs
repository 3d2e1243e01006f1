use alloc::string::String;
use core::fmt;

use crate::chord::Chord;
use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A generator or operation was called outside its parameter range.
    InvalidParameters(String),
    /// `{a, b}` is not a stable 2-subset of `[n]`.
    InvalidChord {
        a: u32,
        b: u32,
        n: u32,
    },
    InvalidVertex(usize),
    DuplicateLabel(String),
    SelfLoop(usize),
    MissingEdge(Edge),
    /// The chord pair is neither crossing nor transverse.
    NotAnEdge(Chord, Chord),
    /// Homomorphism level `level` failed verification.
    InvalidHomomorphism {
        level: u32,
        violations: usize,
    },
    /// The solver could not settle a base fact within its budget.
    Timeout(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameters(msg) => write!(f, "invalid parameters: {msg}"),
            Error::InvalidChord { a, b, n } => {
                write!(f, "{{{a}, {b}}} is not a stable 2-subset of [{n}]")
            }
            Error::InvalidVertex(v) => write!(f, "vertex {v} does not exist"),
            Error::DuplicateLabel(label) => write!(f, "duplicate vertex label {label:?}"),
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::MissingEdge(e) => write!(f, "edge {}-{} is not in the graph", e.u.0, e.v.0),
            Error::NotAnEdge(p, q) => {
                write!(f, "chords {p} and {q} are neither crossing nor transverse")
            }
            Error::InvalidHomomorphism { level, violations } => write!(
                f,
                "map M(G_{}) -> G_{level} has {violations} violating edges",
                level - 1
            ),
            Error::Timeout(what) => write!(f, "solver budget exhausted: {what}"),
        }
    }
}

impl core::error::Error for Error {}
