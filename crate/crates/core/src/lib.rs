//! Decomposition machinery for edge-colored graphs under color-degree
//! constraints: properly colored cycles and 2-colored g-bowties, feasible
//! vertex partitions by constructive, exact and randomized methods, and the
//! reductions connecting such partitions to disjoint directed cycles.

pub mod generators;
pub mod graph;
pub mod io;
pub mod partition;
pub mod reductions;
pub mod structures;

/// Tri-state search result: a witness, a proven absence, or an honest
/// "ran out of budget".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    Absent,
    Exhausted,
}

impl<T> Search<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Absent => Search::Absent,
            Search::Exhausted => Search::Exhausted,
        }
    }
}
