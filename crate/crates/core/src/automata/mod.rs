//! Automata recognizing the 1-11-representations of a graph.
//!
//! Each pair of vertices gets a small automaton deciding adjacency in the
//! pair's restriction; the representations of a graph are the intersection
//! of these (complemented for non-edges) with the coverage language, and the
//! permutational ones additionally intersect the concatenations of
//! permutations.

mod builders;
mod dfa;
mod figure;
mod product;

pub use builders::{coverage_dfa, figure1_dfa, pair_adjacent_dfa, perm_concat_dfa};
pub use dfa::{Dfa, StateId};
pub use figure::{figure1_disagreements, Disagreement};
pub use product::{
    graph_language, graph_language_with, permutational_language, Component, LanguageOptions, LazyProduct,
    Polarity, DEFAULT_STATE_CAP,
};

/// Complement of a complete automaton.
pub fn complement(d: &Dfa) -> Dfa {
    d.complement()
}

/// Minimal automaton for the same language.
pub fn minimize(d: &Dfa) -> Dfa {
    d.minimize()
}

pub fn export_dot(d: &Dfa) -> String {
    d.to_dot()
}

pub fn export_json(d: &Dfa) -> String {
    d.to_json()
}
