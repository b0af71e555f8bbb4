//! Toolkit for 1-11-representations of graphs.
//!
//! A word over the vertex set represents a graph when two distinct vertices
//! are adjacent exactly if the word restricted to them contains at most one
//! factor `xx` or `yy` (overlapping occurrences count). This crate decodes
//! and verifies such words, locates squares and cubes, removes cubes from
//! permutational representations, computes representation numbers by
//! exhaustive search, and compiles each graph into a finite automaton that
//! accepts exactly its representations.

pub mod audit;
pub mod automata;
pub mod cli;
pub mod error;
pub mod graph;
pub mod permutational;
pub mod search;
pub mod semantics;
pub mod words;

pub use error::{Error, Result};
pub use graph::Graph;
pub use permutational::{split_blocks, PermWord};
pub use semantics::{adjacent_in_word, decode, verify};
pub use words::{Alphabet, Degree, Letter, Repetition, Word, WordFormat};
