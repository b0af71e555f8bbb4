use serde::Serialize;

use crate::automata::builders::{figure1_dfa, pair_adjacent_dfa};
use crate::error::Result;
use crate::words::{Alphabet, Letter, Word};

/// A word on which the printed six-state automaton and the adjacency
/// language disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub word: String,
    pub printed_accepts: bool,
    pub definition_accepts: bool,
}

/// Compares the printed automaton for the pair `(a, b)` with the automaton
/// built from the language definition on every word of length at most
/// `max_len`, in length-then-lex order.
pub fn figure1_disagreements(a: &str, b: &str, alphabet: &Alphabet, max_len: usize) -> Result<Vec<Disagreement>> {
    let printed = figure1_dfa(a, b, alphabet)?;
    let definition = pair_adjacent_dfa(a, b, alphabet)?;
    let k = alphabet.len();
    let mut out = Vec::new();
    let mut letters: Vec<Letter> = Vec::new();
    for len in 0..=max_len {
        letters.clear();
        letters.resize(len, 0);
        loop {
            let p = printed.accepts_letters(&letters);
            let d = definition.accepts_letters(&letters);
            if p != d {
                out.push(Disagreement {
                    word: Word::from_letters_unchecked(alphabet.clone(), letters.clone()).to_text(),
                    printed_accepts: p,
                    definition_accepts: d,
                });
            }
            // odometer increment, last position fastest
            let Some(i) = (0..len).rev().find(|&i| letters[i] + 1 < k) else {
                break;
            };
            letters[i] += 1;
            letters[i + 1..].iter_mut().for_each(|l| *l = 0);
        }
    }
    Ok(out)
}
