//! The 1-11 adjacency rule: two distinct letters are adjacent iff the word
//! restricted to them contains at most one factor `xx` or `yy`, counting
//! overlapping occurrences.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::words::{Alphabet, Letter, Word};

/// Counts of `xx` and `yy` in the restriction of `letters` to `{x, y}`.
pub fn pair_square_counts(letters: &[Letter], x: Letter, y: Letter) -> (usize, usize) {
    let mut last = None;
    let (mut xx, mut yy) = (0, 0);
    for &l in letters {
        if l != x && l != y {
            continue;
        }
        if last == Some(l) {
            if l == x {
                xx += 1;
            } else {
                yy += 1;
            }
        }
        last = Some(l);
    }
    (xx, yy)
}

/// Adjacency of two letters present in the word, on raw letter indices.
pub fn letters_adjacent(letters: &[Letter], x: Letter, y: Letter) -> bool {
    let (xx, yy) = pair_square_counts(letters, x, y);
    xx + yy <= 1
}

/// Whether `x` and `y` are adjacent in the graph represented by `w`.
pub fn adjacent_in_word(w: &Word, x: &str, y: &str) -> Result<bool> {
    if x == y {
        return Err(Error::SameLetter(x.to_string()));
    }
    let alphabet = w.alphabet();
    let find = |t: &str| {
        alphabet
            .index_of(t)
            .filter(|l| w.letters().contains(l))
            .ok_or_else(|| Error::MissingLetter(t.to_string()))
    };
    let (lx, ly) = (find(x)?, find(y)?);
    Ok(letters_adjacent(w.letters(), lx, ly))
}

/// Reads `w` as a 1-11-representation over `vertices`.
pub fn decode(w: &Word, vertices: &Alphabet) -> Result<Graph> {
    let w = w.rebase(vertices)?;
    if let Some(&missing) = w.uncovered().first() {
        return Err(Error::Uncovered(vertices.token(missing).to_string()));
    }
    Ok(decode_letters(w.letters(), vertices))
}

/// Decoder on a covering letter sequence; no coverage check.
pub(crate) fn decode_letters(letters: &[Letter], vertices: &Alphabet) -> Graph {
    let mut g = Graph::edgeless(vertices.clone());
    let n = vertices.len();
    for x in 0..n {
        for y in x + 1..n {
            if letters_adjacent(letters, x, y) {
                g.add_edge(x, y).expect("distinct letters");
            }
        }
    }
    g
}

/// Why a word fails to represent a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mismatch {
    UnknownLetter { token: String },
    Uncovered { vertex: String },
    Pair {
        x: String,
        y: String,
        squares: usize,
        edge_in_graph: bool,
    },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::UnknownLetter { token } => write!(f, "letter `{token}` is not a vertex"),
            Mismatch::Uncovered { vertex } => write!(f, "vertex {vertex} does not occur"),
            Mismatch::Pair {
                x,
                y,
                squares,
                edge_in_graph,
            } => {
                let s = if *squares == 1 { "square" } else { "squares" };
                if *edge_in_graph {
                    write!(f, "pair ({x},{y}): {squares} {s}, non-adjacency forced")
                } else {
                    write!(f, "pair ({x},{y}): {squares} {s}, adjacency forced")
                }
            }
        }
    }
}

/// Outcome of checking a word against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub holds: bool,
    pub mismatches: Vec<Mismatch>,
}

/// Full diagnosis of `w` against `g`.
pub fn check(g: &Graph, w: &Word) -> Verification {
    let vertices = g.vertices();
    let mut mismatches = Vec::new();
    let mut letters = Vec::with_capacity(w.len());
    for t in w.tokens() {
        match vertices.index_of(t) {
            Some(l) => letters.push(l),
            None => mismatches.push(Mismatch::UnknownLetter {
                token: t.to_string(),
            }),
        }
    }
    if mismatches.is_empty() {
        let mut seen = vec![false; vertices.len()];
        for &l in &letters {
            seen[l] = true;
        }
        mismatches.extend(
            (0..vertices.len())
                .filter(|&l| !seen[l])
                .map(|l| Mismatch::Uncovered {
                    vertex: vertices.token(l).to_string(),
                }),
        );
    }
    if mismatches.is_empty() {
        for (x, y) in g.pairs() {
            let (xx, yy) = pair_square_counts(&letters, x, y);
            let adjacent = xx + yy <= 1;
            if adjacent != g.is_adjacent(x, y) {
                mismatches.push(Mismatch::Pair {
                    x: vertices.token(x).to_string(),
                    y: vertices.token(y).to_string(),
                    squares: xx + yy,
                    edge_in_graph: g.is_adjacent(x, y),
                });
            }
        }
    }
    Verification {
        holds: mismatches.is_empty(),
        mismatches,
    }
}

/// True iff `w` covers every vertex of `g` and decodes to `g`.
pub fn verify(g: &Graph, w: &Word) -> bool {
    check(g, w).holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::WordFormat;

    fn gstar() -> Graph {
        Graph::triangle_plus_isolated()
    }

    fn w(s: &str) -> Word {
        Word::parse_inferred(s, WordFormat::Compact).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        assert!(adjacent_in_word(&w("123vvv"), "1", "2").unwrap());
        assert!(!adjacent_in_word(&w("123vvv"), "1", "v").unwrap());
        assert!(!adjacent_in_word(&w("1122"), "1", "2").unwrap());
    }

    #[test]
    fn adjacency_preconditions_are_errors() {
        assert_eq!(
            adjacent_in_word(&w("123"), "1", "1"),
            Err(Error::SameLetter("1".into()))
        );
        assert_eq!(
            adjacent_in_word(&w("123"), "1", "v"),
            Err(Error::MissingLetter("v".into()))
        );
        let a = Alphabet::new(["1", "2", "3"]).unwrap();
        let partial = Word::parse("12", &a, WordFormat::Compact).unwrap();
        assert_eq!(
            adjacent_in_word(&partial, "1", "3"),
            Err(Error::MissingLetter("3".into()))
        );
    }

    #[test]
    fn decode_examples() {
        let v = gstar().vertices().clone();
        assert!(decode(&w("123vvv"), &v).unwrap().equals(&gstar()));
        assert!(decode(&w("123vv123123v"), &v).unwrap().equals(&gstar()));
        let k2 = Alphabet::numbered(2);
        assert!(decode(&w("1212"), &k2).unwrap().equals(&Graph::complete(2)));
    }

    #[test]
    fn decode_requires_coverage() {
        let v = gstar().vertices().clone();
        assert_eq!(decode(&w("123"), &v), Err(Error::Uncovered("v".into())));
        assert_eq!(
            decode(&w("12x"), &Alphabet::numbered(2)),
            Err(Error::UnknownVertex("x".into()))
        );
    }

    #[test]
    fn verify_examples() {
        assert!(verify(&gstar(), &w("12vvv3")));
        assert!(!verify(&gstar(), &w("123v")));
        assert!(verify(&Graph::complete(2), &w("12")));
    }

    #[test]
    fn diagnosis_names_the_pair() {
        let report = check(&gstar(), &w("123v"));
        assert!(!report.holds);
        assert_eq!(report.mismatches.len(), 3);
        assert_eq!(
            report.mismatches[0].to_string(),
            "pair (1,v): 0 squares, adjacency forced"
        );
        let report = check(&gstar(), &w("123"));
        assert_eq!(report.mismatches, vec![Mismatch::Uncovered { vertex: "v".into() }]);
        let report = check(&Graph::complete(2), &w("1122"));
        assert_eq!(
            report.mismatches[0].to_string(),
            "pair (1,2): 2 squares, non-adjacency forced"
        );
    }

    /// The definition's non-adjacency clause evaluated directly: two `xx`,
    /// or two `yy`, or at least one of each.
    fn non_adjacent_by_clause(w: &Word, x: &str, y: &str) -> bool {
        let r = w.restrict(&[x, y]).unwrap();
        let xx = Word::parse_inferred(&format!("{x} {x}"), WordFormat::Tokens).unwrap();
        let yy = Word::parse_inferred(&format!("{y} {y}"), WordFormat::Tokens).unwrap();
        let cx = r.count_factor(&xx).unwrap();
        let cy = r.count_factor(&yy).unwrap();
        cx >= 2 || cy >= 2 || (cx >= 1 && cy >= 1)
    }

    #[test]
    fn decoder_matches_the_definition_clause() {
        let a = Alphabet::numbered(3);
        for len in 3..=6 {
            let total = 3usize.pow(len as u32);
            for code in 0..total {
                let letters: Vec<Letter> = (0..len).map(|i| code / 3usize.pow(i as u32) % 3).collect();
                let word = Word::new(a.clone(), letters).unwrap();
                if !word.covers_alphabet() {
                    assert!(decode(&word, &a).is_err());
                    continue;
                }
                let g = decode(&word, &a).unwrap();
                for (x, y) in g.pairs() {
                    let (tx, ty) = (a.token(x), a.token(y));
                    assert_eq!(g.is_adjacent(x, y), !non_adjacent_by_clause(&word, tx, ty), "{word}");
                    assert_eq!(
                        adjacent_in_word(&word, tx, ty).unwrap(),
                        adjacent_in_word(&word, ty, tx).unwrap()
                    );
                }
                assert!(verify(&g, &word));
            }
        }
    }
}
