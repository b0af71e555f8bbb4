//! The component automata: per-pair adjacency, vertex coverage, and
//! concatenations of permutations.

use crate::automata::dfa::Dfa;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter};

/// Tracker for the `{a, b}`-restriction of the input read so far.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum PairState {
    Live {
        last: Option<Letter>,
        seen_a: bool,
        seen_b: bool,
        squares: u8,
    },
    /// Two or more squares: non-adjacent forever.
    Dead,
}

/// Automaton for the words whose restriction to `{a, b}` contains both
/// letters and at most one factor `aa` or `bb`, i.e. the words in which
/// `a` and `b` are adjacent.
pub fn pair_adjacent_dfa(a: &str, b: &str, alphabet: &Alphabet) -> Result<Dfa> {
    if a == b {
        return Err(Error::SameLetter(a.to_string()));
    }
    let la = alphabet.letter(a)?;
    let lb = alphabet.letter(b)?;
    Ok(pair_adjacent_letters(la, lb, alphabet))
}

pub(crate) fn pair_adjacent_letters(la: Letter, lb: Letter, alphabet: &Alphabet) -> Dfa {
    let start = PairState::Live {
        last: None,
        seen_a: false,
        seen_b: false,
        squares: 0,
    };
    Dfa::explore(
        alphabet.clone(),
        start,
        |&s, x| match s {
            PairState::Dead => PairState::Dead,
            _ if x != la && x != lb => s,
            PairState::Live {
                last,
                seen_a,
                seen_b,
                squares,
            } => {
                let squares = squares + u8::from(last == Some(x));
                if squares > 1 {
                    PairState::Dead
                } else {
                    PairState::Live {
                        last: Some(x),
                        seen_a: seen_a || x == la,
                        seen_b: seen_b || x == lb,
                        squares,
                    }
                }
            }
        },
        |s| matches!(s, PairState::Live { seen_a: true, seen_b: true, .. }),
    )
}

/// Words in which every letter of the alphabet occurs at least once. One
/// state per subset of letters seen so far.
pub fn coverage_dfa(alphabet: &Alphabet) -> Dfa {
    let full = full_mask(alphabet.len());
    Dfa::explore(alphabet.clone(), 0u64, |&seen, x| seen | 1 << x, move |&seen| seen == full)
}

/// Nonempty concatenations of permutations of the alphabet. A state holds
/// the letters seen in the current block and whether a block has been
/// completed; repeating a letter within a block is fatal.
pub fn perm_concat_dfa(alphabet: &Alphabet) -> Dfa {
    let full = full_mask(alphabet.len());
    Dfa::explore(
        alphabet.clone(),
        Some((0u64, false)),
        move |&s, x| {
            let (block, completed) = s?;
            if block >> x & 1 == 1 {
                return None;
            }
            let block = block | 1 << x;
            if block == full {
                Some((0, true))
            } else {
                Some((block, completed))
            }
        },
        |&s| s == Some((0, true)),
    )
}

fn full_mask(k: usize) -> u64 {
    assert!(k < 64, "alphabets of 64 or more letters are not supported");
    (1u64 << k) - 1
}

/// The commonly reproduced six-state drawing of the pair automaton:
/// states `q0..q5`, start `q0`, accepting `{q2, q4}`, `q5` a sink, and
/// letters other than `a`, `b` looping everywhere.
pub fn figure1_dfa(a: &str, b: &str, alphabet: &Alphabet) -> Result<Dfa> {
    if a == b {
        return Err(Error::SameLetter(a.to_string()));
    }
    let la = alphabet.letter(a)?;
    let lb = alphabet.letter(b)?;
    // (on a, on b) for q0..q4; q5 absorbs everything.
    const TABLE: [(usize, usize); 5] = [(1, 3), (2, 3), (5, 4), (1, 4), (2, 5)];
    let k = alphabet.len();
    let mut delta = Vec::with_capacity(6 * k);
    for q in 0..6 {
        for x in 0..k {
            let t = match TABLE.get(q) {
                None => 5,
                Some(&(on_a, _)) if x == la => on_a,
                Some(&(_, on_b)) if x == lb => on_b,
                Some(_) => q,
            };
            delta.push(t);
        }
    }
    Dfa::new(
        alphabet.clone(),
        0,
        vec![false, false, true, false, true, false],
        delta,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::pair_square_counts;

    fn abc() -> Alphabet {
        Alphabet::new(["a", "b", "c"]).unwrap()
    }

    fn word(s: &str, alphabet: &Alphabet) -> Vec<Letter> {
        s.chars().map(|c| alphabet.letter(&c.to_string()).unwrap()).collect()
    }

    fn all_words(k: usize, max_len: usize) -> Vec<Vec<Letter>> {
        let mut out = vec![vec![]];
        let mut layer = vec![vec![]];
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|w: &Vec<Letter>| {
                    (0..k).map(move |x| {
                        let mut v = w.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    #[test]
    fn pair_examples() {
        let s = abc();
        let d = pair_adjacent_dfa("a", "b", &s).unwrap();
        assert!(d.accepts_letters(&word("abab", &s)));
        assert!(!d.accepts_letters(&word("aabb", &s)));
        assert!(d.accepts_letters(&word("aaba", &s)));
        assert!(!d.accepts_letters(&word("aa", &s)));
        assert!(d.accepts_letters(&word("cacbc", &s)));
        assert!(!d.accepts_letters(&[]));
        assert_eq!(d.state_count(), 10);
        assert_eq!(pair_adjacent_dfa("a", "a", &s).unwrap_err(), Error::SameLetter("a".into()));
        assert!(pair_adjacent_dfa("a", "z", &s).is_err());
    }

    #[test]
    fn pair_matches_restricted_predicate() {
        let s = abc();
        let d = pair_adjacent_dfa("a", "b", &s).unwrap();
        for w in all_words(3, 6) {
            let has_a = w.contains(&0);
            let has_b = w.contains(&1);
            let (xx, yy) = pair_square_counts(&w, 0, 1);
            assert_eq!(d.accepts_letters(&w), has_a && has_b && xx + yy <= 1, "{w:?}");
        }
    }

    #[test]
    fn complement_examples() {
        let s = abc();
        let d = pair_adjacent_dfa("a", "b", &s).unwrap();
        let c = d.complement();
        assert!(c.accepts_letters(&word("aabb", &s)));
        assert!(c.accepts_letters(&[]));
        let cc = c.complement();
        for w in all_words(3, 6) {
            assert_eq!(cc.accepts_letters(&w), d.accepts_letters(&w));
            assert_ne!(c.accepts_letters(&w), d.accepts_letters(&w));
        }
    }

    #[test]
    fn coverage_examples() {
        let v = Alphabet::new(["1", "2", "3", "v"]).unwrap();
        let d = coverage_dfa(&v);
        assert_eq!(d.state_count(), 16);
        assert!(d.accepts_letters(&word("123v", &v)));
        assert!(d.accepts_letters(&word("v3v21", &v)));
        assert!(!d.accepts_letters(&word("123123", &v)));
        assert!(!d.accepts_letters(&[]));
    }

    #[test]
    fn perm_concat_examples() {
        let v = Alphabet::new(["1", "2", "3", "v"]).unwrap();
        let d = perm_concat_dfa(&v);
        assert!(d.accepts_letters(&word("123vv123123v", &v)));
        assert!(!d.accepts_letters(&word("123v123v123", &v)));
        assert!(!d.accepts_letters(&[]));
        assert!(!d.accepts_letters(&word("1123", &v)));
        assert!(d.accepts_letters(&word("v321", &v)));
    }

    #[test]
    fn figure1_as_printed() {
        let s = abc();
        let f = figure1_dfa("a", "b", &s).unwrap();
        assert_eq!(f.state_count(), 6);
        // The printed automaton rejects an alternating word and accepts a
        // word without `b`.
        assert!(!f.accepts_letters(&word("abab", &s)));
        assert!(f.accepts_letters(&word("aa", &s)));
    }

    #[test]
    fn minimized_pair_is_small() {
        let s = abc();
        let d = pair_adjacent_dfa("a", "b", &s).unwrap();
        let m = d.minimize();
        assert!(m.state_count() <= 10);
        for w in all_words(3, 6) {
            assert_eq!(m.accepts_letters(&w), d.accepts_letters(&w));
        }
    }
}
