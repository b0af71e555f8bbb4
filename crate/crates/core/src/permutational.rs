//! Words that are concatenations of permutations of the vertex set, and the
//! cube-removal machinery on them.
//!
//! In such a word every cube has a period that is a multiple of the number of
//! vertices, and deleting the middle copy of a cube leaves a concatenation of
//! permutations that decodes to the same graph. Repeating that step yields a
//! cube-free representation.

use std::fmt;
use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{find_repetitions, first_repetition, Alphabet, Degree, Letter, Repetition, Word};

/// A word certified to split into permutation blocks of its alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermWord {
    word: Word,
}

/// Checks that `letters` splits into permutations of `0..n`; returns the
/// index of the first offending block otherwise.
fn first_bad_block(letters: &[Letter], n: usize) -> Option<usize> {
    let mut seen = vec![false; n];
    for (b, chunk) in letters.chunks(n).enumerate() {
        if chunk.len() != n {
            return Some(b);
        }
        seen.iter_mut().for_each(|s| *s = false);
        for &l in chunk {
            if std::mem::replace(&mut seen[l], true) {
                return Some(b);
            }
        }
    }
    None
}

pub(crate) fn is_permutational(letters: &[Letter], n: usize) -> bool {
    n > 0 && !letters.is_empty() && letters.len() % n == 0 && first_bad_block(letters, n).is_none()
}

/// Splits `w` into permutation blocks of `vertices`. Blocks are forced at
/// multiples of `|vertices|`.
pub fn split_blocks(w: &Word, vertices: &Alphabet) -> Result<PermWord> {
    let w = w.rebase(vertices)?;
    let n = vertices.len();
    if n == 0 || w.is_empty() {
        return Err(Error::NotPermutational("empty word".into()));
    }
    if w.len() % n != 0 {
        return Err(Error::NotPermutational(format!(
            "length {} is not a multiple of {n}",
            w.len()
        )));
    }
    if let Some(b) = first_bad_block(w.letters(), n) {
        let block = &w.letters()[b * n..(b + 1) * n];
        let text: Vec<&str> = block.iter().map(|&l| vertices.token(l)).collect();
        return Err(Error::NotPermutational(format!(
            "block {b} `{}` is not a permutation",
            text.join(" ")
        )));
    }
    Ok(PermWord { word: w })
}

impl PermWord {
    /// Concatenates the given permutations (as letter indices).
    pub fn from_blocks(vertices: &Alphabet, blocks: &[Vec<Letter>]) -> Result<Self> {
        let letters: Vec<Letter> = blocks.concat();
        split_blocks(&Word::new(vertices.clone(), letters)?, vertices)
    }

    pub(crate) fn from_letters_unchecked(vertices: &Alphabet, letters: Vec<Letter>) -> Self {
        debug_assert!(is_permutational(&letters, vertices.len()));
        Self {
            word: Word::from_letters_unchecked(vertices.clone(), letters),
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    pub fn letters(&self) -> &[Letter] {
        self.word.letters()
    }

    pub fn vertices(&self) -> &Alphabet {
        self.word.alphabet()
    }

    /// Block length, the number of vertices.
    pub fn n(&self) -> usize {
        self.vertices().len()
    }

    pub fn block_count(&self) -> usize {
        self.word.len() / self.n()
    }

    pub fn blocks(&self) -> Vec<Range<usize>> {
        let n = self.n();
        (0..self.block_count()).map(|b| b * n..(b + 1) * n).collect()
    }

    pub fn block(&self, i: usize) -> &[Letter] {
        let n = self.n();
        &self.letters()[i * n..(i + 1) * n]
    }

    /// Blocks written as `[123v][v123]`.
    pub fn to_block_text(&self) -> String {
        let compact = self.vertices().is_compact();
        (0..self.block_count())
            .map(|b| {
                let toks: Vec<&str> = self.block(b).iter().map(|&l| self.vertices().token(l)).collect();
                format!("[{}]", toks.join(if compact { "" } else { " " }))
            })
            .collect()
    }
}

impl fmt::Debug for PermWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermWord({})", self.to_block_text())
    }
}

impl fmt::Display for PermWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.word, f)
    }
}

/// Cubes whose period is not a multiple of the block length. Always empty
/// for a genuine permutational word.
pub fn lemma1_violations(pw: &PermWord) -> Vec<Repetition> {
    let n = pw.n();
    find_repetitions(pw.letters(), Degree::Cube)
        .into_iter()
        .filter(|r| r.period % n != 0)
        .collect()
}

/// Drops block `i + 1`, which must equal block `i`.
pub fn remove_duplicate_block(pw: &PermWord, i: usize) -> Result<PermWord> {
    if i + 1 >= pw.block_count() {
        return Err(Error::Precondition(format!(
            "block {} does not exist (word has {} blocks)",
            i + 1,
            pw.block_count()
        )));
    }
    if pw.block(i) != pw.block(i + 1) {
        return Err(Error::Precondition(format!(
            "blocks {i} and {} differ",
            i + 1
        )));
    }
    let n = pw.n();
    let mut letters = pw.letters().to_vec();
    letters.drain((i + 1) * n..(i + 2) * n);
    Ok(PermWord::from_letters_unchecked(pw.vertices(), letters))
}

/// Deletes the middle copy of the cube `rep`. The remaining letters
/// restitch into permutation blocks because the period is a multiple of `n`.
pub fn remove_middle_of_cube(pw: &PermWord, rep: &Repetition) -> Result<PermWord> {
    if rep.degree != Degree::Cube || !rep.holds_in(pw.letters()) {
        return Err(Error::Precondition(format!(
            "no cube with start {} and period {}",
            rep.start, rep.period
        )));
    }
    let n = pw.n();
    if rep.period % n != 0 {
        return Err(Error::PeriodNotMultiple {
            start: rep.start,
            period: rep.period,
            n,
        });
    }
    let mut letters = pw.letters().to_vec();
    letters.drain(rep.start + rep.period..rep.start + 2 * rep.period);
    split_blocks(&Word::new(pw.vertices().clone(), letters)?, pw.vertices())
}

/// One normalization step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Removal {
    pub cube: Repetition,
    pub length_after: usize,
}

/// Result of [`cube_free_normalize_logged`].
#[derive(Debug, Clone)]
pub struct Normalization {
    pub word: PermWord,
    pub removals: Vec<Removal>,
}

/// Removes middle copies of cubes (leftmost start, then shortest period)
/// until none remain.
pub fn cube_free_normalize(pw: &PermWord) -> PermWord {
    cube_free_normalize_logged(pw).word
}

pub fn cube_free_normalize_logged(pw: &PermWord) -> Normalization {
    let mut current = pw.clone();
    let mut removals = Vec::new();
    while let Some(cube) = first_repetition(current.letters(), Degree::Cube) {
        current = remove_middle_of_cube(&current, &cube)
            .unwrap_or_else(|e| panic!("cube {cube} in {current:?} cannot be removed: {e}"));
        removals.push(Removal {
            cube,
            length_after: current.word().len(),
        });
    }
    Normalization {
        word: current,
        removals,
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut current: Vec<Letter> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}
