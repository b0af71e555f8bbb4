//! Words over an ordered alphabet of vertex tokens.
//!
//! Letters are stored as indices into a shared [`Alphabet`]; the alphabet
//! order is the canonical order used for every lexicographic comparison in
//! the crate. Tokens are arbitrary nonempty strings without whitespace.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a letter inside its alphabet.
pub type Letter = usize;

/// An ordered set of distinct vertex tokens.
#[derive(Clone)]
pub struct Alphabet {
    tokens: Arc<[String]>,
    index: Arc<HashMap<String, Letter>>,
}

impl Alphabet {
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(tokens.len());
        for (i, t) in tokens.iter().enumerate() {
            if t.is_empty() || t.chars().any(char::is_whitespace) {
                return Err(Error::InvalidToken);
            }
            if index.insert(t.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(t.clone()));
            }
        }
        Ok(Self {
            tokens: tokens.into(),
            index: Arc::new(index),
        })
    }

    /// Alphabet `1, 2, …, k`.
    pub fn numbered(k: usize) -> Self {
        Self::new((1..=k).map(|i| i.to_string())).expect("numbered tokens are distinct")
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn token(&self, letter: Letter) -> &str {
        &self.tokens[letter]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn index_of(&self, token: &str) -> Option<Letter> {
        self.index.get(token).copied()
    }

    pub fn letter(&self, token: &str) -> Result<Letter> {
        self.index_of(token)
            .ok_or_else(|| Error::UnknownVertex(token.to_string()))
    }

    /// True when every token is a single character, so words can be written
    /// without separators.
    pub fn is_compact(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.tokens, &other.tokens) || self.tokens == other.tokens
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.tokens.iter()).finish()
    }
}

/// How a word is written as text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WordFormat {
    /// Whitespace-separated tokens.
    Tokens,
    /// One character per token.
    Compact,
}

/// A finite word over an [`Alphabet`].
///
/// Two words are equal iff their token sequences are equal, regardless of
/// the alphabets they were built over.
#[derive(Clone)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l >= alphabet.len()) {
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        Ok(Self { alphabet, letters })
    }

    pub(crate) fn from_letters_unchecked(alphabet: Alphabet, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| l < alphabet.len()));
        Self { alphabet, letters }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            letters: Vec::new(),
        }
    }

    pub fn from_tokens<I, S>(alphabet: &Alphabet, tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let letters = tokens
            .into_iter()
            .map(|t| alphabet.letter(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_letters_unchecked(alphabet.clone(), letters))
    }

    /// Parses `text` over a known alphabet.
    pub fn parse(text: &str, alphabet: &Alphabet, format: WordFormat) -> Result<Self> {
        match format {
            WordFormat::Tokens => Self::from_tokens(alphabet, text.split_whitespace()),
            WordFormat::Compact => Self::from_tokens(
                alphabet,
                text.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| c.to_string()),
            ),
        }
    }

    /// Parses `text` and builds the alphabet from first occurrences.
    pub fn parse_inferred(text: &str, format: WordFormat) -> Result<Self> {
        let tokens: Vec<String> = match format {
            WordFormat::Tokens => text.split_whitespace().map(str::to_string).collect(),
            WordFormat::Compact => text
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c.to_string())
                .collect(),
        };
        let mut seen = Vec::new();
        for t in &tokens {
            if !seen.contains(t) {
                seen.push(t.clone());
            }
        }
        let alphabet = Alphabet::new(seen)?;
        Self::from_tokens(&alphabet, &tokens)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> + '_ {
        self.letters.iter().map(|&l| self.alphabet.token(l))
    }

    /// Re-expresses the word over another alphabet containing all its tokens.
    pub fn rebase(&self, alphabet: &Alphabet) -> Result<Self> {
        if self.alphabet == *alphabet {
            return Ok(self.clone());
        }
        Self::from_tokens(alphabet, self.tokens())
    }

    /// Letters not occurring in the word, in alphabet order.
    pub fn uncovered(&self) -> Vec<Letter> {
        let mut seen = vec![false; self.alphabet.len()];
        for &l in &self.letters {
            seen[l] = true;
        }
        (0..seen.len()).filter(|&l| !seen[l]).collect()
    }

    pub fn covers_alphabet(&self) -> bool {
        self.uncovered().is_empty()
    }

    pub fn format(&self, format: WordFormat) -> String {
        let sep = match format {
            WordFormat::Tokens => " ",
            WordFormat::Compact => "",
        };
        self.tokens().collect::<Vec<_>>().join(sep)
    }

    /// Compact form when the alphabet allows it, token form otherwise.
    pub fn to_text(&self) -> String {
        if self.alphabet.is_compact() {
            self.format(WordFormat::Compact)
        } else {
            self.format(WordFormat::Tokens)
        }
    }

    /// Subsequence of letters belonging to `subset`, over alphabet `subset`
    /// (kept in this word's alphabet order).
    pub fn restrict<S: AsRef<str>>(&self, subset: &[S]) -> Result<Word> {
        let mut keep = vec![false; self.alphabet.len()];
        for s in subset {
            keep[self.alphabet.letter(s.as_ref())?] = true;
        }
        let sub = Alphabet::new(
            (0..self.alphabet.len())
                .filter(|&l| keep[l])
                .map(|l| self.alphabet.token(l).to_string()),
        )?;
        let letters = self
            .letters
            .iter()
            .filter(|&&l| keep[l])
            .map(|&l| sub.index_of(self.alphabet.token(l)).unwrap())
            .collect();
        Ok(Word::from_letters_unchecked(sub, letters))
    }

    /// Number of (possibly overlapping) occurrences of `factor`.
    pub fn count_factor(&self, factor: &Word) -> Result<usize> {
        if factor.is_empty() {
            return Err(Error::EmptyFactor);
        }
        let hay: Vec<&str> = self.tokens().collect();
        let needle: Vec<&str> = factor.tokens().collect();
        Ok(count_occurrences(&hay, &needle))
    }

    pub fn find_repetitions(&self, degree: Degree) -> Vec<Repetition> {
        find_repetitions(&self.letters, degree)
    }

    pub fn is_square_free(&self) -> bool {
        is_repetition_free(&self.letters, Degree::Square)
    }

    pub fn is_cube_free(&self) -> bool {
        is_repetition_free(&self.letters, Degree::Cube)
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        if self.alphabet == other.alphabet {
            return self.letters == other.letters;
        }
        self.len() == other.len() && self.tokens().eq(other.tokens())
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.len().hash(state);
        for t in self.tokens() {
            t.hash(state);
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.format(WordFormat::Tokens))
    }
}

/// Canonical text: whitespace-separated tokens.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(WordFormat::Tokens))
    }
}

/// Square or cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Degree {
    Square = 2,
    Cube = 3,
}

impl Degree {
    pub fn power(self) -> usize {
        self as usize
    }
}

/// A located square or cube: `degree` equal consecutive blocks of length
/// `period` starting at `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Repetition {
    pub start: usize,
    pub period: usize,
    pub degree: Degree,
}

impl Repetition {
    pub fn len(&self) -> usize {
        self.period * self.degree.power()
    }

    pub fn is_empty(&self) -> bool {
        self.period == 0
    }

    pub fn end(&self) -> usize {
        self.start + self.len()
    }

    /// Checks the block-equality invariant against `seq`.
    pub fn holds_in<T: PartialEq>(&self, seq: &[T]) -> bool {
        self.period > 0 && self.end() <= seq.len() && is_power_at(seq, self.start, self.period, self.degree.power())
    }
}

impl fmt::Display for Repetition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start, self.period)
    }
}

/// Occurrences of `needle` in `hay`, overlaps included.
pub fn count_occurrences<T: PartialEq>(hay: &[T], needle: &[T]) -> usize {
    if needle.is_empty() || needle.len() > hay.len() {
        return 0;
    }
    hay.windows(needle.len()).filter(|w| *w == needle).count()
}

fn is_power_at<T: PartialEq>(seq: &[T], start: usize, period: usize, power: usize) -> bool {
    let block = &seq[start..start + period];
    (1..power).all(|k| &seq[start + k * period..start + (k + 1) * period] == block)
}

/// All squares or cubes of `seq`, sorted by `(start, period)`.
pub fn find_repetitions<T: PartialEq>(seq: &[T], degree: Degree) -> Vec<Repetition> {
    let power = degree.power();
    let mut out = Vec::new();
    for start in 0..seq.len() {
        let max_period = (seq.len() - start) / power;
        for period in 1..=max_period {
            if is_power_at(seq, start, period, power) {
                out.push(Repetition {
                    start,
                    period,
                    degree,
                });
            }
        }
    }
    out
}

/// Leftmost, then shortest, repetition of the given degree.
pub fn first_repetition<T: PartialEq>(seq: &[T], degree: Degree) -> Option<Repetition> {
    let power = degree.power();
    (0..seq.len()).find_map(|start| {
        let max_period = (seq.len() - start) / power;
        (1..=max_period)
            .find(|&period| is_power_at(seq, start, period, power))
            .map(|period| Repetition {
                start,
                period,
                degree,
            })
    })
}

pub fn is_repetition_free<T: PartialEq>(seq: &[T], degree: Degree) -> bool {
    first_repetition(seq, degree).is_none()
}
