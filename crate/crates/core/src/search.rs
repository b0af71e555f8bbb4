//! Exhaustive searches for representation numbers and representing words.
//!
//! Words are generated depth-first in lexicographic order of the canonical
//! vertex order, so the first hit at a length is the lex-least witness. A
//! branch dies as soon as an edge pair has seen two squares in its
//! restriction (square counts only grow) or too few positions remain to
//! cover the missing vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permutational::{permutations, PermWord};
use crate::words::{Letter, Word};

/// Explicit bounds on search effort.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum search-tree nodes visited by word searches.
    pub word_visits: u64,
    /// Maximum block tuples (complete or partial) visited by permutation
    /// searches.
    pub perm_tuples: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            word_visits: 100_000_000,
            perm_tuples: 1_000_000,
        }
    }
}

/// A representation number together with its lex-least witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepNumber {
    pub length: usize,
    pub witness: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermRepNumber {
    pub blocks: usize,
    pub witness: PermWord,
}

/// Square counts of every vertex pair's restriction, updated one letter at
/// a time.
#[derive(Clone)]
struct PairTracker {
    n: usize,
    /// last restricted letter per pair, `NONE` before the first
    last: Vec<u8>,
    squares: Vec<u8>,
    seen: Vec<bool>,
    uncovered: usize,
}

const NONE: u8 = u8::MAX;

impl PairTracker {
    fn new(n: usize) -> Self {
        Self {
            n,
            last: vec![NONE; n * n],
            squares: vec![0; n * n],
            seen: vec![false; n],
            uncovered: n,
        }
    }

    #[inline]
    fn slot(&self, x: Letter, y: Letter) -> usize {
        if x < y {
            x * self.n + y
        } else {
            y * self.n + x
        }
    }

    /// Appends `c`; returns false if an edge pair became non-adjacent.
    fn push(&mut self, c: Letter, g: &Graph) -> bool {
        if !self.seen[c] {
            self.seen[c] = true;
            self.uncovered -= 1;
        }
        let mut alive = true;
        for y in 0..self.n {
            if y == c {
                continue;
            }
            let s = self.slot(c, y);
            if self.last[s] == c as u8 {
                self.squares[s] = self.squares[s].saturating_add(1);
                if self.squares[s] > 1 && g.is_adjacent(c, y) {
                    alive = false;
                }
            }
            self.last[s] = c as u8;
        }
        alive
    }

    fn represents(&self, g: &Graph) -> bool {
        self.uncovered == 0
            && g.pairs()
                .all(|(x, y)| (self.squares[self.slot(x, y)] <= 1) == g.is_adjacent(x, y))
    }
}

struct WordSearch<'a, F> {
    g: &'a Graph,
    len: usize,
    budget: u64,
    visits: u64,
    path: Vec<Letter>,
    on_found: F,
}

impl<F: FnMut(&[Letter]) -> bool> WordSearch<'_, F> {
    /// Returns true when `on_found` asked to stop.
    fn run(&mut self, tracker: &PairTracker) -> Result<bool> {
        self.visits += 1;
        if self.visits > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let remaining = self.len - self.path.len();
        if tracker.uncovered > remaining {
            return Ok(false);
        }
        if remaining == 0 {
            return Ok(tracker.represents(self.g) && (self.on_found)(&self.path));
        }
        for c in 0..self.g.order() {
            let mut next = tracker.clone();
            if !next.push(c, self.g) {
                continue;
            }
            self.path.push(c);
            let stop = self.run(&next)?;
            self.path.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn search_words<F>(g: &Graph, len: usize, budget: u64, on_found: F) -> Result<()>
where
    F: FnMut(&[Letter]) -> bool,
{
    let mut s = WordSearch {
        g,
        len,
        budget,
        visits: 0,
        path: Vec::with_capacity(len),
        on_found,
    };
    s.run(&PairTracker::new(g.order()))?;
    Ok(())
}

/// Smallest length of a word representing `g`, searching lengths up to
/// `max_len`, with the lex-least witness of that length.
pub fn rep_number(g: &Graph, max_len: usize) -> Result<RepNumber> {
    rep_number_with(g, max_len, Budget::default())
}

pub fn rep_number_with(g: &Graph, max_len: usize, budget: Budget) -> Result<RepNumber> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    if max_len < n {
        return Err(Error::Precondition(format!(
            "length bound {max_len} is below the vertex count {n}"
        )));
    }
    for len in n..=max_len {
        let mut witness = None;
        search_words(g, len, budget.word_visits, |w| {
            witness = Some(w.to_vec());
            true
        })?;
        if let Some(letters) = witness {
            return Ok(RepNumber {
                length: len,
                witness: Word::from_letters_unchecked(g.vertices().clone(), letters),
            });
        }
    }
    Err(Error::NotFound { bound: max_len })
}

/// Every word of length `len` representing `g`, in lex order.
pub fn enumerate_representations(g: &Graph, len: usize) -> Result<Vec<Word>> {
    enumerate_representations_with(g, len, Budget::default())
}

pub fn enumerate_representations_with(g: &Graph, len: usize, budget: Budget) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    search_words(g, len, budget.word_visits, |w| {
        out.push(Word::from_letters_unchecked(g.vertices().clone(), w.to_vec()));
        false
    })?;
    Ok(out)
}

struct PermSearch<'a, F> {
    g: &'a Graph,
    perms: Vec<Vec<Letter>>,
    blocks: usize,
    budget: u64,
    visits: u64,
    chosen: Vec<usize>,
    on_found: F,
}

impl<F: FnMut(&[usize]) -> bool> PermSearch<'_, F> {
    fn run(&mut self, tracker: &PairTracker) -> Result<bool> {
        self.visits += 1;
        if self.visits > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        if self.chosen.len() == self.blocks {
            return Ok(tracker.represents(self.g) && (self.on_found)(&self.chosen));
        }
        for p in 0..self.perms.len() {
            let mut next = tracker.clone();
            let alive = self.perms[p].iter().all(|&c| next.push(c, self.g));
            if !alive {
                continue;
            }
            self.chosen.push(p);
            let stop = self.run(&next)?;
            self.chosen.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn search_perms<F>(g: &Graph, blocks: usize, budget: u64, on_found: F) -> Result<Vec<Vec<Letter>>>
where
    F: FnMut(&[usize]) -> bool,
{
    let mut s = PermSearch {
        g,
        perms: permutations(g.order()),
        blocks,
        budget,
        visits: 0,
        chosen: Vec::with_capacity(blocks),
        on_found,
    };
    s.run(&PairTracker::new(g.order()))?;
    Ok(s.perms)
}

fn assemble(g: &Graph, perms: &[Vec<Letter>], chosen: &[usize]) -> PermWord {
    let letters = chosen.iter().flat_map(|&p| perms[p].iter().copied()).collect();
    PermWord::from_letters_unchecked(g.vertices(), letters)
}

/// Fewest permutation blocks whose concatenation represents `g`, up to
/// `max_blocks`, with the lex-least witness.
pub fn perm_rep_number(g: &Graph, max_blocks: usize) -> Result<PermRepNumber> {
    perm_rep_number_with(g, max_blocks, Budget::default())
}

pub fn perm_rep_number_with(g: &Graph, max_blocks: usize, budget: Budget) -> Result<PermRepNumber> {
    if g.order() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    if max_blocks == 0 {
        return Err(Error::Precondition("block bound must be at least 1".into()));
    }
    for blocks in 1..=max_blocks {
        let mut found = None;
        let perms = search_perms(g, blocks, budget.perm_tuples, |c| {
            found = Some(c.to_vec());
            true
        })?;
        if let Some(chosen) = found {
            return Ok(PermRepNumber {
                blocks,
                witness: assemble(g, &perms, &chosen),
            });
        }
    }
    Err(Error::NotFound { bound: max_blocks })
}

/// Every concatenation of `blocks` permutations representing `g`, in lex
/// order.
pub fn enumerate_perm_representations(g: &Graph, blocks: usize) -> Result<Vec<PermWord>> {
    enumerate_perm_representations_with(g, blocks, Budget::default())
}

pub fn enumerate_perm_representations_with(g: &Graph, blocks: usize, budget: Budget) -> Result<Vec<PermWord>> {
    let mut chosen_all = Vec::new();
    let perms = search_perms(g, blocks, budget.perm_tuples, |c| {
        chosen_all.push(c.to_vec());
        false
    })?;
    Ok(chosen_all.iter().map(|c| assemble(g, &perms, c)).collect())
}

/// Every concatenation of `blocks` permutations of `n` letters, in lex
/// order. Used by the audits; no pruning.
pub fn all_perm_words(n: usize, blocks: usize) -> Vec<Vec<Letter>> {
    let perms = permutations(n);
    let mut out: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..blocks {
        out = out
            .iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut w = prefix.clone();
                    w.extend_from_slice(p);
                    w
                })
            })
            .collect();
    }
    out
}
