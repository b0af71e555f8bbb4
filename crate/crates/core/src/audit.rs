//! Exhaustive desk-scale checks of the counterexample theorems and of the
//! cube lemmas on permutational words.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::permutational::{
    cube_free_normalize, lemma1_violations, permutations, remove_middle_of_cube, PermWord,
};
use crate::search::{enumerate_perm_representations, enumerate_representations, rep_number};
use crate::semantics::decode;
use crate::words::{find_repetitions, Alphabet, Degree, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditEntry {
    pub claim: String,
    pub paper_ref: String,
    pub verdict: Verdict,
    pub witness_or_counterexample: Option<String>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
    #[serde(rename = "min_length_G_star")]
    pub min_length_g_star: usize,
    pub minimal_words: usize,
    pub minimal_words_all_contain_vvv: bool,
    #[serde(rename = "perm_rep_number_G_star")]
    pub perm_rep_number_g_star: Option<usize>,
    pub two_block_reps: usize,
    pub three_block_reps: usize,
    pub three_block_reps_all_contain_square: bool,
    pub lemma1_words_checked: usize,
    pub lemma1_violations: usize,
    pub removal_cubes_checked: usize,
    pub removal_failures: usize,
    pub seed: Option<u64>,
    pub random_samples: usize,
}

impl AuditReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == Verdict::Pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditOptions {
    /// Also sample random permutational words at n = 4 for the cube-period
    /// property.
    pub extended: bool,
    pub seed: u64,
    pub samples: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        Self {
            extended: false,
            seed: 0,
            samples: 10_000,
        }
    }
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, u128)> {
    let t = Instant::now();
    let out = f()?;
    Ok((out, t.elapsed().as_millis()))
}

/// Every permutational word over `1..=n` with between 1 and `max_blocks`
/// blocks.
pub fn perm_universe(n: usize, max_blocks: usize) -> Vec<PermWord> {
    let alphabet = Alphabet::numbered(n);
    let perms = permutations(n);
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_blocks {
        layer = layer
            .iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut w = prefix.clone();
                    w.extend_from_slice(p);
                    w
                })
            })
            .collect();
        out.extend(
            layer
                .iter()
                .map(|w| PermWord::from_letters_unchecked(&alphabet, w.clone())),
        );
    }
    out
}

/// A uniformly random concatenation of `blocks` permutations of `1..=n`.
pub fn random_perm_word<R: Rng>(rng: &mut R, n: usize, blocks: usize) -> PermWord {
    let alphabet = Alphabet::numbered(n);
    let mut letters = Vec::with_capacity(n * blocks);
    let mut block: Vec<Letter> = (0..n).collect();
    for _ in 0..blocks {
        block.shuffle(rng);
        letters.extend_from_slice(&block);
    }
    PermWord::from_letters_unchecked(&alphabet, letters)
}

/// Middle-copy removals checked and failed over `words`:
/// every cube's middle copy is removed and the decode compared.
pub fn check_middle_removal(words: &[PermWord]) -> (usize, usize, Option<String>) {
    let mut checked = 0;
    let mut failures = 0;
    let mut first = None;
    for pw in words {
        let before = decode(pw.word(), pw.vertices()).expect("permutational words cover");
        let mut fail = |what: String| {
            failures += 1;
            first.get_or_insert(what);
        };
        for cube in find_repetitions(pw.letters(), Degree::Cube) {
            checked += 1;
            match remove_middle_of_cube(pw, &cube) {
                Ok(after) if decode(after.word(), pw.vertices()).ok().as_ref() == Some(&before) => {}
                Ok(after) => fail(format!("{} -> {} changes the graph", pw.word().to_text(), after.word().to_text())),
                Err(e) => fail(format!("{} cube {cube}: {e}", pw.word().to_text())),
            }
        }
        let normal = cube_free_normalize(pw);
        if !normal.word().is_cube_free()
            || decode(normal.word(), pw.vertices()).ok().as_ref() != Some(&before)
            || normal.block_count() > pw.block_count()
        {
            fail(format!("normalizing {} gives {}", pw.word().to_text(), normal.word().to_text()));
        }
    }
    (checked, failures, first)
}

pub fn audit_paper_theorems() -> Result<AuditReport> {
    audit_with(AuditOptions::default())
}

pub fn audit_with(options: AuditOptions) -> Result<AuditReport> {
    let g = Graph::triangle_plus_isolated();
    let mut entries = Vec::new();

    // (1) minimum length and the cube in every minimal word
    let (r, ms) = timed(|| rep_number(&g, 8))?;
    entries.push(AuditEntry {
        claim: "K3 plus an isolated vertex has minimum representation length 6".into(),
        paper_ref: "min-length".into(),
        verdict: (r.length == 6).into(),
        witness_or_counterexample: Some(r.witness.to_text()),
        elapsed_ms: ms,
    });
    let (minimal, ms) = timed(|| enumerate_representations(&g, 6))?;
    let cube_free: Vec<_> = minimal.iter().filter(|w| w.is_cube_free()).collect();
    let all_vvv = minimal.iter().all(|w| w.to_text().contains("vvv"));
    entries.push(AuditEntry {
        claim: "every length-6 representation of K3 plus an isolated vertex contains the cube vvv".into(),
        paper_ref: "min-length-cube".into(),
        verdict: (minimal.len() == 24 && cube_free.is_empty() && all_vvv).into(),
        witness_or_counterexample: cube_free
            .first()
            .map(|w| w.to_text())
            .or_else(|| Some(format!("{} words, all containing vvv", minimal.len()))),
        elapsed_ms: ms,
    });

    // (2) three permutations needed, and every 3-block representation has a square
    let (two, ms2) = timed(|| enumerate_perm_representations(&g, 2))?;
    let (three, ms3) = timed(|| enumerate_perm_representations(&g, 3))?;
    let one = enumerate_perm_representations(&g, 1)?;
    let perm_number = if !one.is_empty() {
        Some(1)
    } else if !two.is_empty() {
        Some(2)
    } else if !three.is_empty() {
        Some(3)
    } else {
        None
    };
    entries.push(AuditEntry {
        claim: "K3 plus an isolated vertex needs exactly 3 permutations".into(),
        paper_ref: "perm-number".into(),
        verdict: (perm_number == Some(3)).into(),
        witness_or_counterexample: two
            .first()
            .map(|p| format!("2-block representation {}", p.word().to_text()))
            .or_else(|| three.first().map(|p| p.to_block_text())),
        elapsed_ms: ms2 + ms3,
    });
    let square_free: Vec<_> = three.iter().filter(|p| p.word().is_square_free()).collect();
    entries.push(AuditEntry {
        claim: "every 3-permutation representation of K3 plus an isolated vertex contains a square".into(),
        paper_ref: "perm-square".into(),
        verdict: (!three.is_empty() && square_free.is_empty()).into(),
        witness_or_counterexample: square_free
            .first()
            .map(|p| p.word().to_text())
            .or_else(|| Some(format!("{} representations among 13824 triples", three.len()))),
        elapsed_ms: ms3,
    });

    // (3) cube periods are multiples of n
    let t = Instant::now();
    let universe = perm_universe(3, 4);
    let mut violations = 0;
    let mut first_violation = None;
    for pw in &universe {
        let v = lemma1_violations(pw);
        if let Some(r) = v.first() {
            first_violation.get_or_insert_with(|| format!("{} cube {r}", pw.word().to_text()));
        }
        violations += v.len();
    }
    entries.push(AuditEntry {
        claim: format!(
            "cubes in the {} permutational words with n = 3 and at most 4 blocks have period divisible by 3",
            universe.len()
        ),
        paper_ref: "cube-period".into(),
        verdict: (violations == 0).into(),
        witness_or_counterexample: first_violation,
        elapsed_ms: t.elapsed().as_millis(),
    });

    // (4) middle-copy removal preserves the graph
    let t = Instant::now();
    let (cubes, failures, first_failure) = check_middle_removal(&universe);
    entries.push(AuditEntry {
        claim: format!("removing the middle copy of each of {cubes} cubes preserves the graph; normalization is cube-free"),
        paper_ref: "cube-removal".into(),
        verdict: (failures == 0).into(),
        witness_or_counterexample: first_failure,
        elapsed_ms: t.elapsed().as_millis(),
    });

    let mut random_samples = 0;
    if options.extended {
        let t = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        let mut bad = None;
        for _ in 0..options.samples {
            let blocks = rng.gen_range(1..=5);
            let pw = random_perm_word(&mut rng, 4, blocks);
            if let Some(r) = lemma1_violations(&pw).first() {
                bad.get_or_insert_with(|| format!("{} cube {r}", pw.word().to_text()));
            }
        }
        random_samples = options.samples;
        entries.push(AuditEntry {
            claim: format!(
                "cubes in {} random permutational words with n = 4 and at most 5 blocks have period divisible by 4 (seed {})",
                options.samples, options.seed
            ),
            paper_ref: "cube-period".into(),
            verdict: bad.is_none().into(),
            witness_or_counterexample: bad,
            elapsed_ms: t.elapsed().as_millis(),
        });
    }

    Ok(AuditReport {
        entries,
        min_length_g_star: r.length,
        minimal_words: minimal.len(),
        minimal_words_all_contain_vvv: all_vvv,
        perm_rep_number_g_star: perm_number,
        two_block_reps: two.len(),
        three_block_reps: three.len(),
        three_block_reps_all_contain_square: !three.is_empty() && square_free.is_empty(),
        lemma1_words_checked: universe.len(),
        lemma1_violations: violations,
        removal_cubes_checked: cubes,
        removal_failures: failures,
        seed: options.extended.then_some(options.seed),
        random_samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_size() {
        assert_eq!(perm_universe(3, 4).len(), 6 + 36 + 216 + 1296);
    }

    #[test]
    fn random_words_are_permutational() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let pw = random_perm_word(&mut rng, 4, 3);
            assert!(crate::permutational::is_permutational(pw.letters(), 4));
        }
    }

    #[test]
    fn report_passes() {
        let report = audit_paper_theorems().unwrap();
        assert!(report.all_pass(), "{report:#?}");
        assert_eq!(report.min_length_g_star, 6);
        assert!(report.three_block_reps_all_contain_square);
        assert_eq!(report.lemma1_violations, 0);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["min_length_G_star"], 6);
        assert_eq!(json["entries"][0]["verdict"], "pass");
    }
}
