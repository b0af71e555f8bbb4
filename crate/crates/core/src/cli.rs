//! Command-line front end.
//!
//! Exit codes: 0 success or `true`, 1 verification `false`, 2 input error,
//! 3 resource cap or search bound exhausted.

use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::audit::{audit_with, AuditOptions};
use crate::automata::{figure1_disagreements, graph_language_with, LanguageOptions, DEFAULT_STATE_CAP};
use crate::error::Error;
use crate::graph::Graph;
use crate::permutational::{cube_free_normalize_logged, split_blocks};
use crate::search::{perm_rep_number, rep_number};
use crate::semantics::{check, decode};
use crate::words::{Alphabet, Degree, Word, WordFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable holding the default explored-state cap.
pub const CAP_ENV: &str = "REP11_STATE_CAP";

#[derive(Debug, Parser)]
#[command(name = "rep11", version, about = "1-11-representations of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WordInput {
    /// Read the word as whitespace-separated tokens even when every vertex
    /// name is a single character.
    #[arg(long)]
    pub tokens: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decode a word into the graph it represents.
    Decode {
        /// The word, a file containing it, or `-` for stdin.
        word: String,
        #[arg(long, num_args = 1.., required = true)]
        alphabet: Vec<String>,
        #[command(flatten)]
        input: WordInput,
    },
    /// Check whether a word represents a graph.
    Verify {
        graph: String,
        word: String,
        #[command(flatten)]
        input: WordInput,
    },
    /// Representation number with a lex-least witness.
    Repnum {
        graph: String,
        /// Count permutation blocks instead of letters.
        #[arg(long)]
        permutational: bool,
        /// Largest length (or block count) to search.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Remove cubes from a permutational word.
    Cubefree {
        word: String,
        #[arg(long, num_args = 1.., required = true)]
        alphabet: Vec<String>,
        #[command(flatten)]
        input: WordInput,
    },
    /// Build the automaton of a graph's representations.
    Dfa {
        /// Graph file; not needed with `--figure1`.
        graph: Option<String>,
        #[arg(long)]
        permutational: bool,
        #[arg(long)]
        minimize: bool,
        /// Leave out the vertex-coverage component.
        #[arg(long)]
        no_coverage: bool,
        #[arg(long, value_enum, default_value_t = Emit::Dot)]
        emit: Emit,
        #[arg(long, env = CAP_ENV, default_value_t = DEFAULT_STATE_CAP)]
        cap: usize,
        /// Compare the printed six-state pair automaton with the adjacency
        /// language on all words over {a, b, c} up to `--max-len`.
        #[arg(long)]
        figure1: bool,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// List squares or cubes as `(start,period)`.
    Detect {
        word: String,
        #[arg(long, conflicts_with = "cubes", required_unless_present = "cubes")]
        squares: bool,
        #[arg(long)]
        cubes: bool,
        /// Vertex names; inferred from the word when absent.
        #[arg(long, num_args = 1..)]
        alphabet: Option<Vec<String>>,
        #[command(flatten)]
        input: WordInput,
    },
    /// Run the exhaustive theorem audit and print a JSON report.
    Audit {
        /// Add random cube-period sampling at n = 4.
        #[arg(long)]
        extended: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Dot,
    Json,
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_resource() || matches!(e, Error::NotFound { .. }) {
        EXIT_RESOURCE
    } else {
        EXIT_INPUT
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// `-` reads stdin, an existing path reads the file, anything else is the
/// literal text.
fn read_arg(arg: &str, stdin: &mut dyn Read) -> Result<String, Error> {
    if arg == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Error::Parse {
            line: 0,
            message: format!("stdin: {e}"),
        })?;
        return Ok(s);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            message: format!("{arg}: {e}"),
        });
    }
    Ok(arg.to_string())
}

fn read_graph(arg: &str, stdin: &mut dyn Read) -> Result<Graph, Error> {
    if arg != "-" && !Path::new(arg).is_file() {
        return Err(Error::Parse {
            line: 0,
            message: format!("no such graph file `{arg}`"),
        });
    }
    Graph::parse(&read_arg(arg, stdin)?)
}

fn word_format(alphabet: &Alphabet, input: &WordInput) -> WordFormat {
    if !input.tokens && alphabet.is_compact() {
        WordFormat::Compact
    } else {
        WordFormat::Tokens
    }
}

fn parse_word(text: &str, alphabet: &Alphabet, input: &WordInput) -> Result<Word, Error> {
    Word::parse(text, alphabet, word_format(alphabet, input))
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    match command {
        Command::Decode { word, alphabet, input } => {
            let alphabet = Alphabet::new(alphabet)?;
            let w = parse_word(&read_arg(&word, stdin)?, &alphabet, &input)?;
            Ok(Outcome::ok(decode(&w, &alphabet)?.to_text()))
        }
        Command::Verify { graph, word, input } => {
            let g = read_graph(&graph, stdin)?;
            let w = parse_word(&read_arg(&word, stdin)?, g.vertices(), &input)?;
            let report = check(&g, &w);
            let mut out = format!("{}\n", report.holds);
            for m in &report.mismatches {
                let _ = writeln!(out, "{m}");
            }
            Ok(Outcome {
                code: if report.holds { EXIT_OK } else { EXIT_FALSE },
                stdout: out,
                stderr: String::new(),
            })
        }
        Command::Repnum {
            graph,
            permutational,
            max,
        } => {
            let g = read_graph(&graph, stdin)?;
            if permutational {
                let r = perm_rep_number(&g, max.unwrap_or(6))?;
                Ok(Outcome::ok(format!(
                    "{}\n{}\n{}\n",
                    r.blocks,
                    r.witness.word().to_text(),
                    r.witness.to_block_text()
                )))
            } else {
                let r = rep_number(&g, max.unwrap_or(4 * g.order()))?;
                Ok(Outcome::ok(format!("{}\n{}\n", r.length, r.witness.to_text())))
            }
        }
        Command::Cubefree { word, alphabet, input } => {
            let alphabet = Alphabet::new(alphabet)?;
            let w = parse_word(&read_arg(&word, stdin)?, &alphabet, &input)?;
            let pw = split_blocks(&w, &alphabet)?;
            let n = cube_free_normalize_logged(&pw);
            let mut out = format!("{}\n", n.word.word().to_text());
            for r in &n.removals {
                let _ = writeln!(
                    out,
                    "removed middle copy of cube {} -> length {}",
                    r.cube, r.length_after
                );
            }
            let _ = writeln!(out, "removals: {}", n.removals.len());
            Ok(Outcome::ok(out))
        }
        Command::Dfa {
            graph,
            permutational,
            minimize,
            no_coverage,
            emit,
            cap,
            figure1,
            max_len,
        } => {
            if figure1 {
                let abc = Alphabet::new(["a", "b", "c"])?;
                let d = figure1_disagreements("a", "b", &abc, max_len)?;
                let out = match emit {
                    Emit::Json => serde_json::to_string_pretty(&d).expect("serializable") + "\n",
                    Emit::Dot => {
                        let mut out = format!("disagreements up to length {max_len}: {}\n", d.len());
                        for x in &d {
                            let _ = writeln!(
                                out,
                                "{}\tprinted={}\tdefinition={}",
                                if x.word.is_empty() { "ε" } else { &x.word },
                                x.printed_accepts,
                                x.definition_accepts
                            );
                        }
                        out
                    }
                };
                return Ok(Outcome::ok(out));
            }
            let graph = graph.ok_or_else(|| Error::Precondition("a graph file is required".into()))?;
            let g = read_graph(&graph, stdin)?;
            let lang = graph_language_with(
                &g,
                LanguageOptions {
                    coverage: !no_coverage,
                    permutational,
                    cap,
                },
            );
            let mut d = lang.materialize()?;
            if minimize {
                d = d.minimize();
            }
            Ok(Outcome::ok(match emit {
                Emit::Dot => d.to_dot(),
                Emit::Json => d.to_json() + "\n",
            }))
        }
        Command::Detect {
            word,
            squares,
            cubes: _,
            alphabet,
            input,
        } => {
            let text = read_arg(&word, stdin)?;
            let w = match alphabet {
                Some(a) => parse_word(&text, &Alphabet::new(a)?, &input)?,
                None if input.tokens || text.trim().contains(char::is_whitespace) => {
                    Word::parse_inferred(&text, WordFormat::Tokens)?
                }
                None => Word::parse_inferred(&text, WordFormat::Compact)?,
            };
            let degree = if squares { Degree::Square } else { Degree::Cube };
            let mut out = String::new();
            for r in w.find_repetitions(degree) {
                let _ = writeln!(out, "{r}");
            }
            Ok(Outcome::ok(out))
        }
        Command::Audit {
            extended,
            seed,
            samples,
        } => {
            let report = audit_with(AuditOptions {
                extended,
                seed,
                samples,
            })?;
            let out = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
            Ok(Outcome {
                code: if report.all_pass() { EXIT_OK } else { EXIT_FALSE },
                stdout: out,
                stderr: String::new(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let mut empty: &[u8] = &[];
        run(std::iter::once("rep11").chain(args.iter().copied()), &mut empty)
    }

    #[test]
    fn decode_literal_words() {
        let out = run_args(&["decode", "123vvv", "--alphabet", "1", "2", "3", "v"]);
        assert_eq!(out.code, EXIT_OK);
        assert_eq!(out.stdout, "vertices: 1 2 3 v\nedge: 1 2\nedge: 1 3\nedge: 2 3\n");
        let out = run_args(&["decode", "1212", "--alphabet", "1", "2"]);
        assert_eq!(out.stdout, "vertices: 1 2\nedge: 1 2\n");
        let out = run_args(&["decode", "123", "--alphabet", "1", "2", "3", "v"]);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("`v`"));
    }

    #[test]
    fn decode_from_stdin_with_tokens() {
        let mut input: &[u8] = b"x1 x2 x1 x2\n";
        let out = run(["rep11", "decode", "-", "--alphabet", "x1", "x2"], &mut input);
        assert_eq!(out.stdout, "vertices: x1 x2\nedge: x1 x2\n");
    }

    #[test]
    fn detect_squares() {
        let out = run_args(&["detect", "123v123v123", "--squares"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.lines().any(|l| l == "(0,4)"));
        let out = run_args(&["detect", "abcacb", "--squares"]);
        assert_eq!(out.stdout, "");
        let out = run_args(&["detect", "vvv", "--cubes"]);
        assert_eq!(out.stdout, "(0,1)\n");
        assert_eq!(run_args(&["detect", "vvv"]).code, EXIT_INPUT);
    }

    #[test]
    fn cubefree_command() {
        let out = run_args(&["cubefree", "123v123v123v", "--alphabet", "1", "2", "3", "v"]);
        assert_eq!(out.code, EXIT_OK);
        assert_eq!(out.stdout.lines().next(), Some("123v123v"));
        assert!(out.stdout.ends_with("removals: 1\n"));
        let out = run_args(&["cubefree", "123vv123123v", "--alphabet", "1", "2", "3", "v"]);
        assert_eq!(out.stdout, "123vv123123v\nremovals: 0\n");
        let out = run_args(&["cubefree", "123vvv", "--alphabet", "1", "2", "3", "v"]);
        assert_eq!(out.code, EXIT_INPUT);
    }

    #[test]
    fn figure1_diagnostic() {
        let out = run_args(&["dfa", "--figure1", "--max-len", "4"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.lines().any(|l| l.starts_with("abab\tprinted=false\tdefinition=true")));
    }

    #[test]
    fn missing_graph_file_is_input_error() {
        let out = run_args(&["verify", "/nonexistent/graph.txt", "12"]);
        assert_eq!(out.code, EXIT_INPUT);
        let out = run_args(&["dfa", "--emit", "dot"]);
        assert_eq!(out.code, EXIT_INPUT);
    }
}
