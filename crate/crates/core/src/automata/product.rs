//! Intersections of component automata, explored on the fly.
//!
//! A product state is the tuple of component states. Tuples are only
//! materialized when a query needs them, and every exploring query counts
//! distinct tuples against a cap so that blowups surface as
//! [`Error::CapExceeded`] instead of exhausting memory.

use std::collections::{HashMap, VecDeque};

use crate::automata::builders::{coverage_dfa, pair_adjacent_letters, perm_concat_dfa};
use crate::automata::dfa::{Dfa, StateId};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::words::{Alphabet, Letter, Word};

/// Default bound on explored product states.
pub const DEFAULT_STATE_CAP: usize = 5_000_000;

/// Whether a component contributes its language or its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    Accept,
    Complement,
}

#[derive(Debug, Clone)]
pub struct Component {
    pub label: String,
    pub dfa: Dfa,
    pub polarity: Polarity,
}

impl Component {
    pub fn accepts(&self, q: StateId) -> bool {
        self.dfa.is_accepting(q) == (self.polarity == Polarity::Accept)
    }
}

/// Options for [`graph_language_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LanguageOptions {
    /// Intersect with the language of words containing every vertex.
    pub coverage: bool,
    /// Intersect with the concatenations of permutations of the vertices.
    pub permutational: bool,
    pub cap: usize,
}

impl Default for LanguageOptions {
    fn default() -> Self {
        Self {
            coverage: true,
            permutational: false,
            cap: DEFAULT_STATE_CAP,
        }
    }
}

/// Lazy intersection of component automata over a common alphabet.
#[derive(Debug, Clone)]
pub struct LazyProduct {
    alphabet: Alphabet,
    components: Vec<Component>,
    cap: usize,
}

type Tuple = Box<[u32]>;

impl LazyProduct {
    pub fn new(alphabet: Alphabet, components: Vec<Component>, cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::Precondition("state cap must be positive".into()));
        }
        if let Some(c) = components.iter().find(|c| *c.dfa.alphabet() != alphabet) {
            return Err(Error::Precondition(format!(
                "component `{}` is over a different alphabet",
                c.label
            )));
        }
        Ok(Self {
            alphabet,
            components,
            cap,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap.max(1);
        self
    }

    fn start(&self) -> Tuple {
        self.components.iter().map(|c| c.dfa.start() as u32).collect()
    }

    fn step(&self, state: &[u32], a: Letter) -> Tuple {
        self.components
            .iter()
            .zip(state)
            .map(|(c, &q)| c.dfa.next(q as StateId, a) as u32)
            .collect()
    }

    fn accepting(&self, state: &[u32]) -> bool {
        self.components
            .iter()
            .zip(state)
            .all(|(c, &q)| c.accepts(q as StateId))
    }

    /// Runs the word through every component; nothing is materialized.
    pub fn member(&self, w: &Word) -> Result<bool> {
        let w = w.rebase(&self.alphabet)?;
        Ok(self.accepts_letters(w.letters()))
    }

    pub fn accepts_letters(&self, letters: &[Letter]) -> bool {
        self.components.iter().all(|c| c.accepts(c.dfa.run(letters)))
    }

    /// Breadth-first exploration calling `visit(id, tuple)` on each newly
    /// discovered tuple; stops early when `visit` returns true.
    fn bfs<F>(&self, mut visit: F) -> Result<Explored>
    where
        F: FnMut(usize, &[u32]) -> bool,
    {
        let k = self.alphabet.len();
        let mut ids: HashMap<Tuple, usize> = HashMap::new();
        let mut tuples: Vec<Tuple> = Vec::new();
        let mut parent: Vec<Option<(usize, Letter)>> = Vec::new();
        let mut delta: Vec<usize> = Vec::new();
        let start = self.start();
        ids.insert(start.clone(), 0);
        tuples.push(start);
        parent.push(None);
        if visit(0, &tuples[0]) {
            return Ok(Explored {
                parent,
                tuples,
                delta,
                found: Some(0),
            });
        }
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for a in 0..k {
                let next = self.step(&tuples[i], a);
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = tuples.len();
                        if id >= self.cap {
                            return Err(Error::CapExceeded {
                                cap: self.cap,
                                frontier: queue.len() + 1,
                            });
                        }
                        ids.insert(next.clone(), id);
                        tuples.push(next);
                        parent.push(Some((i, a)));
                        if visit(id, &tuples[id]) {
                            return Ok(Explored {
                                parent,
                                tuples,
                                delta,
                                found: Some(id),
                            });
                        }
                        queue.push_back(id);
                        id
                    }
                };
                delta.push(id);
            }
        }
        Ok(Explored {
            parent,
            tuples,
            delta,
            found: None,
        })
    }

    /// A shortest accepted word, lexicographically least in alphabet order
    /// among the shortest; `None` when the language is empty.
    pub fn shortest_accepted(&self) -> Result<Option<Word>> {
        let explored = self.bfs(|_, t| self.accepting(t))?;
        Ok(explored.found.map(|id| {
            let mut letters = Vec::new();
            let mut cur = id;
            while let Some((p, a)) = explored.parent[cur] {
                letters.push(a);
                cur = p;
            }
            letters.reverse();
            Word::from_letters_unchecked(self.alphabet.clone(), letters)
        }))
    }

    pub fn is_empty(&self) -> Result<bool> {
        Ok(self.shortest_accepted()?.is_none())
    }

    /// Number of reachable product states.
    pub fn reachable_states(&self) -> Result<usize> {
        Ok(self.bfs(|_, _| false)?.tuples.len())
    }

    /// The explicit reachable product, states numbered in discovery order.
    pub fn materialize(&self) -> Result<Dfa> {
        let explored = self.bfs(|_, _| false)?;
        let accepting = explored.tuples.iter().map(|t| self.accepting(t)).collect();
        Dfa::new(self.alphabet.clone(), 0, accepting, explored.delta)
    }

    /// Every accepted word of length at most `max_len`, ordered by length
    /// and then lexicographically in alphabet order.
    pub fn enumerate_accepted(&self, max_len: usize) -> Result<Vec<Word>> {
        let distances: Vec<Vec<Option<usize>>> = self
            .components
            .iter()
            .map(|c| match c.polarity {
                Polarity::Accept => c.dfa.distance_to_accept(),
                Polarity::Complement => c.dfa.complement().distance_to_accept(),
            })
            .collect();
        let mut out = Vec::new();
        let mut visited = 0usize;
        let mut path = Vec::with_capacity(max_len);
        for len in 0..=max_len {
            let start = self.start();
            self.enumerate_rec(&start, len, &distances, &mut path, &mut out, &mut visited)?;
        }
        Ok(out)
    }

    fn enumerate_rec(
        &self,
        state: &[u32],
        remaining: usize,
        distances: &[Vec<Option<usize>>],
        path: &mut Vec<Letter>,
        out: &mut Vec<Word>,
        visited: &mut usize,
    ) -> Result<()> {
        *visited += 1;
        if *visited > self.cap {
            return Err(Error::CapExceeded {
                cap: self.cap,
                frontier: path.len(),
            });
        }
        // A component that needs more letters than remain cannot accept.
        let hopeless = distances
            .iter()
            .zip(state)
            .any(|(d, &q)| d[q as usize].map_or(true, |d| d > remaining));
        if hopeless {
            return Ok(());
        }
        if remaining == 0 {
            if self.accepting(state) {
                out.push(Word::from_letters_unchecked(self.alphabet.clone(), path.clone()));
            }
            return Ok(());
        }
        for a in 0..self.alphabet.len() {
            let next = self.step(state, a);
            path.push(a);
            self.enumerate_rec(&next, remaining - 1, distances, path, out, visited)?;
            path.pop();
        }
        Ok(())
    }
}

struct Explored {
    parent: Vec<Option<(usize, Letter)>>,
    tuples: Vec<Tuple>,
    delta: Vec<usize>,
    found: Option<usize>,
}

/// All 1-11-representations of `g`: adjacency automata for edges,
/// complemented ones for non-edges, and vertex coverage.
pub fn graph_language(g: &Graph) -> LazyProduct {
    graph_language_with(g, LanguageOptions::default())
}

/// The permutational 1-11-representations of `g`.
pub fn permutational_language(g: &Graph) -> LazyProduct {
    graph_language_with(
        g,
        LanguageOptions {
            permutational: true,
            ..LanguageOptions::default()
        },
    )
}

pub fn graph_language_with(g: &Graph, options: LanguageOptions) -> LazyProduct {
    let alphabet = g.vertices().clone();
    let mut components = Vec::new();
    for (x, y) in g.pairs() {
        let adjacent = g.is_adjacent(x, y);
        components.push(Component {
            label: format!(
                "{}({},{})",
                if adjacent { "adjacent" } else { "non-adjacent" },
                alphabet.token(x),
                alphabet.token(y)
            ),
            dfa: pair_adjacent_letters(x, y, &alphabet),
            polarity: if adjacent {
                Polarity::Accept
            } else {
                Polarity::Complement
            },
        });
    }
    if options.coverage {
        components.push(Component {
            label: "coverage".into(),
            dfa: coverage_dfa(&alphabet),
            polarity: Polarity::Accept,
        });
    }
    if options.permutational {
        components.push(Component {
            label: "permutations".into(),
            dfa: perm_concat_dfa(&alphabet),
            polarity: Polarity::Accept,
        });
    }
    LazyProduct::new(alphabet, components, options.cap.max(1)).expect("components share the graph's alphabet")
}
