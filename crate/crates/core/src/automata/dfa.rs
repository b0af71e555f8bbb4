use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

pub type StateId = usize;

/// A complete deterministic finite automaton over an alphabet of vertex
/// tokens. Transitions are stored row-major: `delta[state * k + letter]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    start: StateId,
    accepting: Vec<bool>,
    delta: Vec<StateId>,
}

impl Dfa {
    pub fn new(alphabet: Alphabet, start: StateId, accepting: Vec<bool>, delta: Vec<StateId>) -> Result<Self> {
        let states = accepting.len();
        if start >= states {
            return Err(Error::InvalidDfa(format!("start state {start} out of range")));
        }
        if delta.len() != states * alphabet.len() {
            return Err(Error::InvalidDfa(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                states * alphabet.len()
            )));
        }
        if let Some(&bad) = delta.iter().find(|&&q| q >= states) {
            return Err(Error::InvalidDfa(format!("transition target {bad} out of range")));
        }
        Ok(Self {
            alphabet,
            start,
            accepting,
            delta,
        })
    }

    /// Builds the reachable part of an implicitly given automaton. States
    /// are numbered in breadth-first discovery order, letters taken in
    /// alphabet order.
    pub fn explore<S, F, A>(alphabet: Alphabet, start: S, step: F, accepts: A) -> Self
    where
        S: Clone + Eq + Hash,
        F: Fn(&S, Letter) -> S,
        A: Fn(&S) -> bool,
    {
        let k = alphabet.len();
        let mut ids: HashMap<S, StateId> = HashMap::new();
        let mut order = vec![start.clone()];
        ids.insert(start, 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < order.len() {
            for a in 0..k {
                let next = step(&order[i], a);
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = order.len();
                        ids.insert(next.clone(), id);
                        order.push(next);
                        id
                    }
                };
                delta.push(id);
            }
            i += 1;
        }
        let accepting = order.iter().map(accepts).collect();
        Self {
            alphabet,
            start: 0,
            accepting,
            delta,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.state_count()).filter(|&q| self.accepting[q])
    }

    #[inline]
    pub fn next(&self, q: StateId, a: Letter) -> StateId {
        self.delta[q * self.alphabet.len() + a]
    }

    pub fn run(&self, letters: &[Letter]) -> StateId {
        letters.iter().fold(self.start, |q, &a| self.next(q, a))
    }

    pub fn accepts_letters(&self, letters: &[Letter]) -> bool {
        self.accepting[self.run(letters)]
    }

    /// Membership of a word whose tokens belong to this alphabet.
    pub fn member(&self, w: &Word) -> Result<bool> {
        Ok(self.accepts_letters(w.rebase(&self.alphabet)?.letters()))
    }

    /// Same automaton with the accepting set flipped.
    pub fn complement(&self) -> Dfa {
        Dfa {
            accepting: self.accepting.iter().map(|&a| !a).collect(),
            ..self.clone()
        }
    }

    /// For each state, the fewest letters needed to reach an accepting
    /// state, or `None` if no accepting state is reachable.
    pub fn distance_to_accept(&self) -> Vec<Option<usize>> {
        let n = self.state_count();
        let k = self.alphabet.len();
        let mut reverse = vec![Vec::new(); n];
        for q in 0..n {
            for a in 0..k {
                reverse[self.next(q, a)].push(q);
            }
        }
        let mut dist = vec![None; n];
        let mut queue = VecDeque::new();
        for q in self.accepting_states() {
            dist[q] = Some(0);
            queue.push_back(q);
        }
        while let Some(q) = queue.pop_front() {
            let d = dist[q].unwrap() + 1;
            for &p in &reverse[q] {
                if dist[p].is_none() {
                    dist[p] = Some(d);
                    queue.push_back(p);
                }
            }
        }
        dist
    }

    /// Reachable part renumbered in breadth-first order from the start.
    pub fn canonical(&self) -> Dfa {
        Dfa::explore(
            self.alphabet.clone(),
            self.start,
            |&q, a| self.next(q, a),
            |&q| self.accepting[q],
        )
    }

    /// The minimal complete automaton for the same language, by Moore
    /// partition refinement on the reachable states.
    pub fn minimize(&self) -> Dfa {
        let reach = self.canonical();
        let n = reach.state_count();
        let k = reach.alphabet.len();
        let mut class: Vec<usize> = reach.accepting.iter().map(|&a| a as usize).collect();
        let mut classes = renumber(&mut class);
        loop {
            let mut signature_ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next_class = Vec::with_capacity(n);
            for q in 0..n {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[q]);
                sig.extend((0..k).map(|a| class[reach.next(q, a)]));
                let fresh = signature_ids.len();
                next_class.push(*signature_ids.entry(sig).or_insert(fresh));
            }
            let count = signature_ids.len();
            class = next_class;
            if count == classes {
                break;
            }
            classes = count;
        }
        let mut representative = vec![usize::MAX; classes];
        for (q, &c) in class.iter().enumerate().rev() {
            representative[c] = q;
        }
        Dfa::explore(
            reach.alphabet.clone(),
            class[reach.start],
            |&c, a| class[reach.next(representative[c], a)],
            |&c| reach.accepting[representative[c]],
        )
    }

    /// Graphviz rendering; edges between the same pair of states are merged
    /// into one edge labeled with all their letters.
    pub fn to_dot(&self) -> String {
        let k = self.alphabet.len();
        let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n  __start [shape=point];\n");
        let _ = writeln!(out, "  __start -> q{};", self.start);
        for q in 0..self.state_count() {
            if self.accepting[q] {
                let _ = writeln!(out, "  q{q} [peripheries=2];");
            } else {
                let _ = writeln!(out, "  q{q};");
            }
        }
        for q in 0..self.state_count() {
            let mut targets: Vec<(StateId, Vec<&str>)> = Vec::new();
            for a in 0..k {
                let t = self.next(q, a);
                match targets.iter_mut().find(|(x, _)| *x == t) {
                    Some((_, letters)) => letters.push(self.alphabet.token(a)),
                    None => targets.push((t, vec![self.alphabet.token(a)])),
                }
            }
            for (t, letters) in targets {
                let label = letters.join(",").replace('\\', "\\\\").replace('"', "\\\"");
                let _ = writeln!(out, "  q{q} -> q{t} [label=\"{label}\"];");
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let k = self.alphabet.len();
        let raw = DfaJson {
            states: (0..self.state_count()).collect(),
            alphabet: self.alphabet.tokens().to_vec(),
            start: self.start,
            accepting: self.accepting_states().collect(),
            transitions: (0..self.state_count())
                .flat_map(|q| (0..k).map(move |a| (q, a)))
                .map(|(q, a)| (q, self.alphabet.token(a).to_string(), self.next(q, a)))
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("dfa serializes")
    }

    pub fn from_json(text: &str) -> Result<Dfa> {
        let raw: DfaJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let n = raw.states.len();
        if raw.states.iter().enumerate().any(|(i, &s)| i != s) {
            return Err(Error::InvalidDfa("states must be numbered 0..n in order".into()));
        }
        let alphabet = Alphabet::new(raw.alphabet)?;
        let k = alphabet.len();
        let mut accepting = vec![false; n];
        for q in raw.accepting {
            *accepting
                .get_mut(q)
                .ok_or_else(|| Error::InvalidDfa(format!("accepting state {q} out of range")))? = true;
        }
        let mut delta = vec![None; n * k];
        for (q, token, t) in raw.transitions {
            let a = alphabet.letter(&token)?;
            if q >= n {
                return Err(Error::InvalidDfa(format!("source state {q} out of range")));
            }
            if delta[q * k + a].replace(t).is_some() {
                return Err(Error::InvalidDfa(format!("duplicate transition ({q}, {token})")));
            }
        }
        let delta = delta
            .into_iter()
            .enumerate()
            .map(|(i, t)| {
                t.ok_or_else(|| {
                    Error::InvalidDfa(format!(
                        "missing transition ({}, {})",
                        i / k.max(1),
                        alphabet.token(i % k.max(1))
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Dfa::new(alphabet, raw.start, accepting, delta)
    }
}

fn renumber(class: &mut [usize]) -> usize {
    let mut ids = HashMap::new();
    for c in class.iter_mut() {
        let fresh = ids.len();
        *c = *ids.entry(*c).or_insert(fresh);
    }
    ids.len()
}

impl std::fmt::Debug for Dfa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Dfa")
            .field("alphabet", &self.alphabet)
            .field("states", &self.state_count())
            .field("start", &self.start)
            .field("accepting", &self.accepting_states().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct DfaJson {
    states: Vec<StateId>,
    alphabet: Vec<String>,
    start: StateId,
    accepting: Vec<StateId>,
    transitions: Vec<(StateId, String, StateId)>,
}
