//! Finite simple undirected graphs over labeled vertices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter};

/// A simple undirected graph. Vertex declaration order is the canonical
/// order for every search in the crate.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Alphabet,
    adjacency: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

impl Graph {
    /// Graph with no edges on the given vertices.
    pub fn edgeless(vertices: Alphabet) -> Self {
        let n = vertices.len();
        Self {
            vertices,
            adjacency: vec![false; n * n],
        }
    }

    pub fn from_edges<V, S, E, A, B>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut g = Self::edgeless(Alphabet::new(vertices)?);
        for (a, b) in edges {
            let x = g.vertices.letter(a.as_ref())?;
            let y = g.vertices.letter(b.as_ref())?;
            g.add_edge(x, y)?;
        }
        Ok(g)
    }

    /// Complete graph on `1..=k`.
    pub fn complete(k: usize) -> Self {
        let mut g = Self::edgeless(Alphabet::numbered(k));
        for x in 0..k {
            for y in x + 1..k {
                g.set(x, y, true);
            }
        }
        g
    }

    /// Edgeless graph on `1..=k`.
    pub fn empty_graph(k: usize) -> Self {
        Self::edgeless(Alphabet::numbered(k))
    }

    /// A triangle on `1, 2, 3` plus an isolated vertex `v`: the smallest
    /// graph whose minimum-length representations all contain a cube.
    pub fn triangle_plus_isolated() -> Self {
        Self::from_edges(["1", "2", "3", "v"], [("1", "2"), ("1", "3"), ("2", "3")])
            .expect("static graph")
    }

    /// Disjoint union with no cross edges. Vertices of `other` whose names
    /// clash with `self` get `'` appended until unique.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut names: Vec<String> = self.vertices.tokens().to_vec();
        let offset = names.len();
        for t in other.vertices.tokens() {
            let mut name = t.clone();
            while names.contains(&name) || (other.vertices.index_of(&name).is_some() && name != *t) {
                name.push('\'');
            }
            names.push(name);
        }
        let mut g = Self::edgeless(Alphabet::new(names).expect("names made distinct"));
        for (x, y) in self.edges() {
            g.set(x, y, true);
        }
        for (x, y) in other.edges() {
            g.set(x + offset, y + offset, true);
        }
        g
    }

    pub fn vertices(&self) -> &Alphabet {
        &self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn add_edge(&mut self, x: Letter, y: Letter) -> Result<()> {
        if x == y {
            return Err(Error::SelfLoop(self.vertices.token(x).to_string()));
        }
        self.set(x, y, true);
        Ok(())
    }

    fn set(&mut self, x: Letter, y: Letter, on: bool) {
        let n = self.order();
        self.adjacency[x * n + y] = on;
        self.adjacency[y * n + x] = on;
    }

    pub fn is_adjacent(&self, x: Letter, y: Letter) -> bool {
        self.adjacency[x * self.order() + y]
    }

    /// Edges `(x, y)` with `x < y`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |x| (x + 1..n).filter(move |&y| self.is_adjacent(x, y)).map(move |y| (x, y)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// All unordered pairs `(x, y)` with `x < y`.
    pub fn pairs(&self) -> impl Iterator<Item = (Letter, Letter)> {
        let n = self.order();
        (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
    }

    /// Labeled equality: same vertex set and same edge set, ignoring
    /// declaration order.
    pub fn equals(&self, other: &Graph) -> bool {
        if self.order() != other.order() {
            return false;
        }
        let mut map = Vec::with_capacity(self.order());
        for t in self.vertices.tokens() {
            match other.vertices.index_of(t) {
                Some(i) => map.push(i),
                None => return false,
            }
        }
        self.pairs()
            .all(|(x, y)| self.is_adjacent(x, y) == other.is_adjacent(map[x], map[y]))
    }

    /// All labeled graphs on `1..=n`, ordered by edge bitmask over
    /// [`Graph::pairs`].
    pub fn all_labeled(n: usize) -> Vec<Graph> {
        let pairs: Vec<_> = Self::empty_graph(n).pairs().collect();
        (0u64..1 << pairs.len())
            .map(|mask| {
                let mut g = Self::empty_graph(n);
                for (i, &(x, y)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g.set(x, y, true);
                    }
                }
                g
            })
            .collect()
    }

    /// Parses the line format or, when the text starts with `{`, JSON.
    pub fn parse(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            return Self::from_json(text);
        }
        let mut graph: Option<Graph> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| parse_err(format!("expected `key: values`, got `{line}`")))?;
            match (key.trim(), graph.as_mut()) {
                ("vertices", None) => {
                    let g = Self::edgeless(
                        Alphabet::new(rest.split_whitespace()).map_err(|e| parse_err(e.to_string()))?,
                    );
                    graph = Some(g);
                }
                ("vertices", Some(_)) => {
                    return Err(parse_err("duplicate `vertices` line".into()));
                }
                ("edge", None) => {
                    return Err(parse_err("`edge` before `vertices`".into()));
                }
                ("edge", Some(g)) => {
                    let ends: Vec<&str> = rest.split_whitespace().collect();
                    if ends.len() != 2 {
                        return Err(parse_err(format!(
                            "edge needs exactly two endpoints, got {}",
                            ends.len()
                        )));
                    }
                    let x = g.vertices.letter(ends[0]).map_err(|e| parse_err(e.to_string()))?;
                    let y = g.vertices.letter(ends[1]).map_err(|e| parse_err(e.to_string()))?;
                    g.add_edge(x, y).map_err(|e| parse_err(e.to_string()))?;
                }
                (other, _) => return Err(parse_err(format!("unknown key `{other}`"))),
            }
        }
        graph.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `vertices` line".into(),
        })
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        Self::from_edges(raw.vertices, raw.edges.into_iter().map(|[a, b]| (a, b)))
    }

    /// The line format: `vertices: …` followed by one `edge: x y` per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices: {}\n", self.vertices.tokens().join(" "));
        for (x, y) in self.edges() {
            out.push_str(&format!(
                "edge: {} {}\n",
                self.vertices.token(x),
                self.vertices.token(y)
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let raw = GraphJson {
            vertices: self.vertices.tokens().to_vec(),
            edges: self
                .edges()
                .map(|(x, y)| [self.vertices.token(x).to_string(), self.vertices.token(y).to_string()])
                .collect(),
        };
        serde_json::to_string(&raw).expect("graph serializes")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(x, y)| format!("{}-{}", self.vertices.token(x), self.vertices.token(y)))
            .collect();
        write!(f, "Graph({:?}, [{}])", self.vertices, edges.join(", "))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.vertices().tokens(), &["1", "2", "3"]);
        assert_eq!(k3.edge_count(), 3);
        let e2 = Graph::empty_graph(2);
        assert_eq!(e2.order(), 2);
        assert_eq!(e2.edge_count(), 0);
    }

    #[test]
    fn union_builds_the_counterexample_graph() {
        let v = Graph::from_edges(["v"], Vec::<(&str, &str)>::new()).unwrap();
        let g = Graph::complete(3).disjoint_union(&v);
        assert!(g.equals(&Graph::triangle_plus_isolated()));

        // Name clash: the K1 vertex `1` is renamed.
        let h = Graph::complete(3).disjoint_union(&Graph::complete(1));
        assert_eq!(h.vertices().tokens(), &["1", "2", "3", "1'"]);
        assert_eq!(h.edge_count(), 3);
        assert!(!h.is_adjacent(0, 3));
    }

    #[test]
    fn parse_the_counterexample_graph() {
        let text = "vertices: 1 2 3 v\nedge: 1 2\nedge: 1 3\nedge: 2 3\n";
        assert!(Graph::parse(text).unwrap().equals(&Graph::triangle_plus_isolated()));
        let commented = "# G*\nvertices: 1 2 3 v # four\n\nedge: 2 3\nedge: 1 2\nedge: 3 1\n";
        assert!(Graph::parse(commented).unwrap().equals(&Graph::triangle_plus_isolated()));
    }

    #[test]
    fn equality_is_labeled() {
        let g = Graph::complete(3);
        assert!(g.equals(&g));
        assert!(!Graph::complete(3).equals(&Graph::empty_graph(3)));
        let reordered = Graph::from_edges(["3", "1", "2"], [("2", "1"), ("1", "3"), ("3", "2")]).unwrap();
        assert!(reordered.equals(&Graph::complete(3)));
        let relabeled = Graph::from_edges(["a", "b", "c"], [("a", "b"), ("a", "c"), ("b", "c")]).unwrap();
        assert!(!relabeled.equals(&Graph::complete(3)));
    }

    #[test]
    fn input_errors() {
        assert_eq!(
            Graph::from_edges(["1", "1"], Vec::<(&str, &str)>::new()).unwrap_err(),
            Error::DuplicateVertex("1".into())
        );
        assert_eq!(
            Graph::from_edges(["1", "2"], [("1", "3")]).unwrap_err(),
            Error::UnknownVertex("3".into())
        );
        assert_eq!(
            Graph::from_edges(["1"], [("1", "1")]).unwrap_err(),
            Error::SelfLoop("1".into())
        );
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = Graph::parse("vertices: 1 2\nedge: 1 2\nedge: 1 9\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = Graph::parse("edge: 1 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = Graph::parse("vertices: 1 2\nedge 1 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = Graph::parse("vertices: 1 2\nedge: 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        assert!(Graph::parse("# nothing\n").is_err());
    }

    #[test]
    fn json_format() {
        let g = Graph::triangle_plus_isolated();
        let json = g.to_json();
        assert_eq!(
            json,
            r#"{"vertices":["1","2","3","v"],"edges":[["1","2"],["1","3"],["2","3"]]}"#
        );
        assert_eq!(Graph::parse(&json).unwrap(), g);
    }

    #[test]
    fn all_labeled_counts() {
        assert_eq!(Graph::all_labeled(1).len(), 1);
        assert_eq!(Graph::all_labeled(2).len(), 2);
        assert_eq!(Graph::all_labeled(3).len(), 8);
        assert_eq!(Graph::all_labeled(4).len(), 64);
    }
}
