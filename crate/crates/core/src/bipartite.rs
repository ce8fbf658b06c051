//! Bipartite pattern matching on string-labeled graphs.
//!
//! Given a pattern `P` of length `m` and a bipartite graph whose nodes carry
//! string labels, report every edge `(u, v)` and split `P = s · p` with `s` a
//! nonempty suffix of `label(u)` and `p` a nonempty prefix of `label(v)`.
//!
//! Every node is scanned once with a KMP automaton: `a(u)` is the longest
//! suffix of `label(u)` that is a prefix of `P`, and `b(v)` the longest prefix
//! of `label(v)` that is a suffix of `P`. An edge then reduces to one
//! prefix-suffix query on `P` with `i = a - 1` and `j = m - b`: each occurrence
//! of `P` at position `q` of `P[0..a) · P[m-b..m)` is the split `a - q`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::kmp::{
    longest_prefix_counted, longest_suffix_counted, Direction, KmpAutomaton, ScanStats,
};
use crate::oracle::SplitRecord;
use crate::prefsuf::{PrefSufIndex, QueryStats};
use crate::progression::Progression;
use crate::text::Text;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub id: String,
    pub label: Text,
}

/// Node sets `U` and `V` with nonempty labels, and edges from `U` to `V`.
#[derive(Debug, Clone, Default)]
pub struct BipartiteGraph {
    u_nodes: Vec<Node>,
    v_nodes: Vec<Node>,
    edges: Vec<(usize, usize)>,
    u_ids: HashMap<String, usize>,
    v_ids: HashMap<String, usize>,
}

impl BipartiteGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_u(&mut self, id: impl Into<String>, label: impl Into<Text>) -> Result<usize> {
        add_node(
            &mut self.u_nodes,
            &mut self.u_ids,
            'U',
            id.into(),
            label.into(),
        )
    }

    pub fn add_v(&mut self, id: impl Into<String>, label: impl Into<Text>) -> Result<usize> {
        add_node(
            &mut self.v_nodes,
            &mut self.v_ids,
            'V',
            id.into(),
            label.into(),
        )
    }

    /// Adds an edge between node indices. Parallel edges are kept.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        if u >= self.u_nodes.len() {
            return Err(Error::BadEndpoint {
                side: 'U',
                index: u,
            });
        }
        if v >= self.v_nodes.len() {
            return Err(Error::BadEndpoint {
                side: 'V',
                index: v,
            });
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    pub fn u_node(&self, u: usize) -> &Node {
        &self.u_nodes[u]
    }

    pub fn v_node(&self, v: usize) -> &Node {
        &self.v_nodes[v]
    }

    pub fn u_nodes(&self) -> &[Node] {
        &self.u_nodes
    }

    pub fn v_nodes(&self) -> &[Node] {
        &self.v_nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn u_index(&self, id: &str) -> Option<usize> {
        self.u_ids.get(id).copied()
    }

    pub fn v_index(&self, id: &str) -> Option<usize> {
        self.v_ids.get(id).copied()
    }

    /// Total label length over `U`.
    pub fn n_u(&self) -> usize {
        self.u_nodes.iter().map(|n| n.label.len()).sum()
    }

    /// Total label length over `V`.
    pub fn n_v(&self) -> usize {
        self.v_nodes.iter().map(|n| n.label.len()).sum()
    }

    /// `N = N_U + N_V`.
    pub fn total_label_len(&self) -> usize {
        self.n_u() + self.n_v()
    }

    /// Parses the tab-separated record format:
    ///
    /// ```text
    /// U<TAB>id<TAB>label
    /// V<TAB>id<TAB>label
    /// E<TAB>u-id<TAB>v-id
    /// ```
    ///
    /// Blank lines are ignored. Line numbers in errors are 1-based.
    pub fn parse(input: &[u8]) -> Result<Self> {
        let mut g = BipartiteGraph::new();
        for (k, raw) in input.split(|&c| c == b'\n').enumerate() {
            let line = k + 1;
            let raw = raw.strip_suffix(b"\r").unwrap_or(raw);
            if raw.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line, message };
            let fields: Vec<&[u8]> = raw.split(|&c| c == b'\t').collect();
            if fields.len() != 3 {
                return Err(err(format!(
                    "expected 3 tab-separated fields, found {}",
                    fields.len()
                )));
            }
            let id = |f: &[u8]| {
                std::str::from_utf8(f)
                    .map(str::to_owned)
                    .map_err(|_| err("node id is not valid UTF-8".into()))
            };
            let relocate = |e: Error| match e {
                Error::Parse { .. } => e,
                other => err(other.to_string()),
            };
            match fields[0] {
                b"U" => {
                    g.add_u(id(fields[1])?, fields[2]).map_err(relocate)?;
                }
                b"V" => {
                    g.add_v(id(fields[1])?, fields[2]).map_err(relocate)?;
                }
                b"E" => {
                    let (uid, vid) = (id(fields[1])?, id(fields[2])?);
                    let u = g
                        .u_index(&uid)
                        .ok_or_else(|| err(format!("unknown U node {uid:?}")))?;
                    let v = g
                        .v_index(&vid)
                        .ok_or_else(|| err(format!("unknown V node {vid:?}")))?;
                    g.add_edge(u, v)?;
                }
                other => {
                    return Err(err(format!(
                        "unknown record type {:?}",
                        String::from_utf8_lossy(other)
                    )))
                }
            }
        }
        Ok(g)
    }
}

fn add_node(
    nodes: &mut Vec<Node>,
    ids: &mut HashMap<String, usize>,
    side: char,
    id: String,
    label: Text,
) -> Result<usize> {
    if label.is_empty() {
        return Err(Error::EmptyLabel { id });
    }
    if ids.contains_key(&id) {
        return Err(Error::DuplicateId { side, id });
    }
    ids.insert(id.clone(), nodes.len());
    nodes.push(Node { id, label });
    Ok(nodes.len() - 1)
}

/// All spanning splits across one edge.
///
/// `splits` is ascending over split lengths `|s|` in `1..m`; the leftmost
/// occurrence of the pattern corresponds to the largest split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeMatch {
    pub edge: usize,
    pub u: usize,
    pub v: usize,
    pub splits: Progression,
}

impl EdgeMatch {
    pub fn records(&self) -> impl Iterator<Item = SplitRecord> + '_ {
        self.splits.iter().map(move |split| SplitRecord {
            edge: self.edge,
            u: self.u,
            v: self.v,
            split,
        })
    }
}

/// Work counters for [`PatternMatcher::match_graph_counted`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MatchStats {
    pub scan: ScanStats,
    pub query: QueryStats,
    pub edges: u64,
    /// Edges settled without a query because `a = 0` or `b = 0`.
    pub edges_without_overlap: u64,
}

/// Preprocessed pattern: both KMP automata and the prefix-suffix index.
#[derive(Debug, Clone)]
pub struct PatternMatcher {
    forward: KmpAutomaton,
    reverse: KmpAutomaton,
    index: PrefSufIndex,
}

impl PatternMatcher {
    pub fn new(pattern: impl Into<Text>) -> Result<Self> {
        let pattern = pattern.into();
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(PatternMatcher {
            forward: KmpAutomaton::build(&pattern, Direction::Forward)?,
            reverse: KmpAutomaton::build(&pattern, Direction::Reverse)?,
            index: PrefSufIndex::build(pattern)?,
        })
    }

    pub fn pattern(&self) -> &Text {
        self.index.text()
    }

    pub fn index(&self) -> &PrefSufIndex {
        &self.index
    }

    pub fn match_graph(&self, g: &BipartiteGraph) -> Vec<EdgeMatch> {
        self.match_graph_counted(g, &mut MatchStats::default())
    }

    pub fn match_graph_counted(
        &self,
        g: &BipartiteGraph,
        stats: &mut MatchStats,
    ) -> Vec<EdgeMatch> {
        let (a, b) = self.node_values(g, &mut stats.scan);
        self.match_edges(g, &a, &b, 0..g.edges().len(), stats)
    }

    /// Splits the edge list into `threads` contiguous chunks answered
    /// concurrently; output stays in edge order.
    pub fn match_graph_parallel(&self, g: &BipartiteGraph, threads: usize) -> Vec<EdgeMatch> {
        let mut scan = ScanStats::default();
        let (a, b) = self.node_values(g, &mut scan);
        let e = g.edges().len();
        let chunk = e.div_ceil(threads.max(1)).max(1);
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..e)
                .step_by(chunk)
                .map(|lo| {
                    let (a, b) = (&a, &b);
                    s.spawn(move || {
                        self.match_edges(
                            g,
                            a,
                            b,
                            lo..(lo + chunk).min(e),
                            &mut MatchStats::default(),
                        )
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().unwrap())
                .collect()
        })
    }

    /// `a(u)` for every U node and `b(v)` for every V node.
    pub fn node_values(
        &self,
        g: &BipartiteGraph,
        scan: &mut ScanStats,
    ) -> (Vec<usize>, Vec<usize>) {
        let a = g
            .u_nodes()
            .iter()
            .map(|n| longest_prefix_counted(&self.forward, &n.label, scan).unwrap())
            .collect();
        let b = g
            .v_nodes()
            .iter()
            .map(|n| longest_suffix_counted(&self.reverse, &n.label, scan).unwrap())
            .collect();
        (a, b)
    }

    fn match_edges(
        &self,
        g: &BipartiteGraph,
        a: &[usize],
        b: &[usize],
        range: std::ops::Range<usize>,
        stats: &mut MatchStats,
    ) -> Vec<EdgeMatch> {
        let mut out = Vec::new();
        for edge in range {
            let (u, v) = g.edges()[edge];
            stats.edges += 1;
            let splits = self.splits(a[u], b[v], stats);
            if !splits.is_empty() {
                out.push(EdgeMatch { edge, u, v, splits });
            }
        }
        out
    }

    /// Split lengths for one edge with node values `a` and `b`.
    #[inline]
    pub fn splits(&self, a: usize, b: usize, stats: &mut MatchStats) -> Progression {
        let m = self.index.len();
        if a == 0 || b == 0 {
            stats.edges_without_overlap += 1;
            return Progression::EMPTY;
        }
        // a + b < m gives j > i + 1 and a + b = m gives j = i + 1; the query
        // answers both without touching the LCE index.
        let (i, j) = (a - 1, m - b);
        let (positions, _) = self
            .index
            .query_counted(i, j, &mut stats.query)
            .expect("a and b are at most m");
        // Splits 1..m correspond to positions a+1-m ..= a-1.
        positions.clip((a + 1).saturating_sub(m), a - 1).reflect(a)
    }
}

/// Preprocesses `pattern` and matches every edge of `g`.
pub fn match_all(g: &BipartiteGraph, pattern: &[u8]) -> Result<Vec<EdgeMatch>> {
    Ok(PatternMatcher::new(pattern)?.match_graph(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_bipartite;
    use proptest::prelude::*;

    fn one_edge(u: &str, v: &str) -> BipartiteGraph {
        let mut g = BipartiteGraph::new();
        g.add_u("u1", u).unwrap();
        g.add_v("v1", v).unwrap();
        g.add_edge(0, 0).unwrap();
        g
    }

    #[test]
    fn examples() {
        let m = match_all(&one_edge("xaab", "abz"), b"abab").unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].splits.expand(), vec![2]);

        let m = match_all(&one_edge("baaa", "aaab"), b"aaaa").unwrap();
        assert_eq!(m[0].splits, Progression::new(1, 1, 3));

        assert!(match_all(&one_edge("zz", "zz"), b"ab").unwrap().is_empty());
    }

    #[test]
    fn two_node_variation_graph_fixture() {
        // ACTA read across two adjacent nodes as "AC" + "TA".
        let mut g = BipartiteGraph::new();
        g.add_u("1", "GGAC").unwrap();
        g.add_u("2", "GGAT").unwrap();
        g.add_v("3", "TAGC").unwrap();
        g.add_v("4", "CAGC").unwrap();
        for (u, v) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            g.add_edge(u, v).unwrap();
        }
        let m = match_all(&g, b"ACTA").unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(
            (m[0].u, m[0].v, m[0].splits),
            (0, 0, Progression::singleton(2))
        );
    }

    #[test]
    fn whole_pattern_inside_a_label_is_not_spanning() {
        // a = m and b = m: only the strictly spanning split survives.
        let m = match_all(&one_edge("xab", "abx"), b"ab").unwrap();
        assert!(m.is_empty());
        let m = match_all(&one_edge("aa", "aa"), b"aa").unwrap();
        assert_eq!(m[0].splits, Progression::singleton(1));
    }

    #[test]
    fn graph_validation() {
        let mut g = BipartiteGraph::new();
        assert!(matches!(g.add_u("x", ""), Err(Error::EmptyLabel { .. })));
        g.add_u("x", "a").unwrap();
        assert!(matches!(
            g.add_u("x", "b"),
            Err(Error::DuplicateId { side: 'U', .. })
        ));
        g.add_v("x", "a").unwrap();
        assert!(matches!(
            g.add_edge(1, 0),
            Err(Error::BadEndpoint { side: 'U', .. })
        ));
        assert!(matches!(
            g.add_edge(0, 1),
            Err(Error::BadEndpoint { side: 'V', .. })
        ));
        assert_eq!(match_all(&g, b"").unwrap_err(), Error::EmptyPattern);
    }

    #[test]
    fn parse_format() {
        let g = BipartiteGraph::parse(b"U\tu1\tbaaa\nV\tv1\taaab\n\nE\tu1\tv1\n").unwrap();
        assert_eq!(g.u_nodes().len(), 1);
        assert_eq!(g.edges(), &[(0, 0)]);
        assert_eq!(g.total_label_len(), 8);

        let line_of = |input: &[u8]| match BipartiteGraph::parse(input) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line_of(b"U\tu1\tab\nE\tu1\tv9\n"), 2);
        assert_eq!(line_of(b"U\tu1\tab\nU\tu1\tcd\n"), 2);
        assert_eq!(line_of(b"U\tu1\n"), 1);
        assert_eq!(line_of(b"U\tu1\tab\nX\ta\tb\n"), 2);
        assert_eq!(line_of(b"\nV\tv1\t\n"), 2);
    }

    #[test]
    fn counters() {
        let mut g = BipartiteGraph::new();
        g.add_u("u", "baaa").unwrap();
        g.add_u("w", "zzz").unwrap();
        g.add_v("v", "aaab").unwrap();
        g.add_edge(0, 0).unwrap();
        g.add_edge(1, 0).unwrap();
        let matcher = PatternMatcher::new("aaaa").unwrap();
        let mut stats = MatchStats::default();
        matcher.match_graph_counted(&g, &mut stats);
        assert_eq!(stats.scan.letters_fed, g.total_label_len() as u64);
        assert_eq!(stats.edges, 2);
        assert_eq!(stats.query.queries + stats.edges_without_overlap, 2);
        assert_eq!(stats.query.queries, 1);
    }

    fn graph_and_pattern() -> impl Strategy<Value = (BipartiteGraph, Vec<u8>)> {
        let label = || prop::collection::vec(prop::sample::select(b"ab".to_vec()), 1..=6);
        (
            prop::collection::vec(label(), 1..=8),
            prop::collection::vec(label(), 1..=8),
            prop::collection::vec((0usize..8, 0usize..8), 0..20),
            prop::collection::vec(prop::sample::select(b"ab".to_vec()), 1..=8),
        )
            .prop_map(|(us, vs, es, p)| {
                let mut g = BipartiteGraph::new();
                for (k, l) in us.iter().enumerate() {
                    g.add_u(format!("u{k}"), l.clone()).unwrap();
                }
                for (k, l) in vs.iter().enumerate() {
                    g.add_v(format!("v{k}"), l.clone()).unwrap();
                }
                for (u, v) in es {
                    g.add_edge(u % us.len(), v % vs.len()).unwrap();
                }
                (g, p)
            })
    }

    proptest! {
        #[test]
        fn agrees_with_oracle((g, p) in graph_and_pattern()) {
            let matcher = PatternMatcher::new(p.clone()).unwrap();
            let found: Vec<SplitRecord> = matcher.match_graph(&g).iter().flat_map(|m| m.records()).collect::<Vec<_>>();
            let mut sorted = found.clone();
            sorted.sort();
            prop_assert_eq!(sorted, naive_bipartite(&g, &p).unwrap());
            for r in &found {
                let (left, right) = (&g.u_node(r.u).label, &g.v_node(r.v).label);
                prop_assert!(left.ends_with(&p[..r.split]) && right.starts_with(&p[r.split..]));
            }
            let parallel = matcher.match_graph_parallel(&g, 3);
            prop_assert_eq!(parallel, matcher.match_graph(&g));
        }
    }
}
