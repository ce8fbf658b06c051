//! Brute-force reference implementations.
//!
//! Everything here is quadratic and allocates freely. These functions are the
//! ground truth the indexes are checked against, so they must not share code
//! with them.

use crate::bipartite::BipartiteGraph;
use crate::error::{out_of_range, Error, Result};

/// All `q` with `y[q..q + |x|] == x`, ascending.
pub fn naive_occurrences(x: &[u8], y: &[u8]) -> Result<Vec<usize>> {
    if x.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if y.len() < x.len() {
        return Ok(Vec::new());
    }
    Ok(y.windows(x.len())
        .enumerate()
        .filter(|(_, w)| *w == x)
        .map(|(q, _)| q)
        .collect())
}

/// Occurrences of `t` in `t[..=i] · t[j..]`, by materializing the concatenation.
pub fn naive_prefsuf(t: &[u8], i: usize, j: usize) -> Result<Vec<usize>> {
    let n = t.len();
    for (what, v) in [("i", i), ("j", j)] {
        if v >= n {
            return Err(out_of_range(what, v as i64, 0, n as i64 - 1));
        }
    }
    let mut joined = t[..=i].to_vec();
    joined.extend_from_slice(&t[j..]);
    naive_occurrences(t, &joined)
}

/// Every period of `t` in `1..=n`, ascending.
pub fn naive_periods(t: &[u8]) -> Result<Vec<usize>> {
    if t.is_empty() {
        return Err(Error::EmptyText);
    }
    let n = t.len();
    Ok((1..=n)
        .filter(|&p| (0..n - p).all(|x| t[x] == t[x + p]))
        .collect())
}

/// Longest common prefix of `t[a..]` and `t[b..]` by direct comparison.
pub fn naive_lcp(t: &[u8], a: usize, b: usize) -> usize {
    t[a..]
        .iter()
        .zip(&t[b..])
        .take_while(|(x, y)| x == y)
        .count()
}

/// Longest common suffix of `t[..=a]` and `t[..=b]`; `-1` is the empty prefix.
pub fn naive_lcs(t: &[u8], a: isize, b: isize) -> usize {
    let x = &t[..(a + 1) as usize];
    let y = &t[..(b + 1) as usize];
    x.iter()
        .rev()
        .zip(y.iter().rev())
        .take_while(|(p, q)| p == q)
        .count()
}

/// One spanning occurrence: `pattern[..split]` ends `label(u)` and
/// `pattern[split..]` starts `label(v)` across edge number `edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitRecord {
    pub edge: usize,
    pub u: usize,
    pub v: usize,
    pub split: usize,
}

/// Tries every edge and every split length in `1..m`, grouped by edge.
pub fn naive_bipartite(g: &BipartiteGraph, pattern: &[u8]) -> Result<Vec<SplitRecord>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let m = pattern.len();
    let mut out = Vec::new();
    for (edge, &(u, v)) in g.edges().iter().enumerate() {
        let left = g.u_node(u).label.as_bytes();
        let right = g.v_node(v).label.as_bytes();
        for split in 1..m {
            if left.ends_with(&pattern[..split]) && right.starts_with(&pattern[split..]) {
                out.push(SplitRecord { edge, u, v, split });
            }
        }
    }
    Ok(out)
}
