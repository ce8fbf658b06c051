//! Randomized and exhaustive cross-checks of the indexes against the brute
//! force oracles. Used by the `selftest` command and the acceptance suite.

use std::fmt;

use rand::Rng;

use crate::bipartite::PatternMatcher;
use crate::lce::LceIndex;
use crate::oracle::{
    naive_bipartite, naive_lcp, naive_lcs, naive_occurrences, naive_prefsuf, SplitRecord,
};
use crate::prefsuf::PrefSufIndex;
use crate::workload;

/// Outcome of one check: how many cases ran and how many failed.
#[derive(Debug, Clone)]
pub struct Report {
    pub name: &'static str,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl Report {
    fn new(name: &'static str) -> Self {
        Report {
            name,
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} cases)", self.name, self.checked)
        } else {
            write!(
                f,
                "FAIL {} ({} of {} cases; first: {})",
                self.name,
                self.failures,
                self.checked,
                self.first_failure.as_deref().unwrap_or("?")
            )
        }
    }
}

/// Every string over `{a, b}` with length in `1..=max_len`.
pub fn binary_strings(max_len: usize) -> impl Iterator<Item = Vec<u8>> {
    (1..=max_len).flat_map(|len| {
        (0u32..1 << len).map(move |mask| {
            (0..len)
                .map(|k| if mask >> k & 1 == 1 { b'b' } else { b'a' })
                .collect()
        })
    })
}

fn brute_period(t: &[u8]) -> usize {
    let n = t.len();
    (1..=n).find(|&p| t[..n - p] == t[p..]).unwrap()
}

/// The common difference if `occ` is one arithmetic progression.
fn common_difference(occ: &[usize]) -> Option<usize> {
    match occ {
        [] | [_] => Some(0),
        [a, b, rest @ ..] => {
            let d = b - a;
            let mut prev = *b;
            for &x in rest {
                if x - prev != d {
                    return None;
                }
                prev = x;
            }
            Some(d)
        }
    }
}

fn show(t: &[u8]) -> String {
    String::from_utf8_lossy(t).into_owned()
}

/// Query answers expand to exactly the oracle's occurrence lists.
pub fn exhaustive_prefsuf(max_len: usize) -> Report {
    let mut r = Report::new("prefix-suffix queries equal brute force");
    for t in binary_strings(max_len) {
        let idx = PrefSufIndex::build(t.clone()).unwrap();
        for i in 0..t.len() {
            for j in 0..t.len() {
                let got = idx.query(i, j).unwrap().expand();
                let want = naive_prefsuf(&t, i, j).unwrap();
                r.expect(got == want, || {
                    format!("T={} i={i} j={j}: got {got:?}, want {want:?}", show(&t))
                });
            }
        }
    }
    r
}

/// An occurrence strictly inside `T'` exists iff `T` is periodic with a
/// period below the overlap that divides it.
pub fn exhaustive_middle_occurrences(max_len: usize) -> Report {
    let mut r = Report::new("middle occurrence iff periodic overlap");
    for t in binary_strings(max_len) {
        let n = t.len();
        let p = brute_period(&t);
        for i in 0..n {
            for j in 0..n {
                let overlap = i as i64 - j as i64 + 1;
                let occ = naive_prefsuf(&t, i, j).unwrap();
                let middle = occ.iter().any(|&q| q != 0 && q as i64 != overlap);
                let predicted = 2 * p <= n && (p as i64) < overlap && overlap % p as i64 == 0;
                r.expect(middle == predicted, || {
                    format!(
                        "T={} i={i} j={j}: middle={middle}, predicted={predicted}",
                        show(&t)
                    )
                });
            }
        }
    }
    r
}

fn check_progression(r: &mut Report, t: &[u8], i: usize, j: usize, period: &mut Option<usize>) {
    let occ = naive_prefsuf(t, i, j).unwrap();
    let diff = common_difference(&occ);
    let ok = match diff {
        None => false,
        Some(d) if occ.len() >= 3 => d == *period.get_or_insert_with(|| brute_period(t)),
        Some(_) => true,
    };
    r.expect(ok, || {
        format!("T={} i={i} j={j}: occurrences {occ:?}", show(t))
    });
}

/// Occurrence lists are single progressions, with difference `per(T)` once
/// they have three or more terms.
pub fn exhaustive_progressions(max_len: usize) -> Report {
    let mut r = Report::new("occurrences form one progression (exhaustive)");
    for t in binary_strings(max_len) {
        let mut period = None;
        for i in 0..t.len() {
            for j in 0..t.len() {
                check_progression(&mut r, &t, i, j, &mut period);
            }
        }
    }
    r
}

/// Same property on `count` random texts of length `1..=max_n`, cycling
/// through alphabets of size 1, 2, 4 and 26, one random cut each.
pub fn random_progressions<R: Rng>(rng: &mut R, count: usize, max_n: usize) -> Report {
    let mut r = Report::new("occurrences form one progression (random)");
    for k in 0..count {
        let sigma = [1, 2, 4, 26][k % 4];
        let n = rng.random_range(1..=max_n);
        let t = workload::random_text(rng, n, sigma);
        let (mut i, mut j) = (rng.random_range(0..n), rng.random_range(0..n));
        if j > i + 1 {
            std::mem::swap(&mut i, &mut j);
        }
        check_progression(&mut r, &t, i, j, &mut None);
    }
    r
}

/// Occurrences of `x` in `y` with `|y| < 2|x|` form one progression.
pub fn short_text_occurrences<R: Rng>(rng: &mut R, count: usize) -> Report {
    let mut r = Report::new("occurrences in a text shorter than twice the pattern");
    for _ in 0..count {
        let sigma = rng.random_range(1..=3);
        let m = rng.random_range(1..=12);
        let root_len = rng.random_range(1..=m);
        let root = workload::random_text(rng, root_len, sigma);
        let x = workload::periodic_text(&root, m);
        let y_len = rng.random_range(0..2 * m);
        let y = if rng.random_bool(0.5) {
            workload::periodic_text(&root, y_len)
        } else {
            workload::random_text(rng, y_len, sigma)
        };
        let occ = naive_occurrences(&x, &y).unwrap();
        r.expect(common_difference(&occ).is_some(), || {
            format!("x={} y={}: {occ:?}", show(&x), show(&y))
        });
    }
    r
}

/// LCP and LCS answers, including the empty-suffix and empty-prefix
/// positions, equal direct comparison.
pub fn exhaustive_lce(max_len: usize) -> Report {
    let mut r = Report::new("LCE queries equal direct comparison");
    for t in binary_strings(max_len) {
        let idx = LceIndex::new(t.clone());
        let n = t.len();
        for a in 0..=n {
            for b in 0..=n {
                let (got, want) = (idx.lcp_suffixes(a, b).unwrap(), naive_lcp(&t, a, b));
                r.expect(got == want, || {
                    format!("T={} lcp({a},{b}) = {got}, want {want}", show(&t))
                });
            }
        }
        for a in -1..n as isize {
            for b in -1..n as isize {
                let (got, want) = (idx.lcs_prefixes(a, b).unwrap(), naive_lcs(&t, a, b));
                r.expect(got == want, || {
                    format!("T={} lcs({a},{b}) = {got}, want {want}", show(&t))
                });
            }
        }
    }
    r
}

/// Random small graphs over `{a, b}`: expanded edge matches equal the
/// brute-force split enumeration.
pub fn random_bipartite<R: Rng>(rng: &mut R, count: usize) -> Report {
    let mut r = Report::new("bipartite matches equal brute force");
    for _ in 0..count {
        let (g, p) = workload::small_bipartite(rng, 8, 6, 8, 2);
        let matcher = PatternMatcher::new(p.clone()).unwrap();
        let mut got: Vec<SplitRecord> = matcher
            .match_graph(&g)
            .iter()
            .flat_map(|m| m.records())
            .collect();
        got.sort();
        let want = naive_bipartite(&g, &p).unwrap();
        r.expect(got == want, || {
            format!(
                "P={} with {} edges: got {} splits, want {}",
                show(&p),
                g.edges().len(),
                got.len(),
                want.len()
            )
        });
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_size() {
        assert_eq!(binary_strings(3).count(), 2 + 4 + 8);
        assert_eq!(binary_strings(2).collect::<Vec<_>>()[3], b"ba".to_vec());
    }

    #[test]
    fn differences() {
        assert_eq!(common_difference(&[]), Some(0));
        assert_eq!(common_difference(&[0, 3, 6]), Some(3));
        assert_eq!(common_difference(&[0, 3, 5]), None);
    }

    #[test]
    fn small_universe_passes() {
        for report in [
            exhaustive_prefsuf(7),
            exhaustive_middle_occurrences(7),
            exhaustive_progressions(7),
            exhaustive_lce(6),
        ] {
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn report_formatting() {
        let mut r = Report::new("demo");
        r.expect(true, String::new);
        assert_eq!(r.to_string(), "PASS demo (1 cases)");
        r.expect(false, || "boom".into());
        assert_eq!(r.to_string(), "FAIL demo (1 of 2 cases; first: boom)");
    }
}
