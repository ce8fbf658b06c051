//! Longest common extension queries.
//!
//! [`LceIndex`] answers the longest common prefix of two suffixes and the
//! longest common suffix of two prefixes of the same text in constant time.
//! Each direction is a suffix array with its inverse, Kasai's adjacent LCP
//! array and a sparse range-minimum table. Queries first compare one machine
//! word directly and only consult the tables when the first eight letters
//! agree.

mod sparse_table;
pub mod suffix_array;

use crate::error::{out_of_range, Result};
use crate::text::Text;
use sparse_table::SparseTable;

const WORD: usize = std::mem::size_of::<u64>();

#[derive(Debug, Clone)]
struct Extension {
    text: Text,
    rank: Vec<u32>,
    adjacent: SparseTable,
}

impl Extension {
    fn new(text: Text) -> Self {
        assert!(
            text.len() < u32::MAX as usize,
            "text too long for 32-bit ranks"
        );
        let sa = suffix_array::suffix_array(&text);
        let rank = suffix_array::rank_array(&sa);
        let lcp = suffix_array::lcp_array(&text, &sa, &rank);
        Extension {
            rank: rank.into_iter().map(|r| r as u32).collect(),
            adjacent: SparseTable::new(lcp),
            text,
        }
    }

    /// LCP of `text[a..]` and `text[b..]`; positions may equal `n`.
    #[inline]
    fn lcp(&self, a: usize, b: usize) -> usize {
        let t = self.text.as_bytes();
        let n = t.len();
        if a == b {
            return n - a;
        }
        let limit = n - a.max(b);
        if limit < WORD {
            return t[a..a + limit]
                .iter()
                .zip(&t[b..b + limit])
                .take_while(|(x, y)| x == y)
                .count();
        }
        let x = u64::from_le_bytes(t[a..a + WORD].try_into().unwrap());
        let y = u64::from_le_bytes(t[b..b + WORD].try_into().unwrap());
        let diff = x ^ y;
        if diff != 0 {
            return (diff.trailing_zeros() / 8) as usize;
        }
        let (ra, rb) = (self.rank[a] as usize, self.rank[b] as usize);
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.adjacent.min(lo + 1, hi) as usize
    }
}

/// Constant-time LCP/LCS oracle over a fixed text.
#[derive(Debug, Clone)]
pub struct LceIndex {
    forward: Extension,
    backward: Extension,
}

impl LceIndex {
    pub fn new(text: impl Into<Text>) -> Self {
        let text = text.into();
        let backward = Extension::new(text.reversed());
        LceIndex {
            forward: Extension::new(text),
            backward,
        }
    }

    pub fn text(&self) -> &Text {
        &self.forward.text
    }

    pub fn len(&self) -> usize {
        self.forward.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Longest common prefix of `T[a..n)` and `T[b..n)`. Position `n` is the
    /// empty suffix.
    pub fn lcp_suffixes(&self, a: usize, b: usize) -> Result<usize> {
        let n = self.len();
        for (what, v) in [("a", a), ("b", b)] {
            if v > n {
                return Err(out_of_range(what, v as i64, 0, n as i64));
            }
        }
        Ok(self.lcp_unchecked(a, b))
    }

    /// Longest common suffix of `T[0..=a]` and `T[0..=b]`. Position `-1` is
    /// the empty prefix.
    pub fn lcs_prefixes(&self, a: isize, b: isize) -> Result<usize> {
        let n = self.len() as isize;
        for (what, v) in [("a", a), ("b", b)] {
            if v < -1 || v >= n {
                return Err(out_of_range(what, v as i64, -1, n as i64 - 1));
            }
        }
        Ok(self.lcs_unchecked(a, b))
    }

    #[inline]
    pub(crate) fn lcp_unchecked(&self, a: usize, b: usize) -> usize {
        self.forward.lcp(a, b)
    }

    /// `T[0..=a]` reversed is the suffix of the reversed text at `n - 1 - a`.
    #[inline]
    pub(crate) fn lcs_unchecked(&self, a: isize, b: isize) -> usize {
        let n = self.len() as isize;
        self.backward
            .lcp((n - 1 - a) as usize, (n - 1 - b) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::oracle::{naive_lcp, naive_lcs};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let idx = LceIndex::new("aababaab");
        assert_eq!(idx.lcp_suffixes(6, 1), Ok(2));
        assert_eq!(idx.lcp_suffixes(3, 3), Ok(5));
        assert_eq!(idx.lcp_suffixes(8, 2), Ok(0));
        assert_eq!(idx.lcp_suffixes(8, 8), Ok(0));
        assert_eq!(idx.lcs_prefixes(0, 5), Ok(1));
        assert_eq!(idx.lcs_prefixes(4, 4), Ok(5));
        assert_eq!(idx.lcs_prefixes(-1, 3), Ok(0));
        assert_eq!(idx.lcs_prefixes(-1, -1), Ok(0));
    }

    #[test]
    fn range_errors() {
        let idx = LceIndex::new("abc");
        assert!(matches!(
            idx.lcp_suffixes(4, 0),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            idx.lcp_suffixes(0, 4),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            idx.lcs_prefixes(3, 0),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            idx.lcs_prefixes(0, -2),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn long_runs_use_the_table() {
        let mut t = vec![b'a'; 100];
        t[50] = b'b';
        t.extend_from_slice(&t.clone());
        let idx = LceIndex::new(t.clone());
        for (a, b) in [(0, 100), (1, 101), (0, 1), (51, 151), (10, 60), (0, 149)] {
            assert_eq!(idx.lcp_suffixes(a, b).unwrap(), naive_lcp(&t, a, b));
        }
        for (a, b) in [(199, 99), (120, 20), (49, 149)] {
            assert_eq!(idx.lcs_prefixes(a, b).unwrap(), naive_lcs(&t, a, b));
        }
    }

    proptest! {
        #[test]
        fn agrees_with_direct_comparison(t in prop::collection::vec(0u8..3, 1..80)) {
            let idx = LceIndex::new(t.clone());
            let n = t.len();
            for a in 0..=n {
                for b in 0..=n {
                    let got = idx.lcp_suffixes(a, b).unwrap();
                    prop_assert_eq!(got, naive_lcp(&t, a, b));
                    prop_assert!(got <= (n - a).min(n - b));
                    prop_assert_eq!(got, idx.lcp_suffixes(b, a).unwrap());
                }
            }
            for a in -1..n as isize {
                for b in -1..n as isize {
                    let got = idx.lcs_prefixes(a, b).unwrap();
                    prop_assert_eq!(got, naive_lcs(&t, a, b));
                    prop_assert!(got as isize <= (a + 1).min(b + 1));
                    prop_assert_eq!(got, idx.lcs_prefixes(b, a).unwrap());
                }
            }
        }
    }
}
