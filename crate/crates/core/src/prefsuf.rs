//! Constant-time prefix-suffix queries.
//!
//! For a text `T` of length `n`, `PrefSuf(i, j)` asks for every occurrence of
//! `T` in `T' = T[0..=i] · T[j..n)`. When `i >= j` the two pieces overlap in a
//! block of length `d = i - j + 1`, and an occurrence of `T` strictly inside
//! `T'` exists exactly when `T` is periodic with `per(T) < d` and `per(T)`
//! divides `d`. In that case the occurrences are `0, p, 2p, ..., d`. Otherwise
//! only the two ends of `T'` can hold an occurrence, and one LCP query and one
//! LCS query decide them.

use crate::error::{out_of_range, Error, Result};
use crate::lce::LceIndex;
use crate::progression::Progression;
use crate::text::{border_array, period_from_border, PeriodInfo, Text};

/// Which branch of the query answered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QueryCase {
    /// `j > i + 1`: `T'` is shorter than `T`.
    TooShort,
    /// `j = i + 1`: `T' = T`.
    Whole,
    /// Periodic overlap: a full progression with difference `per(T)`.
    Periodic,
    /// Only the prefix and suffix positions of `T'` are candidates.
    Ends,
}

/// Instrumentation collected by [`PrefSufIndex::query_counted`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryStats {
    pub queries: u64,
    pub lce_queries: u64,
    /// Largest number of LCE queries issued by one prefix-suffix query.
    pub max_lce_per_query: u64,
    pub too_short: u64,
    pub whole: u64,
    pub periodic: u64,
    pub ends: u64,
}

impl QueryStats {
    fn record(&mut self, case: QueryCase, lce: u64) {
        self.queries += 1;
        self.lce_queries += lce;
        self.max_lce_per_query = self.max_lce_per_query.max(lce);
        match case {
            QueryCase::TooShort => self.too_short += 1,
            QueryCase::Whole => self.whole += 1,
            QueryCase::Periodic => self.periodic += 1,
            QueryCase::Ends => self.ends += 1,
        }
    }
}

/// Smallest period of the text plus a two-way LCE index.
#[derive(Debug, Clone)]
pub struct PrefSufIndex {
    period_info: PeriodInfo,
    lce: LceIndex,
}

impl PrefSufIndex {
    pub fn build(text: impl Into<Text>) -> Result<Self> {
        let text = text.into();
        let border = border_array(&text);
        let longest = *border.last().ok_or(Error::EmptyText)?;
        Ok(PrefSufIndex {
            period_info: period_from_border(text.len(), longest),
            lce: LceIndex::new(text),
        })
    }

    pub fn text(&self) -> &Text {
        self.lce.text()
    }

    pub fn len(&self) -> usize {
        self.lce.len()
    }

    /// Always false; an index is never built over an empty text.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn period_info(&self) -> PeriodInfo {
        self.period_info
    }

    pub fn lce(&self) -> &LceIndex {
        &self.lce
    }

    /// Occurrences of `T` in `T[0..=i] · T[j..n)`, as positions in that string.
    pub fn query(&self, i: usize, j: usize) -> Result<Progression> {
        self.check(i, j)?;
        Ok(self.answer::<false>(i, j, &mut QueryStats::default()).0)
    }

    /// Like [`query`](Self::query) but also reports the branch taken and
    /// accumulates counters into `stats`.
    pub fn query_counted(
        &self,
        i: usize,
        j: usize,
        stats: &mut QueryStats,
    ) -> Result<(Progression, QueryCase)> {
        self.check(i, j)?;
        Ok(self.answer::<true>(i, j, stats))
    }

    fn check(&self, i: usize, j: usize) -> Result<()> {
        let n = self.len();
        for (what, v) in [("i", i), ("j", j)] {
            if v >= n {
                return Err(out_of_range(what, v as i64, 0, n as i64 - 1));
            }
        }
        Ok(())
    }

    #[inline]
    fn answer<const COUNT: bool>(
        &self,
        i: usize,
        j: usize,
        stats: &mut QueryStats,
    ) -> (Progression, QueryCase) {
        let (result, case, lce) = if j > i + 1 {
            (Progression::EMPTY, QueryCase::TooShort, 0)
        } else if j == i + 1 {
            (Progression::singleton(0), QueryCase::Whole, 0)
        } else {
            let overlap = i - j + 1;
            let PeriodInfo { period, periodic } = self.period_info;
            if periodic && period < overlap && overlap.is_multiple_of(period) {
                (
                    Progression::new(0, period, overlap / period + 1),
                    QueryCase::Periodic,
                    0,
                )
            } else {
                let n = self.len();
                // T occurs at 0 iff T[i+1..n) continues as T[j..); at `overlap`
                // iff T[0..j) ends T[0..=i].
                let at_start = self.lce.lcp_unchecked(i + 1, j) >= n - i - 1;
                let at_end = self.lce.lcs_unchecked(j as isize - 1, i as isize) >= j;
                (
                    Progression::pair(at_start.then_some(0), at_end.then_some(overlap)),
                    QueryCase::Ends,
                    2,
                )
            }
        };
        if COUNT {
            stats.record(case, lce);
        }
        (result, case)
    }
}
