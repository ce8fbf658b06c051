use std::fmt;

/// The set `{start + k * step : 0 <= k < count}`, kept canonical: an empty
/// set is `(0, 0, 0)` and a singleton has `step == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Progression {
    start: usize,
    step: usize,
    count: usize,
}

impl Progression {
    pub const EMPTY: Progression = Progression {
        start: 0,
        step: 0,
        count: 0,
    };

    /// Builds the canonical form of `(start, step, count)`.
    ///
    /// Panics if `count >= 2` and `step == 0`.
    pub fn new(start: usize, step: usize, count: usize) -> Self {
        match count {
            0 => Self::EMPTY,
            1 => Self::singleton(start),
            _ => {
                assert!(
                    step > 0,
                    "progression with {count} terms needs a positive step"
                );
                Progression { start, step, count }
            }
        }
    }

    pub const fn singleton(q: usize) -> Self {
        Progression {
            start: q,
            step: 0,
            count: 1,
        }
    }

    /// Canonical progression over at most two distinct ascending positions.
    pub(crate) fn pair(first: Option<usize>, second: Option<usize>) -> Self {
        match (first, second) {
            (Some(x), Some(y)) => Progression::new(x, y - x, 2),
            (Some(x), None) | (None, Some(x)) => Progression::singleton(x),
            (None, None) => Progression::EMPTY,
        }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn first(&self) -> Option<usize> {
        (self.count > 0).then_some(self.start)
    }

    pub fn last(&self) -> Option<usize> {
        (self.count > 0).then(|| self.start + (self.count - 1) * self.step)
    }

    pub fn contains(&self, q: usize) -> bool {
        match self.count {
            0 => false,
            1 => q == self.start,
            _ => {
                q >= self.start
                    && (q - self.start).is_multiple_of(self.step)
                    && (q - self.start) / self.step < self.count
            }
        }
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        let (start, step) = (self.start, self.step);
        (0..self.count).map(move |k| start + k * step)
    }

    pub fn expand(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Keeps the terms in `lo..=hi`.
    pub fn clip(&self, lo: usize, hi: usize) -> Progression {
        let Some(last) = self.last() else {
            return Self::EMPTY;
        };
        if lo > hi || hi < self.start || lo > last {
            return Self::EMPTY;
        }
        if self.count == 1 {
            return *self;
        }
        let first_k = lo.saturating_sub(self.start).div_ceil(self.step);
        let last_k = ((hi.min(last) - self.start) / self.step).min(self.count - 1);
        if first_k > last_k {
            return Self::EMPTY;
        }
        Progression::new(
            self.start + first_k * self.step,
            self.step,
            last_k - first_k + 1,
        )
    }

    /// Maps every term `q` to `pivot - q`; the result is ascending again.
    ///
    /// Panics if some term exceeds `pivot`.
    pub fn reflect(&self, pivot: usize) -> Progression {
        match self.last() {
            None => Self::EMPTY,
            Some(last) => Progression::new(pivot - last, self.step, self.count),
        }
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}", self.start, self.step, self.count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn expand_examples() {
        assert_eq!(Progression::new(0, 3, 3).expand(), vec![0, 3, 6]);
        assert!(Progression::new(0, 0, 0).expand().is_empty());
        assert_eq!(Progression::new(1, 0, 1).expand(), vec![1]);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(Progression::new(7, 4, 0), Progression::EMPTY);
        assert_eq!(Progression::new(7, 4, 1), Progression::singleton(7));
        assert_eq!(Progression::singleton(7).step(), 0);
    }

    #[test]
    fn clip_examples() {
        assert_eq!(
            Progression::new(0, 3, 3).clip(1, 6),
            Progression::new(3, 3, 2)
        );
        assert_eq!(
            Progression::new(0, 5, 2).clip(0, 13),
            Progression::new(0, 5, 2)
        );
        assert_eq!(Progression::new(0, 0, 1).clip(1, 9), Progression::EMPTY);
        assert_eq!(Progression::new(0, 3, 3).clip(4, 5), Progression::EMPTY);
        assert_eq!(Progression::new(0, 3, 3).clip(6, 2), Progression::EMPTY);
        assert_eq!(
            Progression::new(2, 3, 4).clip(4, 9),
            Progression::new(5, 3, 2)
        );
    }

    #[test]
    fn reflect() {
        assert_eq!(
            Progression::new(0, 1, 3).reflect(3),
            Progression::new(1, 1, 3)
        );
        assert_eq!(
            Progression::singleton(0).reflect(2),
            Progression::singleton(2)
        );
        assert_eq!(Progression::EMPTY.reflect(2), Progression::EMPTY);
    }

    fn any_progression() -> impl Strategy<Value = Progression> {
        (0usize..20, 1usize..6, 0usize..8).prop_map(|(a, d, c)| Progression::new(a, d, c))
    }

    proptest! {
        #[test]
        fn clip_is_set_intersection(p in any_progression(), lo in 0usize..40, hi in 0usize..40) {
            let clipped = p.clip(lo, hi);
            let expected: Vec<usize> = p.iter().filter(|q| (lo..=hi).contains(q)).collect();
            prop_assert_eq!(clipped.expand(), expected);
            prop_assert_eq!(clipped, Progression::new(clipped.start(), clipped.step(), clipped.count()));
            if clipped.count() >= 2 {
                prop_assert_eq!(clipped.step(), p.step());
            }
            for q in 0..45 {
                prop_assert_eq!(p.contains(q), p.iter().any(|x| x == q));
            }
        }
    }
}
