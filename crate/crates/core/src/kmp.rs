//! KMP automata over a pattern and its reverse.
//!
//! A state is the length of the longest pattern prefix that is a suffix of
//! the letters fed so far. Transitions are computed from the failure (border)
//! array on demand, so memory is `O(m)` regardless of alphabet size.

use crate::error::{Error, Result};
use crate::text::{border_array, Text};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    /// Built over the reversed pattern.
    Reverse,
}

impl Direction {
    fn name(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Reverse => "reverse",
        }
    }
}

/// Letters fed and failure links followed while scanning.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanStats {
    pub letters_fed: u64,
    pub failure_steps: u64,
}

#[derive(Debug, Clone)]
pub struct KmpAutomaton {
    pattern: Text,
    failure: Vec<usize>,
    direction: Direction,
}

impl KmpAutomaton {
    pub fn build(pattern: &[u8], direction: Direction) -> Result<Self> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let pattern: Text = match direction {
            Direction::Forward => pattern.into(),
            Direction::Reverse => pattern.iter().rev().copied().collect::<Vec<_>>().into(),
        };
        Ok(KmpAutomaton {
            failure: border_array(&pattern),
            pattern,
            direction,
        })
    }

    /// The letters the automaton matches, reversed for [`Direction::Reverse`].
    pub fn pattern(&self) -> &Text {
        &self.pattern
    }

    pub fn failure(&self) -> &[usize] {
        &self.failure
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Pattern length `m`; states range over `0..=m`.
    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn feed(&self, state: usize, letter: u8) -> usize {
        self.step(state, letter, &mut ScanStats::default())
    }

    #[inline]
    fn step(&self, mut state: usize, letter: u8, stats: &mut ScanStats) -> usize {
        let p = self.pattern.as_bytes();
        stats.letters_fed += 1;
        if state == p.len() {
            state = self.failure[state - 1];
            stats.failure_steps += 1;
        }
        loop {
            if p[state] == letter {
                return state + 1;
            }
            if state == 0 {
                return 0;
            }
            state = self.failure[state - 1];
            stats.failure_steps += 1;
        }
    }

    /// Feeds `letters` from state 0 and returns the final state.
    pub fn scan(&self, letters: impl IntoIterator<Item = u8>, stats: &mut ScanStats) -> usize {
        letters
            .into_iter()
            .fold(0, |state, c| self.step(state, c, stats))
    }

    fn expect(&self, expected: Direction) -> Result<()> {
        if self.direction == expected {
            Ok(())
        } else {
            Err(Error::WrongDirection {
                expected: expected.name(),
                actual: self.direction.name(),
            })
        }
    }
}

/// Length of the longest suffix of `label` that is a prefix of the pattern.
pub fn longest_pattern_prefix_as_label_suffix(a: &KmpAutomaton, label: &[u8]) -> Result<usize> {
    longest_prefix_counted(a, label, &mut ScanStats::default())
}

/// Length of the longest prefix of `label` that is a suffix of the pattern.
pub fn longest_pattern_suffix_as_label_prefix(a: &KmpAutomaton, label: &[u8]) -> Result<usize> {
    longest_suffix_counted(a, label, &mut ScanStats::default())
}

pub(crate) fn longest_prefix_counted(
    a: &KmpAutomaton,
    label: &[u8],
    stats: &mut ScanStats,
) -> Result<usize> {
    a.expect(Direction::Forward)?;
    Ok(a.scan(label.iter().copied(), stats))
}

pub(crate) fn longest_suffix_counted(
    a: &KmpAutomaton,
    label: &[u8],
    stats: &mut ScanStats,
) -> Result<usize> {
    a.expect(Direction::Reverse)?;
    Ok(a.scan(label.iter().rev().copied(), stats))
}
