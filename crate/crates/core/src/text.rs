//! Immutable byte text, border arrays and smallest periods.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// An immutable string over the byte alphabet.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Text {
    bytes: Box<[u8]>,
}

impl Text {
    pub fn new(bytes: impl Into<Box<[u8]>>) -> Self {
        Text {
            bytes: bytes.into(),
        }
    }

    #[inline]
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The letters in reverse order.
    pub fn reversed(&self) -> Text {
        self.bytes.iter().rev().copied().collect::<Vec<_>>().into()
    }

    /// `T[a..=b]`, empty when `a > b`.
    pub fn substring(&self, a: usize, b: usize) -> &[u8] {
        if a > b {
            &[]
        } else {
            &self.bytes[a..=b]
        }
    }
}

impl Deref for Text {
    type Target = [u8];

    #[inline]
    fn deref(&self) -> &[u8] {
        &self.bytes
    }
}

impl AsRef<[u8]> for Text {
    fn as_ref(&self) -> &[u8] {
        &self.bytes
    }
}

impl From<Vec<u8>> for Text {
    fn from(v: Vec<u8>) -> Self {
        Text::new(v)
    }
}

impl From<&[u8]> for Text {
    fn from(v: &[u8]) -> Self {
        Text::new(v)
    }
}

impl From<&str> for Text {
    fn from(v: &str) -> Self {
        Text::new(v.as_bytes())
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text({:?})", String::from_utf8_lossy(&self.bytes))
    }
}

/// Smallest period of a nonempty text and whether the text is periodic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodInfo {
    pub period: usize,
    /// `2 * period <= n`.
    pub periodic: bool,
}

/// Entry `k` is the length of the longest proper border of `t[..=k]`.
pub fn border_array(t: &[u8]) -> Vec<usize> {
    let mut border = vec![0; t.len()];
    let mut b = 0;
    for k in 1..t.len() {
        while b > 0 && t[k] != t[b] {
            b = border[b - 1];
        }
        if t[k] == t[b] {
            b += 1;
        }
        border[k] = b;
    }
    border
}

/// Smallest period via the border/period duality: `per(T) = n - border(T)`.
pub fn period(t: &[u8]) -> Result<PeriodInfo> {
    let border = border_array(t);
    let n = t.len();
    let last = border.last().ok_or(Error::EmptyText)?;
    Ok(period_from_border(n, *last))
}

pub(crate) fn period_from_border(n: usize, longest_border: usize) -> PeriodInfo {
    let period = n - longest_border;
    PeriodInfo {
        period,
        periodic: 2 * period <= n,
    }
}
