//! Admissible (Kupisch) sequences of connected Nakayama algebras.
//!
//! A connected Nakayama algebra with `n` simple modules is determined up to
//! isomorphism by the composition lengths `c_1, ..., c_n` of its
//! indecomposable projectives, ordered so that `rad P_i` is a quotient of
//! `P_{i+1}`. Internally vertices are 0-based; everything user-facing
//! (`Display`, error messages, reports) is 1-based.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Whether the underlying quiver is an oriented cycle or a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Cyclic,
    Linear,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Cyclic => f.write_str("cyclic"),
            Shape::Linear => f.write_str("linear"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KupischError {
    #[error("empty input: expected a list of positive integers")]
    EmptyInput,
    #[error("entry {index} (`{token}`) is not a positive integer")]
    NonPositiveEntry { index: usize, token: String },
    /// `index` is the 1-based position (in the input as given) of the entry
    /// that is too small compared with its predecessor.
    #[error(
        "admissibility violated at entry {index}: c_{index} = {value} but must be at least \
         c_{previous_index} - 1 = {}",
        .previous - 1
    )]
    AdmissibilityViolation {
        index: usize,
        value: usize,
        previous_index: usize,
        previous: usize,
    },
    #[error("disconnected algebra: {reason}")]
    DisconnectedAlgebra { reason: String },
    #[error("no rotation of {0} is normalized")]
    NoNormalizedRotation(String),
}

/// A validated admissible sequence.
///
/// Linear series always carry their unique `1` in the last position, so the
/// simple projective is `S_n` and the simple injective is `S_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KupischSeries {
    lengths: Vec<usize>,
    shape: Shape,
}

/// A rotation of a series satisfying the normalization convention, together
/// with the offset that produced it: `series[i] = original[(i + offset) % n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalizedSeries {
    pub series: KupischSeries,
    pub rotation_offset: usize,
}

fn rotate<T: Clone>(values: &[T], offset: usize) -> Vec<T> {
    let n = values.len();
    (0..n).map(|i| values[(i + offset) % n].clone()).collect()
}

impl KupischSeries {
    /// Validates `lengths` exactly as given, without rotating.
    pub fn new(lengths: Vec<usize>) -> Result<Self, KupischError> {
        Self::validate(lengths, 0)
    }

    /// Validates `lengths`, accepting a linear series in any rotation and
    /// moving its `1` to the last position. Returns the series together with
    /// the rotation offset that was applied.
    pub fn from_entries(lengths: Vec<usize>) -> Result<(Self, usize), KupischError> {
        let n = lengths.len();
        let offset = match lengths.iter().position(|&c| c == 1) {
            Some(pos) if lengths.iter().filter(|&&c| c == 1).count() == 1 => (pos + 1) % n,
            _ => 0,
        };
        let series = Self::validate(rotate(&lengths, offset), offset)?;
        Ok((series, offset))
    }

    /// Parses `c1,c2,...,cn` (commas and/or whitespace as separators).
    pub fn parse(text: &str) -> Result<Self, KupischError> {
        Self::from_entries(parse_entries(text)?).map(|(series, _)| series)
    }

    /// `offset` only affects the indices reported in errors.
    fn validate(lengths: Vec<usize>, offset: usize) -> Result<Self, KupischError> {
        let n = lengths.len();
        if n == 0 {
            return Err(KupischError::EmptyInput);
        }
        let original_index = |i: usize| (i + offset) % n + 1;
        if let Some(i) = lengths.iter().position(|&c| c == 0) {
            return Err(KupischError::NonPositiveEntry {
                index: original_index(i),
                token: "0".to_string(),
            });
        }
        let ones: Vec<usize> = (0..n).filter(|&i| lengths[i] == 1).collect();
        let shape = match ones.as_slice() {
            [] => Shape::Cyclic,
            [i] if *i == n - 1 => Shape::Linear,
            [i] => {
                return Err(KupischError::DisconnectedAlgebra {
                    reason: format!(
                        "the entry 1 at position {} is not the last entry",
                        original_index(*i)
                    ),
                })
            }
            _ => {
                return Err(KupischError::DisconnectedAlgebra {
                    reason: format!(
                        "{} entries equal 1 (positions {})",
                        ones.len(),
                        ones.iter()
                            .map(|&i| original_index(i).to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                })
            }
        };
        // c_{i+1} >= c_i - 1, cyclically for the cyclic shape.
        let pairs = match shape {
            Shape::Cyclic => n,
            Shape::Linear => n - 1,
        };
        for i in 0..pairs {
            let next = (i + 1) % n;
            if lengths[next] + 1 < lengths[i] {
                return Err(KupischError::AdmissibilityViolation {
                    index: original_index(next),
                    value: lengths[next],
                    previous_index: original_index(i),
                    previous: lengths[i],
                });
            }
        }
        Ok(KupischSeries { lengths, shape })
    }

    /// Number of simple modules.
    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Composition length of `P_i` (0-based `i`).
    #[inline]
    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// `p(A)`, the least composition length of an indecomposable projective.
    pub fn min_length(&self) -> usize {
        self.lengths.iter().copied().min().unwrap_or(0)
    }

    pub fn max_length(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0)
    }

    pub fn has_simple_projective(&self) -> bool {
        self.shape == Shape::Linear
    }

    pub fn is_simple_algebra(&self) -> bool {
        self.lengths == [1]
    }

    /// Constant cyclic sequences, and the simple algebra `(1)`.
    pub fn is_selfinjective(&self) -> bool {
        match self.shape {
            Shape::Cyclic => self.lengths.iter().all(|&c| c == self.lengths[0]),
            Shape::Linear => self.is_simple_algebra(),
        }
    }

    /// The rotation `series[i] = self[(i + offset) % n]` of a cyclic series.
    /// Rotating a linear series is only meaningful for offset 0.
    pub fn rotated(&self, offset: usize) -> Result<Self, KupischError> {
        Self::new(rotate(&self.lengths, offset % self.len()))
    }

    /// Rotates so that `c_1 = p(A) = c_n - 1` (cyclic, not selfinjective);
    /// linear and selfinjective series are returned with offset 0. Ties are
    /// broken by the smallest offset.
    pub fn normalize(&self) -> Result<NormalizedSeries, KupischError> {
        if self.shape == Shape::Linear || self.is_selfinjective() {
            return Ok(NormalizedSeries {
                series: self.clone(),
                rotation_offset: 0,
            });
        }
        let n = self.len();
        let p = self.min_length();
        let offset = (0..n)
            .find(|&k| self.lengths[k] == p && self.lengths[(k + n - 1) % n] == p + 1)
            .ok_or_else(|| KupischError::NoNormalizedRotation(self.to_string()))?;
        Ok(NormalizedSeries {
            series: self.rotated(offset)?,
            rotation_offset: offset,
        })
    }

    /// Lexicographically least rotation; linear series are returned as is.
    pub fn canonical_form(&self) -> Self {
        if self.shape == Shape::Linear {
            return self.clone();
        }
        let n = self.len();
        let best = (1..n).fold(0, |best, k| {
            let candidate = (0..n).map(|i| self.lengths[(i + k) % n]);
            let current = (0..n).map(|i| self.lengths[(i + best) % n]);
            if candidate.lt(current) {
                k
            } else {
                best
            }
        });
        KupischSeries {
            lengths: rotate(&self.lengths, best),
            shape: self.shape,
        }
    }
}

impl NormalizedSeries {
    /// Checks the normalization invariants for the shape of the series.
    pub fn is_normalized(&self) -> bool {
        let s = &self.series;
        let n = s.len();
        match s.shape() {
            Shape::Linear => s.length(n - 1) == 1 && self.rotation_offset == 0,
            Shape::Cyclic if s.is_selfinjective() => self.rotation_offset == 0,
            Shape::Cyclic => s.length(0) == s.min_length() && s.length(0) + 1 == s.length(n - 1),
        }
    }
}

/// Strips one pair of surrounding `()` or `[]`, splits on commas and
/// whitespace and parses each token as a positive integer. Empty tokens
/// between separators are ignored.
pub fn parse_entries(text: &str) -> Result<Vec<usize>, KupischError> {
    let trimmed = text.trim();
    let inner = [('(', ')'), ('[', ']')]
        .iter()
        .find_map(|&(open, close)| trimmed.strip_prefix(open)?.strip_suffix(close))
        .unwrap_or(trimmed);
    let tokens: Vec<&str> = inner
        .split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(KupischError::EmptyInput);
    }
    tokens
        .iter()
        .enumerate()
        .map(|(i, token)| match token.parse::<usize>() {
            Ok(value) if value > 0 => Ok(value),
            _ => Err(KupischError::NonPositiveEntry {
                index: i + 1,
                token: token.to_string(),
            }),
        })
        .collect()
}

impl FromStr for KupischSeries {
    type Err = KupischError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.lengths.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl PartialOrd for KupischSeries {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by number of simples, then lexicographically by lengths.
impl Ord for KupischSeries {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lengths.cmp(&other.lengths))
    }
}
