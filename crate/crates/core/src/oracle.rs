//! Definition-level homological algebra over a connected Nakayama algebra.
//!
//! Every indecomposable module is uniserial and is determined by its top and
//! its composition length, so syzygies, cosyzygies and dimensions can be
//! computed by walking through `(top, length)` states. This module is the
//! slow, independent ground truth against which the resolution-quiver
//! decisions are verified.

use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::kupisch::KupischSeries;

/// An indecomposable module: composition factors, top to socle, are
/// `S_top, S_{top+1}, ..., S_{top+length-1}` (indices mod `n`, 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SerialModule {
    pub top: usize,
    pub length: usize,
}

impl SerialModule {
    pub fn new(top: usize, length: usize) -> Self {
        SerialModule { top, length }
    }

    pub fn simple(vertex: usize) -> Self {
        SerialModule {
            top: vertex,
            length: 1,
        }
    }

    pub fn socle(&self, n: usize) -> usize {
        (self.top + self.length - 1) % n
    }

    pub fn composition_factors(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        let top = self.top;
        (0..self.length).map(move |k| (top + k) % n)
    }

    pub fn is_valid_over(&self, series: &KupischSeries) -> bool {
        self.top < series.len() && self.length >= 1 && self.length <= series.length(self.top)
    }
}

/// A projective or injective dimension. `Finite(k)` is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomDimension {
    Finite(usize),
    Infinite,
}

impl HomDimension {
    pub fn is_finite(&self) -> bool {
        matches!(self, HomDimension::Finite(_))
    }

    pub fn is_odd(&self) -> bool {
        matches!(self, HomDimension::Finite(k) if k % 2 == 1)
    }
}

impl fmt::Display for HomDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDimension::Finite(k) => write!(f, "{k}"),
            HomDimension::Infinite => f.write_str("infinite"),
        }
    }
}

/// Finite dimensions serialize as integers, infinite as the string `"infinite"`.
impl Serialize for HomDimension {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            HomDimension::Finite(k) => serializer.serialize_u64(*k as u64),
            HomDimension::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

/// `d_j = max { l >= 1 : l <= c_{j-l+1} }`, the composition length of the
/// injective envelope of `S_j` (0-based `j`).
pub fn injective_length(series: &KupischSeries, j: usize) -> usize {
    let n = series.len();
    let mut length = 1;
    // The set of admissible lengths is downward closed, so stop at the first gap.
    while length < series.max_length() {
        let candidate = length + 1;
        let top = (j + n * candidate - candidate + 1) % n;
        if series.length(top) < candidate {
            break;
        }
        length = candidate;
    }
    length
}

pub fn injective_lengths(series: &KupischSeries) -> Vec<usize> {
    (0..series.len())
        .map(|j| injective_length(series, j))
        .collect()
}

/// Brute-force homological computations over one algebra.
#[derive(Debug, Clone)]
pub struct HomologyOracle<'a> {
    series: &'a KupischSeries,
    injective_lengths: Vec<usize>,
}

impl<'a> HomologyOracle<'a> {
    pub fn new(series: &'a KupischSeries) -> Self {
        HomologyOracle {
            series,
            injective_lengths: injective_lengths(series),
        }
    }

    pub fn series(&self) -> &KupischSeries {
        self.series
    }

    pub fn n(&self) -> usize {
        self.series.len()
    }

    pub fn injective_lengths(&self) -> &[usize] {
        &self.injective_lengths
    }

    pub fn projective(&self, i: usize) -> SerialModule {
        SerialModule::new(i, self.series.length(i))
    }

    /// The injective envelope `I(S_j)`.
    pub fn injective(&self, j: usize) -> SerialModule {
        let n = self.n();
        let d = self.injective_lengths[j];
        SerialModule::new((j + n * d - d + 1) % n, d)
    }

    /// Every indecomposable module, ordered by top then length.
    pub fn indecomposables(&self) -> impl Iterator<Item = SerialModule> + '_ {
        (0..self.n())
            .flat_map(move |t| (1..=self.series.length(t)).map(move |l| SerialModule::new(t, l)))
    }

    /// Kernel of the projective cover, `None` when `module` is projective.
    pub fn syzygy(&self, module: SerialModule) -> Option<SerialModule> {
        debug_assert!(module.is_valid_over(self.series));
        let cover = self.series.length(module.top);
        if module.length == cover {
            None
        } else {
            Some(SerialModule::new(
                (module.top + module.length) % self.n(),
                cover - module.length,
            ))
        }
    }

    /// Cokernel of the injective envelope, `None` when `module` is injective.
    pub fn cosyzygy(&self, module: SerialModule) -> Option<SerialModule> {
        debug_assert!(module.is_valid_over(self.series));
        let envelope = self.injective(module.socle(self.n()));
        if module.length == envelope.length {
            None
        } else {
            Some(SerialModule::new(
                envelope.top,
                envelope.length - module.length,
            ))
        }
    }

    fn dimension_by(
        &self,
        module: SerialModule,
        step: impl Fn(SerialModule) -> Option<SerialModule>,
    ) -> HomDimension {
        let mut seen = HashSet::new();
        let mut current = module;
        let mut k = 0;
        loop {
            if !seen.insert(current) {
                return HomDimension::Infinite;
            }
            match step(current) {
                None => return HomDimension::Finite(k),
                Some(next) => {
                    current = next;
                    k += 1;
                }
            }
        }
    }

    pub fn projective_dimension(&self, module: SerialModule) -> HomDimension {
        self.dimension_by(module, |m| self.syzygy(m))
    }

    pub fn injective_dimension(&self, module: SerialModule) -> HomDimension {
        self.dimension_by(module, |m| self.cosyzygy(m))
    }

    pub fn simple_projective_dimensions(&self) -> Vec<HomDimension> {
        (0..self.n())
            .map(|i| self.projective_dimension(SerialModule::simple(i)))
            .collect()
    }

    pub fn simple_injective_dimensions(&self) -> Vec<HomDimension> {
        (0..self.n())
            .map(|i| self.injective_dimension(SerialModule::simple(i)))
            .collect()
    }

    /// Supremum of the projective dimensions of the simples.
    pub fn global_dimension(&self) -> HomDimension {
        self.simple_projective_dimensions()
            .into_iter()
            .max()
            .unwrap_or(HomDimension::Finite(0))
    }

    /// `γ(S_i)`: socle of `P_i` shifted by one.
    pub fn gamma(&self, i: usize) -> usize {
        (self.projective(i).socle(self.n()) + 1) % self.n()
    }

    /// `ψ(S_j)`: top of `I(S_j)` shifted back by one.
    pub fn psi(&self, j: usize) -> usize {
        let n = self.n();
        (self.injective(j).top + n - 1) % n
    }

    /// Both the regular module and its dual have finite homological dimension.
    pub fn is_gorenstein(&self) -> bool {
        (0..self.n()).all(|i| self.injective_dimension(self.projective(i)).is_finite())
            && (0..self.n()).all(|j| self.projective_dimension(self.injective(j)).is_finite())
    }
}
