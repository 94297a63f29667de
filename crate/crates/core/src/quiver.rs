//! Resolution quivers and the fast decisions built on them.
//!
//! The resolution quiver has one arrow `i -> f(i)` out of every vertex, with
//! `f(i) = i + c_i (mod n)`. Each connected component of such a functional
//! graph contains exactly one cycle, and the cycle data (count, weight, black
//! vertices) decides finiteness of the global dimension and Gorensteinness in
//! linear time.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::kupisch::KupischSeries;
use crate::oracle::injective_lengths;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("cycle through vertex {vertex} has length sum {sum}, not divisible by {n}")]
    NonIntegerWeight { vertex: usize, sum: u64, n: usize },
}

/// A functional graph on `0..n` whose vertices carry a composition length
/// (used for weights) and a black flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionQuiver {
    succ: Vec<usize>,
    lengths: Vec<usize>,
    black: Vec<bool>,
}

/// One cycle, listed from its least vertex in successor order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleData {
    pub vertices: Vec<usize>,
    pub size: usize,
    pub weight: u64,
    pub black: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSummary {
    pub cycles: Vec<CycleData>,
    pub component_count: usize,
}

impl CycleSummary {
    /// The common weight of the cycles (they always agree for a resolution
    /// quiver; `None` only if that invariant is broken).
    pub fn weight(&self) -> Option<u64> {
        let first = self.cycles.first()?.weight;
        self.cycles
            .iter()
            .all(|c| c.weight == first)
            .then_some(first)
    }

    pub fn black_count(&self) -> usize {
        self.cycles.iter().filter(|c| c.black).count()
    }

    pub fn all_black(&self) -> bool {
        self.cycles.iter().all(|c| c.black)
    }

    pub fn cyclic_vertices(&self) -> BTreeSet<usize> {
        self.cycles
            .iter()
            .flat_map(|c| c.vertices.iter().copied())
            .collect()
    }
}

/// Cycles of the functional graph `succ`, each rotated to start at its least
/// vertex and sorted by that vertex. Iterative, `O(n)`.
pub fn functional_cycles(succ: &[usize]) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = succ.len();
    // walk id of the traversal that first reached each vertex
    let mut walk = vec![UNSEEN; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if walk[start] != UNSEEN {
            continue;
        }
        let mut v = start;
        while walk[v] == UNSEEN {
            walk[v] = start;
            v = succ[v];
        }
        if walk[v] == start {
            let mut cycle = vec![v];
            let mut u = succ[v];
            while u != v {
                cycle.push(u);
                u = succ[u];
            }
            let least = (0..cycle.len()).min_by_key(|&k| cycle[k]).unwrap_or(0);
            cycle.rotate_left(least);
            cycles.push(cycle);
        }
    }
    cycles.sort_unstable_by_key(|c| c[0]);
    cycles
}

/// `pd S_i != 1`: either `S_i` is projective or `rad P_i` is not projective.
pub fn is_black_simple(series: &KupischSeries, i: usize) -> bool {
    let n = series.len();
    let c = series.length(i);
    c == 1 || series.length((i + 1) % n) + 1 != c
}

/// `id S_j != 1`, the dual of [`is_black_simple`] in terms of the injective
/// lengths `d`.
pub fn is_psi_black_simple(injective_lengths: &[usize], j: usize) -> bool {
    let n = injective_lengths.len();
    let d = injective_lengths[j];
    d == 1 || injective_lengths[(j + n - 1) % n] + 1 != d
}

impl ResolutionQuiver {
    /// The resolution quiver `R(A)`: `f(i) = (i + c_i) mod n`.
    pub fn build(series: &KupischSeries) -> Self {
        let n = series.len();
        let lengths = series.lengths().to_vec();
        let succ = lengths
            .iter()
            .enumerate()
            .map(|(i, &c)| (i + c) % n)
            .collect();
        let black = (0..n).map(|i| is_black_simple(series, i)).collect();
        ResolutionQuiver {
            succ,
            lengths,
            black,
        }
    }

    /// The quiver of `ψ(j) = j - d_j (mod n)`, weighted by the injective
    /// lengths `d_j`; it is the resolution quiver of the opposite algebra up
    /// to relabeling. Black here means `id S_j != 1`.
    pub fn build_psi(series: &KupischSeries) -> Self {
        let n = series.len();
        let lengths = injective_lengths(series);
        let succ = lengths
            .iter()
            .enumerate()
            .map(|(j, &d)| (j + n - d % n) % n)
            .collect();
        let black = (0..n).map(|j| is_psi_black_simple(&lengths, j)).collect();
        ResolutionQuiver {
            succ,
            lengths,
            black,
        }
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    pub fn succ(&self) -> &[usize] {
        &self.succ
    }

    pub fn is_black(&self, v: usize) -> bool {
        self.black[v]
    }

    pub fn cycles(&self) -> Result<CycleSummary, QuiverError> {
        let n = self.n();
        let cycles = functional_cycles(&self.succ)
            .into_iter()
            .map(|vertices| {
                let sum: u64 = vertices.iter().map(|&v| self.lengths[v] as u64).sum();
                if !sum.is_multiple_of(n as u64) {
                    return Err(QuiverError::NonIntegerWeight {
                        vertex: vertices[0],
                        sum,
                        n,
                    });
                }
                Ok(CycleData {
                    size: vertices.len(),
                    weight: sum / n as u64,
                    black: vertices.iter().all(|&v| self.black[v]),
                    vertices,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycleSummary {
            component_count: cycles.len(),
            cycles,
        })
    }
}

/// Connected resolution quiver of weight 1.
pub fn has_finite_global_dimension(series: &KupischSeries) -> Result<bool, QuiverError> {
    let summary = ResolutionQuiver::build(series).cycles()?;
    Ok(finite_from_summary(&summary))
}

fn finite_from_summary(summary: &CycleSummary) -> bool {
    summary.component_count == 1 && summary.weight() == Some(1)
}

/// Finite global dimension, or every cycle of the resolution quiver black.
pub fn is_gorenstein(series: &KupischSeries) -> Result<bool, QuiverError> {
    let summary = ResolutionQuiver::build(series).cycles()?;
    Ok(finite_from_summary(&summary) || summary.all_black())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Decisions {
    pub finite_global_dimension: bool,
    pub gorenstein: bool,
}

impl Decisions {
    pub fn from_summary(summary: &CycleSummary) -> Self {
        let finite = finite_from_summary(summary);
        Decisions {
            finite_global_dimension: finite,
            gorenstein: finite || summary.all_black(),
        }
    }
}

/// Vertices on cycles of `R(A)` and of the ψ-quiver respectively.
pub fn cyclic_sets(
    series: &KupischSeries,
) -> Result<(BTreeSet<usize>, BTreeSet<usize>), QuiverError> {
    let gamma = ResolutionQuiver::build(series).cycles()?;
    let psi = ResolutionQuiver::build_psi(series).cycles()?;
    Ok((gamma.cyclic_vertices(), psi.cyclic_vertices()))
}

/// The four Gorenstein criteria for infinite global dimension, in order:
/// every cycle of `R(A)` black; every γ-cyclic vertex γ-black; every ψ-cyclic
/// vertex ψ-black; γ-cyclic set equals ψ-cyclic set. They are expected to
/// agree whenever the global dimension is infinite.
pub fn gorenstein_criteria(series: &KupischSeries) -> Result<[bool; 4], QuiverError> {
    let gamma_quiver = ResolutionQuiver::build(series);
    let psi_quiver = ResolutionQuiver::build_psi(series);
    let gamma = gamma_quiver.cycles()?;
    let psi = psi_quiver.cycles()?;
    let gamma_cyclic = gamma.cyclic_vertices();
    let psi_cyclic = psi.cyclic_vertices();
    Ok([
        gamma.all_black(),
        gamma_cyclic.iter().all(|&v| gamma_quiver.is_black(v)),
        psi_cyclic.iter().all(|&v| psi_quiver.is_black(v)),
        gamma_cyclic == psi_cyclic,
    ])
}
