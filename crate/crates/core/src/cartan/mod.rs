//! Cartan matrices of Nakayama algebras and their integer invariants.
//!
//! The Smith normal form of the Cartan matrix is `diag(1, ..., 1, w, 0, ...)`
//! with one zero fewer than the number of cycles of the resolution quiver,
//! and indicator vectors of cycles span the solutions of `C ξ = w 1`.

pub(crate) mod matrix;
mod smith;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

pub use matrix::ExactMatrix;
pub use smith::{smith_normal_form, SmithForm};

use crate::kupisch::KupischSeries;
use crate::quiver::{CycleData, CycleSummary, QuiverError, ResolutionQuiver};

/// `C[i][j]` = multiplicity of `S_i` in `P_j`.
pub fn cartan_entry(series: &KupischSeries, i: usize, j: usize) -> usize {
    let n = series.len();
    let c = series.length(j);
    c / n + usize::from((i + n - j) % n < c % n)
}

pub fn cartan_matrix(series: &KupischSeries) -> ExactMatrix {
    let n = series.len();
    ExactMatrix::from_fn(n, n, |i, j| BigInt::from(cartan_entry(series, i, j)))
}

/// `(1, ..., 1, weight, 0, ..., 0)` of length `n` with `cycles - 1` zeros.
pub fn expected_snf_diagonal(n: usize, cycles: usize, weight: u64) -> Vec<BigInt> {
    let ones = n - cycles;
    std::iter::repeat_n(BigInt::from(1), ones)
        .chain(std::iter::once(BigInt::from(weight)))
        .chain(std::iter::repeat_n(BigInt::from(0), cycles - 1))
        .collect()
}

/// Compares the Smith normal form of the Cartan matrix with the shape
/// predicted by the resolution quiver.
pub fn verify_snf_shape(series: &KupischSeries) -> Result<bool, QuiverError> {
    let summary = ResolutionQuiver::build(series).cycles()?;
    let Some(weight) = summary.weight() else {
        return Ok(false);
    };
    let snf = smith_normal_form(&cartan_matrix(series), false);
    Ok(
        snf.diagonal == expected_snf_diagonal(series.len(), summary.component_count, weight)
            && snf.rank == series.len() + 1 - summary.component_count,
    )
}

/// 0/1 column vector supported on the cycle's vertices.
pub fn cycle_indicator(cycle: &CycleData, n: usize) -> ExactMatrix {
    let mut xi = ExactMatrix::zeros(n, 1);
    for &v in &cycle.vertices {
        xi[(v, 0)] = BigInt::from(1);
    }
    xi
}

fn constant_column(n: usize, value: u64) -> ExactMatrix {
    ExactMatrix::column(&vec![BigInt::from(value); n])
}

/// Outcome of the bounded search for nonnegative integer solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "status")]
pub enum Enumeration {
    Checked {
        holds: bool,
    },
    /// The search space `(w + 1)^n` exceeded the budget.
    Skipped {
        candidates: Option<u64>,
        budget: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LinearSolutionReport {
    /// Cycle indicators solve `C ξ = w 1` and their number is `n + 1 - rank C`.
    pub cycle_indicators_maximal: bool,
    /// The nonnegative integer solutions are exactly the cycle indicators.
    pub nonnegative_solutions: Enumeration,
    /// Black-cycle indicators solve `C^T ξ = C ξ = w 1`, the stacked system is
    /// consistent iff some cycle is black, and then `b = n + 1 - rank`.
    pub black_cycles_rank: bool,
}

/// Nonnegative integer solutions of `C ξ = w 1`. Every coordinate is at most
/// `w` because the diagonal of `C` is positive; partial row sums prune the
/// search.
pub fn nonnegative_solutions(series: &KupischSeries, weight: u64) -> Vec<Vec<u64>> {
    let n = series.len();
    let columns: Vec<Vec<u64>> = (0..n)
        .map(|j| (0..n).map(|i| cartan_entry(series, i, j) as u64).collect())
        .collect();
    let mut solutions = Vec::new();
    let mut xi = vec![0u64; n];
    let mut sums = vec![0u64; n];
    fn search(
        j: usize,
        columns: &[Vec<u64>],
        weight: u64,
        xi: &mut Vec<u64>,
        sums: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        let n = columns.len();
        if j == n {
            if sums.iter().all(|&s| s == weight) {
                out.push(xi.clone());
            }
            return;
        }
        let mut value = 0;
        loop {
            xi[j] = value;
            search(j + 1, columns, weight, xi, sums, out);
            if sums.iter().zip(&columns[j]).any(|(s, c)| s + c > weight) {
                break;
            }
            for (s, c) in sums.iter_mut().zip(&columns[j]) {
                *s += c;
            }
            value += 1;
        }
        for (s, c) in sums.iter_mut().zip(&columns[j]) {
            *s -= c * value;
        }
        xi[j] = 0;
    }
    search(0, &columns, weight, &mut xi, &mut sums, &mut solutions);
    solutions
}

pub fn check_linear_solutions(
    series: &KupischSeries,
    budget: u64,
) -> Result<LinearSolutionReport, QuiverError> {
    let summary = ResolutionQuiver::build(series).cycles()?;
    let cartan = cartan_matrix(series);
    Ok(linear_solution_report(series, &summary, &cartan, budget))
}

pub(crate) fn linear_solution_report(
    series: &KupischSeries,
    summary: &CycleSummary,
    cartan: &ExactMatrix,
    budget: u64,
) -> LinearSolutionReport {
    let n = series.len();
    let Some(weight) = summary.weight() else {
        return LinearSolutionReport {
            cycle_indicators_maximal: false,
            nonnegative_solutions: Enumeration::Checked { holds: false },
            black_cycles_rank: false,
        };
    };
    let target = constant_column(n, weight);
    let transpose = cartan.transpose();

    let cycle_indicators_maximal = summary
        .cycles
        .iter()
        .all(|c| (cartan * &cycle_indicator(c, n)) == target)
        && summary.component_count == n + 1 - cartan.rank();

    let candidates = (weight + 1).checked_pow(n as u32);
    let nonnegative_solutions = match candidates {
        Some(count) if count <= budget => {
            let found: BTreeSet<Vec<u64>> =
                nonnegative_solutions(series, weight).into_iter().collect();
            let expected: BTreeSet<Vec<u64>> = summary
                .cycles
                .iter()
                .map(|c| {
                    let mut v = vec![0u64; n];
                    for &x in &c.vertices {
                        v[x] = 1;
                    }
                    v
                })
                .collect();
            Enumeration::Checked {
                holds: found == expected,
            }
        }
        _ => Enumeration::Skipped { candidates, budget },
    };

    let black: Vec<&CycleData> = summary.cycles.iter().filter(|c| c.black).collect();
    let indicators_solve_both = black.iter().all(|c| {
        let xi = cycle_indicator(c, n);
        (cartan * &xi) == target && (&transpose * &xi) == target
    });
    let stacked = transpose.vstack(cartan);
    let stacked_rank = stacked.rank();
    let consistent = stacked.hconcat(&constant_column(2 * n, 1)).rank() == stacked_rank;
    let black_cycles_rank = indicators_solve_both
        && consistent == !black.is_empty()
        && (black.is_empty() || black.len() == n + 1 - stacked_rank);

    LinearSolutionReport {
        cycle_indicators_maximal,
        nonnegative_solutions,
        black_cycles_rank,
    }
}

/// Entries of the circulant Cartan matrix of the selfinjective algebra with
/// `n` simples and radical length `m`, written with `m = kn + r`,
/// `1 <= r <= n`: `k + 1` when `0 <= i - j < r` or `j - i > n - r`, else `k`
/// (1-based `i`, `j`).
pub fn circulant_cartan_entry(n: usize, m: usize, i: usize, j: usize) -> usize {
    let r = (m - 1) % n + 1;
    let k = (m - r) / n;
    let (i, j) = (i as i64, j as i64);
    let (n, r) = (n as i64, r as i64);
    if (0 <= i - j && i - j < r) || j - i > n - r {
        k + 1
    } else {
        k
    }
}
