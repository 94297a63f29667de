//! Left retractions of admissible sequences and the retraction chain ending
//! at a selfinjective algebra.

use serde::Serialize;
use thiserror::Error;

use crate::kupisch::{KupischError, KupischSeries, NormalizedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RetractionError {
    #[error("{0} is selfinjective; it has no left retraction")]
    SelfinjectiveInput(String),
    #[error("{0} is not normalized")]
    NotNormalized(String),
    #[error("retraction produced an invalid series: {0}")]
    InvalidResult(#[from] KupischError),
}

/// `c'_i = c_i - floor((c_i + i - 1) / n)` for `1 <= i <= n - 1`.
pub fn left_retract(normalized: &NormalizedSeries) -> Result<KupischSeries, RetractionError> {
    let series = &normalized.series;
    if series.is_selfinjective() {
        return Err(RetractionError::SelfinjectiveInput(series.to_string()));
    }
    if !normalized.is_normalized() {
        return Err(RetractionError::NotNormalized(series.to_string()));
    }
    let n = series.len();
    let lengths = (0..n - 1)
        .map(|i| {
            let c = series.length(i);
            c - (c + i) / n
        })
        .collect();
    Ok(KupischSeries::new(lengths)?)
}

/// Collapses the last vertex onto the first: `π(i) = i` for `i < n - 1`,
/// `π(n - 1) = 0` (0-based).
pub fn collapse_last_vertex(i: usize, n: usize) -> usize {
    if i + 1 == n {
        0
    } else {
        i
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractionChain {
    /// Normalized presentations of `A_0, ..., A_r`.
    pub steps: Vec<NormalizedSeries>,
    /// `L(A_i)` as produced by the retraction, before renormalization.
    pub retracts: Vec<KupischSeries>,
    pub terminal: KupischSeries,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChainStep {
    pub series: Vec<usize>,
    pub rotation_offset: usize,
}

impl RetractionChain {
    /// Normalize, retract, repeat until selfinjective. `n` drops by one per
    /// step, so at most `n - 1` retractions happen.
    pub fn compute(series: &KupischSeries) -> Result<Self, RetractionError> {
        let mut steps = Vec::new();
        let mut retracts = Vec::new();
        let mut current = series.clone();
        loop {
            let normalized = current.normalize()?;
            if normalized.series.is_selfinjective() {
                steps.push(normalized);
                break;
            }
            let next = left_retract(&normalized)?;
            steps.push(normalized);
            retracts.push(next.clone());
            current = next;
        }
        let terminal = steps.last().map(|s| s.series.clone()).unwrap_or(current);
        Ok(RetractionChain {
            steps,
            retracts,
            terminal,
        })
    }

    /// Number of retractions performed.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.steps.len() <= 1
    }

    /// The chain ends at the simple algebra exactly when the global dimension
    /// is finite.
    pub fn terminal_is_simple(&self) -> bool {
        self.terminal.is_simple_algebra()
    }

    pub fn rendered_steps(&self) -> Vec<ChainStep> {
        self.steps
            .iter()
            .map(|s| ChainStep {
                series: s.series.lengths().to_vec(),
                rotation_offset: s.rotation_offset,
            })
            .collect()
    }

    /// Pairs `(A_i normalized, L(A_i))`.
    pub fn transitions(&self) -> impl Iterator<Item = (&NormalizedSeries, &KupischSeries)> {
        self.steps.iter().zip(&self.retracts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ks(lengths: &[usize]) -> KupischSeries {
        KupischSeries::new(lengths.to_vec()).unwrap()
    }

    fn retract(lengths: &[usize]) -> Vec<usize> {
        left_retract(&ks(lengths).normalize().unwrap())
            .unwrap()
            .lengths()
            .to_vec()
    }

    #[test]
    fn left_retract_examples() {
        assert_eq!(retract(&[2, 3, 3]), vec![2, 2]);
        assert_eq!(retract(&[2, 3, 3, 3]), vec![2, 2, 2]);
        assert_eq!(retract(&[2, 1]), vec![1]);
        assert_eq!(retract(&[3, 2, 1]), vec![2, 1]);
    }

    #[test]
    fn left_retract_rejects_bad_input() {
        assert!(matches!(
            left_retract(&ks(&[3, 3]).normalize().unwrap()),
            Err(RetractionError::SelfinjectiveInput(_))
        ));
        let unnormalized = NormalizedSeries {
            series: ks(&[3, 2]),
            rotation_offset: 0,
        };
        assert!(matches!(
            left_retract(&unnormalized),
            Err(RetractionError::NotNormalized(_))
        ));
    }

    #[test]
    fn chain_examples() {
        let chain = RetractionChain::compute(&ks(&[2, 3, 3, 3])).unwrap();
        let steps: Vec<_> = chain
            .steps
            .iter()
            .map(|s| s.series.lengths().to_vec())
            .collect();
        assert_eq!(steps, vec![vec![2, 3, 3, 3], vec![2, 2, 2]]);
        assert_eq!(chain.terminal.lengths(), &[2, 2, 2]);
        assert!(!chain.terminal_is_simple());

        let chain = RetractionChain::compute(&ks(&[2, 3])).unwrap();
        assert_eq!(chain.terminal.lengths(), &[1]);
        assert_eq!(chain.len(), 1);
        assert!(chain.terminal_is_simple());

        let chain = RetractionChain::compute(&ks(&[4, 4, 4])).unwrap();
        assert_eq!(chain.steps.len(), 1);
        assert!(chain.is_empty());
        assert_eq!(chain.terminal.lengths(), &[4, 4, 4]);

        assert!(!RetractionChain::compute(&ks(&[2, 2]))
            .unwrap()
            .terminal_is_simple());
    }

    #[test]
    fn chain_renormalizes_between_steps() {
        // (3,2,3) -> normalized (2,3,3) -> (2,2)
        let chain = RetractionChain::compute(&ks(&[3, 2, 3])).unwrap();
        assert_eq!(chain.steps[0].rotation_offset, 1);
        assert_eq!(chain.steps[0].series.lengths(), &[2, 3, 3]);
        assert_eq!(chain.terminal.lengths(), &[2, 2]);

        // (5,5,6) retracts to (4,3), renormalized as (3,4)
        let chain = RetractionChain::compute(&ks(&[5, 5, 6])).unwrap();
        assert_eq!(chain.retracts[0].lengths(), &[4, 3]);
        assert_eq!(chain.steps[1].series.lengths(), &[3, 4]);
        assert_eq!(chain.steps[1].rotation_offset, 1);
    }

    #[test]
    fn collapse_last_vertex_maps_n_to_one() {
        assert_eq!(collapse_last_vertex(0, 4), 0);
        assert_eq!(collapse_last_vertex(2, 4), 2);
        assert_eq!(collapse_last_vertex(3, 4), 0);
    }
}
