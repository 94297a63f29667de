//! Single-algebra analysis reports, rendered as text or as one-line JSON.
//!
//! All vertex indices in a report are 1-based.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::cartan::{cartan_matrix, smith_normal_form, ExactMatrix};
use crate::kupisch::{parse_entries, KupischError, KupischSeries, Shape};
use crate::oracle::{HomDimension, HomologyOracle};
use crate::quiver::{CycleSummary, Decisions, QuiverError, ResolutionQuiver};
use crate::retraction::{ChainStep, RetractionChain, RetractionError};

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Input(#[from] KupischError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Retraction(#[from] RetractionError),
}

/// Optional report sections.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Sections {
    pub oracle: bool,
    pub cartan: bool,
    pub retraction: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NormalizedView {
    pub series: Vec<usize>,
    pub rotation_offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleView {
    pub vertices: Vec<usize>,
    pub size: usize,
    pub weight: u64,
    pub black: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuiverView {
    pub succ: Vec<usize>,
    pub component_count: usize,
    pub cycles: Vec<CycleView>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleView {
    pub projective_dimensions: Vec<HomDimension>,
    pub injective_dimensions: Vec<HomDimension>,
    pub global_dimension: HomDimension,
    pub gorenstein: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CartanView {
    pub matrix: ExactMatrix,
    #[serde(serialize_with = "crate::cartan::matrix::serialize_bigint")]
    pub determinant: BigInt,
    pub rank: usize,
    #[serde(serialize_with = "crate::cartan::matrix::serialize_bigints")]
    pub snf_diagonal: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RetractionView {
    pub chain: Vec<ChainStep>,
    pub terminal: Vec<usize>,
    pub terminal_is_simple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub input: Vec<usize>,
    pub normalized: NormalizedView,
    pub shape: Shape,
    pub selfinjective: bool,
    pub resolution_quiver: QuiverView,
    pub decisions: Decisions,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cartan: Option<CartanView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub retraction: Option<RetractionView>,
}

fn quiver_view(quiver: &ResolutionQuiver, summary: &CycleSummary) -> QuiverView {
    QuiverView {
        succ: quiver.succ().iter().map(|v| v + 1).collect(),
        component_count: summary.component_count,
        cycles: summary
            .cycles
            .iter()
            .map(|c| CycleView {
                vertices: c.vertices.iter().map(|v| v + 1).collect(),
                size: c.size,
                weight: c.weight,
                black: c.black,
            })
            .collect(),
    }
}

/// Parses `text` and analyzes the algebra. Linear input is accepted in any
/// rotation; the quiver and all sections refer to the validated series, in
/// which the simple projective is last.
pub fn analyze(text: &str, sections: Sections) -> Result<AnalysisReport, AnalyzeError> {
    let input = parse_entries(text)?;
    let (series, _) = KupischSeries::from_entries(input.clone())?;
    analyze_series(input, &series, sections)
}

pub fn analyze_series(
    input: Vec<usize>,
    series: &KupischSeries,
    sections: Sections,
) -> Result<AnalysisReport, AnalyzeError> {
    let normalized = series.normalize()?;
    let quiver = ResolutionQuiver::build(series);
    let summary = quiver.cycles()?;

    let oracle = sections.oracle.then(|| {
        let oracle = HomologyOracle::new(series);
        let projective_dimensions = oracle.simple_projective_dimensions();
        OracleView {
            global_dimension: projective_dimensions
                .iter()
                .copied()
                .max()
                .unwrap_or(HomDimension::Finite(0)),
            injective_dimensions: oracle.simple_injective_dimensions(),
            projective_dimensions,
            gorenstein: oracle.is_gorenstein(),
        }
    });

    let cartan = sections.cartan.then(|| {
        let matrix = cartan_matrix(series);
        let snf = smith_normal_form(&matrix, false);
        CartanView {
            determinant: matrix.determinant(),
            rank: snf.rank,
            snf_diagonal: snf.diagonal,
            matrix,
        }
    });

    let retraction = if sections.retraction {
        let chain = RetractionChain::compute(series)?;
        Some(RetractionView {
            chain: chain.rendered_steps(),
            terminal: chain.terminal.lengths().to_vec(),
            terminal_is_simple: chain.terminal_is_simple(),
        })
    } else {
        None
    };

    Ok(AnalysisReport {
        input,
        normalized: NormalizedView {
            series: normalized.series.lengths().to_vec(),
            rotation_offset: normalized.rotation_offset,
        },
        shape: series.shape(),
        selfinjective: series.is_selfinjective(),
        resolution_quiver: quiver_view(&quiver, &summary),
        decisions: Decisions::from_summary(&summary),
        oracle,
        cartan,
        retraction,
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

fn join<T: fmt::Display>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn yes_no(value: bool) -> &'static str {
    if value {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "series:                  ({})", join(&self.input))?;
        writeln!(
            f,
            "normalized:              ({}) rotation offset {}",
            join(&self.normalized.series),
            self.normalized.rotation_offset
        )?;
        writeln!(f, "shape:                   {}", self.shape)?;
        writeln!(f, "selfinjective:           {}", yes_no(self.selfinjective))?;
        let q = &self.resolution_quiver;
        writeln!(f, "resolution quiver:       succ = ({})", join(&q.succ))?;
        writeln!(f, "components:              {}", q.component_count)?;
        for c in &q.cycles {
            writeln!(
                f,
                "  cycle ({}): size {}, weight {}, {}",
                join(&c.vertices),
                c.size,
                c.weight,
                if c.black { "black" } else { "not black" }
            )?;
        }
        writeln!(
            f,
            "finite global dimension: {}",
            yes_no(self.decisions.finite_global_dimension)
        )?;
        writeln!(
            f,
            "gorenstein:              {}",
            yes_no(self.decisions.gorenstein)
        )?;
        if let Some(o) = &self.oracle {
            writeln!(f, "oracle:")?;
            writeln!(
                f,
                "  pd of simples:         ({})",
                join(&o.projective_dimensions)
            )?;
            writeln!(
                f,
                "  id of simples:         ({})",
                join(&o.injective_dimensions)
            )?;
            writeln!(f, "  global dimension:      {}", o.global_dimension)?;
            writeln!(f, "  gorenstein:            {}", yes_no(o.gorenstein))?;
        }
        if let Some(c) = &self.cartan {
            writeln!(f, "cartan matrix:")?;
            for i in 0..c.matrix.rows() {
                writeln!(f, "  [{}]", join(c.matrix.row(i)))?;
            }
            writeln!(f, "  determinant:           {}", c.determinant)?;
            writeln!(f, "  rank:                  {}", c.rank)?;
            writeln!(
                f,
                "  smith normal form:     diag({})",
                join(&c.snf_diagonal)
            )?;
        }
        if let Some(r) = &self.retraction {
            writeln!(f, "retraction chain:")?;
            for step in &r.chain {
                writeln!(
                    f,
                    "  ({}) rotation offset {}",
                    join(&step.series),
                    step.rotation_offset
                )?;
            }
            writeln!(f, "  terminal:              ({})", join(&r.terminal))?;
            writeln!(
                f,
                "  terminal is simple:    {}",
                yes_no(r.terminal_is_simple)
            )?;
        }
        Ok(())
    }
}
