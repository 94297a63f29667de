//! The individual verifications run by the census on each algebra.

use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::cartan::{
    cartan_entry, cartan_matrix, circulant_cartan_entry, expected_snf_diagonal,
    linear_solution_report, smith_normal_form, Enumeration, ExactMatrix, SmithForm,
};
use crate::kupisch::{KupischSeries, Shape};
use crate::oracle::{HomDimension, HomologyOracle, SerialModule};
use crate::quiver::{gorenstein_criteria, CycleSummary, Decisions, ResolutionQuiver};
use crate::retraction::{collapse_last_vertex, RetractionChain};

macro_rules! checks {
    ($($variant:ident => $id:literal : $about:literal,)*) => {
        /// Identifier of one census check.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId {
            $($variant,)*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $id,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $about,)*
                }
            }
        }

        impl FromStr for CheckId {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($id => Ok(CheckId::$variant),)*
                    other => Err(format!("unknown check `{other}`")),
                }
            }
        }
    };
}

checks! {
    Normalization => "normalization":
        "normalize succeeds and yields a normalized rotation",
    GammaClosedForm => "gamma-closed-form":
        "gamma computed from socles equals i + c_i mod n",
    CartanSums => "cartan-sums":
        "Cartan column sums are c_j and row sums are injective lengths d_j",
    BlackFastPath => "black-fast-path":
        "length-based black tests agree with pd != 1 and id != 1",
    FunctionalGraph => "functional-graph":
        "one cycle per component; all cycles share a positive integer weight",
    FiniteGlobalDimension => "finite-global-dimension":
        "connected quiver of weight 1 iff the oracle's global dimension is finite",
    GorensteinDecision => "gorenstein-decision":
        "black-cycle decision agrees with finiteness of id A and pd DA",
    GorensteinCriteria => "gorenstein-criteria":
        "infinite global dimension: the four Gorenstein criteria agree with the oracle",
    CyclicSetCardinality => "cyclic-set-cardinality":
        "gamma-cyclic and psi-cyclic sets have the same size",
    OppositeInvariance => "opposite-invariance":
        "psi-quiver cycle count and weight match; C and C^T share a Smith form",
    BlackCycleIsPsiCycle => "black-cycle-psi-cycle":
        "a cycle is black iff its vertices form a psi-cycle iff all are psi-cyclic",
    PsiPreimageSyzygy => "psi-preimage-syzygy":
        "for non-projective S, psi(T) = S iff T is a composition factor of the second syzygy of S",
    PsiCyclicParity => "psi-cyclic-parity":
        "S is psi-cyclic iff pd S is not odd",
    PsiCyclicInfinitePd => "psi-cyclic-infinite-pd":
        "global dimension infinite iff psi-cyclic simples are those of infinite pd",
    CosyzygySocle => "cosyzygy-socle":
        "id M <= 1 or the socle of the second cosyzygy of M is psi(soc M)",
    BlackIffPsiGamma => "black-psi-gamma":
        "pd S != 1 iff psi(gamma(S)) = S",
    InfiniteInjectiveDimension => "infinite-injective-dimension":
        "infinite global dimension: infinite id P (pd I) iff proper submodule (quotient) of a cyclic cover",
    SnfShape => "snf-shape":
        "Smith form of C is diag(1,..,1,w,0,..,0) with c - 1 zeros; certificates hold",
    BlackRank => "black-rank":
        "rank [C | C^T] = rank [C ; C^T], and equals n + 1 - b when b > 0",
    Determinant => "determinant":
        "det C = w when connected, 0 otherwise; det C = 1 iff finite global dimension",
    LinearSolutions => "linear-solutions":
        "cycle indicators span the solutions of C x = w 1, nonnegative solutions, black-cycle rank",
    RetractionChain => "retraction-chain":
        "each left retraction preserves cycles, weight and det and collapses the last vertex",
    RotationInvariance => "rotation-invariance":
        "decisions, cycle data and Smith form agree on every rotation",
    SelfinjectiveLaw => "selfinjective-law":
        "(m,..,m) has gcd(m,n) cycles of weight m/gcd(m,n) and a circulant Cartan matrix",
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of one check on one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// Not run within the configured budget.
    Skip(String),
    /// The check's hypotheses do not hold for this algebra.
    NotApplicable,
    /// A violation outside the proven range (simple projective present),
    /// recorded without failing the run.
    Finding(String),
}

fn require(condition: bool, detail: impl FnOnce() -> String) -> Outcome {
    if condition {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

/// Everything the checks share for one algebra, computed once.
pub struct AlgebraContext<'a> {
    pub series: &'a KupischSeries,
    pub oracle: HomologyOracle<'a>,
    pub gamma: ResolutionQuiver,
    pub gamma_cycles: CycleSummary,
    pub psi: ResolutionQuiver,
    pub psi_cycles: CycleSummary,
    pub decisions: Decisions,
    pub pd: Vec<HomDimension>,
    pub id: Vec<HomDimension>,
    pub global_dimension: HomDimension,
    budget: u64,
    cartan: OnceCell<ExactMatrix>,
    snf: OnceCell<SmithForm>,
}

impl<'a> AlgebraContext<'a> {
    pub fn new(series: &'a KupischSeries, budget: u64) -> Result<Self, String> {
        let oracle = HomologyOracle::new(series);
        let gamma = ResolutionQuiver::build(series);
        let psi = ResolutionQuiver::build_psi(series);
        let gamma_cycles = gamma.cycles().map_err(|e| e.to_string())?;
        let psi_cycles = psi.cycles().map_err(|e| e.to_string())?;
        let pd = oracle.simple_projective_dimensions();
        let id = oracle.simple_injective_dimensions();
        let global_dimension = pd.iter().copied().max().unwrap_or(HomDimension::Finite(0));
        Ok(AlgebraContext {
            decisions: Decisions::from_summary(&gamma_cycles),
            series,
            oracle,
            gamma,
            gamma_cycles,
            psi,
            psi_cycles,
            pd,
            id,
            global_dimension,
            budget,
            cartan: OnceCell::new(),
            snf: OnceCell::new(),
        })
    }

    fn n(&self) -> usize {
        self.series.len()
    }

    fn cartan(&self) -> &ExactMatrix {
        self.cartan.get_or_init(|| cartan_matrix(self.series))
    }

    fn snf(&self) -> &SmithForm {
        self.snf
            .get_or_init(|| smith_normal_form(self.cartan(), true))
    }

    fn weight(&self) -> u64 {
        self.gamma_cycles.weight().unwrap_or(0)
    }

    fn psi_cyclic(&self) -> BTreeSet<usize> {
        self.psi_cycles.cyclic_vertices()
    }

    fn gamma_cyclic(&self) -> BTreeSet<usize> {
        self.gamma_cycles.cyclic_vertices()
    }

    /// Statements proven only without simple projectives are reported as
    /// findings on linear series.
    fn soften(&self, outcome: Outcome) -> Outcome {
        match (outcome, self.series.shape()) {
            (Outcome::Fail(detail), Shape::Linear) => Outcome::Finding(detail),
            (other, _) => other,
        }
    }

    pub fn run(&self, check: CheckId) -> Outcome {
        match check {
            CheckId::Normalization => self.normalization(),
            CheckId::GammaClosedForm => self.gamma_closed_form(),
            CheckId::CartanSums => self.cartan_sums(),
            CheckId::BlackFastPath => self.black_fast_path(),
            CheckId::FunctionalGraph => self.functional_graph(),
            CheckId::FiniteGlobalDimension => self.finite_global_dimension(),
            CheckId::GorensteinDecision => self.gorenstein_decision(),
            CheckId::GorensteinCriteria => self.gorenstein_criteria(),
            CheckId::CyclicSetCardinality => self.cyclic_set_cardinality(),
            CheckId::OppositeInvariance => self.opposite_invariance(),
            CheckId::BlackCycleIsPsiCycle => self.black_cycle_is_psi_cycle(),
            CheckId::PsiPreimageSyzygy => self.soften(self.psi_preimage_syzygy()),
            CheckId::PsiCyclicParity => self.soften(self.psi_cyclic_parity()),
            CheckId::PsiCyclicInfinitePd => self.soften(self.psi_cyclic_infinite_pd()),
            CheckId::CosyzygySocle => self.cosyzygy_socle(),
            CheckId::BlackIffPsiGamma => self.black_iff_psi_gamma(),
            CheckId::InfiniteInjectiveDimension => self.infinite_injective_dimension(),
            CheckId::SnfShape => self.snf_shape(),
            CheckId::BlackRank => self.black_rank(),
            CheckId::Determinant => self.determinant(),
            CheckId::LinearSolutions => self.linear_solutions(),
            CheckId::RetractionChain => self.retraction_chain(),
            CheckId::RotationInvariance => self.rotation_invariance(),
            CheckId::SelfinjectiveLaw => self.selfinjective_law(),
        }
    }

    fn normalization(&self) -> Outcome {
        let normalized = match self.series.normalize() {
            Ok(n) => n,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        let rotation = self.series.rotated(normalized.rotation_offset);
        require(
            normalized.is_normalized() && rotation.as_ref() == Ok(&normalized.series),
            || {
                format!(
                    "normalized to {} with offset {}",
                    normalized.series, normalized.rotation_offset
                )
            },
        )
    }

    fn gamma_closed_form(&self) -> Outcome {
        match (0..self.n()).find(|&i| self.oracle.gamma(i) != self.gamma.succ()[i]) {
            None => Outcome::Pass,
            Some(i) => Outcome::Fail(format!(
                "vertex {}: oracle gamma {} but closed form {}",
                i + 1,
                self.oracle.gamma(i) + 1,
                self.gamma.succ()[i] + 1
            )),
        }
    }

    fn cartan_sums(&self) -> Outcome {
        let n = self.n();
        for (j, &d) in self.oracle.injective_lengths().iter().enumerate() {
            let column: usize = (0..n).map(|i| cartan_entry(self.series, i, j)).sum();
            if column != self.series.length(j) {
                return Outcome::Fail(format!("column {} sums to {column}", j + 1));
            }
            let row: usize = (0..n).map(|k| cartan_entry(self.series, j, k)).sum();
            if row != d {
                return Outcome::Fail(format!("row {} sums to {row}, d = {d}", j + 1));
            }
        }
        Outcome::Pass
    }

    fn black_fast_path(&self) -> Outcome {
        for v in 0..self.n() {
            if self.gamma.is_black(v) != (self.pd[v] != HomDimension::Finite(1)) {
                return Outcome::Fail(format!("vertex {}: pd = {}", v + 1, self.pd[v]));
            }
            if self.psi.is_black(v) != (self.id[v] != HomDimension::Finite(1)) {
                return Outcome::Fail(format!("vertex {}: id = {}", v + 1, self.id[v]));
            }
        }
        Outcome::Pass
    }

    fn functional_graph(&self) -> Outcome {
        // components by union-find, independent of the cycle walk
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for (v, &w) in self.gamma.succ().iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            parent[a] = b;
        }
        let components = (0..n).filter(|&v| find(&mut parent, v) == v).count();
        let summary = &self.gamma_cycles;
        require(
            components == summary.component_count
                && summary.weight().is_some_and(|w| w >= 1)
                && summary.cycles.iter().all(|c| {
                    c.vertices.iter().enumerate().all(|(k, &v)| {
                        self.gamma.succ()[v] == c.vertices[(k + 1) % c.vertices.len()]
                    })
                }),
            || format!("{components} components, cycles {:?}", summary.cycles),
        )
    }

    fn finite_global_dimension(&self) -> Outcome {
        require(
            self.decisions.finite_global_dimension == self.global_dimension.is_finite(),
            || {
                format!(
                    "decision {} but gldim {}",
                    self.decisions.finite_global_dimension, self.global_dimension
                )
            },
        )
    }

    fn gorenstein_decision(&self) -> Outcome {
        let oracle = self.oracle.is_gorenstein();
        require(self.decisions.gorenstein == oracle, || {
            format!("decision {} but oracle {oracle}", self.decisions.gorenstein)
        })
    }

    fn gorenstein_criteria(&self) -> Outcome {
        if self.global_dimension.is_finite() {
            return Outcome::NotApplicable;
        }
        let oracle = self.oracle.is_gorenstein();
        match gorenstein_criteria(self.series) {
            Ok(criteria) => require(criteria.iter().all(|&c| c == oracle), || {
                format!("criteria {criteria:?} but oracle {oracle}")
            }),
            Err(e) => Outcome::Fail(e.to_string()),
        }
    }

    fn cyclic_set_cardinality(&self) -> Outcome {
        let (g, p) = (self.gamma_cyclic(), self.psi_cyclic());
        require(g.len() == p.len(), || {
            format!("gamma-cyclic {g:?}, psi-cyclic {p:?}")
        })
    }

    fn opposite_invariance(&self) -> Outcome {
        let (g, p) = (&self.gamma_cycles, &self.psi_cycles);
        let transpose = smith_normal_form(&self.cartan().transpose(), false);
        require(
            g.component_count == p.component_count
                && g.weight() == p.weight()
                && transpose.diagonal == self.snf().diagonal,
            || {
                format!(
                    "gamma: {} cycles of weight {:?}; psi: {} cycles of weight {:?}",
                    g.component_count,
                    g.weight(),
                    p.component_count,
                    p.weight()
                )
            },
        )
    }

    fn black_cycle_is_psi_cycle(&self) -> Outcome {
        let psi_cycles: BTreeSet<BTreeSet<usize>> = self
            .psi_cycles
            .cycles
            .iter()
            .map(|c| c.vertices.iter().copied().collect())
            .collect();
        let psi_cyclic = self.psi_cyclic();
        for cycle in &self.gamma_cycles.cycles {
            let set: BTreeSet<usize> = cycle.vertices.iter().copied().collect();
            let forms_psi_cycle = psi_cycles.contains(&set);
            let all_psi_cyclic = set.is_subset(&psi_cyclic);
            if cycle.black != forms_psi_cycle || cycle.black != all_psi_cyclic {
                return Outcome::Fail(format!(
                    "cycle {:?}: black {}, psi-cycle {forms_psi_cycle}, all psi-cyclic {all_psi_cyclic}",
                    one_based(&cycle.vertices),
                    cycle.black
                ));
            }
        }
        Outcome::Pass
    }

    fn psi_preimage_syzygy(&self) -> Outcome {
        let n = self.n();
        for s in 0..n {
            let simple = SerialModule::simple(s);
            let Some(first) = self.oracle.syzygy(simple) else {
                continue;
            };
            let factors: BTreeSet<usize> = self
                .oracle
                .syzygy(first)
                .map(|m| m.composition_factors(n).collect())
                .unwrap_or_default();
            for t in 0..n {
                if (self.oracle.psi(t) == s) != factors.contains(&t) {
                    return Outcome::Fail(format!(
                        "S = S_{}, T = S_{}: psi(T) = S_{}, second syzygy factors {:?}",
                        s + 1,
                        t + 1,
                        self.oracle.psi(t) + 1,
                        one_based(&factors.iter().copied().collect::<Vec<_>>())
                    ));
                }
            }
        }
        Outcome::Pass
    }

    fn psi_cyclic_parity(&self) -> Outcome {
        let psi_cyclic = self.psi_cyclic();
        match (0..self.n()).find(|v| psi_cyclic.contains(v) == self.pd[*v].is_odd()) {
            None => Outcome::Pass,
            Some(v) => Outcome::Fail(format!(
                "S_{}: psi-cyclic {}, pd {}",
                v + 1,
                psi_cyclic.contains(&v),
                self.pd[v]
            )),
        }
    }

    fn psi_cyclic_infinite_pd(&self) -> Outcome {
        let infinite: BTreeSet<usize> =
            (0..self.n()).filter(|&v| !self.pd[v].is_finite()).collect();
        let psi_cyclic = self.psi_cyclic();
        let infinite_gldim = !self.global_dimension.is_finite();
        require(infinite_gldim == (psi_cyclic == infinite), || {
            format!(
                "gldim {}, psi-cyclic {:?}, infinite pd {:?}",
                self.global_dimension,
                one_based(&psi_cyclic.iter().copied().collect::<Vec<_>>()),
                one_based(&infinite.iter().copied().collect::<Vec<_>>())
            )
        })
    }

    fn cosyzygy_socle(&self) -> Outcome {
        let n = self.n();
        for module in self.oracle.indecomposables() {
            if matches!(self.oracle.injective_dimension(module), HomDimension::Finite(k) if k <= 1)
            {
                continue;
            }
            let second = self
                .oracle
                .cosyzygy(module)
                .and_then(|m| self.oracle.cosyzygy(m));
            let expected = self.oracle.psi(module.socle(n));
            if second.map(|m| m.socle(n)) != Some(expected) {
                return Outcome::Fail(format!(
                    "module (top {}, length {}): second cosyzygy {:?}, psi(soc) = S_{}",
                    module.top + 1,
                    module.length,
                    second,
                    expected + 1
                ));
            }
        }
        Outcome::Pass
    }

    fn black_iff_psi_gamma(&self) -> Outcome {
        let found = (0..self.n()).find(|&v| {
            (self.pd[v] != HomDimension::Finite(1)) != (self.oracle.psi(self.oracle.gamma(v)) == v)
        });
        match found {
            None => Outcome::Pass,
            Some(v) => Outcome::Fail(format!("S_{}: pd {}", v + 1, self.pd[v])),
        }
    }

    fn infinite_injective_dimension(&self) -> Outcome {
        if self.global_dimension.is_finite() {
            return Outcome::NotApplicable;
        }
        let n = self.n();
        let o = &self.oracle;
        let gamma_cyclic = self.gamma_cyclic();
        let psi_cyclic = self.psi_cyclic();
        for i in 0..n {
            let p = o.projective(i);
            let infinite = !o.injective_dimension(p).is_finite();
            let predicted = gamma_cyclic.iter().any(|&s| {
                let cover = o.projective(s);
                cover.socle(n) == p.socle(n) && p.length < cover.length
            });
            if infinite != predicted {
                return Outcome::Fail(format!("P_{}: id infinite {infinite}", i + 1));
            }
        }
        for j in 0..n {
            let e = o.injective(j);
            let infinite = !o.projective_dimension(e).is_finite();
            let predicted = psi_cyclic.iter().any(|&s| {
                let envelope = o.injective(s);
                envelope.top == e.top && e.length < envelope.length
            });
            if infinite != predicted {
                return Outcome::Fail(format!("I_{}: pd infinite {infinite}", j + 1));
            }
        }
        Outcome::Pass
    }

    fn snf_shape(&self) -> Outcome {
        let snf = self.snf();
        let c = self.gamma_cycles.component_count;
        let expected = expected_snf_diagonal(self.n(), c, self.weight());
        require(
            snf.diagonal == expected
                && snf.rank == self.n() + 1 - c
                && self.cartan().rank() == snf.rank
                && snf.has_divisibility_chain()
                && snf.certificates_hold(self.cartan()) == Some(true),
            || format!("diagonal {:?}, expected {:?}", snf.diagonal, expected),
        )
    }

    fn black_rank(&self) -> Outcome {
        let c = self.cartan();
        let t = c.transpose();
        let horizontal = c.hconcat(&t).rank();
        let vertical = c.vstack(&t).rank();
        let b = self.gamma_cycles.black_count();
        require(
            horizontal == vertical && (b == 0 || horizontal == self.n() + 1 - b),
            || format!("rank [C|C^T] = {horizontal}, rank [C;C^T] = {vertical}, b = {b}"),
        )
    }

    fn determinant(&self) -> Outcome {
        let det = self.cartan().determinant();
        let expected = if self.gamma_cycles.component_count == 1 {
            BigInt::from(self.weight())
        } else {
            BigInt::from(0)
        };
        require(
            det == expected && (det == BigInt::from(1)) == self.global_dimension.is_finite(),
            || {
                format!(
                    "det {det}, expected {expected}, gldim {}",
                    self.global_dimension
                )
            },
        )
    }

    fn linear_solutions(&self) -> Outcome {
        let report =
            linear_solution_report(self.series, &self.gamma_cycles, self.cartan(), self.budget);
        if !report.cycle_indicators_maximal || !report.black_cycles_rank {
            return Outcome::Fail(format!("{report:?}"));
        }
        match report.nonnegative_solutions {
            Enumeration::Checked { holds: true } => Outcome::Pass,
            Enumeration::Checked { holds: false } => Outcome::Fail(format!("{report:?}")),
            Enumeration::Skipped { candidates, budget } => Outcome::Skip(format!(
                "nonnegative enumeration of {} candidates exceeds budget {budget}",
                candidates.map_or("overflowing".to_string(), |c| c.to_string())
            )),
        }
    }

    fn retraction_chain(&self) -> Outcome {
        let chain = match RetractionChain::compute(self.series) {
            Ok(chain) => chain,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        for (from, to) in chain.transitions() {
            if let Err(detail) = check_retraction_step(&from.series, to) {
                return Outcome::Fail(format!("{} -> {to}: {detail}", from.series));
            }
        }
        let ordered = chain
            .steps
            .windows(2)
            .all(|w| w[1].series.len() + 1 == w[0].series.len())
            && chain.steps.iter().all(|s| s.is_normalized());
        require(
            ordered
                && chain.terminal.is_selfinjective()
                && chain.terminal_is_simple() == self.decisions.finite_global_dimension
                && chain.terminal_is_simple() == self.global_dimension.is_finite(),
            || {
                format!(
                    "terminal {}, gldim {}",
                    chain.terminal, self.global_dimension
                )
            },
        )
    }

    fn rotation_invariance(&self) -> Outcome {
        if self.series.shape() == Shape::Linear {
            return Outcome::NotApplicable;
        }
        let reference = (
            self.decisions,
            self.gamma_cycles.component_count,
            self.gamma_cycles.weight(),
            self.snf().diagonal.clone(),
        );
        for k in 1..self.n() {
            let rotated = match self.series.rotated(k) {
                Ok(r) => r,
                Err(e) => return Outcome::Fail(e.to_string()),
            };
            let summary = match ResolutionQuiver::build(&rotated).cycles() {
                Ok(s) => s,
                Err(e) => return Outcome::Fail(e.to_string()),
            };
            let snf = smith_normal_form(&cartan_matrix(&rotated), false);
            let observed = (
                Decisions::from_summary(&summary),
                summary.component_count,
                summary.weight(),
                snf.diagonal,
            );
            if observed != reference {
                return Outcome::Fail(format!("rotation {rotated} differs: {observed:?}"));
            }
        }
        Outcome::Pass
    }

    fn selfinjective_law(&self) -> Outcome {
        if self.series.shape() != Shape::Cyclic || !self.series.is_selfinjective() {
            return Outcome::NotApplicable;
        }
        let (n, m) = (self.n(), self.series.length(0));
        let g = n.gcd(&m);
        let cycles_ok = self.gamma_cycles.component_count == g
            && self
                .gamma_cycles
                .cycles
                .iter()
                .all(|c| c.weight == (m / g) as u64);
        let circulant_ok = (0..n).all(|i| {
            (0..n).all(|j| {
                cartan_entry(self.series, i, j) == circulant_cartan_entry(n, m, i + 1, j + 1)
            })
        });
        require(cycles_ok && circulant_ok, || {
            format!(
                "{} cycles, expected {g} of weight {}",
                self.gamma_cycles.component_count,
                m / g
            )
        })
    }
}

/// One left retraction `A -> L(A)` with `A` normalized.
pub fn check_retraction_step(from: &KupischSeries, to: &KupischSeries) -> Result<(), String> {
    let n = from.len();
    let f = ResolutionQuiver::build(from);
    let g = ResolutionQuiver::build(to);
    for i in 0..n - 1 {
        if collapse_last_vertex(f.succ()[i], n) != g.succ()[i] {
            return Err(format!("collapsed successor differs at vertex {}", i + 1));
        }
        // c_i + i = kn + j  implies  c'_i + i = k(n-1) + j  (1-based i, j)
        let (i1, j1) = (i + 1, f.succ()[i] + 1);
        let k = (from.length(i) + i1 - j1) / n;
        if to.length(i) + i1 != k * (n - 1) + j1 {
            return Err(format!("successor arithmetic fails at vertex {i1}"));
        }
    }
    let before = f.cycles().map_err(|e| e.to_string())?;
    let after = g.cycles().map_err(|e| e.to_string())?;
    if before.component_count != after.component_count || before.weight() != after.weight() {
        return Err(format!(
            "cycles {} (weight {:?}) became {} (weight {:?})",
            before.component_count,
            before.weight(),
            after.component_count,
            after.weight()
        ));
    }
    let projective_on_cycle =
        from.has_simple_projective() && before.cyclic_vertices().contains(&(n - 1));
    if !projective_on_cycle {
        let sizes = |s: &CycleSummary| {
            let mut v: Vec<usize> = s.cycles.iter().map(|c| c.size).collect();
            v.sort_unstable();
            v
        };
        if sizes(&before) != sizes(&after) {
            return Err("cycle sizes changed".to_string());
        }
    }
    let (d0, d1) = (
        cartan_matrix(from).determinant(),
        cartan_matrix(to).determinant(),
    );
    if d0 != d1 {
        return Err(format!("determinant {d0} became {d1}"));
    }
    Ok(())
}

fn one_based(vertices: &[usize]) -> Vec<usize> {
    vertices.iter().map(|v| v + 1).collect()
}
