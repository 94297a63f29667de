//! Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails. Exhaustive criteria tolerate zero mismatches. Runs
//! without the libtest harness so the lines always appear in `cargo test`
//! output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use nakayama_core::cartan::{
    cartan_matrix, circulant_cartan_entry, expected_snf_diagonal, smith_normal_form,
};
use nakayama_core::census::{
    algebras, check_retraction_step, verify_all_with_jobs, CensusConfig, CensusReport, CheckId,
};
use nakayama_core::quiver::{gorenstein_criteria, has_finite_global_dimension, is_gorenstein};
use nakayama_core::{
    analyze, HomDimension, HomologyOracle, KupischSeries, ResolutionQuiver, RetractionChain,
    Sections,
};

/// Census range for the exhaustive criteria.
const N_MAX: usize = 6;
const C_MAX: usize = 9;
/// Single-threaded wall-clock limit for the exhaustive finite-global-dimension run.
const CENSUS_TIME_LIMIT: Duration = Duration::from_secs(300);
/// Wall-clock limit for analyzing one series with a million vertices.
const LARGE_ANALYSIS_TIME_LIMIT: Duration = Duration::from_secs(2);
const LARGE_N: usize = 1_000_000;
const LARGE_C_MAX: usize = 1_000_000;
const LARGE_SEED: u64 = 0x5eed_cafe;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(mismatches: &[String], total: usize, what: &str) -> Verdict {
    let passed = mismatches.is_empty();
    let mut detail = format!("{}/{} {what}", total - mismatches.len(), total);
    if let Some(first) = mismatches.first() {
        detail.push_str(&format!("; first mismatch: {first}"));
    }
    Verdict { passed, detail }
}

fn census_failures(report: &CensusReport, ids: &[CheckId]) -> Vec<String> {
    ids.iter()
        .filter_map(|&id| {
            let stats = report.stats(id)?;
            (stats.failures + stats.skips > 0).then(|| {
                let sample = stats
                    .first_counterexample
                    .as_ref()
                    .or(stats.first_skip.as_ref())
                    .map(|c| format!(" at ({}) {}", c.series, c.detail))
                    .unwrap_or_default();
                format!(
                    "{id}: {} failures, {} skips{sample}",
                    stats.failures, stats.skips
                )
            })
        })
        .collect()
}

fn with_census(mut v: Verdict, report: &CensusReport, ids: &[CheckId]) -> Verdict {
    let failures = census_failures(report, ids);
    if !failures.is_empty() {
        v.passed = false;
        v.detail
            .push_str(&format!("; census: {}", failures.join("; ")));
    }
    v
}

fn finite_global_dimension(all: &[KupischSeries], report: &CensusReport) -> Verdict {
    let start = Instant::now();
    let mismatches: Vec<String> = all
        .iter()
        .filter_map(|s| {
            let decided = has_finite_global_dimension(s).expect("census series are connected");
            let gldim = HomologyOracle::new(s).global_dimension();
            (decided != gldim.is_finite())
                .then(|| format!("({s}) decided {decided}, oracle {gldim}"))
        })
        .collect();
    let elapsed = start.elapsed();
    let mut v = verdict(&mismatches, all.len(), "agree with the oracle");
    v.detail.push_str(&format!(
        " in {} ms (limit {} s)",
        elapsed.as_millis(),
        CENSUS_TIME_LIMIT.as_secs()
    ));
    v.passed &= elapsed < CENSUS_TIME_LIMIT && report.elapsed < CENSUS_TIME_LIMIT;
    with_census(v, report, &[CheckId::FiniteGlobalDimension])
}

fn gorenstein(all: &[KupischSeries], report: &CensusReport) -> Verdict {
    let infinite: Vec<&KupischSeries> = all
        .iter()
        .filter(|s| !HomologyOracle::new(s).global_dimension().is_finite())
        .collect();
    let mismatches: Vec<String> = infinite
        .iter()
        .filter_map(|s| {
            let expected = HomologyOracle::new(s).is_gorenstein();
            let decided = is_gorenstein(s).expect("connected");
            let criteria = gorenstein_criteria(s).expect("connected");
            (decided != expected || criteria.iter().any(|&c| c != expected)).then(|| {
                format!("({s}) oracle {expected}, decided {decided}, criteria {criteria:?}")
            })
        })
        .collect();
    let v = verdict(
        &mismatches,
        infinite.len(),
        "of infinite global dimension agree on all five tests",
    );
    with_census(
        v,
        report,
        &[CheckId::GorensteinDecision, CheckId::GorensteinCriteria],
    )
}

fn snf_shape(all: &[KupischSeries], report: &CensusReport) -> Verdict {
    let mismatches: Vec<String> = all
        .iter()
        .filter_map(|s| {
            let n = s.len();
            let quiver = ResolutionQuiver::build(s);
            let summary = quiver.cycles().expect("connected");
            let c = summary.component_count;
            let w = summary.weight().expect("integer weight");
            let matrix = cartan_matrix(s);
            let snf = smith_normal_form(&matrix, false);
            if snf.diagonal != expected_snf_diagonal(n, c, w) {
                return Some(format!("({s}) diagonal {:?}", snf.diagonal));
            }
            if snf.rank != n + 1 - c {
                return Some(format!("({s}) rank {} with {c} cycles", snf.rank));
            }
            let b = summary.black_count();
            let both = matrix.hconcat(&matrix.transpose()).rank();
            (b > 0 && both != n + 1 - b).then(|| format!("({s}) rank [C | C^T] = {both}, b = {b}"))
        })
        .collect();
    let v = verdict(
        &mismatches,
        all.len(),
        "match diag(1,..,1,w,0,..,0) and both rank laws",
    );
    with_census(v, report, &[CheckId::SnfShape, CheckId::BlackRank])
}

fn fixtures() -> Verdict {
    let all = Sections {
        oracle: true,
        cartan: true,
        retraction: true,
    };
    let big = |v: &[i64]| v.iter().copied().map(BigInt::from).collect::<Vec<_>>();
    let mut problems = Vec::new();
    let mut expect = |label: &str, ok: bool| {
        if !ok {
            problems.push(label.to_string());
        }
    };

    let r = analyze("2,3,3", all).unwrap();
    let q = &r.resolution_quiver;
    let c = r.cartan.as_ref().unwrap();
    expect("(2,3,3) two cycles", q.cycles.len() == 2);
    expect("(2,3,3) weights 1", q.cycles.iter().all(|c| c.weight == 1));
    expect("(2,3,3) not gorenstein", !r.decisions.gorenstein);
    expect("(2,3,3) snf", c.snf_diagonal == big(&[1, 1, 0]));

    let r = analyze("2,3,3,3", all).unwrap();
    let q = &r.resolution_quiver;
    let c = r.cartan.as_ref().unwrap();
    expect(
        "(2,3,3,3) one cycle {1,3,2}",
        q.cycles.len() == 1 && q.cycles[0].vertices == [1, 3, 2],
    );
    expect("(2,3,3,3) weight 2", q.cycles[0].weight == 2);
    expect(
        "(2,3,3,3) gorenstein",
        r.decisions.gorenstein && r.oracle.as_ref().unwrap().gorenstein,
    );
    expect(
        "(2,3,3,3) infinite gldim",
        !r.decisions.finite_global_dimension,
    );
    expect(
        "(2,3,3,3) oracle gldim infinite",
        r.oracle.as_ref().unwrap().global_dimension == HomDimension::Infinite,
    );
    expect("(2,3,3,3) snf", c.snf_diagonal == big(&[1, 1, 1, 2]));
    expect("(2,3,3,3) det 2", c.determinant == BigInt::from(2));

    let r = analyze("2,3", all).unwrap();
    expect("(2,3) finite gldim", r.decisions.finite_global_dimension);
    expect(
        "(2,3) oracle gldim 2",
        r.oracle.as_ref().unwrap().global_dimension == HomDimension::Finite(2),
    );
    expect(
        "(2,3) det 1",
        r.cartan.as_ref().unwrap().determinant == BigInt::from(1),
    );

    let r = analyze("2,2", all).unwrap();
    expect("(2,2) infinite gldim", !r.decisions.finite_global_dimension);
    expect("(2,2) selfinjective", r.selfinjective);
    expect("(2,2) gorenstein", r.decisions.gorenstein);
    expect(
        "(2,2) snf",
        r.cartan.as_ref().unwrap().snf_diagonal == big(&[1, 0]),
    );

    Verdict {
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            "(2,3,3), (2,3,3,3), (2,3), (2,2) match".to_string()
        } else {
            format!("mismatches: {}", problems.join(", "))
        },
    }
}

fn selfinjective_law() -> Verdict {
    let mut mismatches = Vec::new();
    let mut total = 0;
    for n in 2..=8 {
        for m in 2..=12 {
            total += 1;
            let s = KupischSeries::new(vec![m; n]).unwrap();
            let summary = ResolutionQuiver::build(&s).cycles().unwrap();
            let g = m.gcd(&n);
            let weights_ok = summary.cycles.iter().all(|c| c.weight == (m / g) as u64);
            let matrix = cartan_matrix(&s);
            let circulant = (0..n).all(|i| {
                (0..n).all(|j| {
                    matrix[(i, j)] == BigInt::from(circulant_cartan_entry(n, m, i + 1, j + 1))
                })
            });
            if summary.component_count != g || !weights_ok || !circulant {
                mismatches.push(format!(
                    "n={n} m={m}: {} cycles, weights ok {weights_ok}, circulant {circulant}",
                    summary.component_count
                ));
            }
        }
    }
    verdict(
        &mismatches,
        total,
        "(m,..,m) with 2<=n<=8, 2<=m<=12 obey the gcd law",
    )
}

fn retraction(all: &[KupischSeries], report: &CensusReport) -> Verdict {
    let mismatches: Vec<String> = all
        .iter()
        .filter_map(|s| {
            let chain = match RetractionChain::compute(s) {
                Ok(c) => c,
                Err(e) => return Some(format!("({s}) {e}")),
            };
            for (from, to) in chain.transitions() {
                if let Err(e) = check_retraction_step(&from.series, to) {
                    return Some(format!("({s}) step {} -> {to}: {e}", from.series));
                }
            }
            let finite = HomologyOracle::new(s).global_dimension().is_finite();
            (!chain.terminal.is_selfinjective() || chain.terminal_is_simple() != finite)
                .then(|| format!("({s}) terminal {}", chain.terminal))
        })
        .collect();
    let v = verdict(
        &mismatches,
        all.len(),
        "chains keep cycles, weight, det and collapse correctly",
    );
    with_census(v, report, &[CheckId::RetractionChain])
}

const SYZYGY_CHECKS: &[CheckId] = &[
    CheckId::CyclicSetCardinality,
    CheckId::BlackCycleIsPsiCycle,
    CheckId::PsiPreimageSyzygy,
    CheckId::PsiCyclicParity,
    CheckId::PsiCyclicInfinitePd,
    CheckId::CosyzygySocle,
    CheckId::BlackIffPsiGamma,
    CheckId::InfiniteInjectiveDimension,
    CheckId::OppositeInvariance,
];

fn syzygy_suite(report: &CensusReport) -> Verdict {
    let failures = census_failures(report, SYZYGY_CHECKS);
    let mut findings = Vec::new();
    let mut passes = 0;
    for &id in SYZYGY_CHECKS {
        let stats = report
            .stats(id)
            .expect("syzygy checks are part of the census");
        passes += stats.passes;
        if let Some(f) = &stats.first_finding {
            findings.push(format!(
                "{id}: {} findings, first ({}) {}",
                stats.findings, f.series, f.detail
            ));
        }
    }
    let mut detail = format!(
        "{} checks, {passes} passing evaluations, ",
        SYZYGY_CHECKS.len()
    );
    if findings.is_empty() {
        detail.push_str("zero findings");
    } else {
        detail.push_str(&format!("findings: {}", findings.join("; ")));
    }
    if !failures.is_empty() {
        detail.push_str(&format!("; failures: {}", failures.join("; ")));
    }
    Verdict {
        passed: failures.is_empty(),
        detail,
    }
}

/// Random admissible cyclic series: starts at the maximum length so the
/// wrap-around inequality holds, then steps down by at most one.
fn large_cyclic_series() -> String {
    let mut rng = StdRng::seed_from_u64(LARGE_SEED);
    let mut c = LARGE_C_MAX;
    let mut out = String::with_capacity(LARGE_N * 8);
    for i in 0..LARGE_N {
        if i > 0 {
            out.push(',');
            let step: i64 = if rng.gen_bool(0.5) {
                -1
            } else {
                rng.gen_range(0..=3)
            };
            c = (c as i64 + step).clamp(2, LARGE_C_MAX as i64) as usize;
        }
        out.push_str(&c.to_string());
    }
    out
}

fn performance() -> Verdict {
    let text = large_cyclic_series();
    let start = Instant::now();
    let report = analyze(&text, Sections::default());
    let elapsed = start.elapsed();
    match report {
        Ok(r) => Verdict {
            passed: elapsed < LARGE_ANALYSIS_TIME_LIMIT,
            detail: format!(
                "n = {LARGE_N}, {} cycles, finite gldim {}, gorenstein {} in {} ms (limit {} ms)",
                r.resolution_quiver.cycles.len(),
                r.decisions.finite_global_dimension,
                r.decisions.gorenstein,
                elapsed.as_millis(),
                LARGE_ANALYSIS_TIME_LIMIT.as_millis()
            ),
        },
        Err(e) => Verdict {
            passed: false,
            detail: format!("analysis failed: {e}"),
        },
    }
}

fn determinism(config: &CensusConfig, first: &CensusReport) -> Verdict {
    let reference = first.to_json(false);
    let second = verify_all_with_jobs(config, 1).unwrap().to_json(false);
    let parallel = verify_all_with_jobs(config, 4).unwrap().to_json(false);
    Verdict {
        passed: reference == second && reference == parallel,
        detail: format!(
            "repeat run identical: {}, 4-thread run identical: {}",
            reference == second,
            reference == parallel
        ),
    }
}

fn main() -> ExitCode {
    let config = CensusConfig::new(N_MAX, C_MAX).unwrap();
    let all = algebras(&config);
    let report = verify_all_with_jobs(&config, 1).unwrap();
    println!(
        "census: {} algebras (n <= {N_MAX}, c <= {C_MAX}), {} failures, {} findings, {} skips, {} ms single-threaded",
        report.algebras_checked,
        report.total_failures(),
        report.total_findings(),
        report.total_skips(),
        report.elapsed.as_millis()
    );

    let criteria: [Criterion; 9] = [
        (
            "finite global dimension decision",
            Box::new(|| finite_global_dimension(&all, &report)),
        ),
        (
            "gorenstein decision and criteria",
            Box::new(|| gorenstein(&all, &report)),
        ),
        (
            "smith normal form shape and ranks",
            Box::new(|| snf_shape(&all, &report)),
        ),
        ("worked fixtures", Box::new(fixtures)),
        ("selfinjective law", Box::new(selfinjective_law)),
        (
            "retraction chain invariants",
            Box::new(|| retraction(&all, &report)),
        ),
        (
            "syzygy and cyclicity suite",
            Box::new(|| syzygy_suite(&report)),
        ),
        ("large series performance", Box::new(performance)),
        (
            "census determinism",
            Box::new(|| determinism(&config, &report)),
        ),
    ];

    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        failed += usize::from(!v.passed);
        println!(
            "criterion {}: {} {name}: {}",
            k + 1,
            if v.passed { "PASS" } else { "FAIL" },
            v.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
