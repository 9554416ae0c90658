//! Cross-check suite: every closed form against an independent oracle, plus
//! replay of the published worked values.
//!
//! Checks run in a fixed order. Cases exceeding a capacity cap are counted as
//! skipped and never abort the suite.

use std::fmt::Debug;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use ytc_core::decomp::MAX_SHELLING_FACETS;
use ytc_core::{
    binomial_wedge, build_reduction_graph, chi_lemma_checks, dual_complex,
    dual_complex_via_alexander, dual_homotopy, helly_formula, is_cohen_macaulay, is_shellable,
    is_vertex_decomposable, krull_formula, leray_formula, leray_oracle, linearity_characterization,
    pd_formula, reduced_betti, regularity_oracle, squarefree_power_generators, vd_characterization,
    young_complex, young_homotopy, FieldTag, LemmaRange, Partition, PathIdealSpec, Result,
};

use crate::oracles;
use crate::reference;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_n: u32,
    pub max_t: u32,
    pub max_k: u32,
    pub max_cells: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_n: 10,
            max_t: 3,
            max_k: 3,
            max_cells: 10,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// No failures, but some cases exceeded a capacity cap.
    Capacity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    /// Cases attempted, skipped ones included.
    pub cases: u64,
    pub failures: u64,
    pub skipped: u64,
    #[serde(default)]
    pub counterexample: Option<String>,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub bounds: Bounds,
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// 1 if any check failed, else 2 if any case hit a cap, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else if self.checks.iter().any(|c| c.status == Status::Capacity) {
            2
        } else {
            0
        }
    }
}

type Check = fn(&Bounds) -> Tally;

/// Names and bodies of all checks, in report order.
const CHECKS: [(&str, Check); 16] = [
    ("young_example", young_example),
    ("homotopy_example", homotopy_example),
    ("reduction_graph", reduction_graph),
    ("tables", tables),
    ("pd_vs_hochster", pd_vs_hochster),
    ("leray_regularity_terai", leray_regularity_terai),
    ("homotopy_vs_homology", homotopy_vs_homology),
    ("binomial_wedge", binomial_wedges),
    ("two_routes", two_routes),
    ("dual_routes", dual_routes),
    ("generator_count", generator_count),
    ("krull_vs_transversal", krull_vs_transversal),
    ("decomposability", decomposability),
    ("helly", helly),
    ("linearity_window", linearity_window),
    ("chi_lemmas", chi_lemmas),
];

/// Runs every check; the second component holds per-check wall time.
pub fn verify_suite(bounds: Bounds) -> (VerifyReport, Vec<Duration>) {
    let mut checks = Vec::with_capacity(CHECKS.len());
    let mut timings = Vec::with_capacity(CHECKS.len());
    for (name, check) in CHECKS {
        let start = Instant::now();
        checks.push(check(&bounds).finish(name));
        timings.push(start.elapsed());
    }
    (VerifyReport { bounds, checks }, timings)
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failures: u64,
    skipped: u64,
    counterexample: Option<String>,
    capacity: Option<String>,
    note: Option<String>,
}

impl Tally {
    /// `Ok(None)` passes and `Ok(Some(why))` fails. Capacity errors skip.
    fn case(&mut self, outcome: Result<Option<String>>) {
        self.cases += 1;
        match outcome {
            Ok(None) => {}
            Ok(Some(why)) => self.fail(why),
            Err(e) if e.is_capacity() => {
                self.skipped += 1;
                self.capacity.get_or_insert_with(|| e.to_string());
            }
            Err(e) => self.fail(format!("unexpected error: {e}")),
        }
    }

    fn fail(&mut self, why: String) {
        self.failures += 1;
        self.counterexample.get_or_insert(why);
    }

    fn finish(self, name: &str) -> CheckReport {
        let status = if self.failures > 0 {
            Status::Fail
        } else if self.skipped > 0 {
            Status::Capacity
        } else {
            Status::Pass
        };
        CheckReport {
            name: name.to_string(),
            status,
            cases: self.cases,
            failures: self.failures,
            skipped: self.skipped,
            counterexample: self.counterexample,
            note: self.note.or(self.capacity),
        }
    }
}

fn mismatch<T: PartialEq + Debug>(what: String, got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("{what}: got {got:?}, expected {want:?}"))
}

/// `(n, k, t)` with `kt ≤ n ≤ max_n`, `k ≤ max_k` and `t` in the given range.
fn power_range(b: &Bounds, min_t: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for t in min_t..=b.max_t {
        for k in 1..=b.max_k {
            for n in k * t..=b.max_n {
                out.push((n, k, t));
            }
        }
    }
    out
}

fn shapes(b: &Bounds, min_t: u32) -> Vec<(Partition, u32)> {
    let mut out = Vec::new();
    for lambda in Partition::all_up_to(b.max_cells) {
        if lambda.is_empty_shape() {
            continue;
        }
        for t in min_t..=b.max_t {
            out.push((lambda.clone(), t));
        }
    }
    out
}

fn young_example(_: &Bounds) -> Tally {
    let mut tally = Tally::default();
    tally.case((|| {
        let delta = young_complex(&"5,4,2".parse()?, 3)?;
        let got: Vec<Vec<u32>> = delta
            .facets()
            .iter()
            .map(|f| f.vertices().collect())
            .collect();
        let want: Vec<Vec<u32>> = reference::YOUNG_542_T3_FACETS
            .iter()
            .map(|f| f.to_vec())
            .collect();
        Ok(mismatch("facets of (5,4,2), t=3".into(), got, want))
    })());
    tally
}

fn homotopy_example(_: &Bounds) -> Tally {
    let mut tally = Tally::default();
    let want = reference::DUAL_9_3_2_SPHERES.into_iter().collect();
    tally.case(
        dual_homotopy(9, 3, 2).map(|h| mismatch("n=9 k=3 t=2".into(), h.as_map().clone(), want)),
    );
    let want = reference::DUAL_9_3_2_SPHERES.into_iter().collect();
    tally.case((|| {
        let delta = young_complex(&"3,3,3,3".parse()?, 2)?;
        let betti = reduced_betti(&delta, FieldTag::Rationals)?;
        Ok(mismatch(
            "Betti of (3,3,3,3), t=2".into(),
            betti.nonzero(),
            want,
        ))
    })());
    tally
}

fn reduction_graph(_: &Bounds) -> Tally {
    let mut tally = Tally::default();
    tally.case((|| {
        let g = build_reduction_graph(9, 3, 2)?;
        let mut edges: Vec<_> = g.edges.iter().map(|e| (e.from, e.to, e.label)).collect();
        let mut want = reference::GRAPH_9_3_2_EDGES.to_vec();
        edges.sort_unstable();
        want.sort_unstable();
        if let Some(why) = mismatch("edges".into(), edges, want) {
            return Ok(Some(why));
        }
        if let Some(why) = mismatch("non-root vertices".into(), g.vertices.len() - 1, 9) {
            return Ok(Some(why));
        }
        let counts: Vec<_> = g
            .path_label_counts()
            .iter()
            .map(|c| (c.leaf, c.label_sum, c.count))
            .collect();
        let mut want = reference::GRAPH_9_3_2_PATH_COUNTS.to_vec();
        want.sort_unstable();
        Ok(mismatch("path label counts".into(), counts, want))
    })());
    tally
}

fn tables(_: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for (tables, formula) in [
        (
            reference::PD_TABLES,
            pd_formula as fn(u32, u32, u32) -> Result<u32>,
        ),
        (reference::DIM_TABLES, krull_formula),
    ] {
        for table in tables {
            for (n, want) in table.entries() {
                tally.case(
                    formula(n, table.k, table.t)
                        .map(|got| mismatch(format!("{} n={n}", table.name), got, want)),
                );
            }
        }
    }
    tally
}

fn pd_vs_hochster(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for (n, k, t) in power_range(b, 1) {
        tally.case((|| {
            let got = oracles::pd_via_hochster(PathIdealSpec::new(n, t, k)?)?;
            Ok(mismatch(
                format!("pd n={n} k={k} t={t}"),
                got,
                pd_formula(n, k, t)?,
            ))
        })());
    }
    tally
}

fn leray_regularity_terai(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for (n, k, t) in power_range(b, 1) {
        tally.case((|| {
            let spec = PathIdealSpec::new(n, t, k)?;
            let delta = dual_complex(spec)?;
            let u = spec.universe();
            let leray = leray_oracle(&delta, u)?;
            let reg = regularity_oracle(&delta, u)?;
            let pd = oracles::pd_via_hochster(spec)?;
            let formula = leray_formula(n, k, t)?;
            let ok = leray == formula && reg == formula && pd == reg + 1;
            Ok((!ok).then(|| {
                format!("n={n} k={k} t={t}: leray {leray}, reg {reg}, formula {formula}, pd {pd}")
            }))
        })());
    }
    tally
}

fn homotopy_vs_homology(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for lambda in Partition::all_up_to(b.max_cells) {
        for t in 1..=b.max_t {
            tally.case((|| {
                let expected = young_homotopy(&lambda, t)?;
                let betti = reduced_betti(&young_complex(&lambda, t)?, FieldTag::Rationals)?;
                Ok(mismatch(
                    format!("{lambda} t={t}"),
                    betti.nonzero(),
                    expected.as_map().clone(),
                ))
            })());
        }
    }
    tally
}

fn binomial_wedges(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for t in 1..=b.max_t {
        for l in 1..=t {
            for k in (1..).take_while(|k| k * t + l <= b.max_n) {
                let n = k * t + l;
                tally.case((|| {
                    let wedge = binomial_wedge(n, k, t)?;
                    let young = young_homotopy(&Partition::rectangle(l, k as usize + 1), t)?;
                    let betti = reduced_betti(
                        &dual_complex(PathIdealSpec::new(n, t, k)?)?,
                        FieldTag::Rationals,
                    )?;
                    let what = format!("n={n} k={k} t={t}");
                    Ok(mismatch(what.clone(), &wedge, &young)
                        .or_else(|| mismatch(what, betti.nonzero(), wedge.as_map().clone())))
                })());
            }
        }
    }
    tally
}

fn two_routes(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for (n, k, t) in power_range(b, 1) {
        tally.case((|| {
            let rectangle = Partition::rectangle(n - k * t, k as usize + 1);
            Ok(mismatch(
                format!("n={n} k={k} t={t}"),
                dual_homotopy(n, k, t)?,
                young_homotopy(&rectangle, t)?,
            ))
        })());
    }
    tally
}

fn dual_routes(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for (n, k, t) in power_range(b, 1) {
        tally.case((|| {
            let spec = PathIdealSpec::new(n, t, k)?;
            Ok(mismatch(
                format!("n={n} k={k} t={t}"),
                dual_complex(spec)?,
                dual_complex_via_alexander(spec)?,
            ))
        })());
    }
    tally
}

fn generator_count(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for (n, k, t) in power_range(b, 1) {
        tally.case((|| {
            let got = squarefree_power_generators(PathIdealSpec::new(n, t, k)?)?.len() as u64;
            let want = ytc_core::homotopy::binomial((n + k - k * t) as u64, k as u64);
            Ok(mismatch(format!("n={n} k={k} t={t}"), got, want))
        })());
    }
    tally
}

fn krull_vs_transversal(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for (n, k, t) in power_range(b, 1) {
        tally.case((|| {
            let got = oracles::krull_via_transversal(PathIdealSpec::new(n, t, k)?)?;
            Ok(mismatch(
                format!("n={n} k={k} t={t}"),
                got,
                krull_formula(n, k, t)?,
            ))
        })());
    }
    tally
}

fn decomposability(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for (lambda, t) in shapes(b, 1) {
        tally.case((|| {
            let delta = young_complex(&lambda, t)?;
            let expected = vd_characterization(&lambda, t)?;
            let what = format!("{lambda} t={t}");
            let vd = is_vertex_decomposable(&delta)?;
            if vd.verdict && !vd.replay(&delta) {
                return Ok(Some(format!("{what}: decomposition does not replay")));
            }
            if let Some(why) = mismatch(format!("{what} vd"), vd.verdict, expected) {
                return Ok(Some(why));
            }
            if delta.facets().len() <= MAX_SHELLING_FACETS {
                let shelling = is_shellable(&delta)?;
                if shelling.verdict && !shelling.replay(&delta) {
                    return Ok(Some(format!("{what}: shelling does not replay")));
                }
                if let Some(why) = mismatch(format!("{what} shellable"), shelling.verdict, expected)
                {
                    return Ok(Some(why));
                }
            }
            for field in [FieldTag::Rationals, FieldTag::Gf2] {
                let cm = is_cohen_macaulay(&delta, field)?;
                if let Some(why) = mismatch(format!("{what} CM over {field}"), cm, expected) {
                    return Ok(Some(why));
                }
            }
            Ok(None)
        })());
    }
    tally
}

fn helly(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for (lambda, t) in shapes(b, 1) {
        tally.case((|| {
            Ok(mismatch(
                format!("{lambda} t={t}"),
                oracles::helly_oracle(&lambda, t)?,
                helly_formula(&lambda, t)?,
            ))
        })());
    }
    tally
}

fn linearity_window(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for (n, k, t) in power_range(b, 2) {
        tally.case((|| {
            let window = n <= k * t + t;
            let what = format!("n={n} k={k} t={t}");
            let cm = is_cohen_macaulay(
                &dual_complex(PathIdealSpec::new(n, t, k)?)?,
                FieldTag::Rationals,
            )?;
            let linear = linearity_characterization(n, k, t)?.linear_resolution;
            Ok(mismatch(format!("{what} CM"), cm, window)
                .or_else(|| mismatch(format!("{what} linear"), linear, window)))
        })());
    }
    tally
}

/// Sub-additivity is checked where the proofs apply it, `n − i ≥ kt`; the
/// literal form has small counterexamples, which are reported in the note.
fn chi_lemmas(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    let range = LemmaRange {
        max_n: b.max_n as i64,
        max_k: b.max_k as i64,
        max_t: b.max_t as i64,
    };
    for report in chi_lemma_checks(range) {
        if report.lemma == "subadditive" {
            if let Some(c) = report.counterexample {
                tally.note = Some(format!(
                    "literal sub-additivity fails at n={} k={} t={} i={}; checked for n−i ≥ kt instead",
                    c.n,
                    c.k,
                    c.t,
                    c.i.unwrap_or_default()
                ));
            }
            continue;
        }
        tally.cases += report.cases;
        if let Some(c) = report.counterexample {
            tally.fail(format!("{} at {c:?}", report.lemma));
        }
    }
    tally
}
