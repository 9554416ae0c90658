//! Acceptance gate. Each test prints one `criterion NN PASS|FAIL` line with
//! its wall time (visible with `--nocapture`) and panics on failure.

use std::fmt::Debug;
use std::time::{Duration, Instant};

use anyhow::{ensure, Result};
use ytc_cli::{oracles, reference};
use ytc_core::decomp::MAX_SHELLING_FACETS;
use ytc_core::formulas::STATED_LEMMAS;
use ytc_core::*;

fn gate(id: u32, title: &str, limit: Option<Duration>, body: impl FnOnce() -> Result<()>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let too_slow = limit.is_some_and(|l| elapsed > l);
    let verdict = if outcome.is_ok() && !too_slow {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "criterion {id:>2} {verdict} {title} ({:.1} ms)",
        elapsed.as_secs_f64() * 1e3
    );
    if let Err(e) = outcome {
        panic!("criterion {id} ({title}): {e:#}");
    }
    if too_slow {
        panic!("criterion {id} ({title}): took {elapsed:?}, limit {limit:?}");
    }
}

fn same<T: PartialEq + Debug>(what: impl std::fmt::Display, got: T, want: T) -> Result<()> {
    ensure!(got == want, "{what}: got {got:?}, expected {want:?}");
    Ok(())
}

fn spec(n: u32, t: u32, k: u32) -> PathIdealSpec {
    PathIdealSpec::new(n, t, k).unwrap()
}

/// `(n, k, t)` with `t` in the range, `n ≤ max_n` and `1 ≤ k ≤ ⌊n/t⌋`.
fn powers(ts: std::ops::RangeInclusive<u32>, max_n: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for t in ts {
        for n in t..=max_n {
            for k in 1..=n / t {
                out.push((n, k, t));
            }
        }
    }
    out
}

fn shapes(max_cells: u32) -> impl Iterator<Item = Partition> {
    Partition::all_up_to(max_cells)
        .into_iter()
        .filter(|l| !l.is_empty_shape())
}

#[test]
fn criterion_01_young_example() {
    gate(
        1,
        "young --lambda 5,4,2 -t 3 lists the 12 facets",
        Some(Duration::from_secs(1)),
        || {
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let code = ytc_cli::run(
                ["ytc", "young", "--lambda", "5,4,2", "-t", "3"],
                &mut out,
                &mut err,
            );
            same("exit status", code, 0)?;
            let want: String = reference::YOUNG_542_T3_FACETS
                .iter()
                .map(|f| {
                    let vs: Vec<String> = f.iter().map(u32::to_string).collect();
                    format!("{{{}}}\n", vs.join(","))
                })
                .collect();
            same("output", String::from_utf8(out)?, want)
        },
    );
}

#[test]
fn criterion_02_homotopy_example() {
    gate(
        2,
        "(9,3,2) homotopy type and Betti numbers",
        Some(Duration::from_secs(1)),
        || {
            let want = reference::DUAL_9_3_2_SPHERES.into_iter().collect();
            same(
                "dual_homotopy(9,3,2)",
                dual_homotopy(9, 3, 2)?.as_map().clone(),
                want,
            )?;
            let delta = young_complex(&"3,3,3,3".parse()?, 2)?;
            let want = reference::DUAL_9_3_2_SPHERES.into_iter().collect();
            same(
                "Betti of (3,3,3,3), t=2",
                reduced_betti(&delta, FieldTag::Rationals)?.nonzero(),
                want,
            )
        },
    );
}

#[test]
fn criterion_03_reduction_graph() {
    gate(3, "reduction graph for (9,3,2)", None, || {
        let g = build_reduction_graph(9, 3, 2)?;
        same("non-root vertices", g.vertices.len() - 1, 9)?;
        let mut edges: Vec<_> = g.edges.iter().map(|e| (e.from, e.to, e.label)).collect();
        let mut want = reference::GRAPH_9_3_2_EDGES.to_vec();
        edges.sort_unstable();
        want.sort_unstable();
        same("edges", edges, want)?;
        let mut non_root: Vec<_> = g.vertices[1..].to_vec();
        non_root.sort_unstable();
        let mut targets: Vec<_> = reference::GRAPH_9_3_2_EDGES.iter().map(|e| e.1).collect();
        targets.sort_unstable();
        same("vertices", non_root, targets)?;
        let counts: Vec<_> = g
            .path_label_counts()
            .iter()
            .map(|c| (c.leaf, c.label_sum, c.count))
            .collect();
        let mut want = reference::GRAPH_9_3_2_PATH_COUNTS.to_vec();
        want.sort_unstable();
        same("path label counts", counts, want)
    });
}

#[test]
fn criterion_04_projective_dimension_tables() {
    gate(
        4,
        "projective dimension tables (34 entries)",
        Some(Duration::from_secs(1)),
        || {
            let mut entries = 0;
            for table in reference::PD_TABLES {
                for (n, want) in table.entries() {
                    same(
                        format!("{} n={n}", table.name),
                        pd_formula(n, table.k, table.t)?,
                        want,
                    )?;
                    entries += 1;
                }
            }
            same("entries", entries, 18 + 16)
        },
    );
}

#[test]
fn criterion_05_krull_dimension_tables() {
    gate(5, "Krull dimension tables (31 entries)", None, || {
        let mut entries = 0;
        for table in reference::DIM_TABLES {
            for (n, want) in table.entries() {
                same(
                    format!("{} n={n}", table.name),
                    krull_formula(n, table.k, table.t)?,
                    want,
                )?;
                entries += 1;
            }
        }
        same("entries", entries, 16 + 15)
    });
}

#[test]
fn criterion_06_pd_matches_hochster() {
    gate(
        6,
        "pd via Hochster equals the closed form",
        Some(Duration::from_secs(600)),
        || {
            for (n, k, t) in powers(2..=4, 12) {
                let got = oracles::pd_via_hochster(spec(n, t, k))?;
                same(format!("n={n} k={k} t={t}"), got, pd_formula(n, k, t)?)?;
            }
            for (n, k, t) in powers(1..=1, 10) {
                same(
                    format!("n={n} k={k} t=1"),
                    oracles::pd_via_hochster(spec(n, t, k))?,
                    n - k + 1,
                )?;
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_07_leray_regularity_terai() {
    gate(
        7,
        "Leray = formula = regularity, and Terai duality",
        None,
        || {
            for (n, k, t) in powers(2..=4, 12).into_iter().chain(powers(1..=1, 10)) {
                let s = spec(n, t, k);
                let u = s.universe();
                let delta = dual_complex(s)?;
                let reg = regularity_oracle(&delta, u)?;
                let what = format!("n={n} k={k} t={t}");
                same(
                    format!("{what} leray"),
                    leray_oracle(&delta, u)?,
                    leray_formula(n, k, t)?,
                )?;
                same(format!("{what} regularity"), reg, leray_formula(n, k, t)?)?;
                same(
                    format!("{what} Terai"),
                    pd_oracle(&stanley_reisner_complex(s)?, u)?,
                    reg + 1,
                )?;
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_08_homotopy_matches_homology() {
    gate(
        8,
        "homotopy recursion vs Betti numbers, ≤ 12 cells",
        Some(Duration::from_secs(300)),
        || {
            for lambda in Partition::all_up_to(12) {
                for t in 1..=4 {
                    let class = young_homotopy(&lambda, t)?;
                    let betti = reduced_betti(&young_complex(&lambda, t)?, FieldTag::Rationals)?;
                    same(
                        format!("{lambda} t={t}"),
                        betti.nonzero(),
                        class.as_map().clone(),
                    )?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_09_binomial_wedge() {
    gate(9, "binomial wedge vs recursion and homology", None, || {
        let mut contractible = 0;
        for t in 1..=4u32 {
            for l in 1..=t {
                for k in (1..).take_while(|k| k * t + l <= 12) {
                    let n = k * t + l;
                    let what = format!("n={n} k={k} t={t}");
                    let wedge = binomial_wedge(n, k, t)?;
                    let young = young_homotopy(&Partition::rectangle(l, k as usize + 1), t)?;
                    same(&what, &wedge, &young)?;
                    let betti = reduced_betti(&dual_complex(spec(n, t, k))?, FieldTag::Rationals)?;
                    same(&what, betti.nonzero(), wedge.as_map().clone())?;
                    same(
                        format!("{what} contractible"),
                        wedge.is_contractible(),
                        k < l,
                    )?;
                    contractible += u32::from(k < l);
                }
            }
        }
        ensure!(contractible > 0, "no contractible case in range");
        Ok(())
    });
}

#[test]
fn criterion_10_decomposability() {
    gate(
        10,
        "VD ⇔ shellable ⇔ CM ⇔ characterization",
        None,
        || {
            for lambda in shapes(10) {
                let delta = young_complex(&lambda, 1)?;
                ensure!(
                    is_vertex_decomposable(&delta)?.verdict,
                    "{lambda} t=1 not VD"
                );
                for t in 2..=4 {
                    let what = format!("{lambda} t={t}");
                    let delta = young_complex(&lambda, t)?;
                    let expected = vd_characterization(&lambda, t)?;
                    let vd = is_vertex_decomposable(&delta)?;
                    same(format!("{what} vd"), vd.verdict, expected)?;
                    ensure!(
                        !vd.verdict || vd.replay(&delta),
                        "{what}: decomposition does not replay"
                    );
                    if delta.facets().len() <= MAX_SHELLING_FACETS {
                        let shelling = is_shellable(&delta)?;
                        same(format!("{what} shellable"), shelling.verdict, expected)?;
                        ensure!(
                            !shelling.verdict || shelling.replay(&delta),
                            "{what}: shelling does not replay"
                        );
                    }
                    same(
                        format!("{what} CM/Q"),
                        is_cohen_macaulay(&delta, FieldTag::Rationals)?,
                        expected,
                    )?;
                    same(
                        format!("{what} CM/GF2"),
                        is_cohen_macaulay(&delta, FieldTag::Gf2)?,
                        expected,
                    )?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_11_helly() {
    gate(
        11,
        "largest minimal nonface of the dual is (r−1)t−1",
        None,
        || {
            for lambda in shapes(10) {
                for t in 1..=4 {
                    let want = (lambda.len() as i64 - 1) * t as i64 - 1;
                    same(
                        format!("{lambda} t={t}"),
                        oracles::helly_oracle(&lambda, t)?,
                        want,
                    )?;
                    same(
                        format!("{lambda} t={t} formula"),
                        helly_formula(&lambda, t)?,
                        want,
                    )?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_12_chi_lemmas() {
    gate(
        12,
        "four χ inequalities, t ≤ 4, k ≤ 5, n ≤ 60",
        None,
        || {
            let range = LemmaRange {
                max_n: 60,
                max_k: 5,
                max_t: 4,
            };
            let reports = chi_lemma_checks(range);
            let mut failures = Vec::new();
            for name in STATED_LEMMAS {
                let report = reports.iter().find(|r| r.lemma == name);
                ensure!(report.is_some(), "no report for {name}");
                let report = report.unwrap();
                ensure!(report.cases > 0, "{name} checked no cases");
                if let Some(c) = report.counterexample {
                    failures.push(format!("{name} fails at {c:?}"));
                }
            }
            ensure!(failures.is_empty(), "{}", failures.join("; "));
            Ok(())
        },
    );
}

#[test]
fn criterion_13_linearity_window() {
    gate(
        13,
        "dual is CM exactly when kt ≤ n ≤ kt + t",
        None,
        || {
            for (n, k, t) in powers(2..=4, 12) {
                let cm = is_cohen_macaulay(&dual_complex(spec(n, t, k))?, FieldTag::Rationals)?;
                same(format!("n={n} k={k} t={t}"), cm, n <= k * t + t)?;
            }
            Ok(())
        },
    );
}
