use serde::de::DeserializeOwned;
use ytc_cli::run;
use ytc_cli::verify::{Status, VerifyReport};
use ytc_core::decomp::DecompCertificate;
use ytc_core::homotopy::ReductionGraph;
use ytc_core::{BettiVector, HomotopyClass, MonomialSet, SimplicialComplex};

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn ytc(args: &[&str]) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("ytc").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

/// Parses the JSON output and checks that re-serializing it is lossless.
fn round_trip<T: DeserializeOwned + serde::Serialize>(args: &[&str]) -> T {
    let o = ytc(args);
    assert_eq!(o.code, 0, "{args:?}: {}", o.err);
    let value: T = serde_json::from_str(o.out.trim()).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap(), o.out.trim());
    value
}

#[test]
fn projective_dimension_from_the_table() {
    let o = ytc(&["pd", "-n", "19", "-t", "4", "-k", "3"]);
    assert_eq!((o.code, o.out.as_str()), (0, "5\n"));
    let o = ytc(&["pd", "-n", "14", "-t", "4", "-k", "3", "--oracle"]);
    assert_eq!((o.code, o.out.as_str()), (0, "3\n"));
    // Hochster's formula is capped at 14 vertices
    assert_eq!(
        ytc(&["pd", "-n", "19", "-t", "4", "-k", "3", "--oracle"]).code,
        2
    );
}

#[test]
fn formulas_and_oracles_agree_through_the_cli() {
    for (cmd, args) in [
        ("dim", ["-n", "11", "-t", "2", "-k", "3"]),
        ("leray", ["-n", "9", "-t", "2", "-k", "3"]),
        ("pd", ["-n", "10", "-t", "3", "-k", "2"]),
    ] {
        let formula = ytc(&[&[cmd][..], &args[..]].concat());
        let oracle = ytc(&[&[cmd][..], &args[..], &["--oracle"][..]].concat());
        assert_eq!(formula.code, 0, "{}", formula.err);
        assert_eq!(formula.out, oracle.out, "{cmd}");
    }
    let formula = ytc(&["helly", "--lambda", "5,4,2", "-t", "3"]);
    let oracle = ytc(&["helly", "--lambda", "5,4,2", "-t", "3", "--oracle"]);
    assert_eq!((formula.out.as_str(), oracle.out.as_str()), ("5\n", "5\n"));
}

#[test]
fn json_outputs_round_trip() {
    let young: SimplicialComplex = round_trip(&["young", "--lambda", "5,4,2", "-t", "3", "--json"]);
    assert_eq!(young.facets().len(), 12);

    let dual: SimplicialComplex = round_trip(&["dual", "-n", "9", "-t", "2", "-k", "3", "--json"]);
    let via: SimplicialComplex = round_trip(&[
        "dual", "-n", "9", "-t", "2", "-k", "3", "--oracle", "--json",
    ]);
    assert_eq!(dual, via);

    let class: HomotopyClass = round_trip(&["homotopy", "-n", "9", "-k", "3", "-t", "2", "--json"]);
    assert_eq!(class.multiplicity(1), 3);
    let young_class: HomotopyClass =
        round_trip(&["homotopy", "--lambda", "3,3,3,3", "-t", "2", "--json"]);
    assert_eq!(class, young_class);

    let betti: BettiVector = round_trip(&[
        "homology", "--lambda", "3,3,3,3", "-t", "2", "--field", "gf2", "--json",
    ]);
    assert_eq!(betti.nonzero(), class.as_map().clone());

    let gens: MonomialSet = round_trip(&["pathideal", "-n", "9", "-t", "2", "-k", "3", "--json"]);
    assert_eq!(gens.len(), 20);

    let graph: ReductionGraph = round_trip(&["graph", "-n", "9", "-k", "3", "-t", "2", "--json"]);
    assert_eq!(graph.edges.len(), 9);

    let cert: DecompCertificate = round_trip(&["decomp", "--lambda", "3,2", "-t", "2", "--json"]);
    assert!(cert.verdict);
    let cert: DecompCertificate = round_trip(&[
        "decomp", "--lambda", "3,3", "-t", "2", "--kind", "shelling", "--json",
    ]);
    assert!(!cert.verdict);

    let value: u32 = round_trip(&["pd", "-n", "19", "-t", "4", "-k", "3", "--json"]);
    assert_eq!(value, 5);
}

#[test]
fn dot_export_uses_m_j_node_names() {
    let o = ytc(&["graph", "-n", "9", "-k", "3", "-t", "2", "--dot"]);
    assert_eq!(o.code, 0);
    assert!(o.out.starts_with("digraph G {\n"));
    assert!(o.out.contains("  \"9,3\" -> \"7,2\" [label=0];\n"));
    assert!(o.out.contains("  \"5,1\" -> \"2,1\" [label=2];\n"));
    assert_eq!(o.out.matches("->").count(), 9);
    assert!(o.out.ends_with("}\n"));
}

#[test]
fn exit_codes_follow_the_taxonomy() {
    // domain: k exceeds the matching number
    let o = ytc(&["pd", "-n", "3", "-t", "2", "-k", "3"]);
    assert_eq!(o.code, 1);
    assert!(o.err.contains("k ≤"), "{}", o.err);
    // precondition: t = 0
    assert_eq!(ytc(&["young", "--lambda", "3,2", "-t", "0"]).code, 1);
    // parse: non-monotone partition
    assert_eq!(ytc(&["young", "--lambda", "2,3", "-t", "1"]).code, 1);
    // unknown flag and missing subcommand
    assert_eq!(
        ytc(&["young", "--lambda", "3", "-t", "1", "--bogus"]).code,
        1
    );
    assert_eq!(ytc(&[]).code, 1);
    // neither a shape nor (n, k)
    assert_eq!(ytc(&["homotopy", "-t", "2"]).code, 1);
    assert_eq!(
        ytc(&["homotopy", "--lambda", "3", "-n", "4", "-k", "1", "-t", "2"]).code,
        1
    );
    // capacity: Stanley-Reisner complex beyond 20 vertices, names the bound
    let o = ytc(&["pd", "-n", "30", "-t", "2", "-k", "3", "--oracle"]);
    assert_eq!(o.code, 2);
    assert!(o.err.contains("20") && o.err.contains("30"), "{}", o.err);
    // help is success
    let o = ytc(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.out.contains("verify"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["young", "--lambda", "4,3,3,1", "-t", "2"][..],
        &["decomp", "--lambda", "4,2,2", "-t", "2"][..],
        &["graph", "-n", "14", "-k", "3", "-t", "2"][..],
        &[
            "verify",
            "--max-n",
            "7",
            "--max-t",
            "2",
            "--max-k",
            "2",
            "--max-cells",
            "6",
            "--json",
        ][..],
    ] {
        assert_eq!(ytc(args).out, ytc(args).out, "{args:?}");
    }
}

#[test]
fn verify_passes_on_default_bounds() {
    let o = ytc(&["verify", "--json"]);
    assert_eq!(o.code, 0, "{}", o.out);
    let report: VerifyReport = serde_json::from_str(o.out.trim()).unwrap();
    assert!(report.all_passed());
    let tables = report.checks.iter().find(|c| c.name == "tables").unwrap();
    assert_eq!(tables.cases, 65);
    // timings are diagnostics
    assert_eq!(o.err.lines().count(), report.checks.len());
}

#[test]
fn verify_reports_capacity_per_check() {
    let o = ytc(&[
        "verify",
        "--max-n",
        "15",
        "--max-t",
        "1",
        "--max-k",
        "1",
        "--max-cells",
        "3",
        "--json",
    ]);
    assert_eq!(o.code, 2, "{}", o.out);
    let report: VerifyReport = serde_json::from_str(o.out.trim()).unwrap();
    let pd = report
        .checks
        .iter()
        .find(|c| c.name == "pd_vs_hochster")
        .unwrap();
    assert_eq!(pd.status, Status::Capacity);
    assert_eq!((pd.cases, pd.skipped), (15, 1));
    assert!(pd.note.as_deref().unwrap().contains("14"));
    assert!(report.checks.iter().all(|c| c.status != Status::Fail));
}
