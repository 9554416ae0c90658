//! Command-line front end: `ytc <subcommand> [flags]`.
//!
//! Exit status is 0 on success, 1 on a domain, precondition or usage error,
//! and 2 when an input exceeds a capacity cap. Results go to the output
//! stream; diagnostics and timings go to the error stream.

pub mod oracles;
pub mod reference;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use anyhow::Context;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use ytc_core::decomp::{BaseCase, Obstruction, VdTree};
use ytc_core::{
    build_reduction_graph, dual_complex, dual_complex_via_alexander, dual_homotopy, helly_formula,
    is_shellable, is_vertex_decomposable, krull_formula, leray_formula, pd_formula, reduced_betti,
    squarefree_power_generators, young_complex, young_homotopy, DecompCertificate, Error, FieldTag,
    Partition, PathIdealSpec, SimplicialComplex,
};

use crate::verify::{verify_suite, Bounds, Status};

#[derive(Parser, Debug)]
#[command(
    name = "ytc",
    version,
    about = "Young complexes and squarefree powers of t-path ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Facets of the t-Young complex of a partition.
    Young {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        json: bool,
    },
    /// Homotopy type, from the recursion (or Betti numbers with --oracle).
    Homotopy {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reduced Betti numbers by exact linear algebra.
    Homology {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t)]
        field: FieldTag,
        #[arg(long)]
        json: bool,
    },
    /// Alexander dual of the Stanley-Reisner complex of I_{n,t}^{[k]}.
    Dual {
        #[command(flatten)]
        power: Power,
        /// Dualize the Stanley-Reisner complex instead of filling a rectangle.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minimal generators of I_{n,t}^{[k]}.
    Pathideal {
        #[command(flatten)]
        power: Power,
        #[arg(long)]
        json: bool,
    },
    /// Projective dimension of R/I_{n,t}^{[k]}.
    Pd {
        #[command(flatten)]
        power: Power,
        /// Read it off Hochster's formula instead.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Krull dimension of R/I_{n,t}^{[k]}.
    Dim {
        #[command(flatten)]
        power: Power,
        /// Use a minimum transversal of the generators instead.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Helly number of the Alexander dual of a t-Young complex.
    Helly {
        #[command(flatten)]
        shape: Shape,
        /// Use the largest minimal nonface instead.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Leray number of the dual complex of I_{n,t}^{[k]}.
    Leray {
        #[command(flatten)]
        power: Power,
        /// Use the homology of induced subcomplexes instead.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t)]
        field: FieldTag,
        #[arg(long)]
        json: bool,
    },
    /// Reduction graph of the homotopy recursion.
    Graph {
        #[command(flatten)]
        power: Power,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Vertex decomposition or shelling search, with a certificate.
    Decomp {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Kind::Vd)]
        kind: Kind,
        #[arg(long)]
        json: bool,
    },
    /// Cross-checks every closed form against its oracle.
    Verify {
        #[arg(long, default_value_t = Bounds::default().max_n)]
        max_n: u32,
        #[arg(long, default_value_t = Bounds::default().max_t)]
        max_t: u32,
        #[arg(long, default_value_t = Bounds::default().max_k)]
        max_k: u32,
        #[arg(long, default_value_t = Bounds::default().max_cells)]
        max_cells: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct Shape {
    /// Weakly decreasing parts, e.g. 5,4,2.
    #[arg(long, value_name = "PARTS")]
    lambda: Partition,
    #[arg(short = 't')]
    t: u32,
}

#[derive(Args, Debug)]
struct Power {
    #[arg(short = 'n')]
    n: u32,
    #[arg(short = 'k')]
    k: u32,
    #[arg(short = 't')]
    t: u32,
}

impl Power {
    fn spec(&self) -> ytc_core::Result<PathIdealSpec> {
        PathIdealSpec::new(self.n, self.t, self.k)
    }
}

/// Either a t-Young complex (`--lambda`) or the dual complex of `I_{n,t}^{[k]}`.
#[derive(Args, Debug)]
struct Target {
    #[arg(long, value_name = "PARTS", conflicts_with_all = ["n", "k"])]
    lambda: Option<Partition>,
    #[arg(short = 'n', requires = "k")]
    n: Option<u32>,
    #[arg(short = 'k', requires = "n")]
    k: Option<u32>,
    #[arg(short = 't')]
    t: u32,
}

enum Subject {
    Young(Partition, u32),
    Power(Power),
}

impl Target {
    fn subject(&self) -> ytc_core::Result<Subject> {
        match (&self.lambda, self.n, self.k) {
            (Some(lambda), None, None) => Ok(Subject::Young(lambda.clone(), self.t)),
            (None, Some(n), Some(k)) => Ok(Subject::Power(Power { n, k, t: self.t })),
            _ => Err(Error::Precondition(
                "give either --lambda or both -n and -k".into(),
            )),
        }
    }

    fn complex(&self) -> ytc_core::Result<SimplicialComplex> {
        match self.subject()? {
            Subject::Young(lambda, t) => young_complex(&lambda, t),
            Subject::Power(p) => dual_complex(p.spec()?),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Vd,
    Shelling,
}

/// Parses `argv` (program name first), runs the command and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(core) if core.is_capacity() => 2,
                _ => 1,
            }
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> anyhow::Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn emit_value<T: Serialize + std::fmt::Display>(
    out: &mut dyn Write,
    value: T,
    json: bool,
) -> anyhow::Result<()> {
    if json {
        emit_json(out, &value)
    } else {
        writeln!(out, "{value}")?;
        Ok(())
    }
}

fn emit_facets(out: &mut dyn Write, delta: &SimplicialComplex, json: bool) -> anyhow::Result<()> {
    if json {
        return emit_json(out, delta);
    }
    if delta.is_void() {
        writeln!(out, "void")?;
    }
    for facet in delta.facets() {
        writeln!(out, "{facet}")?;
    }
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Young { shape, json } => {
            emit_facets(out, &young_complex(&shape.lambda, shape.t)?, json)?;
        }
        Command::Homotopy {
            target,
            oracle,
            json,
        } => {
            if oracle {
                let betti = reduced_betti(&target.complex()?, FieldTag::Rationals)?;
                emit_betti(out, &betti, json)?;
            } else {
                let class = match target.subject()? {
                    Subject::Young(lambda, t) => young_homotopy(&lambda, t)?,
                    Subject::Power(p) => dual_homotopy(p.n, p.k, p.t)?,
                };
                emit_value(out, class, json)?;
            }
        }
        Command::Homology {
            target,
            field,
            json,
        } => {
            emit_betti(out, &reduced_betti(&target.complex()?, field)?, json)?;
        }
        Command::Dual {
            power,
            oracle,
            json,
        } => {
            let spec = power.spec()?;
            let delta = if oracle {
                dual_complex_via_alexander(spec)?
            } else {
                dual_complex(spec)?
            };
            emit_facets(out, &delta, json)?;
        }
        Command::Pathideal { power, json } => {
            let gens = squarefree_power_generators(power.spec()?)?;
            if json {
                emit_json(out, &gens)?;
            } else {
                for support in &gens.supports {
                    let monomial: String = support.vertices().map(|v| format!("x{v}")).collect();
                    writeln!(out, "{monomial}")?;
                }
            }
        }
        Command::Pd {
            power,
            oracle,
            json,
        } => {
            let value = if oracle {
                oracles::pd_via_hochster(power.spec()?)?
            } else {
                pd_formula(power.n, power.k, power.t)?
            };
            emit_value(out, value, json)?;
        }
        Command::Dim {
            power,
            oracle,
            json,
        } => {
            let value = if oracle {
                oracles::krull_via_transversal(power.spec()?)?
            } else {
                krull_formula(power.n, power.k, power.t)?
            };
            emit_value(out, value, json)?;
        }
        Command::Helly {
            shape,
            oracle,
            json,
        } => {
            let value = if oracle {
                oracles::helly_oracle(&shape.lambda, shape.t)?
            } else {
                helly_formula(&shape.lambda, shape.t)?
            };
            emit_value(out, value, json)?;
        }
        Command::Leray {
            power,
            oracle,
            field,
            json,
        } => {
            let value = if oracle {
                oracles::leray_via_homology(power.spec()?, field)?
            } else {
                leray_formula(power.n, power.k, power.t)?
            };
            emit_value(out, value, json)?;
        }
        Command::Graph { power, dot, json } => {
            let graph = build_reduction_graph(power.n, power.k, power.t)?;
            if dot {
                write!(out, "{}", graph.to_dot())?;
            } else if json {
                emit_json(out, &graph)?;
            } else {
                writeln!(out, "root {},{}", graph.root.0, graph.root.1)?;
                for e in &graph.edges {
                    writeln!(
                        out,
                        "{},{} -> {},{} label {}",
                        e.from.0, e.from.1, e.to.0, e.to.1, e.label
                    )?;
                }
                for c in graph.path_label_counts() {
                    writeln!(
                        out,
                        "leaf {},{} label-sum {} paths {}",
                        c.leaf.0, c.leaf.1, c.label_sum, c.count
                    )?;
                }
            }
        }
        Command::Decomp { target, kind, json } => {
            let delta = target.complex()?;
            let cert = match kind {
                Kind::Vd => is_vertex_decomposable(&delta)?,
                Kind::Shelling => is_shellable(&delta)?,
            };
            if json {
                emit_json(out, &cert)?;
            } else {
                emit_certificate(out, &cert)?;
            }
        }
        Command::Verify {
            max_n,
            max_t,
            max_k,
            max_cells,
            json,
        } => {
            let bounds = Bounds {
                max_n,
                max_t,
                max_k,
                max_cells,
            };
            let (report, timings) = verify_suite(bounds);
            for (check, elapsed) in report.checks.iter().zip(&timings) {
                writeln!(
                    err,
                    "{:<24} {:>10.1} ms",
                    check.name,
                    elapsed.as_secs_f64() * 1e3
                )?;
            }
            if json {
                emit_json(out, &report)?;
            } else {
                emit_report(out, &report)?;
            }
            return Ok(report.exit_code());
        }
    }
    Ok(0)
}

fn emit_betti(
    out: &mut dyn Write,
    betti: &ytc_core::BettiVector,
    json: bool,
) -> anyhow::Result<()> {
    if json {
        return emit_json(out, betti);
    }
    for (degree, value) in betti.as_map() {
        writeln!(out, "{degree}\t{value}")?;
    }
    Ok(())
}

fn emit_certificate(out: &mut dyn Write, cert: &DecompCertificate) -> anyhow::Result<()> {
    let label = match cert.kind {
        ytc_core::CertificateKind::Vd => "vertex decomposable",
        ytc_core::CertificateKind::Shelling => "shellable",
    };
    writeln!(out, "{label}: {}", if cert.verdict { "yes" } else { "no" })?;
    if let Some(tree) = &cert.tree {
        write_tree(out, tree, 0)?;
    }
    if let Some(order) = &cert.order {
        let faces: Vec<String> = order.iter().map(|f| f.to_string()).collect();
        writeln!(out, "order: {}", faces.join(" "))?;
    }
    match &cert.obstruction {
        Some(Obstruction::NoDecomposition { shedding_vertices }) => {
            writeln!(out, "shedding vertices tried: {shedding_vertices:?}")?
        }
        Some(Obstruction::NoShelling { longest_prefix }) => {
            writeln!(out, "longest shellable prefix: {longest_prefix}")?
        }
        None => {}
    }
    Ok(())
}

fn write_tree(out: &mut dyn Write, tree: &VdTree, depth: usize) -> anyhow::Result<()> {
    let pad = "  ".repeat(depth);
    match tree {
        VdTree::Base {
            base: BaseCase::Simplex,
        } => writeln!(out, "{pad}simplex")?,
        VdTree::Base {
            base: BaseCase::Irrelevant,
        } => writeln!(out, "{pad}{{∅}}")?,
        VdTree::Node { vertex, link, del } => {
            writeln!(out, "{pad}shed {vertex}")?;
            writeln!(out, "{pad}link:")?;
            write_tree(out, link, depth + 1)?;
            writeln!(out, "{pad}deletion:")?;
            write_tree(out, del, depth + 1)?;
        }
    }
    Ok(())
}

fn emit_report(out: &mut dyn Write, report: &verify::VerifyReport) -> anyhow::Result<()> {
    let b = report.bounds;
    writeln!(
        out,
        "bounds: n ≤ {}, t ≤ {}, k ≤ {}, cells ≤ {}",
        b.max_n, b.max_t, b.max_k, b.max_cells
    )?;
    for c in &report.checks {
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Capacity => "capacity",
        };
        writeln!(
            out,
            "{:<24} {:<8} cases {:>6}  failed {:>4}  skipped {:>4}",
            c.name, status, c.cases, c.failures, c.skipped
        )?;
        if let Some(cex) = &c.counterexample {
            writeln!(out, "  first counterexample: {cex}")?;
        }
        if let Some(note) = &c.note {
            writeln!(out, "  note: {note}")?;
        }
    }
    let passed = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Pass)
        .count();
    writeln!(out, "{passed}/{} checks passed", report.checks.len())
        .context("writing the report")?;
    Ok(())
}
