mod input;
mod suites;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use primespec::construction;
use primespec::maps::{self, FactorKind, RingMapSpec};
use primespec::products::{self, ImageReport};
use primespec::rings::factor;
use primespec::spectrum::{enumerate_spec, Space};
use primespec::topology::{DensityCertificate, Stability};
use primespec::{CoefficientField, PrimePoint, RingExpr, SpecSubset, Topology};
use serde::Serialize;

use crate::input::load;

#[derive(Parser)]
#[command(name = "primespec", version, about = "Closures and images on prime spectra")]
struct Cli {
    /// Print a JSON report instead of the human summary.
    #[arg(long, global = true)]
    json: bool,
    /// Largest integer, in bits, that will be factored.
    #[arg(long, global = true, value_name = "BITS")]
    max_bits: Option<u64>,
    /// Skip the exhaustive cross-checks.
    #[arg(long, global = true)]
    no_oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RingSet {
    /// Ring as JSON, inline or a file path.
    #[arg(long)]
    ring: String,
    /// Subset of the spectrum as JSON, inline or a file path.
    #[arg(long)]
    set: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum TopologyArg {
    Zariski,
    Flat,
    Patch,
}

impl From<TopologyArg> for Topology {
    fn from(t: TopologyArg) -> Self {
        match t {
            TopologyArg::Zariski => Topology::Zariski,
            TopologyArg::Flat => Topology::Flat,
            TopologyArg::Patch => Topology::Patch,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Quotient,
    Local,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Specialization,
    Generalization,
}

#[derive(Subcommand)]
enum Command {
    /// List the prime spectrum of a ring.
    Spec {
        #[arg(long)]
        ring: String,
    },
    /// Closure of a set in a topology.
    Closure {
        #[arg(long, value_enum)]
        topology: TopologyArg,
        #[command(flatten)]
        input: RingSet,
    },
    /// Whether a set is dense.
    Dense {
        #[arg(long, value_enum)]
        topology: TopologyArg,
        #[command(flatten)]
        input: RingSet,
    },
    /// Whether a set is stable under specialization or generalization.
    Stable {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[command(flatten)]
        input: RingSet,
    },
    /// Whether every infinite subset is dense.
    Criterion {
        #[arg(long, value_enum)]
        topology: TopologyArg,
        #[arg(long)]
        ring: String,
    },
    /// Image of the spectrum of a product of quotients or localizations.
    Image {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[command(flatten)]
        input: RingSet,
        /// Also enumerate the tame primes of the product and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Build a ring and check its structure.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// A prime of the target lying over a prime of the source.
    Lyover {
        #[arg(long)]
        map: String,
        #[arg(long)]
        prime: String,
    },
    /// Run a named verification suite.
    Verify(suites::VerifyArgs),
}

#[derive(Subcommand)]
enum Construct {
    /// `K[x_1..x_n]/(x_i x_k)` localized at the variables.
    Supplement {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "F2")]
        field: String,
        /// Also write the JSON report to this file.
        #[arg(long)]
        report: Option<std::path::PathBuf>,
    },
}

/// Outcome of a subcommand: a JSON value, its human rendering, and whether
/// the checks it ran passed.
struct Outcome {
    json: serde_json::Value,
    text: String,
    ok: bool,
}

impl Outcome {
    fn new<T: Serialize>(value: &T, text: String, ok: bool) -> Result<Self, String> {
        let json = serde_json::to_value(value).map_err(|e| e.to_string())?;
        Ok(Outcome { json, text, ok })
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(bits) = cli.max_bits {
        factor::set_max_bits(bits);
    }
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable report"));
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn ring_and_set(input: &RingSet) -> Result<(Space, SpecSubset), String> {
    let ring: RingExpr = load(&input.ring)?;
    let set: SpecSubset = load(&input.set)?;
    let space = Space::new(&ring).map_err(err)?;
    let set = space.canonical(&set).map_err(err)?;
    Ok((space, set))
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    match &cli.command {
        Command::Spec { ring } => {
            let ring: RingExpr = load(ring)?;
            let spec = enumerate_spec(&ring).map_err(err)?;
            Outcome::new(&spec, format!("Spec({ring}) = {spec}"), true)
        }
        Command::Closure { topology, input } => {
            let (space, e) = ring_and_set(input)?;
            let t = Topology::from(*topology);
            let c = space.closure(&e, t).map_err(err)?;
            Outcome::new(&c, format!("{t} closure of {e} = {c}"), true)
        }
        Command::Dense { topology, input } => {
            let (space, e) = ring_and_set(input)?;
            let t = Topology::from(*topology);
            let dense = space.is_dense(&e, t).map_err(err)?;
            Outcome::new(&serde_json::json!({ "dense": dense }), format!("{e} is {}dense in the {t} topology", if dense { "" } else { "not " }), true)
        }
        Command::Stable { mode, input } => {
            let (space, e) = ring_and_set(input)?;
            let (m, name) = match mode {
                ModeArg::Specialization => (Stability::Specialization, "specialization"),
                ModeArg::Generalization => (Stability::Generalization, "generalization"),
            };
            let stable = space.is_stable(&e, m).map_err(err)?;
            Outcome::new(
                &serde_json::json!({ "stable": stable }),
                format!("{e} is {}stable under {name}", if stable { "" } else { "not " }),
                true,
            )
        }
        Command::Criterion { topology, ring } => {
            let ring: RingExpr = load(ring)?;
            let space = Space::new(&ring).map_err(err)?;
            let cert: DensityCertificate = space.density_criterion((*topology).into()).map_err(err)?;
            let checked = space.check_certificate(&cert).map_err(err)?;
            let mut text = format!(
                "every infinite subset of Spec({ring}) is {}{} dense ({:?})",
                if cert.holds { "" } else { "not always " },
                cert.mode,
                cert.rationale
            );
            if let Some(w) = &cert.witness {
                text.push_str(&format!("; witness {w}"));
            }
            Outcome::new(&cert, text, checked)
        }
        Command::Image { kind, input, oracle } => {
            let (space, e) = ring_and_set(input)?;
            let ring = space.ring().clone();
            let (fk, topology) = match kind {
                KindArg::Quotient => (FactorKind::Quotient, Topology::Zariski),
                KindArg::Local => (FactorKind::Local, Topology::Flat),
            };
            let report: ImageReport = products::strictness_demo(&ring, &e, topology).map_err(err)?;
            let mut text = format!(
                "image = {}\n{} closure = {}\nstrict = {}",
                report.image, report.topology, report.closure, report.strict
            );
            if let Some(w) = &report.witness {
                text.push_str(&format!("\nwitness = {w}"));
            }
            let mut ok = true;
            let mut json = serde_json::to_value(&report).map_err(err)?;
            if *oracle && !cli.no_oracle {
                let brute = products::brute_force_image(&ring, &e, fk).map_err(err)?;
                let agree = space.same(&brute, &report.image).map_err(err)?;
                ok = agree;
                text.push_str(&format!("\noracle image = {brute} ({})", if agree { "agrees" } else { "DISAGREES" }));
                json["oracle"] = serde_json::json!({ "image": brute, "agrees": agree });
            }
            Ok(Outcome { json, text, ok })
        }
        Command::Construct { what: Construct::Supplement { n, field, report } } => {
            let field = CoefficientField::parse_short(field).map_err(err)?;
            let rep = construction::supplement_report(field, *n, !cli.no_oracle).map_err(err)?;
            if let Some(path) = report {
                let text = serde_json::to_string_pretty(&rep).map_err(err)?;
                std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            let primes: Vec<String> = rep.minimal_primes.iter().map(ToString::to_string).collect();
            let text = format!(
                "supplement n={} over {}{}\n  intersection of the I_k: {}\n  minimal primes: {} ({})\n  dimension: {}\n  reduced: {}\n  P.Z.: {}",
                rep.n,
                rep.field,
                if rep.degenerate { " (degenerate: I = 0)" } else { "" },
                rep.intersection_ok,
                primes.join(" "),
                rep.minimal_primes_ok,
                rep.dim,
                rep.reduced,
                rep.pz_ok
            );
            let ok = rep.all_ok() || rep.degenerate;
            Outcome::new(&rep, text, ok)
        }
        Command::Lyover { map, prime } => {
            let map: RingMapSpec = load(map)?;
            let p: PrimePoint = load(prime)?;
            let q = maps::laying_over(&map, &p).map_err(err)?;
            let back = maps::contract(&map, &q).map_err(err)?;
            Outcome::new(&serde_json::json!({ "prime": q, "contraction": back }), format!("{q} lies over {p} along {map}"), back == p)
        }
        Command::Verify(args) => {
            let report = suites::run(args, !cli.no_oracle).map_err(err)?;
            let text = report.human();
            let ok = report.summary.failed == 0;
            Outcome::new(&report, text, ok)
        }
    }
}
