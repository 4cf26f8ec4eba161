//! Command-line surface: `dm` for set-system operations, `rg` for ribbon
//! graphs, `verify` for the certification battery.
//!
//! Exit codes: 0 on success, 1 on a domain error (error name on stderr),
//! 2 on usage or parse errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::io;
use crate::monotone::{self, ChoiceStrategy};
use crate::oracle;
use crate::ribbon::RibbonGraph;
use crate::set_system::{AxiomVerdict, SetSystem, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "twistwidth", version, about = "Delta-matroid twist widths and ribbon-graph partial duality")]
struct Cli {
    /// Output format.
    #[arg(long, short, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    tool: Tool,
}

#[derive(Subcommand)]
enum Tool {
    /// Set-system and delta-matroid operations.
    #[command(subcommand)]
    Dm(DmAction),
    /// Ribbon-graph operations.
    #[command(subcommand)]
    Rg(RgAction),
    /// Certification battery.
    #[command(subcommand)]
    Verify(VerifyAction),
}

#[derive(Args)]
struct Input {
    /// Path to the input JSON file.
    input: PathBuf,
}

#[derive(Subcommand)]
enum DmAction {
    /// Check the symmetric exchange axiom.
    Check(Input),
    /// Report r_min, r_max and the width.
    Width(Input),
    /// Report the maximum twist width.
    Maxwidth {
        #[command(flatten)]
        input: Input,
        /// Use the exhaustive 2^n twist sweep instead of the pairwise rule.
        #[arg(long)]
        brute: bool,
    },
    /// Twist the system by a subset.
    Twist {
        #[command(flatten)]
        input: Input,
        /// Comma-separated 1-based elements, e.g. `-A 1,3`.
        #[arg(short = 'A', long = "subset", default_value = "")]
        subset: ElementList,
        /// Write the result here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the feasible sets whose twist attains the maximum width.
    Hat(Input),
    /// Construct a monotone width sequence.
    Monotone {
        #[command(flatten)]
        input: Input,
        /// Script file replaying specific choices.
        #[arg(long)]
        script: Option<PathBuf>,
    },
    /// Widths of every prefix twist of a sequence.
    Profile {
        #[command(flatten)]
        input: Input,
        /// Comma-separated 1-based sequence, e.g. `-S 1,2`.
        #[arg(short = 'S', long = "sequence", default_value = "")]
        sequence: ElementList,
    },
}

#[derive(Subcommand)]
enum RgAction {
    /// Euler genus.
    Genus(Input),
    /// Boundary components of the spanning subgraph (V, A).
    Boundaries {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'A', long = "subset", default_value = "")]
        subset: ElementList,
    },
    /// Edge sets of spanning quasi-trees.
    Quasitrees(Input),
    /// The delta-matroid D(G).
    Dm(Input),
    /// The partial dual G^A.
    Pdual {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'A', long = "subset", default_value = "")]
        subset: ElementList,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Euler genus of G^A from boundary counts alone.
    Pdgenus {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'A', long = "subset", default_value = "")]
        subset: ElementList,
    },
    /// Maximum partial-dual Euler genus.
    Maxpdgenus(Input),
    /// Partial-duality deficiency (connected graphs).
    Deficiency(Input),
}

#[derive(Subcommand)]
enum VerifyAction {
    /// Run every cross-check on seeded random instances.
    All {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u32,
    },
}

/// Comma-separated 1-based element list, empty string allowed.
#[derive(Debug, Clone, Default)]
struct ElementList(Vec<u32>);

impl std::str::FromStr for ElementList {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.trim().is_empty() {
            return Ok(ElementList(Vec::new()));
        }
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("`{part}` is not a positive integer"))
            })
            .collect::<std::result::Result<Vec<u32>, String>>()
            .map(ElementList)
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with exit code 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}: {e}", e.name());
            match e {
                Error::Parse(_) => 2,
                _ => 1,
            }
        }
    }
}

fn subsets_json(subsets: &[Subset]) -> serde_json::Value {
    json!(subsets.iter().map(|s| s.elements()).collect::<Vec<_>>())
}

fn format_subset(s: Subset) -> String {
    format!("{s:?}")
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.tool {
        Tool::Dm(action) => dispatch_dm(action, cli.format).map(|()| 0),
        Tool::Rg(action) => dispatch_rg(action, cli.format).map(|()| 0),
        Tool::Verify(VerifyAction::All { seed, trials }) => {
            let report = oracle::certify_theorems(*seed, *trials);
            match cli.format {
                Format::Json => {
                    let results: Vec<_> = report
                        .results
                        .iter()
                        .map(|r| {
                            json!({
                                "name": r.name,
                                "pass": r.pass,
                                "failures": r.failures,
                                "first_failure": r.first_failure,
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({"seed": seed, "trials": trials, "all_passed": report.all_passed(), "results": results})
                    );
                }
                Format::Text => {
                    for r in &report.results {
                        let status = if r.pass { "pass" } else { "FAIL" };
                        println!("{status}  {}", r.name);
                        if let Some(instance) = &r.first_failure {
                            println!("      first failing instance: {instance}");
                        }
                    }
                }
            }
            if report.all_passed() {
                Ok(0)
            } else {
                eprintln!("VerificationFailed: one or more properties did not hold");
                Ok(1)
            }
        }
    }
}

fn load_dm(input: &Input) -> Result<SetSystem> {
    io::parse_set_system_file(&input.input)
}

fn load_rg(input: &Input) -> Result<RibbonGraph> {
    io::parse_ribbon_graph_file(&input.input)
}

fn dispatch_dm(action: &DmAction, format: Format) -> Result<()> {
    match action {
        DmAction::Check(input) => {
            let d = load_dm(input)?;
            let verdict = d.check_symmetric_exchange()?;
            match (&verdict, format) {
                (AxiomVerdict::Holds, Format::Text) => println!("symmetric exchange: holds"),
                (AxiomVerdict::Witness { x, y, u }, Format::Text) => println!(
                    "symmetric exchange: fails at X={}, Y={}, u={u}",
                    format_subset(*x),
                    format_subset(*y)
                ),
                (AxiomVerdict::Holds, Format::Json) => {
                    println!("{}", json!({"holds": true, "witness": null}))
                }
                (AxiomVerdict::Witness { x, y, u }, Format::Json) => println!(
                    "{}",
                    json!({"holds": false, "witness": {"x": x.elements(), "y": y.elements(), "u": u}})
                ),
            }
            Ok(())
        }
        DmAction::Width(input) => {
            let w = load_dm(input)?.width_summary()?;
            match format {
                Format::Text => {
                    println!("r_min = {}\nr_max = {}\nwidth = {}", w.r_min, w.r_max, w.width)
                }
                Format::Json => println!(
                    "{}",
                    json!({"r_min": w.r_min, "r_max": w.r_max, "width": w.width})
                ),
            }
            Ok(())
        }
        DmAction::Maxwidth { input, brute } => {
            let d = load_dm(input)?;
            let (value, method) = if *brute {
                (oracle::max_twist_width_bruteforce(&d)?, "bruteforce")
            } else {
                (d.max_twist_width()?, "pairwise")
            };
            match format {
                Format::Text => println!("{value}"),
                Format::Json => {
                    println!("{}", json!({"max_twist_width": value, "method": method}))
                }
            }
            Ok(())
        }
        DmAction::Twist { input, subset, output } => {
            let d = load_dm(input)?;
            let a = Subset::from_elements(&subset.0, d.ground_size())?;
            let twisted = d.twist(a)?;
            match output {
                Some(path) => io::write_set_system_file(path, &twisted)?,
                None => println!("{}", io::set_system_to_json(&twisted)),
            }
            Ok(())
        }
        DmAction::Hat(input) => {
            let hat = load_dm(input)?.hat_family()?;
            match format {
                Format::Text => {
                    for s in &hat {
                        println!("{}", format_subset(*s));
                    }
                }
                Format::Json => println!("{}", json!({"hat_family": subsets_json(&hat)})),
            }
            Ok(())
        }
        DmAction::Monotone { input, script } => {
            let d = load_dm(input)?;
            let strategy = match script {
                None => ChoiceStrategy::Canonical,
                Some(path) => {
                    ChoiceStrategy::Scripted(io::parse_script_file(path, d.ground_size())?)
                }
            };
            let trace = monotone::monotone_sequence(&d, &strategy)?;
            let feasible_final = d.contains(trace.final_set);
            match format {
                Format::Text => {
                    println!("sequence = {:?}", trace.sequence);
                    println!("widths   = {:?}", trace.widths);
                    println!("max twist width = {}", trace.attained);
                    println!("final set feasible = {feasible_final}");
                }
                Format::Json => println!("{}", io::trace_to_json(&trace, feasible_final)),
            }
            Ok(())
        }
        DmAction::Profile { input, sequence } => {
            let d = load_dm(input)?;
            let widths = monotone::width_profile(&d, &sequence.0)?;
            match format {
                Format::Text => println!("{widths:?}"),
                Format::Json => println!("{}", json!({"widths": widths})),
            }
            Ok(())
        }
    }
}

fn edge_subset(g: &RibbonGraph, elements: &ElementList) -> Result<Subset> {
    let a = Subset::from_elements(&elements.0, g.edge_count()).map_err(|_| Error::InvalidSubset)?;
    Ok(a)
}

fn dispatch_rg(action: &RgAction, format: Format) -> Result<()> {
    match action {
        RgAction::Genus(input) => {
            let g = load_rg(input)?;
            let genus = g.euler_genus();
            match format {
                Format::Text => println!("{genus}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "euler_genus": genus,
                        "vertices": g.vertex_count(),
                        "edges": g.edge_count(),
                        "components": g.components(),
                    })
                ),
            }
            Ok(())
        }
        RgAction::Boundaries { input, subset } => {
            let g = load_rg(input)?;
            let report = g.boundary_count(edge_subset(&g, subset)?)?;
            match format {
                Format::Text => {
                    println!("f(A) = {}", report.count);
                    for walk in &report.walks {
                        let rendered: Vec<String> = walk
                            .iter()
                            .map(|(h, fwd)| format!("{h}{}", if *fwd { "+" } else { "-" }))
                            .collect();
                        println!("  walk: {}", rendered.join(" "));
                    }
                }
                Format::Json => {
                    let walks: Vec<Vec<serde_json::Value>> = report
                        .walks
                        .iter()
                        .map(|w| w.iter().map(|(h, fwd)| json!([h, fwd])).collect())
                        .collect();
                    println!("{}", json!({"count": report.count, "walks": walks}));
                }
            }
            Ok(())
        }
        RgAction::Quasitrees(input) => {
            let qts = load_rg(input)?.quasi_trees()?;
            match format {
                Format::Text => {
                    for s in &qts {
                        println!("{}", format_subset(*s));
                    }
                }
                Format::Json => println!("{}", json!({"quasi_trees": subsets_json(&qts)})),
            }
            Ok(())
        }
        RgAction::Dm(input) => {
            let d = load_rg(input)?.delta_matroid()?;
            println!("{}", io::set_system_to_json(&d));
            Ok(())
        }
        RgAction::Pdual { input, subset, output } => {
            let g = load_rg(input)?;
            let dual = g.partial_dual(edge_subset(&g, subset)?)?;
            match output {
                Some(path) => io::write_ribbon_graph_file(path, &dual)?,
                None => println!("{}", io::ribbon_graph_to_json(&dual)),
            }
            Ok(())
        }
        RgAction::Pdgenus { input, subset } => {
            let g = load_rg(input)?;
            let genus = g.pd_genus_formula(edge_subset(&g, subset)?)?;
            match format {
                Format::Text => println!("{genus}"),
                Format::Json => println!("{}", json!({"pd_genus": genus})),
            }
            Ok(())
        }
        RgAction::Maxpdgenus(input) => {
            let value = load_rg(input)?.max_pd_genus()?;
            match format {
                Format::Text => println!("{value}"),
                Format::Json => println!("{}", json!({"max_pd_genus": value})),
            }
            Ok(())
        }
        RgAction::Deficiency(input) => {
            let value = load_rg(input)?.deficiency()?;
            match format {
                Format::Text => println!("{value}"),
                Format::Json => println!("{}", json!({"deficiency": value})),
            }
            Ok(())
        }
    }
}
