use std::ffi::OsString;
use std::io::{Read, Write};

use anyhow::{anyhow, Context};
use brauer_core::mutation::{run_algorithm_aihara, run_algorithm_z};
use brauer_core::pipeline::{compose_inverse_mutations, expected_sigma, pointing_family, sigma_of};
use brauer_core::{verify, BrauerTree, EdgeId, Mode, MutationLog, PointingKind, Report};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::corpus::{corpus, CorpusSpec};
use crate::format::{self, combined_report_value, family_to_value, log_to_value, report_to_value, tree_digest};
use crate::render::{render_dot, render_summary, render_table};

#[derive(Parser, Debug)]
#[command(name = "brauer", version, about = "Brauer tree mutations and star-to-tree tilting complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduce a tree to the Brauer star and print the mutation log.
    Reduce {
        /// Tree file, or "-" for stdin.
        tree: String,
        #[arg(long, value_enum, default_value_t = Algo::Aihara)]
        algo: Algo,
        /// Label of the initial edge at the exceptional vertex.
        #[arg(long)]
        branch: Option<String>,
    },
    /// Print the star-to-tree family of a pointed tree.
    Tilting {
        tree: String,
        #[arg(long, value_enum, default_value_t = PointingArg::Reversed)]
        pointing: PointingArg,
        #[arg(long)]
        branch: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the family obtained by composing the inverse mutations of a
    /// reduction.
    Compose {
        tree: String,
        #[arg(long, value_enum, default_value_t = Algo::Aihara)]
        algo: Algo,
        #[arg(long)]
        branch: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the permutation between the Aihara and left-alternating families.
    Sigma {
        tree: String,
        #[arg(long)]
        branch: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check the composed families against the pointed ones.
    Verify {
        /// Tree file; omit to run a seeded random corpus instead.
        tree: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::All)]
        mode: ModeArg,
        #[arg(long)]
        branch: Option<String>,
        /// Number of random trees; each is checked at every initial branch.
        #[arg(long)]
        corpus: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        max_edges: usize,
        #[arg(long, default_value_t = 3)]
        max_multiplicity: u32,
    },
    /// Describe a tree, or emit a Graphviz diagram with --dot.
    Render {
        tree: String,
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum)]
        pointing: Option<PointingArg>,
        #[arg(long)]
        branch: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Z,
    Aihara,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PointingArg {
    Ordinary,
    Reversed,
    #[value(name = "left-alt")]
    LeftAlt,
}

impl From<PointingArg> for PointingKind {
    fn from(p: PointingArg) -> PointingKind {
        match p {
            PointingArg::Ordinary => PointingKind::Ordinary,
            PointingArg::Reversed => PointingKind::Reversed,
            PointingArg::LeftAlt => PointingKind::LeftAlternating,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    TheoremZ,
    PropAihara,
    Corollary,
    Tilting,
    All,
}

impl ModeArg {
    fn modes(self) -> Vec<Mode> {
        match self {
            ModeArg::TheoremZ => vec![Mode::TheoremZ],
            ModeArg::PropAihara => vec![Mode::PropAihara],
            ModeArg::Corollary => vec![Mode::Corollary],
            ModeArg::Tilting => vec![Mode::Tilting],
            ModeArg::All => Mode::ALL.to_vec(),
        }
    }
}

/// Bad input: exit code 2.
#[derive(Debug)]
struct InputError(anyhow::Error);

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

fn load_tree(path: &str, stdin: &mut dyn Read) -> Result<BrauerTree, InputError> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text).context("reading stdin").map_err(InputError)?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {path}")).map_err(InputError)?;
    }
    format::parse_tree(&text).with_context(|| format!("parsing {path}")).map_err(InputError)
}

fn pick_branch(tree: &BrauerTree, branch: Option<&str>) -> Result<EdgeId, InputError> {
    let Some(label) = branch else { return Ok(tree.default_initial_edge()) };
    let e = tree.edge(label).map_err(|e| InputError(e.into()))?;
    tree.check_initial_edge(e).map_err(|e| InputError(e.into()))?;
    Ok(e)
}

fn reduction(tree: &BrauerTree, init: EdgeId, algo: Algo) -> anyhow::Result<MutationLog> {
    Ok(match algo {
        Algo::Z => run_algorithm_z(tree, init)?,
        Algo::Aihara => run_algorithm_aihara(tree, init)?,
    })
}

fn algo_name(algo: Algo) -> &'static str {
    match algo {
        Algo::Z => "z",
        Algo::Aihara => "aihara",
    }
}

fn print_json(out: &mut dyn Write, v: &Value) -> anyhow::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

fn verify_corpus(io: &mut Io, spec: CorpusSpec, modes: &[Mode]) -> anyhow::Result<bool> {
    let trees = corpus(&spec);
    let cases: Vec<(usize, EdgeId)> =
        trees.iter().enumerate().flat_map(|(i, t)| t.roots().iter().map(move |&r| (i, r))).collect();
    let results: Vec<(usize, EdgeId, Vec<Report>)> =
        cases.par_iter().map(|&(i, r)| (i, r, modes.iter().map(|&m| verify(&trees[i], r, m)).collect())).collect();
    let mut failures = Vec::new();
    for (i, r, reports) in &results {
        let t = &trees[*i];
        for rep in reports {
            for f in &rep.failures {
                failures.push(json!({
                    "tree": tree_digest(t),
                    "branch": t.label(*r),
                    "mode": rep.mode.name(),
                    "label": f.label,
                    "expected": f.expected,
                    "actual": f.actual,
                }));
            }
        }
    }
    let pass = failures.is_empty();
    print_json(
        io.out,
        &json!({
            "corpus": { "seed": spec.seed, "trees": spec.count, "maxEdges": spec.max_edges, "maxMultiplicity": spec.max_multiplicity },
            "cases": results.len(),
            "modes": modes.iter().map(|m| m.name()).collect::<Vec<_>>(),
            "pass": pass,
            "failures": failures,
        }),
    )?;
    Ok(pass)
}

/// Runs one command; `Ok(false)` means a verification failed.
fn run(command: Command, io: &mut Io) -> Result<anyhow::Result<bool>, InputError> {
    Ok(match command {
        Command::Reduce { tree, algo, branch } => {
            let t = load_tree(&tree, io.stdin)?;
            let init = pick_branch(&t, branch.as_deref())?;
            reduction(&t, init, algo)
                .and_then(|log| print_json(io.out, &log_to_value(&log, algo_name(algo))))
                .map(|_| true)
        }
        Command::Tilting { tree, pointing, branch, json } => {
            let t = load_tree(&tree, io.stdin)?;
            let init = pick_branch(&t, branch.as_deref())?;
            (|| {
                let (fam, n) = pointing_family(&t, pointing.into(), init)?;
                if json {
                    print_json(io.out, &family_to_value(&fam, Some((&t, &n))))?;
                } else {
                    write!(io.out, "{}", render_table("H", &fam, Some((&t, &n))))?;
                }
                Ok(true)
            })()
        }
        Command::Compose { tree, algo, branch, json } => {
            let t = load_tree(&tree, io.stdin)?;
            let init = pick_branch(&t, branch.as_deref())?;
            (|| {
                let log = reduction(&t, init, algo)?;
                let fam = compose_inverse_mutations(&log)?;
                let n = log.natural_numbering().ok_or_else(|| anyhow!("reduction did not reach the star"))?;
                if json {
                    print_json(io.out, &family_to_value(&fam, Some((&t, n))))?;
                } else {
                    write!(io.out, "{}", render_table("F", &fam, Some((&t, n))))?;
                }
                Ok(true)
            })()
        }
        Command::Sigma { tree, branch, json } => {
            let t = load_tree(&tree, io.stdin)?;
            let init = pick_branch(&t, branch.as_deref())?;
            (|| {
                let log = run_algorithm_aihara(&t, init)?;
                let f = compose_inverse_mutations(&log)?;
                let (h, _) = pointing_family(&t, PointingKind::LeftAlternating, init)?;
                let sigma = sigma_of(&f, &h)?;
                let predicted = expected_sigma(&t, log.natural_numbering().expect("complete log"))?;
                if json {
                    print_json(
                        io.out,
                        &json!({
                            "sigma": sigma.to_string(),
                            "images": sigma.images(),
                            "cycles": sigma.cycles(),
                            "matchesVertexCycles": sigma == predicted,
                        }),
                    )?;
                } else {
                    writeln!(io.out, "{sigma}")?;
                }
                Ok(sigma == predicted)
            })()
        }
        Command::Verify { tree, mode, branch, corpus, seed, max_edges, max_multiplicity } => {
            let modes = mode.modes();
            match (tree, corpus) {
                (Some(_), Some(_)) => return Err(InputError(anyhow!("give either a tree file or --corpus, not both"))),
                (None, None) => return Err(InputError(anyhow!("give a tree file or --corpus N"))),
                (None, Some(count)) => {
                    if max_edges < 2 || max_multiplicity < 1 {
                        return Err(InputError(anyhow!("corpus needs --max-edges >= 2 and --max-multiplicity >= 1")));
                    }
                    let spec = CorpusSpec { seed, count, min_edges: 2, max_edges, max_multiplicity };
                    verify_corpus(io, spec, &modes)
                }
                (Some(path), None) => {
                    let t = load_tree(&path, io.stdin)?;
                    let init = pick_branch(&t, branch.as_deref())?;
                    let reports: Vec<Report> = modes.iter().map(|&m| verify(&t, init, m)).collect();
                    let pass = reports.iter().all(Report::pass);
                    let v = if mode == ModeArg::All {
                        combined_report_value(&t, &reports)
                    } else {
                        report_to_value(&t, &reports[0])
                    };
                    print_json(io.out, &v).map(|_| pass)
                }
            }
        }
        Command::Render { tree, dot, pointing, branch } => {
            let t = load_tree(&tree, io.stdin)?;
            let init = pick_branch(&t, branch.as_deref())?;
            (|| {
                let kind = pointing.map(PointingKind::from).unwrap_or(PointingKind::Reversed);
                let p = t.make_pointing(kind);
                let n = t.numbering_from_pointing(&p, init)?;
                if dot {
                    let shown = pointing.map(|_| &p);
                    write!(io.out, "{}", render_dot(&t, shown, shown.map(|_| &n)))?;
                } else {
                    write!(io.out, "{}", render_summary(&t, &n))?;
                }
                Ok(true)
            })()
        }
    })
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code: 0 on success, 1 when a verification fails or a
/// computation errors, 2 on bad input.
pub fn execute<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return code;
        }
    };
    let mut io = Io { stdin, out: stdout };
    match run(cli.command, &mut io) {
        Err(InputError(e)) => {
            let _ = writeln!(stderr, "error: {e:#}");
            2
        }
        Ok(Err(e))
            if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            0
        }
        Ok(Err(e)) => {
            let _ = writeln!(stderr, "error: {e:#}");
            1
        }
        Ok(Ok(true)) => 0,
        Ok(Ok(false)) => 1,
    }
}
