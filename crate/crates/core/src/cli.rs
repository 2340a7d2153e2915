//! The `coxy` command line.
//!
//! ```text
//! coxy [--tree a,b,c] [--porcelain] analyze FILE
//! coxy solve FILE WORD
//! coxy equal FILE WORD1 WORD2
//! coxy kernel FILE WORD
//! coxy verify FILE [--seed S] [--trials K]
//! coxy tsaranov A B T
//! ```
//!
//! Exit status is 2 for usage and input errors, 1 when verification fails or
//! a word names an unknown edge, 0 otherwise.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::coxy::{Context, Verdict};
use crate::error::Error;
use crate::freeprod::SemidirectElement;
use crate::graph::{EdgeWord, Graph};
use crate::oracle::verify_all;
use crate::presentation::{factor_ftn, tsaranov_presentation};

#[derive(Debug, Parser)]
#[command(name = "coxy", version, about = "Word problems and structure of graph cover groups")]
struct Cli {
    /// Spanning tree as comma-separated edge labels (default: BFS from vertex 1)
    #[arg(long, global = true, value_delimiter = ',')]
    tree: Option<Vec<String>>,

    /// Print key=value lines
    #[arg(long, global = true)]
    porcelain: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structure report for a graph
    Analyze { file: PathBuf },
    /// Decide whether a word is trivial
    Solve {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Decide whether two words are equal
    Equal { file: PathBuf, word1: String, word2: String },
    /// Decide whether a word maps to the identity permutation
    Kernel { file: PathBuf, word: String },
    /// Run every oracle check on a graph
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Graph and relator data of a Tsaranov group
    Tsaranov { a: usize, b: usize, t: usize },
}

struct Outcome {
    code: i32,
    out: String,
}

impl Outcome {
    fn ok(out: String) -> Self {
        Outcome { code: 0, out }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            out: format!("error: {msg}\n"),
        }
    }
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<S: AsRef<str>>(args: &[S]) -> (i32, String) {
    let args: Vec<&str> = args.iter().map(|s| s.as_ref()).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let o = dispatch(&cli);
    (o.code, o.out)
}

fn load(cli: &Cli, file: &PathBuf) -> Result<Context, Outcome> {
    let text = std::fs::read_to_string(file).map_err(|e| Outcome::usage(format!("{}: {e}", file.display())))?;
    let graph = Graph::parse(&text).map_err(|e| Outcome::usage(format!("{}: {e}", file.display())))?;
    let ctx = match &cli.tree {
        Some(labels) => Context::with_tree_labels(graph, labels),
        None => Context::build(graph),
    };
    ctx.map_err(Outcome::usage)
}

fn word(ctx: &Context, text: &str) -> Result<EdgeWord, Outcome> {
    ctx.parse_word(text).map_err(|e| Outcome {
        code: if matches!(e, Error::UnknownLabel(_)) { 1 } else { 2 },
        out: format!("error: {e}\n"),
    })
}

fn dispatch(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Analyze { file } => load(cli, file).map(|ctx| analyze(cli, &ctx)),
        Command::Solve { file, word: w } => load(cli, file)
            .and_then(|ctx| word(&ctx, w).map(|w| (ctx, w)))
            .map(|(ctx, w)| solve(cli, &ctx, &w, false)),
        Command::Equal { file, word1, word2 } => load(cli, file).and_then(|ctx| {
            let w1 = word(&ctx, word1)?;
            let w2 = word(&ctx, word2)?;
            Ok(solve(cli, &ctx, &w1.concat(&w2.inverse()), true))
        }),
        Command::Kernel { file, word: w } => load(cli, file)
            .and_then(|ctx| word(&ctx, w).map(|w| (ctx, w)))
            .map(|(ctx, w)| kernel(cli, &ctx, &w)),
        Command::Verify { file, seed, trials } => load(cli, file).map(|ctx| verify(cli, &ctx, *seed, *trials)),
        Command::Tsaranov { a, b, t } => tsaranov(cli, *a, *b, *t),
    };
    result.unwrap_or_else(|o| o)
}

fn analyze(cli: &Cli, ctx: &Context) -> Outcome {
    let r = ctx.structure_report();
    let g = ctx.graph();
    let tree: Vec<&str> = ctx.tree().tree_edges().iter().map(|&e| g.label(e)).collect();
    let mut out = String::new();
    if cli.porcelain {
        let class = match r.classification {
            crate::coxy::Classification::SymmetricGroup => "symmetric",
            crate::coxy::Classification::VirtuallyAbelian => "virtually-abelian",
            crate::coxy::Classification::ContainsFreeSubgroup => "free-subgroup",
        };
        let _ = writeln!(out, "n={}", r.n);
        let _ = writeln!(out, "t={}", r.t);
        let _ = writeln!(out, "edges={}", g.edge_count());
        let _ = writeln!(out, "tree={}", tree.join(","));
        let _ = writeln!(out, "classification={class}");
        let _ = writeln!(out, "group={}", r.group());
        let _ = writeln!(out, "rank={}", r.kernel_ab_rank);
        let _ = writeln!(out, "k4={}", r.flags.is_k4);
        let _ = writeln!(out, "torsion_free_kernel={}", r.flags.torsion_free_kernel);
        let _ = writeln!(out, "residually_finite={}", r.flags.residually_finite);
        let _ = writeln!(out, "word_problem_exact={}", r.flags.word_problem_exact);
        return Outcome::ok(out);
    }
    let _ = writeln!(out, "graph: {} vertices, {} edges", g.n(), g.edge_count());
    let _ = writeln!(out, "spanning tree: {}", tree.join(" "));
    let _ = writeln!(out, "{r}");
    if r.flags.is_k4 {
        let _ = writeln!(out, "QUOTIENT-ONLY (K4): answers are exact in S_4 ⋉ F_{{3,4}}, a quotient of the group");
    }
    for cyc in ctx.cycles() {
        let verts: Vec<String> = cyc.vertices().iter().map(|v| v.to_string()).collect();
        let edges: Vec<String> = (1..=cyc.m()).map(|i| format!("u{i}={}", g.label(cyc.u(i)))).collect();
        let _ = writeln!(
            out,
            "cycle {}: vertices {} (local 1..{}), {}",
            g.label(cyc.chord),
            verts.join(" "),
            cyc.m(),
            edges.join(" ")
        );
    }
    Outcome::ok(out)
}

fn factors(f: &crate::freeprod::FStarElement) -> String {
    factor_ftn(f).map(|w| w.to_string()).unwrap_or_else(|e| format!("({e})"))
}

fn solve(cli: &Cli, ctx: &Context, w: &EdgeWord, equal: bool) -> Outcome {
    let verdict = ctx.is_trivial(w);
    let mut out = String::new();
    if cli.porcelain {
        let v = match &verdict {
            Verdict::Trivial => "trivial",
            Verdict::Nontrivial(_) => "nontrivial",
            Verdict::TrivialInQuotient => "quotient",
        };
        let _ = writeln!(out, "verdict={v}");
        if equal {
            let _ = writeln!(out, "equal={}", verdict.is_trivial());
        }
        if let Verdict::Nontrivial(img) = &verdict {
            let _ = writeln!(out, "kernel={}", img.perm.is_identity());
            let _ = writeln!(out, "perm={}", img.perm);
            let _ = writeln!(out, "f={}", img.f);
            let _ = writeln!(out, "factors={}", factors(&img.f));
            let _ = writeln!(out, "witness={img}");
            if let Ok(nf) = ctx.psi(img) {
                let _ = writeln!(out, "word={}", ctx.word_to_string(&nf));
            }
        }
        return Outcome::ok(out);
    }
    match &verdict {
        Verdict::Trivial => {
            let _ = writeln!(out, "{}", if equal { "EQUAL" } else { "TRIVIAL" });
        }
        Verdict::TrivialInQuotient => {
            let head = if equal { "EQUAL" } else { "TRIVIAL" };
            let _ = writeln!(out, "{head} QUOTIENT-ONLY (K4)");
            let _ = writeln!(out, "the image in S_4 ⋉ F_{{3,4}} is trivial; the group itself is not decided");
        }
        Verdict::Nontrivial(img) => {
            if equal {
                let _ = writeln!(out, "NOT EQUAL");
            }
            if img.perm.is_identity() {
                let _ = writeln!(out, "NONTRIVIAL kernel element: {}", factors(&img.f));
            } else {
                let _ = writeln!(out, "NONTRIVIAL permutation {}", img.perm);
            }
            write_witness(&mut out, ctx, img);
        }
    }
    Outcome::ok(out)
}

fn write_witness(out: &mut String, ctx: &Context, img: &SemidirectElement) {
    let _ = writeln!(out, "witness: {img}");
    if let Ok(nf) = ctx.psi(img) {
        let _ = writeln!(out, "normal form word: {}", ctx.word_to_string(&nf));
    }
}

fn kernel(cli: &Cli, ctx: &Context, w: &EdgeWord) -> Outcome {
    let (inside, f) = ctx.in_kernel(w);
    let img = ctx.phi(w);
    let mut out = String::new();
    if cli.porcelain {
        let _ = writeln!(out, "kernel={inside}");
        let _ = writeln!(out, "perm={}", img.perm);
        let _ = writeln!(out, "f={f}");
        let _ = writeln!(out, "factors={}", factors(&f));
        return Outcome::ok(out);
    }
    if inside {
        let _ = writeln!(out, "IN KERNEL");
    } else {
        let _ = writeln!(out, "NOT IN KERNEL: permutation {}", img.perm);
    }
    let _ = writeln!(out, "F part: {f}");
    let _ = writeln!(out, "as generators: {}", factors(&f));
    Outcome::ok(out)
}

fn verify(cli: &Cli, ctx: &Context, seed: u64, trials: usize) -> Outcome {
    let reports = verify_all(ctx, seed, trials);
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut out = String::new();
    for r in &reports {
        if cli.porcelain {
            let status = if r.passed() { "pass" } else { "fail" };
            let _ = writeln!(out, "check={} status={status} checks={} failures={}", r.id, r.checks_run, r.failures.len());
        } else {
            let _ = writeln!(out, "{r}");
        }
    }
    if ctx.is_k4() {
        let _ = writeln!(out, "QUOTIENT-ONLY (K4): checks run in S_4 ⋉ F_{{3,4}}");
    }
    if cli.porcelain {
        let _ = writeln!(out, "seed={seed}");
        let _ = writeln!(out, "failed={failed}");
    } else {
        let _ = writeln!(out, "{} of {} reports passed", reports.len() - failed, reports.len());
    }
    Outcome {
        code: if failed == 0 { 0 } else { 1 },
        out,
    }
}

fn tsaranov(cli: &Cli, a: usize, b: usize, t: usize) -> Result<Outcome, Outcome> {
    let r = tsaranov_presentation(a, b, t).map_err(Outcome::usage)?;
    if !cli.porcelain {
        return Ok(Outcome::ok(format!("{r}\n")));
    }
    let mut out = String::new();
    let _ = writeln!(out, "a={a}");
    let _ = writeln!(out, "b={b}");
    let _ = writeln!(out, "n={}", r.n);
    let _ = writeln!(out, "t={}", r.t);
    let _ = writeln!(out, "relators={}", if r.t == 0 { "none" } else { &r.relator_family });
    let edges: Vec<String> = r.graph.edges().iter().map(|e| format!("{}:{}-{}", e.label, e.a, e.b)).collect();
    let _ = writeln!(out, "edges={}", edges.join(","));
    Ok(Outcome::ok(out))
}
