use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use stwiener::enumerate::{all_trees, trees_with_segment_count, trees_with_segment_sequence, TreeStream};
use stwiener::generators::{balanced_starlike, family_t, starlike, CaterpillarFamilyParams, Family};
use stwiener::moves::{hill_climb, Direction};
use stwiener::verify::{
    any_violated, verify_lemma31, verify_max_caterpillar_family, verify_max_quasi_caterpillar,
    verify_min_balanced, verify_min_starlike, verify_structure, Theorem, VerificationReport, Verdict,
};
use stwiener::{canonical_code, parse_edge_list, sw_k, sw_profile, SegmentSequence, Tree};

#[derive(Parser)]
#[command(name = "stwiener", version, about = "Steiner k-Wiener index of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the extremal trees.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// SW_k of a tree read from an edge list.
    Sw {
        #[arg(long, required_unless_present = "profile")]
        k: Option<usize>,
        /// Print SW_1 .. SW_n, one per line.
        #[arg(long)]
        profile: bool,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// List trees of order n, one canonical code per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_sequence, conflicts_with = "num_segments")]
        segments: Option<SegmentSequence>,
        #[arg(long)]
        num_segments: Option<usize>,
        #[arg(long)]
        count_only: bool,
    },
    /// Exhaustive or sampled check of one result.
    Verify(VerifyArgs),
    /// Hill-climb within the trees sharing the input's segment sequence.
    Optimize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        direction: DirectionArg,
        /// Print every applied move.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Args)]
struct Output {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
}

#[derive(Subcommand)]
enum GenKind {
    Starlike {
        #[arg(long, value_parser = parse_sequence)]
        segments: SegmentSequence,
        #[command(flatten)]
        output: Output,
    },
    Balanced {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        output: Output,
    },
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_family)]
        which: Family,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    theorem: TheoremArg,
    #[arg(long, required_unless_present = "samples")]
    max_n: Option<usize>,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
    k: Vec<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Max,
    Min,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Theorem1,
    Theorem2,
    Structure,
    Theorem5min,
    Theorem5max,
    Lemma31,
}

fn parse_sequence(s: &str) -> Result<SegmentSequence, String> {
    s.parse::<SegmentSequence>().map_err(|e| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

/// Distinguishes bad input (exit 2) from a failed check (exit 1).
enum Failure {
    Input(anyhow::Error),
    Violated,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violated) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen { kind } => gen(kind)?,
        Command::Sw { k, profile, input } => sw(k, profile, &input)?,
        Command::Enumerate { n, segments, num_segments, count_only } => {
            enumerate(n, segments, num_segments, count_only)?
        }
        Command::Verify(args) => return verify(args),
        Command::Optimize { input, k, direction, trace } => optimize(&input, k, direction, trace)?,
    }
    Ok(())
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn render(t: &Tree, format: Format) -> String {
    match format {
        Format::Edgelist => t.to_edge_list(),
        Format::Dot => t.to_dot(),
    }
}

fn gen(kind: GenKind) -> Result<()> {
    let (tree, output) = match kind {
        GenKind::Starlike { segments, output } => (starlike(&segments)?, output),
        GenKind::Balanced { n, m, output } => (balanced_starlike(n, m)?, output),
        GenKind::Family { n, m, which, output } => {
            let f = family_t(CaterpillarFamilyParams { n, m, which })?;
            if f.t_adjusted() {
                eprintln!(
                    "note: nominal t = {} does not give order {n}; using t = {}",
                    f.nominal_t, f.t
                );
            }
            (f.tree, output)
        }
    };
    emit(&render(&tree, output.format), output.out.as_deref())
}

fn read_tree(path: &Path) -> Result<Tree> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn sw(k: Option<usize>, profile: bool, input: &Path) -> Result<()> {
    let t = read_tree(input)?;
    let mut out = String::new();
    if profile {
        for (i, v) in sw_profile(&t)?.values().iter().enumerate() {
            out.push_str(&format!("{}\t{v}\n", i + 1));
        }
    } else {
        let k = k.expect("clap requires --k without --profile");
        out.push_str(&format!("{}\n", sw_k(&t, k)?));
    }
    emit(&out, None)
}

fn enumerate(n: usize, segments: Option<SegmentSequence>, num_segments: Option<usize>, count_only: bool) -> Result<()> {
    let stream: TreeStream = match (segments, num_segments) {
        (Some(seq), _) => {
            if seq.order() != n {
                bail!("segments {seq} give order {}, not {n}", seq.order());
            }
            trees_with_segment_sequence(&seq)?
        }
        (None, Some(m)) => trees_with_segment_count(n, m)?,
        (None, None) => all_trees(n)?,
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    if count_only {
        writeln!(out, "{}", stream.count())?;
    } else {
        for t in stream {
            writeln!(out, "{}", canonical_code(&t))?;
        }
    }
    out.flush()?;
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let theorem = match args.theorem {
        TheoremArg::Theorem1 => Theorem::Theorem1,
        TheoremArg::Theorem2 => Theorem::Theorem2,
        TheoremArg::Structure => Theorem::Structure,
        TheoremArg::Theorem5min => Theorem::Theorem5min,
        TheoremArg::Theorem5max => Theorem::Theorem5max,
        TheoremArg::Lemma31 => Theorem::Lemma31,
    };
    let reports: Vec<VerificationReport> = if theorem == Theorem::Lemma31 {
        let samples = args.samples.unwrap_or(200);
        verify_lemma31(samples, args.seed, &args.k).map_err(anyhow::Error::from)?
    } else {
        let Some(max_n) = args.max_n else {
            return Err(anyhow::anyhow!("--max-n is required for {theorem}").into());
        };
        let run = match theorem {
            Theorem::Theorem1 => verify_min_starlike,
            Theorem::Theorem2 => verify_max_quasi_caterpillar,
            Theorem::Structure => verify_structure,
            Theorem::Theorem5min => verify_min_balanced,
            _ => verify_max_caterpillar_family,
        };
        run(max_n, &args.k).map_err(anyhow::Error::from)?
    };

    if let Some(path) = &args.report {
        let json = serde_json::to_string_pretty(&reports).map_err(anyhow::Error::from)?;
        fs::write(path, json + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    println!(
        "{theorem}: {} instances, {} confirmed, {} confirmed-with-notes, {} violated",
        reports.len(),
        count(Verdict::Confirmed),
        count(Verdict::ConfirmedWithNotes),
        count(Verdict::Violated)
    );
    for r in reports.iter().filter(|r| r.verdict == Verdict::Violated) {
        println!(
            "violated: {} k={} value {}",
            serde_json::to_string(&r.instance_class).map_err(anyhow::Error::from)?,
            r.k,
            r.extremal_value
        );
    }
    if any_violated(&reports) {
        Err(Failure::Violated)
    } else {
        Ok(())
    }
}

fn optimize(input: &Path, k: usize, direction: DirectionArg, trace: bool) -> Result<()> {
    let t = read_tree(input)?;
    let dir = match direction {
        DirectionArg::Max => Direction::Maximize,
        DirectionArg::Min => Direction::Minimize,
    };
    let start = sw_k(&t, k)?;
    let r = hill_climb(&t, k, dir)?;
    let mut out = format!("# SW_{k}: {start} -> {} after {} moves\n", r.value, r.steps.len());
    if trace {
        for (i, s) in r.steps.iter().enumerate() {
            out.push_str(&format!("# {}: {} (delta {}, now {})\n", i + 1, s.descriptor, s.delta, s.value));
        }
    }
    out.push_str(&format!("# {}\n", canonical_code(&r.tree)));
    out.push_str(&r.tree.to_edge_list());
    emit(&out, None)
}
