mod commands;
mod input;

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use poc_core::MAX_VERTICES;

use input::FormatArg;

#[derive(Parser)]
#[command(
    name = "poc",
    version,
    about = "Vertex cover, connected vertex cover and their ratio on small graphs",
    after_help = "Exit status: 0 on success, 1 if a check found a violation \
                  (or a recognition was rejected), 2 on usage or input errors."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    format: Output,

    /// Input format; `auto` looks at the extension, then the first line.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Auto)]
    input_format: FormatArg,

    /// Reject input graphs with more vertices than this.
    #[arg(long, global = true, env = "POC_MAX_VERTICES", default_value_t = MAX_VERTICES)]
    max_vertices: usize,

    /// Largest constructed graph that `--verify` will solve exactly.
    #[arg(long, global = true, env = "POC_VERIFY_BUDGET", default_value_t = 64)]
    verify_budget: usize,

    /// Largest order enumerated by `scan` (never above 10).
    #[arg(long, global = true, env = "POC_ENUMERATION_CAP")]
    enumeration_cap: Option<usize>,

    /// Seed for sampled checks.
    #[arg(long, global = true, env = "POC_SEED", default_value_t = 1)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Graph6,
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GadgetKind {
    Fixtauc,
    Fixtau,
    Replicate,
    Caterpillar,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Obs1,
    Thm2,
    Thm3,
    Thm4,
    Cor1,
    Thm5,
    Thm6,
    Gadgets,
}

#[derive(Subcommand)]
enum Command {
    /// Cover numbers, witnesses and PoC of every graph in FILE.
    Analyze {
        file: String,
        /// Also decide criticality and strong criticality (small graphs only).
        #[arg(long)]
        critical: bool,
    },
    /// Most restrictive forbidden-subgraph class of every graph in FILE.
    Classify { file: String },
    /// Build a gadget from the graph in FILE.
    Gadget {
        kind: GadgetKind,
        file: String,
        /// Number of copies for `replicate`.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Vertex of each copy joined to the hub for `replicate`.
        #[arg(long, default_value_t = 0)]
        anchor: usize,
        /// Length of the pendant-bearing path for `caterpillar`.
        #[arg(long, default_value_t = 0)]
        a: usize,
        /// Half the length of the second path for `caterpillar`.
        #[arg(long, default_value_t = 0)]
        b: usize,
        /// Solve the result exactly and compare with the prediction.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
    },
    /// Build the instance comparing tau(G) and tau(H) through a PoC threshold.
    Reduce {
        #[arg(long = "g")]
        g: String,
        #[arg(long = "h")]
        h: String,
        /// Threshold p/q with q < p < 2q.
        #[arg(long)]
        ratio: String,
        /// Solve every stage within the verify budget and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
    },
    /// Exhaustively check a statement on small graphs.
    Scan {
        #[arg(long, value_enum)]
        check: Check,
        /// Largest order to enumerate, or the order of sampled graphs.
        #[arg(long)]
        max_n: Option<usize>,
        /// Check the graphs in this file instead of enumerating.
        #[arg(long, conflicts_with = "sample")]
        input: Option<String>,
        /// Check this many random graphs on `--max-n` vertices (each pair
        /// an edge with probability 1/2) instead of enumerating.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Build a special tree from a base tree, or recognise one.
    #[command(group(ArgGroup::new("mode").required(true).args(["base", "recognize"])))]
    SpecialTree {
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        recognize: Option<String>,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
    },
}

pub struct Settings {
    pub output: Output,
    pub input_format: FormatArg,
    pub max_vertices: usize,
    pub verify_budget: usize,
    pub enumeration_cap: Option<usize>,
    pub seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = Settings {
        output: cli.format,
        input_format: cli.input_format,
        max_vertices: cli.max_vertices,
        verify_budget: cli.verify_budget,
        enumeration_cap: cli.enumeration_cap,
        seed: cli.seed,
    };
    let result = match cli.command {
        Command::Analyze { file, critical } => commands::analyze(&settings, &file, critical),
        Command::Classify { file } => commands::classify(&settings, &file),
        Command::Gadget {
            kind,
            file,
            k,
            anchor,
            a,
            b,
            verify,
            emit,
        } => commands::gadget(
            &settings,
            &commands::GadgetArgs {
                kind,
                file,
                k,
                anchor,
                a,
                b,
                verify,
                emit,
            },
        ),
        Command::Reduce {
            g,
            h,
            ratio,
            verify,
            emit,
        } => commands::reduce(&settings, &g, &h, &ratio, verify, emit),
        Command::Scan {
            check,
            max_n,
            input,
            sample,
        } => commands::scan(&settings, check, max_n, input.as_deref(), sample),
        Command::SpecialTree {
            base,
            recognize,
            emit,
        } => commands::special_tree(&settings, base.as_deref(), recognize.as_deref(), emit),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
