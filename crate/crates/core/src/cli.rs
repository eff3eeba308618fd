//! The `bei` command line interface.
//!
//! ```text
//! bei <analyze|classify|gb|betti|corpus> [flags] [file]
//! ```
//!
//! A graph argument is a path to an edge-list file, `-` for standard
//! input, or `corpus:<name>` for a built-in graph.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::corpus;
use crate::error::{Error, Result};
use crate::graph::{parse_graph, Graph, Labeling};
use crate::poly::{parse_var, Field, DEFAULT_HILBERT_DEGREE};
use crate::report::{
    analyze, canonical, classification, corpus_row, cross_checks, gb_summary, CorpusReport,
    FieldSpec, Input, Report, Timer,
};
use crate::resolution::{
    betti_table_over_s, module_resolution_over_a, tor_table, ResolutionOptions, DEFAULT_GUARD,
};

#[derive(Debug, Parser)]
#[command(name = "bei", version, about = "Binomial edge ideals and Koszulness")]
pub struct Cli {
    #[command(flatten)]
    pub flags: Flags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Flags {
    /// Coefficient field: a prime `p`, `GF(p)`, or `QQ` (bases only).
    #[arg(long, global = true, default_value = "32003")]
    pub field: String,
    /// Monomial order: `lex`, `degrevlex` or `blocks:a,b,...`.
    #[arg(long, global = true, default_value = "lex")]
    pub order: String,
    /// Vertex relabeling as a comma separated permutation.
    #[arg(long, global = true)]
    pub labeling: Option<String>,
    /// Homological truncation.
    #[arg(long, global = true, default_value_t = 3)]
    pub imax: usize,
    /// Internal degree truncation.
    #[arg(long, global = true, default_value_t = 6)]
    pub jmax: u16,
    /// Largest graded piece dimension before refusing.
    #[arg(long, global = true, default_value_t = DEFAULT_GUARD)]
    pub guard: usize,
    /// Indented JSON plus a text rendering of tables.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chordality, claws, closedness, components and the clique complex.
    Analyze { file: String },
    /// Koszul verdict with certificates.
    Classify { file: String },
    /// Reduced Groebner basis and Hilbert function.
    Gb {
        file: String,
        #[arg(long, default_value_t = DEFAULT_HILBERT_DEGREE)]
        hilbert_degree: usize,
    },
    /// Betti or Tor table within the truncation.
    Betti {
        file: String,
        #[arg(long, value_enum, default_value_t = Mode::Tor)]
        mode: Mode,
        /// Module generators for `--mode module`, e.g. `x5,x6,y5,y6`.
        #[arg(long)]
        gens: Option<String>,
    },
    /// The built-in corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    #[value(name = "betti_S")]
    BettiS,
    Tor,
    Module,
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    List,
    /// Prints the graph file of a corpus graph.
    Emit { name: String },
    /// Aggregate verdicts over the whole corpus.
    RunAll {
        /// Also compute Tor tables within the truncation.
        #[arg(long)]
        tables: bool,
    },
}

/// Reads a graph argument.
pub fn load_graph(arg: &str) -> Result<Graph> {
    if let Some(name) = arg.strip_prefix("corpus:") {
        return corpus::lookup(name);
    }
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(arg)
            .map_err(|source| Error::ReadFile { path: arg.to_string(), source })?
    };
    parse_graph(&text)
}

impl Flags {
    fn options(&self) -> Result<ResolutionOptions> {
        Ok(ResolutionOptions {
            field: FieldSpec::parse(&self.field)?.prime()?,
            i_max: self.imax,
            j_max: self.jmax,
            guard: self.guard,
        })
    }

    fn labeling(&self, n: usize) -> Result<Labeling> {
        let lab = match &self.labeling {
            Some(text) => Labeling::parse(text)?,
            None => return Ok(Labeling::identity(n)),
        };
        if lab.len() != n {
            return Err(Error::InvalidLabeling(format!("expected {n} entries, got {}", lab.len())));
        }
        Ok(lab)
    }

    fn render(&self, r: &Report) -> String {
        if self.pretty { r.pretty() } else { r.json() }
    }
}

fn parse_gens(text: &str, n: usize) -> Result<Vec<usize>> {
    text.split(',').map(|t| parse_var(t.trim(), n)).collect()
}

/// Runs a parsed command and returns what it prints on standard output.
pub fn run(cli: &Cli) -> Result<String> {
    let timer = Timer::start();
    let f = &cli.flags;
    let mut report = match &cli.command {
        Command::Analyze { file } => {
            let g = load_graph(file)?;
            let mut r = Report::new("analyze", Input::new(file, &g));
            r.analysis = Some(analyze(&g));
            r
        }
        Command::Classify { file } => {
            let g = load_graph(file)?;
            let mut r = Report::new("classify", Input::new(file, &g));
            r.classification = Some(classification(&g));
            r
        }
        Command::Gb { file, hilbert_degree } => {
            let g = load_graph(file)?;
            let field = FieldSpec::parse(&f.field)?;
            let lab = f.labeling(g.n())?;
            let mut input = Input::new(file, &g);
            input.field = Some(field.name());
            input.order = Some(f.order.clone());
            input.labeling = Some(lab.clone());
            let mut r = Report::new("gb", input);
            r.groebner = Some(gb_summary(&g, field, &f.order, &lab, *hilbert_degree)?);
            r
        }
        Command::Betti { file, mode, gens } => {
            let g = load_graph(file)?;
            let opts = f.options()?;
            let mut input = Input::new(file, &g);
            input.field = Some(opts.field.name());
            input.trunc = Some((opts.i_max, opts.j_max));
            let table = match mode {
                Mode::BettiS => betti_table_over_s(&g, &opts)?,
                Mode::Tor => tor_table(&g, &opts)?,
                Mode::Module => {
                    let gens = gens
                        .as_deref()
                        .ok_or_else(|| Error::Spec("--mode module requires --gens".into()))?;
                    module_resolution_over_a(&g, &parse_gens(gens, g.n())?, &opts)?
                }
            };
            let mut r = Report::new("betti", input);
            r.table = Some(table);
            r
        }
        Command::Corpus { action } => return run_corpus(f, action, timer),
    };
    report.timing_ms = timer.ms();
    Ok(f.render(&report))
}

fn run_corpus(f: &Flags, action: &CorpusAction, timer: Timer) -> Result<String> {
    match action {
        CorpusAction::List => Ok(corpus::corpus()
            .iter()
            .map(|e| format!("{:<26} n={:<2} m={:<2} {}\n", e.name, e.graph.n(), e.graph.edge_count(), e.description))
            .collect()),
        CorpusAction::Emit { name } => Ok(corpus::lookup(name)?.to_graph_file()),
        CorpusAction::RunAll { tables } => {
            let opts = if *tables { Some(f.options()?) } else { None };
            let rows = corpus::corpus()
                .par_iter()
                .map(|e| corpus_row(&e.name, &e.graph, opts.as_ref()))
                .collect::<Result<Vec<_>>>()?;
            let report = CorpusReport {
                command: "corpus run-all".into(),
                cross_checks: cross_checks(&rows),
                rows,
                timing_ms: timer.ms(),
            };
            Ok(if f.pretty {
                serde_json::to_string_pretty(&report).expect("reports serialize")
            } else {
                serde_json::to_string(&report).expect("reports serialize")
            })
        }
    }
}

/// Output of `run` with timing removed, for determinism checks.
pub fn run_canonical(cli: &Cli) -> Result<String> {
    let out = run(cli)?;
    match serde_json::from_str::<serde_json::Value>(&out) {
        Ok(v) => Ok(canonical(&v)),
        Err(_) => Ok(out),
    }
}
