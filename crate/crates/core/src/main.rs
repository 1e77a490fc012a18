use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use distq::bench::{
    emit_report, run_benchmark, run_search_command, BenchSpec, CorpusSource, ReportFormat,
    SearchRequest,
};
use distq::corpus::{
    fibonacci_string, load_text, random_text_with_occurrences, CorpusSpec, RNG_NAME,
};
use distq::{Algorithm, Error, Result};

#[derive(Parser)]
#[command(name = "distq", version, about = "Exact string matching with q-gram distance shifts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every occurrence of a pattern in a text, one position per line.
    Search(SearchArgs),
    /// Time algorithms over a corpus and emit a report.
    Bench(BenchArgs),
    /// Write a generated corpus to disk.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Args)]
struct SearchArgs {
    /// Text file, read as raw bytes.
    #[arg(long, conflicts_with = "text_literal", required_unless_present = "text_literal")]
    text: Option<PathBuf>,
    /// Text given inline.
    #[arg(long)]
    text_literal: Option<String>,
    /// Pattern given inline.
    #[arg(long, short, conflicts_with = "pattern_file", required_unless_present = "pattern_file")]
    pattern: Option<String>,
    /// Pattern file, read as raw bytes.
    #[arg(long)]
    pattern_file: Option<PathBuf>,
    #[arg(long, short, default_value = "distq")]
    algorithm: String,
    #[arg(short, default_value_t = 4)]
    q: usize,
    /// Print 0-based offsets instead of 1-based positions.
    #[arg(long)]
    zero_based: bool,
    /// Drop line-feed bytes from file inputs.
    #[arg(long)]
    strip_newlines: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Use Fib_k as the text.
    #[arg(long, group = "source")]
    fib: Option<usize>,
    /// Use a file as the text.
    #[arg(long, group = "source")]
    text: Option<PathBuf>,
    /// Generate texts of this length with embedded occurrences.
    #[arg(long, group = "source")]
    generate: Option<usize>,
    /// Alphabet size for generated texts.
    #[arg(long, default_value_t = 4)]
    sigma: usize,
    /// Occurrence counts for generated texts.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    occ: Vec<usize>,
    #[arg(long, short, value_delimiter = ',', default_value = "kmp,hashq,distq,ldistq")]
    algorithms: Vec<String>,
    #[arg(short, value_delimiter = ',', default_value = "2,4,8")]
    q: Vec<usize>,
    /// Pattern lengths.
    #[arg(short, value_delimiter = ',', default_value = "8")]
    m: Vec<usize>,
    /// Patterns sampled per length from file or Fibonacci texts.
    #[arg(long, default_value_t = 10)]
    patterns: usize,
    #[arg(long, default_value_t = 25)]
    reps: usize,
    /// Best-of trial count.
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "csv")]
    format: String,
    /// Write the report here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long)]
    strip_newlines: bool,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Write Fib_k.
    Fib {
        #[arg(long)]
        k: usize,
        #[arg(long, short)]
        output: PathBuf,
    },
    /// Write a random text with a pattern embedded exactly `occ` times.
    Embed {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        sigma: usize,
        #[arg(short, default_value_t = 8)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        occ: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, short)]
        output: PathBuf,
        /// Where to write the embedded pattern.
        #[arg(long)]
        pattern_output: PathBuf,
    },
}

fn write_file(path: &PathBuf, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes).map_err(|source| Error::Io {
        path: path.clone(),
        source,
    })
}

fn search(args: SearchArgs) -> Result<i32> {
    let text = match (&args.text, &args.text_literal) {
        (Some(path), _) => load_text(path, args.strip_newlines)?,
        (None, Some(lit)) => lit.as_bytes().to_vec(),
        (None, None) => unreachable!("clap requires a text source"),
    };
    let pattern = match (&args.pattern, &args.pattern_file) {
        (Some(lit), _) => lit.as_bytes().to_vec(),
        (None, Some(path)) => load_text(path, args.strip_newlines)?,
        (None, None) => unreachable!("clap requires a pattern source"),
    };
    let req = SearchRequest {
        text: &text,
        pattern: &pattern,
        algorithm: args.algorithm.parse()?,
        q: args.q,
        zero_based: args.zero_based,
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let status = run_search_command(&req, &mut out, &mut io::stderr())?;
    out.flush().map_err(|source| Error::Io {
        path: "<stdout>".into(),
        source,
    })?;
    Ok(status)
}

fn bench(args: BenchArgs) -> Result<i32> {
    let source = match (args.fib, args.text, args.generate) {
        (Some(k), None, None) => CorpusSource::Fibonacci { k },
        (None, Some(path), None) => CorpusSource::File {
            path,
            strip_newlines: args.strip_newlines,
        },
        (None, None, Some(n)) => CorpusSource::Embedded {
            n,
            sigma: args.sigma,
            occs: args.occ,
        },
        _ => {
            return Err(Error::Config(
                "exactly one of --fib, --text or --generate is required".into(),
            ))
        }
    };
    let algorithms = args
        .algorithms
        .iter()
        .map(|a| a.parse::<Algorithm>())
        .collect::<Result<Vec<_>>>()?;
    let format: ReportFormat = args.format.parse()?;
    let spec = BenchSpec {
        source,
        algorithms,
        qs: args.q,
        pattern_lengths: args.m,
        patterns_per_length: args.patterns,
        repetitions: args.reps,
        trials: args.trials,
        seed: args.seed,
    };
    eprintln!("corpus generator: {RNG_NAME}, seed {}", spec.seed);
    let rows = run_benchmark(&spec)?;
    let report = emit_report(&rows, format)?;
    match &args.output {
        Some(path) => write_file(path, report.as_bytes())?,
        None => print!("{report}"),
    }
    Ok(0)
}

fn generate(cmd: GenCommand) -> Result<i32> {
    match cmd {
        GenCommand::Fib { k, output } => {
            let text = fibonacci_string(k)?;
            write_file(&output, &text)?;
            eprintln!("wrote Fib_{k} ({} bytes) to {}", text.len(), output.display());
        }
        GenCommand::Embed {
            n,
            sigma,
            m,
            occ,
            seed,
            output,
            pattern_output,
        } => {
            let corpus = random_text_with_occurrences(&CorpusSpec {
                n,
                sigma,
                m,
                occ,
                seed,
            })?;
            write_file(&output, &corpus.text)?;
            write_file(&pattern_output, &corpus.pattern)?;
            eprintln!(
                "wrote {n} bytes with {occ} occurrences to {} ({RNG_NAME}, seed {seed})",
                output.display()
            );
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Search(args) => search(args),
        Command::Bench(args) => bench(args),
        Command::Gen(cmd) => generate(cmd),
    };
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
