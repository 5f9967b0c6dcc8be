use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use revpat::analytics::{factor_complexity, list_palindromes, list_squares, morse_hedlund_evidence, Parity};
use revpat::generators::generate;
use revpat::matcher::find_occurrence;
use revpat::pattern::Pattern;
use revpat::search::{count_avoiders, estimate_index, search, DEFAULT_DEPTH};
use revpat::verify::{emit_report, run_suite, ReportFormat, Status, DEFAULT_PREFIX_LEN};
use revpat::{Error, Word};

#[derive(Parser)]
#[command(name = "revpat", version, about = "Binary patterns with reversed variables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a word meets a pattern.
    Check {
        #[arg(long)]
        pattern: String,
        #[command(flatten)]
        input: WordInput,
    },
    /// Depth-first search for long avoiding words.
    Search {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        alphabet: u8,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print a prefix of a named infinite word.
    Generate {
        #[arg(long)]
        name: String,
        #[arg(long)]
        length: usize,
    },
    /// Count avoiding words of each length 1..=max-len.
    Count {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        alphabet: u8,
        #[arg(long)]
        max_len: usize,
    },
    /// Estimate the avoidability index.
    Index {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        max_k: u8,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Run the registered claim checks.
    Verify {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = DEFAULT_PREFIX_LEN)]
        prefix_len: usize,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Squares, palindromes and factor complexity of a word.
    Analyze {
        #[command(flatten)]
        input: WordInput,
        #[arg(long, value_name = "MINROOT")]
        squares: Option<usize>,
        #[arg(long, value_name = "MINLEN")]
        palindromes: Option<usize>,
        #[arg(long, default_value = "all")]
        parity: String,
        #[arg(long, value_name = "NMAX")]
        complexity: Option<usize>,
    },
}

#[derive(Args)]
struct WordInput {
    #[arg(long, conflicts_with_all = ["word_file", "generator"])]
    word: Option<String>,
    #[arg(long, conflicts_with = "generator")]
    word_file: Option<PathBuf>,
    #[arg(long, requires = "length")]
    generator: Option<String>,
    #[arg(long, requires = "generator")]
    length: Option<usize>,
}

enum Failure {
    Usage(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceGuard(_) => Failure::Guard(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn read_word(input: &WordInput) -> Result<Word, Failure> {
    if let Some(w) = &input.word {
        return Ok(Word::parse_digits(w)?);
    }
    if let Some(path) = &input.word_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        return Ok(Word::parse_digits(text.trim_end())?);
    }
    match (&input.generator, input.length) {
        (Some(g), Some(n)) => Ok(generate(g, n)?),
        _ => Err(Failure::Usage("give --word, --word-file, or --generator with --length".into())),
    }
}

fn run(cmd: Command) -> Outcome {
    let mut out = String::new();
    let code = match cmd {
        Command::Check { pattern, input } => {
            let p = Pattern::parse(&pattern)?;
            let w = read_word(&input)?;
            match find_occurrence(&w, &p) {
                Some(occ) => {
                    writeln!(out, "meets\n{occ}").unwrap();
                    1
                }
                None => {
                    out.push_str("avoids\n");
                    0
                }
            }
        }
        Command::Search { pattern, alphabet, depth, json } => {
            let r = search(&Pattern::parse(&pattern)?, alphabet, depth)?;
            if json {
                writeln!(out, "{}", r.to_json()).unwrap();
            } else {
                writeln!(out, "{r}").unwrap();
                if let revpat::search::Verdict::DepthExhausted(w) = &r.verdict {
                    writeln!(out, "witness {}", w.to_digits()).unwrap();
                }
                writeln!(out, "nodes {} ms {}", r.nodes_explored, r.wall_time_ms).unwrap();
            }
            0
        }
        Command::Generate { name, length } => {
            writeln!(out, "{}", generate(&name, length)?.to_digits()).unwrap();
            0
        }
        Command::Count { pattern, alphabet, max_len } => {
            for c in count_avoiders(&Pattern::parse(&pattern)?, alphabet, max_len)?.iter().skip(1) {
                writeln!(out, "{c}").unwrap();
            }
            0
        }
        Command::Index { pattern, max_k, depth } => {
            let est = estimate_index(&Pattern::parse(&pattern)?, max_k, depth)?;
            let candidate = est.candidate.map_or("none".to_string(), |k| k.to_string());
            writeln!(
                out,
                "lower_bound {} candidate {} depth {}",
                est.lower_bound, candidate, est.depth_used
            )
            .unwrap();
            for o in &est.outcomes {
                writeln!(out, "k={} {o}", o.alphabet_size).unwrap();
            }
            0
        }
        Command::Verify { filter, prefix_len, depth, format } => {
            let format: ReportFormat = format.parse()?;
            let report = run_suite(filter.as_deref(), prefix_len, depth)?;
            if report.unknown_filter {
                eprintln!("no registered check matches {:?}", filter.unwrap_or_default());
            }
            out.push_str(&emit_report(&report, format));
            eprintln!(
                "{} pass, {} fail, {} info",
                report.count(Status::Pass),
                report.count(Status::Fail),
                report.count(Status::Info)
            );
            u8::from(!report.all_passed())
        }
        Command::Analyze { input, squares, palindromes, parity, complexity } => {
            let w = read_word(&input)?;
            let parity: Parity = parity.parse()?;
            writeln!(out, "length {}", w.len()).unwrap();
            if let Some(min_root) = squares {
                let list = list_squares(&w, min_root)?;
                writeln!(out, "squares {}", list.len()).unwrap();
                for (pos, root) in list {
                    writeln!(out, "{pos} {}", root.to_digits()).unwrap();
                }
            }
            if let Some(min_len) = palindromes {
                let list = list_palindromes(&w, min_len, parity)?;
                writeln!(out, "palindromes {}", list.len()).unwrap();
                for (pos, len) in list {
                    writeln!(out, "{pos} {}", w.factor(pos, pos + len).to_digits()).unwrap();
                }
            }
            if let Some(n_max) = complexity {
                for n in 1..=n_max {
                    writeln!(out, "p({n}) {}", factor_complexity(&w, n)?).unwrap();
                }
                if w.len() >= 2 * n_max {
                    writeln!(out, "{}", morse_hedlund_evidence(&w, n_max)?).unwrap();
                }
            }
            0
        }
    };
    Ok((out, code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
