//! `lrm`: batch tools for local rank modulation coding.
//!
//! Exit codes are stable per failure class: 0 success, 1 parse or shape
//! error, 2 tied window, 3 not realizable / illegal codeword, 4 budget
//! exhaustion, 5 validation failure.

mod fail;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lrm_core::scheme12::{
    build_graph, construct_2n_code, longest_cycle, validate_gray, BinaryWord, GrayCode,
};
use lrm_core::scheme13::{self, BaseWord13, CountMethod, CountReport, TernaryWord};
use lrm_core::{demodulate, realize, BaseWord, ChargeConfig, LrmParams, SearchBudget};

use fail::CliError;

#[derive(Parser)]
#[command(name = "lrm", version, about = "Local rank modulation coding tools")]
struct Cli {
    /// Output format; csv applies to `count` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Whichever of orders/scan enumerates the smaller space.
    Auto,
    /// Demodulate all n! charge orders.
    Orders,
    /// Test all 3^n ternary words.
    Scan,
    /// Run both and require agreement.
    Both,
}

impl From<MethodArg> for CountMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => CountMethod::Auto,
            MethodArg::Orders => CountMethod::Orders,
            MethodArg::Scan => CountMethod::Scan,
            MethodArg::Both => CountMethod::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Demodulate charge levels into a base-word (plus its codeword for the
    /// (1,2,n) and (1,3,n) schemes).
    Demod {
        /// Comma-separated integer charge levels, one per cell.
        #[arg(long)]
        levels: String,
        /// Window step.
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Window size.
        #[arg(long)]
        t: usize,
    },
    /// Compute canonical charge levels demodulating to a word, if any exist.
    Realize {
        /// t=2: a binary codeword such as 0110. t=3: a ternary codeword such
        /// as 0211, or a comma-separated base-word such as 1,2,3,4.
        #[arg(long)]
        word: String,
        /// Window step (only 1 is supported).
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Window size.
        #[arg(long)]
        t: usize,
    },
    /// Encode a comma-separated (1,3,n) base-word into a ternary codeword.
    Encode13 {
        #[arg(long)]
        word: String,
    },
    /// Decode a ternary codeword into its (1,3,n) base-word.
    Decode13 {
        #[arg(long)]
        word: String,
    },
    /// Constant-weight Gray-code tools for the (1,2,n) scheme.
    Gray {
        #[command(subcommand)]
        command: GrayCommand,
    },
    /// Count legal codewords of the (1,3,n) scheme and their rate out of 3^n.
    Count {
        /// Scheme selector; only "1,3" is supported.
        #[arg(long, default_value = "1,3")]
        scheme: String,
        /// Single word length; use --from/--to for a range.
        #[arg(long, conflicts_with_all = ["from", "to"])]
        n: Option<usize>,
        /// First word length of a range.
        #[arg(long, requires = "to")]
        from: Option<usize>,
        /// Last word length of a range (inclusive).
        #[arg(long, requires = "from")]
        to: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Node budget; enumerations that would exceed it are refused.
        #[arg(long, default_value_t = SearchBudget::DEFAULT_NODES,
              value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        /// Worker threads for the scan; never affects the output.
        #[arg(long, default_value_t = 1,
              value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
    },
}

#[derive(Subcommand)]
enum GrayCommand {
    /// Exhaustive longest-cycle search on the weight-w transition graph.
    Search {
        /// Word length.
        #[arg(long)]
        n: usize,
        /// Constant weight of the words.
        #[arg(long, default_value_t = 2)]
        w: usize,
        /// Node budget for the search.
        #[arg(long, default_value_t = SearchBudget::DEFAULT_NODES,
              value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
    /// Emit the cyclic weight-2 code of 2n words.
    Construct {
        /// Word length (at least 5).
        #[arg(long)]
        n: usize,
    },
    /// Validate a Gray code read from a JSON file.
    Verify {
        /// JSON file: {"words": ["110000", ...], "cyclic": bool, "weight": int};
        /// only "words" is required, and the output of `gray construct
        /// --format json` is accepted as-is.
        #[arg(long)]
        file: PathBuf,
        /// Require this constant weight (overrides the file's "weight").
        #[arg(long)]
        w: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if informational {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.message.is_empty() {
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Demod { levels, s, t } => cmd_demod(cli.format, &levels, s, t),
        Command::Realize { word, s, t } => cmd_realize(cli.format, &word, s, t),
        Command::Encode13 { word } => cmd_encode13(cli.format, &word),
        Command::Decode13 { word } => cmd_decode13(cli.format, &word),
        Command::Gray { command } => match command {
            GrayCommand::Search { n, w, budget } => cmd_gray_search(cli.format, n, w, budget),
            GrayCommand::Construct { n } => cmd_gray_construct(cli.format, n),
            GrayCommand::Verify { file, w } => cmd_gray_verify(cli.format, &file, w),
        },
        Command::Count {
            scheme,
            n,
            from,
            to,
            method,
            budget,
            workers,
        } => cmd_count(cli.format, &scheme, n, from, to, method, budget, workers),
    }
}

/// Rejects csv output for everything except `count`.
fn no_csv(format: Format) -> Result<(), CliError> {
    if format == Format::Csv {
        Err(CliError::parse("csv output is only available for count"))
    } else {
        Ok(())
    }
}

fn print_json(value: serde_json::Value) {
    println!("{value}");
}

fn parse_levels(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| CliError::parse(format!("invalid charge level {tok:?}")))
        })
        .collect()
}

fn symbol_values(word: &BaseWord13) -> Vec<u8> {
    word.symbols().iter().map(|s| s.value()).collect()
}

fn cmd_demod(format: Format, levels: &str, s: usize, t: usize) -> Result<(), CliError> {
    no_csv(format)?;
    let levels = parse_levels(levels)?;
    let n = levels.len();
    let params = LrmParams::new(s, t, n)?;
    let config = ChargeConfig::new(&params, levels)?;
    let base = demodulate(&params, &config)?;
    match (s, t) {
        (1, 2) => {
            let word = BinaryWord::from_base_word(&base)?;
            match format {
                Format::Plain => println!("{word}"),
                Format::Json => print_json(json!({
                    "scheme": "1,2",
                    "n": n,
                    "result": { "code": word.to_string() },
                })),
                Format::Csv => unreachable!(),
            }
        }
        (1, 3) => {
            let word = BaseWord13::from_base_word(&base)?;
            let code = scheme13::encode(&word);
            match format {
                Format::Plain => {
                    println!("{word}");
                    println!("{code}");
                }
                Format::Json => print_json(json!({
                    "scheme": "1,3",
                    "n": n,
                    "result": { "base": symbol_values(&word), "code": code.to_string() },
                })),
                Format::Csv => unreachable!(),
            }
        }
        _ => {
            let rendered: Vec<String> = base.symbols().iter().map(ToString::to_string).collect();
            match format {
                Format::Plain => println!("{}", rendered.join(",")),
                Format::Json => print_json(json!({
                    "scheme": format!("{s},{t}"),
                    "n": n,
                    "result": { "base": rendered },
                })),
                Format::Csv => unreachable!(),
            }
        }
    }
    Ok(())
}

fn cmd_realize(format: Format, word: &str, s: usize, t: usize) -> Result<(), CliError> {
    no_csv(format)?;
    if s != 1 {
        return Err(CliError::parse("realize supports s = 1 only"));
    }
    let scheme = format!("1,{t}");
    let base: BaseWord = match t {
        2 => {
            if word.contains(',') {
                return Err(CliError::parse(
                    "t=2 words are bare binary strings such as 0110",
                ));
            }
            word.parse::<BinaryWord>()?.to_base_word()
        }
        3 => {
            if word.contains(',') {
                word.parse::<BaseWord13>()?.to_base_word()
            } else {
                let code = word.parse::<TernaryWord>()?;
                match scheme13::decode(&code) {
                    Ok(decoded) => decoded.to_base_word(),
                    Err(e) => {
                        // No base-word exists for this codeword at all.
                        print_not_realizable(format, &scheme, code.len());
                        return Err(e.into());
                    }
                }
            }
        }
        _ => return Err(CliError::parse("realize supports t = 2 or t = 3")),
    };
    let n = base.symbols().len();
    let params = LrmParams::new(1, t, n)?;
    match realize(&params, &base) {
        Ok(config) => {
            let levels: Vec<i64> = config.levels().to_vec();
            match format {
                Format::Plain => {
                    let rendered: Vec<String> = levels.iter().map(ToString::to_string).collect();
                    println!("{}", rendered.join(","));
                }
                Format::Json => print_json(json!({
                    "scheme": scheme,
                    "n": n,
                    "result": { "levels": levels },
                })),
                Format::Csv => unreachable!(),
            }
            Ok(())
        }
        Err(e) => {
            print_not_realizable(format, &scheme, n);
            Err(e.into())
        }
    }
}

fn print_not_realizable(format: Format, scheme: &str, n: usize) {
    match format {
        Format::Plain => println!("NOT_REALIZABLE"),
        Format::Json => print_json(json!({
            "scheme": scheme,
            "n": n,
            "result": "NOT_REALIZABLE",
        })),
        Format::Csv => {}
    }
}

fn cmd_encode13(format: Format, word: &str) -> Result<(), CliError> {
    no_csv(format)?;
    let word = word.parse::<BaseWord13>()?;
    let code = scheme13::encode(&word);
    match format {
        Format::Plain => println!("{code}"),
        Format::Json => print_json(json!({
            "scheme": "1,3",
            "n": word.len(),
            "result": { "code": code.to_string() },
        })),
        Format::Csv => unreachable!(),
    }
    Ok(())
}

fn cmd_decode13(format: Format, word: &str) -> Result<(), CliError> {
    no_csv(format)?;
    let code = word.parse::<TernaryWord>()?;
    let base = scheme13::decode(&code)?;
    match format {
        Format::Plain => println!("{base}"),
        Format::Json => print_json(json!({
            "scheme": "1,3",
            "n": base.len(),
            "result": { "base": symbol_values(&base) },
        })),
        Format::Csv => unreachable!(),
    }
    Ok(())
}

fn cmd_gray_search(format: Format, n: usize, w: usize, budget: u64) -> Result<(), CliError> {
    no_csv(format)?;
    let graph = build_graph(n, w)?;
    let found = longest_cycle(&graph, SearchBudget::new(budget))?;
    let witness: Vec<String> = found.witness.iter().map(ToString::to_string).collect();
    match format {
        Format::Plain => {
            println!("length={}", found.length);
            for word in &witness {
                println!("{word}");
            }
        }
        Format::Json => print_json(json!({
            "scheme": "1,2",
            "n": n,
            "result": { "weight": w, "length": found.length, "nodes": found.nodes },
            "witness": witness,
        })),
        Format::Csv => unreachable!(),
    }
    Ok(())
}

fn cmd_gray_construct(format: Format, n: usize) -> Result<(), CliError> {
    no_csv(format)?;
    let code = construct_2n_code(n)?;
    let report = validate_gray(&code, Some(2));
    if !report.pass() {
        return Err(CliError::validation(
            "constructed code failed its own validation",
        ));
    }
    let words: Vec<String> = code.words().iter().map(ToString::to_string).collect();
    match format {
        Format::Plain => {
            for word in &words {
                println!("{word}");
            }
        }
        Format::Json => print_json(json!({
            "scheme": "1,2",
            "n": n,
            "result": { "cyclic": true, "weight": 2, "words": words },
        })),
        Format::Csv => unreachable!(),
    }
    Ok(())
}

fn cmd_gray_verify(format: Format, file: &Path, w: Option<usize>) -> Result<(), CliError> {
    no_csv(format)?;
    let input = verify::read_file(file)?;
    let weight = w.or(input.weight);
    let code = GrayCode::new(input.words, input.cyclic);
    let n = code.words().first().map_or(0, BinaryWord::len);
    let report = validate_gray(&code, weight);
    match format {
        Format::Plain => {
            if report.pass() {
                println!("PASS words={}", report.word_count());
            } else {
                println!("FAIL words={}", report.word_count());
                for failure in report.failures() {
                    println!("{failure}");
                }
            }
        }
        Format::Json => {
            let failures: Vec<String> = report.failures().iter().map(ToString::to_string).collect();
            print_json(json!({
                "scheme": "1,2",
                "n": n,
                "result": {
                    "pass": report.pass(),
                    "word_count": report.word_count(),
                    "failures": failures,
                },
            }));
        }
        Format::Csv => unreachable!(),
    }
    if report.pass() {
        Ok(())
    } else {
        Err(CliError::validation("gray code validation failed"))
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_count(
    format: Format,
    scheme: &str,
    n: Option<usize>,
    from: Option<usize>,
    to: Option<usize>,
    method: MethodArg,
    budget: u64,
    workers: u64,
) -> Result<(), CliError> {
    if scheme.trim() != "1,3" {
        return Err(CliError::parse("counting supports only --scheme 1,3"));
    }
    let (from, to) = match (n, from, to) {
        (Some(n), None, None) => (n, n),
        (None, Some(from), Some(to)) => (from, to),
        _ => return Err(CliError::parse("pass --n, or both --from and --to")),
    };
    let reports = scheme13::rate_table(
        from,
        to,
        method.into(),
        SearchBudget::new(budget),
        workers as usize,
    )?;
    match format {
        Format::Plain => {
            for report in &reports {
                println!("{}", count_row(report));
            }
        }
        Format::Csv => {
            println!("n,legal,rate,decimal");
            for report in &reports {
                println!("{}", count_row(report));
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = reports
                .iter()
                .map(|report| {
                    let (num, den) = report.rate();
                    json!({
                        "n": report.n,
                        "method": report.method.to_string(),
                        "legal": report.legal,
                        "total": report.total,
                        "rate": format!("{num}/{den}"),
                        "decimal": report.rate_decimal(),
                    })
                })
                .collect();
            print_json(json!({ "scheme": "1,3", "result": rows }));
        }
    }
    Ok(())
}

/// One rate-table row: `n,M,p/q,decimal` — e.g. `3,6,2/9,0.222222`.
fn count_row(report: &CountReport) -> String {
    let (num, den) = report.rate();
    format!(
        "{},{},{}/{},{}",
        report.n,
        report.legal,
        num,
        den,
        report.rate_decimal()
    )
}
