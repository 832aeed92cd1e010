//! The `fibgray` command line tool.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 generation budget exceeded, 4 output truncated by `--limit`.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::budget::Budget;
use crate::construction::{
    naive_alternating_within, qary_gray_within, ConstructionParams, QaryGrayStream,
};
use crate::counting::{count_binary, count_qary};
use crate::error::Error;
use crate::expansion::expand;
use crate::fibonacci::{fib_list, fib_list_within};
use crate::string::{CodeList, QaryString, Symbol};
use crate::verify::{
    check_collapse, check_complete_within, check_gray, check_trace_partition_about,
    VerificationReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_TRUNCATED: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "fibgray",
    version,
    about = "Gray codes for q-ary strings avoiding a run of k equal symbols"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct CodeArgs {
    /// String length
    #[arg(short = 'n')]
    n: usize,
    /// Alphabet size
    #[arg(short = 'q')]
    q: u32,
    /// Length of the forbidden run
    #[arg(short = 'k')]
    k: usize,
    /// Symbol whose k-run is avoided
    #[arg(long = "forbidden", default_value_t = 0)]
    forbidden: Symbol,
    /// Maximum number of strings any list may hold
    #[arg(long, env = "FIBGRAY_BUDGET", default_value_t = Budget::DEFAULT.0)]
    budget: u64,
}

impl CodeArgs {
    fn params(&self) -> ConstructionParams {
        ConstructionParams::new(self.n, self.q, self.k).with_forbidden(self.forbidden)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Gray code, one string per line
    Generate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = Order::Forward)]
        order: Order,
        #[arg(long, value_enum, default_value_t = Format::Digits)]
        format: Format,
        /// Stop after this many strings (exit status 4 if the code is longer)
        #[arg(long)]
        limit: Option<u64>,
        /// Emit the plain alternating list instead (not a Gray code for odd q)
        #[arg(long)]
        naive: bool,
    },
    /// Print the number of strings in the code
    Count {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'q', required_unless_present = "binary")]
        q: Option<u32>,
        #[arg(short = 'k')]
        k: usize,
        /// Print f_{n+k}^(k), the size of the binary code
        #[arg(long)]
        binary: bool,
    },
    /// Check a list read from a file or stdin
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        /// Comma separated subset of gray,complete,trace,collapse
        #[arg(long, value_delimiter = ',', default_values_t = [Check::Gray, Check::Complete, Check::Trace, Check::Collapse])]
        checks: Vec<Check>,
        /// Input file; stdin when absent or "-"
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Show why plain alternation fails for n=4, q=3, k=3
    Counterexample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    Forward,
    Reverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Digits,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Gray,
    Complete,
    Trace,
    Collapse,
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Check::Gray => "gray",
            Check::Complete => "complete",
            Check::Trace => "trace",
            Check::Collapse => "collapse",
        };
        f.write_str(name)
    }
}

/// Runs the tool and returns its exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Generate {
            code,
            order,
            format,
            limit,
            naive,
        } => generate(&code, order, format, limit, naive, stdout),
        Command::Count { n, q, k, binary } => count(n, q, k, binary, stdout),
        Command::Verify {
            code,
            checks,
            input,
        } => verify(&code, &checks, input, stdin, stdout),
        Command::Counterexample => counterexample(stdout),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "fibgray: {}", failure.message);
            failure.code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("i/o error: {e}"),
        }
    }
}

type CliResult = Result<i32, Failure>;

fn write_symbols(out: &mut dyn Write, symbols: &[Symbol], format: Format) -> io::Result<()> {
    match format {
        Format::Digits => {
            let line: String = symbols
                .iter()
                .map(|&s| char::from_digit(s, 10).expect("q <= 10"))
                .collect();
            writeln!(out, "{line}")
        }
        Format::Csv => {
            let line: Vec<String> = symbols.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", line.join(","))
        }
    }
}

fn generate(
    code: &CodeArgs,
    order: Order,
    format: Format,
    limit: Option<u64>,
    naive: bool,
    stdout: &mut dyn Write,
) -> CliResult {
    let params = code.params();
    params.validate()?;
    if naive && params.forbidden_symbol != 0 {
        return Err(Failure::usage("--naive only supports --forbidden 0"));
    }
    if format == Format::Digits && params.q > 10 {
        return Err(Failure::usage(
            "digits format needs q <= 10; use --format csv",
        ));
    }
    let budget = Budget(code.budget);
    let limit = limit.unwrap_or(u64::MAX);
    let mut out = BufWriter::new(stdout);

    let written = match order {
        Order::Forward => {
            // a limit caps the output, so only unlimited runs need the budget
            if limit == u64::MAX {
                budget.check(&count_qary(params.n, params.q, params.k)?)?;
            }
            let mut stream = if naive {
                QaryGrayStream::naive(params.n, params.q, params.k)?
            } else {
                QaryGrayStream::new(&params)?
            };
            emit_stream(&mut stream, limit, format, &mut out)
        }
        Order::Reverse => {
            let list = if naive {
                naive_alternating_within(params.n, params.q, params.k, budget)?
            } else {
                qary_gray_within(&params, budget)?
            };
            emit_reversed(&list, limit, format, &mut out)
        }
    }
    .and_then(|truncated| out.flush().map(|_| truncated));

    match written {
        Ok(true) => Ok(EXIT_TRUNCATED),
        Ok(false) => Ok(EXIT_OK),
        // the reader went away, e.g. `| head`
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(EXIT_OK),
        Err(e) => Err(e.into()),
    }
}

/// Returns whether the stream still had entries after `limit`.
fn emit_stream(
    stream: &mut QaryGrayStream,
    limit: u64,
    format: Format,
    out: &mut dyn Write,
) -> io::Result<bool> {
    let mut emitted = 0u64;
    while stream.advance() {
        if emitted == limit {
            return Ok(true);
        }
        write_symbols(out, stream.current(), format)?;
        emitted += 1;
    }
    Ok(false)
}

fn emit_reversed(
    list: &CodeList,
    limit: u64,
    format: Format,
    out: &mut dyn Write,
) -> io::Result<bool> {
    for (emitted, s) in list.iter().rev().enumerate() {
        if emitted as u64 == limit {
            return Ok(true);
        }
        write_symbols(out, s.symbols(), format)?;
    }
    Ok(false)
}

fn count(n: usize, q: Option<u32>, k: usize, binary: bool, stdout: &mut dyn Write) -> CliResult {
    let value = if binary {
        count_binary(n + k, k)?
    } else {
        count_qary(n, q.expect("clap requires -q"), k)?
    };
    writeln!(stdout, "{value}")?;
    Ok(EXIT_OK)
}

fn read_list(reader: &mut dyn BufRead, n: usize, q: u32) -> Result<CodeList, Failure> {
    let mut lines = Vec::new();
    for line in reader.lines() {
        lines.push(line?);
    }
    // A trailing empty line is only meaningful for n = 0.
    if n > 0 {
        while lines.last().is_some_and(|l| l.trim().is_empty()) {
            lines.pop();
        }
    }
    let csv = q > 10 || lines.iter().any(|l| l.contains(','));
    let mut entries = Vec::with_capacity(lines.len());
    for (i, raw) in lines.iter().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        let symbols: Vec<Symbol> = if line.is_empty() {
            Vec::new()
        } else if csv {
            line.split(',')
                .map(|t| t.trim().parse::<Symbol>())
                .collect::<Result<_, _>>()
                .map_err(|_| Failure::usage(format!("line {lineno}: cannot parse {line:?}")))?
        } else {
            line.chars()
                .map(|c| c.to_digit(10))
                .collect::<Option<_>>()
                .ok_or_else(|| Failure::usage(format!("line {lineno}: cannot parse {line:?}")))?
        };
        if symbols.len() != n {
            return Err(Failure::usage(format!(
                "line {lineno}: expected {n} symbols, found {}",
                symbols.len()
            )));
        }
        let s = QaryString::new(symbols, q)
            .map_err(|e| Failure::usage(format!("line {lineno}: {e}")))?;
        entries.push(s);
    }
    Ok(CodeList::new(entries, q, n)?)
}

fn verify(
    code: &CodeArgs,
    checks: &[Check],
    input: Option<PathBuf>,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
) -> CliResult {
    let params = code.params();
    params.validate()?;
    let budget = Budget(code.budget);
    let list = match input {
        Some(path) if path.as_os_str() != "-" => {
            let file = File::open(&path)
                .map_err(|e| Failure::usage(format!("cannot open {}: {e}", path.display())))?;
            read_list(&mut BufReader::new(file), params.n, params.q)?
        }
        _ => read_list(stdin, params.n, params.q)?,
    };

    let mut report = VerificationReport::default();
    for check in checks {
        match check {
            Check::Gray => report.merge(check_gray(&list)),
            Check::Complete => report.merge(check_complete_within(
                &list,
                params.n,
                params.q,
                params.k,
                params.forbidden_symbol,
                budget,
            )?),
            Check::Trace => {
                report.merge(check_trace_partition_about(&list, params.forbidden_symbol))
            }
            Check::Collapse => {
                let expected = fib_list_within(params.n, params.k, budget)?;
                report.merge(check_collapse(&list, &expected, params.forbidden_symbol));
            }
        }
    }

    let mut out = BufWriter::new(stdout);
    for finding in &report.violations {
        writeln!(out, "{finding}")?;
    }
    let names: Vec<String> = checks.iter().map(ToString::to_string).collect();
    writeln!(
        out,
        "summary\t{}\t{} findings\tentries={} checks={}",
        if report.passed() { "pass" } else { "fail" },
        report.violations.len(),
        list.len(),
        names.join(",")
    )?;
    out.flush()?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn joined(list: &CodeList) -> String {
    list.to_strings().join(" ")
}

fn counterexample(stdout: &mut dyn Write) -> CliResult {
    let (n, q, k) = (4, 3, 3);
    let fib = fib_list(n, k)?;
    let alpha7 = &fib.entries()[6];
    let alpha8 = &fib.entries()[7];
    let naive = naive_alternating_within(n, q, k, Budget::DEFAULT)?;
    let bad = check_gray(&naive);
    writeln!(stdout, "F_{n}^({k}) = {}", joined(&fib))?;
    writeln!(stdout, "alpha_7 = {alpha7}, alpha_8 = {alpha8}")?;
    writeln!(stdout, "eps({alpha7}) = {}", joined(&expand(alpha7, q)?))?;
    writeln!(stdout, "eps({alpha8}) = {}", joined(&expand(alpha8, q)?))?;
    // the junction between ε(α_7) and the reversed ε(α_8)
    let tail = expand(alpha7, q)?
        .last()
        .cloned()
        .expect("nonempty expansion");
    let junction = bad
        .violations
        .iter()
        .find(|f| f.strings[0] == tail)
        .expect("plain alternation breaks after alpha_7");
    writeln!(
        stdout,
        "plain alternation for n={n}, q={q}, k={k} has {} broken junction(s), first at positions {} and {}",
        bad.violations.len(),
        junction.indices[0],
        junction.indices[1]
    )?;
    let (a, b) = (&junction.strings[0], &junction.strings[1]);
    writeln!(
        stdout,
        "d_H({a}, {b}) = {}",
        crate::string::hamming_distance(a, b)?
    )?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = io::Cursor::new(input.as_bytes().to_vec());
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("fibgray").chain(args.iter().copied());
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn generate_small() {
        let (code, out, _) = call(&["generate", "-n", "3", "-q", "3", "-k", "3"], "");
        assert_eq!(code, EXIT_OK);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines.len(), 26);
        assert_eq!(lines[0], "100");
        assert_eq!(lines[25], "002");

        let (_, out, _) = call(
            &[
                "generate", "-n", "4", "-q", "3", "-k", "3", "--format", "csv",
            ],
            "",
        );
        assert_eq!(out.lines().next(), Some("1,0,0,1"));

        let (code, out, _) = call(&["generate", "-n", "0", "-q", "5", "-k", "2"], "");
        assert_eq!((code, out.as_str()), (EXIT_OK, "\n"));
    }

    #[test]
    fn generate_reverse_and_limit() {
        let (_, fwd, _) = call(&["generate", "-n", "3", "-q", "4", "-k", "2"], "");
        let (code, rev, _) = call(
            &[
                "generate", "-n", "3", "-q", "4", "-k", "2", "--order", "reverse",
            ],
            "",
        );
        assert_eq!(code, EXIT_OK);
        let mut back: Vec<_> = rev.lines().collect();
        back.reverse();
        assert_eq!(back, fwd.lines().collect::<Vec<_>>());

        let (code, out, _) = call(
            &["generate", "-n", "3", "-q", "3", "-k", "3", "--limit", "5"],
            "",
        );
        assert_eq!((code, out.lines().count()), (EXIT_TRUNCATED, 5));
        let (code, out, _) = call(
            &["generate", "-n", "3", "-q", "3", "-k", "3", "--limit", "26"],
            "",
        );
        assert_eq!((code, out.lines().count()), (EXIT_OK, 26));
        let (code, _, _) = call(
            &[
                "generate", "-n", "3", "-q", "3", "-k", "3", "--limit", "2", "--order", "reverse",
            ],
            "",
        );
        assert_eq!(code, EXIT_TRUNCATED);
    }

    #[test]
    fn generate_errors() {
        let (code, _, err) = call(&["generate", "-n", "3", "-q", "12", "-k", "3"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("digits"));
        let (code, _, _) = call(&["generate", "-n", "3", "-q", "3", "-k", "1"], "");
        assert_eq!(code, EXIT_USAGE);
        let (code, _, _) = call(
            &[
                "generate",
                "-n",
                "3",
                "-q",
                "3",
                "-k",
                "2",
                "--forbidden",
                "3",
            ],
            "",
        );
        assert_eq!(code, EXIT_USAGE);
        let (code, _, _) = call(
            &[
                "generate", "-n", "30", "-q", "3", "-k", "3", "--budget", "1000",
            ],
            "",
        );
        assert_eq!(code, EXIT_BUDGET);
        let (code, _, _) = call(&["generate", "-q", "3"], "");
        assert_eq!(code, EXIT_USAGE);
        let (code, out, _) = call(
            &[
                "generate", "-n", "3", "-q", "12", "-k", "2", "--format", "csv",
            ],
            "",
        );
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().next(), Some("1,0,1"));
    }

    #[test]
    fn count_command() {
        assert_eq!(
            call(&["count", "-n", "3", "-q", "3", "-k", "3"], "").1,
            "26\n"
        );
        assert_eq!(
            call(&["count", "-n", "2", "-q", "7", "-k", "3"], "").1,
            "49\n"
        );
        assert_eq!(
            call(&["count", "-n", "4", "-k", "3", "--binary"], "").1,
            "13\n"
        );
        assert_eq!(
            call(&["count", "-n", "4", "-q", "1", "-k", "3"], "").0,
            EXIT_USAGE
        );
    }

    #[test]
    fn verify_command() {
        let (_, list, _) = call(&["generate", "-n", "3", "-q", "3", "-k", "3"], "");
        let (code, out, _) = call(&["verify", "-n", "3", "-q", "3", "-k", "3"], &list);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.starts_with("summary\tpass"));

        let (_, naive, _) = call(
            &["generate", "-n", "4", "-q", "3", "-k", "3", "--naive"],
            "",
        );
        let (code, out, _) = call(
            &[
                "verify", "-n", "4", "-q", "3", "-k", "3", "--checks", "gray",
            ],
            &naive,
        );
        assert_eq!(code, EXIT_VIOLATION);
        assert!(
            out.contains("adjacency\t") && out.contains("2100 -> 0200 d_H=2"),
            "{out}"
        );

        let (code, _, err) = call(&["verify", "-n", "3", "-q", "3", "-k", "3"], "100\n2x0\n");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("line 2"));
        let (code, _, _) = call(&["verify", "-n", "3", "-q", "3", "-k", "3"], "100\n10\n");
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn counterexample_command() {
        let (code, out, _) = call(&["counterexample"], "");
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("eps(1100) = 1100 1200 2200 2100"));
        assert!(out.contains("eps(0100) = 0100 0200"));
        assert!(out.trim_end().ends_with("d_H(2100, 0200) = 2"));
    }
}
