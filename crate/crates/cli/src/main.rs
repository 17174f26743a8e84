use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use gajwb::commands::{run_command, run_examples, Command, Options, Report, EXIT_ERROR};
use gajwb::corpus::corpus_entry;
use gajwb::document::{emit_document, parse_document};

/// Exact-arithmetic workbench for generalized almost-Jordan algebras.
///
/// INPUT is a JSON document path, `-` for stdin, or the name of a built-in
/// example (see `gajwb examples`). Exit codes: 0 holds/irreducible,
/// 1 fails/reducible, 2 input or precondition error, 3 inconclusive.
#[derive(Parser, Debug)]
#[command(name = "gajwb", version)]
struct Cli {
    /// check-identity, params, peirce, check-rep, extend, module-peirce,
    /// actions, irreducible, classify, verify-theorems or examples
    command: Command,
    /// Document path, `-`, or built-in example name. For `examples`, an
    /// optional example to emit.
    input: Option<String>,
    /// Override the parameters, as `B,G`.
    #[arg(long, value_name = "B,G", allow_hyphen_values = true)]
    params: Option<String>,
    /// Override the idempotent: a basis name or a coordinate vector.
    #[arg(long, value_name = "NAME|VECTOR", allow_hyphen_values = true)]
    idempotent: Option<String>,
    /// Override the field: `rational` or `fp:P`.
    #[arg(long, value_name = "FIELD")]
    field: Option<String>,
    /// Print the report as compact JSON.
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    /// Print the report as indented JSON.
    #[arg(long)]
    pretty: bool,
}

/// What one invocation prints and the status it exits with.
#[derive(Debug, PartialEq, Eq)]
struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Outcome {
    fn error(msg: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: format!("gajwb: {msg}\n") }
    }
}

fn load(input: &str, stdin: &mut dyn Read) -> Result<String, String> {
    if input == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
        return Ok(s);
    }
    if Path::new(input).exists() {
        return std::fs::read_to_string(input).map_err(|e| format!("reading {input}: {e}"));
    }
    match corpus_entry(input) {
        Some(d) => Ok(emit_document(&d).expect("corpus documents are valid")),
        None => Err(format!("{input}: no such file or built-in example")),
    }
}

fn report(cli: &Cli, stdin: &mut dyn Read) -> Result<Report, String> {
    if cli.command == Command::Examples {
        return Ok(run_examples(cli.input.as_deref()));
    }
    let input = cli.input.as_deref().ok_or("missing input document")?;
    let doc = parse_document(&load(input, stdin)?).map_err(|e| format!("error ({}): {e}", e.name()))?;
    let opts = Options { params: cli.params.clone(), idempotent: cli.idempotent.clone(), field: cli.field.clone() };
    Ok(run_command(cli.command, &doc, &opts))
}

fn execute<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match report(&cli, stdin) {
        Ok(r) => {
            let stdout = if cli.json || cli.pretty { r.to_json(cli.pretty) } else { r.text };
            Outcome { code: r.exit_code, stdout, stderr: String::new() }
        }
        Err(msg) => Outcome::error(msg),
    }
}

fn configure_threads() {
    let Ok(v) = std::env::var("GAJWB_THREADS") else { return };
    match v.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        _ => eprintln!("gajwb: ignoring GAJWB_THREADS={v:?}"),
    }
}

fn main() -> ExitCode {
    configure_threads();
    let out = execute(std::env::args_os(), &mut std::io::stdin().lock());
    let _ = std::io::stdout().lock().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
