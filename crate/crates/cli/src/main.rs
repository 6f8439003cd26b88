use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kbgb_cli::{cmd_complete, cmd_equal, cmd_iso_check, cmd_lockstep, cmd_nf, parse_presentation, Options, Status};
use kbgb_core::{CompletionLimits, Field};

/// Knuth-Bendix completion, noncommutative Buchberger completion, and a
/// pass-by-pass check that the two agree on binomial inputs.
#[derive(Parser)]
#[command(name = "kbgb", version)]
struct Cli {
    #[command(flatten)]
    flags: Flags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Flags {
    /// Passes before completion gives up.
    #[arg(long, global = true, default_value_t = CompletionLimits::default().max_passes)]
    max_passes: usize,
    /// Largest rule or basis size.
    #[arg(long, global = true, default_value_t = CompletionLimits::default().max_rules)]
    max_rules: usize,
    /// Longest word allowed in a rule or basis element.
    #[arg(long, global = true, default_value_t = CompletionLimits::default().max_word_length)]
    max_word_len: usize,
    /// Coefficient field, `Q` or `F<p>` for a prime p.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    /// Write the trace to this file instead of standard output.
    #[arg(long, global = true)]
    trace: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Complete the presentation and print the final system.
    Complete { file: PathBuf },
    /// Run both completions side by side and check they correspond.
    Lockstep { file: PathBuf },
    /// Normal form of a word, or of a polynomial in alg mode.
    Nf { file: PathBuf, word: String },
    /// Decide whether two words (polynomials) are equal in the presented structure.
    Equal { file: PathBuf, first: String, second: String },
    /// Check the algebra isomorphism on words up to a length bound.
    IsoCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
}

fn parse_field(text: &str) -> Result<Field, String> {
    Field::parse(text).map_err(|e| e.to_string())
}

impl Command {
    fn file(&self) -> &PathBuf {
        match self {
            Command::Complete { file }
            | Command::Lockstep { file }
            | Command::Nf { file, .. }
            | Command::Equal { file, .. }
            | Command::IsoCheck { file, .. } => file,
        }
    }
}

fn run(cli: Cli) -> Result<Status, String> {
    let path = cli.command.file();
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let presentation = parse_presentation(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let options = Options {
        limits: CompletionLimits::new(cli.flags.max_passes, cli.flags.max_rules, cli.flags.max_word_len),
        field: cli.flags.field,
        separate_trace: cli.flags.trace.is_some(),
    };
    let outcome = match &cli.command {
        Command::Complete { .. } => cmd_complete(&presentation, &options),
        Command::Lockstep { .. } => cmd_lockstep(&presentation, &options),
        Command::Nf { word, .. } => cmd_nf(&presentation, &options, word),
        Command::Equal { first, second, .. } => cmd_equal(&presentation, &options, first, second),
        Command::IsoCheck { bound, .. } => cmd_iso_check(&presentation, &options, *bound),
    }
    .map_err(|e| format!("{}: {e}", path.display()))?;

    if let Some(trace_path) = &cli.flags.trace {
        let trace = outcome.trace.as_deref().unwrap_or("");
        std::fs::write(trace_path, trace).map_err(|e| format!("{}: {e}", trace_path.display()))?;
    }
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    Ok(outcome.status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(Status::InputError.code() as u8) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status.code() as u8),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(Status::InputError.code() as u8)
        }
    }
}
