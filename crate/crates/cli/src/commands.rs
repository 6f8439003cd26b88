//! Subcommand implementations. Each returns the text destined for standard
//! output, standard error and the trace file, plus an exit status, so that
//! they can be exercised without spawning a process.

use std::fmt::Write as _;

use kbgb_core::{
    basis_to_rules, lockstep_complete, verify_algebra_iso, Basis, BuchbergerOutcome, CompletionLimits,
    CorrespondenceError, Field, IsoVerdict, KbOutcome, PolyError, RewriteError, RewriteSystem, Verdict,
};
use thiserror::Error;

use crate::presentation::{parse_polynomial, BuildError, ParseError, PolyErrorAt, Presentation, PresentationMode};

/// Process exit statuses; every outcome falls in exactly one class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    InputError = 1,
    LimitExceeded = 2,
    Divergence = 3,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Correspondence(#[from] CorrespondenceError),
    #[error("argument `{arg}`: {message}")]
    Argument { arg: String, message: String },
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub limits: CompletionLimits,
    /// Overrides the field of the presentation (Q unless an alg file says
    /// otherwise).
    pub field: Option<Field>,
    /// Send traces to a separate sink instead of standard output.
    pub separate_trace: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    /// Trace text when `separate_trace` is set.
    pub trace: Option<String>,
    pub status: Status,
}

impl Outcome {
    fn new(status: Status) -> Self {
        Outcome { stdout: String::new(), stderr: String::new(), trace: None, status }
    }

    /// Routes `trace` to stdout, or to the trace sink when one is requested.
    fn emit_trace(&mut self, options: &Options, trace: String) {
        if options.separate_trace {
            self.trace = Some(trace);
        } else {
            self.stdout.push_str(&trace);
        }
    }

    /// Keeps `trace` only when a trace sink was requested.
    fn keep_trace(&mut self, options: &Options, trace: String) {
        if options.separate_trace {
            self.trace = Some(trace);
        }
    }
}

/// The field to compute over. Polynomials in an alg file are read in the
/// file's field, so an override must agree with it.
fn field_for(p: &Presentation, options: &Options) -> Result<Field, CliError> {
    match options.field {
        Some(f) if p.mode == PresentationMode::Alg && f != p.field => Err(CliError::Argument {
            arg: format!("--field {f}"),
            message: format!("presentation declares field {}", p.field),
        }),
        Some(f) => Ok(f),
        None => Ok(p.field),
    }
}

/// The rewrite system of a word presentation, or of a binomial algebra
/// presentation.
fn binomial_system(p: &Presentation, field: Field) -> Result<RewriteSystem, CliError> {
    match p.mode {
        PresentationMode::Alg => Ok(basis_to_rules(&p.basis(field)?)?),
        _ => Ok(p.rewrite_system()?),
    }
}

pub fn cmd_complete(p: &Presentation, options: &Options) -> Result<Outcome, CliError> {
    let limits = &options.limits;
    if p.mode == PresentationMode::Alg {
        let basis = p.basis(field_for(p, options)?)?;
        let result = basis.buchberger(limits)?;
        let final_basis = result.basis();
        let (status, line) = match &result {
            BuchbergerOutcome::GroebnerBasis { trace, .. } => {
                (Status::Success, format!("# GroebnerBasis passes={}", trace.pass_count()))
            }
            BuchbergerOutcome::LimitExceeded { trace, limit, .. } => {
                (Status::LimitExceeded, format!("# LimitExceeded limit={} passes={}", limit, trace.pass_count()))
            }
        };
        let mut out = Outcome::new(status);
        out.emit_trace(options, result.trace().render(final_basis));
        let _ = writeln!(out.stdout, "{line}");
        out.stdout.push_str(&p.with_basis(final_basis).render());
        return Ok(out);
    }

    let system = p.rewrite_system()?;
    let result = system.knuth_bendix(limits)?;
    let (status, line) = match &result {
        KbOutcome::Complete { trace, .. } => (Status::Success, format!("# Complete passes={}", trace.pass_count())),
        KbOutcome::LimitExceeded { trace, limit, .. } => {
            (Status::LimitExceeded, format!("# LimitExceeded limit={} passes={}", limit, trace.pass_count()))
        }
    };
    let mut out = Outcome::new(status);
    out.emit_trace(options, result.trace().render(system.alphabet()));
    let _ = writeln!(out.stdout, "{line}");
    out.stdout.push_str(&p.with_system(result.system()).render());
    Ok(out)
}

pub fn cmd_lockstep(p: &Presentation, options: &Options) -> Result<Outcome, CliError> {
    let field = field_for(p, options)?;
    let system = binomial_system(p, field)?;
    let report = lockstep_complete(&system, field, &options.limits)?;
    let status = match report.verdict {
        Verdict::Corresponds => Status::Success,
        Verdict::LimitExceeded { .. } => Status::LimitExceeded,
        Verdict::Divergence { .. } => Status::Divergence,
    };
    let mut out = Outcome::new(status);
    if options.separate_trace {
        out.trace = Some(report.render());
        let _ = writeln!(out.stdout, "{}", report.verdict_line());
    } else {
        out.stdout = report.render();
    }
    Ok(out)
}

const NOT_UNIQUE: &str = "warning: completion stopped early; normal forms are not guaranteed unique";

/// Completion of a word presentation: the final system, whether it is
/// complete, and the trace.
fn complete_words(p: &Presentation, options: &Options) -> Result<(RewriteSystem, bool, String), CliError> {
    let system = p.rewrite_system()?;
    let result = system.knuth_bendix(&options.limits)?;
    let trace = result.trace().render(system.alphabet());
    Ok((result.system().clone(), result.is_complete(), trace))
}

fn complete_algebra(p: &Presentation, options: &Options) -> Result<(Basis, bool, String), CliError> {
    let basis = p.basis(field_for(p, options)?)?;
    let result = basis.buchberger(&options.limits)?;
    let trace = result.trace().render(result.basis());
    Ok((result.basis().clone(), result.is_groebner(), trace))
}

fn argument_error(arg: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Argument { arg: arg.to_string(), message: e.to_string() }
}

fn parse_poly_arg(basis: &Basis, arg: &str) -> Result<kbgb_core::NcPolynomial, CliError> {
    parse_polynomial(basis.alphabet(), basis.field(), arg).map_err(|e: PolyErrorAt| argument_error(arg, e))
}

pub fn cmd_nf(p: &Presentation, options: &Options, arg: &str) -> Result<Outcome, CliError> {
    let mut out = Outcome::new(Status::Success);
    if p.mode == PresentationMode::Alg {
        let (basis, complete, trace) = complete_algebra(p, options)?;
        let poly = parse_poly_arg(&basis, arg)?;
        let nf = basis.poly_normal_form(&poly)?;
        out.keep_trace(options, trace);
        if !complete {
            let _ = writeln!(out.stderr, "{NOT_UNIQUE}");
        }
        let _ = writeln!(out.stdout, "{}", basis.render_poly(&nf));
        return Ok(out);
    }
    let (system, complete, trace) = complete_words(p, options)?;
    let word = system.alphabet().parse_word(arg).map_err(|e| argument_error(arg, e))?;
    if word.is_empty() && !system.mode().allows_empty() {
        return Err(argument_error(arg, "empty word outside monoid mode"));
    }
    let nf = system.normal_form(&word)?;
    out.keep_trace(options, trace);
    if !complete {
        let _ = writeln!(out.stderr, "{NOT_UNIQUE}");
    }
    let _ = writeln!(out.stdout, "{}", system.alphabet().render(&nf));
    Ok(out)
}

/// Prints `EQUAL` or `DISTINCT`; `UNKNOWN` (status 2) when completion
/// stopped early and the normal forms differ.
pub fn cmd_equal(p: &Presentation, options: &Options, a: &str, b: &str) -> Result<Outcome, CliError> {
    let (same, complete, trace) = if p.mode == PresentationMode::Alg {
        let (basis, complete, trace) = complete_algebra(p, options)?;
        let difference = parse_poly_arg(&basis, a)?.sub(&parse_poly_arg(&basis, b)?);
        (basis.poly_normal_form(&difference)?.is_zero(), complete, trace)
    } else {
        let (system, complete, trace) = complete_words(p, options)?;
        let parse = |arg: &str| {
            let w = system.alphabet().parse_word(arg).map_err(|e| argument_error(arg, e))?;
            if w.is_empty() && !system.mode().allows_empty() {
                return Err(argument_error(arg, "empty word outside monoid mode"));
            }
            Ok::<_, CliError>(w)
        };
        (system.words_equal(&parse(a)?, &parse(b)?)?, complete, trace)
    };
    let mut out = Outcome::new(Status::Success);
    out.keep_trace(options, trace);
    let answer = match (same, complete) {
        (true, _) => "EQUAL",
        (false, true) => "DISTINCT",
        (false, false) => {
            out.status = Status::LimitExceeded;
            let _ = writeln!(out.stderr, "{NOT_UNIQUE}");
            "UNKNOWN"
        }
    };
    let _ = writeln!(out.stdout, "{answer}");
    Ok(out)
}

pub fn cmd_iso_check(p: &Presentation, options: &Options, bound: usize) -> Result<Outcome, CliError> {
    let field = field_for(p, options)?;
    let system = binomial_system(p, field)?;
    let report = verify_algebra_iso(&system, field, bound, &options.limits)?;
    let status = match report.verdict {
        IsoVerdict::Pass => Status::Success,
        IsoVerdict::Inconclusive(_) => Status::LimitExceeded,
        IsoVerdict::Fail { .. } => Status::Divergence,
    };
    let mut out = Outcome::new(status);
    out.stdout = report.render();
    Ok(out)
}
