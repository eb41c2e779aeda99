//! Expression calculator, table emitter and self-check used by the
//! `degen-pga` binary.
//!
//! Expression grammar, loosest binding first:
//!
//! ```text
//! sum     := vee (('+' | '-') vee)*
//! vee     := wedge ('&' wedge)*
//! wedge   := product ('^' product)*
//! product := unary ('*' unary)*
//! unary   := ('-' | '!' | 'J' | 'Jinv' | 'H' | 'Hinv' | 'P') unary | primary
//! primary := number | 'e' digits | 'e^' digits | 'I' | '(' sum ')'
//! ```
//!
//! `!` is the unified dual, `e^03` is a blade of the dual algebra and the
//! bare `e^` is its scalar unit.

mod check;
mod eval;
mod parse;
mod table;

use std::fmt;

pub use check::{
    run_check, CheckLine, CheckOptions, CheckReport, POLARITY_SIGNS_400, TABLE_H, TABLE_J,
};
pub use eval::{eval, EvalOptions};
pub use parse::{parse, BinaryOp, Expr, ParseError, UnaryOp};
pub use table::{cmd_table, parse_tsv, TableKind};

use crate::error::Error;
use crate::signature::Signature;

/// Failures surfaced by the binary, each with its process exit code.
#[derive(Debug)]
pub enum CliError {
    Check(CheckReport),
    Eval(Error),
    Parse(ParseError),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Check(_) => 1,
            CliError::Eval(_) | CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Check(report) => write!(f, "{report}"),
            CliError::Eval(e) => write!(f, "evaluation error: {e}"),
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Eval(e)
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

/// Parses `p,q,r` into a signature with the null generators first.
pub fn parse_signature(text: &str) -> Result<Signature, Error> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || Error::InvalidSignature(format!("expected p,q,r, got `{text}`"));
    let [p, q, r] = parts.as_slice() else {
        return Err(bad());
    };
    let n = |s: &str| s.parse::<usize>().map_err(|_| bad());
    Signature::from_pqr(n(p)?, n(q)?, n(r)?)
}

/// Parses and evaluates one expression.
pub fn evaluate(src: &str, opts: &EvalOptions) -> Result<crate::TaggedMultivector, CliError> {
    let expr = parse(src, opts.sig.dim())?;
    Ok(eval(&expr, opts)?)
}

/// Reads a golden TSV fixture.
pub fn load_golden(path: &std::path::Path) -> Result<Vec<(String, String)>, CliError> {
    std::fs::read_to_string(path)
        .map(|text| parse_tsv(&text))
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}
