use std::fmt;

use chowforms::exactalg::{FieldSpec, PrimeField, DEFAULT_PRIME};
use chowforms::Error;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Output {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct RunConfig {
    pub field: FieldSpec,
    pub seed: u64,
    pub retries: usize,
    pub enumeration_guard: u64,
    pub output: Output,
}

impl RunConfig {
    pub fn from_flags(
        prime: Option<u64>,
        rationals: bool,
        seed: u64,
        retries: usize,
        guard: u64,
        json: bool,
        csv: bool,
    ) -> Result<Self, Failure> {
        let field = if rationals {
            FieldSpec::Rationals
        } else {
            let p = PrimeField::new(prime.unwrap_or(DEFAULT_PRIME))?;
            FieldSpec::Prime { modulus: p.modulus() }
        };
        let output = match (json, csv) {
            (true, true) => return Err(Failure::Usage("--json and --csv are exclusive".into())),
            (true, false) => Output::Json,
            (false, true) => Output::Csv,
            (false, false) => Output::Text,
        };
        Ok(Self {
            field,
            seed,
            retries,
            enumeration_guard: guard,
            output,
        })
    }

    /// The same configuration over another field, for inputs that carry
    /// their own field.
    pub fn with_field(self, field: FieldSpec) -> Self {
        Self { field, ..self }
    }
}

/// Why a command stopped early. Exit codes: 1 verification failure,
/// 2 usage or input error, 3 enumeration guard tripped.
#[derive(Debug)]
pub enum Failure {
    Verification(String),
    Usage(String),
    Guard(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Guard(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Guard(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::EnumerationTooLarge { .. } => Failure::Guard(msg),
            Error::GenericityFailure { .. } | Error::Inconsistent | Error::SplittingFailure => Failure::Verification(msg),
            _ => Failure::Usage(msg),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(format!("invalid JSON: {e}"))
    }
}
