//! Randomized exact-arithmetic oracles for the geometry of the Chow variety
//! `Delta_{n,s}` of totally decomposable forms and of the variety of
//! codimension-one forms.
//!
//! "Generic" is realized as a seeded random draw over the working field.
//! Each oracle retries with derived seeds when a draw is degenerate or a
//! comparison fails, and records how many retries it used.

mod degree;
mod secant;
mod tangent;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::FieldSpec;
use crate::rng::derive_seed;

pub use degree::{chow_degree_oracle, partition_count, verify_chow_degree};
pub use secant::{random_vhat_point, smin_oracle, terracini_dim, verify_terracini, vhat_tangent_basis, verify_vhat_dim};
pub use tangent::{
    chow_tangent_basis, forms_through_pairwise_meets, ideal_claim_hilbert_check, pairwise_meet_conditions,
    verify_chow_tangent,
};

/// Fresh seeds tried after the first attempt.
pub const DEFAULT_RETRIES: usize = 5;

/// Outcome of one oracle run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub oracle_name: String,
    pub params: BTreeMap<String, u64>,
    pub seed: u64,
    pub field: FieldSpec,
    pub computed: BTreeMap<String, i64>,
    pub expected: BTreeMap<String, i64>,
    pub pass: bool,
    pub retries_used: usize,
}

/// Computed and expected values from a single attempt.
#[derive(Debug, Clone, Default)]
pub(crate) struct Comparison {
    pub computed: BTreeMap<String, i64>,
    pub expected: BTreeMap<String, i64>,
}

impl Comparison {
    pub fn record(&mut self, key: &str, computed: i64, expected: i64) {
        self.computed.insert(key.to_string(), computed);
        self.expected.insert(key.to_string(), expected);
    }

    pub fn agrees(&self) -> bool {
        self.computed == self.expected
    }
}

pub(crate) struct OracleRun<'a> {
    pub name: &'a str,
    pub params: &'a [(&'a str, u64)],
    pub seed: u64,
    pub field: FieldSpec,
    pub retries: usize,
}

impl OracleRun<'_> {
    /// Runs `attempt` with derived seeds until the comparison agrees or the
    /// budget is spent. A degenerate draw is signalled by
    /// `Err(GenericityFailure)` and is retried like a disagreement; other
    /// errors propagate.
    pub fn execute(self, mut attempt: impl FnMut(u64) -> Result<Comparison>) -> Result<VerificationReport> {
        let mut last = None;
        let mut last_err = None;
        for k in 0..=self.retries {
            match attempt(derive_seed(self.seed, k)) {
                Ok(cmp) if cmp.agrees() => return Ok(self.report(cmp, k)),
                Ok(cmp) => last = Some((cmp, k)),
                Err(e @ Error::GenericityFailure { .. }) => last_err = Some(e),
                Err(e) => return Err(e),
            }
        }
        match (last, last_err) {
            (Some((cmp, k)), _) => Ok(self.report(cmp, k)),
            (None, Some(Error::GenericityFailure { reason, .. })) => Err(Error::GenericityFailure {
                attempts: self.retries + 1,
                reason,
            }),
            _ => unreachable!("at least one attempt ran"),
        }
    }

    fn report(&self, cmp: Comparison, retries_used: usize) -> VerificationReport {
        VerificationReport {
            oracle_name: self.name.to_string(),
            params: self.params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            seed: self.seed,
            field: self.field,
            pass: cmp.agrees(),
            computed: cmp.computed,
            expected: cmp.expected,
            retries_used,
        }
    }
}

pub(crate) fn degenerate(reason: impl Into<String>) -> Error {
    Error::GenericityFailure {
        attempts: 1,
        reason: reason.into(),
    }
}
