use std::path::PathBuf;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use girthcol::constructions::DEFAULT_VERTEX_CAP;
use girthcol::oracle::DEFAULT_BUDGET;
use girthcol::params::ExactLimits;

use crate::CliError;

#[derive(Serialize)]
pub struct InputDigest {
    pub path: PathBuf,
    pub sha256: String,
}

#[derive(Serialize)]
pub struct Defaults {
    pub oracle_budget: u64,
    pub vertex_cap: usize,
    pub exact_colouring_number: usize,
    pub exact_width: usize,
    pub exact_hadwiger: usize,
}

/// Everything needed to reproduce a run: the exact command line, a digest
/// of every input file, the structured output and the default limits.
#[derive(Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub output: Value,
    pub status: u8,
    pub elapsed_ms: u128,
    pub version: &'static str,
    pub defaults: Defaults,
}

impl RunReport {
    pub fn new(
        inputs: &[PathBuf],
        output: Value,
        status: u8,
        elapsed: Duration,
    ) -> Result<Self, CliError> {
        let inputs = inputs
            .iter()
            .map(|path| {
                let bytes = std::fs::read(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                Ok(InputDigest {
                    path: path.clone(),
                    sha256: hex::encode(Sha256::digest(&bytes)),
                })
            })
            .collect::<Result<_, CliError>>()?;
        let limits = ExactLimits::default();
        Ok(Self {
            command: std::env::args().collect(),
            inputs,
            output,
            status,
            elapsed_ms: elapsed.as_millis(),
            version: env!("CARGO_PKG_VERSION"),
            defaults: Defaults {
                oracle_budget: DEFAULT_BUDGET,
                vertex_cap: DEFAULT_VERTEX_CAP,
                exact_colouring_number: limits.colouring_number,
                exact_width: limits.width,
                exact_hadwiger: limits.hadwiger,
            },
        })
    }
}
