use crate::builders::DEFAULT_DIM_CAP;
use crate::error::{Result, WhaError};
use crate::numerics::Tolerances;
use serde::Serialize;

/// `"WHA1"` in ASCII.
pub const DEFAULT_SEED: u64 = 0x5748_4131;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Config {
    pub tolerances: Tolerances,
    pub seed: u64,
    pub dim_cap: usize,
    pub output: Output,
}

impl Default for Config {
    fn default() -> Self {
        Config { tolerances: Tolerances::default(), seed: DEFAULT_SEED, dim_cap: DEFAULT_DIM_CAP, output: Output::Text }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        self.tolerances.validate()?;
        if self.dim_cap == 0 {
            return Err(WhaError::InvalidParams("dim_cap must be at least 1".into()));
        }
        Ok(())
    }

    pub fn tol(&self) -> &Tolerances {
        &self.tolerances
    }
}
