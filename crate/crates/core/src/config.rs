//! Operator specification records.
//!
//! ```json
//! { "alpha": "1/2", "r": "1", "s": "1",
//!   "lambda": { "preset": "cesaro" },
//!   "backend": "exact", "n": 16 }
//! ```
//!
//! `lambda` may instead be `{ "file": "path" }` with one value per line.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::coefficients::FractionalOrder;
use crate::error::{Error, Result};
use crate::operators::{BinomialParams, LambdaPreset, LambdaSeq, ProductOperator};
use crate::scalar::{Backend, Scalar};
use crate::transforms::SequenceWindow;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LambdaSpec {
    Preset { preset: String },
    File { file: PathBuf },
}

impl Default for LambdaSpec {
    fn default() -> Self {
        LambdaSpec::Preset {
            preset: "cesaro".into(),
        }
    }
}

/// The on-disk record; every field optional so flags can fill the gaps.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub alpha: Option<String>,
    pub r: Option<String>,
    pub s: Option<String>,
    pub lambda: Option<LambdaSpec>,
    pub backend: Option<String>,
    pub n: Option<usize>,
}

impl ConfigFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("reading {}: {e}", path.display())))?;
        ConfigFile::from_json(&text)
    }

    /// Fields set in `over` win.
    pub fn merged_with(self, over: ConfigFile) -> ConfigFile {
        ConfigFile {
            alpha: over.alpha.or(self.alpha),
            r: over.r.or(self.r),
            s: over.s.or(self.s),
            lambda: over.lambda.or(self.lambda),
            backend: over.backend.or(self.backend),
            n: over.n.or(self.n),
        }
    }
}

/// Validated run configuration. Scalars stay textual until a backend is
/// chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub alpha: String,
    pub r: String,
    pub s: String,
    pub lambda: LambdaSpec,
    pub backend: Backend,
    pub n: usize,
}

pub const DEFAULT_ORDER: usize = 16;

impl RunConfig {
    /// Applies defaults (`alpha = 1/2`, `r = s = 1`, Cesaro, `n = 16`) and
    /// checks what can be checked without a backend: `n >= 1`, parseable
    /// scalars, `r + s != 0`.
    pub fn resolve(file: ConfigFile, default_backend: Backend) -> Result<Self> {
        let backend = match file.backend {
            Some(b) => b.parse()?,
            None => default_backend,
        };
        let cfg = RunConfig {
            alpha: file.alpha.unwrap_or_else(|| "1/2".into()),
            r: file.r.unwrap_or_else(|| "1".into()),
            s: file.s.unwrap_or_else(|| "1".into()),
            lambda: file.lambda.unwrap_or_default(),
            backend,
            n: file.n.unwrap_or(DEFAULT_ORDER),
        };
        if cfg.n == 0 {
            return Err(Error::Config("n must be at least 1".into()));
        }
        match cfg.backend {
            Backend::Exact => cfg.operator::<crate::Rational>().map(|_| ())?,
            Backend::Float => cfg.operator::<crate::Float>().map(|_| ())?,
        }
        Ok(cfg)
    }

    pub fn lambda_seq<S: Scalar>(&self) -> Result<LambdaSeq<S>> {
        match &self.lambda {
            LambdaSpec::Preset { preset } => Ok(LambdaSeq::preset(preset.parse::<LambdaPreset>()?)),
            LambdaSpec::File { file } => {
                let text = std::fs::read_to_string(file)
                    .map_err(|e| Error::Config(format!("reading {}: {e}", file.display())))?;
                LambdaSeq::from_values(SequenceWindow::<S>::parse_lines(&text)?.into_values())
            }
        }
    }

    pub fn operator<S: Scalar>(&self) -> Result<ProductOperator<S>> {
        let alpha = FractionalOrder::new(S::parse(&self.alpha)?);
        let params = BinomialParams::new(S::parse(&self.r)?, S::parse(&self.s)?)?;
        Ok(ProductOperator::new(params, alpha, self.lambda_seq()?))
    }
}
