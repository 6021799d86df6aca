//! The relativisation parameter: which Γ-indices exist and how they compare.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The base order the notation system is built over.
///
/// `Finite(n)` admits the Γ-indices `0..=n`; `OmegaBase` admits every
/// natural index. In both instantiations indices compare numerically.
/// Richer bases only need to extend [`BaseOrder::cmp_indices`] and
/// [`BaseOrder::admits_gamma`]; everything else goes through these two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseOrder {
    Finite(u64),
    OmegaBase,
}

impl BaseOrder {
    /// Whether `Gamma(index)` is an admissible atom over this base.
    pub fn admits_gamma(&self, index: u64) -> bool {
        match self {
            BaseOrder::Finite(n) => index <= *n,
            BaseOrder::OmegaBase => true,
        }
    }

    /// The order on admissible Γ-indices.
    pub fn cmp_indices(&self, a: u64, b: u64) -> Ordering {
        let _ = self;
        a.cmp(&b)
    }

    /// Largest admissible index, if the base is finite.
    pub fn max_gamma(&self) -> Option<u64> {
        match self {
            BaseOrder::Finite(n) => Some(*n),
            BaseOrder::OmegaBase => None,
        }
    }
}

impl Default for BaseOrder {
    fn default() -> Self {
        BaseOrder::Finite(0)
    }
}

impl fmt::Display for BaseOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseOrder::Finite(n) => write!(f, "{n}"),
            BaseOrder::OmegaBase => write!(f, "omega"),
        }
    }
}

impl std::str::FromStr for BaseOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "omega" | "w" => Ok(BaseOrder::OmegaBase),
            other => other
                .parse::<u64>()
                .map(BaseOrder::Finite)
                .map_err(|_| format!("invalid base order `{other}`: expected a natural or `omega`")),
        }
    }
}
