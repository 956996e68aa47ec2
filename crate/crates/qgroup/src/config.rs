//! Run configuration: which suite, at which truncation, for which μ.

use std::fmt;
use std::str::FromStr;

use qgroup_core::coeffring::MuMode;
use thiserror::Error;

/// Largest deformation order accepted on the command line.
pub const MAX_ORDER: u32 = 8;
/// Largest coordinate degree accepted on the command line.
pub const MAX_DEGREE: u32 = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("unknown suite `{0}` (expected one of: {list})", list = Suite::names().join(", "))]
    UnknownSuite(String),
    #[error("unknown value `{0}` for mu (expected -1, 0, +1 or sym)")]
    UnknownMu(String),
    #[error("order must lie in 1..={MAX_ORDER}, got {0}")]
    Order(u32),
    #[error("degree must lie in 1..={MAX_DEGREE}, got {0}")]
    Degree(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    HopfAxioms,
    RPoincare,
    RContracted,
    Weyl,
    Contraction,
    Matrep,
    Frt,
    Poisson,
    Recurrence,
    /// Deliberately broken structures; every check is expected to fail.
    Controls,
    All,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::HopfAxioms,
        Suite::RPoincare,
        Suite::RContracted,
        Suite::Weyl,
        Suite::Contraction,
        Suite::Matrep,
        Suite::Frt,
        Suite::Poisson,
        Suite::Recurrence,
        Suite::Controls,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HopfAxioms => "hopf-axioms",
            Suite::RPoincare => "r-poincare",
            Suite::RContracted => "r-contracted",
            Suite::Weyl => "weyl",
            Suite::Contraction => "contraction",
            Suite::Matrep => "matrep",
            Suite::Frt => "frt",
            Suite::Poisson => "poisson",
            Suite::Recurrence => "recurrence",
            Suite::Controls => "controls",
            Suite::All => "all",
        }
    }

    pub fn names() -> Vec<&'static str> {
        Suite::ALL.iter().map(|s| s.name()).collect()
    }

    /// The suites that `all` runs, in order (the negative controls are not
    /// part of it).
    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::ALL[..9].to_vec(),
            s => vec![s],
        }
    }

    /// The model (or models) a suite exercises, for the report header.
    pub fn model(self, mu: MuMode) -> String {
        let m = mu.label();
        match self {
            Suite::HopfAxioms => format!("uz-iso11,funz-iso11,uw-s{m},uw-g{m},funw-g{m}"),
            Suite::RPoincare | Suite::Recurrence | Suite::Controls => "uz-iso11".into(),
            Suite::RContracted | Suite::Weyl => format!("uw-s{m}"),
            Suite::Contraction => format!("uw-g{m}"),
            Suite::Matrep | Suite::Frt | Suite::Poisson => format!("funw-g{m}"),
            Suite::All => "catalog".into(),
        }
    }

    /// Default `(order, degree)` of the suite's main model; the degree is
    /// `None` for suites that involve no coordinate algebra. Suites spanning
    /// several models report the global defaults.
    pub fn designated(self) -> (u32, Option<u32>) {
        match self {
            Suite::Frt | Suite::Poisson => (2, Some(3)),
            Suite::Contraction => (DEFAULT_ORDER, Some(3)),
            Suite::HopfAxioms | Suite::All => (DEFAULT_ORDER, Some(DEFAULT_DEGREE)),
            Suite::RContracted => (3, None),
            Suite::RPoincare | Suite::Weyl | Suite::Matrep | Suite::Recurrence | Suite::Controls => {
                (DEFAULT_ORDER, None)
            }
        }
    }

    /// Whether any model of the suite takes a degree cap.
    pub fn uses_degree(self) -> bool {
        self.designated().1.is_some()
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| ConfigError::UnknownSuite(s.into()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn parse_mu(s: &str) -> Result<MuMode, ConfigError> {
    MuMode::parse(s).ok_or_else(|| ConfigError::UnknownMu(s.into()))
}

/// A validated run configuration. `order` and `degree` are the requested
/// truncation; suites whose models have their own designated truncation use
/// it unless an explicit value was given.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub suite: Suite,
    pub order: Option<u32>,
    pub degree: Option<u32>,
    pub mu: MuMode,
    pub parallel: bool,
}

pub const DEFAULT_ORDER: u32 = 4;
pub const DEFAULT_DEGREE: u32 = 4;

impl Config {
    pub fn new(suite: Suite) -> Self {
        Config {
            suite,
            order: None,
            degree: None,
            mu: MuMode::Symbolic,
            parallel: false,
        }
    }

    pub fn validate(self) -> Result<Self, ConfigError> {
        if let Some(n) = self.order {
            if !(1..=MAX_ORDER).contains(&n) {
                return Err(ConfigError::Order(n));
            }
        }
        if let Some(d) = self.degree {
            if !(1..=MAX_DEGREE).contains(&d) {
                return Err(ConfigError::Degree(d));
            }
        }
        Ok(self)
    }

    /// Order to use where the model's designated order is `designated`.
    pub fn order_or(&self, designated: u32) -> u32 {
        self.order.unwrap_or(designated)
    }

    pub fn degree_or(&self, designated: u32) -> u32 {
        self.degree.unwrap_or(designated)
    }

    /// The order reported in the header.
    pub fn reported_order(&self) -> u32 {
        self.order.unwrap_or(self.suite.designated().0)
    }

    pub fn reported_degree(&self) -> Option<u32> {
        if self.suite.uses_degree() {
            self.degree.or(self.suite.designated().1)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!(matches!("nope".parse::<Suite>(), Err(ConfigError::UnknownSuite(_))));
    }

    #[test]
    fn bounds_are_enforced() {
        let mut c = Config::new(Suite::Weyl);
        c.order = Some(0);
        assert_eq!(c.validate(), Err(ConfigError::Order(0)));
        c.order = Some(3);
        c.degree = Some(MAX_DEGREE + 1);
        assert_eq!(c.validate(), Err(ConfigError::Degree(MAX_DEGREE + 1)));
    }
}
