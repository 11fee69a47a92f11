use std::path::PathBuf;

use clap::ValueEnum;
use sklyanin_core::field::parse_rational;
use sklyanin_core::ncalg::DEFAULT_BOUND;
use sklyanin_core::{Params, Rational};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Relations,
    Hilbert,
    Center,
    Points,
    Modules,
    Isomorphisms,
    Nilpotent,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Center,
        Suite::Hilbert,
        Suite::Isomorphisms,
        Suite::Modules,
        Suite::Nilpotent,
        Suite::Points,
        Suite::Relations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Hilbert => "hilbert",
            Suite::Center => "center",
            Suite::Points => "points",
            Suite::Modules => "modules",
            Suite::Isomorphisms => "isomorphisms",
            Suite::Nilpotent => "nilpotent",
            Suite::All => "all",
        }
    }
}

/// Which algebras the Hilbert suite looks at.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum AlgebraChoice {
    /// The untwisted algebra and its factor ring.
    A,
    /// The twist and its factor ring.
    Twist,
    #[default]
    Both,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub params: Params,
    pub degree: usize,
    pub module_depth: usize,
    pub algebra: AlgebraChoice,
    pub suites: Vec<Suite>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    /// Parses and validates parameters. `alpha` defaults to
    /// `-(beta + gamma) / (1 + beta gamma)`.
    pub fn new(
        beta: &str,
        gamma: &str,
        alpha: Option<&str>,
        degree: usize,
        module_depth: usize,
    ) -> Result<Self, CliError> {
        let parse = |name: &str, s: &str| -> Result<Rational, CliError> {
            parse_rational(s).map_err(|e| CliError::Config(format!("--{name} {s}: {e}")))
        };
        let beta = parse("beta", beta)?;
        let gamma = parse("gamma", gamma)?;
        let params = match alpha {
            Some(a) => Params::new(parse("alpha", a)?, beta, gamma),
            None => Params::from_beta_gamma(beta, gamma),
        }
        .map_err(|e| CliError::Config(e.to_string()))?;
        if degree < 4 {
            return Err(CliError::Config(format!(
                "--degree {degree}: at least 4 is needed"
            )));
        }
        if module_depth < 2 {
            return Err(CliError::Config(format!(
                "--module-depth {module_depth}: at least 2 is needed"
            )));
        }
        Ok(Self {
            params,
            degree,
            module_depth,
            algebra: AlgebraChoice::Both,
            suites: vec![Suite::All],
            out: None,
        })
    }

    pub fn defaults() -> Self {
        Self::new(
            "2",
            "3",
            None,
            DEFAULT_BOUND,
            sklyanin_core::gradedmod::DEFAULT_DEPTH,
        )
        .expect("default parameters are valid")
    }

    /// Selected suites with `all` expanded, by name and without duplicates.
    pub fn expanded_suites(&self) -> Vec<Suite> {
        let mut out: Vec<Suite> = if self.suites.contains(&Suite::All) {
            Suite::EACH.to_vec()
        } else {
            self.suites.clone()
        };
        out.sort_by_key(|s| s.name());
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sklyanin_core::field::rat;

    #[test]
    fn alpha_is_derived() {
        let c = RunConfig::new("2", "3", None, 6, 5).unwrap();
        assert_eq!(c.params.alpha(), &rat(-5, 7));
        assert!(RunConfig::new("2", "3", Some("-5/7"), 6, 5).is_ok());
        assert!(RunConfig::new("2", "3", Some("1/3"), 6, 5).is_err());
    }

    #[test]
    fn all_expands_in_name_order() {
        let mut c = RunConfig::defaults();
        c.suites = vec![Suite::Points, Suite::All];
        let names: Vec<_> = c.expanded_suites().iter().map(|s| s.name()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert_eq!(names.len(), 7);
    }

    #[test]
    fn bounds_are_checked() {
        assert!(matches!(
            RunConfig::new("2", "3", None, 3, 5),
            Err(CliError::Config(_))
        ));
        assert!(matches!(
            RunConfig::new("2", "3", None, 6, 1),
            Err(CliError::Config(_))
        ));
        assert!(matches!(
            RunConfig::new("a", "3", None, 6, 5),
            Err(CliError::Config(_))
        ));
    }
}
