use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::AlgebraError;
use std::sync::Arc;

use crate::field::{int, FieldError, FieldSpec, Rational, TowerScalar};

/// One reason a parameter triple is rejected.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum ParamViolation {
    /// `alpha + beta + gamma + alpha*beta*gamma` is not zero.
    ConstraintViolated { sum: String },
    /// A parameter lies in `{0, 1, -1}`.
    DegenerateParameter { name: &'static str, value: String },
}

impl fmt::Display for ParamViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamViolation::ConstraintViolated { sum } => {
                write!(f, "alpha+beta+gamma+alpha*beta*gamma = {sum}, expected 0")
            }
            ParamViolation::DegenerateParameter { name, value } => {
                write!(f, "{name} = {value} lies in {{0, 1, -1}}")
            }
        }
    }
}

/// Checks `alpha + beta + gamma + alpha*beta*gamma = 0` and that no
/// parameter is `0` or `±1`. Every violation is reported.
pub fn validate_parameters(
    alpha: &TowerScalar,
    beta: &TowerScalar,
    gamma: &TowerScalar,
) -> Result<(), AlgebraError> {
    let mut violations = Vec::new();
    let sum = alpha
        .try_add(beta)?
        .try_add(gamma)?
        .try_add(&alpha.try_mul(beta)?.try_mul(gamma)?)?;
    if !sum.is_zero() {
        violations.push(ParamViolation::ConstraintViolated {
            sum: sum.to_exact_string(),
        });
    }
    let one = TowerScalar::one();
    for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
        if v.is_zero() || *v == one || *v == one.negated() {
            violations.push(ParamViolation::DegenerateParameter {
                name,
                value: v.to_exact_string(),
            });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(AlgebraError::InvalidParameters(violations))
    }
}

/// A validated parameter triple with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    alpha: Rational,
    beta: Rational,
    gamma: Rational,
}

impl Params {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Result<Self, AlgebraError> {
        validate_parameters(
            &TowerScalar::from_rational(alpha.clone()),
            &TowerScalar::from_rational(beta.clone()),
            &TowerScalar::from_rational(gamma.clone()),
        )?;
        Ok(Self { alpha, beta, gamma })
    }

    /// Skips validation; used to build deliberately degenerate fixtures.
    pub fn new_unchecked(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        Self { alpha, beta, gamma }
    }

    /// Derives `alpha = -(beta + gamma) / (1 + beta*gamma)`.
    pub fn from_beta_gamma(beta: Rational, gamma: Rational) -> Result<Self, AlgebraError> {
        let denom = Rational::one() + &beta * &gamma;
        if denom.is_zero() {
            return Err(AlgebraError::InvalidParameters(vec![
                ParamViolation::ConstraintViolated {
                    sum: "1 + beta*gamma = 0, alpha undefined".into(),
                },
            ]));
        }
        let alpha = -(&beta + &gamma) / denom;
        Self::new(alpha, beta, gamma)
    }

    /// `beta = 2`, `gamma = 3`, `alpha = -5/7`.
    pub fn defaults() -> Self {
        Self::from_beta_gamma(int(2), int(3)).expect("default parameters are valid")
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }
    pub fn beta(&self) -> &Rational {
        &self.beta
    }
    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    pub fn triple(&self) -> [TowerScalar; 3] {
        [
            TowerScalar::from_rational(self.alpha.clone()),
            TowerScalar::from_rational(self.beta.clone()),
            TowerScalar::from_rational(self.gamma.clone()),
        ]
    }

    pub fn check(&self) -> Result<(), AlgebraError> {
        let [a, b, c] = self.triple();
        validate_parameters(&a, &b, &c)
    }

    /// Coefficients of `x2^2` and `x3^2` in the second central quadric:
    /// `(1+alpha)/(1-beta)` and `(1-alpha)/(1+gamma)`.
    pub fn quadric_coefficients(&self) -> (Rational, Rational) {
        let one = Rational::one();
        (
            (&one + &self.alpha) / (&one - &self.beta),
            (&one - &self.alpha) / (&one + &self.gamma),
        )
    }

    /// Coefficients `(1-gamma)/(1+alpha)` and `(1+gamma)/(1-beta)` of the
    /// second quadric cutting out the elliptic curve.
    pub fn curve_coefficients(&self) -> (Rational, Rational) {
        let one = Rational::one();
        (
            (&one - &self.gamma) / (&one + &self.alpha),
            (&one + &self.gamma) / (&one - &self.beta),
        )
    }

    /// Square roots of the three parameters in one tower. Each root is
    /// looked up in the tower built so far and adjoined as `sa`, `sb` or
    /// `sc` only when missing.
    pub fn radicals(&self) -> Result<ParamRadicals, FieldError> {
        let mut spec = FieldSpec::gaussian();
        let mut roots = Vec::with_capacity(3);
        for (value, name) in [(&self.alpha, "sa"), (&self.beta, "sb"), (&self.gamma, "sc")] {
            let root = match spec.sqrt_of_rational(value) {
                Some(r) => r,
                None => {
                    spec = spec.adjoin_sqrt(&TowerScalar::from_rational(value.clone()), name)?;
                    TowerScalar::symbol(&spec, name)?
                }
            };
            roots.push(root);
        }
        let mut it = roots.into_iter().map(|r| r.embed(&spec));
        Ok(ParamRadicals {
            sa: it.next().expect("three roots")?,
            sb: it.next().expect("three roots")?,
            sc: it.next().expect("three roots")?,
            spec,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        use crate::field::format_rational;
        serde_json::json!({
            "alpha": format_rational(&self.alpha),
            "beta": format_rational(&self.beta),
            "gamma": format_rational(&self.gamma),
        })
    }
}

/// Chosen square roots of `alpha`, `beta`, `gamma` and the tower holding them.
#[derive(Clone, Debug)]
pub struct ParamRadicals {
    pub spec: Arc<FieldSpec>,
    pub sa: TowerScalar,
    pub sb: TowerScalar,
    pub sc: TowerScalar,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn ts(r: Rational) -> TowerScalar {
        TowerScalar::from_rational(r)
    }

    #[test]
    fn defaults_are_valid() {
        let p = Params::defaults();
        assert_eq!(*p.alpha(), rat(-5, 7));
        assert!(p.check().is_ok());
        assert_eq!(p.curve_coefficients(), (int(-7), int(-4)));
        let r = p.radicals().unwrap();
        assert_eq!(r.spec.dimension(), 16);
        assert_eq!(&r.sa * &r.sa, ts(rat(-5, 7)));
        assert_eq!(&r.sc * &r.sc, ts(int(3)));
    }

    #[test]
    fn degenerate_alpha() {
        let err = validate_parameters(&ts(int(1)), &ts(int(2)), &ts(int(3))).unwrap_err();
        let AlgebraError::InvalidParameters(v) = err else {
            panic!()
        };
        assert!(v
            .iter()
            .any(|x| matches!(x, ParamViolation::DegenerateParameter { name: "alpha", .. })));
    }

    #[test]
    fn all_ones_violates_both() {
        let one = ts(int(1));
        let AlgebraError::InvalidParameters(v) = validate_parameters(&one, &one, &one).unwrap_err()
        else {
            panic!()
        };
        assert!(v
            .iter()
            .any(|x| matches!(x, ParamViolation::ConstraintViolated { .. })));
        assert_eq!(
            v.iter()
                .filter(|x| matches!(x, ParamViolation::DegenerateParameter { .. }))
                .count(),
            3
        );
    }

    #[test]
    fn derived_alpha_satisfies_constraint() {
        for (b, c) in [(2, 3), (5, -3), (7, 4)] {
            assert!(Params::from_beta_gamma(int(b), int(c)).is_ok(), "{b} {c}");
        }
        assert!(Params::from_beta_gamma(int(1), int(3)).is_err());
    }
}
