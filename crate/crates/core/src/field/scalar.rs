use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use super::spec::join;
use super::{Coords, FieldError, FieldSpec};
use crate::linalg;

/// An element of a [`FieldSpec`] tower in canonical form: a sparse list of
/// `(monomial mask, rational coefficient)` sorted by mask, with every symbol
/// exponent reduced to 0 or 1 and no zero coefficients.
#[derive(Clone)]
pub struct TowerScalar {
    spec: Arc<FieldSpec>,
    coords: Coords,
}

impl TowerScalar {
    /// Builds a scalar from raw coordinates. Coordinates are sorted and
    /// zeros dropped; masks must be inside the spec.
    pub fn from_parts(spec: Arc<FieldSpec>, coords: Coords) -> Self {
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (m, c) in coords {
            assert!(m < spec.dimension() as u64, "monomial outside the tower");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let coords = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self { spec, coords }
    }

    pub fn zero() -> Self {
        Self {
            spec: FieldSpec::gaussian(),
            coords: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let coords = if r.is_zero() { vec![] } else { vec![(0, r)] };
        Self {
            spec: FieldSpec::gaussian(),
            coords,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// The imaginary unit of the base tower.
    pub fn i() -> Self {
        Self {
            spec: FieldSpec::gaussian(),
            coords: vec![(1, Rational::one())],
        }
    }

    /// The adjoined symbol `name` as an element of `spec`.
    pub fn symbol(spec: &Arc<FieldSpec>, name: &str) -> Result<Self, FieldError> {
        let k = spec
            .symbol_index(name)
            .ok_or_else(|| FieldError::UnknownSymbol(name.to_string()))?;
        Ok(Self {
            spec: spec.clone(),
            coords: vec![(1 << k, Rational::one())],
        })
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn coords(&self) -> &[(u64, Rational)] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.coords.as_slice(), [(0, c)] if c.is_one())
    }

    /// `Some(q)` when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coords.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Re-homes this element in an extension of its spec.
    pub fn embed(&self, spec: &Arc<FieldSpec>) -> Result<Self, FieldError> {
        if !self.spec.is_prefix_of(spec) {
            return Err(FieldError::MismatchedSpec);
        }
        Ok(Self {
            spec: spec.clone(),
            coords: self.coords.clone(),
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        let spec = join(&self.spec, &rhs.spec)?;
        let mut out = Vec::with_capacity(self.coords.len() + rhs.coords.len());
        let (mut a, mut b) = (self.coords.iter().peekable(), rhs.coords.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, ca)), Some((mb, cb))) => {
                    if ma < mb {
                        out.push((*ma, ca.clone()));
                        a.next();
                    } else if mb < ma {
                        out.push((*mb, cb.clone()));
                        b.next();
                    } else {
                        let s = ca + cb;
                        if !s.is_zero() {
                            out.push((*ma, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some(x), None) => {
                    out.push((*x).clone());
                    a.next();
                }
                (None, Some(y)) => {
                    out.push((*y).clone());
                    b.next();
                }
                (None, None) => break,
            }
        }
        Ok(Self { spec, coords: out })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.try_add(&rhs.negated())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        let spec = join(&self.spec, &rhs.spec)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self {
                spec,
                coords: vec![],
            });
        }
        // rational times anything: scale coordinates
        if let [(0, c)] = self.coords.as_slice() {
            return Ok(Self {
                spec,
                coords: rhs.coords.iter().map(|(m, x)| (*m, x * c)).collect(),
            });
        }
        if let [(0, c)] = rhs.coords.as_slice() {
            return Ok(Self {
                spec,
                coords: self.coords.iter().map(|(m, x)| (*m, x * c)).collect(),
            });
        }
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (ma, ca) in &self.coords {
            for (mb, cb) in &rhs.coords {
                spec.monomial_product_into(*ma, *mb, &(ca * cb), &mut acc);
            }
        }
        Ok(Self {
            spec,
            coords: acc.into_iter().collect(),
        })
    }

    pub fn negated(&self) -> Self {
        Self {
            spec: self.spec.clone(),
            coords: self.coords.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self {
                spec: self.spec.clone(),
                coords: vec![],
            };
        }
        Self {
            spec: self.spec.clone(),
            coords: self.coords.iter().map(|(m, c)| (*m, c * r)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Multiplicative inverse.
    ///
    /// Single monomials over rational squares are inverted in closed form;
    /// everything else by solving `a x = 1` on the Q-basis of the smallest
    /// sub-tower containing `a`. A singular system means `a` is a zero divisor.
    pub fn invert(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let [(m, c)] = self.coords.as_slice() {
            if let Some(sq) = self.spec.rational_square_of_monomial(*m) {
                if sq.is_zero() {
                    return Err(FieldError::ZeroDivisor);
                }
                // (c s^m)^{-1} = s^m / (c sq)
                let inv = (c * &sq).recip();
                return Ok(Self {
                    spec: self.spec.clone(),
                    coords: vec![(*m, inv)],
                });
            }
        }
        let support = self.coords.iter().fold(0u64, |acc, (m, _)| acc | m);
        let closure = self.spec.closure(support);
        let basis: Vec<u64> = (0..=closure).filter(|m| m & !closure == 0).collect();
        let index = |m: u64| basis.binary_search(&m).expect("closed under products");
        let n = basis.len();
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        for (col, &m) in basis.iter().enumerate() {
            let mono = Self {
                spec: self.spec.clone(),
                coords: vec![(m, Rational::one())],
            };
            let prod = self.try_mul(&mono)?;
            for (pm, pc) in prod.coords {
                matrix[index(pm)][col] = pc;
            }
        }
        let mut rhs = vec![Rational::zero(); n];
        rhs[0] = Rational::one();
        let x = linalg::solve(&matrix, &rhs)?.ok_or(FieldError::ZeroDivisor)?;
        // a unique solution is required; a singular system with a consistent
        // right-hand side still means a is a zero divisor
        if linalg::rank(&matrix)? < n {
            return Err(FieldError::ZeroDivisor);
        }
        Ok(Self::from_parts(
            self.spec.clone(),
            basis.iter().zip(x).map(|(m, c)| (*m, c)).collect(),
        ))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.try_mul(&rhs.invert()?)
    }

    /// Exact serialization: terms `p/q` or `p/q·sym·sym`, joined by ` + `.
    pub fn to_exact_string(&self) -> String {
        if self.coords.is_empty() {
            return "0/1".into();
        }
        let terms: Vec<String> = self
            .coords
            .iter()
            .map(|(m, c)| {
                if *m == 0 {
                    format_rational(c)
                } else {
                    format!("{}·{}", format_rational(c), self.spec.monomial_name(*m))
                }
            })
            .collect();
        terms.join(" + ")
    }

    /// Parses the format written by [`TowerScalar::to_exact_string`]. `*` is
    /// accepted in place of `·`.
    pub fn parse(s: &str, spec: &Arc<FieldSpec>) -> Result<Self, FieldError> {
        let mut coords = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(FieldError::Parse(format!("empty term in {s:?}")));
            }
            let mut parts = term.split(['·', '*']);
            let coeff = parse_rational(parts.next().unwrap_or_default())?;
            let mut mask = 0u64;
            for name in parts {
                let k = spec
                    .symbol_index(name.trim())
                    .ok_or_else(|| FieldError::UnknownSymbol(name.trim().to_string()))?;
                if mask & (1 << k) != 0 {
                    return Err(FieldError::Parse(format!("repeated symbol in {term:?}")));
                }
                mask |= 1 << k;
            }
            coords.push((mask, coeff));
        }
        Ok(Self::from_parts(spec.clone(), coords))
    }

    /// Sign of the leading rational coordinate; used only for tidy output.
    pub fn leading_sign(&self) -> i8 {
        match self.coords.first() {
            None => 0,
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }
}

impl PartialEq for TowerScalar {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && join(&self.spec, &other.spec).is_ok()
    }
}

impl fmt::Debug for TowerScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exact_string())
    }
}

impl fmt::Display for TowerScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exact_string())
    }
}

impl Default for TowerScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for TowerScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for TowerScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

// Operator forms panic on mismatched towers; use the `try_*` methods where
// inputs come from independent sources.
impl Add<&TowerScalar> for &TowerScalar {
    type Output = TowerScalar;
    fn add(self, rhs: &TowerScalar) -> TowerScalar {
        self.try_add(rhs).expect("tower mismatch in +")
    }
}
impl Sub<&TowerScalar> for &TowerScalar {
    type Output = TowerScalar;
    fn sub(self, rhs: &TowerScalar) -> TowerScalar {
        self.try_sub(rhs).expect("tower mismatch in -")
    }
}
impl Mul<&TowerScalar> for &TowerScalar {
    type Output = TowerScalar;
    fn mul(self, rhs: &TowerScalar) -> TowerScalar {
        self.try_mul(rhs).expect("tower mismatch in *")
    }
}
impl Neg for &TowerScalar {
    type Output = TowerScalar;
    fn neg(self) -> TowerScalar {
        self.negated()
    }
}
impl Add for TowerScalar {
    type Output = TowerScalar;
    fn add(self, rhs: TowerScalar) -> TowerScalar {
        &self + &rhs
    }
}
impl Sub for TowerScalar {
    type Output = TowerScalar;
    fn sub(self, rhs: TowerScalar) -> TowerScalar {
        &self - &rhs
    }
}
impl Mul for TowerScalar {
    type Output = TowerScalar;
    fn mul(self, rhs: TowerScalar) -> TowerScalar {
        &self * &rhs
    }
}
impl Neg for TowerScalar {
    type Output = TowerScalar;
    fn neg(self) -> TowerScalar {
        self.negated()
    }
}

impl linalg::Field for TowerScalar {
    fn zero() -> Self {
        TowerScalar::zero()
    }
    fn one() -> Self {
        TowerScalar::one()
    }
    fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        self.negated()
    }
    fn inv(&self) -> Result<Self, FieldError> {
        self.invert()
    }
}

impl linalg::Field for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, FieldError> {
        if Zero::is_zero(self) {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}
