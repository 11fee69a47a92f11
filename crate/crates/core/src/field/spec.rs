use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use super::rational::{format_rational, int, rational_sqrt, Rational};
use super::{Coords, FieldError, TowerScalar};

/// Upper bound on adjoined symbols; the Q-dimension is `2^len`.
pub const MAX_SYMBOLS: usize = 12;

/// One adjoined square root: `name^2 = square`, where `square` only involves
/// earlier symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol {
    pub name: String,
    pub square: Coords,
}

/// An ordered tower `Q ⊂ Q(i) ⊂ Q(i, s_1) ⊂ ...` of quadratic extensions.
///
/// Basis monomials are bitmasks over the symbols (bit `k` is symbol `k`);
/// symbol 0 is always `i` with `i^2 = -1`.
#[derive(Clone)]
pub struct FieldSpec {
    symbols: Vec<Symbol>,
    /// `Some` when every defining square is rational (the common fast path).
    rational_squares: Option<Vec<Rational>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}
impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec{:?}", self.describe())
    }
}

impl FieldSpec {
    /// The shared base tower `Q(i)`. It is a prefix of every spec, so scalars
    /// built over it mix freely with scalars over any extension.
    pub fn gaussian() -> Arc<FieldSpec> {
        static BASE: OnceLock<Arc<FieldSpec>> = OnceLock::new();
        BASE.get_or_init(|| {
            Arc::new(FieldSpec {
                symbols: vec![Symbol {
                    name: "i".into(),
                    square: vec![(0, int(-1))],
                }],
                rational_squares: Some(vec![int(-1)]),
            })
        })
        .clone()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Dimension over Q.
    pub fn dimension(&self) -> usize {
        1 << self.symbols.len()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    pub fn is_prefix_of(&self, other: &FieldSpec) -> bool {
        self.symbols.len() <= other.symbols.len()
            && self.symbols[..] == other.symbols[..self.symbols.len()]
    }

    /// Human-readable `name^2 = value` list, used in reports.
    pub fn describe(&self) -> Vec<String> {
        self.symbols
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let sq = TowerScalar::from_parts(self.prefix_arc(k), s.square.clone());
                format!("{}^2 = {}", s.name, sq.to_exact_string())
            })
            .collect()
    }

    /// The spec made of the first `len` symbols.
    pub(crate) fn prefix_arc(&self, len: usize) -> Arc<FieldSpec> {
        let symbols = self.symbols[..len.max(1)].to_vec();
        Arc::new(FieldSpec::from_symbols(symbols))
    }

    fn from_symbols(symbols: Vec<Symbol>) -> FieldSpec {
        let rational_squares = symbols
            .iter()
            .map(|s| match s.square.as_slice() {
                [] => Some(Rational::zero()),
                [(0, q)] => Some(q.clone()),
                _ => None,
            })
            .collect();
        FieldSpec {
            symbols,
            rational_squares,
        }
    }

    /// Extends the tower by a new symbol `name` with `name^2 = value`.
    ///
    /// Existing scalars embed coordinate-wise since old monomial masks keep
    /// their meaning.
    pub fn adjoin_sqrt(
        self: &Arc<Self>,
        value: &TowerScalar,
        name: &str,
    ) -> Result<Arc<FieldSpec>, FieldError> {
        if self.symbol_index(name).is_some() {
            return Err(FieldError::DuplicateSymbol(name.to_string()));
        }
        if name.is_empty() || name.contains(['·', '*', '+', '/', ' ']) {
            return Err(FieldError::Parse(format!("invalid symbol name {name:?}")));
        }
        if self.symbols.len() >= MAX_SYMBOLS {
            return Err(FieldError::TooManySymbols(MAX_SYMBOLS));
        }
        if value.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if !value.spec().is_prefix_of(self) {
            return Err(FieldError::MismatchedSpec);
        }
        let mut symbols = self.symbols.clone();
        symbols.push(Symbol {
            name: name.to_string(),
            square: value.coords().to_vec(),
        });
        Ok(Arc::new(FieldSpec::from_symbols(symbols)))
    }

    /// `(s^{m1}) (s^{m2})` accumulated into `acc` with an extra factor `scale`.
    pub(crate) fn monomial_product_into(
        &self,
        m1: u64,
        m2: u64,
        scale: &Rational,
        acc: &mut BTreeMap<u64, Rational>,
    ) {
        let common = m1 & m2;
        if common == 0 {
            add_into(acc, m1 | m2, scale.clone());
            return;
        }
        if let Some(sq) = &self.rational_squares {
            let mut factor = scale.clone();
            let mut bits = common;
            while bits != 0 {
                let k = bits.trailing_zeros() as usize;
                factor *= &sq[k];
                bits &= bits - 1;
            }
            add_into(acc, m1 ^ m2, factor);
            return;
        }
        for (m, c) in self.monomial_product_general(m1, m2) {
            add_into(acc, m, c * scale);
        }
    }

    fn monomial_product_general(&self, m1: u64, m2: u64) -> Coords {
        let common = m1 & m2;
        if common == 0 {
            return vec![(m1 | m2, Rational::one())];
        }
        let k = 63 - common.leading_zeros() as usize;
        let bit = 1u64 << k;
        let rest = self.monomial_product_general(m1 ^ bit, m2 ^ bit);
        // the square of symbol k only uses symbols below k, so the highest
        // common bit strictly decreases in the recursive products
        let mut acc = BTreeMap::new();
        for (ma, ca) in &self.symbols[k].square {
            for (mb, cb) in &rest {
                self.monomial_product_into(*ma, *mb, &(ca * cb), &mut acc);
            }
        }
        acc.into_iter().collect()
    }

    /// Rational value of `(s^m)^2`, when every symbol in `m` has a rational square.
    pub(crate) fn rational_square_of_monomial(&self, m: u64) -> Option<Rational> {
        let mut out = Rational::one();
        let mut bits = m;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            match self.symbols[k].square.as_slice() {
                [(0, q)] => out *= q,
                _ => return None,
            }
            bits &= bits - 1;
        }
        Some(out)
    }

    /// Bits reachable from `mask` by expanding defining squares.
    pub(crate) fn closure(&self, mask: u64) -> u64 {
        let mut cur = mask;
        loop {
            let mut next = cur;
            let mut bits = cur;
            while bits != 0 {
                let k = bits.trailing_zeros() as usize;
                for (m, _) in &self.symbols[k].square {
                    next |= m;
                }
                bits &= bits - 1;
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn monomial_name(&self, mask: u64) -> String {
        let names: Vec<&str> = (0..self.symbols.len())
            .filter(|k| mask & (1 << k) != 0)
            .map(|k| self.symbols[k].name.as_str())
            .collect();
        names.join("·")
    }

    /// Looks for `x` in the tower with `x^2 = r`, among rational multiples of
    /// basis monomials. For a tower of rational squares this search is
    /// complete: such an `x` exists iff `r / (s^m)^2` is a rational square for
    /// some monomial `m`. The returned root has a positive rational factor and
    /// the smallest such mask.
    pub fn sqrt_of_rational(self: &Arc<Self>, r: &Rational) -> Option<TowerScalar> {
        if r.is_zero() {
            return Some(TowerScalar::zero());
        }
        for m in 0..self.dimension() as u64 {
            let Some(sq) = self.rational_square_of_monomial(m) else {
                continue;
            };
            if let Some(q) = rational_sqrt(&(r / &sq)) {
                return Some(TowerScalar::from_parts(self.clone(), vec![(m, q)]));
            }
        }
        None
    }

    /// Square root of a rational, adjoining `s<n>` (with `n` the squarefree
    /// part of `|r|`) when none exists yet. Returns the possibly-extended spec
    /// and the root.
    pub fn sqrt_or_adjoin(
        self: &Arc<Self>,
        r: &Rational,
    ) -> Result<(Arc<FieldSpec>, TowerScalar), FieldError> {
        if let Some(root) = self.sqrt_of_rational(r) {
            return Ok((self.clone(), root));
        }
        let (_, _, free) = super::rational::squarefree_decomposition(r);
        let name = format!("s{free}");
        let value = TowerScalar::from_rational(Rational::from_integer(free));
        let spec = self.adjoin_sqrt(&value, &name)?;
        let root = spec
            .sqrt_of_rational(r)
            .expect("root exists after adjoining the squarefree part");
        Ok((spec, root))
    }

    /// Exact strings for the defining squares, in adjoin order.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .symbols
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let sq = TowerScalar::from_parts(self.prefix_arc(k), s.square.clone());
                serde_json::json!({"name": s.name, "square": sq.to_exact_string()})
            })
            .collect();
        serde_json::Value::Array(entries)
    }

    /// Inverse of [`FieldSpec::to_json`]. The first entry must be `i^2 = -1`.
    pub fn from_json(v: &serde_json::Value) -> Result<Arc<FieldSpec>, FieldError> {
        let arr = v
            .as_array()
            .ok_or_else(|| FieldError::Parse("field spec must be an array".into()))?;
        let mut spec = FieldSpec::gaussian();
        for (k, entry) in arr.iter().enumerate() {
            let name = entry["name"]
                .as_str()
                .ok_or_else(|| FieldError::Parse("symbol without name".into()))?;
            let square = entry["square"]
                .as_str()
                .ok_or_else(|| FieldError::Parse("symbol without square".into()))?;
            let value = TowerScalar::parse(square, &spec)?;
            if k == 0 {
                if name != "i" || value != TowerScalar::from_int(-1) {
                    return Err(FieldError::Parse("first symbol must be i^2 = -1".into()));
                }
                continue;
            }
            spec = spec.adjoin_sqrt(&value, name)?;
        }
        Ok(spec)
    }
}

fn add_into(acc: &mut BTreeMap<u64, Rational>, m: u64, c: Rational) {
    use std::collections::btree_map::Entry;
    match acc.entry(m) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Smallest spec containing both, when one is a prefix of the other.
pub(crate) fn join(a: &Arc<FieldSpec>, b: &Arc<FieldSpec>) -> Result<Arc<FieldSpec>, FieldError> {
    if Arc::ptr_eq(a, b) {
        return Ok(a.clone());
    }
    if a.len() >= b.len() {
        if b.is_prefix_of(a) {
            return Ok(a.clone());
        }
    } else if a.is_prefix_of(b) {
        return Ok(b.clone());
    }
    Err(FieldError::MismatchedSpec)
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(")?;
        for (k, s) in self.symbols.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            match s.square.as_slice() {
                [(0, q)] => write!(f, "{}={}", s.name, format_rational(q))?,
                _ => write!(f, "{}", s.name)?,
            }
        }
        write!(f, ")")
    }
}
