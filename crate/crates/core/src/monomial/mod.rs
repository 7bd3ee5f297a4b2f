//! Exact monomial-ideal algebra.
//!
//! Variables are numbered `X1..Xn`; a [`Monomial`] is a dense exponent vector
//! over that universe. A [`MonomialIdeal`] always holds its unique minimal
//! generating set, sorted in descending lexicographic order of exponent
//! vectors.

mod decompose;
mod polarize;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use decompose::{is_m_unmixed, krull_dimension_of_quotient, m_irreducible_decompose};
pub use polarize::{polarize, Polarization};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u64>,
}

fn same_context(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::ContextMismatch { left, right })
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// `exps[k]` is the exponent of `X{k+1}`.
    pub fn from_exponents(exps: Vec<u64>) -> Self {
        Monomial { exps }
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated variables multiply.
    pub fn from_pairs(nvars: usize, pairs: &[(usize, u64)]) -> Result<Self> {
        let mut m = Monomial::one(nvars);
        for &(var, e) in pairs {
            if var == 0 || var > nvars {
                return Err(Error::VariableOutOfRange { var, nvars });
            }
            m.exps[var - 1] += e;
        }
        Ok(m)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    /// Exponent of `X{var}`; zero outside the universe.
    pub fn exponent(&self, var: usize) -> u64 {
        var.checked_sub(1)
            .and_then(|k| self.exps.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// Variables with positive exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k + 1)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// True for `X_i^e` with `e >= 1`.
    pub fn is_pure_power(&self) -> bool {
        self.support().count() == 1
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        same_context(self.nvars(), other.nvars())?;
        Ok(self.divides_unchecked(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        same_context(self.nvars(), other.nvars())?;
        Ok(self.zip_with(other, u64::max))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        same_context(self.nvars(), other.nvars())?;
        Ok(self.zip_with(other, u64::min))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub(crate) fn zip_with(&self, other: &Monomial, f: impl Fn(u64, u64) -> u64) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Parses `X3^2*X4` (or `1`). Whitespace is ignored.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "1" {
            return Ok(Monomial::one(nvars));
        }
        let mut pairs = Vec::new();
        for factor in compact.split('*') {
            let bad = || Error::Parse(format!("malformed monomial factor `{factor}` in `{s}`"));
            let body = factor.strip_prefix(['X', 'x']).ok_or_else(bad)?;
            let (var, exp) = match body.split_once('^') {
                Some((v, e)) => (v, e.parse::<u64>().map_err(|_| bad())?),
                None => (body, 1),
            };
            pairs.push((var.parse::<usize>().map_err(|_| bad())?, exp));
        }
        Monomial::from_pairs(nvars, &pairs)
    }

    /// Formats with caller-chosen variable names (used for polarized rings).
    pub fn display_with(&self, name: impl Fn(usize) -> String) -> String {
        let factors: Vec<String> = self
            .support()
            .map(|v| match self.exponent(v) {
                1 => name(v),
                e => format!("{}^{e}", name(v)),
            })
            .collect();
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|v| format!("X{v}")))
    }
}

struct ExponentMap<'a>(&'a Monomial);

impl Serialize for ExponentMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        for v in self.0.support() {
            map.serialize_entry(&v.to_string(), &self.0.exponent(v))?;
        }
        map.end()
    }
}

/// `{"exps": {"3": 2, "4": 2}}`
impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Monomial", 1)?;
        st.serialize_field("exps", &ExponentMap(self))?;
        st.end()
    }
}

/// A monomial ideal held as its minimal generating set.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    #[serde(skip)]
    nvars: usize,
    #[serde(rename = "generators")]
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    /// Equivalent to [`minimalize`].
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Largest exponent of `X{var}` among the generators.
    pub fn max_exponent(&self, var: usize) -> u64 {
        self.gens.iter().map(|g| g.exponent(var)).max().unwrap_or(0)
    }

    pub(crate) fn from_minimal_unchecked(nvars: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { nvars, gens }
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if inner == "0" || inner.is_empty() {
            return Ok(MonomialIdeal::zero(nvars));
        }
        let gens = inner
            .split(',')
            .map(|g| Monomial::parse(g, nvars))
            .collect::<Result<Vec<_>>>()?;
        minimalize(nvars, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(Monomial::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Drops every monomial divisible by another one in the set.
pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    for g in &gens {
        same_context(nvars, g.nvars())?;
    }
    // After sorting by degree, a generator can only be divided by an earlier one.
    gens.sort_by_key(Monomial::degree);
    gens.dedup_by(|a, b| a == b);
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    Ok(MonomialIdeal::from_minimal_unchecked(nvars, kept))
}

pub fn contains(ideal: &MonomialIdeal, m: &Monomial) -> Result<bool> {
    same_context(ideal.nvars, m.nvars())?;
    Ok(ideal.gens.iter().any(|g| g.divides_unchecked(m)))
}

/// Minimal generators of the pairwise lcms.
pub fn intersect(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    same_context(a.nvars, b.nvars)?;
    let lcms = a
        .gens
        .iter()
        .flat_map(|g| b.gens.iter().map(move |h| g.zip_with(h, u64::max)));
    minimalize(a.nvars, lcms)
}

pub fn sum(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    same_context(a.nvars, b.nvars)?;
    minimalize(a.nvars, a.gens.iter().chain(&b.gens).cloned())
}

/// `(I : h)`, generated by `g / gcd(g, h)` over the generators `g` of `I`.
pub fn colon(ideal: &MonomialIdeal, h: &Monomial) -> Result<MonomialIdeal> {
    same_context(ideal.nvars, h.nvars())?;
    let quotients = ideal
        .gens
        .iter()
        .map(|g| g.zip_with(h, |a, b| a.saturating_sub(b)));
    minimalize(ideal.nvars, quotients)
}

/// An m-irreducible monomial ideal `(X_i^{a_i} : i ∈ support)`.
///
/// The empty map is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MIrredComponent {
    powers: BTreeMap<usize, u64>,
}

impl MIrredComponent {
    /// Exponents must be positive.
    pub fn new(powers: BTreeMap<usize, u64>) -> Self {
        assert!(
            powers.values().all(|&e| e >= 1),
            "pure powers need positive exponents"
        );
        MIrredComponent { powers }
    }

    pub fn powers(&self) -> &BTreeMap<usize, u64> {
        &self.powers
    }

    pub fn support_size(&self) -> usize {
        self.powers.len()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.powers.keys().copied()
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.powers.iter().any(|(&v, &e)| m.exponent(v) >= e)
    }

    /// Ideal containment `self ⊇ other`.
    pub fn contains_component(&self, other: &MIrredComponent) -> bool {
        other
            .powers
            .iter()
            .all(|(v, &e)| self.powers.get(v).is_some_and(|&mine| mine <= e))
    }

    pub fn to_ideal(&self, nvars: usize) -> Result<MonomialIdeal> {
        let gens = self
            .powers
            .iter()
            .map(|(&v, &e)| Monomial::from_pairs(nvars, &[(v, e)]))
            .collect::<Result<Vec<_>>>()?;
        minimalize(nvars, gens)
    }

    fn sort_key(&self) -> (usize, Vec<usize>, Vec<u64>) {
        (
            self.powers.len(),
            self.powers.keys().copied().collect(),
            self.powers.values().copied().collect(),
        )
    }

    fn power_strings(&self) -> Vec<String> {
        self.powers
            .iter()
            .map(|(v, e)| match e {
                1 => format!("X{v}"),
                e => format!("X{v}^{e}"),
            })
            .collect()
    }
}

/// Support size, then support, then exponents.
impl Ord for MIrredComponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for MIrredComponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MIrredComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return f.write_str("(0)");
        }
        write!(f, "({})", self.power_strings().join(", "))
    }
}

/// Sorted pure-power list, e.g. `["X1^2", "X5^2"]`.
impl Serialize for MIrredComponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.power_strings().serialize(serializer)
    }
}
