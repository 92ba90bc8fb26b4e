//! Ordinals below epsilon-zero in Cantor normal form.
//!
//! An [`Ordinal`] is a finite list of terms `w^e * c` with strictly
//! decreasing exponents and positive coefficients; the empty list is zero.
//! Exponents are themselves ordinals, so the representation is a finite tree.

mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cb::CBPair;
use crate::error::{Error, Result};

pub use parse::parse_ordinal;

/// One Cantor normal form term `w^exponent * coefficient`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exponent: Ordinal,
    coefficient: BigUint,
}

impl Term {
    pub fn new(exponent: Ordinal, coefficient: impl Into<BigUint>) -> Self {
        Term {
            exponent,
            coefficient: coefficient.into(),
        }
    }

    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> &BigUint {
        &self.coefficient
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<Term>,
}

/// Zero / successor / limit case split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Split {
    Zero,
    Successor(Ordinal),
    Limit,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::nat(1u32)
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(&Ordinal::one())
    }

    pub fn nat(n: impl Into<BigUint>) -> Self {
        let n = n.into();
        if n.is_zero() {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![Term::new(Ordinal::zero(), n)],
            }
        }
    }

    /// `w^exponent`.
    pub fn omega_pow(exponent: &Ordinal) -> Self {
        Ordinal {
            terms: vec![Term::new(exponent.clone(), 1u32)],
        }
    }

    /// Builds an ordinal from raw terms, rejecting anything not in normal form.
    pub fn from_terms(terms: Vec<Term>) -> Option<Self> {
        let o = Ordinal { terms };
        o.is_cnf().then_some(o)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    /// The value as a natural number, if finite.
    pub fn as_natural(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exponent)
    }

    /// Checks the normal-form invariant recursively.
    pub fn is_cnf(&self) -> bool {
        self.terms.iter().all(|t| !t.coefficient.is_zero() && t.exponent.is_cnf())
            && self
                .terms
                .windows(2)
                .all(|w| w[0].exponent > w[1].exponent)
    }

    /// Nesting depth of exponents: 0 for finite ordinals, 1 for `w*3+2`, and so on.
    pub fn height(&self) -> usize {
        self.terms
            .iter()
            .map(|t| {
                if t.exponent.is_zero() {
                    0
                } else {
                    1 + t.exponent.height()
                }
            })
            .max()
            .unwrap_or(0)
    }

    pub fn mul_nat(&self, k: &BigUint) -> Ordinal {
        if k.is_zero() || self.is_zero() {
            return Ordinal::zero();
        }
        let mut terms = self.terms.clone();
        terms[0].coefficient *= k;
        Ordinal { terms }
    }

    pub fn split(&self) -> Split {
        match self.terms.last() {
            None => Split::Zero,
            Some(t) if t.exponent.is_zero() => Split::Successor(self.predecessor_unchecked()),
            Some(_) => Split::Limit,
        }
    }

    pub fn is_limit(&self) -> bool {
        matches!(self.split(), Split::Limit)
    }

    pub fn successor(&self) -> Ordinal {
        self + &Ordinal::one()
    }

    fn predecessor_unchecked(&self) -> Ordinal {
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("nonzero");
        last.coefficient -= 1u32;
        if last.coefficient.is_zero() {
            terms.pop();
        }
        Ordinal { terms }
    }

    /// Drops one copy of the last term: for `d + w^g` returns `(d, g)`.
    fn peel_last(&self) -> (Ordinal, Ordinal) {
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("nonzero");
        let gamma = last.exponent.clone();
        last.coefficient -= 1u32;
        if last.coefficient.is_zero() {
            terms.pop();
        }
        (Ordinal { terms }, gamma)
    }

    /// The standard fundamental sequence below epsilon-zero:
    /// `(d + w^(g+1))[n] = d + w^g * n` and `(d + w^g)[n] = d + w^(g[n])` for limit `g`.
    pub fn fundamental(&self, n: u64) -> Result<Ordinal> {
        if !self.is_limit() {
            return Err(Error::NotALimit(self.to_string()));
        }
        let (delta, gamma) = self.peel_last();
        let step = match gamma.split() {
            Split::Successor(g) => Ordinal::omega_pow(&g).mul_nat(&BigUint::from(n)),
            Split::Limit => Ordinal::omega_pow(&gamma.fundamental(n)?),
            Split::Zero => unreachable!("limit ordinals end in a positive exponent"),
        };
        Ok(&delta + &step)
    }
}

/// CB characteristic of the ordinal space `[0, o]` with the order topology.
pub fn ordinal_cb(o: &Ordinal) -> CBPair {
    match o.terms.first() {
        Some(t) if !t.exponent.is_zero() => CBPair::new(t.exponent.clone(), t.coefficient.clone()),
        _ => {
            let n = o.as_natural().expect("finite");
            CBPair::new(Ordinal::zero(), n + 1u32)
        }
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let c = a
                .exponent
                .cmp(&b.exponent)
                .then_with(|| a.coefficient.cmp(&b.coefficient));
            if c != Ordering::Equal {
                return c;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordinal sum. Not commutative: `1 + w == w`.
impl Add<&Ordinal> for &Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        let Some(lead) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent >= lead.exponent)
            .cloned()
            .collect();
        let mut rest = rhs.terms.iter();
        match terms.last_mut() {
            Some(t) if t.exponent == lead.exponent => {
                t.coefficient += &lead.coefficient;
                rest.next();
            }
            _ => {}
        }
        terms.extend(rest.cloned());
        Ordinal { terms }
    }
}

impl Add for Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: Ordinal) -> Ordinal {
        &self + &rhs
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

impl From<BigUint> for Ordinal {
    fn from(n: BigUint) -> Self {
        Ordinal::nat(n)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::print_ordinal(self))
    }
}

impl std::str::FromStr for Ordinal {
    type Err = crate::error::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ordinal(s)
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
