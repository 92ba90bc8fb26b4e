//! Cantor-Bendixson characteristics and the classification `K ~ w^a*p + 1`.

mod labels;
mod oracle;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::compactum::{Compactum, Piece, Tail};
use crate::error::Result;
use crate::ordinal::Ordinal;

pub use labels::{homeo_labels, order_type, LabelEntry, Labeling};
pub use oracle::{
    eps_derived, metric_derivative_check, oracle_epsilon, resolved_addresses, DerivativeCheck,
};

/// The pair `(rank, count)`: the least `rank` with a finite `rank`-th derived
/// set, and the size of that set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CBPair {
    pub rank: Ordinal,
    pub count: BigUint,
}

impl CBPair {
    pub fn new(rank: Ordinal, count: impl Into<BigUint>) -> Self {
        CBPair {
            rank,
            count: count.into(),
        }
    }

    pub fn empty() -> Self {
        CBPair::new(Ordinal::zero(), 0u32)
    }

    /// Positive rank requires a positive count.
    pub fn is_valid(&self) -> bool {
        self.rank.is_zero() || !self.count.is_zero()
    }
}

impl fmt::Display for CBPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.rank, self.count)
    }
}

pub fn cb_char(k: &Compactum) -> Result<CBPair> {
    k.check()?;
    Ok(char_of(k))
}

fn char_of(k: &Compactum) -> CBPair {
    merge(k.pieces.iter().map(piece_char))
}

/// Combines characteristics of disjoint clopen parts: the maximum rank wins
/// and counts at that rank add up.
fn merge(parts: impl IntoIterator<Item = CBPair>) -> CBPair {
    let mut acc = CBPair::empty();
    for c in parts {
        match c.rank.cmp(&acc.rank) {
            std::cmp::Ordering::Greater => acc = c,
            std::cmp::Ordering::Equal => acc.count += c.count,
            std::cmp::Ordering::Less => {}
        }
    }
    acc
}

fn piece_char(p: &Piece) -> CBPair {
    let Piece::Omega { prefix, tail } = p else {
        return CBPair::new(Ordinal::zero(), 1u32);
    };
    // the apex survives exactly up to this derivative
    let apex_rank = match tail {
        Tail::None => Ordinal::zero(),
        Tail::Const { body } => char_of(body).rank.successor(),
        Tail::Fund { lambda } => lambda.clone(),
    };
    let apex = CBPair::new(apex_rank, BigUint::one());
    merge(std::iter::once(apex).chain(prefix.iter().map(char_of)))
}

/// Order type of the space: `p` for a `p`-point set, `w^a*p + 1` otherwise.
pub fn classify(k: &Compactum) -> Result<Ordinal> {
    let c = cb_char(k)?;
    if c.rank.is_zero() {
        return Ok(Ordinal::nat(c.count));
    }
    Ok(&Ordinal::omega_pow(&c.rank).mul_nat(&c.count) + &Ordinal::one())
}

pub fn equivalent(k1: &Compactum, k2: &Compactum) -> Result<bool> {
    Ok(cb_char(k1)? == cb_char(k2)?)
}

/// Number of points of a finite tree.
pub fn point_count(k: &Compactum) -> Option<BigUint> {
    if !k.is_finite() {
        return None;
    }
    fn count(k: &Compactum) -> BigUint {
        k.pieces
            .iter()
            .map(|p| match p {
                Piece::Atom => BigUint::one(),
                Piece::Omega { prefix, .. } => {
                    BigUint::one() + prefix.iter().map(count).sum::<BigUint>()
                }
            })
            .fold(BigUint::zero(), |a, b| a + b)
    }
    Some(count(k))
}
