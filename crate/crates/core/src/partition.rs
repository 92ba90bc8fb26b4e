//! Model spaces and the partition of their compact subsets into
//! homeomorphism classes, indexed by characteristic.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cb::{cb_char, CBPair};
use crate::compactum::Compactum;
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModelSpace {
    /// `n` points at mutual distance 1.
    FiniteDiscrete(usize),
    /// The naturals with the discrete metric.
    CountableDiscrete,
    /// Dyadic rationals of an interval, the host of the embeddings.
    DyadicInterval,
    /// The reals with the discrete metric; only the carrier size differs
    /// from [`ModelSpace::CountableDiscrete`].
    UncountableDiscrete,
}

impl ModelSpace {
    pub fn is_discrete(&self) -> bool {
        !matches!(self, ModelSpace::DyadicInterval)
    }

    /// Number of classes. For `FiniteDiscrete(n)` the sizes `0..=n` give
    /// `n + 1` classes, one more than the figure `n` in the paper.
    pub fn total(&self) -> ClassTotal {
        match self {
            ModelSpace::FiniteDiscrete(n) => ClassTotal::Finite(n + 1),
            ModelSpace::CountableDiscrete | ModelSpace::UncountableDiscrete => {
                ClassTotal::CountablyInfinite
            }
            ModelSpace::DyadicInterval => ClassTotal::Aleph1,
        }
    }
}

impl fmt::Display for ModelSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpace::FiniteDiscrete(n) => write!(f, "finite:{n}"),
            ModelSpace::CountableDiscrete => f.write_str("discrete-omega"),
            ModelSpace::DyadicInterval => f.write_str("dyadic-interval"),
            ModelSpace::UncountableDiscrete => f.write_str("discrete-uncountable"),
        }
    }
}

impl FromStr for ModelSpace {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "discrete-omega" => Ok(ModelSpace::CountableDiscrete),
            "dyadic-interval" => Ok(ModelSpace::DyadicInterval),
            "discrete-uncountable" => Ok(ModelSpace::UncountableDiscrete),
            _ => s
                .strip_prefix("finite:")
                .and_then(|n| n.parse().ok())
                .map(ModelSpace::FiniteDiscrete)
                .ok_or_else(|| format!("unknown model space '{s}'")),
        }
    }
}

/// Symbolic size of a class partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassTotal {
    Finite(usize),
    CountablyInfinite,
    Aleph1,
}

impl fmt::Display for ClassTotal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTotal::Finite(m) => write!(f, "finite:{m}"),
            ClassTotal::CountablyInfinite => f.write_str("aleph0"),
            ClassTotal::Aleph1 => f.write_str("aleph1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSummary {
    pub space: ModelSpace,
    pub realized: BTreeSet<CBPair>,
    pub total: ClassTotal,
}

impl ClassSummary {
    /// `{"space": ..., "realized": [["<ordinal>", p], ...], "total": ...}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Export {
            space: String,
            realized: Vec<(String, serde_json::Number)>,
            total: String,
        }
        let realized = self
            .realized
            .iter()
            .map(|c| {
                let count = c.count.to_string().parse().expect("integer literal");
                (c.rank.to_string(), count)
            })
            .collect();
        let export = Export {
            space: self.space.to_string(),
            realized,
            total: self.total.to_string(),
        };
        serde_json::to_string_pretty(&export).expect("summary serializes")
    }
}

/// A compact subset of `space` with characteristic `target`.
pub fn realize(space: &ModelSpace, target: &CBPair) -> Result<Compactum> {
    if !target.is_valid() {
        return Err(Error::NotRealizable(format!(
            "{target} has positive rank and no points"
        )));
    }
    if space.is_discrete() {
        if !target.rank.is_zero() {
            return Err(Error::NotRealizable(format!(
                "{target} has positive rank; compact subsets of {space} are finite"
            )));
        }
        if let ModelSpace::FiniteDiscrete(n) = space {
            if target.count > BigUint::from(*n) {
                return Err(Error::NotRealizable(format!(
                    "{target} needs more than the {n} points of {space}"
                )));
            }
        }
    }
    let p = target
        .count
        .to_usize()
        .ok_or_else(|| Error::NotRealizable(format!("{target} count is too large")))?;
    Ok(Compactum::canonical(&target.rank, p))
}

/// The characteristic of the class of `k`.
pub fn cb_tilde(k: &Compactum) -> Result<CBPair> {
    cb_char(k)
}

/// Positive ranks enumerated by [`cb_image`]: `1..=4` together with every
/// `w^a*c1 + w^b*c2 + c3` for exponents `a > b` in
/// `{0, 1, 2, 3, w, w+1, w*2, w^2}`, `c1` in `{1, 2, 3}` and `c2, c3` in
/// `{0, 1, 2, 3}`, and `w^w`, `w^w*2`, `w^(w+1)`. Sorted, without duplicates.
pub fn rank_grid() -> Vec<Ordinal> {
    let exps: Vec<Ordinal> = ["0", "1", "2", "3", "w", "w+1", "w*2", "w^2"]
        .iter()
        .map(|s| s.parse().expect("grid literal"))
        .collect();
    let mut out: BTreeSet<Ordinal> = (1..=4u64).map(Ordinal::from).collect();
    for (i, a) in exps.iter().enumerate() {
        for b in &exps[..i] {
            for c1 in 1..=3u32 {
                for c2 in 0..=3u32 {
                    for c3 in 0..=3u64 {
                        let high = Ordinal::omega_pow(a).mul_nat(&c1.into());
                        let low = Ordinal::omega_pow(b).mul_nat(&c2.into());
                        out.insert(&(&high + &low) + &Ordinal::from(c3));
                    }
                }
            }
        }
    }
    for s in ["w^w", "w^w*2", "w^(w+1)"] {
        out.insert(s.parse().expect("grid literal"));
    }
    out.into_iter().collect()
}

/// Realizable characteristics with rank at most `rank_bound` (ranks drawn
/// from `{0}` and [`rank_grid`]) and count at most `count_bound`.
pub fn cb_image(space: &ModelSpace, rank_bound: &Ordinal, count_bound: usize) -> ClassSummary {
    let mut candidates = vec![CBPair::empty()];
    let ranks = std::iter::once(Ordinal::zero())
        .chain(rank_grid())
        .filter(|r| r <= rank_bound);
    for rank in ranks {
        for p in 1..=count_bound {
            candidates.push(CBPair::new(rank.clone(), p));
        }
    }
    let realized = candidates
        .into_iter()
        .filter(|c| realize(space, c).is_ok())
        .collect();
    ClassSummary {
        space: space.clone(),
        realized,
        total: space.total(),
    }
}
