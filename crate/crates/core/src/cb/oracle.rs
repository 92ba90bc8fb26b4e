//! Metric cross-check of the structural derivative.
//!
//! The structural derivative is compared against the scale-`eps` derived set
//! of an embedded truncation. A single `eps` cannot classify points at every
//! scale, so the comparison is restricted to *resolved* points: those whose
//! isolation gap in the embedding is at least `(b - a) / 2^(d+1)`. On that set
//! the scale-`eps` test is exact with `eps = (b - a) / 2^(d+2)` and the
//! depth-`(d+1)` truncation:
//!
//! - an atom in a slot of width `w` has no other point within `w / 4`;
//! - an apex with finitely many annuli, the last nonempty one being `n`, has
//!   no other point within `w / 2^(n+2)`;
//! - an apex with infinitely many annuli has a point of annulus `d` at
//!   distance `w / 2^(d+2) <= eps`.

use std::collections::BTreeSet;
use std::ops::Sub;

use crate::compactum::{embed, Address, Compactum, Piece, Tail};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

/// `{x in points : exists y != x in points with |x - y| <= eps}`.
pub fn eps_derived<T>(points: &BTreeSet<T>, eps: &T) -> BTreeSet<T>
where
    T: Ord + Clone,
    for<'a> &'a T: Sub<&'a T, Output = T>,
{
    let sorted: Vec<&T> = points.iter().collect();
    let mut out = BTreeSet::new();
    for (i, &x) in sorted.iter().enumerate() {
        let near_left = i > 0 && &(x - sorted[i - 1]) <= eps;
        let near_right = i + 1 < sorted.len() && &(sorted[i + 1] - x) <= eps;
        if near_left || near_right {
            out.insert(x.clone());
        }
    }
    out
}

/// `(b - a) / 2^(depth + 2)`.
pub fn oracle_epsilon(a: &Dyadic, b: &Dyadic, depth: usize) -> Dyadic {
    (b - a).shr(depth as u32 + 2)
}

/// Addresses of `k.truncate(depth + 1)` whose isolation scale is resolved by
/// [`oracle_epsilon`]. Requires a tree without fundamental-sequence tails.
pub fn resolved_addresses(k: &Compactum, depth: usize) -> Result<BTreeSet<Address>> {
    let mut out = BTreeSet::new();
    resolve_union(k, 0, depth, &Address::default(), &mut out)?;
    Ok(out)
}

/// `level` is the binary log of `(b - a) / width` for the interval holding `k`.
fn resolve_union(
    k: &Compactum,
    level: usize,
    depth: usize,
    base: &Address,
    out: &mut BTreeSet<Address>,
) -> Result<()> {
    if k.pieces.is_empty() {
        return Ok(());
    }
    let slot_level = level + k.pieces.len().next_power_of_two().trailing_zeros() as usize;
    // every point of a slot has isolation level >= slot level + 2
    if slot_level + 2 > depth + 1 {
        return Ok(());
    }
    for (i, p) in k.pieces.iter().enumerate() {
        let here = base.with(&[i]);
        let sep = match p {
            Piece::Atom => slot_level + 2,
            Piece::Omega { prefix, tail } => match tail {
                Tail::Fund { .. } => return Err(Error::UnsupportedSchematic),
                Tail::Const { .. } => slot_level + 2,
                Tail::None => {
                    let last = prefix.iter().rposition(|c| !c.is_empty()).unwrap_or(0);
                    slot_level + last + 2
                }
            },
        };
        if sep <= depth + 1 {
            out.insert(here.clone());
        }
        if let Piece::Omega { prefix, tail } = p {
            let len = match tail {
                Tail::None => prefix.len(),
                _ => prefix.len().max(depth + 1),
            };
            for n in 0..len {
                let content = p.annulus(n).expect("omega piece");
                resolve_union(&content, slot_level + n + 2, depth, &here.with(&[n]), out)?;
            }
        }
    }
    Ok(())
}

/// Both sides of the derivative comparison, as sets of embedded values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativeCheck {
    /// Resolved points of the depth-`(d+1)` embedding that the scale-`eps` test flags.
    pub metric: BTreeSet<Dyadic>,
    /// Resolved points that are images of `k.derive()?.truncate(d)`.
    pub structural: BTreeSet<Dyadic>,
    pub resolved: usize,
    /// Derived points whose origin is missing from the depth-`(d+1)` embedding.
    pub unmatched: usize,
}

impl DerivativeCheck {
    pub fn agrees(&self) -> bool {
        self.metric == self.structural && self.unmatched == 0
    }
}

/// Compares the scale-`eps` derived set of `embed(k.truncate(d + 1))` with the
/// structural derivative, both restricted to [`resolved_addresses`].
pub fn metric_derivative_check(
    k: &Compactum,
    depth: usize,
    a: &Dyadic,
    b: &Dyadic,
) -> Result<DerivativeCheck> {
    k.check()?;
    let emb = embed(&k.truncate(depth + 1), a, b)?;
    let resolved = resolved_addresses(k, depth)?;
    let values: BTreeSet<Dyadic> = emb.values().cloned().collect();
    let eps = oracle_epsilon(a, b, depth);
    let flagged = eps_derived(&values, &eps);

    let metric = resolved
        .iter()
        .filter_map(|addr| emb.value_of(addr))
        .filter(|v| flagged.contains(*v))
        .cloned()
        .collect();

    let mut structural = BTreeSet::new();
    let mut unmatched = 0;
    for (_, origin) in k.derived_origins(depth)? {
        match emb.value_of(&origin) {
            None => unmatched += 1,
            Some(v) if resolved.contains(&origin) => {
                structural.insert(v.clone());
            }
            Some(_) => {}
        }
    }
    Ok(DerivativeCheck {
        metric,
        structural,
        resolved: resolved.len(),
        unmatched,
    })
}
