//! Ordinal labelings witnessing `K ~ top + 1`.
//!
//! Pieces of a union and annuli of an omega piece are labeled as consecutive
//! blocks: block `n` starts at the sum of the order types of blocks `0..n`,
//! and an apex gets the supremum of those partial sums. When every block is
//! infinite this is the offset `sum_{k<n} tau_k + 1` used for annuli.

use serde::Serialize;

use crate::compactum::{Address, Compactum, Piece, Tail};
use crate::error::Result;
use crate::ordinal::{Ordinal, Split};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelEntry {
    pub address: Address,
    pub label: Ordinal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Labeling {
    /// Sorted by address.
    pub entries: Vec<LabelEntry>,
    /// Label of the last point of the untruncated space.
    pub top: Ordinal,
}

impl Labeling {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("labeling serializes")
    }
}

/// Order type of `k` as a well-ordered subset of the line: 0 when empty,
/// otherwise `top + 1`.
pub fn order_type(k: &Compactum) -> Ordinal {
    k.pieces
        .iter()
        .fold(Ordinal::zero(), |acc, p| &acc + &piece_order_type(p))
}

fn piece_order_type(p: &Piece) -> Ordinal {
    match p {
        Piece::Atom => Ordinal::one(),
        Piece::Omega { prefix, tail } => {
            let head = prefix
                .iter()
                .fold(Ordinal::zero(), |acc, c| &acc + &order_type(c));
            (&head + &tail_sum(tail)).successor()
        }
    }
}

/// Sum of the order types of all tail annuli.
fn tail_sum(tail: &Tail) -> Ordinal {
    match tail {
        Tail::None => Ordinal::zero(),
        // w copies of a block whose leading exponent is e sum to w^(e+1)
        Tail::Const { body } => {
            let block = order_type(body);
            let e = block.leading_exponent().cloned().unwrap_or_default();
            Ordinal::omega_pow(&e.successor())
        }
        // blocks w^(lambda[n]) + 1 are cofinal in w^lambda
        Tail::Fund { lambda } => Ordinal::omega_pow(lambda),
    }
}

/// Labels the points of `k.truncate(depth)` with their positions in the order
/// type of the full space.
pub fn homeo_labels(k: &Compactum, depth: usize) -> Result<Labeling> {
    k.check()?;
    let mut entries = Vec::new();
    let total = label_union(k, depth, &Ordinal::zero(), &Address::default(), &mut entries);
    let top = match total.split() {
        Split::Successor(t) => t,
        _ => Ordinal::zero(),
    };
    Ok(Labeling { entries, top })
}

fn label_union(
    k: &Compactum,
    depth: usize,
    offset: &Ordinal,
    base: &Address,
    out: &mut Vec<LabelEntry>,
) -> Ordinal {
    let mut acc = Ordinal::zero();
    for (i, p) in k.pieces.iter().enumerate() {
        let start = offset + &acc;
        let t = label_piece(p, depth, &start, &base.with(&[i]), out);
        acc = &acc + &t;
    }
    acc
}

fn label_piece(
    p: &Piece,
    depth: usize,
    offset: &Ordinal,
    here: &Address,
    out: &mut Vec<LabelEntry>,
) -> Ordinal {
    let slot = out.len();
    out.push(LabelEntry {
        address: here.clone(),
        label: offset.clone(),
    });
    let Piece::Omega { prefix, tail } = p else {
        return Ordinal::one();
    };
    let len = match tail {
        Tail::None => prefix.len(),
        _ => prefix.len().max(depth),
    };
    let mut acc = Ordinal::zero();
    let mut head = Ordinal::zero();
    for n in 0..len {
        let content = p.annulus(n).expect("omega piece");
        let start = offset + &acc;
        let t = label_union(&content, depth, &start, &here.with(&[n]), out);
        acc = &acc + &t;
        if n < prefix.len() {
            head = acc.clone();
        }
    }
    let sup = &head + &tail_sum(tail);
    let apex = offset + &sup;
    out[slot].label = apex;
    sup.successor()
}
