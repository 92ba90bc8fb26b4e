//! Deterministic placement of a finite tree on the dyadic line.
//!
//! Over an interval `(a, b]` of width `w`:
//! - a union of `m` pieces uses `M = m.next_power_of_two()` equal slots and
//!   fills the rightmost `m` of them in order;
//! - an atom sits at the right endpoint;
//! - an omega apex sits at the right endpoint `b` and annulus `n` occupies
//!   `(b - w/2^(n+1), b - w/2^(n+2)]`.
//!
//! Every piece's points therefore lie in the right half of its interval, and
//! annulus boundaries never coincide with an image point.

use super::{Address, Compactum, Piece};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedPoint {
    pub address: Address,
    pub value: Dyadic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub a: Dyadic,
    pub b: Dyadic,
    /// Sorted by address.
    pub points: Vec<EmbeddedPoint>,
}

struct ExportRow {
    address: Vec<usize>,
    num: String,
    den: String,
}

impl EmbeddedPoint {
    fn row(&self) -> ExportRow {
        ExportRow {
            address: self.address.0.clone(),
            num: self.value.numerator().to_string(),
            den: self.value.denominator().to_string(),
        }
    }
}

impl Embedding {
    pub fn values(&self) -> impl Iterator<Item = &Dyadic> {
        self.points.iter().map(|p| &p.value)
    }

    pub fn value_of(&self, address: &Address) -> Option<&Dyadic> {
        self.points
            .binary_search_by(|p| p.address.cmp(address))
            .ok()
            .map(|i| &self.points[i].value)
    }

    /// JSON array of `{"address": [...], "num": n, "den": d}`.
    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .points
            .iter()
            .map(|p| {
                let r = p.row();
                serde_json::json!({
                    "address": r.address,
                    "num": serde_json::Value::Number(r.num.parse().expect("integer")),
                    "den": serde_json::Value::Number(r.den.parse().expect("integer")),
                })
            })
            .collect();
        serde_json::to_string_pretty(&rows).expect("rows serialize")
    }

    /// CSV with columns `address,num,den`; addresses are dot-separated.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["address", "num", "den"]).expect("in-memory write");
        for p in &self.points {
            let r = p.row();
            w.write_record([p.address.to_string(), r.num, r.den])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

/// Embeds a finite tree into `(a, b]`.
pub fn embed(k: &Compactum, a: &Dyadic, b: &Dyadic) -> Result<Embedding> {
    if a >= b {
        return Err(Error::DegenerateInterval {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    if !k.is_finite() {
        return Err(Error::NotFinite);
    }
    let mut points = Vec::new();
    place_union(k, a, b, &Address::default(), &mut points);
    points.sort_by(|x: &EmbeddedPoint, y| x.address.cmp(&y.address));
    Ok(Embedding {
        a: a.clone(),
        b: b.clone(),
        points,
    })
}

/// Right endpoints of the slots assigned to `m` pieces over `(a, b]`, along
/// with the binary log of the slot count.
pub(crate) fn slot_rights(m: usize, b: &Dyadic, width: &Dyadic) -> (Vec<Dyadic>, u32) {
    let slots = m.next_power_of_two();
    let log = slots.trailing_zeros();
    let slot = width.shr(log);
    let rights = (0..m)
        .map(|i| b - &slot.mul_int((m - 1 - i) as i64))
        .collect();
    (rights, log)
}

fn place_union(k: &Compactum, a: &Dyadic, b: &Dyadic, base: &Address, out: &mut Vec<EmbeddedPoint>) {
    if k.pieces.is_empty() {
        return;
    }
    let width = b - a;
    let (rights, log) = slot_rights(k.pieces.len(), b, &width);
    let slot = width.shr(log);
    for (i, (p, right)) in k.pieces.iter().zip(rights).enumerate() {
        let left = &right - &slot;
        place_piece(p, &left, &right, &base.with(&[i]), out);
    }
}

fn place_piece(p: &Piece, a: &Dyadic, b: &Dyadic, here: &Address, out: &mut Vec<EmbeddedPoint>) {
    out.push(EmbeddedPoint {
        address: here.clone(),
        value: b.clone(),
    });
    if let Piece::Omega { prefix, .. } = p {
        let width = b - a;
        for (n, c) in prefix.iter().enumerate() {
            let (lo, hi) = annulus_interval(b, &width, n);
            let mut child = here.0.clone();
            child.push(n);
            place_union(c, &lo, &hi, &Address(child), out);
        }
    }
}

/// `(b - w/2^(n+1), b - w/2^(n+2)]`.
pub(crate) fn annulus_interval(b: &Dyadic, width: &Dyadic, n: usize) -> (Dyadic, Dyadic) {
    let n = n as u32;
    (b - &width.shr(n + 1), b - &width.shr(n + 2))
}
