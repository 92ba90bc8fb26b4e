//! Finite descriptions of compact countable point sets.
//!
//! A [`Compactum`] is a disjoint union of [`Piece`]s. A piece is either an
//! isolated point or an apex with a sequence of annuli converging to it;
//! annulus `n` holds `prefix[n]` for `n < prefix.len()` and is generated
//! by the [`Tail`] afterwards.

mod embed;

use std::borrow::Cow;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordinal::{Ordinal, Split};

pub use embed::{embed, EmbeddedPoint, Embedding};

/// Path to a point: `[piece, (annulus, piece)*]`. The last index names an
/// atom or the apex of an omega piece.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Address(pub Vec<usize>);

impl Address {
    /// Number of annuli entered on the way to the point.
    pub fn depth(&self) -> usize {
        self.0.len() / 2
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub(crate) fn with(&self, idx: &[usize]) -> Address {
        let mut v = self.0.clone();
        v.extend_from_slice(idx);
        Address(v)
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join("."))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Compactum {
    pub pieces: Vec<Piece>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Piece {
    Atom,
    Omega { prefix: Vec<Compactum>, tail: Tail },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Tail {
    None,
    Const { body: Box<Compactum> },
    Fund { lambda: Ordinal },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    ConstTailEmpty,
    FundRequiresLimit(Ordinal),
    DegenerateOmega,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: String,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ViolationKind::ConstTailEmpty => write!(f, "Const tail empty")?,
            ViolationKind::FundRequiresLimit(l) => write!(f, "Fund requires limit (got {l})")?,
            ViolationKind::DegenerateOmega => write!(f, "Omega without annuli must be Atom")?,
        }
        write!(f, " at {}", if self.path.is_empty() { "root" } else { &self.path })
    }
}

impl Piece {
    /// Omega constructor that collapses an apex with no annuli to an atom.
    pub fn omega(prefix: Vec<Compactum>, tail: Tail) -> Piece {
        if matches!(tail, Tail::None) && prefix.iter().all(Compactum::is_empty) {
            Piece::Atom
        } else {
            Piece::Omega { prefix, tail }
        }
    }

    /// Content of annulus `n` of an omega piece; `None` for atoms.
    pub fn annulus(&self, n: usize) -> Option<Cow<'_, Compactum>> {
        let Piece::Omega { prefix, tail } = self else {
            return None;
        };
        if let Some(c) = prefix.get(n) {
            return Some(Cow::Borrowed(c));
        }
        Some(match tail {
            Tail::None => Cow::Owned(Compactum::empty()),
            Tail::Const { body } => Cow::Borrowed(body.as_ref()),
            Tail::Fund { lambda } => {
                let beta = lambda.fundamental(n as u64).expect("Fund tail holds a limit");
                Cow::Owned(Compactum::canonical(&beta, 1))
            }
        })
    }
}

impl Compactum {
    pub fn empty() -> Self {
        Compactum { pieces: Vec::new() }
    }

    pub fn atoms(n: usize) -> Self {
        Compactum {
            pieces: vec![Piece::Atom; n],
        }
    }

    pub fn single(piece: Piece) -> Self {
        Compactum {
            pieces: vec![piece],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// `p` copies of the standard space with characteristic `(alpha, 1)`.
    pub fn canonical(alpha: &Ordinal, p: usize) -> Self {
        let piece = match alpha.split() {
            Split::Zero => Piece::Atom,
            Split::Successor(beta) => Piece::Omega {
                prefix: Vec::new(),
                tail: Tail::Const {
                    body: Box::new(Compactum::canonical(&beta, 1)),
                },
            },
            Split::Limit => Piece::Omega {
                prefix: Vec::new(),
                tail: Tail::Fund {
                    lambda: alpha.clone(),
                },
            },
        };
        Compactum {
            pieces: vec![piece; p],
        }
    }

    /// Disjoint union; pieces of `self` come first.
    pub fn union(&self, other: &Compactum) -> Compactum {
        let mut pieces = self.pieces.clone();
        pieces.extend(other.pieces.iter().cloned());
        Compactum { pieces }
    }

    /// True when no tail anywhere is infinite, i.e. the set is finite.
    pub fn is_finite(&self) -> bool {
        self.pieces.iter().all(|p| match p {
            Piece::Atom => true,
            Piece::Omega { prefix, tail } => {
                matches!(tail, Tail::None) && prefix.iter().all(Compactum::is_finite)
            }
        })
    }

    pub fn has_fund(&self) -> bool {
        self.pieces.iter().any(|p| match p {
            Piece::Atom => false,
            Piece::Omega { prefix, tail } => {
                prefix.iter().any(Compactum::has_fund)
                    || match tail {
                        Tail::None => false,
                        Tail::Const { body } => body.has_fund(),
                        Tail::Fund { .. } => true,
                    }
            }
        })
    }

    /// Collapses degenerate omega pieces bottom-up.
    pub fn normalized(&self) -> Compactum {
        let pieces = self
            .pieces
            .iter()
            .map(|p| match p {
                Piece::Atom => Piece::Atom,
                Piece::Omega { prefix, tail } => {
                    let prefix = prefix.iter().map(Compactum::normalized).collect();
                    let tail = match tail {
                        Tail::Const { body } => Tail::Const {
                            body: Box::new(body.normalized()),
                        },
                        t => t.clone(),
                    };
                    Piece::omega(prefix, tail)
                }
            })
            .collect();
        Compactum { pieces }
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        validate_into(self, String::new(), &mut out);
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    pub(crate) fn check(&self) -> Result<()> {
        self.validate().map_err(Error::InvalidTree)
    }

    /// Materializes the first `max(prefix.len(), depth)` annuli of every omega
    /// piece at every level and drops the tails.
    pub fn truncate(&self, depth: usize) -> Compactum {
        let pieces = self
            .pieces
            .iter()
            .map(|p| match p {
                Piece::Atom => Piece::Atom,
                Piece::Omega { prefix, tail } => {
                    let len = match tail {
                        Tail::None => prefix.len(),
                        _ => prefix.len().max(depth),
                    };
                    let annuli = (0..len)
                        .map(|n| p.annulus(n).expect("omega").truncate(depth))
                        .collect();
                    Piece::omega(annuli, Tail::None)
                }
            })
            .collect();
        Compactum { pieces }
    }

    /// The derived set (set of limit points), computed annulus by annulus.
    pub fn derive(&self) -> Result<Compactum> {
        let mut pieces = Vec::new();
        for p in &self.pieces {
            pieces.extend(derive_piece(p)?.pieces);
        }
        Ok(Compactum { pieces })
    }

    /// Addresses of all points of a finite tree, in address order.
    pub fn points(&self) -> Result<Vec<Address>> {
        if !self.is_finite() {
            return Err(Error::NotFinite);
        }
        let mut out = Vec::new();
        collect_points(self, &Address::default(), &mut out);
        Ok(out)
    }

    /// For every point of `self.derive()?.truncate(depth)`, its address in the
    /// derived tree paired with the address of the same point in `self`.
    pub fn derived_origins(&self, depth: usize) -> Result<Vec<(Address, Address)>> {
        let mut out = Vec::new();
        trace_compactum(self, depth, &Address::default(), 0, &Address::default(), &mut out)?;
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<Compactum> {
        let k: Compactum = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Ok(k.normalized())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("compactum serializes")
    }
}

fn validate_into(k: &Compactum, path: String, out: &mut Vec<Violation>) {
    for (i, p) in k.pieces.iter().enumerate() {
        let here = if path.is_empty() {
            i.to_string()
        } else {
            format!("{path}.{i}")
        };
        let Piece::Omega { prefix, tail } = p else {
            continue;
        };
        if matches!(tail, Tail::None) && prefix.iter().all(Compactum::is_empty) {
            out.push(Violation {
                path: here.clone(),
                kind: ViolationKind::DegenerateOmega,
            });
        }
        for (n, c) in prefix.iter().enumerate() {
            validate_into(c, format!("{here}.{n}"), out);
        }
        match tail {
            Tail::None => {}
            Tail::Const { body } => {
                if body.is_empty() {
                    out.push(Violation {
                        path: here.clone(),
                        kind: ViolationKind::ConstTailEmpty,
                    });
                }
                validate_into(body, format!("{here}.tail"), out);
            }
            Tail::Fund { lambda } => {
                if !lambda.is_limit() {
                    out.push(Violation {
                        path: here.clone(),
                        kind: ViolationKind::FundRequiresLimit(lambda.clone()),
                    });
                }
            }
        }
    }
}

fn derive_piece(p: &Piece) -> Result<Compactum> {
    let Piece::Omega { prefix, tail } = p else {
        return Ok(Compactum::empty());
    };
    let prefix = prefix
        .iter()
        .map(Compactum::derive)
        .collect::<Result<Vec<_>>>()?;
    match tail {
        Tail::Fund { .. } => Err(Error::UnsupportedSchematic),
        Tail::Const { body } => {
            let body = body.derive()?;
            let tail = if body.is_empty() {
                Tail::None
            } else {
                Tail::Const {
                    body: Box::new(body),
                }
            };
            Ok(Compactum::single(Piece::omega(prefix, tail)))
        }
        // finitely many annuli: the apex is isolated
        Tail::None => Ok(Compactum {
            pieces: prefix.into_iter().flat_map(|c| c.pieces).collect(),
        }),
    }
}

fn collect_points(k: &Compactum, base: &Address, out: &mut Vec<Address>) {
    for (i, p) in k.pieces.iter().enumerate() {
        out.push(base.with(&[i]));
        if let Piece::Omega { prefix, .. } = p {
            for (n, c) in prefix.iter().enumerate() {
                collect_points(c, &base.with(&[i, n]), out);
            }
        }
    }
}

/// Walks `k` emitting the points of `truncate(derive(k), depth)` without
/// building the derived tree. `next` is the derived piece index to assign
/// first; returns the index after the last one used.
fn trace_compactum(
    k: &Compactum,
    depth: usize,
    dbase: &Address,
    mut next: usize,
    obase: &Address,
    out: &mut Vec<(Address, Address)>,
) -> Result<usize> {
    for (i, p) in k.pieces.iter().enumerate() {
        let Piece::Omega { prefix, tail } = p else {
            continue;
        };
        match tail {
            Tail::Fund { .. } => return Err(Error::UnsupportedSchematic),
            Tail::None => {
                for (n, c) in prefix.iter().enumerate() {
                    next = trace_compactum(c, depth, dbase, next, &obase.with(&[i, n]), out)?;
                }
            }
            Tail::Const { body } => {
                let dhere = dbase.with(&[next]);
                out.push((dhere.clone(), obase.with(&[i])));
                let len = if body.is_finite() {
                    prefix.len()
                } else {
                    prefix.len().max(depth)
                };
                for n in 0..len {
                    let content = prefix.get(n).unwrap_or(body.as_ref());
                    trace_compactum(content, depth, &dhere.with(&[n]), 0, &obase.with(&[i, n]), out)?;
                }
                next += 1;
            }
        }
    }
    Ok(next)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn omega(prefix: Vec<Compactum>, tail: Tail) -> Compactum {
        Compactum::single(Piece::Omega { prefix, tail })
    }

    fn konst(c: Compactum) -> Tail {
        Tail::Const { body: Box::new(c) }
    }

    #[test]
    fn canonical_shapes() {
        assert_eq!(Compactum::canonical(&o("0"), 3), Compactum::atoms(3));
        assert_eq!(
            Compactum::canonical(&o("1"), 1),
            omega(vec![], konst(Compactum::atoms(1)))
        );
        assert_eq!(
            Compactum::canonical(&o("w"), 1),
            omega(vec![], Tail::Fund { lambda: o("w") })
        );
        assert!(Compactum::canonical(&o("w^2"), 0).is_empty());
    }

    #[test]
    fn fund_annulus_holds_canonical_of_fundamental_sequence() {
        let k = Compactum::canonical(&o("w"), 1);
        for n in 0..5 {
            let a = k.pieces[0].annulus(n).unwrap();
            assert_eq!(*a, Compactum::canonical(&Ordinal::from(n as u64), 1));
        }
    }

    #[test]
    fn derive_examples() {
        let d = Compactum::canonical(&o("1"), 1).derive().unwrap();
        assert_eq!(d, Compactum::atoms(1));
        assert!(Compactum::atoms(3).derive().unwrap().is_empty());
        let d2 = Compactum::canonical(&o("2"), 1).derive().unwrap();
        assert_eq!(d2, Compactum::canonical(&o("1"), 1));
    }

    #[test]
    fn derive_drops_isolated_apex() {
        // apex with two finite annuli is isolated; the annuli's limit points remain
        let k = omega(
            vec![Compactum::canonical(&o("1"), 1), Compactum::atoms(2)],
            Tail::None,
        );
        assert_eq!(k.derive().unwrap(), Compactum::atoms(1));
    }

    #[test]
    fn derive_rejects_fund() {
        let k = Compactum::canonical(&o("w"), 1);
        assert_eq!(k.derive(), Err(Error::UnsupportedSchematic));
        let nested = omega(vec![], konst(Compactum::canonical(&o("w"), 1)));
        assert_eq!(nested.derive(), Err(Error::UnsupportedSchematic));
    }

    #[test]
    fn union_concatenates() {
        let k = Compactum::canonical(&o("1"), 1);
        assert_eq!(Compactum::empty().union(&k), k);
        assert_eq!(k.union(&k), Compactum::canonical(&o("1"), 2));
    }

    #[test]
    fn truncate_examples() {
        assert_eq!(Compactum::atoms(1).truncate(7), Compactum::atoms(1));
        let t = Compactum::canonical(&o("1"), 1).truncate(3);
        assert_eq!(t, omega(vec![Compactum::atoms(1); 3], Tail::None));
        assert_eq!(t.points().unwrap().len(), 4);

        let t = Compactum::canonical(&o("w"), 1).truncate(2);
        let expected = omega(
            vec![
                Compactum::canonical(&o("0"), 1).truncate(2),
                Compactum::canonical(&o("1"), 1).truncate(2),
            ],
            Tail::None,
        );
        assert_eq!(t, expected);
        assert!(t.is_finite());
    }

    #[test]
    fn truncate_at_zero_collapses_apex() {
        assert_eq!(Compactum::canonical(&o("3"), 2).truncate(0), Compactum::atoms(2));
    }

    #[test]
    fn validate_examples() {
        assert!(Compactum::atoms(1).validate().is_ok());
        let bad = omega(vec![], konst(Compactum::empty()));
        let v = bad.validate().unwrap_err();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::ConstTailEmpty);
        assert!(v[0].to_string().starts_with("Const tail empty"));

        let bad = omega(vec![], Tail::Fund { lambda: o("w+1") });
        let v = bad.validate().unwrap_err();
        assert!(v[0].to_string().starts_with("Fund requires limit"));

        let bad = omega(vec![Compactum::empty()], Tail::None);
        assert_eq!(bad.validate().unwrap_err()[0].kind, ViolationKind::DegenerateOmega);
        assert_eq!(bad.normalized(), Compactum::atoms(1));
    }

    #[test]
    fn validate_reports_every_violation() {
        let k = omega(
            vec![omega(vec![], konst(Compactum::empty()))],
            Tail::Fund { lambda: o("3") },
        );
        assert_eq!(k.validate().unwrap_err().len(), 2);
    }

    #[test]
    fn json_schema() {
        let k = Compactum::canonical(&o("w+1"), 1).union(&Compactum::atoms(1));
        let text = k.to_json();
        assert_eq!(
            text,
            r#"{"pieces":[{"kind":"omega","prefix":[],"tail":{"kind":"const","body":{"pieces":[{"kind":"omega","prefix":[],"tail":{"kind":"fund","lambda":"w"}}]}}},{"kind":"atom"}]}"#
        );
        assert_eq!(Compactum::from_json(&text).unwrap(), k);
        let raw = r#"{"pieces":[{"kind":"omega","prefix":[],"tail":{"kind":"none"}}]}"#;
        assert_eq!(Compactum::from_json(raw).unwrap(), Compactum::atoms(1));
        assert!(matches!(Compactum::from_json("{"), Err(Error::Json(_))));
    }

    #[test]
    fn derived_origins_match_derived_tree() {
        let trees = [
            Compactum::canonical(&o("2"), 2),
            Compactum::atoms(2).union(&Compactum::canonical(&o("1"), 1)),
            omega(
                vec![Compactum::canonical(&o("1"), 2), Compactum::atoms(1)],
                Tail::None,
            ),
            omega(
                vec![Compactum::canonical(&o("2"), 1)],
                konst(Compactum::canonical(&o("1"), 1)),
            ),
        ];
        for k in trees {
            for d in 0..4 {
                let traced: Vec<Address> = k
                    .derived_origins(d)
                    .unwrap()
                    .into_iter()
                    .map(|(a, _)| a)
                    .collect();
                let mut sorted = traced.clone();
                sorted.sort();
                let direct = k.derive().unwrap().truncate(d).points().unwrap();
                assert_eq!(sorted, direct, "tree {k:?} depth {d}");
            }
        }
    }

    #[test]
    fn derived_origin_of_collapsed_apex() {
        let k = omega(
            vec![omega(vec![], konst(Compactum::atoms(1)))],
            Tail::None,
        );
        let origins = k.derived_origins(3).unwrap();
        assert_eq!(origins, vec![(Address(vec![0]), Address(vec![0, 0, 0]))]);
    }
}
