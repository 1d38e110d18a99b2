use crate::error::{Error, Result};
use crate::rat::{format_rational, Rat};

/// One interval of a subset value. `lo == hi` only for a crisp point (both closed).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Piece {
    pub lo: Rat,
    pub lo_open: bool,
    pub hi: Rat,
    pub hi_open: bool,
}

impl Piece {
    pub fn new(lo: Rat, lo_open: bool, hi: Rat, hi_open: bool) -> Result<Piece> {
        if lo > hi || (lo == hi && (lo_open || hi_open)) {
            return Err(Error::BadPiece {
                lo: format_rational(&lo),
                hi: format_rational(&hi),
            });
        }
        Ok(Piece {
            lo,
            lo_open,
            hi,
            hi_open,
        })
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

/// A finite union of rational-endpoint intervals, kept in canonical form:
/// sorted, pairwise disjoint, non-mergeable. Equality is canonical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetValue {
    pieces: Vec<Piece>,
}

impl SubsetValue {
    pub fn from_pieces(pieces: Vec<Piece>) -> Result<SubsetValue> {
        if pieces.is_empty() {
            return Err(Error::EmptyValue);
        }
        Ok(SubsetValue {
            pieces: canonicalize(pieces),
        })
    }

    pub fn point(v: Rat) -> SubsetValue {
        SubsetValue {
            pieces: vec![Piece {
                lo: v.clone(),
                lo_open: false,
                hi: v,
                hi_open: false,
            }],
        }
    }

    pub fn closed(lo: Rat, hi: Rat) -> Result<SubsetValue> {
        Self::from_pieces(vec![Piece::new(lo, false, hi, false)?])
    }

    pub fn open(lo: Rat, hi: Rat) -> Result<SubsetValue> {
        Self::from_pieces(vec![Piece::new(lo, true, hi, true)?])
    }

    pub fn interval(lo: Rat, lo_open: bool, hi: Rat, hi_open: bool) -> Result<SubsetValue> {
        Self::from_pieces(vec![Piece::new(lo, lo_open, hi, hi_open)?])
    }

    /// Hesitant (finite) set of points.
    pub fn points(values: impl IntoIterator<Item = Rat>) -> Result<SubsetValue> {
        let pieces: Vec<Piece> = values
            .into_iter()
            .map(|v| Piece {
                lo: v.clone(),
                lo_open: false,
                hi: v,
                hi_open: false,
            })
            .collect();
        Self::from_pieces(pieces)
    }

    pub fn union_of(values: impl IntoIterator<Item = SubsetValue>) -> Result<SubsetValue> {
        let pieces: Vec<Piece> = values.into_iter().flat_map(|v| v.pieces).collect();
        Self::from_pieces(pieces)
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn inf(&self) -> &Rat {
        &self.pieces[0].lo
    }

    pub fn sup(&self) -> &Rat {
        &self.pieces.last().unwrap().hi
    }

    pub fn inf_attained(&self) -> bool {
        !self.pieces[0].lo_open
    }

    pub fn sup_attained(&self) -> bool {
        !self.pieces.last().unwrap().hi_open
    }

    pub fn as_crisp(&self) -> Option<&Rat> {
        match self.pieces.as_slice() {
            [p] if p.is_point() => Some(&p.lo),
            _ => None,
        }
    }

    /// Interval envelope as a single piece.
    pub fn hull(&self) -> Piece {
        Piece {
            lo: self.inf().clone(),
            lo_open: !self.inf_attained(),
            hi: self.sup().clone(),
            hi_open: !self.sup_attained(),
        }
    }

    pub fn contains_point(&self, v: &Rat) -> bool {
        self.pieces.iter().any(|p| {
            (v > &p.lo || (v == &p.lo && !p.lo_open)) && (v < &p.hi || (v == &p.hi && !p.hi_open))
        })
    }

    /// Is there a point strictly greater than `c`?
    pub fn has_point_gt(&self, c: &Rat) -> bool {
        self.pieces.iter().any(|p| &p.hi > c)
    }

    /// Is there a point strictly less than `c`?
    pub fn has_point_lt(&self, c: &Rat) -> bool {
        self.pieces.iter().any(|p| &p.lo < c)
    }

    /// Is every point >= `c`?
    pub fn all_points_ge(&self, c: &Rat) -> bool {
        self.inf() >= c
    }

    /// Is every point <= `c`?
    pub fn all_points_le(&self, c: &Rat) -> bool {
        self.sup() <= c
    }

    /// Whole value lies within the closed range [lo, hi].
    pub fn within(&self, lo: &Rat, hi: &Rat) -> bool {
        self.inf() >= lo && self.sup() <= hi
    }

    /// Pointwise image under x -> sum - x (endpoints swap, openness flags follow).
    pub fn reflect(&self, sum: &Rat) -> SubsetValue {
        let mut pieces: Vec<Piece> = self
            .pieces
            .iter()
            .map(|p| Piece {
                lo: sum - &p.hi,
                lo_open: p.hi_open,
                hi: sum - &p.lo,
                hi_open: p.lo_open,
            })
            .collect();
        pieces.reverse();
        SubsetValue { pieces }
    }

    /// Pointwise negation.
    pub fn negate(&self) -> SubsetValue {
        self.reflect(&Rat::from_integer(0.into()))
    }
}

impl std::fmt::Display for SubsetValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(v) = self.as_crisp() {
            return write!(f, "{}", format_rational(v));
        }
        if self.pieces.iter().all(|p| p.is_point()) {
            let inner: Vec<String> = self
                .pieces
                .iter()
                .map(|p| format_rational(&p.lo))
                .collect();
            return write!(f, "{{{}}}", inner.join(", "));
        }
        let rendered: Vec<String> = self
            .pieces
            .iter()
            .map(|p| {
                if p.is_point() {
                    format!("{{{}}}", format_rational(&p.lo))
                } else {
                    format!(
                        "{}{}, {}{}",
                        if p.lo_open { "(" } else { "[" },
                        format_rational(&p.lo),
                        format_rational(&p.hi),
                        if p.hi_open { ")" } else { "]" },
                    )
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" u "))
    }
}

fn canonicalize(mut pieces: Vec<Piece>) -> Vec<Piece> {
    pieces.sort_by(|a, b| {
        a.lo.cmp(&b.lo)
            .then_with(|| a.lo_open.cmp(&b.lo_open))
            .then_with(|| a.hi.cmp(&b.hi))
    });
    let mut out: Vec<Piece> = Vec::with_capacity(pieces.len());
    for p in pieces {
        match out.last_mut() {
            Some(prev) if mergeable(prev, &p) => {
                if p.hi > prev.hi {
                    prev.hi = p.hi;
                    prev.hi_open = p.hi_open;
                } else if p.hi == prev.hi && !p.hi_open {
                    prev.hi_open = false;
                }
            }
            _ => out.push(p),
        }
    }
    out
}

fn mergeable(a: &Piece, b: &Piece) -> bool {
    debug_assert!(a.lo <= b.lo);
    // Overlap, or touching with at least one closed endpoint at the junction.
    b.lo < a.hi || (b.lo == a.hi && !(a.hi_open && b.lo_open))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int, parse_rational};

    fn r(s: &str) -> Rat {
        parse_rational(s).unwrap()
    }

    #[test]
    fn merges_overlapping_and_touching() {
        let v = SubsetValue::from_pieces(vec![
            Piece::new(int(0), false, int(1), true).unwrap(),
            Piece::new(int(1), false, int(2), false).unwrap(),
        ])
        .unwrap();
        assert_eq!(v, SubsetValue::closed(int(0), int(2)).unwrap());

        let w = SubsetValue::from_pieces(vec![
            Piece::new(int(0), true, int(1), true).unwrap(),
            Piece::new(int(1), true, int(2), true).unwrap(),
        ])
        .unwrap();
        assert_eq!(w.pieces().len(), 2);
    }

    #[test]
    fn point_plugs_a_gap() {
        let v = SubsetValue::from_pieces(vec![
            Piece::new(int(0), true, int(1), true).unwrap(),
            Piece::new(int(1), false, int(1), false).unwrap(),
            Piece::new(int(1), true, int(2), true).unwrap(),
        ])
        .unwrap();
        assert_eq!(v, SubsetValue::open(int(0), int(2)).unwrap());
    }

    #[test]
    fn rejects_empty_and_bad_pieces() {
        assert_eq!(SubsetValue::from_pieces(vec![]), Err(Error::EmptyValue));
        assert!(SubsetValue::open(int(1), int(1)).is_err());
        assert!(SubsetValue::closed(int(2), int(1)).is_err());
    }

    #[test]
    fn evidence_predicates_honor_openness() {
        let closed_above = SubsetValue::closed(int(1), r("1.4")).unwrap();
        assert!(closed_above.all_points_ge(&int(1)));
        assert!(closed_above.has_point_gt(&int(1)));

        let open_below = SubsetValue::open(r("-0.8"), int(0)).unwrap();
        assert!(open_below.all_points_le(&int(0)));
        assert!(open_below.has_point_lt(&int(0)));

        let straddles = SubsetValue::closed(r("-0.2"), r("0.2")).unwrap();
        assert!(straddles.has_point_lt(&int(0)));
        assert!(!straddles.all_points_le(&int(0)));
    }

    #[test]
    fn reflect_swaps_endpoints_and_flags() {
        let v = SubsetValue::interval(r("0.1"), true, r("0.4"), false).unwrap();
        let w = v.reflect(&int(0));
        assert_eq!(
            w,
            SubsetValue::interval(r("-0.4"), false, r("-0.1"), true).unwrap()
        );
        assert_eq!(w.reflect(&int(0)), v);
    }

    #[test]
    fn hull_envelopes() {
        let v = SubsetValue::union_of([
            SubsetValue::point(frac(1, 10)),
            SubsetValue::open(r("0.5"), r("0.7")).unwrap(),
        ])
        .unwrap();
        let h = v.hull();
        assert_eq!(h.lo, frac(1, 10));
        assert!(!h.lo_open);
        assert_eq!(h.hi, frac(7, 10));
        assert!(h.hi_open);
    }

    #[test]
    fn display_forms() {
        assert_eq!(SubsetValue::point(r("1.2")).to_string(), "1.2");
        assert_eq!(
            SubsetValue::points([r("0.1"), r("0.2")]).unwrap().to_string(),
            "{0.1, 0.2}"
        );
        assert_eq!(
            SubsetValue::open(r("-0.8"), int(0)).unwrap().to_string(),
            "(-0.8, 0)"
        );
    }
}
