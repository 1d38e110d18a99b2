use crate::element::{Classification, Evidence};
use crate::error::{Error, Result};
use crate::rat::{format_rational, int, Rat};
use crate::subset::SubsetValue;

/// One (T, I, F) triple of subset values, as carried by a single pole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleTriple {
    pub t: SubsetValue,
    pub i: SubsetValue,
    pub f: SubsetValue,
}

impl PoleTriple {
    pub fn new(t: SubsetValue, i: SubsetValue, f: SubsetValue) -> PoleTriple {
        PoleTriple { t, i, f }
    }

    pub fn crisp(t: Rat, i: Rat, f: Rat) -> PoleTriple {
        PoleTriple {
            t: SubsetValue::point(t),
            i: SubsetValue::point(i),
            f: SubsetValue::point(f),
        }
    }

    pub fn components(&self) -> [&SubsetValue; 3] {
        [&self.t, &self.i, &self.f]
    }

    pub fn negate(&self) -> PoleTriple {
        PoleTriple {
            t: self.t.negate(),
            i: self.i.negate(),
            f: self.f.negate(),
        }
    }

    fn within(&self, lo: &Rat, hi: &Rat) -> bool {
        self.components().iter().all(|v| v.within(lo, hi))
    }
}

/// Positive, neutral, and negative (antagonist) pole memberships.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripolarElement {
    pub id: String,
    pub pos: PoleTriple,
    pub neu: PoleTriple,
    pub neg: PoleTriple,
}

impl TripolarElement {
    /// Baseline ranges: positive in [0, 1], negative in [-1, 0], neutral in [-1, 1].
    pub fn new_baseline(
        id: impl Into<String>,
        pos: PoleTriple,
        neu: PoleTriple,
        neg: PoleTriple,
    ) -> Result<TripolarElement> {
        let id = id.into();
        let (zero, one) = (int(0), int(1));
        let minus_one = int(-1);
        if !pos.within(&zero, &one) {
            return Err(Error::Invalid(format!(
                "{id}: positive pole leaves [0, 1]"
            )));
        }
        if !neg.within(&minus_one, &zero) {
            return Err(Error::Invalid(format!(
                "{id}: negative pole leaves [-1, 0]"
            )));
        }
        if !neu.within(&minus_one, &one) {
            return Err(Error::Invalid(format!(
                "{id}: neutral pole leaves [-1, 1]"
            )));
        }
        Ok(TripolarElement { id, pos, neu, neg })
    }

    /// Off variant: ranges relaxed, components may leave the baseline bands.
    pub fn new_off(
        id: impl Into<String>,
        pos: PoleTriple,
        neu: PoleTriple,
        neg: PoleTriple,
    ) -> TripolarElement {
        TripolarElement {
            id: id.into(),
            pos,
            neu,
            neg,
        }
    }

    pub fn subcomponents(&self) -> [&SubsetValue; 9] {
        [
            &self.pos.t,
            &self.pos.i,
            &self.pos.f,
            &self.neu.t,
            &self.neu.i,
            &self.neu.f,
            &self.neg.t,
            &self.neg.i,
            &self.neg.f,
        ]
    }

    pub fn evidence(&self) -> Evidence {
        polar_evidence(self.subcomponents().into_iter())
    }
}

// Polarity-aware thresholds: over-evidence above 1, under-evidence below -1.
fn polar_evidence<'a>(values: impl Iterator<Item = &'a SubsetValue>) -> Evidence {
    let one = int(1);
    let minus_one = int(-1);
    values.fold(Evidence::default(), |acc, v| {
        acc.merge(Evidence {
            over: v.has_point_gt(&one),
            under: v.has_point_lt(&minus_one),
        })
    })
}

pub fn classify_tripolar(e: &TripolarElement) -> Classification {
    e.evidence().classification()
}

/// Poles b1 < b2 < ... < bn inside (0, 1), each carrying a positive and a
/// negative triple, plus one shared neutral triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipolarElement {
    pub id: String,
    pub poles: Vec<Rat>,
    pub pos: Vec<PoleTriple>,
    pub neg: Vec<PoleTriple>,
    pub neu: PoleTriple,
}

impl MultipolarElement {
    pub fn new(
        id: impl Into<String>,
        poles: Vec<Rat>,
        pos: Vec<PoleTriple>,
        neg: Vec<PoleTriple>,
        neu: PoleTriple,
    ) -> Result<MultipolarElement> {
        let id = id.into();
        if poles.is_empty() {
            return Err(Error::BadPoles("no poles supplied".into()));
        }
        for w in poles.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::BadPoles(format!(
                    "{} >= {}",
                    format_rational(&w[0]),
                    format_rational(&w[1])
                )));
            }
        }
        if poles.first().unwrap() <= &int(0) || poles.last().unwrap() >= &int(1) {
            return Err(Error::BadPoles("poles must lie strictly inside (0, 1)".into()));
        }
        if pos.len() != poles.len() || neg.len() != poles.len() {
            return Err(Error::PoleArity(format!(
                "{} poles but {} positive and {} negative triples",
                poles.len(),
                pos.len(),
                neg.len()
            )));
        }
        Ok(MultipolarElement {
            id,
            poles,
            pos,
            neg,
            neu,
        })
    }

    pub fn evidence(&self) -> Evidence {
        polar_evidence(
            self.pos
                .iter()
                .chain(self.neg.iter())
                .chain(std::iter::once(&self.neu))
                .flat_map(|t| t.components()),
        )
    }
}

pub fn classify_multipolar(e: &MultipolarElement) -> Classification {
    e.evidence().classification()
}

/// Full (100%) antagonism: negate every component of the triple.
pub fn full_antagonist(t: &PoleTriple) -> PoleTriple {
    t.negate()
}

fn check_antagonism(a: &Rat) -> Result<()> {
    if a < &int(0) || a > &int(1) {
        return Err(Error::BadDegree(format_rational(a)));
    }
    Ok(())
}

/// Projects a crisp positive triple into an antagonist pole with degree `a`:
/// (-a t, -a i, -omega_f + a (t + i)).
pub fn antagonist_projection(
    t: &Rat,
    i: &Rat,
    _f: &Rat,
    a: &Rat,
    omega_f: &Rat,
) -> Result<(Rat, Rat, Rat)> {
    check_antagonism(a)?;
    Ok((-(a * t), -(a * i), -omega_f + a * (t + i)))
}

pub fn antagonist_projection_triple(
    triple: &PoleTriple,
    a: &Rat,
    omega_f: &Rat,
) -> Result<PoleTriple> {
    let t = triple
        .t
        .as_crisp()
        .ok_or_else(|| Error::NonCrisp(triple.t.to_string()))?;
    let i = triple
        .i
        .as_crisp()
        .ok_or_else(|| Error::NonCrisp(triple.i.to_string()))?;
    let f = triple
        .f
        .as_crisp()
        .ok_or_else(|| Error::NonCrisp(triple.f.to_string()))?;
    let (nt, ni, nf) = antagonist_projection(t, i, f, a, omega_f)?;
    Ok(PoleTriple::crisp(nt, ni, nf))
}

/// Builds a tripolar element from a crisp positive membership: the negative
/// pole by antagonist projection, the neutral pole by `neutral` (default
/// (0, 0, omega_f), the "not affected" convention).
pub fn tripolar_from_enrollment(
    id: impl Into<String>,
    positive: &PoleTriple,
    a: &Rat,
    omega_f: &Rat,
    neutral: Option<PoleTriple>,
) -> Result<TripolarElement> {
    let neg = antagonist_projection_triple(positive, a, omega_f)?;
    let neu = neutral
        .unwrap_or_else(|| PoleTriple::crisp(int(0), int(0), omega_f.clone()));
    Ok(TripolarElement::new_off(id, positive.clone(), neu, neg))
}

/// Multipolar analogue: one negative triple per pole degree.
pub fn multipolar_from_enrollment(
    id: impl Into<String>,
    positive: &PoleTriple,
    poles: &[(Rat, Rat)],
    omega_f: &Rat,
    neutral: Option<PoleTriple>,
) -> Result<MultipolarElement> {
    let pole_positions: Vec<Rat> = poles.iter().map(|(b, _)| b.clone()).collect();
    let neg: Vec<PoleTriple> = poles
        .iter()
        .map(|(_, a)| antagonist_projection_triple(positive, a, omega_f))
        .collect::<Result<_>>()?;
    let pos = vec![positive.clone(); poles.len()];
    let neu = neutral
        .unwrap_or_else(|| PoleTriple::crisp(int(0), int(0), omega_f.clone()));
    MultipolarElement::new(id, pole_positions, pos, neg, neu)
}
