use crate::element::{component_evidence, Classification, Evidence};
use crate::error::{Error, Result};
use crate::frame::{Channel, ThresholdFrame};
use crate::rat::{format_rational, frac, int, Rat};
use crate::subset::SubsetValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefinedForm {
    /// p, r, s >= 1 and p + r + s >= 4.
    Neutrosophic,
    /// r = s = 0 and p >= 2.
    Fuzzy,
    /// r = 0 and p + s >= 3; sum-of-sups constraint applies inside [0, 1].
    Intuitionistic,
}

/// T, I, F split into typed subcomponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedElement {
    pub id: String,
    pub form: RefinedForm,
    pub ts: Vec<SubsetValue>,
    pub is_: Vec<SubsetValue>,
    pub fs: Vec<SubsetValue>,
}

impl RefinedElement {
    pub fn new(
        id: impl Into<String>,
        form: RefinedForm,
        ts: Vec<SubsetValue>,
        is_: Vec<SubsetValue>,
        fs: Vec<SubsetValue>,
        frame: &ThresholdFrame,
    ) -> Result<RefinedElement> {
        let id = id.into();
        let (p, r, s) = (ts.len(), is_.len(), fs.len());
        let arity_ok = match form {
            RefinedForm::Neutrosophic => p >= 1 && r >= 1 && s >= 1 && p + r + s >= 4,
            RefinedForm::Fuzzy => r == 0 && s == 0 && p >= 2,
            RefinedForm::Intuitionistic => r == 0 && p >= 1 && s >= 1 && p + s >= 3,
        };
        if !arity_ok {
            return Err(Error::ArityViolation(format!(
                "form {form:?} with p={p}, r={r}, s={s}"
            )));
        }
        for (ch, seq) in [(Channel::T, &ts), (Channel::I, &is_), (Channel::F, &fs)] {
            for (j, v) in seq.iter().enumerate() {
                if !v.within(frame.psi(ch), frame.omega(ch)) {
                    return Err(Error::OutOfFrame {
                        id: id.clone(),
                        component: format!("{}{}", ch.letter(), j + 1),
                        value: v.to_string(),
                        psi: format_rational(frame.psi(ch)),
                        omega: format_rational(frame.omega(ch)),
                    });
                }
            }
        }
        if form == RefinedForm::Intuitionistic {
            let standard = ts
                .iter()
                .chain(fs.iter())
                .all(|v| v.within(&int(0), &int(1)));
            if standard {
                let total: Rat = ts.iter().chain(fs.iter()).map(|v| v.sup().clone()).sum();
                if total > int(1) {
                    return Err(Error::IntuitionisticConstraint(format_rational(&total)));
                }
            }
        }
        Ok(RefinedElement {
            id,
            form,
            ts,
            is_,
            fs,
        })
    }

    pub fn subcomponents(&self) -> impl Iterator<Item = &SubsetValue> {
        self.ts.iter().chain(self.is_.iter()).chain(self.fs.iter())
    }

    pub fn evidence(&self) -> Evidence {
        self.subcomponents()
            .map(component_evidence)
            .fold(Evidence::default(), Evidence::merge)
    }
}

pub fn classify_refined(e: &RefinedElement) -> Classification {
    e.evidence().classification()
}

pub fn classify_refined_set(es: &[RefinedElement]) -> Result<Classification> {
    if es.is_empty() {
        return Err(Error::EmptyCollection);
    }
    Ok(es
        .iter()
        .map(RefinedElement::evidence)
        .fold(Evidence::default(), Evidence::merge)
        .classification())
}

/// Amplitude/phase component pairs; phases are unconstrained by the frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexElement {
    pub id: String,
    pub t_amp: SubsetValue,
    pub t_phase: SubsetValue,
    pub i_amp: SubsetValue,
    pub i_phase: SubsetValue,
    pub f_amp: SubsetValue,
    pub f_phase: SubsetValue,
}

impl ComplexElement {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        id: impl Into<String>,
        t_amp: SubsetValue,
        t_phase: SubsetValue,
        i_amp: SubsetValue,
        i_phase: SubsetValue,
        f_amp: SubsetValue,
        f_phase: SubsetValue,
        frame: &ThresholdFrame,
    ) -> Result<ComplexElement> {
        let id = id.into();
        for (ch, v) in [
            (Channel::T, &t_amp),
            (Channel::I, &i_amp),
            (Channel::F, &f_amp),
        ] {
            if !v.within(frame.psi(ch), frame.omega(ch)) {
                return Err(Error::OutOfFrame {
                    id: id.clone(),
                    component: format!("{} amplitude", ch.letter()),
                    value: v.to_string(),
                    psi: format_rational(frame.psi(ch)),
                    omega: format_rational(frame.omega(ch)),
                });
            }
        }
        Ok(ComplexElement {
            id,
            t_amp,
            t_phase,
            i_amp,
            i_phase,
            f_amp,
            f_phase,
        })
    }

    pub fn subcomponents(&self) -> [&SubsetValue; 6] {
        [
            &self.t_amp,
            &self.t_phase,
            &self.i_amp,
            &self.i_phase,
            &self.f_amp,
            &self.f_phase,
        ]
    }

    /// Evidence comes from the amplitudes only: phases are angles, free over
    /// the reals, so a phase of 4 or 5 radians carries no over-evidence.
    pub fn evidence(&self) -> Evidence {
        [&self.t_amp, &self.i_amp, &self.f_amp]
            .into_iter()
            .map(component_evidence)
            .fold(Evidence::default(), Evidence::merge)
    }
}

pub fn classify_complex(e: &ComplexElement) -> Classification {
    e.evidence().classification()
}

pub fn classify_complex_set(es: &[ComplexElement]) -> Result<Classification> {
    if es.is_empty() {
        return Err(Error::EmptyCollection);
    }
    Ok(es
        .iter()
        .map(ComplexElement::evidence)
        .fold(Evidence::default(), Evidence::merge)
        .classification())
}

/// Ordered label scale L0..Ln mapped affinely onto [0, 1], with virtual
/// extension labels below L0 and above Ln.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelScale {
    pub labels: Vec<String>,
    pub below: u32,
    pub above: u32,
}

impl LabelScale {
    pub fn new(
        labels: Vec<String>,
        below: u32,
        above: u32,
    ) -> Result<LabelScale> {
        if labels.len() < 2 {
            return Err(Error::ScaleTooSmall);
        }
        Ok(LabelScale {
            labels,
            below,
            above,
        })
    }

    pub fn n(&self) -> i64 {
        self.labels.len() as i64 - 1
    }

    pub fn min_index(&self) -> i64 {
        -(self.below as i64)
    }

    pub fn max_index(&self) -> i64 {
        self.n() + self.above as i64
    }

    /// Index -> degree, L0 -> 0 and Ln -> 1.
    pub fn value_of(&self, index: i64) -> Result<Rat> {
        if index < self.min_index() || index > self.max_index() {
            return Err(Error::IndexOutOfScale {
                index,
                min: self.min_index(),
                max: self.max_index(),
            });
        }
        Ok(frac(index, 1) / frac(self.n(), 1))
    }
}

pub fn classify_label_element(
    t: &[i64],
    i: &[i64],
    f: &[i64],
    scale: &LabelScale,
) -> Result<Classification> {
    let mut ev = Evidence::default();
    for seq in [t, i, f] {
        if seq.is_empty() {
            return Err(Error::EmptyValue);
        }
        let value = SubsetValue::points(
            seq.iter()
                .map(|&idx| scale.value_of(idx))
                .collect::<Result<Vec<_>>>()?,
        )?;
        ev = ev.merge(component_evidence(&value));
    }
    Ok(ev.classification())
}
