use crate::element::{
    component_evidence, normalize_attribute, Classification, Evidence,
};
use crate::error::{Error, Result};
use crate::frame::{Channel, ThresholdFrame};
use crate::rat::{format_rational, int, Rat};
use crate::subset::SubsetValue;
use indexmap::IndexMap;

/// Chance triple for one event: occurs / indeterminate / does not occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffProbabilityAssessment {
    pub event: String,
    pub occurs: SubsetValue,
    pub indet: SubsetValue,
    pub not: SubsetValue,
}

impl OffProbabilityAssessment {
    pub fn new(
        event: impl Into<String>,
        occurs: SubsetValue,
        indet: SubsetValue,
        not: SubsetValue,
        frame: &ThresholdFrame,
    ) -> Result<OffProbabilityAssessment> {
        let event = event.into();
        for (ch, v) in [
            (Channel::T, &occurs),
            (Channel::I, &indet),
            (Channel::F, &not),
        ] {
            if !v.within(frame.psi(ch), frame.omega(ch)) {
                return Err(Error::OutOfFrame {
                    id: event.clone(),
                    component: ch.letter().to_string(),
                    value: v.to_string(),
                    psi: format_rational(frame.psi(ch)),
                    omega: format_rational(frame.omega(ch)),
                });
            }
        }
        Ok(OffProbabilityAssessment {
            event,
            occurs,
            indet,
            not,
        })
    }

    pub fn evidence(&self) -> Evidence {
        [&self.occurs, &self.indet, &self.not]
            .into_iter()
            .map(component_evidence)
            .fold(Evidence::default(), Evidence::merge)
    }
}

pub fn classify_probability(space: &[OffProbabilityAssessment]) -> Result<Classification> {
    if space.is_empty() {
        return Err(Error::EmptyCollection);
    }
    Ok(space
        .iter()
        .map(OffProbabilityAssessment::evidence)
        .fold(Evidence::default(), Evidence::merge)
        .classification())
}

/// Refined chance assessment: p occurrence, r indeterminacy, s anti subchances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedOffProbability {
    pub event: String,
    pub occurs: Vec<SubsetValue>,
    pub indet: Vec<SubsetValue>,
    pub not: Vec<SubsetValue>,
}

impl RefinedOffProbability {
    pub fn new(
        event: impl Into<String>,
        occurs: Vec<SubsetValue>,
        indet: Vec<SubsetValue>,
        not: Vec<SubsetValue>,
    ) -> Result<RefinedOffProbability> {
        let total = occurs.len() + indet.len() + not.len();
        if total < 4 {
            return Err(Error::ArityViolation(format!(
                "refined probability needs p + r + s >= 4, got {total}"
            )));
        }
        Ok(RefinedOffProbability {
            event: event.into(),
            occurs,
            indet,
            not,
        })
    }

    pub fn evidence(&self) -> Evidence {
        self.occurs
            .iter()
            .chain(self.indet.iter())
            .chain(self.not.iter())
            .map(component_evidence)
            .fold(Evidence::default(), Evidence::merge)
    }
}

pub fn classify_refined_probability(space: &[RefinedOffProbability]) -> Result<Classification> {
    if space.is_empty() {
        return Err(Error::EmptyCollection);
    }
    Ok(space
        .iter()
        .map(RefinedOffProbability::evidence)
        .fold(Evidence::default(), Evidence::merge)
        .classification())
}

/// Channel-wise exact arithmetic mean of crisp triples.
pub fn off_mean(sample: &[(Rat, Rat, Rat)]) -> Result<(Rat, Rat, Rat)> {
    if sample.is_empty() {
        return Err(Error::EmptyCollection);
    }
    let n = int(sample.len() as i64);
    let mut sums = (int(0), int(0), int(0));
    for (t, i, f) in sample {
        sums.0 += t;
        sums.1 += i;
        sums.2 += f;
    }
    Ok((sums.0 / &n, sums.1 / &n, sums.2 / &n))
}

/// How one event kind scores: signed points toward t, counts toward i and f.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventRule {
    pub points_t: Rat,
    pub count_i: Rat,
    pub count_f: Rat,
}

pub type RuleTable = IndexMap<String, EventRule>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineResult {
    pub rows: Vec<(String, (Rat, Rat, Rat))>,
    pub classification: Classification,
    pub mean: (Rat, Rat, Rat),
}

/// Scores each individual's events through the rule table, normalizes all
/// three channels by (tau_lo, tau_hi), classifies the sample, and averages it.
pub fn contribution_pipeline(
    individuals: &[(String, Vec<(String, Rat)>)],
    rules: &RuleTable,
    tau_lo: &Rat,
    tau_hi: &Rat,
) -> Result<PipelineResult> {
    if individuals.is_empty() {
        return Err(Error::EmptyCollection);
    }
    let mut rows = Vec::with_capacity(individuals.len());
    let mut evidence = Evidence::default();
    for (id, events) in individuals {
        let mut raw = (int(0), int(0), int(0));
        for (event, quantity) in events {
            let rule = rules
                .get(event)
                .ok_or_else(|| Error::UnknownEvent(event.clone()))?;
            raw.0 += quantity * &rule.points_t;
            raw.1 += quantity * &rule.count_i;
            raw.2 += quantity * &rule.count_f;
        }
        let triple = (
            normalize_attribute(&raw.0, tau_lo, tau_hi)?,
            normalize_attribute(&raw.1, tau_lo, tau_hi)?,
            normalize_attribute(&raw.2, tau_lo, tau_hi)?,
        );
        for v in [&triple.0, &triple.1, &triple.2] {
            evidence = evidence.merge(Evidence {
                over: v > &int(1),
                under: v < &int(0),
            });
        }
        rows.push((id.clone(), triple));
    }
    let mean = off_mean(&rows.iter().map(|(_, t)| t.clone()).collect::<Vec<_>>())?;
    Ok(PipelineResult {
        rows,
        classification: evidence.classification(),
        mean,
    })
}

/// The paper's device-assembly rule table: built events score one point each,
/// wrecked ones lose two, pending counts as indeterminate, missed as failed.
pub fn assembly_rules() -> RuleTable {
    let mut rules = RuleTable::new();
    rules.insert(
        "built".into(),
        EventRule {
            points_t: int(1),
            count_i: int(0),
            count_f: int(0),
        },
    );
    rules.insert(
        "wrecked".into(),
        EventRule {
            points_t: int(-2),
            count_i: int(0),
            count_f: int(0),
        },
    );
    rules.insert(
        "pending".into(),
        EventRule {
            points_t: int(0),
            count_i: int(1),
            count_f: int(0),
        },
    );
    rules.insert(
        "missed".into(),
        EventRule {
            points_t: int(0),
            count_i: int(0),
            count_f: int(1),
        },
    );
    rules
}

/// The four worked employee records against a norm of 20 devices.
pub fn assembly_example() -> Vec<(String, Vec<(String, Rat)>)> {
    let ev = |name: &str, qty: Rat| (name.to_string(), qty);
    vec![
        (
            "Antoinette".into(),
            vec![ev("built", int(25)), ev("pending", int(2))],
        ),
        (
            "Adriana".into(),
            vec![
                ev("built", int(11)),
                ev("pending", int(1)),
                ev("missed", int(8)),
            ],
        ),
        (
            "Oliver".into(),
            vec![
                ev("wrecked", int(10)),
                ev("built", crate::rat::frac(11, 2)),
                ev("pending", int(1)),
                ev("missed", crate::rat::frac(7, 2)),
            ],
        ),
        (
            "Murriah".into(),
            vec![ev("wrecked", int(14)), ev("pending", int(6))],
        ),
    ]
}
