use crate::error::{Error, Result};
use crate::frame::{Channel, ThresholdFrame};
use crate::rat::{format_rational, int, Rat};
use crate::subset::SubsetValue;
use indexmap::IndexMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Standard,
    Over,
    Under,
    Off,
}

impl Classification {
    pub fn from_evidence(over: bool, under: bool) -> Classification {
        match (over, under) {
            (true, true) => Classification::Off,
            (true, false) => Classification::Over,
            (false, true) => Classification::Under,
            (false, false) => Classification::Standard,
        }
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::Standard => "standard",
            Classification::Over => "over",
            Classification::Under => "under",
            Classification::Off => "off",
        })
    }
}

/// Point-set evidence of a component against the thresholds 1 (above) and 0 (below).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Evidence {
    pub over: bool,
    pub under: bool,
}

impl Evidence {
    pub fn merge(self, other: Evidence) -> Evidence {
        Evidence {
            over: self.over || other.over,
            under: self.under || other.under,
        }
    }

    pub fn classification(self) -> Classification {
        Classification::from_evidence(self.over, self.under)
    }
}

/// Evidence of `v` against an (above, below) threshold pair, honoring openness.
pub fn evidence_against(v: &SubsetValue, above: &Rat, below: &Rat) -> Evidence {
    Evidence {
        over: v.has_point_gt(above),
        under: v.has_point_lt(below),
    }
}

pub fn component_evidence(v: &SubsetValue) -> Evidence {
    evidence_against(v, &int(1), &int(0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentClass {
    pub class: Classification,
    pub partially_over: bool,
    pub totally_over: bool,
    pub partially_under: bool,
    pub totally_under: bool,
}

/// Classifies one component against [0, 1] inside its channel range [psi, omega].
/// "Totally over" tolerates a closed endpoint at 1; dually at 0.
pub fn classify_component(v: &SubsetValue, psi: &Rat, omega: &Rat) -> Result<ComponentClass> {
    if !v.within(psi, omega) {
        return Err(Error::OutOfFrame {
            id: String::new(),
            component: "value".into(),
            value: v.to_string(),
            psi: format_rational(psi),
            omega: format_rational(omega),
        });
    }
    let ev = component_evidence(v);
    Ok(ComponentClass {
        class: ev.classification(),
        partially_over: ev.over,
        totally_over: ev.over && v.all_points_ge(&int(1)),
        partially_under: ev.under,
        totally_under: ev.under && v.all_points_le(&int(0)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub id: String,
    pub t: SubsetValue,
    pub i: SubsetValue,
    pub f: SubsetValue,
}

impl Element {
    pub fn new(
        id: impl Into<String>,
        t: SubsetValue,
        i: SubsetValue,
        f: SubsetValue,
        frame: &ThresholdFrame,
    ) -> Result<Element> {
        let id = id.into();
        for (ch, v) in [(Channel::T, &t), (Channel::I, &i), (Channel::F, &f)] {
            if !v.within(frame.psi(ch), frame.omega(ch)) {
                return Err(Error::OutOfFrame {
                    id: id.clone(),
                    component: ch.letter().to_string(),
                    value: v.to_string(),
                    psi: format_rational(frame.psi(ch)),
                    omega: format_rational(frame.omega(ch)),
                });
            }
        }
        Ok(Element { id, t, i, f })
    }

    pub fn crisp(
        id: impl Into<String>,
        t: Rat,
        i: Rat,
        f: Rat,
        frame: &ThresholdFrame,
    ) -> Result<Element> {
        Element::new(
            id,
            SubsetValue::point(t),
            SubsetValue::point(i),
            SubsetValue::point(f),
            frame,
        )
    }

    pub fn component(&self, ch: Channel) -> &SubsetValue {
        match ch {
            Channel::T => &self.t,
            Channel::I => &self.i,
            Channel::F => &self.f,
        }
    }

    pub fn evidence(&self) -> Evidence {
        Channel::ALL
            .iter()
            .map(|&ch| component_evidence(self.component(ch)))
            .fold(Evidence::default(), Evidence::merge)
    }

    /// Does any component reach outside [0, 1]?
    pub fn is_off_valued(&self) -> bool {
        let ev = self.evidence();
        ev.over || ev.under
    }
}

pub fn classify_element(e: &Element) -> Classification {
    e.evidence().classification()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Over,
    Under,
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::Over => "over",
            Direction::Under => "under",
        })
    }
}

/// Which component of which element supplied over- or under-evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub element: String,
    pub component: String,
    pub direction: Direction,
    pub value: String,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}.{} {} via {}",
            self.element, self.component, self.direction, self.value
        )
    }
}

pub fn component_witnesses(
    element: &str,
    component: &str,
    v: &SubsetValue,
    above: &Rat,
    below: &Rat,
) -> Vec<Witness> {
    let mut out = Vec::new();
    let ev = evidence_against(v, above, below);
    if ev.over {
        out.push(Witness {
            element: element.to_string(),
            component: component.to_string(),
            direction: Direction::Over,
            value: v.to_string(),
        });
    }
    if ev.under {
        out.push(Witness {
            element: element.to_string(),
            component: component.to_string(),
            direction: Direction::Under,
            value: v.to_string(),
        });
    }
    out
}

/// A named, ordered mapping of elements sharing one frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffCollection {
    pub name: String,
    frame: ThresholdFrame,
    elements: IndexMap<String, Element>,
}

impl OffCollection {
    pub fn new(name: impl Into<String>, frame: ThresholdFrame) -> OffCollection {
        OffCollection {
            name: name.into(),
            frame,
            elements: IndexMap::new(),
        }
    }

    pub fn insert(&mut self, e: Element) -> Result<()> {
        let e = Element::new(e.id, e.t, e.i, e.f, &self.frame)?;
        if self.elements.contains_key(&e.id) {
            return Err(Error::DuplicateId(e.id));
        }
        self.elements.insert(e.id.clone(), e);
        Ok(())
    }

    pub fn frame(&self) -> &ThresholdFrame {
        &self.frame
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Element> {
        self.elements.get(id)
    }

    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.elements.values()
    }

    pub fn ids(&self) -> impl Iterator<Item = &String> {
        self.elements.keys()
    }

    /// Same ids in the same order.
    pub fn same_domain(&self, other: &OffCollection) -> bool {
        self.elements.len() == other.elements.len()
            && self.ids().all(|id| other.elements.contains_key(id))
    }

    /// Name-insensitive value equality on canonical forms.
    pub fn same_content(&self, other: &OffCollection) -> bool {
        self.frame == other.frame
            && self.same_domain(other)
            && self
                .elements()
                .all(|e| other.get(&e.id).map(|o| o == e).unwrap_or(false))
    }

    pub fn evidence(&self) -> Evidence {
        self.elements()
            .map(Element::evidence)
            .fold(Evidence::default(), Evidence::merge)
    }

    pub fn witnesses(&self) -> Vec<Witness> {
        let one = int(1);
        let zero = int(0);
        let mut out = Vec::new();
        for e in self.elements() {
            for ch in Channel::ALL {
                out.extend(component_witnesses(
                    &e.id,
                    &ch.letter().to_string(),
                    e.component(ch),
                    &one,
                    &zero,
                ));
            }
        }
        out
    }
}

pub fn classify_collection(c: &OffCollection) -> Result<Classification> {
    if c.is_empty() {
        return Err(Error::EmptyCollection);
    }
    Ok(c.evidence().classification())
}

/// Off-existential quantifier: witnesses are elements satisfying `pred` that
/// carry at least one component reaching outside [0, 1].
pub fn off_exists(c: &OffCollection, pred: impl Fn(&Element) -> bool) -> (bool, Vec<String>) {
    let witnesses: Vec<String> = c
        .elements()
        .filter(|e| pred(e) && e.is_off_valued())
        .map(|e| e.id.clone())
        .collect();
    (!witnesses.is_empty(), witnesses)
}

/// Off-universal quantifier: returns the violators of `pred`; vacuously true when empty.
pub fn off_forall(c: &OffCollection, pred: impl Fn(&Element) -> bool) -> (bool, Vec<String>) {
    let violators: Vec<String> = c
        .elements()
        .filter(|e| !pred(e))
        .map(|e| e.id.clone())
        .collect();
    (violators.is_empty(), violators)
}

/// Affine attribute-to-degree map (v - tau_lo) / (tau_hi - tau_lo); may leave [0, 1].
pub fn normalize_attribute(v: &Rat, tau_lo: &Rat, tau_hi: &Rat) -> Result<Rat> {
    if tau_lo >= tau_hi {
        return Err(Error::DegenerateThresholds {
            lo: format_rational(tau_lo),
            hi: format_rational(tau_hi),
        });
    }
    Ok((v - tau_lo) / (tau_hi - tau_lo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::parse_rational;

    fn r(s: &str) -> Rat {
        parse_rational(s).unwrap()
    }

    fn sv(s: &str) -> SubsetValue {
        SubsetValue::point(r(s))
    }

    fn wide() -> ThresholdFrame {
        ThresholdFrame::uniform(r("-1.2"), r("1.2")).unwrap()
    }

    fn frame2() -> ThresholdFrame {
        ThresholdFrame::uniform(r("-2"), r("2")).unwrap()
    }

    #[test]
    fn component_classes_from_the_interval_examples() {
        let f = frame2();
        let c = classify_component(
            &SubsetValue::closed(int(1), r("1.4")).unwrap(),
            f.psi(Channel::T),
            f.omega(Channel::T),
        )
        .unwrap();
        assert!(c.totally_over && !c.partially_under);

        let c = classify_component(
            &SubsetValue::closed(r("-0.2"), r("0.2")).unwrap(),
            f.psi(Channel::F),
            f.omega(Channel::F),
        )
        .unwrap();
        assert!(c.partially_under && !c.totally_under && !c.partially_over);

        let c = classify_component(
            &SubsetValue::open(r("-0.8"), int(0)).unwrap(),
            f.psi(Channel::F),
            f.omega(Channel::F),
        )
        .unwrap();
        assert!(c.totally_under);

        let c = classify_component(
            &SubsetValue::closed(r("0.9"), r("1.1")).unwrap(),
            f.psi(Channel::T),
            f.omega(Channel::T),
        )
        .unwrap();
        assert!(c.partially_over && !c.totally_over);
    }

    #[test]
    fn out_of_range_component_rejected() {
        assert!(classify_component(&sv("1.5"), &int(0), &r("1.2")).is_err());
    }

    #[test]
    fn element_classes() {
        let f = wide();
        let off = Element::crisp("l", r("0.1"), r("-0.2"), r("1.3"), &frame2()).unwrap();
        assert_eq!(classify_element(&off), Classification::Off);

        let over = Element::crisp("x1", r("1.2"), r("0.4"), r("0.1"), &f).unwrap();
        assert_eq!(classify_element(&over), Classification::Over);

        let std = Element::crisp("x", int(1), int(0), int(0), &f).unwrap();
        assert_eq!(classify_element(&std), Classification::Standard);
    }

    #[test]
    fn straddling_component_makes_off() {
        let f = wide();
        let e = Element::new(
            "x",
            SubsetValue::closed(r("-0.2"), r("1.1")).unwrap(),
            sv("0"),
            sv("0"),
            &f,
        )
        .unwrap();
        assert_eq!(classify_element(&e), Classification::Off);
    }

    #[test]
    fn collection_classes() {
        let f = wide();
        let mut a3 = OffCollection::new("A3", f.clone());
        a3.insert(Element::crisp("x1", r("1.2"), r("0.4"), r("0.1"), &f).unwrap())
            .unwrap();
        a3.insert(Element::crisp("x2", r("0.2"), r("0.3"), r("-0.7"), &f).unwrap())
            .unwrap();
        assert_eq!(classify_collection(&a3).unwrap(), Classification::Off);

        let mut a2 = OffCollection::new("A2", f.clone());
        a2.insert(Element::crisp("x1", r("-0.4"), r("0.5"), r("0.3"), &f).unwrap())
            .unwrap();
        a2.insert(Element::crisp("x2", r("0.2"), r("0.5"), r("-0.2"), &f).unwrap())
            .unwrap();
        assert_eq!(classify_collection(&a2).unwrap(), Classification::Under);

        let empty = OffCollection::new("E", f);
        assert_eq!(classify_collection(&empty), Err(Error::EmptyCollection));
    }

    #[test]
    fn singleton_matches_element() {
        let f = wide();
        let e = Element::crisp("x", r("0.5"), r("0.5"), r("0.5"), &f).unwrap();
        let cls = classify_element(&e);
        let mut c = OffCollection::new("S", f);
        c.insert(e).unwrap();
        assert_eq!(classify_collection(&c).unwrap(), cls);
    }

    #[test]
    fn quantifiers() {
        let f = wide();
        let mut a3 = OffCollection::new("A3", f.clone());
        a3.insert(Element::crisp("x1", r("1.2"), r("0.4"), r("0.1"), &f).unwrap())
            .unwrap();
        a3.insert(Element::crisp("x2", r("0.2"), r("0.3"), r("-0.7"), &f).unwrap())
            .unwrap();

        let (ok, wit) = off_exists(&a3, |e| component_evidence(&e.t).over);
        assert!(ok);
        assert_eq!(wit, vec!["x1".to_string()]);

        let (ok, viol) = off_forall(&a3, |e| component_evidence(&e.i).classification()
            == Classification::Standard);
        assert!(ok);
        assert!(viol.is_empty());

        let empty = OffCollection::new("E", f);
        assert_eq!(off_exists(&empty, |_| true), (false, vec![]));
        assert_eq!(off_forall(&empty, |_| false), (true, vec![]));
    }

    #[test]
    fn witnesses_report_direction_and_value() {
        let f = wide();
        let mut a3 = OffCollection::new("A3", f.clone());
        a3.insert(Element::crisp("x1", r("1.2"), r("0.4"), r("0.1"), &f).unwrap())
            .unwrap();
        a3.insert(Element::crisp("x2", r("0.2"), r("0.3"), r("-0.7"), &f).unwrap())
            .unwrap();
        let ws = a3.witnesses();
        assert_eq!(ws.len(), 2);
        assert_eq!(ws[0].to_string(), "x1.T over via 1.2");
        assert_eq!(ws[1].to_string(), "x2.F under via -0.7");
    }

    #[test]
    fn normalize_attribute_values() {
        assert_eq!(
            normalize_attribute(&int(25), &int(0), &int(20)).unwrap(),
            r("1.25")
        );
        assert_eq!(
            normalize_attribute(&int(-28), &int(0), &int(20)).unwrap(),
            r("-1.4")
        );
        assert_eq!(normalize_attribute(&int(5), &int(5), &int(9)).unwrap(), int(0));
        assert!(normalize_attribute(&int(1), &int(3), &int(3)).is_err());
    }
}
