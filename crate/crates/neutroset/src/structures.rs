use crate::algebra::{off_complement, off_intersection, off_union, ComplementVariant, NormFamily};
use crate::element::{Classification, Element, Evidence, OffCollection};
use crate::error::{Error, Result};
use crate::frame::{Channel, ThresholdFrame};
use crate::polarity::PoleTriple;
use crate::rat::{format_rational, int, Rat};
use crate::subset::SubsetValue;
use indexmap::IndexMap;
use std::collections::BTreeSet;

/// A vertex, edge, or cell membership of any polarity arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolarLabel {
    Plain(PoleTriple),
    Bipolar {
        pos: PoleTriple,
        neg: PoleTriple,
    },
    Tripolar {
        pos: PoleTriple,
        neu: PoleTriple,
        neg: PoleTriple,
    },
    Multipolar {
        pos: Vec<PoleTriple>,
        neu: PoleTriple,
        neg: Vec<PoleTriple>,
    },
}

impl PolarLabel {
    /// Polarity-aware thresholds: plain channels trip at 1 and 0; positive and
    /// neutral channels trip above 1; negative and neutral channels trip
    /// below -1.
    pub fn evidence(&self) -> Evidence {
        let one = int(1);
        let zero = int(0);
        let minus_one = int(-1);
        let positive = |t: &PoleTriple| Evidence {
            over: t.components().iter().any(|v| v.has_point_gt(&one)),
            under: false,
        };
        let negative = |t: &PoleTriple| Evidence {
            over: false,
            under: t.components().iter().any(|v| v.has_point_lt(&minus_one)),
        };
        let neutral = |t: &PoleTriple| Evidence {
            over: t.components().iter().any(|v| v.has_point_gt(&one)),
            under: t.components().iter().any(|v| v.has_point_lt(&minus_one)),
        };
        match self {
            PolarLabel::Plain(t) => Evidence {
                over: t.components().iter().any(|v| v.has_point_gt(&one)),
                under: t.components().iter().any(|v| v.has_point_lt(&zero)),
            },
            PolarLabel::Bipolar { pos, neg } => positive(pos).merge(negative(neg)),
            PolarLabel::Tripolar { pos, neu, neg } => {
                positive(pos).merge(neutral(neu)).merge(negative(neg))
            }
            PolarLabel::Multipolar { pos, neu, neg } => pos
                .iter()
                .map(positive)
                .chain(neg.iter().map(negative))
                .fold(neutral(neu), Evidence::merge),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutroGraph {
    vertices: IndexMap<String, PolarLabel>,
    edges: Vec<(String, String, PolarLabel)>,
}

impl NeutroGraph {
    pub fn new(
        vertices: IndexMap<String, PolarLabel>,
        edges: Vec<(String, String, PolarLabel)>,
    ) -> Result<NeutroGraph> {
        for (a, b, _) in &edges {
            for end in [a, b] {
                if !vertices.contains_key(end) {
                    return Err(Error::DanglingEdge(end.clone()));
                }
            }
        }
        Ok(NeutroGraph { vertices, edges })
    }

    pub fn vertices(&self) -> &IndexMap<String, PolarLabel> {
        &self.vertices
    }

    pub fn edges(&self) -> &[(String, String, PolarLabel)] {
        &self.edges
    }

    pub fn evidence(&self) -> Evidence {
        self.vertices
            .values()
            .chain(self.edges.iter().map(|(_, _, l)| l))
            .map(PolarLabel::evidence)
            .fold(Evidence::default(), Evidence::merge)
    }
}

pub fn classify_graph(g: &NeutroGraph) -> Result<Classification> {
    if g.vertices.is_empty() {
        return Err(Error::EmptyInput("graph has no vertices".into()));
    }
    Ok(g.evidence().classification())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixCell {
    /// Underlying numeric entry, when the matrix carries one.
    pub value: Option<Rat>,
    pub label: PolarLabel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutroMatrix {
    cells: Vec<Vec<MatrixCell>>,
}

impl NeutroMatrix {
    pub fn new(cells: Vec<Vec<MatrixCell>>) -> Result<NeutroMatrix> {
        if cells.is_empty() || cells[0].is_empty() {
            return Err(Error::BadMatrixShape);
        }
        let width = cells[0].len();
        if cells.iter().any(|row| row.len() != width) {
            return Err(Error::BadMatrixShape);
        }
        Ok(NeutroMatrix { cells })
    }

    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.cells[0].len()
    }

    pub fn cells(&self) -> &Vec<Vec<MatrixCell>> {
        &self.cells
    }

    pub fn evidence(&self) -> Evidence {
        self.cells
            .iter()
            .flatten()
            .map(|c| c.label.evidence())
            .fold(Evidence::default(), Evidence::merge)
    }
}

pub fn classify_matrix(m: &NeutroMatrix) -> Result<Classification> {
    Ok(m.evidence().classification())
}

/// A residue class with the crisp labels reached for it; several labels on one
/// residue read as hesitant per-channel sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledResidue {
    pub residue: u64,
    pub labels: BTreeSet<(Rat, Rat, Rat)>,
}

impl LabeledResidue {
    pub fn single(residue: u64, t: Rat, i: Rat, f: Rat) -> LabeledResidue {
        LabeledResidue {
            residue,
            labels: BTreeSet::from([(t, i, f)]),
        }
    }

    /// Per-channel hesitant sets over all labels.
    pub fn channel_sets(&self) -> (BTreeSet<Rat>, BTreeSet<Rat>, BTreeSet<Rat>) {
        let mut t = BTreeSet::new();
        let mut i = BTreeSet::new();
        let mut f = BTreeSet::new();
        for (lt, li, lf) in &self.labels {
            t.insert(lt.clone());
            i.insert(li.clone());
            f.insert(lf.clone());
        }
        (t, i, f)
    }
}

impl std::fmt::Display for LabeledResidue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (ts, is_, fs) = self.channel_sets();
        let show = |s: &BTreeSet<Rat>| {
            if s.len() == 1 {
                format_rational(s.iter().next().unwrap())
            } else {
                format!(
                    "{{{}}}",
                    s.iter().map(format_rational).collect::<Vec<_>>().join(", ")
                )
            }
        };
        write!(
            f,
            "{}_({}, {}, {})",
            self.residue,
            show(&ts),
            show(&is_),
            show(&fs)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CarrierOp {
    AddMod,
    MulMod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combine {
    Min,
    Max,
}

impl Combine {
    fn apply(self, a: &Rat, b: &Rat) -> Rat {
        match self {
            Combine::Min => a.min(b).clone(),
            Combine::Max => a.max(b).clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabeledLaw {
    pub op: CarrierOp,
    pub t: Combine,
    pub i: Combine,
    pub f: Combine,
}

/// Closes the generators under the law. Reaching one residue with different
/// labels accumulates them (hesitant labels). Terminates: residues and
/// reachable labels are finite.
pub fn generate_labeled_structure(
    generators: &[LabeledResidue],
    law: &LabeledLaw,
    modulus: u64,
) -> Result<Vec<LabeledResidue>> {
    if modulus < 1 {
        return Err(Error::BadModulus);
    }
    if generators.is_empty() {
        return Err(Error::EmptyInput("no generators".into()));
    }
    let mut reached: BTreeSet<(u64, (Rat, Rat, Rat))> = BTreeSet::new();
    for g in generators {
        if g.residue >= modulus {
            return Err(Error::BadResidue {
                residue: g.residue,
                modulus,
            });
        }
        if g.labels.is_empty() {
            return Err(Error::EmptyInput(format!(
                "generator {} has no labels",
                g.residue
            )));
        }
        for label in &g.labels {
            reached.insert((g.residue, label.clone()));
        }
    }
    loop {
        let snapshot: Vec<_> = reached.iter().cloned().collect();
        let before = reached.len();
        for (r1, l1) in &snapshot {
            for (r2, l2) in &snapshot {
                let residue = match law.op {
                    CarrierOp::AddMod => (r1 + r2) % modulus,
                    CarrierOp::MulMod => (r1 * r2) % modulus,
                };
                let label = (
                    law.t.apply(&l1.0, &l2.0),
                    law.i.apply(&l1.1, &l2.1),
                    law.f.apply(&l1.2, &l2.2),
                );
                reached.insert((residue, label));
            }
        }
        if reached.len() == before {
            break;
        }
    }
    let mut by_residue: IndexMap<u64, BTreeSet<(Rat, Rat, Rat)>> = IndexMap::new();
    for (r, label) in reached {
        by_residue.entry(r).or_default().insert(label);
    }
    by_residue.sort_keys();
    Ok(by_residue
        .into_iter()
        .map(|(residue, labels)| LabeledResidue { residue, labels })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub passed: bool,
    pub witness: Option<String>,
}

impl AxiomVerdict {
    fn pass() -> AxiomVerdict {
        AxiomVerdict {
            passed: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> AxiomVerdict {
        AxiomVerdict {
            passed: false,
            witness: Some(witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub union: AxiomVerdict,
    pub intersection: AxiomVerdict,
    pub complement: AxiomVerdict,
}

impl ClosureReport {
    pub fn closed(&self) -> bool {
        self.union.passed && self.intersection.passed && self.complement.passed
    }
}

fn in_family(family: &[OffCollection], candidate: &OffCollection) -> bool {
    family.iter().any(|m| m.same_content(candidate))
}

fn check_family_shape(family: &[OffCollection]) -> Result<()> {
    if family.is_empty() {
        return Err(Error::EmptyInput("empty family".into()));
    }
    let first = &family[0];
    for m in &family[1..] {
        if m.frame() != first.frame() {
            return Err(Error::FrameMismatch);
        }
        if !m.same_domain(first) {
            return Err(Error::DomainMismatch(format!(
                "{:?} vs {:?}",
                m.ids().collect::<Vec<_>>(),
                first.ids().collect::<Vec<_>>()
            )));
        }
    }
    Ok(())
}

/// Is the family closed under union, intersection, and complement? Success
/// means it carries a Boolean-algebra style structure over the shared universe.
pub fn check_closure(
    family: &[OffCollection],
    fam: NormFamily,
    variant: ComplementVariant,
) -> Result<ClosureReport> {
    check_family_shape(family)?;
    let mut union = AxiomVerdict::pass();
    let mut intersection = AxiomVerdict::pass();
    'outer: for a in family {
        for b in family {
            if union.passed {
                let u = off_union(a, b, fam)?;
                if !in_family(family, &u) {
                    union = AxiomVerdict::fail(format!("union({}, {}) escapes", a.name, b.name));
                }
            }
            if intersection.passed {
                let i = off_intersection(a, b, fam)?;
                if !in_family(family, &i) {
                    intersection = AxiomVerdict::fail(format!(
                        "intersection({}, {}) escapes",
                        a.name, b.name
                    ));
                }
            }
            if !union.passed && !intersection.passed {
                break 'outer;
            }
        }
    }
    let mut complement = AxiomVerdict::pass();
    for a in family {
        let c = off_complement(a, variant)?;
        if !in_family(family, &c) {
            complement = AxiomVerdict::fail(format!("complement({}) escapes", a.name));
            break;
        }
    }
    Ok(ClosureReport {
        union,
        intersection,
        complement,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyKind {
    Over,
    Under,
    Off,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyReport {
    pub constants: AxiomVerdict,
    pub intersections: AxiomVerdict,
    pub unions: AxiomVerdict,
}

impl TopologyReport {
    pub fn all_passed(&self) -> bool {
        self.constants.passed && self.intersections.passed && self.unions.passed
    }
}

/// The two kind-specific constant collections of the topology axioms.
pub fn topology_constants(
    frame: &ThresholdFrame,
    ids: &[String],
    kind: TopologyKind,
) -> Result<(OffCollection, OffCollection)> {
    let (psi_t, omega_t) = (frame.psi(Channel::T), frame.omega(Channel::T));
    let (psi_i, omega_i) = (frame.psi(Channel::I), frame.omega(Channel::I));
    let (psi_f, omega_f) = (frame.psi(Channel::F), frame.omega(Channel::F));
    let (lo_triple, hi_triple) = match kind {
        TopologyKind::Over => (
            (int(0), omega_i.clone(), omega_f.clone()),
            (omega_t.clone(), int(0), int(0)),
        ),
        TopologyKind::Under => (
            (psi_t.clone(), int(1), int(1)),
            (int(1), psi_i.clone(), psi_f.clone()),
        ),
        TopologyKind::Off => (
            (psi_t.clone(), omega_i.clone(), omega_f.clone()),
            (omega_t.clone(), psi_i.clone(), psi_f.clone()),
        ),
    };
    let constant = |name: &str, (t, i, f): (Rat, Rat, Rat)| -> Result<OffCollection> {
        let mut c = OffCollection::new(name, frame.clone());
        for id in ids {
            c.insert(Element::new(
                id.clone(),
                SubsetValue::point(t.clone()),
                SubsetValue::point(i.clone()),
                SubsetValue::point(f.clone()),
                frame,
            )?)?;
        }
        Ok(c)
    };
    Ok((
        constant("lo-constant", lo_triple)?,
        constant("hi-constant", hi_triple)?,
    ))
}

/// Checks the finite topology axioms for the given kind: (a) the two constant
/// collections belong to the family, (b) pairwise min/max intersections stay
/// inside, (c) unions of every nonempty subfamily stay inside.
pub fn check_topology(
    family: &[OffCollection],
    frame: &ThresholdFrame,
    kind: TopologyKind,
) -> Result<TopologyReport> {
    check_family_shape(family)?;
    if family[0].frame() != frame {
        return Err(Error::FrameMismatch);
    }
    if family.len() > 20 {
        return Err(Error::Invalid(
            "topology family too large for exhaustive union scan (max 20)".into(),
        ));
    }
    let ids: Vec<String> = family[0].ids().cloned().collect();
    let (lo, hi) = topology_constants(frame, &ids, kind)?;
    let mut constants = AxiomVerdict::pass();
    for c in [&lo, &hi] {
        if !in_family(family, c) {
            constants = AxiomVerdict::fail(format!("constant {} missing", c.name));
            break;
        }
    }

    let mut intersections = AxiomVerdict::pass();
    'inter: for a in family {
        for b in family {
            let i = off_intersection(a, b, NormFamily::MinMax)?;
            if !in_family(family, &i) {
                intersections = AxiomVerdict::fail(format!(
                    "intersection({}, {}) escapes",
                    a.name, b.name
                ));
                break 'inter;
            }
        }
    }

    let mut unions = AxiomVerdict::pass();
    'uni: for mask in 1u32..(1 << family.len()) {
        let members: Vec<&OffCollection> = family
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, m)| m)
            .collect();
        let mut acc = members[0].clone();
        for m in &members[1..] {
            acc = off_union(&acc, m, NormFamily::MinMax)?;
        }
        if !in_family(family, &acc) {
            let names: Vec<&str> = members.iter().map(|m| m.name.as_str()).collect();
            unions = AxiomVerdict::fail(format!("union of {names:?} escapes"));
            break 'uni;
        }
    }

    Ok(TopologyReport {
        constants,
        intersections,
        unions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::ThresholdFrame;
    use crate::rat::{frac, parse_rational};

    fn r(s: &str) -> Rat {
        parse_rational(s).unwrap()
    }

    fn p(s: &str) -> SubsetValue {
        SubsetValue::point(r(s))
    }

    fn plain(t: &str, i: &str, f: &str) -> PolarLabel {
        PolarLabel::Plain(PoleTriple::new(p(t), p(i), p(f)))
    }

    #[test]
    fn offgraph_from_fifteenths() {
        let mut vs = IndexMap::new();
        vs.insert("v1".to_string(), plain("18/15", "3/15", "-9/15"));
        vs.insert("v2".to_string(), plain("6/15", "0", "9/15"));
        let es = vec![(
            "v1".to_string(),
            "v2".to_string(),
            plain("12/15", "3/15", "6/15"),
        )];
        let g = NeutroGraph::new(vs, es).unwrap();
        assert_eq!(classify_graph(&g).unwrap(), Classification::Off);
    }

    #[test]
    fn plain_standard_graph() {
        let mut vs = IndexMap::new();
        vs.insert("v1".to_string(), plain("0.5", "0.1", "0.3"));
        let g = NeutroGraph::new(vs, vec![]).unwrap();
        assert_eq!(classify_graph(&g).unwrap(), Classification::Standard);
    }

    #[test]
    fn bipolar_overgraph() {
        let mut vs = IndexMap::new();
        vs.insert(
            "v1".to_string(),
            PolarLabel::Bipolar {
                pos: PoleTriple::new(p("1.5"), p("0.2"), p("0.1")),
                neg: PoleTriple::new(p("-0.1"), p("-0.2"), p("-0.3")),
            },
        );
        let g = NeutroGraph::new(vs, vec![]).unwrap();
        assert_eq!(classify_graph(&g).unwrap(), Classification::Over);
    }

    #[test]
    fn dangling_edge_rejected() {
        let mut vs = IndexMap::new();
        vs.insert("v1".to_string(), plain("0.5", "0.1", "0.3"));
        let es = vec![(
            "v1".to_string(),
            "v9".to_string(),
            plain("0.1", "0.1", "0.1"),
        )];
        assert!(NeutroGraph::new(vs, es).is_err());
    }

    fn cell(label: PolarLabel) -> MatrixCell {
        MatrixCell { value: None, label }
    }

    #[test]
    fn plain_matrix_classes() {
        let over = NeutroMatrix::new(vec![vec![
            cell(PolarLabel::Plain(PoleTriple::new(
                SubsetValue::closed(r("0.9"), r("1.1")).unwrap(),
                p("0.2"),
                p("0.3"),
            ))),
            cell(plain("0.4", "0.1", "0.2")),
        ]])
        .unwrap();
        assert_eq!(classify_matrix(&over).unwrap(), Classification::Over);

        let under = NeutroMatrix::new(vec![vec![cell(PolarLabel::Plain(PoleTriple::new(
            SubsetValue::points([r("-0.3"), r("0.0")]).unwrap(),
            p("0.2"),
            p("0.3"),
        )))]])
        .unwrap();
        assert_eq!(classify_matrix(&under).unwrap(), Classification::Under);
    }

    #[test]
    fn bipolar_offmatrix_cell() {
        let m3 = NeutroMatrix::new(vec![vec![MatrixCell {
            value: Some(int(47)),
            label: PolarLabel::Bipolar {
                pos: PoleTriple::new(p("0.2"), p("1.3"), p("0.0")),
                neg: PoleTriple::new(p("-1.2"), p("-0.1"), p("-0.5")),
            },
        }]])
        .unwrap();
        assert_eq!(classify_matrix(&m3).unwrap(), Classification::Off);
    }

    #[test]
    fn negative_channel_trips_at_minus_one_not_zero() {
        let m = NeutroMatrix::new(vec![vec![cell(PolarLabel::Bipolar {
            pos: PoleTriple::new(p("0.2"), p("0.3"), p("0.0")),
            neg: PoleTriple::new(p("-0.9"), p("-0.1"), p("-0.5")),
        })]])
        .unwrap();
        assert_eq!(classify_matrix(&m).unwrap(), Classification::Standard);
    }

    #[test]
    fn matrix_shape_checked() {
        assert!(NeutroMatrix::new(vec![]).is_err());
        assert!(NeutroMatrix::new(vec![
            vec![cell(plain("0", "0", "0"))],
            vec![cell(plain("0", "0", "0")), cell(plain("0", "0", "0"))],
        ])
        .is_err());
    }

    #[test]
    fn generated_structure_single_generator() {
        let law = LabeledLaw {
            op: CarrierOp::AddMod,
            t: Combine::Max,
            i: Combine::Min,
            f: Combine::Min,
        };
        let gens = [LabeledResidue::single(1, r("1.2"), r("0.1"), r("0.3"))];
        let out = generate_labeled_structure(&gens, &law, 4).unwrap();
        assert_eq!(out.len(), 4);
        for (k, res) in out.iter().enumerate() {
            assert_eq!(res.residue, k as u64);
            assert_eq!(
                res.labels,
                BTreeSet::from([(r("1.2"), r("0.1"), r("0.3"))])
            );
        }
    }

    #[test]
    fn generated_structure_hesitant_merge() {
        let law = LabeledLaw {
            op: CarrierOp::MulMod,
            t: Combine::Min,
            i: Combine::Max,
            f: Combine::Max,
        };
        let gens = [
            LabeledResidue::single(0, r("-0.1"), r("0.1"), r("0.7")),
            LabeledResidue::single(2, r("0.8"), r("0.2"), r("0.4")),
        ];
        let out = generate_labeled_structure(&gens, &law, 3).unwrap();
        assert_eq!(out.len(), 3);
        let (t0, i0, f0) = out[0].channel_sets();
        assert_eq!(t0, BTreeSet::from([r("-0.1")]));
        assert_eq!(i0, BTreeSet::from([r("0.1"), r("0.2")]));
        assert_eq!(f0, BTreeSet::from([r("0.7")]));
        assert_eq!(
            out[1].labels,
            BTreeSet::from([(r("0.8"), r("0.2"), r("0.4"))])
        );
        assert_eq!(
            out[2].labels,
            BTreeSet::from([(r("0.8"), r("0.2"), r("0.4"))])
        );
        assert_eq!(out[0].to_string(), "0_(-0.1, {0.1, 0.2}, 0.7)");
    }

    #[test]
    fn absorbing_zero_generator() {
        let law = LabeledLaw {
            op: CarrierOp::AddMod,
            t: Combine::Max,
            i: Combine::Min,
            f: Combine::Min,
        };
        let gens = [LabeledResidue::single(0, r("0.3"), r("0.2"), r("0.1"))];
        let out = generate_labeled_structure(&gens, &law, 5).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].residue, 0);
    }

    #[test]
    fn generator_order_does_not_matter() {
        let law = LabeledLaw {
            op: CarrierOp::MulMod,
            t: Combine::Min,
            i: Combine::Max,
            f: Combine::Max,
        };
        let a = LabeledResidue::single(0, r("-0.1"), r("0.1"), r("0.7"));
        let b = LabeledResidue::single(2, r("0.8"), r("0.2"), r("0.4"));
        let fwd = generate_labeled_structure(&[a.clone(), b.clone()], &law, 3).unwrap();
        let rev = generate_labeled_structure(&[b, a], &law, 3).unwrap();
        assert_eq!(fwd, rev);
    }

    fn frame() -> ThresholdFrame {
        ThresholdFrame::uniform(r("-1.2"), r("1.2")).unwrap()
    }

    fn constant(name: &str, t: Rat, i: Rat, f: Rat, fr: &ThresholdFrame) -> OffCollection {
        let mut c = OffCollection::new(name, fr.clone());
        c.insert(Element::crisp("u1", t, i, f, fr).unwrap()).unwrap();
        c
    }

    #[test]
    fn closure_of_characteristic_family() {
        let fr = frame();
        let psi = r("-1.2");
        let omega = r("1.2");
        // A bottom/middle/top chain over one element; the symmetric frame
        // makes each member its own or its sibling's swap complement.
        let family = vec![
            constant("bot", psi.clone(), omega.clone(), omega.clone(), &fr),
            constant("mid", int(0), int(0), int(0), &fr),
            constant("top", omega.clone(), psi.clone(), psi.clone(), &fr),
        ];
        let rep = check_closure(&family, NormFamily::MinMax, ComplementVariant::SwapTf).unwrap();
        assert!(rep.closed(), "{rep:?}");
    }

    #[test]
    fn closure_violation_reported() {
        let fr = frame();
        let family = vec![constant("a", r("0.5"), r("0.2"), r("0.1"), &fr)];
        let rep = check_closure(&family, NormFamily::MinMax, ComplementVariant::SwapTf).unwrap();
        assert!(!rep.closed());
        assert!(rep.complement.witness.is_some());
    }

    #[test]
    fn topology_two_constant_family_passes() {
        let fr = frame();
        for kind in [TopologyKind::Over, TopologyKind::Under, TopologyKind::Off] {
            let (lo, hi) = topology_constants(&fr, &["u1".to_string()], kind).unwrap();
            let family = vec![lo, hi];
            let rep = check_topology(&family, &fr, kind).unwrap();
            assert!(rep.all_passed(), "{kind:?}: {rep:?}");
        }
    }

    #[test]
    fn topology_missing_constant_fails_axiom_a() {
        let fr = frame();
        let (lo, _) = topology_constants(&fr, &["u1".to_string()], TopologyKind::Over).unwrap();
        let family = vec![lo];
        let rep = check_topology(&family, &fr, TopologyKind::Over).unwrap();
        assert!(!rep.constants.passed);
        assert!(rep.constants.witness.is_some());
    }

    #[test]
    fn topology_union_escape_detected() {
        let fr = frame();
        let (lo, hi) = topology_constants(&fr, &["u1".to_string()], TopologyKind::Over).unwrap();
        // Two incomparable members whose union and intersection escape.
        let e1 = constant("e1", frac(1, 2), frac(1, 5), frac(7, 10), &fr);
        let e2 = constant("e2", frac(3, 10), frac(3, 5), frac(1, 10), &fr);
        let family = vec![lo, hi, e1, e2];
        let rep = check_topology(&family, &fr, TopologyKind::Over).unwrap();
        assert!(!rep.all_passed());
        assert!(!rep.unions.passed || !rep.intersections.passed);
    }
}
