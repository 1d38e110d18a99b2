use crate::element::{Element, OffCollection};
use crate::error::{Error, Result};
use crate::frame::{Channel, ThresholdFrame};
use crate::rat::{format_rational, int, Rat};
use crate::subset::{Piece, SubsetValue};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormFamily {
    /// min for the norm, max for the conorm.
    MinMax,
    /// max{psi, a + b - omega} / min{omega, a + b}.
    Bounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementVariant {
    /// <F, psi_I + omega_I - I, T>
    SwapTf,
    /// <psi_T + omega_T - T, I, psi_F + omega_F - F>
    ReflectTf,
    /// reflect every channel
    ReflectAll,
}

/// Pointwise x -> psi + omega - x.
pub fn component_complement(v: &SubsetValue, psi: &Rat, omega: &Rat) -> SubsetValue {
    v.reflect(&(psi + omega))
}

// Set-accurate min of two intervals: {min(x, y)}.
fn piece_min(a: &Piece, b: &Piece) -> Piece {
    let (lo, lo_open) = match a.lo.cmp(&b.lo) {
        std::cmp::Ordering::Less => (a.lo.clone(), a.lo_open),
        std::cmp::Ordering::Greater => (b.lo.clone(), b.lo_open),
        std::cmp::Ordering::Equal => (a.lo.clone(), a.lo_open && b.lo_open),
    };
    let (hi, hi_open) = match a.hi.cmp(&b.hi) {
        std::cmp::Ordering::Less => (a.hi.clone(), a.hi_open),
        std::cmp::Ordering::Greater => (b.hi.clone(), b.hi_open),
        std::cmp::Ordering::Equal => (a.hi.clone(), a.hi_open || b.hi_open),
    };
    normalized(lo, lo_open, hi, hi_open)
}

// Set-accurate max of two intervals: {max(x, y)}.
fn piece_max(a: &Piece, b: &Piece) -> Piece {
    let (lo, lo_open) = match a.lo.cmp(&b.lo) {
        std::cmp::Ordering::Greater => (a.lo.clone(), a.lo_open),
        std::cmp::Ordering::Less => (b.lo.clone(), b.lo_open),
        std::cmp::Ordering::Equal => (a.lo.clone(), a.lo_open || b.lo_open),
    };
    let (hi, hi_open) = match a.hi.cmp(&b.hi) {
        std::cmp::Ordering::Greater => (a.hi.clone(), a.hi_open),
        std::cmp::Ordering::Less => (b.hi.clone(), b.hi_open),
        std::cmp::Ordering::Equal => (a.hi.clone(), a.hi_open && b.hi_open),
    };
    normalized(lo, lo_open, hi, hi_open)
}

fn piece_sum(a: &Piece, b: &Piece) -> Piece {
    Piece {
        lo: &a.lo + &b.lo,
        lo_open: a.lo_open || b.lo_open,
        hi: &a.hi + &b.hi,
        hi_open: a.hi_open || b.hi_open,
    }
}

// Image under x -> max(floor, x).
fn clamp_lo(p: Piece, floor: &Rat) -> Piece {
    if &p.hi <= floor {
        return Piece {
            lo: floor.clone(),
            lo_open: false,
            hi: floor.clone(),
            hi_open: false,
        };
    }
    if &p.lo < floor {
        return Piece {
            lo: floor.clone(),
            lo_open: false,
            hi: p.hi,
            hi_open: p.hi_open,
        };
    }
    p
}

// Image under x -> min(ceiling, x).
fn clamp_hi(p: Piece, ceiling: &Rat) -> Piece {
    if &p.lo >= ceiling {
        return Piece {
            lo: ceiling.clone(),
            lo_open: false,
            hi: ceiling.clone(),
            hi_open: false,
        };
    }
    if &p.hi > ceiling {
        return Piece {
            lo: p.lo,
            lo_open: p.lo_open,
            hi: ceiling.clone(),
            hi_open: false,
        };
    }
    p
}

fn normalized(lo: Rat, lo_open: bool, hi: Rat, hi_open: bool) -> Piece {
    // The image of a nonempty set is nonempty; a degenerate result is a point.
    if lo == hi {
        Piece {
            lo,
            lo_open: false,
            hi,
            hi_open: false,
        }
    } else {
        Piece {
            lo,
            lo_open,
            hi,
            hi_open,
        }
    }
}

fn from_piece(p: Piece) -> SubsetValue {
    SubsetValue::from_pieces(vec![p]).expect("combined piece is nonempty")
}

/// Conjunction component operator on [psi, omega]; multi-piece values are hulled.
pub fn offnorm(
    fam: NormFamily,
    a: &SubsetValue,
    b: &SubsetValue,
    psi: &Rat,
    omega: &Rat,
) -> SubsetValue {
    let (ha, hb) = (a.hull(), b.hull());
    match fam {
        NormFamily::MinMax => from_piece(piece_min(&ha, &hb)),
        NormFamily::Bounded => {
            let mut s = piece_sum(&ha, &hb);
            s.lo -= omega;
            s.hi -= omega;
            from_piece(clamp_lo(s, psi))
        }
    }
}

/// Disjunction component operator, dual of `offnorm`.
pub fn offconorm(
    fam: NormFamily,
    a: &SubsetValue,
    b: &SubsetValue,
    psi: &Rat,
    omega: &Rat,
) -> SubsetValue {
    let (ha, hb) = (a.hull(), b.hull());
    match fam {
        NormFamily::MinMax => from_piece(piece_max(&ha, &hb)),
        // min{omega, a + b} can dip below psi when both inputs are deeply
        // negative; the set-level operator stays frame-closed, while the crisp
        // `conorm_fn` keeps the literal formula for axiom reporting.
        NormFamily::Bounded => {
            from_piece(clamp_lo(clamp_hi(piece_sum(&ha, &hb), omega), psi))
        }
    }
}

/// <T1 and T2, I1 or I2, F1 or F2> with channel-appropriate bounds.
pub fn off_and(
    e1: &Element,
    e2: &Element,
    fam: NormFamily,
    frame: &ThresholdFrame,
) -> Result<Element> {
    let t = offnorm(
        fam,
        &e1.t,
        &e2.t,
        frame.psi(Channel::T),
        frame.omega(Channel::T),
    );
    let i = offconorm(
        fam,
        &e1.i,
        &e2.i,
        frame.psi(Channel::I),
        frame.omega(Channel::I),
    );
    let f = offconorm(
        fam,
        &e1.f,
        &e2.f,
        frame.psi(Channel::F),
        frame.omega(Channel::F),
    );
    Element::new(e1.id.clone(), t, i, f, frame)
}

/// <T1 or T2, I1 and I2, F1 and F2>, dual of `off_and`.
pub fn off_or(
    e1: &Element,
    e2: &Element,
    fam: NormFamily,
    frame: &ThresholdFrame,
) -> Result<Element> {
    let t = offconorm(
        fam,
        &e1.t,
        &e2.t,
        frame.psi(Channel::T),
        frame.omega(Channel::T),
    );
    let i = offnorm(
        fam,
        &e1.i,
        &e2.i,
        frame.psi(Channel::I),
        frame.omega(Channel::I),
    );
    let f = offnorm(
        fam,
        &e1.f,
        &e2.f,
        frame.psi(Channel::F),
        frame.omega(Channel::F),
    );
    Element::new(e1.id.clone(), t, i, f, frame)
}

fn zip_collections(
    a: &OffCollection,
    b: &OffCollection,
    name: String,
    mut op: impl FnMut(&Element, &Element) -> Result<Element>,
) -> Result<OffCollection> {
    if a.frame() != b.frame() {
        return Err(Error::FrameMismatch);
    }
    if !a.same_domain(b) {
        let missing: Vec<&String> = a
            .ids()
            .filter(|id| b.get(id).is_none())
            .chain(b.ids().filter(|id| a.get(id).is_none()))
            .collect();
        return Err(Error::DomainMismatch(format!("{missing:?}")));
    }
    let mut out = OffCollection::new(name, a.frame().clone());
    for ea in a.elements() {
        let eb = b.get(&ea.id).unwrap();
        out.insert(op(ea, eb)?)?;
    }
    Ok(out)
}

pub fn off_union(a: &OffCollection, b: &OffCollection, fam: NormFamily) -> Result<OffCollection> {
    let frame = a.frame().clone();
    zip_collections(a, b, format!("({} | {})", a.name, b.name), |x, y| {
        off_or(x, y, fam, &frame)
    })
}

pub fn off_intersection(
    a: &OffCollection,
    b: &OffCollection,
    fam: NormFamily,
) -> Result<OffCollection> {
    let frame = a.frame().clone();
    zip_collections(a, b, format!("({} & {})", a.name, b.name), |x, y| {
        off_and(x, y, fam, &frame)
    })
}

pub fn off_complement(a: &OffCollection, variant: ComplementVariant) -> Result<OffCollection> {
    let frame = a.frame().clone();
    if variant == ComplementVariant::SwapTf
        && (frame.psi(Channel::T) != frame.psi(Channel::F)
            || frame.omega(Channel::T) != frame.omega(Channel::F))
    {
        return Err(Error::SwapNeedsSymmetricFrame);
    }
    let reflect =
        |v: &SubsetValue, ch: Channel| component_complement(v, frame.psi(ch), frame.omega(ch));
    let mut out = OffCollection::new(format!("!{}", a.name), frame.clone());
    for e in a.elements() {
        let (t, i, f) = match variant {
            ComplementVariant::SwapTf => (
                e.f.clone(),
                reflect(&e.i, Channel::I),
                e.t.clone(),
            ),
            ComplementVariant::ReflectTf => (
                reflect(&e.t, Channel::T),
                e.i.clone(),
                reflect(&e.f, Channel::F),
            ),
            ComplementVariant::ReflectAll => (
                reflect(&e.t, Channel::T),
                reflect(&e.i, Channel::I),
                reflect(&e.f, Channel::F),
            ),
        };
        out.insert(Element::new(e.id.clone(), t, i, f, &frame)?)?;
    }
    Ok(out)
}

/// Crisp binary maps on [psi, omega] used as axiom-check candidates.
pub fn norm_fn(fam: NormFamily, psi: &Rat, omega: &Rat) -> impl Fn(&Rat, &Rat) -> Rat {
    let (psi, omega) = (psi.clone(), omega.clone());
    move |a: &Rat, b: &Rat| match fam {
        NormFamily::MinMax => a.min(b).clone(),
        NormFamily::Bounded => psi.clone().max(a + b - &omega),
    }
}

pub fn conorm_fn(fam: NormFamily, psi: &Rat, omega: &Rat) -> impl Fn(&Rat, &Rat) -> Rat {
    let (_psi, omega) = (psi.clone(), omega.clone());
    move |a: &Rat, b: &Rat| match fam {
        NormFamily::MinMax => a.max(b).clone(),
        NormFamily::Bounded => omega.clone().min(a + b),
    }
}

/// The classical algebraic product, kept as the paper's failing candidate.
pub fn algebraic_product() -> impl Fn(&Rat, &Rat) -> Rat {
    |a: &Rat, b: &Rat| a * b
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl std::fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            match (&c.passed, &c.counterexample) {
                (true, _) => writeln!(f, "  {}: pass", c.name)?,
                (false, Some(ce)) => writeln!(f, "  {}: FAIL ({ce})", c.name)?,
                (false, None) => writeln!(f, "  {}: FAIL", c.name)?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomRole {
    Norm,
    Conorm,
}

fn sample_grid(psi: &Rat, omega: &Rat, sample_count: usize, seed: u64) -> Vec<Rat> {
    let hundred = int(100);
    let lo = (psi * &hundred).ceil().to_integer();
    let hi = (omega * &hundred).floor().to_integer();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut grid = vec![psi.clone(), int(0), int(1), omega.clone()];
    let span: num_bigint::BigInt = &hi - &lo;
    let span_u: u128 = span.try_into().unwrap_or(0);
    for _ in 0..sample_count {
        let offset: u128 = if span_u == 0 { 0 } else { rng.gen_range(0..=span_u) };
        let numer = &lo + num_bigint::BigInt::from(offset);
        grid.push(Rat::new(numer, 100.into()));
    }
    grid.sort();
    grid.dedup();
    grid
}

/// Checks overbounding, commutativity, monotonicity, associativity, and range
/// closure for a candidate crisp operator on a seeded grid plus the boundary
/// points {psi, 0, 1, omega}. Reports the first counterexample per axiom.
pub fn verify_norm_axioms(
    op: &dyn Fn(&Rat, &Rat) -> Rat,
    role: AxiomRole,
    psi: &Rat,
    omega: &Rat,
    sample_count: usize,
    seed: u64,
) -> AxiomReport {
    let grid = sample_grid(psi, omega, sample_count, seed);
    let fmt = format_rational;
    let mut checks = Vec::new();

    let (absorb, absorb_name, neutral, neutral_name) = match role {
        AxiomRole::Norm => (psi, "psi", omega, "omega"),
        AxiomRole::Conorm => (omega, "omega", psi, "psi"),
    };
    let mut overbounding = AxiomCheck {
        name: "overbounding",
        passed: true,
        counterexample: None,
    };
    for a in &grid {
        let at_absorb = op(a, absorb);
        if &at_absorb != absorb {
            overbounding.passed = false;
            overbounding.counterexample = Some(format!(
                "op({}, {absorb_name}) = {} != {}",
                fmt(a),
                fmt(&at_absorb),
                fmt(absorb)
            ));
            break;
        }
        let at_neutral = op(a, neutral);
        if &at_neutral != a {
            overbounding.passed = false;
            overbounding.counterexample = Some(format!(
                "op({}, {neutral_name}) = {} != {}",
                fmt(a),
                fmt(&at_neutral),
                fmt(a)
            ));
            break;
        }
    }
    checks.push(overbounding);

    let mut commutativity = AxiomCheck {
        name: "commutativity",
        passed: true,
        counterexample: None,
    };
    'comm: for a in &grid {
        for b in &grid {
            if op(a, b) != op(b, a) {
                commutativity.passed = false;
                commutativity.counterexample =
                    Some(format!("op({}, {}) != op({}, {})", fmt(a), fmt(b), fmt(b), fmt(a)));
                break 'comm;
            }
        }
    }
    checks.push(commutativity);

    // Pair the grid with shifted copies of itself so the triple scans stay
    // linear in the grid size while still exercising unequal arguments.
    let shifted = |k: usize| grid.iter().cycle().skip(k).take(grid.len());
    let mut monotonicity = AxiomCheck {
        name: "monotonicity",
        passed: true,
        counterexample: None,
    };
    'mono: for a in &grid {
        for a2 in &grid {
            if a > a2 {
                continue;
            }
            for b in shifted(7) {
                if op(a, b) > op(a2, b) {
                    monotonicity.passed = false;
                    monotonicity.counterexample = Some(format!(
                        "a={} <= a'={} but op(a, {}) > op(a', {})",
                        fmt(a),
                        fmt(a2),
                        fmt(b),
                        fmt(b)
                    ));
                    break 'mono;
                }
            }
        }
    }
    checks.push(monotonicity);

    let mut associativity = AxiomCheck {
        name: "associativity",
        passed: true,
        counterexample: None,
    };
    'assoc: for a in &grid {
        for (b, c) in shifted(3).zip(shifted(11)) {
            if op(&op(a, b), c) != op(a, &op(b, c)) {
                associativity.passed = false;
                associativity.counterexample = Some(format!(
                    "op(op({}, {}), {}) != op({}, op({}, {}))",
                    fmt(a),
                    fmt(b),
                    fmt(c),
                    fmt(a),
                    fmt(b),
                    fmt(c)
                ));
                break 'assoc;
            }
        }
    }
    checks.push(associativity);

    let mut closure = AxiomCheck {
        name: "closure",
        passed: true,
        counterexample: None,
    };
    'clos: for a in &grid {
        for b in shifted(5) {
            let v = op(a, b);
            if &v < psi || &v > omega {
                closure.passed = false;
                closure.counterexample = Some(format!(
                    "op({}, {}) = {} outside [{}, {}]",
                    fmt(a),
                    fmt(b),
                    fmt(&v),
                    fmt(psi),
                    fmt(omega)
                ));
                break 'clos;
            }
        }
    }
    checks.push(closure);

    AxiomReport { checks }
}
