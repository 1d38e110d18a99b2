//! JSON / CSV dataset plumbing. Number literals are parsed as exact rationals
//! straight from their source text (serde_json keeps the raw literal), so
//! load -> save -> load is the identity on canonical forms.

use neutroset::polarity::PoleTriple;
use neutroset::refined::{ComplexElement, RefinedElement, RefinedForm};
use neutroset::stats::{EventRule, OffProbabilityAssessment, RefinedOffProbability, RuleTable};
use neutroset::structures::{
    CarrierOp, Combine, LabeledLaw, LabeledResidue, MatrixCell, NeutroGraph, NeutroMatrix,
    PolarLabel,
};
use neutroset::{
    format_rational, parse_rational, Channel, Element, OffCollection, Piece, Rat, SubsetValue,
    ThresholdFrame,
};
use serde_json::{Map, Value};
use std::path::Path;

pub type DResult<T> = Result<T, String>;

pub fn load_json(path: &Path) -> DResult<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn obj<'a>(v: &'a Value, what: &str) -> DResult<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| format!("{what}: expected an object"))
}

fn field<'a>(m: &'a Map<String, Value>, key: &str, what: &str) -> DResult<&'a Value> {
    m.get(key).ok_or_else(|| format!("{what}: missing \"{key}\""))
}

pub fn parse_rat(v: &Value) -> DResult<Rat> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()).map_err(|e| e.to_string()),
        Value::String(s) => parse_rational(s).map_err(|e| e.to_string()),
        other => Err(format!("expected a number, got {other}")),
    }
}

fn is_scalar(v: &Value) -> bool {
    matches!(v, Value::Number(_) | Value::String(_))
}

/// V = number | [lo, hi] | {lo, hi, lo_open, hi_open} | array of those.
pub fn parse_subset(v: &Value) -> DResult<SubsetValue> {
    match v {
        Value::Number(_) | Value::String(_) => Ok(SubsetValue::point(parse_rat(v)?)),
        Value::Array(items) if items.len() == 2 && items.iter().all(is_scalar) => {
            SubsetValue::closed(parse_rat(&items[0])?, parse_rat(&items[1])?)
                .map_err(|e| e.to_string())
        }
        Value::Array(items) => {
            let parts = items.iter().map(parse_subset).collect::<DResult<Vec<_>>>()?;
            if parts.is_empty() {
                return Err("empty component value".into());
            }
            SubsetValue::union_of(parts).map_err(|e| e.to_string())
        }
        Value::Object(m) => {
            let lo = parse_rat(field(m, "lo", "interval")?)?;
            let hi = parse_rat(field(m, "hi", "interval")?)?;
            let lo_open = m.get("lo_open").and_then(Value::as_bool).unwrap_or(false);
            let hi_open = m.get("hi_open").and_then(Value::as_bool).unwrap_or(false);
            SubsetValue::interval(lo, lo_open, hi, hi_open).map_err(|e| e.to_string())
        }
        other => Err(format!("bad component value {other}")),
    }
}

pub fn rat_to_json(r: &Rat) -> Value {
    let text = format_rational(r);
    if text.contains('/') {
        Value::String(text)
    } else {
        Value::Number(serde_json::Number::from_string_unchecked(text))
    }
}

pub fn subset_to_json(s: &SubsetValue) -> Value {
    let piece_json = |p: &Piece| -> Value {
        if p.is_point() {
            rat_to_json(&p.lo)
        } else if !p.lo_open && !p.hi_open {
            Value::Array(vec![rat_to_json(&p.lo), rat_to_json(&p.hi)])
        } else {
            let mut m = Map::new();
            m.insert("lo".into(), rat_to_json(&p.lo));
            m.insert("hi".into(), rat_to_json(&p.hi));
            if p.lo_open {
                m.insert("lo_open".into(), Value::Bool(true));
            }
            if p.hi_open {
                m.insert("hi_open".into(), Value::Bool(true));
            }
            Value::Object(m)
        }
    };
    match s.pieces() {
        [one] => piece_json(one),
        many => Value::Array(many.iter().map(piece_json).collect()),
    }
}

fn channel_rats(v: &Value, what: &str) -> DResult<(Rat, Rat, Rat)> {
    match v {
        Value::Array(items) if items.len() == 3 => Ok((
            parse_rat(&items[0])?,
            parse_rat(&items[1])?,
            parse_rat(&items[2])?,
        )),
        _ if is_scalar(v) => {
            let r = parse_rat(v)?;
            Ok((r.clone(), r.clone(), r))
        }
        other => Err(format!("{what}: expected a number or a 3-element array, got {other}")),
    }
}

pub fn parse_frame(v: &Value) -> DResult<ThresholdFrame> {
    let m = obj(v, "frame")?;
    let (pt, pi, pf) = channel_rats(field(m, "psi", "frame")?, "frame.psi")?;
    let (ot, oi, of) = channel_rats(field(m, "omega", "frame")?, "frame.omega")?;
    ThresholdFrame::new(pt, ot, pi, oi, pf, of).map_err(|e| e.to_string())
}

pub fn frame_to_json(f: &ThresholdFrame) -> Value {
    let mut m = Map::new();
    m.insert(
        "psi".into(),
        Value::Array(
            [Channel::T, Channel::I, Channel::F]
                .map(|ch| rat_to_json(f.psi(ch)))
                .to_vec(),
        ),
    );
    m.insert(
        "omega".into(),
        Value::Array(
            [Channel::T, Channel::I, Channel::F]
                .map(|ch| rat_to_json(f.omega(ch)))
                .to_vec(),
        ),
    );
    Value::Object(m)
}

fn tif<'a>(m: &'a Map<String, Value>, id: &str) -> DResult<(&'a Value, &'a Value, &'a Value)> {
    Ok((
        field(m, "T", id)?,
        field(m, "I", id)?,
        field(m, "F", id)?,
    ))
}

pub fn load_collection(path: &Path) -> DResult<OffCollection> {
    let root = load_json(path)?;
    collection_from_json(&root, path)
}

pub fn collection_from_json(root: &Value, path: &Path) -> DResult<OffCollection> {
    let m = obj(root, "dataset")?;
    let frame = parse_frame(field(m, "frame", "dataset")?)?;
    let name = m
        .get("name")
        .and_then(Value::as_str)
        .map(str::to_string)
        .unwrap_or_else(|| {
            path.file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "dataset".into())
        });
    let mut out = OffCollection::new(name, frame.clone());
    let elements = obj(field(m, "elements", "dataset")?, "elements")?;
    for (id, ev) in elements {
        let em = obj(ev, id)?;
        let (t, i, f) = tif(em, id)?;
        let e = Element::new(
            id.clone(),
            parse_subset(t).map_err(|e| format!("{id}.T: {e}"))?,
            parse_subset(i).map_err(|e| format!("{id}.I: {e}"))?,
            parse_subset(f).map_err(|e| format!("{id}.F: {e}"))?,
            &frame,
        )
        .map_err(|e| e.to_string())?;
        out.insert(e).map_err(|e| e.to_string())?;
    }
    Ok(out)
}

pub fn collection_to_json(c: &OffCollection) -> Value {
    let mut elements = Map::new();
    for e in c.elements() {
        let mut em = Map::new();
        for ch in [Channel::T, Channel::I, Channel::F] {
            em.insert(ch.letter().to_string(), subset_to_json(e.component(ch)));
        }
        elements.insert(e.id.clone(), Value::Object(em));
    }
    let mut m = Map::new();
    m.insert("name".into(), Value::String(c.name.clone()));
    m.insert("frame".into(), frame_to_json(c.frame()));
    m.insert("elements".into(), Value::Object(elements));
    Value::Object(m)
}

fn parse_pole_triple(v: &Value, what: &str) -> DResult<PoleTriple> {
    let m = obj(v, what)?;
    let (t, i, f) = tif(m, what)?;
    Ok(PoleTriple::new(
        parse_subset(t)?,
        parse_subset(i)?,
        parse_subset(f)?,
    ))
}

pub fn parse_label(v: &Value, what: &str) -> DResult<PolarLabel> {
    let m = obj(v, what)?;
    if m.contains_key("T") {
        return Ok(PolarLabel::Plain(parse_pole_triple(v, what)?));
    }
    let pos = field(m, "pos", what)?;
    let neg = field(m, "neg", what)?;
    if pos.is_array() || neg.is_array() {
        let list = |v: &Value| -> DResult<Vec<PoleTriple>> {
            v.as_array()
                .ok_or_else(|| format!("{what}: pos/neg must both be arrays"))?
                .iter()
                .map(|t| parse_pole_triple(t, what))
                .collect()
        };
        return Ok(PolarLabel::Multipolar {
            pos: list(pos)?,
            neu: parse_pole_triple(field(m, "neu", what)?, what)?,
            neg: list(neg)?,
        });
    }
    match m.get("neu") {
        Some(neu) => Ok(PolarLabel::Tripolar {
            pos: parse_pole_triple(pos, what)?,
            neu: parse_pole_triple(neu, what)?,
            neg: parse_pole_triple(neg, what)?,
        }),
        None => Ok(PolarLabel::Bipolar {
            pos: parse_pole_triple(pos, what)?,
            neg: parse_pole_triple(neg, what)?,
        }),
    }
}

pub fn load_graph(path: &Path) -> DResult<NeutroGraph> {
    let root = load_json(path)?;
    let m = obj(&root, "graph")?;
    let mut vertices = indexmap::IndexMap::new();
    for (id, lv) in obj(field(m, "vertices", "graph")?, "vertices")? {
        vertices.insert(id.clone(), parse_label(lv, id)?);
    }
    let mut edges = Vec::new();
    for (k, ev) in field(m, "edges", "graph")?
        .as_array()
        .ok_or("edges: expected an array")?
        .iter()
        .enumerate()
    {
        let what = format!("edge {k}");
        let arr = ev.as_array().ok_or_else(|| format!("{what}: expected [u, v, label]"))?;
        if arr.len() != 3 {
            return Err(format!("{what}: expected [u, v, label]"));
        }
        let name = |v: &Value| -> DResult<String> {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| format!("{what}: endpoint must be a vertex id"))
        };
        edges.push((name(&arr[0])?, name(&arr[1])?, parse_label(&arr[2], &what)?));
    }
    NeutroGraph::new(vertices, edges).map_err(|e| e.to_string())
}

pub fn load_matrix(path: &Path) -> DResult<NeutroMatrix> {
    let root = load_json(path)?;
    let m = obj(&root, "matrix")?;
    let mut rows = Vec::new();
    for (rk, rv) in field(m, "rows", "matrix")?
        .as_array()
        .ok_or("rows: expected an array of rows")?
        .iter()
        .enumerate()
    {
        let mut row = Vec::new();
        for (ck, cv) in rv
            .as_array()
            .ok_or_else(|| format!("row {rk}: expected an array of cells"))?
            .iter()
            .enumerate()
        {
            let what = format!("cell ({rk}, {ck})");
            let cm = obj(cv, &what)?;
            let (value, label) = if let Some(lv) = cm.get("label") {
                let value = cm.get("value").map(parse_rat).transpose()?;
                (value, parse_label(lv, &what)?)
            } else {
                (None, parse_label(cv, &what)?)
            };
            row.push(MatrixCell { value, label });
        }
        rows.push(row);
    }
    NeutroMatrix::new(rows).map_err(|e| e.to_string())
}

/// Tripolar/bipolar/multipolar element files: elements mapped to polar labels.
pub fn load_polar_elements(path: &Path) -> DResult<Vec<(String, PolarLabel)>> {
    let root = load_json(path)?;
    let m = obj(&root, "dataset")?;
    let mut out = Vec::new();
    for (id, lv) in obj(field(m, "elements", "dataset")?, "elements")? {
        out.push((id.clone(), parse_label(lv, id)?));
    }
    if out.is_empty() {
        return Err("no elements".into());
    }
    Ok(out)
}

pub fn load_probability(path: &Path) -> DResult<Vec<OffProbabilityAssessment>> {
    let root = load_json(path)?;
    let m = obj(&root, "probability space")?;
    let frame = parse_frame(field(m, "frame", "probability space")?)?;
    let mut out = Vec::new();
    for (event, av) in obj(field(m, "events", "probability space")?, "events")? {
        let am = obj(av, event)?;
        out.push(
            OffProbabilityAssessment::new(
                event.clone(),
                parse_subset(field(am, "occurs", event)?)?,
                parse_subset(field(am, "indet", event)?)?,
                parse_subset(field(am, "not", event)?)?,
                &frame,
            )
            .map_err(|e| e.to_string())?,
        );
    }
    if out.is_empty() {
        return Err("no events".into());
    }
    Ok(out)
}

pub fn load_refined_probability(path: &Path) -> DResult<Vec<RefinedOffProbability>> {
    let root = load_json(path)?;
    let m = obj(&root, "probability space")?;
    let mut out = Vec::new();
    let list = |v: &Value| -> DResult<Vec<SubsetValue>> {
        v.as_array()
            .ok_or("refined chances must be arrays")?
            .iter()
            .map(parse_subset)
            .collect()
    };
    for (event, av) in obj(field(m, "events", "probability space")?, "events")? {
        let am = obj(av, event)?;
        out.push(
            RefinedOffProbability::new(
                event.clone(),
                list(field(am, "occurs", event)?)?,
                list(field(am, "indet", event)?)?,
                list(field(am, "not", event)?)?,
            )
            .map_err(|e| e.to_string())?,
        );
    }
    if out.is_empty() {
        return Err("no events".into());
    }
    Ok(out)
}

pub fn load_refined(path: &Path) -> DResult<Vec<RefinedElement>> {
    let root = load_json(path)?;
    let m = obj(&root, "refined dataset")?;
    let frame = parse_frame(field(m, "frame", "refined dataset")?)?;
    let form = match field(m, "form", "refined dataset")?.as_str() {
        Some("neutrosophic") => RefinedForm::Neutrosophic,
        Some("fuzzy") => RefinedForm::Fuzzy,
        Some("intuitionistic") => RefinedForm::Intuitionistic,
        other => return Err(format!("form: expected neutrosophic/fuzzy/intuitionistic, got {other:?}")),
    };
    let list = |v: Option<&Value>| -> DResult<Vec<SubsetValue>> {
        match v {
            None => Ok(Vec::new()),
            Some(v) => v
                .as_array()
                .ok_or("refined components must be arrays")?
                .iter()
                .map(parse_subset)
                .collect(),
        }
    };
    let mut out = Vec::new();
    for (id, ev) in obj(field(m, "elements", "refined dataset")?, "elements")? {
        let em = obj(ev, id)?;
        out.push(
            RefinedElement::new(
                id.clone(),
                form,
                list(em.get("T"))?,
                list(em.get("I"))?,
                list(em.get("F"))?,
                &frame,
            )
            .map_err(|e| e.to_string())?,
        );
    }
    if out.is_empty() {
        return Err("no elements".into());
    }
    Ok(out)
}

pub fn load_complex(path: &Path) -> DResult<Vec<ComplexElement>> {
    let root = load_json(path)?;
    let m = obj(&root, "complex dataset")?;
    let frame = parse_frame(field(m, "frame", "complex dataset")?)?;
    let mut out = Vec::new();
    for (id, ev) in obj(field(m, "elements", "complex dataset")?, "elements")? {
        let em = obj(ev, id)?;
        let part = |ch: &str| -> DResult<(SubsetValue, SubsetValue)> {
            let pm = obj(field(em, ch, id)?, ch)?;
            Ok((
                parse_subset(field(pm, "amp", ch)?)?,
                parse_subset(field(pm, "phase", ch)?)?,
            ))
        };
        let (ta, tp) = part("T")?;
        let (ia, ip) = part("I")?;
        let (fa, fp) = part("F")?;
        out.push(
            ComplexElement::new(id.clone(), ta, tp, ia, ip, fa, fp, &frame)
                .map_err(|e| e.to_string())?,
        );
    }
    if out.is_empty() {
        return Err("no elements".into());
    }
    Ok(out)
}

pub struct StructureSpec {
    pub generators: Vec<LabeledResidue>,
    pub law: LabeledLaw,
    pub modulus: u64,
}

pub fn load_structure(path: &Path) -> DResult<StructureSpec> {
    let root = load_json(path)?;
    let m = obj(&root, "structure")?;
    let modulus = field(m, "modulus", "structure")?
        .as_u64()
        .ok_or("modulus: expected a positive integer")?;
    let op = match field(m, "op", "structure")?.as_str() {
        Some("add") => CarrierOp::AddMod,
        Some("mul") => CarrierOp::MulMod,
        other => return Err(format!("op: expected \"add\" or \"mul\", got {other:?}")),
    };
    let cm = obj(field(m, "combine", "structure")?, "combine")?;
    let comb = |key: &str| -> DResult<Combine> {
        match field(cm, key, "combine")?.as_str() {
            Some("min") => Ok(Combine::Min),
            Some("max") => Ok(Combine::Max),
            other => Err(format!("combine.{key}: expected \"min\" or \"max\", got {other:?}")),
        }
    };
    let law = LabeledLaw {
        op,
        t: comb("t")?,
        i: comb("i")?,
        f: comb("f")?,
    };
    let mut generators = Vec::new();
    for (k, gv) in field(m, "generators", "structure")?
        .as_array()
        .ok_or("generators: expected an array")?
        .iter()
        .enumerate()
    {
        let what = format!("generator {k}");
        let gm = obj(gv, &what)?;
        let residue = field(gm, "residue", &what)?
            .as_u64()
            .ok_or_else(|| format!("{what}: residue must be a nonnegative integer"))?;
        let (t, i, f) = tif(gm, &what)?;
        generators.push(LabeledResidue::single(
            residue,
            parse_rat(t)?,
            parse_rat(i)?,
            parse_rat(f)?,
        ));
    }
    Ok(StructureSpec {
        generators,
        law,
        modulus,
    })
}

pub struct OffnumberSpec {
    pub tri: Option<neutroset::offnumber::TriangularOffnumber>,
    pub trap: Option<neutroset::offnumber::TrapezoidalOffnumber>,
}

pub fn load_offnumber(path: &Path) -> DResult<OffnumberSpec> {
    let root = load_json(path)?;
    let m = obj(&root, "offnumber")?;
    let frame = parse_frame(field(m, "frame", "offnumber")?)?;
    let points = field(m, "points", "offnumber")?
        .as_array()
        .ok_or("points: expected an array of abscissae")?
        .iter()
        .map(parse_rat)
        .collect::<DResult<Vec<_>>>()?;
    let peak = |key: &str| parse_rat(field(m, key, "offnumber")?);
    let (w, u, y) = (peak("w")?, peak("u")?, peak("y")?);
    match points.as_slice() {
        [a1, a2, a3] => Ok(OffnumberSpec {
            tri: Some(
                neutroset::offnumber::TriangularOffnumber::new(
                    a1.clone(),
                    a2.clone(),
                    a3.clone(),
                    w,
                    u,
                    y,
                    frame,
                )
                .map_err(|e| e.to_string())?,
            ),
            trap: None,
        }),
        [a1, a2, a3, a4] => Ok(OffnumberSpec {
            tri: None,
            trap: Some(
                neutroset::offnumber::TrapezoidalOffnumber::new(
                    a1.clone(),
                    a2.clone(),
                    a3.clone(),
                    a4.clone(),
                    w,
                    u,
                    y,
                    frame,
                )
                .map_err(|e| e.to_string())?,
            ),
        }),
        other => Err(format!(
            "points: expected 3 (triangular) or 4 (trapezoidal) abscissae, got {}",
            other.len()
        )),
    }
}

/// Family file for topology / closure checks: named collections over one frame.
pub fn load_family(path: &Path) -> DResult<Vec<OffCollection>> {
    let root = load_json(path)?;
    let m = obj(&root, "family")?;
    let frame_v = field(m, "frame", "family")?.clone();
    let mut out = Vec::new();
    for (name, ev) in obj(field(m, "members", "family")?, "members")? {
        let mut member = Map::new();
        member.insert("name".into(), Value::String(name.clone()));
        member.insert("frame".into(), frame_v.clone());
        member.insert("elements".into(), ev.clone());
        out.push(collection_from_json(&Value::Object(member), path)?);
    }
    if out.is_empty() {
        return Err("empty family".into());
    }
    Ok(out)
}

/// CSV sample: header id,t,i,f with exact decimal literals.
pub fn load_sample(path: &Path) -> DResult<Vec<(String, (Rat, Rat, Rat))>> {
    let mut reader = csv::Reader::from_path(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let headers = reader.headers().map_err(|e| e.to_string())?.clone();
    let expected = ["id", "t", "i", "f"];
    let got: Vec<_> = headers.iter().map(str::trim).collect();
    if got != expected {
        return Err(format!("sample header must be id,t,i,f, got {}", got.join(",")));
    }
    let mut out = Vec::new();
    for (k, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| e.to_string())?;
        if rec.len() != 4 {
            return Err(format!("row {}: expected 4 fields", k + 2));
        }
        let cell = |j: usize| {
            parse_rational(rec[j].trim())
                .map_err(|e| format!("row {}: {e}", k + 2))
        };
        out.push((rec[0].trim().to_string(), (cell(1)?, cell(2)?, cell(3)?)));
    }
    if out.is_empty() {
        return Err("empty sample".into());
    }
    Ok(out)
}

/// Rules file: list of {event, points_t, count_i, count_f}.
pub fn load_rules(path: &Path) -> DResult<RuleTable> {
    let root = load_json(path)?;
    let list = root.as_array().ok_or("rules: expected an array")?;
    let mut out = RuleTable::new();
    for (k, rv) in list.iter().enumerate() {
        let what = format!("rule {k}");
        let rm = obj(rv, &what)?;
        let event = field(rm, "event", &what)?
            .as_str()
            .ok_or_else(|| format!("{what}: event must be a string"))?;
        out.insert(
            event.to_string(),
            EventRule {
                points_t: parse_rat(field(rm, "points_t", &what)?)?,
                count_i: parse_rat(field(rm, "count_i", &what)?)?,
                count_f: parse_rat(field(rm, "count_f", &what)?)?,
            },
        );
    }
    if out.is_empty() {
        return Err("no rules".into());
    }
    Ok(out)
}

/// Raw contribution log: {individual: {event: count}} in file order.
pub fn load_contributions(path: &Path) -> DResult<Vec<(String, Vec<(String, Rat)>)>> {
    let root = load_json(path)?;
    let m = obj(&root, "contributions")?;
    let mut out = Vec::new();
    for (who, ev) in m {
        let em = obj(ev, who)?;
        let mut events = Vec::new();
        for (event, count) in em {
            events.push((event.clone(), parse_rat(count)?));
        }
        out.push((who.clone(), events));
    }
    if out.is_empty() {
        return Err("no individuals".into());
    }
    Ok(out)
}
