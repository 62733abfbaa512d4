//! JSON encodings. Cyclotomic integers are arrays of power-basis coefficients,
//! constant term first; field elements are their dlog or the string `"0"`.
//! Keys are written in a fixed order so output is byte-stable.

use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::bmfunc::IotaFunctional;
use crate::chars::{BrauerIrredLabel, Weight};
use crate::classfn::{ClassFn, Group, SsClass};
use crate::error::{Error, Result};
use crate::jl::{basis_label_index, basis_labels, BasisLabel, GrothElt};
use crate::scalars::{CycInt, FieldCtx, FlElem};

impl Serialize for CycInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs().serialize(s)
    }
}

impl Serialize for FlElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.dlog() {
            Some(t) => s.serialize_u32(t),
            None => s.serialize_str("0"),
        }
    }
}

/// Reads a field element written as a dlog or `"0"`, reducing the dlog mod `n`.
pub fn fl_from_json(ctx: &FieldCtx, v: &serde_json::Value) -> Result<FlElem> {
    match v {
        serde_json::Value::String(s) if s == "0" => Ok(FlElem::ZERO),
        serde_json::Value::Number(t) if t.as_i64().is_some() => Ok(ctx.gamma_pow(t.as_i64().unwrap_or_default())),
        other => Err(Error::Schema(format!("field element {other} is neither a dlog nor \"0\""))),
    }
}

/// A conjugacy-class label. `Element` labels classes of the abelian group
/// `l^×` by the dlog of the element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ClassLabel {
    Central { x: u32 },
    Split { x: u32, y: u32 },
    Elliptic { z: u32 },
    Element { t: u32 },
}

impl From<SsClass> for ClassLabel {
    fn from(c: SsClass) -> Self {
        match c {
            SsClass::Central { x } => ClassLabel::Central { x },
            SsClass::Split { x, y } => ClassLabel::Split { x, y },
            SsClass::Elliptic { z } => ClassLabel::Elliptic { z },
        }
    }
}

pub fn class_labels(ctx: &FieldCtx, group: Group) -> Vec<ClassLabel> {
    match group {
        Group::Gl2 => ctx.ss_classes().iter().map(|&c| c.into()).collect(),
        Group::Lx => (0..ctx.n()).map(|t| ClassLabel::Element { t }).collect(),
    }
}

/// A basis label: `{"r": [...], "m": m}` on `GL2`, `{"exp": e}` on `l^×`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelJson {
    Irred { r: Vec<u32>, m: u32 },
    LChar { exp: u32 },
}

impl From<&BasisLabel> for LabelJson {
    fn from(l: &BasisLabel) -> Self {
        match l {
            BasisLabel::Irred(b) => LabelJson::Irred { r: b.r.clone(), m: b.m },
            BasisLabel::LChar(e) => LabelJson::LChar { exp: *e },
        }
    }
}

impl From<LabelJson> for BasisLabel {
    fn from(l: LabelJson) -> Self {
        match l {
            LabelJson::Irred { r, m } => BasisLabel::Irred(BrauerIrredLabel::new(r, m)),
            LabelJson::LChar { exp } => BasisLabel::LChar(exp),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassValue {
    pub class: ClassLabel,
    pub value: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassFnJson {
    pub group: String,
    pub q: u32,
    pub values: Vec<ClassValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelValue {
    pub label: LabelJson,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrothJson {
    pub group: String,
    pub q: u32,
    pub basis: String,
    pub coeffs: Vec<LabelValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IotaJson {
    pub group: String,
    pub q: u32,
    pub entries: Vec<LabelValue>,
}

fn basis_name(group: Group) -> &'static str {
    match group {
        Group::Gl2 => "brauer-irred",
        Group::Lx => "l-characters",
    }
}

fn check_q(ctx: &FieldCtx, q: u32) -> Result<()> {
    if q != ctx.q() {
        return Err(Error::Schema(format!("document is for q = {q}, context has q = {}", ctx.q())));
    }
    Ok(())
}

pub fn classfn_to_json(ctx: &FieldCtx, chi: &ClassFn) -> ClassFnJson {
    let values = class_labels(ctx, chi.group())
        .into_iter()
        .zip(chi.values())
        .map(|(class, v)| ClassValue { class, value: v.coeffs().to_vec() })
        .collect();
    ClassFnJson { group: chi.group().tag().into(), q: chi.q(), values }
}

/// Every class must appear exactly once, in any order.
pub fn classfn_from_json(ctx: &FieldCtx, doc: &ClassFnJson) -> Result<ClassFn> {
    check_q(ctx, doc.q)?;
    let group = Group::from_tag(&doc.group)?;
    let labels = class_labels(ctx, group);
    let mut values: Vec<Option<CycInt>> = vec![None; labels.len()];
    for entry in &doc.values {
        let idx = labels
            .iter()
            .position(|l| *l == entry.class)
            .ok_or_else(|| Error::Schema(format!("unknown class {:?}", entry.class)))?;
        if values[idx].is_some() {
            return Err(Error::Schema(format!("class {:?} listed twice", entry.class)));
        }
        values[idx] = Some(CycInt::from_coeffs(ctx.ring(), entry.value.clone())?);
    }
    let values = values
        .into_iter()
        .zip(&labels)
        .map(|(v, l)| v.ok_or_else(|| Error::Schema(format!("class {l:?} missing"))))
        .collect::<Result<Vec<_>>>()?;
    ClassFn::from_values(ctx, group, values)
}

fn entries(ctx: &FieldCtx, group: Group, coeffs: &[i64], sparse: bool) -> Vec<LabelValue> {
    basis_labels(ctx, group)
        .iter()
        .zip(coeffs)
        .filter(|(_, &v)| !sparse || v != 0)
        .map(|(l, &value)| LabelValue { label: l.into(), value })
        .collect()
}

fn dense(ctx: &FieldCtx, group: Group, items: &[LabelValue]) -> Result<Vec<i64>> {
    let mut out = vec![0i64; group.class_count(ctx)];
    let mut seen = vec![false; out.len()];
    for item in items {
        let idx = basis_label_index(ctx, group, &item.label.clone().into())?;
        if std::mem::replace(&mut seen[idx], true) {
            return Err(Error::Schema(format!("label {:?} listed twice", item.label)));
        }
        out[idx] = item.value;
    }
    Ok(out)
}

/// Sparse: zero coefficients are omitted.
pub fn groth_to_json(ctx: &FieldCtx, v: &GrothElt) -> GrothJson {
    GrothJson {
        group: v.group().tag().into(),
        q: v.q(),
        basis: basis_name(v.group()).into(),
        coeffs: entries(ctx, v.group(), v.coeffs(), true),
    }
}

pub fn groth_from_json(ctx: &FieldCtx, doc: &GrothJson) -> Result<GrothElt> {
    check_q(ctx, doc.q)?;
    let group = Group::from_tag(&doc.group)?;
    if doc.basis != basis_name(group) {
        return Err(Error::Schema(format!("basis {:?} does not match group {}", doc.basis, doc.group)));
    }
    GrothElt::new(ctx, group, dense(ctx, group, &doc.coeffs)?)
}

/// Dense: every label is listed.
pub fn iota_to_json(ctx: &FieldCtx, iota: &IotaFunctional) -> IotaJson {
    IotaJson { group: iota.group().tag().into(), q: iota.q(), entries: entries(ctx, iota.group(), iota.values(), false) }
}

/// Missing labels read as zero.
pub fn iota_from_json(ctx: &FieldCtx, doc: &IotaJson) -> Result<IotaFunctional> {
    check_q(ctx, doc.q)?;
    let group = Group::from_tag(&doc.group)?;
    IotaFunctional::new(ctx, group, dense(ctx, group, &doc.entries)?)
}

/// `[[j, a1, a2], ...]`.
pub fn weight_to_json(w: &Weight) -> Vec<(u32, i64, i64)> {
    w.triples()
}

pub fn weight_from_json(f: u32, triples: &[(u32, i64, i64)]) -> Result<Weight> {
    Weight::from_triples(f, triples)
}

/// Pretty JSON with a trailing newline.
pub fn to_string<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{brauer_irred, l_character};

    #[test]
    fn field_elements() {
        assert_eq!(serde_json::to_string(&FlElem::ZERO).unwrap(), "\"0\"");
        let ctx = FieldCtx::new(3, 1).unwrap();
        assert_eq!(serde_json::to_string(&ctx.gamma_pow(5)).unwrap(), "5");
        assert_eq!(fl_from_json(&ctx, &serde_json::json!("0")).unwrap(), FlElem::ZERO);
        assert_eq!(fl_from_json(&ctx, &serde_json::json!(11)).unwrap(), ctx.gamma_pow(3));
        assert!(fl_from_json(&ctx, &serde_json::json!("x")).is_err());
    }

    #[test]
    fn class_labels_serialize_with_kind() {
        let l = ClassLabel::Split { x: 0, y: 1 };
        assert_eq!(serde_json::to_string(&l).unwrap(), r#"{"kind":"split","x":0,"y":1}"#);
        assert_eq!(serde_json::from_str::<ClassLabel>(r#"{"kind":"elliptic","z":2}"#).unwrap(), ClassLabel::Elliptic { z: 2 });
    }

    #[test]
    fn classfn_round_trip() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let chi = brauer_irred(&ctx, &BrauerIrredLabel::new(vec![1], 1)).unwrap();
        let doc = classfn_to_json(&ctx, &chi);
        assert_eq!(doc.values.len(), 6);
        let text = to_string(&doc).unwrap();
        let back: ClassFnJson = serde_json::from_str(&text).unwrap();
        assert_eq!(classfn_from_json(&ctx, &back).unwrap(), chi);

        let psi = l_character(&ctx, 3);
        assert_eq!(classfn_from_json(&ctx, &classfn_to_json(&ctx, &psi)).unwrap(), psi);
    }

    #[test]
    fn classfn_schema_errors() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let mut doc = classfn_to_json(&ctx, &ClassFn::constant(&ctx, Group::Gl2, 1));
        doc.values.pop();
        assert!(matches!(classfn_from_json(&ctx, &doc), Err(Error::Schema(_))));
        let mut doc = classfn_to_json(&ctx, &ClassFn::constant(&ctx, Group::Gl2, 1));
        doc.q = 5;
        assert!(matches!(classfn_from_json(&ctx, &doc), Err(Error::Schema(_))));
    }

    #[test]
    fn groth_round_trip_is_sparse() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let v = GrothElt::new(&ctx, Group::Gl2, vec![0, 0, 0, 2, -1, 0]).unwrap();
        let doc = groth_to_json(&ctx, &v);
        assert_eq!(doc.coeffs.len(), 2);
        assert_eq!(doc.basis, "brauer-irred");
        assert_eq!(groth_from_json(&ctx, &doc).unwrap(), v);
        let text = serde_json::to_string(&doc.coeffs[0].label).unwrap();
        assert!(text.contains("\"r\""));
    }

    #[test]
    fn iota_round_trip_is_dense() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let iota = IotaFunctional::new(&ctx, Group::Lx, (0..8).collect()).unwrap();
        let doc = iota_to_json(&ctx, &iota);
        assert_eq!(doc.entries.len(), 8);
        assert_eq!(doc.entries[2].label, LabelJson::LChar { exp: 2 });
        assert_eq!(iota_from_json(&ctx, &doc).unwrap(), iota);
    }

    #[test]
    fn weight_triples() {
        let w = Weight::simple(&[(2, 1), (1, 0)]).unwrap();
        let t = weight_to_json(&w);
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[0,2,1],[1,1,0]]");
        assert_eq!(weight_from_json(2, &t).unwrap(), w);
    }
}
