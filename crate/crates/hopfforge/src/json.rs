//! Canonical JSON for Hopf algebras, Yetter–Drinfeld modules, Nichols
//! algebras and lifting data. Keys are sorted, sparse entries are listed in
//! lexicographic order and coefficients are arrays of "p/q" strings, so
//! export → import → export is byte-identical.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::deform::{DeformError, Family, LiftingData};
use crate::hopf::{HopfData, HopfError, HopfParts};
use crate::linalg::SparseVec;
use crate::nichols::{build_nichols, NicholsData, NicholsError};
use crate::scalar::{CycScalar, GroupDatum, ScalarError};
use crate::yd::{YDModule, YdError};

pub const HOPF_SCHEMA: &str = "hopfdata/v1";
pub const YD_SCHEMA: &str = "ydmodule/v1";
pub const NICHOLS_SCHEMA: &str = "nichols/v1";
pub const LIFTING_SCHEMA: &str = "liftingdata/v1";

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("expected schema {expected:?}, found {found:?}")]
    Schema { expected: &'static str, found: String },
    #[error("inconsistent document: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Yd(#[from] YdError),
    #[error(transparent)]
    Nichols(#[from] NicholsError),
    #[error(transparent)]
    Deform(#[from] DeformError),
}

type Coeff = Vec<String>;

fn coeff(c: &CycScalar) -> Coeff {
    c.to_strings()
}

fn scalar(m: u32, c: &Coeff) -> Result<CycScalar, JsonError> {
    Ok(CycScalar::from_strings(m, c)?)
}

fn to_canonical<T: Serialize>(doc: &T) -> String {
    // serde_json::Value keeps object keys in a BTreeMap.
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out
}

/// The "schema" tag of a document.
pub fn schema_of(text: &str) -> Result<String, JsonError> {
    #[derive(Deserialize)]
    struct Tag {
        schema: String,
    }
    Ok(serde_json::from_str::<Tag>(text)?.schema)
}

fn parse<T: DeserializeOwned>(text: &str, expected: &'static str) -> Result<T, JsonError> {
    let found = schema_of(text)?;
    if found != expected {
        return Err(JsonError::Schema { expected, found });
    }
    Ok(serde_json::from_str(text)?)
}

fn check_index(i: usize, bound: usize, what: &str) -> Result<usize, JsonError> {
    if i < bound {
        Ok(i)
    } else {
        Err(JsonError::Inconsistent(format!("{what} index {i} out of range {bound}")))
    }
}

fn pairs_of(v: &SparseVec) -> Vec<(usize, Coeff)> {
    v.iter().map(|(i, c)| (i, coeff(c))).collect()
}

fn vec_of(m: u32, entries: &[(usize, Coeff)], bound: usize) -> Result<SparseVec, JsonError> {
    let mut out = SparseVec::new();
    for (i, c) in entries {
        out.add_term(check_index(*i, bound, "vector")?, &scalar(m, c)?);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HopfDoc {
    schema: String,
    m: u32,
    dim: usize,
    basis_labels: Vec<String>,
    /// [i, j, k, c]: e_i e_j ∋ c e_k.
    mult: Vec<(usize, usize, usize, Coeff)>,
    unit: Vec<(usize, Coeff)>,
    /// [i, j, k, c]: Δ(e_k) ∋ c e_i⊗e_j.
    comult: Vec<(usize, usize, usize, Coeff)>,
    counit: Vec<(usize, Coeff)>,
    /// [i, j, c]: S(e_i) ∋ c e_j.
    antipode: Vec<(usize, usize, Coeff)>,
    grading: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<Vec<(usize, Coeff)>>>,
}

pub fn hopf_to_json(a: &HopfData) -> String {
    let n = a.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.mult_basis(i, j).iter() {
                mult.push((i, j, k, coeff(c)));
            }
        }
    }
    let mut comult = Vec::new();
    for k in 0..n {
        for (pq, c) in a.comult_basis(k).iter() {
            let (p, q) = a.unpair(pq);
            comult.push((p, q, k, coeff(c)));
        }
    }
    comult.sort_by_key(|x| (x.0, x.1, x.2));
    let counit = a.counit_vec().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, coeff(c))).collect();
    let antipode = (0..n).flat_map(|i| a.antipode_basis(i).iter().map(move |(j, c)| (i, j, coeff(c))).collect::<Vec<_>>()).collect();
    to_canonical(&HopfDoc {
        schema: HOPF_SCHEMA.into(),
        m: a.m(),
        dim: n,
        basis_labels: a.labels().to_vec(),
        mult,
        unit: pairs_of(a.one()),
        comult,
        counit,
        antipode,
        grading: a.grading().map(<[u32]>::to_vec),
        generators: a.generator_hint().map(|g| g.iter().map(pairs_of).collect()),
    })
}

/// Parses a hopfdata/v1 document. Only the shape is validated; the axioms
/// are checked on demand by `verify_hopf`.
pub fn hopf_from_json(text: &str) -> Result<HopfData, JsonError> {
    let doc: HopfDoc = parse(text, HOPF_SCHEMA)?;
    let (m, n) = (doc.m, doc.dim);
    GroupDatum::new_unchecked(m)?;
    if doc.basis_labels.len() != n {
        return Err(JsonError::Inconsistent(format!("{} labels for dimension {n}", doc.basis_labels.len())));
    }
    let mut mult = vec![vec![SparseVec::new(); n]; n];
    for (i, j, k, c) in &doc.mult {
        let (i, j) = (check_index(*i, n, "mult")?, check_index(*j, n, "mult")?);
        mult[i][j].add_term(check_index(*k, n, "mult")?, &scalar(m, c)?);
    }
    let mut comult = vec![SparseVec::new(); n];
    for (p, q, k, c) in &doc.comult {
        let (p, q) = (check_index(*p, n, "comult")?, check_index(*q, n, "comult")?);
        comult[check_index(*k, n, "comult")?].add_term(p * n + q, &scalar(m, c)?);
    }
    let mut counit = vec![CycScalar::zero(m); n];
    for (i, c) in &doc.counit {
        counit[check_index(*i, n, "counit")?] = scalar(m, c)?;
    }
    let mut antipode = vec![SparseVec::new(); n];
    for (i, j, c) in &doc.antipode {
        antipode[check_index(*i, n, "antipode")?].add_term(check_index(*j, n, "antipode")?, &scalar(m, c)?);
    }
    let unit = vec_of(m, &doc.unit, n)?;
    let hopf = HopfData::new(HopfParts { m, labels: doc.basis_labels, mult, unit, comult, counit, antipode, grading: doc.grading })?;
    Ok(match doc.generators {
        Some(gens) => hopf.with_generators(gens.iter().map(|g| vec_of(m, g, n)).collect::<Result<_, _>>()?),
        None => hopf,
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct YdDoc {
    schema: String,
    m: u32,
    dim: usize,
    labels: Vec<String>,
    /// [x, v, w, c]: φ_x · e_v ∋ c e_w.
    action: Vec<(usize, usize, usize, Coeff)>,
    /// [v, x, w, c]: λ(e_v) ∋ c φ_x⊗e_w.
    coaction: Vec<(usize, usize, usize, Coeff)>,
    degrees: Vec<u32>,
}

fn yd_doc(module: &YDModule) -> YdDoc {
    let d = module.dim();
    let mut action = Vec::new();
    for (x, row) in module.action.iter().enumerate() {
        for (v, img) in row.iter().enumerate() {
            for (w, c) in img.iter() {
                action.push((x, v, w, coeff(c)));
            }
        }
    }
    let mut coaction = Vec::new();
    for (v, lam) in module.coaction.iter().enumerate() {
        for (xw, c) in lam.iter() {
            coaction.push((v, xw / d, xw % d, coeff(c)));
        }
    }
    YdDoc { schema: YD_SCHEMA.into(), m: module.m(), dim: d, labels: module.labels.clone(), action, coaction, degrees: module.degrees.clone() }
}

fn yd_from_doc(doc: YdDoc) -> Result<YDModule, JsonError> {
    let group = GroupDatum::new(doc.m)?;
    let (m, d, hd) = (doc.m, doc.dim, group.order());
    if doc.labels.len() != d || doc.degrees.len() != d {
        return Err(JsonError::Inconsistent("label or degree list length differs from dim".into()));
    }
    let mut action = vec![vec![SparseVec::new(); d]; hd];
    for (x, v, w, c) in &doc.action {
        let (x, v) = (check_index(*x, hd, "action")?, check_index(*v, d, "action")?);
        action[x][v].add_term(check_index(*w, d, "action")?, &scalar(m, c)?);
    }
    let mut coaction = vec![SparseVec::new(); d];
    for (v, x, w, c) in &doc.coaction {
        let (x, w) = (check_index(*x, hd, "coaction")?, check_index(*w, d, "coaction")?);
        coaction[check_index(*v, d, "coaction")?].add_term(x * d + w, &scalar(m, c)?);
    }
    Ok(YDModule { group, labels: doc.labels, action, coaction, degrees: doc.degrees })
}

pub fn yd_to_json(module: &YDModule) -> String {
    to_canonical(&yd_doc(module))
}

pub fn yd_from_json(text: &str) -> Result<YDModule, JsonError> {
    yd_from_doc(parse(text, YD_SCHEMA)?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NicholsDoc {
    schema: String,
    module: YdDoc,
    dim: usize,
    labels: Vec<String>,
    grading: Vec<u32>,
    mult: Vec<(usize, usize, usize, Coeff)>,
    /// Braided coproduct, [i, j, k, c]: Δ_B(e_k) ∋ c e_i⊗e_j.
    comult: Vec<(usize, usize, usize, Coeff)>,
    /// Each relation as [j, k, c] terms of Σ c x_j⊗x_k.
    relations: Vec<Vec<(usize, usize, Coeff)>>,
}

fn nichols_doc(b: &NicholsData) -> NicholsDoc {
    let n = b.dim();
    let d = b.module.dim();
    let mut mult = Vec::new();
    for (i, row) in b.mult.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            for (k, c) in p.iter() {
                mult.push((i, j, k, coeff(c)));
            }
        }
    }
    let mut comult: Vec<_> = b.comult.iter().enumerate().flat_map(|(k, v)| v.iter().map(move |(pq, c)| (pq / n, pq % n, k, coeff(c))).collect::<Vec<_>>()).collect();
    comult.sort_by_key(|x| (x.0, x.1, x.2));
    let relations = b.relations.iter().map(|r| r.iter().map(|(jk, c)| (jk / d, jk % d, coeff(c))).collect()).collect();
    NicholsDoc { schema: NICHOLS_SCHEMA.into(), module: yd_doc(&b.module), dim: n, labels: b.labels.clone(), grading: b.grading.clone(), mult, comult, relations }
}

pub fn nichols_to_json(b: &NicholsData) -> String {
    to_canonical(&nichols_doc(b))
}

/// Rebuilds the Nichols algebra from the stored module and checks that the
/// stored structure agrees with it.
pub fn nichols_from_json(text: &str) -> Result<NicholsData, JsonError> {
    let doc: NicholsDoc = parse(text, NICHOLS_SCHEMA)?;
    let stored = to_canonical(&doc);
    let b = build_nichols(&yd_from_doc(doc.module)?)?;
    if nichols_to_json(&b) != stored {
        return Err(JsonError::Inconsistent("stored Nichols structure differs from the one built from its module".into()));
    }
    Ok(b)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LiftingDoc {
    schema: String,
    kind: Family,
    m: u32,
    #[serde(rename = "I")]
    pairs: Vec<(u32, u32)>,
    #[serde(rename = "L")]
    ells: Vec<u32>,
    zeta: Vec<(u32, u32, u32, Coeff)>,
    mu: Vec<(usize, usize, Coeff)>,
    nu: Vec<(usize, usize, Coeff)>,
    tau: Vec<(usize, usize, Coeff)>,
}

fn keyed(map: &BTreeMap<(usize, usize), CycScalar>) -> Vec<(usize, usize, Coeff)> {
    map.iter().map(|(&(s, t), c)| (s, t, coeff(c))).collect()
}

pub fn lifting_to_json(data: &LiftingData) -> String {
    to_canonical(&LiftingDoc {
        schema: LIFTING_SCHEMA.into(),
        kind: data.family,
        m: data.group.m(),
        pairs: data.pairs.clone(),
        ells: data.ells.clone(),
        zeta: data.zeta.iter().map(|(&(i, k, q), c)| (i, k, q, coeff(c))).collect(),
        mu: keyed(&data.mu),
        nu: keyed(&data.nu),
        tau: keyed(&data.tau),
    })
}

/// Parses and validates lifting data.
pub fn lifting_from_json(text: &str) -> Result<LiftingData, JsonError> {
    let doc: LiftingDoc = parse(text, LIFTING_SCHEMA)?;
    let group = GroupDatum::new(doc.m)?;
    let m = doc.m;
    let unkey = |v: &[(usize, usize, Coeff)]| -> Result<BTreeMap<(usize, usize), CycScalar>, JsonError> { v.iter().map(|(s, t, c)| Ok(((*s, *t), scalar(m, c)?))).collect() };
    let data = LiftingData {
        family: doc.kind,
        group,
        zeta: doc.zeta.iter().map(|(i, k, q, c)| Ok(((*i, *k, *q), scalar(m, c)?))).collect::<Result<_, JsonError>>()?,
        mu: unkey(&doc.mu)?,
        nu: unkey(&doc.nu)?,
        tau: unkey(&doc.tau)?,
        pairs: doc.pairs,
        ells: doc.ells,
    };
    data.validate()?;
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::FunctionAlgebra;
    use crate::nichols::bosonize;

    fn g12() -> GroupDatum {
        GroupDatum::new(12).unwrap()
    }

    #[test]
    fn hopf_round_trip_is_byte_identical() {
        let f = FunctionAlgebra::new(g12());
        let text = hopf_to_json(&f.hopf);
        let back = hopf_from_json(&text).unwrap();
        assert_eq!(back, f.hopf);
        assert_eq!(hopf_to_json(&back), text);
        assert_eq!(schema_of(&text).unwrap(), HOPF_SCHEMA);
    }

    #[test]
    fn bosonization_keeps_its_generators() {
        let b = build_nichols(&YDModule::m_ik(g12(), 2, 3).unwrap()).unwrap();
        let a = bosonize(&b).hopf;
        let back = hopf_from_json(&hopf_to_json(&a)).unwrap();
        assert_eq!(back.generator_hint(), a.generator_hint());
        assert_eq!(back, a);
    }

    #[test]
    fn module_and_nichols_round_trip() {
        let module = YDModule::direct_sum(g12(), &[YDModule::m_ik(g12(), 2, 3).unwrap(), YDModule::m_ell(g12(), 3).unwrap()]).unwrap();
        let text = yd_to_json(&module);
        assert_eq!(yd_from_json(&text).unwrap(), module);
        let b = build_nichols(&module).unwrap();
        let text = nichols_to_json(&b);
        assert_eq!(nichols_to_json(&nichols_from_json(&text).unwrap()), text);
        let tampered = text.replacen("\"1/1\"", "\"2/1\"", 1);
        assert!(nichols_from_json(&tampered).is_err());
    }

    #[test]
    fn lifting_round_trip_and_validation() {
        let data = LiftingData::random(Family::C, g12(), vec![(2, 3)], vec![3], 9);
        let text = lifting_to_json(&data);
        assert!(text.contains("\"I\"") && text.contains("\"kind\": \"C\""));
        let back = lifting_from_json(&text).unwrap();
        assert_eq!(back, data);
        assert_eq!(lifting_to_json(&back), text);
        let bad = text.replace("\"m\": 12", "\"m\": 10");
        assert!(matches!(lifting_from_json(&bad), Err(JsonError::Scalar(_))));
    }

    #[test]
    fn wrong_schema_and_garbage_are_rejected() {
        let text = yd_to_json(&YDModule::m_ell(g12(), 1).unwrap());
        assert!(matches!(hopf_from_json(&text), Err(JsonError::Schema { .. })));
        assert!(matches!(hopf_from_json("{"), Err(JsonError::Syntax(_))));
    }

    proptest::proptest! {
        #[test]
        fn random_lifting_data_round_trip(seed in 0u64..1000, family in 0usize..3) {
            let (family, pairs, ells) = [
                (Family::A, vec![(2, 3), (2, 9)], vec![]),
                (Family::B, vec![], vec![1, 3]),
                (Family::C, vec![(2, 3)], vec![3]),
            ][family].clone();
            let data = LiftingData::random(family, g12(), pairs, ells, seed);
            let text = lifting_to_json(&data);
            let back = lifting_from_json(&text).unwrap();
            proptest::prop_assert_eq!(&back, &data);
            proptest::prop_assert_eq!(lifting_to_json(&back), text);
        }
    }
}
