//! JSON input formats shared by the library and the command-line tool.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::affine::finite::{build_finite, FiniteRootSystem};
use crate::affine::periodic::{validate_periodic, PeriodicRootSet, RawComponent};
use crate::affine::subspace::Subspace;
use crate::affine::tuple::{validate_tuple, PeriodicIntSet, SymRegTuple, VAssign};
use crate::affine::AffineError;
use crate::cartan::{finite_type, symmetrize, validate_gcm, CartanDatum, CartanError, Gcm};
use crate::linalg::{format_q, parse_q, Q};
use crate::loopalg::{Key, LoopElement};
use crate::rootslice::RootVec;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Affine(#[from] AffineError),
    #[error("{0}")]
    Invalid(String),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, IoError> {
    Err(IoError::Invalid(msg.into()))
}

/// `{"rank": n, "a": [[...], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GcmJson {
    pub rank: usize,
    pub a: Vec<Vec<i64>>,
}

pub fn parse_gcm(text: &str) -> Result<CartanDatum, IoError> {
    let g: GcmJson = serde_json::from_str(text)?;
    if g.a.len() != g.rank {
        return invalid(format!("\"rank\" is {} but \"a\" has {} rows", g.rank, g.a.len()));
    }
    Ok(symmetrize(&validate_gcm(&g.a)?)?)
}

pub fn gcm_json(g: &Gcm) -> GcmJson {
    GcmJson { rank: g.rank(), a: g.rows().to_vec() }
}

/// `{"rank": n, "roots": [[c1, ..., cn], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootSetJson {
    pub rank: usize,
    pub roots: Vec<RootVec>,
}

pub fn parse_root_set(text: &str, rank: usize) -> Result<Vec<RootVec>, IoError> {
    let r: RootSetJson = serde_json::from_str(text)?;
    if r.rank != rank {
        return invalid(format!("root set has rank {}, matrix has rank {rank}", r.rank));
    }
    check_lengths(&r.roots, rank)?;
    Ok(r.roots)
}

/// `{"gens": [[...], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PiSystemJson {
    pub gens: Vec<RootVec>,
}

pub fn parse_pi_system(text: &str, rank: usize) -> Result<Vec<RootVec>, IoError> {
    let p: PiSystemJson = serde_json::from_str(text)?;
    check_lengths(&p.gens, rank)?;
    Ok(p.gens)
}

fn check_lengths(roots: &[RootVec], rank: usize) -> Result<(), IoError> {
    if let Some(r) = roots.iter().find(|r| r.rank() != rank) {
        return invalid(format!("vector {r} has {} coordinates, expected {rank}", r.rank()));
    }
    Ok(())
}

/// A rational written as `"p/q"`, `"p"` or a JSON integer.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rational {
    Int(i64),
    Text(String),
}

impl Rational {
    pub fn value(&self) -> Result<Q, IoError> {
        match self {
            Rational::Int(n) => Ok(Q::from_integer((*n).into())),
            Rational::Text(s) => parse_q(s).map_or_else(|| invalid(format!("not a rational: {s:?}")), Ok),
        }
    }

    pub fn of(x: &Q) -> Rational {
        Rational::Text(format_q(x))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentJson {
    pub roots: Vec<RootVec>,
    pub k: i64,
    #[serde(default)]
    pub f_base: Vec<RootVec>,
    #[serde(default)]
    pub f_values: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LambdaJson {
    pub modulus: i64,
    #[serde(default)]
    pub residues: Vec<i64>,
    #[serde(default)]
    pub add: Vec<i64>,
    #[serde(default)]
    pub remove: Vec<i64>,
}

/// One entry of the `V` assignment: by residue modulo `v_modulus`, or for a
/// single level (which overrides the residue entry).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VEntryJson {
    #[serde(default)]
    pub residue: Option<i64>,
    #[serde(default)]
    pub level: Option<i64>,
    pub basis: Vec<Vec<Rational>>,
}

/// Affine datum: a periodic root set, optionally with `Lambda` and `V`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineJson {
    pub finite_type: String,
    pub components: Vec<ComponentJson>,
    #[serde(default)]
    pub lambda: Option<LambdaJson>,
    #[serde(default)]
    pub v_modulus: Option<i64>,
    #[serde(default)]
    pub v: Vec<VEntryJson>,
}

pub fn finite_system(name: &str) -> Result<Arc<FiniteRootSystem>, IoError> {
    Ok(Arc::new(build_finite(&symmetrize(&finite_type(name)?)?)?))
}

pub struct AffineInput {
    pub fr: Arc<FiniteRootSystem>,
    pub psi: PeriodicRootSet,
    pub lambda: PeriodicIntSet,
    pub v: VAssign,
}

impl AffineInput {
    pub fn tuple(&self) -> Result<SymRegTuple, IoError> {
        Ok(validate_tuple(self.psi.clone(), self.lambda.clone(), self.v.clone())?)
    }
}

pub fn parse_affine(text: &str) -> Result<AffineInput, IoError> {
    let a: AffineJson = serde_json::from_str(text)?;
    let fr = finite_system(&a.finite_type)?;
    let n = fr.rank();
    let raws: Vec<RawComponent> = a
        .components
        .iter()
        .map(|c| {
            check_lengths(&c.roots, n)?;
            check_lengths(&c.f_base, n)?;
            Ok(RawComponent { roots: c.roots.clone(), k: c.k, f_base: c.f_base.clone(), f_values: c.f_values.clone() })
        })
        .collect::<Result<_, IoError>>()?;
    let psi = validate_periodic(&fr, &raws)?;
    let lambda = match &a.lambda {
        Some(l) => PeriodicIntSet::new(l.modulus, l.residues.iter().copied(), l.add.iter().copied(), l.remove.iter().copied())?,
        None => PeriodicIntSet::empty(),
    };
    let mut v = VAssign { modulus: a.v_modulus.unwrap_or(1), by_residue: BTreeMap::new(), by_level: BTreeMap::new() };
    if v.modulus <= 0 {
        return invalid("\"v_modulus\" must be positive");
    }
    for e in &a.v {
        let rows: Vec<Vec<Q>> = e.basis.iter().map(|row| row.iter().map(Rational::value).collect()).collect::<Result<_, _>>()?;
        if let Some(row) = rows.iter().find(|r| r.len() != n) {
            return invalid(format!("V basis vector has {} coordinates, expected {n}", row.len()));
        }
        let s = Subspace::span(n, rows);
        match (e.residue, e.level) {
            (Some(r), None) => {
                v.by_residue.insert(r.rem_euclid(v.modulus), s);
            }
            (None, Some(x)) => {
                v.by_level.insert(x, s);
            }
            _ => return invalid("each \"v\" entry needs exactly one of \"residue\" or \"level\""),
        }
    }
    Ok(AffineInput { fr, psi, lambda, v })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<RootVec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    pub coef: Rational,
}

/// `{"terms": [{"kind": "X|H|C|D", "root": [...], "i": idx, "r": level, "coef": "p/q"}]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopElementJson {
    pub terms: Vec<TermJson>,
}

pub fn loop_element_from_json(e: &LoopElementJson) -> Result<LoopElement, IoError> {
    let mut out = LoopElement::zero();
    for t in &e.terms {
        let r = t.r.unwrap_or(0);
        let key = match t.kind.as_str() {
            "X" => Key::X(t.root.clone().ok_or_else(|| IoError::Invalid("X term needs \"root\"".into()))?, r),
            "H" => Key::H(t.i.ok_or_else(|| IoError::Invalid("H term needs \"i\"".into()))?, r),
            "C" => Key::C,
            "D" => Key::D,
            other => return invalid(format!("unknown term kind {other:?}")),
        };
        out.axpy(&t.coef.value()?, &LoopElement::basis(key));
    }
    Ok(out)
}

pub fn loop_element_json(e: &LoopElement) -> LoopElementJson {
    let terms = e
        .terms()
        .map(|(k, c)| {
            let coef = Rational::of(c);
            match k {
                Key::X(a, r) => TermJson { kind: "X".into(), root: Some(a.clone()), i: None, r: Some(*r), coef },
                Key::H(i, r) => TermJson { kind: "H".into(), root: None, i: Some(*i), r: Some(*r), coef },
                Key::C => TermJson { kind: "C".into(), root: None, i: None, r: None, coef },
                Key::D => TermJson { kind: "D".into(), root: None, i: None, r: None, coef },
            }
        })
        .collect();
    LoopElementJson { terms }
}

/// Generators for the bracket engine: `{"finite_type": "A2", "gens": [element, ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopGensJson {
    pub finite_type: String,
    pub gens: Vec<LoopElementJson>,
}

pub fn parse_loop_gens(text: &str) -> Result<(Arc<FiniteRootSystem>, Vec<LoopElement>), IoError> {
    let g: LoopGensJson = serde_json::from_str(text)?;
    let fr = finite_system(&g.finite_type)?;
    let gens = g.gens.iter().map(loop_element_from_json).collect::<Result<_, _>>()?;
    Ok((fr, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_frac;

    #[test]
    fn gcm_round_trip() {
        let cd = parse_gcm(r#"{"rank": 2, "a": [[2, -4], [-1, 2]]}"#).unwrap();
        assert_eq!(cd.d(), &[1, 4]);
        let back = serde_json::to_string(&gcm_json(cd.gcm())).unwrap();
        assert_eq!(back, r#"{"rank":2,"a":[[2,-4],[-1,2]]}"#);
        assert!(matches!(parse_gcm(r#"{"rank": 3, "a": [[2]]}"#), Err(IoError::Invalid(_))));
        assert!(matches!(parse_gcm(r#"{"rank": 2, "a": [[2, 1], [-1, 2]]}"#), Err(IoError::Cartan(_))));
        assert!(matches!(parse_gcm("[1,"), Err(IoError::Json(_))));
    }

    #[test]
    fn affine_datum() {
        let text = r#"{"finite_type": "A2",
            "components": [{"roots": [[1, 0]], "k": 0}],
            "lambda": {"modulus": 1, "add": [1, -1]},
            "v": [{"residue": 0, "basis": [["1", 2]]}]}"#;
        let inp = parse_affine(text).unwrap();
        let t = inp.tuple().unwrap();
        assert!(t.has_c());
        let bad = text.replace("[[\"1\", 2]]", "[[\"1\", 0]]");
        assert!(parse_affine(&bad).unwrap().tuple().is_err());
    }

    #[test]
    fn loop_element_round_trip() {
        let text = r#"{"terms": [{"kind": "X", "root": [1, 0], "r": 2, "coef": "3/2"},
                                 {"kind": "H", "i": 1, "r": -1, "coef": -1},
                                 {"kind": "C", "coef": "1"}]}"#;
        let j: LoopElementJson = serde_json::from_str(text).unwrap();
        let e = loop_element_from_json(&j).unwrap();
        assert_eq!(e.coeff(&Key::X(RootVec(vec![1, 0]), 2)), q_frac(3, 2));
        let again = loop_element_from_json(&loop_element_json(&e)).unwrap();
        assert_eq!(e, again);
    }
}
