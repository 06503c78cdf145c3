//! Serde data types for the JSON interchange formats.
//!
//! Rationals travel as strings (`"-3/2"`), field elements as coordinate
//! arrays in the power basis of `θ`, polynomials as ascending coefficient
//! arrays. Nodes are 1-based.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, FieldElem, MatrixL, NumberField, PolyQ, Rational};
use crate::galois::GaloisContext;
use crate::lweight::LWeight;
use crate::repclass::Decomposition;
use crate::rootsystem::RootSystem;
use crate::specchar::SpectralCharacter;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextJson {
    pub modulus: Vec<String>,
    pub automorphisms: Vec<Vec<String>>,
    pub subgroup: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub node: usize,
    pub point: Vec<String>,
    pub exp: i64,
}

pub type LWeightJson = Vec<FactorJson>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionEntryJson {
    pub class: LWeightJson,
    pub degree: usize,
    #[serde(rename = "dimK")]
    pub dim_k: u64,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterEntryJson {
    pub point: Vec<String>,
    pub class: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub matrix: Vec<Vec<Vec<String>>>,
    #[serde(rename = "fixedByH")]
    pub fixed_by_h: bool,
}

fn rationals_to_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

fn parse_all(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

pub fn poly_to_json(p: &PolyQ) -> Vec<String> {
    rationals_to_strings(p.coeffs())
}

pub fn poly_from_json(v: &[String]) -> Result<PolyQ> {
    Ok(PolyQ::new(parse_all(v)?))
}

pub fn elem_to_json(a: &FieldElem) -> Vec<String> {
    rationals_to_strings(a.coords())
}

/// Shorter coordinate arrays are padded with zeros.
pub fn elem_from_json(field: &NumberField, v: &[String]) -> Result<FieldElem> {
    let n = field.degree();
    if v.len() > n {
        return Err(Error::Parse(format!("point has {} coordinates, field degree is {n}", v.len())));
    }
    let mut coords = parse_all(v)?;
    coords.resize(n, Rational::from_integer(0.into()));
    field.elem(coords)
}

pub fn context_to_json(ctx: &GaloisContext) -> ContextJson {
    ContextJson {
        modulus: poly_to_json(ctx.modulus()),
        automorphisms: ctx.images().iter().map(|g| poly_to_json(&g.to_poly())).collect(),
        subgroup: ctx.base_group().elements().to_vec(),
    }
}

pub fn context_from_json(j: &ContextJson) -> Result<GaloisContext> {
    let images = j.automorphisms.iter().map(|g| poly_from_json(g)).collect::<Result<Vec<_>>>()?;
    GaloisContext::new(poly_from_json(&j.modulus)?, images, j.subgroup.clone())
}

pub fn lweight_to_json(w: &LWeight) -> LWeightJson {
    w.factors()
        .iter()
        .map(|((node, a), e)| FactorJson { node: node + 1, point: elem_to_json(a), exp: *e })
        .collect()
}

pub fn lweight_from_json(ctx: &Arc<GaloisContext>, rs: &Arc<RootSystem>, j: &[FactorJson]) -> Result<LWeight> {
    let mut entries = Vec::with_capacity(j.len());
    for f in j {
        if f.node == 0 {
            return Err(Error::InvalidLWeight("nodes are numbered from 1".into()));
        }
        entries.push((f.node - 1, elem_from_json(ctx.field(), &f.point)?, f.exp));
    }
    LWeight::new(Arc::clone(ctx), Arc::clone(rs), entries)
}

pub fn decomposition_to_json(d: &Decomposition) -> Vec<DecompositionEntryJson> {
    d.parts
        .iter()
        .map(|(c, m)| DecompositionEntryJson {
            class: lweight_to_json(&c.key),
            degree: c.degree,
            dim_k: c.dim_k,
            mult: *m,
        })
        .collect()
}

pub fn character_to_json(chi: &SpectralCharacter) -> Vec<CharacterEntryJson> {
    chi.0
        .iter()
        .map(|(a, c)| CharacterEntryJson { point: elem_to_json(a), class: c.0.clone() })
        .collect()
}

pub fn matrix_to_json(m: &MatrixL, fixed_by_h: bool) -> MatrixJson {
    MatrixJson {
        matrix: m.to_rows().iter().map(|r| r.iter().map(elem_to_json).collect()).collect(),
        fixed_by_h,
    }
}
