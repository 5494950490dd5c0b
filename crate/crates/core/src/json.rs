//! JSON schemas for the file formats: groups, Bieberbach data, complex
//! structures and sublattices. Rationals travel as `"p/q"` strings and
//! matrices as row-major arrays of rows.

use std::sync::Arc;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::bieberbach::BieberbachDatum;
use crate::cxstruct::QuadMat;
use crate::exact::{fmt_rational, parse_rational, ExactScalar, IMat, IntLattice, QuadExt};
use crate::groups::{
    alternating, cyclic, dihedral, elementary_abelian, quaternion8, symmetric, FiniteGroup,
};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Family(FamilySpec),
    Explicit(ExplicitGroup),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum ExplicitGroup {
    #[serde(rename = "matrix")]
    Matrix { generators: Vec<Vec<Vec<i64>>> },
    #[serde(rename = "permutation")]
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

pub fn group_from_spec(spec: &GroupSpec, limit: usize) -> Result<Arc<FiniteGroup>> {
    match spec {
        GroupSpec::Family(f) => {
            let need = |v: Option<usize>, what: &str| {
                v.ok_or_else(|| Error::InvalidInput(format!("family needs \"{what}\"")))
            };
            match f.family.as_str() {
                "cyclic" => cyclic(need(f.n, "n")?),
                "elementary_abelian" => elementary_abelian(need(f.p, "p")?, need(f.rank, "rank")?),
                "dihedral" => dihedral(need(f.n, "n")?),
                "quaternion8" => quaternion8(),
                "symmetric" => symmetric(need(f.n, "n")?),
                "alternating" => alternating(need(f.n, "n")?),
                other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
            }
        }
        GroupSpec::Explicit(ExplicitGroup::Matrix { generators }) => {
            let dim = generators
                .first()
                .map(Vec::len)
                .ok_or_else(|| Error::InvalidInput("matrix group needs a generator".into()))?;
            let mats: Vec<IMat> = generators
                .iter()
                .map(|rows| parse_matrix(rows, dim))
                .collect::<Result<_>>()?;
            FiniteGroup::from_matrices(dim, &mats, limit)
        }
        GroupSpec::Explicit(ExplicitGroup::Permutation { degree, generators }) => {
            FiniteGroup::from_permutations(*degree, generators, limit)
        }
    }
}

fn parse_matrix(rows: &[Vec<i64>], dim: usize) -> Result<IMat> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Dimension(format!("matrix must be {dim}x{dim}")));
    }
    Ok(IMat::from_i64_rows(rows))
}

fn matrix_to_rows(m: &IMat) -> Result<Vec<Vec<i64>>> {
    (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| {
                    m[(r, c)].to_i64().ok_or_else(|| {
                        Error::InvalidInput("matrix entry exceeds the i64 output range".into())
                    })
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DatumJson {
    pub dimension: usize,
    pub generators: Vec<DatumGenJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DatumGenJson {
    pub matrix: Vec<Vec<i64>>,
    /// Omitted translations default to zero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub translation: Option<Vec<String>>,
}

pub fn datum_from_json(json: &DatumJson, limit: usize) -> Result<BieberbachDatum> {
    let dim = json.dimension;
    let generators = json
        .generators
        .iter()
        .map(|g| {
            let m = parse_matrix(&g.matrix, dim)?;
            let t = match &g.translation {
                Some(entries) => entries
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()?,
                None => vec![crate::exact::rat(0, 1); dim],
            };
            if t.len() != dim {
                return Err(Error::Dimension(format!(
                    "translation must have {dim} entries"
                )));
            }
            Ok((m, t))
        })
        .collect::<Result<Vec<_>>>()?;
    BieberbachDatum::from_generators(dim, &generators, limit)
}

pub fn datum_to_json(datum: &BieberbachDatum) -> Result<DatumJson> {
    let generators = datum
        .holonomy()
        .gen_mats()
        .iter()
        .zip(datum.gen_translations())
        .map(|(m, t)| {
            Ok(DatumGenJson {
                matrix: matrix_to_rows(m)?,
                translation: Some(t.iter().map(fmt_rational).collect()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DatumJson {
        dimension: datum.dim(),
        generators,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldJson {
    pub d: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CxEntryJson {
    pub a: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CxJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldJson>,
    pub matrix: Vec<Vec<CxEntryJson>>,
}

pub fn structure_from_json(json: &CxJson) -> Result<QuadMat> {
    let field_d = json.field.as_ref().map(|f| f.d);
    let width = json.matrix.first().map(Vec::len).unwrap_or(0);
    if json.matrix.iter().any(|row| row.len() != width) {
        return Err(Error::Dimension("ragged structure matrix".into()));
    }
    let rows = json
        .matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    let a = parse_rational(&e.a)?;
                    let b = match &e.b {
                        Some(s) => parse_rational(s)?,
                        None => ExactScalar::zero(),
                    };
                    let d = match (e.d, field_d) {
                        (Some(d), Some(fd)) if d != fd => {
                            return Err(Error::InvalidInput(format!(
                                "entry field √{d} conflicts with the declared field √{fd}"
                            )))
                        }
                        (Some(d), _) => d,
                        (None, Some(fd)) => fd,
                        (None, None) => {
                            if !ExactScalar::is_zero(&b) {
                                return Err(Error::InvalidInput(
                                    "surd entry without a field declaration".into(),
                                ));
                            }
                            0
                        }
                    };
                    if ExactScalar::is_zero(&b) {
                        Ok(QuadExt::from_rational(a))
                    } else {
                        crate::exact::check_discriminant(d)?;
                        Ok(QuadExt::new(a, b, d))
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuadMat::from_rows(rows))
}

pub fn structure_to_json(m: &QuadMat) -> CxJson {
    let mut field = None;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if let Some(d) = m[(r, c)].discriminant() {
                field = Some(FieldJson { d });
            }
        }
    }
    let matrix = (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| {
                    let e = &m[(r, c)];
                    CxEntryJson {
                        a: fmt_rational(e.rational_part()),
                        b: if ExactScalar::is_zero(e.surd_part()) {
                            None
                        } else {
                            Some(fmt_rational(e.surd_part()))
                        },
                        d: None,
                    }
                })
                .collect()
        })
        .collect();
    CxJson { field, matrix }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SublatticeJson {
    /// Basis columns.
    pub columns: Vec<Vec<i64>>,
}

pub fn sublattice_from_json(json: &SublatticeJson, ambient: usize) -> Result<IntLattice> {
    for c in &json.columns {
        if c.len() != ambient {
            return Err(Error::Dimension(format!(
                "sublattice columns must have {ambient} entries"
            )));
        }
    }
    let m = if json.columns.is_empty() {
        IMat::zeros(ambient, 0)
    } else {
        IMat::from_i64_rows(&json.columns).transpose()
    };
    Ok(IntLattice::from_columns(ambient, &m))
}

pub fn sublattice_to_json(lattice: &IntLattice) -> Result<SublatticeJson> {
    let basis = lattice.basis();
    let columns = (0..basis.cols())
        .map(|c| {
            basis
                .column(c)
                .iter()
                .map(|v| {
                    v.to_i64().ok_or_else(|| {
                        Error::InvalidInput("basis entry exceeds the i64 output range".into())
                    })
                })
                .collect()
        })
        .collect::<Result<Vec<Vec<i64>>>>()?;
    Ok(SublatticeJson { columns })
}
