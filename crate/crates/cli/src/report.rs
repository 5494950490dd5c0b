//! Report structures. JSON is the contract; the table format is a
//! derived view of the same values.

use serde::Serialize;

use vasquez::bieberbach::{BieberbachDatum, ReductionResult};
use vasquez::bounds::BoundReport;
use vasquez::characters::{BadComponent, RationalTable};
use vasquez::cxstruct::{ComplexStructure, HodgeValue};
use vasquez::exact::{fmt_rational, QMat};
use vasquez::json;

#[derive(Serialize)]
pub struct ChartabReport {
    pub command: &'static str,
    pub seed: u64,
    pub order: usize,
    pub exponent: u64,
    pub class_sizes: Vec<usize>,
    pub conductor: u64,
    pub dixon_prime: u64,
    pub characters: Vec<CharacterRow>,
    pub orbits: Vec<OrbitRow>,
}

#[derive(Serialize)]
pub struct CharacterRow {
    pub degree: u64,
    pub nu2: i8,
    pub orbit: usize,
    /// Cyclotomic coefficient vectors per class, on the power basis of
    /// the conductor's root of unity.
    pub values: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct OrbitRow {
    pub orbit: usize,
    pub degree: u64,
    pub field_degree: usize,
    pub nu2: i8,
    pub module_type: &'static str,
    pub schur_index: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spun_dim: Option<usize>,
}

pub fn chartab_report(rt: &RationalTable, seed: u64) -> ChartabReport {
    let table = rt.table();
    let group = table.group();
    let characters = (0..table.count())
        .map(|j| CharacterRow {
            degree: table.degree(j),
            nu2: table.nu2(j),
            orbit: table.orbit_of(j),
            values: table
                .row(j)
                .iter()
                .map(|v| v.coeffs().iter().map(fmt_rational).collect())
                .collect(),
        })
        .collect();
    let orbits = rt
        .components()
        .iter()
        .map(|c| OrbitRow {
            orbit: c.orbit,
            degree: c.degree,
            field_degree: c.field_degree,
            nu2: c.nu2,
            module_type: c.module_type.symbol(),
            schur_index: c
                .schur_index()
                .map_or_else(|| "unknown".to_string(), |m| m.to_string()),
            spun_dim: c.schur.spun_dim,
        })
        .collect();
    ChartabReport {
        command: "chartab",
        seed,
        order: group.order(),
        exponent: group.exponent(),
        class_sizes: group.conjugacy_classes().sizes().to_vec(),
        conductor: table.conductor(),
        dixon_prime: table.dixon_prime(),
        characters,
        orbits,
    }
}

#[derive(Serialize)]
pub struct BoundValueJson {
    pub lo: u64,
    pub hi: u64,
    pub exact: bool,
    pub provenance: String,
}

#[derive(Serialize)]
pub struct BoundsReportJson {
    pub command: &'static str,
    pub seed: u64,
    pub order: usize,
    pub coset_sum: u64,
    pub n_real: BoundValueJson,
    pub n_complex: BoundValueJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irr1_sum: Option<u64>,
    pub chern_vanishing_threshold: u64,
}

pub fn bounds_report(b: &BoundReport, seed: u64) -> BoundsReportJson {
    let conv = |v: &vasquez::bounds::BoundValue| BoundValueJson {
        lo: v.lo,
        hi: v.hi,
        exact: v.is_exact(),
        provenance: v.provenance.clone(),
    };
    BoundsReportJson {
        command: "bounds",
        seed,
        order: b.group_order,
        coset_sum: b.coset_sum,
        n_real: conv(&b.n_real),
        n_complex: conv(&b.n_complex),
        irr1_sum: b.irr1_sum,
        chern_vanishing_threshold: b.chern_vanishing_threshold,
    }
}

#[derive(Serialize)]
pub struct CheckReport {
    pub command: &'static str,
    pub seed: u64,
    pub dimension: usize,
    pub holonomy_order: usize,
    pub valid: bool,
    pub special: bool,
    pub special_functional: bool,
}

pub fn check_report(
    datum: &BieberbachDatum,
    special: bool,
    functional: bool,
    seed: u64,
) -> CheckReport {
    CheckReport {
        command: "check",
        seed,
        dimension: datum.dim(),
        holonomy_order: datum.group().order(),
        valid: true,
        special,
        special_functional: functional,
    }
}

#[derive(Serialize)]
pub struct ReduceReport {
    pub command: &'static str,
    pub complex: bool,
    pub seed: u64,
    pub dimension: usize,
    pub holonomy_order: usize,
    pub sublattice: json::SublatticeJson,
    pub sublattice_rank: usize,
    pub quotient: json::DatumJson,
    pub quotient_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex_dimension: Option<usize>,
    pub coset_sum_bound: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub shrunk_orbits: Vec<usize>,
}

pub fn reduce_report(
    datum: &BieberbachDatum,
    result: &ReductionResult,
    complex: bool,
    seed: u64,
) -> anyhow::Result<ReduceReport> {
    let (coset_sum, _) = vasquez::bounds::vasquez_upper_bound(datum.group());
    Ok(ReduceReport {
        command: "reduce",
        complex,
        seed,
        dimension: datum.dim(),
        holonomy_order: datum.group().order(),
        sublattice: json::sublattice_to_json(&result.sublattice)?,
        sublattice_rank: result.sublattice.rank(),
        quotient: json::datum_to_json(&result.quotient)?,
        quotient_rank: result.quotient_rank(),
        complex_dimension: complex.then_some(result.quotient_rank() / 2),
        coset_sum_bound: coset_sum,
        shrunk_orbits: result.shrunk_orbits.clone(),
    })
}

#[derive(Serialize)]
pub struct EcReport {
    pub command: &'static str,
    pub seed: u64,
    pub rank: usize,
    pub essentially_complex: bool,
    pub witness: Vec<EcWitness>,
}

#[derive(Serialize)]
pub struct EcWitness {
    pub orbit: usize,
    pub degree: u64,
    pub field_degree: usize,
    pub multiplicity: String,
}

pub fn ec_report(
    datum: &BieberbachDatum,
    ec: bool,
    witness: &[BadComponent],
    seed: u64,
) -> EcReport {
    EcReport {
        command: "ec-test",
        seed,
        rank: datum.dim(),
        essentially_complex: ec,
        witness: witness
            .iter()
            .map(|w| EcWitness {
                orbit: w.orbit,
                degree: w.degree,
                field_degree: w.field_degree,
                multiplicity: w.multiplicity.to_string(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct HodgeValueJson {
    pub re: QuadJson,
    pub im: QuadJson,
}

#[derive(Serialize)]
pub struct QuadJson {
    pub a: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
}

fn quad_json(q: &vasquez::exact::QuadExt) -> QuadJson {
    QuadJson {
        a: fmt_rational(q.rational_part()),
        b: q
            .discriminant()
            .map(|_| fmt_rational(q.surd_part())),
        d: q.discriminant(),
    }
}

fn hodge_json(values: &[HodgeValue]) -> Vec<HodgeValueJson> {
    values
        .iter()
        .map(|v| HodgeValueJson {
            re: quad_json(&v.re),
            im: quad_json(&v.im),
        })
        .collect()
}

#[derive(Serialize)]
pub struct CstructVerifyReport {
    pub command: &'static str,
    pub seed: u64,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<u64>,
    pub hodge_character: Vec<HodgeValueJson>,
}

pub fn cstruct_verify_report(s: &ComplexStructure, seed: u64) -> CstructVerifyReport {
    CstructVerifyReport {
        command: "cstruct verify",
        seed,
        valid: true,
        field: s.field(),
        hodge_character: hodge_json(s.hodge_character()),
    }
}

#[derive(Serialize)]
pub struct CstructInvariantReport {
    pub command: &'static str,
    pub seed: u64,
    pub invariant: bool,
    pub max_invariant_dimension: usize,
    pub max_invariant_columns: Vec<Vec<String>>,
}

pub fn cstruct_invariant_report(
    invariant: bool,
    maximal: &QMat,
    seed: u64,
) -> anyhow::Result<CstructInvariantReport> {
    let columns = (0..maximal.cols())
        .map(|c| maximal.column(c).iter().map(fmt_rational).collect())
        .collect();
    Ok(CstructInvariantReport {
        command: "cstruct invariant",
        seed,
        invariant,
        max_invariant_dimension: maximal.cols(),
        max_invariant_columns: columns,
    })
}

#[derive(Serialize)]
pub struct CstructAdaptReport {
    pub command: &'static str,
    pub seed: u64,
    pub structure: json::CxJson,
    pub sublattice_invariant: bool,
    pub hodge_equal: bool,
}

pub fn cstruct_adapt_report(adapted: &ComplexStructure, seed: u64) -> CstructAdaptReport {
    CstructAdaptReport {
        command: "cstruct adapt",
        seed,
        structure: json::structure_to_json(adapted.matrix()),
        sublattice_invariant: true,
        hodge_equal: true,
    }
}

#[derive(Serialize)]
pub struct HodgeEqualReport {
    pub command: &'static str,
    pub seed: u64,
    pub equal: bool,
}

pub fn hodge_equal_report(equal: bool, seed: u64) -> HodgeEqualReport {
    HodgeEqualReport {
        command: "cstruct hodge-equal",
        seed,
        equal,
    }
}

/// Generic table view of a JSON report.
pub fn render_table(value: &serde_json::Value) -> String {
    let mut out = String::new();
    render_into(value, 0, None, &mut out);
    out
}

fn render_into(value: &serde_json::Value, indent: usize, key: Option<&str>, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        serde_json::Value::Object(map) => {
            if let Some(k) = key {
                out.push_str(&format!("{pad}{k}:\n"));
            }
            for (k, v) in map {
                render_into(v, indent + usize::from(key.is_some()), Some(k), out);
            }
        }
        serde_json::Value::Array(items) => {
            let scalar = items
                .iter()
                .all(|i| !matches!(i, serde_json::Value::Object(_) | serde_json::Value::Array(_)));
            if scalar {
                let joined: Vec<String> = items.iter().map(plain).collect();
                out.push_str(&format!(
                    "{pad}{}: [{}]\n",
                    key.unwrap_or("items"),
                    joined.join(", ")
                ));
            } else {
                out.push_str(&format!("{pad}{}:\n", key.unwrap_or("items")));
                for (i, item) in items.iter().enumerate() {
                    out.push_str(&format!("{pad}  [{i}]\n"));
                    render_into(item, indent + 2, None, out);
                }
            }
        }
        scalar => {
            out.push_str(&format!("{pad}{}: {}\n", key.unwrap_or("value"), plain(scalar)));
        }
    }
}

fn plain(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
