//! JSON documents produced by the command line, all versioned with
//! `"schema": 1`.
//!
//! Algebra elements are written as lists of `[coefficient, element-id]`
//! pairs with coefficients `"num/den"` over ℚ and `"k mod p"` over GF(p).

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, SteinbergAlgebra};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::{Block, DirectedGraph, LinePointReport, OrbitSize, VertexStatus};
use crate::groupoid::{FiniteGroupoid, ValidationReport};
use crate::linalg::Subspace;
use crate::oracle::{OracleSocle, SemiprimeVerdict};
use crate::socle::{LpReport, MinimalIdealCertificate, MinimalityMethod, MinimalityVerdict, SocleReport};

pub const SCHEMA: u32 = 1;

pub type ElementJson = Vec<[String; 2]>;

pub fn element_to_json(g: &FiniteGroupoid, f: &AlgebraElement) -> ElementJson {
    f.terms().map(|(x, c)| [c.to_string(), g.name(x).to_string()]).collect()
}

/// Parses the element syntax; repeated ids are summed.
pub fn element_from_json(g: &FiniteGroupoid, field: FieldSpec, terms: &ElementJson) -> Result<AlgebraElement> {
    let parsed: Vec<_> = terms
        .iter()
        .map(|[c, id]| Ok((g.id(id)?, field.parse_scalar(c)?)))
        .collect::<Result<_>>()?;
    AlgebraElement::from_terms(field, parsed)
}

pub fn subspace_to_json(alg: &SteinbergAlgebra<'_>, space: &Subspace) -> Vec<ElementJson> {
    space
        .basis()
        .iter()
        .map(|v| element_to_json(alg.groupoid(), &alg.from_dense(v)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub representative: String,
    pub orbit: Vec<String>,
    pub dimension: usize,
    pub matrix_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleJson {
    pub schema: u32,
    pub field: String,
    pub lp_holds: bool,
    pub generating_units: Vec<String>,
    pub components: Vec<ComponentJson>,
    pub socle_dimension: usize,
    pub basis: Vec<ElementJson>,
}

impl SocleJson {
    pub fn new(alg: &SteinbergAlgebra<'_>, report: &SocleReport) -> Self {
        let g = alg.groupoid();
        let names = |ids: &mut dyn Iterator<Item = crate::groupoid::ElementId>| -> Vec<String> {
            ids.map(|x| g.name(x).to_string()).collect()
        };
        SocleJson {
            schema: SCHEMA,
            field: report.field.to_string(),
            lp_holds: report.lp_holds,
            generating_units: names(&mut report.generating_units.iter().copied()),
            components: report
                .components
                .iter()
                .map(|c| ComponentJson {
                    representative: g.name(c.representative()).to_string(),
                    orbit: names(&mut c.orbit.members.iter().copied()),
                    dimension: c.dimension(),
                    matrix_size: c.matrix_size(),
                })
                .collect(),
            socle_dimension: report.socle_dimension(),
            basis: subspace_to_json(alg, &report.basis),
        }
    }
}

/// Printed with exit status 2 when the socle is refused.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpRefusalJson {
    pub schema: u32,
    pub lp_holds: bool,
    pub violators: Vec<String>,
    pub explanation: String,
}

impl LpRefusalJson {
    pub fn new(g: &FiniteGroupoid, lp: &LpReport) -> Self {
        LpRefusalJson {
            schema: SCHEMA,
            lp_holds: lp.holds,
            violators: lp.violators.iter().map(|&x| g.name(x).to_string()).collect(),
            explanation: lp.explanation.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum MinimalityJson {
    Exhaustive {
        minimal: bool,
        field_order: u64,
        vectors: u64,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        witness: Option<ElementJson>,
    },
    StructuredWithShadow {
        minimal: bool,
        spanning_vectors: usize,
        shadow_prime: u32,
    },
    StructuredCounterexample {
        minimal: bool,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        witness: Option<ElementJson>,
    },
}

impl MinimalityJson {
    pub fn new(g: &FiniteGroupoid, v: &MinimalityVerdict) -> Self {
        let witness = v.witness.as_ref().map(|w| element_to_json(g, w));
        match v.method {
            MinimalityMethod::Exhaustive { field_order, vectors } => MinimalityJson::Exhaustive {
                minimal: v.minimal,
                field_order,
                vectors,
                witness,
            },
            MinimalityMethod::StructuredWithShadow {
                spanning_vectors,
                shadow_prime,
            } => MinimalityJson::StructuredWithShadow {
                minimal: v.minimal,
                spanning_vectors,
                shadow_prime,
            },
            MinimalityMethod::StructuredCounterexample => MinimalityJson::StructuredCounterexample {
                minimal: v.minimal,
                witness,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub schema: u32,
    pub field: String,
    pub unit: String,
    pub isotropy_order: usize,
    pub flavor: String,
    pub generator: ElementJson,
    pub ideal_dimension: usize,
    pub ideal_basis: Vec<ElementJson>,
    pub minimality: MinimalityJson,
}

impl CertificateJson {
    pub fn new(alg: &SteinbergAlgebra<'_>, cert: &MinimalIdealCertificate, verdict: &MinimalityVerdict) -> Self {
        let g = alg.groupoid();
        CertificateJson {
            schema: SCHEMA,
            field: alg.field().to_string(),
            unit: g.name(cert.unit).to_string(),
            isotropy_order: cert.isotropy_order,
            flavor: cert.flavor.as_str().to_string(),
            generator: element_to_json(g, &cert.generator),
            ideal_dimension: cert.ideal.dimension(),
            ideal_basis: subspace_to_json(alg, cert.ideal.basis()),
            minimality: MinimalityJson::new(g, verdict),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalIdealJson {
    pub generator: ElementJson,
    pub dimension: usize,
    pub basis: Vec<ElementJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub kind: String,
    pub element: ElementJson,
}

/// The socle report layout with the oracle's extra evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub schema: u32,
    pub field: String,
    pub lp_holds: bool,
    pub generating_units: Vec<String>,
    pub components: Vec<ComponentJson>,
    pub socle_dimension: usize,
    pub basis: Vec<ElementJson>,
    pub minimal_ideals: Vec<MinimalIdealJson>,
    pub witnesses: Vec<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub semiprime: Option<bool>,
}

impl OracleJson {
    /// `generating_units` and `components` stay empty: the oracle does not
    /// decompose the socle.
    pub fn new(
        alg: &SteinbergAlgebra<'_>,
        lp: &LpReport,
        socle: &OracleSocle,
        semiprime: Option<&SemiprimeVerdict>,
    ) -> Self {
        let g = alg.groupoid();
        let mut witnesses: Vec<WitnessJson> = socle
            .minimal_ideals
            .iter()
            .map(|m| WitnessJson {
                kind: "minimal_ideal_generator".into(),
                element: element_to_json(g, &m.generator),
            })
            .collect();
        if let Some(w) = semiprime.and_then(|s| s.witness.as_ref()) {
            witnesses.push(WitnessJson {
                kind: "absolute_zero_divisor".into(),
                element: element_to_json(g, w),
            });
        }
        OracleJson {
            schema: SCHEMA,
            field: alg.field().to_string(),
            lp_holds: lp.holds,
            generating_units: Vec::new(),
            components: Vec::new(),
            socle_dimension: socle.dimension(),
            basis: subspace_to_json(alg, &socle.socle),
            minimal_ideals: socle
                .minimal_ideals
                .iter()
                .map(|m| MinimalIdealJson {
                    generator: element_to_json(g, &m.generator),
                    dimension: m.ideal.dimension(),
                    basis: subspace_to_json(alg, m.ideal.basis()),
                })
                .collect(),
            witnesses,
            semiprime: semiprime.map(|s| s.semiprime),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationJson {
    pub schema: u32,
    pub valid: bool,
    pub elements: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub units: Option<usize>,
    pub violations: Vec<String>,
    pub truncated: bool,
}

impl ValidationJson {
    pub fn new(elements: usize, g: Option<&FiniteGroupoid>, report: &ValidationReport) -> Self {
        ValidationJson {
            schema: SCHEMA,
            valid: report.is_valid(),
            elements,
            units: g.filter(|_| report.is_valid()).map(|g| g.units().len()),
            violations: report.violations.iter().map(|v| v.to_string()).collect(),
            truncated: report.truncated,
        }
    }
}

/// A block size: a number, or the string `"infinite"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SizeJson {
    Finite(u128),
    Infinite(String),
}

impl From<OrbitSize> for SizeJson {
    fn from(s: OrbitSize) -> Self {
        match s {
            OrbitSize::Finite(n) => SizeJson::Finite(n),
            OrbitSize::Infinite => SizeJson::Infinite("infinite".into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub class_representative: String,
    pub size: SizeJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub vertex: String,
    pub line_point: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub boundary_path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheckJson {
    pub field: String,
    pub oracle_method: String,
    pub engine_socle_dimension: usize,
    pub oracle_socle_dimension: usize,
    pub same_subspace: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckJson {
    pub field: String,
    pub groupoid_elements: usize,
    pub engine_matrix_sizes: Vec<usize>,
    pub block_sizes_match: bool,
    pub oracle: Vec<OracleCheckJson>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSocleJson {
    pub schema: u32,
    pub line_points: Vec<String>,
    pub vertices: Vec<VertexJson>,
    pub blocks: Vec<BlockJson>,
    pub socle_is_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cross_check: Option<CrossCheckJson>,
}

impl GraphSocleJson {
    pub fn new(g: &DirectedGraph, lp: &LinePointReport, blocks: &[Block]) -> Self {
        let names = g.vertices();
        GraphSocleJson {
            schema: SCHEMA,
            line_points: lp.line_points.iter().map(|&v| names[v].clone()).collect(),
            vertices: lp
                .status
                .iter()
                .enumerate()
                .map(|(v, s)| match s {
                    VertexStatus::LinePoint { path, .. } => VertexJson {
                        vertex: names[v].clone(),
                        line_point: true,
                        boundary_path: Some(path.clone()),
                        reason: None,
                    },
                    VertexStatus::NotLinePoint(why) => VertexJson {
                        vertex: names[v].clone(),
                        line_point: false,
                        boundary_path: None,
                        reason: Some(why.to_string()),
                    },
                })
                .collect(),
            blocks: blocks
                .iter()
                .map(|b| BlockJson {
                    class_representative: names[b.sink].clone(),
                    size: b.size.into(),
                })
                .collect(),
            socle_is_zero: blocks.is_empty(),
            cross_check: None,
        }
    }
}

/// Printed for errors other than the LP refusal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub schema: u32,
    pub error: String,
    pub message: String,
}

impl ErrorJson {
    pub fn new(e: &Error) -> Self {
        ErrorJson {
            schema: SCHEMA,
            error: error_kind(e).to_string(),
            message: e.to_string(),
        }
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Json(_) | Error::Parse(_) => "malformed_input",
        Error::Io(_) => "io",
        Error::InvalidGroupoid(_) | Error::EmptyGroupoid => "invalid_groupoid",
        Error::InvalidGraph(_) => "invalid_graph",
        Error::CyclicGraph(_) => "cyclic_graph",
        Error::GroupoidTooLarge { .. } | Error::SizeCap { .. } => "size_cap",
        Error::LpViolated { .. } => "lp_violated",
        Error::Consistency(_) => "consistency",
        _ => "invalid_request",
    }
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}
