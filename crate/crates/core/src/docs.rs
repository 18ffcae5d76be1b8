//! Bit-exact JSON documents for domains, reports, verification tables,
//! bound scans and case analyses.
//!
//! Every rational is serialized as the string `p/q` (`p` when the
//! denominator is one) and every Gaussian rational either as that string
//! (zero imaginary part) or as `{"re": "...", "im": "..."}`, so documents
//! round-trip losslessly and identical runs emit identical bytes. All
//! schemas carry a top-level versioned `schema` field.

use serde::{Deserialize, Serialize};

use crate::catalog::{named_domain, BoundScan, CaseAnalysis, Conclusion, VerificationTable};
use crate::cone::{ConeAtom, ConeSpec, TransitivityReport};
use crate::error::{Error, Result};
use crate::graded::{
    AssociatedPair, GradedReport, HalfGenerator, OneGenerator, SiegelDomainSpec, SymTensor,
};
use crate::hermitian::HermitianTuple;
use crate::matrix::Matrix;
use crate::scalar::{format_rational, parse_rational};
use crate::{GaussianMatrix, GaussianRational, Rational};

pub const DOMAIN_SCHEMA: &str = "siegel-domain/1";
pub const REPORT_SCHEMA: &str = "siegel-report/1";
pub const VERIFY_SCHEMA: &str = "siegel-verify/1";
pub const BOUNDS_SCHEMA: &str = "siegel-bounds/1";
pub const CASE_SCHEMA: &str = "siegel-case-analysis/1";

/// A matrix entry: `"p/q"` for real values, `{re, im}` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryDoc {
    Real(String),
    Complex { re: String, im: String },
}

impl EntryDoc {
    pub fn from_gaussian(z: &GaussianRational) -> Self {
        if z.im == Rational::from_integer(0.into()) {
            EntryDoc::Real(format_rational(&z.re))
        } else {
            EntryDoc::Complex {
                re: format_rational(&z.re),
                im: format_rational(&z.im),
            }
        }
    }

    pub fn to_gaussian(&self) -> Result<GaussianRational> {
        match self {
            EntryDoc::Real(s) => Ok(GaussianRational::new(
                parse_rational(s)?,
                Rational::from_integer(0.into()),
            )),
            EntryDoc::Complex { re, im } => Ok(GaussianRational::new(
                parse_rational(re)?,
                parse_rational(im)?,
            )),
        }
    }
}

fn matrix_to_doc(m: &GaussianMatrix) -> Vec<Vec<EntryDoc>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| EntryDoc::from_gaussian(m.at(i, j)))
                .collect()
        })
        .collect()
}

fn real_matrix_to_doc(m: &crate::RationalMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_rational(m.at(i, j))).collect())
        .collect()
}

fn matrix_from_doc(rows: &[Vec<EntryDoc>]) -> Result<GaussianMatrix> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::InvalidParameter("ragged matrix rows".into()));
    }
    let mut data = Vec::with_capacity(nrows * ncols);
    for row in rows {
        for e in row {
            data.push(e.to_gaussian()?);
        }
    }
    Ok(Matrix::new(nrows, ncols, data))
}

/// Cone description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ConeDoc {
    Halfline,
    Orthant { dim: usize },
    Lorentz { dim: usize },
    Product { factors: Vec<ConeDoc> },
}

impl ConeDoc {
    pub fn from_cone(cone: &ConeSpec) -> Self {
        let atom_doc = |a: &ConeAtom| match a {
            ConeAtom::Orthant(1) => ConeDoc::Halfline,
            ConeAtom::Orthant(k) => ConeDoc::Orthant { dim: *k },
            ConeAtom::Lorentz(k) => ConeDoc::Lorentz { dim: *k },
        };
        let atoms = cone.atoms();
        if atoms.len() == 1 {
            atom_doc(&atoms[0])
        } else {
            ConeDoc::Product {
                factors: atoms.iter().map(atom_doc).collect(),
            }
        }
    }

    pub fn to_cone(&self) -> Result<ConeSpec> {
        match self {
            ConeDoc::Halfline => Ok(ConeSpec::half_line()),
            ConeDoc::Orthant { dim } => {
                if *dim < 1 {
                    return Err(Error::InvalidParameter("orthant needs dim >= 1".into()));
                }
                Ok(ConeSpec::orthant(*dim))
            }
            ConeDoc::Lorentz { dim } => ConeSpec::lorentz(*dim),
            ConeDoc::Product { factors } => {
                let fs: Result<Vec<ConeSpec>> = factors.iter().map(ConeDoc::to_cone).collect();
                ConeSpec::product(fs?)
            }
        }
    }
}

/// Input document describing a domain, either by catalog name and rational
/// parameters or by an explicit cone plus Hermitian tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainDocument {
    pub schema: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cone: Option<ConeDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hermitian: Option<Vec<Vec<Vec<EntryDoc>>>>,
}

impl DomainDocument {
    pub fn from_spec(name: Option<&str>, spec: &SiegelDomainSpec) -> Self {
        DomainDocument {
            schema: DOMAIN_SCHEMA.to_string(),
            name: name.map(str::to_string),
            params: None,
            cone: Some(ConeDoc::from_cone(spec.cone())),
            hermitian: Some(spec.form().components().iter().map(matrix_to_doc).collect()),
        }
    }

    /// Resolve to a domain spec. `validate = false` skips the Ω-Hermitian
    /// check and flags the spec unvalidated.
    pub fn to_spec(&self, validate: bool) -> Result<(Option<String>, SiegelDomainSpec)> {
        if self.schema != DOMAIN_SCHEMA {
            return Err(Error::InvalidParameter(format!(
                "unsupported schema {:?}, expected {DOMAIN_SCHEMA:?}",
                self.schema
            )));
        }
        match (&self.name, &self.cone, &self.hermitian) {
            (Some(name), None, None) => {
                let params: Result<Vec<Rational>> = self
                    .params
                    .as_deref()
                    .unwrap_or(&[])
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect();
                let domain = named_domain(name, &params?)?;
                Ok((Some(domain.name), domain.spec))
            }
            (None, Some(cone_doc), Some(hermitian)) => {
                let cone = cone_doc.to_cone()?;
                let comps: Result<Vec<GaussianMatrix>> =
                    hermitian.iter().map(|m| matrix_from_doc(m)).collect();
                let comps = comps?;
                let m = comps.first().map_or(0, GaussianMatrix::rows);
                let form = HermitianTuple::new(cone.dim(), m, comps)?;
                let spec = if validate {
                    SiegelDomainSpec::new(cone, form)?
                } else {
                    SiegelDomainSpec::new_unvalidated(cone, form)?
                };
                Ok((None, spec))
            }
            (Some(_), _, _) => Err(Error::InvalidParameter(
                "give either name/params or cone/hermitian, not both".into(),
            )),
            _ => Err(Error::InvalidParameter(
                "document needs a name or an explicit cone and hermitian tuple".into(),
            )),
        }
    }
}

/// Parse any document type from JSON with line/column positions on error.
pub fn from_json_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| {
        Error::InvalidParameter(format!(
            "JSON parse error at line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

/// Deterministic pretty serialization.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("document serialization cannot fail")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsDoc {
    pub g_minus_1: usize,
    pub g_minus_half: usize,
    pub g_0: usize,
    pub g_half: usize,
    pub g_1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheckDoc {
    pub label: String,
    pub quantity: String,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneityDoc {
    pub verdict: String,
    pub points_checked: usize,
    pub orbit_ranks: Vec<usize>,
}

impl HomogeneityDoc {
    fn from_report(r: &TransitivityReport) -> Self {
        HomogeneityDoc {
            verdict: r.verdict.as_str().to_string(),
            points_checked: r.ranks.len(),
            orbit_ranks: r.ranks.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub a: Vec<Vec<String>>,
    pub b: Vec<Vec<EntryDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfGeneratorDoc {
    pub phi: Vec<Vec<EntryDoc>>,
    /// Per output component, the symmetric matrix of values on basis pairs.
    pub c: Vec<Vec<Vec<EntryDoc>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneGeneratorDoc {
    /// Per output component, the symmetric matrix of the real form `a`.
    pub a: Vec<Vec<Vec<String>>>,
    /// Per output component, the `k×m` matrix of `b(e_t, e_d)` coefficients.
    pub b: Vec<Vec<Vec<EntryDoc>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorsDoc {
    pub g_minus_1: Vec<Vec<String>>,
    pub g_minus_half: Vec<Vec<EntryDoc>>,
    pub g_0: Vec<PairDoc>,
    pub g_half: Vec<HalfGeneratorDoc>,
    pub g_1: Vec<OneGeneratorDoc>,
}

/// Output document for one domain's graded report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub cone: ConeDoc,
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub dims: DimsDoc,
    pub s: usize,
    pub dim_cone_alg: usize,
    pub dim_stabilizer: usize,
    pub d: usize,
    pub bound_checks: Vec<BoundCheckDoc>,
    pub all_bounds_hold: bool,
    pub homogeneity: HomogeneityDoc,
    pub validation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<GeneratorsDoc>,
}

fn sym_tensor_to_doc(t: &SymTensor) -> Vec<Vec<Vec<EntryDoc>>> {
    (0..t.dim_out)
        .map(|out| {
            (0..t.dim_in)
                .map(|d| {
                    (0..t.dim_in)
                        .map(|e| EntryDoc::from_gaussian(t.value(out, d, e)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn pair_doc(p: &AssociatedPair) -> PairDoc {
    PairDoc {
        a: real_matrix_to_doc(&p.a),
        b: matrix_to_doc(&p.b),
    }
}

fn half_doc(g: &HalfGenerator) -> HalfGeneratorDoc {
    HalfGeneratorDoc {
        phi: matrix_to_doc(&g.phi),
        c: sym_tensor_to_doc(&g.c),
    }
}

fn one_doc(g: &OneGenerator, k: usize, m: usize) -> OneGeneratorDoc {
    let a = (0..k)
        .map(|j| {
            (0..k)
                .map(|t| {
                    (0..k)
                        .map(|l| format_rational(&g.a.value(j, t, l).re))
                        .collect()
                })
                .collect()
        })
        .collect();
    let b = (0..m)
        .map(|c| {
            (0..k)
                .map(|t| {
                    (0..m)
                        .map(|d| EntryDoc::from_gaussian(g.b_entry(c, t, d, k, m)))
                        .collect()
                })
                .collect()
        })
        .collect();
    OneGeneratorDoc { a, b }
}

impl ReportDocument {
    pub fn from_report(
        name: Option<&str>,
        spec: &SiegelDomainSpec,
        report: &GradedReport,
        include_generators: bool,
    ) -> Self {
        let generators = include_generators.then(|| GeneratorsDoc {
            g_minus_1: report
                .generators
                .minus_one
                .iter()
                .map(|v| v.iter().map(format_rational).collect())
                .collect(),
            g_minus_half: report
                .generators
                .minus_half
                .iter()
                .map(|v| v.iter().map(EntryDoc::from_gaussian).collect())
                .collect(),
            g_0: report.generators.zero.iter().map(pair_doc).collect(),
            g_half: report.generators.half.iter().map(half_doc).collect(),
            g_1: report
                .generators
                .one
                .iter()
                .map(|g| one_doc(g, report.k, report.m))
                .collect(),
        });
        ReportDocument {
            schema: REPORT_SCHEMA.to_string(),
            name: name.map(str::to_string),
            cone: ConeDoc::from_cone(spec.cone()),
            k: report.k,
            m: report.m,
            n: report.n,
            dims: DimsDoc {
                g_minus_1: report.dims.d_minus_one,
                g_minus_half: report.dims.d_minus_half,
                g_0: report.dims.d_zero,
                g_half: report.dims.d_half,
                g_1: report.dims.d_one,
            },
            s: report.s,
            dim_cone_alg: report.dim_cone_alg,
            dim_stabilizer: report.dim_stabilizer,
            d: report.d,
            bound_checks: report
                .bound_checks
                .iter()
                .map(|c| BoundCheckDoc {
                    label: c.label.to_string(),
                    quantity: c.quantity.clone(),
                    lhs: format_rational(&c.lhs),
                    relation: match c.relation {
                        crate::graded::Relation::Le => "<=".to_string(),
                        crate::graded::Relation::Eq => "==".to_string(),
                    },
                    rhs: format_rational(&c.rhs),
                    holds: c.holds,
                })
                .collect(),
            all_bounds_hold: report.all_bounds_hold(),
            homogeneity: HomogeneityDoc::from_report(&report.homogeneity),
            validation: report.validation.as_str().to_string(),
            generators,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRowDoc {
    pub section: String,
    pub name: String,
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub schema: String,
    pub pass: bool,
    pub rows: Vec<VerifyRowDoc>,
}

impl VerifyDocument {
    pub fn from_table(table: &VerificationTable) -> Self {
        VerifyDocument {
            schema: VERIFY_SCHEMA.to_string(),
            pass: table.all_pass(),
            rows: table
                .rows
                .iter()
                .map(|r| VerifyRowDoc {
                    section: r.section.to_string(),
                    name: r.name.clone(),
                    quantity: r.quantity.clone(),
                    expected: r.expected.clone(),
                    computed: r.computed.clone(),
                    pass: r.pass,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRowDoc {
    pub n: usize,
    pub k: usize,
    pub rhs: String,
    pub threshold: String,
    pub eliminated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDocument {
    pub schema: String,
    pub pattern_holds: bool,
    pub rows: Vec<BoundRowDoc>,
}

impl BoundsDocument {
    pub fn from_scan(scan: &BoundScan) -> Self {
        BoundsDocument {
            schema: BOUNDS_SCHEMA.to_string(),
            pattern_holds: scan.pattern_holds,
            rows: scan
                .rows
                .iter()
                .map(|r| BoundRowDoc {
                    n: r.n,
                    k: r.k,
                    rhs: format_rational(&r.rhs),
                    threshold: format_rational(&r.threshold),
                    eliminated: r.eliminated,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseStepDoc {
    pub case: String,
    pub branch: String,
    pub facts: Vec<(String, String)>,
    pub conclusion: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseDocument {
    pub schema: String,
    pub n: usize,
    pub steps: Vec<CaseStepDoc>,
    pub survivors: Vec<(String, usize)>,
}

impl CaseDocument {
    pub fn from_analysis(analysis: &CaseAnalysis) -> Self {
        CaseDocument {
            schema: CASE_SCHEMA.to_string(),
            n: analysis.n,
            steps: analysis
                .steps
                .iter()
                .map(|s| CaseStepDoc {
                    case: s.case.clone(),
                    branch: s.branch.clone(),
                    facts: s.facts.clone(),
                    conclusion: match &s.conclusion {
                        Conclusion::Excluded(reason) => format!("excluded: {reason}"),
                        Conclusion::Survivor { d } => format!("survivor with d = {d}"),
                    },
                })
                .collect(),
            survivors: analysis.survivors.clone(),
        }
    }
}
