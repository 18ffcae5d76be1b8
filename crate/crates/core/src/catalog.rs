//! Named domain constructors, the verification table that reproduces the
//! classification's dimension values, the bound-elimination scan, and the
//! case-by-case replay of the low-dimension analysis.

use num_traits::Zero;

use crate::cone::ConeSpec;
use crate::error::{Error, Result};
use crate::graded::{bound_rhs, report, GradedReport, SiegelDomainSpec};
use crate::hermitian::{positive_combination, proportional_to, skew_space, HermitianTuple};
use crate::scalar::{format_rational, rat_int};
use crate::{GaussianMatrix, GaussianRational, Rational};

/// A catalog domain: name, parameters, and its validated spec.
#[derive(Debug, Clone)]
pub struct NamedDomain {
    pub name: String,
    pub params: Vec<Rational>,
    pub spec: SiegelDomainSpec,
}

fn qv(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat_int(x)).collect()
}

fn require_params(name: &str, params: &[Rational], count: usize) -> Result<()> {
    if params.len() != count {
        return Err(Error::InvalidParameter(format!(
            "{name} takes {count} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn nat_param(name: &str, params: &[Rational], min: i64) -> Result<usize> {
    require_params(name, params, 1)?;
    let p = &params[0];
    if !p.is_integer() || p < &rat_int(min) {
        return Err(Error::InvalidParameter(format!(
            "{name} needs an integer parameter >= {min}, got {}",
            format_rational(p)
        )));
    }
    p.to_integer()
        .try_into()
        .map_err(|_| Error::InvalidParameter(format!("{name} parameter too large")))
}

/// Check the pair-family constraints: all parameters nonnegative and
/// `αδ − βγ ≠ 0`.
fn check_pair_family(name: &str, p: &[Rational]) -> Result<()> {
    if p.iter().any(|x| x < &Rational::zero()) {
        return Err(Error::InvalidParameter(format!(
            "{name} requires alpha, beta, gamma, delta >= 0"
        )));
    }
    let det = p[0].clone() * p[3].clone() - p[1].clone() * p[2].clone();
    if det.is_zero() {
        return Err(Error::InvalidParameter(format!(
            "{name} requires alpha*delta - beta*gamma != 0"
        )));
    }
    Ok(())
}

/// Check that `v` lies in the closed Lorentz cone minus the origin.
fn check_lorentz_direction(name: &str, v: &[Rational]) -> Result<()> {
    let q = v[0].clone() * v[0].clone() - v[1].clone() * v[1].clone() - v[2].clone() * v[2].clone();
    if v[0] <= Rational::zero() || q < Rational::zero() {
        return Err(Error::InvalidParameter(format!(
            "{name} requires v1 > 0 and v1^2 >= v2^2 + v3^2"
        )));
    }
    Ok(())
}

/// Build a named catalog domain.
///
/// Accepted names: `ball n`, `polydisc n`, `D1 n`, `D2 n`,
/// `D3 α β γ δ`, `D4 α β γ δ`, `D5 v1 v2 v3`, `D6 v1 v2 v3`,
/// `D7 [a1 b1 a2 b2 a3 b3]`, `D8 [v1 v2 v3]`, `T3`, `T4`.
pub fn named_domain(name: &str, params: &[Rational]) -> Result<NamedDomain> {
    let spec = match name {
        "ball" => {
            let n = nat_param(name, params, 1)?;
            let cone = ConeSpec::half_line();
            let form = HermitianTuple::new(1, n - 1, vec![GaussianMatrix::identity(n - 1)])?;
            SiegelDomainSpec::new(cone, form)?
        }
        "polydisc" => {
            let n = nat_param(name, params, 1)?;
            SiegelDomainSpec::new(ConeSpec::orthant(n), HermitianTuple::tube(n))?
        }
        "D1" | "D2" => {
            let n = nat_param(name, params, 3)?;
            let m = n - 2;
            let id = GaussianMatrix::identity(m);
            let second = if name == "D1" {
                GaussianMatrix::zeros(m, m)
            } else {
                id.clone()
            };
            let form = HermitianTuple::new(2, m, vec![id, second])?;
            SiegelDomainSpec::new(ConeSpec::orthant(2), form)?
        }
        "D3" | "D4" => {
            require_params(name, params, 4)?;
            check_pair_family(name, params)?;
            let (alpha, beta, gamma, delta) = (&params[0], &params[1], &params[2], &params[3]);
            let diags = if name == "D3" {
                vec![
                    vec![alpha.clone(), beta.clone()],
                    vec![gamma.clone(), delta.clone()],
                ]
            } else {
                vec![
                    vec![alpha.clone(), beta.clone(), beta.clone()],
                    vec![gamma.clone(), delta.clone(), delta.clone()],
                ]
            };
            SiegelDomainSpec::new(ConeSpec::orthant(2), HermitianTuple::diagonal(&diags)?)?
        }
        "D5" => {
            require_params(name, params, 3)?;
            if params.iter().any(|x| x < &Rational::zero()) || params.iter().all(Zero::is_zero) {
                return Err(Error::InvalidParameter(
                    "D5 requires a nonzero vector with nonnegative entries".into(),
                ));
            }
            let form = HermitianTuple::scalar_family(params, &GaussianMatrix::identity(1))?;
            SiegelDomainSpec::new(ConeSpec::orthant(3), form)?
        }
        "D6" | "D8" => {
            let v: Vec<Rational> = if params.is_empty() && name == "D8" {
                qv(&[1, 1, 0])
            } else {
                require_params(name, params, 3)?;
                params.to_vec()
            };
            check_lorentz_direction(name, &v)?;
            let fiber = if name == "D6" { 1 } else { 2 };
            let form = HermitianTuple::scalar_family(&v, &GaussianMatrix::identity(fiber))?;
            SiegelDomainSpec::new(ConeSpec::lorentz(3)?, form)?
        }
        "D7" => {
            let p: Vec<Rational> = if params.is_empty() {
                qv(&[1, 0, 0, 1, 1, 1])
            } else {
                require_params(name, params, 6)?;
                params.to_vec()
            };
            let diags = vec![
                vec![p[0].clone(), p[1].clone()],
                vec![p[2].clone(), p[3].clone()],
                vec![p[4].clone(), p[5].clone()],
            ];
            SiegelDomainSpec::new(ConeSpec::orthant(3), HermitianTuple::diagonal(&diags)?)?
        }
        "T3" => {
            require_params(name, params, 0)?;
            SiegelDomainSpec::new(ConeSpec::lorentz(3)?, HermitianTuple::tube(3))?
        }
        "T4" => {
            require_params(name, params, 0)?;
            SiegelDomainSpec::new(ConeSpec::lorentz(4)?, HermitianTuple::tube(4))?
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown catalog name {other:?}"
            )))
        }
    };
    Ok(NamedDomain {
        name: name.to_string(),
        params: params.to_vec(),
        spec,
    })
}

/// Tube domain over an arbitrary catalog cone.
pub fn tube_domain(cone: ConeSpec) -> Result<NamedDomain> {
    let k = cone.dim();
    let spec = SiegelDomainSpec::new(cone, HermitianTuple::tube(k))?;
    Ok(NamedDomain {
        name: format!("tube(k={k})"),
        params: Vec::new(),
        spec,
    })
}

/// Direct product: direct-sum cone and block-diagonal Hermitian tuple.
pub fn product_domain(factors: &[NamedDomain]) -> Result<NamedDomain> {
    if factors.is_empty() {
        return Err(Error::InvalidParameter("empty product".into()));
    }
    let cone = ConeSpec::product(factors.iter().map(|f| f.spec.cone().clone()).collect())?;
    let total_m: usize = factors.iter().map(|f| f.spec.m()).sum();
    let total_k: usize = factors.iter().map(|f| f.spec.k()).sum();
    let mut components = Vec::with_capacity(total_k);
    let mut m_offset = 0;
    for f in factors {
        let (fk, fm) = (f.spec.k(), f.spec.m());
        for j in 0..fk {
            let comp = f.spec.form().component(j).clone();
            components.push(GaussianMatrix::from_fn(total_m, total_m, |a, b| {
                if a >= m_offset && a < m_offset + fm && b >= m_offset && b < m_offset + fm {
                    comp.at(a - m_offset, b - m_offset).clone()
                } else {
                    GaussianRational::zero()
                }
            }));
        }
        m_offset += fm;
    }
    let form = HermitianTuple::new(total_k, total_m, components)?;
    let spec = SiegelDomainSpec::new(cone, form)?;
    let name = factors
        .iter()
        .map(|f| f.name.clone())
        .collect::<Vec<_>>()
        .join("x");
    Ok(NamedDomain {
        name,
        params: Vec::new(),
        spec,
    })
}

/// One checked fact of the verification table.
#[derive(Debug, Clone)]
pub struct VerifyRow {
    pub section: &'static str,
    pub name: String,
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

/// The full verification table.
#[derive(Debug, Clone)]
pub struct VerificationTable {
    pub rows: Vec<VerifyRow>,
}

impl VerificationTable {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

struct TableBuilder {
    rows: Vec<VerifyRow>,
}

impl TableBuilder {
    fn push(
        &mut self,
        section: &'static str,
        name: &str,
        quantity: &str,
        expected: String,
        computed: String,
    ) {
        let pass = expected == computed;
        self.rows.push(VerifyRow {
            section,
            name: name.to_string(),
            quantity: quantity.to_string(),
            expected,
            computed,
            pass,
        });
    }

    fn number(
        &mut self,
        section: &'static str,
        name: &str,
        quantity: &str,
        expected: usize,
        computed: usize,
    ) {
        self.push(
            section,
            name,
            quantity,
            expected.to_string(),
            computed.to_string(),
        );
    }
}

fn ball(n: usize) -> NamedDomain {
    let mut d = named_domain("ball", &[rat_int(n as i64)]).expect("ball");
    d.name = format!("B{n}");
    d
}

fn product_named(name: &str, fs: &[NamedDomain]) -> NamedDomain {
    let mut d = product_domain(fs).expect("product");
    d.name = name.to_string();
    d
}

/// Reproduce the classification tables and case values; every row is an
/// exact comparison.
pub fn verify_paper() -> Result<VerificationTable> {
    let mut t = TableBuilder { rows: Vec::new() };

    // --- Automorphism algebras of the catalog cones.
    let omega5 = ConeSpec::product(vec![ConeSpec::lorentz(3)?, ConeSpec::half_line()])?;
    let cones: Vec<(&str, ConeSpec, usize, bool)> = vec![
        ("half-line", ConeSpec::half_line(), 1, true),
        ("Omega1", ConeSpec::orthant(2), 2, true),
        ("Omega2", ConeSpec::orthant(3), 3, false),
        ("Omega3", ConeSpec::lorentz(3)?, 4, true),
        ("Omega4", ConeSpec::orthant(4), 4, false),
        ("Omega5", omega5.clone(), 5, false),
        ("Omega6", ConeSpec::lorentz(4)?, 7, true),
    ];
    for (name, cone, expected_dim, expect_eq) in &cones {
        let dim = cone.automorphism_algebra_basis().dim();
        t.number("cones", name, "dim g(Omega)", *expected_dim, dim);
        let bound = crate::cone::dimension_bound(cone.dim());
        let attained = rat_int(dim as i64) == bound;
        t.push(
            "cones",
            name,
            "attains bound k^2/2 - k/2 + 1",
            expect_eq.to_string(),
            attained.to_string(),
        );
    }

    // --- Shared reports.
    let b = |n: usize| ball(n);
    let t3 = {
        let mut d = named_domain("T3", &[])?;
        d.name = "T3".into();
        d
    };
    let t4 = named_domain("T4", &[])?;

    let dimension_entries: Vec<(NamedDomain, usize)> = vec![
        (b(2), 8),
        (b(3), 15),
        (b(4), 24),
        (b(5), 35),
        (b(6), 48),
        (product_named("B2xB1", &[b(2), b(1)]), 11),
        (product_named("B3xB1", &[b(3), b(1)]), 18),
        (product_named("B4xB1", &[b(4), b(1)]), 27),
        (product_named("B1xB1xB1", &[b(1), b(1), b(1)]), 9),
        (product_named("B2xB2", &[b(2), b(2)]), 16),
        (product_named("B2xB1xB1", &[b(2), b(1), b(1)]), 14),
        (product_named("B3xB2", &[b(3), b(2)]), 23),
        (t3.clone(), 10),
        (t4.clone(), 15),
        (product_named("B1xT3", &[b(1), t3.clone()]), 13),
    ];
    let mut reports: Vec<(String, GradedReport)> = Vec::new();
    for (domain, expected_d) in &dimension_entries {
        let rep = report(&domain.spec)?;
        t.number("dimension-table", &domain.name, "d", *expected_d, rep.d);
        let n = rep.n;
        t.push(
            "dimension-table",
            &domain.name,
            "bound checks",
            "all hold".into(),
            if rep.all_bounds_hold() {
                "all hold".into()
            } else {
                "violated".into()
            },
        );
        let _ = n;
        reports.push((domain.name.clone(), rep));
    }
    let find = |reports: &Vec<(String, GradedReport)>, name: &str| -> GradedReport {
        reports
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r.clone())
            .expect("report")
    };

    // --- Low-dimension table (n = 2, 3).
    let b1xb1 = product_named("B1xB1", &[b(1), b(1)]);
    let low_entries: Vec<(String, usize, GradedReport)> = vec![
        ("B2".into(), 8, find(&reports, "B2")),
        ("B1xB1".into(), 6, report(&b1xb1.spec)?),
        ("B3".into(), 15, find(&reports, "B3")),
        ("B2xB1".into(), 11, find(&reports, "B2xB1")),
        ("B1xB1xB1".into(), 9, find(&reports, "B1xB1xB1")),
        ("T3".into(), 10, find(&reports, "T3")),
    ];
    for (name, expected, rep) in &low_entries {
        t.number("low-dimension-table", name, "d", *expected, rep.d);
    }

    // --- Homogeneity verdicts.
    for (name, rep) in &reports {
        t.push(
            "homogeneity",
            name,
            "verdict",
            "transitive-certified".into(),
            rep.homogeneity.verdict.as_str().into(),
        );
    }
    let negatives: Vec<(&str, NamedDomain)> = vec![
        ("D2(4)", named_domain("D2", &[rat_int(4)])?),
        ("D5(1,1,1)", named_domain("D5", &qv(&[1, 1, 1]))?),
        ("D5(1,1,0)", named_domain("D5", &qv(&[1, 1, 0]))?),
        ("D6(2,1,0)", named_domain("D6", &qv(&[2, 1, 0]))?),
        ("D8(2,1,0)", named_domain("D8", &qv(&[2, 1, 0]))?),
    ];
    let mut negative_reports: Vec<(String, GradedReport)> = Vec::new();
    for (label, domain) in &negatives {
        let rep = report(&domain.spec)?;
        t.push(
            "homogeneity",
            label,
            "verdict",
            "not-transitive".into(),
            rep.homogeneity.verdict.as_str().into(),
        );
        negative_reports.push((label.to_string(), rep));
    }

    // --- Case values.
    let d6 = named_domain("D6", &qv(&[1, 1, 0]))?;
    let d6_rep = report(&d6.spec)?;
    t.push(
        "case-values",
        "D6(1,1,0)",
        "graded dims",
        "(3, 2, 4, 0, 1)".into(),
        format!("{:?}", d6_rep.dims.as_tuple()),
    );
    t.number("case-values", "D6(1,1,0)", "d", 10, d6_rep.d);
    t.number("case-values", "D6(1,1,0)", "s", 1, d6_rep.s);
    t.number(
        "case-values",
        "D6(1,1,0)",
        "dim stabilizer",
        3,
        d6_rep.dim_stabilizer,
    );

    let d3 = named_domain("D3", &qv(&[1, 1, 0, 1]))?;
    let d3_rep = report(&d3.spec)?;
    t.number(
        "case-values",
        "D3(1,1,0,1)",
        "dim g_{1/2}",
        0,
        d3_rep.dims.d_half,
    );
    t.number(
        "case-values",
        "D3(1,1,0,1)",
        "dim g_1",
        0,
        d3_rep.dims.d_one,
    );
    t.number("case-values", "D3(1,1,0,1)", "s", 2, d3_rep.s);
    t.push(
        "case-values",
        "D3(1,1,0,1)",
        "d <= 10",
        "true".into(),
        (d3_rep.d <= 10).to_string(),
    );

    let d4 = named_domain("D4", &qv(&[1, 1, 0, 1]))?;
    let d4_rep = report(&d4.spec)?;
    t.number(
        "case-values",
        "D4(1,1,0,1)",
        "dim g_{1/2}",
        0,
        d4_rep.dims.d_half,
    );
    t.number(
        "case-values",
        "D4(1,1,0,1)",
        "dim g_1",
        0,
        d4_rep.dims.d_one,
    );
    t.number("case-values", "D4(1,1,0,1)", "s", 5, d4_rep.s);

    let d8 = named_domain("D8", &[])?;
    let d8_rep = report(&d8.spec)?;
    t.number("case-values", "D8(1,1,0)", "s", 4, d8_rep.s);
    t.number("case-values", "D8(1,1,0)", "dim g_0", 7, d8_rep.dims.d_zero);
    t.number(
        "case-values",
        "D8(1,1,0)",
        "dim stabilizer",
        3,
        d8_rep.dim_stabilizer,
    );

    let d2_rep = &negative_reports[0].1;
    t.number(
        "case-values",
        "D2(4)",
        "dim stabilizer",
        1,
        d2_rep.dim_stabilizer,
    );
    let d5_rep = &negative_reports[1].1;
    t.number(
        "case-values",
        "D5(1,1,1)",
        "dim stabilizer",
        1,
        d5_rep.dim_stabilizer,
    );

    // --- Product additivity of d.
    let additivity: Vec<(&str, Vec<usize>, usize)> = vec![
        ("B2xB1", vec![8, 3], 11),
        ("B3xB1", vec![15, 3], 18),
        ("B4xB1", vec![24, 3], 27),
        ("B1xB1xB1", vec![3, 3, 3], 9),
        ("B2xB2", vec![8, 8], 16),
        ("B2xB1xB1", vec![8, 3, 3], 14),
        ("B3xB2", vec![15, 8], 23),
        ("B1xT3", vec![3, 10], 13),
    ];
    let b1_d = report(&b(1).spec)?.d;
    t.number("products", "B1", "d", 3, b1_d);
    for (name, factor_ds, total) in &additivity {
        let rep = find(&reports, name);
        let sum: usize = factor_ds.iter().sum();
        t.push(
            "products",
            name,
            "d equals sum over factors",
            format!("{total} = {sum}"),
            format!("{} = {}", rep.d, sum),
        );
    }

    Ok(VerificationTable { rows: t.rows })
}

/// One `(n,k)` entry of the elimination scan.
#[derive(Debug, Clone)]
pub struct BoundScanRow {
    pub n: usize,
    pub k: usize,
    pub rhs: Rational,
    pub threshold: Rational,
    pub eliminated: bool,
}

/// Result of [`bound_scan`].
#[derive(Debug, Clone)]
pub struct BoundScan {
    pub rows: Vec<BoundScanRow>,
    /// Whether, across the scanned range, every `(n ≥ 5, k ≥ 4)` and every
    /// `(n ≥ 6, k = 3)` entry is eliminated.
    pub pattern_holds: bool,
}

/// Evaluate the closed-form bound against `n² − 3` over a rectangle of
/// `(n,k)` values; an entry is eliminated when the bound falls strictly
/// below the threshold.
pub fn bound_scan(n_min: usize, n_max: usize) -> Result<BoundScan> {
    if n_min < 4 {
        return Err(Error::InvalidParameter("scan requires n_min >= 4".into()));
    }
    if n_max < n_min {
        return Err(Error::InvalidParameter(
            "scan requires n_max >= n_min".into(),
        ));
    }
    let mut rows = Vec::new();
    let mut pattern_holds = true;
    for n in n_min..=n_max {
        let threshold = rat_int((n * n) as i64 - 3);
        for k in 2..=n {
            let rhs = bound_rhs(n, k);
            let eliminated = rhs < threshold;
            if (n >= 5 && k >= 4 && !eliminated) || (n >= 6 && k == 3 && !eliminated) {
                pattern_holds = false;
            }
            rows.push(BoundScanRow {
                n,
                k,
                rhs,
                threshold: threshold.clone(),
                eliminated,
            });
        }
    }
    Ok(BoundScan {
        rows,
        pattern_holds,
    })
}

/// Conclusion of one analysed branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conclusion {
    Excluded(String),
    Survivor { d: usize },
}

/// One analysed branch of the case analysis.
#[derive(Debug, Clone)]
pub struct CaseStep {
    pub case: String,
    pub branch: String,
    pub facts: Vec<(String, String)>,
    pub conclusion: Conclusion,
}

/// Computational replay of the case analysis for one total dimension.
#[derive(Debug, Clone)]
pub struct CaseAnalysis {
    pub n: usize,
    pub steps: Vec<CaseStep>,
    pub survivors: Vec<(String, usize)>,
}

struct StepBuilder {
    steps: Vec<CaseStep>,
    survivors: Vec<(String, usize)>,
}

impl StepBuilder {
    fn step(
        &mut self,
        case: &str,
        branch: &str,
        facts: Vec<(String, String)>,
        conclusion: Conclusion,
    ) {
        if let Conclusion::Survivor { d } = conclusion {
            self.survivors.push((branch.to_string(), d));
        }
        self.steps.push(CaseStep {
            case: case.to_string(),
            branch: branch.to_string(),
            facts,
            conclusion,
        });
    }
}

fn fact(label: &str, value: impl ToString) -> (String, String) {
    (label.to_string(), value.to_string())
}

/// Replay the exclusion arguments for `n = 4` or `n = 5` and return the
/// surviving domains with `d = n² − 3`.
pub fn case_analysis(n: usize) -> Result<CaseAnalysis> {
    match n {
        4 => case_analysis_n4(),
        5 => case_analysis_n5(),
        _ => Err(Error::InvalidParameter(
            "case analysis is implemented for n = 4 and n = 5".into(),
        )),
    }
}

fn case_analysis_n4() -> Result<CaseAnalysis> {
    let mut sb = StepBuilder {
        steps: Vec::new(),
        survivors: Vec::new(),
    };
    let target = 13usize;

    // k = 2: pair of forms on C^2.
    let d1 = report(&named_domain("D1", &[rat_int(4)])?.spec)?;
    let split = report(&product_domain(&[ball(3), ball(1)])?.spec)?;
    sb.step(
        "k = 2, n = 4",
        "D1(4)",
        vec![
            fact("d", d1.d),
            fact("d of B3xB1", split.d),
            fact("target", target),
        ],
        Conclusion::Excluded(format!("d = {} differs from {target}", d1.d)),
    );

    let d2 = report(&named_domain("D2", &[rat_int(4)])?.spec)?;
    sb.step(
        "k = 2, n = 4",
        "D2(4)",
        vec![
            fact("dim stabilizer", d2.dim_stabilizer),
            fact("homogeneity", d2.homogeneity.verdict.as_str()),
        ],
        Conclusion::Excluded("stabilizer algebra is not transitive on the cone".into()),
    );

    let d3 = report(&named_domain("D3", &qv(&[1, 1, 0, 1]))?.spec)?;
    let replay = 2 + 4 + d3.s + d3.dim_cone_alg + d3.dims.d_half + 2;
    sb.step(
        "k = 2, n = 4",
        "D3(1,1,0,1)",
        vec![
            fact("s", d3.s),
            fact("dim g_{1/2}", d3.dims.d_half),
            fact("dim g_1", d3.dims.d_one),
            fact("bound via g_{1/2} = 0", replay),
            fact("d", d3.d),
        ],
        Conclusion::Excluded(format!("upper bound {replay} is below {target}")),
    );

    // k = 3: scalar form against a three-dimensional cone.
    let d5_single = report(&named_domain("D5", &qv(&[1, 0, 0]))?.spec)?;
    let triple = report(&product_domain(&[ball(2), ball(1), ball(1)])?.spec)?;
    sb.step(
        "k = 3, n = 4",
        "D5(1,0,0)",
        vec![fact("d", d5_single.d), fact("d of B2xB1xB1", triple.d)],
        Conclusion::Excluded(format!("d = {} differs from {target}", d5_single.d)),
    );
    for v in [[1i64, 1, 0], [1, 1, 1]] {
        let rep = report(&named_domain("D5", &qv(&v))?.spec)?;
        sb.step(
            "k = 3, n = 4",
            &format!("D5({},{},{})", v[0], v[1], v[2]),
            vec![
                fact("dim stabilizer", rep.dim_stabilizer),
                fact("homogeneity", rep.homogeneity.verdict.as_str()),
            ],
            Conclusion::Excluded("stabilizer algebra is not transitive on the cone".into()),
        );
    }

    let d6_int = report(&named_domain("D6", &qv(&[2, 1, 0]))?.spec)?;
    sb.step(
        "k = 3, n = 4",
        "D6(2,1,0)",
        vec![
            fact("dim stabilizer", d6_int.dim_stabilizer),
            fact("homogeneity", d6_int.homogeneity.verdict.as_str()),
        ],
        Conclusion::Excluded(
            "interior direction vector: stabilizer is not transitive on the cone".into(),
        ),
    );

    let d6 = report(&named_domain("D6", &qv(&[1, 1, 0]))?.spec)?;
    let replay_d6 = 3 + 2 + d6.dims.d_zero + d6.dims.d_half + 3;
    sb.step(
        "k = 3, n = 4",
        "D6(1,1,0)",
        vec![
            fact("s", d6.s),
            fact("dim g_0", d6.dims.d_zero),
            fact("dim stabilizer", d6.dim_stabilizer),
            fact("dim g_{1/2}", d6.dims.d_half),
            fact("bound via g_{1/2} = 0", replay_d6),
            fact("d", d6.d),
        ],
        Conclusion::Excluded(format!("d = {} is below {target}", d6.d)),
    );

    // k = 4: tube domains over the three four-dimensional cones.
    let omega5 = ConeSpec::product(vec![ConeSpec::lorentz(3)?, ConeSpec::half_line()])?;
    let tubes: Vec<(&str, ConeSpec)> = vec![
        ("tube over orthant(4)", ConeSpec::orthant(4)),
        ("tube over Lorentz(3) x half-line", omega5),
        ("tube over Lorentz(4)", ConeSpec::lorentz(4)?),
    ];
    for (label, cone) in tubes {
        let rep = report(&tube_domain(cone)?.spec)?;
        let facts = vec![fact("d", rep.d), fact("target", target)];
        if rep.d == target {
            sb.step(
                "k = 4, n = 4",
                label,
                facts,
                Conclusion::Survivor { d: rep.d },
            );
        } else {
            sb.step(
                "k = 4, n = 4",
                label,
                facts,
                Conclusion::Excluded(format!("d = {} differs from {target}", rep.d)),
            );
        }
    }

    Ok(CaseAnalysis {
        n: 4,
        steps: sb.steps,
        survivors: sb.survivors,
    })
}

fn case_analysis_n5() -> Result<CaseAnalysis> {
    let mut sb = StepBuilder {
        steps: Vec::new(),
        survivors: Vec::new(),
    };
    let target = 22usize;

    // k >= 4 is eliminated by the closed-form bound.
    for k in [4usize, 5] {
        let rhs = bound_rhs(5, k);
        sb.step(
            "k >= 4, n = 5",
            &format!("k = {k}"),
            vec![
                fact("bound", format_rational(&rhs)),
                fact("threshold", target),
            ],
            Conclusion::Excluded(format!("bound {} is below {target}", format_rational(&rhs))),
        );
    }

    // k = 2.
    let d1 = report(&named_domain("D1", &[rat_int(5)])?.spec)?;
    sb.step(
        "k = 2, n = 5",
        "D1(5)",
        vec![fact("d", d1.d), fact("target", target)],
        Conclusion::Excluded(format!("d = {} differs from {target}", d1.d)),
    );
    let d2 = report(&named_domain("D2", &[rat_int(5)])?.spec)?;
    sb.step(
        "k = 2, n = 5",
        "D2(5)",
        vec![
            fact("dim stabilizer", d2.dim_stabilizer),
            fact("homogeneity", d2.homogeneity.verdict.as_str()),
        ],
        Conclusion::Excluded("stabilizer algebra is not transitive on the cone".into()),
    );

    // All three eigenvalues distinct: s is too small.
    let distinct = HermitianTuple::diagonal(&[qv(&[1, 1, 1]), qv(&[0, 1, 2])])?;
    let s_distinct = skew_space(&distinct).s;
    let required = 5 * 5 - 4 * 5 - 1;
    sb.step(
        "k = 2, n = 5",
        "three distinct eigenvalues",
        vec![fact("s", s_distinct), fact("required s", required)],
        Conclusion::Excluded(format!("s = {s_distinct} is below the required {required}")),
    );

    let d4 = report(&named_domain("D4", &qv(&[1, 1, 0, 1]))?.spec)?;
    let replay = 2 + 6 + d4.s + d4.dim_cone_alg + d4.dims.d_half + 2;
    sb.step(
        "k = 2, n = 5",
        "D4(1,1,0,1)",
        vec![
            fact("s", d4.s),
            fact("dim g_{1/2}", d4.dims.d_half),
            fact("dim g_1", d4.dims.d_one),
            fact("bound via g_{1/2} = 0", replay),
            fact("d", d4.d),
        ],
        Conclusion::Excluded(format!("upper bound {replay} is below {target}")),
    );

    // k = 3 over the orthant: the coarse bound suffices.
    let d7 = report(&named_domain("D7", &[])?.spec)?;
    let coarse = 2 * 3 + 4 * 2 + 2 * 2 + 3;
    sb.step(
        "k = 3, n = 5",
        "D7",
        vec![
            fact("bound 2k + 4m + m^2 + dim g(Omega)", coarse),
            fact("d (representative)", d7.d),
        ],
        Conclusion::Excluded(format!("upper bound {coarse} is below {target}")),
    );

    // k = 3 over the Lorentz cone.
    for s in 0..=3usize {
        let bound = 2 * 3 + 4 * 2 + s + 4;
        assert!(bound < target);
    }
    sb.step(
        "k = 3, n = 5",
        "Lorentz cone, s < 4",
        vec![fact("bound 2k + 4m + s + dim g(Omega) at s = 3", 21)],
        Conclusion::Excluded(format!("upper bound 21 is below {target}")),
    );

    let d8 = named_domain("D8", &[])?;
    let combo = positive_combination(d8.spec.cone(), d8.spec.form())?;
    let p = d8.spec.form().combine(&combo);
    let multiples: Vec<String> = d8
        .spec
        .form()
        .components()
        .iter()
        .map(|hj| {
            proportional_to(hj, &p)
                .map(|mu| format_rational(&mu))
                .unwrap_or_else(|| "not proportional".into())
        })
        .collect();
    let d8_rep = report(&d8.spec)?;
    let d8_int = report(&named_domain("D8", &qv(&[2, 1, 0]))?.spec)?;
    sb.step(
        "k = 3, n = 5",
        "D8(2,1,0)",
        vec![
            fact("s", d8_int.s),
            fact("dim stabilizer", d8_int.dim_stabilizer),
            fact("homogeneity", d8_int.homogeneity.verdict.as_str()),
        ],
        Conclusion::Excluded(
            "interior direction vector: stabilizer is not transitive on the cone".into(),
        ),
    );
    let replay_d8 = 3 + 4 + d8_rep.dims.d_zero + 4 + 3;
    sb.step(
        "k = 3, n = 5",
        "D8(1,1,0)",
        vec![
            fact("s", d8_rep.s),
            fact(
                "component multiples of the combination",
                format!("[{}]", multiples.join(", ")),
            ),
            fact("dim g_0", d8_rep.dims.d_zero),
            fact("bound via dim g_{1/2} <= 2m, dim g_1 <= k", replay_d8),
            fact("d", d8_rep.d),
        ],
        Conclusion::Excluded(format!("upper bound {replay_d8} is below {target}")),
    );

    Ok(CaseAnalysis {
        n: 5,
        steps: sb.steps,
        survivors: sb.survivors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_constraints_are_enforced() {
        // Degenerate determinant.
        assert!(named_domain("D3", &qv(&[1, 1, 1, 1])).is_err());
        // Negative entries.
        assert!(named_domain("D3", &qv(&[1, -1, 0, 1])).is_err());
        assert!(named_domain("D5", &qv(&[0, 0, 0])).is_err());
        assert!(named_domain("D5", &qv(&[1, -1, 0])).is_err());
        // Direction vector outside the closed Lorentz cone.
        assert!(named_domain("D6", &qv(&[1, 2, 0])).is_err());
        assert!(named_domain("D8", &qv(&[0, 0, 0])).is_err());
        // Wrong arity and unknown names.
        assert!(named_domain("ball", &[]).is_err());
        assert!(named_domain("T3", &[rat_int(1)]).is_err());
        assert!(named_domain("nonsense", &[]).is_err());
        // Valid boundary direction is accepted.
        assert!(named_domain("D6", &qv(&[5, 4, 3])).is_ok());
    }

    #[test]
    fn product_spec_is_block_diagonal() {
        let p = product_domain(&[ball(2), ball(2)]).unwrap();
        assert_eq!(p.spec.k(), 2);
        assert_eq!(p.spec.m(), 2);
        let h0 = p.spec.form().component(0);
        let h1 = p.spec.form().component(1);
        assert!(!h0.at(0, 0).is_zero() && h0.at(1, 1).is_zero());
        assert!(h1.at(0, 0).is_zero() && !h1.at(1, 1).is_zero());
    }

    #[test]
    fn bound_scan_matches_the_elimination_pattern() {
        let scan = bound_scan(4, 8).unwrap();
        assert!(scan.pattern_holds);
        let get = |n: usize, k: usize| {
            scan.rows
                .iter()
                .find(|r| r.n == n && r.k == k)
                .unwrap()
                .eliminated
        };
        for (n, k) in [(4, 2), (4, 3), (4, 4), (5, 2), (5, 3)] {
            assert!(!get(n, k), "({n},{k}) must survive");
        }
        for (n, k) in [(5, 4), (5, 5), (6, 3), (6, 4), (7, 3), (8, 5)] {
            assert!(get(n, k), "({n},{k}) must be eliminated");
        }
        assert!(bound_scan(3, 5).is_err());
    }

    #[test]
    fn case_analysis_four_has_the_unique_survivor() {
        let analysis = case_analysis(4).unwrap();
        assert_eq!(analysis.survivors.len(), 1);
        let (name, d) = &analysis.survivors[0];
        assert_eq!(*d, 13);
        assert!(name.contains("Lorentz(3) x half-line"), "{name}");
    }

    #[test]
    fn case_analysis_cross_checks_product_dimensions() {
        // The excluded product-shaped branches must agree with the product
        // domains they are linearly equivalent to.
        let analysis = case_analysis(4).unwrap();
        let facts_of = |branch: &str| -> Vec<(String, String)> {
            analysis
                .steps
                .iter()
                .find(|s| s.branch == branch)
                .unwrap_or_else(|| panic!("missing branch {branch}"))
                .facts
                .clone()
        };
        let d1 = facts_of("D1(4)");
        assert!(d1.contains(&("d".to_string(), "18".to_string())));
        assert!(d1.contains(&("d of B3xB1".to_string(), "18".to_string())));
        let d5 = facts_of("D5(1,0,0)");
        assert!(d5.contains(&("d".to_string(), "14".to_string())));
        assert!(d5.contains(&("d of B2xB1xB1".to_string(), "14".to_string())));
        let d6 = facts_of("D6(1,1,0)");
        assert!(d6.contains(&("d".to_string(), "10".to_string())));
        assert!(d6.contains(&("bound via g_{1/2} = 0".to_string(), "12".to_string())));
    }

    #[test]
    fn case_analysis_five_has_no_survivors() {
        let analysis = case_analysis(5).unwrap();
        assert!(analysis.survivors.is_empty());
        assert!(!analysis.steps.is_empty());
        assert!(case_analysis(6).is_err());
    }

    #[test]
    fn product_additivity_for_the_survivor() {
        let t3 = named_domain("T3", &[]).unwrap();
        let b1 = ball(1);
        let prod = product_domain(&[b1.clone(), t3.clone()]).unwrap();
        let d_prod = report(&prod.spec).unwrap().d;
        let d_b1 = report(&b1.spec).unwrap().d;
        let d_t3 = report(&t3.spec).unwrap().d;
        assert_eq!(d_prod, d_b1 + d_t3);
        assert_eq!(d_prod, 13);
    }
}
