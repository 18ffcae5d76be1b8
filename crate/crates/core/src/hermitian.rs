//! `ℂᵏ`-valued Hermitian forms `H(w,w′)` on `ℂᵐ`, their validation against a
//! cone (`H(w,w) ∈ Ω̄ ∖ {0}` for `w ≠ 0`), positive-definite combinations of
//! the components, the space `L` of matrices skew-Hermitian with respect to
//! every component (`s = dim L`), and the normal form of a pair `(H₁, H₂)`
//! with `H₁` positive definite.
//!
//! Convention fixed throughout: `H(w,w′)ⱼ = w† Hⱼ w′`, linear in `w′` and
//! anti-linear in `w`, with `Hⱼ` Hermitian.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cone::{ConeAtom, ConeLocation, ConeSpec};
use crate::error::{Error, Result};
use crate::matrix::UnknownKind;
use crate::scalar::{expect_real, rat, to_gauss};
use crate::system::LinearSystem;
use crate::{GaussianMatrix, GaussianRational, Rational};

/// Number of pseudorandom fiber vectors used by the sampling fallback of
/// [`validate_omega_hermitian`].
pub const VALIDATION_SAMPLES: usize = 256;

/// Largest coefficient tried per coordinate by [`positive_combination`].
pub const COMBINATION_GRID_MAX: i64 = 4;

/// A tuple `H = (H₁, …, Hₖ)` of Hermitian `m×m` matrices over `ℚ(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianTuple {
    k: usize,
    m: usize,
    components: Vec<GaussianMatrix>,
}

impl HermitianTuple {
    pub fn new(k: usize, m: usize, components: Vec<GaussianMatrix>) -> Result<Self> {
        if components.len() != k {
            return Err(Error::DimensionMismatch(format!(
                "expected {k} components, got {}",
                components.len()
            )));
        }
        for (j, c) in components.iter().enumerate() {
            if c.rows() != m || c.cols() != m {
                return Err(Error::DimensionMismatch(format!(
                    "component {j} is {}x{}, expected {m}x{m}",
                    c.rows(),
                    c.cols()
                )));
            }
            if !c.is_hermitian() {
                return Err(Error::NotHermitian(format!("component {j}")));
            }
        }
        Ok(HermitianTuple { k, m, components })
    }

    /// The empty form of a tube domain (`m = 0`).
    pub fn tube(k: usize) -> Self {
        HermitianTuple {
            k,
            m: 0,
            components: vec![GaussianMatrix::zeros(0, 0); k],
        }
    }

    /// The scalar family `Hⱼ = vⱼ·Q` for a real direction vector `v`.
    pub fn scalar_family(v: &[Rational], q: &GaussianMatrix) -> Result<Self> {
        let comps = v.iter().map(|vj| q.scale(&to_gauss(vj))).collect();
        HermitianTuple::new(v.len(), q.rows(), comps)
    }

    /// Diagonal real components `Hⱼ = diag(dⱼ)`.
    pub fn diagonal(diags: &[Vec<Rational>]) -> Result<Self> {
        let m = diags.first().map_or(0, Vec::len);
        let comps = diags
            .iter()
            .map(|d| {
                GaussianMatrix::from_fn(m, m, |i, j| {
                    if i == j {
                        to_gauss(&d[i])
                    } else {
                        GaussianRational::zero()
                    }
                })
            })
            .collect();
        HermitianTuple::new(diags.len(), m, comps)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Fiber dimension `m = n − k`.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn components(&self) -> &[GaussianMatrix] {
        &self.components
    }

    pub fn component(&self, j: usize) -> &GaussianMatrix {
        &self.components[j]
    }

    /// `H(w,w′)ⱼ = w† Hⱼ w′`.
    pub fn eval(&self, w: &[GaussianRational], wp: &[GaussianRational]) -> Vec<GaussianRational> {
        self.components
            .iter()
            .map(|h| {
                let mut acc = GaussianRational::zero();
                for a in 0..self.m {
                    for b in 0..self.m {
                        acc += w[a].conj() * h.at(a, b).clone() * wp[b].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// `H(w,w)` as a real vector.
    pub fn eval_diag(&self, w: &[GaussianRational]) -> Result<Vec<Rational>> {
        self.eval(w, w)
            .iter()
            .map(|z| expect_real(z, "H(w,w) component"))
            .collect()
    }

    /// `Σ cⱼ Hⱼ`.
    pub fn combine(&self, c: &[Rational]) -> GaussianMatrix {
        let mut acc = GaussianMatrix::zeros(self.m, self.m);
        for (cj, h) in c.iter().zip(&self.components) {
            acc = acc.add(&h.scale(&to_gauss(cj)));
        }
        acc
    }
}

/// Exact real determinant of a Hermitian matrix.
fn hermitian_det(m: &GaussianMatrix) -> Result<Rational> {
    expect_real(&m.determinant()?, "determinant of Hermitian matrix")
}

/// Sylvester test: all leading principal minors strictly positive.
pub fn is_positive_definite(m: &GaussianMatrix) -> Result<bool> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian("definiteness test".into()));
    }
    for t in 1..=m.rows() {
        let idx: Vec<usize> = (0..t).collect();
        if !hermitian_det(&m.submatrix(&idx, &idx))?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All principal minors nonnegative (the full set, not just leading ones).
pub fn is_positive_semidefinite(m: &GaussianMatrix) -> Result<bool> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian("semidefiniteness test".into()));
    }
    let n = m.rows();
    for mask in 1u32..(1u32 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if hermitian_det(&m.submatrix(&idx, &idx))?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verdict of Ω-Hermitian validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    /// Exactly certified: per-atom membership plus a positive-definite
    /// combination of the components.
    Valid { combination: Vec<Rational> },
    /// Lorentz block outside the certified scalar family; membership was
    /// checked on seeded pseudorandom fiber vectors only.
    ValidSampledOnly {
        samples: usize,
        combination: Option<Vec<Rational>>,
    },
    /// A violated condition, with the reason.
    Invalid { reason: String },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        !matches!(self, Validity::Invalid { .. })
    }
}

/// Decide whether `H` is Ω-Hermitian: `H(w,w) ∈ Ω̄ ∖ {0}` for all `w ≠ 0`.
///
/// Orthant coordinates are certified by exact semidefiniteness of the
/// corresponding components. A Lorentz block is certified when its components
/// form a scalar family `v·Q` with `Q` semidefinite and `v` in the closed
/// cone; otherwise the block falls back to seeded sampling and the verdict is
/// flagged sampled-only. Global nonvanishing is certified by a
/// positive-definite combination of the components.
pub fn validate_omega_hermitian(cone: &ConeSpec, h: &HermitianTuple) -> Result<Validity> {
    if h.k() != cone.dim() {
        return Err(Error::DimensionMismatch(format!(
            "form has {} components, cone has dimension {}",
            h.k(),
            cone.dim()
        )));
    }
    if h.m() == 0 {
        return Ok(Validity::Valid {
            combination: positive_combination(cone, h)?,
        });
    }
    let mut sampled_only = false;
    let mut offset = 0;
    for atom in cone.atoms() {
        let d = atom.dim();
        let block: Vec<&GaussianMatrix> = (offset..offset + d).map(|j| h.component(j)).collect();
        match atom {
            ConeAtom::Orthant(_) => {
                for (i, comp) in block.iter().enumerate() {
                    if !is_positive_semidefinite(comp)? {
                        return Ok(Validity::Invalid {
                            reason: format!(
                                "component {} must be positive semidefinite for an orthant coordinate",
                                offset + i
                            ),
                        });
                    }
                }
            }
            ConeAtom::Lorentz(_) => match certify_lorentz_block(atom, &block)? {
                LorentzBlock::Certified => {}
                LorentzBlock::Invalid(reason) => return Ok(Validity::Invalid { reason }),
                LorentzBlock::NotScalarFamily => sampled_only = true,
            },
        }
        offset += d;
    }
    if sampled_only {
        if let Some(reason) = sample_membership(cone, h)? {
            return Ok(Validity::Invalid { reason });
        }
        return Ok(Validity::ValidSampledOnly {
            samples: VALIDATION_SAMPLES,
            combination: positive_combination(cone, h).ok(),
        });
    }
    match positive_combination(cone, h) {
        Ok(combination) => Ok(Validity::Valid { combination }),
        Err(_) => Ok(Validity::Invalid {
            reason: "no positive-definite combination of the components exists, so H(w,w) = 0 \
                     for some nonzero w"
                .into(),
        }),
    }
}

enum LorentzBlock {
    Certified,
    Invalid(String),
    NotScalarFamily,
}

/// Check a Lorentz block against the certified family `Hⱼ = vⱼ·Q`.
fn certify_lorentz_block(atom: &ConeAtom, block: &[&GaussianMatrix]) -> Result<LorentzBlock> {
    let Some(base_idx) = block.iter().position(|c| !c.is_zero()) else {
        // All-zero block contributes 0 ∈ Ω̄; nonvanishing is certified globally.
        return Ok(LorentzBlock::Certified);
    };
    let base = block[base_idx];
    let mut v = Vec::with_capacity(block.len());
    for comp in block {
        match proportional_to(comp, base) {
            Some(mu) => v.push(mu),
            None => return Ok(LorentzBlock::NotScalarFamily),
        }
    }
    let (q_psd, v) = if is_positive_semidefinite(base)? {
        (base.clone(), v)
    } else if is_positive_semidefinite(&base.neg())? {
        (base.neg(), v.iter().map(|x| -x.clone()).collect())
    } else {
        return Ok(LorentzBlock::Invalid(
            "Lorentz block has an indefinite scalar form, so H(w,w) leaves the closed cone".into(),
        ));
    };
    debug_assert!(!q_psd.is_zero());
    let lorentz = ConeSpec::lorentz(atom.dim())?;
    if lorentz.contains(&v)? == ConeLocation::Outside {
        return Ok(LorentzBlock::Invalid(format!(
            "direction vector [{}] violates v1^2 >= v2^2 + ... with v1 >= 0, so H(w,w) leaves \
             the closed Lorentz cone",
            v.iter()
                .map(crate::scalar::format_rational)
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    Ok(LorentzBlock::Certified)
}

/// `h = μ·p` for a real rational `μ` (including `μ = 0` when `h = 0`).
pub fn proportional_to(h: &GaussianMatrix, p: &GaussianMatrix) -> Option<Rational> {
    if h.rows() != p.rows() || h.cols() != p.cols() {
        return None;
    }
    if h.is_zero() {
        return Some(Rational::zero());
    }
    let lead = p.entries().iter().position(|e| !e.is_zero())?;
    let h_lead = &h.entries()[lead];
    let p_lead = &p.entries()[lead];
    let mu = h_lead.clone() / p_lead.clone();
    if !mu.im.is_zero() {
        return None;
    }
    let mu_re = mu.re.clone();
    if *h == p.scale(&to_gauss(&mu_re)) {
        Some(mu_re)
    } else {
        None
    }
}

/// Sampling fallback: evaluate `H(w,w)` on seeded pseudorandom nonzero `w`
/// and check membership in `Ω̄ ∖ {0}` exactly per sample. Returns a reason on
/// the first violation.
fn sample_membership(cone: &ConeSpec, h: &HermitianTuple) -> Result<Option<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(crate::cone::DEFAULT_SEED);
    let mut done = 0;
    while done < VALIDATION_SAMPLES {
        let w: Vec<GaussianRational> = (0..h.m())
            .map(|_| {
                GaussianRational::new(
                    rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)),
                    rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)),
                )
            })
            .collect();
        if w.iter().all(|z| z.is_zero()) {
            continue;
        }
        let value = h.eval_diag(&w)?;
        let nonzero = value.iter().any(|x| !x.is_zero());
        if !nonzero || cone.contains(&value)? == ConeLocation::Outside {
            return Ok(Some(format!(
                "sampled fiber vector {w:?} gives H(w,w) = {value:?} outside the punctured \
                 closed cone"
            )));
        }
        done += 1;
    }
    Ok(None)
}

/// Deterministic search for a rational `c` in the closed dual cone with
/// `Σ cⱼHⱼ` positive definite.
///
/// The grid is `{0,…,4}ᵏ` filtered to the closed dual; candidates are tried
/// by ascending coefficient sum, ties broken lexicographically descending (so
/// weight sits on the earliest coordinates first), and the first success is
/// returned.
pub fn positive_combination(cone: &ConeSpec, h: &HermitianTuple) -> Result<Vec<Rational>> {
    if h.k() != cone.dim() {
        return Err(Error::DimensionMismatch(format!(
            "form has {} components, cone has dimension {}",
            h.k(),
            cone.dim()
        )));
    }
    let k = cone.dim();
    let mut candidates: Vec<Vec<i64>> = Vec::new();
    let mut current = vec![0i64; k];
    'enumerate: loop {
        if current.iter().any(|&x| x != 0) && in_closed_dual(cone, &current) {
            candidates.push(current.clone());
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                break 'enumerate;
            }
            pos -= 1;
            if current[pos] < COMBINATION_GRID_MAX {
                current[pos] += 1;
                for slot in current.iter_mut().skip(pos + 1) {
                    *slot = 0;
                }
                break;
            }
        }
    }
    candidates.sort_by(|a, b| {
        let (sa, sb) = (a.iter().sum::<i64>(), b.iter().sum::<i64>());
        sa.cmp(&sb).then_with(|| b.cmp(a))
    });
    let budget = candidates.len();
    for cand in candidates {
        let c: Vec<Rational> = cand.iter().map(|&x| rat(x, 1)).collect();
        if h.m() == 0 || is_positive_definite(&h.combine(&c))? {
            return Ok(c);
        }
    }
    Err(Error::SearchBudgetExhausted { budget })
}

/// Closed dual cone membership for grid points: nonnegative on orthant
/// coordinates; `c₁ ≥ 0, c₁² ≥ Σ cⱼ²` on Lorentz blocks (self-dual).
fn in_closed_dual(cone: &ConeSpec, c: &[i64]) -> bool {
    let mut offset = 0;
    for atom in cone.atoms() {
        let d = atom.dim();
        let block = &c[offset..offset + d];
        match atom {
            ConeAtom::Orthant(_) => {
                if block.iter().any(|&x| x < 0) {
                    return false;
                }
            }
            ConeAtom::Lorentz(_) => {
                let head = block[0];
                if head < 0 || head * head < block[1..].iter().map(|&x| x * x).sum::<i64>() {
                    return false;
                }
            }
        }
        offset += d;
    }
    true
}

/// Canonical real basis of the space `L` of matrices skew-Hermitian with
/// respect to every component of `H`, together with `s = dim L`.
#[derive(Debug, Clone)]
pub struct SkewSpaceBasis {
    pub basis: Vec<GaussianMatrix>,
    pub s: usize,
}

/// Solve `Hⱼ B + B† Hⱼ = 0` for all `j` over the realified unknowns of `B`.
pub fn skew_space(h: &HermitianTuple) -> SkewSpaceBasis {
    let m = h.m();
    if m == 0 {
        return SkewSpaceBasis {
            basis: Vec::new(),
            s: 0,
        };
    }
    // Unknown B[c][d] at index c*m + d.
    let mut sys = LinearSystem::new(vec![UnknownKind::Complex; m * m]);
    for hj in h.components() {
        for a in 0..m {
            for b in 0..m {
                let mut e = sys.expr();
                for c in 0..m {
                    e.add(c * m + b, hj.at(a, c).clone());
                    e.add_conj(c * m + a, hj.at(c, b).clone());
                }
                sys.push_complex(e);
            }
        }
    }
    let sol = sys.solve();
    let basis = sol
        .vectors
        .iter()
        .map(|v| GaussianMatrix::from_fn(m, m, |c, d| v[c * m + d].clone()))
        .collect();
    SkewSpaceBasis { basis, s: sol.dim }
}

/// Normal form data of a pencil `(H₁, H₂)` with `H₁` positive definite:
/// the generalized eigenvalues in descending order plus the counts of equal
/// and distinct unordered eigenvalue pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilNormalForm {
    pub eigenvalues: Vec<Rational>,
    /// Unordered pairs `{i,j}` with `λᵢ = λⱼ`.
    pub equal_pairs: usize,
    /// Unordered pairs `{i,j}` with `λᵢ ≠ λⱼ`.
    pub distinct_pairs: usize,
}

/// Simultaneous-diagonalization normal form of `(H₁, H₂)`.
///
/// A real change of basis realizes `H₁ = I`, `H₂ = diag(λ)`; this routine
/// returns the eigenvalue list, which must be rational — otherwise the data
/// is not representable over `ℚ` and an error is returned.
pub fn pair_normal_form(h1: &GaussianMatrix, h2: &GaussianMatrix) -> Result<PencilNormalForm> {
    if !h1.is_hermitian() || !h2.is_hermitian() {
        return Err(Error::NotHermitian("pencil normal form".into()));
    }
    if h1.rows() != h2.rows() {
        return Err(Error::DimensionMismatch(
            "pencil matrices differ in size".into(),
        ));
    }
    if !is_positive_definite(h1)? {
        return Err(Error::InvalidParameter(
            "first pencil matrix must be positive definite".into(),
        ));
    }
    let m = h1.rows();
    // det(H₂ − λH₁) has real rational coefficients; interpolate at m+1 points.
    let points: Vec<Rational> = (0..=m as i64).map(|t| rat(t, 1)).collect();
    let values: Vec<Rational> = points
        .iter()
        .map(|t| hermitian_det(&h2.sub(&h1.scale(&to_gauss(t)))))
        .collect::<Result<_>>()?;
    let charpoly = lagrange_coefficients(&points, &values);
    let mut roots = rational_roots(&charpoly);
    let found: usize = roots.iter().map(|(_, mult)| mult).sum();
    if found < m {
        return Err(Error::NotRepresentableOverQ(format!(
            "only {found} of {m} generalized eigenvalues are rational"
        )));
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    let mut eigenvalues = Vec::with_capacity(m);
    let mut equal_pairs = 0usize;
    for (root, mult) in &roots {
        equal_pairs += mult * (mult - 1) / 2;
        for _ in 0..*mult {
            eigenvalues.push(root.clone());
        }
    }
    let distinct_pairs = m * (m - 1) / 2 - equal_pairs;
    Ok(PencilNormalForm {
        eigenvalues,
        equal_pairs,
        distinct_pairs,
    })
}

/// Coefficients (ascending degree) of the unique polynomial through the
/// given points.
fn lagrange_coefficients(points: &[Rational], values: &[Rational]) -> Vec<Rational> {
    let n = points.len();
    let mut coeffs = vec![Rational::zero(); n];
    for i in 0..n {
        // Numerator polynomial Π_{j≠i} (x − xⱼ), scaled by yᵢ / Π (xᵢ − xⱼ).
        let mut num = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, xj) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![Rational::zero(); num.len() + 1];
            for (d, c) in num.iter().enumerate() {
                next[d + 1] += c.clone();
                next[d] -= c.clone() * xj.clone();
            }
            num = next;
            denom *= points[i].clone() - xj.clone();
        }
        let scale = values[i].clone() / denom;
        for (d, c) in num.iter().enumerate() {
            coeffs[d] += c.clone() * scale.clone();
        }
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// All rational roots of a rational-coefficient polynomial, with
/// multiplicities, via the rational root theorem after clearing denominators.
fn rational_roots(coeffs: &[Rational]) -> Vec<(Rational, usize)> {
    let mut poly = coeffs.to_vec();
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    let mut zero_mult = 0;
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if poly.len() <= 1 {
        return roots;
    }
    // Clear denominators to an integer polynomial.
    let mut denom_lcm = BigInt::one();
    for c in &poly {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = poly
        .iter()
        .map(|c| (c.clone() * Rational::from(denom_lcm.clone())).to_integer())
        .collect();
    let lead = ints.last().unwrap().clone();
    let constant = ints[0].clone();
    let mut candidates: Vec<Rational> = Vec::new();
    for p in divisors(&constant.abs()) {
        for q in divisors(&lead.abs()) {
            let cand = Rational::new(p.clone(), q.clone());
            if !candidates.contains(&cand) {
                candidates.push(cand.clone());
                candidates.push(-cand);
            }
        }
    }
    candidates.sort();
    for cand in candidates {
        let mut mult = 0;
        while poly.len() > 1 && eval_poly(&poly, &cand).is_zero() {
            poly = deflate(&poly, &cand);
            mult += 1;
        }
        if mult > 0 {
            roots.push((cand, mult));
        }
        if poly.len() <= 1 {
            break;
        }
    }
    roots
}

fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

/// Synthetic division by `(x − root)`, assuming `root` is a root.
fn deflate(coeffs: &[Rational], root: &Rational) -> Vec<Rational> {
    let n = coeffs.len();
    let mut out = vec![Rational::zero(); n - 1];
    let mut carry = Rational::zero();
    for d in (0..n - 1).rev() {
        carry = coeffs[d + 1].clone() + carry * root.clone();
        out[d] = carry.clone();
    }
    out
}

/// Positive divisors of `|n|` by trial division (pencil data here stays small).
fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    let mut factors: Vec<(BigInt, usize)> = Vec::new();
    while &p * &p <= rest {
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut power = BigInt::one();
            for _ in 0..=e {
                next.push(d * &power);
                power *= &prime;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}
