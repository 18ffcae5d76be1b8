//! The graded Lie algebra `g₋₁ ⊕ g₋₁/₂ ⊕ g₀ ⊕ g₁/₂ ⊕ g₁` of complete
//! holomorphic vector fields on a Siegel domain `S(Ω,H)`.
//!
//! `g₋₁` and `g₋₁/₂` are free (`dim = k` and `2m`). The remaining components
//! are cut out by linear conditions:
//!
//! * `g₀`: pairs `(A,B)` with `A ∈ g(Ω)` and `A·H(w,w′) = H(Bw,w′) + H(w,Bw′)`,
//!   i.e. `Σₗ AⱼₗHₗ = HⱼB + B†Hⱼ` for every `j`;
//! * `g₁/₂`: pairs `(Φ,c)` with `Φ_w := [x ↦ Im H(w,Φx)] ∈ g(Ω)` for all `w`
//!   and `H(w,c(w′,w′)) = 2iH(Φ(H(w′,w)),w′)`;
//! * `g₁`: pairs `(a,b)` with `a` symmetric, `A_x := a(x,·) ∈ g(Ω)`,
//!   `B_x := ½b(x,·)` associated to `A_x` with `Im tr B_x = 0`,
//!   `B_{w,w′} := [x ↦ Im H(w′,b(x,w))] ∈ g(Ω)`, and
//!   `H(w,b(H(w′,w″),w″)) = H(b(H(w″,w),w′),w″)`.
//!
//! Quantified conditions are polarized over finite evaluation sets chosen to
//! span the relevant (anti)linear or bilinear dependence exactly, so the
//! emitted rows have the same solution set as the universally quantified
//! constraint. Every solve returns the canonical kernel basis, making the
//! whole report deterministic.

use num_traits::{One, Zero};

use crate::cone::{
    infinitesimal_transitivity, ConeSpec, TransitivityReport, DEFAULT_SAMPLES, DEFAULT_SEED,
};
use crate::error::{Error, Result};
use crate::hermitian::{skew_space, validate_omega_hermitian, HermitianTuple, Validity};
use crate::matrix::{realify_vector, row_space_basis, UnknownKind};
use crate::poly::{euler_field, Poly, PolyVectorField};
use crate::scalar::{expect_real, gauss, rat_int, to_gauss};
use crate::system::LinearSystem;
use crate::{GaussianMatrix, GaussianRational, Rational, RationalMatrix};

/// How the form of a domain was validated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationStatus {
    /// Per-atom membership and nonvanishing certified exactly.
    Certified,
    /// Membership checked on pseudorandom samples only.
    SampledOnly,
    /// Validation skipped at the caller's request.
    Unvalidated,
}

impl ValidationStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ValidationStatus::Certified => "certified",
            ValidationStatus::SampledOnly => "sampled-only",
            ValidationStatus::Unvalidated => "unvalidated",
        }
    }
}

/// The pair `(Ω, H)` defining `S(Ω,H) = {(z,w) : Im z − H(w,w) ∈ Ω}`.
#[derive(Debug, Clone)]
pub struct SiegelDomainSpec {
    cone: ConeSpec,
    form: HermitianTuple,
    validation: ValidationStatus,
}

impl SiegelDomainSpec {
    /// Build and validate. Fails if the form is not Ω-Hermitian.
    pub fn new(cone: ConeSpec, form: HermitianTuple) -> Result<Self> {
        match validate_omega_hermitian(&cone, &form)? {
            Validity::Valid { .. } => Ok(SiegelDomainSpec {
                cone,
                form,
                validation: ValidationStatus::Certified,
            }),
            Validity::ValidSampledOnly { .. } => Ok(SiegelDomainSpec {
                cone,
                form,
                validation: ValidationStatus::SampledOnly,
            }),
            Validity::Invalid { reason } => Err(Error::InvalidParameter(format!(
                "form is not Omega-Hermitian: {reason}"
            ))),
        }
    }

    /// Build without validating (the report records the flag).
    pub fn new_unvalidated(cone: ConeSpec, form: HermitianTuple) -> Result<Self> {
        if form.k() != cone.dim() {
            return Err(Error::DimensionMismatch(format!(
                "form has {} components, cone has dimension {}",
                form.k(),
                cone.dim()
            )));
        }
        Ok(SiegelDomainSpec {
            cone,
            form,
            validation: ValidationStatus::Unvalidated,
        })
    }

    pub fn cone(&self) -> &ConeSpec {
        &self.cone
    }

    pub fn form(&self) -> &HermitianTuple {
        &self.form
    }

    pub fn validation(&self) -> ValidationStatus {
        self.validation
    }

    /// Cone dimension.
    pub fn k(&self) -> usize {
        self.cone.dim()
    }

    /// Fiber dimension.
    pub fn m(&self) -> usize {
        self.form.m()
    }

    /// Complex dimension `n = k + m` of the domain.
    pub fn n(&self) -> usize {
        self.k() + self.m()
    }
}

/// Generator of `g₀`: `(Az)·∂/∂z + (Bw)·∂/∂w` with `B` associated to `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedPair {
    pub a: RationalMatrix,
    pub b: GaussianMatrix,
}

/// The solved zero component.
#[derive(Debug, Clone)]
pub struct GZero {
    pub pairs: Vec<AssociatedPair>,
    /// Canonical basis of the projection of `g₀` to the `A`-part — the Lie
    /// algebra of the subgroup of `G(Ω)` admitting an associated `B`.
    pub stabilizer_basis: Vec<RationalMatrix>,
    pub dim: usize,
    pub stabilizer_dim: usize,
}

/// Symmetric-pair-indexed coefficient tensor: `dim_out` outputs, symmetric
/// pairs `(d ≤ e)` over `dim_in` inputs, output-major storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymTensor {
    pub dim_out: usize,
    pub dim_in: usize,
    vals: Vec<GaussianRational>,
}

impl SymTensor {
    pub fn zero(dim_out: usize, dim_in: usize) -> Self {
        let n = dim_out * dim_in * (dim_in + 1) / 2;
        SymTensor {
            dim_out,
            dim_in,
            vals: vec![GaussianRational::zero(); n],
        }
    }

    pub fn npairs(dim_in: usize) -> usize {
        dim_in * (dim_in + 1) / 2
    }

    /// Index of the unordered pair `(d,e)` in lexicographic `(d ≤ e)` order.
    pub fn pair_index(dim_in: usize, d: usize, e: usize) -> usize {
        let (lo, hi) = if d <= e { (d, e) } else { (e, d) };
        lo * dim_in - lo * (lo + 1) / 2 + hi
    }

    /// Value on basis pair `(d,e)` for output `out`.
    pub fn value(&self, out: usize, d: usize, e: usize) -> &GaussianRational {
        &self.vals[out * Self::npairs(self.dim_in) + Self::pair_index(self.dim_in, d, e)]
    }

    pub fn set(&mut self, out: usize, d: usize, e: usize, v: GaussianRational) {
        let idx = out * Self::npairs(self.dim_in) + Self::pair_index(self.dim_in, d, e);
        self.vals[idx] = v;
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.vals
    }
}

/// Generator of `g₁/₂`: `2iH(Φ(z̄),w)·∂/∂z + (Φ(z) + c(w,w))·∂/∂w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfGenerator {
    /// The `ℂ`-linear map `Φ : ℂᵏ → ℂᵐ` as an `m×k` matrix.
    pub phi: GaussianMatrix,
    /// The symmetric bilinear `c : ℂᵐ×ℂᵐ → ℂᵐ` by values on basis pairs.
    pub c: SymTensor,
}

/// Generator of `g₁`: `a(z,z)·∂/∂z + b(z,w)·∂/∂w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneGenerator {
    /// Symmetric real bilinear `a : ℝᵏ×ℝᵏ → ℝᵏ` (entries carry zero
    /// imaginary part).
    pub a: SymTensor,
    /// `ℂ`-bilinear `b : ℂᵏ×ℂᵐ → ℂᵐ`; entry `(c,t,d)` is the `c`-th output
    /// component of `b(e_t, e_d)`, stored output-major.
    pub b: Vec<GaussianRational>,
}

impl OneGenerator {
    pub fn b_entry(&self, c: usize, t: usize, d: usize, k: usize, m: usize) -> &GaussianRational {
        debug_assert!(t < k);
        &self.b[(c * k + t) * m + d]
    }
}

/// Solve the zero component.
pub fn g_zero(spec: &SiegelDomainSpec) -> GZero {
    let alg = spec.cone().automorphism_algebra_basis();
    let (k, m) = (spec.k(), spec.m());
    let dim_g = alg.dim();
    let h = spec.form();

    let mut kinds = vec![UnknownKind::Real; dim_g];
    kinds.extend(vec![UnknownKind::Complex; m * m]);
    let mut sys = LinearSystem::new(kinds);
    let b_idx = |c: usize, d: usize| dim_g + c * m + d;

    for j in 0..k {
        for alpha in 0..m {
            for beta in 0..m {
                let mut e = sys.expr();
                for (t, gt) in alg.basis.iter().enumerate() {
                    let mut coeff = GaussianRational::zero();
                    for l in 0..k {
                        coeff += to_gauss(gt.at(j, l)) * h.component(l).at(alpha, beta).clone();
                    }
                    e.add(t, coeff);
                }
                for c in 0..m {
                    e.add(b_idx(c, beta), -h.component(j).at(alpha, c).clone());
                    e.add_conj(b_idx(c, alpha), -h.component(j).at(c, beta).clone());
                }
                sys.push_complex(e);
            }
        }
    }

    let sol = sys.solve();
    let mut pairs = Vec::with_capacity(sol.dim);
    for v in &sol.vectors {
        let mut a = RationalMatrix::zeros(k, k);
        for (t, gt) in alg.basis.iter().enumerate() {
            let alpha_t = expect_real(&v[t], "cone-algebra coefficient").expect("real unknown");
            a = a.add(&gt.scale(&alpha_t));
        }
        let b = GaussianMatrix::from_fn(m, m, |c, d| v[b_idx(c, d)].clone());
        pairs.push(AssociatedPair { a, b });
    }
    let a_vectors: Vec<Vec<Rational>> = pairs.iter().map(|p| p.a.to_vec()).collect();
    let stabilizer_vecs = row_space_basis(&a_vectors);
    let stabilizer_basis: Vec<RationalMatrix> = stabilizer_vecs
        .iter()
        .map(|v| RationalMatrix::new(k, k, v.clone()))
        .collect();
    let stabilizer_dim = stabilizer_basis.len();
    // Structural identity: the fiber of the A-projection over 0 is the skew
    // space, so dim g₀ = s + rank of the projection.
    debug_assert_eq!(pairs.len(), skew_space(h).s + stabilizer_dim);
    GZero {
        dim: pairs.len(),
        pairs,
        stabilizer_basis,
        stabilizer_dim,
    }
}

/// Canonical basis of the `A`-projection of `g₀`.
pub fn stabilizer_algebra(spec: &SiegelDomainSpec) -> Vec<RationalMatrix> {
    g_zero(spec).stabilizer_basis
}

/// Evaluation set spanning the real-linear dependence on `w ∈ ℂᵐ`
/// (`e_d`, `i·e_d`, plus the enriched pairs).
fn real_span_wset(m: usize) -> Vec<Vec<GaussianRational>> {
    let mut out = Vec::new();
    let e = |d: usize| {
        let mut v = vec![GaussianRational::zero(); m];
        v[d] = gauss(1, 0);
        v
    };
    for d in 0..m {
        out.push(e(d));
    }
    for d in 0..m {
        let mut v = vec![GaussianRational::zero(); m];
        v[d] = gauss(0, 1);
        out.push(v);
    }
    for d in 0..m {
        for f in d + 1..m {
            let mut v = e(d);
            v[f] = gauss(1, 0);
            out.push(v);
            let mut v = e(d);
            v[f] = gauss(0, 1);
            out.push(v);
        }
    }
    out
}

/// Evaluation set determining a symmetric `ℂ`-bilinear form:
/// `e_d`, `e_d + e_f`, `e_d + i·e_f` for `d < f`.
fn complex_quadratic_wset(m: usize) -> Vec<Vec<GaussianRational>> {
    let mut out = Vec::new();
    let e = |d: usize| {
        let mut v = vec![GaussianRational::zero(); m];
        v[d] = gauss(1, 0);
        v
    };
    for d in 0..m {
        out.push(e(d));
    }
    for d in 0..m {
        for f in d + 1..m {
            let mut v = e(d);
            v[f] = gauss(1, 0);
            out.push(v);
            let mut v = e(d);
            v[f] = gauss(0, 1);
            out.push(v);
        }
    }
    out
}

/// `H_j · W` for every component, as column vectors.
fn h_times(h: &HermitianTuple, w: &[GaussianRational]) -> Vec<Vec<GaussianRational>> {
    h.components().iter().map(|hj| hj.mat_vec(w)).collect()
}

/// `W† H_j` for every component, as row vectors.
fn conj_times_h(h: &HermitianTuple, w: &[GaussianRational]) -> Vec<Vec<GaussianRational>> {
    let wconj: Vec<GaussianRational> = w.iter().map(|z| z.conj()).collect();
    h.components()
        .iter()
        .map(|hj| {
            (0..h.m())
                .map(|c| {
                    let mut acc = GaussianRational::zero();
                    for a in 0..h.m() {
                        acc += wconj[a].clone() * hj.at(a, c).clone();
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Solve the `+1/2` component.
pub fn g_half(spec: &SiegelDomainSpec) -> Vec<HalfGenerator> {
    let (k, m) = (spec.k(), spec.m());
    let h = spec.form();
    if m == 0 {
        return Vec::new();
    }
    let npairs = SymTensor::npairs(m);
    let phi_idx = |c: usize, t: usize| c * k + t;
    let c_idx =
        |out: usize, d: usize, e: usize| m * k + out * npairs + SymTensor::pair_index(m, d, e);
    let mut sys = LinearSystem::new(vec![UnknownKind::Complex; m * k + m * npairs]);

    // Membership rows: Φ_w ∈ g(Ω), real-linear in w, polarized over a real
    // spanning set of ℂᵐ.
    let annihilator = spec.cone().membership_annihilator();
    if !annihilator.is_empty() {
        for w in real_span_wset(m) {
            // u_j = w† H_j, so that (Φ_w)[j][l] = Im Σ_c u_j[c]·Φ[c][l].
            let u = conj_times_h(h, &w);
            for f in &annihilator {
                let mut e = sys.expr();
                for j in 0..k {
                    for l in 0..k {
                        let fw = &f[j * k + l];
                        if fw.is_zero() {
                            continue;
                        }
                        for c in 0..m {
                            e.add(phi_idx(c, l), to_gauss(fw) * u[j][c].clone());
                        }
                    }
                }
                sys.push_imag_zero(e);
            }
        }
    }

    // The c-condition H(w, c(w′,w′)) = 2iH(Φ(H(w′,w)), w′), anti-linear in w
    // (basis vectors suffice) and complex-quadratic in w′.
    let two_i = gauss(0, 2);
    for a in 0..m {
        for w_prime in complex_quadratic_wset(m) {
            let hw = h_times(h, &w_prime);
            for j in 0..k {
                let mut e = sys.expr();
                // LHS: Σ_out H_j[a,out]·c(W,W)_out.
                for out in 0..m {
                    let lead = h.component(j).at(a, out).clone();
                    if lead.is_zero() {
                        continue;
                    }
                    for d in 0..m {
                        for f in d..m {
                            let wprod = w_prime[d].clone() * w_prime[f].clone();
                            let factor = if d == f { wprod } else { wprod * gauss(2, 0) };
                            e.add(c_idx(out, d, f), lead.clone() * factor);
                        }
                    }
                }
                // RHS: 2i Σ_t (H_t W)_a Σ_c (H_j W)_c · conj(Φ[c][t]).
                for t in 0..k {
                    let vt = hw[t][a].clone();
                    if vt.is_zero() {
                        continue;
                    }
                    for c in 0..m {
                        let coeff = two_i.clone() * vt.clone() * hw[j][c].clone();
                        e.add_conj(phi_idx(c, t), -coeff);
                    }
                }
                sys.push_complex(e);
            }
        }
    }

    let sol = sys.solve();
    sol.vectors
        .iter()
        .map(|v| {
            let phi = GaussianMatrix::from_fn(m, k, |c, t| v[phi_idx(c, t)].clone());
            let mut c_tensor = SymTensor::zero(m, m);
            for out in 0..m {
                for d in 0..m {
                    for f in d..m {
                        c_tensor.set(out, d, f, v[c_idx(out, d, f)].clone());
                    }
                }
            }
            HalfGenerator { phi, c: c_tensor }
        })
        .collect()
}

/// Solve the `+1` component.
pub fn g_one(spec: &SiegelDomainSpec) -> Vec<OneGenerator> {
    let (k, m) = (spec.k(), spec.m());
    let h = spec.form();
    let kp = SymTensor::npairs(k);
    let a_count = k * kp;
    let a_idx = |j: usize, t: usize, l: usize| j * kp + SymTensor::pair_index(k, t, l);
    let b_idx = |c: usize, t: usize, d: usize| a_count + (c * k + t) * m + d;

    let mut kinds = vec![UnknownKind::Real; a_count];
    kinds.extend(vec![UnknownKind::Complex; k * m * m]);
    let mut sys = LinearSystem::new(kinds);
    let annihilator = spec.cone().membership_annihilator();
    let half = to_gauss(&crate::scalar::rat(1, 2));

    for t in 0..k {
        // A_x ∈ g(Ω) at x = e_t.
        for f in &annihilator {
            let mut e = sys.expr();
            for j in 0..k {
                for l in 0..k {
                    let fw = &f[j * k + l];
                    if !fw.is_zero() {
                        e.add(a_idx(j, t, l), to_gauss(fw));
                    }
                }
            }
            sys.push_real_zero(e);
        }
        // B_x associated to A_x: Σ_l a[j][t,l]·H_l = H_j B_t + B_t† H_j.
        for j in 0..k {
            for alpha in 0..m {
                for beta in 0..m {
                    let mut e = sys.expr();
                    for l in 0..k {
                        let coeff = h.component(l).at(alpha, beta).clone();
                        if !coeff.is_zero() {
                            e.add(a_idx(j, t, l), coeff);
                        }
                    }
                    for c in 0..m {
                        e.add(
                            b_idx(c, t, beta),
                            -half.clone() * h.component(j).at(alpha, c).clone(),
                        );
                        e.add_conj(
                            b_idx(c, t, alpha),
                            -half.clone() * h.component(j).at(c, beta).clone(),
                        );
                    }
                    sys.push_complex(e);
                }
            }
        }
        // Im tr B_x = 0.
        let mut e = sys.expr();
        for c in 0..m {
            e.add(b_idx(c, t, c), gauss(1, 0));
        }
        sys.push_imag_zero(e);
    }

    // B_{w,w′} ∈ g(Ω): Q[j][l] = Im(w′† H_j · b(e_l, w)) for w ∈ {e_α, i·e_α},
    // w′ = e_β. Both real-linear dependences are spanned by these pairs.
    if !annihilator.is_empty() {
        for alpha in 0..m {
            for imag in [false, true] {
                let unit = if imag { gauss(0, 1) } else { gauss(1, 0) };
                for beta in 0..m {
                    for f in &annihilator {
                        let mut e = sys.expr();
                        for j in 0..k {
                            for l in 0..k {
                                let fw = &f[j * k + l];
                                if fw.is_zero() {
                                    continue;
                                }
                                for c in 0..m {
                                    let coeff = to_gauss(fw)
                                        * h.component(j).at(beta, c).clone()
                                        * unit.clone();
                                    e.add(b_idx(c, l, alpha), coeff);
                                }
                            }
                        }
                        sys.push_imag_zero(e);
                    }
                }
            }
        }
    }

    // Condition (iii): H(w, b(H(w′,w″),w″)) = H(b(H(w″,w),w′),w″), anti-linear
    // in w and w′, complex-quadratic in w″.
    for a in 0..m {
        for bb in 0..m {
            for w2 in complex_quadratic_wset(m) {
                let hw = h_times(h, &w2);
                for j in 0..k {
                    let mut e = sys.expr();
                    for c in 0..m {
                        let lead = h.component(j).at(a, c).clone();
                        for t in 0..k {
                            // LHS: H_j[a,c]·b[c][t][d]·(H_t w″)_b·w″_d.
                            if !lead.is_zero() {
                                let vt = hw[t][bb].clone();
                                if !vt.is_zero() {
                                    for d in 0..m {
                                        e.add(
                                            b_idx(c, t, d),
                                            lead.clone() * vt.clone() * w2[d].clone(),
                                        );
                                    }
                                }
                            }
                            // RHS: conj(b[c][t][b])·(H_t w″)_a·(H_j w″)_c.
                            let coeff = hw[t][a].clone() * hw[j][c].clone();
                            if !coeff.is_zero() {
                                e.add_conj(b_idx(c, t, bb), -coeff);
                            }
                        }
                    }
                    sys.push_complex(e);
                }
            }
        }
    }

    let sol = sys.solve();
    sol.vectors
        .iter()
        .map(|v| {
            let mut a = SymTensor::zero(k, k);
            for j in 0..k {
                for t in 0..k {
                    for l in t..k {
                        a.set(j, t, l, v[a_idx(j, t, l)].clone());
                    }
                }
            }
            let b: Vec<GaussianRational> = (a_count..a_count + k * m * m)
                .map(|i| v[i].clone())
                .collect();
            OneGenerator { a, b }
        })
        .collect()
}

/// Exact value of the closed-form bound
/// `3k²/2 − (2n + 5/2)k + n² + 4n + 1` on `d(S(Ω,H))`.
pub fn bound_rhs(n: usize, k: usize) -> Rational {
    let n = rat_int(n as i64);
    let k = rat_int(k as i64);
    let three_half = crate::scalar::rat(3, 2);
    let five_half = crate::scalar::rat(5, 2);
    three_half * k.clone() * k.clone() - (rat_int(2) * n.clone() + five_half) * k
        + n.clone() * n.clone()
        + rat_int(4) * n
        + Rational::one()
}

/// Dimensions of the five graded components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradedDims {
    pub d_minus_one: usize,
    pub d_minus_half: usize,
    pub d_zero: usize,
    pub d_half: usize,
    pub d_one: usize,
}

impl GradedDims {
    pub fn total(&self) -> usize {
        self.d_minus_one + self.d_minus_half + self.d_zero + self.d_half + self.d_one
    }

    pub fn as_tuple(&self) -> (usize, usize, usize, usize, usize) {
        (
            self.d_minus_one,
            self.d_minus_half,
            self.d_zero,
            self.d_half,
            self.d_one,
        )
    }
}

/// Relation asserted by a bound check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
}

/// One evaluated inequality/identity of the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub label: &'static str,
    pub quantity: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub relation: Relation,
    pub holds: bool,
}

impl BoundCheck {
    fn new(
        label: &'static str,
        quantity: &str,
        lhs: Rational,
        rhs: Rational,
        relation: Relation,
    ) -> Self {
        let holds = match relation {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        };
        BoundCheck {
            label,
            quantity: quantity.to_string(),
            lhs,
            rhs,
            relation,
            holds,
        }
    }
}

/// Generator bases of all five components.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    /// Translations `a·∂/∂z`, `a ∈ ℝᵏ`: the unit vectors.
    pub minus_one: Vec<Vec<Rational>>,
    /// Fields `2iH(b,w)·∂/∂z + b·∂/∂w` for `b ∈ {e_c, i·e_c}`.
    pub minus_half: Vec<Vec<GaussianRational>>,
    pub zero: Vec<AssociatedPair>,
    pub half: Vec<HalfGenerator>,
    pub one: Vec<OneGenerator>,
}

/// Sampling policy for the homogeneity certificate.
#[derive(Debug, Clone, Copy)]
pub struct SamplePolicy {
    pub samples: usize,
    pub seed: u64,
}

impl Default for SamplePolicy {
    fn default() -> Self {
        SamplePolicy {
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

/// Full graded report for one domain.
#[derive(Debug, Clone)]
pub struct GradedReport {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub dims: GradedDims,
    pub s: usize,
    pub dim_cone_alg: usize,
    pub dim_stabilizer: usize,
    pub d: usize,
    pub bound_checks: Vec<BoundCheck>,
    pub homogeneity: TransitivityReport,
    pub generators: GeneratorSet,
    pub validation: ValidationStatus,
}

impl GradedReport {
    pub fn all_bounds_hold(&self) -> bool {
        self.bound_checks.iter().all(|c| c.holds)
    }
}

/// Compute the full report with the default sampling policy.
pub fn report(spec: &SiegelDomainSpec) -> Result<GradedReport> {
    report_with(spec, SamplePolicy::default())
}

/// Compute the full report.
pub fn report_with(spec: &SiegelDomainSpec, policy: SamplePolicy) -> Result<GradedReport> {
    let (k, m, n) = (spec.k(), spec.m(), spec.n());
    let cone_alg = spec.cone().automorphism_algebra_basis();
    let skew = skew_space(spec.form());
    let gz = g_zero(spec);
    let gh = g_half(spec);
    let go = g_one(spec);

    let dims = GradedDims {
        d_minus_one: k,
        d_minus_half: 2 * m,
        d_zero: gz.dim,
        d_half: gh.len(),
        d_one: go.len(),
    };
    let d = dims.total();
    let ri = |x: usize| rat_int(x as i64);

    let bound_checks = vec![
        BoundCheck::new(
            "2.1",
            "dim g(Omega)",
            ri(cone_alg.dim()),
            crate::cone::dimension_bound(k),
            Relation::Le,
        ),
        BoundCheck::new(
            "2.5",
            "dim g_{1/2}",
            ri(dims.d_half),
            ri(2 * m),
            Relation::Le,
        ),
        BoundCheck::new("2.5", "dim g_1", ri(dims.d_one), ri(k), Relation::Le),
        BoundCheck::new(
            "2.6",
            "dim g_0 = s + dim stabilizer",
            ri(dims.d_zero),
            ri(skew.s + gz.stabilizer_dim),
            Relation::Eq,
        ),
        BoundCheck::new(
            "2.7",
            "d <= k + 2m + s + dim g(Omega) + dim g_{1/2} + dim g_1",
            ri(d),
            ri(k + 2 * m + skew.s + cone_alg.dim() + dims.d_half + dims.d_one),
            Relation::Le,
        ),
        BoundCheck::new(
            "2.8",
            "d <= closed-form bound",
            ri(d),
            bound_rhs(n, k),
            Relation::Le,
        ),
        BoundCheck::new("ests", "s <= m^2", ri(skew.s), ri(m * m), Relation::Le),
    ];

    let base_points = spec.cone().default_base_points(policy.samples, policy.seed);
    let homogeneity = infinitesimal_transitivity(&gz.stabilizer_basis, spec.cone(), &base_points)?;

    let minus_one = (0..k)
        .map(|t| {
            let mut v = vec![Rational::zero(); k];
            v[t] = Rational::one();
            v
        })
        .collect();
    let mut minus_half = Vec::with_capacity(2 * m);
    for c in 0..m {
        for unit in [gauss(1, 0), gauss(0, 1)] {
            let mut v = vec![GaussianRational::zero(); m];
            v[c] = unit;
            minus_half.push(v);
        }
    }

    Ok(GradedReport {
        k,
        m,
        n,
        dims,
        s: skew.s,
        dim_cone_alg: cone_alg.dim(),
        dim_stabilizer: gz.stabilizer_dim,
        d,
        bound_checks,
        homogeneity,
        generators: GeneratorSet {
            minus_one,
            minus_half,
            zero: gz.pairs,
            half: gh,
            one: go,
        },
        validation: spec.validation(),
    })
}

// ---------------------------------------------------------------------------
// Vector field synthesis and shape-checked extraction.

/// The five grades, doubled to stay integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grade {
    MinusOne,
    MinusHalf,
    Zero,
    Half,
    One,
}

impl Grade {
    pub const ALL: [Grade; 5] = [
        Grade::MinusOne,
        Grade::MinusHalf,
        Grade::Zero,
        Grade::Half,
        Grade::One,
    ];

    /// Twice the eigenvalue of `ad ∂`.
    pub fn doubled(&self) -> i32 {
        match self {
            Grade::MinusOne => -2,
            Grade::MinusHalf => -1,
            Grade::Zero => 0,
            Grade::Half => 1,
            Grade::One => 2,
        }
    }

    pub fn from_doubled(v: i32) -> Option<Grade> {
        Grade::ALL.iter().copied().find(|g| g.doubled() == v)
    }

    /// Eigenvalue as an exact rational.
    pub fn eigenvalue(&self) -> Rational {
        crate::scalar::rat(self.doubled() as i64, 2)
    }
}

/// `a·∂/∂z` for `a ∈ ℝᵏ`.
pub fn field_minus_one(spec: &SiegelDomainSpec, a: &[Rational]) -> PolyVectorField {
    let (k, m) = (spec.k(), spec.m());
    let mut field = PolyVectorField::zero(k, m);
    for j in 0..k {
        field.z_comp[j] = Poly::constant(k + m, to_gauss(&a[j]));
    }
    field
}

/// `2iH(b,w)·∂/∂z + b·∂/∂w`.
pub fn field_minus_half(spec: &SiegelDomainSpec, b: &[GaussianRational]) -> PolyVectorField {
    let (k, m) = (spec.k(), spec.m());
    let n = k + m;
    let mut field = PolyVectorField::zero(k, m);
    let u = conj_times_h(spec.form(), b);
    let two_i = gauss(0, 2);
    for j in 0..k {
        let mut p = Poly::zero(n);
        for c in 0..m {
            let mut exps = vec![0u8; n];
            exps[k + c] = 1;
            p.add_term(&exps, two_i.clone() * u[j][c].clone());
        }
        field.z_comp[j] = p;
    }
    for c in 0..m {
        field.w_comp[c] = Poly::constant(n, b[c].clone());
    }
    field
}

/// `(Az)·∂/∂z + (Bw)·∂/∂w`.
pub fn field_zero(spec: &SiegelDomainSpec, pair: &AssociatedPair) -> PolyVectorField {
    let (k, m) = (spec.k(), spec.m());
    let n = k + m;
    let mut field = PolyVectorField::zero(k, m);
    for j in 0..k {
        let mut p = Poly::zero(n);
        for l in 0..k {
            let mut exps = vec![0u8; n];
            exps[l] = 1;
            p.add_term(&exps, to_gauss(pair.a.at(j, l)));
        }
        field.z_comp[j] = p;
    }
    for c in 0..m {
        let mut p = Poly::zero(n);
        for d in 0..m {
            let mut exps = vec![0u8; n];
            exps[k + d] = 1;
            p.add_term(&exps, pair.b.at(c, d).clone());
        }
        field.w_comp[c] = p;
    }
    field
}

/// `2iH(Φ(z̄),w)·∂/∂z + (Φ(z)+c(w,w))·∂/∂w`. The z-coefficient expands to the
/// holomorphic bilinear `2i·zᵀΦ†Hⱼw`.
pub fn field_half(spec: &SiegelDomainSpec, gen: &HalfGenerator) -> PolyVectorField {
    let (k, m) = (spec.k(), spec.m());
    let n = k + m;
    let h = spec.form();
    let mut field = PolyVectorField::zero(k, m);
    let two_i = gauss(0, 2);
    for j in 0..k {
        let mut p = Poly::zero(n);
        for t in 0..k {
            for c in 0..m {
                // (Φ†H_j)[t,c] = Σ_{c'} conj(Φ[c',t])·H_j[c',c]
                let mut coeff = GaussianRational::zero();
                for cp in 0..m {
                    coeff += gen.phi.at(cp, t).conj() * h.component(j).at(cp, c).clone();
                }
                if coeff.is_zero() {
                    continue;
                }
                let mut exps = vec![0u8; n];
                exps[t] = 1;
                exps[k + c] += 1;
                p.add_term(&exps, two_i.clone() * coeff);
            }
        }
        field.z_comp[j] = p;
    }
    for c in 0..m {
        let mut p = Poly::zero(n);
        for t in 0..k {
            let mut exps = vec![0u8; n];
            exps[t] = 1;
            p.add_term(&exps, gen.phi.at(c, t).clone());
        }
        for d in 0..m {
            for f in d..m {
                let mut exps = vec![0u8; n];
                exps[k + d] += 1;
                exps[k + f] += 1;
                let coeff = gen.c.value(c, d, f).clone();
                let coeff = if d == f { coeff } else { coeff * gauss(2, 0) };
                p.add_term(&exps, coeff);
            }
        }
        field.w_comp[c] = p;
    }
    field
}

/// `a(z,z)·∂/∂z + b(z,w)·∂/∂w`.
pub fn field_one(spec: &SiegelDomainSpec, gen: &OneGenerator) -> PolyVectorField {
    let (k, m) = (spec.k(), spec.m());
    let n = k + m;
    let mut field = PolyVectorField::zero(k, m);
    for j in 0..k {
        let mut p = Poly::zero(n);
        for t in 0..k {
            for l in t..k {
                let mut exps = vec![0u8; n];
                exps[t] += 1;
                exps[l] += 1;
                let coeff = gen.a.value(j, t, l).clone();
                let coeff = if t == l { coeff } else { coeff * gauss(2, 0) };
                p.add_term(&exps, coeff);
            }
        }
        field.z_comp[j] = p;
    }
    for c in 0..m {
        let mut p = Poly::zero(n);
        for t in 0..k {
            for d in 0..m {
                let mut exps = vec![0u8; n];
                exps[t] = 1;
                exps[k + d] += 1;
                p.add_term(&exps, gen.b_entry(c, t, d, k, m).clone());
            }
        }
        field.w_comp[c] = p;
    }
    field
}

/// All generator fields of a report, per grade, in canonical order.
pub fn generator_fields(
    spec: &SiegelDomainSpec,
    gens: &GeneratorSet,
) -> Vec<(Grade, Vec<PolyVectorField>)> {
    vec![
        (
            Grade::MinusOne,
            gens.minus_one
                .iter()
                .map(|a| field_minus_one(spec, a))
                .collect(),
        ),
        (
            Grade::MinusHalf,
            gens.minus_half
                .iter()
                .map(|b| field_minus_half(spec, b))
                .collect(),
        ),
        (
            Grade::Zero,
            gens.zero.iter().map(|p| field_zero(spec, p)).collect(),
        ),
        (
            Grade::Half,
            gens.half.iter().map(|g| field_half(spec, g)).collect(),
        ),
        (
            Grade::One,
            gens.one.iter().map(|g| field_one(spec, g)).collect(),
        ),
    ]
}

/// Shape-checked decomposition: read the free parameters of `field` at the
/// given grade, re-synthesize, and require exact equality. Returns the
/// realified parameter vector, or `None` when the field does not have the
/// grade's shape.
pub fn extract_generator(
    spec: &SiegelDomainSpec,
    grade: Grade,
    field: &PolyVectorField,
) -> Option<Vec<Rational>> {
    let (k, m) = (spec.k(), spec.m());
    let n = k + m;
    let zero_exps = vec![0u8; n];
    match grade {
        Grade::MinusOne => {
            let mut a = Vec::with_capacity(k);
            for j in 0..k {
                let c = field.z_comp[j].coefficient(&zero_exps);
                if !c.im.is_zero() {
                    return None;
                }
                a.push(c.re.clone());
            }
            (field_minus_one(spec, &a) == *field).then_some(a)
        }
        Grade::MinusHalf => {
            let mut b = Vec::with_capacity(m);
            for c in 0..m {
                b.push(field.w_comp[c].coefficient(&zero_exps));
            }
            (field_minus_half(spec, &b) == *field).then(|| realify_vector(&b))
        }
        Grade::Zero => {
            let mut a = RationalMatrix::zeros(k, k);
            for j in 0..k {
                for l in 0..k {
                    let mut exps = zero_exps.clone();
                    exps[l] = 1;
                    let c = field.z_comp[j].coefficient(&exps);
                    if !c.im.is_zero() {
                        return None;
                    }
                    *a.at_mut(j, l) = c.re.clone();
                }
            }
            let b = GaussianMatrix::from_fn(m, m, |c, d| {
                let mut exps = zero_exps.clone();
                exps[k + d] = 1;
                field.w_comp[c].coefficient(&exps)
            });
            let pair = AssociatedPair { a, b };
            (field_zero(spec, &pair) == *field).then(|| {
                let mut v = pair.a.to_vec();
                v.extend(realify_vector(&pair.b.to_vec()));
                v
            })
        }
        Grade::Half => {
            let phi = GaussianMatrix::from_fn(m, k, |c, t| {
                let mut exps = zero_exps.clone();
                exps[t] = 1;
                field.w_comp[c].coefficient(&exps)
            });
            let mut c_tensor = SymTensor::zero(m, m);
            let half = to_gauss(&crate::scalar::rat(1, 2));
            for out in 0..m {
                for d in 0..m {
                    for f in d..m {
                        let mut exps = zero_exps.clone();
                        exps[k + d] += 1;
                        exps[k + f] += 1;
                        let coeff = field.w_comp[out].coefficient(&exps);
                        let coeff = if d == f { coeff } else { coeff * half.clone() };
                        c_tensor.set(out, d, f, coeff);
                    }
                }
            }
            let gen = HalfGenerator { phi, c: c_tensor };
            (field_half(spec, &gen) == *field).then(|| {
                let mut v = realify_vector(&gen.phi.to_vec());
                v.extend(realify_vector(gen.c.entries()));
                v
            })
        }
        Grade::One => {
            let mut a = SymTensor::zero(k, k);
            let half = to_gauss(&crate::scalar::rat(1, 2));
            for j in 0..k {
                for t in 0..k {
                    for l in t..k {
                        let mut exps = zero_exps.clone();
                        exps[t] += 1;
                        exps[l] += 1;
                        let coeff = field.z_comp[j].coefficient(&exps);
                        let coeff = if t == l { coeff } else { coeff * half.clone() };
                        if !coeff.im.is_zero() {
                            return None;
                        }
                        a.set(j, t, l, coeff);
                    }
                }
            }
            let mut b = Vec::with_capacity(k * m * m);
            for c in 0..m {
                for t in 0..k {
                    for d in 0..m {
                        let mut exps = zero_exps.clone();
                        exps[t] = 1;
                        exps[k + d] += 1;
                        b.push(field.w_comp[c].coefficient(&exps));
                    }
                }
            }
            let gen = OneGenerator { a, b };
            (field_one(spec, &gen) == *field).then(|| {
                let mut v: Vec<Rational> = gen.a.entries().iter().map(|z| z.re.clone()).collect();
                v.extend(realify_vector(&gen.b));
                v
            })
        }
    }
}

/// Euler grading field for this spec's dimensions.
pub fn euler_for(spec: &SiegelDomainSpec) -> PolyVectorField {
    euler_field(spec.k(), spec.m())
}

/// Parameter vectors of a whole grade's computed basis.
pub fn grade_parameter_vectors(gens: &GeneratorSet, grade: Grade) -> Vec<Vec<Rational>> {
    match grade {
        Grade::MinusOne => gens.minus_one.clone(),
        Grade::MinusHalf => gens.minus_half.iter().map(|b| realify_vector(b)).collect(),
        Grade::Zero => gens
            .zero
            .iter()
            .map(|p| {
                let mut v = p.a.to_vec();
                v.extend(realify_vector(&p.b.to_vec()));
                v
            })
            .collect(),
        Grade::Half => gens
            .half
            .iter()
            .map(|g| {
                let mut v = realify_vector(&g.phi.to_vec());
                v.extend(realify_vector(g.c.entries()));
                v
            })
            .collect(),
        Grade::One => gens
            .one
            .iter()
            .map(|g| {
                let mut v: Vec<Rational> = g.a.entries().iter().map(|z| z.re.clone()).collect();
                v.extend(realify_vector(&g.b));
                v
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::{matrix_span_basis, TransitivityVerdict};
    use crate::matrix::span_contains;
    use crate::poly::lie_bracket;
    use crate::scalar::rat;

    fn qv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    fn d6_spec() -> SiegelDomainSpec {
        let cone = ConeSpec::lorentz(3).unwrap();
        let form =
            HermitianTuple::scalar_family(&qv(&[1, 1, 0]), &GaussianMatrix::identity(1)).unwrap();
        SiegelDomainSpec::new(cone, form).unwrap()
    }

    fn d8_spec() -> SiegelDomainSpec {
        let cone = ConeSpec::lorentz(3).unwrap();
        let form =
            HermitianTuple::scalar_family(&qv(&[1, 1, 0]), &GaussianMatrix::identity(2)).unwrap();
        SiegelDomainSpec::new(cone, form).unwrap()
    }

    fn d3_spec() -> SiegelDomainSpec {
        // Representative (α,β,γ,δ) = (1,1,0,1), so β+γ > 0.
        let cone = ConeSpec::orthant(2);
        let form = HermitianTuple::diagonal(&[qv(&[1, 1]), qv(&[0, 1])]).unwrap();
        SiegelDomainSpec::new(cone, form).unwrap()
    }

    fn ball_spec(n: usize) -> SiegelDomainSpec {
        let cone = ConeSpec::half_line();
        let form = HermitianTuple::new(1, n - 1, vec![GaussianMatrix::identity(n - 1)]).unwrap();
        SiegelDomainSpec::new(cone, form).unwrap()
    }

    fn tube_spec(cone: ConeSpec) -> SiegelDomainSpec {
        let k = cone.dim();
        SiegelDomainSpec::new(cone, HermitianTuple::tube(k)).unwrap()
    }

    #[test]
    fn g_zero_of_scalar_lorentz_domain() {
        // dim g₀ = 4 with a 3-dimensional stabilizer (s = 1).
        let gz = g_zero(&d6_spec());
        assert_eq!(gz.dim, 4);
        assert_eq!(gz.stabilizer_dim, 3);
        // Stabilizer equals the displayed (λ,p,q) family with r = q.
        let fam = |l: i64, p: i64, q: i64| {
            RationalMatrix::from_rows(vec![qv(&[l, p, q]), qv(&[p, l, q]), qv(&[q, -q, l])])
        };
        let expected = vec![fam(1, 0, 0), fam(0, 1, 0), fam(0, 0, 1)];
        assert_eq!(
            matrix_span_basis(&gz.stabilizer_basis),
            matrix_span_basis(&expected)
        );
    }

    #[test]
    fn g_zero_of_two_fiber_lorentz_domain() {
        let gz = g_zero(&d8_spec());
        assert_eq!(gz.dim, 7);
        assert_eq!(gz.stabilizer_dim, 3);
    }

    #[test]
    fn g_zero_of_tube_is_cone_algebra() {
        let gz = g_zero(&tube_spec(ConeSpec::orthant(4)));
        assert_eq!(gz.dim, 4);
        assert_eq!(gz.stabilizer_dim, 4);
    }

    #[test]
    fn associated_pairs_satisfy_the_matrix_identity() {
        for spec in [d6_spec(), d8_spec(), d3_spec(), ball_spec(3)] {
            let gz = g_zero(&spec);
            let h = spec.form();
            for pair in &gz.pairs {
                for j in 0..spec.k() {
                    let mut lhs = GaussianMatrix::zeros(spec.m(), spec.m());
                    for l in 0..spec.k() {
                        lhs = lhs.add(&h.component(l).scale(&to_gauss(pair.a.at(j, l))));
                    }
                    let rhs = h
                        .component(j)
                        .mul(&pair.b)
                        .add(&pair.b.conj_transpose().mul(h.component(j)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn stabilizer_of_equal_pair_form_is_scalars() {
        // (Ω₁, (||w||², ||w||²)): the stabilizer algebra is ρ·I₂.
        let cone = ConeSpec::orthant(2);
        let form = HermitianTuple::diagonal(&[qv(&[1, 1]), qv(&[1, 1])]).unwrap();
        let spec = SiegelDomainSpec::new(cone, form).unwrap();
        let stab = stabilizer_algebra(&spec);
        assert_eq!(stab.len(), 1);
        assert_eq!(
            matrix_span_basis(&stab),
            matrix_span_basis(&[RationalMatrix::identity(2)])
        );
    }

    #[test]
    fn stabilizer_of_all_nonzero_direction_is_scalars() {
        // (Ω₂, v|w|²) with every vⱼ ≠ 0.
        let cone = ConeSpec::orthant(3);
        let form =
            HermitianTuple::scalar_family(&qv(&[1, 1, 1]), &GaussianMatrix::identity(1)).unwrap();
        let spec = SiegelDomainSpec::new(cone, form).unwrap();
        assert_eq!(stabilizer_algebra(&spec).len(), 1);
    }

    #[test]
    fn g_half_vanishes_for_mixed_diagonal_pair() {
        assert!(g_half(&d3_spec()).is_empty());
    }

    #[test]
    fn g_half_vanishes_for_scalar_lorentz_domain() {
        assert!(g_half(&d6_spec()).is_empty());
    }

    #[test]
    fn g_half_saturates_for_balls() {
        for n in [2, 3, 4] {
            let spec = ball_spec(n);
            assert_eq!(g_half(&spec).len(), 2 * (n - 1), "ball dimension {n}");
        }
    }

    #[test]
    fn g_one_of_scalar_lorentz_domain_is_one_dimensional() {
        assert_eq!(g_one(&d6_spec()).len(), 1);
    }

    #[test]
    fn g_one_of_lorentz_tube_saturates() {
        let spec = tube_spec(ConeSpec::lorentz(4).unwrap());
        assert_eq!(g_one(&spec).len(), 4);
    }

    #[test]
    fn g_one_vanishes_for_mixed_diagonal_pair() {
        assert!(g_one(&d3_spec()).is_empty());
    }

    #[test]
    fn bound_rhs_values() {
        assert_eq!(bound_rhs(5, 4), rat_int(20));
        assert_eq!(bound_rhs(6, 3), rat_int(31));
        assert_eq!(bound_rhs(5, 3), rat_int(22));
        assert_eq!(bound_rhs(4, 3), rat_int(15));
    }

    #[test]
    fn report_dimension_table_rows() {
        // Tubes over the three four-dimensional cones: d = 12, 13, 15.
        let omega5 =
            ConeSpec::product(vec![ConeSpec::lorentz(3).unwrap(), ConeSpec::half_line()]).unwrap();
        let cases = [
            (tube_spec(ConeSpec::orthant(4)), 12),
            (tube_spec(omega5), 13),
            (tube_spec(ConeSpec::lorentz(4).unwrap()), 15),
        ];
        for (spec, expected) in cases {
            let rep = report(&spec).unwrap();
            assert_eq!(rep.d, expected);
            assert!(rep.all_bounds_hold());
            assert_eq!(
                rep.homogeneity.verdict,
                TransitivityVerdict::TransitiveCertified
            );
        }
    }

    #[test]
    fn report_of_scalar_lorentz_domain() {
        let rep = report(&d6_spec()).unwrap();
        assert_eq!(rep.dims.as_tuple(), (3, 2, 4, 0, 1));
        assert_eq!(rep.d, 10);
        assert_eq!(rep.s, 1);
        assert_eq!(rep.dim_stabilizer, 3);
        assert!(rep.all_bounds_hold());
    }

    #[test]
    fn report_of_ball_matches_closed_form() {
        let rep = report(&ball_spec(4)).unwrap();
        assert_eq!(rep.d, 24);
        assert_eq!(rep.dims.as_tuple(), (1, 6, 10, 6, 1));
        assert!(rep.all_bounds_hold());
        assert_eq!(
            rep.homogeneity.verdict,
            TransitivityVerdict::TransitiveCertified
        );
    }

    #[test]
    fn euler_eigenvalue_identity() {
        let spec = d6_spec();
        let rep = report(&spec).unwrap();
        let euler = euler_for(&spec);
        for (grade, fields) in generator_fields(&spec, &rep.generators) {
            for field in fields {
                let bracket = lie_bracket(&euler, &field).unwrap();
                assert_eq!(bracket, field.scale_rat(&grade.eigenvalue()));
            }
        }
    }

    #[test]
    fn minus_half_bracket_reproduces_the_translation_formula() {
        // [X_b, X_b′] = 2i(H(b′,b) − H(b,b′))·∂/∂z, constant and real.
        let spec = d8_spec();
        let b1 = vec![gauss(1, 0), gauss(0, 0)];
        let b2 = vec![gauss(0, 1), gauss(2, 0)];
        let x1 = field_minus_half(&spec, &b1);
        let x2 = field_minus_half(&spec, &b2);
        let bracket = lie_bracket(&x1, &x2).unwrap();
        let h = spec.form();
        let h12 = h.eval(&b1, &b2);
        let h21 = h.eval(&b2, &b1);
        let two_i = gauss(0, 2);
        let a: Vec<Rational> = h12
            .iter()
            .zip(&h21)
            .map(|(f, g)| {
                let val = two_i.clone() * (g.clone() - f.clone());
                assert!(val.im.is_zero());
                val.re.clone()
            })
            .collect();
        assert_eq!(bracket, field_minus_one(&spec, &a));
    }

    #[test]
    fn grading_closure_for_scalar_lorentz_domain() {
        let spec = d6_spec();
        let rep = report(&spec).unwrap();
        let by_grade = generator_fields(&spec, &rep.generators);
        for (ga, fields_a) in &by_grade {
            for (gb, fields_b) in &by_grade {
                let target = Grade::from_doubled(ga.doubled() + gb.doubled());
                for fa in fields_a {
                    for fb in fields_b {
                        let bracket = lie_bracket(fa, fb).unwrap();
                        match target {
                            None => assert!(bracket.is_zero(), "{ga:?},{gb:?}"),
                            Some(g) => {
                                if bracket.is_zero() {
                                    continue;
                                }
                                let vec = extract_generator(&spec, g, &bracket)
                                    .unwrap_or_else(|| panic!("bad shape at {ga:?},{gb:?}"));
                                let basis = grade_parameter_vectors(&rep.generators, g);
                                assert!(span_contains(&basis, &vec), "{ga:?},{gb:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let spec = d8_spec();
        let r1 = format!("{:?}", report(&spec).unwrap());
        let r2 = format!("{:?}", report(&spec).unwrap());
        assert_eq!(r1, r2);
    }

    #[test]
    fn validation_status_is_recorded() {
        let spec = d6_spec();
        assert_eq!(spec.validation(), ValidationStatus::Certified);
        let un = SiegelDomainSpec::new_unvalidated(
            ConeSpec::lorentz(3).unwrap(),
            HermitianTuple::scalar_family(&qv(&[1, 2, 0]), &GaussianMatrix::identity(1)).unwrap(),
        )
        .unwrap();
        assert_eq!(un.validation(), ValidationStatus::Unvalidated);
        assert!(SiegelDomainSpec::new(
            ConeSpec::lorentz(3).unwrap(),
            HermitianTuple::scalar_family(&qv(&[1, 2, 0]), &GaussianMatrix::identity(1)).unwrap(),
        )
        .is_err());
        let _ = rat(1, 2);
    }
}
