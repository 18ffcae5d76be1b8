//! Holomorphic polynomial vector fields on `ℂᵏ × ℂᵐ` with exact Gaussian
//! rational coefficients, and their Lie bracket
//! `[X,Y] = (X·∇)Y − (Y·∇)X` by symbolic differentiation.
//!
//! Variables are ordered `z₁,…,zₖ,w₁,…,wₘ`. The graded generators all have
//! degree ≤ 2; products inside a bracket may transiently reach degree 3, so
//! the polynomial type is degree-agnostic and the bracket checks on exit that
//! everything above degree 2 cancelled.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::to_gauss;
use crate::{GaussianRational, Rational};

/// Sparse polynomial keyed by exponent vectors (fixed variable count).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, GaussianRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(&vec![0; nvars], c);
        p
    }

    /// The coordinate function of variable `v`.
    pub fn var(nvars: usize, v: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[v] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(
            &exps,
            GaussianRational::from(Rational::from_integer(1.into())),
        );
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `c·x^exps` in place.
    pub fn add_term(&mut self, exps: &[u8], c: GaussianRational) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(exps.to_vec())
            .or_insert_with(GaussianRational::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(exps);
        }
    }

    pub fn coefficient(&self, exps: &[u8]) -> GaussianRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, coeff) in &self.terms {
            out.add_term(e, coeff.clone() * c.clone());
        }
        out
    }

    pub fn scale_rat(&self, c: &Rational) -> Poly {
        self.scale(&to_gauss(c))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u8> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(&exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Partial derivative with respect to variable `v`.
    pub fn partial(&self, v: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[v] -= 1;
            let factor = GaussianRational::from(Rational::from_integer((e[v] as i64).into()));
            out.add_term(&exps, c.clone() * factor);
        }
        out
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }
}

/// Polynomial vector field `Σ Pⱼ ∂/∂zⱼ + Σ Q꜀ ∂/∂w꜀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVectorField {
    pub k: usize,
    pub m: usize,
    pub z_comp: Vec<Poly>,
    pub w_comp: Vec<Poly>,
}

impl PolyVectorField {
    pub fn zero(k: usize, m: usize) -> Self {
        PolyVectorField {
            k,
            m,
            z_comp: vec![Poly::zero(k + m); k],
            w_comp: vec![Poly::zero(k + m); m],
        }
    }

    pub fn nvars(&self) -> usize {
        self.k + self.m
    }

    pub fn is_zero(&self) -> bool {
        self.z_comp.iter().all(Poly::is_zero) && self.w_comp.iter().all(Poly::is_zero)
    }

    /// Component `v` in the unified variable order (z-block then w-block).
    pub fn component(&self, v: usize) -> &Poly {
        if v < self.k {
            &self.z_comp[v]
        } else {
            &self.w_comp[v - self.k]
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.k, self.m), (other.k, other.m));
        PolyVectorField {
            k: self.k,
            m: self.m,
            z_comp: self
                .z_comp
                .iter()
                .zip(&other.z_comp)
                .map(|(a, b)| a.add(b))
                .collect(),
            w_comp: self
                .w_comp
                .iter()
                .zip(&other.w_comp)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&to_gauss(&-Rational::from_integer(1.into()))))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        PolyVectorField {
            k: self.k,
            m: self.m,
            z_comp: self.z_comp.iter().map(|p| p.scale(c)).collect(),
            w_comp: self.w_comp.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        self.scale(&to_gauss(c))
    }

    pub fn max_degree(&self) -> usize {
        self.z_comp
            .iter()
            .chain(&self.w_comp)
            .map(Poly::total_degree)
            .max()
            .unwrap_or(0)
    }
}

/// The grading field `∂ = z·∂/∂z + ½ w·∂/∂w`; the five graded components are
/// the eigenspaces of `ad ∂` with eigenvalues `−1, −½, 0, ½, 1`.
pub fn euler_field(k: usize, m: usize) -> PolyVectorField {
    let n = k + m;
    let mut field = PolyVectorField::zero(k, m);
    for j in 0..k {
        field.z_comp[j] = Poly::var(n, j);
    }
    let half = crate::scalar::rat(1, 2);
    for c in 0..m {
        field.w_comp[c] = Poly::var(n, k + c).scale_rat(&half);
    }
    field
}

/// Exact Lie bracket `[X,Y] = (X·∇)Y − (Y·∇)X`.
///
/// Fails with an internal error if the result exceeds degree 2, which cannot
/// happen for fields from the graded components.
pub fn lie_bracket(x: &PolyVectorField, y: &PolyVectorField) -> Result<PolyVectorField> {
    if (x.k, x.m) != (y.k, y.m) {
        return Err(Error::DimensionMismatch(
            "bracket of fields on different spaces".into(),
        ));
    }
    let n = x.nvars();
    let mut out = PolyVectorField::zero(x.k, x.m);
    for comp in 0..n {
        let mut acc = Poly::zero(n);
        for v in 0..n {
            acc = acc.add(&x.component(v).mul(&y.component(comp).partial(v)));
            acc = acc.sub(&y.component(v).mul(&x.component(comp).partial(v)));
        }
        if comp < x.k {
            out.z_comp[comp] = acc;
        } else {
            out.w_comp[comp - x.k] = acc;
        }
    }
    if out.max_degree() > 2 {
        return Err(Error::DegreeOverflow(format!(
            "bracket has degree {}, expected at most 2",
            out.max_degree()
        )));
    }
    Ok(out)
}
