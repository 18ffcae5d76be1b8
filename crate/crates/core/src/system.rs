//! Builder for linear systems over mixed real/complex unknowns.
//!
//! Constraints are linear expressions `Σ pᵤ·xᵤ + Σ qᵤ·conj(xᵤ)` with Gaussian
//! rational coefficients. A row can assert the full complex equation, only
//! its real part, or only its imaginary part. Solving realifies the stacked
//! system (see [`crate::matrix::realify`]) and returns the canonical kernel
//! basis mapped back to complex unknown values.
//!
//! Unknown order is fixed by the caller at construction; within a complex
//! unknown the real part precedes the imaginary part. This makes every
//! returned basis canonical and reproducible.

use num_traits::Zero;

use crate::matrix::{realify, UnknownKind};
use crate::scalar::to_gauss;
use crate::{GaussianMatrix, GaussianRational, Rational, RationalMatrix};

/// Linear expression in the unknowns and their conjugates.
#[derive(Debug, Clone)]
pub struct LinExpr {
    /// Per unknown: coefficient on `x` and on `conj(x)`.
    coeffs: Vec<(GaussianRational, GaussianRational)>,
}

impl LinExpr {
    fn zero(n: usize) -> Self {
        LinExpr {
            coeffs: vec![(GaussianRational::zero(), GaussianRational::zero()); n],
        }
    }

    /// Add `c·x` for unknown index `u`.
    pub fn add(&mut self, u: usize, c: GaussianRational) {
        self.coeffs[u].0 = self.coeffs[u].0.clone() + c;
    }

    /// Add `c·conj(x)` for unknown index `u`.
    pub fn add_conj(&mut self, u: usize, c: GaussianRational) {
        self.coeffs[u].1 = self.coeffs[u].1.clone() + c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|(p, q)| p.is_zero() && q.is_zero())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RowKind {
    /// Both real rows of the complex equation `expr = 0`.
    Complex,
    /// Only `Re(expr) = 0`.
    RealPart,
    /// Only `Im(expr) = 0`.
    ImagPart,
}

/// A linear system being assembled.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    kinds: Vec<UnknownKind>,
    rows: Vec<(RowKind, LinExpr)>,
}

/// Canonical basis of the real solution space of a [`LinearSystem`].
#[derive(Debug, Clone)]
pub struct SolutionSpace {
    /// Real dimension of the solution space.
    pub dim: usize,
    /// Basis vectors as complex values per unknown (real unknowns carry a
    /// zero imaginary part by construction).
    pub vectors: Vec<Vec<GaussianRational>>,
}

impl LinearSystem {
    pub fn new(kinds: Vec<UnknownKind>) -> Self {
        LinearSystem {
            kinds,
            rows: Vec::new(),
        }
    }

    pub fn n_unknowns(&self) -> usize {
        self.kinds.len()
    }

    pub fn expr(&self) -> LinExpr {
        LinExpr::zero(self.kinds.len())
    }

    /// Assert `expr = 0` as a complex equation.
    pub fn push_complex(&mut self, e: LinExpr) {
        if !e.is_zero() {
            self.rows.push((RowKind::Complex, e));
        }
    }

    /// Assert `Re(expr) = 0`.
    pub fn push_real_zero(&mut self, e: LinExpr) {
        if !e.is_zero() {
            self.rows.push((RowKind::RealPart, e));
        }
    }

    /// Assert `Im(expr) = 0`.
    pub fn push_imag_zero(&mut self, e: LinExpr) {
        if !e.is_zero() {
            self.rows.push((RowKind::ImagPart, e));
        }
    }

    /// Assemble the complex coefficient matrix in the realify column
    /// convention (two columns per complex unknown: `x` then `conj(x)`).
    fn complex_matrix(&self) -> GaussianMatrix {
        let ncols: usize = self
            .kinds
            .iter()
            .map(|k| match k {
                UnknownKind::Complex => 2,
                UnknownKind::Real => 1,
            })
            .sum();
        let mut rows = Vec::with_capacity(self.rows.len());
        for (_, e) in &self.rows {
            let mut row = Vec::with_capacity(ncols);
            for (u, kind) in self.kinds.iter().enumerate() {
                let (p, q) = &e.coeffs[u];
                match kind {
                    UnknownKind::Complex => {
                        row.push(p.clone());
                        row.push(q.clone());
                    }
                    // A real unknown equals its conjugate, so the two
                    // coefficients collapse.
                    UnknownKind::Real => row.push(p.clone() + q.clone()),
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            GaussianMatrix::zeros(0, ncols)
        } else {
            GaussianMatrix::from_rows(rows)
        }
    }

    /// The realified constraint matrix (rows filtered by row kind, then
    /// deduplicated — the RREF, hence the kernel basis, depends only on the
    /// row space).
    pub fn real_matrix(&self) -> RationalMatrix {
        let real = realify(&self.complex_matrix(), &self.kinds);
        let mut keep = Vec::with_capacity(self.rows.len() * 2);
        for (i, (kind, _)) in self.rows.iter().enumerate() {
            match kind {
                RowKind::Complex => {
                    keep.push(2 * i);
                    keep.push(2 * i + 1);
                }
                RowKind::RealPart => keep.push(2 * i),
                RowKind::ImagPart => keep.push(2 * i + 1),
            }
        }
        let ncols = real.cols();
        let mut rows: Vec<Vec<Rational>> = keep.iter().map(|&i| real.row(i).to_vec()).collect();
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        rows.sort();
        rows.dedup();
        if rows.is_empty() {
            RationalMatrix::zeros(0, ncols)
        } else {
            RationalMatrix::from_rows(rows)
        }
    }

    /// Solve for the canonical basis of the real solution space.
    pub fn solve(&self) -> SolutionSpace {
        let real = self.real_matrix();
        let kernel = real.kernel_basis();
        let vectors: Vec<Vec<GaussianRational>> =
            kernel.iter().map(|v| self.slots_to_values(v)).collect();
        SolutionSpace {
            dim: vectors.len(),
            vectors,
        }
    }

    /// Map a realified slot vector back to per-unknown complex values.
    pub fn slots_to_values(&self, slots: &[Rational]) -> Vec<GaussianRational> {
        let mut out = Vec::with_capacity(self.kinds.len());
        let mut cursor = 0;
        for kind in &self.kinds {
            match kind {
                UnknownKind::Complex => {
                    out.push(GaussianRational::new(
                        slots[cursor].clone(),
                        slots[cursor + 1].clone(),
                    ));
                    cursor += 2;
                }
                UnknownKind::Real => {
                    out.push(to_gauss(&slots[cursor]));
                    cursor += 1;
                }
            }
        }
        debug_assert_eq!(cursor, slots.len());
        out
    }

    /// Evaluate a stored expression on a solution vector (for exactness
    /// checks: every solution must annihilate every row).
    pub fn residuals(&self, values: &[GaussianRational]) -> Vec<GaussianRational> {
        self.rows
            .iter()
            .map(|(kind, e)| {
                let mut acc = GaussianRational::zero();
                for (u, (p, q)) in e.coeffs.iter().enumerate() {
                    acc = acc + p.clone() * values[u].clone() + q.clone() * values[u].conj();
                }
                match kind {
                    RowKind::Complex => acc,
                    RowKind::RealPart => to_gauss(&acc.re),
                    RowKind::ImagPart => to_gauss(&acc.im),
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, gauss_i};

    #[test]
    fn complex_conjugation_constraint() {
        // x = conj(x) forces x real: one real degree of freedom.
        let mut sys = LinearSystem::new(vec![UnknownKind::Complex]);
        let mut e = sys.expr();
        e.add(0, gauss(1, 0));
        e.add_conj(0, gauss(-1, 0));
        sys.push_complex(e);
        let sol = sys.solve();
        assert_eq!(sol.dim, 1);
        assert_eq!(sol.vectors[0][0], gauss(1, 0));
    }

    #[test]
    fn imag_part_row_only() {
        // Im(x) = 0 via the imaginary part of (i·x − i·conj(x))/... use Im(x)=0
        // directly through push_imag_zero on expr = x.
        let mut sys = LinearSystem::new(vec![UnknownKind::Complex]);
        let mut e = sys.expr();
        e.add(0, gauss(1, 0));
        sys.push_imag_zero(e);
        let sol = sys.solve();
        assert_eq!(sol.dim, 1);
        assert_eq!(sol.vectors[0][0], gauss(1, 0));
    }

    #[test]
    fn mixed_real_and_complex_unknowns() {
        // Unknowns (t real, x complex) with x = i·t: solutions (t, it).
        let mut sys = LinearSystem::new(vec![UnknownKind::Real, UnknownKind::Complex]);
        let mut e = sys.expr();
        e.add(1, gauss(1, 0));
        e.add(0, -gauss_i());
        sys.push_complex(e);
        let sol = sys.solve();
        assert_eq!(sol.dim, 1);
        let v = &sol.vectors[0];
        assert_eq!(v[1], gauss_i() * v[0].clone());
        for r in sys.residuals(v) {
            assert!(r.is_zero());
        }
    }

    #[test]
    fn unconstrained_complex_unknown_has_two_real_dims() {
        let sys = LinearSystem::new(vec![UnknownKind::Complex]);
        assert_eq!(sys.solve().dim, 2);
    }
}
