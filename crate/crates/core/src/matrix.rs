//! Dense matrices over an exact field scalar, with deterministic
//! fraction-free elimination, kernel bases in reduced-echelon canonical form,
//! and realification of complex-linear systems.
//!
//! Pivoting is always "first nonzero in column order": no magnitude
//! comparisons, so two runs on equal inputs produce identical output. Forward
//! elimination uses the fraction-free Bareiss recurrence
//! `m[i][j] ← (m[r][c]·m[i][j] − m[i][c]·m[r][j]) / prev`,
//! whose divisions are exact; coefficient growth stays bounded by minors of
//! the input.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::{GaussianRational, Rational, RationalMatrix};

/// Tag describing how one unknown of a complex-linear system is realified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnknownKind {
    /// One real slot.
    Real,
    /// Two real slots, real part first.
    Complex,
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows*cols");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        Matrix::new(nrows, ncols, data)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix::new(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn conj_transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conjugate())
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && *self == self.conj_transpose()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() + other.at(i, j).clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() - other.at(i, j).clone()
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for t in 0..self.cols {
                acc = acc + self.at(i, t).clone() * other.at(t, j).clone();
            }
            acc
        })
    }

    pub fn mat_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "vector length must equal cols");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self.at(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.at(rows[i], cols[j]).clone()
        })
    }

    /// Flatten to a row-major entry vector.
    pub fn to_vec(&self) -> Vec<T> {
        self.data.clone()
    }

    /// Fraction-free Bareiss forward elimination with first-nonzero pivoting.
    ///
    /// Returns the echelon matrix, the pivot columns, and the row-swap parity.
    fn bareiss(&self) -> (Matrix<T>, Vec<usize>, bool) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut odd_swaps = false;
        let mut prev = T::one();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
                odd_swaps = !odd_swaps;
            }
            let pivot = m.at(r, c).clone();
            for i in r + 1..m.rows {
                let lead = m.at(i, c).clone();
                // Rows with a zero leading entry need no combination; leaving
                // them unscaled changes neither pivots nor the (unique) RREF,
                // and over a field every later division stays exact.
                if lead.is_zero() {
                    continue;
                }
                for j in c + 1..m.cols {
                    let num =
                        pivot.clone() * m.at(i, j).clone() - lead.clone() * m.at(r, j).clone();
                    *m.at_mut(i, j) = num / prev.clone();
                }
                *m.at_mut(i, c) = T::zero();
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        (m, pivots, odd_swaps)
    }

    /// Rank over the field of the entries.
    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    /// Determinant of a square matrix by the full (no skipped rows) Bareiss
    /// recurrence, whose final pivot is the determinant up to swap parity.
    pub fn determinant(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.clone();
        let mut prev = T::one();
        let mut odd_swaps = false;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return Ok(T::zero());
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                odd_swaps = !odd_swaps;
            }
            let pivot = m.at(c, c).clone();
            for i in c + 1..n {
                let lead = m.at(i, c).clone();
                for j in c + 1..n {
                    let num =
                        pivot.clone() * m.at(i, j).clone() - lead.clone() * m.at(c, j).clone();
                    *m.at_mut(i, j) = num / prev.clone();
                }
                *m.at_mut(i, c) = T::zero();
            }
            prev = pivot;
        }
        let d = m.at(n - 1, n - 1).clone();
        Ok(if odd_swaps { -d } else { d })
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let (mut m, pivots, _) = self.bareiss();
        for (r, &c) in pivots.iter().enumerate().rev() {
            let pivot = m.at(r, c).clone();
            for j in c..m.cols {
                let v = m.at(r, j).clone() / pivot.clone();
                *m.at_mut(r, j) = v;
            }
            for i in 0..r {
                let lead = m.at(i, c).clone();
                if lead.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.at(i, j).clone() - lead.clone() * m.at(r, j).clone();
                    *m.at_mut(i, j) = v;
                }
            }
        }
        (m, pivots)
    }

    /// Canonical basis of the right null space.
    ///
    /// One vector per free column, free columns in ascending order, each with
    /// a `1` in its free slot; the pivot slots carry the negated reduced
    /// entries. `rank + basis.len() == cols` always holds.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![T::zero(); self.cols];
            v[f] = T::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -rref.at(r, f).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Canonical basis of the row span of `vectors` (nonzero rows of the RREF).
pub fn row_space_basis<T: Scalar>(vectors: &[Vec<T>]) -> Vec<Vec<T>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (rref, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
    (0..pivots.len()).map(|r| rref.row(r).to_vec()).collect()
}

/// Whether `candidate` lies in the span of `vectors`.
pub fn span_contains<T: Scalar>(vectors: &[Vec<T>], candidate: &[T]) -> bool {
    if candidate.iter().all(Zero::is_zero) {
        return true;
    }
    if vectors.is_empty() {
        return false;
    }
    let base = Matrix::from_rows(vectors.to_vec()).rank();
    let mut all = vectors.to_vec();
    all.push(candidate.to_vec());
    Matrix::from_rows(all).rank() == base
}

/// Whether two families of vectors span the same subspace.
pub fn span_equal<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> bool {
    row_space_basis(a) == row_space_basis(b)
}

/// A subspace in reduced row echelon form supporting repeated membership
/// queries without re-eliminating the basis.
#[derive(Debug, Clone)]
pub struct RowSpace<T> {
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Scalar> RowSpace<T> {
    pub fn new(vectors: &[Vec<T>]) -> Self {
        if vectors.is_empty() {
            return RowSpace {
                rows: Vec::new(),
                pivots: Vec::new(),
            };
        }
        let (rref, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        let rows = (0..pivots.len()).map(|r| rref.row(r).to_vec()).collect();
        RowSpace { rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the echelon rows; membership means full reduction
    /// to zero.
    pub fn contains(&self, v: &[T]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (slot, r) in v.iter_mut().zip(row) {
                *slot = slot.clone() - factor.clone() * r.clone();
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Realify a complex-linear system with conjugations.
///
/// Input column convention: each `Complex` unknown `x` owns two adjacent
/// columns holding the coefficients of `x` and of `conj(x)`; each `Real`
/// unknown owns one column. Every complex equation row splits into two real
/// rows (real part first). Output slot convention: a `Complex` unknown owns
/// two adjacent real slots (`Re x`, then `Im x`); a `Real` unknown owns one.
/// The real solution set is in exact bijection with the complex one, so the
/// real dimension of the solution space is preserved.
pub fn realify(m: &Matrix<GaussianRational>, kinds: &[UnknownKind]) -> RationalMatrix {
    let in_cols: usize = kinds
        .iter()
        .map(|k| match k {
            UnknownKind::Complex => 2,
            UnknownKind::Real => 1,
        })
        .sum();
    assert_eq!(m.cols(), in_cols, "column count must match unknown tags");
    let out_cols: usize = kinds
        .iter()
        .map(|k| match k {
            UnknownKind::Complex => 2,
            UnknownKind::Real => 1,
        })
        .sum();
    let mut out = RationalMatrix::zeros(2 * m.rows(), out_cols);
    for i in 0..m.rows() {
        let (re_row, im_row) = (2 * i, 2 * i + 1);
        let mut ic = 0;
        let mut oc = 0;
        for kind in kinds {
            match kind {
                UnknownKind::Complex => {
                    let p = m.at(i, ic);
                    let q = m.at(i, ic + 1);
                    // p·x + q·conj(x) with x = u + iv splits as
                    //   Re: (Re p + Re q)·u + (−Im p + Im q)·v
                    //   Im: (Im p + Im q)·u + ( Re p − Re q)·v
                    *out.at_mut(re_row, oc) = p.re.clone() + q.re.clone();
                    *out.at_mut(re_row, oc + 1) = -p.im.clone() + q.im.clone();
                    *out.at_mut(im_row, oc) = p.im.clone() + q.im.clone();
                    *out.at_mut(im_row, oc + 1) = p.re.clone() - q.re.clone();
                    ic += 2;
                    oc += 2;
                }
                UnknownKind::Real => {
                    let r = m.at(i, ic);
                    *out.at_mut(re_row, oc) = r.re.clone();
                    *out.at_mut(im_row, oc) = r.im.clone();
                    ic += 1;
                    oc += 1;
                }
            }
        }
    }
    out
}

/// Interleave the real and imaginary parts of a complex vector
/// (`re` before `im`, entry order preserved).
pub fn realify_vector(v: &[GaussianRational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(2 * v.len());
    for z in v {
        out.push(z.re.clone());
        out.push(z.im.clone());
    }
    out
}
