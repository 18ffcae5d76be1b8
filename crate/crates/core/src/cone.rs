//! Homogeneous open convex cones without lines: half-lines, orthants,
//! Lorentz cones and finite products.
//!
//! For each cone the module provides exact membership, the Lie algebra
//! `g(Ω)` of its linear automorphism group, the dimension bound
//! `dim g(Ω) ≤ k²/2 − k/2 + 1`, and a sample-based certificate of
//! infinitesimal transitivity for subalgebras acting on the cone.

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{row_space_basis, Matrix};
use crate::scalar::{rat, rat_int, sign};
use crate::{Rational, RationalMatrix};

/// Default number of pseudorandom interior sample points (on top of the
/// canonical one) used by transitivity certification.
pub const DEFAULT_SAMPLES: usize = 8;

/// Default RNG seed for all sampling.
pub const DEFAULT_SEED: u64 = 42;

/// Atom of the cone catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeAtom {
    /// `{x ∈ ℝᵏ : xᵢ > 0}`; a half-line when `k = 1`.
    Orthant(usize),
    /// `{x ∈ ℝᵏ : x₁² − x₂² − … − xₖ² > 0, x₁ > 0}`, `k ≥ 3`.
    Lorentz(usize),
}

impl ConeAtom {
    pub fn dim(&self) -> usize {
        match self {
            ConeAtom::Orthant(k) | ConeAtom::Lorentz(k) => *k,
        }
    }
}

/// Where a point sits relative to a cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeLocation {
    Interior,
    Boundary,
    Outside,
}

/// A homogeneous open convex cone containing no line, in canonical form:
/// a product of atoms with adjacent orthant factors merged, so that
/// `orthant(2)` and `product(half_line, half_line)` are equal values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSpec {
    atoms: Vec<ConeAtom>,
}

impl ConeSpec {
    /// The cone `ℝ₊`.
    pub fn half_line() -> Self {
        ConeSpec::orthant(1)
    }

    /// The positive orthant in `ℝᵏ`, `k ≥ 1`.
    pub fn orthant(k: usize) -> Self {
        assert!(k >= 1, "orthant dimension must be at least 1");
        ConeSpec {
            atoms: vec![ConeAtom::Orthant(k)],
        }
    }

    /// The Lorentz cone in `ℝᵏ`, `k ≥ 3`.
    pub fn lorentz(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!(
                "Lorentz cone needs dimension >= 3, got {k}"
            )));
        }
        Ok(ConeSpec {
            atoms: vec![ConeAtom::Lorentz(k)],
        })
    }

    /// Direct product; nested products flatten and adjacent orthants merge.
    pub fn product(factors: Vec<ConeSpec>) -> Result<Self> {
        let mut atoms: Vec<ConeAtom> = Vec::new();
        for f in factors {
            for atom in f.atoms {
                match (atoms.last_mut(), &atom) {
                    (Some(ConeAtom::Orthant(a)), ConeAtom::Orthant(b)) => *a += b,
                    _ => atoms.push(atom),
                }
            }
        }
        if atoms.is_empty() {
            return Err(Error::InvalidParameter("empty cone product".into()));
        }
        Ok(ConeSpec { atoms })
    }

    pub fn atoms(&self) -> &[ConeAtom] {
        &self.atoms
    }

    /// Ambient dimension `k`.
    pub fn dim(&self) -> usize {
        self.atoms.iter().map(ConeAtom::dim).sum()
    }

    /// Exact location of a rational point relative to the cone.
    pub fn contains(&self, x: &[Rational]) -> Result<ConeLocation> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, cone lives in dimension {}",
                x.len(),
                self.dim()
            )));
        }
        let mut verdict = ConeLocation::Interior;
        let mut offset = 0;
        for atom in &self.atoms {
            let block = &x[offset..offset + atom.dim()];
            let here = match atom {
                ConeAtom::Orthant(_) => {
                    let signs: Vec<i32> = block.iter().map(sign).collect();
                    if signs.iter().any(|&s| s < 0) {
                        ConeLocation::Outside
                    } else if signs.iter().all(|&s| s > 0) {
                        ConeLocation::Interior
                    } else {
                        ConeLocation::Boundary
                    }
                }
                ConeAtom::Lorentz(_) => {
                    let head = &block[0];
                    let mut q = head.clone() * head.clone();
                    for t in &block[1..] {
                        q -= t.clone() * t.clone();
                    }
                    match (sign(&q), sign(head)) {
                        (1, 1) => ConeLocation::Interior,
                        (0, 0) | (0, 1) => ConeLocation::Boundary,
                        _ => ConeLocation::Outside,
                    }
                }
            };
            match here {
                ConeLocation::Outside => return Ok(ConeLocation::Outside),
                ConeLocation::Boundary => verdict = ConeLocation::Boundary,
                ConeLocation::Interior => {}
            }
            offset += atom.dim();
        }
        Ok(verdict)
    }

    /// Basis of `g(Ω)`: per-atom blocks embedded block-diagonally.
    ///
    /// Orthant atoms contribute the diagonal matrix units; a Lorentz atom of
    /// size `K` contributes the identity on its block, the boosts
    /// `E₁ⱼ + Eⱼ₁`, and the rotations `Eᵢⱼ − Eⱼᵢ` of the spatial slots.
    pub fn automorphism_algebra_basis(&self) -> ConeAlgebraBasis {
        let k = self.dim();
        let unit = |r: usize, c: usize| {
            let mut m = RationalMatrix::zeros(k, k);
            *m.at_mut(r, c) = Rational::one();
            m
        };
        let mut basis = Vec::new();
        let mut offset = 0;
        for atom in &self.atoms {
            let d = atom.dim();
            match atom {
                ConeAtom::Orthant(_) => {
                    for i in 0..d {
                        basis.push(unit(offset + i, offset + i));
                    }
                }
                ConeAtom::Lorentz(_) => {
                    let mut block_id = RationalMatrix::zeros(k, k);
                    for i in 0..d {
                        *block_id.at_mut(offset + i, offset + i) = Rational::one();
                    }
                    basis.push(block_id);
                    for j in 1..d {
                        basis.push(unit(offset, offset + j).add(&unit(offset + j, offset)));
                    }
                    for i in 1..d {
                        for j in i + 1..d {
                            basis.push(
                                unit(offset + i, offset + j).sub(&unit(offset + j, offset + i)),
                            );
                        }
                    }
                }
            }
            offset += d;
        }
        ConeAlgebraBasis {
            cone: self.clone(),
            basis,
        }
    }

    /// A fixed interior point: all-ones on orthant blocks, the first unit
    /// vector on Lorentz blocks.
    pub fn canonical_interior_point(&self) -> Vec<Rational> {
        let mut x = Vec::with_capacity(self.dim());
        for atom in &self.atoms {
            match atom {
                ConeAtom::Orthant(d) => x.extend(vec![Rational::one(); *d]),
                ConeAtom::Lorentz(d) => {
                    x.push(Rational::one());
                    x.extend(vec![Rational::zero(); d - 1]);
                }
            }
        }
        x
    }

    /// A pseudorandom interior point.
    pub fn sample_interior_point(&self, rng: &mut impl Rng) -> Vec<Rational> {
        let mut x = Vec::with_capacity(self.dim());
        for atom in &self.atoms {
            match atom {
                ConeAtom::Orthant(d) => {
                    for _ in 0..*d {
                        x.push(rat(rng.gen_range(1..=8), rng.gen_range(1..=4)));
                    }
                }
                ConeAtom::Lorentz(d) => {
                    let tail: Vec<Rational> = (1..*d)
                        .map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
                        .collect();
                    // x₁ = 1 + Σ|tⱼ| dominates the Euclidean norm of the tail.
                    let mut head = Rational::one();
                    for t in &tail {
                        head += if t < &Rational::zero() {
                            -t.clone()
                        } else {
                            t.clone()
                        };
                    }
                    x.push(head);
                    x.extend(tail);
                }
            }
        }
        debug_assert_eq!(self.contains(&x).unwrap(), ConeLocation::Interior);
        x
    }

    /// Canonical interior point followed by `samples` seeded pseudorandom ones.
    pub fn default_base_points(&self, samples: usize, seed: u64) -> Vec<Vec<Rational>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pts = vec![self.canonical_interior_point()];
        for _ in 0..samples {
            pts.push(self.sample_interior_point(&mut rng));
        }
        pts
    }

    /// Canonical basis of the annihilator of `g(Ω)` inside the dual of
    /// `gl_k(ℝ)`: row vectors `f` of length `k²` with `⟨vec A, f⟩ = 0` for
    /// every `A ∈ g(Ω)`. A matrix lies in `span g(Ω)` iff it pairs to zero
    /// with every row.
    pub fn membership_annihilator(&self) -> Vec<Vec<Rational>> {
        let alg = self.automorphism_algebra_basis();
        let rows: Vec<Vec<Rational>> = alg.basis.iter().map(Matrix::to_vec).collect();
        Matrix::from_rows(rows).kernel_basis()
    }
}

/// A cone together with a basis of its automorphism algebra `g(Ω)`.
#[derive(Debug, Clone)]
pub struct ConeAlgebraBasis {
    pub cone: ConeSpec,
    pub basis: Vec<RationalMatrix>,
}

impl ConeAlgebraBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Exact value of the bound `k²/2 − k/2 + 1` on `dim g(Ω)`.
pub fn dimension_bound(k: usize) -> Rational {
    let k = rat_int(k as i64);
    (k.clone() * k.clone() - k) / rat_int(2) + Rational::one()
}

/// Outcome of sample-based transitivity certification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitivityVerdict {
    /// `span{A·x : A ∈ h} = ℝᵏ` at every supplied interior point. The
    /// certificate is sample-based: full span everywhere implies the
    /// connected group acts transitively, and the span can only drop on a
    /// proper algebraic subset.
    TransitiveCertified,
    /// The span was deficient at every supplied point.
    NotTransitive,
    /// Mixed results across the sample points.
    Inconclusive,
}

impl TransitivityVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            TransitivityVerdict::TransitiveCertified => "transitive-certified",
            TransitivityVerdict::NotTransitive => "not-transitive",
            TransitivityVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// Result of [`infinitesimal_transitivity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitivityReport {
    pub verdict: TransitivityVerdict,
    /// Rank of `span{A·x : A ∈ h}` at each supplied point, in order.
    pub ranks: Vec<usize>,
    /// Ambient dimension required for a full span.
    pub ambient_dim: usize,
}

/// Check, at each supplied interior point `x`, whether the orbit map of the
/// subalgebra `h ⊆ gl_k(ℝ)` has full rank, i.e. `span{A·x : A ∈ h} = ℝᵏ`.
pub fn infinitesimal_transitivity(
    h: &[RationalMatrix],
    cone: &ConeSpec,
    base_points: &[Vec<Rational>],
) -> Result<TransitivityReport> {
    let k = cone.dim();
    let mut ranks = Vec::with_capacity(base_points.len());
    for x in base_points {
        if cone.contains(x)? != ConeLocation::Interior {
            return Err(Error::InvalidPoint(format!(
                "base point {x:?} is not interior to the cone"
            )));
        }
        let rank = if h.is_empty() {
            0
        } else {
            let rows: Vec<Vec<Rational>> = h.iter().map(|a| a.mat_vec(x)).collect();
            Matrix::from_rows(rows).rank()
        };
        ranks.push(rank);
    }
    let full = ranks.iter().filter(|&&r| r == k).count();
    let verdict = if ranks.is_empty() {
        TransitivityVerdict::Inconclusive
    } else if full == ranks.len() {
        TransitivityVerdict::TransitiveCertified
    } else if full == 0 {
        TransitivityVerdict::NotTransitive
    } else {
        TransitivityVerdict::Inconclusive
    };
    Ok(TransitivityReport {
        verdict,
        ranks,
        ambient_dim: k,
    })
}

/// Canonical basis of the span of a set of `k×k` matrices (used to compare
/// computed stabilizer algebras against displayed families).
pub fn matrix_span_basis(mats: &[RationalMatrix]) -> Vec<Vec<Rational>> {
    row_space_basis(&mats.iter().map(Matrix::to_vec).collect::<Vec<_>>())
}
