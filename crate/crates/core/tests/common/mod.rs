//! Shared helpers for the integration suites: the catalog spec list and a
//! seeded generator of random valid domain specs.
#![allow(dead_code)] // each test binary uses a different subset

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use siegel_core::catalog::{named_domain, product_domain, tube_domain, NamedDomain};
use siegel_core::cone::ConeSpec;
use siegel_core::graded::SiegelDomainSpec;
use siegel_core::hermitian::HermitianTuple;
use siegel_core::scalar::{rat, rat_int};
use siegel_core::{GaussianMatrix, GaussianRational, Rational};

pub fn qv(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat_int(x)).collect()
}

fn ball(n: i64) -> NamedDomain {
    let mut d = named_domain("ball", &[rat_int(n)]).expect("ball");
    d.name = format!("B{n}");
    d
}

fn prod(name: &str, fs: &[NamedDomain]) -> NamedDomain {
    let mut d = product_domain(fs).expect("product");
    d.name = name.to_string();
    d
}

/// Every domain exercised by the verification table, by name.
pub fn catalog_specs() -> Vec<(String, SiegelDomainSpec)> {
    let t3 = {
        let mut d = named_domain("T3", &[]).unwrap();
        d.name = "T3".into();
        d
    };
    let omega5 =
        ConeSpec::product(vec![ConeSpec::lorentz(3).unwrap(), ConeSpec::half_line()]).unwrap();
    let mut out: Vec<NamedDomain> = vec![
        ball(1),
        ball(2),
        ball(3),
        ball(4),
        ball(5),
        ball(6),
        prod("B2xB1", &[ball(2), ball(1)]),
        prod("B3xB1", &[ball(3), ball(1)]),
        prod("B4xB1", &[ball(4), ball(1)]),
        prod("B1xB1xB1", &[ball(1), ball(1), ball(1)]),
        prod("B2xB2", &[ball(2), ball(2)]),
        prod("B2xB1xB1", &[ball(2), ball(1), ball(1)]),
        prod("B3xB2", &[ball(3), ball(2)]),
        t3.clone(),
        named_domain("T4", &[]).unwrap(),
        prod("B1xT3", &[ball(1), t3]),
        tube_domain(omega5).unwrap(),
        named_domain("D1", &[rat_int(4)]).unwrap(),
        named_domain("D2", &[rat_int(4)]).unwrap(),
        named_domain("D3", &qv(&[1, 1, 0, 1])).unwrap(),
        named_domain("D4", &qv(&[1, 1, 0, 1])).unwrap(),
        named_domain("D5", &qv(&[1, 1, 1])).unwrap(),
        named_domain("D6", &qv(&[1, 1, 0])).unwrap(),
        named_domain("D7", &[]).unwrap(),
        named_domain("D8", &[]).unwrap(),
    ];
    out.drain(..).map(|d| (d.name.clone(), d.spec)).collect()
}

fn random_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    GaussianRational::new(
        rat(rng.gen_range(-2..=2), rng.gen_range(1..=2)),
        rat(rng.gen_range(-2..=2), rng.gen_range(1..=2)),
    )
}

/// Random positive semidefinite matrix `R†R` (positive definite after adding
/// the identity).
fn random_psd(rng: &mut ChaCha8Rng, m: usize, ensure_definite: bool) -> GaussianMatrix {
    let r = GaussianMatrix::from_fn(m, m, |_, _| random_gaussian(rng));
    let mut q = r.conj_transpose().mul(&r);
    if ensure_definite {
        q = q.add(&GaussianMatrix::identity(m));
    }
    q
}

/// Deterministically generate `count` random valid specs with `k ≤ 3`,
/// `m ≤ 2` (tubes included occasionally).
pub fn random_specs(count: usize, seed: u64) -> Vec<SiegelDomainSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut specs = Vec::with_capacity(count);
    while specs.len() < count {
        let cone = match rng.gen_range(0..4) {
            0 => ConeSpec::half_line(),
            1 => ConeSpec::orthant(2),
            2 => ConeSpec::orthant(3),
            _ => ConeSpec::lorentz(3).unwrap(),
        };
        let k = cone.dim();
        let m = rng.gen_range(0..=2usize);
        let form = if m == 0 {
            HermitianTuple::tube(k)
        } else if matches!(cone.atoms()[0], siegel_core::cone::ConeAtom::Lorentz(_)) {
            // Scalar family v·Q with Q positive definite and v in the closed
            // Lorentz cone.
            let q = random_psd(&mut rng, m, true);
            let b = rat(rng.gen_range(-3..=3), 1);
            let c = rat(rng.gen_range(-3..=3), 1);
            let boundary = rng.gen_bool(0.5);
            let abs = |x: &Rational| {
                if x < &Rational::from_integer(0.into()) {
                    -x.clone()
                } else {
                    x.clone()
                }
            };
            let mut head = abs(&b) + abs(&c);
            if !boundary || head == Rational::from_integer(0.into()) {
                head += rat_int(rng.gen_range(1..=2));
            }
            HermitianTuple::scalar_family(&[head, b, c], &q).unwrap()
        } else {
            // One guaranteed-definite component, the rest random PSD (some
            // zero).
            let definite_slot = rng.gen_range(0..k);
            let comps: Vec<GaussianMatrix> = (0..k)
                .map(|j| {
                    if j == definite_slot {
                        random_psd(&mut rng, m, true)
                    } else if rng.gen_bool(0.25) {
                        GaussianMatrix::zeros(m, m)
                    } else {
                        random_psd(&mut rng, m, false)
                    }
                })
                .collect();
            HermitianTuple::new(k, m, comps).unwrap()
        };
        if let Ok(spec) = SiegelDomainSpec::new(cone, form) {
            specs.push(spec);
        }
    }
    specs
}
