//! Seeded random inputs: scalars, forms with random coefficients, regular sequences.

use rand::Rng;

use rand::seq::SliceRandom;

use crate::cox::CoxAmbient;
use crate::error::Result;
use crate::field::{FieldTower, Fq};
use crate::galois::SemilinearAction;
use crate::linalg::PolySpan;
use crate::poly::Polynomial;
use crate::ring::{Multidegree, PolyRing};

pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R, tower: &FieldTower) -> Fq {
    let digits: Vec<u64> = (0..tower.degree()).map(|_| rng.gen_range(0..tower.characteristic())).collect();
    tower.from_coeffs(&digits)
}

pub fn random_nonzero_scalar<R: Rng + ?Sized>(rng: &mut R, tower: &FieldTower) -> Fq {
    loop {
        let c = random_scalar(rng, tower);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A nonzero form of the given degree with independent random coefficients on every
/// monomial, or `None` if the class is not effective.
pub fn random_form<R: Rng + ?Sized>(rng: &mut R, ring: &PolyRing, degree: &Multidegree) -> Option<Polynomial> {
    let monomials = ring.monomials_of_degree(degree);
    if monomials.is_empty() {
        return None;
    }
    loop {
        let terms = monomials.iter().map(|m| (m.clone(), random_scalar(rng, ring.tower()))).collect();
        let f = Polynomial::from_terms(ring, terms);
        if !f.is_zero() {
            return Some(f);
        }
    }
}

/// Random forms of the given degrees, redrawn until they form a complete intersection.
/// Gives up after `attempts` draws.
pub fn random_regular_sequence<R: Rng + ?Sized>(
    rng: &mut R,
    amb: &CoxAmbient,
    degrees: &[Multidegree],
    attempts: usize,
) -> Result<Option<Vec<Polynomial>>> {
    let ring = amb.poly_ring();
    for _ in 0..attempts {
        let Some(fs) = degrees.iter().map(|d| random_form(rng, ring, d)).collect::<Option<Vec<_>>>() else {
            return Ok(None);
        };
        if amb.is_complete_intersection(&fs)? {
            return Ok(Some(fs));
        }
    }
    Ok(None)
}

/// Orbit generators of an `a`-invariant ideal and a scrambled generating set of the same
/// ideal, as returned by [`scrambled_orbits`].
#[derive(Clone, Debug)]
pub struct OrbitInstance {
    pub orbits: Vec<Polynomial>,
    pub scrambled: Vec<Polynomial>,
}

/// For each class `L` in `seeds`, a random form of degree `L` fixed by the stabilizer of `L`
/// together with its images `a(f), ..., a^(beta-1)(f)`. These generate an invariant ideal,
/// which is then presented by a scrambled generating set: an invertible mix inside each
/// degree, multiples of lower-degree generators added, random scalars, shuffled order.
pub fn scrambled_orbits<R: Rng + ?Sized>(
    rng: &mut R,
    a: &SemilinearAction,
    seeds: &[Multidegree],
) -> Option<OrbitInstance> {
    let ring = a.ring().poly_ring();
    let tower = ring.tower();
    let mut orbits = Vec::new();
    for seed in seeds {
        let beta = (1..=a.order()).find(|&k| a.map_degree(seed, k).as_ref() == Some(seed))?;
        let f = loop {
            let f = random_form(rng, ring, seed)?;
            // trace over the stabilizer
            let mut trace = Polynomial::zero(ring);
            for k in 0..a.order() / beta {
                trace = &trace + &a.apply(&f, k * beta).ok()?;
            }
            if !trace.is_zero() {
                break trace;
            }
        };
        for i in 0..beta {
            orbits.push(a.apply(&f, i).ok()?);
        }
    }

    let degrees: Vec<Multidegree> = orbits.iter().map(|f| f.multidegree().ok()).collect::<Option<_>>()?;
    let mut scrambled = Vec::new();
    let mut classes: Vec<&Multidegree> = degrees.iter().collect();
    classes.sort();
    classes.dedup();
    for class in classes {
        let same: Vec<&Polynomial> = orbits.iter().zip(&degrees).filter(|(_, d)| *d == class).map(|(f, _)| f).collect();
        let mixed = loop {
            let mixed: Vec<Polynomial> = (0..same.len())
                .map(|_| same.iter().fold(Polynomial::zero(ring), |acc, f| &acc + &f.scale(random_scalar(rng, tower))))
                .collect();
            if PolySpan::from_polys(ring, &mixed).dim() == same.len() {
                break mixed;
            }
        };
        for mut g in mixed {
            for (f, d) in orbits.iter().zip(&degrees) {
                if d != class && rng.gen_bool(0.7) {
                    if let Some(h) = random_form(rng, ring, &(class - d)) {
                        g = &g + &(&h * f);
                    }
                }
            }
            scrambled.push(g.scale(random_nonzero_scalar(rng, tower)));
        }
    }
    scrambled.shuffle(rng);
    Some(OrbitInstance { orbits, scrambled })
}
