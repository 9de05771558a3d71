//! Seeded random elements, places, adèles and idèles, used by the
//! self-checks, the benchmarks and the test suites.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::adele::FiniteAdele;
use crate::classgroup::ClassGroupField;
use crate::domains::{integers, FunctionField, GlobalField, Place, Poly, QuadInt, QuadraticField, Rationals};
use crate::idele::{self, FiniteIdele};
use crate::local::{LocalElement, Precision};

pub trait Sample: ClassGroupField {
    /// Finite places over the rational primes below `bound`; for `F_q(t)`,
    /// the places of degree at most `bound`.
    fn places_below(&self, bound: u64) -> Vec<Self::Prime>;

    /// A random element of `R` of size roughly `size` (bits, or degree).
    fn random_ring<R: Rng + ?Sized>(&self, rng: &mut R, size: u32) -> Self::Ring;

    /// A random nonzero element of `R`.
    fn random_nonzero_ring<R: Rng + ?Sized>(&self, rng: &mut R, size: u32) -> Self::Ring {
        loop {
            let r = self.random_ring(rng, size);
            if !self.ring_is_zero(&r) {
                return r;
            }
        }
    }

    /// A random element `r/s` of `K`.
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R, size: u32) -> Self::Elem {
        let r = self.ring_to_field(&self.random_ring(rng, size));
        let s = self.ring_to_field(&self.random_nonzero_ring(rng, size));
        self.div(&r, &s).unwrap()
    }

    fn random_nonzero_elem<R: Rng + ?Sized>(&self, rng: &mut R, size: u32) -> Self::Elem {
        loop {
            let x = self.random_elem(rng, size);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }
}

fn random_int<R: Rng + ?Sized>(rng: &mut R, bits: u32) -> BigInt {
    let bound = 1i64 << bits.min(62);
    BigInt::from(rng.gen_range(-bound..=bound))
}

impl Sample for Rationals {
    fn places_below(&self, bound: u64) -> Vec<u64> {
        (2..bound).filter(|&p| integers::is_prime(p)).collect()
    }

    fn random_ring<R: Rng + ?Sized>(&self, rng: &mut R, size: u32) -> BigInt {
        random_int(rng, size)
    }
}

impl Sample for QuadraticField {
    fn places_below(&self, bound: u64) -> Vec<Self::Prime> {
        (2..bound)
            .filter(|&p| integers::is_prime(p))
            .flat_map(|p| self.primes_above(&p).expect("p is prime"))
            .collect()
    }

    fn random_ring<R: Rng + ?Sized>(&self, rng: &mut R, size: u32) -> QuadInt {
        QuadInt { a: random_int(rng, size), b: random_int(rng, size) }
    }
}

impl Sample for FunctionField {
    fn places_below(&self, bound: u64) -> Vec<Poly> {
        let q = self.constants().order();
        let mut out = Vec::new();
        for d in 1..=bound as u32 {
            let count = (q as u64).pow(d);
            for n in 0..count {
                let mut coeffs = Vec::with_capacity(d as usize + 1);
                let mut m = n;
                for _ in 0..d {
                    coeffs.push((m % q as u64) as u32);
                    m /= q as u64;
                }
                coeffs.push(1);
                let p = Poly::new(coeffs);
                if self.polys().is_irreducible(&p) {
                    out.push(p);
                }
            }
        }
        out.sort();
        out
    }

    fn random_ring<R: Rng + ?Sized>(&self, rng: &mut R, size: u32) -> Poly {
        let q = self.constants().order();
        let deg = rng.gen_range(0..=size);
        Poly::new((0..=deg).map(|_| rng.gen_range(0..q)).collect())
    }
}

/// A sparse exponent map over `places` with at most `support` entries in
/// `[-max, max]`.
pub fn random_exponents<F: GlobalField, R: Rng + ?Sized>(
    places: &[F::Prime],
    rng: &mut R,
    support: usize,
    max: i64,
) -> BTreeMap<F::Prime, i64> {
    let n = rng.gen_range(0..=support.min(places.len()));
    places
        .choose_multiple(rng, n)
        .map(|p| (p.clone(), rng.gen_range(-max..=max)))
        .filter(|(_, e)| *e != 0)
        .collect()
}

/// A finite adèle with a random tail and a few exact exceptional components.
pub fn random_finite_adele<F: Sample, R: Rng + ?Sized>(
    field: &F,
    places: &[F::Prime],
    rng: &mut R,
    size: u32,
) -> FiniteAdele<F> {
    let tail = field.random_elem(rng, size);
    let n = rng.gen_range(0..=3.min(places.len()));
    let comps: Vec<_> = places
        .choose_multiple(rng, n)
        .map(|p| {
            let x = field.random_elem(rng, size);
            (p.clone(), LocalElement::from_global(field, Place::Finite(p.clone()), x).unwrap())
        })
        .collect();
    FiniteAdele::new(field, comps, tail).unwrap()
}

/// A finite idèle with nonzero exact components, optionally at finite
/// precision beyond their valuation.
pub fn random_finite_idele<F: Sample, R: Rng + ?Sized>(
    field: &F,
    places: &[F::Prime],
    rng: &mut R,
    size: u32,
    finite_precision: bool,
) -> FiniteIdele<F> {
    let tail = field.random_nonzero_elem(rng, size);
    let n = rng.gen_range(0..=3.min(places.len()));
    let comps: Vec<_> = places
        .choose_multiple(rng, n)
        .map(|p| {
            let x = field.random_nonzero_elem(rng, size);
            let place = Place::Finite(p.clone());
            let v = crate::valuation::place_valuation(field, &place, &x).unwrap().finite().unwrap();
            let c = if finite_precision && rng.gen_bool(0.5) {
                let prec = Precision::Finite(2 * v.max(0) + 1 + rng.gen_range(0..3));
                LocalElement::with_precision(field, place, x, prec).unwrap()
            } else {
                LocalElement::from_global(field, place, x).unwrap()
            };
            (p.clone(), c)
        })
        .collect();
    idele::try_invert(&FiniteAdele::new(field, comps, tail).unwrap()).expect("nonzero components are units")
}

/// A random rational, convenient for tests over `Q`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, bits: u32) -> BigRational {
    Rationals.random_elem(rng, bits)
}
