use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::integers;
use super::{Embedding, GlobalField, GlobalFieldSpec, InfinitePlace};
use crate::error::{Error, Result};
use crate::valuation::ValueGroup;

/// `Q` with ring of integers `Z`. Ideals are stored by their positive generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl GlobalField for Rationals {
    type Ring = BigInt;
    type Elem = BigRational;
    type Prime = u64;
    type Ideal = BigInt;
    type BasePrime = u64;

    fn spec(&self) -> GlobalFieldSpec {
        GlobalFieldSpec::Rationals
    }

    fn degree(&self) -> u32 {
        1
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn ring_to_field(&self, r: &BigInt) -> BigRational {
        BigRational::from_integer(r.clone())
    }

    fn numerator_denominator(&self, x: &BigRational) -> (BigInt, BigInt) {
        (x.numer().clone(), x.denom().clone())
    }

    fn ring_is_zero(&self, r: &BigInt) -> bool {
        r.is_zero()
    }

    fn ring_mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn unit_ideal(&self) -> BigInt {
        BigInt::one()
    }

    fn principal_ideal(&self, r: &BigInt) -> Result<BigInt> {
        if r.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(r.abs())
    }

    fn ideal_mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn ideal_norm(&self, a: &BigInt) -> BigUint {
        integers::biguint_of(a)
    }

    fn prime_ideal(&self, p: &u64) -> BigInt {
        BigInt::from(*p)
    }

    fn factor_ideal(&self, a: &BigInt) -> Result<BTreeMap<u64, u32>> {
        integers::factor(a)
    }

    fn primes_above(&self, p: &u64) -> Result<Vec<u64>> {
        self.check_prime(p)?;
        Ok(vec![*p])
    }

    fn prime_below(&self, p: &u64) -> u64 {
        *p
    }

    fn ramification_index(&self, _p: &u64) -> u32 {
        1
    }

    fn residue_degree(&self, _p: &u64) -> u32 {
        1
    }

    fn residue_field_size(&self, p: &u64) -> BigUint {
        BigUint::from(*p)
    }

    fn check_prime(&self, p: &u64) -> Result<()> {
        if integers::is_prime(*p) {
            Ok(())
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    fn int_valuation(&self, p: &u64, r: &BigInt) -> ValueGroup {
        match integers::p_adic_order(r, *p) {
            None => ValueGroup::Infinity,
            Some(k) => ValueGroup::Finite(k as i64),
        }
    }

    fn uniformizer_candidates(&self, p: &u64) -> Vec<BigRational> {
        vec![BigRational::from_integer((*p).into())]
    }

    fn clearing_element(&self, p: &u64) -> BigInt {
        BigInt::from(*p)
    }

    fn residue_lift(&self, p: &u64, x: &BigRational) -> BigRational {
        let m = BigInt::from(*p);
        let inv = integers::inv_mod_big(x.denom(), &m).expect("denominator prime to p");
        BigRational::from_integer(integers::mod_floor_big(&(x.numer() * inv), &m))
    }

    fn infinite_places(&self) -> Vec<InfinitePlace> {
        vec![InfinitePlace::Real(0)]
    }

    fn embeddings(&self) -> Result<Vec<Embedding>> {
        Ok(vec![Embedding { place: InfinitePlace::Real(0), generator_image: Complex64::new(1.0, 0.0) }])
    }

    fn embed(&self, x: &BigRational) -> Result<Vec<Complex64>> {
        Ok(vec![Complex64::new(x.to_f64().unwrap_or(f64::NAN), 0.0)])
    }

    fn fmt_elem(&self, x: &BigRational) -> String {
        x.to_string()
    }

    fn fmt_prime(&self, p: &u64) -> String {
        p.to_string()
    }

    fn fmt_ideal(&self, a: &BigInt) -> String {
        format!("({a})")
    }
}
