//! Exact arithmetic for the supported global fields and their rings of
//! integers: `Q` over `Z`, quadratic fields over their maximal orders, and
//! `F_q(t)` over `F_q[t]`.
//!
//! Every family implements [`GlobalField`]. Field contexts are small, cheap
//! to clone, and immutable; elements carry no reference to their field.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigUint;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::valuation::ValueGroup;

pub mod finite_field;
pub mod function_field;
pub mod integers;
pub mod poly;
pub mod quadratic;
pub mod rationals;

pub use finite_field::FiniteField;
pub use function_field::{FunctionField, RatFn};
pub use poly::Poly;
pub use quadratic::{Hnf, QuadElem, QuadInt, QuadPrime, QuadraticField, Splitting};
pub use rationals::Rationals;

/// Which field family is active.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GlobalFieldSpec {
    Rationals,
    /// `Q(sqrt d)` with `d` squarefree, `d != 0, 1`.
    Quadratic { d: i64 },
    /// `F_q(t)` with `q = p^e`.
    FunctionField { p: u32, e: u32 },
}

impl GlobalFieldSpec {
    /// Fundamental discriminant of a quadratic field.
    pub fn discriminant(&self) -> Option<i64> {
        match *self {
            GlobalFieldSpec::Quadratic { d } => Some(if d.rem_euclid(4) == 1 { d } else { 4 * d }),
            _ => None,
        }
    }
}

impl fmt::Display for GlobalFieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlobalFieldSpec::Rationals => write!(f, "Q"),
            GlobalFieldSpec::Quadratic { d } => write!(f, "Q(sqrt {d})"),
            GlobalFieldSpec::FunctionField { p, e } => write!(f, "Fq(t;q={})", p.pow(*e)),
        }
    }
}

/// Archimedean places, and the (nonarchimedean) place at infinity of `F_q(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InfinitePlace {
    Real(usize),
    /// One representative of a conjugate pair of complex embeddings.
    ComplexPair(usize),
    FunctionFieldInfinity,
}

/// A place of a global field: a maximal ideal of the ring of integers, or an
/// infinite place.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place<P> {
    Finite(P),
    Infinite(InfinitePlace),
}

impl<P> Place<P> {
    pub fn is_nonarchimedean(&self) -> bool {
        matches!(self, Place::Finite(_) | Place::Infinite(InfinitePlace::FunctionFieldInfinity))
    }

    pub fn finite(&self) -> Option<&P> {
        match self {
            Place::Finite(p) => Some(p),
            Place::Infinite(_) => None,
        }
    }
}

/// An archimedean embedding, described by the image of the integral
/// generator (`1` for `Q`, `w` for quadratic fields).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Embedding {
    pub place: InfinitePlace,
    pub generator_image: Complex64,
}

/// Tolerance for comparing archimedean coordinates.
pub const ARCH_TOLERANCE: f64 = 1e-9;

/// A global field together with its ring of integers `R`, a Dedekind domain.
pub trait GlobalField: Clone + PartialEq + fmt::Debug + Send + Sync {
    /// Elements of `R`.
    type Ring: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;
    /// Elements of `K`, in canonical form.
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;
    /// Canonical data of a maximal ideal of `R`.
    type Prime: Clone + Ord + Eq + Hash + fmt::Debug + Send + Sync;
    /// Nonzero integral ideals in canonical form.
    type Ideal: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;
    /// Primes of the base ring (`Z` or `F_q[t]`).
    type BasePrime: Clone + fmt::Debug;

    fn spec(&self) -> GlobalFieldSpec;
    /// Degree over the base field (`Q` or `F_q(t)`).
    fn degree(&self) -> u32;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|i| self.mul(a, &i))
    }

    fn pow(&self, a: &Self::Elem, n: i64) -> Option<Self::Elem> {
        let base = if n < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.one();
        let mut sq = base;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            k >>= 1;
        }
        Some(acc)
    }

    fn ring_to_field(&self, r: &Self::Ring) -> Self::Elem;
    /// A fraction `num / den` with `den` in the canonical denominator class.
    fn numerator_denominator(&self, x: &Self::Elem) -> (Self::Ring, Self::Ring);
    fn ring_is_zero(&self, r: &Self::Ring) -> bool;
    fn ring_mul(&self, a: &Self::Ring, b: &Self::Ring) -> Self::Ring;

    fn unit_ideal(&self) -> Self::Ideal;
    fn principal_ideal(&self, r: &Self::Ring) -> Result<Self::Ideal>;
    fn ideal_mul(&self, a: &Self::Ideal, b: &Self::Ideal) -> Self::Ideal;
    /// Absolute norm `|R / I|`.
    fn ideal_norm(&self, a: &Self::Ideal) -> BigUint;
    fn prime_ideal(&self, p: &Self::Prime) -> Self::Ideal;
    /// Unique factorization into maximal ideals.
    fn factor_ideal(&self, a: &Self::Ideal) -> Result<BTreeMap<Self::Prime, u32>>;

    /// Finite places above a prime of the base ring.
    fn primes_above(&self, p: &Self::BasePrime) -> Result<Vec<Self::Prime>>;
    /// The prime of the base ring a place lies over.
    fn prime_below(&self, p: &Self::Prime) -> Self::BasePrime;
    fn ramification_index(&self, p: &Self::Prime) -> u32;
    fn residue_degree(&self, p: &Self::Prime) -> u32;
    /// Size of the residue field `R / v`, the default display base.
    fn residue_field_size(&self, p: &Self::Prime) -> BigUint;
    /// Rejects prime data that is not a maximal ideal of this field's ring.
    fn check_prime(&self, p: &Self::Prime) -> Result<()>;

    /// Additive `v`-adic valuation on `R`.
    fn int_valuation(&self, p: &Self::Prime, r: &Self::Ring) -> ValueGroup;
    /// Witness of valuation one at `v` (checked by the valuation layer).
    fn uniformizer_candidates(&self, p: &Self::Prime) -> Vec<Self::Elem>;
    /// An element of `R` lying under `v` with valuation `e_v` there and no
    /// poles anywhere; used to clear denominators.
    fn clearing_element(&self, p: &Self::Prime) -> Self::Ring;
    /// A fixed lift of the residue of `x` modulo `v`; requires `v(x) >= 0`.
    fn residue_lift(&self, p: &Self::Prime, x: &Self::Elem) -> Self::Elem;

    /// The valuation at the place at infinity of `F_q(t)`.
    fn infinity_valuation(&self, _x: &Self::Elem) -> Result<ValueGroup> {
        Err(Error::WrongFamily("function fields"))
    }
    fn infinity_uniformizer(&self) -> Result<Self::Elem> {
        Err(Error::WrongFamily("function fields"))
    }
    fn infinity_residue_lift(&self, _x: &Self::Elem) -> Result<Self::Elem> {
        Err(Error::WrongFamily("function fields"))
    }

    /// Infinite places in coordinate order.
    fn infinite_places(&self) -> Vec<InfinitePlace>;
    /// Archimedean embeddings; unsupported for function fields.
    fn embeddings(&self) -> Result<Vec<Embedding>>;
    /// Images of `x` under [`GlobalField::embeddings`].
    fn embed(&self, x: &Self::Elem) -> Result<Vec<Complex64>>;

    fn fmt_elem(&self, x: &Self::Elem) -> String;
    fn fmt_ring(&self, r: &Self::Ring) -> String {
        self.fmt_elem(&self.ring_to_field(r))
    }
    fn fmt_prime(&self, p: &Self::Prime) -> String;
    fn fmt_ideal(&self, a: &Self::Ideal) -> String;

    fn fmt_place(&self, v: &Place<Self::Prime>) -> String {
        match v {
            Place::Finite(p) => self.fmt_prime(p),
            Place::Infinite(InfinitePlace::FunctionFieldInfinity) => "inf".into(),
            Place::Infinite(InfinitePlace::Real(i)) => format!("real{i}"),
            Place::Infinite(InfinitePlace::ComplexPair(i)) => format!("complex{i}"),
        }
    }

    /// Multiplies out `prod v^n_v`.
    fn ideal_from_factors(&self, factors: &BTreeMap<Self::Prime, u32>) -> Self::Ideal {
        let mut acc = self.unit_ideal();
        for (p, &n) in factors {
            let pi = self.prime_ideal(p);
            for _ in 0..n {
                acc = self.ideal_mul(&acc, &pi);
            }
        }
        acc
    }
}

/// Evaluates `a + b z` for an embedding image `z`.
pub(crate) fn embed_affine(a: f64, b: f64, z: Complex64) -> Complex64 {
    Complex64::new(a, 0.0) + z * b
}
