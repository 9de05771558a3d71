//! Idèles: units of the adèle rings, stored with verified inverses.
//!
//! The valuation vector of an idèle records the additive valuation of each
//! component directly. This is the negative of the exponent appearing in the
//! multiplicative encoding, and it makes `x -> prod v^(val_v x)` the map to
//! fractional ideals.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::adele::{self, arch_close, FiniteAdele, InfiniteCoord};
use crate::classgroup::FractionalIdeal;
use crate::domains::{GlobalField, InfinitePlace, Place};
use crate::error::{Error, Result};
use crate::local::{self, LocalElement, Precision};
use crate::valuation::{self, ValueGroup};

#[derive(Clone, Debug)]
pub struct FiniteIdele<F: GlobalField> {
    value: FiniteAdele<F>,
    inverse: FiniteAdele<F>,
}

/// Sparse `v -> val_v(x_v)` with zero entries pruned.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ValuationVector<P: Ord>(BTreeMap<P, i64>);

impl<P: Ord> ValuationVector<P> {
    pub fn new(entries: impl IntoIterator<Item = (P, i64)>) -> Self {
        let mut map = BTreeMap::new();
        for (p, n) in entries {
            *map.entry(p).or_insert(0) += n;
        }
        map.retain(|_, n| *n != 0);
        ValuationVector(map)
    }

    pub fn get(&self, p: &P) -> i64 {
        self.0.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&P, &i64)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_map(&self) -> &BTreeMap<P, i64> {
        &self.0
    }

    pub fn into_map(self) -> BTreeMap<P, i64> {
        self.0
    }
}

fn invert_component<F: GlobalField>(field: &F, c: &LocalElement<F>) -> Result<LocalElement<F>> {
    match local::local_valuation(field, c)? {
        ValueGroup::Infinity => Err(Error::NotAUnit),
        ValueGroup::Finite(_) => local::inv(field, c).map_err(|e| match e {
            Error::NotInvertible => Error::NotAUnit,
            e => e,
        }),
    }
}

/// The paired inverse of `x`, if `x` is a unit of the finite adèle ring.
pub fn try_invert<F: GlobalField>(x: &FiniteAdele<F>) -> Result<FiniteIdele<F>> {
    let field = x.field();
    let tail_inv = field.inv(x.tail()).ok_or(Error::NotAUnit)?;
    let mut comps = Vec::new();
    for (p, c) in x.exceptional() {
        comps.push((p.clone(), invert_component(field, c)?));
    }
    let inverse = FiniteAdele::new(field, comps, tail_inv)?;
    let out = FiniteIdele { value: x.clone(), inverse };
    debug_assert!(out.check_unit().unwrap_or(false));
    Ok(out)
}

impl<F: GlobalField> FiniteIdele<F> {
    pub fn value(&self) -> &FiniteAdele<F> {
        &self.value
    }

    pub fn inverse_adele(&self) -> &FiniteAdele<F> {
        &self.inverse
    }

    pub fn field(&self) -> &F {
        self.value.field()
    }

    /// `value * inverse` agrees with 1 at every place, to the known precision.
    pub fn check_unit(&self) -> Result<bool> {
        let field = self.field();
        let prod = adele::mul(&self.value, &self.inverse)?;
        if !field.is_zero(&field.sub(prod.tail(), &field.one())) {
            return Ok(false);
        }
        for c in prod.exceptional().values() {
            let one = LocalElement::build(field, c.place().clone(), field.one(), Precision::Exact);
            if !local::agrees(field, c, &one)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The diagonal image of `k` in the finite idèles.
pub fn inj_units_k<F: GlobalField>(field: &F, k: &F::Elem) -> Result<FiniteIdele<F>> {
    let inv = field.inv(k).ok_or(Error::ZeroElement)?;
    Ok(FiniteIdele { value: adele::inj_k(field, k), inverse: adele::inj_k(field, &inv) })
}

pub fn identity<F: GlobalField>(field: &F) -> FiniteIdele<F> {
    inj_units_k(field, &field.one()).expect("1 is a unit")
}

pub fn mul<F: GlobalField>(x: &FiniteIdele<F>, y: &FiniteIdele<F>) -> Result<FiniteIdele<F>> {
    Ok(FiniteIdele { value: adele::mul(&x.value, &y.value)?, inverse: adele::mul(&x.inverse, &y.inverse)? })
}

pub fn inverse<F: GlobalField>(x: &FiniteIdele<F>) -> FiniteIdele<F> {
    FiniteIdele { value: x.inverse.clone(), inverse: x.value.clone() }
}

pub fn finite_idele_eq<F: GlobalField>(x: &FiniteIdele<F>, y: &FiniteIdele<F>) -> Result<bool> {
    adele::adele_eq(&x.value, &y.value)
}

pub fn to_add_valuations<F: GlobalField>(x: &FiniteIdele<F>) -> Result<ValuationVector<F::Prime>> {
    let field = x.field();
    let mut entries = Vec::new();
    for (p, c) in x.value.exceptional() {
        let v = local::local_valuation(field, c)?.finite().ok_or(Error::NotAUnit)?;
        entries.push((p.clone(), v));
    }
    for (p, v) in valuation::valuation_support(field, x.value.tail())? {
        if !x.value.exceptional().contains_key(&p) {
            entries.push((p, v));
        }
    }
    Ok(ValuationVector::new(entries))
}

/// `x -> prod_v v^(val_v x_v)`.
pub fn map_to_fractional_ideals<F: GlobalField>(x: &FiniteIdele<F>) -> Result<FractionalIdeal<F>> {
    Ok(FractionalIdeal::from_exponents(x.field(), to_add_valuations(x)?.into_map()))
}

/// The idèle `(pi_v^(e_v))_v` with tail 1: a preimage of `I = prod v^(e_v)`.
pub fn preimage_idele<F: GlobalField>(i: &FractionalIdeal<F>) -> Result<FiniteIdele<F>> {
    let field = i.field();
    let mut value = Vec::new();
    let mut inverse = Vec::new();
    for (p, &e) in i.exponents() {
        let place = Place::Finite(p.clone());
        let pi = valuation::uniformizer(field, &place)?;
        let pe = field.pow(&pi, e).expect("uniformizers are nonzero");
        let pe_inv = field.inv(&pe).unwrap();
        value.push((p.clone(), LocalElement::from_global(field, place.clone(), pe)?));
        inverse.push((p.clone(), LocalElement::from_global(field, place, pe_inv)?));
    }
    Ok(FiniteIdele {
        value: FiniteAdele::new(field, value, field.one())?,
        inverse: FiniteAdele::new(field, inverse, field.one())?,
    })
}

/// A unit of the full adèle ring.
#[derive(Clone, Debug)]
pub struct Idele<F: GlobalField> {
    finite: FiniteIdele<F>,
    infinite: Vec<InfiniteCoord<F>>,
}

fn coord_is_unit<F: GlobalField>(field: &F, c: &InfiniteCoord<F>) -> Result<bool> {
    Ok(match c {
        InfiniteCoord::Real(a) => *a != 0.0 && a.is_finite(),
        InfiniteCoord::Complex(z) => z.norm() != 0.0 && z.is_finite(),
        InfiniteCoord::NonArch(x) => !local::local_valuation(field, x)?.is_infinite(),
    })
}

fn invert_coord<F: GlobalField>(field: &F, c: &InfiniteCoord<F>) -> Result<InfiniteCoord<F>> {
    Ok(match c {
        InfiniteCoord::Real(a) => InfiniteCoord::Real(1.0 / a),
        InfiniteCoord::Complex(z) => InfiniteCoord::Complex(Complex64::new(1.0, 0.0) / z),
        InfiniteCoord::NonArch(x) => InfiniteCoord::NonArch(invert_component(field, x)?),
    })
}

pub fn make_idele<F: GlobalField>(finite: FiniteIdele<F>, infinite: Vec<InfiniteCoord<F>>) -> Result<Idele<F>> {
    let field = finite.field().clone();
    // validates the shape
    adele::make_adele(finite.value.clone(), infinite.clone())?;
    for c in &infinite {
        if !coord_is_unit(&field, c)? {
            return Err(Error::NotAUnit);
        }
    }
    Ok(Idele { finite, infinite })
}

/// The coordinate vector of 1 at the infinite places.
pub fn unit_coords<F: GlobalField>(field: &F) -> Vec<InfiniteCoord<F>> {
    adele::infinite_image(field, &field.one())
}

impl<F: GlobalField> Idele<F> {
    pub fn finite(&self) -> &FiniteIdele<F> {
        &self.finite
    }

    pub fn infinite(&self) -> &[InfiniteCoord<F>] {
        &self.infinite
    }

    pub fn field(&self) -> &F {
        self.finite.field()
    }

    /// The idèle with finite part `x` and all infinite coordinates 1.
    pub fn from_finite(x: FiniteIdele<F>) -> Self {
        let infinite = unit_coords(x.field());
        Idele { finite: x, infinite }
    }
}

pub fn inj_units_k_full<F: GlobalField>(field: &F, k: &F::Elem) -> Result<Idele<F>> {
    Ok(Idele { finite: inj_units_k(field, k)?, infinite: adele::infinite_image(field, k) })
}

pub fn full_identity<F: GlobalField>(field: &F) -> Idele<F> {
    Idele::from_finite(identity(field))
}

pub fn full_mul<F: GlobalField>(x: &Idele<F>, y: &Idele<F>) -> Result<Idele<F>> {
    let finite = mul(&x.finite, &y.finite)?;
    let prod = adele::full_mul(
        &adele::make_adele(x.finite.value.clone(), x.infinite.clone())?,
        &adele::make_adele(y.finite.value.clone(), y.infinite.clone())?,
    )?;
    Ok(Idele { finite, infinite: prod.infinite().to_vec() })
}

pub fn full_inverse<F: GlobalField>(x: &Idele<F>) -> Result<Idele<F>> {
    let field = x.field();
    let infinite = x.infinite.iter().map(|c| invert_coord(field, c)).collect::<Result<_>>()?;
    Ok(Idele { finite: inverse(&x.finite), infinite })
}

/// Membership in `I_{K,inf}`: every finite component has valuation zero.
pub fn is_in_kernel<F: GlobalField>(x: &Idele<F>) -> Result<bool> {
    Ok(to_add_valuations(&x.finite)?.is_empty())
}

pub fn project_to_finite<F: GlobalField>(x: &Idele<F>) -> FiniteIdele<F> {
    x.finite.clone()
}

/// Whether every infinite coordinate equals 1: within tolerance at the
/// archimedean places, exactly at the infinity of `F_q(t)`.
pub(crate) fn infinite_part_is_one<F: GlobalField>(x: &Idele<F>) -> Result<bool> {
    let field = x.field();
    for c in &x.infinite {
        let ok = match c {
            InfiniteCoord::Real(a) => arch_close((*a).into(), 1.0.into()),
            InfiniteCoord::Complex(z) => arch_close(*z, 1.0.into()),
            InfiniteCoord::NonArch(y) => {
                let one = LocalElement::build(field, Place::Infinite(InfinitePlace::FunctionFieldInfinity), field.one(), Precision::Exact);
                local::coset_eq(field, y, &one)?
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
