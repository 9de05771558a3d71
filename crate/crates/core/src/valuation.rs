//! Additive discrete valuations with values in `Z ∪ {+inf}`.
//!
//! The multiplicative absolute value `|x|_v = n_v^(-val_v(x))` is only a
//! presentation detail: see [`ValueGroup::absolute_value`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::domains::{FunctionField, GlobalField, InfinitePlace, Place, RatFn};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueGroup {
    Finite(i64),
    Infinity,
}

impl ValueGroup {
    pub fn finite(self) -> Option<i64> {
        match self {
            ValueGroup::Finite(n) => Some(n),
            ValueGroup::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ValueGroup::Infinity
    }

    /// `base^(-val)`, zero for `Infinity`.
    pub fn absolute_value(self, base: f64) -> f64 {
        match self {
            ValueGroup::Finite(n) => base.powf(-(n as f64)),
            ValueGroup::Infinity => 0.0,
        }
    }
}

impl Ord for ValueGroup {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ValueGroup::Finite(a), ValueGroup::Finite(b)) => a.cmp(b),
            (ValueGroup::Finite(_), ValueGroup::Infinity) => Ordering::Less,
            (ValueGroup::Infinity, ValueGroup::Finite(_)) => Ordering::Greater,
            (ValueGroup::Infinity, ValueGroup::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ValueGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for ValueGroup {
    type Output = ValueGroup;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (ValueGroup::Finite(a), ValueGroup::Finite(b)) => ValueGroup::Finite(a + b),
            _ => ValueGroup::Infinity,
        }
    }
}

impl Add<i64> for ValueGroup {
    type Output = ValueGroup;

    fn add(self, rhs: i64) -> Self {
        self + ValueGroup::Finite(rhs)
    }
}

impl Neg for ValueGroup {
    type Output = ValueGroup;

    /// Only meaningful on finite values; `-inf` has no representative.
    fn neg(self) -> Self {
        match self {
            ValueGroup::Finite(a) => ValueGroup::Finite(-a),
            ValueGroup::Infinity => panic!("negating an infinite valuation"),
        }
    }
}

impl Sub for ValueGroup {
    type Output = ValueGroup;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl fmt::Display for ValueGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueGroup::Finite(n) => write!(f, "{n}"),
            ValueGroup::Infinity => write!(f, "inf"),
        }
    }
}

/// `val_v` on the ring of integers.
pub fn int_valuation<F: GlobalField>(field: &F, v: &F::Prime, r: &F::Ring) -> Result<ValueGroup> {
    field.check_prime(v)?;
    Ok(field.int_valuation(v, r))
}

/// `val_v(r/s) = val_v(r) - val_v(s)`; the result does not depend on the
/// fraction chosen, so canonical numerator and denominator are used.
pub fn valuation<F: GlobalField>(field: &F, v: &F::Prime, x: &F::Elem) -> Result<ValueGroup> {
    field.check_prime(v)?;
    Ok(valuation_unchecked(field, v, x))
}

pub(crate) fn valuation_unchecked<F: GlobalField>(field: &F, v: &F::Prime, x: &F::Elem) -> ValueGroup {
    if field.is_zero(x) {
        return ValueGroup::Infinity;
    }
    let (num, den) = field.numerator_denominator(x);
    field.int_valuation(v, &num) - field.int_valuation(v, &den)
}

/// Valuation of `F_q(t)` at infinity: `deg(den) - deg(num)`.
pub fn infty_valuation<F: GlobalField>(field: &F, x: &F::Elem) -> Result<ValueGroup> {
    field.infinity_valuation(x)
}

/// Valuation at any nonarchimedean place.
pub fn place_valuation<F: GlobalField>(field: &F, v: &Place<F::Prime>, x: &F::Elem) -> Result<ValueGroup> {
    match v {
        Place::Finite(p) => Ok(valuation_unchecked(field, p, x)),
        Place::Infinite(InfinitePlace::FunctionFieldInfinity) => field.infinity_valuation(x),
        Place::Infinite(_) => Err(Error::ArchimedeanPlace),
    }
}

/// An element of valuation exactly one at `v`; nothing is asserted about
/// other places.
pub fn uniformizer<F: GlobalField>(field: &F, v: &Place<F::Prime>) -> Result<F::Elem> {
    match v {
        Place::Finite(p) => {
            field.check_prime(p)?;
            field
                .uniformizer_candidates(p)
                .into_iter()
                .find(|c| valuation_unchecked(field, p, c) == ValueGroup::Finite(1))
                .ok_or_else(|| Error::Unsupported(format!("no uniformizer found at {}", field.fmt_prime(p))))
        }
        Place::Infinite(InfinitePlace::FunctionFieldInfinity) => {
            let pi = field.infinity_uniformizer()?;
            debug_assert_eq!(field.infinity_valuation(&pi)?, ValueGroup::Finite(1));
            Ok(pi)
        }
        Place::Infinite(_) => Err(Error::ArchimedeanPlace),
    }
}

/// All finite places where `x` has nonzero valuation, with those valuations.
/// Empty for units of `R` and for zero.
pub fn valuation_support<F: GlobalField>(field: &F, x: &F::Elem) -> Result<BTreeMap<F::Prime, i64>> {
    let mut out = BTreeMap::new();
    if field.is_zero(x) {
        return Ok(out);
    }
    let (num, den) = field.numerator_denominator(x);
    for (p, k) in field.factor_ideal(&field.principal_ideal(&num)?)? {
        *out.entry(p).or_insert(0) += k as i64;
    }
    for (p, k) in field.factor_ideal(&field.principal_ideal(&den)?)? {
        *out.entry(p).or_insert(0) -= k as i64;
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Finite places where `x` is not integral.
pub fn pole_places<F: GlobalField>(field: &F, x: &F::Elem) -> Result<Vec<F::Prime>> {
    let (_, den) = field.numerator_denominator(x);
    let mut out: Vec<F::Prime> = field
        .factor_ideal(&field.principal_ideal(&den)?)?
        .into_keys()
        .filter(|p| valuation_unchecked(field, p, x) < ValueGroup::Finite(0))
        .collect();
    out.sort();
    Ok(out)
}

/// `sum_v deg(v) val_v(x) + val_inf(x)` over `F_q(t)`; zero for every
/// nonzero `x`.
pub fn product_formula_sum(field: &FunctionField, x: &RatFn) -> Result<i64> {
    if field.is_zero(x) {
        return Err(Error::ZeroElement);
    }
    let mut sum = 0;
    for (p, v) in valuation_support(field, x)? {
        sum += field.residue_degree(&p) as i64 * v;
    }
    let inf = field.infinity_valuation(x)?.finite().expect("nonzero");
    Ok(sum + inf)
}
