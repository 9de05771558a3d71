//! Finite adèles as finitely described restricted products, their
//! localization presentation, and full adèles with archimedean coordinates.
//!
//! A [`FiniteAdele`] is a global `tail` together with finitely many
//! exceptional local components. The component at `v` is the exceptional
//! entry if there is one and the image of the tail otherwise; every pole of
//! the tail is exceptional, so all remaining components lie in `R_v`.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

use crate::domains::{GlobalField, InfinitePlace, Place, ARCH_TOLERANCE};
use crate::error::{Error, Result};
use crate::local::{self, LocalElement, Precision};
use crate::valuation::{self, ValueGroup};

#[derive(Clone, Debug)]
pub struct FiniteAdele<F: GlobalField> {
    field: F,
    exceptional: BTreeMap<F::Prime, LocalElement<F>>,
    tail: F::Elem,
}

fn same_field<F: GlobalField>(a: &F, b: &F) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::SpecMismatch)
    }
}

impl<F: GlobalField> FiniteAdele<F> {
    /// Builds an adèle from exceptional components and a tail. Poles of the
    /// tail missing from `exceptional` take the tail's own image there.
    pub fn new(
        field: &F,
        exceptional: impl IntoIterator<Item = (F::Prime, LocalElement<F>)>,
        tail: F::Elem,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, x) in exceptional {
            if x.place() != &Place::Finite(p.clone()) {
                return Err(Error::PlaceMismatch(field.fmt_prime(&p)));
            }
            map.insert(p, x);
        }
        Self::assemble(field, map, tail)
    }

    fn assemble(field: &F, exceptional: BTreeMap<F::Prime, LocalElement<F>>, tail: F::Elem) -> Result<Self> {
        let mut out = FiniteAdele { field: field.clone(), exceptional, tail };
        out.normalize()?;
        debug_assert!(out.satisfies_invariant());
        Ok(out)
    }

    fn normalize(&mut self) -> Result<()> {
        for p in valuation::pole_places(&self.field, &self.tail)? {
            self.exceptional
                .entry(p.clone())
                .or_insert_with(|| LocalElement::build(&self.field, Place::Finite(p), self.tail.clone(), Precision::Exact));
        }
        let field = &self.field;
        let tail = &self.tail;
        self.exceptional.retain(|p, x| {
            !(x.is_exact()
                && x.approx() == tail
                && valuation::valuation_unchecked(field, p, tail) >= ValueGroup::Finite(0))
        });
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn tail(&self) -> &F::Elem {
        &self.tail
    }

    pub fn exceptional(&self) -> &BTreeMap<F::Prime, LocalElement<F>> {
        &self.exceptional
    }

    /// The component in `K_v`.
    pub fn component(&self, v: &F::Prime) -> LocalElement<F> {
        self.exceptional.get(v).cloned().unwrap_or_else(|| {
            LocalElement::build(&self.field, Place::Finite(v.clone()), self.tail.clone(), Precision::Exact)
        })
    }

    /// Every pole of the tail is exceptional.
    pub fn satisfies_invariant(&self) -> bool {
        valuation::pole_places(&self.field, &self.tail)
            .map(|ps| ps.iter().all(|p| self.exceptional.contains_key(p)))
            .unwrap_or(false)
    }

    fn zip_with(
        &self,
        other: &Self,
        tail: F::Elem,
        op: impl Fn(&F, &LocalElement<F>, &LocalElement<F>) -> Result<LocalElement<F>>,
    ) -> Result<Self> {
        same_field(&self.field, &other.field)?;
        let keys: BTreeSet<&F::Prime> = self.exceptional.keys().chain(other.exceptional.keys()).collect();
        let mut map = BTreeMap::new();
        for p in keys {
            map.insert(p.clone(), op(&self.field, &self.component(p), &other.component(p))?);
        }
        Self::assemble(&self.field, map, tail)
    }
}

/// The diagonal image of `k`.
pub fn inj_k<F: GlobalField>(field: &F, k: &F::Elem) -> FiniteAdele<F> {
    FiniteAdele::assemble(field, BTreeMap::new(), k.clone()).expect("every element has a factorable denominator")
}

pub fn add<F: GlobalField>(x: &FiniteAdele<F>, y: &FiniteAdele<F>) -> Result<FiniteAdele<F>> {
    x.zip_with(y, x.field.add(&x.tail, &y.tail), local::add)
}

pub fn mul<F: GlobalField>(x: &FiniteAdele<F>, y: &FiniteAdele<F>) -> Result<FiniteAdele<F>> {
    x.zip_with(y, x.field.mul(&x.tail, &y.tail), local::mul)
}

pub fn neg<F: GlobalField>(x: &FiniteAdele<F>) -> FiniteAdele<F> {
    FiniteAdele {
        field: x.field.clone(),
        exceptional: x.exceptional.iter().map(|(p, c)| (p.clone(), local::neg(&x.field, c))).collect(),
        tail: x.field.neg(&x.tail),
    }
}

pub fn sub<F: GlobalField>(x: &FiniteAdele<F>, y: &FiniteAdele<F>) -> Result<FiniteAdele<F>> {
    add(x, &neg(y))
}

/// Equal tails, and equal components on the union of exceptional places.
/// Distinct tails differ at infinitely many places, so comparing them is
/// both necessary and sufficient away from the exceptional sets.
pub fn adele_eq<F: GlobalField>(x: &FiniteAdele<F>, y: &FiniteAdele<F>) -> Result<bool> {
    same_field(&x.field, &y.field)?;
    if x.tail != y.tail {
        return Ok(false);
    }
    let keys: BTreeSet<&F::Prime> = x.exceptional.keys().chain(y.exceptional.keys()).collect();
    for p in keys {
        if !local::coset_eq(&x.field, &x.component(p), &y.component(p))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The ball `{x : v(x - center) >= radius}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ball<E> {
    pub center: E,
    pub radius: i64,
}

/// `prod_v U_v` with `U_v` a ball at the constrained places and `R_v` elsewhere.
#[derive(Clone, Debug)]
pub struct BasicOpenSpec<F: GlobalField> {
    pub constraints: BTreeMap<F::Prime, Ball<F::Elem>>,
}

impl<F: GlobalField> BasicOpenSpec<F> {
    /// `prod_v R_v`.
    pub fn integral() -> Self {
        BasicOpenSpec { constraints: BTreeMap::new() }
    }
}

fn in_ball<F: GlobalField>(field: &F, x: &LocalElement<F>, ball: &Ball<F::Elem>) -> Result<bool> {
    let d = valuation::place_valuation(field, x.place(), &field.sub(x.approx(), &ball.center))?;
    let r = ValueGroup::Finite(ball.radius);
    let n = x.precision().as_value();
    if d.min(n) >= r {
        Ok(true)
    } else if d < r && d < n {
        Ok(false)
    } else {
        Err(Error::InsufficientPrecision("ball radius exceeds component precision".into()))
    }
}

pub fn is_in_basic_open<F: GlobalField>(x: &FiniteAdele<F>, u: &BasicOpenSpec<F>) -> Result<bool> {
    for (p, ball) in &u.constraints {
        if !in_ball(&x.field, &x.component(p), ball)? {
            return Ok(false);
        }
    }
    for (p, c) in &x.exceptional {
        if !u.constraints.contains_key(p) && !local::is_integer(&x.field, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(r_v / s)_v` with every `r_v` in `R_v` and `s` a nonzero element of `R`.
#[derive(Clone, Debug)]
pub struct LocalizationForm<F: GlobalField> {
    numerator: FiniteAdele<F>,
    denominator: F::Ring,
}

impl<F: GlobalField> LocalizationForm<F> {
    pub fn new(numerator: FiniteAdele<F>, denominator: F::Ring) -> Result<Self> {
        if numerator.field.ring_is_zero(&denominator) {
            return Err(Error::ZeroElement);
        }
        if !is_in_basic_open(&numerator, &BasicOpenSpec::integral())? {
            return Err(Error::Unsupported("numerator is not integral".into()));
        }
        Ok(LocalizationForm { numerator, denominator })
    }

    pub fn numerator(&self) -> &FiniteAdele<F> {
        &self.numerator
    }

    pub fn denominator(&self) -> &F::Ring {
        &self.denominator
    }
}

fn ring_pow<F: GlobalField>(field: &F, r: &F::Ring, n: u32) -> F::Ring {
    let mut acc = field.numerator_denominator(&field.one()).0;
    for _ in 0..n {
        acc = field.ring_mul(&acc, r);
    }
    acc
}

/// Clears the denominators of `x` with a single `s` in `R`.
pub fn to_localization_form<F: GlobalField>(x: &FiniteAdele<F>) -> LocalizationForm<F> {
    let field = &x.field;
    let (_, mut s) = field.numerator_denominator(&x.tail);
    for (p, c) in &x.exceptional {
        if let ValueGroup::Finite(v) = c.valuation_lower_bound(field) {
            if v < 0 {
                let e = field.ramification_index(p) as i64;
                let k = (-v + e - 1) / e;
                s = field.ring_mul(&s, &ring_pow(field, &field.clearing_element(p), k as u32));
            }
        }
    }
    let numerator = mul(x, &inj_k(field, &field.ring_to_field(&s))).expect("same field");
    LocalizationForm { numerator, denominator: s }
}

pub fn from_localization_form<F: GlobalField>(l: &LocalizationForm<F>) -> FiniteAdele<F> {
    let field = &l.numerator.field;
    let s_inv = field.inv(&field.ring_to_field(&l.denominator)).expect("nonzero denominator");
    mul(&l.numerator, &inj_k(field, &s_inv)).expect("same field")
}

/// `N/s == N'/s'` iff `N s' == N' s`.
pub fn localization_eq<F: GlobalField>(a: &LocalizationForm<F>, b: &LocalizationForm<F>) -> Result<bool> {
    let field = &a.numerator.field;
    let lhs = mul(&a.numerator, &inj_k(field, &field.ring_to_field(&b.denominator)))?;
    let rhs = mul(&b.numerator, &inj_k(field, &field.ring_to_field(&a.denominator)))?;
    adele_eq(&lhs, &rhs)
}

pub fn localization_add<F: GlobalField>(a: &LocalizationForm<F>, b: &LocalizationForm<F>) -> Result<LocalizationForm<F>> {
    let field = &a.numerator.field;
    let x = mul(&a.numerator, &inj_k(field, &field.ring_to_field(&b.denominator)))?;
    let y = mul(&b.numerator, &inj_k(field, &field.ring_to_field(&a.denominator)))?;
    Ok(LocalizationForm { numerator: add(&x, &y)?, denominator: field.ring_mul(&a.denominator, &b.denominator) })
}

pub fn localization_mul<F: GlobalField>(a: &LocalizationForm<F>, b: &LocalizationForm<F>) -> Result<LocalizationForm<F>> {
    let field = &a.numerator.field;
    Ok(LocalizationForm {
        numerator: mul(&a.numerator, &b.numerator)?,
        denominator: field.ring_mul(&a.denominator, &b.denominator),
    })
}

/// A coordinate at an infinite place.
#[derive(Clone, Debug)]
pub enum InfiniteCoord<F: GlobalField> {
    Real(f64),
    Complex(Complex64),
    /// The place at infinity of `F_q(t)`.
    NonArch(LocalElement<F>),
}

#[derive(Clone, Debug)]
pub struct Adele<F: GlobalField> {
    finite: FiniteAdele<F>,
    infinite: Vec<InfiniteCoord<F>>,
}

fn check_shape<F: GlobalField>(field: &F, coords: &[InfiniteCoord<F>]) -> Result<()> {
    let places = field.infinite_places();
    if places.len() != coords.len() {
        return Err(Error::ShapeMismatch);
    }
    for (v, c) in places.iter().zip(coords) {
        let ok = match (v, c) {
            (InfinitePlace::Real(_), InfiniteCoord::Real(_)) => true,
            (InfinitePlace::ComplexPair(_), InfiniteCoord::Complex(_)) => true,
            (InfinitePlace::FunctionFieldInfinity, InfiniteCoord::NonArch(x)) => {
                x.place() == &Place::Infinite(InfinitePlace::FunctionFieldInfinity)
            }
            _ => false,
        };
        if !ok {
            return Err(Error::ShapeMismatch);
        }
    }
    Ok(())
}

pub fn make_adele<F: GlobalField>(finite: FiniteAdele<F>, infinite: Vec<InfiniteCoord<F>>) -> Result<Adele<F>> {
    check_shape(&finite.field, &infinite)?;
    Ok(Adele { finite, infinite })
}

impl<F: GlobalField> Adele<F> {
    pub fn finite(&self) -> &FiniteAdele<F> {
        &self.finite
    }

    pub fn infinite(&self) -> &[InfiniteCoord<F>] {
        &self.infinite
    }

    pub fn field(&self) -> &F {
        &self.finite.field
    }
}

/// Coordinates of `k` at the infinite places.
pub fn infinite_image<F: GlobalField>(field: &F, k: &F::Elem) -> Vec<InfiniteCoord<F>> {
    field
        .infinite_places()
        .into_iter()
        .enumerate()
        .map(|(i, v)| match v {
            InfinitePlace::FunctionFieldInfinity => {
                InfiniteCoord::NonArch(LocalElement::build(field, Place::Infinite(v), k.clone(), Precision::Exact))
            }
            InfinitePlace::Real(_) => InfiniteCoord::Real(field.embed(k).expect("number field")[i].re),
            InfinitePlace::ComplexPair(_) => InfiniteCoord::Complex(field.embed(k).expect("number field")[i]),
        })
        .collect()
}

/// `k -> (inj_K k, embeddings of k)`.
pub fn inj_k_full<F: GlobalField>(field: &F, k: &F::Elem) -> Adele<F> {
    Adele { finite: inj_k(field, k), infinite: infinite_image(field, k) }
}

fn zip_coords<F: GlobalField>(
    field: &F,
    x: &[InfiniteCoord<F>],
    y: &[InfiniteCoord<F>],
    real: impl Fn(f64, f64) -> f64,
    complex: impl Fn(Complex64, Complex64) -> Complex64,
    nonarch: impl Fn(&F, &LocalElement<F>, &LocalElement<F>) -> Result<LocalElement<F>>,
) -> Result<Vec<InfiniteCoord<F>>> {
    x.iter()
        .zip(y)
        .map(|pair| match pair {
            (InfiniteCoord::Real(a), InfiniteCoord::Real(b)) => Ok(InfiniteCoord::Real(real(*a, *b))),
            (InfiniteCoord::Complex(a), InfiniteCoord::Complex(b)) => Ok(InfiniteCoord::Complex(complex(*a, *b))),
            (InfiniteCoord::NonArch(a), InfiniteCoord::NonArch(b)) => Ok(InfiniteCoord::NonArch(nonarch(field, a, b)?)),
            _ => Err(Error::ShapeMismatch),
        })
        .collect()
}

pub fn full_add<F: GlobalField>(x: &Adele<F>, y: &Adele<F>) -> Result<Adele<F>> {
    let finite = add(&x.finite, &y.finite)?;
    let infinite = zip_coords(x.field(), &x.infinite, &y.infinite, |a, b| a + b, |a, b| a + b, local::add)?;
    Ok(Adele { finite, infinite })
}

pub fn full_mul<F: GlobalField>(x: &Adele<F>, y: &Adele<F>) -> Result<Adele<F>> {
    let finite = mul(&x.finite, &y.finite)?;
    let infinite = zip_coords(x.field(), &x.infinite, &y.infinite, |a, b| a * b, |a, b| a * b, local::mul)?;
    Ok(Adele { finite, infinite })
}

pub fn full_neg<F: GlobalField>(x: &Adele<F>) -> Adele<F> {
    let infinite = x
        .infinite
        .iter()
        .map(|c| match c {
            InfiniteCoord::Real(a) => InfiniteCoord::Real(-a),
            InfiniteCoord::Complex(a) => InfiniteCoord::Complex(-a),
            InfiniteCoord::NonArch(a) => InfiniteCoord::NonArch(local::neg(x.field(), a)),
        })
        .collect();
    Adele { finite: neg(&x.finite), infinite }
}

/// `|a - b| <= tol * max(1, |a|, |b|)`.
pub(crate) fn arch_close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= ARCH_TOLERANCE * 1f64.max(a.norm()).max(b.norm())
}

/// Exact on finite parts and at the infinity of `F_q(t)`; archimedean
/// coordinates agree within [`ARCH_TOLERANCE`].
pub fn full_eq<F: GlobalField>(x: &Adele<F>, y: &Adele<F>) -> Result<bool> {
    if !adele_eq(&x.finite, &y.finite)? {
        return Ok(false);
    }
    for pair in x.infinite.iter().zip(&y.infinite) {
        let same = match pair {
            (InfiniteCoord::Real(a), InfiniteCoord::Real(b)) => arch_close((*a).into(), (*b).into()),
            (InfiniteCoord::Complex(a), InfiniteCoord::Complex(b)) => arch_close(*a, *b),
            (InfiniteCoord::NonArch(a), InfiniteCoord::NonArch(b)) => local::coset_eq(x.field(), a, b)?,
            _ => return Err(Error::ShapeMismatch),
        };
        if !same {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::{FunctionField, QuadElem, QuadraticField, Rationals};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn exact(p: u64, x: BigRational) -> (u64, LocalElement<Rationals>) {
        (p, LocalElement::from_global(&Rationals, Place::Finite(p), x).unwrap())
    }

    #[test]
    fn diagonal_embedding() {
        let k = Rationals;
        assert!(inj_k(&k, &q(1, 1)).exceptional().is_empty());
        let x = inj_k(&k, &q(5, 6));
        assert_eq!(x.exceptional().keys().copied().collect::<Vec<_>>(), vec![2, 3]);
        let s = add(&inj_k(&k, &q(2, 1)), &inj_k(&k, &q(3, 1))).unwrap();
        assert!(adele_eq(&s, &inj_k(&k, &q(5, 1))).unwrap());

        let f = QuadraticField::new(-5).unwrap();
        let y = inj_k(&f, &QuadElem::new(1, 1, 2));
        let v2 = f.primes_above(&2).unwrap().remove(0);
        assert_eq!(y.exceptional().keys().cloned().collect::<Vec<_>>(), vec![v2]);
    }

    #[test]
    fn componentwise_product() {
        let k = Rationals;
        let x = FiniteAdele::new(&k, [exact(2, q(1, 2))], q(1, 1)).unwrap();
        let y = FiniteAdele::new(&k, [exact(3, q(1, 3))], q(1, 1)).unwrap();
        let z = mul(&x, &y).unwrap();
        assert_eq!(z.component(&2).approx(), &q(1, 2));
        assert_eq!(z.component(&3).approx(), &q(1, 3));
        for p in [5, 7, 11, 13] {
            assert_eq!(z.component(&p).approx(), &q(1, 1));
        }
        let zero = add(&x, &neg(&x)).unwrap();
        assert!(zero.exceptional().is_empty());
        assert_eq!(zero.tail(), &q(0, 1));
    }

    #[test]
    fn equality() {
        let k = Rationals;
        let raw = FiniteAdele::new(&k, [exact(2, q(1, 2)), exact(5, q(3, 1))], q(3, 1)).unwrap();
        assert_eq!(raw.exceptional().len(), 1);
        let off = FiniteAdele::new(&k, [exact(2, q(17, 2))], q(1, 2)).unwrap();
        assert!(!adele_eq(&inj_k(&k, &q(1, 2)), &off).unwrap());
        assert!(!adele_eq(&inj_k(&k, &q(1, 1)), &inj_k(&k, &q(2, 1))).unwrap());
    }

    #[test]
    fn spec_mismatch() {
        let a = QuadraticField::new(-1).unwrap();
        let b = QuadraticField::new(-5).unwrap();
        assert_eq!(add(&inj_k(&a, &a.one()), &inj_k(&b, &b.one())).unwrap_err(), Error::SpecMismatch);
    }

    #[test]
    fn basic_opens() {
        let k = Rationals;
        let all = BasicOpenSpec::<Rationals>::integral();
        assert!(is_in_basic_open(&inj_k(&k, &q(7, 1)), &all).unwrap());
        assert!(!is_in_basic_open(&inj_k(&k, &q(1, 2)), &all).unwrap());
        let x3 = LocalElement::with_precision(&k, Place::Finite(3), q(5, 1), Precision::Finite(2)).unwrap();
        let x = FiniteAdele::new(&k, [(3, x3)], q(1, 1)).unwrap();
        let u = BasicOpenSpec { constraints: BTreeMap::from([(3, Ball { center: q(2, 1), radius: 1 })]) };
        assert!(is_in_basic_open(&x, &u).unwrap());
        let tight = BasicOpenSpec { constraints: BTreeMap::from([(3, Ball { center: q(14, 1), radius: 3 })]) };
        assert!(is_in_basic_open(&x, &tight).is_err());
    }

    #[test]
    fn localization_examples() {
        let k = Rationals;
        let six = LocalizationForm::new(inj_k(&k, &q(6, 1)), BigInt::from(2)).unwrap();
        assert!(adele_eq(&from_localization_form(&six), &inj_k(&k, &q(3, 1))).unwrap());
        let x = FiniteAdele::new(&k, [exact(2, q(1, 2))], q(3, 1)).unwrap();
        let l = to_localization_form(&x);
        assert_eq!(l.denominator(), &BigInt::from(2));
        assert_eq!(l.numerator().tail(), &q(6, 1));
        assert_eq!(l.numerator().component(&2).approx(), &q(1, 1));
        assert!(adele_eq(&from_localization_form(&l), &x).unwrap());
        assert!(LocalizationForm::new(inj_k(&k, &q(1, 2)), BigInt::from(1)).is_err());
    }

    #[test]
    fn full_adeles() {
        let k = Rationals;
        let one = inj_k_full(&k, &q(1, 1));
        assert!(matches!(one.infinite(), [InfiniteCoord::Real(r)] if *r == 1.0));
        let f = QuadraticField::new(2).unwrap();
        let r2 = inj_k_full(&f, &f.omega());
        match r2.infinite() {
            [InfiniteCoord::Real(a), InfiniteCoord::Real(b)] => {
                assert!((a - std::f64::consts::SQRT_2).abs() < 1e-12);
                assert!((b + std::f64::consts::SQRT_2).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
        let ff = FunctionField::new(3, 1).unwrap();
        let t = inj_k_full(&ff, &ff.t());
        match t.infinite() {
            [InfiniteCoord::NonArch(x)] => {
                assert_eq!(local::local_valuation(&ff, x).unwrap(), ValueGroup::Finite(-1))
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(make_adele(inj_k(&k, &q(1, 1)), vec![]).unwrap_err(), Error::ShapeMismatch);
        let two = full_add(&one, &one).unwrap();
        assert!(full_eq(&two, &inj_k_full(&k, &q(2, 1))).unwrap());
        let sq = full_mul(&r2, &r2).unwrap();
        assert!(full_eq(&sq, &inj_k_full(&f, &f.from_int(2))).unwrap());
    }
}
