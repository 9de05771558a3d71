//! Fractional ideals, ideal classes of imaginary quadratic fields, and the
//! idèle class group `C_K` with its map onto `Cl(K)`.
//!
//! The map `C_K -> Cl(K)` sends the class of `x` to the class of
//! `prod v^(val_v x_v)`. Its kernel is `I_{K,inf} K* / K*`, so it induces
//! `Cl(K) = C_K / (I_{K,inf} K* / K*)`. The section used here sends an ideal
//! class to the idèle of uniformizer powers of a representative.

pub mod forms;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::adele;
use crate::domains::{FunctionField, GlobalField, Hnf, QuadElem, QuadInt, QuadraticField, Rationals};
use crate::error::{Error, Result};
use crate::idele::{self, Idele};
use crate::valuation;

pub use forms::{ClassGroup, Form};

/// `a^-1 J` for `a` in `R` nonzero and `J` an integral ideal, with its
/// factorization `prod v^(e_v)`.
#[derive(Clone, Debug)]
pub struct FractionalIdeal<F: GlobalField> {
    field: F,
    denominator: F::Ring,
    numerator: F::Ideal,
    exponents: BTreeMap<F::Prime, i64>,
}

fn ring_pow<F: GlobalField>(field: &F, r: &F::Ring, n: u32) -> F::Ring {
    let mut acc = field.numerator_denominator(&field.one()).0;
    for _ in 0..n {
        acc = field.ring_mul(&acc, r);
    }
    acc
}

fn ring_factors<F: GlobalField>(field: &F, r: &F::Ring) -> Result<BTreeMap<F::Prime, u32>> {
    field.factor_ideal(&field.principal_ideal(r)?)
}

impl<F: GlobalField> FractionalIdeal<F> {
    /// `prod v^(e_v)`, presented with the smallest clearing denominator
    /// built from `clearing_element`s.
    pub fn from_exponents(field: &F, exponents: BTreeMap<F::Prime, i64>) -> Self {
        let mut exponents = exponents;
        exponents.retain(|_, e| *e != 0);
        let mut clear: HashMap<F::Ring, u32> = HashMap::new();
        for (p, &e) in &exponents {
            if e < 0 {
                let r = field.ramification_index(p) as i64;
                let k = ((-e + r - 1) / r) as u32;
                let slot = clear.entry(field.clearing_element(p)).or_insert(0);
                *slot = (*slot).max(k);
            }
        }
        let mut a = field.numerator_denominator(&field.one()).0;
        for (c, k) in &clear {
            a = field.ring_mul(&a, &ring_pow(field, c, *k));
        }
        let mut j: BTreeMap<F::Prime, i64> = exponents.clone();
        for (p, k) in ring_factors(field, &a).expect("clearing elements are nonzero") {
            *j.entry(p).or_insert(0) += k as i64;
        }
        let j: BTreeMap<F::Prime, u32> = j
            .into_iter()
            .filter(|(_, e)| *e != 0)
            .map(|(p, e)| (p, u32::try_from(e).expect("cleared exponents are nonnegative")))
            .collect();
        FractionalIdeal { field: field.clone(), denominator: a, numerator: field.ideal_from_factors(&j), exponents }
    }

    /// `a^-1 J`.
    pub fn from_presentation(field: &F, a: &F::Ring, j: &F::Ideal) -> Result<Self> {
        let mut e: BTreeMap<F::Prime, i64> = field.factor_ideal(j)?.into_iter().map(|(p, k)| (p, k as i64)).collect();
        for (p, k) in ring_factors(field, a)? {
            *e.entry(p).or_insert(0) -= k as i64;
        }
        Ok(Self::from_exponents(field, e))
    }

    /// The principal fractional ideal `(k)`.
    pub fn principal(field: &F, k: &F::Elem) -> Result<Self> {
        if field.is_zero(k) {
            return Err(Error::ZeroIdeal);
        }
        Ok(Self::from_exponents(field, valuation::valuation_support(field, k)?))
    }

    pub fn unit(field: &F) -> Self {
        Self::from_exponents(field, BTreeMap::new())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn exponents(&self) -> &BTreeMap<F::Prime, i64> {
        &self.exponents
    }

    pub fn denominator(&self) -> &F::Ring {
        &self.denominator
    }

    pub fn numerator_ideal(&self) -> &F::Ideal {
        &self.numerator
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.exponents.values().all(|e| *e >= 0)
    }
}

pub fn frac_factorization<F: GlobalField>(i: &FractionalIdeal<F>) -> BTreeMap<F::Prime, i64> {
    i.exponents.clone()
}

pub fn frac_mul<F: GlobalField>(x: &FractionalIdeal<F>, y: &FractionalIdeal<F>) -> Result<FractionalIdeal<F>> {
    if x.field != y.field {
        return Err(Error::SpecMismatch);
    }
    let mut e = x.exponents.clone();
    for (p, k) in &y.exponents {
        *e.entry(p.clone()).or_insert(0) += k;
    }
    Ok(FractionalIdeal::from_exponents(&x.field, e))
}

pub fn frac_inv<F: GlobalField>(x: &FractionalIdeal<F>) -> FractionalIdeal<F> {
    FractionalIdeal::from_exponents(&x.field, x.exponents.iter().map(|(p, k)| (p.clone(), -k)).collect())
}

pub fn frac_eq<F: GlobalField>(x: &FractionalIdeal<F>, y: &FractionalIdeal<F>) -> bool {
    x.field == y.field && x.exponents == y.exponents
}

/// The product computed on presentations, `(a a')^-1 (J J')`, without
/// going through the exponent maps.
pub fn presentation_mul<F: GlobalField>(x: &FractionalIdeal<F>, y: &FractionalIdeal<F>) -> Result<FractionalIdeal<F>> {
    let f = &x.field;
    FractionalIdeal::from_presentation(
        f,
        &f.ring_mul(&x.denominator, &y.denominator),
        &f.ideal_mul(&x.numerator, &y.numerator),
    )
}

/// Identifies an ideal class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKey {
    /// The only class over a principal ideal domain.
    Trivial,
    /// The reduced form of the class.
    Form(Form),
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKey::Trivial => write!(f, "trivial"),
            ClassKey::Form(form) => write!(f, "{form}"),
        }
    }
}

/// Global fields whose class group and principality test are implemented.
pub trait ClassGroupField: GlobalField {
    /// A generator when `i` is principal.
    fn principal_generator(&self, i: &FractionalIdeal<Self>) -> Result<Option<Self::Elem>>;
    fn class_key(&self, i: &FractionalIdeal<Self>) -> Result<ClassKey>;
    /// Every ideal class, principal class first.
    fn class_keys(&self) -> Result<Vec<ClassKey>>;
    fn class_representative(&self, key: &ClassKey) -> Result<FractionalIdeal<Self>>;
    /// The units of `R`; finite for every field supported here.
    fn units(&self) -> Result<Vec<Self::Elem>>;

    fn fmt_fractional(&self, i: &FractionalIdeal<Self>) -> String {
        let j = self.fmt_ideal(&i.numerator);
        let a = self.fmt_ring(&i.denominator);
        if a == "1" {
            j
        } else if a.bytes().all(|c| c.is_ascii_digit()) {
            format!("{j}/{a}")
        } else {
            format!("{j}/({a})")
        }
    }
}

pub fn is_principal<F: ClassGroupField>(i: &FractionalIdeal<F>) -> Result<Option<F::Elem>> {
    i.field.principal_generator(i)
}

fn product_generator<F: GlobalField>(i: &FractionalIdeal<F>) -> F::Elem {
    let f = &i.field;
    let mut acc = f.one();
    for (p, &e) in &i.exponents {
        let g = f.ring_to_field(&f.clearing_element(p));
        acc = f.mul(&acc, &f.pow(&g, e).unwrap());
    }
    acc
}

impl ClassGroupField for Rationals {
    fn principal_generator(&self, i: &FractionalIdeal<Self>) -> Result<Option<BigRational>> {
        Ok(Some(product_generator(i)))
    }

    fn class_key(&self, _: &FractionalIdeal<Self>) -> Result<ClassKey> {
        Ok(ClassKey::Trivial)
    }

    fn class_keys(&self) -> Result<Vec<ClassKey>> {
        Ok(vec![ClassKey::Trivial])
    }

    fn class_representative(&self, _: &ClassKey) -> Result<FractionalIdeal<Self>> {
        Ok(FractionalIdeal::unit(self))
    }

    fn units(&self) -> Result<Vec<BigRational>> {
        Ok(vec![self.one(), self.from_int(-1)])
    }

    fn fmt_fractional(&self, i: &FractionalIdeal<Self>) -> String {
        format!("({})", product_generator(i))
    }
}

impl ClassGroupField for FunctionField {
    fn principal_generator(&self, i: &FractionalIdeal<Self>) -> Result<Option<Self::Elem>> {
        Ok(Some(product_generator(i)))
    }

    fn class_key(&self, _: &FractionalIdeal<Self>) -> Result<ClassKey> {
        Ok(ClassKey::Trivial)
    }

    fn class_keys(&self) -> Result<Vec<ClassKey>> {
        Ok(vec![ClassKey::Trivial])
    }

    fn class_representative(&self, _: &ClassKey) -> Result<FractionalIdeal<Self>> {
        Ok(FractionalIdeal::unit(self))
    }

    fn units(&self) -> Result<Vec<Self::Elem>> {
        Ok(self.constants().elements().filter(|&c| c != 0).map(|c| self.constant(c)).collect())
    }

    fn fmt_fractional(&self, i: &FractionalIdeal<Self>) -> String {
        format!("({})", self.fmt_elem(&product_generator(i)))
    }
}

fn require_imaginary(f: &QuadraticField) -> Result<()> {
    if f.is_imaginary() {
        Ok(())
    } else {
        Err(Error::UnsupportedField(format!("class groups of real quadratic fields (d = {})", f.d())))
    }
}

/// `content * [a', b' + w]` with the primitive part's norm form
/// `(a', 2b' + t, N(b' + w) / a')`.
struct PrimitiveSplit {
    content: BigInt,
    a: BigInt,
    b: BigInt,
}

fn primitive_split(h: &Hnf) -> PrimitiveSplit {
    PrimitiveSplit { content: h.c.clone(), a: &h.a / &h.c, b: &h.b / &h.c }
}

impl QuadraticField {
    fn form_of(&self, s: &PrimitiveSplit) -> (BigInt, BigInt, BigInt) {
        let t = BigInt::from(self.omega_trace());
        let bf = -(&s.b * BigInt::from(2) + &t);
        let disc = BigInt::from(self.discriminant());
        let cf = (&bf * &bf - disc) / (&s.a * 4);
        (s.a.clone(), bf, cf)
    }

    /// Reduced form of the class of `[a', b' + w]`.
    fn reduced_form_of(&self, h: &Hnf) -> (Form, forms::Matrix, PrimitiveSplit) {
        let s = primitive_split(h);
        let (a, b, c) = self.form_of(&s);
        let (f, m) = forms::reduce(&a, &b, &c);
        (f, m, s)
    }

    /// The form class group of the discriminant of this field.
    pub fn class_group(&self) -> Result<ClassGroup> {
        require_imaginary(self)?;
        ClassGroup::new(self.discriminant())
    }
}

impl ClassGroupField for QuadraticField {
    fn principal_generator(&self, i: &FractionalIdeal<Self>) -> Result<Option<QuadElem>> {
        require_imaginary(self)?;
        let (f, m, s) = self.reduced_form_of(&i.numerator);
        if !f.is_principal() {
            return Ok(None);
        }
        // (a', B, c)(x, y) = 1 with (x, y) the first column of m, so
        // gamma = x a' - y (b' + w) has norm a' and generates [a', b' + w].
        let (x, y) = (&m[0][0], &m[1][0]);
        let gamma = QuadInt { a: (x * &s.a - y * &s.b) * &s.content, b: -(y * &s.content) };
        debug_assert_eq!(self.principal_ideal(&gamma).ok().as_ref(), Some(&i.numerator));
        let den = self.ring_to_field(&i.denominator);
        Ok(Some(self.div(&self.ring_to_field(&gamma), &den).unwrap()))
    }

    fn class_key(&self, i: &FractionalIdeal<Self>) -> Result<ClassKey> {
        require_imaginary(self)?;
        Ok(ClassKey::Form(self.reduced_form_of(&i.numerator).0))
    }

    fn class_keys(&self) -> Result<Vec<ClassKey>> {
        Ok(self.class_group()?.forms.into_iter().map(ClassKey::Form).collect())
    }

    /// The ideal `[a, (-b + sqrt D)/2]` of the form `(a, b, c)`.
    fn class_representative(&self, key: &ClassKey) -> Result<FractionalIdeal<Self>> {
        require_imaginary(self)?;
        let form = match key {
            ClassKey::Form(f) if f.discriminant() == self.discriminant() => f,
            _ => return Err(Error::SpecMismatch),
        };
        let a = BigInt::from(form.a);
        let b = BigInt::from((-form.b - self.omega_trace()) / 2).mod_floor(&a);
        let h = Hnf { a, b, c: BigInt::one() };
        debug_assert!(self.is_ideal(&h));
        FractionalIdeal::from_presentation(self, &QuadInt::new(1, 0), &h)
    }

    fn units(&self) -> Result<Vec<QuadElem>> {
        require_imaginary(self)?;
        let w = |a: i64, b: i64| QuadElem::new(a, b, 1);
        Ok(match self.d() {
            -1 => vec![w(1, 0), w(-1, 0), w(0, 1), w(0, -1)],
            // w = (1 + sqrt -3)/2 is a primitive sixth root of unity
            -3 => vec![w(1, 0), w(-1, 0), w(0, 1), w(0, -1), w(-1, 1), w(1, -1)],
            _ => vec![w(1, 0), w(-1, 0)],
        })
    }
}

/// An ideal class with a canonical representative.
#[derive(Clone, Debug)]
pub struct IdealClass<F: GlobalField> {
    key: ClassKey,
    representative: FractionalIdeal<F>,
}

impl<F: GlobalField> PartialEq for IdealClass<F> {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl<F: GlobalField> IdealClass<F> {
    pub fn key(&self) -> &ClassKey {
        &self.key
    }

    pub fn representative(&self) -> &FractionalIdeal<F> {
        &self.representative
    }
}

pub fn ideal_class_of<F: ClassGroupField>(i: &FractionalIdeal<F>) -> Result<IdealClass<F>> {
    let key = i.field.class_key(i)?;
    Ok(IdealClass { key, representative: i.field.class_representative(&key)? })
}

pub fn principal_class<F: ClassGroupField>(field: &F) -> Result<IdealClass<F>> {
    ideal_class_of(&FractionalIdeal::unit(field))
}

/// Every ideal class, principal class first.
pub fn ideal_classes<F: ClassGroupField>(field: &F) -> Result<Vec<IdealClass<F>>> {
    field
        .class_keys()?
        .into_iter()
        .map(|key| Ok(IdealClass { key, representative: field.class_representative(&key)? }))
        .collect()
}

/// The class of an idèle modulo the diagonal `K*`.
#[derive(Clone, Debug)]
pub struct IdeleClass<F: GlobalField> {
    representative: Idele<F>,
}

impl<F: GlobalField> IdeleClass<F> {
    pub fn new(representative: Idele<F>) -> Self {
        IdeleClass { representative }
    }

    pub fn representative(&self) -> &Idele<F> {
        &self.representative
    }

    pub fn identity(field: &F) -> Self {
        IdeleClass { representative: idele::full_identity(field) }
    }
}

pub fn idele_class_mul<F: GlobalField>(x: &IdeleClass<F>, y: &IdeleClass<F>) -> Result<IdeleClass<F>> {
    Ok(IdeleClass { representative: idele::full_mul(&x.representative, &y.representative)? })
}

pub fn idele_class_to_ideal_class<F: ClassGroupField>(x: &IdeleClass<F>) -> Result<IdealClass<F>> {
    let i = idele::map_to_fractional_ideals(&idele::project_to_finite(&x.representative))?;
    ideal_class_of(&i)
}

pub fn ideal_class_section<F: ClassGroupField>(c: &IdealClass<F>) -> Result<IdeleClass<F>> {
    Ok(IdeleClass { representative: Idele::from_finite(idele::preimage_idele(&c.representative)?) })
}

/// `x = u * inj(k)` with `u` in `I_{K,inf}`.
#[derive(Clone, Debug)]
pub struct KernelWitness<F: GlobalField> {
    pub u: Idele<F>,
    pub k: F::Elem,
}

/// Membership of the class of `x` in `I_{K,inf} K* / K*`, with a witness.
pub fn is_in_kernel_subgroup<F: ClassGroupField>(x: &IdeleClass<F>) -> Result<Option<KernelWitness<F>>> {
    let field = x.representative.field();
    let i = idele::map_to_fractional_ideals(idele::Idele::finite(&x.representative))?;
    let Some(k) = is_principal(&i)? else {
        return Ok(None);
    };
    let kinv = field.inv(&k).expect("generators are nonzero");
    let u = idele::full_mul(&x.representative, &idele::inj_units_k_full(field, &kinv)?)?;
    debug_assert!(idele::is_in_kernel(&u).unwrap_or(false));
    Ok(Some(KernelWitness { u, k }))
}

/// Equality in `C_K`: `x y^-1` is the diagonal image of some `k` in `K*`.
/// A candidate `k` is determined up to a unit of `R` by the principal ideal
/// of `x y^-1`; each unit multiple is tested for an exact match on the
/// finite part and a match within tolerance at the archimedean places.
pub fn idele_class_eq<F: ClassGroupField>(x: &IdeleClass<F>, y: &IdeleClass<F>) -> Result<bool> {
    let field = x.representative.field();
    let z = IdeleClass { representative: idele::full_mul(&x.representative, &idele::full_inverse(&y.representative)?)? };
    let Some(w) = is_in_kernel_subgroup(&z)? else {
        return Ok(false);
    };
    let one = adele::inj_k(field, &field.one());
    for unit in field.units()? {
        let r = idele::full_mul(&w.u, &idele::inj_units_k_full(field, &unit)?)?;
        if adele::adele_eq(r.finite().value(), &one)? && idele::infinite_part_is_one(&r)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Equality in `C_K / (I_{K,inf} K* / K*)`.
pub fn quotient_eq<F: ClassGroupField>(x: &IdeleClass<F>, y: &IdeleClass<F>) -> Result<bool> {
    let z = IdeleClass { representative: idele::full_mul(&x.representative, &idele::full_inverse(&y.representative)?)? };
    Ok(is_in_kernel_subgroup(&z)?.is_some())
}

/// Ideal classes and idèle classes via the section, paired.
pub fn class_correspondence<F: ClassGroupField>(field: &F) -> Result<Vec<(IdealClass<F>, IdeleClass<F>)>> {
    ideal_classes(field)?
        .into_iter()
        .map(|c| {
            let s = ideal_class_section(&c)?;
            Ok((c, s))
        })
        .collect()
}

/// Composition of forms agrees with multiplication of ideal classes.
pub fn form_of_product(f: &QuadraticField, x: &FractionalIdeal<QuadraticField>, y: &FractionalIdeal<QuadraticField>) -> Result<(Form, Form)> {
    let kx = f.class_key(x)?;
    let ky = f.class_key(y)?;
    let kxy = f.class_key(&frac_mul(x, y)?)?;
    match (kx, ky, kxy) {
        (ClassKey::Form(a), ClassKey::Form(b), ClassKey::Form(c)) => Ok((forms::compose(&a, &b), c)),
        _ => Err(Error::UnsupportedField("form classes".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::QuadPrime;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn z5() -> QuadraticField {
        QuadraticField::new(-5).unwrap()
    }

    fn primes(f: &QuadraticField, p: u64) -> Vec<QuadPrime> {
        f.primes_above(&p).unwrap()
    }

    #[test]
    fn rational_fractional_ideals() {
        let k = Rationals;
        let i = FractionalIdeal::principal(&k, &q(5, 6)).unwrap();
        assert_eq!(i.exponents(), &BTreeMap::from([(2, -1), (3, -1), (5, 1)]));
        assert_eq!(i.denominator(), &BigInt::from(6));
        let j = FractionalIdeal::from_exponents(&k, BTreeMap::from([(2, 1), (3, -1)]));
        assert_eq!(k.fmt_fractional(&j), "(2/3)");
        assert_eq!(is_principal(&j).unwrap(), Some(q(2, 3)));
        assert!(FractionalIdeal::unit(&k).exponents().is_empty());
        assert!(frac_mul(&i, &frac_inv(&i)).unwrap().is_unit());
    }

    #[test]
    fn factorization_of_six() {
        let f = z5();
        let six = FractionalIdeal::from_presentation(&f, &QuadInt::new(1, 0), &f.principal_ideal(&QuadInt::new(6, 0)).unwrap()).unwrap();
        let v2 = primes(&f, 2).remove(0);
        let v3 = primes(&f, 3);
        assert_eq!(six.exponents(), &BTreeMap::from([(v2.clone(), 2), (v3[0].clone(), 1), (v3[1].clone(), 1)]));
        let rebuilt = FractionalIdeal::from_exponents(&f, six.exponents().clone());
        assert_eq!(rebuilt.numerator_ideal(), &f.principal_ideal(&QuadInt::new(6, 0)).unwrap());
        // v2^-1 is presented as 2^-1 v2
        let inv = FractionalIdeal::from_exponents(&f, BTreeMap::from([(v2.clone(), -1)]));
        assert_eq!(inv.denominator(), &QuadInt::new(2, 0));
        assert_eq!(inv.numerator_ideal(), &f.prime_ideal(&v2));
    }

    #[test]
    fn principality_in_z_sqrt_minus5() {
        let f = z5();
        let v2 = primes(&f, 2).remove(0);
        let p2 = FractionalIdeal::from_exponents(&f, BTreeMap::from([(v2.clone(), 1)]));
        assert_eq!(is_principal(&p2).unwrap(), None);
        let sq = FractionalIdeal::from_exponents(&f, BTreeMap::from([(v2.clone(), 2)]));
        let g = is_principal(&sq).unwrap().unwrap();
        assert!(frac_eq(&FractionalIdeal::principal(&f, &g).unwrap(), &sq));
        let v3 = primes(&f, 3);
        let mixed = FractionalIdeal::from_exponents(&f, BTreeMap::from([(v2, 1), (v3[0].clone(), -1)]));
        let g = is_principal(&mixed).unwrap().unwrap();
        assert!(frac_eq(&FractionalIdeal::principal(&f, &g).unwrap(), &mixed));
        assert!(matches!(
            is_principal(&FractionalIdeal::unit(&QuadraticField::new(2).unwrap())),
            Err(Error::UnsupportedField(_))
        ));
    }

    #[test]
    fn class_keys_are_homomorphic() {
        for d in [-5, -23, -47, -14, -21] {
            let f = QuadraticField::new(d).unwrap();
            let mut ps = Vec::new();
            for p in [2u64, 3, 5, 7, 11, 13] {
                ps.extend(primes(&f, p));
            }
            for x in &ps {
                for y in &ps {
                    let a = FractionalIdeal::from_exponents(&f, BTreeMap::from([(x.clone(), 1)]));
                    let b = FractionalIdeal::from_exponents(&f, BTreeMap::from([(y.clone(), 1)]));
                    let (composed, direct) = form_of_product(&f, &a, &b).unwrap();
                    assert_eq!(composed, direct, "d={d} {x:?} {y:?}");
                }
            }
        }
    }

    #[test]
    fn representatives_land_in_their_class() {
        for d in [-1, -5, -23, -47] {
            let f = QuadraticField::new(d).unwrap();
            for key in f.class_keys().unwrap() {
                let rep = f.class_representative(&key).unwrap();
                assert_eq!(f.class_key(&rep).unwrap(), key);
            }
        }
    }

    #[test]
    fn idele_classes_of_z_sqrt_minus5() {
        let f = z5();
        let v2 = primes(&f, 2).remove(0);
        let p2 = FractionalIdeal::from_exponents(&f, BTreeMap::from([(v2, 1)]));
        let c = ideal_class_of(&p2).unwrap();
        assert_ne!(c, principal_class(&f).unwrap());
        let s = ideal_class_section(&c).unwrap();
        assert_eq!(idele_class_to_ideal_class(&s).unwrap(), c);
        assert!(is_in_kernel_subgroup(&s).unwrap().is_none());
        let k = QuadElem::new(3, 1, 2);
        let diag = IdeleClass::new(idele::inj_units_k_full(&f, &k).unwrap());
        assert_eq!(idele_class_to_ideal_class(&diag).unwrap(), principal_class(&f).unwrap());
        assert!(idele_class_eq(&diag, &IdeleClass::identity(&f)).unwrap());
        let moved = idele_class_mul(&s, &diag).unwrap();
        assert!(idele_class_eq(&moved, &s).unwrap());
        assert!(!idele_class_eq(&s, &IdeleClass::identity(&f)).unwrap());
    }

    #[test]
    fn kernel_witness_over_q() {
        let k = Rationals;
        let two = FractionalIdeal::principal(&k, &q(2, 1)).unwrap();
        let s = ideal_class_section(&IdealClass { key: ClassKey::Trivial, representative: two }).unwrap();
        let w = is_in_kernel_subgroup(&s).unwrap().unwrap();
        assert_eq!(w.k, q(2, 1));
        assert!(idele::is_in_kernel(&w.u).unwrap());
        let id = is_in_kernel_subgroup(&IdeleClass::identity(&k)).unwrap().unwrap();
        assert_eq!(id.k, q(1, 1));
    }
}
