//! Elements of a completion `K_v` at a nonarchimedean place.
//!
//! A [`LocalElement`] is the coset `approx + m_v^prec R_v` of a global
//! element, or the global element itself when the precision is
//! [`Precision::Exact`]. Precision is absolute. Propagation rules:
//!
//! * `x + y` has precision `min(px, py)`;
//! * `x * y` has precision `min(px + vy, py + vx)` where `vx = min(v(x), px)`
//!   is the provable lower bound on the valuation of `x`;
//! * `1/x` has precision `px - 2 v(x)`, and is refused below 1.
//!
//! The place `FunctionFieldInfinity` of `F_q(t)` is handled like any other
//! nonarchimedean place, with uniformizer `1/t`.

use std::fmt;

use crate::domains::{GlobalField, InfinitePlace, Place};
use crate::error::{Error, Result};
use crate::valuation::{self, ValueGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Precision {
    Exact,
    /// Known modulo `m_v^n`.
    Finite(i64),
}

impl Precision {
    pub fn as_value(self) -> ValueGroup {
        match self {
            Precision::Exact => ValueGroup::Infinity,
            Precision::Finite(n) => ValueGroup::Finite(n),
        }
    }

    fn from_value(v: ValueGroup) -> Self {
        match v {
            ValueGroup::Infinity => Precision::Exact,
            ValueGroup::Finite(n) => Precision::Finite(n),
        }
    }

    pub fn min(self, other: Self) -> Self {
        Self::from_value(self.as_value().min(other.as_value()))
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precision::Exact => write!(f, "exact"),
            Precision::Finite(n) => write!(f, "{n}"),
        }
    }
}

pub struct LocalElement<F: GlobalField> {
    place: Place<F::Prime>,
    approx: F::Elem,
    prec: Precision,
}

impl<F: GlobalField> Clone for LocalElement<F> {
    fn clone(&self) -> Self {
        Self { place: self.place.clone(), approx: self.approx.clone(), prec: self.prec }
    }
}

impl<F: GlobalField> fmt::Debug for LocalElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LocalElement")
            .field("place", &self.place)
            .field("approx", &self.approx)
            .field("prec", &self.prec)
            .finish()
    }
}

fn check_place<F: GlobalField>(field: &F, place: &Place<F::Prime>) -> Result<()> {
    match place {
        Place::Finite(p) => field.check_prime(p),
        Place::Infinite(InfinitePlace::FunctionFieldInfinity) => field.infinity_valuation(&field.one()).map(|_| ()),
        Place::Infinite(_) => Err(Error::ArchimedeanPlace),
    }
}

impl<F: GlobalField> LocalElement<F> {
    /// The image of a global element, exact.
    pub fn from_global(field: &F, place: Place<F::Prime>, x: F::Elem) -> Result<Self> {
        check_place(field, &place)?;
        Ok(Self { place, approx: x, prec: Precision::Exact })
    }

    /// The coset `x + m_v^n R_v`.
    pub fn with_precision(field: &F, place: Place<F::Prime>, x: F::Elem, prec: Precision) -> Result<Self> {
        check_place(field, &place)?;
        Ok(Self::build(field, place, x, prec))
    }

    pub(crate) fn build(field: &F, place: Place<F::Prime>, x: F::Elem, prec: Precision) -> Self {
        let mut out = Self { place, approx: x, prec };
        out.normalize(field);
        out
    }

    fn normalize(&mut self, field: &F) {
        if let Precision::Finite(n) = self.prec {
            if !field.is_zero(&self.approx) && self.approx_valuation(field) >= ValueGroup::Finite(n) {
                self.approx = field.zero();
            }
        }
    }

    pub fn place(&self) -> &Place<F::Prime> {
        &self.place
    }

    pub fn approx(&self) -> &F::Elem {
        &self.approx
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec == Precision::Exact
    }

    pub fn is_exact_zero(&self, field: &F) -> bool {
        self.is_exact() && field.is_zero(&self.approx)
    }

    fn approx_valuation(&self, field: &F) -> ValueGroup {
        valuation::place_valuation(field, &self.place, &self.approx).expect("place checked at construction")
    }

    /// Provable lower bound on the valuation.
    pub fn valuation_lower_bound(&self, field: &F) -> ValueGroup {
        self.approx_valuation(field).min(self.prec.as_value())
    }
}

fn same_place<F: GlobalField>(x: &LocalElement<F>, y: &LocalElement<F>) -> Result<()> {
    if x.place == y.place {
        Ok(())
    } else {
        Err(Error::PlaceMismatch(format!("{:?} vs {:?}", x.place, y.place)))
    }
}

pub fn add<F: GlobalField>(field: &F, x: &LocalElement<F>, y: &LocalElement<F>) -> Result<LocalElement<F>> {
    same_place(x, y)?;
    let prec = x.prec.min(y.prec);
    Ok(LocalElement::build(field, x.place.clone(), field.add(&x.approx, &y.approx), prec))
}

pub fn neg<F: GlobalField>(field: &F, x: &LocalElement<F>) -> LocalElement<F> {
    LocalElement { place: x.place.clone(), approx: field.neg(&x.approx), prec: x.prec }
}

pub fn sub<F: GlobalField>(field: &F, x: &LocalElement<F>, y: &LocalElement<F>) -> Result<LocalElement<F>> {
    add(field, x, &neg(field, y))
}

pub fn mul<F: GlobalField>(field: &F, x: &LocalElement<F>, y: &LocalElement<F>) -> Result<LocalElement<F>> {
    same_place(x, y)?;
    let product = field.mul(&x.approx, &y.approx);
    if x.is_exact_zero(field) || y.is_exact_zero(field) {
        return Ok(LocalElement { place: x.place.clone(), approx: field.zero(), prec: Precision::Exact });
    }
    let vx = x.valuation_lower_bound(field);
    let vy = y.valuation_lower_bound(field);
    let prec = (x.prec.as_value() + vy).min(y.prec.as_value() + vx);
    Ok(LocalElement::build(field, x.place.clone(), product, Precision::from_value(prec)))
}

pub fn inv<F: GlobalField>(field: &F, x: &LocalElement<F>) -> Result<LocalElement<F>> {
    match x.prec {
        Precision::Exact => {
            let i = field.inv(&x.approx).ok_or(Error::NotInvertible)?;
            Ok(LocalElement { place: x.place.clone(), approx: i, prec: Precision::Exact })
        }
        Precision::Finite(n) => {
            let v = local_valuation(field, x)?.finite().ok_or(Error::NotInvertible)?;
            let prec = n - 2 * v;
            if prec < 1 {
                return Err(Error::InsufficientPrecision(format!(
                    "inverse of an element of valuation {v} known mod m^{n}"
                )));
            }
            let i = field.inv(&x.approx).ok_or(Error::NotInvertible)?;
            Ok(LocalElement::build(field, x.place.clone(), i, Precision::Finite(prec)))
        }
    }
}

/// The valuation of the represented element; finite-precision zeros only
/// bound it from below and are refused.
pub fn local_valuation<F: GlobalField>(field: &F, x: &LocalElement<F>) -> Result<ValueGroup> {
    let v = x.approx_valuation(field);
    match x.prec {
        Precision::Exact => Ok(v),
        Precision::Finite(n) if v < ValueGroup::Finite(n) => Ok(v),
        Precision::Finite(n) => Err(Error::InsufficientPrecision(format!("only v >= {n} is known"))),
    }
}

/// Membership in `R_v`.
pub fn is_integer<F: GlobalField>(field: &F, x: &LocalElement<F>) -> Result<bool> {
    match local_valuation(field, x) {
        Ok(v) => Ok(v >= ValueGroup::Finite(0)),
        Err(e) => match x.prec {
            Precision::Finite(n) if n >= 0 => Ok(true),
            _ => Err(e),
        },
    }
}

/// Equality of the represented cosets. Exact elements compare exactly;
/// cosets of different precision are only comparable when they are disjoint.
pub fn coset_eq<F: GlobalField>(field: &F, x: &LocalElement<F>, y: &LocalElement<F>) -> Result<bool> {
    same_place(x, y)?;
    let d = valuation::place_valuation(field, &x.place, &field.sub(&x.approx, &y.approx))?;
    match (x.prec, y.prec) {
        (Precision::Exact, Precision::Exact) => Ok(d.is_infinite()),
        (px, py) if px == py => Ok(d >= px.as_value()),
        (px, py) => {
            if d < px.min(py).as_value() {
                Ok(false)
            } else {
                Err(Error::InsufficientPrecision("cosets of different precision overlap".into()))
            }
        }
    }
}

/// Compatibility at the joint precision: `v(x - y) >= min(px, py)`.
pub fn agrees<F: GlobalField>(field: &F, x: &LocalElement<F>, y: &LocalElement<F>) -> Result<bool> {
    same_place(x, y)?;
    let d = valuation::place_valuation(field, &x.place, &field.sub(&x.approx, &y.approx))?;
    Ok(d >= x.prec.min(y.prec).as_value())
}

fn residue<F: GlobalField>(field: &F, place: &Place<F::Prime>, y: &F::Elem) -> Result<F::Elem> {
    match place {
        Place::Finite(p) => Ok(field.residue_lift(p, y)),
        _ => field.infinity_residue_lift(y),
    }
}

/// Digits `z_i` of `x = sum z_i pi^i` in the fixed residue system, from
/// `i = v(x)` up to `prec - 1` (or `exact_terms` digits for exact elements).
/// Returns the starting exponent.
pub fn expansion<F: GlobalField>(
    field: &F,
    x: &LocalElement<F>,
    exact_terms: usize,
) -> Result<(i64, Vec<F::Elem>)> {
    if field.is_zero(&x.approx) {
        return Ok((x.prec.as_value().finite().unwrap_or(0), vec![]));
    }
    let start = x.approx_valuation(field).finite().unwrap();
    let end = match x.prec {
        Precision::Finite(n) => n,
        Precision::Exact => start + exact_terms as i64,
    };
    let pi = valuation::uniformizer(field, &x.place)?;
    let pi_inv = field.inv(&pi).unwrap();
    let mut y = field.mul(&x.approx, &field.pow(&pi_inv, start).unwrap());
    let mut digits = Vec::new();
    for _ in start..end {
        let z = residue(field, &x.place, &y)?;
        y = field.mul(&field.sub(&y, &z), &pi_inv);
        digits.push(z);
    }
    Ok((start, digits))
}

/// Replaces the approximation of a finite-precision element with the
/// truncated expansion `sum z_i pi^i`, a canonical representative of the coset.
pub fn canonical<F: GlobalField>(field: &F, x: &LocalElement<F>) -> Result<LocalElement<F>> {
    if x.is_exact() {
        return Ok(x.clone());
    }
    let (start, digits) = expansion(field, x, 0)?;
    let pi = valuation::uniformizer(field, &x.place)?;
    let mut acc = field.zero();
    for (i, z) in digits.iter().enumerate() {
        let term = field.mul(z, &field.pow(&pi, start + i as i64).unwrap());
        acc = field.add(&acc, &term);
    }
    Ok(LocalElement { place: x.place.clone(), approx: acc, prec: x.prec })
}

/// Renders the expansion: `sum z_i pi^i + O(pi^prec)`; at the infinite place
/// of `F_q(t)` this is the Laurent tail in powers of `t^-1`.
pub fn render<F: GlobalField>(field: &F, x: &LocalElement<F>, exact_terms: usize) -> Result<String> {
    let (start, digits) = expansion(field, x, exact_terms)?;
    let at_infinity = matches!(x.place, Place::Infinite(InfinitePlace::FunctionFieldInfinity));
    let pi = valuation::uniformizer(field, &x.place)?;
    let pi_str = {
        let s = field.fmt_elem(&pi);
        if s.chars().all(|c| c.is_ascii_alphanumeric()) {
            s
        } else {
            format!("({s})")
        }
    };
    let power = |i: i64| -> String {
        if at_infinity {
            match -i {
                0 => String::new(),
                1 => "t".into(),
                n => format!("t^{n}"),
            }
        } else {
            match i {
                0 => String::new(),
                1 => pi_str.clone(),
                n => format!("{pi_str}^{n}"),
            }
        }
    };
    let mut terms = Vec::new();
    for (k, z) in digits.iter().enumerate() {
        if field.is_zero(z) {
            continue;
        }
        let i = start + k as i64;
        let zs = field.fmt_elem(z);
        let zs = if zs.contains('+') { format!("({zs})") } else { zs };
        let p = power(i);
        terms.push(match (zs.as_str(), p.is_empty()) {
            (_, true) => zs.clone(),
            ("1", false) => p,
            _ => format!("{zs}*{p}"),
        });
    }
    match x.prec {
        Precision::Finite(n) => {
            let tail = power(n);
            terms.push(if tail.is_empty() { "O(1)".into() } else { format!("O({tail})") });
        }
        Precision::Exact if field.is_zero(&x.approx) => terms.push("0".into()),
        Precision::Exact => terms.push("...".into()),
    }
    Ok(terms.join(" + "))
}

/// An element of `R_v`.
pub struct LocalInteger<F: GlobalField>(LocalElement<F>);

impl<F: GlobalField> Clone for LocalInteger<F> {
    fn clone(&self) -> Self {
        LocalInteger(self.0.clone())
    }
}

impl<F: GlobalField> fmt::Debug for LocalInteger<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("LocalInteger").field(&self.0).finish()
    }
}

impl<F: GlobalField> LocalInteger<F> {
    pub fn new(field: &F, x: LocalElement<F>) -> Result<Self> {
        if is_integer(field, &x)? {
            Ok(LocalInteger(x))
        } else {
            Err(Error::Unsupported("element is not integral at its place".into()))
        }
    }

    pub fn element(&self) -> &LocalElement<F> {
        &self.0
    }

    pub fn into_element(self) -> LocalElement<F> {
        self.0
    }
}
