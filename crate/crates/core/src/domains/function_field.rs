//! The rational function field `F_q(t)` with ring of integers `F_q[t]`.
//!
//! Finite places are monic irreducible polynomials. The place at infinity is
//! nonarchimedean with uniformizer `1/t`; its valuation is
//! `deg(den) - deg(num)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;
use num_complex::Complex64;

use super::finite_field::{Fe, FiniteField};
use super::poly::{Poly, PolyRing};
use super::{Embedding, GlobalField, GlobalFieldSpec, InfinitePlace};
use crate::error::{Error, Result};
use crate::valuation::ValueGroup;

#[derive(Debug, Clone)]
pub struct FunctionField {
    fq: Arc<FiniteField>,
}

impl PartialEq for FunctionField {
    fn eq(&self, other: &Self) -> bool {
        self.fq.characteristic() == other.fq.characteristic() && self.fq.degree() == other.fq.degree()
    }
}

/// `num / den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    pub num: Poly,
    pub den: Poly,
}

impl FunctionField {
    pub fn new(p: u32, e: u32) -> Result<Self> {
        Ok(Self { fq: Arc::new(FiniteField::new(p, e)?) })
    }

    pub fn with_order(q: u32) -> Result<Self> {
        Ok(Self { fq: Arc::new(FiniteField::with_order(q)?) })
    }

    pub fn constants(&self) -> &FiniteField {
        &self.fq
    }

    pub fn polys(&self) -> PolyRing<'_> {
        PolyRing::new(&self.fq)
    }

    pub fn t(&self) -> RatFn {
        RatFn { num: Poly::x(), den: Poly::one() }
    }

    pub fn constant(&self, c: Fe) -> RatFn {
        RatFn { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn poly(&self, p: Poly) -> RatFn {
        RatFn { num: p, den: Poly::one() }
    }

    pub fn fraction(&self, num: Poly, den: Poly) -> Option<RatFn> {
        if den.is_zero() {
            return None;
        }
        let r = self.polys();
        if num.is_zero() {
            return Some(RatFn { num, den: Poly::one() });
        }
        let g = r.gcd(&num, &den);
        let n = r.div_exact(&num, &g).unwrap();
        let d = r.div_exact(&den, &g).unwrap();
        let (lc, dm) = r.monic(&d);
        let inv = self.fq.inv(lc).unwrap();
        Some(RatFn { num: r.scale(&n, inv), den: dm })
    }

    pub fn fmt_constant(&self, c: Fe) -> String {
        if self.fq.degree() == 1 {
            return c.to_string();
        }
        let digits = self.fq.digits(c);
        fmt_poly_with(&digits.iter().map(|&d| d.to_string()).collect::<Vec<_>>(), "a")
    }

    pub fn fmt_poly(&self, p: &Poly) -> String {
        let coeffs: Vec<String> = p.coeffs().iter().map(|&c| self.fmt_constant(c)).collect();
        fmt_poly_with(&coeffs, "t")
    }
}

/// Renders `sum coeffs[i] * sym^i`, highest degree first; zero coefficients are
/// given as `"0"`.
fn fmt_poly_with(coeffs: &[String], sym: &str) -> String {
    let mut terms = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let power = match i {
            0 => String::new(),
            1 => sym.to_string(),
            _ => format!("{sym}^{i}"),
        };
        let term = if i == 0 {
            c.clone()
        } else if c == "1" {
            power
        } else if c.contains('+') {
            format!("({c})*{power}")
        } else {
            format!("{c}*{power}")
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn wrap(s: String) -> String {
    if s.contains('+') {
        format!("({s})")
    } else {
        s
    }
}

impl GlobalField for FunctionField {
    type Ring = Poly;
    type Elem = RatFn;
    type Prime = Poly;
    type Ideal = Poly;
    type BasePrime = Poly;

    fn spec(&self) -> GlobalFieldSpec {
        GlobalFieldSpec::FunctionField { p: self.fq.characteristic(), e: self.fq.degree() }
    }

    fn degree(&self) -> u32 {
        1
    }

    fn zero(&self) -> RatFn {
        RatFn { num: Poly::zero(), den: Poly::one() }
    }

    fn one(&self) -> RatFn {
        RatFn { num: Poly::one(), den: Poly::one() }
    }

    fn from_int(&self, n: i64) -> RatFn {
        self.constant(self.fq.from_int(n))
    }

    fn add(&self, x: &RatFn, y: &RatFn) -> RatFn {
        let r = self.polys();
        if x.den == y.den {
            return self.fraction(r.add(&x.num, &y.num), x.den.clone()).unwrap();
        }
        let num = r.add(&r.mul(&x.num, &y.den), &r.mul(&y.num, &x.den));
        self.fraction(num, r.mul(&x.den, &y.den)).unwrap()
    }

    fn mul(&self, x: &RatFn, y: &RatFn) -> RatFn {
        let r = self.polys();
        self.fraction(r.mul(&x.num, &y.num), r.mul(&x.den, &y.den)).unwrap()
    }

    fn neg(&self, x: &RatFn) -> RatFn {
        RatFn { num: self.polys().neg(&x.num), den: x.den.clone() }
    }

    fn inv(&self, x: &RatFn) -> Option<RatFn> {
        if x.num.is_zero() {
            return None;
        }
        self.fraction(x.den.clone(), x.num.clone())
    }

    fn is_zero(&self, x: &RatFn) -> bool {
        x.num.is_zero()
    }

    fn ring_to_field(&self, r: &Poly) -> RatFn {
        self.poly(r.clone())
    }

    fn numerator_denominator(&self, x: &RatFn) -> (Poly, Poly) {
        (x.num.clone(), x.den.clone())
    }

    fn ring_is_zero(&self, r: &Poly) -> bool {
        r.is_zero()
    }

    fn ring_mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.polys().mul(a, b)
    }

    fn unit_ideal(&self) -> Poly {
        Poly::one()
    }

    fn principal_ideal(&self, r: &Poly) -> Result<Poly> {
        if r.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(self.polys().monic(r).1)
    }

    fn ideal_mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.polys().mul(a, b)
    }

    fn ideal_norm(&self, a: &Poly) -> BigUint {
        num_traits::pow(BigUint::from(self.fq.order()), a.degree().unwrap_or(0))
    }

    fn prime_ideal(&self, p: &Poly) -> Poly {
        p.clone()
    }

    fn factor_ideal(&self, a: &Poly) -> Result<BTreeMap<Poly, u32>> {
        if a.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(self.polys().factor(a).1.into_iter().collect())
    }

    fn primes_above(&self, p: &Poly) -> Result<Vec<Poly>> {
        self.check_prime(p).map_err(|_| Error::NotPrime(self.fmt_poly(p)))?;
        Ok(vec![p.clone()])
    }

    fn prime_below(&self, p: &Poly) -> Poly {
        p.clone()
    }

    fn ramification_index(&self, _p: &Poly) -> u32 {
        1
    }

    fn residue_degree(&self, p: &Poly) -> u32 {
        p.degree().unwrap_or(0) as u32
    }

    fn residue_field_size(&self, p: &Poly) -> BigUint {
        self.ideal_norm(p)
    }

    fn check_prime(&self, p: &Poly) -> Result<()> {
        if p.is_monic() && self.polys().is_irreducible(p) {
            Ok(())
        } else {
            Err(Error::PlaceMismatch(format!("{} is not monic irreducible", self.fmt_poly(p))))
        }
    }

    fn int_valuation(&self, p: &Poly, r: &Poly) -> ValueGroup {
        match self.polys().order_at(r, p) {
            None => ValueGroup::Infinity,
            Some(k) => ValueGroup::Finite(k as i64),
        }
    }

    fn uniformizer_candidates(&self, p: &Poly) -> Vec<RatFn> {
        vec![self.poly(p.clone())]
    }

    fn clearing_element(&self, p: &Poly) -> Poly {
        p.clone()
    }

    fn residue_lift(&self, p: &Poly, x: &RatFn) -> RatFn {
        let r = self.polys();
        let inv = r.inv_mod(&x.den, p).expect("denominator prime to the place");
        self.poly(r.mulmod(&x.num, &inv, p))
    }

    fn infinity_valuation(&self, x: &RatFn) -> Result<ValueGroup> {
        Ok(match x.num.degree() {
            None => ValueGroup::Infinity,
            Some(n) => ValueGroup::Finite(x.den.deg_i64() - n as i64),
        })
    }

    fn infinity_uniformizer(&self) -> Result<RatFn> {
        Ok(self.fraction(Poly::one(), Poly::x()).unwrap())
    }

    fn infinity_residue_lift(&self, x: &RatFn) -> Result<RatFn> {
        let c = if x.num.deg_i64() == x.den.deg_i64() { x.num.lead() } else { 0 };
        Ok(self.constant(c))
    }

    fn infinite_places(&self) -> Vec<InfinitePlace> {
        vec![InfinitePlace::FunctionFieldInfinity]
    }

    fn embeddings(&self) -> Result<Vec<Embedding>> {
        Err(Error::Unsupported("the infinite place of Fq(t) is nonarchimedean".into()))
    }

    fn embed(&self, _x: &RatFn) -> Result<Vec<Complex64>> {
        self.embeddings().map(|_| vec![])
    }

    fn fmt_elem(&self, x: &RatFn) -> String {
        let num = self.fmt_poly(&x.num);
        if x.den.is_one() {
            return num;
        }
        format!("{}/{}", wrap(num), wrap(self.fmt_poly(&x.den)))
    }

    fn fmt_prime(&self, p: &Poly) -> String {
        self.fmt_poly(p)
    }

    fn fmt_ideal(&self, a: &Poly) -> String {
        format!("({})", self.fmt_poly(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_examples_over_f3() {
        let k = FunctionField::new(3, 1).unwrap();
        let t = Poly::x();
        let t1 = Poly::new(vec![1, 1]);
        let prod = k.ideal_mul(&t, &t1);
        assert_eq!(prod, Poly::new(vec![0, 1, 1]));
        assert_eq!(k.fmt_poly(&prod), "t^2+t");
        let f = k.factor_ideal(&prod).unwrap();
        assert_eq!(f, BTreeMap::from([(t.clone(), 1), (t1, 1)]));
        assert!(matches!(k.primes_above(&prod), Err(Error::NotPrime(_))));
    }

    #[test]
    fn infinity_valuation_examples() {
        let k = FunctionField::new(3, 1).unwrap();
        let t2 = k.poly(Poly::new(vec![0, 0, 1]));
        assert_eq!(k.infinity_valuation(&t2).unwrap(), ValueGroup::Finite(-2));
        let u = k.infinity_uniformizer().unwrap();
        assert_eq!(k.infinity_valuation(&u).unwrap(), ValueGroup::Finite(1));
        let x = k.fraction(Poly::new(vec![1, 1]), Poly::new(vec![1, 0, 1])).unwrap();
        assert_eq!(k.infinity_valuation(&x).unwrap(), ValueGroup::Finite(1));
        assert_eq!(k.infinity_valuation(&k.zero()).unwrap(), ValueGroup::Infinity);
    }

    #[test]
    fn display_over_f4() {
        let k = FunctionField::new(2, 2).unwrap();
        let a = k.constants().generator();
        let p = Poly::new(vec![1, k.constants().add(a, 1), 1]);
        assert_eq!(k.fmt_poly(&p), "t^2+(a+1)*t+1");
        let x = k.fraction(Poly::one(), Poly::x()).unwrap();
        assert_eq!(k.fmt_elem(&x), "1/t");
    }
}
