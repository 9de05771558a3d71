//! Quadratic fields `Q(sqrt d)` and their maximal orders `Z[w]`, with
//! `w = (1 + sqrt d)/2` when `d = 1 mod 4` and `w = sqrt d` otherwise.
//!
//! Ideals are Hermite normal forms over the integral basis `{1, w}`:
//! `I = aZ + (b + c w)Z` with `a, c > 0`, `0 <= b < a`, and `c | a`, `c | b`.
//! Factorization goes through the norm: the content `c` contributes the
//! rational primes dividing it, and the primitive part `(a/c, b/c + w)` meets
//! exactly one prime above each `p | a/c`, picked out by the residue of `w`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::integers::{self, modp};
use super::{embed_affine, Embedding, GlobalField, GlobalFieldSpec, InfinitePlace};
use crate::error::{Error, Result};
use crate::valuation::ValueGroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticField {
    d: i64,
    disc: i64,
    // w^2 = trace * w - norm
    trace: i64,
    norm: i64,
}

/// `a + b w`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

/// `(a + b w) / den`, `den > 0` and `gcd(a, b, den) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub a: BigInt,
    pub b: BigInt,
    pub den: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Splitting {
    Ramified,
    Split,
    Inert,
}

/// A maximal ideal over the rational prime `p`: `(p, w - r)` when `p` splits
/// or ramifies (`r` a root of the minimal polynomial of `w` modulo `p`), and
/// `(p)` when `p` is inert (`r = 0`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadPrime {
    pub p: u64,
    pub r: u64,
    pub kind: Splitting,
}

impl QuadPrime {
    pub fn ramification(&self) -> u32 {
        if self.kind == Splitting::Ramified {
            2
        } else {
            1
        }
    }

    pub fn residue_degree(&self) -> u32 {
        if self.kind == Splitting::Inert {
            2
        } else {
            1
        }
    }
}

/// Hermite normal form `aZ + (b + c w)Z` of a nonzero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hnf {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl Hnf {
    pub fn unit() -> Self {
        Hnf { a: BigInt::one(), b: BigInt::zero(), c: BigInt::one() }
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.c
    }

    /// HNF of the lattice spanned by `(x, y) = x + y w`; `None` unless of rank 2.
    pub fn from_vectors(vs: &[(BigInt, BigInt)]) -> Option<Self> {
        // running basis: a * (1, 0) and (b, c)
        let mut a = BigInt::zero();
        let (mut b, mut c) = (BigInt::zero(), BigInt::zero());
        for (x, y) in vs {
            if y.is_zero() {
                a = a.gcd(x);
                continue;
            }
            if c.is_zero() {
                b = x.clone();
                c = y.clone();
                continue;
            }
            let g = c.extended_gcd(y);
            // new row with y-entry gcd; the eliminated combination has y = 0
            let nb = &g.x * &b + &g.y * x;
            let nc = g.gcd.clone();
            let zx = (y / &nc) * &b - (&c / &nc) * x;
            a = a.gcd(&zx);
            b = nb;
            c = nc;
        }
        if a.is_zero() || c.is_zero() {
            return None;
        }
        if c.is_negative() {
            b = -b;
            c = -c;
        }
        b = b.mod_floor(&a);
        Some(Hnf { a, b, c })
    }

    pub fn basis(&self) -> [QuadInt; 2] {
        [
            QuadInt { a: self.a.clone(), b: BigInt::zero() },
            QuadInt { a: self.b.clone(), b: self.c.clone() },
        ]
    }

    pub fn contains(&self, x: &QuadInt) -> bool {
        if !x.b.is_multiple_of(&self.c) {
            return false;
        }
        let k = &x.b / &self.c;
        (&x.a - k * &self.b).is_multiple_of(&self.a)
    }

    pub fn is_unit(&self) -> bool {
        self.a.is_one() && self.c.is_one()
    }
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt { a: a.into(), b: b.into() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn content(&self) -> BigInt {
        self.a.gcd(&self.b)
    }
}

impl QuadElem {
    fn normalize(a: BigInt, b: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let (mut a, mut b, mut den) = if den.is_negative() { (-a, -b, -den) } else { (a, b, den) };
        let g = integers::gcd3(&a, &b, &den);
        if !g.is_one() && !g.is_zero() {
            a /= &g;
            b /= &g;
            den /= &g;
        }
        if a.is_zero() && b.is_zero() {
            den = BigInt::one();
        }
        QuadElem { a, b, den }
    }

    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self::normalize(a.into(), b.into(), den.into())
    }

    pub fn integral(r: &QuadInt) -> Self {
        QuadElem { a: r.a.clone(), b: r.b.clone(), den: BigInt::one() }
    }

    pub fn numerator(&self) -> QuadInt {
        QuadInt { a: self.a.clone(), b: self.b.clone() }
    }
}

impl QuadraticField {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !integers::is_squarefree(d) {
            return Err(Error::InvalidField(format!("{d} is not a squarefree integer other than 0, 1")));
        }
        let (disc, trace, norm) = if d.rem_euclid(4) == 1 { (d, 1, (1 - d) / 4) } else { (4 * d, 0, -d) };
        Ok(Self { d, disc, trace, norm })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn discriminant(&self) -> i64 {
        self.disc
    }

    /// Trace of `w`.
    pub fn omega_trace(&self) -> i64 {
        self.trace
    }

    /// Norm of `w`.
    pub fn omega_norm(&self) -> i64 {
        self.norm
    }

    pub fn is_imaginary(&self) -> bool {
        self.d < 0
    }

    pub fn omega(&self) -> QuadElem {
        QuadElem::new(0, 1, 1)
    }

    pub fn int_mul(&self, x: &QuadInt, y: &QuadInt) -> QuadInt {
        let n = BigInt::from(self.norm);
        let t = BigInt::from(self.trace);
        let bb = &x.b * &y.b;
        QuadInt { a: &x.a * &y.a - &n * &bb, b: &x.a * &y.b + &y.a * &x.b + t * bb }
    }

    pub fn int_conj(&self, x: &QuadInt) -> QuadInt {
        QuadInt { a: &x.a + BigInt::from(self.trace) * &x.b, b: -&x.b }
    }

    pub fn int_norm(&self, x: &QuadInt) -> BigInt {
        &x.a * &x.a + BigInt::from(self.trace) * &x.a * &x.b + BigInt::from(self.norm) * &x.b * &x.b
    }

    pub fn elem_norm(&self, x: &QuadElem) -> num_rational::BigRational {
        num_rational::BigRational::new(self.int_norm(&x.numerator()), &x.den * &x.den)
    }

    /// `f(s) = s^2 - trace s + norm`, the minimal polynomial of `w`.
    fn minpoly_at(&self, s: &BigInt) -> BigInt {
        s * s - BigInt::from(self.trace) * s + BigInt::from(self.norm)
    }

    fn minpoly_roots_mod(&self, p: u64) -> Vec<u64> {
        if p == 2 {
            return (0..2).filter(|&r| modp(&self.minpoly_at(&BigInt::from(r)), 2) == 0).collect();
        }
        let dm = (self.disc as i128).rem_euclid(p as i128) as u64;
        let half = integers::inv_mod(2, p).unwrap();
        let t = (self.trace as i128).rem_euclid(p as i128) as u64;
        match integers::sqrt_mod(dm, p) {
            None => vec![],
            Some(s) => {
                let r1 = integers::mul_mod((t + s) % p, half, p);
                let r2 = integers::mul_mod((t + p - s) % p, half, p);
                let mut v = vec![r1, r2];
                v.sort();
                v.dedup();
                v
            }
        }
    }

    /// Ideal generated by the given elements.
    pub fn ideal_from_generators(&self, gens: &[QuadInt]) -> Result<Hnf> {
        let w = QuadInt::new(0, 1);
        let mut vs = Vec::new();
        for g in gens {
            let gw = self.int_mul(g, &w);
            vs.push((g.a.clone(), g.b.clone()));
            vs.push((gw.a, gw.b));
        }
        Hnf::from_vectors(&vs).ok_or(Error::ZeroIdeal)
    }

    /// `I` is closed under multiplication by `w`.
    pub fn is_ideal(&self, h: &Hnf) -> bool {
        let w = QuadInt::new(0, 1);
        h.basis().iter().all(|x| h.contains(&self.int_mul(x, &w)))
    }

    fn prime_for_residue(&self, p: u64, r: u64) -> Result<QuadPrime> {
        self.primes_above(&p)?
            .into_iter()
            .find(|q| q.kind == Splitting::Ramified || q.r == r)
            .ok_or_else(|| Error::Unsupported(format!("module is not an ideal at {p}")))
    }

    /// Root of the minimal polynomial of `w` modulo `p^k` lifting the residue `r`.
    fn hensel_root(&self, prime: &QuadPrime, k: u32) -> BigInt {
        let p = BigInt::from(prime.p);
        let r = BigInt::from(prime.r);
        let deriv = BigInt::from(2) * &r - BigInt::from(self.trace);
        let u = integers::inv_mod_big(&deriv, &p).expect("simple root at a split prime");
        let mut rho = r;
        let mut m = p.clone();
        for _ in 1..k {
            m *= &p;
            rho = (&rho - self.minpoly_at(&rho) * &u).mod_floor(&m);
        }
        rho
    }
}

pub(crate) fn fmt_affine(a: &BigInt, b: &BigInt, sym: &str) -> String {
    let mut s = String::new();
    if !a.is_zero() {
        s.push_str(&a.to_string());
    }
    if !b.is_zero() {
        let neg = b.is_negative();
        if neg {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        let m = b.abs();
        if m.is_one() {
            s.push_str(sym);
        } else {
            s.push_str(&format!("{m}*{sym}"));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_affine(&self.a, &self.b, "w"))
    }
}

impl GlobalField for QuadraticField {
    type Ring = QuadInt;
    type Elem = QuadElem;
    type Prime = QuadPrime;
    type Ideal = Hnf;
    type BasePrime = u64;

    fn spec(&self) -> GlobalFieldSpec {
        GlobalFieldSpec::Quadratic { d: self.d }
    }

    fn degree(&self) -> u32 {
        2
    }

    fn zero(&self) -> QuadElem {
        QuadElem::new(0, 0, 1)
    }

    fn one(&self) -> QuadElem {
        QuadElem::new(1, 0, 1)
    }

    fn from_int(&self, n: i64) -> QuadElem {
        QuadElem::new(n, 0, 1)
    }

    fn add(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        QuadElem::normalize(&x.a * &y.den + &y.a * &x.den, &x.b * &y.den + &y.b * &x.den, &x.den * &y.den)
    }

    fn mul(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        let n = self.int_mul(&x.numerator(), &y.numerator());
        QuadElem::normalize(n.a, n.b, &x.den * &y.den)
    }

    fn neg(&self, x: &QuadElem) -> QuadElem {
        QuadElem { a: -&x.a, b: -&x.b, den: x.den.clone() }
    }

    fn inv(&self, x: &QuadElem) -> Option<QuadElem> {
        if self.is_zero(x) {
            return None;
        }
        let num = x.numerator();
        let c = self.int_conj(&num);
        let n = self.int_norm(&num);
        Some(QuadElem::normalize(c.a * &x.den, c.b * &x.den, n))
    }

    fn is_zero(&self, x: &QuadElem) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }

    fn ring_to_field(&self, r: &QuadInt) -> QuadElem {
        QuadElem::normalize(r.a.clone(), r.b.clone(), BigInt::one())
    }

    fn numerator_denominator(&self, x: &QuadElem) -> (QuadInt, QuadInt) {
        (x.numerator(), QuadInt { a: x.den.clone(), b: BigInt::zero() })
    }

    fn ring_is_zero(&self, r: &QuadInt) -> bool {
        r.is_zero()
    }

    fn ring_mul(&self, a: &QuadInt, b: &QuadInt) -> QuadInt {
        self.int_mul(a, b)
    }

    fn unit_ideal(&self) -> Hnf {
        Hnf::unit()
    }

    fn principal_ideal(&self, r: &QuadInt) -> Result<Hnf> {
        self.ideal_from_generators(std::slice::from_ref(r))
    }

    fn ideal_mul(&self, x: &Hnf, y: &Hnf) -> Hnf {
        let mut vs = Vec::with_capacity(4);
        for u in x.basis() {
            for v in y.basis() {
                let w = self.int_mul(&u, &v);
                vs.push((w.a, w.b));
            }
        }
        Hnf::from_vectors(&vs).expect("product of nonzero ideals is nonzero")
    }

    fn ideal_norm(&self, x: &Hnf) -> BigUint {
        integers::biguint_of(&x.norm())
    }

    fn prime_ideal(&self, p: &QuadPrime) -> Hnf {
        let pp = BigInt::from(p.p);
        match p.kind {
            Splitting::Inert => Hnf { a: pp.clone(), b: BigInt::zero(), c: pp },
            _ => Hnf { a: pp, b: BigInt::from((p.p - p.r) % p.p), c: BigInt::one() },
        }
    }

    fn factor_ideal(&self, x: &Hnf) -> Result<BTreeMap<QuadPrime, u32>> {
        let mut out = BTreeMap::new();
        for (p, k) in integers::factor(&x.c)? {
            for q in self.primes_above(&p)? {
                let e = q.ramification();
                *out.entry(q).or_insert(0) += k * e;
            }
        }
        let a = &x.a / &x.c;
        let b = &x.b / &x.c;
        for (p, k) in integers::factor(&a)? {
            let r = modp(&-&b, p);
            let q = self.prime_for_residue(p, r)?;
            if q.kind == Splitting::Inert {
                return Err(Error::Unsupported("inert prime in primitive ideal".into()));
            }
            *out.entry(q).or_insert(0) += k;
        }
        Ok(out)
    }

    fn primes_above(&self, p: &u64) -> Result<Vec<QuadPrime>> {
        let p = *p;
        if !integers::is_prime(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        let ramified = (self.disc as i128).rem_euclid(p as i128) == 0;
        let roots = self.minpoly_roots_mod(p);
        Ok(if ramified {
            vec![QuadPrime { p, r: roots[0], kind: Splitting::Ramified }]
        } else if roots.is_empty() {
            vec![QuadPrime { p, r: 0, kind: Splitting::Inert }]
        } else {
            roots.into_iter().map(|r| QuadPrime { p, r, kind: Splitting::Split }).collect()
        })
    }

    fn prime_below(&self, p: &QuadPrime) -> u64 {
        p.p
    }

    fn ramification_index(&self, p: &QuadPrime) -> u32 {
        p.ramification()
    }

    fn residue_degree(&self, p: &QuadPrime) -> u32 {
        p.residue_degree()
    }

    fn residue_field_size(&self, p: &QuadPrime) -> BigUint {
        num_traits::pow(BigUint::from(p.p), p.residue_degree() as usize)
    }

    fn check_prime(&self, p: &QuadPrime) -> Result<()> {
        let ok = self.primes_above(&p.p).map(|v| v.contains(p)).unwrap_or(false);
        if ok {
            Ok(())
        } else {
            Err(Error::PlaceMismatch(format!("{p:?} is not a prime of Q(sqrt {})", self.d)))
        }
    }

    fn int_valuation(&self, q: &QuadPrime, x: &QuadInt) -> ValueGroup {
        if x.is_zero() {
            return ValueGroup::Infinity;
        }
        let content = x.content();
        let k = integers::p_adic_order(&content, q.p).unwrap() as i64;
        let scale = integers::big_pow(q.p, k as u32);
        let y = QuadInt { a: &x.a / &scale, b: &x.b / &scale };
        let rest = match q.kind {
            Splitting::Inert => 0,
            Splitting::Ramified => integers::p_adic_order(&self.int_norm(&y), q.p).unwrap() as i64,
            Splitting::Split => {
                if modp(&(&y.a + &y.b * BigInt::from(q.r)), q.p) == 0 {
                    integers::p_adic_order(&self.int_norm(&y), q.p).unwrap() as i64
                } else {
                    0
                }
            }
        };
        ValueGroup::Finite(k * q.ramification() as i64 + rest)
    }

    fn uniformizer_candidates(&self, q: &QuadPrime) -> Vec<QuadElem> {
        if q.kind == Splitting::Inert {
            return vec![self.from_int(q.p as i64)];
        }
        let (p, r) = (q.p as i64, q.r as i64);
        let first = if r == 0 { 0 } else { r - p };
        [first, r, r + p, r - p]
            .into_iter()
            .map(|s| QuadElem::new(-s, 1, 1))
            .collect()
    }

    fn clearing_element(&self, q: &QuadPrime) -> QuadInt {
        QuadInt::new(q.p, 0)
    }

    fn residue_lift(&self, q: &QuadPrime, x: &QuadElem) -> QuadElem {
        let p = BigInt::from(q.p);
        match q.kind {
            Splitting::Inert => {
                let inv = integers::inv_mod_big(&x.den, &p).expect("unit denominator at inert prime");
                QuadElem::new((&x.a * &inv).mod_floor(&p), (&x.b * &inv).mod_floor(&p), 1)
            }
            Splitting::Ramified => {
                let inv = integers::inv_mod_big(&x.den, &p).expect("unit denominator at ramified prime");
                let v = (&x.a + &x.b * BigInt::from(q.r)) * inv;
                QuadElem::new(v.mod_floor(&p), 0, 1)
            }
            Splitting::Split => {
                let j = integers::p_adic_order(&x.den, q.p).unwrap();
                let pj = integers::big_pow(q.p, j);
                let m = &x.den / &pj;
                let modulus = &pj * &p;
                let rho = self.hensel_root(q, j + 1);
                let num = (&x.a + &x.b * rho).mod_floor(&modulus);
                debug_assert!(num.is_multiple_of(&pj));
                let inv = integers::inv_mod_big(&m, &p).unwrap();
                QuadElem::new(((num / pj) * inv).mod_floor(&p), 0, 1)
            }
        }
    }

    fn infinite_places(&self) -> Vec<InfinitePlace> {
        if self.d > 0 {
            vec![InfinitePlace::Real(0), InfinitePlace::Real(1)]
        } else {
            vec![InfinitePlace::ComplexPair(0)]
        }
    }

    fn embeddings(&self) -> Result<Vec<Embedding>> {
        let s = (self.d.unsigned_abs() as f64).sqrt();
        let images: Vec<(InfinitePlace, Complex64)> = if self.d > 0 {
            let (p, m) = if self.trace == 1 { ((1.0 + s) / 2.0, (1.0 - s) / 2.0) } else { (s, -s) };
            vec![
                (InfinitePlace::Real(0), Complex64::new(p, 0.0)),
                (InfinitePlace::Real(1), Complex64::new(m, 0.0)),
            ]
        } else {
            let z = if self.trace == 1 { Complex64::new(0.5, s / 2.0) } else { Complex64::new(0.0, s) };
            vec![(InfinitePlace::ComplexPair(0), z)]
        };
        Ok(images.into_iter().map(|(place, generator_image)| Embedding { place, generator_image }).collect())
    }

    fn embed(&self, x: &QuadElem) -> Result<Vec<Complex64>> {
        let a = x.a.to_f64().unwrap_or(f64::NAN);
        let b = x.b.to_f64().unwrap_or(f64::NAN);
        let den = x.den.to_f64().unwrap_or(f64::NAN);
        Ok(self.embeddings()?.iter().map(|e| embed_affine(a, b, e.generator_image) / den).collect())
    }

    fn fmt_elem(&self, x: &QuadElem) -> String {
        let num = fmt_affine(&x.a, &x.b, "w");
        if x.den.is_one() {
            num
        } else if x.a.is_zero() || x.b.is_zero() {
            format!("{num}/{}", x.den)
        } else {
            format!("({num})/{}", x.den)
        }
    }

    fn fmt_prime(&self, q: &QuadPrime) -> String {
        match q.kind {
            Splitting::Inert => format!("[{}]", q.p),
            _ => format!("[{}, {}]", q.p, fmt_affine(&BigInt::from((q.p - q.r) % q.p), &BigInt::one(), "w")),
        }
    }

    fn fmt_ideal(&self, h: &Hnf) -> String {
        if h.is_unit() {
            return "(1)".into();
        }
        format!("[{}, {}]", h.a, fmt_affine(&h.b, &h.c, "w"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(d: i64) -> QuadraticField {
        QuadraticField::new(d).unwrap()
    }

    /// Brute-force module multiplication: span of all products of the
    /// generator sets, reduced independently of `ideal_mul`.
    fn brute_product(k: &QuadraticField, x: &Hnf, y: &Hnf) -> Hnf {
        let mut gens = Vec::new();
        for u in x.basis() {
            for v in y.basis() {
                gens.push(k.int_mul(&u, &v));
            }
        }
        k.ideal_from_generators(&gens).unwrap()
    }

    #[test]
    fn two_ramifies_in_z_sqrt_minus5() {
        let k = field(-5);
        let ps = k.primes_above(&2).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].kind, Splitting::Ramified);
        let v2 = k.prime_ideal(&ps[0]);
        assert_eq!(v2, k.ideal_from_generators(&[QuadInt::new(2, 0), QuadInt::new(1, 1)]).unwrap());
        let sq = brute_product(&k, &v2, &v2);
        assert_eq!(sq, k.principal_ideal(&QuadInt::new(2, 0)).unwrap());
        assert_eq!(k.ideal_mul(&v2, &v2), sq);
        assert_eq!(k.fmt_prime(&ps[0]), "[2, 1+w]");
    }

    #[test]
    fn seven_splits_and_eleven_is_inert_in_z_sqrt_minus5() {
        let k = field(-5);
        let ps = k.primes_above(&7).unwrap();
        assert_eq!(ps.len(), 2);
        let (r1, r2) = (ps[0].r, ps[1].r);
        assert_eq!(r1 + r2, 7);
        assert_eq!((r1 * r1 + 5) % 7, 0);
        let prod = brute_product(&k, &k.prime_ideal(&ps[0]), &k.prime_ideal(&ps[1]));
        assert_eq!(prod, k.principal_ideal(&QuadInt::new(7, 0)).unwrap());
        // -5 is not a square mod 11
        assert!((0..11u64).all(|r| (r * r + 5) % 11 != 0));
        let ps = k.primes_above(&11).unwrap();
        assert_eq!(ps, vec![QuadPrime { p: 11, r: 0, kind: Splitting::Inert }]);
        assert_eq!(k.prime_ideal(&ps[0]), k.principal_ideal(&QuadInt::new(11, 0)).unwrap());
    }

    #[test]
    fn six_factors_as_v2_squared_v3_v3prime() {
        let k = field(-5);
        let six = k.principal_ideal(&QuadInt::new(6, 0)).unwrap();
        let f = k.factor_ideal(&six).unwrap();
        let v2 = k.primes_above(&2).unwrap()[0].clone();
        let v3 = k.primes_above(&3).unwrap();
        assert_eq!(f, BTreeMap::from([(v2, 2), (v3[0].clone(), 1), (v3[1].clone(), 1)]));
        assert_eq!(k.ideal_from_factors(&f), six);
        // (3, 1+sqrt-5) and (3, 1-sqrt-5) are the two primes above 3
        let a = k.ideal_from_generators(&[QuadInt::new(3, 0), QuadInt::new(1, 1)]).unwrap();
        let b = k.ideal_from_generators(&[QuadInt::new(3, 0), QuadInt::new(1, -1)]).unwrap();
        let mut both = vec![a, b];
        both.sort_by_key(|h| h.b.clone());
        let mut via = vec![k.prime_ideal(&v3[0]), k.prime_ideal(&v3[1])];
        via.sort_by_key(|h| h.b.clone());
        assert_eq!(both, via);
    }

    #[test]
    fn inert_prime_has_residue_degree_two() {
        let k = field(-1);
        let ps = k.primes_above(&3).unwrap();
        assert_eq!(ps, vec![QuadPrime { p: 3, r: 0, kind: Splitting::Inert }]);
        assert_eq!(k.ideal_norm(&k.prime_ideal(&ps[0])), BigUint::from(9u32));
        assert_eq!(k.fmt_prime(&ps[0]), "[3]");
    }

    #[test]
    fn hnf_of_prime_ideals_is_closed_under_w() {
        for d in [-1, -5, -23, 2, 5, 13, -47] {
            let k = field(d);
            for p in [2u64, 3, 5, 7, 11, 13, 23, 47] {
                let mut total = 0;
                for q in k.primes_above(&p).unwrap() {
                    let h = k.prime_ideal(&q);
                    assert!(k.is_ideal(&h));
                    assert_eq!(k.ideal_norm(&h), k.residue_field_size(&q));
                    total += q.ramification() * q.residue_degree();
                    assert_eq!(k.factor_ideal(&h).unwrap(), BTreeMap::from([(q, 1)]));
                }
                assert_eq!(total, 2);
            }
        }
    }

    #[test]
    fn arithmetic_and_inverse() {
        let k = field(-5);
        let x = QuadElem::new(1, 1, 3);
        let y = k.inv(&x).unwrap();
        assert_eq!(k.mul(&x, &y), k.one());
        assert_eq!(k.fmt_elem(&QuadElem::new(1, 1, 2)), "(1+w)/2");
        assert_eq!(k.fmt_elem(&QuadElem::new(0, -3, 2)), "-3*w/2");
        let k1 = field(5);
        let w = k1.omega();
        // w^2 = w + 1 when d = 5
        assert_eq!(k1.mul(&w, &w), k1.add(&w, &k1.one()));
    }

    #[test]
    fn residue_lift_at_split_prime_with_denominator() {
        let k = field(-5);
        let ps = k.primes_above(&3).unwrap();
        for q in &ps {
            // pi^2 / 3 has valuation 1 at q but a denominator divisible by 3
            let pi = k
                .uniformizer_candidates(q)
                .into_iter()
                .find(|c| k.int_valuation(q, &c.numerator()) == ValueGroup::Finite(1))
                .unwrap();
            let y = k.add(&k.div(&k.mul(&pi, &pi), &k.from_int(3)).unwrap(), &k.from_int(2));
            assert_eq!(y.den, BigInt::from(3));
            let z = k.residue_lift(q, &y);
            assert_eq!(z, k.from_int(2));
        }
    }

    #[test]
    fn embeddings_of_sqrt2_and_i() {
        let k = field(2);
        let e = k.embed(&k.omega()).unwrap();
        assert!((e[0].re - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!((e[1].re + std::f64::consts::SQRT_2).abs() < 1e-12);
        let g = field(-1);
        let e = g.embed(&g.omega()).unwrap();
        assert_eq!(e.len(), 1);
        assert!((e[0].im - 1.0).abs() < 1e-12 && e[0].re.abs() < 1e-12);
    }
}
