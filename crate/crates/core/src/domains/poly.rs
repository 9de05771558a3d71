//! Dense univariate polynomials over `F_q` and their factorization
//! (square-free decomposition, distinct-degree, then Cantor–Zassenhaus
//! equal-degree splitting with a fixed seed).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::finite_field::{Fe, FiniteField};

const SPLIT_SEED: u64 = 0x05ee_d0ad_a1e5;

/// Coefficients lowest degree first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<Fe>);

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.0)
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(vec![])
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    pub fn constant(c: Fe) -> Self {
        Poly::new(vec![c])
    }

    /// `t`
    pub fn x() -> Self {
        Poly(vec![0, 1])
    }

    pub fn monomial(c: Fe, n: usize) -> Self {
        let mut v = vec![0; n + 1];
        v[n] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [1]
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn deg_i64(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn lead(&self) -> Fe {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }
}

/// Polynomial arithmetic bound to a coefficient field.
#[derive(Clone, Copy)]
pub struct PolyRing<'a> {
    pub f: &'a FiniteField,
}

impl<'a> PolyRing<'a> {
    pub fn new(f: &'a FiniteField) -> Self {
        Self { f }
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.0.len().max(b.0.len());
        let v = (0..n)
            .map(|i| {
                let x = a.0.get(i).copied().unwrap_or(0);
                let y = b.0.get(i).copied().unwrap_or(0);
                self.f.add(x, y)
            })
            .collect();
        Poly::new(v)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly::new(a.0.iter().map(|&c| self.f.neg(c)).collect())
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly, c: Fe) -> Poly {
        Poly::new(a.0.iter().map(|&x| self.f.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0; a.0.len() + b.0.len() - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                v[i + j] = self.f.add(v[i + j], self.f.mul(x, y));
            }
        }
        Poly::new(v)
    }

    pub fn pow(&self, a: &Poly, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, a: &Poly, b: &Poly) -> (Poly, Poly) {
        let db = b.degree().expect("division by zero polynomial");
        let inv_lead = self.f.inv(b.lead()).unwrap();
        let mut r = a.0.clone();
        if r.len() <= db {
            return (Poly::zero(), a.clone());
        }
        let mut q = vec![0; r.len() - db];
        for k in (db..r.len()).rev() {
            let c = self.f.mul(r[k], inv_lead);
            if c == 0 {
                continue;
            }
            q[k - db] = c;
            for (i, &bc) in b.0.iter().enumerate() {
                r[k - db + i] = self.f.sub(r[k - db + i], self.f.mul(c, bc));
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Poly {
        self.divrem(a, b).1
    }

    /// Exact quotient, `None` if `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly, b: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(a, b);
        r.is_zero().then_some(q)
    }

    /// Leading coefficient and monic associate.
    pub fn monic(&self, a: &Poly) -> (Fe, Poly) {
        if a.is_zero() {
            return (0, Poly::zero());
        }
        let lc = a.lead();
        let inv = self.f.inv(lc).unwrap();
        (lc, self.scale(a, inv))
    }

    /// Monic gcd (zero if both inputs vanish).
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x).1
    }

    /// Returns `(g, s, t)` with `s a + t b = g` monic.
    pub fn ext_gcd(&self, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = self.f.inv(r0.lead()).unwrap();
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn inv_mod(&self, a: &Poly, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.ext_gcd(a, m);
        g.is_one().then(|| self.rem(&s, m))
    }

    pub fn mulmod(&self, a: &Poly, b: &Poly, m: &Poly) -> Poly {
        self.rem(&self.mul(a, b), m)
    }

    pub fn powmod(&self, a: &Poly, e: &BigUint, m: &Poly) -> Poly {
        let mut acc = self.rem(&Poly::one(), m);
        let base = self.rem(a, m);
        for i in (0..e.bits()).rev() {
            acc = self.mulmod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mulmod(&acc, &base, m);
            }
        }
        acc
    }

    pub fn derivative(&self, a: &Poly) -> Poly {
        let v = a
            .0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.f.mul(c, self.f.from_int(i as i64)))
            .collect();
        Poly::new(v)
    }

    fn pth_root(&self, a: &Poly) -> Poly {
        let p = self.f.characteristic() as usize;
        let v = a.0.iter().step_by(p).map(|&c| self.f.pth_root(c)).collect();
        Poly::new(v)
    }

    pub fn eval(&self, a: &Poly, x: Fe) -> Fe {
        a.0.iter().rev().fold(0, |acc, &c| self.f.add(self.f.mul(acc, x), c))
    }

    /// Square-free decomposition of a monic polynomial: pairs `(g, m)` of
    /// square-free coprime monic polynomials with `a = prod g^m`.
    pub fn squarefree(&self, a: &Poly) -> Vec<(Poly, u32)> {
        let mut out = Vec::new();
        if a.degree().unwrap_or(0) == 0 {
            return out;
        }
        let p = self.f.characteristic();
        let d = self.derivative(a);
        if d.is_zero() {
            for (g, m) in self.squarefree(&self.pth_root(a)) {
                out.push((g, m * p));
            }
            return out;
        }
        let mut c = self.gcd(a, &d);
        let mut w = self.div_exact(a, &c).unwrap();
        let mut i = 1;
        while !w.is_one() {
            let y = self.gcd(&w, &c);
            let fac = self.div_exact(&w, &y).unwrap();
            if !fac.is_one() {
                out.push((fac, i));
            }
            i += 1;
            w = y;
            c = self.div_exact(&c, &w).unwrap();
        }
        if !c.is_one() {
            for (g, m) in self.squarefree(&self.pth_root(&c)) {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Distinct-degree factorization of a square-free monic polynomial.
    pub fn distinct_degree(&self, a: &Poly) -> Vec<(Poly, usize)> {
        let q = BigUint::from(self.f.order());
        let mut out = Vec::new();
        let mut rest = a.clone();
        let x = Poly::x();
        let mut h = self.rem(&x, &rest);
        let mut d = 0;
        while let Some(n) = rest.degree() {
            if n < 2 * (d + 1) {
                break;
            }
            d += 1;
            h = self.powmod(&h, &q, &rest);
            let g = self.gcd(&rest, &self.sub(&h, &x));
            if !g.is_one() {
                rest = self.div_exact(&rest, &g).unwrap();
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
        }
        if let Some(n) = rest.degree() {
            if n > 0 {
                out.push((rest, n));
            }
        }
        out
    }

    /// Splits a monic square-free product of irreducibles of degree `d`.
    pub fn equal_degree(&self, a: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
        let n = a.degree().unwrap_or(0);
        if n == d {
            return vec![a.clone()];
        }
        let q = self.f.order();
        loop {
            let r = Poly::new((0..n).map(|_| rng.gen_range(0..q)).collect());
            if r.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = if q % 2 == 1 {
                let e = (num_traits::pow(BigUint::from(q), d) - BigUint::one()) >> 1;
                self.sub(&self.powmod(&r, &e, a), &Poly::one())
            } else {
                // absolute trace down to F_2
                let k = self.f.degree() as usize * d;
                let mut acc = Poly::zero();
                let mut cur = self.rem(&r, a);
                for _ in 0..k {
                    acc = self.add(&acc, &cur);
                    cur = self.mulmod(&cur, &cur, a);
                }
                acc
            };
            let g = self.gcd(a, &b);
            if let Some(gd) = g.degree() {
                if gd > 0 && gd < n {
                    let h = self.div_exact(a, &g).unwrap();
                    let mut out = self.equal_degree(&g, d, rng);
                    out.extend(self.equal_degree(&h, d, rng));
                    return out;
                }
            }
        }
    }

    /// Complete factorization: leading coefficient and sorted monic irreducible
    /// factors with multiplicities.
    pub fn factor(&self, a: &Poly) -> (Fe, Vec<(Poly, u32)>) {
        let (lc, m) = self.monic(a);
        let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
        let mut out = Vec::new();
        for (g, mult) in self.squarefree(&m) {
            for (part, d) in self.distinct_degree(&g) {
                for irr in self.equal_degree(&part, d, &mut rng) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort();
        (lc, out)
    }

    pub fn is_irreducible(&self, a: &Poly) -> bool {
        match a.degree() {
            None | Some(0) => false,
            Some(1) => true,
            Some(n) => {
                let m = self.monic(a).1;
                let sf = self.squarefree(&m);
                if sf.len() != 1 || sf[0].1 != 1 {
                    return false;
                }
                let dd = self.distinct_degree(&m);
                dd.len() == 1 && dd[0].1 == n
            }
        }
    }

    /// Multiplicity of the irreducible `p` in `a`; `None` for `a = 0`.
    pub fn order_at(&self, a: &Poly, p: &Poly) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        let mut k = 0;
        let mut cur = a.clone();
        while let Some(q) = self.div_exact(&cur, p) {
            cur = q;
            k += 1;
        }
        Some(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_irreducible(r: &PolyRing, a: &Poly) -> bool {
        // trial division by every monic polynomial of degree <= n/2
        let n = a.degree().unwrap();
        let q = r.f.order();
        for d in 1..=n / 2 {
            let count = (q as usize).pow(d as u32);
            for code in 0..count {
                let mut c = code;
                let mut v = Vec::new();
                for _ in 0..d {
                    v.push((c % q as usize) as Fe);
                    c /= q as usize;
                }
                v.push(1);
                if r.rem(a, &Poly::new(v)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn factor_t2_plus_t_over_f3() {
        let f = FiniteField::new(3, 1).unwrap();
        let r = PolyRing::new(&f);
        let (lc, fs) = r.factor(&Poly::new(vec![0, 1, 1]));
        assert_eq!(lc, 1);
        assert_eq!(fs, vec![(Poly::x(), 1), (Poly::new(vec![1, 1]), 1)]);
    }

    #[test]
    fn factor_reassembles_with_repeated_and_pth_power_factors() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)] {
            let f = FiniteField::new(p, e).unwrap();
            let r = PolyRing::new(&f);
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..40 {
                let mut a = Poly::constant(rng.gen_range(1..f.order()));
                for _ in 0..rng.gen_range(1..4) {
                    let deg = rng.gen_range(1..4);
                    let mut v: Vec<Fe> = (0..deg).map(|_| rng.gen_range(0..f.order())).collect();
                    v.push(1);
                    let g = Poly::new(v);
                    a = r.mul(&a, &r.pow(&g, rng.gen_range(1..=p + 1)));
                }
                let (lc, fs) = r.factor(&a);
                let mut back = Poly::constant(lc);
                for (g, m) in &fs {
                    assert!(g.is_monic());
                    assert!(brute_irreducible(&r, g), "{g:?} reducible");
                    back = r.mul(&back, &r.pow(g, *m));
                }
                assert_eq!(back, a);
            }
        }
    }

    #[test]
    fn irreducibility_agrees_with_trial_division() {
        let f = FiniteField::new(2, 2).unwrap();
        let r = PolyRing::new(&f);
        for code in 0..(4usize.pow(3)) {
            let v = vec![(code % 4) as Fe, ((code / 4) % 4) as Fe, ((code / 16) % 4) as Fe, 1];
            let a = Poly::new(v);
            assert_eq!(r.is_irreducible(&a), brute_irreducible(&r, &a));
        }
    }

    #[test]
    fn ordering_is_degree_first() {
        assert!(Poly::new(vec![2]) < Poly::x());
        assert!(Poly::new(vec![2, 1]) < Poly::new(vec![0, 0, 1]));
        assert!(Poly::new(vec![0, 1]) < Poly::new(vec![1, 1]));
    }
}
