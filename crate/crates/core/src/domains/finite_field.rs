//! The constant fields `F_q`, `q = p^e`.
//!
//! Elements are `u32` codes: the coefficient vector of the residue class in
//! `F_p[x]/(m(x))` read as base-`p` digits, lowest degree first. For `e > 1`
//! the modulus comes from a fixed table of Conway-style primitive polynomials,
//! which lets multiplication run through discrete log tables.

use crate::error::{Error, Result};

/// Coefficients (constant term first, monic) for `p <= 13`, `2 <= e <= 4`.
const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (7, 4, &[3, 4, 5, 0, 1]),
    (11, 2, &[2, 7, 1]),
    (11, 3, &[9, 2, 0, 1]),
    (11, 4, &[2, 10, 8, 0, 1]),
    (13, 2, &[2, 12, 1]),
    (13, 3, &[11, 2, 0, 1]),
    (13, 4, &[2, 12, 3, 0, 1]),
];

pub type Fe = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    // exp[i] = x^i, log[exp[i]] = i; empty when e == 1
    exp: Vec<Fe>,
    log: Vec<u32>,
}

impl FiniteField {
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if !crate::domains::integers::is_prime(p as u64) {
            return Err(Error::InvalidField(format!("characteristic {p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidField("exponent must be positive".into()));
        }
        let q = (p as u64).pow(e);
        if q > 1 << 16 {
            return Err(Error::InvalidField(format!("q = {q} exceeds 2^16")));
        }
        if e == 1 {
            return Ok(Self { p, e, q: q as u32, modulus: vec![0, 1], exp: vec![], log: vec![] });
        }
        let modulus = CONWAY
            .iter()
            .find(|(cp, ce, _)| *cp == p && *ce == e)
            .map(|(_, _, m)| m.to_vec())
            .ok_or_else(|| Error::InvalidField(format!("no modulus table entry for {p}^{e}")))?;
        let mut field = Self { p, e, q: q as u32, modulus, exp: vec![], log: vec![] };
        field.build_tables()?;
        Ok(field)
    }

    /// Parses `q` into `p^e` and builds the field.
    pub fn with_order(q: u32) -> Result<Self> {
        for p in 2..=q {
            if q.is_multiple_of(p) {
                let mut r = q;
                let mut e = 0;
                while r.is_multiple_of(p) {
                    r /= p;
                    e += 1;
                }
                if r != 1 {
                    return Err(Error::InvalidField(format!("{q} is not a prime power")));
                }
                return Self::new(p, e);
            }
        }
        Err(Error::InvalidField(format!("{q} is not a prime power")))
    }

    fn build_tables(&mut self) -> Result<()> {
        let order = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(order);
        let mut log = vec![u32::MAX; self.q as usize];
        let x = self.p; // code of the polynomial `x`
        let mut cur: Fe = 1;
        for i in 0..order {
            if log[cur as usize] != u32::MAX {
                return Err(Error::InvalidField(format!(
                    "modulus for {}^{} is not primitive",
                    self.p, self.e
                )));
            }
            log[cur as usize] = i as u32;
            exp.push(cur);
            cur = self.mul_slow(cur, x);
        }
        if cur != 1 {
            return Err(Error::InvalidField("modulus is not primitive".into()));
        }
        self.exp = exp;
        self.log = log;
        Ok(())
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn digits(&self, a: Fe) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.e as usize);
        let mut a = a;
        for _ in 0..self.e {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    pub fn from_digits(&self, digits: &[u32]) -> Fe {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d % self.p)
    }

    pub fn from_int(&self, n: i64) -> Fe {
        n.rem_euclid(self.p as i64) as Fe
    }

    /// The generator `x` of `F_q` over `F_p`.
    pub fn generator(&self) -> Fe {
        if self.e == 1 {
            // any element works as a symbol; callers only use this for e > 1
            0
        } else {
            self.p
        }
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.e {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if self.e == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let d: Vec<u32> = self.digits(a).into_iter().map(|c| (self.p - c) % self.p).collect();
        self.from_digits(&d)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.e == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as Fe;
        }
        let s = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[s as usize]
    }

    fn mul_slow(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p as u64;
        let da = self.digits(a);
        let db = self.digits(b);
        let e = self.e as usize;
        let mut prod = vec![0u64; 2 * e];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for k in (e..2 * e).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &m) in self.modulus[..e].iter().enumerate() {
                prod[k - e + i] = (prod[k - e + i] + (p - c) * m as u64) % p;
            }
        }
        let low: Vec<u32> = prod[..e].iter().map(|&c| c as u32).collect();
        self.from_digits(&low)
    }

    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a == 0 {
            return None;
        }
        if self.e == 1 {
            return crate::domains::integers::inv_mod(a as u64, self.p as u64).map(|x| x as Fe);
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: Fe, mut n: u64) -> Fe {
        let mut acc = 1;
        let mut base = a;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// The unique `p`-th root.
    pub fn pth_root(&self, a: Fe) -> Fe {
        self.pow(a, (self.q / self.p) as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_table_entry_is_primitive() {
        for &(p, e, _) in CONWAY {
            let f = FiniteField::new(p, e).unwrap();
            assert_eq!(f.order(), p.pow(e));
        }
    }

    #[test]
    fn field_axioms_in_f9() {
        let f = FiniteField::new(3, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.mul_slow(a, b));
                assert_eq!(f.add(a, b), f.add(b, a));
            }
            assert_eq!(f.pow(f.pth_root(a), 3), a);
        }
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(FiniteField::with_order(6).is_err());
        assert!(FiniteField::new(17, 2).is_err());
        assert!(FiniteField::with_order(65537).is_err());
        assert_eq!(FiniteField::with_order(4).unwrap().degree(), 2);
        assert_eq!(FiniteField::with_order(65521).unwrap().degree(), 1);
    }
}
