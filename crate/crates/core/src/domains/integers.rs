//! Rational-integer helpers shared by the number-field families.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    num_prime::nt_funcs::is_prime64(p)
}

/// Factors `|n|` into rational primes. Zero is rejected; units give an empty map.
pub fn factor(n: &BigInt) -> Result<BTreeMap<u64, u32>> {
    if n.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let m = n
        .abs()
        .to_u128()
        .ok_or_else(|| Error::TooLarge(n.to_string()))?;
    let mut out = BTreeMap::new();
    if m == 1 {
        return Ok(out);
    }
    for (p, k) in num_prime::nt_funcs::factorize128(m) {
        let p = u64::try_from(p).map_err(|_| Error::TooLarge(n.to_string()))?;
        out.insert(p, k as u32);
    }
    Ok(out)
}

/// Exponent of `p` in `n`; `None` for `n = 0`.
pub fn p_adic_order(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut m = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Some(k);
        }
        m = q;
        k += 1;
    }
}

/// Least non-negative residue.
pub fn modp(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits")
}

pub fn mod_floor_big(n: &BigInt, m: &BigInt) -> BigInt {
    n.mod_floor(m)
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    if !g.gcd.is_one() {
        return None;
    }
    Some(g.x.mod_floor(m))
}

pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    inv_mod_big(&BigInt::from(a), &BigInt::from(m)).and_then(|x| x.to_u64())
}

/// Square roots of `a` modulo an odd prime `p` (Tonelli–Shanks), `None` for non-residues.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

pub fn is_squarefree(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    match factor(&BigInt::from(d)) {
        Ok(f) => f.values().all(|&k| k == 1),
        Err(_) => false,
    }
}

pub fn biguint_of(n: &BigInt) -> BigUint {
    match n.sign() {
        Sign::Minus => (-n).to_biguint().unwrap(),
        _ => n.to_biguint().unwrap(),
    }
}

pub fn big_pow(base: u64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

pub fn gcd3(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    a.gcd(b).gcd(c)
}

pub fn is_one_abs(n: &BigInt) -> bool {
    n.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_small_integers() {
        let f = factor(&BigInt::from(-360)).unwrap();
        assert_eq!(f.into_iter().collect::<Vec<_>>(), vec![(2, 3), (3, 2), (5, 1)]);
        assert!(factor(&BigInt::from(1)).unwrap().is_empty());
        assert_eq!(factor(&BigInt::zero()), Err(Error::ZeroIdeal));
    }

    #[test]
    fn tonelli_shanks_roots_square() {
        for p in [3u64, 5, 7, 11, 13, 17, 41, 97, 65537] {
            for a in 0..p.min(200) {
                if let Some(r) = sqrt_mod(a, p) {
                    assert_eq!(mul_mod(r, r, p), a % p);
                } else {
                    assert!((0..p).all(|x| mul_mod(x, x, p) != a));
                }
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(p_adic_order(&BigInt::from(98), 7), Some(2));
        assert_eq!(p_adic_order(&BigInt::from(0), 7), None);
        assert!(is_squarefree(-5));
        assert!(!is_squarefree(12));
    }
}
