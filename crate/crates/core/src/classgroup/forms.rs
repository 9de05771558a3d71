//! Positive definite binary quadratic forms `a x^2 + b xy + c y^2` of a
//! negative discriminant: reduction, enumeration and composition.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Form {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Form {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Form { a, b, c }
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// `|b| <= a <= c`, and `b >= 0` when `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        self.b.abs() <= self.a && self.a <= self.c && (self.b >= 0 || (self.b.abs() != self.a && self.a != self.c))
    }

    /// The reduced form representing 1.
    pub fn principal(disc: i64) -> Self {
        if disc.rem_euclid(4) == 0 {
            Form::new(1, 0, -disc / 4)
        } else {
            Form::new(1, 1, (1 - disc) / 4)
        }
    }

    pub fn is_principal(&self) -> bool {
        self.a == 1
    }

    pub fn inverse(&self) -> Self {
        reduce(&big(self.a), &big(-self.b), &big(self.c)).0
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// A 2x2 integer matrix, row-major.
pub(crate) type Matrix = [[BigInt; 2]; 2];

fn mat_mul(m: &Matrix, n: &Matrix) -> Matrix {
    let e = |i: usize, j: usize| &m[i][0] * &n[0][j] + &m[i][1] * &n[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Reduces `(a, b, c)` and returns the reduced form `f` with `M` in
/// `SL_2(Z)` such that `f(x, y) = (a, b, c)(M (x, y))`.
pub(crate) fn reduce(a: &BigInt, b: &BigInt, c: &BigInt) -> (Form, Matrix) {
    assert!(a.is_positive(), "positive definite form expected");
    let (mut a, mut b, mut c) = (a.clone(), b.clone(), c.clone());
    let mut m: Matrix = [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]];
    loop {
        // shift b into (-a, a] with x -> x + k y
        let two_a = &a * 2;
        let k = (&a - &b).div_floor(&two_a);
        if !k.is_zero() {
            let nb = &b + &two_a * &k;
            c = &a * &k * &k + &b * &k + &c;
            b = nb;
            m = mat_mul(&m, &[[BigInt::one(), k], [BigInt::zero(), BigInt::one()]]);
        }
        if a > c || (a == c && b.is_negative()) {
            // (x, y) -> (-y, x)
            std::mem::swap(&mut a, &mut c);
            b = -b;
            m = mat_mul(&m, &[[BigInt::zero(), -BigInt::one()], [BigInt::one(), BigInt::zero()]]);
            continue;
        }
        break;
    }
    let small = |n: &BigInt| n.to_i64().expect("reduced forms of small discriminants have small coefficients");
    let f = Form::new(small(&a), small(&b), small(&c));
    debug_assert!(f.is_reduced());
    (f, m)
}

/// All reduced primitive forms of discriminant `disc < 0`, ordered by `a`,
/// then `|b|`, then `b` descending.
pub fn reduced_forms(disc: i64) -> Result<Vec<Form>> {
    if disc >= 0 || disc.rem_euclid(4) > 1 {
        return Err(Error::UnsupportedField(format!("{disc} is not a negative discriminant")));
    }
    let mut out = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= -disc {
        for b in -a + 1..=a {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let f = Form::new(a, b, num / (4 * a));
            if f.is_reduced() && a.gcd(&b).gcd(&f.c) == 1 {
                out.push(f);
            }
        }
        a += 1;
    }
    out.sort_by_key(|f| (f.a, f.b.abs(), -f.b));
    Ok(out)
}

/// Composition followed by reduction (Cohen, Algorithm 5.4.7).
pub fn compose(f1: &Form, f2: &Form) -> Form {
    assert_eq!(f1.discriminant(), f2.discriminant(), "forms of different discriminants");
    let disc = big(f1.discriminant());
    let (f1, f2) = if f1.a > f2.a { (f2, f1) } else { (f1, f2) };
    let (a1, b1) = (big(f1.a), big(f1.b));
    let (a2, b2, c2) = (big(f2.a), big(f2.b), big(f2.c));
    let s: BigInt = (&b1 + &b2) / 2;
    let n = &b2 - &s;
    let (y1, d) = if (&a2 % &a1).is_zero() {
        (BigInt::zero(), a1.clone())
    } else {
        let g = a2.extended_gcd(&a1);
        (g.x, g.gcd)
    };
    let (x2, y2, d1) = if (&s % &d).is_zero() {
        (BigInt::zero(), -BigInt::one(), d.clone())
    } else {
        let g = s.extended_gcd(&d);
        (g.x, -g.y, g.gcd)
    };
    let v1 = &a1 / &d1;
    let v2 = &a2 / &d1;
    let r = (&y1 * &y2 * &n - &x2 * &c2).mod_floor(&v1);
    let b3 = &b2 + &v2 * &r * 2;
    let a3 = &v1 * &v2;
    let c3 = (&b3 * &b3 - &disc) / (&a3 * 4);
    reduce(&a3, &b3, &c3).0
}

/// The form class group of a negative discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroup {
    pub discriminant: i64,
    pub forms: Vec<Form>,
    /// `table[i][j]` is the index of `forms[i] * forms[j]`.
    pub table: Vec<Vec<usize>>,
}

impl ClassGroup {
    pub fn new(disc: i64) -> Result<Self> {
        let forms = reduced_forms(disc)?;
        let index = |f: &Form| forms.iter().position(|g| g == f).expect("composition stays among reduced forms");
        let table = forms.iter().map(|f| forms.iter().map(|g| index(&compose(f, g))).collect()).collect();
        Ok(ClassGroup { discriminant: disc, forms, table })
    }

    pub fn order(&self) -> usize {
        self.forms.len()
    }

    pub fn index_of(&self, f: &Form) -> Option<usize> {
        self.forms.iter().position(|g| g == f)
    }
}
