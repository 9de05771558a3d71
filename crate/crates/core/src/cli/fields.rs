//! Per-field hooks of the command line: symbols, places and ideals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::parse::{self, Expr, IdealAtom, PlaceSyntax};
use crate::classgroup::{ClassGroup, FractionalIdeal};
use crate::domains::{FunctionField, GlobalField, InfinitePlace, Place, Poly, QuadInt, QuadraticField, Rationals};
use crate::error::{Error, Result};
use crate::sample::Sample;

pub trait CliField: Sample {
    fn var(&self, name: &str) -> Option<Self::Elem>;

    /// The integral ideal generated by `gens`.
    fn integral_ideal(&self, gens: &[Self::Ring]) -> Result<Self::Ideal>;

    /// A finite place named by an expression.
    fn place_of_expr(&self, e: &Expr) -> Result<Self::Prime>;

    /// Bound passed to `places_below` when sampling.
    fn sample_bound(&self) -> u64 {
        30
    }

    /// `None` for principal ideal domains.
    fn form_class_group(&self) -> Result<Option<ClassGroup>> {
        Ok(None)
    }

    fn elem(&self, e: &Expr) -> Result<Self::Elem> {
        parse::eval(self, e, &|s| self.var(s))
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        self.elem(&parse::parse_expr(s)?)
    }

    /// The fractional ideal generated by `gens`, via a common denominator.
    fn ideal_of_generators(&self, gens: &[Self::Elem]) -> Result<FractionalIdeal<Self>> {
        let mut s = self.one();
        for g in gens {
            s = self.mul(&s, &self.ring_to_field(&self.numerator_denominator(g).1));
        }
        let cleared: Vec<Self::Ring> = gens.iter().map(|g| self.numerator_denominator(&self.mul(g, &s)).0).collect();
        let j = self.integral_ideal(&cleared)?;
        FractionalIdeal::from_presentation(self, &self.numerator_denominator(&s).0, &j)
    }

    fn parse_place(&self, s: &str) -> Result<Place<Self::Prime>> {
        match parse::parse_place(s)? {
            PlaceSyntax::Named(name) => {
                let places = self.infinite_places();
                let wanted = match name.as_str() {
                    "inf" => places.first().copied(),
                    "real0" => Some(InfinitePlace::Real(0)),
                    "real1" => Some(InfinitePlace::Real(1)),
                    _ => Some(InfinitePlace::ComplexPair(0)),
                };
                match wanted {
                    Some(v) if places.contains(&v) => Ok(Place::Infinite(v)),
                    _ => Err(Error::PlaceMismatch(name)),
                }
            }
            PlaceSyntax::Expr(e) => Ok(Place::Finite(self.place_of_expr(&e)?)),
            PlaceSyntax::Generators(gens) => {
                let gens = gens.iter().map(|g| self.elem(g)).collect::<Result<Vec<_>>>()?;
                let i = self.ideal_of_generators(&gens)?;
                let mut it = i.exponents().iter();
                match (it.next(), it.next()) {
                    (Some((p, 1)), None) => Ok(Place::Finite(p.clone())),
                    _ => Err(Error::NotPrime(s.trim().to_string())),
                }
            }
        }
    }

    fn parse_ideal(&self, s: &str) -> Result<FractionalIdeal<Self>> {
        let mut acc = FractionalIdeal::unit(self);
        for (atom, e) in parse::parse_ideal(s)? {
            let base = match atom {
                IdealAtom::Generators(gens) => {
                    let gens = gens.iter().map(|g| self.elem(g)).collect::<Result<Vec<_>>>()?;
                    self.ideal_of_generators(&gens)?
                }
                IdealAtom::Principal(x) => FractionalIdeal::principal(self, &self.elem(&x)?)?,
            };
            let scaled = base.exponents().iter().map(|(p, k)| (p.clone(), k * e)).collect();
            acc = crate::classgroup::frac_mul(&acc, &FractionalIdeal::from_exponents(self, scaled))?;
        }
        Ok(acc)
    }
}

fn integer_of(e: &Expr) -> Option<BigInt> {
    match e {
        Expr::Int(n) => Some(n.clone()),
        _ => None,
    }
}

impl CliField for Rationals {
    fn var(&self, _: &str) -> Option<Self::Elem> {
        None
    }

    fn integral_ideal(&self, gens: &[BigInt]) -> Result<BigInt> {
        let g = gens.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(g.abs())
        }
    }

    fn place_of_expr(&self, e: &Expr) -> Result<u64> {
        let n = integer_of(e).ok_or_else(|| Error::Parse("a place of Q is a rational prime".into()))?;
        let p = u64::try_from(&n).map_err(|_| Error::NotPrime(n.to_string()))?;
        self.check_prime(&p)?;
        Ok(p)
    }
}

impl CliField for QuadraticField {
    fn var(&self, name: &str) -> Option<Self::Elem> {
        (name == "w").then(|| self.omega())
    }

    fn integral_ideal(&self, gens: &[QuadInt]) -> Result<Self::Ideal> {
        self.ideal_from_generators(gens)
    }

    /// A rational prime names the place above it when there is only one.
    fn place_of_expr(&self, e: &Expr) -> Result<Self::Prime> {
        let n = integer_of(e).ok_or_else(|| Error::Parse("write quadratic places as [p, a+b*w]".into()))?;
        let p = u64::try_from(&n).map_err(|_| Error::NotPrime(n.to_string()))?;
        let mut above = self.primes_above(&p)?;
        if above.len() == 1 {
            Ok(above.remove(0))
        } else {
            Err(Error::NotPrime(format!("({p}) splits; name one of the primes above it")))
        }
    }

    fn form_class_group(&self) -> Result<Option<ClassGroup>> {
        self.class_group().map(Some)
    }
}

impl CliField for FunctionField {
    fn sample_bound(&self) -> u64 {
        2
    }

    fn var(&self, name: &str) -> Option<Self::Elem> {
        match name {
            "t" => Some(self.t()),
            "a" if self.constants().degree() > 1 => Some(self.constant(self.constants().generator())),
            _ => None,
        }
    }

    fn integral_ideal(&self, gens: &[Poly]) -> Result<Poly> {
        let r = self.polys();
        let g = gens.iter().fold(Poly::zero(), |acc, x| r.gcd(&acc, x));
        if g.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(g)
        }
    }

    fn place_of_expr(&self, e: &Expr) -> Result<Poly> {
        let x = self.elem(e)?;
        let (num, den) = self.numerator_denominator(&x);
        if !den.is_one() {
            return Err(Error::NotPrime(self.fmt_elem(&x)));
        }
        self.check_prime(&num).map_err(|_| Error::NotPrime(self.fmt_poly(&num)))?;
        Ok(num)
    }
}
