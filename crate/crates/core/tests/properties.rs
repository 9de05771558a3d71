//! Algebraic invariants on seeded random samples.

use adelic::adele::{self, FiniteAdele};
use adelic::classgroup::{self, forms, FractionalIdeal, IdeleClass};
use adelic::domains::{FunctionField, Place, QuadraticField, Rationals};
use adelic::idele::{self, Idele};
use adelic::local::{self, LocalElement, Precision};
use adelic::sample::{self, Sample};
use adelic::valuation::{self, ValueGroup};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-100_000i64..-1, 1i64..100_000]
}

fn ring_laws<F: Sample>(field: &F, places: &[F::Prime], seed: u64) {
    let mut r = rng(seed);
    let x = sample::random_finite_adele(field, places, &mut r, 6);
    let y = sample::random_finite_adele(field, places, &mut r, 6);
    let z = sample::random_finite_adele(field, places, &mut r, 6);
    let eq = |a: &FiniteAdele<F>, b: &FiniteAdele<F>| adele::adele_eq(a, b).unwrap();
    assert!(eq(&adele::add(&x, &y).unwrap(), &adele::add(&y, &x).unwrap()));
    assert!(eq(&adele::mul(&x, &y).unwrap(), &adele::mul(&y, &x).unwrap()));
    let lhs = adele::mul(&x, &adele::add(&y, &z).unwrap()).unwrap();
    let rhs = adele::add(&adele::mul(&x, &y).unwrap(), &adele::mul(&x, &z).unwrap()).unwrap();
    assert!(eq(&lhs, &rhs));
    assert!(eq(&adele::sub(&x, &x).unwrap(), &adele::inj_k(field, &field.zero())));
    for a in [&x, &y, &z, &lhs] {
        assert!(a.satisfies_invariant());
    }
    // inj is a ring map
    let (k, l) = (field.random_elem(&mut r, 6), field.random_elem(&mut r, 6));
    let sum = adele::add(&adele::inj_k(field, &k), &adele::inj_k(field, &l)).unwrap();
    assert!(eq(&sum, &adele::inj_k(field, &field.add(&k, &l))));
}

fn idele_group_laws<F: Sample>(field: &F, places: &[F::Prime], seed: u64) {
    let mut r = rng(seed);
    let x = sample::random_finite_idele(field, places, &mut r, 6, true);
    let y = sample::random_finite_idele(field, places, &mut r, 6, false);
    let one = idele::identity(field);
    assert!(idele::finite_idele_eq(&idele::mul(&y, &idele::inverse(&y)).unwrap(), &one).unwrap());
    // at finite precision x * x^-1 is only known to lie in 1 + m^n
    let unit = idele::mul(&x, &idele::inverse(&x)).unwrap();
    for (p, c) in unit.value().exceptional() {
        let exact_one = LocalElement::from_global(field, Place::Finite(p.clone()), field.one()).unwrap();
        assert!(local::agrees(field, c, &exact_one).unwrap());
    }
    assert!(x.check_unit().unwrap());
    let xy = idele::mul(&x, &y).unwrap();
    let v = idele::to_add_valuations(&xy).unwrap();
    let (vx, vy) = (idele::to_add_valuations(&x).unwrap(), idele::to_add_valuations(&y).unwrap());
    for p in places {
        assert_eq!(v.get(p), vx.get(p) + vy.get(p));
    }
}

fn fractional_laws<F: Sample>(field: &F, places: &[F::Prime], seed: u64) {
    let mut r = rng(seed);
    let i = FractionalIdeal::from_exponents(field, sample::random_exponents::<F, _>(places, &mut r, 3, 3));
    let j = FractionalIdeal::from_exponents(field, sample::random_exponents::<F, _>(places, &mut r, 3, 3));
    let ij = classgroup::frac_mul(&i, &j).unwrap();
    // exponent arithmetic agrees with multiplying presentations
    assert!(classgroup::frac_eq(&ij, &classgroup::presentation_mul(&i, &j).unwrap()));
    assert!(classgroup::frac_mul(&i, &classgroup::frac_inv(&i)).unwrap().is_unit());
    let k = field.random_nonzero_elem(&mut r, 5);
    let pk = FractionalIdeal::principal(field, &k).unwrap();
    assert_eq!(classgroup::ideal_class_of(&classgroup::frac_mul(&i, &pk).unwrap()).unwrap(), classgroup::ideal_class_of(&i).unwrap());
}

fn induced_map<F: Sample>(field: &F, places: &[F::Prime], seed: u64) {
    let mut r = rng(seed);
    let x = IdeleClass::new(Idele::from_finite(sample::random_finite_idele(field, places, &mut r, 5, false)));
    let y = IdeleClass::new(Idele::from_finite(sample::random_finite_idele(field, places, &mut r, 5, false)));
    let k = field.random_nonzero_elem(&mut r, 5);
    let moved = classgroup::idele_class_mul(&x, &IdeleClass::new(idele::inj_units_k_full(field, &k).unwrap())).unwrap();
    let cx = classgroup::idele_class_to_ideal_class(&x).unwrap();
    assert_eq!(classgroup::idele_class_to_ideal_class(&moved).unwrap(), cx);
    assert!(classgroup::idele_class_eq(&moved, &x).unwrap());
    let cy = classgroup::idele_class_to_ideal_class(&y).unwrap();
    let cxy = classgroup::idele_class_to_ideal_class(&classgroup::idele_class_mul(&x, &y).unwrap()).unwrap();
    let prod = classgroup::ideal_class_of(&classgroup::frac_mul(cx.representative(), cy.representative()).unwrap()).unwrap();
    assert_eq!(cxy, prod);
    let principal = classgroup::principal_class(field).unwrap();
    assert_eq!(classgroup::is_in_kernel_subgroup(&x).unwrap().is_some(), cx == principal);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn valuation_of_products(a in nonzero(), b in nonzero(), c in nonzero(), d in nonzero()) {
        let (x, y) = (q(a, b), q(c, d));
        for p in [2u64, 3, 5, 7, 101] {
            let vx = valuation::valuation(&Rationals, &p, &x).unwrap();
            let vy = valuation::valuation(&Rationals, &p, &y).unwrap();
            prop_assert_eq!(valuation::valuation(&Rationals, &p, &(&x * &y)).unwrap(), vx + vy);
            let vs = valuation::valuation(&Rationals, &p, &(&x + &y)).unwrap();
            prop_assert!(vs >= vx.min(vy));
        }
    }

    #[test]
    fn local_coset_arithmetic(a in 0i64..625, b in 1i64..625, n in 1i64..5, m in 1i64..5) {
        let at = |x: i64, prec: i64| {
            LocalElement::with_precision(&Rationals, Place::Finite(5), q(x, 1), Precision::Finite(prec)).unwrap()
        };
        let (x, y) = (at(a, n), at(b, m));
        let s = local::add(&Rationals, &x, &y).unwrap();
        prop_assert_eq!(s.precision(), Precision::Finite(n.min(m)));
        let c = local::canonical(&Rationals, &s).unwrap();
        prop_assert!(local::coset_eq(&Rationals, &c, &s).unwrap());
        // the sum of representatives lies in the declared coset
        let exact = LocalElement::with_precision(&Rationals, Place::Finite(5), q(a + b, 1), s.precision()).unwrap();
        prop_assert!(local::agrees(&Rationals, &exact, &s).unwrap());
        let p = local::mul(&Rationals, &x, &y).unwrap();
        let lifted = LocalElement::from_global(&Rationals, Place::Finite(5), q((a + 625) * b, 1)).unwrap();
        prop_assert!(local::agrees(&Rationals, &lifted, &p).unwrap());
    }

    #[test]
    fn expansion_digits_are_residues(a in nonzero(), b in nonzero(), p in prop::sample::select(vec![2u64, 3, 7])) {
        let x = LocalElement::with_precision(&Rationals, Place::Finite(p), q(a, b), Precision::Finite(6)).unwrap();
        let (start, digits) = local::expansion(&Rationals, &x, 0).unwrap();
        let bound = BigInt::from(p);
        prop_assert!(digits.iter().all(|d| d.is_integer() && !d.is_negative() && d.numer() < &bound));
        let pq = q(p as i64, 1);
        let rebuilt = digits
            .iter()
            .enumerate()
            .fold(q(0, 1), |acc, (i, d)| acc + d * pq.pow(start as i32 + i as i32));
        let y = LocalElement::with_precision(&Rationals, Place::Finite(p), rebuilt, Precision::Finite(6)).unwrap();
        prop_assert!(local::coset_eq(&Rationals, &x, &y).unwrap());
    }

    #[test]
    fn adele_ring_laws(seed in any::<u64>()) {
        ring_laws(&Rationals, &Rationals.places_below(20), seed);
        let k = QuadraticField::new(-5).unwrap();
        ring_laws(&k, &k.places_below(12), seed);
        let f = FunctionField::new(3, 1).unwrap();
        ring_laws(&f, &f.places_below(2), seed);
    }

    #[test]
    fn idele_group(seed in any::<u64>()) {
        idele_group_laws(&Rationals, &Rationals.places_below(20), seed);
        let k = QuadraticField::new(-23).unwrap();
        idele_group_laws(&k, &k.places_below(12), seed);
        let f = FunctionField::new(2, 2).unwrap();
        idele_group_laws(&f, &f.places_below(2), seed);
    }

    #[test]
    fn fractional_ideals(seed in any::<u64>()) {
        fractional_laws(&Rationals, &Rationals.places_below(20), seed);
        let k = QuadraticField::new(-5).unwrap();
        fractional_laws(&k, &k.places_below(20), seed);
        let f = FunctionField::new(3, 1).unwrap();
        fractional_laws(&f, &f.places_below(2), seed);
    }

    #[test]
    fn induced_class_map(seed in any::<u64>(), d in prop::sample::select(vec![-1i64, -2, -5, -6, -14, -23, -47])) {
        let k = QuadraticField::new(d).unwrap();
        induced_map(&k, &k.places_below(12), seed);
        induced_map(&Rationals, &Rationals.places_below(12), seed);
    }

    #[test]
    fn composition_matches_ideal_products(seed in any::<u64>(), d in prop::sample::select(vec![-5i64, -14, -23, -47, -71])) {
        let k = QuadraticField::new(d).unwrap();
        let mut r = rng(seed);
        let places = k.places_below(20);
        let x = FractionalIdeal::from_exponents(&k, sample::random_exponents::<QuadraticField, _>(&places, &mut r, 3, 2));
        let y = FractionalIdeal::from_exponents(&k, sample::random_exponents::<QuadraticField, _>(&places, &mut r, 3, 2));
        let (composed, direct) = classgroup::form_of_product(&k, &x, &y).unwrap();
        prop_assert_eq!(composed, direct);
    }

    #[test]
    fn product_formula(seed in any::<u64>(), q in prop::sample::select(vec![2u32, 3, 4, 5, 9])) {
        let f = FunctionField::with_order(q).unwrap();
        let x = f.random_nonzero_elem(&mut rng(seed), 5);
        prop_assert_eq!(valuation::product_formula_sum(&f, &x).unwrap(), 0);
    }
}

#[test]
fn class_group_tables_are_groups() {
    for d in [-1i64, -2, -3, -5, -6, -14, -17, -21, -23, -47, -71] {
        let k = QuadraticField::new(d).unwrap();
        let g = k.class_group().unwrap();
        let e = g.index_of(&forms::Form::principal(g.discriminant)).unwrap();
        for (i, row) in g.table.iter().enumerate() {
            assert_eq!(row[e], i);
            let mut seen: Vec<usize> = row.clone();
            seen.sort();
            assert_eq!(seen, (0..g.order()).collect::<Vec<_>>());
            for (j, &ij) in row.iter().enumerate() {
                assert_eq!(ij, g.table[j][i]);
                for l in 0..g.order() {
                    assert_eq!(g.table[ij][l], g.table[i][g.table[j][l]]);
                }
            }
        }
    }
}

#[test]
fn valuation_zero_is_infinite() {
    assert_eq!(valuation::valuation(&Rationals, &3, &q(0, 1)).unwrap(), ValueGroup::Infinity);
    let big = BigRational::from(BigInt::from(3).pow(40u32));
    assert_eq!(valuation::valuation(&Rationals, &3, &big).unwrap(), ValueGroup::Finite(40));
}
