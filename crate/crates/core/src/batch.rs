//! Batch operations over many elements or places.
//!
//! With the `parallel` feature (on by default) batches run on the rayon
//! thread pool; without it, or with [`Execution::Sequential`], they run on
//! the calling thread. Results are returned in input order either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::classgroup::FractionalIdeal;
use crate::domains::{FunctionField, GlobalField, RatFn};
use crate::error::Result;
use crate::idele::{self, FiniteIdele};
use crate::valuation::{self, ValueGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential execution when built without `parallel`.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `items.map(f)` in input order.
pub fn map<T, U, G>(exec: Execution, items: &[T], f: G) -> Vec<U>
where
    T: Sync,
    U: Send,
    G: Fn(&T) -> U + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// `table[i][j] = val_{places[j]}(xs[i])`.
pub fn valuation_table<F: GlobalField>(
    exec: Execution,
    field: &F,
    places: &[F::Prime],
    xs: &[F::Elem],
) -> Result<Vec<Vec<ValueGroup>>> {
    for p in places {
        field.check_prime(p)?;
    }
    Ok(map(exec, xs, |x| places.iter().map(|p| valuation::valuation_unchecked(field, p, x)).collect()))
}

pub fn ideals_of_ideles<F: GlobalField>(exec: Execution, xs: &[FiniteIdele<F>]) -> Vec<Result<FractionalIdeal<F>>> {
    map(exec, xs, idele::map_to_fractional_ideals)
}

/// The product formula sum of each element; all zero.
pub fn product_formula_sums(exec: Execution, field: &FunctionField, xs: &[RatFn]) -> Vec<Result<i64>> {
    map(exec, xs, |x| valuation::product_formula_sum(field, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::Rationals;
    use crate::sample::Sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn modes_agree() {
        let k = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let xs: Vec<_> = (0..50).map(|_| k.random_elem(&mut rng, 20)).collect();
        let ps = k.places_below(30);
        let a = valuation_table(Execution::Sequential, &k, &ps, &xs).unwrap();
        let b = valuation_table(Execution::Parallel, &k, &ps, &xs).unwrap();
        assert_eq!(a, b);
        let f = FunctionField::new(3, 1).unwrap();
        let ys: Vec<_> = (0..20).map(|_| f.random_nonzero_elem(&mut rng, 4)).collect();
        assert!(product_formula_sums(Execution::default(), &f, &ys).into_iter().all(|s| s == Ok(0)));
    }
}
