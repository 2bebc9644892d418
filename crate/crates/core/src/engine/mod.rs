//! Coefficient extraction for fixed-concentration Pólya counting.
//!
//! The number of distinct colorings with color counts `(c₁, …, c_ξ)` is the
//! coefficient of `x₁^c₁ ⋯ x_ξ^c_ξ` in the cycle-index products of the group,
//! summed over all operations and divided by the group order. Products are
//! never expanded. For each product the engine enumerates the ways the first
//! variable's exponent can be split across factors, grows a pruned tree of
//! exponent sequences per factor, and sums products of multinomial
//! coefficients over the combinations that hit the target exactly.

mod binomial;
mod sequence;

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

pub use binomial::{binomial, multinomial, BigCount};
pub use sequence::{build_sequences, sum_sequences, ExponentSequence, SequenceNode};
use sequence::{sum_weighted, weighted_sequences, Weighted};

use crate::cycle_index::{PolyaProduct, WeightedProducts};
use crate::error::{Error, Result};
use crate::group::Group;

/// Color counts `(c₁, …, c_ξ)`; the target term is `Π x_i^{c_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Concentration {
    counts: Vec<usize>,
}

impl Concentration {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::EmptyConcentration);
        }
        Ok(Self { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn num_colors(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Target exponents with zero counts removed, sorted descending.
    ///
    /// Each factor is symmetric in the variables, so reordering the target
    /// does not change the coefficient; large leading exponents leave fewer
    /// first-variable splits to explore.
    pub fn search_target(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.counts.iter().copied().filter(|&c| c > 0).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    fn check_size(&self, size: usize) -> Result<()> {
        if self.total() != size {
            return Err(Error::ConcentrationMismatch {
                total: self.total(),
                size,
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Concentration {
    type Error = Error;

    fn try_from(counts: Vec<usize>) -> Result<Self> {
        Self::new(counts)
    }
}

/// Exact coefficient of the concentration's term in the expansion of `product`.
pub fn coefficient_for_product(product: &PolyaProduct, conc: &Concentration) -> Result<BigCount> {
    conc.check_size(product.degree())?;
    Ok(coefficient_for_target(product, &conc.search_target()))
}

/// Coefficient of `Π x_i^{target_i}` with the target used in the given order.
/// The target must sum to the product's degree.
pub fn coefficient_for_target(product: &PolyaProduct, target: &[usize]) -> BigCount {
    debug_assert_eq!(target.iter().sum::<usize>(), product.degree());
    let factors = product.factors();
    if let [only] = factors {
        let r = only.cycle_len;
        if target.iter().any(|t| t % r != 0) {
            return BigCount::zero();
        }
        let parts: Vec<usize> = target.iter().map(|t| t / r).collect();
        return multinomial(only.multiplicity, &parts);
    }

    // A factor's sequences depend only on its own first exponent, so each
    // (factor, first exponent) list is built once, on first use.
    let mut cache: Vec<Vec<Option<Vec<Weighted>>>> = factors
        .iter()
        .map(|f| vec![None; f.multiplicity + 1])
        .collect();

    let mut total = BigCount::zero();
    for_each_first_split(product, target[0], |split| {
        for ((f, &first), per_first) in factors.iter().zip(split).zip(cache.iter_mut()) {
            per_first[first / f.cycle_len]
                .get_or_insert_with(|| weighted_sequences(f, first, target));
        }
        let lists: Vec<&[Weighted]> = factors
            .iter()
            .zip(split)
            .zip(&cache)
            .map(|((f, &first), per_first)| {
                per_first[first / f.cycle_len]
                    .as_deref()
                    .unwrap_or_default()
            })
            .collect();
        total += sum_weighted(&lists, target);
    });
    total
}

/// Every choice of one exponent-domain value per factor summing to `first`,
/// in lexicographic order.
pub fn first_splits(product: &PolyaProduct, first: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_first_split(product, first, |s| out.push(s.to_vec()));
    out
}

/// Calls `visit` with every choice of one exponent-domain value per factor
/// summing to `first`, in lexicographic order.
fn for_each_first_split(product: &PolyaProduct, first: usize, mut visit: impl FnMut(&[usize])) {
    let factors = product.factors();
    // most the factors from index i onward can absorb
    let mut capacity = vec![0; factors.len() + 1];
    for i in (0..factors.len()).rev() {
        capacity[i] = capacity[i + 1] + factors[i].degree();
    }

    fn rec(
        product: &PolyaProduct,
        capacity: &[usize],
        index: usize,
        left: usize,
        split: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let factors = product.factors();
        if index == factors.len() {
            if left == 0 {
                visit(split);
            }
            return;
        }
        for v in factors[index].exponent_domain().iter() {
            if v > left {
                break;
            }
            if left - v > capacity[index + 1] {
                continue;
            }
            split.push(v);
            rec(product, capacity, index + 1, left - v, split, visit);
            split.pop();
        }
    }

    let mut split = Vec::with_capacity(factors.len());
    rec(product, &capacity, 0, first, &mut split, &mut visit);
}

/// Pieces of a Pólya count: the multiplicity-weighted coefficient sum, the
/// group order, and their exact quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyaTally {
    pub weighted_sum: BigCount,
    pub group_order: usize,
    pub count: BigCount,
}

/// Number of distinct colorings of the group's set at the given concentration.
pub fn polya_count(group: &Group, conc: &Concentration) -> Result<BigCount> {
    Ok(polya_tally(group, conc)?.count)
}

pub fn polya_tally(group: &Group, conc: &Concentration) -> Result<PolyaTally> {
    conc.check_size(group.set_size())?;
    let products = WeightedProducts::from_group(group);
    let target = conc.search_target();
    let weighted_sum = products
        .iter()
        .map(|(p, m)| coefficient_for_target(p, &target) * m)
        .sum();
    finish(weighted_sum, group.order())
}

/// Same result as [`polya_tally`], with the distinct products evaluated on
/// the current rayon thread pool.
pub fn polya_tally_parallel(group: &Group, conc: &Concentration) -> Result<PolyaTally> {
    conc.check_size(group.set_size())?;
    let products = WeightedProducts::from_group(group);
    let target = conc.search_target();
    let entries: Vec<_> = products.iter().collect();
    let weighted_sum = entries
        .par_iter()
        .map(|(p, m)| coefficient_for_target(p, &target) * *m)
        .reduce(BigCount::zero, |a, b| a + b);
    finish(weighted_sum, group.order())
}

fn finish(weighted_sum: BigCount, group_order: usize) -> Result<PolyaTally> {
    if group_order == 0 {
        return Err(Error::InexactDivision {
            sum: weighted_sum.to_string(),
            order: 0,
        });
    }
    let (count, rem) = weighted_sum.div_rem(&BigCount::from(group_order));
    if !rem.is_zero() {
        return Err(Error::InexactDivision {
            sum: weighted_sum.to_string(),
            order: group_order,
        });
    }
    Ok(PolyaTally {
        weighted_sum,
        group_order,
        count,
    })
}
