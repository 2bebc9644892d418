//! Brute-force reference counts for small instances.
//!
//! Nothing here uses cycle decompositions or the coefficient engine:
//! colorings are enumerated explicitly and products are fully expanded.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::cycle_index::PolyaProduct;
use crate::engine::{BigCount, Concentration};
use crate::error::{Error, Result};
use crate::group::{next_permutation, Group};

/// Largest set size the coloring oracles accept.
pub const MAX_ORACLE_SET_SIZE: usize = 16;
/// Largest number of fixed-concentration colorings the coloring oracles accept.
pub const MAX_ORACLE_COLORINGS: u64 = 10_000_000;
/// Largest total degree [`naive_expand`] accepts.
pub const MAX_EXPAND_DEGREE: usize = 16;
/// Largest number of variables [`naive_expand`] accepts.
pub const MAX_EXPAND_COLORS: usize = 4;

/// Assignment of a color index to each element of the set.
pub type Coloring = Vec<usize>;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn check_guard(group: &Group, conc: &Concentration) -> Result<()> {
    let size = group.set_size();
    if conc.total() != size {
        return Err(Error::ConcentrationMismatch {
            total: conc.total(),
            size,
        });
    }
    if size > MAX_ORACLE_SET_SIZE {
        return Err(Error::GuardRail(format!(
            "set size {size} exceeds {MAX_ORACLE_SET_SIZE}"
        )));
    }
    let denom = conc
        .counts()
        .iter()
        .fold(BigUint::one(), |acc, &c| acc * factorial(c));
    let colorings = factorial(size) / denom;
    if colorings > BigUint::from(MAX_ORACLE_COLORINGS) {
        return Err(Error::GuardRail(format!(
            "{colorings} colorings exceed {MAX_ORACLE_COLORINGS}"
        )));
    }
    Ok(())
}

/// Calls `visit` on every coloring with the given color counts, in
/// lexicographic order.
pub fn for_each_coloring(conc: &Concentration, mut visit: impl FnMut(&[usize])) {
    let mut coloring: Coloring = conc
        .counts()
        .iter()
        .enumerate()
        .flat_map(|(color, &c)| std::iter::repeat_n(color, c))
        .collect();
    loop {
        visit(&coloring);
        if !next_permutation(&mut coloring) {
            break;
        }
    }
}

/// Average number of colorings fixed by each group element.
///
/// A coloring is fixed by `p` when `coloring[j] == coloring[p(j)]` for every `j`.
pub fn burnside_count(group: &Group, conc: &Concentration) -> Result<BigCount> {
    check_guard(group, conc)?;
    let mut fixed: u64 = 0;
    for_each_coloring(conc, |coloring| {
        for p in group.elements() {
            if p.image()
                .iter()
                .enumerate()
                .all(|(j, &pj)| coloring[j] == coloring[pj])
            {
                fixed += 1;
            }
        }
    });
    let order = group.order() as u64;
    if order == 0 || !fixed.is_multiple_of(order) {
        return Err(Error::InexactDivision {
            sum: fixed.to_string(),
            order: group.order(),
        });
    }
    Ok(BigCount::from(fixed / order))
}

/// Lexicographically least coloring in the orbit of `coloring`.
pub fn canonical_coloring(group: &Group, coloring: &[usize]) -> Coloring {
    let mut best = coloring.to_vec();
    let mut moved = vec![0; coloring.len()];
    for p in group.elements() {
        for (j, &pj) in p.image().iter().enumerate() {
            moved[pj] = coloring[j];
        }
        if moved < best {
            best.copy_from_slice(&moved);
        }
    }
    best
}

/// Number of distinct orbit representatives over all colorings.
pub fn enumerate_orbits(group: &Group, conc: &Concentration) -> Result<BigCount> {
    Ok(BigCount::from(orbit_representatives(group, conc)?.len()))
}

/// Canonical representatives of every orbit, sorted.
pub fn orbit_representatives(group: &Group, conc: &Concentration) -> Result<Vec<Coloring>> {
    check_guard(group, conc)?;
    let mut reps = HashSet::new();
    for_each_coloring(conc, |coloring| {
        reps.insert(canonical_coloring(group, coloring));
    });
    let mut reps: Vec<_> = reps.into_iter().collect();
    reps.sort();
    Ok(reps)
}

/// Polynomial with exact coefficients, keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<usize>, BigCount>,
}

impl SparsePolynomial {
    pub fn one(num_vars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; num_vars], BigCount::one());
        Self { num_vars, terms }
    }

    /// `x₁^r + ⋯ + x_n^r`.
    pub fn power_sum(num_vars: usize, r: usize) -> Self {
        let terms = (0..num_vars)
            .map(|i| {
                let mut e = vec![0; num_vars];
                e[i] = r;
                (e, BigCount::one())
            })
            .collect();
        Self { num_vars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeats and dropping zeros.
    pub fn from_terms(num_vars: usize, terms: impl IntoIterator<Item = (Vec<usize>, u64)>) -> Self {
        let mut out = Self {
            num_vars,
            terms: BTreeMap::new(),
        };
        for (e, c) in terms {
            assert_eq!(e.len(), num_vars);
            *out.terms.entry(e).or_insert_with(BigCount::zero) += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn coefficient(&self, exponents: &[usize]) -> BigCount {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &BigCount)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.num_vars, other.num_vars);
        let mut terms: BTreeMap<Vec<usize>, BigCount> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<usize> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(BigCount::zero) += ca * cb;
            }
        }
        SparsePolynomial {
            num_vars: self.num_vars,
            terms,
        }
    }

    /// Value at `x_i = 1` for every `i`: the sum of the coefficients.
    pub fn coefficient_sum(&self) -> BigCount {
        self.terms.values().sum()
    }
}

/// Fully expands `Π (x₁^r + ⋯ + x_ξ^r)^d` by repeated multiplication.
pub fn naive_expand(product: &PolyaProduct, num_colors: usize) -> Result<SparsePolynomial> {
    if product.degree() > MAX_EXPAND_DEGREE {
        return Err(Error::GuardRail(format!(
            "total degree {} exceeds {MAX_EXPAND_DEGREE}",
            product.degree()
        )));
    }
    if num_colors == 0 || num_colors > MAX_EXPAND_COLORS {
        return Err(Error::GuardRail(format!(
            "{num_colors} colors outside 1..={MAX_EXPAND_COLORS}"
        )));
    }
    let mut poly = SparsePolynomial::one(num_colors);
    for f in product.factors() {
        let sum = SparsePolynomial::power_sum(num_colors, f.cycle_len);
        for _ in 0..f.multiplicity {
            poly = poly.mul(&sum);
        }
    }
    Ok(poly)
}

/// Pólya count from fully expanded products of every group element.
pub fn expand_count(group: &Group, conc: &Concentration) -> Result<BigCount> {
    if conc.total() != group.set_size() {
        return Err(Error::ConcentrationMismatch {
            total: conc.total(),
            size: group.set_size(),
        });
    }
    let mut sum = BigCount::zero();
    for p in group.elements() {
        let product = PolyaProduct::from_structure(&p.cycle_structure());
        sum += naive_expand(&product, conc.num_colors())?.coefficient(conc.counts());
    }
    let (q, r) = sum.div_rem(&BigCount::from(group.order().max(1)));
    if !r.is_zero() || group.order() == 0 {
        return Err(Error::InexactDivision {
            sum: sum.to_string(),
            order: group.order(),
        });
    }
    Ok(q)
}

/// Number of fixed-concentration colorings, if it fits in a `u64`.
pub fn coloring_count(conc: &Concentration) -> Option<u64> {
    let denom = conc
        .counts()
        .iter()
        .fold(BigUint::one(), |acc, &c| acc * factorial(c));
    (factorial(conc.total()) / denom).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::CycleStructure;

    fn conc(c: &[usize]) -> Concentration {
        Concentration::new(c.to_vec()).unwrap()
    }

    fn product(pairs: &[(usize, usize)]) -> PolyaProduct {
        PolyaProduct::from_structure(&CycleStructure::from_pairs(pairs.iter().copied()).unwrap())
    }

    #[test]
    fn square_burnside() {
        let d4 = Group::dihedral(4).unwrap();
        assert_eq!(burnside_count(&d4, &conc(&[2, 2])).unwrap(), 2u32.into());
        assert_eq!(burnside_count(&d4, &conc(&[4, 0])).unwrap(), 1u32.into());
        let triv = Group::trivial(4).unwrap();
        assert_eq!(burnside_count(&triv, &conc(&[2, 2])).unwrap(), 6u32.into());
    }

    #[test]
    fn square_orbits_are_adjacent_and_diagonal() {
        let d4 = Group::dihedral(4).unwrap();
        let reps = orbit_representatives(&d4, &conc(&[2, 2])).unwrap();
        // vertices in cyclic order: colors 0,0 adjacent, or opposite corners
        assert_eq!(reps, vec![vec![0, 0, 1, 1], vec![0, 1, 0, 1]]);
        assert_eq!(
            enumerate_orbits(&Group::cyclic(1).unwrap(), &conc(&[1])).unwrap(),
            1u32.into()
        );
        assert_eq!(
            enumerate_orbits(&Group::symmetric(4).unwrap(), &conc(&[2, 2])).unwrap(),
            1u32.into()
        );
    }

    #[test]
    fn guard_rails() {
        let g = Group::cyclic(17).unwrap();
        assert!(matches!(
            burnside_count(&g, &conc(&[9, 8])),
            Err(Error::GuardRail(_))
        ));
        let g = Group::trivial(16).unwrap();
        // 16!/(4!)^4 = 63 063 000 colorings
        assert!(matches!(
            enumerate_orbits(&g, &conc(&[4, 4, 4, 4])),
            Err(Error::GuardRail(_))
        ));
        assert!(matches!(
            naive_expand(&product(&[(1, 17)]), 2),
            Err(Error::GuardRail(_))
        ));
        assert!(matches!(
            naive_expand(&product(&[(1, 4)]), 5),
            Err(Error::GuardRail(_))
        ));
    }

    #[test]
    fn expansions_of_square_operations() {
        let m1 = naive_expand(&product(&[(2, 2)]), 2).unwrap();
        assert_eq!(
            m1,
            SparsePolynomial::from_terms(2, [(vec![4, 0], 1), (vec![2, 2], 2), (vec![0, 4], 1)])
        );
        let id = naive_expand(&product(&[(1, 4)]), 2).unwrap();
        assert_eq!(
            id,
            SparsePolynomial::from_terms(
                2,
                [
                    (vec![4, 0], 1),
                    (vec![3, 1], 4),
                    (vec![2, 2], 6),
                    (vec![1, 3], 4),
                    (vec![0, 4], 1)
                ]
            )
        );
        let x = naive_expand(&product(&[(1, 1)]), 1).unwrap();
        assert_eq!(x, SparsePolynomial::from_terms(1, [(vec![1], 1)]));
    }

    #[test]
    fn coefficient_sum_counts_all_colorings() {
        let p = product(&[(1, 2), (2, 1), (3, 2)]);
        let poly = naive_expand(&p, 3).unwrap();
        assert_eq!(poly.coefficient_sum(), BigCount::from(3u32).pow(5));
        assert!(poly
            .terms()
            .all(|(e, c)| !c.is_zero() && e.iter().sum::<usize>() == 10));
    }

    #[test]
    fn expand_count_on_square() {
        let d4 = Group::dihedral(4).unwrap();
        assert_eq!(expand_count(&d4, &conc(&[2, 2])).unwrap(), 2u32.into());
        assert_eq!(coloring_count(&conc(&[2, 2])), Some(6));
    }
}
