//! Pólya product representation of group operations.
//!
//! A permutation with `d` cycles of length `r` (for each distinct `r`)
//! corresponds to the polynomial `Π (x₁^r + ⋯ + x_ξ^r)^d`. The number of
//! colors `ξ` is supplied at query time, so one product serves every
//! concentration.

use std::collections::BTreeMap;

use crate::group::Group;
use crate::perm::CycleStructure;

/// One factor `(x₁^r + ⋯ + x_ξ^r)^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub cycle_len: usize,
    pub multiplicity: usize,
}

impl Factor {
    /// Total degree `r·d` contributed by this factor.
    pub fn degree(&self) -> usize {
        self.cycle_len * self.multiplicity
    }

    pub fn exponent_domain(&self) -> ExponentDomain {
        ExponentDomain::new(self.cycle_len, self.multiplicity)
    }
}

/// Canonical product of factors, sorted by cycle length ascending.
/// Equality and hashing on this list define "identical products".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyaProduct {
    factors: Vec<Factor>,
}

impl PolyaProduct {
    pub fn from_structure(cs: &CycleStructure) -> Self {
        let factors: Vec<Factor> = cs
            .pairs()
            .iter()
            .map(|&(r, d)| Factor {
                cycle_len: r,
                multiplicity: d,
            })
            .collect();
        debug_assert!(factors.windows(2).all(|w| w[0].cycle_len < w[1].cycle_len));
        Self { factors }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Σ r·d over the factors.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(Factor::degree).sum()
    }

    /// Σ d, the number of disjoint cycles of the originating operation.
    pub fn cycle_count(&self) -> usize {
        self.factors.iter().map(|f| f.multiplicity).sum()
    }
}

impl From<&CycleStructure> for PolyaProduct {
    fn from(cs: &CycleStructure) -> Self {
        Self::from_structure(cs)
    }
}

/// The exponents `{0, r, 2r, …, d·r}` a single variable can carry in the
/// expansion of `(x₁^r + ⋯ + x_ξ^r)^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExponentDomain {
    step: usize,
    count: usize,
}

impl ExponentDomain {
    pub fn new(cycle_len: usize, multiplicity: usize) -> Self {
        assert!(cycle_len >= 1, "cycle length must be positive");
        Self {
            step: cycle_len,
            count: multiplicity + 1,
        }
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max(&self) -> usize {
        self.step * (self.count - 1)
    }

    pub fn contains(&self, v: usize) -> bool {
        v.is_multiple_of(self.step) && v <= self.max()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + Clone {
        let step = self.step;
        (0..self.count).map(move |k| k * step)
    }
}

/// Distinct products of a group, each with the number of operations sharing it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightedProducts {
    entries: BTreeMap<PolyaProduct, usize>,
}

impl WeightedProducts {
    pub fn from_group(group: &Group) -> Self {
        let mut entries = BTreeMap::new();
        for p in group.elements() {
            let product = PolyaProduct::from_structure(&p.cycle_structure());
            *entries.entry(product).or_insert(0) += 1;
        }
        Self { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Σ multiplicities; equals the group order.
    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, product: &PolyaProduct) -> usize {
        self.entries.get(product).copied().unwrap_or(0)
    }

    /// Entries in canonical product order.
    pub fn iter(&self) -> impl Iterator<Item = (&PolyaProduct, usize)> {
        self.entries.iter().map(|(p, &m)| (p, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn product(pairs: &[(usize, usize)]) -> PolyaProduct {
        PolyaProduct::from_structure(&CycleStructure::from_pairs(pairs.iter().copied()).unwrap())
    }

    fn factors(pairs: &[(usize, usize)]) -> Vec<Factor> {
        pairs
            .iter()
            .map(|&(r, d)| Factor {
                cycle_len: r,
                multiplicity: d,
            })
            .collect()
    }

    #[test]
    fn products_of_square_operations() {
        assert_eq!(
            product(&[(2, 1), (1, 2)]).factors(),
            factors(&[(1, 2), (2, 1)])
        );
        assert_eq!(product(&[(1, 4)]).factors(), factors(&[(1, 4)]));
        assert_eq!(product(&[(4, 1)]).factors(), factors(&[(4, 1)]));
        assert_eq!(product(&[(2, 1), (1, 2)]).degree(), 4);
        assert_eq!(product(&[(2, 1), (1, 2)]).cycle_count(), 3);
    }

    #[test]
    fn exponent_domains() {
        let v: Vec<_> = ExponentDomain::new(2, 2).iter().collect();
        assert_eq!(v, [0, 2, 4]);
        let v: Vec<_> = ExponentDomain::new(1, 4).iter().collect();
        assert_eq!(v, [0, 1, 2, 3, 4]);
        let v: Vec<_> = ExponentDomain::new(4, 1).iter().collect();
        assert_eq!(v, [0, 4]);
        let dom = ExponentDomain::new(3, 5);
        assert_eq!(dom.len(), 6);
        assert_eq!(dom.max(), 15);
        assert!(dom.contains(9));
        assert!(!dom.contains(10));
        assert!(!dom.contains(18));
    }

    #[test]
    fn square_dedup() {
        let w = WeightedProducts::from_group(&Group::dihedral(4).unwrap());
        assert_eq!(w.len(), 4);
        assert_eq!(w.total(), 8);
        assert_eq!(w.multiplicity(&product(&[(1, 4)])), 1);
        assert_eq!(w.multiplicity(&product(&[(1, 2), (2, 1)])), 2);
        assert_eq!(w.multiplicity(&product(&[(2, 2)])), 3);
        assert_eq!(w.multiplicity(&product(&[(4, 1)])), 2);
    }

    #[test]
    fn trivial_and_cyclic_dedup() {
        let w = WeightedProducts::from_group(&Group::trivial(6).unwrap());
        assert_eq!(w.iter().collect::<Vec<_>>(), vec![(&product(&[(1, 6)]), 1)]);

        // rotations of a pentagon: identity plus four 5-cycles
        let expected: BTreeMap<_, _> = Group::cyclic(5).unwrap().elements().iter().fold(
            BTreeMap::new(),
            |mut acc, p: &Permutation| {
                let lens: Vec<usize> = p.cycles().iter().map(Vec::len).collect();
                *acc.entry(lens).or_insert(0) += 1;
                acc
            },
        );
        assert_eq!(expected.get(&vec![1, 1, 1, 1, 1]), Some(&1));
        assert_eq!(expected.get(&vec![5]), Some(&4));
        let w = WeightedProducts::from_group(&Group::cyclic(5).unwrap());
        assert_eq!(w.multiplicity(&product(&[(1, 5)])), 1);
        assert_eq!(w.multiplicity(&product(&[(5, 1)])), 4);
        assert_eq!(w.len(), 2);
    }
}
