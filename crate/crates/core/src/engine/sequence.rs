//! Per-factor exponent sequences and their combination.
//!
//! For one factor `(x₁^r + ⋯ + x_ξ^r)^d` and a fixed first exponent, a tree
//! of candidate exponents is grown one variable at a time. Every level keeps
//! only candidates that fit under the target exponent of that variable, leave
//! a nonnegative remainder of the factor's mass `d·r`, and leave a remainder
//! the later variables can still absorb. Root-to-leaf paths spend exactly
//! `d·r` and become [`ExponentSequence`]s.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::binomial::{multinomial, BigCount};
use crate::cycle_index::{Factor, PolyaProduct};

/// Raw exponents `(e₁, …, e_ξ)` that one factor contributes to a term. Each
/// entry is a multiple of the factor's cycle length and they sum to `d·r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentSequence(Vec<usize>);

impl ExponentSequence {
    pub fn exponents(&self) -> &[usize] {
        &self.0
    }

    /// Exponents divided by the cycle length; these sum to `d`.
    pub fn multiplicities(&self, cycle_len: usize) -> Vec<usize> {
        self.0.iter().map(|e| e / cycle_len).collect()
    }

    /// The coefficient of this term inside its factor.
    pub fn weight(&self, factor: &Factor) -> BigCount {
        multinomial(factor.multiplicity, &self.multiplicities(factor.cycle_len))
    }
}

impl From<Vec<usize>> for ExponentSequence {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

/// One proposed exponent for one variable of a factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceNode {
    /// Proposed exponent of this node's variable.
    pub root: usize,
    /// Exponent mass spent by this variable and every earlier one.
    pub used: usize,
    /// Surviving candidates for the next variable.
    pub children: Vec<SequenceNode>,
}

impl SequenceNode {
    /// Grows the pruned tree for `factor` whose first variable carries
    /// `first`. Returns `None` when no complete sequence exists.
    pub fn grow(factor: &Factor, first: usize, target: &[usize]) -> Option<SequenceNode> {
        let remaining = suffix_sums(target);
        Self::grow_at(factor, 0, first, 0, target, &remaining)
    }

    fn grow_at(
        factor: &Factor,
        var: usize,
        root: usize,
        parent_used: usize,
        target: &[usize],
        remaining: &[usize],
    ) -> Option<SequenceNode> {
        let mass = factor.degree();
        if root > target[var] || !root.is_multiple_of(factor.cycle_len) {
            return None;
        }
        let used = parent_used + root;
        if used > mass || mass - used > remaining[var + 1] {
            return None;
        }
        if var + 1 == target.len() {
            return (used == mass).then_some(SequenceNode {
                root,
                used,
                children: Vec::new(),
            });
        }
        let children: Vec<_> = factor
            .exponent_domain()
            .iter()
            .take_while(|&v| v <= mass - used)
            .filter_map(|v| Self::grow_at(factor, var + 1, v, used, target, remaining))
            .collect();
        if children.is_empty() {
            return None;
        }
        Some(SequenceNode {
            root,
            used,
            children,
        })
    }

    /// Every root-to-leaf path as a sequence, in depth-first order.
    pub fn expand(&self) -> Vec<ExponentSequence> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.collect(&mut path, &mut out);
        out
    }

    fn collect(&self, path: &mut Vec<usize>, out: &mut Vec<ExponentSequence>) {
        path.push(self.root);
        if self.children.is_empty() {
            out.push(ExponentSequence(path.clone()));
        } else {
            for child in &self.children {
                child.collect(path, out);
            }
        }
        path.pop();
    }
}

/// `remaining[i] = target[i] + ⋯ + target[ξ-1]`, with `remaining[ξ] = 0`.
fn suffix_sums(target: &[usize]) -> Vec<usize> {
    let mut out = vec![0; target.len() + 1];
    for i in (0..target.len()).rev() {
        out[i] = out[i + 1] + target[i];
    }
    out
}

/// For each factor of `product`, every exponent sequence that starts with the
/// chosen first exponent and fits under `target`. A factor with no survivor
/// gets an empty list.
pub fn build_sequences(
    first_exponents: &[usize],
    product: &PolyaProduct,
    target: &[usize],
) -> Vec<Vec<ExponentSequence>> {
    assert_eq!(first_exponents.len(), product.factors().len());
    if target.is_empty() {
        return vec![Vec::new(); first_exponents.len()];
    }
    product
        .factors()
        .iter()
        .zip(first_exponents)
        .map(|(factor, &first)| {
            SequenceNode::grow(factor, first, target)
                .map(|tree| tree.expand())
                .unwrap_or_default()
        })
        .collect()
}

/// Sums `Π_α multinomial(d_α, S_α / r_α)` over every choice of one sequence
/// per factor whose per-variable exponent totals equal `target` exactly.
///
/// The cartesian product is walked depth-first and never stored; a branch is
/// abandoned as soon as some running total overshoots its target.
pub fn sum_sequences(
    sequences: &[Vec<ExponentSequence>],
    product: &PolyaProduct,
    target: &[usize],
) -> BigCount {
    let factors = product.factors();
    assert_eq!(sequences.len(), factors.len());
    if sequences.iter().any(Vec::is_empty) {
        return BigCount::zero();
    }
    let weighted: Vec<Vec<Weighted>> = sequences
        .iter()
        .zip(factors)
        .map(|(list, factor)| list.iter().map(|s| (s.clone(), s.weight(factor))).collect())
        .collect();
    let lists: Vec<&[Weighted]> = weighted.iter().map(Vec::as_slice).collect();
    sum_weighted(&lists, target)
}

/// A sequence paired with its multinomial weight.
pub(crate) type Weighted = (ExponentSequence, BigCount);

/// Sequences of one factor with the given first exponent, with weights.
pub(crate) fn weighted_sequences(factor: &Factor, first: usize, target: &[usize]) -> Vec<Weighted> {
    SequenceNode::grow(factor, first, target)
        .map(|tree| {
            tree.expand()
                .into_iter()
                .map(|s| {
                    let w = s.weight(factor);
                    (s, w)
                })
                .collect()
        })
        .unwrap_or_default()
}

pub(crate) fn sum_weighted(lists: &[&[Weighted]], target: &[usize]) -> BigCount {
    if lists.is_empty() || lists.iter().any(|l| l.is_empty()) {
        return BigCount::zero();
    }
    // Shorter lists first so overshoot prunes early; the longest list is
    // matched by lookup instead of being scanned.
    let mut ordered = lists.to_vec();
    ordered.sort_by_key(|l| l.len());
    let (last, rest) = ordered.split_last().expect("nonempty");
    // the last factor must supply exactly what the others leave over
    let closing: HashMap<&[usize], &BigCount> =
        last.iter().map(|(s, w)| (s.exponents(), w)).collect();
    let mut totals = vec![0usize; target.len()];
    let mut needed = vec![0usize; target.len()];
    let mut sum = BigCount::zero();
    let mut walk = Walk {
        lists: rest,
        closing: &closing,
        target,
        needed: &mut needed,
        sum: &mut sum,
    };
    walk.descend(0, &mut totals, &BigCount::one());
    sum
}

struct Walk<'a> {
    lists: &'a [&'a [Weighted]],
    closing: &'a HashMap<&'a [usize], &'a BigCount>,
    target: &'a [usize],
    needed: &'a mut [usize],
    sum: &'a mut BigCount,
}

impl Walk<'_> {
    fn descend(&mut self, depth: usize, totals: &mut [usize], partial: &BigCount) {
        if depth == self.lists.len() {
            for ((n, t), cap) in self.needed.iter_mut().zip(totals.iter()).zip(self.target) {
                *n = cap - t;
            }
            if let Some(w) = self.closing.get(&*self.needed) {
                *self.sum += partial * *w;
            }
            return;
        }
        for (seq, weight) in self.lists[depth] {
            let exps = seq.exponents();
            let fits = exps
                .iter()
                .zip(totals.iter())
                .zip(self.target)
                .all(|((e, t), cap)| t + e <= *cap);
            if !fits {
                continue;
            }
            for (t, e) in totals.iter_mut().zip(exps) {
                *t += e;
            }
            self.descend(depth + 1, totals, &(partial * weight));
            for (t, e) in totals.iter_mut().zip(exps) {
                *t -= e;
            }
        }
    }
}
