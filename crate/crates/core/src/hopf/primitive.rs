//! Primitive generators `p(A)` and the Hall basis of the primitive Lie
//! algebra.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::combinatorics::{
    atomic_set_partitions, evaluate_parts, for_each_composition, set_partitions, SetPartition,
};
use crate::error::{Error, Result};
use crate::freeword::{compare_words_by, hall_tree_by, is_lyndon_by};

use super::linalg::rank;
use super::{check_parts, require_standard, NCSymElement};

/// `p(A) = Σ_{γ ∈ Γ'(r)} (-1)^{ℓ(γ)-1} γ[A]`, the sum over compositions of
/// the block indices whose first part contains 1.
///
/// Nonzero and primitive when `A` is atomic, zero otherwise.
pub fn primitive(a: &SetPartition) -> Result<NCSymElement> {
    if a.is_empty() {
        return Err(Error::EmptyPartition);
    }
    require_standard(a)?;
    check_parts(a)?;
    // Γ'(r): 1 together with any subset of 2..=r, then any composition of
    // the remaining indices.
    let rest: Vec<u32> = (2..=a.len() as u32).collect();
    let mut out = NCSymElement::zero();
    for mask in 0u64..(1u64 << rest.len()) {
        let (with_one, others): (Vec<u32>, Vec<u32>) = rest.iter().partition(|&&k| mask >> (k - 2) & 1 == 1);
        let mut first = vec![1];
        first.extend(with_one);
        for_each_composition(&others, &mut |tail| {
            let mut parts = Vec::with_capacity(tail.len() + 1);
            parts.push(first.clone());
            parts.extend_from_slice(tail);
            let sign = if parts.len() % 2 == 1 { 1 } else { -1 };
            out.add_term(evaluate_parts(&parts, a), sign);
        });
    }
    Ok(out)
}

/// A total order on atomic set partitions in which heavier atoms come first.
pub trait AtomOrder {
    fn cmp_atoms(&self, a: &SetPartition, b: &SetPartition) -> Ordering;
}

/// Heavier atoms first; equal weights by canonical string.
#[derive(Debug, Clone, Copy, Default)]
pub struct DefaultAtomOrder;

impl AtomOrder for DefaultAtomOrder {
    fn cmp_atoms(&self, a: &SetPartition, b: &SetPartition) -> Ordering {
        b.weight()
            .cmp(&a.weight())
            .then_with(|| a.canonical_string().cmp(&b.canonical_string()))
    }
}

pub fn compare_atoms(a: &SetPartition, b: &SetPartition) -> Ordering {
    DefaultAtomOrder.cmp_atoms(a, b)
}

/// Lexicographic order on atomic factorizations, atoms compared by `order`.
///
/// Partitions must be standard; non-standard input compares by its
/// standardization.
pub fn compare_partitions(order: &impl AtomOrder, a: &SetPartition, b: &SetPartition) -> Ordering {
    let atoms = |x: &SetPartition| {
        x.standardize()
            .atomic_factorization()
            .expect("standardized partition")
            .into_atoms()
    };
    compare_words_by(&atoms(a), &atoms(b), |x, y| order.cmp_atoms(x, y))
}

/// The minimal term under [`compare_partitions`].
pub fn leading_term<'a>(
    x: &'a NCSymElement,
    order: &impl AtomOrder,
) -> Option<(&'a SetPartition, &'a BigInt)> {
    x.min_term_by(|a, b| compare_partitions(order, a, b))
}

/// The Hall polynomial on `p(A')`, `p(A'')`, … for a Lyndon word of atoms,
/// with brackets `[x, y] = xy - yx`.
pub fn hall_primitive(atoms: &[SetPartition]) -> Result<NCSymElement> {
    for a in atoms {
        if !a.is_atomic()? {
            return Err(Error::NotAtomic(a.to_string()));
        }
    }
    let tree = hall_tree_by(atoms, compare_atoms)?;
    let mut memo: BTreeMap<SetPartition, NCSymElement> = BTreeMap::new();
    let mut leaf = |a: &SetPartition| -> NCSymElement {
        memo.entry(a.clone())
            .or_insert_with(|| primitive(a).expect("atomic"))
            .clone()
    };
    Ok(tree.fold(&mut leaf, &mut |x, y| &x.product(&y) - &y.product(&x)))
}

/// Lyndon words of total weight `n` over the atoms, in the default order.
pub fn lyndon_atom_words(n: usize) -> Vec<Vec<SetPartition>> {
    let atoms_by_weight: Vec<Vec<SetPartition>> = (0..=n).map(atomic_set_partitions).collect();
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(
        remaining: usize,
        atoms: &[Vec<SetPartition>],
        acc: &mut Vec<SetPartition>,
        out: &mut Vec<Vec<SetPartition>>,
    ) {
        if remaining == 0 {
            if is_lyndon_by(acc, compare_atoms).unwrap_or(false) {
                out.push(acc.clone());
            }
            return;
        }
        for w in 1..=remaining {
            for a in &atoms[w] {
                acc.push(a.clone());
                rec(remaining - w, atoms, acc, out);
                acc.pop();
            }
        }
    }
    if n > 0 {
        rec(n, &atoms_by_weight, &mut acc, &mut out);
    }
    out
}

/// Dimension of the space of primitives of weight `n`: the kernel of the
/// reduced coproduct on the span of `Π(n)`.
pub fn primitive_space_dimension(n: usize) -> usize {
    let basis = set_partitions(n);
    if n == 0 {
        return 0;
    }
    let mut rows: BTreeMap<(SetPartition, SetPartition), Vec<BigInt>> = BTreeMap::new();
    for (j, a) in basis.iter().enumerate() {
        let reduced = NCSymElement::basis(a.clone())
            .reduced_coproduct()
            .expect("positive weight");
        for (pair, c) in reduced.iter() {
            rows.entry(pair.clone())
                .or_insert_with(|| vec![BigInt::from(0); basis.len()])[j] = c.clone();
        }
    }
    let matrix: Vec<Vec<BigInt>> = rows.into_values().collect();
    basis.len() - rank(matrix)
}

/// Check that the Hall primitives of weight `n` are primitive, linearly
/// independent, and as many as the dimension of the primitive space.
pub fn hall_span_check(n: usize) -> bool {
    let elements: Vec<NCSymElement> = lyndon_atom_words(n)
        .iter()
        .map(|w| hall_primitive(w).expect("Lyndon word of atoms"))
        .collect();
    if !elements.iter().all(NCSymElement::is_primitive) {
        return false;
    }
    let basis = set_partitions(n);
    let matrix: Vec<Vec<BigInt>> = elements
        .iter()
        .map(|x| basis.iter().map(|b| x.coeff(b)).collect())
        .collect();
    rank(matrix) == elements.len() && elements.len() == primitive_space_dimension(n)
}
