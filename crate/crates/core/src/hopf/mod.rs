//! The Hopf algebra NCSym in the set partition basis.
//!
//! Elements are integer combinations of standard set partitions. The product
//! concatenates (`A · B = A|B`) with unit `∅`, and the coproduct splits the
//! blocks in every possible way:
//!
//! ```text
//! Δ(A) = Σ_{K ⊔ L = [r]} st(A_K) ⊗ st(A_L)
//! ```
//!
//! where `r` is the number of blocks and the sum runs over ordered pairs.

mod antipode;
pub mod json;
pub mod linalg;
mod primitive;

use std::cmp::Ordering;
use std::ops::Mul;

use num_bigint::BigInt;

use crate::combinatorics::SetPartition;
use crate::error::{Error, Result};
use crate::linear::{format_terms, parse_terms, LinComb};

pub use antipode::{
    antipode, antipode_direct, antipode_direct_counted, antipode_factored, antipode_of,
    reversed_atom_composition, AntipodeMethod, AntipodeOracle,
};
pub use primitive::{
    compare_atoms, compare_partitions, hall_primitive, hall_span_check, leading_term, lyndon_atom_words,
    primitive, primitive_space_dimension, AtomOrder, DefaultAtomOrder,
};

/// An element of NCSym.
pub type NCSymElement = LinComb<SetPartition>;

/// An element of NCSym ⊗ NCSym.
pub type TensorElement = LinComb<(SetPartition, SetPartition)>;

/// An element of NCSym ⊗ NCSym ⊗ NCSym, used for coassociativity.
pub type Tensor3Element = LinComb<(SetPartition, SetPartition, SetPartition)>;

/// Largest number of blocks accepted by the Fubini-sized sums.
pub const MAX_PARTS: usize = 10;

pub(crate) fn check_parts(a: &SetPartition) -> Result<()> {
    if a.len() > MAX_PARTS {
        return Err(Error::TooManyParts {
            parts: a.len(),
            max: MAX_PARTS,
        });
    }
    Ok(())
}

pub(crate) fn require_standard(a: &SetPartition) -> Result<()> {
    if a.is_standard() {
        Ok(())
    } else {
        Err(Error::NotStandard(a.to_string()))
    }
}

pub fn unit() -> NCSymElement {
    NCSymElement::basis(SetPartition::empty())
}

impl NCSymElement {
    pub fn product(&self, other: &NCSymElement) -> NCSymElement {
        self.bilinear(other, |a, b| LinComb::basis(a.concat_unchecked(b)))
    }

    pub fn coproduct(&self) -> TensorElement {
        self.map_linear(coproduct_basis)
    }

    /// The coefficient of `∅`.
    pub fn counit(&self) -> BigInt {
        self.coeff(&SetPartition::empty())
    }

    /// `Δ(x) − x ⊗ ∅ − ∅ ⊗ x`; vanishes exactly when `x` is primitive.
    pub fn reduced_coproduct(&self) -> Result<TensorElement> {
        let eps = self.counit();
        if eps != BigInt::from(0) {
            return Err(Error::NonzeroCounit(eps.to_string()));
        }
        let mut out = self.coproduct();
        let empty = SetPartition::empty();
        for (a, c) in self.iter() {
            out.add_term((a.clone(), empty.clone()), -c);
            out.add_term((empty.clone(), a.clone()), -c);
        }
        Ok(out)
    }

    pub fn is_primitive(&self) -> bool {
        self.reduced_coproduct().is_ok_and(|t| t.is_zero())
    }

    /// The single weight of a nonzero homogeneous element.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut weights = self.support().map(SetPartition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// Text form with terms in the default partition order.
    pub fn to_text(&self) -> String {
        format_terms(
            self.sorted_terms_by(|a, b| compare_partitions(&DefaultAtomOrder, a, b)),
            SetPartition::to_string,
        )
    }

    pub fn from_text(text: &str) -> Result<NCSymElement> {
        let x = parse_terms(text, |s| s.parse::<SetPartition>())?;
        if let Some(a) = x.support().find(|a| !a.is_standard()) {
            return Err(Error::NotStandard(a.to_string()));
        }
        Ok(x)
    }
}

impl Mul for &NCSymElement {
    type Output = NCSymElement;
    fn mul(self, rhs: &NCSymElement) -> NCSymElement {
        self.product(rhs)
    }
}

/// `Δ(A)` for one partition, summing over all `2^r` ordered splits.
pub fn coproduct_basis(a: &SetPartition) -> TensorElement {
    let r = a.len();
    assert!(r < 64, "too many blocks");
    let mut out = TensorElement::zero();
    for mask in 0u64..(1u64 << r) {
        let (k, l): (Vec<usize>, Vec<usize>) = (1..=r).partition(|i| mask >> (i - 1) & 1 == 1);
        let left = a.select(k).standardize();
        let right = a.select(l).standardize();
        out.add_term((left, right), 1);
    }
    out
}

impl TensorElement {
    /// Swap the tensor factors.
    pub fn twist(&self) -> TensorElement {
        self.map_basis(|(a, b)| (b.clone(), a.clone()))
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn tensor_product(&self, other: &TensorElement) -> TensorElement {
        self.bilinear(other, |(a, b), (c, d)| {
            LinComb::basis((a.concat_unchecked(c), b.concat_unchecked(d)))
        })
    }

    /// `m ∘ (f ⊗ g)`.
    pub fn convolve<F, G>(&self, mut f: F, mut g: G) -> NCSymElement
    where
        F: FnMut(&SetPartition) -> NCSymElement,
        G: FnMut(&SetPartition) -> NCSymElement,
    {
        self.map_linear(|(a, b)| f(a).product(&g(b)))
    }

    /// `(Δ ⊗ id)`.
    pub fn coproduct_left(&self) -> Tensor3Element {
        self.map_linear(|(a, b)| coproduct_basis(a).map_basis(|(x, y)| (x.clone(), y.clone(), b.clone())))
    }

    /// `(id ⊗ Δ)`.
    pub fn coproduct_right(&self) -> Tensor3Element {
        self.map_linear(|(a, b)| coproduct_basis(b).map_basis(|(x, y)| (a.clone(), x.clone(), y.clone())))
    }

    pub fn to_text(&self) -> String {
        let order = DefaultAtomOrder;
        format_terms(
            self.sorted_terms_by(|(a, b), (c, d)| {
                compare_partitions(&order, a, c).then_with(|| compare_partitions(&order, b, d))
            }),
            |(a, b)| format!("{a}{TENSOR}{b}"),
        )
    }

    pub fn from_text(text: &str) -> Result<TensorElement> {
        parse_terms(text, |s| {
            let (a, b) = s
                .split_once(TENSOR)
                .ok_or_else(|| Error::parse(s, "expected `A⊗B`"))?;
            Ok((a.parse::<SetPartition>()?, b.parse::<SetPartition>()?))
        })
    }
}

const TENSOR: char = '⊗';

/// Canonical-string order, used for the JSON encoding.
pub(crate) fn canonical_cmp(a: &SetPartition, b: &SetPartition) -> Ordering {
    a.canonical_string().cmp(&b.canonical_string())
}
