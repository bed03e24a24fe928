//! Three independent routes to the antipode.
//!
//! * [`antipode_direct`]: `S(A) = Σ_{γ ∈ Γ(r)} (-1)^{ℓ(γ)} γ[A]` over every
//!   set composition of the block indices.
//! * [`antipode_factored`]: the same signed sum restricted to refinements of
//!   the composition that lists the atoms of `A` right to left.
//! * [`AntipodeOracle`]: the recursion `S(A) = -A - Σ S(A') A''` over the
//!   proper terms of `Δ(A)`, valid in any graded connected bialgebra.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use crate::combinatorics::{
    evaluate_parts, for_each_composition, for_each_refinement, SetComposition, SetPartition,
};
use crate::error::{Error, Result};
use crate::linear::LinComb;

use super::{check_parts, coproduct_basis, require_standard, NCSymElement};

fn sign(len: usize) -> i32 {
    if len.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The signed sum over all of `Γ(r)`, together with the number of
/// (uncombined) terms it visited.
pub fn antipode_direct_counted(a: &SetPartition) -> Result<(NCSymElement, usize)> {
    require_standard(a)?;
    check_parts(a)?;
    let ground: Vec<u32> = (1..=a.len() as u32).collect();
    let mut out = NCSymElement::zero();
    let mut visited = 0usize;
    for_each_composition(&ground, &mut |parts| {
        visited += 1;
        out.add_term(evaluate_parts(parts, a), sign(parts.len()));
    });
    Ok((out, visited))
}

pub fn antipode_direct(a: &SetPartition) -> Result<NCSymElement> {
    antipode_direct_counted(a).map(|(x, _)| x)
}

/// `←r`: block indices grouped by atom, atoms listed last to first.
///
/// For atoms with `r_1, …, r_t` blocks this is
/// `({r - r_t + 1, …, r}, …, {r_1 + 1, …, r_1 + r_2}, {1, …, r_1})`.
pub fn reversed_atom_composition(a: &SetPartition) -> Result<SetComposition> {
    let counts = a.atomic_factorization()?.block_counts();
    let mut parts = Vec::with_capacity(counts.len());
    let mut start = 1u32;
    for r in counts {
        parts.push((start..start + r as u32).collect::<Vec<_>>());
        start += r as u32;
    }
    parts.reverse();
    Ok(SetComposition::from_canonical(parts))
}

/// The signed sum over refinements of [`reversed_atom_composition`].
pub fn antipode_factored(a: &SetPartition) -> Result<NCSymElement> {
    if a.is_empty() {
        return Err(Error::EmptyPartition);
    }
    require_standard(a)?;
    check_parts(a)?;
    let coarse = reversed_atom_composition(a)?;
    let mut out = NCSymElement::zero();
    for_each_refinement(coarse.parts(), &mut |parts| {
        out.add_term(evaluate_parts(parts, a), sign(parts.len()));
    });
    Ok(out)
}

/// The antipode computed by the convolution recursion, memoised.
///
/// The memo table only ever grows, and every value inserted for a key is the
/// same, so concurrent callers may race on a key harmlessly.
#[derive(Debug, Default)]
pub struct AntipodeOracle {
    memo: RwLock<HashMap<SetPartition, NCSymElement>>,
}

impl AntipodeOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn antipode(&self, a: &SetPartition) -> Result<NCSymElement> {
        require_standard(a)?;
        Ok(self.compute(a))
    }

    fn compute(&self, a: &SetPartition) -> NCSymElement {
        if let Some(hit) = self.memo.read().expect("memo lock").get(a) {
            return hit.clone();
        }
        let value = if a.is_empty() {
            NCSymElement::basis(SetPartition::empty())
        } else {
            let mut s = -NCSymElement::basis(a.clone());
            for ((left, right), c) in coproduct_basis(a).iter() {
                if left.is_empty() || right.is_empty() {
                    continue;
                }
                let term = self
                    .compute(left)
                    .product(&LinComb::basis(right.clone()))
                    .scale(c);
                s -= &term;
            }
            s
        };
        self.memo
            .write()
            .expect("memo lock")
            .entry(a.clone())
            .or_insert(value)
            .clone()
    }

    pub fn cached(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AntipodeMethod {
    Direct,
    #[default]
    Factored,
    Oracle,
}

impl AntipodeMethod {
    pub const ALL: [AntipodeMethod; 3] = [Self::Direct, Self::Factored, Self::Oracle];
}

impl fmt::Display for AntipodeMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AntipodeMethod::Direct => "direct",
            AntipodeMethod::Factored => "factored",
            AntipodeMethod::Oracle => "oracle",
        })
    }
}

impl FromStr for AntipodeMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Self::Direct),
            "factored" => Ok(Self::Factored),
            "oracle" => Ok(Self::Oracle),
            _ => Err(Error::parse(s, "expected direct, factored or oracle")),
        }
    }
}

/// `S(A)` by the chosen method, with `S(∅) = ∅` for every method.
pub fn antipode(a: &SetPartition, method: AntipodeMethod) -> Result<NCSymElement> {
    if a.is_empty() {
        return Ok(NCSymElement::basis(SetPartition::empty()));
    }
    match method {
        AntipodeMethod::Direct => antipode_direct(a),
        AntipodeMethod::Factored => antipode_factored(a),
        AntipodeMethod::Oracle => AntipodeOracle::new().antipode(a),
    }
}

/// Linear extension of [`antipode`].
pub fn antipode_of(x: &NCSymElement, method: AntipodeMethod) -> Result<NCSymElement> {
    let oracle = AntipodeOracle::new();
    let mut out = NCSymElement::zero();
    for (a, c) in x.iter() {
        let s = match method {
            AntipodeMethod::Oracle => oracle.antipode(a)?,
            _ => antipode(a, method)?,
        };
        out.add_scaled(&s, c);
    }
    Ok(out)
}
