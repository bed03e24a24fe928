//! JSON encodings of elements and tensors.
//!
//! An element is `{"terms":[{"coeff":"-1","partition":[[1],[2,3]]}, …]}`,
//! terms sorted by the canonical partition string. Coefficients are decimal
//! strings so they round-trip at any size.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinatorics::SetPartition;
use crate::error::{Error, Result};

use super::{canonical_cmp, NCSymElement, TensorElement};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub partition: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub terms: Vec<TensorTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub coeff: String,
    pub left: Vec<Vec<u32>>,
    pub right: Vec<Vec<u32>>,
}

fn parse_coeff(s: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|_| Error::parse(s, "coefficient must be a signed decimal string"))
}

fn partition(blocks: Vec<Vec<u32>>) -> Result<SetPartition> {
    let a = SetPartition::new(blocks)?;
    if !a.is_standard() {
        return Err(Error::NotStandard(a.to_string()));
    }
    Ok(a)
}

impl From<&NCSymElement> for ElementJson {
    fn from(x: &NCSymElement) -> Self {
        ElementJson {
            terms: x
                .sorted_terms_by(canonical_cmp)
                .into_iter()
                .map(|(a, c)| TermJson {
                    coeff: c.to_string(),
                    partition: a.blocks().to_vec(),
                })
                .collect(),
        }
    }
}

impl TryFrom<ElementJson> for NCSymElement {
    type Error = Error;

    fn try_from(j: ElementJson) -> Result<Self> {
        let mut out = NCSymElement::zero();
        for t in j.terms {
            out.add_term(partition(t.partition)?, parse_coeff(&t.coeff)?);
        }
        Ok(out)
    }
}

impl From<&TensorElement> for TensorJson {
    fn from(x: &TensorElement) -> Self {
        TensorJson {
            terms: x
                .sorted_terms_by(|(a, b), (c, d)| canonical_cmp(a, c).then_with(|| canonical_cmp(b, d)))
                .into_iter()
                .map(|((a, b), c)| TensorTermJson {
                    coeff: c.to_string(),
                    left: a.blocks().to_vec(),
                    right: b.blocks().to_vec(),
                })
                .collect(),
        }
    }
}

impl TryFrom<TensorJson> for TensorElement {
    type Error = Error;

    fn try_from(j: TensorJson) -> Result<Self> {
        let mut out = TensorElement::zero();
        for t in j.terms {
            out.add_term((partition(t.left)?, partition(t.right)?), parse_coeff(&t.coeff)?);
        }
        Ok(out)
    }
}

pub fn element_to_json(x: &NCSymElement) -> String {
    serde_json::to_string(&ElementJson::from(x)).expect("serializable")
}

pub fn element_from_json(s: &str) -> Result<NCSymElement> {
    let j: ElementJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    j.try_into()
}

pub fn tensor_to_json(x: &TensorElement) -> String {
    serde_json::to_string(&TensorJson::from(x)).expect("serializable")
}

pub fn tensor_from_json(s: &str) -> Result<TensorElement> {
    let j: TensorJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    j.try_into()
}
