//! Verification sweeps over all standard partitions up to a weight.
//!
//! Weights up to [`EXHAUSTIVE_WEIGHT`] are checked exhaustively; heavier
//! weights are spot-checked on a seeded random sample. Every check is
//! deterministic for a fixed configuration.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::combinatorics::{atomic_set_partitions, set_compositions, set_partitions, SetPartition};
use crate::error::{Error, Result};
use crate::freeword::{
    is_left_quasi_shuffle_of, left_quasi_shuffle, lemma_sum, pairing_phi, quasi_shuffle, Word,
};
use crate::hopf::{
    antipode_direct, antipode_factored, compare_partitions, hall_span_check, leading_term, lyndon_atom_words,
    primitive, primitive_space_dimension, unit, AntipodeOracle, DefaultAtomOrder, NCSymElement,
};

pub const EXHAUSTIVE_WEIGHT: usize = 5;

/// Heaviest weight for which the linear-algebra checks run.
const LINEAR_ALGEBRA_WEIGHT: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Coassociativity,
    Counit,
    Cocommutativity,
    Bialgebra,
    AntipodeAxioms,
    AntipodeAgreement,
    Antimorphism,
    Involution,
    Grading,
    Primitives,
    Lemma,
    Pairing,
    Unitriangularity,
    HallBasis,
    Cardinalities,
}

impl Check {
    pub const ALL: [Check; 15] = [
        Check::Coassociativity,
        Check::Counit,
        Check::Cocommutativity,
        Check::Bialgebra,
        Check::AntipodeAxioms,
        Check::AntipodeAgreement,
        Check::Antimorphism,
        Check::Involution,
        Check::Grading,
        Check::Primitives,
        Check::Lemma,
        Check::Pairing,
        Check::Unitriangularity,
        Check::HallBasis,
        Check::Cardinalities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Coassociativity => "coassociativity",
            Check::Counit => "counit",
            Check::Cocommutativity => "cocommutativity",
            Check::Bialgebra => "bialgebra",
            Check::AntipodeAxioms => "antipode-axioms",
            Check::AntipodeAgreement => "antipode-agreement",
            Check::Antimorphism => "antimorphism",
            Check::Involution => "involution",
            Check::Grading => "grading",
            Check::Primitives => "primitives",
            Check::Lemma => "lemma",
            Check::Pairing => "pairing",
            Check::Unitriangularity => "unitriangularity",
            Check::HallBasis => "hall-basis",
            Check::Cardinalities => "cardinalities",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::parse(s, "unknown check"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: Check,
    pub case: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub check: Check,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    pub max_weight: usize,
    pub checks: Vec<Check>,
    pub seed: u64,
    /// Partitions sampled per weight above [`EXHAUSTIVE_WEIGHT`].
    pub samples: usize,
}

impl Config {
    pub fn new(max_weight: usize) -> Self {
        Config {
            max_weight,
            checks: Check::ALL.to_vec(),
            seed: 0,
            samples: 8,
        }
    }
}

/// Shared inputs and caches for one run.
struct Sweep {
    max_weight: usize,
    partitions: Vec<SetPartition>,
    pairs: Vec<(SetPartition, SetPartition)>,
    antipodes: HashMap<SetPartition, NCSymElement>,
    oracle: AntipodeOracle,
}

impl Sweep {
    fn new(config: &Config) -> Self {
        let mut rng = StdRng::seed_from_u64(config.seed);
        let exhaustive = config.max_weight.min(EXHAUSTIVE_WEIGHT);
        let mut partitions: Vec<SetPartition> = (0..=exhaustive).flat_map(set_partitions).collect();
        let mut pairs = Vec::new();
        for a in &partitions {
            for b in &partitions {
                if a.weight() + b.weight() <= exhaustive {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        for w in exhaustive + 1..=config.max_weight {
            let all = set_partitions(w);
            partitions.extend(all.choose_multiple(&mut rng, config.samples).cloned());
            for _ in 0..config.samples {
                let k = rng.gen_range(1..w);
                let left = set_partitions(k);
                let right = set_partitions(w - k);
                pairs.push((
                    left.choose(&mut rng).expect("nonempty").clone(),
                    right.choose(&mut rng).expect("nonempty").clone(),
                ));
            }
        }
        Sweep {
            max_weight: config.max_weight,
            partitions,
            pairs,
            antipodes: HashMap::new(),
            oracle: AntipodeOracle::new(),
        }
    }

    /// `S(A)` by the sum over all set compositions.
    fn s(&mut self, a: &SetPartition) -> NCSymElement {
        if let Some(x) = self.antipodes.get(a) {
            return x.clone();
        }
        let x = if a.is_empty() {
            unit()
        } else {
            antipode_direct(a).expect("standard partition")
        };
        self.antipodes.insert(a.clone(), x.clone());
        x
    }

    fn s_of(&mut self, x: &NCSymElement) -> NCSymElement {
        let mut out = NCSymElement::zero();
        for (a, c) in x.iter() {
            let s = self.s(a);
            out.add_scaled(&s, c);
        }
        out
    }

    fn run(&mut self, check: Check) -> Outcome {
        let mut failures = Vec::new();
        let mut fail = |case: String, detail: String| failures.push(Failure { check, case, detail });
        let cases = match check {
            Check::Coassociativity => self.each_partition(&mut fail, |_, a| {
                let d = NCSymElement::basis(a.clone()).coproduct();
                (d.coproduct_left() == d.coproduct_right())
                    .then_some(())
                    .ok_or_else(|| "(Δ⊗id)Δ ≠ (id⊗Δ)Δ".to_string())
            }),
            Check::Counit => self.each_partition(&mut fail, |_, a| {
                let x = NCSymElement::basis(a.clone());
                let d = x.coproduct();
                let left = d.convolve(
                    |p| NCSymElement::basis(p.clone()).counit_scalar(),
                    |q| NCSymElement::basis(q.clone()),
                );
                let right = d.convolve(
                    |p| NCSymElement::basis(p.clone()),
                    |q| NCSymElement::basis(q.clone()).counit_scalar(),
                );
                if left != x {
                    Err(format!("(ε⊗id)Δ gives {}", left.to_text()))
                } else if right != x {
                    Err(format!("(id⊗ε)Δ gives {}", right.to_text()))
                } else {
                    Ok(())
                }
            }),
            Check::Cocommutativity => self.each_partition(&mut fail, |_, a| {
                let d = NCSymElement::basis(a.clone()).coproduct();
                (d.twist() == d).then_some(()).ok_or_else(|| "τΔ ≠ Δ".to_string())
            }),
            Check::Bialgebra => self.each_pair(&mut fail, |_, a, b| {
                let x = NCSymElement::basis(a.clone());
                let y = NCSymElement::basis(b.clone());
                let lhs = x.product(&y).coproduct();
                let rhs = x.coproduct().tensor_product(&y.coproduct());
                (lhs == rhs)
                    .then_some(())
                    .ok_or_else(|| "Δ(xy) ≠ Δ(x)Δ(y)".to_string())
            }),
            Check::AntipodeAxioms => self.each_partition(&mut fail, |sw, a| {
                let d = NCSymElement::basis(a.clone()).coproduct();
                let want = if a.is_empty() {
                    unit()
                } else {
                    NCSymElement::zero()
                };
                let left = sw.convolve_with_s(&d, true);
                let right = sw.convolve_with_s(&d, false);
                if left != want {
                    Err(format!("m(S⊗id)Δ = {}", left.to_text()))
                } else if right != want {
                    Err(format!("m(id⊗S)Δ = {}", right.to_text()))
                } else {
                    Ok(())
                }
            }),
            Check::AntipodeAgreement => self.each_partition(&mut fail, |sw, a| {
                if a.is_empty() {
                    return Ok(());
                }
                let direct = sw.s(a);
                let factored = antipode_factored(a).map_err(|e| e.to_string())?;
                let oracle = sw.oracle.antipode(a).map_err(|e| e.to_string())?;
                if direct != factored {
                    Err(format!(
                        "direct {} vs factored {}",
                        direct.to_text(),
                        factored.to_text()
                    ))
                } else if direct != oracle {
                    Err(format!(
                        "direct {} vs oracle {}",
                        direct.to_text(),
                        oracle.to_text()
                    ))
                } else {
                    Ok(())
                }
            }),
            Check::Antimorphism => self.each_pair(&mut fail, |sw, a, b| {
                let ab = sw.s(&a.concat(b).expect("standard"));
                let sb = sw.s(b);
                let sa = sw.s(a);
                (ab == sb.product(&sa))
                    .then_some(())
                    .ok_or_else(|| "S(AB) ≠ S(B)S(A)".to_string())
            }),
            Check::Involution => self.each_partition(&mut fail, |sw, a| {
                let s = sw.s(a);
                let ss = sw.s_of(&s);
                (ss == NCSymElement::basis(a.clone()))
                    .then_some(())
                    .ok_or_else(|| format!("S(S(A)) = {}", ss.to_text()))
            }),
            Check::Grading => {
                let mut n = self.each_partition(&mut fail, |sw, a| {
                    let w = a.weight();
                    let d = NCSymElement::basis(a.clone()).coproduct();
                    if let Some(((l, r), _)) = d.iter().find(|((l, r), _)| l.weight() + r.weight() != w) {
                        return Err(format!("coproduct term {l}⊗{r}"));
                    }
                    let s = sw.s(a);
                    if s.support().any(|b| b.weight() != w) {
                        return Err(format!("S(A) = {}", s.to_text()));
                    }
                    Ok(())
                });
                n += self.each_pair(&mut fail, |_, a, b| {
                    let p = NCSymElement::basis(a.clone()).product(&NCSymElement::basis(b.clone()));
                    (p.homogeneous_weight() == Some(a.weight() + b.weight()))
                        .then_some(())
                        .ok_or_else(|| "product weight".to_string())
                });
                n
            }
            Check::Primitives => {
                let mut n = self.each_partition(&mut fail, |_, a| {
                    if a.is_empty() {
                        return Ok(());
                    }
                    let p = primitive(a).map_err(|e| e.to_string())?;
                    if !a.is_atomic().expect("standard") {
                        return p
                            .is_zero()
                            .then_some(())
                            .ok_or_else(|| format!("p(A) = {}", p.to_text()));
                    }
                    if !p.is_primitive() {
                        return Err(format!("p(A) = {} is not primitive", p.to_text()));
                    }
                    match leading_term(&p, &DefaultAtomOrder) {
                        Some((lead, c)) if lead == a && *c == BigInt::from(1) => Ok(()),
                        _ => Err(format!("leading term of {} is not A", p.to_text())),
                    }
                });
                for w in 1..=self.max_weight.min(EXHAUSTIVE_WEIGHT) {
                    n += 1;
                    let direct = atomic_set_partitions(w).len();
                    let filtered = set_partitions(w)
                        .iter()
                        .filter(|a| a.is_atomic().expect("standard"))
                        .count();
                    if direct != filtered {
                        fail(
                            format!("weight {w}"),
                            format!("{direct} atomic vs {filtered} filtered"),
                        );
                    }
                }
                n
            }
            Check::Lemma => {
                let mut n = 0;
                for r in 2..=self.max_weight.min(EXHAUSTIVE_WEIGHT) {
                    for mask in 0u32..(1 << (r - 1)) {
                        // K contains 1 plus the indices 2..=r selected by mask.
                        let k: BTreeSet<u32> = std::iter::once(1)
                            .chain((2..=r as u32).filter(|i| mask >> (i - 2) & 1 == 1))
                            .collect();
                        let l: BTreeSet<u32> = (1..=r as u32).filter(|i| !k.contains(i)).collect();
                        if l.is_empty() {
                            continue;
                        }
                        n += 1;
                        match lemma_sum(r, &k, &l) {
                            Ok(s) if s.is_zero() => {}
                            Ok(s) => fail(format!("r={r} K={k:?}"), format!("{} nonzero terms", s.len())),
                            Err(e) => fail(format!("r={r} K={k:?}"), e.to_string()),
                        }
                    }
                }
                n
            }
            Check::Pairing => {
                let mut n = 0;
                let bound = self.max_weight.min(4);
                for k in 1..=bound {
                    for l in 1..=bound {
                        n += 1;
                        if let Err(e) = check_pairing(k, l) {
                            fail(format!("k={k} l={l}"), e);
                        }
                    }
                }
                n
            }
            Check::Unitriangularity => {
                let mut n = 0;
                for w in 1..=self.max_weight.min(EXHAUSTIVE_WEIGHT) {
                    n += 1;
                    if let Err(e) = check_unitriangular(w) {
                        fail(format!("weight {w}"), e);
                    }
                }
                n
            }
            Check::HallBasis => {
                let mut n = 0;
                for w in 1..=self.max_weight.min(LINEAR_ALGEBRA_WEIGHT) {
                    n += 1;
                    let dim = primitive_space_dimension(w);
                    let words = lyndon_atom_words(w).len();
                    if dim != words {
                        fail(
                            format!("weight {w}"),
                            format!("dimension {dim} vs {words} Lyndon words"),
                        );
                    } else if !hall_span_check(w) {
                        fail(format!("weight {w}"), "Hall primitives do not span".to_string());
                    }
                }
                n
            }
            Check::Cardinalities => {
                let mut n = 0;
                let mut bell = vec![BigInt::from(1)];
                for w in 0..=self.max_weight {
                    n += 2;
                    if w > 0 {
                        // B(w) = Σ C(w-1, i) B(i)
                        let mut b = BigInt::from(0);
                        let mut binom = BigInt::from(1);
                        for (i, bi) in bell.iter().enumerate().take(w) {
                            b += &binom * bi;
                            binom = binom * (w - 1 - i) / (i + 1);
                        }
                        bell.push(b);
                    }
                    if BigInt::from(set_partitions(w).len()) != bell[w] {
                        fail(format!("partitions of {w}"), format!("expected {}", bell[w]));
                    }
                    if BigInt::from(set_compositions(w).len()) != fubini(w) {
                        fail(format!("compositions of {w}"), format!("expected {}", fubini(w)));
                    }
                }
                n
            }
        };
        Outcome {
            check,
            cases,
            failures,
        }
    }

    fn convolve_with_s(&mut self, d: &crate::hopf::TensorElement, s_left: bool) -> NCSymElement {
        let mut out = NCSymElement::zero();
        for ((a, b), c) in d.iter() {
            let term = if s_left {
                self.s(a).product(&NCSymElement::basis(b.clone()))
            } else {
                NCSymElement::basis(a.clone()).product(&self.s(b))
            };
            out.add_scaled(&term, c);
        }
        out
    }

    fn each_partition(
        &mut self,
        fail: &mut impl FnMut(String, String),
        mut f: impl FnMut(&mut Self, &SetPartition) -> std::result::Result<(), String>,
    ) -> usize {
        let parts = self.partitions.clone();
        for a in &parts {
            if let Err(e) = f(self, a) {
                fail(a.to_string(), e);
            }
        }
        parts.len()
    }

    fn each_pair(
        &mut self,
        fail: &mut impl FnMut(String, String),
        mut f: impl FnMut(&mut Self, &SetPartition, &SetPartition) -> std::result::Result<(), String>,
    ) -> usize {
        let pairs = self.pairs.clone();
        for (a, b) in &pairs {
            if let Err(e) = f(self, a, b) {
                fail(format!("{a}, {b}"), e);
            }
        }
        pairs.len()
    }
}

impl NCSymElement {
    /// `ε(x) · ∅`.
    fn counit_scalar(&self) -> NCSymElement {
        NCSymElement::term(SetPartition::empty(), self.counit())
    }
}

fn fubini(r: usize) -> BigInt {
    // F(r) = Σ_{k=1}^{r} C(r, k) F(r-k)
    let mut f = vec![BigInt::from(1)];
    for n in 1..=r {
        let mut total = BigInt::from(0);
        let mut binom = BigInt::from(1);
        for k in 1..=n {
            binom = binom * (n + 1 - k) / k;
            total += &binom * &f[n - k];
        }
        f.push(total);
    }
    f[r].clone()
}

fn singletons(range: std::ops::RangeInclusive<u32>) -> Word {
    Word::new(range.map(|x| vec![x]).collect()).expect("valid letters")
}

/// The pairing on `u ⧢̃ v` for `u`, `v` of `k` and `l` letters is a
/// fixed-point-free involution that changes length by one.
fn check_pairing(k: usize, l: usize) -> std::result::Result<(), String> {
    let u = singletons(1..=k as u32);
    let v = singletons(k as u32 + 1..=(k + l) as u32);
    let left = left_quasi_shuffle(&u, &v).map_err(|e| e.to_string())?;
    let all = quasi_shuffle(&u, &v).map_err(|e| e.to_string())?;
    let mut signed = 0i64;
    for w in &left {
        if !all.contains(w) || !is_left_quasi_shuffle_of(w, &u, &v) {
            return Err(format!("{w} is not a left quasi-shuffle"));
        }
        let p = pairing_phi(w, &u, &v).map_err(|e| e.to_string())?;
        if !left.contains(&p) {
            return Err(format!("φ({w}) = {p} leaves the set"));
        }
        if p.len().abs_diff(w.len()) != 1 {
            return Err(format!("φ({w}) = {p} does not change length by one"));
        }
        if pairing_phi(&p, &u, &v).map_err(|e| e.to_string())? != *w {
            return Err(format!("φ(φ({w})) ≠ {w}"));
        }
        signed += if w.len() % 2 == 0 { 1 } else { -1 };
    }
    if signed != 0 {
        return Err(format!("signed count {signed}"));
    }
    Ok(())
}

/// Products of `p` over atomic factorizations form a unitriangular matrix
/// against the partition basis in the lexicographic atom order.
pub fn check_unitriangular(n: usize) -> std::result::Result<(), String> {
    let order = DefaultAtomOrder;
    let mut basis = set_partitions(n);
    basis.sort_by(|a, b| compare_partitions(&order, a, b));
    let index: HashMap<SetPartition, usize> = basis.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
    for (i, a) in basis.iter().enumerate() {
        let p = a
            .atomic_factorization()
            .expect("standard")
            .atoms()
            .iter()
            .fold(unit(), |acc, atom| acc.product(&primitive(atom).expect("atomic")));
        if p.coeff(a) != BigInt::from(1) {
            return Err(format!("diagonal entry of {a} is {}", p.coeff(a)));
        }
        let earlier = p.support().find(|b| index[*b] < i).cloned();
        if let Some(b) = earlier {
            return Err(format!("P_{a} has term {b} preceding it"));
        }
    }
    Ok(())
}

/// Run the configured checks in order.
pub fn run(config: &Config) -> Vec<Outcome> {
    let mut sweep = Sweep::new(config);
    config.checks.iter().map(|&c| sweep.run(c)).collect()
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() {
            "ok".to_string()
        } else {
            format!("FAILED ({})", self.failures.len())
        };
        write!(f, "{:<20} cases={:<6} {status}", self.check.name(), self.cases)
    }
}
