//! Words over finite sets of positive integers, quasi-shuffles, and Lyndon
//! words over an arbitrary ordered alphabet.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{anchored_set_compositions, parse_raw_blocks, SetComposition};
use crate::error::{Error, Result};
use crate::linear::LinComb;

/// A word in the free monoid on nonempty finite subsets of positive integers.
///
/// Letters are stored sorted. Distinct letters may overlap in general; the
/// quasi-shuffle operations require the two operands to be disjoint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Vec<u32>>,
}

impl Word {
    pub fn new(mut letters: Vec<Vec<u32>>) -> Result<Self> {
        for letter in &mut letters {
            if letter.is_empty() {
                return Err(Error::EmptyBlock);
            }
            letter.sort_unstable();
            if let Some(pair) = letter.windows(2).find(|p| p[0] == p[1]) {
                return Err(Error::DuplicateElement(pair[0]));
            }
            if letter[0] == 0 {
                return Err(Error::parse("0", "ground elements must be positive"));
            }
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letters(&self) -> &[Vec<u32>] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `u_[i]`, the first `i` letters.
    pub fn prefix(&self, i: usize) -> Word {
        Word {
            letters: self.letters[..i.min(self.len())].to_vec(),
        }
    }

    /// `u^[i]`, the letters after position `i`.
    pub fn suffix(&self, i: usize) -> Word {
        Word {
            letters: self.letters[i.min(self.len())..].to_vec(),
        }
    }

    /// Union of all letters.
    pub fn content(&self) -> BTreeSet<u32> {
        self.letters.iter().flatten().copied().collect()
    }

    /// Whether the letters are pairwise disjoint, i.e. the word is a set
    /// composition of its content.
    pub fn is_composition(&self) -> bool {
        self.content().len() == self.letters.iter().map(Vec::len).sum::<usize>()
    }

    pub fn to_composition(&self) -> Result<SetComposition> {
        if !self.is_composition() {
            return Err(Error::NotComposition);
        }
        Ok(SetComposition::from_canonical(self.letters.clone()))
    }

    /// Induced word on `k`; only defined for words that are set compositions.
    pub fn restrict(&self, k: &BTreeSet<u32>) -> Result<Word> {
        Ok(self.to_composition()?.restrict(k)?.into())
    }
}

impl From<SetComposition> for Word {
    fn from(c: SetComposition) -> Self {
        Word {
            letters: c.parts().to_vec(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Letters format exactly like composition parts.
        let c = SetComposition::from_canonical(self.letters.clone());
        fmt::Display::fmt(&c, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses the composition shorthand, e.g. `1|3` or `24`. Letters may
    /// overlap.
    fn from_str(s: &str) -> Result<Self> {
        if s.contains('.') {
            return Err(Error::parse(s, "`.` separates partition blocks, not letters"));
        }
        Word::new(parse_raw_blocks(s, '|')?)
    }
}

/// A duplicate-free set of words.
pub type WordSet = BTreeSet<Word>;

pub fn disjoint(u: &Word, v: &Word) -> bool {
    let cu = u.content();
    v.letters.iter().flatten().all(|x| !cu.contains(x))
}

fn require_disjoint(u: &Word, v: &Word) -> Result<()> {
    if disjoint(u, v) {
        Ok(())
    } else {
        Err(Error::NotDisjoint(u.to_string(), v.to_string()))
    }
}

fn union(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out
}

fn prepend(letter: &[u32], tails: Vec<Vec<Vec<u32>>>, out: &mut Vec<Vec<Vec<u32>>>) {
    for mut tail in tails {
        tail.insert(0, letter.to_vec());
        out.push(tail);
    }
}

fn qsh(u: &[Vec<u32>], v: &[Vec<u32>]) -> Vec<Vec<Vec<u32>>> {
    match (u.split_first(), v.split_first()) {
        (None, _) => vec![v.to_vec()],
        (_, None) => vec![u.to_vec()],
        (Some((a, u1)), Some((b, v1))) => {
            let mut out = Vec::new();
            prepend(a, qsh(u1, v), &mut out);
            prepend(&union(a, b), qsh(u1, v1), &mut out);
            prepend(b, qsh(u, v1), &mut out);
            out
        }
    }
}

fn left_qsh(u: &[Vec<u32>], v: &[Vec<u32>]) -> Vec<Vec<Vec<u32>>> {
    let (a, u1) = u.split_first().expect("nonempty");
    let (b, v1) = v.split_first().expect("nonempty");
    let mut out = Vec::new();
    prepend(a, qsh(u1, v), &mut out);
    prepend(&union(a, b), qsh(u1, v1), &mut out);
    out
}

fn collect_unique(words: Vec<Vec<Vec<u32>>>) -> WordSet {
    let mut set = WordSet::new();
    for letters in words {
        let fresh = set.insert(Word { letters });
        assert!(fresh, "quasi-shuffle of disjoint words produced a duplicate");
    }
    set
}

/// `u ⧢ v` for disjoint words.
pub fn quasi_shuffle(u: &Word, v: &Word) -> Result<WordSet> {
    require_disjoint(u, v)?;
    Ok(collect_unique(qsh(&u.letters, &v.letters)))
}

/// The left quasi-shuffles: those members of `u ⧢ v` whose first letter
/// contains the first letter of `u`.
pub fn left_quasi_shuffle(u: &Word, v: &Word) -> Result<WordSet> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyOperand);
    }
    require_disjoint(u, v)?;
    Ok(collect_unique(left_qsh(&u.letters, &v.letters)))
}

/// Membership in `u ⧢ v`, decided without enumerating: `w` must be a set
/// composition of the union of contents that restricts to `u` and to `v`.
pub fn is_quasi_shuffle_of(w: &Word, u: &Word, v: &Word) -> bool {
    let (cu, cv) = (u.content(), v.content());
    if !w.is_composition() || !u.is_composition() || !v.is_composition() {
        return false;
    }
    if !cu.is_disjoint(&cv) || w.content() != cu.union(&cv).copied().collect() {
        return false;
    }
    w.restrict(&cu).as_ref() == Ok(u) && w.restrict(&cv).as_ref() == Ok(v)
}

pub fn is_left_quasi_shuffle_of(w: &Word, u: &Word, v: &Word) -> bool {
    match (w.letters.first(), u.letters.first()) {
        (Some(w0), Some(u0)) if !v.is_empty() => {
            u0.iter().all(|x| w0.contains(x)) && is_quasi_shuffle_of(w, u, v)
        }
        _ => false,
    }
}

/// The sign-reversing pairing on `u ⧢̃ v`.
///
/// Locate the letter of `w` holding `v_1`. If that letter is exactly `v_1`
/// it is merged into the preceding letter (`u_{i+1} | v_1 ↦ u_{i+1} v_1`);
/// otherwise it is `u_{i+1} ∪ v_1` and is split back apart.
pub fn pairing_phi(w: &Word, u: &Word, v: &Word) -> Result<Word> {
    if !is_left_quasi_shuffle_of(w, u, v) {
        return Err(Error::NotLeftQuasiShuffle {
            word: w.to_string(),
            left: u.to_string(),
            right: v.to_string(),
        });
    }
    let v1 = &v.letters[0];
    let pos = w
        .letters
        .iter()
        .position(|l| l.contains(&v1[0]))
        .expect("v_1 occurs in w");
    let mut letters = w.letters.clone();
    if letters[pos] == *v1 {
        // pos > 0 because w begins with a letter containing u_1.
        let merged = union(&letters[pos - 1], v1);
        letters.splice(pos - 1..=pos, [merged]);
    } else {
        let rest: Vec<u32> = letters[pos].iter().copied().filter(|x| !v1.contains(x)).collect();
        letters.splice(pos..=pos, [rest, v1.clone()]);
    }
    Ok(Word { letters })
}

/// `Σ_{γ ∈ Γ'(r)} (-1)^{ℓ(γ)} γ⌋_K ⊗ γ⌋_L`, with like terms combined.
///
/// `K` and `L` must split `[r]` with `1 ∈ K` and `L` nonempty; the result is
/// then zero.
pub fn lemma_sum(r: usize, k: &BTreeSet<u32>, l: &BTreeSet<u32>) -> Result<LinComb<(Word, Word)>> {
    let invalid = |reason: &str| Error::InvalidSplit {
        r,
        reason: reason.to_string(),
    };
    let full: BTreeSet<u32> = (1..=r as u32).collect();
    if !k.is_disjoint(l) || k.union(l).copied().collect::<BTreeSet<_>>() != full {
        return Err(invalid("K and L must be a disjoint union equal to [r]"));
    }
    if !k.contains(&1) {
        return Err(invalid("1 must lie in K"));
    }
    if l.is_empty() {
        return Err(invalid("K must be a proper subset of [r]"));
    }
    let mut out = LinComb::zero();
    for gamma in anchored_set_compositions(r) {
        let sign = if gamma.len() % 2 == 0 { 1 } else { -1 };
        let left = Word::from(gamma.restrict_unchecked(k));
        let right = Word::from(gamma.restrict_unchecked(l));
        out.add_term((left, right), sign);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Lyndon words over an ordered alphabet
// ---------------------------------------------------------------------------

fn cmp_words<T>(a: &[T], b: &[T], cmp: &impl Fn(&T, &T) -> Ordering) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match cmp(x, y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// Lexicographic comparison of words with letters compared by `cmp`; a
/// proper prefix is smaller.
pub fn compare_words_by<T>(a: &[T], b: &[T], cmp: impl Fn(&T, &T) -> Ordering) -> Ordering {
    cmp_words(a, b, &cmp)
}

fn lyndon_unchecked<T>(w: &[T], cmp: &impl Fn(&T, &T) -> Ordering) -> bool {
    (1..w.len()).all(|i| cmp_words(w, &w[i..], cmp) == Ordering::Less)
}

/// Whether `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon_by<T>(w: &[T], cmp: impl Fn(&T, &T) -> Ordering) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(lyndon_unchecked(w, &cmp))
}

pub fn is_lyndon<T: Ord>(w: &[T]) -> Result<bool> {
    is_lyndon_by(w, T::cmp)
}

/// Standard factorization `w = uv` with `v` the longest proper Lyndon suffix.
pub fn lyndon_factorize_by<T>(w: &[T], cmp: impl Fn(&T, &T) -> Ordering) -> Result<(&[T], &[T])> {
    if !is_lyndon_by(w, &cmp)? {
        return Err(Error::NotLyndon);
    }
    if w.len() == 1 {
        return Err(Error::SingleLetter);
    }
    Ok(split_unchecked(w, &cmp))
}

pub fn lyndon_factorize<T: Ord>(w: &[T]) -> Result<(&[T], &[T])> {
    lyndon_factorize_by(w, T::cmp)
}

fn split_unchecked<'a, T>(w: &'a [T], cmp: &impl Fn(&T, &T) -> Ordering) -> (&'a [T], &'a [T]) {
    let i = (1..w.len())
        .find(|&i| lyndon_unchecked(&w[i..], cmp))
        .expect("the last letter is a Lyndon suffix");
    w.split_at(i)
}

/// A complete binary bracketing of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketTree<T> {
    Leaf(T),
    Bracket(Box<BracketTree<T>>, Box<BracketTree<T>>),
}

impl<T> BracketTree<T> {
    /// Letters read left to right.
    pub fn leaves(&self) -> Vec<&T> {
        match self {
            BracketTree::Leaf(x) => vec![x],
            BracketTree::Bracket(l, r) => {
                let mut out = l.leaves();
                out.extend(r.leaves());
                out
            }
        }
    }

    /// Evaluate bottom-up with `leaf` on letters and `bracket` on pairs.
    pub fn fold<R>(&self, leaf: &mut impl FnMut(&T) -> R, bracket: &mut impl FnMut(R, R) -> R) -> R {
        match self {
            BracketTree::Leaf(x) => leaf(x),
            BracketTree::Bracket(l, r) => {
                let a = l.fold(leaf, bracket);
                let b = r.fold(leaf, bracket);
                bracket(a, b)
            }
        }
    }
}

impl<T: fmt::Display> fmt::Display for BracketTree<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(x) => write!(f, "{x}"),
            BracketTree::Bracket(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

/// The Hall bracketing `[[w]]` of a Lyndon word, built by recursive standard
/// factorization.
pub fn hall_tree_by<T: Clone>(w: &[T], cmp: impl Fn(&T, &T) -> Ordering) -> Result<BracketTree<T>> {
    if !is_lyndon_by(w, &cmp)? {
        return Err(Error::NotLyndon);
    }
    fn build<T: Clone>(w: &[T], cmp: &impl Fn(&T, &T) -> Ordering) -> BracketTree<T> {
        if w.len() == 1 {
            return BracketTree::Leaf(w[0].clone());
        }
        let (u, v) = split_unchecked(w, cmp);
        BracketTree::Bracket(Box::new(build(u, cmp)), Box::new(build(v, cmp)))
    }
    Ok(build(w, &cmp))
}

pub fn hall_tree<T: Ord + Clone>(w: &[T]) -> Result<BracketTree<T>> {
    hall_tree_by(w, T::cmp)
}
