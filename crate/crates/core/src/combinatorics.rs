//! Set partitions and set compositions.
//!
//! Ground elements are positive integers. A [`SetPartition`] keeps its blocks
//! sorted internally and ordered by their minima, so block `k` (1-based) is
//! well defined and `A_K` selects blocks by that index. A [`SetComposition`]
//! is an ordered list of disjoint blocks; besides being a combinatorial
//! object it acts on set partitions through [`SetComposition::evaluate`].
//!
//! Both types use the usual shorthand: `13.28.4` for the partition
//! `{{1,3},{2,8},{4}}` and `38|12|4` for the composition
//! `({3,8},{1,2},{4})`. Elements above 9 need the comma form, e.g.
//! `1,13.2,8.4`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Empty-object marker accepted by the parsers.
pub const EMPTY_SYMBOL: &str = "∅";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Notation {
    /// One digit per element, e.g. `13.28.4`. Elements must be at most 9.
    Compact,
    /// Comma-separated elements, e.g. `1,3.2,8.4`.
    Extended,
}

// ---------------------------------------------------------------------------
// Shared block handling
// ---------------------------------------------------------------------------

/// Sort every block and check the blocks are nonempty, disjoint and free of 0.
fn normalize_blocks(mut blocks: Vec<Vec<u32>>) -> Result<Vec<Vec<u32>>> {
    let mut seen = BTreeSet::new();
    for block in &mut blocks {
        if block.is_empty() {
            return Err(Error::EmptyBlock);
        }
        block.sort_unstable();
        for &x in block.iter() {
            if x == 0 {
                return Err(Error::parse("0", "ground elements must be positive"));
            }
            if !seen.insert(x) {
                return Err(Error::DuplicateElement(x));
            }
        }
    }
    Ok(blocks)
}

fn format_blocks(blocks: &[Vec<u32>], sep: char, notation: Notation) -> Result<String> {
    let mut out = String::new();
    match notation {
        Notation::Compact => {
            for (i, block) in blocks.iter().enumerate() {
                if i > 0 {
                    out.push(sep);
                }
                for &x in block {
                    if x > 9 {
                        return Err(Error::NotCompact(x));
                    }
                    out.push(char::from(b'0' + x as u8));
                }
            }
        }
        Notation::Extended => {
            let mut has_comma = false;
            for (i, block) in blocks.iter().enumerate() {
                if i > 0 {
                    out.push(sep);
                }
                has_comma |= block.len() > 1;
                let parts: Vec<String> = block.iter().map(u32::to_string).collect();
                out.push_str(&parts.join(","));
            }
            // Without any comma the text would be read back as compact; a
            // trailing comma marks it as extended when that reading differs.
            if !has_comma && blocks.iter().flatten().any(|&x| x > 9) {
                out.push(',');
            }
        }
    }
    Ok(out)
}

/// Preferred display: compact when every element is a single digit.
fn display_blocks(blocks: &[Vec<u32>], sep: char) -> String {
    if blocks.is_empty() {
        return EMPTY_SYMBOL.to_string();
    }
    format_blocks(blocks, sep, Notation::Compact)
        .or_else(|_| format_blocks(blocks, sep, Notation::Extended))
        .expect("extended notation is total")
}

fn parse_blocks(text: &str, sep: char) -> Result<Vec<Vec<u32>>> {
    normalize_blocks(parse_raw_blocks(text, sep)?)
}

/// Split shorthand into blocks without checking disjointness.
pub(crate) fn parse_raw_blocks(text: &str, sep: char) -> Result<Vec<Vec<u32>>> {
    let text = text.trim();
    if text.is_empty() || text == EMPTY_SYMBOL {
        return Ok(Vec::new());
    }
    let extended = text.contains(',');
    let body = if extended {
        text.strip_suffix(',').unwrap_or(text)
    } else {
        text
    };
    let mut blocks = Vec::new();
    for token in body.split(sep) {
        let token = token.trim();
        if token.is_empty() {
            return Err(Error::EmptyBlock);
        }
        let block = if extended {
            token
                .split(',')
                .map(|item| {
                    let item = item.trim();
                    item.parse::<u32>()
                        .ok()
                        .filter(|&x| x > 0)
                        .ok_or_else(|| Error::parse(item, "malformed integer"))
                })
                .collect::<Result<Vec<u32>>>()?
        } else {
            token
                .chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d),
                    _ => Err(Error::parse(
                        token,
                        format!("unexpected `{c}` (compact blocks hold digits 1-9)"),
                    )),
                })
                .collect::<Result<Vec<u32>>>()?
        };
        blocks.push(block);
    }
    Ok(blocks)
}

fn check_indices(idx: &BTreeSet<usize>, len: usize) -> Result<()> {
    match idx.iter().find(|&&k| k == 0 || k > len) {
        Some(&index) => Err(Error::IndexOutOfRange { index, len }),
        None => Ok(()),
    }
}

// ---------------------------------------------------------------------------
// Set partitions
// ---------------------------------------------------------------------------

/// A set partition of a finite set of positive integers.
///
/// Blocks are sorted and ordered by their minimum element. The derived order
/// compares block lists lexicographically and is only used for map keys.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut blocks = normalize_blocks(blocks)?;
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    /// The partition of the empty set, the unit of NCSym.
    pub fn empty() -> Self {
        SetPartition::default()
    }

    /// Build from blocks that are already canonical.
    pub(crate) fn from_canonical(blocks: Vec<Vec<u32>>) -> Self {
        debug_assert!(blocks.windows(2).all(|w| w[0][0] < w[1][0]));
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Number of elements, `|A|`.
    pub fn weight(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Number of blocks, `ℓ(A)`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground_set(&self) -> BTreeSet<u32> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// True when the ground set is `[n]` for `n = weight`.
    pub fn is_standard(&self) -> bool {
        let n = self.weight() as u32;
        self.blocks.iter().flatten().all(|&x| x <= n)
    }

    fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(Error::NotStandard(self.to_string()))
        }
    }

    pub fn shift(&self, k: u32) -> SetPartition {
        SetPartition {
            blocks: self
                .blocks
                .iter()
                .map(|b| b.iter().map(|x| x + k).collect())
                .collect(),
        }
    }

    /// Relabel the ground set to `[n]` along the increasing bijection.
    pub fn standardize(&self) -> SetPartition {
        if self.is_standard() {
            return self.clone();
        }
        let ground: Vec<u32> = self.ground_set().into_iter().collect();
        let rank = |x: &u32| ground.binary_search(x).expect("element of ground set") as u32 + 1;
        SetPartition {
            blocks: self.blocks.iter().map(|b| b.iter().map(rank).collect()).collect(),
        }
    }

    /// `B | C = B ∪ C↑m` for standard `B ⊢ [m]` and `C`.
    pub fn concat(&self, other: &SetPartition) -> Result<SetPartition> {
        self.require_standard()?;
        other.require_standard()?;
        Ok(self.concat_unchecked(other))
    }

    pub(crate) fn concat_unchecked(&self, other: &SetPartition) -> SetPartition {
        let m = self.weight() as u32;
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().map(|b| b.iter().map(|x| x + m).collect()));
        // Shifted blocks have minima above m, so the order is preserved.
        SetPartition { blocks }
    }

    /// The sub-partition `A_K` of blocks with (1-based) index in `K`.
    pub fn sub_partition(&self, indices: &BTreeSet<usize>) -> Result<SetPartition> {
        check_indices(indices, self.len())?;
        Ok(self.select(indices.iter().copied()))
    }

    /// Blocks at the given 1-based indices, in block order if the indices
    /// are increasing.
    pub(crate) fn select(&self, indices: impl IntoIterator<Item = usize>) -> SetPartition {
        let mut blocks: Vec<Vec<u32>> = indices.into_iter().map(|k| self.blocks[k - 1].clone()).collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { blocks }
    }

    /// Positions after which a prefix of blocks covers an initial segment.
    ///
    /// Returns the block counts `c` such that the first `c` blocks partition
    /// `[m]` for some `m`, always ending with `len()` when nonempty.
    fn cut_points(&self) -> Vec<usize> {
        let mut cuts = Vec::new();
        let mut seen = 0usize;
        let mut max = 0u32;
        for (i, block) in self.blocks.iter().enumerate() {
            seen += block.len();
            max = max.max(*block.last().expect("nonempty block"));
            if max as usize == seen {
                cuts.push(i + 1);
            }
        }
        cuts
    }

    /// Whether `A` admits no splitting `A = B|C` with `B` and `C` nonempty.
    /// The empty partition is not atomic.
    pub fn is_atomic(&self) -> Result<bool> {
        self.require_standard()?;
        Ok(self.cut_points().len() == 1)
    }

    /// The maximal splitting of a standard partition into atoms.
    pub fn atomic_factorization(&self) -> Result<AtomicFactorization> {
        self.require_standard()?;
        let mut atoms = Vec::new();
        let mut start = 0;
        let mut offset = 0u32;
        for cut in self.cut_points() {
            let piece = SetPartition {
                blocks: self.blocks[start..cut]
                    .iter()
                    .map(|b| b.iter().map(|x| x - offset).collect())
                    .collect(),
            };
            offset += piece.weight() as u32;
            atoms.push(piece);
            start = cut;
        }
        Ok(AtomicFactorization { atoms })
    }

    pub fn format(&self, notation: Notation) -> Result<String> {
        format_blocks(&self.blocks, '.', notation)
    }

    /// Extended notation, the key for deterministic enumeration order.
    pub fn canonical_string(&self) -> String {
        format_blocks(&self.blocks, '.', Notation::Extended).expect("extended notation is total")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_blocks(&self.blocks, '.'))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains('|') {
            return Err(Error::parse(s, "`|` separates composition parts, not blocks"));
        }
        SetPartition::new(parse_blocks(s, '.')?)
    }
}

/// The maximal splitting `A = A' | A'' | ⋯` of a standard set partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomicFactorization {
    atoms: Vec<SetPartition>,
}

impl AtomicFactorization {
    pub fn atoms(&self) -> &[SetPartition] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Block counts `r_1, …, r_t` of the atoms.
    pub fn block_counts(&self) -> Vec<usize> {
        self.atoms.iter().map(SetPartition::len).collect()
    }

    /// Concatenate the atoms back together.
    pub fn product(&self) -> SetPartition {
        self.atoms
            .iter()
            .fold(SetPartition::empty(), |acc, a| acc.concat_unchecked(a))
    }

    pub fn into_atoms(self) -> Vec<SetPartition> {
        self.atoms
    }
}

impl fmt::Display for AtomicFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str(EMPTY_SYMBOL);
        }
        let parts: Vec<String> = self.atoms.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" | "))
    }
}

// ---------------------------------------------------------------------------
// Set compositions
// ---------------------------------------------------------------------------

/// An ordered sequence of disjoint nonempty finite sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SetComposition {
    parts: Vec<Vec<u32>>,
}

impl SetComposition {
    pub fn new(parts: Vec<Vec<u32>>) -> Result<Self> {
        Ok(SetComposition {
            parts: normalize_blocks(parts)?,
        })
    }

    pub fn empty() -> Self {
        SetComposition::default()
    }

    pub(crate) fn from_canonical(parts: Vec<Vec<u32>>) -> Self {
        SetComposition { parts }
    }

    /// The one-part composition `([r])`.
    pub fn single_part(r: usize) -> Self {
        if r == 0 {
            return Self::empty();
        }
        SetComposition {
            parts: vec![(1..=r as u32).collect()],
        }
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn ground_set(&self) -> BTreeSet<u32> {
        self.parts.iter().flatten().copied().collect()
    }

    /// The induced composition `γ⌋_K`: intersect each part with `K` and drop
    /// the parts that become empty.
    pub fn restrict(&self, k: &BTreeSet<u32>) -> Result<SetComposition> {
        let ground = self.ground_set();
        if let Some(x) = k.iter().find(|x| !ground.contains(x)) {
            return Err(Error::NotSubset(x.to_string()));
        }
        Ok(self.restrict_unchecked(k))
    }

    pub(crate) fn restrict_unchecked(&self, k: &BTreeSet<u32>) -> SetComposition {
        SetComposition {
            parts: self
                .parts
                .iter()
                .map(|p| p.iter().copied().filter(|x| k.contains(x)).collect::<Vec<_>>())
                .filter(|p| !p.is_empty())
                .collect(),
        }
    }

    /// The subsequence `γ_K` of parts at (1-based) positions in `K`.
    pub fn subsequence(&self, positions: &BTreeSet<usize>) -> Result<SetComposition> {
        check_indices(positions, self.len())?;
        Ok(SetComposition {
            parts: positions.iter().map(|&k| self.parts[k - 1].clone()).collect(),
        })
    }

    /// `self ≻ coarser`: every part of `coarser` is the union of a contiguous
    /// run of parts of `self`.
    pub fn refines(&self, coarser: &SetComposition) -> Result<bool> {
        if self.ground_set() != coarser.ground_set() {
            return Err(Error::GroundSetMismatch);
        }
        let mut fine = self.parts.iter();
        for target in &coarser.parts {
            let target: BTreeSet<u32> = target.iter().copied().collect();
            let mut covered = 0;
            while covered < target.len() {
                let Some(part) = fine.next() else {
                    return Ok(false);
                };
                if !part.iter().all(|x| target.contains(x)) {
                    return Ok(false);
                }
                covered += part.len();
            }
        }
        Ok(true)
    }

    /// `γ[A] = st(A_{γ_1}) | st(A_{γ_2}) | ⋯` where the parts of `γ` index the
    /// blocks of `A`. Each selection is standardized, so `A` may be a
    /// partition of any finite set and the result is always standard.
    pub fn evaluate(&self, a: &SetPartition) -> Result<SetPartition> {
        if let Some(&index) = self.parts.iter().flatten().find(|&&k| k as usize > a.len()) {
            return Err(Error::IndexOutOfRange {
                index: index as usize,
                len: a.len(),
            });
        }
        Ok(evaluate_parts(&self.parts, a))
    }

    pub fn format(&self, notation: Notation) -> Result<String> {
        format_blocks(&self.parts, '|', notation)
    }

    pub fn canonical_string(&self) -> String {
        format_blocks(&self.parts, '|', Notation::Extended).expect("extended notation is total")
    }
}

/// `γ[A]` without validation; `parts` must index blocks of `a`.
pub(crate) fn evaluate_parts<P: AsRef<[u32]>>(parts: &[P], a: &SetPartition) -> SetPartition {
    let mut blocks: Vec<Vec<u32>> = Vec::with_capacity(a.len());
    let mut offset = 0u32;
    for part in parts {
        let piece = a.select(part.as_ref().iter().map(|&k| k as usize)).standardize();
        let w = piece.weight() as u32;
        blocks.extend(
            piece
                .blocks
                .into_iter()
                .map(|b| b.into_iter().map(|x| x + offset).collect()),
        );
        offset += w;
    }
    SetPartition::from_canonical(blocks)
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_blocks(&self.parts, '|'))
    }
}

impl FromStr for SetComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains('.') {
            return Err(Error::parse(s, "`.` separates partition blocks, not parts"));
        }
        SetComposition::new(parse_blocks(s, '|')?)
    }
}

/// Result of [`parse`], which picks the type from the separator in use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shorthand {
    Partition(SetPartition),
    Composition(SetComposition),
}

/// Parse shorthand; text containing `|` is a composition, anything else a
/// partition.
pub fn parse(text: &str) -> Result<Shorthand> {
    if text.contains('|') {
        text.parse().map(Shorthand::Composition)
    } else {
        text.parse().map(Shorthand::Partition)
    }
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// All set partitions of `[n]`, ordered by canonical string.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    // Insert n into each block of every partition of [n-1], or alone.
    let mut current = vec![Vec::<Vec<u32>>::new()];
    for x in 1..=n as u32 {
        let mut next = Vec::new();
        for blocks in &current {
            for i in 0..blocks.len() {
                let mut b = blocks.clone();
                b[i].push(x);
                next.push(b);
            }
            let mut b = blocks.clone();
            b.push(vec![x]);
            next.push(b);
        }
        current = next;
    }
    let mut out: Vec<SetPartition> = current.into_iter().map(SetPartition::from_canonical).collect();
    out.sort_by_cached_key(SetPartition::canonical_string);
    out
}

/// Atomic set partitions of `[n]`: those where every cut `1..m | m+1..n`
/// with `0 < m < n` is crossed by some block.
pub fn atomic_set_partitions(n: usize) -> Vec<SetPartition> {
    if n == 0 {
        return Vec::new();
    }
    set_partitions(n)
        .into_iter()
        .filter(|a| (1..n as u32).all(|m| a.blocks().iter().any(|b| b[0] <= m && *b.last().unwrap() > m)))
        .collect()
}

/// Visit every set composition of `ground` (as slices of parts).
pub(crate) fn for_each_composition<F: FnMut(&[Vec<u32>])>(ground: &[u32], f: &mut F) {
    fn rec<F: FnMut(&[Vec<u32>])>(rest: &[u32], acc: &mut Vec<Vec<u32>>, f: &mut F) {
        if rest.is_empty() {
            f(acc);
            return;
        }
        // The first part is any nonempty subset of `rest`.
        let n = rest.len();
        for mask in 1u64..(1 << n) {
            let (part, remaining): (Vec<_>, Vec<_>) =
                rest.iter().enumerate().partition(|(i, _)| mask >> i & 1 == 1);
            acc.push(part.into_iter().map(|(_, &x)| x).collect());
            let remaining: Vec<u32> = remaining.into_iter().map(|(_, &x)| x).collect();
            rec(&remaining, acc, f);
            acc.pop();
        }
    }
    assert!(ground.len() < 64, "ground set too large to enumerate");
    rec(ground, &mut Vec::new(), f);
}

fn sorted_compositions(mut v: Vec<SetComposition>) -> Vec<SetComposition> {
    v.sort_by_cached_key(SetComposition::canonical_string);
    v
}

/// All set compositions of `[r]`.
pub fn set_compositions(r: usize) -> Vec<SetComposition> {
    let ground: Vec<u32> = (1..=r as u32).collect();
    let mut out = Vec::new();
    for_each_composition(&ground, &mut |parts| {
        out.push(SetComposition::from_canonical(parts.to_vec()))
    });
    sorted_compositions(out)
}

/// Set compositions of `[r]` whose first part contains 1.
pub fn anchored_set_compositions(r: usize) -> Vec<SetComposition> {
    set_compositions(r)
        .into_iter()
        .filter(|g| g.parts().first().is_none_or(|p| p.contains(&1)))
        .collect()
}

/// Visit every refinement of `coarse`: one composition of each of its parts,
/// concatenated in order.
pub(crate) fn for_each_refinement<F: FnMut(&[Vec<u32>])>(coarse: &[Vec<u32>], f: &mut F) {
    fn rec<F: FnMut(&[Vec<u32>])>(coarse: &[Vec<u32>], acc: &mut Vec<Vec<u32>>, f: &mut F) {
        match coarse.split_first() {
            None => f(acc),
            Some((head, tail)) => {
                for_each_composition(head, &mut |parts: &[Vec<u32>]| {
                    let len = acc.len();
                    acc.extend_from_slice(parts);
                    rec(tail, acc, f);
                    acc.truncate(len);
                });
            }
        }
    }
    rec(coarse, &mut Vec::new(), f);
}

/// All `γ` with `γ ≻ coarse`.
pub fn refinements(coarse: &SetComposition) -> Vec<SetComposition> {
    let mut out = Vec::new();
    for_each_refinement(coarse.parts(), &mut |parts| {
        out.push(SetComposition::from_canonical(parts.to_vec()))
    });
    sorted_compositions(out)
}
