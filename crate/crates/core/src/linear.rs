//! Finitely supported integer linear combinations over an ordered basis.

use std::cmp::Ordering;
use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A formal sum `Σ c_b · b` with exact integer coefficients.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, BigInt>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, BigInt::one())
    }

    pub fn term(b: B, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(b, coeff);
        out
    }

    pub fn add_term(&mut self, b: B, coeff: impl Into<BigInt>) {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> BigInt {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c * factor)).collect(),
        }
    }

    /// Extend a map on basis elements linearly.
    pub fn map_linear<C, F>(&self, mut f: F) -> LinComb<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Extend a map of basis elements to basis elements linearly.
    pub fn map_basis<C, F>(&self, mut f: F) -> LinComb<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> C,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Bilinear extension of a map on pairs of basis elements.
    pub fn bilinear<C, D, F>(&self, other: &LinComb<C>, mut f: F) -> LinComb<D>
    where
        C: Ord + Clone,
        D: Ord + Clone,
        F: FnMut(&B, &C) -> LinComb<D>,
    {
        let mut out = LinComb::zero();
        for (b, cb) in &self.terms {
            for (c, cc) in &other.terms {
                out.add_scaled(&f(b, c), &(cb * cc));
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &BigInt) {
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c * factor);
        }
    }

    /// The term that is minimal under `cmp`, if any.
    pub fn min_term_by<F>(&self, mut cmp: F) -> Option<(&B, &BigInt)>
    where
        F: FnMut(&B, &B) -> Ordering,
    {
        self.terms.iter().min_by(|x, y| cmp(x.0, y.0))
    }

    /// Terms sorted by `cmp` rather than by the map order.
    pub fn sorted_terms_by<F>(&self, mut cmp: F) -> Vec<(&B, &BigInt)>
    where
        F: FnMut(&B, &B) -> Ordering,
    {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|x, y| cmp(x.0, y.0));
        v
    }
}

impl<B: Ord + Clone> FromIterator<(B, BigInt)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, BigInt)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), -c);
        }
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self += &rhs;
        self
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self -= &rhs;
        self
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(mut self) -> LinComb<B> {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        -self.clone()
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Render terms as `(b1) - 2(b2) + (b3)`.
///
/// A lone basis element with coefficient one is printed bare, and the zero
/// combination prints as `0`.
pub fn format_terms<'a, B: 'a>(
    terms: impl IntoIterator<Item = (&'a B, &'a BigInt)>,
    mut fmt_basis: impl FnMut(&B) -> String,
) -> String {
    let terms: Vec<_> = terms.into_iter().collect();
    match terms.as_slice() {
        [] => return "0".to_string(),
        [(b, c)] if c.is_one() => return fmt_basis(b),
        _ => {}
    }
    let mut out = String::new();
    for (i, (b, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let mag = c.abs();
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push('(');
        out.push_str(&fmt_basis(b));
        out.push(')');
    }
    out
}

/// Inverse of [`format_terms`].
pub fn parse_terms<B: Ord + Clone>(
    text: &str,
    mut parse_basis: impl FnMut(&str) -> Result<B>,
) -> Result<LinComb<B>> {
    let text = text.trim();
    if text == "0" {
        return Ok(LinComb::zero());
    }
    let mut out = LinComb::zero();
    let mut rest = text;
    let mut first = true;
    while !rest.is_empty() {
        rest = rest.trim_start();
        let mut sign = BigInt::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            if first {
                return Err(Error::parse(text, "leading `+`"));
            }
            rest = r.trim_start();
        } else if !first {
            return Err(Error::parse(rest, "expected `+` or `-` between terms"));
        }
        let digits = rest.len() - rest.trim_start_matches(|c: char| c.is_ascii_digit()).len();
        if rest[digits..].starts_with('(') {
            let coeff = if digits == 0 {
                BigInt::one()
            } else {
                rest[..digits]
                    .parse::<BigInt>()
                    .map_err(|_| Error::parse(&rest[..digits], "malformed coefficient"))?
            };
            let body = &rest[digits + 1..];
            let close = body.find(')').ok_or_else(|| Error::parse(rest, "unclosed `(`"))?;
            out.add_term(parse_basis(body[..close].trim())?, sign * coeff);
            rest = &body[close + 1..];
        } else {
            let end = rest
                .find(|c: char| c.is_whitespace() || c == '+' || c == '-')
                .unwrap_or(rest.len());
            if end == 0 {
                return Err(Error::parse(rest, "expected a term"));
            }
            out.add_term(parse_basis(&rest[..end])?, sign);
            rest = &rest[end..];
        }
        first = false;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_u(s: &str) -> Result<u32> {
        s.parse().map_err(|_| Error::parse(s, "int"))
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut x = LinComb::basis(3u32);
        x.add_term(3, -1);
        assert!(x.is_zero());
        assert_eq!(x, LinComb::zero());
    }

    #[test]
    fn arithmetic() {
        let x = LinComb::term(1u32, 2) + LinComb::term(2u32, -3);
        let y = LinComb::term(2u32, 3);
        assert_eq!(&x + &y, LinComb::term(1u32, 2));
        assert_eq!((&x - &x).len(), 0);
        assert_eq!(x.l1_norm(), BigInt::from(5));
        assert_eq!(-(-x.clone()), x);
    }

    #[test]
    fn text_round_trip() {
        let x = LinComb::term(7u32, -1) + LinComb::term(4u32, 12) + LinComb::basis(5u32);
        let s = format_terms(x.iter(), |b| b.to_string());
        assert_eq!(s, "12(4) + (5) - (7)");
        assert_eq!(parse_terms(&s, parse_u).unwrap(), x);
        assert_eq!(
            format_terms(LinComb::<u32>::zero().iter(), |b| b.to_string()),
            "0"
        );
        assert_eq!(format_terms(LinComb::basis(9u32).iter(), |b| b.to_string()), "9");
        assert_eq!(parse_terms("-(9)", parse_u).unwrap(), LinComb::term(9u32, -1));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_terms("(1) (2)", parse_u).is_err());
        assert!(parse_terms("(1", parse_u).is_err());
        assert!(parse_terms("+(1)", parse_u).is_err());
    }
}
