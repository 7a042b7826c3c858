//! Bit strings, eventually-constant coalitions and finite permutations.
//!
//! A [`Coalition`] is a subset of the natural numbers that is either finite
//! or cofinite. It is stored as an explicit membership prefix followed by a
//! constant tail bit, trimmed so that equal sets have equal representations.

use std::borrow::Borrow;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite 0/1 sequence. Bit `j` of an initial segment says whether player
/// `j` belongs to the coalition.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            bits: vec![false; len],
        }
    }

    pub fn ones(len: usize) -> Self {
        Self {
            bits: vec![true; len],
        }
    }

    /// The `len`-bit string whose bit `j` is bit `j` of `mask`.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        Self {
            bits: (0..len).map(|j| j < 64 && mask >> j & 1 == 1).collect(),
        }
    }

    /// Packs the string into a mask. Only meaningful for strings of at most
    /// 64 bits.
    pub fn to_mask(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0, |m, (j, _)| m | 1 << j)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, j: usize) -> Option<bool> {
        self.bits.get(j).copied()
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn pop(&mut self) -> Option<bool> {
        self.bits.pop()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        Self { bits }
    }

    /// True iff `self` is an initial segment of `other` (every string is a
    /// prefix of itself).
    pub fn is_prefix_of(&self, other: &BitString) -> bool {
        other.bits.starts_with(&self.bits)
    }

    /// Neither string extends the other.
    pub fn is_incomparable_with(&self, other: &BitString) -> bool {
        !self.is_prefix_of(other) && !other.is_prefix_of(self)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

impl Borrow<[bool]> for BitString {
    fn borrow(&self) -> &[bool] {
        &self.bits
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!(
                    "invalid bit {other:?} in string {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_bits)
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Size class of an eventually-constant set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CardinalityClass {
    /// A finite set with this many members.
    Finite(usize),
    /// A cofinite set missing this many players.
    Cofinite(usize),
}

/// A finite or cofinite set of players.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition {
    prefix: BitString,
    tail: bool,
}

impl Coalition {
    pub fn new(prefix: BitString, tail: bool) -> Self {
        let mut c = Self { prefix, tail };
        c.trim();
        c
    }

    pub fn empty() -> Self {
        Self::new(BitString::new(), false)
    }

    /// The grand coalition N.
    pub fn all() -> Self {
        Self::new(BitString::new(), true)
    }

    pub fn finite<I: IntoIterator<Item = usize>>(members: I) -> Self {
        Self::with_exceptions(members, false)
    }

    /// N minus the given players.
    pub fn cofinite<I: IntoIterator<Item = usize>>(missing: I) -> Self {
        Self::with_exceptions(missing, true)
    }

    fn with_exceptions<I: IntoIterator<Item = usize>>(exceptions: I, tail: bool) -> Self {
        let mut bits = Vec::new();
        for i in exceptions {
            if bits.len() <= i {
                bits.resize(i + 1, tail);
            }
            bits[i] = !tail;
        }
        Self::new(BitString::from_bits(bits), tail)
    }

    /// The finite coalition whose members are the set bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        Self::new(BitString::from_mask(mask, 64), false)
    }

    fn trim(&mut self) {
        while self.prefix.bits.last() == Some(&self.tail) {
            self.prefix.bits.pop();
        }
    }

    pub fn prefix(&self) -> &BitString {
        &self.prefix
    }

    pub fn tail(&self) -> bool {
        self.tail
    }

    pub fn is_finite(&self) -> bool {
        !self.tail
    }

    pub fn contains(&self, player: usize) -> bool {
        self.prefix.get(player).unwrap_or(self.tail)
    }

    /// Explicit members below the tail region.
    pub fn prefix_members(&self) -> impl Iterator<Item = usize> + '_ {
        self.prefix
            .bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
    }

    /// Players outside the set that lie below the tail region.
    pub fn prefix_non_members(&self) -> impl Iterator<Item = usize> + '_ {
        self.prefix
            .bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| !b)
            .map(|(i, _)| i)
    }

    /// Members of a finite coalition, `None` for a cofinite one.
    pub fn members(&self) -> Option<Vec<usize>> {
        self.is_finite().then(|| self.prefix_members().collect())
    }

    /// The first `k` membership bits.
    pub fn initial_segment(&self, k: usize) -> BitString {
        BitString::from_bits((0..k).map(|j| self.contains(j)).collect())
    }

    /// True iff `t` is an initial segment of this coalition.
    pub fn extends(&self, t: &BitString) -> bool {
        t.bits
            .iter()
            .enumerate()
            .all(|(j, &b)| self.contains(j) == b)
    }

    pub fn complement(&self) -> Coalition {
        Self::new(
            BitString::from_bits(self.prefix.bits.iter().map(|b| !b).collect()),
            !self.tail,
        )
    }

    pub fn intersection(&self, other: &Coalition) -> Coalition {
        let len = self.prefix.len().max(other.prefix.len());
        Self::new(
            BitString::from_bits(
                (0..len)
                    .map(|j| self.contains(j) && other.contains(j))
                    .collect(),
            ),
            self.tail && other.tail,
        )
    }

    pub fn is_subset_of(&self, other: &Coalition) -> bool {
        let len = self.prefix.len().max(other.prefix.len());
        (0..len).all(|j| !self.contains(j) || other.contains(j)) && (!self.tail || other.tail)
    }

    /// The image `{ p(i) : i in self }`.
    pub fn permute(&self, p: &FinitePermutation) -> Coalition {
        let len = self.prefix.len().max(p.domain());
        let inverse = p.inverse();
        Self::new(
            BitString::from_bits((0..len).map(|j| self.contains(inverse.apply(j))).collect()),
            self.tail,
        )
    }

    pub fn cardinality_class(&self) -> CardinalityClass {
        if self.tail {
            CardinalityClass::Cofinite(self.prefix_non_members().count())
        } else {
            CardinalityClass::Finite(self.prefix_members().count())
        }
    }

    /// Mask of the explicit members below `width`.
    pub fn low_mask(&self, width: usize) -> u64 {
        let width = width.min(64);
        let explicit = self.prefix.len().min(width);
        let mut mask = self.prefix.bits[..explicit]
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0u64, |m, (j, _)| m | 1 << j);
        if self.tail && explicit < width {
            let below = |k: usize| if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
            mask |= below(width) & !below(explicit);
        }
        mask
    }
}

fn fmt_set<I: Iterator<Item = usize>>(f: &mut fmt::Formatter<'_>, items: I) -> fmt::Result {
    f.write_str("{")?;
    for (n, i) in items.enumerate() {
        if n > 0 {
            f.write_str(",")?;
        }
        write!(f, "{i}")?;
    }
    f.write_str("}")
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tail {
            f.write_str("co")?;
            fmt_set(f, self.prefix_non_members())
        } else {
            fmt_set(f, self.prefix_members())
        }
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_set(body: &str) -> Result<Vec<usize>> {
    let body = body.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|item| {
            item.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("invalid player {item:?}: {e}")))
        })
        .collect()
}

impl FromStr for Coalition {
    type Err = Error;

    /// Accepts `"10101+0"` (prefix and tail bit), `"{0,2,4}"` and `"co{0}"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        fn set_body<'a>(whole: &str, rest: &'a str) -> Result<&'a str> {
            rest.strip_prefix('{')
                .and_then(|r| r.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("unbalanced braces in coalition {whole:?}")))
        }
        if let Some(rest) = s.strip_prefix("co") {
            return Ok(Self::cofinite(parse_set(set_body(s, rest)?)?));
        }
        if s.starts_with('{') {
            return Ok(Self::finite(parse_set(set_body(s, s)?)?));
        }
        let (prefix, tail) = s
            .split_once('+')
            .ok_or_else(|| Error::Parse(format!("unrecognised coalition syntax {s:?}")))?;
        let tail = match tail {
            "0" => false,
            "1" => true,
            other => return Err(Error::Parse(format!("invalid tail bit {other:?}"))),
        };
        Ok(Self::new(prefix.parse()?, tail))
    }
}

impl Serialize for Coalition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Coalition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A bijection on `{0, ..., m-1}`, extended by the identity beyond `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePermutation {
    mapping: Vec<usize>,
}

impl FinitePermutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; mapping.len()];
        for &image in &mapping {
            if image >= mapping.len() || std::mem::replace(&mut seen[image], true) {
                return Err(Error::InvalidParameter(format!(
                    "mapping {mapping:?} is not a bijection on its domain"
                )));
            }
        }
        Ok(Self { mapping })
    }

    pub fn identity() -> Self {
        Self {
            mapping: Vec::new(),
        }
    }

    pub fn swap(i: usize, j: usize) -> Self {
        let mut mapping: Vec<usize> = (0..=i.max(j)).collect();
        mapping.swap(i, j);
        Self { mapping }
    }

    pub fn domain(&self) -> usize {
        self.mapping.len()
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn apply(&self, i: usize) -> usize {
        self.mapping.get(i).copied().unwrap_or(i)
    }

    pub fn inverse(&self) -> Self {
        let mut mapping = vec![0; self.mapping.len()];
        for (i, &image) in self.mapping.iter().enumerate() {
            mapping[image] = i;
        }
        Self { mapping }
    }

    /// Number of players moved.
    pub fn support(&self) -> usize {
        self.mapping
            .iter()
            .enumerate()
            .filter(|(i, &p)| *i != p)
            .count()
    }
}

impl Serialize for FinitePermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.mapping.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FinitePermutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let mapping = Vec::<usize>::deserialize(deserializer)?;
        Self::new(mapping).map_err(serde::de::Error::custom)
    }
}
