//! A prefix game built from an injected enumeration of pairs `(k_s, v_s)`.
//!
//! Each entry contributes the set `F_s` of strings of length
//! `l_s = max(l_{s-1}, k_s + 1)` that carry `v_s` at position `k_s` and the
//! opposite value `1 - v_t` at every earlier position `k_t`. Members of `F_s`
//! go to `t1` when `v_s = 1` and to `t0` otherwise. With a finite list of
//! entries the resulting game is usually not total.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::coalition::BitString;
use crate::error::{Error, Result};

use super::prefix::PrefixGame;

/// Largest string length the construction will materialise.
pub const MAX_CONSTRUCTION_LENGTH: usize = 24;

/// Finite list of `(k_s, v_s)` with pairwise distinct `k_s`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PartialEnumeration {
    entries: Vec<(usize, bool)>,
}

impl PartialEnumeration {
    pub fn new(entries: Vec<(usize, bool)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(k, _) in &entries {
            if !seen.insert(k) {
                return Err(Error::DuplicateIndex(k));
            }
            if k >= MAX_CONSTRUCTION_LENGTH {
                return Err(Error::InvalidParameter(format!(
                    "enumeration index {k} exceeds the supported maximum {}",
                    MAX_CONSTRUCTION_LENGTH - 1
                )));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(usize, bool)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub s: usize,
    pub k: usize,
    pub value: bool,
    pub l: usize,
    /// `F_s`, in lexicographic order.
    pub strings: Vec<BitString>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Membership {
    InT0,
    InT1,
    NotInF,
}

/// An initial segment of the reference set `A` with both a winning and a
/// losing extension among the determining strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarrierWitness {
    pub l: usize,
    pub segment: BitString,
    pub winning_ext: BitString,
    pub losing_ext: BitString,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumConstruction {
    pub enumeration: PartialEnumeration,
    pub game: PrefixGame,
    pub trace: Vec<TraceStep>,
}

fn satisfies(entries: &[(usize, bool)], s: usize, alpha: &BitString) -> bool {
    let (k, v) = entries[s];
    alpha.get(k) == Some(v)
        && entries[..s]
            .iter()
            .all(|&(kt, vt)| alpha.get(kt) == Some(!vt))
}

pub fn enum_construction(enumeration: &PartialEnumeration) -> EnumConstruction {
    let entries = enumeration.entries();
    let mut game = PrefixGame::empty(0);
    let mut trace = Vec::with_capacity(entries.len());
    let mut l = 0;
    for (s, &(k, v)) in entries.iter().enumerate() {
        l = l.max(k + 1);
        // every constrained position is below l, so F_s is the set of fillings of the
        // remaining positions
        let fixed: Vec<(usize, bool)> = entries[..s]
            .iter()
            .map(|&(kt, vt)| (kt, !vt))
            .chain(std::iter::once((k, v)))
            .collect();
        let free: Vec<usize> = (0..l)
            .filter(|j| fixed.iter().all(|&(p, _)| p != *j))
            .collect();
        let mut strings = Vec::with_capacity(1 << free.len());
        for fill in 0..1u64 << free.len() {
            let mut bits = vec![false; l];
            for &(p, b) in &fixed {
                bits[p] = b;
            }
            for (n, &p) in free.iter().enumerate() {
                bits[p] = fill >> n & 1 == 1;
            }
            strings.push(BitString::from_bits(bits));
        }
        strings.sort();
        let target = if v { &mut game.t1 } else { &mut game.t0 };
        target.extend(strings.iter().cloned());
        trace.push(TraceStep {
            s,
            k,
            value: v,
            l,
            strings,
        });
    }
    game.depth = l;
    EnumConstruction {
        enumeration: enumeration.clone(),
        game,
        trace,
    }
}

impl EnumConstruction {
    pub fn lengths(&self) -> Vec<usize> {
        self.trace.iter().map(|t| t.l).collect()
    }

    /// Decides membership of `sigma` the way the construction is generated:
    /// walk the lengths `l_s` to the first one reaching `|sigma|`, then test
    /// `sigma` against the constraints of every `F_s` of exactly that length.
    pub fn membership_decision(&self, sigma: &BitString) -> Membership {
        let entries = self.enumeration.entries();
        let Some(first) = self.trace.iter().position(|t| t.l >= sigma.len()) else {
            return Membership::NotInF;
        };
        for step in self.trace[first..]
            .iter()
            .take_while(|t| t.l == sigma.len())
        {
            if satisfies(entries, step.s, sigma) {
                return if step.value {
                    Membership::InT1
                } else {
                    Membership::InT0
                };
            }
        }
        Membership::NotInF
    }

    /// The reference set `A`: `A(k_t) = 1 - v_t`, every other bit 0.
    pub fn reference_segment(&self, l: usize) -> BitString {
        let mut bits = vec![false; l];
        for &(k, v) in self.enumeration.entries() {
            if k < l {
                bits[k] = !v;
            }
        }
        BitString::from_bits(bits)
    }

    /// Every `l <= depth` at which `A ∩ l` extends to both a winning and a
    /// losing determining string. Each such `l` shows that no subset of
    /// `{0, ..., l-1}` is a carrier. Empty when no level qualifies.
    pub fn no_finite_carrier_witness(&self) -> Vec<CarrierWitness> {
        let shortest_extension = |set: &BTreeSet<BitString>, segment: &BitString| {
            set.iter()
                .filter(|t| segment.is_prefix_of(t))
                .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
                .cloned()
        };
        (0..=self.game.depth)
            .filter_map(|l| {
                let segment = self.reference_segment(l);
                let winning_ext = shortest_extension(&self.game.t1, &segment)?;
                let losing_ext = shortest_extension(&self.game.t0, &segment)?;
                Some(CarrierWitness {
                    l,
                    segment,
                    winning_ext,
                    losing_ext,
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(entries: &[(usize, u8)]) -> EnumConstruction {
        let e =
            PartialEnumeration::new(entries.iter().map(|&(k, v)| (k, v == 1)).collect()).unwrap();
        enum_construction(&e)
    }

    fn strs(v: &[BitString]) -> Vec<String> {
        v.iter().map(|t| t.to_string()).collect()
    }

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn single_entry() {
        let c = build(&[(2, 1)]);
        assert_eq!(c.lengths(), [3]);
        assert_eq!(strs(&c.trace[0].strings), ["001", "011", "101", "111"]);
        assert!(c.game.t0.is_empty());
        assert_eq!(c.game.t1.len(), 4);
        assert!(c.no_finite_carrier_witness().is_empty());
    }

    #[test]
    fn three_entries() {
        let c = build(&[(2, 1), (0, 0), (1, 1)]);
        assert_eq!(c.lengths(), [3, 3, 3]);
        assert_eq!(strs(&c.trace[1].strings), ["000", "010"]);
        assert_eq!(strs(&c.trace[2].strings), ["110"]);
        let report = c.game.validate();
        assert!(report.well_formed);
        assert!(!report.total);
        assert!(matches!(
            c.game.eval(&crate::coalition::Coalition::finite([0])),
            crate::games::Verdict::Undetermined(_)
        ));

        assert_eq!(c.membership_decision(&bs("010")), Membership::InT0);
        assert_eq!(c.membership_decision(&bs("110")), Membership::InT1);
        assert_eq!(c.membership_decision(&bs("100")), Membership::NotInF);
        assert_eq!(c.membership_decision(&bs("11")), Membership::NotInF);
        assert_eq!(c.membership_decision(&bs("1101")), Membership::NotInF);
    }

    #[test]
    fn empty_enumeration() {
        let c = build(&[]);
        assert_eq!(c.game.depth, 0);
        assert!(!c.game.validate().total);
        assert!(c.no_finite_carrier_witness().is_empty());
        assert_eq!(c.membership_decision(&BitString::new()), Membership::NotInF);
    }

    #[test]
    fn witness_for_two_entries() {
        // F_0 = {1} (winning), F_1 = {000, 010} (losing); A = 001...
        let c = build(&[(0, 1), (2, 0)]);
        assert_eq!(c.lengths(), [1, 3]);
        assert_eq!(c.reference_segment(3), bs("001"));
        let w = c.no_finite_carrier_witness();
        assert_eq!(
            w,
            vec![CarrierWitness {
                l: 0,
                segment: BitString::new(),
                winning_ext: bs("1"),
                losing_ext: bs("000"),
            }]
        );
    }

    #[test]
    fn rejects_duplicates() {
        assert_eq!(
            PartialEnumeration::new(vec![(1, true), (1, false)]),
            Err(Error::DuplicateIndex(1))
        );
        assert!(PartialEnumeration::new(vec![(MAX_CONSTRUCTION_LENGTH, true)]).is_err());
    }
}
