use std::collections::BTreeSet;

use crate::coalition::{BitString, Coalition};
use crate::error::{Error, Result};

use super::prefix::PrefixGame;
use super::table::{check_universe, mask_members};
use super::Verdict;

/// A game with a finite carrier: `T` wins iff `T ∩ carrier` is one of the
/// listed subsets of the carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CarrierGame {
    carrier: u64,
    winning_on_carrier: BTreeSet<u64>,
}

impl CarrierGame {
    pub fn new<C, I, S>(carrier: C, winning_on_carrier: I) -> Result<Self>
    where
        C: IntoIterator<Item = usize>,
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        let mut carrier_mask = 0u64;
        for i in carrier {
            if i >= 64 {
                return Err(Error::UniverseTooLarge {
                    size: i + 1,
                    limit: 64,
                });
            }
            carrier_mask |= 1 << i;
        }
        let mut winning = BTreeSet::new();
        for set in winning_on_carrier {
            let mut mask = 0u64;
            for &i in set.as_ref() {
                if i >= 64 || carrier_mask >> i & 1 == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "player {i} of a winning set is not in the carrier"
                    )));
                }
                mask |= 1 << i;
            }
            winning.insert(mask);
        }
        Ok(Self {
            carrier: carrier_mask,
            winning_on_carrier: winning,
        })
    }

    pub(crate) fn from_masks(carrier: u64, winning_on_carrier: BTreeSet<u64>) -> Self {
        debug_assert!(winning_on_carrier.iter().all(|w| w & !carrier == 0));
        Self {
            carrier,
            winning_on_carrier,
        }
    }

    pub fn carrier(&self) -> Vec<usize> {
        mask_members(self.carrier)
    }

    pub fn carrier_mask(&self) -> u64 {
        self.carrier
    }

    pub fn winning_on_carrier(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<_> = self
            .winning_on_carrier
            .iter()
            .map(|&m| mask_members(m))
            .collect();
        sets.sort();
        sets
    }

    /// One more than the largest carrier member; 0 for an empty carrier.
    pub fn effective_depth(&self) -> usize {
        64 - self.carrier.leading_zeros() as usize
    }

    pub fn is_winning_mask(&self, mask: u64) -> bool {
        self.winning_on_carrier.contains(&(mask & self.carrier))
    }

    pub fn eval(&self, c: &Coalition) -> Verdict {
        Verdict::from_bool(self.is_winning_mask(c.low_mask(self.effective_depth())))
    }

    /// Determining strings of length `max(carrier) + 1`: every string of
    /// that length, split by its verdict.
    pub fn to_prefix(&self) -> Result<PrefixGame> {
        let depth = self.effective_depth();
        check_universe(depth)?;
        let mut game = PrefixGame::empty(depth);
        for mask in 0..1u64 << depth {
            let t = BitString::from_mask(mask, depth);
            if self.is_winning_mask(mask) {
                game.t1.insert(t);
            } else {
                game.t0.insert(t);
            }
        }
        Ok(game)
    }
}
