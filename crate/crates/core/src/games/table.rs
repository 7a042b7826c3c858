use crate::coalition::{BitString, Coalition};
use crate::error::{Error, Result};

use super::prefix::PrefixGame;
use super::Verdict;

/// Largest universe a verdict table may cover.
pub const MAX_TABLE_PLAYERS: usize = 20;

/// A simple game over the finite universe `{0, ..., n-1}`, stored as one
/// verdict per subset (indexed by bitmask).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TableGame {
    n: usize,
    winning: Vec<bool>,
}

pub(crate) fn check_universe(n: usize) -> Result<()> {
    if n > MAX_TABLE_PLAYERS {
        return Err(Error::UniverseTooLarge {
            size: n,
            limit: MAX_TABLE_PLAYERS,
        });
    }
    Ok(())
}

pub(crate) fn mask_within(members: &[usize], n: usize) -> Result<u64> {
    members.iter().try_fold(0u64, |mask, &i| {
        if i >= n {
            Err(Error::PlayerOutsideUniverse {
                player: i,
                universe: n,
            })
        } else {
            Ok(mask | 1 << i)
        }
    })
}

impl TableGame {
    pub fn new<I, S>(n: usize, winning: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        check_universe(n)?;
        let mut table = vec![false; 1 << n];
        for set in winning {
            table[mask_within(set.as_ref(), n)? as usize] = true;
        }
        Ok(Self { n, winning: table })
    }

    pub fn from_predicate(n: usize, winning: impl Fn(u64) -> bool) -> Result<Self> {
        check_universe(n)?;
        Ok(Self {
            n,
            winning: (0..1u64 << n).map(winning).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn is_winning_mask(&self, mask: u64) -> bool {
        self.winning[mask as usize]
    }

    pub fn winning_masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.winning
            .iter()
            .enumerate()
            .filter(|(_, &w)| w)
            .map(|(m, _)| m as u64)
    }

    /// Winning coalitions as sorted member lists, in lexicographic order.
    pub fn winning_sets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = self.winning_masks().map(mask_members).collect();
        sets.sort();
        sets
    }

    pub fn eval(&self, members: &[usize]) -> Result<Verdict> {
        Ok(Verdict::from_bool(
            self.is_winning_mask(mask_within(members, self.n)?),
        ))
    }

    /// Evaluates a coalition, which must be a finite subset of the universe.
    pub fn eval_coalition(&self, c: &Coalition) -> Result<Verdict> {
        let members = c.members().ok_or(Error::PlayerOutsideUniverse {
            player: c.prefix().len().max(self.n),
            universe: self.n,
        })?;
        self.eval(&members)
    }

    /// The common verdict of every subset whose initial segment is `t`, or
    /// `None` when those subsets disagree. Bits of `t` beyond the universe
    /// must be 0.
    pub fn determining_verdict(&self, t: &BitString) -> Option<bool> {
        if t.as_slice().iter().skip(self.n).any(|&b| b) {
            // no subset of the universe extends t
            return None;
        }
        let fixed = t.len().min(self.n);
        let base = BitString::from_bits(t.as_slice()[..fixed].to_vec()).to_mask();
        let free = self.n - fixed;
        let first = self.is_winning_mask(base);
        (1..1u64 << free)
            .all(|ext| self.is_winning_mask(base | ext << fixed) == first)
            .then_some(first)
    }

    /// Minimal antichain of determining strings, with depth `n`.
    pub fn extract_determining_strings(&self) -> PrefixGame {
        let mut game = PrefixGame::empty(self.n);
        let mut stack = vec![BitString::new()];
        while let Some(t) = stack.pop() {
            match self.determining_verdict(&t) {
                Some(true) => {
                    game.t1.insert(t);
                }
                Some(false) => {
                    game.t0.insert(t);
                }
                None => {
                    for bit in [true, false] {
                        let mut child = t.clone();
                        child.push(bit);
                        stack.push(child);
                    }
                }
            }
        }
        game
    }
}

pub(crate) fn mask_members(mask: u64) -> Vec<usize> {
    (0..64).filter(|j| mask >> j & 1 == 1).collect()
}
