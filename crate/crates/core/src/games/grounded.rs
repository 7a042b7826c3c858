//! Finite grounding of a game for exhaustive analysis.
//!
//! Table games ground to their universe. Carrier and prefix games ground to
//! `depth` explicit players plus one extra atom standing for every player at
//! or beyond `depth` at once: coalitions of the form "prefix of length depth,
//! then a constant tail" are exactly the subsets of these atoms, and union,
//! intersection, complement and inclusion all agree with the corresponding
//! operations on the coalitions themselves. Since verdicts of these games only
//! depend on the first `depth` bits, quantifying over the atoms is exhaustive.

use crate::coalition::{BitString, Coalition};
use crate::error::{Error, Result};

use super::table::{check_universe, mask_within, MAX_TABLE_PLAYERS};
use super::{Game, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundedGame {
    players: usize,
    tail: bool,
    winning: Vec<bool>,
}

impl GroundedGame {
    pub fn new(game: &Game) -> Result<Self> {
        match game {
            Game::Table(t) => Ok(Self {
                players: t.n(),
                tail: false,
                winning: (0..1u64 << t.n()).map(|m| t.is_winning_mask(m)).collect(),
            }),
            Game::Carrier(c) => {
                let players = c.effective_depth();
                check_universe(players)?;
                Ok(Self::with_tail(players, |m| c.is_winning_mask(m)))
            }
            Game::Prefix(p) => {
                let report = p.validate();
                if !report.well_formed {
                    return Err(Error::MalformedPrefixGame(format!(
                        "{:?}",
                        report.violations
                    )));
                }
                if !report.total {
                    let first = report.violations.iter().find_map(|v| match v {
                        super::prefix::Violation::Unbarred { string } => Some(string.to_string()),
                        _ => None,
                    });
                    return Err(Error::NotTotal(first.unwrap_or_default()));
                }
                let players = p.depth;
                check_universe(players)?;
                let mut verdicts = vec![false; 1 << players];
                for t in &p.t1 {
                    let base = t.to_mask();
                    let free = players - t.len();
                    for ext in 0..1u64 << free {
                        verdicts[(base | ext << t.len()) as usize] = true;
                    }
                }
                Ok(Self::with_tail(players, |m| verdicts[m as usize]))
            }
        }
    }

    fn with_tail(players: usize, low: impl Fn(u64) -> bool) -> Self {
        let low_mask = (1u64 << players) - 1;
        Self {
            players,
            tail: true,
            winning: (0..1u64 << (players + 1))
                .map(|m| low(m & low_mask))
                .collect(),
        }
    }

    /// Explicit players `0..players`.
    pub fn players(&self) -> usize {
        self.players
    }

    /// Whether an extra atom stands for all players from `players` on.
    pub fn has_tail(&self) -> bool {
        self.tail
    }

    pub fn atoms(&self) -> usize {
        self.players + usize::from(self.tail)
    }

    pub fn universe(&self) -> u64 {
        (1u64 << self.atoms()) - 1
    }

    pub fn player_mask(&self) -> u64 {
        (1u64 << self.players) - 1
    }

    pub fn tail_bit(&self) -> u64 {
        if self.tail {
            1 << self.players
        } else {
            0
        }
    }

    pub fn is_winning(&self, mask: u64) -> bool {
        self.winning[mask as usize]
    }

    pub fn verdict(&self, mask: u64) -> Verdict {
        Verdict::from_bool(self.is_winning(mask))
    }

    pub fn complement(&self, mask: u64) -> u64 {
        self.universe() & !mask
    }

    /// Every atom mask, in increasing order.
    pub fn masks(&self) -> std::ops::Range<u64> {
        0..1u64 << self.atoms()
    }

    /// Masks of finite coalitions (the tail atom absent).
    pub fn finite_masks(&self) -> std::ops::Range<u64> {
        0..1u64 << self.players
    }

    pub fn winning_masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.masks().filter(|&m| self.is_winning(m))
    }

    pub fn coalition(&self, mask: u64) -> Coalition {
        Coalition::new(
            BitString::from_mask(mask, self.players),
            self.tail && mask & self.tail_bit() != 0,
        )
    }

    /// Atom mask with the same verdict as `c`. For table games `c` must be a
    /// finite subset of the universe.
    pub fn mask_of(&self, c: &Coalition) -> Result<u64> {
        if self.tail {
            let tail = if c.tail() { self.tail_bit() } else { 0 };
            return Ok(c.low_mask(self.players) | tail);
        }
        match c.members() {
            Some(members) => mask_within(&members, self.players),
            None => Err(Error::PlayerOutsideUniverse {
                player: c.prefix().len().max(self.players),
                universe: self.players,
            }),
        }
    }

    pub fn eval(&self, c: &Coalition) -> Result<Verdict> {
        Ok(self.verdict(self.mask_of(c)?))
    }
}

// The table limit bounds both groundings.
const _: () = assert!(MAX_TABLE_PLAYERS < 63);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{named, PrefixGame};

    #[test]
    fn carrier_grounding_has_tail_atom() {
        let g = Game::Carrier(named::dictator(1).unwrap()).ground().unwrap();
        assert_eq!(g.players(), 2);
        assert!(g.has_tail());
        assert_eq!(g.atoms(), 3);
        assert!(g.is_winning(0b010));
        assert!(g.is_winning(0b110));
        assert!(!g.is_winning(0b101));
        assert_eq!(g.coalition(0b101), Coalition::cofinite([1]));
        assert_eq!(g.mask_of(&Coalition::cofinite([1])).unwrap(), 0b101);
    }

    #[test]
    fn prefix_grounding_requires_total() {
        let gap = PrefixGame::new(2, ["00".parse().unwrap()], ["11".parse().unwrap()]);
        assert!(matches!(
            Game::Prefix(gap).ground(),
            Err(Error::NotTotal(_))
        ));
        let bad = PrefixGame::new(2, ["10".parse().unwrap()], ["1".parse().unwrap()]);
        assert!(matches!(
            Game::Prefix(bad).ground(),
            Err(Error::MalformedPrefixGame(_))
        ));
    }

    #[test]
    fn prefix_grounding_matches_eval() {
        let p = named::a_game(4).unwrap().extract_determining_strings();
        let g = Game::Prefix(p.clone()).ground().unwrap();
        for mask in g.masks() {
            assert_eq!(g.verdict(mask), p.eval(&g.coalition(mask)));
        }
    }

    #[test]
    fn table_mask_of_rejects_cofinite() {
        let g = Game::Table(named::unanimity(2).unwrap()).ground().unwrap();
        assert!(g.mask_of(&Coalition::all()).is_err());
        assert_eq!(g.mask_of(&Coalition::finite([0, 1])).unwrap(), 3);
    }
}
