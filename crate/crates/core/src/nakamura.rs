//! Exact Nakamura numbers.
//!
//! The Nakamura number of a game is the size of the smallest family of
//! winning coalitions with empty intersection. A family `L_1, ..., L_k` has
//! empty intersection within the universe exactly when the complements of
//! the `L_i` cover the universe, so the computation is a minimum set cover
//! over complements of winning coalitions, solved by iterative deepening with
//! a counting bound. Families are explored in lexicographic order of their
//! (sorted) members, so the first cover found at the minimum size is the
//! lexicographically least witness.
//!
//! Carrier and prefix games are grounded to their `depth` explicit players
//! and only finite winning coalitions are used. This loses nothing: a winning
//! coalition `S` has the same verdict as its finite part `S ∩ {0..depth-1}`
//! (both share the deciding initial segment), replacing each member of a
//! family by its finite part only shrinks the intersection, and a family of
//! subsets of `{0..depth-1}` has empty intersection in the grounding iff it
//! has empty intersection in N.
//!
//! Weak games (no winning coalition, or a nonempty set of veto players) get
//! [`NakamuraValue::Infinite`], which orders above every finite value.

use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::games::{Game, GroundedGame};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NakamuraValue {
    Finite(usize),
    /// Stands in for a value exceeding every finite set of alternatives.
    Infinite,
}

impl NakamuraValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            NakamuraValue::Finite(k) => Some(k),
            NakamuraValue::Infinite => None,
        }
    }

    /// True when `r` alternatives are strictly fewer than this value.
    pub fn exceeds(self, r: usize) -> bool {
        self > NakamuraValue::Finite(r)
    }
}

impl Serialize for NakamuraValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            NakamuraValue::Finite(k) => serializer.serialize_u64(*k as u64),
            NakamuraValue::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for NakamuraValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Finite(usize),
            Named(String),
        }
        match Raw::deserialize(d)? {
            Raw::Finite(k) => Ok(NakamuraValue::Finite(k)),
            Raw::Named(s) if s == "infinite" => Ok(NakamuraValue::Infinite),
            Raw::Named(s) => Err(serde::de::Error::custom(format!(
                "invalid Nakamura value {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NakamuraResult {
    pub value: NakamuraValue,
    /// Winning coalitions with empty intersection, `value` of them; empty
    /// for weak games.
    pub witness: Vec<Coalition>,
}

impl Serialize for NakamuraResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let witness: Vec<Vec<usize>> = self
            .witness
            .iter()
            .map(|c| c.prefix_members().collect())
            .collect();
        let mut s = serializer.serialize_struct("NakamuraResult", 2)?;
        s.serialize_field("nu", &self.value)?;
        s.serialize_field("witness", &witness)?;
        s.end()
    }
}

pub fn nakamura_number(game: &Game) -> Result<NakamuraResult> {
    nakamura_grounded(&game.ground()?)
}

fn members(mask: u64) -> Vec<u32> {
    (0..64).filter(|j| mask >> j & 1 == 1).collect()
}

/// Finite winning coalitions, sorted lexicographically by member list.
pub(crate) fn finite_winning_sorted(g: &GroundedGame) -> Vec<u64> {
    let mut masks: Vec<u64> = g.finite_masks().filter(|&m| g.is_winning(m)).collect();
    masks.sort_by_cached_key(|&m| members(m));
    masks
}

pub fn nakamura_grounded(g: &GroundedGame) -> Result<NakamuraResult> {
    if g.is_winning(0) {
        return Err(Error::Precondition(
            "the empty coalition is winning; the Nakamura number is defined for games with ∅ losing"
                .into(),
        ));
    }
    let candidates = finite_winning_sorted(g);
    let universe = g.player_mask();
    let veto = candidates.iter().fold(universe, |acc, &m| acc & m);
    if candidates.is_empty() || veto != 0 {
        return Ok(NakamuraResult {
            value: NakamuraValue::Infinite,
            witness: Vec::new(),
        });
    }
    let complements: Vec<u64> = candidates.iter().map(|&m| universe & !m).collect();
    let mut chosen = Vec::new();
    for size in 1..=complements.len() {
        if cover(&complements, 0, size, universe, &mut chosen) {
            let witness = chosen
                .iter()
                .map(|&i| Coalition::from_mask(candidates[i]))
                .collect();
            return Ok(NakamuraResult {
                value: NakamuraValue::Finite(size),
                witness,
            });
        }
    }
    unreachable!("a nonweak game has a family with empty intersection")
}

/// Depth-first search for `left` more sets, taken in index order from
/// `start`, covering `uncovered`.
fn cover(sets: &[u64], start: usize, left: usize, uncovered: u64, chosen: &mut Vec<usize>) -> bool {
    // smaller covers were ruled out at earlier depths, so a cover uses every pick
    if uncovered == 0 || left == 0 {
        return uncovered == 0 && left == 0;
    }
    let need = uncovered.count_ones();
    let best = sets[start..]
        .iter()
        .map(|s| (s & uncovered).count_ones())
        .max()
        .unwrap_or(0);
    if best == 0 || best * (left as u32) < need {
        return false;
    }
    for i in start..sets.len() {
        if sets.len() - i < left {
            break;
        }
        if sets[i] & uncovered == 0 {
            continue;
        }
        chosen.push(i);
        if cover(sets, i + 1, left - 1, uncovered & !sets[i], chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// `min { |S| : S winning } + 1`, an upper bound on the Nakamura number of
/// a nonweak game.
pub fn ceiling_bound(game: &Game) -> Result<usize> {
    ceiling_grounded(&game.ground()?)
}

pub fn ceiling_grounded(g: &GroundedGame) -> Result<usize> {
    let winning: Vec<u64> = g.finite_masks().filter(|&m| g.is_winning(m)).collect();
    if winning.is_empty() {
        return Err(Error::BoundUndefined(
            "the game has no winning coalition".into(),
        ));
    }
    if winning.iter().fold(g.player_mask(), |acc, &m| acc & m) != 0 {
        return Err(Error::BoundUndefined("the game is weak".into()));
    }
    Ok(winning
        .iter()
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
        + 1)
}
