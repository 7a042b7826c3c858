use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::games::GroundedGame;

use super::{bit, Profile};

const NONE: u64 = u64::MAX;

/// For every set of explicit players, the numerically least winning
/// coalition inside it, if any.
#[derive(Debug, Clone)]
pub struct DominanceOracle {
    players: usize,
    table_bound: bool,
    least_winning_subset: Vec<u64>,
}

impl DominanceOracle {
    pub fn new(g: &GroundedGame) -> Self {
        let mut least = vec![NONE; 1 << g.players()];
        for m in g.finite_masks() {
            let mut best = if g.is_winning(m) { m } else { NONE };
            for j in 0..g.players() {
                if m >> j & 1 == 1 {
                    best = best.min(least[(m & !(1 << j)) as usize]);
                }
            }
            least[m as usize] = best;
        }
        Self {
            players: g.players(),
            table_bound: !g.has_tail(),
            least_winning_subset: least,
        }
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn certificate(&self, supporters: u64) -> Option<u64> {
        let c = self.least_winning_subset[supporters as usize];
        (c != NONE).then_some(c)
    }

    fn check_profile(&self, p: &Profile) -> Result<()> {
        if self.table_bound && p.players() > self.players {
            return Err(Error::PlayerOutsideUniverse {
                player: p.players() - 1,
                universe: self.players,
            });
        }
        Ok(())
    }

    /// Players among the explicit ones who strictly prefer `x` to `y`.
    pub fn supporters(&self, p: &Profile, x: usize, y: usize) -> u64 {
        (0..self.players.min(p.players()))
            .filter(|&i| p.prefs()[i].prefers(x, y))
            .fold(0, |m, i| m | 1 << i)
    }

    /// Dominance relation packed like a preference, without certificates.
    pub fn relation(&self, p: &Profile) -> u64 {
        let size = p.alternatives().len();
        let mut rel = 0;
        for x in 0..size {
            for y in 0..size {
                if x != y && self.certificate(self.supporters(p, x, y)).is_some() {
                    rel |= bit(size, x, y);
                }
            }
        }
        rel
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominancePair {
    pub winner: usize,
    pub loser: usize,
    /// A winning coalition all of whose members prefer `winner` to `loser`.
    pub coalition: Coalition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dominance {
    size: usize,
    rel: u64,
    pairs: Vec<DominancePair>,
}

impl Dominance {
    pub(crate) fn from_relation(size: usize, rel: u64) -> Self {
        Self {
            size,
            rel,
            pairs: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn raw(&self) -> u64 {
        self.rel
    }

    pub fn dominates(&self, x: usize, y: usize) -> bool {
        self.rel & bit(self.size, x, y) != 0
    }

    /// Certified pairs in lexicographic order.
    pub fn pairs(&self) -> &[DominancePair] {
        &self.pairs
    }
}

pub fn dominance(g: &GroundedGame, p: &Profile) -> Result<Dominance> {
    let oracle = DominanceOracle::new(g);
    oracle.check_profile(p)?;
    let size = p.alternatives().len();
    let mut rel = 0;
    let mut pairs = Vec::new();
    for x in 0..size {
        for y in 0..size {
            if x == y {
                continue;
            }
            if let Some(cert) = oracle.certificate(oracle.supporters(p, x, y)) {
                rel |= bit(size, x, y);
                pairs.push(DominancePair {
                    winner: x,
                    loser: y,
                    coalition: Coalition::from_mask(cert),
                });
            }
        }
    }
    Ok(Dominance { size, rel, pairs })
}

/// Alternatives no other alternative dominates.
pub fn core_of(d: &Dominance) -> Vec<usize> {
    (0..d.size)
        .filter(|&x| (0..d.size).all(|y| !d.dominates(y, x)))
        .collect()
}

pub fn core(g: &GroundedGame, p: &Profile) -> Result<Vec<usize>> {
    Ok(core_of(&dominance(g, p)?))
}

/// A shortest cycle `x_1 ≻ x_2 ≻ ... ≻ x_m ≻ x_1` of the relation, preferring
/// the smallest starting alternative among shortest ones; `None` when the
/// relation is acyclic.
pub fn find_cycle(d: &Dominance) -> Option<Vec<usize>> {
    let n = d.size;
    let mut best: Option<Vec<usize>> = None;
    for start in 0..n {
        // breadth-first search for the shortest path back to start
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::from([start]);
        let mut closing = None;
        'search: while let Some(x) = queue.pop_front() {
            for y in (0..n).filter(|&y| d.dominates(x, y)) {
                if y == start {
                    closing = Some(x);
                    break 'search;
                }
                if parent[y] == usize::MAX && y != start {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if let Some(mut x) = closing {
            let mut cycle = vec![x];
            while x != start {
                x = parent[x];
                cycle.push(x);
            }
            cycle.reverse();
            if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                best = Some(cycle);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{named, Game, TableGame};
    use crate::social_choice::{Alternatives, Preference};

    fn ground(game: impl Into<Game>) -> GroundedGame {
        game.into().ground().unwrap()
    }

    fn profile(r: usize, prefs: Vec<Preference>) -> Profile {
        Profile::new(Alternatives::indexed(r).unwrap(), prefs).unwrap()
    }

    fn condorcet() -> Profile {
        profile(
            3,
            vec![
                Preference::linear(3, &[0, 1, 2]).unwrap(),
                Preference::linear(3, &[1, 2, 0]).unwrap(),
                Preference::linear(3, &[2, 0, 1]).unwrap(),
            ],
        )
    }

    #[test]
    fn majority_dominance() {
        let ab = Preference::new(2, [(0, 1)]).unwrap();
        let ba = Preference::new(2, [(1, 0)]).unwrap();
        let p = profile(2, vec![ab, ab, ba]);
        let d = dominance(&ground(named::majority(3).unwrap()), &p).unwrap();
        assert!(d.dominates(0, 1));
        assert!(!d.dominates(1, 0));
        assert_eq!(d.pairs()[0].coalition, Coalition::finite([0, 1]));

        let d = dominance(&ground(named::unanimity(3).unwrap()), &p).unwrap();
        assert_eq!(d.raw(), 0);

        let shared = profile(2, vec![ab; 3]);
        let d = dominance(&ground(named::a_game(3).unwrap()), &shared).unwrap();
        assert!(d.dominates(0, 1));
    }

    #[test]
    fn core_examples() {
        let linear = Preference::linear(3, &[0, 1, 2]).unwrap();
        let p = profile(3, vec![linear; 3]);
        assert_eq!(
            core(&ground(named::unanimity(3).unwrap()), &p).unwrap(),
            vec![0]
        );

        let majority = ground(named::majority(3).unwrap());
        let d = dominance(&majority, &condorcet()).unwrap();
        assert!(core_of(&d).is_empty());
        let cycle = find_cycle(&d).unwrap();
        assert_eq!(cycle.len(), 3);
        for (n, &x) in cycle.iter().enumerate() {
            assert!(d.dominates(x, cycle[(n + 1) % 3]));
        }
    }

    #[test]
    fn cycle_edge_cases() {
        assert_eq!(find_cycle(&Dominance::from_relation(3, 0)), None);
        assert_eq!(find_cycle(&Dominance::from_relation(2, bit(2, 0, 1))), None);
        let two_cycle = bit(2, 0, 1) | bit(2, 1, 0);
        assert_eq!(
            find_cycle(&Dominance::from_relation(2, two_cycle)),
            Some(vec![0, 1])
        );
    }

    #[test]
    fn profile_outside_table_universe() {
        let g = ground(TableGame::new(2, [vec![0, 1]]).unwrap());
        let p = profile(2, vec![Preference::empty(2); 3]);
        assert!(matches!(
            dominance(&g, &p),
            Err(Error::PlayerOutsideUniverse { .. })
        ));
    }

    #[test]
    fn players_beyond_carrier_are_ignored() {
        // dictator(0): only player 0's preference matters
        let g = ground(named::dictator(0).unwrap());
        let lead = Preference::linear(2, &[0, 1]).unwrap();
        let reverse = Preference::linear(2, &[1, 0]).unwrap();
        let short = profile(2, vec![lead]);
        let long = profile(2, vec![lead, reverse, reverse, reverse]);
        assert_eq!(
            dominance(&g, &short).unwrap().raw(),
            dominance(&g, &long).unwrap().raw()
        );
    }
}
