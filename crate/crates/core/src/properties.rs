//! Exhaustive checkers for game properties.
//!
//! Every checker works on a [`GroundedGame`], obtained from any
//! representation with [`Game::ground`](crate::games::Game::ground); grounding
//! fails with [`Error::NotTotal`] on prefix games that leave some coalition
//! undetermined. Table games are checked over all subsets of their universe.
//! Carrier and prefix games are checked over every coalition whose prefix has
//! length `depth`, with both tail values, which covers all verdicts because
//! only the first `depth` bits matter.

use serde::{Deserialize, Serialize};

use crate::coalition::{Coalition, FinitePermutation};
use crate::error::{Error, Result};
use crate::games::{GroundedGame, PrefixGame, Verdict};
use crate::nakamura::nakamura_grounded;

/// Default bound on the support of permutations in the anonymity check.
pub const DEFAULT_MAX_SUPPORT: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Coalition {
        coalition: Coalition,
    },
    Pair {
        first: Coalition,
        second: Coalition,
    },
    Family {
        coalitions: Vec<Coalition>,
    },
    Permutation {
        permutation: FinitePermutation,
        coalition: Coalition,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    fn new(property: &str, holds: bool, witness: Option<Witness>) -> Self {
        Self {
            property: property.to_string(),
            holds,
            witness,
        }
    }

    fn holds(property: &str) -> Self {
        Self::new(property, true, None)
    }

    fn fails(property: &str, witness: Witness) -> Self {
        Self::new(property, false, Some(witness))
    }

    fn renamed(mut self, property: &str) -> Self {
        self.property = property.to_string();
        self
    }
}

fn pair(g: &GroundedGame, first: u64, second: u64) -> Witness {
    Witness::Pair {
        first: g.coalition(first),
        second: g.coalition(second),
    }
}

/// No winning coalition has a losing superset. Checking one-atom extensions
/// is enough; the witness is such a pair `(S, S ∪ {i})`.
pub fn is_monotonic(g: &GroundedGame) -> PropertyReport {
    for s in g.winning_masks() {
        for atom in 0..g.atoms() {
            let t = s | 1 << atom;
            if t != s && !g.is_winning(t) {
                return PropertyReport::fails("monotonic", pair(g, s, t));
            }
        }
    }
    PropertyReport::holds("monotonic")
}

/// A winning coalition's complement is losing.
pub fn is_proper(g: &GroundedGame) -> PropertyReport {
    match g.winning_masks().find(|&s| g.is_winning(g.complement(s))) {
        Some(s) => PropertyReport::fails(
            "proper",
            Witness::Coalition {
                coalition: g.coalition(s),
            },
        ),
        None => PropertyReport::holds("proper"),
    }
}

/// A losing coalition's complement is winning.
pub fn is_strong(g: &GroundedGame) -> PropertyReport {
    match g
        .masks()
        .find(|&s| !g.is_winning(s) && !g.is_winning(g.complement(s)))
    {
        Some(s) => PropertyReport::fails(
            "strong",
            Witness::Coalition {
                coalition: g.coalition(s),
            },
        ),
        None => PropertyReport::holds("strong"),
    }
}

/// Intersection of all winning coalitions (the whole universe when nothing
/// wins).
pub fn veto_players(g: &GroundedGame) -> Coalition {
    g.coalition(g.winning_masks().fold(g.universe(), |acc, m| acc & m))
}

fn empty_intersection_family(g: &GroundedGame) -> Witness {
    if g.is_winning(0) {
        return Witness::Family {
            coalitions: vec![Coalition::empty()],
        };
    }
    let family = nakamura_grounded(g).map(|r| r.witness).unwrap_or_default();
    Witness::Family { coalitions: family }
}

/// Weak: nothing wins, or some player belongs to every winning coalition.
pub fn is_weak(g: &GroundedGame) -> PropertyReport {
    let veto = g.winning_masks().fold(g.universe(), |acc, m| acc & m);
    if veto != 0 || g.winning_masks().next().is_none() {
        PropertyReport::new(
            "weak",
            true,
            Some(Witness::Coalition {
                coalition: g.coalition(veto),
            }),
        )
    } else {
        PropertyReport::fails("weak", empty_intersection_family(g))
    }
}

/// Monotonic, N winning, ∅ losing, and every finite family of winning
/// coalitions intersects.
pub fn is_prefilter(g: &GroundedGame) -> PropertyReport {
    const NAME: &str = "prefilter";
    let monotonic = is_monotonic(g);
    if !monotonic.holds {
        return monotonic.renamed(NAME);
    }
    if !g.is_winning(g.universe()) {
        return PropertyReport::fails(
            NAME,
            Witness::Coalition {
                coalition: g.coalition(g.universe()),
            },
        );
    }
    if g.is_winning(0) {
        return PropertyReport::fails(
            NAME,
            Witness::Coalition {
                coalition: Coalition::empty(),
            },
        );
    }
    let veto = g.winning_masks().fold(g.universe(), |acc, m| acc & m);
    if veto == 0 {
        return PropertyReport::fails(NAME, empty_intersection_family(g));
    }
    PropertyReport::holds(NAME)
}

/// A prefilter closed under pairwise intersection.
pub fn is_filter(g: &GroundedGame) -> PropertyReport {
    const NAME: &str = "filter";
    let prefilter = is_prefilter(g);
    if !prefilter.holds {
        return prefilter.renamed(NAME);
    }
    let winning: Vec<u64> = g.winning_masks().collect();
    for (n, &s) in winning.iter().enumerate() {
        for &t in &winning[n + 1..] {
            if !g.is_winning(s & t) {
                return PropertyReport::fails(NAME, pair(g, s, t));
            }
        }
    }
    PropertyReport::holds(NAME)
}

/// A strong filter.
pub fn is_ultrafilter(g: &GroundedGame) -> PropertyReport {
    const NAME: &str = "ultrafilter";
    let filter = is_filter(g);
    if !filter.holds {
        return filter.renamed(NAME);
    }
    is_strong(g).renamed(NAME)
}

/// Invariance under finite permutations moving at most `max_support`
/// players.
///
/// Every finite permutation is a product of transpositions, so a violation
/// by any permutation yields a violation by a transposition somewhere along
/// the product; checking transpositions therefore decides the property for
/// every `max_support >= 2`. Positions range over the universe for table
/// games and over `0..=depth` otherwise, position `depth` standing for the
/// tail. The witness is the first violating `(swap(i, j), S)`.
pub fn is_finitely_anonymous(g: &GroundedGame, max_support: usize) -> PropertyReport {
    const NAME: &str = "finitely_anonymous";
    if max_support < 2 {
        return PropertyReport::holds(NAME);
    }
    let positions = g.atoms();
    for i in 0..positions {
        for j in i + 1..positions {
            for s in g.masks() {
                let (bi, bj) = (s >> i & 1, s >> j & 1);
                let swapped = if bi == bj { s } else { s ^ (1 << i | 1 << j) };
                // the tail of the image is the tail of s
                let image = (swapped & g.player_mask()) | (s & g.tail_bit());
                if g.is_winning(s) != g.is_winning(image) {
                    return PropertyReport::fails(
                        NAME,
                        Witness::Permutation {
                            permutation: FinitePermutation::swap(i, j),
                            coalition: g.coalition(s),
                        },
                    );
                }
            }
        }
    }
    PropertyReport::holds(NAME)
}

/// `T` wins iff `carrier ∩ T` wins, for every coalition `T`. The candidate
/// must be finite.
pub fn is_carrier(g: &GroundedGame, candidate: &Coalition) -> Result<PropertyReport> {
    const NAME: &str = "carrier";
    if !candidate.is_finite() {
        return Err(Error::Precondition(format!(
            "carrier candidate {candidate} is not finite"
        )));
    }
    let s = g.mask_of(candidate)? & g.player_mask();
    Ok(match carrier_violation(g, s) {
        Some(t) => PropertyReport::fails(
            NAME,
            Witness::Coalition {
                coalition: g.coalition(t),
            },
        ),
        None => PropertyReport::holds(NAME),
    })
}

fn carrier_violation(g: &GroundedGame, s: u64) -> Option<u64> {
    g.masks().find(|&t| g.is_winning(t) != g.is_winning(s & t))
}

/// A carrier of minimum size (least in lexicographic order among those), or
/// `None` when no subset of the explicit players is a carrier.
pub fn find_min_carrier(g: &GroundedGame) -> Option<Coalition> {
    let mut candidates: Vec<u64> = g.finite_masks().collect();
    candidates.sort_by_cached_key(|&m| (m.count_ones(), members(m)));
    candidates
        .into_iter()
        .find(|&s| carrier_violation(g, s).is_none())
        .map(Coalition::from_mask)
}

fn members(mask: u64) -> Vec<u32> {
    (0..64).filter(|j| mask >> j & 1 == 1).collect()
}

fn find_extreme(g: &GroundedGame, winning: bool, cofinite: bool) -> Option<Coalition> {
    let players = g.player_mask();
    // tables have no tail atom: every subset is both finite and cofinite within the universe
    let eligible = |m: u64| !g.has_tail() || (m & g.tail_bit() != 0) == cofinite;
    g.masks()
        .filter(|&m| eligible(m) && g.is_winning(m) == winning)
        .min_by_key(|&m| {
            let low = m & players;
            if cofinite {
                let missing = players & !low;
                (missing.count_ones(), members(missing))
            } else {
                (low.count_ones(), members(low))
            }
        })
        .map(|m| g.coalition(m))
}

/// A finite winning coalition of least size.
pub fn find_finite_winning(g: &GroundedGame) -> Option<Coalition> {
    find_extreme(g, true, false)
}

/// A cofinite winning coalition missing the fewest players.
pub fn find_cofinite_winning(g: &GroundedGame) -> Option<Coalition> {
    find_extreme(g, true, true)
}

pub fn find_finite_losing(g: &GroundedGame) -> Option<Coalition> {
    find_extreme(g, false, false)
}

pub fn find_cofinite_losing(g: &GroundedGame) -> Option<Coalition> {
    find_extreme(g, false, true)
}

/// Two coalitions of the same size with opposite verdicts, read off the
/// determining strings: with `1^k` in `t1` and `0^k'` in `t0`, the set
/// `{0, ..., k-1}` wins while the concatenation `0^k' * 1^k`, viewed as the
/// set `{k', ..., k'+k-1}`, loses. Needs N winning and ∅ losing.
pub fn nonanonymity_witness(g: &PrefixGame) -> Result<(Coalition, Coalition)> {
    if g.eval(&Coalition::all()) != Verdict::Winning {
        return Err(Error::Precondition(
            "the grand coalition is not winning".into(),
        ));
    }
    if g.eval(&Coalition::empty()) != Verdict::Losing {
        return Err(Error::Precondition(
            "the empty coalition is not losing".into(),
        ));
    }
    let ones = (0..=g.depth)
        .find(|&k| g.t1.contains(&crate::coalition::BitString::ones(k)))
        .ok_or_else(|| Error::Precondition("no all-ones winning determining string".into()))?;
    let zeros = (0..=g.depth)
        .find(|&k| g.t0.contains(&crate::coalition::BitString::zeros(k)))
        .ok_or_else(|| Error::Precondition("no all-zeros losing determining string".into()))?;
    Ok((
        Coalition::finite(0..ones),
        Coalition::finite(zeros..zeros + ones),
    ))
}

/// Every checker, in a fixed order.
pub fn all_reports(g: &GroundedGame, max_support: usize) -> Vec<PropertyReport> {
    vec![
        is_monotonic(g),
        is_proper(g),
        is_strong(g),
        is_weak(g),
        is_prefilter(g),
        is_filter(g),
        is_ultrafilter(g),
        is_finitely_anonymous(g, max_support),
    ]
}
