use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::games::GroundedGame;
use crate::nakamura::{nakamura_grounded, NakamuraValue};

use super::dominance::{core_of, dominance, Dominance};
use super::{bit, is_acyclic_relation, Alternatives, Preference, Profile};

/// A profile whose dominance relation is the full cycle
/// `x_1 ≻ x_r ≻ x_{r-1} ≻ ... ≻ x_2 ≻ x_1`, with the data used to build it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    /// `L_1, ..., L_r`: winning coalitions with empty intersection.
    pub family: Vec<Coalition>,
    /// `D_k = (L_0 ∩ ... ∩ L_{k-1}) \ L_k` with `L_0` the explicit players.
    pub partition: Vec<Coalition>,
    pub profile: Profile,
    pub dominance: Dominance,
    pub core: Vec<usize>,
}

/// The cycle `{(x_k, x_{k-1}) : k = 1..r}` with `x_0 = x_r`, as index pairs.
fn cycle_edges(r: usize) -> Vec<(usize, usize)> {
    (0..r).map(|k| (k, (k + r - 1) % r)).collect()
}

/// Builds a profile with an empty core over `alternatives`, which must
/// number at least the game's Nakamura number.
///
/// The minimal family of winning coalitions with empty intersection is padded
/// to `r` members by repeating its last coalition. Players are split by the
/// first member of the family they are missing from; every player in the
/// `k`-th block ranks the alternatives along the cycle with the `k`-th edge
/// removed. The `k`-th edge is then supported by everyone outside block `k`,
/// which includes the `k`-th coalition, and no other pair has any support.
pub fn cycle_profile_witness(
    g: &GroundedGame,
    alternatives: &Alternatives,
) -> Result<CycleWitness> {
    let r = alternatives.len();
    let nakamura = nakamura_grounded(g)?;
    let nu = match nakamura.value {
        NakamuraValue::Infinite => {
            return Err(Error::NoWitness(
                "the game is weak, so every core is nonempty".into(),
            ))
        }
        NakamuraValue::Finite(nu) => nu,
    };
    if r < nu {
        return Err(Error::NoWitness(format!(
            "{r} alternatives are fewer than the Nakamura number {nu}"
        )));
    }
    let mut family: Vec<u64> = nakamura
        .witness
        .iter()
        .map(|c| c.low_mask(g.players()))
        .collect();
    let last = *family.last().expect("finite Nakamura number has a witness");
    family.resize(r, last);

    let everyone = g.player_mask();
    let mut running = everyone;
    let partition: Vec<u64> = family
        .iter()
        .map(|&l| {
            let block = running & !l;
            running &= l;
            block
        })
        .collect();

    let edges = cycle_edges(r);
    let full_cycle = edges.iter().fold(0, |rel, &(x, y)| rel | bit(r, x, y));
    let mut prefs = vec![Preference::empty(r); g.players()];
    for (k, &block) in partition.iter().enumerate() {
        let (x, y) = edges[k];
        let rel = full_cycle & !bit(r, x, y);
        if !is_acyclic_relation(r, rel) {
            return Err(Error::Postcondition(format!(
                "block {k} preference has a cycle"
            )));
        }
        for (i, pref) in prefs.iter_mut().enumerate() {
            if block >> i & 1 == 1 {
                *pref = Preference::from_raw_unchecked(r, rel);
            }
        }
    }

    let union = partition.iter().fold(0, |acc, &d| acc | d);
    let disjoint = partition.iter().map(|d| d.count_ones()).sum::<u32>() == union.count_ones();
    if union != everyone || !disjoint {
        return Err(Error::Postcondition(
            "blocks do not partition the players".into(),
        ));
    }

    let profile = Profile::new(alternatives.clone(), prefs)?;
    let dominance = dominance(g, &profile)?;
    if dominance.raw() != full_cycle {
        return Err(Error::Postcondition(
            "dominance differs from the target cycle".into(),
        ));
    }
    let core = core_of(&dominance);
    if !core.is_empty() {
        return Err(Error::Postcondition("core is not empty".into()));
    }
    Ok(CycleWitness {
        family: family.into_iter().map(Coalition::from_mask).collect(),
        partition: partition.into_iter().map(Coalition::from_mask).collect(),
        profile,
        dominance,
        core,
    })
}
