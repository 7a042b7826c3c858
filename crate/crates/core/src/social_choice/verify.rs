//! Desk-scale checks of the link between the Nakamura number and the core.
//!
//! For each number of alternatives `r` below the Nakamura number, preference
//! profiles are searched for an empty core (or a dominance cycle); none may
//! exist. From the Nakamura number on, the cycle construction must produce
//! one.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::games::GroundedGame;
use crate::io::ProfileSpec;
use crate::nakamura::{nakamura_grounded, NakamuraValue};
use crate::properties::{is_filter, is_ultrafilter};

use super::dominance::{core_of, dominance, find_cycle, Dominance, DominanceOracle};
use super::witness::cycle_profile_witness;
use super::{
    is_acyclic_relation, negative_transitivity_violation, transitivity_violation, Alternatives,
    Preference, Profile, MAX_ALTERNATIVES,
};

/// Labelled acyclic relations on `r` points, `r = 0..=8`.
const ACYCLIC_COUNTS: [u64; MAX_ALTERNATIVES + 1] = [
    1,
    1,
    3,
    25,
    543,
    29_281,
    3_781_503,
    1_138_779_265,
    783_702_329_343,
];

pub fn acyclic_relation_count(r: usize) -> u64 {
    ACYCLIC_COUNTS[r]
}

/// Every acyclic relation on `r <= 5` alternatives, packed.
pub fn acyclic_relations(r: usize) -> Vec<u64> {
    assert!(
        r <= 5,
        "enumerating acyclic relations is limited to 5 alternatives"
    );
    let positions: Vec<u32> = (0..r)
        .flat_map(|x| {
            (0..r)
                .filter(move |&y| y != x)
                .map(move |y| (x * r + y) as u32)
        })
        .collect();
    (0..1u64 << positions.len())
        .map(|pattern| {
            positions
                .iter()
                .enumerate()
                .filter(|(n, _)| pattern >> n & 1 == 1)
                .fold(0u64, |rel, (_, &p)| rel | 1 << p)
        })
        .filter(|&rel| is_acyclic_relation(r, rel))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Exhaustive when the profile count fits the budget, sampled otherwise.
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub samples: usize,
    pub seed: u64,
    pub budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            mode: SearchMode::Exhaustive,
            samples: 1000,
            seed: 0,
            budget: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    BelowNu,
    AtOrAboveNu,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchKind {
    Exhaustive,
    Sampled,
    Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRow {
    pub r: usize,
    pub regime: Regime,
    pub search: SearchKind,
    pub profiles_checked: u64,
    /// At most a handful of offending profiles.
    pub violations: Vec<ProfileSpec>,
    /// Set in the witness regime: the cycle exhibited.
    pub cycle: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub nu: NakamuraValue,
    pub rows: Vec<VerificationRow>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|row| row.violations.is_empty())
    }

    pub fn total_violations(&self) -> usize {
        self.rows.iter().map(|row| row.violations.len()).sum()
    }
}

const MAX_RECORDED: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Check {
    CoreNonempty,
    Acyclic,
}

fn profile_from(alternatives: &Alternatives, rels: &[u64]) -> Profile {
    let r = alternatives.len();
    let prefs = rels
        .iter()
        .map(|&rel| Preference::from_raw_unchecked(r, rel))
        .collect();
    Profile::new(alternatives.clone(), prefs).expect("relations share the alternative count")
}

fn run(
    g: &GroundedGame,
    r_max: usize,
    config: &SearchConfig,
    check: Check,
) -> Result<VerificationReport> {
    if g.is_winning(0) {
        return Err(Error::Precondition("the empty coalition is winning".into()));
    }
    if g.winning_masks().next().is_none() {
        return Err(Error::Precondition(
            "the game has no winning coalition".into(),
        ));
    }
    if r_max > MAX_ALTERNATIVES {
        return Err(Error::InvalidParameter(format!(
            "at most {MAX_ALTERNATIVES} alternatives"
        )));
    }
    let nu = nakamura_grounded(g)?.value;
    let oracle = DominanceOracle::new(g);
    let players = g.players();
    let mut rows = Vec::new();
    for r in 2..=r_max {
        let alternatives = Alternatives::indexed(r)?;
        if nu.exceeds(r) {
            rows.push(search_below(&oracle, &alternatives, players, config, check));
        } else {
            let w = cycle_profile_witness(g, &alternatives)?;
            let cycle = find_cycle(&w.dominance);
            let failed = match check {
                Check::CoreNonempty => !w.core.is_empty(),
                Check::Acyclic => cycle.is_none(),
            };
            rows.push(VerificationRow {
                r,
                regime: Regime::AtOrAboveNu,
                search: SearchKind::Witness,
                profiles_checked: 1,
                violations: if failed {
                    vec![ProfileSpec::from_profile(&w.profile)]
                } else {
                    vec![]
                },
                cycle: cycle.map(|c| {
                    c.into_iter()
                        .map(|x| alternatives.label(x).to_string())
                        .collect()
                }),
            });
        }
    }
    let check = match check {
        Check::CoreNonempty => "core_nonempty_below_nu",
        Check::Acyclic => "dominance_acyclic_below_nu",
    };
    Ok(VerificationReport {
        check: check.into(),
        nu,
        rows,
    })
}

fn search_below(
    oracle: &DominanceOracle,
    alternatives: &Alternatives,
    players: usize,
    config: &SearchConfig,
    check: Check,
) -> VerificationRow {
    let r = alternatives.len();
    let count = acyclic_relation_count(r)
        .checked_pow(players as u32)
        .filter(|&c| c <= config.budget && r <= 5);
    let mut violations = Vec::new();
    let mut test = |rels: &[u64]| {
        let profile = profile_from(alternatives, rels);
        let d = Dominance::from_relation(r, oracle.relation(&profile));
        let failed = match check {
            Check::CoreNonempty => core_of(&d).is_empty(),
            Check::Acyclic => find_cycle(&d).is_some(),
        };
        if failed && violations.len() < MAX_RECORDED {
            violations.push(ProfileSpec::from_profile(&profile));
        }
    };
    let (search, checked) = match (config.mode, count) {
        (SearchMode::Exhaustive, Some(total)) => {
            let relations = acyclic_relations(r);
            let mut digits = vec![0usize; players];
            let mut rels = vec![relations[0]; players];
            for _ in 0..total {
                test(&rels);
                // mixed-radix increment
                for (digit, rel) in digits.iter_mut().zip(rels.iter_mut()) {
                    *digit += 1;
                    if *digit < relations.len() {
                        *rel = relations[*digit];
                        break;
                    }
                    *digit = 0;
                    *rel = relations[0];
                }
            }
            (SearchKind::Exhaustive, total)
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (r as u64).rotate_left(32));
            for _ in 0..config.samples {
                let rels: Vec<u64> = (0..players)
                    .map(|_| Preference::random(r, &mut rng).raw())
                    .collect();
                test(&rels);
            }
            (SearchKind::Sampled, config.samples as u64)
        }
    };
    VerificationRow {
        r,
        regime: Regime::BelowNu,
        search,
        profiles_checked: checked,
        violations,
        cycle: None,
    }
}

/// For `r = 2..=r_max`: below the Nakamura number every searched profile has
/// a nonempty core; from it on, the cycle construction yields an empty core.
pub fn verify_nakamura(
    g: &GroundedGame,
    r_max: usize,
    config: &SearchConfig,
) -> Result<VerificationReport> {
    run(g, r_max, config, Check::CoreNonempty)
}

/// Like [`verify_nakamura`], with acyclicity of dominance in place of core
/// nonemptiness.
pub fn verify_acyclicity_bound(
    g: &GroundedGame,
    r_max: usize,
    config: &SearchConfig,
) -> Result<VerificationReport> {
    run(g, r_max, config, Check::Acyclic)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RationalityLevel {
    /// Filter games with transitive individual preferences.
    Transitive,
    /// Ultrafilter games with strict weak orders.
    NegTransitive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalityReport {
    pub level: RationalityLevel,
    pub holds: bool,
    pub violation: Option<[usize; 3]>,
}

/// Checks that dominance inherits transitivity (on filters) or negative
/// transitivity (on ultrafilters) from the individual preferences.
pub fn verify_aggregation_rationality(
    g: &GroundedGame,
    p: &Profile,
    level: RationalityLevel,
) -> Result<RationalityReport> {
    match level {
        RationalityLevel::Transitive => {
            if !is_filter(g).holds {
                return Err(Error::Precondition("game not a filter".into()));
            }
            if let Some(i) = p.prefs().iter().position(|q| !q.is_transitive()) {
                return Err(Error::Precondition(format!(
                    "player {i} has an intransitive preference"
                )));
            }
        }
        RationalityLevel::NegTransitive => {
            if !is_ultrafilter(g).holds {
                return Err(Error::Precondition("game not an ultrafilter".into()));
            }
            if let Some(i) = p.prefs().iter().position(|q| !q.is_negatively_transitive()) {
                return Err(Error::Precondition(format!(
                    "player {i} has a preference that is not negatively transitive"
                )));
            }
        }
    }
    let d = dominance(g, p)?;
    let violation = match level {
        RationalityLevel::Transitive => transitivity_violation(d.size(), d.raw()),
        RationalityLevel::NegTransitive => negative_transitivity_violation(d.size(), d.raw()),
    };
    Ok(RationalityReport {
        level,
        holds: violation.is_none(),
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{named, Game};

    fn ground(game: impl Into<Game>) -> GroundedGame {
        game.into().ground().unwrap()
    }

    #[test]
    fn acyclic_counts_match_enumeration() {
        for r in 0..=4 {
            assert_eq!(acyclic_relations(r).len() as u64, acyclic_relation_count(r));
        }
    }

    #[test]
    fn threshold_three_verification() {
        let g = ground(named::threshold_game(3).unwrap());
        let report = verify_nakamura(&g, 3, &SearchConfig::default()).unwrap();
        assert_eq!(report.nu, NakamuraValue::Finite(3));
        assert!(report.passed());
        assert_eq!(report.rows[0].search, SearchKind::Exhaustive);
        assert_eq!(report.rows[0].profiles_checked, 27);
        assert_eq!(report.rows[1].search, SearchKind::Witness);

        let acyclic = verify_acyclicity_bound(&g, 3, &SearchConfig::default()).unwrap();
        assert!(acyclic.passed());
        assert_eq!(acyclic.rows[1].cycle.as_ref().map(Vec::len), Some(3));
    }

    #[test]
    fn weak_game_uses_sampling_past_budget() {
        let g = ground(named::unanimity(3).unwrap());
        let config = SearchConfig {
            samples: 200,
            seed: 11,
            ..SearchConfig::default()
        };
        let report = verify_nakamura(&g, 4, &config).unwrap();
        assert_eq!(report.nu, NakamuraValue::Infinite);
        assert!(report.passed());
        let kinds: Vec<_> = report.rows.iter().map(|row| row.search).collect();
        assert_eq!(
            kinds,
            [
                SearchKind::Exhaustive,
                SearchKind::Exhaustive,
                SearchKind::Sampled
            ]
        );
    }

    #[test]
    fn rationality_preconditions() {
        let majority = ground(named::majority(3).unwrap());
        let p = Profile::new(
            Alternatives::indexed(3).unwrap(),
            vec![Preference::linear(3, &[0, 1, 2]).unwrap(); 3],
        )
        .unwrap();
        assert!(matches!(
            verify_aggregation_rationality(&majority, &p, RationalityLevel::Transitive),
            Err(Error::Precondition(_))
        ));
        let dictator = ground(named::dictator(0).unwrap());
        let r =
            verify_aggregation_rationality(&dictator, &p, RationalityLevel::NegTransitive).unwrap();
        assert!(r.holds);
        let intransitive = Profile::new(
            Alternatives::indexed(3).unwrap(),
            vec![Preference::new(3, [(0, 1), (1, 2)]).unwrap()],
        )
        .unwrap();
        let unanimity = ground(named::unanimity(3).unwrap());
        assert!(verify_aggregation_rationality(
            &unanimity,
            &intransitive,
            RationalityLevel::Transitive
        )
        .is_err());
    }
}
