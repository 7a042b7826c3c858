//! JSON descriptions of games and preference profiles.
//!
//! ```json
//! {"type":"table","n":4,"winning":[[0,1],[1,2,3]]}
//! {"type":"carrier","carrier":[0,1,2],"winning_on_carrier":[[0,1]]}
//! {"type":"prefix","depth":3,"t0":["00","010"],"t1":["011","10","11"]}
//! {"type":"named","name":"threshold","params":{"k":3}}
//! {"type":"enum_construction","entries":[[2,1],[0,0]]}
//! ```
//!
//! Profiles list each player's strict preference as pairs of labels:
//! `{"alternatives":["a","b","c"],"players":{"0":[["a","b"],["b","c"]]}}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coalition::BitString;
use crate::error::{Error, Result};
use crate::games::{
    enum_construction, named, CarrierGame, EnumConstruction, Game, PartialEnumeration, PrefixGame,
    TableGame,
};
use crate::social_choice::{Alternatives, Preference, Profile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum GameSpec {
    Table {
        n: usize,
        winning: Vec<Vec<usize>>,
    },
    Carrier {
        carrier: Vec<usize>,
        winning_on_carrier: Vec<Vec<usize>>,
    },
    Prefix {
        depth: usize,
        t0: Vec<BitString>,
        t1: Vec<BitString>,
    },
    Named {
        name: String,
        #[serde(default)]
        params: BTreeMap<String, usize>,
    },
    EnumConstruction {
        entries: Vec<(usize, u8)>,
    },
}

fn param(params: &BTreeMap<String, usize>, name: &str, key: &str) -> Result<usize> {
    params
        .get(key)
        .copied()
        .ok_or_else(|| Error::InvalidParameter(format!("{name} needs parameter {key:?}")))
}

fn named_game(name: &str, params: &BTreeMap<String, usize>) -> Result<Game> {
    let expected: &[&str] = match name {
        "dictator" => &["i0"],
        "unanimity" | "majority" | "a_game" => &["n"],
        "q_complement" => &["q", "n"],
        "threshold" => &["k"],
        _ => return Err(Error::UnknownGame(name.to_string())),
    };
    if let Some(extra) = params.keys().find(|k| !expected.contains(&k.as_str())) {
        return Err(Error::InvalidParameter(format!(
            "{name} takes no parameter {extra:?}"
        )));
    }
    let p = |key| param(params, name, key);
    Ok(match name {
        "dictator" => named::dictator(p("i0")?)?.into(),
        "unanimity" => named::unanimity(p("n")?)?.into(),
        "majority" => named::majority(p("n")?)?.into(),
        "a_game" => named::a_game(p("n")?)?.into(),
        "q_complement" => named::q_complement(p("q")?, p("n")?)?.into(),
        _ => named::threshold_game(p("k")?)?.into(),
    })
}

impl GameSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("game specs always serialize")
    }

    /// The game, plus the full construction for `enum_construction` specs.
    pub fn build(&self) -> Result<(Game, Option<EnumConstruction>)> {
        Ok(match self {
            GameSpec::Table { n, winning } => (TableGame::new(*n, winning)?.into(), None),
            GameSpec::Carrier {
                carrier,
                winning_on_carrier,
            } => (
                CarrierGame::new(carrier.iter().copied(), winning_on_carrier)?.into(),
                None,
            ),
            GameSpec::Prefix { depth, t0, t1 } => {
                let game = PrefixGame::new(*depth, t0.iter().cloned(), t1.iter().cloned());
                if let Some(s) = t0.iter().chain(t1).find(|s| s.len() > *depth) {
                    return Err(Error::MalformedPrefixGame(format!(
                        "string {s} is longer than depth {depth}"
                    )));
                }
                (game.into(), None)
            }
            GameSpec::Named { name, params } => (named_game(name, params)?, None),
            GameSpec::EnumConstruction { entries } => {
                let mut parsed = Vec::with_capacity(entries.len());
                for &(k, v) in entries {
                    if v > 1 {
                        return Err(Error::InvalidParameter(format!(
                            "enumeration value for index {k} must be 0 or 1, got {v}"
                        )));
                    }
                    parsed.push((k, v == 1));
                }
                let construction = enum_construction(&PartialEnumeration::new(parsed)?);
                (construction.game.clone().into(), Some(construction))
            }
        })
    }

    pub fn game(&self) -> Result<Game> {
        Ok(self.build()?.0)
    }

    /// Explicit description of a game; named and constructed games come back
    /// in their underlying representation.
    pub fn from_game(game: &Game) -> Self {
        match game {
            Game::Table(t) => GameSpec::Table {
                n: t.n(),
                winning: t.winning_sets(),
            },
            Game::Carrier(c) => GameSpec::Carrier {
                carrier: c.carrier(),
                winning_on_carrier: c.winning_on_carrier(),
            },
            Game::Prefix(p) => GameSpec::Prefix {
                depth: p.depth,
                t0: p.t0.iter().cloned().collect(),
                t1: p.t1.iter().cloned().collect(),
            },
        }
    }
}

pub fn parse_game(text: &str) -> Result<Game> {
    GameSpec::from_json(text)?.game()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileSpec {
    pub alternatives: Vec<String>,
    /// Player index to the pairs `(x, y)` with `x` strictly preferred.
    pub players: BTreeMap<usize, Vec<(String, String)>>,
}

impl ProfileSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile specs always serialize")
    }

    /// Players missing from the map below the largest listed index hold the
    /// empty preference.
    pub fn to_profile(&self) -> Result<Profile> {
        let alternatives = Alternatives::new(self.alternatives.clone())?;
        let size = alternatives.len();
        let count = self.players.keys().next_back().map_or(0, |&i| i + 1);
        let mut prefs = vec![Preference::empty(size); count];
        for (&player, pairs) in &self.players {
            let mut indexed = Vec::with_capacity(pairs.len());
            for (x, y) in pairs {
                let index = |label: &String| {
                    alternatives.index_of(label).ok_or_else(|| {
                        Error::InvalidPreference(format!(
                            "player {player}: unknown alternative {label:?}"
                        ))
                    })
                };
                indexed.push((index(x)?, index(y)?));
            }
            prefs[player] = Preference::new(size, indexed).map_err(|e| match e {
                Error::InvalidPreference(msg) => {
                    Error::InvalidPreference(format!("player {player}: {msg}"))
                }
                other => other,
            })?;
        }
        Profile::new(alternatives, prefs)
    }

    pub fn from_profile(profile: &Profile) -> Self {
        let alternatives = profile.alternatives();
        let players = profile
            .prefs()
            .iter()
            .enumerate()
            .map(|(i, pref)| {
                let pairs = pref
                    .pairs()
                    .map(|(x, y)| {
                        (
                            alternatives.label(x).to_string(),
                            alternatives.label(y).to_string(),
                        )
                    })
                    .collect();
                (i, pairs)
            })
            .collect();
        Self {
            alternatives: alternatives.labels().to_vec(),
            players,
        }
    }
}

pub fn parse_profile(text: &str) -> Result<Profile> {
    ProfileSpec::from_json(text)?.to_profile()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::Coalition;
    use crate::games::Verdict;

    #[test]
    fn parses_every_form() {
        let table = parse_game(r#"{"type":"table","n":3,"winning":[[0,1],[0,1,2]]}"#).unwrap();
        assert_eq!(
            table.eval(&Coalition::finite([0, 1])).unwrap(),
            Verdict::Winning
        );

        let carrier =
            parse_game(r#"{"type":"carrier","carrier":[0,1,2],"winning_on_carrier":[[0,1]]}"#)
                .unwrap();
        assert_eq!(
            carrier.eval(&Coalition::finite([0, 1, 5])).unwrap(),
            Verdict::Winning
        );

        let prefix = parse_game(r#"{"type":"prefix","depth":1,"t0":["0"],"t1":["1"]}"#).unwrap();
        assert_eq!(
            prefix.eval(&Coalition::finite([0])).unwrap(),
            Verdict::Winning
        );

        let threshold =
            parse_game(r#"{"type":"named","name":"threshold","params":{"k":3}}"#).unwrap();
        assert_eq!(
            threshold.eval(&Coalition::finite([1, 2])).unwrap(),
            Verdict::Winning
        );

        let (game, construction) =
            GameSpec::from_json(r#"{"type":"enum_construction","entries":[[2,1],[0,0]]}"#)
                .unwrap()
                .build()
                .unwrap();
        assert!(construction.is_some());
        assert!(matches!(game, Game::Prefix(_)));
    }

    #[test]
    fn input_errors() {
        let err = |text| parse_game(text).unwrap_err();
        assert!(matches!(
            err(r#"{"type":"named","name":"oligarchy"}"#),
            Error::UnknownGame(_)
        ));
        assert!(matches!(
            err(r#"{"type":"named","name":"majority"}"#),
            Error::InvalidParameter(_)
        ));
        assert!(matches!(
            err(r#"{"type":"table","n":2,"winning":[[0,3]]}"#),
            Error::PlayerOutsideUniverse { .. }
        ));
        assert!(matches!(err(r#"{"type":"table","n":2"#), Error::Parse(_)));
        assert!(matches!(
            err(r#"{"type":"enum_construction","entries":[[1,1],[1,0]]}"#),
            Error::DuplicateIndex(1)
        ));
        assert!(matches!(
            err(r#"{"type":"prefix","depth":1,"t0":["00"],"t1":[]}"#),
            Error::MalformedPrefixGame(_)
        ));
        assert!(
            err(r#"{"type":"named","name":"majority","params":{"n":3,"q":1}}"#).is_input_error()
        );
    }

    #[test]
    fn game_round_trip() {
        for game in [
            Game::from(named::a_game(4).unwrap()),
            named::threshold_game(3).unwrap().into(),
            named::a_game(3)
                .unwrap()
                .extract_determining_strings()
                .into(),
        ] {
            let spec = GameSpec::from_game(&game);
            let reparsed = GameSpec::from_json(&spec.to_json()).unwrap();
            assert_eq!(reparsed, spec);
            assert_eq!(reparsed.game().unwrap(), game);
        }
    }

    #[test]
    fn profile_round_trip() {
        let text = r#"{"alternatives":["a","b","c"],"players":{"0":[["a","b"],["b","c"]],"2":[["c","a"]]}}"#;
        let profile = parse_profile(text).unwrap();
        assert_eq!(profile.players(), 3);
        assert!(profile.prefs()[1].pairs().next().is_none());
        assert!(profile.prefs()[2].prefers(2, 0));
        let spec = ProfileSpec::from_profile(&profile);
        assert_eq!(spec.to_profile().unwrap(), profile);
        assert_eq!(ProfileSpec::from_json(&spec.to_json()).unwrap(), spec);
    }

    #[test]
    fn profile_errors() {
        let cyclic = r#"{"alternatives":["a","b"],"players":{"0":[["a","b"],["b","a"]]}}"#;
        assert!(matches!(
            parse_profile(cyclic),
            Err(Error::InvalidPreference(_))
        ));
        let unknown = r#"{"alternatives":["a","b"],"players":{"0":[["a","z"]]}}"#;
        assert!(matches!(
            parse_profile(unknown),
            Err(Error::InvalidPreference(_))
        ));
    }
}
