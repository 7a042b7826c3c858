//! Game representations and their evaluation.

mod carrier;
mod enumeration;
mod grounded;
pub mod named;
mod prefix;
mod table;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use carrier::CarrierGame;
pub use enumeration::{
    enum_construction, CarrierWitness, EnumConstruction, Membership, PartialEnumeration, TraceStep,
    MAX_CONSTRUCTION_LENGTH,
};
pub use grounded::GroundedGame;
pub use prefix::{PrefixGame, ValidationReport, Violation};
pub use table::{TableGame, MAX_TABLE_PLAYERS};

use crate::coalition::Coalition;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Winning,
    Losing,
    /// Only produced by prefix games that are not total.
    Undetermined(String),
}

impl Verdict {
    pub fn from_bool(winning: bool) -> Self {
        if winning {
            Verdict::Winning
        } else {
            Verdict::Losing
        }
    }

    pub fn is_winning(&self) -> bool {
        matches!(self, Verdict::Winning)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Winning => f.write_str("Winning"),
            Verdict::Losing => f.write_str("Losing"),
            Verdict::Undetermined(reason) => write!(f, "Undetermined ({reason})"),
        }
    }
}

/// Any of the supported representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Game {
    Table(TableGame),
    Carrier(CarrierGame),
    Prefix(PrefixGame),
}

impl Game {
    pub fn eval(&self, c: &Coalition) -> Result<Verdict> {
        match self {
            Game::Table(t) => t.eval_coalition(c),
            Game::Carrier(g) => Ok(g.eval(c)),
            Game::Prefix(p) => Ok(p.eval(c)),
        }
    }

    pub fn ground(&self) -> Result<GroundedGame> {
        GroundedGame::new(self)
    }

    /// Determining-string form: extraction for tables, the full-depth
    /// split for carrier games.
    pub fn to_prefix(&self) -> Result<PrefixGame> {
        match self {
            Game::Table(t) => Ok(t.extract_determining_strings()),
            Game::Carrier(c) => c.to_prefix(),
            Game::Prefix(p) => Ok(p.clone()),
        }
    }
}

impl From<TableGame> for Game {
    fn from(g: TableGame) -> Self {
        Game::Table(g)
    }
}

impl From<CarrierGame> for Game {
    fn from(g: CarrierGame) -> Self {
        Game::Carrier(g)
    }
}

impl From<PrefixGame> for Game {
    fn from(g: PrefixGame) -> Self {
        Game::Prefix(g)
    }
}
