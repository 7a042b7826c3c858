//! Ordinal preferences over a finite set of alternatives, the dominance
//! relation a game induces from a profile, and its core.
//!
//! `x` dominates `y` when some winning coalition consists only of players who
//! strictly prefer `x` to `y`. A stricter variant, where the set of all such
//! players must itself be winning, is not implemented; for monotonic games
//! the two coincide.
//!
//! Profiles assign one relation to each explicit player of the grounded
//! game. Players beyond that range hold the empty preference; they cannot
//! change any dominance verdict, because a winning coalition keeps its
//! verdict when restricted to the explicit players.

mod dominance;
mod verify;
mod witness;

pub use dominance::{
    core, core_of, dominance, find_cycle, Dominance, DominanceOracle, DominancePair,
};
pub use verify::{
    acyclic_relation_count, acyclic_relations, verify_acyclicity_bound,
    verify_aggregation_rationality, verify_nakamura, RationalityLevel, RationalityReport, Regime,
    SearchConfig, SearchKind, SearchMode, VerificationReport, VerificationRow,
};
pub use witness::{cycle_profile_witness, CycleWitness};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Most alternatives a relation may range over; relations are packed into a
/// single 64-bit word.
pub const MAX_ALTERNATIVES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alternatives {
    labels: Vec<String>,
}

impl Alternatives {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.len() < 2 || labels.len() > MAX_ALTERNATIVES {
            return Err(Error::InvalidParameter(format!(
                "need between 2 and {MAX_ALTERNATIVES} alternatives, got {}",
                labels.len()
            )));
        }
        for (n, label) in labels.iter().enumerate() {
            if labels[..n].contains(label) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate alternative {label:?}"
                )));
            }
        }
        Ok(Self { labels })
    }

    /// Alternatives labelled `x1, ..., xr`.
    pub fn indexed(r: usize) -> Result<Self> {
        Self::new((1..=r).map(|i| format!("x{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A strict preference: an acyclic relation over `size` alternatives.
/// Bit `x * size + y` records `x ≻ y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Preference {
    size: usize,
    rel: u64,
}

pub(crate) fn bit(size: usize, x: usize, y: usize) -> u64 {
    1 << (x * size + y)
}

/// No directed cycle, self-loops included.
pub fn is_acyclic_relation(size: usize, rel: u64) -> bool {
    let mut remaining: u32 = (1 << size) - 1;
    // repeatedly strip alternatives with no remaining predecessor
    loop {
        let source = (0..size).find(|&y| {
            remaining >> y & 1 == 1
                && (0..size).all(|x| remaining >> x & 1 == 0 || rel & bit(size, x, y) == 0)
        });
        match source {
            Some(y) => remaining &= !(1 << y),
            None => return remaining == 0,
        }
    }
}

impl Preference {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(size: usize, pairs: I) -> Result<Self> {
        if size > MAX_ALTERNATIVES {
            return Err(Error::InvalidParameter(format!(
                "at most {MAX_ALTERNATIVES} alternatives"
            )));
        }
        let mut rel = 0;
        for (x, y) in pairs {
            if x >= size || y >= size {
                return Err(Error::InvalidPreference(format!(
                    "pair ({x}, {y}) outside {size} alternatives"
                )));
            }
            rel |= bit(size, x, y);
        }
        Self::from_raw(size, rel)
    }

    pub fn from_raw(size: usize, rel: u64) -> Result<Self> {
        if !is_acyclic_relation(size, rel) {
            return Err(Error::InvalidPreference("relation has a cycle".into()));
        }
        Ok(Self { size, rel })
    }

    pub(crate) fn from_raw_unchecked(size: usize, rel: u64) -> Self {
        debug_assert!(is_acyclic_relation(size, rel));
        Self { size, rel }
    }

    pub fn empty(size: usize) -> Self {
        Self { size, rel: 0 }
    }

    /// The linear order listing alternatives from best to worst, with every
    /// implied pair.
    pub fn linear(size: usize, order: &[usize]) -> Result<Self> {
        let pairs = order
            .iter()
            .enumerate()
            .flat_map(|(n, &x)| order[n + 1..].iter().map(move |&y| (x, y)));
        Self::new(size, pairs)
    }

    /// Ranked tiers from best to worst; alternatives in the same tier are
    /// unranked against each other.
    pub fn weak_order(size: usize, tiers: &[Vec<usize>]) -> Result<Self> {
        let mut pairs = Vec::new();
        for (n, tier) in tiers.iter().enumerate() {
            for lower in &tiers[n + 1..] {
                for &x in tier {
                    for &y in lower {
                        pairs.push((x, y));
                    }
                }
            }
        }
        Self::new(size, pairs)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn raw(&self) -> u64 {
        self.rel
    }

    pub fn prefers(&self, x: usize, y: usize) -> bool {
        self.rel & bit(self.size, x, y) != 0
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let size = self.size;
        (0..size)
            .flat_map(move |x| (0..size).map(move |y| (x, y)))
            .filter(|&(x, y)| self.prefers(x, y))
    }

    pub fn is_transitive(&self) -> bool {
        relation_is_transitive(self.size, self.rel)
    }

    /// Asymmetric and negatively transitive (a strict weak order).
    pub fn is_negatively_transitive(&self) -> bool {
        relation_is_negatively_transitive(self.size, self.rel)
    }

    /// Uniform random topological order, then each compatible pair with
    /// probability one half. Every acyclic relation has positive
    /// probability; the distribution is not uniform.
    pub fn random<R: Rng + ?Sized>(size: usize, rng: &mut R) -> Self {
        let mut order: Vec<usize> = (0..size).collect();
        order.shuffle(rng);
        let mut rel = 0;
        for (n, &x) in order.iter().enumerate() {
            for &y in &order[n + 1..] {
                if rng.gen_bool(0.5) {
                    rel |= bit(size, x, y);
                }
            }
        }
        Self { size, rel }
    }

    /// Transitive closure of [`Preference::random`].
    pub fn random_transitive<R: Rng + ?Sized>(size: usize, rng: &mut R) -> Self {
        let mut p = Self::random(size, rng);
        p.rel = transitive_closure(size, p.rel);
        p
    }

    /// A random strict weak order: a random ranking with random ties.
    pub fn random_weak_order<R: Rng + ?Sized>(size: usize, rng: &mut R) -> Self {
        let mut order: Vec<usize> = (0..size).collect();
        order.shuffle(rng);
        let mut tiers: Vec<Vec<usize>> = Vec::new();
        for x in order {
            match tiers.last_mut() {
                Some(tier) if rng.gen_bool(0.5) => tier.push(x),
                _ => tiers.push(vec![x]),
            }
        }
        Self::weak_order(size, &tiers).expect("tiers form a strict weak order")
    }
}

pub(crate) fn transitive_closure(size: usize, mut rel: u64) -> u64 {
    for z in 0..size {
        for x in 0..size {
            if rel & bit(size, x, z) != 0 {
                for y in 0..size {
                    if rel & bit(size, z, y) != 0 {
                        rel |= bit(size, x, y);
                    }
                }
            }
        }
    }
    rel
}

pub(crate) fn transitivity_violation(size: usize, rel: u64) -> Option<[usize; 3]> {
    let has = |x, y| rel & bit(size, x, y) != 0;
    for x in 0..size {
        for y in 0..size {
            for z in 0..size {
                if has(x, y) && has(y, z) && !has(x, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// Asymmetry violations come back as `[x, y, x]`.
pub(crate) fn negative_transitivity_violation(size: usize, rel: u64) -> Option<[usize; 3]> {
    let has = |x, y| rel & bit(size, x, y) != 0;
    for x in 0..size {
        for y in 0..size {
            if has(x, y) && has(y, x) {
                return Some([x, y, x]);
            }
        }
    }
    for x in 0..size {
        for y in 0..size {
            for z in 0..size {
                if !has(x, y) && !has(y, z) && has(x, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

pub(crate) fn relation_is_transitive(size: usize, rel: u64) -> bool {
    transitivity_violation(size, rel).is_none()
}

pub(crate) fn relation_is_negatively_transitive(size: usize, rel: u64) -> bool {
    negative_transitivity_violation(size, rel).is_none()
}

/// One preference per player `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    alternatives: Alternatives,
    prefs: Vec<Preference>,
}

impl Profile {
    pub fn new(alternatives: Alternatives, prefs: Vec<Preference>) -> Result<Self> {
        if let Some(p) = prefs.iter().find(|p| p.size() != alternatives.len()) {
            return Err(Error::InvalidPreference(format!(
                "preference over {} alternatives in a profile over {}",
                p.size(),
                alternatives.len()
            )));
        }
        Ok(Self {
            alternatives,
            prefs,
        })
    }

    pub fn alternatives(&self) -> &Alternatives {
        &self.alternatives
    }

    pub fn prefs(&self) -> &[Preference] {
        &self.prefs
    }

    pub fn players(&self) -> usize {
        self.prefs.len()
    }

    /// Preference of `player`; empty for players beyond the profile.
    pub fn preference(&self, player: usize) -> Preference {
        self.prefs
            .get(player)
            .copied()
            .unwrap_or_else(|| Preference::empty(self.alternatives.len()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn acyclicity() {
        assert!(Preference::new(3, [(0, 1), (1, 2)]).is_ok());
        assert!(Preference::new(3, [(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(Preference::new(2, [(0, 0)]).is_err());
        assert!(Preference::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(Preference::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn linear_orders_are_transitive_and_negatively_transitive() {
        let p = Preference::linear(3, &[0, 1, 2]).unwrap();
        assert!(p.prefers(0, 2));
        assert!(p.is_transitive());
        assert!(p.is_negatively_transitive());
        let partial = Preference::new(3, [(0, 1)]).unwrap();
        assert!(partial.is_transitive());
        // 0 ≻ 1 while 2 is unranked against both
        assert!(!partial.is_negatively_transitive());
    }

    #[test]
    fn random_relations_are_acyclic() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for size in 2..=MAX_ALTERNATIVES {
            for _ in 0..50 {
                assert!(is_acyclic_relation(
                    size,
                    Preference::random(size, &mut rng).raw()
                ));
                assert!(Preference::random_transitive(size, &mut rng).is_transitive());
                assert!(Preference::random_weak_order(size, &mut rng).is_negatively_transitive());
            }
        }
    }

    #[test]
    fn alternatives_validation() {
        assert!(Alternatives::new(vec!["a".into()]).is_err());
        assert!(Alternatives::new(vec!["a".into(), "a".into()]).is_err());
        assert_eq!(
            Alternatives::indexed(3).unwrap().labels(),
            ["x1", "x2", "x3"]
        );
        assert!(Alternatives::indexed(MAX_ALTERNATIVES + 1).is_err());
    }
}
