//! Brute-force oracles written directly from the definitions, sharing no
//! code with the library beyond the table type.
#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use simple_games::TableGame;

pub fn subsets(universe: u64) -> impl Iterator<Item = u64> {
    (0..=universe).filter(move |m| m & !universe == 0)
}

pub fn table_from_bits(n: usize, bits: u64) -> TableGame {
    TableGame::from_predicate(n, |m| bits >> m & 1 == 1).unwrap()
}

/// All `2^(2^n)` tables on `n <= 4` players.
pub fn all_tables(n: usize) -> impl Iterator<Item = TableGame> {
    assert!(n <= 4);
    (0..1u64 << (1u64 << n)).map(move |bits| table_from_bits(n, bits))
}

pub fn random_table<R: Rng>(n: usize, rng: &mut R) -> TableGame {
    let bits: Vec<bool> = (0..1usize << n).map(|_| rng.gen_bool(0.5)).collect();
    TableGame::from_predicate(n, |m| bits[m as usize]).unwrap()
}

fn w(t: &TableGame, m: u64) -> bool {
    t.is_winning_mask(m)
}

pub fn monotonic(t: &TableGame) -> bool {
    let u = t.universe_mask();
    subsets(u).all(|s| subsets(u).all(|r| !(s & r == s && w(t, s) && !w(t, r))))
}

pub fn proper(t: &TableGame) -> bool {
    let u = t.universe_mask();
    subsets(u).all(|s| !(w(t, s) && w(t, u & !s)))
}

pub fn strong(t: &TableGame) -> bool {
    let u = t.universe_mask();
    subsets(u).all(|s| w(t, s) || w(t, u & !s))
}

pub fn winning(t: &TableGame) -> Vec<u64> {
    subsets(t.universe_mask()).filter(|&s| w(t, s)).collect()
}

/// Some player lies in every winning coalition, or nothing wins.
pub fn weak(t: &TableGame) -> bool {
    let ws = winning(t);
    ws.is_empty() || (0..t.n()).any(|i| ws.iter().all(|s| s >> i & 1 == 1))
}

pub fn prefilter(t: &TableGame) -> bool {
    let u = t.universe_mask();
    let ws = winning(t);
    monotonic(t)
        && w(t, u)
        && !w(t, 0)
        && (1..=ws.len()).all(|k| {
            ws.iter()
                .combinations(k)
                .all(|family| family.iter().fold(u, |acc, &&s| acc & s) != 0)
        })
}

pub fn filter(t: &TableGame) -> bool {
    let ws = winning(t);
    prefilter(t) && ws.iter().all(|&s| ws.iter().all(|&r| w(t, s & r)))
}

pub fn ultrafilter(t: &TableGame) -> bool {
    filter(t) && strong(t)
}

/// Verdicts depend on size alone.
pub fn anonymous(t: &TableGame) -> bool {
    let u = t.universe_mask();
    subsets(u).all(|s| subsets(u).all(|r| s.count_ones() != r.count_ones() || w(t, s) == w(t, r)))
}

/// Least number of winning coalitions with empty intersection, by trying
/// every subfamily; `None` if no such family exists.
pub fn nakamura(t: &TableGame) -> Option<usize> {
    let u = t.universe_mask();
    let ws = winning(t);
    (1..=ws.len()).find(|&k| {
        ws.iter()
            .combinations(k)
            .any(|family| family.iter().fold(u, |acc, &&s| acc & s) == 0)
    })
}

pub fn min_winning_size(t: &TableGame) -> Option<usize> {
    winning(t).iter().map(|s| s.count_ones() as usize).min()
}

pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}
