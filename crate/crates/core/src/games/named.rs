//! Constructors for the named games used throughout the crate.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::carrier::CarrierGame;
use super::table::TableGame;

/// Player `i0` alone decides.
pub fn dictator(i0: usize) -> Result<CarrierGame> {
    CarrierGame::new([i0], [[i0]])
}

/// Only the grand coalition wins.
pub fn unanimity(n: usize) -> Result<TableGame> {
    let all = (1u64 << n).wrapping_sub(1);
    TableGame::from_predicate(n, |m| m == all)
}

/// Coalitions with more than half of the `n` players win.
pub fn majority(n: usize) -> Result<TableGame> {
    TableGame::from_predicate(n, |m| 2 * m.count_ones() as usize > n)
}

/// Coalitions missing fewer than `q` of the `n` players win.
pub fn q_complement(q: usize, n: usize) -> Result<TableGame> {
    if q < 1 || q > n {
        return Err(Error::InvalidParameter(format!(
            "q-complement needs 1 <= q <= n, got q={q}, n={n}"
        )));
    }
    TableGame::from_predicate(n, |m| n - (m.count_ones() as usize) < q)
}

/// Carrier `{0, ..., k-1}`; a coalition wins when it holds at least `k-1`
/// carrier members.
pub fn threshold_game(k: usize) -> Result<CarrierGame> {
    if !(2..=64).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "threshold game needs 2 <= k <= 64, got {k}"
        )));
    }
    let carrier = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    // winning carrier subsets: the carrier itself and the carrier minus one player
    let winning: BTreeSet<u64> = std::iter::once(carrier)
        .chain((0..k).map(|i| carrier & !(1 << i)))
        .collect();
    Ok(CarrierGame::from_masks(carrier, winning))
}

/// With `A = {1, ..., n-1}`: `S` wins iff `S = A`, or `0 ∈ S` and `S ≠ {0}`.
pub fn a_game(n: usize) -> Result<TableGame> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "a_game needs n >= 2, got {n}"
        )));
    }
    let a = ((1u64 << n) - 1) & !1;
    TableGame::from_predicate(n, |m| m == a || (m & 1 == 1 && m != 1))
}
