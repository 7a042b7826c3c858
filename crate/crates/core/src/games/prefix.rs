use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::coalition::{BitString, Coalition};

use super::Verdict;

/// Determining-string representation of a game: a coalition wins when one
/// of its initial segments is in `t1` and loses when one is in `t0`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PrefixGame {
    pub depth: usize,
    /// Losing determining strings.
    pub t0: BTreeSet<BitString>,
    /// Winning determining strings.
    pub t1: BTreeSet<BitString>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A string listed as both winning and losing.
    Overlap { string: BitString },
    /// A losing and a winning string where one extends the other.
    PrefixConflict {
        losing: BitString,
        winning: BitString,
    },
    /// A string longer than the declared depth.
    TooLong { string: BitString },
    /// A depth-length string extending no member of `t0 ∪ t1`.
    Unbarred { string: BitString },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub well_formed: bool,
    pub total: bool,
    pub violations: Vec<Violation>,
}

impl PrefixGame {
    pub fn empty(depth: usize) -> Self {
        Self {
            depth,
            ..Self::default()
        }
    }

    pub fn new<I0, I1>(depth: usize, t0: I0, t1: I1) -> Self
    where
        I0: IntoIterator<Item = BitString>,
        I1: IntoIterator<Item = BitString>,
    {
        Self {
            depth,
            t0: t0.into_iter().collect(),
            t1: t1.into_iter().collect(),
        }
    }

    /// Scans initial segments of length `0..=depth` for a member of `t1` or
    /// `t0`.
    pub fn eval(&self, c: &Coalition) -> Verdict {
        let explicit = c.prefix().as_slice();
        let padded;
        let segment = if explicit.len() >= self.depth {
            &explicit[..self.depth]
        } else {
            padded = c.initial_segment(self.depth);
            padded.as_slice()
        };
        for k in 0..=self.depth {
            if self.t1.contains(&segment[..k]) {
                return Verdict::Winning;
            }
            if self.t0.contains(&segment[..k]) {
                return Verdict::Losing;
            }
        }
        Verdict::Undetermined(format!(
            "no initial segment of {c} up to length {} is determining",
            self.depth
        ))
    }

    /// Verdict of every coalition extending `t`, when some member of
    /// `t0 ∪ t1` is a prefix of `t`.
    pub fn barred_verdict(&self, t: &BitString) -> Option<bool> {
        let bits = t.as_slice();
        (0..=bits.len()).find_map(|k| {
            if self.t1.contains(&bits[..k]) {
                Some(true)
            } else if self.t0.contains(&bits[..k]) {
                Some(false)
            } else {
                None
            }
        })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for s in self.t0.iter().chain(&self.t1) {
            if s.len() > self.depth {
                violations.push(Violation::TooLong { string: s.clone() });
            }
        }
        for s in self.t0.intersection(&self.t1) {
            violations.push(Violation::Overlap { string: s.clone() });
        }
        for losing in &self.t0 {
            for winning in &self.t1 {
                if losing != winning && !losing.is_incomparable_with(winning) {
                    violations.push(Violation::PrefixConflict {
                        losing: losing.clone(),
                        winning: winning.clone(),
                    });
                }
            }
        }
        let well_formed = violations.is_empty();

        let mut unbarred = Vec::new();
        self.collect_unbarred(&mut BitString::new(), &mut unbarred);
        let total = unbarred.is_empty();
        violations.extend(
            unbarred
                .into_iter()
                .map(|string| Violation::Unbarred { string }),
        );
        ValidationReport {
            well_formed,
            total,
            violations,
        }
    }

    fn collect_unbarred(&self, node: &mut BitString, out: &mut Vec<BitString>) {
        if self.t0.contains(node.as_slice()) || self.t1.contains(node.as_slice()) {
            return;
        }
        if node.len() >= self.depth {
            out.push(node.clone());
            return;
        }
        for bit in [false, true] {
            node.push(bit);
            self.collect_unbarred(node, out);
            node.pop();
        }
    }
}
