//! Forbidden odd-cycle families and the minimum-degree threshold they induce.
//!
//! A family is summarized by two parameters: `ell`, where C_{2ell+1} is the
//! shortest odd cycle *not* in the family, and `k`, where C_{2k+1} is the
//! longest odd cycle in it. The degree threshold guaranteeing bipartiteness is
//! `max(n/(2(2ell+1)), 2n/(2k+3))`, and which term wins splits families into
//! regimes. All comparisons are exact integer cross-multiplications; verdicts
//! never touch floating point.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family must be nonempty")]
    Empty,
    #[error("cycle length {0} is not an odd integer >= 3")]
    NotAnOddCycleLength(usize),
    #[error("could not parse {0:?} as a cycle length")]
    Unparseable(String),
}

/// A finite nonempty set of odd cycle lengths, each at least 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OddFamily {
    lengths: BTreeSet<usize>,
}

impl OddFamily {
    pub fn new(lengths: impl IntoIterator<Item = usize>) -> Result<Self, FamilyError> {
        let lengths: BTreeSet<usize> = lengths.into_iter().collect();
        if lengths.is_empty() {
            return Err(FamilyError::Empty);
        }
        if let Some(&bad) = lengths.iter().find(|&&l| l < 3 || l % 2 == 0) {
            return Err(FamilyError::NotAnOddCycleLength(bad));
        }
        Ok(OddFamily { lengths })
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.lengths.iter().copied()
    }

    pub fn contains(&self, length: usize) -> bool {
        self.lengths.contains(&length)
    }

    pub fn max_length(&self) -> usize {
        *self.lengths.iter().next_back().expect("nonempty")
    }

    /// Derives (ell, k, regime) for this family.
    pub fn profile(&self) -> FamilyProfile {
        let ell = (1..)
            .find(|j| !self.lengths.contains(&(2 * j + 1)))
            .expect("some odd length is missing");
        let k = (self.max_length() - 1) / 2;
        let regime = if ell > k {
            debug_assert_eq!(ell, k + 1);
            Regime::PrefixComplete
        } else {
            // 1/(2(2ell+1)) vs 2/(2k+3), cross-multiplied: 2k+3 vs 4(2ell+1)
            match (2 * k + 3).cmp(&(4 * (2 * ell + 1))) {
                std::cmp::Ordering::Greater => Regime::EllDominant,
                std::cmp::Ordering::Less => Regime::KDominant,
                std::cmp::Ordering::Equal => Regime::Tie,
            }
        };
        FamilyProfile { ell, k, regime }
    }

    /// The reduced family {3, 5, ..., 2ell-1, 2k+1}: a graph avoiding this
    /// family avoids these lengths in particular, and the threshold only
    /// depends on them.
    pub fn reduced(&self) -> OddFamily {
        let p = self.profile();
        let mut lengths: BTreeSet<usize> = (1..p.ell).map(|j| 2 * j + 1).collect();
        lengths.insert(2 * p.k + 1);
        OddFamily { lengths }
    }

    /// Comma-separated form, e.g. `"3,7,19"`.
    pub fn display(&self) -> String {
        self.lengths
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromStr for OddFamily {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let mut lengths = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            let l: usize = piece
                .parse()
                .map_err(|_| FamilyError::Unparseable(piece.to_string()))?;
            lengths.push(l);
        }
        OddFamily::new(lengths)
    }
}

/// Which term of the threshold max dominates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// Every odd cycle up to the maximum is forbidden (ell = k+1); the
    /// blow-up term is the whole bound.
    PrefixComplete,
    /// 8·ell < 2k-1: the BC term n/(2(2ell+1)) dominates.
    EllDominant,
    /// 8·ell > 2k-1: the blow-up term 2n/(2k+3) dominates.
    KDominant,
    /// 8·ell = 2k-1. No integers realize this (odd vs even); kept so the
    /// rational comparison is total.
    Tie,
}

/// Derived family parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyProfile {
    pub ell: usize,
    pub k: usize,
    pub regime: Regime,
}

impl FamilyProfile {
    /// Exact threshold coefficient: the graph must satisfy
    /// `min_degree > threshold * n` for the bipartiteness guarantee.
    ///
    /// For prefix-complete families the BC term is vacuous (ell = k+1 makes
    /// it 1/(2(2k+3)) < 2/(2k+3)), so the coefficient is 2/(2k+3).
    pub fn threshold(&self) -> Threshold {
        match self.regime {
            Regime::EllDominant => Threshold::new(1, 2 * (2 * self.ell as u64 + 1)),
            Regime::KDominant | Regime::PrefixComplete | Regime::Tie => {
                Threshold::new(2, 2 * self.k as u64 + 3)
            }
        }
    }
}

/// An exact rational coefficient `numerator/denominator`, in lowest terms,
/// multiplying n in the degree bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Threshold {
    pub numerator: u64,
    pub denominator: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

impl Threshold {
    fn new(numerator: u64, denominator: u64) -> Self {
        let g = gcd(numerator, denominator);
        Threshold {
            numerator: numerator / g,
            denominator: denominator / g,
        }
    }

    /// `degree > (numerator/denominator) * n`, exactly.
    pub fn strictly_exceeded_by(&self, degree: usize, n: usize) -> bool {
        degree as u64 * self.denominator > self.numerator * n as u64
    }

    /// `degree = (numerator/denominator) * n`, exactly.
    pub fn met_exactly_by(&self, degree: usize, n: usize) -> bool {
        degree as u64 * self.denominator == self.numerator * n as u64
    }

    /// Smallest degree meeting or exceeding the bound, i.e. the equality
    /// degree when it is an integer and the first strict degree otherwise.
    pub fn min_degree_at_or_above(&self, n: usize) -> usize {
        (self.numerator * n as u64).div_ceil(self.denominator) as usize
    }

    /// Smallest degree strictly above the bound.
    pub fn min_degree_strictly_above(&self, n: usize) -> usize {
        (self.numerator * n as u64 / self.denominator) as usize + 1
    }
}

impl std::fmt::Display for Threshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}
