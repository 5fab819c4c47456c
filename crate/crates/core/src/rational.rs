//! Exact nonnegative rationals extended with `+∞`.
//!
//! Toughness values and the theorem thresholds are compared with these and
//! never with floats: the thresholds are strict inequalities between
//! fractions and a rounding error would flip a verdict.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonnegative rational in lowest terms, or `Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rat {
    Finite { num: u64, den: u64 },
    Infinity,
}

impl Rat {
    pub const ZERO: Rat = Rat::Finite { num: 0, den: 1 };
    pub const ONE: Rat = Rat::Finite { num: 1, den: 1 };

    /// Builds `num / den` reduced to lowest terms.
    pub fn new(num: u64, den: u64) -> Result<Rat> {
        if den == 0 {
            return Err(Error::InvalidArgument(format!(
                "zero denominator in {num}/0"
            )));
        }
        let g = num.gcd(&den);
        Ok(Rat::Finite {
            num: num / g,
            den: den / g,
        })
    }

    /// Like [`Rat::new`], for call sites where `den > 0` is structural.
    pub(crate) fn ratio(num: usize, den: usize) -> Rat {
        Rat::new(num as u64, den as u64).expect("nonzero denominator")
    }

    pub fn integer(value: u64) -> Rat {
        Rat::Finite { num: value, den: 1 }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Rat::Infinity)
    }

    pub fn numer(&self) -> Option<u64> {
        match *self {
            Rat::Finite { num, .. } => Some(num),
            Rat::Infinity => None,
        }
    }

    pub fn denom(&self) -> Option<u64> {
        match *self {
            Rat::Finite { den, .. } => Some(den),
            Rat::Infinity => None,
        }
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (*self, *other) {
            (Rat::Infinity, Rat::Infinity) => Ordering::Equal,
            (Rat::Infinity, _) => Ordering::Greater,
            (_, Rat::Infinity) => Ordering::Less,
            (Rat::Finite { num: a, den: b }, Rat::Finite { num: c, den: d }) => {
                (a as u128 * d as u128).cmp(&(c as u128 * b as u128))
            }
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Finite { num, den } => write!(f, "{num}/{den}"),
            Rat::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `"num/den"`, a bare integer, or `"inf"`.
    fn from_str(s: &str) -> Result<Rat> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Rat::Infinity);
        }
        let bad = || Error::InvalidArgument(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let num = n.trim().parse::<u64>().map_err(|_| bad())?;
                let den = d.trim().parse::<u64>().map_err(|_| bad())?;
                Rat::new(num, den)
            }
            None => s.parse::<u64>().map(Rat::integer).map_err(|_| bad()),
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
