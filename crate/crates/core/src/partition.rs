//! Integer partitions and the equal-weight triples that index Kronecker
//! coefficients.
//!
//! Partitions are stored without trailing zeros. Callers that need a padded
//! view ask for one explicitly with [`Partition::padded`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite nonincreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition(Vec<u64>);

impl Partition {
    /// Builds a partition from its parts. Parts must be positive and nonincreasing.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part (trailing zeros are not stored)"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not nonincreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from a sequence that may carry trailing zeros.
    pub fn from_padded(mut parts: Vec<u64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, or the empty partition when `n = 0`.
    pub fn row(n: u64) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(value^count)`: `count` parts all equal to `value`.
    pub fn rectangle(value: u64, count: usize) -> Self {
        if value == 0 {
            Self::empty()
        } else {
            Partition(vec![value; count])
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.0
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part, 1-based, reading zero past the end.
    pub fn part(&self, i: usize) -> u64 {
        assert!(i >= 1, "parts are indexed from 1");
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Result<Vec<u64>> {
        if self.length() > len {
            return Err(Error::Shape(format!(
                "partition {self} has {} parts, more than {len}",
                self.length()
            )));
        }
        let mut v = self.0.clone();
        v.resize(len, 0);
        Ok(v)
    }

    /// `(N p_1, N p_2, ...)`.
    pub fn stretch(&self, n: u64) -> Result<Self> {
        assert!(n >= 1, "stretching factor must be positive");
        let parts = self
            .0
            .iter()
            .map(|&p| p.checked_mul(n).ok_or(Error::Overflow("partition stretch")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition(parts))
    }

    /// Termwise sum of the zero-padded sequences.
    pub fn add(&self, other: &Partition) -> Result<Self> {
        let len = self.length().max(other.length());
        let a = self.padded(len)?;
        let b = other.padded(len)?;
        let parts = a
            .iter()
            .zip(&b)
            .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow("partition sum")))
            .collect::<Result<Vec<_>>>()?;
        Partition::from_padded(parts)
    }

    /// The sequence `(n - |p|, p_1, p_2, ...)`, if it is a partition.
    pub fn prepend_to_weight(&self, n: u64) -> Result<Self> {
        let w = self.weight();
        if n < w + self.part(1) {
            return Err(Error::Shape(format!(
                "({n} - |{self}|, {self}) is not a partition: need n >= {}",
                w + self.part(1)
            )));
        }
        let mut parts = Vec::with_capacity(self.length() + 1);
        if n > w {
            parts.push(n - w);
        }
        parts.extend_from_slice(&self.0);
        Partition::new(parts)
    }

    /// The partition with its first part removed.
    pub fn tail(&self) -> Self {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Componentwise containment of Young diagrams: `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the canonical comma-separated form, e.g. `6,4,2`. The empty
    /// partition is written `0` or as the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u64>().map_err(|_| {
                    Error::InvalidPartition(format!("cannot parse part {tok:?} in {s:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_padded(parts)
    }
}

/// Builds a partition from a literal list of parts, panicking on invalid input.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p as u64),+]).expect("invalid partition literal")
    };
}

/// Three partitions of equal weight: the indices `(λ; μ, ν)` of `g_{μ,ν}^λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KronTriple {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl KronTriple {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Result<Self> {
        let (l, m, n) = (lambda.weight(), mu.weight(), nu.weight());
        if l != m {
            return Err(Error::WeightMismatch(format!(
                "|lambda| = {l} but |mu| = {m} (lambda = {lambda}, mu = {mu})"
            )));
        }
        if l != n {
            return Err(Error::WeightMismatch(format!(
                "|lambda| = {l} but |nu| = {n} (lambda = {lambda}, nu = {nu})"
            )));
        }
        Ok(KronTriple { lambda, mu, nu })
    }

    pub fn weight(&self) -> u64 {
        self.lambda.weight()
    }

    pub fn stretch(&self, n: u64) -> Result<Self> {
        Ok(KronTriple {
            lambda: self.lambda.stretch(n)?,
            mu: self.mu.stretch(n)?,
            nu: self.nu.stretch(n)?,
        })
    }

    /// The same coefficient with `μ` and `ν` exchanged.
    pub fn swapped(&self) -> Self {
        KronTriple {
            lambda: self.lambda.clone(),
            mu: self.nu.clone(),
            nu: self.mu.clone(),
        }
    }

    /// True when `ℓ(μ) ≤ 2`, `ℓ(ν) ≤ 2` and `ℓ(λ) ≤ 3`.
    pub fn is_two_two_row(&self) -> bool {
        self.mu.length() <= 2 && self.nu.length() <= 2 && self.lambda.length() <= 3
    }
}

impl fmt::Display for KronTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.lambda, self.mu, self.nu)
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: u64) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with every part at most `max_part` and at most
/// `max_len` parts, in reverse lexicographic order.
pub fn partitions_bounded(n: u64, max_part: u64, max_len: usize) -> Vec<Partition> {
    fn go(rest: u64, max_part: u64, max_len: usize, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=rest.min(max_part)).rev() {
            cur.push(p);
            go(rest - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}
