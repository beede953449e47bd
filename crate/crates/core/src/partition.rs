//! The partition value type, its text and JSON encodings, and the elementary
//! operators: conjugation, first row/column removal and column addition.
//!
//! Rows and columns are 1-indexed everywhere in the public API. A partition
//! stores only its non-zero parts; `part(i)` returns 0 past the last part.
//!
//! Text format: `PART ("," PART)*` with `PART := INT ("^" INT)?`, e.g.
//! `10,6^2,4,2`. The empty partition is written `()`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Text token for the empty partition.
pub const EMPTY_TOKEN: &str = "()";

/// A cell `(row, col)` of a Young diagram, 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "nodes are 1-indexed");
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(usize, usize)> for Node {
    fn from((row, col): (usize, usize)) -> Self {
        Node::new(row, col)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

pub(crate) fn assert_e(e: usize) {
    assert!(e >= 2, "e must be at least 2, got {e}");
}

impl Partition {
    /// Builds a partition from its non-zero parts, which must be weakly
    /// decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Drops trailing zeros. Callers guarantee weak decrease.
    pub(crate) fn from_trimmed(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(λ)`, the number of non-zero parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The `i`-th part (1-indexed), 0 beyond the last part and for `i = 0`.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> usize {
        self.part(1)
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.part(node.row)
    }

    /// All nodes in row-major order.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Node::new(i + 1, j)))
    }

    /// `Tλ`: `(Tλ)_i = |{j : λ_j ≥ i}|`.
    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        let mut cols = vec![0usize; width];
        // each row of length p contributes one node to columns 1..=p
        for &p in &self.parts {
            for c in cols.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// `Rλ`: delete the first row.
    pub fn remove_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// `Cλ`: delete the first column.
    pub fn remove_first_column(&self) -> Partition {
        Partition::from_trimmed(self.parts.iter().map(|&p| p - 1).collect())
    }

    /// Adds a column of length `len` on the left. Requires `len ≥ l(λ)`.
    pub fn add_column(&self, len: usize) -> Result<Partition> {
        if len < self.num_parts() {
            return Err(Error::ColumnTooShort {
                len,
                parts: self.num_parts(),
            });
        }
        let parts = (1..=len).map(|i| self.part(i) + 1).collect();
        Ok(Partition { parts })
    }

    /// No `e` equal positive parts in a row.
    pub fn is_e_regular(&self, e: usize) -> bool {
        assert_e(e);
        self.parts.windows(e).all(|w| w[0] != w[e - 1])
    }

    /// Every drop `λ_i − λ_{i+1}` (including the last part down to 0) is below `e`.
    pub fn is_e_restricted(&self, e: usize) -> bool {
        assert_e(e);
        (1..=self.num_parts()).all(|i| self.part(i) - self.part(i + 1) < e)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.parts).expect("integer arrays always serialize")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// Exponent notation: equal parts are grouped, `(5,4,3,3,2,1)` prints as
/// `5,4,3^2,2,1`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str(EMPTY_TOKEN);
        }
        let mut first = true;
        for chunk in self.parts.chunk_by(|a, b| a == b) {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            match chunk.len() {
                1 => write!(f, "{}", chunk[0])?,
                k => write!(f, "{}^{}", chunk[0], k)?,
            }
        }
        Ok(())
    }
}

fn parse_positive(token: &str, text: &str) -> Result<usize> {
    let bad = |reason: String| Error::Parse {
        text: text.to_string(),
        reason,
    };
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad(format!("expected a positive integer, found {token:?}")));
    }
    let value: usize = token
        .parse()
        .map_err(|_| bad(format!("integer {token:?} out of range")))?;
    if value == 0 {
        return Err(bad("zero is not allowed here".to_string()));
    }
    Ok(value)
}

/// Parses the exponent notation described in the module docs.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let trimmed = text.trim();
    if trimmed == EMPTY_TOKEN {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for item in trimmed.split(',') {
        let (base, exp) = match item.split_once('^') {
            Some((b, x)) => (b.trim(), Some(x.trim())),
            None => (item.trim(), None),
        };
        let value = parse_positive(base, text)?;
        let count = match exp {
            Some(x) => parse_positive(x, text)?,
            None => 1,
        };
        parts.extend(std::iter::repeat_n(value, count));
    }
    Partition::new(parts).map_err(|err| match err {
        Error::NotDecreasing(p) => Error::Parse {
            text: text.to_string(),
            reason: format!("parts {p:?} are not weakly decreasing"),
        },
        other => other,
    })
}

pub fn format_partition(p: &Partition) -> String {
    p.to_string()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Iterator over the partitions of `n` in descending lexicographic order,
/// starting from `(n)` and ending at `(1^n)`.
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

// Lexicographic predecessor: find the last part > 1, decrement it, and
// refill the tail greedily with copies of the new value.
fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let pivot = parts.iter().rposition(|&p| p > 1)?;
    let mut next = parts[..pivot].to_vec();
    let value = parts[pivot] - 1;
    // the decremented unit plus the trailing ones
    let mut rest = parts.len() - pivot;
    next.push(value);
    while rest > 0 {
        let take = rest.min(value);
        next.push(take);
        rest -= take;
    }
    Some(next)
}

pub fn enumerate_partitions(n: usize) -> Partitions {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Partitions { next: Some(first) }
}

/// Every partition of size `0..=n_max`, by size then in enumeration order.
pub fn partitions_up_to(n_max: usize) -> impl Iterator<Item = Partition> {
    (0..=n_max).flat_map(enumerate_partitions)
}
