//! Ladders and e-regularisation.
//!
//! For fixed `e`, ladder `l` is the set of nodes `(i, j)` with
//! `i + (e-1)(j-1) = l`. Regularising slides every node of a ladder as high
//! (smallest row) as it can go within that ladder.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::partition::{assert_e, Node, Partition};

pub fn ladder_index(node: Node, e: usize) -> usize {
    assert_e(e);
    node.row + (e - 1) * (node.col - 1)
}

/// Column of the highest node of ladder `l`.
pub fn ladder_top_col(l: usize, e: usize) -> usize {
    assert_e(e);
    assert!(l >= 1, "ladders are numbered from 1");
    (l - 1) / (e - 1) + 1
}

/// Row of the highest node of ladder `l`: `l - (e-1)·⌊(l-1)/(e-1)⌋`.
pub fn ladder_top_row(l: usize, e: usize) -> usize {
    l - (e - 1) * (ladder_top_col(l, e) - 1)
}

/// Number of nodes of ladder `l` lying in the positive quadrant.
pub fn ladder_capacity(l: usize, e: usize) -> usize {
    ladder_top_col(l, e)
}

/// Per-ladder node counts `lad_l(λ)`; only non-zero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderCounts {
    pub e: usize,
    pub counts: BTreeMap<usize, usize>,
}

impl LadderCounts {
    pub fn get(&self, l: usize) -> usize {
        self.counts.get(&l).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&l, &c)| (l, c))
    }
}

pub fn ladder_counts(p: &Partition, e: usize) -> LadderCounts {
    assert_e(e);
    let mut counts = BTreeMap::new();
    for node in p.nodes() {
        *counts.entry(ladder_index(node, e)).or_insert(0) += 1;
    }
    LadderCounts { e, counts }
}

/// `Gλ`, the e-regularisation of `λ`.
///
/// Panics if the top-filled ladders fail to form a Young diagram, which
/// would mean a bug in the ladder arithmetic.
pub fn regularise(p: &Partition, e: usize) -> Partition {
    let counts = ladder_counts(p, e);
    let mut row_len: Vec<usize> = Vec::new();
    let mut row_max: Vec<usize> = Vec::new();
    for (l, c) in counts.iter() {
        assert!(
            c <= ladder_capacity(l, e),
            "ladder {l} holds {c} nodes but has room for {}",
            ladder_capacity(l, e)
        );
        let top_row = ladder_top_row(l, e);
        let top_col = ladder_top_col(l, e);
        for k in 0..c {
            let row = top_row + k * (e - 1);
            let col = top_col - k;
            if row_len.len() < row {
                row_len.resize(row, 0);
                row_max.resize(row, 0);
            }
            row_len[row - 1] += 1;
            row_max[row - 1] = row_max[row - 1].max(col);
        }
    }
    assert_eq!(
        row_len, row_max,
        "regularised rows of {p} (e = {e}) are not left-justified"
    );
    assert!(
        row_len.windows(2).all(|w| w[0] >= w[1]) && row_len.last() != Some(&0),
        "regularised rows {row_len:?} of {p} (e = {e}) are not a partition"
    );
    Partition::from_trimmed(row_len)
}

/// True when no node of `λ` could move strictly higher within its ladder,
/// i.e. whenever `(i, j)` is a node and `i > e-1`, so is `(i-e+1, j+1)`.
pub fn ladders_top_filled(p: &Partition, e: usize) -> bool {
    assert_e(e);
    p.nodes()
        .filter(|n| n.row > e - 1)
        .all(|n| p.contains(Node::new(n.row - (e - 1), n.col + 1)))
}
