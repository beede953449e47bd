//! The e-rim, the stripping operators `I` and `J`, and the Mullineux map.
//!
//! `M` is computed through the recursion `Mλ = Mλ' + column(|λ| - |λ'|)`
//! with `λ' = Jλ`, unrolled into a loop: the column lengths are collected
//! from the outside in, then added back starting from the empty partition.
//! The original characterisation (same e-rim length, `l(Mλ) = m`,
//! `I(Mλ) = M(Iλ)`) is kept as [`mullineux_characterization_check`].

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{assert_e, Node, Partition};

/// The e-rim of a partition together with the scalars derived from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RimData {
    pub e: usize,
    /// e-rim nodes, top right to bottom left.
    pub rim_nodes: Vec<Node>,
    /// e-rim length.
    pub r: usize,
    /// Nodes removed by `J`, in rim order.
    pub truncated_rim: Vec<Node>,
    /// Number of parts the Mullineux image must have.
    pub m: usize,
    /// Length of the column `J` puts back after removing the e-rim.
    pub l_prime: usize,
}

fn require_regular(p: &Partition, e: usize) -> Result<()> {
    if p.is_e_regular(e) {
        Ok(())
    } else {
        Err(Error::Singular {
            partition: p.to_string(),
            e,
        })
    }
}

/// Walks the rim from `(1, λ_1)`, dropping to the end of the next row after
/// every `e`-th node, until the bottom row is reached at column 1 or at a
/// step count divisible by `e`.
pub fn e_rim(p: &Partition, e: usize) -> Result<RimData> {
    assert_e(e);
    require_regular(p, e)?;
    let len = p.num_parts();
    if p.is_empty() {
        return Ok(RimData {
            e,
            rim_nodes: Vec::new(),
            r: 0,
            truncated_rim: Vec::new(),
            m: 0,
            l_prime: 0,
        });
    }

    let cap = p.size() + len;
    let walk_error = || Error::RimWalk {
        partition: p.to_string(),
        e,
        cap,
    };
    let mut rim = Vec::new();
    let (mut row, mut col) = (1, p.first_part());
    let mut k = 1;
    loop {
        rim.push(Node::new(row, col));
        if row == len && (col == 1 || k % e == 0) {
            break;
        }
        if k >= cap {
            return Err(walk_error());
        }
        k += 1;
        if (k - 1) % e != 0 {
            // next rim node: down if the row below reaches this column, else left
            if p.part(row + 1) >= col {
                row += 1;
            } else if col > 1 {
                col -= 1;
            } else {
                return Err(walk_error());
            }
        } else {
            if row >= len {
                return Err(walk_error());
            }
            row += 1;
            col = p.part(row);
        }
    }

    let r = rim.len();
    let divisible = r % e == 0;
    let m = if divisible { r - len } else { r - len + 1 };
    let l_prime = if divisible { len } else { len - 1 };

    let members: BTreeSet<Node> = rim.iter().copied().collect();
    let mut truncated_rim: Vec<Node> = rim
        .iter()
        .copied()
        .filter(|n| n.col > 1 && members.contains(&Node::new(n.row, n.col - 1)))
        .collect();
    if !divisible {
        truncated_rim.push(Node::new(len, 1));
    }

    Ok(RimData {
        e,
        rim_nodes: rim,
        r,
        truncated_rim,
        m,
        l_prime,
    })
}

/// Removes `nodes` from `[λ]`; each row must lose a suffix and the result
/// must again be a partition.
pub fn remove_nodes(p: &Partition, nodes: &[Node]) -> Result<Partition> {
    let mut removed: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); p.num_parts()];
    for n in nodes {
        if !p.contains(*n) || !removed[n.row - 1].insert(n.col) {
            return Err(Error::Invariant(format!(
                "node {n} is not a (distinct) node of {p}"
            )));
        }
    }
    let mut parts = Vec::with_capacity(p.num_parts());
    for (i, cols) in removed.iter().enumerate() {
        let len = p.part(i + 1);
        let keep = len - cols.len();
        if cols.iter().any(|&c| c <= keep) {
            return Err(Error::Invariant(format!(
                "removing {cols:?} from row {} of {p} leaves a gap",
                i + 1
            )));
        }
        parts.push(keep);
    }
    if !parts.windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::Invariant(format!(
            "removing nodes from {p} gives non-partition {parts:?}"
        )));
    }
    Ok(Partition::from_trimmed(parts))
}

/// `Iλ`: remove the e-rim.
pub fn strip_i(p: &Partition, e: usize) -> Result<Partition> {
    let rim = e_rim(p, e)?;
    remove_nodes(p, &rim.rim_nodes)
}

/// `Jλ`: remove the e-rim, then add a column of length `l'`.
pub fn strip_j(p: &Partition, e: usize) -> Result<Partition> {
    let rim = e_rim(p, e)?;
    remove_nodes(p, &rim.rim_nodes)?.add_column(rim.l_prime)
}

/// `Jλ` obtained the other way, by removing only the truncated e-rim.
pub fn strip_j_truncated(p: &Partition, e: usize) -> Result<Partition> {
    let rim = e_rim(p, e)?;
    remove_nodes(p, &rim.truncated_rim)
}

/// Column lengths `|λ| - |Jλ|`, `|Jλ| - |J²λ|`, ... until the empty
/// partition is reached.
pub fn mullineux_layers(p: &Partition, e: usize) -> Result<Vec<usize>> {
    assert_e(e);
    require_regular(p, e)?;
    let mut layers = Vec::new();
    let mut current = p.clone();
    while !current.is_empty() {
        let next = strip_j(&current, e)?;
        let (before, after) = (current.size(), next.size());
        if after >= before {
            return Err(Error::Invariant(format!(
                "J did not shrink {current} (e = {e}): got {next}"
            )));
        }
        layers.push(before - after);
        current = next;
    }
    Ok(layers)
}

/// The Mullineux image `Mλ` of an e-regular partition.
pub fn mullineux(p: &Partition, e: usize) -> Result<Partition> {
    let layers = mullineux_layers(p, e)?;
    let mut image = Partition::empty();
    for &len in layers.iter().rev() {
        image = image.add_column(len).map_err(|err| {
            Error::Invariant(format!(
                "rebuilding M({p}) with e = {e}, layers {layers:?}: {err}"
            ))
        })?;
    }
    Ok(image)
}

/// Checks `μ = Mλ` against the original definition: `μ` has the same e-rim
/// length as `λ`, `l(μ) = m(λ)`, and `Iμ = M(Iλ)`.
pub fn mullineux_characterization_check(p: &Partition, e: usize) -> Result<bool> {
    let image = mullineux(p, e)?;
    let rim = e_rim(p, e)?;
    let image_rim = e_rim(&image, e)?;
    Ok(image_rim.r == rim.r
        && image.num_parts() == rim.m
        && strip_i(&image, e)? == mullineux(&strip_i(p, e)?, e)?)
}
