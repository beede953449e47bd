//! Independent reference implementations used to cross-check the library.
//! Nothing here calls into the operators under test; diagrams are plain
//! sets of `(row, col)` pairs.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

pub type Diagram = BTreeSet<(usize, usize)>;

pub fn diagram(parts: &[usize]) -> Diagram {
    parts
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
        .collect()
}

/// Row lengths of a diagram, asserting it is a Young diagram.
pub fn parts_of(d: &Diagram) -> Vec<usize> {
    let rows = d.iter().map(|&(i, _)| i).max().unwrap_or(0);
    let parts: Vec<usize> = (1..=rows)
        .map(|i| d.iter().filter(|&&(r, _)| r == i).count())
        .collect();
    for &(i, j) in d {
        assert!(j <= parts[i - 1], "row {i} of {d:?} has a gap");
    }
    assert!(
        parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0),
        "{parts:?}"
    );
    parts
}

/// All partitions of `n`, generated recursively with parts bounded by `max`.
pub fn partitions_recursive(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// p(n) via the "partitions of n with largest part at most k" recurrence.
pub fn partition_count(n: usize) -> usize {
    let mut table = vec![vec![0usize; n + 1]; n + 1];
    for row in table.iter_mut() {
        row[0] = 1;
    }
    for k in 1..=n {
        for m in 1..=n {
            table[k][m] = table[k - 1][m] + if m >= k { table[k][m - k] } else { 0 };
        }
    }
    if n == 0 {
        1
    } else {
        table[n][n]
    }
}

pub fn conjugate_oracle(parts: &[usize]) -> Vec<usize> {
    let d = diagram(parts);
    let transposed: Diagram = d.iter().map(|&(i, j)| (j, i)).collect();
    if transposed.is_empty() {
        Vec::new()
    } else {
        parts_of(&transposed)
    }
}

pub fn is_regular_oracle(parts: &[usize], e: usize) -> bool {
    // count multiplicities of each positive value
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &p in parts {
        *mult.entry(p).or_insert(0) += 1;
    }
    mult.values().all(|&m| m < e)
}

/// `Gλ` by sliding nodes one ladder step at a time until nothing can move.
pub fn regularise_oracle(parts: &[usize], e: usize) -> Vec<usize> {
    let mut d = diagram(parts);
    loop {
        let movable = d
            .iter()
            .copied()
            .find(|&(i, j)| i > e - 1 && !d.contains(&(i - (e - 1), j + 1)));
        match movable {
            None => break,
            Some((i, j)) => {
                d.remove(&(i, j));
                d.insert((i - (e - 1), j + 1));
            }
        }
    }
    if d.is_empty() {
        Vec::new()
    } else {
        parts_of(&d)
    }
}

pub fn ladder_counts_oracle(parts: &[usize], e: usize) -> HashMap<usize, usize> {
    let mut counts = HashMap::new();
    for (i, j) in diagram(parts) {
        *counts.entry(i + (e - 1) * (j - 1)).or_insert(0) += 1;
    }
    counts
}

/// `(arm, leg)` of node `(i, j)` by counting diagram cells.
pub fn arm_leg_oracle(d: &Diagram, i: usize, j: usize) -> (usize, usize) {
    let arm = d.iter().filter(|&&(r, c)| r == i && c > j).count();
    let leg = d.iter().filter(|&&(r, c)| c == j && r > i).count();
    (arm, leg)
}

/// `(w, steep divisible, shallow divisible, neither divisible)`.
pub fn hook_counts_oracle(parts: &[usize], e: usize) -> (usize, usize, usize, usize) {
    let d = diagram(parts);
    let (mut w, mut steep, mut shallow, mut neither) = (0, 0, 0, 0);
    for &(i, j) in &d {
        let (a, l) = arm_leg_oracle(&d, i, j);
        if (a + l + 1) % e != 0 {
            continue;
        }
        w += 1;
        let is_shallow = a >= (e - 1) * l;
        let is_steep = l >= (e - 1) * a;
        if is_steep {
            steep += 1;
        }
        if is_shallow {
            shallow += 1;
        }
        if !is_steep && !is_shallow {
            neither += 1;
        }
    }
    (w, steep, shallow, neither)
}

pub fn is_l_partition_oracle(parts: &[usize], e: usize) -> bool {
    hook_counts_oracle(parts, e).3 == 0
}

/// The rim as an explicit list, top right to bottom left.
pub fn rim_list(parts: &[usize]) -> Vec<(usize, usize)> {
    let d = diagram(parts);
    let mut rim: Vec<(usize, usize)> = d
        .iter()
        .copied()
        .filter(|&(i, j)| !d.contains(&(i + 1, j + 1)))
        .collect();
    rim.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    rim
}

/// The e-rim walked over the explicit rim list: advance one rim position,
/// except after every e-th node, when jump to the first rim node of the
/// next row.
pub fn e_rim_oracle(parts: &[usize], e: usize) -> Vec<(usize, usize)> {
    if parts.is_empty() {
        return Vec::new();
    }
    let rim = rim_list(parts);
    let bottom = parts.len();
    let mut pos = 0;
    let mut out = vec![rim[0]];
    let mut k = 1;
    loop {
        let (i, j) = out[k - 1];
        if i == bottom && (j == 1 || k % e == 0) {
            return out;
        }
        k += 1;
        if (k - 1) % e != 0 {
            pos += 1;
        } else {
            pos = rim
                .iter()
                .position(|&(r, _)| r == i + 1)
                .expect("next row exists");
        }
        out.push(rim[pos]);
    }
}

pub fn remove_cells(parts: &[usize], cells: &[(usize, usize)]) -> Vec<usize> {
    let mut d = diagram(parts);
    for c in cells {
        assert!(d.remove(c), "{c:?} not in {parts:?}");
    }
    if d.is_empty() {
        Vec::new()
    } else {
        parts_of(&d)
    }
}

/// `(r, l(λ), Iλ)` from the oracle rim.
pub fn strip_i_oracle(parts: &[usize], e: usize) -> (usize, Vec<usize>) {
    let rim = e_rim_oracle(parts, e);
    (rim.len(), remove_cells(parts, &rim))
}

/// The Mullineux map from its original definition: the unique e-regular
/// `μ ⊢ |λ|` with the same e-rim length, `l(μ) = m`, and `Iμ = M(Iλ)`,
/// found by searching every partition of `|λ|`. Panics unless exactly one
/// candidate exists.
pub struct MullineuxSearch {
    e: usize,
    memo: HashMap<Vec<usize>, Vec<usize>>,
}

impl MullineuxSearch {
    pub fn new(e: usize) -> Self {
        MullineuxSearch {
            e,
            memo: HashMap::new(),
        }
    }

    pub fn image(&mut self, parts: &[usize]) -> Vec<usize> {
        if parts.is_empty() {
            return Vec::new();
        }
        if let Some(hit) = self.memo.get(parts) {
            return hit.clone();
        }
        let e = self.e;
        let (r, inner) = strip_i_oracle(parts, e);
        let m = if r % e == 0 {
            r - parts.len()
        } else {
            r - parts.len() + 1
        };
        let inner_image = self.image(&inner);
        let n: usize = parts.iter().sum();
        let found: Vec<Vec<usize>> = partitions_recursive(n)
            .into_iter()
            .filter(|mu| mu.len() == m && is_regular_oracle(mu, e))
            .filter(|mu| {
                let (r_mu, i_mu) = strip_i_oracle(mu, e);
                r_mu == r && i_mu == inner_image
            })
            .collect();
        assert_eq!(
            found.len(),
            1,
            "M({parts:?}) at e = {e}: candidates {found:?}"
        );
        let image = found.into_iter().next().unwrap();
        self.memo.insert(parts.to_vec(), image.clone());
        image
    }
}

/// `s(λ)` by scanning drops.
pub fn s_oracle(parts: &[usize], e: usize) -> usize {
    let mut s = 0;
    for i in 0..parts.len() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        if parts[i] - next >= e {
            s = i + 1;
        }
    }
    s
}
