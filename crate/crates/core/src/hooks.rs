//! Hook lengths, e-weight, shallow/steep classification, L-partitions, and
//! the row-trimming operator `S`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{assert_e, Node, Partition};

/// Shape of a hook relative to `e`: shallow when `a ≥ (e-1)·l`, steep when
/// `l ≥ (e-1)·a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HookClass {
    Shallow,
    Steep,
    Neither,
    Both,
}

impl HookClass {
    pub fn classify(arm: usize, leg: usize, e: usize) -> HookClass {
        let shallow = arm >= (e - 1) * leg;
        let steep = leg >= (e - 1) * arm;
        match (shallow, steep) {
            (true, true) => HookClass::Both,
            (true, false) => HookClass::Shallow,
            (false, true) => HookClass::Steep,
            (false, false) => HookClass::Neither,
        }
    }

    pub fn is_shallow(self) -> bool {
        matches!(self, HookClass::Shallow | HookClass::Both)
    }

    pub fn is_steep(self) -> bool {
        matches!(self, HookClass::Steep | HookClass::Both)
    }
}

impl fmt::Display for HookClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HookClass::Shallow => "shallow",
            HookClass::Steep => "steep",
            HookClass::Neither => "neither",
            HookClass::Both => "both",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HookRecord {
    pub node: Node,
    pub arm: usize,
    pub leg: usize,
    pub length: usize,
    pub divisible: bool,
    pub class: HookClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookProfile {
    pub e: usize,
    /// One record per node, row-major.
    pub records: Vec<HookRecord>,
    /// e-weight: number of hooks of length divisible by `e`.
    pub w: usize,
    /// Divisible steep hooks.
    pub z: usize,
    /// Divisible shallow hooks.
    pub z_conj: usize,
}

impl HookProfile {
    pub fn record(&self, node: Node) -> Option<&HookRecord> {
        self.records.iter().find(|r| r.node == node)
    }

    pub fn divisible(&self) -> impl Iterator<Item = &HookRecord> {
        self.records.iter().filter(|r| r.divisible)
    }

    /// Divisible hooks that are neither shallow nor steep.
    pub fn bad_hooks(&self) -> impl Iterator<Item = &HookRecord> {
        self.divisible().filter(|r| r.class == HookClass::Neither)
    }

    pub fn is_l_partition(&self) -> bool {
        self.bad_hooks().next().is_none()
    }
}

pub fn hook_profile(p: &Partition, e: usize) -> HookProfile {
    assert_e(e);
    let conj = p.conjugate();
    let mut records = Vec::with_capacity(p.size());
    let (mut w, mut z, mut z_conj) = (0, 0, 0);
    for node in p.nodes() {
        let arm = p.part(node.row) - node.col;
        let leg = conj.part(node.col) - node.row;
        let length = arm + leg + 1;
        let divisible = length.is_multiple_of(e);
        let class = HookClass::classify(arm, leg, e);
        if divisible {
            assert_ne!(
                class,
                HookClass::Both,
                "divisible hook at {node} of {p} (e = {e}) is both shallow and steep"
            );
            w += 1;
            if class.is_steep() {
                z += 1;
            }
            if class.is_shallow() {
                z_conj += 1;
            }
        }
        records.push(HookRecord {
            node,
            arm,
            leg,
            length,
            divisible,
            class,
        });
    }
    HookProfile {
        e,
        records,
        w,
        z,
        z_conj,
    }
}

pub fn e_weight(p: &Partition, e: usize) -> usize {
    hook_profile(p, e).w
}

/// `z(λ)`: number of steep hooks of length divisible by `e`.
pub fn z_value(p: &Partition, e: usize) -> usize {
    hook_profile(p, e).z
}

pub fn is_l_partition(p: &Partition, e: usize) -> bool {
    hook_profile(p, e).is_l_partition()
}

/// `s(λ)`: the last row `i` with `λ_i - λ_{i+1} ≥ e`, or 0 if `λ` is
/// e-restricted.
pub fn s_value(p: &Partition, e: usize) -> usize {
    assert_e(e);
    (1..=p.num_parts())
        .rev()
        .find(|&i| p.part(i) - p.part(i + 1) >= e)
        .unwrap_or(0)
}

/// `t(λ) = s(Tλ)`.
pub fn t_value(p: &Partition, e: usize) -> usize {
    s_value(&p.conjugate(), e)
}

/// `Sλ = (λ_1-e+1, ..., λ_s-e+1, λ_{s+2}, λ_{s+3}, ...)` with `s = s(λ)`.
/// Defined on L-partitions only.
pub fn s_operator(p: &Partition, e: usize) -> Result<Partition> {
    if !is_l_partition(p, e) {
        return Err(Error::NotLPartition {
            partition: p.to_string(),
            e,
        });
    }
    let s = s_value(p, e);
    let mut parts: Vec<usize> = p.parts()[..s].iter().map(|&x| x - (e - 1)).collect();
    parts.extend(p.parts().iter().skip(s + 1));
    Partition::new(parts)
        .map_err(|err| Error::Invariant(format!("S({p}) with e = {e} is not a partition: {err}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_21_of_worked_example() {
        let lam = p(&[5, 2, 1, 1, 1, 1]);
        let at3 = *hook_profile(&lam, 3).record(Node::new(2, 1)).unwrap();
        assert_eq!((at3.arm, at3.leg, at3.length), (1, 4, 6));
        assert!(at3.divisible);
        assert_eq!(at3.class, HookClass::Steep);
        let at6 = *hook_profile(&lam, 6).record(Node::new(2, 1)).unwrap();
        assert!(at6.divisible);
        assert_eq!(at6.class, HookClass::Neither);
        assert!(!is_l_partition(&lam, 6));
    }

    #[test]
    fn empty_profile() {
        let prof = hook_profile(&Partition::empty(), 3);
        assert!(prof.records.is_empty());
        assert_eq!((prof.w, prof.z, prof.z_conj), (0, 0, 0));
        assert!(prof.is_l_partition());
    }

    #[test]
    fn all_shallow_example() {
        let prof = hook_profile(&p(&[14, 10, 2, 2]), 4);
        assert_eq!(prof.z, 0);
        assert_eq!(prof.z_conj, prof.w);
        // the marked nodes in the 4-divisible diagram
        let marked: Vec<_> = prof.divisible().map(|r| (r.node.row, r.node.col)).collect();
        assert_eq!(
            marked,
            vec![(1, 2), (1, 4), (1, 8), (1, 11), (2, 1), (2, 3), (2, 7)]
        );
    }

    #[test]
    fn shallow_and_steep_example() {
        let lam = p(&[11, 2, 2, 1, 1, 1, 1, 1]);
        let prof = hook_profile(&lam, 4);
        // three shallow marks in row 1, steep ones at (2,1) and (5,1)
        assert_eq!((prof.w, prof.z, prof.z_conj), (5, 2, 3));
        assert!(prof.is_l_partition());
        let shallow: Vec<_> = prof
            .divisible()
            .filter(|r| r.class == HookClass::Shallow)
            .map(|r| (r.node.row, r.node.col))
            .collect();
        assert_eq!(shallow, vec![(1, 2), (1, 4), (1, 8)]);
        let steep: Vec<_> = prof
            .divisible()
            .filter(|r| r.class == HookClass::Steep)
            .map(|r| (r.node.row, r.node.col))
            .collect();
        assert_eq!(steep, vec![(2, 1), (5, 1)]);
    }

    #[test]
    fn l_partition_examples() {
        assert!(is_l_partition(&p(&[9, 5, 2, 1, 1, 1, 1, 1]), 3));
        assert!(is_l_partition(&p(&[7, 3, 1, 1, 1, 1, 1]), 3));
        assert!(is_l_partition(&p(&[5, 2, 1, 1, 1, 1]), 2));
    }

    #[test]
    fn s_and_t_values() {
        assert_eq!(s_value(&p(&[9, 5, 2, 1, 1, 1, 1, 1]), 3), 2);
        assert_eq!(s_value(&p(&[11, 2, 2, 1, 1, 1, 1, 1]), 4), 1);
        assert_eq!(s_value(&p(&[2, 1, 1]), 3), 0);
        assert_eq!(s_value(&Partition::empty(), 3), 0);
        // the last part counts as a drop to zero
        assert_eq!(s_value(&p(&[5, 4]), 3), 2);
        assert_eq!(t_value(&p(&[1, 1, 1, 1]), 3), 1);
        assert_eq!(t_value(&p(&[3, 2, 1]), 3), 0);
    }

    #[test]
    fn s_operator_examples() {
        assert_eq!(
            s_operator(&p(&[9, 5, 2, 1, 1, 1, 1, 1]), 3).unwrap(),
            p(&[7, 3, 1, 1, 1, 1, 1])
        );
        assert_eq!(
            s_operator(&p(&[11, 2, 2, 1, 1, 1, 1, 1]), 4).unwrap(),
            p(&[8, 2, 1, 1, 1, 1, 1])
        );
        let restricted = p(&[2, 1, 1]);
        assert!(is_l_partition(&restricted, 3));
        assert_eq!(
            s_operator(&restricted, 3).unwrap(),
            restricted.remove_first_row()
        );
        assert!(matches!(
            s_operator(&p(&[5, 2, 1, 1, 1, 1]), 6),
            Err(Error::NotLPartition { e: 6, .. })
        ));
    }
}
