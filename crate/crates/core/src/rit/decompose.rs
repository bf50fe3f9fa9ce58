use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A block of `P`: both maps are constant on it, with the given targets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub points: Vec<u32>,
    pub targets: (u32, u32),
}

/// The subsets attached to a pair of maps `(σ_a, σ_b)`, and whether they
/// have the shape required for a maximal series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub y0: Vec<u32>,
    pub ytilde0: Vec<u32>,
    pub p: Vec<u32>,
    pub z: Vec<u32>,
    pub pairs: Vec<(u32, u32)>,
    pub blocks: Vec<Block>,
    pub valid: bool,
    /// First violated condition when `valid` is false.
    pub reason: Option<String>,
}

pub fn decompose_pair(sa: &[u32], sb: &[u32]) -> Result<Decomposition> {
    let n = sa.len();
    if sb.len() != n || sa.iter().chain(sb).any(|&v| v as usize >= n) {
        return Err(Error::InvalidFamily("maps must share the point set".into()));
    }
    let a = |j: u32| sa[j as usize];
    let b = |j: u32| sb[j as usize];
    let points = 0..n as u32;

    let y0: BTreeSet<u32> = points.clone().filter(|&j| a(j) == b(j)).collect();
    let ytilde0: BTreeSet<u32> = points.clone().filter(|&j| y0.contains(&j) || y0.contains(&a(j))).collect();
    let p: BTreeSet<u32> = points.clone().filter(|j| !ytilde0.contains(j)).collect();
    let w: Vec<u32> = ytilde0.difference(&y0).copied().collect();
    let hit: BTreeSet<u32> = w.iter().flat_map(|&j| [a(j), b(j)]).collect();
    let z: BTreeSet<u32> = y0.difference(&hit).copied().collect();

    let mut reason = None;
    let mut fail = |why: String| {
        if reason.is_none() {
            reason = Some(why);
        }
    };

    let mut blocks: Vec<Block> = Vec::new();
    for &j in &p {
        if a(b(j)) != a(j) || b(a(j)) != b(j) {
            fail(format!("point {} of P is not absorbed by the maps", j + 1));
        }
        match blocks.iter_mut().find(|blk| blk.targets.0 == a(j)) {
            Some(blk) => {
                if blk.targets.1 != b(j) {
                    fail(format!("point {} of P splits a block", j + 1));
                }
                blk.points.push(j);
            }
            None => blocks.push(Block { points: vec![j], targets: (a(j), b(j)) }),
        }
    }
    for blk in &blocks {
        if !blk.points.contains(&blk.targets.0) || !blk.points.contains(&blk.targets.1) {
            fail(format!("block containing {} has targets outside it", blk.points[0] + 1));
        }
    }

    let mut pairs = Vec::new();
    let mut used = BTreeSet::new();
    for &j in y0.difference(&z) {
        if used.contains(&j) {
            continue;
        }
        let partner = a(j);
        if partner == j || z.contains(&partner) || !y0.contains(&partner) || a(partner) != j {
            fail(format!("point {} is not exchanged with a partner", j + 1));
            continue;
        }
        used.insert(j);
        used.insert(partner);
        pairs.push((j, partner));
    }
    for &j in &w {
        let landing = (a(j).min(b(j)), a(j).max(b(j)));
        if !pairs.contains(&landing) {
            fail(format!("point {} does not land on an exchanged pair", j + 1));
        }
    }
    for &j in &z {
        if !y0.contains(&a(j)) {
            fail(format!("point {} of Z leaves Y0", j + 1));
        }
    }

    Ok(Decomposition {
        y0: y0.into_iter().collect(),
        ytilde0: ytilde0.into_iter().collect(),
        p: p.into_iter().collect(),
        z: z.into_iter().collect(),
        pairs,
        blocks,
        valid: reason.is_none(),
        reason,
    })
}
