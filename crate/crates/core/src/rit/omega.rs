use super::SigmaFamily;
use crate::error::{Error, Result};

/// A class on which every map is constant; `targets[k]` is the value of
/// `σ_k` on the whole class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaClass {
    pub points: Vec<u32>,
    pub targets: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaStructure {
    pub n: usize,
    pub m: usize,
    pub classes: Vec<OmegaClass>,
}

/// First `(j, k, point)` with `σ_j(σ_k(point)) != σ_j(point)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaFailure {
    pub j: usize,
    pub k: usize,
    pub point: u32,
}

impl OmegaStructure {
    pub fn rebuild(&self) -> SigmaFamily {
        let mut tables = vec![vec![0u32; self.n]; self.m];
        for class in &self.classes {
            for &p in &class.points {
                for (k, &t) in class.targets.iter().enumerate() {
                    tables[k][p as usize] = t;
                }
            }
        }
        SigmaFamily { n: self.n, tables }
    }
}

/// Succeeds iff `σ_j σ_k = σ_j` for all `j, k`; classes are the fibers of
/// the first map, ordered by their smallest point.
pub fn omega_structure(fam: &SigmaFamily) -> std::result::Result<OmegaStructure, OmegaFailure> {
    let (m, n) = (fam.m(), fam.n());
    for j in 0..m {
        for k in 0..m {
            for p in 0..n as u32 {
                if fam.apply(j, fam.apply(k, p)) != fam.apply(j, p) {
                    return Err(OmegaFailure { j, k, point: p });
                }
            }
        }
    }
    let mut classes: Vec<OmegaClass> = Vec::new();
    for p in 0..n as u32 {
        let targets: Vec<u32> = (0..m).map(|k| fam.apply(k, p)).collect();
        let existing = if m == 0 { None } else { classes.iter_mut().find(|c| c.targets[0] == targets[0]) };
        match existing {
            Some(c) => c.points.push(p),
            None => classes.push(OmegaClass { points: vec![p], targets }),
        }
    }
    Ok(OmegaStructure { n, m, classes })
}

/// `m` pairwise distinct maps with `σ_i σ_j = σ_i`: constant maps for
/// `m <= 3`, otherwise one 3-point track per base-3 digit of the generator
/// index.
pub fn omega_faithful(m: usize) -> Result<SigmaFamily> {
    if m == 0 {
        return Err(Error::InvalidArgument("omega_faithful needs m >= 1".into()));
    }
    if m <= 3 {
        let n = m.max(1);
        let tables = (0..m).map(|i| vec![i as u32; n]).collect();
        return SigmaFamily::new(n, tables);
    }
    let mut d = 0u32;
    while 3usize.pow(d) < m {
        d += 1;
    }
    let n = 3 * d as usize;
    let tables = (0..m)
        .map(|i| {
            (0..n)
                .map(|point| {
                    let track = point / 3;
                    let digit = (i / 3usize.pow(track as u32)) % 3;
                    (3 * track + digit) as u32
                })
                .collect()
        })
        .collect();
    SigmaFamily::new(n, tables)
}
