use std::collections::BTreeSet;

use super::SigmaFamily;

/// Which of the two pointwise conditions held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    First,
    Second,
    Both,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchWitness {
    pub i: usize,
    pub k: usize,
    pub point: u32,
    pub branch: Branch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrSigVerdict {
    pub holds: bool,
    pub witnesses: Vec<BranchWitness>,
}

impl GrSigVerdict {
    pub fn failures(&self) -> impl Iterator<Item = &BranchWitness> {
        self.witnesses.iter().filter(|w| w.branch == Branch::Neither)
    }
}

/// For every pair `i < k` and point `j`:
/// (1) `σ_k(j) = σ_i(j)` and `σ_iσ_k(j) = σ_kσ_i(j)`, or
/// (2) `σ_k(j) = σ_kσ_i(j)` and `σ_i(j) = σ_iσ_k(j)`.
pub fn grsig_check(fam: &SigmaFamily) -> GrSigVerdict {
    let mut witnesses = Vec::new();
    for i in 0..fam.m() {
        for k in i + 1..fam.m() {
            for j in 0..fam.n() as u32 {
                let (si, sk) = (fam.apply(i, j), fam.apply(k, j));
                let (sisk, sksi) = (fam.apply(i, sk), fam.apply(k, si));
                let first = sk == si && sisk == sksi;
                let second = sk == sksi && si == sisk;
                let branch = match (first, second) {
                    (true, true) => Branch::Both,
                    (true, false) => Branch::First,
                    (false, true) => Branch::Second,
                    (false, false) => Branch::Neither,
                };
                witnesses.push(BranchWitness { i, k, point: j, branch });
            }
        }
    }
    let holds = witnesses.iter().all(|w| w.branch != Branch::Neither);
    GrSigVerdict { holds, witnesses }
}

/// `{σ_i(j), σ_l(σ_i(j))} = {σ_i(σ_l(j)), σ_l(j)}` as sets, for all `j`
/// and `i < l`.
pub fn pair_set_condition(fam: &SigmaFamily) -> bool {
    (0..fam.m()).all(|i| {
        (i + 1..fam.m()).all(|l| {
            (0..fam.n() as u32).all(|j| {
                let si = fam.apply(i, j);
                let sl = fam.apply(l, j);
                let lhs: BTreeSet<u32> = [si, fam.apply(l, si)].into();
                let rhs: BTreeSet<u32> = [fam.apply(i, sl), sl].into();
                lhs == rhs
            })
        })
    })
}
