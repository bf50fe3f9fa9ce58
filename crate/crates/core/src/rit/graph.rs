use super::SigmaFamily;
use crate::error::{Error, Result};

/// Largest point set accepted by [`canonical_form`] (it scans all `n!`
/// relabelings).
pub const MAX_CANONICAL_POINTS: usize = 8;

/// One functional digraph per color on the vertex set `{0..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    edges: Vec<Vec<u32>>,
}

impl ColoredGraph {
    pub fn from_family(fam: &SigmaFamily) -> Self {
        ColoredGraph { n: fam.n(), edges: fam.tables().to_vec() }
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> usize {
        self.edges.len()
    }

    pub fn target(&self, color: usize, v: u32) -> u32 {
        self.edges[color][v as usize]
    }

    /// Isomorphism invariant of a single color; equal codes iff the
    /// functional digraphs are isomorphic.
    pub fn color_code(&self, color: usize) -> String {
        functional_code(&self.edges[color])
    }
}

fn functional_code(f: &[u32]) -> String {
    let n = f.len();
    let mut indeg = vec![0usize; n];
    for &t in f {
        indeg[t as usize] += 1;
    }
    let mut on_cycle = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    while let Some(v) = stack.pop() {
        on_cycle[v] = false;
        let t = f[v] as usize;
        indeg[t] -= 1;
        if indeg[t] == 0 {
            stack.push(t);
        }
    }
    let mut children = vec![Vec::new(); n];
    for v in 0..n {
        if !on_cycle[v] {
            children[f[v] as usize].push(v);
        }
    }
    fn tree(v: usize, children: &[Vec<usize>]) -> String {
        let mut codes: Vec<String> = children[v].iter().map(|&c| tree(c, children)).collect();
        codes.sort();
        format!("({})", codes.concat())
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if !on_cycle[start] || seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(tree(v, &children));
            v = f[v] as usize;
        }
        let best = (0..cycle.len())
            .map(|r| {
                let mut rot = cycle[r..].to_vec();
                rot.extend_from_slice(&cycle[..r]);
                rot.concat()
            })
            .min()
            .unwrap();
        components.push(format!("[{best}]"));
    }
    components.sort();
    components.concat()
}

/// Glues every pair that is a 2-cycle of both maps, then compares the two
/// quotient digraphs up to isomorphism.
pub fn two_isomorphic(sa: &[u32], sb: &[u32]) -> Result<bool> {
    let n = sa.len();
    if sb.len() != n || sa.iter().chain(sb).any(|&v| v as usize >= n) {
        return Err(Error::InvalidFamily("maps must share the point set".into()));
    }
    let mut rep: Vec<u32> = (0..n as u32).collect();
    for v in 0..n {
        let w = sa[v] as usize;
        if w > v && sa[w] as usize == v && sb[v] as usize == w && sb[w] as usize == v {
            rep[w] = v as u32;
        }
    }
    let mut index = vec![u32::MAX; n];
    let mut next = 0u32;
    for v in 0..n {
        if rep[v] as usize == v {
            index[v] = next;
            next += 1;
        }
    }
    let quotient = |s: &[u32]| -> Vec<u32> {
        let mut q = vec![0u32; next as usize];
        for v in 0..n {
            q[index[rep[v] as usize] as usize] = index[rep[s[v] as usize] as usize];
        }
        q
    };
    Ok(functional_code(&quotient(sa)) == functional_code(&quotient(sb)))
}

fn next_permutation(p: &mut [u32]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Smallest relabeled family over all vertex permutations and color
/// orders. Colors are reordered by sorting the relabeled tables, which is
/// the minimum over color permutations.
pub fn canonical_form(fam: &SigmaFamily) -> Result<SigmaFamily> {
    let n = fam.n();
    if n > MAX_CANONICAL_POINTS {
        return Err(Error::SizeBound {
            what: "points for canonical form",
            actual: n as u128,
            limit: MAX_CANONICAL_POINTS as u128,
        });
    }
    let mut perm: Vec<u32> = (0..n as u32).collect();
    let mut best: Option<Vec<Vec<u32>>> = None;
    let mut scratch = vec![vec![0u32; n]; fam.m()];
    loop {
        for (dst, src) in scratch.iter_mut().zip(fam.tables()) {
            for (j, &v) in src.iter().enumerate() {
                dst[perm[j] as usize] = perm[v as usize];
            }
        }
        let mut candidate = scratch.clone();
        candidate.sort();
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    SigmaFamily::new(n, best.unwrap_or_default())
}
