//! σ-map families and the RIT algebras they define.
//!
//! A family of `m` maps `σ_1..σ_m` on `{1..n}` determines the algebra on
//! `y_1..y_n, x_1..x_m` with commuting `x`'s, commuting `y`'s and
//! `[x_i, y_j] = y_{σ_i(j)} y_j`. Points and colors are 0-indexed in the
//! API and 1-indexed in the text format (`"1,2;1,1"`).
//!
//! Compositions `σ_a σ_b` always mean "apply `σ_b` first".

mod classify;
mod decompose;
mod graph;
mod grsig;
mod omega;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{Alphabet, Field, FreeAlgebra, Polynomial, Presentation, Word};
use crate::error::{Error, Result};

pub use classify::{classify, ClassRow, Classification, MAX_CLASSIFY_FAMILIES};
pub use decompose::{decompose_pair, Block, Decomposition};
pub use graph::{canonical_form, two_isomorphic, ColoredGraph, MAX_CANONICAL_POINTS};
pub use grsig::{grsig_check, pair_set_condition, Branch, BranchWitness, GrSigVerdict};
pub use omega::{omega_faithful, omega_structure, OmegaClass, OmegaFailure, OmegaStructure};

/// `m` function tables on `{0..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SigmaFamily {
    n: usize,
    tables: Vec<Vec<u32>>,
}

impl SigmaFamily {
    pub fn new(n: usize, tables: Vec<Vec<u32>>) -> Result<Self> {
        for (i, t) in tables.iter().enumerate() {
            if t.len() != n {
                return Err(Error::InvalidFamily(format!(
                    "map {} has {} values, expected {n}",
                    i + 1,
                    t.len()
                )));
            }
            if let Some(&v) = t.iter().find(|&&v| v as usize >= n) {
                return Err(Error::InvalidFamily(format!("map {} takes value {} outside 1..{n}", i + 1, v + 1)));
            }
        }
        Ok(SigmaFamily { n, tables })
    }

    /// Tables written 1-indexed, as in `(2, 1, 1)`.
    pub fn from_one_based(tables: &[&[u32]]) -> Result<Self> {
        let n = tables.first().map_or(0, |t| t.len());
        let mut zero = Vec::with_capacity(tables.len());
        for t in tables {
            if t.contains(&0) {
                return Err(Error::InvalidFamily("values are numbered from 1".into()));
            }
            zero.push(t.iter().map(|v| v - 1).collect());
        }
        Self::new(n, zero)
    }

    pub fn m(&self) -> usize {
        self.tables.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tables(&self) -> &[Vec<u32>] {
        &self.tables
    }

    pub fn table(&self, color: usize) -> &[u32] {
        &self.tables[color]
    }

    /// `σ_color(point)`.
    pub fn apply(&self, color: usize, point: u32) -> u32 {
        self.tables[color][point as usize]
    }

    /// All `n^(m n)` families with `m` maps on `n` points, in lexicographic
    /// order of the concatenated tables.
    pub fn enumerate(m: usize, n: usize) -> impl Iterator<Item = SigmaFamily> {
        let cells = m * n;
        let total = (n as u128).pow(cells as u32);
        (0..total).map(move |mut code| {
            let mut flat = vec![0u32; cells];
            for slot in flat.iter_mut().rev() {
                *slot = (code % n as u128) as u32;
                code /= n as u128;
            }
            let tables = if n == 0 { vec![Vec::new(); m] } else { flat.chunks(n).map(<[u32]>::to_vec).collect() };
            SigmaFamily { n, tables }
        })
    }
}

impl fmt::Display for SigmaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let maps: Vec<String> = self
            .tables
            .iter()
            .map(|t| t.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", maps.join(";"))
    }
}

impl FromStr for SigmaFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidFamily("empty map list".into()));
        }
        let mut tables = Vec::new();
        for part in s.split(';') {
            let mut t = Vec::new();
            for v in part.split(',') {
                let v: u32 = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidFamily(format!("bad value {:?} in {s:?}", v.trim())))?;
                if v == 0 {
                    return Err(Error::InvalidFamily("values are numbered from 1".into()));
                }
                t.push(v - 1);
            }
            tables.push(t);
        }
        let n = tables[0].len();
        Self::new(n, tables)
    }
}

/// `y_1..y_n, x_1..x_m` in that (ascending) order.
pub fn rit_alphabet(m: usize, n: usize) -> Result<Alphabet> {
    let names = (1..=n).map(|j| format!("y{j}")).chain((1..=m).map(|i| format!("x{i}")));
    Alphabet::new(names)
}

/// Relations `[x_i,x_j]` and `[y_i,y_j]` for `i > j`, then
/// `x_i y_j - y_j x_i - |y_{σ_i(j)} y_j|` where `|..|` puts the smaller index
/// first.
pub fn rit_presentation(fam: &SigmaFamily, field: Field) -> Result<Presentation> {
    let (m, n) = (fam.m(), fam.n());
    let ring: Arc<FreeAlgebra> = FreeAlgebra::new(rit_alphabet(m, n)?, field);
    let y = |j: usize| j as u32;
    let x = |i: usize| (n + i) as u32;
    let mut relations = Vec::new();
    let commutator = |a: u32, b: u32| Polynomial::from_int_terms(&ring, [(1, vec![a, b]), (-1, vec![b, a])]);
    for i in 0..m {
        for j in 0..i {
            relations.push(commutator(x(i), x(j))?);
        }
    }
    for i in 0..n {
        for j in 0..i {
            relations.push(commutator(y(i), y(j))?);
        }
    }
    for i in 0..m {
        for j in 0..n {
            let f = fam.apply(i, j as u32) as usize;
            let (lo, hi) = (f.min(j), f.max(j));
            let rel = Polynomial::from_int_terms(
                &ring,
                [(1, vec![x(i), y(j)]), (-1, vec![y(j), x(i)]), (-1, vec![y(lo), y(hi)])],
            )?;
            relations.push(rel);
        }
    }
    Presentation::new(ring, relations)
}

/// Leading word `x_i y_j` of the mixed relation for `(i, j)`.
pub fn mixed_lead(fam: &SigmaFamily, color: usize, point: usize) -> Word {
    Word::new(vec![(fam.n() + color) as u32, point as u32])
}
