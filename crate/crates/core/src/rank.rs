//! Graded dimensions from ranks of shift matrices over a prime field, random
//! presentations and the Anick attainment experiment.
//!
//! The degree-`d` component of the ideal is spanned by the shifts `u p_i v`
//! with `deg u + deg v = d - 2`; its dimension is the rank of their
//! coefficient matrix in the word basis, and `dim A_d = g^d - rank`.
//! Ranks are computed over F_p only. A rank that is maximal over F_p is
//! maximal over the integers and hence over any field of characteristic
//! zero, so attaining the lower bound mod p certifies attainment in
//! characteristic zero.

use num_traits::{PrimInt, WrappingAdd, WrappingMul};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::coeff::inverse_mod;
use crate::algebra::{Alphabet, Field, FreeAlgebra, Polynomial, Presentation, Word};
use crate::error::{Error, Result};
use crate::series::{anick_bound, TruncatedSeries};

/// Largest shift matrix (rows * columns) we are willing to allocate.
pub const MAX_MATRIX_ENTRIES: u128 = 60_000_000;

/// Dense matrix over F_p with entries in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    prime: u32,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize, prime: u32) -> Self {
        FpMatrix { rows, cols, prime, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>], cols: usize, prime: u32) -> Self {
        let mut m = Self::zeros(rows.len(), cols, prime);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v.rem_euclid(prime as i64) as u32);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.prime);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if self.prime < 1 << 16 {
            let mut work = self.data.clone();
            eliminate::<u32>(&mut work, self.rows, self.cols, self.prime)
        } else {
            let mut work: Vec<u64> = self.data.iter().map(|&v| v as u64).collect();
            eliminate::<u64>(&mut work, self.rows, self.cols, self.prime)
        }
    }
}

// Non-pivot rows accumulate `f * pivot` without reduction until the lane
// type could overflow; only the entry in the current pivot column is ever
// read, and it is reduced on read. Pivot rows are fully reduced and
// normalized before use.
fn eliminate<T>(m: &mut [T], rows: usize, cols: usize, prime: u32) -> usize
where
    T: PrimInt + WrappingAdd + WrappingMul + From<u32>,
{
    let p = <T as From<u32>>::from(prime);
    let pm1 = (prime - 1) as u128;
    let lane_max = T::max_value().to_u128().expect("unsigned lane");
    let budget = ((lane_max - pm1) / (pm1 * pm1)) as u64;
    let mut pending = vec![0u64; rows];
    let mut rank = 0;

    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| m[r * cols + c] % p != T::zero()) else {
            continue;
        };
        if pr != rank {
            for j in c..cols {
                m.swap(pr * cols + j, rank * cols + j);
            }
            pending.swap(pr, rank);
        }
        let (head, tail) = m.split_at_mut((rank + 1) * cols);
        let piv = &mut head[rank * cols..];
        for v in &mut piv[c..] {
            *v = *v % p;
        }
        let lead = piv[c].to_u32().unwrap();
        let inv = <T as From<u32>>::from(inverse_mod(lead, prime));
        for v in &mut piv[c..] {
            *v = (*v * inv) % p;
        }
        let piv = &piv[c + 1..];
        for (k, row) in tail.chunks_exact_mut(cols).enumerate() {
            let v = row[c] % p;
            if v == T::zero() {
                continue;
            }
            let r = rank + 1 + k;
            if pending[r] >= budget {
                for x in &mut row[c + 1..] {
                    *x = *x % p;
                }
                pending[r] = 0;
            }
            let f = p - v;
            row[c] = T::zero();
            for (x, &y) in row[c + 1..].iter_mut().zip(piv) {
                *x = x.wrapping_add(&f.wrapping_mul(&y));
            }
            pending[r] += 1;
        }
        rank += 1;
    }
    rank
}

/// Row label `(relation, u, v)` for the shift `u p_relation v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowLabel {
    pub relation: usize,
    pub left: Word,
    pub right: Word,
}

/// Coefficients of all shifts `u p_i v` of total degree `d` in the basis of
/// degree-`d` words (columns in degree-lexicographic order).
#[derive(Clone, Debug)]
pub struct LambdaMatrix {
    pub degree: usize,
    pub generators: usize,
    pub labels: Vec<RowLabel>,
    pub matrix: FpMatrix,
}

fn prime_of(pres: &Presentation) -> Result<u32> {
    match pres.field() {
        Field::Prime(p) => Ok(p),
        Field::Rational => Err(Error::RationalUnsupported("shift-matrix ranks")),
    }
}

fn words_up_to(g: usize, max_degree: usize) -> Vec<Word> {
    (0..=max_degree).flat_map(|k| Word::all_of_degree(g, k)).collect()
}

/// Rows are ordered by relation, then `u`, then `v`, words in
/// degree-lexicographic order.
pub fn build_lambda(pres: &Presentation, d: usize) -> Result<LambdaMatrix> {
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    let p = prime_of(pres)?;
    pres.require_quadratic()?;
    let g = pres.generators();
    let r = pres.relations().len();
    let cols = (g as u128).pow(d as u32);
    let rows = (r as u128) * (d as u128 - 1) * (g as u128).pow(d as u32 - 2);
    if rows * cols > MAX_MATRIX_ENTRIES {
        return Err(Error::SizeBound {
            what: "shift matrix entries",
            actual: rows * cols,
            limit: MAX_MATRIX_ENTRIES,
        });
    }
    let (rows, cols) = (rows as usize, cols as usize);
    let mut matrix = FpMatrix::zeros(rows, cols, p);
    let mut labels = Vec::with_capacity(rows);
    let lefts = words_up_to(g, d - 2);
    for (i, rel) in pres.relations().iter().enumerate() {
        let terms: Vec<(Word, u32)> = rel
            .terms()
            .map(|(w, c)| (w.clone(), c.residue().expect("prime field")))
            .collect();
        for u in &lefts {
            for v in Word::all_of_degree(g, d - 2 - u.len()) {
                let row = labels.len();
                for (w, c) in &terms {
                    let col = w.wrap(u.letters(), v.letters()).rank_in_degree(g);
                    matrix.set(row, col, *c);
                }
                labels.push(RowLabel { relation: i, left: u.clone(), right: v });
            }
        }
    }
    debug_assert_eq!(labels.len(), rows);
    Ok(LambdaMatrix { degree: d, generators: g, labels, matrix })
}

pub fn rank_ff(m: &LambdaMatrix) -> usize {
    m.matrix.rank()
}

/// `dim A_d` for `d <= degree`: `1`, `g`, then `g^d - rank`. Once a degree
/// reaches zero every later degree is zero, since the algebra is generated
/// in degree one.
pub fn graded_dims_by_rank(pres: &Presentation, degree: usize) -> Result<TruncatedSeries> {
    prime_of(pres)?;
    pres.require_quadratic()?;
    let g = pres.generators();
    let mut dims: Vec<u128> = vec![1];
    for d in 1..=degree {
        let prev = *dims.last().unwrap();
        let dim = if prev == 0 {
            0
        } else if d == 1 {
            g as u128
        } else {
            let total = (g as u128).pow(d as u32);
            if pres.relations().is_empty() {
                total
            } else {
                total - rank_ff(&build_lambda(pres, d)?) as u128
            }
        };
        dims.push(dim);
    }
    Ok(TruncatedSeries::new(dims.into_iter().map(num_bigint::BigInt::from), degree))
}

/// `r` quadratic relations on `g` generators `x1..xg`, every coefficient
/// drawn uniformly from F_p. Identical arguments give identical output.
pub fn random_presentation(g: usize, r: usize, prime: u32, seed: u64) -> Result<Presentation> {
    if r == 0 || g == 0 {
        return Err(Error::InvalidArgument("random presentation needs g >= 1 and r >= 1".into()));
    }
    let field = Field::prime(prime)?;
    let ring = FreeAlgebra::new(Alphabet::numbered("x", g)?, field);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<Word> = Word::all_of_degree(g, 2).collect();
    let mut relations = Vec::with_capacity(r);
    while relations.len() < r {
        let terms = words
            .iter()
            .map(|w| (w.clone(), field.from_i64(rng.random_range(0..prime) as i64)));
        let rel = Polynomial::from_terms(&ring, terms)?;
        if !rel.is_zero() {
            relations.push(rel);
        }
    }
    Presentation::new(ring, relations)
}

/// SplitMix64 finalizer applied to `seed + (index + 1) * golden`.
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed.wrapping_add((index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trial {
    pub index: usize,
    pub seed: u64,
    pub dims: TruncatedSeries,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialReport {
    pub n: usize,
    pub degree: usize,
    pub prime: u32,
    pub seed: u64,
    pub bound: TruncatedSeries,
    pub trials: Vec<Trial>,
    pub attained: bool,
    pub first_attaining: Option<usize>,
}

/// Random presentations with `n` generators and `n(n-1)/2` relations,
/// compared against the Anick bound.
#[derive(Clone, Debug)]
pub struct AnickExperiment {
    pub n: usize,
    pub degree: usize,
    pub prime: u32,
    pub trials: usize,
    pub seed: u64,
    /// Keep going after the first attaining trial.
    pub run_all: bool,
}

impl AnickExperiment {
    pub fn run(&self) -> Result<TrialReport> {
        if self.n < 3 {
            return Err(Error::InvalidArgument(format!("anick experiment needs n >= 3, got {}", self.n)));
        }
        let bound = anick_bound(self.n, self.degree)?;
        let r = self.n * (self.n - 1) / 2;
        let mut trials = Vec::new();
        let mut first_attaining = None;
        for index in 0..self.trials {
            let seed = trial_seed(self.seed, index);
            let pres = random_presentation(self.n, r, self.prime, seed)?;
            let dims = graded_dims_by_rank(&pres, self.degree)?;
            if dims == bound && first_attaining.is_none() {
                first_attaining = Some(index);
            }
            trials.push(Trial { index, seed, dims });
            if first_attaining.is_some() && !self.run_all {
                break;
            }
        }
        Ok(TrialReport {
            n: self.n,
            degree: self.degree,
            prime: self.prime,
            seed: self.seed,
            bound,
            trials,
            attained: first_attaining.is_some(),
            first_attaining,
        })
    }
}

/// Runs every trial and records all dimension sequences.
pub fn verify_anick(n: usize, degree: usize, prime: u32, trials: usize, seed: u64) -> Result<TrialReport> {
    AnickExperiment { n, degree, prime, trials, seed, run_all: true }.run()
}
