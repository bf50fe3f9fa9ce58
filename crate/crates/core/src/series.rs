//! Truncated integer power series and Hilbert series by normal-word counting.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{Presentation, Word};
use crate::error::{Error, Result};
use crate::rewriting::{complete_to_degree, RewriteSystem};

/// Coefficients `c_0..=c_D` of a power series truncated after degree `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates so that exactly `degree + 1` coefficients
    /// are kept.
    pub fn new<I, T>(coeffs: I, degree: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut c: Vec<BigInt> = coeffs.into_iter().take(degree + 1).map(Into::into).collect();
        c.resize(degree + 1, BigInt::zero());
        TruncatedSeries { coeffs: c }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(Vec::<i64>::new(), degree)
    }

    pub fn one(degree: usize) -> Self {
        Self::new([1], degree)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &TruncatedSeries) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a >= b)
    }

    fn check(&self, other: &TruncatedSeries) -> Result<()> {
        if self.degree() == other.degree() {
            Ok(())
        } else {
            Err(Error::TruncationMismatch(self.degree(), other.degree()))
        }
    }

    /// Cauchy product truncated at the common degree.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check(other)?;
        let d = self.degree();
        let mut out = vec![BigInt::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Inverse of a series with constant term 1, by
    /// `b_k = -sum_{i=1..k} a_i b_{k-i}`.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant);
        }
        let d = self.degree();
        let mut b = vec![BigInt::zero(); d + 1];
        b[0] = BigInt::one();
        for k in 1..=d {
            let mut s = BigInt::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &b[k - i];
            }
            b[k] = -s;
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Keeps coefficients while every coefficient so far is nonnegative and
    /// zeroes everything from the first negative one on.
    pub fn positive_part(&self) -> TruncatedSeries {
        let mut out = self.clone();
        if let Some(first_neg) = self.coeffs.iter().position(Signed::is_negative) {
            for c in &mut out.coeffs[first_neg..] {
                *c = BigInt::zero();
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn series_mul(f: &TruncatedSeries, g: &TruncatedSeries) -> Result<TruncatedSeries> {
    f.mul(g)
}

pub fn series_inverse(f: &TruncatedSeries) -> Result<TruncatedSeries> {
    f.inverse()
}

pub fn positive_part(f: &TruncatedSeries) -> TruncatedSeries {
    f.positive_part()
}

/// `|(1 - n t + n(n-1)/2 t^2)^{-1}|` truncated at `degree`.
pub fn anick_bound(n: usize, degree: usize) -> Result<TruncatedSeries> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("anick bound needs n >= 2, got {n}")));
    }
    let n = BigInt::from(n);
    let r = &n * (&n - 1) / 2;
    let denom = TruncatedSeries::new([BigInt::one(), -n, r], degree);
    Ok(denom.inverse()?.positive_part())
}

/// Hilbert series of the polynomial ring in `d` variables:
/// coefficient `C(k + d - 1, d - 1)` at degree `k`.
pub fn pbw_series(d: usize, degree: usize) -> Result<TruncatedSeries> {
    if d == 0 {
        return Err(Error::InvalidArgument("pbw series needs d >= 1".into()));
    }
    let mut c = Vec::with_capacity(degree + 1);
    let mut cur = BigInt::one();
    for k in 0..=degree {
        c.push(cur.clone());
        // C(k+d, d-1) = C(k+d-1, d-1) * (k+d) / (k+1)
        cur = cur * BigInt::from(k + d) / BigInt::from(k + 1);
    }
    Ok(TruncatedSeries { coeffs: c })
}

/// Trie of obstruction prefixes with failure links, completed to a full
/// transition table over `g` letters. Dead states are those whose label
/// ends with an obstruction.
struct ForbiddenAutomaton {
    next: Vec<Vec<usize>>,
    dead: Vec<bool>,
}

impl ForbiddenAutomaton {
    fn build(obstructions: &[Word], g: usize) -> Self {
        let mut next: Vec<Vec<Option<usize>>> = vec![vec![None; g]];
        let mut dead = vec![false];
        for w in obstructions {
            let mut s = 0;
            for &l in w.letters() {
                s = match next[s][l as usize] {
                    Some(t) => t,
                    None => {
                        next.push(vec![None; g]);
                        dead.push(false);
                        let t = next.len() - 1;
                        next[s][l as usize] = Some(t);
                        t
                    }
                };
            }
            dead[s] = true;
        }

        let mut delta = vec![vec![0usize; g]; next.len()];
        let mut fail = vec![0usize; next.len()];
        let mut queue = VecDeque::new();
        for a in 0..g {
            match next[0][a] {
                Some(t) => {
                    delta[0][a] = t;
                    queue.push_back(t);
                }
                None => delta[0][a] = 0,
            }
        }
        while let Some(s) = queue.pop_front() {
            dead[s] = dead[s] || dead[fail[s]];
            for a in 0..g {
                match next[s][a] {
                    Some(t) => {
                        fail[t] = delta[fail[s]][a];
                        delta[s][a] = t;
                        queue.push_back(t);
                    }
                    None => delta[s][a] = delta[fail[s]][a],
                }
            }
        }
        ForbiddenAutomaton { next: delta, dead }
    }
}

/// Number of words of each degree over `g` letters that avoid every
/// obstruction as a factor. The obstructions must be pairwise incomparable
/// under factor containment.
pub fn count_normal_words(obstructions: &[Word], g: usize, degree: usize) -> Result<TruncatedSeries> {
    for (i, a) in obstructions.iter().enumerate() {
        if let Some(&bad) = a.letters().iter().find(|&&l| l as usize >= g) {
            return Err(Error::LetterOutOfRange { index: bad as usize, size: g });
        }
        for b in &obstructions[i + 1..] {
            if a.contains(b) || b.contains(a) {
                return Err(Error::ComparableObstructions(a.to_string(), b.to_string()));
            }
        }
    }
    let auto = ForbiddenAutomaton::build(obstructions, g);
    let states = auto.next.len();
    let mut counts = vec![BigInt::zero(); states];
    counts[0] = BigInt::one();
    let mut series = Vec::with_capacity(degree + 1);
    if auto.dead[0] {
        // the empty word itself is an obstruction
        return Ok(TruncatedSeries::zero(degree));
    }
    series.push(BigInt::one());
    for _ in 1..=degree {
        let mut nxt = vec![BigInt::zero(); states];
        for (s, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &t in &auto.next[s] {
                if !auto.dead[t] {
                    nxt[t] += c;
                }
            }
        }
        series.push(nxt.iter().sum());
        counts = nxt;
    }
    Ok(TruncatedSeries { coeffs: series })
}

/// Graded dimensions up to `degree` from a completed rewriting system.
#[derive(Clone, Debug)]
pub struct HilbertComputation {
    pub series: TruncatedSeries,
    pub certified: bool,
    pub system: RewriteSystem,
}

/// Completes the presentation to `degree` and counts normal words.
pub fn hilbert_of_presentation(pres: &Presentation, degree: usize) -> Result<HilbertComputation> {
    pres.require_quadratic()?;
    let completion = complete_to_degree(pres, degree.max(2))?;
    let system = completion.system;
    let obstructions = system.obstructions();
    let series = count_normal_words(&obstructions, pres.generators(), degree)?;
    Ok(HilbertComputation {
        certified: system.certified_to() >= degree,
        series,
        system,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::new(v.iter().copied(), v.len() - 1)
    }

    fn ints(t: &TruncatedSeries) -> Vec<i64> {
        t.to_i64s().unwrap()
    }

    #[test]
    fn multiplication() {
        // (1 + t + t^2) * (1-t)^{-3}, the latter from binomials 1,3,6,10,15
        let f = s(&[1, 1, 1, 0, 0]);
        let g = s(&[1, 3, 6, 10, 15]);
        assert_eq!(ints(&series_mul(&f, &g).unwrap()), vec![1, 4, 10, 19, 31]);
        assert_eq!(series_mul(&f, &TruncatedSeries::one(4)).unwrap(), f);
        assert_eq!(series_mul(&f, &TruncatedSeries::zero(4)).unwrap(), TruncatedSeries::zero(4));
        assert_eq!(
            series_mul(&f, &TruncatedSeries::one(3)),
            Err(Error::TruncationMismatch(4, 3))
        );
    }

    /// c_k = n c_{k-1} - n(n-1)/2 c_{k-2}, written out independently.
    fn recurrence(n: i64, d: usize) -> Vec<i64> {
        let r = n * (n - 1) / 2;
        let mut c = vec![1i64, n];
        while c.len() <= d {
            let k = c.len();
            c.push(n * c[k - 1] - r * c[k - 2]);
        }
        c.truncate(d + 1);
        c
    }

    #[test]
    fn inversion() {
        assert_eq!(ints(&series_inverse(&s(&[1, -1, 0, 0, 0])).unwrap()), vec![1; 5]);
        assert_eq!(recurrence(3, 6), vec![1, 3, 6, 9, 9, 0, -27]);
        assert_eq!(ints(&series_inverse(&s(&[1, -3, 3, 0, 0, 0, 0])).unwrap()), recurrence(3, 6));
        assert_eq!(recurrence(4, 5), vec![1, 4, 10, 16, 4, -80]);
        assert_eq!(ints(&series_inverse(&s(&[1, -4, 6, 0, 0, 0])).unwrap()), recurrence(4, 5));
        assert_eq!(series_inverse(&s(&[2, 1])), Err(Error::NonUnitConstant));
    }

    #[test]
    fn positive_parts() {
        assert_eq!(ints(&positive_part(&s(&[1, 3, 6, 9, 9, 0, -27]))), vec![1, 3, 6, 9, 9, 0, 0]);
        assert_eq!(ints(&positive_part(&s(&[1, 2, 0, 5]))), vec![1, 2, 0, 5]);
        assert_eq!(ints(&positive_part(&s(&[1, -1, 5]))), vec![1, 0, 0]);
    }

    #[test]
    fn anick_bounds() {
        assert_eq!(ints(&anick_bound(3, 6).unwrap()), vec![1, 3, 6, 9, 9, 0, 0]);
        assert_eq!(recurrence(7, 4), vec![1, 7, 28, 49, -245]);
        assert_eq!(ints(&anick_bound(7, 4).unwrap()), vec![1, 7, 28, 49, 0]);
        assert_eq!(ints(&anick_bound(4, 5).unwrap()), vec![1, 4, 10, 16, 4, 0]);
        assert!(anick_bound(1, 3).is_err());
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }

    #[test]
    fn pbw() {
        assert_eq!(ints(&pbw_series(4, 4).unwrap()), vec![1, 4, 10, 20, 35]);
        assert_eq!(ints(&pbw_series(1, 3).unwrap()), vec![1, 1, 1, 1]);
        assert_eq!(ints(&pbw_series(2, 3).unwrap()), vec![1, 2, 3, 4]);
        for d in 1..=6u64 {
            let got = ints(&pbw_series(d as usize, 10).unwrap());
            let want: Vec<i64> = (0..=10).map(|k| binomial(k + d - 1, d - 1) as i64).collect();
            assert_eq!(got, want);
        }
    }

    /// Direct enumeration of all words; the oracle for the automaton.
    fn brute_count(obs: &[Word], g: usize, d: usize) -> Vec<i64> {
        (0..=d)
            .map(|k| {
                Word::all_of_degree(g, k)
                    .filter(|w| !obs.iter().any(|o| w.contains(o)))
                    .count() as i64
            })
            .collect()
    }

    #[test]
    fn normal_word_counts() {
        let xy = vec![Word::new(vec![1, 0])];
        assert_eq!(brute_count(&xy, 2, 4), vec![1, 2, 3, 4, 5]);
        assert_eq!(ints(&count_normal_words(&xy, 2, 4).unwrap()), vec![1, 2, 3, 4, 5]);
        assert_eq!(ints(&count_normal_words(&[], 2, 3).unwrap()), vec![1, 2, 4, 8]);
        let all: Vec<Word> = Word::all_of_degree(2, 2).collect();
        assert_eq!(ints(&count_normal_words(&all, 2, 3).unwrap()), vec![1, 2, 0, 0]);
    }

    #[test]
    fn comparable_obstructions_rejected() {
        let obs = vec![Word::new(vec![0, 1]), Word::new(vec![1, 0, 1])];
        assert!(matches!(
            count_normal_words(&obs, 2, 3),
            Err(Error::ComparableObstructions(_, _))
        ));
    }

    fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
        (0usize..10).prop_flat_map(|d| {
            prop::collection::vec(-50i64..50, d).prop_map(move |tail| {
                let mut v = vec![1i64];
                v.extend(tail);
                TruncatedSeries::new(v, d)
            })
        })
    }

    fn obstruction_sets() -> impl Strategy<Value = (usize, Vec<Word>)> {
        (1usize..4).prop_flat_map(|g| {
            (
                Just(g),
                prop::collection::vec(prop::collection::vec(0u32..g as u32, 1..4), 0..5),
            )
        })
        .prop_map(|(g, raw)| {
            let mut obs: Vec<Word> = Vec::new();
            for w in raw.into_iter().map(Word::new) {
                if !obs.iter().any(|o| o.contains(&w) || w.contains(o)) {
                    obs.push(w);
                }
            }
            (g, obs)
        })
    }

    proptest! {
        #[test]
        fn inverse_is_inverse(f in unit_series()) {
            let inv = f.inverse().unwrap();
            prop_assert_eq!(f.mul(&inv).unwrap(), TruncatedSeries::one(f.degree()));
        }

        #[test]
        fn positive_part_idempotent_and_prefix_preserving(v in prop::collection::vec(-20i64..20, 1..10)) {
            let f = s(&v);
            let p = f.positive_part();
            prop_assert_eq!(p.positive_part(), p.clone());
            let cut = v.iter().position(|&c| c < 0).unwrap_or(v.len());
            prop_assert_eq!(&p.coeffs()[..cut], &f.coeffs()[..cut]);
            prop_assert!(p.coeffs()[cut..].iter().all(Zero::is_zero));
        }

        #[test]
        fn automaton_matches_enumeration((g, obs) in obstruction_sets(), d in 0usize..6) {
            let got = ints(&count_normal_words(&obs, g, d).unwrap());
            prop_assert_eq!(got, brute_count(&obs, g, d));
        }

        #[test]
        fn empty_obstructions_give_powers(g in 1usize..5, d in 0usize..8) {
            let got = ints(&count_normal_words(&[], g, d).unwrap());
            let want: Vec<i64> = (0..=d as u32).map(|k| (g as i64).pow(k)).collect();
            prop_assert_eq!(got, want);
        }
    }
}
