use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{Alphabet, Coefficient, Field, Word};
use crate::error::{Error, Result};

/// The free associative algebra k<X>: an alphabet together with a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeAlgebra {
    pub alphabet: Alphabet,
    pub field: Field,
}

impl FreeAlgebra {
    pub fn new(alphabet: Alphabet, field: Field) -> Arc<Self> {
        Arc::new(FreeAlgebra { alphabet, field })
    }

    pub fn generators(&self) -> usize {
        self.alphabet.len()
    }
}

/// A noncommutative polynomial with no zero terms stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<FreeAlgebra>,
    terms: BTreeMap<Word, Coefficient>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<FreeAlgebra>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(ring: &Arc<FreeAlgebra>, word: Word, coeff: Coefficient) -> Result<Self> {
        Self::from_terms(ring, [(word, coeff)])
    }

    /// Builds a normalized polynomial: equal words are combined and zero
    /// coefficients dropped.
    pub fn from_terms<I>(ring: &Arc<FreeAlgebra>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Coefficient)>,
    {
        let mut p = Self::zero(ring);
        for (w, c) in terms {
            ring.alphabet.validate(&w)?;
            if !ring.field.contains(&c) {
                return Err(Error::Mismatch);
            }
            p.add_term(w, &c);
        }
        Ok(p)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms<I>(ring: &Arc<FreeAlgebra>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Vec<u32>)>,
    {
        let f = ring.field;
        Self::from_terms(
            ring,
            terms.into_iter().map(|(c, w)| (Word::new(w), f.from_i64(c))),
        )
    }

    pub fn ring(&self) -> &Arc<FreeAlgebra> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing degree-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &Word) -> Option<&Coefficient> {
        self.terms.get(word)
    }

    pub(crate) fn add_term(&mut self, word: Word, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Word, Coefficient)> {
        self.terms.pop_last()
    }

    /// The degree-lexicographically largest word and its coefficient.
    pub fn leading_term(&self) -> Result<(&Word, &Coefficient)> {
        self.terms.last_key_value().ok_or(Error::ZeroPolynomial)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::degree)
    }

    /// The common degree of all terms, if the polynomial is nonzero and
    /// homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let lo = self.terms.keys().next()?.degree();
        let hi = self.terms.keys().next_back()?.degree();
        (lo == hi).then_some(lo)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::Mismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-&self.ring.field.one())
    }

    /// Multiplies every coefficient by `c` (which must lie in the same field).
    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        let mut out = Self::zero(&self.ring);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect();
        out
    }

    /// `left · self · right` for words `left`, `right`.
    pub fn wrap(&self, left: &[u32], right: &[u32]) -> Polynomial {
        let mut out = Self::zero(&self.ring);
        out.terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.wrap(left, right), c.clone()))
            .collect();
        out
    }

    /// Concatenation product in the free algebra.
    pub fn product(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), &(a * b));
            }
        }
        Ok(out)
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Result<Polynomial> {
        let (_, c) = self.leading_term()?;
        let inv = c.inv().expect("nonzero leading coefficient");
        Ok(self.scale(&inv))
    }

    pub fn display(&self) -> String {
        render(&self.ring.alphabet, self.terms.iter().rev())
    }
}

fn render<'a>(alphabet: &Alphabet, terms: impl Iterator<Item = (&'a Word, &'a Coefficient)>) -> String {
    let mut out = String::new();
    for (i, (w, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let mag = if neg { (-c).to_string() } else { c.to_string() };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let word = alphabet.render(w);
        if c.is_one() || (neg && (-c).is_one()) {
            out.push_str(&word);
        } else if w.is_empty() {
            out.push_str(&mag);
        } else {
            out.push_str(&format!("{mag}{word}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Free-algebra product; see [`Polynomial::product`].
pub fn poly_product(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    p.product(q)
}
