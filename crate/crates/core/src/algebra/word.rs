use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Generator labels in ascending order: position is rank, later is greater.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlphabet("empty generator label".into()));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidAlphabet(format!("duplicate label {name:?}")));
            }
        }
        Ok(Alphabet { names })
    }

    /// `prefix1, prefix2, ..., prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, index: u32) -> &str {
        &self.names[index as usize]
    }

    pub fn index_of(&self, label: &str) -> Option<u32> {
        self.names.iter().position(|n| n == label).map(|i| i as u32)
    }

    pub fn validate(&self, word: &Word) -> Result<()> {
        match word.letters().iter().find(|&&l| l as usize >= self.len()) {
            Some(&l) => Err(Error::LetterOutOfRange {
                index: l as usize,
                size: self.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn parse_word<S: AsRef<str>>(&self, labels: &[S]) -> Result<Word> {
        labels
            .iter()
            .map(|s| {
                self.index_of(s.as_ref())
                    .ok_or_else(|| Error::UnknownGenerator(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    /// Renders a word by juxtaposing labels; multi-character labels are
    /// separated by `*`.
    pub fn render(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let short = self.names.iter().all(|n| n.chars().count() == 1);
        let sep = if short { "" } else { "*" };
        word.letters()
            .iter()
            .map(|&l| self.label(l))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

/// A word in the free semigroup; letters are generator ranks.
///
/// `Ord` is the degree-lexicographic order: shorter words are smaller and
/// words of equal length compare left to right by generator rank.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: u32) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left · self · right`
    pub fn wrap(&self, left: &[u32], right: &[u32]) -> Word {
        let mut v = Vec::with_capacity(left.len() + self.len() + right.len());
        v.extend_from_slice(left);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(right);
        Word(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// Position of the leftmost occurrence of `pattern`.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        if pattern.len() > self.len() {
            return None;
        }
        if pattern.is_empty() {
            return Some(0);
        }
        self.0.windows(pattern.len()).position(|w| w == pattern.letters())
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        self.find(pattern).is_some()
    }

    /// All words of length `degree` over `g` letters, in increasing order.
    pub fn all_of_degree(g: usize, degree: usize) -> impl Iterator<Item = Word> {
        let total = (g as u128).pow(degree as u32);
        (0..total).map(move |mut code| {
            let mut v = vec![0u32; degree];
            for slot in v.iter_mut().rev() {
                *slot = (code % g as u128) as u32;
                code /= g as u128;
            }
            Word(v)
        })
    }

    /// Base-`g` rank of the word among words of its length.
    pub fn rank_in_degree(&self, g: usize) -> usize {
        self.0.iter().fold(0usize, |acc, &l| acc * g + l as usize)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Degree-lexicographic comparison of two words over `alphabet`.
pub fn compare_deglex(w1: &Word, w2: &Word, alphabet: &Alphabet) -> Result<Ordering> {
    alphabet.validate(w1)?;
    alphabet.validate(w2)?;
    Ok(w1.cmp(w2))
}
