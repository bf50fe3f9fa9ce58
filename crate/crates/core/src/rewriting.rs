//! Monic rewriting systems over the free algebra: normal forms, ambiguity
//! detection and degree-bounded completion of homogeneous presentations.
//!
//! Rules are kept inter-reduced at all times: no lead word contains another
//! lead word and no tail mentions a lead word. Completion is organized by
//! degree; for homogeneous input a rule born from a degree-`d`
//! superposition is homogeneous of degree `d`, so once every ambiguity of
//! degree at most `d` resolves, the obstructions of degree at most `d` are
//! final.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{Coefficient, FreeAlgebra, Polynomial, Presentation, Word};
use crate::error::{Error, Result};

/// `lead -> tail`; every word of `tail` is smaller than `lead`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lead: Word,
    pub tail: Polynomial,
}

impl RewriteRule {
    /// The relation `lead - tail` this rule encodes.
    pub fn relation(&self) -> Polynomial {
        let one = self.tail.field().one();
        let lead = Polynomial::monomial(self.tail.ring(), self.lead.clone(), one)
            .expect("lead word lies in the rule's alphabet");
        lead.sub(&self.tail).expect("same ring")
    }

    pub fn display(&self) -> String {
        format!(
            "{} -> {}",
            self.tail.ring().alphabet.render(&self.lead),
            self.tail.display()
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AmbiguityKind {
    /// A proper suffix of the first lead is a proper prefix of the second.
    Overlap,
    /// The second lead occurs inside the first.
    Inclusion,
}

/// A word admitting two different rule applications.
///
/// The second rule's lead starts at `offset` inside `word`; the first
/// rule's lead is always a prefix of `word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub first: usize,
    pub second: usize,
    pub offset: usize,
    pub word: Word,
}

impl Ambiguity {
    pub fn degree(&self) -> usize {
        self.word.degree()
    }

    /// Difference of the two one-step reductions of the superposition word.
    pub fn s_polynomial(&self, rs: &RewriteSystem) -> Polynomial {
        let a = &rs.rules[self.first];
        let b = &rs.rules[self.second];
        let w = self.word.letters();
        let via_first = a.tail.wrap(&[], &w[a.lead.len()..]);
        let via_second = b
            .tail
            .wrap(&w[..self.offset], &w[self.offset + b.lead.len()..]);
        via_first.sub(&via_second).expect("same ring")
    }
}

/// One reduction step: `coeff * left * (lead - tail) * right` was subtracted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub coeff: Coefficient,
    pub left: Word,
    pub rule: usize,
    pub right: Word,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    ring: Arc<FreeAlgebra>,
    rules: Vec<RewriteRule>,
    index: HashMap<Vec<u32>, usize>,
    lead_lengths: Vec<usize>,
    degree_bound: usize,
    certified_to: usize,
}

impl PartialEq for RewriteSystem {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.rules == other.rules
            && self.degree_bound == other.degree_bound
            && self.certified_to == other.certified_to
    }
}

impl RewriteSystem {
    pub fn empty(ring: &Arc<FreeAlgebra>) -> Self {
        RewriteSystem {
            ring: ring.clone(),
            rules: Vec::new(),
            index: HashMap::new(),
            lead_lengths: Vec::new(),
            degree_bound: 0,
            certified_to: 0,
        }
    }

    /// Inter-reduced rules for the relations of a homogeneous presentation.
    /// Nothing is certified yet.
    pub fn from_presentation(pres: &Presentation) -> Result<Self> {
        pres.require_homogeneous()?;
        let mut rs = Self::empty(pres.ring());
        for r in pres.relations() {
            rs.insert(r.clone());
        }
        rs.degree_bound = rs.rules.iter().map(|r| r.lead.len()).max().unwrap_or(0);
        Ok(rs)
    }

    pub fn ring(&self) -> &Arc<FreeAlgebra> {
        &self.ring
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn certified_to(&self) -> usize {
        self.certified_to
    }

    /// Lead words, sorted.
    pub fn obstructions(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.rules.iter().map(|r| r.lead.clone()).collect();
        v.sort();
        v
    }

    fn rebuild_index(&mut self) {
        self.index = self
            .rules
            .iter()
            .enumerate()
            .map(|(i, r)| (r.lead.letters().to_vec(), i))
            .collect();
        let mut lens: Vec<usize> = self.rules.iter().map(|r| r.lead.len()).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens.dedup();
        self.lead_lengths = lens;
    }

    /// Leftmost occurrence of any lead word; at equal positions the longer
    /// lead wins (leads are distinct, so that settles ties).
    fn find_redex(&self, word: &[u32]) -> Option<(usize, usize)> {
        for pos in 0..word.len() {
            for &len in &self.lead_lengths {
                if pos + len <= word.len() {
                    if let Some(&i) = self.index.get(&word[pos..pos + len]) {
                        return Some((pos, i));
                    }
                }
            }
        }
        None
    }

    pub fn is_normal(&self, word: &Word) -> bool {
        self.find_redex(word.letters()).is_none()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.reduce(p, None)
    }

    /// Normal form together with the list of steps taken, so that
    /// `p - nf(p)` equals the sum of `coeff * left * relation(rule) * right`.
    pub fn normal_form_traced(&self, p: &Polynomial) -> (Polynomial, Vec<ReductionStep>) {
        let mut trace = Vec::new();
        let nf = self.reduce(p, Some(&mut trace));
        (nf, trace)
    }

    // The largest remaining word is processed first. Rewriting only creates
    // smaller words, so words moved to the result are never touched again.
    fn reduce(&self, p: &Polynomial, mut trace: Option<&mut Vec<ReductionStep>>) -> Polynomial {
        debug_assert_eq!(**p.ring(), *self.ring);
        let mut work = p.clone();
        let mut result = Polynomial::zero(&self.ring);
        while let Some((w, c)) = work.pop_leading() {
            match self.find_redex(w.letters()) {
                None => result.add_term(w, &c),
                Some((pos, i)) => {
                    let rule = &self.rules[i];
                    let left = &w.letters()[..pos];
                    let right = &w.letters()[pos + rule.lead.len()..];
                    for (tw, tc) in rule.tail.terms() {
                        work.add_term(tw.wrap(left, right), &(&c * tc));
                    }
                    if let Some(t) = trace.as_deref_mut() {
                        t.push(ReductionStep {
                            coeff: c,
                            left: Word::new(left.to_vec()),
                            rule: i,
                            right: Word::new(right.to_vec()),
                        });
                    }
                }
            }
        }
        result
    }

    /// Reduces `p`, and if something survives turns it into a monic rule
    /// while keeping the system inter-reduced. Returns the rules created.
    pub fn insert(&mut self, p: Polynomial) -> Vec<RewriteRule> {
        let mut created = Vec::new();
        let mut pending = vec![p];
        while let Some(q) = pending.pop() {
            let r = self.normal_form(&q);
            if r.is_zero() {
                continue;
            }
            let mut tail = r.monic().expect("nonzero").neg();
            let (lead, _) = tail.pop_leading().expect("nonzero");

            let (kept, dropped): (Vec<_>, Vec<_>) =
                std::mem::take(&mut self.rules).into_iter().partition(|r| !r.lead.contains(&lead));
            pending.extend(dropped.iter().map(RewriteRule::relation));
            self.rules = kept;
            let rule = RewriteRule { lead, tail };
            self.rules.push(rule.clone());
            self.rebuild_index();

            for i in 0..self.rules.len() {
                let stale = self.rules[i].tail.terms().any(|(w, _)| w.contains(&rule.lead));
                if stale {
                    let reduced = self.normal_form(&self.rules[i].tail);
                    self.rules[i].tail = reduced;
                }
            }
            self.degree_bound = self.degree_bound.max(rule.lead.len());
            created.push(rule);
        }
        created
    }

    /// Every overlap (self-pairs included) and every inclusion among lead
    /// words, each exactly once.
    pub fn find_ambiguities(&self) -> Vec<Ambiguity> {
        let mut out = Vec::new();
        for (i, a) in self.rules.iter().enumerate() {
            let la = a.lead.letters();
            for (j, b) in self.rules.iter().enumerate() {
                let lb = b.lead.letters();
                for k in 1..la.len().min(lb.len()) {
                    if la[la.len() - k..] == lb[..k] {
                        out.push(Ambiguity {
                            kind: AmbiguityKind::Overlap,
                            first: i,
                            second: j,
                            offset: la.len() - k,
                            word: a.lead.wrap(&[], &lb[k..]),
                        });
                    }
                }
                if i != j && lb.len() <= la.len() {
                    for pos in 0..=la.len() - lb.len() {
                        if la[pos..pos + lb.len()] == *lb {
                            out.push(Ambiguity {
                                kind: AmbiguityKind::Inclusion,
                                first: i,
                                second: j,
                                offset: pos,
                                word: a.lead.clone(),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Resolves every ambiguity of superposition degree at most `bound`,
    /// adding the reduced S-differences as new rules. Returns the rules
    /// added, in creation order.
    pub fn complete_to(&mut self, bound: usize) -> Result<Vec<RewriteRule>> {
        if bound < 2 {
            return Err(Error::DegreeTooSmall(bound));
        }
        let mut log = Vec::new();
        for d in 2..=bound {
            if d <= self.certified_to {
                continue;
            }
            loop {
                let pending: Vec<(Word, Word, usize, Word)> = self
                    .find_ambiguities()
                    .into_iter()
                    .filter(|a| a.degree() == d)
                    .map(|a| {
                        (
                            self.rules[a.first].lead.clone(),
                            self.rules[a.second].lead.clone(),
                            a.offset,
                            a.word,
                        )
                    })
                    .collect();
                let mut changed = false;
                for (lead_a, lead_b, offset, word) in pending {
                    let (Some(&first), Some(&second)) = (
                        self.index.get(lead_a.letters()),
                        self.index.get(lead_b.letters()),
                    ) else {
                        continue;
                    };
                    let kind = if word == lead_a {
                        AmbiguityKind::Inclusion
                    } else {
                        AmbiguityKind::Overlap
                    };
                    let amb = Ambiguity { kind, first, second, offset, word };
                    let s = self.normal_form(&amb.s_polynomial(self));
                    if !s.is_zero() {
                        log.extend(self.insert(s));
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
            self.certified_to = d;
        }
        self.degree_bound = self.degree_bound.max(bound);
        Ok(log)
    }
}

/// Result of [`complete_to_degree`].
#[derive(Clone, Debug)]
pub struct Completion {
    pub system: RewriteSystem,
    pub added: Vec<RewriteRule>,
}

/// Builds the inter-reduced system of a homogeneous presentation and
/// completes it up to superposition degree `bound`.
pub fn complete_to_degree(pres: &Presentation, bound: usize) -> Result<Completion> {
    if bound < 2 {
        return Err(Error::DegreeTooSmall(bound));
    }
    let mut system = RewriteSystem::from_presentation(pres)?;
    let added = system.complete_to(bound)?;
    Ok(Completion { system, added })
}

#[derive(Clone, Debug)]
pub struct GroebnerVerdict {
    pub is_groebner: bool,
    /// First ambiguity whose S-difference has a nonzero normal form.
    pub witness: Option<(Ambiguity, Polynomial)>,
    pub system: RewriteSystem,
}

/// Whether the inter-reduced quadratic relations already form a Gröbner
/// basis. Quadratic leads only overlap in degree 3, so checking those
/// ambiguities suffices.
pub fn is_quadratic_groebner(pres: &Presentation) -> Result<GroebnerVerdict> {
    pres.require_quadratic()?;
    let system = RewriteSystem::from_presentation(pres)?;
    let witness = system.find_ambiguities().into_iter().find_map(|a| {
        let s = system.normal_form(&a.s_polynomial(&system));
        (!s.is_zero()).then_some((a, s))
    });
    Ok(GroebnerVerdict {
        is_groebner: witness.is_none(),
        witness,
        system,
    })
}
