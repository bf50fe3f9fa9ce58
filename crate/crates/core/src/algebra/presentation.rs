use std::sync::Arc;

use super::{Alphabet, Field, FreeAlgebra, Polynomial};
use crate::error::{Error, Result};

/// Generators, a coefficient field and a list of defining relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    ring: Arc<FreeAlgebra>,
    relations: Vec<Polynomial>,
}

impl Presentation {
    /// Every relation must be nonzero and live in `ring`.
    pub fn new(ring: Arc<FreeAlgebra>, relations: Vec<Polynomial>) -> Result<Self> {
        for (index, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(Error::ZeroRelation { index });
            }
            if **r.ring() != *ring {
                return Err(Error::Mismatch);
            }
        }
        Ok(Presentation { ring, relations })
    }

    pub fn free(alphabet: Alphabet, field: Field) -> Self {
        Presentation {
            ring: FreeAlgebra::new(alphabet, field),
            relations: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Arc<FreeAlgebra> {
        &self.ring
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.ring.alphabet
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn generators(&self) -> usize {
        self.ring.generators()
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    /// A copy with one more relation appended.
    pub fn with_relation(&self, relation: Polynomial) -> Result<Self> {
        let mut relations = self.relations.clone();
        relations.push(relation);
        Self::new(self.ring.clone(), relations)
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        for (index, r) in self.relations.iter().enumerate() {
            if r.homogeneous_degree().is_none() {
                return Err(Error::NotHomogeneous { index });
            }
        }
        Ok(())
    }

    pub fn require_quadratic(&self) -> Result<()> {
        self.require_homogeneous()?;
        for (index, r) in self.relations.iter().enumerate() {
            let degree = r.homogeneous_degree().unwrap_or(0);
            if degree != 2 {
                return Err(Error::NotQuadratic { index, degree });
            }
        }
        Ok(())
    }

    pub fn is_quadratic(&self) -> bool {
        self.require_quadratic().is_ok()
    }
}
