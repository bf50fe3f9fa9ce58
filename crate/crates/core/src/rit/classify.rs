use std::collections::BTreeMap;

use super::{canonical_form, grsig_check, rit_presentation, SigmaFamily};
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::series::{hilbert_of_presentation, TruncatedSeries};

/// Largest number of families `n^(m n)` that [`classify`] will enumerate.
pub const MAX_CLASSIFY_FAMILIES: u128 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRow {
    /// Canonical member of the class.
    pub representative: SigmaFamily,
    pub size: usize,
    pub hilbert: TruncatedSeries,
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub m: usize,
    pub n: usize,
    pub degree: usize,
    pub rows: Vec<ClassRow>,
}

impl Classification {
    pub fn maximal_count(&self) -> usize {
        self.rows.iter().filter(|r| r.maximal).count()
    }
}

/// Enumerates every family, groups by canonical form and computes the
/// Hilbert series of one algebra per class. Rows come in canonical order.
pub fn classify(m: usize, n: usize, degree: usize, field: Field) -> Result<Classification> {
    if m + n == 0 {
        return Err(Error::InvalidArgument("classification needs m + n >= 1".into()));
    }
    let total = (n as u128).checked_pow((m * n) as u32).unwrap_or(u128::MAX);
    if total > MAX_CLASSIFY_FAMILIES {
        return Err(Error::SizeBound { what: "families to classify", actual: total, limit: MAX_CLASSIFY_FAMILIES });
    }
    let mut classes: BTreeMap<SigmaFamily, usize> = BTreeMap::new();
    for fam in SigmaFamily::enumerate(m, n) {
        *classes.entry(canonical_form(&fam)?).or_default() += 1;
    }
    let rows = classes
        .into_iter()
        .map(|(representative, size)| {
            let pres = rit_presentation(&representative, field)?;
            let hilbert = hilbert_of_presentation(&pres, degree)?.series;
            let maximal = grsig_check(&representative).holds;
            Ok(ClassRow { representative, size, hilbert, maximal })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification { m, n, degree, rows })
}
