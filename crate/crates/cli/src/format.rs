//! JSON interchange format for presentations.
//!
//! ```json
//! {
//!   "field": {"kind": "prime", "p": 17},
//!   "generators": ["a", "b", "c"],
//!   "relations": [[{"c": "1", "w": ["a", "c"]}, {"c": "2", "w": ["b", "a"]}]]
//! }
//! ```
//!
//! Generators are listed in ascending order. Coefficients are strings
//! (`"n"` or `"n/d"`) so that rationals and large integers survive exactly.

use quadalg::{Alphabet, Field, FreeAlgebra, Polynomial, Presentation};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Prime { p: u32 },
    Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub c: String,
    pub w: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub field: FieldSpec,
    pub generators: Vec<String>,
    pub relations: Vec<Vec<TermSpec>>,
}

impl PresentationFile {
    pub fn to_presentation(&self) -> Result<Presentation, CliError> {
        let field = match self.field {
            FieldSpec::Prime { p } => Field::prime(p)?,
            FieldSpec::Rational => Field::Rational,
        };
        let ring = FreeAlgebra::new(Alphabet::new(&self.generators)?, field);
        let mut relations = Vec::with_capacity(self.relations.len());
        for terms in &self.relations {
            let parsed = terms
                .iter()
                .map(|t| Ok((ring.alphabet.parse_word(&t.w)?, field.parse(&t.c)?)))
                .collect::<Result<Vec<_>, quadalg::Error>>()?;
            relations.push(Polynomial::from_terms(&ring, parsed)?);
        }
        Ok(Presentation::new(ring, relations)?)
    }

    pub fn from_presentation(pres: &Presentation) -> Self {
        let field = match pres.field() {
            Field::Prime(p) => FieldSpec::Prime { p },
            Field::Rational => FieldSpec::Rational,
        };
        let alphabet = pres.alphabet();
        let relations = pres
            .relations()
            .iter()
            .map(|rel| {
                rel.terms()
                    .map(|(w, c)| TermSpec {
                        c: c.to_string(),
                        w: w.letters().iter().map(|&l| alphabet.label(l).to_string()).collect(),
                    })
                    .collect()
            })
            .collect();
        PresentationFile { field, generators: alphabet.names().to_vec(), relations }
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation, CliError> {
    let file: PresentationFile = serde_json::from_str(text).map_err(|e| CliError::Format(e.to_string()))?;
    file.to_presentation()
}

pub fn serialize_presentation(pres: &Presentation) -> String {
    serde_json::to_string_pretty(&PresentationFile::from_presentation(pres)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_merges() {
        let text = r#"{"field":{"kind":"prime","p":17},"generators":["x","y"],
            "relations":[[{"c":"18","w":["x","y"]},{"c":"-1/2","w":["y","x"]},{"c":"1","w":["y","x"]}]]}"#;
        let pres = parse_presentation(text).unwrap();
        let rel = &pres.relations()[0];
        let xy = pres.alphabet().parse_word(&["x", "y"]).unwrap();
        let yx = pres.alphabet().parse_word(&["y", "x"]).unwrap();
        assert_eq!(rel.coefficient(&xy).unwrap().residue(), Some(1));
        // -1/2 + 1 = 1/2 = 9 mod 17
        assert_eq!(rel.coefficient(&yx).unwrap().residue(), Some(9));
    }

    #[test]
    fn free_algebra() {
        let text = r#"{"field":{"kind":"rational"},"generators":["a"],"relations":[]}"#;
        let pres = parse_presentation(text).unwrap();
        assert!(pres.relations().is_empty());
        assert_eq!(pres.field(), Field::Rational);
    }

    #[test]
    fn rejections() {
        let bad = [
            r#"{"field":{"kind":"prime","p":17},"generators":["x"],"relations":[[{"c":"1","w":["z"]}]]}"#,
            r#"{"field":{"kind":"prime","p":17},"generators":["x"],"relations":[[{"c":"1/0","w":["x"]}]]}"#,
            r#"{"field":{"kind":"prime","p":15},"generators":["x"],"relations":[]}"#,
            r#"{"field":{"kind":"prime","p":17},"generators":["x","x"],"relations":[]}"#,
            r#"{"field":{"kind":"prime","p":17},"generators":["x"],"relations":[[{"c":"17","w":["x"]}]]}"#,
            r#"{"field":{"kind":"prime","p":17},"generators":["x"]}"#,
            r#"{"field":{"kind":"real"},"generators":["x"],"relations":[]}"#,
        ];
        for text in bad {
            assert!(parse_presentation(text).is_err(), "{text}");
        }
    }
}
