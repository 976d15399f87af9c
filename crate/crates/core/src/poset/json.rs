use serde::{Deserialize, Serialize};

use super::{Labeling, Poset};
use crate::error::Result;

/// On-disk poset: `{"elements": N, "covers": [[a,b],...], "labels": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub elements: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<usize>>,
}

impl PosetFile {
    pub fn from_poset(poset: &Poset, labels: Option<&Labeling>) -> Self {
        PosetFile {
            elements: poset.len(),
            covers: poset.covers().iter().map(|&(a, b)| [a, b]).collect(),
            labels: labels.map(|l| l.values().to_vec()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Validates the file. With `repair`, redundant or duplicate covers are
    /// reduced away instead of rejected; cycles are always an error.
    pub fn into_poset(self, repair: bool) -> Result<(Poset, Option<Labeling>)> {
        let pairs = self.covers.iter().map(|&[a, b]| (a, b));
        let poset = if repair {
            Poset::from_relations(self.elements, pairs)?
        } else {
            Poset::new(self.elements, pairs)?
        };
        let labels = match self.labels {
            Some(values) => {
                let l = Labeling::new(values)?;
                l.check_size(poset.len())?;
                Some(l)
            }
            None => None,
        };
        Ok((poset, labels))
    }
}
