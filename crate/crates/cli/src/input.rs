use std::fs;
use std::path::Path;

use canonlab_core::poset::{product_with_chain, remove_intercopy_covers, PosetFile};
use canonlab_core::{Labeling, Poset};

use crate::args::Shape;
use crate::CliError;

/// Reads and validates a poset file. Cycles always fail, with the cycle in
/// the message; redundant covers fail unless `repair` is set.
pub fn load_poset(path: &Path, repair: bool) -> Result<(Poset, Option<Labeling>), CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let file = PosetFile::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    file.into_poset(repair).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn required(value: Option<usize>, flag: &str) -> Result<usize, CliError> {
    match value {
        Some(v) if v >= 1 => Ok(v),
        Some(_) => Err(CliError::Usage(format!("{flag} must be at least 1"))),
        None => Err(CliError::Usage(format!("missing {flag}"))),
    }
}

impl Shape {
    pub fn labels(&self) -> Result<Option<Labeling>, CliError> {
        self.labels.clone().map(Labeling::new).transpose().map_err(CliError::from)
    }

    /// The poset from --poset, else the chain [m]; with its labeling from
    /// the file, --labels, or the natural one, in that order.
    pub fn base(&self) -> Result<(String, Poset, Labeling), CliError> {
        let (name, poset, file_labels) = match &self.poset {
            Some(path) => {
                let (poset, labels) = load_poset(path, self.repair)?;
                (file_name(path), poset, labels)
            }
            None => {
                let m = required(self.m, "--m")?;
                (format!("chain-{m}"), Poset::chain(m), None)
            }
        };
        let w = match (file_labels, self.labels()?) {
            (_, Some(w)) | (Some(w), None) => w,
            (None, None) => Labeling::natural(&poset),
        };
        if w.len() != poset.len() {
            return Err(CliError::Usage(format!("labeling has {} entries, poset has {}", w.len(), poset.len())));
        }
        Ok((name, poset, w))
    }

    /// The poset from --poset, else `[m] x [n]` minus --remove, else the chain
    /// [m]; with the same labeling precedence as [`Shape::base`].
    pub fn whole(&self) -> Result<(String, Poset, Labeling), CliError> {
        if self.poset.is_some() || self.n.is_none() {
            if self.remove.is_some() {
                return Err(CliError::Usage("--remove needs --m and --n without --poset".into()));
            }
            return self.base();
        }
        let m = required(self.m, "--m")?;
        let n = required(self.n, "--n")?;
        let product = product_with_chain(&Poset::chain(m), n);
        let removed = self.remove.clone().unwrap_or_default();
        let poset = remove_intercopy_covers(&product, m, &removed)?;
        let w = self.labels()?.unwrap_or_else(|| Labeling::identity(m * n));
        if w.len() != poset.len() {
            return Err(CliError::Usage(format!("labeling has {} entries, poset has {}", w.len(), poset.len())));
        }
        let removed: Vec<String> = removed.iter().map(ToString::to_string).collect();
        Ok((format!("chain-{m}x{n} removed=[{}]", removed.join(",")), poset, w))
    }
}

fn file_name(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}
