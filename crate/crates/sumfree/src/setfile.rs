//! JSON set-file format: {"p": int, "n": int, "elements": [[int, ...], ...]}.
//! Self-describing fixtures; elements are sorted by canonical index on
//! output so parse-then-serialize is the identity on canonical files.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::set::GroupSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetFile {
    pub p: u32,
    pub n: u32,
    pub elements: Vec<Vec<u32>>,
}

impl SetFile {
    pub fn from_set(a: &GroupSet) -> SetFile {
        let spec = a.spec();
        SetFile {
            p: spec.p(),
            n: spec.n(),
            elements: a.indices().map(|i| spec.coords_of(i)).collect(),
        }
    }

    /// Validates and converts to a GroupSet; errors carry the offending
    /// element position and field.
    pub fn to_set(&self) -> Result<GroupSet> {
        let spec = GroupSpec::new(self.p, self.n)?;
        let mut set = GroupSet::empty(spec);
        for (pos, coords) in self.elements.iter().enumerate() {
            if coords.len() != self.n as usize {
                return Err(Error::usage(format!(
                    "element {}: expected {} coordinates, got {}",
                    pos,
                    self.n,
                    coords.len()
                )));
            }
            if let Some((j, &c)) = coords.iter().enumerate().find(|&(_, &c)| c >= self.p) {
                return Err(Error::usage(format!(
                    "element {}: coordinate {} is {} but must be < p = {}",
                    pos, j, c, self.p
                )));
            }
            let idx = spec.index_of(coords);
            if set.contains(idx) {
                return Err(Error::usage(format!(
                    "element {}: duplicate of an earlier element",
                    pos
                )));
            }
            set.insert(idx);
        }
        Ok(set)
    }

    pub fn from_json(s: &str) -> Result<SetFile> {
        serde_json::from_str(s).map_err(|e| {
            Error::usage(format!(
                "malformed set file (line {}, column {}): {}",
                e.line(),
                e.column(),
                e
            ))
        })
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable");
        out.push('\n');
        out
    }

    pub fn load(path: &Path) -> Result<SetFile> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::usage(format!("{}: {}", path.display(), e)))?;
        SetFile::from_json(&text)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json())
            .map_err(|e| Error::usage(format!("{}: {}", path.display(), e)))
    }
}

/// load + to_set in one step.
pub fn read_set(path: &Path) -> Result<GroupSet> {
    SetFile::load(path)?.to_set()
}
