//! Named generator files.
//!
//! ```text
//! # comment
//! degree 5
//! r = (1 2 3 4 5)
//! s = (2 5)(3 4)
//! ```
//!
//! The first non-blank, non-comment line is `degree <n>`; each further line is
//! `<name> = <cycle notation>` with names matching `[A-Za-z0-9_]+`, unique
//! within the file. `#` starts a comment anywhere on a line.

use std::fmt;

use crate::{parse_cycles, Error, PermGroup, Permutation, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorFile {
    pub degree: usize,
    pub entries: Vec<(String, Permutation)>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl GeneratorFile {
    pub fn new(degree: usize) -> Self {
        GeneratorFile { degree, entries: Vec::new() }
    }

    pub fn parse(text: &str) -> Result<GeneratorFile> {
        let mut file: Option<GeneratorFile> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::GeneratorFile { line: line_no, message };
            match file.as_mut() {
                None => {
                    let mut words = line.split_whitespace();
                    let degree = match (words.next(), words.next(), words.next()) {
                        (Some("degree"), Some(n), None) => n
                            .parse::<usize>()
                            .ok()
                            .filter(|&n| n > 0)
                            .ok_or_else(|| err(format!("invalid degree {n:?}")))?,
                        _ => return Err(err("expected `degree <n>`".into())),
                    };
                    file = Some(GeneratorFile::new(degree));
                }
                Some(f) => {
                    let (name, cycles) =
                        line.split_once('=').ok_or_else(|| err("expected `<name> = <cycles>`".into()))?;
                    let name = name.trim();
                    if !valid_name(name) {
                        return Err(err(format!("invalid name {name:?}")));
                    }
                    if f.get(name).is_some() {
                        return Err(err(format!("duplicate name {name:?}")));
                    }
                    let perm = parse_cycles(cycles, f.degree).map_err(|e| match e {
                        Error::Parse { offset, message } => {
                            err(format!("{message} (at byte {offset} of the cycle text)"))
                        }
                        other => err(other.to_string()),
                    })?;
                    f.entries.push((name.to_string(), perm));
                }
            }
        }
        file.ok_or(Error::GeneratorFile { line: 0, message: "missing `degree <n>` line".into() })
    }

    pub fn get(&self, name: &str) -> Option<&Permutation> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn push(&mut self, name: &str, perm: Permutation) -> Result<()> {
        if !valid_name(name) {
            return Err(Error::GeneratorFile { line: 0, message: format!("invalid name {name:?}") });
        }
        if self.get(name).is_some() {
            return Err(Error::GeneratorFile { line: 0, message: format!("duplicate name {name:?}") });
        }
        if perm.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: perm.degree() });
        }
        self.entries.push((name.to_string(), perm));
        Ok(())
    }

    /// Permutations for the listed names, in order.
    pub fn select(&self, names: &[&str]) -> Result<Vec<Permutation>> {
        names
            .iter()
            .map(|n| {
                self.get(n).cloned().ok_or_else(|| Error::GeneratorFile {
                    line: 0,
                    message: format!("no generator named {n:?}"),
                })
            })
            .collect()
    }

    pub fn permutations(&self) -> Vec<Permutation> {
        self.entries.iter().map(|(_, p)| p.clone()).collect()
    }

    /// Group generated by every entry of the file.
    pub fn group(&self) -> Result<PermGroup> {
        PermGroup::from_generators(self.permutations())
    }
}

impl fmt::Display for GeneratorFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree {}", self.degree)?;
        for (name, perm) in &self.entries {
            writeln!(f, "{name} = {perm}")?;
        }
        Ok(())
    }
}
