use std::collections::BTreeSet;
use std::path::Path;

/// Normalizes an activity name to lowercase snake case
/// (`Drink_glass`, `DrinkGlass` and `drink-glass` all become `drink_glass`).
pub fn normalize_label(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len() + 4);
    let mut prev: Option<char> = None;
    for c in raw.trim().chars() {
        if c.is_alphanumeric() {
            let boundary = c.is_uppercase()
                && prev.is_some_and(|p| p.is_lowercase() || p.is_ascii_digit());
            if boundary && !out.ends_with('_') {
                out.push('_');
            }
            out.extend(c.to_lowercase());
        } else if !out.is_empty() && !out.ends_with('_') {
            out.push('_');
        }
        prev = Some(c);
    }
    while out.ends_with('_') {
        out.pop();
    }
    out
}

/// Picks the label out of a file stem by splitting on `delimiter` and
/// taking field `field` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelRule {
    pub delimiter: char,
    pub field: usize,
}

impl LabelRule {
    /// UCI ADL naming: `Accelerometer-YYYY-MM-DD-hh-mm-ss-<activity>-<volunteer>`.
    pub const ADL: LabelRule = LabelRule {
        delimiter: '-',
        field: 7,
    };

    pub fn label_for(&self, path: &Path) -> Option<String> {
        let stem = path.file_stem()?.to_str()?;
        let token = stem.split(self.delimiter).nth(self.field)?;
        let label = normalize_label(token);
        (!label.is_empty()).then_some(label)
    }
}

/// Bijection between class names and integer ids, ordered lexicographically.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabelMap {
    names: Vec<String>,
}

impl LabelMap {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let set: BTreeSet<String> = names.into_iter().map(Into::into).collect();
        Self {
            names: set.into_iter().collect(),
        }
    }

    pub fn id_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn name_of(&self, id: usize) -> Option<&str> {
        self.names.get(id).map(String::as_str)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}
