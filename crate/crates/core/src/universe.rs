//! Labels and ordered finite label sets.
//!
//! A [`Universe`] is used both for the alternatives `U` and for the parameter
//! set `E`; its declaration order fixes iteration and reporting order
//! everywhere else in the crate.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(name: &str) -> Result<Self> {
        if name.is_empty() {
            return Err(Error::EmptyLabel);
        }
        Ok(Label(Arc::from(name)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Label {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

#[derive(Debug)]
struct Inner {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

/// Ordered set of distinct labels. Cloning is cheap (shared storage).
#[derive(Debug, Clone)]
pub struct Universe(Arc<Inner>);

/// The parameter set `E` has the same shape as a universe of alternatives.
pub type ParameterSpace = Universe;

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut ordered = Vec::new();
        let mut index = HashMap::new();
        for name in labels {
            let label = Label::new(name.as_ref())?;
            if index.insert(label.clone(), ordered.len()).is_some() {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
            ordered.push(label);
        }
        Ok(Universe(Arc::new(Inner {
            labels: ordered,
            index,
        })))
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0.labels
    }

    pub fn label(&self, idx: usize) -> &Label {
        &self.0.labels[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.index.contains_key(name)
    }

    pub(crate) fn ensure_same(&self, other: &Universe, what: &'static str) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpaceMismatch(what))
        }
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for Universe {}

impl std::borrow::Borrow<str> for Label {
    fn borrow(&self) -> &str {
        &self.0
    }
}
