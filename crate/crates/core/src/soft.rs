//! Intuitionistic fuzzy soft sets: parameter-indexed families of IF sets.

use crate::error::{Error, Result};
use crate::ifset::IFSet;
use crate::universe::{Label, ParameterSpace, Universe};

/// Maps every parameter to an IF set over the alternatives.
///
/// The carrier set of parameters is implicit: it is the set of parameters
/// whose image is not the IF-empty set.
#[derive(Debug, Clone, PartialEq)]
pub struct IFSoftSet {
    parameters: ParameterSpace,
    universe: Universe,
    gamma: Vec<IFSet>,
}

impl IFSoftSet {
    /// Sparse construction; parameters without an entry map to the empty set.
    pub fn new<I, S>(parameters: &ParameterSpace, universe: &Universe, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, IFSet)>,
        S: AsRef<str>,
    {
        let mut gamma = vec![IFSet::empty(universe); parameters.len()];
        let mut seen = vec![false; parameters.len()];
        for (name, set) in entries {
            let name = name.as_ref();
            let idx = parameters
                .index_of(name)
                .ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
            set.universe().ensure_same(universe, "universe")?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::DuplicateLabel(name.to_string()));
            }
            gamma[idx] = set;
        }
        Ok(IFSoftSet {
            parameters: parameters.clone(),
            universe: universe.clone(),
            gamma,
        })
    }

    /// Every parameter maps to the IF-empty set.
    pub fn empty(parameters: &ParameterSpace, universe: &Universe) -> Self {
        IFSoftSet {
            parameters: parameters.clone(),
            universe: universe.clone(),
            gamma: vec![IFSet::empty(universe); parameters.len()],
        }
    }

    /// Every parameter maps to the IF-universal set.
    pub fn universal(parameters: &ParameterSpace, universe: &Universe) -> Self {
        IFSoftSet {
            parameters: parameters.clone(),
            universe: universe.clone(),
            gamma: vec![IFSet::universal(universe); parameters.len()],
        }
    }

    pub(crate) fn from_parts(parameters: ParameterSpace, universe: Universe, gamma: Vec<IFSet>) -> Self {
        debug_assert_eq!(gamma.len(), parameters.len());
        IFSoftSet {
            parameters,
            universe,
            gamma,
        }
    }

    pub fn parameters(&self) -> &ParameterSpace {
        &self.parameters
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn gamma(&self, parameter: &str) -> Option<&IFSet> {
        self.parameters.index_of(parameter).map(|i| &self.gamma[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &IFSet)> + '_ {
        self.parameters.labels().iter().zip(&self.gamma)
    }

    /// Parameters whose image is not IF-empty.
    pub fn carrier(&self) -> impl Iterator<Item = &Label> + '_ {
        self.iter().filter(|(_, s)| !s.is_empty_set()).map(|(x, _)| x)
    }

    fn check_spaces(&self, other: &IFSoftSet) -> Result<()> {
        self.parameters.ensure_same(&other.parameters, "parameter space")?;
        self.universe.ensure_same(&other.universe, "universe")
    }

    pub fn is_subset(&self, other: &IFSoftSet) -> Result<bool> {
        self.check_spaces(other)?;
        for (a, b) in self.gamma.iter().zip(&other.gamma) {
            if !a.is_subset(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn approx_eq(&self, other: &IFSoftSet) -> Result<bool> {
        self.check_spaces(other)?;
        for (a, b) in self.gamma.iter().zip(&other.gamma) {
            if !a.approx_eq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn union(&self, other: &IFSoftSet) -> Result<IFSoftSet> {
        self.zip_with(other, IFSet::union)
    }

    pub fn intersection(&self, other: &IFSoftSet) -> Result<IFSoftSet> {
        self.zip_with(other, IFSet::intersection)
    }

    pub fn complement(&self) -> IFSoftSet {
        IFSoftSet {
            parameters: self.parameters.clone(),
            universe: self.universe.clone(),
            gamma: self.gamma.iter().map(IFSet::complement).collect(),
        }
    }

    /// `(x, y) -> gamma_a(x) ∩ gamma_b(y)` over all of `E × E`.
    pub fn and_product(&self, other: &IFSoftSet) -> Result<PairedIFSoftSet> {
        self.product_with(other, IFSet::intersection)
    }

    /// `(x, y) -> gamma_a(x) ∪ gamma_b(y)` over all of `E × E`.
    pub fn or_product(&self, other: &IFSoftSet) -> Result<PairedIFSoftSet> {
        self.product_with(other, IFSet::union)
    }

    fn zip_with(
        &self,
        other: &IFSoftSet,
        f: impl Fn(&IFSet, &IFSet) -> Result<IFSet>,
    ) -> Result<IFSoftSet> {
        self.check_spaces(other)?;
        let gamma = self
            .gamma
            .iter()
            .zip(&other.gamma)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(IFSoftSet {
            parameters: self.parameters.clone(),
            universe: self.universe.clone(),
            gamma,
        })
    }

    fn product_with(
        &self,
        other: &IFSoftSet,
        f: impl Fn(&IFSet, &IFSet) -> Result<IFSet>,
    ) -> Result<PairedIFSoftSet> {
        self.check_spaces(other)?;
        let mut gamma = Vec::with_capacity(self.gamma.len() * other.gamma.len());
        for a in &self.gamma {
            for b in &other.gamma {
                gamma.push(f(a, b)?);
            }
        }
        Ok(PairedIFSoftSet {
            parameters: self.parameters.clone(),
            universe: self.universe.clone(),
            gamma,
        })
    }
}

/// An IF soft set indexed by ordered parameter pairs, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedIFSoftSet {
    parameters: ParameterSpace,
    universe: Universe,
    gamma: Vec<IFSet>,
}

impl PairedIFSoftSet {
    pub fn parameters(&self) -> &ParameterSpace {
        &self.parameters
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn gamma(&self, x: &str, y: &str) -> Option<&IFSet> {
        let i = self.parameters.index_of(x)?;
        let j = self.parameters.index_of(y)?;
        Some(&self.gamma[i * self.parameters.len() + j])
    }

    pub fn iter(&self) -> impl Iterator<Item = ((&Label, &Label), &IFSet)> + '_ {
        let labels = self.parameters.labels();
        let n = labels.len();
        self.gamma
            .iter()
            .enumerate()
            .map(move |(k, s)| ((&labels[k / n], &labels[k % n]), s))
    }

    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    pub fn complement(&self) -> PairedIFSoftSet {
        PairedIFSoftSet {
            parameters: self.parameters.clone(),
            universe: self.universe.clone(),
            gamma: self.gamma.iter().map(IFSet::complement).collect(),
        }
    }
}
