//! Intuitionistic fuzzy degrees and finite intuitionistic fuzzy sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::universe::{Label, Universe};

/// Absolute tolerance for the `mu + nu <= 1` bound and for approximate equality.
pub const TOLERANCE: f64 = 1e-9;

/// A membership / non-membership pair with `mu + nu <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IFValue {
    mu: f64,
    nu: f64,
}

impl IFValue {
    /// `(0, 1)`: certainly outside.
    pub const EMPTY: IFValue = IFValue { mu: 0.0, nu: 1.0 };
    /// `(1, 0)`: certainly inside.
    pub const FULL: IFValue = IFValue { mu: 1.0, nu: 0.0 };

    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        let reason = if !mu.is_finite() || !nu.is_finite() {
            Some("degrees must be finite")
        } else if !(0.0..=1.0).contains(&mu) {
            Some("membership outside [0, 1]")
        } else if !(0.0..=1.0).contains(&nu) {
            Some("non-membership outside [0, 1]")
        } else if mu + nu > 1.0 + TOLERANCE {
            Some("mu + nu exceeds 1")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidDegree { mu, nu, reason }),
            None => Ok(IFValue { mu, nu }),
        }
    }

    pub fn mu(self) -> f64 {
        self.mu
    }

    pub fn nu(self) -> f64 {
        self.nu
    }

    /// Hesitation margin `1 - mu - nu`.
    pub fn hesitation(self) -> f64 {
        1.0 - self.mu - self.nu
    }

    pub fn union(self, other: IFValue) -> IFValue {
        // max mu + min nu is bounded by the pair that attains the max mu.
        IFValue {
            mu: self.mu.max(other.mu),
            nu: self.nu.min(other.nu),
        }
    }

    pub fn intersection(self, other: IFValue) -> IFValue {
        IFValue {
            mu: self.mu.min(other.mu),
            nu: self.nu.max(other.nu),
        }
    }

    pub fn complement(self) -> IFValue {
        IFValue {
            mu: self.nu,
            nu: self.mu,
        }
    }

    pub fn is_subset(self, other: IFValue) -> bool {
        self.mu <= other.mu && self.nu >= other.nu
    }

    pub fn approx_eq(self, other: IFValue) -> bool {
        (self.mu - other.mu).abs() <= TOLERANCE && (self.nu - other.nu).abs() <= TOLERANCE
    }

    pub fn is_empty_value(self) -> bool {
        self.approx_eq(IFValue::EMPTY)
    }

    pub fn is_full_value(self) -> bool {
        self.approx_eq(IFValue::FULL)
    }
}

impl Default for IFValue {
    fn default() -> Self {
        IFValue::EMPTY
    }
}

impl fmt::Display for IFValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mu, self.nu)
    }
}

/// A total map from a finite universe to [`IFValue`]s.
#[derive(Debug, Clone, PartialEq)]
pub struct IFSet {
    universe: Universe,
    values: Vec<IFValue>,
}

impl IFSet {
    /// The all-`(0, 1)` set.
    pub fn empty(universe: &Universe) -> Self {
        IFSet {
            universe: universe.clone(),
            values: vec![IFValue::EMPTY; universe.len()],
        }
    }

    /// The all-`(1, 0)` set.
    pub fn universal(universe: &Universe) -> Self {
        IFSet {
            universe: universe.clone(),
            values: vec![IFValue::FULL; universe.len()],
        }
    }

    /// One value per label, in universe order.
    pub fn from_values(universe: &Universe, values: Vec<IFValue>) -> Result<Self> {
        if values.len() != universe.len() {
            return Err(Error::LengthMismatch {
                expected: universe.len(),
                got: values.len(),
            });
        }
        Ok(IFSet {
            universe: universe.clone(),
            values,
        })
    }

    /// Sparse construction; omitted labels take `(0, 1)`.
    pub fn from_pairs<I, S>(universe: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, IFValue)>,
        S: AsRef<str>,
    {
        let mut values = vec![IFValue::EMPTY; universe.len()];
        let mut seen = vec![false; universe.len()];
        for (name, value) in pairs {
            let name = name.as_ref();
            let idx = universe
                .index_of(name)
                .ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::DuplicateLabel(name.to_string()));
            }
            values[idx] = value;
        }
        Ok(IFSet {
            universe: universe.clone(),
            values,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn values(&self) -> &[IFValue] {
        &self.values
    }

    pub fn get(&self, label: &str) -> Option<IFValue> {
        self.universe.index_of(label).map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, IFValue)> + '_ {
        self.universe.labels().iter().zip(self.values.iter().copied())
    }

    pub fn is_empty_set(&self) -> bool {
        self.values.iter().all(|v| v.is_empty_value())
    }

    pub fn is_universal_set(&self) -> bool {
        self.values.iter().all(|v| v.is_full_value())
    }

    pub fn is_subset(&self, other: &IFSet) -> Result<bool> {
        self.universe.ensure_same(&other.universe, "universe")?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.is_subset(*b)))
    }

    /// Elementwise equality within [`TOLERANCE`].
    pub fn approx_eq(&self, other: &IFSet) -> Result<bool> {
        self.universe.ensure_same(&other.universe, "universe")?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.approx_eq(*b)))
    }

    pub fn union(&self, other: &IFSet) -> Result<IFSet> {
        self.zip_with(other, IFValue::union)
    }

    pub fn intersection(&self, other: &IFSet) -> Result<IFSet> {
        self.zip_with(other, IFValue::intersection)
    }

    pub fn complement(&self) -> IFSet {
        IFSet {
            universe: self.universe.clone(),
            values: self.values.iter().map(|v| v.complement()).collect(),
        }
    }

    fn zip_with(&self, other: &IFSet, f: impl Fn(IFValue, IFValue) -> IFValue) -> Result<IFSet> {
        self.universe.ensure_same(&other.universe, "universe")?;
        let values: Vec<IFValue> = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| f(*a, *b))
            .collect();
        debug_assert!(values.iter().all(|v| v.mu + v.nu <= 1.0 + TOLERANCE));
        Ok(IFSet {
            universe: self.universe.clone(),
            values,
        })
    }
}
