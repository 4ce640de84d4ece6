//! Aggregation of an Ω-set into a single IF set over the alternatives, and
//! selection of the opportune alternative from that aggregate.
//!
//! For every alternative `u`, with `|E|` the number of declared parameters
//! and the sums running over the parameters in `X`:
//!
//! ```text
//! mu*(u) = (1/|E|) Σ mu_X(x) · mu_ω(x)(u)
//! nu*(u) = (1/|E|) Σ nu_X(x) · nu_ω(x)(u)
//! ```
//!
//! An alternative missing from `ω(x)` counts as `(0, 1)`. Parameters outside
//! `X` contribute nothing to either sum.
//!
//! Selection takes the alternative with the largest `mu*` (`max_u`) and the one
//! with the smallest `nu*` (`min_v`), scores each by
//! `α' = mu*/(mu* + nu*)` of `max_u` and `β' = mu*/(nu* + mu*)` of `min_v`, and
//! keeps `max_u` only when `α' > β'`.

use crate::error::{Error, Result};
use crate::ifset::{IFSet, IFValue};
use crate::omega::OmegaSet;
use crate::universe::{Label, Universe};

/// The aggregate IF set of an Ω-set.
#[derive(Debug, Clone, PartialEq)]
pub struct Aggregate(IFSet);

impl Aggregate {
    pub fn universe(&self) -> &Universe {
        self.0.universe()
    }

    pub fn as_set(&self) -> &IFSet {
        &self.0
    }

    pub fn into_set(self) -> IFSet {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, IFValue)> + '_ {
        self.0.iter()
    }

    pub fn mu_star(&self, label: &str) -> Option<f64> {
        self.0.get(label).map(IFValue::mu)
    }

    pub fn nu_star(&self, label: &str) -> Option<f64> {
        self.0.get(label).map(IFValue::nu)
    }
}

impl From<IFSet> for Aggregate {
    fn from(set: IFSet) -> Self {
        Aggregate(set)
    }
}

/// Labels that tied at a selection step. The argmax/argmin lists are empty
/// when the winner was unique.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Ties {
    pub max_mu: Vec<Label>,
    pub min_nu: Vec<Label>,
    /// `α' == β'`; the earlier of `max_u` / `min_v` in universe order won.
    pub ratio: bool,
}

impl Ties {
    pub fn any(&self) -> bool {
        !self.max_mu.is_empty() || !self.min_nu.is_empty() || self.ratio
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionReport {
    pub aggregate: Aggregate,
    pub max_u: Label,
    pub max_mu: f64,
    pub min_v: Label,
    pub min_nu: f64,
    /// Non-membership of `max_u`.
    pub alpha: f64,
    /// Membership of `min_v`.
    pub beta: f64,
    pub alpha_prime: f64,
    pub beta_prime: f64,
    pub opportune: Label,
    pub ties: Ties,
}

/// Computes the aggregate IF set. The input must satisfy the Ω-set constraint
/// and have at least one parameter.
pub fn aggregate(set: &OmegaSet) -> Result<Aggregate> {
    let n_params = set.parameters().len();
    if n_params == 0 {
        return Err(Error::EmptyParameterSpace);
    }
    if let Some(x) = set.constraint_violations().next() {
        return Err(Error::ConstraintViolation(x.to_string()));
    }
    let universe = set.universe();
    let mut mu = vec![0.0; universe.len()];
    let mut nu = vec![0.0; universe.len()];
    for (_, weight, approx) in set.iter().filter(|(_, d, _)| !d.is_empty_value()) {
        for (i, value) in approx.values().iter().enumerate() {
            mu[i] += weight.mu() * value.mu();
            nu[i] += weight.nu() * value.nu();
        }
    }
    let scale = n_params as f64;
    let values = mu
        .into_iter()
        .zip(nu)
        .map(|(m, n)| IFValue::new(m / scale, n / scale))
        .collect::<Result<Vec<_>>>()?;
    Ok(Aggregate(IFSet::from_values(universe, values)?))
}

/// Picks the opportune alternative from an aggregate.
pub fn select(aggregate: &Aggregate) -> Result<DecisionReport> {
    let universe = aggregate.universe();
    if universe.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    let values = aggregate.as_set().values();

    let (max_idx, max_ties) = first_extreme(values.iter().map(|v| v.mu()), |a, b| a > b);
    let (min_idx, min_ties) = first_extreme(values.iter().map(|v| v.nu()), |a, b| a < b);

    let max_mu = values[max_idx].mu();
    let alpha = values[max_idx].nu();
    let min_nu = values[min_idx].nu();
    let beta = values[min_idx].mu();

    let alpha_prime = ratio(max_mu, max_mu + alpha);
    let beta_prime = ratio(beta, min_nu + beta);

    let ratio_tie = alpha_prime == beta_prime;
    let opportune = if alpha_prime > beta_prime {
        max_idx
    } else if alpha_prime < beta_prime {
        min_idx
    } else {
        max_idx.min(min_idx)
    };

    let tied = |idx: Vec<usize>| -> Vec<Label> {
        if idx.len() > 1 {
            idx.into_iter().map(|i| universe.label(i).clone()).collect()
        } else {
            Vec::new()
        }
    };

    Ok(DecisionReport {
        aggregate: aggregate.clone(),
        max_u: universe.label(max_idx).clone(),
        max_mu,
        min_v: universe.label(min_idx).clone(),
        min_nu,
        alpha,
        beta,
        alpha_prime,
        beta_prime,
        opportune: universe.label(opportune).clone(),
        ties: Ties {
            max_mu: tied(max_ties),
            min_nu: tied(min_ties),
            ratio: ratio_tie,
        },
    })
}

/// Aggregates then selects.
pub fn decide(set: &OmegaSet) -> Result<DecisionReport> {
    if set.universe().is_empty() {
        return Err(Error::EmptyUniverse);
    }
    select(&aggregate(set)?)
}

// A zero denominator means no evidence at all; score it 0.
fn ratio(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// Index of the first extreme value and all indices attaining it.
fn first_extreme(
    values: impl Iterator<Item = f64>,
    better: impl Fn(f64, f64) -> bool,
) -> (usize, Vec<usize>) {
    let values: Vec<f64> = values.collect();
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if better(v, values[best]) {
            best = i;
        }
    }
    let ties = values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v == values[best])
        .map(|(i, _)| i)
        .collect();
    (best, ties)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(mu: f64, nu: f64) -> IFValue {
        IFValue::new(mu, nu).unwrap()
    }

    fn agg(pairs: &[(&str, f64, f64)]) -> Aggregate {
        let u = Universe::new(pairs.iter().map(|p| p.0)).unwrap();
        IFSet::from_values(&u, pairs.iter().map(|&(_, m, n)| v(m, n)).collect())
            .unwrap()
            .into()
    }

    #[test]
    fn empty_omega_set_aggregates_to_zero() {
        let e = Universe::new(["x1", "x2"]).unwrap();
        let u = Universe::new(["u1", "u2", "u3"]).unwrap();
        let a = aggregate(&OmegaSet::empty(&e, &u)).unwrap();
        assert!(a.iter().all(|(_, x)| x.mu() == 0.0 && x.nu() == 0.0));
    }

    #[test]
    fn single_full_parameter() {
        let e = Universe::new(["x"]).unwrap();
        let u = Universe::new(["u1", "u2"]).unwrap();
        let a = aggregate(&OmegaSet::universal(&e, &u)).unwrap();
        assert!(a.iter().all(|(_, x)| x == IFValue::FULL));
    }

    #[test]
    fn empty_parameter_space_is_a_domain_error() {
        let e = Universe::new(Vec::<&str>::new()).unwrap();
        let u = Universe::new(["u1"]).unwrap();
        assert!(matches!(
            aggregate(&OmegaSet::empty(&e, &u)),
            Err(Error::EmptyParameterSpace)
        ));
    }

    #[test]
    fn empty_universe_is_a_domain_error() {
        let e = Universe::new(["x1"]).unwrap();
        let u = Universe::new(Vec::<&str>::new()).unwrap();
        assert!(matches!(decide(&OmegaSet::empty(&e, &u)), Err(Error::EmptyUniverse)));
        let a = aggregate(&OmegaSet::empty(&e, &u)).unwrap();
        assert!(matches!(select(&a), Err(Error::EmptyUniverse)));
    }

    #[test]
    fn rejects_constraint_violations() {
        let e = Universe::new(["x1"]).unwrap();
        let u = Universe::new(["u1"]).unwrap();
        let bad = OmegaSet::new_relaxed(&u, IFSet::empty(&e), [("x1", IFSet::universal(&u))]).unwrap();
        assert!(matches!(aggregate(&bad), Err(Error::ConstraintViolation(_))));
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn printed_aggregate_selects_u3() {
        let a = agg(&[
            ("u1", 0.318, 0.057),
            ("u2", 0.248, 0.100),
            ("u3", 0.295, 0.033),
            ("u4", 0.158, 0.115),
            ("u5", 0.203, 0.100),
        ]);
        let r = select(&a).unwrap();
        assert_eq!(r.max_u.as_str(), "u1");
        assert_eq!(r.min_v.as_str(), "u3");
        assert_eq!(r.alpha, 0.057);
        assert_eq!(r.beta, 0.295);
        assert!((r.alpha_prime - 0.848).abs() <= 5e-4);
        assert!((r.beta_prime - 0.899).abs() <= 5e-4);
        assert_eq!(r.opportune.as_str(), "u3");
        assert!(!r.ties.any());
    }

    #[test]
    fn singleton_universe() {
        let r = select(&agg(&[("u1", 0.2, 0.7)])).unwrap();
        assert_eq!(r.max_u.as_str(), "u1");
        assert_eq!(r.min_v.as_str(), "u1");
        assert_eq!(r.opportune.as_str(), "u1");
    }

    #[test]
    fn all_zero_aggregate_falls_to_first_label() {
        let r = select(&agg(&[("b", 0.0, 0.0), ("a", 0.0, 0.0), ("c", 0.0, 0.0)])).unwrap();
        assert_eq!(r.opportune.as_str(), "b");
        assert_eq!(r.alpha_prime, 0.0);
        assert_eq!(r.beta_prime, 0.0);
        assert_eq!(r.ties.max_mu.len(), 3);
        assert_eq!(r.ties.min_nu.len(), 3);
        assert!(r.ties.ratio);
    }

    #[test]
    fn ratio_tie_prefers_earlier_label() {
        // u1 wins on mu, u2 on nu; both ratios are 0.5.
        let r = select(&agg(&[("u1", 0.4, 0.4), ("u2", 0.1, 0.1)])).unwrap();
        assert_eq!(r.max_u.as_str(), "u1");
        assert_eq!(r.min_v.as_str(), "u2");
        assert!(r.ties.ratio);
        assert_eq!(r.opportune.as_str(), "u1");

        let r = select(&agg(&[("u2", 0.1, 0.1), ("u1", 0.4, 0.4)])).unwrap();
        assert_eq!(r.opportune.as_str(), "u2");
    }

    #[test]
    fn higher_alpha_prime_keeps_max_u() {
        let r = select(&agg(&[("u1", 0.6, 0.05), ("u2", 0.1, 0.04)])).unwrap();
        assert!(r.alpha_prime > r.beta_prime);
        assert_eq!(r.opportune.as_str(), "u1");
    }
}
