//! Ω-sets: soft sets whose parameters carry intuitionistic fuzzy degrees.
//!
//! An [`OmegaSet`] pairs an IF set `X` over the parameters with an
//! approximation `ω: E → IF(U)`. A parameter is *in* `X` unless its degree
//! pair is `(0, 1)`, and parameters outside `X` must have an empty
//! approximation. Complements do not preserve that rule, so an Ω-set may be
//! *relaxed*: built without the check. Every algebra operation accepts relaxed
//! operands, and equality ignores the flag.

use crate::error::{Error, Result};
use crate::ifset::{IFSet, IFValue};
use crate::soft::IFSoftSet;
use crate::universe::{Label, ParameterSpace, Universe};

#[derive(Debug, Clone)]
pub struct OmegaSet {
    parameters: ParameterSpace,
    universe: Universe,
    degrees: IFSet,
    omega: Vec<IFSet>,
    relaxed: bool,
}

impl OmegaSet {
    /// Builds an Ω-set from parameter degrees and a sparse approximation.
    ///
    /// Parameters missing from `omega` get the empty set. Fails with
    /// [`Error::ConstraintViolation`] when a parameter outside `X` has a
    /// non-empty approximation.
    pub fn new<I, S>(universe: &Universe, degrees: IFSet, omega: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, IFSet)>,
        S: AsRef<str>,
    {
        let set = Self::new_relaxed(universe, degrees, omega)?;
        if let Some(x) = set.constraint_violations().next() {
            return Err(Error::ConstraintViolation(x.to_string()));
        }
        Ok(OmegaSet {
            relaxed: false,
            ..set
        })
    }

    /// Same as [`OmegaSet::new`] without the structural check.
    pub fn new_relaxed<I, S>(universe: &Universe, degrees: IFSet, omega: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, IFSet)>,
        S: AsRef<str>,
    {
        let parameters = degrees.universe().clone();
        let soft = IFSoftSet::new(&parameters, universe, omega)?;
        let omega = soft.iter().map(|(_, s)| s.clone()).collect();
        Ok(OmegaSet {
            parameters,
            universe: universe.clone(),
            degrees,
            omega,
            relaxed: true,
        })
    }

    /// The empty Ω-set: `X` is empty and every approximation is empty.
    pub fn empty(parameters: &ParameterSpace, universe: &Universe) -> Self {
        OmegaSet {
            parameters: parameters.clone(),
            universe: universe.clone(),
            degrees: IFSet::empty(parameters),
            omega: vec![IFSet::empty(universe); parameters.len()],
            relaxed: false,
        }
    }

    /// The universal Ω-set: every parameter has degree `(1, 0)` and maps to `U`.
    pub fn universal(parameters: &ParameterSpace, universe: &Universe) -> Self {
        OmegaSet {
            parameters: parameters.clone(),
            universe: universe.clone(),
            degrees: IFSet::universal(parameters),
            omega: vec![IFSet::universal(universe); parameters.len()],
            relaxed: false,
        }
    }

    pub fn parameters(&self) -> &ParameterSpace {
        &self.parameters
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// The IF set `X` over the parameters.
    pub fn degrees(&self) -> &IFSet {
        &self.degrees
    }

    pub fn degree(&self, parameter: &str) -> Option<IFValue> {
        self.degrees.get(parameter)
    }

    pub fn omega(&self, parameter: &str) -> Option<&IFSet> {
        self.parameters.index_of(parameter).map(|i| &self.omega[i])
    }

    /// `(label, degree, approximation)` in parameter order.
    pub fn iter(&self) -> impl Iterator<Item = (&Label, IFValue, &IFSet)> + '_ {
        self.degrees
            .iter()
            .zip(&self.omega)
            .map(|((x, d), s)| (x, d, s))
    }

    /// Whether the structural check was skipped when this value was produced.
    pub fn is_relaxed(&self) -> bool {
        self.relaxed
    }

    /// Parameters in `X`, i.e. with a degree other than `(0, 1)`.
    pub fn support(&self) -> impl Iterator<Item = &Label> + '_ {
        self.iter()
            .filter(|(_, d, _)| !d.is_empty_value())
            .map(|(x, _, _)| x)
    }

    /// Parameters outside `X` whose approximation is not empty.
    pub fn constraint_violations(&self) -> impl Iterator<Item = &Label> + '_ {
        self.iter()
            .filter(|(_, d, s)| d.is_empty_value() && !s.is_empty_set())
            .map(|(x, _, _)| x)
    }

    pub fn satisfies_constraint(&self) -> bool {
        self.constraint_violations().next().is_none()
    }

    /// Every approximation is the empty set.
    pub fn is_x_empty(&self) -> bool {
        self.omega.iter().all(IFSet::is_empty_set)
    }

    /// On the support of `X`, degrees are `(1, 0)` and approximations are `U`.
    pub fn is_x_universal(&self) -> bool {
        self.iter()
            .filter(|(_, d, _)| !d.is_empty_value())
            .all(|(_, d, s)| d.is_full_value() && s.is_universal_set())
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty_set() && self.is_x_empty()
    }

    pub fn is_universal(&self) -> bool {
        self.degrees.is_universal_set() && self.is_x_universal()
    }

    /// Drops the parameter degrees, keeping the approximation as a soft set.
    pub fn to_soft_set(&self) -> IFSoftSet {
        IFSoftSet::from_parts(
            self.parameters.clone(),
            self.universe.clone(),
            self.omega.clone(),
        )
    }

    fn check_spaces(&self, other: &OmegaSet) -> Result<()> {
        self.parameters.ensure_same(&other.parameters, "parameter space")?;
        self.universe.ensure_same(&other.universe, "universe")
    }

    pub fn is_subset(&self, other: &OmegaSet) -> Result<bool> {
        self.check_spaces(other)?;
        if !self.degrees.is_subset(&other.degrees)? {
            return Ok(false);
        }
        for (a, b) in self.omega.iter().zip(&other.omega) {
            if !a.is_subset(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of degrees and approximations within the shared tolerance.
    pub fn approx_eq(&self, other: &OmegaSet) -> Result<bool> {
        self.check_spaces(other)?;
        if !self.degrees.approx_eq(&other.degrees)? {
            return Ok(false);
        }
        for (a, b) in self.omega.iter().zip(&other.omega) {
            if !a.approx_eq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Swaps every degree pair. The result is relaxed.
    pub fn complement(&self) -> OmegaSet {
        OmegaSet {
            parameters: self.parameters.clone(),
            universe: self.universe.clone(),
            degrees: self.degrees.complement(),
            omega: self.omega.iter().map(IFSet::complement).collect(),
            relaxed: true,
        }
    }

    pub fn union(&self, other: &OmegaSet) -> Result<OmegaSet> {
        self.combine(other, IFSet::union)
    }

    pub fn intersection(&self, other: &OmegaSet) -> Result<OmegaSet> {
        self.combine(other, IFSet::intersection)
    }

    fn combine(
        &self,
        other: &OmegaSet,
        f: impl Fn(&IFSet, &IFSet) -> Result<IFSet>,
    ) -> Result<OmegaSet> {
        self.check_spaces(other)?;
        let degrees = f(&self.degrees, &other.degrees)?;
        let omega = self
            .omega
            .iter()
            .zip(&other.omega)
            .map(|(a, b)| f(a, b))
            .collect::<Result<Vec<_>>>()?;
        let out = OmegaSet {
            parameters: self.parameters.clone(),
            universe: self.universe.clone(),
            degrees,
            omega,
            relaxed: self.relaxed || other.relaxed,
        };
        debug_assert!(out.relaxed || out.satisfies_constraint());
        Ok(out)
    }
}

/// Exact structural equality; the relaxed flag is ignored.
impl PartialEq for OmegaSet {
    fn eq(&self, other: &Self) -> bool {
        self.parameters == other.parameters
            && self.universe == other.universe
            && self.degrees == other.degrees
            && self.omega == other.omega
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(mu: f64, nu: f64) -> IFValue {
        IFValue::new(mu, nu).unwrap()
    }

    fn set(u: &Universe, pairs: &[(&str, f64, f64)]) -> IFSet {
        IFSet::from_pairs(u, pairs.iter().map(|&(l, m, n)| (l, v(m, n)))).unwrap()
    }

    /// The five-parameter, five-alternative Ω-set used to introduce the notion.
    fn introductory() -> OmegaSet {
        let e = Universe::new(["x1", "x2", "x3", "x4", "x5"]).unwrap();
        let u = Universe::new(["u1", "u2", "u3", "u4", "u5"]).unwrap();
        let x = set(&e, &[("x1", 0.5, 0.2), ("x3", 0.6, 0.3), ("x4", 1.0, 0.0)]);
        OmegaSet::new(
            &u,
            x,
            [
                ("x1", set(&u, &[("u1", 0.7, 0.2), ("u4", 0.5, 0.4)])),
                ("x3", set(&u, &[("u2", 0.4, 0.3), ("u3", 0.8, 0.1), ("u5", 0.6, 0.3)])),
                ("x4", IFSet::universal(&u)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn construction_completes_missing_parameters() {
        let o = introductory();
        assert!(!o.is_relaxed());
        assert!(o.omega("x2").unwrap().is_empty_set());
        assert!(o.omega("x5").unwrap().is_empty_set());
        assert_eq!(o.degree("x5"), Some(IFValue::EMPTY));
        let support: Vec<_> = o.support().map(Label::as_str).collect();
        assert_eq!(support, ["x1", "x3", "x4"]);
    }

    #[test]
    fn all_empty_input_is_the_empty_omega_set() {
        let e = Universe::new(["x1", "x2"]).unwrap();
        let u = Universe::new(["u1"]).unwrap();
        let o = OmegaSet::new(&u, IFSet::empty(&e), Vec::<(&str, IFSet)>::new()).unwrap();
        assert_eq!(o, OmegaSet::empty(&e, &u));
        assert!(o.is_empty());
    }

    #[test]
    fn constraint_violation_names_the_parameter() {
        let e = Universe::new(["x1", "x2"]).unwrap();
        let u = Universe::new(["u1"]).unwrap();
        let x = set(&e, &[("x2", 0.5, 0.5)]);
        let err = OmegaSet::new(&u, x, [("x1", set(&u, &[("u1", 0.3, 0.3)]))]).unwrap_err();
        assert!(matches!(err, Error::ConstraintViolation(ref p) if p == "x1"));
    }

    #[test]
    fn supported_parameter_may_have_empty_approximation() {
        let e = Universe::new(["x1", "x2", "x3", "x4"]).unwrap();
        let u = Universe::new(["u1", "u2", "u3", "u4"]).unwrap();
        let x = set(&e, &[("x2", 0.2, 0.5), ("x3", 0.5, 0.3), ("x4", 1.0, 0.0)]);
        let o = OmegaSet::new(
            &u,
            x,
            [
                ("x2", set(&u, &[("u1", 0.5, 0.4), ("u4", 0.7, 0.3)])),
                ("x4", IFSet::universal(&u)),
            ],
        )
        .unwrap();
        assert!(o.omega("x3").unwrap().is_empty_set());
        assert!(!o.is_x_empty());
    }

    #[test]
    fn x_empty_and_x_universal() {
        let e = Universe::new(["x1", "x2", "x3", "x4"]).unwrap();
        let u = Universe::new(["u1", "u2", "u3", "u4"]).unwrap();

        let y = set(&e, &[("x1", 1.0, 0.0), ("x4", 0.7, 0.2)]);
        let oy = OmegaSet::new(&u, y, Vec::<(&str, IFSet)>::new()).unwrap();
        assert!(oy.is_x_empty());
        assert!(!oy.is_empty());

        let z = set(&e, &[("x1", 1.0, 0.0), ("x2", 1.0, 0.0)]);
        let oz = OmegaSet::new(
            &u,
            z,
            [("x1", IFSet::universal(&u)), ("x2", IFSet::universal(&u))],
        )
        .unwrap();
        assert!(oz.is_x_universal());
        assert!(!oz.is_universal());

        let full = OmegaSet::new(
            &u,
            IFSet::universal(&e),
            e.labels().iter().map(|x| (x.as_str(), IFSet::universal(&u))),
        )
        .unwrap();
        assert_eq!(full, OmegaSet::universal(&e, &u));
        assert!(full.is_universal());

        let phi = OmegaSet::empty(&e, &u);
        assert!(phi.is_x_empty());
        assert!(phi.is_x_universal());
    }

    #[test]
    fn subset_examples() {
        let e = Universe::new(["x1"]).unwrap();
        let u = Universe::new(["u1"]).unwrap();
        let a = OmegaSet::new(&u, set(&e, &[("x1", 0.3, 0.6)]), [("x1", set(&u, &[("u1", 0.2, 0.7)]))]).unwrap();
        let b = OmegaSet::new(&u, set(&e, &[("x1", 0.5, 0.4)]), [("x1", set(&u, &[("u1", 0.4, 0.5)]))]).unwrap();
        assert!(a.is_subset(&b).unwrap());
        assert!(!b.is_subset(&a).unwrap());
        assert!(a.is_subset(&a).unwrap());
        assert!(OmegaSet::empty(&e, &u).is_subset(&a).unwrap());
        assert!(a.is_subset(&OmegaSet::universal(&e, &u)).unwrap());
    }

    #[test]
    fn equality() {
        let o = introductory();
        assert!(o.approx_eq(&o).unwrap());
        let phi = OmegaSet::empty(o.parameters(), o.universe());
        let full = OmegaSet::universal(o.parameters(), o.universe());
        assert!(!phi.approx_eq(&full).unwrap());
    }

    #[test]
    fn complement_examples() {
        let e = Universe::new(["x1"]).unwrap();
        let u = Universe::new(["u1"]).unwrap();
        let a = OmegaSet::new(&u, set(&e, &[("x1", 0.7, 0.2)]), [("x1", set(&u, &[("u1", 0.4, 0.3)]))]).unwrap();
        let c = a.complement();
        assert!(c.is_relaxed());
        assert_eq!(c.degree("x1"), Some(v(0.2, 0.7)));
        assert_eq!(c.omega("x1").unwrap().get("u1"), Some(v(0.3, 0.4)));
        assert_eq!(c.complement(), a);
        assert_eq!(OmegaSet::empty(&e, &u).complement(), OmegaSet::universal(&e, &u));
    }

    #[test]
    fn complement_can_break_the_constraint() {
        let e = Universe::new(["x1"]).unwrap();
        let u = Universe::new(["u1"]).unwrap();
        let a = OmegaSet::new(&u, set(&e, &[("x1", 1.0, 0.0)]), [("x1", set(&u, &[("u1", 0.4, 0.3)]))]).unwrap();
        let c = a.complement();
        assert!(!c.satisfies_constraint());
        assert_eq!(c.constraint_violations().map(Label::as_str).collect::<Vec<_>>(), ["x1"]);
    }

    #[test]
    fn union_intersection_examples() {
        let e = Universe::new(["x1"]).unwrap();
        let u = Universe::new(["u1"]).unwrap();
        let a = OmegaSet::new(&u, set(&e, &[("x1", 0.5, 0.2)]), [("x1", set(&u, &[("u1", 0.7, 0.2)]))]).unwrap();
        let b = OmegaSet::new(&u, set(&e, &[("x1", 0.6, 0.3)]), [("x1", set(&u, &[("u1", 0.4, 0.3)]))]).unwrap();

        let j = a.union(&b).unwrap();
        assert_eq!(j.degree("x1"), Some(v(0.6, 0.2)));
        assert_eq!(j.omega("x1").unwrap().get("u1"), Some(v(0.7, 0.2)));
        assert!(!j.is_relaxed());

        let m = a.intersection(&b).unwrap();
        assert_eq!(m.degree("x1"), Some(v(0.5, 0.3)));
        assert_eq!(m.omega("x1").unwrap().get("u1"), Some(v(0.4, 0.3)));

        let phi = OmegaSet::empty(&e, &u);
        let full = OmegaSet::universal(&e, &u);
        assert_eq!(a.union(&phi).unwrap(), a);
        assert_eq!(a.union(&full).unwrap(), full);
        assert_eq!(a.intersection(&full).unwrap(), a);
        assert_eq!(a.intersection(&phi).unwrap(), phi);
    }

    #[test]
    fn relaxed_flag_propagates() {
        let o = introductory();
        assert!(o.union(&o.complement()).unwrap().is_relaxed());
    }

    #[test]
    fn complementation_laws_fail_on_the_half_half_witness() {
        let e = Universe::new(["x1"]).unwrap();
        let u = Universe::new(["u1"]).unwrap();
        let o = OmegaSet::new(&u, set(&e, &[("x1", 0.5, 0.5)]), [("x1", set(&u, &[("u1", 0.5, 0.5)]))]).unwrap();
        assert_ne!(o.union(&o.complement()).unwrap(), OmegaSet::universal(&e, &u));
        assert_ne!(o.intersection(&o.complement()).unwrap(), OmegaSet::empty(&e, &u));
    }

    #[test]
    fn soft_set_view_drops_degrees() {
        let o = introductory();
        let s = o.to_soft_set();
        assert_eq!(s.gamma("x3"), o.omega("x3"));
        assert_eq!(s.carrier().count(), 3);
    }
}
