#![allow(dead_code)]

use ifp_core::{IFSet, IFValue, OmegaSet, Universe};
use rand::Rng;

/// Plain description of an Ω-set: per parameter, its degree pair and one
/// pair per alternative. Kept independent of the library representation so
/// oracles can read it directly.
#[derive(Debug, Clone)]
pub struct RawOmega {
    pub degrees: Vec<(f64, f64)>,
    pub omega: Vec<Vec<(f64, f64)>>,
}

impl RawOmega {
    pub fn build(&self, e: &Universe, u: &Universe) -> OmegaSet {
        let pair = |&(m, n): &(f64, f64)| IFValue::new(m, n).unwrap();
        let degrees = IFSet::from_values(e, self.degrees.iter().map(pair).collect()).unwrap();
        let omega = e.labels().iter().zip(&self.omega).map(|(x, row)| {
            (
                x.as_str(),
                IFSet::from_values(u, row.iter().map(pair).collect()).unwrap(),
            )
        });
        OmegaSet::new(u, degrees, omega).unwrap()
    }
}

pub fn spaces(n_params: usize, n_alts: usize) -> (Universe, Universe) {
    (
        Universe::new((1..=n_params).map(|i| format!("x{i}"))).unwrap(),
        Universe::new((1..=n_alts).map(|i| format!("u{i}"))).unwrap(),
    )
}

/// A pair `(i/steps, j/steps)` with `i + j <= steps`.
pub fn grid_pair(rng: &mut impl Rng, steps: u32) -> (f64, f64) {
    let i = rng.gen_range(0..=steps);
    let j = rng.gen_range(0..=steps - i);
    (i as f64 / steps as f64, j as f64 / steps as f64)
}

/// A constraint-satisfying Ω-set on the grid with `steps` subdivisions.
/// About a third of the parameters fall outside `X` and a third of the
/// alternatives are left at `(0, 1)`.
pub fn random_raw(rng: &mut impl Rng, n_params: usize, n_alts: usize, steps: u32) -> RawOmega {
    let mut degrees = Vec::with_capacity(n_params);
    let mut omega = Vec::with_capacity(n_params);
    for _ in 0..n_params {
        let d = if rng.gen_bool(0.3) { (0.0, 1.0) } else { grid_pair(rng, steps) };
        let row = (0..n_alts)
            .map(|_| {
                if d == (0.0, 1.0) || rng.gen_bool(0.3) {
                    (0.0, 1.0)
                } else {
                    grid_pair(rng, steps)
                }
            })
            .collect();
        degrees.push(d);
        omega.push(row);
    }
    RawOmega { degrees, omega }
}

pub fn random_omega(rng: &mut impl Rng, e: &Universe, u: &Universe, steps: u32) -> OmegaSet {
    random_raw(rng, e.len(), u.len(), steps).build(e, u)
}

/// Longhand evaluation of the aggregate straight from the raw description:
/// per alternative, the degree-weighted sums over parameters in `X`, divided
/// by the number of parameters.
pub fn aggregate_oracle(raw: &RawOmega, n_alts: usize) -> Vec<(f64, f64)> {
    let n_params = raw.degrees.len() as f64;
    let mut out = Vec::new();
    for u in 0..n_alts {
        let mut mu_sum = 0.0;
        let mut nu_sum = 0.0;
        for (x, &(dm, dn)) in raw.degrees.iter().enumerate() {
            if dm == 0.0 && dn == 1.0 {
                continue;
            }
            let (m, n) = raw.omega[x][u];
            mu_sum += dm * m;
            nu_sum += dn * n;
        }
        out.push((mu_sum / n_params, nu_sum / n_params));
    }
    out
}
