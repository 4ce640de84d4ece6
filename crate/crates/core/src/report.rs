//! Rendering of [`DecisionReport`]s.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::decision::DecisionReport;

/// Rounds half away from zero at `digits` decimals.
///
/// The scaled value is first snapped to 1e-6 so that decimal ties such as
/// `0.0325` round up even when their binary form sits just below the tie.
pub fn round_half_up(x: f64, digits: u32) -> f64 {
    let scale = 10f64.powi(digits as i32);
    let scaled = (x * scale * 1e6).round() / 1e6;
    scaled.round() / scale
}

pub fn format_fixed(x: f64, digits: u32) -> String {
    format!("{:.*}", digits as usize, round_half_up(x, digits))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateRow {
    pub label: String,
    pub mu_star: f64,
    pub nu_star: f64,
    /// `[mu_star, nu_star]` at display precision.
    pub display: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Extreme {
    pub label: String,
    pub value: f64,
    pub display: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TieRecord {
    pub max_mu: Vec<String>,
    pub min_nu: Vec<String>,
    pub ratio: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scalar {
    pub value: f64,
    pub display: String,
}

/// Machine-readable decision report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub aggregate: Vec<AggregateRow>,
    pub max_u: Extreme,
    pub min_v: Extreme,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub alpha_prime: Scalar,
    pub beta_prime: Scalar,
    pub opportune: String,
    pub ties: TieRecord,
    pub precision: u32,
}

impl ReportFile {
    pub fn new(report: &DecisionReport, precision: u32) -> Self {
        let fmt = |x: f64| format_fixed(x, precision);
        let scalar = |x: f64| Scalar {
            value: x,
            display: fmt(x),
        };
        let names = |v: &[crate::Label]| v.iter().map(|l| l.to_string()).collect();
        ReportFile {
            aggregate: report
                .aggregate
                .iter()
                .map(|(label, v)| AggregateRow {
                    label: label.to_string(),
                    mu_star: v.mu(),
                    nu_star: v.nu(),
                    display: [fmt(v.mu()), fmt(v.nu())],
                })
                .collect(),
            max_u: Extreme {
                label: report.max_u.to_string(),
                value: report.max_mu,
                display: fmt(report.max_mu),
            },
            min_v: Extreme {
                label: report.min_v.to_string(),
                value: report.min_nu,
                display: fmt(report.min_nu),
            },
            alpha: scalar(report.alpha),
            beta: scalar(report.beta),
            alpha_prime: scalar(report.alpha_prime),
            beta_prime: scalar(report.beta_prime),
            opportune: report.opportune.to_string(),
            ties: TieRecord {
                max_mu: names(&report.ties.max_mu),
                min_nu: names(&report.ties.min_nu),
                ratio: report.ties.ratio,
            },
            precision,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports always serialize");
        out.push('\n');
        out
    }

    pub fn to_table(&self) -> String {
        let width = self
            .aggregate
            .iter()
            .map(|r| r.label.len())
            .chain(std::iter::once("alternative".len()))
            .max()
            .unwrap_or(0);
        let mut s = String::new();
        let _ = writeln!(s, "{:<width$}  {:>10}  {:>10}", "alternative", "mu*", "nu*");
        for row in &self.aggregate {
            let _ = writeln!(
                s,
                "{:<width$}  {:>10}  {:>10}",
                row.label, row.display[0], row.display[1]
            );
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "max(u)   = {} at {}", self.max_u.display, self.max_u.label);
        let _ = writeln!(s, "min(v)   = {} at {}", self.min_v.display, self.min_v.label);
        let _ = writeln!(s, "alpha    = {}", self.alpha.display);
        let _ = writeln!(s, "beta     = {}", self.beta.display);
        let _ = writeln!(s, "alpha'   = {}", self.alpha_prime.display);
        let _ = writeln!(s, "beta'    = {}", self.beta_prime.display);
        let _ = writeln!(s, "opportune: {}", self.opportune);
        if !self.ties.max_mu.is_empty() {
            let _ = writeln!(s, "tie at max(u): {}", self.ties.max_mu.join(", "));
        }
        if !self.ties.min_nu.is_empty() {
            let _ = writeln!(s, "tie at min(v): {}", self.ties.min_nu.join(", "));
        }
        if self.ties.ratio {
            let _ = writeln!(s, "tie: alpha' = beta', earlier label chosen");
        }
        s
    }
}
