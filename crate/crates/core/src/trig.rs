//! Finite cosecant power sums `Σ_{j=1}^{m-1} csc^p(jπ/m)` for `p ∈ {2, 4}`.

use std::f64::consts::PI;

use crate::{Error, Rational, Result};

fn check_order(m: u32) -> Result<i64> {
    if m < 1 {
        return Err(Error::Domain(format!("order {m} < 1")));
    }
    Ok(i64::from(m))
}

/// `Σ csc²(jπ/m) = (m² − 1)/3`.
pub fn cosecant2_sum(m: u32) -> Result<Rational> {
    let m = check_order(m)?;
    Ok(Rational::new(m * m - 1, 3))
}

/// `Σ csc⁴(jπ/m) = (m⁴ + 10m² − 11)/45`.
pub fn cosecant4_sum(m: u32) -> Result<Rational> {
    let m = check_order(m)?;
    let m2 = m * m;
    Ok(Rational::new(m2 * m2 + 10 * m2 - 11, 45))
}

/// Closed form for `power ∈ {2, 4}`.
pub fn cosecant_sum(m: u32, power: u32) -> Result<Rational> {
    match power {
        2 => cosecant2_sum(m),
        4 => cosecant4_sum(m),
        p => Err(Error::Domain(format!("unsupported cosecant power {p}"))),
    }
}

/// Direct floating-point evaluation of the sum, used as an oracle for the
/// closed forms. Terms are accumulated with Neumaier compensation.
pub fn cosecant_sum_numeric(m: u32, power: u32) -> f64 {
    let mut acc = NeumaierSum::default();
    let mf = f64::from(m);
    for j in 1..m {
        let s = (f64::from(j) * PI / mf).sin();
        acc.add(s.powi(-(power as i32)));
    }
    acc.total()
}

/// Compensated (Kahan–Babuška–Neumaier) accumulator.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierSum {
    sum: f64,
    carry: f64,
}

impl NeumaierSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::default();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}
