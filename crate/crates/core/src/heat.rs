//! Small-time heat-trace coefficients of closed 2-orbifolds.
//!
//! For a closed Riemannian 2-orbifold the trace of the heat kernel behaves
//! as
//!
//! ```text
//! Σ e^{-λ t} ~ c₋₁ t⁻¹ + c₋½ t^{-1/2} + c₀ + c½ t^{1/2} + c₁ t + …
//! ```
//!
//! with the `(4πt)^{-1}` normalization folded into the coefficients. Each
//! singular stratum `N` contributes its local integral weighted by
//! `1/|Iso(N)|`: `1/m` for a cone point of order `m`, `1/(2n)` for a corner
//! reflector of order `n`, `1/2` along mirror edges.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::trig::{cosecant2_sum, cosecant4_sum};
use crate::{Error, OrbifoldSignature, Rational, Result};

const GAUSS_BONNET_RTOL: f64 = 1e-12;

/// Constant-curvature metric data on an orbifold.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricData {
    /// Sectional curvature, positive on the round sphere.
    pub curvature: f64,
    pub area: f64,
    /// Total length of the mirror locus.
    pub mirror_length: f64,
    /// `∫ τ` over the mirror locus (τ = scalar curvature = 2K).
    pub mirror_scalar_integral: f64,
}

impl MetricData {
    /// Constant curvature `curvature`; the scalar-curvature integral over
    /// the mirror defaults to `2·K·L`.
    pub fn new(curvature: f64, area: f64, mirror_length: f64) -> Result<Self> {
        if !(area.is_finite() && area > 0.0) {
            return Err(Error::InvalidMetric(format!("area must be positive, got {area}")));
        }
        if !(mirror_length.is_finite() && mirror_length >= 0.0) {
            return Err(Error::InvalidMetric(format!(
                "mirror length must be non-negative, got {mirror_length}"
            )));
        }
        if !curvature.is_finite() {
            return Err(Error::InvalidMetric("curvature must be finite".into()));
        }
        Ok(MetricData {
            curvature,
            area,
            mirror_length,
            mirror_scalar_integral: 2.0 * curvature * mirror_length,
        })
    }

    /// Metric of constant curvature `K ≠ 0` with the Gauss–Bonnet area
    /// `2πχ/K`.
    pub fn gauss_bonnet(sig: &OrbifoldSignature, curvature: f64, mirror_length: f64) -> Result<Self> {
        if curvature == 0.0 {
            return Err(Error::InvalidMetric(
                "area is not determined by χ when the curvature is zero".into(),
            ));
        }
        let area = 2.0 * PI * sig.euler_characteristic().to_f64() / curvature;
        if area <= 0.0 {
            return Err(Error::GaussBonnetViolation {
                area,
                expected: area,
            });
        }
        Self::new(curvature, area, mirror_length)
    }

    /// Replaces the mirror scalar-curvature integral (for metrics whose
    /// curvature is not constant along the mirror).
    pub fn with_mirror_scalar_integral(mut self, integral: f64) -> Self {
        self.mirror_scalar_integral = integral;
        self
    }

    /// Checks Gauss–Bonnet (`K·area = 2πχ`) and that mirror length is only
    /// assigned to signatures with mirrors.
    pub fn check_against(&self, sig: &OrbifoldSignature) -> Result<()> {
        let expected = 2.0 * PI * sig.euler_characteristic().to_f64();
        let total = self.curvature * self.area;
        let scale = expected.abs().max(f64::MIN_POSITIVE);
        let consistent = if expected == 0.0 {
            self.curvature == 0.0
        } else {
            (total - expected).abs() <= GAUSS_BONNET_RTOL * scale
        };
        if !consistent {
            return Err(Error::GaussBonnetViolation {
                area: self.area,
                expected: if self.curvature == 0.0 {
                    f64::INFINITY
                } else {
                    expected / self.curvature
                },
            });
        }
        if !sig.has_mirrors() && self.mirror_length != 0.0 {
            return Err(Error::InvalidMetric(format!(
                "mirror length {} on a signature without mirrors",
                self.mirror_length
            )));
        }
        Ok(())
    }
}

/// Exponent of `t` in the expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Degree {
    #[serde(rename = "-1")]
    MinusOne,
    #[serde(rename = "-0.5")]
    MinusHalf,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "0.5")]
    Half,
    #[serde(rename = "1")]
    One,
}

impl Degree {
    pub const ALL: [Degree; 5] = [
        Degree::MinusOne,
        Degree::MinusHalf,
        Degree::Zero,
        Degree::Half,
        Degree::One,
    ];

    pub fn exponent(self) -> f64 {
        match self {
            Degree::MinusOne => -1.0,
            Degree::MinusHalf => -0.5,
            Degree::Zero => 0.0,
            Degree::Half => 0.5,
            Degree::One => 1.0,
        }
    }

    pub fn from_exponent(e: f64) -> Option<Degree> {
        Degree::ALL.into_iter().find(|d| d.exponent() == e)
    }

    pub fn label(self) -> &'static str {
        match self {
            Degree::MinusOne => "-1",
            Degree::MinusHalf => "-0.5",
            Degree::Zero => "0",
            Degree::Half => "0.5",
            Degree::One => "1",
        }
    }
}

/// Leading coefficients of the heat-trace expansion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeatExpansion {
    #[serde(rename = "deg_-1")]
    pub minus_one: f64,
    #[serde(rename = "deg_-0.5")]
    pub minus_half: f64,
    #[serde(rename = "deg_0")]
    pub zero: Rational,
    #[serde(rename = "deg_0.5")]
    pub half: f64,
    #[serde(rename = "deg_1")]
    pub one: f64,
}

impl HeatExpansion {
    pub fn coefficient(&self, degree: Degree) -> f64 {
        match degree {
            Degree::MinusOne => self.minus_one,
            Degree::MinusHalf => self.minus_half,
            Degree::Zero => self.zero.to_f64(),
            Degree::Half => self.half,
            Degree::One => self.one,
        }
    }

    /// Truncated series `Σ c_d t^d`.
    pub fn evaluate(&self, t: f64) -> f64 {
        Degree::ALL
            .iter()
            .map(|&d| self.coefficient(d) * t.powf(d.exponent()))
            .sum()
    }
}

fn cone_range(m: u32, j: u32) -> Result<()> {
    if m < 2 || j < 1 || j >= m {
        return Err(Error::Domain(format!("need 2 ≤ m and 1 ≤ j < m, got m={m}, j={j}")));
    }
    Ok(())
}

/// Fixed-point coefficient `b₀(γʲ) = |det (I − A)^{-1}| = 1/(4 sin²(jπ/m))`
/// for the rotation by `2πj/m` at a cone point.
pub fn cone_b0(m: u32, j: u32) -> Result<f64> {
    cone_range(m, j)?;
    let s = (f64::from(j) * PI / f64::from(m)).sin();
    Ok(1.0 / (4.0 * s * s))
}

/// `b₁(γʲ) = R₁₂₁₂ / (8 sin⁴(jπ/m))` with `R₁₂₁₂ = K`.
pub fn cone_b1(m: u32, j: u32, curvature: f64) -> Result<f64> {
    cone_range(m, j)?;
    let s = (f64::from(j) * PI / f64::from(m)).sin();
    Ok(curvature / (8.0 * s.powi(4)))
}

/// Leading term of the cone-point integral, `Σ_j b₀(γʲ) = (m² − 1)/12`.
pub fn cone_i0(m: u32) -> Result<Rational> {
    Ok(cosecant2_sum(m)? * Rational::new(1, 4))
}

/// `Σ_j csc⁴(jπ/m)/8 = (m⁴ + 10m² − 11)/360`, the curvature-free part of
/// `Σ_j b₁(γʲ)`.
fn cone_i1_per_unit_curvature(m: u32) -> Rational {
    cosecant4_sum(m).expect("order ≥ 1") * Rational::new(1, 8)
}

/// Degree-zero coefficient `χ/6 + Σ (m²−1)/(12m) + Σ (n²−1)/(24n)`.
pub fn degree_zero_term(sig: &OrbifoldSignature) -> Rational {
    let chi = sig.euler_characteristic() * Rational::new(1, 6);
    let cones: Rational = sig
        .cone_points()
        .iter()
        .map(|&m| cone_i0(m).expect("order ≥ 2") * Rational::new(1, i64::from(m)))
        .sum();
    let corners: Rational = sig
        .corner_orders()
        .map(|n| cone_i0(n).expect("order ≥ 2") * Rational::new(1, 2 * i64::from(n)))
        .sum();
    chi + cones + corners
}

/// The invariant `c = 12 · (degree-zero coefficient)`; depends only on the
/// topology.
pub fn spectral_c(sig: &OrbifoldSignature) -> Rational {
    degree_zero_term(sig) * Rational::from(12)
}

/// `vol/(4π)`.
pub fn coefficient_minus_one(metric: &MetricData) -> f64 {
    metric.area / (4.0 * PI)
}

/// `length(mirror)/(8√π)`.
pub fn coefficient_minus_half(metric: &MetricData) -> f64 {
    metric.mirror_length / (8.0 * PI.sqrt())
}

/// `(1/(64√π)) ∫_mirror τ`.
pub fn coefficient_half(metric: &MetricData) -> f64 {
    metric.mirror_scalar_integral / (64.0 * PI.sqrt())
}

/// `Σ (m⁴+10m²−11)/(360m) + Σ (n⁴+10n²−11)/(720n)`: the degree-one point
/// contributions per unit curvature.
pub fn point_curvature_weight(sig: &OrbifoldSignature) -> Rational {
    let cones: Rational = sig
        .cone_points()
        .iter()
        .map(|&m| cone_i1_per_unit_curvature(m) * Rational::new(1, i64::from(m)))
        .sum();
    let corners: Rational = sig
        .corner_orders()
        .map(|n| cone_i1_per_unit_curvature(n) * Rational::new(1, 2 * i64::from(n)))
        .sum();
    cones + corners
}

/// `a₂ = (1/360) ∫ (2|R|² − 2|ρ|² + 5τ²)`, which is `K²·area/15` at
/// constant curvature.
pub fn a2_constant_curvature(curvature: f64, area: f64) -> f64 {
    curvature * curvature * area / 15.0
}

/// Degree-one coefficient `a₂/(4π) + K · point_curvature_weight`.
pub fn coefficient_one(sig: &OrbifoldSignature, metric: &MetricData) -> f64 {
    a2_constant_curvature(metric.curvature, metric.area) / (4.0 * PI)
        + metric.curvature * point_curvature_weight(sig).to_f64()
}

/// All five leading coefficients.
pub fn full_expansion(sig: &OrbifoldSignature, metric: &MetricData) -> Result<HeatExpansion> {
    metric.check_against(sig)?;
    Ok(HeatExpansion {
        minus_one: coefficient_minus_one(metric),
        minus_half: coefficient_minus_half(metric),
        zero: degree_zero_term(sig),
        half: coefficient_half(metric),
        one: coefficient_one(sig, metric),
    })
}

/// Whether half-integer powers of `t` appear. In dimension two the mirror
/// edges are the only odd-dimensional strata.
pub fn has_half_integer_terms(sig: &OrbifoldSignature) -> bool {
    sig.has_mirrors()
}
