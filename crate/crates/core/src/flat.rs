//! Exact heat traces of flat quotients of the unit square torus `ℝ²/ℤ²`,
//! and least-squares recovery of their small-time coefficients.
//!
//! The torus eigenfunctions are the characters `e^{2πi(kx+ly)}` with
//! eigenvalue `4π²(k²+l²)`. A quotient by a finite group of isometries keeps
//! the invariant combinations, so every trace below is a polynomial in the
//! one-dimensional theta sum `θ(t) = Σ_k e^{-4π²k²t}`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::heat::{full_expansion, Degree, MetricData};
use crate::trig::NeumaierSum;
use crate::{parse, Error, OrbifoldSignature, Result};

/// Truncation tolerance used by [`heat_trace`]; below `f64` resolution.
pub const THETA_EPS: f64 = 1e-18;

/// Flat orbifolds realized as quotients of the unit square torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlatModel {
    Torus,
    KleinBottle,
    Pillowcase,
    Square,
    MirrorTorus,
}

impl FlatModel {
    pub const ALL: [FlatModel; 5] = [
        FlatModel::Torus,
        FlatModel::KleinBottle,
        FlatModel::Pillowcase,
        FlatModel::Square,
        FlatModel::MirrorTorus,
    ];

    pub fn area(self) -> f64 {
        match self {
            FlatModel::Torus => 1.0,
            FlatModel::KleinBottle | FlatModel::Pillowcase | FlatModel::MirrorTorus => 0.5,
            FlatModel::Square => 0.25,
        }
    }

    pub fn mirror_length(self) -> f64 {
        match self {
            FlatModel::Square | FlatModel::MirrorTorus => 2.0,
            _ => 0.0,
        }
    }

    pub fn notation(self) -> &'static str {
        match self {
            FlatModel::Torus => "o",
            FlatModel::KleinBottle => "××",
            FlatModel::Pillowcase => "2,2,2,2",
            FlatModel::Square => "*2,2,2,2",
            FlatModel::MirrorTorus => "*,*",
        }
    }

    pub fn signature(self) -> OrbifoldSignature {
        parse(self.notation()).expect("built-in notation parses")
    }

    pub fn metric(self) -> MetricData {
        MetricData::new(0.0, self.area(), self.mirror_length()).expect("valid flat metric")
    }

    /// Deck group acting on `ℝ²/ℤ²`.
    pub fn deck_group(self) -> &'static [Isometry] {
        const ID: Isometry = Isometry::new([[1, 0], [0, 1]], [0, 0]);
        const NEG: Isometry = Isometry::new([[-1, 0], [0, -1]], [0, 0]);
        const FLIP_X: Isometry = Isometry::new([[-1, 0], [0, 1]], [0, 0]);
        const FLIP_Y: Isometry = Isometry::new([[1, 0], [0, -1]], [0, 0]);
        const GLIDE: Isometry = Isometry::new([[1, 0], [0, -1]], [1, 0]);
        match self {
            FlatModel::Torus => &[ID],
            FlatModel::KleinBottle => &[ID, GLIDE],
            FlatModel::Pillowcase => &[ID, NEG],
            FlatModel::Square => &[ID, FLIP_X, FLIP_Y, NEG],
            FlatModel::MirrorTorus => &[ID, FLIP_X],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FlatModel::Torus => "torus",
            FlatModel::KleinBottle => "klein-bottle",
            FlatModel::Pillowcase => "pillowcase",
            FlatModel::Square => "square",
            FlatModel::MirrorTorus => "mirror-torus",
        }
    }
}

impl fmt::Display for FlatModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FlatModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "torus" => FlatModel::Torus,
            "klein" | "klein-bottle" | "kleinbottle" => FlatModel::KleinBottle,
            "pillowcase" | "pillow" => FlatModel::Pillowcase,
            "square" => FlatModel::Square,
            "mirror-torus" | "mirrortorus" | "*torus" => FlatModel::MirrorTorus,
            other => return Err(Error::Domain(format!("unknown flat model `{other}`"))),
        })
    }
}

/// Affine isometry `x ↦ A x + b` of the torus, with `b` stored as `2b` so
/// half-translations stay integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Isometry {
    pub linear: [[i64; 2]; 2],
    pub twice_shift: [i64; 2],
}

impl Isometry {
    pub const fn new(linear: [[i64; 2]; 2], twice_shift: [i64; 2]) -> Self {
        Isometry {
            linear,
            twice_shift,
        }
    }

    /// Trace contribution of the pullback on the character `v`: the pullback
    /// sends `χ_v` to `e^{2πi v·b} χ_{Aᵀv}`, so it contributes `±1` when
    /// `Aᵀv = v` and nothing otherwise.
    fn character_trace(&self, v: [i64; 2]) -> i64 {
        let a = self.linear;
        let image = [a[0][0] * v[0] + a[1][0] * v[1], a[0][1] * v[0] + a[1][1] * v[1]];
        if image != v {
            return 0;
        }
        let phase = v[0] * self.twice_shift[0] + v[1] * self.twice_shift[1];
        if phase.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

/// `Σ_{k∈ℤ} e^{-4π²k²t}`, truncated once a geometric bound on all omitted
/// terms falls below `eps`. The sum is at least 1, so the first omitted term
/// is also below `eps` times the running sum.
pub fn theta1(t: f64, eps: f64) -> f64 {
    assert!(t > 0.0, "theta1 needs t > 0");
    let mut acc = NeumaierSum::default();
    acc.add(1.0);
    let q = 4.0 * PI * PI * t;
    let mut k = 1.0f64;
    loop {
        let term = 2.0 * (-q * k * k).exp();
        // Consecutive ratios beyond k are at most e^{-q(2k+1)}.
        let tail = term / -(-q * (2.0 * k + 1.0)).exp_m1();
        if tail < eps {
            break;
        }
        acc.add(term);
        k += 1.0;
    }
    acc.total()
}

/// Closed-form heat trace `Σ e^{-λt}` of the model.
pub fn heat_trace(model: FlatModel, t: f64) -> f64 {
    let th = theta1(t, THETA_EPS);
    let th2 = th * th;
    match model {
        FlatModel::Torus => th2,
        FlatModel::KleinBottle => theta1(4.0 * t, THETA_EPS) + (th2 - th) / 2.0,
        FlatModel::Pillowcase => (th2 + 1.0) / 2.0,
        FlatModel::Square => {
            let h = (th + 1.0) / 2.0;
            h * h
        }
        FlatModel::MirrorTorus => (th2 + th) / 2.0,
    }
}

/// Eigenvalue multiplicities, keyed by `k² + l²` (eigenvalue `4π²(k²+l²)`),
/// for all shells with `k² + l² ≤ max_norm`. Computed by averaging the
/// deck-group characters over each torus eigenspace.
pub fn invariant_multiplicities(model: FlatModel, max_norm: u64) -> BTreeMap<u64, u64> {
    let group = model.deck_group();
    let r = (max_norm as f64).sqrt().floor() as i64 + 1;
    let mut traces: BTreeMap<u64, i64> = BTreeMap::new();
    for k in -r..=r {
        for l in -r..=r {
            let norm = (k * k + l * l) as u64;
            if norm > max_norm {
                continue;
            }
            let tr: i64 = group.iter().map(|g| g.character_trace([k, l])).sum();
            *traces.entry(norm).or_default() += tr;
        }
    }
    let order = group.len() as i64;
    traces
        .into_iter()
        .filter_map(|(norm, tr)| {
            assert_eq!(tr % order, 0, "character average must be integral");
            let mult = tr / order;
            (mult > 0).then_some((norm, mult as u64))
        })
        .collect()
}

/// Independent oracle for [`heat_trace`]: explicit enumeration of invariant
/// eigenfunctions with eigenvalue at most `cutoff`.
pub fn brute_force_trace(model: FlatModel, t: f64, cutoff: f64) -> f64 {
    let max_norm = (cutoff / (4.0 * PI * PI) + 1e-9).floor() as u64;
    invariant_multiplicities(model, max_norm)
        .into_iter()
        .map(|(norm, mult)| mult as f64 * (-4.0 * PI * PI * norm as f64 * t).exp())
        .collect::<NeumaierSum>()
        .total()
}

/// `(t, trace)` pairs with `t` strictly decreasing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceSamples {
    samples: Vec<Sample>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub t: f64,
    pub value: f64,
}

impl TraceSamples {
    pub fn new(samples: Vec<Sample>) -> Result<Self> {
        for s in &samples {
            if !(s.t.is_finite() && s.t > 0.0) || !s.value.is_finite() {
                return Err(Error::InvalidSamples(format!("bad sample {s:?}")));
            }
        }
        if samples.windows(2).any(|w| w[1].t >= w[0].t) {
            return Err(Error::InvalidSamples("t must be strictly decreasing".into()));
        }
        Ok(TraceSamples { samples })
    }

    /// Samples the model's exact trace on `grid`.
    pub fn from_model(model: FlatModel, grid: &[f64]) -> Result<Self> {
        Self::new(
            grid.iter()
                .map(|&t| Sample {
                    t,
                    value: heat_trace(model, t),
                })
                .collect(),
        )
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for s in &self.samples {
            w.serialize(s).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("ascii")
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let samples = r
            .deserialize()
            .collect::<std::result::Result<Vec<Sample>, _>>()
            .map_err(|e| Error::InvalidSamples(e.to_string()))?;
        Self::new(samples)
    }
}

/// Geometric grid `t_i = start · ratio^i`.
pub fn geometric_grid(start: f64, ratio: f64, count: usize) -> Vec<f64> {
    (0..count).map(|i| start * ratio.powi(i as i32)).collect()
}

/// The fitting grid `1e-2 · 0.7^i`, twelve samples.
pub fn default_grid() -> Vec<f64> {
    geometric_grid(1e-2, 0.7, 12)
}

/// Coefficients fitted to leading powers of `t` that the flat models carry.
pub const FLAT_FIT_DEGREES: [Degree; 3] = [Degree::MinusOne, Degree::MinusHalf, Degree::Zero];

/// Condition number (after column scaling) beyond which a fit is refused.
pub const MAX_CONDITION: f64 = 1e12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FitResult {
    pub coefficients: BTreeMap<Degree, f64>,
    /// Euclidean norm of the residual vector.
    pub residual: f64,
    pub condition: f64,
}

/// Least-squares fit of `value_i = Σ_d c_d t_i^d`, solved by SVD of the
/// column-scaled design matrix.
pub fn fit_expansion(samples: &TraceSamples, degrees: &[Degree]) -> Result<FitResult> {
    let rows = samples.len();
    let cols = degrees.len();
    if cols == 0 || rows < cols {
        return Err(Error::InsufficientSamples {
            needed: cols.max(1),
            got: rows,
        });
    }
    let mut design = DMatrix::from_fn(rows, cols, |i, j| {
        samples.samples[i].t.powf(degrees[j].exponent())
    });
    let scales: Vec<f64> = design.column_iter().map(|c| c.norm()).collect();
    for (j, s) in scales.iter().enumerate() {
        design.column_mut(j).unscale_mut(*s);
    }
    let rhs = DVector::from_iterator(rows, samples.samples.iter().map(|s| s.value));
    let svd = design.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let condition = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if condition.is_nan() || condition > MAX_CONDITION {
        return Err(Error::IllConditioned(condition));
    }
    let scaled = svd
        .solve(&rhs, 0.0)
        .map_err(|_| Error::IllConditioned(condition))?;
    let residual = (&design * &scaled - &rhs).norm();
    let coefficients = degrees
        .iter()
        .zip(scaled.iter().zip(&scales))
        .map(|(&d, (&x, &s))| (d, x / s))
        .collect();
    Ok(FitResult {
        coefficients,
        residual,
        condition,
    })
}

/// Fitted versus predicted value of one coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Deviation {
    pub fitted: f64,
    pub predicted: f64,
    pub abs_err: f64,
    /// `abs_err / |predicted|`, or `abs_err` when the prediction is zero.
    pub rel_err: f64,
}

/// Per-degree comparison between the fitted and predicted coefficients.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct VerifyReport {
    pub entries: BTreeMap<&'static str, Deviation>,
}

impl VerifyReport {
    pub fn deviation(&self, degree: Degree) -> Option<&Deviation> {
        self.entries.get(degree.label())
    }

    pub fn max_rel_err(&self) -> f64 {
        self.entries.values().map(|d| d.rel_err).fold(0.0, f64::max)
    }
}

/// Fits the model on [`default_grid`] and compares against
/// [`full_expansion`] of its signature and metric.
pub fn verify_model(model: FlatModel) -> Result<VerifyReport> {
    let samples = TraceSamples::from_model(model, &default_grid())?;
    let fit = fit_expansion(&samples, &FLAT_FIT_DEGREES)?;
    let predicted = full_expansion(&model.signature(), &model.metric())?;
    let entries = fit
        .coefficients
        .iter()
        .map(|(&d, &fitted)| {
            let p = predicted.coefficient(d);
            let abs_err = (fitted - p).abs();
            let rel_err = if p == 0.0 { abs_err } else { abs_err / p.abs() };
            (
                d.label(),
                Deviation {
                    fitted,
                    predicted: p,
                    abs_err,
                    rel_err,
                },
            )
        })
        .collect();
    Ok(VerifyReport { entries })
}
