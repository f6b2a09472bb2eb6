//! Browser bindings for the demo page in `www/`.
//!
//! Every export returns a JSON string. The `*_json` functions hold the logic
//! and are plain Rust so they can be tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use orbiheat::classify::{positive_vs_zero_chi, spherical_distinguish, unit_sphere_mirror_length};
use orbiheat::flat::{
    default_grid, fit_expansion, geometric_grid, heat_trace, FlatModel, TraceSamples,
    FLAT_FIT_DEGREES,
};
use orbiheat::heat::{full_expansion, has_half_integer_terms, spectral_c, MetricData};
use orbiheat::{parse, render, GeometryType, OrbifoldSignature};

fn parse_sig(text: &str) -> Result<OrbifoldSignature, String> {
    parse(text).map_err(|e| format!("`{text}`: {e}"))
}

/// Expansion under the model metric of curvature ±1 (or the unit-torus
/// models when flat), when one is available.
fn model_expansion(sig: &OrbifoldSignature) -> Option<Value> {
    let metric = match sig.geometry_type() {
        GeometryType::Spherical => {
            let length = if sig.has_mirrors() {
                unit_sphere_mirror_length(sig).ok()?
            } else {
                0.0
            };
            MetricData::gauss_bonnet(sig, 1.0, length).ok()?
        }
        GeometryType::Euclidean => FlatModel::ALL
            .into_iter()
            .find(|m| &m.signature() == sig)?
            .metric(),
        GeometryType::Hyperbolic if !sig.has_mirrors() => {
            MetricData::gauss_bonnet(sig, -1.0, 0.0).ok()?
        }
        _ => return None,
    };
    serde_json::to_value(full_expansion(sig, &metric).ok()?).ok()
}

pub fn analyze_json(notation: &str) -> Result<String, String> {
    let sig = parse_sig(notation)?;
    let chi = sig.euler_characteristic();
    let c = spectral_c(&sig);
    let v = json!({
        "canonical": render(&sig),
        "signature": sig,
        "chi": chi.to_string(),
        "c": c.to_string(),
        "c_value": c.to_f64(),
        "geometry": sig.geometry_type(),
        "orientable": sig.is_orientable(),
        "bad": sig.is_bad(),
        "half_integer_terms": has_half_integer_terms(&sig),
        "expansion": model_expansion(&sig),
    });
    Ok(v.to_string())
}

/// Exact trace of a flat model against its three-term small-time expansion
/// on `points` log-spaced times in `[t_min, t_max]`, plus the least-squares
/// fit on the standard grid.
pub fn flat_curve_json(model: &str, t_min: f64, t_max: f64, points: usize) -> Result<String, String> {
    let model: FlatModel = model.parse().map_err(|e| format!("{e}"))?;
    if !(t_min > 0.0 && t_max > t_min && points >= 2) {
        return Err("need 0 < t_min < t_max and at least two points".into());
    }
    let expansion = full_expansion(&model.signature(), &model.metric()).map_err(|e| e.to_string())?;
    let ratio = (t_min / t_max).powf(1.0 / (points - 1) as f64);
    let ts = geometric_grid(t_max, ratio, points);
    let exact: Vec<f64> = ts.iter().map(|&t| heat_trace(model, t)).collect();
    let asymptotic: Vec<f64> = ts
        .iter()
        .map(|&t| expansion.minus_one / t + expansion.minus_half / t.sqrt() + expansion.zero.to_f64())
        .collect();
    let samples = TraceSamples::from_model(model, &default_grid()).map_err(|e| e.to_string())?;
    let fit = fit_expansion(&samples, &FLAT_FIT_DEGREES).map_err(|e| e.to_string())?;
    let fitted: serde_json::Map<String, Value> = fit
        .coefficients
        .iter()
        .map(|(d, c)| (d.label().to_string(), json!(c)))
        .collect();
    let v = json!({
        "model": model,
        "notation": model.notation(),
        "t": ts,
        "exact": exact,
        "asymptotic": asymptotic,
        "fitted": fitted,
        "predicted": expansion,
    });
    Ok(v.to_string())
}

/// Spectral comparison of two orbifolds: the spherical procedure when both
/// are spherical, the mirror-presence test when both have χ ≥ 0, and `c`
/// alone otherwise.
pub fn distinguish_json(a: &str, b: &str) -> Result<String, String> {
    let (sa, sb) = (parse_sig(a)?, parse_sig(b)?);
    let spherical = |s: &OrbifoldSignature| s.geometry_type() == GeometryType::Spherical;
    let (procedure, verdict) = if spherical(&sa) && spherical(&sb) {
        ("spherical", spherical_distinguish(&sa, &sb).map_err(|e| e.to_string())?)
    } else if !sa.euler_characteristic().is_negative() && !sb.euler_characteristic().is_negative() {
        ("nonnegative-chi", positive_vs_zero_chi(&sa, &sb).map_err(|e| e.to_string())?)
    } else if spectral_c(&sa) != spectral_c(&sb) {
        ("c", orbiheat::classify::Verdict::ByC)
    } else {
        ("c", orbiheat::classify::Verdict::NotDistinguished)
    };
    let v = json!({
        "a": render(&sa),
        "b": render(&sb),
        "c_a": spectral_c(&sa).to_string(),
        "c_b": spectral_c(&sb).to_string(),
        "procedure": procedure,
        "verdict": verdict,
        "summary": verdict.to_string(),
    });
    Ok(v.to_string())
}

#[wasm_bindgen]
pub fn analyze(notation: &str) -> Result<String, JsError> {
    analyze_json(notation).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn flat_curve(model: &str, t_min: f64, t_max: f64, points: usize) -> Result<String, JsError> {
    flat_curve_json(model, t_min, t_max, points).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn distinguish(a: &str, b: &str) -> Result<String, JsError> {
    distinguish_json(a, b).map_err(|e| JsError::new(&e))
}
