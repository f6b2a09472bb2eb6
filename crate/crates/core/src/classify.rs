//! Distinguishing orbifolds from their heat-trace data.
//!
//! Scans here enumerate finite rosters up to an explicit order bound; they
//! confirm statements that hold for all orders but do not prove them.

use std::collections::{BTreeMap, HashSet};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::heat::{spectral_c, HeatExpansion};
use crate::{render, Error, OrbifoldSignature, Rational, Result};

pub const DEFAULT_BOUND: u32 = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    /// Teardrops `O(m)` and footballs `O(r,s)`, good or bad.
    TeardropsAndFootballs,
    /// Spheres with three cone points, any sign of χ.
    TriangularPillows,
    /// Closed orientable 2-orbifolds with χ ≥ 0.
    ClassCOrientable,
    /// Good 2-orbifolds with χ > 0, orientable or not.
    SphericalConstantCurvature,
}

impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "teardrops-and-footballs" | "teardrops" | "footballs" => {
                ClassKind::TeardropsAndFootballs
            }
            "triangular-pillows" | "pillows" => ClassKind::TriangularPillows,
            "class-c" | "class-c-orientable" | "c" => ClassKind::ClassCOrientable,
            "spherical" | "spherical-constant-curvature" => ClassKind::SphericalConstantCurvature,
            other => return Err(Error::Domain(format!("unknown class `{other}`"))),
        })
    }
}

/// A named family of orbifolds, enumerated with orders up to `bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrbifoldClass {
    pub kind: ClassKind,
    pub bound: u32,
}

impl OrbifoldClass {
    pub fn new(kind: ClassKind, bound: u32) -> Result<Self> {
        if bound < 2 {
            return Err(Error::Domain(format!("enumeration bound {bound} < 2")));
        }
        Ok(OrbifoldClass { kind, bound })
    }
}

fn cones(orders: &[u32]) -> OrbifoldSignature {
    OrbifoldSignature::raw(0, 0, orders.to_vec(), vec![])
}

fn mirrored(cone_orders: &[u32], corners: &[u32]) -> OrbifoldSignature {
    OrbifoldSignature::raw(0, 0, cone_orders.to_vec(), vec![corners.to_vec()])
}

fn teardrops_and_footballs(bound: u32) -> Vec<OrbifoldSignature> {
    let mut out: Vec<_> = (2..=bound).map(|m| cones(&[m])).collect();
    for r in 2..=bound {
        for s in r..=bound {
            out.push(cones(&[r, s]));
        }
    }
    out
}

/// Triples `p ≤ q ≤ r ≤ bound` with `1/p + 1/q + 1/r ≥ 1`.
fn nonnegative_pillows(bound: u32) -> Vec<OrbifoldSignature> {
    let mut out = Vec::new();
    for p in 2..=bound.min(3) {
        for q in p..=bound {
            for r in q..=bound {
                // 1/p + 1/q + 1/r ≥ 1  ⟺  qr + pr + pq ≥ pqr
                let (p, q, r) = (u64::from(p), u64::from(q), u64::from(r));
                if q * r + p * r + p * q < p * q * r {
                    break;
                }
                out.push(cones(&[p as u32, q as u32, r as u32]));
            }
        }
    }
    out
}

/// The χ > 0 good orbifolds, orientable and nonorientable.
fn spherical_roster(bound: u32) -> Vec<OrbifoldSignature> {
    let disk = OrbifoldSignature::raw(0, 0, vec![], vec![vec![]]);
    let projective = OrbifoldSignature::raw(0, 1, vec![], vec![]);
    let mut out = vec![OrbifoldSignature::sphere(), disk, projective];
    for m in 2..=bound {
        out.push(cones(&[m, m]));
        out.push(mirrored(&[], &[m, m]));
        out.push(OrbifoldSignature::raw(0, 1, vec![m], vec![]));
        out.push(mirrored(&[m], &[]));
        out.push(cones(&[2, 2, m]));
        out.push(mirrored(&[], &[2, 2, m]));
        out.push(mirrored(&[2], &[m]));
    }
    for &r in &[3u32, 4, 5] {
        if r <= bound {
            out.push(cones(&[2, 3, r]));
            out.push(mirrored(&[], &[2, 3, r]));
        }
    }
    if bound >= 3 {
        out.push(mirrored(&[3], &[2]));
    }
    out
}

fn dedup(sigs: Vec<OrbifoldSignature>) -> Vec<OrbifoldSignature> {
    let mut seen = HashSet::new();
    sigs.into_iter().filter(|s| seen.insert(s.clone())).collect()
}

/// Complete, duplicate-free roster of the class.
pub fn enumerate_class(cls: OrbifoldClass) -> Vec<OrbifoldSignature> {
    let b = cls.bound;
    let sigs = match cls.kind {
        ClassKind::TeardropsAndFootballs => teardrops_and_footballs(b),
        ClassKind::TriangularPillows => {
            let mut out = Vec::new();
            for p in 2..=b {
                for q in p..=b {
                    for r in q..=b {
                        out.push(cones(&[p, q, r]));
                    }
                }
            }
            out
        }
        ClassKind::ClassCOrientable => {
            let mut out = vec![OrbifoldSignature::sphere(), OrbifoldSignature::surface(1)];
            out.extend(teardrops_and_footballs(b));
            out.extend(nonnegative_pillows(b));
            out.push(cones(&[2, 2, 2, 2]));
            out
        }
        ClassKind::SphericalConstantCurvature => spherical_roster(b),
    };
    dedup(sigs)
}

/// Members whose invariant `c` equals `c_value` exactly.
pub fn c_preimage(cls: OrbifoldClass, c_value: &Rational) -> Vec<OrbifoldSignature> {
    enumerate_class(cls)
        .into_iter()
        .filter(|s| &spectral_c(s) == c_value)
        .collect()
}

fn serialize_notation<S: Serializer>(sig: &OrbifoldSignature, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&render(sig))
}

/// Two distinct members sharing the same `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    #[serde(serialize_with = "serialize_notation")]
    pub sig_a: OrbifoldSignature,
    #[serde(serialize_with = "serialize_notation")]
    pub sig_b: OrbifoldSignature,
    pub c: Rational,
}

/// Members grouped by `c`, keeping only groups with two or more members.
/// Groups and their members are sorted, so the output does not depend on
/// enumeration order.
pub fn collision_groups(cls: OrbifoldClass) -> Vec<(Rational, Vec<OrbifoldSignature>)> {
    let mut by_c: BTreeMap<Rational, Vec<OrbifoldSignature>> = BTreeMap::new();
    for sig in enumerate_class(cls) {
        by_c.entry(spectral_c(&sig)).or_default().push(sig);
    }
    by_c.into_iter()
        .filter(|(_, v)| v.len() > 1)
        .map(|(c, mut v)| {
            v.sort();
            (c, v)
        })
        .collect()
}

/// All unordered pairs of members with equal `c`.
pub fn injectivity_scan(cls: OrbifoldClass) -> Vec<Collision> {
    let mut out = Vec::new();
    for (c, group) in collision_groups(cls) {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                out.push(Collision {
                    sig_a: a.clone(),
                    sig_b: b.clone(),
                    c: c.clone(),
                });
            }
        }
    }
    out
}

/// `2pqr + pr(p+r−5) + pq(p+q−5) + qr(q+r−5)`; vanishes exactly when the
/// χ < 0 pillow `O(p,q,r)` would share `c` with the pillow `O(2,2,m)` for
/// `m = p + q + r − 5`.
pub fn pillow_pair_polynomial(p: i64, q: i64, r: i64) -> i64 {
    2 * p * q * r + p * r * (p + r - 5) + p * q * (p + q - 5) + q * r * (q + r - 5)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum PillowVerdict {
    Distinguished,
    Collision {
        #[serde(serialize_with = "serialize_notation")]
        negative: OrbifoldSignature,
        #[serde(serialize_with = "serialize_notation")]
        other: OrbifoldSignature,
    },
}

/// χ < 0 pillows with `c = c_value`, found by matching integer and
/// fractional parts: such a pillow has `p + q + r − 2 = ⌊c⌋` and
/// `1/p + 1/q + 1/r = frac(c)`.
pub fn negative_pillows_with_c(c_value: &Rational, bound: u32) -> Vec<OrbifoldSignature> {
    let frac = c_value.fract();
    if frac.is_zero() || c_value.is_negative() {
        return Vec::new();
    }
    let Ok(int_part) = i64::try_from(c_value.floor()) else {
        return Vec::new();
    };
    let total = int_part + 2;
    let b = i64::from(bound);
    let mut out = Vec::new();
    for p in 2..=b {
        for q in p..=b {
            let r = total - p - q;
            if r < q {
                break;
            }
            if r > b {
                continue;
            }
            let sum = Rational::new(1, p) + Rational::new(1, q) + Rational::new(1, r);
            if sum == frac {
                out.push(cones(&[p as u32, q as u32, r as u32]));
            }
        }
    }
    out
}

/// Decides whether `c_value` is attained both by a χ < 0 pillow and by a
/// teardrop, the sphere, the torus, `O(2,2,2,2)` or a χ ≥ 0 pillow (orders up
/// to `bound`). Footballs are left out: telling them apart from hyperbolic
/// pillows needs metric input.
pub fn pillow_negative_vs_rest(c_value: &Rational, bound: u32) -> PillowVerdict {
    let negatives = negative_pillows_with_c(c_value, bound);
    let Some(negative) = negatives.into_iter().next() else {
        return PillowVerdict::Distinguished;
    };
    let rest = enumerate_class(OrbifoldClass {
        kind: ClassKind::ClassCOrientable,
        bound,
    })
    .into_iter()
    .filter(|s| s.cone_points().len() != 2);
    for other in rest {
        if &spectral_c(&other) == c_value {
            return PillowVerdict::Collision { negative, other };
        }
    }
    PillowVerdict::Distinguished
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurvatureSign {
    Positive,
    Negative,
}

/// Reads the sign of a constant curvature `±abs_curvature` off the
/// expansion: the degree-one coefficient minus `a₂/(4π)` is `K` times a
/// positive point weight, and without singular points the degree-zero term
/// is `χ/6`.
pub fn curvature_sign(
    expansion: &HeatExpansion,
    abs_curvature: f64,
    sig: &OrbifoldSignature,
) -> Result<CurvatureSign> {
    let area = 4.0 * PI * expansion.minus_one;
    let a2_part = abs_curvature * abs_curvature * area / (60.0 * PI);
    let remainder = expansion.one - a2_part;
    let scale = expansion.one.abs() + a2_part.abs();
    if !sig.has_no_singular_points() && remainder.abs() > 1e-12 * scale {
        return Ok(if remainder > 0.0 {
            CurvatureSign::Positive
        } else {
            CurvatureSign::Negative
        });
    }
    if expansion.zero.is_positive() {
        Ok(CurvatureSign::Positive)
    } else if expansion.zero.is_negative() {
        Ok(CurvatureSign::Negative)
    } else {
        Err(Error::AmbiguousZero)
    }
}

/// Mirror-locus length on the unit sphere for the nonorientable spherical
/// families that share `c` with a partner.
///
/// The quotient of `S²` by a reflection group `Γ` with `k` mirror great
/// circles has mirror length `2πk / (|Γ|/2) = 2πkχ`, since `|Γ| = 2/χ` and a
/// generic mirror point has orbit size `|Γ|/2`.
pub fn unit_sphere_mirror_length(sig: &OrbifoldSignature) -> Result<f64> {
    let unsupported = || Error::UnsupportedFamily(format!("O({})", render(sig)));
    if sig.handles() != 0 || sig.crosscaps() != 0 {
        return Err(unsupported());
    }
    let circles: u32 = match (sig.cone_points(), sig.mirror_boundaries()) {
        ([], [b]) if b.is_empty() => 1,
        ([], [b]) => match *b.as_slice() {
            [m, n] if m == n => m,
            [2, 2, m] => m + 1,
            [2, 3, 3] => 6,
            _ => return Err(unsupported()),
        },
        (&[_], [b]) if b.is_empty() => 1,
        (&[2], [b]) => match *b.as_slice() {
            [m] => m,
            _ => return Err(unsupported()),
        },
        (&[3], [b]) if b.as_slice() == [2] => 3,
        _ => return Err(unsupported()),
    };
    Ok(2.0 * PI * f64::from(circles) * sig.euler_characteristic().to_f64())
}

/// Which spectral datum separates two orbifolds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ByC,
    /// The `t^{-1/2}` coefficient vanishes for exactly one of them.
    ByMirrorPresence,
    ByMirrorLength,
    NotDistinguished,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::ByC => "distinguished by c",
            Verdict::ByMirrorPresence => "distinguished by mirror presence",
            Verdict::ByMirrorLength => "distinguished by mirror length",
            Verdict::NotDistinguished => "not distinguished",
        };
        f.write_str(s)
    }
}

/// Two spherical orbifolds of curvature 1.
pub fn spherical_distinguish(a: &OrbifoldSignature, b: &OrbifoldSignature) -> Result<Verdict> {
    if spectral_c(a) != spectral_c(b) {
        return Ok(Verdict::ByC);
    }
    if a.has_mirrors() != b.has_mirrors() {
        return Ok(Verdict::ByMirrorPresence);
    }
    if !a.has_mirrors() {
        return Ok(Verdict::NotDistinguished);
    }
    let (la, lb) = (unit_sphere_mirror_length(a)?, unit_sphere_mirror_length(b)?);
    if (la - lb).abs() > 1e-12 * la.abs().max(lb.abs()) {
        Ok(Verdict::ByMirrorLength)
    } else {
        Ok(Verdict::NotDistinguished)
    }
}

/// Two orbifolds with χ ≥ 0, compared through `c` and then through the
/// presence of a mirror locus.
pub fn positive_vs_zero_chi(a: &OrbifoldSignature, b: &OrbifoldSignature) -> Result<Verdict> {
    for s in [a, b] {
        if s.euler_characteristic().is_negative() {
            return Err(Error::Domain(format!("O({}) has χ < 0", render(s))));
        }
    }
    if spectral_c(a) != spectral_c(b) {
        Ok(Verdict::ByC)
    } else if a.has_mirrors() != b.has_mirrors() {
        Ok(Verdict::ByMirrorPresence)
    } else {
        Ok(Verdict::NotDistinguished)
    }
}

/// Compares two full expansions coefficient by coefficient.
pub fn expansions_distinguish(a: &HeatExpansion, b: &HeatExpansion, rtol: f64) -> bool {
    use crate::heat::Degree;
    if a.zero != b.zero {
        return true;
    }
    Degree::ALL.iter().any(|&d| {
        let (x, y) = (a.coefficient(d), b.coefficient(d));
        (x - y).abs() > rtol * x.abs().max(y.abs())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heat::{full_expansion, MetricData};
    use crate::parse;

    fn sig(s: &str) -> OrbifoldSignature {
        parse(s).unwrap()
    }

    fn class(kind: ClassKind, bound: u32) -> OrbifoldClass {
        OrbifoldClass::new(kind, bound).unwrap()
    }

    #[test]
    fn bound_must_be_at_least_two() {
        assert!(OrbifoldClass::new(ClassKind::TriangularPillows, 1).is_err());
    }

    #[test]
    fn pillows_up_to_three() {
        let got: Vec<String> = enumerate_class(class(ClassKind::TriangularPillows, 3))
            .iter()
            .map(render)
            .collect();
        assert_eq!(got, vec!["2,2,2", "2,2,3", "2,3,3", "3,3,3"]);
    }

    #[test]
    fn class_c_membership() {
        let roster = enumerate_class(class(ClassKind::ClassCOrientable, 20));
        assert!(roster.contains(&sig("2,3,6")));
        assert!(roster.contains(&sig("2,2,2,2")));
        assert!(roster.contains(&sig("torus")));
        assert!(!roster.contains(&sig("3,3,4")));
        assert!(roster.iter().all(|s| s.is_orientable()));
        assert!(roster.iter().all(|s| !s.euler_characteristic().is_negative()));
    }

    #[test]
    fn spherical_roster_is_good_and_positive() {
        let roster = enumerate_class(class(ClassKind::SphericalConstantCurvature, 30));
        for s in &roster {
            assert!(!s.is_bad(), "{}", render(s));
            assert!(s.euler_characteristic().is_positive(), "{}", render(s));
        }
        assert!(!roster.contains(&sig("5")));
        assert!(!roster.contains(&sig("4,5")));
        assert!(roster.contains(&sig("3,*2")));
    }

    #[test]
    fn preimages() {
        let tf = class(ClassKind::TeardropsAndFootballs, 100);
        assert_eq!(c_preimage(tf, &Rational::from(5)), vec![sig("2,2")]);
        assert_eq!(c_preimage(tf, &Rational::new(36, 5)), vec![sig("5")]);
        let cc = class(ClassKind::ClassCOrientable, 100);
        assert_eq!(c_preimage(cc, &Rational::new(97, 12)), vec![sig("2,3,4")]);
    }

    #[test]
    fn small_scans_are_injective() {
        assert!(injectivity_scan(class(ClassKind::TeardropsAndFootballs, 60)).is_empty());
        assert!(injectivity_scan(class(ClassKind::ClassCOrientable, 60)).is_empty());
    }

    #[test]
    fn pillow_polynomial_is_positive_for_hyperbolic_triples() {
        for p in 2..=60i64 {
            for q in p..=60 {
                for r in q..=60 {
                    if q * r + p * r + p * q < p * q * r {
                        assert!(pillow_pair_polynomial(p, q, r) > 0, "({p},{q},{r})");
                    }
                }
            }
        }
    }

    #[test]
    fn pillow_verdicts() {
        for m in 2..=100u32 {
            let c = spectral_c(&cones(&[2, 2, m]));
            assert_eq!(pillow_negative_vs_rest(&c, 100), PillowVerdict::Distinguished);
        }
        let c334 = spectral_c(&sig("3,3,4"));
        assert_eq!(c334, Rational::new(107, 12));
        assert_eq!(negative_pillows_with_c(&c334, 100), vec![sig("3,3,4")]);
        assert_eq!(pillow_negative_vs_rest(&c334, 100), PillowVerdict::Distinguished);
        assert_eq!(pillow_negative_vs_rest(&Rational::zero(), 100), PillowVerdict::Distinguished);
    }

    #[test]
    fn negative_pillow_matching_agrees_with_brute_force() {
        let negatives: Vec<_> = enumerate_class(class(ClassKind::TriangularPillows, 25))
            .into_iter()
            .filter(|s| s.euler_characteristic().is_negative())
            .map(|s| (spectral_c(&s), s))
            .collect();
        for (c, s) in &negatives {
            let brute: Vec<_> = negatives
                .iter()
                .filter(|(d, _)| d == c)
                .map(|(_, t)| t.clone())
                .collect();
            let mut fast = negative_pillows_with_c(c, 25);
            fast.sort();
            assert_eq!(fast, brute, "{}", render(s));
        }
    }

    #[test]
    fn icosahedral_pillow_shares_c_with_a_dihedral_quotient() {
        // c(O(*2,2,m)) = (m + 3 + 1/m)/2 hits 271/30 at m = 15.
        let (a, b, d) = (sig("2,3,5"), sig("*2,2,15"), sig("2,*15"));
        assert_eq!(spectral_c(&a), spectral_c(&b));
        assert_eq!(spectral_c(&a), spectral_c(&d));
        assert_eq!(spherical_distinguish(&a, &b).unwrap(), Verdict::ByMirrorPresence);
        assert_eq!(spherical_distinguish(&b, &d).unwrap(), Verdict::ByMirrorLength);
    }

    #[test]
    fn curvature_sign_examples() {
        let s = sig("2,3,5");
        let e = full_expansion(&s, &MetricData::gauss_bonnet(&s, 1.0, 0.0).unwrap()).unwrap();
        assert_eq!(curvature_sign(&e, 1.0, &s).unwrap(), CurvatureSign::Positive);
        let h = sig("3,3,4");
        let e = full_expansion(&h, &MetricData::gauss_bonnet(&h, -1.0, 0.0).unwrap()).unwrap();
        assert_eq!(curvature_sign(&e, 1.0, &h).unwrap(), CurvatureSign::Negative);
        let g2 = OrbifoldSignature::surface(2);
        let e = full_expansion(&g2, &MetricData::gauss_bonnet(&g2, -1.0, 0.0).unwrap()).unwrap();
        assert_eq!(curvature_sign(&e, 1.0, &g2).unwrap(), CurvatureSign::Negative);
    }

    #[test]
    fn curvature_sign_ambiguous_on_flat_torus() {
        let t = sig("torus");
        let e = full_expansion(&t, &MetricData::new(0.0, 1.0, 0.0).unwrap()).unwrap();
        assert_eq!(curvature_sign(&e, 1.0, &t), Err(Error::AmbiguousZero));
    }

    #[test]
    fn mirror_lengths() {
        for m in 2..=100u32 {
            let star_mm = unit_sphere_mirror_length(&mirrored(&[], &[m, m])).unwrap();
            let m_star = unit_sphere_mirror_length(&mirrored(&[m], &[])).unwrap();
            let star22m = unit_sphere_mirror_length(&mirrored(&[], &[2, 2, m])).unwrap();
            let two_star_m = unit_sphere_mirror_length(&mirrored(&[2], &[m])).unwrap();
            let mf = f64::from(m);
            assert!((star_mm - 2.0 * PI).abs() < 1e-12);
            assert!((m_star - 2.0 * PI / mf).abs() < 1e-12);
            assert!((star22m - PI * (mf + 1.0) / mf).abs() < 1e-12);
            assert!((two_star_m - PI).abs() < 1e-12);
            assert!(star22m > two_star_m && star_mm > m_star);
        }
        assert!((unit_sphere_mirror_length(&sig("*2,3,3")).unwrap() - PI).abs() < 1e-12);
        assert!((unit_sphere_mirror_length(&sig("3,*2")).unwrap() - PI / 2.0).abs() < 1e-12);
        assert!(matches!(
            unit_sphere_mirror_length(&sig("*2,3,5")),
            Err(Error::UnsupportedFamily(_))
        ));
        assert!(unit_sphere_mirror_length(&sig("2,3,5")).is_err());
    }

    #[test]
    fn spherical_verdicts() {
        assert_eq!(spherical_distinguish(&sig("*2,3,3"), &sig("3,*2")).unwrap(), Verdict::ByMirrorLength);
        for m in 2..20 {
            let a = sig(&format!("{m}×"));
            let b = sig(&format!("{m}*"));
            assert_eq!(spherical_distinguish(&a, &b).unwrap(), Verdict::ByMirrorPresence);
        }
        assert_eq!(spherical_distinguish(&sig("2,3,4"), &sig("2,3,5")).unwrap(), Verdict::ByC);
    }

    #[test]
    fn zero_versus_positive() {
        assert_eq!(positive_vs_zero_chi(&sig(""), &sig("*3,3,3")).unwrap(), Verdict::ByMirrorPresence);
        assert_eq!(positive_vs_zero_chi(&sig(""), &sig("3,*3")).unwrap(), Verdict::ByMirrorPresence);
        assert_eq!(positive_vs_zero_chi(&sig("2,2"), &sig("*2,3,6")).unwrap(), Verdict::ByMirrorPresence);
        assert_eq!(positive_vs_zero_chi(&sig("2"), &sig("*2,4,4")).unwrap(), Verdict::ByMirrorPresence);
        assert_eq!(positive_vs_zero_chi(&sig("2"), &sig("4,*2")).unwrap(), Verdict::ByMirrorPresence);
        assert_eq!(positive_vs_zero_chi(&sig("3,3,3"), &sig("2,4,4")).unwrap(), Verdict::ByC);
        assert!(positive_vs_zero_chi(&sig("3,3,4"), &sig("")).is_err());
    }

    #[test]
    fn flat_counterexample_is_not_distinguished() {
        // Both flat with χ = 0 and degree-zero term 1/4; give them the same
        // area and mirror length.
        let a = sig("2,*2,2");
        let b = sig("2,2*");
        let metric = MetricData::new(0.0, 0.5, 2.0).unwrap();
        let ea = full_expansion(&a, &metric).unwrap();
        let eb = full_expansion(&b, &metric).unwrap();
        assert!(!expansions_distinguish(&ea, &eb, 1e-12));
        assert_eq!(positive_vs_zero_chi(&a, &b).unwrap(), Verdict::NotDistinguished);
    }

    #[test]
    fn collision_json() {
        let c = Collision {
            sig_a: sig("2×"),
            sig_b: sig("2*"),
            c: Rational::new(5, 2),
        };
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["sig_a"], "2×");
        assert_eq!(v["c"]["num"], "5");
    }
}
