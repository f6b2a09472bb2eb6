//! End-to-end acceptance checks. Each test prints one PASS/FAIL line; run with
//! `cargo test -p orbiheat --test acceptance -- --nocapture --test-threads 1`.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use orbiheat::classify::{
    collision_groups, curvature_sign, injectivity_scan, spherical_distinguish,
    unit_sphere_mirror_length, ClassKind, CurvatureSign, OrbifoldClass, Verdict,
};
use orbiheat::flat::{
    brute_force_trace, default_grid, fit_expansion, heat_trace, verify_model, FlatModel,
    TraceSamples, FLAT_FIT_DEGREES,
};
use orbiheat::heat::{full_expansion, has_half_integer_terms, Degree, MetricData};
use orbiheat::tables::{table_one, table_two, TableCheck};
use orbiheat::trig::{cosecant2_sum, cosecant4_sum, cosecant_sum_numeric};
use orbiheat::{parse, render, OrbifoldSignature};

fn report(id: u32, name: &str, failures: &[String], elapsed: Duration, budget: Duration) {
    let mut failures = failures.to_vec();
    if elapsed > budget {
        failures.push(format!("took {elapsed:?}, budget {budget:?}"));
    }
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id} {status}: {name} ({elapsed:.2?})");
    for f in &failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:#?}");
}

fn table_failures(checks: &[TableCheck]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.matches())
        .map(|c| {
            format!(
                "{} {} {}: expected {}, got {}",
                c.row, c.orbifold, c.quantity, c.expected, c.computed
            )
        })
        .collect()
}

#[test]
fn criterion_1_table_two() {
    let start = Instant::now();
    let checks = table_two();
    let mut failures = table_failures(&checks);
    let rows: BTreeSet<_> = checks.iter().map(|c| c.row.clone()).collect();
    if rows.len() != 12 {
        failures.push(format!("{} rows, expected 12", rows.len()));
    }
    for (notation, chi, c) in [("2,3,5", "1/30", "271/30"), ("3,3,4", "-1/12", "107/12")] {
        let s = parse(notation).unwrap();
        let got = (s.euler_characteristic().to_string(), orbiheat::heat::spectral_c(&s).to_string());
        if got != (chi.to_string(), c.to_string()) {
            failures.push(format!("O({notation}) gave {got:?}"));
        }
    }
    report(1, "triangular pillow (chi, c) table", &failures, start.elapsed(), Duration::from_secs(1));
}

#[test]
fn criterion_2_table_one() {
    let start = Instant::now();
    let checks = table_one();
    let mut failures = table_failures(&checks);
    for (notation, value) in [
        ("2,3,5", "271/360"),
        ("*2,3,4", "97/288"),
        ("2,2,2,2", "1/2"),
        ("2,2×", "1/4"),
        ("torus", "0"),
        ("klein", "0"),
    ] {
        let got = orbiheat::heat::degree_zero_term(&parse(notation).unwrap()).to_string();
        if got != value {
            failures.push(format!("O({notation}): expected {value}, got {got}"));
        }
    }
    report(2, "chi >= 0 degree-zero constants", &failures, start.elapsed(), Duration::from_secs(1));
}

#[test]
fn criterion_3_trig_identities() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for m in 1..=500u32 {
        for (power, exact) in [(2, cosecant2_sum(m).unwrap()), (4, cosecant4_sum(m).unwrap())] {
            let numeric = cosecant_sum_numeric(m, power);
            let exact = exact.to_f64();
            let ok = if exact == 0.0 {
                numeric == 0.0
            } else {
                ((numeric - exact) / exact).abs() <= 1e-9
            };
            if !ok {
                failures.push(format!("m={m} power={power}: {numeric} vs {exact}"));
            }
        }
    }
    report(3, "cosecant power sums, m <= 500", &failures, start.elapsed(), Duration::from_secs(5));
}

#[test]
fn criterion_4_flat_fits() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for model in FlatModel::ALL {
        let report = verify_model(model).unwrap();
        for degree in FLAT_FIT_DEGREES {
            let d = report.deviation(degree).unwrap();
            if d.rel_err > 1e-6 {
                failures.push(format!(
                    "{model} degree {}: fitted {:.12e}, predicted {:.12e}, error {:.3e}",
                    degree.label(),
                    d.fitted,
                    d.predicted,
                    d.rel_err
                ));
            }
        }
    }
    report(4, "flat model fits on 1e-2 * 0.7^i", &failures, start.elapsed(), Duration::from_secs(10));
}

#[test]
fn criterion_5_oracle_equivalence() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let cutoff = 80.0 * PI * PI;
    for model in FlatModel::ALL {
        for t in [0.05, 0.1, 0.2] {
            let closed = heat_trace(model, t);
            let brute = brute_force_trace(model, t, cutoff);
            if (closed - brute).abs() >= 1e-10 {
                failures.push(format!("{model} t={t}: {closed} vs {brute}"));
            }
        }
    }
    report(5, "closed traces vs invariant eigenfunctions", &failures, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn criterion_6_injectivity_scans() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for kind in [ClassKind::TeardropsAndFootballs, ClassKind::ClassCOrientable] {
        let collisions = injectivity_scan(OrbifoldClass::new(kind, 500).unwrap());
        for c in collisions.iter().take(5) {
            failures.push(format!(
                "{kind:?}: O({}) and O({}) share c = {}",
                render(&c.sig_a),
                render(&c.sig_b),
                c.c
            ));
        }
    }
    report(6, "c is injective on teardrops/footballs and class C, bound 500", &failures, start.elapsed(), Duration::from_secs(60));
}

fn sig(s: &str) -> OrbifoldSignature {
    parse(s).unwrap()
}

/// The expected member set of a double-cover family with the given smallest
/// member, or `None` if it is not one of the three families.
fn family_of(group: &[OrbifoldSignature]) -> Option<(&'static str, u32)> {
    for m in 1..=50u32 {
        let mut expect = if m == 1 {
            vec![sig("*"), sig("×")]
        } else {
            vec![sig(&format!("*{m},{m}")), sig(&format!("{m}×")), sig(&format!("{m}*"))]
        };
        expect.sort();
        if expect == group {
            return Some(("(*m,m), (m×), (m*)", m));
        }
    }
    for m in 2..=50u32 {
        let mut expect = vec![sig(&format!("*2,2,{m}")), sig(&format!("2,*{m}"))];
        expect.sort();
        if expect == group {
            return Some(("(*2,2,m), (2,*m)", m));
        }
    }
    let mut expect = vec![sig("*2,3,3"), sig("3,*2")];
    expect.sort();
    (expect == group).then_some(("(*2,3,3), (3,*2)", 3))
}

#[test]
fn criterion_7_spherical_scan() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let groups = collision_groups(
        OrbifoldClass::new(ClassKind::SphericalConstantCurvature, 50).unwrap(),
    );
    let mut families = BTreeSet::new();
    for (c, group) in &groups {
        let names: Vec<_> = group.iter().map(render).collect();
        match family_of(group) {
            Some((family, _)) => {
                families.insert(family);
            }
            None => failures.push(format!("unexpected collision at c = {c}: {names:?}")),
        }
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                match spherical_distinguish(a, b) {
                    Ok(Verdict::ByMirrorPresence | Verdict::ByMirrorLength) => {}
                    other => failures.push(format!("O({}) vs O({}): {other:?}", render(a), render(b))),
                }
            }
        }
    }
    if families.len() != 3 {
        failures.push(format!("found families {families:?}"));
    }
    // Strict length inequalities behind the mirror-length verdicts.
    let len = |s: &str| unit_sphere_mirror_length(&sig(s)).unwrap();
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * b.abs();
    for m in 2..=50u32 {
        let (big, small) = (len(&format!("*2,2,{m}")), len(&format!("2,*{m}")));
        if !(close(big, PI * f64::from(m + 1) / f64::from(m)) && close(small, PI) && big > small) {
            failures.push(format!("m={m}: (*2,2,m) {big} vs (2,*m) {small}"));
        }
        let (big, small) = (len(&format!("*{m},{m}")), len(&format!("{m}*")));
        if !(close(big, 2.0 * PI) && close(small, 2.0 * PI / f64::from(m)) && big > small) {
            failures.push(format!("m={m}: (*m,m) {big} vs (m*) {small}"));
        }
    }
    let (big, small) = (len("*2,3,3"), len("3,*2"));
    if !(close(big, PI) && close(small, PI / 2.0)) {
        failures.push(format!("(*2,3,3) {big} vs (3,*2) {small}"));
    }
    println!("    {} collision groups in {} families", groups.len(), families.len());
    report(7, "spherical collisions resolved by the mirror term", &failures, start.elapsed(), Duration::from_secs(10));
}

#[test]
fn criterion_8_curvature_sign() {
    let start = Instant::now();
    let spherical = [
        "", "×", "*", "2,2", "5,5", "*3,3", "4×", "6*", "2,2,7", "*2,2,3", "2,*4", "2,3,3",
        "2,3,4", "2,3,5", "*2,3,3", "*2,3,4", "*2,3,5", "3,*2", "2,2,2", "*9,9",
    ];
    let hyperbolic = [
        "oo", "ooo", "×××", "××××", "oooo", "3,3,4", "3,4,4", "3,3,5", "2,4,5", "2,3,7",
        "2,2,2,2,2", "o,2", "3××", "*2,3,7", "2,*2,5", "7,7,7", "o,*", "*,*,*", "2,2,2,3", "*4,4,4",
    ];
    let mut failures = Vec::new();
    let mut smooth = 0;
    for (list, k, want) in [
        (&spherical, 1.0, CurvatureSign::Positive),
        (&hyperbolic, -1.0, CurvatureSign::Negative),
    ] {
        for notation in list.iter() {
            let s = sig(notation);
            let chi = s.euler_characteristic();
            if (k > 0.0) != chi.is_positive() || chi.is_zero() || s.is_bad() {
                failures.push(format!("O({notation}) is not a valid K={k} sample"));
                continue;
            }
            smooth += usize::from(s.has_no_singular_points());
            let l = if s.has_mirrors() { 1.0 } else { 0.0 };
            let e = full_expansion(&s, &MetricData::gauss_bonnet(&s, k, l).unwrap()).unwrap();
            match curvature_sign(&e, 1.0, &s) {
                Ok(got) if got == want => {}
                other => failures.push(format!("O({notation}): {other:?}")),
            }
        }
    }
    if smooth < 4 {
        failures.push(format!("only {smooth} smooth samples"));
    }
    report(8, "curvature sign from the expansion, 20 + 20 samples", &failures, start.elapsed(), Duration::from_secs(1));
}

/// Deterministic roster of at least 10⁴ distinct signatures.
fn signature_roster() -> Vec<OrbifoldSignature> {
    let orders = [2u32, 3, 4, 5, 6];
    let mut cone_sets: Vec<Vec<u32>> = vec![vec![]];
    for (i, &a) in orders.iter().enumerate() {
        cone_sets.push(vec![a]);
        for (j, &b) in orders.iter().enumerate().skip(i) {
            cone_sets.push(vec![a, b]);
            for &c in &orders[j..] {
                cone_sets.push(vec![a, b, c]);
            }
        }
    }
    let corner_sets: Vec<Vec<u32>> = vec![vec![], vec![2], vec![3], vec![2, 2], vec![2, 3], vec![3, 4], vec![2, 2, 5]];
    let mut boundary_sets: Vec<Vec<Vec<u32>>> = vec![vec![]];
    for (i, a) in corner_sets.iter().enumerate() {
        boundary_sets.push(vec![a.clone()]);
        for b in &corner_sets[i..] {
            boundary_sets.push(vec![a.clone(), b.clone()]);
        }
    }
    let mut seen = BTreeSet::new();
    for handles in 0..=2 {
        for crosscaps in 0..=3 {
            for cones in &cone_sets {
                for boundaries in &boundary_sets {
                    let s = OrbifoldSignature::new(handles, crosscaps, cones.clone(), boundaries.clone())
                        .unwrap();
                    seen.insert(s);
                }
            }
        }
    }
    seen.into_iter().take(10_000).collect()
}

#[test]
fn criterion_9_half_integer_terms() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let roster = signature_roster();
    if roster.len() != 10_000 {
        failures.push(format!("roster has {} signatures", roster.len()));
    }
    let mut mirrored = 0;
    for s in &roster {
        // Mirror presence read off the rendered text, independently of the
        // predicate under test.
        let text_has_mirror = render(s).contains('*');
        mirrored += usize::from(text_has_mirror);
        if has_half_integer_terms(s) != text_has_mirror {
            failures.push(format!("O({}): predicate disagrees", render(s)));
        }
        if text_has_mirror {
            let metric = MetricData::new(0.0, 1.0, 1.0).unwrap();
            let coefficient = orbiheat::heat::coefficient_minus_half(&metric);
            if coefficient <= 0.0 {
                failures.push(format!("O({}): t^-1/2 coefficient {coefficient}", render(s)));
            }
        }
    }
    println!("    {mirrored} of {} signatures mirrored", roster.len());
    for model in FlatModel::ALL {
        let samples = TraceSamples::from_model(model, &default_grid()).unwrap();
        let fit = fit_expansion(&samples, &FLAT_FIT_DEGREES).unwrap();
        let half = fit.coefficients[&Degree::MinusHalf];
        let ok = if model.signature().has_mirrors() { half > 0.1 } else { half.abs() < 1e-6 };
        if !ok {
            failures.push(format!("{model}: fitted t^-1/2 coefficient {half:.6e}"));
        }
    }
    report(9, "half-integer powers exactly on mirrored signatures", &failures, start.elapsed(), Duration::from_secs(10));
}
