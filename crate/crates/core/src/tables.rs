//! Reference values for the χ ≥ 0 expansion constants and the triangular
//! pillows, and their recomputation.
//!
//! Parameterized rows (`O(m)`, `O(*m,n)`, `O(2,2,m)`, …) are instantiated for
//! every parameter in `1..=PARAM_MAX`; a parameter equal to 1 means the point
//! is absent, so `O(1)` is the sphere and `O(*1)` the disk with mirror
//! boundary.

use serde::Serialize;

use crate::heat::{degree_zero_term, spectral_c};
use crate::{render, OrbifoldSignature, Rational};

pub const PARAM_MAX: i64 = 12;

/// One recomputed entry.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableCheck {
    pub row: String,
    pub orbifold: String,
    pub quantity: &'static str,
    pub expected: Rational,
    pub computed: Rational,
}

impl TableCheck {
    pub fn matches(&self) -> bool {
        self.expected == self.computed
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// `a + b/m` as an exact rational.
fn plus_recip(a: i64, m: i64) -> Rational {
    Rational::from(a) + r(1, m)
}

fn drop_ones(v: &[i64]) -> Vec<u32> {
    v.iter().filter(|&&x| x > 1).map(|&x| x as u32).collect()
}

fn sig(handles: u32, crosscaps: u32, cones: &[i64], mirrors: &[&[i64]]) -> OrbifoldSignature {
    OrbifoldSignature::new(
        handles,
        crosscaps,
        drop_ones(cones),
        mirrors.iter().map(|b| drop_ones(b)).collect(),
    )
    .expect("orders ≥ 2 after dropping trivial points")
}

fn notation(s: &str) -> OrbifoldSignature {
    crate::parse(s).expect("reference notation parses")
}

/// `(row label, orbifold, expected degree-zero constant, expected sign of χ)`.
fn table_one_rows() -> Vec<(String, OrbifoldSignature, Rational, i8)> {
    let mut rows = Vec::new();
    let mut push = |label: &str, s: OrbifoldSignature, v: Rational, chi_sign: i8| {
        rows.push((label.to_string(), s, v, chi_sign));
    };
    for m in 1..=PARAM_MAX {
        let base = plus_recip(2 + m, m);
        push("O(m)", sig(0, 0, &[m], &[]), &base * &r(1, 12), 1);
        push("O(*m)", sig(0, 0, &[], &[&[m]]), &base * &r(1, 24), 1);
        let cross = plus_recip(m, m) * r(1, 12);
        push("O(m×)", sig(0, 1, &[m], &[]), cross.clone(), 1);
        push("O(m*)", sig(0, 0, &[m], &[&[]]), cross, 1);
        let pillow = plus_recip(3 + m, m);
        push("O(2,2,m)", sig(0, 0, &[2, 2, m], &[]), &pillow * &r(1, 12), 1);
        push("O(*2,2,m)", sig(0, 0, &[], &[&[2, 2, m]]), &pillow * &r(1, 24), 1);
        push("O(2,*m)", sig(0, 0, &[2], &[&[m]]), &pillow * &r(1, 24), 1);
        for n in 1..=PARAM_MAX {
            let two = plus_recip(m + n, m) + r(1, n);
            push("O(m,n)", sig(0, 0, &[m, n], &[]), &two * &r(1, 12), 1);
            push("O(*m,n)", sig(0, 0, &[], &[&[m, n]]), &two * &r(1, 24), 1);
        }
    }
    let fixed: [(&str, &[&str], Rational, i8); 17] = [
        ("O(2,3,3)", &["2,3,3"], r(43, 72), 1),
        ("O(*2,3,3), O(3,*2)", &["*2,3,3", "3,*2"], r(43, 144), 1),
        ("O(2,3,4)", &["2,3,4"], r(97, 144), 1),
        ("O(*2,3,4)", &["*2,3,4"], r(97, 288), 1),
        ("O(2,3,5)", &["2,3,5"], r(271, 360), 1),
        ("O(*2,3,5)", &["*2,3,5"], r(271, 720), 1),
        ("torus, Klein bottle", &["torus", "klein"], r(0, 1), 0),
        ("*torus, *Klein bottle", &["*torus", "*klein"], r(0, 1), 0),
        ("O(2,2,2,2)", &["2,2,2,2"], r(1, 2), 0),
        ("O(*2,2,2,2), O(2,*2,2), O(2,2*)", &["*2,2,2,2", "2,*2,2", "2,2*"], r(1, 4), 0),
        ("O(2,2×)", &["2,2×"], r(1, 4), 0),
        ("O(2,4,4)", &["2,4,4"], r(3, 4), 0),
        ("O(*2,4,4), O(4,*2)", &["*2,4,4", "4,*2"], r(3, 8), 0),
        ("O(3,3,3)", &["3,3,3"], r(2, 3), 0),
        ("O(*3,3,3), O(3,*3)", &["*3,3,3", "3,*3"], r(1, 3), 0),
        ("O(2,3,6)", &["2,3,6"], r(5, 6), 0),
        ("O(*2,3,6)", &["*2,3,6"], r(5, 12), 0),
    ];
    for (label, members, value, chi_sign) in fixed {
        for m in members {
            push(label, notation(m), value.clone(), chi_sign);
        }
    }
    rows
}

/// Degree-zero constants and Euler-characteristic signs of the χ ≥ 0 rows.
pub fn table_one() -> Vec<TableCheck> {
    let mut out = Vec::new();
    for (row, s, expected, chi_sign) in table_one_rows() {
        let orbifold = format!("O({})", render(&s));
        let chi = s.euler_characteristic();
        let computed_sign = if chi.is_positive() { 1 } else if chi.is_zero() { 0 } else { -1 };
        out.push(TableCheck {
            row: row.clone(),
            orbifold: orbifold.clone(),
            quantity: "sign(chi)",
            expected: Rational::from(i64::from(chi_sign)),
            computed: Rational::from(computed_sign),
        });
        out.push(TableCheck {
            row,
            orbifold,
            quantity: "deg_0",
            expected,
            computed: degree_zero_term(&s),
        });
    }
    out
}

/// The twelve listed pillows: `(orders, χ, c)`. `O(2,2,m)` is checked for
/// every `m` in `2..=PARAM_MAX` and counts as one row.
pub fn table_two_rows() -> Vec<(String, OrbifoldSignature, Rational, Rational)> {
    let mut rows = Vec::new();
    let fixed: [([i64; 3], Rational, Rational); 11] = [
        ([2, 2, 2], r(1, 2), r(11, 2)),
        ([2, 3, 3], r(1, 6), r(43, 6)),
        ([2, 3, 4], r(1, 12), r(97, 12)),
        ([2, 3, 5], r(1, 30), r(271, 30)),
        ([3, 3, 3], r(0, 1), r(8, 1)),
        ([2, 4, 4], r(0, 1), r(9, 1)),
        ([2, 3, 6], r(0, 1), r(10, 1)),
        ([3, 3, 4], r(-1, 12), r(107, 12)),
        ([3, 4, 4], r(-1, 6), r(59, 6)),
        ([3, 3, 5], r(-2, 15), r(148, 15)),
        ([2, 4, 5], r(-1, 20), r(199, 20)),
    ];
    for (orders, chi, c) in fixed {
        let s = sig(0, 0, &orders, &[]);
        rows.push((format!("O({})", render(&s)), s, chi, c));
    }
    for m in 2..=PARAM_MAX {
        let s = sig(0, 0, &[2, 2, m], &[]);
        rows.push(("O(2,2,m)".to_string(), s, r(1, m), plus_recip(3 + m, m)));
    }
    rows
}

/// `(χ, c)` of the triangular pillows.
pub fn table_two() -> Vec<TableCheck> {
    let mut out = Vec::new();
    for (row, s, chi, c) in table_two_rows() {
        let orbifold = format!("O({})", render(&s));
        out.push(TableCheck {
            row: row.clone(),
            orbifold: orbifold.clone(),
            quantity: "chi",
            expected: chi,
            computed: s.euler_characteristic(),
        });
        out.push(TableCheck {
            row,
            orbifold,
            quantity: "c",
            expected: c,
            computed: spectral_c(&s),
        });
    }
    out
}

/// χ < 0 pillows other than the four listed ones have `-1 < χ < 0` and
/// `c > 10`. Returns the violators with orders up to `bound`.
pub fn unlisted_hyperbolic_pillow_violations(bound: u32) -> Vec<OrbifoldSignature> {
    let listed = [[3, 3, 4], [3, 4, 4], [3, 3, 5], [2, 4, 5]];
    let mut out = Vec::new();
    for p in 2..=bound {
        for q in p..=bound {
            for rr in q..=bound {
                let s = OrbifoldSignature::with_cones(&[p, q, rr]).expect("orders ≥ 2");
                let chi = s.euler_characteristic();
                if !chi.is_negative() || listed.contains(&[p, q, rr]) {
                    continue;
                }
                if chi <= Rational::from(-1) || spectral_c(&s) <= Rational::from(10) {
                    out.push(s);
                }
            }
        }
    }
    out
}
