//! Random curve generators shared by the property and acceptance targets.

#![allow(dead_code)]

use proptest::prelude::*;

fn coef() -> impl Strategy<Value = i64> {
    prop_oneof![-3i64..=-1, 1i64..=3]
}

/// Monic irreducible factors of small degree, as text and y-degree.
pub fn germ_factor() -> impl Strategy<Value = (String, usize)> {
    prop_oneof![
        (coef(), 1i64..=3).prop_map(|(a, p)| (format!("y-({a})*x^{p}"), 1)),
        (coef(), prop_oneof![Just(3i64), Just(5), Just(7)]).prop_map(|(a, q)| (format!("y^2-({a})*x^{q}"), 2)),
        (coef(), coef(), prop_oneof![Just(3i64), Just(5)])
            .prop_map(|(c, a, q)| (format!("(y-({c})*x)^2-({a})*x^{q}"), 2)),
        (coef(), prop_oneof![Just(4i64), Just(5), Just(7)]).prop_map(|(a, q)| (format!("y^3-({a})*x^{q}"), 3)),
        (coef(), coef()).prop_map(|(a, b)| (format!("(y^2-({a})*x^3)^2-({b})*x^5*y"), 4)),
    ]
}

/// Factors with negative exponents, where the generic case lives.
pub fn meromorphic_factor() -> impl Strategy<Value = (String, usize)> {
    prop_oneof![
        (coef(), coef(), -2i64..=0).prop_map(|(a, b, p)| (format!("y-({a})*x^{p}-({b})*x"), 1)),
        (coef(), prop_oneof![Just(-1i64), Just(-3)]).prop_map(|(a, q)| (format!("y^2-({a})*x^{q}"), 2)),
        (coef(), coef()).prop_map(|(a, b)| (format!("y^2+({a})*x^-1*y+({b})"), 2)),
        (coef(), coef()).prop_map(|(a, b)| (format!("y^3-({a})*x^-1-({b})*y"), 3)),
    ]
}

fn product(fs: Vec<(String, usize)>, max_deg: usize) -> Option<String> {
    let deg: usize = fs.iter().map(|f| f.1).sum();
    (deg <= max_deg).then(|| fs.into_iter().map(|(s, _)| format!("({s})")).collect::<Vec<_>>().join("*"))
}

/// Products of 1 to 3 germ factors, total degree at most 8.
pub fn germ_curve() -> impl Strategy<Value = String> {
    prop::collection::vec(germ_factor(), 1..=3).prop_filter_map("degree", |fs| product(fs, 8))
}

pub fn meromorphic_curve() -> impl Strategy<Value = String> {
    prop::collection::vec(meromorphic_factor(), 1..=3).prop_filter_map("degree", |fs| product(fs, 7))
}

/// (f, g) pairs, each side a product of one or two germ factors.
pub fn pair() -> impl Strategy<Value = (String, String)> {
    (
        prop::collection::vec(germ_factor(), 1..=2).prop_filter_map("degree", |fs| product(fs, 5)),
        prop::collection::vec(germ_factor(), 1..=2).prop_filter_map("degree", |fs| product(fs, 4)),
    )
}
