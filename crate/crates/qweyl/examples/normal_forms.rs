//! Normal forms: parse expressions and rewrite them onto the canonical basis.
//!
//! Every element of a presentation is stored on a fixed basis of ordered
//! words — `y^a x^b` in the polynomial forms, the `(k, m)`-indexed basis
//! `y/x^k z^m` in the localized forms — so equality is literal equality of
//! coefficient maps.  This example parses a few expressions, prints their
//! normal forms, and checks some rewrites by hand.
//!
//! Run with `cargo run --example normal_forms`.

use qweyl::{parse_element, Family, Form, ParamContext, PresentationId};

fn main() {
    let ctx = ParamContext::symbolic(2, 0).expect("rank 2 context");
    let aj_poly = PresentationId::new(Family::AkhavizadeganJordan, Form::Polynomial, ctx.clone());
    let malt_loc = PresentationId::new(Family::Maltsiniotis, Form::Localized, ctx.clone());

    // Same-axis straightening: x1*y1 = q1*y1*x1 + 1 in the AJ family.
    let straightened = parse_element("x1*y1", &aj_poly).expect("parse");
    println!("x1*y1          = {straightened}    (in {aj_poly})");
    assert_eq!(straightened.to_string(), "1 + q1*y1*x1");

    // The defining relation itself normalizes to zero.
    let relation = parse_element("x1*y1 - q1*y1*x1 - 1", &aj_poly).expect("parse");
    assert!(relation.is_zero());
    println!("x1*y1 - q1*y1*x1 - 1 = {relation}");

    // Cross-axis letters only pick up lambda factors.
    let crossed = parse_element("x2*y1", &aj_poly).expect("parse");
    println!("x2*y1          = {crossed}");

    // In the localized Maltsiniotis form z-letters are invertible and the
    // basis never mixes x and y on one axis: x1*y1 lands on z-monomials.
    let localized = parse_element("x1*y1", &malt_loc).expect("parse");
    println!("x1*y1          = {localized}    (in {malt_loc})");

    // Negative z powers parse directly in localized presentations...
    let unit = parse_element("z1^-1 * z1", &malt_loc).expect("parse");
    assert_eq!(unit.to_string(), "1");

    // ...but are rejected in polynomial ones, with a byte offset.
    let err = parse_element("z1^-1", &aj_poly).unwrap_err();
    println!("z1^-1 in the polynomial form: {err}");

    // Round trip: printing and reparsing is the identity.
    for src in ["x1*y1*x2*y2", "z1^2*x2 - 3*y1", "(q1 - 1)^2 * y1*x1"] {
        let e = parse_element(src, &malt_loc).expect("parse");
        let back = parse_element(&e.to_string(), &malt_loc).expect("reparse");
        assert_eq!(e, back, "round trip failed for {src}");
        println!("{src:24} -> {e}");
    }
}
