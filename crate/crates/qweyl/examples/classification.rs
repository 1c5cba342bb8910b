//! Classify weight modules by their weight supports.
//!
//! Each coordinate of the highest character contributes one axis of weight
//! data: a generic coordinate gives a full q-power orbit, an integral
//! exponent `alpha >= 0` a lower ray `k <= alpha`, and `alpha < 0` an upper
//! ray `k > alpha`.  Two simple modules are isomorphic exactly when this
//! data matches axis by axis — the ray endpoint itself is not an invariant,
//! only its direction.  This example walks the rank-one trichotomy, checks
//! a few isomorphism calls against window evidence, and certifies
//! simplicity on a window.
//!
//! Run with `cargo run --example classification`.

use qweyl::{
    isomorphic_induced_rank_one, isomorphic_simple, max_submodule_oracle, parse_character,
    simple_weight_support, simplicity_report, Character, ModuleSpec, ParamContext,
};

fn main() {
    let ctx = ParamContext::symbolic(1, 2).expect("rank 1 context");

    println!("rank-one trichotomy:");
    for src in ["[c1]", "[q^2]", "[q^-2]"] {
        let phi = parse_character(src, &ctx).expect("character");
        println!(
            "  phi = {phi:8}  S-support: {}",
            simple_weight_support(&phi)
        );
    }

    // Two integral characters on the same side of the wall give isomorphic
    // simple modules; opposite sides do not.
    let q2 = parse_character("[q^2]", &ctx).expect("character");
    let q5 = parse_character("[q^5]", &ctx).expect("character");
    let qm1 = parse_character("[q^-1]", &ctx).expect("character");
    assert!(isomorphic_simple(&q2, &q5).unwrap());
    assert!(!isomorphic_simple(&q2, &qm1).unwrap());

    // For the induced modules P(phi) the same wall decides, and generic
    // characters must share their transcendental symbol.
    let c1 = parse_character("[c1]", &ctx).expect("character");
    let c1q = parse_character("[c1*q^3]", &ctx).expect("character");
    let c2 = parse_character("[c2]", &ctx).expect("character");
    assert!(isomorphic_induced_rank_one(&q2, &q5).unwrap());
    assert!(isomorphic_induced_rank_one(&c1, &c1q).unwrap());
    assert!(!isomorphic_induced_rank_one(&c1, &c2).unwrap());

    // The closed-form maximal submodule agrees with the brute-force search
    // for vectors that never reach the origin coset.
    let spec = ModuleSpec::induced(ctx.clone(), q2.clone()).expect("module");
    let oracle = max_submodule_oracle(&ctx, &q2, 6).expect("oracle");
    for k in -6..=6 {
        assert_eq!(spec.in_max_submodule(&[k]), oracle.contains(&vec![k]));
    }
    println!("\nclosed-form N(phi) matches the reachability oracle on [-6, 6]");

    // A generic character has no wall at all: S(phi) = P(phi) is simple,
    // and the window certificate confirms every vertex talks to the origin.
    let report = simplicity_report(&ctx, &c1, 4).expect("report");
    println!("\n{report}");
    assert!(report.passed());

    // In higher rank the supports multiply; mixed characters are fine.
    let ctx2 = ParamContext::symbolic(2, 2).expect("rank 2 context");
    let mixed = parse_character("[q^2, c1]", &ctx2).expect("character");
    println!(
        "phi = {mixed}  S-support: {}",
        simple_weight_support(&mixed)
    );
    assert!(!isomorphic_simple(&mixed, &Character::trivial(2)).unwrap());
}
