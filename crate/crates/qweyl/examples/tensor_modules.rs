//! Tensor decomposition of simple modules over the one-parameter algebra.
//!
//! When every skew entry is 1, the rank-n algebra is the tensor product of
//! its axis subalgebras, and a simple weight module factors accordingly:
//! `S(phi) = S(phi') (x) S(phi'')` after splitting the coordinates.  The
//! report multiplies structure constants on a window and compares supports
//! against the product of the factor descriptors.
//!
//! Run with `cargo run --example tensor_modules`.

use qweyl::{parse_character, simple_weight_support, tensor_report, Character, ParamContext};

fn main() {
    let ctx = ParamContext::all_ones(3, 2).expect("rank 3 one-parameter context");
    let phi = parse_character("[q^2, c1, q^-1]", &ctx).expect("character");

    // The factor characters are just the coordinate slices.
    let factors = phi.tensor_factors();
    println!("phi               = {phi}");
    for (idx, f) in factors.iter().enumerate() {
        println!("  axis {} factor   = {f}", idx + 1);
    }
    assert_eq!(Character::product(&factors), phi);

    // Split after axis 1 and after axis 2: both decompositions check out.
    for split in [1u8, 2u8] {
        let report = tensor_report(&ctx, &phi, split, 3).expect("report");
        println!("\n{report}");
        assert!(report.passed());
    }

    // The support descriptor multiplies along the split.
    let support = simple_weight_support(&phi);
    println!("S-support of phi  = {support}");
    for f in &factors {
        println!("  factor support  = {}", simple_weight_support(f));
    }

    // The decomposition is special to the one-parameter algebra: with a
    // symbolic skew matrix the cross-axis relations obstruct it, and the
    // report constructor refuses the context outright.
    let sym = ParamContext::symbolic(3, 2).expect("context");
    let psi = parse_character("[q^2, c1, q^-1]", &sym).expect("character");
    assert!(tensor_report(&sym, &psi, 1, 3).is_err());
}
