//! Weight-module action graphs in DOT and JSON-lines form.
//!
//! A weight module is supported on a lattice of basis vectors `v_k`; the
//! generators move along the axes, and an edge is present exactly when the
//! action coefficient is nonzero.  For an integral character the x- or
//! y-coefficient vanishes on one wall, which is where the maximal
//! submodule starts.  This example builds the rank-one picture for
//! `phi = [q^2]`, prints the graph both ways, and points at the missing
//! edge.
//!
//! Run with `cargo run --example module_graphs`.

use qweyl::{action_graph, parse_character, Gen, ModuleSpec, ParamContext, WeightVector};

fn main() {
    let ctx = ParamContext::symbolic(1, 0).expect("rank 1 context");
    let phi = parse_character("[q^2]", &ctx).expect("character");

    // The induced module P(phi): every v_k for k in Z.
    let induced = ModuleSpec::induced(ctx.clone(), phi.clone()).expect("module");
    let graph = action_graph(&induced, 4);
    println!("{}", graph.to_dot());

    // x1 climbs k -> k+1 freely; y1 descends and dies exactly on the wall
    // k = alpha + 1 = 3, the unique missing edge in the graph: nothing can
    // leave the cone k >= 3, which is the maximal submodule N(phi).
    let on_wall = WeightVector::basis(&induced, &[3]).expect("basis vector");
    let dropped = on_wall.apply_gen(Gen::Y(1)).expect("action");
    assert!(
        dropped.is_zero(),
        "y1 maps v_3 to zero: [3] starts the maximal submodule"
    );
    let below = WeightVector::basis(&induced, &[2]).expect("basis vector");
    assert!(!below.apply_gen(Gen::Y(1)).expect("action").is_zero());

    // The simple quotient S(phi) keeps only the vectors outside the maximal
    // submodule; its graph drops the k > 2 vertices entirely.
    let simple = ModuleSpec::simple(ctx, phi).expect("module");
    println!("{}", action_graph(&simple, 4).to_json_lines());
}
