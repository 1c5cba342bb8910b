//! The q-difference operator model of the quantized Weyl algebra.
//!
//! On skew polynomials in `y_1, ..., y_n` the algebra acts by
//! `y_i -> multiplication`, `x_i -> q-derivative d_i`, `z_i -> dilation
//! xi_i` (which scales `y_i` by `q_i`).  The q-derivative obeys
//! `d_i(y_i^k) = (k)_{q_i} y_i^{k-1}` with the quantum integer
//! `(k)_q = 1 + q + ... + q^{k-1}`.  This example differentiates a few
//! polynomials, verifies the operator relations, and identifies the
//! polynomial representation with the simple module of the trivial
//! character.
//!
//! Run with `cargo run --example q_difference`.

use qweyl::{
    e_equals_s_trivial_report, qdiff_morphism_report, quantum_integer, ParamContext, QPolynomial,
    Scalar,
};

fn main() {
    let ctx = ParamContext::symbolic(2, 0).expect("rank 2 context");

    // d_1 on y1^3: the quantum integer (3)_{q_1} appears as coefficient.
    let y1_cubed = QPolynomial::monomial(&ctx, &[3, 0], Scalar::one()).expect("monomial");
    let derived = y1_cubed.partial(1).expect("derivative");
    println!("d_1(y1^3) = {derived}");
    let expected = QPolynomial::monomial(&ctx, &[2, 0], quantum_integer(3, 1)).expect("monomial");
    assert_eq!(derived, expected);

    // The dilation operator scales each y_1 letter by q_1 and leaves y_2
    // alone; crossing it against d_1 gives the defining relation
    // d_1 m_1 - q_1 m_1 d_1 = id in operator form.
    let f = QPolynomial::monomial(&ctx, &[1, 2], Scalar::rational(1, 3)).expect("monomial");
    println!("xi_1({f}) = {}", f.xi(1).expect("dilation"));
    let lhs = f.mul_y(1).expect("m").partial(1).expect("d");
    let rhs = f
        .partial(1)
        .expect("d")
        .mul_y(1)
        .expect("m")
        .scale(&Scalar::q(1))
        .add(&f)
        .expect("sum");
    assert_eq!(lhs, rhs, "d_1 m_1 = q_1 m_1 d_1 + id on f");

    // The full relation suite for the operator assignment, including the
    // recorded failure of the uncorrected derivative normalization (the
    // probe entry stays red by design and does not fail the report).
    let report = qdiff_morphism_report(&ctx, 3);
    println!("\n{report}");
    assert!(report.passed());

    // The polynomial representation is the simple module of the trivial
    // character: the intertwiner normalizes to the identity on basis
    // vectors, uniquely once its value at the origin is fixed.
    let report = e_equals_s_trivial_report(&ctx, 4);
    println!("{report}");
    assert!(report.passed());
}
