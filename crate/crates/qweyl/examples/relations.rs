//! Verify the defining relations of all four presentations.
//!
//! The crate implements the quantized Weyl algebra in two families
//! (Maltsiniotis and Akhavizadegan–Jordan), each in a polynomial and a
//! localized form.  `check_relations` normalizes both sides of every
//! defining relation and every z-normality identity and reports the
//! residues; a healthy build prints four all-pass reports, and the
//! deliberately perturbed run at the end shows what a failure looks like.
//!
//! Run with `cargo run --example relations`.

use qweyl::presentations::check_relations_ext;
use qweyl::{check_relations, Family, Form, ParamContext, PresentationId};

fn main() {
    let ctx = ParamContext::symbolic(2, 0).expect("rank 2 context");
    for family in [Family::Maltsiniotis, Family::AkhavizadeganJordan] {
        for form in [Form::Polynomial, Form::Localized] {
            let pres = PresentationId::new(family, form, ctx.clone());
            let report = check_relations(&pres);
            println!("{report}\n");
            assert!(report.passed(), "relation suite failed for {pres}");
        }
    }

    // The failure path: squaring q_1 in the first same-axis relation leaves
    // a nonzero residue, and the report prints it as a witness.
    let pres = PresentationId::new(Family::AkhavizadeganJordan, Form::Polynomial, ctx);
    let perturbed = check_relations_ext(&pres, true);
    println!("--- perturbed run (expected to fail) ---\n{perturbed}");
    assert_eq!(
        perturbed.failures(),
        1,
        "exactly the perturbed identity fails"
    );
}
