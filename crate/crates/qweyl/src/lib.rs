//! Exact computer algebra for multiparameter quantized Weyl algebras.
//!
//! The crate implements, over the rational function field `Q(q_i, l_ij, c_t)`:
//!
//! - [`scalars`] — exact fraction arithmetic for coefficients, quantum
//!   integers, and the shared parameter context;
//! - [`presentations`] — the two standard presentations of the quantized Weyl
//!   algebra (Maltsiniotis and Akhavizadegan–Jordan) in both their polynomial
//!   and localized forms, with normal-form multiplication, relation checking,
//!   the `theta` isomorphism between the localizations, and Zhang twisting;
//! - [`characters`] — weight characters of the commutative localized
//!   subalgebra generated by the `z_i`, with the lattice action, complexity,
//!   orbit and tensor structure;
//! - [`weightmod`] — the canonical weight modules attached to a character
//!   (the induced module and its simple quotient), membership in the maximal
//!   proper submodule with a brute-force reachability oracle, isomorphism
//!   classification, shift isomorphisms, tensor decomposition checks, twisted
//!   realizations, and action graphs (DOT / JSON lines);
//! - [`qdiff`] — the q-difference operator model on skew polynomials
//!   (scaling, multiplication, and Jackson-type derivative operators) and the
//!   checks identifying it with a simple weight module;
//! - [`parse`] / [`cli`] — a small expression language for elements and
//!   characters, and the `qweyl` command-line interface built on it.
//!
//! All arithmetic is exact; every check in the crate compares elements for
//! symbolic equality, never numerically.

pub mod characters;
pub mod cli;
pub mod parse;
pub mod presentations;
pub mod qdiff;
pub mod report;
pub mod sample;
pub mod scalars;
pub mod weightmod;

pub use characters::{Character, CharacterError, Coord};
pub use parse::{parse_character, parse_element, parse_scalar, ParseError};
pub use presentations::{
    check_relations, theta, theta_report, twist_product, twist_relation_report, z_element, Family,
    Form, Gen, NormalElement, NormalMonomial, PresentationError, PresentationId,
};
pub use qdiff::{e_equals_s_trivial_report, qdiff_morphism_report, QPolynomial, QdiffError};
pub use report::{CheckEntry, CheckReport};
pub use sample::{
    env_seed, random_character, random_element, random_scalar, random_vector, rng_from_seed,
    seeded_rng,
};
pub use scalars::{
    as_q_power, quantum_integer, LambdaMode, ParamContext, Scalar, ScalarError, Sym,
};
pub use weightmod::{
    action_graph, isomorphic_induced_rank_one, isomorphic_simple, max_submodule_oracle,
    shift_iso_report, simple_weight_support, simplicity_report, tensor_report, twist_report,
    window_points, ActionGraph, ModuleError, ModuleKind, ModuleSpec, Realization, WeightSupport,
    WeightVector,
};
