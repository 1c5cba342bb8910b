//! Weight modules over the localized quantized Weyl algebra.
//!
//! For a character `phi` of the `z`-subalgebra, the induced module `P(phi)`
//! has basis `{ v_k : k in Z^n }` on which the Akhavizadegan–Jordan
//! localization acts by
//!
//! ```text
//! z_i . v_k = q_i^{-k_i} phi(z_i) v_k
//! x_i . v_k = prod_{j<i} l_ij^{k_j} * [k_i >= 0 ? 1 : (q_i^{-k_i} phi(z_i) - 1)/(q_i - 1)] v_{k+e_i}
//! y_i . v_k = prod_{j<i} l_ij^{-k_j} * [k_i > 0 ? (q_i^{-k_i+1} phi(z_i) - 1)/(q_i - 1) : 1] v_{k-e_i}
//! ```
//!
//! (with `l_ij` read through the skew extension, `l_ij = l_ji^{-1}` for
//! `i > j`).  The bracketed factor vanishes on at most one lattice hyperplane
//! per integral coordinate of `phi`; the maximal proper submodule `N(phi)` is
//! spanned by the `v_k` cut off behind those walls, and the quotient
//! `S(phi) = P(phi) / N(phi)` is the simple weight module attached to `phi`.
//!
//! The module provides:
//!
//! - [`ModuleSpec`] / [`WeightVector`] — exact vectors in `P(phi)` or
//!   `S(phi)` and the action of algebra elements on them, either directly or
//!   through the twisted realization built on the one-parameter module
//!   ([`Realization::TwistedFromOnes`]);
//! - [`ModuleSpec::in_max_submodule`] — the closed-form membership test for
//!   `N(phi)` — and [`max_submodule_oracle`], an independent brute-force
//!   reachability computation of the same set on a finite window;
//! - [`simple_weight_support`] and the isomorphism tests
//!   [`isomorphic_simple`] / [`isomorphic_induced_rank_one`], which classify
//!   the simple and rank-one induced modules by their weight data;
//! - [`shift_iso_report`] — explicit scalars `lambda_k` making
//!   `w_k -> lambda_k v_{k+e_l}` an isomorphism `P(e_l . phi) -> P(phi)`,
//!   verified generator by generator;
//! - [`tensor_report`] — in the one-parameter case, the identification of
//!   `P(phi)` with the tensor product of the rank-one modules of the
//!   coordinate characters;
//! - [`twist_report`] — agreement of the direct multiparameter action with
//!   the Zhang-twisted action computed on the one-parameter module;
//! - [`action_graph`] — the labelled graph of the generator action on a
//!   window of basis vectors, exportable as DOT or JSON lines.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use serde_json::json;
use thiserror::Error;

use crate::characters::{Character, Coord};
use crate::presentations::{Family, Form, Gen, NormalElement, PresentationId};
use crate::report::CheckReport;
use crate::scalars::{LambdaMode, ParamContext, Scalar};

/// Errors raised by weight-module operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    /// Vector and element (or two vectors) belong to different modules.
    #[error("operands belong to different module specifications")]
    SpecMismatch,
    /// A lattice vector or character has the wrong rank.
    #[error("expected rank {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    /// Axis index outside `1..=n`.
    #[error("axis {axis} outside 1..={rank}")]
    AxisOutOfRange { axis: u8, rank: u8 },
    /// An operation restricted to rank one was applied in higher rank.
    #[error("this classification is only available in rank one (got rank {got})")]
    RankNotOne { got: usize },
    /// A check that requires the one-parameter algebra got a multiparameter
    /// context.
    #[error("this check requires the all-ones (one-parameter) lambda mode")]
    LambdaModeMismatch,
    /// A tensor split must leave at least one axis on each side.
    #[error("split {split} does not divide rank {rank} into two nonempty blocks")]
    InvalidSplit { split: u8, rank: u8 },
}

/// Whether vectors live in the induced module `P(phi)` or its simple
/// quotient `S(phi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleKind {
    Induced,
    Simple,
}

/// How action coefficients are computed: directly from the multiparameter
/// formulas, or through the Zhang twist of the one-parameter module.  Both
/// produce the same numbers; the twisted path exists as an independent
/// realization to check against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Realization {
    Direct,
    TwistedFromOnes,
}

/// A weight module: parameter context, character, kind, and realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    ctx: ParamContext,
    phi: Character,
    kind: ModuleKind,
    realization: Realization,
}

/// `1 / (q_i - 1)`.
fn qm1_inv(i: u8) -> Scalar {
    Scalar::q(i)
        .sub(&Scalar::one())
        .inv()
        .expect("q_i - 1 is nonzero")
}

impl ModuleSpec {
    /// The induced module `P(phi)`.
    pub fn induced(ctx: ParamContext, phi: Character) -> Result<Self, ModuleError> {
        if phi.rank() != ctx.rank() as usize {
            return Err(ModuleError::RankMismatch {
                expected: ctx.rank() as usize,
                got: phi.rank(),
            });
        }
        Ok(ModuleSpec {
            ctx,
            phi,
            kind: ModuleKind::Induced,
            realization: Realization::Direct,
        })
    }

    /// The simple quotient `S(phi)`.
    pub fn simple(ctx: ParamContext, phi: Character) -> Result<Self, ModuleError> {
        Ok(ModuleSpec {
            kind: ModuleKind::Simple,
            ..ModuleSpec::induced(ctx, phi)?
        })
    }

    /// Switch the coefficient realization.
    pub fn with_realization(mut self, realization: Realization) -> Self {
        self.realization = realization;
        self
    }

    pub fn ctx(&self) -> &ParamContext {
        &self.ctx
    }

    pub fn phi(&self) -> &Character {
        &self.phi
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn realization(&self) -> Realization {
        self.realization
    }

    pub fn rank(&self) -> u8 {
        self.ctx.rank()
    }

    /// The presentation acting on this module (the localized
    /// Akhavizadegan–Jordan algebra over the module's context).
    pub fn pres(&self) -> PresentationId {
        PresentationId::new(
            Family::AkhavizadeganJordan,
            Form::Localized,
            self.ctx.clone(),
        )
    }

    fn check_k(&self, k: &[i64]) -> Result<(), ModuleError> {
        if k.len() != self.ctx.rank() as usize {
            return Err(ModuleError::RankMismatch {
                expected: self.ctx.rank() as usize,
                got: k.len(),
            });
        }
        Ok(())
    }

    /// The weight of the basis vector `v_k` (the character by which the
    /// `z_i` act on it).
    pub fn weight_of(&self, k: &[i64]) -> Character {
        self.phi.act(k)
    }

    /// The lambda prefactor a generator on axis `i` picks up from the
    /// coordinates `k_j`, `j < i`; `sign` is `+1` for `x_i`, `-1` for `y_i`.
    fn prefactor(&self, i: u8, k: &[i64], sign: i64) -> Scalar {
        match self.realization {
            Realization::Direct => {
                let mut c = Scalar::one();
                for j in 1..i {
                    let kj = k[(j - 1) as usize];
                    if kj != 0 {
                        c = c.mul(
                            &self
                                .ctx
                                .lambda(i, j)
                                .pow(sign * kj)
                                .expect("lambda nonzero"),
                        );
                    }
                }
                c
            }
            Realization::TwistedFromOnes => {
                // The twisted action of the multiparameter algebra on the
                // one-parameter module: a basis vector of degree k twists the
                // incoming generator by tau_k, and the remaining action is
                // the lambda-free one.  The prefactor is the tau_k scalar,
                // computed by the algebra-level twist machinery.
                let ones = PresentationId::new(
                    Family::AkhavizadeganJordan,
                    Form::Localized,
                    ParamContext::all_ones(self.ctx.rank(), self.ctx.generic_symbols())
                        .expect("ones context"),
                );
                let g = if sign > 0 { Gen::X(i) } else { Gen::Y(i) };
                let elem = NormalElement::generator(&ones, g).expect("generator in range");
                let twisted = crate::presentations::tau_apply(k, &elem, self.ctx.lambda_mode())
                    .expect("twist of a generator");
                let (_, c) = twisted.terms().iter().next().expect("one term");
                c.clone()
            }
        }
    }

    /// The action of a generator on the basis vector `v_k`: the coefficient
    /// and the target index.  This is the raw induced-module coefficient;
    /// [`ModuleKind::Simple`] masking happens in [`WeightVector::apply_gen`].
    pub fn gen_coeff(&self, gen: Gen, k: &[i64]) -> Result<(Scalar, Vec<i64>), ModuleError> {
        self.check_k(k)?;
        let i = gen.axis();
        if i == 0 || i > self.ctx.rank() {
            return Err(ModuleError::AxisOutOfRange {
                axis: i,
                rank: self.ctx.rank(),
            });
        }
        let idx = (i - 1) as usize;
        let ki = k[idx];
        let phi_zi = self.phi.value(i);
        match gen {
            Gen::Z(_) | Gen::ZInv(_) => {
                let s = if matches!(gen, Gen::Z(_)) { 1 } else { -1 };
                let val = Scalar::q_pow(i, -ki)
                    .mul(&phi_zi)
                    .pow(s)
                    .expect("weight values are invertible");
                Ok((val, k.to_vec()))
            }
            Gen::X(_) => {
                let branch = if ki >= 0 {
                    Scalar::one()
                } else {
                    Scalar::q_pow(i, -ki)
                        .mul(&phi_zi)
                        .sub(&Scalar::one())
                        .mul(&qm1_inv(i))
                };
                let mut target = k.to_vec();
                target[idx] += 1;
                Ok((self.prefactor(i, k, 1).mul(&branch), target))
            }
            Gen::Y(_) => {
                let branch = if ki > 0 {
                    Scalar::q_pow(i, -ki + 1)
                        .mul(&phi_zi)
                        .sub(&Scalar::one())
                        .mul(&qm1_inv(i))
                } else {
                    Scalar::one()
                };
                let mut target = k.to_vec();
                target[idx] -= 1;
                Ok((self.prefactor(i, k, -1).mul(&branch), target))
            }
        }
    }

    /// Closed-form membership of `v_k` in the maximal proper submodule
    /// `N(phi)`: some integral coordinate `a_i` of `phi` cuts `k` off from
    /// the origin — `k_i > a_i` when `a_i >= 0`, or `k_i <= a_i` when
    /// `a_i < 0`.
    pub fn in_max_submodule(&self, k: &[i64]) -> bool {
        debug_assert_eq!(k.len(), self.phi.rank());
        self.phi.coords().iter().zip(k).any(|(c, ki)| match c {
            Coord::Integral(a) => (*a >= 0 && *ki > *a) || (*a < 0 && *ki <= *a),
            Coord::Generic { .. } => false,
        })
    }
}

/// An exact vector in `P(phi)` or `S(phi)`: a finite combination of basis
/// vectors `v_k` with scalar coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    spec: ModuleSpec,
    entries: BTreeMap<Vec<i64>, Scalar>,
}

impl WeightVector {
    pub fn zero(spec: &ModuleSpec) -> Self {
        WeightVector {
            spec: spec.clone(),
            entries: BTreeMap::new(),
        }
    }

    /// The basis vector `v_k`.  In the simple quotient, indices inside the
    /// maximal submodule name the zero coset.
    pub fn basis(spec: &ModuleSpec, k: &[i64]) -> Result<Self, ModuleError> {
        spec.check_k(k)?;
        let mut out = WeightVector::zero(spec);
        if spec.kind == ModuleKind::Simple && spec.in_max_submodule(k) {
            return Ok(out);
        }
        out.entries.insert(k.to_vec(), Scalar::one());
        Ok(out)
    }

    pub fn spec(&self) -> &ModuleSpec {
        &self.spec
    }

    pub fn entries(&self) -> &BTreeMap<Vec<i64>, Scalar> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn add_entry(&mut self, k: Vec<i64>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &WeightVector) -> Result<WeightVector, ModuleError> {
        if self.spec != other.spec {
            return Err(ModuleError::SpecMismatch);
        }
        let mut out = self.clone();
        for (k, c) in &other.entries {
            out.add_entry(k.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> WeightVector {
        if s.is_zero() {
            return WeightVector::zero(&self.spec);
        }
        WeightVector {
            spec: self.spec.clone(),
            entries: self
                .entries
                .iter()
                .map(|(k, c)| (k.clone(), c.mul(s)))
                .collect(),
        }
    }

    /// Apply a single generator.
    pub fn apply_gen(&self, gen: Gen) -> Result<WeightVector, ModuleError> {
        let mut out = WeightVector::zero(&self.spec);
        for (k, c) in &self.entries {
            let (coeff, target) = self.spec.gen_coeff(gen, k)?;
            if coeff.is_zero() {
                continue;
            }
            if self.spec.kind == ModuleKind::Simple && self.spec.in_max_submodule(&target) {
                continue;
            }
            out.add_entry(target, &c.mul(&coeff));
        }
        Ok(out)
    }

    /// Apply `z_i^s` (diagonal, any integer power).
    fn apply_z_pow(&self, i: u8, s: i64) -> Result<WeightVector, ModuleError> {
        let mut out = WeightVector::zero(&self.spec);
        for (k, c) in &self.entries {
            let (zval, _) = self.spec.gen_coeff(Gen::Z(i), k)?;
            let val = zval.pow(s).expect("weight values are invertible");
            out.add_entry(k.clone(), &c.mul(&val));
        }
        Ok(out)
    }

    /// Apply an algebra element.  The element must live in the localized
    /// Akhavizadegan–Jordan presentation over the module's context.
    pub fn apply(&self, elem: &NormalElement) -> Result<WeightVector, ModuleError> {
        let p = elem.pres();
        if p.family != Family::AkhavizadeganJordan
            || p.form != Form::Localized
            || p.ctx() != self.spec.ctx()
        {
            return Err(ModuleError::SpecMismatch);
        }
        use crate::presentations::Letter;
        let mut out = WeightVector::zero(&self.spec);
        for (mono, c) in elem.terms() {
            // A word acts letter by letter, rightmost letter first.
            let mut cur = self.scale(c);
            for letter in mono.letters().iter().rev() {
                cur = match letter {
                    Letter::X(i) => cur.apply_gen(Gen::X(*i))?,
                    Letter::Y(i) => cur.apply_gen(Gen::Y(*i))?,
                    Letter::Z(i, s) => cur.apply_z_pow(*i, *s)?,
                };
                if cur.is_zero() {
                    break;
                }
            }
            out = out.add(&cur)?;
        }
        Ok(out)
    }
}

impl fmt::Display for WeightVector {
    /// Basis expansion, e.g. `v(0,1) - 3*v(1,1)`; the zero vector is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.entries {
            let name = format!(
                "v({})",
                k.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            let (neg, abs) = match c.term_sign_split() {
                Some((neg, abs)) => (neg, Some(abs)),
                None => (false, None),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match abs {
                Some(abs) if abs.is_one() => write!(f, "{name}")?,
                Some(abs) => write!(f, "{abs}*{name}")?,
                None => write!(f, "({c})*{name}")?,
            }
        }
        Ok(())
    }
}

/// All lattice points of the cube `[-radius, radius]^n`, in lexicographic
/// order.
pub fn window_points(n: usize, radius: i64) -> Vec<Vec<i64>> {
    assert!(radius >= 0, "window radius must be nonnegative");
    let mut out = Vec::new();
    let mut cur = vec![-radius; n];
    loop {
        out.push(cur.clone());
        let mut idx = n;
        loop {
            if idx == 0 {
                return out;
            }
            idx -= 1;
            if cur[idx] < radius {
                cur[idx] += 1;
                for later in cur.iter_mut().skip(idx + 1) {
                    *later = -radius;
                }
                break;
            }
        }
    }
}

/// The set of window indices `k` whose basis vector generates the origin:
/// reverse breadth-first search from `v_0` along nonzero `x`/`y` edges,
/// restricted to `[-radius, radius]^n`.  For simple-quotient specs the walk
/// stays inside the support.
pub fn reaches_origin(spec: &ModuleSpec, radius: i64) -> BTreeSet<Vec<i64>> {
    let n = spec.rank();
    let origin = vec![0i64; n as usize];
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(origin.clone());
    queue.push_back(origin);
    while let Some(k) = queue.pop_front() {
        for i in 1..=n {
            let idx = (i - 1) as usize;
            // k - e_i reaches k through x_i; k + e_i through y_i.
            for (delta, gen) in [(-1, Gen::X(i)), (1, Gen::Y(i))] {
                let mut pred = k.clone();
                pred[idx] += delta;
                if pred[idx].abs() > radius || seen.contains(&pred) {
                    continue;
                }
                if spec.kind() == ModuleKind::Simple && spec.in_max_submodule(&pred) {
                    continue;
                }
                let (c, _) = spec.gen_coeff(gen, &pred).expect("window point");
                if !c.is_zero() {
                    seen.insert(pred.clone());
                    queue.push_back(pred);
                }
            }
        }
    }
    seen
}

/// The set of window indices reachable from the origin along nonzero
/// `x`/`y` edges (forward breadth-first search, support-restricted for
/// simple-quotient specs).
pub fn reachable_from_origin(spec: &ModuleSpec, radius: i64) -> BTreeSet<Vec<i64>> {
    let n = spec.rank();
    let origin = vec![0i64; n as usize];
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(origin.clone());
    queue.push_back(origin);
    while let Some(k) = queue.pop_front() {
        for i in 1..=n {
            for gen in [Gen::X(i), Gen::Y(i)] {
                let (c, target) = spec.gen_coeff(gen, &k).expect("window point");
                if c.is_zero() || target.iter().any(|t| t.abs() > radius) || seen.contains(&target)
                {
                    continue;
                }
                if spec.kind() == ModuleKind::Simple && spec.in_max_submodule(&target) {
                    continue;
                }
                seen.insert(target.clone());
                queue.push_back(target);
            }
        }
    }
    seen
}

/// Brute-force computation of `N(phi)` on a window, independent of the
/// closed-form membership test: `v_k` lies in the maximal proper submodule
/// exactly when the origin is unreachable from `k`.  Any path from `k` to
/// the origin can be replaced by one that moves each coordinate monotonely,
/// so the window truncation is exact for every `k` inside it.
pub fn max_submodule_oracle(
    ctx: &ParamContext,
    phi: &Character,
    radius: i64,
) -> Result<BTreeSet<Vec<i64>>, ModuleError> {
    let spec = ModuleSpec::induced(ctx.clone(), phi.clone())?;
    let up = reaches_origin(&spec, radius);
    Ok(window_points(spec.rank() as usize, radius)
        .into_iter()
        .filter(|k| !up.contains(k))
        .collect())
}

/// The weight data of one axis of a simple module.
#[derive(Debug, Clone, Eq)]
pub enum AxisWeights {
    /// Generic coordinate: the weights sweep the full orbit
    /// `{ c_t q_i^m : m in Z }`.
    FullOrbit { symbol: u32 },
    /// Integral coordinate `a >= 0`: support `k_i <= a`, weights
    /// `{ q_i^m : m >= 0 }`.
    LowerRay { alpha: i64 },
    /// Integral coordinate `a < 0`: support `k_i >= a + 1`, weights
    /// `{ q_i^m : m <= -1 }`.
    UpperRay { alpha: i64 },
}

impl PartialEq for AxisWeights {
    /// Equality of the *weight sets*: rays of the same direction coincide
    /// for every cutoff `alpha`, so the cutoff is ignored; full orbits match
    /// only if they use the same symbol.
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (AxisWeights::FullOrbit { symbol: a }, AxisWeights::FullOrbit { symbol: b }) => a == b,
            (AxisWeights::LowerRay { .. }, AxisWeights::LowerRay { .. }) => true,
            (AxisWeights::UpperRay { .. }, AxisWeights::UpperRay { .. }) => true,
            _ => false,
        }
    }
}

impl fmt::Display for AxisWeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxisWeights::FullOrbit { symbol } => write!(f, "{{c{symbol}*q^m : m in Z}}"),
            AxisWeights::LowerRay { .. } => write!(f, "{{q^m : m >= 0}}"),
            AxisWeights::UpperRay { .. } => write!(f, "{{q^m : m <= -1}}"),
        }
    }
}

/// The per-axis weight data of a simple module; two simple modules are
/// isomorphic exactly when these descriptors agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSupport {
    axes: Vec<AxisWeights>,
}

impl WeightSupport {
    pub fn axes(&self) -> &[AxisWeights] {
        &self.axes
    }
}

impl fmt::Display for WeightSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, a) in self.axes.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// The weight data of the simple module `S(phi)`.
pub fn simple_weight_support(phi: &Character) -> WeightSupport {
    WeightSupport {
        axes: phi
            .coords()
            .iter()
            .map(|c| match c {
                Coord::Generic { symbol, .. } => AxisWeights::FullOrbit { symbol: *symbol },
                Coord::Integral(a) if *a >= 0 => AxisWeights::LowerRay { alpha: *a },
                Coord::Integral(a) => AxisWeights::UpperRay { alpha: *a },
            })
            .collect(),
    }
}

/// Whether `S(phi)` and `S(psi)` are isomorphic: their weight data agree
/// axis by axis.
pub fn isomorphic_simple(phi: &Character, psi: &Character) -> Result<bool, ModuleError> {
    if phi.rank() != psi.rank() {
        return Err(ModuleError::RankMismatch {
            expected: phi.rank(),
            got: psi.rank(),
        });
    }
    Ok(simple_weight_support(phi) == simple_weight_support(psi))
}

/// Whether the rank-one induced modules `P(phi)` and `P(psi)` are
/// isomorphic: the characters lie in the same orbit, and for integral
/// coordinates the exponents fall on the same side of the wall (both
/// `>= 0` or both `< 0`) — the shift isomorphisms connect exactly those.
pub fn isomorphic_induced_rank_one(phi: &Character, psi: &Character) -> Result<bool, ModuleError> {
    if phi.rank() != 1 || psi.rank() != 1 {
        return Err(ModuleError::RankNotOne {
            got: phi.rank().max(psi.rank()),
        });
    }
    Ok(match (phi.coord(1), psi.coord(1)) {
        (Coord::Integral(a), Coord::Integral(b)) => (a >= 0) == (b >= 0),
        (Coord::Generic { symbol: s, .. }, Coord::Generic { symbol: t, .. }) => s == t,
        _ => false,
    })
}

/// Verify the shift isomorphism `P(e_l . phi) -> P(phi)` given by
/// `w_k -> lambda_k v_{k+e_l}` with
///
/// ```text
/// lambda_k = mu^{[k_l < 0]} * prod_{i > l} l_il^{k_i},
/// mu       = (phi(z_l) - 1) / (q_l - 1),
/// ```
///
/// checking the intertwining relation for every generator over the window.
/// When `phi(z_l) = 1` the scalars `lambda_k` vanish for `k_l < 0` and the
/// map degenerates; the report then fails on its nonvanishing entry.
pub fn shift_iso_report(
    ctx: &ParamContext,
    phi: &Character,
    ell: u8,
    radius: i64,
) -> Result<CheckReport, ModuleError> {
    let n = ctx.rank();
    if ell == 0 || ell > n {
        return Err(ModuleError::AxisOutOfRange { axis: ell, rank: n });
    }
    let mut e_ell = vec![0i64; n as usize];
    e_ell[(ell - 1) as usize] = 1;
    let source = ModuleSpec::induced(ctx.clone(), phi.act(&e_ell))?;
    let target = ModuleSpec::induced(ctx.clone(), phi.clone())?;

    let mu = phi.value(ell).sub(&Scalar::one()).mul(&qm1_inv(ell));
    let lam = |k: &[i64]| -> Scalar {
        let mut c = if k[(ell - 1) as usize] < 0 {
            mu.clone()
        } else {
            Scalar::one()
        };
        for i in (ell + 1)..=n {
            let ki = k[(i - 1) as usize];
            if ki != 0 {
                c = c.mul(&ctx.lambda(i, ell).pow(ki).expect("lambda nonzero"));
            }
        }
        c
    };

    let mut report = CheckReport::new(format!(
        "shift isomorphism P({}) -> P({phi}) along axis {ell}, window radius {radius}",
        source.phi()
    ));
    report.check(
        format!("the connecting scalar mu = (phi(z{ell}) - 1)/(q{ell} - 1) is nonzero"),
        !mu.is_zero(),
        if mu.is_zero() {
            Some(format!(
                "phi(z{ell}) = 1, so lambda_k vanishes whenever k{ell} < 0"
            ))
        } else {
            None
        },
    );

    let window = window_points(n as usize, radius);
    for i in 1..=n {
        for gen in [Gen::X(i), Gen::Y(i), Gen::Z(i)] {
            let mut holds = true;
            let mut witness = None;
            for k in &window {
                let (c_src, k_to) = source.gen_coeff(gen, k)?;
                let shifted: Vec<i64> = k.iter().zip(&e_ell).map(|(a, b)| a + b).collect();
                let (c_tgt, _) = target.gen_coeff(gen, &shifted)?;
                let lhs = c_src.mul(&lam(&k_to));
                let rhs = lam(k).mul(&c_tgt);
                if lhs != rhs {
                    holds = false;
                    witness =
                        Some(format!(
                        "k = ({}): mapped {gen}.w_k gives {lhs}, {gen} on the image gives {rhs}",
                        k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                    ));
                    break;
                }
            }
            report.check(
                format!("{gen} intertwines with the shift map along axis {ell}"),
                holds,
                witness,
            );
        }
    }
    Ok(report)
}

/// Verify that over the one-parameter algebra the induced module of `phi`
/// is the tensor product of the induced modules of its two coordinate
/// blocks `phi = phi_1 (x) phi_2`, split after axis `split`: generator
/// coefficients match the factor action, and membership in the maximal
/// submodule is the union of the factor memberships.
pub fn tensor_report(
    ctx: &ParamContext,
    phi: &Character,
    split: u8,
    radius: i64,
) -> Result<CheckReport, ModuleError> {
    if *ctx.lambda_mode() != LambdaMode::AllOnes {
        return Err(ModuleError::LambdaModeMismatch);
    }
    let n = ctx.rank();
    if split == 0 || split >= n {
        return Err(ModuleError::InvalidSplit { split, rank: n });
    }
    if phi.rank() != n as usize {
        return Err(ModuleError::RankMismatch {
            expected: n as usize,
            got: phi.rank(),
        });
    }
    let s = split as usize;
    let ctx1 = ParamContext::all_ones(split, ctx.generic_symbols()).expect("factor context");
    let ctx2 = ParamContext::all_ones(n - split, ctx.generic_symbols()).expect("factor context");
    let phi1 = Character::from_coords(phi.coords()[..s].to_vec());
    let phi2 = Character::from_coords(phi.coords()[s..].to_vec());
    let full = ModuleSpec::induced(ctx.clone(), phi.clone())?;
    let left = ModuleSpec::induced(ctx1, phi1.clone())?;
    let right = ModuleSpec::induced(ctx2, phi2.clone())?;

    let mut report = CheckReport::new(format!(
        "tensor decomposition P({phi}) = P({phi1}) (x) P({phi2}), split after axis {split}, window radius {radius}"
    ));
    let window = window_points(n as usize, radius);

    for i in 1..=n {
        for gen in [Gen::X(i), Gen::Y(i), Gen::Z(i)] {
            let mut holds = true;
            let mut witness = None;
            for k in &window {
                let (c_full, t_full) = full.gen_coeff(gen, k)?;
                // Project onto the factor owning axis i; the other block of
                // the target index must stay fixed.
                let (c_fac, t_fac, lo, hi) = if i <= split {
                    let (c, t) = left.gen_coeff(gen, &k[..s])?;
                    (c, t, 0, s)
                } else {
                    let fgen = match gen {
                        Gen::X(_) => Gen::X(i - split),
                        Gen::Y(_) => Gen::Y(i - split),
                        _ => Gen::Z(i - split),
                    };
                    let (c, t) = right.gen_coeff(fgen, &k[s..])?;
                    // The right factor numbers its axes locally; translate
                    // its `q` symbols back to the global axes.
                    let c = c.relabel_symbols(|sym| match sym {
                        crate::scalars::Sym::Q(j) => crate::scalars::Sym::Q(j + split),
                        crate::scalars::Sym::L(a, b) => {
                            crate::scalars::Sym::L(a + split, b + split)
                        }
                        other => other,
                    });
                    (c, t, s, n as usize)
                };
                let mut expected = k.clone();
                expected[lo..hi].copy_from_slice(&t_fac);
                if c_full != c_fac || t_full != expected {
                    holds = false;
                    witness = Some(format!(
                        "k = ({}): product coefficient {c_full}, factor coefficient {c_fac}",
                        k.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    ));
                    break;
                }
            }
            report.check(
                format!("{gen} acts on the product as on its tensor factor"),
                holds,
                witness,
            );
        }
    }

    let mut holds = true;
    let mut witness = None;
    for k in &window {
        let whole = full.in_max_submodule(k);
        let parts = left.in_max_submodule(&k[..s]) || right.in_max_submodule(&k[s..]);
        if whole != parts {
            holds = false;
            witness = Some(format!("k = {k:?}: product {whole}, factors {parts}"));
            break;
        }
    }
    report.check(
        "the maximal submodule of the product is the union of the factor walls",
        holds,
        witness,
    );
    Ok(report)
}

/// Verify that the direct multiparameter action and the Zhang-twisted
/// realization on the one-parameter module produce identical coefficients
/// for every generator over the window.
pub fn twist_report(
    ctx: &ParamContext,
    phi: &Character,
    radius: i64,
) -> Result<CheckReport, ModuleError> {
    let direct = ModuleSpec::induced(ctx.clone(), phi.clone())?;
    let twisted = direct
        .clone()
        .with_realization(Realization::TwistedFromOnes);
    let n = ctx.rank();
    let mut report = CheckReport::new(format!(
        "twisted realization of P({phi}) from the one-parameter module, window radius {radius}"
    ));
    let window = window_points(n as usize, radius);
    for i in 1..=n {
        for gen in [Gen::X(i), Gen::Y(i), Gen::Z(i)] {
            let mut holds = true;
            let mut witness = None;
            for k in &window {
                let (c_d, t_d) = direct.gen_coeff(gen, k)?;
                let (c_t, t_t) = twisted.gen_coeff(gen, k)?;
                if c_d != c_t || t_d != t_t {
                    holds = false;
                    witness = Some(format!(
                        "k = {k:?}: direct coefficient {c_d}, twisted coefficient {c_t}"
                    ));
                    break;
                }
            }
            report.check(
                format!("{gen} acts identically in the direct and twisted realizations"),
                holds,
                witness,
            );
        }
    }
    Ok(report)
}

/// Certify simplicity of `S(phi)` on a window: every support vector
/// generates the origin coset and is generated by it, so any nonzero
/// submodule meeting the window is everything.
pub fn simplicity_report(
    ctx: &ParamContext,
    phi: &Character,
    radius: i64,
) -> Result<CheckReport, ModuleError> {
    let spec = ModuleSpec::simple(ctx.clone(), phi.clone())?;
    let n = spec.rank() as usize;
    let support: Vec<Vec<i64>> = window_points(n, radius)
        .into_iter()
        .filter(|k| !spec.in_max_submodule(k))
        .collect();
    let up = reaches_origin(&spec, radius);
    let down = reachable_from_origin(&spec, radius);
    let mut report = CheckReport::new(format!(
        "simplicity of S({phi}) on the window of radius {radius}"
    ));
    let missing_up = support.iter().find(|k| !up.contains(*k));
    report.check(
        "every support vector generates the origin coset",
        missing_up.is_none(),
        missing_up.map(|k| format!("v{k:?} does not reach the origin")),
    );
    let missing_down = support.iter().find(|k| !down.contains(*k));
    report.check(
        "the origin coset generates every support vector",
        missing_down.is_none(),
        missing_down.map(|k| format!("v{k:?} is not reached from the origin")),
    );
    Ok(report)
}

/// A node of the action graph: a basis index, its weight (the `z_i`
/// eigenvalues), and whether it lies in the maximal proper submodule.
#[derive(Debug, Clone)]
pub struct GraphNode {
    pub k: Vec<i64>,
    pub weight: Vec<Scalar>,
    pub in_max_submodule: bool,
}

/// A labelled edge `v_from -> coeff * v_to` of the generator action.
#[derive(Debug, Clone)]
pub struct GraphEdge {
    pub from: Vec<i64>,
    pub to: Vec<i64>,
    pub gen: Gen,
    pub coeff: Scalar,
}

/// The action graph of a module on a window of basis vectors.
#[derive(Debug, Clone)]
pub struct ActionGraph {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

fn node_id(k: &[i64]) -> String {
    format!(
        "({})",
        k.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

impl ActionGraph {
    /// Graphviz DOT rendering.  Vectors inside the maximal submodule are
    /// drawn dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        s.push_str("digraph weight_action {\n  rankdir=LR;\n");
        for node in &self.nodes {
            let id = node_id(&node.k);
            let style = if node.in_max_submodule {
                ", style=dashed"
            } else {
                ""
            };
            let _ = writeln!(s, "  \"{id}\" [label=\"{id}\"{style}];");
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                node_id(&e.from),
                node_id(&e.to),
                e.gen
            );
        }
        s.push_str("}\n");
        s
    }

    /// JSON-lines rendering: one object per node
    /// (`{"type":"node","k":..,"weight":..,"in_max_submodule":..}`) followed
    /// by one per edge (`{"type":"edge","from":..,"to":..,"gen":..,"coeff":..}`).
    pub fn to_json_lines(&self) -> String {
        let mut s = String::new();
        for node in &self.nodes {
            let line = json!({
                "type": "node",
                "k": node.k,
                "weight": node.weight.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "in_max_submodule": node.in_max_submodule,
            });
            let _ = writeln!(s, "{line}");
        }
        for e in &self.edges {
            let line = json!({
                "type": "edge",
                "from": e.from,
                "to": e.to,
                "gen": e.gen.to_string(),
                "coeff": e.coeff.to_string(),
            });
            let _ = writeln!(s, "{line}");
        }
        s
    }
}

/// Build the action graph of a module on the window `[-radius, radius]^n`:
/// one node per basis vector (support only, for simple quotients), one edge
/// per nonzero `x_i`/`y_i` matrix entry with both ends in the window.  The
/// diagonal `z_i` action is recorded in the node weights.
pub fn action_graph(spec: &ModuleSpec, radius: i64) -> ActionGraph {
    let n = spec.rank();
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for k in window_points(n as usize, radius) {
        let in_max = spec.in_max_submodule(&k);
        if spec.kind() == ModuleKind::Simple && in_max {
            continue;
        }
        let weight = (1..=n)
            .map(|i| spec.gen_coeff(Gen::Z(i), &k).expect("window point").0)
            .collect();
        nodes.push(GraphNode {
            k: k.clone(),
            weight,
            in_max_submodule: in_max,
        });
        for i in 1..=n {
            for gen in [Gen::X(i), Gen::Y(i)] {
                let (c, target) = spec.gen_coeff(gen, &k).expect("window point");
                if c.is_zero() || target.iter().any(|t| t.abs() > radius) {
                    continue;
                }
                if spec.kind() == ModuleKind::Simple && spec.in_max_submodule(&target) {
                    continue;
                }
                edges.push(GraphEdge {
                    from: k.clone(),
                    to: target,
                    gen,
                    coeff: c,
                });
            }
        }
    }
    ActionGraph { nodes, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::Coord;

    fn ctx(n: u8) -> ParamContext {
        ParamContext::symbolic(n, 2).unwrap()
    }

    fn chr(coords: Vec<Coord>) -> Character {
        Character::from_coords(coords)
    }

    fn int1() -> Character {
        chr(vec![Coord::Integral(1)])
    }

    #[test]
    fn rank_one_action_coefficients() {
        // phi(z) = q^1.
        let spec = ModuleSpec::induced(ctx(1), int1()).unwrap();
        // x at k = -1 crosses back over the wall: (q^2 - 1)/(q - 1) = q + 1.
        let (c, t) = spec.gen_coeff(Gen::X(1), &[-1]).unwrap();
        assert_eq!(c, Scalar::q(1).add(&Scalar::one()));
        assert_eq!(t, vec![0]);
        // x at k >= 0 is free.
        let (c, t) = spec.gen_coeff(Gen::X(1), &[0]).unwrap();
        assert!(c.is_one());
        assert_eq!(t, vec![1]);
        // y vanishes exactly at k = alpha + 1 = 2.
        let (c, _) = spec.gen_coeff(Gen::Y(1), &[2]).unwrap();
        assert!(c.is_zero());
        let (c, _) = spec.gen_coeff(Gen::Y(1), &[1]).unwrap();
        assert!(c.is_one());
        // z is diagonal with eigenvalue q^{1 - k}.
        let (c, t) = spec.gen_coeff(Gen::Z(1), &[3]).unwrap();
        assert_eq!(c, Scalar::q_pow(1, -2));
        assert_eq!(t, vec![3]);
        let (c, _) = spec.gen_coeff(Gen::ZInv(1), &[3]).unwrap();
        assert_eq!(c, Scalar::q_pow(1, 2));
    }

    #[test]
    fn lambda_prefactors_cross_axes() {
        // x2 past k1 = 3 picks up l12^-3; y2 picks up l12^3.
        let phi = chr(vec![
            Coord::Generic {
                symbol: 1,
                shift: 0
            };
            2
        ]);
        let spec = ModuleSpec::induced(ctx(2), phi).unwrap();
        let (c, _) = spec.gen_coeff(Gen::X(2), &[3, 0]).unwrap();
        assert_eq!(c, Scalar::lambda_sym(1, 2).pow(-3).unwrap());
        let (c, _) = spec.gen_coeff(Gen::Y(2), &[3, 1]).unwrap();
        // k2 = 1 > 0 contributes the wall factor (q2^0 c1 - 1)/(q2 - 1).
        let wall = Scalar::c(1)
            .sub(&Scalar::one())
            .mul(&Scalar::q(2).sub(&Scalar::one()).inv().unwrap());
        assert_eq!(c, Scalar::lambda_sym(1, 2).pow(3).unwrap().mul(&wall));
        // x1 has no smaller axis to cross.
        let (c, _) = spec.gen_coeff(Gen::X(1), &[5, -4]).unwrap();
        assert!(c.is_one());
    }

    #[test]
    fn membership_closed_form_matches_oracle() {
        let cases = vec![
            chr(vec![Coord::Integral(2)]),
            chr(vec![Coord::Integral(0)]),
            chr(vec![Coord::Integral(-2)]),
            chr(vec![Coord::Generic {
                symbol: 1,
                shift: 3,
            }]),
        ];
        for phi in cases {
            let c = ctx(1);
            let spec = ModuleSpec::induced(c.clone(), phi.clone()).unwrap();
            let oracle = max_submodule_oracle(&c, &phi, 5).unwrap();
            for k in window_points(1, 5) {
                assert_eq!(
                    spec.in_max_submodule(&k),
                    oracle.contains(&k),
                    "phi = {phi}, k = {k:?}"
                );
            }
        }
        // Rank two, mixed coordinates.
        let phi = chr(vec![
            Coord::Integral(-1),
            Coord::Generic {
                symbol: 1,
                shift: 0,
            },
        ]);
        let c = ctx(2);
        let spec = ModuleSpec::induced(c.clone(), phi.clone()).unwrap();
        let oracle = max_submodule_oracle(&c, &phi, 3).unwrap();
        for k in window_points(2, 3) {
            assert_eq!(spec.in_max_submodule(&k), oracle.contains(&k), "k = {k:?}");
        }
    }

    #[test]
    fn defining_relations_act_as_zero() {
        // (x1 y1 - q1 y1 x1 - 1) . v = 0 and the mixed relation likewise.
        let c = ctx(2);
        let phi = chr(vec![
            Coord::Integral(1),
            Coord::Generic {
                symbol: 1,
                shift: 0,
            },
        ]);
        let spec = ModuleSpec::induced(c, phi).unwrap();
        let p = spec.pres();
        let x1 = NormalElement::x(&p, 1).unwrap();
        let y1 = NormalElement::y(&p, 1).unwrap();
        let x2 = NormalElement::x(&p, 2).unwrap();
        let rel = x1
            .multiply(&y1)
            .unwrap()
            .sub(&y1.multiply(&x1).unwrap().scale(&Scalar::q(1)))
            .unwrap()
            .sub(&NormalElement::one(&p))
            .unwrap();
        let mixed = x1
            .multiply(&x2)
            .unwrap()
            .sub(&x2.multiply(&x1).unwrap().scale(&Scalar::lambda_sym(1, 2)))
            .unwrap();
        for k in [[0, 0], [2, -1], [-1, 3]] {
            let v = WeightVector::basis(&spec, &k).unwrap();
            assert!(
                v.apply(&rel).unwrap().is_zero(),
                "same-axis relation at {k:?}"
            );
            assert!(
                v.apply(&mixed).unwrap().is_zero(),
                "mixed relation at {k:?}"
            );
        }
    }

    #[test]
    fn element_action_is_multiplicative() {
        // (a b) . v = a . (b . v) for sample elements.
        let c = ctx(2);
        let phi = chr(vec![
            Coord::Integral(0),
            Coord::Generic {
                symbol: 2,
                shift: -1,
            },
        ]);
        let spec = ModuleSpec::induced(c, phi).unwrap();
        let p = spec.pres();
        let a = NormalElement::x(&p, 1)
            .unwrap()
            .add(&NormalElement::z_pow(&p, 2, -1).unwrap())
            .unwrap();
        let b = NormalElement::y(&p, 1)
            .unwrap()
            .multiply(&NormalElement::y(&p, 2).unwrap())
            .unwrap()
            .add(&NormalElement::scalar(&p, Scalar::q(1)))
            .unwrap();
        let v = WeightVector::basis(&spec, &[1, -2]).unwrap();
        let ab = a.multiply(&b).unwrap();
        assert_eq!(
            v.apply(&ab).unwrap(),
            v.apply(&b).unwrap().apply(&a).unwrap()
        );
    }

    #[test]
    fn simple_quotient_masks_the_walls() {
        // phi = q^2: support is k <= 2.
        let c = ctx(1);
        let spec = ModuleSpec::simple(c, chr(vec![Coord::Integral(2)])).unwrap();
        // v_3 names the zero coset.
        assert!(WeightVector::basis(&spec, &[3]).unwrap().is_zero());
        // x pushes v_2 out of the support: the image is zero even though the
        // raw coefficient is 1.
        let v2 = WeightVector::basis(&spec, &[2]).unwrap();
        assert!(v2.apply_gen(Gen::X(1)).unwrap().is_zero());
        let (raw, _) = spec.gen_coeff(Gen::X(1), &[2]).unwrap();
        assert!(raw.is_one());
        // Inside the support the action is untouched.
        assert!(!v2.apply_gen(Gen::Y(1)).unwrap().is_zero());
    }

    #[test]
    fn simplicity_certificates() {
        let c = ctx(1);
        for phi in [
            chr(vec![Coord::Integral(2)]),
            chr(vec![Coord::Integral(-2)]),
            chr(vec![Coord::Generic {
                symbol: 1,
                shift: 0,
            }]),
        ] {
            let report = simplicity_report(&c, &phi, 4).unwrap();
            assert!(report.passed(), "phi = {phi}:\n{report}");
        }
        let c2 = ctx(2);
        let phi = chr(vec![Coord::Integral(0), Coord::Integral(-1)]);
        assert!(simplicity_report(&c2, &phi, 3).unwrap().passed());
    }

    #[test]
    fn weight_support_classification() {
        let lower = chr(vec![Coord::Integral(0)]);
        let lower5 = chr(vec![Coord::Integral(5)]);
        let upper = chr(vec![Coord::Integral(-1)]);
        let gen1 = chr(vec![Coord::Generic {
            symbol: 1,
            shift: 4,
        }]);
        let gen1b = chr(vec![Coord::Generic {
            symbol: 1,
            shift: -2,
        }]);
        let gen2 = chr(vec![Coord::Generic {
            symbol: 2,
            shift: 0,
        }]);
        // Simple modules: rays compare by direction only.
        assert!(isomorphic_simple(&lower, &lower5).unwrap());
        assert!(!isomorphic_simple(&lower, &upper).unwrap());
        assert!(isomorphic_simple(&gen1, &gen1b).unwrap());
        assert!(!isomorphic_simple(&gen1, &gen2).unwrap());
        assert!(!isomorphic_simple(&gen1, &lower).unwrap());
        // Rank-one induced modules: same orbit and same side of the wall.
        assert!(isomorphic_induced_rank_one(&lower, &lower5).unwrap());
        assert!(!isomorphic_induced_rank_one(&lower, &upper).unwrap());
        assert!(isomorphic_induced_rank_one(&gen1, &gen1b).unwrap());
        assert!(!isomorphic_induced_rank_one(&gen1, &gen2).unwrap());
        assert!(matches!(
            isomorphic_induced_rank_one(&Character::trivial(2), &Character::trivial(2)),
            Err(ModuleError::RankNotOne { got: 2 })
        ));
        // Display of the weight data.
        assert_eq!(
            simple_weight_support(&chr(vec![
                Coord::Integral(3),
                Coord::Integral(-2),
                Coord::Generic {
                    symbol: 1,
                    shift: 0
                },
            ]))
            .to_string(),
            "[{q^m : m >= 0}, {q^m : m <= -1}, {c1*q^m : m in Z}]"
        );
    }

    #[test]
    fn shift_isomorphism_holds_and_degenerates() {
        let c = ctx(2);
        let phi = chr(vec![
            Coord::Integral(2),
            Coord::Generic {
                symbol: 1,
                shift: 0,
            },
        ]);
        let report = shift_iso_report(&c, &phi, 1, 3).unwrap();
        assert!(report.passed(), "{report}");
        let report = shift_iso_report(&c, &phi, 2, 2).unwrap();
        assert!(report.passed(), "{report}");
        // phi(z_1) = 1 degenerates the scalars; the report says so.
        let flat = chr(vec![
            Coord::Integral(0),
            Coord::Generic {
                symbol: 1,
                shift: 0,
            },
        ]);
        let report = shift_iso_report(&c, &flat, 1, 2).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn tensor_decomposition_on_ones() {
        let c = ParamContext::all_ones(3, 2).unwrap();
        let phi = chr(vec![
            Coord::Integral(1),
            Coord::Generic {
                symbol: 1,
                shift: 0,
            },
            Coord::Integral(-1),
        ]);
        for split in [1, 2] {
            let report = tensor_report(&c, &phi, split, 2).unwrap();
            assert!(report.passed(), "split {split}:\n{report}");
        }
        // The multiparameter context is rejected.
        assert_eq!(
            tensor_report(&ctx(2), &chr(vec![Coord::Integral(0); 2]), 1, 1).unwrap_err(),
            ModuleError::LambdaModeMismatch
        );
    }

    #[test]
    fn twisted_realization_matches_direct() {
        let c = ctx(2);
        let phi = chr(vec![
            Coord::Integral(1),
            Coord::Generic {
                symbol: 1,
                shift: -1,
            },
        ]);
        let report = twist_report(&c, &phi, 2).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn action_graph_shows_the_wall() {
        // phi = q^1, radius 3: the only missing y edge is 2 -> 1, the x
        // edges are all present, and nodes beyond the wall are flagged.
        let spec = ModuleSpec::induced(ctx(1), int1()).unwrap();
        let g = action_graph(&spec, 3);
        assert_eq!(g.nodes.len(), 7);
        let missing_y: Vec<i64> = window_points(1, 3)
            .into_iter()
            .flatten()
            .filter(|k| {
                *k > -3
                    && !g
                        .edges
                        .iter()
                        .any(|e| e.gen == Gen::Y(1) && e.from == vec![*k])
            })
            .collect();
        assert_eq!(missing_y, vec![2]);
        let flagged: Vec<i64> = g
            .nodes
            .iter()
            .filter(|v| v.in_max_submodule)
            .flat_map(|v| v.k.clone())
            .collect();
        assert_eq!(flagged, vec![2, 3]);
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("\"(2)\" [label=\"(2)\", style=dashed];"));
        assert!(dot.contains("\"(0)\" -> \"(1)\" [label=\"x1\"];"));
        // JSON lines parse and carry both record types.
        let jl = g.to_json_lines();
        let mut nodes = 0;
        let mut edges = 0;
        for line in jl.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            match v["type"].as_str().unwrap() {
                "node" => nodes += 1,
                "edge" => edges += 1,
                other => panic!("unexpected record type {other}"),
            }
        }
        assert_eq!(nodes, 7);
        assert_eq!(edges, g.edges.len());
        // The simple quotient drops the masked vectors entirely.
        let simple = ModuleSpec::simple(ctx(1), int1()).unwrap();
        let gs = action_graph(&simple, 3);
        assert_eq!(gs.nodes.len(), 5);
        assert!(gs
            .edges
            .iter()
            .all(|e| e.to != vec![2] || e.gen != Gen::X(1)));
    }

    #[test]
    fn spec_mismatch_is_detected() {
        let spec1 = ModuleSpec::induced(ctx(1), int1()).unwrap();
        let spec2 = ModuleSpec::induced(ctx(1), chr(vec![Coord::Integral(2)])).unwrap();
        let v1 = WeightVector::basis(&spec1, &[0]).unwrap();
        let v2 = WeightVector::basis(&spec2, &[0]).unwrap();
        assert_eq!(v1.add(&v2).unwrap_err(), ModuleError::SpecMismatch);
        // Elements over a different presentation are rejected too.
        let malt = PresentationId::new(Family::Maltsiniotis, Form::Localized, ctx(1));
        let e = NormalElement::x(&malt, 1).unwrap();
        assert_eq!(v1.apply(&e).unwrap_err(), ModuleError::SpecMismatch);
        // Rank mismatches are caught when the ModuleSpec is built.
        assert_eq!(
            ModuleSpec::induced(ctx(2), int1()).unwrap_err(),
            ModuleError::RankMismatch {
                expected: 2,
                got: 1
            }
        );
    }
}
