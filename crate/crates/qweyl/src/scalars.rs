//! Exact scalar arithmetic over the coefficient field of the algebras.
//!
//! Every structure constant and module coefficient in this crate lives in the
//! rational function field `Q(q_1..q_n, l_ij, c_t)`:
//!
//! - `q_i`  — the deformation parameter attached to axis `i` (always an
//!   indeterminate, so "not a root of unity" holds by construction),
//! - `l_ij` — the skew-symmetry parameters with `i < j` (the matrix entry for
//!   `i > j` is the stored inverse, and `l_ii = 1`),
//! - `c_t`  — free weight symbols used for generic (non-integral) characters.
//!
//! A [`Scalar`] is a fraction of two sparse multivariate Laurent polynomials
//! with exact `BigInt` coefficients and `BigInt` exponents.  Equality is
//! semantic, by cross-multiplication, and never relies on polynomial gcds;
//! normalization only cancels monomial and integer content, which keeps
//! fractions tidy without ever being required for correctness.
//!
//! The module also provides:
//! - [`quantum_integer`] — `(m)_q = 1 + q + .. + q^{m-1}` with the standard
//!   extension `(m)_q = -q^m (-m)_q` to negative `m`,
//! - [`as_q_power`] — exact recognition of `s = q_i^a`,
//! - [`ParamContext`] / [`LambdaMode`] — the parameter profile (rank `n`,
//!   skew parameters, number of free weight symbols) shared by every
//!   presentation and module in a computation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors raised by scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    /// Division by the zero scalar.
    #[error("division by zero scalar")]
    DivisionByZero,
    /// An operation that needs a nonzero scalar received zero.
    #[error("zero scalar has no q-power decomposition")]
    ZeroScalar,
}

/// Errors raised when assembling a [`ParamContext`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContextError {
    /// Rank must satisfy `1 <= n <= 9` (single-digit axis indices in the
    /// canonical text form `q1`, `l12`).
    #[error("rank n = {0} outside supported range 1..=9")]
    RankOutOfRange(u8),
    /// A numeric lambda table is missing an entry for `i < j`.
    #[error("numeric lambda table has no entry for l{0}{1}")]
    MissingLambda(u8, u8),
    /// Numeric lambda entries must be nonzero.
    #[error("numeric lambda entry l{0}{1} is zero")]
    ZeroLambda(u8, u8),
}

/// One of the free symbols of the coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    /// Deformation parameter `q_i`, axis `i >= 1`.
    Q(u8),
    /// Skew parameter `l_ij`, stored only for `i < j`.
    L(u8, u8),
    /// Free weight symbol `c_t`, `t >= 1`.
    C(u32),
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sym::Q(i) => write!(f, "q{i}"),
            Sym::L(i, j) if *i <= 9 && *j <= 9 => write!(f, "l{i}{j}"),
            Sym::L(i, j) => write!(f, "l{i}_{j}"),
            Sym::C(t) => write!(f, "c{t}"),
        }
    }
}

/// A Laurent monomial in the field symbols: a finite map `Sym -> exponent`.
/// Zero exponents are never stored, so structural equality is canonical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
struct SymMono(BTreeMap<Sym, BigInt>);

impl SymMono {
    fn one() -> Self {
        SymMono(BTreeMap::new())
    }

    fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn sym_pow(sym: Sym, exp: BigInt) -> Self {
        let mut m = BTreeMap::new();
        if !exp.is_zero() {
            m.insert(sym, exp);
        }
        SymMono(m)
    }

    fn mul(&self, other: &SymMono) -> SymMono {
        let mut out = self.0.clone();
        for (s, e) in &other.0 {
            let entry = out.entry(*s).or_insert_with(BigInt::zero);
            *entry += e;
            if entry.is_zero() {
                out.remove(s);
            }
        }
        SymMono(out)
    }

    /// Divide by `other`; always exact for Laurent monomials.
    fn div(&self, other: &SymMono) -> SymMono {
        let mut out = self.0.clone();
        for (s, e) in &other.0 {
            let entry = out.entry(*s).or_insert_with(BigInt::zero);
            *entry -= e;
            if entry.is_zero() {
                out.remove(s);
            }
        }
        SymMono(out)
    }

    fn exponent_of(&self, sym: Sym) -> BigInt {
        self.0.get(&sym).cloned().unwrap_or_else(BigInt::zero)
    }

    fn relabel(&self, f: &dyn Fn(Sym) -> Sym) -> SymMono {
        let mut out: BTreeMap<Sym, BigInt> = BTreeMap::new();
        for (s, e) in &self.0 {
            let entry = out.entry(f(*s)).or_insert_with(BigInt::zero);
            *entry += e;
        }
        out.retain(|_, e| !e.is_zero());
        SymMono(out)
    }
}

impl fmt::Display for SymMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (s, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e.is_one() {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A sparse Laurent polynomial with `BigInt` coefficients.  The term map
/// never stores zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Poly {
    terms: BTreeMap<SymMono, BigInt>,
}

impl Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn one() -> Self {
        Poly::from_int(BigInt::one())
    }

    fn from_int(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(SymMono::one(), c);
        }
        Poly { terms }
    }

    fn monomial(m: SymMono, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&SymMono::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    fn add_term(&mut self, m: SymMono, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    fn relabel(&self, f: &dyn Fn(Sym) -> Sym) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.relabel(f), c);
        }
        out
    }

    fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }

    fn mul_mono(&self, m: &SymMono) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.mul(m), c.clone()))
                .collect(),
        }
    }

    fn div_mono(&self, m: &SymMono) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.div(m), c.clone()))
                .collect(),
        }
    }

    /// Per-symbol minimum exponent across all terms (the monomial content),
    /// where a symbol absent from a term counts as exponent 0.  Returns
    /// `None` for the zero polynomial.
    fn mono_content(&self) -> Option<SymMono> {
        if self.terms.is_empty() {
            return None;
        }
        let mut syms: std::collections::BTreeSet<Sym> = std::collections::BTreeSet::new();
        for m in self.terms.keys() {
            syms.extend(m.0.keys().copied());
        }
        let mut out = BTreeMap::new();
        for s in syms {
            let min = self
                .terms
                .keys()
                .map(|m| m.exponent_of(s))
                .min()
                .expect("nonzero polynomial has terms");
            if !min.is_zero() {
                out.insert(s, min);
            }
        }
        Some(SymMono(out))
    }

    /// Gcd of all integer coefficients (positive); zero poly yields 0.
    fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    fn div_int_exact(&self, c: &BigInt) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k / c)).collect(),
        }
    }

    /// Leading term under the derived monomial order (used only to pick a
    /// canonical sign and for q-power recognition).
    fn leading(&self) -> Option<(&SymMono, &BigInt)> {
        self.terms.iter().next_back()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
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
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// An element of the coefficient field: a fraction `num / den` of sparse
/// Laurent polynomials with `den != 0`.
///
/// Equality is by cross-multiplication (`a/b == c/d  iff  a*d == c*b` as
/// polynomials), so fractions never need gcd reduction to compare equal.
#[derive(Debug, Clone)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    fn make(num: Poly, den: Poly) -> Scalar {
        debug_assert!(!den.is_zero(), "scalar denominator must be nonzero");
        let mut s = Scalar { num, den };
        s.normalize();
        s
    }

    /// Light normalization: cancel joint monomial content, absorb
    /// single-monomial denominators, cancel integer content, fix the sign of
    /// the denominator, and collapse `p/p` to `1`.  None of this is needed
    /// for correctness (equality is by cross-multiplication); it only keeps
    /// printed forms and intermediate sizes reasonable.
    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        // Joint monomial content: for each symbol, min of the two contents
        // (a side without the symbol contributes 0).  Dividing both sides by
        // it cancels shared monomial factors and clears negative exponents.
        if let (Some(cn), Some(cd)) = (self.num.mono_content(), self.den.mono_content()) {
            let mut joint = BTreeMap::new();
            for (s, _) in cn.0.iter().chain(cd.0.iter()) {
                let a = cn.exponent_of(*s);
                let b = cd.exponent_of(*s);
                let m = if a < b { a } else { b };
                if !m.is_zero() {
                    joint.insert(*s, m);
                }
            }
            let joint = SymMono(joint);
            if !joint.is_one() {
                self.num = self.num.div_mono(&joint);
                self.den = self.den.div_mono(&joint);
            }
        }
        // A one-term denominator divides through exactly on the monomial part.
        if self.den.terms.len() == 1 {
            let (m, c) = self.den.terms.iter().next().unwrap();
            let (m, c) = (m.clone(), c.clone());
            if !m.is_one() {
                self.num = self.num.div_mono(&m);
                self.den = Poly::from_int(c);
            }
        }
        // Integer content.
        let g = self.num.int_content().gcd(&self.den.int_content());
        if !g.is_one() && !g.is_zero() {
            self.num = self.num.div_int_exact(&g);
            self.den = self.den.div_int_exact(&g);
        }
        // Canonical sign: leading denominator coefficient positive.
        if let Some((_, c)) = self.den.leading() {
            if c.is_negative() {
                self.num = self.num.neg();
                self.den = self.den.neg();
            }
        }
        if self.num == self.den {
            self.num = Poly::one();
            self.den = Poly::one();
        }
    }

    /// The zero scalar.
    pub fn zero() -> Scalar {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    /// The unit scalar.
    pub fn one() -> Scalar {
        Scalar {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    /// An integer constant.
    pub fn from_int(c: i64) -> Scalar {
        Scalar {
            num: Poly::from_int(BigInt::from(c)),
            den: Poly::one(),
        }
    }

    /// An arbitrary-precision integer constant.
    pub fn from_bigint(c: BigInt) -> Scalar {
        Scalar {
            num: Poly::from_int(c),
            den: Poly::one(),
        }
    }

    /// The exact rational `p / q`; panics if `q == 0`.
    pub fn rational(p: i64, q: i64) -> Scalar {
        assert!(q != 0, "rational denominator must be nonzero");
        Scalar::make(
            Poly::from_int(BigInt::from(p)),
            Poly::from_int(BigInt::from(q)),
        )
    }

    /// An exact big rational.
    pub fn from_rational(r: &BigRational) -> Scalar {
        Scalar::make(
            Poly::from_int(r.numer().clone()),
            Poly::from_int(r.denom().clone()),
        )
    }

    /// The symbol power `sym^exp`.
    pub fn sym_pow(sym: Sym, exp: impl Into<BigInt>) -> Scalar {
        Scalar {
            num: Poly::monomial(SymMono::sym_pow(sym, exp.into()), BigInt::one()),
            den: Poly::one(),
        }
    }

    /// The deformation parameter `q_i`.
    pub fn q(axis: u8) -> Scalar {
        Scalar::sym_pow(Sym::Q(axis), 1)
    }

    /// The power `q_i^exp`.
    pub fn q_pow(axis: u8, exp: impl Into<BigInt>) -> Scalar {
        Scalar::sym_pow(Sym::Q(axis), exp)
    }

    /// The skew symbol `l_ij`; requires `i < j`.
    pub fn lambda_sym(i: u8, j: u8) -> Scalar {
        assert!(i < j, "lambda symbols are stored with i < j");
        Scalar::sym_pow(Sym::L(i, j), 1)
    }

    /// The free weight symbol `c_t`.
    pub fn c(t: u32) -> Scalar {
        Scalar::sym_pow(Sym::C(t), 1)
    }

    /// True iff the scalar is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True iff the scalar equals one.
    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Rename the free symbols of the scalar — e.g. to translate a
    /// computation done on a factor algebra (whose axes are numbered
    /// locally) into the symbols of a larger one.  The renaming need not be
    /// injective; merged terms combine exactly.
    pub fn relabel_symbols(&self, f: impl Fn(Sym) -> Sym) -> Scalar {
        Scalar::make(self.num.relabel(&f), self.den.relabel(&f))
    }

    /// For scalars that print as a single signed term (one-term numerator
    /// over a one-term denominator), split off the sign: returns
    /// `Some((is_negative, absolute_value))`.  Multi-term scalars return
    /// `None`; callers parenthesize those.
    pub fn term_sign_split(&self) -> Option<(bool, Scalar)> {
        if self.num.terms.len() != 1 || self.den.terms.len() != 1 {
            return None;
        }
        let (_, c) = self.num.terms.iter().next().unwrap();
        if c.is_negative() {
            Some((true, self.neg()))
        } else {
            Some((false, self.clone()))
        }
    }

    /// Exact sum.
    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Scalar::make(self.num.add(&other.num), self.den.clone());
        }
        Scalar::make(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    /// Exact difference.
    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    /// Exact negation.
    pub fn neg(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Exact product.
    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        Scalar::make(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Exact quotient; errors on a zero divisor.
    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        Ok(Scalar::make(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        Scalar::one().checked_div(self)
    }

    /// Integer power; negative exponents error on zero.
    pub fn pow(&self, exp: i64) -> Result<Scalar, ScalarError> {
        if exp < 0 {
            return self.inv()?.pow(-exp);
        }
        let mut out = Scalar::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(out)
    }
}

impl PartialEq for Scalar {
    /// Cross-multiplication equality: `a/b == c/d` iff `a*d == c*b`.
    fn eq(&self, other: &Scalar) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.terms.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, " / ")?;
        if self.den.terms.len() > 1 {
            write!(f, "({})", self.den)
        } else {
            write!(f, "{}", self.den)
        }
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

/// The quantum integer `(m)_q` in the parameter `q_i`:
/// `(0)_q = 0`, `(m)_q = 1 + q + .. + q^{m-1}` for `m > 0`, and
/// `(m)_q = -(q^m + q^{m+1} + .. + q^{-1})` for `m < 0`, which is the unique
/// extension satisfying `(m)_q = -q^m (-m)_q`.
pub fn quantum_integer(m: i64, axis: u8) -> Scalar {
    let mut num = Poly::zero();
    if m >= 0 {
        for t in 0..m {
            num.add_term(
                SymMono::sym_pow(Sym::Q(axis), BigInt::from(t)),
                &BigInt::one(),
            );
        }
    } else {
        for t in m..0 {
            num.add_term(
                SymMono::sym_pow(Sym::Q(axis), BigInt::from(t)),
                &BigInt::from(-1),
            );
        }
    }
    Scalar {
        num,
        den: Poly::one(),
    }
}

/// If `s` equals `q_i^a` exactly, return `Some(a)`; `None` otherwise.
/// Errors on the zero scalar, which is not a power of `q_i`.
pub fn as_q_power(s: &Scalar, axis: u8) -> Result<Option<BigInt>, ScalarError> {
    if s.is_zero() {
        return Err(ScalarError::ZeroScalar);
    }
    let (ln, _) = s.num.leading().expect("nonzero numerator");
    let (ld, _) = s.den.leading().expect("nonzero denominator");
    let candidate = ln.exponent_of(Sym::Q(axis)) - ld.exponent_of(Sym::Q(axis));
    let probe = s
        .den
        .mul_mono(&SymMono::sym_pow(Sym::Q(axis), candidate.clone()));
    if probe == s.num {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}

/// How the skew parameters `l_ij` are interpreted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaMode {
    /// Every `l_ij = 1` (the "all ones" matrix, written `(1)`).
    AllOnes,
    /// Every `l_ij` with `i < j` is the free symbol `l_ij`.
    Symbolic,
    /// An explicit table of nonzero rational values for `i < j`.
    Numeric(Arc<BTreeMap<(u8, u8), BigRational>>),
}

impl LambdaMode {
    /// Convenience constructor for a numeric table.
    pub fn numeric(entries: impl IntoIterator<Item = ((u8, u8), BigRational)>) -> LambdaMode {
        LambdaMode::Numeric(Arc::new(entries.into_iter().collect()))
    }
}

/// The skew matrix entry `l_ij` under `mode`, for any `i, j` (skew-symmetric
/// extension: `l_ii = 1` and `l_ji = l_ij^-1`).  Entries for `i < j` must
/// exist; [`ParamContext::new`] validates numeric tables up front.
pub fn lambda_entry(mode: &LambdaMode, i: u8, j: u8) -> Scalar {
    match i.cmp(&j) {
        Ordering::Equal => Scalar::one(),
        Ordering::Less => match mode {
            LambdaMode::AllOnes => Scalar::one(),
            LambdaMode::Symbolic => Scalar::lambda_sym(i, j),
            LambdaMode::Numeric(table) => {
                let v = table
                    .get(&(i, j))
                    .unwrap_or_else(|| panic!("validated lambda table missing l{i}{j}"));
                Scalar::from_rational(v)
            }
        },
        Ordering::Greater => lambda_entry(mode, j, i)
            .inv()
            .expect("lambda entries are nonzero"),
    }
}

/// The shared parameter profile of a computation: rank, skew parameters, and
/// the number of free weight symbols available to generic characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamContext {
    n: u8,
    lambda: LambdaMode,
    generic_symbols: u32,
}

impl ParamContext {
    /// Build a context of rank `n` (`1..=9`).  Numeric lambda tables must
    /// cover every `i < j <= n` with nonzero values.
    pub fn new(n: u8, lambda: LambdaMode, generic_symbols: u32) -> Result<Self, ContextError> {
        if n == 0 || n > 9 {
            return Err(ContextError::RankOutOfRange(n));
        }
        if let LambdaMode::Numeric(table) = &lambda {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    match table.get(&(i, j)) {
                        None => return Err(ContextError::MissingLambda(i, j)),
                        Some(v) if v.is_zero() => return Err(ContextError::ZeroLambda(i, j)),
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(ParamContext {
            n,
            lambda,
            generic_symbols,
        })
    }

    /// Rank-`n` context with symbolic skew parameters.
    pub fn symbolic(n: u8, generic_symbols: u32) -> Result<Self, ContextError> {
        ParamContext::new(n, LambdaMode::Symbolic, generic_symbols)
    }

    /// Rank-`n` context with every `l_ij = 1`.
    pub fn all_ones(n: u8, generic_symbols: u32) -> Result<Self, ContextError> {
        ParamContext::new(n, LambdaMode::AllOnes, generic_symbols)
    }

    /// The rank `n`.
    pub fn rank(&self) -> u8 {
        self.n
    }

    /// The skew parameter mode.
    pub fn lambda_mode(&self) -> &LambdaMode {
        &self.lambda
    }

    /// Number of free weight symbols `c_1..c_T` available.
    pub fn generic_symbols(&self) -> u32 {
        self.generic_symbols
    }

    /// The matrix entry `l_ij` for any `1 <= i, j <= n`.
    pub fn lambda(&self, i: u8, j: u8) -> Scalar {
        debug_assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        lambda_entry(&self.lambda, i, j)
    }

    /// The deformation parameter `q_i` as a scalar.
    pub fn q(&self, i: u8) -> Scalar {
        debug_assert!(i >= 1 && i <= self.n);
        Scalar::q(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q1() -> Scalar {
        Scalar::q(1)
    }

    #[test]
    fn quantum_integer_small_values() {
        // (3)_q = 1 + q + q^2, (1)_q = 1, (0)_q = 0.
        let three = quantum_integer(3, 1);
        let expect = Scalar::one().add(&q1()).add(&Scalar::q_pow(1, 2));
        assert_eq!(three, expect);
        assert_eq!(quantum_integer(1, 1), Scalar::one());
        assert!(quantum_integer(0, 1).is_zero());
        // (-1)_q = -q^-1.
        assert_eq!(quantum_integer(-1, 1), Scalar::q_pow(1, -1).neg());
    }

    #[test]
    fn quantum_integer_telescopes() {
        // (m)_q (q - 1) = q^m - 1 for every m in -10..=10.
        let qm1 = q1().sub(&Scalar::one());
        for m in -10..=10 {
            let lhs = quantum_integer(m, 1).mul(&qm1);
            let rhs = Scalar::q_pow(1, m).sub(&Scalar::one());
            assert_eq!(lhs, rhs, "telescoping failed at m = {m}");
        }
    }

    #[test]
    fn quantum_integer_reflection() {
        // (m)_q = -q^m (-m)_q.
        for m in -8i64..=8 {
            let lhs = quantum_integer(m, 1);
            let rhs = Scalar::q_pow(1, m).mul(&quantum_integer(-m, 1)).neg();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn cross_multiplication_equality() {
        // (q^2 - 1) / (q - 1) == q + 1 without any gcd computation.
        let num = Scalar::q_pow(1, 2).sub(&Scalar::one());
        let den = q1().sub(&Scalar::one());
        let frac = num.checked_div(&den).unwrap();
        assert_eq!(frac, q1().add(&Scalar::one()));
        assert_ne!(frac, q1());
    }

    #[test]
    fn as_q_power_recognizes_disguised_powers() {
        // (q^2 - q)/(q - 1) = q, even left unreduced.
        let s = Scalar::q_pow(1, 2)
            .sub(&q1())
            .checked_div(&q1().sub(&Scalar::one()))
            .unwrap();
        assert_eq!(as_q_power(&s, 1).unwrap(), Some(BigInt::from(1)));
        assert_eq!(
            as_q_power(&Scalar::one(), 1).unwrap(),
            Some(BigInt::from(0))
        );
        assert_eq!(
            as_q_power(&Scalar::q_pow(1, -7), 1).unwrap(),
            Some(BigInt::from(-7))
        );
        assert_eq!(as_q_power(&q1().add(&Scalar::one()), 1).unwrap(), None);
        // c1*q^2 is not a pure q-power; q2 is not a q1-power.
        assert_eq!(
            as_q_power(&Scalar::c(1).mul(&Scalar::q_pow(1, 2)), 1).unwrap(),
            None
        );
        assert_eq!(as_q_power(&Scalar::q(2), 1).unwrap(), None);
        assert_eq!(as_q_power(&Scalar::zero(), 1), Err(ScalarError::ZeroScalar));
    }

    #[test]
    fn display_canonical_forms() {
        assert_eq!(
            format!(
                "{}",
                Scalar::from_int(3)
                    .mul(&Scalar::q_pow(1, 2))
                    .mul(&Scalar::lambda_sym(1, 2).inv().unwrap().mul(&Scalar::c(1)))
            ),
            "3*q1^2*l12^-1*c1"
        );
        let frac = q1().checked_div(&q1().sub(&Scalar::one())).unwrap();
        assert_eq!(format!("{frac}"), "q1 / (q1 - 1)");
        assert_eq!(format!("{}", Scalar::zero()), "0");
        assert_eq!(format!("{}", Scalar::rational(-3, 4)), "-3 / 4");
    }

    #[test]
    fn lambda_modes() {
        let ones = ParamContext::all_ones(3, 0).unwrap();
        assert!(ones.lambda(1, 3).is_one());
        let sym = ParamContext::symbolic(3, 0).unwrap();
        assert_eq!(sym.lambda(1, 2), Scalar::lambda_sym(1, 2));
        assert_eq!(sym.lambda(2, 1), Scalar::lambda_sym(1, 2).inv().unwrap());
        assert!(sym.lambda(2, 2).is_one());
        let table = LambdaMode::numeric([((1, 2), BigRational::new(2.into(), 3.into()))]);
        let num = ParamContext::new(2, table, 0).unwrap();
        assert_eq!(num.lambda(1, 2), Scalar::rational(2, 3));
        assert_eq!(num.lambda(2, 1), Scalar::rational(3, 2));
        // Validation: missing and zero entries are rejected.
        let missing = LambdaMode::numeric([((1, 2), BigRational::one())]);
        assert_eq!(
            ParamContext::new(3, missing, 0).unwrap_err(),
            ContextError::MissingLambda(1, 3)
        );
        let zero = LambdaMode::numeric([((1, 2), BigRational::zero())]);
        assert_eq!(
            ParamContext::new(2, zero, 0).unwrap_err(),
            ContextError::ZeroLambda(1, 2)
        );
        assert!(ParamContext::symbolic(0, 0).is_err());
        assert!(ParamContext::symbolic(10, 0).is_err());
    }

    /// A pool of small scalar atoms for property tests.
    fn atom_strategy() -> impl Strategy<Value = Scalar> {
        prop_oneof![
            (-4i64..=4).prop_map(Scalar::from_int),
            (1u8..=3).prop_map(Scalar::q),
            (1u8..=3, -2i64..=2).prop_map(|(i, e)| Scalar::q_pow(i, e)),
            Just(Scalar::lambda_sym(1, 2)),
            Just(Scalar::c(1)),
            Just(q1().sub(&Scalar::one())),
        ]
    }

    fn scalar_strategy() -> impl Strategy<Value = Scalar> {
        proptest::collection::vec(atom_strategy(), 1..4).prop_map(|atoms| {
            let mut acc = Scalar::zero();
            for (idx, a) in atoms.iter().enumerate() {
                if idx % 2 == 0 {
                    acc = acc.add(a);
                } else {
                    acc = acc.mul(a);
                }
            }
            acc
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn field_axioms(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&Scalar::zero()), a.clone());
            prop_assert_eq!(a.mul(&Scalar::one()), a.clone());
            prop_assert!(a.sub(&a).is_zero());
        }

        #[test]
        fn equality_is_multiplicative_invariant(a in scalar_strategy(), m in atom_strategy()) {
            // a == a * m / m whenever m != 0 (equality without reduction).
            prop_assume!(!m.is_zero());
            let shifted = a.mul(&m).checked_div(&m).unwrap();
            prop_assert_eq!(shifted, a);
        }

        #[test]
        fn inverse_cancels(a in scalar_strategy()) {
            prop_assume!(!a.is_zero());
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }
}
