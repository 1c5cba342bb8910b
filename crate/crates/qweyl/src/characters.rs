//! Weight characters of the commutative subalgebra generated by the `z_i`.
//!
//! A weight of the localized algebra is determined by the invertible scalars
//! `phi(z_1), .., phi(z_n)`.  This crate restricts characters to the
//! classification-relevant shape where each value is either an integral power
//! of `q_i` or a free symbol times such a power:
//!
//! - `Integral(a)`       — `phi(z_i) = q_i^a`,
//! - `Generic { t, a }`  — `phi(z_i) = c_t * q_i^a` with `c_t` a free symbol,
//!   so `phi(z_i)` never lands in the cyclic group generated by `q_i`.
//!
//! The lattice `Z^n` acts on characters through the defining automorphisms:
//! translating by `k` sends the exponent `a_i` to `a_i - k_i`.  The
//! *complexity* of a character is the set of axes with integral coordinate;
//! it is empty exactly when the induced module is already simple.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::scalars::{ParamContext, Scalar};

/// Errors raised by character construction and comparison.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    /// Coordinate count differs from the context rank.
    #[error("character has {got} coordinates, context rank is {expected}")]
    RankMismatch { expected: usize, got: usize },
    /// A generic coordinate references a weight symbol beyond the context.
    #[error("generic symbol c{symbol} exceeds the {available} symbol(s) declared in the context")]
    UnknownSymbol { symbol: u32, available: u32 },
    /// Two characters of different rank were compared.
    #[error("characters have different ranks ({0} vs {1})")]
    IncomparableRanks(usize, usize),
}

/// One coordinate of a character: the value `phi(z_i)` in restricted form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Coord {
    /// `phi(z_i) = q_i^a`.
    Integral(i64),
    /// `phi(z_i) = c_symbol * q_i^shift`.
    Generic { symbol: u32, shift: i64 },
}

impl Coord {
    /// The value `phi(z_i)` as a scalar, for axis `i`.
    pub fn value(&self, axis: u8) -> Scalar {
        match self {
            Coord::Integral(a) => Scalar::q_pow(axis, *a),
            Coord::Generic { symbol, shift } => {
                Scalar::c(*symbol).mul(&Scalar::q_pow(axis, *shift))
            }
        }
    }

    /// True iff the coordinate value lies in the cyclic group of `q_i`.
    pub fn is_integral(&self) -> bool {
        matches!(self, Coord::Integral(_))
    }

    /// The exponent shift (the `a` in `q^a` or `c_t * q^a`).
    pub fn shift(&self) -> i64 {
        match self {
            Coord::Integral(a) => *a,
            Coord::Generic { shift, .. } => *shift,
        }
    }
}

/// A weight character in restricted form, one [`Coord`] per axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Character {
    coords: Vec<Coord>,
}

impl Character {
    /// Build a character and validate it against a context.
    pub fn new(coords: Vec<Coord>, ctx: &ParamContext) -> Result<Self, CharacterError> {
        if coords.len() != ctx.rank() as usize {
            return Err(CharacterError::RankMismatch {
                expected: ctx.rank() as usize,
                got: coords.len(),
            });
        }
        for c in &coords {
            if let Coord::Generic { symbol, .. } = c {
                if *symbol == 0 || *symbol > ctx.generic_symbols() {
                    return Err(CharacterError::UnknownSymbol {
                        symbol: *symbol,
                        available: ctx.generic_symbols(),
                    });
                }
            }
        }
        Ok(Character { coords })
    }

    /// Build a character from coordinates without a context check (callers
    /// that already hold validated coordinates, e.g. the lattice action).
    pub fn from_coords(coords: Vec<Coord>) -> Self {
        Character { coords }
    }

    /// The trivial character: every `phi(z_i) = 1`.
    pub fn trivial(n: u8) -> Self {
        Character {
            coords: vec![Coord::Integral(0); n as usize],
        }
    }

    /// Number of coordinates.
    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// The coordinates.
    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    /// The coordinate for axis `i` (1-based).
    pub fn coord(&self, axis: u8) -> Coord {
        self.coords[(axis - 1) as usize]
    }

    /// The value `phi(z_i)` (1-based axis).
    pub fn value(&self, axis: u8) -> Scalar {
        self.coord(axis).value(axis)
    }

    /// Evaluate on a Laurent monomial in the `z_i`:
    /// `phi(z^m) = prod_i phi(z_i)^{m_i}`.
    pub fn eval(&self, m: &[i64]) -> Scalar {
        debug_assert_eq!(m.len(), self.coords.len());
        let mut out = Scalar::one();
        for (idx, e) in m.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            let axis = (idx + 1) as u8;
            let v = match self.coords[idx] {
                Coord::Integral(a) => Scalar::q_pow(axis, BigInt::from(a) * BigInt::from(*e)),
                Coord::Generic { symbol, shift } => {
                    Scalar::sym_pow(crate::scalars::Sym::C(symbol), BigInt::from(*e))
                        .mul(&Scalar::q_pow(axis, BigInt::from(shift) * BigInt::from(*e)))
                }
            };
            out = out.mul(&v);
        }
        out
    }

    /// The lattice action: translating by `k` shifts every exponent by
    /// `-k_i` (the weight of the basis vector indexed by `k` in the induced
    /// module attached to `phi`).
    pub fn act(&self, k: &[i64]) -> Character {
        debug_assert_eq!(k.len(), self.coords.len());
        Character {
            coords: self
                .coords
                .iter()
                .zip(k)
                .map(|(c, ki)| match c {
                    Coord::Integral(a) => Coord::Integral(a - ki),
                    Coord::Generic { symbol, shift } => Coord::Generic {
                        symbol: *symbol,
                        shift: shift - ki,
                    },
                })
                .collect(),
        }
    }

    /// Axes (1-based) whose coordinate is integral — the *complexity* of the
    /// character.  Empty complexity means the induced module is simple.
    pub fn complexity(&self) -> Vec<u8> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_integral())
            .map(|(i, _)| (i + 1) as u8)
            .collect()
    }

    /// Whether two characters lie in the same lattice orbit: coordinatewise,
    /// both integral, or both generic with the same symbol.
    pub fn same_orbit(&self, other: &Character) -> Result<bool, CharacterError> {
        if self.rank() != other.rank() {
            return Err(CharacterError::IncomparableRanks(self.rank(), other.rank()));
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| match (a, b) {
                (Coord::Integral(_), Coord::Integral(_)) => true,
                (Coord::Generic { symbol: s, .. }, Coord::Generic { symbol: t, .. }) => s == t,
                _ => false,
            }))
    }

    /// Split into rank-one characters, one per axis.
    pub fn tensor_factors(&self) -> Vec<Character> {
        self.coords
            .iter()
            .map(|c| Character { coords: vec![*c] })
            .collect()
    }

    /// Concatenate rank-one (or any-rank) characters into a product
    /// character.
    pub fn product(factors: &[Character]) -> Character {
        Character {
            coords: factors.iter().flat_map(|f| f.coords.clone()).collect(),
        }
    }
}

impl fmt::Display for Character {
    /// The character literal, e.g. `[q^2, c1*q^-1, c2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, c) in self.coords.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            match c {
                Coord::Integral(a) => write!(f, "q^{a}")?,
                Coord::Generic { symbol, shift: 0 } => write!(f, "c{symbol}")?,
                Coord::Generic { symbol, shift } => write!(f, "c{symbol}*q^{shift}")?,
            }
        }
        write!(f, "]")
    }
}
