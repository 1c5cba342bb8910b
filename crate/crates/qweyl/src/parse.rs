//! Text grammar for elements, scalars, and character literals.
//!
//! One grammar serves the whole crate:
//!
//! ```text
//! expr   := prod (('+' | '-') prod)*
//! prod   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' int)*
//! atom   := int | name | '(' expr ')'
//! name   := q<i> | l<i><j> | c<t> | x<i> | y<i> | z<i>
//! ```
//!
//! Precedence is `^` over unary `-` over `*` and `/` over `+` and `-`;
//! juxtaposition is *not* multiplication.  `^` takes (possibly negative)
//! integer literals only, and `/` requires a nonzero scalar-valued divisor.
//! `x` and `y` never carry negative exponents; `z` does only in the
//! localized form.  Every error carries the byte offset of the offending
//! token.
//!
//! [`parse_element`] evaluates the tree through [`crate::presentations`]
//! into normal form, so `x1*y1 - q1*y1*x1 - 1` parses to the zero element
//! of the polynomial Akhavizadegan–Jordan algebra.  [`parse_scalar`]
//! rejects generators and yields a field element.  [`parse_character`]
//! reads the `[q^2, c1*q^-1, c2]` literal form printed by
//! [`crate::characters::Character`].  Coefficient symbols `c<t>` beyond the
//! context's declared count are accepted in element and scalar positions
//! (they are ordinary field constants); character literals validate them
//! strictly.

use num_bigint::BigInt;

use thiserror::Error;

use crate::characters::{Character, Coord};
use crate::presentations::{Form, NormalElement, NormalMonomial, PresentationId};
use crate::scalars::{ParamContext, Scalar};

/// Errors raised while parsing expression or character text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// Malformed input; `offset` is the byte position of the offending
    /// token (or the input length for an unexpected end).
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    /// A negative exponent where the generator is not invertible.
    #[error("negative exponent on {gen} at byte {offset}: x and y are never invertible, z only in the localized form")]
    NegativeExponent { gen: char, offset: usize },
    /// A generator index beyond the presentation's rank.
    #[error("unknown generator {name} at byte {offset}: rank is {rank}")]
    UnknownGenerator {
        name: String,
        rank: u8,
        offset: usize,
    },
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

// ---------------------------------------------------------------------------
// Tokens
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokKind {
    Int(String),
    Word(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

#[derive(Debug, Clone)]
struct Tok {
    kind: TokKind,
    offset: usize,
}

fn tokenize(src: &str) -> Result<Vec<Tok>, ParseError> {
    let mut toks = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let single = match b {
            b'+' => Some(TokKind::Plus),
            b'-' => Some(TokKind::Minus),
            b'*' => Some(TokKind::Star),
            b'/' => Some(TokKind::Slash),
            b'^' => Some(TokKind::Caret),
            b'(' => Some(TokKind::LParen),
            b')' => Some(TokKind::RParen),
            b'[' => Some(TokKind::LBracket),
            b']' => Some(TokKind::RBracket),
            b',' => Some(TokKind::Comma),
            _ => None,
        };
        if let Some(kind) = single {
            toks.push(Tok { kind, offset: i });
            i += 1;
            continue;
        }
        if b.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            toks.push(Tok {
                kind: TokKind::Int(src[start..i].to_string()),
                offset: start,
            });
            continue;
        }
        if b.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            toks.push(Tok {
                kind: TokKind::Word(src[start..i].to_string()),
                offset: start,
            });
            continue;
        }
        let ch = src[i..].chars().next().expect("in-bounds character");
        return Err(syntax(i, format!("unexpected character '{ch}'")));
    }
    Ok(toks)
}

struct Cursor {
    toks: Vec<Tok>,
    pos: usize,
    end: usize,
}

impl Cursor {
    fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Cursor {
            toks: tokenize(src)?,
            pos: 0,
            end: src.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    /// Byte offset of the next token, or the input length at the end.
    fn offset(&self) -> usize {
        self.peek().map(|t| t.offset).unwrap_or(self.end)
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    /// Consume the next token if it has exactly this kind.
    fn eat(&mut self, kind: &TokKind) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: &TokKind, what: &str) -> Result<usize, ParseError> {
        let off = self.offset();
        if self.eat(kind) {
            Ok(off)
        } else {
            Err(syntax(off, format!("expected {what}")))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(syntax(
                t.offset,
                "expected an operator or the end of the input",
            )),
        }
    }

    /// The (possibly negated) integer literal demanded by `^`.
    fn exponent(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat(&TokKind::Minus);
        let off = self.offset();
        match self.advance() {
            Some(Tok {
                kind: TokKind::Int(digits),
                ..
            }) => {
                let value: i64 = digits
                    .parse()
                    .map_err(|_| syntax(off, "exponent out of range"))?;
                Ok(if neg { -value } else { value })
            }
            _ => Err(syntax(off, "expected an integer literal after '^'")),
        }
    }
}

// ---------------------------------------------------------------------------
// Expression trees
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
enum Ast {
    Int(BigInt),
    Name(Name, usize),
    Neg(Box<Ast>),
    /// `op` is one of `+ - * /`; the offset is the operator's.
    Bin(char, Box<Ast>, Box<Ast>, usize),
    /// Exponentiation by an integer literal; the offset is the caret's.
    Pow(Box<Ast>, i64, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Name {
    Q(u8),
    L(u8, u8),
    C(u32),
    Gen(char, u8),
}

fn classify_word(w: &str, offset: usize) -> Result<Name, ParseError> {
    let (head, rest) = w.split_at(1);
    let digits = |s: &str| -> Option<u64> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            None
        } else {
            s.parse().ok()
        }
    };
    let axis = |s: &str| -> Result<u8, ParseError> {
        match digits(s) {
            Some(v @ 1..=255) => Ok(v as u8),
            _ => Err(syntax(
                offset,
                format!("'{w}' needs an index between 1 and 255"),
            )),
        }
    };
    match head {
        "q" => Ok(Name::Q(axis(rest)?)),
        "c" => match digits(rest) {
            Some(v @ 1..) if v <= u32::MAX as u64 => Ok(Name::C(v as u32)),
            _ => Err(syntax(
                offset,
                format!("'{w}' needs an index between 1 and {}", u32::MAX),
            )),
        },
        "l" => {
            let (a, b) = match rest.split_once('_') {
                Some((a, b)) => (a.to_string(), b.to_string()),
                None => {
                    if rest.len() == 2 {
                        (rest[..1].to_string(), rest[1..].to_string())
                    } else {
                        return Err(syntax(
                            offset,
                            format!("'{w}' must name two axes, like l12 or l1_2"),
                        ));
                    }
                }
            };
            let i = axis(&a)?;
            let j = axis(&b)?;
            if i == j {
                return Err(syntax(offset, "lambda symbols need two distinct axes"));
            }
            Ok(Name::L(i, j))
        }
        "x" | "y" | "z" => Ok(Name::Gen(head.chars().next().expect("letter"), axis(rest)?)),
        _ => Err(syntax(offset, format!("unknown name '{w}'"))),
    }
}

fn parse_expr(cur: &mut Cursor) -> Result<Ast, ParseError> {
    let mut lhs = parse_prod(cur)?;
    loop {
        let off = cur.offset();
        let op = if cur.eat(&TokKind::Plus) {
            '+'
        } else if cur.eat(&TokKind::Minus) {
            '-'
        } else {
            return Ok(lhs);
        };
        let rhs = parse_prod(cur)?;
        lhs = Ast::Bin(op, Box::new(lhs), Box::new(rhs), off);
    }
}

fn parse_prod(cur: &mut Cursor) -> Result<Ast, ParseError> {
    let mut lhs = parse_unary(cur)?;
    loop {
        let off = cur.offset();
        let op = if cur.eat(&TokKind::Star) {
            '*'
        } else if cur.eat(&TokKind::Slash) {
            '/'
        } else {
            return Ok(lhs);
        };
        let rhs = parse_unary(cur)?;
        lhs = Ast::Bin(op, Box::new(lhs), Box::new(rhs), off);
    }
}

fn parse_unary(cur: &mut Cursor) -> Result<Ast, ParseError> {
    if cur.eat(&TokKind::Minus) {
        Ok(Ast::Neg(Box::new(parse_unary(cur)?)))
    } else {
        parse_power(cur)
    }
}

fn parse_power(cur: &mut Cursor) -> Result<Ast, ParseError> {
    let mut base = parse_atom(cur)?;
    loop {
        let off = cur.offset();
        if !cur.eat(&TokKind::Caret) {
            return Ok(base);
        }
        let e = cur.exponent()?;
        base = Ast::Pow(Box::new(base), e, off);
    }
}

fn parse_atom(cur: &mut Cursor) -> Result<Ast, ParseError> {
    let off = cur.offset();
    match cur.advance() {
        Some(Tok {
            kind: TokKind::Int(digits),
            ..
        }) => Ok(Ast::Int(digits.parse().expect("digit run parses"))),
        Some(Tok {
            kind: TokKind::Word(w),
            offset,
        }) => Ok(Ast::Name(classify_word(&w, offset)?, offset)),
        Some(Tok {
            kind: TokKind::LParen,
            ..
        }) => {
            let inner = parse_expr(cur)?;
            cur.expect(&TokKind::RParen, "')'")?;
            Ok(inner)
        }
        _ => Err(syntax(off, "expected a number, a name, or '('")),
    }
}

// ---------------------------------------------------------------------------
// Evaluation into algebra elements
// ---------------------------------------------------------------------------

/// The coefficient of a scalar-valued element (zero or a multiple of the
/// empty word).
fn element_scalar(e: &NormalElement) -> Option<Scalar> {
    let mut it = e.terms().iter();
    match it.next() {
        None => Some(Scalar::from_int(0)),
        Some((m, c)) if m.is_one() && it.next().is_none() => Some(c.clone()),
        _ => None,
    }
}

/// Invert a scalar or a pure `z`-block monomial; anything else reports the
/// offending generator.
fn invert_element(
    e: &NormalElement,
    pres: &PresentationId,
    offset: usize,
) -> Result<NormalElement, ParseError> {
    if let Some(s) = element_scalar(e) {
        if s.is_zero() {
            return Err(syntax(offset, "division by zero"));
        }
        return Ok(NormalElement::scalar(
            pres,
            s.inv().expect("nonzero scalar"),
        ));
    }
    if e.terms().len() == 1 {
        let (mono, c) = e.terms().iter().next().expect("single term");
        let n = pres.rank();
        let pure_z = (1..=n).all(|i| mono.y_exp(i) == 0 && mono.x_exp(i) == 0);
        if pure_z {
            if pres.form != Form::Localized {
                return Err(ParseError::NegativeExponent { gen: 'z', offset });
            }
            let m: Vec<i64> = mono.z_vector().iter().map(|v| -v).collect();
            let inv = NormalMonomial::from_b_z(vec![0; n as usize], m).expect("z block");
            return NormalElement::monomial(pres, inv, c.inv().expect("nonzero coefficient"))
                .map_err(|e| syntax(offset, e.to_string()));
        }
        let gen = (1..=n)
            .find_map(|i| {
                if mono.x_exp(i) != 0 {
                    Some('x')
                } else if mono.y_exp(i) != 0 {
                    Some('y')
                } else {
                    None
                }
            })
            .expect("non-z letter present");
        return Err(ParseError::NegativeExponent { gen, offset });
    }
    Err(syntax(
        offset,
        "only scalars and z-block monomials have negative powers",
    ))
}

fn eval_element(ast: &Ast, pres: &PresentationId) -> Result<NormalElement, ParseError> {
    match ast {
        Ast::Int(v) => Ok(NormalElement::scalar(pres, Scalar::from_bigint(v.clone()))),
        Ast::Name(name, offset) => match *name {
            Name::Q(i) => {
                check_symbol_axis('q', i, pres, *offset)?;
                Ok(NormalElement::scalar(pres, Scalar::q(i)))
            }
            Name::L(i, j) => {
                check_symbol_axis('l', i, pres, *offset)?;
                check_symbol_axis('l', j, pres, *offset)?;
                Ok(NormalElement::scalar(pres, pres.ctx().lambda(i, j)))
            }
            Name::C(t) => Ok(NormalElement::scalar(pres, Scalar::c(t))),
            Name::Gen(g, i) => {
                if i == 0 || i > pres.rank() {
                    return Err(ParseError::UnknownGenerator {
                        name: format!("{g}{i}"),
                        rank: pres.rank(),
                        offset: *offset,
                    });
                }
                match g {
                    'x' => NormalElement::x(pres, i),
                    'y' => NormalElement::y(pres, i),
                    _ => Ok(crate::presentations::z_element(pres, i)),
                }
                .map_err(|e| syntax(*offset, e.to_string()))
            }
        },
        Ast::Neg(inner) => Ok(eval_element(inner, pres)?.neg()),
        Ast::Bin(op, lhs, rhs, offset) => {
            let a = eval_element(lhs, pres)?;
            let b = eval_element(rhs, pres)?;
            match op {
                '+' => a.add(&b),
                '-' => a.sub(&b),
                '*' => a.multiply(&b),
                _ => {
                    let s = element_scalar(&b).ok_or_else(|| {
                        syntax(*offset, "division requires a scalar-valued divisor")
                    })?;
                    if s.is_zero() {
                        return Err(syntax(*offset, "division by zero"));
                    }
                    return Ok(a.scale(&s.inv().expect("nonzero scalar")));
                }
            }
            .map_err(|e| syntax(*offset, e.to_string()))
        }
        Ast::Pow(base, e, offset) => {
            // A bare z atom takes its exponent directly: in the localized
            // form z_i^e is a basis letter for any integer e.
            if let Ast::Name(Name::Gen(g, i), goff) = base.as_ref() {
                if *g == 'z' {
                    if *i == 0 || *i > pres.rank() {
                        return Err(ParseError::UnknownGenerator {
                            name: format!("z{i}"),
                            rank: pres.rank(),
                            offset: *goff,
                        });
                    }
                    return NormalElement::z_pow(pres, *i, *e).map_err(|err| match err {
                        crate::presentations::PresentationError::NegativeExponent { .. } => {
                            ParseError::NegativeExponent {
                                gen: 'z',
                                offset: *offset,
                            }
                        }
                        other => syntax(*offset, other.to_string()),
                    });
                }
                if *e < 0 {
                    return Err(ParseError::NegativeExponent {
                        gen: *g,
                        offset: *offset,
                    });
                }
            }
            let b = eval_element(base, pres)?;
            if *e >= 0 {
                let e32 =
                    u32::try_from(*e).map_err(|_| syntax(*offset, "exponent out of range"))?;
                b.pow(e32).map_err(|err| syntax(*offset, err.to_string()))
            } else {
                let mag = e
                    .checked_neg()
                    .and_then(|m| u32::try_from(m).ok())
                    .ok_or_else(|| syntax(*offset, "exponent out of range"))?;
                invert_element(&b, pres, *offset)?
                    .pow(mag)
                    .map_err(|err| syntax(*offset, err.to_string()))
            }
        }
    }
}

fn check_symbol_axis(
    letter: char,
    i: u8,
    pres: &PresentationId,
    offset: usize,
) -> Result<(), ParseError> {
    if i == 0 || i > pres.rank() {
        Err(syntax(
            offset,
            format!("symbol {letter}-index {i} exceeds the rank {}", pres.rank()),
        ))
    } else {
        Ok(())
    }
}

fn eval_scalar(ast: &Ast) -> Result<Scalar, ParseError> {
    match ast {
        Ast::Int(v) => Ok(Scalar::from_bigint(v.clone())),
        Ast::Name(name, offset) => match *name {
            Name::Q(i) => Ok(Scalar::q(i)),
            Name::L(i, j) => Ok(if i < j {
                Scalar::lambda_sym(i, j)
            } else {
                Scalar::lambda_sym(j, i).inv().expect("symbol")
            }),
            Name::C(t) => Ok(Scalar::c(t)),
            Name::Gen(g, i) => Err(syntax(
                *offset,
                format!("generator {g}{i} is not allowed in a scalar"),
            )),
        },
        Ast::Neg(inner) => Ok(eval_scalar(inner)?.neg()),
        Ast::Bin(op, lhs, rhs, offset) => {
            let a = eval_scalar(lhs)?;
            let b = eval_scalar(rhs)?;
            match op {
                '+' => Ok(a.add(&b)),
                '-' => Ok(a.sub(&b)),
                '*' => Ok(a.mul(&b)),
                _ => a
                    .checked_div(&b)
                    .map_err(|_| syntax(*offset, "division by zero")),
            }
        }
        Ast::Pow(base, e, offset) => eval_scalar(base)?
            .pow(*e)
            .map_err(|_| syntax(*offset, "zero base with a negative exponent")),
    }
}

// ---------------------------------------------------------------------------
// Entry points
// ---------------------------------------------------------------------------

/// Parse expression text into a normal-form element of the presentation.
pub fn parse_element(src: &str, pres: &PresentationId) -> Result<NormalElement, ParseError> {
    let mut cur = Cursor::new(src)?;
    let ast = parse_expr(&mut cur)?;
    cur.finish()?;
    eval_element(&ast, pres)
}

/// Parse expression text into a field element; generators are rejected.
pub fn parse_scalar(src: &str) -> Result<Scalar, ParseError> {
    let mut cur = Cursor::new(src)?;
    let ast = parse_expr(&mut cur)?;
    cur.finish()?;
    eval_scalar(&ast)
}

/// Parse a character literal like `[q^2, c1*q^-1, c2]`.  Each coordinate is
/// a product of at most one `c<t>` symbol and a power of the coordinate's
/// own `q` (written without an axis index); `1` is the trivial coordinate.
pub fn parse_character(src: &str, ctx: &ParamContext) -> Result<Character, ParseError> {
    let mut cur = Cursor::new(src)?;
    let open = cur.expect(&TokKind::LBracket, "'['")?;
    let mut coords = Vec::new();
    if cur.peek().map(|t| &t.kind) != Some(&TokKind::RBracket) {
        loop {
            coords.push(parse_coord(&mut cur)?);
            if !cur.eat(&TokKind::Comma) {
                break;
            }
        }
    }
    cur.expect(&TokKind::RBracket, "']'")?;
    cur.finish()?;
    Character::new(coords, ctx).map_err(|e| syntax(open, e.to_string()))
}

fn parse_coord(cur: &mut Cursor) -> Result<Coord, ParseError> {
    let mut symbol: Option<u32> = None;
    let mut shift: i64 = 0;
    loop {
        let off = cur.offset();
        match cur.advance() {
            Some(Tok {
                kind: TokKind::Int(d),
                ..
            }) if d == "1" => {}
            Some(Tok {
                kind: TokKind::Word(w),
                offset,
            }) => {
                if w == "q" {
                    let e = if cur.eat(&TokKind::Caret) {
                        cur.exponent()?
                    } else {
                        1
                    };
                    shift = shift
                        .checked_add(e)
                        .ok_or_else(|| syntax(offset, "exponent out of range"))?;
                } else if let Ok(Name::C(t)) = classify_word(&w, offset) {
                    if symbol.replace(t).is_some() {
                        return Err(syntax(offset, "at most one c symbol per coordinate"));
                    }
                } else {
                    return Err(syntax(
                        offset,
                        "expected q^k, c<t>, or 1 in a character coordinate",
                    ));
                }
            }
            _ => {
                return Err(syntax(
                    off,
                    "expected q^k, c<t>, or 1 in a character coordinate",
                ))
            }
        }
        if !cur.eat(&TokKind::Star) {
            break;
        }
    }
    Ok(match symbol {
        Some(t) => Coord::Generic { symbol: t, shift },
        None => Coord::Integral(shift),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::Family;
    use crate::scalars::LambdaMode;

    fn pres(family: Family, form: Form, n: u8) -> PresentationId {
        PresentationId::new(family, form, ParamContext::symbolic(n, 2).unwrap())
    }

    #[test]
    fn defining_relation_parses_to_zero() {
        let p = pres(Family::AkhavizadeganJordan, Form::Polynomial, 1);
        let e = parse_element("x1*y1 - q1*y1*x1 - 1", &p).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn z_inverse_times_x_is_a_monomial() {
        // z1 commutes with x2 exactly, so the normal form is x2*z1^-1 with
        // coefficient 1.
        let p = pres(Family::Maltsiniotis, Form::Localized, 2);
        let e = parse_element("z1^-1*x2", &p).unwrap();
        let mono = NormalMonomial::from_b_z(vec![0, 1], vec![-1, 0]).unwrap();
        assert_eq!(e, NormalElement::monomial(&p, mono, Scalar::one()).unwrap());
        // And a plain power.
        let sq = parse_element("x1^2", &p).unwrap();
        assert_eq!(sq.terms().len(), 1);
        let (m, c) = sq.terms().iter().next().unwrap();
        assert_eq!((m.x_exp(1), c.is_one()), (2, true));
    }

    #[test]
    fn precedence_and_unary_minus() {
        let p = pres(Family::AkhavizadeganJordan, Form::Localized, 1);
        // ^ binds tighter than unary -, which binds tighter than *.
        let a = parse_element("-y1^2*3", &p).unwrap();
        let b = parse_element("(0 - (y1^2)) * 3", &p).unwrap();
        assert_eq!(a, b);
        // Division by a scalar expression.
        let c = parse_element("x1/(q1 - 1)", &p).unwrap();
        let d = parse_element("x1", &p)
            .unwrap()
            .scale(&Scalar::q(1).sub(&Scalar::one()).inv().unwrap());
        assert_eq!(c, d);
        // Negative powers of scalars and z-monomials.
        assert_eq!(
            parse_element("2^-1", &p).unwrap(),
            NormalElement::scalar(&p, Scalar::rational(1, 2))
        );
        let zz = parse_element("(q1*z1)^-1", &p).unwrap();
        assert_eq!(
            zz.multiply(&parse_element("q1*z1", &p).unwrap()).unwrap(),
            NormalElement::one(&p)
        );
    }

    #[test]
    fn round_trips_canonical_text() {
        let p = pres(Family::AkhavizadeganJordan, Form::Localized, 2);
        // x1*y1 normalizes to a fraction coefficient; print and reparse.
        for src in [
            "x1*y1 + y2*x2",
            "y1^2*x2^3*z1^-1 - 3*x1",
            "(q1 - 1)*x1 + l12*y2",
            "c1*z1^-2 + q2^3*y1",
        ] {
            let e = parse_element(src, &p).unwrap();
            let text = e.to_string();
            let back = parse_element(&text, &p).unwrap();
            assert_eq!(back, e, "round-trip through `{text}`");
        }
    }

    #[test]
    fn error_offsets_and_kinds() {
        let p = pres(Family::AkhavizadeganJordan, Form::Polynomial, 2);
        assert_eq!(
            parse_element("x1 +", &p).unwrap_err(),
            ParseError::Syntax {
                offset: 4,
                message: "expected a number, a name, or '('".into()
            }
        );
        assert_eq!(
            parse_element("x9", &p).unwrap_err(),
            ParseError::UnknownGenerator {
                name: "x9".into(),
                rank: 2,
                offset: 0
            }
        );
        assert_eq!(
            parse_element("x1^-1", &p).unwrap_err(),
            ParseError::NegativeExponent {
                gen: 'x',
                offset: 2
            }
        );
        // z is invertible only in the localized form.
        assert_eq!(
            parse_element("z1^-1", &p).unwrap_err(),
            ParseError::NegativeExponent {
                gen: 'z',
                offset: 2
            }
        );
        let loc = pres(Family::AkhavizadeganJordan, Form::Localized, 2);
        assert!(parse_element("z1^-1", &loc).is_ok());
        // Juxtaposition is not multiplication.
        assert_eq!(
            parse_element("x1 x2", &p).unwrap_err(),
            ParseError::Syntax {
                offset: 3,
                message: "expected an operator or the end of the input".into()
            }
        );
        // Division needs a scalar divisor.
        assert!(matches!(
            parse_element("x1/y1", &p).unwrap_err(),
            ParseError::Syntax { offset: 2, .. }
        ));
        assert!(matches!(
            parse_element("x1/0", &p).unwrap_err(),
            ParseError::Syntax { offset: 2, .. }
        ));
        // ^ takes integer literals only.
        assert!(matches!(
            parse_element("x1^(2)", &p).unwrap_err(),
            ParseError::Syntax { offset: 3, .. }
        ));
    }

    #[test]
    fn lambda_resolves_through_the_context() {
        // In the all-ones context l12 evaluates to 1.
        let ones = PresentationId::new(
            Family::AkhavizadeganJordan,
            Form::Localized,
            ParamContext::new(2, LambdaMode::AllOnes, 1).unwrap(),
        );
        assert_eq!(
            parse_element("l12*x1", &ones).unwrap(),
            parse_element("x1", &ones).unwrap()
        );
        // Symbolically l21 is the inverse of l12.
        let sym = pres(Family::AkhavizadeganJordan, Form::Localized, 2);
        let prod = parse_element("l12*l21", &sym).unwrap();
        assert_eq!(prod, NormalElement::one(&sym));
    }

    #[test]
    fn scalar_parsing() {
        let s = parse_scalar("3*q1^2*l12^-1*c1").unwrap();
        let expect = Scalar::from_int(3)
            .mul(&Scalar::q_pow(1, 2))
            .mul(&Scalar::lambda_sym(1, 2).inv().unwrap())
            .mul(&Scalar::c(1));
        assert_eq!(s, expect);
        let f = parse_scalar("(q1 - 1) / (q1 + 1)").unwrap();
        assert_eq!(
            f.mul(&Scalar::q(1).add(&Scalar::one())),
            Scalar::q(1).sub(&Scalar::one())
        );
        assert!(matches!(
            parse_scalar("x1").unwrap_err(),
            ParseError::Syntax { offset: 0, .. }
        ));
        // Scalar text round-trips.
        let text = f.to_string();
        assert_eq!(parse_scalar(&text).unwrap(), f);
    }

    #[test]
    fn character_literals() {
        let ctx = ParamContext::symbolic(3, 2).unwrap();
        let phi = parse_character("[q^2, c1*q^-1, c2]", &ctx).unwrap();
        let expect = Character::new(
            vec![
                Coord::Integral(2),
                Coord::Generic {
                    symbol: 1,
                    shift: -1,
                },
                Coord::Generic {
                    symbol: 2,
                    shift: 0,
                },
            ],
            &ctx,
        )
        .unwrap();
        assert_eq!(phi, expect);
        // Display round-trips.
        assert_eq!(parse_character(&phi.to_string(), &ctx).unwrap(), phi);
        // Trivial coordinates and bare q.
        let one = parse_character("[1, q, q^0]", &ctx).unwrap();
        assert_eq!(
            one.coords(),
            &[Coord::Integral(0), Coord::Integral(1), Coord::Integral(0)]
        );
        // Rank and symbol validation.
        let small = ParamContext::symbolic(2, 2).unwrap();
        assert!(parse_character("[q^2]", &small).is_err());
        assert!(parse_character("[q^2, c3]", &small).is_err());
        assert!(parse_character("q^2", &small).is_err());
        assert!(parse_character("[q^2, c1*c2]", &small).is_err());
    }
}
