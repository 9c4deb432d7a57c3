//! Text syntax for operators and polynomials.
//!
//! Grammar (version 1):
//!
//! ```text
//! expr      := term (('+' | '-') term)*
//! term      := factor ('*' factor)*
//! factor    := '-' factor | atom ('^' nat)?
//! atom      := rational | generator | '(' expr ')'
//! generator := ('x' | 'd' | 'int' | 'H') index | 'e' index '[' nat ',' nat ']'
//! rational  := nat ('/' nat)?
//! ```
//!
//! `^` binds tighter than unary `-`, which binds tighter than `*`. The slash
//! only appears inside a rational literal; there is no division operator.
//! Juxtaposition is rejected. The index selects the tensor slot (`1..=n`)
//! and may be omitted when `n = 1`. `∂` and `∫` are accepted as aliases for
//! `d` and `int`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{coeff_prefix, join_signed, PolyH, Rat};
use crate::error::{Error, Result};
use crate::i1::{I1Element, I1Monomial};
use crate::tensor::{FactorMonomial, InElement, PolyXn};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenKind {
    X,
    D,
    Int,
    H,
    E,
}

/// Parsed expression tree. Generator slots are 0-based.
#[derive(Clone, PartialEq, Debug)]
pub enum ExprAst {
    Num(Rat),
    Gen {
        kind: GenKind,
        slot: usize,
        mat: Option<(u32, u32)>,
        pos: usize,
    },
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Neg(Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Num { value: Rat, slash: bool },
    Word { word: String, index: Option<usize> },
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let read_digits = |i: &mut usize| -> Option<BigInt> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        (*i > start).then(|| chars[start..*i].iter().collect::<String>().parse().unwrap())
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, pos));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let num = read_digits(&mut i).unwrap();
            let mut value = Rat::from_integer(num);
            let mut slash = false;
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let den = read_digits(&mut i)
                    .ok_or_else(|| Error::syntax(i, "expected a denominator after '/'"))?;
                if den.is_zero() {
                    return Err(Error::syntax(pos, "zero denominator in rational literal"));
                }
                value /= Rat::from_integer(den);
                slash = true;
            }
            out.push((Tok::Num { value, slash }, pos));
            continue;
        }
        let word = if c == '∂' {
            i += 1;
            "d".to_string()
        } else if c == '∫' {
            i += 1;
            "int".to_string()
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            chars[start..i].iter().collect()
        } else if c == '/' {
            return Err(Error::syntax(pos, "'/' is only allowed inside a rational literal"));
        } else {
            return Err(Error::syntax(pos, format!("unexpected character {c:?}")));
        };
        let index = match read_digits(&mut i) {
            Some(v) => Some(
                v.to_usize()
                    .ok_or_else(|| Error::syntax(pos, "generator index too large"))?,
            ),
            None => None,
        };
        out.push((Tok::Word { word, index }, pos));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let pos = self.pos();
        match self.bump() {
            Some((t, _)) if t == want => Ok(()),
            _ => Err(Error::syntax(pos, format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = ExprAst::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = ExprAst::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut lhs = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<ExprAst> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(ExprAst::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.pos();
            return match self.bump() {
                Some((Tok::Minus, _)) => Err(Error::NegativeExponent { pos }),
                Some((Tok::Num { value, slash: false }, _)) => {
                    let e = value
                        .to_integer()
                        .to_u32()
                        .ok_or_else(|| Error::syntax(pos, "exponent too large"))?;
                    Ok(ExprAst::Pow(Box::new(base), e))
                }
                _ => Err(Error::syntax(pos, "expected a natural-number exponent")),
            };
        }
        Ok(base)
    }

    fn nat(&mut self) -> Result<u32> {
        let pos = self.pos();
        match self.bump() {
            Some((Tok::Num { value, slash: false }, _)) => value
                .to_integer()
                .to_u32()
                .ok_or_else(|| Error::syntax(pos, "matrix index too large")),
            _ => Err(Error::syntax(pos, "expected a natural number")),
        }
    }

    fn atom(&mut self) -> Result<ExprAst> {
        let pos = self.pos();
        match self.bump() {
            Some((Tok::Num { value, .. }, _)) => Ok(ExprAst::Num(value)),
            Some((Tok::LParen, _)) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some((Tok::Word { word, index }, _)) => {
                let kind = match word.as_str() {
                    "x" => GenKind::X,
                    "d" => GenKind::D,
                    "int" => GenKind::Int,
                    "H" => GenKind::H,
                    "e" => GenKind::E,
                    _ => return Err(Error::syntax(pos, format!("unknown generator {word:?}"))),
                };
                let slot = match index {
                    Some(i) if i >= 1 && i <= self.n => i - 1,
                    Some(i) => return Err(Error::IndexOutOfRange { index: i, n: self.n, pos }),
                    None if self.n == 1 => 0,
                    None => {
                        return Err(Error::syntax(pos, format!("generator {word:?} needs a factor index")))
                    }
                };
                let mat = if kind == GenKind::E {
                    self.expect(Tok::LBracket, "'[' after e")?;
                    let s = self.nat()?;
                    self.expect(Tok::Comma, "','")?;
                    let t = self.nat()?;
                    self.expect(Tok::RBracket, "']'")?;
                    Some((s, t))
                } else {
                    None
                };
                Ok(ExprAst::Gen { kind, slot, mat, pos })
            }
            None => Err(Error::syntax(pos, "unexpected end of input")),
            Some(_) => Err(Error::syntax(pos, "unexpected token")),
        }
    }
}

/// Parses `src` into an expression tree over generators with slots `< n`.
pub fn parse_ast(src: &str, n: usize) -> Result<ExprAst> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.chars().count(),
        n,
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return Err(Error::syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(e)
}

fn eval<T, G, M, P>(ast: &ExprAst, num: &dyn Fn(&Rat) -> T, gen: &G, mul: &M, pow: &P) -> Result<T>
where
    T: Clone,
    G: Fn(GenKind, usize, Option<(u32, u32)>, usize) -> Result<T>,
    M: Fn(&T, &T, bool, bool) -> T,
    P: Fn(&T, u32) -> T,
{
    // `mul(a, b, negate_b, additive)`: additive selects a + (±b), else a * b.
    let rec = |e: &ExprAst| eval(e, num, gen, mul, pow);
    Ok(match ast {
        ExprAst::Num(v) => num(v),
        ExprAst::Gen { kind, slot, mat, pos } => gen(*kind, *slot, *mat, *pos)?,
        ExprAst::Add(a, b) => mul(&rec(a)?, &rec(b)?, false, true),
        ExprAst::Sub(a, b) => mul(&rec(a)?, &rec(b)?, true, true),
        ExprAst::Mul(a, b) => mul(&rec(a)?, &rec(b)?, false, false),
        ExprAst::Neg(a) => mul(&num(&Rat::zero()), &rec(a)?, true, true),
        ExprAst::Pow(a, k) => pow(&rec(a)?, *k),
    })
}

/// Parses an operator expression into the canonical element of `𝕀ₙ`.
pub fn parse_operator(src: &str, n: usize) -> Result<InElement> {
    if n == 0 {
        return Err(Error::DimensionMismatch(0, 1));
    }
    let ast = parse_ast(src, n)?;
    eval(
        &ast,
        &|v| InElement::scalar(n, v.clone()),
        &|kind, slot, mat, _| {
            let a = match kind {
                GenKind::X => I1Element::x(),
                GenKind::D => I1Element::partial(),
                GenKind::Int => I1Element::integ(),
                GenKind::H => I1Element::h(),
                GenKind::E => {
                    let (s, t) = mat.unwrap();
                    I1Element::e(s, t)
                }
            };
            Ok(InElement::embed(&a, slot, n))
        },
        &|a, b, neg, additive| match (additive, neg) {
            (true, false) => a + b,
            (true, true) => a - b,
            _ => a * b,
        },
        &|a, k| a.pow(k),
    )
}

/// Parses a commutative polynomial in `x1..xn`.
pub fn parse_poly(src: &str, n: usize) -> Result<PolyXn> {
    if n == 0 {
        return Err(Error::DimensionMismatch(0, 1));
    }
    let ast = parse_ast(src, n)?;
    eval(
        &ast,
        &|v| PolyXn::one(n).scale(v),
        &|kind, slot, _, pos| match kind {
            GenKind::X => Ok(PolyXn::var(n, slot + 1)),
            _ => Err(Error::syntax(pos, "only x generators may appear in a polynomial")),
        },
        &|a, b, neg, additive| match (additive, neg) {
            (true, false) => a.add(b),
            (true, true) => a.add(&b.scale(&-Rat::one())),
            _ => a.mul(b),
        },
        &|a, k| a.pow(k),
    )
}

/// Shape of the first tensor slot once its `H`-power is factored out.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Shape {
    Diff(u32),
    H,
    Int(u32),
    Mat(u32, u32),
    B1(i64),
}

impl Shape {
    fn sort_key(&self) -> (u8, i64, i64) {
        match *self {
            Shape::Diff(i) => (0, -(i as i64), 0),
            Shape::H => (1, 0, 0),
            Shape::Int(i) => (2, i as i64, 0),
            Shape::Mat(s, t) => (3, s as i64, t as i64),
            Shape::B1(d) => (4, -d, 0),
        }
    }

    fn split(m: &FactorMonomial) -> (Shape, u32) {
        match *m {
            FactorMonomial::I1(I1Monomial::Diff { h, order }) => (Shape::Diff(order), h),
            FactorMonomial::I1(I1Monomial::H(h)) => (Shape::H, h),
            FactorMonomial::I1(I1Monomial::Int { order, h }) => (Shape::Int(order), h),
            FactorMonomial::I1(I1Monomial::Mat(s, t)) => (Shape::Mat(s, t), 0),
            FactorMonomial::B1 { d, h } => (Shape::B1(d), h),
        }
    }

    fn is_h_like(&self) -> bool {
        matches!(self, Shape::H | Shape::B1(0))
    }
}

fn power(sym: &str, k: i64) -> String {
    if k == 1 {
        sym.to_string()
    } else {
        format!("{sym}^{k}")
    }
}

fn h_part(sfx: &str, j: u32) -> Option<String> {
    (j > 0).then(|| power(&format!("H{sfx}"), j as i64))
}

/// A single slot monomial as text; `None` for the unit.
fn factor_text(m: &FactorMonomial, sfx: &str) -> Option<String> {
    let (shape, j) = Shape::split(m);
    shape_text(shape, Some(j), sfx)
}

/// Text for `shape` with `H`-power `j` placed on its canonical side, or the
/// placeholder `(P)` when `j` is `None`.
fn shape_text(shape: Shape, j: Option<u32>, sfx: &str) -> Option<String> {
    let hp = |j: Option<u32>| match j {
        Some(j) => h_part(sfx, j),
        None => Some("(P)".to_string()),
    };
    let parts: Vec<Option<String>> = match shape {
        Shape::Diff(i) => vec![hp(j), Some(power(&format!("d{sfx}"), i as i64))],
        Shape::H => vec![hp(j)],
        Shape::Int(i) => vec![Some(power(&format!("int{sfx}"), i as i64)), hp(j)],
        Shape::Mat(s, t) => vec![Some(format!("e{sfx}[{s},{t}]"))],
        Shape::B1(0) => vec![hp(j)],
        Shape::B1(d) => vec![hp(j), Some(power(&format!("D{sfx}"), d))],
    };
    let parts: Vec<String> = parts.into_iter().flatten().collect();
    (!parts.is_empty()).then(|| parts.join("*"))
}

type Groups = BTreeMap<((u8, i64, i64), Vec<FactorMonomial>), (Shape, PolyH)>;

fn format_tensor(a: &InElement, indexed: bool) -> String {
    let sfx = |slot: usize| if indexed { (slot + 1).to_string() } else { String::new() };
    // Group terms that differ only in the H-power of the first slot.
    let mut groups = Groups::new();
    for (t, c) in a.terms() {
        let (shape, j) = Shape::split(&t[0]);
        let entry = groups
            .entry((shape.sort_key(), t[1..].to_vec()))
            .or_insert_with(|| (shape, PolyH::zero()));
        entry.1 = &entry.1 + &PolyH::monomial(c.clone(), j);
    }
    let first = sfx(0);
    let mut parts: Vec<(bool, String)> = Vec::new();
    for ((_, rest), (shape, poly)) in &groups {
        let rest_text: Vec<String> = rest
            .iter()
            .enumerate()
            .filter_map(|(k, m)| factor_text(m, &sfx(k + 1)))
            .collect();
        let rest_text = rest_text.join("*");
        let single = |j: u32, c: &Rat| -> (bool, String) {
            let mono: Vec<String> = [shape_text(*shape, Some(j), &first), Some(rest_text.clone())]
                .into_iter()
                .flatten()
                .filter(|s| !s.is_empty())
                .collect();
            let abs = c.abs();
            let body = if mono.is_empty() {
                abs.to_string()
            } else {
                format!("{}{}", coeff_prefix(&abs), mono.join("*"))
            };
            (c.is_negative(), body)
        };
        if poly.len() == 1 {
            let (j, c) = poly.terms().next().unwrap();
            parts.push(single(j, c));
        } else if shape.is_h_like() && rest_text.is_empty() {
            for (j, c) in poly.terms().rev() {
                parts.push(single(j, c));
            }
        } else {
            let inner = format!("({})", poly.format_with(&format!("H{first}")));
            let skeleton = shape_text(*shape, None, &first).unwrap();
            let mut body = skeleton.replace("(P)", &inner);
            if !rest_text.is_empty() {
                body.push('*');
                body.push_str(&rest_text);
            }
            parts.push((false, body));
        }
    }
    join_signed(&parts)
}

/// Canonical text of an element of `𝕀ₙ` (or of a mixed quotient), with
/// indexed generators. Inverse of [`parse_operator`] on `𝕀ₙ`.
pub fn format_operator(a: &InElement) -> String {
    format_tensor(a, true)
}

/// Canonical text of an element of `𝕀₁` without generator indices, e.g.
/// `(H^2 + 1)*d^3 + 2*H + int^2*(H - 1) + 3*e[0,2]`.
pub fn format_i1(a: &I1Element) -> String {
    format_tensor(&InElement::from_i1(a), false)
}

/// Renders a bare integer-or-rational scalar the way the grammar reads it.
pub fn format_rat(v: &Rat) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    #[test]
    fn parse_examples() {
        assert_eq!(parse_operator("d1*int1", 1).unwrap(), InElement::one(1));
        assert_eq!(parse_operator("x1", 1).unwrap(), InElement::from_i1(&I1Element::x()));
        let expected = &I1Element::h().pow(2) + &I1Element::e(0, 0).scale(&rat(3, 2));
        assert_eq!(parse_operator("H1^2 + 3/2*e1[0,0]", 1).unwrap(), InElement::from_i1(&expected));
        assert!(matches!(parse_operator("x3", 2), Err(Error::IndexOutOfRange { index: 3, n: 2, .. })));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_operator("d1^-1", 1), Err(Error::NegativeExponent { pos: 3 })));
        assert!(matches!(parse_operator("d1 int1", 1), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_operator("d1/2", 1), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_operator("1/0", 1), Err(Error::Syntax { .. })));
        assert!(matches!(parse_operator("d", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_operator("(d1", 1), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_operator("e1[0]", 1), Err(Error::Syntax { .. })));
        assert!(matches!(parse_operator("D1", 1), Err(Error::Syntax { .. })));
        assert!(matches!(parse_operator("", 1), Err(Error::Syntax { .. })));
        assert!(matches!(parse_operator("d1^1/2", 1), Err(Error::Syntax { .. })));
    }

    #[test]
    fn precedence() {
        let a = parse_operator("2*H1^2", 1).unwrap();
        assert_eq!(a, InElement::from_i1(&I1Element::h().pow(2).scale(&rat_int(2))));
        let b = parse_operator("-d1^2", 1).unwrap();
        assert_eq!(b, InElement::from_i1(&-&I1Element::partial_pow(2)));
        let c = parse_operator("1 - -d1", 1).unwrap();
        assert_eq!(c, InElement::from_i1(&(&I1Element::one() + &I1Element::partial())));
    }

    #[test]
    fn unicode_aliases_and_bare_indices() {
        assert_eq!(parse_operator("∂1*∫1", 1).unwrap(), InElement::one(1));
        assert_eq!(parse_operator("d*int", 1).unwrap(), InElement::one(1));
    }

    #[test]
    fn poly_examples() {
        let p = parse_poly("x1^2*x2 - 1/2", 2).unwrap();
        assert_eq!(p.coeff(&[2, 1]), Rat::one());
        assert_eq!(p.coeff(&[0, 0]), rat(-1, 2));
        assert!(parse_poly("0", 1).unwrap().is_zero());
        assert_eq!(parse_poly("x1 + x1", 1).unwrap(), PolyXn::var(1, 1).scale(&rat_int(2)));
        assert!(parse_poly("d1", 1).is_err());
    }

    #[test]
    fn format_examples() {
        let a = InElement::from_i1(&(&I1Element::one() - &I1Element::e(0, 0)));
        assert_eq!(format_operator(&a), "1 - e1[0,0]");
        let b = &I1Element::integ_pow(2) * &(&I1Element::h() - &I1Element::one());
        assert_eq!(format_operator(&InElement::from_i1(&b)), "int1^2*(H1 - 1)");
        assert_eq!(format_operator(&InElement::zero(2)), "0");
        let c = parse_operator("(H^2+1)*d^3 + 2*H + int^2*(H-1) + 3*e[0,2]", 1).unwrap();
        assert_eq!(format_i1(&c.to_i1().unwrap()), "(H^2 + 1)*d^3 + 2*H + int^2*(H - 1) + 3*e[0,2]");
    }

    #[test]
    fn format_multi_slot() {
        let a = parse_operator("3/2*H1^2*d1^3*int2*H2 - e1[0,1]*d2 + (H1 + 1)*d2", 2).unwrap();
        let text = format_operator(&a);
        assert_eq!(parse_operator(&text, 2).unwrap(), a);
        assert_eq!(text, "3/2*H1^2*d1^3*int2*H2 + (H1 + 1)*d2 - e1[0,1]*d2");
    }
}
