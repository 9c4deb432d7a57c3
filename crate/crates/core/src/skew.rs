//! Skew Laurent polynomials `Σ αᵢ(H) ∂ⁱ` with `∂ α(H) = α(H+1) ∂`.
//!
//! [`B1Element`] has polynomial coefficients and is the quotient of the
//! operator algebra by its compact ideal. [`CalB1Element`] has rational
//! function coefficients; it is a noncommutative Euclidean domain for the
//! length function and supports left and right division with remainder.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::arith::{coeff_prefix, join_signed, PolyH, Rat, RatFunc};
use crate::error::{Error, Result};

/// Coefficient ring for a skew Laurent polynomial: a commutative ring with
/// the shift automorphism `τᵏ`.
pub trait SkewCoeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn shift(&self, k: i64) -> Self;
    fn format_with(&self, var: &str) -> String;
    /// The coefficient as a polynomial, when it is one.
    fn as_poly(&self) -> Option<&PolyH>;
    /// Whether the leading numerator coefficient is negative.
    fn leads_negative(&self) -> bool;
}

impl SkewCoeff for PolyH {
    fn zero() -> Self {
        PolyH::zero()
    }
    fn one() -> Self {
        PolyH::one()
    }
    fn is_zero(&self) -> bool {
        PolyH::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn shift(&self, k: i64) -> Self {
        PolyH::shift(self, k)
    }
    fn format_with(&self, var: &str) -> String {
        PolyH::format_with(self, var)
    }
    fn as_poly(&self) -> Option<&PolyH> {
        Some(self)
    }
    fn leads_negative(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_negative())
    }
}

impl SkewCoeff for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn shift(&self, k: i64) -> Self {
        RatFunc::shift(self, k)
    }
    fn format_with(&self, var: &str) -> String {
        RatFunc::format_with(self, var)
    }
    fn as_poly(&self) -> Option<&PolyH> {
        self.den().is_one().then(|| self.num())
    }
    fn leads_negative(&self) -> bool {
        self.num().leading_coeff().is_some_and(|c| c.is_negative())
    }
}

/// `Σ αᵢ(H) ∂ⁱ` over `i ∈ ℤ`, coefficients written on the left.
#[derive(Clone, PartialEq)]
pub struct Laurent<C: SkewCoeff> {
    terms: BTreeMap<i64, C>,
}

/// `K[H][∂, ∂⁻¹; τ]`.
pub type B1Element = Laurent<PolyH>;
/// `K(H)[∂, ∂⁻¹; τ]`.
pub type CalB1Element = Laurent<RatFunc>;

impl<C: SkewCoeff> Default for Laurent<C> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: SkewCoeff> Laurent<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(C::one(), 0)
    }

    /// `∂^d`.
    pub fn d_pow(d: i64) -> Self {
        Self::term(C::one(), d)
    }

    /// `c ∂^d`.
    pub fn term(c: C, d: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(d, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (d, c) in terms {
            out.add_term(d, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, d: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&d) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(d, merged);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: i64) -> C {
        self.terms.get(&d).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in ascending `∂`-degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn top_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn bottom_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// `l(αₘ∂ᵐ + ... + αₙ∂ⁿ) = n - m`; `None` for zero.
    pub fn length(&self) -> Option<u64> {
        Some((self.top_degree()? - self.bottom_degree()?) as u64)
    }

    /// Left multiplication by a coefficient.
    pub fn scale_left(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(d, a)| (*d, c.times(a))))
    }

    /// The anti-automorphism `∂ ↦ ∂⁻¹`, `H ↦ H`: `α(H)∂ᵈ ↦ α(H-d)∂⁻ᵈ`.
    pub fn involution(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(d, a)| (-d, a.shift(-d))))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Renders as `(H + 1)*D^-2 + 3*D` with configurable symbol names.
    pub fn format_with(&self, h: &str, d: &str) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (deg, c) in &self.terms {
            let dpart = match deg {
                0 => String::new(),
                1 => d.to_string(),
                _ => format!("{d}^{deg}"),
            };
            let single = c.as_poly().filter(|p| p.len() == 1);
            match single {
                Some(p) => {
                    let (j, coef) = p.terms().next().unwrap();
                    let neg = coef.is_negative();
                    let abs = coef.abs();
                    let hpart = match j {
                        0 => String::new(),
                        1 => h.to_string(),
                        _ => format!("{h}^{j}"),
                    };
                    let mono = [hpart, dpart].into_iter().filter(|s| !s.is_empty());
                    let mono: Vec<String> = mono.collect();
                    let body = if mono.is_empty() {
                        abs.to_string()
                    } else {
                        format!("{}{}", coeff_prefix(&abs), mono.join("*"))
                    };
                    parts.push((neg, body));
                }
                None if *deg == 0 && c.as_poly().is_some() => {
                    let p = c.as_poly().unwrap();
                    for (j, coef) in p.terms().rev() {
                        let single = PolyH::monomial(coef.abs(), j);
                        parts.push((coef.is_negative(), single.format_with(h)));
                    }
                }
                None if c.as_poly().is_some() => {
                    let inner = c.format_with(h);
                    parts.push((false, format!("({inner})*{dpart}")));
                }
                None => {
                    let neg = c.leads_negative();
                    let c = if neg { C::zero().minus(c) } else { c.clone() };
                    let inner = c.format_with(h);
                    match *deg {
                        0 => parts.push((neg, inner)),
                        _ => parts.push((neg, format!("{inner}*{dpart}"))),
                    }
                }
            }
        }
        join_signed(&parts)
    }
}

impl Laurent<PolyH> {
    /// The localization map `B₁ → 𝓑₁`.
    pub fn embed(&self) -> CalB1Element {
        Laurent::from_terms(
            self.terms
                .iter()
                .map(|(d, p)| (*d, RatFunc::from_poly(p.clone()))),
        )
    }
}

impl Laurent<RatFunc> {
    /// `b = q·c + r` with `r = 0` or `l(r) < l(c)`.
    ///
    /// Each step cancels the top term of the running remainder with a
    /// monomial left multiple of `c`; the support of the remainder shrinks
    /// from above until it is shorter than `c`.
    pub fn right_divide(&self, c: &Self) -> Result<(Self, Self)> {
        self.divide(c, Side::Right)
    }

    /// `b = c·q + r` with `r = 0` or `l(r) < l(c)`.
    pub fn left_divide(&self, c: &Self) -> Result<(Self, Self)> {
        self.divide(c, Side::Left)
    }

    fn divide(&self, c: &Self, side: Side) -> Result<(Self, Self)> {
        let c_len = c.length().ok_or(Error::DivisionByZero)?;
        let c_top = c.top_degree().unwrap();
        let c_lead = c.coeff(c_top);
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(r_len) = r.length() {
            if r_len < c_len {
                break;
            }
            let r_top = r.top_degree().unwrap();
            let lead = r.coeff(r_top);
            let k = r_top - c_top;
            // (β∂ᵏ)(γ∂ᵗ) = β τᵏ(γ) ∂ᵏ⁺ᵗ  and  (γ∂ᵗ)(β∂ᵏ) = γ τᵗ(β) ∂ᵗ⁺ᵏ
            let beta = match side {
                Side::Right => lead.div(&c_lead.shift(k))?,
                Side::Left => lead.div(&c_lead)?.shift(-c_top),
            };
            let t = Self::term(beta, k);
            let sub = match side {
                Side::Right => &t * c,
                Side::Left => c * &t,
            };
            r = &r - &sub;
            q = &q + &t;
        }
        Ok((q, r))
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

impl<C: SkewCoeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("H", "D"))
    }
}

impl<C: SkewCoeff> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl<C: SkewCoeff> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl<C: SkewCoeff> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        self + &(-rhs)
    }
}

impl<C: SkewCoeff> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent::from_terms(self.terms.iter().map(|(d, c)| (*d, C::zero().minus(c))))
    }
}

impl<C: SkewCoeff> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (da, a) in &self.terms {
            for (db, b) in &rhs.terms {
                out.add_term(da + db, a.times(&b.shift(*da)));
            }
        }
        out
    }
}

/// Convenience: a scalar as a constant polynomial coefficient.
pub fn b1_scalar(c: Rat) -> B1Element {
    B1Element::term(PolyH::constant(c), 0)
}
