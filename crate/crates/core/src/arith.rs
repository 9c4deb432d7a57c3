//! Exact scalars, polynomials in `H`, and rational functions in `H` over ℚ.
//!
//! `H` is the commuting variable of the operator algebra. The shift
//! automorphism `τ: H ↦ H + 1` and its powers are exposed as [`PolyH::shift`]
//! and [`RatFunc::shift`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rat::from_integer(acc)
}

/// Falling factorial `s (s-1) ... (s-k+1)`; zero when `k > s`.
pub fn falling(s: u32, k: u32) -> Rat {
    if k > s {
        return Rat::zero();
    }
    let mut acc = BigInt::one();
    for m in (s - k + 1)..=s {
        acc *= m;
    }
    Rat::from_integer(acc)
}

pub(crate) fn rat_pow(base: &Rat, exp: u32) -> Rat {
    num_traits::pow(base.clone(), exp as usize)
}

/// Formats a coefficient in front of a non-constant monomial: `""` for 1,
/// `"-"` for -1, `"3/2*"` otherwise. The sign is left to the caller when
/// `abs` is set.
pub(crate) fn coeff_prefix(c: &Rat) -> String {
    if c.is_one() {
        String::new()
    } else if (-c).is_one() {
        "-".to_string()
    } else {
        format!("{c}*")
    }
}

/// Joins signed terms into `a - b + c` form. Each item is (negative?, text).
pub(crate) fn join_signed(terms: &[(bool, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (neg, body)) in terms.iter().enumerate() {
        match (k, neg) {
            (0, false) => out.push_str(body),
            (0, true) => {
                out.push('-');
                out.push_str(body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(body);
            }
        }
    }
    out
}

/// Univariate polynomial in `H` with rational coefficients, stored sparsely.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyH {
    coeffs: BTreeMap<u32, Rat>,
}

impl PolyH {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable `H`.
    pub fn var() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, deg: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(deg, c);
        }
        Self { coeffs }
    }

    /// Builds from `(degree, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rat)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    /// Coefficients listed from degree 0 upward.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(d, &c)| (d as u32, rat_int(c))),
        )
    }

    /// `H - a`.
    pub fn linear_root(a: Rat) -> Self {
        Self::from_terms([(1, Rat::one()), (0, -a)])
    }

    pub(crate) fn add_term(&mut self, deg: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(deg).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(One::is_one)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, deg: u32) -> Rat {
        self.coeffs.get(&deg).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.values().next_back()
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Rat)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(d, v)| (*d, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, v: &Rat) -> Rat {
        let Some(top) = self.degree() else {
            return Rat::zero();
        };
        let mut acc = Rat::zero();
        for d in (0..=top).rev() {
            acc = acc * v + self.coeff(d);
        }
        acc
    }

    /// `τᵏ(p)`, i.e. the polynomial `H ↦ p(H + k)`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 || self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let step = Self::from_terms([(1, Rat::one()), (0, rat_int(k))]);
        let top = self.degree().unwrap();
        let mut acc = Self::zero();
        for d in (0..=top).rev() {
            acc = &acc * &step;
            acc.add_term(0, self.coeff(d));
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading_coeff().unwrap().clone();
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading_coeff().unwrap() / &lead;
            let t = Self::monomial(c, rd - dd);
            r = &r - &(&t * divisor);
            q = &q + &t;
        }
        Ok((q, r))
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The natural numbers `i` with `p(i + 1) = 0`, found by rational-root
    /// enumeration: such roots are positive integers dividing the constant
    /// term of the integer-normalized, `H`-free part of `p`.
    pub fn nonneg_shifted_roots(&self) -> Result<Vec<u64>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let ints = self.integer_coeffs();
        let low = *ints.keys().next().unwrap();
        let constant = ints[&low].abs();
        // Cauchy bound on root magnitude.
        let lead = ints.values().next_back().unwrap().abs();
        let max_ratio = ints
            .values()
            .map(|c| c.abs().div_floor(&lead))
            .max()
            .unwrap_or_else(BigInt::zero);
        let bound = max_ratio + BigInt::one();
        let limit = bound.min(constant.clone());
        let mut roots = Vec::new();
        let mut r = BigInt::one();
        while r <= limit {
            if constant.is_multiple_of(&r) && self.eval(&Rat::from_integer(r.clone())).is_zero() {
                let i = (&r - 1u32).to_u64().expect("root fits in u64");
                roots.push(i);
            }
            r += 1u32;
        }
        Ok(roots)
    }

    /// Coefficients scaled by the lcm of denominators, keyed by degree.
    fn integer_coeffs(&self) -> BTreeMap<u32, BigInt> {
        let lcm = self
            .coeffs
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|(d, c)| (*d, (c * Rat::from_integer(lcm.clone())).to_integer()))
            .collect()
    }

    /// Renders with the given variable name, highest degree first.
    pub fn format_with(&self, var: &str) -> String {
        let terms: Vec<(bool, String)> = self
            .coeffs
            .iter()
            .rev()
            .map(|(d, c)| {
                let neg = c.is_negative();
                let a = c.abs();
                let body = match d {
                    0 => a.to_string(),
                    _ => {
                        let m = if *d == 1 {
                            var.to_string()
                        } else {
                            format!("{var}^{d}")
                        };
                        format!("{}{m}", coeff_prefix(&a))
                    }
                };
                (neg, body)
            })
            .collect();
        join_signed(&terms)
    }
}

impl fmt::Display for PolyH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("H"))
    }
}

impl fmt::Debug for PolyH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyH({self})")
    }
}

impl Add for &PolyH {
    type Output = PolyH;
    fn add(self, rhs: &PolyH) -> PolyH {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl Sub for &PolyH {
    type Output = PolyH;
    fn sub(self, rhs: &PolyH) -> PolyH {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, -c.clone());
        }
        out
    }
}

impl Mul for &PolyH {
    type Output = PolyH;
    fn mul(self, rhs: &PolyH) -> PolyH {
        let mut out = PolyH::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

impl Neg for &PolyH {
    type Output = PolyH;
    fn neg(self) -> PolyH {
        self.scale(&-Rat::one())
    }
}

impl Add for PolyH {
    type Output = PolyH;
    fn add(self, rhs: PolyH) -> PolyH {
        &self + &rhs
    }
}

impl Sub for PolyH {
    type Output = PolyH;
    fn sub(self, rhs: PolyH) -> PolyH {
        &self - &rhs
    }
}

impl Mul for PolyH {
    type Output = PolyH;
    fn mul(self, rhs: PolyH) -> PolyH {
        &self * &rhs
    }
}

impl Neg for PolyH {
    type Output = PolyH;
    fn neg(self) -> PolyH {
        -&self
    }
}

/// Reduced rational function `num / den` in `H` with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: PolyH,
    den: PolyH,
}

impl RatFunc {
    pub fn new(num: PolyH, den: PolyH) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead = den.leading_coeff().unwrap().recip();
        Ok(Self {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: PolyH::zero(),
            den: PolyH::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(PolyH::one())
    }

    pub fn from_poly(p: PolyH) -> Self {
        Self {
            num: p,
            den: PolyH::one(),
        }
    }

    pub fn num(&self) -> &PolyH {
        &self.num
    }

    pub fn den(&self) -> &PolyH {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn shift(&self, k: i64) -> Self {
        // τ is an automorphism, so a reduced fraction stays reduced and the
        // denominator stays monic.
        Self {
            num: self.num.shift(k),
            den: self.den.shift(k),
        }
    }

    pub fn format_with(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.format_with(var)
        } else if self.num.degree() == Some(0) && self.num.coeff(0).is_integer() {
            format!("{}/({})", self.num.coeff(0), self.den.format_with(var))
        } else {
            format!("({})/({})", self.num.format_with(var), self.den.format_with(var))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("H"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
