//! The ideal lattice of `𝕀ₙ` in its antichain encoding.
//!
//! For `f: {1..n} → {0,1}` let `I_f = I_{f(1)} ⊗ ... ⊗ I_{f(n)}` with
//! `I₀ = F` and `I₁ = 𝕀₁`. Every ideal of `𝕀ₙ` is `I_C = Σ_{f∈C} I_f` for a
//! unique antichain `C` of such functions under the pointwise order, and
//! `I_f ⊆ I_g` iff `f ≤ g`. Sums are unions, products (which coincide with
//! intersections) are pointwise meets; both followed by taking maximal
//! elements. The number of ideals is the Dedekind number.
//!
//! The same encoding describes the ideals of the Jacobian algebra `𝔸ₙ`,
//! whose ideal lattice is isomorphic to this one under restriction.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default largest `n` accepted by [`enumerate_ideals`].
pub const DEFAULT_ENUMERATION_LIMIT: usize = 6;

/// A function `{1..n} → {0,1}`. The bitmask reads like the bitstring
/// `f(1)f(2)...f(n)` as a binary number, so `f(1)` is the high bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BoolFn {
    n: usize,
    bits: u64,
}

impl BoolFn {
    pub fn new(n: usize, bits: u64) -> Self {
        assert!((1..=64).contains(&n), "n must be in 1..=64");
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self { n, bits: bits & mask }
    }

    /// The constant function 1.
    pub fn ones(n: usize) -> Self {
        Self::new(n, u64::MAX)
    }

    /// All ones except `f(i) = 0` (1-based).
    pub fn coatom(n: usize, i: usize) -> Self {
        Self::new(n, !(1u64 << (n - i)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// `f(i)`, 1-based.
    pub fn get(&self, i: usize) -> bool {
        self.bits >> (self.n - i) & 1 == 1
    }

    pub fn below(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn meet(&self, other: &Self) -> Self {
        Self::new(self.n, self.bits & other.bits)
    }

    /// Positions where `f` is zero (1-based).
    pub fn zeros(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| !self.get(i)).collect()
    }

    fn parse(s: &str, n: usize) -> Result<Self> {
        if s.chars().count() != n {
            return Err(Error::syntax(0, format!("bitstring {s:?} must have length {n}")));
        }
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << (n - 1 - i),
                _ => return Err(Error::syntax(i, format!("invalid bit {ch:?}"))),
            }
        }
        Ok(Self::new(n, bits))
    }
}

impl fmt::Display for BoolFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// An ideal of `𝕀ₙ`, as the antichain of its maximal generators `I_f`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IdealAntichain {
    n: usize,
    elements: Vec<BoolFn>,
}

impl IdealAntichain {
    /// The maximal elements of `fns`, sorted by bitmask.
    pub fn normalize<I: IntoIterator<Item = BoolFn>>(n: usize, fns: I) -> Self {
        let mut all: Vec<BoolFn> = fns.into_iter().collect();
        assert!(all.iter().all(|f| f.n == n), "all functions must share n");
        all.sort();
        all.dedup();
        let elements = all
            .iter()
            .filter(|f| !all.iter().any(|g| g != *f && f.below(g)))
            .copied()
            .collect();
        Self { n, elements }
    }

    /// The zero ideal (empty antichain).
    pub fn zero(n: usize) -> Self {
        Self::normalize(n, [])
    }

    /// `𝕀ₙ` itself.
    pub fn whole(n: usize) -> Self {
        Self::normalize(n, [BoolFn::ones(n)])
    }

    /// `Fₙ = F^{⊗n}`, the smallest nonzero ideal.
    pub fn compact(n: usize) -> Self {
        Self::normalize(n, [BoolFn::new(n, 0)])
    }

    /// `𝔞ₙ = 𝔭₁ + ... + 𝔭ₙ`, the unique maximal ideal.
    pub fn maximal(n: usize) -> Self {
        Self::prime_ideal(n, &(1..=n).collect::<Vec<_>>())
    }

    /// `𝔭_I = Σ_{i∈I} 𝔭ᵢ` (1-based `I`); `𝔭_∅ = 0`.
    pub fn prime_ideal(n: usize, subset: &[usize]) -> Self {
        Self::normalize(n, subset.iter().map(|&i| BoolFn::coatom(n, i)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[BoolFn] {
        &self.elements
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::normalize(
            self.n,
            self.elements.iter().chain(&other.elements).copied(),
        ))
    }

    /// Product of ideals; equal to their intersection.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let meets = self
            .elements
            .iter()
            .flat_map(|f| other.elements.iter().map(move |g| f.meet(g)));
        Ok(Self::normalize(self.n, meets))
    }

    /// `self ⊆ other`.
    pub fn includes_in(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self
            .elements
            .iter()
            .all(|f| other.elements.iter().any(|g| f.below(g))))
    }

    /// Primes are exactly the sums of height-one primes: every generator has
    /// a single zero. The zero ideal is prime, `𝕀ₙ` is not.
    pub fn is_prime(&self) -> bool {
        self.elements
            .iter()
            .all(|f| f.bits.count_ones() as usize == self.n - 1)
    }

    /// For a prime `𝔭_I`, the index set `I`.
    pub fn prime_support(&self) -> Option<Vec<usize>> {
        if !self.is_prime() {
            return None;
        }
        let mut s: Vec<usize> = self.elements.iter().map(|f| f.zeros()[0]).collect();
        s.sort_unstable();
        Some(s)
    }

    /// The minimal `I` (under inclusion) with `self ⊆ 𝔭_I`; the ideal is the
    /// intersection of these primes. Empty for `𝕀ₙ`.
    pub fn minimal_primes_over(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        assert!(n < 32, "minimal prime search is exponential in n");
        let zero_sets: Vec<u64> = self.elements.iter().map(|f| !f.bits & mask(n)).collect();
        let hits = |s: u64| zero_sets.iter().all(|z| z & s != 0);
        let mut minimal: Vec<u64> = Vec::new();
        let mut candidates: Vec<u64> = (0..(1u64 << n)).filter(|&s| hits(s)).collect();
        candidates.sort_by_key(|s| (s.count_ones(), *s));
        for s in candidates {
            if !minimal.iter().any(|m| m & s == *m) {
                minimal.push(s);
            }
        }
        let mut out: Vec<Vec<usize>> = minimal
            .into_iter()
            .map(|s| (1..=n).filter(|i| s >> (n - i) & 1 == 1).collect())
            .collect();
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    /// Parses `{01,10}`; `{}` is the zero ideal.
    pub fn parse(src: &str, n: usize) -> Result<Self> {
        let inner = braced(src)?;
        if inner.trim().is_empty() {
            return Ok(Self::zero(n));
        }
        let fns = inner
            .split(',')
            .map(|s| BoolFn::parse(s.trim(), n))
            .collect::<Result<Vec<_>>>()?;
        let out = Self::normalize(n, fns.iter().copied());
        if out.elements.len() != fns.len() {
            return Err(Error::syntax(0, "elements must be distinct and pairwise incomparable"));
        }
        Ok(out)
    }
}

impl fmt::Display for IdealAntichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn braced(src: &str) -> Result<&str> {
    let s = src.trim();
    s.strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::syntax(0, "expected a braced list like {01,10}"))
}

/// Parses a subset of `{1..n}` written `{1,3}`.
pub fn parse_subset(src: &str, n: usize) -> Result<Vec<usize>> {
    let inner = braced(src).unwrap_or(src.trim());
    let mut out = Vec::new();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i: usize = part
            .parse()
            .map_err(|_| Error::syntax(0, format!("invalid index {part:?}")))?;
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n, pos: 0 });
        }
        out.push(i);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn format_subset(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n == 0 || n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    Ok(())
}

/// Depth-first walk over antichains of the Boolean lattice on `n` points;
/// each antichain is visited once, as an increasing sequence of bitmasks.
fn walk_antichains<F: FnMut(&[u64])>(n: usize, visit: &mut F) {
    fn rec<F: FnMut(&[u64])>(chosen: &mut Vec<u64>, candidates: &[u64], visit: &mut F) {
        visit(chosen);
        for (k, &c) in candidates.iter().enumerate() {
            let rest: Vec<u64> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&g| g & c != c && g & c != g)
                .collect();
            chosen.push(c);
            rec(chosen, &rest, visit);
            chosen.pop();
        }
    }
    let all: Vec<u64> = (0..(1u64 << n)).collect();
    rec(&mut Vec::new(), &all, visit);
}

/// All ideals of `𝕀ₙ`, in depth-first order of their sorted generator lists.
pub fn enumerate_ideals(n: usize) -> Result<Vec<IdealAntichain>> {
    enumerate_ideals_with_limit(n, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_ideals_with_limit(n: usize, limit: usize) -> Result<Vec<IdealAntichain>> {
    check_limit(n, limit)?;
    let mut out = Vec::new();
    walk_antichains(n, &mut |c| {
        out.push(IdealAntichain {
            n,
            elements: c.iter().map(|&b| BoolFn::new(n, b)).collect(),
        });
    });
    Ok(out)
}

/// The Dedekind number `𝔡ₙ`, counted without materializing the ideals.
pub fn count_ideals(n: usize) -> Result<u64> {
    check_limit(n, DEFAULT_ENUMERATION_LIMIT)?;
    let mut count = 0u64;
    walk_antichains(n, &mut |_| count += 1);
    Ok(count)
}

/// `(2 - n + Σ_{i=1}^n 2^{C(n,i)}, 2^{2^n})`.
pub fn dedekind_bounds(n: usize) -> (BigInt, BigInt) {
    let two = BigInt::from(2);
    let mut lower = BigInt::from(2) - BigInt::from(n);
    let mut binom = BigInt::one();
    for i in 1..=n {
        binom = binom * BigInt::from(n + 1 - i) / BigInt::from(i);
        let e: usize = binom.clone().try_into().expect("binomial fits usize");
        lower += num_traits::pow(two.clone(), e);
    }
    let upper = num_traits::pow(two, 1usize << n);
    debug_assert!(!upper.is_zero());
    (lower, upper)
}
