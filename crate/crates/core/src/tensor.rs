//! `𝕀ₙ = 𝕀₁^{⊗n}` and its prime factor algebras.
//!
//! An [`InElement`] is a sparse sum of basis tuples, one factor monomial per
//! tensor slot. Each slot carries a [`Mode`]: in `I1` mode the slot is a copy
//! of `𝕀₁`; in `B1` mode it is the quotient `B₁ = 𝕀₁/F`, so the mixed
//! algebras `B_{n-m} ⊗ 𝕀ₘ` (quotients of `𝕀ₙ` by the primes `𝔭_I`) share the
//! same multiplication kernel.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{PolyH, Rat};
use crate::error::{Error, Result};
use crate::i1::{mono_mul, I1Element, I1Monomial};
use crate::lattice::IdealAntichain;

/// Whether a tensor slot holds `𝕀₁` or its quotient `B₁`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Mode {
    I1,
    B1,
}

/// One tensor slot of a basis tuple.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FactorMonomial {
    I1(I1Monomial),
    /// `Hʲ ∂ᵈ` in `B₁`, `d ∈ ℤ`.
    B1 { d: i64, h: u32 },
}

impl FactorMonomial {
    pub const ONE: FactorMonomial = FactorMonomial::I1(I1Monomial::H(0));

    pub fn mode(&self) -> Mode {
        match self {
            FactorMonomial::I1(_) => Mode::I1,
            FactorMonomial::B1 { .. } => Mode::B1,
        }
    }

    pub fn unit(mode: Mode) -> Self {
        match mode {
            Mode::I1 => FactorMonomial::ONE,
            Mode::B1 => FactorMonomial::B1 { d: 0, h: 0 },
        }
    }

    /// ℤ-degree of the slot (`∂` has degree -1, `∫` degree +1).
    pub fn grade(&self) -> i64 {
        match self {
            FactorMonomial::I1(m) => m.grade(),
            FactorMonomial::B1 { d, .. } => -d,
        }
    }

    fn times(&self, other: &Self) -> Vec<(FactorMonomial, Rat)> {
        match (self, other) {
            (FactorMonomial::I1(a), FactorMonomial::I1(b)) => mono_mul(a, b)
                .terms()
                .map(|(m, c)| (FactorMonomial::I1(*m), c.clone()))
                .collect(),
            // Hʲ∂ᵈ · Hˡ∂ᵉ = Hʲ (H+d)ˡ ∂ᵈ⁺ᵉ
            (FactorMonomial::B1 { d, h }, FactorMonomial::B1 { d: e, h: l }) => {
                let poly = &PolyH::monomial(Rat::one(), *h)
                    * &PolyH::monomial(Rat::one(), *l).shift(*d);
                b1_expand(&poly, d + e)
            }
            _ => unreachable!("slot modes are checked before multiplication"),
        }
    }

    fn involution(&self) -> Vec<(FactorMonomial, Rat)> {
        match self {
            FactorMonomial::I1(m) => vec![(FactorMonomial::I1(m.involution()), Rat::one())],
            // (Hʲ∂ᵈ)* = ∂⁻ᵈHʲ = (H-d)ʲ∂⁻ᵈ
            FactorMonomial::B1 { d, h } => {
                b1_expand(&PolyH::monomial(Rat::one(), *h).shift(-d), -d)
            }
        }
    }

    /// Image in `B₁` of an `I1`-mode slot; empty for matrix units.
    fn project(&self) -> Vec<(FactorMonomial, Rat)> {
        match self {
            FactorMonomial::I1(m) => {
                let b = I1Element::monomial(*m).project_b1();
                b.terms().flat_map(|(d, p)| b1_expand(p, d)).collect()
            }
            FactorMonomial::B1 { .. } => vec![(*self, Rat::one())],
        }
    }
}

fn b1_expand(p: &PolyH, d: i64) -> Vec<(FactorMonomial, Rat)> {
    p.terms()
        .map(|(h, c)| (FactorMonomial::B1 { d, h }, c.clone()))
        .collect()
}

type Tuple = Vec<FactorMonomial>;

/// An element of `𝕀ₙ` (or of a mixed quotient), fully expanded over basis
/// tuples.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InElement {
    modes: Vec<Mode>,
    terms: BTreeMap<Tuple, Rat>,
}

impl InElement {
    pub fn zero(n: usize) -> Self {
        Self::zero_with_modes(vec![Mode::I1; n])
    }

    pub fn zero_with_modes(modes: Vec<Mode>) -> Self {
        assert!(!modes.is_empty(), "an operator algebra needs at least one factor");
        Self {
            modes,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Rat::one())
    }

    pub fn scalar(n: usize, c: Rat) -> Self {
        let mut out = Self::zero(n);
        out.add_term(vec![FactorMonomial::ONE; n], c);
        out
    }

    /// `a` placed in slot `slot` (0-based) of `𝕀ₙ`, identity elsewhere.
    pub fn embed(a: &I1Element, slot: usize, n: usize) -> Self {
        assert!(slot < n, "slot {slot} out of range for n = {n}");
        let mut out = Self::zero(n);
        for (m, c) in a.terms() {
            let mut t = vec![FactorMonomial::ONE; n];
            t[slot] = FactorMonomial::I1(*m);
            out.add_term(t, c.clone());
        }
        out
    }

    pub fn from_i1(a: &I1Element) -> Self {
        Self::embed(a, 0, 1)
    }

    /// `a₁ ⊗ ... ⊗ aₙ`, expanded multilinearly.
    pub fn tensor(factors: &[I1Element]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyFactorList);
        }
        let n = factors.len();
        let mut partial: Vec<(Tuple, Rat)> = vec![(Vec::with_capacity(n), Rat::one())];
        for f in factors {
            let mut next = Vec::new();
            for (t, c) in &partial {
                for (m, v) in f.terms() {
                    let mut t2 = t.clone();
                    t2.push(FactorMonomial::I1(*m));
                    next.push((t2, c * v));
                }
            }
            partial = next;
        }
        let mut out = Self::zero(n);
        for (t, c) in partial {
            out.add_term(t, c);
        }
        Ok(out)
    }

    /// Builds an element from explicit tuples; every tuple must match the
    /// given modes.
    pub fn from_terms<I>(modes: Vec<Mode>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<FactorMonomial>, Rat)>,
    {
        let mut out = Self::zero_with_modes(modes);
        for (t, c) in terms {
            if t.len() != out.n() {
                return Err(Error::DimensionMismatch(t.len(), out.n()));
            }
            if t.iter().zip(&out.modes).any(|(f, m)| f.mode() != *m) {
                return Err(Error::ModeMismatch(
                    "factor monomial kind does not match the slot mode".into(),
                ));
            }
            out.add_term(t, c);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, t: Tuple, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(t.len(), self.modes.len());
        match self.terms.entry(t) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.modes.len()
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[FactorMonomial], &Rat)> + '_ {
        self.terms.iter().map(|(t, c)| (t.as_slice(), c))
    }

    pub fn coeff(&self, t: &[FactorMonomial]) -> Rat {
        self.terms.get(t).cloned().unwrap_or_else(Rat::zero)
    }

    /// For `n = 1` in `I1` mode, the underlying `𝕀₁` element.
    pub fn to_i1(&self) -> Option<I1Element> {
        if self.modes != [Mode::I1] {
            return None;
        }
        Some(I1Element::from_terms(self.terms.iter().map(|(t, c)| match t[0] {
            FactorMonomial::I1(m) => (m, c.clone()),
            FactorMonomial::B1 { .. } => unreachable!(),
        })))
    }

    pub fn all_i1(&self) -> bool {
        self.modes.iter().all(|m| *m == Mode::I1)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero_with_modes(self.modes.clone());
        for (t, v) in &self.terms {
            out.add_term(t.clone(), v * c);
        }
        out
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(self.n(), other.n()));
        }
        if self.modes != other.modes {
            return Err(Error::ModeMismatch(format!(
                "{:?} vs {:?}",
                self.modes, other.modes
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-Rat::one()))
    }

    /// Factorwise product followed by multilinear cross-expansion.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero_with_modes(self.modes.clone());
        let n = self.n();
        for (ta, ca) in &self.terms {
            for (tb, cb) in &other.terms {
                let mut partial: Vec<(Tuple, Rat)> = vec![(Vec::with_capacity(n), ca * cb)];
                for (fa, fb) in ta.iter().zip(tb) {
                    let prod = fa.times(fb);
                    if prod.is_empty() {
                        partial.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (t, c) in &partial {
                        for (m, v) in &prod {
                            let mut t2 = t.clone();
                            t2.push(*m);
                            next.push((t2, c * v));
                        }
                    }
                    partial = next;
                }
                for (t, c) in partial {
                    out.add_term(t, c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::zero_with_modes(self.modes.clone());
        acc.add_term(self.modes.iter().map(|m| FactorMonomial::unit(*m)).collect(), Rat::one());
        for _ in 0..exp {
            acc = acc.try_mul(self).expect("same shape");
        }
        acc
    }

    /// Factorwise involution; an anti-automorphism of the tensor algebra.
    pub fn involution(&self) -> Self {
        self.map_factorwise(|_, f| f.involution())
    }

    fn map_factorwise<F>(&self, f: F) -> Self
    where
        F: Fn(usize, &FactorMonomial) -> Vec<(FactorMonomial, Rat)>,
    {
        self.map_factorwise_modes(self.modes.clone(), f)
    }

    fn map_factorwise_modes<F>(&self, modes: Vec<Mode>, f: F) -> Self
    where
        F: Fn(usize, &FactorMonomial) -> Vec<(FactorMonomial, Rat)>,
    {
        let mut out = Self::zero_with_modes(modes);
        for (t, c) in &self.terms {
            let mut partial: Vec<(Tuple, Rat)> = vec![(Vec::new(), c.clone())];
            for (slot, m) in t.iter().enumerate() {
                let img = f(slot, m);
                let mut next = Vec::new();
                for (t2, c2) in &partial {
                    for (m2, v) in &img {
                        let mut t3 = t2.clone();
                        t3.push(*m2);
                        next.push((t3, c2 * v));
                    }
                }
                partial = next;
            }
            for (t2, c2) in partial {
                out.add_term(t2, c2);
            }
        }
        out
    }

    /// Sum of the terms whose per-slot degrees equal `degrees`.
    pub fn grade_component(&self, degrees: &[i64]) -> Result<Self> {
        if degrees.len() != self.n() {
            return Err(Error::DimensionMismatch(degrees.len(), self.n()));
        }
        let mut out = Self::zero_with_modes(self.modes.clone());
        for (t, c) in &self.terms {
            if t.iter().zip(degrees).all(|(m, d)| m.grade() == *d) {
                out.add_term(t.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Action on `Pₙ = K[x₁, ..., xₙ]`, slot `i` acting on `xᵢ`.
    pub fn apply(&self, p: &PolyXn) -> Result<PolyXn> {
        if !self.all_i1() {
            return Err(Error::ModeMismatch("B1-mode factors do not act on polynomials".into()));
        }
        if p.n() != self.n() {
            return Err(Error::DimensionMismatch(p.n(), self.n()));
        }
        let mut out = PolyXn::zero(self.n());
        for (t, c) in &self.terms {
            'mono: for (alpha, v) in p.terms() {
                let mut exps = Vec::with_capacity(alpha.len());
                let mut w = c * v;
                for (f, s) in t.iter().zip(alpha) {
                    let FactorMonomial::I1(m) = f else { unreachable!() };
                    match crate::i1::act_on_power(m, *s) {
                        Some((deg, wt)) => {
                            exps.push(deg);
                            w *= wt;
                        }
                        None => continue 'mono,
                    }
                }
                out.add_term(exps, w);
            }
        }
        Ok(out)
    }

    /// Image in the quotient by `𝔭_I = Σ_{i∈I} 𝔭ᵢ` (`I` 1-based): slots in
    /// `I` switch to `B₁` mode, dropping matrix units.
    pub fn project_modulo_prime(&self, primes: &[usize]) -> Result<Self> {
        let n = self.n();
        if let Some(&bad) = primes.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::DimensionMismatch(bad, n));
        }
        let mut modes = self.modes.clone();
        for &i in primes {
            modes[i - 1] = Mode::B1;
        }
        Ok(self.map_factorwise_modes(modes, |slot, m| {
            if primes.contains(&(slot + 1)) {
                m.project()
            } else {
                vec![(*m, Rat::one())]
            }
        }))
    }

    /// Whether this element lies in the ideal `I_C`: each support tuple must
    /// have matrix units in every slot where some `f ∈ C` is zero.
    pub fn ideal_membership(&self, c: &IdealAntichain) -> Result<bool> {
        if c.n() != self.n() {
            return Err(Error::DimensionMismatch(c.n(), self.n()));
        }
        if !self.all_i1() {
            return Err(Error::ModeMismatch("membership is defined on 𝕀ₙ itself".into()));
        }
        Ok(self.terms.keys().all(|t| {
            c.elements().iter().any(|f| {
                t.iter()
                    .enumerate()
                    .all(|(i, m)| f.get(i + 1) || matches!(m, FactorMonomial::I1(I1Monomial::Mat(..))))
            })
        }))
    }
}

impl Add for &InElement {
    type Output = InElement;
    fn add(self, rhs: &InElement) -> InElement {
        self.try_add(rhs).expect("operands of + must have the same shape")
    }
}

impl Sub for &InElement {
    type Output = InElement;
    fn sub(self, rhs: &InElement) -> InElement {
        self.try_sub(rhs).expect("operands of - must have the same shape")
    }
}

impl Mul for &InElement {
    type Output = InElement;
    fn mul(self, rhs: &InElement) -> InElement {
        self.try_mul(rhs).expect("operands of * must have the same shape")
    }
}

impl Neg for &InElement {
    type Output = InElement;
    fn neg(self) -> InElement {
        self.scale(&-Rat::one())
    }
}

impl fmt::Display for InElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::format_operator(self))
    }
}

impl fmt::Debug for InElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InElement[n={}]({self})", self.n())
    }
}

/// Polynomial in `x₁, ..., xₙ` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyXn {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl PolyXn {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, vec![0; n], Rat::one())
    }

    pub fn monomial(n: usize, exps: Vec<u32>, c: Rat) -> Self {
        let mut p = Self::zero(n);
        p.add_term(exps, c);
        p
    }

    /// `xᵢ` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::monomial(n, e, Rat::one())
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        assert_eq!(exps.len(), self.n);
        let entry = self.terms.entry(exps.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero(self.n);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, v) in &other.terms {
            out.add_term(e.clone(), v.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (ea, va) in &self.terms {
            for (eb, vb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, va * vb);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(self.n), |acc, _| acc.mul(self))
    }

    /// Terms ordered by total degree, then lexicographically, largest first.
    fn display_order(&self) -> Vec<(&Vec<u32>, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }
}

impl fmt::Display for PolyXn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        let parts: Vec<(bool, String)> = self
            .display_order()
            .into_iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| **k > 0)
                    .map(|(i, k)| match k {
                        1 => format!("x{}", i + 1),
                        _ => format!("x{}^{k}", i + 1),
                    })
                    .collect();
                let abs = c.abs();
                let body = if vars.is_empty() {
                    abs.to_string()
                } else {
                    format!("{}{}", crate::arith::coeff_prefix(&abs), vars.join("*"))
                };
                (c.is_negative(), body)
            })
            .collect();
        f.write_str(&crate::arith::join_signed(&parts))
    }
}

impl fmt::Debug for PolyXn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyXn({self})")
    }
}
