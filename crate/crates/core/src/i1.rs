//! Canonical-form arithmetic in the algebra `𝕀₁` of polynomial
//! integro-differential operators on `K[x]`.
//!
//! Every element is stored in its unique canonical form
//!
//! ```text
//! Σ aᵢ(H) ∂ⁱ  +  a₀(H)  +  Σ ∫ⁱ bᵢ(H)  +  Σ λₛₜ eₛₜ
//! ```
//!
//! over the basis `{Hʲ∂ⁱ, Hʲ, ∫ⁱHʲ, eₛₜ}` (`i ≥ 1`). `H = ∂x`, and
//! `eₛₜ = ∫ˢ∂ᵗ - ∫ˢ⁺¹∂ᵗ⁺¹` are the scaled matrix units spanning the ideal `F`
//! of compact operators. Products of basis monomials are rewritten into this
//! shape directly; see [`mono_mul`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{factorial, falling, rat_int, rat_pow, PolyH, Rat};
use crate::error::Result;
use crate::skew::B1Element;

/// One basis element of `𝕀₁`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum I1Monomial {
    /// `Hʲ ∂ⁱ` with `order = i ≥ 1`.
    Diff { h: u32, order: u32 },
    /// `Hʲ`.
    H(u32),
    /// `∫ⁱ Hʲ` with `order = i ≥ 1`.
    Int { order: u32, h: u32 },
    /// `eₛₜ`.
    Mat(u32, u32),
}

impl I1Monomial {
    /// Builds `Hʲ∂ⁱ`, collapsing `i = 0` to `Hʲ`.
    pub fn diff(h: u32, order: u32) -> Self {
        if order == 0 {
            I1Monomial::H(h)
        } else {
            I1Monomial::Diff { h, order }
        }
    }

    /// Builds `∫ⁱHʲ`, collapsing `i = 0` to `Hʲ`.
    pub fn int(order: u32, h: u32) -> Self {
        if order == 0 {
            I1Monomial::H(h)
        } else {
            I1Monomial::Int { order, h }
        }
    }

    /// Degree in the ℤ-grading: `∂` has degree -1, `∫` degree +1, `H` degree 0
    /// and `eₛₜ` degree `s - t`.
    pub fn grade(&self) -> i64 {
        match *self {
            I1Monomial::Diff { order, .. } => -(order as i64),
            I1Monomial::H(_) => 0,
            I1Monomial::Int { order, .. } => order as i64,
            I1Monomial::Mat(s, t) => s as i64 - t as i64,
        }
    }

    pub fn is_mat(&self) -> bool {
        matches!(self, I1Monomial::Mat(..))
    }

    /// Image under the involution `∂ ↔ ∫`, `H ↦ H`. Because the
    /// coefficient sides are mirrored in the canonical form, the image of a
    /// basis element is again a basis element.
    pub fn involution(&self) -> Self {
        match *self {
            I1Monomial::Diff { h, order } => I1Monomial::Int { order, h },
            I1Monomial::H(h) => I1Monomial::H(h),
            I1Monomial::Int { order, h } => I1Monomial::Diff { h, order },
            I1Monomial::Mat(s, t) => I1Monomial::Mat(t, s),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            I1Monomial::Diff { .. } => 0,
            I1Monomial::H(_) => 1,
            I1Monomial::Int { .. } => 2,
            I1Monomial::Mat(..) => 3,
        }
    }

    /// `(left poly, grade, right poly)` with the monomial equal to
    /// `left · G · right`, where `G` is `∂^{-grade}`, `1` or `∫^{grade}`.
    /// `None` for matrix units.
    fn graded_parts(&self) -> Option<(u32, i64, u32)> {
        match *self {
            I1Monomial::Diff { h, order } => Some((h, -(order as i64), 0)),
            I1Monomial::H(h) => Some((h, 0, 0)),
            I1Monomial::Int { order, h } => Some((0, order as i64, h)),
            I1Monomial::Mat(..) => None,
        }
    }
}

// Canonical order: the ∂-part (highest order first), the K[H]-part, the
// ∫-part (lowest order first), then the matrix units; higher H-powers first.
impl Ord for I1Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        use I1Monomial::*;
        match (self, other) {
            (Diff { h: a, order: i }, Diff { h: b, order: k }) => k.cmp(i).then(b.cmp(a)),
            (H(a), H(b)) => b.cmp(a),
            (Int { order: i, h: a }, Int { order: k, h: b }) => i.cmp(k).then(b.cmp(a)),
            (Mat(s, t), Mat(u, v)) => (s, t).cmp(&(u, v)),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for I1Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `𝕀₁` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct I1Element {
    terms: BTreeMap<I1Monomial, Rat>,
}

impl I1Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(I1Monomial::H(0))
    }

    pub fn scalar(c: Rat) -> Self {
        Self::term(I1Monomial::H(0), c)
    }

    pub fn monomial(m: I1Monomial) -> Self {
        Self::term(m, Rat::one())
    }

    pub fn term(m: I1Monomial, c: Rat) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (I1Monomial, Rat)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    /// `∂`.
    pub fn partial() -> Self {
        Self::monomial(I1Monomial::diff(0, 1))
    }

    /// `∫`.
    pub fn integ() -> Self {
        Self::monomial(I1Monomial::int(1, 0))
    }

    /// `H = ∂x`.
    pub fn h() -> Self {
        Self::monomial(I1Monomial::H(1))
    }

    /// `x = ∫H`.
    pub fn x() -> Self {
        Self::monomial(I1Monomial::int(1, 1))
    }

    /// `eₛₜ`.
    pub fn e(s: u32, t: u32) -> Self {
        Self::monomial(I1Monomial::Mat(s, t))
    }

    /// `∂ᵏ`.
    pub fn partial_pow(k: u32) -> Self {
        Self::monomial(I1Monomial::diff(0, k))
    }

    /// `∫ᵏ`.
    pub fn integ_pow(k: u32) -> Self {
        Self::monomial(I1Monomial::int(k, 0))
    }

    /// `e₀₀ + e₁₁ + ... + e_{k-1,k-1}`.
    pub fn idempotent(k: u32) -> Self {
        Self::from_terms((0..k).map(|i| (I1Monomial::Mat(i, i), Rat::one())))
    }

    /// The polynomial `α(H)` as an operator.
    pub fn from_poly_h(p: &PolyH) -> Self {
        Self::from_terms(p.terms().map(|(j, c)| (I1Monomial::H(j), c.clone())))
    }

    pub(crate) fn add_term(&mut self, m: I1Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn add_scaled(&mut self, other: &Self, c: &Rat) {
        for (m, v) in &other.terms {
            self.add_term(*m, v * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &I1Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&I1Monomial, &Rat)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
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

    /// The anti-automorphism with `∂* = ∫`, `∫* = ∂`, `H* = H`.
    pub fn involution(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.involution(), c.clone())))
    }

    /// The homogeneous component of degree `d`.
    pub fn grade_component(&self, d: i64) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.grade() == d)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    /// Degrees with a nonzero component, ascending.
    pub fn grades(&self) -> Vec<i64> {
        let mut g: Vec<i64> = self.terms.keys().map(I1Monomial::grade).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// `Some(d)` when the element is nonzero and homogeneous of degree `d`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        match self.grades().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// Membership in the ideal `F = ⊕ K eᵢⱼ` of compact operators.
    pub fn is_in_f(&self) -> bool {
        self.terms.keys().all(I1Monomial::is_mat)
    }

    /// The quotient map `𝕀₁ → 𝕀₁/F ≅ B₁`: `∂ ↦ ∂`, `∫ ↦ ∂⁻¹`, `H ↦ H`.
    pub fn project_b1(&self) -> B1Element {
        let mut out = B1Element::zero();
        for (m, c) in &self.terms {
            match *m {
                I1Monomial::Diff { h, order } => {
                    out.add_term(order as i64, PolyH::monomial(c.clone(), h));
                }
                I1Monomial::H(h) => out.add_term(0, PolyH::monomial(c.clone(), h)),
                // ∂⁻ⁱ Hʲ = (H - i)ʲ ∂⁻ⁱ
                I1Monomial::Int { order, h } => {
                    let p = PolyH::var().pow(h).shift(-(order as i64)).scale(c);
                    out.add_term(-(order as i64), p);
                }
                I1Monomial::Mat(..) => {}
            }
        }
        out
    }

    /// Action on `K[x]`.
    pub fn apply(&self, p: &PolyX) -> PolyX {
        let mut out = PolyX::zero();
        for (m, c) in &self.terms {
            for (s, v) in p.terms() {
                if let Some((deg, w)) = act_on_power(m, s) {
                    out.add_term(deg, c * v * w);
                }
            }
        }
        out
    }

    /// Matrix of the action on `span{1, x, ..., x^N}`; column `s` holds the
    /// coefficients of `a·xˢ` truncated to degree `N`.
    pub fn matrix_of(&self, n: u32) -> Vec<Vec<Rat>> {
        self.matrix_rect(n + 1, n + 1)
    }

    /// Matrix of the action with `rows × cols` entries (column `s` is the
    /// image of `xˢ`, truncated to `rows` coefficients).
    pub fn matrix_rect(&self, rows: u32, cols: u32) -> Vec<Vec<Rat>> {
        let mut mat = vec![vec![Rat::zero(); cols as usize]; rows as usize];
        for s in 0..cols {
            let img = self.apply(&PolyX::monomial(Rat::one(), s));
            for (r, v) in img.terms() {
                if r < rows {
                    mat[r as usize][s as usize] = v.clone();
                }
            }
        }
        mat
    }

    /// A truncation size `N` such that `a = 0` iff `matrix_of(a, N) = 0`:
    /// `s_max + t_max + j_max + i_max + 1` over the support of `a`.
    pub fn interpolation_bound(&self) -> u32 {
        let (mut s_max, mut t_max, mut j_max, mut i_max) = (0, 0, 0, 0);
        for m in self.terms.keys() {
            match *m {
                I1Monomial::Diff { h, order } | I1Monomial::Int { order, h } => {
                    j_max = j_max.max(h);
                    i_max = i_max.max(order);
                }
                I1Monomial::H(h) => j_max = j_max.max(h),
                I1Monomial::Mat(s, t) => {
                    s_max = s_max.max(s);
                    t_max = t_max.max(t);
                }
            }
        }
        s_max + t_max + j_max + i_max + 1
    }

    /// The largest amount by which the action raises the degree of a
    /// polynomial (0 if it never does).
    pub fn max_raise(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.grade().max(0) as u32)
            .max()
            .unwrap_or(0)
    }

    /// Splits `a = u·∂ⁿ + c` along `𝕀₁ = 𝕀₁∂ⁿ ⊕ 𝕀₁e_{n-1}`, returning
    /// `(u, c) = (a∫ⁿ, a·(e₀₀ + ... + e_{n-1,n-1}))`.
    pub fn decompose(&self, n: u32) -> (Self, Self) {
        assert!(n >= 1, "decomposition index must be at least 1");
        let u = self * &Self::integ_pow(n);
        let c = self * &Self::idempotent(n);
        (u, c)
    }
}

/// `m · xˢ = w · x^deg`, or `None` when it vanishes.
pub(crate) fn act_on_power(m: &I1Monomial, s: u32) -> Option<(u32, Rat)> {
    match *m {
        I1Monomial::Diff { h, order } => {
            if order > s {
                return None;
            }
            let deg = s - order;
            Some((deg, falling(s, order) * rat_pow(&rat_int(deg as i64 + 1), h)))
        }
        I1Monomial::H(h) => Some((s, rat_pow(&rat_int(s as i64 + 1), h))),
        I1Monomial::Int { order, h } => {
            let w = rat_pow(&rat_int(s as i64 + 1), h) / falling(s + order, order);
            Some((s + order, w))
        }
        I1Monomial::Mat(i, j) => (j == s).then(|| (i, factorial(j) / factorial(i))),
    }
}

/// Canonical form of `left(H) · G · right(H)` where `G` is `∂^{-grade}`,
/// `1` or `∫^{grade}`, scaled by `c`, added into `acc`.
fn push_graded(acc: &mut I1Element, grade: i64, left: &PolyH, right: &PolyH, c: &Rat) {
    let order = grade.unsigned_abs() as u32;
    let poly = match grade.cmp(&0) {
        // p(H) ∂ᵐ = ∂ᵐ p(H - m), so ∂ᵐ r(H) = r(H + m) ∂ᵐ
        Ordering::Less => left * &right.shift(order as i64),
        Ordering::Equal => left * right,
        // p(H) ∫ᵐ = ∫ᵐ p(H + m)
        Ordering::Greater => &left.shift(order as i64) * right,
    };
    for (j, v) in poly.terms() {
        let m = match grade.cmp(&0) {
            Ordering::Less => I1Monomial::diff(j, order),
            Ordering::Equal => I1Monomial::H(j),
            Ordering::Greater => I1Monomial::int(order, j),
        };
        acc.add_term(m, v * c);
    }
}

fn h_pow(j: u32) -> PolyH {
    PolyH::monomial(Rat::one(), j)
}

/// `(k + 1)ʲ`: the eigenvalue of `Hʲ` on the line of `eₖ.` / `e.ₖ`.
fn h_eigen(k: u32, j: u32) -> Rat {
    rat_pow(&rat_int(k as i64 + 1), j)
}

/// Product of two basis monomials, in canonical form.
///
/// Matrix units: `eᵢⱼeₖₗ = δⱼₖeᵢₗ`, `∂eᵢⱼ = eᵢ₋₁,ⱼ`, `eᵢⱼ∂ = eᵢ,ⱼ₊₁`,
/// `∫eᵢⱼ = eᵢ₊₁,ⱼ`, `eᵢⱼ∫ = eᵢ,ⱼ₋₁`, with `e₋₁,ⱼ = eᵢ,₋₁ = 0`, and
/// `Heₛₜ = (s+1)eₛₜ`, `eₛₜH = (t+1)eₛₜ`.
///
/// Otherwise both factors are `p(H)·G·q(H)` with `G` a power of `∂` or `∫`;
/// the inner polynomial is moved right through the second `G` using
/// `r(H)·G_g = G_g·r(H+g)`, and `G_a G_b` is collapsed. Only `∫ⁱ∂ᵏ`
/// produces compact terms: with `μ = min(i, k)`,
/// `∫ⁱ∂ᵏ = G_{i-k} - Σ_{m<μ} e_{m+i-μ, m+k-μ}`.
pub fn mono_mul(a: &I1Monomial, b: &I1Monomial) -> I1Element {
    let mut out = I1Element::zero();
    mono_mul_into(&mut out, a, b, &Rat::one());
    out
}

fn mono_mul_into(acc: &mut I1Element, a: &I1Monomial, b: &I1Monomial, c: &Rat) {
    use I1Monomial::*;
    match (*a, *b) {
        (Mat(s, t), Mat(k, l)) => {
            if t == k {
                acc.add_term(Mat(s, l), c.clone());
            }
        }
        (Mat(s, t), Diff { h, order }) => acc.add_term(Mat(s, t + order), c * h_eigen(t, h)),
        (Mat(s, t), H(h)) => acc.add_term(Mat(s, t), c * h_eigen(t, h)),
        (Mat(s, t), Int { order, h }) => {
            if t >= order {
                acc.add_term(Mat(s, t - order), c * h_eigen(t - order, h));
            }
        }
        (Diff { h, order }, Mat(s, t)) => {
            if s >= order {
                acc.add_term(Mat(s - order, t), c * h_eigen(s - order, h));
            }
        }
        (H(h), Mat(s, t)) => acc.add_term(Mat(s, t), c * h_eigen(s, h)),
        (Int { order, h }, Mat(s, t)) => acc.add_term(Mat(s + order, t), c * h_eigen(s, h)),
        _ => {
            let (la, ga, ra) = a.graded_parts().unwrap();
            let (lb, gb, rb) = b.graded_parts().unwrap();
            let left = h_pow(la);
            let middle = h_pow(ra + lb).shift(gb);
            let right = &middle * &h_pow(rb);
            push_graded(acc, ga + gb, &left, &right, c);
            if ga > 0 && gb < 0 {
                let (i, k) = (ga as u32, (-gb) as u32);
                let mu = i.min(k);
                for m in 0..mu {
                    let (row, col) = (m + i - mu, m + k - mu);
                    // left(H) e_{row,col} right(H) = left(row+1) right(col+1) e_{row,col}
                    let w = left.eval(&rat_int(row as i64 + 1)) * right.eval(&rat_int(col as i64 + 1));
                    acc.add_term(Mat(row, col), -(c * w));
                }
            }
        }
    }
}

impl Add for &I1Element {
    type Output = I1Element;
    fn add(self, rhs: &I1Element) -> I1Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rat::one());
        out
    }
}

impl Sub for &I1Element {
    type Output = I1Element;
    fn sub(self, rhs: &I1Element) -> I1Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rat::one());
        out
    }
}

impl Neg for &I1Element {
    type Output = I1Element;
    fn neg(self) -> I1Element {
        self.scale(&-Rat::one())
    }
}

impl Mul for &I1Element {
    type Output = I1Element;
    fn mul(self, rhs: &I1Element) -> I1Element {
        let mut out = I1Element::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                mono_mul_into(&mut out, ma, mb, &(ca * cb));
            }
        }
        out
    }
}

impl Add for I1Element {
    type Output = I1Element;
    fn add(self, rhs: I1Element) -> I1Element {
        &self + &rhs
    }
}

impl Sub for I1Element {
    type Output = I1Element;
    fn sub(self, rhs: I1Element) -> I1Element {
        &self - &rhs
    }
}

impl Mul for I1Element {
    type Output = I1Element;
    fn mul(self, rhs: I1Element) -> I1Element {
        &self * &rhs
    }
}

impl fmt::Display for I1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::format_i1(self))
    }
}

impl fmt::Debug for I1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I1Element({self})")
    }
}

/// `(∂, ∫, H, x)`.
pub fn generators() -> (I1Element, I1Element, I1Element, I1Element) {
    (I1Element::partial(), I1Element::integ(), I1Element::h(), I1Element::x())
}

/// Column indices `i` with `eⱼᵢ·α(H) = 0`, i.e. `α(i + 1) = 0`; the kernel
/// of right multiplication by `α(H)` is the sum of the columns `E_{ℕ,i}`.
pub fn ker_right_mult_poly(alpha: &PolyH) -> Result<Vec<u64>> {
    alpha.nonneg_shifted_roots()
}

/// Polynomial in `x` with rational coefficients, in the monomial basis.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyX {
    coeffs: BTreeMap<u32, Rat>,
}

impl PolyX {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: Rat, deg: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(deg, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, Rat)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
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

    pub fn coeff(&self, deg: u32) -> Rat {
        self.coeffs.get(&deg).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Rat)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }
}

impl fmt::Display for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = PolyH::from_terms(self.terms().map(|(d, c)| (d, c.clone())));
        f.write_str(&p.format_with("x"))
    }
}

impl fmt::Debug for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyX({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use I1Monomial::*;

    fn one() -> I1Element {
        I1Element::one()
    }

    fn d() -> I1Element {
        I1Element::partial()
    }

    fn int() -> I1Element {
        I1Element::integ()
    }

    fn h() -> I1Element {
        I1Element::h()
    }

    fn e(s: u32, t: u32) -> I1Element {
        I1Element::e(s, t)
    }

    #[test]
    fn generator_values() {
        let (_, _, _, x) = generators();
        assert_eq!(x, I1Element::monomial(Int { order: 1, h: 1 }));
        assert_eq!(&d() * &int(), one());
        assert_eq!(&(&d() * &x) - &(&x * &d()), one());
    }

    #[test]
    fn mono_mul_examples() {
        assert_eq!(mono_mul(&Diff { h: 0, order: 1 }, &Int { order: 1, h: 0 }), one());
        assert_eq!(mono_mul(&Int { order: 1, h: 0 }, &Diff { h: 0, order: 1 }), &one() - &e(0, 0));
        assert_eq!(mono_mul(&Mat(0, 1), &Mat(1, 2)), e(0, 2));
        for i in 0..4 {
            assert!(mono_mul(&Mat(i, 0), &Int { order: 1, h: 0 }).is_zero());
        }
        assert_eq!(&d() * &h(), &(&h() * &d()) + &d());
    }

    #[test]
    fn boundary_units() {
        assert!((&d() * &e(0, 3)).is_zero());
        assert_eq!(&d() * &e(2, 3), e(1, 3));
        assert_eq!(&e(2, 3) * &d(), e(2, 4));
        assert_eq!(&int() * &e(2, 3), e(3, 3));
        assert_eq!(&e(2, 3) * &int(), e(2, 2));
        assert_eq!(&h() * &e(2, 3), e(2, 3).scale(&rat_int(3)));
        assert_eq!(&e(2, 3) * &h(), e(2, 3).scale(&rat_int(4)));
    }

    #[test]
    fn element_products() {
        let x = I1Element::x();
        let expected = I1Element::from_terms([
            (Int { order: 2, h: 2 }, Rat::one()),
            (Int { order: 2, h: 1 }, Rat::one()),
        ]);
        assert_eq!(&x * &x, expected);
        let a = &(&h() * &d()) + &e(1, 4);
        assert_eq!(&one() * &a, a);
        assert_eq!(&I1Element::integ_pow(2) * &I1Element::partial_pow(2), &(&one() - &e(0, 0)) - &e(1, 1));
    }

    #[test]
    fn involution_examples() {
        assert_eq!(e(1, 3).involution(), e(3, 1));
        assert_eq!((&h() * &d()).involution(), &int() * &h());
        let a = &(&h() * &d()) + &e(2, 0).scale(&rat(3, 2));
        assert_eq!(a.involution().involution(), a);
    }

    #[test]
    fn grading_examples() {
        let x = I1Element::x();
        assert_eq!(x.grade_component(1), x);
        assert!(x.grade_component(0).is_zero());
        assert_eq!(e(2, 1).grade_component(1), e(2, 1));
        let a = &one() - &e(0, 0);
        assert_eq!(a.grade_component(0), a);
    }

    #[test]
    fn projection_examples() {
        assert_eq!(int().project_b1(), B1Element::d_pow(-1));
        assert!(e(3, 1).project_b1().is_zero());
        let expected = &B1Element::d_pow(-1) * &B1Element::term(PolyH::var(), 0);
        assert_eq!(I1Element::x().project_b1(), expected);
    }

    #[test]
    fn action_examples() {
        let x3 = PolyX::monomial(Rat::one(), 3);
        assert_eq!(d().apply(&x3), PolyX::monomial(rat_int(3), 2));
        assert_eq!(int().apply(&x3), PolyX::monomial(rat(1, 4), 4));
        assert_eq!(e(1, 2).apply(&PolyX::monomial(Rat::one(), 2)), PolyX::monomial(rat_int(2), 1));
    }

    #[test]
    fn matrix_examples() {
        let m = e(0, 0).matrix_of(2);
        for (r, row) in m.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                assert_eq!(v.is_zero(), (r, c) != (0, 0));
            }
        }
        let id = one().matrix_of(4);
        for (r, row) in id.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                assert_eq!(*v, if r == c { Rat::one() } else { Rat::zero() });
            }
        }
        let dm = d().matrix_of(2);
        assert_eq!(dm[0][1], rat_int(1));
        assert_eq!(dm[1][2], rat_int(2));
        let nonzero = dm.iter().flatten().filter(|v| !v.is_zero()).count();
        assert_eq!(nonzero, 2);
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(d().decompose(1), (one(), I1Element::zero()));
        assert_eq!(e(0, 0).decompose(1), (I1Element::zero(), e(0, 0)));
        let (u, c) = one().decompose(2);
        assert_eq!(u, I1Element::integ_pow(2));
        assert_eq!(c, &e(0, 0) + &e(1, 1));
        assert_eq!(&(&u * &I1Element::partial_pow(2)) + &c, one());
    }

    #[test]
    fn kernel_examples() {
        let a = PolyH::from_ints(&[-1, 1]);
        assert_eq!(ker_right_mult_poly(&a).unwrap(), vec![0]);
        assert!(ker_right_mult_poly(&PolyH::one()).unwrap().is_empty());
        let b = &a * &PolyH::from_ints(&[-3, 1]);
        assert_eq!(ker_right_mult_poly(&b).unwrap(), vec![0, 2]);
        assert!((&e(5, 2) * &I1Element::from_poly_h(&b)).is_zero());
        assert!(ker_right_mult_poly(&PolyH::zero()).is_err());
    }

    #[test]
    fn compact_ideal_membership() {
        assert!((&e(0, 0) + &e(1, 2).scale(&rat_int(3))).is_in_f());
        assert!(!(&one() - &e(0, 0)).is_in_f());
        assert!((&e(0, 0) * &(&h() * &d())).is_in_f());
    }

    #[test]
    fn defining_relations() {
        assert_eq!(&d() * &int(), one());
        assert_eq!(&(&h() * &int()) - &(&int() * &h()), int());
        assert_eq!(&(&h() * &d()) - &(&d() * &h()), -&d());
        let p = &one() - &(&int() * &d());
        assert_eq!(&h() * &p, p);
        assert_eq!(&p * &h(), p);
    }
}
