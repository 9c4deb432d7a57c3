#![allow(dead_code)]

use intdiff::arith::{rat, PolyH, Rat, RatFunc};
use intdiff::i1::{I1Element, I1Monomial};
use intdiff::lattice::IdealAntichain;
use intdiff::skew::CalB1Element;
use intdiff::tensor::{FactorMonomial, InElement, Mode, PolyXn};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn rand_rat(r: &mut StdRng) -> Rat {
    let mut num = r.random_range(-5i64..=5);
    if num == 0 {
        num = 1;
    }
    rat(num, r.random_range(1i64..=3))
}

pub fn rand_monomial(r: &mut StdRng) -> I1Monomial {
    match r.random_range(0..4) {
        0 => I1Monomial::diff(r.random_range(0..=2), r.random_range(1..=3)),
        1 => I1Monomial::H(r.random_range(0..=2)),
        2 => I1Monomial::int(r.random_range(1..=3), r.random_range(0..=2)),
        _ => I1Monomial::Mat(r.random_range(0..=3), r.random_range(0..=3)),
    }
}

/// Random element of `𝕀₁` with at most `max_terms` terms.
pub fn rand_i1(r: &mut StdRng, max_terms: usize) -> I1Element {
    let k = r.random_range(1..=max_terms);
    I1Element::from_terms((0..k).map(|_| (rand_monomial(r), rand_rat(r))))
}

/// Random homogeneous monomial of grade `d`.
pub fn rand_graded_monomial(r: &mut StdRng, d: i64) -> I1Monomial {
    if r.random_bool(0.3) {
        let t = r.random_range(0u32..=3);
        let s = t as i64 + d;
        if s >= 0 {
            return I1Monomial::Mat(s as u32, t);
        }
    }
    let h = r.random_range(0..=2);
    match d {
        0 => I1Monomial::H(h),
        d if d < 0 => I1Monomial::diff(h, (-d) as u32),
        d => I1Monomial::int(d as u32, h),
    }
}

/// Random nonzero homogeneous element of grade `d`.
pub fn rand_homogeneous(r: &mut StdRng, d: i64, max_terms: usize) -> I1Element {
    loop {
        let k = r.random_range(1..=max_terms);
        let a = I1Element::from_terms((0..k).map(|_| (rand_graded_monomial(r, d), rand_rat(r))));
        if !a.is_zero() {
            return a;
        }
    }
}

pub fn rand_in(r: &mut StdRng, n: usize, max_terms: usize) -> InElement {
    let k = r.random_range(1..=max_terms);
    let terms = (0..k).map(|_| {
        let t: Vec<FactorMonomial> = (0..n).map(|_| FactorMonomial::I1(rand_monomial(r))).collect();
        (t, rand_rat(r))
    });
    InElement::from_terms(vec![Mode::I1; n], terms).unwrap()
}

/// Random element of the ideal `I_C`: each term has matrix units in the
/// zero slots of some `f ∈ C`.
pub fn rand_member(r: &mut StdRng, c: &IdealAntichain, max_terms: usize) -> InElement {
    let n = c.n();
    if c.is_zero() {
        return InElement::zero(n);
    }
    let k = r.random_range(1..=max_terms);
    let terms = (0..k).map(|_| {
        let f = c.elements()[r.random_range(0..c.elements().len())];
        let t: Vec<FactorMonomial> = (1..=n)
            .map(|i| {
                let m = if f.get(i) {
                    rand_monomial(r)
                } else {
                    I1Monomial::Mat(r.random_range(0..=3), r.random_range(0..=3))
                };
                FactorMonomial::I1(m)
            })
            .collect();
        (t, rand_rat(r))
    });
    InElement::from_terms(vec![Mode::I1; n], terms).unwrap()
}

pub fn rand_polyh(r: &mut StdRng, max_deg: u32) -> PolyH {
    let deg = r.random_range(0..=max_deg);
    let mut terms = Vec::new();
    for j in 0..=deg {
        if r.random_bool(0.7) {
            terms.push((j, rand_rat(r)));
        }
    }
    PolyH::from_terms(terms)
}

pub fn rand_nonzero_polyh(r: &mut StdRng, max_deg: u32) -> PolyH {
    loop {
        let p = rand_polyh(r, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn rand_ratfunc(r: &mut StdRng) -> RatFunc {
    let num = rand_nonzero_polyh(r, 2);
    let den = if r.random_bool(0.5) {
        PolyH::one()
    } else {
        rand_nonzero_polyh(r, 1)
    };
    RatFunc::new(num, den).unwrap()
}

/// Random nonzero element of `K(H)[∂, ∂⁻¹; τ]` of length at most `max_len`.
pub fn rand_calb1(r: &mut StdRng, max_len: i64) -> CalB1Element {
    let lo = r.random_range(-2i64..=2);
    let len = r.random_range(0..=max_len);
    let mut terms = vec![(lo, rand_ratfunc(r)), (lo + len, rand_ratfunc(r))];
    for d in lo + 1..lo + len {
        if r.random_bool(0.5) {
            terms.push((d, rand_ratfunc(r)));
        }
    }
    CalB1Element::from_terms(terms)
}

/// Sparse product of dense rational matrices.
pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Rat::zero(); cols]; a.len()];
    for (i, row) in a.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (j, w) in b[k].iter().enumerate() {
                if !w.is_zero() {
                    out[i][j] += v * w;
                }
            }
        }
    }
    out
}

/// Checks `M(a·b·c) = M(a)·M(b)·M(c)` on `span{1, ..., x^N}`, widening the
/// inner dimensions so no truncation error enters.
pub fn matrix_oracle_triple(a: &I1Element, b: &I1Element, c: &I1Element, n: u32) -> bool {
    let m1 = n + 1 + c.max_raise();
    let m2 = m1 + b.max_raise();
    let mc = c.matrix_rect(m1, n + 1);
    let mb = b.matrix_rect(m2, m1);
    let ma = a.matrix_rect(n + 1, m2);
    let prod = &(a * b) * c;
    prod.matrix_of(n) == mat_mul(&ma, &mat_mul(&mb, &mc))
}

/// Per-slot interpolation bounds for an element of `𝕀ₙ`.
pub fn in_bounds(a: &InElement) -> Vec<u32> {
    (0..a.n())
        .map(|slot| {
            let slot_part = I1Element::from_terms(a.terms().filter_map(|(t, _)| match t[slot] {
                FactorMonomial::I1(m) => Some((m, Rat::one())),
                FactorMonomial::B1 { .. } => None,
            }));
            slot_part.interpolation_bound()
        })
        .collect()
}

/// All monomials `x^α` of `Pₙ` with `αᵢ ≤ bounds[i]`.
pub fn monomial_box(bounds: &[u32]) -> Vec<PolyXn> {
    let mut out = vec![vec![]];
    for &bound in bounds {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                (0..=bound).map(move |s| {
                    let mut e2 = e.clone();
                    e2.push(s);
                    e2
                })
            })
            .collect();
    }
    let n = bounds.len();
    out.into_iter().map(|e| PolyXn::monomial(n, e, Rat::one())).collect()
}

pub mod strategies {
    use intdiff::arith::{rat, PolyH, Rat, RatFunc};
    use intdiff::i1::{I1Element, I1Monomial, PolyX};
    use intdiff::skew::{B1Element, CalB1Element};
    use intdiff::tensor::{FactorMonomial, InElement, Mode};
    use num_traits::Zero;
    use proptest::collection::vec;
    use proptest::prelude::*;

    pub fn rat_s() -> impl Strategy<Value = Rat> {
        (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
    }

    pub fn nonzero_rat_s() -> impl Strategy<Value = Rat> {
        rat_s().prop_filter("nonzero", |c| !c.is_zero())
    }

    pub fn polyh_s(max_deg: usize) -> impl Strategy<Value = PolyH> {
        vec(rat_s(), 0..=max_deg + 1)
            .prop_map(|cs| PolyH::from_terms(cs.into_iter().enumerate().map(|(j, c)| (j as u32, c))))
    }

    pub fn nonzero_polyh_s(max_deg: usize) -> impl Strategy<Value = PolyH> {
        polyh_s(max_deg).prop_filter("nonzero", |p| !p.is_zero())
    }

    pub fn ratfunc_s() -> impl Strategy<Value = RatFunc> {
        (polyh_s(2), nonzero_polyh_s(2)).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
    }

    pub fn nonzero_ratfunc_s() -> impl Strategy<Value = RatFunc> {
        ratfunc_s().prop_filter("nonzero", |f| !f.is_zero())
    }

    pub fn monomial_s() -> impl Strategy<Value = I1Monomial> {
        prop_oneof![
            (0u32..=2, 1u32..=3).prop_map(|(h, i)| I1Monomial::diff(h, i)),
            (0u32..=2).prop_map(I1Monomial::H),
            (1u32..=3, 0u32..=2).prop_map(|(i, h)| I1Monomial::int(i, h)),
            (0u32..=3, 0u32..=3).prop_map(|(s, t)| I1Monomial::Mat(s, t)),
        ]
    }

    pub fn i1_s(max_terms: usize) -> impl Strategy<Value = I1Element> {
        vec((monomial_s(), rat_s()), 0..=max_terms).prop_map(I1Element::from_terms)
    }

    pub fn polyx_s() -> impl Strategy<Value = PolyX> {
        vec(rat_s(), 0..=6)
            .prop_map(|cs| PolyX::from_terms(cs.into_iter().enumerate().map(|(s, c)| (s as u32, c))))
    }

    pub fn in_s(n: usize, max_terms: usize) -> impl Strategy<Value = InElement> {
        let tuple = vec(monomial_s().prop_map(FactorMonomial::I1), n);
        vec((tuple, rat_s()), 0..=max_terms)
            .prop_map(move |terms| InElement::from_terms(vec![Mode::I1; n], terms).unwrap())
    }

    pub fn b1_s() -> impl Strategy<Value = B1Element> {
        vec((-3i64..=3, polyh_s(2)), 0..=3).prop_map(B1Element::from_terms)
    }

    pub fn calb1_s(max_terms: usize) -> impl Strategy<Value = CalB1Element> {
        vec((-3i64..=3, ratfunc_s()), 0..=max_terms).prop_map(CalB1Element::from_terms)
    }

    pub fn nonzero_calb1_s(max_terms: usize) -> impl Strategy<Value = CalB1Element> {
        vec((-2i64..=2, nonzero_ratfunc_s()), 1..=max_terms)
            .prop_map(CalB1Element::from_terms)
            .prop_filter("nonzero", |b| !b.is_zero())
    }
}
