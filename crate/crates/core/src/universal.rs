//! The explicit universal diagonal form with `8·M_D` variables, its
//! constructive witnesses and an exhaustive representation search.

use std::collections::{BTreeMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::contfrac::CFExpansion;
use crate::error::{Error, Result};
use crate::indecomp::{enumerate_s0, m_star, shift_to_window, IndecompWindow, MStar};
use crate::interval::Interval;
use crate::quadfield::{FieldCtx, QuadInt};

/// `a_1 x_1² + … + a_m x_m²` with totally positive `a_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalForm {
    coeffs: Vec<QuadInt>,
}

impl DiagonalForm {
    pub fn new(coeffs: Vec<QuadInt>) -> Result<Self> {
        if let Some(first) = coeffs.first() {
            let d = first.ctx().d();
            for c in &coeffs {
                if c.ctx().d() != d {
                    return Err(Error::ContextMismatch(d, c.ctx().d()));
                }
                if !c.is_totally_positive() {
                    return Err(Error::NotTotallyPositive);
                }
            }
        }
        Ok(DiagonalForm { coeffs })
    }

    pub fn coeffs(&self) -> &[QuadInt] {
        &self.coeffs
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, xs: &[QuadInt]) -> Result<QuadInt> {
        if xs.len() != self.coeffs.len() {
            return Err(Error::BadParameter(format!("{} values for {} variables", xs.len(), self.arity())));
        }
        let ctx = self.coeffs.first().map(|c| c.ctx()).or_else(|| xs.first().map(|x| x.ctx()));
        let Some(ctx) = ctx else {
            return Err(Error::BadParameter("empty form".into()));
        };
        let mut acc = ctx.zero();
        for (a, x) in self.coeffs.iter().zip(xs) {
            acc = acc.checked_add(&a.checked_mul(&x.checked_mul(x)?)?)?;
        }
        Ok(acc)
    }
}

/// `Σ e_i ε^i` with `e_i ≥ 0`, `ε` the totally positive fundamental unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitPoly {
    terms: BTreeMap<i64, BigUint>,
}

impl UnitPoly {
    pub fn zero() -> Self {
        UnitPoly::default()
    }

    pub fn monomial(c: impl Into<BigUint>, i: i64) -> Self {
        let mut p = UnitPoly::zero();
        p.add_term(i, c.into());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut p = UnitPoly::zero();
        for (i, e) in terms {
            p.add_term(i, BigUint::from(e));
        }
        p
    }

    pub fn add_term(&mut self, i: i64, e: BigUint) {
        if e.is_zero() {
            return;
        }
        *self.terms.entry(i).or_default() += e;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigUint)> {
        self.terms.iter().map(|(&i, e)| (i, e))
    }

    pub fn eval(&self, cf: &CFExpansion) -> QuadInt {
        let ctx = cf.ctx();
        let mut acc = ctx.zero();
        for (&i, e) in &self.terms {
            acc = &acc + &eps_power(cf, i).scale(&BigInt::from(e.clone()));
        }
        acc
    }
}

/// `ε^k` for any integer `k`; `ε^{−1} = ε'` since `N(ε) = 1`.
pub fn eps_power(cf: &CFExpansion, k: i64) -> QuadInt {
    let e = k.unsigned_abs() as u32;
    if k >= 0 {
        cf.eps().pow(e)
    } else {
        cf.eps().conj().pow(e)
    }
}

/// Coefficients `b_1 … b_{ℓ−1}` with `ε^ℓ = −1 + Σ b_j ε^j`.
fn power_expansion(trace: &BigUint, ell: usize) -> Vec<BigUint> {
    let one = BigUint::one();
    let mut b = vec![trace.clone()];
    for _ in 2..ell {
        let mut next = Vec::with_capacity(b.len() + 1);
        next.push(trace - &one);
        next.push(&b[0] - &one);
        next.extend(b.iter().skip(1).cloned());
        b = next;
    }
    b
}

/// `(c, d, i)` with `c ε^i + d ε^{i+1} = e` and `c, d ≥ 0`, by repeatedly
/// removing an endpoint of the exponent span.
pub fn unit_reduce(cf: &CFExpansion, e: &UnitPoly) -> Result<(BigUint, BigUint, i64)> {
    if e.is_zero() {
        return Err(Error::ZeroInput);
    }
    let trace = cf.eps().trace().to_biguint().expect("trace of ε is positive");
    let mut t = e.terms.clone();
    loop {
        let (&i0, _) = t.first_key_value().unwrap();
        let (&i1, _) = t.last_key_value().unwrap();
        let ell = (i1 - i0) as usize;
        if ell <= 1 {
            let c = t.get(&i0).cloned().unwrap_or_default();
            let d = if ell == 1 { t.get(&i1).cloned().unwrap_or_default() } else { BigUint::zero() };
            return Ok((c, d, i0));
        }
        let b = power_expansion(&trace, ell);
        let e0 = t.remove(&i0).unwrap();
        let e1 = t.remove(&i1).unwrap();
        let (keep_at, keep, mult) = if e0 >= e1 { (i0, &e0 - &e1, e1) } else { (i1, &e1 - &e0, e0) };
        for (j, bj) in b.iter().enumerate() {
            let v = &mult * bj;
            if !v.is_zero() {
                *t.entry(i0 + 1 + j as i64).or_default() += v;
            }
        }
        if !keep.is_zero() {
            t.insert(keep_at, keep);
        }
    }
}

fn sum_of_two_squares_small(m: u64) -> Option<(u64, u64)> {
    let mut a = 0u64;
    while 2 * a * a <= m {
        let r = m - a * a;
        let b = r.sqrt();
        if b * b == r {
            return Some((a, b));
        }
        a += 1;
    }
    None
}

fn is_sum_of_three_squares(mut m: u64) -> bool {
    while m > 0 && m.is_multiple_of(4) {
        m /= 4;
    }
    m % 8 != 7
}

/// Lexicographically least `(t1, t2, t3, t4)` with `Σ t_j² = n`.
pub fn four_square(n: u64) -> [u64; 4] {
    let mut t1 = 0u64;
    loop {
        let r1 = n - t1 * t1;
        if is_sum_of_three_squares(r1) {
            let mut t2 = 0u64;
            while t2 * t2 <= r1 {
                if let Some((t3, t4)) = sum_of_two_squares_small(r1 - t2 * t2) {
                    return [t1, t2, t3, t4];
                }
                t2 += 1;
            }
        }
        t1 += 1;
    }
}

/// Largest value handled by the lexicographic search.
const LEX_LIMIT: u64 = 1_000_000;

/// `p = x² + y²` for a prime `p ≡ 1 (mod 4)`, via a square root of `−1`
/// and the Euclidean algorithm.
fn two_squares_prime(p: &BigUint) -> Option<(BigUint, BigUint)> {
    let one = BigUint::one();
    let exp = (p - &one) >> 2;
    let pm1 = p - &one;
    let mut c = BigUint::from(2u32);
    let root = loop {
        let r = c.modpow(&exp, p);
        if (&r * &r) % p == pm1 {
            break r;
        }
        c += 1u32;
        if c > BigUint::from(10_000u32) {
            return None;
        }
    };
    let limit = p.sqrt();
    let (mut a, mut b) = (p.clone(), root);
    while b > limit {
        let r = &a % &b;
        a = b;
        b = r;
    }
    let rest = p - &b * &b;
    let y = rest.sqrt();
    (&y * &y == rest).then_some((b, y))
}

/// Representation as four squares for any size; values up to `10⁶` give
/// the lexicographically least tuple, larger ones come from a
/// deterministic search for `n − a² − b²` prime `≡ 1 (mod 4)`.
pub fn four_square_big(n: &BigUint) -> [BigUint; 4] {
    if let Some(small) = n.to_u64().filter(|&v| v <= LEX_LIMIT) {
        return four_square(small).map(BigUint::from);
    }
    let four = BigUint::from(4u32);
    if (n % &four).is_zero() {
        return four_square_big(&(n / &four)).map(|t| t * 2u32);
    }
    let top = n.sqrt();
    let mut a = top.clone();
    loop {
        let r = n - &a * &a;
        let mut b = BigUint::zero();
        while &b * &b <= r && b < BigUint::from(64u32) {
            let m = &r - &b * &b;
            if let Some((c, d)) = squares_of_remainder(&m) {
                let out = [a.clone(), b.clone(), c, d];
                debug_assert_eq!(out.iter().map(|t| t * t).sum::<BigUint>(), *n);
                return out;
            }
            b += 1u32;
        }
        if a.is_zero() {
            unreachable!("four-square search exhausted for {n}");
        }
        a -= 1u32;
    }
}

fn squares_of_remainder(m: &BigUint) -> Option<(BigUint, BigUint)> {
    if m.is_zero() {
        return Some((BigUint::zero(), BigUint::zero()));
    }
    let r = m.sqrt();
    if &r * &r == *m {
        return Some((BigUint::zero(), r));
    }
    if let Some(v) = m.to_u64().filter(|&v| v <= LEX_LIMIT) {
        return sum_of_two_squares_small(v).map(|(x, y)| (BigUint::from(x), BigUint::from(y)));
    }
    if (m % 4u32) == BigUint::one() && crate::arith::is_probable_prime(m) {
        let (x, y) = two_squares_prime(m)?;
        if &x * &x + &y * &y == *m {
            return Some((x, y));
        }
    }
    None
}

/// `[x_1, …, x_8]` with `Σ_{j≤4} x_j² + ε Σ_{j>4} x_j² = e`.
pub fn represent_in_octad(cf: &CFExpansion, e: &UnitPoly) -> Result<[QuadInt; 8]> {
    let (c, d, i) = unit_reduce(cf, e)?;
    let mut tc = four_square_big(&c);
    let mut td = four_square_big(&d);
    // largest square first, so a lone square lands on x_1 or x_5
    tc.reverse();
    td.reverse();
    let scaled = |ts: &[BigUint; 4], k: i64| -> Vec<QuadInt> {
        let u = eps_power(cf, k);
        ts.iter().map(|t| u.scale(&BigInt::from(t.clone()))).collect()
    };
    let (front, back) = if i.rem_euclid(2) == 0 {
        (scaled(&tc, i / 2), scaled(&td, i / 2))
    } else {
        (scaled(&td, (i + 1) / 2), scaled(&tc, (i - 1) / 2))
    };
    let mut out = front;
    out.extend(back);
    let out: [QuadInt; 8] = out.try_into().expect("eight entries");
    let squares = |xs: &[QuadInt]| xs.iter().fold(cf.ctx().zero(), |acc, x| &acc + &(x * x));
    let value = &squares(&out[..4]) + &(cf.eps() * &squares(&out[4..]));
    if value != e.eval(cf) {
        return Err(Error::verification("octad representation", format!("D={} e={e:?}", cf.ctx().d())));
    }
    Ok(out)
}

/// For each `σ ∈ S_0`, four copies of `σ` then four of `σε`.
pub fn construct_universal_form(cf: &CFExpansion) -> Result<DiagonalForm> {
    let window = enumerate_s0(cf)?;
    let mut coeffs = Vec::with_capacity(8 * window.len());
    for sigma in window.values() {
        let se = sigma * cf.eps();
        coeffs.extend(std::iter::repeat_n(sigma.clone(), 4));
        coeffs.extend(std::iter::repeat_n(se, 4));
    }
    DiagonalForm::new(coeffs)
}

/// Candidates `σ ε^k ⪯ x` for `σ` in the window.
fn window_candidates(cf: &CFExpansion, window: &IndecompWindow, x: &QuadInt) -> Vec<QuadInt> {
    let (x1, x2) = x.ln_abs_embeddings();
    let le = cf.eps().ln_abs_embeddings().0;
    let mut out = Vec::new();
    for sigma in window.values() {
        let (s1, s2) = sigma.ln_abs_embeddings();
        // σ ε^k ≤ x and σ' ε^{−k} ≤ x'
        let hi = ((x1 - s1) / le).floor() as i64 + 1;
        let lo = ((s2 - x2) / le).ceil() as i64 - 1;
        for k in lo..=hi {
            let c = sigma * &eps_power(cf, k);
            if (x - &c).is_totally_nonnegative() {
                out.push(c);
            }
        }
    }
    out
}

/// Greedy decomposition into indecomposables: always subtract the
/// admissible `σ ε^k` of largest trace.
pub fn decompose_indecomposables(cf: &CFExpansion, x: &QuadInt) -> Result<Vec<QuadInt>> {
    if !x.is_totally_positive() {
        return Err(Error::NotTotallyPositive);
    }
    let window = enumerate_s0(cf)?;
    decompose_with(cf, &window, x)
}

fn decompose_with(cf: &CFExpansion, window: &IndecompWindow, x: &QuadInt) -> Result<Vec<QuadInt>> {
    let mut rest = x.clone();
    let mut parts = Vec::new();
    while !rest.is_zero() {
        let best = window_candidates(cf, window, &rest)
            .into_iter()
            .max_by(|a, b| (a.trace(), a.a()).cmp(&(b.trace(), b.a())))
            .ok_or_else(|| Error::verification("decomposition", format!("no indecomposable below {rest}")))?;
        rest = &rest - &best;
        parts.push(best);
    }
    Ok(parts)
}

/// Groups a decomposition by window element: `x = Σ_σ e_σ(ε)·σ`.
pub fn collect_by_s0(cf: &CFExpansion, parts: &[QuadInt]) -> Result<Vec<(QuadInt, UnitPoly)>> {
    let window = enumerate_s0(cf)?;
    collect_with(cf, &window, parts)
}

fn collect_with(cf: &CFExpansion, window: &IndecompWindow, parts: &[QuadInt]) -> Result<Vec<(QuadInt, UnitPoly)>> {
    let mut polys: Vec<(QuadInt, UnitPoly)> = window.values().map(|s| (s.clone(), UnitPoly::zero())).collect();
    for p in parts {
        let (y, k) = shift_to_window(cf, p)?;
        let slot = polys
            .iter_mut()
            .find(|(s, _)| *s == y)
            .ok_or_else(|| Error::verification("window shift", format!("{p} is not indecomposable")))?;
        slot.1.add_term(-k, BigUint::one());
    }
    polys.retain(|(_, e)| !e.is_zero());
    Ok(polys)
}

/// Values for the variables of [`construct_universal_form`] representing
/// `x`, built by decomposition, grouping and octads.
pub fn witness_via_construction(cf: &CFExpansion, x: &QuadInt) -> Result<Vec<QuadInt>> {
    if !x.is_totally_positive() {
        return Err(Error::NotTotallyPositive);
    }
    let window = enumerate_s0(cf)?;
    let parts = decompose_with(cf, &window, x)?;
    let grouped = collect_with(cf, &window, &parts)?;
    let ctx = cf.ctx();
    let mut xs = vec![ctx.zero(); 8 * window.len()];
    for (k, sigma) in window.values().enumerate() {
        if let Some((_, e)) = grouped.iter().find(|(s, _)| s == sigma) {
            let oct = represent_in_octad(cf, e)?;
            xs[8 * k..8 * k + 8].clone_from_slice(&oct);
        }
    }
    let form = construct_universal_form(cf)?;
    if form.eval(&xs)? != *x {
        return Err(Error::verification("constructed witness", format!("D={} x={x}", ctx.d())));
    }
    Ok(xs)
}

/// Exhaustive search for `x = Σ a_j x_j²`; `None` proves that no
/// representation exists.
pub fn represent(ctx: FieldCtx, form: &DiagonalForm, x: &QuadInt) -> Result<Option<Vec<QuadInt>>> {
    if x.ctx() != ctx {
        return Err(Error::ContextMismatch(ctx.d(), x.ctx().d()));
    }
    if !x.is_zero() && !x.is_totally_positive() {
        return Err(Error::NotTotallyPositiveTarget);
    }
    let mut search = Search { ctx, coeffs: form.coeffs(), dead: HashSet::new() };
    let mut xs = Vec::with_capacity(form.arity());
    if search.go(0, x, &mut xs) {
        xs.resize(form.arity(), ctx.zero());
        debug_assert_eq!(form.eval(&xs).ok().as_ref(), Some(x));
        Ok(Some(xs))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    ctx: FieldCtx,
    coeffs: &'a [QuadInt],
    dead: HashSet<(usize, QuadInt)>,
}

impl Search<'_> {
    /// Nonzero `y` (up to sign) with `a y² ⪯ r`, largest contribution first.
    fn candidates(&self, a: &QuadInt, r: &QuadInt) -> Vec<(QuadInt, QuadInt)> {
        let (r1, r2) = r.embed_intervals();
        let (a1, a2) = a.embed_intervals();
        let b1 = (r1.hi / a1.lo).sqrt() * (1.0 + 1e-12) + 1e-9;
        let b2 = (r2.hi / a2.lo).sqrt() * (1.0 + 1e-12) + 1e-9;
        let mut out = Vec::new();
        self.ctx.for_each_box_candidate(Interval::new(0.0, b1), Interval::new(-b2, b2), |p, q| {
            let y = self.ctx.elem(p, q);
            if y.is_zero() || y.sign_embedding(crate::quadfield::Embedding::First) <= 0 {
                return;
            }
            let v = a * &(&y * &y);
            if (r - &v).is_totally_nonnegative() {
                out.push((y, v));
            }
        });
        out.sort_by(|l, r| (r.1.trace(), r.0.a(), r.0.b()).cmp(&(l.1.trace(), l.0.a(), l.0.b())));
        out
    }

    fn go(&mut self, j: usize, r: &QuadInt, xs: &mut Vec<QuadInt>) -> bool {
        if r.is_zero() {
            return true;
        }
        if j == self.coeffs.len() || self.dead.contains(&(j, r.clone())) {
            return false;
        }
        let a = self.coeffs[j].clone();
        for (y, v) in self.candidates(&a, r) {
            xs.push(y);
            if self.go(j + 1, &(r - &v), xs) {
                return true;
            }
            xs.pop();
        }
        xs.push(self.ctx.zero());
        if self.go(j + 1, r, xs) {
            return true;
        }
        xs.pop();
        self.dead.insert((j, r.clone()));
        false
    }
}

/// Lower bounds for the arity of a diagonal universal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdiagBounds {
    /// `M_D / (κ s)`.
    pub ratio_bound: Ratio<i64>,
    pub m_star: MStar,
}

pub fn mdiag_lower_bounds(cf: &CFExpansion, eps: Ratio<i64>) -> Result<MdiagBounds> {
    let window = enumerate_s0(cf)?;
    let denom = window.kappa as i64 * cf.s() as i64;
    Ok(MdiagBounds { ratio_bound: Ratio::new(window.m_d, denom), m_star: m_star(cf, eps)? })
}

/// Every totally positive element of trace at most `bound`.
pub fn totally_positive_up_to_trace(ctx: FieldCtx, bound: i64) -> Vec<QuadInt> {
    let b = bound as f64;
    let mut out = Vec::new();
    ctx.for_each_box_candidate(Interval::new(0.0, b), Interval::new(0.0, b), |p, q| {
        let x = ctx.elem(p, q);
        if x.is_totally_positive() && x.trace() <= BigInt::from(bound) {
            out.push(x);
        }
    });
    out.sort_by(|l, r| (l.trace(), l.a(), l.b()).cmp(&(r.trace(), r.a(), r.b())));
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(d: i64) -> (FieldCtx, CFExpansion) {
        let ctx = FieldCtx::new(d).unwrap();
        (ctx, CFExpansion::expand(ctx))
    }

    #[test]
    fn reduce_examples() {
        let (_, cf) = field(5);
        let e = UnitPoly::from_terms([(0, 1), (2, 1)]);
        assert_eq!(unit_reduce(&cf, &e).unwrap(), (BigUint::from(3u32), BigUint::zero(), 1));
        let e = UnitPoly::from_terms([(-1, 1), (1, 1)]);
        assert_eq!(unit_reduce(&cf, &e).unwrap(), (BigUint::from(3u32), BigUint::zero(), 0));
        let e = UnitPoly::from_terms([(3, 7)]);
        assert_eq!(unit_reduce(&cf, &e).unwrap(), (BigUint::from(7u32), BigUint::zero(), 3));
        assert_eq!(unit_reduce(&cf, &UnitPoly::zero()), Err(Error::ZeroInput));
    }

    #[test]
    fn power_expansion_identity() {
        for d in [2, 5, 6, 19] {
            let (ctx, cf) = field(d);
            let tr = cf.eps().trace().to_biguint().unwrap();
            for ell in 2..10 {
                let b = power_expansion(&tr, ell);
                assert!(!b[0].is_zero());
                let mut v = -ctx.one();
                for (j, bj) in b.iter().enumerate() {
                    v = &v + &eps_power(&cf, j as i64 + 1).scale(&BigInt::from(bj.clone()));
                }
                assert_eq!(v, eps_power(&cf, ell as i64));
            }
        }
    }

    fn four_square_oracle(n: u64) -> [u64; 4] {
        let r = n.sqrt() + 1;
        for a in 0..=r {
            for b in 0..=r {
                for c in 0..=r {
                    for d in 0..=r {
                        if a * a + b * b + c * c + d * d == n {
                            return [a, b, c, d];
                        }
                    }
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn four_squares() {
        assert_eq!(four_square(0), [0, 0, 0, 0]);
        assert_eq!(four_square(7), [1, 1, 1, 2]);
        assert_eq!(four_square(3), [0, 1, 1, 1]);
        for n in 0..400 {
            assert_eq!(four_square(n), four_square_oracle(n), "n={n}");
        }
        for n in [10u64.pow(7) + 7, 123_456_789_012_345, u64::MAX] {
            let t = four_square_big(&BigUint::from(n));
            assert_eq!(t.iter().map(|x| x * x).sum::<BigUint>(), BigUint::from(n));
        }
        let huge = BigUint::from(3u32).pow(301) * 7u32 + 5u32;
        let t = four_square_big(&huge);
        assert_eq!(t.iter().map(|x| x * x).sum::<BigUint>(), huge);
    }

    #[test]
    fn octad_examples() {
        let (ctx, cf) = field(5);
        let o = represent_in_octad(&cf, &UnitPoly::from_terms([(0, 1)])).unwrap();
        assert_eq!(o[0], ctx.one());
        assert!(o[1..].iter().all(|x| x.is_zero()));
        let o = represent_in_octad(&cf, &UnitPoly::from_terms([(0, 1), (2, 1)])).unwrap();
        assert!(o[..4].iter().all(|x| x.is_zero()));
        let (_, cf2) = field(2);
        let o = represent_in_octad(&cf2, &UnitPoly::from_terms([(2, 1)])).unwrap();
        assert_eq!(&o[0], cf2.eps());
    }

    #[test]
    fn forms() {
        let (ctx, cf) = field(15);
        let f = construct_universal_form(&cf).unwrap();
        assert_eq!(f.arity(), 8);
        assert_eq!(f.coeffs()[0], ctx.one());
        assert_eq!(f.coeffs()[4], ctx.elem(4, 1));
        let (_, cf) = field(2);
        assert_eq!(construct_universal_form(&cf).unwrap().arity(), 16);
        let (ctx, cf) = field(5);
        let f = construct_universal_form(&cf).unwrap();
        assert_eq!(f.arity(), 8);
        assert_eq!(f.coeffs()[7], ctx.elem(1, 1));
    }

    #[test]
    fn decompositions() {
        let (ctx, cf) = field(2);
        let three = ctx.int(3);
        assert_eq!(decompose_indecomposables(&cf, &three).unwrap(), vec![ctx.one(); 3]);
        assert_eq!(decompose_indecomposables(&cf, &ctx.one()).unwrap(), vec![ctx.one()]);
        let x = ctx.elem(4, 2);
        let parts = decompose_indecomposables(&cf, &x).unwrap();
        assert_eq!(parts, vec![ctx.elem(3, 2), ctx.one()]);
        assert!(matches!(decompose_indecomposables(&cf, &ctx.elem(1, -1)), Err(Error::NotTotallyPositive)));

        let x = &(cf.eps() * &ctx.one()) + &ctx.elem(2, 1);
        let parts = decompose_indecomposables(&cf, &x).unwrap();
        let grouped = collect_by_s0(&cf, &parts).unwrap();
        let total = grouped.iter().fold(ctx.zero(), |acc, (s, e)| &acc + &(s * &e.eval(&cf)));
        assert_eq!(total, x);

        let (ctx, cf) = field(15);
        let g = collect_by_s0(&cf, &decompose_indecomposables(&cf, &ctx.int(5)).unwrap()).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].0, ctx.one());
        assert_eq!(g[0].1.eval(&cf), ctx.int(5));
    }

    #[test]
    fn witnesses() {
        let (ctx, cf) = field(2);
        let x = ctx.elem(5, 2);
        let w = witness_via_construction(&cf, &x).unwrap();
        assert_eq!(construct_universal_form(&cf).unwrap().eval(&w).unwrap(), x);
        let w = witness_via_construction(&cf, &ctx.one()).unwrap();
        assert_eq!(w.iter().filter(|v| !v.is_zero()).count(), 1);
        let (ctx, cf) = field(15);
        let x = ctx.elem(10, 2);
        let w = witness_via_construction(&cf, &x).unwrap();
        assert_eq!(construct_universal_form(&cf).unwrap().eval(&w).unwrap(), x);
    }

    #[test]
    fn search_examples() {
        let (ctx, _) = field(5);
        let three = DiagonalForm::new(vec![ctx.one(); 3]).unwrap();
        for x in totally_positive_up_to_trace(ctx, 30) {
            let w = represent(ctx, &three, &x).unwrap().expect("sum of three squares is universal");
            assert_eq!(three.eval(&w).unwrap(), x);
        }
        assert_eq!(represent(ctx, &three, &ctx.zero()).unwrap(), Some(vec![ctx.zero(); 3]));
        let (ctx, _) = field(2);
        let one = DiagonalForm::new(vec![ctx.one()]).unwrap();
        assert_eq!(represent(ctx, &one, &ctx.elem(2, 1)).unwrap(), None);
        assert!(matches!(represent(ctx, &one, &ctx.elem(1, 1)), Err(Error::NotTotallyPositiveTarget)));
    }

    #[test]
    fn lower_bounds() {
        let eps = Ratio::new(1, 100);
        let (_, cf) = field(15);
        assert_eq!(mdiag_lower_bounds(&cf, eps).unwrap().ratio_bound, Ratio::new(1, 2));
        let (_, cf) = field(2);
        assert_eq!(mdiag_lower_bounds(&cf, eps).unwrap().ratio_bound, Ratio::new(1, 1));
        let (_, cf) = field(5);
        assert_eq!(mdiag_lower_bounds(&cf, eps).unwrap().ratio_bound, Ratio::new(1, 2));
    }
}
