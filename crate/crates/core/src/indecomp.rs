//! Semi-convergents, the indecomposable window and the norm invariants
//! attached to convergents.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::contfrac::CFExpansion;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::quadfield::{Embedding, FieldCtx, FieldElem, QuadInt};

fn check_index(cf: &CFExpansion, i: i64, lo: i64) -> Result<()> {
    if i < lo || i > cf.max_index() {
        return Err(Error::IndexOutOfRange {
            index: i,
            range: format!("{lo}..={}", cf.max_index()),
        });
    }
    Ok(())
}

/// `|N(α_i)|` for `0 ≤ i ≤ 2s`.
pub fn n_i(cf: &CFExpansion, i: i64) -> Result<BigInt> {
    check_index(cf, i, 0)?;
    Ok(cf.alpha(i).norm().abs())
}

/// `|N(α_i)|` including `i = −1`.
fn n_i_ext(cf: &CFExpansion, i: i64) -> BigInt {
    cf.alpha(i).norm().abs()
}

/// The integer `T_i` with `α_{i−1}·α_i' = T_i + (−1)^{i+1} ω`, `0 ≤ i ≤ 2s`.
pub fn t_i(cf: &CFExpansion, i: i64) -> Result<BigInt> {
    check_index(cf, i, 0)?;
    let prod = cf.alpha(i - 1) * cf.alpha(i).conj();
    let want = if i.rem_euclid(2) == 1 { 1 } else { -1 };
    if *prod.b() != BigInt::from(want) {
        return Err(Error::verification(
            "T_i coordinate",
            format!("D={} i={i}: ω-coordinate {} != {want}", cf.ctx().d(), prod.b()),
        ));
    }
    Ok(prod.a().clone())
}

/// `α_i + r·α_{i+1}` for odd `i ≥ −1` and `0 ≤ r ≤ u_{i+2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemiConvergent {
    pub i: i64,
    pub r: i64,
    pub value: QuadInt,
}

fn check_semiconvergent(cf: &CFExpansion, i: i64, r: i64) -> Result<i64> {
    if i.rem_euclid(2) != 1 {
        return Err(Error::BadIndexParity(i));
    }
    check_index(cf, i, -1)?;
    check_index(cf, i + 1, -1)?;
    let u = cf.u((i + 2) as usize);
    if r < 0 || r > u {
        return Err(Error::ROutOfRange { r, max: u });
    }
    Ok(u)
}

pub fn semiconvergent(cf: &CFExpansion, i: i64, r: i64) -> Result<SemiConvergent> {
    check_semiconvergent(cf, i, r)?;
    let value = cf.alpha(i) + cf.alpha(i + 1).scale_i64(r);
    Ok(SemiConvergent { i, r, value })
}

/// Closed form of `N(α_{i,r})` in terms of `T_{i+1}` and `N_{i+1}`.
pub fn norm_semiconvergent_formula(cf: &CFExpansion, i: i64, r: i64) -> Result<BigInt> {
    check_semiconvergent(cf, i, r)?;
    let t = t_i(cf, i + 1)?;
    let n = n_i(cf, i + 1)?;
    let d = BigInt::from(cf.ctx().d());
    let y = &t - &n * r;
    let num = if cf.ctx().is_one_mod_four() {
        (&d - 1) / 4 + &y - &y * &y
    } else {
        &d - &y * &y
    };
    if !(&num % &n).is_zero() {
        return Err(Error::verification("norm formula divisibility", format!("D={} i={i} r={r}", d)));
    }
    Ok(num / n)
}

/// The indecomposables `σ` with `ε > σ ≥ σ' > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "WindowRepr")]
pub struct IndecompWindow {
    pub elements: Vec<SemiConvergent>,
    pub m_d: i64,
    pub kappa: u8,
    #[serde(skip)]
    lookup: HashSet<QuadInt>,
}

#[derive(Deserialize)]
struct WindowRepr {
    elements: Vec<SemiConvergent>,
    m_d: i64,
    kappa: u8,
}

impl From<WindowRepr> for IndecompWindow {
    fn from(r: WindowRepr) -> Self {
        let lookup = r.elements.iter().map(|e| e.value.clone()).collect();
        IndecompWindow { elements: r.elements, m_d: r.m_d, kappa: r.kappa, lookup }
    }
}

impl IndecompWindow {
    pub fn contains(&self, x: &QuadInt) -> bool {
        self.lookup.contains(x)
    }

    pub fn values(&self) -> impl Iterator<Item = &QuadInt> {
        self.elements.iter().map(|e| &e.value)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Indecomposability of a totally positive `x` by shifting it into the
    /// window and looking it up.
    pub fn is_indecomposable(&self, cf: &CFExpansion, x: &QuadInt) -> Result<bool> {
        let (y, _) = shift_to_window(cf, x)?;
        Ok(self.contains(&y))
    }
}

/// Last odd index `i` contributing semi-convergents to the window.
fn last_window_index(cf: &CFExpansion) -> i64 {
    let s = cf.s() as i64;
    if s % 2 == 0 {
        s - 3
    } else {
        2 * s - 3
    }
}

pub fn enumerate_s0(cf: &CFExpansion) -> Result<IndecompWindow> {
    let eps = cf.eps();
    let mut elements = Vec::new();
    let mut i = -1;
    while i <= last_window_index(cf) {
        let u = cf.u((i + 2) as usize);
        for r in 0..u {
            let sc = semiconvergent(cf, i, r)?;
            let v = &sc.value;
            let ok = (eps - v).sign_embedding(Embedding::First) > 0
                && !v.b().is_negative()
                && v.sign_embedding(Embedding::Second) > 0;
            if !ok {
                return Err(Error::verification(
                    "indecomposable window",
                    format!("D={} sigma={v} (i={i}, r={r})", cf.ctx().d()),
                ));
            }
            elements.push(sc);
        }
        i += 2;
    }
    let m_d = m_d(cf);
    if elements.len() as i64 != m_d {
        return Err(Error::verification(
            "window size",
            format!("D={}: {} elements, M_D = {m_d}", cf.ctx().d(), elements.len()),
        ));
    }
    let lookup = elements.iter().map(|e| e.value.clone()).collect();
    Ok(IndecompWindow {
        elements,
        m_d,
        kappa: if cf.s() % 2 == 1 { 2 } else { 1 },
        lookup,
    })
}

/// The summands defining `M_D`, as `(value, is_doubled_u0)`.
fn m_d_terms(cf: &CFExpansion) -> Vec<(i64, bool)> {
    let s = cf.s();
    if s.is_multiple_of(2) {
        (1..s).step_by(2).map(|i| (cf.u(i), false)).collect()
    } else {
        let mut v = vec![(2 * cf.u0(), true)];
        v.extend((1..s).map(|i| (cf.u(i), false)));
        v
    }
}

/// `M_D`; for odd `s` the value is cross-checked against `u_1 + … + u_s`.
pub fn m_d(cf: &CFExpansion) -> i64 {
    let mut total: i64 = m_d_terms(cf).iter().map(|t| t.0).sum();
    if cf.s() % 2 == 1 {
        if cf.ctx().is_one_mod_four() {
            total -= 1;
        }
        assert_eq!(total, cf.sum_u(), "M_D disagrees with the full period sum for D = {}", cf.ctx().d());
    }
    total
}

/// `M*` under the two readings of the threshold for odd `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MStar {
    /// `2u_0` thresholded as one summand (with the `−1` kept alongside it).
    pub a: i64,
    /// Summands `u_1 … u_s`.
    pub b: i64,
    /// The exponent parameter is at least `1/8`.
    pub flagged: bool,
}

/// `u ≥ D^(1/8 + p/q)`, decided as `u^(8q) ≥ D^(q + 8p)`.
pub fn exceeds_threshold(u: i64, d: i64, eps: Ratio<i64>) -> bool {
    if u <= 0 {
        return false;
    }
    let (p, q) = (*eps.numer(), *eps.denom());
    let lhs = BigInt::from(u).pow((8 * q) as u32);
    let rhs = BigInt::from(d).pow((q + 8 * p) as u32);
    lhs >= rhs
}

pub fn m_star(cf: &CFExpansion, eps: Ratio<i64>) -> Result<MStar> {
    if *eps.numer() <= 0 {
        return Err(Error::BadParameter(format!("exponent parameter {eps} must be positive")));
    }
    if *eps.denom() > 1000 || *eps.numer() > 1000 {
        return Err(Error::BadParameter(format!("exponent parameter {eps} too fine")));
    }
    let d = cf.ctx().d();
    let mut a = 0;
    for (v, doubled) in m_d_terms(cf) {
        if exceeds_threshold(v, d, eps) {
            a += v;
            if doubled && cf.ctx().is_one_mod_four() {
                a -= 1;
            }
        }
    }
    let b = if cf.s().is_multiple_of(2) {
        a
    } else {
        cf.period().iter().filter(|&&u| exceeds_threshold(u, d, eps)).sum()
    };
    Ok(MStar {
        a,
        b,
        flagged: eps >= Ratio::new(1, 8),
    })
}

/// Multiplies a totally positive `x` by `ε^k` so that `1 ≤ x/x' < ε²`.
pub fn shift_to_window(cf: &CFExpansion, x: &QuadInt) -> Result<(QuadInt, i64)> {
    if !x.is_totally_positive() {
        return Err(Error::NotTotallyPositive);
    }
    let eps = cf.eps();
    let eps_inv = eps.conj();
    let (l1, l2) = x.ln_abs_embeddings();
    let (le, _) = eps.ln_abs_embeddings();
    // ratio(x ε^k) = ratio(x) ε^{2k}
    let mut k = -((l1 - l2) / (2.0 * le)).floor() as i64;
    let mut y = if k >= 0 {
        x * eps.pow(k as u32)
    } else {
        x * eps_inv.pow((-k) as u32)
    };
    loop {
        if y.b().is_negative() {
            y = &y * eps;
            k += 1;
        } else if !(&y * &eps_inv).b().is_negative() {
            y = &y * &eps_inv;
            k -= 1;
        } else {
            return Ok((y, k));
        }
    }
}

/// Indecomposability through the window lookup.
pub fn is_indecomposable_fast(cf: &CFExpansion, x: &QuadInt) -> Result<bool> {
    enumerate_s0(cf)?.is_indecomposable(cf, x)
}

/// Indecomposability by searching the box `0 ≺ β ≺ x`.
pub fn is_indecomposable_bruteforce(ctx: FieldCtx, x: &QuadInt) -> Result<bool> {
    if !x.is_totally_positive() {
        return Err(Error::NotTotallyPositive);
    }
    let (e1, e2) = x.embed_intervals();
    let b1 = Interval::new(0.0, e1.hi);
    let b2 = Interval::new(0.0, e2.hi);
    let mut found = false;
    ctx.for_each_box_candidate(b1, b2, |a, b| {
        if found {
            return;
        }
        let beta = ctx.elem(a, b);
        if beta.is_totally_positive() && (x - &beta).is_totally_positive() {
            found = true;
        }
    });
    Ok(!found)
}

/// Checks `T_i = (−1)^i (ω − N_{i−1}/c_{i+1})` and
/// `N_i = √Δ/c_{i+1} − N_{i−1}/c_{i+1}²` exactly.
pub fn verify_lemma_prop5(cf: &CFExpansion, i: i64) -> Result<bool> {
    check_index(cf, i, 0)?;
    let ctx = cf.ctx();
    let c = cf.c_value(i + 1)?;
    let n_prev = FieldElem::int(ctx, n_i_ext(cf, i - 1));
    let n = FieldElem::int(ctx, n_i(cf, i)?);
    let t = FieldElem::int(ctx, t_i(cf, i)?);
    let omega = ctx.omega().to_field_elem();
    let mut t_rhs = &omega - &(&n_prev / &c);
    if i.rem_euclid(2) == 1 {
        t_rhs = -&t_rhs;
    }
    if t != t_rhs {
        return Err(Error::verification("T_i tail identity", format!("D={} i={i}: {t} != {t_rhs}", ctx.d())));
    }
    let n_rhs = &(&FieldElem::sqrt_delta(ctx) / &c) - &(&n_prev / &(&c * &c));
    if n != n_rhs {
        return Err(Error::verification("N_i tail identity", format!("D={} i={i}: {n} != {n_rhs}", ctx.d())));
    }
    Ok(true)
}

/// Checks `√Δ/c_{i+1}·(1 − 1/(c_i c_{i+1})) < N_i < √Δ/c_{i+1}`, then
/// `N_i u_{i+1} < √Δ` and, when `u_{i+1} ≥ 3`, `N_i (u_{i+1} + 10) > √Δ`.
pub fn verify_bounds_prop6(cf: &CFExpansion, i: i64) -> Result<bool> {
    check_index(cf, i, 0)?;
    let ctx = cf.ctx();
    let ci = cf.c_value(i)?;
    let cn = cf.c_value(i + 1)?;
    let n_big = n_i(cf, i)?;
    let n = FieldElem::int(ctx, n_big.clone());
    let upper = &FieldElem::sqrt_delta(ctx) / &cn;
    let one = FieldElem::int(ctx, 1);
    let lower = &upper * &(&one - &(&ci * &cn).recip());
    let fail = |what: &'static str| Err(Error::verification(what, format!("D={} i={i} N_i={n_big}", ctx.d())));
    if n >= upper {
        return fail("N_i upper tail bound");
    }
    if n <= lower {
        return fail("N_i lower tail bound");
    }
    let delta = BigInt::from(ctx.delta());
    let u = BigInt::from(cf.u((i + 1) as usize));
    let n2 = &n_big * &n_big;
    if &n2 * &u * &u >= delta {
        return fail("N_i partial quotient upper bound");
    }
    if u >= BigInt::from(3) {
        let w = &u + 10;
        if &n2 * &w * &w <= delta {
            return fail("N_i partial quotient lower bound");
        }
    }
    Ok(true)
}

/// One small-norm element, its primitive part and the convergent it matches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallNormEntry {
    pub norm: i64,
    pub multiplier: i64,
    pub generator: QuadInt,
    /// `(i, conjugated)`; `None` marks a counterexample.
    pub convergent: Option<(i64, bool)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallNormReport {
    pub d: i64,
    pub entries: Vec<SmallNormEntry>,
    pub failures: usize,
}

/// Every `μ` with `0 < |N(μ)| < √Δ/2`, up to units and sign, matched to
/// `n·α_i` or `n·α_i'`.
pub fn classify_small_norm(ctx: FieldCtx, cf: &CFExpansion) -> Result<SmallNormReport> {
    let delta = ctx.delta();
    // 4n² < Δ
    let mut x = 0i64;
    while 4 * (x + 1) * (x + 1) < delta {
        x += 1;
    }
    let mut reps = std::collections::HashMap::new();
    for i in (-1..=cf.max_index()).rev() {
        for conj in [true, false] {
            let a = if conj { cf.alpha(i).conj() } else { cf.alpha(i).clone() };
            reps.insert(crate::analytic::canonical_generator(cf, &a), (i, conj));
        }
    }
    let records = if x >= 1 {
        crate::analytic::enumerate_principal_ideals(ctx, cf, x as u64)?
    } else {
        Vec::new()
    };
    let mut entries = Vec::new();
    let mut failures = 0;
    for rec in records {
        let n = rec.generator.content();
        let prim = rec.generator.div_int(&n).expect("content divides");
        let hit = reps.get(&prim).copied();
        if hit.is_none() {
            failures += 1;
        }
        entries.push(SmallNormEntry {
            norm: rec.norm as i64,
            multiplier: n.to_i64().unwrap_or(i64::MAX),
            generator: rec.generator,
            convergent: hit,
        });
    }
    Ok(SmallNormReport { d: ctx.d(), entries, failures })
}

/// Outcome of the two-sided estimate of a partial-quotient sum by
/// reciprocal ideal norms.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SumBoundCheck {
    pub value: i64,
    /// `√Δ · Σ 1/Na` over `Na < √Δ`.
    pub upper: f64,
    /// `√Δ · Σ 1/Na` over `Na < √Δ/2` minus `22 · #{Na < √Δ}`.
    pub lower: f64,
    pub upper_holds: bool,
    pub lower_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimateSumReport {
    pub d: i64,
    /// Sum of the period.
    pub part_a: SumBoundCheck,
    /// `M_D` against ideals with a negative-norm generator.
    pub part_b: SumBoundCheck,
}

impl EstimateSumReport {
    pub fn holds(&self) -> bool {
        self.part_a.upper_holds && self.part_a.lower_holds && self.part_b.upper_holds && self.part_b.lower_holds
    }
}

pub(crate) fn sum_bound_check(
    delta: i64,
    value: i64,
    norms: impl Iterator<Item = u64> + Clone,
) -> SumBoundCheck {
    let delta_big = BigInt::from(delta);
    let mut full = BigRational::zero();
    let mut half = BigRational::zero();
    let mut count = 0i64;
    for n in norms {
        let nn = n as i128;
        if nn * nn < delta as i128 {
            full += BigRational::new(BigInt::one(), BigInt::from(n));
            count += 1;
            if 4 * nn * nn < delta as i128 {
                half += BigRational::new(BigInt::one(), BigInt::from(n));
            }
        }
    }
    let v = BigRational::from_integer(BigInt::from(value));
    let delta_r = BigRational::from_integer(delta_big);
    // value < √Δ·full  ⇔  value² < Δ·full²
    let upper_holds = &v * &v < &delta_r * &full * &full;
    let shifted = &v + BigRational::from_integer(BigInt::from(22 * count));
    let lower_holds = shifted.is_positive() && &shifted * &shifted > &delta_r * &half * &half;
    let sd = (delta as f64).sqrt();
    SumBoundCheck {
        value,
        upper: sd * full.to_f64().unwrap_or(f64::NAN),
        lower: sd * half.to_f64().unwrap_or(f64::NAN) - 22.0 * count as f64,
        upper_holds,
        lower_holds,
    }
}

/// Exact two-sided check of `Σ u_i` and `M_D` against primitive principal
/// ideals of norm below `√Δ`.
pub fn estimate_sum_bounds(
    cf: &CFExpansion,
    ideals: &crate::analytic::IdealList,
) -> Result<EstimateSumReport> {
    let ctx = cf.ctx();
    ideals.require_covering_sqrt_delta(ctx)?;
    let prim = ideals.records.iter().filter(|r| r.primitive);
    let part_a = sum_bound_check(ctx.delta(), cf.sum_u(), prim.clone().map(|r| r.norm));
    let part_b = sum_bound_check(
        ctx.delta(),
        m_d(cf),
        prim.filter(|r| r.neg_norm_generator).map(|r| r.norm),
    );
    Ok(EstimateSumReport { d: ctx.d(), part_a, part_b })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareRootReport {
    pub d: i64,
    pub bound: i64,
    pub checked: usize,
    pub indecomposable_squares: usize,
    pub counterexamples: Vec<QuadInt>,
}

/// For every nonzero `α = a + bω` with `|a|, |b| ≤ bound` whose square is
/// indecomposable, checks that `α` is `±α_j` or `±α_j'`.
pub fn square_root_of_indecomposable(ctx: FieldCtx, cf: &CFExpansion, bound: i64) -> Result<SquareRootReport> {
    let window = enumerate_s0(cf)?;
    // convergents with ω-coordinate up to the bound
    let mut known = HashSet::new();
    let t = ctx.omega_trace();
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::from(cf.u0()), BigInt::one());
    known.insert(ctx.one());
    let mut j = 1usize;
    while q1 <= BigInt::from(bound) {
        known.insert(QuadInt::new(ctx, &p1 - &q1 * t, q1.clone()));
        let u = BigInt::from(cf.u(j));
        let (p2, q2) = (&u * &p1 + &p0, &u * &q1 + &q0);
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        j += 1;
    }
    let mut report = SquareRootReport {
        d: ctx.d(),
        bound,
        checked: 0,
        indecomposable_squares: 0,
        counterexamples: Vec::new(),
    };
    for a in -bound..=bound {
        for b in -bound..=bound {
            let alpha = ctx.elem(a, b);
            if alpha.is_zero() {
                continue;
            }
            report.checked += 1;
            let sq = &alpha * &alpha;
            if !sq.is_totally_positive() || !window.is_indecomposable(cf, &sq)? {
                continue;
            }
            report.indecomposable_squares += 1;
            let c = alpha.conj();
            let hit = [alpha.clone(), -&alpha, c.clone(), -&c].iter().any(|v| known.contains(v));
            if !hit {
                report.counterexamples.push(alpha);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(d: i64) -> CFExpansion {
        CFExpansion::expand(FieldCtx::new(d).unwrap())
    }

    #[test]
    fn n_and_t_small() {
        let e = cf(2);
        assert_eq!(n_i(&e, 0).unwrap(), BigInt::from(1));
        assert_eq!(t_i(&e, 0).unwrap(), BigInt::from(1));
        let e = cf(15);
        assert_eq!(e.alpha(0), &e.ctx().elem(3, 1));
        assert_eq!(n_i(&e, 0).unwrap(), BigInt::from(6));
        // q_{-1} = 0 leaves T_0 = p_0 p_{-1} (shifted by the trace term when D ≡ 1)
        for d in [2, 3, 6, 7, 10, 15, 19] {
            let e = cf(d);
            assert_eq!(t_i(&e, 0).unwrap(), BigInt::from(e.u0()));
        }
        assert!(n_i(&e, -1).is_err());
        assert!(t_i(&e, e.max_index() + 1).is_err());
    }

    #[test]
    fn semiconvergents() {
        let e = cf(2);
        let c = e.ctx();
        assert_eq!(semiconvergent(&e, -1, 1).unwrap().value, c.elem(2, 1));
        assert_eq!(semiconvergent(&e, -1, 0).unwrap().value, c.one());
        let e15 = cf(15);
        assert_eq!(semiconvergent(&e15, -1, 1).unwrap().value, e15.ctx().elem(4, 1));
        assert_eq!(semiconvergent(&e, 0, 0), Err(Error::BadIndexParity(0)));
        assert_eq!(semiconvergent(&e, -1, 3), Err(Error::ROutOfRange { r: 3, max: 2 }));
        assert_eq!(semiconvergent(&e, -1, -1), Err(Error::ROutOfRange { r: -1, max: 2 }));
    }

    #[test]
    fn norm_formula_examples() {
        let e = cf(2);
        assert_eq!(norm_semiconvergent_formula(&e, -1, 0).unwrap(), BigInt::from(1));
        assert_eq!(norm_semiconvergent_formula(&e, -1, 1).unwrap(), BigInt::from(2));
        assert_eq!(norm_semiconvergent_formula(&cf(5), -1, 0).unwrap(), BigInt::from(1));
        assert_eq!(norm_semiconvergent_formula(&cf(15), -1, 1).unwrap(), BigInt::from(1));
    }

    #[test]
    fn windows() {
        let w = enumerate_s0(&cf(15)).unwrap();
        assert_eq!(w.values().cloned().collect::<Vec<_>>(), vec![FieldCtx::new(15).unwrap().one()]);
        assert_eq!((w.m_d, w.kappa), (1, 1));
        let e2 = cf(2);
        let w = enumerate_s0(&e2).unwrap();
        let c = e2.ctx();
        assert_eq!(w.values().cloned().collect::<Vec<_>>(), vec![c.one(), c.elem(2, 1)]);
        assert_eq!((w.m_d, w.kappa), (2, 2));
        let w = enumerate_s0(&cf(5)).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(m_d(&cf(5)), 1);
    }

    #[test]
    fn m_star_conventions() {
        let e5 = cf(5);
        let eps = Ratio::new(1, 100);
        let ms = m_star(&e5, eps).unwrap();
        // 2u_0 = 2 clears 5^0.135 ≈ 1.24, u_1 = 1 does not
        assert_eq!((ms.a, ms.b), (1, 0));
        assert!(!ms.flagged);
        let e2 = cf(2);
        let ms = m_star(&e2, eps).unwrap();
        assert_eq!((ms.a, ms.b), (2, 2));
        assert!(m_star(&e2, Ratio::new(1, 4)).unwrap().flagged);
        assert!(m_star(&e2, Ratio::new(0, 1)).is_err());
        assert!(exceeds_threshold(2, 5, eps));
        assert!(!exceeds_threshold(1, 5, eps));
        // 3 ≥ 81^(1/4) exactly at the boundary
        assert!(exceeds_threshold(3, 81, Ratio::new(1, 8)));
    }

    #[test]
    fn fast_and_brute_examples() {
        let e2 = cf(2);
        let c = e2.ctx();
        assert!(is_indecomposable_bruteforce(c, &c.elem(2, 1)).unwrap());
        assert!(!is_indecomposable_bruteforce(c, &c.int(2)).unwrap());
        let x = e2.eps() * c.elem(2, 1);
        assert!(is_indecomposable_fast(&e2, &x).unwrap());
        assert!(is_indecomposable_fast(&e2, &c.one()).unwrap());
        assert!(!is_indecomposable_fast(&e2, &c.int(3)).unwrap());
        let c5 = FieldCtx::new(5).unwrap();
        let golden_sq = c5.elem(1, 1);
        assert_eq!(
            is_indecomposable_bruteforce(c5, &golden_sq).unwrap(),
            is_indecomposable_fast(&cf(5), &golden_sq).unwrap()
        );
        assert_eq!(is_indecomposable_fast(&e2, &c.omega()), Err(Error::NotTotallyPositive));
        assert_eq!(is_indecomposable_bruteforce(c, &c.zero()), Err(Error::NotTotallyPositive));
    }

    #[test]
    fn lemmas_hold_small() {
        for d in [2, 5, 19, 15, 13, 46, 94, 193] {
            let e = cf(d);
            for i in 0..=e.max_index() {
                assert!(verify_lemma_prop5(&e, i).unwrap(), "D={d} i={i}");
                assert!(verify_bounds_prop6(&e, i).unwrap(), "D={d} i={i}");
            }
        }
        assert!(verify_lemma_prop5(&cf(2), 3).is_err());
    }

    #[test]
    fn square_roots() {
        let e = cf(2);
        let r = square_root_of_indecomposable(e.ctx(), &e, 10).unwrap();
        assert!(r.counterexamples.is_empty());
        assert!(r.indecomposable_squares >= 4);
        let e19 = cf(19);
        let r = square_root_of_indecomposable(e19.ctx(), &e19, 40).unwrap();
        assert!(r.counterexamples.is_empty(), "{:?}", r.counterexamples);
    }
}
