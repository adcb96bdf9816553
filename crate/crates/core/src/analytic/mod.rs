//! Characters, L-values, principal ideals and the constant term `L(D)` of
//! the principal-class zeta function.

mod chars;
mod ideals;

pub use chars::{
    character_table, is_fundamental_discriminant, jacobi, kronecker_chi, l1_chi, l_values, lprime1_chi,
    zeta_delta_2, LValues, MIN_CUTOFF,
};
pub use ideals::{
    canonical_generator, class_number, count_reduced_cycles, enumerate_principal_ideals, narrow_class_number,
    principal_norm_counts, reduced_surds, IdealList, PrincipalIdealRecord,
};

use serde::{Deserialize, Serialize};

use crate::approx::Approx;
use crate::contfrac::CFExpansion;
use crate::error::{Error, Result};
use crate::indecomp::{m_d, sum_bound_check, SumBoundCheck};
use crate::interval::Interval;
use crate::quadfield::FieldCtx;

/// Euler's constant to 50 digits.
pub const EULER_GAMMA_50: &str = "0.57721566490153286060651209008240243104215933593992";

pub fn euler_gamma() -> Approx {
    Approx::new(EULER_GAMMA_50.parse::<f64>().expect("literal parses"), f64::EPSILON)
}

/// `L(D)` estimate at cutoff `X`, with the partial sums it was built from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LdEstimate {
    pub value: Approx,
    /// `(Y, estimate at Y)` for `Y = X/2, X, 2X`.
    pub samples: Vec<(u64, f64)>,
}

// With A(t) = #{principal a : Na ≤ t} = c·t + R(t) and c = L(1,χ)/h,
//   ζ(s, princ) = s ∫_1^∞ A(t) t^{-s-1} dt = c/(s−1) + c + s ∫_1^∞ R(t) t^{-s-1} dt,
// so L(D) = c + ∫_1^∞ R(t)/t² dt. Partial summation of the sharp sum gives
//   Σ_{Na≤X} 1/Na = A(X)/X + c·log X + ∫_1^X R(t)/t² dt,
// hence L(D) = Σ_{Na≤X} 1/Na − A(X)/X − c·log X + c − ∫_X^∞ R(t)/t² dt.
// No γ appears: γ enters only through ζ(s)·L(s,χ) when h = 1.
fn ld_at(counts: &[u64], y: u64, c: f64) -> (f64, f64) {
    let mut sum = 0.0;
    let mut a = 0u64;
    for (n, &k) in counts.iter().enumerate().take(y as usize + 1).skip(1) {
        if k > 0 {
            sum += k as f64 / n as f64;
            a += k;
        }
    }
    let yf = y as f64;
    let v = sum - a as f64 / yf - c * yf.ln() + c;
    let float_err = 4.0 * (yf + 8.0) * f64::EPSILON * (sum + c * yf.ln() + 2.0 * c);
    (v, float_err)
}

/// Estimate from sharp partial sums; the bar is the spread over
/// `X/2, X, 2X` plus the propagated uncertainty of `L(1, χ)/h`.
pub fn ld_estimate_with(cf: &CFExpansion, x: u64, l1: Approx, h: u64) -> Result<LdEstimate> {
    if x < MIN_CUTOFF {
        return Err(Error::CutoffTooSmall { got: x, min: MIN_CUTOFF });
    }
    let counts = principal_norm_counts(cf, 2 * x);
    let c = l1.mid / h as f64;
    let dc = l1.rad / h as f64;
    let ys = [x / 2, x, 2 * x];
    let mut samples = Vec::new();
    let mut extra = 0.0f64;
    for &y in &ys {
        let (v, fe) = ld_at(&counts, y, c);
        samples.push((y, v));
        extra = extra.max(fe + dc * (1.0 - (y as f64).ln()).abs());
    }
    let mid = samples[2].1;
    let spread = samples.iter().map(|&(_, v)| (v - mid).abs()).fold(0.0, f64::max);
    Ok(LdEstimate { value: Approx::new(mid, spread + extra), samples })
}

pub fn ld_estimate(ctx: FieldCtx, cf: &CFExpansion, x: u64) -> Result<Approx> {
    if ctx != cf.ctx() {
        return Err(Error::ContextMismatch(ctx.d(), cf.ctx().d()));
    }
    let h = class_number(ctx, cf)?;
    let l1 = l1_chi(ctx.delta(), x)?;
    Ok(ld_estimate_with(cf, x, l1, h)?.value)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorBars {
    pub l1: f64,
    pub l1_prime: f64,
    pub zeta_delta_2: f64,
    pub ld: f64,
    pub main_term: f64,
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LReport {
    pub d: i64,
    pub delta: i64,
    pub s: usize,
    pub h: u64,
    pub h_plus: u64,
    pub l1: Approx,
    pub l1_prime: Approx,
    pub zeta_delta_2: Approx,
    pub ld: Approx,
    pub sum_u: i64,
    pub main_term: Approx,
    pub ratio: Approx,
    pub error_bars: ErrorBars,
    /// `2h·log ε₀/√Δ`, independent of the character sum.
    pub l1_class_number_formula: Approx,
    /// `L(D) − (γ L1 + L1')` when `h = 1`.
    pub identity_residual: Option<Approx>,
    /// `M_D / (√Δ (log Δ)²)`.
    pub m_d_log_ratio: f64,
    /// `s·h / (√D · L1)`.
    pub period_proxy: f64,
}

fn sqrt_approx(n: i64) -> Approx {
    Approx::from_interval(Interval::sqrt_of_u64(n as u64))
}

/// `2h·log ε₀/√Δ`.
pub fn class_number_formula_l1(cf: &CFExpansion, h: u64) -> Approx {
    let ln_eps = cf.eps0().ln_abs_embeddings().0;
    let ln_eps = Approx::new(ln_eps, 8.0 * f64::EPSILON * ln_eps.abs().max(1.0));
    ln_eps * (2.0 * h as f64) / sqrt_approx(cf.ctx().delta())
}

/// L-values, class numbers, the main term
/// `(√Δ/ζ^(Δ)(2))·(L(D) + (L1/h)·log √D)` and `Σu_i` over it.
pub fn asymptotic_report(ctx: FieldCtx, cf: &CFExpansion, x: u64) -> Result<LReport> {
    if ctx != cf.ctx() {
        return Err(Error::ContextMismatch(ctx.d(), cf.ctx().d()));
    }
    let delta = ctx.delta();
    let h = class_number(ctx, cf)?;
    let h_plus = narrow_class_number(ctx, cf)?;
    let lv = l_values(delta, x)?;
    let zeta = zeta_delta_2(delta);
    let ld = ld_estimate_with(cf, x, lv.l1, h)?.value;
    let log_sqrt_d = sqrt_approx(ctx.d()).ln();
    let main_term = sqrt_approx(delta) / zeta * (ld + lv.l1 * (1.0 / h as f64) * log_sqrt_d);
    let sum_u = cf.sum_u();
    let ratio = if main_term.is_positive() {
        Approx::exact(sum_u as f64) / main_term
    } else {
        Approx::new(sum_u as f64 / main_term.mid, f64::INFINITY)
    };
    let identity_residual = (h == 1).then(|| ld - (euler_gamma() * lv.l1 + lv.l1_prime));
    let sd = (delta as f64).sqrt();
    let ln_delta = (delta as f64).ln();
    Ok(LReport {
        d: ctx.d(),
        delta,
        s: cf.s(),
        h,
        h_plus,
        l1: lv.l1,
        l1_prime: lv.l1_prime,
        zeta_delta_2: zeta,
        ld,
        sum_u,
        main_term,
        ratio,
        error_bars: ErrorBars {
            l1: lv.l1.rad,
            l1_prime: lv.l1_prime.rad,
            zeta_delta_2: zeta.rad,
            ld: ld.rad,
            main_term: main_term.rad,
            ratio: ratio.rad,
        },
        l1_class_number_formula: class_number_formula_l1(cf, h),
        identity_residual,
        m_d_log_ratio: m_d(cf) as f64 / (sd * ln_delta * ln_delta),
        period_proxy: cf.s() as f64 * h as f64 / ((ctx.d() as f64).sqrt() * lv.l1.mid),
    })
}

/// Exact two-sided check of `M_D` against primitive principal ideals of
/// norm below `√Δ` that have a generator of negative norm.
pub fn sum_minus_bounds(ctx: FieldCtx, cf: &CFExpansion, ideals: &IdealList) -> Result<SumBoundCheck> {
    if ctx != cf.ctx() {
        return Err(Error::ContextMismatch(ctx.d(), cf.ctx().d()));
    }
    ideals.require_covering_sqrt_delta(ctx)?;
    let neg = ideals.records.iter().filter(|r| r.primitive && r.neg_norm_generator).map(|r| r.norm);
    Ok(sum_bound_check(ctx.delta(), m_d(cf), neg))
}

/// `√Δ ≤ 2⌊ω⌋` and `2⌊ω⌋ ≤ Σu_i`, both exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FloorBoundCheck {
    pub sqrt_delta_le_two_floor: bool,
    pub two_floor_le_sum_u: bool,
}

pub fn floor_bound_check(cf: &CFExpansion) -> FloorBoundCheck {
    let two_floor = 2 * cf.ctx().omega_floor();
    FloorBoundCheck {
        sqrt_delta_le_two_floor: cf.ctx().delta() <= two_floor * two_floor,
        two_floor_le_sum_u: two_floor <= cf.sum_u(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(d: i64) -> (FieldCtx, CFExpansion) {
        let ctx = FieldCtx::new(d).unwrap();
        (ctx, CFExpansion::expand(ctx))
    }

    #[test]
    fn gamma_literal() {
        assert_eq!(EULER_GAMMA_50.len(), 52);
        assert!((euler_gamma().mid - 0.5772156649015329).abs() < 1e-16);
    }

    #[test]
    fn h_one_identity() {
        for d in [2, 5, 13] {
            let (ctx, cf) = field(d);
            let r = asymptotic_report(ctx, &cf, 100_000).unwrap();
            let res = r.identity_residual.unwrap();
            assert!(res.contains(0.0), "D={d}: residual {res}");
            assert!(r.l1.overlaps(&r.l1_class_number_formula));
        }
    }

    #[test]
    fn sum_minus_examples() {
        for d in [2, 5, 15] {
            let (ctx, cf) = field(d);
            let list = IdealList::build(&cf, crate::arith::isqrt_u64(ctx.delta() as u64)).unwrap();
            let chk = sum_minus_bounds(ctx, &cf, &list).unwrap();
            assert!(chk.upper_holds && chk.lower_holds, "D={d}: {chk:?}");
        }
        let (ctx, cf) = field(2);
        let list = IdealList::build(&cf, 2).unwrap();
        let chk = sum_minus_bounds(ctx, &cf, &list).unwrap();
        assert_eq!(chk.value, 2);
        assert!((chk.upper - (8f64.sqrt() * 1.5)).abs() < 1e-12);
        let short = IdealList::build(&cf, 1).unwrap();
        assert!(matches!(sum_minus_bounds(ctx, &cf, &short), Err(Error::MissingIdealData(_))));
    }

    #[test]
    fn cutoff_checked() {
        let (ctx, cf) = field(5);
        assert!(matches!(ld_estimate(ctx, &cf, 999), Err(Error::CutoffTooSmall { .. })));
    }
}
