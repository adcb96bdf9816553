use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use uqf::analytic::{asymptotic_report, LReport};
use uqf::indecomp::{enumerate_s0, m_d, m_star, IndecompWindow, MStar};
use uqf::sieve::{count_power_free, f_poly, rho_f_prime_power, unit_square_inequivalence, InequivalenceReport, NormPoly, PowerFreeCount};
use uqf::universal::{
    construct_universal_form, mdiag_lower_bounds, represent, totally_positive_up_to_trace, witness_via_construction,
    MdiagBounds,
};
use uqf::{CFExpansion, Error, FieldCtx, QuadInt};

use crate::CliError;

#[derive(Clone, Copy)]
pub struct Output {
    pub json: bool,
}

impl Output {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<(), CliError> {
        if self.json {
            let s = serde_json::to_string_pretty(value).map_err(|e| CliError::BadInput(e.to_string()))?;
            println!("{s}");
        } else {
            print!("{}", text());
        }
        Ok(())
    }
}

pub fn field(d: i64) -> Result<(FieldCtx, CFExpansion), CliError> {
    let ctx = FieldCtx::new(d)?;
    Ok((ctx, CFExpansion::expand(ctx)))
}

pub fn join_period(period: &[i64]) -> String {
    period.iter().map(|u| u.to_string()).collect::<Vec<_>>().join("-")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CfReport {
    pub d: i64,
    pub delta: i64,
    pub u0: i64,
    pub period: String,
    pub s: usize,
    pub sum_u: i64,
    pub palindrome: bool,
    pub last_quotient_ok: bool,
    pub invariants_ok: bool,
    pub eps0: QuadInt,
    pub eps: QuadInt,
    pub eps0_negative_norm: bool,
    /// Enclosures of both embeddings of `ε₀` at `precision_bits`.
    pub eps0_embeddings: [(f64, f64); 2],
    pub precision_bits: u32,
}

pub fn cf(out: Output, d: i64, precision_bits: u32) -> Result<(), CliError> {
    let (ctx, cf) = field(d)?;
    let p = cf.period();
    let s = p.len();
    let palindrome = (1..s).all(|i| p[i - 1] == p[s - i - 1]);
    let want = if ctx.is_one_mod_four() { 2 * cf.u0() - 1 } else { 2 * cf.u0() };
    let invariants = cf.check_invariants();
    let (e1, e2) = cf.eps0().embed_approx(precision_bits);
    let (i1, i2) = (e1.to_interval(), e2.to_interval());
    let rep = CfReport {
        d,
        delta: ctx.delta(),
        u0: cf.u0(),
        period: join_period(p),
        s,
        sum_u: cf.sum_u(),
        palindrome,
        last_quotient_ok: p[s - 1] == want,
        invariants_ok: invariants.is_ok(),
        eps0: cf.eps0().clone(),
        eps: cf.eps().clone(),
        eps0_negative_norm: cf.has_negative_norm_unit(),
        eps0_embeddings: [(i1.lo, i1.hi), (i2.lo, i2.hi)],
        precision_bits,
    };
    out.emit(&rep, || {
        format!(
            "D = {d}, Δ = {}\nω = [{}; {}], s = {}, Σu = {}\npalindrome: {}, u_s check: {}, invariants: {}\nε₀ = {} (norm {}), ε = {}\nε₀ ∈ [{:.17e}, {:.17e}], ε₀' ∈ [{:.17e}, {:.17e}]\n",
            rep.delta,
            rep.u0,
            rep.period,
            rep.s,
            rep.sum_u,
            ok(rep.palindrome),
            ok(rep.last_quotient_ok),
            ok(rep.invariants_ok),
            rep.eps0,
            if rep.eps0_negative_norm { -1 } else { 1 },
            rep.eps,
            i1.lo,
            i1.hi,
            i2.lo,
            i2.hi
        )
    })?;
    invariants?;
    Ok(())
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndecReport {
    pub d: i64,
    pub s: usize,
    pub m_d: i64,
    pub window: IndecompWindow,
    pub eps: String,
    pub m_star: MStar,
    pub lower_bounds: MdiagBounds,
}

pub fn indec(out: Output, d: i64, eps: Ratio<i64>) -> Result<(), CliError> {
    let (_, cf) = field(d)?;
    let window = enumerate_s0(&cf)?;
    let rep = IndecReport {
        d,
        s: cf.s(),
        m_d: m_d(&cf),
        m_star: m_star(&cf, eps)?,
        lower_bounds: mdiag_lower_bounds(&cf, eps)?,
        window,
        eps: eps.to_string(),
    };
    out.emit(&rep, || {
        let mut t = format!("D = {d}, s = {}, M_D = {}, κ = {}\n", rep.s, rep.m_d, rep.window.kappa);
        for e in &rep.window.elements {
            t += &format!("  α({}, {}) = {}\n", e.i, e.r, e.value);
        }
        t += &format!(
            "M* (ε = {}) = {} / {}{}\nM_D/(κ s) = {}\n",
            rep.eps,
            rep.m_star.a,
            rep.m_star.b,
            if rep.m_star.flagged { " (ε ≥ 1/8)" } else { "" },
            rep.lower_bounds.ratio_bound
        );
        t
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormReport {
    pub d: i64,
    pub arity: usize,
    pub coeffs: Vec<QuadInt>,
    pub verify_trace: i64,
    pub targets: usize,
    pub represented_by_search: usize,
    pub represented_by_construction: usize,
    pub failures: Vec<String>,
}

pub fn form(out: Output, d: i64, verify_trace: i64) -> Result<(), CliError> {
    if verify_trace < 2 {
        return Err(Error::BadParameter(format!("verify-trace {verify_trace} must be at least 2")).into());
    }
    let (ctx, cf) = field(d)?;
    let form = construct_universal_form(&cf)?;
    let targets = totally_positive_up_to_trace(ctx, verify_trace);
    let (mut by_search, mut by_construction) = (0, 0);
    let mut failures = Vec::new();
    for x in &targets {
        match represent(ctx, &form, x)? {
            Some(w) if form.eval(&w)? == *x => by_search += 1,
            _ => failures.push(format!("{x}: no representation found by search")),
        }
        match witness_via_construction(&cf, x) {
            Ok(_) => by_construction += 1,
            Err(e) => failures.push(format!("{x}: construction failed: {e}")),
        }
    }
    let rep = FormReport {
        d,
        arity: form.arity(),
        coeffs: form.coeffs().to_vec(),
        verify_trace,
        targets: targets.len(),
        represented_by_search: by_search,
        represented_by_construction: by_construction,
        failures,
    };
    out.emit(&rep, || {
        let terms: Vec<String> = rep.coeffs.iter().enumerate().map(|(j, c)| format!("({c})·x{}²", j + 1)).collect();
        let mut t = format!("D = {d}: {}-variable form\n  {}\n", rep.arity, terms.join(" + "));
        t += &format!(
            "trace ≤ {}: {} targets, {} by search, {} by construction\n",
            rep.verify_trace, rep.targets, rep.represented_by_search, rep.represented_by_construction
        );
        for f in &rep.failures {
            t += &format!("  FAILED {f}\n");
        }
        t
    })?;
    if !rep.failures.is_empty() {
        return Err(CliError::Theorem(format!("{} of {} targets", rep.failures.len(), rep.targets)));
    }
    Ok(())
}

const SIEVE_PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SieveRow {
    pub poly: NormPoly,
    /// `(p, ρ(p²), ρ(p³), ρ(p⁴))` for `p ≤ 50`.
    pub rho: Vec<(u64, u64, u64, u64)>,
    pub lifting_bound_holds: bool,
    /// Fourth-power-free values over `0..=u_{i+2}`.
    pub fourth_power_free: PowerFreeCount,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SieveReport {
    pub d: i64,
    pub rows: Vec<SieveRow>,
    pub inequivalence: InequivalenceReport,
}

pub fn sieve(out: Output, d: i64) -> Result<(), CliError> {
    let (_, cf) = field(d)?;
    let mut rows = Vec::new();
    for i in (-1..=2 * cf.s() as i64 - 3).step_by(2) {
        let f = f_poly(&cf, i)?;
        let rho: Vec<_> = SIEVE_PRIMES
            .iter()
            .map(|&p| (p, rho_f_prime_power(&f, p, 2), rho_f_prime_power(&f, p, 3), rho_f_prime_power(&f, p, 4)))
            .collect();
        let lifting_bound_holds = rho.iter().all(|r| r.1 <= 2 && r.2 <= 2 && r.3 <= 2);
        let fourth_power_free = count_power_free(&f, 4, f.u)?;
        rows.push(SieveRow { poly: f, rho, lifting_bound_holds, fourth_power_free });
    }
    let rep = SieveReport { d, rows, inequivalence: unit_square_inequivalence(&cf)? };
    out.emit(&rep, || {
        let mut t = format!("D = {d}\n");
        for r in &rep.rows {
            let f = &r.poly;
            t += &format!(
                "  i = {}: f(r) = {} + {}·r + {}·r², ρ(p^k) ≤ 2: {}, 4th-power-free {}/{} (density {:.4}, Euler floor {:.4})\n",
                f.i,
                f.a0,
                f.a1,
                f.a2,
                ok(r.lifting_bound_holds),
                r.fourth_power_free.count,
                r.fourth_power_free.x + 1,
                r.fourth_power_free.density,
                r.fourth_power_free.euler_floor
            );
        }
        t += &format!(
            "classes mod unit squares: {} checked, {} collisions\n",
            rep.inequivalence.checked,
            rep.inequivalence.collisions.len()
        );
        t
    })?;
    if rep.rows.iter().any(|r| !r.lifting_bound_holds) || !rep.inequivalence.collisions.is_empty() {
        return Err(CliError::Theorem("sieve checks".into()));
    }
    Ok(())
}

pub fn lvals(out: Output, d: i64, cutoff: u64) -> Result<(), CliError> {
    let (ctx, cf) = field(d)?;
    let rep: LReport = asymptotic_report(ctx, &cf, cutoff)?;
    out.emit(&rep, || {
        let mut t = format!("D = {d}, Δ = {}, h = {}, h⁺ = {}\n", rep.delta, rep.h, rep.h_plus);
        t += &format!("L(1, χ)   = {}\n", rep.l1);
        t += &format!("  via h    {}\n", rep.l1_class_number_formula);
        t += &format!("L'(1, χ)  = {}\n", rep.l1_prime);
        t += &format!("ζ^(Δ)(2)  = {}\n", rep.zeta_delta_2);
        t += &format!("L(D)      = {}\n", rep.ld);
        if let Some(r) = rep.identity_residual {
            t += &format!("L(D) − (γ L1 + L1') = {r}\n");
        }
        t += &format!("Σu = {}, main term = {}, ratio = {}\n", rep.sum_u, rep.main_term, rep.ratio);
        t
    })?;
    if !rep.l1.overlaps(&rep.l1_class_number_formula) {
        return Err(CliError::Theorem("L(1, χ) disagrees with the class number formula".into()));
    }
    if rep.identity_residual.is_some_and(|r| !r.contains(0.0)) {
        return Err(CliError::Theorem("L(D) identity residual excludes zero".into()));
    }
    Ok(())
}
