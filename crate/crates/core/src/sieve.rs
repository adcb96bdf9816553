//! Norms of semi-convergents as quadratic polynomials in `r`, their root
//! counts modulo prime powers and `k`-th-power-free values.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::contfrac::CFExpansion;
use crate::error::{Error, Result};
use crate::indecomp::{n_i, norm_semiconvergent_formula, semiconvergent, t_i};
use crate::quadfield::{Embedding, QuadInt};

/// `f(r) = a0 + a1 r + a2 r² = N(α_i + r α_{i+1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormPoly {
    pub a0: i64,
    pub a1: i64,
    pub a2: i64,
    pub i: i64,
    /// `N_{i+1}`.
    pub n: i64,
    /// `T_{i+1}`.
    pub t: i64,
    /// `u_{i+2}`.
    pub u: i64,
}

impl NormPoly {
    pub fn eval(&self, r: i64) -> i128 {
        let r = r as i128;
        self.a0 as i128 + self.a1 as i128 * r + self.a2 as i128 * r * r
    }

    fn eval_mod(&self, r: u128, m: u128) -> u128 {
        let red = |c: i64| (c as i128).rem_euclid(m as i128) as u128;
        let r = r % m;
        (red(self.a0) + red(self.a1) * r % m + red(self.a2) * (r * r % m) % m) % m
    }
}

fn to_i64(n: BigInt) -> Result<i64> {
    n.to_i64().ok_or_else(|| Error::BadParameter("coefficient exceeds 64 bits".into()))
}

pub fn f_poly(cf: &CFExpansion, i: i64) -> Result<NormPoly> {
    if i.rem_euclid(2) != 1 {
        return Err(Error::BadIndexParity(i));
    }
    let s0 = semiconvergent(cf, i, 0)?;
    let alpha = &s0.value;
    let beta = cf.alpha(i + 1);
    let u = cf.u((i + 2) as usize);
    let f = NormPoly {
        a0: to_i64(alpha.norm())?,
        a1: to_i64((alpha * &beta.conj()).trace())?,
        a2: to_i64(beta.norm())?,
        i,
        n: to_i64(n_i(cf, i + 1)?)?,
        t: to_i64(t_i(cf, i + 1)?)?,
        u,
    };
    for r in 0..=u {
        let direct = semiconvergent(cf, i, r)?.value.norm();
        if BigInt::from(f.eval(r)) != direct || norm_semiconvergent_formula(cf, i, r)? != direct {
            return Err(Error::verification("norm polynomial", format!("D={} i={i} r={r}", cf.ctx().d())));
        }
    }
    for r in -2..=u + 2 {
        if (f.eval(r) > 0) != (0..=u).contains(&r) {
            return Err(Error::verification("positivity window", format!("D={} i={i} r={r}", cf.ctx().d())));
        }
    }
    Ok(f)
}

/// Number of residues `n mod d` with `f(n) ≡ 0 (mod d)`, by direct scan.
pub fn rho_f(f: &NormPoly, d: u64) -> u64 {
    assert!(d >= 1);
    (0..d as u128).filter(|&r| f.eval_mod(r, d as u128) == 0).count() as u64
}

/// `ρ_f(p^k)` by lifting the roots modulo `p^{j}` one power at a time;
/// every root modulo `p^{j+1}` reduces to a root modulo `p^j`, so the count
/// is exact.
pub fn rho_f_prime_power(f: &NormPoly, p: u64, k: u32) -> u64 {
    let p = p as u128;
    let mut roots: Vec<u128> = (0..p).filter(|&r| f.eval_mod(r, p) == 0).collect();
    let mut m = p;
    for _ in 1..k {
        let next_m = m * p;
        let mut next = Vec::new();
        for &r in &roots {
            for t in 0..p {
                let c = r + t * m;
                if f.eval_mod(c, next_m) == 0 {
                    next.push(c);
                }
            }
        }
        roots = next;
        m = next_m;
    }
    roots.len() as u64
}

pub fn verify_hensel_bound(f: &NormPoly, p: u64, k: u32) -> Result<bool> {
    if !crate::arith::is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if k < 2 {
        return Err(Error::BadParameter(format!("k = {k} must be at least 2")));
    }
    Ok(rho_f_prime_power(f, p, k) <= 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerFreeCount {
    /// `n` in `0..=X` with `f(n)` free of `k`-th powers.
    pub count: u64,
    pub x: i64,
    pub k: u32,
    pub density: f64,
    /// `Π_{p ≤ 10⁴} (1 − ρ_f(p^k)/p^k)`.
    pub euler_floor: f64,
    /// `ζ(k)⁻³`.
    pub zeta_bound: f64,
}

/// `ζ(k)` for `k ≥ 2`, partial sum plus the integral tail bound midpoint.
pub fn zeta_real(k: u32) -> f64 {
    let n = 100_000u64;
    let kf = k as f64;
    let mut s = 0.0;
    for m in (1..=n).rev() {
        s += (m as f64).powf(-kf);
    }
    s + (n as f64 + 0.5).powf(1.0 - kf) / (kf - 1.0)
}

/// `Π_{p ≤ bound} (1 − ρ_f(p^k)/p^k)`; prime powers above `10¹⁸` use
/// the bound `ρ_f ≤ 2` instead of a count.
pub fn euler_floor(f: &NormPoly, k: u32, bound: u64) -> f64 {
    crate::arith::primes_up_to(bound)
        .into_iter()
        .map(|p| {
            let pk = (p as f64).powi(k as i32);
            let rho = if pk < 1e18 { rho_f_prime_power(f, p, k) } else { 2 };
            1.0 - rho as f64 / pk
        })
        .product()
}

pub fn count_power_free(f: &NormPoly, k: u32, x: i64) -> Result<PowerFreeCount> {
    if x < 1 || x > f.u {
        return Err(Error::XOutOfRange { x, max: f.u });
    }
    if k < 2 {
        return Err(Error::BadParameter(format!("k = {k} must be at least 2")));
    }
    let count = (0..=x)
        .filter(|&n| {
            let v = f.eval(n) as u64;
            crate::arith::is_kth_power_free(v, k)
        })
        .count() as u64;
    Ok(PowerFreeCount {
        count,
        x,
        k,
        density: count as f64 / (x + 1) as f64,
        euler_floor: euler_floor(f, k, 10_000),
        zeta_bound: zeta_real(k).powi(-3),
    })
}

/// Representative of `σ` modulo squares of units: multiplied by powers of
/// `η = ε₀²` until `1 ≤ σ/σ' < η²`.
fn unit_square_rep(cf: &CFExpansion, sigma: &QuadInt) -> QuadInt {
    let eta = cf.eps0() * cf.eps0();
    let eta_inv = eta.conj();
    let ratio_ge = |x: &QuadInt, m: &QuadInt| -> bool {
        // x/x' ≥ m/m' for totally positive x, m ⇔ x m' ≥ x' m
        let lhs = x * &m.conj();
        (&lhs - &lhs.conj()).sign_embedding(Embedding::First) >= 0
    };
    let one = cf.ctx().one();
    let eta2 = &eta * &eta;
    let mut y = sigma.clone();
    while !ratio_ge(&y, &one) {
        y = &y * &eta;
    }
    while ratio_ge(&y, &eta2) {
        y = &y * &eta_inv;
    }
    y
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequivalenceReport {
    pub d: i64,
    /// Semi-convergents with 4th-power-free norm.
    pub checked: usize,
    /// Pairs `(i, r)` whose class already appeared.
    pub collisions: Vec<(i64, i64)>,
}

/// Semi-convergents `α_{i,r}`, odd `−1 ≤ i ≤ 2s − 3`, `0 ≤ r < u_{i+2}`,
/// with 4th-power-free norm are pairwise distinct modulo squares of units.
pub fn unit_square_inequivalence(cf: &CFExpansion) -> Result<InequivalenceReport> {
    let s = cf.s() as i64;
    let mut seen = HashSet::new();
    let mut report = InequivalenceReport { d: cf.ctx().d(), checked: 0, collisions: Vec::new() };
    for i in (-1..=2 * s - 3).step_by(2) {
        for r in 0..cf.u((i + 2) as usize) {
            let v = semiconvergent(cf, i, r)?.value;
            let n = v.norm().abs().to_u64().expect("norm fits");
            if !crate::arith::is_kth_power_free(n, 4) {
                continue;
            }
            report.checked += 1;
            if !seen.insert(unit_square_rep(cf, &v)) {
                report.collisions.push((i, r));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::FieldCtx;

    fn cf(d: i64) -> CFExpansion {
        CFExpansion::expand(FieldCtx::new(d).unwrap())
    }

    /// The closed form in terms of `N`, `T` and `D`.
    fn closed_form(d: i64, f: &NormPoly, r: i64) -> i128 {
        let (n, t) = (f.n as i128, f.t as i128);
        let w = t - n * r as i128;
        if d % 4 == 1 {
            ((d as i128 - 1) / 4 + w - w * w) / n
        } else {
            (d as i128 - w * w) / n
        }
    }

    #[test]
    fn examples() {
        let f = f_poly(&cf(2), -1).unwrap();
        assert_eq!((f.a0, f.a1, f.a2), (1, 2, -1));
        assert!(f.eval(-1) <= 0 && f.eval(f.u + 1) <= 0);
        let f15 = f_poly(&cf(15), -1).unwrap();
        assert_eq!((f15.a0, f15.a1, f15.a2, f15.n, f15.t), (1, 6, -6, 6, 3));
        assert!(f15.eval(-1) <= 0 && f15.eval(f15.u + 1) <= 0);
        assert_eq!(f_poly(&cf(2), 0), Err(Error::BadIndexParity(0)));
        assert_eq!(rho_f(&f, 1), 1);
        assert_eq!(rho_f(&f, 2), 1);
        let scan4 = (0..4).filter(|&r| f.eval(r).rem_euclid(4) == 0).count() as u64;
        assert_eq!(rho_f(&f, 4), scan4);
        assert_eq!(verify_hensel_bound(&f, 2, 2), Ok(true));
        assert_eq!(verify_hensel_bound(&f, 4, 2), Err(Error::NotPrime(4)));
    }

    #[test]
    fn closed_forms_and_lifting() {
        for d in [2, 3, 5, 13, 19, 46, 94, 193] {
            let c = cf(d);
            for i in (-1..=2 * c.s() as i64 - 3).step_by(2) {
                let f = f_poly(&c, i).unwrap();
                for r in -3..=f.u + 3 {
                    assert_eq!(f.eval(r), closed_form(d, &f, r), "D={d} i={i} r={r}");
                }
                for p in [2u64, 3, 5, 7] {
                    for k in [1u32, 2, 3] {
                        assert_eq!(rho_f_prime_power(&f, p, k), rho_f(&f, p.pow(k)));
                    }
                    for k in [2u32, 3] {
                        assert!(verify_hensel_bound(&f, p, k).unwrap(), "D={d} i={i} p={p} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn rho_multiplicative() {
        let c = cf(94);
        let f = f_poly(&c, -1).unwrap();
        for (a, b) in [(4u64, 9u64), (8, 25), (3, 49), (16, 27), (5, 121)] {
            assert_eq!(rho_f(&f, a * b), rho_f(&f, a) * rho_f(&f, b));
        }
    }

    #[test]
    fn linear_case_mod_three() {
        // N_{i+1} ≡ 0 mod 3 makes f linear mod 3
        for d in 2..400i64 {
            let Ok(ctx) = FieldCtx::new(d) else { continue };
            let c = CFExpansion::expand(ctx);
            for i in (-1..=2 * c.s() as i64 - 3).step_by(2) {
                let f = f_poly(&c, i).unwrap();
                if f.a2 % 3 == 0 && d % 3 != 0 {
                    assert!(rho_f_prime_power(&f, 3, 2) <= 1, "D={d} i={i}");
                }
            }
        }
    }

    #[test]
    fn power_free_counts() {
        let f = f_poly(&cf(2), -1).unwrap();
        let c = count_power_free(&f, 4, 1).unwrap();
        assert_eq!(c.count, 2);
        assert!(c.euler_floor >= c.zeta_bound);
        assert!(matches!(count_power_free(&f, 4, 5), Err(Error::XOutOfRange { .. })));
        assert!((zeta_real(4) - std::f64::consts::PI.powi(4) / 90.0).abs() < 1e-12);
    }

    #[test]
    fn inequivalent_mod_unit_squares() {
        for d in [2, 3, 5, 6, 7, 15, 19, 46, 94] {
            let r = unit_square_inequivalence(&cf(d)).unwrap();
            assert!(r.collisions.is_empty(), "D={d}: {r:?}");
            assert!(r.checked > 0);
        }
    }
}
