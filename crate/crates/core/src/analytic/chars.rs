//! The quadratic character of a real fundamental discriminant and the
//! values `L(1, χ)`, `L'(1, χ)`, `ζ^(Δ)(2)`.

use crate::approx::Approx;
use crate::error::{Error, Result};

pub const MIN_CUTOFF: u64 = 1000;

pub fn is_fundamental_discriminant(delta: i64) -> bool {
    if delta <= 1 {
        return false;
    }
    match delta.rem_euclid(4) {
        1 => crate::arith::is_squarefree(delta as u64),
        0 => {
            let m = delta / 4;
            matches!(m % 4, 2 | 3) && crate::arith::is_squarefree(m as u64)
        }
        _ => false,
    }
}

/// Jacobi symbol `(a/n)` for odd `n ≥ 1`.
pub fn jacobi(a: i64, n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut t = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

pub(crate) fn kronecker_unchecked(delta: i64, n: u64) -> i8 {
    let tz = n.trailing_zeros();
    let odd = n >> tz;
    let two = if tz == 0 {
        1
    } else if delta % 2 == 0 {
        0
    } else {
        let c = if matches!(delta.rem_euclid(8), 1 | 7) { 1 } else { -1 };
        if tz.is_multiple_of(2) {
            1
        } else {
            c
        }
    };
    two * jacobi(delta, odd)
}

/// Kronecker symbol `(Δ/n)`.
pub fn kronecker_chi(delta: i64, n: u64) -> Result<i8> {
    if !is_fundamental_discriminant(delta) {
        return Err(Error::NotFundamental(delta));
    }
    if n == 0 {
        return Err(Error::BadParameter("n must be positive".into()));
    }
    Ok(kronecker_unchecked(delta, n))
}

/// `χ(n)` for `0 ≤ n < Δ`.
pub fn character_table(delta: i64) -> Result<Vec<i8>> {
    if !is_fundamental_discriminant(delta) {
        return Err(Error::NotFundamental(delta));
    }
    let mut t = vec![0i8; delta as usize];
    for (n, v) in t.iter_mut().enumerate().skip(1) {
        *v = kronecker_unchecked(delta, n as u64);
    }
    Ok(t)
}

/// `ζ(2) Π_{p | Δ} (1 − p⁻²)`.
pub fn zeta_delta_2(delta: i64) -> Approx {
    let mut z = Approx::exact(std::f64::consts::PI) * Approx::exact(std::f64::consts::PI) / Approx::exact(6.0);
    // π is rounded once
    z = z.widen(z.mid * 2.0 * f64::EPSILON);
    for (p, _) in crate::arith::factor_u64(delta as u64) {
        let pf = p as f64;
        z = z * (Approx::exact(1.0) - Approx::exact(1.0) / Approx::exact(pf * pf));
    }
    z
}

/// `L(1, χ)` and `L'(1, χ)` together, sharing one character table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LValues {
    pub l1: Approx,
    pub l1_prime: Approx,
    /// Last index of the explicit partial sum, a multiple of `Δ`.
    pub terms: u64,
}

/// Partial sums up to the first multiple `N ≥ cutoff` of `Δ`, then the
/// tail `Σ_{n>N} S(n)(w(n) − w(n+1))` with the period mean of
/// `S(n) = Σ_{k≤n} χ(k)` in place of `S`. The remainder is bounded by
/// summation by parts against the partial sums of `S − mean`.
pub fn l_values(delta: i64, cutoff: u64) -> Result<LValues> {
    if cutoff < MIN_CUTOFF {
        return Err(Error::CutoffTooSmall { got: cutoff, min: MIN_CUTOFF });
    }
    let table = character_table(delta)?;
    let dl = delta as u64;
    let n_terms = cutoff.div_ceil(dl) * dl;

    let mut s = 0i64;
    let mut s_sum = 0i128;
    let mut partial = Vec::with_capacity(dl as usize);
    for v in table.iter().skip(1).chain(std::iter::once(&table[0])) {
        s += *v as i64;
        partial.push(s);
        s_sum += s as i128;
    }
    // Δ·G_j = Σ_{k≤j} (Δ·S(k) − Σ_period S)
    let mut g = 0i128;
    let mut gmax = 0i128;
    for &sk in &partial {
        g += delta as i128 * sk as i128 - s_sum;
        gmax = gmax.max(g.abs());
    }
    let mean = s_sum as f64 / delta as f64;
    let fmax = gmax as f64 / delta as f64 * (1.0 + 4.0 * f64::EPSILON);

    let (mut l1, mut lp) = (0.0f64, 0.0f64);
    let (mut abs1, mut absp) = (0.0f64, 0.0f64);
    for n in 1..=n_terms {
        let c = table[(n % dl) as usize];
        if c == 0 {
            continue;
        }
        let nf = n as f64;
        let t1 = 1.0 / nf;
        let tp = nf.ln() / nf;
        if c > 0 {
            l1 += t1;
            lp += tp;
        } else {
            l1 -= t1;
            lp -= tp;
        }
        abs1 += t1;
        absp += tp;
    }
    let nf = n_terms as f64;
    let h = |x: f64| x.ln() / x;
    let tail1 = mean / (nf + 1.0);
    let tailp = mean * h(nf + 1.0);
    let err1 = fmax / ((nf + 1.0) * (nf + 2.0));
    let errp = fmax * (h(nf + 1.0) - h(nf + 2.0)).abs() * 1.01;
    let fl = |abs: f64| 2.0 * (nf + 8.0) * f64::EPSILON * abs;
    Ok(LValues {
        l1: Approx::new(l1 + tail1, err1 + fl(abs1)),
        l1_prime: Approx::new(-(lp + tailp), errp + fl(absp)),
        terms: n_terms,
    })
}

pub fn l1_chi(delta: i64, cutoff: u64) -> Result<Approx> {
    Ok(l_values(delta, cutoff)?.l1)
}

pub fn lprime1_chi(delta: i64, cutoff: u64) -> Result<Approx> {
    Ok(l_values(delta, cutoff)?.l1_prime)
}
