//! Periodic continued fraction of `ω`, its convergents and the fundamental
//! units read off from them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadfield::{FieldCtx, FieldElem, QuadInt};

/// The quadratic irrational `(p + √d)/q`, with `q | d − p²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Surd {
    pub p: i64,
    pub q: i64,
    pub d: i64,
}

impl Surd {
    pub fn new(p: i64, q: i64, d: i64) -> Result<Self> {
        if q == 0 || (d - p * p) % q != 0 {
            return Err(Error::BadParameter(format!("({p} + √{d})/{q} is not a reduced surd state")));
        }
        Ok(Surd { p, q, d })
    }

    /// `floor((p + √d)/q)` with integers only.
    pub fn floor(&self) -> i64 {
        let r = crate::arith::isqrt_u64(self.d as u64) as i64;
        if self.q > 0 {
            (self.p + r).div_euclid(self.q)
        } else {
            // (p + √d)/q = −(p + √d)/|q|, and (p + √d)/|q| is never an integer
            -((self.p + r).div_euclid(-self.q) + 1)
        }
    }

    /// `(floor(x), 1/(x − floor(x)))`.
    pub fn step(&self) -> (i64, Surd) {
        let u = self.floor();
        let p = u * self.q - self.p;
        let q = (self.d - p * p) / self.q;
        (u, Surd { p, q, d: self.d })
    }

    pub fn to_field_elem(&self, ctx: FieldCtx) -> FieldElem {
        FieldElem::new(ctx, BigInt::from(self.p), BigInt::one(), BigInt::from(self.q))
    }
}

/// `ω` as a surd: `√D/1` or `(1 + √D)/2`.
pub fn omega_surd(ctx: FieldCtx) -> Surd {
    if ctx.is_one_mod_four() {
        Surd { p: 1, q: 2, d: ctx.d() }
    } else {
        Surd { p: 0, q: 1, d: ctx.d() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convergent {
    pub p: BigInt,
    pub q: BigInt,
    /// `p − q·ω'`
    pub alpha: QuadInt,
}

/// Continued fraction `ω = [u0; u1, …, us]` with convergents for indices
/// `−1 ..= 2s`.
#[derive(Clone, Debug)]
pub struct CFExpansion {
    ctx: FieldCtx,
    u0: i64,
    period: Vec<i64>,
    states: Vec<Surd>,
    conv: Vec<Convergent>,
    eps0: QuadInt,
    eps: QuadInt,
}

impl CFExpansion {
    pub fn expand(ctx: FieldCtx) -> CFExpansion {
        let omega = omega_surd(ctx);
        let (u0, first) = omega.step();
        let mut states = vec![omega, first];
        let mut period = Vec::new();
        let mut cur = first;
        loop {
            let (u, next) = cur.step();
            period.push(u);
            if next == first {
                break;
            }
            states.push(next);
            cur = next;
        }
        let s = period.len();
        let t = ctx.omega_trace();

        let u_at = |i: usize| if i == 0 { u0 } else { period[(i - 1) % s] };
        let make = |p: BigInt, q: BigInt| {
            let alpha = QuadInt::new(ctx, &p - &q * t, q.clone());
            Convergent { p, q, alpha }
        };
        let mut conv = Vec::with_capacity(2 * s + 2);
        conv.push(make(BigInt::one(), BigInt::zero()));
        conv.push(make(BigInt::from(u0), BigInt::one()));
        for i in 1..=2 * s {
            let u = BigInt::from(u_at(i));
            let p = &u * &conv[i].p + &conv[i - 1].p;
            let q = &u * &conv[i].q + &conv[i - 1].q;
            conv.push(make(p, q));
        }
        let eps0 = conv[s].alpha.clone();
        let eps = if s % 2 == 0 { eps0.clone() } else { conv[2 * s].alpha.clone() };
        CFExpansion { ctx, u0, period, states, conv, eps0, eps }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn u0(&self) -> i64 {
        self.u0
    }

    /// `u1 … us`.
    pub fn period(&self) -> &[i64] {
        &self.period
    }

    /// Period length `s`.
    pub fn s(&self) -> usize {
        self.period.len()
    }

    /// Partial quotient `u_i` for any `i ≥ 0`.
    pub fn u(&self, i: usize) -> i64 {
        if i == 0 {
            self.u0
        } else {
            self.period[(i - 1) % self.s()]
        }
    }

    pub fn sum_u(&self) -> i64 {
        self.period.iter().sum()
    }

    /// Largest convergent index held.
    pub fn max_index(&self) -> i64 {
        2 * self.s() as i64
    }

    fn conv_index(&self, i: i64) -> Result<usize> {
        if i < -1 || i > self.max_index() {
            return Err(Error::IndexOutOfRange {
                index: i,
                range: format!("-1..={}", self.max_index()),
            });
        }
        Ok((i + 1) as usize)
    }

    pub fn convergent(&self, i: i64) -> Result<&Convergent> {
        Ok(&self.conv[self.conv_index(i)?])
    }

    /// `α_i`; panics outside `−1 ..= 2s`.
    pub fn alpha(&self, i: i64) -> &QuadInt {
        &self.convergent(i).expect("convergent index in range").alpha
    }

    pub fn p(&self, i: i64) -> &BigInt {
        &self.convergent(i).expect("convergent index in range").p
    }

    pub fn q(&self, i: i64) -> &BigInt {
        &self.convergent(i).expect("convergent index in range").q
    }

    /// Fundamental unit `> 1`.
    pub fn eps0(&self) -> &QuadInt {
        &self.eps0
    }

    /// Totally positive fundamental unit.
    pub fn eps(&self) -> &QuadInt {
        &self.eps
    }

    pub fn fundamental_units(&self) -> (QuadInt, QuadInt) {
        (self.eps0.clone(), self.eps.clone())
    }

    pub fn has_negative_norm_unit(&self) -> bool {
        self.s() % 2 == 1
    }

    /// Tail `c_i = [u_i; u_{i+1}, …]`; `c_0 = ω`.
    pub fn c_surd(&self, i: i64) -> Result<Surd> {
        if i < 0 {
            return Err(Error::IndexOutOfRange { index: i, range: "0..".into() });
        }
        if i == 0 {
            return Ok(self.states[0]);
        }
        let k = ((i - 1) as usize) % self.s();
        Ok(self.states[k + 1])
    }

    pub fn c_value(&self, i: i64) -> Result<FieldElem> {
        Ok(self.c_surd(i)?.to_field_elem(self.ctx))
    }

    /// Checks `c_i = u_i + 1/c_{i+1}` and
    /// `ω = (c_{i+1} p_i + p_{i−1}) / (c_{i+1} q_i + q_{i−1})` exactly.
    pub fn verify_tail_identities(&self, i: i64) -> Result<()> {
        let ctx = self.ctx;
        let ci = self.c_value(i)?;
        let cn = self.c_value(i + 1)?;
        let rhs = &FieldElem::int(ctx, self.u(i as usize)) + &cn.recip();
        if ci != rhs {
            return Err(Error::verification("tail recursion", format!("D={} i={i}: {ci} != {rhs}", ctx.d())));
        }
        let cv = self.convergent(i)?;
        let prev = self.convergent(i - 1)?;
        let num = &(&cn * &FieldElem::int(ctx, cv.p.clone())) + &FieldElem::int(ctx, prev.p.clone());
        let den = &(&cn * &FieldElem::int(ctx, cv.q.clone())) + &FieldElem::int(ctx, prev.q.clone());
        let omega = self.ctx.omega().to_field_elem();
        if &num / &den != omega {
            return Err(Error::verification("convergent tail identity", format!("D={} i={i}", ctx.d())));
        }
        Ok(())
    }

    /// Palindrome, last partial quotient, determinant identity, sign pattern
    /// of the convergents, both recurrences and the unit norms.
    pub fn check_invariants(&self) -> Result<()> {
        let d = self.ctx.d();
        let s = self.s();
        let fail = |what: &'static str, detail: String| Err(Error::verification(what, format!("D={d}: {detail}")));
        for i in 1..s {
            if self.period[i - 1] != self.period[s - i - 1] {
                return fail("palindrome", format!("u_{i} != u_{}", s - i));
            }
        }
        let expect_us = if self.ctx.is_one_mod_four() { 2 * self.u0 - 1 } else { 2 * self.u0 };
        if self.period[s - 1] != expect_us {
            return fail("last partial quotient", format!("u_s = {}", self.period[s - 1]));
        }
        for i in -1..self.max_index() {
            let a = self.convergent(i)?;
            let b = self.convergent(i + 1)?;
            let det = &b.p * &a.q - &a.p * &b.q;
            let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
            if det != BigInt::from(sign) {
                return fail("convergent determinant", format!("i={i}"));
            }
        }
        for i in -1..=self.max_index() {
            let a = self.alpha(i);
            if a.is_totally_positive() != (i.rem_euclid(2) == 1) {
                return fail("convergent sign pattern", format!("i={i}"));
            }
            if i >= 1 {
                let u = BigInt::from(self.u(i as usize));
                let rec = self.alpha(i - 1).scale(&u) + self.alpha(i - 2);
                if &rec != a {
                    return fail("convergent recurrence", format!("i={i}"));
                }
            }
            let cv = self.convergent(i)?;
            if cv.p.gcd(&cv.q) != BigInt::one() && !cv.q.is_zero() {
                return fail("coprime convergents", format!("i={i}"));
            }
        }
        let n0 = self.eps0.norm();
        let want = if s.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        if n0 != want {
            return fail("unit norm", format!("N(eps0) = {n0}"));
        }
        if self.eps.norm() != BigInt::one() || !self.eps.is_totally_positive() {
            return fail("totally positive unit", self.eps.to_string());
        }
        if s % 2 == 1 && self.eps != &self.eps0 * &self.eps0 {
            return fail("unit square", String::new());
        }
        if self.eps0.sign_embedding(crate::Embedding::First) <= 0 || self.eps0.b().is_negative() {
            return fail("unit exceeds one", self.eps0.to_string());
        }
        Ok(())
    }
}
