//! Exact arithmetic in the ring of integers `Z[ω]` of a real quadratic field
//! and in the field itself.
//!
//! Elements of the ring are stored as `a + b·ω` over the integral basis
//! `{1, ω}`, where `ω = √D` for `D ≡ 2, 3 (mod 4)` and `ω = (1 + √D)/2` for
//! `D ≡ 1 (mod 4)`. Every sign decision is made with integer arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::interval::{DyadicInterval, Interval};

/// A real quadratic field `Q(√D)` with squarefree `D > 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    d: i64,
    delta: i64,
    sqrt_floor: i64,
}

impl FieldCtx {
    pub fn new(d: i64) -> Result<Self> {
        if d <= 1 {
            return Err(Error::DTooSmall(d));
        }
        if !arith::is_squarefree(d as u64) {
            return Err(Error::NotSquarefree(d));
        }
        // 4D and products of coordinates must stay comfortably inside i64.
        if d > (1 << 40) {
            return Err(Error::BadParameter(format!("D = {d} exceeds 2^40")));
        }
        let delta = if d % 4 == 1 { d } else { 4 * d };
        Ok(FieldCtx {
            d,
            delta,
            sqrt_floor: arith::isqrt_u64(d as u64) as i64,
        })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// The discriminant.
    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn is_one_mod_four(&self) -> bool {
        self.d % 4 == 1
    }

    /// `D mod 4`, one of 1, 2, 3.
    pub fn residue(&self) -> i64 {
        self.d % 4
    }

    /// `floor(√D)`.
    pub fn sqrt_floor(&self) -> i64 {
        self.sqrt_floor
    }

    /// Trace of `ω`: 1 or 0.
    pub fn omega_trace(&self) -> i64 {
        if self.is_one_mod_four() {
            1
        } else {
            0
        }
    }

    /// Norm of `ω`: `(1 − D)/4` or `−D`.
    pub fn omega_norm(&self) -> i64 {
        if self.is_one_mod_four() {
            (1 - self.d) / 4
        } else {
            -self.d
        }
    }

    /// Denominator of `ω` over `{1, √D}`: 2 or 1.
    pub fn omega_den(&self) -> i64 {
        if self.is_one_mod_four() {
            2
        } else {
            1
        }
    }

    /// `floor(ω)`.
    pub fn omega_floor(&self) -> i64 {
        (self.omega_trace() + self.sqrt_floor) / self.omega_den()
    }

    pub fn int(&self, n: impl Into<BigInt>) -> QuadInt {
        QuadInt::new(*self, n.into(), BigInt::zero())
    }

    pub fn elem(&self, a: impl Into<BigInt>, b: impl Into<BigInt>) -> QuadInt {
        QuadInt::new(*self, a.into(), b.into())
    }

    pub fn zero(&self) -> QuadInt {
        self.int(0)
    }

    pub fn one(&self) -> QuadInt {
        self.int(1)
    }

    pub fn omega(&self) -> QuadInt {
        self.elem(0, 1)
    }

    /// `A + B√D` with `A, B` integers, if that lies in the ring.
    pub fn from_sqrt_form(&self, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Option<QuadInt> {
        let (a, b) = (a.into(), b.into());
        if self.is_one_mod_four() {
            // A + B√D = (A − B) + 2B·ω
            Some(self.elem(a - &b, b * 2))
        } else {
            Some(self.elem(a, b))
        }
    }

    /// Enclosure of `√D`.
    pub fn sqrt_d(&self) -> Interval {
        Interval::sqrt_of_u64(self.d as u64)
    }

    /// Enclosures of `ω` and `ω'`.
    pub fn omega_intervals(&self) -> (Interval, Interval) {
        let s = self.sqrt_d();
        let t = Interval::point(self.omega_trace() as f64);
        let den = Interval::point(self.omega_den() as f64);
        ((t + s) / den, (t - s) / den)
    }

    /// All lattice points whose first embedding lies in `e1` and second in
    /// `e2`, plus possibly a few just outside; callers filter exactly.
    pub fn box_candidates(&self, e1: Interval, e2: Interval) -> Vec<QuadInt> {
        let mut out = Vec::new();
        self.for_each_box_candidate(e1, e2, |a, b| out.push(self.elem(a, b)));
        out
    }

    pub fn for_each_box_candidate(&self, e1: Interval, e2: Interval, mut f: impl FnMut(i64, i64)) {
        let (w1, w2) = self.omega_intervals();
        // emb1 − emb2 = b·√D
        let bi = (e1 - e2) / self.sqrt_d();
        let b_lo = bi.lo.ceil() as i64 - 1;
        let b_hi = bi.hi.floor() as i64 + 1;
        for b in b_lo..=b_hi {
            let bb = Interval::from_i64(b);
            let r1 = e1 - bb * w1;
            let r2 = e2 - bb * w2;
            let lo = r1.lo.max(r2.lo);
            let hi = r1.hi.min(r2.hi);
            if lo > hi + 2.0 {
                continue;
            }
            let a_lo = lo.ceil() as i64 - 1;
            let a_hi = hi.floor() as i64 + 1;
            for a in a_lo..=a_hi {
                f(a, b);
            }
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(√{})", self.d)
    }
}

/// Which real embedding: `√D ↦ +√D` or `√D ↦ −√D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Embedding {
    First,
    Second,
}

/// Sign of `a + b√d` for non-square `d > 0`.
pub(crate) fn sign_sqrt_form(a: &BigInt, b: &BigInt, d: i64) -> Ordering {
    let sa = a.sign();
    let sb = b.sign();
    use num_bigint::Sign::*;
    match (sa, sb) {
        (NoSign, NoSign) => Ordering::Equal,
        (_, NoSign) => a.cmp(&BigInt::zero()),
        (NoSign, _) => b.cmp(&BigInt::zero()),
        (Plus, Plus) => Ordering::Greater,
        (Minus, Minus) => Ordering::Less,
        _ => {
            // opposite signs: the term with larger square wins
            let a2 = a * a;
            let b2d = b * b * d;
            if a2 > b2d {
                a.cmp(&BigInt::zero())
            } else {
                b.cmp(&BigInt::zero())
            }
        }
    }
}

fn ord_to_i8(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// An element `a + b·ω` of the ring of integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    a: BigInt,
    b: BigInt,
    ctx: FieldCtx,
}

impl QuadInt {
    pub fn new(ctx: FieldCtx, a: BigInt, b: BigInt) -> Self {
        QuadInt { a, b, ctx }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn check(&self, other: &QuadInt) -> Result<()> {
        if self.ctx != other.ctx {
            Err(Error::ContextMismatch(self.ctx.d, other.ctx.d))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, o: &QuadInt) -> Result<QuadInt> {
        self.check(o)?;
        Ok(QuadInt::new(self.ctx, &self.a + &o.a, &self.b + &o.b))
    }

    pub fn checked_sub(&self, o: &QuadInt) -> Result<QuadInt> {
        self.check(o)?;
        Ok(QuadInt::new(self.ctx, &self.a - &o.a, &self.b - &o.b))
    }

    pub fn checked_mul(&self, o: &QuadInt) -> Result<QuadInt> {
        self.check(o)?;
        // ω² = Tr(ω)·ω − N(ω)
        let bd = &self.b * &o.b;
        let a = &self.a * &o.a - &bd * self.ctx.omega_norm();
        let b = &self.a * &o.b + &self.b * &o.a + &bd * self.ctx.omega_trace();
        Ok(QuadInt::new(self.ctx, a, b))
    }

    pub fn scale(&self, k: &BigInt) -> QuadInt {
        QuadInt::new(self.ctx, &self.a * k, &self.b * k)
    }

    pub fn scale_i64(&self, k: i64) -> QuadInt {
        self.scale(&BigInt::from(k))
    }

    pub fn pow(&self, mut e: u32) -> QuadInt {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn conj(&self) -> QuadInt {
        QuadInt::new(
            self.ctx,
            &self.a + &self.b * self.ctx.omega_trace(),
            -&self.b,
        )
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a
            + &self.a * &self.b * self.ctx.omega_trace()
            + &self.b * &self.b * self.ctx.omega_norm()
    }

    pub fn trace(&self) -> BigInt {
        &self.a * 2 + &self.b * self.ctx.omega_trace()
    }

    /// `(A, B, den)` with `self = (A + B√D)/den`.
    pub fn sqrt_form(&self) -> (BigInt, BigInt, i64) {
        if self.ctx.is_one_mod_four() {
            (&self.a * 2 + &self.b, self.b.clone(), 2)
        } else {
            (self.a.clone(), self.b.clone(), 1)
        }
    }

    pub fn sign_embedding(&self, which: Embedding) -> i8 {
        let (a, b, _) = self.sqrt_form();
        let b = match which {
            Embedding::First => b,
            Embedding::Second => -b,
        };
        ord_to_i8(sign_sqrt_form(&a, &b, self.ctx.d))
    }

    pub fn is_totally_positive(&self) -> bool {
        self.sign_embedding(Embedding::First) > 0 && self.sign_embedding(Embedding::Second) > 0
    }

    /// Totally positive or zero.
    pub fn is_totally_nonnegative(&self) -> bool {
        self.is_zero() || self.is_totally_positive()
    }

    /// `self ≻ other`.
    pub fn succeeds(&self, other: &QuadInt) -> Result<bool> {
        Ok(self.checked_sub(other)?.is_totally_positive())
    }

    /// `gcd(a, b)`, non-negative.
    pub fn content(&self) -> BigInt {
        self.a.gcd(&self.b)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divides both coordinates by `k`; `None` unless exact.
    pub fn div_int(&self, k: &BigInt) -> Option<QuadInt> {
        if k.is_zero() {
            return None;
        }
        let (qa, ra) = self.a.div_rem(k);
        let (qb, rb) = self.b.div_rem(k);
        if ra.is_zero() && rb.is_zero() {
            Some(QuadInt::new(self.ctx, qa, qb))
        } else {
            None
        }
    }

    /// `self / other` when the quotient lies in the ring.
    pub fn div_exact(&self, other: &QuadInt) -> Option<QuadInt> {
        let n = other.norm();
        (self * &other.conj()).div_int(&n)
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// Certified enclosures of both embeddings.
    ///
    /// Width is at most `2^-precision_bits · max(1, |b|)`-scaled; exact when
    /// `b = 0`.
    pub fn embed_approx(&self, precision_bits: u32) -> (DyadicInterval, DyadicInterval) {
        let bits = precision_bits.max(8) as u64;
        let (a, b, den) = self.sqrt_form();
        if b.is_zero() {
            let e = DyadicInterval::exact(self.a.clone());
            return (e.clone(), e);
        }
        let k = bits + b.bits() + 2;
        let r = crate::arith::big_isqrt(&(num_bigint::BigUint::from(self.ctx.d as u64) << (2 * k)));
        let r = BigInt::from(r);
        let r1 = &r + 1;
        let shifted = &a << k;
        let extra_exp = if den == 2 { 1 } else { 0 };
        let make = |bsign: &BigInt| -> DyadicInterval {
            let lo_c = &shifted + bsign * &r;
            let hi_c = &shifted + bsign * &r1;
            let (lo, hi) = if lo_c <= hi_c { (lo_c, hi_c) } else { (hi_c, lo_c) };
            DyadicInterval { lo, hi, exp: k + extra_exp }
        };
        (make(&b), make(&(-&b)))
    }

    /// f64 enclosures of both embeddings.
    pub fn embed_intervals(&self) -> (Interval, Interval) {
        let (a, b, den) = self.sqrt_form();
        let ai = Interval::from_bigint(&a);
        let bi = Interval::from_bigint(&b);
        let s = self.ctx.sqrt_d();
        let d = Interval::point(den as f64);
        ((ai + bi * s) / d, (ai - bi * s) / d)
    }

    /// Natural logs of `|emb1|` and `|emb2|` without cancellation; both
    /// embeddings must be nonzero.
    pub fn ln_abs_embeddings(&self) -> (f64, f64) {
        let (a, b, den) = self.sqrt_form();
        let ln_den = (den as f64).ln();
        let sd = (self.ctx.d as f64).sqrt();
        let ln_larger = {
            let shift = a.bits().max(b.bits()).saturating_sub(60);
            let am = (a.abs() >> shift).to_f64().unwrap();
            let bm = (b.abs() >> shift).to_f64().unwrap();
            (am + bm * sd).ln() + shift as f64 * std::f64::consts::LN_2 - ln_den
        };
        let ln_norm = arith::ln_abs(&self.norm());
        let ln_smaller = ln_norm - ln_larger;
        // the embedding where a and b√D have the same sign is the larger one
        let first_larger = a.sign() == b.sign() || b.is_zero() || a.is_zero();
        if self.is_rational() {
            let l = arith::ln_abs(&self.a);
            return (l, l);
        }
        if first_larger {
            (ln_larger, ln_smaller)
        } else {
            (ln_smaller, ln_larger)
        }
    }

    pub fn to_field_elem(&self) -> FieldElem {
        let (a, b, den) = self.sqrt_form();
        FieldElem::new(self.ctx, a, b, BigInt::from(den))
    }

    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.a.to_i64()?, self.b.to_i64()?))
    }
}

impl fmt::Debug for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadInt[D={}]({} + {}ω)", self.ctx.d, self.a, self.b)
    }
}

/// Renders as `A+B√D` or `(A+B√D)/2`.
fn fmt_sqrt_form(f: &mut fmt::Formatter<'_>, a: &BigInt, b: &BigInt, den: &BigInt, d: i64) -> fmt::Result {
    let mut num = String::new();
    if !a.is_zero() || b.is_zero() {
        num.push_str(&a.to_string());
    }
    if !b.is_zero() {
        if b.is_positive() && !num.is_empty() {
            num.push('+');
        }
        if b.is_one() {
        } else if *b == -BigInt::one() {
            num.push('-');
        } else {
            num.push_str(&b.to_string());
        }
        num.push_str(&format!("√{d}"));
    }
    if den.is_one() {
        write!(f, "{num}")
    } else if b.is_zero() {
        write!(f, "{num}/{den}")
    } else {
        write!(f, "({num})/{den}")
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, den) = self.sqrt_form();
        let den = BigInt::from(den);
        let g = a.gcd(&b).gcd(&den);
        fmt_sqrt_form(f, &(&a / &g), &(&b / &g), &(&den / &g), self.ctx.d)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&QuadInt> for &QuadInt {
            type Output = QuadInt;
            fn $m(self, o: &QuadInt) -> QuadInt {
                self.$checked(o).expect("quadratic integers from different fields")
            }
        }
        impl $tr<QuadInt> for QuadInt {
            type Output = QuadInt;
            fn $m(self, o: QuadInt) -> QuadInt {
                (&self).$m(&o)
            }
        }
        impl $tr<&QuadInt> for QuadInt {
            type Output = QuadInt;
            fn $m(self, o: &QuadInt) -> QuadInt {
                (&self).$m(o)
            }
        }
        impl $tr<QuadInt> for &QuadInt {
            type Output = QuadInt;
            fn $m(self, o: QuadInt) -> QuadInt {
                self.$m(&o)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt::new(self.ctx, -&self.a, -&self.b)
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct QuadIntRepr {
    d: i64,
    a: String,
    b: String,
}

impl Serialize for QuadInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuadIntRepr {
            d: self.ctx.d,
            a: self.a.to_string(),
            b: self.b.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadInt {
    fn deserialize<De: serde::Deserializer<'de>>(de: De) -> std::result::Result<Self, De::Error> {
        use serde::de::Error as _;
        let r = QuadIntRepr::deserialize(de)?;
        let ctx = FieldCtx::new(r.d).map_err(De::Error::custom)?;
        let a: BigInt = r.a.parse().map_err(De::Error::custom)?;
        let b: BigInt = r.b.parse().map_err(De::Error::custom)?;
        Ok(QuadInt::new(ctx, a, b))
    }
}

/// An element `(a + b√D)/den` of the field, kept in lowest terms with
/// `den > 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    a: BigInt,
    b: BigInt,
    den: BigInt,
    ctx: FieldCtx,
}

impl FieldElem {
    pub fn new(ctx: FieldCtx, a: BigInt, b: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = a.gcd(&b).gcd(&den);
        let mut e = FieldElem {
            a: &a / &g,
            b: &b / &g,
            den: &den / &g,
            ctx,
        };
        if e.den.is_negative() {
            e.a = -e.a;
            e.b = -e.b;
            e.den = -e.den;
        }
        e
    }

    pub fn rational(ctx: FieldCtx, num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        FieldElem::new(ctx, num.into(), BigInt::zero(), den.into())
    }

    pub fn int(ctx: FieldCtx, n: impl Into<BigInt>) -> Self {
        FieldElem::rational(ctx, n, 1)
    }

    /// `√D`.
    pub fn sqrt_d(ctx: FieldCtx) -> Self {
        FieldElem::new(ctx, BigInt::zero(), BigInt::one(), BigInt::one())
    }

    /// `√Δ`.
    pub fn sqrt_delta(ctx: FieldCtx) -> Self {
        let k = if ctx.is_one_mod_four() { 1 } else { 2 };
        FieldElem::new(ctx, BigInt::zero(), BigInt::from(k), BigInt::one())
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> FieldElem {
        FieldElem::new(self.ctx, self.a.clone(), -&self.b, self.den.clone())
    }

    /// Sign of the first embedding.
    pub fn signum(&self) -> i8 {
        ord_to_i8(sign_sqrt_form(&self.a, &self.b, self.ctx.d))
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn recip(&self) -> FieldElem {
        assert!(!self.is_zero(), "reciprocal of zero");
        // den / (a + b√D) = den (a − b√D) / (a² − D b²)
        let n = &self.a * &self.a - &self.b * &self.b * self.ctx.d;
        FieldElem::new(self.ctx, &self.den * &self.a, -&self.den * &self.b, n)
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        (a + b * (self.ctx.d as f64).sqrt()) / den
    }

    /// The element as a ring element, if integral.
    pub fn to_quad_int(&self) -> Option<QuadInt> {
        let (a, b) = if self.den.is_one() {
            (self.a.clone(), self.b.clone())
        } else if self.den == BigInt::from(2) && self.ctx.is_one_mod_four() {
            if (&self.a - &self.b).is_odd() {
                return None;
            }
            // (A + B√D)/2 = (A − B)/2 + B·ω
            return Some(QuadInt::new(self.ctx, (&self.a - &self.b) / 2, self.b.clone()));
        } else {
            return None;
        };
        self.ctx.from_sqrt_form(a, b)
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem[D={}]({})", self.ctx.d, self)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_sqrt_form(f, &self.a, &self.b, &self.den, self.ctx.d)
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.ctx != other.ctx {
            return None;
        }
        Some(match (self - other).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        })
    }
}

impl Add<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn add(self, o: &FieldElem) -> FieldElem {
        assert_eq!(self.ctx, o.ctx, "field elements from different fields");
        FieldElem::new(
            self.ctx,
            &self.a * &o.den + &o.a * &self.den,
            &self.b * &o.den + &o.b * &self.den,
            &self.den * &o.den,
        )
    }
}

impl Sub<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn sub(self, o: &FieldElem) -> FieldElem {
        self + &(-o)
    }
}

impl Mul<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn mul(self, o: &FieldElem) -> FieldElem {
        assert_eq!(self.ctx, o.ctx, "field elements from different fields");
        FieldElem::new(
            self.ctx,
            &self.a * &o.a + &self.b * &o.b * self.ctx.d,
            &self.a * &o.b + &self.b * &o.a,
            &self.den * &o.den,
        )
    }
}

impl std::ops::Div<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &FieldElem) -> FieldElem {
        self * &o.recip()
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(self.ctx, -&self.a, -&self.b, self.den.clone())
    }
}
