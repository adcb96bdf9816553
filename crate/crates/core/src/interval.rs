//! Outward-rounded interval arithmetic.
//!
//! [`Interval`] is a closed f64 interval; every operation widens the
//! rounded result by one ulp on each side so the true value stays inside.
//! [`DyadicInterval`] holds big-integer endpoints over a power of two and is
//! used where more than 53 bits are needed.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

#[inline]
fn down(x: f64) -> f64 {
    if x.is_finite() {
        x.next_down()
    } else {
        x
    }
}

#[inline]
fn up(x: f64) -> f64 {
    if x.is_finite() {
        x.next_up()
    } else {
        x
    }
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    /// Encloses an integer that may not be exactly representable.
    pub fn from_i64(n: i64) -> Self {
        let f = n as f64;
        if f as i128 == n as i128 {
            Interval::point(f)
        } else {
            Interval::new(down(f), up(f))
        }
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        match n.to_f64() {
            Some(f) if f.is_finite() => {
                if n.bits() <= 53 {
                    Interval::point(f)
                } else {
                    Interval::new(down(f), up(f))
                }
            }
            _ if n.is_negative() => Interval::new(f64::NEG_INFINITY, f64::MIN),
            _ => Interval::new(f64::MAX, f64::INFINITY),
        }
    }

    /// Encloses `sqrt(n)`.
    pub fn sqrt_of_u64(n: u64) -> Self {
        Interval::from_i64(n as i64).sqrt()
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * self.lo + 0.5 * self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval::new(self.lo.min(other.lo), self.hi.max(other.hi))
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0.0
    }

    pub fn is_negative(&self) -> bool {
        self.hi < 0.0
    }

    pub fn sqrt(self) -> Interval {
        let lo = if self.lo <= 0.0 { 0.0 } else { down(self.lo.sqrt()).max(0.0) };
        Interval::new(lo, up(self.hi.max(0.0).sqrt()))
    }

    /// Natural log; libm is not correctly rounded, so two ulps of slack.
    pub fn ln(self) -> Interval {
        assert!(self.lo > 0.0, "ln of non-positive interval");
        let lo = self.lo.ln();
        let hi = self.hi.ln();
        Interval::new(down(down(lo)) - f64::MIN_POSITIVE, up(up(hi)) + f64::MIN_POSITIVE)
    }

    pub fn abs(self) -> Interval {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            -self
        } else {
            Interval::new(0.0, (-self.lo).max(self.hi))
        }
    }

    pub fn recip(self) -> Interval {
        Interval::point(1.0) / self
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-self.hi, -self.lo)
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval::new(down(self.lo + o.lo), up(self.hi + o.hi))
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        Interval::new(down(self.lo - o.hi), up(self.hi - o.lo))
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let c = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in c {
            let v = if v.is_nan() { 0.0 } else { v };
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Interval::new(down(lo), up(hi))
    }
}

impl Div for Interval {
    type Output = Interval;
    fn div(self, o: Interval) -> Interval {
        assert!(!o.contains_zero(), "division by interval containing zero");
        let c = [self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi];
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in c {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Interval::new(down(lo), up(hi))
    }
}

impl Add<f64> for Interval {
    type Output = Interval;
    fn add(self, o: f64) -> Interval {
        self + Interval::point(o)
    }
}

impl Mul<f64> for Interval {
    type Output = Interval;
    fn mul(self, o: f64) -> Interval {
        self * Interval::point(o)
    }
}

/// `[lo, hi] / 2^exp` with big-integer endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub exp: u64,
}

impl DyadicInterval {
    pub fn exact(n: BigInt) -> Self {
        DyadicInterval { lo: n.clone(), hi: n, exp: 0 }
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    /// Width as an f64 (rounded up).
    pub fn width(&self) -> f64 {
        let w = &self.hi - &self.lo;
        if w.is_zero() {
            return 0.0;
        }
        let (m, e) = crate::arith::to_scaled_f64(&w);
        up(m * 2f64.powi((e - self.exp as i64) as i32))
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign when the interval excludes zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Outward-rounded f64 enclosure.
    pub fn to_interval(&self) -> Interval {
        let scale = |n: &BigInt| -> (f64, i64) { crate::arith::to_scaled_f64(n) };
        let conv = |n: &BigInt, round_up: bool| -> f64 {
            if n.is_zero() {
                return 0.0;
            }
            let (m, e) = scale(n);
            let v = m * 2f64.powi((e - self.exp as i64) as i32);
            if round_up {
                up(up(v))
            } else {
                down(down(v))
            }
        };
        if self.is_degenerate() && self.exp == 0 && self.lo.bits() <= 53 {
            return Interval::point(self.lo.to_f64().unwrap());
        }
        Interval::new(conv(&self.lo, false), conv(&self.hi, true))
    }
}
