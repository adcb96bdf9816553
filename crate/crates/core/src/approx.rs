use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::interval::Interval;

/// A real number known to lie in `[mid - rad, mid + rad]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Approx {
    pub mid: f64,
    pub rad: f64,
}

const REL: f64 = 2.0 * f64::EPSILON;

fn rounding(x: f64) -> f64 {
    x.abs() * REL + f64::MIN_POSITIVE
}

impl Approx {
    pub fn new(mid: f64, rad: f64) -> Self {
        assert!(rad >= 0.0 || rad.is_nan(), "negative radius");
        Approx { mid, rad }
    }

    pub fn exact(x: f64) -> Self {
        Approx { mid: x, rad: 0.0 }
    }

    pub fn from_interval(i: Interval) -> Self {
        let mid = i.mid();
        let rad = (i.hi - mid).max(mid - i.lo);
        Approx { mid, rad: rad + rounding(mid) }
    }

    pub fn to_interval(self) -> Interval {
        Interval::new((self.mid - self.rad).next_down(), (self.mid + self.rad).next_up())
    }

    pub fn lo(&self) -> f64 {
        self.mid - self.rad
    }

    pub fn hi(&self) -> f64 {
        self.mid + self.rad
    }

    pub fn contains(&self, x: f64) -> bool {
        (x - self.mid).abs() <= self.rad
    }

    /// Whether the two enclosures intersect.
    pub fn overlaps(&self, other: &Approx) -> bool {
        (self.mid - other.mid).abs() <= self.rad + other.rad + rounding(self.mid) + rounding(other.mid)
    }

    pub fn widen(self, extra: f64) -> Approx {
        Approx { mid: self.mid, rad: self.rad + extra.abs() }
    }

    pub fn is_positive(&self) -> bool {
        self.mid - self.rad > 0.0
    }

    pub fn ln(self) -> Approx {
        Approx::from_interval(self.to_interval().ln())
    }

    pub fn sqrt(self) -> Approx {
        Approx::from_interval(self.to_interval().sqrt())
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.12} ± {:.2e}", self.mid, self.rad)
    }
}

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        Approx { mid: -self.mid, rad: self.rad }
    }
}

impl Add for Approx {
    type Output = Approx;
    fn add(self, o: Approx) -> Approx {
        let mid = self.mid + o.mid;
        Approx { mid, rad: self.rad + o.rad + rounding(mid) }
    }
}

impl Sub for Approx {
    type Output = Approx;
    fn sub(self, o: Approx) -> Approx {
        self + (-o)
    }
}

impl Mul for Approx {
    type Output = Approx;
    fn mul(self, o: Approx) -> Approx {
        let mid = self.mid * o.mid;
        let rad = self.mid.abs() * o.rad + o.mid.abs() * self.rad + self.rad * o.rad;
        Approx { mid, rad: rad + rounding(mid) }
    }
}

impl Div for Approx {
    type Output = Approx;
    fn div(self, o: Approx) -> Approx {
        let d = o.mid.abs() - o.rad;
        assert!(d > 0.0, "division by an enclosure of zero");
        let mid = self.mid / o.mid;
        // |a/b - m| <= (|a - am| + |m| |b - bm|) / |b|
        let rad = (self.rad + mid.abs() * o.rad) / d;
        Approx { mid, rad: rad + rounding(mid) }
    }
}

impl Mul<f64> for Approx {
    type Output = Approx;
    fn mul(self, k: f64) -> Approx {
        self * Approx::exact(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn propagation_contains_truth() {
        let a = Approx::new(2.0, 1e-6);
        let b = Approx::new(3.0, 1e-6);
        let q = (a * b - a) / b;
        assert!(q.contains(4.0 / 3.0));
        assert!(q.rad < 1e-5);
    }

    #[test]
    fn overlap() {
        assert!(Approx::new(1.0, 0.1).overlaps(&Approx::new(1.15, 0.1)));
        assert!(!Approx::new(1.0, 0.01).overlaps(&Approx::new(1.15, 0.01)));
    }
}
