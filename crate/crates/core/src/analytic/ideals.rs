//! Principal ideals of bounded norm, canonical generators and the class
//! number by reduced cycles.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::contfrac::{CFExpansion, Surd};
use crate::error::{Error, Result};
use crate::quadfield::{Embedding, FieldCtx, QuadInt};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalIdealRecord {
    pub norm: u64,
    /// Canonical generator, see [`canonical_generator`].
    pub generator: QuadInt,
    pub primitive: bool,
    pub neg_norm_generator: bool,
}

/// All principal ideals of norm `≤ x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealList {
    pub d: i64,
    pub x: u64,
    pub records: Vec<PrincipalIdealRecord>,
}

impl IdealList {
    pub fn build(cf: &CFExpansion, x: u64) -> Result<IdealList> {
        let ctx = cf.ctx();
        Ok(IdealList { d: ctx.d(), x, records: enumerate_principal_ideals(ctx, cf, x)? })
    }

    /// Errors unless every norm below `√Δ` is covered.
    pub fn require_covering_sqrt_delta(&self, ctx: FieldCtx) -> Result<()> {
        let need = crate::arith::isqrt_u64(ctx.delta() as u64);
        if self.d != ctx.d() {
            return Err(Error::ContextMismatch(self.d, ctx.d()));
        }
        if self.x < need {
            return Err(Error::MissingIdealData(format!(
                "list for D={} stops at {}, needs {need}",
                self.d, self.x
            )));
        }
        Ok(())
    }
}

/// Whether `ν > 0` satisfies `ν ≥ |ν'|`.
fn ratio_at_least_one(nu: &QuadInt) -> bool {
    if nu.sign_embedding(Embedding::Second) >= 0 {
        !nu.b().is_negative()
    } else {
        !nu.trace().is_negative()
    }
}

/// The associate `ν = ±ε₀^k·μ` with `ν > 0` and `1 ≤ ν/|ν'| < ε₀²`.
pub fn canonical_generator(cf: &CFExpansion, mu: &QuadInt) -> QuadInt {
    if mu.is_zero() {
        return mu.clone();
    }
    let eps0 = cf.eps0();
    let inv = eps0.conj().scale(&eps0.norm());
    let mut nu = if mu.sign_embedding(Embedding::First) < 0 { -mu } else { mu.clone() };
    let (l1, l2) = nu.ln_abs_embeddings();
    let step = 2.0 * eps0.ln_abs_embeddings().0;
    let k = ((l1 - l2) / step).floor();
    if k.is_finite() && k != 0.0 {
        let e = k.abs() as u32;
        nu = if k > 0.0 { &nu * inv.pow(e) } else { &nu * eps0.pow(e) };
    }
    while !ratio_at_least_one(&nu) {
        nu = &nu * eps0;
    }
    loop {
        let down = &nu * &inv;
        if ratio_at_least_one(&down) {
            nu = down;
        } else {
            break;
        }
    }
    nu
}

/// The cone spanned by `α_i` (inclusive) and `α_{i+2}` (exclusive), with
/// points `x·α_i + y·α_{i+1}`, `x ≥ 1`, `0 ≤ y < u_{i+2} x`, and absolute
/// norm `a x² + b x y − c y²`.
#[derive(Clone, Debug)]
struct Sector {
    i: i64,
    a: i128,
    b: i128,
    c: i128,
    next: i128,
    u: i128,
    neg_norm: bool,
}

fn small(n: BigInt) -> i128 {
    n.to_i128().expect("convergent norms fit in i128")
}

/// Sectors covering one fundamental domain for the action of units on
/// generators with positive first embedding.
fn sectors(cf: &CFExpansion) -> Vec<Sector> {
    let s = cf.s() as i64;
    let mut idx: Vec<i64> = if s % 2 == 1 {
        (-1..=2 * s - 3).step_by(2).collect()
    } else {
        (-1..=s - 3).step_by(2).collect()
    };
    if s % 2 == 0 {
        idx.extend((0..=s - 2).step_by(2));
    }
    idx.into_iter()
        .map(|i| {
            let (al, be) = (cf.alpha(i), cf.alpha(i + 1));
            let sgn = if i.rem_euclid(2) == 1 { 1 } else { -1 };
            Sector {
                i,
                a: small(al.norm().abs()),
                b: sgn * small((al * be.conj()).trace()),
                c: small(be.norm().abs()),
                next: small(cf.alpha(i + 2).norm().abs()),
                u: cf.u((i + 2) as usize) as i128,
                neg_norm: s % 2 == 1 || i.rem_euclid(2) == 0,
            }
        })
        .collect()
}

fn ceil_sqrt(n: i128) -> i128 {
    let r = crate::arith::isqrt_u128(n as u128) as i128;
    if r * r < n {
        r + 1
    } else {
        r
    }
}

impl Sector {
    fn norm_at(&self, x: i128, y: i128) -> i128 {
        self.a * x * x + self.b * x * y - self.c * y * y
    }

    /// Calls `f(x, y, norm)` for every point of norm `≤ bound`.
    fn for_each_point(&self, bound: i128, mut f: impl FnMut(i128, i128, i128)) {
        let m = self.a.min(self.next);
        let mut x = 1i128;
        while x * x * m <= bound {
            let ymax = self.u * x - 1;
            let bx = self.b * x;
            let disc = bx * bx - 4 * self.c * (bound - self.a * x * x);
            let mut emit = |y: i128| {
                let g = self.norm_at(x, y);
                debug_assert!(g >= 1 && g <= bound);
                f(x, y, g);
            };
            if disc < 0 {
                (0..=ymax).for_each(&mut emit);
            } else {
                // norm ≤ bound  ⇔  |2cy − bx| ≥ √disc
                let cs = ceil_sqrt(disc);
                let left = Integer::div_floor(&(bx - cs), &(2 * self.c)).min(ymax);
                let right = Integer::div_ceil(&(bx + cs), &(2 * self.c)).max(left + 1).max(0);
                (0..=left).for_each(&mut emit);
                (right..=ymax).for_each(&mut emit);
            }
            x += 1;
        }
    }
}

/// One record per principal ideal of norm `≤ x`, sorted by norm and then
/// by generator.
pub fn enumerate_principal_ideals(ctx: FieldCtx, cf: &CFExpansion, x: u64) -> Result<Vec<PrincipalIdealRecord>> {
    if ctx != cf.ctx() {
        return Err(Error::ContextMismatch(ctx.d(), cf.ctx().d()));
    }
    let mut out = Vec::new();
    for sec in sectors(cf) {
        let (al, be) = (cf.alpha(sec.i), cf.alpha(sec.i + 1));
        sec.for_each_point(x as i128, |px, py, g| {
            let mu = &al.scale(&BigInt::from(px)) + &be.scale(&BigInt::from(py));
            debug_assert_eq!(mu.norm().abs(), BigInt::from(g));
            out.push(PrincipalIdealRecord {
                norm: g as u64,
                generator: canonical_generator(cf, &mu),
                primitive: px.gcd(&py) == 1,
                neg_norm_generator: sec.neg_norm,
            });
        });
    }
    out.sort_by(|l, r| {
        (l.norm, l.generator.a(), l.generator.b()).cmp(&(r.norm, r.generator.a(), r.generator.b()))
    });
    Ok(out)
}

/// `counts[n]` = number of principal ideals of norm `n`, for `n ≤ x`.
pub fn principal_norm_counts(cf: &CFExpansion, x: u64) -> Vec<u64> {
    let mut counts = vec![0u64; x as usize + 1];
    for sec in sectors(cf) {
        sec.for_each_point(x as i128, |_, _, g| counts[g as usize] += 1);
    }
    counts
}

/// Reduced surds `(b + √Δ)/(2a)`: `0 < b < √Δ`, `√Δ − b < 2a < √Δ + b`,
/// `4a | b² − Δ`.
pub fn reduced_surds(delta: i64) -> Vec<Surd> {
    let r = crate::arith::isqrt_u64(delta as u64) as i64;
    let mut out = Vec::new();
    for b in 1..=r {
        if (b - delta).rem_euclid(2) != 0 {
            continue;
        }
        let m = (delta - b * b) / 4;
        // √Δ − b < 2a  ⇔  2a ≥ r − b + 1;  2a < √Δ + b  ⇔  2a ≤ r + b
        let lo = (r - b + 2) / 2;
        let hi = (r + b) / 2;
        for a in lo.max(1)..=hi {
            if m % a == 0 {
                out.push(Surd { p: b, q: 2 * a, d: delta });
            }
        }
    }
    out
}

/// Number of cycles of reduced surds under the continued fraction step.
pub fn count_reduced_cycles(delta: i64) -> Result<u64> {
    let all: BTreeSet<Surd> = reduced_surds(delta).into_iter().collect();
    let mut seen = HashSet::new();
    let mut cycles = 0;
    for &start in &all {
        if seen.contains(&start) {
            continue;
        }
        cycles += 1;
        let mut cur = start;
        loop {
            seen.insert(cur);
            cur = cur.step().1;
            if !all.contains(&cur) {
                return Err(Error::verification("reduced cycle", format!("Δ={delta}: step left the reduced set at {cur:?}")));
            }
            if cur == start {
                break;
            }
        }
    }
    Ok(cycles)
}

/// Class number `h`.
pub fn class_number(ctx: FieldCtx, cf: &CFExpansion) -> Result<u64> {
    if ctx != cf.ctx() {
        return Err(Error::ContextMismatch(ctx.d(), cf.ctx().d()));
    }
    count_reduced_cycles(ctx.delta())
}

/// Narrow class number `h⁺`.
pub fn narrow_class_number(ctx: FieldCtx, cf: &CFExpansion) -> Result<u64> {
    let h = class_number(ctx, cf)?;
    Ok(if cf.has_negative_norm_unit() { h } else { 2 * h })
}
