use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use proptest::prelude::*;

use uqf::analytic::{canonical_generator, kronecker_chi};
use uqf::arith::is_squarefree;
use uqf::indecomp::{is_indecomposable_fast, semiconvergent, norm_semiconvergent_formula};
use uqf::universal::{decompose_indecomposables, eps_power, four_square, unit_reduce, UnitPoly};
use uqf::{CFExpansion, FieldCtx, QuadInt};

fn squarefree_d(hi: i64) -> impl Strategy<Value = i64> {
    (2..=hi).prop_filter("squarefree", |&d| is_squarefree(d as u64))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_laws(d in squarefree_d(500), xs in prop::array::uniform6(-1000i64..1000)) {
        let ctx = FieldCtx::new(d).unwrap();
        let x = ctx.elem(xs[0], xs[1]);
        let y = ctx.elem(xs[2], xs[3]);
        let z = ctx.elem(xs[4], xs[5]);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        prop_assert_eq!((&x * &y).conj(), x.conj() * y.conj());
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(&x + &x.conj(), ctx.int(x.trace()));
        prop_assert_eq!(&x * &x.conj(), ctx.int(x.norm()));
        prop_assert_eq!(&x - &x, ctx.zero());
    }

    #[test]
    fn json_round_trip(d in squarefree_d(10_000), a in any::<i64>(), b in any::<i64>()) {
        let ctx = FieldCtx::new(d).unwrap();
        let x = ctx.elem(a, b);
        let s = serde_json::to_string(&x).unwrap();
        let back: QuadInt = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn expansion_invariants(d in squarefree_d(100_000)) {
        let cf = CFExpansion::expand(FieldCtx::new(d).unwrap());
        prop_assert!(cf.check_invariants().is_ok());
        prop_assert!(cf.eps0().is_unit());
        prop_assert_eq!(eps_power(&cf, 1).norm(), BigInt::from(1));
        prop_assert_eq!(&eps_power(&cf, 3) * &eps_power(&cf, -3), cf.ctx().one());
    }

    #[test]
    fn semiconvergent_norms(d in squarefree_d(100_000), k in 0usize..64, rpick in 0u64..1000) {
        let cf = CFExpansion::expand(FieldCtx::new(d).unwrap());
        let odd: Vec<i64> = (-1..cf.max_index()).step_by(2).collect();
        let i = odd[k % odd.len()];
        let r = (rpick % (cf.u((i + 2) as usize) as u64 + 1)) as i64;
        let sc = semiconvergent(&cf, i, r).unwrap();
        prop_assert!(sc.value.is_totally_positive());
        prop_assert_eq!(norm_semiconvergent_formula(&cf, i, r).unwrap(), sc.value.norm());
        prop_assert!(is_indecomposable_fast(&cf, &sc.value).unwrap());
    }

    #[test]
    fn unit_reduction_reevaluates(
        d in prop::sample::select(vec![2i64, 3, 5, 6, 7, 10, 13, 15, 19, 21, 43, 94]),
        terms in prop::collection::vec((-8i64..8, 1u64..500), 1..10),
    ) {
        let cf = CFExpansion::expand(FieldCtx::new(d).unwrap());
        let e = UnitPoly::from_terms(terms);
        let (c, dd, i) = unit_reduce(&cf, &e).unwrap();
        let back = &eps_power(&cf, i).scale(&BigInt::from(c)) + &eps_power(&cf, i + 1).scale(&BigInt::from(dd));
        prop_assert_eq!(back, e.eval(&cf));
    }

    #[test]
    fn decomposition_sums_back(d in squarefree_d(60), a in -8i64..8, b in -8i64..8, c in 1i64..20) {
        let ctx = FieldCtx::new(d).unwrap();
        let cf = CFExpansion::expand(ctx);
        let y = ctx.elem(a, b);
        let x = &(&y * &y) + &ctx.int(c);
        let parts = decompose_indecomposables(&cf, &x).unwrap();
        let total = parts.iter().fold(ctx.zero(), |acc, p| &acc + p);
        prop_assert_eq!(total, x);
        for p in &parts {
            prop_assert!(is_indecomposable_fast(&cf, p).unwrap());
        }
    }

    #[test]
    fn four_squares_sum(n in 0u64..2_000_000_000_000) {
        let t = four_square(n);
        let sum: u128 = t.iter().map(|&x| x as u128 * x as u128).sum();
        prop_assert_eq!(sum, n as u128);
    }

    #[test]
    fn canonical_generator_is_associate(d in squarefree_d(2_000), a in -300i64..300, b in -300i64..300, k in -3i64..3) {
        let ctx = FieldCtx::new(d).unwrap();
        let cf = CFExpansion::expand(ctx);
        let mu = ctx.elem(a, b);
        prop_assume!(!mu.is_zero());
        let g = canonical_generator(&cf, &mu);
        let moved = canonical_generator(&cf, &-(&mu * &eps_power(&cf, k)));
        prop_assert_eq!(&g, &moved);
        prop_assert_eq!(g.norm().abs(), mu.norm().abs());
        prop_assert!(g.div_exact(&mu).is_some_and(|u| u.is_unit()));
    }

    #[test]
    fn character_is_multiplicative(delta in prop::sample::select(vec![5i64, 8, 12, 13, 17, 24, 28, 41, 60, 105, 221, 1001]), m in 1u64..5000, n in 1u64..5000) {
        prop_assert_eq!(
            kronecker_chi(delta, m * n).unwrap(),
            kronecker_chi(delta, m).unwrap() * kronecker_chi(delta, n).unwrap()
        );
    }
}

#[test]
fn big_four_square_sums() {
    let n = BigUint::from(10u32).pow(30) + 7u32;
    let t = uqf::universal::four_square_big(&n);
    assert_eq!(t.iter().map(|x| x * x).sum::<BigUint>(), n);
}
