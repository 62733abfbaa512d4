//! Randomised invariants of the arithmetic and of the Grothendieck-group maps.

use std::sync::Arc;

use modjl::chars::{decompose, recombine};
use modjl::classfn::Group;
use modjl::jl::{jl_basis, jl_star, pairing, GrothElt};
use modjl::scalars::{CycInt, CycRing};
use modjl::FieldCtx;
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Arc<FieldCtx>> {
    prop::sample::select(vec![(2u32, 1u32), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)])
        .prop_map(|(p, f)| FieldCtx::new(p, f).unwrap())
}

fn poly(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, 0..=len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn teichmuller_is_multiplicative(ctx in field(), s in 0u32..1000, t in 0u32..1000) {
        let (x, y) = (ctx.gamma_pow(s as i64), ctx.gamma_pow(t as i64));
        prop_assert_eq!(ctx.teich(ctx.mul(x, y)).unwrap(), &ctx.teich(x).unwrap() * &ctx.teich(y).unwrap());
    }

    #[test]
    fn frobenius_fixes_exactly_k(ctx in field(), t in 0u32..1000) {
        let x = ctx.gamma_pow(t as i64);
        prop_assert_eq!(ctx.frobenius(x) == x, ctx.in_k(x));
        prop_assert_eq!(ctx.frobenius(ctx.frobenius(x)), x);
    }

    #[test]
    fn reduction_is_idempotent(n in 1usize..40, a in poly(90)) {
        let ring = CycRing::new(n);
        let once = ring.reduce(a);
        prop_assert_eq!(ring.reduce(once.clone()), once);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(n in 2usize..40, a in poly(60), b in poly(60)) {
        let ring = CycRing::new(n);
        let (x, y) = (CycInt::from_poly(&ring, a), CycInt::from_poly(&ring, b));
        for (ell, r) in ring.eval_primes(2) {
            let ex = x.eval_mod(ell, r).unwrap();
            let ey = y.eval_mod(ell, r).unwrap();
            prop_assert_eq!((&x * &y).eval_mod(ell, r).unwrap(), (ex as u128 * ey as u128 % ell as u128) as u64);
            prop_assert_eq!((&x + &y).eval_mod(ell, r).unwrap(), (ex + ey) % ell);
        }
    }

    #[test]
    fn conjugation_is_an_involution(n in 1usize..40, a in poly(60)) {
        let ring = CycRing::new(n);
        let x = CycInt::from_poly(&ring, a);
        prop_assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn decompose_inverts_recombine(ctx in field(), seed in any::<u64>()) {
        let len = Group::Gl2.class_count(&ctx);
        let coeffs: Vec<i64> = (0..len).map(|i| ((seed >> (i % 60)) as i64 % 7) - 3).collect();
        let v = GrothElt::new(&ctx, Group::Gl2, coeffs).unwrap();
        prop_assert_eq!(decompose(&ctx, &recombine(&ctx, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn jl_star_is_adjoint(ctx in field(), e in 0usize..80, s in 0usize..72, k in -4i64..=4) {
        let e = e % ctx.n() as usize;
        let s = s % Group::Gl2.class_count(&ctx);
        let v = GrothElt::unit(&ctx, Group::Lx, e).scale(k);
        let w = GrothElt::unit(&ctx, Group::Gl2, s);
        prop_assert_eq!(
            pairing(&jl_basis(&ctx, &v).unwrap(), &w).unwrap(),
            pairing(&v, &jl_star(&ctx, &w).unwrap()).unwrap()
        );
    }
}
