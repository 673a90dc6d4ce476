use curvadd::cover::{
    decide_by_exhaustion, decide_by_hyperplanes, verdict_is_sound, verify_witness,
};
use curvadd::curve::PointSet;
use curvadd::{Caps, FqContext, FqElement};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_points(
    ctx: &FqContext,
    rng: &mut ChaCha8Rng,
    max_len: usize,
) -> Vec<(FqElement, FqElement)> {
    let q = ctx.order();
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            (
                ctx.element_at(rng.gen_range(0..q)),
                ctx.element_at(rng.gen_range(0..q)),
            )
        })
        .collect()
}

fn hyperbola(ctx: &FqContext) -> Vec<(FqElement, FqElement)> {
    ctx.elements()
        .filter(|x| !x.is_zero())
        .map(|x| {
            let y = x.inv().unwrap();
            (x, y)
        })
        .collect()
}

#[test]
fn hyperplane_search_matches_exhaustion() {
    let caps = Caps::default();
    for (p, k) in [(3, 2), (5, 2), (3, 3)] {
        let ctx = FqContext::new(p, k, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let (mut yes, mut no) = (0, 0);
        for _ in 0..40 {
            let pts = PointSet::new(random_points(&ctx, &mut rng, 2 * ctx.order() as usize));
            let fast = decide_by_hyperplanes(&pts, &ctx, &caps).unwrap();
            let slow = decide_by_exhaustion(&pts, &ctx, &caps).unwrap();
            assert_eq!(fast.exists_nonzero, slow.exists_nonzero);
            assert!(verdict_is_sound(&pts, &fast) && verdict_is_sound(&pts, &slow));
            if fast.exists_nonzero {
                yes += 1
            } else {
                no += 1
            }
        }
        assert!(yes > 0 && no > 0, "F_{p}^{k}: only one outcome sampled");
    }
}

#[test]
fn hyperbola_is_never_covered() {
    for (p, k) in [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3), (7, 2)] {
        let ctx = FqContext::new(p, k, None).unwrap();
        let pts = PointSet::new(hyperbola(&ctx));
        assert!(
            !decide_by_hyperplanes(&pts, &ctx, &Caps::default())
                .unwrap()
                .exists_nonzero
        );
    }
}

fn ctx_and_points() -> impl Strategy<Value = (FqContext, Vec<(u64, u64)>, u64)> {
    prop_oneof![
        Just((3u64, 2usize)),
        Just((5, 2)),
        Just((7, 1)),
        Just((3, 3))
    ]
    .prop_flat_map(|(p, k)| {
        let ctx = FqContext::new(p, k, None).unwrap();
        let q = ctx.order();
        (
            Just(ctx),
            prop::collection::vec((0..q, 0..q), 0..(2 * q as usize)),
            1..q,
        )
    })
}

fn to_points(ctx: &FqContext, raw: &[(u64, u64)]) -> Vec<(FqElement, FqElement)> {
    raw.iter()
        .map(|&(x, y)| (ctx.element_at(x), ctx.element_at(y)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn covering_is_monotone((ctx, raw, cut) in ctx_and_points()) {
        let caps = Caps::default();
        let all = to_points(&ctx, &raw);
        let subset: Vec<_> = all.iter().take(cut as usize % (all.len() + 1)).cloned().collect();
        let big = decide_by_hyperplanes(&PointSet::new(all.clone()), &ctx, &caps).unwrap();
        let small_pts = PointSet::new(subset);
        let small = decide_by_hyperplanes(&small_pts, &ctx, &caps).unwrap();
        if big.exists_nonzero {
            prop_assert!(small.exists_nonzero);
            prop_assert!(verify_witness(&small_pts, big.witness_map.as_ref().unwrap()));
        }
    }

    #[test]
    fn covering_survives_scaling_and_swapping((ctx, raw, c) in ctx_and_points()) {
        let caps = Caps::default();
        let c = ctx.element_at(c);
        let pts = to_points(&ctx, &raw);
        let scaled: Vec<_> = pts.iter().map(|(x, y)| (&c * x, &c * y)).collect();
        let swapped: Vec<_> = pts.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
        let base = decide_by_hyperplanes(&PointSet::new(pts), &ctx, &caps).unwrap().exists_nonzero;
        prop_assert_eq!(base, decide_by_hyperplanes(&PointSet::new(scaled), &ctx, &caps).unwrap().exists_nonzero);
        prop_assert_eq!(base, decide_by_hyperplanes(&PointSet::new(swapped), &ctx, &caps).unwrap().exists_nonzero);
    }
}
