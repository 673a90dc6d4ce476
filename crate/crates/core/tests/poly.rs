use curvadd::poly::{parse_bipoly, CoeffField, RationalFunction, Rationals, UniPoly};
use curvadd::{BigRational, FqContext};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 0..6)
}

fn rf(num: &[i64], den: &[i64]) -> Option<RationalFunction<Rationals>> {
    RationalFunction::new(
        UniPoly::from_ints(Rationals, num),
        UniPoly::from_ints(Rationals, den),
    )
    .ok()
}

fn is_canonical(f: &RationalFunction<Rationals>) -> bool {
    let monic = f
        .den()
        .leading()
        .is_some_and(|c| *c == BigRational::from_integer(1.into()));
    let coprime = f.num().gcd(f.den()).degree().finite() == Some(0);
    monic && (coprime || f.is_zero())
}

proptest! {
    #[test]
    fn divmod_reconstructs(a in small_poly(), b in small_poly()) {
        let a = UniPoly::from_ints(Rationals, &a);
        let b = UniPoly::from_ints(Rationals, &b);
        match a.div_rem(&b) {
            Err(_) => prop_assert!(b.is_zero()),
            Ok((q, r)) => {
                prop_assert_eq!(&(&q * &b) + &r, a);
                prop_assert!(r.is_zero() || r.degree() < b.degree());
            }
        }
    }

    #[test]
    fn divmod_over_finite_field(a in prop::collection::vec(0i64..5, 0..7), b in prop::collection::vec(0i64..5, 1..5)) {
        let ctx = FqContext::new(5, 2, None).unwrap();
        let a = UniPoly::from_ints(ctx.clone(), &a);
        let b = UniPoly::from_ints(ctx, &b);
        if let Ok((q, r)) = a.div_rem(&b) {
            prop_assert_eq!(&(&q * &b) + &r, a);
        }
    }

    #[test]
    fn rational_functions_stay_canonical(
        n1 in small_poly(), d1 in small_poly(), n2 in small_poly(), d2 in small_poly()
    ) {
        let (Some(x), Some(y)) = (rf(&n1, &d1), rf(&n2, &d2)) else { return Ok(()) };
        for r in [&x + &y, &x - &y, &x * &y] {
            prop_assert!(is_canonical(&r), "{}", r);
        }
        if let Ok(q) = x.checked_div(&y) {
            prop_assert!(is_canonical(&q));
            prop_assert_eq!(&q * &y, x.clone());
        }
        prop_assert_eq!(&(&x + &y) - &y, x);
    }

    #[test]
    fn equal_fractions_have_equal_forms(n in small_poly(), d in small_poly(), s in small_poly()) {
        let (Some(a), Some(b)) = (rf(&n, &d), {
            let sp = UniPoly::from_ints(Rationals, &s);
            if sp.is_zero() { None } else {
                RationalFunction::new(
                    &UniPoly::from_ints(Rationals, &n) * &sp,
                    &UniPoly::from_ints(Rationals, &d) * &sp,
                ).ok()
            }
        }) else { return Ok(()) };
        prop_assert_eq!(a, b);
    }

    #[test]
    fn parse_render_is_identity(terms in prop::collection::vec(((0u32..4, 0u32..4), 0u64..9), 0..6)) {
        let ctx = FqContext::new(3, 2, None).unwrap();
        let text: Vec<String> = terms
            .iter()
            .map(|((i, j), c)| format!("({})*x^{i}*y^{j}", ctx.element_at(*c)))
            .collect();
        let text = if text.is_empty() { "0".to_string() } else { text.join(" + ") };
        let f = parse_bipoly(&text, &ctx).unwrap();
        let rendered = f.to_string();
        let g = parse_bipoly(&rendered, &ctx).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(g.to_string(), rendered);
    }
}

#[test]
fn rational_field_is_exact() {
    let q = Rationals;
    let third = q.inv(&q.from_int(3)).unwrap();
    assert_eq!(q.mul(&third, &q.from_int(3)), q.one());
    assert!(q.inv(&q.zero()).is_none());
}
