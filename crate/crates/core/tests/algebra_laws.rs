use albert_core::albert::{jordan_mul, square, trace_form, u_operator};
use albert_core::sample::Sampler;
use albert_core::{AlbertElem, Oct, Scalar};
use proptest::prelude::*;

fn assoc(a: &Oct, b: &Oct, c: &Oct) -> Oct {
    &(&(a * b) * c) - &(a * &(b * c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_text_round_trip(a in -50i64..50, b in -50i64..50, q in 1i64..20) {
        let x = Scalar::new(Scalar::frac(a, q).rational_part().clone(), Scalar::frac(b, q).rational_part().clone());
        let back: Scalar = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn scalar_inverse(seed: u64) {
        let mut s = Sampler::new(seed);
        let x = s.scalar();
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn octonions_are_alternative_not_associative(seed: u64) {
        let mut s = Sampler::new(seed);
        let (a, b, c) = (s.oct(), s.oct(), s.oct());
        // The associator is alternating.
        prop_assert_eq!(assoc(&a, &b, &c), -&assoc(&b, &a, &c));
        prop_assert_eq!(assoc(&a, &b, &c), -&assoc(&a, &c, &b));
        // Moufang: (a b a) c = a (b (a c)).
        prop_assert_eq!(&(&(&a * &b) * &a) * &c, &a * &(&b * &(&a * &c)));
        prop_assert_eq!((&a * &b).norm(), &a.norm() * &b.norm());
    }

    #[test]
    fn albert_is_jordan(seed: u64) {
        let mut s = Sampler::new(seed);
        let (x, y, z) = (s.albert(), s.albert(), s.albert());
        prop_assert_eq!(jordan_mul(&x, &y), jordan_mul(&y, &x));
        let x2 = square(&x);
        prop_assert_eq!(jordan_mul(&jordan_mul(&x2, &y), &x), jordan_mul(&x2, &jordan_mul(&y, &x)));
        // The trace form is associative.
        prop_assert_eq!(trace_form(&jordan_mul(&x, &y), &z), trace_form(&x, &jordan_mul(&y, &z)));
    }

    #[test]
    fn u_operator_fundamental_formula_at_identity(seed: u64) {
        let mut s = Sampler::new(seed);
        let x = s.albert();
        prop_assert_eq!(u_operator(&x, &AlbertElem::identity()), x.clone());
        prop_assert_eq!(u_operator(&AlbertElem::identity(), &x), square(&x));
    }
}
