use obstruct::arith::{is_squarefree, kronecker};
use obstruct::cup_obstruct::{triple_cup, triple_cup_complement};
use obstruct::quad_field::{reduced_forms, ImagQuadField, QuadForm};
use proptest::prelude::*;

fn odd_positive() -> impl Strategy<Value = i64> {
    (0i64..50_000).prop_map(|n| 2 * n + 1)
}

fn squarefree_negative(max: i64) -> impl Strategy<Value = i64> {
    (1..max).prop_filter_map("not squarefree", |n| is_squarefree(-n).then_some(-n))
}

proptest! {
    #[test]
    fn kronecker_is_multiplicative_in_the_numerator(a in -10_000i64..10_000, b in -10_000i64..10_000, n in odd_positive()) {
        prop_assert_eq!(
            kronecker(a * b, n).unwrap(),
            kronecker(a, n).unwrap() * kronecker(b, n).unwrap()
        );
    }

    #[test]
    fn jacobi_reciprocity(m in odd_positive(), n in odd_positive()) {
        prop_assume!(m > 1 && n > 1 && obstruct::arith::gcd(m as u64, n as u64) == 1);
        let sign = if (m % 4 == 3) && (n % 4 == 3) { -1 } else { 1 };
        prop_assert_eq!(kronecker(m, n).unwrap() * kronecker(n, m).unwrap(), sign);
    }

    #[test]
    fn composition_respects_discriminant_and_inverse(m in squarefree_negative(200_000), i in 0usize..64, j in 0usize..64) {
        let k = ImagQuadField::new(m).unwrap();
        let d = k.discriminant();
        prop_assume!(d.unsigned_abs() <= 1_000_000);
        let forms = reduced_forms(d).unwrap();
        let f = forms[i % forms.len()];
        let g = forms[j % forms.len()];
        let fg = f.compose(&g);
        prop_assert!(fg.is_reduced());
        prop_assert_eq!(fg.discriminant(), d);
        prop_assert_eq!(fg.compose(&g.inverse()), f);
        prop_assert_eq!(f.compose(&f.inverse()), QuadForm::identity(d));
    }

    #[test]
    fn triple_cup_is_independent_of_generator(m in squarefree_negative(10_000_000), i in 0usize..256, j in 0usize..256) {
        let k = ImagQuadField::new(m).unwrap();
        let classes = k.h1_classes();
        prop_assume!(!classes.is_empty());
        let x = classes[i % classes.len()];
        let y = classes[j % classes.len()];
        prop_assert_eq!(
            triple_cup(&k, &x, &y).unwrap().parity,
            triple_cup_complement(&k, &x, &y).unwrap().parity
        );
    }

    #[test]
    fn class_group_two_rank_is_genus_rank(m in squarefree_negative(1_000_000)) {
        let k = ImagQuadField::new(m).unwrap();
        let cg = k.class_group().unwrap();
        prop_assert_eq!(cg.two_rank(), k.genus_two_rank());
        prop_assert_eq!(cg.invariants.iter().product::<u64>(), cg.order);
    }
}
