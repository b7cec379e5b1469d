use janowski_core::classes::{membership_residual, ClassKind, ClassSpec, SchwarzSpec};
use janowski_core::verify::{check_member_bounds, CheckOptions};
use janowski_core::{classes, ratio, Rational};
use proptest::prelude::*;

fn schwarz() -> impl Strategy<Value = SchwarzSpec> {
    (1u32..=3, -7i64..=7, any::<bool>(), prop::sample::select(vec![1i8, -1])).prop_map(|(j, a, e, sign)| {
        if e {
            SchwarzSpec::blaschke(j, ratio(a, 8), sign)
        } else {
            SchwarzSpec::monomial(j, sign)
        }
    })
}

/// `-1 <= B <= 1 < A <= 5`
fn generalized() -> impl Strategy<Value = (Rational, Rational)> {
    (-4i64..=4, 1i64..=16).prop_map(|(b, a)| (ratio(4 + a, 4), ratio(b, 4)))
}

fn assert_passes(spec: &ClassSpec, w: &SchwarzSpec, n: usize) -> Result<(), TestCaseError> {
    let r = check_member_bounds(spec, w, n, &CheckOptions::default()).unwrap();
    let fails: Vec<_> = r.failures().map(|c| (c.id.clone(), c.witness.clone())).collect();
    prop_assert!(fails.is_empty(), "{:?}", fails);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn starlike_members_obey_the_bounds((a, b) in generalized(), w in schwarz()) {
        assert_passes(&ClassSpec::new(ClassKind::Starlike, a, b), &w, 8)?;
    }

    #[test]
    fn meromorphic_members_obey_the_bounds((a, b) in generalized(), w in schwarz()) {
        assert_passes(&ClassSpec::new(ClassKind::MeromorphicStarlike, a, b), &w, 6)?;
    }

    #[test]
    fn convex_members_obey_the_bounds((a, b) in generalized(), w in schwarz()) {
        assert_passes(&ClassSpec::new(ClassKind::Convex, a, b), &w, 6)?;
    }

    #[test]
    fn convex_beta_members_obey_the_bounds(beta in 5i64..=16, w in schwarz()) {
        assert_passes(&ClassSpec::from_beta(ClassKind::Convex, &ratio(beta, 4)), &w, 8)?;
    }

    #[test]
    fn noshiro_members_obey_the_bounds(b in -4i64..=3, w in schwarz()) {
        assert_passes(&ClassSpec::new(ClassKind::Noshiro, ratio(1, 1), ratio(b, 4)), &w, 8)?;
    }

    #[test]
    fn members_satisfy_their_defining_relation((a, b) in generalized(), w in schwarz()) {
        for kind in [ClassKind::Starlike, ClassKind::Convex] {
            let spec = ClassSpec::new(kind, a.clone(), b.clone());
            let ws = w.series(7).unwrap();
            let f = classes::member_generic(kind, &a, &b, &ws, 7).unwrap();
            let res = membership_residual(&spec, &f, &ws).unwrap();
            prop_assert!(res.coeffs().iter().all(|c| *c == Rational::from_integer(0.into())));
        }
    }
}
