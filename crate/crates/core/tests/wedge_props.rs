use eulerian_cert::eulerian::binomial;
use eulerian_cert::wedge::{
    classify, enumerate_solutions, is_solution, lhs_profile, lhs_profile_direct, structural_data,
    CaseLabel, SearchBounds, WeightFunction,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn weight_function() -> impl Strategy<Value = WeightFunction> {
    prop::collection::vec(0u64..4, 1..6)
        .prop_filter("m >= 2", |v| v.iter().sum::<u64>() >= 2)
        .prop_map(|v| WeightFunction::from_dense(&v).unwrap())
}

proptest! {
    #[test]
    fn generating_function_matches_enumeration(m_h in weight_function(), k in 1u64..8) {
        prop_assume!(k <= m_h.m());
        prop_assert_eq!(lhs_profile(&m_h, k), lhs_profile_direct(&m_h, k));
    }

    #[test]
    fn profile_mass_is_binomial(m_h in weight_function(), k in 1u64..8) {
        prop_assume!(k <= m_h.m());
        let mass: BigInt = lhs_profile(&m_h, k).values().sum();
        prop_assert_eq!(mass, binomial(m_h.m() as i64, k as i64));
    }

    #[test]
    fn structural_sum_is_profile_width(m_h in weight_function(), k in 1u64..8) {
        prop_assume!(k <= m_h.m());
        let profile = lhs_profile(&m_h, k);
        let lo = *profile.keys().next().unwrap();
        let hi = *profile.keys().next_back().unwrap();
        let data = structural_data(&m_h, k).unwrap();
        prop_assert_eq!(data.small_n_sum, hi - lo);
        prop_assert_eq!(data.min_weight(), lo);
    }

    #[test]
    fn reflection_and_complement(m_h in weight_function(), k in 1u64..8) {
        prop_assume!(k <= m_h.m());
        let profile = lhs_profile(&m_h, k);
        let mirrored: std::collections::BTreeMap<i64, BigInt> =
            profile.iter().map(|(t, v)| (-t, v.clone())).collect();
        prop_assert_eq!(lhs_profile(&m_h.reflected(), k), mirrored);
        let shift = m_h.first_moment();
        let complement: std::collections::BTreeMap<i64, BigInt> =
            profile.iter().map(|(t, v)| (shift - t, v.clone())).collect();
        prop_assert_eq!(lhs_profile(&m_h, m_h.m() - k), complement);
    }
}

#[test]
fn found_solutions_are_solutions_and_classified() {
    for (n, m_max) in [(2u32, 14u64), (3, 12), (4, 12), (5, 10)] {
        for sol in enumerate_solutions(n, SearchBounds::new(m_max)).unwrap() {
            assert!(is_solution(n, &sol.d, sol.k, &sol.m_h, sol.s));
            let r = sol.reflected();
            assert!(is_solution(n, &r.d, r.k, &r.m_h, r.s));
            let c = sol.complemented();
            assert!(is_solution(n, &c.d, c.k, &c.m_h, c.s));
            assert_ne!(classify(n, &sol), CaseLabel::Unclassified, "{}", sol.to_json());
        }
    }
}

#[test]
fn span_bound_is_not_restrictive() {
    // any solution has span at most n - 1, so a looser bound finds nothing new
    let tight = enumerate_solutions(3, SearchBounds::new(10)).unwrap();
    let loose = enumerate_solutions(3, SearchBounds::new(10).with_span(8)).unwrap();
    assert_eq!(tight, loose);
}
