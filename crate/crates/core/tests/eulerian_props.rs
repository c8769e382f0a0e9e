use eulerian_cert::eulerian::{
    alternating_identity_check, binomial, eulerian, eulerian_closed_form, eulerian_row, factorial,
    is_log_concave, is_palindromic, is_unimodal,
};
use eulerian_cert::hodge::{
    chi_omega, chi_twisted, hodge_tate_multiplicities, tannakian_dimension,
    topological_euler_char, HypersurfaceData,
};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Counts permutations of `0..n` with exactly `q` ascents.
fn ascents_by_brute_force(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n];
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let asc = perm.windows(2).filter(|w| w[0] < w[1]).count();
        counts[asc] += 1;
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return counts;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

#[test]
fn rows_match_permutation_count() {
    for n in 1..=8 {
        let row: Vec<BigInt> = eulerian_row(n as i64).unwrap();
        let brute: Vec<BigInt> = ascents_by_brute_force(n).into_iter().map(BigInt::from).collect();
        assert_eq!(row, brute, "n = {n}");
    }
}

#[test]
fn small_rows() {
    let row = |n| eulerian_row(n).unwrap().iter().map(ToString::to_string).collect::<Vec<_>>();
    assert_eq!(row(3), ["1", "4", "1"]);
    assert_eq!(row(4), ["1", "11", "11", "1"]);
    assert_eq!(row(5), ["1", "26", "66", "26", "1"]);
    assert_eq!(eulerian(5, 5).unwrap(), BigInt::from(0));
    assert_eq!(eulerian(5, -1).unwrap(), BigInt::from(0));
}

proptest! {
    #[test]
    fn row_shape(n in 1i64..70) {
        let row = eulerian_row(n).unwrap();
        prop_assert_eq!(row.iter().sum::<BigInt>(), factorial(n as u64));
        prop_assert!(is_palindromic(&row));
        prop_assert!(is_log_concave(&row));
        prop_assert!(is_unimodal(&row));
    }

    #[test]
    fn closed_form_agrees(n in 1i64..60, q in 0i64..60) {
        prop_assume!(q < n);
        prop_assert_eq!(eulerian_closed_form(n, q).unwrap(), eulerian(n, q).unwrap());
        prop_assert!(alternating_identity_check(n, q));
    }

    #[test]
    fn worpitzky(n in 1i64..25, x in 0i64..12) {
        // x^n = Σ_q A(n, q) C(x + q, n)
        let lhs = BigInt::from(x).pow(n as u32);
        let rhs: BigInt = (0..n).map(|q| eulerian(n, q).unwrap() * binomial(x + q, n)).sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hodge_identities(n in 2u32..11, d in 1u64..21) {
        let h = HypersurfaceData::new(n, d).unwrap();
        for i in 0..n as i64 {
            prop_assert_eq!(chi_twisted(&h, 0, i).unwrap(), chi_omega(&h, i).unwrap());
        }
        let profile = hodge_tate_multiplicities(&h);
        prop_assert_eq!(profile.total(), tannakian_dimension(&h));
        // Σ_i (−1)^i χ(Ω^i) recovers the topological Euler characteristic up to sign
        let alternating: BigInt = (0..n as i64)
            .map(|i| {
                let c = chi_omega(&h, i).unwrap();
                if i % 2 == 0 { c } else { -c }
            })
            .sum();
        let e = topological_euler_char(&h);
        prop_assert!(alternating == e || alternating == -e);
    }
}
