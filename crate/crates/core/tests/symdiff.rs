mod support;

use ellsurf::symdiff::{
    blowup_holomorphy, curve_basis, elliptic_orders, guaranteed_vanishing, hilbert_function, invariant_basis,
    invariant_dim, kummer_tensor_power, m_divide, obstruction_profile, pullback, sakai_check, tensor_power_image,
    Chart, HyperellipticModel, KummerTag, LocalDifferential, MForm, Residual, SymdiffError,
};
use ellsurf::Rational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{kummer_dim, local, r};

#[test]
fn local_obstruction_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..=6 {
        for j in 0..=2 {
            local::check(i, j, 100, &mut rng).unwrap();
        }
    }
}

#[test]
fn obstruction_profile_is_the_least_admissible_degree() {
    for i in 0..=12u32 {
        for j in 0..=8u32 {
            let (n, parity) = obstruction_profile(i, j);
            let lower = i.saturating_sub(2 * j);
            let expect = (lower..).find(|m| m % 2 == i % 2).unwrap();
            assert_eq!((n, parity), (expect, i % 2));
        }
    }
}

#[test]
fn curve_basis_has_riemann_roch_dimension() {
    for g in 2..=5u32 {
        for l in 0..=5u32 {
            for j in 0..=3u32 {
                let deg = i64::from(l) * (2 * i64::from(g) - 2) + 2 * i64::from(j);
                let dim = curve_basis(g, l, j).len() as i64;
                if deg > 2 * i64::from(g) - 2 {
                    assert_eq!(dim, deg - i64::from(g) + 1, "g={g} l={l} j={j}");
                } else if deg == 0 {
                    assert_eq!(dim, 1);
                } else if l == 1 && j == 0 {
                    assert_eq!(dim, i64::from(g));
                }
            }
        }
    }
}

#[test]
fn elliptic_orders_have_size_j() {
    for j in 1..=8 {
        let o = elliptic_orders(j);
        assert_eq!(o.len(), j as usize);
        assert!(!o.contains(&(j - 1)) || j == 1 && o == vec![1]);
    }
}

#[test]
fn sakai_vanishing_small() {
    for i in 1..=6 {
        assert_eq!(sakai_check(2, i).unwrap(), 0, "i={i}");
    }
}

#[test]
fn twisted_spaces_are_not_trivially_empty() {
    let m = HyperellipticModel::standard(2).unwrap();
    assert_eq!(invariant_dim(&m, 0, 0).unwrap(), 1);
    assert!(invariant_dim(&m, 2, 2).unwrap() > 0);
    assert!(!invariant_basis(2, 4, 1).is_empty());
}

#[test]
fn guaranteed_vanishing_is_consistent() {
    let m = HyperellipticModel::standard(2).unwrap();
    for i in 0..=7 {
        for j in 0..=1 {
            if guaranteed_vanishing(2, 6, i, j).unwrap() {
                assert_eq!(invariant_dim(&m, i, j).unwrap(), 0, "i={i} j={j}");
            }
        }
    }
}

#[test]
fn model_rejects_bad_input() {
    assert!(matches!(HyperellipticModel::from_roots(vec![r(0), r(1), r(2), r(3)]), Err(SymdiffError::BadDegree(4))));
    assert!(HyperellipticModel::from_roots(vec![r(0), r(1), r(2), r(3), r(4), r(4)]).is_err());
    assert_eq!(pullback(&LocalDifferential::monomial(r(1), 1, 0, 0, 0), Chart::A), Err(SymdiffError::NotInvariant));
}

#[test]
fn kummer_powers_match_graded_dimensions() {
    for i in 0..=6u32 {
        let max_deg = 2 * i + 6;
        let dims = hilbert_function(&tensor_power_image(i, max_deg), max_deg);
        let expect: Vec<usize> = (0..=max_deg).map(|d| kummer_dim(i, d)).collect();
        assert_eq!(dims, expect, "i={i}");
        let tag = kummer_tensor_power(i).unwrap();
        let want = if i % 2 == 0 {
            KummerTag { ideal_exponent: i / 2, residual: Residual::Trivial }
        } else {
            KummerTag { ideal_exponent: i / 2, residual: Residual::F }
        };
        assert_eq!(tag, want);
    }
}

fn invariant_local(i: u32) -> impl Strategy<Value = LocalDifferential> {
    proptest::collection::vec((0u32..=4, 0u32..=4, 0u32..=i, -3i64..=3), 1..6).prop_map(move |terms| {
        let mut w = LocalDifferential::zero(i);
        for (a, b, l, c) in terms {
            // fix parity by bumping z₁
            let a = if (a + b + i).is_multiple_of(2) { a } else { a + 1 };
            w.add_term(a, b, l, r(c));
        }
        w
    })
}

proptest! {
    #[test]
    fn charts_are_exchanged_by_swapping(w in (0u32..=5).prop_flat_map(invariant_local)) {
        prop_assert_eq!(pullback(&w, Chart::A).unwrap(), pullback(&w.swapped(), Chart::B).unwrap());
        prop_assert_eq!(blowup_holomorphy(&w).unwrap(), blowup_holomorphy(&w.swapped()).unwrap());
    }

    #[test]
    fn m_divide_inverts_multiplication(w in invariant_local(2), t in 0u32..=3) {
        let prod = w.mul(&MForm.power(t));
        prop_assert_eq!(m_divide(&prod, t), Some(w.clone()));
        if let Some(eta) = m_divide(&w, 1) {
            prop_assert_eq!(eta.mul(&MForm.as_differential()), w);
        }
    }

    #[test]
    fn m_multiples_are_holomorphic(w in invariant_local(1), t in 1u32..=3) {
        // M pulls back to p·dq, so any M-multiple whose cofactor has order
        // at least its own symmetric degree stays holomorphic
        let shifted = w.mul(&LocalDifferential::monomial(r(1), 1, 1, 0, 0));
        let prod = shifted.mul(&MForm.power(t));
        prop_assert!(blowup_holomorphy(&prod).unwrap());
    }

    #[test]
    fn sakai_vanishing_is_independent_of_the_roots(
        roots in proptest::sample::subsequence((-6i64..=6).collect::<Vec<_>>(), 6),
        i in 1u32..=4,
    ) {
        let m = HyperellipticModel::from_roots(roots.into_iter().map(|x| Rational::new(x.into(), 2.into())).collect()).unwrap();
        prop_assert_eq!(invariant_dim(&m, i, 0).unwrap(), 0);
    }
}
