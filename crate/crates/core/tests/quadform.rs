mod common;

use common::oracle;
use num_traits::Zero;
use proptest::prelude::*;
use salem_core::exact::{rat, Rat, RatMatrix};
use salem_core::places::{hilbert_symbol, Place};
use salem_core::quadform::{
    forms_equivalent, is_locally_isotropic, local_witt_index, QuadForm,
};

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-30i64..=-1, 1i64..=30]
}

fn form(d: &[i64]) -> QuadForm {
    QuadForm::diagonal_ints(d).unwrap()
}

const PRIMES: [u64; 4] = [2, 3, 5, 7];

#[test]
fn hilbert_symbol_matches_solubility_search() {
    for a in [-7i64, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 15] {
        for b in [-11i64, -3, -1, 1, 2, 3, 5, 13] {
            for p in [0u64, 2, 3, 5, 7, 11, 13] {
                let v = if p == 0 { Place::Real } else { Place::Finite(p) };
                assert_eq!(
                    hilbert_symbol(&rat(a), &rat(b), v).unwrap(),
                    oracle::hilbert_bruteforce(a as i128, b as i128, p),
                    "({a}, {b})_{v}"
                );
            }
        }
    }
}

#[test]
fn witt_index_matches_search_on_small_forms() {
    let entries = [-6i64, -3, -2, -1, 1, 2, 3, 5, 10];
    for &a in &entries {
        for &b in &entries {
            for &c in &entries {
                for &d in &entries[..5] {
                    let q = [a, b, c, d];
                    let wide: Vec<i128> = q.iter().map(|&x| x as i128).collect();
                    for p in PRIMES {
                        assert_eq!(
                            local_witt_index(&form(&q), Place::Finite(p)).unwrap(),
                            oracle::witt_index_bruteforce(&wide, p),
                            "{q:?} at {p}"
                        );
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn isotropy_matches_search(d in prop::collection::vec(nonzero(), 2..=5), pi in 0usize..4) {
        let p = PRIMES[pi];
        let wide: Vec<i128> = d.iter().map(|&x| x as i128).collect();
        prop_assert_eq!(
            is_locally_isotropic(&form(&d), Place::Finite(p)).unwrap(),
            oracle::isotropic_diag(&wide, p)
        );
    }

    #[test]
    fn invariants_survive_change_of_basis(
        d in prop::collection::vec(nonzero(), 1..=5),
        entries in prop::collection::vec(-4i64..=4, 25),
    ) {
        let q = form(&d);
        let r = q.rank();
        let rows: Vec<Vec<i64>> = (0..r).map(|i| entries[i * 5..i * 5 + r].to_vec()).collect();
        let g = RatMatrix::from_int_rows(&rows).unwrap();
        prop_assume!(!g.det().unwrap().is_zero());
        let t = q.transform(&g).unwrap();
        prop_assert_eq!(t.det_class(), q.det_class());
        prop_assert_eq!(t.signature(), q.signature());
        prop_assert_eq!(t.hasse().unwrap(), q.hasse().unwrap());
        prop_assert!(forms_equivalent(&q, &t).unwrap());
    }

    #[test]
    fn index_grows_with_hyperbolic_plane(d in prop::collection::vec(nonzero(), 1..=4), pi in 0usize..4) {
        let v = Place::Finite(PRIMES[pi]);
        let q = form(&d);
        let h = form(&[1, -1]);
        prop_assert_eq!(local_witt_index(&q.direct_sum(&h), v).unwrap(), local_witt_index(&q, v).unwrap() + 1);
        let c = Rat::from_integer(d[0].into());
        prop_assert_eq!(local_witt_index(&q.scale(&c).unwrap(), v).unwrap(), local_witt_index(&q, v).unwrap());
    }
}
