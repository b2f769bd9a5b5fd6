use proptest::prelude::*;
use salem_core::exact::{rat_to_f64, Rat, RatMatrix, UniPoly};
use salem_core::exhibitor::{exhibit_one, exhibit_on_form, integralize, preserves, transfer_form};
use salem_core::polyalg::salem_context;
use salem_core::quadform::{forms_equivalent, QuadForm};
use salem_core::realizer::{bf_existence_check, certify, enumerate_a_sets};

fn poly(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

fn salem_polys() -> [UniPoly; 2] {
    [poly(&[1, -3, 1]), poly(&[1, -1, -1, -1, 1])]
}

fn rational(max_den: i64) -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=max_den).prop_map(|(a, b)| Rat::new(a.into(), b.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn integralize_on_rational_conjugates(
        which in 0usize..2,
        entries in prop::collection::vec(rational(12), 16),
    ) {
        let f = &salem_polys()[which];
        let ctx = salem_context(f, f.degree() + 1).unwrap();
        let (gram, c) = transfer_form(&ctx, &UniPoly::one()).unwrap();
        let r = gram.rows();
        let h = RatMatrix::new(r, r, entries[..r * r].to_vec()).unwrap();
        prop_assume!(h.det().map(|d| d != Rat::from_integer(0.into())).unwrap_or(false));
        let t = &(&h.inverse().unwrap() * &c) * &h;
        let q = QuadForm::new(gram).unwrap().transform(&h).unwrap();
        let out = integralize(&t, &q).unwrap();
        prop_assert!(out.t.is_integral());
        prop_assert!(out.q.gram().is_integral());
        prop_assert!(preserves(&out.t, out.q.gram()));
        prop_assert_eq!(out.t.char_poly().unwrap(), f.clone());
        prop_assert!(forms_equivalent(&q, &out.q).unwrap());
        let again = integralize(&out.t, &out.q).unwrap();
        prop_assert_eq!(again.t, out.t);
        prop_assert_eq!(again.q, out.q);
    }
}

#[test]
fn witnesses_satisfy_their_existence_conditions() {
    for (f, n) in [(poly(&[1, -3, 1]), 2), (poly(&[1, -3, 1]), 3), (poly(&[1, -1, -1, -1, 1]), 3), (poly(&[1, -3, 1]), 5)] {
        let ctx = salem_context(&f, n).unwrap();
        let w = exhibit_one(&ctx, &UniPoly::one()).unwrap();
        assert!(preserves(&w.gamma, w.q.gram()));
        assert_eq!(w.char_poly, ctx.full_char_poly());
        let rep = bf_existence_check(&ctx, &w.q).unwrap();
        assert!(rep.pass, "n = {n} {:?} {rep:?}", w.q);
        let lambda = w.length.ell.exp();
        let (lo, hi) = (rat_to_f64(&ctx.certificate.lambda_lo), rat_to_f64(&ctx.certificate.lambda_hi));
        assert!(lambda > lo - 1e-10 && lambda < hi + 1e-10);
    }
}

#[test]
fn certified_forms_carry_explicit_isometries() {
    let ctx = salem_context(&poly(&[1, -3, 1]), 2).unwrap();
    for a in enumerate_a_sets(&ctx, 3).unwrap() {
        let cert = certify(&ctx, &a).unwrap();
        let w = exhibit_on_form(&ctx, &cert.q).unwrap();
        assert!(preserves(&w.gamma, w.q.gram()));
        assert!(w.gamma.is_integral());
        assert!(forms_equivalent(&w.q, &cert.q).unwrap());
        assert_eq!(w.class_key, cert.class_key().unwrap());
        assert!(bf_existence_check(&ctx, &w.q).unwrap().pass);
    }
}
