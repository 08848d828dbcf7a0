use irrep_core::classical::{form_condition, ipq, ComplexMatrix, QuaternionMatrix};
use irrep_core::commutant::{analyze_commutant, decompose_endomorphism};
use irrep_core::forms::{invariant_forms, riesz_endomorphism, riesz_transfer};
use irrep_core::linalg::{
    characteristic_polynomial, congruence_signature, minimal_polynomial, rat, Rational, RationalMatrix,
};
use irrep_core::rep::{lie_closure_of, parse_representation, Representation};
use irrep_core::zoo::{make, so_pq_basis};
use proptest::prelude::*;

fn matrix(n: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-4i64..=4, n * n)
        .prop_map(move |v| RationalMatrix::from_flat(n, n, v.into_iter().map(rat).collect()).unwrap())
}

fn complex(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    (matrix(n), matrix(n)).prop_map(|(re, im)| ComplexMatrix::new(re, im))
}

fn quaternion(n: usize) -> impl Strategy<Value = QuaternionMatrix> {
    (matrix(n), matrix(n), matrix(n), matrix(n)).prop_map(|(a, b, c, d)| QuaternionMatrix::new([a, b, c, d]))
}

fn weights(k: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-6i64..=6, 1i64..=4), k)
        .prop_map(|v| v.into_iter().map(|(p, q)| Rational::new(p.into(), q.into())).collect())
}

/// Sign changes in the coefficient list, zeros skipped.
fn sign_changes(cs: &[Rational]) -> usize {
    let signs: Vec<bool> = cs.iter().filter(|c| **c != rat(0)).map(|c| *c > rat(0)).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn complex_realification_is_a_lie_homomorphism(x in complex(2), y in complex(2)) {
        prop_assert_eq!(x.bracket(&y).realify(), x.realify().bracket(&y.realify()));
        prop_assert_eq!(x.mul(&y).realify(), &x.realify() * &y.realify());
    }

    #[test]
    fn quaternionic_realification_is_multiplicative(x in quaternion(1), y in quaternion(1)) {
        prop_assert_eq!(x.mul(&y).realify(), &x.realify() * &y.realify());
        prop_assert_eq!(x.mul(&y).to_complex().realify(), &x.to_complex().realify() * &y.to_complex().realify());
    }

    #[test]
    fn lie_closure_is_idempotent(a in matrix(3), b in matrix(3)) {
        let first = lie_closure_of(3, &[a, b]).unwrap();
        let second = lie_closure_of(3, &first.basis).unwrap();
        prop_assert_eq!(first.dim(), second.dim());
        for x in &first.basis {
            for y in &first.basis {
                prop_assert!(first.contains(&x.bracket(y)));
            }
        }
    }

    #[test]
    fn signature_agrees_with_descartes_count(m in matrix(4)) {
        let s = m.symmetric_part();
        let sig = congruence_signature(&s).unwrap();
        let p = characteristic_polynomial(&s).unwrap();
        let cs: Vec<Rational> = (0..=4).map(|k| p.coeff(k)).collect();
        let zeros = cs.iter().take_while(|c| **c == rat(0)).count();
        let flipped: Vec<Rational> = cs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() }).collect();
        prop_assert_eq!((sig.negative, sig.positive, sig.zero), (sign_changes(&flipped), sign_changes(&cs), zeros));
    }

    #[test]
    fn minimal_polynomial_annihilates_and_divides(m in matrix(4)) {
        let mu = minimal_polynomial(&m).unwrap();
        prop_assert!(mu.eval_matrix(&m).is_zero());
        prop_assert!(mu.divides(&characteristic_polynomial(&m).unwrap()));
    }

    #[test]
    fn commutant_elements_reconstruct(w in weights(2), idx in 0usize..3) {
        let (key, params): (&str, &[usize]) = [("u_real", &[0usize, 2][..]), ("conformal_circle", &[3][..]), ("so_complex", &[3][..])][idx];
        let rep = make(key, params).unwrap();
        let comm = analyze_commutant(&rep, true).unwrap();
        let a = RationalMatrix::combination(&w, &comm.basis);
        let d = decompose_endomorphism(&a, &comm).unwrap();
        prop_assert_eq!(d.reconstruct(rep.n), a);
    }

    #[test]
    fn quaternionic_commutant_elements_reconstruct(w in weights(4)) {
        let rep = make("gl1H_right", &[]).unwrap();
        let comm = analyze_commutant(&rep, true).unwrap();
        let a = RationalMatrix::combination(&w, &comm.basis);
        let d = decompose_endomorphism(&a, &comm).unwrap();
        prop_assert_eq!(d.reconstruct(4), a);
    }

    #[test]
    fn riesz_transfer_round_trips(w in weights(4)) {
        let rep = make("sp_quaternionic", &[0, 1]).unwrap();
        let forms = invariant_forms(&rep).unwrap();
        let comm = analyze_commutant(&rep, true).unwrap();
        let a = &forms.sym_basis[0];
        let b = RationalMatrix::combination(&w, &comm.basis);
        let f = riesz_transfer(a, &b).unwrap();
        prop_assert!(forms.contains(&f));
        prop_assert_eq!(riesz_endomorphism(a, &f).unwrap(), b);
    }

    #[test]
    fn so_pq_generators_satisfy_their_condition(p in 0usize..4, q in 0usize..4) {
        prop_assume!(p + q >= 2);
        let eta = ipq(p, q);
        for g in so_pq_basis(p, q) {
            prop_assert!(form_condition(&g, &eta).is_zero());
        }
    }

    #[test]
    fn representation_documents_round_trip(a in matrix(3), w in weights(1)) {
        let rep = Representation::lie_algebra("sample", vec![a.scale(&w[0])]).unwrap();
        let back = parse_representation(&rep.to_document()).unwrap();
        prop_assert_eq!(back, rep);
    }
}

#[test]
fn realified_generators_of_every_complex_entry_close_consistently() {
    // Closing the realified generators must not create new directions: the
    // entries are already Lie algebras.
    for (key, params) in [
        ("u_real", vec![1, 1]),
        ("so_complex", vec![3]),
        ("sp_complex", vec![1]),
        ("o_star", vec![2]),
    ] {
        let rep = make(key, &params).unwrap();
        let closed = lie_closure_of(rep.n, &rep.generators).unwrap();
        assert_eq!(closed.dim(), rep.generators.len(), "{key}");
    }
}
