use newton_schur::factor::{linear_factors_over, linear_factor_poly};
use newton_schur::newton::{
    brute_count_alternatives, build_alternative_pair, degree_of_extension, newton_poly,
    shortcut_identity, verify_newton_identity, DegreeMode, IdentityMode, TowerParams,
};
use newton_schur::schur::{
    inverted_transform, r_poly, schur_bialternant, t_poly, vandermonde, ExponentPair,
};
use newton_schur::{make_field, Field, GaloisField, LinearForm, MultiPoly, Rationals, Var};
use proptest::prelude::*;

type Terms = Vec<(i64, [u32; 3])>;

fn terms(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec((-4i64..=4, prop::array::uniform3(0..=max_deg)), 0..=max_terms)
}

fn poly<K: Field>(f: &K, t: &Terms) -> MultiPoly<K> {
    MultiPoly::from_int_terms(f, t.iter().copied())
}

fn f5() -> GaloisField {
    make_field(5, 1).unwrap()
}

fn f9() -> GaloisField {
    make_field(3, 2).unwrap()
}

/// A small field chosen by index.
fn small_field(i: usize) -> GaloisField {
    let (p, r) = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3)][i % 7];
    make_field(p, r).unwrap()
}

fn elem(f: &GaloisField, i: u64) -> <GaloisField as Field>::Elem {
    f.element_at(i % f.order())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_over_rationals(a in terms(3, 5), b in terms(3, 5), c in terms(3, 5)) {
        let q = Rationals;
        let (a, b, c) = (poly(&q, &a), poly(&q, &b), poly(&q, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(&q), a.clone());
    }

    #[test]
    fn ring_axioms_over_f9(a in terms(3, 5), b in terms(3, 5), c in terms(3, 5), shift in 0u64..9) {
        let f = f9();
        let g = f.generator();
        let a = poly(&f, &a).scalar_mul(&f.pow(&g, shift));
        let (b, c) = (poly(&f, &b), poly(&f, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &a.neg(), MultiPoly::zero(&f));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in terms(3, 4), b in terms(3, 4)) {
        let q = Rationals;
        let (a, b) = (poly(&q, &a), poly(&q, &b));
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication_mod_p(a in terms(3, 4), b in terms(3, 4), fi in 0usize..7) {
        let f = small_field(fi);
        let (a, b) = (poly(&f, &a), poly(&f, &b));
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in terms(3, 4), b in terms(3, 4), cx in -5i64..5, cy in -5i64..5) {
        let q = Rationals;
        let (a, b) = (poly(&q, &a), poly(&q, &b));
        let form = LinearForm::new(q.from_int(cx), q.from_int(cy));
        let s = |p: &MultiPoly<Rationals>| p.substitute(Var::Z, &form).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        prop_assert_eq!(s(&a).degree_in(Var::Z).unwrap_or(0), 0);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in terms(4, 5), b in terms(4, 5), pt in prop::array::uniform3(0u64..9)) {
        let f = f9();
        let (a, b) = (poly(&f, &a), poly(&f, &b));
        let pt = pt.map(|i| elem(&f, i));
        prop_assert_eq!((&a * &b).evaluate(&pt), f.mul(&a.evaluate(&pt), &b.evaluate(&pt)));
        prop_assert_eq!((&a + &b).evaluate(&pt), f.add(&a.evaluate(&pt), &b.evaluate(&pt)));
    }

    #[test]
    fn polynomial_frobenius(a in terms(3, 4), fi in 0usize..7) {
        // f^p = (coefficients to the p) evaluated at X^p, Y^p, Z^p
        let f = small_field(fi);
        let a = poly(&f, &a).scalar_mul(&f.generator());
        let p = f.p;
        let lhs = a.try_pow(p).unwrap();
        let rhs = a.map_coefficients(|c| f.frobenius(c, 1)).inflate(p as u32).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_partials_commute(a in terms(5, 6)) {
        let q = Rationals;
        let a = poly(&q, &a);
        for (u, v) in [(Var::X, Var::Y), (Var::X, Var::Z), (Var::Y, Var::Z)] {
            prop_assert_eq!(
                a.partial_derivative(u).partial_derivative(v),
                a.partial_derivative(v).partial_derivative(u)
            );
        }
    }

    #[test]
    fn leibniz_rule(a in terms(3, 4), b in terms(3, 4)) {
        let f = f5();
        let (a, b) = (poly(&f, &a), poly(&f, &b));
        for v in Var::ALL {
            let lhs = (&a * &b).partial_derivative(v);
            let rhs = &(&a.partial_derivative(v) * &b) + &(&a * &b.partial_derivative(v));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn text_and_json_round_trip(a in terms(4, 6), fi in 0usize..7, shift in 0u64..8) {
        let f = small_field(fi);
        let a = poly(&f, &a).scalar_mul(&f.pow(&f.generator(), shift));
        prop_assert_eq!(MultiPoly::parse(&f, &a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(MultiPoly::from_json(&f, &a.to_json()).unwrap(), a.clone());
        let q = Rationals;
        let b = MultiPoly::from_int_terms(&q, [(-3, [1, 2, 0]), (7, [0, 0, 4])]);
        prop_assert_eq!(MultiPoly::parse(&q, &b.to_string()).unwrap(), b);
    }

    #[test]
    fn field_frobenius_is_a_ring_automorphism(i in 0u64..4096, j in 0u64..4096, k in 0u64..6, fi in 0usize..7) {
        let f = small_field(fi);
        let (x, y) = (elem(&f, i), elem(&f, j));
        prop_assert_eq!(f.frobenius(&f.add(&x, &y), k), f.add(&f.frobenius(&x, k), &f.frobenius(&y, k)));
        prop_assert_eq!(f.frobenius(&f.mul(&x, &y), k), f.mul(&f.frobenius(&x, k), &f.frobenius(&y, k)));
        prop_assert_eq!(f.frobenius(&x, f.r as u64), x.clone());
        prop_assert_eq!(f.frobenius(&x, 1), f.pow(&x, f.p));
        if !f.is_zero(&x) {
            prop_assert!(f.is_one(&f.mul(&x, &f.inv(&x).unwrap())));
        }
    }

    #[test]
    fn subfield_membership_matches_frobenius(i in 0u64..4096, fi in 0usize..7) {
        let f = small_field(fi);
        let x = elem(&f, i);
        for m in 1..=f.r {
            if f.r % m == 0 {
                prop_assert_eq!(f.in_subfield(&x, m).unwrap(), f.frobenius(&x, m as u64) == x);
            } else {
                prop_assert!(f.in_subfield(&x, m).is_err());
            }
        }
    }

    #[test]
    fn roots_of_unity_form_a_group(fi in 0usize..7, pick in 0usize..64) {
        let f = small_field(fi);
        let q1 = f.order() - 1;
        let divisors: Vec<u64> = (1..=q1).filter(|n| q1 % n == 0).collect();
        let n = divisors[pick % divisors.len()];
        let roots = f.roots_of_unity(n).unwrap();
        prop_assert_eq!(roots.len() as u64, n);
        for a in &roots {
            prop_assert!(f.is_one(&f.pow(a, n)));
            for b in &roots {
                prop_assert!(roots.contains(&f.mul(a, b)));
            }
        }
    }

    #[test]
    fn t_times_v_is_r_and_matches_bialternant(a in 2u32..10, b_off in 0u32..8, fi in 0usize..7) {
        let b = 1 + b_off % (a - 1);
        let e = ExponentPair::new(a, b).unwrap();
        let f = small_field(fi);
        let t = t_poly(&f, &e).unwrap();
        prop_assert_eq!(&t * &vandermonde(&f, e.d).unwrap(), r_poly(&f, &e).unwrap());
        prop_assert_eq!(schur_bialternant(&f, &e.partition(), e.d).unwrap(), t.clone());
        prop_assert!(t.is_symmetric3());
        let tq = t_poly(&Rationals, &e).unwrap();
        prop_assert_eq!(tq.total_degree(), Some(e.t_total_degree() as u64));
    }

    #[test]
    fn inverted_transform_is_an_involution(a in 3u32..12, b_off in 0u32..10) {
        let b = 1 + b_off % (a - 1);
        let e = ExponentPair::new(a, b).unwrap();
        let t = t_poly(&Rationals, &e).unwrap();
        let bound = e.t_degree_in_z();
        let once = inverted_transform(&t, bound).unwrap();
        prop_assert_eq!(inverted_transform(&once, bound).unwrap(), t);
    }

    #[test]
    fn factor_report_reassembles_input(
        roots in prop::collection::vec((0u64..16, 0u64..16), 0..4),
        rest in terms(2, 4),
        fi in 0usize..7,
    ) {
        let f = small_field(fi);
        let mut g = poly(&f, &rest);
        prop_assume!(!g.is_zero());
        for (a, b) in &roots {
            g = &g * &linear_factor_poly(&f, &elem(&f, *a), &elem(&f, *b));
        }
        let report = linear_factors_over(&g, 512).unwrap();
        let deg_z = g.degree_in(Var::Z).unwrap();
        prop_assert_eq!(report.factor_count() + report.residual_degree_in_z, deg_z);
        prop_assert_eq!(report.reassemble().unwrap(), g.clone());
        prop_assert!(report.factor_count() as usize >= roots.len().min(deg_z as usize));
        for lf in &report.linear_factors {
            let form = LinearForm::new(lf.alpha.clone(), lf.beta.clone());
            prop_assert!(g.substitute(Var::Z, &form).unwrap().is_zero());
        }
        let mut sorted = report.linear_factors.clone();
        sorted.sort_by(|x, y| (&x.alpha, &x.beta).cmp(&(&y.alpha, &y.beta)));
        prop_assert_eq!(sorted, report.linear_factors);
    }

    #[test]
    fn newton_power_of_p(m in 1u64..=20, pi in 0usize..4) {
        let p = [2u64, 3, 5, 7][pi];
        let f = make_field(p, 1).unwrap();
        prop_assert_eq!(newton_poly(&f, p * m).unwrap(), newton_poly(&f, m).unwrap().try_pow(p).unwrap());
    }

    #[test]
    fn brute_count_is_even_and_matches_formula(pi in 0usize..4, r in 2u32..7, s_off in 0u32..6) {
        let p = [2u64, 3, 5, 7][pi];
        let s = 1 + s_off % (r - 1);
        let t = TowerParams::new(p, r, s).unwrap();
        let count = brute_count_alternatives(&t, 20_000).unwrap();
        prop_assert!(count >= 2 && count % 2 == 0);
        let rep = degree_of_extension(&t, DegreeMode::Both, 20_000).unwrap();
        prop_assert_eq!(rep.agree, Some(true));
    }
}

#[test]
fn shortcut_and_direct_agree_where_both_apply() {
    for p in [2u64, 3, 5, 7] {
        let pair = build_alternative_pair(p).unwrap();
        let mut q = 1u64;
        while q < 60 {
            let m = q + 1;
            assert_eq!(
                verify_newton_identity(&pair, m, IdentityMode::Direct).unwrap(),
                verify_newton_identity(&pair, m, IdentityMode::FrobeniusShortcut).unwrap(),
                "p={p} m={m}"
            );
            q *= p;
        }
        // odd Frobenius powers swap the two roots, even powers fix them
        for j in 0..12u64 {
            let expected = if p == 2 { j % 2 == 0 } else { j % 2 == 1 };
            assert_eq!(shortcut_identity(&pair, j), expected, "p={p} j={j}");
        }
    }
}
