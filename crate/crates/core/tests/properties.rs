//! Randomized laws checked against independent computations.

use axb_core::ktheory::{smith_normal_form, IndAbGroup, IntMatrix, PrimeSchedule};
use axb_core::oracle::{monomial_map, oracle_equal_exact, word_map};
use axb_core::profinite::{AxbElement, FiniteAdele};
use axb_core::word::{expectation_e, expectation_g, trace_tau};
use axb_core::{Algebra, Coeff, Letter, Mode, Monomial, NormalFormElement};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn letter(mode: Mode) -> impl Strategy<Value = Letter> {
    let idx = match mode {
        Mode::N => (1i64..=6).boxed(),
        Mode::Z => prop_oneof![1i64..=6, -6i64..=-1].boxed(),
    };
    let mut options = vec![
        Just(Letter::U).boxed(),
        Just(Letter::UAdj).boxed(),
        idx.clone().prop_map(Letter::S).boxed(),
        idx.prop_map(Letter::SAdj).boxed(),
    ];
    if mode == Mode::Z {
        options.push(Just(Letter::F).boxed());
    }
    proptest::strategy::Union::new(options)
}

fn word(mode: Mode) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(letter(mode), 0..8)
}

fn element(mode: Mode) -> impl Strategy<Value = NormalFormElement> {
    prop::collection::vec((word(mode), -3i64..=3, 1i64..=3), 0..4).prop_map(move |terms| {
        let alg = Algebra::new(mode);
        terms
            .into_iter()
            .fold(NormalFormElement::zero(), |acc, (w, n, d)| {
                acc.add(&alg.normal_form(&w).unwrap().scale(&Coeff::ratio(n, d)))
            })
    })
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (-6i128..=6, 1i128..=6, 1i128..=6, 0i128..6, 0u8..=1).prop_map(|(i, n, m, j, eps)| Monomial {
        i,
        n,
        m,
        j: j % m,
        eps,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normal_form_is_multiplicative(a in word(Mode::Z), b in word(Mode::Z)) {
        let alg = Algebra::new(Mode::Z);
        let joined: Vec<Letter> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(
            alg.normal_form(&joined).unwrap(),
            alg.normal_form(&a).unwrap().mul(&alg.normal_form(&b).unwrap())
        );
    }

    #[test]
    fn letter_maps_compose_to_the_normal_form(w in word(Mode::Z)) {
        let nf = Algebra::new(Mode::Z).word_monomial(&w).unwrap();
        prop_assert_eq!(word_map(&w).unwrap(), nf.map(|m| monomial_map(&m)));
    }

    #[test]
    fn expectations_are_idempotent(x in element(Mode::Z)) {
        let e = expectation_e(&x);
        prop_assert_eq!(expectation_e(&e), e.clone());
        prop_assert_eq!(expectation_e(&x.adjoint()), e.adjoint());
        let g = expectation_g(&x);
        prop_assert_eq!(expectation_g(&g), g);
        prop_assert_eq!(trace_tau(&x), trace_tau(&e));
    }

    #[test]
    fn trace_is_positive(x in element(Mode::N)) {
        let t = trace_tau(&x.adjoint().mul(&x));
        let re = t.as_real().expect("tau(x*x) is real");
        prop_assert!(!re.is_negative());
        prop_assert_eq!(re.is_zero(), x.is_zero());
    }

    #[test]
    fn canonical_forms_are_faithful(x in element(Mode::Z), y in element(Mode::Z)) {
        // distinct canonical forms are distinct operators on l^2(Z)
        prop_assert_eq!(oracle_equal_exact(&x, &y), x == y);
        prop_assert!(oracle_equal_exact(&x.add(&y), &y.add(&x)));
    }

    #[test]
    fn canonical_monomials_are_independent(ms in prop::collection::vec(monomial(), 1..6)) {
        let x = NormalFormElement::from_terms(
            ms.iter().enumerate().map(|(k, m)| (*m, Coeff::int(k as i64 + 1))),
        );
        prop_assert_eq!(oracle_equal_exact(&x, &NormalFormElement::zero()), x.is_zero());
    }

    #[test]
    fn smith_form_diagonalizes(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 4), 1..5)) {
        let a = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&a);
        prop_assert_eq!(&(&s.u * &a) * &s.v, s.d.clone());
        prop_assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(a.rows()));
        prop_assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(a.cols()));
        let inv = s.invariants();
        for w in inv.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        for (i, d) in inv.iter().enumerate() {
            prop_assert!(d.is_positive());
            prop_assert_eq!(&s.d[(i, i)], d);
        }
    }

    #[test]
    fn adele_action_law(
        g in (1i64..=20, 1i64..=20, -20i64..=20, 1i64..=20),
        h in (1i64..=20, 1i64..=20, -20i64..=20, 1i64..=20),
        neg in any::<bool>(),
        q in (-50i64..=50, 1i64..=50),
    ) {
        let g = AxbElement::from_ints(if neg { -g.0 } else { g.0 }, g.1, g.2, g.3).unwrap();
        let h = AxbElement::from_ints(h.0, h.1, h.2, h.3).unwrap();
        let q = BigRational::new(q.0.into(), q.1.into());
        let levels: Vec<(u64, u32)> = [2, 3, 5, 7, 11, 13, 17, 19].iter().map(|&p| (p, 12)).collect();
        let x = FiniteAdele::from_rational(&q, &levels);
        let lhs = g.act(&h.act(&x).unwrap()).unwrap();
        let rhs = g.compose(&h).act(&x).unwrap();
        prop_assert!(lhs.agrees_with(&rhs));
        prop_assert!(rhs.contains_rational(&g.compose(&h).apply_rational(&q)));
    }

    #[test]
    fn colimit_maps_are_functorial(r in 0usize..6, s in 0usize..6, t in 0usize..6) {
        let mut idx = [r, s, t];
        idx.sort_unstable();
        let [r, s, t] = idx;
        let g = IndAbGroup::bunce_deddens(PrimeSchedule::RoundRobin, 6).unwrap();
        let direct = g.composite(r, t).unwrap();
        let split = g.composite(s, t).unwrap().compose(&g.composite(r, s).unwrap()).unwrap();
        prop_assert!(direct.agrees_with(&split));
        let one = vec![BigInt::from(1)];
        prop_assert_eq!(g.orbit(r, &one, t).unwrap().last().unwrap().clone(), direct.apply(&one));
    }
}
