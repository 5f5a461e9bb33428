//! The defining relations and the commutation identities.

use crate::arith;
use crate::suites::CaseReport;
use crate::word::{Algebra, Coeff, Letter, Mode, Monomial, NormalFormElement};

fn pairs(bound: i128) -> impl Iterator<Item = (i128, i128)> {
    (1..=bound).flat_map(move |n| (1..=bound).map(move |m| (n, m)))
}

fn coprime_pairs(bound: i128) -> impl Iterator<Item = (i128, i128)> {
    pairs(bound).filter(|&(p, q)| arith::gcd(p, q) == 1)
}

fn el(m: Option<Monomial>) -> NormalFormElement {
    m.map_or_else(NormalFormElement::zero, NormalFormElement::monomial)
}

/// Product of monomials, `None` if any partial product vanishes.
fn prod(factors: &[Monomial]) -> Option<Monomial> {
    factors.iter().try_fold(Monomial::ONE, |acc, f| acc.mul(f))
}

fn word(letters: &[Letter], mode: Mode) -> NormalFormElement {
    Algebra::new(mode)
        .normal_form(letters)
        .expect("suite words use valid letters")
}

fn e(n: i128) -> Monomial {
    Monomial::projection(n, 0)
}

/// `Σ_{k<n} u^k e_n u^{-k} = 1`, summed as one canonical combination.
pub fn partition_of_unity_check(n: i128) -> bool {
    NormalFormElement::from_terms((0..n).map(|k| (Monomial::projection(n, k), Coeff::int(1))))
        .is_one()
}

/// The defining relations, and in `Z` mode the relations of the flip.
pub fn relation_suite(bound: i128, mode: Mode) -> Vec<CaseReport> {
    let s = |n: i128| Letter::S(n as i64);
    let sa = |n: i128| Letter::SAdj(n as i64);
    let suite = "relations";
    let mut out = vec![
        CaseReport::run(suite, "s_n s_m = s_nm", pairs(bound), |&(n, m)| {
            word(&[s(n), s(m)], mode) == word(&[s(n * m)], mode)
        }),
        CaseReport::run(suite, "s_n u = u^n s_n", 1..=bound, |&n| {
            let mut rhs = vec![Letter::U; n as usize];
            rhs.push(s(n));
            word(&[s(n), Letter::U], mode) == word(&rhs, mode)
        }),
        CaseReport::run(suite, "s_n* s_n = 1", 1..=bound, |&n| {
            word(&[sa(n), s(n)], mode).is_one()
        }),
        CaseReport::run(suite, "u* u = u u* = 1", [()], |_| {
            word(&[Letter::UAdj, Letter::U], mode).is_one()
                && word(&[Letter::U, Letter::UAdj], mode).is_one()
        }),
        CaseReport::run(suite, "sum_k u^k e_n u^-k = 1", 1..=bound, |&n| {
            partition_of_unity_check(n)
        }),
    ];
    if mode == Mode::Z {
        let f = Letter::F;
        out.push(CaseReport::run(suite, "f* = f, f^2 = 1", [()], |_| {
            Letter::F.adjoint() == f && word(&[f, f], mode).is_one()
        }));
        out.push(CaseReport::run(suite, "f u f = u*", [()], |_| {
            word(&[f, Letter::U, f], mode) == word(&[Letter::UAdj], mode)
        }));
        out.push(CaseReport::run(suite, "f s_n = s_n f", 1..=bound, |&n| {
            word(&[f, s(n)], mode) == word(&[s(n), f], mode)
        }));
        out.push(CaseReport::run(suite, "s_-n = s_n f", 1..=bound, |&n| {
            word(&[s(-n)], mode) == word(&[s(n), f], mode)
        }));
    }
    out
}

/// The three commutation identities for projections and isometries.
///
/// (b) is checked in the form established by its proof,
/// `e_p s_q = e_pq s_q = s_q e_p`. (c) holds for coprime pairs; for
/// arbitrary pairs the suite checks `s_n* s_m = s_{m/g} s_{n/g}*` with
/// `g = gcd(n, m)`.
pub fn lemma_comm_suite(bound: i128) -> Vec<CaseReport> {
    let suite = "comm";
    let s = Monomial::s;
    let sa = Monomial::s_adj;
    vec![
        CaseReport::run(
            suite,
            "(a) e_n = sum_i u^in e_nm u^-in",
            pairs(bound),
            |&(n, m)| {
                let rhs = NormalFormElement::from_terms((0..m).map(|i| {
                    let t = prod(&[Monomial::u_pow(i * n), e(n * m), Monomial::u_pow(-i * n)]);
                    (t.expect("conjugate of a projection"), Coeff::int(1))
                }));
                rhs == el(Some(e(n)))
            },
        ),
        CaseReport::run(
            suite,
            "(b) e_p s_q = e_pq s_q = s_q e_p",
            coprime_pairs(bound),
            |&(p, q)| {
                let a = el(prod(&[e(p), s(q)]));
                a == el(prod(&[e(p * q), s(q)])) && a == el(prod(&[s(q), e(p)]))
            },
        ),
        CaseReport::run(
            suite,
            "(b) e_p e_q = e_pq = e_q e_p",
            coprime_pairs(bound),
            |&(p, q)| {
                let a = el(prod(&[e(p), e(q)]));
                a == el(Some(e(p * q))) && a == el(prod(&[e(q), e(p)]))
            },
        ),
        CaseReport::run(
            suite,
            "(c) s_n* s_m = s_m s_n*",
            coprime_pairs(bound),
            |&(n, m)| el(prod(&[sa(n), s(m)])) == el(prod(&[s(m), sa(n)])),
        ),
        CaseReport::run(
            suite,
            "(c') s_n* s_m = s_m/g s_n/g*",
            pairs(bound),
            |&(n, m)| {
                let g = arith::gcd(n, m);
                el(prod(&[sa(n), s(m)])) == el(prod(&[s(m / g), sa(n / g)]))
            },
        ),
    ]
}
