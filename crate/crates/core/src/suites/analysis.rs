//! Trace, KMS and oracle-equivalence suites.

use num_rational::{BigRational, Ratio};
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::oracle::{oracle_equal, oracle_equal_exact, window_trace, word_agrees_with_oracle};
use crate::suites::CaseReport;
use crate::word::{
    kms_check, kms_check_monomials, monomial_trace, random_word, trace_tau, Algebra, Coeff, Letter,
    Mode, Monomial, NormalFormElement,
};

fn e(n: i128) -> NormalFormElement {
    NormalFormElement::monomial(Monomial::projection(n, 0))
}

fn real(c: &Coeff) -> BigRational {
    c.as_real()
        .cloned()
        .expect("trace of a real element is real")
}

/// `τ(e_n) = 1/n` for `n <= bound`, plus `τ(1) = 1` and `τ(u^k) = 0`.
pub fn trace_suite(bound: i128) -> Vec<CaseReport> {
    let suite = "trace";
    vec![
        CaseReport::run(suite, "tau(e_n) = 1/n", 1..=bound, |&n| {
            trace_tau(&e(n)) == Coeff::real(BigRational::new(1.into(), n.into()))
        }),
        CaseReport::run(suite, "tau(1) = 1, tau(u^k) = 0", -bound..=bound, |&k| {
            let t = trace_tau(&NormalFormElement::monomial(Monomial::u_pow(k)));
            t == if k == 0 { Coeff::int(1) } else { Coeff::zero() }
        }),
    ]
}

/// `|window_trace(e_n, W) - 1/n| < tol` for `n <= bound`.
pub fn window_suite(bound: i128, w: i128, tol: &BigRational) -> Vec<CaseReport> {
    vec![CaseReport::run(
        "trace",
        &format!("window_trace(e_n, {w}) within {tol} of 1/n"),
        1..=bound,
        |&n| {
            let est = real(&window_trace(&e(n), w));
            (est - BigRational::new(1.into(), n.into())).abs() < *tol
        },
    )]
}

/// Largest `|window_trace(x, W) - τ(x)|` over the given elements, for each `W`.
pub fn window_convergence(xs: &[NormalFormElement], widths: &[i128]) -> Vec<BigRational> {
    widths
        .iter()
        .map(|&w| {
            xs.iter()
                .map(|x| (real(&window_trace(x, w)) - real(&trace_tau(x))).abs())
                .max()
                .unwrap_or_else(BigRational::zero)
        })
        .collect()
}

/// All canonical `u^i s_n s_m* u^j` with `n, m <= max_index`, `|i| <= max_u`.
fn kms_family(max_index: i128, max_u: i128) -> Vec<Monomial> {
    let mut out = Vec::new();
    for n in 1..=max_index {
        for m in 1..=max_index {
            for j in 0..m.min(max_u + 1) {
                for i in -max_u..=max_u {
                    out.push(Monomial { i, n, m, j, eps: 0 });
                }
            }
        }
    }
    out
}

/// The affine map `k ↦ a·k + b` a monomial induces, as `(a, b)`.
fn affine(x: &Monomial) -> (Ratio<i128>, Ratio<i128>) {
    let a = Ratio::new(x.n, x.m);
    (a, a * x.j + x.i)
}

/// The KMS condition on monomial pairs.
///
/// `τ(xy)` vanishes unless `xy` acts as the identity on its domain, i.e.
/// the affine parts satisfy `a_x a_y = 1` and `a_x b_y + b_x = 0`; the
/// same condition makes `τ(yx)` vanish. The suite checks every such pair
/// in the family exhaustively, checks on `samples` random other pairs that
/// both sides are zero and that affine parts compose under products, and
/// cross-checks the machine-rational fast path against the exact element
/// computation.
pub fn kms_suite(max_index: i128, max_u: i128, samples: usize, seed: u64) -> Vec<CaseReport> {
    let suite = "kms";
    let family = kms_family(max_index, max_u);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut matched = 0usize;
    let mut failure = None;
    'outer: for x in &family {
        let (ax, bx) = affine(x);
        let target = -bx / ax;
        for n2 in 1..=max_index {
            // a_y = m_x / n_x
            if (x.m * n2) % x.n != 0 {
                continue;
            }
            let m2 = x.n * n2 / x.m;
            if m2 > max_index {
                continue;
            }
            for j2 in 0..m2.min(max_u + 1) {
                let i2 = target - Ratio::new(n2 * j2, m2);
                if !i2.is_integer() || i2.to_integer().abs() > max_u {
                    continue;
                }
                let y = Monomial {
                    i: i2.to_integer(),
                    n: n2,
                    m: m2,
                    j: j2,
                    eps: 0,
                };
                matched += 1;
                if !kms_check_monomials(x, &y) {
                    failure = Some(format!("x = {x}, y = {y}"));
                    break 'outer;
                }
            }
        }
    }
    let exhaustive = CaseReport::new(
        suite,
        "tau(x lambda_i(y)) = tau(yx), pairs with xy of trivial weight",
        failure.is_none(),
        matched,
        failure,
    );

    let pick = |rng: &mut ChaCha8Rng| *family.choose(rng).expect("non-empty family");
    let mismatched = CaseReport::run(
        suite,
        "both sides vanish off trivial weight",
        (0..samples).map(|_| (pick(&mut rng), pick(&mut rng))),
        |(x, y)| {
            let ((ax, bx), (ay, by)) = (affine(x), affine(y));
            let trivial = ax * ay == Ratio::from_integer(1) && ax * by + bx == Ratio::zero();
            let zero = |p: Option<Monomial>| p.is_none_or(|p| monomial_trace(&p).is_zero());
            trivial || (zero(x.mul(y)) && zero(y.mul(x)) && kms_check_monomials(x, y))
        },
    );
    let composes = CaseReport::run(
        suite,
        "affine parts compose under products",
        (0..samples).map(|_| (pick(&mut rng), pick(&mut rng))),
        |(x, y)| {
            let ((ax, bx), (ay, by)) = (affine(x), affine(y));
            x.mul(y)
                .is_none_or(|p| affine(&p) == (ax * ay, ax * by + bx))
        },
    );
    let exact = CaseReport::run(
        suite,
        "fast path agrees with exact elements",
        (0..samples.min(2000)).map(|_| (pick(&mut rng), pick(&mut rng))),
        |(x, y)| {
            let (ex, ey) = (
                NormalFormElement::monomial(*x),
                NormalFormElement::monomial(*y),
            );
            kms_check(&ex, &ey) == kms_check_monomials(x, y) && kms_check(&ex, &ey)
        },
    );
    vec![exhaustive, mismatched, composes, exact]
}

/// Seeded random words: the normal form and letter-by-letter action agree
/// on `[-bound, bound]`.
pub fn oracle_suite(
    count: usize,
    max_len: usize,
    max_index: i64,
    mode: Mode,
    seed: u64,
    bound: i128,
) -> CaseReport {
    let alg = Algebra::new(mode);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = (0..count).map(|_| {
        let len = rng.gen_range(1..=max_len);
        random_word(&mut rng, len, max_index, mode)
    });
    let mut mismatch = None;
    let mut checked = 0;
    for w in words {
        checked += 1;
        let nf = alg.word_monomial(&w).expect("generated words are valid");
        if let Err(k) = word_agrees_with_oracle(&w, nf.as_ref(), bound) {
            let text: Vec<String> = w.iter().map(Letter::to_string).collect();
            mismatch = Some(format!("{} at index {k}", text.join(" ")));
            break;
        }
    }
    CaseReport::new(
        "oracle",
        &format!("normal form = letter maps on [-{bound}, {bound}], mode {mode}"),
        mismatch.is_none(),
        checked,
        mismatch,
    )
}

/// Operator equality on `ℓ²(Z)` agrees with equality of normal forms on
/// pairs of related and unrelated words. Window agreement on `[-bound, bound]`
/// is implied by operator equality and is checked as a one-way consequence.
pub fn oracle_pair_suite(count: usize, mode: Mode, seed: u64, bound: i128) -> CaseReport {
    let alg = Algebra::new(mode);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for _ in 0..count {
        let len = rng.gen_range(1..=8);
        let w1 = random_word(&mut rng, len, 6, mode);
        let w2 = if rng.gen_bool(0.5) {
            disguise(&w1, &mut rng)
        } else {
            random_word(&mut rng, len, 6, mode)
        };
        let (x, y) = (alg.normal_form(&w1).unwrap(), alg.normal_form(&w2).unwrap());
        checked += 1;
        let eq = oracle_equal_exact(&x, &y);
        if eq != (x == y)
            || eq != oracle_equal_exact(&y, &x)
            || (eq && !oracle_equal(&x, &y, bound))
        {
            return CaseReport::new(
                "oracle",
                "oracle_equal matches normal-form equality",
                false,
                checked,
                Some(format!("{x} vs {y}")),
            );
        }
    }
    CaseReport::new(
        "oracle",
        "oracle_equal matches normal-form equality",
        true,
        checked,
        None,
    )
}

/// Inserts a trivial factor (`s_n* s_n`, `u* u` or `u u*`) at a random position.
fn disguise(w: &[Letter], rng: &mut ChaCha8Rng) -> Vec<Letter> {
    let mut out = w.to_vec();
    let pos = rng.gen_range(0..=out.len());
    let n = rng.gen_range(1..=6);
    let ins = match rng.gen_range(0..3) {
        0 => [Letter::SAdj(n), Letter::S(n)],
        1 => [Letter::UAdj, Letter::U],
        _ => [Letter::U, Letter::UAdj],
    };
    out.splice(pos..pos, ins);
    out
}
