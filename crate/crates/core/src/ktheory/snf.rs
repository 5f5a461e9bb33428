use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ktheory::IntMatrix;

/// `D = U·M·V` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | ...`.
///
/// The inverses of `U` and `V` are tracked alongside so that column spans
/// and solutions can be read off without a separate inversion.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// The non-zero diagonal entries, in divisibility order.
    pub fn invariants(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct Work {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
        self.u_inv.add_col_multiple(src, dst, &-c);
    }

    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &-c);
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut w = Work {
        d: m.clone(),
        u: IntMatrix::identity(r),
        u_inv: IntMatrix::identity(r),
        v: IntMatrix::identity(c),
        v_inv: IntMatrix::identity(c),
    };
    let mut rank = 0;
    for t in 0..r.min(c) {
        loop {
            let pivot = (t..r)
                .flat_map(|i| (t..c).map(move |j| (i, j)))
                .filter(|&p| !w.d[p].is_zero())
                .min_by_key(|&p| w.d[p].abs());
            let Some((pi, pj)) = pivot else {
                return finish(w, rank);
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let p = w.d[(t, t)].clone();
            for i in t + 1..r {
                let q = w.d[(i, t)].div_floor(&p);
                w.add_row(i, t, &-q);
            }
            for j in t + 1..c {
                let q = w.d[(t, j)].div_floor(&p);
                w.add_col(j, t, &-q);
            }
            let dirty = (t + 1..r).any(|i| !w.d[(i, t)].is_zero())
                || (t + 1..c).any(|j| !w.d[(t, j)].is_zero());
            if dirty {
                continue;
            }
            let bad_row = (t + 1..r).find(|&i| (t + 1..c).any(|j| !w.d[(i, j)].is_multiple_of(&p)));
            if let Some(i) = bad_row {
                w.add_row(t, i, &BigInt::one());
                continue;
            }
            break;
        }
        if w.d[(t, t)].is_negative() {
            w.negate_row(t);
        }
        rank += 1;
    }
    finish(w, rank)
}

fn finish(w: Work, rank: usize) -> SmithForm {
    SmithForm {
        d: w.d,
        u: w.u,
        u_inv: w.u_inv,
        v: w.v,
        v_inv: w.v_inv,
        rank,
    }
}

/// Columns spanning `{x : M x = 0}` over `Z`.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    s.v.col_block(s.rank..m.cols())
}

/// A basis (as columns) of the lattice spanned by the columns of `m`.
pub fn column_span_basis(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let mut b = s.u_inv.col_block(0..s.rank);
    for j in 0..s.rank {
        let dj = s.d[(j, j)].clone();
        for i in 0..b.rows() {
            b[(i, j)] *= &dj;
        }
    }
    b
}

/// An integer solution of `M x = y`, if one exists.
pub fn solve(m: &IntMatrix, y: &[BigInt]) -> Option<Vec<BigInt>> {
    solve_with(&smith_normal_form(m), y)
}

/// [`solve`] with a precomputed Smith form of `M`.
pub fn solve_with(s: &SmithForm, y: &[BigInt]) -> Option<Vec<BigInt>> {
    let z = s.u.mul_vec(y);
    if z[s.rank..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut w = vec![BigInt::zero(); s.v.rows()];
    for i in 0..s.rank {
        let (q, rem) = z[i].div_rem(&s.d[(i, i)]);
        if !rem.is_zero() {
            return None;
        }
        w[i] = q;
    }
    Some(s.v.mul_vec(&w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (k - 1..n)
            .flat_map(|last| {
                subsets(last, k - 1).into_iter().map(move |mut s| {
                    s.push(last);
                    s
                })
            })
            .collect()
    }

    fn minors_gcd(m: &IntMatrix, k: usize) -> BigInt {
        let mut g = BigInt::zero();
        for rows in subsets(m.rows(), k) {
            for cols in subsets(m.cols(), k) {
                let mut sub = IntMatrix::zeros(k, k);
                for (a, &i) in rows.iter().enumerate() {
                    for (b, &j) in cols.iter().enumerate() {
                        sub[(a, b)] = m[(i, j)].clone();
                    }
                }
                g = g.gcd(&sub.det());
            }
        }
        g
    }

    fn check(m: &IntMatrix) {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d, "D = U M V for {m}");
        assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(m.rows()));
        assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(m.cols()));
        assert!(s.u.det().abs().is_one() && s.v.det().abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let inv = s.invariants();
        for w in inv.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        let mut prod = BigInt::one();
        for k in 1..=m.rows().min(m.cols()) {
            if k <= inv.len() {
                prod *= &inv[k - 1];
            } else {
                prod = BigInt::zero();
            }
            assert_eq!(minors_gcd(m, k), prod, "{k}x{k} minors of {m}");
        }
    }

    fn invariants_of(rows: &[Vec<i64>]) -> Vec<i64> {
        let m = IntMatrix::from_rows(rows);
        let s = smith_normal_form(&m);
        let mut out: Vec<i64> = s
            .invariants()
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        out.resize(m.rows().min(m.cols()), 0);
        out
    }

    #[test]
    fn spec_examples() {
        assert_eq!(
            invariants_of(&[vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 0]]),
            vec![1, 2, 0]
        );
        assert_eq!(
            invariants_of(&[vec![2, 1, 0], vec![0, 0, 1], vec![0, 0, 1]]),
            vec![1, 1, 0]
        );
        assert_eq!(
            invariants_of(&[vec![3, 1, 1], vec![0, 1, 0], vec![0, 0, 1]]),
            vec![1, 1, 3]
        );
        assert_eq!(invariants_of(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn brute_force_minors() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let r = rng.gen_range(1..=4);
            let c = rng.gen_range(1..=4);
            let rows: Vec<Vec<i64>> = (0..r)
                .map(|_| (0..c).map(|_| rng.gen_range(-5..=5)).collect())
                .collect();
            check(&IntMatrix::from_rows(&rows));
        }
    }

    #[test]
    fn kernel_span_and_solve() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 6], vec![1, 2, 3]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        assert!((&m * &k).is_zero());
        let b = column_span_basis(&m);
        assert_eq!(b.cols(), 1);
        let y: Vec<BigInt> = vec![4.into(), 2.into()];
        let x = solve(&m, &y).unwrap();
        assert_eq!(m.mul_vec(&x), y);
        assert!(solve(&m, &[1.into(), 1.into()]).is_none());
    }
}
