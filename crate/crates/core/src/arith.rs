//! Small integer helpers shared by every module: gcd/lcm, congruences,
//! trial-division factorization and prime enumeration.

use num_integer::Integer;

/// Non-negative residue of `a` modulo `m` (`m > 0`).
#[inline]
pub fn mod_floor(a: i128, m: i128) -> i128 {
    a.mod_floor(&m)
}

#[inline]
pub fn gcd(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

#[inline]
pub fn lcm(a: i128, b: i128) -> i128 {
    a.lcm(&b)
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd(mod_floor(a, m), m);
    (g == 1).then(|| mod_floor(x, m))
}

/// Solves `a*k ≡ b (mod m)`. Returns `(k0, m')` describing the solution class
/// `k ≡ k0 (mod m')`, or `None` when there is no solution.
pub fn solve_linear_congruence(a: i128, b: i128, m: i128) -> Option<(i128, i128)> {
    debug_assert!(m > 0);
    let g = gcd(a, m);
    if g == 0 {
        // a == 0 and m == 0 cannot happen with m > 0
        return None;
    }
    if mod_floor(b, g) != 0 {
        return None;
    }
    let m2 = m / g;
    let a2 = mod_floor(a / g, m2);
    let b2 = mod_floor(b / g, m2);
    let inv = mod_inverse(a2, m2)?;
    Some((mod_floor(b2 * inv, m2), m2))
}

/// Chinese remainder for two (not necessarily coprime) congruences.
/// Returns `(r, lcm(m1, m2))` or `None` if the classes are disjoint.
pub fn crt(r1: i128, m1: i128, r2: i128, m2: i128) -> Option<(i128, i128)> {
    let (g, p, _) = ext_gcd(m1, m2);
    let diff = r2 - r1;
    if diff % g != 0 {
        return None;
    }
    let l = m1 / g * m2;
    // r = r1 + m1 * t with m1 * t ≡ diff (mod m2)
    let t = mod_floor((diff / g) % (m2 / g) * mod_floor(p, m2 / g), m2 / g);
    Some((mod_floor(r1 + m1 * t, l), l))
}

/// p-adic valuation of a non-zero integer.
pub fn valuation(mut n: i128, p: i128) -> u32 {
    debug_assert!(n != 0 && p > 1);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, primes in increasing order.
pub fn factorize(n: u128) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorize(0)");
    let mut out = Vec::new();
    let mut n = n;
    let mut d: u128 = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d as u64, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

/// All primes `<= bound`, by sieve.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(k, &p)| p.then_some(k as u64))
        .collect()
}

/// The first `count` primes in increasing order.
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = 2u64;
    while out.len() < count {
        if is_prime(c) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// Dovetailed round-robin over the increasing primes: 2; 2, 3; 2, 3, 5; ...
/// Every prime occurs infinitely often.
pub fn round_robin_primes(len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    let mut round = 1;
    while out.len() < len {
        for p in first_primes(round) {
            if out.len() == len {
                break;
            }
            out.push(p);
        }
        round += 1;
    }
    out
}

/// Entry `t` (0-based) of [`round_robin_primes`], without building the prefix.
pub fn round_robin_prime(t: usize) -> u64 {
    // round r (1-based) occupies positions r(r-1)/2 .. r(r+1)/2
    let mut r = 1;
    while r * (r + 1) / 2 <= t {
        r += 1;
    }
    let pos = t - r * (r - 1) / 2;
    *first_primes(pos + 1).last().expect("at least one prime")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_robin_entries_match_prefix() {
        let prefix = round_robin_primes(200);
        for (t, &p) in prefix.iter().enumerate() {
            assert_eq!(round_robin_prime(t), p);
        }
        assert_eq!(&prefix[..6], &[2, 2, 3, 2, 3, 5]);
    }

    #[test]
    fn crt_matches_enumeration() {
        for m1 in 1..=12i128 {
            for m2 in 1..=12i128 {
                for r1 in 0..m1 {
                    for r2 in 0..m2 {
                        let l = lcm(m1, m2);
                        let hits: Vec<i128> =
                            (0..l).filter(|k| k % m1 == r1 && k % m2 == r2).collect();
                        match crt(r1, m1, r2, m2) {
                            Some((r, m)) => {
                                assert_eq!(m, l);
                                assert_eq!(hits, vec![r]);
                            }
                            None => assert!(hits.is_empty()),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn linear_congruence_matches_enumeration() {
        for m in 1..=15i128 {
            for a in -7..=7i128 {
                for b in 0..m {
                    let sols: Vec<i128> = (0..m).filter(|k| mod_floor(a * k - b, m) == 0).collect();
                    match solve_linear_congruence(a, b, m) {
                        Some((k0, m2)) => {
                            let expect: Vec<i128> = (0..m).filter(|k| k % m2 == k0).collect();
                            assert_eq!(sols, expect, "a={a} b={b} m={m}");
                        }
                        None => assert!(sols.is_empty()),
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_and_primes() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(first_primes(95).last(), Some(&499));
        assert_eq!(round_robin_primes(6), vec![2, 2, 3, 2, 3, 5]);
    }
}
