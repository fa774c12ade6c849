//! Elementary number theory over `u64`: gcd, modular powers, multiplicative
//! orders, trial-division primality and factorization.
//!
//! Everything here targets small moduli (the library works with groups of a
//! few hundred elements), so trial division is deliberate: it is exact,
//! allocation-free, and trivially auditable.

/// Greatest common divisor; `gcd(0, 0) == 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `base^exp mod modulus`. Panics if `modulus == 0`.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus > 0, "modulus must be positive");
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut result = 1u128;
    let mut base = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    result as u64
}

/// Multiplicative order of `r` modulo `m`: the least `d >= 1` with
/// `r^d ≡ 1 (mod m)`. Returns `None` when `m == 0` or `gcd(r, m) != 1`.
///
/// `multiplicative_order(1, m) == Some(1)` for every `m >= 1`, and everything
/// is of order 1 modulo 1.
pub fn multiplicative_order(r: u64, m: u64) -> Option<u64> {
    if m == 0 || gcd(r, m) != 1 {
        return None;
    }
    if m == 1 {
        return Some(1);
    }
    let mut power = r % m;
    let mut d = 1u64;
    while power != 1 {
        power = power * (r % m) % m;
        d += 1;
        debug_assert!(d <= m, "order search exceeded the modulus");
    }
    Some(d)
}

/// Trial-division primality; `is_prime(0) == is_prime(1) == false`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs;
/// `factorize(1)` is empty. Panics if `n == 0`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "cannot factorize 0");
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0u32;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// All positive divisors of `n` in ascending order. Panics if `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "0 has no divisor list");
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let prev = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(prev.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(35, 64), 1);
    }

    #[test]
    fn mod_pow_basics() {
        assert_eq!(mod_pow(2, 10, 1000), 24);
        assert_eq!(mod_pow(2, 6, 13), 12);
        assert_eq!(mod_pow(12, 6, 13), 1);
        assert_eq!(mod_pow(0, 0, 7), 1);
        assert_eq!(mod_pow(5, 3, 1), 0);
    }

    #[test]
    fn multiplicative_order_basics() {
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(2, 5), Some(4));
        assert_eq!(multiplicative_order(1, 9), Some(1));
        assert_eq!(multiplicative_order(12, 13), Some(2));
        assert_eq!(multiplicative_order(2, 4), None);
        assert_eq!(multiplicative_order(3, 0), None);
        assert_eq!(multiplicative_order(0, 1), Some(1));
    }

    #[test]
    fn is_prime_small_values() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(401));
        assert!(!is_prime(391)); // 17 * 23
    }

    #[test]
    fn factorize_basics() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(13), vec![(13, 1)]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
    }

    #[test]
    fn divisors_basics() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    fn phi(m: u64) -> u64 {
        (1..=m).filter(|&k| gcd(k, m) == 1).count() as u64
    }

    proptest! {
        #[test]
        fn mod_pow_matches_naive(base in 0u64..1000, exp in 0u64..64, modulus in 1u64..1000) {
            let mut naive = 1u64 % modulus;
            for _ in 0..exp {
                naive = naive * (base % modulus) % modulus;
            }
            prop_assert_eq!(mod_pow(base, exp, modulus), naive);
        }

        #[test]
        fn order_divides_phi(r in 1u64..200, m in 1u64..200) {
            prop_assume!(gcd(r, m) == 1);
            let d = multiplicative_order(r, m).unwrap();
            prop_assert_eq!(phi(m) % d, 0);
            prop_assert_eq!(mod_pow(r, d, m), 1 % m);
        }

        #[test]
        fn divisors_divide(n in 1u64..500) {
            let divs = divisors(n);
            prop_assert!(divs.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(divs.iter().all(|d| n % d == 0));
            prop_assert_eq!(divs.len(), (1..=n).filter(|k| n % k == 0).count());
        }
    }
}
