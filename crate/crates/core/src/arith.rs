//! Exact integer helpers: the Kronecker symbol, primality, and factorization.
//!
//! Everything here works on machine integers. Intermediate products are
//! carried in `u128`/`i128`, so no operation can overflow for `i64`/`u64`
//! inputs.

use crate::error::{Error, Result};

/// Factorization `value = sign * prod(p^e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub value: i64,
    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn sign(&self) -> i8 {
        if self.value < 0 {
            -1
        } else {
            1
        }
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Multiplies the factors back together (absolute value).
    pub fn recompose(&self) -> u128 {
        self.factors
            .iter()
            .map(|&(p, e)| (p as u128).pow(e))
            .product()
    }
}

fn two_over(a_mod_8: u64) -> i8 {
    match a_mod_8 {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => 0,
    }
}

/// Jacobi symbol for odd positive `n`.
fn jacobi(a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut a = a % n;
    let mut acc = 1i8;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 {
            acc *= two_over(n % 8);
        }
        if a % 4 == 3 && n % 4 == 3 {
            acc = -acc;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        acc
    } else {
        0
    }
}

/// The Kronecker symbol `(a/n)`.
///
/// Extends the Jacobi symbol to even and negative `n`: `(a/2)` is 0 for even
/// `a`, +1 for `a = ±1 mod 8` and -1 for `a = ±3 mod 8`; `(a/-1)` is the sign
/// of `a` (with `(0/-1) = 1`).
pub fn kronecker(a: i64, n: i64) -> Result<i8> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut acc = 1i8;
    if n < 0 && a < 0 {
        acc = -1;
    }
    let mut m = n.unsigned_abs();
    let tz = m.trailing_zeros();
    if tz > 0 {
        if a % 2 == 0 {
            return Ok(0);
        }
        if tz % 2 == 1 {
            acc *= two_over(a.rem_euclid(8) as u64);
        }
        m >>= tz;
    }
    let a_mod = (a as i128).rem_euclid(m as i128) as u64;
    Ok(acc * jacobi(a_mod, m))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller–Rabin; the first twelve primes as witnesses are
/// sufficient for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's variant of Pollard rho. `n` must be odd and composite.
fn pollard_brent(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g, mut r, mut q) = (2u64, 2u64, 1u64, 1u64, 1u64);
        let mut ys = y;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn collect_factors(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    collect_factors(d, out);
    collect_factors(n / d, out);
}

/// Factors a positive integer into `(prime, exponent)` pairs.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut primes = Vec::new();
    if n == 0 {
        return Vec::new();
    }
    let tz = n.trailing_zeros();
    primes.extend(std::iter::repeat_n(2, tz as usize));
    n >>= tz;
    let mut p = 3u64;
    while p <= 1000 && p * p <= n {
        while n % p == 0 {
            primes.push(p);
            n /= p;
        }
        p += 2;
    }
    collect_factors(n, &mut primes);
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    factors
}

pub fn factor(n: i64) -> Result<PrimeFactorization> {
    if n == 0 {
        return Err(Error::FactorZero);
    }
    Ok(PrimeFactorization {
        value: n,
        factors: factor_u64(n.unsigned_abs()),
    })
}

pub fn is_squarefree(n: i64) -> bool {
    n != 0 && factor_u64(n.unsigned_abs()).iter().all(|&(_, e)| e == 1)
}

/// Returns `(p, m)` with `q = p^m`, `p` an odd prime.
pub fn odd_prime_power(q: u64) -> Result<(u64, u32)> {
    match factor_u64(q).as_slice() {
        &[(p, m)] if p != 2 => Ok((p, m)),
        _ => Err(Error::NotOddPrimePower(q)),
    }
}

/// Primes `<= n` in increasing order.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64)
        .collect()
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u64;
    while (x as u128) * (x as u128) > n as u128 {
        x -= 1;
    }
    while ((x + 1) as u128) * ((x + 1) as u128) <= n as u128 {
        x += 1;
    }
    x
}

/// Extended gcd: returns `(g, u, v)` with `u*a + v*b = g >= 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(3, 5).unwrap(), -1);
        assert_eq!(kronecker(7, 13).unwrap(), -1);
        for a in [-17, 0, 1, 12345] {
            assert_eq!(kronecker(a, 1).unwrap(), 1);
        }
        assert!(matches!(kronecker(3, 0), Err(Error::ZeroModulus)));
    }

    #[test]
    fn kronecker_at_two() {
        for a in -40i64..40 {
            let expected = match a.rem_euclid(8) {
                1 | 7 => 1,
                3 | 5 => -1,
                _ => 0,
            };
            assert_eq!(kronecker(a, 2).unwrap(), expected, "a = {a}");
        }
    }

    #[test]
    fn kronecker_negative_modulus() {
        assert_eq!(kronecker(-3, -1).unwrap(), -1);
        assert_eq!(kronecker(3, -1).unwrap(), 1);
        assert_eq!(kronecker(-3, -5).unwrap(), -kronecker(-3, 5).unwrap());
    }

    #[test]
    fn legendre_matches_square_testing() {
        for p in primes_up_to(10_000).into_iter().skip(1) {
            let squares: Vec<bool> = {
                let mut s = vec![false; p as usize];
                for x in 1..p {
                    s[((x * x) % p) as usize] = true;
                }
                s
            };
            for a in 0..p {
                let expected = if a == 0 {
                    0
                } else if squares[a as usize] {
                    1
                } else {
                    -1
                };
                assert_eq!(
                    kronecker(a as i64, p as i64).unwrap(),
                    expected,
                    "({a}/{p})"
                );
            }
        }
    }

    #[test]
    fn kronecker_multiplicative() {
        let mut rng = seeded_rng();
        for _ in 0..10_000 {
            let a = rng.gen_range(-100_000i64..100_000);
            let b = rng.gen_range(-100_000i64..100_000);
            let mut n = rng.gen_range(-100_000i64..100_000);
            if n == 0 {
                n = 1;
            }
            assert_eq!(
                kronecker(a * b, n).unwrap(),
                kronecker(a, n).unwrap() * kronecker(b, n).unwrap()
            );
            let m = rng.gen_range(1i64..1000);
            assert_eq!(
                kronecker(a, n * m).unwrap(),
                kronecker(a, n).unwrap() * kronecker(a, m).unwrap()
            );
        }
    }

    fn seeded_rng() -> rand::rngs::StdRng {
        rand::rngs::StdRng::seed_from_u64(0x5eed)
    }

    #[test]
    fn factor_examples() {
        let f = factor(4_849_845).unwrap();
        assert_eq!(
            f.factors,
            [3, 5, 7, 11, 13, 17, 19].map(|p| (p, 1)).to_vec()
        );
        assert!(factor(1).unwrap().factors.is_empty());
        assert_eq!(factor(255).unwrap().factors, vec![(3, 1), (5, 1), (17, 1)]);
        assert_eq!(factor(-12).unwrap().factors, vec![(2, 2), (3, 1)]);
        assert_eq!(factor(-12).unwrap().sign(), -1);
        assert!(factor(0).is_err());
    }

    #[test]
    fn factor_roundtrip_small() {
        for n in 1..=1_000_000u64 {
            let f = factor_u64(n);
            assert_eq!(
                f.iter().map(|&(p, e)| p.pow(e)).product::<u64>(),
                n,
                "n = {n}"
            );
            if n % 9973 == 0 {
                assert!(f.iter().all(|&(p, _)| is_prime(p)));
            }
        }
    }

    #[test]
    fn factor_roundtrip_random_64bit() {
        let mut rng = seeded_rng();
        for _ in 0..1000 {
            let n: u64 = rng.gen_range(1..=u64::MAX);
            let f = factor_u64(n);
            assert!(f.windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.iter().all(|&(p, e)| e >= 1 && is_prime(p)));
            let back: u128 = f.iter().map(|&(p, e)| (p as u128).pow(e)).product();
            assert_eq!(back, n as u128);
        }
    }

    #[test]
    fn primality_agrees_with_sieve() {
        let sieve = primes_up_to(100_000);
        let from_mr: Vec<u64> = (0..=100_000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, from_mr);
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
    }

    #[test]
    fn prime_powers() {
        assert_eq!(odd_prime_power(9).unwrap(), (3, 2));
        assert_eq!(odd_prime_power(5).unwrap(), (5, 1));
        assert!(odd_prime_power(8).is_err());
        assert!(odd_prime_power(15).is_err());
        assert!(odd_prime_power(1).is_err());
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(-15));
        assert!(is_squarefree(-1));
        assert!(!is_squarefree(-12));
        assert!(!is_squarefree(0));
    }

    #[test]
    fn integer_sqrt() {
        for n in 0..10_000u64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
        assert_eq!(isqrt(u64::MAX), 4_294_967_295);
    }
}
