//! Integer factorization helpers behind squarefree parts and local symbols.
//!
//! Trial division strips small primes; what remains is split with
//! Pollard–Brent and certified by Miller–Rabin. Inputs beyond a bit bound are
//! refused instead of attempted.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Default bit bound for integers handed to [`factor`].
pub const DEFAULT_FACTOR_BITS: u64 = 256;

const TRIAL_LIMIT: u32 = 2000;
const RHO_ROUNDS: u64 = 1 << 22;

// Deterministic for n < 3.3 * 10^24; beyond that a strong probable prime test.
const MR_BASES: [u32; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in MR_BASES.iter() {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in MR_BASES.iter() {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn abs_diff(a: &BigUint, b: &BigUint) -> BigUint {
    if a > b {
        a - b
    } else {
        b - a
    }
}

fn pollard_brent(n: &BigUint, c: u64) -> Result<Option<BigUint>> {
    let step = |x: &BigUint| (x * x + c) % n;
    let batch = 128u64;
    let mut y = BigUint::from(2u32);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut r = 1u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..batch.min(r - k) {
                y = step(&y);
                q = (q * abs_diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += batch;
        }
        r *= 2;
        if r > RHO_ROUNDS {
            return Err(Error::Resource(format!("could not split {n}")));
        }
    }
    if g == *n {
        loop {
            ys = step(&ys);
            g = abs_diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    Ok((g != *n).then_some(g))
}

fn split_into(n: BigUint, out: &mut BTreeMap<BigUint, u32>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if is_probable_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return Ok(());
    }
    for c in 1u64.. {
        if let Some(d) = pollard_brent(&n, c)? {
            let rest = &n / &d;
            split_into(d, out)?;
            return split_into(rest, out);
        }
        if c > 64 {
            break;
        }
    }
    Err(Error::Resource(format!("could not split {n}")))
}

/// Prime factorization of a positive integer, primes ascending.
pub fn factor(n: &BigUint, max_bits: u64) -> Result<Vec<(BigUint, u32)>> {
    if n.is_zero() {
        return Err(Error::domain("factorization of zero"));
    }
    if n.bits() > max_bits {
        return Err(Error::Resource(format!(
            "integer of {} bits exceeds factorization guard of {max_bits}",
            n.bits()
        )));
    }
    let mut out = BTreeMap::new();
    let mut m = n.clone();
    let mut p = 2u32;
    while p <= TRIAL_LIMIT {
        let bp = BigUint::from(p);
        if &bp * &bp > m {
            break;
        }
        while (&m % &bp).is_zero() {
            m /= &bp;
            *out.entry(bp.clone()).or_insert(0) += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    split_into(m, &mut out)?;
    Ok(out.into_iter().collect())
}

/// Product of the primes dividing `n` to an odd power, carrying the sign of `n`.
pub fn squarefree_int(n: &BigInt, max_bits: u64) -> Result<BigInt> {
    if n.is_zero() {
        return Err(Error::domain("squarefree part of zero"));
    }
    let mut acc = BigUint::one();
    for (p, e) in factor(n.magnitude(), max_bits)? {
        if e % 2 == 1 {
            acc *= p;
        }
    }
    let sign = if n.is_negative() { Sign::Minus } else { Sign::Plus };
    Ok(BigInt::from_biguint(sign, acc))
}

pub fn is_squarefree(n: &BigInt, max_bits: u64) -> Result<bool> {
    if n.is_zero() {
        return Ok(false);
    }
    Ok(factor(n.magnitude(), max_bits)?.iter().all(|(_, e)| *e == 1))
}

/// The unique squarefree integer `d` with `x = d * y^2` for rational `y`.
pub fn squarefree_part(x: &Rational) -> Result<BigInt> {
    squarefree_part_with_bound(x, DEFAULT_FACTOR_BITS)
}

pub fn squarefree_part_with_bound(x: &Rational, max_bits: u64) -> Result<BigInt> {
    if x.numer().is_zero() {
        return Err(Error::domain("squarefree part of zero"));
    }
    // p/q = p*q / q^2
    squarefree_int(&(x.numer() * x.denom()), max_bits)
}

/// Legendre symbol (a/p) for an odd prime p, as -1, 0 or 1.
pub fn legendre(a: &BigInt, p: &BigUint) -> i32 {
    let p_int = BigInt::from(p.clone());
    let a = a.mod_floor(&p_int);
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) >> 1;
    let r = a.magnitude().modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(n: i64, d: i64) -> BigInt {
        squarefree_part(&Rational::new(n, d).unwrap()).unwrap()
    }

    // independent oracle: strip squares k^2 by brute force
    fn brute_squarefree(mut n: i64) -> i64 {
        let sign = n.signum();
        n = n.abs();
        let mut k = 2;
        while k * k <= n {
            while n % (k * k) == 0 {
                n /= k * k;
            }
            k += 1;
        }
        sign * n
    }

    #[test]
    fn worked_values() {
        assert_eq!(sf(25, 1), BigInt::from(1));
        assert_eq!(brute_squarefree(-8), -2);
        assert_eq!(sf(-8, 1), BigInt::from(-2));
        assert_eq!(sf(4, 9), BigInt::from(1));
        assert_eq!(sf(3, 8), BigInt::from(6));
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(
            squarefree_part(&Rational::from_int(0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn matches_brute_force() {
        for n in -600i64..600 {
            if n == 0 {
                continue;
            }
            assert_eq!(sf(n, 1), BigInt::from(brute_squarefree(n)), "n = {n}");
        }
    }

    #[test]
    fn splits_products_of_large_primes() {
        let p = BigUint::from(1_000_000_007u64);
        let q = BigUint::from(998_244_353u64);
        let n = &p * &p * &q;
        let f = factor(&n, 256).unwrap();
        assert_eq!(f, vec![(q.clone(), 1), (p.clone(), 2)]);
        assert_eq!(
            squarefree_int(&BigInt::from(n), 256).unwrap(),
            BigInt::from(q)
        );
    }

    #[test]
    fn bit_guard() {
        let big = BigUint::one() << 300u32;
        assert!(matches!(factor(&big, 256), Err(Error::Resource(_))));
    }

    #[test]
    fn primality() {
        let primes: Vec<u32> = (2..200).filter(|&n| (2..n).all(|d| n % d != 0)).collect();
        for n in 0u32..200 {
            assert_eq!(
                is_probable_prime(&BigUint::from(n)),
                primes.contains(&n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn legendre_symbols() {
        let seven = BigUint::from(7u32);
        let residues: Vec<i32> = (0..7).map(|a| legendre(&BigInt::from(a), &seven)).collect();
        assert_eq!(residues, vec![0, 1, 1, -1, 1, -1, -1]);
        assert_eq!(legendre(&BigInt::from(-1), &BigUint::from(3u32)), -1);
    }
}
