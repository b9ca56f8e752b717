//! Integer factorization helpers used to keep radicands squarefree.
//!
//! Trial division handles the small factors; larger cofactors go through
//! deterministic Miller-Rabin plus Brent's variant of Pollard rho. Radicands
//! repeat heavily during surd arithmetic, so splits are memoized.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num::bigint::BigUint;
use num::integer::Integer;
use num::traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 4096;

/// Miller-Rabin bases that are deterministic for all n < 3.317e24.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn is_probable_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let bp = BigUint::from(p);
        if n == &bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint) -> BigUint {
    // n is odd, composite, not a perfect power of a prime below TRIAL_LIMIT.
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return two;
    }
    let mut c = BigUint::one();
    loop {
        let mut x = two.clone();
        let mut y = two.clone();
        let mut d = one.clone();
        let mut count = 0u64;
        while d.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
            count += 1;
            if count > 1 << 24 {
                break;
            }
        }
        if !d.is_one() && &d != n {
            return d;
        }
        c += 1u32;
    }
}

fn factor_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let root = n.sqrt();
    if &root * &root == n {
        factor_into(root.clone(), out);
        factor_into(root, out);
        return;
    }
    let d = pollard_brent(&n);
    factor_into(n / &d, out);
    factor_into(d, out);
}

/// Full prime factorization, small-to-large trial division first.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut primes: Vec<BigUint> = Vec::new();
    if n.is_zero() {
        return Vec::new();
    }
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigUint::from(p);
        if &bp * &bp > n {
            break;
        }
        while (&n % &bp).is_zero() {
            n /= &bp;
            primes.push(bp.clone());
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    if !n.is_one() {
        factor_into(n, &mut primes);
    }
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((r, e)) if *r == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

fn split_uncached(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    // cheap pre-check: perfect squares split immediately
    let root = n.sqrt();
    if &root * &root == *n {
        return (root, BigUint::one());
    }
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    for (p, e) in factorize(n) {
        if e / 2 > 0 {
            square *= p.pow(e / 2);
        }
        if e % 2 == 1 {
            free *= p;
        }
    }
    (square, free)
}

/// Writes n = s^2 * d with d squarefree and returns (s, d).
pub fn squarefree_split(n: &BigUint) -> (BigUint, BigUint) {
    static CACHE: OnceLock<Mutex<HashMap<BigUint, (BigUint, BigUint)>>> = OnceLock::new();
    // small or already-squarefree-looking values dominate; keep the cache for those
    if n.to_u64().is_some() || n.bits() <= 256 {
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(hit) = cache.lock().unwrap().get(n) {
            return hit.clone();
        }
        let result = split_uncached(n);
        let mut guard = cache.lock().unwrap();
        if guard.len() < 65536 {
            guard.insert(n.clone(), result.clone());
        }
        return result;
    }
    split_uncached(n)
}

/// Exact integer square root test.
pub fn perfect_square_root(n: &BigUint) -> Option<BigUint> {
    let root = n.sqrt();
    if &root * &root == *n {
        Some(root)
    } else {
        None
    }
}
