//! Integer helpers shared by every module: modular powers and inverses,
//! p-adic valuations, multiplicative orders and prime-power detection.

/// `a * b mod m` without overflow.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    let (a, b) = (a % m, b % m);
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
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

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// `p`-adic valuation of a nonzero integer; `None` for zero.
pub fn vp(mut x: u64, p: u64) -> Option<u32> {
    if x == 0 {
        return None;
    }
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    Some(v)
}

/// Valuation of a residue modulo `p^cap`, with zero mapped to `cap`.
pub fn vp_capped(x: u64, p: u64, cap: u32) -> u32 {
    match vp(x, p) {
        None => cap,
        Some(v) => v.min(cap),
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `Some((ell, k))` with `q = ell^k` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let ell = f[0];
    Some((ell, vp(q, ell).unwrap()))
}

/// Multiplicative order of `a` modulo `m`, found by walking powers.
///
/// Deliberately naive: the sweeps use it as the direct computation that the
/// closed formulas are checked against.
pub fn mult_order_naive(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a, m) != 1 {
        return None;
    }
    let a = a % m;
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, a, m);
        k += 1;
    }
    Some(k)
}

/// Multiplicative order of `a` modulo `m` given a multiple `lambda` of it.
pub fn mult_order_dividing(a: u64, m: u64, lambda: u64) -> u64 {
    let mut ord = lambda;
    for r in prime_factors(lambda) {
        while ord.is_multiple_of(r) && pow_mod(a, ord / r, m) == 1 {
            ord /= r;
        }
    }
    ord
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, r| acc / r * (r - 1))
}

/// `1 + q + ... + q^(k-1) mod m` by binary splitting.
pub fn geometric_sum_mod(q: u64, k: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    // Returns (sum of first k powers, q^k).
    fn go(q: u64, k: u64, m: u64) -> (u64, u64) {
        if k == 0 {
            return (0, 1 % m);
        }
        if k % 2 == 1 {
            let (s, qk) = go(q, k - 1, m);
            (add_mod(1, mul_mod(q, s, m), m), mul_mod(qk, q, m))
        } else {
            let (s, qk) = go(q, k / 2, m);
            (add_mod(s, mul_mod(qk, s, m), m), mul_mod(qk, qk, m))
        }
    }
    go(q % m, k, m).0
}

/// Smallest `j <= cap` with `x ≢ 1 mod p^(j+1)`, i.e. `min(cap, v_p(x - 1))`
/// for `x` given through its residue modulo `p^(cap)`.
pub fn vp_minus_one(x_mod: u64, p: u64, cap: u32) -> u32 {
    let pc = p.pow(cap);
    vp_capped(sub_mod(x_mod, 1, pc), p, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_and_orders() {
        assert_eq!(inv_mod(3, 25), Some(17));
        assert_eq!(inv_mod(5, 25), None);
        assert_eq!(mult_order_naive(2, 25), Some(20));
        assert_eq!(mult_order_dividing(2, 25, 20), 20);
        assert_eq!(mult_order_naive(7, 9), Some(3));
        assert_eq!(totient(25), 20);
    }

    #[test]
    fn geometric_sum_matches_loop() {
        for q in [2u64, 7, 16, 199] {
            for k in 0..40 {
                let m = 9 * 125;
                let naive = (0..k).fold(0, |acc, i| add_mod(acc, pow_mod(q, i, m), m));
                assert_eq!(geometric_sum_mod(q, k, m), naive);
            }
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(128), Some((2, 7)));
        assert_eq!(prime_power(169), Some((13, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
