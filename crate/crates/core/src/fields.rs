//! Exact fields presented as F[x]/(f) over a prime field or over Q: the
//! finite fields GF(p^k) and the cyclotomic fields Q(ζ_m).

use crate::arith::{gcd, is_prime, prime_factors};
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt::Debug;

/// Coefficient arithmetic for the polynomial quotient.
pub trait Coeff: Clone + Debug {
    type E: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, a: i64) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Option<Self::E>;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn render(&self, a: &Self::E) -> String;
    fn characteristic(&self) -> u64;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl Coeff for PrimeField {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        crate::arith::add_mod(*a, *b, self.p)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        crate::arith::sub_mod(*a, *b, self.p)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        crate::arith::mul_mod(*a, *b, self.p)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        crate::arith::inv_mod(*a, self.p)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Coeff for Rationals {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, a: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(a))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

// Dense polynomials, lowest degree first, without trailing zeros.

fn trim<C: Coeff>(c: &C, mut v: Vec<C::E>) -> Vec<C::E> {
    while v.last().is_some_and(|x| c.is_zero(x)) {
        v.pop();
    }
    v
}

fn poly_mul<C: Coeff>(c: &C, a: &[C::E], b: &[C::E]) -> Vec<C::E> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![c.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if c.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = c.add(&out[i + j], &c.mul(x, y));
        }
    }
    trim(c, out)
}

fn poly_sub<C: Coeff>(c: &C, a: &[C::E], b: &[C::E]) -> Vec<C::E> {
    let n = a.len().max(b.len());
    let z = c.zero();
    let out = (0..n)
        .map(|i| c.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(c, out)
}

/// (quotient, remainder) of a by a nonzero divisor f.
fn poly_divrem<C: Coeff>(c: &C, a: &[C::E], f: &[C::E]) -> (Vec<C::E>, Vec<C::E>) {
    let df = f.len() - 1;
    let lead_inv = c.inv(&f[df]).expect("nonzero leading coefficient");
    let mut r = trim(c, a.to_vec());
    if r.len() <= df {
        return (Vec::new(), r);
    }
    let mut q = vec![c.zero(); r.len() - df];
    while r.len() > df {
        let k = r.len() - 1 - df;
        let t = c.mul(r.last().unwrap(), &lead_inv);
        for (i, fi) in f.iter().enumerate() {
            r[k + i] = c.sub(&r[k + i], &c.mul(&t, fi));
        }
        q[k] = t;
        r = trim(c, r);
    }
    (trim(c, q), r)
}

fn poly_rem<C: Coeff>(c: &C, a: &[C::E], f: &[C::E]) -> Vec<C::E> {
    poly_divrem(c, a, f).1
}

fn poly_gcd<C: Coeff>(c: &C, a: &[C::E], b: &[C::E]) -> Vec<C::E> {
    let (mut x, mut y) = (trim(c, a.to_vec()), trim(c, b.to_vec()));
    while !y.is_empty() {
        let r = poly_rem(c, &x, &y);
        x = y;
        y = r;
    }
    x
}

/// a^{-1} mod f, if gcd(a, f) = 1.
fn poly_inv_mod<C: Coeff>(c: &C, a: &[C::E], f: &[C::E]) -> Option<Vec<C::E>> {
    let (mut r0, mut r1) = (f.to_vec(), trim(c, a.to_vec()));
    let (mut t0, mut t1): (Vec<C::E>, Vec<C::E>) = (Vec::new(), vec![c.one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(c, &r0, &r1);
        let t = poly_sub(c, &t0, &poly_mul(c, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.len() != 1 {
        return None;
    }
    let g = c.inv(&r0[0])?;
    Some(t0.iter().map(|x| c.mul(x, &g)).collect())
}

/// m-th cyclotomic polynomial with integer coefficients.
pub fn cyclotomic_polynomial(m: u64) -> Vec<i64> {
    let c = Rationals;
    let mut num: Vec<BigRational> = vec![c.zero(); m as usize + 1];
    num[0] = c.from_i64(-1);
    num[m as usize] = c.one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let phi_d: Vec<BigRational> = cyclotomic_polynomial(d)
            .iter()
            .map(|&x| c.from_i64(x))
            .collect();
        num = poly_divrem(&c, &num, &phi_d).0;
    }
    num.iter()
        .map(|x| x.to_integer().to_i64().expect("small coefficients"))
        .collect()
}

/// Operations shared by all exact fields used for symbol algebras.
pub trait ExactField: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, a: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn characteristic(&self) -> u64;
    fn name(&self) -> String;
    fn render(&self, a: &Self::Elem) -> String;
    /// A primitive m-th root of unity, if the field has one.
    fn root_of_unity(&self, m: u64) -> Option<Self::Elem>;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// a^k for any integer k; a must be nonzero when k < 0.
    fn pow_signed(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        let x = self.pow(a, k.unsigned_abs());
        if k < 0 {
            self.inv(&x).expect("nonzero base")
        } else {
            x
        }
    }

    fn is_primitive_root(&self, z: &Self::Elem, m: u64) -> bool {
        m > 0
            && self.pow(z, m) == self.one()
            && prime_factors(m)
                .iter()
                .all(|&r| self.pow(z, m / r) != self.one())
    }
}

/// C[x]/(f) for a monic irreducible f.
#[derive(Clone, Debug)]
pub struct PolyField<C: Coeff> {
    pub coeff: C,
    /// Monic modulus, lowest degree first.
    pub modulus: Vec<C::E>,
    pub name: String,
    /// m for Q(ζ_m), where x is ζ_m.
    cyclotomic_order: Option<u64>,
}

pub type FiniteField = PolyField<PrimeField>;
pub type CyclotomicField = PolyField<Rationals>;

impl<C: Coeff> PolyField<C> {
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn normalize(&self, v: Vec<C::E>) -> Vec<C::E> {
        let mut r = poly_rem(&self.coeff, &v, &self.modulus);
        r.resize(self.degree(), self.coeff.zero());
        r
    }

    /// The class of x.
    pub fn generator(&self) -> Vec<C::E> {
        self.normalize(vec![self.coeff.zero(), self.coeff.one()])
    }

    pub fn from_coeffs(&self, v: Vec<C::E>) -> Vec<C::E> {
        self.normalize(v)
    }

    /// Σ a_i y^i for a = Σ a_i x^i, i.e. the endomorphism x ↦ y.
    pub fn substitute(&self, a: &[C::E], y: &[C::E]) -> Vec<C::E> {
        let mut acc = self.zero();
        for ai in a.iter().rev() {
            acc = self.mul(&acc, &y.to_vec());
            acc[0] = self.coeff.add(&acc[0], ai);
        }
        acc
    }
}

impl FiniteField {
    /// GF(p^k) modulo the lexicographically least monic irreducible polynomial
    /// of degree k (coefficients compared from the top degree down).
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidField("degree must be positive".into()));
        }
        let c = PrimeField { p };
        let k = k as usize;
        let mut tail = vec![0u64; k];
        loop {
            let mut f = tail.clone();
            f.push(1);
            if is_irreducible(&c, &f) {
                return Ok(Self {
                    coeff: c,
                    modulus: f,
                    name: format!("F_{p}^{k}"),
                    cyclotomic_order: None,
                });
            }
            // Next tail in lexicographic order from the x^{k-1} coefficient down.
            let mut i = 0;
            loop {
                if i == k {
                    return Err(Error::InvalidField(format!(
                        "no irreducible polynomial of degree {k} found"
                    )));
                }
                tail[i] += 1;
                if tail[i] < p {
                    break;
                }
                tail[i] = 0;
                i += 1;
            }
        }
    }

    /// The field order p^k.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.coeff.p).pow(self.degree() as u32)
    }

    /// Element with base-p digits of `idx` as coefficients.
    pub fn element_from_index(&self, mut idx: u128) -> Vec<u64> {
        let p = self.coeff.p as u128;
        (0..self.degree())
            .map(|_| {
                let d = (idx % p) as u64;
                idx /= p;
                d
            })
            .collect()
    }

    /// The Frobenius a ↦ a^p.
    pub fn frobenius(&self, a: &[u64]) -> Vec<u64> {
        self.pow(&a.to_vec(), self.coeff.p)
    }
}

/// Rabin's test: x^{p^k} ≡ x and gcd(x^{p^{k/r}} − x, f) = 1 for primes r | k.
fn is_irreducible(c: &PrimeField, f: &[u64]) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut powers = Vec::with_capacity(k + 1);
    let mut cur = poly_rem(c, &x, f);
    powers.push(cur.clone());
    for _ in 0..k {
        cur = pow_poly_mod(c, &cur, c.p, f);
        powers.push(cur.clone());
    }
    if !poly_sub(c, &powers[k], &poly_rem(c, &x, f)).is_empty() {
        return false;
    }
    prime_factors(k as u64).into_iter().all(|r| {
        let h = poly_sub(c, &powers[k / r as usize], &x);
        poly_gcd(c, &h, f).len() == 1
    })
}

fn pow_poly_mod(c: &PrimeField, a: &[u64], mut e: u64, f: &[u64]) -> Vec<u64> {
    let mut base = a.to_vec();
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(c, &poly_mul(c, &acc, &base), f);
        }
        base = poly_rem(c, &poly_mul(c, &base, &base), f);
        e >>= 1;
    }
    acc
}

impl CyclotomicField {
    /// Q(ζ_m) = Q[x]/Φ_m(x).
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidField("m must be positive".into()));
        }
        let c = Rationals;
        let modulus = cyclotomic_polynomial(m)
            .iter()
            .map(|&a| c.from_i64(a))
            .collect();
        Ok(Self {
            coeff: c,
            modulus,
            name: format!("Q(zeta_{m})"),
            cyclotomic_order: Some(m),
        })
    }

    pub fn from_rational(&self, r: BigRational) -> Vec<BigRational> {
        self.normalize(vec![r])
    }

    /// The automorphism ζ ↦ ζ^t for gcd(t, m) = 1.
    pub fn automorphism(&self, a: &[BigRational], t: u64) -> Result<Vec<BigRational>> {
        let m = self.cyclotomic_order.expect("cyclotomic field");
        if gcd(t, m) != 1 {
            return Err(Error::NotCoprime { k: t as i64, m });
        }
        let zt = self.pow(&self.generator(), t);
        Ok(self.substitute(a, &zt))
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conjugate(&self, a: &[BigRational]) -> Vec<BigRational> {
        let m = self.cyclotomic_order.expect("cyclotomic field");
        self.automorphism(a, (m - 1).max(1))
            .expect("m - 1 is coprime to m")
    }

    /// The element as a rational number, if it lies in Q.
    pub fn as_rational(&self, a: &[BigRational]) -> Option<BigRational> {
        a.iter()
            .skip(1)
            .all(|x| x.is_zero())
            .then(|| a.first().cloned().unwrap_or_else(BigRational::zero))
    }
}

impl<C: Coeff> ExactField for PolyField<C> {
    type Elem = Vec<C::E>;

    fn zero(&self) -> Self::Elem {
        vec![self.coeff.zero(); self.degree()]
    }
    fn one(&self) -> Self::Elem {
        self.normalize(vec![self.coeff.one()])
    }
    fn from_i64(&self, a: i64) -> Self::Elem {
        self.normalize(vec![self.coeff.from_i64(a)])
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.coeff.add(x, y)).collect()
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.coeff.sub(x, y)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.normalize(poly_mul(&self.coeff, a, b))
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        poly_inv_mod(&self.coeff, a, &self.modulus).map(|v| self.normalize(v))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|x| self.coeff.is_zero(x))
    }
    fn characteristic(&self) -> u64 {
        self.coeff.characteristic()
    }
    fn name(&self) -> String {
        self.name.clone()
    }
    fn render(&self, a: &Self::Elem) -> String {
        let parts: Vec<String> = a.iter().map(|x| self.coeff.render(x)).collect();
        format!("[{}]", parts.join(", "))
    }

    fn root_of_unity(&self, m: u64) -> Option<Self::Elem> {
        if m == 0 {
            return None;
        }
        if let Some(order) = self.cyclotomic_order {
            // Q(ζ_M) has the roots of unity of order dividing lcm(2, M); for odd M, −ζ has order 2M.
            let zeta = self.generator();
            let (z, big) = if order % 2 == 1 {
                (self.neg(&zeta), 2 * order)
            } else {
                (zeta, order)
            };
            return (big % m == 0).then(|| self.pow(&z, big / m));
        }
        let p = self.coeff.characteristic();
        let q = BigUint::from(p).pow(self.degree() as u32);
        let q1 = &q - 1u32;
        if (&q1 % m) != BigUint::zero() {
            return None;
        }
        let e = &q1 / m;
        let mut idx: u128 = 1;
        loop {
            let x: Vec<C::E> = {
                let mut i = idx;
                let pc = p as u128;
                (0..self.degree())
                    .map(|_| {
                        let d = (i % pc) as i64;
                        i /= pc;
                        self.coeff.from_i64(d)
                    })
                    .collect()
            };
            if !self.is_zero(&x) {
                let acc = self.pow_big(&x, &e);
                if self.is_primitive_root(&acc, m) {
                    return Some(acc);
                }
            }
            idx += 1;
        }
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn finite_field_moduli() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus, vec![1, 1, 1]);
        let f = FiniteField::new(7, 3).unwrap();
        assert_eq!(f.degree(), 3);
        // Every nonzero element of F_8 is invertible.
        let f = FiniteField::new(2, 3).unwrap();
        for i in 1..8 {
            let x = f.element_from_index(i);
            assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
        }
        assert_eq!(f.pow(&f.generator(), 7), f.one());
    }

    #[test]
    fn roots_of_unity() {
        let f = FiniteField::new(7, 1).unwrap();
        let z = f.root_of_unity(3).unwrap();
        assert!(f.is_primitive_root(&z, 3));
        assert!(f.root_of_unity(5).is_none());
        let f4 = FiniteField::new(2, 2).unwrap();
        assert!(f4.is_primitive_root(&f4.root_of_unity(3).unwrap(), 3));
        let q3 = CyclotomicField::new(3).unwrap();
        assert!(q3.is_primitive_root(&q3.root_of_unity(3).unwrap(), 3));
        assert!(q3.is_primitive_root(&q3.root_of_unity(6).unwrap(), 6));
        assert!(q3.root_of_unity(4).is_none());
        let q1 = CyclotomicField::new(1).unwrap();
        assert_eq!(q1.root_of_unity(2).unwrap(), q1.from_i64(-1));
    }

    #[test]
    fn cyclotomic_arithmetic() {
        let k = CyclotomicField::new(5).unwrap();
        let z = k.generator();
        let s = (0..5).fold(k.zero(), |acc, i| k.add(&acc, &k.pow(&z, i)));
        assert!(k.is_zero(&s));
        let a = k.add(&k.from_i64(2), &z);
        assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), k.one());
        let c = k.conjugate(&z);
        assert_eq!(k.mul(&z, &c), k.one());
        assert_eq!(
            k.automorphism(&z, 5).unwrap_err(),
            Error::NotCoprime { k: 5, m: 5 }
        );
        assert_eq!(k.as_rational(&k.from_i64(3)), Some(rational(3, 1)));
    }
}
