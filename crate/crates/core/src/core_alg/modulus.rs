use crate::arith::{gcd, inv_mod, is_prime, mul_mod, pow_mod, prime_factors};
use crate::error::{Error, Result};
use crate::linalg::Zpn;
use num_bigint::BigUint;
use serde::Serialize;

/// The modulus p^n with p an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Modulus {
    pub p: u64,
    pub n: u32,
    /// p^n; construction fails if it does not fit in a u64.
    pub value: u64,
}

impl Modulus {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidModulus(format!(
                "p = {p} is not an odd prime"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidModulus("n must be positive".into()));
        }
        let value = p
            .checked_pow(n)
            .filter(|v| *v < (1 << 62))
            .ok_or_else(|| Error::InvalidModulus(format!("{p}^{n} is too large")))?;
        Ok(Self { p, n, value })
    }

    pub fn value_big(&self) -> BigUint {
        BigUint::from(self.p).pow(self.n)
    }

    pub fn ring(&self) -> Zpn {
        Zpn::new(self.p, self.n)
    }

    /// |(Z/p^n)*| = p^(n-1)(p-1).
    pub fn unit_group_order(&self) -> u64 {
        self.value / self.p * (self.p - 1)
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        inv_mod(a, self.value)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.value)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.value)
    }

    pub fn is_unit(&self, a: u64) -> bool {
        !a.is_multiple_of(self.p)
    }

    /// Least primitive root modulo p^n.
    pub fn primitive_root(&self) -> u64 {
        let phi = self.unit_group_order();
        let factors = prime_factors(phi);
        (2..self.value)
            .find(|&g| gcd(g, self.p) == 1 && factors.iter().all(|&r| self.pow(g, phi / r) != 1))
            .expect("(Z/p^n)* is cyclic for odd p")
    }
}

/// A character of a cyclic group H = <h> of order s into (Z/p^n)*,
/// stored by the image of the designated generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UnitCharacter {
    pub modulus: Modulus,
    pub group_order: u64,
    pub gamma: u64,
}

impl UnitCharacter {
    pub fn new(modulus: Modulus, group_order: u64, gamma: u64) -> Result<Self> {
        let gamma = gamma % modulus.value;
        if group_order == 0 || !modulus.is_unit(gamma) || modulus.pow(gamma, group_order) != 1 {
            return Err(Error::OutOfRange(format!(
                "gamma = {gamma} does not satisfy gamma^{group_order} = 1 mod {}",
                modulus.value
            )));
        }
        Ok(Self {
            modulus,
            group_order,
            gamma,
        })
    }

    pub fn trivial(modulus: Modulus, group_order: u64) -> Self {
        Self {
            modulus,
            group_order,
            gamma: 1,
        }
    }

    /// χ(h^j) = γ^j.
    pub fn eval(&self, j: u64) -> u64 {
        self.modulus.pow(self.gamma, j % self.group_order)
    }

    pub fn inverse(&self) -> Self {
        Self {
            gamma: self.modulus.inv(self.gamma).expect("unit"),
            ..*self
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            (self.modulus, self.group_order),
            (other.modulus, other.group_order)
        );
        Self {
            gamma: self.modulus.mul(self.gamma, other.gamma),
            ..*self
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.gamma == 1
    }

    /// Order of χ as an element of the character group.
    pub fn order(&self) -> u64 {
        crate::arith::mult_order_dividing(self.gamma, self.modulus.value, self.group_order)
    }
}

/// The s characters of a cyclic group of order s, sorted by γ ascending.
pub fn enumerate_characters(modulus: Modulus, s: u64) -> Result<Vec<UnitCharacter>> {
    let pm1 = modulus.p - 1;
    if s == 0 || !pm1.is_multiple_of(s) {
        return Err(Error::NotDivisor { s, pm1 });
    }
    let h = modulus.pow(modulus.primitive_root(), modulus.unit_group_order() / s);
    let mut gammas: Vec<u64> = Vec::with_capacity(s as usize);
    let mut x = 1;
    for _ in 0..s {
        gammas.push(x);
        x = modulus.mul(x, h);
    }
    gammas.sort_unstable();
    Ok(gammas
        .into_iter()
        .map(|gamma| UnitCharacter {
            modulus,
            group_order: s,
            gamma,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solutions_by_enumeration(m: Modulus, s: u64) -> Vec<u64> {
        (1..m.value)
            .filter(|&g| m.is_unit(g) && m.pow(g, s) == 1)
            .collect()
    }

    #[test]
    fn characters_mod_5_order_4() {
        let m = Modulus::new(5, 1).unwrap();
        let g: Vec<u64> = enumerate_characters(m, 4)
            .unwrap()
            .iter()
            .map(|c| c.gamma)
            .collect();
        assert_eq!(g, vec![1, 2, 3, 4]);
    }

    #[test]
    fn characters_match_enumeration() {
        for (p, n) in [(3, 2), (5, 2), (7, 1), (7, 3), (11, 2), (13, 3)] {
            let m = Modulus::new(p, n).unwrap();
            for s in 1..p {
                if (p - 1) % s != 0 {
                    continue;
                }
                let chars = enumerate_characters(m, s).unwrap();
                let g: Vec<u64> = chars.iter().map(|c| c.gamma).collect();
                assert_eq!(g, solutions_by_enumeration(m, s), "p={p} n={n} s={s}");
                assert!(chars[0].is_trivial());
            }
        }
    }

    #[test]
    fn cube_roots_mod_7() {
        let m = Modulus::new(7, 1).unwrap();
        let g: Vec<u64> = enumerate_characters(m, 3)
            .unwrap()
            .iter()
            .map(|c| c.gamma)
            .collect();
        assert_eq!(g, vec![1, 2, 4]);
        assert_eq!(
            enumerate_characters(Modulus::new(3, 2).unwrap(), 1)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn rejects_non_divisor() {
        let m = Modulus::new(7, 1).unwrap();
        assert!(matches!(
            enumerate_characters(m, 4),
            Err(Error::NotDivisor { .. })
        ));
        assert!(Modulus::new(2, 3).is_err());
        assert!(Modulus::new(9, 1).is_err());
    }
}
