use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Exponent {
    Finite(u64),
    Infinite,
}

impl Exponent {
    fn add(self, other: Self) -> Self {
        match (self, other) {
            (Exponent::Finite(a), Exponent::Finite(b)) => Exponent::Finite(a + b),
            _ => Exponent::Infinite,
        }
    }
}

/// A formal product Π ℓ^{r_ℓ} with r_ℓ ∈ N ∪ {∞}; zero exponents are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SupernaturalNumber {
    pub exponents: BTreeMap<u64, Exponent>,
}

impl SupernaturalNumber {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(u64, Exponent)]) -> Self {
        let mut s = Self::one();
        for &(ell, e) in pairs {
            s.set(ell, e);
        }
        s
    }

    pub fn from_integer(n: u64) -> Self {
        assert!(n > 0, "supernatural numbers are positive");
        let mut s = Self::one();
        for ell in crate::arith::prime_factors(n) {
            s.set(
                ell,
                Exponent::Finite(crate::arith::vp(n, ell).unwrap() as u64),
            );
        }
        s
    }

    pub fn get(&self, ell: u64) -> Exponent {
        self.exponents
            .get(&ell)
            .copied()
            .unwrap_or(Exponent::Finite(0))
    }

    fn set(&mut self, ell: u64, e: Exponent) {
        if e == Exponent::Finite(0) {
            self.exponents.remove(&ell);
        } else {
            self.exponents.insert(ell, e);
        }
    }

    fn primes(&self, other: &Self) -> Vec<u64> {
        let mut ps: Vec<u64> = self
            .exponents
            .keys()
            .chain(other.exponents.keys())
            .copied()
            .collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::one();
        for ell in self.primes(other) {
            out.set(ell, self.get(ell).add(other.get(ell)));
        }
        out
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exponents.iter().all(|(&ell, &e)| e <= other.get(ell))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut out = Self::one();
        for ell in self.primes(other) {
            out.set(ell, self.get(ell).min(other.get(ell)));
        }
        out
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = Self::one();
        for ell in self.primes(other) {
            out.set(ell, self.get(ell).max(other.get(ell)));
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        self.exponents
            .values()
            .all(|e| matches!(e, Exponent::Finite(_)))
    }
}

/// [K:F] = [K:E][E:F].
pub fn tower_check(
    k_e: &SupernaturalNumber,
    e_f: &SupernaturalNumber,
    k_f: &SupernaturalNumber,
) -> bool {
    k_e.mul(e_f) == *k_f
}

impl fmt::Display for SupernaturalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(ell, e)| match e {
                Exponent::Finite(1) => format!("{ell}"),
                Exponent::Finite(k) => format!("{ell}^{k}"),
                Exponent::Infinite => format!("{ell}^inf"),
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}
