use super::modulus::{enumerate_characters, Modulus, UnitCharacter};
use crate::error::Result;
use serde::Serialize;

/// An element of Z/p^n[H] ≅ Z/p^n[x]/(x^s - 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupRingElem {
    pub modulus: Modulus,
    pub coeffs: Vec<u64>,
}

impl GroupRingElem {
    pub fn zero(modulus: Modulus, s: usize) -> Self {
        Self {
            modulus,
            coeffs: vec![0; s],
        }
    }

    pub fn one(modulus: Modulus, s: usize) -> Self {
        let mut e = Self::zero(modulus, s);
        e.coeffs[0] = 1 % modulus.value;
        e
    }

    /// The group element h^j.
    pub fn basis(modulus: Modulus, s: usize, j: usize) -> Self {
        let mut e = Self::zero(modulus, s);
        e.coeffs[j % s] = 1;
        e
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let r = self.modulus.ring();
        Self {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| r.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        Self {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .map(|&a| self.modulus.mul(a, c))
                .collect(),
        }
    }

    /// Convolution product with h^s = 1.
    pub fn mul(&self, other: &Self) -> Self {
        let s = self.len();
        assert_eq!(s, other.len());
        let r = self.modulus.ring();
        let mut out = vec![0; s];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % s;
                out[k] = r.add(out[k], r.mul(a, b));
            }
        }
        Self {
            modulus: self.modulus,
            coeffs: out,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// e_χ = t Σ_{j<s} γ^{-j} h^j with t = s^{-1} mod p^n.
pub fn idempotent(chi: &UnitCharacter) -> GroupRingElem {
    let m = chi.modulus;
    let s = chi.group_order;
    let t = m.inv(s).expect("s divides p-1, hence is a unit");
    let gamma_inv = m.inv(chi.gamma).expect("unit");
    let coeffs = (0..s).map(|j| m.mul(t, m.pow(gamma_inv, j))).collect();
    GroupRingElem { modulus: m, coeffs }
}

/// Idempotents e_1..e_s, in the order of [`enumerate_characters`].
pub fn idempotents(modulus: Modulus, s: u64) -> Result<Vec<(UnitCharacter, GroupRingElem)>> {
    Ok(enumerate_characters(modulus, s)?
        .into_iter()
        .map(|c| (c, idempotent(&c)))
        .collect())
}

/// Result of checking the defining properties of a full idempotent system.
#[derive(Clone, Debug, Serialize)]
pub struct IdempotentCheck {
    pub idempotent: bool,
    pub orthogonal: bool,
    pub partition_of_unity: bool,
    pub eigen: bool,
}

impl IdempotentCheck {
    pub fn all(&self) -> bool {
        self.idempotent && self.orthogonal && self.partition_of_unity && self.eigen
    }
}

/// Verifies e_i^2 = e_i, e_i e_j = 0, Σ e_i = 1 and h e_i = γ_i e_i by group-ring arithmetic.
pub fn check_idempotents(system: &[(UnitCharacter, GroupRingElem)]) -> IdempotentCheck {
    let Some((first, _)) = system.first() else {
        return IdempotentCheck {
            idempotent: true,
            orthogonal: true,
            partition_of_unity: false,
            eigen: true,
        };
    };
    let m = first.modulus;
    let s = first.group_order as usize;
    let h = GroupRingElem::basis(m, s, 1);
    let mut out = IdempotentCheck {
        idempotent: true,
        orthogonal: true,
        partition_of_unity: true,
        eigen: true,
    };
    let mut sum = GroupRingElem::zero(m, s);
    for (i, (chi, e)) in system.iter().enumerate() {
        out.idempotent &= e.mul(e) == *e;
        out.eigen &= h.mul(e) == e.scale(chi.gamma);
        for (_, f) in &system[i + 1..] {
            out.orthogonal &= e.mul(f).is_zero();
        }
        sum = sum.add(e);
    }
    out.partition_of_unity = sum == GroupRingElem::one(m, s);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_two_mod_five() {
        let m = Modulus::new(5, 1).unwrap();
        let chi = UnitCharacter::new(m, 4, 2).unwrap();
        let e = idempotent(&chi);
        assert_eq!(e.coeffs, vec![4, 2, 1, 3]);
        assert_eq!(e.mul(&e), e);
    }

    #[test]
    fn trivial_group() {
        let m = Modulus::new(5, 1).unwrap();
        let sys = idempotents(m, 1).unwrap();
        assert_eq!(sys.len(), 1);
        assert_eq!(sys[0].1.coeffs, vec![1]);
    }

    #[test]
    fn full_systems_pass() {
        for (p, n) in [(3, 3), (7, 2), (13, 1)] {
            let m = Modulus::new(p, n).unwrap();
            for s in (1..p).filter(|s| (p - 1) % s == 0) {
                assert!(check_idempotents(&idempotents(m, s).unwrap()).all());
            }
        }
    }
}
