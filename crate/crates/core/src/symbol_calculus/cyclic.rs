//! Cyclic algebras (C/F, σ, b) over a prime field F = F_ℓ with C = F_{ℓ^{p^n}}
//! and σ the Frobenius, and the p^n-th power witness x^{p^n} = b.

use crate::arith::{gcd, is_prime, pow_mod};
use crate::error::{Error, Result};
use crate::fields::{ExactField, FiniteField};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicAlgebraPresentation {
    /// F = F_ell.
    pub ell: u64,
    pub p: u64,
    pub n: u32,
    /// b ∈ F*, as a residue mod ell.
    pub b: u64,
}

/// ⊕_{i<p^n} C x^i with x^{p^n} = b and x c x^{-1} = σ(c).
#[derive(Clone, Debug)]
pub struct CyclicAlgebra {
    pub presentation: CyclicAlgebraPresentation,
    pub ext: FiniteField,
    pub degree: usize,
}

type Elem = Vec<Vec<u64>>;

impl CyclicAlgebra {
    pub fn new(pres: &CyclicAlgebraPresentation) -> Result<Self> {
        if !is_prime(pres.ell) {
            return Err(Error::InvalidField(format!(
                "F_{} is not a prime field",
                pres.ell
            )));
        }
        if !is_prime(pres.p) || pres.n == 0 {
            return Err(Error::InvalidModulus(format!(
                "need a prime p and n >= 1, got p = {}, n = {}",
                pres.p, pres.n
            )));
        }
        if pres.b.is_multiple_of(pres.ell) {
            return Err(Error::ZeroSlot);
        }
        let degree = pres.p.pow(pres.n) as usize;
        let ext = FiniteField::new(pres.ell, degree as u32)?;
        Ok(Self {
            presentation: pres.clone(),
            ext,
            degree,
        })
    }

    pub fn zero(&self) -> Elem {
        vec![self.ext.zero(); self.degree]
    }

    pub fn constant(&self, c: &[u64]) -> Elem {
        let mut v = self.zero();
        v[0] = c.to_vec();
        v
    }

    pub fn x(&self) -> Elem {
        let mut v = self.zero();
        if self.degree == 1 {
            v[0] = self.ext.from_i64(self.presentation.b as i64);
        } else {
            v[1] = self.ext.one();
        }
        v
    }

    fn sigma_pow(&self, c: &[u64], i: usize) -> Vec<u64> {
        (0..i).fold(c.to_vec(), |acc, _| self.ext.frobenius(&acc))
    }

    /// (Σ c_i x^i)(Σ d_j x^j) = Σ c_i σ^i(d_j) x^{i+j}.
    pub fn mul(&self, u: &Elem, v: &Elem) -> Elem {
        let f = &self.ext;
        let bb = f.from_i64(self.presentation.b as i64);
        let mut out = self.zero();
        for (i, ci) in u.iter().enumerate() {
            if f.is_zero(ci) {
                continue;
            }
            for (j, dj) in v.iter().enumerate() {
                if f.is_zero(dj) {
                    continue;
                }
                let mut term = f.mul(ci, &self.sigma_pow(dj, i));
                let mut k = i + j;
                if k >= self.degree {
                    k -= self.degree;
                    term = f.mul(&term, &bb);
                }
                out[k] = f.add(&out[k], &term);
            }
        }
        out
    }

    pub fn pow(&self, u: &Elem, e: u64) -> Elem {
        let mut acc = self.constant(&self.ext.one());
        for _ in 0..e {
            acc = self.mul(&acc, u);
        }
        acc
    }

    /// Lies in F·1.
    pub fn is_in_base(&self, u: &Elem) -> bool {
        let f = &self.ext;
        u[1..].iter().all(|c| f.is_zero(c)) && f.frobenius(&u[0]) == u[0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicityWitness {
    /// γ = x with γ^{p^n} = b.
    pub gamma_power_is_b: bool,
    /// x c = σ(c) x for c the generator of C.
    pub conjugation_is_sigma: bool,
    pub b_is_pth_power: bool,
}

/// γ = x is a witness with γ^{p^n} = b ∈ F* − F*^p; if b = d^p, returns the
/// element δ = γ^{p^{n−1}} d^{-1} with δ^p = 1 and δ ∉ F.
pub fn cyclicity_witness(pres: &CyclicAlgebraPresentation) -> Result<CyclicityWitness> {
    let alg = CyclicAlgebra::new(pres)?;
    let f = &alg.ext;
    let x = alg.x();
    let b = pres.b % pres.ell;
    let gamma_power_is_b = alg.pow(&x, alg.degree as u64) == alg.constant(&f.from_i64(b as i64));
    let c = alg.constant(&f.generator());
    let conjugation_is_sigma = alg.degree == 1
        || alg.mul(&x, &c) == alg.mul(&alg.constant(&f.frobenius(&f.generator())), &x);
    // b ∈ F*^p iff b^{(ℓ−1)/g} = 1 with g = gcd(p, ℓ − 1).
    let ell = pres.ell;
    let g = gcd(pres.p, ell - 1);
    let b_is_pth_power = pow_mod(b, (ell - 1) / g, ell) == 1;
    if b_is_pth_power {
        let d = (1..ell)
            .find(|&d| pow_mod(d, pres.p, ell) == b)
            .expect("b is a p-th power");
        let d_inv = crate::arith::inv_mod(d, ell).expect("unit");
        let gp = alg.pow(&x, pres.p.pow(pres.n - 1));
        let delta = alg.mul(&gp, &alg.constant(&f.from_i64(d_inv as i64)));
        debug_assert_eq!(alg.pow(&delta, pres.p), alg.constant(&f.one()));
        return Err(Error::DegenerateNotWitness {
            d: d.to_string(),
            delta: render(&alg, &delta),
        });
    }
    Ok(CyclicityWitness {
        gamma_power_is_b,
        conjugation_is_sigma,
        b_is_pth_power,
    })
}

/// δ in the contradiction of a degenerate presentation, with its checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contradiction {
    pub d: u64,
    pub delta_order_divides_p: bool,
    pub delta_outside_f: bool,
}

pub fn contradiction_element(pres: &CyclicAlgebraPresentation, d: u64) -> Result<Contradiction> {
    let alg = CyclicAlgebra::new(pres)?;
    let f = &alg.ext;
    let d_inv = crate::arith::inv_mod(d % pres.ell, pres.ell).ok_or(Error::ZeroSlot)?;
    let gp = alg.pow(&alg.x(), pres.p.pow(pres.n - 1));
    let delta = alg.mul(&gp, &alg.constant(&f.from_i64(d_inv as i64)));
    Ok(Contradiction {
        d,
        delta_order_divides_p: alg.pow(&delta, pres.p) == alg.constant(&f.one()),
        delta_outside_f: !alg.is_in_base(&delta),
    })
}

fn render(alg: &CyclicAlgebra, u: &Elem) -> String {
    let terms: Vec<String> = u
        .iter()
        .enumerate()
        .filter(|(_, c)| !alg.ext.is_zero(c))
        .map(|(i, c)| format!("{}*x^{i}", alg.ext.render(c)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
