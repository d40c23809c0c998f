use super::eigen::{eigen_decompose_all, EigenDecomposition};
use super::module::{CyclicActionModule, Submodule};
use super::modulus::UnitCharacter;
use crate::error::Result;
use crate::linalg::Mat;
use serde::Serialize;

/// X(A) = Hom(A, p^{-n}Z/Z) with (h ψ)(a) = ψ(h^{-1} a).
///
/// A functional ψ is stored as y ∈ ⊕ Z/p^{k_i} with
/// ψ(a) = Σ y_i a_i p^{n-k_i} / p^n.
#[derive(Clone, Debug, Serialize)]
pub struct DualModule {
    pub base: CyclicActionModule,
    pub dual: CyclicActionModule,
}

impl DualModule {
    pub fn new(base: &CyclicActionModule) -> Result<Self> {
        let ring = base.ring();
        let r = base.rank();
        let inv = base.inverse_action();
        let mut s = Mat::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                let (ki, kj) = (base.cyclic_parts[i], base.cyclic_parts[j]);
                let x = inv.get(i, j);
                let y = if kj >= ki {
                    ring.mul(x, ring.pow_p(kj - ki))
                } else {
                    // Exact: well-definedness gives p^{ki-kj} | x.
                    x / base.modulus.p.pow(ki - kj)
                };
                s.set(j, i, y);
            }
        }
        let dual = CyclicActionModule::new(
            base.modulus,
            base.cyclic_parts.clone(),
            s,
            base.acting_order,
        )?;
        Ok(Self {
            base: base.clone(),
            dual,
        })
    }

    /// B(a, ψ) as the numerator of an element of p^{-n}Z/Z.
    pub fn pairing(&self, a: &[u64], y: &[u64]) -> u64 {
        let ring = self.base.ring();
        let n = self.base.modulus.n;
        a.iter()
            .zip(y)
            .zip(&self.base.cyclic_parts)
            .fold(0, |acc, ((&ai, &yi), &k)| {
                ring.add(acc, ring.mul(ring.mul(ai, yi), ring.pow_p(n - k)))
            })
    }

    /// The pairing table on standard generators.
    pub fn table(&self) -> Vec<Vec<u64>> {
        let r = self.base.rank();
        let e = |i: usize| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        };
        (0..r)
            .map(|i| (0..r).map(|j| self.pairing(&e(i), &e(j))).collect())
            .collect()
    }

    /// Linear form a ↦ (B(a, y_l))_l for a family of functionals.
    fn pairing_matrix(&self, ys: &[Vec<u64>]) -> Mat {
        let ring = self.base.ring();
        let n = self.base.modulus.n;
        let rows: Vec<Vec<u64>> = ys
            .iter()
            .map(|y| {
                y.iter()
                    .zip(&self.base.cyclic_parts)
                    .map(|(&yi, &k)| ring.mul(yi, ring.pow_p(n - k)))
                    .collect()
            })
            .collect();
        let mut m = Mat::zeros(rows.len(), self.base.rank());
        for (l, row) in rows.iter().enumerate() {
            for (i, &v) in row.iter().enumerate() {
                m.set(l, i, v);
            }
        }
        m
    }

    /// {a ∈ A : B(a, ψ) = 0 for all ψ ∈ Y}.
    pub fn perp_in_base(&self, y: &Submodule) -> Submodule {
        if y.gens.is_empty() {
            return self.base.whole();
        }
        self.base.kernel_to_uniform(&self.pairing_matrix(&y.gens))
    }

    /// {ψ ∈ X : B(a, ψ) = 0 for all a ∈ S}.
    pub fn perp_in_dual(&self, s: &Submodule) -> Submodule {
        let swapped = DualModule {
            base: self.dual.clone(),
            dual: self.base.clone(),
        };
        swapped.perp_in_base(s)
    }

    pub fn is_equivariant(&self) -> bool {
        let r = self.base.rank();
        let e = |i: usize| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        };
        (0..r).all(|i| {
            (0..r).all(|j| {
                self.pairing(&self.base.act(&e(i)), &self.dual.act(&e(j)))
                    == self.pairing(&e(i), &e(j))
            })
        })
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.perp_in_dual(&self.base.whole()).log_order == 0
            && self.perp_in_base(&self.dual.whole()).log_order == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DualPairReport {
    pub character: UnitCharacter,
    pub base_log_order: u32,
    pub dual_inverse_log_order: u32,
    /// Perp of X^(χ^{-1}) in A.
    pub perp: Submodule,
    pub perp_is_complement: bool,
    pub nondegenerate: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualDecomposition {
    pub dual: DualModule,
    pub base_components: EigenDecomposition,
    pub dual_components: EigenDecomposition,
    pub equivariant: bool,
    pub nondegenerate: bool,
    /// B(A^(χ_i), X^(χ_j)) = 0 whenever χ_j ≠ χ_i^{-1}.
    pub orthogonality: bool,
    pub pairs: Vec<DualPairReport>,
}

impl DualDecomposition {
    pub fn verified(&self) -> bool {
        self.equivariant
            && self.nondegenerate
            && self.orthogonality
            && self.base_components.verified()
            && self.dual_components.verified()
            && self.pairs.iter().all(|p| {
                p.base_log_order == p.dual_inverse_log_order
                    && p.perp_is_complement
                    && p.nondegenerate
            })
    }
}

pub fn dual_decompose(a: &CyclicActionModule) -> Result<DualDecomposition> {
    let dual = DualModule::new(a)?;
    let base_components = eigen_decompose_all(a)?;
    let dual_components = eigen_decompose_all(&dual.dual)?;
    let mut orthogonality = true;
    let mut pairs = Vec::new();
    for ca in &base_components.components {
        let inv = ca.character.inverse();
        for cx in &dual_components.components {
            if cx.character.gamma != inv.gamma {
                orthogonality &= ca
                    .submodule
                    .gens
                    .iter()
                    .all(|g| cx.submodule.gens.iter().all(|y| dual.pairing(g, y) == 0));
            }
        }
        let xinv = dual_components
            .component(inv.gamma)
            .expect("every character has a component");
        let perp = dual.perp_in_base(xinv);
        let others: Vec<&Submodule> = base_components
            .components
            .iter()
            .filter(|c| c.character.gamma != ca.character.gamma)
            .map(|c| &c.submodule)
            .collect();
        let complement = a.sum(&others);
        let left_kernel = a.intersection(&ca.submodule, &perp);
        let right_kernel = dual
            .dual
            .intersection(xinv, &dual.perp_in_dual(&ca.submodule));
        pairs.push(DualPairReport {
            character: ca.character,
            base_log_order: ca.submodule.log_order,
            dual_inverse_log_order: xinv.log_order,
            perp_is_complement: a.same_submodule(&perp, &complement),
            nondegenerate: left_kernel.log_order == 0 && right_kernel.log_order == 0,
            perp,
        });
    }
    Ok(DualDecomposition {
        equivariant: dual.is_equivariant(),
        nondegenerate: dual.is_nondegenerate(),
        orthogonality,
        dual,
        base_components,
        dual_components,
        pairs,
    })
}
