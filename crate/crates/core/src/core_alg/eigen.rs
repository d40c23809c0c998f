use super::group_ring::idempotent;
use super::module::{CyclicActionModule, Submodule};
use super::modulus::{enumerate_characters, UnitCharacter};
use crate::error::{Error, Result};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Eigencomponent {
    pub character: UnitCharacter,
    pub submodule: Submodule,
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenDecomposition {
    pub components: Vec<Eigencomponent>,
    /// Σ log|A^(χ)| = log|A|.
    pub orders_sum: bool,
    /// The components together generate A with no overlap.
    pub direct: bool,
    pub stable: bool,
    /// e_i A coincides with the eigenkernel {a : h a = γ_i a}.
    pub matches_eigenkernel: bool,
}

impl EigenDecomposition {
    pub fn verified(&self) -> bool {
        self.orders_sum && self.direct && self.stable && self.matches_eigenkernel
    }

    pub fn component(&self, gamma: u64) -> Option<&Submodule> {
        self.components
            .iter()
            .find(|c| c.character.gamma == gamma)
            .map(|c| &c.submodule)
    }
}

/// A = ⊕ A^(χ_i) with A^(χ_i) = e_i A, computed through the idempotents.
pub fn eigen_decompose(
    a: &CyclicActionModule,
    chars: &[UnitCharacter],
) -> Result<EigenDecomposition> {
    if !a.is_semisimple() {
        return Err(Error::NonSemisimple(a.acting_order));
    }
    let s = a.acting_order;
    let pm1 = a.modulus.p - 1;
    if !pm1.is_multiple_of(s) {
        return Err(Error::NotDivisor { s, pm1 });
    }
    if let Some(c) = chars
        .iter()
        .find(|c| c.group_order != s || c.modulus != a.modulus)
    {
        return Err(Error::InvalidModule(format!(
            "character {c:?} is not a character of the acting group"
        )));
    }
    let mut components = Vec::with_capacity(chars.len());
    for chi in chars {
        let e = idempotent(chi);
        let sub = a.image(&a.group_ring_action(&e.coeffs));
        components.push(Eigencomponent {
            character: *chi,
            submodule: sub,
        });
    }
    let total: u32 = components.iter().map(|c| c.submodule.log_order).sum();
    let parts: Vec<&Submodule> = components.iter().map(|c| &c.submodule).collect();
    let sum = a.sum(&parts);
    let stable = parts.iter().all(|s| a.is_stable(s));
    let matches_eigenkernel = components
        .iter()
        .all(|c| a.same_submodule(&c.submodule, &a.eigen_kernel(c.character.gamma)));
    Ok(EigenDecomposition {
        orders_sum: total == a.log_order(),
        direct: sum.log_order == total && sum.log_order == a.log_order(),
        stable,
        matches_eigenkernel,
        components,
    })
}

/// Eigen decomposition over all characters of the acting group.
pub fn eigen_decompose_all(a: &CyclicActionModule) -> Result<EigenDecomposition> {
    if !a.is_semisimple() {
        return Err(Error::NonSemisimple(a.acting_order));
    }
    let chars = enumerate_characters(a.modulus, a.acting_order)?;
    eigen_decompose(a, &chars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_alg::Modulus;
    use crate::linalg::Mat;

    /// Independent oracle: all a with h a = γ a.
    fn eigenvectors(a: &CyclicActionModule, gamma: u64) -> usize {
        a.elements()
            .into_iter()
            .filter(|x| a.act(x) == a.scale(gamma, x))
            .count()
    }

    #[test]
    fn z25_with_mult_by_seven() {
        let m = Modulus::new(5, 2).unwrap();
        let a = CyclicActionModule::cyclic(m, 2, 7, 4).unwrap();
        let d = eigen_decompose_all(&a).unwrap();
        assert!(d.verified());
        assert_eq!(d.component(7).unwrap().log_order, 2);
        for c in &d.components {
            assert_eq!(
                5usize.pow(c.submodule.log_order),
                eigenvectors(&a, c.character.gamma)
            );
        }
    }

    #[test]
    fn diagonal_two_four() {
        let m = Modulus::new(5, 1).unwrap();
        let a =
            CyclicActionModule::new(m, vec![1, 1], Mat::from_rows(&[vec![2, 0], vec![0, 4]]), 4)
                .unwrap();
        let d = eigen_decompose_all(&a).unwrap();
        assert!(d.verified());
        assert_eq!(d.component(2).unwrap().log_order, 1);
        assert_eq!(d.component(4).unwrap().log_order, 1);
        assert_eq!(d.component(1).unwrap().log_order, 0);
        assert_eq!(d.component(3).unwrap().log_order, 0);
    }

    #[test]
    fn trivial_action_is_all_trivial_component() {
        let m = Modulus::new(7, 2).unwrap();
        let a = CyclicActionModule::trivial_action(m, vec![2, 1], 3).unwrap();
        let d = eigen_decompose_all(&a).unwrap();
        assert!(d.verified());
        assert_eq!(d.component(1).unwrap().log_order, 3);
    }

    #[test]
    fn non_semisimple_rejected() {
        let m = Modulus::new(3, 2).unwrap();
        let a = CyclicActionModule::cyclic(m, 2, 4, 3).unwrap();
        assert!(matches!(
            eigen_decompose_all(&a),
            Err(Error::NonSemisimple(3))
        ));
    }
}
