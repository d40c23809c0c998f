use super::module::CyclicActionModule;
use super::modulus::Modulus;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use serde::Serialize;

/// Outcome of comparing B^(χ) with A^(χ|H̄) through the projection π(b) = a_0.
#[derive(Clone, Debug, Serialize)]
pub struct InductionWitness {
    pub s: u64,
    pub m: u64,
    pub gamma: u64,
    /// log_p |B^(χ)|.
    pub induced_log_order: u32,
    /// log_p |A^(χ|H̄)|.
    pub base_log_order: u32,
    pub injective: bool,
    pub image_matches: bool,
}

impl InductionWitness {
    pub fn bijective(&self) -> bool {
        self.injective && self.image_matches && self.induced_log_order == self.base_log_order
    }
}

/// B = Ind_{H̄→H} A for H = <σ> of order s and H̄ = <σ^m>, where `a.action`
/// is the action of σ^m. The action of σ is
/// σ(a_0, …, a_{m-1}) = (σ^m a_{m-1}, a_0, …, a_{m-2}).
pub fn induce(a: &CyclicActionModule, s: u64, m: u64) -> Result<CyclicActionModule> {
    if m == 0 || !s.is_multiple_of(m) {
        return Err(Error::InvalidModule(format!(
            "m = {m} does not divide s = {s}"
        )));
    }
    if !(s / m).is_multiple_of(a.acting_order) && !a.is_identity(&a.action.pow(s / m, &a.ring())) {
        return Err(Error::InvalidModule(
            "σ^m does not have order dividing s/m on A".into(),
        ));
    }
    let r = a.rank();
    let m = m as usize;
    let mut sigma = Mat::zeros(r * m, r * m);
    for i in 0..r {
        for j in 0..r {
            sigma.set(i, (m - 1) * r + j, a.action.get(i, j));
        }
    }
    for block in 1..m {
        for i in 0..r {
            sigma.set(block * r + i, (block - 1) * r + i, 1);
        }
    }
    let parts: Vec<u32> = (0..m)
        .flat_map(|_| a.cyclic_parts.iter().copied())
        .collect();
    CyclicActionModule::new(a.modulus, parts, sigma, s)
}

/// Builds B and checks that π: B^(χ) → A^(χ|H̄) is bijective, where χ(σ) = γ.
pub fn induce_and_project(
    a: &CyclicActionModule,
    s: u64,
    m: u64,
    gamma: u64,
) -> Result<InductionWitness> {
    let modulus: Modulus = a.modulus;
    if !modulus.is_unit(gamma) || modulus.pow(gamma, s) != 1 {
        return Err(Error::OutOfRange(format!(
            "γ = {gamma} is not a character value of order dividing {s}"
        )));
    }
    let b = induce(a, s, m)?;
    let r = a.rank();
    let b_chi = b.eigen_kernel(gamma);
    let a_chi = a.eigen_kernel(modulus.pow(gamma, m));
    let projected: Vec<Vec<u64>> = b_chi.gens.iter().map(|g| g[..r].to_vec()).collect();
    let image = a.span(&projected);
    Ok(InductionWitness {
        s,
        m,
        gamma,
        induced_log_order: b_chi.log_order,
        base_log_order: a_chi.log_order,
        injective: image.log_order == b_chi.log_order,
        image_matches: a.same_submodule(&image, &a_chi),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over B: count eigenvectors and check π is injective on them.
    fn brute(a: &CyclicActionModule, s: u64, m: u64, gamma: u64) -> (usize, usize, bool) {
        let b = induce(a, s, m).unwrap();
        let r = a.rank();
        let eig: Vec<Vec<u64>> = b
            .elements()
            .into_iter()
            .filter(|x| b.act(x) == b.scale(gamma, x))
            .collect();
        let mut heads: Vec<Vec<u64>> = eig.iter().map(|x| x[..r].to_vec()).collect();
        heads.sort();
        heads.dedup();
        let gm = a.modulus.pow(gamma, m);
        let base = a
            .elements()
            .into_iter()
            .filter(|x| a.act(x) == a.scale(gm, x))
            .count();
        (eig.len(), base, heads.len() == eig.len())
    }

    #[test]
    fn s4_m2_on_z5() {
        let md = Modulus::new(5, 1).unwrap();
        let a = CyclicActionModule::cyclic(md, 1, 4, 2).unwrap();
        let w = induce_and_project(&a, 4, 2, 2).unwrap();
        assert!(w.bijective());
        assert_eq!((w.induced_log_order, w.base_log_order), (1, 1));
        assert_eq!(brute(&a, 4, 2, 2), (5, 5, true));
        let t = induce_and_project(&a, 4, 2, 1).unwrap();
        assert!(t.bijective());
        assert_eq!((t.induced_log_order, t.base_log_order), (0, 0));
        assert_eq!(brute(&a, 4, 2, 1), (1, 1, true));
    }

    #[test]
    fn m_equals_s_is_identity() {
        let md = Modulus::new(7, 1).unwrap();
        let a = CyclicActionModule::cyclic(md, 1, 2, 3).unwrap();
        let b = induce(&a, 3, 1).unwrap();
        assert_eq!(b.action, a.action);
    }

    #[test]
    fn matches_brute_force_on_small_cases() {
        let md = Modulus::new(3, 2).unwrap();
        for u in [1u64, 8] {
            let a = CyclicActionModule::cyclic(md, 2, u, 2).unwrap();
            for gamma in (1..9).filter(|&g| md.is_unit(g) && md.pow(g, 6) == 1) {
                let w = induce_and_project(&a, 6, 3, gamma).unwrap();
                let (bn, an, inj) = brute(&a, 6, 3, gamma);
                assert_eq!(3usize.pow(w.induced_log_order), bn);
                assert_eq!(3usize.pow(w.base_log_order), an);
                assert!(inj && w.bijective());
            }
        }
    }
}
