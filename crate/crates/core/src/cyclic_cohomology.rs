//! Cohomology of a finite cyclic group acting on a finite p-primary module,
//! through the norm/difference presentation.

use crate::core_alg::{twist, CyclicActionModule, Modulus, UnitCharacter};
use crate::error::{Error, Result};
use crate::field_tower::TowerData;
use crate::group_oracle::{cyclic, CochainComplex, GModule};
use crate::linalg::Mat;
use serde::Serialize;

/// A cyclic group of order N acting on `module` through its designated generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicGroupAction {
    pub group_order: u64,
    pub module: CyclicActionModule,
}

impl CyclicGroupAction {
    pub fn new(module: CyclicActionModule) -> Self {
        Self {
            group_order: module.acting_order,
            module,
        }
    }

    /// Z/p^k with the generator acting by multiplication by u.
    pub fn cyclic(modulus: Modulus, k: u32, u: u64, group_order: u64) -> Result<Self> {
        Ok(Self::new(CyclicActionModule::cyclic(
            modulus,
            k,
            u,
            group_order,
        )?))
    }

    /// Σ_{j<N} T^j.
    pub fn norm(&self) -> Mat {
        norm_of(&self.module.action, self.group_order, &self.module)
    }

    pub fn difference(&self) -> Mat {
        let ring = self.module.ring();
        self.module
            .action
            .sub(&Mat::identity(self.module.rank()), &ring)
    }
}

/// 1 + T + … + T^{k−1} by binary splitting.
fn norm_of(t: &Mat, k: u64, m: &CyclicActionModule) -> Mat {
    let ring = m.ring();
    let r = m.rank();
    if k == 0 {
        return Mat::zeros(r, r);
    }
    if k % 2 == 1 {
        let rest = norm_of(t, k - 1, m);
        return Mat::identity(r).add(&t.mul(&rest, &ring), &ring);
    }
    let half = norm_of(t, k / 2, m);
    let tk = t.pow(k / 2, &ring);
    half.mul(&Mat::identity(r).add(&tk, &ring), &ring)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyResult {
    pub degree: u32,
    pub p: u64,
    /// Exponents a with H ≅ ⊕ Z/p^a, descending.
    pub invariants: Vec<u32>,
    pub log_order: u32,
}

impl CohomologyResult {
    fn from_invariants(degree: u32, p: u64, invariants: Vec<u32>) -> Self {
        let log_order = invariants.iter().sum();
        Self {
            degree,
            p,
            invariants,
            log_order,
        }
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).saturating_pow(self.log_order)
    }
}

pub fn h_i(act: &CyclicGroupAction, i: u32) -> Result<CohomologyResult> {
    let m = &act.module;
    let p = m.modulus.p;
    let inv = match i {
        0 => m.invariants(&m.fixed()),
        1 => m.quotient_invariants(&m.kernel(&act.norm()), &m.image(&act.difference())),
        2 => m.quotient_invariants(&m.fixed(), &m.image(&act.norm())),
        _ => return Err(Error::OutOfRange(format!("degree {i} not in 0..=2"))),
    };
    Ok(CohomologyResult::from_invariants(i, p, inv))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HerbrandReport {
    pub h1_order: u128,
    pub h2_order: u128,
    pub passed: bool,
}

pub fn herbrand_check(act: &CyclicGroupAction) -> HerbrandReport {
    let h1 = h_i(act, 1).expect("degree in range").order();
    let h2 = h_i(act, 2).expect("degree in range").order();
    HerbrandReport {
        h1_order: h1,
        h2_order: h2,
        passed: h1 == h2,
    }
}

/// The same action as a module over the generic finite group Z/N, for the
/// cocycle oracle.
pub fn to_gmodule(
    module: &CyclicActionModule,
    group_order: u64,
    generator: &Mat,
) -> Result<GModule> {
    let g = cyclic(group_order as usize);
    let gens: Vec<(usize, Mat)> = if group_order > 1 {
        vec![(1, generator.clone())]
    } else {
        Vec::new()
    };
    GModule::from_generators(g, module.modulus.p, module.cyclic_parts.clone(), &gens)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistDegree {
    pub degree: u32,
    /// H^i(K, A_χ).
    pub twisted: Vec<u32>,
    /// H^i(K, A).
    pub untwisted: Vec<u32>,
    /// j* is an isomorphism of complexes (identical coboundaries).
    pub j_is_iso: bool,
    /// The G/K-action on H^i(K, A_χ) is χ times the action on H^i(K, A).
    pub equivariant: bool,
    /// Fixed points of H^i(K, A_χ) against those of H^i(K, A)_χ.
    pub fixed_twisted: Vec<u32>,
    pub fixed_of_twist: Vec<u32>,
    /// |H^i(K, A)| from the norm/difference presentation for ⟨g^r⟩.
    pub norm_presentation_log: u32,
}

impl TwistDegree {
    pub fn verified(&self) -> bool {
        let log: u32 = self.untwisted.iter().sum();
        self.j_is_iso
            && self.equivariant
            && self.twisted == self.untwisted
            && self.fixed_twisted == self.fixed_of_twist
            && log == self.norm_presentation_log
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistReport {
    pub group_order: u64,
    /// K = ⟨g^r⟩.
    pub r: u64,
    pub gamma: u64,
    pub degrees: Vec<TwistDegree>,
}

impl TwistReport {
    pub fn verified(&self) -> bool {
        self.degrees.iter().all(TwistDegree::verified)
    }
}

/// Compares H^i(K, A_χ) with H^i(K, A)_χ for K = ⟨g^r⟩ ⊆ G = ⟨g⟩ and χ
/// trivial on K, together with the action of G/K.
pub fn twist_compat(act: &CyclicGroupAction, r: u64, chi: &UnitCharacter) -> Result<TwistReport> {
    let n = act.group_order;
    if r == 0 || !n.is_multiple_of(r) {
        return Err(Error::OutOfRange(format!(
            "r = {r} does not divide N = {n}"
        )));
    }
    let m = &act.module;
    if m.modulus.pow(chi.gamma, r) != 1 {
        return Err(Error::CharacterNotTrivialOnK);
    }
    let tw = twist(m, chi)?;
    let ring = m.ring();
    let k_order = n / r;
    let t_k = m.action.pow(r, &ring);
    let t_k_chi = tw.action.pow(r, &ring);
    let a_k = to_gmodule(m, k_order, &t_k)?;
    let a_k_chi = to_gmodule(&tw, k_order, &t_k_chi)?;
    let cx = CochainComplex::new(&a_k, 2);
    let cx_chi = CochainComplex::new(&a_k_chi, 2);
    let restricted = CyclicGroupAction {
        group_order: k_order,
        module: CyclicActionModule {
            action: t_k,
            acting_order: k_order,
            ..m.clone()
        },
    };
    let mut degrees = Vec::new();
    for i in 1..=2u32 {
        let j_is_iso = (0..=i).all(|d| cx.delta(d) == cx_chi.delta(d));
        // g normalizes the abelian K trivially, so g acts on cochains pointwise.
        let op = cx.pointwise_map(i, &m.action);
        let op_chi = cx_chi.pointwise_map(i, &tw.action);
        let gr = cx.module.ring();
        let op_twisted = op.scale(chi.gamma, &gr);
        let equivariant = op_chi.reduce(&gr) == op_twisted;
        let fixed_twisted = cx_chi.fixed_cohomology_invariants(i, &[op_chi]);
        let fixed_of_twist = cx.fixed_cohomology_invariants(i, &[op_twisted]);
        degrees.push(TwistDegree {
            degree: i,
            twisted: cx_chi.cohomology_invariants(i),
            untwisted: cx.cohomology_invariants(i),
            j_is_iso,
            equivariant,
            fixed_twisted,
            fixed_of_twist,
            norm_presentation_log: h_i(&restricted, i)?.log_order,
        });
    }
    Ok(TwistReport {
        group_order: n,
        r,
        gamma: chi.gamma,
        degrees,
    })
}

/// p^{min(k,c) − max(k+c−n, 0)}.
pub fn mu_size_formula(p: u64, n: u32, k: u32, c: u32) -> Result<u64> {
    if !(1..=n).contains(&k) || !(1..=n).contains(&c) {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k, c <= n = {n}, got k = {k}, c = {c}"
        )));
    }
    Ok(p.pow(k.min(c) - (k + c).saturating_sub(n)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuSize {
    pub k: u32,
    pub h1_log: u32,
    pub h2_log: u32,
}

/// H^1 and H^2 of G(M/L) on μ_{p^k} ≅ Z/p^k, the generator x ↦ x^{q^s}
/// acting by multiplication by q^s.
pub fn mu_size_direct(t: &TowerData, k: u32) -> Result<MuSize> {
    if !(1..=t.n).contains(&k) {
        return Err(Error::OutOfRange(format!("k = {k} not in 1..={}", t.n)));
    }
    let modulus = t.modulus();
    let u = modulus.pow(t.q % modulus.value, t.s);
    let act = CyclicGroupAction::cyclic(modulus, k, u, t.deg_ml_direct)?;
    Ok(MuSize {
        k,
        h1_log: h_i(&act, 1)?.log_order,
        h2_log: h_i(&act, 2)?.log_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_tower::build_tower;
    use crate::group_oracle::linear_cohomology;

    fn md(p: u64, n: u32) -> Modulus {
        Modulus::new(p, n).unwrap()
    }

    #[test]
    fn trivial_on_z9() {
        let act = CyclicGroupAction::cyclic(md(3, 2), 2, 1, 3).unwrap();
        assert_eq!(h_i(&act, 0).unwrap().invariants, vec![2]);
        assert_eq!(h_i(&act, 1).unwrap().invariants, vec![1]);
        assert_eq!(h_i(&act, 2).unwrap().invariants, vec![1]);
        assert!(herbrand_check(&act).passed);
    }

    #[test]
    fn mult_by_seven_is_acyclic() {
        let act = CyclicGroupAction::cyclic(md(3, 2), 2, 7, 3).unwrap();
        assert_eq!(h_i(&act, 1).unwrap().log_order, 0);
        assert_eq!(h_i(&act, 2).unwrap().log_order, 0);
        assert_eq!(act.norm().get(0, 0), 57 % 9);
        assert!(h_i(&act, 3).is_err());
    }

    #[test]
    fn negation_on_z5() {
        let act = CyclicGroupAction::cyclic(md(5, 1), 1, 4, 2).unwrap();
        let r = herbrand_check(&act);
        assert_eq!((r.h1_order, r.h2_order), (1, 1));
    }

    #[test]
    fn agrees_with_cocycles_on_small_cases() {
        for (p, n, k, u, big_n) in [
            (3, 2, 2, 1, 3),
            (3, 2, 2, 4, 3),
            (5, 1, 1, 4, 4),
            (3, 1, 1, 2, 6),
            (5, 2, 2, 7, 4),
        ] {
            let act = CyclicGroupAction::cyclic(md(p, n), k, u, big_n).unwrap();
            let g = to_gmodule(&act.module, big_n, &act.module.action).unwrap();
            for i in 1..=2 {
                assert_eq!(
                    h_i(&act, i).unwrap().invariants,
                    linear_cohomology(&g, i).invariants
                );
            }
        }
    }

    #[test]
    fn mu_size_examples() {
        assert_eq!(mu_size_formula(3, 2, 1, 1).unwrap(), 3);
        assert_eq!(mu_size_formula(3, 2, 2, 1).unwrap(), 1);
        assert_eq!(mu_size_formula(5, 3, 3, 3).unwrap(), 1);
        assert!(mu_size_formula(3, 2, 0, 1).is_err());
        let t = build_tower(7, 3, 2).unwrap();
        assert_eq!(
            mu_size_direct(&t, 1).unwrap(),
            MuSize {
                k: 1,
                h1_log: 1,
                h2_log: 1
            }
        );
        assert_eq!(
            mu_size_direct(&t, 2).unwrap(),
            MuSize {
                k: 2,
                h1_log: 0,
                h2_log: 0
            }
        );
    }

    #[test]
    fn twist_on_z6() {
        let modulus = md(3, 2);
        // G = Z/6 acting on Z/9 by −1 (order 2); χ(g) = −1 mod 9 is trivial on K = ⟨g^2⟩.
        let act = CyclicGroupAction::cyclic(modulus, 2, 8, 6).unwrap();
        let chi = UnitCharacter::new(modulus, 6, 8).unwrap();
        let rep = twist_compat(&act, 2, &chi).unwrap();
        assert!(rep.verified());
        assert_eq!(rep.degrees[0].untwisted, vec![1]);
        assert_eq!(rep.degrees[0].fixed_of_twist, vec![1]);
        let bad = UnitCharacter::new(modulus, 6, 4).unwrap();
        assert_eq!(
            twist_compat(&act, 2, &bad).unwrap_err(),
            Error::CharacterNotTrivialOnK
        );
        let trivial_k = twist_compat(&act, 6, &bad).unwrap();
        assert!(trivial_k.verified());
    }
}
