//! Formal Brauer-symbol classes [(a, b)_ω] carrying the eigencharacters of
//! their slots, and the eigendecomposition of a class group along H.

use crate::core_alg::{
    enumerate_characters, idempotent, CyclicActionModule, Modulus, UnitCharacter,
};
use crate::error::{Error, Result};
use crate::field_tower::TowerData;
use serde::Serialize;

/// The symbol (a^{a_exp}, b^{b_exp}; L)_{ω^{zeta_exp}}, exponents mod p^n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormalSymbol {
    pub a_exp: u64,
    pub b_exp: u64,
    pub zeta_exp: u64,
}

impl FormalSymbol {
    /// (a, b)_ζ ≅ (a^k, b)_{ζ^k} for k prime to p.
    pub fn relabel(self, k: u64, m: &Modulus) -> Self {
        Self {
            a_exp: m.mul(self.a_exp, k),
            b_exp: self.b_exp,
            zeta_exp: m.mul(self.zeta_exp, k),
        }
    }
}

/// [(a, b; L)_ω]^exponent with [a] in the χ-eigencomponent and [b] in the
/// ψ-eigencomponent; α is the cyclotomic character of H.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormalSymbolClass {
    pub chi: UnitCharacter,
    pub psi: UnitCharacter,
    pub alpha: UnitCharacter,
    pub exponent: u64,
}

impl FormalSymbolClass {
    pub fn new(chi: UnitCharacter, psi: UnitCharacter, alpha: UnitCharacter) -> Result<Self> {
        let same =
            |c: &UnitCharacter| c.modulus == alpha.modulus && c.group_order == alpha.group_order;
        if !same(&chi) || !same(&psi) {
            return Err(Error::InvalidInstance(
                "characters must live on the same group H".into(),
            ));
        }
        Ok(Self {
            chi,
            psi,
            alpha,
            exponent: 1,
        })
    }

    /// Slot-wise product: [(a a′, b b′)] for the product of the slot characters.
    pub fn slot_product(&self, other: &Self) -> Self {
        Self {
            chi: self.chi.mul(&other.chi),
            psi: self.psi.mul(&other.psi),
            alpha: self.alpha,
            exponent: self.alpha.modulus.mul(self.exponent, other.exponent),
        }
    }
}

/// One σ = h^j of the rewriting chain σ(a,b)_ω ≅ (σa, σb)_{σω} ≅ (a^χ, b^ψ)_{ω^α} ≅ (a^{χα⁻¹}, b^ψ)_ω.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteStep {
    pub sigma_power: u64,
    pub after_galois: FormalSymbol,
    pub after_relabel: FormalSymbol,
    /// σ[A] = [A]^{eigenvalue} by bimultiplicativity.
    pub eigenvalue: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eigenclass {
    pub character: UnitCharacter,
    pub steps: Vec<RewriteStep>,
    /// The eigenvalue at each σ matches χψα^{-1}(σ).
    pub verified: bool,
}

pub fn galois_eigenclass(cls: &FormalSymbolClass) -> Eigenclass {
    let m = cls.alpha.modulus;
    let s = cls.alpha.group_order;
    // Powers of [A] are eigenvectors for the same eigenvalue, so the chain starts at [A].
    let start = FormalSymbol {
        a_exp: 1,
        b_exp: 1,
        zeta_exp: 1,
    };
    let mut steps = Vec::with_capacity(s as usize);
    for j in 0..s {
        let after_galois = FormalSymbol {
            a_exp: m.mul(start.a_exp, cls.chi.eval(j)),
            b_exp: m.mul(start.b_exp, cls.psi.eval(j)),
            zeta_exp: m.mul(start.zeta_exp, cls.alpha.eval(j)),
        };
        let k = m.inv(after_galois.zeta_exp).expect("α takes unit values");
        let after_relabel = after_galois.relabel(k, &m);
        debug_assert_eq!(after_relabel.zeta_exp, 1);
        let eigenvalue = m.mul(after_relabel.a_exp, after_relabel.b_exp);
        steps.push(RewriteStep {
            sigma_power: j,
            after_galois,
            after_relabel,
            eigenvalue,
        });
    }
    let character = cls.chi.mul(&cls.psi).mul(&cls.alpha.inverse());
    let verified = steps
        .iter()
        .all(|st| st.eigenvalue == character.eval(st.sigma_power));
    Eigenclass {
        character,
        steps,
        verified,
    }
}

/// [(a, b)_ω] is H-fixed when [a] is a χ-class and [b] an αχ^{-1}-class.
pub fn prop34_fixed_check(chi: &UnitCharacter, alpha: &UnitCharacter) -> Result<bool> {
    let psi = alpha.mul(&chi.inverse());
    let cls = FormalSymbolClass::new(*chi, psi, *alpha)?;
    let e = galois_eigenclass(&cls);
    Ok(e.verified && e.character.is_trivial())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitComponent {
    pub chi: UnitCharacter,
    /// e_χ·[a].
    pub class: Vec<u64>,
    pub nonzero: bool,
    /// Eigencharacter χα^{-1} of the component symbol (a_χ, c)_ω.
    pub symbol_character: UnitCharacter,
    pub in_eigenkernel: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenSplit {
    pub components: Vec<SplitComponent>,
    /// Σ_χ e_χ[a] = [a].
    pub recombines: bool,
    /// [c] is fixed by H, i.e. comes from F.
    pub c_fixed: bool,
    /// The component at χ = α, whose symbol has trivial eigencharacter.
    pub trivial_component: UnitCharacter,
    /// Distinct components carry distinct symbol characters.
    pub distinct_characters: bool,
}

impl EigenSplit {
    pub fn verified(&self) -> bool {
        self.recombines
            && self.c_fixed
            && self.distinct_characters
            && self.components.iter().all(|c| c.in_eigenkernel)
            && self.trivial_component.is_trivial()
    }

    /// Characters whose component of [a] is nonzero.
    pub fn support(&self) -> Vec<u64> {
        self.components
            .iter()
            .filter(|c| c.nonzero)
            .map(|c| c.chi.gamma)
            .collect()
    }
}

/// [a] = Σ e_χ[a] in a class-group model A on which h acts, with α(h) = alpha.
pub fn eigen_split_module(
    module: &CyclicActionModule,
    alpha: u64,
    a: &[u64],
    c: &[u64],
) -> Result<EigenSplit> {
    if !module.is_semisimple() {
        return Err(Error::HypothesisViolated(format!(
            "p divides |H| = {}",
            module.acting_order
        )));
    }
    let chars = enumerate_characters(module.modulus, module.acting_order)?;
    let alpha_chi = UnitCharacter::new(module.modulus, module.acting_order, alpha)?;
    let mut components = Vec::with_capacity(chars.len());
    let mut total = vec![0; module.rank()];
    for chi in &chars {
        let e = idempotent(chi);
        let class = module.apply(&module.group_ring_action(&e.coeffs), a);
        total = module.add(&total, &class);
        components.push(SplitComponent {
            chi: *chi,
            nonzero: !module.is_zero(&class),
            in_eigenkernel: module.act(&class) == module.scale(chi.gamma, &class),
            class,
            symbol_character: chi.mul(&alpha_chi.inverse()),
        });
    }
    let mut sym: Vec<u64> = components
        .iter()
        .map(|c| c.symbol_character.gamma)
        .collect();
    sym.sort_unstable();
    sym.dedup();
    let trivial_component = components
        .iter()
        .find(|c| c.chi.gamma == alpha_chi.gamma)
        .expect("α is a character")
        .symbol_character;
    Ok(EigenSplit {
        recombines: module.reduce(&total) == module.reduce(a),
        c_fixed: module.act(c) == module.reduce(c),
        distinct_characters: sym.len() == components.len(),
        trivial_component,
        components,
    })
}

/// The split for M*/M*^{p^n} ≅ Z/p^n of a finite-field tower with M = L,
/// classes given as exponents of a generator of M*.
pub fn eigen_split_class(t: &TowerData, a: u64, c: u64) -> Result<EigenSplit> {
    if t.deg_ml != 1 {
        return Err(Error::HypothesisViolated(format!(
            "p divides [M:F] = {}",
            t.f
        )));
    }
    let modulus = t.modulus();
    let module = CyclicActionModule::cyclic(modulus, t.n, t.alpha, t.s)?;
    eigen_split_module(&module, t.alpha, &[a % modulus.value], &[c % modulus.value])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_tower::build_tower;
    use crate::linalg::Mat;

    fn ch(p: u64, s: u64, g: u64) -> UnitCharacter {
        UnitCharacter::new(Modulus::new(p, 1).unwrap(), s, g).unwrap()
    }

    #[test]
    fn eigenclass_examples() {
        let (one, alpha) = (ch(5, 2, 1), ch(5, 2, 4));
        let e = galois_eigenclass(&FormalSymbolClass::new(one, one, alpha).unwrap());
        assert!(e.verified);
        assert_eq!(e.character, alpha);
        let e = galois_eigenclass(&FormalSymbolClass::new(one, alpha, alpha).unwrap());
        assert!(e.character.is_trivial());
        let e = galois_eigenclass(&FormalSymbolClass::new(alpha, one, alpha).unwrap());
        assert!(e.character.is_trivial());
    }

    #[test]
    fn fixed_check_all_characters() {
        let m = Modulus::new(5, 1).unwrap();
        let alpha = ch(5, 4, 2);
        for chi in enumerate_characters(m, 4).unwrap() {
            assert!(prop34_fixed_check(&chi, &alpha).unwrap());
            assert!(prop34_fixed_check(&alpha.mul(&chi), &alpha).unwrap());
        }
    }

    #[test]
    fn tower_split() {
        let t = build_tower(2, 5, 1).unwrap();
        let r = eigen_split_class(&t, 1, 0).unwrap();
        assert!(r.verified());
        assert_eq!(r.support(), vec![2]);
        let r = eigen_split_class(&t, 0, 0).unwrap();
        assert!(r.support().is_empty());
        let t = build_tower(7, 3, 2).unwrap();
        assert!(matches!(
            eigen_split_class(&t, 1, 0),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn abstract_split() {
        let m = Modulus::new(5, 1).unwrap();
        let a =
            CyclicActionModule::new(m, vec![1, 1], Mat::from_rows(&[vec![2, 0], vec![0, 4]]), 4)
                .unwrap();
        let r = eigen_split_module(&a, 2, &[3, 1], &[0, 0]).unwrap();
        assert!(r.verified());
        assert_eq!(r.support(), vec![2, 4]);
        let at_alpha = r.components.iter().find(|c| c.chi.gamma == 2).unwrap();
        assert_eq!(at_alpha.class, vec![3, 0]);
        assert!(at_alpha.symbol_character.is_trivial());
    }
}
