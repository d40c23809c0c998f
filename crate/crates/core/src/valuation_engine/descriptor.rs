//! Valued-field descriptors and the extension data along F → L → F(p).

use super::value_group::LexValueGroup;
use crate::arith::{is_prime, mult_order_naive, pow_mod};
use crate::error::{Error, Result};
use crate::fields::{ExactField, FiniteField};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Residue {
    /// F_{ell^degree}.
    Finite { ell: u64, degree: u32 },
    /// An opaque label such as "Q" or "Q(mu_3)"; `mu_p_degree` is [V̄(μ_p):V̄].
    Symbolic {
        label: String,
        characteristic: u64,
        mu_p_degree: u64,
    },
}

impl Residue {
    pub fn finite(ell: u64, degree: u32) -> Result<Self> {
        if !is_prime(ell) || degree == 0 {
            return Err(Error::InvalidDescriptor(format!(
                "F_{ell}^{degree} is not a finite field"
            )));
        }
        Ok(Self::Finite { ell, degree })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Residue::Finite { ell, .. } => *ell,
            Residue::Symbolic { characteristic, .. } => *characteristic,
        }
    }

    /// |V̄| mod p for a finite residue.
    fn order_mod(&self, p: u64) -> Option<u64> {
        match self {
            Residue::Finite { ell, degree } => Some(pow_mod(*ell % p, *degree as u64, p)),
            Residue::Symbolic { .. } => None,
        }
    }

    fn check_char(&self, p: u64) -> Result<()> {
        if self.characteristic() == p {
            Err(Error::ResidueCharP)
        } else {
            Ok(())
        }
    }

    /// [V̄(μ_p):V̄]: the order of |V̄| mod p for finite residues.
    pub fn mu_p_degree(&self, p: u64) -> Result<u64> {
        self.check_char(p)?;
        match self {
            Residue::Finite { .. } => {
                Ok(mult_order_naive(self.order_mod(p).expect("finite"), p).expect("unit mod p"))
            }
            Residue::Symbolic { mu_p_degree, .. } => Ok(*mu_p_degree),
        }
    }

    pub fn contains_mu_p(&self, p: u64) -> Result<bool> {
        Ok(self.mu_p_degree(p)? == 1)
    }

    pub fn label(&self) -> String {
        match self {
            Residue::Finite { ell, degree: 1 } => format!("F_{ell}"),
            Residue::Finite { ell, degree } => match ell.checked_pow(*degree) {
                Some(q) if q < 1 << 20 => format!("F_{q}"),
                _ => format!("F_{ell}^{degree}"),
            },
            Residue::Symbolic { label, .. } => label.clone(),
        }
    }

    /// The residue after a degree-e extension of a finite residue.
    pub fn extend(&self, e: u32) -> Self {
        match self {
            Residue::Finite { ell, degree } => Residue::Finite {
                ell: *ell,
                degree: degree * e,
            },
            other => other.clone(),
        }
    }
}

/// A valued field with rank-r value group Z^r.
///
/// Level t ∈ {0..r−1} is the nonzero prime P_t with Γ_{V/P_t} the first t
/// coordinates; P_0 is the maximal ideal. `residue_chain[t]` records whether
/// μ_p ⊆ V/P_t. With no chain the field is a Laurent field over its residue
/// and every level has the residue's flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuedFieldDescriptor {
    pub residue: Residue,
    pub rank: usize,
    #[serde(default)]
    pub residue_chain: Option<Vec<bool>>,
    /// [L:F]; for a Laurent field over its residue it equals [V̄(μ_p):V̄].
    #[serde(default)]
    pub l_over_f: Option<u64>,
}

impl ValuedFieldDescriptor {
    pub fn laurent(residue: Residue, rank: usize) -> Self {
        Self {
            residue,
            rank,
            residue_chain: None,
            l_over_f: None,
        }
    }

    /// The flags μ_p ⊆ V/P_t for t = 0..r−1, validated.
    pub fn chain(&self, p: u64) -> Result<Vec<bool>> {
        let base = self.residue.contains_mu_p(p)?;
        let chain = match &self.residue_chain {
            None => vec![base; self.rank],
            Some(c) => c.clone(),
        };
        if chain.len() != self.rank {
            return Err(Error::InvalidDescriptor(format!(
                "residue chain has {} flags for rank {}",
                chain.len(),
                self.rank
            )));
        }
        if self.rank > 0 && chain[0] != base {
            return Err(Error::InvalidDescriptor(
                "level 0 flag disagrees with the residue field".into(),
            ));
        }
        // V/P_{t} is a residue ring of V/P_{t+1}.
        if chain.windows(2).any(|w| w[1] && !w[0]) {
            return Err(Error::InvalidDescriptor(
                "mu_p flags must be monotone along coarsenings".into(),
            ));
        }
        Ok(chain)
    }
}

/// The two valuations V₁ (residue Q) and V₂ (residue Q(μ_p)) on
/// Q(x, y)(ᵖ√(1+x)), where V₂/yV₂ lacks μ_p.
pub fn mixed_example_descriptors(p: u64) -> (ValuedFieldDescriptor, ValuedFieldDescriptor) {
    let v1 = ValuedFieldDescriptor {
        residue: Residue::Symbolic {
            label: "Q".into(),
            characteristic: 0,
            mu_p_degree: p - 1,
        },
        rank: 2,
        residue_chain: Some(vec![false, false]),
        l_over_f: Some(p - 1),
    };
    let v2 = ValuedFieldDescriptor {
        residue: Residue::Symbolic {
            label: format!("Q(mu_{p})"),
            characteristic: 0,
            mu_p_degree: 1,
        },
        rank: 2,
        residue_chain: Some(vec![true, false]),
        l_over_f: Some(p - 1),
    };
    (v1, v2)
}

/// [k(μ_p):k] for k = F_{ell^degree}, found by building k(μ_p) as a field: the
/// least j such that F_{ell^{degree·j}} contains a primitive p-th root of unity.
pub fn cyclotomic_degree_by_search(ell: u64, degree: u32, p: u64) -> Result<u64> {
    for j in 1..p {
        let f = FiniteField::new(ell, degree * j as u32)?;
        if f.root_of_unity(p).is_some() {
            return Ok(j);
        }
    }
    Err(Error::HypothesisViolated(format!(
        "no p-th roots of unity over F_{ell}^{degree}"
    )))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionToL {
    pub l_over_f: u64,
    pub residue_degree: u64,
    /// Number of extensions of V to L.
    pub ell: u64,
    pub residue_label: String,
    pub value_group: LexValueGroup,
}

/// ℓ·[V̄(μ_p):V̄] = [L:F]; the value group is unchanged.
pub fn extend_to_l(desc: &ValuedFieldDescriptor, p: u64) -> Result<ExtensionToL> {
    let residue_degree = desc.residue.mu_p_degree(p)?;
    let l_over_f = match (desc.l_over_f, &desc.residue) {
        (Some(d), _) => d,
        (None, Residue::Finite { ell, degree }) => cyclotomic_degree_by_search(*ell, *degree, p)?,
        (None, Residue::Symbolic { .. }) => {
            return Err(Error::InvalidDescriptor(
                "[L:F] is required for a symbolic residue".into(),
            ))
        }
    };
    if l_over_f % residue_degree != 0 {
        return Err(Error::InvalidDescriptor(format!(
            "[L:F] = {l_over_f} is not a multiple of the residue degree {residue_degree}"
        )));
    }
    Ok(ExtensionToL {
        l_over_f,
        residue_degree,
        ell: l_over_f / residue_degree,
        residue_label: match &desc.residue {
            _ if residue_degree == 1 => desc.residue.label(),
            Residue::Finite { .. } => desc.residue.extend(residue_degree as u32).label(),
            Residue::Symbolic { label, .. } => format!("{label}(mu_{p})"),
        },
        value_group: LexValueGroup::lattice(desc.rank, p)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FpPrediction {
    pub residue_label: String,
    pub value_group: LexValueGroup,
    /// Level t of the maximal prime P with μ_p ⊄ V/P; t = r means P = (0).
    pub coarsening_level: usize,
}

/// Residue V̄(p); the value group becomes Z[1/p] on the coordinates of V/P.
pub fn predict_fp_extension(desc: &ValuedFieldDescriptor, p: u64) -> Result<FpPrediction> {
    desc.residue.check_char(p)?;
    let chain = desc.chain(p)?;
    let t = chain.iter().position(|&f| !f).unwrap_or(desc.rank);
    Ok(FpPrediction {
        residue_label: format!("{}({p})", desc.residue.label()),
        value_group: LexValueGroup::with_prefix(desc.rank, p, t)?,
        coarsening_level: t,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KummerCase {
    /// w(c) ∉ pΓ: ramified, unique extension.
    I,
    /// Residue of degree p, unique extension.
    II,
    /// p extensions, residue and value group unchanged.
    III,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerStage {
    pub step: usize,
    pub case: Option<KummerCase>,
    pub residue: Residue,
    pub residue_degree: u64,
    pub l_over_f: u64,
    pub ell: u64,
    /// Extensions of V to this stage.
    pub extensions: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerCount {
    pub stages: Vec<TowerStage>,
    pub ell_invariant: bool,
}

/// ℓ at each stage of a tower of degree-p Galois steps over F.
///
/// [S(μ_p):S] = [L:F] at every stage since [S:F] is a power of p and [L:F]
/// divides p − 1; the residue degree is recomputed from the stage's residue.
pub fn count_extensions_along(
    desc: &ValuedFieldDescriptor,
    p: u64,
    steps: &[KummerCase],
) -> Result<TowerCount> {
    let base = extend_to_l(desc, p)?;
    let mut residue = desc.residue.clone();
    let mut extensions = 1u64;
    let mut stages = vec![TowerStage {
        step: 0,
        case: None,
        residue: residue.clone(),
        residue_degree: base.residue_degree,
        l_over_f: base.l_over_f,
        ell: base.ell,
        extensions,
    }];
    for (i, &case) in steps.iter().enumerate() {
        match case {
            KummerCase::II => residue = residue.extend(p as u32),
            KummerCase::III => {
                extensions = extensions
                    .checked_mul(p)
                    .ok_or_else(|| Error::TooLarge("extension count overflows".into()))?
            }
            KummerCase::I => {}
        }
        let residue_degree = residue.mu_p_degree(p)?;
        stages.push(TowerStage {
            step: i + 1,
            case: Some(case),
            residue: residue.clone(),
            residue_degree,
            l_over_f: base.l_over_f,
            ell: base.l_over_f / residue_degree,
            extensions,
        });
    }
    let ell_invariant = stages
        .iter()
        .all(|s| s.ell == base.ell && s.ell * s.residue_degree == s.l_over_f);
    Ok(TowerCount {
        stages,
        ell_invariant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(ell: u64, d: u32) -> ValuedFieldDescriptor {
        ValuedFieldDescriptor::laurent(Residue::finite(ell, d).unwrap(), 2)
    }

    #[test]
    fn extend_examples() {
        let e = extend_to_l(&fin(2, 1), 3).unwrap();
        assert_eq!((e.l_over_f, e.residue_degree, e.ell), (2, 2, 1));
        let e = extend_to_l(&fin(7, 1), 3).unwrap();
        assert_eq!((e.l_over_f, e.ell), (1, 1));
        let e = extend_to_l(&fin(2, 1), 7).unwrap();
        assert_eq!((e.l_over_f, e.residue_degree, e.ell), (3, 3, 1));
        assert_eq!(extend_to_l(&fin(3, 2), 3), Err(Error::ResidueCharP));
        let (v1, v2) = mixed_example_descriptors(5);
        assert_eq!(extend_to_l(&v1, 5).unwrap().ell, 1);
        assert_eq!(extend_to_l(&v2, 5).unwrap().ell, 4);
    }

    #[test]
    fn prediction_rows() {
        let (v1, v2) = mixed_example_descriptors(3);
        let r1 = predict_fp_extension(&v1, 3).unwrap();
        assert_eq!(
            (r1.residue_label.as_str(), r1.value_group.render()),
            ("Q(3)", "ZxZ".to_string())
        );
        let r2 = predict_fp_extension(&v2, 3).unwrap();
        assert_eq!(
            (r2.residue_label.as_str(), r2.value_group.render()),
            ("Q(mu_3)(3)", "Z[1/3]xZ".to_string())
        );
        let r = predict_fp_extension(&fin(2, 2), 3).unwrap();
        assert_eq!(
            (r.residue_label.as_str(), r.value_group.render()),
            ("F_4(3)", "Z[1/3]xZ[1/3]".to_string())
        );
        assert_eq!(r.coarsening_level, 2);
        assert_eq!(
            predict_fp_extension(&fin(2, 1), 3)
                .unwrap()
                .value_group
                .render(),
            "ZxZ"
        );
    }

    #[test]
    fn chain_validation() {
        let mut d = fin(7, 1);
        d.residue_chain = Some(vec![false, true]);
        assert!(matches!(
            predict_fp_extension(&d, 3),
            Err(Error::InvalidDescriptor(_))
        ));
        d.residue_chain = Some(vec![true, true, true]);
        assert!(matches!(
            predict_fp_extension(&d, 3),
            Err(Error::InvalidDescriptor(_))
        ));
    }

    #[test]
    fn tower_counts() {
        let t = count_extensions_along(&fin(2, 1), 3, &[KummerCase::I, KummerCase::I]).unwrap();
        assert!(t.ell_invariant);
        assert!(t.stages.iter().all(|s| s.ell == 1));
        let t = count_extensions_along(&fin(7, 1), 3, &[KummerCase::III, KummerCase::II]).unwrap();
        assert!(t.ell_invariant);
        assert_eq!(
            t.stages.iter().map(|s| s.extensions).collect::<Vec<_>>(),
            vec![1, 3, 3]
        );
        assert_eq!(t.stages[2].residue, Residue::Finite { ell: 7, degree: 3 });
        let t = count_extensions_along(&fin(2, 1), 5, &[]).unwrap();
        assert_eq!(t.stages.len(), 1);
        assert_eq!(t.stages[0].ell, 1);
    }
}
