//! Exhaustive checks of group-theoretic statements over small finite groups.

use super::cochain::{brute_cohomology_with_limits, CochainComplex, GModule, Limits};
use super::group::{FiniteGroup, Subset};
use crate::arith::{inv_mod, is_prime, pow_mod, prime_power, totient};
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::HashMap;

/// A generator of (Z/e)^* for e ∈ {2, 3, 4, 5, ...} where the group is cyclic.
fn unit_generator(e: u64) -> Option<u64> {
    let phi = totient(e);
    (1..e.max(2)).find(|&u| {
        crate::arith::gcd(u, e) == 1 && crate::arith::mult_order_naive(u, e) == Some(phi)
    })
}

/// All homomorphisms G → (Z/e)^* (for e with cyclic unit group), as value
/// vectors indexed by element.
pub fn unit_characters(g: &FiniteGroup, e: u64) -> Vec<Vec<u64>> {
    if e <= 2 {
        return vec![vec![1 % e.max(1); g.order]];
    }
    let u = unit_generator(e).expect("(Z/e)^* must be cyclic");
    g.homs_to_cyclic(g.all(), totient(e))
        .into_iter()
        .map(|psi| psi.iter().map(|&k| pow_mod(u, k, e)).collect())
        .collect()
}

/// Subgroups P ⊆ R ⊆ Q of G with P, Q normal and Q/P abelian of exponent
/// dividing e, together with a character χ : G → (Z/e)^*.
#[derive(Clone, Debug)]
pub struct LemmaInstance<'a> {
    pub group: &'a FiniteGroup,
    pub p: Subset,
    pub q: Subset,
    pub r: Subset,
    pub e: u64,
    pub chi: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterSubgroupOutcome {
    pub lhs: bool,
    pub rhs: bool,
    pub agree: bool,
}

impl LemmaInstance<'_> {
    pub fn validate(&self) -> Result<()> {
        let g = self.group;
        let sub = |a: Subset, b: Subset| a & !b == 0;
        if !(sub(self.p, self.r) && sub(self.r, self.q)) {
            return Err(Error::InvalidInstance("need P ⊆ R ⊆ Q".into()));
        }
        for s in [self.p, self.q, self.r] {
            if g.closure(&FiniteGroup::members(s).collect::<Vec<_>>()) != s {
                return Err(Error::InvalidInstance("P, Q, R must be subgroups".into()));
            }
        }
        if !g.is_normal(self.p) || !g.is_normal(self.q) {
            return Err(Error::InvalidInstance("P and Q must be normal".into()));
        }
        if !quotient_is_abelian_of_exponent(g, self.p, self.q, self.e) {
            return Err(Error::InvalidInstance(
                "Q/P must be abelian of exponent dividing e".into(),
            ));
        }
        if self.chi.len() != g.order
            || (0..g.order).any(|a| {
                (0..g.order).any(|b| self.chi[g.mul(a, b)] != self.chi[a] * self.chi[b] % self.e)
            })
            || self.chi.iter().any(|&c| crate::arith::gcd(c, self.e) != 1)
        {
            return Err(Error::InvalidInstance(
                "χ must be a homomorphism into (Z/e)^*".into(),
            ));
        }
        Ok(())
    }
}

fn quotient_is_abelian_of_exponent(g: &FiniteGroup, p: Subset, q: Subset, e: u64) -> bool {
    let in_p = |x: usize| p >> x & 1 == 1;
    FiniteGroup::members(q).all(|x| {
        in_p(g.pow(x, e))
            && FiniteGroup::members(q).all(|y| in_p(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)))))
    })
}

/// X(Q/R) ⊆ X(Q/P)^{(χ)} computed from all homomorphisms Q → Z/e trivial on R,
/// against: R ⊲ G and G acts on Q/R via χ^{-1}.
pub fn verify_lemma_1_9(inst: &LemmaInstance) -> Result<CharacterSubgroupOutcome> {
    inst.validate()?;
    let homs = inst.group.homs_to_cyclic(inst.q, inst.e);
    Ok(character_subgroups_with_homs(inst, &homs))
}

fn character_subgroups_with_homs(
    inst: &LemmaInstance,
    homs_q: &[Vec<u64>],
) -> CharacterSubgroupOutcome {
    let g = inst.group;
    let e = inst.e;
    let q_elems: Vec<usize> = FiniteGroup::members(inst.q).collect();
    let r_elems: Vec<usize> = FiniteGroup::members(inst.r).collect();
    let in_r = |x: usize| inst.r >> x & 1 == 1;

    let lhs = homs_q
        .iter()
        .filter(|psi| r_elems.iter().all(|&x| psi[x] == 0))
        .all(|psi| {
            (0..g.order).all(|h| {
                let gi = g.inv(h);
                q_elems
                    .iter()
                    .all(|&x| psi[g.mul(g.mul(gi, x), h)] == inst.chi[h] * psi[x] % e)
            })
        });

    let normal = (0..g.order).all(|h| r_elems.iter().all(|&x| in_r(g.conj(h, x))));
    let acts_via_inverse = normal
        && (0..g.order).all(|h| {
            let c = inv_mod(inst.chi[h], e).expect("χ takes unit values");
            q_elems.iter().all(|&x| {
                let lhs = g.conj(h, x);
                in_r(g.mul(g.inv(lhs), g.pow(x, c)))
            })
        });
    CharacterSubgroupOutcome {
        lhs,
        rhs: acts_via_inverse,
        agree: lhs == acts_via_inverse,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterSubgroupSweep {
    pub group: String,
    pub instances: usize,
    pub lhs_true: usize,
    pub agreements: usize,
    pub disagreements: Vec<String>,
}

/// Every valid (P, Q, R, χ) for the exponent `e` on one group.
pub fn sweep_character_subgroups(g: &FiniteGroup, exponents: &[u64]) -> CharacterSubgroupSweep {
    let normals = g.normal_subgroups();
    let subgroups = g.subgroups();
    let mut out = CharacterSubgroupSweep {
        group: g.name.clone(),
        instances: 0,
        lhs_true: 0,
        agreements: 0,
        disagreements: Vec::new(),
    };
    for &e in exponents {
        let chars = unit_characters(g, e);
        let mut hom_cache: HashMap<Subset, Vec<Vec<u64>>> = HashMap::new();
        for &p in &normals {
            for &q in &normals {
                if p & !q != 0 || !quotient_is_abelian_of_exponent(g, p, q, e) {
                    continue;
                }
                let homs = hom_cache
                    .entry(q)
                    .or_insert_with(|| g.homs_to_cyclic(q, e))
                    .clone();
                for &r in subgroups.iter().filter(|&&r| p & !r == 0 && r & !q == 0) {
                    for chi in &chars {
                        let inst = LemmaInstance {
                            group: g,
                            p,
                            q,
                            r,
                            e,
                            chi: chi.clone(),
                        };
                        let o = character_subgroups_with_homs(&inst, &homs);
                        out.instances += 1;
                        out.lhs_true += usize::from(o.lhs);
                        if o.agree {
                            out.agreements += 1;
                        } else {
                            out.disagreements
                                .push(format!("e={e} P={p:#x} Q={q:#x} R={r:#x} chi={chi:?}"));
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowCriteriaReport {
    pub group: String,
    pub p: u64,
    pub s: u64,
    pub k: u32,
    pub sylow_normal: bool,
    pub quotient_cyclic: bool,
    /// G is the internal direct product of its p-Sylow and a normal subgroup of order s.
    pub direct_product: bool,
    /// G has a normal subgroup of order s.
    pub normal_complement: bool,
    pub sylow_abelian: bool,
    /// When the Sylow is abelian: G/P acts trivially on P by conjugation.
    pub trivial_action: Option<bool>,
    pub agree: bool,
}

/// The finite shadow of the equivalences (iii) ⇔ (iv) (⇔ (v) for abelian P).
pub fn verify_prop_1_4(g: &FiniteGroup, p: u64, s: u64) -> Result<SylowCriteriaReport> {
    if !is_prime(p) || s == 0 || !(p - 1).is_multiple_of(s) || !(g.order as u64).is_multiple_of(s) {
        return Err(Error::BadOrder(g.order));
    }
    let pk = g.order as u64 / s;
    let k = match prime_power(pk) {
        Some((q, k)) if q == p => k,
        _ if pk == 1 => 0,
        _ => return Err(Error::BadOrder(g.order)),
    };
    let subgroups = g.subgroups();
    let sylows: Vec<Subset> = subgroups
        .iter()
        .copied()
        .filter(|&h| FiniteGroup::size(h) as u64 == pk)
        .collect();
    let sylow_normal = sylows.len() == 1;
    let sylow = sylows[0];
    let normal_s: Vec<Subset> = subgroups
        .iter()
        .copied()
        .filter(|&h| FiniteGroup::size(h) as u64 == s && g.is_normal(h))
        .collect();
    let commute = |a: Subset, b: Subset| {
        FiniteGroup::members(a).all(|x| FiniteGroup::members(b).all(|y| g.mul(x, y) == g.mul(y, x)))
    };
    let direct_product = sylow_normal
        && normal_s.iter().any(|&h| {
            let mut gens = g.generators_of(sylow);
            gens.extend(g.generators_of(h));
            h & sylow == 1 << g.identity && g.closure(&gens) == g.all() && commute(sylow, h)
        });
    let quotient_cyclic = sylow_normal
        && (0..g.order).any(|x| {
            let mut gens = g.generators_of(sylow);
            gens.push(x);
            g.closure(&gens) == g.all()
        });
    let sylow_abelian = commute(sylow, sylow);
    let trivial_action = sylow_abelian.then(|| sylow_normal && commute(sylow, g.all()));
    let normal_complement = !normal_s.is_empty();
    let agree = direct_product == normal_complement
        && trivial_action.is_none_or(|v| v == normal_complement);
    Ok(SylowCriteriaReport {
        group: g.name.clone(),
        p,
        s,
        k,
        sylow_normal,
        quotient_cyclic,
        direct_product,
        normal_complement,
        sylow_abelian,
        trivial_action,
        agree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubnormalChain {
    /// U = U_0 ⊲ U_1 ⊲ … ⊲ U_k = G.
    pub chain: Vec<Subset>,
    pub orders: Vec<usize>,
    pub verified: bool,
}

/// A chain from `u` up to G in a p-group with each step normal of index p.
pub fn verify_prop_1_1_analog(g: &FiniteGroup, u: Subset) -> Result<SubnormalChain> {
    let p = match prime_power(g.order as u64) {
        Some((p, _)) => p as usize,
        None if g.order == 1 => 1,
        None => {
            return Err(Error::InvalidInstance(format!(
                "|G| = {} is not a prime power",
                g.order
            )))
        }
    };
    if g.closure(&FiniteGroup::members(u).collect::<Vec<_>>()) != u {
        return Err(Error::InvalidInstance("U is not a subgroup".into()));
    }
    let mut chain = vec![u];
    let mut cur = u;
    while cur != g.all() {
        let normalizer: Vec<usize> = (0..g.order)
            .filter(|&x| FiniteGroup::members(cur).all(|y| cur >> g.conj(x, y) & 1 == 1))
            .collect();
        let x = *normalizer
            .iter()
            .find(|&&x| cur >> x & 1 == 0)
            .expect("normalizers grow in p-groups");
        // Replace x by a power whose image in N(U)/U has order p.
        let mut ord = 1;
        let mut y = x;
        while cur >> y & 1 == 0 {
            y = g.mul(y, x);
            ord += 1;
        }
        let step = g.pow(x, (ord / p) as u64);
        let mut gens = g.generators_of(cur);
        gens.push(step);
        cur = g.closure(&gens);
        chain.push(cur);
    }
    let verified = chain.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        FiniteGroup::size(b) == FiniteGroup::size(a) * p
            && FiniteGroup::members(b)
                .all(|x| FiniteGroup::members(a).all(|y| a >> g.conj(x, y) & 1 == 1))
    });
    let orders = chain.iter().map(|&s| FiniteGroup::size(s)).collect();
    Ok(SubnormalChain {
        chain,
        orders,
        verified,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowReductionRow {
    pub degree: u32,
    /// Invariants of H^i(G, A).
    pub whole: Vec<u32>,
    /// Invariants of H^i(P_0, A)^{G/P_0}.
    pub fixed: Vec<u32>,
    /// Invariants of H^i(P_0, A) before taking fixed points.
    pub sylow: Vec<u32>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowReductionReport {
    pub group: String,
    pub p: u64,
    pub sylow_order: usize,
    pub rows: Vec<SylowReductionRow>,
}

impl SylowReductionReport {
    pub fn verified(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }
}

/// Bounds wide enough for the Sylow reductions over Z/15 and Z/21.
pub fn sylow_reduction_limits() -> Limits {
    Limits {
        max_group_order: 24,
        ..Limits::default()
    }
}

/// H^i(G, A) ≅ H^i(P_0, A)^{G/P_0} for i = 1, 2, with P_0 the normal p-Sylow.
pub fn verify_lemma_2_2_finite(a: &GModule, limits: &Limits) -> Result<SylowReductionReport> {
    let g = &a.group;
    let p = a.p;
    let mut pk = 1usize;
    while g.order.is_multiple_of(pk * p as usize) {
        pk *= p as usize;
    }
    let sylows: Vec<Subset> = g
        .normal_subgroups()
        .into_iter()
        .filter(|&h| FiniteGroup::size(h) == pk)
        .collect();
    let Some(&p0) = sylows.first() else {
        return Err(Error::InvalidInstance(
            "the p-Sylow subgroup is not normal".into(),
        ));
    };
    let cyclic_quotient = (0..g.order).any(|x| {
        let mut gens = g.generators_of(p0);
        gens.push(x);
        g.closure(&gens) == g.all()
    });
    if !cyclic_quotient {
        return Err(Error::InvalidInstance("G/P_0 is not cyclic".into()));
    }
    let (res, elems) = a.restrict(p0)?;
    let local: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let cc = CochainComplex::new(&res, 2);
    let mut rows = Vec::new();
    for i in 1..=2 {
        let whole = brute_cohomology_with_limits(a, i, limits)?.invariants;
        let ops: Vec<_> = g
            .generators()
            .into_iter()
            .map(|h| {
                let gi = g.inv(h);
                let conj: Vec<usize> = elems
                    .iter()
                    .map(|&x| local[&g.mul(g.mul(gi, x), h)])
                    .collect();
                cc.conjugation_map(i, &conj, &a.actions[h])
            })
            .collect();
        let fixed = cc.fixed_cohomology_invariants(i, &ops);
        let sylow = cc.cohomology_invariants(i);
        rows.push(SylowReductionRow {
            degree: i,
            agree: whole == fixed,
            whole,
            fixed,
            sylow,
        });
    }
    Ok(SylowReductionReport {
        group: g.name.clone(),
        p,
        sylow_order: pk,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_oracle::group::{cyclic, heisenberg, symmetric};
    use crate::linalg::Mat;

    fn sign_character(g: &FiniteGroup, e: u64) -> Vec<u64> {
        // Values -1 on odd permutations: the nontrivial hom S3 → Z/2.
        let psi = g
            .homs_to_cyclic(g.all(), 2)
            .into_iter()
            .find(|v| v.contains(&1))
            .unwrap();
        psi.iter()
            .map(|&x| if x == 1 { e - 1 } else { 1 })
            .collect()
    }

    #[test]
    fn s3_alternating_inverted_by_transpositions() {
        let g = symmetric(3);
        let a3 = g
            .subgroups()
            .into_iter()
            .find(|&h| FiniteGroup::size(h) == 3)
            .unwrap();
        let one = 1 << g.identity;
        let chi = sign_character(&g, 3);
        let inst = LemmaInstance {
            group: &g,
            p: one,
            q: a3,
            r: one,
            e: 3,
            chi,
        };
        assert_eq!(
            verify_lemma_1_9(&inst).unwrap(),
            CharacterSubgroupOutcome {
                lhs: true,
                rhs: true,
                agree: true
            }
        );
        let inst = LemmaInstance {
            chi: vec![1; 6],
            ..inst
        };
        assert_eq!(
            verify_lemma_1_9(&inst).unwrap(),
            CharacterSubgroupOutcome {
                lhs: false,
                rhs: false,
                agree: true
            }
        );
        let inst = LemmaInstance { r: a3, ..inst };
        assert_eq!(
            verify_lemma_1_9(&inst).unwrap(),
            CharacterSubgroupOutcome {
                lhs: true,
                rhs: true,
                agree: true
            }
        );
    }

    #[test]
    fn invalid_lemma_instance_is_rejected() {
        let g = symmetric(3);
        let two = g
            .subgroups()
            .into_iter()
            .find(|&h| FiniteGroup::size(h) == 2)
            .unwrap();
        let inst = LemmaInstance {
            group: &g,
            p: 1 << g.identity,
            q: two,
            r: two,
            e: 2,
            chi: vec![1; 6],
        };
        assert!(matches!(
            verify_lemma_1_9(&inst),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn sylow_criteria_examples() {
        let r = verify_prop_1_4(&cyclic(6), 3, 2).unwrap();
        assert!(
            r.direct_product && r.normal_complement && r.trivial_action == Some(true) && r.agree
        );
        let r = verify_prop_1_4(&symmetric(3), 3, 2).unwrap();
        assert!(
            !r.direct_product && !r.normal_complement && r.trivial_action == Some(false) && r.agree
        );
        let r = verify_prop_1_4(&cyclic(9), 3, 1).unwrap();
        assert!(r.direct_product && r.normal_complement && r.agree);
        assert!(matches!(
            verify_prop_1_4(&cyclic(12), 3, 4),
            Err(Error::BadOrder(12))
        ));
    }

    #[test]
    fn chains_in_p_groups() {
        let c9 = cyclic(9);
        let ch = verify_prop_1_1_analog(&c9, 1 << c9.identity).unwrap();
        assert_eq!(ch.orders, vec![1, 3, 9]);
        assert!(ch.verified);
        let h = heisenberg(3);
        for u in h.subgroups() {
            let ch = verify_prop_1_1_analog(&h, u).unwrap();
            assert!(ch.verified);
            assert_eq!(*ch.orders.last().unwrap(), 27);
        }
        assert_eq!(
            verify_prop_1_1_analog(&c9, c9.all()).unwrap().chain.len(),
            1
        );
    }

    #[test]
    fn sylow_reduction_on_z15() {
        let a = GModule::trivial(cyclic(15), 5, vec![1]).unwrap();
        let rep = verify_lemma_2_2_finite(&a, &sylow_reduction_limits()).unwrap();
        assert!(rep.verified());
        assert_eq!(rep.rows[0].whole, vec![1]);
    }

    #[test]
    fn sylow_reduction_on_z21_with_twist() {
        // The generator acts on Z/7 by 2, which has order 3.
        let a =
            GModule::from_generators(cyclic(21), 7, vec![1], &[(1, Mat::from_rows(&[vec![2]]))])
                .unwrap();
        let rep = verify_lemma_2_2_finite(&a, &sylow_reduction_limits()).unwrap();
        assert!(rep.verified());
        assert!(rep
            .rows
            .iter()
            .all(|r| r.whole.is_empty() && r.sylow == vec![1]));
    }
}
