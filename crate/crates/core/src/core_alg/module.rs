use super::modulus::{Modulus, UnitCharacter};
use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::linalg::{self, AbelianPGroup, Mat, Zpn};
use serde::Serialize;

/// A finite abelian p^n-torsion group ⊕ Z/p^{k_i} with the action of a
/// designated generator of a cyclic group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicActionModule {
    pub modulus: Modulus,
    pub cyclic_parts: Vec<u32>,
    pub action: Mat,
    pub acting_order: u64,
}

/// A submodule given by generators; `log_order` is log_p of its order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Submodule {
    pub gens: Vec<Vec<u64>>,
    pub log_order: u32,
}

impl CyclicActionModule {
    pub fn new(
        modulus: Modulus,
        cyclic_parts: Vec<u32>,
        action: Mat,
        acting_order: u64,
    ) -> Result<Self> {
        let r = cyclic_parts.len();
        if action.rows != r || action.cols != r {
            return Err(Error::InvalidModule(format!("action must be {r}x{r}")));
        }
        if let Some(&k) = cyclic_parts.iter().find(|&&k| k == 0 || k > modulus.n) {
            return Err(Error::InvalidModule(format!(
                "cyclic part exponent {k} not in 1..={}",
                modulus.n
            )));
        }
        if acting_order == 0 {
            return Err(Error::InvalidModule("acting order must be positive".into()));
        }
        let ring = modulus.ring();
        let m = Self {
            modulus,
            cyclic_parts,
            action: action.reduce(&ring),
            acting_order,
        };
        // A homomorphism of ⊕Z/p^{k_j} into ⊕Z/p^{k_i} needs p^{k_i-k_j} | T_ij.
        for i in 0..r {
            for j in 0..r {
                let (ki, kj) = (m.cyclic_parts[i], m.cyclic_parts[j]);
                if ki > kj && ring.val(m.action.get(i, j)) < ki - kj {
                    return Err(Error::InvalidModule(format!(
                        "action entry ({i},{j}) does not respect the module structure"
                    )));
                }
            }
        }
        if !m.is_identity(&m.action.pow(acting_order, &ring)) {
            return Err(Error::InvalidModule(format!(
                "action^{acting_order} is not the identity"
            )));
        }
        Ok(m)
    }

    /// Z/p^k with the generator acting as multiplication by `u`.
    pub fn cyclic(modulus: Modulus, k: u32, u: u64, acting_order: u64) -> Result<Self> {
        Self::new(modulus, vec![k], Mat::from_rows(&[vec![u]]), acting_order)
    }

    pub fn trivial_action(
        modulus: Modulus,
        cyclic_parts: Vec<u32>,
        acting_order: u64,
    ) -> Result<Self> {
        let r = cyclic_parts.len();
        Self::new(modulus, cyclic_parts, Mat::identity(r), acting_order)
    }

    pub fn ring(&self) -> Zpn {
        self.modulus.ring()
    }

    pub fn rank(&self) -> usize {
        self.cyclic_parts.len()
    }

    /// log_p |A|.
    pub fn log_order(&self) -> u32 {
        self.cyclic_parts.iter().sum()
    }

    pub fn order(&self) -> u64 {
        self.modulus.p.pow(self.log_order())
    }

    /// Canonical representative of an element.
    pub fn reduce(&self, x: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(&self.cyclic_parts)
            .map(|(&a, &k)| a % self.modulus.p.pow(k))
            .collect()
    }

    pub fn act(&self, x: &[u64]) -> Vec<u64> {
        self.reduce(&self.action.apply(x, &self.ring()))
    }

    pub fn apply(&self, f: &Mat, x: &[u64]) -> Vec<u64> {
        self.reduce(&f.apply(x, &self.ring()))
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let r = self.ring();
        self.reduce(
            &x.iter()
                .zip(y)
                .map(|(&a, &b)| r.add(a, b))
                .collect::<Vec<_>>(),
        )
    }

    pub fn scale(&self, c: u64, x: &[u64]) -> Vec<u64> {
        let r = self.ring();
        self.reduce(&x.iter().map(|&a| r.mul(a, c)).collect::<Vec<_>>())
    }

    pub fn is_zero(&self, x: &[u64]) -> bool {
        self.reduce(x).iter().all(|&a| a == 0)
    }

    /// Whether an endomorphism matrix induces the identity on the module.
    pub fn is_identity(&self, f: &Mat) -> bool {
        let r = self.rank();
        (0..r).all(|i| {
            let pk = self.modulus.p.pow(self.cyclic_parts[i]);
            (0..r).all(|j| f.get(i, j) % pk == u64::from(i == j) % pk)
        })
    }

    /// Whether an endomorphism matrix induces the zero map on the module.
    pub fn is_zero_map(&self, f: &Mat) -> bool {
        let r = self.rank();
        (0..r).all(|i| {
            let pk = self.modulus.p.pow(self.cyclic_parts[i]);
            (0..r).all(|j| f.get(i, j).is_multiple_of(pk))
        })
    }

    /// Every element, in lexicographic order of coordinates. Intended for
    /// oracles on small modules only.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &k in &self.cyclic_parts {
            let pk = self.modulus.p.pow(k);
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..pk).map(move |a| {
                        let mut w = v.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// The underlying abelian group as a quotient of (Z/p^n)^r.
    pub fn group(&self) -> AbelianPGroup {
        AbelianPGroup::new(self.ring(), self.cyclic_parts.clone())
    }

    fn relations(&self) -> Mat {
        self.group().relations()
    }

    fn lift(&self, gens: &[Vec<u64>]) -> Mat {
        self.group().lift(&Mat::from_cols(self.rank(), gens))
    }

    fn submodule_from_cols(&self, m: &Mat) -> Submodule {
        let mut gens: Vec<Vec<u64>> = Vec::new();
        for c in m.columns() {
            let c = self.reduce(&c);
            if c.iter().any(|&a| a != 0) && !gens.contains(&c) {
                gens.push(c);
            }
        }
        let log_order = self.span_log_order(&gens);
        Submodule { gens, log_order }
    }

    /// log_p of the order of the subgroup generated by `gens`.
    pub fn span_log_order(&self, gens: &[Vec<u64>]) -> u32 {
        self.group()
            .span_log_order(&Mat::from_cols(self.rank(), gens))
    }

    pub fn span(&self, gens: &[Vec<u64>]) -> Submodule {
        let gens: Vec<Vec<u64>> = gens
            .iter()
            .map(|g| self.reduce(g))
            .filter(|g| g.iter().any(|&a| a != 0))
            .collect();
        let log_order = self.span_log_order(&gens);
        Submodule { gens, log_order }
    }

    pub fn whole(&self) -> Submodule {
        let r = self.rank();
        self.span(&Mat::identity(r).columns())
    }

    pub fn contains(&self, sub: &Submodule, x: &[u64]) -> bool {
        let mut g = sub.gens.clone();
        g.push(self.reduce(x));
        self.span_log_order(&g) == sub.log_order
    }

    pub fn is_subset(&self, a: &Submodule, b: &Submodule) -> bool {
        a.gens.iter().all(|g| self.contains(b, g))
    }

    pub fn same_submodule(&self, a: &Submodule, b: &Submodule) -> bool {
        a.log_order == b.log_order && self.is_subset(a, b)
    }

    /// Kernel of an endomorphism given by a matrix over Z/p^n.
    pub fn kernel(&self, f: &Mat) -> Submodule {
        let g = self.group();
        self.submodule_from_cols(&g.kernel_into(f, &g))
    }

    /// Kernel of a homomorphism A → (Z/p^n)^m given by an m×r matrix.
    pub fn kernel_to_uniform(&self, f: &Mat) -> Submodule {
        let ring = self.ring();
        let k = linalg::kernel(f, &ring);
        // The kernel of the lift contains the relations only if f kills them.
        self.submodule_from_cols(&linalg::join(&k, &self.relations()))
    }

    /// Image of an endomorphism given by a matrix over Z/p^n.
    pub fn image(&self, f: &Mat) -> Submodule {
        self.submodule_from_cols(f)
    }

    /// Image of a submodule under an endomorphism.
    pub fn map_submodule(&self, f: &Mat, sub: &Submodule) -> Submodule {
        let gens: Vec<Vec<u64>> = sub.gens.iter().map(|g| self.apply(f, g)).collect();
        self.span(&gens)
    }

    pub fn intersection(&self, a: &Submodule, b: &Submodule) -> Submodule {
        let ring = self.ring();
        let sa = self.lift(&a.gens);
        let sb = self.lift(&b.gens);
        let coeffs = linalg::preimage(&sa, &sb, &ring);
        self.submodule_from_cols(&sa.mul(&coeffs, &ring))
    }

    pub fn sum(&self, parts: &[&Submodule]) -> Submodule {
        let gens: Vec<Vec<u64>> = parts.iter().flat_map(|s| s.gens.iter().cloned()).collect();
        self.span(&gens)
    }

    /// Exponents of the invariant factors of `a / b`, descending. Requires b ⊆ a.
    pub fn quotient_invariants(&self, a: &Submodule, b: &Submodule) -> Vec<u32> {
        linalg::quotient_invariants(&self.lift(&a.gens), &self.lift(&b.gens), &self.ring())
    }

    /// Invariant factor exponents of a submodule itself.
    pub fn invariants(&self, a: &Submodule) -> Vec<u32> {
        self.quotient_invariants(
            a,
            &Submodule {
                gens: Vec::new(),
                log_order: 0,
            },
        )
    }

    /// {x : T x = c x}.
    pub fn eigen_kernel(&self, c: u64) -> Submodule {
        let ring = self.ring();
        self.kernel(
            &self
                .action
                .sub(&Mat::scalar(self.rank(), c % ring.modulus), &ring),
        )
    }

    pub fn fixed(&self) -> Submodule {
        self.eigen_kernel(1)
    }

    pub fn is_stable(&self, sub: &Submodule) -> bool {
        sub.gens.iter().all(|g| self.contains(sub, &self.act(g)))
    }

    /// Σ_j c_j T^j for a group-ring element with coefficients `c`.
    pub fn group_ring_action(&self, coeffs: &[u64]) -> Mat {
        let ring = self.ring();
        let r = self.rank();
        let mut acc = Mat::zeros(r, r);
        let mut tp = Mat::identity(r);
        for &c in coeffs {
            acc = acc.add(&tp.scale(c, &ring), &ring);
            tp = tp.mul(&self.action, &ring);
        }
        acc
    }

    /// The inverse action T^{-1} = T^{N-1}.
    pub fn inverse_action(&self) -> Mat {
        self.action.pow(self.acting_order - 1, &self.ring())
    }

    pub fn is_semisimple(&self) -> bool {
        gcd(self.acting_order, self.modulus.p) == 1
    }
}

/// Twist by χ: same carrier, g * a = χ(g)(g · a).
pub fn twist(a: &CyclicActionModule, chi: &UnitCharacter) -> Result<CyclicActionModule> {
    if chi.modulus != a.modulus || a.modulus.pow(chi.gamma, a.acting_order) != 1 {
        return Err(Error::InvalidModule(
            "character is not defined on the acting group".into(),
        ));
    }
    let ring = a.ring();
    CyclicActionModule::new(
        a.modulus,
        a.cyclic_parts.clone(),
        a.action.scale(chi.gamma, &ring),
        a.acting_order,
    )
}

/// Checks (A_χ)^G = A^(χ^{-1}) as submodules.
pub fn twist_fixed_identity(a: &CyclicActionModule, chi: &UnitCharacter) -> Result<bool> {
    let t = twist(a, chi)?;
    let lhs = t.fixed();
    let rhs = a.eigen_kernel(chi.inverse().gamma);
    Ok(a.same_submodule(&lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64, n: u32) -> Modulus {
        Modulus::new(p, n).unwrap()
    }

    #[test]
    fn rejects_ill_defined_action() {
        // On Z/3 ⊕ Z/9 the (1,0) entry must be divisible by 3.
        let bad = Mat::from_rows(&[vec![1, 0], vec![1, 1]]);
        assert!(CyclicActionModule::new(m(3, 2), vec![1, 2], bad, 3).is_err());
        let good = Mat::from_rows(&[vec![1, 0], vec![3, 1]]);
        assert!(CyclicActionModule::new(m(3, 2), vec![1, 2], good, 3).is_ok());
    }

    #[test]
    fn kernel_and_image_orders() {
        let a = CyclicActionModule::trivial_action(m(3, 2), vec![2, 1], 1).unwrap();
        let three = Mat::scalar(2, 3);
        assert_eq!(a.kernel(&three).log_order, 2);
        assert_eq!(a.image(&three).log_order, 1);
        assert_eq!(a.whole().log_order, 3);
    }

    #[test]
    fn twist_example_mod_five() {
        let a = CyclicActionModule::cyclic(m(5, 1), 1, 2, 4).unwrap();
        let chi = UnitCharacter::new(m(5, 1), 4, 3).unwrap();
        let t = twist(&a, &chi).unwrap();
        assert_eq!(t.action.get(0, 0), 1);
        assert_eq!(t.fixed().log_order, 1);
        assert!(twist_fixed_identity(&a, &chi).unwrap());
    }

    #[test]
    fn quotient_invariants_by_enumeration() {
        let a = CyclicActionModule::trivial_action(m(3, 3), vec![3, 2], 1).unwrap();
        let whole = a.whole();
        let sub = a.span(&[vec![3, 3]]);
        // (Z/27 ⊕ Z/9) / <(3,3)>; <(3,3)> has order 9, quotient order 27.
        let inv = a.quotient_invariants(&whole, &sub);
        assert_eq!(inv.iter().sum::<u32>(), 3);
        let members: Vec<Vec<u64>> = a
            .elements()
            .into_iter()
            .filter(|x| a.contains(&sub, x))
            .collect();
        assert_eq!(members.len(), 9);
        // Elements of order dividing 3 in the quotient: x with 3x ∈ sub.
        let killed = a
            .elements()
            .into_iter()
            .filter(|x| a.contains(&sub, &a.scale(3, x)))
            .count();
        let n_killed = killed / 9;
        let predicted: usize = inv.iter().map(|_| 3usize).product();
        assert_eq!(n_killed, predicted);
    }
}
