//! The finite-field realization of F = F_q ⊆ L = F(μ_p) ⊆ M = F(μ_{p^n}).
//!
//! Every class group K*/K*^{p^n} of a finite field K is cyclic, presented as
//! Z/p^e through a fixed generator of K*, with the Frobenius x ↦ x^q acting
//! by multiplication by q. Field inclusions F_{q^a} ⊆ F_{q^b} send the
//! generator class to (q^b − 1)/(q^a − 1) times the generator class.

use crate::arith::{
    gcd, geometric_sum_mod, is_prime, lcm, mult_order_naive, pow_mod, prime_power, vp,
};
use crate::error::{Error, Result};
use crate::linalg::{AbelianPGroup, Mat, Zpn};
use crate::Modulus;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerData {
    pub q: u64,
    pub p: u64,
    pub n: u32,
    /// [L:F], the order of q mod p.
    pub s: u64,
    /// Largest k with μ_{p^k} ⊆ L, i.e. v_p(q^s − 1).
    pub d: u32,
    pub c: u32,
    /// [M:L] from the closed formula p^{n−c}.
    pub deg_ml: u64,
    /// [M:L] as the multiplicative order of q^s mod p^n.
    pub deg_ml_direct: u64,
    /// [M:F], the order of q mod p^n.
    pub f: u64,
    /// α(Frob) = q mod p^n.
    pub alpha: u64,
    /// θ(Frob) = α(Frob)^{p^{n−1}}.
    pub theta: u64,
}

/// The field at which a class group is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Level {
    F,
    L,
    M,
    /// F_{q^k} for an explicit k.
    Degree(u64),
}

/// Largest c with p^c < 2^62, the precision of the exact valuation helper.
fn precision(p: u64) -> u32 {
    let mut c = 0;
    let mut x: u64 = 1;
    while let Some(y) = x.checked_mul(p) {
        if y >= 1 << 62 {
            break;
        }
        x = y;
        c += 1;
    }
    c
}

/// v_p(q^k − 1), exact; fails if it reaches the working precision.
pub fn vp_pow_minus_one(q: u64, k: u64, p: u64) -> Result<u32> {
    let cap = precision(p);
    let m = p.pow(cap);
    let x = pow_mod(q % m, k, m);
    let v = vp((x + m - 1) % m, p).unwrap_or(cap);
    if v >= cap {
        return Err(Error::OutOfRange(format!(
            "v_{p}({q}^{k} - 1) exceeds the working precision"
        )));
    }
    Ok(v)
}

pub fn build_tower(q: u64, p: u64, n: u32) -> Result<TowerData> {
    let modulus = Modulus::new(p, n)?;
    if q < 2 || prime_power(q).is_none() {
        return Err(Error::InvalidField(format!("q = {q} is not a prime power")));
    }
    if q.is_multiple_of(p) {
        return Err(Error::BadCharacteristic { q, p });
    }
    let pn = modulus.value;
    let s = mult_order_naive(q % p, p).expect("q is a unit mod p");
    let mut x = BigUint::from(q).pow(s as u32) - BigUint::one();
    let bp = BigUint::from(p);
    let mut d = 0;
    while (&x % &bp).is_zero() {
        x /= &bp;
        d += 1;
    }
    let c = d.min(n);
    let deg_ml = p.pow(n - c);
    let deg_ml_direct = mult_order_naive(pow_mod(q, s, pn), pn).expect("unit");
    let f = mult_order_naive(q % pn, pn).expect("unit");
    let alpha = q % pn;
    let theta = pow_mod(alpha, p.pow(n - 1), pn);
    Ok(TowerData {
        q,
        p,
        n,
        s,
        d,
        c,
        deg_ml,
        deg_ml_direct,
        f,
        alpha,
        theta,
    })
}

impl TowerData {
    pub fn modulus(&self) -> Modulus {
        Modulus::new(self.p, self.n).expect("validated at construction")
    }

    pub fn ring(&self) -> Zpn {
        Zpn::new(self.p, self.n)
    }

    pub fn pn(&self) -> u64 {
        self.p.pow(self.n)
    }

    /// [M:L] = p^{n−c} against the direct order computation, and f = s·[M:L].
    pub fn degree_formula_holds(&self) -> bool {
        self.deg_ml == self.deg_ml_direct && self.f == self.s * self.deg_ml
    }

    pub fn level_degree(&self, level: Level) -> u64 {
        match level {
            Level::F => 1,
            Level::L => self.s,
            Level::M => self.f,
            Level::Degree(k) => k,
        }
    }

    /// min(n, v_p(q^k − 1)).
    pub fn exponent_at(&self, k: u64) -> u32 {
        let pn = self.pn();
        crate::arith::vp_minus_one(pow_mod(self.q, k, pn), self.p, self.n)
    }

    fn cyc(&self, e: u32) -> AbelianPGroup {
        AbelianPGroup::new(self.ring(), vec![e])
    }
}

/// K*/K*^{p^n} ≅ Z/p^e with the Frobenius of F acting by `multiplier`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerClassGroup {
    pub level: Level,
    /// [K:F].
    pub degree: u64,
    pub e: u32,
    /// q mod p^e.
    pub multiplier: u64,
}

impl PowerClassGroup {
    pub fn order(&self, p: u64) -> u64 {
        p.pow(self.e)
    }
}

pub fn power_class_group(t: &TowerData, level: Level) -> PowerClassGroup {
    let degree = t.level_degree(level);
    let e = t.exponent_at(degree);
    PowerClassGroup {
        level,
        degree,
        e,
        multiplier: t.q % t.p.pow(e),
    }
}

/// A subgroup of a cyclic group Z/p^e, generated by `generator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicSubgroup {
    pub ambient_exponent: u32,
    pub log_order: u32,
    pub generator: u64,
}

/// The subgroup generated by the columns of `gens` in Z/p^e.
fn cyclic_subgroup(t: &TowerData, e: u32, gens: &Mat) -> CyclicSubgroup {
    let grp = t.cyc(e);
    let log_order = grp.span_log_order(gens);
    let generator = if log_order == 0 {
        0
    } else {
        t.p.pow(e - log_order)
    };
    CyclicSubgroup {
        ambient_exponent: e,
        log_order,
        generator,
    }
}

/// ker(x ↦ r x : Z/p^{e_src} → Z/p^{e_tgt}).
fn kernel_of_mult(t: &TowerData, e_src: u32, e_tgt: u32, r: u64) -> CyclicSubgroup {
    let src = t.cyc(e_src);
    let k = src.kernel_into(&Mat::from_rows(&[vec![r % t.pn()]]), &t.cyc(e_tgt));
    cyclic_subgroup(t, e_src, &src.clean(&k))
}

/// {x ∈ Z/p^e : a x = b x}.
fn eigen_subgroup(t: &TowerData, e: u32, a: u64, b: u64) -> CyclicSubgroup {
    let ring = t.ring();
    kernel_of_mult(t, e, e, ring.sub(a % t.pn(), b % t.pn()))
}

/// The class map F_{q^a}*/p^n → F_{q^b}*/p^n for a | b, checked to land
/// exactly on the classes fixed by x ↦ x^{q^a}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionCheck {
    pub from_degree: u64,
    pub to_degree: u64,
    pub from_exponent: u32,
    pub to_exponent: u32,
    pub multiplier: u64,
    pub well_defined: bool,
    pub kernel_log: u32,
    pub image_log: u32,
    pub fixed_log: u32,
    pub image_in_fixed: bool,
}

impl InclusionCheck {
    pub fn bijective_onto_fixed(&self) -> bool {
        self.well_defined
            && self.kernel_log == 0
            && self.image_in_fixed
            && self.image_log == self.fixed_log
    }
}

pub fn inclusion_check(t: &TowerData, a: u64, b: u64) -> InclusionCheck {
    assert!(a > 0 && b.is_multiple_of(a), "F_(q^a) must lie in F_(q^b)");
    let (ea, eb) = (t.exponent_at(a), t.exponent_at(b));
    let peb = t.p.pow(eb);
    let qa = pow_mod(t.q, a, t.pn());
    let r = geometric_sum_mod(qa, b / a, peb);
    let well_defined = (r as u128 * t.p.pow(ea) as u128).is_multiple_of(peb as u128);
    let kernel_log = kernel_of_mult(t, ea, eb, r).log_order;
    let image = cyclic_subgroup(t, eb, &Mat::from_rows(&[vec![r]]));
    let fixed = eigen_subgroup(t, eb, qa, 1);
    let ring = t.ring();
    let image_in_fixed = ring.mul(ring.sub(qa, 1), r).is_multiple_of(peb);
    InclusionCheck {
        from_degree: a,
        to_degree: b,
        from_exponent: ea,
        to_exponent: eb,
        multiplier: r,
        well_defined,
        kernel_log,
        image_log: image.log_order,
        fixed_log: fixed.log_order,
        image_in_fixed,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentReport {
    /// F*/F*^{p^n} → (M*/M*^{p^n})^{G(M/F)}.
    pub f_to_m: InclusionCheck,
    /// F*/F*^{p^n} → (L*/L*^{p^n})^{G(L/F)}.
    pub f_to_l: InclusionCheck,
    /// L*/L*^{p^n} → (M*/M*^{p^n})^{G(M/L)}.
    pub l_to_m: InclusionCheck,
}

impl DescentReport {
    pub fn verified(&self) -> bool {
        self.f_to_m.bijective_onto_fixed()
            && self.f_to_l.bijective_onto_fixed()
            && self.l_to_m.bijective_onto_fixed()
    }
}

pub fn descent_iso_check(t: &TowerData) -> DescentReport {
    DescentReport {
        f_to_m: inclusion_check(t, 1, t.f),
        f_to_l: inclusion_check(t, 1, t.s),
        l_to_m: inclusion_check(t, t.s, t.f),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicCharacters {
    pub alpha: u64,
    pub theta: u64,
    pub alpha_order: u64,
    pub theta_order: u64,
    /// θ(Frob^s) = 1: θ is trivial on G(M/L), the p-part.
    pub theta_trivial_on_p_part: bool,
    /// θ ≡ α mod p: θ agrees with α on the prime-to-p quotient H.
    pub theta_matches_alpha_on_h: bool,
    /// (α θ^{-1})^{p^{n−1}} = 1: α θ^{-1} has p-power order.
    pub quotient_is_p_power: bool,
}

impl CyclotomicCharacters {
    pub fn verified(&self) -> bool {
        self.theta_trivial_on_p_part && self.theta_matches_alpha_on_h && self.quotient_is_p_power
    }
}

pub fn cyclotomic_characters(t: &TowerData) -> CyclotomicCharacters {
    let m = t.modulus();
    let pn = t.pn();
    let alpha_order = mult_order_naive(t.alpha, pn).expect("unit");
    let theta_order = mult_order_naive(t.theta, pn).expect("unit");
    let ratio = m.mul(t.alpha, m.inv(t.theta).expect("unit"));
    CyclotomicCharacters {
        alpha: t.alpha,
        theta: t.theta,
        alpha_order,
        theta_order,
        theta_trivial_on_p_part: m.pow(t.theta, t.s) == 1,
        theta_matches_alpha_on_h: t.theta % t.p == t.alpha % t.p,
        quotient_is_p_power: m.pow(ratio, t.p.pow(t.n - 1)) == 1,
    }
}

/// {x ∈ K*/K*^{p^n} : Frob·x = χ(Frob)·x} at the given level.
pub fn eigencomponent(t: &TowerData, level: Level, gamma: u64) -> CyclicSubgroup {
    let g = power_class_group(t, level);
    eigen_subgroup(t, g.e, t.q, gamma)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaSurjection {
    pub theta: u64,
    pub theta_prime: u64,
    pub source: CyclicSubgroup,
    pub target: CyclicSubgroup,
    pub image_log: u32,
    pub image_in_target: bool,
    pub surjective: bool,
}

/// (L*/L*^{p^n})^{(θ)} → (L*/L*^p)^{(θ′)} under reduction of classes.
pub fn cor25_surjectivity(q: u64, p: u64, n: u32) -> Result<ThetaSurjection> {
    let t = build_tower(q, p, n)?;
    let t1 = build_tower(q, p, 1)?;
    let e_src = t.exponent_at(t.s);
    let e_tgt = t1.exponent_at(t1.s);
    let source = eigen_subgroup(&t, e_src, t.q, t.theta);
    let target = eigen_subgroup(&t, e_tgt, t1.q, t1.theta);
    // Reduction Z/p^{e_src} → Z/p^{e_tgt} is the identity on representatives.
    let img = source.generator % p.pow(e_tgt);
    let image_log = cyclic_subgroup(&t, e_tgt, &Mat::from_rows(&[vec![img]])).log_order;
    let ptgt = p.pow(e_tgt);
    let image_in_target = (((t1.q % ptgt + ptgt - t1.theta % ptgt) % ptgt) as u128 * img as u128)
        .is_multiple_of(ptgt as u128);
    Ok(ThetaSurjection {
        theta: t.theta,
        theta_prime: t1.theta,
        surjective: image_in_target && image_log == target.log_order,
        image_log,
        image_in_target,
        source,
        target,
    })
}

/// Smallest t ≥ 1 such that the element ω_{deg}^x of F_{q^deg}* becomes a
/// p^n-th power in F_{q^{deg·t}}*, found by walking field degrees.
fn kummer_degree(tw: &TowerData, deg: u64, x: u64, n: u32) -> Result<u64> {
    let p = tw.p;
    let base_v = vp_pow_minus_one(tw.q, deg, p)?;
    let vx = vp(x, p).map_or(u32::MAX, |v| v);
    let mut t = 1u64;
    loop {
        let vt = vp_pow_minus_one(tw.q, deg * t, p)?;
        // ω_deg = ω_{deg t}^{R}, R = (q^{deg t} − 1)/(q^{deg} − 1).
        let v_r = vt - base_v.min(vt);
        if vx == u32::MAX || vx.saturating_add(v_r) >= vt.min(n) {
            return Ok(t);
        }
        t += 1;
        if t > p.pow(n) * deg {
            return Err(Error::OutOfRange("no Kummer splitting degree found".into()));
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlbertReport {
    pub class: u64,
    /// [m] ∈ (M*/M*^{p^n})^{(α)}.
    pub eigen_test: bool,
    /// [T:F] for T = M(m^{1/p^n}).
    pub t_degree: u64,
    /// [S·M : F] for S the degree-p^n extension of F, when p^n | [T:F].
    pub sm_degree: Option<u64>,
    pub oracle: bool,
    pub degenerate: bool,
    pub agree: bool,
}

/// Whether M(m^{1/p^n}) = S·M for a cyclic S/F of degree p^n, for m the class
/// `x` (exponent of the generator of M*) with M = L.
pub fn albert_classify(t: &TowerData, x: u64) -> Result<AlbertReport> {
    if t.deg_ml != 1 {
        return Err(Error::HypothesisViolated(format!(
            "[M:L] = {} but M = L is required",
            t.deg_ml
        )));
    }
    let g = power_class_group(t, Level::M);
    let pe = t.p.pow(g.e);
    let class = x % pe;
    let pn = t.pn();
    if class == 0 {
        return Ok(AlbertReport {
            class,
            eigen_test: true,
            t_degree: t.f,
            sm_degree: None,
            oracle: true,
            degenerate: true,
            agree: true,
        });
    }
    if class.is_multiple_of(t.p) {
        return Err(Error::HypothesisViolated(
            "m ∈ M*^p but not in M*^{p^n}".into(),
        ));
    }
    let eig = eigen_subgroup(t, g.e, t.q, t.alpha);
    let eigen_test = eig.log_order > 0 && class.is_multiple_of(eig.generator.max(1));
    let k = kummer_degree(t, t.f, class, t.n)?;
    let t_degree = t.f * k;
    let sm_degree = t_degree.is_multiple_of(pn).then(|| lcm(pn, t.f));
    let oracle = sm_degree == Some(t_degree);
    Ok(AlbertReport {
        class,
        eigen_test,
        t_degree,
        sm_degree,
        oracle,
        degenerate: false,
        agree: eigen_test == oracle,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KummerBase {
    F,
    L,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KummerDescriptor {
    pub base: KummerBase,
    pub base_degree: u64,
    /// log_p |U| for U ⊆ base*/base*^{p^n}.
    pub u_log: u32,
    pub u_order: u64,
    /// [K:M] found by field-degree arithmetic.
    pub k_over_m: u64,
    /// [K:F].
    pub k_degree: u64,
    /// α on the Frobenius of the base field, q_base mod p^n.
    pub action_multiplier: u64,
    pub degree_matches: bool,
    /// Conjugation in the cyclic group G(K/base) agrees with τ ↦ τ^α on G(K/M).
    pub action_is_alpha: bool,
}

/// K = M({b^{1/p^n} : [b] ∈ U}) for the subgroup U of order p^{u_log} of the
/// base field's class group.
pub fn kummer_correspondence(
    t: &TowerData,
    base: KummerBase,
    u_log: u32,
) -> Result<KummerDescriptor> {
    let base_degree = match base {
        KummerBase::F => 1,
        KummerBase::L => t.s,
    };
    let e_base = t.exponent_at(base_degree);
    if u_log > e_base {
        return Err(Error::OutOfRange(format!(
            "|U| = p^{u_log} exceeds the class group order p^{e_base}"
        )));
    }
    // U = <[ω_base^{p^{e−u}}]>; in M* this is ω_M^{R p^{e−u}}.
    let r_exp = t.p.pow(e_base - u_log);
    let base_v = vp_pow_minus_one(t.q, base_degree, t.p)?;
    let m_v = vp_pow_minus_one(t.q, t.f, t.p)?;
    let v_r = m_v - base_v.min(m_v);
    let x = t.p.pow(v_r.min(t.n + 1)) * r_exp;
    let k_over_m = if u_log == 0 {
        1
    } else {
        kummer_degree(t, t.f, x, t.n)?
    };
    let k_degree = t.f * k_over_m;
    let u_order = t.p.pow(u_log);
    // G(K/base) = <φ> with φ = Frob^{base_degree}; G(K/M) = <φ^{f/base}>.
    // Conjugation by φ fixes φ^{f/base} (cyclic group), so the action of φ is
    // τ ↦ τ^1; "via α" means τ ↦ τ^{α(φ)}, i.e. α(φ) ≡ 1 mod [K:M].
    let action_multiplier = pow_mod(t.q, base_degree, t.pn());
    let action_is_alpha = action_multiplier % k_over_m == 1 % k_over_m;
    Ok(KummerDescriptor {
        base,
        base_degree,
        u_log,
        u_order,
        k_over_m,
        k_degree,
        action_multiplier,
        degree_matches: k_over_m == u_order,
        action_is_alpha,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KummerKernelReport {
    pub field_order: u64,
    pub p: u64,
    pub class: u64,
    /// [K:L] for K = L(c^{1/p}).
    pub k_degree: u64,
    pub kernel: Vec<u64>,
    pub expected: Vec<u64>,
    pub matches: bool,
}

/// Kernel of L*/L*^p → K*/K*^p for K = L(c^{1/p}), with L = F_Q and [c] the
/// class of ω^c for a generator ω of L*.
pub fn kummer_kernel(field_order: u64, p: u64, c: u64) -> Result<KummerKernelReport> {
    if !is_prime(p) || p == 2 {
        return Err(Error::InvalidModulus(format!(
            "p = {p} must be an odd prime"
        )));
    }
    if prime_power(field_order).is_none() || field_order.is_multiple_of(p) {
        return Err(Error::InvalidField(format!(
            "F_{field_order} is not a field of characteristic prime to {p}"
        )));
    }
    if !(field_order - 1).is_multiple_of(p) {
        return Err(Error::HypothesisViolated(format!(
            "μ_{p} is not contained in F_{field_order}"
        )));
    }
    let c = c % p;
    let tw = build_tower(field_order, p, 1)?;
    let k_degree = kummer_degree(&tw, 1, c, 1)?;
    // |K*|/|L*| = 1 + Q + … + Q^{t−1}.
    let r = geometric_sum_mod(field_order, k_degree, p);
    let kernel: Vec<u64> = (0..p).filter(|&x| (x * r).is_multiple_of(p)).collect();
    let mut expected: Vec<u64> = (0..p).map(|j| j * c % p).collect();
    expected.sort_unstable();
    expected.dedup();
    Ok(KummerKernelReport {
        field_order,
        p,
        class: c,
        k_degree,
        matches: kernel == expected,
        kernel,
        expected,
    })
}

/// Orders (log_p) of (L*/L*^{p^n})^{(θ)} and of the θα^{-1}-eigencomponent of
/// X(M̌/M) ≅ Z/p^n, on which G(M/F) acts trivially (G_M is procyclic).
pub fn eigencomponent_orders(t: &TowerData) -> (u32, u32) {
    let l_side = eigencomponent(t, Level::L, t.theta).log_order;
    let m = t.modulus();
    let lambda = m.mul(t.theta, m.inv(t.alpha).expect("unit"));
    let x_side = eigen_subgroup(t, t.n, 1, lambda).log_order;
    (l_side, x_side)
}

/// Prime powers q < bound coprime to p.
pub fn prime_powers_below(bound: u64, p: u64) -> Vec<u64> {
    (2..bound)
        .filter(|&q| prime_power(q).is_some() && gcd(q, p) == 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_examples() {
        let t = build_tower(7, 3, 2).unwrap();
        assert_eq!((t.s, t.d, t.c, t.deg_ml), (1, 1, 1, 3));
        assert!(t.degree_formula_holds());
        let t = build_tower(2, 3, 2).unwrap();
        assert_eq!((t.s, t.d, t.deg_ml, t.f), (2, 1, 3, 6));
        let t = build_tower(10, 3, 2).unwrap_err();
        assert!(matches!(t, Error::InvalidField(_)));
        assert_eq!(
            build_tower(9, 3, 2).unwrap_err(),
            Error::BadCharacteristic { q: 9, p: 3 }
        );
        let t = build_tower(19, 3, 2).unwrap();
        assert_eq!((t.s, t.c, t.deg_ml), (1, 2, 1));
    }

    #[test]
    fn power_class_groups() {
        let t = build_tower(7, 3, 2).unwrap();
        assert_eq!(power_class_group(&t, Level::F).e, 1);
        assert_eq!(power_class_group(&t, Level::M).e, 2);
    }

    #[test]
    fn descent_examples() {
        for (q, p, n) in [(7, 3, 2), (2, 5, 1), (4, 3, 1), (2, 3, 3), (8, 7, 2)] {
            let t = build_tower(q, p, n).unwrap();
            assert!(descent_iso_check(&t).verified(), "{q} {p} {n}");
        }
        let t = build_tower(7, 3, 2).unwrap();
        assert_eq!(descent_iso_check(&t).f_to_m.fixed_log, 1);
        let t = build_tower(2, 5, 1).unwrap();
        assert_eq!(descent_iso_check(&t).f_to_m.from_exponent, 0);
    }

    #[test]
    fn cyclotomic_character_examples() {
        let t = build_tower(2, 5, 2).unwrap();
        let c = cyclotomic_characters(&t);
        assert_eq!(
            (c.alpha, c.alpha_order, c.theta, c.theta_order),
            (2, 20, 7, 4)
        );
        assert!(c.verified());
        let t = build_tower(7, 3, 2).unwrap();
        assert_eq!(cyclotomic_characters(&t).theta, 1);
        let t = build_tower(2, 7, 1).unwrap();
        assert_eq!(t.theta, t.alpha);
    }

    #[test]
    fn eigencomponents_at_l() {
        let t = build_tower(2, 5, 1).unwrap();
        assert_eq!(eigencomponent(&t, Level::L, 2).log_order, 1);
        assert_eq!(eigencomponent(&t, Level::L, 1).log_order, 0);
    }

    #[test]
    fn theta_surjection_examples() {
        assert!(cor25_surjectivity(2, 5, 2).unwrap().surjective);
        assert_eq!(cor25_surjectivity(2, 5, 2).unwrap().source.log_order, 1);
        assert!(cor25_surjectivity(7, 3, 2).unwrap().surjective);
    }

    #[test]
    fn albert_examples() {
        let t = build_tower(2, 5, 1).unwrap();
        let r = albert_classify(&t, 1).unwrap();
        assert!(r.eigen_test && r.oracle);
        assert_eq!((r.t_degree, r.sm_degree), (20, Some(20)));
        assert!(albert_classify(&t, 0).unwrap().degenerate);
        let t = build_tower(7, 3, 2).unwrap();
        assert!(matches!(
            albert_classify(&t, 1),
            Err(Error::HypothesisViolated(_))
        ));
        let t = build_tower(7, 3, 1).unwrap();
        assert!(albert_classify(&t, 1).unwrap().agree);
        let t = build_tower(19, 3, 2).unwrap();
        assert!(matches!(
            albert_classify(&t, 3),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn kummer_examples() {
        let t = build_tower(7, 3, 2).unwrap();
        let k = kummer_correspondence(&t, KummerBase::F, 1).unwrap();
        assert_eq!(k.k_over_m, 3);
        assert!(k.degree_matches && k.action_is_alpha);
        assert_eq!(
            kummer_correspondence(&t, KummerBase::F, 0)
                .unwrap()
                .k_over_m,
            1
        );
        let t = build_tower(2, 5, 1).unwrap();
        let k = kummer_correspondence(&t, KummerBase::L, 1).unwrap();
        assert_eq!((k.k_over_m, k.k_degree), (5, 20));
        assert!(k.degree_matches && k.action_is_alpha);
    }

    #[test]
    fn kummer_kernel_examples() {
        let r = kummer_kernel(16, 5, 1).unwrap();
        assert_eq!(r.k_degree, 5);
        assert_eq!(r.kernel.len(), 5);
        assert!(r.matches);
        let r = kummer_kernel(16, 5, 0).unwrap();
        assert_eq!((r.k_degree, r.kernel.clone()), (1, vec![0]));
        assert!(kummer_kernel(4, 3, 2).unwrap().matches);
    }

    #[test]
    fn eigencomponent_orders_agree() {
        for (q, p, n) in [(2, 5, 2), (7, 3, 2), (2, 3, 3), (4, 7, 2)] {
            let t = build_tower(q, p, n).unwrap();
            let (a, b) = eigencomponent_orders(&t);
            assert_eq!(a, b, "{q} {p} {n}");
        }
    }
}
