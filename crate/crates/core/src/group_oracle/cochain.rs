//! Normalized inhomogeneous cochains of a finite group with coefficients in a
//! finite abelian p-group, and the brute-force cohomology built on them.

use super::group::FiniteGroup;
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::linalg::{join, preimage, AbelianPGroup, Mat, Zpn};
use serde::Serialize;
use std::collections::{HashSet, VecDeque};

/// A finite abelian p-group ⊕ Z/p^{k_i} with a left G-action, one integer
/// matrix per group element (acting on column vectors).
#[derive(Clone, Debug)]
pub struct GModule {
    pub group: FiniteGroup,
    pub p: u64,
    pub exps: Vec<u32>,
    pub actions: Vec<Mat>,
    ring: Zpn,
}

impl GModule {
    pub fn new(group: FiniteGroup, p: u64, exps: Vec<u32>, actions: Vec<Mat>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidModule(format!("{p} is not prime")));
        }
        if actions.len() != group.order {
            return Err(Error::InvalidModule(
                "one action matrix per element required".into(),
            ));
        }
        let n = exps.iter().copied().max().unwrap_or(1).max(1);
        let ring = Zpn::new(p, n);
        let r = exps.len();
        let actions: Vec<Mat> = actions.iter().map(|a| a.reduce(&ring)).collect();
        let m = Self {
            group,
            p,
            exps,
            actions,
            ring,
        };
        for a in &m.actions {
            if a.rows != r || a.cols != r {
                return Err(Error::InvalidModule(
                    "action matrix has the wrong shape".into(),
                ));
            }
            if !m.well_defined(a) {
                return Err(Error::InvalidModule(
                    "action does not respect the cyclic parts".into(),
                ));
            }
        }
        if !m.same_map(&m.actions[m.group.identity], &Mat::identity(r)) {
            return Err(Error::InvalidModule(
                "identity does not act trivially".into(),
            ));
        }
        for g in 0..m.group.order {
            for h in 0..m.group.order {
                let gh = m.actions[g].mul(&m.actions[h], &m.ring);
                if !m.same_map(&gh, &m.actions[m.group.mul(g, h)]) {
                    return Err(Error::InvalidModule("action is not a homomorphism".into()));
                }
            }
        }
        Ok(m)
    }

    /// Extends generator actions along the Cayley graph.
    pub fn from_generators(
        group: FiniteGroup,
        p: u64,
        exps: Vec<u32>,
        gens: &[(usize, Mat)],
    ) -> Result<Self> {
        let n = exps.iter().copied().max().unwrap_or(1).max(1);
        let ring = Zpn::new(p, n);
        let r = exps.len();
        let mut actions: Vec<Option<Mat>> = vec![None; group.order];
        actions[group.identity] = Some(Mat::identity(r));
        let mut queue = VecDeque::from([group.identity]);
        while let Some(x) = queue.pop_front() {
            for (g, t) in gens {
                let y = group.mul(x, *g);
                if actions[y].is_none() {
                    actions[y] = Some(actions[x].as_ref().unwrap().mul(t, &ring));
                    queue.push_back(y);
                }
            }
        }
        if actions.iter().any(|a| a.is_none()) {
            return Err(Error::InvalidModule(
                "generators do not generate the group".into(),
            ));
        }
        Self::new(
            group,
            p,
            exps,
            actions.into_iter().map(Option::unwrap).collect(),
        )
    }

    pub fn trivial(group: FiniteGroup, p: u64, exps: Vec<u32>) -> Result<Self> {
        let r = exps.len();
        let actions = vec![Mat::identity(r); group.order];
        Self::new(group, p, exps, actions)
    }

    pub fn ring(&self) -> Zpn {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.exps.len()
    }

    pub fn log_order(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// |A| as u128, saturating.
    pub fn order(&self) -> u128 {
        (self.p as u128).saturating_pow(self.log_order())
    }

    pub fn abelian_group(&self) -> AbelianPGroup {
        AbelianPGroup::new(self.ring, self.exps.clone())
    }

    fn well_defined(&self, a: &Mat) -> bool {
        (0..a.rows).all(|i| {
            (0..a.cols).all(|j| {
                self.exps[j] >= self.exps[i]
                    || self.ring.val(a.get(i, j)) >= self.exps[i] - self.exps[j]
            })
        })
    }

    fn same_map(&self, a: &Mat, b: &Mat) -> bool {
        let d = a.sub(b, &self.ring);
        (0..d.rows)
            .all(|i| (0..d.cols).all(|j| d.get(i, j).is_multiple_of(self.p.pow(self.exps[i]))))
    }

    /// The module restricted to the subgroup `h` (as a standalone group).
    pub fn restrict(&self, h: u128) -> Result<(GModule, Vec<usize>)> {
        let (sub, elems) = self.group.subgroup_as_group(h);
        let actions = elems.iter().map(|&x| self.actions[x].clone()).collect();
        Ok((
            GModule::new(sub, self.p, self.exps.clone(), actions)?,
            elems,
        ))
    }
}

/// Which computation produced a cohomology group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    Enumeration,
    LinearAlgebra,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruteCohomology {
    pub degree: u32,
    pub p: u64,
    /// Exponents a with H ≅ ⊕ Z/p^a, descending.
    pub invariants: Vec<u32>,
    pub log_order: u32,
    pub method: Method,
}

/// Enumeration bounds for the brute-force oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub max_group_order: usize,
    pub max_module_order: u128,
    /// Largest cochain-space size still enumerated element by element.
    pub max_enumeration: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_group_order: 12,
            max_module_order: 125,
            max_enumeration: 200_000,
        }
    }
}

/// The normalized cochain complex C^0 → C^1 → C^2 → C^3.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub module: GModule,
    /// Position of each non-identity element; `None` for the identity.
    pos: Vec<Option<usize>>,
    nonid: Vec<usize>,
    /// `deltas[i]` is δ^i : C^i → C^{i+1}.
    deltas: Vec<Mat>,
}

impl CochainComplex {
    pub fn new(module: &GModule, top: u32) -> Self {
        let g = &module.group;
        let nonid: Vec<usize> = (0..g.order).filter(|&x| x != g.identity).collect();
        let mut pos = vec![None; g.order];
        for (i, &x) in nonid.iter().enumerate() {
            pos[x] = Some(i);
        }
        let mut cc = Self {
            module: module.clone(),
            pos,
            nonid,
            deltas: Vec::new(),
        };
        for i in 0..top.min(2) + 1 {
            let d = cc.build_delta(i);
            cc.deltas.push(d);
        }
        cc
    }

    fn m(&self) -> usize {
        self.nonid.len()
    }

    /// Dimension (number of Z/p^N coordinates) of C^i.
    pub fn dim(&self, i: u32) -> usize {
        self.m().pow(i) * self.module.rank()
    }

    pub fn cochain_group(&self, i: u32) -> AbelianPGroup {
        let exps = self.module.exps.repeat(self.m().pow(i));
        AbelianPGroup::new(self.module.ring(), exps)
    }

    /// Index of the normalized tuple, or `None` if some entry is the identity.
    fn tuple_index(&self, xs: &[usize]) -> Option<usize> {
        let mut idx = 0;
        for &x in xs {
            idx = idx * self.m() + self.pos[x]?;
        }
        Some(idx)
    }

    fn build_delta(&self, i: u32) -> Mat {
        let r = self.module.rank();
        let ring = self.module.ring();
        let g = &self.module.group;
        let mut d = Mat::zeros(self.dim(i + 1), self.dim(i));
        let add_block = |d: &mut Mat, row: usize, col: usize, t: Option<&Mat>, sign: bool| {
            for a in 0..r {
                for b in 0..r {
                    let v = match t {
                        Some(t) => t.get(a, b),
                        None => u64::from(a == b),
                    };
                    if v == 0 {
                        continue;
                    }
                    let (ri, ci) = (row * r + a, col * r + b);
                    let cur = d.get(ri, ci);
                    d.set(
                        ri,
                        ci,
                        if sign {
                            ring.add(cur, v)
                        } else {
                            ring.sub(cur, v)
                        },
                    );
                }
            }
        };
        let m = self.m();
        for row in 0..m.pow(i + 1) {
            // Decode the (i+1)-tuple.
            let mut xs = vec![0; i as usize + 1];
            let mut c = row;
            for k in (0..=i as usize).rev() {
                xs[k] = self.nonid[c % m];
                c /= m;
            }
            let g0 = xs[0];
            // g0 · f(x1..xi)
            if let Some(col) = self.tuple_index(&xs[1..]) {
                add_block(&mut d, row, col, Some(&self.module.actions[g0]), true);
            }
            // Σ_{k} (-1)^{k+1} f(.., x_k x_{k+1}, ..)
            for k in 0..i as usize {
                let mut ys: Vec<usize> = xs[..k].to_vec();
                ys.push(g.mul(xs[k], xs[k + 1]));
                ys.extend_from_slice(&xs[k + 2..]);
                if let Some(col) = self.tuple_index(&ys) {
                    add_block(&mut d, row, col, None, k % 2 == 1);
                }
            }
            // (-1)^{i+1} f(x0..x_{i-1})
            if let Some(col) = self.tuple_index(&xs[..i as usize]) {
                add_block(&mut d, row, col, None, i % 2 == 1);
            }
        }
        d
    }

    pub fn delta(&self, i: u32) -> &Mat {
        &self.deltas[i as usize]
    }

    /// Generators of Z^i = ker δ^i.
    pub fn cocycles(&self, i: u32) -> Mat {
        let src = self.cochain_group(i);
        let k = src.kernel_into(self.delta(i), &self.cochain_group(i + 1));
        src.clean(&k)
    }

    /// Generators of B^i = im δ^{i-1} (zero for i = 0).
    pub fn coboundaries(&self, i: u32) -> Mat {
        let tgt = self.cochain_group(i);
        if i == 0 {
            return Mat::zeros(tgt.rank(), 0);
        }
        tgt.clean(self.delta(i - 1))
    }

    pub fn cohomology_invariants(&self, i: u32) -> Vec<u32> {
        let grp = self.cochain_group(i);
        grp.quotient_invariants(&self.cocycles(i), &self.coboundaries(i))
    }

    /// Invariants of the subgroup of H^i fixed by the cochain maps `ops`.
    pub fn fixed_cohomology_invariants(&self, i: u32, ops: &[Mat]) -> Vec<u32> {
        let grp = self.cochain_group(i);
        let ring = grp.ring;
        let z = grp.lift(&self.cocycles(i));
        let b = grp.lift(&self.coboundaries(i));
        if ops.is_empty() {
            return grp.quotient_invariants(&z, &b);
        }
        // Stack (op - 1)·Z over all ops; target is B in each block.
        let dim = grp.rank();
        let k = ops.len();
        let mut f = Mat::zeros(dim * k, z.cols);
        let mut t = Mat::zeros(dim * k, b.cols * k);
        for (bi, op) in ops.iter().enumerate() {
            let diff = op.sub(&Mat::identity(dim), &ring).mul(&z, &ring);
            for r in 0..dim {
                for c in 0..z.cols {
                    f.set(bi * dim + r, c, diff.get(r, c));
                }
                for c in 0..b.cols {
                    t.set(bi * dim + r, bi * b.cols + c, b.get(r, c));
                }
            }
        }
        let coeffs = preimage(&f, &t, &ring);
        let fixed = z.mul(&coeffs, &ring);
        grp.quotient_invariants(&join(&fixed, &b), &b)
    }

    /// The cochain map f ↦ (x ↦ t·f(conj(x))) on C^i, where `conj[x]` is the
    /// index of g^{-1} x g and `t` is the action of g; g may lie outside the
    /// group of the complex as long as it normalizes it.
    pub fn conjugation_map(&self, i: u32, conj: &[usize], t: &Mat) -> Mat {
        let r = self.module.rank();
        let m = self.m();
        let dim = self.dim(i);
        let mut out = Mat::zeros(dim, dim);
        for row in 0..m.pow(i) {
            let xs = decode_tuple(row, i as usize, m, &self.nonid);
            let ys: Vec<usize> = xs.iter().map(|&x| conj[x]).collect();
            let col = self
                .tuple_index(&ys)
                .expect("conjugation preserves non-identity elements");
            for a in 0..r {
                for b in 0..r {
                    out.set(row * r + a, col * r + b, t.get(a, b));
                }
            }
        }
        out
    }

    /// The cochain map applying a module endomorphism pointwise.
    pub fn pointwise_map(&self, i: u32, t: &Mat) -> Mat {
        let r = self.module.rank();
        let mut out = Mat::zeros(self.dim(i), self.dim(i));
        for blk in 0..self.m().pow(i) {
            for a in 0..r {
                for b in 0..r {
                    out.set(blk * r + a, blk * r + b, t.get(a, b));
                }
            }
        }
        out
    }
}

fn check_limits(g: &FiniteGroup, a: &GModule, limits: &Limits) -> Result<()> {
    if g.order > limits.max_group_order {
        return Err(Error::TooLarge(format!(
            "|G| = {} > {}",
            g.order, limits.max_group_order
        )));
    }
    if a.order() > limits.max_module_order {
        return Err(Error::TooLarge(format!(
            "|A| = {} > {}",
            a.order(),
            limits.max_module_order
        )));
    }
    Ok(())
}

/// H^i(G, A) for i ∈ {1, 2} under the default bounds |G| ≤ 12, |A| ≤ 125.
pub fn brute_cohomology(a: &GModule, i: u32) -> Result<BruteCohomology> {
    brute_cohomology_with_limits(a, i, &Limits::default())
}

/// H^i(G, A) for i ∈ {1, 2}: by enumerating cochains when the cochain space
/// is small enough, otherwise by linear algebra on the cochain complex.
pub fn brute_cohomology_with_limits(
    a: &GModule,
    i: u32,
    limits: &Limits,
) -> Result<BruteCohomology> {
    if !(1..=2).contains(&i) {
        return Err(Error::OutOfRange(format!("degree {i} not in 1..=2")));
    }
    check_limits(&a.group, a, limits)?;
    let cells = (a.group.order as u32 - 1).pow(i);
    let space = a.order().checked_pow(cells);
    if space.is_some_and(|s| s <= limits.max_enumeration) {
        Ok(enumerate_cohomology(a, i))
    } else {
        Ok(linear_cohomology(a, i))
    }
}

/// H^i via the cochain complex and Smith normal forms.
pub fn linear_cohomology(a: &GModule, i: u32) -> BruteCohomology {
    let cc = CochainComplex::new(a, i);
    let invariants = cc.cohomology_invariants(i);
    BruteCohomology {
        degree: i,
        p: a.p,
        log_order: invariants.iter().sum(),
        invariants,
        method: Method::LinearAlgebra,
    }
}

/// Element-level tables for the enumeration oracle.
struct Tables {
    size: usize,
    zero: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    act: Vec<Vec<usize>>,
    times_p: Vec<usize>,
}

impl Tables {
    fn new(a: &GModule) -> Self {
        let moduli: Vec<u64> = a.exps.iter().map(|&k| a.p.pow(k)).collect();
        let size: usize = moduli.iter().product::<u64>() as usize;
        let decode = |mut x: usize| -> Vec<u64> {
            moduli
                .iter()
                .map(|&m| {
                    let d = x as u64 % m;
                    x /= m as usize;
                    d
                })
                .collect()
        };
        let encode = |v: &[u64]| -> usize {
            let mut x = 0usize;
            for (d, &m) in v.iter().zip(&moduli).rev() {
                x = x * m as usize + (d % m) as usize;
            }
            x
        };
        let elems: Vec<Vec<u64>> = (0..size).map(decode).collect();
        let ring = a.ring();
        let mut add = vec![0; size * size];
        for x in 0..size {
            for y in 0..size {
                let s: Vec<u64> = elems[x]
                    .iter()
                    .zip(&elems[y])
                    .map(|(&u, &v)| u + v)
                    .collect();
                add[x * size + y] = encode(&s);
            }
        }
        let neg = (0..size)
            .map(|x| {
                encode(
                    &elems[x]
                        .iter()
                        .zip(&moduli)
                        .map(|(&u, &m)| (m - u) % m)
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        let act = a
            .actions
            .iter()
            .map(|t| {
                (0..size)
                    .map(|x| encode(&t.apply(&elems[x], &ring)))
                    .collect()
            })
            .collect();
        let times_p = (0..size)
            .map(|x| encode(&elems[x].iter().map(|&u| u * a.p).collect::<Vec<_>>()))
            .collect();
        Self {
            size,
            zero: 0,
            add,
            neg,
            act,
            times_p,
        }
    }

    fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size + y]
    }
    fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg[y])
    }
}

/// One coordinate of δf: `act(f[head])` plus signed terms `±f[idx]`,
/// with `None` standing for a value at a tuple containing the identity.
struct Stencil {
    g0: usize,
    head: Option<usize>,
    terms: Vec<(bool, Option<usize>)>,
}

fn stencils(g: &FiniteGroup, nonid: &[usize], pos: &[usize], i: usize) -> Vec<Stencil> {
    let m = nonid.len();
    let index = |xs: &[usize]| -> Option<usize> {
        let mut idx = 0;
        for &x in xs {
            if x == g.identity {
                return None;
            }
            idx = idx * m + pos[x];
        }
        Some(idx)
    };
    (0..m.pow(i as u32 + 1))
        .map(|c| {
            let xs = decode_tuple(c, i + 1, m, nonid);
            let mut terms = Vec::with_capacity(i + 1);
            for k in 0..i {
                let mut ys: Vec<usize> = xs[..k].to_vec();
                ys.push(g.mul(xs[k], xs[k + 1]));
                ys.extend_from_slice(&xs[k + 2..]);
                terms.push((k % 2 == 1, index(&ys)));
            }
            terms.push((i % 2 == 1, index(&xs[..i])));
            Stencil {
                g0: xs[0],
                head: index(&xs[1..]),
                terms,
            }
        })
        .collect()
}

fn apply_stencil(t: &Tables, s: &Stencil, f: &[usize]) -> usize {
    let at = |idx: Option<usize>| idx.map_or(t.zero, |k| f[k]);
    let mut acc = t.act[s.g0][at(s.head)];
    for &(plus, idx) in &s.terms {
        let v = at(idx);
        acc = if plus { t.add(acc, v) } else { t.sub(acc, v) };
    }
    acc
}

/// H^i by listing every normalized cochain, keeping the cocycles, and
/// counting classes modulo the coboundaries.
pub fn enumerate_cohomology(a: &GModule, i: u32) -> BruteCohomology {
    let g = &a.group;
    let t = Tables::new(a);
    let nonid: Vec<usize> = (0..g.order).filter(|&x| x != g.identity).collect();
    let m = nonid.len();
    let mut pos = vec![usize::MAX; g.order];
    for (k, &x) in nonid.iter().enumerate() {
        pos[x] = k;
    }
    let i = i as usize;
    let cells = m.pow(i as u32);
    let prev_cells = m.pow(i as u32 - 1);

    // All normalized (i-1)-cochains, pushed through δ^{i-1}.
    let lower = stencils(g, &nonid, &pos, i - 1);
    let coboundaries: HashSet<Vec<usize>> = odometer(t.size, prev_cells)
        .map(|f| lower.iter().map(|s| apply_stencil(&t, s, &f)).collect())
        .collect();

    let upper = stencils(g, &nonid, &pos, i);
    let cocycles: Vec<Vec<usize>> = odometer(t.size, cells)
        .filter(|f| upper.iter().all(|s| apply_stencil(&t, s, f) == t.zero))
        .collect();

    // log_p |{z : p^j z ∈ B}| - log_p |B| for j = 0..=N.
    let logp = |mut x: usize| -> u32 {
        let mut k = 0;
        while x > 1 {
            debug_assert_eq!(x as u64 % a.p, 0);
            x /= a.p as usize;
            k += 1;
        }
        k
    };
    let nb = coboundaries.len();
    let big_n = a.ring().n as usize;
    let mut counts = Vec::with_capacity(big_n + 1);
    for j in 0..=big_n {
        let c = cocycles
            .iter()
            .filter(|z| {
                let mut w: Vec<usize> = z.to_vec();
                for _ in 0..j {
                    w.iter_mut().for_each(|x| *x = t.times_p[*x]);
                }
                coboundaries.contains(&w)
            })
            .count();
        counts.push(logp(c / nb));
    }
    let invariants = crate::linalg::invariants_from_torsion_counts(&counts);
    BruteCohomology {
        degree: i as u32,
        p: a.p,
        log_order: logp(cocycles.len() / nb),
        invariants,
        method: Method::Enumeration,
    }
}

fn decode_tuple(mut c: usize, len: usize, m: usize, nonid: &[usize]) -> Vec<usize> {
    let mut xs = vec![0; len];
    for k in (0..len).rev() {
        xs[k] = nonid[c % m];
        c /= m;
    }
    xs
}

/// All vectors in {0..base}^len.
fn odometer(base: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur = Some(vec![0usize; len]);
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut k = 0;
        loop {
            if k == len {
                cur = None;
                break;
            }
            next[k] += 1;
            if next[k] < base {
                cur = Some(next);
                break;
            }
            next[k] = 0;
            k += 1;
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_oracle::group::{cyclic, symmetric};

    fn cyclic_module(n: usize, p: u64, exps: Vec<u32>, t: Mat) -> GModule {
        GModule::from_generators(cyclic(n), p, exps, &[(1, t)]).unwrap()
    }

    #[test]
    fn z2_on_z2_trivial() {
        let a = GModule::trivial(cyclic(2), 2, vec![1]).unwrap();
        for i in 1..=2 {
            let e = enumerate_cohomology(&a, i);
            assert_eq!(e.invariants, vec![1]);
            assert_eq!(linear_cohomology(&a, i).invariants, vec![1]);
        }
    }

    #[test]
    fn z3_on_z9_by_seven_is_acyclic() {
        let a = cyclic_module(3, 3, vec![2], Mat::from_rows(&[vec![7]]));
        for i in 1..=2 {
            assert_eq!(brute_cohomology(&a, i).unwrap().log_order, 0);
            assert_eq!(linear_cohomology(&a, i).log_order, 0);
        }
    }

    #[test]
    fn enumeration_and_linear_algebra_agree() {
        // Z/4 acting on Z/3 ⊕ Z/3 by a rotation of order 4.
        let t = Mat::from_rows(&[vec![0, 2], vec![1, 0]]);
        let a = cyclic_module(4, 3, vec![1, 1], t);
        assert_eq!(
            enumerate_cohomology(&a, 1),
            BruteCohomology {
                method: Method::Enumeration,
                ..linear_cohomology(&a, 1)
            }
        );
        // S3 on Z/3 via the sign.
        let s3 = symmetric(3);
        let actions = (0..6)
            .map(|g| {
                let sign = if s3.element_order(g) == 2 { 2 } else { 1 };
                Mat::from_rows(&[vec![sign]])
            })
            .collect();
        let a = GModule::new(s3, 3, vec![1], actions).unwrap();
        let e = enumerate_cohomology(&a, 1);
        assert_eq!(e.invariants, linear_cohomology(&a, 1).invariants);
        assert_eq!(e.invariants, vec![1]);
    }

    #[test]
    fn trivial_module_has_trivial_cohomology() {
        let a = GModule::trivial(cyclic(5), 3, vec![]).unwrap();
        assert_eq!(brute_cohomology(&a, 2).unwrap().log_order, 0);
    }

    #[test]
    fn bounds_are_enforced() {
        let a = GModule::trivial(cyclic(13), 3, vec![1]).unwrap();
        assert!(matches!(brute_cohomology(&a, 1), Err(Error::TooLarge(_))));
        let a = GModule::trivial(cyclic(2), 3, vec![5]).unwrap();
        assert!(matches!(brute_cohomology(&a, 1), Err(Error::TooLarge(_))));
    }

    #[test]
    fn non_homomorphic_action_is_rejected() {
        let bad =
            GModule::from_generators(cyclic(2), 5, vec![1], &[(1, Mat::from_rows(&[vec![2]]))]);
        assert!(bad.is_err());
    }
}
