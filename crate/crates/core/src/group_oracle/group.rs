use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, VecDeque};

/// Subsets of a group of order at most 128, as bitmasks over element indices.
pub type Subset = u128;

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug, Serialize)]
pub struct FiniteGroup {
    pub name: String,
    pub order: usize,
    /// `table[a * order + b]` is the index of `a * b`.
    pub table: Vec<usize>,
    pub labels: Vec<String>,
    pub identity: usize,
    pub inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates associativity, identity and inverses.
    pub fn from_table(
        name: impl Into<String>,
        table: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 || n > 128 || table.len() != n * n || table.iter().any(|&x| x >= n) {
            return Err(Error::InvalidInstance(
                "malformed multiplication table".into(),
            ));
        }
        let m = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::InvalidInstance("no identity".into()))?;
        let inverses = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| m(a, b) == identity && m(b, a) == identity)
                    .ok_or_else(|| Error::InvalidInstance(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(Error::InvalidInstance("table is not associative".into()));
                    }
                }
            }
        }
        Ok(Self {
            name: name.into(),
            order: n,
            table,
            labels,
            identity,
            inverses,
        })
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// g x g^{-1}.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn all(&self) -> Subset {
        if self.order == 128 {
            u128::MAX
        } else {
            (1u128 << self.order) - 1
        }
    }

    pub fn members(s: Subset) -> impl Iterator<Item = usize> {
        (0..128).filter(move |&i| s >> i & 1 == 1)
    }

    pub fn size(s: Subset) -> usize {
        s.count_ones() as usize
    }

    /// Subgroup generated by a set of elements.
    pub fn closure(&self, gens: &[usize]) -> Subset {
        let mut set: Subset = 1 << self.identity;
        let mut queue: VecDeque<usize> = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set >> y & 1 == 0 {
                    set |= 1 << y;
                    queue.push_back(y);
                }
            }
        }
        set
    }

    /// A small generating set of a subgroup, chosen greedily in index order.
    pub fn generators_of(&self, s: Subset) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur: Subset = 1 << self.identity;
        for x in Self::members(s) {
            if cur >> x & 1 == 0 {
                gens.push(x);
                cur = self.closure(&gens);
            }
        }
        gens
    }

    pub fn generators(&self) -> Vec<usize> {
        self.generators_of(self.all())
    }

    pub fn is_normal(&self, h: Subset) -> bool {
        let gens = self.generators();
        Self::members(h).all(|x| gens.iter().all(|&g| h >> self.conj(g, x) & 1 == 1))
    }

    /// All subgroups, found as joins of cyclic subgroups.
    pub fn subgroups(&self) -> Vec<Subset> {
        let cyclic: BTreeSet<Subset> = (0..self.order).map(|g| self.closure(&[g])).collect();
        let mut all: BTreeSet<Subset> = cyclic.clone();
        let mut frontier: Vec<Subset> = cyclic.iter().copied().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &h in &frontier {
                for &c in &cyclic {
                    if c & !h == 0 {
                        continue;
                    }
                    let mut gens = self.generators_of(h);
                    gens.extend(self.generators_of(c));
                    let j = self.closure(&gens);
                    if all.insert(j) {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        all.into_iter().collect()
    }

    pub fn normal_subgroups(&self) -> Vec<Subset> {
        self.subgroups()
            .into_iter()
            .filter(|&h| self.is_normal(h))
            .collect()
    }

    /// The subgroup as a standalone group, with the index map back into `self`.
    pub fn subgroup_as_group(&self, h: Subset) -> (FiniteGroup, Vec<usize>) {
        let elems: Vec<usize> = Self::members(h).collect();
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let n = elems.len();
        let mut table = vec![0; n * n];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                table[i * n + j] = pos[&self.mul(a, b)];
            }
        }
        let labels = elems.iter().map(|&x| self.labels[x].clone()).collect();
        let g = FiniteGroup::from_table(format!("sub({})", self.name), table, labels)
            .expect("a subgroup of a group is a group");
        (g, elems)
    }

    /// Homomorphisms from the subgroup `s` into Z/k, as value vectors indexed
    /// by element (entries outside `s` are zero).
    pub fn homs_to_cyclic(&self, s: Subset, k: u64) -> Vec<Vec<u64>> {
        let gens = self.generators_of(s);
        let mut out = Vec::new();
        let total = k.pow(gens.len() as u32);
        for code in 0..total {
            let mut imgs = Vec::with_capacity(gens.len());
            let mut c = code;
            for _ in 0..gens.len() {
                imgs.push(c % k);
                c /= k;
            }
            if let Some(vals) = self.extend_hom(&gens, &imgs, k) {
                out.push(vals);
            }
        }
        out
    }

    /// Extends generator images along the Cayley graph; `None` if inconsistent.
    fn extend_hom(&self, gens: &[usize], imgs: &[u64], k: u64) -> Option<Vec<u64>> {
        let mut val: Vec<Option<u64>> = vec![None; self.order];
        val[self.identity] = Some(0);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            let vx = val[x].unwrap();
            for (&g, &a) in gens.iter().zip(imgs) {
                let y = self.mul(x, g);
                let vy = (vx + a) % k;
                match val[y] {
                    None => {
                        val[y] = Some(vy);
                        queue.push_back(y);
                    }
                    Some(w) if w != vy => return None,
                    _ => {}
                }
            }
        }
        Some(val.into_iter().map(|v| v.unwrap_or(0)).collect())
    }
}

fn labels(n: usize, f: impl Fn(usize) -> String) -> Vec<String> {
    (0..n).map(f).collect()
}

/// Z/n.
pub fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    FiniteGroup::from_table(format!("C{n}"), table, labels(n, |i| format!("g^{i}"))).unwrap()
}

/// Z/n ⋊ Z/m with the generator of Z/m acting by x ↦ kx; requires k^m ≡ 1 mod n.
pub fn semidirect_cyclic(n: usize, m: usize, k: usize, name: &str) -> FiniteGroup {
    let mut kp = vec![1 % n; m];
    for b in 1..m {
        kp[b] = kp[b - 1] * k % n;
    }
    assert_eq!(kp[m - 1] * k % n, 1 % n, "k^m must be 1 mod n");
    let idx = |a: usize, b: usize| a * m + b;
    let size = n * m;
    let mut table = vec![0; size * size];
    for a in 0..n {
        for b in 0..m {
            for a2 in 0..n {
                for b2 in 0..m {
                    table[idx(a, b) * size + idx(a2, b2)] = idx((a + kp[b] * a2) % n, (b + b2) % m);
                }
            }
        }
    }
    FiniteGroup::from_table(
        name,
        table,
        labels(size, |i| format!("x^{}y^{}", i / m, i % m)),
    )
    .unwrap()
}

/// N ⋊ Z/m where the generator of Z/m acts on N by the automorphism `phi`
/// (a permutation of N's elements with phi^m = id).
pub fn semidirect(nrm: &FiniteGroup, m: usize, phi: &[usize], name: &str) -> FiniteGroup {
    let n = nrm.order;
    let mut powers: Vec<Vec<usize>> = vec![(0..n).collect()];
    for b in 1..=m {
        let prev = &powers[b - 1];
        powers.push(prev.iter().map(|&x| phi[x]).collect());
    }
    assert!(
        powers[m].iter().enumerate().all(|(i, &x)| i == x),
        "phi^m must be the identity"
    );
    for a in 0..n {
        for b in 0..n {
            assert_eq!(
                phi[nrm.mul(a, b)],
                nrm.mul(phi[a], phi[b]),
                "phi must be an automorphism"
            );
        }
    }
    let size = n * m;
    let mut table = vec![0; size * size];
    for x in 0..size {
        let (a, b) = (x / m, x % m);
        for y in 0..size {
            let (a2, b2) = (y / m, y % m);
            table[x * size + y] = nrm.mul(a, powers[b][a2]) * m + (b + b2) % m;
        }
    }
    let lab = labels(size, |x| format!("({},t^{})", nrm.labels[x / m], x % m));
    FiniteGroup::from_table(name, table, lab).unwrap()
}

/// N ⋊ Z/2 with the generator inverting the abelian group N.
pub fn generalized_dihedral(nrm: &FiniteGroup, name: &str) -> FiniteGroup {
    semidirect(nrm, 2, &nrm.inverses.clone(), name)
}

/// Dihedral group of order 2n.
pub fn dihedral(n: usize) -> FiniteGroup {
    semidirect_cyclic(n, 2, n - 1, &format!("D{}", 2 * n))
}

/// Direct product G × H.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (a, b) = (g.order, h.order);
    let n = a * b;
    let mut table = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let (x1, x2) = (x / b, x % b);
            let (y1, y2) = (y / b, y % b);
            table[x * n + y] = g.mul(x1, y1) * b + h.mul(x2, y2);
        }
    }
    let lab = labels(n, |x| format!("({},{})", g.labels[x / b], h.labels[x % b]));
    FiniteGroup::from_table(format!("{}x{}", g.name, h.name), table, lab).unwrap()
}

/// Closure of a set of permutations (composition `(στ)(i) = σ(τ(i))`).
pub fn from_permutations(name: &str, gens: &[Vec<usize>]) -> FiniteGroup {
    let deg = gens[0].len();
    let id: Vec<usize> = (0..deg).collect();
    let compose = |s: &[usize], t: &[usize]| -> Vec<usize> { t.iter().map(|&i| s[i]).collect() };
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let y = compose(&elems[i], g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = index[&compose(&elems[a], &elems[b])];
        }
    }
    let lab = elems.iter().map(|e| format!("{e:?}")).collect();
    FiniteGroup::from_table(name, table, lab).unwrap()
}

pub fn symmetric(n: usize) -> FiniteGroup {
    assert!(
        (2..=4).contains(&n),
        "symmetric groups up to S4 are built in"
    );
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    from_permutations(&format!("S{n}"), &[swap, cycle])
}

pub fn alternating4() -> FiniteGroup {
    from_permutations("A4", &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

pub fn quaternion() -> FiniteGroup {
    // i = (0 2 1 3)(4 6 5 7), j = (0 4 1 5)(2 7 3 6) on the eight units ±1, ±i, ±j, ±k.
    from_permutations(
        "Q8",
        &[vec![2, 3, 1, 0, 6, 7, 5, 4], vec![4, 5, 7, 6, 1, 0, 2, 3]],
    )
}

/// Upper unitriangular 3×3 matrices over F_p, order p^3.
pub fn heisenberg(p: usize) -> FiniteGroup {
    let n = p * p * p;
    let enc = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let mut table = vec![0; n * n];
    for x in 0..n {
        let (a, b, c) = (x / (p * p), x / p % p, x % p);
        for y in 0..n {
            let (a2, b2, c2) = (y / (p * p), y / p % p, y % p);
            table[x * n + y] = enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
        }
    }
    FiniteGroup::from_table(
        format!("Heis{n}"),
        table,
        labels(n, |x| format!("[{},{},{}]", x / (p * p), x / p % p, x % p)),
    )
    .unwrap()
}

/// SL(2,3), order 24.
pub fn sl23() -> FiniteGroup {
    let mats: Vec<[usize; 4]> = {
        let mut v = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for d in 0..3 {
                        if (a * d + 3 * 3 - b * c % 3) % 3 == 1 {
                            v.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        v
    };
    let n = mats.len();
    let pos: HashMap<[usize; 4], usize> = mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut table = vec![0; n * n];
    for (i, x) in mats.iter().enumerate() {
        for (j, y) in mats.iter().enumerate() {
            let z = [
                (x[0] * y[0] + x[1] * y[2]) % 3,
                (x[0] * y[1] + x[1] * y[3]) % 3,
                (x[2] * y[0] + x[3] * y[2]) % 3,
                (x[2] * y[1] + x[3] * y[3]) % 3,
            ];
            table[i * n + j] = pos[&z];
        }
    }
    FiniteGroup::from_table(
        "SL(2,3)",
        table,
        mats.iter().map(|m| format!("{m:?}")).collect(),
    )
    .unwrap()
}
