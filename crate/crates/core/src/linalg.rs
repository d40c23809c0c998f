//! Linear algebra over the local ring Z/p^N.
//!
//! Every finite abelian p-group in the crate is a quotient of a free module
//! `(Z/p^N)^r` by a diagonal relation module, so kernels, images and quotient
//! structures all reduce to Smith normal forms over Z/p^N.

use crate::arith::{add_mod, inv_mod, mul_mod, sub_mod, vp};
use serde::Serialize;

/// The coefficient ring Z/p^N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Zpn {
    pub p: u64,
    pub n: u32,
    pub modulus: u64,
}

impl Zpn {
    pub fn new(p: u64, n: u32) -> Self {
        let modulus = p.checked_pow(n).expect("p^N overflows u64");
        Self { p, n, modulus }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        add_mod(a, b, self.modulus)
    }
    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        sub_mod(a, b, self.modulus)
    }
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.modulus)
    }
    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        sub_mod(0, a, self.modulus)
    }
    pub fn reduce_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.modulus as i64) as u64
    }
    /// Valuation of a residue, with 0 mapped to N.
    pub fn val(&self, a: u64) -> u32 {
        vp(a % self.modulus, self.p).map_or(self.n, |v| v.min(self.n))
    }
    pub fn pow_p(&self, k: u32) -> u64 {
        if k >= self.n {
            0
        } else {
            self.p.pow(k)
        }
    }
}

/// Dense row-major matrix over Z/p^N.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            m.data[i * c..(i + 1) * c].copy_from_slice(row);
        }
        m
    }

    pub fn from_cols(rows: usize, cols: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, &x) in col.iter().take(rows).enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m
    }

    pub fn scalar(n: usize, c: u64) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn reduce(&self, r: &Zpn) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x % r.modulus).collect(),
        }
    }

    pub fn mul(&self, other: &Mat, r: &Zpn) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let idx = i * out.cols + j;
                        out.data[idx] = r.add(out.data[idx], r.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u64], r: &Zpn) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| r.add(acc, r.mul(a, b)))
            })
            .collect()
    }

    pub fn add(&self, other: &Mat, r: &Zpn) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| r.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Mat, r: &Zpn) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| r.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u64, r: &Zpn) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| r.mul(a, c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u64, r: &Zpn) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut acc = Mat::identity(self.rows).reduce(r);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, r);
            }
            base = base.mul(&base, r);
            e >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.data[i * out.cols..i * out.cols + self.cols].copy_from_slice(self.row(i));
            out.data[i * out.cols + self.cols..(i + 1) * out.cols].copy_from_slice(other.row(i));
        }
        out
    }

    /// The first `k` rows.
    pub fn top(&self, k: usize) -> Mat {
        Mat {
            rows: k,
            cols: self.cols,
            data: self.data[..k * self.cols].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// Smith normal form data: pivot valuations and the column transform.
#[derive(Clone, Debug)]
pub struct Snf {
    /// Valuations `a_k < N` of the nonzero diagonal entries, in pivot order.
    pub pivots: Vec<u32>,
    /// Column transform `V` with `U M V = diag`; present when requested.
    pub v: Option<Mat>,
}

/// Smith normal form over Z/p^N with minimal-valuation pivoting.
pub fn snf(m: &Mat, r: &Zpn, want_v: bool) -> Snf {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.reduce(r);
    let mut v = want_v.then(|| Mat::identity(cols));
    let mut pivots = Vec::new();
    let mut row_nz: Vec<usize> = Vec::with_capacity(cols);
    for k in 0..rows.min(cols) {
        // Minimal valuation pivot in the trailing block.
        let mut best: Option<(u32, usize, usize)> = None;
        'search: for i in k..rows {
            for j in k..cols {
                let x = a.data[i * cols + j];
                if x != 0 {
                    let val = r.val(x);
                    if best.is_none_or(|(b, _, _)| val < b) {
                        best = Some((val, i, j));
                        if val == 0 {
                            break 'search;
                        }
                    }
                }
            }
        }
        let Some((val, pi, pj)) = best else { break };
        if pi != k {
            for j in 0..cols {
                a.data.swap(pi * cols + j, k * cols + j);
            }
        }
        if pj != k {
            for i in 0..rows {
                a.data.swap(i * cols + pj, i * cols + k);
            }
            if let Some(v) = v.as_mut() {
                for i in 0..cols {
                    v.data.swap(i * cols + pj, i * cols + k);
                }
            }
        }
        let pv = a.data[k * cols + k];
        let ppow = r.p.pow(val);
        let unit_inv = inv_mod(pv / ppow, r.modulus).expect("pivot unit part is invertible");
        row_nz.clear();
        row_nz.extend((k + 1..cols).filter(|&j| a.data[k * cols + j] != 0));
        // Clear the pivot column below the pivot.
        for i in k + 1..rows {
            let x = a.data[i * cols + k];
            if x == 0 {
                continue;
            }
            let f = r.mul(x / ppow, unit_inv);
            a.data[i * cols + k] = 0;
            for &j in &row_nz {
                let y = a.data[k * cols + j];
                let idx = i * cols + j;
                a.data[idx] = r.sub(a.data[idx], r.mul(f, y));
            }
        }
        // Clear the pivot row; only row k of `a` changes since column k is now clean.
        for &j in &row_nz {
            let x = a.data[k * cols + j];
            let f = r.mul(x / ppow, unit_inv);
            a.data[k * cols + j] = 0;
            if let Some(v) = v.as_mut() {
                for i in 0..cols {
                    let ck = v.data[i * cols + k];
                    if ck != 0 {
                        let idx = i * cols + j;
                        v.data[idx] = r.sub(v.data[idx], r.mul(f, ck));
                    }
                }
            }
        }
        pivots.push(val);
    }
    Snf { pivots, v }
}

/// Generators (as columns) of `{x : M x = 0}`.
pub fn kernel(m: &Mat, r: &Zpn) -> Mat {
    let s = snf(m, r, true);
    let v = s.v.unwrap();
    let mut cols = Vec::new();
    for k in 0..m.cols {
        let scale = match s.pivots.get(k) {
            Some(&a) => r.pow_p(r.n - a),
            None => 1,
        };
        if scale == 0 {
            continue;
        }
        let c: Vec<u64> = v.col(k).iter().map(|&x| r.mul(x, scale)).collect();
        if c.iter().any(|&x| x != 0) {
            cols.push(c);
        }
    }
    Mat::from_cols(m.cols, &cols)
}

/// `log_p` of the order of the span of the columns.
pub fn span_log_order(gens: &Mat, r: &Zpn) -> u32 {
    snf(gens, r, false).pivots.iter().map(|&a| r.n - a).sum()
}

/// Columns of `a` followed by those of `b`, dropping zero columns.
pub fn join(a: &Mat, b: &Mat) -> Mat {
    let rows = a.rows.max(b.rows);
    let cols: Vec<Vec<u64>> = a
        .columns()
        .into_iter()
        .chain(b.columns())
        .filter(|c| c.iter().any(|&x| x != 0))
        .collect();
    Mat::from_cols(rows, &cols)
}

/// `{x : F x ∈ span(T)}` for `F: R → R'`, as generator columns in `R`.
pub fn preimage(f: &Mat, t: &Mat, r: &Zpn) -> Mat {
    assert_eq!(f.rows, t.rows);
    let neg_t = t.scale(r.neg(1), r);
    let k = kernel(&f.hcat(&neg_t), r);
    let proj = k.top(f.cols);
    let cols: Vec<Vec<u64>> = proj
        .columns()
        .into_iter()
        .filter(|c| c.iter().any(|&x| x != 0))
        .collect();
    Mat::from_cols(f.cols, &cols)
}

/// Exponents `a` with `span(S)/span(T) ≅ ⊕ Z/p^a`, sorted descending.
/// Requires `span(T) ⊆ span(S)`.
pub fn quotient_invariants(s: &Mat, t: &Mat, r: &Zpn) -> Vec<u32> {
    let m = s.cols;
    if m == 0 {
        return Vec::new();
    }
    let rel = preimage(s, t, r);
    let piv = snf(&rel, r, false).pivots;
    let mut out: Vec<u32> = (0..m)
        .map(|i| piv.get(i).copied().unwrap_or(r.n))
        .filter(|&a| a > 0)
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// ⊕ Z/p^{k_i} presented as (Z/p^N)^r modulo the relations p^{k_i} e_i,
/// where N is the ring exponent and each k_i ≤ N.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianPGroup {
    pub ring: Zpn,
    pub exps: Vec<u32>,
}

impl AbelianPGroup {
    pub fn new(ring: Zpn, exps: Vec<u32>) -> Self {
        assert!(
            exps.iter().all(|&k| k <= ring.n),
            "exponent exceeds ring exponent"
        );
        Self { ring, exps }
    }

    pub fn rank(&self) -> usize {
        self.exps.len()
    }

    pub fn log_order(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn reduce(&self, x: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(&self.exps)
            .map(|(&a, &k)| a % self.ring.p.pow(k))
            .collect()
    }

    /// Columns p^{k_i} e_i.
    pub fn relations(&self) -> Mat {
        let r = self.rank();
        let cols: Vec<Vec<u64>> = (0..r)
            .filter(|&i| self.exps[i] < self.ring.n)
            .map(|i| {
                let mut c = vec![0; r];
                c[i] = self.ring.p.pow(self.exps[i]);
                c
            })
            .collect();
        Mat::from_cols(r, &cols)
    }

    /// Generators together with the relations, as columns.
    pub fn lift(&self, gens: &Mat) -> Mat {
        join(gens, &self.relations())
    }

    /// log_p of the order of the subgroup generated by the columns of `gens`.
    pub fn span_log_order(&self, gens: &Mat) -> u32 {
        let full = span_log_order(&self.lift(gens), &self.ring);
        let rel: u32 = self.exps.iter().map(|&k| self.ring.n - k).sum();
        full - rel
    }

    /// Kernel of a homomorphism into `target` given by a matrix over Z/p^N.
    pub fn kernel_into(&self, f: &Mat, target: &AbelianPGroup) -> Mat {
        assert_eq!(f.rows, target.rank());
        let mut scaled = f.clone();
        for i in 0..f.rows {
            let c = self.ring.pow_p(self.ring.n - target.exps[i]);
            for j in 0..f.cols {
                scaled.set(i, j, self.ring.mul(f.get(i, j), c));
            }
        }
        kernel(&scaled, &self.ring)
    }

    /// Invariant exponents of span(a)/span(b), descending. Requires b ⊆ a.
    pub fn quotient_invariants(&self, a: &Mat, b: &Mat) -> Vec<u32> {
        quotient_invariants(&self.lift(a), &self.lift(b), &self.ring)
    }

    /// Drops zero columns and reduces entries.
    pub fn clean(&self, m: &Mat) -> Mat {
        let cols: Vec<Vec<u64>> = m
            .columns()
            .into_iter()
            .map(|c| self.reduce(&c))
            .filter(|c| c.iter().any(|&x| x != 0))
            .collect();
        Mat::from_cols(self.rank(), &cols)
    }
}

/// Invariant exponents of a finite abelian p-group from the counts
/// `log_killed[j] = log_p |{x : p^j x = 0}|`, j = 0..=N.
pub fn invariants_from_torsion_counts(log_killed: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let n = log_killed.len().saturating_sub(1);
    let at_least = |j: usize| -> u32 {
        if j == 0 || j > n {
            0
        } else {
            log_killed[j] - log_killed[j - 1]
        }
    };
    for j in (1..=n).rev() {
        let exact = at_least(j) - at_least(j + 1);
        out.extend(std::iter::repeat_n(j as u32, exact as usize));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_of_multiplication_by_three_on_z9() {
        let r = Zpn::new(3, 2);
        let m = Mat::from_rows(&[vec![3]]);
        assert_eq!(snf(&m, &r, false).pivots, vec![1]);
        let k = kernel(&m, &r);
        assert_eq!(span_log_order(&k, &r), 1);
    }

    #[test]
    fn kernel_matches_enumeration() {
        let r = Zpn::new(5, 2);
        let m = Mat::from_rows(&[vec![5, 10, 3], vec![0, 15, 20]]);
        let k = kernel(&m, &r);
        let mut count = 0u32;
        for a in 0..25 {
            for b in 0..25 {
                for c in 0..25 {
                    if m.apply(&[a, b, c], &r).iter().all(|&x| x == 0) {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(5u32.pow(span_log_order(&k, &r)), count);
        assert!(m.mul(&k, &r).is_zero());
    }

    #[test]
    fn torsion_counts_recover_structure() {
        // Z/9 ⊕ Z/3: killed by 1 -> 1, by 3 -> 9, by 9 -> 27.
        assert_eq!(invariants_from_torsion_counts(&[0, 2, 3]), vec![2, 1]);
        assert_eq!(invariants_from_torsion_counts(&[0]), Vec::<u32>::new());
    }

    #[test]
    fn quotient_of_z25_by_5() {
        let r = Zpn::new(5, 2);
        let s = Mat::identity(1);
        let t = Mat::from_rows(&[vec![5]]);
        assert_eq!(quotient_invariants(&s, &t, &r), vec![1]);
        let s2 = Mat::identity(2);
        let t2 = Mat::from_cols(2, &[vec![5, 0]]);
        assert_eq!(quotient_invariants(&s2, &t2, &r), vec![2, 1]);
    }
}
