//! Symbol algebras (a, b; K)_ζ as structure-constant tables on the basis i^r j^s.

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::fields::ExactField;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub struct SymbolAlgebra<K: ExactField> {
    pub field: K,
    pub m: u64,
    pub a: K::Elem,
    pub b: K::Elem,
    pub zeta: K::Elem,
    /// Product of basis elements x·y as (coefficient, basis index), at x·m² + y.
    table: Vec<(K::Elem, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolChecks {
    pub dimension: usize,
    pub i_power: bool,
    pub j_power: bool,
    pub commutation: bool,
    pub associative: bool,
}

impl SymbolChecks {
    pub fn all(&self) -> bool {
        self.i_power && self.j_power && self.commutation && self.associative
    }
}

pub fn build_symbol<K: ExactField>(
    field: &K,
    m: u64,
    a: &K::Elem,
    b: &K::Elem,
    zeta: &K::Elem,
) -> Result<SymbolAlgebra<K>> {
    if m == 0 {
        return Err(Error::OutOfRange("degree must be positive".into()));
    }
    if field.is_zero(a) || field.is_zero(b) {
        return Err(Error::ZeroSlot);
    }
    let ch = field.characteristic();
    if (ch != 0 && m.is_multiple_of(ch)) || !field.is_primitive_root(zeta, m) {
        return Err(Error::NotPrimitiveRoot(m));
    }
    let mu = m as usize;
    let d = mu * mu;
    let zeta_inv = field.pow(zeta, m - 1);
    let mut table = Vec::with_capacity(d * d);
    for x in 0..d {
        let (r, s) = (x / mu, x % mu);
        for y in 0..d {
            let (u, v) = (y / mu, y % mu);
            // (i^r j^s)(i^u j^v) = ζ^{-su} i^{r+u} j^{s+v}.
            let mut coef = field.pow(&zeta_inv, ((s * u) % mu) as u64);
            let (mut ri, mut sj) = (r + u, s + v);
            if ri >= mu {
                ri -= mu;
                coef = field.mul(&coef, a);
            }
            if sj >= mu {
                sj -= mu;
                coef = field.mul(&coef, b);
            }
            table.push((coef, ri * mu + sj));
        }
    }
    Ok(SymbolAlgebra {
        field: field.clone(),
        m,
        a: a.clone(),
        b: b.clone(),
        zeta: zeta.clone(),
        table,
    })
}

impl<K: ExactField> SymbolAlgebra<K> {
    pub fn dim(&self) -> usize {
        (self.m * self.m) as usize
    }

    pub fn zero(&self) -> Vec<K::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis(&self, idx: usize) -> Vec<K::Elem> {
        let mut v = self.zero();
        v[idx] = self.field.one();
        v
    }

    pub fn scalar(&self, c: &K::Elem) -> Vec<K::Elem> {
        let mut v = self.zero();
        v[0] = c.clone();
        v
    }

    /// The generator i; for m = 1 the algebra is K and i = a.
    pub fn i(&self) -> Vec<K::Elem> {
        if self.m == 1 {
            self.scalar(&self.a)
        } else {
            self.basis(self.m as usize)
        }
    }

    pub fn j(&self) -> Vec<K::Elem> {
        if self.m == 1 {
            self.scalar(&self.b)
        } else {
            self.basis(1)
        }
    }

    /// The structure constant entry for basis elements x, y.
    pub fn product_of_basis(&self, x: usize, y: usize) -> &(K::Elem, usize) {
        &self.table[x * self.dim() + y]
    }

    pub fn mul(&self, x: &[K::Elem], y: &[K::Elem]) -> Vec<K::Elem> {
        let f = &self.field;
        let mut out = self.zero();
        for (ix, cx) in x.iter().enumerate() {
            if f.is_zero(cx) {
                continue;
            }
            for (iy, cy) in y.iter().enumerate() {
                if f.is_zero(cy) {
                    continue;
                }
                let (c, z) = self.product_of_basis(ix, iy);
                out[*z] = f.add(&out[*z], &f.mul(&f.mul(cx, cy), c));
            }
        }
        out
    }

    pub fn add(&self, x: &[K::Elem], y: &[K::Elem]) -> Vec<K::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn scale(&self, c: &K::Elem, x: &[K::Elem]) -> Vec<K::Elem> {
        x.iter().map(|a| self.field.mul(c, a)).collect()
    }

    pub fn pow(&self, x: &[K::Elem], e: u64) -> Vec<K::Elem> {
        let mut acc = self.basis(0);
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// i^m = a, j^m = b, ij = ζji and associativity on all basis triples.
    pub fn verify(&self) -> SymbolChecks {
        let (i, j) = (self.i(), self.j());
        let d = self.dim();
        let ij = self.mul(&i, &j);
        let zji = self.scale(&self.zeta, &self.mul(&j, &i));
        let mut associative = true;
        'outer: for x in 0..d {
            for y in 0..d {
                let xy = self.product_of_basis(x, y);
                for z in 0..d {
                    let yz = self.product_of_basis(y, z);
                    let (c1, w1) = self.product_of_basis(xy.1, z);
                    let (c2, w2) = self.product_of_basis(x, yz.1);
                    let lhs = self.field.mul(&xy.0, c1);
                    let rhs = self.field.mul(&yz.0, c2);
                    if w1 != w2 || lhs != rhs {
                        associative = false;
                        break 'outer;
                    }
                }
            }
        }
        SymbolChecks {
            dimension: d,
            i_power: self.pow(&i, self.m) == self.scalar(&self.a),
            j_power: self.pow(&j, self.m) == self.scalar(&self.b),
            commutation: ij == zji,
            associative,
        }
    }

    /// The structure constants as JSON, field elements rendered as coefficient lists.
    pub fn dump(&self) -> Value {
        let f = &self.field;
        let d = self.dim();
        let entries: Vec<Value> = (0..d * d)
            .map(|t| {
                let (c, z) = &self.table[t];
                json!([t / d, t % d, f.render(c), z])
            })
            .collect();
        json!({
            "field": f.name(),
            "m": self.m,
            "a": f.render(&self.a),
            "b": f.render(&self.b),
            "zeta": f.render(&self.zeta),
            "basis": "i^r j^s at index r*m + s",
            "structure_constants": entries,
        })
    }
}

/// Rank of a list of vectors over K by Gaussian elimination.
pub fn rank<K: ExactField>(field: &K, rows: &[Vec<K::Elem>]) -> usize {
    let mut rows: Vec<Vec<K::Elem>> = rows.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = field.inv(&rows[rank][col]).expect("nonzero pivot");
        let pivot_row: Vec<K::Elem> = rows[rank].iter().map(|x| field.mul(x, &inv)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (c, x) in row.iter_mut().enumerate() {
                *x = field.sub(x, &field.mul(&factor, &pivot_row[c]));
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// The isomorphism (a^k, b; K)_{ζ^k} → (a, b; K)_ζ sending i ↦ i^k, j ↦ j.
#[derive(Clone, Debug)]
pub struct Relabeling<K: ExactField> {
    pub k: u64,
    pub source: SymbolAlgebra<K>,
    pub target: SymbolAlgebra<K>,
    /// Image in `source` of each basis element of `target`.
    pub images: Vec<Vec<K::Elem>>,
    pub unital: bool,
    pub homomorphism: bool,
    pub bijective: bool,
}

impl<K: ExactField> Relabeling<K> {
    pub fn verified(&self) -> bool {
        self.unital && self.homomorphism && self.bijective
    }

    pub fn apply(&self, x: &[K::Elem]) -> Vec<K::Elem> {
        let mut out = self.source.zero();
        for (idx, c) in x.iter().enumerate() {
            if !self.source.field.is_zero(c) {
                out = self
                    .source
                    .add(&out, &self.source.scale(c, &self.images[idx]));
            }
        }
        out
    }
}

pub fn relabel_iso<K: ExactField>(alg: &SymbolAlgebra<K>, k: i64) -> Result<Relabeling<K>> {
    let m = alg.m;
    if gcd(k.unsigned_abs(), m) != 1 {
        return Err(Error::NotCoprime { k, m });
    }
    let kr = k.rem_euclid(m as i64) as u64;
    let kr = if m == 1 { 1 } else { kr };
    let f = &alg.field;
    let target = build_symbol(f, m, &f.pow(&alg.a, kr), &alg.b, &f.pow(&alg.zeta, kr))?;
    let ik = alg.pow(&alg.i(), kr);
    let j = alg.j();
    let mu = m as usize;
    let images: Vec<Vec<K::Elem>> = (0..target.dim())
        .map(|x| {
            alg.mul(
                &alg.pow(&ik, (x / mu) as u64),
                &alg.pow(&j, (x % mu) as u64),
            )
        })
        .collect();
    let mut rel = Relabeling {
        k: kr,
        source: alg.clone(),
        target,
        images,
        unital: false,
        homomorphism: false,
        bijective: false,
    };
    rel.unital = rel.images[0] == alg.basis(0);
    let d = rel.target.dim();
    rel.homomorphism = (0..d).all(|x| {
        (0..d).all(|y| {
            let (c, z) = rel.target.product_of_basis(x, y);
            let lhs = rel.source.scale(c, &rel.images[*z]);
            lhs == rel.source.mul(&rel.images[x], &rel.images[y])
        })
    });
    rel.bijective = rank(f, &rel.images) == d;
    Ok(rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{CyclotomicField, FiniteField};

    #[test]
    fn q_zeta3_symbol() {
        let k = CyclotomicField::new(3).unwrap();
        let z = k.generator();
        let alg = build_symbol(&k, 3, &k.from_i64(2), &k.from_i64(3), &z).unwrap();
        assert_eq!(alg.dim(), 9);
        assert!(alg.verify().all());
        let rel = relabel_iso(&alg, 2).unwrap();
        assert!(rel.verified());
        assert_eq!(rel.target.a, k.from_i64(4));
        assert_eq!(rel.target.zeta, k.mul(&z, &z));
        assert!(relabel_iso(&alg, 1)
            .unwrap()
            .images
            .iter()
            .enumerate()
            .all(|(x, v)| *v == alg.basis(x)));
        assert_eq!(
            relabel_iso(&alg, 3).unwrap_err(),
            Error::NotCoprime { k: 3, m: 3 }
        );
    }

    #[test]
    fn f7_symbol() {
        let f = FiniteField::new(7, 1).unwrap();
        let alg = build_symbol(&f, 3, &f.from_i64(3), &f.from_i64(5), &f.from_i64(2)).unwrap();
        assert!(alg.verify().all());
        let rel = relabel_iso(&alg, 2).unwrap();
        assert!(rel.verified());
        assert_eq!(
            (rel.target.a.clone(), rel.target.zeta.clone()),
            (f.from_i64(2), f.from_i64(4))
        );
        assert_eq!(rel.target.b, f.from_i64(5));
    }

    #[test]
    fn degenerate_inputs() {
        let f = FiniteField::new(7, 1).unwrap();
        let one = f.one();
        let alg = build_symbol(&f, 1, &f.from_i64(3), &f.from_i64(5), &one).unwrap();
        assert_eq!(alg.dim(), 1);
        assert!(alg.verify().all());
        assert_eq!(
            build_symbol(&f, 3, &f.zero(), &one, &f.from_i64(2)).unwrap_err(),
            Error::ZeroSlot
        );
        assert_eq!(
            build_symbol(&f, 3, &one, &one, &f.from_i64(3)).unwrap_err(),
            Error::NotPrimitiveRoot(3)
        );
    }

    #[test]
    fn broken_table_fails_verification() {
        let f = FiniteField::new(7, 1).unwrap();
        let mut alg = build_symbol(&f, 3, &f.from_i64(3), &f.from_i64(5), &f.from_i64(2)).unwrap();
        alg.zeta = f.from_i64(4);
        assert!(!alg.verify().commutation);
    }
}
