//! Subgroups of Q^r between Z^r and Z[1/p]^r, ordered right to left.

use crate::arith::{inv_mod, is_prime};
use crate::error::{Error, Result};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Right-to-left lexicographic comparison: the last coordinate dominates.
pub fn lex_cmp(a: &[i64], b: &[i64]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

pub fn lex_min(a: &[i64], b: &[i64]) -> Vec<i64> {
    if lex_cmp(a, b) == Ordering::Greater {
        b.to_vec()
    } else {
        a.to_vec()
    }
}

pub fn vec_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Z[1/p]^t × Z^{r−t} + ⟨w/p : w ∈ generators⟩ inside Q^r.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexValueGroup {
    pub rank: usize,
    pub p: u64,
    /// The first t coordinates are Z[1/p]-scaled.
    pub p_divisible_prefix: usize,
    /// Integer vectors w contributing w/p, kept in reduced echelon form mod p
    /// with zero prefix coordinates, so equal groups have equal generators.
    pub generators: Vec<Vec<i64>>,
}

impl LexValueGroup {
    pub fn lattice(rank: usize, p: u64) -> Result<Self> {
        Self::with_prefix(rank, p, 0)
    }

    pub fn with_prefix(rank: usize, p: u64, t: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidDescriptor(format!("{p} is not prime")));
        }
        if t > rank {
            return Err(Error::InvalidDescriptor(format!(
                "prefix {t} exceeds rank {rank}"
            )));
        }
        Ok(Self {
            rank,
            p,
            p_divisible_prefix: t,
            generators: Vec::new(),
        })
    }

    /// The group generated by this one and w/p.
    pub fn adjoin(&self, w: &[i64]) -> Self {
        let mut g = self.clone();
        if self.contains_over_p(w) {
            return g;
        }
        let t = self.p_divisible_prefix;
        let rows: Vec<Vec<u64>> = self
            .generators
            .iter()
            .map(|v| self.coarse(v))
            .chain([self.coarse(w)])
            .collect();
        g.generators = rref_mod_p(rows, self.p)
            .into_iter()
            .map(|row| {
                std::iter::repeat_n(0, t)
                    .chain(row.into_iter().map(|x| x as i64))
                    .collect()
            })
            .collect();
        g
    }

    fn coarse(&self, w: &[i64]) -> Vec<u64> {
        w[self.p_divisible_prefix..]
            .iter()
            .map(|x| x.rem_euclid(self.p as i64) as u64)
            .collect()
    }

    /// Rank over F_p of the generators modulo p on the coarse coordinates.
    fn generator_rank(&self, extra: Option<&[u64]>) -> usize {
        let rows: Vec<Vec<u64>> = self
            .generators
            .iter()
            .map(|w| self.coarse(w))
            .chain(extra.map(<[u64]>::to_vec))
            .collect();
        rank_mod_p(rows, self.p)
    }

    /// Whether w/p lies in the group, for w ∈ Z^r.
    fn contains_over_p(&self, w: &[i64]) -> bool {
        let v = self.coarse(w);
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        self.generator_rank(Some(&v)) == self.generator_rank(None)
    }

    /// Membership of a rational vector.
    pub fn contains(&self, v: &[Rational64]) -> bool {
        if v.len() != self.rank {
            return false;
        }
        let p = self.p as i64;
        for x in &v[..self.p_divisible_prefix] {
            let mut d = *x.denom();
            while d % p == 0 {
                d /= p;
            }
            if d != 1 {
                return false;
            }
        }
        // Elements of the coarse part have denominators dividing p.
        let mut w = vec![0i64; self.rank];
        for (i, x) in v.iter().enumerate().skip(self.p_divisible_prefix) {
            let scaled = *x * Rational64::from_integer(p);
            if !scaled.is_integer() {
                return false;
            }
            w[i] = scaled.to_integer();
        }
        self.contains_over_p(&w)
    }

    /// [Γ : Z^r] when no coordinate is Z[1/p]-scaled.
    pub fn index_over_lattice(&self) -> Option<u64> {
        (self.p_divisible_prefix == 0).then(|| self.p.pow(self.generator_rank(None) as u32))
    }

    /// Dimension over F_p of Γ/pΓ; the divisible coordinates contribute nothing.
    pub fn mod_p_dimension(&self) -> usize {
        self.rank - self.p_divisible_prefix
    }

    pub fn render(&self) -> String {
        let p = self.p as i64;
        let coord = |x: i64| {
            if x % p == 0 {
                (x / p).to_string()
            } else {
                format!("{x}/{p}")
            }
        };
        let base = if self.p_divisible_prefix == 0 {
            if self.generators.is_empty() {
                return vec!["Z"; self.rank].join("x");
            }
            format!("Z^{}", self.rank)
        } else {
            (0..self.rank)
                .map(|i| {
                    if i < self.p_divisible_prefix {
                        format!("Z[1/{p}]")
                    } else {
                        "Z".into()
                    }
                })
                .collect::<Vec<_>>()
                .join("x")
        };
        if self.generators.is_empty() {
            return base;
        }
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|w| {
                format!(
                    "({})",
                    w.iter().map(|&x| coord(x)).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        format!("<{}>+{base}", gens.join(","))
    }
}

pub(crate) fn rank_mod_p(rows: Vec<Vec<u64>>, p: u64) -> usize {
    rref_mod_p(rows, p).len()
}

/// Nonzero rows of the reduced row echelon form over F_p.
fn rref_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    for row in rows.iter_mut() {
        for x in row.iter_mut() {
            *x %= p;
        }
    }
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col] % p, p).expect("nonzero pivot mod p");
        let pivot: Vec<u64> = rows[rank].iter().map(|x| x * inv % p).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] % p != 0 {
                let f = row[col] % p;
                for (c, x) in row.iter_mut().enumerate() {
                    *x = (*x + p * p - f * pivot[c] % p) % p;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn ordering_is_right_to_left() {
        assert_eq!(lex_cmp(&[1, 0], &[0, 1]), Ordering::Less);
        assert_eq!(lex_cmp(&[5, -1], &[0, 0]), Ordering::Less);
        assert_eq!(lex_min(&[2, 3], &[7, 2]), vec![7, 2]);
    }

    #[test]
    fn type1_group() {
        let g = LexValueGroup::lattice(2, 3)
            .unwrap()
            .adjoin(&[1, 0])
            .adjoin(&[0, 1]);
        assert_eq!(g.render(), "<(1/3,0),(0,1/3)>+Z^2");
        assert_eq!(g.index_over_lattice(), Some(9));
        assert!(g.contains(&[q(2, 3), q(-1, 3)]));
        assert!(!g.contains(&[q(1, 9), q(0, 1)]));
        // Adjoining a dependent vector changes nothing.
        assert_eq!(g.adjoin(&[1, 1]), g);
        let h = LexValueGroup::lattice(2, 3)
            .unwrap()
            .adjoin(&[1, 0])
            .adjoin(&[3, 1]);
        assert_eq!(h, g);
    }

    #[test]
    fn divisible_prefix() {
        let g = LexValueGroup::with_prefix(2, 5, 1).unwrap();
        assert_eq!(g.render(), "Z[1/5]xZ");
        assert!(g.contains(&[q(1, 125), q(3, 1)]));
        assert!(!g.contains(&[q(1, 2), q(0, 1)]));
        assert!(!g.contains(&[q(0, 1), q(1, 5)]));
        assert_eq!(g.mod_p_dimension(), 1);
        assert_eq!(g.index_over_lattice(), None);
        assert_eq!(LexValueGroup::lattice(2, 5).unwrap().render(), "ZxZ");
    }
}
