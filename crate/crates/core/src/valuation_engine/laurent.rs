//! Truncated elements of k((x_1))…((x_r)) with the valuation v(x_i) = e_i.

use super::value_group::{lex_cmp, lex_min, vec_add};
use crate::error::{Error, Result};
use crate::fields::ExactField;
use std::cmp::Ordering;

/// Terms per variable kept by default.
pub const DEFAULT_PRECISION: i64 = 24;

/// Finitely many terms c·x^a, all known terms lying strictly below the
/// precision vector in the right-to-left order; nothing is known above it.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentElement<K: ExactField> {
    pub rank: usize,
    /// Sorted increasingly, nonzero coefficients only.
    terms: Vec<(Vec<i64>, K::Elem)>,
    pub precision: Vec<i64>,
}

pub fn default_precision(rank: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    if let Some(last) = v.last_mut() {
        *last = DEFAULT_PRECISION;
    }
    v
}

impl<K: ExactField> LaurentElement<K> {
    pub fn zero(rank: usize, precision: Vec<i64>) -> Self {
        Self {
            rank,
            terms: Vec::new(),
            precision,
        }
    }

    pub fn from_terms(
        field: &K,
        rank: usize,
        terms: Vec<(Vec<i64>, K::Elem)>,
        precision: Vec<i64>,
    ) -> Result<Self> {
        if precision.len() != rank || terms.iter().any(|(e, _)| e.len() != rank) {
            return Err(Error::InvalidDescriptor(format!(
                "exponent vectors must have length {rank}"
            )));
        }
        let mut out = Self::zero(rank, precision);
        for (e, c) in terms {
            out.push_term(field, e, c);
        }
        Ok(out)
    }

    /// c·x^e at the default precision.
    pub fn monomial(field: &K, exps: &[i64], c: K::Elem) -> Self {
        let mut out = Self::zero(exps.len(), default_precision(exps.len()));
        out.push_term(field, exps.to_vec(), c);
        out
    }

    /// The constant c.
    pub fn constant(field: &K, rank: usize, c: K::Elem) -> Self {
        Self::monomial(field, &vec![0; rank], c)
    }

    fn push_term(&mut self, field: &K, e: Vec<i64>, c: K::Elem) {
        if lex_cmp(&e, &self.precision) != Ordering::Less {
            return;
        }
        match self.terms.binary_search_by(|(x, _)| lex_cmp(x, &e)) {
            Ok(i) => {
                let s = field.add(&self.terms[i].1, &c);
                if field.is_zero(&s) {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = s;
                }
            }
            Err(i) if !field.is_zero(&c) => self.terms.insert(i, (e, c)),
            Err(_) => {}
        }
    }

    pub fn terms(&self) -> &[(Vec<i64>, K::Elem)] {
        &self.terms
    }

    /// Zero as far as the precision reaches.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest known exponent, or the precision for an element known only to vanish.
    fn order(&self) -> Vec<i64> {
        self.terms
            .first()
            .map_or_else(|| self.precision.clone(), |(e, _)| e.clone())
    }

    pub fn add(&self, field: &K, other: &Self) -> Self {
        let mut out = Self::zero(self.rank, lex_min(&self.precision, &other.precision));
        for (e, c) in self.terms.iter().chain(&other.terms) {
            out.push_term(field, e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, field: &K) -> Self {
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), field.neg(c)))
                .collect(),
            precision: self.precision.clone(),
        }
    }

    pub fn sub(&self, field: &K, other: &Self) -> Self {
        self.add(field, &other.neg(field))
    }

    /// The product is known below min(v(a) + prec(b), v(b) + prec(a)).
    pub fn mul(&self, field: &K, other: &Self) -> Self {
        let precision = lex_min(
            &vec_add(&self.order(), &other.precision),
            &vec_add(&other.order(), &self.precision),
        );
        let mut out = Self::zero(self.rank, precision);
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                out.push_term(field, vec_add(e, f), field.mul(c, d));
            }
        }
        out
    }

    pub fn pow(&self, field: &K, e: u32) -> Self {
        if e == 0 {
            let mut one = Self::constant(field, self.rank, field.one());
            one.precision = self.precision.clone();
            return one;
        }
        (1..e).fold(self.clone(), |acc, _| acc.mul(field, self))
    }

    /// Multiplies by the monomial x^shift, moving the precision along.
    pub fn shift(&self, shift: &[i64]) -> Self {
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (vec_add(e, shift), c.clone()))
                .collect(),
            precision: vec_add(&self.precision, shift),
        }
    }

    pub fn render(&self, field: &K) -> String {
        if self.terms.is_empty() {
            return format!("O({:?})", self.precision);
        }
        let t: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{}*x^{e:?}", field.render(c)))
            .collect();
        format!("{} + O({:?})", t.join(" + "), self.precision)
    }
}

/// The lex-minimal exponent vector and its coefficient.
pub fn valuate<K: ExactField>(e: &LaurentElement<K>) -> Result<(Vec<i64>, K::Elem)> {
    e.terms.first().cloned().ok_or(Error::PrecisionExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FiniteField;

    #[test]
    fn spec_valuations() {
        let f = FiniteField::new(2, 2).unwrap();
        let one = f.one();
        let a = LaurentElement::monomial(&f, &[2, -1], one.clone())
            .add(&f, &LaurentElement::monomial(&f, &[5, -1], one.clone()));
        assert_eq!(valuate(&a).unwrap(), (vec![2, -1], one.clone()));
        let b = LaurentElement::monomial(&f, &[1, 0], one.clone())
            .add(&f, &LaurentElement::monomial(&f, &[0, 1], one.clone()));
        assert_eq!(valuate(&b).unwrap().0, vec![1, 0]);
        assert_eq!(
            valuate(&LaurentElement::<FiniteField>::zero(
                2,
                default_precision(2)
            )),
            Err(Error::PrecisionExhausted)
        );
    }

    #[test]
    fn cancellation_and_precision() {
        let f = FiniteField::new(3, 1).unwrap();
        let x = LaurentElement::monomial(&f, &[1, 0], f.one());
        let d = x.sub(&f, &x);
        assert!(d.is_zero());
        assert!(valuate(&d).is_err());
        let y_inv = LaurentElement::monomial(&f, &[0, -1], f.one());
        let z = y_inv.mul(&f, &x);
        assert_eq!(z.precision, vec![0, 23]);
        assert_eq!(valuate(&z).unwrap().0, vec![1, -1]);
        // Terms at or above the precision are dropped.
        let far = LaurentElement::monomial(&f, &[0, 30], f.one());
        assert!(far.is_zero());
    }

    #[test]
    fn shifting() {
        let f = FiniteField::new(5, 1).unwrap();
        let u = LaurentElement::constant(&f, 2, f.from_i64(3))
            .add(&f, &LaurentElement::monomial(&f, &[1, 0], f.one()));
        let s = u.shift(&[-3, 2]);
        assert_eq!(valuate(&s).unwrap(), (vec![-3, 2], f.from_i64(3)));
        assert_eq!(s.precision, vec![-3, 26]);
    }
}
