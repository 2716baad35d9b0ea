//! Sparse Laurent polynomials in the indeterminate `v`.

use std::collections::BTreeMap;
use std::fmt;

use super::{ArithError, Field, Rational, Ring};

/// Σ c_k v^k with no zero coefficient stored.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<F> {
    terms: BTreeMap<i32, F>,
}

impl<F: Ring> LaurentPoly<F> {
    pub fn monomial(c: F, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    /// v itself.
    pub fn v() -> Self {
        Self::monomial(F::one(), 1)
    }

    /// v − v⁻¹, the Hecke parameter.
    pub fn v_minus_vinv() -> Self {
        Self::v().sub(&Self::monomial(F::one(), -1))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i32, F)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    pub fn add_term(&mut self, k: i32, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                *x = x.add(c);
                if x.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn coeff(&self, k: i32) -> F {
        self.terms.get(&k).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &F)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, x)| (*k, x.mul(c))))
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> LaurentPoly<G> {
        LaurentPoly::from_terms(self.terms.iter().map(|(k, x)| (*k, f(x))))
    }
}

impl<F: Field> LaurentPoly<F> {
    /// Inverse of a unit c·v^k.
    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.terms.len() != 1 {
            return Err(ArithError::NonUnitLaurent);
        }
        let (k, c) = self.terms.iter().next().expect("one term");
        Ok(Self::monomial(c.inv()?, -k))
    }
}

impl<F: Ring> Ring for LaurentPoly<F> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    fn one() -> Self {
        Self::constant(F::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c);
        }
        r
    }

    fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, &c.neg());
        }
        r
    }

    fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                r.add_term(a + b, &x.mul(y));
            }
        }
        r
    }

    fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }

    fn from_rational(q: &Rational) -> Self {
        Self::constant(F::from_rational(q))
    }
}

impl<F: Ring + fmt::Display> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})v"),
                _ => format!("({c})v^{k}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<F: Ring> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type L = LaurentPoly<Rational>;

    #[test]
    fn difference_of_squares() {
        let v = L::v();
        let vi = L::monomial(Rational::one(), -1);
        let lhs = v.add(&vi).mul(&v.sub(&vi));
        let rhs = L::monomial(Rational::one(), 2).sub(&L::monomial(Rational::one(), -2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_terms_are_pruned() {
        let v = L::v();
        assert!(v.sub(&v).is_zero());
        assert_eq!(v.add(&v.neg()).terms().count(), 0);
    }

    #[test]
    fn unit_inverse() {
        let u = L::monomial(Rational::from_int(3), 2);
        assert_eq!(u.mul(&u.inv().unwrap()), L::one());
        assert_eq!(L::v().add(&L::one()).inv(), Err(ArithError::NonUnitLaurent));
        assert_eq!(L::zero().inv(), Err(ArithError::NonUnitLaurent));
    }

    #[test]
    fn hecke_quadratic_on_scalars() {
        // v and −v⁻¹ are the two roots of X² − (v − v⁻¹)X − 1.
        let z = L::v_minus_vinv();
        for t in [L::v(), L::monomial(Rational::from_int(-1), -1)] {
            assert!(t.mul(&t).sub(&z.mul(&t)).sub(&L::one()).is_zero());
        }
    }
}
