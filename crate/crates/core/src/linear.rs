use std::collections::btree_map::{self, BTreeMap};

use crate::scalar::Scalar;

/// A finitely supported map `K → Scalar`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: Scalar) -> Self {
        let mut out = Self::new();
        out.add_term(key, coeff);
        out
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<K>, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in other.iter() {
            self.add_term(k.clone(), if factor.is_one() { c.clone() } else { c * factor });
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> LinComb<K> {
        let mut out = LinComb::new();
        out.add_scaled(self, factor);
        out
    }

    pub fn neg(&self) -> LinComb<K> {
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn plus(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn minus(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies `f` to every coefficient, dropping results that vanish.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> LinComb<K> {
        let mut out = LinComb::new();
        for (k, c) in self.iter() {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    /// Linear extension of `key ↦ image(key)`.
    pub fn map_linear<K2: Ord + Clone>(&self, mut image: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::new();
        for (k, c) in self.iter() {
            out.add_scaled(&image(k), c);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = LinComb::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros_are_dropped() {
        let mut a: LinComb<u32> = LinComb::new();
        a.add_term(1, Scalar::q());
        a.add_term(2, Scalar::zero());
        assert_eq!(a.len(), 1);
        a.add_term(1, Scalar::neg_q());
        assert!(a.is_empty());
    }

    #[test]
    fn map_linear_merges_keys() {
        let a: LinComb<u32> = [(1, Scalar::one()), (2, Scalar::q())].into_iter().collect();
        let b = a.map_linear(|_| LinComb::single(0u32, Scalar::one()));
        assert_eq!(b.coeff(&0), Scalar::r());
    }
}
