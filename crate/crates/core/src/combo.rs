//! Formal finite sums with `Q[t]` coefficients over an ordered basis.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::tpoly::{rat, Rational, TPoly};

/// A canonical linear combination: no basis element carries a zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, TPoly>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, TPoly::one())
    }

    pub fn term(key: K, coeff: TPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(key, &coeff);
        out
    }

    pub fn add_term(&mut self, key: K, coeff: &TPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds an integer multiple of a single basis element.
    pub fn add_int(&mut self, key: K, c: i64) {
        if c != 0 {
            self.add_term(key, &TPoly::int(c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> TPoly {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, TPoly> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &TPoly) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        self.scale(&TPoly::constant(c.clone()))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale_rat(&rat(c))
    }

    /// Largest `t`-degree among the coefficients.
    pub fn t_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(TPoly::degree).max()
    }

    /// The coefficient of `t^n`, as a combination with constant coefficients.
    pub fn t_coeff(&self, n: usize) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &TPoly::constant(v.coeff(n)));
        }
        out
    }

    /// Evaluates every coefficient at `t = x`.
    pub fn specialize(&self, x: &Rational) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &TPoly::constant(v.eval(x)));
        }
        out
    }

    /// Linear extension of `f` over `Q[t]`.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, v) in &self.terms {
            out.add_scaled(&f(k), v);
        }
        out
    }

    /// Fallible variant of [`LinComb::map_linear`].
    pub fn try_map_linear<K2: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<K2>, E>,
    ) -> Result<LinComb<K2>, E> {
        let mut out = LinComb::zero();
        for (k, v) in &self.terms {
            out.add_scaled(&f(k)?, v);
        }
        Ok(out)
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &TPoly) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_constant() && c.coeff(0) == rat(1);
        for (k, v) in &other.terms {
            if unit {
                self.add_term(k.clone(), v);
            } else {
                self.add_term(k.clone(), &(v * c));
            }
        }
    }

    /// Bilinear extension of `f` over `Q[t]`.
    pub fn bilinear(&self, rhs: &Self, mut f: impl FnMut(&K, &K) -> Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_scaled(&f(a, b), &(ca * cb));
            }
        }
        out
    }

    pub fn try_bilinear<E>(
        &self,
        rhs: &Self,
        mut f: impl FnMut(&K, &K) -> Result<Self, E>,
    ) -> Result<Self, E> {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_scaled(&f(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(K, TPoly)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, TPoly)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, &c);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<K> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        let one = TPoly::one();
        let mut out = Self::zero();
        for k in iter {
            out.add_term(k, &one);
        }
        out
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a TPoly);
    type IntoIter = btree_map::Iter<'a, K, TPoly>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v);
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), &-v);
        }
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl<K: Ord + Clone> Mul<&TPoly> for &LinComb<K> {
    type Output = LinComb<K>;
    fn mul(self, rhs: &TPoly) -> LinComb<K> {
        self.scale(rhs)
    }
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *v == TPoly::one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "({v})*{k}")?;
            }
        }
        Ok(())
    }
}
