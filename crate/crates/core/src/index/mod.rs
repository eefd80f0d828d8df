//! Indices, the space `I[t]` of their formal combinations, and the
//! index-level constructions built on contractions of adjacent parts.

mod bowman_bradley;
mod cyclic;
mod dual;
mod relations;
mod weighted;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combo::LinComb;
use crate::error::{Error, Result};
use crate::tpoly::TPoly;

pub use bowman_bradley::{bb_element, bb_plain, bb_t_coeff, tilde_shuffle, tilde_shuffle_indices, BBSpec};
pub use cyclic::{cyclic_index, cyclic_rotations};
pub use dual::{hoffman_dual, hoffman_dual_combo, ohno_sum, phi_index, phi_index_combo, OhnoVariant};
pub use relations::{cyclic_relation, cyclic_relation_plain, symmetric_sum_element};
pub use weighted::{plain_sum, weighted_element, WeightedKind};

/// A finite sequence of positive integers. The empty index is the unit of
/// the concatenation product.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Index(Vec<u32>);

pub type IndexCombo = LinComb<Index>;

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ParseIndex(format!("{parts:?}")));
        }
        Ok(Self(parts))
    }

    /// Builds an index from parts known to be positive.
    ///
    /// Panics on a zero part.
    pub fn of(parts: &[u32]) -> Self {
        assert!(parts.iter().all(|&k| k > 0), "index parts must be positive: {parts:?}");
        Self(parts.to_vec())
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `{k}^m`.
    pub fn repeated(k: u32, m: usize) -> Self {
        Self::of(&vec![k; m])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn measures(&self) -> (u32, usize) {
        (self.weight(), self.depth())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&k| k == 1)
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Index) -> Index {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Index(parts)
    }

    pub fn reversed(&self) -> Index {
        Index(self.0.iter().rev().copied().collect())
    }

    /// `(k_{s+1}, ..., k_r, k_1, ..., k_s)` for a zero-based start `s`.
    pub fn rotation(&self, s: usize) -> Index {
        let r = self.depth();
        Index((0..r).map(|i| self.0[(s + i) % r]).collect())
    }

    /// Index text: comma-separated parts, e.g. `1,2,3`; empty string for `()`.
    pub fn text(&self) -> String {
        self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }

    pub fn require_non_empty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyIndex)
        } else {
            Ok(())
        }
    }

    /// Every contraction of the `r - 1` boxes, paired with its number of pluses,
    /// in order of the plus-mask (bit `i` set means box `i` is a plus).
    pub fn contractions(&self) -> impl Iterator<Item = (Index, u32)> + '_ {
        let boxes = self.depth().saturating_sub(1);
        (0u64..(1u64 << boxes)).map(move |mask| (self.contract(mask), mask.count_ones()))
    }

    fn contract(&self, mask: u64) -> Index {
        let mut parts = Vec::with_capacity(self.depth());
        let mut acc = 0;
        for (i, &k) in self.0.iter().enumerate() {
            acc += k;
            if i + 1 == self.depth() || mask & (1 << i) == 0 {
                parts.push(acc);
                acc = 0;
            }
        }
        Index(parts)
    }
}

impl TryFrom<Vec<u32>> for Index {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Index::new(parts)
    }
}

impl From<Index> for Vec<u32> {
    fn from(k: Index) -> Self {
        k.0
    }
}

impl FromStr for Index {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Index::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParseIndex(s.to_string()))?;
        Index::new(parts).map_err(|_| Error::ParseIndex(s.to_string()))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.text())
    }
}

/// All compositions of `weight` into `depth` positive parts, lexicographic.
pub fn compositions(weight: u32, depth: usize) -> Vec<Index> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(depth);
    fn rec(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Index>) {
        if slots == 0 {
            if rest == 0 {
                out.push(Index(cur.clone()));
            }
            return;
        }
        if rest < slots as u32 {
            return;
        }
        let max = rest - (slots as u32 - 1);
        for k in 1..=max {
            cur.push(k);
            rec(rest - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    if depth == 0 {
        if weight == 0 {
            out.push(Index::empty());
        }
        return out;
    }
    rec(weight, depth, &mut cur, &mut out);
    out
}

/// Sequences of `depth` non-negative integers summing to `weight`, lexicographic.
pub fn weak_compositions(weight: u32, depth: usize) -> Vec<Vec<u32>> {
    compositions(weight + depth as u32, depth)
        .into_iter()
        .map(|k| k.0.into_iter().map(|p| p - 1).collect())
        .collect()
}

/// Non-empty indices with weight at most `max_weight` and depth at most
/// `max_depth`, ordered by weight, then depth, then lexicographically.
pub fn indices_up_to(max_weight: u32, max_depth: usize) -> Vec<Index> {
    let mut out = Vec::new();
    for w in 1..=max_weight {
        for d in 1..=max_depth.min(w as usize) {
            out.extend(compositions(w, d));
        }
    }
    out
}

/// `k^t`: the sum of all contractions weighted by `t^(number of pluses)`.
pub fn t_index(k: &Index) -> Result<IndexCombo> {
    k.require_non_empty()?;
    Ok(t_index_unchecked(k))
}

fn t_index_unchecked(k: &Index) -> IndexCombo {
    let mut out = IndexCombo::zero();
    for (c, pluses) in k.contractions() {
        out.add_term(c, &TPoly::t().pow(pluses));
    }
    out
}

/// Linear extension of the t-index to `I[t]`; the empty index is fixed.
pub fn t_index_combo(v: &IndexCombo) -> IndexCombo {
    v.map_linear(|k| {
        if k.is_empty() {
            IndexCombo::basis(Index::empty())
        } else {
            t_index_unchecked(k)
        }
    })
}

/// `k^t_m`: contractions with exactly `m` pluses. Zero for `m < 0` or `m >= depth`.
pub fn t_coeff(k: &Index, m: i64) -> IndexCombo {
    let mut out = IndexCombo::zero();
    if m < 0 || k.is_empty() {
        return out;
    }
    for (c, pluses) in k.contractions() {
        if i64::from(pluses) == m {
            out.add_int(c, 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ix(p: &[u32]) -> Index {
        Index::of(p)
    }

    #[test]
    fn measures() {
        assert_eq!(ix(&[2, 1, 3]).measures(), (6, 3));
        assert_eq!(Index::empty().measures(), (0, 0));
        assert_eq!(ix(&[1, 1, 1, 1]).measures(), (4, 4));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("1,2,3".parse::<Index>().unwrap(), ix(&[1, 2, 3]));
        assert_eq!("".parse::<Index>().unwrap(), Index::empty());
        assert!("1,0".parse::<Index>().is_err());
        assert!("1,a".parse::<Index>().is_err());
        assert_eq!(ix(&[1, 2]).text(), "1,2");
        assert_eq!(ix(&[1, 2]).to_string(), "(1,2)");
    }

    #[test]
    fn t_index_examples() {
        let t = TPoly::t();
        let mut want = IndexCombo::basis(ix(&[1, 1]));
        want.add_term(ix(&[2]), &t);
        assert_eq!(t_index(&ix(&[1, 1])).unwrap(), want);

        let mut want = IndexCombo::basis(ix(&[1, 1, 1]));
        want.add_term(ix(&[2, 1]), &t);
        want.add_term(ix(&[1, 2]), &t);
        want.add_term(ix(&[3]), &t.pow(2));
        assert_eq!(t_index(&ix(&[1, 1, 1])).unwrap(), want);

        let mut want = IndexCombo::basis(ix(&[2, 1]));
        want.add_term(ix(&[3]), &t);
        assert_eq!(t_index(&ix(&[2, 1])).unwrap(), want);

        assert_eq!(t_index(&Index::empty()), Err(Error::EmptyIndex));
    }

    #[test]
    fn t_coeff_examples() {
        let want: IndexCombo = [ix(&[2, 1]), ix(&[1, 2])].into_iter().collect();
        assert_eq!(t_coeff(&ix(&[1, 1, 1]), 1), want);
        assert_eq!(t_coeff(&ix(&[1, 1, 1]), 2), IndexCombo::basis(ix(&[3])));
        assert!(t_coeff(&ix(&[2, 1]), 5).is_zero());
        assert!(t_coeff(&ix(&[2, 1]), -1).is_zero());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let c = compositions(4, 2);
        assert_eq!(c, vec![ix(&[1, 3]), ix(&[2, 2]), ix(&[3, 1])]);
        assert_eq!(compositions(3, 4), Vec::<Index>::new());
        assert_eq!(weak_compositions(1, 2), vec![vec![0, 1], vec![1, 0]]);
        // 2^(w-1) compositions of each weight
        assert_eq!(indices_up_to(5, 5).len(), 1 + 2 + 4 + 8 + 16);
    }

    #[test]
    fn t_index_invariants() {
        for k in indices_up_to(8, 8) {
            let kt = t_index(&k).unwrap();
            assert_eq!(kt.specialize(&crate::tpoly::rat(0)), IndexCombo::basis(k.clone()));
            let top = kt.t_coeff(k.depth() - 1);
            assert_eq!(top, IndexCombo::basis(ix(&[k.weight()])));
            let mut sum = IndexCombo::zero();
            for m in 0..k.depth() {
                sum.add_scaled(&t_coeff(&k, m as i64), &TPoly::t().pow(m as u32));
            }
            assert_eq!(sum, kt);
            for (term, _) in &kt {
                assert_eq!(term.weight(), k.weight());
            }
        }
    }
}
