use super::bowman_bradley::permutations;
use super::{t_index, Index, IndexCombo};
use crate::error::{Error, Result};
use crate::tpoly::TPoly;

/// `(k_{l+1}, ..., k_r, k_1, ..., k_{l-1})` for one-based `l`.
fn others(k: &Index, l: usize) -> Vec<u32> {
    let mut v = k.rotation(l % k.depth()).into_parts();
    v.pop();
    v
}

/// `(k_{l+1}, ..., k_r, k_1, ..., k_l)` for one-based `l`.
fn rotated_from(k: &Index, l: usize) -> Vec<u32> {
    k.rotation(l % k.depth()).into_parts()
}

fn cyclic_relation_with(k: &Index, interpolated: bool) -> Result<IndexCombo> {
    k.require_non_empty()?;
    if k.is_all_ones() {
        return Err(Error::AllOnes { index: k.to_string() });
    }
    let lift = |parts: Vec<u32>| -> IndexCombo {
        let idx = Index(parts);
        if interpolated {
            t_index(&idx).expect("non-empty")
        } else {
            IndexCombo::basis(idx)
        }
    };
    let one_minus_t = if interpolated { TPoly::linear(1, -1) } else { TPoly::one() };
    let r = k.depth();
    let mut out = IndexCombo::zero();
    for l in 1..=r {
        let kl = k.parts()[l - 1];
        let mid = others(k, l);
        for j in 1..kl {
            let mut parts = vec![j];
            parts.extend_from_slice(&mid);
            parts.push(kl + 1 - j);
            out += &lift(parts);
        }
        let mut first = mid.clone();
        first.push(kl + 1);
        let mut second = rotated_from(k, l);
        second[0] += 1;
        let mut rhs = lift(first);
        rhs += &lift(second);
        out.add_scaled(&rhs, &-&one_minus_t);
        let mut third = vec![1];
        third.extend(rotated_from(k, l));
        out -= &lift(third);
    }
    Ok(out)
}

/// `F^t(k)`: left side minus right side of the interpolated cyclic sum
/// relation, built from t-indices.
pub fn cyclic_relation(k: &Index) -> Result<IndexCombo> {
    cyclic_relation_with(k, true)
}

/// `F^0(k)`: the same element with every t-index replaced by the plain index.
pub fn cyclic_relation_plain(k: &Index) -> Result<IndexCombo> {
    cyclic_relation_with(k, false)
}

/// `sum over sigma in S_r of (k_sigma(1), ..., k_sigma(r))`, with multiplicity.
pub fn symmetric_sum_element(k: &Index) -> Result<IndexCombo> {
    k.require_non_empty()?;
    let mut out = IndexCombo::zero();
    for sigma in permutations(k.depth()) {
        out.add_int(Index(sigma.iter().map(|&i| k.parts()[i]).collect()), 1);
    }
    Ok(out)
}
