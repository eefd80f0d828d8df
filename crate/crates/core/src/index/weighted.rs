use serde::{Deserialize, Serialize};

use super::{compositions, ohno_sum, t_index, Index, IndexCombo, OhnoVariant};
use crate::arith::{binomial, pow2};
use crate::error::{Error, Result};
use crate::tpoly::TPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightedKind {
    /// `F^t(k, r) = sum 2^(k_r - 1) (k_1, ..., k_r)^t`
    Ft,
    /// coefficient of `t^n` in `F^t(k, r)`
    F,
    /// `-C(k-r+n, n) S(k, r-n)`
    Sprime,
    G1prime,
    G2prime,
    /// `F + S' + G'_1 - G'_2`
    H,
}

/// `S(k, r)`: the sum of all compositions of `k` of depth `r`.
pub fn plain_sum(k: u32, r: usize) -> Result<IndexCombo> {
    if r == 0 || r as u32 > k {
        return Err(Error::OutOfRange(format!("S(k, r) needs 1 <= r <= k, got k={k}, r={r}")));
    }
    Ok(compositions(k, r).into_iter().collect())
}

fn ft(k: u32, r: usize) -> IndexCombo {
    let mut out = IndexCombo::zero();
    for comp in compositions(k, r) {
        let w = pow2(comp.last().expect("r >= 1") - 1);
        out.add_scaled(&t_index(&comp).expect("non-empty"), &TPoly::int(w));
    }
    out
}

fn g_prime(k: u32, r: usize, n: usize, variant: OhnoVariant) -> IndexCombo {
    let mut out = IndexCombo::zero();
    let (k_i, r_i, n_i) = (i64::from(k), r as i64, n as i64);
    for m in 0..(k_i - r_i).max(0) {
        let coeff = -pow2((k_i - r_i - m - 1) as u32) * binomial(m + n_i, n_i);
        let mut parts = vec![1u32; r - n - 1];
        parts.push((k_i - r_i - m + 1) as u32);
        let g = ohno_sum(&Index::of(&parts), (m + n_i) as u32, variant).expect("non-empty");
        out.add_scaled(&g, &TPoly::int(coeff));
    }
    out
}

/// The elements entering the weighted sum relation, for `1 <= r <= k` and
/// `n <= r - 1` (`n` is ignored for [`WeightedKind::Ft`]).
pub fn weighted_element(k: u32, r: usize, n: usize, kind: WeightedKind) -> Result<IndexCombo> {
    if r == 0 || r as u32 > k {
        return Err(Error::OutOfRange(format!("need 1 <= r <= k, got k={k}, r={r}")));
    }
    if kind != WeightedKind::Ft && n >= r {
        return Err(Error::OutOfRange(format!("need n <= r - 1, got r={r}, n={n}")));
    }
    let binom_krn = binomial(i64::from(k) - r as i64 + n as i64, n as i64);
    Ok(match kind {
        WeightedKind::Ft => ft(k, r),
        WeightedKind::F => ft(k, r).t_coeff(n),
        WeightedKind::Sprime => plain_sum(k, r - n)?.scale_int(-binom_krn),
        WeightedKind::G1prime => g_prime(k, r, n, OhnoVariant::G1),
        WeightedKind::G2prime => g_prime(k, r, n, OhnoVariant::G2),
        WeightedKind::H => {
            let mut h = ft(k, r).t_coeff(n);
            h += &plain_sum(k, r - n)?.scale_int(-binom_krn);
            h += &g_prime(k, r, n, OhnoVariant::G1);
            h -= &g_prime(k, r, n, OhnoVariant::G2);
            h
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::{phi_index_combo, t_index_combo};

    fn ix(p: &[u32]) -> Index {
        Index::of(p)
    }

    #[test]
    fn ft_small() {
        // 2 (1,2)^t + (2,1)^t = 2(1,2) + (2,1) + 3t(3)
        let mut want: IndexCombo = [ix(&[2, 1])].into_iter().collect();
        want.add_int(ix(&[1, 2]), 2);
        want.add_term(ix(&[3]), &TPoly::linear(0, 3));
        assert_eq!(weighted_element(3, 2, 0, WeightedKind::Ft).unwrap(), want);
        let direct = t_index_combo(&{
            let mut v = IndexCombo::basis(ix(&[2, 1]));
            v.add_int(ix(&[1, 2]), 2);
            v
        });
        assert_eq!(direct, want);
    }

    #[test]
    fn f_is_constant_part_at_n0() {
        let ft = weighted_element(4, 2, 0, WeightedKind::Ft).unwrap();
        let f = weighted_element(4, 2, 0, WeightedKind::F).unwrap();
        assert_eq!(f, ft.t_coeff(0));
    }

    #[test]
    fn key_relation_at_4_3_0() {
        let h = weighted_element(4, 3, 0, WeightedKind::H).unwrap();
        let lhs = &h + &phi_index_combo(&h);
        let want = IndexCombo::term(Index::repeated(1, 4), TPoly::int(-1));
        assert_eq!(lhs, want);
    }

    #[test]
    fn range_checks() {
        assert!(weighted_element(3, 4, 0, WeightedKind::F).is_err());
        assert!(weighted_element(3, 2, 2, WeightedKind::F).is_err());
        assert!(weighted_element(3, 0, 0, WeightedKind::Ft).is_err());
        assert!(plain_sum(2, 3).is_err());
    }
}
