use super::{Index, IndexCombo};
use crate::error::{Error, Result};

/// `C_m(k)`: all fillings of the `r` cyclic boxes `(k_1 □ ... □ k_r □)` with
/// exactly `m` pluses. A plus in the trailing box merges `k_r` into the block
/// of `k_1`; that block always leads. Repeated monomials accumulate in the
/// coefficient.
pub fn cyclic_index(k: &Index, m: usize) -> Result<IndexCombo> {
    k.require_non_empty()?;
    let r = k.depth();
    if m >= r {
        return Err(Error::OutOfRange(format!(
            "cyclic index C_{m} needs m <= depth - 1 = {}",
            r - 1
        )));
    }
    let mut out = IndexCombo::zero();
    for mask in (0u64..(1u64 << r)).filter(|mask| mask.count_ones() as usize == m) {
        out.add_int(cyclic_contraction(k.parts(), mask), 1);
    }
    Ok(out)
}

/// Box `i` (after part `i`, zero-based) is a plus iff bit `i` of `mask` is set.
fn cyclic_contraction(parts: &[u32], mask: u64) -> Index {
    let r = parts.len();
    let plus = |i: usize| mask & (1 << i) != 0;
    // The last comma closes the block that wraps around to k_1.
    let last_comma = (0..r).rev().find(|&i| !plus(i)).expect("m < r leaves a comma");
    let start = (last_comma + 1) % r;
    let mut out = Vec::with_capacity(r);
    let mut acc = 0;
    for step in 0..r {
        let i = (start + step) % r;
        acc += parts[i];
        if !plus(i) {
            out.push(acc);
            acc = 0;
        }
    }
    Index(out)
}

/// The `r` cyclic rotations of `k`, starting with `k` itself.
pub fn cyclic_rotations(k: &Index) -> Vec<Index> {
    (0..k.depth()).map(|s| k.rotation(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::compositions;
    use crate::tpoly::TPoly;

    fn ix(p: &[u32]) -> Index {
        Index::of(p)
    }

    #[test]
    fn single_plus_three_parts() {
        // (k1+k2, k3) + (k1, k2+k3) + (k3+k1, k2) at (1,2,3)
        let want: IndexCombo = [ix(&[3, 3]), ix(&[1, 5]), ix(&[4, 2])].into_iter().collect();
        assert_eq!(cyclic_index(&ix(&[1, 2, 3]), 1).unwrap(), want);
    }

    #[test]
    fn two_pluses_three_parts_has_multiplicity() {
        assert_eq!(
            cyclic_index(&ix(&[1, 2, 3]), 2).unwrap(),
            IndexCombo::term(ix(&[6]), TPoly::int(3))
        );
    }

    #[test]
    fn all_commas_is_identity() {
        assert_eq!(cyclic_index(&ix(&[2, 1]), 0).unwrap(), IndexCombo::basis(ix(&[2, 1])));
    }

    #[test]
    fn range_errors() {
        assert!(cyclic_index(&ix(&[2, 1]), 2).is_err());
        assert_eq!(cyclic_index(&Index::empty(), 0), Err(Error::EmptyIndex));
    }

    #[test]
    fn wrap_rule_with_trailing_pluses() {
        let parts = [1, 2, 3, 4];
        // (k1 , k2 + k3 + k4 +): everything merges into one block
        assert_eq!(cyclic_contraction(&parts, 0b1110), ix(&[10]));
        // (k1 , k2 , k3 + k4 +): the block k3+k4+k1 leads
        assert_eq!(cyclic_contraction(&parts, 0b1100), ix(&[8, 2]));
        // (k1 + k2 , k3 , k4 +): k4+k1+k2 leads
        assert_eq!(cyclic_contraction(&parts, 0b1001), ix(&[7, 3]));
    }

    #[test]
    fn depth_weight_and_mass() {
        for w in 1..=8u32 {
            for d in 1..=(w as usize).min(6) {
                for k in compositions(w, d) {
                    for m in 0..d {
                        let c = cyclic_index(&k, m).unwrap();
                        let mut mass = TPoly::zero();
                        for (term, coeff) in &c {
                            assert_eq!(term.depth(), d - m);
                            assert_eq!(term.weight(), w);
                            mass += coeff;
                        }
                        assert_eq!(mass, TPoly::int(binom(d, m)));
                    }
                }
            }
        }
    }

    fn binom(n: usize, k: usize) -> i64 {
        (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
    }
}
