use serde::{Deserialize, Serialize};

use super::{t_index_combo, Index, IndexCombo};
use crate::error::{Error, Result};

/// The shuffle of two indices viewed as words in their parts.
pub fn tilde_shuffle_indices(a: &Index, b: &Index) -> IndexCombo {
    let (r, s) = (a.depth(), b.depth());
    let mut out = IndexCombo::zero();
    // each r-subset of the r+s slots receives the parts of `a` in order
    for mask in (0u64..(1u64 << (r + s))).filter(|m| m.count_ones() as usize == r) {
        let (mut i, mut j) = (0, 0);
        let mut parts = Vec::with_capacity(r + s);
        for slot in 0..r + s {
            if mask & (1 << slot) != 0 {
                parts.push(a.parts()[i]);
                i += 1;
            } else {
                parts.push(b.parts()[j]);
                j += 1;
            }
        }
        out.add_int(Index(parts), 1);
    }
    out
}

pub fn tilde_shuffle(u: &IndexCombo, v: &IndexCombo) -> IndexCombo {
    u.bilinear(v, tilde_shuffle_indices)
}

/// Data `(a_1..a_l; b_1..b_l; c_1..c_m)` with odd `a`, `b` and even `c`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BBSpec {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub c: Vec<u32>,
}

impl BBSpec {
    pub fn new(a: Vec<u32>, b: Vec<u32>, c: Vec<u32>) -> Result<Self> {
        let spec = Self { a, b, c };
        spec.validate()?;
        Ok(spec)
    }

    pub fn l(&self) -> usize {
        self.a.len()
    }

    pub fn m(&self) -> usize {
        self.c.len()
    }

    pub fn weight(&self) -> u32 {
        self.a.iter().chain(&self.b).chain(&self.c).sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.a.len() != self.b.len() {
            return Err(Error::InvalidBBSpec(format!(
                "a and b must have equal length, got {} and {}",
                self.a.len(),
                self.b.len()
            )));
        }
        if self.l() == 0 && self.m() == 0 {
            return Err(Error::InvalidBBSpec("(l, m) = (0, 0)".into()));
        }
        if let Some(x) = self.a.iter().chain(&self.b).find(|&&x| x % 2 == 0) {
            return Err(Error::InvalidBBSpec(format!("{x} in a or b is not odd")));
        }
        if let Some(x) = self.c.iter().find(|&&x| x == 0 || x % 2 == 1) {
            return Err(Error::InvalidBBSpec(format!("{x} in c is not a positive even integer")));
        }
        Ok(())
    }
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// `B_a`: the symmetrised alternating string of `a`s and `b`s, shuffled with
/// each one-part string `(c_j)`.
pub fn bb_plain(spec: &BBSpec) -> Result<IndexCombo> {
    spec.validate()?;
    let perms = permutations(spec.l());
    let mut strings = IndexCombo::zero();
    for sigma in &perms {
        for tau in &perms {
            let parts = sigma
                .iter()
                .zip(tau)
                .flat_map(|(&i, &j)| [spec.a[i], spec.b[j]])
                .collect();
            strings.add_int(Index(parts), 1);
        }
    }
    Ok(spec.c.iter().fold(strings, |acc, &c| {
        tilde_shuffle(&acc, &IndexCombo::basis(Index::of(&[c])))
    }))
}

/// `B_a^t`, the t-index of `B_a`.
pub fn bb_element(spec: &BBSpec) -> Result<IndexCombo> {
    Ok(t_index_combo(&bb_plain(spec)?))
}

/// `B^(n)_{l,m}[a]`, the coefficient of `t^n` in `B_a^t`.
pub fn bb_t_coeff(spec: &BBSpec, n: usize) -> Result<IndexCombo> {
    Ok(bb_element(spec)?.t_coeff(n))
}
