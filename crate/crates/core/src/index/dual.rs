use super::{compositions, weak_compositions, Index, IndexCombo};
use crate::error::Result;

/// Hoffman dual: write `k` as `wt(k)` ones joined by pluses (inside a part)
/// and commas (between parts), then swap the two symbols.
pub fn hoffman_dual(k: &Index) -> Result<Index> {
    k.require_non_empty()?;
    let w = k.weight() as usize;
    // boundary[g] is true when the gap after the (g+1)-th one is a comma
    let mut boundary = vec![false; w - 1];
    let mut pos = 0usize;
    for &part in &k.parts()[..k.depth() - 1] {
        pos += part as usize;
        boundary[pos - 1] = true;
    }
    let mut parts = Vec::new();
    let mut run = 1u32;
    for comma in boundary {
        // after swapping, a former comma is a plus
        if comma {
            run += 1;
        } else {
            parts.push(run);
            run = 1;
        }
    }
    parts.push(run);
    Ok(Index(parts))
}

/// Linear extension of the Hoffman dual; the empty index is fixed.
pub fn hoffman_dual_combo(v: &IndexCombo) -> IndexCombo {
    v.map_linear(|k| {
        IndexCombo::basis(if k.is_empty() {
            Index::empty()
        } else {
            hoffman_dual(k).expect("non-empty")
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum OhnoVariant {
    G1,
    G2,
    G,
}

fn add_componentwise(k: &Index, e: &[u32]) -> Index {
    Index(k.parts().iter().zip(e).map(|(a, b)| a + b).collect())
}

/// The Ohno-type sums `G_1(k, m)`, `G_2(k, m)` and `G = G_1 - G_2`.
pub fn ohno_sum(k: &Index, m: u32, variant: OhnoVariant) -> Result<IndexCombo> {
    k.require_non_empty()?;
    let g1 = || -> IndexCombo {
        weak_compositions(m, k.depth())
            .iter()
            .map(|e| add_componentwise(k, e))
            .collect()
    };
    let g2 = || -> Result<IndexCombo> {
        let dual = hoffman_dual(k)?;
        weak_compositions(m, dual.depth())
            .iter()
            .map(|e| hoffman_dual(&add_componentwise(&dual, e)))
            .collect()
    };
    Ok(match variant {
        OhnoVariant::G1 => g1(),
        OhnoVariant::G2 => g2()?,
        OhnoVariant::G => &g1() - &g2()?,
    })
}

/// `phi(k) = (-1)^dep(k)` times the sum of all refinements of `k`, each part
/// replaced by every composition of it.
pub fn phi_index(k: &Index) -> IndexCombo {
    let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
    for &part in k.parts() {
        let pieces: Vec<Index> = (1..=part as usize)
            .flat_map(|d| compositions(part, d))
            .collect();
        acc = acc
            .iter()
            .flat_map(|prefix| {
                pieces.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(p.parts());
                    v
                })
            })
            .collect();
    }
    let sign = if k.depth().is_multiple_of(2) { 1 } else { -1 };
    let mut out = IndexCombo::zero();
    for parts in acc {
        out.add_int(Index(parts), sign);
    }
    out
}

pub fn phi_index_combo(v: &IndexCombo) -> IndexCombo {
    v.map_linear(phi_index)
}
