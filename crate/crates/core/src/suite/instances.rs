use super::{descriptor, Bounds, Instance, Params};
use crate::error::Result;
use crate::index::{indices_up_to, BBSpec, Index};
use crate::word::{index_to_word, Letter, Word};

fn inst(id: &str, params: Params) -> Instance {
    Instance {
        theorem: id.to_string(),
        params,
    }
}

/// All words of length `1..=max_len` starting with `y`, by length then lexicographically.
pub(super) fn y_words(max_len: u32) -> Vec<Word> {
    let mut out = Vec::new();
    for len in 1..=max_len as usize {
        for bits in 0u64..(1 << (len - 1)) {
            let mut letters = vec![Letter::Y];
            // most significant bit first so that x < y orders the output
            letters.extend((0..len - 1).rev().map(|i| {
                if bits >> i & 1 == 1 {
                    Letter::Y
                } else {
                    Letter::X
                }
            }));
            out.push(Word::from_letters(letters));
        }
    }
    out
}

fn yhx_words(max_len: u32) -> Vec<Word> {
    y_words(max_len).into_iter().filter(Word::in_yhx).collect()
}

fn index_pairs(max_weight: u32, max_depth: usize, ordered: bool) -> Vec<Params> {
    let ks = indices_up_to(max_weight, max_depth);
    let mut out = Vec::new();
    for (i, a) in ks.iter().enumerate() {
        let start = if ordered { 0 } else { i };
        for b in &ks[start..] {
            if a.weight() + b.weight() <= max_weight {
                out.push(Params::IndexPair { a: a.clone(), b: b.clone() });
            }
        }
    }
    out
}

/// Non-decreasing sequences of length `len` drawn from `values`.
fn multisets(values: &[u32], len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        for mut rest in multisets(&values[i..], len - 1) {
            rest.insert(0, v);
            out.push(rest);
        }
    }
    out
}

fn bb_specs(bounds: &Bounds) -> Vec<BBSpec> {
    let odd: Vec<u32> = (1..=bounds.bb_max_part).filter(|x| x % 2 == 1).collect();
    let even: Vec<u32> = (1..=bounds.bb_max_part).filter(|x| x % 2 == 0).collect();
    let mut out = Vec::new();
    for size in 1..=bounds.bb_max_size {
        for l in 0..=size / 2 {
            let m = size - 2 * l;
            for a in multisets(&odd, l) {
                for b in multisets(&odd, l) {
                    for c in multisets(&even, m) {
                        out.push(BBSpec { a: a.clone(), b: b.clone(), c });
                    }
                }
            }
        }
    }
    out
}

fn weight_depth(max_k: u32, max_r: usize, min_k: u32, odd_r: bool) -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    for k in min_k..=max_k {
        for r in 1..=(k as usize).min(max_r) {
            if !odd_r || r % 2 == 1 {
                out.push((k, r));
            }
        }
    }
    out
}

fn weighted_levels(max_k: u32, odd_r: bool) -> Vec<Params> {
    weight_depth(max_k, max_k as usize, 1, odd_r)
        .into_iter()
        .flat_map(|(k, r)| (0..r).map(move |n| Params::WeightDepthLevel { k, r, n }))
        .collect()
}

fn cyclic_levels(max_weight: u32) -> Vec<Params> {
    indices_up_to(max_weight, max_weight as usize)
        .into_iter()
        .filter(|k| !k.is_empty() && !k.is_all_ones())
        .flat_map(|k| (0..k.depth() as u32).map(move |m| Params::IndexLevel { k: k.clone(), m }))
        .collect()
}

/// Deterministic enumeration of the instances of `id` within `bounds`.
pub fn instances(id: &str, bounds: &Bounds) -> Result<Vec<Instance>> {
    let id = descriptor(id)?.id;
    let (w, d) = (bounds.max_weight, bounds.max_depth);
    let nonempty = || indices_up_to(w, d).into_iter().filter(|k| !k.is_empty());
    let pw = bounds.pair_weight;
    let params: Vec<Params> = match id {
        "sum-formula" => weight_depth(w, d, 2, false)
            .into_iter()
            .map(|(k, r)| Params::WeightDepth { k, r })
            .collect(),
        "weighted-sum" => weight_depth(w, d, 1, true)
            .into_iter()
            .map(|(k, r)| Params::WeightDepth { k, r })
            .collect(),
        "plain-sum" => weight_depth(w, d, 1, false)
            .into_iter()
            .map(|(k, r)| Params::WeightDepth { k, r })
            .collect(),
        "cyclic-sum" => nonempty()
            .filter(|k| !k.is_all_ones())
            .map(|k| Params::Index { k })
            .collect(),
        "bowman-bradley" => bb_specs(bounds).into_iter().map(|spec| Params::Bb { spec }).collect(),
        "symmetric-sum" => nonempty()
            .filter(|k| k.parts().windows(2).all(|p| p[0] <= p[1]))
            .map(|k| Params::Index { k })
            .collect(),
        "duality-star" => nonempty().map(|k| Params::Index { k }).collect(),
        "hoffman" => nonempty()
            .filter(|k| k.last() >= Some(2))
            .map(|k| Params::Index { k })
            .collect(),
        "ohno-type" => nonempty()
            .flat_map(|k| (1..=w - k.weight()).map(move |m| Params::IndexLevel { k: k.clone(), m }))
            .collect(),
        "harmonic" | "t-harmonic" => index_pairs(pw, d, false)
            .into_iter()
            .filter(|p| matches!(p, Params::IndexPair { a, b } if !a.is_empty() && !b.is_empty()))
            .collect(),
        "antipode" | "reversal" => indices_up_to(pw, pw as usize)
            .into_iter()
            .filter(|k| !k.is_empty())
            .map(|k| Params::Index { k })
            .collect(),
        "transport" => indices_up_to(pw, pw as usize)
            .into_iter()
            .filter(|k| !k.is_empty())
            .map(|k| Params::Word { w: index_to_word(&k) })
            .collect(),
        "t-shuffle" => {
            let mut firsts = vec![Word::empty()];
            firsts.extend(y_words(pw));
            let mut out = Vec::new();
            for w1 in &firsts {
                for w2 in y_words(pw) {
                    if w1.len() + w2.len() <= pw as usize {
                        out.push(Params::WordPair { w1: w1.clone(), w2 });
                    }
                }
            }
            out
        }
        "duality-phi" | "duality-t" => std::iter::once(Word::empty())
            .chain(yhx_words(bounds.word_weight))
            .map(|w| Params::Word { w })
            .collect(),
        "derivation" => yhx_words(bounds.word_weight)
            .into_iter()
            .flat_map(|w| (1..=bounds.derivation_max_l).map(move |l| Params::WordOrder { w: w.clone(), l }))
            .collect(),
        "lemma-cyclic" | "prop-cyclic-coeff" => cyclic_levels(bounds.symbolic_cyclic_weight),
        "keyprop-bb" => bb_specs(bounds)
            .into_iter()
            .flat_map(|spec| {
                let top = 2 * spec.l() + spec.m();
                (0..top.saturating_sub(1)).map(move |n| Params::BbLevel { spec: spec.clone(), n })
            })
            .collect(),
        "lemma-F-closed" | "lemma-FSG1" => weighted_levels(bounds.symbolic_weighted_k, false),
        "lemma-G2phi" | "keyprop-weighted" => weighted_levels(bounds.symbolic_weighted_k, true),
        "lemma-Snu" => indices_up_to(bounds.symbolic_word_weight, bounds.symbolic_word_weight as usize)
            .into_iter()
            .map(|k| Params::Word { w: index_to_word(&k) })
            .collect(),
        "lemma-prodSt" => {
            let sw = bounds.symbolic_word_weight;
            let ks: Vec<Index> = indices_up_to(sw, sw as usize);
            let mut out = Vec::new();
            for a in &ks {
                for b in ks.iter().filter(|b| !b.is_empty()) {
                    if a.weight() + b.weight() <= sw {
                        out.push(Params::WordPair {
                            w1: index_to_word(a),
                            w2: index_to_word(b),
                        });
                    }
                }
            }
            out
        }
        "transport-consistency" => index_pairs(bounds.recursion_weight, bounds.recursion_weight as usize, true),
        _ => unreachable!("registered id without generator: {id}"),
    };
    Ok(params.into_iter().map(|p| inst(id, p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite::registry;

    fn bounds_w(w: u32) -> Bounds {
        Bounds::default().clamp_weight(w)
    }

    #[test]
    fn every_id_has_instances() {
        for d in registry() {
            assert!(!instances(d.id, &Bounds::default()).unwrap().is_empty(), "{}", d.id);
        }
    }

    #[test]
    fn weighted_sum_small() {
        let got: Vec<_> = instances("weighted-sum", &bounds_w(4))
            .unwrap()
            .into_iter()
            .map(|i| i.params)
            .collect();
        let want: Vec<_> = [(1, 1), (2, 1), (3, 1), (3, 3), (4, 1), (4, 3)]
            .into_iter()
            .map(|(k, r)| Params::WeightDepth { k, r })
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn cyclic_sum_small() {
        let got = instances("cyclic-sum", &bounds_w(2)).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].params, Params::Index { k: Index::of(&[2]) });
    }

    #[test]
    fn bb_small() {
        let b = Bounds {
            bb_max_size: 2,
            bb_max_part: 3,
            ..Bounds::default()
        };
        let got: Vec<_> = instances("bowman-bradley", &b).unwrap().into_iter().map(|i| i.params).collect();
        let ab = BBSpec::new(vec![1], vec![1], vec![]).unwrap();
        let c = BBSpec::new(vec![], vec![], vec![2]).unwrap();
        assert!(got.contains(&Params::Bb { spec: ab }));
        assert!(got.contains(&Params::Bb { spec: c }));
        for p in got {
            let Params::Bb { spec } = p else { panic!() };
            assert!(spec.validate().is_ok());
            assert!(2 * spec.l() + spec.m() <= 2);
        }
    }

    #[test]
    fn word_generators() {
        let ws: Vec<String> = y_words(3).iter().map(Word::text).collect();
        assert_eq!(ws, ["y", "yx", "yy", "yxx", "yxy", "yyx", "yyy"]);
        assert!(yhx_words(4).iter().all(Word::in_yhx));
        assert_eq!(yhx_words(4).len(), 1 + 2 + 4);
    }

    #[test]
    fn hypothesis_filters() {
        for i in instances("hoffman", &Bounds::default()).unwrap() {
            let Params::Index { k } = i.params else { panic!() };
            assert!(k.last().unwrap() >= 2);
        }
        for i in instances("derivation", &Bounds::default()).unwrap() {
            let Params::WordOrder { w, .. } = i.params else { panic!() };
            assert!(w.in_yhx());
        }
        assert_eq!(instances("weighted-sum", &Bounds::default()).unwrap().len(), 1 + 1 + 2 + 2 + 4 * 3);
    }
}
