use super::{index_to_word, require_h1, s_transform, word_to_index, Letter, Sign, Word, WordCombo};
use crate::error::Result;
use crate::index::{Index, IndexCombo};
use crate::tpoly::TPoly;

/// Concatenation product.
pub fn concat(u: &WordCombo, v: &WordCombo) -> WordCombo {
    u.bilinear(v, |a, b| WordCombo::basis(a.concat(b)))
}

fn prepend(k: u32, v: &IndexCombo) -> IndexCombo {
    v.map_linear(|rest| {
        let mut parts = vec![k];
        parts.extend_from_slice(rest.parts());
        IndexCombo::basis(Index::of(&parts))
    })
}

fn stuffle(a: &[u32], b: &[u32]) -> IndexCombo {
    if a.is_empty() {
        return IndexCombo::basis(Index::of(b));
    }
    if b.is_empty() {
        return IndexCombo::basis(Index::of(a));
    }
    let mut out = prepend(a[0], &stuffle(&a[1..], b));
    out += &prepend(b[0], &stuffle(a, &b[1..]));
    out += &prepend(a[0] + b[0], &stuffle(&a[1..], &b[1..]));
    out
}

fn via_indices(
    u: &WordCombo,
    v: &WordCombo,
    f: impl Fn(&[u32], &[u32]) -> IndexCombo,
) -> Result<WordCombo> {
    require_h1(u)?;
    require_h1(v)?;
    u.try_bilinear(v, |a, b| {
        let (ia, ib) = (word_to_index(a)?, word_to_index(b)?);
        Ok(f(ia.parts(), ib.parts()).map_linear(|k| WordCombo::basis(index_to_word(k))))
    })
}

/// The harmonic (quasi-shuffle) product on `H^1_t`.
pub fn harmonic(u: &WordCombo, v: &WordCombo) -> Result<WordCombo> {
    via_indices(u, v, stuffle)
}

/// Sum over all interleavings of the letters of `a` and `b`.
pub fn shuffle_words(a: &Word, b: &Word) -> WordCombo {
    let (r, s) = (a.len(), b.len());
    let mut out = WordCombo::zero();
    for mask in (0u64..(1u64 << (r + s))).filter(|m| m.count_ones() as usize == r) {
        let (mut i, mut j) = (0, 0);
        let mut letters = Vec::with_capacity(r + s);
        for slot in 0..r + s {
            if mask & (1 << slot) != 0 {
                letters.push(a.0[i]);
                i += 1;
            } else {
                letters.push(b.0[j]);
                j += 1;
            }
        }
        out.add_int(Word(letters), 1);
    }
    out
}

pub fn shuffle(u: &WordCombo, v: &WordCombo) -> WordCombo {
    u.bilinear(v, shuffle_words)
}

/// The t-harmonic product, defined as `S_{-t}(S_t(u) * S_t(v))`.
pub fn t_harmonic(u: &WordCombo, v: &WordCombo) -> Result<WordCombo> {
    let su = s_transform(u, Sign::Plus)?;
    let sv = s_transform(v, Sign::Plus)?;
    s_transform(&harmonic(&su, &sv)?, Sign::Minus)
}

/// The four-term recursion for the t-harmonic product. The `(t^2 - t)` term
/// adds `x^(k+l)` to the first block of `w_1 * w_2`, i.e. contributes
/// `z_{k+l} ⋄ (w_1 * w_2)` with `z_a ⋄ z_b w = z_{a+b} w`.
pub fn t_harmonic_recursive(u: &WordCombo, v: &WordCombo) -> Result<WordCombo> {
    via_indices(u, v, t_stuffle)
}

fn merge_first(k: u32, v: &IndexCombo) -> IndexCombo {
    v.map_linear(|rest| {
        let mut parts = rest.parts().to_vec();
        parts[0] += k;
        IndexCombo::basis(Index::of(&parts))
    })
}

fn t_stuffle(a: &[u32], b: &[u32]) -> IndexCombo {
    if a.is_empty() {
        return IndexCombo::basis(Index::of(b));
    }
    if b.is_empty() {
        return IndexCombo::basis(Index::of(a));
    }
    let mut out = prepend(a[0], &t_stuffle(&a[1..], b));
    out += &prepend(b[0], &t_stuffle(a, &b[1..]));
    let tail = t_stuffle(&a[1..], &b[1..]);
    out.add_scaled(&prepend(a[0] + b[0], &tail), &TPoly::linear(1, -2));
    if a.len() > 1 || b.len() > 1 {
        out.add_scaled(&merge_first(a[0] + b[0], &tail), &TPoly::from_ints(&[0, -1, 1]));
    }
    out
}

/// The t-shuffle product, defined as `S_{-t}(S_t(u) ш S_t(v))`.
pub fn t_shuffle(u: &WordCombo, v: &WordCombo) -> Result<WordCombo> {
    let su = s_transform(u, Sign::Plus)?;
    let sv = s_transform(v, Sign::Plus)?;
    s_transform(&shuffle(&su, &sv), Sign::Minus)
}

/// Experimental: the letter recursion with corrections `rho(x) = 0`,
/// `rho(y) = t y` applied when one side is exhausted. It does not agree with
/// [`t_shuffle`] in `H^1_t` (e.g. on `y, y`); kept for comparison only.
pub fn t_shuffle_recursive(u: &WordCombo, v: &WordCombo) -> WordCombo {
    u.bilinear(v, |a, b| rho_shuffle(a.letters(), b.letters()))
}

fn rho_shuffle(a: &[Letter], b: &[Letter]) -> WordCombo {
    if a.is_empty() {
        return WordCombo::basis(Word(b.to_vec()));
    }
    if b.is_empty() {
        return WordCombo::basis(Word(a.to_vec()));
    }
    let lead = |l: Letter, v: WordCombo| -> WordCombo {
        v.map_linear(|w| {
            let mut letters = vec![l];
            letters.extend_from_slice(w.letters());
            WordCombo::basis(Word(letters))
        })
    };
    let mut out = lead(a[0], rho_shuffle(&a[1..], b));
    out += &lead(b[0], rho_shuffle(a, &b[1..]));
    if a.len() == 1 && a[0] == Letter::Y {
        let mut letters = vec![Letter::Y];
        letters.extend_from_slice(b);
        out.add_term(Word(letters), &TPoly::linear(0, -1));
    }
    if b.len() == 1 && b[0] == Letter::Y {
        let mut letters = vec![Letter::Y];
        letters.extend_from_slice(a);
        out.add_term(Word(letters), &TPoly::linear(0, -1));
    }
    out
}
