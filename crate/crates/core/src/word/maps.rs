use super::{domain_error, index_to_word, require_h1, word_to_index, Letter, Word, WordCombo};
use crate::error::Result;
use crate::tpoly::TPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Affix {
    /// `w -> yw`
    Ly,
    /// `yw -> w`
    LyInv,
    /// `wx -> w`
    RxInv,
}

fn letter(l: Letter) -> WordCombo {
    WordCombo::basis(Word(vec![l]))
}

fn concat2(u: &WordCombo, v: &WordCombo) -> WordCombo {
    u.bilinear(v, |a, b| WordCombo::basis(a.concat(b)))
}

/// Applies the concatenation endomorphism determined by the letter images.
fn substitute(w: &WordCombo, img_x: &WordCombo, img_y: &WordCombo) -> WordCombo {
    w.map_linear(|word| {
        word.letters().iter().fold(WordCombo::basis(Word::empty()), |acc, &l| {
            concat2(&acc, if l == Letter::X { img_x } else { img_y })
        })
    })
}

/// `x -> x`, `y -> c x + y`.
pub fn sigma_sub(w: &WordCombo, c: &TPoly) -> WordCombo {
    let mut img_y = letter(Letter::Y);
    img_y.add_term(Word(vec![Letter::X]), c);
    substitute(w, &letter(Letter::X), &img_y)
}

/// `S_{±t}`: `1 -> 1`, `y u -> y sigma_{±t}(u)`.
pub fn s_transform(w: &WordCombo, sign: Sign) -> Result<WordCombo> {
    require_h1(w)?;
    let c = match sign {
        Sign::Plus => TPoly::t(),
        Sign::Minus => -&TPoly::t(),
    };
    Ok(w.map_linear(|word| match word.letters().split_first() {
        None => WordCombo::basis(Word::empty()),
        Some((_, rest)) => {
            concat2(&letter(Letter::Y), &sigma_sub(&WordCombo::basis(Word(rest.to_vec())), &c))
        }
    }))
}

/// `z_{k_1} ... z_{k_r} -> (-1)^wt z_{k_r} ... z_{k_1}`.
pub fn nu_map(w: &WordCombo) -> Result<WordCombo> {
    w.try_map_linear(|word| {
        let k = word_to_index(word)?;
        let sign = if k.weight() % 2 == 0 { 1 } else { -1 };
        Ok(WordCombo::term(index_to_word(&k.reversed()), TPoly::int(sign)))
    })
}

/// `x -> x + y`, `y -> -y`.
pub fn phi_word(w: &WordCombo) -> WordCombo {
    let mut img_x = letter(Letter::X);
    img_x += &letter(Letter::Y);
    substitute(w, &img_x, &letter(Letter::Y).scale_int(-1))
}

/// `phi^t = -S_{-t} phi S_t`.
pub fn phi_t(w: &WordCombo) -> Result<WordCombo> {
    let inner = phi_word(&s_transform(w, Sign::Plus)?);
    Ok(-&s_transform(&inner, Sign::Minus)?)
}

/// `y u -> y alpha(u)` with `alpha` swapping `x` and `y`.
pub fn alpha_tilde(w: &WordCombo) -> Result<WordCombo> {
    w.try_map_linear(|word| match word.letters().split_first() {
        Some((Letter::Y, rest)) => {
            let mut letters = vec![Letter::Y];
            letters.extend(rest.iter().map(|l| l.swapped()));
            Ok(WordCombo::basis(Word(letters)))
        }
        _ => Err(domain_error(word, "yH (y-leading, non-constant)")),
    })
}

/// The derivation `d_l` with `d_l(x) = y(x+y)^(l-1)x = -d_l(y)`.
pub fn derivation(w: &WordCombo, l: u32) -> WordCombo {
    let mut x_plus_y = letter(Letter::X);
    x_plus_y += &letter(Letter::Y);
    let mut img = letter(Letter::Y);
    for _ in 1..l {
        img = concat2(&img, &x_plus_y);
    }
    let img = concat2(&img, &letter(Letter::X));
    w.map_linear(|word| {
        let mut out = WordCombo::zero();
        let ls = word.letters();
        for (i, &l) in ls.iter().enumerate() {
            let pre = WordCombo::basis(Word(ls[..i].to_vec()));
            let post = WordCombo::basis(Word(ls[i + 1..].to_vec()));
            let term = concat2(&concat2(&pre, &img), &post);
            if l == Letter::X {
                out += &term;
            } else {
                out -= &term;
            }
        }
        out
    })
}

/// `d_l^t = S_{-t} d_l S_t`.
pub fn derivation_twisted(w: &WordCombo, l: u32) -> Result<WordCombo> {
    s_transform(&derivation(&s_transform(w, Sign::Plus)?, l), Sign::Minus)
}

pub fn affix(w: &WordCombo, which: Affix) -> Result<WordCombo> {
    w.try_map_linear(|word| {
        let ls = word.letters();
        match which {
            Affix::Ly => {
                let mut v = vec![Letter::Y];
                v.extend_from_slice(ls);
                Ok(WordCombo::basis(Word(v)))
            }
            Affix::LyInv => match ls.split_first() {
                Some((Letter::Y, rest)) => Ok(WordCombo::basis(Word(rest.to_vec()))),
                _ => Err(domain_error(word, "yH (y-leading)")),
            },
            Affix::RxInv => match ls.split_last() {
                Some((Letter::X, rest)) => Ok(WordCombo::basis(Word(rest.to_vec()))),
                _ => Err(domain_error(word, "Hx (x-trailing)")),
            },
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::{hoffman_dual, indices_up_to, phi_index};
    use crate::index::Index;
    use crate::word::{concat, word, words};

    fn z(parts: &[u32]) -> WordCombo {
        WordCombo::basis(index_to_word(&Index::of(parts)))
    }

    #[test]
    fn sigma_examples() {
        let mut want = word("y");
        want.add_term("x".parse().unwrap(), &TPoly::t());
        assert_eq!(sigma_sub(&word("y"), &TPoly::t()), want);
        let mut want = word("yx");
        want.add_term("xx".parse().unwrap(), &TPoly::t());
        assert_eq!(sigma_sub(&word("yx"), &TPoly::t()), want);
        let back = sigma_sub(&sigma_sub(&word("yy"), &TPoly::t()), &-&TPoly::t());
        assert_eq!(back, word("yy"));
    }

    #[test]
    fn s_transform_examples() {
        let mut want = z(&[1, 1]);
        want.add_term(index_to_word(&Index::of(&[2])), &TPoly::t());
        assert_eq!(s_transform(&z(&[1, 1]), Sign::Plus).unwrap(), want);
        assert_eq!(s_transform(&z(&[2]), Sign::Plus).unwrap(), z(&[2]));
        let w = z(&[1, 2, 1]);
        let round = s_transform(&s_transform(&w, Sign::Plus).unwrap(), Sign::Minus).unwrap();
        assert_eq!(round, w);
        assert!(s_transform(&word("xy"), Sign::Plus).is_err());
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu_map(&z(&[2, 3])).unwrap(), z(&[3, 2]).scale_int(-1));
        assert_eq!(nu_map(&z(&[2, 2])).unwrap(), z(&[2, 2]));
        assert_eq!(nu_map(&nu_map(&z(&[1, 2])).unwrap()).unwrap(), z(&[1, 2]));
    }

    #[test]
    fn phi_examples() {
        let mut want = z(&[2]).scale_int(-1);
        want -= &z(&[1, 1]);
        assert_eq!(phi_word(&z(&[2])), want);
        assert_eq!(phi_word(&phi_word(&word("xy"))), word("xy"));
        assert_eq!(phi_word(&z(&[1, 2])), &z(&[1, 2]) + &z(&[1, 1, 1]));
        for k in indices_up_to(8, 8) {
            let via_index = crate::word::index_combo_to_words(&phi_index(&k));
            assert_eq!(phi_word(&WordCombo::basis(index_to_word(&k))), via_index, "{k}");
        }
    }

    #[test]
    fn phi_t_examples() {
        assert_eq!(phi_t(&z(&[1])).unwrap(), z(&[1]));
        let mut want = z(&[1, 1]);
        want.add_term(index_to_word(&Index::of(&[2])), &TPoly::linear(1, -1));
        assert_eq!(phi_t(&z(&[2])).unwrap(), want);
        let at0 = phi_t(&z(&[1, 2])).unwrap().specialize(&crate::tpoly::rat(0));
        assert_eq!(at0, -&phi_word(&z(&[1, 2])));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_tilde(&word("yx")).unwrap(), word("yy"));
        assert_eq!(alpha_tilde(&word("yyx")).unwrap(), word("yxy"));
        assert_eq!(alpha_tilde(&alpha_tilde(&word("yxy")).unwrap()).unwrap(), word("yxy"));
        assert!(alpha_tilde(&word("1")).is_err());
        for k in indices_up_to(8, 8) {
            let w = WordCombo::basis(index_to_word(&k));
            let dual = WordCombo::basis(index_to_word(&hoffman_dual(&k).unwrap()));
            assert_eq!(alpha_tilde(&w).unwrap(), dual, "{k}");
        }
    }

    #[test]
    fn derivation_examples() {
        assert_eq!(derivation(&z(&[2]), 1), &z(&[1, 2]) - &z(&[3]));
        let mut want = z(&[1, 2]);
        want.add_term(index_to_word(&Index::of(&[3])), &TPoly::linear(-1, -1));
        assert_eq!(derivation_twisted(&z(&[2]), 1).unwrap(), want);
        assert!(derivation(&word("1"), 2).is_zero());
    }

    #[test]
    fn derivation_is_leibniz() {
        let ws = ["yx", "xyy", "yxxy", "y", "xx"];
        for l in 1..=3 {
            for a in ws {
                for b in ws {
                    let (u, v) = (word(a), word(b));
                    let lhs = derivation(&concat(&u, &v), l);
                    let rhs = &concat(&derivation(&u, l), &v) + &concat(&u, &derivation(&v, l));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn affix_examples() {
        assert_eq!(affix(&word("xy"), Affix::Ly).unwrap(), word("yxy"));
        assert_eq!(affix(&word("yyx"), Affix::LyInv).unwrap(), word("yx"));
        assert_eq!(affix(&word("yxx"), Affix::RxInv).unwrap(), word("yx"));
        assert!(affix(&words(&[(1, "yx"), (2, "xy")]), Affix::LyInv).is_err());
        assert!(affix(&word("1"), Affix::RxInv).is_err());
    }
}
