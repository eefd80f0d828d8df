use proptest::prelude::*;

use tfmzv::fp::{
    brute_oracle, fmzv_eval, fmzv_t_eval, primes_between, z_map_word, z_map_word_plain, PrimeCtx,
};
use tfmzv::index::{
    cyclic_index, hoffman_dual, phi_index, symmetric_sum_element, t_coeff, t_index, tilde_shuffle, Index,
    IndexCombo,
};
use tfmzv::tpoly::{rat, TPoly};
use tfmzv::word::{
    alpha_tilde, derivation, harmonic, index_combo_to_words, index_to_word, nu_map, phi_t, phi_word,
    s_transform, t_harmonic, t_harmonic_recursive, Letter, Sign, Word, WordCombo,
};

/// A composition of a weight up to `max_weight`, read off the bits of a
/// mask: bit `i` set puts a comma after the `i`-th one.
fn index(max_weight: u32, max_depth: usize) -> impl Strategy<Value = Index> {
    (1..=max_weight, any::<u32>())
        .prop_map(|(w, mask)| {
            let mut parts = vec![1];
            for i in 0..w - 1 {
                if mask >> i & 1 == 1 {
                    parts.push(1);
                } else {
                    *parts.last_mut().unwrap() += 1;
                }
            }
            Index::of(&parts)
        })
        .prop_filter("depth", move |k| k.depth() <= max_depth)
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(primes_between(5, 199))
}

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(primes_between(5, 31))
}

fn zw(k: &Index) -> WordCombo {
    WordCombo::basis(index_to_word(k))
}

/// Up to three z-monomials with coefficients `a + b t`.
fn combo(max_weight: u32) -> impl Strategy<Value = WordCombo> {
    prop::collection::vec((index(max_weight, 4), -3i64..=3, -2i64..=2), 1..=3).prop_map(|terms| {
        let mut out = WordCombo::zero();
        for (k, a, b) in terms {
            out.add_term(index_to_word(&k), &TPoly::linear(a, b));
        }
        out
    })
}

fn letters(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len)
        .prop_map(|bs| Word::from_letters(bs.into_iter().map(|b| if b { Letter::Y } else { Letter::X }).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn s_transform_inverse(w in combo(8)) {
        let there = s_transform(&w, Sign::Plus).unwrap();
        prop_assert_eq!(&s_transform(&there, Sign::Minus).unwrap(), &w);
        let back = s_transform(&w, Sign::Minus).unwrap();
        prop_assert_eq!(s_transform(&back, Sign::Plus).unwrap(), w);
    }

    #[test]
    fn s_transform_commutes_with_nu(k in index(7, 7)) {
        let w = zw(&k);
        let lhs = s_transform(&nu_map(&w).unwrap(), Sign::Plus).unwrap();
        let rhs = nu_map(&s_transform(&w, Sign::Plus).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn s_transform_intertwines_phi(k in index(7, 7)) {
        let w = zw(&k);
        let lhs = s_transform(&phi_t(&w).unwrap(), Sign::Plus).unwrap();
        let rhs = -&phi_word(&s_transform(&w, Sign::Plus).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn t_harmonic_commutative(a in index(4, 3), b in index(4, 3)) {
        let (u, v) = (zw(&a), zw(&b));
        prop_assert_eq!(t_harmonic(&u, &v).unwrap(), t_harmonic(&v, &u).unwrap());
    }

    #[test]
    fn t_harmonic_associative(a in index(3, 2), b in index(2, 2), c in index(2, 2)) {
        let (u, v, w) = (zw(&a), zw(&b), zw(&c));
        let left = t_harmonic(&t_harmonic(&u, &v).unwrap(), &w).unwrap();
        let right = t_harmonic(&u, &t_harmonic(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn t_harmonic_at_zero_is_harmonic(a in index(4, 3), b in index(3, 3)) {
        let (u, v) = (zw(&a), zw(&b));
        prop_assert_eq!(t_harmonic(&u, &v).unwrap().specialize(&rat(0)), harmonic(&u, &v).unwrap());
    }

    #[test]
    fn t_harmonic_recursion_matches_transport(a in index(3, 3), b in index(3, 3)) {
        let (u, v) = (zw(&a), zw(&b));
        prop_assert_eq!(t_harmonic_recursive(&u, &v).unwrap(), t_harmonic(&u, &v).unwrap());
    }

    #[test]
    fn derivation_is_leibniz(u in letters(4), v in letters(4), l in 1u32..=3) {
        let (u, v) = (WordCombo::basis(u), WordCombo::basis(v));
        let cat = |a: &WordCombo, b: &WordCombo| a.bilinear(b, |x, y| WordCombo::basis(x.concat(y)));
        let lhs = derivation(&cat(&u, &v), l);
        let rhs = &cat(&derivation(&u, l), &v) + &cat(&u, &derivation(&v, l));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivation_preserves_yhx(k in index(6, 6).prop_filter("k_r >= 2", |k| k.last() >= Some(2)), l in 1u32..=3) {
        for w in derivation(&zw(&k), l).keys() {
            prop_assert!(w.in_yhx(), "{}", w.text());
        }
    }

    #[test]
    fn hoffman_dual_involution(k in index(10, 10)) {
        prop_assert_eq!(hoffman_dual(&hoffman_dual(&k).unwrap()).unwrap(), k.clone());
        prop_assert_eq!(hoffman_dual(&k).unwrap().weight(), k.weight());
    }

    #[test]
    fn alpha_tilde_is_hoffman_dual(k in index(8, 8)) {
        prop_assert_eq!(alpha_tilde(&zw(&k)).unwrap(), zw(&hoffman_dual(&k).unwrap()));
    }

    #[test]
    fn phi_index_involution_and_word_form(k in index(8, 8)) {
        let once = phi_index(&k);
        let twice = once.map_linear(phi_index);
        prop_assert_eq!(twice, IndexCombo::basis(k.clone()));
        prop_assert_eq!(phi_word(&zw(&k)), index_combo_to_words(&once));
    }

    #[test]
    fn tilde_shuffle_commutative_associative(a in index(3, 2), b in index(3, 2), c in index(3, 2)) {
        let (u, v, w) = (IndexCombo::basis(a), IndexCombo::basis(b), IndexCombo::basis(c));
        prop_assert_eq!(tilde_shuffle(&u, &v), tilde_shuffle(&v, &u));
        prop_assert_eq!(
            tilde_shuffle(&tilde_shuffle(&u, &v), &w),
            tilde_shuffle(&u, &tilde_shuffle(&v, &w))
        );
    }

    #[test]
    fn t_index_levels(k in index(8, 8)) {
        let full = t_index(&k).unwrap();
        prop_assert_eq!(full.specialize(&rat(0)), IndexCombo::basis(k.clone()));
        let top = full.t_coeff(k.depth() - 1);
        prop_assert_eq!(top, IndexCombo::basis(Index::of(&[k.weight()])));
        let mut sum = IndexCombo::zero();
        for m in 0..k.depth() {
            sum.add_scaled(&t_coeff(&k, m as i64), &TPoly::monomial(rat(1), m));
        }
        prop_assert_eq!(sum, full);
    }

    #[test]
    fn cyclic_index_measures(k in index(7, 7), m in 0usize..7) {
        prop_assume!(m < k.depth());
        for c in cyclic_index(&k, m).unwrap().keys() {
            prop_assert_eq!(c.measures(), (k.weight(), k.depth() - m));
        }
    }

    #[test]
    fn symmetric_sum_counts_permutations(k in index(8, 5)) {
        let total: TPoly = symmetric_sum_element(&k)
            .unwrap()
            .iter()
            .fold(TPoly::zero(), |acc, (_, c)| &acc + c);
        let fact: i64 = (1..=k.depth() as i64).product();
        prop_assert_eq!(total, TPoly::int(fact));
    }

    #[test]
    fn eval_matches_oracle(k in index(6, 4), p in small_prime(), star in prop::bool::ANY) {
        let ctx = PrimeCtx::new(p).unwrap();
        prop_assert_eq!(fmzv_eval(&ctx, &k, star), brute_oracle(&ctx, &k, star).unwrap());
    }

    #[test]
    fn t_eval_endpoints_and_degree(k in index(8, 8), p in prime()) {
        let ctx = PrimeCtx::new(p).unwrap();
        let q = fmzv_t_eval(&ctx, &k).unwrap();
        prop_assert_eq!(q.eval(0), fmzv_eval(&ctx, &k, false));
        prop_assert_eq!(q.eval(1), fmzv_eval(&ctx, &k, true));
        prop_assert!(q.degree().is_none_or(|d| d < k.depth()));
        prop_assert_eq!(q.coeff(k.depth() - 1), fmzv_eval(&ctx, &Index::of(&[k.weight()]), false));
    }

    #[test]
    fn transport_holds_for_every_prime(k in index(7, 7), p in prime()) {
        let ctx = PrimeCtx::new(p).unwrap();
        let w = zw(&k);
        let lhs = z_map_word_plain(&ctx, &s_transform(&w, Sign::Plus).unwrap()).unwrap();
        prop_assert_eq!(lhs, z_map_word(&ctx, &w).unwrap());
    }

    #[test]
    fn products_are_multiplicative(a in index(4, 3), b in index(4, 3), p in prime()) {
        let ctx = PrimeCtx::new(p).unwrap();
        let (u, v) = (zw(&a), zw(&b));
        let plain = z_map_word_plain(&ctx, &harmonic(&u, &v).unwrap()).unwrap();
        let want = z_map_word_plain(&ctx, &u).unwrap().mul(&z_map_word_plain(&ctx, &v).unwrap());
        prop_assert_eq!(plain, want);
        let twisted = z_map_word(&ctx, &t_harmonic(&u, &v).unwrap()).unwrap();
        let want = z_map_word(&ctx, &u).unwrap().mul(&z_map_word(&ctx, &v).unwrap());
        prop_assert_eq!(twisted, want);
    }
}

#[test]
fn ones_vanish_below_p_minus_one() {
    for p in primes_between(5, 199) {
        let ctx = PrimeCtx::new(p).unwrap();
        for m in (1..=6).filter(|&m| (m as u64) < p - 1) {
            assert_eq!(fmzv_eval(&ctx, &Index::repeated(1, m), false), 0, "p={p} m={m}");
        }
    }
}
