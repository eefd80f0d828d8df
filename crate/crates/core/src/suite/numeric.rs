use super::symbolic::twisted_concat;
use super::{descriptor, primes_for, CheckOutcome, Instance, Params, Status};
use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::fp::{reduce_tpoly, z_a_single, EvalCache, Evaluator, FpPoly, PrimeCtx};
use crate::index::{
    bb_element, compositions, cyclic_relation, hoffman_dual, ohno_sum, plain_sum, symmetric_sum_element,
    weighted_element, Index, IndexCombo, OhnoVariant, WeightedKind,
};
use crate::tpoly::TPoly;
use crate::word::{
    affix, derivation_twisted, harmonic, index_to_word, nu_map, phi_t, phi_word, s_transform, t_harmonic,
    t_shuffle, word_combo_to_indices, Affix, Sign, Word, WordCombo,
};

/// LHS − RHS of one instance, ready to evaluate at any prime.
enum Prepared {
    /// `Z^t(t) + Z(plain) - Z_A(k) * za`
    Linear {
        t: IndexCombo,
        plain: IndexCombo,
        za: Option<(u32, TPoly)>,
    },
    /// `Z(lhs) - Z(a) Z(b)`, with `Z^t` when `interpolated`.
    Product {
        lhs: IndexCombo,
        a: IndexCombo,
        b: IndexCombo,
        interpolated: bool,
    },
    Antipode(Index),
    DualityStar(Index),
}

impl Prepared {
    fn t(v: IndexCombo) -> Self {
        Prepared::Linear {
            t: v,
            plain: IndexCombo::zero(),
            za: None,
        }
    }

    fn plain(v: IndexCombo) -> Self {
        Prepared::Linear {
            t: IndexCombo::zero(),
            plain: v,
            za: None,
        }
    }

    fn residual(&self, ev: &Evaluator) -> Result<FpPoly> {
        let p = ev.p();
        match self {
            Prepared::Linear { t, plain, za } => {
                let mut out = ev.z(t)?.add(&ev.z_plain(plain)?);
                if let Some((k, c)) = za {
                    let c = reduce_tpoly(ev.ctx(), c, &format!("Z_A({k})"))?;
                    out = out.sub(&c.scale(z_a_single(ev.ctx(), *k)?));
                }
                Ok(out)
            }
            Prepared::Product {
                lhs,
                a,
                b,
                interpolated,
            } => {
                let z = |v: &IndexCombo| if *interpolated { ev.z(v) } else { ev.z_plain(v) };
                Ok(z(lhs)?.sub(&z(a)?.mul(&z(b)?)))
            }
            Prepared::Antipode(k) => {
                let parts = k.parts();
                let mut out = FpPoly::zero(p);
                for i in 0..=parts.len() {
                    let head = ev.t_eval(&Index::of(&parts[..i]))?;
                    let tail: Vec<u32> = parts[i..].iter().rev().copied().collect();
                    let tail = ev.t_eval(&Index::of(&tail))?.compose_affine(1, p - 1);
                    let term = head.mul(&tail);
                    out = if i % 2 == 0 { out.add(&term) } else { out.sub(&term) };
                }
                Ok(out)
            }
            Prepared::DualityStar(k) => {
                let sum = ev.ctx().add(ev.star(k), ev.star(&hoffman_dual(k)?));
                Ok(FpPoly::constant(p, sum))
            }
        }
    }
}

/// Hoffman's relation for `k` with `k_r >= 2`, as LHS − RHS on indices read
/// through `Z^t`.
pub fn hoffman_element(k: &Index) -> Result<IndexCombo> {
    k.require_non_empty()?;
    let parts = k.parts();
    let r = parts.len();
    if parts[r - 1] < 2 {
        return Err(Error::OutOfRange(format!("last part of {k} must be at least 2")));
    }
    // the final entry is lowered by one after the other modifications
    let lower_last = |mut v: Vec<u32>| {
        *v.last_mut().expect("non-empty") -= 1;
        Index::of(&v)
    };
    let mut out = IndexCombo::zero();
    for i in 0..r {
        let mut v = parts.to_vec();
        v[i] += 1;
        let bump = i64::from(parts[i]) + i64::from(i == 0) - 2;
        out.add_term(lower_last(v), &TPoly::linear(1, bump));
        for j in 2..=parts[i] {
            let mut v = parts[..i].to_vec();
            v.push(parts[i] + 1 - j);
            v.push(j);
            v.extend_from_slice(&parts[i + 1..]);
            out.add_int(lower_last(v), -1);
        }
        if i + 1 < r {
            let mut v = parts[..i].to_vec();
            v.push(parts[i] + parts[i + 1] + 1);
            v.extend_from_slice(&parts[i + 2..]);
            out.add_term(lower_last(v), &-&TPoly::from_ints(&[0, 1, -1]));
        }
    }
    Ok(out)
}

fn words(v: &WordCombo) -> Result<IndexCombo> {
    word_combo_to_indices(v)
}

fn basis(w: &Word) -> WordCombo {
    WordCombo::basis(w.clone())
}

fn index_basis(k: &Index) -> IndexCombo {
    IndexCombo::basis(k.clone())
}

/// `sum_j [C(k-1,j) + (-1)^r C(k-1,r-1-j)] t^j (1-t)^(r-1-j)`.
fn sum_formula_rhs(k: u32, r: usize) -> TPoly {
    let (k, r) = (i64::from(k), r as i64);
    let sign = if r % 2 == 0 { 1 } else { -1 };
    let mut out = TPoly::zero();
    for j in 0..r {
        let c = binomial(k - 1, j) + sign * binomial(k - 1, r - 1 - j);
        let term = &TPoly::t().pow(j as u32) * &TPoly::linear(1, -1).pow((r - 1 - j) as u32);
        out += &term.scale(&crate::tpoly::rat(c));
    }
    out
}

fn prepare(inst: &Instance) -> Result<Prepared> {
    let bad = || Error::OutOfRange(format!("{} does not take parameters {}", inst.theorem, inst.params));
    Ok(match (inst.theorem.as_str(), &inst.params) {
        ("sum-formula", &Params::WeightDepth { k, r }) => {
            let lhs: IndexCombo = compositions(k, r).into_iter().filter(|c| c.last() >= Some(2)).collect();
            Prepared::Linear {
                t: lhs,
                plain: IndexCombo::zero(),
                za: Some((k, sum_formula_rhs(k, r))),
            }
        }
        ("cyclic-sum", Params::Index { k }) => Prepared::plain(cyclic_relation(k)?),
        ("bowman-bradley", Params::Bb { spec }) => Prepared::plain(bb_element(spec)?),
        ("weighted-sum", &Params::WeightDepth { k, r }) => {
            Prepared::plain(weighted_element(k, r, 0, WeightedKind::Ft)?)
        }
        ("plain-sum", &Params::WeightDepth { k, r }) => Prepared::plain(plain_sum(k, r)?),
        ("ohno-type", Params::IndexLevel { k, m }) => Prepared::plain(ohno_sum(k, *m, OhnoVariant::G)?),
        ("symmetric-sum", Params::Index { k }) => Prepared::t(symmetric_sum_element(k)?),
        ("hoffman", Params::Index { k }) => Prepared::t(hoffman_element(k)?),
        ("harmonic" | "t-harmonic", Params::IndexPair { a, b }) => {
            let (u, v) = (basis(&index_to_word(a)), basis(&index_to_word(b)));
            let interpolated = inst.theorem == "t-harmonic";
            let prod = if interpolated { t_harmonic(&u, &v)? } else { harmonic(&u, &v)? };
            Prepared::Product {
                lhs: words(&prod)?,
                a: index_basis(a),
                b: index_basis(b),
                interpolated,
            }
        }
        ("antipode", Params::Index { k }) => Prepared::Antipode(k.clone()),
        ("duality-star", Params::Index { k }) => Prepared::DualityStar(k.clone()),
        ("reversal", Params::Index { k }) => {
            let w = basis(&index_to_word(k));
            Prepared::t(&index_basis(k) - &words(&nu_map(&w)?)?)
        }
        ("transport", Params::Word { w }) => {
            let w = basis(w);
            Prepared::Linear {
                t: -&words(&w)?,
                plain: words(&s_transform(&w, Sign::Plus)?)?,
                za: None,
            }
        }
        ("t-shuffle", Params::WordPair { w1, w2 }) => {
            let (u, v) = (basis(w1), basis(w2));
            let rhs = twisted_concat(w1, &nu_map(&v)?)?;
            Prepared::t(&words(&t_shuffle(&u, &v)?)? - &words(&rhs)?)
        }
        ("duality-phi", Params::Word { w }) => {
            let w = basis(w);
            Prepared::plain(&words(&w)? - &words(&phi_word(&w))?)
        }
        ("duality-t", Params::Word { w }) => {
            let w = basis(w);
            Prepared::t(&words(&w)? + &words(&phi_t(&w)?)?)
        }
        ("derivation", &Params::WordOrder { ref w, l }) => {
            let d = derivation_twisted(&basis(w), l)?;
            Prepared::t(words(&affix(&d, Affix::RxInv)?)?)
        }
        _ => return Err(bad()),
    })
}

/// Checks a numeric instance at every prime of `ctxs` admitted by the
/// prime policy.
pub fn check_numeric(inst: &Instance, ctxs: &[PrimeCtx], cache: &EvalCache) -> Result<CheckOutcome> {
    evaluate(inst, &prepare(inst)?, ctxs, cache)
}

fn evaluate(inst: &Instance, prepared: &Prepared, ctxs: &[PrimeCtx], cache: &EvalCache) -> Result<CheckOutcome> {
    let kind = descriptor(&inst.theorem)?.kind;
    let weight = inst.weight();
    let primes = primes_for(kind, weight, &ctxs.iter().map(PrimeCtx::p).collect::<Vec<_>>());
    let mut out = CheckOutcome::new(inst, Status::Pass);
    let (mut checked, mut skipped, mut failed) = (0, 0, 0);
    let mut skip_reason = None;
    for ctx in ctxs.iter().filter(|c| primes.contains(&c.p())) {
        let ev = Evaluator::new(ctx, Some(cache));
        match prepared.residual(&ev) {
            Ok(res) => {
                checked += 1;
                if !res.is_zero() {
                    failed += 1;
                    if out.prime.is_none() {
                        out.prime = Some(ctx.p());
                        out.residual = Some(res.coeffs().to_vec());
                    }
                }
            }
            Err(e @ Error::PDividesDenominator { .. }) => {
                skipped += 1;
                skip_reason.get_or_insert_with(|| e.to_string());
            }
            Err(e) => return Err(e),
        }
    }
    out.primes_checked = Some(checked);
    out.primes_skipped = Some(skipped);
    out.primes_failed = Some(failed);
    out.status = if failed > 0 {
        Status::Fail
    } else if checked == 0 {
        Status::Skipped
    } else {
        Status::Pass
    };
    out.detail = match skip_reason {
        Some(reason) => Some(reason),
        None if checked == 0 => Some(format!("no tested prime is at least {}", weight + 3)),
        None => None,
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{index_combo_to_words, word_to_index};

    fn ix(p: &[u32]) -> Index {
        Index::of(p)
    }

    fn run(theorem: &str, params: Params, primes: &[u64]) -> CheckOutcome {
        let ctxs: Vec<_> = primes.iter().map(|&p| PrimeCtx::new(p).unwrap()).collect();
        let inst = Instance {
            theorem: theorem.into(),
            params,
        };
        check_numeric(&inst, &ctxs, &EvalCache::new()).unwrap()
    }

    #[test]
    fn sum_formula_hand_value() {
        // zeta_5^t(1,2) = 1 and 3 Z_A(3) = 3 * 2 = 1 mod 5
        let ctx = PrimeCtx::new(5).unwrap();
        let ev = Evaluator::new(&ctx, None);
        let inst = Instance {
            theorem: "sum-formula".into(),
            params: Params::WeightDepth { k: 3, r: 2 },
        };
        assert!(prepare(&inst).unwrap().residual(&ev).unwrap().is_zero());
        assert_eq!(sum_formula_rhs(3, 2), TPoly::int(3));
    }

    #[test]
    fn sum_formula_top_depth_rhs() {
        // r = k leaves no k_r >= 2 term; the right side is 2 Z_A(k) for even k
        assert_eq!(sum_formula_rhs(4, 4), TPoly::int(2));
        assert!(sum_formula_rhs(3, 3).is_zero());
        let out = run("sum-formula", Params::WeightDepth { k: 4, r: 4 }, &[7, 11, 13]);
        assert_eq!(out.status, Status::Pass);
    }

    #[test]
    fn small_examples() {
        let out = run("duality-star", Params::Index { k: ix(&[1, 2]) }, &[5, 7]);
        assert_eq!((out.status, out.primes_checked), (Status::Pass, Some(1)));
        let out = run("cyclic-sum", Params::Index { k: ix(&[2]) }, &[5]);
        assert_eq!(out.status, Status::Pass);
        let out = run("harmonic", Params::IndexPair { a: ix(&[1, 3]), b: ix(&[2]) }, &[3, 5]);
        assert_eq!(out.status, Status::Pass);
        let out = run("antipode", Params::Index { k: ix(&[2, 1, 3]) }, &[3, 5, 7]);
        assert_eq!(out.status, Status::Pass);
    }

    #[test]
    fn below_threshold_is_skipped() {
        let out = run("cyclic-sum", Params::Index { k: ix(&[3, 3]) }, &[5, 7]);
        assert_eq!(out.status, Status::Skipped);
        assert_eq!(out.primes_checked, Some(0));
        assert!(out.detail.is_some());
    }

    #[test]
    fn failing_instance_reports_witness() {
        // zeta_7(1, 2) is not zero, so this bogus relation must fail with a witness
        let inst = Instance {
            theorem: "hoffman".into(),
            params: Params::Index { k: ix(&[2]) },
        };
        let bogus = Prepared::t(IndexCombo::basis(ix(&[1, 2])));
        let ctxs = [PrimeCtx::new(7).unwrap(), PrimeCtx::new(11).unwrap()];
        let out = evaluate(&inst, &bogus, &ctxs, &EvalCache::new()).unwrap();
        assert_eq!(out.status, Status::Fail);
        assert_eq!(out.prime, Some(7));
        let want = crate::fp::fmzv_eval(&ctxs[0], &ix(&[1, 2]), false);
        assert_eq!(out.residual, Some(vec![want]));
    }

    #[test]
    fn hoffman_small() {
        let mut want = IndexCombo::term(ix(&[2]), TPoly::linear(1, 1));
        want.add_int(ix(&[1, 1]), -1);
        assert_eq!(hoffman_element(&ix(&[2])).unwrap(), want);
        assert!(hoffman_element(&ix(&[2, 1])).is_err());
    }

    #[test]
    fn hoffman_is_derivation_at_order_one() {
        for k in crate::index::indices_up_to(8, 5) {
            if k.last() < Some(2) {
                continue;
            }
            let w = WordCombo::basis(index_to_word(&k));
            let d = affix(&derivation_twisted(&w, 1).unwrap(), Affix::RxInv).unwrap();
            let d = -&word_combo_to_indices(&d).unwrap();
            assert_eq!(hoffman_element(&k).unwrap(), d, "{k}");
            let back = index_combo_to_words(&d);
            assert!(back.keys().all(|w| word_to_index(w).is_ok()));
        }
    }
}
