use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::cache::EvalCache;
use super::{fmzv_eval, t_poly_from_strict, FpPoly, FpScalar, PrimeCtx};
use crate::error::{Error, Result};
use crate::index::{Index, IndexCombo};
use crate::tpoly::{Rational, TPoly};
use crate::word::{word_combo_to_indices, WordCombo};

fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

/// `a/b -> a b^(-1) mod p`; `term` names the index for the error.
pub fn reduce_rational(ctx: &PrimeCtx, c: &Rational, term: &str) -> Result<FpScalar> {
    let p = ctx.p();
    let den = residue(c.denom(), p);
    if den == 0 {
        return Err(Error::PDividesDenominator {
            p,
            term: term.to_string(),
            coeff: c.to_string(),
        });
    }
    Ok(ctx.mul(residue(c.numer(), p), ctx.inv(den)))
}

pub fn reduce_tpoly(ctx: &PrimeCtx, c: &TPoly, term: &str) -> Result<FpPoly> {
    let coeffs = c
        .coeffs()
        .iter()
        .map(|a| reduce_rational(ctx, a, term))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| match e {
            Error::PDividesDenominator { p, term, .. } => Error::PDividesDenominator {
                p,
                term,
                coeff: c.to_string(),
            },
            other => other,
        })?;
    Ok(FpPoly::from_coeffs(ctx.p(), coeffs))
}

/// Evaluation maps at one prime, optionally memoised through an [`EvalCache`].
#[derive(Clone, Copy)]
pub struct Evaluator<'a> {
    ctx: &'a PrimeCtx,
    cache: Option<&'a EvalCache>,
}

impl<'a> Evaluator<'a> {
    pub fn new(ctx: &'a PrimeCtx, cache: Option<&'a EvalCache>) -> Self {
        Self { ctx, cache }
    }

    pub fn ctx(&self) -> &'a PrimeCtx {
        self.ctx
    }

    pub fn p(&self) -> u64 {
        self.ctx.p()
    }

    pub fn strict(&self, k: &Index) -> FpScalar {
        match self.cache {
            Some(c) => c.strict(self.ctx, k),
            None => fmzv_eval(self.ctx, k, false),
        }
    }

    pub fn star(&self, k: &Index) -> FpScalar {
        fmzv_eval(self.ctx, k, true)
    }

    /// `zeta_p^t(k)`.
    pub fn t_eval(&self, k: &Index) -> Result<FpPoly> {
        match self.cache {
            Some(c) => c.t_eval(self.ctx, k),
            None => t_poly_from_strict(self.ctx, k, |q| fmzv_eval(self.ctx, q, false)),
        }
    }

    /// `Z^t` on index combinations.
    pub fn z(&self, v: &IndexCombo) -> Result<FpPoly> {
        let mut out = FpPoly::zero(self.p());
        for (k, c) in v {
            let c = reduce_tpoly(self.ctx, c, &k.to_string())?;
            out = out.add(&c.mul(&self.t_eval(k)?));
        }
        Ok(out)
    }

    /// The classical map `Z`: each index goes to its strict value and the
    /// `t`-dependence of the coefficients is kept.
    pub fn z_plain(&self, v: &IndexCombo) -> Result<FpPoly> {
        let mut out = FpPoly::zero(self.p());
        for (k, c) in v {
            let c = reduce_tpoly(self.ctx, c, &k.to_string())?;
            out = out.add(&c.scale(self.strict(k)));
        }
        Ok(out)
    }

    pub fn z_word(&self, w: &WordCombo) -> Result<FpPoly> {
        self.z(&word_combo_to_indices(w)?)
    }

    pub fn z_word_plain(&self, w: &WordCombo) -> Result<FpPoly> {
        self.z_plain(&word_combo_to_indices(w)?)
    }
}

pub fn z_map_index(ctx: &PrimeCtx, v: &IndexCombo) -> Result<FpPoly> {
    Evaluator::new(ctx, None).z(v)
}

pub fn z_map_index_plain(ctx: &PrimeCtx, v: &IndexCombo) -> Result<FpPoly> {
    Evaluator::new(ctx, None).z_plain(v)
}

pub fn z_map_word(ctx: &PrimeCtx, w: &WordCombo) -> Result<FpPoly> {
    Evaluator::new(ctx, None).z_word(w)
}

pub fn z_map_word_plain(ctx: &PrimeCtx, w: &WordCombo) -> Result<FpPoly> {
    Evaluator::new(ctx, None).z_word_plain(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::{fmzv_t_eval, primes_between};
    use crate::index::indices_up_to;
    use crate::tpoly::rat_frac;
    use crate::word::{index_to_word, s_transform, word, Sign};

    fn ix(p: &[u32]) -> Index {
        Index::of(p)
    }

    #[test]
    fn index_map_examples() {
        let ctx = PrimeCtx::new(5).unwrap();
        let v = &IndexCombo::basis(ix(&[1, 2])) - &IndexCombo::basis(ix(&[1, 2]));
        assert!(z_map_index(&ctx, &v).unwrap().is_zero());
        let bad = IndexCombo::term(ix(&[2]), TPoly::constant(rat_frac(1, 5)));
        assert!(matches!(z_map_index(&ctx, &bad), Err(Error::PDividesDenominator { p: 5, .. })));
        let tv = IndexCombo::term(ix(&[3]), TPoly::t());
        assert!(z_map_index(&ctx, &tv).unwrap().is_zero());
        let half = IndexCombo::term(Index::empty(), TPoly::constant(rat_frac(-1, 2)));
        assert_eq!(z_map_index(&ctx, &half).unwrap().coeffs(), &[2]);
    }

    #[test]
    fn word_map_examples() {
        let ctx = PrimeCtx::new(5).unwrap();
        assert_eq!(z_map_word(&ctx, &word("yyx")).unwrap().coeffs(), &[1]);
        let st = s_transform(&word("yyx"), Sign::Plus).unwrap();
        assert_eq!(z_map_word_plain(&ctx, &st).unwrap(), fmzv_t_eval(&ctx, &ix(&[1, 2])).unwrap());
        assert_eq!(z_map_word(&PrimeCtx::new(7).unwrap(), &word("1")).unwrap().coeffs(), &[1]);
        assert!(z_map_word(&ctx, &word("xy")).is_err());
    }

    #[test]
    fn transport_holds_at_every_prime() {
        for p in primes_between(3, 41) {
            let ctx = PrimeCtx::new(p).unwrap();
            for k in indices_up_to(6, 6) {
                let w = WordCombo::basis(index_to_word(&k));
                let st = s_transform(&w, Sign::Plus).unwrap();
                assert_eq!(z_map_word_plain(&ctx, &st).unwrap(), z_map_word(&ctx, &w).unwrap());
            }
        }
    }
}
