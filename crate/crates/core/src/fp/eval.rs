use super::{FpPoly, FpScalar, PrimeCtx};
use crate::error::{Error, Result};
use crate::index::Index;

/// Depth limit for the contraction expansion.
pub const MAX_T_DEPTH: usize = 12;

/// Truncated sum over `1 <= m_1 < ... < m_r < p` (or `<=` when `star`).
/// The empty index gives 1.
pub fn fmzv_eval(ctx: &PrimeCtx, k: &Index, star: bool) -> FpScalar {
    let p = ctx.p();
    let parts = k.parts();
    let r = parts.len();
    let max_k = parts.iter().copied().max().unwrap_or(0) as usize;
    let mut acc = vec![0u64; r + 1];
    acc[0] = 1;
    let mut pw = vec![1u64; max_k + 1];
    for m in 1..p {
        let im = ctx.inv(m);
        for e in 1..=max_k {
            pw[e] = pw[e - 1] * im % p;
        }
        if star {
            for j in 1..=r {
                acc[j] = (acc[j] + acc[j - 1] * pw[parts[j - 1] as usize]) % p;
            }
        } else {
            for j in (1..=r).rev() {
                acc[j] = (acc[j] + acc[j - 1] * pw[parts[j - 1] as usize]) % p;
            }
        }
    }
    acc[r]
}

/// Assembles `sum_q f(q) t^(pluses)` over the contractions `q` of `k`.
pub fn t_poly_from_strict(
    ctx: &PrimeCtx,
    k: &Index,
    mut strict: impl FnMut(&Index) -> FpScalar,
) -> Result<FpPoly> {
    if k.depth() > MAX_T_DEPTH {
        return Err(Error::CostGuard(format!(
            "depth {} exceeds {MAX_T_DEPTH} for the t-expansion of {k}",
            k.depth()
        )));
    }
    if k.is_empty() {
        return Ok(FpPoly::constant(ctx.p(), 1));
    }
    let mut coeffs = vec![0u64; k.depth()];
    for (q, pluses) in k.contractions() {
        let c = &mut coeffs[pluses as usize];
        *c = (*c + strict(&q)) % ctx.p();
    }
    Ok(FpPoly::from_coeffs(ctx.p(), coeffs))
}

/// `zeta_p^t(k)` as a polynomial in `t`.
pub fn fmzv_t_eval(ctx: &PrimeCtx, k: &Index) -> Result<FpPoly> {
    t_poly_from_strict(ctx, k, |q| fmzv_eval(ctx, q, false))
}

pub(crate) fn bernoulli_table(ctx: &PrimeCtx) -> Vec<u64> {
    let p = ctx.p();
    let top = (p - 2) as usize;
    let mut b = vec![0u64; top + 1];
    b[0] = 1;
    // row holds C(n + 1, j) mod p
    let mut row = vec![1u64, 1];
    for n in 1..=top {
        let mut next = vec![1u64; n + 2];
        for j in 1..=n {
            next[j] = (row[j - 1] + row[j]) % p;
        }
        row = next;
        let s = (0..n).fold(0, |acc, j| (acc + row[j] * b[j]) % p);
        b[n] = ctx.mul(ctx.neg(s), ctx.inv(n as u64 + 1));
    }
    b
}

/// `B_n mod p` for `0 <= n <= p - 2`, with `B_1 = -1/2`.
pub fn bernoulli_mod(ctx: &PrimeCtx, n: u64) -> Result<FpScalar> {
    if n + 2 > ctx.p() {
        return Err(Error::OutOfRange(format!(
            "B_{n} is not p-integral for p = {}; need n <= p - 2",
            ctx.p()
        )));
    }
    Ok(ctx.bernoulli_table()[n as usize])
}

/// `B_{p-k} / k mod p`.
pub fn z_a_single(ctx: &PrimeCtx, k: u32) -> Result<FpScalar> {
    let p = ctx.p();
    if k < 2 || p < u64::from(k) + 2 {
        return Err(Error::OutOfRange(format!("need k >= 2 and p >= k + 2, got k={k}, p={p}")));
    }
    Ok(ctx.mul(bernoulli_mod(ctx, p - u64::from(k))?, ctx.inv(u64::from(k))))
}

/// Literal nested-loop sum with inverses from Fermat's little theorem.
pub fn brute_oracle(ctx: &PrimeCtx, k: &Index, star: bool) -> Result<FpScalar> {
    let p = ctx.p();
    if p > 31 || k.depth() > 4 {
        return Err(Error::CostGuard(format!("brute force needs p <= 31 and depth <= 4, got p={p}, {k}")));
    }
    fn go(ctx: &PrimeCtx, parts: &[u32], lo: u64, star: bool) -> u64 {
        let Some((&k, rest)) = parts.split_first() else {
            return 1;
        };
        let p = ctx.p();
        let mut total = 0;
        for m in lo..p {
            let term = ctx.pow(ctx.pow(m, p - 2), u64::from(k));
            let next = if star { m } else { m + 1 };
            total = (total + term * go(ctx, rest, next, star)) % p;
        }
        total
    }
    Ok(go(ctx, k.parts(), 1, star))
}
