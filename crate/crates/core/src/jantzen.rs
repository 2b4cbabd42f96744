//! The Jantzen sum for Weyl modules of typical weights, and Steinberg reduction of
//! atypical weights.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::borel_chain::{head_weight, is_typical, lambda_chain, HeadWeight, Typicality};
use crate::charring::{ch_h0_chain, euler_chi, euler_chi_chain, xi, Character};
use crate::error::{Error, Result, SteinbergHint};
use crate::root_data::{GLContext, HalfWeight, Root, Weight};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OddIndexMode {
    /// First factor at `λᵢ`, tail at `λᵢ + kβᵢ`.
    #[default]
    Corollary,
    /// First factor at `λ_{i−1}`, tail at `λ_{i−1} + kβᵢ`.
    StrictPaper,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Multiplicity {
    #[default]
    On,
    Off,
}

/// How the induced character for an intermediate chain Borel is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainCharacter {
    /// Weyl-symmetrized Euler characteristic, see [`euler_chi_chain`].
    #[default]
    Symmetrized,
    /// The plain product `W(μ)·Ξᵢ`.
    Product,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Modes {
    pub odd_index: OddIndexMode,
    pub multiplicity: Multiplicity,
    pub chain_character: ChainCharacter,
}

impl fmt::Display for Modes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).unwrap();
        write!(
            f,
            "odd-index {}, multiplicity {}, chain-character {}",
            v["odd_index"].as_str().unwrap(),
            v["multiplicity"].as_str().unwrap(),
            v["chain_character"].as_str().unwrap()
        )
    }
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(p: i64, x: i64) -> u32 {
    assert!(x != 0, "valuation of zero");
    let mut x = x.abs();
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

/// `λ − ((λ+ρ, α^∨) − mp)·α`.
pub fn affine_reflect(ctx: &GLContext, lambda: &Weight, alpha: &Root, mp: i64) -> Result<Weight> {
    ctx.check_weight(lambda)?;
    if !alpha.is_even() || alpha.from() > alpha.to() {
        return Err(Error::InvalidRoot(format!("{alpha} is not a positive even root")));
    }
    let c = ctx.coroot_pairing(&(&HalfWeight::from_weight(lambda) + ctx.rho0()), alpha)?;
    let c = c.to_integer();
    if mp <= 0 || mp >= c {
        return Err(Error::OutOfRange { what: "mp", value: mp, lo: 1, hi: c - 1 });
    }
    let shifted = ctx.coroot_pairing(&(&HalfWeight::from_weight(lambda) + ctx.rho()), alpha)?.to_integer();
    Ok(lambda - &alpha.to_weight().scaled(shifted - mp))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenTerm {
    pub alpha: Root,
    pub mp: i64,
    pub valuation: u32,
    /// `ν_p(mp)·χ(r_{α,mp}.λ)`.
    pub term: Character,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenSum {
    pub terms: Vec<EvenTerm>,
    pub total: Character,
}

pub fn even_sum(ctx: &GLContext, lambda: &Weight) -> Result<EvenSum> {
    ctx.require_dominant(lambda)?;
    let p = ctx.p();
    let mut jobs = vec![];
    for alpha in ctx.even_positive_roots() {
        let c = ctx.coroot_pairing(&(&HalfWeight::from_weight(lambda) + ctx.rho0()), &alpha)?.to_integer();
        let mut mp = p;
        while mp < c {
            jobs.push((alpha, mp));
            mp += p;
        }
    }
    let terms: Vec<EvenTerm> = jobs
        .into_par_iter()
        .map(|(alpha, mp)| {
            let v = valuation(p, mp);
            let reflected = affine_reflect(ctx, lambda, &alpha, mp).expect("mp inside the open interval");
            EvenTerm { alpha, mp, valuation: v, term: euler_chi(ctx, &reflected).scale(v as i64) }
        })
        .collect();
    let mut total = Character::zero();
    for t in &terms {
        total.add_scaled(&t.term, 1);
    }
    Ok(EvenSum { terms, total })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddTerm {
    pub i: usize,
    /// `(λ+ρ, βᵢ)`.
    pub pairing: i64,
    pub valuation: u32,
    pub term: Character,
    /// Tail indices `k` summed, inclusive.
    pub k_range: (i64, i64),
    /// Kept δ-content levels, inclusive.
    pub window: (i64, i64),
    /// Whether every fully summed level outside the window cancelled.
    pub residual_ok: bool,
}

fn chain_char(ctx: &GLContext, mode: ChainCharacter, i: usize, mu: &Weight) -> Character {
    match mode {
        ChainCharacter::Product => ch_h0_chain(ctx, i, mu),
        ChainCharacter::Symmetrized => euler_chi_chain(ctx, i, mu),
    }
    .expect("chain index in range")
}

fn atypical_error(ctx: &GLContext, lambda: &Weight, index: usize) -> Error {
    let hint = steinberg_reduce(ctx, lambda)
        .ok()
        .map(|s| Box::new(SteinbergHint { lambda: s.lambda, varpi: s.varpi, l: s.l }));
    Error::Atypical { lambda: lambda.clone(), index, hint }
}

fn require_typical(ctx: &GLContext, lambda: &Weight) -> Result<Typicality> {
    let t = is_typical(ctx, lambda)?;
    match t.witness {
        Some(i) => Err(atypical_error(ctx, lambda, i)),
        None => Ok(t),
    }
}

/// The cokernel term attached to `βᵢ`.
///
/// The alternating tail is infinite; each δ-content level receives finitely many
/// contributions, so summing `k ≤ i+mn+1` and keeping the levels of the leading
/// factor is exact.
pub fn odd_term(ctx: &GLContext, lambda: &Weight, i: usize, modes: Modes) -> Result<OddTerm> {
    require_typical(ctx, lambda)?;
    let pairing = ctx.shifted_odd_pairing(lambda, i)?;
    if pairing % ctx.p() != 0 {
        return Err(Error::NotApplicable(format!("(lambda+rho, beta_{i}) = {pairing} is prime to p")));
    }
    let beta = ctx.odd_root(i)?.to_weight();
    let chain = lambda_chain(ctx, lambda);
    let base = match modes.odd_index {
        OddIndexMode::Corollary => &chain[i],
        OddIndexMode::StrictPaper => &chain[i - 1],
    };
    let mn = ctx.mn() as i64;
    let kmax = i as i64 + mn + 1;
    let mut raw = chain_char(ctx, modes.chain_character, i, base);
    for k in 1..=kmax {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        raw.add_scaled(&chain_char(ctx, modes.chain_character, i - 1, &(base + &beta.scaled(k))), sign);
    }
    // the levels carried by the leading factor Ξᵢ·(base); in corollary mode this is
    // deltaSum(λ)−mn ..= deltaSum(λ)
    let ds = base.delta_sum();
    let window = (ds - (mn - i as i64), ds + i as i64);
    let inside = |w: &Weight| (window.0..=window.1).contains(&w.delta_sum());
    let low_shift = xi(ctx, i - 1)?.support().map(|w| w.delta_sum()).min().unwrap();
    let covered = base.delta_sum() + kmax + low_shift;
    let residual = raw.filter(|w| !inside(w) && w.delta_sum() <= covered);
    let v = valuation(ctx.p(), pairing);
    let mut term = raw.filter(inside);
    if modes.multiplicity == Multiplicity::On {
        term = term.scale(v as i64);
    }
    Ok(OddTerm { i, pairing, valuation: v, term, k_range: (1, kmax), window, residual_ok: residual.is_zero() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JantzenReport {
    pub lambda: Weight,
    pub typicality: Typicality,
    pub even_terms: Vec<EvenTerm>,
    pub odd_terms: Vec<OddTerm>,
    pub total: Character,
    pub modes: Modes,
    pub head: HeadWeight,
}

pub fn jantzen_sum(ctx: &GLContext, lambda: &Weight, modes: Modes) -> Result<JantzenReport> {
    ctx.require_dominant(lambda)?;
    let typicality = require_typical(ctx, lambda)?;
    let even = even_sum(ctx, lambda)?;
    let p = ctx.p();
    let odd_terms: Vec<OddTerm> = (1..=ctx.mn())
        .into_par_iter()
        .filter(|&i| typicality.pairings[i - 1] % p == 0)
        .map(|i| odd_term(ctx, lambda, i, modes))
        .collect::<Result<_>>()?;
    let mut total = even.total.clone();
    for t in &odd_terms {
        total.add_scaled(&t.term, 1);
    }
    Ok(JantzenReport {
        lambda: lambda.clone(),
        typicality,
        even_terms: even.terms,
        odd_terms,
        total,
        modes,
        head: head_weight(ctx, lambda)?,
    })
}

fn digits_base(mut x: i64, p: i64) -> Vec<i64> {
    let mut out = vec![];
    while x > 0 {
        out.push(x % p);
        x /= p;
    }
    out
}

/// `μ = Σ pᵗ μ_t` with every `μ_t` in the restricted region; the last coordinate of each
/// block goes to `μ₀`.
pub fn p_adic_digits(ctx: &GLContext, mu: &Weight) -> Result<Vec<Weight>> {
    ctx.require_dominant(mu)?;
    let p = ctx.p();
    let expand = |v: &[i64]| -> Vec<Vec<i64>> { v.windows(2).map(|w| digits_base(w[0] - w[1], p)).collect() };
    let (dd, de) = (expand(&mu.delta), expand(&mu.eps));
    let len = dd.iter().chain(de.iter()).map(|d| d.len()).max().unwrap_or(0).max(1);
    let rebuild = |diffs: &[Vec<i64>], last: i64, t: usize| -> Vec<i64> {
        let k = diffs.len() + 1;
        let mut out = vec![0; k];
        out[k - 1] = if t == 0 { last } else { 0 };
        for j in (0..k - 1).rev() {
            out[j] = out[j + 1] + diffs[j].get(t).copied().unwrap_or(0);
        }
        out
    };
    Ok((0..len)
        .map(|t| Weight::new(rebuild(&dd, *mu.delta.last().unwrap(), t), rebuild(&de, *mu.eps.last().unwrap(), t)))
        .collect())
}

/// Consecutive differences all in `0..p`.
pub fn is_restricted(ctx: &GLContext, mu: &Weight) -> bool {
    let ok = |v: &[i64]| v.windows(2).all(|w| (0..ctx.p()).contains(&(w[0] - w[1])));
    ok(&mu.delta) && ok(&mu.eps)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinbergReduction {
    pub lambda: Weight,
    pub varpi: Weight,
    pub l: u32,
    pub digits: Vec<Weight>,
    /// Set when `ϖ` carries an extra copy of `δ₁+…+δ_m`.
    pub det_twist: bool,
}

/// Pad an atypical `μ` by `pˡϖ` until it becomes typical.
///
/// `ϖ` is the sum of the fundamental weights `δ₁+…+δᵢ`. When `μ` is atypical along a root
/// through `δ_m`, no power of `p` helps, and `ϖ` is replaced by `ϖ + δ₁+…+δ_m`.
pub fn steinberg_reduce(ctx: &GLContext, mu: &Weight) -> Result<SteinbergReduction> {
    ctx.require_dominant(mu)?;
    if ctx.m() == 1 {
        return Err(Error::ReductionUnavailable("GL(1|n) has no fundamental weights to pad with".into()));
    }
    if is_typical(ctx, mu)?.holds {
        return Err(Error::AlreadyTypical(mu.clone()));
    }
    let digits = p_adic_digits(ctx, mu)?;
    let r = digits.len() as u32 - 1;
    let m = ctx.m() as i64;
    for det_twist in [false, true] {
        let extra = det_twist as i64;
        let varpi = Weight::new((0..m).map(|k| m - 1 - k + extra).collect(), vec![0; ctx.n()]);
        for l in r + 1..=r + 2 + ctx.mn() as u32 {
            let scale = ctx.p().checked_pow(l).ok_or(Error::Overflow("p^l"))?;
            let mut lambda = mu.clone();
            for (x, v) in lambda.delta.iter_mut().zip(&varpi.delta) {
                *x = v.checked_mul(scale).and_then(|y| x.checked_add(y)).ok_or(Error::Overflow("mu + p^l varpi"))?;
            }
            if is_typical(ctx, &lambda)?.holds {
                return Ok(SteinbergReduction { lambda, varpi, l, digits, det_twist });
            }
        }
    }
    unreachable!("a determinant-twisted padding always reaches a typical weight")
}
