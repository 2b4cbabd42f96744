//! Formal characters in `ℤ[X(T)]` and the character formulas built from them.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::borel_chain::{xi_support, OddPositiveSet};
use crate::error::{Error, Result};
use crate::root_data::{GLContext, HalfWeight, Weight};
use crate::weyl::{make_dominant_regular, WeylElement};

/// A finitely supported integer combination of `e^μ`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Character {
    terms: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn zero() -> Self {
        Character::default()
    }

    pub fn monomial(w: Weight) -> Self {
        Self::term(w, 1)
    }

    pub fn term(w: Weight, c: i64) -> Self {
        let mut ch = Character::zero();
        ch.add_term(w, c);
        ch
    }

    /// `e^0`.
    pub fn one(m: usize, n: usize) -> Self {
        Self::monomial(Weight::zero(m, n))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut ch = Character::zero();
        for (w, c) in terms {
            ch.add_term(w, c);
        }
        ch
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Character, c: i64) {
        if c == 0 {
            return;
        }
        for (w, &v) in &other.terms {
            match self.terms.get_mut(w) {
                Some(e) => {
                    *e += c * v;
                    if *e == 0 {
                        self.terms.remove(w);
                    }
                }
                None => {
                    self.terms.insert(w.clone(), c * v);
                }
            }
        }
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending weight order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// Terms in the printing order (descending).
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.iter().rev()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn scale(&self, c: i64) -> Character {
        let mut out = Character::zero();
        out.add_scaled(self, c);
        out
    }

    /// Multiply by `e^μ`.
    pub fn shift(&self, mu: &Weight) -> Character {
        Character { terms: self.terms.iter().map(|(w, &c)| (w + mu, c)).collect() }
    }

    /// `e^μ ↦ e^{−μ}`.
    pub fn dual(&self) -> Character {
        Character { terms: self.terms.iter().map(|(w, &c)| (-w, c)).collect() }
    }

    /// Value at `e^μ → 1`.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn filter(&self, keep: impl Fn(&Weight) -> bool) -> Character {
        Character { terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, &c)| (w.clone(), c)).collect() }
    }

    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> Character {
        Character::from_terms(self.terms.iter().map(|(w, &c)| (f(w), c)))
    }

    /// Exact quotient by `d`, if `d` divides `self`.
    pub fn div_exact(&self, d: &Character) -> Option<Character> {
        let (lead, lc) = d.terms.iter().next_back().map(|(w, &c)| (w.clone(), c))?;
        let mut rem = self.clone();
        let mut q = Character::zero();
        let budget = 64 * (self.len() + 1) * (d.len() + 1) + 4096;
        for _ in 0..budget {
            let (top, tc) = match rem.terms.iter().next_back() {
                None => return Some(q),
                Some((w, &c)) => (w.clone(), c),
            };
            if tc % lc != 0 {
                return None;
            }
            let qw = &top - &lead;
            let qc = tc / lc;
            rem.add_scaled(&d.shift(&qw), -qc);
            q.add_term(qw, qc);
        }
        None
    }

    pub fn to_json(&self, m: usize, n: usize) -> CharacterJson {
        CharacterJson {
            m,
            n,
            terms: self.iter_desc().map(|(w, c)| TermJson { weight: w.clone(), coeff: c }).collect(),
        }
    }

    pub fn from_json(j: &CharacterJson) -> Result<Character> {
        for t in &j.terms {
            if t.weight.m() != j.m || t.weight.n() != j.n {
                return Err(Error::Shape { expected: format!("GL({}|{})", j.m, j.n), got: t.weight.to_string() });
            }
        }
        Ok(Character::from_terms(j.terms.iter().map(|t| (t.weight.clone(), t.coeff))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub weight: Weight,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub m: usize,
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let lines: Vec<String> = self.iter_desc().map(|(w, c)| format!("{c} * e[{w}]")).collect();
        write!(f, "{}", lines.join("\n"))
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, o: &Character) -> Character {
        let mut out = self.clone();
        out.add_scaled(o, 1);
        out
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, o: &Character) -> Character {
        let mut out = self.clone();
        out.add_scaled(o, -1);
        out
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        self.scale(-1)
    }
}

impl Mul for &Character {
    type Output = Character;
    fn mul(self, o: &Character) -> Character {
        let mut acc: HashMap<Weight, i64> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                *acc.entry(a + b).or_insert(0) += ca * cb;
            }
        }
        Character { terms: acc.into_iter().filter(|(_, c)| *c != 0).collect() }
    }
}

impl Add for Character {
    type Output = Character;
    fn add(self, o: Character) -> Character {
        &self + &o
    }
}

impl Sub for Character {
    type Output = Character;
    fn sub(self, o: Character) -> Character {
        &self - &o
    }
}

impl Mul for Character {
    type Output = Character;
    fn mul(self, o: Character) -> Character {
        &self * &o
    }
}

type BlockPoly = Vec<(Vec<i64>, i64)>;

fn block_cache() -> &'static Mutex<HashMap<Vec<i64>, Arc<BlockPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<i64>, Arc<BlockPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Monomials of degree `r` in `k` variables.
fn complete_homogeneous(k: usize, r: i64) -> HashMap<Vec<i64>, i64> {
    let mut out = HashMap::new();
    if r < 0 {
        return out;
    }
    if k == 0 {
        if r == 0 {
            out.insert(vec![], 1);
        }
        return out;
    }
    fn rec(k: usize, r: i64, cur: &mut Vec<i64>, out: &mut HashMap<Vec<i64>, i64>) {
        if cur.len() + 1 == k {
            cur.push(r);
            out.insert(cur.clone(), 1);
            cur.pop();
            return;
        }
        for a in (0..=r).rev() {
            cur.push(a);
            rec(k, r - a, cur, out);
            cur.pop();
        }
    }
    rec(k, r, &mut vec![], &mut out);
    out
}

fn poly_mul(a: &HashMap<Vec<i64>, i64>, b: &HashMap<Vec<i64>, i64>) -> HashMap<Vec<i64>, i64> {
    let mut out = HashMap::new();
    for (x, cx) in a {
        for (y, cy) in b {
            let e: Vec<i64> = x.iter().zip(y).map(|(u, v)| u + v).collect();
            *out.entry(e).or_insert(0) += cx * cy;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Schur polynomial of a weakly decreasing integer vector, via Jacobi–Trudi
/// after factoring out the determinant power.
fn schur_block(parts: &[i64]) -> Arc<BlockPoly> {
    if let Some(p) = block_cache().lock().unwrap().get(parts) {
        return p.clone();
    }
    let k = parts.len();
    let poly: BlockPoly = if k == 0 {
        vec![(vec![], 1)]
    } else {
        let low = *parts.last().unwrap();
        let lam: Vec<i64> = parts.iter().map(|x| x - low).collect();
        let mut total: HashMap<Vec<i64>, i64> = HashMap::new();
        let mut h_cache: HashMap<i64, HashMap<Vec<i64>, i64>> = HashMap::new();
        for perm in (0..k).permutations(k) {
            let sign = if perm.iter().enumerate().flat_map(|(i, &a)| perm[i + 1..].iter().map(move |&b| a > b)).filter(|&x| x).count() % 2 == 0 { 1 } else { -1 };
            let mut prod: HashMap<Vec<i64>, i64> = HashMap::from([(vec![0; k], 1)]);
            let mut dead = false;
            for (i, &j) in perm.iter().enumerate() {
                let r = lam[i] - i as i64 + j as i64;
                if r < 0 {
                    dead = true;
                    break;
                }
                let h = h_cache.entry(r).or_insert_with(|| complete_homogeneous(k, r));
                prod = poly_mul(&prod, h);
            }
            if dead {
                continue;
            }
            for (e, c) in prod {
                *total.entry(e).or_insert(0) += sign * c;
            }
        }
        total
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(e, c)| (e.into_iter().map(|x| x + low).collect(), c))
            .collect()
    };
    let poly = Arc::new(poly);
    block_cache().lock().unwrap().insert(parts.to_vec(), poly.clone());
    poly
}

/// `W(λ)`, the character of the even induced module; zero off the dominant chamber.
pub fn schur_even(ctx: &GLContext, lambda: &Weight) -> Character {
    if !ctx.is_dominant(lambda) {
        return Character::zero();
    }
    let d = schur_block(&lambda.delta);
    let e = schur_block(&lambda.eps);
    let mut out = Character::zero();
    for (a, ca) in d.iter() {
        for (b, cb) in e.iter() {
            out.terms.insert(Weight::new(a.clone(), b.clone()), ca * cb);
        }
    }
    out
}

/// `Σ_w det(w) e^{w(μ)}` over the even Weyl group.
pub fn alternant(ctx: &GLContext, mu: &Weight) -> Character {
    Character::from_terms(WeylElement::all(ctx.m(), ctx.n()).into_iter().map(|w| (w.act_weight(mu), w.sign())))
}

/// `W(λ)` as the alternant quotient `A(λ+ρ′)/A(ρ′)` with the integral shift `ρ′ = (m−1,…,0 | n−1,…,0)`.
pub fn schur_even_alternant(ctx: &GLContext, lambda: &Weight) -> Character {
    if !ctx.is_dominant(lambda) {
        return Character::zero();
    }
    let shift = Weight::new((0..ctx.m() as i64).rev().collect(), (0..ctx.n() as i64).rev().collect());
    alternant(ctx, &(lambda + &shift)).div_exact(&alternant(ctx, &shift)).expect("alternant quotient is exact")
}

/// `Π (1 + e^{−γ})` over the positive odd roots `γ` of the support.
pub fn xi_product(ctx: &GLContext, support: &OddPositiveSet) -> Character {
    let mut out = Character::one(ctx.m(), ctx.n());
    for g in support.roots(ctx) {
        let f = Character::from_terms([(Weight::zero(ctx.m(), ctx.n()), 1), (-&g.to_weight(), 1)]);
        out = &out * &f;
    }
    out
}

/// `Ξᵢ`.
pub fn xi(ctx: &GLContext, i: usize) -> Result<Character> {
    Ok(xi_product(ctx, &xi_support(ctx, i)?))
}

pub fn euler_chi0(ctx: &GLContext, mu: &Weight) -> Character {
    let shifted = &HalfWeight::from_weight(mu) + ctx.rho0();
    match make_dominant_regular(&shifted) {
        None => Character::zero(),
        Some((w, dom)) => {
            let base = (&dom - ctx.rho0()).to_weight().expect("integral dominant shift");
            schur_even(ctx, &base).scale(w.sign())
        }
    }
}

/// `χ(μ) = χ₀(μ)·Ξ`.
pub fn euler_chi(ctx: &GLContext, mu: &Weight) -> Character {
    &euler_chi0(ctx, mu) * &xi(ctx, 0).unwrap()
}

pub fn ch_h0(ctx: &GLContext, lambda: &Weight) -> Character {
    &schur_even(ctx, lambda) * &xi(ctx, 0).unwrap()
}

/// Computed from the block-reversed weight: the dual of `W(−w₀λ)·Ξ_{mn}`.
pub fn ch_weyl(ctx: &GLContext, lambda: &Weight) -> Character {
    let flipped = -&lambda.reversed();
    (&schur_even(ctx, &flipped) * &xi(ctx, ctx.mn()).unwrap()).dual()
}

/// `W(μ)·Ξᵢ`.
pub fn ch_h0_chain(ctx: &GLContext, i: usize, mu: &Weight) -> Result<Character> {
    Ok(&schur_even(ctx, mu) * &xi(ctx, i)?)
}

/// Euler characteristic of the line bundle `μ` for the i-th chain Borel:
/// `Σ_γ c_γ χ₀(μ+γ)` over the monomials `c_γ e^γ` of `Ξᵢ`.
///
/// Agrees with [`ch_h0_chain`] whenever `Ξᵢ` is Weyl-invariant (i = 0, i = mn, or `W` trivial).
pub fn euler_chi_chain(ctx: &GLContext, i: usize, mu: &Weight) -> Result<Character> {
    let mut out = Character::zero();
    for (g, c) in xi(ctx, i)?.iter() {
        out.add_scaled(&euler_chi0(ctx, &(mu + g)), c);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalCharacter {
    pub character: Character,
    /// Set when `λ − 2ρ₁` is not dominant and the character is zero.
    pub warning: bool,
}

/// Induction from the last chain Borel at `λ − 2ρ₁`.
pub fn ch_total(ctx: &GLContext, lambda: &Weight) -> Result<TotalCharacter> {
    ctx.require_dominant(lambda)?;
    let nu = lambda - &ctx.two_rho1();
    if !ctx.is_dominant(&nu) {
        return Ok(TotalCharacter { character: Character::zero(), warning: true });
    }
    Ok(TotalCharacter { character: ch_h0_chain(ctx, ctx.mn(), &nu)?, warning: false })
}

pub fn ch_kac(ctx: &GLContext, even_char: &Character) -> Character {
    &xi(ctx, 0).unwrap() * even_char
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KacCharacter {
    pub character: Character,
    pub even_irreducibility_assumed: bool,
}

/// Kac character with `W(λ)` standing in for the even irreducible character.
pub fn ch_kac_assumed(ctx: &GLContext, lambda: &Weight) -> KacCharacter {
    KacCharacter { character: ch_kac(ctx, &schur_even(ctx, lambda)), even_irreducibility_assumed: true }
}
