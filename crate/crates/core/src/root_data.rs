//! Weight lattice, bilinear form and root system of GL(m|n).

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::borel_chain::SimpleSystem;
use crate::error::{Error, Result};

/// An integral weight `Σ aᵢδᵢ + Σ bⱼεⱼ`.
///
/// The derived order compares the δ-block first, then the ε-block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub delta: Vec<i64>,
    pub eps: Vec<i64>,
}

impl Weight {
    pub fn new(delta: Vec<i64>, eps: Vec<i64>) -> Self {
        Weight { delta, eps }
    }

    pub fn zero(m: usize, n: usize) -> Self {
        Weight { delta: vec![0; m], eps: vec![0; n] }
    }

    /// Split a flat coordinate vector after the first `m` entries.
    pub fn from_coords(m: usize, coords: &[i64]) -> Self {
        Weight { delta: coords[..m].to_vec(), eps: coords[m..].to_vec() }
    }

    pub fn m(&self) -> usize {
        self.delta.len()
    }

    pub fn n(&self) -> usize {
        self.eps.len()
    }

    pub fn coords(&self) -> Vec<i64> {
        self.delta.iter().chain(self.eps.iter()).copied().collect()
    }

    /// Coordinate `k` in the flat layout (δ-block first).
    pub fn coord(&self, k: usize) -> i64 {
        if k < self.m() {
            self.delta[k]
        } else {
            self.eps[k - self.m()]
        }
    }

    pub fn coord_mut(&mut self, k: usize) -> &mut i64 {
        let m = self.m();
        if k < m {
            &mut self.delta[k]
        } else {
            &mut self.eps[k - m]
        }
    }

    pub fn delta_sum(&self) -> i64 {
        self.delta.iter().sum()
    }

    pub fn eps_sum(&self) -> i64 {
        self.eps.iter().sum()
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            delta: self.delta.iter().map(|x| x * k).collect(),
            eps: self.eps.iter().map(|x| x * k).collect(),
        }
    }

    pub fn same_shape(&self, other: &Weight) -> bool {
        self.m() == other.m() && self.n() == other.n()
    }

    /// Block reversal, the action of the longest even Weyl element.
    pub fn reversed(&self) -> Weight {
        let mut w = self.clone();
        w.delta.reverse();
        w.eps.reverse();
        w
    }
}

fn zip_with(a: &[i64], b: &[i64], f: impl Fn(i64, i64) -> i64) -> Vec<i64> {
    assert_eq!(a.len(), b.len(), "weight shape mismatch");
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight { delta: zip_with(&self.delta, &o.delta, |x, y| x + y), eps: zip_with(&self.eps, &o.eps, |x, y| x + y) }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight { delta: zip_with(&self.delta, &o.delta, |x, y| x - y), eps: zip_with(&self.eps, &o.eps, |x, y| x - y) }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        &self + &o
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        &self - &o
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", join(&self.delta), join(&self.eps))
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses `a1,...,am|b1,...,bn`.
    fn from_str(s: &str) -> Result<Weight> {
        let s = s.trim();
        let (d, e) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("weight literal `{s}` lacks `|`")))?;
        if e.contains('|') {
            return Err(Error::Parse(format!("weight literal `{s}` has more than one `|`")));
        }
        let block = |b: &str| -> Result<Vec<i64>> {
            if b.trim().is_empty() {
                return Ok(vec![]);
            }
            b.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad integer `{}` in `{s}`", t.trim())))
                })
                .collect()
        };
        Ok(Weight { delta: block(d)?, eps: block(e)? })
    }
}

/// A weight with possibly half-integral entries, stored doubled.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfWeight {
    m: usize,
    doubled: Vec<i64>,
}

impl HalfWeight {
    pub fn from_doubled(m: usize, doubled: Vec<i64>) -> Self {
        assert!(m <= doubled.len());
        HalfWeight { m, doubled }
    }

    pub fn from_weight(w: &Weight) -> Self {
        HalfWeight { m: w.m(), doubled: w.coords().iter().map(|x| 2 * x).collect() }
    }

    /// `None` if some entry is half-integral.
    pub fn to_weight(&self) -> Option<Weight> {
        if self.doubled.iter().any(|x| x % 2 != 0) {
            return None;
        }
        let c: Vec<i64> = self.doubled.iter().map(|x| x / 2).collect();
        Some(Weight::from_coords(self.m, &c))
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.doubled.len() - self.m
    }

    pub fn delta_doubled(&self) -> &[i64] {
        &self.doubled[..self.m]
    }

    pub fn eps_doubled(&self) -> &[i64] {
        &self.doubled[self.m..]
    }

    pub fn entry(&self, k: usize) -> Rational64 {
        Rational64::new(self.doubled[k], 2)
    }

    fn check(&self, o: &HalfWeight) {
        assert!(self.m == o.m && self.doubled.len() == o.doubled.len(), "half-weight shape mismatch");
    }
}

impl Add for &HalfWeight {
    type Output = HalfWeight;
    fn add(self, o: &HalfWeight) -> HalfWeight {
        self.check(o);
        HalfWeight { m: self.m, doubled: zip_with(&self.doubled, &o.doubled, |x, y| x + y) }
    }
}

impl Sub for &HalfWeight {
    type Output = HalfWeight;
    fn sub(self, o: &HalfWeight) -> HalfWeight {
        self.check(o);
        HalfWeight { m: self.m, doubled: zip_with(&self.doubled, &o.doubled, |x, y| x - y) }
    }
}

impl fmt::Display for HalfWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x: &i64| if x % 2 == 0 { (x / 2).to_string() } else { format!("{x}/2") };
        let d: Vec<String> = self.delta_doubled().iter().map(show).collect();
        let e: Vec<String> = self.eps_doubled().iter().map(show).collect();
        write!(f, "{}|{}", d.join(","), e.join(","))
    }
}

/// The root `σ_from − σ_to`, indices 0-based in the flat layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    m: usize,
    n: usize,
    from: usize,
    to: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Root {
    pub fn new(m: usize, n: usize, from: usize, to: usize) -> Result<Root> {
        if from == to || from >= m + n || to >= m + n {
            return Err(Error::InvalidRoot(format!("indices ({from}, {to}) for GL({m}|{n})")));
        }
        Ok(Root { m, n, from, to })
    }

    pub fn from(&self) -> usize {
        self.from
    }

    pub fn to(&self) -> usize {
        self.to
    }

    pub fn parity(&self) -> Parity {
        if (self.from < self.m) == (self.to < self.m) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == Parity::Odd
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    pub fn neg(&self) -> Root {
        Root { from: self.to, to: self.from, ..*self }
    }

    pub fn to_weight(&self) -> Weight {
        let mut w = Weight::zero(self.m, self.n);
        *w.coord_mut(self.from) += 1;
        *w.coord_mut(self.to) -= 1;
        w
    }

    fn sign(&self, k: usize) -> i64 {
        if k < self.m {
            1
        } else {
            -1
        }
    }

    /// The bilinear form on two roots.
    pub fn pairing(&self, o: &Root) -> i64 {
        let coeff = |r: &Root, k: usize| -> i64 {
            (r.from == k) as i64 - (r.to == k) as i64
        };
        let mut s = 0;
        for k in [self.from, self.to] {
            s += self.sign(k) * coeff(self, k) * coeff(o, k);
        }
        s
    }

    fn label(&self, k: usize) -> String {
        if k < self.m {
            format!("d{}", k + 1)
        } else {
            format!("e{}", k - self.m + 1)
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.label(self.from), self.label(self.to))
    }
}

/// Fixed `(m, n, p)` together with cached root data.
#[derive(Debug, Clone)]
pub struct GLContext {
    m: usize,
    n: usize,
    p: i64,
    odd_roots: Vec<Root>,
    rho0: HalfWeight,
    rho1: HalfWeight,
    rho: HalfWeight,
    chain: OnceLock<Vec<SimpleSystem>>,
}

pub fn is_odd_prime(p: i64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl GLContext {
    pub fn new(m: usize, n: usize, p: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::OutOfRange { what: "m", value: 0, lo: 1, hi: i64::MAX });
        }
        if n == 0 {
            return Err(Error::OutOfRange { what: "n", value: 0, lo: 1, hi: i64::MAX });
        }
        if !is_odd_prime(p) {
            return Err(Error::BadPrime(p));
        }
        let odd_roots = (1..=m * n)
            .map(|i| {
                let (q, r) = ((i - 1) / n, (i - 1) % n);
                Root { m, n, from: m - q - 1, to: m + r }
            })
            .collect();
        let (mi, ni) = (m as i64, n as i64);
        let mut r0 = Vec::with_capacity(m + n);
        let mut r1 = Vec::with_capacity(m + n);
        for i in 1..=mi {
            r0.push(mi - 2 * i + 1);
            r1.push(ni);
        }
        for j in 1..=ni {
            r0.push(ni - 2 * j + 1);
            r1.push(-mi);
        }
        let rho0 = HalfWeight::from_doubled(m, r0);
        let rho1 = HalfWeight::from_doubled(m, r1);
        let rho = &rho0 - &rho1;
        Ok(GLContext { m, n, p, odd_roots, rho0, rho1, rho, chain: OnceLock::new() })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn mn(&self) -> usize {
        self.m * self.n
    }

    pub(crate) fn chain_cache(&self) -> &OnceLock<Vec<SimpleSystem>> {
        &self.chain
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.m() != self.m || w.n() != self.n {
            return Err(Error::Shape {
                expected: format!("{} delta and {} eps entries", self.m, self.n),
                got: format!("{} delta and {} eps entries", w.m(), w.n()),
            });
        }
        Ok(())
    }

    /// Parse a weight literal and check its shape against the context.
    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        let w: Weight = s.parse()?;
        self.check_weight(&w)?;
        Ok(w)
    }

    pub fn root(&self, from: usize, to: usize) -> Result<Root> {
        Root::new(self.m, self.n, from, to)
    }

    /// `(ρ₀, ρ₁, ρ)`.
    pub fn rho_vectors(&self) -> (&HalfWeight, &HalfWeight, &HalfWeight) {
        (&self.rho0, &self.rho1, &self.rho)
    }

    pub fn rho0(&self) -> &HalfWeight {
        &self.rho0
    }

    pub fn rho1(&self) -> &HalfWeight {
        &self.rho1
    }

    pub fn rho(&self) -> &HalfWeight {
        &self.rho
    }

    /// `2ρ₁ = (n,…,n | −m,…,−m)`.
    pub fn two_rho1(&self) -> Weight {
        Weight::new(vec![self.n as i64; self.m], vec![-(self.m as i64); self.n])
    }

    fn same_context(&self, mu: &HalfWeight) -> Result<()> {
        if mu.m() != self.m || mu.n() != self.n {
            return Err(Error::Shape {
                expected: format!("GL({}|{})", self.m, self.n),
                got: format!("GL({}|{})", mu.m(), mu.n()),
            });
        }
        Ok(())
    }

    /// The super form `Σδ μᵢνᵢ − Σε μⱼνⱼ`.
    pub fn pairing(&self, mu: &HalfWeight, nu: &HalfWeight) -> Result<Rational64> {
        self.same_context(mu)?;
        self.same_context(nu)?;
        let (a, b) = (mu.doubled(), nu.doubled());
        let mut s = 0i64;
        for k in 0..self.m + self.n {
            let t = a[k] * b[k];
            s += if k < self.m { t } else { -t };
        }
        Ok(Rational64::new(s, 4))
    }

    /// Pairing of integral weights.
    pub fn form(&self, mu: &Weight, nu: &Weight) -> i64 {
        let d: i64 = mu.delta.iter().zip(&nu.delta).map(|(x, y)| x * y).sum();
        let e: i64 = mu.eps.iter().zip(&nu.eps).map(|(x, y)| x * y).sum();
        d - e
    }

    /// `2(μ,α)/(α,α)` for an even root α.
    pub fn coroot_pairing(&self, mu: &HalfWeight, alpha: &Root) -> Result<Rational64> {
        self.same_context(mu)?;
        if alpha.is_odd() {
            return Err(Error::InvalidRoot(format!("{alpha} is odd and has no coroot")));
        }
        let d = mu.doubled();
        Ok(Rational64::new(d[alpha.from] - d[alpha.to], 2))
    }

    /// Coroot pairing of an integral weight.
    pub fn coroot_int(&self, mu: &Weight, alpha: &Root) -> Result<i64> {
        if alpha.is_odd() {
            return Err(Error::InvalidRoot(format!("{alpha} is odd and has no coroot")));
        }
        Ok(mu.coord(alpha.from) - mu.coord(alpha.to))
    }

    /// `(μ, α)` for μ integral and any root α.
    pub fn root_pairing(&self, mu: &Weight, alpha: &Root) -> i64 {
        let s = |k: usize| if k < self.m { 1 } else { -1 };
        s(alpha.from) * mu.coord(alpha.from) - s(alpha.to) * mu.coord(alpha.to)
    }

    /// `βᵢ`, 1-based.
    pub fn odd_root(&self, i: usize) -> Result<Root> {
        if i == 0 || i > self.mn() {
            return Err(Error::OutOfRange { what: "odd root index", value: i as i64, lo: 1, hi: self.mn() as i64 });
        }
        Ok(self.odd_roots[i - 1])
    }

    pub fn odd_roots(&self) -> &[Root] {
        &self.odd_roots
    }

    /// Position `i` with `βᵢ = δ_s − ε_t` (s, t 1-based).
    pub fn odd_index(&self, s: usize, t: usize) -> usize {
        (self.m - s) * self.n + t
    }

    pub fn even_positive_roots(&self) -> Vec<Root> {
        let mut out = vec![];
        for (lo, hi) in [(0, self.m), (self.m, self.m + self.n)] {
            for a in lo..hi {
                for b in a + 1..hi {
                    out.push(Root { m: self.m, n: self.n, from: a, to: b });
                }
            }
        }
        out
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        let mut out = self.even_positive_roots();
        out.extend(self.odd_roots.iter().copied());
        out
    }

    /// `(λ+ρ, βᵢ)`; always an integer.
    pub fn shifted_odd_pairing(&self, lambda: &Weight, i: usize) -> Result<i64> {
        let beta = self.odd_root(i)?;
        let v = self.pairing(&(&HalfWeight::from_weight(lambda) + &self.rho), &HalfWeight::from_weight(&beta.to_weight()))?;
        assert!(v.is_integer(), "(lambda+rho, beta) must be integral");
        Ok(v.to_integer())
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.delta.windows(2).all(|w| w[0] >= w[1]) && lambda.eps.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn require_dominant(&self, lambda: &Weight) -> Result<()> {
        self.check_weight(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.clone()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(ctx: &GLContext, s: &str) -> HalfWeight {
        HalfWeight::from_weight(&ctx.parse_weight(s).unwrap())
    }

    #[test]
    fn context_rejects_bad_input() {
        assert_eq!(GLContext::new(2, 1, 2).unwrap_err().code(), "E_BAD_PRIME");
        assert_eq!(GLContext::new(2, 1, 9).unwrap_err().code(), "E_BAD_PRIME");
        assert!(GLContext::new(0, 1, 3).is_err());
        assert!(GLContext::new(3, 4, 11).is_ok());
    }

    #[test]
    fn pairing_examples() {
        let ctx = GLContext::new(2, 1, 3).unwrap();
        assert_eq!(ctx.pairing(&hw(&ctx, "1,0|0"), &hw(&ctx, "1,0|0")).unwrap(), Rational64::from(1));
        assert_eq!(ctx.pairing(&hw(&ctx, "1,0|0"), &hw(&ctx, "0,0|1")).unwrap(), Rational64::from(0));
        assert_eq!(ctx.pairing(&hw(&ctx, "0,0|1"), &hw(&ctx, "0,0|1")).unwrap(), Rational64::from(-1));
        let b = hw(&ctx, "0,1|-1");
        assert_eq!(ctx.pairing(ctx.rho(), &b).unwrap(), Rational64::from(0));
    }

    #[test]
    fn rho_closed_forms() {
        let ctx = GLContext::new(1, 1, 3).unwrap();
        assert_eq!(ctx.rho1().to_string(), "1/2|-1/2");
        assert_eq!(ctx.rho().to_string(), "-1/2|1/2");
        let ctx = GLContext::new(2, 1, 3).unwrap();
        assert_eq!(ctx.rho0().to_string(), "1/2,-1/2|0");
        assert_eq!(ctx.rho().to_weight().unwrap(), "0,-1|1".parse().unwrap());
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for m in 1..=4 {
            for n in 1..=4 {
                let ctx = GLContext::new(m, n, 3).unwrap();
                let mut even = Weight::zero(m, n);
                for a in ctx.even_positive_roots() {
                    even = &even + &a.to_weight();
                }
                let mut odd = Weight::zero(m, n);
                for b in ctx.odd_roots() {
                    odd = &odd + &b.to_weight();
                }
                assert_eq!(ctx.rho0().doubled(), even.coords().as_slice());
                assert_eq!(ctx.rho1().doubled(), odd.coords().as_slice());
                assert_eq!(ctx.two_rho1(), odd);
                assert_eq!(ctx.even_positive_roots().len(), m * (m - 1) / 2 + n * (n - 1) / 2);
            }
        }
    }

    #[test]
    fn coroot_examples() {
        let ctx = GLContext::new(2, 1, 3).unwrap();
        let a = ctx.root(0, 1).unwrap();
        let l = &hw(&ctx, "3,0|1") + ctx.rho0();
        assert_eq!(ctx.coroot_pairing(&l, &a).unwrap(), Rational64::from(4));
        assert!(ctx.coroot_pairing(&l, &ctx.odd_root(1).unwrap()).is_err());

        let ctx = GLContext::new(1, 2, 3).unwrap();
        let a = ctx.root(1, 2).unwrap();
        assert_eq!(ctx.coroot_pairing(&hw(&ctx, "0|1,0"), &a).unwrap(), Rational64::from(1));
    }

    #[test]
    fn coroot_against_reflection_formula() {
        // 2(μ,α)/(α,α) computed from the form directly
        for (m, n) in [(2, 2), (3, 2), (2, 3)] {
            let ctx = GLContext::new(m, n, 5).unwrap();
            let mu = HalfWeight::from_doubled(m, (0..(m + n) as i64).map(|k| 3 * k * k - 7).collect());
            for a in ctx.even_positive_roots() {
                let aw = HalfWeight::from_weight(&a.to_weight());
                let expect = ctx.pairing(&mu, &aw).unwrap() * 2 / ctx.pairing(&aw, &aw).unwrap();
                assert_eq!(ctx.coroot_pairing(&mu, &a).unwrap(), expect);
                assert_eq!(ctx.coroot_pairing(ctx.rho1(), &a).unwrap(), Rational64::from(0));
            }
        }
    }

    #[test]
    fn odd_root_listing() {
        let ctx = GLContext::new(2, 3, 3).unwrap();
        assert_eq!(ctx.odd_root(1).unwrap().to_string(), "d2-e1");
        assert_eq!(ctx.odd_root(4).unwrap().to_string(), "d1-e1");
        assert_eq!(ctx.odd_root(6).unwrap().to_string(), "d1-e3");
        assert!(ctx.odd_root(7).is_err());
        assert!(ctx.odd_root(0).is_err());
        let ctx = GLContext::new(3, 2, 3).unwrap();
        assert_eq!(ctx.odd_root(3).unwrap().to_string(), "d2-e1");
        let ctx = GLContext::new(1, 1, 3).unwrap();
        assert_eq!(ctx.odd_root(1).unwrap().to_string(), "d1-e1");
    }

    #[test]
    fn odd_roots_exhaust_and_index_roundtrip() {
        for m in 1..=4 {
            for n in 1..=4 {
                let ctx = GLContext::new(m, n, 3).unwrap();
                let mut seen = std::collections::HashSet::new();
                for i in 1..=m * n {
                    let b = ctx.odd_root(i).unwrap();
                    assert!(b.is_odd() && b.from() < m && b.to() >= m);
                    assert_eq!(ctx.odd_index(b.from() + 1, b.to() - m + 1), i);
                    assert!(seen.insert(b));
                    let rho_b = ctx.pairing(ctx.rho(), &HalfWeight::from_weight(&b.to_weight())).unwrap();
                    assert!(rho_b.is_integer());
                    let rr = ctx.pairing(&(ctx.rho0() + ctx.rho1()), &HalfWeight::from_weight(&b.to_weight())).unwrap();
                    assert!(rr.is_integer());
                }
                assert_eq!(seen.len(), m * n);
            }
        }
    }

    #[test]
    fn dominance() {
        let ctx = GLContext::new(2, 1, 3).unwrap();
        assert!(ctx.is_dominant(&"1,0|0".parse().unwrap()));
        assert!(!ctx.is_dominant(&"0,1|0".parse().unwrap()));
        let ctx = GLContext::new(2, 2, 3).unwrap();
        assert!(ctx.is_dominant(&"3,3|-1,-1".parse().unwrap()));
    }

    #[test]
    fn weight_literals() {
        let w: Weight = " -3,4 | 0 ".parse().unwrap();
        assert_eq!(w, Weight::new(vec![-3, 4], vec![0]));
        assert_eq!(w.to_string(), "-3,4|0");
        assert!("1,2".parse::<Weight>().is_err());
        assert!("1|2|3".parse::<Weight>().is_err());
        assert!("1,x|2".parse::<Weight>().is_err());
        let ctx = GLContext::new(2, 1, 3).unwrap();
        assert!(ctx.parse_weight("1|2").is_err());
    }

    #[test]
    fn root_form_matches_weight_form() {
        let ctx = GLContext::new(3, 2, 3).unwrap();
        let roots: Vec<Root> = ctx.positive_roots().into_iter().flat_map(|r| [r, r.neg()]).collect();
        for a in &roots {
            for b in &roots {
                assert_eq!(a.pairing(b), ctx.form(&a.to_weight(), &b.to_weight()));
            }
            assert_eq!(a.neg().neg(), *a);
            assert_eq!(a.neg().parity(), a.parity());
            if a.is_odd() {
                assert_eq!(a.pairing(a), 0);
            }
        }
    }
}
