//! Odd reflections, the canonical chain of simple systems, and the weight chains
//! attached to it.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::root_data::{GLContext, Root, Weight};

/// Simple roots listed along a path `σ_{π₁} − σ_{π₂}, σ_{π₂} − σ_{π₃}, …`.
#[derive(Clone, Debug)]
pub struct SimpleSystem {
    pub roots: Vec<Root>,
    /// Position in the canonical chain, `None` once a reflection leaves it.
    pub chain_index: Option<usize>,
}

impl PartialEq for SimpleSystem {
    fn eq(&self, other: &Self) -> bool {
        self.root_set() == other.root_set()
    }
}

impl SimpleSystem {
    pub fn standard(ctx: &GLContext) -> SimpleSystem {
        let roots = (0..ctx.m() + ctx.n() - 1).map(|k| ctx.root(k, k + 1).unwrap()).collect();
        SimpleSystem { roots, chain_index: Some(0) }
    }

    pub fn root_set(&self) -> BTreeSet<Root> {
        self.roots.iter().copied().collect()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }

    /// The vertex order of the path, if the roots form one covering every index.
    pub fn path(&self, ctx: &GLContext) -> Option<Vec<usize>> {
        let size = ctx.m() + ctx.n();
        if self.roots.len() + 1 != size {
            return None;
        }
        let mut order = Vec::with_capacity(size);
        order.push(self.roots.first()?.from());
        for (k, r) in self.roots.iter().enumerate() {
            if r.from() != order[k] {
                return None;
            }
            order.push(r.to());
        }
        let distinct: BTreeSet<usize> = order.iter().copied().collect();
        (distinct.len() == size).then_some(order)
    }

    /// A path system is the base of the positive system `{σ_{π_s} − σ_{π_t} : s < t}`.
    pub fn is_valid(&self, ctx: &GLContext) -> bool {
        self.path(ctx).is_some() && self.roots.iter().any(|r| r.is_odd())
    }

    pub fn positive_roots(&self, ctx: &GLContext) -> Option<Vec<Root>> {
        let path = self.path(ctx)?;
        let mut out = vec![];
        for s in 0..path.len() {
            for t in s + 1..path.len() {
                out.push(ctx.root(path[s], path[t]).unwrap());
            }
        }
        Some(out)
    }

    /// Which of `±βⱼ` is positive, read off from the path order.
    pub fn odd_positive_set(&self, ctx: &GLContext) -> Option<OddPositiveSet> {
        let path = self.path(ctx)?;
        let pos = |k: usize| path.iter().position(|&x| x == k).unwrap();
        let signs = ctx.odd_roots().iter().map(|b| pos(b.from()) < pos(b.to())).collect();
        Some(OddPositiveSet { signs })
    }
}

impl fmt::Display for SimpleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.roots.iter().map(|r| r.to_string()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// `signs[j-1]` is true when `βⱼ` is positive, false when `−βⱼ` is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddPositiveSet {
    pub signs: Vec<bool>,
}

impl OddPositiveSet {
    /// The positive odd roots themselves.
    pub fn roots(&self, ctx: &GLContext) -> Vec<Root> {
        ctx.odd_roots().iter().zip(&self.signs).map(|(b, &s)| if s { *b } else { b.neg() }).collect()
    }
}

pub fn odd_reflect(ctx: &GLContext, pi: &SimpleSystem, beta: &Root) -> Result<SimpleSystem> {
    if !beta.is_odd() {
        return Err(Error::InvalidReflection(format!("{beta} is even")));
    }
    if !pi.contains(beta) {
        return Err(Error::InvalidReflection(format!("{beta} is not in {pi}")));
    }
    let mut roots = Vec::with_capacity(pi.roots.len());
    for a in &pi.roots {
        if a == beta {
            roots.push(beta.neg());
        } else if a.pairing(beta) != 0 {
            let w = &a.to_weight() + &beta.to_weight();
            let from = (0..ctx.m() + ctx.n()).find(|&k| w.coord(k) == 1).unwrap();
            let to = (0..ctx.m() + ctx.n()).find(|&k| w.coord(k) == -1).unwrap();
            roots.push(ctx.root(from, to)?);
        } else {
            roots.push(*a);
        }
    }
    let chain_index = match pi.chain_index {
        Some(i) if i < ctx.mn() && ctx.odd_root(i + 1)? == *beta => Some(i + 1),
        Some(i) if i > 0 && ctx.odd_root(i)?.neg() == *beta => Some(i - 1),
        _ => None,
    };
    Ok(SimpleSystem { roots, chain_index })
}

fn chain(ctx: &GLContext) -> &[SimpleSystem] {
    ctx.chain_cache().get_or_init(|| {
        let mut out = vec![SimpleSystem::standard(ctx)];
        for b in ctx.odd_roots() {
            let next = odd_reflect(ctx, out.last().unwrap(), b).expect("canonical chain reflection");
            out.push(next);
        }
        out
    })
}

/// `Π_{βᵢ}`, the i-th system of the canonical chain.
pub fn simple_system(ctx: &GLContext, i: usize) -> Result<SimpleSystem> {
    chain(ctx)
        .get(i)
        .cloned()
        .ok_or(Error::OutOfRange { what: "chain index", value: i as i64, lo: 0, hi: ctx.mn() as i64 })
}

pub fn xi_support(ctx: &GLContext, i: usize) -> Result<OddPositiveSet> {
    if i > ctx.mn() {
        return Err(Error::OutOfRange { what: "chain index", value: i as i64, lo: 0, hi: ctx.mn() as i64 });
    }
    Ok(OddPositiveSet { signs: (1..=ctx.mn()).map(|j| j > i).collect() })
}

/// `λ₀ = λ`, `λᵢ = λ_{i−1} − βᵢ`.
pub fn lambda_chain(ctx: &GLContext, lambda: &Weight) -> Vec<Weight> {
    let mut out = vec![lambda.clone()];
    for b in ctx.odd_roots() {
        let next = out.last().unwrap() - &b.to_weight();
        out.push(next);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Typicality {
    pub holds: bool,
    /// First failing index (1-based).
    pub witness: Option<usize>,
    /// `(λ+ρ, βᵢ)` for i = 1..mn.
    pub pairings: Vec<i64>,
}

fn shifted_pairings(ctx: &GLContext, lambda: &Weight) -> Result<Vec<i64>> {
    ctx.require_dominant(lambda)?;
    let chain = lambda_chain(ctx, lambda);
    (1..=ctx.mn())
        .map(|i| {
            let v = ctx.shifted_odd_pairing(lambda, i)?;
            let b = ctx.odd_root(i)?;
            assert_eq!(v, ctx.root_pairing(&chain[i - 1], &b), "(lambda+rho, beta_i) != (lambda_(i-1), beta_i)");
            Ok(v)
        })
        .collect()
}

pub fn is_typical(ctx: &GLContext, lambda: &Weight) -> Result<Typicality> {
    let pairings = shifted_pairings(ctx, lambda)?;
    let witness = pairings.iter().position(|&v| v == 0).map(|k| k + 1);
    Ok(Typicality { holds: witness.is_none(), witness, pairings })
}

pub fn is_p_typical(ctx: &GLContext, lambda: &Weight) -> Result<Typicality> {
    let pairings = shifted_pairings(ctx, lambda)?;
    let witness = pairings.iter().position(|&v| v % ctx.p() == 0).map(|k| k + 1);
    Ok(Typicality { holds: witness.is_none(), witness, pairings })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tracking {
    /// `μ⁽⁰⁾, …, μ⁽ᵐⁿ⁾`.
    pub steps: Vec<Weight>,
    /// Whether step i subtracted `βᵢ`.
    pub moved: Vec<bool>,
    /// Indices i with `μ⁽ⁱ⁾` not dominant.
    pub non_dominant: Vec<usize>,
}

impl Tracking {
    pub fn result(&self) -> &Weight {
        self.steps.last().unwrap()
    }
}

/// `μ ↦ μ̃`: subtract `βᵢ` exactly when `(μ⁽ⁱ⁻¹⁾, βᵢ) ≢ 0 mod p`.
pub fn track_highest(ctx: &GLContext, mu: &Weight) -> Result<Tracking> {
    ctx.require_dominant(mu)?;
    let mut steps = vec![mu.clone()];
    let mut moved = vec![];
    let mut non_dominant = vec![];
    for (k, b) in ctx.odd_roots().iter().enumerate() {
        let cur = steps.last().unwrap();
        let mv = ctx.root_pairing(cur, b).rem_euclid(ctx.p()) != 0;
        let next = if mv { cur - &b.to_weight() } else { cur.clone() };
        if !ctx.is_dominant(&next) {
            non_dominant.push(k + 1);
        }
        moved.push(mv);
        steps.push(next);
    }
    Ok(Tracking { steps, moved, non_dominant })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeadWeight {
    /// `−w₀λ + 2ρ₁`.
    pub gamma: Weight,
    /// `−w₀(γ̃)`.
    pub head_label: Weight,
    pub tracking: Tracking,
}

pub fn head_weight(ctx: &GLContext, lambda: &Weight) -> Result<HeadWeight> {
    ctx.require_dominant(lambda)?;
    let gamma = &(-&lambda.reversed()) + &ctx.two_rho1();
    let tracking = track_highest(ctx, &gamma)?;
    let head_label = -&tracking.result().reversed();
    Ok(HeadWeight { gamma, head_label, tracking })
}

/// `w₀` applied to the end of the chain gives `−Π`.
pub fn super_longest_check(ctx: &GLContext) -> bool {
    let (m, size) = (ctx.m(), ctx.m() + ctx.n());
    let w0 = |k: usize| if k < m { m - 1 - k } else { m + size - 1 - k };
    let last = match simple_system(ctx, ctx.mn()) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let image: BTreeSet<Root> = last.roots.iter().map(|r| ctx.root(w0(r.from()), w0(r.to())).unwrap()).collect();
    let minus: BTreeSet<Root> = SimpleSystem::standard(ctx).roots.iter().map(|r| r.neg()).collect();
    image == minus
}
