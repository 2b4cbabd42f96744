//! The even Weyl group `S_m × S_n` acting by block permutations.

use itertools::Itertools;

use crate::root_data::{GLContext, HalfWeight, Root, Weight};

/// `w` sends coordinate `k` of a block to position `perm[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub perm_delta: Vec<usize>,
    pub perm_eps: Vec<usize>,
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&k| a[k]).collect()
}

fn invert(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (k, &v) in a.iter().enumerate() {
        out[v] = k;
    }
    out
}

fn permute<T: Copy + Default>(perm: &[usize], v: &[T]) -> Vec<T> {
    let mut out = vec![T::default(); v.len()];
    for (k, &x) in v.iter().enumerate() {
        out[perm[k]] = x;
    }
    out
}

impl WeylElement {
    pub fn identity(m: usize, n: usize) -> Self {
        WeylElement { perm_delta: (0..m).collect(), perm_eps: (0..n).collect() }
    }

    pub fn longest(m: usize, n: usize) -> Self {
        WeylElement { perm_delta: (0..m).rev().collect(), perm_eps: (0..n).rev().collect() }
    }

    /// The reflection `r_α` for an even root α.
    pub fn reflection(m: usize, n: usize, alpha: &Root) -> Self {
        assert!(alpha.is_even());
        let mut w = Self::identity(m, n);
        let (a, b) = (alpha.from(), alpha.to());
        if a < m {
            w.perm_delta.swap(a, b);
        } else {
            w.perm_eps.swap(a - m, b - m);
        }
        w
    }

    /// All `m!·n!` elements.
    pub fn all(m: usize, n: usize) -> Vec<WeylElement> {
        let ds: Vec<Vec<usize>> = (0..m).permutations(m).collect();
        let es: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        ds.iter()
            .cartesian_product(es.iter())
            .map(|(d, e)| WeylElement { perm_delta: d.clone(), perm_eps: e.clone() })
            .collect()
    }

    pub fn length(&self) -> usize {
        inversions(&self.perm_delta) + inversions(&self.perm_eps)
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            perm_delta: compose(&self.perm_delta, &other.perm_delta),
            perm_eps: compose(&self.perm_eps, &other.perm_eps),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement { perm_delta: invert(&self.perm_delta), perm_eps: invert(&self.perm_eps) }
    }

    pub fn act(&self, mu: &HalfWeight) -> HalfWeight {
        let m = mu.m();
        let mut d = permute(&self.perm_delta, mu.delta_doubled());
        d.extend(permute(&self.perm_eps, mu.eps_doubled()));
        HalfWeight::from_doubled(m, d)
    }

    pub fn act_weight(&self, mu: &Weight) -> Weight {
        Weight::new(permute(&self.perm_delta, &mu.delta), permute(&self.perm_eps, &mu.eps))
    }
}

/// `w.λ = w(λ+ρ) − ρ`.
pub fn dot_act(ctx: &GLContext, w: &WeylElement, lambda: &Weight) -> Weight {
    let shifted = &HalfWeight::from_weight(lambda) + ctx.rho();
    (&w.act(&shifted) - ctx.rho()).to_weight().expect("dot action preserves integrality")
}

/// The unique `w` making `ν` strictly decreasing in both blocks, or `None` if `ν` is singular.
pub fn make_dominant_regular(nu: &HalfWeight) -> Option<(WeylElement, HalfWeight)> {
    let block = |v: &[i64]| -> Option<Vec<usize>> {
        let order: Vec<usize> = (0..v.len()).sorted_by(|&a, &b| v[b].cmp(&v[a])).collect();
        if order.windows(2).any(|p| v[p[0]] == v[p[1]]) {
            return None;
        }
        // coordinate order[r] goes to position r
        Some(invert(&order))
    };
    let w = WeylElement { perm_delta: block(nu.delta_doubled())?, perm_eps: block(nu.eps_doubled())? };
    let dom = w.act(nu);
    Some((w, dom))
}
