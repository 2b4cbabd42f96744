//! Explicit GL(1|1): Grassmann coefficients, the two-dimensional induced modules,
//! the maps between them, and a Smith-normal-form Jantzen oracle.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::charring::Character;
use crate::error::{Error, Result};
use crate::jantzen::valuation;
use crate::root_data::{GLContext, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseRing {
    Integers,
    ModP(i64),
    Rationals,
}

impl BaseRing {
    fn norm(&self, x: Rational64) -> Rational64 {
        match *self {
            BaseRing::Integers => {
                assert!(x.is_integer(), "non-integral value over the integers");
                x
            }
            BaseRing::ModP(p) => {
                let d = x.denom().rem_euclid(p);
                let inv = mod_inverse(d, p).expect("denominator invertible mod p");
                Rational64::from((x.numer().rem_euclid(p) * inv).rem_euclid(p))
            }
            BaseRing::Rationals => x,
        }
    }

    fn inv(&self, x: Rational64) -> Option<Rational64> {
        match *self {
            BaseRing::Integers => (x.abs() == Rational64::one()).then_some(x),
            BaseRing::ModP(p) => mod_inverse(x.to_integer().rem_euclid(p), p).map(Rational64::from),
            BaseRing::Rationals => (!x.is_zero()).then(|| x.recip()),
        }
    }
}

fn mod_inverse(a: i64, p: i64) -> Option<i64> {
    let e = a.extended_gcd(&p);
    (e.gcd == 1).then(|| e.x.rem_euclid(p))
}

/// Element of `Λ(ξ₁,…,ξ_r)` over a base ring; coefficient `k` belongs to the monomial whose
/// generator set is the bit set of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannNumber {
    ring: BaseRing,
    coeffs: Vec<Rational64>,
}

/// Sign of moving the generators of `b` past those of `a`.
fn reorder_sign(a: usize, b: usize) -> i64 {
    let mut s = 0;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        s += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    if s % 2 == 0 {
        1
    } else {
        -1
    }
}

impl GrassmannNumber {
    pub fn zero(ring: BaseRing, r: usize) -> Self {
        GrassmannNumber { ring, coeffs: vec![Rational64::zero(); 1 << r] }
    }

    pub fn scalar(ring: BaseRing, r: usize, c: i64) -> Self {
        let mut g = Self::zero(ring, r);
        g.coeffs[0] = ring.norm(Rational64::from(c));
        g
    }

    /// `c·ξ_{k₁}ξ_{k₂}⋯` for generator indices (1-based) in increasing order.
    pub fn monomial(ring: BaseRing, r: usize, c: i64, gens: &[usize]) -> Self {
        let mut g = Self::zero(ring, r);
        let mut mask = 0usize;
        for &k in gens {
            assert!(k >= 1 && k <= r && mask & (1 << (k - 1)) == 0);
            mask |= 1 << (k - 1);
        }
        assert!(gens.windows(2).all(|w| w[0] < w[1]), "generators must be listed in increasing order");
        g.coeffs[mask] = ring.norm(Rational64::from(c));
        g
    }

    pub fn ring(&self) -> BaseRing {
        self.ring
    }

    pub fn generators(&self) -> usize {
        self.coeffs.len().trailing_zeros() as usize
    }

    pub fn body(&self) -> Rational64 {
        self.coeffs[0]
    }

    pub fn coeff(&self, mask: usize) -> Rational64 {
        self.coeffs[mask]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| k.count_ones() % 2 == 0 || c.is_zero())
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| k.count_ones() % 2 == 1 || c.is_zero())
    }

    fn check(&self, o: &Self) {
        assert!(self.ring == o.ring && self.coeffs.len() == o.coeffs.len(), "Grassmann ring mismatch");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| self.ring.norm(a + b)).collect();
        GrassmannNumber { ring: self.ring, coeffs }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.norm(a * Rational64::from(c))).collect();
        GrassmannNumber { ring: self.ring, coeffs }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let mut out = Self::zero(self.ring, self.generators());
        for (a, ca) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, cb) in o.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if a & b != 0 {
                    continue;
                }
                let s = Rational64::from(reorder_sign(a, b));
                out.coeffs[a | b] += ca * cb * s;
            }
        }
        for c in out.coeffs.iter_mut() {
            *c = self.ring.norm(*c);
        }
        out
    }

    /// Inverse via the terminating series in the nilpotent part.
    pub fn inverse(&self) -> Result<Self> {
        let r = self.generators();
        let b0 = self
            .ring
            .inv(self.body())
            .ok_or_else(|| Error::Singular(format!("body {} is not a unit", self.body())))?;
        let unit = GrassmannNumber { ring: self.ring, coeffs: self.coeffs.iter().map(|c| self.ring.norm(c * b0)).collect() };
        let nil = unit.sub(&Self::scalar(self.ring, r, 1));
        let mut term = Self::scalar(self.ring, r, 1);
        let mut sum = term.clone();
        for _ in 0..r {
            term = term.mul(&nil).neg();
            sum = sum.add(&term);
        }
        Ok(GrassmannNumber { ring: self.ring, coeffs: sum.coeffs.iter().map(|c| self.ring.norm(c * b0)).collect() })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut out = Self::scalar(self.ring, self.generators(), 1);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }
}

impl fmt::Display for GrassmannNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono: String = (0..self.generators()).filter(|b| k >> b & 1 == 1).map(|b| format!("x{}", b + 1)).collect();
            parts.push(match (mono.is_empty(), *c == Rational64::one()) {
                (true, _) => c.to_string(),
                (false, true) => mono,
                (false, false) => format!("{c}*{mono}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The matrix `(a m; n b)` with `a, b` even and `m, n` odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GL11Point {
    pub a: GrassmannNumber,
    pub m: GrassmannNumber,
    pub n: GrassmannNumber,
    pub b: GrassmannNumber,
}

impl GL11Point {
    pub fn new(a: GrassmannNumber, m: GrassmannNumber, n: GrassmannNumber, b: GrassmannNumber) -> Result<Self> {
        if !a.is_even() || !b.is_even() || !m.is_odd() || !n.is_odd() {
            return Err(Error::Singular("diagonal entries must be even and off-diagonal entries odd".into()));
        }
        for x in [&a, &b] {
            if x.ring.inv(x.body()).is_none() {
                return Err(Error::Singular(format!("diagonal entry {x} has non-unit body")));
            }
        }
        Ok(GL11Point { a, m, n, b })
    }

    pub fn identity(ring: BaseRing, r: usize) -> Self {
        let one = GrassmannNumber::scalar(ring, r, 1);
        let zero = GrassmannNumber::zero(ring, r);
        GL11Point { a: one.clone(), m: zero.clone(), n: zero, b: one }
    }

    pub fn diagonal(a: GrassmannNumber, b: GrassmannNumber) -> Result<Self> {
        let z = GrassmannNumber::zero(a.ring, a.generators());
        Self::new(a, z.clone(), z, b)
    }

    pub fn upper(a: GrassmannNumber, m: GrassmannNumber, b: GrassmannNumber) -> Result<Self> {
        let z = GrassmannNumber::zero(a.ring, a.generators());
        Self::new(a, m, z, b)
    }

    pub fn lower(a: GrassmannNumber, n: GrassmannNumber, b: GrassmannNumber) -> Result<Self> {
        let z = GrassmannNumber::zero(a.ring, a.generators());
        Self::new(a, z, n, b)
    }

    pub fn mul(&self, o: &GL11Point) -> GL11Point {
        GL11Point {
            a: self.a.mul(&o.a).add(&self.m.mul(&o.n)),
            m: self.a.mul(&o.m).add(&self.m.mul(&o.b)),
            n: self.n.mul(&o.a).add(&self.b.mul(&o.n)),
            b: self.n.mul(&o.m).add(&self.b.mul(&o.b)),
        }
    }

    /// `g = lower(1,x,1)·diagonal(a, b − n a⁻¹ m)·upper(1,y,1)`.
    pub fn factor(&self) -> Result<(GL11Point, GL11Point, GL11Point)> {
        let (ring, r) = (self.a.ring, self.a.generators());
        let one = GrassmannNumber::scalar(ring, r, 1);
        let ainv = self.a.inverse()?;
        let y = ainv.mul(&self.m);
        let x = self.n.mul(&ainv);
        let d2 = self.b.sub(&self.n.mul(&ainv).mul(&self.m));
        Ok((
            GL11Point::lower(one.clone(), x, one.clone())?,
            GL11Point::diagonal(self.a.clone(), d2)?,
            GL11Point::upper(one.clone(), y, one)?,
        ))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Basis `(Y_λ, C_λ)`.
    Plus,
    /// Basis `(B_λ, X_λ)`.
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    Y,
    C,
    B,
    X,
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The two-dimensional module induced from a line of weight `(i|j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InducedGL11 {
    pub orientation: Orientation,
    pub i: i64,
    pub j: i64,
}

impl InducedGL11 {
    pub fn new(orientation: Orientation, i: i64, j: i64) -> Self {
        InducedGL11 { orientation, i, j }
    }

    pub fn labels(&self) -> [BasisLabel; 2] {
        match self.orientation {
            Orientation::Plus => [BasisLabel::Y, BasisLabel::C],
            Orientation::Minus => [BasisLabel::B, BasisLabel::X],
        }
    }

    pub fn basis_weights(&self) -> [Weight; 2] {
        let (i, j) = (self.i, self.j);
        let w = |a: i64, b: i64| Weight::new(vec![a], vec![b]);
        match self.orientation {
            Orientation::Plus => [w(i, j), w(i + 1, j - 1)],
            Orientation::Minus => [w(i - 1, j + 1), w(i, j)],
        }
    }

    pub fn weight(&self) -> Weight {
        Weight::new(vec![self.i], vec![self.j])
    }

    pub fn basis_vector(&self, ring: BaseRing, r: usize, k: usize) -> InducedElement {
        let mut coeffs = [GrassmannNumber::zero(ring, r), GrassmannNumber::zero(ring, r)];
        coeffs[k] = GrassmannNumber::scalar(ring, r, 1);
        InducedElement { module: *self, coeffs }
    }

    pub fn character(&self) -> Character {
        Character::from_terms(self.basis_weights().into_iter().map(|w| (w, 1)))
    }
}

/// `e₁⊗c₁ + e₂⊗c₂` with Grassmann scalars on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedElement {
    pub module: InducedGL11,
    pub coeffs: [GrassmannNumber; 2],
}

impl fmt::Display for InducedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.module.labels();
        let parts: Vec<String> = (0..2)
            .filter(|&k| !self.coeffs[k].is_zero())
            .map(|k| format!("({}) {}", self.coeffs[k], labels[k]))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

type Mat2 = [[GrassmannNumber; 2]; 2];

enum Generator<'a> {
    Diagonal(&'a GrassmannNumber, &'a GrassmannNumber),
    Upper(&'a GrassmannNumber),
    Lower(&'a GrassmannNumber),
}

/// Column `k` is the image of basis vector `k`.
fn generator_matrix(module: &InducedGL11, g: Generator) -> Result<Mat2> {
    let (i, j, s) = (module.i, module.j, module.i + module.j);
    let mono = |a: &GrassmannNumber, b: &GrassmannNumber, x: i64, y: i64| -> Result<GrassmannNumber> { Ok(a.pow(x)?.mul(&b.pow(y)?)) };
    let (ring, r) = match &g {
        Generator::Diagonal(a, _) => (a.ring, a.generators()),
        Generator::Upper(m) | Generator::Lower(m) => (m.ring, m.generators()),
    };
    let one = GrassmannNumber::scalar(ring, r, 1);
    let zero = GrassmannNumber::zero(ring, r);
    Ok(match (module.orientation, g) {
        (Orientation::Plus, Generator::Diagonal(a, b)) => [[mono(a, b, i, j)?, zero.clone()], [zero, mono(a, b, i + 1, j - 1)?]],
        (Orientation::Minus, Generator::Diagonal(a, b)) => [[mono(a, b, i - 1, j + 1)?, zero.clone()], [zero, mono(a, b, i, j)?]],
        // Y ↦ Y + (i+j) m C
        (Orientation::Plus, Generator::Upper(m)) => [[one.clone(), zero.clone()], [m.scale(s), one]],
        // B ↦ B + m X
        (Orientation::Minus, Generator::Upper(m)) => [[one.clone(), zero.clone()], [m.clone(), one]],
        // C ↦ C + n Y
        (Orientation::Plus, Generator::Lower(n)) => [[one.clone(), n.clone()], [zero, one]],
        // X ↦ X + (i+j) n B
        (Orientation::Minus, Generator::Lower(n)) => [[one.clone(), n.scale(s)], [zero, one]],
    })
}

fn apply(mat: &Mat2, v: &InducedElement) -> InducedElement {
    let row = |k: usize| mat[k][0].mul(&v.coeffs[0]).add(&mat[k][1].mul(&v.coeffs[1]));
    InducedElement { module: v.module, coeffs: [row(0), row(1)] }
}

/// `g·v`, through the factorization `lower·diagonal·upper`.
pub fn act(g: &GL11Point, v: &InducedElement) -> Result<InducedElement> {
    let (l, d, u) = g.factor()?;
    let module = &v.module;
    let v = apply(&generator_matrix(module, Generator::Upper(&u.m))?, v);
    let v = apply(&generator_matrix(module, Generator::Diagonal(&d.a, &d.b))?, &v);
    Ok(apply(&generator_matrix(module, Generator::Lower(&l.n))?, &v))
}

/// An integer matrix between two induced modules; `matrix[row][col]`, rows indexed by the
/// target basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub source: InducedGL11,
    pub target: InducedGL11,
    pub matrix: [[i64; 2]; 2],
}

impl LinearMap {
    pub fn apply(&self, v: &InducedElement) -> InducedElement {
        assert_eq!(v.module, self.source);
        let c = |k: usize| {
            v.coeffs[0].scale(self.matrix[k][0]).add(&v.coeffs[1].scale(self.matrix[k][1]))
        };
        InducedElement { module: self.target, coeffs: [c(0), c(1)] }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &LinearMap) -> LinearMap {
        assert_eq!(first.target, self.source);
        let mut out = [[0i64; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x = (0..2).map(|k| self.matrix[r][k] * first.matrix[k][c]).sum();
            }
        }
        LinearMap { source: first.source, target: self.target, matrix: out }
    }
}

/// `T : H⁰_{−β}(λ+β) → H⁰_β(λ)`, `B ↦ Y`, `X ↦ (i+j)C`.
pub fn map_t(i: i64, j: i64) -> LinearMap {
    LinearMap {
        source: InducedGL11::new(Orientation::Minus, i + 1, j - 1),
        target: InducedGL11::new(Orientation::Plus, i, j),
        matrix: [[1, 0], [0, i + j]],
    }
}

/// `T′ : H⁰_β(λ) → H⁰_{−β}(λ+β)`, `Y ↦ (i+j)B`, `C ↦ X`.
pub fn map_t_prime(i: i64, j: i64) -> LinearMap {
    LinearMap {
        source: InducedGL11::new(Orientation::Plus, i, j),
        target: InducedGL11::new(Orientation::Minus, i + 1, j - 1),
        matrix: [[i + j, 0], [0, 1]],
    }
}

/// `Υ : H⁰_{−β}(λ+kβ) → H⁰_{−β}(λ+(k−1)β)`, `B ↦ X`, `X ↦ 0`.
pub fn map_upsilon(i: i64, j: i64, k: i64, p: i64) -> Result<LinearMap> {
    if (i + j) % p != 0 {
        return Err(Error::NotApplicable(format!("p = {p} does not divide i+j = {}", i + j)));
    }
    Ok(LinearMap {
        source: InducedGL11::new(Orientation::Minus, i + k, j - k),
        target: InducedGL11::new(Orientation::Minus, i + k - 1, j - k + 1),
        matrix: [[0, 0], [1, 0]],
    })
}

/// Reduced row echelon form mod p and its pivot columns.
fn rref_mod_p(rows: &[Vec<i64>], p: i64) -> (Vec<Vec<i64>>, Vec<usize>) {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = vec![];
    for c in 0..cols {
        let rank = pivots.len();
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][c], p).unwrap();
        for x in m[rank].iter_mut() {
            *x = (*x * inv).rem_euclid(p);
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        pivots.push(c);
    }
    (m, pivots)
}

fn rank_mod_p(rows: &[Vec<i64>], p: i64) -> usize {
    rref_mod_p(rows, p).1.len()
}

/// Column space mod p, as spanning vectors.
pub fn image_mod_p(map: &LinearMap, p: i64) -> Vec<Vec<i64>> {
    (0..2)
        .map(|c| vec![map.matrix[0][c].rem_euclid(p), map.matrix[1][c].rem_euclid(p)])
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect()
}

/// Null space mod p, as a basis.
pub fn kernel_mod_p(map: &LinearMap, p: i64) -> Vec<Vec<i64>> {
    let rows: Vec<Vec<i64>> = map.matrix.iter().map(|r| r.to_vec()).collect();
    let (red, pivots) = rref_mod_p(&rows, p);
    (0..2)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; 2];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (-red[r][free]).rem_euclid(p);
            }
            v
        })
        .collect()
}

/// Equality of spans mod p.
pub fn same_span(a: &[Vec<i64>], b: &[Vec<i64>], p: i64) -> bool {
    let both: Vec<Vec<i64>> = a.iter().chain(b).cloned().collect();
    let (ra, rb) = (rank_mod_p(a, p), rank_mod_p(b, p));
    ra == rb && rank_mod_p(&both, p) == ra
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub irreducible: bool,
    pub dim: usize,
    pub socle: Option<Weight>,
    pub head: Option<Weight>,
}

/// Submodule structure of `H⁰_β(λ)` mod p, found by testing which weight lines are stable
/// under generic odd unipotents.
pub fn composition_analysis(i: i64, j: i64, p: i64) -> Result<Composition> {
    if !crate::root_data::is_odd_prime(p) {
        return Err(Error::BadPrime(p));
    }
    let ring = BaseRing::ModP(p);
    let module = InducedGL11::new(Orientation::Plus, i, j);
    let one = GrassmannNumber::scalar(ring, 2, 1);
    let xi1 = GrassmannNumber::monomial(ring, 2, 1, &[1]);
    let gens = [
        GL11Point::upper(one.clone(), xi1.clone(), one.clone())?,
        GL11Point::lower(one.clone(), xi1, one)?,
    ];
    let weights = module.basis_weights();
    let mut stable = vec![];
    for k in 0..2 {
        let v = module.basis_vector(ring, 2, k);
        let ok = gens.iter().all(|g| act(g, &v).map(|w| w.coeffs[1 - k].is_zero()).unwrap_or(false));
        if ok {
            stable.push(k);
        }
    }
    Ok(match stable.as_slice() {
        [] => Composition { irreducible: true, dim: 2, socle: None, head: None },
        [k] => Composition {
            irreducible: false,
            dim: 2,
            socle: Some(weights[*k].clone()),
            head: Some(weights[1 - *k].clone()),
        },
        _ => Composition { irreducible: false, dim: 2, socle: None, head: None },
    })
}

/// Diagonal of the Smith normal form (length `min(rows, cols)`, zeros for rank deficiency).
pub fn smith_diagonal(mat: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = mat.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut diag = vec![];
    for t in 0..rows.min(cols) {
        // pivot: smallest nonzero entry in the trailing block
        loop {
            let piv = (t..rows)
                .flat_map(|r| (t..cols).map(move |c| (r, c)))
                .filter(|&(r, c)| a[r][c] != 0)
                .min_by_key(|&(r, c)| a[r][c].abs());
            let Some((pr, pc)) = piv else {
                diag.resize(rows.min(cols), 0);
                return diag;
            };
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
            let mut clean = true;
            for r in t + 1..rows {
                let q = a[r][t].div_euclid(a[t][t]);
                for c in t..cols {
                    a[r][c] -= q * a[t][c];
                }
                clean &= a[r][t] == 0;
            }
            for c in t + 1..cols {
                let q = a[t][c].div_euclid(a[t][t]);
                for r in t..rows {
                    a[r][c] -= q * a[r][t];
                }
                clean &= a[t][c] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).flat_map(|r| (t + 1..cols).map(move |c| (r, c))).find(|&(r, c)| a[r][c] % a[t][t] != 0);
            match bad {
                Some((r, _)) => {
                    for c in t..cols {
                        a[t][c] += a[r][c];
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

/// `Σ_μ Σ_d ν_p(d) e^μ` over the elementary divisors of `ψ : H⁰(λ) → H⁰_total(λ)` per weight space.
pub fn jantzen_oracle(ctx: &GLContext, lambda: &Weight) -> Result<Character> {
    if ctx.m() != 1 || ctx.n() != 1 {
        return Err(Error::Shape { expected: "GL(1|1)".into(), got: format!("GL({}|{})", ctx.m(), ctx.n()) });
    }
    ctx.check_weight(lambda)?;
    let (i, j) = (lambda.delta[0], lambda.eps[0]);
    // H⁰(λ) = H⁰_{−β}(λ), H⁰_total(λ) = H⁰_β(λ−β)
    let psi = map_t(i - 1, j + 1);
    let src = psi.source.basis_weights();
    let tgt = psi.target.basis_weights();
    let mut out = Character::zero();
    let mut weights: Vec<&Weight> = src.iter().chain(tgt.iter()).collect();
    weights.sort();
    weights.dedup();
    for mu in weights {
        let rows: Vec<usize> = (0..2).filter(|&r| &tgt[r] == mu).collect();
        let cols: Vec<usize> = (0..2).filter(|&c| &src[c] == mu).collect();
        let block: Vec<Vec<i64>> = rows.iter().map(|&r| cols.iter().map(|&c| psi.matrix[r][c]).collect()).collect();
        for d in smith_diagonal(&block) {
            if d == 0 {
                return Err(Error::Atypical { lambda: lambda.clone(), index: 1, hint: None });
            }
            out.add_term(mu.clone(), valuation(ctx.p(), d) as i64);
        }
    }
    Ok(out)
}
