//! Splitting-principle calculus on total Chern classes.
//!
//! A [`ChernVector`] is a formal bundle: a rank plus the components
//! `c_0 = 1, c_1, ..., c_top` living in some [`GradedRing`]. Operations that
//! need root-level identities (symmetric powers) are computed once per
//! `(rank, degree, cutoff)` as universal polynomials in `e_1..e_r` and then
//! substituted into the ambient ring.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::ring::GradedRing;
use crate::schubert::GrassmannianRing;
use crate::symmetric::{reduce_to_elementary, SymmetricPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct ChernVector<R: GradedRing> {
    ring: R,
    rank: usize,
    comps: Vec<R::Elem>,
}

impl<R: GradedRing> ChernVector<R> {
    /// Builds a Chern vector from `[c_0, c_1, ...]`.
    ///
    /// `c_0` must be the identity. Components above the ring dimension are
    /// dropped; missing ones are zero. Nonzero components above the rank are
    /// rejected.
    pub fn new(ring: R, rank: usize, comps: Vec<R::Elem>) -> Result<Self> {
        match comps.first() {
            Some(c0) if *c0 == ring.one() => {}
            _ => return Err(Error::Precondition("c_0 must be the identity".into())),
        }
        if comps.iter().skip(rank + 1).any(|c| !ring.is_zero(c)) {
            return Err(Error::Precondition(format!(
                "nonzero Chern class above rank {rank}"
            )));
        }
        Ok(Self::normalized(ring, rank, comps))
    }

    fn normalized(ring: R, rank: usize, mut comps: Vec<R::Elem>) -> Self {
        let len = rank.min(ring.dim() as usize) + 1;
        comps.truncate(len);
        while comps.len() < len {
            comps.push(ring.zero());
        }
        ChernVector { ring, rank, comps }
    }

    /// The trivial bundle of the given rank.
    pub fn trivial(ring: R, rank: usize) -> Self {
        let one = ring.one();
        Self::normalized(ring, rank, vec![one])
    }

    /// The line bundle with first Chern class `t`.
    pub fn line(ring: R, t: R::Elem) -> Self {
        let one = ring.one();
        Self::normalized(ring, 1, vec![one, t])
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `[c_0, ..., c_min(rank, dim)]`.
    pub fn components(&self) -> &[R::Elem] {
        &self.comps
    }

    /// `c_i`, zero past the stored components.
    pub fn c(&self, i: usize) -> R::Elem {
        self.comps
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    /// The top Chern class `c_rank`.
    pub fn top(&self) -> R::Elem {
        self.c(self.rank)
    }

    pub fn total(&self) -> R::Elem {
        self.comps
            .iter()
            .fold(self.ring.zero(), |acc, c| self.ring.add(&acc, c))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.describe(),
                right: other.ring.describe(),
            })
        }
    }

    /// Moves the vector into another ring along a ring map.
    pub fn map_ring<S, F>(&self, target: S, f: F) -> ChernVector<S>
    where
        S: GradedRing,
        F: Fn(&R::Elem) -> S::Elem,
    {
        let comps = self.comps.iter().map(f).collect();
        ChernVector::normalized(target, self.rank, comps)
    }

    /// `c_i(E*) = (-1)^i c_i(E)`.
    pub fn dual(&self) -> Self {
        let comps = self
            .comps
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i % 2 == 1 {
                    self.ring.neg(c)
                } else {
                    c.clone()
                }
            })
            .collect();
        Self::normalized(self.ring.clone(), self.rank, comps)
    }

    /// Twist by a line bundle with first Chern class `t`:
    /// `c_k(E ⊗ L) = Σ_i binom(r - i, k - i) c_i(E) t^(k - i)`.
    pub fn tensor_line(&self, t: &R::Elem) -> Self {
        let r = self.rank;
        let top = r.min(self.ring.dim() as usize);
        let mut t_pows = vec![self.ring.one()];
        for j in 1..=top {
            t_pows.push(self.ring.mul(&t_pows[j - 1], t));
        }
        let comps = (0..=top)
            .map(|k| {
                (0..=k).fold(self.ring.zero(), |acc, i| {
                    let b = binomial((r - i) as u64, (k - i) as u64);
                    if b.is_zero() {
                        return acc;
                    }
                    let term = self.ring.mul(&self.c(i), &t_pows[k - i]);
                    self.ring.add(&acc, &self.ring.scale(&term, &b))
                })
            })
            .collect();
        Self::normalized(self.ring.clone(), r, comps)
    }

    /// `c(A ⊕ B) = c(A) c(B)`.
    pub fn whitney_sum(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let rank = self.rank + other.rank;
        let top = rank.min(self.ring.dim() as usize);
        let comps = (0..=top)
            .map(|k| {
                (0..=k).fold(self.ring.zero(), |acc, i| {
                    self.ring
                        .add(&acc, &self.ring.mul(&self.c(i), &other.c(k - i)))
                })
            })
            .collect();
        Ok(Self::normalized(self.ring.clone(), rank, comps))
    }

    /// `c(E) / c(S)` as a truncated series, for `0 → S → E → E/S → 0`.
    pub fn whitney_quotient(&self, sub: &Self, trunc: usize) -> Result<Self> {
        self.same_ring(sub)?;
        if self.rank < sub.rank {
            return Err(Error::Precondition(format!(
                "quotient of a rank-{} bundle by a rank-{} bundle",
                self.rank, sub.rank
            )));
        }
        let rank = self.rank - sub.rank;
        let top = trunc.min(rank).min(self.ring.dim() as usize);
        let mut q: Vec<R::Elem> = Vec::with_capacity(top + 1);
        for k in 0..=top {
            // q_k = e_k - Σ_{i>=1} s_i q_{k-i}
            let mut acc = self.c(k);
            for i in 1..=k {
                acc = self.ring.sub(&acc, &self.ring.mul(&sub.c(i), &q[k - i]));
            }
            q.push(acc);
        }
        Ok(Self::normalized(self.ring.clone(), rank, q))
    }

    /// Chern vector of `Sym^d E`.
    pub fn sym_power(&self, d: u32) -> Result<Self> {
        let r = self.rank;
        if r == 0 || d == 0 {
            return Err(Error::Precondition(format!(
                "Sym^{d} needs rank >= 1 and d >= 1 (rank is {r})"
            )));
        }
        let new_rank = sym_rank(r, d);
        let cutoff = new_rank.min(self.ring.dim() as usize) as u32;
        let universal = universal_sym_power(r, d, cutoff)?;
        let mut subst = Substitution::new(self);
        let comps = universal.iter().map(|q| subst.apply(q)).collect();
        Ok(Self::normalized(self.ring.clone(), new_rank, comps))
    }

    /// Segre classes `s_0..s_trunc` with `s(E) = c(E)^{-1}`.
    pub fn segre(&self, trunc: usize) -> Vec<R::Elem> {
        segre_from_chern(self, trunc)
    }
}

impl ChernVector<GrassmannianRing> {
    /// `c(U*)` on a Grassmannian: `c_i = σ_(1^i)`.
    pub fn universal_dual(ring: GrassmannianRing) -> Self {
        let comps = (0..=ring.r())
            .map(|i| ring.universal_dual_chern(i).expect("i <= r"))
            .collect();
        Self::normalized(ring, ring.r() as usize, comps)
    }
}

/// Segre classes: the formal inverse of the total Chern class, up to degree `trunc`.
pub fn segre_from_chern<R: GradedRing>(c: &ChernVector<R>, trunc: usize) -> Vec<R::Elem> {
    let ring = c.ring();
    let mut s: Vec<R::Elem> = vec![ring.one()];
    for k in 1..=trunc {
        let mut acc = ring.zero();
        if k <= ring.dim() as usize {
            for i in 1..=k {
                acc = ring.sub(&acc, &ring.mul(&c.c(i), &s[k - i]));
            }
        }
        s.push(acc);
    }
    s
}

/// `binom(r + d - 1, d)`.
pub fn sym_rank(r: usize, d: u32) -> usize {
    let b = binomial((r + d as usize - 1) as u64, d as u64);
    usize::try_from(b).expect("symmetric power rank fits in usize")
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Evaluates polynomials in `e_1..e_r` at the Chern classes of a vector.
struct Substitution<'a, R: GradedRing> {
    vector: &'a ChernVector<R>,
    powers: HashMap<(usize, u32), R::Elem>,
}

impl<'a, R: GradedRing> Substitution<'a, R> {
    fn new(vector: &'a ChernVector<R>) -> Self {
        Substitution {
            vector,
            powers: HashMap::new(),
        }
    }

    fn power(&mut self, i: usize, k: u32) -> R::Elem {
        let ring = self.vector.ring();
        if k == 0 {
            return ring.one();
        }
        if let Some(p) = self.powers.get(&(i, k)) {
            return p.clone();
        }
        let p = ring.mul(&self.power(i, k - 1), &self.vector.c(i + 1));
        self.powers.insert((i, k), p.clone());
        p
    }

    fn apply(&mut self, q: &MultiPoly) -> R::Elem {
        let ring = self.vector.ring().clone();
        let mut out = ring.zero();
        for (alpha, coeff) in q.terms() {
            let mut term = ring.one();
            for (i, &k) in alpha.iter().enumerate() {
                if k > 0 {
                    term = ring.mul(&term, &self.power(i, k));
                }
            }
            out = ring.add(&out, &ring.scale(&term, coeff));
        }
        out
    }
}

/// Evaluates a polynomial in `e_1..e_r` at a Chern vector's classes.
pub fn substitute<R: GradedRing>(q: &MultiPoly, c: &ChernVector<R>) -> R::Elem {
    Substitution::new(c).apply(q)
}

type SymKey = (usize, u32, u32);

fn memory_cache() -> &'static Mutex<HashMap<SymKey, Arc<Vec<MultiPoly>>>> {
    static CACHE: OnceLock<Mutex<HashMap<SymKey, Arc<Vec<MultiPoly>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cache_dir_slot() -> &'static RwLock<Option<PathBuf>> {
    static DIR: OnceLock<RwLock<Option<PathBuf>>> = OnceLock::new();
    DIR.get_or_init(|| RwLock::new(None))
}

/// Directory for persisting universal symmetric-power polynomials; `None` disables it.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *cache_dir_slot().write().expect("cache dir lock poisoned") = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    cache_dir_slot()
        .read()
        .expect("cache dir lock poisoned")
        .clone()
}

#[derive(Serialize, Deserialize)]
struct CachedSymPower {
    rank: usize,
    degree: u32,
    cutoff: u32,
    components: Vec<Vec<(Vec<u32>, String)>>,
}

/// Components `c_0..c_cutoff` of `Sym^d` of a rank-`r` bundle, as polynomials
/// in `e_1..e_r` (variable `i` is `e_{i+1}`).
pub fn universal_sym_power(r: usize, d: u32, cutoff: u32) -> Result<Arc<Vec<MultiPoly>>> {
    let key = (r, d, cutoff);
    if let Some(hit) = memory_cache().lock().expect("sym cache poisoned").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let dir = cache_dir();
    let loaded = dir.as_deref().and_then(|d| load_cached(d, key));
    let comps = match loaded {
        Some(c) => c,
        None => {
            let c = compute_universal_sym_power(r, d, cutoff)?;
            if let Some(dir) = dir.as_deref() {
                store_cached(dir, key, &c)?;
            }
            c
        }
    };
    let comps = Arc::new(comps);
    let mut guard = memory_cache().lock().expect("sym cache poisoned");
    Ok(Arc::clone(guard.entry(key).or_insert(comps)))
}

fn cache_file(dir: &Path, (r, d, cutoff): SymKey) -> PathBuf {
    dir.join(format!("sym_r{r}_d{d}_k{cutoff}.json"))
}

fn load_cached(dir: &Path, key: SymKey) -> Option<Vec<MultiPoly>> {
    let text = std::fs::read_to_string(cache_file(dir, key)).ok()?;
    let cached: CachedSymPower = serde_json::from_str(&text).ok()?;
    if (cached.rank, cached.degree, cached.cutoff) != key
        || cached.components.len() != key.2 as usize + 1
    {
        return None;
    }
    cached
        .components
        .iter()
        .map(|c| MultiPoly::from_serialized(key.0, c))
        .collect()
}

fn store_cached(dir: &Path, key: SymKey, comps: &[MultiPoly]) -> Result<()> {
    let cached = CachedSymPower {
        rank: key.0,
        degree: key.1,
        cutoff: key.2,
        components: comps.iter().map(MultiPoly::to_serialized).collect(),
    };
    let text = serde_json::to_string(&cached).map_err(|e| Error::Cache(e.to_string()))?;
    std::fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    // write-then-rename so concurrent readers never see a partial file
    let path = cache_file(dir, key);
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, text).map_err(|e| Error::Cache(e.to_string()))?;
    std::fs::rename(&tmp, &path).map_err(|e| Error::Cache(e.to_string()))
}

/// Expands `Π_m (1 + Σ m_i x_i)` over all degree-`d` monomials `m` in the
/// roots, then rewrites each degree in elementary symmetric polynomials.
pub fn compute_universal_sym_power(r: usize, d: u32, cutoff: u32) -> Result<Vec<MultiPoly>> {
    let mut product = MultiPoly::one(r);
    for m in monomial_exponents(r, d) {
        let mut factor = MultiPoly::one(r);
        for (i, &mi) in m.iter().enumerate() {
            factor = factor.add(&MultiPoly::var(r, i).scale(&BigInt::from(mi)));
        }
        product = product.mul_truncated(&factor, &[], Some(cutoff));
    }
    let e_form = reduce_to_elementary(&SymmetricPoly::new(product))?;
    let weights: Vec<u32> = (1..=r as u32).collect();
    Ok((0..=cutoff)
        .map(|k| e_form.homogeneous(&weights, k))
        .collect())
}

/// Exponent vectors of all degree-`d` monomials in `r` variables.
pub fn monomial_exponents(r: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(r: usize, left: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() + 1 == r {
            acc.push(left);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for k in (0..=left).rev() {
            acc.push(k);
            go(r, left - k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if r > 0 {
        go(r, d, &mut Vec::new(), &mut out);
    }
    out
}
