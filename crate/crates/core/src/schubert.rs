//! Chow ring of the Grassmannian `Gr(r, N)` in the Schubert basis.
//!
//! `Gr(r, N)` is the variety of `r`-dimensional subspaces of an
//! `N`-dimensional vector space. Schubert classes `σ_λ` are indexed by
//! partitions inside the `r x (N - r)` box; `σ_λ` has codimension `|λ|`.
//! With this convention `c_i(U*) = σ_(1^i)` and `c_i(Q) = σ_(i)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::littlewood::{lr_product, lr_product_uncached};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassmannianRing {
    r: u32,
    n: u32,
}

impl GrassmannianRing {
    pub fn new(r: u32, n: u32) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(Error::InvalidGrassmannian { r, n });
        }
        Ok(GrassmannianRing { r, n })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of rows of the partition box.
    pub fn rows(&self) -> u32 {
        self.r
    }

    /// Number of columns of the partition box.
    pub fn cols(&self) -> u32 {
        self.n - self.r
    }

    pub fn dim(&self) -> u32 {
        self.r * (self.n - self.r)
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.fits(self.rows(), self.cols())
    }

    /// The full box, indexing the class of a point.
    pub fn point_partition(&self) -> Partition {
        Partition::from_sorted(vec![self.cols(); self.rows() as usize])
    }

    pub fn basis(&self) -> Vec<Partition> {
        Partition::all_in_box(self.rows(), self.cols())
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if self.contains(lambda) {
            Ok(())
        } else {
            Err(Error::OutOfBox {
                partition: lambda.to_string(),
                rows: self.rows(),
                cols: self.cols(),
            })
        }
    }

    /// Poincaré-dual partition: the complement of `λ` in the box, rotated.
    pub fn dual_partition(&self, lambda: &Partition) -> Result<Partition> {
        self.check(lambda)?;
        let rows = self.rows() as usize;
        let parts = (0..rows)
            .map(|i| self.cols() - lambda.part(rows - 1 - i))
            .collect();
        Ok(Partition::from_sorted(parts))
    }

    /// `c_i(U*) = σ_(1^i)` for the dual of the tautological subbundle.
    pub fn universal_dual_chern(&self, i: u32) -> Result<ChowClass> {
        if i > self.r {
            return Err(Error::RankExceeded {
                index: i as usize,
                rank: self.r as usize,
            });
        }
        Ok(ChowClass::basis(*self, Partition::column(i)))
    }

    /// `c_i(Q) = σ_(i)` for the tautological quotient bundle.
    pub fn universal_quotient_chern(&self, i: u32) -> Result<ChowClass> {
        if i > self.cols() {
            return Err(Error::RankExceeded {
                index: i as usize,
                rank: self.cols() as usize,
            });
        }
        Ok(ChowClass::basis(*self, Partition::row(i)))
    }

    /// Giambelli: `σ_λ = det(σ_{λ_i + j - i})`, expanded with Pieri only.
    ///
    /// This never touches the Littlewood–Richardson code and serves as its
    /// independent cross-check.
    pub fn giambelli(&self, lambda: &Partition) -> Result<ChowClass> {
        self.check(lambda)?;
        let l = lambda.len();
        let mut total = ChowClass::zero(*self);
        for (perm, sign) in permutations(l) {
            let mut term = ChowClass::one(*self);
            let mut vanished = false;
            for (i, &j) in perm.iter().enumerate() {
                let index = lambda.part(i) as i64 + j as i64 - i as i64;
                if index < 0 {
                    vanished = true;
                    break;
                }
                term = term.pieri(index as u32);
            }
            if !vanished {
                total = if sign > 0 {
                    &total + &term
                } else {
                    &total - &term
                };
            }
        }
        Ok(total)
    }
}

impl fmt::Display for GrassmannianRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.r, self.n)
    }
}

/// All permutations of `0..n` with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn go(
        rest: &mut Vec<usize>,
        acc: &mut Vec<usize>,
        sign: i32,
        out: &mut Vec<(Vec<usize>, i32)>,
    ) {
        if rest.is_empty() {
            out.push((acc.clone(), sign));
            return;
        }
        for idx in 0..rest.len() {
            let v = rest.remove(idx);
            acc.push(v);
            // removing the idx-th remaining element is idx transpositions away
            let s = if idx % 2 == 0 { sign } else { -sign };
            go(rest, acc, s, out);
            acc.pop();
            rest.insert(idx, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), 1, &mut out);
    out
}

/// An element of the Chow ring of a Grassmannian: a sparse integer
/// combination of Schubert classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass {
    ring: GrassmannianRing,
    terms: BTreeMap<Partition, BigInt>,
}

impl ChowClass {
    pub fn zero(ring: GrassmannianRing) -> Self {
        ChowClass {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: GrassmannianRing) -> Self {
        Self::basis(ring, Partition::empty())
    }

    fn basis(ring: GrassmannianRing, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        ChowClass { ring, terms }
    }

    /// The Schubert class `σ_λ`.
    pub fn schubert(ring: GrassmannianRing, lambda: Partition) -> Result<Self> {
        ring.check(&lambda)?;
        Ok(Self::basis(ring, lambda))
    }

    /// The special class `σ_a`; zero when `a` exceeds the box width.
    pub fn special(ring: GrassmannianRing, a: u32) -> Self {
        if a > ring.cols() {
            Self::zero(ring)
        } else {
            Self::basis(ring, Partition::row(a))
        }
    }

    /// Builds a class from `(λ, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(ring: GrassmannianRing, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut out = Self::zero(ring);
        for (lambda, c) in terms {
            ring.check(&lambda)?;
            out.add_term(lambda, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> GrassmannianRing {
        self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every term has weight `deg` (the zero class is homogeneous of every degree).
    pub fn is_homogeneous_of(&self, deg: u32) -> bool {
        self.terms.keys().all(|p| p.weight() == deg)
    }

    /// The degree-`deg` component.
    pub fn homogeneous(&self, deg: u32) -> ChowClass {
        ChowClass {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() == deg)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> ChowClass {
        if k.is_zero() {
            return Self::zero(self.ring);
        }
        ChowClass {
            ring: self.ring,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * k)).collect(),
        }
    }

    /// Pieri rule: `self · σ_a`.
    pub fn pieri(&self, a: u32) -> ChowClass {
        let mut out = Self::zero(self.ring);
        let rows = self.ring.rows() as usize;
        let cols = self.ring.cols();
        for (lambda, c) in &self.terms {
            let old: Vec<u32> = (0..rows).map(|i| lambda.part(i)).collect();
            let mut shape = old.clone();
            horizontal_strips(&old, &mut shape, 0, a, cols, &mut |nu| {
                out.add_term(Partition::from_sorted(nu.to_vec()), c.clone());
            });
        }
        out
    }

    /// Product via Littlewood–Richardson coefficients.
    pub fn multiply(&self, other: &ChowClass) -> Result<ChowClass> {
        self.same_ring(other)?;
        Ok(self.mul_with(other, |a, b, r, c| lr_product(a, b, r, c).as_ref().clone()))
    }

    /// [`multiply`](Self::multiply) with memoization bypassed.
    pub fn multiply_uncached(&self, other: &ChowClass) -> Result<ChowClass> {
        self.same_ring(other)?;
        Ok(self.mul_with(other, lr_product_uncached))
    }

    pub(crate) fn mul_unchecked(&self, other: &ChowClass) -> ChowClass {
        debug_assert_eq!(self.ring, other.ring);
        self.mul_with(other, |a, b, r, c| lr_product(a, b, r, c).as_ref().clone())
    }

    fn mul_with<F>(&self, other: &ChowClass, lr: F) -> ChowClass
    where
        F: Fn(&Partition, &Partition, u32, u32) -> Vec<(Partition, u64)>,
    {
        let mut out = Self::zero(self.ring);
        let dim = self.ring.dim();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.weight() + b.weight() > dim {
                    continue;
                }
                let prod = ca * cb;
                for (nu, k) in lr(a, b, self.ring.rows(), self.ring.cols()) {
                    out.add_term(nu, &prod * BigInt::from(k));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> ChowClass {
        let mut out = Self::one(self.ring);
        for _ in 0..e {
            out = out.mul_unchecked(self);
        }
        out
    }

    /// Degree of the zero-dimensional component: the coefficient of the point class.
    pub fn integrate(&self) -> BigInt {
        self.coefficient(&self.ring.point_partition())
    }

    fn same_ring(&self, other: &ChowClass) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            })
        }
    }

    /// `(partition, decimal coefficient)` pairs in lexicographic partition order.
    pub fn to_serialized(&self) -> Vec<(Vec<u32>, String)> {
        self.terms
            .iter()
            .map(|(p, c)| (p.parts().to_vec(), c.to_string()))
            .collect()
    }

    pub fn from_serialized(ring: GrassmannianRing, data: &[(Vec<u32>, String)]) -> Result<Self> {
        let terms = data
            .iter()
            .map(|(parts, c)| {
                let coeff = c
                    .parse::<BigInt>()
                    .map_err(|_| Error::Precondition(format!("bad coefficient {c:?}")))?;
                Ok((Partition::new(parts.clone())?, coeff))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(ring, terms)
    }
}

/// Enumerates shapes obtained from `old` by adding `remaining` boxes as a
/// horizontal strip, rows from `row` downward.
fn horizontal_strips<F: FnMut(&[u32])>(
    old: &[u32],
    shape: &mut Vec<u32>,
    row: usize,
    remaining: u32,
    cols: u32,
    emit: &mut F,
) {
    if remaining == 0 {
        emit(shape);
        return;
    }
    if row == old.len() {
        return;
    }
    let ceiling = if row == 0 { cols } else { old[row - 1] };
    let room = ceiling - old[row];
    for a in 0..=room.min(remaining) {
        shape[row] = old[row] + a;
        horizontal_strips(old, shape, row + 1, remaining - a, cols, emit);
    }
    shape[row] = old[row];
}

impl Add for &ChowClass {
    type Output = ChowClass;

    fn add(self, rhs: &ChowClass) -> ChowClass {
        assert_eq!(
            self.ring, rhs.ring,
            "adding classes from different Grassmannians"
        );
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;

    fn sub(self, rhs: &ChowClass) -> ChowClass {
        self + &(-rhs)
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;

    fn neg(self) -> ChowClass {
        ChowClass {
            ring: self.ring,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if p.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "σ{p}")?;
            } else {
                write!(f, "{mag}σ{p}")?;
            }
        }
        Ok(())
    }
}
