//! Chow ring of a projective bundle `P(E)` of lines in `E` over a Grassmannian.
//!
//! With `ζ = c_1(O(1))` the ring is generated over the base by `ζ` subject to
//! `ζ^s + c_1(E) ζ^(s-1) + ... + c_s(E) = 0`, and fibre integration sends
//! `ζ^(s-1+j)` to the Segre class `s_j(E)`, where `s(E) = c(E)^{-1}`.
//! The tautological line subbundle `O(-1)` has first Chern class `-ζ`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::Value;

use crate::chern::ChernVector;
use crate::error::{Error, Result};
use crate::ring::GradedRing;
use crate::schubert::{ChowClass, GrassmannianRing};

#[derive(Clone, Debug)]
pub struct ProjBundleRing {
    inner: Arc<Inner>,
}

#[derive(Debug, PartialEq)]
struct Inner {
    base: GrassmannianRing,
    bundle: ChernVector<GrassmannianRing>,
    /// `c_0..c_s`, zero-padded.
    chern: Vec<ChowClass>,
    /// `s_0..s_{dim base}`.
    segre: Vec<ChowClass>,
}

impl PartialEq for ProjBundleRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl ProjBundleRing {
    pub fn new(bundle: ChernVector<GrassmannianRing>) -> Result<Self> {
        let s = bundle.rank();
        if s == 0 {
            return Err(Error::Precondition(
                "projective bundle of a rank-0 bundle".into(),
            ));
        }
        let base = *bundle.ring();
        let chern = (0..=s).map(|i| bundle.c(i)).collect();
        let segre = bundle.segre(base.dim() as usize);
        Ok(ProjBundleRing {
            inner: Arc::new(Inner {
                base,
                bundle,
                chern,
                segre,
            }),
        })
    }

    pub fn base(&self) -> GrassmannianRing {
        self.inner.base
    }

    pub fn bundle(&self) -> &ChernVector<GrassmannianRing> {
        &self.inner.bundle
    }

    /// Fibre dimension plus one.
    pub fn rank(&self) -> usize {
        self.inner.chern.len() - 1
    }

    pub fn dim(&self) -> u32 {
        self.base().dim() + self.rank() as u32 - 1
    }

    pub fn segre(&self) -> &[ChowClass] {
        &self.inner.segre
    }

    /// Reduces an arbitrary polynomial `Σ a_i ζ^i` to canonical form.
    pub fn element(&self, coeffs: Vec<ChowClass>) -> Result<ProjBundleElement> {
        if let Some(bad) = coeffs.iter().find(|a| a.ring() != self.base()) {
            return Err(Error::RingMismatch {
                left: bad.ring().to_string(),
                right: self.base().to_string(),
            });
        }
        Ok(self.reduce(coeffs))
    }

    /// Top-down elimination of `ζ^k`, `k >= s`, via the Grothendieck relation.
    fn reduce(&self, mut raw: Vec<ChowClass>) -> ProjBundleElement {
        let s = self.rank();
        let chern = &self.inner.chern;
        for k in (s..raw.len()).rev() {
            let a = std::mem::replace(&mut raw[k], ChowClass::zero(self.base()));
            if a.is_zero() {
                continue;
            }
            for i in 1..=s {
                if chern[i].is_zero() {
                    continue;
                }
                raw[k - i] = &raw[k - i] - &a.mul_unchecked(&chern[i]);
            }
        }
        raw.truncate(s);
        while raw.len() < s {
            raw.push(ChowClass::zero(self.base()));
        }
        ProjBundleElement {
            ring: self.clone(),
            coeffs: raw,
        }
    }

    pub fn zero(&self) -> ProjBundleElement {
        self.reduce(Vec::new())
    }

    pub fn one(&self) -> ProjBundleElement {
        self.reduce(vec![ChowClass::one(self.base())])
    }

    /// `ζ = c_1(O_P(1))`.
    pub fn zeta(&self) -> ProjBundleElement {
        self.zeta_pow(1)
    }

    pub fn zeta_pow(&self, k: usize) -> ProjBundleElement {
        let mut raw = vec![ChowClass::zero(self.base()); k + 1];
        raw[k] = ChowClass::one(self.base());
        self.reduce(raw)
    }

    /// Pullback of a base class.
    pub fn pullback(&self, a: &ChowClass) -> Result<ProjBundleElement> {
        self.element(vec![a.clone()])
    }

    pub fn pullback_vector(
        &self,
        v: &ChernVector<GrassmannianRing>,
    ) -> Result<ChernVector<ProjBundleRing>> {
        if *v.ring() != self.base() {
            return Err(Error::RingMismatch {
                left: v.ring().to_string(),
                right: self.base().to_string(),
            });
        }
        Ok(v.map_ring(self.clone(), |a| self.reduce(vec![a.clone()])))
    }

    /// Fibre integration of a canonical element: only the `ζ^(s-1)` coefficient survives.
    pub fn pushforward(&self, x: &ProjBundleElement) -> ChowClass {
        x.coeffs[self.rank() - 1].clone()
    }

    /// Fibre integration of an unreduced polynomial `Σ a_i ζ^i`
    /// through Segre classes: `π_*(a_i ζ^i) = a_i s_{i-s+1}(E)`.
    pub fn pushforward_raw(&self, coeffs: &[ChowClass]) -> ChowClass {
        let s = self.rank();
        let mut out = ChowClass::zero(self.base());
        for (i, a) in coeffs.iter().enumerate() {
            if i + 1 < s {
                continue;
            }
            if let Some(seg) = self.inner.segre.get(i + 1 - s) {
                out = &out + &a.mul_unchecked(seg);
            }
        }
        out
    }

    pub fn integrate(&self, x: &ProjBundleElement) -> BigInt {
        self.pushforward(x).integrate()
    }

    fn same(&self, x: &ProjBundleElement) -> Result<()> {
        if x.ring == *self {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: x.ring.describe(),
                right: self.describe(),
            })
        }
    }

    fn mul_unchecked(&self, x: &ProjBundleElement, y: &ProjBundleElement) -> ProjBundleElement {
        let s = self.rank();
        let mut raw = vec![ChowClass::zero(self.base()); 2 * s - 1];
        for (i, a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a.mul_unchecked(b);
                if !prod.is_zero() {
                    raw[i + j] = &raw[i + j] + &prod;
                }
            }
        }
        self.reduce(raw)
    }
}

impl fmt::Display for ProjBundleRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P(rank {} bundle over {})", self.rank(), self.base())
    }
}

/// A ζ-reduced element `a_0 + a_1 ζ + ... + a_{s-1} ζ^(s-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjBundleElement {
    ring: ProjBundleRing,
    coeffs: Vec<ChowClass>,
}

impl ProjBundleElement {
    pub fn ring(&self) -> &ProjBundleRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[ChowClass] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ChowClass::is_zero)
    }

    pub fn multiply(&self, other: &ProjBundleElement) -> Result<ProjBundleElement> {
        self.ring.same(other)?;
        Ok(self.ring.mul_unchecked(self, other))
    }

    pub fn pushforward(&self) -> ChowClass {
        self.ring.pushforward(self)
    }

    pub fn integrate(&self) -> BigInt {
        self.ring.integrate(self)
    }

    /// Total-degree `deg` component, where `a ζ^i` has degree `deg(a) + i`.
    pub fn homogeneous(&self, deg: u32) -> ProjBundleElement {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| match deg.checked_sub(i as u32) {
                Some(d) => a.homogeneous(d),
                None => ChowClass::zero(a.ring()),
            })
            .collect();
        ProjBundleElement {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn scale(&self, k: &BigInt) -> ProjBundleElement {
        ProjBundleElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| a.scale(k)).collect(),
        }
    }

    /// One serialized base class per power of ζ.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|a| serde_json::to_value(a.to_serialized()).expect("serializable"))
                .collect(),
        )
    }
}

impl Add for &ProjBundleElement {
    type Output = ProjBundleElement;

    fn add(self, rhs: &ProjBundleElement) -> ProjBundleElement {
        assert_eq!(
            self.ring, rhs.ring,
            "adding elements of different projective bundles"
        );
        ProjBundleElement {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Neg for &ProjBundleElement {
    type Output = ProjBundleElement;

    fn neg(self) -> ProjBundleElement {
        ProjBundleElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Sub for &ProjBundleElement {
    type Output = ProjBundleElement;

    fn sub(self, rhs: &ProjBundleElement) -> ProjBundleElement {
        self + &(-rhs)
    }
}

impl fmt::Display for ProjBundleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({a})")?,
                1 => write!(f, "({a})ζ")?,
                _ => write!(f, "({a})ζ^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl GradedRing for ProjBundleRing {
    type Elem = ProjBundleElement;

    fn dim(&self) -> u32 {
        ProjBundleRing::dim(self)
    }

    fn zero(&self) -> ProjBundleElement {
        ProjBundleRing::zero(self)
    }

    fn one(&self) -> ProjBundleElement {
        ProjBundleRing::one(self)
    }

    fn add(&self, a: &ProjBundleElement, b: &ProjBundleElement) -> ProjBundleElement {
        a + b
    }

    fn neg(&self, a: &ProjBundleElement) -> ProjBundleElement {
        -a
    }

    fn mul(&self, a: &ProjBundleElement, b: &ProjBundleElement) -> ProjBundleElement {
        self.mul_unchecked(a, b)
    }

    fn scale(&self, a: &ProjBundleElement, k: &BigInt) -> ProjBundleElement {
        a.scale(k)
    }

    fn is_zero(&self, a: &ProjBundleElement) -> bool {
        a.is_zero()
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use num_traits::Zero;

    fn gr(r: u32, n: u32) -> GrassmannianRing {
        GrassmannianRing::new(r, n).unwrap()
    }

    /// The smallest Grassmannian, Gr(1,2) = P^1, stands in for "a point"
    /// once we only look at base-degree-zero data.
    fn projective_space(s: usize) -> ProjBundleRing {
        ProjBundleRing::new(ChernVector::trivial(gr(1, 2), s)).unwrap()
    }

    #[test]
    fn multiplicative_identity() {
        let g = gr(2, 4);
        let p = ProjBundleRing::new(ChernVector::universal_dual(g).sym_power(2).unwrap()).unwrap();
        let x = &p.zeta_pow(2) + &p.pullback(&ChowClass::special(g, 1)).unwrap();
        assert_eq!(x.multiply(&p.one()).unwrap(), x);
    }

    #[test]
    fn trivial_bundle_is_projective_space() {
        let p = projective_space(6);
        let z5 = p.zeta_pow(5);
        assert!(z5.multiply(&p.zeta()).unwrap().is_zero());
        assert_eq!(p.pushforward(&z5), ChowClass::one(gr(1, 2)));
        for i in 0..6 {
            let expect = if i == 5 { 1 } else { 0 };
            assert_eq!(
                p.pushforward(&p.zeta_pow(i))
                    .coefficient(&Partition::empty()),
                BigInt::from(expect)
            );
        }
    }

    #[test]
    fn line_bundle_case() {
        let g = gr(2, 4);
        let line = ChernVector::line(g, ChowClass::special(g, 1));
        let p = ProjBundleRing::new(line).unwrap();
        assert_eq!(p.zeta().coeffs(), &[-&ChowClass::special(g, 1)]);
    }

    #[test]
    fn pushforward_examples() {
        let g = gr(2, 5);
        let e = ChernVector::universal_dual(g).sym_power(2).unwrap();
        let p = ProjBundleRing::new(e.clone()).unwrap();
        let s = p.rank();
        assert_eq!(p.pushforward(&p.zeta_pow(s - 1)), ChowClass::one(g));
        assert!(p.pushforward(&p.one()).is_zero());
        assert_eq!(p.pushforward(&p.zeta_pow(s)), -&e.c(1));
    }

    #[test]
    fn integrate_degree_mismatch_is_zero() {
        let g = gr(2, 4);
        let p = ProjBundleRing::new(ChernVector::universal_dual(g).sym_power(2).unwrap()).unwrap();
        assert!(p.integrate(&p.zeta_pow(3)).is_zero());
        assert!(p.integrate(&p.one()).is_zero());
    }

    #[test]
    fn rejects_foreign_elements() {
        let p = ProjBundleRing::new(ChernVector::trivial(gr(2, 4), 2)).unwrap();
        let q = ProjBundleRing::new(ChernVector::trivial(gr(2, 4), 3)).unwrap();
        assert!(p.one().multiply(&q.one()).is_err());
        assert!(p.pullback(&ChowClass::one(gr(2, 5))).is_err());
        assert!(ProjBundleRing::new(ChernVector::trivial(gr(2, 4), 0)).is_err());
    }
}
