//! Graded rings that can host Chern classes.

use std::fmt::Debug;

use num_bigint::BigInt;

use crate::poly::{weighted_degree, MultiPoly};
use crate::schubert::{ChowClass, GrassmannianRing};

/// A commutative graded ring, truncated above its top degree.
///
/// Chern-class operations are generic over this trait so that the same
/// splitting-principle code runs on Grassmannians, projective bundles and
/// formal polynomial rings.
pub trait GradedRing: Clone + Debug + PartialEq {
    type Elem: Clone + Debug + PartialEq;

    /// Top degree; everything above it vanishes.
    fn dim(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, k: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Short label used in error messages.
    fn describe(&self) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }
}

impl GradedRing for GrassmannianRing {
    type Elem = ChowClass;

    fn dim(&self) -> u32 {
        GrassmannianRing::dim(self)
    }

    fn zero(&self) -> ChowClass {
        ChowClass::zero(*self)
    }

    fn one(&self) -> ChowClass {
        ChowClass::one(*self)
    }

    fn add(&self, a: &ChowClass, b: &ChowClass) -> ChowClass {
        a + b
    }

    fn neg(&self, a: &ChowClass) -> ChowClass {
        -a
    }

    fn mul(&self, a: &ChowClass, b: &ChowClass) -> ChowClass {
        a.mul_unchecked(b)
    }

    fn scale(&self, a: &ChowClass, k: &BigInt) -> ChowClass {
        a.scale(k)
    }

    fn is_zero(&self, a: &ChowClass) -> bool {
        a.is_zero()
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

/// Polynomial ring `Z[v_1, ..., v_m]` with positive variable weights,
/// truncated above `cutoff`. Hosts formal Chern classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedPolyRing {
    names: Vec<String>,
    weights: Vec<u32>,
    cutoff: u32,
}

impl WeightedPolyRing {
    pub fn new(names: Vec<String>, weights: Vec<u32>, cutoff: u32) -> Self {
        assert_eq!(names.len(), weights.len());
        assert!(weights.iter().all(|&w| w > 0));
        WeightedPolyRing {
            names,
            weights,
            cutoff,
        }
    }

    /// `Z[c_1, ..., c_r]` with `deg c_i = i`: the ring of formal Chern classes of a rank-`r` bundle.
    pub fn chern_classes(prefix: &str, r: usize, cutoff: u32) -> Self {
        Self::new(
            (1..=r).map(|i| format!("{prefix}{i}")).collect(),
            (1..=r as u32).collect(),
            cutoff,
        )
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var(&self, i: usize) -> MultiPoly {
        MultiPoly::var(self.nvars(), i)
    }

    pub fn degree_of(&self, exps: &[u32]) -> u32 {
        weighted_degree(exps, &self.weights)
    }

    pub fn display(&self, p: &MultiPoly) -> String {
        p.display_with(&self.names)
    }
}

impl GradedRing for WeightedPolyRing {
    type Elem = MultiPoly;

    fn dim(&self) -> u32 {
        self.cutoff
    }

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.nvars())
    }

    fn one(&self) -> MultiPoly {
        MultiPoly::one(self.nvars())
    }

    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.add(b)
    }

    fn neg(&self, a: &MultiPoly) -> MultiPoly {
        a.neg()
    }

    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.mul_truncated(b, &self.weights, Some(self.cutoff))
    }

    fn scale(&self, a: &MultiPoly, k: &BigInt) -> MultiPoly {
        a.scale(k)
    }

    fn is_zero(&self, a: &MultiPoly) -> bool {
        a.is_zero()
    }

    fn describe(&self) -> String {
        format!("Z[{}]/(deg>{})", self.names.join(","), self.cutoff)
    }
}
