use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Exponent vectors are compared lexicographically with variable 0 most
/// significant, so the last key of `terms` is the lex-leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, unit(nvars, i), BigInt::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: BigInt) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, BigInt)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lex-leading term.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Product, dropping monomials whose weighted degree exceeds `cutoff`.
    pub fn mul_truncated(
        &self,
        other: &MultiPoly,
        weights: &[u32],
        cutoff: Option<u32>,
    ) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            let da = weighted_degree(ea, weights);
            for (eb, cb) in &other.terms {
                if let Some(k) = cutoff {
                    if da + weighted_degree(eb, weights) > k {
                        continue;
                    }
                }
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.mul_truncated(other, &[], None)
    }

    /// Component of weighted degree exactly `deg`.
    pub fn homogeneous(&self, weights: &[u32], deg: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| weighted_degree(e, weights) == deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncate(&self, weights: &[u32], cutoff: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| weighted_degree(e, weights) <= cutoff)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_degree(&self, weights: &[u32]) -> Option<u32> {
        self.terms.keys().map(|e| weighted_degree(e, weights)).max()
    }

    pub fn evaluate(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| {
                    acc * num_traits::pow(x.clone(), k as usize)
                })
            })
            .sum()
    }

    /// Applies a permutation of the variables: variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &k) in e.iter().enumerate() {
                ne[perm[i]] = k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Human-readable form such as `18*c1^2*c2 + 9*c2^2`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        // highest-lex first reads more naturally
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let mut factors = Vec::new();
            for (k, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(names[k].clone()),
                    _ => factors.push(format!("{}^{p}", names[k])),
                }
            }
            if factors.is_empty() || !mag.is_one() {
                let _ = write!(s, "{mag}");
                if !factors.is_empty() {
                    s.push('*');
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }

    /// `(exponents, decimal coefficient)` pairs in lexicographic order.
    pub fn to_serialized(&self) -> Vec<(Vec<u32>, String)> {
        self.terms
            .iter()
            .map(|(e, c)| (e.clone(), c.to_string()))
            .collect()
    }

    pub fn from_serialized(nvars: usize, data: &[(Vec<u32>, String)]) -> Option<MultiPoly> {
        let mut p = Self::zero(nvars);
        for (e, c) in data {
            if e.len() != nvars {
                return None;
            }
            p.add_term(e.clone(), c.parse().ok()?);
        }
        Some(p)
    }
}

pub fn weighted_degree(exps: &[u32], weights: &[u32]) -> u32 {
    if weights.is_empty() {
        return exps.iter().sum();
    }
    exps.iter().zip(weights).map(|(e, w)| e * w).sum()
}

pub(crate) fn unit(nvars: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; nvars];
    e[i] = 1;
    e
}
