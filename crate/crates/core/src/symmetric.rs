//! Symmetric polynomials in formal Chern roots and their expression in
//! elementary symmetric polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;

/// A polynomial in `r` formal roots, expected to be invariant under every
/// permutation of the roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPoly {
    poly: MultiPoly,
}

impl SymmetricPoly {
    /// Wraps a root polynomial. Symmetry is not checked here;
    /// [`reduce_to_elementary`] rejects non-symmetric input.
    pub fn new(poly: MultiPoly) -> Self {
        SymmetricPoly { poly }
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// Checks invariance under all adjacent transpositions, which generate the symmetric group.
    pub fn is_symmetric(&self) -> bool {
        let n = self.nvars();
        (0..n.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(i, i + 1);
            self.poly.permute(&perm) == self.poly
        })
    }
}

/// `e_k(x_1, ..., x_r)` as a polynomial in the roots.
pub fn elementary(r: usize, k: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(r);
    if k > r {
        return out;
    }
    let mut chosen = Vec::with_capacity(k);
    subsets(r, k, 0, &mut chosen, &mut |s| {
        let mut e = vec![0; r];
        for &i in s {
            e[i] = 1;
        }
        out.add_term(e, BigInt::from(1));
    });
    out
}

fn subsets<F: FnMut(&[usize])>(
    n: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut F,
) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for i in start..n {
        chosen.push(i);
        subsets(n, k, i + 1, chosen, f);
        chosen.pop();
    }
}

/// Rewrites a symmetric polynomial as a polynomial in `e_1, ..., e_r`.
///
/// The result's variable `i` stands for `e_{i+1}`. Works by repeatedly
/// cancelling the lex-leading monomial `x^a` with `e_1^{a_1-a_2} ... e_r^{a_r}`.
pub fn reduce_to_elementary(p: &SymmetricPoly) -> Result<MultiPoly> {
    let r = p.nvars();
    let mut powers = ElementaryPowers::new(r);
    let mut rem = p.poly().clone();
    let mut out = MultiPoly::zero(r);
    while let Some((lead, c)) = rem.leading_term() {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric(lead.clone()));
        }
        let c = c.clone();
        let alpha: Vec<u32> = (0..r)
            .map(|i| lead[i] - if i + 1 < r { lead[i + 1] } else { 0 })
            .collect();
        let expanded = powers.monomial(&alpha);
        rem = rem.sub(&expanded.scale(&c));
        out.add_term(alpha, c);
    }
    Ok(out)
}

/// Substitutes `e_i(x)` for variable `i` of a polynomial in elementary symmetric polynomials.
pub fn expand_elementary(q: &MultiPoly) -> MultiPoly {
    let r = q.nvars();
    let mut powers = ElementaryPowers::new(r);
    let mut out = MultiPoly::zero(r);
    for (alpha, c) in q.terms() {
        out = out.add(&powers.monomial(alpha).scale(c));
    }
    out
}

struct ElementaryPowers {
    r: usize,
    base: Vec<MultiPoly>,
    cache: HashMap<(usize, u32), MultiPoly>,
}

impl ElementaryPowers {
    fn new(r: usize) -> Self {
        ElementaryPowers {
            r,
            base: (1..=r).map(|k| elementary(r, k)).collect(),
            cache: HashMap::new(),
        }
    }

    fn power(&mut self, i: usize, k: u32) -> MultiPoly {
        if k == 0 {
            return MultiPoly::one(self.r);
        }
        if let Some(p) = self.cache.get(&(i, k)) {
            return p.clone();
        }
        let p = self.power(i, k - 1).mul(&self.base[i]);
        self.cache.insert((i, k), p.clone());
        p
    }

    fn monomial(&mut self, alpha: &[u32]) -> MultiPoly {
        let mut out = MultiPoly::one(self.r);
        for (i, &k) in alpha.iter().enumerate() {
            if k > 0 {
                out = out.mul(&self.power(i, k));
            }
        }
        out
    }
}
