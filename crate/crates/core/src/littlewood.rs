//! Littlewood–Richardson coefficients by the tableaux rule.
//!
//! The skew shape `ν/λ` is filled one content row at a time: the `μ_k` boxes
//! labelled `k` are added as a horizontal strip, and the reverse reading word
//! must stay a lattice word. Shapes are pruned to the `rows x cols` box as they
//! grow, so out-of-box products never materialize.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::partition::Partition;

type LrKey = (Partition, Partition, u32, u32);
type LrTable = Arc<Vec<(Partition, u64)>>;

fn cache() -> &'static Mutex<HashMap<LrKey, LrTable>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, LrTable>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized `σ_λ · σ_μ` expansion inside the box. Entries have positive coefficients.
pub fn lr_product(lambda: &Partition, mu: &Partition, rows: u32, cols: u32) -> LrTable {
    // commutativity: add the smaller shape's content
    let (outer, inner) = if mu.weight() <= lambda.weight() {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let key = (outer.clone(), inner.clone(), rows, cols);
    if let Some(hit) = cache().lock().expect("lr cache poisoned").get(&key) {
        return Arc::clone(hit);
    }
    let table = Arc::new(lr_product_uncached(outer, inner, rows, cols));
    // concurrent fills compute identical tables; whichever lands first wins
    let mut guard = cache().lock().expect("lr cache poisoned");
    Arc::clone(guard.entry(key).or_insert(table))
}

/// The same expansion with no memoization.
pub fn lr_product_uncached(
    lambda: &Partition,
    mu: &Partition,
    rows: u32,
    cols: u32,
) -> Vec<(Partition, u64)> {
    if !lambda.fits(rows, cols) || !mu.fits(rows, cols) {
        return Vec::new();
    }
    let nrows = rows as usize;
    let mut shape = vec![0u32; nrows];
    for (i, p) in lambda.parts().iter().enumerate() {
        shape[i] = *p;
    }
    let mut out: HashMap<Partition, u64> = HashMap::new();
    let mut search = Search {
        content: mu.parts(),
        cols,
        out: &mut out,
    };
    // `prev` counts the previous label per row; label 1 is unconstrained
    search.place_label(0, &mut shape, None);
    let mut table: Vec<_> = out.into_iter().collect();
    table.sort();
    table
}

/// Single coefficient `c^ν_{λμ}` (zero when any shape leaves the box).
pub fn lr_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    rows: u32,
    cols: u32,
) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() {
        return 0;
    }
    lr_product(lambda, mu, rows, cols)
        .iter()
        .find(|(p, _)| p == nu)
        .map_or(0, |(_, c)| *c)
}

struct Search<'a> {
    content: &'a [u32],
    cols: u32,
    out: &'a mut HashMap<Partition, u64>,
}

impl Search<'_> {
    /// Places all boxes of label `k + 1` (index `k`), then recurses.
    fn place_label(&mut self, k: usize, shape: &mut Vec<u32>, prev: Option<&[u32]>) {
        if k == self.content.len() {
            *self
                .out
                .entry(Partition::from_sorted(shape.clone()))
                .or_insert(0) += 1;
            return;
        }
        let old = shape.clone();
        let mut added = vec![0u32; shape.len()];
        self.strip_row(k, 0, self.content[k], &old, shape, &mut added, prev, 0, 0);
    }

    #[allow(clippy::too_many_arguments)]
    fn strip_row(
        &mut self,
        k: usize,
        row: usize,
        remaining: u32,
        old: &[u32],
        shape: &mut Vec<u32>,
        added: &mut Vec<u32>,
        prev: Option<&[u32]>,
        placed_so_far: u32,
        prev_above: u32,
    ) {
        if remaining == 0 {
            let added_now = added.clone();
            self.place_label(k + 1, shape, Some(&added_now));
            return;
        }
        if row == shape.len() {
            return;
        }
        let ceiling = if row == 0 {
            self.cols
        } else {
            old[row - 1].min(self.cols)
        };
        let room = ceiling.saturating_sub(old[row]);
        // lattice: labels k+1 in rows <= row may not exceed labels k in rows < row
        let lattice_cap = if prev.is_some() {
            prev_above.saturating_sub(placed_so_far)
        } else {
            u32::MAX
        };
        let max_here = room.min(remaining).min(lattice_cap);
        let next_prev_above = prev_above + prev.map_or(0, |p| p[row]);
        for a in (0..=max_here).rev() {
            shape[row] = old[row] + a;
            added[row] = a;
            self.strip_row(
                k,
                row + 1,
                remaining - a,
                old,
                shape,
                added,
                prev,
                placed_so_far + a,
                next_prev_above,
            );
        }
        shape[row] = old[row];
        added[row] = 0;
    }
}
