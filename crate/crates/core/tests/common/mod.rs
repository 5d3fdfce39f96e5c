//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use curvecount::poly::MultiPoly;
use curvecount::Partition;
use num_bigint::BigInt;

/// `e_0..e_len` of a list of integers.
pub fn elementary_of(xs: &[i64]) -> Vec<BigInt> {
    let mut e = vec![BigInt::from(1)];
    for &x in xs {
        e.push(BigInt::from(0));
        for k in (1..e.len()).rev() {
            let prev = e[k - 1].clone();
            e[k] += prev * x;
        }
    }
    e
}

/// Complete homogeneous `h_0..h_n` of a list of integers.
pub fn complete_of(xs: &[i64], n: usize) -> Vec<BigInt> {
    let mut h = vec![BigInt::from(0); n + 1];
    h[0] = BigInt::from(1);
    for &x in xs {
        for k in 1..=n {
            let prev = h[k - 1].clone();
            h[k] += prev * x;
        }
    }
    h
}

/// All permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in signed_permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, n - 1);
            // the new largest entry passes len - pos smaller ones
            let s = if (perm.len() - pos) % 2 == 0 {
                sign
            } else {
                -sign
            };
            out.push((p, s));
        }
    }
    out
}

/// Sum over all variable permutations of the given monomials.
pub fn symmetrize(r: usize, terms: &[(Vec<u32>, i64)]) -> MultiPoly {
    let mut p = MultiPoly::zero(r);
    for (exps, c) in terms {
        for (perm, _) in signed_permutations(r) {
            let permuted: Vec<u32> = perm.iter().map(|&i| exps[i]).collect();
            p.add_term(permuted, BigInt::from(*c));
        }
    }
    p
}

/// Counts semistandard fillings of ν/λ with content μ whose reverse reading
/// word is a lattice word, filling one cell at a time.
pub fn lr_brute(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lambda) || nu.weight() != lambda.weight() + mu.weight() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|i| (lambda.part(i) as usize..nu.part(i) as usize).map(move |j| (i, j)))
        .collect();
    let mut grid = vec![vec![0u32; nu.part(0) as usize]; nu.len()];
    let mut left = mu.parts().to_vec();
    fill(0, &cells, &mut grid, &mut left, lambda, nu)
}

fn fill(
    k: usize,
    cells: &[(usize, usize)],
    grid: &mut Vec<Vec<u32>>,
    left: &mut Vec<u32>,
    lambda: &Partition,
    nu: &Partition,
) -> u64 {
    if k == cells.len() {
        return u64::from(is_lattice(grid, lambda, nu));
    }
    let (i, j) = cells[k];
    let mut total = 0;
    for v in 1..=left.len() as u32 {
        if left[v as usize - 1] == 0 {
            continue;
        }
        if j as u32 > lambda.part(i) && grid[i][j - 1] > v {
            continue;
        }
        // a cell above inside λ imposes nothing
        if i > 0 && (j as u32) >= lambda.part(i - 1) && grid[i - 1][j] >= v {
            continue;
        }
        grid[i][j] = v;
        left[v as usize - 1] -= 1;
        total += fill(k + 1, cells, grid, left, lambda, nu);
        left[v as usize - 1] += 1;
        grid[i][j] = 0;
    }
    total
}

fn is_lattice(grid: &[Vec<u32>], lambda: &Partition, nu: &Partition) -> bool {
    let mut seen = vec![0u32; nu.weight() as usize + 2];
    for (i, row) in grid.iter().enumerate().take(nu.len()) {
        for j in (lambda.part(i) as usize..nu.part(i) as usize).rev() {
            let v = row[j] as usize;
            seen[v] += 1;
            if v > 1 && seen[v] > seen[v - 1] {
                return false;
            }
        }
    }
    true
}
