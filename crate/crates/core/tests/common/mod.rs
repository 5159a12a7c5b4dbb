//! Naive reference implementations shared by the integration tests.
//!
//! Everything here works on plain `Vec<usize>` and recomputes from scratch,
//! so none of it depends on the library code it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigUint;

/// Every partition fitting in `width` columns and `height` rows.
pub fn partitions_in_box(width: usize, height: usize) -> Vec<Vec<usize>> {
    fn go(max_part: usize, rows_left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if rows_left == 0 {
            return;
        }
        for p in 1..=max_part {
            prefix.push(p);
            go(p, rows_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(width, height, &mut Vec::new(), &mut out);
    out
}

/// Every partition of `m`.
pub fn partitions_of(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// Hook lengths by counting boxes on a 0/1 grid.
pub fn grid_hooks(parts: &[usize]) -> Vec<Vec<usize>> {
    let rows = parts.len();
    let cols = parts.first().copied().unwrap_or(0);
    let filled = |r: usize, c: usize| r < rows && c < parts[r];
    let mut hooks = Vec::with_capacity(rows);
    for (r, &len) in parts.iter().enumerate() {
        let mut row = Vec::with_capacity(len);
        for c in 0..len {
            let arm = (c + 1..cols).filter(|&cc| filled(r, cc)).count();
            let leg = (r + 1..rows).filter(|&rr| filled(rr, c)).count();
            row.push(arm + leg + 1);
        }
        hooks.push(row);
    }
    hooks
}

pub fn is_core(parts: &[usize], t: usize) -> bool {
    grid_hooks(parts).iter().flatten().all(|&h| h != t)
}

pub fn interior_size(parts: &[usize], t: usize) -> usize {
    grid_hooks(parts)
        .iter()
        .flatten()
        .filter(|&&h| h > t)
        .count()
}

pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (0..width)
        .map(|c| parts.iter().filter(|&&p| p > c).count())
        .collect()
}

/// All `(i, j)` with a t-core in the `k x (n-k)` box of interior size `i`
/// and size `j`.
pub fn knijt_pairs(k: usize, n: usize, t: usize) -> BTreeSet<(usize, usize)> {
    partitions_in_box(k, n - k)
        .into_iter()
        .filter(|p| is_core(p, t))
        .map(|p| (interior_size(&p, t), p.iter().sum()))
        .collect()
}

pub fn knijt_witnesses(k: usize, n: usize, i: usize, j: usize, t: usize) -> Vec<Vec<usize>> {
    partitions_in_box(k, n - k)
        .into_iter()
        .filter(|p| p.iter().sum::<usize>() == j && is_core(p, t) && interior_size(p, t) == i)
        .collect()
}

/// Borel–Weil–Bott for the summand of `Ω^j(t)` indexed by `parts`:
/// `None` if acyclic, else `(degree, dimension)`. Dimension by the Weyl
/// product formula.
pub fn bwb(parts: &[usize], k: usize, n: usize, t: i64) -> Option<(usize, BigUint)> {
    let conj = conjugate(parts);
    let at = |v: &[usize], idx: usize| v.get(idx).copied().unwrap_or(0) as i64;
    let mut alpha: Vec<i64> = (0..k).map(|a| -at(&conj, k - 1 - a)).collect();
    alpha.extend((0..n - k).map(|b| at(parts, b) - t));
    let shifted: Vec<i64> = alpha
        .iter()
        .enumerate()
        .map(|(a, &x)| x + (n - a) as i64)
        .collect();
    let mut degree = 0;
    for a in 0..n {
        for b in a + 1..n {
            if shifted[a] == shifted[b] {
                return None;
            }
            if shifted[a] < shifted[b] {
                degree += 1;
            }
        }
    }
    let mut sorted = shifted;
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for a in 0..n {
        for b in a + 1..n {
            num *= BigUint::from((sorted[a] - sorted[b]) as u64);
            den *= BigUint::from((b - a) as u64);
        }
    }
    Some((degree, num / den))
}

pub fn hodge_number(k: usize, n: usize, i: usize, j: usize, t: i64) -> BigUint {
    partitions_in_box(k, n - k)
        .into_iter()
        .filter(|p| p.iter().sum::<usize>() == j)
        .filter_map(|p| bwb(&p, k, n, t))
        .filter(|(deg, _)| *deg == i)
        .map(|(_, d)| d)
        .sum()
}

pub fn core_count(t: usize, m: usize) -> u64 {
    partitions_of(m).iter().filter(|p| is_core(p, t)).count() as u64
}

/// `ord_p(3m+1)` is odd for some prime `p ≡ 2 (mod 3)`.
pub fn han_no_3core(m: u64) -> bool {
    let mut x = 3 * m + 1;
    let mut p = 2;
    while p * p <= x {
        let mut e = 0;
        while x.is_multiple_of(p) {
            x /= p;
            e += 1;
        }
        if p % 3 == 2 && e % 2 == 1 {
            return true;
        }
        p += 1;
    }
    x > 1 && x % 3 == 2
}
