//! Borel–Weil–Bott for twisted forms on Grassmannians.
//!
//! `Ω^j(t)` on `Gr(k, n)` splits as a sum over partitions `λ` of size `j` in
//! the `k x (n-k)` rectangle. Each summand has the weight
//! `α_λ = (-rev(λᵀ), λ - t)` of length `n`. Adding `ϱ = (n, ..., 1)`, a
//! repeated entry means the summand's cohomology vanishes; otherwise it is
//! concentrated in degree equal to the number of non-inversions of `α + ϱ`,
//! where it is the Schur module `Σ^β` with `β = sort↓(α + ϱ) - ϱ`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::enumeration::{binomial, Enumerator};
use crate::error::{Error, Result};
use crate::partition::{Partition, Rectangle};

/// An integer weight of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSeq(pub Vec<i64>);

impl WeightSeq {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `ϱ = (n, n-1, ..., 1)`.
    pub fn weyl(n: usize) -> WeightSeq {
        WeightSeq((1..=n as i64).rev().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BwbOutcome {
    Vanishes,
    Concentrated {
        degree: usize,
        beta: WeightSeq,
        dim: BigUint,
    },
}

impl BwbOutcome {
    pub fn degree(&self) -> Option<usize> {
        match self {
            BwbOutcome::Vanishes => None,
            BwbOutcome::Concentrated { degree, .. } => Some(*degree),
        }
    }
}

/// `α_λ = (-rev(λᵀ padded to k), λ padded to n-k minus t)`.
pub fn alpha_sequence(lambda: &Partition, k: usize, n: usize, t: i64) -> Result<WeightSeq> {
    let rect = Rectangle::grassmannian(k, n)?;
    if !lambda.is_bounded(&rect) {
        return Err(Error::NotBounded {
            width: rect.width(),
            height: rect.height(),
        });
    }
    let conj = lambda.conjugate();
    let head = (1..=k).rev().map(|c| -(conj.part(c) as i64));
    let tail = (1..=n - k).map(|r| lambda.part(r) as i64 - t);
    Ok(WeightSeq(head.chain(tail).collect()))
}

pub fn bwb_outcome(alpha: &WeightSeq) -> BwbOutcome {
    let n = alpha.len();
    let shifted: Vec<i64> = alpha
        .entries()
        .iter()
        .zip(WeightSeq::weyl(n).entries())
        .map(|(a, r)| a + r)
        .collect();
    let mut sorted = shifted.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return BwbOutcome::Vanishes;
    }
    let degree = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| shifted[a] < shifted[b])
        .count();
    let beta = WeightSeq(
        sorted
            .iter()
            .zip(WeightSeq::weyl(n).entries())
            .map(|(s, r)| s - r)
            .collect(),
    );
    let dim = schur_dim(&beta).expect("sorted weight is non-increasing");
    BwbOutcome::Concentrated { degree, beta, dim }
}

/// `dim Σ^β C^n` for a non-increasing integer weight of length `n`.
///
/// The weight is shifted by `-β_n` into a partition (determinant twists are
/// one-dimensional) and the hook-content product `∏ (n + c - r) / h(r, c)`
/// is evaluated exactly.
pub fn schur_dim(beta: &WeightSeq) -> Result<BigUint> {
    let entries = beta.entries();
    if let Some(index) = entries.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::NotMonotone { index });
    }
    let Some(&last) = entries.last() else {
        return Ok(BigUint::one());
    };
    let n = entries.len() as i64;
    let shape = Partition::new(
        entries
            .iter()
            .map(|&b| (b - last) as usize)
            .collect::<Vec<_>>(),
    )?;
    let hooks = shape.hook_lengths();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for cell in shape.cells() {
        let content = n + cell.col as i64 - cell.row as i64;
        debug_assert!(content > 0);
        num *= content as u64;
        den *= hooks[cell.row - 1][cell.col - 1] as u64;
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// `h^i(Gr(k, n), Ω^j(t))`.
pub fn hodge_number(k: usize, n: usize, i: usize, j: usize, t: i64) -> Result<BigUint> {
    Enumerator::default().hodge_number(k, n, i, j, t)
}

/// All nonzero `h^i(Gr(k, n), Ω^j(t))` for fixed `(k, n, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeTable {
    pub k: usize,
    pub n: usize,
    pub t: i64,
    /// `(i, j) -> dimension`; absent keys are zero.
    pub entries: BTreeMap<(usize, usize), BigUint>,
}

impl HodgeTable {
    pub fn get(&self, i: usize, j: usize) -> BigUint {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// `N = k(n - k)`.
    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }

    /// Sum of all entries.
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// Entries ordered by `(j, i)`.
    pub fn sorted_by_j(&self) -> Vec<(usize, usize, &BigUint)> {
        let mut rows: Vec<_> = self.entries.iter().map(|(&(i, j), d)| (i, j, d)).collect();
        rows.sort_by_key(|&(i, j, _)| (j, i));
        rows
    }
}

pub fn hodge_table(k: usize, n: usize, t: i64) -> Result<HodgeTable> {
    Enumerator::default().hodge_table(k, n, t)
}

impl Enumerator {
    pub fn hodge_number(&self, k: usize, n: usize, i: usize, j: usize, t: i64) -> Result<BigUint> {
        let rect = Rectangle::grassmannian(k, n)?;
        let mut total = BigUint::zero();
        for lambda in self.bounded_of_size(rect, j)? {
            if let BwbOutcome::Concentrated { degree, dim, .. } =
                bwb_outcome(&alpha_sequence(&lambda, k, n, t)?)
            {
                if degree == i {
                    total += dim;
                }
            }
        }
        Ok(total)
    }

    /// One pass over every bounded partition.
    pub fn hodge_table(&self, k: usize, n: usize, t: i64) -> Result<HodgeTable> {
        let rect = Rectangle::grassmannian(k, n)?;
        let count = binomial(n as u64, k as u64);
        if count > self.max_nodes as u128 {
            return Err(Error::LimitExceeded {
                what: "bounded partitions",
                needed: count,
                cap: self.max_nodes as u128,
            });
        }
        let mut entries: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
        for lambda in self.bounded(rect)? {
            if let BwbOutcome::Concentrated { degree, dim, .. } =
                bwb_outcome(&alpha_sequence(&lambda, k, n, t)?)
            {
                *entries.entry((degree, lambda.size())).or_default() += dim;
            }
        }
        Ok(HodgeTable { k, n, t, entries })
    }
}
