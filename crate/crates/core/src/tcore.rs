//! t-cores, t-interiors and the boundary bijection.
//!
//! A partition is a `t`-core when no box has hook length exactly `t`. For a
//! `t`-core the boxes with hook length `> t` form a subpartition, the
//! `t`-interior; the rest is the `t`-boundary. Left-aligning the boundary row
//! by row gives a `(t-1)`-bounded partition, and [`skew_inverse`] undoes it.

use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::partition::Partition;

pub fn is_t_core(lambda: &Partition, t: usize) -> bool {
    first_hook_equal(lambda, t).is_none()
}

fn first_hook_equal(lambda: &Partition, t: usize) -> Option<(usize, usize)> {
    if t == 0 || t >= lambda.semiperimeter() {
        return None;
    }
    lambda
        .hook_lengths()
        .iter()
        .enumerate()
        .find_map(|(r, row)| row.iter().position(|&h| h == t).map(|c| (r + 1, c + 1)))
}

fn require_t_core(lambda: &Partition, t: usize) -> Result<()> {
    match first_hook_equal(lambda, t) {
        Some((row, col)) => Err(Error::NotTCore { t, row, col }),
        None => Ok(()),
    }
}

/// A `t`-core split into its interior and the size of its boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteriorSplit {
    pub interior: Partition,
    pub boundary_size: usize,
}

/// The boxes with hook length greater than `t`.
///
/// With `t = 0` every box qualifies, so the interior is all of `λ`.
pub fn t_interior(lambda: &Partition, t: usize) -> Result<InteriorSplit> {
    require_t_core(lambda, t)?;
    // hooks strictly decrease along a row, so the interior is a prefix of each row
    let parts = lambda
        .hook_lengths()
        .iter()
        .map(|row| row.iter().take_while(|&&h| h > t).count())
        .take_while(|&len| len > 0)
        .collect::<Vec<_>>();
    let interior = Partition::from_canonical(parts);
    let boundary_size = lambda.size() - interior.size();
    Ok(InteriorSplit {
        interior,
        boundary_size,
    })
}

fn require_positive(t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidArgument(
            "boundary bijection needs t >= 1".into(),
        ));
    }
    Ok(())
}

/// `∂_λ(t)`: the `t`-boundary of a `t`-core, left-aligned row by row.
pub fn boundary_partition(lambda: &Partition, t: usize) -> Result<Partition> {
    require_positive(t)?;
    let split = t_interior(lambda, t)?;
    let parts = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &p)| p - split.interior.part(r + 1))
        .collect::<Vec<_>>();
    Partition::new(parts)
}

/// The `(t-1)`-skew: the unique `t`-core whose boundary partition is `mu`.
///
/// Rows are placed from the bottom up. Each row of `mu` is shifted right by
/// the smallest offset that keeps the row weakly longer than the one below
/// and brings the hook of its leftmost shifted box down to at most `t - 1`.
pub fn skew_inverse(mu: &Partition, t: usize) -> Result<Partition> {
    require_positive(t)?;
    if mu.largest() >= t {
        return Err(Error::NotBoundedByTMinus1 {
            largest: mu.largest(),
            bound: t - 1,
        });
    }
    // col_heights[c] = number of placed rows longer than c
    let mut col_heights: Vec<usize> = Vec::new();
    let mut rows_bottom_up: Vec<usize> = Vec::with_capacity(mu.len());
    for &len in mu.parts().iter().rev() {
        let below = rows_bottom_up.last().copied().unwrap_or(0);
        let mut offset = below.saturating_sub(len);
        // hook of box (row, offset+1) is len + (boxes below it in the column)
        while len + col_heights.get(offset).copied().unwrap_or(0) > t - 1 {
            offset += 1;
        }
        let row = offset + len;
        if col_heights.len() < row {
            col_heights.resize(row, 0);
        }
        for h in &mut col_heights[..row] {
            *h += 1;
        }
        rows_bottom_up.push(row);
    }
    rows_bottom_up.reverse();
    Ok(Partition::from_canonical(rows_bottom_up))
}

/// Kind of a block `B_{p,q}` in a coarsening with `ℓ` blocks per side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// `p + q <= ℓ`
    Internal,
    /// `p + q = ℓ + 1`
    Diagonal,
    /// `p + q >= ℓ + 2`; lies outside the diagram
    External,
}

/// Block decomposition of a diagram by distinct part values.
///
/// `row_mults[p]` is the number of rows equal to the `p`-th largest distinct
/// part; `col_mults[q]` is the same for the conjugate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coarsening {
    row_mults: Vec<usize>,
    col_mults: Vec<usize>,
}

fn run_lengths(parts: &[usize]) -> Vec<usize> {
    let mut runs: Vec<usize> = Vec::new();
    let mut prev = None;
    for &p in parts {
        if prev == Some(p) {
            *runs.last_mut().expect("run started") += 1;
        } else {
            runs.push(1);
            prev = Some(p);
        }
    }
    runs
}

pub fn coarsen(lambda: &Partition) -> Result<Coarsening> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let row_mults = run_lengths(lambda.parts());
    let col_mults = run_lengths(lambda.conjugate().parts());
    debug_assert_eq!(row_mults.len(), col_mults.len());
    Ok(Coarsening {
        row_mults,
        col_mults,
    })
}

impl Coarsening {
    /// `ℓ`, the number of distinct parts.
    pub fn len(&self) -> usize {
        self.row_mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.row_mults.is_empty()
    }

    pub fn row_mults(&self) -> &[usize] {
        &self.row_mults
    }

    pub fn col_mults(&self) -> &[usize] {
        &self.col_mults
    }

    /// 1-based block indices.
    pub fn block_kind(&self, p: usize, q: usize) -> BlockKind {
        let l = self.len();
        match (p + q).cmp(&(l + 1)) {
            std::cmp::Ordering::Less => BlockKind::Internal,
            std::cmp::Ordering::Equal => BlockKind::Diagonal,
            std::cmp::Ordering::Greater => BlockKind::External,
        }
    }

    pub fn block_size(&self, p: usize, q: usize) -> usize {
        self.row_mults[p - 1] * self.col_mults[q - 1]
    }

    /// Rows and columns (1-based, inclusive) spanned by block `B_{p,q}`.
    pub fn block_span(&self, p: usize, q: usize) -> (RangeInclusive<usize>, RangeInclusive<usize>) {
        let span = |mults: &[usize], idx: usize| {
            let start: usize = mults[..idx - 1].iter().sum();
            start + 1..=start + mults[idx - 1]
        };
        (span(&self.row_mults, p), span(&self.col_mults, q))
    }

    /// Rebuilds the partition: block row `p` has length `s_1 + ... + s_{ℓ-p+1}`.
    pub fn to_partition(&self) -> Partition {
        let l = self.len();
        let parts = (1..=l)
            .flat_map(|p| {
                let width: usize = self.col_mults[..l - p + 1].iter().sum();
                std::iter::repeat_n(width, self.row_mults[p - 1])
            })
            .collect();
        Partition::from_canonical(parts)
    }
}
