//! Exhaustive enumeration of bounded partitions and `t`-cores, and core counting.
//!
//! All enumerators share one depth-first walker that builds a partition
//! from its bottom row upward. Adding a row on top never changes the hooks
//! of the rows below it, and the hooks of the new row are already final, so
//! the `t`-core test (and the interior count) can be applied exactly, one
//! row at a time. Every node of the walk is itself a valid partition.
//!
//! Output order is colexicographic: partitions are compared by their parts
//! read from the last row to the first.

use crate::error::{Error, Result};
use crate::partition::{Partition, Rectangle};
use crate::tcore::t_interior;

/// Enumeration limits. Exceeding either yields [`Error::LimitExceeded`];
/// results are never silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    /// Maximum number of search nodes (or bounded partitions) a single call may visit.
    pub max_nodes: u64,
    /// Maximum rectangle width and height.
    pub max_dim: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            max_nodes: 100_000_000,
            max_dim: 64,
        }
    }
}

/// The tuple `(k, n, i, j, t)`: does a `t`-core in the `k x (n-k)` rectangle
/// have size `j` and a `t`-interior of size `i`?
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KnijtQuery {
    pub k: usize,
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub t: usize,
}

impl KnijtQuery {
    pub fn new(k: usize, n: usize, i: usize, j: usize, t: usize) -> Result<Self> {
        Rectangle::grassmannian(k, n)?;
        Ok(KnijtQuery { k, n, i, j, t })
    }

    /// `N = k(n - k)`.
    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn rectangle(&self) -> Rectangle {
        Rectangle::grassmannian(self.k, self.n).expect("validated on construction")
    }

    /// The same question on `Gr(n-k, n)`, answered by conjugate partitions.
    pub fn transposed(&self) -> KnijtQuery {
        KnijtQuery {
            k: self.n - self.k,
            ..*self
        }
    }
}

/// Coefficients `c_t(0..=max)` of the `t`-core generating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreCountSeries {
    pub t: usize,
    pub coeffs: Vec<u64>,
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| {
        acc.saturating_mul((n - i) as u128) / (i as u128 + 1)
    })
}

#[derive(Debug, Clone, Copy)]
struct Pruning {
    /// Reject any row containing this hook length.
    core_of: Option<usize>,
    /// Walk nothing larger than this.
    max_size: usize,
    /// Skip subtrees that cannot grow to this size.
    min_size: usize,
    /// Skip subtrees whose interior (hooks > t) already exceeds this.
    max_interior: usize,
}

/// Bottom-up depth-first walk over partitions in a rectangle.
struct RowWalker {
    width: usize,
    height: usize,
    prune: Pruning,
    budget: Option<u64>,
    visited: u64,
    exceeded: bool,
    started: bool,
    rows: Vec<usize>,
    row_interior: Vec<usize>,
    col_heights: Vec<usize>,
    cursor: Vec<usize>,
    size: usize,
    interior: usize,
}

impl RowWalker {
    fn new(rect: Rectangle, prune: Pruning, budget: Option<u64>) -> Self {
        RowWalker {
            width: rect.width(),
            height: rect.height(),
            prune,
            budget,
            visited: 0,
            exceeded: false,
            started: false,
            rows: Vec::new(),
            row_interior: Vec::new(),
            col_heights: vec![0; rect.width()],
            cursor: vec![1],
            size: 0,
            interior: 0,
        }
    }

    fn current(&self) -> Partition {
        Partition::from_canonical(self.rows.iter().rev().copied().collect())
    }

    fn can_reach_min(&self) -> bool {
        let room = (self.height - self.rows.len()) * self.width;
        self.size + room >= self.prune.min_size
    }

    /// Hooks of a new top row of length `len` are `len - c + col_heights[c]`.
    fn try_push(&mut self, len: usize) -> bool {
        let mut interior = 0;
        for c in 0..len {
            let hook = len - c + self.col_heights[c];
            match self.prune.core_of {
                Some(t) if hook == t => return false,
                Some(t) if hook > t => interior += 1,
                _ => {}
            }
        }
        if self.interior + interior > self.prune.max_interior {
            return false;
        }
        for h in &mut self.col_heights[..len] {
            *h += 1;
        }
        self.rows.push(len);
        self.row_interior.push(interior);
        self.size += len;
        self.interior += interior;
        true
    }

    fn pop(&mut self) {
        let len = self.rows.pop().expect("pop on empty walk");
        let interior = self.row_interior.pop().expect("pop on empty walk");
        for h in &mut self.col_heights[..len] {
            *h -= 1;
        }
        self.size -= len;
        self.interior -= interior;
    }

    /// Advances to the next partition in the walk; returns `false` when done.
    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return self.can_reach_min();
        }
        loop {
            let depth = self.rows.len();
            let len = self.cursor[depth];
            if depth < self.height && len <= self.width && self.size + len <= self.prune.max_size {
                self.cursor[depth] += 1;
                self.visited += 1;
                if matches!(self.budget, Some(b) if self.visited > b) {
                    self.exceeded = true;
                    return false;
                }
                if self.try_push(len) {
                    if self.can_reach_min() {
                        self.cursor.push(len);
                        return true;
                    }
                    self.pop();
                }
            } else {
                if depth == 0 {
                    return false;
                }
                self.cursor.pop();
                self.pop();
            }
        }
    }

    fn check_budget(&self, cap: u64) -> Result<()> {
        if self.exceeded {
            return Err(Error::LimitExceeded {
                what: "search nodes",
                needed: self.visited as u128,
                cap: cap as u128,
            });
        }
        Ok(())
    }
}

/// Streaming iterator returned by [`Enumerator::bounded`] and friends.
pub struct BoundedIter {
    walker: RowWalker,
}

impl Iterator for BoundedIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.walker.advance().then(|| self.walker.current())
    }
}

impl Enumerator {
    fn check_rect(&self, rect: &Rectangle) -> Result<()> {
        let dim = rect.width().max(rect.height());
        if dim > self.max_dim {
            return Err(Error::LimitExceeded {
                what: "rectangle dimension",
                needed: dim as u128,
                cap: self.max_dim as u128,
            });
        }
        let count = binomial((rect.width() + rect.height()) as u64, rect.width() as u64);
        if count > self.max_nodes as u128 {
            return Err(Error::LimitExceeded {
                what: "bounded partitions",
                needed: count,
                cap: self.max_nodes as u128,
            });
        }
        Ok(())
    }

    fn walker(&self, rect: Rectangle, prune: Pruning) -> Result<RowWalker> {
        self.check_rect(&rect)?;
        Ok(RowWalker::new(rect, prune, None))
    }

    /// Every partition inside `rect`, each exactly once.
    pub fn bounded(&self, rect: Rectangle) -> Result<BoundedIter> {
        let prune = Pruning {
            core_of: None,
            max_size: usize::MAX,
            min_size: 0,
            max_interior: usize::MAX,
        };
        Ok(BoundedIter {
            walker: self.walker(rect, prune)?,
        })
    }

    /// The `t`-cores inside `rect`. With `t = 0` this is every partition.
    pub fn tcores_bounded(&self, rect: Rectangle, t: usize) -> Result<BoundedIter> {
        let prune = Pruning {
            core_of: Some(t),
            max_size: usize::MAX,
            min_size: 0,
            max_interior: usize::MAX,
        };
        Ok(BoundedIter {
            walker: self.walker(rect, prune)?,
        })
    }

    /// Partitions in `rect` of size exactly `size`.
    pub fn bounded_of_size(
        &self,
        rect: Rectangle,
        size: usize,
    ) -> Result<impl Iterator<Item = Partition>> {
        let prune = Pruning {
            core_of: None,
            max_size: size,
            min_size: size,
            max_interior: usize::MAX,
        };
        let iter = BoundedIter {
            walker: self.walker(rect, prune)?,
        };
        Ok(iter.filter(move |p| p.size() == size))
    }

    /// Partitions in `rect` of size at most `max_size`.
    pub fn bounded_up_to(&self, rect: Rectangle, max_size: usize) -> Result<BoundedIter> {
        let prune = Pruning {
            core_of: None,
            max_size,
            min_size: 0,
            max_interior: usize::MAX,
        };
        Ok(BoundedIter {
            walker: self.walker(rect, prune)?,
        })
    }

    /// Every `t`-core of size at most `max_size`, with no rectangle constraint.
    pub fn tcores_up_to(&self, t: usize, max_size: usize) -> Result<Vec<Partition>> {
        if max_size == 0 {
            return Ok(vec![Partition::empty()]);
        }
        if max_size > self.max_dim {
            return Err(Error::LimitExceeded {
                what: "rectangle dimension",
                needed: max_size as u128,
                cap: self.max_dim as u128,
            });
        }
        let prune = Pruning {
            core_of: Some(t),
            max_size,
            min_size: 0,
            max_interior: usize::MAX,
        };
        let rect = Rectangle::new(max_size, max_size)?;
        let mut walker = RowWalker::new(rect, prune, Some(self.max_nodes));
        let mut out = Vec::new();
        while walker.advance() {
            out.push(walker.current());
        }
        walker.check_budget(self.max_nodes)?;
        Ok(out)
    }

    /// Up to `limit` knijt-partitions for `q`, in walk order.
    pub fn knijt_witnesses(&self, q: &KnijtQuery, limit: usize) -> Result<Vec<Partition>> {
        if q.i > q.j || q.j > q.dim() {
            return Ok(Vec::new());
        }
        let prune = Pruning {
            core_of: Some(q.t),
            max_size: q.j,
            min_size: q.j,
            max_interior: q.i,
        };
        let mut walker = self.walker(q.rectangle(), prune)?;
        let mut found = Vec::new();
        while found.len() < limit && walker.advance() {
            if walker.size == q.j && walker.interior == q.i {
                found.push(walker.current());
            }
        }
        Ok(found)
    }

    /// `c_t(size)` by walking all `t`-cores of at most that size.
    pub fn count_tcores_of_size(&self, t: usize, size: usize) -> Result<u64> {
        Ok(self.count_tcores_up_to(t, size)?[size])
    }

    /// `[c_t(0), ..., c_t(max)]` from a single walk.
    pub fn count_tcores_up_to(&self, t: usize, max: usize) -> Result<Vec<u64>> {
        if max == 0 {
            return Ok(vec![1]);
        }
        if max > self.max_dim {
            return Err(Error::LimitExceeded {
                what: "rectangle dimension",
                needed: max as u128,
                cap: self.max_dim as u128,
            });
        }
        let prune = Pruning {
            core_of: Some(t),
            max_size: max,
            min_size: 0,
            max_interior: usize::MAX,
        };
        let rect = Rectangle::new(max, max)?;
        let mut walker = RowWalker::new(rect, prune, Some(self.max_nodes));
        let mut counts = vec![0u64; max + 1];
        while walker.advance() {
            counts[walker.size] += 1;
        }
        walker.check_budget(self.max_nodes)?;
        Ok(counts)
    }
}

pub fn iter_bounded(rect: Rectangle) -> Result<BoundedIter> {
    Enumerator::default().bounded(rect)
}

pub fn iter_tcore_bounded(rect: Rectangle, t: usize) -> Result<BoundedIter> {
    Enumerator::default().tcores_bounded(rect, t)
}

pub fn knijt_witnesses(q: &KnijtQuery, limit: usize) -> Result<Vec<Partition>> {
    Enumerator::default().knijt_witnesses(q, limit)
}

pub fn count_tcore_of_size(t: usize, size: usize) -> Result<u64> {
    Enumerator::default().count_tcores_of_size(t, size)
}

/// Every `(i, j)` realized by a `t`-core in the rectangle of `Gr(k, n)`.
pub fn knijt_pairs(
    k: usize,
    n: usize,
    t: usize,
) -> Result<std::collections::BTreeSet<(usize, usize)>> {
    let rect = Rectangle::grassmannian(k, n)?;
    iter_tcore_bounded(rect, t)?
        .map(|lam| t_interior(&lam, t).map(|s| (s.interior.size(), lam.size())))
        .collect()
}

/// Coefficients of `(x^t; x^t)_∞^t / (x; x)_∞` through degree `max`.
pub fn core_count_series(t: usize, max: usize) -> Result<CoreCountSeries> {
    if t == 0 {
        return Err(Error::InvalidArgument("core counts need t >= 1".into()));
    }
    let mut series = vec![0i128; max + 1];
    series[0] = 1;
    for d in 1..=max {
        // multiply by 1 / (1 - x^d)
        for m in d..=max {
            series[m] = series[m]
                .checked_add(series[m - d])
                .ok_or(Error::Overflow("core count series"))?;
        }
        // multiply by (1 - x^{td})^t
        if let Some(step) = t.checked_mul(d).filter(|&s| s <= max) {
            for _ in 0..t {
                for m in (step..=max).rev() {
                    series[m] = series[m]
                        .checked_sub(series[m - step])
                        .ok_or(Error::Overflow("core count series"))?;
                }
            }
        }
    }
    let coeffs = series
        .into_iter()
        .map(|c| u64::try_from(c).map_err(|_| Error::Overflow("core count series")))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoreCountSeries { t, coeffs })
}

/// Multiplicity of the prime `p` in `m`.
fn ord(mut m: u64, p: u64) -> u32 {
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    e
}

/// True when some prime `p ≡ 2 (mod 3)` divides `3m + 1` to an odd power,
/// which is exactly when no 3-core of `m` exists.
pub fn han_predicts_no_3core(m: u64) -> bool {
    let mut rest = 3 * m + 1;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let e = ord(rest, p);
            if p % 3 == 2 && e % 2 == 1 {
                return true;
            }
            rest /= p.pow(e);
        }
        p += 1;
    }
    rest > 1 && rest % 3 == 2
}
