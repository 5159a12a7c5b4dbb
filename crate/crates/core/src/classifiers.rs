//! Closed-form vanishing criteria and necessary conditions for knijt-partitions.
//!
//! Everything here is arithmetic on `(k, n, i, j, t)`; none of it enumerates.
//! The enumeration oracle in [`crate::enumeration`] is what these are checked
//! against.

use serde::Serialize;

use crate::enumeration::KnijtQuery;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Outcome of one named predicate.
///
/// `detail` lists the integers the predicate was evaluated on, by name, so
/// the arithmetic can be redone by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: &'static str,
    pub holds: bool,
    pub detail: Vec<(&'static str, i64)>,
}

impl Verdict {
    fn le(name: &'static str, lhs: i64, rhs: i64) -> Verdict {
        Verdict {
            name,
            holds: lhs <= rhs,
            detail: vec![("lhs", lhs), ("rhs", rhs)],
        }
    }
}

/// Every necessary condition for a knijt-partition that applies to `q`.
///
/// A verdict with `holds == false` proves that no knijt-partition exists; all
/// verdicts holding proves nothing. The bounds that depend on the rectangle
/// orientation use `k' = min(k, n-k)`, which is valid for both orientations.
/// Linear checks come first, then quadratic ones, then Snow's conditions
/// (which only apply for `0 < t < n`).
pub fn necessary_battery(q: &KnijtQuery) -> Vec<Verdict> {
    let n = q.n as i64;
    let kk = q.k.min(q.n - q.k) as i64;
    let (i, j, t) = (q.i as i64, q.j as i64, q.t as i64);
    let big_n = q.dim() as i64;
    let d = j - i;

    let mut out = vec![Verdict {
        name: "0 ≤ i ≤ j ≤ N",
        holds: i <= j && j <= big_n,
        detail: vec![("i", i), ("j", j), ("N", big_n)],
    }];
    if t > 0 {
        out.push(Verdict::le("i+j ≤ N", i + j, big_n));
    }
    if i > 0 {
        out.push(Verdict {
            name: "j−i ≥ t",
            holds: d >= t,
            detail: vec![("j-i", d), ("t", t)],
        });
    }
    if t > 0 {
        out.push(Verdict::le("j−i ≤ k(t−1)", d, kk * (t - 1)));
        out.push(Verdict::le("(k+1)i ≤ (k−1)j", (kk + 1) * i, (kk - 1) * j));
        out.push(Verdict::le("i+j ≤ (j−i)²", i + j, d * d));
        out.push(Verdict::le("2j ≤ k(n−k+t−1)", 2 * j, kk * (n - kk + t - 1)));
        out.push(Verdict::le("2ki ≤ (k−1)N", 2 * kk * i, (kk - 1) * big_n));
        // i ≤ (N - √N)/2  ⟺  N - 2i ≥ 0 and N ≤ (N - 2i)²
        let slack = big_n - 2 * i;
        out.push(Verdict {
            name: "i ≤ √N(√N−1)/2",
            holds: slack >= 0 && big_n <= slack * slack,
            detail: vec![("N", big_n), ("N-2i", slack)],
        });
    }
    if t > 0 && t < n {
        out.push(Verdict {
            name: "Snow S1: not ki ≥ (k−1)j > 0",
            holds: !(kk * i >= (kk - 1) * j && (kk - 1) * j > 0),
            detail: vec![("ki", kk * i), ("(k-1)j", (kk - 1) * j)],
        });
        out.push(Verdict {
            name: "Snow S2: not i > N−j",
            holds: i <= big_n - j,
            detail: vec![("i", i), ("N-j", big_n - j)],
        });
        out.push(Verdict {
            name: "Snow S3: not j > k(n−k−1)",
            holds: (kk, n) == (2, 4) || j <= kk * (n - kk - 1),
            detail: vec![("j", j), ("k(n-k-1)", kk * (n - kk - 1))],
        });
        out.push(Verdict {
            name: "Snow S4: not (j ≤ t and i > 0)",
            holds: !(j <= t && i > 0),
            detail: vec![("j", j), ("t", t), ("i", i)],
        });
        if i > 0 {
            out.push(Verdict {
                name: "Snow S5: not (2k−1)i ≥ (k−1)N",
                holds: (2 * kk - 1) * i < (kk - 1) * big_n,
                detail: vec![("(2k-1)i", (2 * kk - 1) * i), ("(k-1)N", (kk - 1) * big_n)],
            });
        }
    }
    out
}

/// The first failing predicate of the battery, if any.
pub fn battery_rules_out(q: &KnijtQuery) -> Option<Verdict> {
    necessary_battery(q).into_iter().find(|v| !v.holds)
}

/// Definitive answer for `t ∈ {0, 1, 2}` and `t ≥ n`; `None` otherwise.
///
/// At `t = 0` every box is interior, so existence means `i = j ≤ N`.
pub fn classify_small_t(q: &KnijtQuery) -> Option<bool> {
    let big_n = q.dim();
    let (i, j) = (q.i, q.j);
    match q.t {
        0 => Some(i == j && j <= big_n),
        1 => Some(i == 0 && j == 0),
        2 => {
            let max_kappa = q.k.min(q.n - q.k);
            Some((0..=max_kappa).any(|kappa| {
                i == kappa * (kappa.saturating_sub(1)) / 2 && j == kappa * (kappa + 1) / 2
            }))
        }
        t if t >= q.n => Some(i == 0 && j <= big_n),
        _ => None,
    }
}

/// Arithmetic behind the `t = 3` criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T3Certificate {
    /// `(i + j) mod 2`
    pub b: u8,
    /// `8(j+i) − 3(j−i−b)² − 8b(j−i)`
    pub delta: i64,
    pub sqrt_delta: Option<u64>,
    pub x: Option<u64>,
    pub y: Option<u64>,
}

/// Whether `h^i(Gr(k,n), Ω^j(3)) ≠ 0` for `i, j > 0`.
///
/// Requires `Δ` to be a perfect square with `4 | √Δ + j−i−b` and
/// `j−i−b ≥ √Δ`, and then one of the two assignments
/// `x, y = (j−i−b ± √Δ)/4` to satisfy `x+b+2y ≤ n−k` and `2x+b+y ≤ k`.
pub fn t3_nonvanishing(k: usize, n: usize, i: usize, j: usize) -> Result<(bool, T3Certificate)> {
    if i == 0 || j == 0 {
        return Err(Error::PreconditionViolated(format!(
            "the t=3 criterion needs i, j > 0 (got i={i}, j={j})"
        )));
    }
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k < n, got k={k}, n={n}"
        )));
    }
    let (i, j, k, n) = (i as i64, j as i64, k as i64, n as i64);
    let b = (i + j) % 2;
    let delta = 8 * (j + i) - 3 * (j - i - b).pow(2) - 8 * b * (j - i);
    let mut cert = T3Certificate {
        b: b as u8,
        delta,
        sqrt_delta: None,
        x: None,
        y: None,
    };
    if delta < 0 {
        return Ok((false, cert));
    }
    let root = (delta as u64).isqrt();
    if root * root != delta as u64 {
        return Ok((false, cert));
    }
    cert.sqrt_delta = Some(root);
    let root = root as i64;
    let s = j - i - b;
    if (root + s) % 4 != 0 || s < root {
        return Ok((false, cert));
    }
    let assignments = [
        ((s + root) / 4, (s - root) / 4),
        ((s - root) / 4, (s + root) / 4),
    ];
    let fits =
        |&(x, y): &(i64, i64)| x >= 0 && y >= 0 && x + b + 2 * y <= n - k && 2 * x + b + y <= k;
    let chosen = assignments
        .iter()
        .find(|a| fits(a))
        .unwrap_or(&assignments[0]);
    cert.x = Some(chosen.0 as u64);
    cert.y = Some(chosen.1 as u64);
    Ok((fits(chosen), cert))
}

/// True iff `j ≠ x² + xy + y² + x + y` for all integers `x, y`.
pub fn j_form_excluded(j: u64) -> bool {
    let j = j as i64;
    // ((|x|-1)² + (|y|-1)²)/2 - 1 ≤ j bounds the search window
    let radius = ((2 * j + 2) as u64).isqrt() as i64 + 2;
    !(-radius..=radius).any(|x| (-radius..=radius).any(|y| x * x + x * y + y * y + x + y == j))
}

/// True iff `i` is neither `x² + xy + y²` nor `x² + xy + y² − x − y` for `x, y ≥ 0`.
pub fn i_form_excluded(i: u64) -> bool {
    let bound = i.isqrt() + 1;
    !(0..=bound).any(|x| {
        (0..=bound).any(|y| {
            let q = x * x + x * y + y * y;
            q == i || q - x - y == i
        })
    })
}

/// The unique `(i, j)` with `i + j = N` and `h^i(Ω^j(t)) ≠ 0`, if there is one.
pub fn classify_extremal_n(k: usize, n: usize, t: usize) -> Result<Option<(usize, usize)>> {
    if t == 0 {
        return Err(Error::PreconditionViolated(
            "the i+j=N classification needs t > 0".into(),
        ));
    }
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k < n, got k={k}, n={n}"
        )));
    }
    let big_n = k * (n - k);
    if t >= n {
        return Ok(Some((0, big_n)));
    }
    if n.is_multiple_of(t) && (k * t).is_multiple_of(n) {
        debug_assert_eq!((big_n * (n - t)) % (2 * n), 0);
        let i = big_n * (n - t) / (2 * n);
        return Ok(Some((i, big_n - i)));
    }
    Ok(None)
}

/// The knijt-partition realizing [`classify_extremal_n`]: a staircase of
/// `n/t` equal blocks, or the full rectangle when `t ≥ n`.
pub fn extremal_n_witness(k: usize, n: usize, t: usize) -> Result<Option<Partition>> {
    if classify_extremal_n(k, n, t)?.is_none() {
        return Ok(None);
    }
    if t >= n {
        return Ok(Some(Partition::from_canonical(vec![k; n - k])));
    }
    let blocks = n / t;
    let (width, height) = (k / blocks, (n - k) / blocks);
    let parts = (1..=blocks)
        .rev()
        .flat_map(|step| std::iter::repeat_n(step * width, height))
        .collect();
    Ok(Some(Partition::from_canonical(parts)))
}

/// Whether `h^i(Ω^j(t)) ≠ 0` when `i > 0` and `i + j = N − 1`.
pub fn classify_extremal_n_minus_1(
    k: usize,
    n: usize,
    i: usize,
    j: usize,
    t: usize,
) -> Result<bool> {
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k < n, got k={k}, n={n}"
        )));
    }
    let big_n = k * (n - k);
    if i == 0 || i + j + 1 != big_n {
        return Err(Error::PreconditionViolated(format!(
            "needs i > 0 and i+j = N-1 = {} (got i={i}, j={j})",
            big_n as i64 - 1
        )));
    }
    Ok(n >= 5 && n % 2 == 1 && (k == 2 || k == n - 2) && 2 * i == n - 3 && 2 * t == n + 1)
}

/// The two-row partition `(2r+1, r)`, `r = (n-3)/2`, on `Gr(n-2, n)`, or its
/// conjugate on `Gr(2, n)`.
pub fn extremal_n_minus_1_witness(k: usize, n: usize) -> Option<Partition> {
    if n < 5 || n.is_multiple_of(2) || (k != 2 && k != n - 2) {
        return None;
    }
    let r = (n - 3) / 2;
    let rows = Partition::from_canonical(vec![2 * r + 1, r]);
    Some(if k == n - 2 { rows } else { rows.conjugate() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: usize, n: usize, i: usize, j: usize, t: usize) -> KnijtQuery {
        KnijtQuery::new(k, n, i, j, t).unwrap()
    }

    #[test]
    fn battery_examples() {
        let all = necessary_battery(&q(2, 13, 5, 16, 7));
        assert!(all.iter().all(|v| v.holds), "{all:?}");

        let fail = battery_rules_out(&q(2, 13, 6, 16, 7)).unwrap();
        assert_eq!(fail.name, "(k+1)i ≤ (k−1)j");
        assert_eq!(fail.detail, vec![("lhs", 18), ("rhs", 16)]);

        let fail = battery_rules_out(&q(3, 6, 2, 2, 2)).unwrap();
        assert_eq!(fail.name, "j−i ≥ t");
    }

    #[test]
    fn battery_at_t_zero_is_minimal() {
        let names: Vec<_> = necessary_battery(&q(3, 6, 4, 4, 0))
            .iter()
            .map(|v| v.name)
            .collect();
        assert_eq!(names, vec!["0 ≤ i ≤ j ≤ N", "j−i ≥ t"]);
    }

    #[test]
    fn small_t_examples() {
        assert_eq!(classify_small_t(&q(5, 10, 3, 6, 2)), Some(true));
        assert_eq!(classify_small_t(&q(5, 10, 0, 0, 1)), Some(true));
        assert_eq!(classify_small_t(&q(5, 10, 1, 4, 1)), Some(false));
        assert_eq!(classify_small_t(&q(5, 10, 3, 6, 3)), None);
        assert_eq!(classify_small_t(&q(2, 5, 0, 6, 5)), Some(true));
        assert_eq!(classify_small_t(&q(2, 5, 1, 6, 7)), Some(false));
        assert_eq!(classify_small_t(&q(2, 5, 4, 4, 0)), Some(true));
    }

    #[test]
    fn t3_examples() {
        let (ok, cert) = t3_nonvanishing(7, 14, 12, 21).unwrap();
        assert!(ok);
        assert_eq!(
            cert,
            T3Certificate {
                b: 1,
                delta: 0,
                sqrt_delta: Some(0),
                x: Some(2),
                y: Some(2)
            }
        );
        for i in 1..=3 {
            for (k, n) in [(2, 5), (5, 12), (10, 20)] {
                assert!(!t3_nonvanishing(k, n, i, 3).unwrap().0);
            }
        }
        for j in 5..40 {
            assert!(!t3_nonvanishing(10, 20, 5, j).unwrap().0);
        }
        assert!(t3_nonvanishing(3, 6, 0, 2).is_err());
    }

    #[test]
    fn quadratic_forms() {
        assert!(j_form_excluded(3));
        assert!(!j_form_excluded(0));
        assert!(!j_form_excluded(21));
        assert!(!j_form_excluded(1));
        assert!(i_form_excluded(5));
        assert!(!i_form_excluded(0));
        assert!(!i_form_excluded(12));
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(classify_extremal_n(8, 12, 3).unwrap(), Some((12, 20)));
        assert_eq!(classify_extremal_n(8, 12, 6).unwrap(), Some((8, 24)));
        assert_eq!(classify_extremal_n(8, 12, 5).unwrap(), None);
        assert_eq!(classify_extremal_n(8, 12, 12).unwrap(), Some((0, 32)));
        assert!(classify_extremal_n(8, 12, 0).is_err());
        assert_eq!(
            extremal_n_witness(8, 12, 3).unwrap().unwrap().parts(),
            &[8, 6, 4, 2]
        );
        assert_eq!(
            extremal_n_witness(8, 12, 6).unwrap().unwrap().parts(),
            &[8, 8, 4, 4]
        );
    }

    #[test]
    fn extremal_minus_one_examples() {
        assert!(classify_extremal_n_minus_1(2, 11, 4, 13, 6).unwrap());
        for t in 1..15 {
            for i in 1..17 {
                assert!(!classify_extremal_n_minus_1(3, 11, i, 23 - i, t).unwrap());
            }
        }
        for i in 1..8 {
            assert!(!classify_extremal_n_minus_1(2, 6, i, 7 - i, 4).unwrap());
        }
        assert!(classify_extremal_n_minus_1(2, 11, 0, 17, 6).is_err());
        assert!(classify_extremal_n_minus_1(2, 11, 4, 12, 6).is_err());
        assert_eq!(extremal_n_minus_1_witness(9, 11).unwrap().parts(), &[9, 4]);
        assert_eq!(
            extremal_n_minus_1_witness(2, 11).unwrap(),
            Partition::new(vec![9, 4]).unwrap().conjugate()
        );
    }
}
