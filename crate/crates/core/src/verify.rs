//! Property suites that check the closed-form results against enumeration.
//!
//! Each suite walks a finite range of parameters and records every
//! counterexample verbatim. A suite passes iff it records none.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::bwb::{alpha_sequence, bwb_outcome};
use crate::classifiers::{
    classify_extremal_n, classify_extremal_n_minus_1, classify_small_t, necessary_battery,
    t3_nonvanishing,
};
use crate::enumeration::{
    core_count_series, han_predicts_no_3core, knijt_pairs, Enumerator, KnijtQuery,
};
use crate::error::{Error, Result};
use crate::partition::{Partition, Rectangle};
use crate::tcore::{boundary_partition, skew_inverse, t_interior};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Bijection,
    Battery,
    BwbEquivalence,
    Extremal,
    T3,
    Serre,
    SmallT,
    Cores,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Bijection,
        Suite::Battery,
        Suite::BwbEquivalence,
        Suite::Extremal,
        Suite::T3,
        Suite::Serre,
        Suite::SmallT,
        Suite::Cores,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::Battery => "battery",
            Suite::BwbEquivalence => "bwb-equivalence",
            Suite::Extremal => "extremal",
            Suite::T3 => "t3",
            Suite::Serre => "serre",
            Suite::SmallT => "small-t",
            Suite::Cores => "cores",
        }
    }

    /// Largest `n` swept when none is given.
    pub fn default_nmax(&self) -> usize {
        match self {
            Suite::Bijection | Suite::Cores => 0,
            Suite::Battery | Suite::SmallT => 9,
            Suite::BwbEquivalence => 8,
            Suite::Extremal => 12,
            Suite::T3 => 14,
            Suite::Serre => 7,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ranges for a suite run. `None` picks the suite's default.
#[derive(Debug, Clone, Copy, Default)]
pub struct Ranges {
    pub kmax: Option<usize>,
    pub nmax: Option<usize>,
    pub tmax: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: u64,
    pub counterexamples: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

struct Recorder {
    checked: u64,
    counterexamples: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            checked: 0,
            counterexamples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.counterexamples.push(describe());
        }
    }

    fn finish(self, suite: Suite) -> SuiteReport {
        SuiteReport {
            suite,
            checked: self.checked,
            counterexamples: self.counterexamples,
        }
    }
}

/// `(k, n)` with `1 <= k < n <= nmax` and `k <= kmax`.
fn grassmannians(ranges: &Ranges, nmax: usize) -> impl Iterator<Item = (usize, usize)> {
    let kmax = ranges.kmax.unwrap_or(usize::MAX);
    (2..=nmax).flat_map(move |n| (1..n).filter(move |&k| k <= kmax).map(move |k| (k, n)))
}

pub fn run_suite(suite: Suite, ranges: &Ranges, enumerator: &Enumerator) -> Result<SuiteReport> {
    let nmax = ranges.nmax.unwrap_or(suite.default_nmax());
    let mut rec = Recorder::new();
    match suite {
        Suite::Bijection => bijection(&mut rec, ranges.tmax.unwrap_or(8), enumerator)?,
        Suite::Battery => {
            for (k, n) in grassmannians(ranges, nmax) {
                for t in 0..=ranges.tmax.unwrap_or(n + 1) {
                    battery_soundness(&mut rec, k, n, t, enumerator)?;
                }
            }
        }
        Suite::BwbEquivalence => {
            for (k, n) in grassmannians(ranges, nmax) {
                for t in 0..=ranges.tmax.unwrap_or(n + 1) {
                    bwb_equivalence(&mut rec, k, n, t, enumerator)?;
                }
            }
        }
        Suite::Extremal => {
            for (k, n) in grassmannians(ranges, nmax) {
                for t in 1..=ranges.tmax.unwrap_or(n + 1) {
                    extremal(&mut rec, k, n, t)?;
                }
            }
        }
        Suite::T3 => {
            for (k, n) in grassmannians(ranges, nmax) {
                t3(&mut rec, k, n)?;
            }
        }
        Suite::Serre => {
            for (k, n) in grassmannians(ranges, nmax) {
                let tmax = ranges.tmax.unwrap_or(n) as i64;
                for t in -tmax..=tmax {
                    serre(&mut rec, k, n, t, enumerator)?;
                }
            }
        }
        Suite::SmallT => {
            for (k, n) in grassmannians(ranges, nmax) {
                for t in [0, 1, 2, n, n + 1] {
                    small_t(&mut rec, k, n, t)?;
                }
            }
        }
        Suite::Cores => cores(&mut rec, ranges.tmax.unwrap_or(7), enumerator)?,
    }
    Ok(rec.finish(suite))
}

fn bijection(rec: &mut Recorder, tmax: usize, enumerator: &Enumerator) -> Result<()> {
    for t in 1..=tmax {
        for lambda in enumerator.tcores_up_to(t, 40)? {
            let mu = boundary_partition(&lambda, t)?;
            let back = skew_inverse(&mu, t)?;
            rec.check(back == lambda, || {
                format!("t={t}: skew(∂{lambda}) = {back}, boundary {mu}")
            });
        }
        if t == 1 {
            let back = skew_inverse(&Partition::empty(), 1)?;
            rec.check(back.is_empty(), || format!("t=1: skew(()) = {back}"));
            continue;
        }
        let rect = Rectangle::new(t - 1, 25)?;
        for mu in enumerator.bounded_up_to(rect, 25)? {
            let lambda = skew_inverse(&mu, t)?;
            let again = boundary_partition(&lambda, t);
            rec.check(again.as_ref() == Ok(&mu), || {
                format!("t={t}: ∂(skew{mu}) = {again:?}")
            });
        }
    }
    Ok(())
}

fn battery_soundness(
    rec: &mut Recorder,
    k: usize,
    n: usize,
    t: usize,
    enumerator: &Enumerator,
) -> Result<()> {
    let rect = Rectangle::grassmannian(k, n)?;
    for lambda in enumerator.tcores_bounded(rect, t)? {
        let split = t_interior(&lambda, t)?;
        let q = KnijtQuery::new(k, n, split.interior.size(), lambda.size(), t)?;
        for v in necessary_battery(&q).into_iter().filter(|v| !v.holds) {
            rec.counterexamples.push(format!(
                "{q:?} witness {lambda} fails {} {:?}",
                v.name, v.detail
            ));
        }
        rec.checked += 1;
        if t > 0 {
            let rim = lambda.largest().max(lambda.len());
            rec.check(split.boundary_size >= rim, || {
                format!(
                    "{q:?} witness {lambda}: j-i = {} < max(λ1, λ1ᵀ) = {rim}",
                    split.boundary_size
                )
            });
        }
    }
    Ok(())
}

fn bwb_equivalence(
    rec: &mut Recorder,
    k: usize,
    n: usize,
    t: usize,
    enumerator: &Enumerator,
) -> Result<()> {
    let table = enumerator.hodge_table(k, n, t as i64)?;
    let big_n = k * (n - k);
    for j in 0..=big_n {
        for i in 0..=big_n {
            let q = KnijtQuery::new(k, n, i, j, t)?;
            let witness = !enumerator.knijt_witnesses(&q, 1)?.is_empty();
            let nonzero = !table.get(i, j).is_zero();
            rec.check(witness == nonzero, || {
                format!(
                    "{q:?}: h = {} but witness exists = {witness}",
                    table.get(i, j)
                )
            });
        }
    }
    // degree of each summand equals the interior size
    if t > 0 {
        for lambda in enumerator.tcores_bounded(Rectangle::grassmannian(k, n)?, t)? {
            let degree = bwb_outcome(&alpha_sequence(&lambda, k, n, t as i64)?).degree();
            let interior = t_interior(&lambda, t)?.interior.size();
            rec.check(degree == Some(interior), || {
                format!("k={k} n={n} t={t} {lambda}: degree {degree:?} vs interior {interior}")
            });
        }
    }
    Ok(())
}

fn extremal(rec: &mut Recorder, k: usize, n: usize, t: usize) -> Result<()> {
    let pairs = knijt_pairs(k, n, t)?;
    let big_n = k * (n - k);
    let on_line: BTreeSet<_> = pairs
        .iter()
        .copied()
        .filter(|&(i, j)| i + j == big_n)
        .collect();
    let predicted: BTreeSet<_> = classify_extremal_n(k, n, t)?.into_iter().collect();
    rec.check(on_line == predicted, || {
        format!("k={k} n={n} t={t}: i+j=N oracle {on_line:?} vs classifier {predicted:?}")
    });
    for i in 1..big_n {
        let j = big_n - 1 - i;
        let oracle = pairs.contains(&(i, j));
        let claim = classify_extremal_n_minus_1(k, n, i, j, t)?;
        rec.check(oracle == claim, || {
            format!("k={k} n={n} i={i} j={j} t={t}: i+j=N-1 oracle {oracle} vs classifier {claim}")
        });
    }
    Ok(())
}

fn t3(rec: &mut Recorder, k: usize, n: usize) -> Result<()> {
    let pairs = knijt_pairs(k, n, 3)?;
    let big_n = k * (n - k);
    for j in 1..=big_n {
        for i in 1..=j {
            let oracle = pairs.contains(&(i, j));
            let (claim, cert) = t3_nonvanishing(k, n, i, j)?;
            rec.check(oracle == claim, || {
                format!(
                    "k={k} n={n} i={i} j={j}: oracle {oracle} vs t=3 criterion {claim} ({cert:?})"
                )
            });
        }
    }
    Ok(())
}

fn serre(rec: &mut Recorder, k: usize, n: usize, t: i64, enumerator: &Enumerator) -> Result<()> {
    let big_n = k * (n - k);
    let here = enumerator.hodge_table(k, n, t)?;
    let dual = enumerator.hodge_table(k, n, -t)?;
    for i in 0..=big_n {
        for j in 0..=big_n {
            let (a, b) = (here.get(i, j), dual.get(big_n - i, big_n - j));
            rec.check(a == b, || {
                format!("k={k} n={n} t={t}: h^{i}(Ω^{j}) = {a} but dual entry = {b}")
            });
        }
    }
    Ok(())
}

fn small_t(rec: &mut Recorder, k: usize, n: usize, t: usize) -> Result<()> {
    let pairs = knijt_pairs(k, n, t)?;
    let big_n = k * (n - k);
    for j in 0..=big_n {
        for i in 0..=big_n {
            let q = KnijtQuery::new(k, n, i, j, t)?;
            let oracle = pairs.contains(&(i, j));
            let claim = classify_small_t(&q);
            rec.check(claim == Some(oracle), || {
                format!("{q:?}: oracle {oracle} vs classifier {claim:?}")
            });
        }
    }
    Ok(())
}

fn cores(rec: &mut Recorder, tmax: usize, enumerator: &Enumerator) -> Result<()> {
    const MAX: usize = 60;
    for t in 1..=tmax {
        let series = core_count_series(t, MAX)?;
        let counted = enumerator.count_tcores_up_to(t, MAX)?;
        for (m, (&s, &c)) in series.coeffs.iter().zip(&counted).enumerate() {
            rec.check(s == c, || {
                format!("t={t} m={m}: series {s} vs enumeration {c}")
            });
            if t >= 4 {
                rec.check(c > 0, || format!("t={t} m={m}: no {t}-core"));
            }
        }
    }
    let c3 = core_count_series(3, 200)?;
    for (m, &c) in c3.coeffs.iter().enumerate() {
        let han = han_predicts_no_3core(m as u64);
        rec.check((c == 0) == han, || {
            format!("m={m}: c_3 = {c} but ord_p rule says zero = {han}")
        });
    }
    Ok(())
}
