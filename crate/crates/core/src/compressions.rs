//! Norm and positivity of an operator read off an increasing family of
//! finite compressions `p a p`, with `p` a finite sum of blocks.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{BasisIndex, BlockId, FiniteMatrix, NormBound, OperatorRep, Partition};
use crate::numerics::{min_eig_hermitian, spectral_norm, Tolerance};

/// Default positivity slack.
pub const DEFAULT_SLACK: f64 = 1e-9;

/// A witness subset is shrunk while its minimum eigenvalue stays within this
/// distance of the triggering value.
const SHRINK_SLACK: f64 = 1e-12;

/// Strictly increasing (under inclusion) list of finite block sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressionSchedule {
    subsets: Vec<Vec<BlockId>>,
    depth: usize,
}

impl CompressionSchedule {
    /// Prefixes `{0}, {0, 1}, ..., {0..levels-1}`.
    pub fn prefixes(levels: usize, depth: usize) -> Result<Self> {
        Self::custom((1..=levels).map(|n| (0..n).map(BlockId).collect()).collect(), depth)
    }

    pub fn custom(subsets: Vec<Vec<BlockId>>, depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::Precondition("truncation depth must be positive".into()));
        }
        if subsets.is_empty() {
            return Err(Error::Precondition("schedule needs at least one subset".into()));
        }
        let subsets: Vec<Vec<BlockId>> = subsets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        if subsets[0].is_empty() {
            return Err(Error::Precondition("schedule subsets must be non-empty".into()));
        }
        for (k, w) in subsets.windows(2).enumerate() {
            let grows = w[1].len() > w[0].len() && w[0].iter().all(|b| w[1].binary_search(b).is_ok());
            if !grows {
                return Err(Error::Precondition(format!(
                    "schedule subset {} does not strictly contain subset {k}",
                    k + 1
                )));
            }
        }
        Ok(CompressionSchedule { subsets, depth })
    }

    pub fn subsets(&self) -> &[Vec<BlockId>] {
        &self.subsets
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PositivityVerdict {
    NotHermitian { row: usize, col: usize },
    /// `subset` is a smallest-found subset of the scheduled subset number
    /// `trigger` whose compression still has minimum eigenvalue `min_eig`.
    NegativeWitness {
        subset: Vec<BlockId>,
        min_eig: f64,
        trigger: usize,
    },
    /// No scheduled compression failed. Evidence only, not a proof, unless
    /// the operator has finite support inside the last subset.
    PositiveUpTo { n_checked: usize, worst_min_eig: f64 },
}

/// The compression `p a p` over the first `depth` indices of each block in `subset`.
pub fn compression(op: &OperatorRep, subset: &[BlockId], part: &Partition, depth: usize) -> Result<FiniteMatrix> {
    if subset.is_empty() {
        return Err(Error::Precondition("compression needs a non-empty subset".into()));
    }
    let idx = part.truncated_support(subset.iter().copied(), depth);
    match op.as_explicit() {
        Some(e) => FiniteMatrix::from_sparse(idx.clone(), idx, e.entries()),
        None => FiniteMatrix::from_fn(idx.clone(), idx, |r, c| op.entry_at(r, c)),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormEstimate {
    pub points: Vec<f64>,
    pub estimate: NormBound,
}

/// Smallest basis index missing from a sorted index list.
fn first_gap(idx: &[BasisIndex]) -> usize {
    idx.iter().enumerate().find(|&(k, x)| x.0 != k).map_or(idx.len(), |(k, _)| k)
}

/// Compression norms along the schedule and a bound on `‖a‖`.
///
/// The upper end is exact once the last compression holds the whole finite
/// support; otherwise `‖a‖ <= ‖p a p‖ + tail(n)` with `n` the smallest index
/// outside the last compression.
pub fn norm_via_compressions(op: &OperatorRep, part: &Partition, sched: &CompressionSchedule) -> Result<NormEstimate> {
    let tol = Tolerance::default();
    let depth = sched.depth();
    let points = sched
        .subsets()
        .par_iter()
        .map(|s| spectral_norm(&compression(op, s, part, depth)?, &tol))
        .collect::<Result<Vec<f64>>>()?;
    let last_subset = sched.subsets().last().expect("schedules are non-empty");
    let last = *points.last().expect("schedules are non-empty");

    let covered = op.to_explicit().is_some_and(|e| {
        e.entries().all(|(r, c, _)| {
            [r, c].iter().all(|&x| {
                last_subset.binary_search(&part.block_of(x)).is_ok() && part.within_depth(x, depth)
            })
        })
    });
    let upper = if covered {
        Some(last)
    } else {
        op.tail_bound().map(|t| {
            let idx = part.truncated_support(last_subset.iter().copied(), depth);
            last + t.at(first_gap(&idx))
        })
    };
    Ok(NormEstimate {
        points,
        estimate: NormBound::new(last, upper),
    })
}

fn min_eig_of(op: &OperatorRep, subset: &[BlockId], part: &Partition, depth: usize, tol: &Tolerance) -> Result<f64> {
    min_eig_hermitian(&compression(op, subset, part, depth)?, tol)
}

/// Drops blocks from a negative subset while the minimum eigenvalue stays
/// within [`SHRINK_SLACK`] of `mu`.
fn shrink(
    op: &OperatorRep,
    subset: &[BlockId],
    part: &Partition,
    depth: usize,
    mu: f64,
    tol: &Tolerance,
) -> Result<(Vec<BlockId>, f64)> {
    let mut kept = subset.to_vec();
    let mut best = mu;
    let mut k = 0;
    while k < kept.len() && kept.len() > 1 {
        let mut trial = kept.clone();
        trial.remove(k);
        let m = min_eig_of(op, &trial, part, depth, tol)?;
        if m <= mu + SHRINK_SLACK {
            kept = trial;
            best = m;
        } else {
            k += 1;
        }
    }
    Ok((kept, best))
}

/// Positivity test over the schedule.
///
/// Scheduled compressions are checked in order; the first one with minimum
/// eigenvalue below `-slack` yields a witness, reduced to a small subset.
pub fn positivity_via_compressions(
    op: &OperatorRep,
    part: &Partition,
    sched: &CompressionSchedule,
    slack: f64,
) -> Result<PositivityVerdict> {
    if !(slack > 0.0) {
        return Err(Error::Precondition("slack must be positive".into()));
    }
    let tol = Tolerance {
        abs: slack,
        ..Tolerance::default()
    };
    let depth = sched.depth();
    let eigs: Vec<Result<f64>> = sched
        .subsets()
        .par_iter()
        .map(|s| min_eig_of(op, s, part, depth, &tol))
        .collect();
    let mut worst = f64::INFINITY;
    for (k, (s, r)) in sched.subsets().iter().zip(eigs).enumerate() {
        let mu = match r {
            Err(Error::NotHermitian { row, col }) => return Ok(PositivityVerdict::NotHermitian { row, col }),
            r => r?,
        };
        if mu < -slack {
            let (subset, min_eig) = shrink(op, s, part, depth, mu, &tol)?;
            return Ok(PositivityVerdict::NegativeWitness {
                subset,
                min_eig,
                trigger: k,
            });
        }
        worst = worst.min(mu);
    }
    Ok(PositivityVerdict::PositiveUpTo {
        n_checked: sched.len(),
        worst_min_eig: worst,
    })
}
