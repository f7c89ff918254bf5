//! Peirce blocks, hook norms and membership in the norm decomposition.
//!
//! With blocks enumerated `0, 1, 2, ...`, the hook (or strip) of block `i` is
//!
//! ```text
//! H_i = Σ_{k<i} (a_ki + a_ik) + a_ii
//! ```
//!
//! the L-shaped border that the `i`-th square partial block sum adds to the
//! previous one. An operator lies in the norm decomposition when
//! `‖H_i‖ → 0`. Hook 0 is the bare diagonal block `a_00`.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{BasisIndex, BlockId, ExplicitOperator, FiniteMatrix, NormBound, OperatorRep, Partition};
use crate::numerics::{spectral_norm, Tolerance};

/// Default number of indices kept per block.
pub const DEFAULT_DEPTH: usize = 64;

/// Relative and absolute slack used when checking computed values against
/// declared certificates.
const CERT_REL: f64 = 1e-9;
const CERT_ABS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HookPoint {
    pub i: BlockId,
    pub bound: NormBound,
    pub depth: usize,
}

/// One verified witness entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessEntry {
    pub hook: BlockId,
    pub row: BasisIndex,
    pub col: BasisIndex,
    pub modulus: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmpiricalStatus {
    In,
    Out,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MembershipVerdict {
    /// Every hook from `horizon` on is certified to be at most `eps`, and the
    /// certificate tends to zero.
    CertifiedIn { horizon: BlockId, certificate: String },
    /// Infinitely many hooks are at least `eps > 0`; `witness` lists the
    /// family members that were checked against the entry oracle.
    CertifiedOut { eps: f64, witness: Vec<WitnessEntry> },
    /// No certificate applies; the tail of the computed hooks is reported.
    Empirical {
        status: EmpiricalStatus,
        horizon: BlockId,
        max_tail_hook_lower: f64,
    },
}

impl fmt::Display for MembershipVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MembershipVerdict::CertifiedIn { .. } => write!(f, "CERTIFIED_IN"),
            MembershipVerdict::CertifiedOut { eps, .. } => write!(f, "CERTIFIED_OUT eps={eps}"),
            MembershipVerdict::Empirical {
                status,
                max_tail_hook_lower,
                ..
            } => {
                let s = match status {
                    EmpiricalStatus::In => "IN",
                    EmpiricalStatus::Out => "OUT",
                };
                write!(f, "EMPIRICAL_{s} maxtail={max_tail_hook_lower}")
            }
        }
    }
}

fn in_strip(part: &Partition, r: BasisIndex, c: BasisIndex, i: BlockId) -> bool {
    part.block_of(r).max(part.block_of(c)) == i
}

fn check_depth(depth: usize) -> Result<()> {
    if depth == 0 {
        return Err(Error::Precondition("truncation depth must be positive".into()));
    }
    Ok(())
}

/// Norm of a sparse matrix, densified over its own support.
fn sparse_norm(entries: &[(BasisIndex, BasisIndex, Complex64)], tol: &Tolerance) -> Result<f64> {
    if entries.is_empty() {
        return Ok(0.0);
    }
    let mut rows: Vec<_> = entries.iter().map(|e| e.0).collect();
    let mut cols: Vec<_> = entries.iter().map(|e| e.1).collect();
    rows.sort_unstable();
    rows.dedup();
    cols.sort_unstable();
    cols.dedup();
    let m = FiniteMatrix::from_sparse(rows, cols, entries.iter().copied())?;
    spectral_norm(&m, tol)
}

/// The Peirce block `p_i a p_j`, truncated to the first `depth` indices of
/// each block.
pub fn peirce_block(op: &OperatorRep, part: &Partition, i: BlockId, j: BlockId, depth: usize) -> FiniteMatrix {
    let rows = part.leading_indices(i, depth);
    let cols = part.leading_indices(j, depth);
    FiniteMatrix::from_fn(rows, cols, |r, c| op.entry_at(r, c)).expect("block enumerations are increasing")
}

/// All Peirce blocks `(i, j)` with `i, j < blocks`.
pub fn decompose(
    op: &OperatorRep,
    part: &Partition,
    blocks: usize,
    depth: usize,
) -> Vec<(BlockId, BlockId, FiniteMatrix)> {
    let mut out = Vec::with_capacity(blocks * blocks);
    for i in 0..blocks {
        for j in 0..blocks {
            let (bi, bj) = (BlockId(i), BlockId(j));
            out.push((bi, bj, peirce_block(op, part, bi, bj, depth)));
        }
    }
    out
}

/// Block count and depth that cover the support of `e` under `part`.
pub fn support_cover(e: &ExplicitOperator, part: &Partition) -> (usize, usize) {
    (e.block_extent(part), e.covering_depth(part))
}

fn first_common(a: &[BasisIndex], b: &[BasisIndex]) -> Option<BasisIndex> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Some(a[i]),
        }
    }
    None
}

/// Reassembles an explicit operator from block matrices.
///
/// The matrices must cover pairwise disjoint sets of positions; an empty
/// list gives the zero operator.
pub fn reconstruct(blocks: &[(BlockId, BlockId, FiniteMatrix)]) -> Result<OperatorRep> {
    for (x, (_, _, a)) in blocks.iter().enumerate() {
        for (_, _, b) in &blocks[x + 1..] {
            if let (Some(r), Some(c)) = (first_common(a.rows(), b.rows()), first_common(a.cols(), b.cols())) {
                return Err(Error::Overlap { row: r.0, col: c.0 });
            }
        }
    }
    let entries = blocks.iter().flat_map(|(_, _, m)| m.nonzeros());
    Ok(ExplicitOperator::new(entries)?.into())
}

/// Support entries of a finitely supported operator, without densifying.
fn support_entries(op: &OperatorRep) -> Option<Vec<(BasisIndex, BasisIndex, Complex64)>> {
    op.to_explicit().map(|e| e.entries().collect())
}

/// Norm of a strip over rows and columns `lo ∪ hi` whose `lo × lo` corner
/// vanishes.
///
/// Writing the strip as `[[0, B], [C, D]]` (rows and columns ordered `lo`,
/// `hi`), `H*H = [C D]*[C D] + [0 B]*[0 B]`, and `B*B = R*R` for the
/// triangular factor `R` of `B`. Hence `‖H‖ = ‖G‖` with `G = [[C, D], [0, R]]`,
/// which has at most `2 |hi|` rows.
fn strip_norm(
    lo: &[BasisIndex],
    hi: &[BasisIndex],
    entries: &[(BasisIndex, BasisIndex, Complex64)],
    tol: &Tolerance,
) -> Result<f64> {
    if entries.is_empty() {
        return Ok(0.0);
    }
    let (nl, nh) = (lo.len(), hi.len());
    let n = nl + nh;
    let col_of = |c: &BasisIndex| match lo.binary_search(c) {
        Ok(k) => k,
        Err(_) => nl + hi.binary_search(c).expect("strip column lies in lo or hi"),
    };
    let mut x = DMatrix::<Complex64>::zeros(nh, n);
    let mut b = DMatrix::<Complex64>::zeros(nl, nh);
    for (r, c, v) in entries {
        match hi.binary_search(r) {
            Ok(k) => x[(k, col_of(c))] = *v,
            Err(_) => {
                let row = lo.binary_search(r).expect("strip row lies in lo or hi");
                b[(row, hi.binary_search(c).expect("lo rows only meet hi columns"))] = *v;
            }
        }
    }
    let r = if nl > 0 { b.qr().r() } else { DMatrix::zeros(0, nh) };
    let mut g = DMatrix::<Complex64>::zeros(nh + r.nrows(), n);
    g.view_mut((0, 0), (nh, n)).copy_from(&x);
    g.view_mut((nh, nl), (r.nrows(), nh)).copy_from(&r);
    let rows: Vec<BasisIndex> = (0..g.nrows()).map(BasisIndex).collect();
    let cols: Vec<BasisIndex> = (0..n).map(BasisIndex).collect();
    let data = (0..g.nrows()).flat_map(|i| g.row(i).iter().copied().collect::<Vec<_>>()).collect();
    spectral_norm(&FiniteMatrix::new(rows, cols, data)?, tol)
}

/// Entries of the depth-truncated strip `i` of an infinitely supported
/// operator, with the strip's row/column split `(lo, hi)`.
fn truncated_strip(
    op: &OperatorRep,
    part: &Partition,
    i: BlockId,
    depth: usize,
) -> (Vec<BasisIndex>, Vec<BasisIndex>, Vec<(BasisIndex, BasisIndex, Complex64)>) {
    let lo = part.truncated_support((0..i.0).map(BlockId), depth);
    let hi = part.leading_indices(i, depth);
    let zero = Complex64::new(0.0, 0.0);
    let mut out = Vec::new();
    let mut push = |r: BasisIndex, c: BasisIndex| {
        let v = op.entry_at(r, c);
        if v != zero {
            out.push((r, c, v));
        }
    };
    if op.row_support(BasisIndex(0)).is_some() {
        let contains = |v: &[BasisIndex], x: &BasisIndex| v.binary_search(x).is_ok();
        for &r in lo.iter().chain(&hi) {
            let row_in_hi = contains(&hi, &r);
            for c in op.row_support(r).unwrap_or_default() {
                if contains(&hi, &c) || (row_in_hi && contains(&lo, &c)) {
                    push(r, c);
                }
            }
        }
    } else {
        for &r in &lo {
            for &c in &hi {
                push(r, c);
            }
        }
        for &r in &hi {
            for &c in lo.iter().chain(&hi) {
                push(r, c);
            }
        }
    }
    (lo, hi, out)
}

/// Smallest index dropped by truncating blocks `0..=i` to `depth` indices.
fn first_excluded(part: &Partition, i: BlockId, depth: usize) -> Option<BasisIndex> {
    if part.block_size(BlockId(0)).covers(depth) {
        return None;
    }
    (0..=i.0)
        .filter_map(|k| part.block_indices(BlockId(k)).nth(depth))
        .min()
}

/// Certified upper bounds on `‖H_i‖` available without looking at the
/// truncation: the strip bound for `part` and tail domination
/// `‖H_i‖ <= tail(first index of block i)`.
fn certified_uppers(op: &OperatorRep, part: &Partition, i: BlockId) -> Vec<(f64, String)> {
    let mut out = Vec::new();
    if let Some(sb) = op.strip_bound_for(part) {
        out.push((sb.at(i), sb.description().to_string()));
    }
    if let Some(t) = op.tail_bound() {
        out.push((t.at(part.first_index(i).0), t.description().to_string()));
    }
    out
}

fn check_against(lower: f64, upper: f64, what: &str, i: BlockId) -> Result<()> {
    if lower > upper * (1.0 + CERT_REL) + CERT_ABS {
        return Err(Error::Certificate(format!(
            "hook {i}: computed norm {lower} exceeds certified bound {upper} ({what})"
        )));
    }
    Ok(())
}

pub fn hook(op: &OperatorRep, part: &Partition, i: BlockId, depth: usize) -> Result<HookPoint> {
    hook_with(op, part, i, depth, &Tolerance::default())
}

/// Certified bound on the `i`-th hook norm.
///
/// `lower` is the norm of the strip truncated to `depth` indices per block
/// (a compression, so never above the true value), raised to the witness
/// modulus when a persistent witness covers hook `i`. `upper` is the best of
/// the available certificates, or exact when the truncation keeps the whole
/// strip.
pub fn hook_with(op: &OperatorRep, part: &Partition, i: BlockId, depth: usize, tol: &Tolerance) -> Result<HookPoint> {
    check_depth(depth)?;
    if let Some(entries) = support_entries(op) {
        let strip: Vec<_> = entries.into_iter().filter(|&(r, c, _)| in_strip(part, r, c, i)).collect();
        let kept: Vec<_> = strip
            .iter()
            .copied()
            .filter(|&(r, c, _)| part.within_depth(r, depth) && part.within_depth(c, depth))
            .collect();
        let lower = sparse_norm(&kept, tol)?;
        let upper = if kept.len() == strip.len() {
            lower
        } else {
            sparse_norm(&strip, tol)?
        };
        return Ok(HookPoint {
            i,
            bound: NormBound::new(lower, Some(upper)),
            depth,
        });
    }

    let (lo, hi, entries) = truncated_strip(op, part, i, depth);
    let computed = strip_norm(&lo, &hi, &entries, tol)?;
    let mut uppers = certified_uppers(op, part, i);
    for (u, what) in &uppers {
        check_against(computed, *u, what, i)?;
    }
    match first_excluded(part, i, depth) {
        None => uppers.push((computed, "full strip".into())),
        Some(n) => {
            if let Some(t) = op.tail_bound() {
                uppers.push((computed + 2.0 * t.at(n.0), "truncation + tail".into()));
            }
        }
    }
    let upper = uppers.iter().map(|u| u.0).reduce(f64::min);

    let mut lower = computed;
    if let Some(w) = op.persistent_witness().filter(|w| w.partition() == part) {
        if let Some(e) = verify_witness(op, part, &w, i)? {
            lower = lower.max(e.modulus);
        }
    }
    Ok(HookPoint {
        i,
        bound: NormBound::new(lower, upper),
        depth,
    })
}

/// Checks the witness entry for hook `i` against the entry oracle.
fn verify_witness(
    op: &OperatorRep,
    part: &Partition,
    w: &crate::model::WitnessFamily,
    i: BlockId,
) -> Result<Option<WitnessEntry>> {
    let Some((r, c)) = w.entry_for(i) else {
        return Ok(None);
    };
    let modulus = op.entry_at(r, c).norm();
    if !in_strip(part, r, c, i) || modulus < w.modulus() {
        return Err(Error::Certificate(format!(
            "witness ({r}, {c}) for hook {i} has modulus {modulus}, expected >= {} inside the strip",
            w.modulus()
        )));
    }
    Ok(Some(WitnessEntry {
        hook: i,
        row: r,
        col: c,
        modulus: w.modulus(),
    }))
}

/// Hooks `0..horizon`, computed in parallel.
pub fn hook_sequence(op: &OperatorRep, part: &Partition, horizon: usize, depth: usize) -> Result<Vec<HookPoint>> {
    if horizon == 0 {
        return Err(Error::Precondition("horizon must be at least 1".into()));
    }
    (0..horizon)
        .into_par_iter()
        .map(|i| hook(op, part, BlockId(i), depth))
        .collect()
}

/// Smallest computed hook index from which a decaying certificate stays
/// below `eps`.
fn decay_certificate(op: &OperatorRep, part: &Partition, eps: f64, horizon: usize) -> Option<(BlockId, String)> {
    let mut best: Option<(BlockId, String)> = None;
    if let Some(sb) = op.strip_bound_for(part) {
        if let Some(d) = sb.decay_from() {
            if let Some(i) = (d..horizon).find(|&i| sb.at(BlockId(i)) <= eps) {
                best = Some((BlockId(i), format!("strip bound {} <= {eps} from hook {i}", sb.description())));
            }
        }
    }
    if let Some(t) = op.tail_bound() {
        if let Some(d) = t.decay_from() {
            let found = (0..horizon).find(|&i| {
                let n = part.first_index(BlockId(i)).0;
                n >= d && t.at(n) <= eps
            });
            if let Some(i) = found {
                if best.as_ref().is_none_or(|b| i < b.0 .0) {
                    best = Some((BlockId(i), format!("tail bound {} <= {eps} from hook {i}", t.description())));
                }
            }
        }
    }
    best
}

/// Three-valued membership test with evidence.
pub fn membership(op: &OperatorRep, part: &Partition, eps: f64, horizon: usize, depth: usize) -> Result<MembershipVerdict> {
    if !(eps > 0.0) {
        return Err(Error::Precondition("eps must be positive".into()));
    }
    if horizon == 0 {
        return Err(Error::Precondition("horizon must be at least 1".into()));
    }
    check_depth(depth)?;

    if let Some(w) = op.persistent_witness().filter(|w| w.partition() == part) {
        let mut members = w.members_below(horizon);
        if members.is_empty() {
            members.push(w.nth(0));
        }
        let mut witness = Vec::with_capacity(members.len());
        for i in members {
            witness.extend(verify_witness(op, part, &w, i)?);
        }
        return Ok(MembershipVerdict::CertifiedOut {
            eps: w.modulus(),
            witness,
        });
    }

    if let Some(e) = op.to_explicit() {
        let extent = e.block_extent(part);
        return Ok(MembershipVerdict::CertifiedIn {
            horizon: BlockId(extent),
            certificate: format!("finite support: hooks vanish from block {extent} on"),
        });
    }

    let tol = Tolerance::default();
    if let Some((start, certificate)) = decay_certificate(op, part, eps, horizon) {
        // The certificate already bounds these hooks; recomputing them guards
        // against a certificate that disagrees with the entries.
        (start.0..horizon)
            .into_par_iter()
            .try_for_each(|i| hook_with(op, part, BlockId(i), depth, &tol).map(|_| ()))?;
        return Ok(MembershipVerdict::CertifiedIn {
            horizon: start,
            certificate,
        });
    }

    let hooks = hook_sequence(op, part, horizon, depth)?;
    let window = (horizon / 4).max(1);
    let max_tail = hooks[horizon - window..]
        .iter()
        .map(|h| h.bound.lower)
        .fold(0.0, f64::max);
    Ok(MembershipVerdict::Empirical {
        status: if max_tail <= eps {
            EmpiricalStatus::In
        } else {
            EmpiricalStatus::Out
        },
        horizon: BlockId(horizon),
        max_tail_hook_lower: max_tail,
    })
}

/// Norm of the difference between the square partial block sums over
/// blocks `0..=n` and `0..=n+1`.
///
/// The difference is assembled from the two compressions, independently of
/// the strip assembly in [`hook`], and should agree with hook `n + 1`.
pub fn partial_sum_gap(op: &OperatorRep, part: &Partition, n: BlockId, depth: usize) -> Result<NormBound> {
    check_depth(depth)?;
    let tol = Tolerance::default();
    let big = part.truncated_support((0..=n.0 + 1).map(BlockId), depth);
    let small = part.truncated_support((0..=n.0).map(BlockId), depth);
    let outer = FiniteMatrix::from_fn(big.clone(), big.clone(), |r, c| op.entry_at(r, c))?;
    let inner = FiniteMatrix::from_fn(small.clone(), small, |r, c| op.entry_at(r, c))?;
    let diff = FiniteMatrix::from_fn(big.clone(), big, |r, c| outer.at(r, c) - inner.at(r, c))?;
    let lower = spectral_norm(&diff, &tol)?;
    let strip = hook_with(op, part, BlockId(n.0 + 1), depth, &tol)?;
    Ok(NormBound::new(lower, strip.bound.upper.map(|u| u.max(lower))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn b(i: usize) -> BasisIndex {
        BasisIndex(i)
    }

    fn explicit(entries: &[(usize, usize, f64)]) -> OperatorRep {
        ExplicitOperator::new(entries.iter().map(|&(r, col, v)| (b(r), b(col), c(v))))
            .unwrap()
            .into()
    }

    #[test]
    fn identity_block() {
        let id: OperatorRep = ExplicitOperator::identity(4).into();
        let p = Partition::uniform(2).unwrap();
        let m = peirce_block(&id, &p, BlockId(0), BlockId(0), 2);
        assert_eq!(m.data(), &[c(1.0), c(0.0), c(0.0), c(1.0)]);
    }

    #[test]
    fn off_diagonal_block() {
        let a = explicit(&[(0, 3, 1.0)]);
        let p = Partition::uniform(2).unwrap();
        let m = peirce_block(&a, &p, BlockId(0), BlockId(1), 2);
        assert_eq!(m.data(), &[c(0.0), c(1.0), c(0.0), c(0.0)]);
    }

    #[test]
    fn reconstruct_identity_and_empty() {
        let p = Partition::uniform(2).unwrap();
        let id: OperatorRep = ExplicitOperator::identity(4).into();
        let blocks = vec![
            (BlockId(0), BlockId(0), peirce_block(&id, &p, BlockId(0), BlockId(0), 2)),
            (BlockId(1), BlockId(1), peirce_block(&id, &p, BlockId(1), BlockId(1), 2)),
        ];
        let r = reconstruct(&blocks).unwrap();
        assert_eq!(r.as_explicit(), id.as_explicit());
        assert!(reconstruct(&[]).unwrap().as_explicit().unwrap().is_empty());
    }

    #[test]
    fn reconstruct_rejects_overlap() {
        let p = Partition::uniform(2).unwrap();
        let id: OperatorRep = ExplicitOperator::identity(4).into();
        let m = peirce_block(&id, &p, BlockId(0), BlockId(0), 2);
        let err = reconstruct(&[(BlockId(0), BlockId(0), m.clone()), (BlockId(0), BlockId(0), m)]);
        assert_eq!(err.unwrap_err(), Error::Overlap { row: 0, col: 0 });
    }

    #[test]
    fn explicit_hook_zero() {
        let a = explicit(&[(0, 0, 3.0)]);
        let h = hook(&a, &Partition::atomic(), BlockId(0), 1).unwrap();
        assert_eq!(h.bound, NormBound::exact(3.0));
    }

    #[test]
    fn hooks_vanish_beyond_support() {
        let a = explicit(&[(0, 3, 1.0), (2, 1, -2.0), (1, 1, 0.5)]);
        let p = Partition::uniform(2).unwrap();
        let hs = hook_sequence(&a, &p, 6, 4).unwrap();
        for h in &hs[2..] {
            assert_eq!(h.bound, NormBound::exact(0.0));
        }
        assert!(hs[1].bound.lower > 0.0);
        assert_eq!(partial_sum_gap(&a, &p, BlockId(5), 4).unwrap(), NormBound::exact(0.0));
        assert!(matches!(
            membership(&a, &p, 1e-6, 4, 4).unwrap(),
            MembershipVerdict::CertifiedIn { horizon: BlockId(2), .. }
        ));
    }

    #[test]
    fn shallow_truncation_keeps_exact_upper() {
        // Entry at position 1 of block 0 is dropped at depth 1.
        let a = explicit(&[(0, 0, 1.0), (1, 1, 2.0)]);
        let p = Partition::uniform(2).unwrap();
        let h = hook(&a, &p, BlockId(0), 1).unwrap();
        assert_eq!(h.bound.lower, 1.0);
        assert_eq!(h.bound.upper, Some(2.0));
    }

    #[test]
    fn zero_depth_is_rejected() {
        let a = explicit(&[(0, 0, 1.0)]);
        assert!(hook(&a, &Partition::atomic(), BlockId(0), 0).is_err());
        assert!(membership(&a, &Partition::atomic(), 0.0, 4, 4).is_err());
    }

    #[test]
    fn thin_strip_norm_matches_dense() {
        let tol = Tolerance::default();
        let lo: Vec<_> = [0, 2, 3, 7, 9].map(b).to_vec();
        let hi: Vec<_> = [4, 11].map(b).to_vec();
        let mut entries = Vec::new();
        let mut x = 0.37f64;
        for &r in lo.iter().chain(&hi) {
            for &col in lo.iter().chain(&hi) {
                if hi.contains(&r) || hi.contains(&col) {
                    x = (x * 7.3 + 0.11).fract();
                    entries.push((r, col, Complex64::new(x - 0.5, 0.5 - x * x)));
                }
            }
        }
        let thin = strip_norm(&lo, &hi, &entries, &tol).unwrap();
        let dense = sparse_norm(&entries, &tol).unwrap();
        assert!((thin - dense).abs() < 1e-13, "{thin} vs {dense}");
        assert_eq!(strip_norm(&lo, &hi, &[], &tol).unwrap(), 0.0);
    }

    #[test]
    fn verdict_lines() {
        let v = MembershipVerdict::CertifiedOut {
            eps: 0.75,
            witness: vec![],
        };
        assert_eq!(v.to_string(), "CERTIFIED_OUT eps=0.75");
        let e = MembershipVerdict::Empirical {
            status: EmpiricalStatus::Out,
            horizon: BlockId(8),
            max_tail_hook_lower: 0.5,
        };
        assert_eq!(e.to_string(), "EMPIRICAL_OUT maxtail=0.5");
    }
}
