//! Operators on l2(N) as infinite matrices.
//!
//! An operator is either an explicit finite set of entries or a generator:
//! a pure entry oracle optionally accompanied by certificates (a tail bound,
//! per-partition strip bounds, a persistent witness). Certificates are what
//! lets finitely many computations say something about the whole operator.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::index::{BasisIndex, BlockId};
use super::partition::Partition;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Inner sums of infinite products are cut off once the neglected part is
/// certified below this absolute value.
pub const INNER_SUM_CUTOFF: f64 = 1e-200;

const INNER_SUM_MAX_TERMS: usize = 1 << 22;

type SeqFn = Arc<dyn Fn(usize) -> f64 + Send + Sync>;

/// Certified bound `tail(n) >= ‖(1 - P_n) a‖ + ‖a (1 - P_n)‖`, where `P_n`
/// projects onto the indices `< n`.
#[derive(Clone)]
pub struct TailBound {
    bound: SeqFn,
    decay_from: Option<usize>,
    description: String,
}

impl TailBound {
    pub fn new(description: impl Into<String>, f: impl Fn(usize) -> f64 + Send + Sync + 'static) -> Self {
        TailBound {
            bound: Arc::new(f),
            decay_from: None,
            description: description.into(),
        }
    }

    /// Declares the bound nonincreasing from `n` on and tending to zero.
    pub fn vanishing_from(mut self, n: usize) -> Self {
        self.decay_from = Some(n);
        self
    }

    pub fn at(&self, n: usize) -> f64 {
        (self.bound)(n)
    }

    pub fn decay_from(&self) -> Option<usize> {
        self.decay_from
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// `tail(0) = 2‖a‖`, so half of it bounds the operator norm.
    pub fn norm_bound(&self) -> f64 {
        self.at(0) / 2.0
    }

    fn scaled(&self, s: f64) -> Self {
        let f = self.bound.clone();
        TailBound {
            bound: Arc::new(move |n| s * f(n)),
            decay_from: self.decay_from,
            description: format!("{s} * ({})", self.description),
        }
    }
}

impl fmt::Debug for TailBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TailBound")
            .field("description", &self.description)
            .field("decay_from", &self.decay_from)
            .finish()
    }
}

/// Certified upper bound on the full hook (strip) norm of every block of one
/// partition.
#[derive(Clone)]
pub struct StripBound {
    partition: Partition,
    bound: SeqFn,
    decay_from: Option<usize>,
    description: String,
}

impl StripBound {
    pub fn new(
        partition: Partition,
        description: impl Into<String>,
        f: impl Fn(usize) -> f64 + Send + Sync + 'static,
    ) -> Self {
        StripBound {
            partition,
            bound: Arc::new(f),
            decay_from: None,
            description: description.into(),
        }
    }

    /// Declares the bound nonincreasing from hook `i` on and tending to zero.
    pub fn vanishing_from(mut self, i: usize) -> Self {
        self.decay_from = Some(i);
        self
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn at(&self, i: BlockId) -> f64 {
        (self.bound)(i.0)
    }

    pub fn decay_from(&self) -> Option<usize> {
        self.decay_from
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    fn scaled(&self, s: f64) -> Self {
        let f = self.bound.clone();
        StripBound {
            partition: self.partition.clone(),
            bound: Arc::new(move |i| s * f(i)),
            decay_from: self.decay_from,
            description: format!("{s} * ({})", self.description),
        }
    }
}

impl fmt::Debug for StripBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StripBound")
            .field("partition", &self.partition)
            .field("description", &self.description)
            .finish()
    }
}

/// An infinite family of hooks, each holding an entry of modulus at least
/// `modulus`. Such a family keeps the hook norms away from zero.
#[derive(Clone)]
pub struct WitnessFamily {
    partition: Partition,
    modulus: f64,
    nth: Arc<dyn Fn(usize) -> BlockId + Send + Sync>,
    entry: Arc<dyn Fn(BlockId) -> Option<(BasisIndex, BasisIndex)> + Send + Sync>,
    description: String,
}

impl WitnessFamily {
    /// `nth(k)` enumerates the hooks of the family in strictly increasing
    /// order; `entry(i)` returns the witness position for hook `i`, or `None`
    /// when `i` is not in the family.
    pub fn new(
        partition: Partition,
        modulus: f64,
        description: impl Into<String>,
        nth: impl Fn(usize) -> BlockId + Send + Sync + 'static,
        entry: impl Fn(BlockId) -> Option<(BasisIndex, BasisIndex)> + Send + Sync + 'static,
    ) -> Self {
        WitnessFamily {
            partition,
            modulus,
            nth: Arc::new(nth),
            entry: Arc::new(entry),
            description: description.into(),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn modulus(&self) -> f64 {
        self.modulus
    }

    pub fn nth(&self, k: usize) -> BlockId {
        (self.nth)(k)
    }

    pub fn entry_for(&self, hook: BlockId) -> Option<(BasisIndex, BasisIndex)> {
        (self.entry)(hook)
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// Family members below `horizon`.
    pub fn members_below(&self, horizon: usize) -> Vec<BlockId> {
        (0..).map(|k| self.nth(k)).take_while(|b| b.0 < horizon).collect()
    }

    fn adjoint(&self) -> Self {
        let e = self.entry.clone();
        WitnessFamily {
            entry: Arc::new(move |i| e(i).map(|(r, c)| (c, r))),
            description: format!("adjoint of {}", self.description),
            ..self.clone()
        }
    }

    fn scaled(&self, s: f64) -> Self {
        WitnessFamily {
            modulus: self.modulus * s,
            ..self.clone()
        }
    }
}

impl fmt::Debug for WitnessFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WitnessFamily")
            .field("partition", &self.partition)
            .field("modulus", &self.modulus)
            .field("description", &self.description)
            .finish()
    }
}

/// Entry oracle of an infinite operator plus its certificates.
///
/// `entry` must be pure. `row_support` / `col_support` either return `Some`
/// for every argument or `None` for every argument.
pub trait Generator: Send + Sync {
    fn name(&self) -> String;

    fn entry(&self, row: BasisIndex, col: BasisIndex) -> Complex64;

    fn tail_bound(&self) -> Option<TailBound> {
        None
    }

    fn strip_bounds(&self) -> Vec<StripBound> {
        Vec::new()
    }

    fn persistent_witness(&self) -> Option<WitnessFamily> {
        None
    }

    /// Every position that may hold a nonzero entry, when there are finitely many.
    fn finite_support(&self) -> Option<Vec<(BasisIndex, BasisIndex)>> {
        None
    }

    /// Columns that may be nonzero in `row`.
    fn row_support(&self, _row: BasisIndex) -> Option<Vec<BasisIndex>> {
        None
    }

    /// Rows that may be nonzero in `col`.
    fn col_support(&self, _col: BasisIndex) -> Option<Vec<BasisIndex>> {
        None
    }
}

/// Finitely supported operator; no stored zeros, no duplicate positions.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ExplicitOperator {
    entries: BTreeMap<(BasisIndex, BasisIndex), Complex64>,
    by_col: BTreeSet<(BasisIndex, BasisIndex)>,
}

impl ExplicitOperator {
    /// Fails with [`Error::Overlap`] on a repeated position. Zero values are dropped.
    pub fn new(entries: impl IntoIterator<Item = (BasisIndex, BasisIndex, Complex64)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut map = BTreeMap::new();
        for (r, c, v) in entries {
            if !seen.insert((r, c)) {
                return Err(Error::Overlap { row: r.0, col: c.0 });
            }
            if v != ZERO {
                map.insert((r, c), v);
            }
        }
        Ok(Self::from_map(map))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Identity on the indices `0..n`.
    pub fn identity(n: usize) -> Self {
        Self::from_map(
            (0..n)
                .map(|i| ((BasisIndex(i), BasisIndex(i)), Complex64::new(1.0, 0.0)))
                .collect(),
        )
    }

    fn from_map(mut entries: BTreeMap<(BasisIndex, BasisIndex), Complex64>) -> Self {
        entries.retain(|_, v| *v != ZERO);
        let by_col = entries.keys().map(|&(r, c)| (c, r)).collect();
        ExplicitOperator { entries, by_col }
    }

    pub fn get(&self, row: BasisIndex, col: BasisIndex) -> Complex64 {
        self.entries.get(&(row, col)).copied().unwrap_or(ZERO)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (BasisIndex, BasisIndex, Complex64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    pub fn row_support(&self, row: BasisIndex) -> Vec<BasisIndex> {
        self.entries
            .range((row, BasisIndex(0))..=(row, BasisIndex(usize::MAX)))
            .map(|(&(_, c), _)| c)
            .collect()
    }

    pub fn col_support(&self, col: BasisIndex) -> Vec<BasisIndex> {
        self.by_col
            .range((col, BasisIndex(0))..=(col, BasisIndex(usize::MAX)))
            .map(|&(_, r)| r)
            .collect()
    }

    /// One past the largest block touched by the support (0 when empty).
    pub fn block_extent(&self, part: &Partition) -> usize {
        self.entries
            .keys()
            .map(|&(r, c)| part.block_of(r).0.max(part.block_of(c).0) + 1)
            .max()
            .unwrap_or(0)
    }

    /// Smallest truncation depth that keeps every support index.
    pub fn covering_depth(&self, part: &Partition) -> usize {
        self.entries
            .keys()
            .map(|&(r, c)| part.position_in_block(r).max(part.position_in_block(c)) + 1)
            .max()
            .unwrap_or(1)
    }

    pub fn adjoint(&self) -> Self {
        Self::from_map(self.entries.iter().map(|(&(r, c), v)| ((c, r), v.conj())).collect())
    }

    pub fn scale(&self, lambda: Complex64) -> Self {
        Self::from_map(self.entries.iter().map(|(&k, v)| (k, lambda * v)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut map = self.entries.clone();
        for (&k, v) in &other.entries {
            *map.entry(k).or_insert(ZERO) += v;
        }
        Self::from_map(map)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map: BTreeMap<(BasisIndex, BasisIndex), Complex64> = BTreeMap::new();
        for (&(r, k), a) in &self.entries {
            for c in other.row_support(k) {
                *map.entry((r, c)).or_insert(ZERO) += a * other.get(k, c);
            }
        }
        Self::from_map(map)
    }

    /// Frobenius norm of the part of the support with row (or column) index `>= n`.
    fn frobenius_tail(&self, n: usize) -> f64 {
        let (mut rows, mut cols) = (0.0, 0.0);
        for (&(r, c), v) in &self.entries {
            if r.0 >= n {
                rows += v.norm_sqr();
            }
            if c.0 >= n {
                cols += v.norm_sqr();
            }
        }
        rows.sqrt() + cols.sqrt()
    }
}

/// An operator on l2(N).
#[derive(Clone)]
pub enum OperatorRep {
    Explicit(ExplicitOperator),
    Generated(Arc<dyn Generator>),
}

impl fmt::Debug for OperatorRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorRep::Explicit(e) => f.debug_tuple("Explicit").field(e).finish(),
            OperatorRep::Generated(g) => write!(f, "Generated({})", g.name()),
        }
    }
}

impl From<ExplicitOperator> for OperatorRep {
    fn from(e: ExplicitOperator) -> Self {
        OperatorRep::Explicit(e)
    }
}

impl OperatorRep {
    pub fn generated(g: impl Generator + 'static) -> Self {
        OperatorRep::Generated(Arc::new(g))
    }

    pub fn name(&self) -> String {
        match self {
            OperatorRep::Explicit(e) => format!("explicit({} entries)", e.len()),
            OperatorRep::Generated(g) => g.name(),
        }
    }

    pub fn entry_at(&self, row: BasisIndex, col: BasisIndex) -> Complex64 {
        match self {
            OperatorRep::Explicit(e) => e.get(row, col),
            OperatorRep::Generated(g) => g.entry(row, col),
        }
    }

    pub fn as_explicit(&self) -> Option<&ExplicitOperator> {
        match self {
            OperatorRep::Explicit(e) => Some(e),
            OperatorRep::Generated(_) => None,
        }
    }

    /// Materializes a finitely supported operator.
    pub fn to_explicit(&self) -> Option<ExplicitOperator> {
        match self {
            OperatorRep::Explicit(e) => Some(e.clone()),
            OperatorRep::Generated(g) => {
                let support = g.finite_support()?;
                let map = support
                    .into_iter()
                    .map(|(r, c)| ((r, c), g.entry(r, c)))
                    .collect();
                Some(ExplicitOperator::from_map(map))
            }
        }
    }

    pub fn has_finite_support(&self) -> bool {
        match self {
            OperatorRep::Explicit(_) => true,
            OperatorRep::Generated(g) => g.finite_support().is_some(),
        }
    }

    pub fn tail_bound(&self) -> Option<TailBound> {
        match self {
            OperatorRep::Explicit(e) => {
                let e = e.clone();
                Some(
                    TailBound::new("Frobenius norm of the finite support tail", move |n| {
                        e.frobenius_tail(n)
                    })
                    .vanishing_from(0),
                )
            }
            OperatorRep::Generated(g) => g.tail_bound(),
        }
    }

    pub fn strip_bounds(&self) -> Vec<StripBound> {
        match self {
            OperatorRep::Explicit(_) => Vec::new(),
            OperatorRep::Generated(g) => g.strip_bounds(),
        }
    }

    /// The strip bound declared for `part`, if any.
    pub fn strip_bound_for(&self, part: &Partition) -> Option<StripBound> {
        self.strip_bounds().into_iter().find(|s| s.partition() == part)
    }

    pub fn persistent_witness(&self) -> Option<WitnessFamily> {
        match self {
            OperatorRep::Explicit(_) => None,
            OperatorRep::Generated(g) => g.persistent_witness(),
        }
    }

    pub fn row_support(&self, row: BasisIndex) -> Option<Vec<BasisIndex>> {
        match self {
            OperatorRep::Explicit(e) => Some(e.row_support(row)),
            OperatorRep::Generated(g) => g.row_support(row),
        }
    }

    pub fn col_support(&self, col: BasisIndex) -> Option<Vec<BasisIndex>> {
        match self {
            OperatorRep::Explicit(e) => Some(e.col_support(col)),
            OperatorRep::Generated(g) => g.col_support(col),
        }
    }

    pub fn adjoint(&self) -> OperatorRep {
        match self.to_explicit() {
            Some(e) => e.adjoint().into(),
            None => OperatorRep::generated(Adjoint(self.clone())),
        }
    }

    pub fn scale(&self, lambda: Complex64) -> OperatorRep {
        if lambda == ZERO {
            return ExplicitOperator::zero().into();
        }
        match self.to_explicit() {
            Some(e) => e.scale(lambda).into(),
            None => OperatorRep::generated(Scaled {
                lambda,
                inner: self.clone(),
            }),
        }
    }

    pub fn add(&self, other: &OperatorRep) -> OperatorRep {
        match (self.to_explicit(), other.to_explicit()) {
            (Some(a), Some(b)) => a.add(&b).into(),
            _ => OperatorRep::generated(Sum {
                left: self.clone(),
                right: other.clone(),
            }),
        }
    }

    /// Operator product `self * other`.
    ///
    /// Exact whenever one side has finite row (left) or column (right)
    /// supports. Otherwise both factors need vanishing tail bounds and the
    /// inner sum is truncated where the neglected part is certified below
    /// [`INNER_SUM_CUTOFF`].
    pub fn mul(&self, other: &OperatorRep) -> Result<OperatorRep> {
        if let (Some(a), Some(b)) = (self.to_explicit(), other.to_explicit()) {
            return Ok(a.mul(&b).into());
        }
        Ok(OperatorRep::generated(Product::new(self.clone(), other.clone())?))
    }
}

struct Adjoint(OperatorRep);

impl Generator for Adjoint {
    fn name(&self) -> String {
        format!("adjoint({})", self.0.name())
    }

    fn entry(&self, row: BasisIndex, col: BasisIndex) -> Complex64 {
        self.0.entry_at(col, row).conj()
    }

    fn tail_bound(&self) -> Option<TailBound> {
        // The tail bound is symmetric under taking adjoints.
        self.0.tail_bound()
    }

    fn strip_bounds(&self) -> Vec<StripBound> {
        self.0.strip_bounds()
    }

    fn persistent_witness(&self) -> Option<WitnessFamily> {
        self.0.persistent_witness().map(|w| w.adjoint())
    }

    fn row_support(&self, row: BasisIndex) -> Option<Vec<BasisIndex>> {
        self.0.col_support(row)
    }

    fn col_support(&self, col: BasisIndex) -> Option<Vec<BasisIndex>> {
        self.0.row_support(col)
    }
}

struct Scaled {
    lambda: Complex64,
    inner: OperatorRep,
}

impl Generator for Scaled {
    fn name(&self) -> String {
        format!("({}) * {}", self.lambda, self.inner.name())
    }

    fn entry(&self, row: BasisIndex, col: BasisIndex) -> Complex64 {
        self.lambda * self.inner.entry_at(row, col)
    }

    fn tail_bound(&self) -> Option<TailBound> {
        self.inner.tail_bound().map(|t| t.scaled(self.lambda.norm()))
    }

    fn strip_bounds(&self) -> Vec<StripBound> {
        let s = self.lambda.norm();
        self.inner.strip_bounds().iter().map(|b| b.scaled(s)).collect()
    }

    fn persistent_witness(&self) -> Option<WitnessFamily> {
        let s = self.lambda.norm();
        self.inner.persistent_witness().map(|w| w.scaled(s))
    }

    fn row_support(&self, row: BasisIndex) -> Option<Vec<BasisIndex>> {
        self.inner.row_support(row)
    }

    fn col_support(&self, col: BasisIndex) -> Option<Vec<BasisIndex>> {
        self.inner.col_support(col)
    }
}

struct Sum {
    left: OperatorRep,
    right: OperatorRep,
}

fn union(a: Vec<BasisIndex>, b: Vec<BasisIndex>) -> Vec<BasisIndex> {
    let mut out: Vec<_> = a.into_iter().chain(b).collect();
    out.sort_unstable();
    out.dedup();
    out
}

impl Generator for Sum {
    fn name(&self) -> String {
        format!("{} + {}", self.left.name(), self.right.name())
    }

    fn entry(&self, row: BasisIndex, col: BasisIndex) -> Complex64 {
        self.left.entry_at(row, col) + self.right.entry_at(row, col)
    }

    fn tail_bound(&self) -> Option<TailBound> {
        let (a, b) = (self.left.tail_bound()?, self.right.tail_bound()?);
        let desc = format!("{} + {}", a.description(), b.description());
        let decay = a.decay_from().zip(b.decay_from()).map(|(x, y)| x.max(y));
        let t = TailBound::new(desc, move |n| a.at(n) + b.at(n));
        Some(match decay {
            Some(d) => t.vanishing_from(d),
            None => t,
        })
    }

    fn strip_bounds(&self) -> Vec<StripBound> {
        let right = self.right.strip_bounds();
        self.left
            .strip_bounds()
            .into_iter()
            .filter_map(|a| {
                let b = right.iter().find(|b| b.partition() == a.partition())?.clone();
                let desc = format!("{} + {}", a.description(), b.description());
                let decay = a.decay_from().zip(b.decay_from()).map(|(x, y)| x.max(y));
                let part = a.partition().clone();
                let s = StripBound::new(part, desc, move |i| a.at(BlockId(i)) + b.at(BlockId(i)));
                Some(match decay {
                    Some(d) => s.vanishing_from(d),
                    None => s,
                })
            })
            .collect()
    }

    fn row_support(&self, row: BasisIndex) -> Option<Vec<BasisIndex>> {
        Some(union(self.left.row_support(row)?, self.right.row_support(row)?))
    }

    fn col_support(&self, col: BasisIndex) -> Option<Vec<BasisIndex>> {
        Some(union(self.left.col_support(col)?, self.right.col_support(col)?))
    }
}

struct Product {
    left: OperatorRep,
    right: OperatorRep,
    /// Inner-sum length when neither side is sparse.
    inner_terms: Option<usize>,
}

impl Product {
    fn new(left: OperatorRep, right: OperatorRep) -> Result<Self> {
        let sparse =
            left.row_support(BasisIndex(0)).is_some() || right.col_support(BasisIndex(0)).is_some();
        if sparse {
            return Ok(Product {
                left,
                right,
                inner_terms: None,
            });
        }
        let missing = || {
            Error::Precondition(format!(
                "product {} * {} needs sparse rows/columns or vanishing tail bounds on both factors",
                left.name(),
                right.name()
            ))
        };
        let (a, b) = (left.tail_bound().ok_or_else(missing)?, right.tail_bound().ok_or_else(missing)?);
        let start = a.decay_from().zip(b.decay_from()).map(|(x, y)| x.max(y)).ok_or_else(missing)?;
        // |sum_{k >= K} a_rk b_kc| <= ‖a (1 - P_K)‖ ‖(1 - P_K) b‖ <= tail_a(K) tail_b(K)
        let k = (start..INNER_SUM_MAX_TERMS)
            .find(|&k| a.at(k) * b.at(k) <= INNER_SUM_CUTOFF)
            .ok_or_else(missing)?;
        Ok(Product {
            left,
            right,
            inner_terms: Some(k),
        })
    }
}

impl Generator for Product {
    fn name(&self) -> String {
        format!("({}) * ({})", self.left.name(), self.right.name())
    }

    fn entry(&self, row: BasisIndex, col: BasisIndex) -> Complex64 {
        if let Some(ks) = self.left.row_support(row) {
            return ks
                .into_iter()
                .map(|k| self.left.entry_at(row, k) * self.right.entry_at(k, col))
                .sum();
        }
        if let Some(ks) = self.right.col_support(col) {
            return ks
                .into_iter()
                .map(|k| self.left.entry_at(row, k) * self.right.entry_at(k, col))
                .sum();
        }
        let n = self.inner_terms.expect("checked at construction");
        (0..n)
            .map(|k| self.left.entry_at(row, BasisIndex(k)) * self.right.entry_at(BasisIndex(k), col))
            .sum()
    }

    fn tail_bound(&self) -> Option<TailBound> {
        // ‖(1-P) ab‖ <= ‖(1-P) a‖ ‖b‖ and ‖ab (1-P)‖ <= ‖a‖ ‖b (1-P)‖
        let (a, b) = (self.left.tail_bound()?, self.right.tail_bound()?);
        let (na, nb) = (a.norm_bound(), b.norm_bound());
        let desc = format!(
            "{nb} * ({}) + {na} * ({})",
            a.description(),
            b.description()
        );
        let decay = a.decay_from().zip(b.decay_from()).map(|(x, y)| x.max(y));
        let t = TailBound::new(desc, move |n| nb * a.at(n) + na * b.at(n));
        Some(match decay {
            Some(d) => t.vanishing_from(d),
            None => t,
        })
    }

    fn row_support(&self, row: BasisIndex) -> Option<Vec<BasisIndex>> {
        let mut out = Vec::new();
        for k in self.left.row_support(row)? {
            out.extend(self.right.row_support(k)?);
        }
        Some(union(out, Vec::new()))
    }

    fn col_support(&self, col: BasisIndex) -> Option<Vec<BasisIndex>> {
        let mut out = Vec::new();
        for k in self.right.col_support(col)? {
            out.extend(self.left.col_support(k)?);
        }
        Some(union(out, Vec::new()))
    }
}
