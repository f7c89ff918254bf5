//! Concrete operators: matrix units over a coarsened partition, the
//! row isometry that escapes the decomposition after multiplication by a
//! member, sample members of the infinite scalar matrix algebra, and coarse
//! projections.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{
    cantor_pair, cantor_unpair, BasisIndex, BlockId, BlockSize, Generator, OperatorRep, Partition, StripBound,
    TailBound, WitnessFamily,
};

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Coarse partition whose block `i` collects the base blocks `π(i, j)`.
pub fn cantor_coarsen(base: Partition) -> Partition {
    Partition::cantor_coarsen(base)
}

fn require_coarsening(part: &Partition, what: &str) -> Result<Partition> {
    part.base().cloned().ok_or_else(|| {
        Error::Precondition(format!("{what} needs a cantor-coarsened partition, got {part}"))
    })
}

struct MatrixUnit {
    base: Partition,
    group: usize,
    i: usize,
    j: usize,
    /// Base blocks holding the target rows and source columns.
    row_block: BlockId,
    col_block: BlockId,
}

impl MatrixUnit {
    fn source_of(&self, row: BasisIndex) -> Option<BasisIndex> {
        if self.base.block_of(row) != self.row_block {
            return None;
        }
        let k = self.base.position_in_block(row);
        self.base.index_in_block(self.col_block, k).ok()
    }

    fn target_of(&self, col: BasisIndex) -> Option<BasisIndex> {
        if self.base.block_of(col) != self.col_block {
            return None;
        }
        let k = self.base.position_in_block(col);
        self.base.index_in_block(self.row_block, k).ok()
    }
}

impl Generator for MatrixUnit {
    fn name(&self) -> String {
        format!("matrix_unit(group={}, i={}, j={})", self.group, self.i, self.j)
    }

    fn entry(&self, row: BasisIndex, col: BasisIndex) -> Complex64 {
        if self.source_of(row) == Some(col) {
            ONE
        } else {
            ZERO
        }
    }

    fn tail_bound(&self) -> Option<TailBound> {
        match self.base.block_size(self.row_block) {
            BlockSize::Finite(_) => {
                let last = self
                    .finite_support()
                    .into_iter()
                    .flatten()
                    .map(|(r, c)| r.0.max(c.0) + 1)
                    .max()
                    .unwrap_or(0);
                Some(TailBound::new("finite support", move |n| if n >= last { 0.0 } else { 2.0 }).vanishing_from(0))
            }
            BlockSize::Infinite => Some(TailBound::new("partial isometry", |_| 2.0)),
        }
    }

    fn finite_support(&self) -> Option<Vec<(BasisIndex, BasisIndex)>> {
        let BlockSize::Finite(n) = self.base.block_size(self.row_block) else {
            return None;
        };
        (0..n)
            .map(|k| {
                Some((
                    self.base.index_in_block(self.row_block, k).ok()?,
                    self.base.index_in_block(self.col_block, k).ok()?,
                ))
            })
            .collect()
    }

    fn row_support(&self, row: BasisIndex) -> Option<Vec<BasisIndex>> {
        Some(self.source_of(row).into_iter().collect())
    }

    fn col_support(&self, col: BasisIndex) -> Option<Vec<BasisIndex>> {
        Some(self.target_of(col).into_iter().collect())
    }
}

/// The partial isometry `x_ij` of coarse block `group`: it maps the `j`-th base
/// block inside the group onto the `i`-th, index by index.
///
/// Over a uniform base of width 1 this is the single entry
/// `E_{π(group, i), π(group, j)}`.
pub fn matrix_unit(part: &Partition, group: BlockId, i: usize, j: usize) -> Result<OperatorRep> {
    let base = require_coarsening(part, "matrix_unit")?;
    Ok(OperatorRep::generated(MatrixUnit {
        base,
        group: group.0,
        i,
        j,
        row_block: BlockId(cantor_pair(group.0, i)),
        col_block: BlockId(cantor_pair(group.0, j)),
    }))
}

struct RowIsometry {
    lambda: Complex64,
    part: Partition,
}

impl RowIsometry {
    /// Position of the `n`-th entry.
    fn position(part: &Partition, n: usize) -> Option<(BasisIndex, BasisIndex)> {
        Some((part.index_in_block(BlockId(0), n).ok()?, part.first_index(BlockId(n))))
    }

    fn column_of(&self, row: BasisIndex) -> Option<BasisIndex> {
        (self.part.block_of(row) == BlockId(0))
            .then(|| self.part.first_index(BlockId(self.part.position_in_block(row))))
    }

    fn row_of(&self, col: BasisIndex) -> Option<BasisIndex> {
        if self.part.position_in_block(col) != 0 {
            return None;
        }
        self.part.index_in_block(BlockId(0), self.part.block_of(col).0).ok()
    }
}

impl Generator for RowIsometry {
    fn name(&self) -> String {
        format!("row_isometry(lambda={}, partition={})", self.lambda, self.part)
    }

    fn entry(&self, row: BasisIndex, col: BasisIndex) -> Complex64 {
        if self.column_of(row) == Some(col) {
            self.lambda
        } else {
            ZERO
        }
    }

    fn tail_bound(&self) -> Option<TailBound> {
        let m = self.lambda.norm();
        Some(TailBound::new(format!("2|lambda| = {}", 2.0 * m), move |_| 2.0 * m))
    }

    fn strip_bounds(&self) -> Vec<StripBound> {
        let m = self.lambda.norm();
        vec![StripBound::new(self.part.clone(), format!("one entry of modulus {m} per strip"), move |_| m)]
    }

    fn persistent_witness(&self) -> Option<WitnessFamily> {
        let part = self.part.clone();
        Some(WitnessFamily::new(
            self.part.clone(),
            self.lambda.norm(),
            "entry (r(i), c(i)) in strip i",
            BlockId,
            move |i| Self::position(&part, i.0),
        ))
    }

    fn row_support(&self, row: BasisIndex) -> Option<Vec<BasisIndex>> {
        Some(self.column_of(row).into_iter().collect())
    }

    fn col_support(&self, col: BasisIndex) -> Option<Vec<BasisIndex>> {
        Some(self.row_of(col).into_iter().collect())
    }
}

/// Entries `lambda` at `(r(n), c(n))`, `n >= 0`, where `r(n)` is the `n`-th
/// index of coarse block 0 and `c(n)` the first index of coarse block `n`.
///
/// All rows lie in coarse block 0, so `q_0 a = a`. Every hook over `part`
/// holds exactly one entry, so the hooks are all `|lambda|`.
pub fn row_isometry(lambda: Complex64, part: &Partition) -> Result<OperatorRep> {
    require_coarsening(part, "row_isometry")?;
    if !(lambda.norm() > 0.0 && lambda.norm().is_finite()) {
        return Err(Error::Precondition(format!("row_isometry needs 0 < |lambda| < inf, got {lambda}")));
    }
    Ok(OperatorRep::generated(RowIsometry {
        lambda,
        part: part.clone(),
    }))
}

/// Coefficient rule of a sample infinite scalar matrix over the atomic partition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MinfRule {
    /// `b^max(i, j)`
    Geometric { base: f64 },
    /// `1 / (i + j + 2)`
    InverseSum,
}

struct Minf {
    rule: MinfRule,
}

impl Generator for Minf {
    fn name(&self) -> String {
        match self.rule {
            MinfRule::Geometric { base } => format!("minf_sample(geometric, base={base})"),
            MinfRule::InverseSum => "minf_sample(inverse_sum)".into(),
        }
    }

    fn entry(&self, row: BasisIndex, col: BasisIndex) -> Complex64 {
        let v = match self.rule {
            MinfRule::Geometric { base } => base.powi(row.0.max(col.0) as i32),
            MinfRule::InverseSum => 1.0 / (row.0 + col.0 + 2) as f64,
        };
        Complex64::new(v, 0.0)
    }

    fn tail_bound(&self) -> Option<TailBound> {
        match self.rule {
            MinfRule::Geometric { base } => {
                // Frobenius norm of the rows (equally, columns) with index >= n:
                // q^n ((n+1)/(1-q) + 2q/(1-q)^2), q = b^2.
                let q = base * base;
                let k = 2.0 * q / (1.0 - q);
                let start = ((q * (2.0 + k) - 1.0 - k) / (1.0 - q)).ceil().max(0.0) as usize;
                Some(
                    TailBound::new(format!("2 {base}^n sqrt((n+1)/(1-q) + 2q/(1-q)^2), q = {q}"), move |n| {
                        let n_f = n as f64;
                        2.0 * base.powi(n as i32) * ((n_f + 1.0) / (1.0 - q) + 2.0 * q / ((1.0 - q) * (1.0 - q))).sqrt()
                    })
                    .vanishing_from(start),
                )
            }
            // Hilbert's inequality: the matrix 1/(i+j+1) has norm pi.
            MinfRule::InverseSum => Some(TailBound::new("2 pi", |_| 2.0 * std::f64::consts::PI)),
        }
    }

    fn strip_bounds(&self) -> Vec<StripBound> {
        let part = Partition::atomic();
        match self.rule {
            MinfRule::Geometric { base } => {
                let q = base * base;
                let start = ((3.0 * q - 1.0) / (2.0 * (1.0 - q))).ceil().max(0.0) as usize;
                vec![StripBound::new(part, format!("{base}^i sqrt(2i+1)"), move |i| {
                    base.powi(i as i32) * ((2 * i + 1) as f64).sqrt()
                })
                .vanishing_from(start)]
            }
            MinfRule::InverseSum => vec![StripBound::new(part, "sqrt(2i/(i+2)^2 + 1/(2i+2)^2)", |i| {
                let i = i as f64;
                (2.0 * i / ((i + 2.0) * (i + 2.0)) + 1.0 / ((2.0 * i + 2.0) * (2.0 * i + 2.0))).sqrt()
            })
            .vanishing_from(2)],
        }
    }
}

/// Sample member of the infinite scalar matrix algebra, over the atomic partition.
pub fn minf_sample(rule: MinfRule) -> Result<OperatorRep> {
    if let MinfRule::Geometric { base } = rule {
        if !(base > 0.0 && base < 1.0) {
            return Err(Error::Precondition(format!("geometric base must lie in (0, 1), got {base}")));
        }
    }
    Ok(OperatorRep::generated(Minf { rule }))
}

struct CoarseProjection {
    part: Partition,
    group: usize,
}

impl CoarseProjection {
    fn contains(&self, index: BasisIndex) -> bool {
        self.part.block_of(index).0 == self.group
    }
}

impl Generator for CoarseProjection {
    fn name(&self) -> String {
        format!("coarse_projection(group={}, partition={})", self.group, self.part)
    }

    fn entry(&self, row: BasisIndex, col: BasisIndex) -> Complex64 {
        if row == col && self.contains(row) {
            ONE
        } else {
            ZERO
        }
    }

    fn tail_bound(&self) -> Option<TailBound> {
        Some(TailBound::new("2", |_| 2.0))
    }

    fn strip_bounds(&self) -> Vec<StripBound> {
        let g = self.group;
        let base = self.part.base().expect("checked at construction").clone();
        vec![
            StripBound::new(self.part.clone(), format!("single diagonal block {g}"), move |i| {
                if i == g {
                    1.0
                } else {
                    0.0
                }
            })
            .vanishing_from(g + 1),
            StripBound::new(base, format!("base blocks inside group {g}"), move |m| {
                if cantor_unpair(m).0 == g {
                    1.0
                } else {
                    0.0
                }
            }),
        ]
    }

    fn persistent_witness(&self) -> Option<WitnessFamily> {
        let g = self.group;
        let base = self.part.base().expect("checked at construction").clone();
        let b = base.clone();
        Some(WitnessFamily::new(
            base,
            1.0,
            format!("diagonal 1 in every base block of group {g}"),
            move |k| BlockId(cantor_pair(g, k)),
            move |m| {
                (cantor_unpair(m.0).0 == g).then(|| {
                    let x = b.first_index(m);
                    (x, x)
                })
            },
        ))
    }

    fn row_support(&self, row: BasisIndex) -> Option<Vec<BasisIndex>> {
        Some(if self.contains(row) { vec![row] } else { vec![] })
    }

    fn col_support(&self, col: BasisIndex) -> Option<Vec<BasisIndex>> {
        self.row_support(col)
    }
}

/// Diagonal indicator of coarse block `group`.
pub fn coarse_projection(part: &Partition, group: BlockId) -> Result<OperatorRep> {
    require_coarsening(part, "coarse_projection")?;
    Ok(OperatorRep::generated(CoarseProjection {
        part: part.clone(),
        group: group.0,
    }))
}

/// A named generator with its parameters, as read from an operator spec file.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    MatrixUnit { partition: Partition, group: BlockId, i: usize, j: usize },
    RowIsometry { lambda: Complex64, partition: Partition },
    MinfSample(MinfRule),
    CoarseProjection { partition: Partition, group: BlockId },
}

impl GeneratorSpec {
    pub fn name(&self) -> &'static str {
        match self {
            GeneratorSpec::MatrixUnit { .. } => "matrix_unit",
            GeneratorSpec::RowIsometry { .. } => "row_isometry",
            GeneratorSpec::MinfSample(_) => "minf_sample",
            GeneratorSpec::CoarseProjection { .. } => "coarse_projection",
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.build().map(|_| ())
    }

    pub fn build(&self) -> Result<OperatorRep> {
        match self {
            GeneratorSpec::MatrixUnit { partition, group, i, j } => matrix_unit(partition, *group, *i, *j),
            GeneratorSpec::RowIsometry { lambda, partition } => row_isometry(*lambda, partition),
            GeneratorSpec::MinfSample(rule) => minf_sample(*rule),
            GeneratorSpec::CoarseProjection { partition, group } => coarse_projection(partition, *group),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{hook, membership, MembershipVerdict};

    fn b(i: usize) -> BasisIndex {
        BasisIndex(i)
    }

    fn coarse() -> Partition {
        cantor_coarsen(Partition::atomic())
    }

    #[test]
    fn coarse_blocks_begin() {
        let p = coarse();
        assert_eq!(p.leading_indices(BlockId(0), 5), [0, 2, 5, 9, 14].map(b));
        assert_eq!(p.leading_indices(BlockId(1), 4), [1, 4, 8, 13].map(b));
    }

    #[test]
    fn matrix_units_are_single_entries() {
        let p = coarse();
        let x00 = matrix_unit(&p, BlockId(0), 0, 0).unwrap().to_explicit().unwrap();
        assert_eq!(x00.entries().collect::<Vec<_>>(), vec![(b(0), b(0), ONE)]);
        let x01 = matrix_unit(&p, BlockId(0), 0, 1).unwrap();
        assert_eq!(x01.to_explicit().unwrap().entries().collect::<Vec<_>>(), vec![(b(0), b(2), ONE)]);
        let xx = x01.mul(&x01.adjoint()).unwrap().to_explicit().unwrap();
        assert_eq!(xx.entries().collect::<Vec<_>>(), vec![(b(0), b(0), ONE)]);
        let xx = x01.adjoint().mul(&x01).unwrap().to_explicit().unwrap();
        assert_eq!(xx.entries().collect::<Vec<_>>(), vec![(b(2), b(2), ONE)]);
    }

    #[test]
    fn matrix_unit_needs_coarsening() {
        assert!(matrix_unit(&Partition::atomic(), BlockId(0), 0, 0).is_err());
    }

    #[test]
    fn nested_matrix_unit_is_infinite() {
        let p = cantor_coarsen(coarse());
        let x = matrix_unit(&p, BlockId(0), 0, 1).unwrap();
        assert!(!x.has_finite_support());
        // Base block π(0, 1) = 2 of the inner coarsening begins 3, 7, 12.
        assert_eq!(x.entry_at(b(0), b(3)), ONE);
        assert_eq!(x.entry_at(b(2), b(7)), ONE);
        let y = x.mul(&x.adjoint()).unwrap();
        assert_eq!(y.entry_at(b(5), b(5)), ONE);
        assert_eq!(y.entry_at(b(3), b(3)), ZERO);
    }

    #[test]
    fn row_isometry_entries() {
        let a = row_isometry(Complex64::new(0.75, 0.0), &coarse()).unwrap();
        assert_eq!(a.entry_at(b(0), b(0)).re, 0.75);
        assert_eq!(a.entry_at(b(2), b(1)).re, 0.75);
        assert_eq!(a.entry_at(b(5), b(3)).re, 0.75);
        assert_eq!(a.entry_at(b(2), b(2)), ZERO);
        assert!(row_isometry(ZERO, &coarse()).is_err());
    }

    #[test]
    fn row_isometry_hooks() {
        let p = coarse();
        let a = row_isometry(Complex64::new(0.75, 0.0), &p).unwrap();
        for i in [0, 1, 7, 50] {
            for depth in [1, 3, 16] {
                let h = hook(&a, &p, BlockId(i), depth).unwrap();
                assert_eq!((h.bound.lower, h.bound.upper), (0.75, Some(0.75)), "hook {i} depth {depth}");
            }
        }
        let v = membership(&a, &p, 1e-6, 32, 16).unwrap();
        assert!(matches!(v, MembershipVerdict::CertifiedOut { eps, .. } if eps == 0.75));
    }

    #[test]
    fn minf_rules() {
        let g = minf_sample(MinfRule::Geometric { base: 0.5 }).unwrap();
        assert_eq!(g.entry_at(b(1), b(1)).re, 0.5);
        assert_eq!(g.entry_at(b(0), b(3)).re, 0.125);
        let s = minf_sample(MinfRule::InverseSum).unwrap();
        assert_eq!(s.entry_at(b(1), b(2)).re, 0.2);
        assert!(minf_sample(MinfRule::Geometric { base: 1.0 }).is_err());
    }

    #[test]
    fn coarse_projection_over_both_partitions() {
        let p = coarse();
        let q = coarse_projection(&p, BlockId(0)).unwrap();
        for i in [0, 2, 5, 9] {
            assert_eq!(q.entry_at(b(i), b(i)), ONE);
        }
        assert_eq!(q.entry_at(b(1), b(1)), ZERO);
        let coarse_in = membership(&q, &p, 1e-6, 16, 8).unwrap();
        assert!(matches!(coarse_in, MembershipVerdict::CertifiedIn { horizon: BlockId(1), .. }));
        let fine_out = membership(&q, &Partition::atomic(), 1e-6, 16, 8).unwrap();
        assert!(matches!(fine_out, MembershipVerdict::CertifiedOut { eps, .. } if eps == 1.0));
    }

    #[test]
    fn spec_round_trip() {
        let s = GeneratorSpec::CoarseProjection {
            partition: coarse(),
            group: BlockId(2),
        };
        assert_eq!(s.name(), "coarse_projection");
        assert!(s.validate().is_ok());
        let bad = GeneratorSpec::CoarseProjection {
            partition: Partition::atomic(),
            group: BlockId(0),
        };
        assert!(bad.validate().is_err());
    }
}
