//! Worked examples for every public operation, each checked against a value
//! computed independently in `ndc-oracle` or by hand.

use ndc_oracle as oracle;
use num_complex::Complex64;

use normdecomp::compressions::{
    compression, norm_via_compressions, positivity_via_compressions, CompressionSchedule, PositivityVerdict,
    DEFAULT_SLACK,
};
use normdecomp::constructions::{
    cantor_coarsen, coarse_projection, matrix_unit, minf_sample, row_isometry, MinfRule,
};
use normdecomp::decomposition::{
    hook, hook_sequence, membership, partial_sum_gap, peirce_block, reconstruct, MembershipVerdict,
};
use normdecomp::model::{BasisIndex, BlockId, ExplicitOperator, FiniteMatrix, NormBound, OperatorRep, Partition};
use normdecomp::numerics::{min_eig_hermitian, spectral_norm, Tolerance};
use normdecomp::Error;

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

fn square(vals: &[&[f64]]) -> FiniteMatrix {
    let idx: Vec<_> = (0..vals.len()).map(b).collect();
    FiniteMatrix::new(idx.clone(), idx, vals.iter().flat_map(|r| r.iter().map(|&v| c(v))).collect()).unwrap()
}

fn coarse() -> Partition {
    cantor_coarsen(Partition::atomic())
}

fn geometric() -> OperatorRep {
    minf_sample(MinfRule::Geometric { base: 0.5 }).unwrap()
}

fn row_iso() -> OperatorRep {
    row_isometry(c(0.75), &coarse()).unwrap()
}

/// Largest eigenvalue of the 2x2 strip [[0, .5], [.5, .5]].
fn golden() -> f64 {
    oracle::eig2_hermitian(0.0, c(0.5), 0.5).1
}

// core model

#[test]
fn block_of_examples() {
    assert_eq!(Partition::uniform(2).unwrap().block_of(b(5)), BlockId(2));
    assert_eq!(Partition::atomic().block_of(b(7)), BlockId(7));
    // 5 sits on anti-diagonal 2 at column 2, i.e. pair (0, 2).
    assert!(oracle::cantor_block(0, 3).contains(&5));
    assert_eq!(coarse().block_of(b(5)), BlockId(0));
}

#[test]
fn index_in_block_examples() {
    assert_eq!(Partition::uniform(2).unwrap().index_in_block(BlockId(1), 0), Ok(b(2)));
    assert_eq!(Partition::uniform(3).unwrap().index_in_block(BlockId(0), 2), Ok(b(2)));
    let expect = oracle::cantor_block(0, 4);
    for (k, &x) in expect.iter().enumerate() {
        assert_eq!(coarse().index_in_block(BlockId(0), k), Ok(b(x)));
    }
    assert_eq!(
        Partition::uniform(2).unwrap().index_in_block(BlockId(0), 2),
        Err(Error::Range { block: 0, k: 2, size: 2 })
    );
}

#[test]
fn entry_at_examples() {
    let a = OperatorRep::from(ExplicitOperator::new([(b(0), b(0), Complex64::new(3.0, 4.0))]).unwrap());
    assert_eq!(a.entry_at(b(0), b(0)), Complex64::new(3.0, 4.0));
    assert_eq!(a.entry_at(b(1), b(1)), c(0.0));
    assert_eq!(geometric().entry_at(b(1), b(1)), c(0.5f64.powi(1)));
}

// numerics

#[test]
fn spectral_norm_examples() {
    let tol = Tolerance::default();
    let one = FiniteMatrix::new(vec![b(0)], vec![b(0)], vec![Complex64::new(3.0, 4.0)]).unwrap();
    assert_eq!(spectral_norm(&one, &tol).unwrap(), 5.0);
    assert!((spectral_norm(&square(&[&[1.0, 0.0], &[0.0, 1.0]]), &tol).unwrap() - 1.0).abs() < 1e-15);
    let s = spectral_norm(&square(&[&[0.0, 0.5], &[0.5, 0.5]]), &tol).unwrap();
    assert!((s - golden()).abs() < 1e-14);
    assert!((s - 0.809016994).abs() < 1e-9);
}

#[test]
fn min_eig_examples() {
    let tol = Tolerance::default();
    assert!((min_eig_hermitian(&square(&[&[1.0, 0.0], &[0.0, -0.5]]), &tol).unwrap() + 0.5).abs() < 1e-15);
    let (lo, _) = oracle::eig2_hermitian(2.0, c(1.0), 2.0);
    let m = min_eig_hermitian(&square(&[&[2.0, 1.0], &[1.0, 2.0]]), &tol).unwrap();
    assert!((m - lo).abs() < 1e-14);
    assert_eq!(min_eig_hermitian(&square(&[&[0.0; 3], &[0.0; 3], &[0.0; 3]]), &tol).unwrap(), 0.0);
}

// decomposition

#[test]
fn peirce_block_examples() {
    let u2 = Partition::uniform(2).unwrap();
    let id: OperatorRep = ExplicitOperator::identity(4).into();
    assert_eq!(peirce_block(&id, &u2, BlockId(0), BlockId(0), 2), square(&[&[1.0, 0.0], &[0.0, 1.0]]));
    let m = peirce_block(&explicit(&[(0, 3, 1.0)]), &u2, BlockId(0), BlockId(1), 2);
    assert_eq!(m.data(), &[c(0.0), c(1.0), c(0.0), c(0.0)]);
    let m = peirce_block(&geometric(), &Partition::atomic(), BlockId(1), BlockId(1), 1);
    assert_eq!(m.data(), &[c(0.5)]);
}

#[test]
fn reconstruct_examples() {
    let i2 = |k: usize| FiniteMatrix::from_fn(vec![b(2 * k), b(2 * k + 1)], vec![b(2 * k), b(2 * k + 1)], |r, s| {
        c(if r == s { 1.0 } else { 0.0 })
    })
    .unwrap();
    let r = reconstruct(&[(BlockId(0), BlockId(0), i2(0)), (BlockId(1), BlockId(1), i2(1))]).unwrap();
    assert_eq!(r.as_explicit(), Some(&ExplicitOperator::identity(4)));
    assert_eq!(reconstruct(&[]).unwrap().as_explicit(), Some(&ExplicitOperator::zero()));
}

#[test]
fn hook_examples() {
    let h = hook(&explicit(&[(0, 0, 3.0)]), &Partition::atomic(), BlockId(0), 1).unwrap();
    assert_eq!(h.bound, NormBound::exact(3.0));
    for i in [0, 1, 2, 17, 50] {
        for depth in [1, 2, 9] {
            assert_eq!(hook(&row_iso(), &coarse(), BlockId(i), depth).unwrap().bound, NormBound::exact(0.75));
        }
    }
    let h1 = hook(&geometric(), &Partition::atomic(), BlockId(1), 64).unwrap();
    assert!((h1.bound.lower - golden()).abs() < 1e-14);
}

#[test]
fn hook_sequence_examples() {
    let u2 = Partition::uniform(2).unwrap();
    let a = explicit(&[(0, 3, 1.0), (1, 2, -0.5), (3, 3, 2.0)]);
    for h in &hook_sequence(&a, &u2, 6, 2).unwrap()[2..] {
        assert_eq!(h.bound, NormBound::exact(0.0));
    }
    let hs = hook_sequence(&row_iso(), &coarse(), 8, 16).unwrap();
    assert_eq!(hs.len(), 8);
    assert!(hs.iter().all(|h| h.bound == NormBound::exact(0.75)));
    let hs = hook_sequence(&geometric(), &Partition::atomic(), 8, 64).unwrap();
    assert!(hs[1..].windows(2).all(|w| w[1].bound.lower < w[0].bound.lower));
    // Frobenius norm of strip i is 2^-i sqrt(2i+1).
    for h in &hs {
        let i = h.i.0;
        assert!(h.bound.lower <= 0.5f64.powi(i as i32) * ((2 * i + 1) as f64).sqrt() + 1e-15);
    }
}

#[test]
fn membership_examples() {
    let u2 = Partition::uniform(2).unwrap();
    let a = explicit(&[(0, 7, 1.0), (5, 2, 2.0)]);
    assert!(matches!(membership(&a, &u2, 1e-6, 8, 4).unwrap(), MembershipVerdict::CertifiedIn { .. }));
    match membership(&row_iso(), &coarse(), 1e-6, 32, 16).unwrap() {
        MembershipVerdict::CertifiedOut { eps, witness } => {
            assert_eq!(eps, 0.75);
            assert_eq!(witness.len(), 32);
            assert!(witness.iter().all(|w| w.modulus >= eps));
        }
        v => panic!("{v:?}"),
    }
    match membership(&geometric(), &Partition::atomic(), 1e-6, 32, 64).unwrap() {
        MembershipVerdict::CertifiedIn { horizon, certificate } => {
            assert!(horizon.0 < 32);
            assert!(!certificate.is_empty());
        }
        v => panic!("{v:?}"),
    }
}

#[test]
fn partial_sum_gap_examples() {
    let u2 = Partition::uniform(2).unwrap();
    let a = explicit(&[(0, 3, 1.0), (2, 2, 1.0)]);
    assert_eq!(partial_sum_gap(&a, &u2, BlockId(5), 2).unwrap(), NormBound::exact(0.0));
    assert_eq!(partial_sum_gap(&row_iso(), &coarse(), BlockId(3), 16).unwrap(), NormBound::exact(0.75));
    let g = partial_sum_gap(&geometric(), &Partition::atomic(), BlockId(0), 64).unwrap();
    let h = hook(&geometric(), &Partition::atomic(), BlockId(1), 64).unwrap();
    assert!((g.lower - h.bound.lower).abs() < 1e-12);
}

// compressions

#[test]
fn compression_examples() {
    let u2 = Partition::uniform(2).unwrap();
    let id: OperatorRep = ExplicitOperator::identity(4).into();
    assert_eq!(compression(&id, &[BlockId(0)], &u2, 2).unwrap(), square(&[&[1.0, 0.0], &[0.0, 1.0]]));
    let a = explicit(&[(0, 3, 1.0)]);
    assert_eq!(compression(&a, &[BlockId(0)], &u2, 2).unwrap(), square(&[&[0.0, 0.0], &[0.0, 0.0]]));
    let m = compression(&a, &[BlockId(0), BlockId(1)], &u2, 2).unwrap();
    assert_eq!(m.at(b(0), b(3)), c(1.0));
    assert_eq!(spectral_norm(&m, &Tolerance::default()).unwrap(), 1.0);
}

#[test]
fn norm_examples() {
    let u2 = Partition::uniform(2).unwrap();
    let sched = CompressionSchedule::prefixes(2, 2).unwrap();
    let est = norm_via_compressions(&explicit(&[(0, 0, 2.0), (3, 3, 1.0)]), &u2, &sched).unwrap();
    assert_eq!(est.points, vec![2.0, 2.0]);
    assert_eq!(est.estimate, NormBound::exact(2.0));
    let est = norm_via_compressions(&explicit(&[(0, 3, 1.0)]), &u2, &sched).unwrap();
    assert_eq!(est.points, vec![0.0, 1.0]);
}

#[test]
fn positivity_examples() {
    let p = Partition::atomic();
    let sched = CompressionSchedule::prefixes(2, 1).unwrap();
    let v = positivity_via_compressions(&explicit(&[(0, 0, 1.0), (1, 1, -0.5)]), &p, &sched, DEFAULT_SLACK).unwrap();
    assert!(matches!(v, PositivityVerdict::NegativeWitness { ref subset, min_eig, .. }
        if subset == &[BlockId(1)] && min_eig == -0.5));
    let v = positivity_via_compressions(&explicit(&[(0, 1, 1.0)]), &p, &sched, DEFAULT_SLACK).unwrap();
    assert_eq!(v, PositivityVerdict::NotHermitian { row: 1, col: 0 });
}

// constructions

#[test]
fn cantor_coarsen_examples() {
    let p = coarse();
    let got = |g: usize, n: usize| p.leading_indices(BlockId(g), n).iter().map(|x| x.0).collect::<Vec<_>>();
    assert_eq!(got(0, 5), oracle::cantor_block(0, 5));
    assert_eq!(got(0, 5), vec![0, 2, 5, 9, 14]);
    assert_eq!(got(1, 4), vec![1, 4, 8, 13]);
    for g in 0..50 {
        for k in 0..50 {
            let x = p.index_in_block(BlockId(g), k).unwrap();
            assert_eq!(p.block_of(x), BlockId(g));
            assert_eq!(p.position_in_block(x), k);
        }
    }
}

#[test]
fn matrix_unit_examples() {
    let p = coarse();
    let one = |op: &OperatorRep| op.to_explicit().unwrap().entries().map(|(r, s, _)| (r.0, s.0)).collect::<Vec<_>>();
    assert_eq!(one(&matrix_unit(&p, BlockId(0), 0, 0).unwrap()), vec![(0, 0)]);
    let x = matrix_unit(&p, BlockId(0), 0, 1).unwrap();
    assert_eq!(one(&x), vec![(0, oracle::cantor_block(0, 2)[1])]);
    assert_eq!(one(&x.mul(&x.adjoint()).unwrap()), vec![(0, 0)]);
    assert_eq!(one(&x.adjoint().mul(&x).unwrap()), vec![(2, 2)]);
    assert!(matches!(
        matrix_unit(&Partition::uniform(2).unwrap(), BlockId(0), 0, 1),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn row_isometry_examples() {
    let a = row_iso();
    assert_eq!(a.entry_at(b(0), b(0)), c(0.75));
    let r1 = oracle::cantor_block(0, 2)[1];
    let c1 = oracle::cantor_block(1, 1)[0];
    assert_eq!((r1, c1), (2, 1));
    assert_eq!(a.entry_at(b(r1), b(c1)), c(0.75));
    for depth in 1..6 {
        let idx = coarse().truncated_support((0..depth).map(BlockId), depth);
        let m = FiniteMatrix::from_fn(idx.clone(), idx, |r, s| a.entry_at(r, s)).unwrap();
        assert_eq!(spectral_norm(&m, &Tolerance::default()).unwrap(), 0.75);
    }
}

#[test]
fn minf_examples() {
    let a = geometric();
    assert_eq!(a.entry_at(b(1), b(1)), c(0.5));
    let h1 = hook(&a, &Partition::atomic(), BlockId(1), 8).unwrap();
    assert!((h1.bound.lower - 0.809016994).abs() < 1e-9);
    assert!(matches!(
        membership(&a, &Partition::atomic(), 1e-6, 32, 64).unwrap(),
        MembershipVerdict::CertifiedIn { .. }
    ));
}

#[test]
fn coarse_projection_examples() {
    let q = coarse_projection(&coarse(), BlockId(0)).unwrap();
    for x in oracle::cantor_block(0, 20) {
        assert_eq!(q.entry_at(b(x), b(x)), c(1.0));
    }
    assert_eq!(q.entry_at(b(1), b(1)), c(0.0));
    let hs = hook_sequence(&q, &coarse(), 6, 8).unwrap();
    assert_eq!(hs[0].bound, NormBound::exact(1.0));
    assert!(hs[1..].iter().all(|h| h.bound == NormBound::exact(0.0)));
    assert!(matches!(membership(&q, &coarse(), 1e-6, 32, 8).unwrap(), MembershipVerdict::CertifiedIn { .. }));
    let fine = Partition::atomic();
    for x in oracle::cantor_block(0, 6) {
        assert_eq!(hook(&q, &fine, BlockId(x), 8).unwrap().bound.lower, 1.0);
    }
    assert!(matches!(
        membership(&q, &fine, 1e-6, 32, 8).unwrap(),
        MembershipVerdict::CertifiedOut { eps, .. } if eps == 1.0
    ));
}
